//! Order-preserving data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature the work runs on a rayon pool whose width is
//! read once from `VCG_THREADS` (default: available cores). Results are
//! always returned in input order, so callers stay deterministic.

#[cfg(feature = "parallel")]
use std::sync::OnceLock;

/// How a batch of independent jobs is executed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    Parallel,
}

impl Mode {
    /// `Parallel` when the feature is compiled in, else `Sequential`.
    pub fn default_mode() -> Mode {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

/// Width requested through `VCG_THREADS`, if set to a positive integer.
pub fn requested_width() -> Option<usize> {
    std::env::var("VCG_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&w| w > 0)
}

/// Number of worker threads used by [`Mode::Parallel`].
pub fn width() -> usize {
    #[cfg(feature = "parallel")]
    {
        pool().current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

#[cfg(feature = "parallel")]
fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let w = requested_width().unwrap_or_else(|| {
            std::thread::available_parallelism().map_or(1, |n| n.get())
        });
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .thread_name(|i| format!("vcg-{i}"))
            .build()
            .expect("thread pool")
    })
}

/// Maps `f` over `items` in the default mode.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_with(Mode::default_mode(), items, f)
}

/// Maps `f` over `items` in the given mode; output order is input order.
pub fn map_with<T, R, F>(mode: Mode, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match mode {
        Mode::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            pool().install(|| items.par_iter().map(f).collect())
        }
        #[cfg(not(feature = "parallel"))]
        Mode::Parallel => items.iter().map(f).collect(),
    }
}

/// [`map`] over `0..n`.
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    let idx: Vec<usize> = (0..n).collect();
    map(&idx, |&i| f(i))
}
