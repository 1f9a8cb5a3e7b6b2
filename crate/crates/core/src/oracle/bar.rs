use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::coefficients::Coefficients;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{subquotient, subquotient_mod, FinAb, IntMatrix, Subquotient};
use crate::par;

/// Default limit on the number of `(n+1)`-cells of the normalized bar
/// complex; past it the explicit coboundary matrix is not built.
pub const DEFAULT_BAR_CELLS: usize = 2500;

/// Cells of the normalized bar complex: tuples of non-identity elements,
/// numbered in base `|G| - 1` with the first entry most significant.
struct Cells {
    base: usize,
}

impl Cells {
    fn count(&self, n: usize) -> usize {
        self.base.pow(n as u32)
    }

    fn decode(&self, mut idx: usize, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for slot in out.iter_mut().rev() {
            *slot = idx % self.base + 1;
            idx /= self.base;
        }
        out
    }

    /// `None` for a degenerate tuple.
    fn encode(&self, cell: &[usize]) -> Option<usize> {
        let mut idx = 0;
        for &g in cell {
            if g == 0 {
                return None;
            }
            idx = idx * self.base + (g - 1);
        }
        Some(idx)
    }
}

/// Normalized bar coboundary `C^n → C^{n+1}`:
/// `(δf)[g_1|…|g_{n+1}] = g_1·f[g_2|…] + Σ (−1)^i f[…|g_i g_{i+1}|…] + (−1)^{n+1} f[g_1|…|g_n]`.
fn bar_coboundary(group: &FiniteGroup, coeffs: &Coefficients, n: usize) -> IntMatrix {
    let cells = Cells {
        base: group.order() - 1,
    };
    let (rows, cols) = (cells.count(n + 1), cells.count(n));
    let entries: Vec<Vec<(usize, usize, BigInt)>> = par::map_range(rows, |r| {
        let c = cells.decode(r, n + 1);
        let mut out = Vec::new();
        if let Some(col) = cells.encode(&c[1..]) {
            out.push((r, col, BigInt::from(coeffs.multiplier(c[0]))));
        }
        for i in 1..=n {
            let mut merged: Vec<usize> = c[..i - 1].to_vec();
            merged.push(group.mul(c[i - 1], c[i]));
            merged.extend_from_slice(&c[i + 1..]);
            if let Some(col) = cells.encode(&merged) {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                out.push((r, col, BigInt::from(sign)));
            }
        }
        if let Some(col) = cells.encode(&c[..n]) {
            let sign = if (n + 1) % 2 == 0 { 1 } else { -1 };
            out.push((r, col, BigInt::from(sign)));
        }
        out
    });
    let m = IntMatrix::from_entries(rows, cols, entries.into_iter().flatten());
    match coeffs.modulus() {
        0 => m,
        a => {
            let a = BigInt::from(a);
            IntMatrix::from_entries(
                rows,
                cols,
                m.entries().map(|(i, j, x)| {
                    use num_integer::Integer;
                    (i, j, x.mod_floor(&a))
                }),
            )
        }
    }
}

/// `H^n(G; M)` from the normalized bar complex, with normalized cocycle
/// representatives indexed like the `n`-cells.
#[derive(Clone, Debug)]
pub struct BarCohomology {
    pub degree: usize,
    sq: Subquotient,
}

impl BarCohomology {
    pub fn group(&self) -> &FinAb {
        self.sq.group()
    }

    pub fn representatives(&self) -> &[Vec<BigInt>] {
        self.sq.generators()
    }
}

/// Explicit normalized bar cohomology; refuses when `(|G|-1)^{n+1}` exceeds
/// `max_cells`.
pub fn bar_cohomology(
    group: &FiniteGroup,
    coeffs: &Coefficients,
    n: usize,
    max_cells: usize,
) -> Result<BarCohomology> {
    let base = group.order().saturating_sub(1);
    if base == 0 {
        // trivial group: C^0 = M, C^n = 0 for n > 0
        let (d_out, d_in) = if n == 0 {
            (IntMatrix::zeros(0, 1), IntMatrix::zeros(1, 0))
        } else {
            (IntMatrix::zeros(0, 0), IntMatrix::zeros(0, 0))
        };
        let sq = finish(coeffs, &d_out, &d_in)?;
        return Ok(BarCohomology { degree: n, sq });
    }
    let size = (base as u128).pow(n as u32 + 1);
    if size > max_cells as u128 {
        return Err(Error::Capacity {
            what: format!("bar complex C^{} of a group of order {}", n + 1, group.order()),
            size: size.min(usize::MAX as u128) as usize,
            limit: max_cells,
        });
    }
    let d_out = bar_coboundary(group, coeffs, n);
    let d_in = match n {
        0 => IntMatrix::zeros(1, 0),
        _ => bar_coboundary(group, coeffs, n - 1),
    };
    let sq = finish(coeffs, &d_out, &d_in)?;
    Ok(BarCohomology { degree: n, sq })
}

fn finish(coeffs: &Coefficients, d_out: &IntMatrix, d_in: &IntMatrix) -> Result<Subquotient> {
    match coeffs.modulus() {
        0 => subquotient(d_out, d_in),
        a => {
            let a = BigInt::from(a);
            subquotient_mod(
                d_out,
                d_in,
                &vec![a.clone(); d_out.cols()],
                &vec![a; d_out.rows()],
            )
        }
    }
}

/// A chain of the bar resolution: `(h, [g_1|…|g_n]) ↦ coefficient`, the
/// term `h·[g_1|…|g_n]`.
pub(crate) type BarChain = std::collections::BTreeMap<(usize, Vec<usize>), BigInt>;

pub(crate) fn add_term(chain: &mut BarChain, key: (usize, Vec<usize>), c: BigInt) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match chain.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// The contracting homotopy `h·[g_1|…] ↦ [h|g_1|…]` (zero when `h = 1`).
pub(crate) fn contract(chain: &BarChain) -> BarChain {
    let mut out = BarChain::new();
    for ((h, cell), c) in chain {
        if *h == 0 {
            continue;
        }
        let mut longer = Vec::with_capacity(cell.len() + 1);
        longer.push(*h);
        longer.extend_from_slice(cell);
        add_term(&mut out, (0, longer), c.clone());
    }
    out
}

/// The unit chain `1·[ ]` in degree 0.
pub(crate) fn unit_chain() -> BarChain {
    let mut c = BarChain::new();
    c.insert((0, Vec::new()), BigInt::one());
    c
}
