use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{IntMatrix, LatticeBasis, LinearSolver};
use crate::par;

/// Size limits for resolution-based computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order handled.
    pub max_order: usize,
    /// Largest resolution degree built.
    pub max_degree: usize,
    /// Largest `Z`-rank `|G| · rank(F_n)` of a single term.
    pub max_rank: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 64,
            max_degree: 10,
            max_rank: 1024,
        }
    }
}

/// A free `ZG`-resolution `… → F_1 → F_0 → Z` with `F_n = ZG^{k_n}`.
///
/// An element of `F_n` is a vector indexed by `(j, h) ↦ j·|G| + h`, the
/// coefficient of `h·e_j`. Generators of each kernel are picked greedily
/// and then pruned, which keeps the ranks close to minimal for the groups
/// in scope.
#[derive(Debug)]
pub struct FreeResolution {
    group: FiniteGroup,
    ranks: Vec<usize>,
    /// `boundaries[d][j] = ∂ e_j ∈ F_{d-1}`; empty for `d = 0`.
    boundaries: Vec<Vec<Vec<BigInt>>>,
    /// `Z`-matrix of `∂_d`; `matrices[0]` is the augmentation `F_0 → Z`.
    matrices: Vec<IntMatrix>,
    solvers: Vec<OnceLock<LinearSolver>>,
}

impl FreeResolution {
    /// Builds the resolution through degree `top`.
    pub fn new(group: FiniteGroup, top: usize, limits: Limits) -> Result<Self> {
        let n = group.order();
        if n > limits.max_order {
            return Err(Error::Capacity {
                what: format!("resolution of a group of order {n}"),
                size: n,
                limit: limits.max_order,
            });
        }
        if top > limits.max_degree {
            return Err(Error::Capacity {
                what: "resolution degree".to_string(),
                size: top,
                limit: limits.max_degree,
            });
        }
        let augmentation = IntMatrix::from_entries(1, n, (0..n).map(|h| (0, h, BigInt::one())));
        let mut res = FreeResolution {
            group,
            ranks: vec![1],
            boundaries: vec![Vec::new()],
            matrices: vec![augmentation],
            solvers: vec![OnceLock::new()],
        };
        for d in 1..=top {
            res.push_degree(d, limits)?;
        }
        Ok(res)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Highest degree built.
    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    /// `ZG`-rank of `F_d`.
    pub fn rank(&self, d: usize) -> usize {
        self.ranks[d]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `Z`-rank of `F_d`.
    pub fn dim(&self, d: usize) -> usize {
        self.ranks[d] * self.group.order()
    }

    /// `∂ e_j` for a generator of `F_d`, `d ≥ 1`.
    pub fn boundary(&self, d: usize, j: usize) -> &[BigInt] {
        &self.boundaries[d][j]
    }

    /// `Z`-matrix of `∂_d` (the augmentation for `d = 0`).
    pub fn matrix(&self, d: usize) -> &IntMatrix {
        &self.matrices[d]
    }

    /// `g · v` for `v ∈ F_d`.
    pub fn translate(&self, g: usize, v: &[BigInt]) -> Vec<BigInt> {
        translate(&self.group, g, v)
    }

    /// The unit vector of `h · e_j` in `F_d`.
    pub fn basis_vector(&self, d: usize, j: usize, h: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.dim(d)];
        v[j * self.group.order() + h] = BigInt::one();
        v
    }

    /// Some `x ∈ F_d` with `∂_d x = target`; fails if `target` is not a
    /// boundary.
    pub fn lift(&self, d: usize, target: &[BigInt]) -> Result<Vec<BigInt>> {
        let solver = self.solvers[d].get_or_init(|| LinearSolver::new(&self.matrices[d]));
        solver.solve(target).ok_or_else(|| {
            Error::Dimension(format!("vector is not a boundary in degree {}", d - 1))
        })
    }

    fn push_degree(&mut self, d: usize, limits: Limits) -> Result<()> {
        let n = self.group.order();
        let prev = &self.matrices[d - 1];
        let ker = short_kernel_basis(prev);
        let gens = choose_generators(&self.group, prev.cols(), &ker);
        let k = gens.len();
        if k * n > limits.max_rank {
            return Err(Error::Capacity {
                what: format!("term F_{d} of the resolution"),
                size: k * n,
                limit: limits.max_rank,
            });
        }
        let group = &self.group;
        let columns: Vec<Vec<BigInt>> = par::map_range(k * n, |c| {
            let (j, h) = (c / n, c % n);
            translate(group, h, &gens[j])
        });
        let m = IntMatrix::from_columns(prev.cols(), &columns);
        let comp = prev.mul(&m);
        if let Some((row, col, value)) = comp.entries().next() {
            return Err(Error::NotAComplex {
                row,
                col,
                value: value.to_string(),
            });
        }
        self.ranks.push(k);
        self.boundaries.push(gens);
        self.matrices.push(m);
        self.solvers.push(OnceLock::new());
        Ok(())
    }
}

/// `g · v` where `v` lives in a free module `ZG^k` indexed `(j, h)`.
pub(crate) fn translate(group: &FiniteGroup, g: usize, v: &[BigInt]) -> Vec<BigInt> {
    let n = group.order();
    let mut out = vec![BigInt::zero(); v.len()];
    for (idx, x) in v.iter().enumerate() {
        if !x.is_zero() {
            let (j, h) = (idx / n, idx % n);
            out[j * n + group.mul(g, h)] = x.clone();
        }
    }
    out
}

/// A kernel basis with small entries: echelonize the rows `(A e_i, e_i)`,
/// keep the rows whose `A`-part vanishes, then size-reduce them pairwise.
fn short_kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut lattice = LatticeBasis::new(rows + cols);
    for i in 0..cols {
        let mut v = a.column(i);
        v.resize(rows + cols, BigInt::zero());
        v[rows + i] = BigInt::one();
        lattice.insert(v);
    }
    let mut ker: Vec<Vec<BigInt>> = lattice
        .basis()
        .iter()
        .zip(lattice.pivots())
        .filter(|(_, &p)| p >= rows)
        .map(|(v, _)| v[rows..].to_vec())
        .collect();
    pairwise_reduce(&mut ker);
    ker
}

fn dot(u: &[BigInt], v: &[BigInt]) -> BigInt {
    u.iter()
        .zip(v)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// Replaces `v` by `v - round(<u,v>/<u,u>) u` while some pair shortens;
/// a cheap stand-in for lattice reduction that preserves the span.
fn pairwise_reduce(basis: &mut [Vec<BigInt>]) {
    use num_integer::Integer;
    let n = basis.len();
    let mut norms: Vec<BigInt> = basis.iter().map(|v| dot(v, v)).collect();
    for _round in 0..32 {
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                if i == j || norms[i].is_zero() {
                    continue;
                }
                let d = dot(&basis[i], &basis[j]);
                // nearest integer to d / |u|^2
                let num: BigInt = &d * 2 + &norms[i];
                let q = num.div_floor(&(&norms[i] * 2));
                if q.is_zero() {
                    continue;
                }
                let (u, v) = if i < j {
                    let (lo, hi) = basis.split_at_mut(j);
                    (&lo[i], &mut hi[0])
                } else {
                    let (lo, hi) = basis.split_at_mut(i);
                    (&hi[0], &mut lo[j])
                };
                for (x, y) in v.iter_mut().zip(u) {
                    if !y.is_zero() {
                        *x -= &q * y;
                    }
                }
                norms[j] = dot(&basis[j], &basis[j]);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
}

fn weight(v: &[BigInt]) -> (usize, BigInt) {
    let nnz = v.iter().filter(|x| !x.is_zero()).count();
    let l1 = v.iter().map(|x| x.abs()).sum();
    (nnz, l1)
}

fn orbit_span(group: &FiniteGroup, dim: usize, gens: &[&Vec<BigInt>]) -> LatticeBasis {
    let mut span = LatticeBasis::new(dim);
    for v in gens {
        for h in 0..group.order() {
            span.insert(translate(group, h, v));
        }
    }
    span
}

/// A small set of `ZG`-generators for the `Z`-lattice spanned by `ker`.
fn choose_generators(group: &FiniteGroup, dim: usize, ker: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let target = ker.len();
    if target == 0 {
        return Vec::new();
    }
    // candidates: kernel basis plus its echelon form, lightest first
    let echelon = LatticeBasis::from_generators(dim, ker.iter().cloned());
    let mut cands: Vec<Vec<BigInt>> = ker.iter().cloned().collect();
    cands.extend(echelon.basis().iter().cloned());
    cands.sort_by_cached_key(|v| weight(v));
    cands.dedup();

    let covers = |span: &LatticeBasis| span.rank() == target && ker.iter().all(|v| span.contains(v));
    let mut chosen: Vec<Vec<BigInt>> = Vec::new();
    let mut span = LatticeBasis::new(dim);
    for c in cands {
        if span.contains(&c) {
            continue;
        }
        for h in 0..group.order() {
            span.insert(translate(group, h, &c));
        }
        chosen.push(c);
        if covers(&span) {
            break;
        }
    }
    // drop generators the others already produce
    let mut i = chosen.len();
    while i > 0 {
        i -= 1;
        if chosen.len() == 1 {
            break;
        }
        let rest: Vec<&Vec<BigInt>> = chosen
            .iter()
            .enumerate()
            .filter(|&(t, _)| t != i)
            .map(|(_, v)| v)
            .collect();
        if covers(&orbit_span(group, dim, &rest)) {
            chosen.remove(i);
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{validate, GroupSpec};

    fn group(spec: GroupSpec) -> FiniteGroup {
        validate(spec, None).unwrap().finite_group(512).unwrap()
    }

    #[test]
    fn cyclic_resolution_is_periodic_of_rank_one() {
        let r = FreeResolution::new(group(GroupSpec::Cyclic { m: 5 }), 4, Limits::default()).unwrap();
        assert_eq!(r.ranks(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn quaternion_ranks_stay_small() {
        let r = FreeResolution::new(group(GroupSpec::Quaternion { i: 3 }), 4, Limits::default())
            .unwrap();
        assert!(r.ranks().iter().all(|&k| k <= 3), "{:?}", r.ranks());
    }

    #[test]
    fn capacity_is_reported() {
        let g = group(GroupSpec::Cyclic { m: 100 });
        let e = FreeResolution::new(g, 2, Limits::default()).unwrap_err();
        assert!(matches!(e, Error::Capacity { .. }));
    }
}
