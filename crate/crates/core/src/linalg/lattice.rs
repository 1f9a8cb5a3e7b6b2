//! Lattices, kernels, cokernels and subquotients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::finab::FinAb;
use super::matrix::IntMatrix;
use super::snf::{invariant_factors, smith_normal_form};
use crate::error::{Error, Result};

/// A sublattice of `Z^dim` held as an echelon basis: each basis vector has a
/// positive pivot, is zero left of it, and pivots are strictly increasing.
/// Entries above a pivot are kept reduced modulo that pivot.
#[derive(Clone, Debug)]
pub struct LatticeBasis {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn first_nonzero(v: &[BigInt]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

fn sub_scaled(dst: &mut [BigInt], q: &BigInt, src: &[BigInt], from: usize) {
    for k in from..dst.len() {
        if !src[k].is_zero() {
            dst[k] -= q * &src[k];
        }
    }
}

fn nearest_quotient(a: &BigInt, p: &BigInt) -> BigInt {
    let (mut q, r) = a.div_mod_floor(p);
    if &(&r * 2) > p {
        q += 1;
    }
    q
}

impl LatticeBasis {
    pub fn new(dim: usize) -> Self {
        LatticeBasis {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_generators<I>(dim: usize, gens: I) -> Self
    where
        I: IntoIterator<Item = Vec<BigInt>>,
    {
        let mut l = Self::new(dim);
        for g in gens {
            l.insert(g);
        }
        l
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the columns of a `dim x rank` matrix.
    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.dim, &self.rows)
    }

    /// Adds `v` to the lattice; returns whether the lattice grew.
    pub fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length");
        let mut grew = false;
        while let Some(p) = first_nonzero(&v) {
            match self.pivots.binary_search(&p) {
                Err(pos) => {
                    if v[p].is_negative() {
                        for x in &mut v {
                            *x = -std::mem::take(x);
                        }
                    }
                    self.rows.insert(pos, v);
                    self.pivots.insert(pos, p);
                    self.size_reduce_above(pos);
                    return true;
                }
                Ok(k) => {
                    let bp = self.rows[k][p].clone();
                    let (q, r) = v[p].div_mod_floor(&bp);
                    if r.is_zero() {
                        let row = &self.rows[k];
                        sub_scaled(&mut v, &q, row, p);
                        continue;
                    }
                    // gcd step: replace (b, v) by (s*b + t*v, (b_p/g)*v - (v_p/g)*b)
                    let vp = v[p].clone();
                    let egcd = bp.extended_gcd(&vp);
                    let g = egcd.gcd;
                    let (s, t) = (egcd.x, egcd.y);
                    let bq = &bp / &g;
                    let vq = &vp / &g;
                    let b = std::mem::take(&mut self.rows[k]);
                    let mut nb: Vec<BigInt> = Vec::with_capacity(self.dim);
                    let mut nv: Vec<BigInt> = Vec::with_capacity(self.dim);
                    for idx in 0..self.dim {
                        nb.push(&s * &b[idx] + &t * &v[idx]);
                        nv.push(&bq * &v[idx] - &vq * &b[idx]);
                    }
                    if nb[p].is_negative() {
                        for x in &mut nb {
                            *x = -std::mem::take(x);
                        }
                    }
                    self.rows[k] = nb;
                    self.size_reduce_below(k);
                    self.size_reduce_above(k);
                    v = nv;
                    grew = true;
                }
            }
        }
        grew
    }

    /// Reduces row `k` against the rows with larger pivots.
    fn size_reduce_below(&mut self, k: usize) {
        for j in k + 1..self.rows.len() {
            let p = self.pivots[j];
            if self.rows[k][p].is_zero() {
                continue;
            }
            let q = nearest_quotient(&self.rows[k][p], &self.rows[j][p]);
            if !q.is_zero() {
                let (lo, hi) = self.rows.split_at_mut(j);
                sub_scaled(&mut lo[k], &q, &hi[0], p);
            }
        }
    }

    /// Reduces the rows with smaller pivots at the pivot column of row `k`.
    fn size_reduce_above(&mut self, k: usize) {
        let p = self.pivots[k];
        for i in 0..k {
            if self.rows[i][p].is_zero() {
                continue;
            }
            let q = nearest_quotient(&self.rows[i][p], &self.rows[k][p]);
            if !q.is_zero() {
                let (lo, hi) = self.rows.split_at_mut(k);
                sub_scaled(&mut lo[i], &q, &hi[0], p);
            }
        }
    }

    /// Coordinates of `v` in the current basis, or `None` if `v` is not in
    /// the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.dim, "vector length");
        let mut rest = v.to_vec();
        let mut coords = vec![BigInt::zero(); self.rows.len()];
        for (k, &p) in self.pivots.iter().enumerate() {
            if let Some(f) = first_nonzero(&rest) {
                if f < p {
                    return None;
                }
            } else {
                break;
            }
            if rest[p].is_zero() {
                continue;
            }
            let (q, r) = rest[p].div_mod_floor(&self.rows[k][p]);
            if !r.is_zero() {
                return None;
            }
            sub_scaled(&mut rest, &q, &self.rows[k], p);
            coords[k] = q;
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Linear combination of basis vectors.
    pub fn combine(&self, coords: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.dim];
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }
}

/// A basis of the integer kernel `{x : A x = 0}` as matrix columns. The
/// basis spans the full (saturated) kernel.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let (m, n) = (a.rows(), a.cols());
    let mut l = LatticeBasis::new(m + n);
    for j in 0..n {
        let mut w = a.column(j);
        w.extend((0..n).map(|k| BigInt::from(u8::from(k == j))));
        l.insert(w);
    }
    let kernel: Vec<Vec<BigInt>> = l
        .rows
        .iter()
        .zip(&l.pivots)
        .filter(|(_, &p)| p >= m)
        .map(|(row, _)| row[m..].to_vec())
        .collect();
    IntMatrix::from_columns(n, &kernel)
}

/// `Z^rows / column-span(A)` in canonical form.
pub fn cokernel_invariants(a: &IntMatrix) -> FinAb {
    let factors = invariant_factors(a);
    FinAb::from_cyclic_orders(a.rows() - factors.len(), factors)
}

/// Exact solver for `A x = b` over the integers, reusing one Smith form.
#[derive(Clone, Debug)]
pub struct LinearSolver {
    u: IntMatrix,
    v: IntMatrix,
    diag: Vec<BigInt>,
}

impl LinearSolver {
    pub fn new(a: &IntMatrix) -> Self {
        let s = smith_normal_form(a);
        let diag = s.invariant_factors();
        LinearSolver {
            u: s.u,
            v: s.v,
            diag,
        }
    }

    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let ub = self.u.mul_vec(b);
        let r = self.diag.len();
        if ub[r..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut y = vec![BigInt::zero(); self.v.rows()];
        for t in 0..r {
            let (q, rem) = ub[t].div_mod_floor(&self.diag[t]);
            if !rem.is_zero() {
                return None;
            }
            y[t] = q;
        }
        Some(self.v.mul_vec(&y))
    }
}

/// A quotient `Z / B` of a lattice of cycles by a sublattice of boundaries,
/// with explicit generators and a classification map.
#[derive(Clone, Debug)]
pub struct Subquotient {
    group: FinAb,
    generators: Vec<Vec<BigInt>>,
    cycles: LatticeBasis,
    u: IntMatrix,
    // (coordinate index in U-basis, order or 0 for free) for each generator
    kept: Vec<(usize, BigInt)>,
}

impl Subquotient {
    /// Builds `span(cycle_gens) / span(boundary_gens)`; every boundary
    /// generator must lie in the cycle lattice.
    pub fn from_generators(
        dim: usize,
        cycle_gens: impl IntoIterator<Item = Vec<BigInt>>,
        boundary_gens: &[Vec<BigInt>],
    ) -> Result<Self> {
        let cycles = LatticeBasis::from_generators(dim, cycle_gens);
        let r = cycles.rank();
        let mut coords = Vec::with_capacity(boundary_gens.len());
        for b in boundary_gens {
            let c = cycles.coordinates(b).ok_or_else(|| {
                Error::Dimension("boundary generator is not a cycle".to_string())
            })?;
            coords.push(c);
        }
        let rel = IntMatrix::from_columns(r, &coords);
        let s = smith_normal_form(&rel);
        let mut diag: Vec<BigInt> = s.d.diagonal();
        diag.resize(r, BigInt::zero());
        let mut torsion: Vec<(usize, BigInt)> = Vec::new();
        let mut free: Vec<(usize, BigInt)> = Vec::new();
        for (t, d) in diag.iter().enumerate() {
            if d.is_zero() {
                free.push((t, BigInt::zero()));
            } else if !d.abs().is_one() {
                torsion.push((t, d.clone()));
            }
        }
        let kept: Vec<(usize, BigInt)> = torsion.into_iter().chain(free).collect();
        let generators = kept
            .iter()
            .map(|(t, _)| cycles.combine(&s.u_inv.column(*t)))
            .collect();
        let group = FinAb::from_cyclic_orders(0, kept.iter().map(|(_, d)| d.clone()));
        Ok(Subquotient {
            group,
            generators,
            cycles,
            u: s.u,
            kept,
        })
    }

    pub fn group(&self) -> &FinAb {
        &self.group
    }

    /// One representative per generator: torsion generators in invariant
    /// factor order, then free generators.
    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    /// Orders of the generators (0 for free ones).
    pub fn orders(&self) -> Vec<BigInt> {
        self.kept.iter().map(|(_, d)| d.clone()).collect()
    }

    pub fn cycles(&self) -> &LatticeBasis {
        &self.cycles
    }

    /// Coordinates of the class of the cycle `z` with respect to
    /// [`Subquotient::generators`]; torsion coordinates are reduced.
    pub fn classify(&self, z: &[BigInt]) -> Result<Vec<BigInt>> {
        let c = self
            .cycles
            .coordinates(z)
            .ok_or_else(|| Error::Dimension("vector is not a cycle".to_string()))?;
        let y = self.u.mul_vec(&c);
        Ok(self
            .kept
            .iter()
            .map(|(t, d)| {
                if d.is_zero() {
                    y[*t].clone()
                } else {
                    y[*t].mod_floor(d)
                }
            })
            .collect())
    }
}

/// `ker(d_out) / im(d_in)` for integer cochain maps.
pub fn subquotient(d_out: &IntMatrix, d_in: &IntMatrix) -> Result<Subquotient> {
    if d_out.cols() != d_in.rows() {
        return Err(Error::Dimension(format!(
            "d_out is {}x{}, d_in is {}x{}",
            d_out.rows(),
            d_out.cols(),
            d_in.rows(),
            d_in.cols()
        )));
    }
    let comp = d_out.mul(d_in);
    if let Some((row, col, value)) = comp.entries().next() {
        return Err(Error::NotAComplex {
            row,
            col,
            value: value.to_string(),
        });
    }
    let ker = kernel_basis(d_out);
    Subquotient::from_generators(d_in.rows(), ker.columns(), &d_in.columns())
}

/// Subquotient for a complex of groups `Z^k / diag(moduli) Z^k`. A modulus of
/// 0 means the coordinate is free. The maps must be well defined modulo the
/// moduli and compose to zero modulo the target moduli.
pub fn subquotient_mod(
    d_out: &IntMatrix,
    d_in: &IntMatrix,
    mid_moduli: &[BigInt],
    out_moduli: &[BigInt],
) -> Result<Subquotient> {
    let k = d_in.rows();
    if d_out.cols() != k || mid_moduli.len() != k || out_moduli.len() != d_out.rows() {
        return Err(Error::Dimension("moduli or map shapes disagree".to_string()));
    }
    let reduced_nonzero = |m: &IntMatrix| -> Option<(usize, usize, String)> {
        m.entries()
            .find(|(i, _, x)| {
                let md = &out_moduli[*i];
                md.is_zero() || !(*x % md).is_zero()
            })
            .map(|(i, j, x)| (i, j, x.to_string()))
    };
    if let Some((row, col, value)) = reduced_nonzero(&d_out.mul(d_in)) {
        return Err(Error::NotAComplex { row, col, value });
    }
    let mid_diag = IntMatrix::from_entries(
        k,
        k,
        mid_moduli
            .iter()
            .enumerate()
            .filter(|(_, m)| !m.is_zero())
            .map(|(i, m)| (i, i, m.clone())),
    );
    if let Some((row, col, value)) = reduced_nonzero(&d_out.mul(&mid_diag)) {
        return Err(Error::NotAComplex { row, col, value });
    }
    // cycles: x with d_out x in diag(out_moduli) Z
    let out_cols: Vec<usize> = (0..out_moduli.len())
        .filter(|&i| !out_moduli[i].is_zero())
        .collect();
    let mut aug_cols = d_out.columns();
    for &i in &out_cols {
        let mut c = vec![BigInt::zero(); d_out.rows()];
        c[i] = out_moduli[i].clone();
        aug_cols.push(c);
    }
    let aug = IntMatrix::from_columns(d_out.rows(), &aug_cols);
    let ker = kernel_basis(&aug);
    let cycle_gens: Vec<Vec<BigInt>> = ker
        .columns()
        .into_iter()
        .map(|mut c| {
            c.truncate(k);
            c
        })
        .collect();
    let mut boundary = d_in.columns();
    boundary.extend(mid_diag.columns().into_iter().filter(|c| c.iter().any(|x| !x.is_zero())));
    Subquotient::from_generators(k, cycle_gens, &boundary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cokernels() {
        assert_eq!(cokernel_invariants(&IntMatrix::from_rows(&[[6]])), FinAb::cyclic(6));
        assert_eq!(cokernel_invariants(&IntMatrix::zeros(2, 2)), FinAb::free(2));
        // enumerated by hand over representatives mod 8: Z^2/im = Z_2 ⊕ Z_4
        assert_eq!(
            cokernel_invariants(&IntMatrix::from_rows(&[[2, 4], [0, 4]])),
            FinAb::from_cyclic_orders(0, [2u64, 4])
        );
    }

    #[test]
    fn kernels() {
        let k = kernel_basis(&IntMatrix::from_rows(&[[1, 1]]));
        assert_eq!(k.cols(), 1);
        let v = k.column(0);
        assert!(v == big(&[1, -1]) || v == big(&[-1, 1]));
        assert_eq!(kernel_basis(&IntMatrix::identity(3)).cols(), 0);
        let k = kernel_basis(&IntMatrix::from_rows(&[[2, -2], [1, -1]]));
        assert_eq!(k.cols(), 1);
        let v = k.column(0);
        assert!(v == big(&[1, 1]) || v == big(&[-1, -1]));
    }

    #[test]
    fn kernel_is_saturated() {
        // x + 2y + 3z = 0 has a rank-2 kernel with index-1 basis
        let a = IntMatrix::from_rows(&[[2, 4, 6]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).is_zero());
        let l = LatticeBasis::from_generators(3, k.columns());
        assert!(l.contains(&big(&[1, 1, -1])));
        assert!(l.contains(&big(&[-2, 1, 0])));
    }

    #[test]
    fn lattice_membership() {
        let l = LatticeBasis::from_generators(2, vec![big(&[4, 6]), big(&[6, 9])]);
        // span is {(2k, 3k)}
        assert_eq!(l.rank(), 1);
        assert!(l.contains(&big(&[2, 3])));
        assert!(!l.contains(&big(&[1, 1])));
        let c = l.coordinates(&big(&[-4, -6])).unwrap();
        assert_eq!(l.combine(&c), big(&[-4, -6]));
    }

    #[test]
    fn cyclic_periodic_complex() {
        let sq = subquotient(&IntMatrix::zeros(1, 1), &IntMatrix::from_rows(&[[6]])).unwrap();
        assert_eq!(sq.group(), &FinAb::cyclic(6));
        assert_eq!(sq.generators().len(), 1);
        let g = &sq.generators()[0];
        assert!(g == &big(&[1]) || g == &big(&[-1]));
        let triv = subquotient(&IntMatrix::from_rows(&[[1]]), &IntMatrix::zeros(1, 1)).unwrap();
        assert!(triv.group().is_trivial());
    }

    #[test]
    fn non_complex_is_rejected() {
        let e = subquotient(
            &IntMatrix::from_rows(&[[1, 0], [0, 1]]),
            &IntMatrix::from_rows(&[[0], [3]]),
        )
        .unwrap_err();
        assert_eq!(
            e,
            Error::NotAComplex {
                row: 1,
                col: 0,
                value: "3".to_string()
            }
        );
    }

    #[test]
    fn classify_roundtrip() {
        // Z^2 / <(2,0),(0,4)>
        let sq = subquotient(&IntMatrix::zeros(0, 2), &IntMatrix::from_rows(&[[2, 0], [0, 4]]))
            .unwrap();
        assert_eq!(sq.group(), &FinAb::from_cyclic_orders(0, [2u64, 4]));
        for (t, g) in sq.generators().iter().enumerate() {
            let c = sq.classify(g).unwrap();
            for (s, x) in c.iter().enumerate() {
                assert_eq!(x, &BigInt::from(u8::from(s == t)));
            }
        }
    }

    #[test]
    fn modular_complex() {
        // Z_6 --(x2)--> Z_6: kernel {0,3} = Z_2
        let sq = subquotient_mod(
            &IntMatrix::from_rows(&[[2]]),
            &IntMatrix::zeros(1, 0),
            &big(&[6]),
            &big(&[6]),
        )
        .unwrap();
        assert_eq!(sq.group(), &FinAb::cyclic(2));
        // cokernel of x2 on Z_6 is Z_2
        let sq = subquotient_mod(
            &IntMatrix::zeros(0, 1),
            &IntMatrix::from_rows(&[[2]]),
            &big(&[6]),
            &[],
        )
        .unwrap();
        assert_eq!(sq.group(), &FinAb::cyclic(2));
    }

    #[test]
    fn solver() {
        let a = IntMatrix::from_rows(&[[2, 0], [0, 3]]);
        let s = LinearSolver::new(&a);
        assert_eq!(s.solve(&big(&[4, 9])), Some(big(&[2, 3])));
        assert_eq!(s.solve(&big(&[1, 0])), None);
    }
}
