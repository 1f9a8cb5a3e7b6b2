//! Smith normal form over the integers.
//!
//! The reduction picks the smallest-magnitude nonzero pivot in the active
//! submatrix (ties go to the entry whose row and column hold the fewest
//! nonzeros) and clears its row and column with rounded quotients. Both
//! transforms and the inverse of the left transform are tracked on demand.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal, nonnegative,
/// with `d_t | d_{t+1}`.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Inverse of `u`; columns of `u_inv` are the images of the new row basis.
    pub u_inv: IntMatrix,
}

impl SnfResult {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d
            .diagonal()
            .into_iter()
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

struct Reducer {
    a: Vec<Vec<BigInt>>,
    m: usize,
    n: usize,
    track: bool,
    u: Vec<Vec<BigInt>>,
    // transposed storage: row k of `u_inv_t` is column k of U^{-1}
    u_inv_t: Vec<Vec<BigInt>>,
    // transposed storage: row k of `v_t` is column k of V
    v_t: Vec<Vec<BigInt>>,
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            let mut r = vec![BigInt::zero(); n];
            r[i] = BigInt::one();
            r
        })
        .collect()
}

fn axpy(dst: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    // dst -= q * src
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= q * s;
        }
    }
}

fn rounded_quotient(a: &BigInt, p: &BigInt) -> BigInt {
    // p > 0; nearest-integer quotient keeps remainders in (-p/2, p/2]
    let (mut q, r) = a.div_mod_floor(p);
    if &(&r * 2) > p {
        q += 1;
    }
    q
}

impl Reducer {
    fn new(mat: &IntMatrix, track: bool) -> Self {
        let m = mat.rows();
        let n = mat.cols();
        let a = (0..m).map(|i| mat.row(i).to_vec()).collect();
        let (u, u_inv_t, v_t) = if track {
            (identity_rows(m), identity_rows(m), identity_rows(n))
        } else {
            (Vec::new(), Vec::new(), Vec::new())
        };
        Reducer {
            a,
            m,
            n,
            track,
            u,
            u_inv_t,
            v_t,
        }
    }

    fn swap_rows(&mut self, i: usize, k: usize) {
        if i == k {
            return;
        }
        self.a.swap(i, k);
        if self.track {
            self.u.swap(i, k);
            self.u_inv_t.swap(i, k);
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        if j == k {
            return;
        }
        for row in &mut self.a {
            row.swap(j, k);
        }
        if self.track {
            self.v_t.swap(j, k);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -std::mem::take(x);
        }
        if self.track {
            for x in &mut self.u[i] {
                *x = -std::mem::take(x);
            }
            for x in &mut self.u_inv_t[i] {
                *x = -std::mem::take(x);
            }
        }
    }

    /// row_i -= q * row_t
    fn row_sub(&mut self, i: usize, t: usize, q: &BigInt) {
        let (src, dst) = pair_mut(&mut self.a, t, i);
        axpy(dst, q, src);
        if self.track {
            let (src, dst) = pair_mut(&mut self.u, t, i);
            axpy(dst, q, src);
            // inverse: col_t of U^{-1} += q * col_i
            let neg = -q;
            let (src, dst) = pair_mut(&mut self.u_inv_t, i, t);
            axpy(dst, &neg, src);
        }
    }

    /// col_j -= q * col_t
    fn col_sub(&mut self, j: usize, t: usize, q: &BigInt) {
        for row in &mut self.a {
            if !row[t].is_zero() {
                let delta = q * &row[t];
                row[j] -= delta;
            }
        }
        if self.track {
            let (src, dst) = pair_mut(&mut self.v_t, t, j);
            axpy(dst, q, src);
        }
    }

    fn pick_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut row_nnz = vec![0usize; self.m];
        let mut col_nnz = vec![0usize; self.n];
        for i in t..self.m {
            for j in t..self.n {
                if !self.a[i][j].is_zero() {
                    row_nnz[i] += 1;
                    col_nnz[j] += 1;
                }
            }
        }
        let mut best: Option<(BigInt, usize, usize, usize)> = None;
        for i in t..self.m {
            if row_nnz[i] == 0 {
                continue;
            }
            for j in t..self.n {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                let mag = x.abs();
                let fill = row_nnz[i] + col_nnz[j];
                let better = match &best {
                    None => true,
                    Some((bm, bf, _, _)) => mag < *bm || (mag == *bm && fill < *bf),
                };
                if better {
                    best = Some((mag, fill, i, j));
                }
            }
        }
        best.map(|(_, _, i, j)| (i, j))
    }

    fn reduce(&mut self) {
        let steps = self.m.min(self.n);
        for t in 0..steps {
            let Some((pi, pj)) = self.pick_pivot(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            loop {
                let p = self.a[t][t].clone();
                let mut dirty = false;
                for i in t + 1..self.m {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let q = rounded_quotient(&self.a[i][t], &p);
                    if !q.is_zero() {
                        self.row_sub(i, t, &q);
                    }
                    dirty |= !self.a[i][t].is_zero();
                }
                for j in t + 1..self.n {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let q = rounded_quotient(&self.a[t][j], &p);
                    if !q.is_zero() {
                        self.col_sub(j, t, &q);
                    }
                    dirty |= !self.a[t][j].is_zero();
                }
                if dirty {
                    self.promote_smaller(t);
                    continue;
                }
                // row and column clear; enforce divisibility of the rest
                let offender = (t + 1..self.m).find(|&i| {
                    self.a[i][t + 1..]
                        .iter()
                        .any(|x| !x.is_zero() && !(x % &p).is_zero())
                });
                match offender {
                    Some(i) => {
                        // row_t += row_i
                        self.row_sub(t, i, &BigInt::from(-1));
                    }
                    None => break,
                }
            }
        }
    }

    /// After a partial reduction leaves remainders, moves the smallest
    /// remainder in the pivot row/column into the pivot position.
    fn promote_smaller(&mut self, t: usize) {
        let mut best: Option<(BigInt, bool, usize)> = None;
        for i in t + 1..self.m {
            let x = &self.a[i][t];
            if !x.is_zero() && best.as_ref().is_none_or(|(b, _, _)| x.abs() < *b) {
                best = Some((x.abs(), true, i));
            }
        }
        for j in t + 1..self.n {
            let x = &self.a[t][j];
            if !x.is_zero() && best.as_ref().is_none_or(|(b, _, _)| x.abs() < *b) {
                best = Some((x.abs(), false, j));
            }
        }
        if let Some((_, is_row, k)) = best {
            if is_row {
                self.swap_rows(t, k);
            } else {
                self.swap_cols(t, k);
            }
        }
        if self.a[t][t].is_negative() {
            self.negate_row(t);
        }
    }
}

fn pair_mut<T>(v: &mut [T], src: usize, dst: usize) -> (&T, &mut T) {
    assert_ne!(src, dst);
    if src < dst {
        let (lo, hi) = v.split_at_mut(dst);
        (&lo[src], &mut hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(src);
        (&hi[0], &mut lo[dst])
    }
}

fn rows_to_matrix(rows: Vec<Vec<BigInt>>, r: usize, c: usize) -> IntMatrix {
    IntMatrix::from_big_rows(r, c, rows.into_iter().flatten().collect())
}

/// Smith normal form with unimodular transforms. Total: zero and empty
/// matrices are accepted.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let mut r = Reducer::new(a, true);
    r.reduce();
    let (m, n) = (r.m, r.n);
    let d = rows_to_matrix(r.a, m, n);
    let u = rows_to_matrix(r.u, m, m);
    let u_inv = rows_to_matrix(r.u_inv_t, m, m).transpose();
    let v = rows_to_matrix(r.v_t, n, n).transpose();
    SnfResult { u, d, v, u_inv }
}

/// Nonzero invariant factors only; skips transform bookkeeping.
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    let mut r = Reducer::new(a, false);
    r.reduce();
    (0..r.m.min(r.n))
        .map(|i| r.a[i][i].clone())
        .take_while(|x| !x.is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::determinant;

    fn check(a: &IntMatrix) -> SnfResult {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d, "UAV != D for {a:?}");
        assert!(s.d.is_diagonal());
        let diag = s.invariant_factors();
        for w in diag.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken");
        }
        assert!(diag.iter().all(|x| x.is_positive()));
        assert_eq!(determinant(&s.u).abs(), BigInt::one());
        assert_eq!(determinant(&s.v).abs(), BigInt::one());
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(a.rows()));
        s
    }

    #[test]
    fn zero_matrix() {
        let s = check(&IntMatrix::from_rows(&[[0]]));
        assert_eq!(s.d, IntMatrix::from_rows(&[[0]]));
    }

    #[test]
    fn coprime_diagonal_merges() {
        // by hand: [[2,0],[0,3]] ~ [[1,0],[0,6]]
        let s = check(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(s.d, IntMatrix::from_rows(&[[1, 0], [0, 6]]));
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(2));
        assert_eq!(s.d, IntMatrix::identity(2));
    }

    #[test]
    fn empty_and_rectangular() {
        check(&IntMatrix::zeros(0, 3));
        check(&IntMatrix::zeros(3, 0));
        let s = check(&IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]));
        assert_eq!(
            s.invariant_factors(),
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
        assert_eq!(
            invariant_factors(&IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]])),
            s.invariant_factors()
        );
    }
}
