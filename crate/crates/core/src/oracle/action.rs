use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::cochain::Cohomology;
use super::resolution::FreeResolution;
use crate::error::{Error, Result};
use crate::linalg::{subquotient_mod, FinAb, IntMatrix};

/// A chain map `τ : F → F` over a group automorphism `θ`, i.e.
/// `τ(g·x) = θ(g)·τ(x)`, lifting the identity on `Z`.
#[derive(Clone, Debug)]
pub struct EquivariantChainMap {
    /// `images[d][j] = τ(e_j) ∈ F_d`.
    images: Vec<Vec<Vec<BigInt>>>,
}

impl EquivariantChainMap {
    /// Builds `τ` through degree `top` for the automorphism given as a
    /// permutation of element indices.
    pub fn new(res: &FreeResolution, permutation: &[usize], top: usize) -> Result<Self> {
        let group = res.group();
        let order = group.order();
        if permutation.len() != order {
            return Err(Error::Dimension("permutation length".to_string()));
        }
        let mut images = vec![vec![res.basis_vector(0, 0, 0)]];
        for d in 1..=top {
            let mut level = Vec::with_capacity(res.rank(d));
            for j in 0..res.rank(d) {
                let mut target = vec![BigInt::zero(); res.dim(d - 1)];
                for (idx, c) in res.boundary(d, j).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (i, h) = (idx / order, idx % order);
                    let moved = res.translate(permutation[h], &images[d - 1][i]);
                    for (t, x) in target.iter_mut().zip(&moved) {
                        if !x.is_zero() {
                            *t += c * x;
                        }
                    }
                }
                level.push(res.lift(d, &target)?);
            }
            images.push(level);
        }
        Ok(EquivariantChainMap { images })
    }

    /// Matrix `P` of the pullback on integral cochains,
    /// `(τ^* f)_j = Σ_i P[j][i] f_i`.
    pub fn pullback(&self, res: &FreeResolution, d: usize) -> IntMatrix {
        let order = res.group().order();
        let k = res.rank(d);
        IntMatrix::from_entries(
            k,
            k,
            self.images[d].iter().enumerate().flat_map(|(j, v)| {
                v.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(move |(idx, x)| (j, idx / order, x.clone()))
            }),
        )
    }
}

/// The map induced on a computed cohomology group, in the basis of its
/// representatives: column `c` is the image of generator `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedAction {
    pub degree: usize,
    pub orders: Vec<BigInt>,
    pub matrix: IntMatrix,
}

impl InducedAction {
    /// `T - I` reduced modulo the generator orders.
    fn minus_identity(&self) -> IntMatrix {
        let r = self.orders.len();
        IntMatrix::from_entries(
            r,
            r,
            (0..r).flat_map(|i| {
                (0..r).map(move |j| {
                    let mut x = self.matrix.get(i, j).clone();
                    if i == j {
                        x -= 1;
                    }
                    if !self.orders[i].is_zero() {
                        x = x.mod_floor(&self.orders[i]);
                    }
                    (i, j, x)
                })
            }),
        )
    }

    /// `ker(T - I)`.
    pub fn invariants(&self) -> Result<FinAb> {
        let r = self.orders.len();
        Ok(subquotient_mod(
            &self.minus_identity(),
            &IntMatrix::zeros(r, 0),
            &self.orders,
            &self.orders,
        )?
        .group()
        .clone())
    }

    /// `coker(T - I)`.
    pub fn coinvariants(&self) -> Result<FinAb> {
        let r = self.orders.len();
        Ok(subquotient_mod(
            &IntMatrix::zeros(0, r),
            &self.minus_identity(),
            &self.orders,
            &[],
        )?
        .group()
        .clone())
    }

    /// `T` composed with itself `k` times, reduced.
    pub fn power(&self, k: u64) -> InducedAction {
        let r = self.orders.len();
        let mut m = IntMatrix::identity(r);
        for _ in 0..k {
            m = self.reduce(&self.matrix.mul(&m));
        }
        InducedAction {
            degree: self.degree,
            orders: self.orders.clone(),
            matrix: m,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.reduce(&self.matrix) == self.reduce(&IntMatrix::identity(self.orders.len()))
    }

    fn reduce(&self, m: &IntMatrix) -> IntMatrix {
        IntMatrix::from_entries(
            m.rows(),
            m.cols(),
            m.entries().map(|(i, j, x)| {
                let o = &self.orders[i];
                (i, j, if o.is_zero() { x.clone() } else { x.mod_floor(o) })
            }),
        )
    }

    /// Smallest `k ≥ 1` with `T^k = I`, searched up to `limit`.
    pub fn order(&self, limit: u64) -> Option<u64> {
        let r = self.orders.len();
        let id = self.reduce(&IntMatrix::identity(r));
        let mut m = self.reduce(&self.matrix);
        for k in 1..=limit {
            if m == id {
                return Some(k);
            }
            m = self.reduce(&self.matrix.mul(&m));
        }
        None
    }
}

/// Matrix of `τ^*` on `H^n`, for integral coefficients.
pub fn induced_on(
    res: &FreeResolution,
    tau: &EquivariantChainMap,
    h: &Cohomology,
) -> Result<InducedAction> {
    if h.coefficients.modulus() != 0 {
        return Err(Error::Unsupported(
            "induced actions are computed for integral coefficients".to_string(),
        ));
    }
    let p = tau.pullback(res, h.degree);
    let reps = h.representatives();
    let r = reps.len();
    let mut columns = Vec::with_capacity(r);
    for z in reps {
        columns.push(h.classify(&p.mul_vec(z))?);
    }
    let matrix = IntMatrix::from_columns(r, &columns);
    Ok(InducedAction {
        degree: h.degree,
        orders: h.orders(),
        matrix,
    })
}
