use num_bigint::BigInt;
use num_traits::Zero;

use super::coefficients::Coefficients;
use super::resolution::FreeResolution;
use crate::error::Result;
use crate::linalg::{subquotient, subquotient_mod, FinAb, IntMatrix, Subquotient};
use crate::par;

/// `δ^n : Hom_G(F_n, M) → Hom_G(F_{n+1}, M)` as a `k_{n+1} × k_n` matrix.
/// For `n = -1` pass `None` to get the zero map into `C^0`.
pub fn coboundary(res: &FreeResolution, coeffs: &Coefficients, n: Option<usize>) -> IntMatrix {
    let Some(n) = n else {
        return IntMatrix::zeros(res.rank(0), 0);
    };
    let order = res.group().order();
    let (rows, cols) = (res.rank(n + 1), res.rank(n));
    let entries: Vec<Vec<(usize, usize, BigInt)>> = par::map_range(rows, |jp| {
        let mut row = vec![BigInt::zero(); cols];
        for (idx, c) in res.boundary(n + 1, jp).iter().enumerate() {
            if !c.is_zero() {
                let (i, h) = (idx / order, idx % order);
                row[i] += c * coeffs.multiplier(h);
            }
        }
        row.into_iter()
            .enumerate()
            .map(|(i, x)| (jp, i, coeffs.reduce(x)))
            .filter(|(_, _, x)| !x.is_zero())
            .collect()
    });
    IntMatrix::from_entries(rows, cols, entries.into_iter().flatten())
}

/// `H^n(G; M)` computed on a resolution, with cocycle representatives.
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub degree: usize,
    pub coefficients: Coefficients,
    sq: Subquotient,
}

impl Cohomology {
    pub fn group(&self) -> &FinAb {
        self.sq.group()
    }

    /// One cocycle per generator, as values on the generators of `F_n`.
    pub fn representatives(&self) -> &[Vec<BigInt>] {
        self.sq.generators()
    }

    /// Additive orders of the representatives (`0` for infinite order).
    pub fn orders(&self) -> Vec<BigInt> {
        self.sq.orders()
    }

    /// Coordinates of the class of a cocycle.
    pub fn classify(&self, cocycle: &[BigInt]) -> Result<Vec<BigInt>> {
        let reduced: Vec<BigInt> = cocycle
            .iter()
            .map(|x| self.coefficients.reduce(x.clone()))
            .collect();
        self.sq.classify(&reduced)
    }
}

/// `H^n(G; M)` from the resolution, which must reach degree `n + 1`.
pub fn cohomology(res: &FreeResolution, coeffs: &Coefficients, n: usize) -> Result<Cohomology> {
    let d_out = coboundary(res, coeffs, Some(n));
    let d_in = coboundary(res, coeffs, n.checked_sub(1));
    let sq = match coeffs.modulus() {
        0 => subquotient(&d_out, &d_in)?,
        m => {
            let m = BigInt::from(m);
            subquotient_mod(
                &d_out,
                &d_in,
                &vec![m.clone(); d_out.cols()],
                &vec![m; d_out.rows()],
            )?
        }
    };
    Ok(Cohomology {
        degree: n,
        coefficients: coeffs.clone(),
        sq,
    })
}
