//! Independent verification engine: cohomology, induced actions and cup
//! products from explicit resolutions with exact integer arithmetic.
//!
//! Groups are resolved by a free resolution whose generators are chosen
//! greedily from kernel bases ([`FreeResolution`]); the normalized bar
//! complex is available for small cross-checks ([`bar_cohomology`]) and as
//! the target of comparison maps carrying Alexander–Whitney products
//! ([`Comparison`]).

mod action;
mod bar;
mod coefficients;
mod cochain;
mod cup;
mod stated_cup;
mod periodic;
mod resolution;

pub use action::{induced_on, EquivariantChainMap, InducedAction};
pub use bar::{bar_cohomology, BarCohomology, DEFAULT_BAR_CELLS};
pub use coefficients::{Coefficients, TwistedCoefficients};
pub use cochain::{coboundary, cohomology, Cohomology};
pub use cup::{Comparison, DEFAULT_CHAIN_TERMS};
pub use stated_cup::{stated_cup_oracle, CupOracle};
pub use periodic::{periodic_cohomology, CyclicModule};
pub use resolution::{FreeResolution, Limits};

use crate::error::{Error, Result};
use crate::group::{CheckedSpec, FiniteGroup};
use crate::linalg::FinAb;

/// A finite kernel resolved through a fixed degree, with the permutation of
/// its twisting automorphism.
#[derive(Debug)]
pub struct Oracle {
    spec: CheckedSpec,
    res: FreeResolution,
    theta: Vec<usize>,
}

impl Oracle {
    /// Resolves the finite kernel of `spec` through degree `top`.
    pub fn new(spec: &CheckedSpec, top: usize, limits: Limits) -> Result<Self> {
        let group = spec.finite_group(limits.max_order)?;
        let theta = spec.theta_map(&group)?.permutation;
        let res = FreeResolution::new(group, top, limits)?;
        Ok(Oracle {
            spec: spec.clone(),
            res,
            theta,
        })
    }

    pub fn spec(&self) -> &CheckedSpec {
        &self.spec
    }

    pub fn group(&self) -> &FiniteGroup {
        self.res.group()
    }

    pub fn resolution(&self) -> &FreeResolution {
        &self.res
    }

    fn need(&self, degree: usize) -> Result<()> {
        if degree > self.res.top() {
            return Err(Error::Capacity {
                what: "resolution degree".to_string(),
                size: degree,
                limit: self.res.top(),
            });
        }
        Ok(())
    }

    /// `H^n(F; M)`.
    pub fn cohomology(&self, coeffs: &Coefficients, n: usize) -> Result<Cohomology> {
        self.need(n + 1)?;
        cohomology(&self.res, coeffs, n)
    }

    /// `H^n(F; Z)`.
    pub fn integral(&self, n: usize) -> Result<Cohomology> {
        self.cohomology(&Coefficients::Integers, n)
    }

    /// `Z_a` twisted by `1_b ↦ r^j`, `x ↦ r_x^j`, `y ↦ r_y^j`.
    pub fn twisted_coefficients(
        &self,
        a: u64,
        multipliers: (u64, u64, u64),
        j: u64,
    ) -> Result<Coefficients> {
        Ok(Coefficients::Twisted(TwistedCoefficients::multiplication(
            self.group(),
            a,
            multipliers,
            j,
        )?))
    }

    /// Map induced by the automorphism `permutation` on `H^n(F; Z)`.
    pub fn induced_action_by(&self, permutation: &[usize], n: usize) -> Result<InducedAction> {
        self.need(n + 1)?;
        let tau = EquivariantChainMap::new(&self.res, permutation, n)?;
        induced_on(&self.res, &tau, &self.integral(n)?)
    }

    /// Map induced by `θ(1)` on `H^n(F; Z)`.
    pub fn induced_action(&self, n: usize) -> Result<InducedAction> {
        self.induced_action_by(&self.theta, n)
    }

    /// Permutation of `θ(1)` on the enumerated elements.
    pub fn theta(&self) -> &[usize] {
        &self.theta
    }

    /// `H^n(F ⋊_θ Z; Z)` from the exact sequence
    /// `0 → H^{n-1}(F)_Z → H^n(F ⋊ Z) → H^n(F)^Z → 0`.
    ///
    /// Fails with `Unsupported` when both ends are nonzero and the right one
    /// has torsion, since the extension is then not determined.
    pub fn fz_cohomology(&self, n: usize) -> Result<FinAb> {
        let right = self.induced_action(n)?.invariants()?;
        let left = match n {
            0 => FinAb::trivial(),
            _ => self.induced_action(n - 1)?.coinvariants()?,
        };
        if left.is_trivial() {
            Ok(right)
        } else if right.torsion().is_empty() {
            Ok(left.sum(&right))
        } else {
            Err(Error::Unsupported(format!(
                "extension in degree {n} is not determined by {left} and {right}"
            )))
        }
    }

    /// Comparison maps to the bar resolution, for cup products.
    pub fn comparison(&self) -> Comparison<'_> {
        Comparison::new(&self.res, DEFAULT_CHAIN_TERMS)
    }
}

/// `H^n(F; Z)` of the finite kernel of `spec`.
pub fn group_cohomology(spec: &CheckedSpec, n: usize, limits: Limits) -> Result<FinAb> {
    Ok(Oracle::new(spec, n + 1, limits)?.integral(n)?.group().clone())
}

/// `θ(1)^*` on `H^n(F; Z)`.
pub fn induced_action(spec: &CheckedSpec, n: usize, limits: Limits) -> Result<InducedAction> {
    Oracle::new(spec, n + 1, limits)?.induced_action(n)
}

/// `H^n(F ⋊_θ Z; Z)` assembled from invariants and coinvariants.
pub fn fz_cohomology(spec: &CheckedSpec, n: usize, limits: Limits) -> Result<FinAb> {
    Oracle::new(spec, n + 1, limits)?.fz_cohomology(n)
}
