use num_bigint::BigInt;

use crate::arith::{gcd, pow_mod};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Coefficient module for cochains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficients {
    /// `Z` with trivial action.
    Integers,
    /// `Z_a` with a multiplicative action.
    Twisted(TwistedCoefficients),
}

impl Coefficients {
    /// `0` for `Z`, else the modulus.
    pub fn modulus(&self) -> u64 {
        match self {
            Coefficients::Integers => 0,
            Coefficients::Twisted(t) => t.modulus,
        }
    }

    /// Multiplier by which element `g` acts.
    pub fn multiplier(&self, g: usize) -> u64 {
        match self {
            Coefficients::Integers => 1,
            Coefficients::Twisted(t) => t.multipliers[g],
        }
    }

    pub(crate) fn reduce(&self, x: BigInt) -> BigInt {
        match self.modulus() {
            0 => x,
            m => {
                use num_integer::Integer;
                x.mod_floor(&BigInt::from(m))
            }
        }
    }
}

/// `Z_a` on which each group element acts by multiplication by a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedCoefficients {
    pub modulus: u64,
    /// Multiplier of each element, indexed like the group's elements.
    pub multipliers: Vec<u64>,
}

impl TwistedCoefficients {
    /// Builds the module from a multiplier function and checks that it is a
    /// homomorphism into the units of `Z_a`.
    pub fn new<F>(group: &FiniteGroup, modulus: u64, f: F) -> Result<Self>
    where
        F: Fn(usize) -> u64,
    {
        if modulus == 0 {
            return Err(Error::validation("modulus ≥ 1"));
        }
        let n = group.order();
        let multipliers: Vec<u64> = (0..n).map(|g| f(g) % modulus).collect();
        for (g, &m) in multipliers.iter().enumerate() {
            if gcd(m, modulus) != 1 && modulus > 1 {
                return Err(Error::validation(format!(
                    "multiplier of {} is a unit mod {modulus}",
                    group.element(g)
                )));
            }
        }
        for g in 0..n {
            for h in 0..n {
                let lhs = multipliers[group.mul(g, h)];
                let rhs = (multipliers[g] * multipliers[h]) % modulus;
                if lhs != rhs {
                    return Err(Error::validation(format!(
                        "action is a homomorphism (fails at {} , {})",
                        group.element(g),
                        group.element(h)
                    )));
                }
            }
        }
        Ok(TwistedCoefficients {
            modulus,
            multipliers,
        })
    }

    /// `Z_a` with `1_b`, `x`, `y` acting by `r^j`, `r_x^j`, `r_y^j`; the
    /// `Z_a` coordinate of the group, if any, acts trivially.
    pub fn multiplication(
        group: &FiniteGroup,
        a: u64,
        (r, r_x, r_y): (u64, u64, u64),
        j: u64,
    ) -> Result<Self> {
        let (r, r_x, r_y) = (pow_mod(r, j, a), pow_mod(r_x, j, a), pow_mod(r_y, j, a));
        Self::new(group, a, |g| {
            let e = group.element(g);
            let m = pow_mod(r, e.v, a) * pow_mod(r_x, e.s, a) % a.max(1);
            m * pow_mod(r_y, e.t as u64, a) % a.max(1)
        })
    }

    /// `Z_a` with every element acting trivially.
    pub fn trivial(group: &FiniteGroup, a: u64) -> Result<Self> {
        Self::new(group, a, |_| 1)
    }
}
