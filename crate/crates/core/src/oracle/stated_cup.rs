//! Cup products of `(Z_a ⋊ Z_b) ⋊ Z` computed from explicit cochain
//! representatives on the product of the resolutions for `Z`, `Z_b` and
//! `Z_a`, multiplied with their diagonal approximations.
//!
//! Every subgroup, quotient and coordinate is found by enumerating residues,
//! so nothing here shares code with the gcd ladders of the closed forms.

use std::collections::{BTreeMap, BTreeSet};

use super::periodic::{periodic_cohomology, CyclicModule};
use crate::arith::pow_mod;
use crate::closed_form::{CohClass, Symbol};
use crate::error::{Error, Result};
use crate::group::{CheckedSpec, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Part {
    Unit,
    A,
    B,
}

/// A generator as a cochain on `F ⊗ P^b ⊗ P^a`: degree `z ∈ {0,1}` along
/// `Z`, its `Z_a`- or `Z_b`-degree `2j`, and the integer value of the
/// cochain on the generator `1`.
#[derive(Clone, Copy, Debug)]
struct Rep {
    z: u64,
    part: Part,
    j: u64,
    value: u64,
}

/// Parameters of a family-1 group with its twist.
#[derive(Clone, Copy, Debug)]
pub struct CupOracle {
    a: u64,
    b: u64,
    r: u64,
    c_a: u64,
    c_b: u64,
}

/// Smallest positive `x ≤ m` with `(u - 1)·x ≡ 0 (mod m)` for every `u` in
/// `units`; it generates the common fixed subgroup of `Z_m`.
fn fixed_generator(m: u64, units: &[u64]) -> u64 {
    (1..=m)
        .find(|&x| units.iter().all(|&u| (u % m + m - 1) % m * x % m == 0))
        .unwrap_or(m)
}

/// `Z_m`'s cyclic subgroup generated by `g`, with the quotient by
/// `(c - 1)` applied to it: returns `(generator, quotient order, image set)`.
fn coinvariants(m: u64, g: u64, c: u64) -> (u64, u64, BTreeSet<u64>) {
    let size = m / g;
    let image: BTreeSet<u64> = (0..size)
        .map(|k| ((c % m + m - 1) % m) * (k * g % m) % m)
        .collect();
    (g, size / image.len() as u64, image)
}

impl CupOracle {
    pub fn new(spec: &CheckedSpec) -> Result<Self> {
        if spec.spec.family() != Family::Metacyclic {
            return Err(Error::Unsupported(
                "the cochain-level cup oracle covers the metacyclic family".to_string(),
            ));
        }
        let p = &spec.presentation;
        let theta = spec.theta_or_identity();
        Ok(CupOracle {
            a: p.a,
            b: p.b,
            r: p.r,
            c_a: theta.c_a,
            c_b: theta.c_b,
        })
    }

    /// Action of `θ(1)` on the coefficient module of a representative.
    fn theta_multiplier(&self, part: Part, j: u64) -> u64 {
        match part {
            Part::Unit => 1,
            Part::A => pow_mod(self.c_a, j, self.a),
            Part::B => pow_mod(self.c_b, j, self.b),
        }
    }

    fn modulus(&self, part: Part) -> u64 {
        match part {
            Part::Unit => 0,
            Part::A => self.a,
            Part::B => self.b,
        }
    }

    fn rep(&self, s: Symbol) -> Result<Rep> {
        let (a, b) = (self.a, self.b);
        let r = |part, j, z, value| Rep { z, part, j, value };
        Ok(match s {
            Symbol::One => r(Part::Unit, 0, 0, 1),
            Symbol::Eta => r(Part::Unit, 0, 1, 1),
            Symbol::A(j) if j > 0 => {
                let units = [pow_mod(self.r, j, a), pow_mod(self.c_a, j, a)];
                r(Part::A, j, 0, fixed_generator(a, &units))
            }
            Symbol::EtaA(j) if j > 0 => {
                r(Part::A, j, 1, fixed_generator(a, &[pow_mod(self.r, j, a)]))
            }
            Symbol::B(j) if j > 0 => {
                r(Part::B, j, 0, fixed_generator(b, &[pow_mod(self.c_b, j, b)]))
            }
            Symbol::EtaB(j) if j > 0 => r(Part::B, j, 1, 1),
            _ => {
                return Err(Error::Class(format!(
                    "{s} is not a generator of this ring"
                )))
            }
        })
    }

    /// `Δ_{pq}(1)` of the periodic resolution of `Z_m` as pairs `(i, j)`
    /// meaning `t^i ⊗ t^j`.
    fn periodic_diagonal(m: u64, p: u64, q: u64) -> Vec<(u64, u64)> {
        if p % 2 == 0 {
            vec![(0, 0)]
        } else if q % 2 == 0 {
            vec![(0, 1)]
        } else {
            (0..m)
                .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
                .collect()
        }
    }

    /// Value of `x ⌣ y` on the generator `1 ⊗ 1 ⊗ 1` of the product
    /// resolution, before identifying the target group.
    fn product_value(&self, x: &Rep, y: &Rep) -> u128 {
        // along Z: Δ_1(1) = 1⊗s + 1⊗1, so only (z_x, z_y) = (1, 0) moves y
        let y_theta = if x.z == 1 && y.z == 0 {
            self.theta_multiplier(y.part, y.j) as u128
        } else {
            1
        };
        // along Z_b: t acts on H^{2j}(Z_a) by r^j and trivially on H^0
        let b_deg = |r: &Rep| if r.part == Part::B { 2 * r.j } else { 0 };
        let t_on = |r: &Rep, e: u64| -> u128 {
            if r.part == Part::A {
                pow_mod(self.r, r.j * e, self.a) as u128
            } else {
                1
            }
        };
        let b_factor: u128 = Self::periodic_diagonal(self.b, b_deg(x), b_deg(y))
            .into_iter()
            .map(|(i, j)| t_on(x, i) * t_on(y, j))
            .sum();
        // along Z_a with integral coefficients the generator acts trivially
        let a_deg = |r: &Rep| if r.part == Part::A { 2 * r.j } else { 0 };
        let a_factor = Self::periodic_diagonal(self.a, a_deg(x), a_deg(y)).len() as u128;
        x.value as u128 * y.value as u128 * y_theta * b_factor * a_factor
    }

    /// `lhs ⌣ rhs` in the named generators.
    pub fn cup(&self, lhs: Symbol, rhs: Symbol) -> Result<CohClass> {
        let (x, y) = (self.rep(lhs)?, self.rep(rhs)?);
        let degree = lhs.degree() + rhs.degree();
        let zero = Ok(CohClass::zero(degree));
        let z = x.z + y.z;
        if z >= 2 {
            // the resolution of Z stops in degree 1
            return zero;
        }
        let part = match (x.part, y.part) {
            (Part::Unit, p) | (p, Part::Unit) => p,
            (p, q) if p == q => p,
            (Part::A, Part::B) | (Part::B, Part::A) => {
                let (i, j) = if x.part == Part::A { (x.j, y.j) } else { (y.j, x.j) };
                let module = CyclicModule::twisted(self.a, pow_mod(self.r, i, self.a));
                if periodic_cohomology(self.b, module, 2 * j as usize)?.is_trivial() {
                    return zero;
                }
                return Err(Error::Unsupported(
                    "mixed product lands in a nonzero group".to_string(),
                ));
            }
            _ => unreachable!("parts are Unit, A or B"),
        };
        let j = x.j + y.j;
        let w = self.product_value(&x, &y);
        let m = self.modulus(part);
        let (coefficient, order) = match (part, z) {
            (Part::Unit, _) => (w as u64, 0),
            (_, 0) => {
                let units: Vec<u64> = match part {
                    Part::A => vec![pow_mod(self.r, j, m), pow_mod(self.c_a, j, m)],
                    _ => vec![pow_mod(self.c_b, j, m)],
                };
                let g = fixed_generator(m, &units);
                let order = m / g;
                let w = (w % m as u128) as u64;
                if w % g != 0 {
                    return Err(Error::Class(format!(
                        "{lhs}·{rhs} is not an invariant class"
                    )));
                }
                (w / g % order, order)
            }
            _ => {
                let g = match part {
                    Part::A => fixed_generator(m, &[pow_mod(self.r, j, m)]),
                    _ => 1,
                };
                let (g, order, image) = coinvariants(m, g, self.theta_multiplier(part, j));
                let w = (w % m as u128) as u64;
                let k = (0..order)
                    .find(|&k| image.contains(&((w + m - k * g % m) % m)))
                    .ok_or_else(|| Error::Class(format!("{lhs}·{rhs} outside the target")))?;
                (k, order)
            }
        };
        let target = match (part, z) {
            (Part::Unit, 0) => Symbol::One,
            (Part::Unit, _) => Symbol::Eta,
            (Part::A, 0) => Symbol::A(j),
            (Part::A, _) => Symbol::EtaA(j),
            (Part::B, 0) => Symbol::B(j),
            (Part::B, _) => Symbol::EtaB(j),
        };
        let mut terms = BTreeMap::new();
        if coefficient != 0 && order != 1 {
            terms.insert(target, coefficient);
        }
        Ok(CohClass { degree, terms })
    }
}

/// `lhs ⌣ rhs` for a metacyclic spec, computed on cochain representatives.
pub fn stated_cup_oracle(spec: &CheckedSpec, lhs: Symbol, rhs: Symbol) -> Result<CohClass> {
    CupOracle::new(spec)?.cup(lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_subgroups_by_enumeration() {
        assert_eq!(fixed_generator(7, &[2]), 7);
        assert_eq!(fixed_generator(7, &[1]), 1);
        assert_eq!(fixed_generator(9, &[4]), 3);
        let (g, order, _) = coinvariants(9, 3, 4);
        assert_eq!((g, order), (3, 3));
    }
}
