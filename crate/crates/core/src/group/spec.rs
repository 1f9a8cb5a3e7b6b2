use std::fmt;

use serde::{Deserialize, Serialize};

use super::element::{Presentation, QuaternionPart};
use super::finite::FiniteGroup;
use super::theta::{theta_permutation, ThetaMap};
use crate::arith::{gcd, pow_mod};
use crate::error::{Error, Result};

/// Default bound on the order of groups that are enumerated.
pub const DEFAULT_ORDER_CAP: usize = 512;

/// A member of one of the supported finite group families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "variant")]
pub enum GroupSpec {
    Cyclic { m: u64 },
    Metacyclic { a: u64, b: u64, r: u64 },
    Quaternion { i: u32 },
    ZbTimesQ { b: u64, i: u32 },
    ZaZbQ { a: u64, b: u64, i: u32, r: u64, r_x: u64, r_y: u64 },
}

/// The two families of finite kernels: `Z_a ⋊ Z_b` and
/// `Z_a ⋊ (Z_b × Q_{2^i})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Metacyclic,
    Quaternionic,
}

impl GroupSpec {
    pub fn family(&self) -> Family {
        match self {
            GroupSpec::Cyclic { .. } | GroupSpec::Metacyclic { .. } => Family::Metacyclic,
            _ => Family::Quaternionic,
        }
    }

    /// Uniform `Z_a ⋊ (Z_b × Q)` parameters. `Cyclic(m)` is `Z_1 ⋊ Z_m`,
    /// so its twist multiplier is `c_b`.
    pub fn presentation(&self) -> Presentation {
        let q = |i: u32, r_x: u64, r_y: u64| Some(QuaternionPart { i, r_x, r_y });
        match *self {
            GroupSpec::Cyclic { m } => Presentation {
                a: 1,
                b: m,
                r: 1,
                quaternion: None,
            },
            GroupSpec::Metacyclic { a, b, r } => Presentation {
                a,
                b,
                r: r % a,
                quaternion: None,
            },
            GroupSpec::Quaternion { i } => Presentation {
                a: 1,
                b: 1,
                r: 0,
                quaternion: q(i, 0, 0),
            },
            GroupSpec::ZbTimesQ { b, i } => Presentation {
                a: 1,
                b,
                r: 0,
                quaternion: q(i, 0, 0),
            },
            GroupSpec::ZaZbQ {
                a,
                b,
                i,
                r,
                r_x,
                r_y,
            } => Presentation {
                a,
                b,
                r: r % a,
                quaternion: q(i, r_x % a, r_y % a),
            },
        }
    }

    pub fn order(&self) -> u64 {
        self.presentation().order()
    }

    /// Named group conditions, in a fixed order; the first failure is
    /// reported.
    fn check(&self) -> Result<()> {
        let need = |ok: bool, what: &str| -> Result<()> {
            if ok {
                Ok(())
            } else {
                Err(Error::validation(what))
            }
        };
        let positive = |vals: &[u64]| need(vals.iter().all(|&x| x > 0), "parameters positive");
        match *self {
            GroupSpec::Cyclic { m } => need(m >= 1, "m ≥ 1"),
            GroupSpec::Metacyclic { a, b, r } => {
                positive(&[a, b, r])?;
                need(gcd(a, b) == 1, "gcd(a,b)=1")?;
                let rm1 = (r % a + a - 1) % a;
                need(gcd(a, rm1 * b % a) == 1, "gcd(a,(r-1)b)=1")?;
                need(pow_mod(r, b, a) == 1 % a, "r^b ≡ 1 mod a")
            }
            GroupSpec::Quaternion { i } => need(i >= 3, "i ≥ 3"),
            GroupSpec::ZbTimesQ { b, i } => {
                positive(&[b])?;
                need(i >= 3, "i ≥ 3")?;
                need(b % 2 == 1, "gcd(ab,2)=1")
            }
            GroupSpec::ZaZbQ {
                a,
                b,
                i,
                r,
                r_x,
                r_y,
            } => {
                positive(&[a, b, r, r_x, r_y])?;
                need(i >= 3, "i ≥ 3")?;
                need(gcd(a, b) == 1, "gcd(a,b)=1")?;
                need(a % 2 == 1 && b % 2 == 1, "gcd(ab,2)=1")?;
                for (x, name) in [(r, "r"), (r_x, "r_x"), (r_y, "r_y")] {
                    need(gcd(x % a, a) == 1, &format!("{name} a unit mod a"))?;
                }
                need(pow_mod(r, b, a) == 1 % a, "r^b ≡ 1 mod a")?;
                need(pow_mod(r_x, 2, a) == 1 % a, "r_x^2 ≡ 1 mod a")?;
                need(pow_mod(r_y, 2, a) == 1 % a, "r_y^2 ≡ 1 mod a")
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic { m } => write!(f, "Z_{m}"),
            GroupSpec::Metacyclic { a, b, r } => write!(f, "Z_{a} ⋊ Z_{b} (r={r})"),
            GroupSpec::Quaternion { i } => write!(f, "Q_{}", 1u64 << i),
            GroupSpec::ZbTimesQ { b, i } => write!(f, "Z_{b} × Q_{}", 1u64 << i),
            GroupSpec::ZaZbQ {
                a,
                b,
                i,
                r,
                r_x,
                r_y,
            } => write!(
                f,
                "Z_{a} ⋊ (Z_{b} × Q_{}) (r={r}, r_x={r_x}, r_y={r_y})",
                1u64 << i
            ),
        }
    }
}

/// Images of `x` and `y` in `Q_{2^i}` modulo `Z_a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum QuaternionTwist {
    /// `x ↦ x^k`, `y ↦ x^ℓ y` with `k` odd.
    Standard { k: u64, ell: u64 },
    /// `x ↦ x^{s} y^{t}` and `y ↦ x^{s'} y^{t'}`; only meaningful for `Q_8`,
    /// whose automorphisms need not preserve `<x>`.
    General { x_image: (u64, u8), y_image: (u64, u8) },
}

/// The automorphism `θ(1)` of the finite kernel:
/// `1_a ↦ c_a·1_a`, `1_b ↦ c·1_a + c_b·1_b`, `x ↦ c_x·1_a + θ_Q(x)`,
/// `y ↦ c_y·1_a + θ_Q(y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThetaSpec {
    pub c: u64,
    pub c_a: u64,
    pub c_b: u64,
    pub c_x: u64,
    pub c_y: u64,
    pub twist: QuaternionTwist,
}

impl Default for ThetaSpec {
    fn default() -> Self {
        ThetaSpec {
            c: 0,
            c_a: 1,
            c_b: 1,
            c_x: 0,
            c_y: 0,
            twist: QuaternionTwist::Standard { k: 1, ell: 0 },
        }
    }
}

impl ThetaSpec {
    pub fn metacyclic(c: u64, c_a: u64, c_b: u64) -> Self {
        ThetaSpec {
            c,
            c_a,
            c_b,
            ..Default::default()
        }
    }

    pub fn standard(c_a: u64, c_b: u64, k: u64, ell: u64) -> Self {
        ThetaSpec {
            c_a,
            c_b,
            twist: QuaternionTwist::Standard { k, ell },
            ..Default::default()
        }
    }

    pub fn general(x_image: (u64, u8), y_image: (u64, u8)) -> Self {
        ThetaSpec {
            twist: QuaternionTwist::General { x_image, y_image },
            ..Default::default()
        }
    }

    /// Reduces every coordinate into its canonical range.
    fn normalized(&self, p: &Presentation) -> Result<ThetaSpec> {
        let twist = match (self.twist, p.quaternion) {
            (_, None) => QuaternionTwist::Standard { k: 1, ell: 0 },
            (QuaternionTwist::Standard { k, ell }, Some(q)) => {
                if k % 2 == 0 {
                    return Err(Error::validation("k odd"));
                }
                if ell >= q.x_order() {
                    return Err(Error::validation("ℓ < 2^(i-1)"));
                }
                QuaternionTwist::Standard {
                    k: k % q.order(),
                    ell,
                }
            }
            (QuaternionTwist::General { x_image, y_image }, Some(q)) => {
                if q.i != 3 {
                    return Err(Error::Unsupported(
                        "general quaternion twists are only accepted for Q_8".into(),
                    ));
                }
                if x_image.1 > 1 || y_image.1 > 1 {
                    return Err(Error::validation("y-exponent in {0,1}"));
                }
                let n = q.x_order();
                QuaternionTwist::General {
                    x_image: (x_image.0 % n, x_image.1),
                    y_image: (y_image.0 % n, y_image.1),
                }
            }
        };
        let has_q = p.quaternion.is_some();
        Ok(ThetaSpec {
            c: self.c % p.a,
            c_a: self.c_a % p.a,
            c_b: self.c_b % p.b,
            c_x: if has_q { self.c_x % p.a } else { 0 },
            c_y: if has_q { self.c_y % p.a } else { 0 },
            twist,
        })
    }
}

/// A spec whose conditions have been confirmed, with an optional verified
/// twist and any derived facts.
#[derive(Clone, Debug)]
pub struct CheckedSpec {
    pub spec: GroupSpec,
    pub presentation: Presentation,
    pub theta: Option<ThetaSpec>,
    pub facts: Vec<String>,
}

impl CheckedSpec {
    pub fn theta_or_identity(&self) -> ThetaSpec {
        self.theta.unwrap_or_default()
    }

    /// Enumerates the group, honouring `cap`.
    pub fn finite_group(&self, cap: usize) -> Result<FiniteGroup> {
        FiniteGroup::enumerate(&self.presentation, cap)
    }

    /// The twist as a permutation of the enumerated group.
    pub fn theta_map(&self, group: &FiniteGroup) -> Result<ThetaMap> {
        theta_permutation(group, &self.theta_or_identity())
    }
}

pub fn validate(spec: GroupSpec, theta: Option<ThetaSpec>) -> Result<CheckedSpec> {
    validate_with_cap(spec, theta, DEFAULT_ORDER_CAP)
}

/// Confirms every group condition; a twist is accepted only if it is a
/// bijective homomorphism, which requires enumerating the group.
pub fn validate_with_cap(
    spec: GroupSpec,
    theta: Option<ThetaSpec>,
    cap: usize,
) -> Result<CheckedSpec> {
    spec.check()?;
    let presentation = spec.presentation();
    let mut facts = Vec::new();
    if let GroupSpec::Metacyclic { a, r, .. } = spec {
        let d1 = gcd((r % a + a - 1) % a, a);
        debug_assert_eq!(d1, 1);
        facts.push(format!("δ_1 = gcd(r-1, a) = {d1}"));
    }
    let theta = match theta {
        None => None,
        Some(t) => {
            let t = t.normalized(&presentation)?;
            let group = FiniteGroup::enumerate(&presentation, cap)?;
            theta_permutation(&group, &t)?;
            Some(t)
        }
    };
    Ok(CheckedSpec {
        spec,
        presentation,
        theta,
        facts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_conditions() {
        assert!(validate(GroupSpec::Metacyclic { a: 7, b: 3, r: 2 }, None).is_ok());
        let e = validate(GroupSpec::Metacyclic { a: 9, b: 3, r: 4 }, None).unwrap_err();
        assert_eq!(e.to_string(), "gcd(a,b)=1 violated");
        let e = validate(GroupSpec::Metacyclic { a: 7, b: 2, r: 2 }, None).unwrap_err();
        assert_eq!(e.to_string(), "r^b ≡ 1 mod a violated");
        let e = validate(GroupSpec::Metacyclic { a: 7, b: 3, r: 8 }, None).unwrap_err();
        assert_eq!(e.to_string(), "gcd(a,(r-1)b)=1 violated");
        let zq = GroupSpec::ZaZbQ {
            a: 5,
            b: 3,
            i: 3,
            r: 1,
            r_x: 4,
            r_y: 4,
        };
        assert!(validate(zq, None).is_ok());
        assert!(validate(GroupSpec::Quaternion { i: 2 }, None).is_err());
    }

    #[test]
    fn metacyclic_records_delta_one() {
        let c = validate(GroupSpec::Metacyclic { a: 7, b: 3, r: 2 }, None).unwrap();
        assert!(c.facts.iter().any(|f| f.ends_with("= 1")));
    }

    #[test]
    fn bad_twists_are_rejected() {
        let g = GroupSpec::Metacyclic { a: 7, b: 3, r: 2 };
        // c_b = 2 would send 1_b to an element of order 3 acting by r^2
        let e = validate(g, Some(ThetaSpec::metacyclic(0, 1, 2))).unwrap_err();
        assert!(matches!(e, Error::NotAutomorphism { .. }), "{e}");
        let q = GroupSpec::Quaternion { i: 3 };
        assert!(validate(q, Some(ThetaSpec::standard(1, 1, 2, 0))).is_err());
        assert!(validate(q, Some(ThetaSpec::general((0, 1), (1, 0)))).is_ok());
        assert!(validate(q, Some(ThetaSpec::general((1, 0), (1, 0)))).is_err());
    }
}
