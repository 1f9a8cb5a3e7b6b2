use serde::Serialize;

use super::invariants::DerivedInvariants;
use crate::group::CheckedSpec;
use crate::linalg::FinAb;

/// One cyclic summand as the closed forms name it. `order == 0` is `Z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub name: String,
    pub order: u64,
}

impl Summand {
    fn new(name: impl Into<String>, order: u64) -> Self {
        Summand {
            name: name.into(),
            order,
        }
    }

    fn free() -> Self {
        Summand::new("Z", 0)
    }
}

/// A cohomology group both as its named summand decomposition and in
/// canonical invariant-factor form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyGroup {
    pub n: u64,
    pub summands: Vec<Summand>,
    pub group: FinAb,
}

impl CohomologyGroup {
    fn from_summands(n: u64, summands: Vec<Summand>) -> Self {
        let free = summands.iter().filter(|s| s.order == 0).count();
        let group = FinAb::from_cyclic_orders(
            free,
            summands.iter().filter(|s| s.order != 0).map(|s| s.order),
        );
        CohomologyGroup {
            n,
            summands,
            group,
        }
    }

    /// `"Z_7 ⊕ Z_3 = Z_{A_3} ⊕ Z_{B_3}"`; empty when there is nothing
    /// beyond the canonical form to show.
    pub fn decomposition(&self) -> String {
        if self.summands.is_empty() || self.summands.iter().all(|s| s.order == 0) {
            return String::new();
        }
        let concrete: Vec<String> = self
            .summands
            .iter()
            .map(|s| match s.order {
                0 => "Z".to_string(),
                o => format!("Z_{o}"),
            })
            .collect();
        let named: Vec<&str> = self.summands.iter().map(|s| s.name.as_str()).collect();
        format!("{} = {}", concrete.join(" ⊕ "), named.join(" ⊕ "))
    }
}

fn z2_summands(count: u32) -> Vec<Summand> {
    (0..count).map(|_| Summand::new("Z_2", 2)).collect()
}

/// `H^n(F; Z)` for the finite kernel `F`.
pub fn finite_cohomology(spec: &CheckedSpec, n: u64) -> CohomologyGroup {
    let inv = DerivedInvariants::new(spec);
    if n == 0 {
        return CohomologyGroup::from_summands(0, vec![Summand::free()]);
    }
    if n % 2 == 1 {
        return CohomologyGroup::from_summands(n, Vec::new());
    }
    let j = n / 2;
    let mut s = Vec::new();
    if inv.is_metacyclic() {
        s.push(Summand::new(format!("Z_{{δ_{j}}}"), inv.delta(j)));
        s.push(Summand::new("Z_b", inv.b));
        return CohomologyGroup::from_summands(n, s);
    }
    if j % 2 == 1 {
        s.push(Summand::new(format!("Z_{{ε_{j}}}"), inv.epsilon(j)));
        s.push(Summand::new("Z_b", inv.b));
        s.extend(z2_summands(2));
    } else {
        s.push(Summand::new(format!("Z_{{δ_{j}}}"), inv.delta(j)));
        s.push(Summand::new("Z_b", inv.b));
        s.push(Summand::new("Z_{2^i}", inv.two_i()));
    }
    CohomologyGroup::from_summands(n, s)
}

/// `H^n(F ⋊_θ Z; Z)`.
pub fn vz_cohomology(spec: &CheckedSpec, n: u64) -> CohomologyGroup {
    let inv = DerivedInvariants::new(spec);
    if n <= 1 {
        return CohomologyGroup::from_summands(n, vec![Summand::free()]);
    }
    let j = n / 2;
    let mut s = vec![
        Summand::new(format!("Z_{{A_{j}}}"), inv.a_j(j)),
        Summand::new(format!("Z_{{B_{j}}}"), inv.b_j(j)),
    ];
    if let Some(t) = inv.h2_action {
        if j % 2 == 0 {
            let name = if inv.i == Some(3) {
                "Z_8".to_string()
            } else {
                format!("Z_{{C_{j}}}")
            };
            s.push(Summand::new(name, inv.q_top_order(j / 2)));
        } else {
            s.extend(z2_summands(t.fixed_rank()));
        }
    }
    CohomologyGroup::from_summands(n, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{validate, GroupSpec, ThetaSpec};

    fn zq() -> GroupSpec {
        GroupSpec::ZaZbQ {
            a: 5,
            b: 3,
            i: 3,
            r: 1,
            r_x: 4,
            r_y: 4,
        }
    }

    #[test]
    fn finite_examples() {
        let q8 = validate(GroupSpec::Quaternion { i: 3 }, None).unwrap();
        let h: Vec<String> = (0..=4)
            .map(|n| finite_cohomology(&q8, n).group.to_string())
            .collect();
        assert_eq!(h, ["Z", "0", "Z_2 ⊕ Z_2", "0", "Z_8"]);
        let m = validate(GroupSpec::Metacyclic { a: 7, b: 3, r: 2 }, None).unwrap();
        assert_eq!(finite_cohomology(&m, 6).group, FinAb::cyclic(21));
        let z = validate(zq(), None).unwrap();
        assert_eq!(
            finite_cohomology(&z, 2).group.to_string(),
            "Z_2 ⊕ Z_6"
        );
    }

    #[test]
    fn twisted_examples() {
        let m = validate(
            GroupSpec::Metacyclic { a: 7, b: 3, r: 2 },
            Some(ThetaSpec::metacyclic(0, 2, 1)),
        )
        .unwrap();
        let h6 = vz_cohomology(&m, 6);
        assert_eq!(h6.group, FinAb::cyclic(21));
        assert_eq!(h6.decomposition(), "Z_7 ⊕ Z_3 = Z_{A_3} ⊕ Z_{B_3}");
        assert_eq!(vz_cohomology(&m, 7).group, FinAb::cyclic(21));
        assert_eq!(vz_cohomology(&m, 2).group, FinAb::cyclic(3));

        let z = validate(zq(), Some(ThetaSpec::default())).unwrap();
        assert_eq!(vz_cohomology(&z, 4).group, FinAb::cyclic(120));

        // y ↦ xy must act on Z_5 as y does, so x acts trivially here
        let spec = GroupSpec::ZaZbQ {
            a: 5,
            b: 3,
            i: 3,
            r: 1,
            r_x: 1,
            r_y: 4,
        };
        let tw = validate(spec, Some(ThetaSpec::standard(1, 1, 1, 1))).unwrap();
        let h2 = vz_cohomology(&tw, 2);
        assert_eq!(h2.group, FinAb::from_cyclic_orders(0, [1u64, 3, 2]));
        assert_eq!(h2.summands.len(), 3);
    }
}
