use super::element::Element;
use super::finite::FiniteGroup;
use super::spec::{QuaternionTwist, ThetaSpec};
use crate::error::{Error, Result};

/// `θ(1)` realized on an enumerated group, with its induced maps on `Z_a`,
/// on `Z_b` and on the quaternion quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaMap {
    pub permutation: Vec<usize>,
    /// `θ_a(1_a) = theta_a · 1_a`.
    pub theta_a: u64,
    /// `θ_b(1_b) = theta_b · 1_b`.
    pub theta_b: u64,
    /// `θ_Q(x)` and `θ_Q(y)` as `(s, t)` meaning `x^s y^t`.
    pub theta_q: Option<((u64, u8), (u64, u8))>,
}

impl ThetaMap {
    pub fn apply(&self, g: usize) -> usize {
        self.permutation[g]
    }

    /// Order of the permutation.
    pub fn order(&self) -> u64 {
        let n = self.permutation.len();
        let mut seen = vec![false; n];
        let mut l = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.permutation[x];
                len += 1;
            }
            l = crate::arith::lcm(l, len);
        }
        l
    }
}

fn generator_images(group: &FiniteGroup, t: &ThetaSpec) -> [Element; 4] {
    let p = group.presentation();
    let (xi, yi) = match t.twist {
        QuaternionTwist::Standard { k, ell } => ((k, 0u8), (ell, 1u8)),
        QuaternionTwist::General { x_image, y_image } => (x_image, y_image),
    };
    let n = p.quaternion.map_or(1, |q| q.x_order());
    [
        Element::new(t.c_a % p.a, 0, 0, 0),
        Element::new(t.c % p.a, t.c_b % p.b, 0, 0),
        Element::new(t.c_x % p.a, 0, xi.0 % n, xi.1),
        Element::new(t.c_y % p.a, 0, yi.0 % n, yi.1),
    ]
}

/// Extends `θ` from generators over normal-form words and checks that the
/// result is a bijective homomorphism.
pub fn theta_permutation(group: &FiniteGroup, theta: &ThetaSpec) -> Result<ThetaMap> {
    let p = *group.presentation();
    let [ia, ib, ix, iy] = generator_images(group, theta);
    let ia = group.index_of(&ia);
    let ib = group.index_of(&ib);
    let (ix, iy) = if p.quaternion.is_some() {
        (group.index_of(&ix), group.index_of(&iy))
    } else {
        (0, 0)
    };
    let n = group.order();
    let mut perm = Vec::with_capacity(n);
    for g in group.elements() {
        let mut img = group.pow(ia, g.u);
        img = group.mul(img, group.pow(ib, g.v));
        img = group.mul(img, group.pow(ix, g.s));
        img = group.mul(img, group.pow(iy, u64::from(g.t)));
        perm.push(img);
    }
    for g in 0..n {
        for h in 0..n {
            if perm[group.mul(g, h)] != group.mul(perm[g], perm[h]) {
                return Err(Error::NotAutomorphism {
                    reason: "θ(gh) ≠ θ(g)θ(h)".into(),
                    left: group.element(g).to_string(),
                    right: group.element(h).to_string(),
                });
            }
        }
    }
    let mut hit = vec![usize::MAX; n];
    for (g, &img) in perm.iter().enumerate() {
        if hit[img] != usize::MAX {
            return Err(Error::NotAutomorphism {
                reason: "θ is not injective".into(),
                left: group.element(hit[img]).to_string(),
                right: group.element(g).to_string(),
            });
        }
        hit[img] = g;
    }
    let a_img = group.element(perm[group.index_of(&p.gen_a())]);
    let b_img = group.element(perm[group.index_of(&p.gen_b())]);
    let theta_q = p.quaternion.map(|_| {
        let x = group.element(perm[group.index_of(&p.gen_x().unwrap())]);
        let y = group.element(perm[group.index_of(&p.gen_y().unwrap())]);
        ((x.s, x.t), (y.s, y.t))
    });
    Ok(ThetaMap {
        permutation: perm,
        theta_a: a_img.u,
        theta_b: b_img.v,
        theta_q,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::spec::{validate, GroupSpec};

    #[test]
    fn identity_twist_is_identity() {
        let c = validate(
            GroupSpec::Metacyclic { a: 7, b: 3, r: 2 },
            Some(ThetaSpec::metacyclic(0, 1, 1)),
        )
        .unwrap();
        let g = c.finite_group(512).unwrap();
        let t = c.theta_map(&g).unwrap();
        assert!(t.permutation.iter().enumerate().all(|(i, &j)| i == j));
    }

    #[test]
    fn doubling_on_z7_has_order_three() {
        let c = validate(
            GroupSpec::Metacyclic { a: 7, b: 3, r: 2 },
            Some(ThetaSpec::metacyclic(0, 2, 1)),
        )
        .unwrap();
        let g = c.finite_group(512).unwrap();
        let t = c.theta_map(&g).unwrap();
        assert_eq!(t.order(), 3);
        assert_eq!((t.theta_a, t.theta_b), (2, 1));
    }

    #[test]
    fn quaternion_images() {
        let c = validate(
            GroupSpec::Quaternion { i: 3 },
            Some(ThetaSpec::standard(1, 1, 1, 1)),
        )
        .unwrap();
        let g = c.finite_group(512).unwrap();
        let t = c.theta_map(&g).unwrap();
        assert_eq!(t.theta_q, Some(((1, 0), (1, 1))));
    }
}
