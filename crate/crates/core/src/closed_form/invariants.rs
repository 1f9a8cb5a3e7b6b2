use serde::Serialize;

use crate::arith::{gcd, gcd_pow_minus_one, lcm, mult_order};
use crate::group::{CheckedSpec, Family, QuaternionTwist, ThetaSpec};

/// Matrix of `θ` on `H^2(Q_{2^i}; Z) ≅ Z_2 ⊕ Z_2`, computed from the map on
/// the abelianization in the basis `(x̄, ȳ)`; column `c` is the image of
/// basis vector `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct H2Action {
    pub matrix: [[u8; 2]; 2],
}

impl H2Action {
    pub fn identity() -> Self {
        H2Action {
            matrix: [[1, 0], [0, 1]],
        }
    }

    pub fn is_trivial(&self) -> bool {
        *self == Self::identity()
    }

    /// `T v` over `Z_2`.
    pub fn apply(&self, v: [u8; 2]) -> [u8; 2] {
        let m = &self.matrix;
        [
            (m[0][0] * v[0] + m[0][1] * v[1]) % 2,
            (m[1][0] * v[0] + m[1][1] * v[1]) % 2,
        ]
    }

    /// Nonzero vectors fixed by `T`.
    pub fn fixed_vectors(&self) -> Vec<[u8; 2]> {
        NONZERO.into_iter().filter(|&v| self.apply(v) == v).collect()
    }

    /// Nonzero vectors in the image of `T - I`.
    pub fn boundary_vectors(&self) -> Vec<[u8; 2]> {
        let mut out: Vec<[u8; 2]> = NONZERO
            .into_iter()
            .map(|v| {
                let t = self.apply(v);
                [(t[0] + v[0]) % 2, (t[1] + v[1]) % 2]
            })
            .filter(|w| *w != [0, 0])
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// `log_2` of the order of the invariants; it equals that of the
    /// coinvariants since `Z_2^2` is a vector space.
    pub fn fixed_rank(&self) -> u32 {
        match self.fixed_vectors().len() {
            0 => 0,
            1 => 1,
            _ => 2,
        }
    }

    /// Order of `T` in `GL_2(Z_2)`.
    pub fn order(&self) -> u64 {
        let mut m = *self;
        let mut k = 1;
        while !m.is_trivial() {
            m = m.compose(self);
            k += 1;
        }
        k
    }

    fn compose(&self, other: &H2Action) -> H2Action {
        let mut out = [[0u8; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                *x = (self.matrix[r][0] * other.matrix[0][c]
                    + self.matrix[r][1] * other.matrix[1][c])
                    % 2;
            }
        }
        H2Action { matrix: out }
    }
}

const NONZERO: [[u8; 2]; 3] = [[1, 0], [0, 1], [1, 1]];

/// Induced map of `θ_Q` on `(Q_{2^i})_ab = <x̄> ⊕ <ȳ>`.
pub fn q8_h2_action(theta: &ThetaSpec) -> H2Action {
    let (x, y) = match theta.twist {
        QuaternionTwist::Standard { k, ell } => ((k, 0u8), (ell, 1u8)),
        QuaternionTwist::General { x_image, y_image } => (x_image, y_image),
    };
    H2Action {
        matrix: [
            [(x.0 % 2) as u8, (y.0 % 2) as u8],
            [x.1 % 2, y.1 % 2],
        ],
    }
}

/// The gcd ladders and orders attached to a spec and its twist.
#[derive(Clone, Debug, Serialize)]
pub struct DerivedInvariants {
    pub family: FamilyTag,
    pub a: u64,
    pub b: u64,
    pub r: u64,
    pub r_x: u64,
    pub r_y: u64,
    /// Quaternion exponent `i`, when present.
    pub i: Option<u32>,
    pub c_a: u64,
    pub c_b: u64,
    /// `k` of a standard quaternion twist; `None` for a general one.
    pub k: Option<u64>,
    pub d: u64,
    pub d_ca: u64,
    pub d_cb: u64,
    pub d_k: u64,
    pub p: u64,
    pub h2_action: Option<H2Action>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FamilyTag {
    Metacyclic,
    Quaternionic,
}

impl DerivedInvariants {
    pub fn new(spec: &CheckedSpec) -> Self {
        let theta = spec.theta_or_identity();
        let p = &spec.presentation;
        let (r_x, r_y, i) = match p.quaternion {
            Some(q) => (q.r_x, q.r_y, Some(q.i)),
            None => (1 % p.a, 1 % p.a, None),
        };
        let family = match spec.spec.family() {
            Family::Metacyclic => FamilyTag::Metacyclic,
            Family::Quaternionic => FamilyTag::Quaternionic,
        };
        let unit_order = |x: u64, m: u64| mult_order(x, m).expect("validated unit");
        let d = unit_order(p.r, p.a);
        let d_ca = unit_order(theta.c_a, p.a);
        let d_cb = unit_order(theta.c_b, p.b);
        let k = match (i, theta.twist) {
            (Some(_), QuaternionTwist::Standard { k, .. }) => Some(k),
            _ => None,
        };
        let d_k = match (i, k) {
            (Some(i), Some(k)) => unit_order(k, 1 << i),
            _ => 1,
        };
        let period = match family {
            FamilyTag::Metacyclic => lcm(lcm(d, d_ca), d_cb),
            FamilyTag::Quaternionic => lcm(lcm(d, d_ca), lcm(d_cb, d_k)),
        };
        DerivedInvariants {
            family,
            a: p.a,
            b: p.b,
            r: p.r,
            r_x,
            r_y,
            i,
            c_a: theta.c_a,
            c_b: theta.c_b,
            k,
            d,
            d_ca,
            d_cb,
            d_k,
            p: period,
            h2_action: i.map(|_| q8_h2_action(&theta)),
        }
    }

    /// `δ_j = gcd(r^j - 1, a)`.
    pub fn delta(&self, j: u64) -> u64 {
        gcd_pow_minus_one(self.r, j, self.a)
    }

    /// `ε_j = gcd(a, r^j - 1, r_x^j - 1, r_y^j - 1)`; equal to `δ_j` in the
    /// metacyclic family.
    pub fn epsilon(&self, j: u64) -> u64 {
        let mut e = self.delta(j);
        if self.family == FamilyTag::Quaternionic {
            e = gcd(e, gcd_pow_minus_one(self.r_x, j, self.a));
            e = gcd(e, gcd_pow_minus_one(self.r_y, j, self.a));
        }
        e
    }

    /// Order of the `Z_a`-summand of `H^{2j}` of the finite kernel.
    pub fn ladder(&self, j: u64) -> u64 {
        self.epsilon(j)
    }

    /// `A_j = gcd(c_a^j - 1, ε_j)` (with `ε = δ` in the metacyclic family).
    pub fn a_j(&self, j: u64) -> u64 {
        gcd(gcd_pow_minus_one(self.c_a, j, self.a), self.ladder(j))
    }

    /// `B_j = gcd(c_b^j - 1, b)`.
    pub fn b_j(&self, j: u64) -> u64 {
        gcd_pow_minus_one(self.c_b, j, self.b)
    }

    /// `2^i`, the order of `H^4(Q_{2^i})`.
    pub fn two_i(&self) -> u64 {
        self.i.map_or(1, |i| 1 << i)
    }

    /// `C_j = gcd(k^j - 1, 2^i)`. A general `Q_8` twist is taken to act
    /// trivially on `H^4`, so its ladder is constantly 8.
    pub fn c_j(&self, j: u64) -> u64 {
        match (self.i, self.k) {
            (Some(i), Some(k)) => gcd_pow_minus_one(k, j, 1 << i),
            (Some(i), None) => 1 << i,
            _ => 1,
        }
    }

    /// Order of the quaternion summand of `H^{4m}` of the twisted group.
    pub fn q_top_order(&self, m: u64) -> u64 {
        self.c_j(2 * m)
    }

    /// Period of the cohomology of the infinite group.
    pub fn period(&self) -> u64 {
        match self.family {
            FamilyTag::Metacyclic => 2 * self.p,
            FamilyTag::Quaternionic if self.p % 2 == 0 => 2 * self.p,
            FamilyTag::Quaternionic => 4 * self.p,
        }
    }

    pub fn is_metacyclic(&self) -> bool {
        self.family == FamilyTag::Metacyclic
    }
}

/// Shorthand used by tests and callers that only hold a raw spec.
pub fn invariants(spec: &CheckedSpec) -> DerivedInvariants {
    DerivedInvariants::new(spec)
}
