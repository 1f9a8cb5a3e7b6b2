use std::fmt;

use crate::arith::pow_mod;

/// Normal form `u·1_a + v·1_b + x^s y^t`, i.e. the word `1_a^u 1_b^v x^s y^t`.
/// Unused coordinates are zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Element {
    pub u: u64,
    pub v: u64,
    pub s: u64,
    pub t: u8,
}

impl Element {
    pub const IDENTITY: Element = Element {
        u: 0,
        v: 0,
        s: 0,
        t: 0,
    };

    pub fn new(u: u64, v: u64, s: u64, t: u8) -> Self {
        Element { u, v, s, t }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, x^{} y^{})", self.u, self.v, self.s, self.t)
    }
}

/// The quaternion factor `Q_{2^i} = <x, y | x^{2^{i-2}} = y^2, xyx = y>`
/// together with the multipliers by which `x` and `y` act on `Z_a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuaternionPart {
    pub i: u32,
    pub r_x: u64,
    pub r_y: u64,
}

impl QuaternionPart {
    /// Order of `x`, `2^{i-1}`.
    pub fn x_order(&self) -> u64 {
        1 << (self.i - 1)
    }

    pub fn order(&self) -> u64 {
        1 << self.i
    }

    /// `(x^{s1} y^{t1}) (x^{s2} y^{t2})` in normal form, using `y x = x^{-1} y`.
    pub fn mul(&self, (s1, t1): (u64, u8), (s2, t2): (u64, u8)) -> (u64, u8) {
        let n = self.x_order();
        if t1 == 0 {
            return ((s1 + s2) % n, t2);
        }
        let s = (s1 + n - s2 % n) % n;
        if t2 == 1 {
            ((s + n / 2) % n, 0)
        } else {
            (s, 1)
        }
    }
}

/// Every supported finite group is `Z_a ⋊ (Z_b × Q)` with `Q` optional:
/// `1_b` acts on `Z_a` by `r`, `x` by `r_x` and `y` by `r_y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    pub a: u64,
    pub b: u64,
    pub r: u64,
    pub quaternion: Option<QuaternionPart>,
}

impl Presentation {
    pub fn order(&self) -> u64 {
        self.a * self.b * self.quaternion.map_or(1, |q| q.order())
    }

    /// Multiplier by which the image of `g` in `Z_b × Q` acts on `Z_a`.
    pub fn action_on_a(&self, g: &Element) -> u64 {
        let mut m = pow_mod(self.r, g.v, self.a);
        if let Some(q) = self.quaternion {
            m = m * pow_mod(q.r_x, g.s, self.a) % self.a.max(1);
            if g.t == 1 {
                m = m * (q.r_y % self.a) % self.a.max(1);
            }
        }
        m
    }

    pub fn multiply(&self, g: &Element, h: &Element) -> Element {
        let twist = self.action_on_a(g);
        let u = ((u128::from(twist) * u128::from(h.u) + u128::from(g.u)) % u128::from(self.a))
            as u64;
        let v = (g.v + h.v) % self.b;
        let (s, t) = match self.quaternion {
            Some(q) => q.mul((g.s, g.t), (h.s, h.t)),
            None => (0, 0),
        };
        Element { u, v, s, t }
    }

    pub fn contains(&self, g: &Element) -> bool {
        let q_ok = match self.quaternion {
            Some(q) => g.s < q.x_order() && g.t <= 1,
            None => g.s == 0 && g.t == 0,
        };
        g.u < self.a && g.v < self.b && q_ok
    }

    pub fn gen_a(&self) -> Element {
        Element::new(1 % self.a, 0, 0, 0)
    }

    pub fn gen_b(&self) -> Element {
        Element::new(0, 1 % self.b, 0, 0)
    }

    pub fn gen_x(&self) -> Option<Element> {
        self.quaternion
            .map(|q| Element::new(0, 0, 1 % q.x_order(), 0))
    }

    pub fn gen_y(&self) -> Option<Element> {
        self.quaternion.map(|_| Element::new(0, 0, 0, 1))
    }

    /// `g^n` by repeated squaring.
    pub fn pow(&self, g: &Element, mut n: u64) -> Element {
        let mut acc = Element::IDENTITY;
        let mut base = *g;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            base = self.multiply(&base, &base);
            n >>= 1;
        }
        acc
    }

    /// All elements in lexicographic normal-form order; the identity is first.
    pub fn elements(&self) -> Vec<Element> {
        let (n, tmax) = match self.quaternion {
            Some(q) => (q.x_order(), 2u8),
            None => (1, 1u8),
        };
        let mut out = Vec::with_capacity(self.order() as usize);
        for u in 0..self.a {
            for v in 0..self.b {
                for s in 0..n {
                    for t in 0..tmax {
                        out.push(Element { u, v, s, t });
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q8() -> Presentation {
        Presentation {
            a: 1,
            b: 1,
            r: 1,
            quaternion: Some(QuaternionPart { i: 3, r_x: 1, r_y: 1 }),
        }
    }

    #[test]
    fn quaternion_relations() {
        let p = q8();
        let x = p.gen_x().unwrap();
        let y = p.gen_y().unwrap();
        let xyx = p.multiply(&p.multiply(&x, &y), &x);
        assert_eq!(xyx, y);
        assert_eq!(p.pow(&x, 2), p.pow(&y, 2));
        assert_eq!(p.pow(&x, 4), Element::IDENTITY);
        assert_eq!(p.pow(&y, 4), Element::IDENTITY);
        assert_ne!(p.pow(&y, 2), Element::IDENTITY);
    }

    #[test]
    fn conjugation_by_b_is_multiplication_by_r() {
        let p = Presentation {
            a: 7,
            b: 3,
            r: 2,
            quaternion: None,
        };
        let b = p.gen_b();
        let b_inv = p.pow(&b, 2);
        let conj = p.multiply(&p.multiply(&b, &p.gen_a()), &b_inv);
        assert_eq!(conj, Element::new(2, 0, 0, 0));
    }
}
