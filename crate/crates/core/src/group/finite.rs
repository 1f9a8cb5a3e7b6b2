use super::element::{Element, Presentation};
use crate::error::{Error, Result};

/// An enumerated finite group with its multiplication table. Elements are
/// indexed in lexicographic normal-form order, so index 0 is the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    presentation: Presentation,
    elements: Vec<Element>,
    table: Vec<u32>,
    inverse: Vec<u32>,
}

impl FiniteGroup {
    pub fn enumerate(p: &Presentation, cap: usize) -> Result<Self> {
        let order = p.order();
        if order > cap as u64 {
            return Err(Error::Capacity {
                what: format!("group enumeration (order {order})"),
                size: order as usize,
                limit: cap,
            });
        }
        let elements = p.elements();
        let n = elements.len();
        let mut g = FiniteGroup {
            presentation: *p,
            elements,
            table: Vec::with_capacity(n * n),
            inverse: vec![0; n],
        };
        for x in 0..n {
            for y in 0..n {
                let z = p.multiply(&g.elements[x], &g.elements[y]);
                let idx = g.index_of(&z);
                g.table.push(idx as u32);
                if idx == 0 {
                    g.inverse[x] = y as u32;
                }
            }
        }
        Ok(g)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> Element {
        self.elements[idx]
    }

    /// Position of a normal-form element, computed from its coordinates.
    pub fn index_of(&self, g: &Element) -> usize {
        let p = &self.presentation;
        let (n, tmax) = match p.quaternion {
            Some(q) => (q.x_order(), 2),
            None => (1, 1),
        };
        let idx = ((g.u * p.b + g.v) * n + g.s) * tmax + u64::from(g.t);
        idx as usize
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.elements.len() + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x] as usize
    }

    pub fn pow(&self, x: usize, n: u64) -> usize {
        let mut acc = 0;
        for _ in 0..n {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> u64 {
        let mut acc = x;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    /// Multiplier by which `g` acts on `Z_a` through the quotient.
    pub fn action_on_a(&self, x: usize) -> u64 {
        self.presentation.action_on_a(&self.elements[x])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::spec::GroupSpec;

    #[test]
    fn orders_and_identity() {
        for (spec, n) in [
            (GroupSpec::Cyclic { m: 6 }, 6),
            (GroupSpec::Quaternion { i: 3 }, 8),
            (
                GroupSpec::ZaZbQ {
                    a: 5,
                    b: 3,
                    i: 3,
                    r: 1,
                    r_x: 4,
                    r_y: 4,
                },
                120,
            ),
        ] {
            let g = FiniteGroup::enumerate(&spec.presentation(), 512).unwrap();
            assert_eq!(g.order(), n);
            assert_eq!(g.element(0), Element::IDENTITY);
            for x in 0..n {
                assert_eq!(g.index_of(&g.element(x)), x);
                assert_eq!(g.mul(x, g.inv(x)), 0);
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let p = GroupSpec::Cyclic { m: 600 }.presentation();
        let e = FiniteGroup::enumerate(&p, 512).unwrap_err();
        assert!(e.to_string().contains("order 600"), "{e}");
    }
}
