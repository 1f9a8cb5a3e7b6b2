use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::IntMatrix;
use super::snf::invariant_factors;

/// A finitely generated abelian group `Z^r ⊕ Z_{d_1} ⊕ … ⊕ Z_{d_k}` in
/// invariant-factor form: every `d_t ≥ 2` and `d_t | d_{t+1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FinAb {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl FinAb {
    pub fn trivial() -> Self {
        FinAb::default()
    }

    pub fn free(rank: usize) -> Self {
        FinAb {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        Self::from_cyclic_orders(0, [order])
    }

    /// Normalizes an arbitrary direct sum of cyclic groups. An order of 0
    /// stands for a copy of `Z`; orders of 1 vanish.
    pub fn from_cyclic_orders<I, T>(free_rank: usize, orders: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut free = free_rank;
        let mut finite = Vec::new();
        for o in orders {
            let o: BigInt = o.into();
            let o = o.abs();
            if o.is_zero() {
                free += 1;
            } else if !o.is_one() {
                finite.push(o);
            }
        }
        if finite.len() <= 1 {
            return FinAb {
                free_rank: free,
                torsion: finite,
            };
        }
        let n = finite.len();
        let diag = IntMatrix::from_entries(
            n,
            n,
            finite.into_iter().enumerate().map(|(i, x)| (i, i, x)),
        );
        let torsion = invariant_factors(&diag)
            .into_iter()
            .filter(|x| !x.is_one())
            .collect();
        FinAb {
            free_rank: free,
            torsion,
        }
    }

    /// Direct sum.
    pub fn sum(&self, other: &FinAb) -> FinAb {
        FinAb::from_cyclic_orders(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    /// Torsion coefficients as machine integers, when they fit.
    pub fn torsion_u64(&self) -> Option<Vec<u64>> {
        self.torsion.iter().map(ToPrimitive::to_u64).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of a finite group; `None` when the free rank is positive.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    /// Number of cyclic generators (torsion first, then free).
    pub fn num_generators(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    /// Additive orders of the generators, with 0 for free generators.
    pub fn generator_orders(&self) -> Vec<BigInt> {
        self.torsion
            .iter()
            .cloned()
            .chain(std::iter::repeat_n(BigInt::zero(), self.free_rank))
            .collect()
    }
}

impl fmt::Display for FinAb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z_{d}")));
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse abelian group from {0:?}")]
pub struct ParseFinAbError(String);

impl FromStr for FinAb {
    type Err = ParseFinAbError;

    /// Parses the rendering produced by `Display` (and any other order of
    /// summands, with `+` accepted for `⊕`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseFinAbError(s.to_string());
        let s = s.trim();
        if s == "0" {
            return Ok(FinAb::trivial());
        }
        let mut free = 0usize;
        let mut orders: Vec<BigInt> = Vec::new();
        for part in s.split(['⊕', '+']) {
            let part = part.trim();
            if part == "Z" {
                free += 1;
            } else if let Some(r) = part.strip_prefix("Z^") {
                free += r.parse::<usize>().map_err(|_| err())?;
            } else if let Some(d) = part.strip_prefix("Z_") {
                let d = d.trim_start_matches('{').trim_end_matches('}');
                orders.push(d.parse::<BigInt>().map_err(|_| err())?);
            } else {
                return Err(err());
            }
        }
        if orders.iter().any(|d| !d.is_positive()) {
            return Err(err());
        }
        Ok(FinAb::from_cyclic_orders(free, orders))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coprime_orders_merge_and_ones_drop() {
        let g = FinAb::from_cyclic_orders(0, [5u64, 3, 8, 1]);
        assert_eq!(g.torsion(), &[BigInt::from(120)]);
        let h = FinAb::from_cyclic_orders(0, [2u64, 2, 3]);
        assert_eq!(h.torsion(), &[BigInt::from(2), BigInt::from(6)]);
        assert_eq!(h.to_string(), "Z_2 ⊕ Z_6");
    }

    #[test]
    fn render_and_parse() {
        for g in [
            FinAb::trivial(),
            FinAb::free(1),
            FinAb::from_cyclic_orders(2, [4u64, 2]),
        ] {
            assert_eq!(g.to_string().parse::<FinAb>().unwrap(), g);
        }
        assert_eq!("Z_3 + Z_7".parse::<FinAb>().unwrap(), FinAb::cyclic(21));
        assert!("Q".parse::<FinAb>().is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(FinAb::cyclic(8).order(), Some(BigInt::from(8)));
        assert_eq!(FinAb::free(1).order(), None);
        assert_eq!(FinAb::trivial().order(), Some(BigInt::one()));
    }
}
