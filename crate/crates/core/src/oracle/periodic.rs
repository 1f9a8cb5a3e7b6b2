use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{subquotient, subquotient_mod, FinAb, IntMatrix};

/// A module over `Z_m = <t>`: `Z` (`modulus = 0`) or `Z_a`, with `t`
/// acting by multiplication by `multiplier`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicModule {
    pub modulus: u64,
    pub multiplier: u64,
}

impl CyclicModule {
    pub fn integers() -> Self {
        CyclicModule {
            modulus: 0,
            multiplier: 1,
        }
    }

    pub fn twisted(modulus: u64, multiplier: u64) -> Self {
        CyclicModule {
            modulus,
            multiplier,
        }
    }
}

/// `H^n(Z_m; M)` from the 2-periodic resolution, whose cochain maps
/// alternate multiplication by `t - 1` and by `N = 1 + t + … + t^{m-1}`.
pub fn periodic_cohomology(m: u64, module: CyclicModule, n: usize) -> Result<FinAb> {
    if m == 0 {
        return Err(Error::validation("m ≥ 1"));
    }
    let c = BigInt::from(module.multiplier);
    let t_minus_one: BigInt = &c - 1u32;
    let norm: BigInt = (0..m).map(|i| c.pow(i as u32)).sum();
    if module.modulus != 0 {
        let a = BigInt::from(module.modulus);
        // t^m must act trivially
        if !(c.pow(m as u32) - 1u32).mod_floor(&a).is_zero() {
            return Err(Error::validation("t^m acts trivially on the module"));
        }
    } else if module.multiplier != 1 {
        return Err(Error::Unsupported(
            "integral coefficients with a nontrivial action".to_string(),
        ));
    }
    let map = |deg: usize| if deg % 2 == 0 { t_minus_one.clone() } else { norm.clone() };
    let d_out = IntMatrix::from_big_rows(1, 1, vec![map(n)]);
    let d_in = match n {
        0 => IntMatrix::zeros(1, 0),
        _ => IntMatrix::from_big_rows(1, 1, vec![map(n - 1)]),
    };
    let sq = match module.modulus {
        0 => subquotient(&d_out, &d_in)?,
        a => {
            let a = BigInt::from(a);
            let reduce = |x: &IntMatrix| {
                IntMatrix::from_entries(
                    x.rows(),
                    x.cols(),
                    x.entries().map(|(i, j, v)| (i, j, v.mod_floor(&a))),
                )
            };
            subquotient_mod(
                &reduce(&d_out),
                &reduce(&d_in),
                std::slice::from_ref(&a),
                std::slice::from_ref(&a),
            )?
        }
    };
    Ok(sq.group().clone())
}
