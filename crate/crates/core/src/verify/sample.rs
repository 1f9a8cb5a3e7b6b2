//! Seeded samplers of valid specs with twists.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::arith::{gcd, pow_mod};
use crate::group::{validate, CheckedSpec, GroupSpec, ThetaSpec};

/// Residues `r` with `r^b ≡ 1` and `gcd(a, (r-1)b) = 1`.
fn metacyclic_roots(a: u64, b: u64) -> Vec<u64> {
    (1..a)
        .filter(|&r| pow_mod(r, b, a) == 1 && gcd(a, (r + a - 1) % a * b % a) == 1)
        .collect()
}

fn units(m: u64) -> Vec<u64> {
    if m == 1 {
        return vec![0];
    }
    (1..m).filter(|&x| gcd(x, m) == 1).collect()
}

/// A twisted metacyclic spec with `2 ≤ a ≤ a_max`, `b ≤ b_max` and
/// `ab ≤ 512`, drawn until every condition holds.
pub fn metacyclic<R: Rng>(rng: &mut R, a_max: u64, b_max: u64) -> CheckedSpec {
    loop {
        let a = rng.gen_range(2..=a_max.max(2));
        let b = rng.gen_range(2..=b_max.max(2));
        if gcd(a, b) != 1 || a * b > 512 {
            continue;
        }
        let Some(&r) = metacyclic_roots(a, b).choose(rng) else {
            continue;
        };
        let c_a = *units(a).choose(rng).expect("units exist");
        let c_b = *units(b).choose(rng).expect("units exist");
        let c = rng.gen_range(0..a);
        let spec = GroupSpec::Metacyclic { a, b, r };
        if let Ok(s) = validate(spec, Some(ThetaSpec::metacyclic(c, c_a, c_b))) {
            return s;
        }
    }
}

/// A twisted `Z_a ⋊ (Z_b × Q_{2^i})` spec with a standard quaternion twist.
pub fn quaternionic<R: Rng>(rng: &mut R, a_max: u64, b_max: u64) -> CheckedSpec {
    let odd = |rng: &mut R, max: u64| 2 * rng.gen_range(0..=(max.max(1) - 1) / 2) + 1;
    loop {
        let a = odd(rng, a_max);
        let b = odd(rng, b_max);
        let i = rng.gen_range(3..=4u32);
        if gcd(a, b) != 1 || a * b * (1 << i) > 512 {
            continue;
        }
        let involutions: Vec<u64> = (1..=a).map(|x| x % a).filter(|&x| pow_mod(x, 2, a) == 1 % a).collect();
        let r_x = *involutions.choose(rng).expect("1 is an involution");
        let r_y = *involutions.choose(rng).expect("1 is an involution");
        let rs: Vec<u64> = (1..=a)
            .map(|x| x % a)
            .filter(|&r| pow_mod(r, b, a) == 1 % a && gcd(r, a) == 1)
            .collect();
        let Some(&r) = rs.choose(rng) else { continue };
        let spec = GroupSpec::ZaZbQ {
            a,
            b,
            i,
            r,
            r_x,
            r_y,
        };
        let q = 1u64 << i;
        let k = 2 * rng.gen_range(0..q / 2) + 1;
        let ell = rng.gen_range(0..q / 2);
        let mut theta = ThetaSpec::standard(
            *units(a).choose(rng).expect("units exist"),
            *units(b).choose(rng).expect("units exist"),
            k,
            ell,
        );
        // translations by Z_a rarely survive the automorphism check
        if rng.gen_bool(0.25) {
            theta.c = rng.gen_range(0..a);
        }
        if let Ok(s) = validate(spec, Some(theta)) {
            return s;
        }
    }
}
