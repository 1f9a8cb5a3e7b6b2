//! Residue arithmetic on machine integers for group parameters.

use num_integer::Integer;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a.lcm(&b)
    }
}

/// `base^exp mod m`; every value is 0 modulo 1.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    assert!(m > 0, "modulus must be positive");
    if m == 1 {
        return 0;
    }
    let m128 = u128::from(m);
    let mut b = u128::from(base) % m128;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// `gcd(x^j - 1, m)`, computed from the residue of `x^j` (0 counts as `m`).
pub fn gcd_pow_minus_one(x: u64, j: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    let r = pow_mod(x, j, m);
    let diff = (r + m - 1) % m;
    gcd(diff, m)
}

/// Multiplicative order of `x` in the units of `Z_m` (1 when `m = 1`).
/// Returns `None` when `x` is not a unit.
pub fn mult_order(x: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(x % m, m) != 1 {
        return None;
    }
    let mut acc = x % m;
    let mut k = 1;
    while acc != 1 {
        acc = ((u128::from(acc) * u128::from(x)) % u128::from(m)) as u64;
        k += 1;
    }
    Some(k)
}

/// Nonnegative residue of a signed integer.
pub fn residue(x: i64, m: u64) -> u64 {
    x.rem_euclid(m as i64) as u64
}
