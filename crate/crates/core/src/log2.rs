//! Exact decisions involving binary logarithms of integers.
//!
//! `log2(b)` is an integer when `b` is a power of two and irrational
//! otherwise, so a comparison `q <=> a * log2(b)` is always decidable: the
//! integer case is exact, and the irrational case is resolved by
//! generating certified bits of `log2(b)` until the interval excludes `q`.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `⌈log2 n⌉` for `n >= 1`, i.e. the bit length of `n - 1`.
pub fn ceil_log2(n: u64) -> u32 {
    assert!(n >= 1, "ceil_log2 of 0");
    64 - (n - 1).leading_zeros()
}

/// Floating-point value of `a * log2(b)`, for display only.
pub fn mul_log2_approx(a: u64, b: u64) -> f64 {
    a as f64 * (b as f64).log2()
}

/// Certified leading bits of the fractional part of `log2(b)` for `b` not a
/// power of two: returns `(bits, count)` with
/// `bits / 2^count < frac(log2 b) < (bits + 1) / 2^count`.
///
/// Uses repeated squaring of `b / 2^k ∈ (1, 2)` on a lower and an upper
/// fixed-point bracket; a bit is emitted only while both brackets agree.
fn frac_log2_bits(b: u64, wanted: u32) -> (BigUint, u32) {
    let k = 63 - b.leading_zeros();
    let work = wanted as usize + 64;
    let two = BigUint::one() << (work + 1);
    let round_up = (BigUint::one() << work) - 1u32;

    // y = b / 2^k, scaled by 2^work.
    let mut lo = BigUint::from(b) << (work - k as usize);
    let mut hi = lo.clone();
    let mut bits = BigUint::zero();
    let mut count = 0;
    while count < wanted {
        lo = (&lo * &lo) >> work;
        hi = (&hi * &hi + &round_up) >> work;
        let bit = if lo >= two {
            lo >>= 1;
            hi = (hi + 1u32) >> 1;
            true
        } else if hi < two {
            false
        } else {
            break;
        };
        bits = (bits << 1) + u32::from(bit);
        count += 1;
    }
    (bits, count)
}

/// Compares `q` with `a * log2(b)` exactly. `b` must be positive.
pub fn cmp_with_mul_log2(q: u128, a: u64, b: u64) -> Ordering {
    assert!(b >= 1, "log2 of 0");
    if a == 0 || b == 1 {
        return q.cmp(&0);
    }
    let k = 63 - b.leading_zeros();
    let whole = a as u128 * k as u128;
    if b.is_power_of_two() {
        return q.cmp(&whole);
    }
    // a * log2(b) lies strictly between whole and whole + a.
    if q <= whole {
        return Ordering::Less;
    }
    let rest = q - whole;
    if rest >= a as u128 {
        return Ordering::Greater;
    }
    // Compare rest against a * frac(log2 b), both below a.
    let rest = BigUint::from(rest);
    let a = BigUint::from(a);
    let mut wanted = 64;
    loop {
        let (bits, count) = frac_log2_bits(b, wanted);
        let scaled = &rest << count as usize;
        if scaled <= &a * &bits {
            return Ordering::Less;
        }
        if scaled >= &a * (bits + 1u32) {
            return Ordering::Greater;
        }
        wanted *= 2;
    }
}

/// Smallest integer `m` with `m * d >= a * log2(b)`, i.e. `⌈a·log2(b)/d⌉`.
pub fn ceil_mul_log2_div(a: u64, b: u64, d: u64) -> u64 {
    assert!(d >= 1, "division by zero");
    let guess = (mul_log2_approx(a, b) / d as f64).ceil().max(0.0) as u64;
    let fits = |m: u64| cmp_with_mul_log2(m as u128 * d as u128, a, b) != Ordering::Less;
    let mut m = guess;
    while m > 0 && fits(m - 1) {
        m -= 1;
    }
    while !fits(m) {
        m += 1;
    }
    m
}
