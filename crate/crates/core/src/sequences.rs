//! Reference integer sequences computed from first principles, used to check
//! enumeration results without hard-coding their values.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Partial quotients `[a0; a1, a2, …]` of `√radicand`, by the standard
/// integer recurrence for quadratic surds.
///
/// For a perfect square the expansion is the single term `[√radicand]`.
pub fn sqrt_continued_fraction(radicand: u64, terms: usize) -> Vec<u64> {
    let a0 = isqrt(radicand);
    let mut out = Vec::with_capacity(terms);
    if terms == 0 {
        return out;
    }
    out.push(a0);
    if a0 * a0 == radicand {
        return out;
    }
    let (mut m, mut d, mut a) = (0u64, 1u64, a0);
    while out.len() < terms {
        m = d * a - m;
        d = (radicand - m * m) / d;
        a = (a0 + m) / d;
        out.push(a);
    }
    out
}

/// Numerators `h_0, h_1, …` of the convergents of `[a0; a1, …]`:
/// `h_j = a_j h_{j-1} + h_{j-2}` with `h_{-1} = 1`, `h_{-2} = 0`.
pub fn convergent_numerators(quotients: &[u64]) -> Vec<BigUint> {
    let mut prev2 = BigUint::zero();
    let mut prev1 = BigUint::one();
    quotients
        .iter()
        .map(|&a| {
            let h = &prev1 * a + &prev2;
            prev2 = std::mem::replace(&mut prev1, h.clone());
            h
        })
        .collect()
}

/// Numerators of the first `count` convergents of `√2`.
pub fn sqrt2_convergent_numerators(count: usize) -> Vec<BigUint> {
    convergent_numerators(&sqrt_continued_fraction(2, count))
}

fn isqrt(v: u64) -> u64 {
    let mut r = (v as f64).sqrt() as u64;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    r
}
