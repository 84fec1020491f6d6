//! Exhaustive ground truth over `[n]^m`.
//!
//! Work is split by the first car's preference and fanned out with rayon.
//! Partial results are merged by exact addition, so the answer does not
//! depend on the thread count.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::Result;
use crate::parking::drive;
use crate::types::{saturating_pow, Ceiling, Count, OutcomeWord, Params};
use crate::words::{next_tuple, next_weakly_increasing};

/// Number of successful preference lists for each outcome word.
pub type FiberHistogram = BTreeMap<OutcomeWord, Count>;

/// Counts `α ∈ [n]^m` that park under the pullback rule.
///
/// Returns 0 when `m > n`, 1 when `m = 0`.
pub fn count_by_enumeration(params: &Params, ceiling: Ceiling) -> Result<Count> {
    let Params { m, n, k, l } = *params;
    if m > n {
        return Ok(BigUint::zero());
    }
    ceiling.check("exhaustive enumeration", saturating_pow(n, m))?;
    Ok(count_lists(m, n, k, l, false))
}

/// Counts `α ∈ [b]^a` that park in `1..=b` without backing into spot 0.
pub fn count_contained_by_enumeration(
    cars: usize,
    spots: usize,
    k: usize,
    l: usize,
    ceiling: Ceiling,
) -> Result<Count> {
    if cars > spots {
        return Ok(BigUint::zero());
    }
    ceiling.check(
        "exhaustive contained enumeration",
        saturating_pow(spots, cars),
    )?;
    Ok(count_lists(cars, spots, k, l, true))
}

/// Groups every successful preference list by its outcome word.
pub fn fiber_histogram(params: &Params, ceiling: Ceiling) -> Result<FiberHistogram> {
    let Params { m, n, k, l } = *params;
    if m > n {
        return Ok(FiberHistogram::new());
    }
    ceiling.check("outcome histogram", saturating_pow(n, m))?;
    if m == 0 {
        let mut h = FiberHistogram::new();
        h.insert(OutcomeWord::from_raw(vec![0; n]), BigUint::from(1u32));
        return Ok(h);
    }
    let parts: Vec<BTreeMap<Vec<usize>, u64>> = (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut local = BTreeMap::new();
            let mut list = vec![1; m];
            list[0] = first;
            let mut street = vec![0; n + 1];
            loop {
                street.fill(0);
                if drive(&list, n, k, l, false, &mut street, None).is_success() {
                    *local.entry(street[1..].to_vec()).or_insert(0u64) += 1;
                }
                if !next_tuple(&mut list, n, 1) {
                    break;
                }
            }
            local
        })
        .collect();
    let mut merged = FiberHistogram::new();
    for part in parts {
        for (word, c) in part {
            *merged
                .entry(OutcomeWord::from_raw(word))
                .or_insert_with(BigUint::zero) += c;
        }
    }
    Ok(merged)
}

/// Counts weakly increasing `a_1 ≤ … ≤ a_m` that park under the pullback rule.
pub fn count_weakly_increasing(params: &Params, ceiling: Ceiling) -> Result<Count> {
    let Params { m, n, k, l } = *params;
    if m > n {
        return Ok(BigUint::zero());
    }
    // multichoose(n, m) ≤ n^m; the cheaper bound is good enough for a guard
    ceiling.check("weakly increasing enumeration", saturating_pow(n, m))?;
    if m == 0 {
        return Ok(BigUint::from(1u32));
    }
    let mut list = vec![1; m];
    let mut street = vec![0; n + 1];
    let mut total: u64 = 0;
    loop {
        street.fill(0);
        if drive(&list, n, k, l, false, &mut street, None).is_success() {
            total += 1;
        }
        if !next_weakly_increasing(&mut list, n) {
            break;
        }
    }
    Ok(BigUint::from(total))
}

/// Counts preference lists whose outcome is exactly `word`.
///
/// Depth-first over every car's `n` possible preferences, simulating each
/// choice and cutting a branch as soon as a car lands somewhere other than its
/// spot in `word`. Cost is `O(m · n)` simulations per surviving prefix, which
/// makes single fibers of large words cheap to check.
pub fn count_fiber_by_enumeration(word: &OutcomeWord, k: usize, l: usize) -> Result<Count> {
    let n = word.len();
    let m = word.cars();
    let targets: Vec<usize> = (1..=m)
        .map(|c| word.spot_of(c).expect("valid word"))
        .collect();
    let mut street = vec![0; n + 1];
    Ok(BigUint::from(fiber_dfs(&targets, 0, n, k, l, &mut street)))
}

fn fiber_dfs(
    targets: &[usize],
    car: usize,
    n: usize,
    k: usize,
    l: usize,
    street: &mut [usize],
) -> u128 {
    if car == targets.len() {
        return 1;
    }
    let mut total = 0;
    for pref in 1..=n {
        let snapshot = street.to_vec();
        // a one-car run writes label 1; the target spot is vacant before this car
        let status = drive(&[pref], n, k, l, false, street, None);
        let landed = status.is_success() && street[targets[car]] == 1;
        if landed {
            street[targets[car]] = car + 1;
            total += fiber_dfs(targets, car + 1, n, k, l, street);
        }
        street.copy_from_slice(&snapshot);
    }
    total
}

fn count_lists(m: usize, n: usize, k: usize, l: usize, contained: bool) -> Count {
    if m == 0 {
        return BigUint::from(1u32);
    }
    let total: u128 = (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut list = vec![1; m];
            list[0] = first;
            let mut street = vec![0; n + 1];
            let mut hits: u128 = 0;
            loop {
                street.fill(0);
                if drive(&list, n, k, l, contained, &mut street, None).is_success() {
                    hits += 1;
                }
                if !next_tuple(&mut list, n, 1) {
                    break;
                }
            }
            hits
        })
        .sum();
    BigUint::from(total)
}
