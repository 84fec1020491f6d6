//! Counting through outcome words.
//!
//! For a fixed outcome word every car's set of admissible preferences depends
//! only on the cars parked next to it before it arrived. A car at position `i`
//! can
//!
//! * prefer its own spot,
//! * prefer one of the first `k` spots of the run of earlier cars directly to
//!   its right and back into `i` (`B`), or
//! * prefer a spot inside the run of earlier cars directly to its left, back
//!   up through it without finding a vacancy, and then pull forward into `i`
//!   within `l` spots (`F`).
//!
//! The fiber size is the product of `B + F + 1` over all positions (vacant
//! positions contribute 1), and summing fibers over `S_{m,n}` gives the count.
//!
//! Contained counts use the same product on words with a vacant spot 0 in
//! front, so a left run can never reach the start of the street.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::types::{falling_factorial, join, Ceiling, Count, OutcomeWord, Params};
use crate::words::{for_each_word_with_head, heads, OutcomeWords};

/// Which formula `F` uses. `Swapped` exchanges the two nonzero branches and
/// exists only so the verification harness can prove it notices a wrong
/// formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum FRule {
    Standard,
    Swapped,
}

// ---------------------------------------------------------------------------
// slice kernels (0-based indices)

fn right_len(w: &[usize], idx: usize) -> usize {
    let car = w[idx];
    w[idx + 1..]
        .iter()
        .take_while(|&&c| c != 0 && c < car)
        .count()
}

fn left_len(w: &[usize], idx: usize) -> usize {
    let car = w[idx];
    w[..idx]
        .iter()
        .rev()
        .take_while(|&&c| c != 0 && c < car)
        .count()
}

fn b_at(w: &[usize], idx: usize, k: usize) -> usize {
    if w[idx] == 0 {
        0
    } else {
        right_len(w, idx).min(k)
    }
}

/// `street_start` is true when spot `idx = 0` is the first spot of the real
/// street, so a left run covering every earlier position ends at the street
/// start rather than at a vacancy.
fn f_at(w: &[usize], idx: usize, k: usize, l: usize, street_start: bool, rule: FRule) -> usize {
    if w[idx] == 0 {
        return 0;
    }
    let left = left_len(w, idx);
    if left == 0 {
        return 0;
    }
    let reaches_start = street_start && left == idx;
    let reaches_start = match rule {
        FRule::Standard => reaches_start,
        FRule::Swapped => !reaches_start,
    };
    if reaches_start {
        // every spot to the left is taken: k is irrelevant
        idx.min(l)
    } else {
        left.saturating_sub(k).min(l)
    }
}

fn pref_at(w: &[usize], idx: usize, k: usize, l: usize, street_start: bool, rule: FRule) -> usize {
    if w[idx] == 0 {
        1
    } else {
        b_at(w, idx, k) + f_at(w, idx, k, l, street_start, rule) + 1
    }
}

/// Running exact sum that stays in `u128` until it would overflow.
#[derive(Default)]
struct Tally {
    small: u128,
    big: BigUint,
}

impl Tally {
    fn add(&mut self, v: u128) {
        match self.small.checked_add(v) {
            Some(s) => self.small = s,
            None => {
                self.big += self.small;
                self.small = v;
            }
        }
    }

    fn add_big(&mut self, v: BigUint) {
        self.big += v;
    }

    fn finish(self) -> BigUint {
        self.big + self.small
    }
}

fn product_into(
    w: &[usize],
    k: usize,
    l: usize,
    street_start: bool,
    rule: FRule,
    tally: &mut Tally,
) {
    let mut acc: u128 = 1;
    for idx in 0..w.len() {
        let f = pref_at(w, idx, k, l, street_start, rule) as u128;
        match acc.checked_mul(f) {
            Some(v) => acc = v,
            None => {
                let mut big = BigUint::from(acc) * f;
                for rest in idx + 1..w.len() {
                    big *= pref_at(w, rest, k, l, street_start, rule);
                }
                tally.add_big(big);
                return;
            }
        }
    }
    tally.add(acc);
}

fn product(w: &[usize], k: usize, l: usize, street_start: bool, rule: FRule) -> Count {
    let mut t = Tally::default();
    product_into(w, k, l, street_start, rule, &mut t);
    t.finish()
}

/// Sums the fiber product over `S_{m,n}`. With `street_start = false` every
/// word is read as if a vacant spot preceded it.
fn sum_over_words(
    m: usize,
    n: usize,
    k: usize,
    l: usize,
    street_start: bool,
    rule: FRule,
) -> Count {
    if m > n {
        return BigUint::zero();
    }
    if m == 0 {
        return BigUint::one();
    }
    heads(m, n)
        .into_par_iter()
        .map(|head| {
            let mut tally = Tally::default();
            for_each_word_with_head(m, n, head, |w| {
                product_into(w, k, l, street_start, rule, &mut tally)
            });
            tally.finish()
        })
        .reduce(BigUint::zero, |a, b| a + b)
}

// ---------------------------------------------------------------------------
// public surface on outcome words (1-based positions)

fn car_index(word: &OutcomeWord, i: usize) -> Result<usize> {
    let idx = position_index(word, i)?;
    if word.as_slice()[idx] == 0 {
        return Err(Error::VacantPosition(i));
    }
    Ok(idx)
}

fn position_index(word: &OutcomeWord, i: usize) -> Result<usize> {
    if i == 0 || i > word.len() {
        return Err(Error::PositionOutOfRange {
            position: i,
            len: word.len(),
        });
    }
    Ok(i - 1)
}

/// Length of the run of earlier cars parked immediately right of position `i`.
pub fn right_run(word: &OutcomeWord, i: usize) -> Result<usize> {
    let idx = car_index(word, i)?;
    Ok(right_len(word.as_slice(), idx))
}

/// Length of the run of earlier cars parked immediately left of position `i`.
pub fn left_run(word: &OutcomeWord, i: usize) -> Result<usize> {
    let idx = car_index(word, i)?;
    Ok(left_len(word.as_slice(), idx))
}

/// Preferences from which the car at `i` backs into its spot: `min(Right, k)`.
pub fn b_count(word: &OutcomeWord, i: usize, k: usize) -> Result<usize> {
    let idx = position_index(word, i)?;
    Ok(b_at(word.as_slice(), idx, k))
}

/// Preferences from which the car at `i` pulls forward into its spot.
///
/// * 0 for a vacant spot or an empty left run,
/// * `min(i - 1, l)` when every spot left of `i` is taken,
/// * `max(min(Left - k, l), 0)` otherwise.
pub fn f_count(word: &OutcomeWord, i: usize, k: usize, l: usize) -> Result<usize> {
    let idx = position_index(word, i)?;
    Ok(f_at(word.as_slice(), idx, k, l, true, FRule::Standard))
}

/// `B + F + 1` for a car; 1 for a vacant spot.
pub fn pref_count(word: &OutcomeWord, i: usize, k: usize, l: usize) -> Result<usize> {
    let idx = position_index(word, i)?;
    Ok(pref_at(word.as_slice(), idx, k, l, true, FRule::Standard))
}

/// Number of preference lists with outcome `word`.
pub fn fiber_size(word: &OutcomeWord, k: usize, l: usize) -> Count {
    product(word.as_slice(), k, l, true, FRule::Standard)
}

/// `|PF_{m,n}(k, l)|` as a sum of fiber sizes over all outcome words.
pub fn total_count(params: &Params, ceiling: Ceiling) -> Result<Count> {
    total_count_with(params, ceiling, FRule::Standard)
}

pub(crate) fn total_count_with(params: &Params, ceiling: Ceiling, rule: FRule) -> Result<Count> {
    let Params { m, n, k, l } = *params;
    if m <= n {
        ceiling.check("sum over outcome words", falling_factorial(n, m))?;
    }
    Ok(sum_over_words(m, n, k, l, true, rule))
}

/// Every outcome word of `S_{m,n}` in lexicographic order with its fiber size.
pub fn outcome_fibers(params: &Params, ceiling: Ceiling) -> Result<Vec<(OutcomeWord, Count)>> {
    let Params { m, n, k, l } = *params;
    if m > n {
        return Ok(Vec::new());
    }
    ceiling.check("outcome listing", falling_factorial(n, m))?;
    Ok(OutcomeWords::new(m, n)
        .map(|w| {
            let size = fiber_size(&w, k, l);
            (w, size)
        })
        .collect())
}

/// Fiber size under the classical rule for a permutation of `1..=n`:
/// the product over `i` of the longest window ending at `i` whose entries are
/// all at most `σ_i`.
pub fn classical_fiber_size(perm: &[usize]) -> Result<Count> {
    let n = perm.len();
    let mut seen = vec![false; n + 1];
    for &v in perm {
        if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidWord(format!(
                "`{}` is not a permutation of 1..={n}",
                join(perm)
            )));
        }
    }
    let mut acc = BigUint::one();
    for i in 0..n {
        let mut start = i;
        while start > 0 && perm[start - 1] <= perm[i] {
            start -= 1;
        }
        acc *= i - start + 1;
    }
    Ok(acc)
}

/// `|PF_{m,n}(k)|` under the k-Naples rule (`l = n - 1`).
pub fn knaples_count(m: usize, n: usize, k: usize, ceiling: Ceiling) -> Result<Count> {
    total_count(&Params::naples(m, n, k), ceiling)
}

/// `|PF_{m,n}(1, 1)|`, the vacillating rule.
pub fn vacillating_count(m: usize, n: usize, ceiling: Ceiling) -> Result<Count> {
    total_count(&Params::vacillating(m, n), ceiling)
}

// ---------------------------------------------------------------------------
// contained words

/// An outcome on a stretch of street preceded by a permanently vacant spot:
/// `π_0 = 0`, then the cars of some label set (not necessarily `1..=t`).
///
/// Interior zeros are further vacant spots; square words (one car per spot)
/// have none.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ContainedOutcomeWord(Vec<usize>);

impl ContainedOutcomeWord {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.first() != Some(&0) {
            return Err(Error::InvalidWord(
                "a contained word must start with the vacant spot 0".into(),
            ));
        }
        let mut labels = BTreeSet::new();
        for &c in &entries[1..] {
            if c != 0 && !labels.insert(c) {
                return Err(Error::InvalidWord(format!("label {c} appears twice")));
            }
        }
        Ok(ContainedOutcomeWord(entries))
    }

    /// Prepends the vacant spot to `cars`.
    pub fn prepend_zero(cars: &[usize]) -> Result<Self> {
        let mut entries = Vec::with_capacity(cars.len() + 1);
        entries.push(0);
        entries.extend_from_slice(cars);
        ContainedOutcomeWord::new(entries)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Spots after the prepended zero.
    pub fn spots(&self) -> usize {
        self.0.len() - 1
    }

    /// The car labels, `T`.
    pub fn labels(&self) -> BTreeSet<usize> {
        self.0.iter().copied().filter(|&c| c != 0).collect()
    }
}

impl fmt::Display for ContainedOutcomeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

/// Number of contained preference lists producing `word` on positions
/// `1..=t`. Left runs stop at the vacant spot 0, so `F` always takes the
/// `max(min(Left - k, l), 0)` branch.
pub fn contained_fiber_size(word: &ContainedOutcomeWord, k: usize, l: usize) -> Count {
    product(&word.as_slice()[1..], k, l, false, FRule::Standard)
}

/// `|C_{t,t}(k, l)|` summed over prepended-zero permutations of `t` cars.
pub fn contained_count_square(t: usize, k: usize, l: usize, ceiling: Ceiling) -> Result<Count> {
    contained_count(t, t, k, l, ceiling)
}

/// `|C_{a,b}(k, l)|`: `a` cars on `b` spots behind a vacant spot 0.
///
/// Sums [`contained_fiber_size`] over every word `0 · w` with `w ∈ S_{a,b}`,
/// reading each interior zero as one more vacancy. Returns 0 for `a > b` and
/// 1 for `a = 0`.
pub fn contained_count(
    cars: usize,
    spots: usize,
    k: usize,
    l: usize,
    ceiling: Ceiling,
) -> Result<Count> {
    if cars <= spots {
        ceiling.check("sum over contained words", falling_factorial(spots, cars))?;
    }
    Ok(sum_over_words(cars, spots, k, l, false, FRule::Standard))
}

/// `|C_{t,t}(k, l)|` for `t = 0..=max_t`.
///
/// The last car to arrive in a square contained word is its largest label.
/// Every car to its left has its right run cut at it and every car to its
/// right has its left run cut at it, so the two sides are independent square
/// contained words and the sum factors.
pub fn contained_square_table(max_t: usize, k: usize, l: usize) -> Vec<Count> {
    let pascal = pascal_rows(max_t);
    let mut table: Vec<Count> = vec![BigUint::one()];
    for t in 1..=max_t {
        let mut total = BigUint::zero();
        for left in 0..t {
            let right = t - 1 - left;
            let prefs = 1 + right.min(k) + left.saturating_sub(k).min(l);
            total += &pascal[t - 1][left] * &table[left] * &table[right] * prefs;
        }
        table.push(total);
    }
    table
}

/// `|C_{a,b}(k, l)|` without enumerating words.
///
/// A contained word is a sequence of maximal runs of cars separated by
/// vacant spots; each run contributes a square contained count and the
/// labels are shared among runs by binomial choices. Agrees with
/// [`contained_count`] everywhere and runs in polynomial time.
pub fn contained_count_by_runs(cars: usize, spots: usize, k: usize, l: usize) -> Count {
    if cars > spots {
        return BigUint::zero();
    }
    let square = contained_square_table(cars, k, l);
    let pascal = pascal_rows(cars);
    // g[a][b]: words of b spots holding a cars, preceded by a vacancy
    let mut g: Vec<Vec<Count>> = vec![vec![BigUint::zero(); spots + 1]; cars + 1];
    for b in 0..=spots {
        g[0][b] = BigUint::one();
        for a in 1..=cars.min(b) {
            let mut total = if a < b {
                g[a][b - 1].clone()
            } else {
                BigUint::zero()
            };
            for t in 1..=a {
                let rest = if t == b {
                    if a == t {
                        BigUint::one()
                    } else {
                        continue;
                    }
                } else if t < b && a < b {
                    g[a - t][b - t - 1].clone()
                } else {
                    continue;
                };
                total += &pascal[a][t] * &square[t] * rest;
            }
            g[a][b] = total;
        }
    }
    g[cars][spots].clone()
}

fn pascal_rows(max: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    for n in 1..=max {
        let prev = &rows[n - 1];
        let mut row = vec![BigUint::one(); n + 1];
        for j in 1..n {
            row[j] = &prev[j - 1] + &prev[j];
        }
        rows.push(row);
    }
    rows
}

// ---------------------------------------------------------------------------
// subinterval decomposition

/// The occupied spots of a word split into maximal runs of consecutive spots,
/// with the cars parked in each run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubintervalDecomposition {
    /// Occupied spots, ascending, 1-based.
    pub occupied: Vec<usize>,
    /// Maximal runs of consecutive occupied spots.
    pub runs: Vec<Vec<usize>>,
    /// Cars in each run, in street order.
    pub cars: Vec<Vec<usize>>,
}

impl SubintervalDecomposition {
    pub fn lengths(&self) -> Vec<usize> {
        self.runs.iter().map(Vec::len).collect()
    }

    pub fn car_sets(&self) -> Vec<BTreeSet<usize>> {
        self.cars
            .iter()
            .map(|c| c.iter().copied().collect())
            .collect()
    }
}

pub fn decompose(word: &OutcomeWord) -> SubintervalDecomposition {
    let mut runs: Vec<Vec<usize>> = Vec::new();
    let mut cars: Vec<Vec<usize>> = Vec::new();
    let mut occupied = Vec::new();
    let mut prev_occupied = false;
    for (idx, &c) in word.as_slice().iter().enumerate() {
        if c == 0 {
            prev_occupied = false;
            continue;
        }
        occupied.push(idx + 1);
        if !prev_occupied {
            runs.push(Vec::new());
            cars.push(Vec::new());
        }
        runs.last_mut().unwrap().push(idx + 1);
        cars.last_mut().unwrap().push(c);
        prev_occupied = true;
    }
    SubintervalDecomposition {
        occupied,
        runs,
        cars,
    }
}

/// Fiber size assembled run by run: a run starting at spot 1 is counted as an
/// ordinary street, every other run as a contained word. Agrees with
/// [`fiber_size`].
pub fn fiber_size_by_subintervals(word: &OutcomeWord, k: usize, l: usize) -> Count {
    let parts = decompose(word);
    let mut acc = BigUint::one();
    for (spots, cars) in parts.runs.iter().zip(&parts.cars) {
        if spots[0] == 1 {
            acc *= product(cars, k, l, true, FRule::Standard);
        } else {
            let w = ContainedOutcomeWord::prepend_zero(cars).expect("distinct labels");
            acc *= contained_fiber_size(&w, k, l);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> OutcomeWord {
        s.parse().unwrap()
    }

    fn big(v: u64) -> Count {
        BigUint::from(v)
    }

    const EXAMPLE: &str = "0,8,1,3,4,0,0,5,6,7,2";

    #[test]
    fn runs_on_the_worked_example() {
        let w = word(EXAMPLE);
        assert_eq!(right_run(&w, 10).unwrap(), 1);
        assert_eq!(right_run(&w, 2).unwrap(), 3);
        assert_eq!(right_run(&w, 11).unwrap(), 0);
        assert_eq!(left_run(&w, 10).unwrap(), 2);
        assert_eq!(left_run(&w, 5).unwrap(), 2);
        assert_eq!(left_run(&w, 2).unwrap(), 0);
        assert_eq!(right_run(&w, 1), Err(Error::VacantPosition(1)));
        assert!(left_run(&w, 12).is_err());
        assert!(right_run(&w, 0).is_err());
    }

    #[test]
    fn b_and_f_on_the_worked_example() {
        let w = word(EXAMPLE);
        assert_eq!(b_count(&w, 10, 1).unwrap(), 1);
        assert_eq!(b_count(&w, 2, 1).unwrap(), 1);
        assert_eq!(b_count(&w, 1, 1).unwrap(), 0);
        assert_eq!(f_count(&w, 10, 1, 2).unwrap(), 1);
        assert_eq!(f_count(&w, 5, 1, 2).unwrap(), 1);
        assert_eq!(f_count(&w, 6, 1, 2).unwrap(), 0);
    }

    #[test]
    fn pref_counts_per_car() {
        let w = word(EXAMPLE);
        let per_car: Vec<usize> = (1..=8)
            .map(|car| pref_count(&w, w.spot_of(car).unwrap(), 1, 2).unwrap())
            .collect();
        assert_eq!(per_car, vec![1, 1, 1, 2, 1, 1, 3, 2]);
        assert_eq!(pref_count(&w, 1, 1, 2).unwrap(), 1);
        assert_eq!(fiber_size(&w, 1, 2), big(12));
    }

    #[test]
    fn first_position_has_no_forward_preferences() {
        let w = word("2,1,0");
        assert_eq!(f_count(&w, 1, 0, 2).unwrap(), 0);
        // all spots left of car 2 are taken: min(i - 1, l) regardless of k
        let w = word("1,2,0");
        assert_eq!(f_count(&w, 2, 5, 1).unwrap(), 1);
        assert_eq!(f_count(&w, 2, 0, 0).unwrap(), 0);
    }

    #[test]
    fn identity_word_classical() {
        for n in 1..=7usize {
            let id = OutcomeWord::new((1..=n).collect()).unwrap();
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(fiber_size(&id, 0, n - 1), big(fact));
            let rev: Vec<usize> = (1..=n).rev().collect();
            assert_eq!(classical_fiber_size(&rev).unwrap(), big(1));
            assert_eq!(classical_fiber_size(id.as_slice()).unwrap(), big(fact));
        }
        assert!(classical_fiber_size(&[1, 1]).is_err());
        assert!(classical_fiber_size(&[0, 1]).is_err());
    }

    #[test]
    fn single_car_fibers_are_one() {
        for n in 1..=5 {
            for w in crate::words::OutcomeWords::new(1, n) {
                assert_eq!(fiber_size(&w, 2, 3), big(1));
            }
        }
    }

    #[test]
    fn classical_totals() {
        for n in 1..=7usize {
            for m in 1..=n {
                let expect = (n + 1 - m) as u64 * ((n + 1) as u64).pow(m as u32 - 1);
                assert_eq!(
                    total_count(&Params::classical(m, n), Ceiling::DEFAULT).unwrap(),
                    big(expect)
                );
            }
        }
    }

    #[test]
    fn degenerate_totals() {
        assert_eq!(
            total_count(&Params::new(0, 4, 1, 1), Ceiling::DEFAULT).unwrap(),
            big(1)
        );
        assert_eq!(
            total_count(&Params::new(5, 4, 1, 1), Ceiling::DEFAULT).unwrap(),
            big(0)
        );
        assert!(total_count(&Params::new(9, 9, 1, 1), Ceiling(1000)).is_err());
    }

    #[test]
    fn contained_words() {
        let w = ContainedOutcomeWord::prepend_zero(&[2, 1]).unwrap();
        assert_eq!(contained_fiber_size(&w, 1, 1), big(2));
        let w = ContainedOutcomeWord::prepend_zero(&[1, 2]).unwrap();
        assert_eq!(contained_fiber_size(&w, 1, 1), big(1));
        let w = ContainedOutcomeWord::prepend_zero(&[7]).unwrap();
        assert_eq!(contained_fiber_size(&w, 3, 3), big(1));
        assert_eq!(w.labels(), BTreeSet::from([7]));
        assert!(ContainedOutcomeWord::new(vec![1, 0]).is_err());
        assert!(ContainedOutcomeWord::new(vec![0, 3, 3]).is_err());
    }

    #[test]
    fn contained_square_counts() {
        assert_eq!(
            contained_count_square(0, 1, 1, Ceiling::DEFAULT).unwrap(),
            big(1)
        );
        assert_eq!(
            contained_count_square(2, 1, 1, Ceiling::DEFAULT).unwrap(),
            big(3)
        );
        for t in 1..=6usize {
            let expect = ((t + 1) as u64).pow(t as u32 - 1);
            for k in 0..t {
                assert_eq!(
                    contained_count_square(t, k, t - 1, Ceiling::DEFAULT).unwrap(),
                    big(expect),
                    "t={t} k={k}"
                );
            }
        }
        assert_eq!(
            contained_count(3, 2, 1, 1, Ceiling::DEFAULT).unwrap(),
            big(0)
        );
        assert_eq!(
            contained_count(0, 5, 1, 1, Ceiling::DEFAULT).unwrap(),
            big(1)
        );
    }

    #[test]
    fn decomposition_of_a_gappy_word() {
        let w = word("0,2,3,6,0,0,1,5,4,0");
        let d = decompose(&w);
        assert_eq!(d.occupied, vec![2, 3, 4, 7, 8, 9]);
        assert_eq!(d.runs, vec![vec![2, 3, 4], vec![7, 8, 9]]);
        assert_eq!(d.lengths(), vec![3, 3]);
        assert_eq!(
            d.car_sets(),
            vec![BTreeSet::from([2, 3, 6]), BTreeSet::from([1, 4, 5])]
        );
    }

    #[test]
    fn subinterval_product_matches_direct_fiber() {
        let w = word(EXAMPLE);
        assert_eq!(fiber_size_by_subintervals(&w, 1, 2), big(12));
        let w = word("3,1,0,2");
        for k in 0..4 {
            for l in 0..4 {
                assert_eq!(fiber_size_by_subintervals(&w, k, l), fiber_size(&w, k, l));
            }
        }
    }

    #[test]
    fn swapped_rule_differs() {
        let p = Params::new(2, 2, 1, 1);
        let good = total_count_with(&p, Ceiling::DEFAULT, FRule::Standard).unwrap();
        let bad = total_count_with(&p, Ceiling::DEFAULT, FRule::Swapped).unwrap();
        assert_eq!(good, big(4));
        assert_ne!(good, bad);
    }

    #[test]
    fn outcome_listing_sums_to_total() {
        let p = Params::new(2, 3, 1, 1);
        let rows = outcome_fibers(&p, Ceiling::DEFAULT).unwrap();
        assert_eq!(rows.len(), 6);
        assert!(rows.windows(2).all(|w| w[0].0 < w[1].0));
        let sum: BigUint = rows.iter().map(|r| &r.1).sum();
        assert_eq!(sum, total_count(&p, Ceiling::DEFAULT).unwrap());
        assert!(outcome_fibers(&Params::new(3, 2, 0, 0), Ceiling::DEFAULT)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn run_decomposition_matches_word_sums() {
        for b in 0..=7 {
            for a in 0..=b + 1 {
                for k in 0..=b {
                    for l in 0..=b {
                        let words = contained_count(a, b, k, l, Ceiling::UNLIMITED).unwrap();
                        assert_eq!(
                            contained_count_by_runs(a, b, k, l),
                            words,
                            "({a},{b},{k},{l})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn square_table_reaches_large_lengths() {
        for k in [0, 1, 5, 40] {
            let table = contained_square_table(30, k, 29);
            for (t, v) in table.iter().enumerate().skip(1) {
                assert_eq!(*v, BigUint::from(t + 1).pow(t as u32 - 1), "t={t} k={k}");
            }
        }
    }
}
