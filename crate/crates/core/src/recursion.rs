//! Recursive count of pullback parking functions.
//!
//! The count is split on the spot `i` where the last car parks and on how it
//! got there:
//!
//! * `Z(i, x)`: it preferred `i`. `x` earlier cars fill part of `1..i`, the rest
//!   park right of `i` without backing into it.
//! * `X(i)`, `V(i, x, R)`: it preferred a spot in the block of `R` cars right of
//!   `i` and backed in. `X` is the block reaching the street end, `V` a block
//!   followed by a vacancy.
//! * `Y(i)`, `W(i, x, R)`: it preferred a spot in the block of `R` cars left of
//!   `i`, found the `k` spots behind its preference taken, and pulled forward.
//!   `Y` is the block reaching spot 1, `W` a block preceded by a vacancy.
//!
//! Regions bounded on the left by a vacancy are counted with contained
//! parking functions, evaluated by
//! [`crate::perm_count::contained_count_by_runs`].
//! Out-of-range arguments (negative sizes, more cars than spots, invalid
//! binomials) contribute zero, so every sum runs over its full stated range.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::perm_count::contained_count_by_runs;
use crate::types::{serde_decimal, Count, Params};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MemoKind {
    Pf,
    Contained,
}

/// Memo table key with `k` and `l` clamped to `max(b - 1, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MemoKey {
    pub kind: MemoKind,
    pub cars: usize,
    pub spots: usize,
    pub k: usize,
    pub l: usize,
}

impl MemoKey {
    pub fn new(kind: MemoKind, cars: usize, spots: usize, k: usize, l: usize) -> Self {
        let cap = spots.saturating_sub(1);
        MemoKey {
            kind,
            cars,
            spots,
            k: k.min(cap),
            l: l.min(cap),
        }
    }
}

/// Case totals for one final spot `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermRow {
    pub i: usize,
    #[serde(with = "serde_decimal")]
    pub x: Count,
    #[serde(with = "serde_decimal")]
    pub y: Count,
    /// `Σ_x Z(i, x)`
    #[serde(with = "serde_decimal")]
    pub z: Count,
    /// `Σ_{x,R} V(i, x, R)`
    #[serde(with = "serde_decimal")]
    pub v: Count,
    /// `Σ_{x,R} W(i, x, R)`
    #[serde(with = "serde_decimal")]
    pub w: Count,
}

impl TermRow {
    pub fn total(&self) -> Count {
        &self.x + &self.y + &self.z + &self.v + &self.w
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermBreakdown {
    pub params: Params,
    pub rows: Vec<TermRow>,
    #[serde(with = "serde_decimal")]
    pub total: Count,
}

/// Memoizing evaluator. Safe to share between threads: lookups take a read
/// lock, inserts a write lock, and no lock is held across a recursive call.
/// Two threads racing on the same key both compute it and store equal values.
#[derive(Debug)]
pub struct Recursion {
    memo: Option<RwLock<HashMap<MemoKey, Count>>>,
    entry_cap: Option<usize>,
    pascal: RwLock<Vec<Vec<BigUint>>>,
}

impl Default for Recursion {
    fn default() -> Self {
        Recursion::new()
    }
}

impl Recursion {
    pub fn new() -> Self {
        Recursion {
            memo: Some(RwLock::new(HashMap::new())),
            entry_cap: None,
            pascal: RwLock::new(vec![vec![BigUint::one()]]),
        }
    }

    /// Evaluator that recomputes every sub-count.
    pub fn unmemoized() -> Self {
        Recursion {
            memo: None,
            ..Recursion::new()
        }
    }

    /// Clears the whole memo table whenever it would grow past `cap` entries.
    pub fn with_entry_cap(mut self, cap: usize) -> Self {
        self.entry_cap = Some(cap);
        self
    }

    pub fn memo_len(&self) -> usize {
        self.memo
            .as_ref()
            .map_or(0, |m| m.read().expect("memo lock").len())
    }

    /// `|PF_{m,n}(k, l)|`.
    pub fn pf_count(&self, params: &Params) -> Result<Count> {
        self.pf(params.m as i64, params.n as i64, params.k, params.l)
    }

    /// `|C_{a,b}(k, l)|`, memoized.
    pub fn contained(&self, cars: usize, spots: usize, k: usize, l: usize) -> Result<Count> {
        self.contained_signed(cars as i64, spots as i64, k, l)
    }

    /// Per-spot case totals; their sum is [`Recursion::pf_count`].
    pub fn term_breakdown(&self, params: &Params) -> Result<TermBreakdown> {
        let rows = self.rows(params.m as i64, params.n as i64, params.k, params.l)?;
        let total = rows.iter().map(TermRow::total).sum();
        Ok(TermBreakdown {
            params: *params,
            rows,
            total,
        })
    }

    /// `C(n, r)`, zero outside `0 ≤ r ≤ n`.
    pub fn binomial(&self, n: i64, r: i64) -> BigUint {
        if n < 0 || r < 0 || r > n {
            return BigUint::zero();
        }
        let (n, r) = (n as usize, r as usize);
        {
            let rows = self.pascal.read().expect("pascal lock");
            if let Some(row) = rows.get(n) {
                return row[r].clone();
            }
        }
        let mut rows = self.pascal.write().expect("pascal lock");
        while rows.len() <= n {
            let prev = rows.last().expect("row 0 present");
            let mut next = Vec::with_capacity(prev.len() + 1);
            next.push(BigUint::one());
            for pair in prev.windows(2) {
                next.push(&pair[0] + &pair[1]);
            }
            next.push(BigUint::one());
            rows.push(next);
        }
        rows[n][r].clone()
    }

    fn lookup(&self, key: &MemoKey) -> Option<Count> {
        self.memo
            .as_ref()?
            .read()
            .expect("memo lock")
            .get(key)
            .cloned()
    }

    fn store(&self, key: MemoKey, value: &Count) {
        if let Some(memo) = &self.memo {
            let mut table = memo.write().expect("memo lock");
            if self.entry_cap.is_some_and(|cap| table.len() >= cap) {
                table.clear();
            }
            table.insert(key, value.clone());
        }
    }

    fn pf(&self, m: i64, n: i64, k: usize, l: usize) -> Result<Count> {
        if m < 0 || n < 0 || m > n {
            return Ok(BigUint::zero());
        }
        if m == 0 {
            return Ok(BigUint::one());
        }
        let key = MemoKey::new(MemoKind::Pf, m as usize, n as usize, k, l);
        if let Some(v) = self.lookup(&key) {
            return Ok(v);
        }
        let value: Count = self.rows(m, n, k, l)?.iter().map(TermRow::total).sum();
        self.store(key, &value);
        Ok(value)
    }

    fn contained_signed(&self, a: i64, b: i64, k: usize, l: usize) -> Result<Count> {
        if a < 0 || b < 0 || a > b {
            return Ok(BigUint::zero());
        }
        if a == 0 {
            return Ok(BigUint::one());
        }
        let key = MemoKey::new(MemoKind::Contained, a as usize, b as usize, k, l);
        if let Some(v) = self.lookup(&key) {
            return Ok(v);
        }
        let value = contained_count_by_runs(a as usize, b as usize, key.k, key.l);
        self.store(key, &value);
        Ok(value)
    }

    fn rows(&self, m: i64, n: i64, k: usize, l: usize) -> Result<Vec<TermRow>> {
        let ki = k.min(n.max(0) as usize) as i64;
        let li = l.min(n.max(0) as usize) as i64;
        let pf = |a: i64, b: i64| self.pf(a, b, k, l);
        let c = |a: i64, b: i64| self.contained_signed(a, b, k, l);
        let binom = |a: i64, b: i64| self.binomial(a, b);

        let mut rows = Vec::with_capacity(n.max(0) as usize);
        for i in 1..=n {
            // X(i): backed into i from a block filling i+1..n
            let x_term = {
                let factor = ki.min(n - i);
                if factor == 0 {
                    BigUint::zero()
                } else {
                    binom(m - 1, n - i)
                        * pf(m - 1 - n + i, i - 1)?
                        * c(n - i, n - i)?
                        * factor as u64
                }
            };
            // Y(i): pulled forward into i from a block filling 1..i-1
            let y_term = {
                let factor = (i - 1).min(li);
                if factor == 0 {
                    BigUint::zero()
                } else {
                    binom(m - 1, i - 1) * pf(i - 1, i - 1)? * c(m - i, n - i)? * factor as u64
                }
            };
            let mut z_sum = BigUint::zero();
            let mut v_sum = BigUint::zero();
            let mut w_sum = BigUint::zero();
            for x in 0..m {
                let choose_left = binom(m - 1, x);
                if choose_left.is_zero() {
                    continue;
                }
                let left = pf(x, i - 1)?;
                // Z(i, x): preferred i
                if !left.is_zero() {
                    z_sum += &choose_left * &left * c(m - 1 - x, n - i)?;
                }
                // V(i, x, R): block of R right of i, then a vacancy at i+R+1
                if !left.is_zero() {
                    for r in 1..=n - i - 1 {
                        let factor = r.min(ki);
                        if factor == 0 {
                            continue;
                        }
                        v_sum += &choose_left
                            * &left
                            * binom(m - 1 - x, r)
                            * c(r, r)?
                            * c(m - 1 - x - r, n - r - i - 1)?
                            * factor as u64;
                    }
                }
                // W(i, x, R): vacancy at i-R-1, then a block of R left of i
                for r in ki + 1..=i - 2 {
                    let factor = (r - ki).min(li);
                    if factor == 0 {
                        continue;
                    }
                    w_sum += &choose_left
                        * pf(x, i - r - 2)?
                        * binom(m - 1 - x, r)
                        * c(r, r)?
                        * c(m - 1 - x - r, n - i)?
                        * factor as u64;
                }
            }
            rows.push(TermRow {
                i: i as usize,
                x: x_term,
                y: y_term,
                z: z_sum,
                v: v_sum,
                w: w_sum,
            });
        }
        Ok(rows)
    }
}

/// `|PF_{m,n}(k, l)|` by the recursion, with a fresh memo table.
pub fn pf_count_recursive(params: &Params) -> Result<Count> {
    Recursion::new().pf_count(params)
}

/// Per-spot case totals for `params`.
pub fn term_breakdown(params: &Params) -> Result<TermBreakdown> {
    Recursion::new().term_breakdown(params)
}

/// `|PF_{m,n}(k)|` under the k-Naples rule, by the recursion with `l = n - 1`.
pub fn knaples_count_recursive(m: usize, n: usize, k: usize) -> Result<Count> {
    pf_count_recursive(&Params::naples(m, n, k))
}

/// Number of k-Naples parking functions of length `len` from the older
/// single-sum recursion
///
/// `P(n+1) = Σ_{i=0}^{n} C(n, i) · min(i + 1 + k, n + 1) · P(i) · (n - i + 1)^{n-i-1}`
///
/// with `P(0) = 1`. Self-contained: it shares no code with [`Recursion`].
pub fn knaples_published(len: usize, k: usize) -> Count {
    let mut counts: Vec<BigUint> = vec![BigUint::one()];
    let mut row: Vec<BigUint> = vec![BigUint::one()]; // C(n, ·) for the current n
    for n in 0..len {
        if n > 0 {
            let mut next = vec![BigUint::one(); n + 1];
            for (j, slot) in next.iter_mut().enumerate().take(n).skip(1) {
                *slot = &row[j - 1] + &row[j];
            }
            row = next;
        }
        let mut total = BigUint::zero();
        for i in 0..=n {
            let reach = (i + 1 + k).min(n + 1);
            // (n - i + 1)^(n - i - 1); the i = n term is 1^(-1) = 1
            let forests = if i == n {
                BigUint::one()
            } else {
                BigUint::from(n - i + 1).pow((n - i - 1) as u32)
            };
            total += &row[i] * reach * &counts[i] * forests;
        }
        counts.push(total);
    }
    counts.swap_remove(len)
}

/// `(n + 1 - m)(n + 1)^(m - 1)` for `1 ≤ m ≤ n`; 1 for `m = 0`, 0 for `m > n`.
pub fn classical_closed_form(m: usize, n: usize) -> Count {
    if m > n {
        return BigUint::zero();
    }
    if m == 0 {
        return BigUint::one();
    }
    BigUint::from(n + 1 - m) * BigUint::from(n + 1).pow((m - 1) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> Count {
        BigUint::from(v)
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(classical_closed_form(2, 3), big(8));
        assert_eq!(classical_closed_form(4, 4), big(125));
        assert_eq!(classical_closed_form(1, 9), big(9));
        assert_eq!(classical_closed_form(0, 3), big(1));
        assert_eq!(classical_closed_form(4, 3), big(0));
    }

    #[test]
    fn single_sum_recursion_small_values() {
        assert_eq!(knaples_published(3, 0), big(16));
        assert_eq!(knaples_published(0, 2), big(1));
        for k in 0..4 {
            assert_eq!(knaples_published(1, k), big(1));
        }
        for n in 1..=8usize {
            assert_eq!(
                knaples_published(n, 0),
                big(((n + 1) as u64).pow(n as u32 - 1))
            );
        }
    }

    #[test]
    fn base_cases() {
        let r = Recursion::new();
        for n in 0..5 {
            assert_eq!(r.pf_count(&Params::new(0, n, 1, 1)).unwrap(), big(1));
        }
        assert_eq!(r.pf_count(&Params::new(3, 2, 1, 1)).unwrap(), big(0));
        assert_eq!(r.binomial(5, 2), big(10));
        assert_eq!(r.binomial(5, 6), big(0));
        assert_eq!(r.binomial(-1, 0), big(0));
        assert_eq!(r.binomial(3, -1), big(0));
    }

    #[test]
    fn classical_recursion() {
        let r = Recursion::new();
        for n in 1..=8 {
            for m in 1..=n {
                assert_eq!(
                    r.pf_count(&Params::classical(m, n)).unwrap(),
                    classical_closed_form(m, n),
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn breakdown_shapes() {
        let p = Params::new(4, 5, 1, 2);
        let b = term_breakdown(&p).unwrap();
        assert_eq!(b.rows.len(), 5);
        assert_eq!(b.total, pf_count_recursive(&p).unwrap());
        // no room to back into the last spot
        assert!(b.rows[4].v.is_zero());
        assert!(b.rows[4].x.is_zero());
        // no block with a vacancy in front fits left of spots 1 and 2
        assert!(b.rows[0].w.is_zero() && b.rows[1].w.is_zero());
        assert!(b.rows[0].y.is_zero());
    }

    #[test]
    fn memo_keys_are_clamped() {
        let a = MemoKey::new(MemoKind::Pf, 2, 3, 10, 10);
        let b = MemoKey::new(MemoKind::Pf, 2, 3, 2, 2);
        assert_eq!(a, b);
        let r = Recursion::new();
        r.pf_count(&Params::new(3, 4, 9, 9)).unwrap();
        let before = r.memo_len();
        r.pf_count(&Params::new(3, 4, 3, 3)).unwrap();
        assert_eq!(r.memo_len(), before);
    }

    #[test]
    fn entry_cap_clears() {
        let r = Recursion::new().with_entry_cap(3);
        let v = r.pf_count(&Params::new(5, 6, 1, 2)).unwrap();
        assert!(r.memo_len() <= 3);
        assert_eq!(
            v,
            Recursion::new().pf_count(&Params::new(5, 6, 1, 2)).unwrap()
        );
    }

    #[test]
    fn memoized_matches_unmemoized() {
        let memo = Recursion::new();
        let plain = Recursion::unmemoized();
        for n in 1..=4 {
            for m in 1..=n {
                for k in 0..n {
                    for l in 0..n {
                        let p = Params::new(m, n, k, l);
                        assert_eq!(
                            memo.pf_count(&p).unwrap(),
                            plain.pf_count(&p).unwrap(),
                            "{p}"
                        );
                    }
                }
            }
        }
        assert_eq!(plain.memo_len(), 0);
    }

    #[test]
    fn scales_past_enumeration() {
        let r = Recursion::new();
        for n in [12, 20] {
            for k in [0, 1, 3, n - 1] {
                assert_eq!(
                    r.pf_count(&Params::naples(n, n, k)).unwrap(),
                    knaples_published(n, k),
                    "n={n} k={k}"
                );
            }
            for m in [1, n / 2, n] {
                assert_eq!(
                    r.pf_count(&Params::classical(m, n)).unwrap(),
                    classical_closed_form(m, n)
                );
            }
        }
    }
}
