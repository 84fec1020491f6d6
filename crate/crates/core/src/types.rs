//! Shared value types: instance parameters, preference lists, outcome words,
//! exact counts and the enumeration ceiling.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact, unbounded nonnegative count.
pub type Count = BigUint;

/// One parking instance: `m` cars, `n` spots, backward allowance `k` and
/// forward allowance `l`.
///
/// Allowances larger than `n - 1` are legal and behave exactly like `n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub l: usize,
}

impl Params {
    pub const fn new(m: usize, n: usize, k: usize, l: usize) -> Self {
        Params { m, n, k, l }
    }

    /// Classical rule: no backing up, unrestricted forward motion.
    pub const fn classical(m: usize, n: usize) -> Self {
        Params::new(m, n, 0, n.saturating_sub(1))
    }

    /// k-Naples rule: back up to `k` spots, unrestricted forward motion.
    pub const fn naples(m: usize, n: usize, k: usize) -> Self {
        Params::new(m, n, k, n.saturating_sub(1))
    }

    /// l-interval rule: no backing up, at most `l` spots forward.
    pub const fn interval(m: usize, n: usize, l: usize) -> Self {
        Params::new(m, n, 0, l)
    }

    /// Vacillating rule: one spot back, one spot forward.
    pub const fn vacillating(m: usize, n: usize) -> Self {
        Params::new(m, n, 1, 1)
    }

    /// Same instance with `k` and `l` clamped to `max(n - 1, 0)`.
    pub fn clamped(self) -> Self {
        let cap = self.n.saturating_sub(1);
        Params {
            k: self.k.min(cap),
            l: self.l.min(cap),
            ..self
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(m={}, n={}, k={}, l={})",
            self.m, self.n, self.k, self.l
        )
    }
}

/// The cars' preferred spots, car 1 first. Entries are 1-based spots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PreferenceList(Vec<usize>);

impl PreferenceList {
    /// Checks every entry lies in `1..=spots`.
    pub fn new(entries: Vec<usize>, spots: usize) -> Result<Self> {
        for (idx, &spot) in entries.iter().enumerate() {
            if spot == 0 || spot > spots {
                return Err(Error::PreferenceOutOfRange {
                    car: idx + 1,
                    spot,
                    spots,
                });
            }
        }
        Ok(PreferenceList(entries))
    }

    /// Checks the list against both the car count and the street length.
    pub fn for_params(entries: Vec<usize>, params: &Params) -> Result<Self> {
        if entries.len() != params.m {
            return Err(Error::LengthMismatch {
                expected: params.m,
                actual: entries.len(),
            });
        }
        PreferenceList::new(entries, params.n)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for PreferenceList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

/// Which car ended up in each spot; `0` marks a vacant spot.
///
/// Every label `1..=m` appears exactly once, where `m` is the number of
/// nonzero entries. Serialized as comma-separated integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OutcomeWord(Vec<usize>);

impl OutcomeWord {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let cars = entries.iter().filter(|&&c| c != 0).count();
        let mut seen = vec![false; cars + 1];
        for &c in &entries {
            if c == 0 {
                continue;
            }
            if c > cars {
                return Err(Error::InvalidWord(format!(
                    "label {c} exceeds the car count {cars}"
                )));
            }
            if std::mem::replace(&mut seen[c], true) {
                return Err(Error::InvalidWord(format!("label {c} appears twice")));
            }
        }
        Ok(OutcomeWord(entries))
    }

    pub(crate) fn from_raw(entries: Vec<usize>) -> Self {
        debug_assert!(OutcomeWord::new(entries.clone()).is_ok());
        OutcomeWord(entries)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Number of spots.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of cars.
    pub fn cars(&self) -> usize {
        self.0.iter().filter(|&&c| c != 0).count()
    }

    /// 1-based spot of `car`, if present.
    pub fn spot_of(&self, car: usize) -> Option<usize> {
        if car == 0 {
            return None;
        }
        self.0.iter().position(|&c| c == car).map(|p| p + 1)
    }
}

impl fmt::Display for OutcomeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

impl std::str::FromStr for OutcomeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = parse_list(s).map_err(Error::InvalidWord)?;
        OutcomeWord::new(entries)
    }
}

impl Serialize for OutcomeWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for OutcomeWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Upper bound on the number of elementary steps an exhaustive routine may
/// take before refusing the instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ceiling(pub u128);

impl Ceiling {
    pub const DEFAULT: Ceiling = Ceiling(100_000_000);
    pub const UNLIMITED: Ceiling = Ceiling(u128::MAX);
    pub const ENV_VAR: &'static str = "PULLBACK_CEILING";

    /// Default ceiling, overridden by `PULLBACK_CEILING` when it parses.
    pub fn from_env() -> Self {
        std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|v| v.trim().replace('_', "").parse::<u128>().ok())
            .map(Ceiling)
            .unwrap_or_default()
    }

    pub(crate) fn check(self, what: &'static str, work: u128) -> Result<()> {
        if work > self.0 {
            Err(Error::TooLarge {
                what,
                work,
                ceiling: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Ceiling {
    fn default() -> Self {
        Ceiling::DEFAULT
    }
}

/// `base^exp` saturating at `u128::MAX`.
pub(crate) fn saturating_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

/// `n! / (n - m)!`, the size of the multiset-permutation set of `m` labels and
/// `n - m` zeros; saturating.
pub(crate) fn falling_factorial(n: usize, m: usize) -> u128 {
    (n - m.min(n) + 1..=n).fold(1u128, |acc, v| acc.saturating_mul(v as u128))
}

/// Serializes a [`Count`] as a decimal string (counts are unbounded).
pub mod serde_decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

pub(crate) fn join(entries: &[usize]) -> String {
    let mut out = String::with_capacity(entries.len() * 2);
    for (idx, v) in entries.iter().enumerate() {
        if idx > 0 {
            out.push(',');
        }
        out.push_str(&v.to_string());
    }
    out
}

/// Parses `"3,2,3,1"` (whitespace tolerated). The empty string is the empty list.
pub fn parse_list(s: &str) -> std::result::Result<Vec<usize>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| format!("`{tok}` is not a nonnegative integer"))
        })
        .collect()
}
