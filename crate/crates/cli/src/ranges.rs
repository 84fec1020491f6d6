//! Sweep specifications such as `1..5`, `n`, `n-1`, `0..n-1` or `1,3,5`.
//!
//! Bounds are inclusive. A bound may mention `n`, in which case it is
//! evaluated separately for every street length in the sweep.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Bound {
    Fixed(usize),
    /// `n + offset`
    RelN(i64),
}

impl Bound {
    fn eval(self, n: Option<usize>) -> Result<Option<usize>, String> {
        match self {
            Bound::Fixed(v) => Ok(Some(v)),
            Bound::RelN(off) => {
                let n = n.ok_or("`n` cannot appear in the street-length range itself")?;
                let v = n as i64 + off;
                Ok((v >= 0).then_some(v as usize))
            }
        }
    }
}

impl FromStr for Bound {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let bad = || format!("`{s}` is neither an integer nor of the form n, n-INT, n+INT");
        if let Some(rest) = s.strip_prefix('n') {
            let rest = rest.trim();
            if rest.is_empty() {
                return Ok(Bound::RelN(0));
            }
            let (sign, digits) = match rest.split_at(1) {
                ("-", d) => (-1, d),
                ("+", d) => (1, d),
                _ => return Err(bad()),
            };
            let off: i64 = digits.trim().parse().map_err(|_| bad())?;
            return Ok(Bound::RelN(sign * off));
        }
        s.parse().map(Bound::Fixed).map_err(|_| bad())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Item {
    Single(Bound),
    Span(Bound, Bound),
}

/// Comma-separated list of values and inclusive spans.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeSpec {
    text: String,
    items: Vec<Item>,
}

impl RangeSpec {
    /// Sorted, deduplicated values for street length `n` (`None` when the
    /// spec describes the street length itself). Negative values are dropped.
    pub fn values(&self, n: Option<usize>) -> Result<Vec<usize>, String> {
        let mut out = Vec::new();
        for item in &self.items {
            match *item {
                Item::Single(b) => out.extend(b.eval(n)?),
                Item::Span(lo, hi) => {
                    let lo = lo.eval(n)?.unwrap_or(0);
                    if let Some(hi) = hi.eval(n)? {
                        out.extend(lo..=hi);
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for RangeSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut items = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(format!("empty item in range `{s}`"));
            }
            items.push(match part.split_once("..") {
                Some((lo, hi)) => Item::Span(lo.parse()?, hi.parse()?),
                None => Item::Single(part.parse()?),
            });
        }
        Ok(RangeSpec {
            text: s.trim().to_string(),
            items,
        })
    }
}

impl fmt::Display for RangeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}
