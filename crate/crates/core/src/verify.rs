//! Cross-method verification over a small grid.
//!
//! Every cell `1 ≤ m ≤ n ≤ max_n`, `0 ≤ k, l ≤ n - 1` is counted by
//! enumeration, by outcome words and by the recursion; the three must agree.
//! On top of that the harness checks the closed forms and identities the
//! methods are expected to satisfy. A clean report has no disagreements.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::oracle::{
    count_by_enumeration, count_contained_by_enumeration, count_weakly_increasing,
};
use crate::perm_count::{
    contained_count, contained_count_by_runs, total_count, total_count_with, FRule,
};
use crate::recursion::{
    classical_closed_form, knaples_count_recursive, knaples_published, Recursion,
};
use crate::sequences::sqrt2_convergent_numerators;
use crate::types::{serde_decimal, Ceiling, Count, Params};

/// Deliberate defects for checking that the harness notices them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// Outcome-word counting exchanges the two nonzero branches of `F`.
    SwappedFBranch,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub ceiling: Ceiling,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 6,
            ceiling: Ceiling::DEFAULT,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellResult {
    #[serde(flatten)]
    pub params: Params,
    #[serde(with = "serde_decimal")]
    pub brute: Count,
    #[serde(with = "serde_decimal")]
    pub perm: Count,
    #[serde(with = "serde_decimal")]
    pub recursive: Count,
}

impl CellResult {
    pub fn agrees(&self) -> bool {
        self.brute == self.perm && self.perm == self.recursive
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub check: &'static str,
    pub detail: String,
}

/// Wall time spent in each method, summed over cells.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct Timings {
    pub brute: Duration,
    pub perm: Duration,
    pub recursive: Duration,
    pub identities: Duration,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub fault: Option<Fault>,
    pub cells: Vec<CellResult>,
    /// Names of the identity checks that ran, in order.
    pub checks: Vec<&'static str>,
    pub disagreements: Vec<Disagreement>,
    #[serde(skip)]
    pub timings: Timings,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Every `(m, n, k, l)` with `1 ≤ m ≤ n ≤ max_n`, `k, l < n`, sorted.
pub fn grid(max_n: usize) -> Vec<Params> {
    let mut cells = Vec::new();
    for m in 1..=max_n {
        for n in m..=max_n {
            for k in 0..n {
                for l in 0..n {
                    cells.push(Params::new(m, n, k, l));
                }
            }
        }
    }
    cells
}

pub fn run(config: &VerifyConfig) -> Result<VerifyReport> {
    let rule = match config.fault {
        None => FRule::Standard,
        Some(Fault::SwappedFBranch) => FRule::Swapped,
    };
    let recursion = Recursion::new();

    let measured: Vec<Result<(CellResult, [Duration; 3])>> = grid(config.max_n)
        .into_par_iter()
        .map(|p| {
            let t0 = Instant::now();
            let brute = count_by_enumeration(&p, config.ceiling)?;
            let t1 = Instant::now();
            let perm = total_count_with(&p, config.ceiling, rule)?;
            let t2 = Instant::now();
            let recursive = recursion.pf_count(&p)?;
            let t3 = Instant::now();
            Ok((
                CellResult {
                    params: p,
                    brute,
                    perm,
                    recursive,
                },
                [t1 - t0, t2 - t1, t3 - t2],
            ))
        })
        .collect();

    let mut timings = Timings::default();
    let mut cells = Vec::with_capacity(measured.len());
    for item in measured {
        let (cell, [b, p, r]) = item?;
        timings.brute += b;
        timings.perm += p;
        timings.recursive += r;
        cells.push(cell);
    }

    let started = Instant::now();
    let mut ledger = Ledger::default();

    ledger.begin("three-way equality");
    for c in &cells {
        if !c.agrees() {
            ledger.fail(format!(
                "{}: brute={} perm={} recursive={}",
                c.params, c.brute, c.perm, c.recursive
            ));
        }
    }

    ledger.begin("classical closed form");
    for c in cells
        .iter()
        .filter(|c| c.params == Params::classical(c.params.m, c.params.n))
    {
        let expect = classical_closed_form(c.params.m, c.params.n);
        for (method, got) in [
            ("brute", &c.brute),
            ("perm", &c.perm),
            ("recursive", &c.recursive),
        ] {
            if *got != expect {
                ledger.fail(format!("{} {method}={got}, expected {expect}", c.params));
            }
        }
    }

    ledger.begin("monotone in k and l");
    for c in &cells {
        let Params { m, n, k, l } = c.params;
        for next in [Params::new(m, n, k + 1, l), Params::new(m, n, k, l + 1)] {
            if let Some(d) = cells.iter().find(|d| d.params == next) {
                if d.brute < c.brute {
                    ledger.fail(format!(
                        "{} = {} exceeds {} = {}",
                        c.params, c.brute, next, d.brute
                    ));
                }
            }
        }
    }

    ledger.begin("clamp invariance");
    for n in 1..=config.max_n {
        for m in 1..=n {
            let wide = recursion.pf_count(&Params::new(m, n, n + 3, 2 * n + 1))?;
            let tight = recursion.pf_count(&Params::new(m, n, n - 1, n - 1))?;
            if wide != tight {
                ledger.fail(format!(
                    "m={m} n={n}: oversized allowances give {wide}, clamped {tight}"
                ));
            }
        }
    }

    ledger.begin("k-Naples: general recursion vs single-sum recursion");
    for n in 1..=config.max_n {
        for k in 0..n {
            let ours = knaples_count_recursive(n, n, k)?;
            let theirs = knaples_published(n, k);
            if ours != theirs {
                ledger.fail(format!("n={n} k={k}: {ours} vs {theirs}"));
            }
        }
    }

    ledger.begin("contained k-Naples square count");
    for n in 1..=config.max_n {
        let expect = BigUint::from(n + 1).pow(n as u32 - 1);
        for k in 0..n {
            let got = contained_count(n, n, k, n - 1, config.ceiling)?;
            if got != expect {
                ledger.fail(format!(
                    "C_{{{n},{n}}}(k={k}, l={}) = {got}, expected {expect}",
                    n - 1
                ));
            }
        }
    }

    ledger.begin("contained count vs contained enumeration");
    for b in 0..=config.max_n {
        for a in 0..=b {
            for k in 0..=b {
                for l in 0..=b {
                    let by_words = contained_count(a, b, k, l, config.ceiling)?;
                    let by_lists = count_contained_by_enumeration(a, b, k, l, config.ceiling)?;
                    let by_runs = contained_count_by_runs(a, b, k, l);
                    if by_words != by_lists || by_runs != by_lists {
                        ledger.fail(format!(
                            "C_{{{a},{b}}}({k},{l}): words {by_words}, runs {by_runs}, lists {by_lists}"
                        ));
                    }
                }
            }
        }
    }

    ledger.begin("contained count equals plain count when k = 0");
    for b in 1..=config.max_n {
        for a in 1..=b {
            for l in 0..b {
                let contained = contained_count(a, b, 0, l, config.ceiling)?;
                let plain = total_count(&Params::interval(a, b, l), config.ceiling)?;
                if contained != plain {
                    ledger.fail(format!(
                        "a={a} b={b} l={l}: contained {contained}, plain {plain}"
                    ));
                }
            }
        }
    }

    ledger.begin("weakly increasing unit interval = 2^(n-1)");
    for n in 1..=config.max_n {
        let got = count_weakly_increasing(&Params::interval(n, n, 1), config.ceiling)?;
        let expect = BigUint::from(1u32) << (n - 1);
        if got != expect {
            ledger.fail(format!("n={n}: {got}, expected {expect}"));
        }
    }

    ledger.begin("weakly increasing vacillating = sqrt(2) convergent numerators");
    let numerators = sqrt2_convergent_numerators(config.max_n);
    for n in 1..=config.max_n {
        let got = count_weakly_increasing(&Params::vacillating(n, n), config.ceiling)?;
        if got != numerators[n - 1] {
            ledger.fail(format!("n={n}: {got}, expected {}", numerators[n - 1]));
        }
    }

    timings.identities = started.elapsed();
    Ok(VerifyReport {
        max_n: config.max_n,
        fault: config.fault,
        cells,
        checks: ledger.checks,
        disagreements: ledger.failures,
        timings,
    })
}

#[derive(Default)]
struct Ledger {
    checks: Vec<&'static str>,
    failures: Vec<Disagreement>,
}

impl Ledger {
    fn begin(&mut self, name: &'static str) {
        self.checks.push(name);
    }

    fn fail(&mut self, detail: String) {
        let check = self.checks.last().copied().unwrap_or("unnamed");
        self.failures.push(Disagreement { check, detail });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_grids_are_clean() {
        for max_n in 0..=3 {
            let report = run(&VerifyConfig {
                max_n,
                ..VerifyConfig::default()
            })
            .unwrap();
            assert!(report.is_clean(), "{:?}", report.disagreements);
        }
    }

    #[test]
    fn injected_fault_is_reported() {
        let report = run(&VerifyConfig {
            max_n: 3,
            fault: Some(Fault::SwappedFBranch),
            ..VerifyConfig::default()
        })
        .unwrap();
        assert!(!report.is_clean());
        assert!(report
            .disagreements
            .iter()
            .any(|d| d.check == "three-way equality"));
    }

    #[test]
    fn grid_is_sorted_and_complete() {
        let g = grid(3);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        // n choices of m, n² of (k, l)
        let expect: usize = (1..=3).map(|n| n * n * n).sum();
        assert_eq!(g.len(), expect);
    }
}
