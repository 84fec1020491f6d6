use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use pullback_core::oracle::{count_by_enumeration, fiber_histogram};
use pullback_core::parking::{
    simulate, simulate_contained, CarTrace, ParkedAt, SimulationResult, Status,
};
use pullback_core::perm_count::{outcome_fibers, total_count};
use pullback_core::recursion::Recursion;
use pullback_core::types::{parse_list, serde_decimal};
use pullback_core::verify::{self, Fault, VerifyConfig};
use pullback_core::{Ceiling, Count, Params, PreferenceList};

use crate::args::{CheckArgs, CountArgs, Format, Method, OutcomesArgs, TableArgs, VerifyArgs};
use crate::CliError;

/// Enumeration is used by `auto` up to this many preference lists.
const AUTO_BRUTE_LIMIT: u128 = 10_000;

pub struct Ctx {
    pub format: Format,
    pub ceiling: Ceiling,
}

/// What a command printed and whether the answer was negative.
pub struct Report {
    pub stdout: String,
    pub negative: bool,
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialize");
    text.push('\n');
    text
}

fn csv_text<R: AsRef<[u8]>>(header: &[&str], rows: impl IntoIterator<Item = Vec<R>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

// check ----------------------------------------------------------------------

#[derive(Serialize)]
struct CheckReport<'a> {
    m: usize,
    n: usize,
    k: usize,
    l: usize,
    contained: bool,
    prefs: &'a [usize],
    is_pf: bool,
    #[serde(flatten)]
    status: Status,
    outcome: Option<String>,
    traces: &'a [CarTrace],
}

pub fn check(ctx: &Ctx, args: &CheckArgs) -> Result<Report, CliError> {
    let entries = parse_list(&args.prefs).map_err(CliError::Usage)?;
    let p = args.allowances.resolve(entries.len(), args.n);
    let prefs = PreferenceList::for_params(entries, &p)?;
    let result: SimulationResult = if args.contained {
        simulate_contained(&prefs, p.m, p.n, p.k, p.l)?
    } else {
        simulate(&prefs, &p)?
    };
    let is_pf = result.status.is_success();

    let stdout = match ctx.format {
        Format::Json => json(&CheckReport {
            m: p.m,
            n: p.n,
            k: p.k,
            l: p.l,
            contained: args.contained,
            prefs: prefs.as_slice(),
            is_pf,
            status: result.status,
            outcome: result.outcome.as_ref().map(|w| w.to_string()),
            traces: &result.traces,
        }),
        Format::Csv => csv_text(
            &[
                "car",
                "preferred",
                "backward_checked",
                "forward_checked",
                "parked_at",
            ],
            result.traces.iter().map(|t| {
                vec![
                    t.car.to_string(),
                    t.preferred.to_string(),
                    spaced(&t.backward_checked),
                    spaced(&t.forward_checked),
                    parked(t.parked_at),
                ]
            }),
        ),
        Format::Plain => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "params: m={} n={} k={} l={}{}",
                p.m,
                p.n,
                p.k,
                p.l,
                if args.contained { " contained" } else { "" }
            );
            let _ = writeln!(out, "is_pf={is_pf}");
            match result.status {
                Status::Success => {}
                Status::FailAt(car) => {
                    let _ = writeln!(out, "failed_car={car}");
                }
                Status::ContainmentViolation(car) => {
                    let _ = writeln!(out, "failed_car={car} (backed into spot 0)");
                }
            }
            if let Some(w) = &result.outcome {
                let _ = writeln!(out, "outcome={w}");
            }
            for t in &result.traces {
                let _ = write!(out, "car {}: prefers {}", t.car, t.preferred);
                if !t.backward_checked.is_empty() {
                    let _ = write!(out, ", back {}", spaced(&t.backward_checked));
                }
                if !t.forward_checked.is_empty() {
                    let _ = write!(out, ", forward {}", spaced(&t.forward_checked));
                }
                let _ = writeln!(out, " -> {}", parked(t.parked_at));
            }
            out
        }
    };
    Ok(Report {
        stdout,
        negative: !is_pf,
    })
}

fn spaced(spots: &[usize]) -> String {
    spots
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn parked(at: ParkedAt) -> String {
    match at {
        ParkedAt::Spot(s) => s.to_string(),
        ParkedAt::VirtualSpot => "0".into(),
        ParkedAt::Failed => "failed".into(),
    }
}

// count and table ------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Resolved {
    Brute,
    Perm,
    Recursive,
}

impl Resolved {
    fn name(self) -> &'static str {
        match self {
            Resolved::Brute => "brute",
            Resolved::Perm => "perm",
            Resolved::Recursive => "recursive",
        }
    }
}

fn resolve(method: Method, p: &Params) -> Vec<Resolved> {
    match method {
        Method::Brute => vec![Resolved::Brute],
        Method::Perm => vec![Resolved::Perm],
        Method::Recursive => vec![Resolved::Recursive],
        Method::All => vec![Resolved::Brute, Resolved::Perm, Resolved::Recursive],
        Method::Auto => {
            let lists = (p.n as u128).checked_pow(p.m as u32);
            if lists.is_some_and(|v| v <= AUTO_BRUTE_LIMIT) {
                vec![Resolved::Brute]
            } else {
                vec![Resolved::Recursive]
            }
        }
    }
}

#[derive(Debug, Serialize)]
struct CountRow {
    m: usize,
    n: usize,
    k: usize,
    l: usize,
    method: &'static str,
    #[serde(with = "serde_decimal")]
    count: Count,
}

impl CountRow {
    fn fields(&self) -> Vec<String> {
        vec![
            self.m.to_string(),
            self.n.to_string(),
            self.k.to_string(),
            self.l.to_string(),
            self.count.to_string(),
            self.method.to_string(),
        ]
    }
}

const TABLE_HEADER: [&str; 6] = ["m", "n", "k", "l", "count", "method"];

fn count_rows(
    ctx: &Ctx,
    recursion: &Recursion,
    p: &Params,
    method: Method,
) -> Result<Vec<CountRow>, CliError> {
    resolve(method, p)
        .into_iter()
        .map(|r| {
            let count = match r {
                Resolved::Brute => count_by_enumeration(p, ctx.ceiling)?,
                Resolved::Perm => total_count(p, ctx.ceiling)?,
                Resolved::Recursive => recursion.pf_count(p)?,
            };
            Ok(CountRow {
                m: p.m,
                n: p.n,
                k: p.k,
                l: p.l,
                method: r.name(),
                count,
            })
        })
        .collect()
}

/// Describes every instance whose methods disagree.
fn mismatches(rows: &[CountRow]) -> Vec<String> {
    let mut out = Vec::new();
    for group in rows.chunk_by(|a, b| (a.m, a.n, a.k, a.l) == (b.m, b.n, b.k, b.l)) {
        if group.iter().any(|r| r.count != group[0].count) {
            let values: Vec<String> = group
                .iter()
                .map(|r| format!("{}={}", r.method, r.count))
                .collect();
            let g = &group[0];
            out.push(format!(
                "methods disagree at m={} n={} k={} l={}: {}",
                g.m,
                g.n,
                g.k,
                g.l,
                values.join(" ")
            ));
        }
    }
    out
}

pub fn count(ctx: &Ctx, args: &CountArgs) -> Result<Report, CliError> {
    let p = args.allowances.resolve(args.m, args.n);
    let recursion = Recursion::new();
    let rows = count_rows(ctx, &recursion, &p, args.method)?;
    let problems = mismatches(&rows);

    let stdout = match ctx.format {
        Format::Json if rows.len() == 1 => json(&rows[0]),
        Format::Json => json(&rows),
        Format::Csv => csv_text(&TABLE_HEADER, rows.iter().map(CountRow::fields)),
        Format::Plain if rows.len() == 1 => format!("{}\n", rows[0].count),
        Format::Plain => {
            let mut out = String::new();
            for r in &rows {
                let _ = writeln!(out, "{}: {}", r.method, r.count);
            }
            for line in &problems {
                let _ = writeln!(out, "MISMATCH {line}");
            }
            out
        }
    };
    for line in &problems {
        eprintln!("{line}");
    }
    Ok(Report {
        stdout,
        negative: !problems.is_empty(),
    })
}

pub fn table(ctx: &Ctx, args: &TableArgs) -> Result<Report, CliError> {
    let mut instances = Vec::new();
    for n in args.n.values(None).map_err(CliError::Usage)? {
        let ms = args.m.values(Some(n)).map_err(CliError::Usage)?;
        let ks = args.k.values(Some(n)).map_err(CliError::Usage)?;
        let ls = args.l.values(Some(n)).map_err(CliError::Usage)?;
        for &m in &ms {
            for &k in &ks {
                for &l in &ls {
                    instances.push(Params::new(m, n, k, l));
                }
            }
        }
    }
    instances.sort_unstable();
    instances.dedup();

    let recursion = Recursion::new();
    let rows: Vec<CountRow> = instances
        .par_iter()
        .map(|p| count_rows(ctx, &recursion, p, args.method))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    let problems = mismatches(&rows);
    for line in &problems {
        eprintln!("{line}");
    }

    let stdout = match ctx.format {
        Format::Json => json(&rows),
        Format::Csv | Format::Plain => csv_text(&TABLE_HEADER, rows.iter().map(CountRow::fields)),
    };
    Ok(Report {
        stdout,
        negative: !problems.is_empty(),
    })
}

// outcomes -------------------------------------------------------------------

#[derive(Serialize)]
struct OutcomeRow {
    word: String,
    #[serde(with = "serde_decimal")]
    fiber: Count,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "optional_decimal"
    )]
    enumerated: Option<Count>,
}

fn optional_decimal<S: serde::Serializer>(v: &Option<Count>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(c) => s.collect_str(c),
        None => s.serialize_none(),
    }
}

#[derive(Serialize)]
struct OutcomeListing {
    m: usize,
    n: usize,
    k: usize,
    l: usize,
    outcomes: Vec<OutcomeRow>,
    #[serde(with = "serde_decimal")]
    total: Count,
}

pub fn outcomes(ctx: &Ctx, args: &OutcomesArgs) -> Result<Report, CliError> {
    let p = args.allowances.resolve(args.m, args.n);
    let fibers = outcome_fibers(&p, ctx.ceiling)?;
    let histogram = if args.with_oracle {
        Some(fiber_histogram(&p, ctx.ceiling)?)
    } else {
        None
    };
    let zero = Count::default();
    let rows: Vec<OutcomeRow> = fibers
        .into_iter()
        .map(|(w, fiber)| OutcomeRow {
            enumerated: histogram
                .as_ref()
                .map(|h| h.get(&w).unwrap_or(&zero).clone()),
            word: w.to_string(),
            fiber,
        })
        .collect();
    let total: Count = rows.iter().map(|r| &r.fiber).sum();
    let bad = rows
        .iter()
        .filter(|r| r.enumerated.as_ref().is_some_and(|e| *e != r.fiber))
        .count();
    if bad > 0 {
        eprintln!("{bad} fibers differ from enumeration");
    }

    let stdout = match ctx.format {
        Format::Json => json(&OutcomeListing {
            m: p.m,
            n: p.n,
            k: p.k,
            l: p.l,
            outcomes: rows,
            total,
        }),
        Format::Csv => {
            let mut header = vec!["word", "fiber"];
            if args.with_oracle {
                header.push("enumerated");
            }
            csv_text(
                &header,
                rows.iter().map(|r| {
                    let mut f = vec![r.word.clone(), r.fiber.to_string()];
                    f.extend(r.enumerated.as_ref().map(|e| e.to_string()));
                    f
                }),
            )
        }
        Format::Plain => {
            let mut out = String::new();
            for r in &rows {
                let _ = write!(out, "{} → {}", r.word, r.fiber);
                if let Some(e) = &r.enumerated {
                    let mark = if *e == r.fiber { "" } else { " MISMATCH" };
                    let _ = write!(out, " (enumerated {e}{mark})");
                }
                out.push('\n');
            }
            let _ = writeln!(out, "total → {total}");
            out
        }
    };
    Ok(Report {
        stdout,
        negative: bad > 0,
    })
}

// verify ---------------------------------------------------------------------

pub fn verify(ctx: &Ctx, args: &VerifyArgs) -> Result<Report, CliError> {
    let report = verify::run(&VerifyConfig {
        max_n: args.max_n,
        ceiling: ctx.ceiling,
        fault: args.inject_fault.then_some(Fault::SwappedFBranch),
    })?;

    let stdout = match ctx.format {
        Format::Json => json(&report),
        Format::Csv => csv_text(
            &["m", "n", "k", "l", "brute", "perm", "recursive", "agree"],
            report.cells.iter().map(|c| {
                vec![
                    c.params.m.to_string(),
                    c.params.n.to_string(),
                    c.params.k.to_string(),
                    c.params.l.to_string(),
                    c.brute.to_string(),
                    c.perm.to_string(),
                    c.recursive.to_string(),
                    c.agrees().to_string(),
                ]
            }),
        ),
        Format::Plain => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "grid: 1 <= m <= n <= {}, 0 <= k, l <= n-1 ({} cells){}",
                report.max_n,
                report.cells.len(),
                if report.fault.is_some() {
                    ", fault injected"
                } else {
                    ""
                }
            );
            for check in &report.checks {
                let failures = report
                    .disagreements
                    .iter()
                    .filter(|d| d.check == *check)
                    .count();
                let verdict = if failures == 0 {
                    "ok".to_string()
                } else {
                    format!("{failures} disagreements")
                };
                let _ = writeln!(out, "{check}: {verdict}");
            }
            for d in &report.disagreements {
                let _ = writeln!(out, "  [{}] {}", d.check, d.detail);
            }
            let t = report.timings;
            let _ = writeln!(
                out,
                "time: brute {:.1?}, perm {:.1?}, recursive {:.1?}, identities {:.1?}",
                t.brute, t.perm, t.recursive, t.identities
            );
            let _ = writeln!(
                out,
                "{}",
                if report.is_clean() {
                    "clean"
                } else {
                    "NOT CLEAN"
                }
            );
            out
        }
    };
    Ok(Report {
        stdout,
        negative: !report.is_clean(),
    })
}
