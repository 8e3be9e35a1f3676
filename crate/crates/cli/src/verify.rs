//! Cross-method sweeps. Each family instance is an independent cell; cells
//! run in parallel and are reported in sorted order.

use std::io::Write;

use rayon::prelude::*;
use rcomp_core::family::Counter;
use rcomp_core::recurrences::Recurrences;
use rcomp_core::{BigCount, CountingFamily, EnumerationBudget, Method};
use serde::{Deserialize, Serialize};

use crate::args::{GridFamily, VerifyArgs};
use crate::error::{CliError, CliResult};
use crate::output::Sink;

/// Reference values, each checked by every method that can reach it.
pub const REFERENCE_CELLS: &[(CountingFamily, u64, u64)] = &[
    (CountingFamily::All, 5, 16),
    (CountingFamily::S { r: 1, m: 2 }, 10, 55),
    (CountingFamily::S { r: 1, m: 3 }, 10, 19),
    (CountingFamily::S { r: 1, m: 3 }, 11, 28),
    (CountingFamily::S { r: 3, m: 7 }, 35, 28),
    (CountingFamily::S { r: 2, m: 3 }, 21, 86),
    (CountingFamily::S { r: 2, m: 5 }, 31, 154),
    (CountingFamily::Sk { r: 3, m: 17, k: 4 }, 63, 20),
    (CountingFamily::Sk { r: 1, m: 2, k: 3 }, 73, 666),
    (CountingFamily::Sk { r: 17, m: 40, k: 9 }, 1753, 377_348_994),
    (CountingFamily::Sk { r: 5, m: 12, k: 8 }, 537, 0),
    (CountingFamily::T { q: 3 }, 5, 13),
    (CountingFamily::U { q: 3 }, 11, 13),
    (CountingFamily::V { p: 5, q: 9 }, 16, 6),
    (CountingFamily::Tk { q: 3, k: 4 }, 7, 16),
    (CountingFamily::Uk { q: 3, k: 5 }, 17, 15),
    (CountingFamily::Uk { q: 6, k: 10 }, 84, 38_567_100),
    // parts in [4, 7]; 18 is the count for parts in [3, 7]
    (CountingFamily::Vk { p: 4, q: 7, k: 3 }, 16, 12),
    (CountingFamily::Tk { q: 8, k: 11 }, 44, 346_718_362),
    (CountingFamily::Vk { p: 5, q: 11, k: 13 }, 86, 233_197_198),
];

/// Enumeration is only attempted below these sizes.
const ORACLE_MAX_N: u64 = 100;
const ORACLE_MAX_COUNT: u64 = 1_000_000;

#[derive(Clone, Copy, Debug)]
pub struct Grid {
    pub max_n: u64,
    pub max_m: u64,
    pub max_q: u64,
    pub max_p: u64,
}

fn kind_of(family: CountingFamily) -> GridFamily {
    match family {
        CountingFamily::All => GridFamily::C,
        CountingFamily::S { .. } => GridFamily::SRm,
        CountingFamily::Sk { .. } => GridFamily::SRmk,
        CountingFamily::T { .. } => GridFamily::TQ,
        CountingFamily::U { .. } => GridFamily::UQ,
        CountingFamily::V { .. } => GridFamily::VPq,
        CountingFamily::Tk { .. } => GridFamily::TQk,
        CountingFamily::Uk { .. } => GridFamily::UQk,
        CountingFamily::Vk { .. } => GridFamily::VPqk,
    }
}

fn selected(spec: &[GridFamily], kind: GridFamily) -> bool {
    spec.iter().any(|&s| s == GridFamily::All || s == kind)
}

fn coprime(a: u64, b: u64) -> bool {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a == 1
}

/// Every family instance in the grid: coprime `r <= m <= max_m`,
/// `q <= max_q`, `p <= min(q, max_p)`, `k <= max_n`.
pub fn grid_families(spec: &[GridFamily], grid: Grid) -> Vec<CountingFamily> {
    let mut out = vec![CountingFamily::All];
    for m in 1..=grid.max_m {
        for r in (1..=m).filter(|&r| coprime(r, m)) {
            out.push(CountingFamily::S { r, m });
            out.extend((1..=grid.max_n).map(|k| CountingFamily::Sk { r, m, k }));
        }
    }
    for q in 1..=grid.max_q {
        out.push(CountingFamily::T { q });
        out.push(CountingFamily::U { q });
        out.extend((1..=grid.max_n).map(|k| CountingFamily::Tk { q, k }));
        out.extend((1..=grid.max_n).map(|k| CountingFamily::Uk { q, k }));
        for p in 1..=q.min(grid.max_p) {
            out.push(CountingFamily::V { p, q });
            out.extend((1..=grid.max_n).map(|k| CountingFamily::Vk { p, q, k }));
        }
    }
    out.retain(|f| selected(spec, kind_of(*f)));
    out.sort_unstable();
    out
}

fn part_count(family: CountingFamily) -> u64 {
    match family {
        CountingFamily::Sk { k, .. } | CountingFamily::Tk { k, .. } | CountingFamily::Uk { k, .. } => k,
        CountingFamily::Vk { k, .. } => k,
        _ => 1,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub family: CountingFamily,
    pub n: u64,
    /// `(method, value or error)` for each method tried.
    pub results: Vec<(Method, String)>,
    pub expected: Option<u64>,
}

impl Failure {
    pub fn describe(&self) -> String {
        let mut s = format!("FAIL {}({}):", self.family, self.n);
        if let Some(e) = self.expected {
            s.push_str(&format!(" expected={e}"));
        }
        for (m, v) in &self.results {
            s.push_str(&format!(" {m}={v}"));
        }
        s
    }
}

fn counter(corrupt: Option<u64>) -> Counter {
    let mut rec = Recurrences::new();
    if let Some(n) = corrupt {
        rec.corrupt_memo_at(n);
    }
    Counter::with_recurrences(rec, EnumerationBudget::default())
}

fn render(r: &rcomp_core::Result<BigCount>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error({e})"),
    }
}

/// Check one family over `1..=max_n`, skipping `n` below its part count.
/// Returns the number of points checked and the failures.
pub fn check_family(family: CountingFamily, max_n: u64, corrupt: Option<u64>) -> (u64, Vec<Failure>) {
    let mut counter = counter(corrupt);
    let per_method: Vec<(Method, Vec<rcomp_core::Result<BigCount>>)> = Method::ALL
        .into_iter()
        .map(|method| {
            let values = match method {
                Method::Oracle => (1..=max_n).map(|n| counter.count(family, n, method)).collect(),
                _ => match counter.values(family, max_n, method) {
                    Ok(v) => v.into_iter().map(Ok).collect(),
                    Err(e) => (1..=max_n).map(|_| Err(e.clone())).collect(),
                },
            };
            (method, values)
        })
        .collect();
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in part_count(family)..=max_n {
        checked += 1;
        let idx = (n - 1) as usize;
        let first = &per_method[0].1[idx];
        let agree = first.is_ok() && per_method.iter().all(|(_, vals)| vals[idx].as_ref().ok() == first.as_ref().ok());
        if !agree {
            let results = per_method.iter().map(|(m, vals)| (*m, render(&vals[idx]))).collect();
            failures.push(Failure { family, n, results, expected: None });
        }
    }
    (checked, failures)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceOutcome {
    pub family: CountingFamily,
    pub n: u64,
    pub expected: u64,
    pub methods: Vec<Method>,
    pub failure: Option<Failure>,
}

pub fn check_reference(family: CountingFamily, n: u64, expected: u64, corrupt: Option<u64>) -> ReferenceOutcome {
    let mut counter = counter(corrupt);
    let methods: Vec<Method> = Method::ALL
        .into_iter()
        .filter(|&m| m != Method::Oracle || (n <= ORACLE_MAX_N && expected <= ORACLE_MAX_COUNT))
        .collect();
    let results: Vec<(Method, rcomp_core::Result<BigCount>)> =
        methods.iter().map(|&m| (m, counter.count(family, n, m))).collect();
    let ok = results.iter().all(|(_, r)| r.as_ref().is_ok_and(|v| *v == expected));
    let failure = (!ok).then(|| Failure {
        family,
        n,
        results: results.iter().map(|(m, r)| (*m, render(r))).collect(),
        expected: Some(expected),
    });
    ReferenceOutcome { family, n, expected, methods, failure }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub families: usize,
    pub points: u64,
    pub references: Vec<ReferenceOutcome>,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn failure_count(&self) -> usize {
        self.failures.len() + self.references.iter().filter(|r| r.failure.is_some()).count()
    }
}

pub fn run(spec: &[GridFamily], grid: Grid, corrupt: Option<u64>) -> Report {
    let families = grid_families(spec, grid);
    let mut cells: Vec<(CountingFamily, u64, Vec<Failure>)> = families
        .par_iter()
        .map(|&f| {
            let (checked, failures) = check_family(f, grid.max_n, corrupt);
            (f, checked, failures)
        })
        .collect();
    cells.sort_by_key(|c| c.0);
    let mut references: Vec<ReferenceOutcome> = REFERENCE_CELLS
        .par_iter()
        .filter(|(f, _, _)| selected(spec, kind_of(*f)))
        .map(|&(f, n, expected)| check_reference(f, n, expected, corrupt))
        .collect();
    references.sort_by_key(|r| (r.family, r.n));
    Report {
        families: cells.len(),
        points: cells.iter().map(|c| c.1).sum(),
        references,
        failures: cells.into_iter().flat_map(|c| c.2).collect(),
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyRecord {
    pub kind: String,
    pub family: String,
    pub n: Option<u64>,
    pub status: String,
    pub detail: String,
}

pub fn verify<W: Write>(args: &VerifyArgs, sink: &mut Sink<W>) -> CliResult {
    if args.max_n == 0 {
        return Err(CliError::Usage("--max-n must be >= 1".into()));
    }
    let grid = Grid { max_n: args.max_n, max_m: args.max_m, max_q: args.max_q, max_p: args.max_p };
    let report = run(&args.grid_spec, grid, args.corrupt_memo);
    for r in &report.references {
        let methods = r.methods.iter().map(|m| m.name()).collect::<Vec<_>>().join(" ");
        let (status, detail) = match &r.failure {
            None => ("ok".to_string(), methods),
            Some(f) => ("FAIL".to_string(), f.describe()),
        };
        let line = format!("{}({})={} {status} [{detail}]", r.family, r.n, r.expected);
        let record =
            VerifyRecord { kind: "reference".into(), family: r.family.to_string(), n: Some(r.n), status, detail };
        sink.record(&record, Some(&line))?;
    }
    for f in &report.failures {
        let record = VerifyRecord {
            kind: "grid".into(),
            family: f.family.to_string(),
            n: Some(f.n),
            status: "FAIL".into(),
            detail: f.describe(),
        };
        sink.record(&record, Some(&f.describe()))?;
    }
    let failures = report.failure_count();
    let summary = format!(
        "verify: {} families, {} points x {} methods, {} reference values, {failures} failures",
        report.families,
        report.points,
        Method::ALL.len(),
        report.references.len()
    );
    let record = VerifyRecord {
        kind: "summary".into(),
        family: String::new(),
        n: None,
        status: if failures == 0 { "ok" } else { "FAIL" }.into(),
        detail: summary.clone(),
    };
    sink.record(&record, Some(&summary))?;
    if failures > 0 {
        return Err(CliError::Mismatch(format!("{failures} verification failures")));
    }
    Ok(())
}
