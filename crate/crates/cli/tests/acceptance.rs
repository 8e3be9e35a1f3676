//! Acceptance checks, one line per criterion.
//!
//! Two criteria cannot be met as stated and are expected to report FAIL:
//! the reference value v_{4,7,3}(16) = 18 (the true count is 12; 18 counts
//! parts in [3, 7]), and the |shift| <= 2 window for the OEIS rows whose
//! offsets put them 3, 4 and 5 places over. The run fails only if the set
//! of failures differs from exactly those.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rcomp_cli::args::GridFamily;
use rcomp_cli::verify::{self, Grid};
use rcomp_core::closed_forms::identities::{fibonacci_split, narayana_split, padovan_split, powers_of_two_row};
use rcomp_core::closed_forms::{
    binet_estimate, binomial, bracket_coefficient, s_rm_diagonal, u_qk_closed, BracketMethod,
};
use rcomp_core::enumerate::count_with_predicate;
use rcomp_core::family::Counter;
use rcomp_core::recurrences::Recurrences;
use rcomp_core::series::{gf_s_rmk, Polynomial, RationalGF};
use rcomp_core::{enumerate_compositions, BigCount, CountingFamily as F, EnumerationBudget, Method};
use rcomp_oeis::fixtures::bundled;
use rcomp_oeis::{align, cross_check, registry};

struct Outcome {
    /// Short labels of the items that failed.
    failed: Vec<String>,
    detail: String,
}

impl Outcome {
    fn from_failures(failed: Vec<String>, checked: usize, what: &str) -> Self {
        let detail = if failed.is_empty() {
            format!("{checked} {what}")
        } else {
            format!("{checked} {what}; failed: {}", failed.join("; "))
        };
        Outcome { failed: failed.into_iter().map(|f| f.split(':').next().unwrap().to_string()).collect(), detail }
    }
}

struct Criterion {
    number: u32,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
    /// Items known not to be attainable.
    expected_failures: &'static [&'static str],
}

const METHODS: [Method; 3] = [Method::Recurrence, Method::Closed, Method::Series];

fn golden_values() -> Outcome {
    let cells: &[(F, u64, u64)] = &[
        (F::All, 5, 16),
        (F::S { r: 1, m: 2 }, 10, 55),
        (F::S { r: 3, m: 7 }, 35, 28),
        (F::S { r: 2, m: 5 }, 31, 154),
        (F::Sk { r: 3, m: 17, k: 4 }, 63, 20),
        (F::Sk { r: 1, m: 2, k: 3 }, 73, 666),
        (F::Sk { r: 17, m: 40, k: 9 }, 1753, 377_348_994),
        (F::Sk { r: 5, m: 12, k: 8 }, 537, 0),
        (F::T { q: 3 }, 5, 13),
        (F::U { q: 3 }, 11, 13),
        (F::V { p: 5, q: 9 }, 16, 6),
        (F::Tk { q: 3, k: 4 }, 7, 16),
        (F::Uk { q: 3, k: 5 }, 17, 15),
        (F::Vk { p: 4, q: 7, k: 3 }, 16, 18),
        (F::Tk { q: 8, k: 11 }, 44, 346_718_362),
        (F::Vk { p: 5, q: 11, k: 13 }, 86, 233_197_198),
    ];
    let mut counter = Counter::new();
    let mut failed = Vec::new();
    for &(family, n, want) in cells {
        let got: Vec<String> = METHODS
            .iter()
            .map(|&m| counter.count(family, n, m).map_or_else(|e| e.to_string(), |v| v.to_string()))
            .collect();
        if got.iter().any(|g| *g != want.to_string()) {
            failed.push(format!("{family}({n}): expected {want}, recurrence/closed/series gave {}", got.join("/")));
        }
    }
    for (r, m, n, want) in [(1, 3, 10, 19), (1, 3, 11, 28), (2, 3, 21, 86)] {
        let (sum, _) = s_rm_diagonal(n, r, m).unwrap();
        if sum != want {
            failed.push(format!("diagonal s_{{{r},{m}}}({n}): expected {want}, got {sum}"));
        }
    }
    Outcome::from_failures(failed, cells.len() + 3, "values")
}

/// Compositions of `n` into exactly `k` positive parts, by dynamic programming.
fn stars_and_bars_dp(n: usize, k: usize) -> u128 {
    let mut ways = vec![vec![0u128; n + 1]; k + 1];
    ways[0][0] = 1;
    for j in 1..=k {
        for total in 1..=n {
            ways[j][total] = (1..=total).map(|a| ways[j - 1][total - a]).sum();
        }
    }
    ways[k][n]
}

fn erratum() -> Outcome {
    let family = F::Uk { q: 6, k: 10 };
    let mut counter = Counter::new();
    let mut failed = Vec::new();
    let closed = u_qk_closed(84, 6, 10).unwrap();
    let mut check = |label: &str, ok: bool| {
        if !ok {
            failed.push(label.to_string());
        }
    };
    check("closed form = C(33,9) = 38567100", closed == binomial(33, 9) && closed == 38_567_100);
    for m in METHODS {
        check(&format!("{m} = 38567100"), counter.count(family, 84, m).unwrap() == 38_567_100);
    }
    check("stars and bars DP for 34 into 10 parts", stars_and_bars_dp(34, 10) == 38_567_100);
    let small = count_with_predicate(66, |a| a >= 6, Some(10), EnumerationBudget::default()).unwrap();
    check("enumerated u_{6,10}(66) = C(15,9) = 5005", small == 5005 && binomial(15, 9) == 5005);
    check("printed 10015005 does not match", closed != 10_015_005);
    check("10015005 = u_{6,10}(80)", counter.count(family, 80, Method::Closed).unwrap() == 10_015_005);
    Outcome::from_failures(failed, 8, "checks")
}

fn four_way_sweep() -> Outcome {
    let grid = Grid { max_n: 18, max_m: 5, max_q: 6, max_p: 4 };
    let report = verify::run(&[GridFamily::All], grid, None);
    let failed = report
        .failures
        .iter()
        .cloned()
        .chain(report.references.iter().filter_map(|r| r.failure.clone()))
        .map(|f| f.describe())
        .collect();
    let mut outcome = Outcome::from_failures(failed, report.points as usize, "points");
    outcome.detail = format!("{} families, {} x 4 methods", report.families, outcome.detail);
    outcome
}

fn series_depth() -> Outcome {
    const DEPTH: u64 = 300;
    let families = [
        F::All,
        F::S { r: 1, m: 2 },
        F::S { r: 1, m: 3 },
        F::S { r: 2, m: 3 },
        F::S { r: 3, m: 7 },
        F::S { r: 2, m: 5 },
        F::Sk { r: 1, m: 2, k: 3 },
        F::Sk { r: 3, m: 17, k: 4 },
        F::Sk { r: 2, m: 5, k: 7 },
        F::T { q: 2 },
        F::T { q: 3 },
        F::T { q: 6 },
        F::U { q: 2 },
        F::U { q: 3 },
        F::U { q: 7 },
        F::V { p: 2, q: 5 },
        F::V { p: 5, q: 9 },
        F::Tk { q: 3, k: 4 },
        F::Tk { q: 8, k: 11 },
        F::Uk { q: 3, k: 5 },
        F::Uk { q: 6, k: 10 },
        F::Vk { p: 4, q: 7, k: 3 },
        F::Vk { p: 5, q: 11, k: 13 },
    ];
    let mut failed = Vec::new();
    for family in families {
        let mut counter = Counter::new();
        let series = counter.values(family, DEPTH, Method::Series).unwrap();
        let rec = counter.values(family, DEPTH, Method::Recurrence).unwrap();
        if let Some(n) = (0..DEPTH as usize).find(|&i| series[i] != rec[i]) {
            failed.push(format!("{family}({})", n + 1));
        }
    }
    Outcome::from_failures(failed, families.len(), "generating functions to order 300")
}

fn fib(n: u64) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

fn identities() -> Outcome {
    let mut rec = Recurrences::new();
    let mut failed = Vec::new();
    let mut checked = 0;
    let mut check = |label: String, ok: bool| {
        checked += 1;
        if !ok {
            failed.push(label);
        }
    };
    let big = |v: u128| BigCount::from(u64::try_from(v).unwrap());
    for n in 1..=40 {
        check(format!("s_{{1,2}}({n}) = F_n"), rec.s_rm(n, 1, 2).unwrap() == big(fib(n)));
        check(format!("t_2({n}) = F_(n+1)"), rec.t_q(n, 2).unwrap() == big(fib(n + 1)));
        check(format!("u_2({n}) = F_(n-1)"), rec.u_q(n, 2).unwrap() == big(fib(n - 1)));
        check(format!("2^(n-1) split n={n}"), powers_of_two_row(n) == rec.count_all(n).unwrap());
        check(format!("F_n split n={n}"), fibonacci_split(n) == rec.s_rm(n, 1, 2).unwrap());
        check(format!("Narayana split n={n}"), narayana_split(n) == rec.s_rm(n, 1, 3).unwrap());
        check(format!("Padovan split n={n}"), padovan_split(n) == rec.s_rm(n, 2, 3).unwrap());
    }
    for n in 3..=60 {
        check(format!("u_3({n}) = s_{{1,3}}({})", n - 2), rec.u_q(n, 3).unwrap() == rec.s_rm(n - 2, 1, 3).unwrap());
    }
    for m in 1..=5u64 {
        for r in (1..=m).filter(|&r| num_gcd(r, m) == 1) {
            for n in 1..=18 {
                let total: BigCount = (1..=n / r).map(|k| rec.s_rmk(n, r, m, k).unwrap()).sum();
                check(format!("sum_k s_{{{r},{m},k}}({n})"), total == rec.s_rm(n, r, m).unwrap());
            }
        }
    }
    for k in 1..=12u64 {
        for q in 1..=8u64 {
            let mut row = BigCount::zero();
            for n in 0..=k * (q - 1) + 1 {
                let e = bracket_coefficient(k, n, q, BracketMethod::Expansion).unwrap();
                let ie = bracket_coefficient(k, n, q, BracketMethod::InclusionExclusion).unwrap();
                check(format!("[{k},{n}]_{q} methods agree"), e == ie);
                row += e;
            }
            check(format!("row sum [{k},*]_{q} = {q}^{k}"), row == q.pow(k as u32));
        }
    }
    for k in 1..=10u64 {
        let gf = RationalGF::new(Polynomial::one(), Polynomial::from_i64s(&[1, -1]).pow(k)).unwrap();
        let s = gf.expand(100);
        let ok = (0..=100u64).all(|j| *s.coefficient(j as usize) == binomial(j + k - 1, k - 1).to_bigint());
        check(format!("1/(1-z)^{k} to order 100"), ok);
    }
    for (r, m) in [(1, 2), (1, 3), (2, 3), (3, 7), (2, 5), (3, 17)] {
        let step = RationalGF::new(Polynomial::x_pow(r), &Polynomial::one() - &Polynomial::x_pow(m)).unwrap();
        for k in 2..=6 {
            let lhs = gf_s_rmk(r, m, k).unwrap().expand(200);
            let rhs = gf_s_rmk(r, m, k - 1).unwrap().times(&step).expand(200);
            check(format!("g_{k} = x^{r}/(1-x^{m}) g_{} for (r,m)=({r},{m})", k - 1), lhs == rhs);
        }
    }
    Outcome::from_failures(failed, checked, "identity checks")
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn binet() -> Outcome {
    let mut rec = Recurrences::new();
    let failed = (1..=70)
        .filter(|&n| {
            let est = binet_estimate(n).unwrap().round();
            est != rec.s_rm(n, 1, 2).unwrap().to_f64() || est as u64 != fib(n) as u64
        })
        .map(|n| format!("n={n}"))
        .collect();
    Outcome::from_failures(failed, 70, "indices")
}

fn oeis_fixtures() -> Outcome {
    let rows = registry();
    let mut failed = Vec::new();
    for row in &rows {
        let b = bundled(row.id).expect("fixture shipped").expect("fixture parses");
        match align(row.family, &b, 60, 2) {
            Ok(Some(mapping)) => {
                let report = cross_check(&mapping, &b, 1..=50).unwrap();
                if !report.passed() {
                    failed.push(format!("{}: {} mismatches", row.id, report.mismatches.len()));
                }
            }
            Ok(None) => failed.push(format!("{}: {} has no shift within 2", row.id, row.family)),
            Err(e) => failed.push(format!("{}: {e}", row.id)),
        }
    }
    Outcome::from_failures(failed, rows.len(), "registry rows")
}

fn enumeration_goldens() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let cases = [
        ("all_n4.txt", F::All, 4),
        ("all_n5.txt", F::All, 5),
        ("odd_n3.txt", F::S { r: 1, m: 2 }, 3),
        ("odd_n4.txt", F::S { r: 1, m: 2 }, 4),
        ("odd_n5.txt", F::S { r: 1, m: 2 }, 5),
        ("s_3_17_4_n63.txt", F::Sk { r: 3, m: 17, k: 4 }, 63),
    ];
    let mut failed = Vec::new();
    for (file, family, n) in cases {
        let want = std::fs::read_to_string(dir.join(file)).unwrap();
        let got: String = enumerate_compositions(n, &family.constraint().unwrap(), EnumerationBudget::default())
            .unwrap()
            .map(|c| format!("{}\n", c.unwrap()))
            .collect();
        if got != want {
            failed.push(file.to_string());
        }
    }
    Outcome::from_failures(failed, cases.len(), "listings")
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            number: 1,
            title: "golden values",
            limit: Some(Duration::from_secs(10)),
            run: golden_values,
            expected_failures: &["v_{4,7,3}(16)"],
        },
        Criterion { number: 2, title: "u_{6,10}(84) erratum", limit: None, run: erratum, expected_failures: &[] },
        Criterion {
            number: 3,
            title: "four-way sweep",
            limit: Some(Duration::from_secs(60)),
            run: four_way_sweep,
            expected_failures: &[],
        },
        Criterion {
            number: 4,
            title: "series depth 300",
            limit: Some(Duration::from_secs(10)),
            run: series_depth,
            expected_failures: &[],
        },
        Criterion { number: 5, title: "identity suite", limit: None, run: identities, expected_failures: &[] },
        Criterion { number: 6, title: "Binet", limit: None, run: binet, expected_failures: &[] },
        Criterion {
            number: 7,
            title: "OEIS fixtures, |shift| <= 2",
            limit: None,
            run: oeis_fixtures,
            expected_failures: &["A000078", "A001591", "A001592"],
        },
        Criterion {
            number: 8,
            title: "enumeration order",
            limit: None,
            run: enumeration_goldens,
            expected_failures: &[],
        },
    ];
    let mut unexpected = 0;
    for c in &criteria {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let elapsed = start.elapsed();
        if let Some(limit) = c.limit {
            if elapsed > limit {
                outcome.failed.push(format!("time {elapsed:.2?} over {limit:?}"));
            }
        }
        let pass = outcome.failed.is_empty();
        println!(
            "criterion {} ({}): {} in {:.2?}: {}",
            c.number,
            c.title,
            if pass { "PASS" } else { "FAIL" },
            elapsed,
            outcome.detail
        );
        let got: BTreeSet<&str> = outcome.failed.iter().map(String::as_str).collect();
        let known: BTreeSet<&str> = c.expected_failures.iter().copied().collect();
        if got != known {
            unexpected += 1;
            println!("  unexpected result: failures {got:?}, known unattainable {known:?}");
        }
    }
    if unexpected > 0 {
        println!("acceptance: {unexpected} criteria deviate from the recorded expectations");
        ExitCode::FAILURE
    } else {
        println!("acceptance: results match the recorded expectations");
        ExitCode::SUCCESS
    }
}
