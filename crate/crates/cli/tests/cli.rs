use std::path::Path;
use std::process::{Command, Output};

use rcomp_cli::commands::{CoefficientRecord, CompositionRecord, CountRecord};

fn rcomp(args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rcomp"))
        .args(args.split_whitespace())
        .env_remove("RCOMP_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &str) -> String {
    let out = rcomp(args);
    assert!(out.status.success(), "rcomp {args}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

#[test]
fn count_examples() {
    assert_eq!(stdout_of("count s --r 1 --m 2 --n 10"), "55\n");
    assert_eq!(stdout_of("count sk --r 1 --m 2 --k 3 --n 73"), "666\n");
    assert_eq!(stdout_of("count vk --p 5 --q 11 --k 13 --n 86"), "233197198\n");
    assert_eq!(
        stdout_of("count s --r 3 --m 7 --n 35 --method all"),
        "recurrence 28\nclosed 28\nseries 28\noracle 28\n"
    );
}

#[test]
fn enumerate_examples() {
    assert_eq!(stdout_of("enumerate all --n 3"), "3=3\n3=2+1\n3=1+2\n3=1+1+1\n");
    assert_eq!(stdout_of("enumerate s --r 1 --m 2 --n 4"), "4=3+1\n4=1+3\n4=1+1+1+1\n");
    // parts in [4, 7]; there are 12 such compositions in all
    assert_eq!(stdout_of("enumerate vk --p 4 --q 7 --k 3 --n 16 --limit 3"), "16=7+5+4\n16=7+4+5\n16=6+6+4\n");
    assert_eq!(stdout_of("enumerate vk --p 4 --q 7 --k 3 --n 16").lines().count(), 12);
}

#[test]
fn enumeration_listings_match_golden_files() {
    assert_eq!(stdout_of("enumerate all --n 4"), golden("all_n4.txt"));
    assert_eq!(stdout_of("enumerate all --n 5"), golden("all_n5.txt"));
    for n in 3..=5 {
        assert_eq!(stdout_of(&format!("enumerate s --r 1 --m 2 --n {n}")), golden(&format!("odd_n{n}.txt")));
    }
    assert_eq!(stdout_of("enumerate sk --r 3 --m 17 --k 4 --n 63"), golden("s_3_17_4_n63.txt"));
}

#[test]
fn series_examples() {
    assert_eq!(stdout_of("series s --r 1 --m 2 --order 8"), "1 1 2 3 5 8 13 21\n");
    assert_eq!(stdout_of("series t --q 3 --order 5"), "1 2 4 7 13\n");
    assert_eq!(stdout_of("series u --q 3 --order 6"), "0 0 1 1 1 2\n");
    assert_eq!(stdout_of("series s --r 2 --m 4 --order 6"), "0 1 0 1 0 2\n");
    assert_eq!(stdout_of("series t --q 2 --order 4 --bfile"), "1 1\n2 2\n3 3\n4 5\n");
}

#[test]
fn diagonal_examples() {
    assert_eq!(stdout_of("diagonal --r 1 --m 3 --n 10"), "C(3,0)=1\nC(5,3)=10\nC(7,6)=7\nC(9,9)=1\n1+10+7+1=19\n");
    assert!(stdout_of("diagonal --r 1 --m 3 --n 11").ends_with("=28\n"));
    assert!(stdout_of("diagonal --r 2 --m 3 --n 21").ends_with("\n21+56+9=86\n"));
    assert!(stdout_of("diagonal --r 1 --m 2 --n 10").ends_with("\n5+20+21+8+1=55\n"));
    assert_eq!(stdout_of("diagonal --r 3 --m 7 --n 2"), "0\n");
}

#[test]
fn verify_examples() {
    assert!(stdout_of("verify --max-n 12").trim_end().ends_with(" 0 failures"));
    let out = stdout_of("verify --grid-spec s_rmk --max-n 18");
    assert!(out.contains("s_{3,17,4}(63)=20 ok [recurrence closed series oracle]\n"), "{out}");
    let corrupted = rcomp("verify --max-n 10 --corrupt-memo 6");
    assert_eq!(corrupted.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&corrupted.stdout).contains("FAIL "));
}

#[test]
fn oeis_examples() {
    let out = stdout_of("oeis-check --registry --offline");
    assert!(out.ends_with("oeis-check: 33 rows, 33 passed, 0 failed\n"), "{out}");
    assert!(out.contains(
        "s_{1,1} A000079 a(n-1): shift -1, 0 mismatches in n=1..50 (listed shift 0) ok (listed shift differs)\n"
    ));
    assert!(out.contains("s_{2,3} A000931 a(n+1): shift 1, 0 mismatches in n=1..50 (listed shift 1) ok\n"));
    assert_eq!(
        stdout_of("oeis-check --id A000045 --family s --r 1 --m 2"),
        "s_{1,2} A000045 a(n): shift 0, 0 mismatches in n=1..50 (listed shift 0) ok\noeis-check: 1 rows, 1 passed, 0 failed\n"
    );
    assert!(stdout_of("oeis-check --id A017898 --family u --q 4").ends_with("1 passed, 0 failed\n"));
    let narrow = rcomp("oeis-check --registry --max-shift 2");
    assert_eq!(narrow.status.code(), Some(1));
}

#[test]
fn oeis_cold_cache_without_fixtures() {
    let dir = tempfile_dir();
    let out =
        rcomp(&format!("oeis-check --id A000045 --family s --r 1 --m 2 --no-fixtures --cache-dir {}", dir.display()));
    assert_eq!(out.status.code(), Some(3));
    std::fs::write(dir.join("b000045.txt"), golden_fib()).unwrap();
    let out =
        rcomp(&format!("oeis-check --id A000045 --family s --r 1 --m 2 --no-fixtures --cache-dir {}", dir.display()));
    assert!(out.status.success());
    std::fs::remove_dir_all(dir).unwrap();
}

fn tempfile_dir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("rcomp-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn golden_fib() -> String {
    let mut fib = vec![0u128, 1];
    while fib.len() < 80 {
        let n = fib.len();
        fib.push(fib[n - 1] + fib[n - 2]);
    }
    fib.iter().enumerate().map(|(i, v)| format!("{i} {v}\n")).collect()
}

#[test]
fn exit_codes() {
    assert_eq!(rcomp("count s --r 1 --n 3").status.code(), Some(2));
    assert_eq!(rcomp("count s --r 3 --m 2 --n 3").status.code(), Some(2));
    assert_eq!(rcomp("count t --q 2 --m 3 --n 3").status.code(), Some(2));
    assert_eq!(rcomp("count bogus --n 3").status.code(), Some(2));
    assert_eq!(rcomp("oeis-check --id A00004 --family t --q 2").status.code(), Some(2));
    assert_eq!(rcomp("count all --n 30 --method oracle --budget 1000").status.code(), Some(2));
    assert_eq!(rcomp("enumerate all --n 30 --budget 10").status.code(), Some(2));
}

#[test]
fn json_lines_round_trip() {
    let plain = stdout_of("count t --q 3 --n 22 --method all");
    let json = stdout_of("--format json-lines count t --q 3 --n 22 --method all");
    let records: Vec<CountRecord> = json.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let rebuilt: String = records.iter().map(|r| format!("{} {}\n", r.method, r.value)).collect();
    assert_eq!(rebuilt, plain);

    let plain = stdout_of("enumerate all --n 5");
    let json = stdout_of("--format json-lines enumerate all --n 5");
    let rebuilt: String = json
        .lines()
        .map(|l| serde_json::from_str::<CompositionRecord>(l).unwrap())
        .map(|r| format!("{}={}\n", r.n, r.parts))
        .collect();
    assert_eq!(rebuilt, plain);

    let plain = stdout_of("series u --q 2 --order 40");
    let json = stdout_of("--format json-lines series u --q 2 --order 40");
    let values: Vec<String> =
        json.lines().map(|l| serde_json::from_str::<CoefficientRecord>(l).unwrap().value).collect();
    assert_eq!(values.join(" ") + "\n", plain);
}

#[test]
fn every_command_speaks_every_format() {
    for cmd in [
        "count s --r 1 --m 2 --n 10",
        "enumerate s --r 1 --m 2 --n 6",
        "series t --q 3 --order 5",
        "diagonal --r 1 --m 3 --n 10",
        "verify --max-n 6",
        "oeis-check --id A000045 --family s --r 1 --m 2",
    ] {
        for format in ["plain", "json-lines", "csv"] {
            let out = stdout_of(&format!("--format {format} {cmd}"));
            assert!(!out.is_empty(), "{format} {cmd}");
            match format {
                "json-lines" => {
                    for line in out.lines() {
                        serde_json::from_str::<serde_json::Value>(line).unwrap();
                    }
                }
                "csv" => {
                    let mut reader = csv::Reader::from_reader(out.as_bytes());
                    let width = reader.headers().unwrap().len();
                    assert!(reader.records().all(|r| r.unwrap().len() == width), "{cmd}");
                }
                _ => {}
            }
        }
    }
}
