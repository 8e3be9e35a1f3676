use std::io::Write;
use std::time::Duration;

use rcomp_core::CountingFamily;
use rcomp_oeis::fetch::default_cache_dir;
use rcomp_oeis::fixtures::bundled;
use rcomp_oeis::registry::{registry, shift_notation};
use rcomp_oeis::{align, cross_check, fetch_bfile, BFile, FetchConfig, SequenceId};
use serde::{Deserialize, Serialize};

use crate::args::OeisCheckArgs;
use crate::error::{CliError, CliResult};
use crate::output::Sink;

/// Points evaluated when searching for the shift.
const ALIGN_HORIZON: u64 = 60;

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OeisRecord {
    pub family: String,
    pub id: String,
    pub listed_shift: Option<i64>,
    pub found_shift: Option<i64>,
    pub checked: u64,
    pub mismatches: u64,
    pub source: String,
    pub status: String,
}

struct Job {
    family: CountingFamily,
    id: SequenceId,
    listed_shift: Option<i64>,
}

fn load(id: SequenceId, args: &OeisCheckArgs, cfg: &FetchConfig) -> CliResult<(BFile, &'static str)> {
    if !args.no_fixtures && !args.fetch {
        if let Some(parsed) = bundled(id) {
            return Ok((parsed?, "fixture"));
        }
    }
    Ok((fetch_bfile(id, cfg)?, "cache"))
}

pub fn oeis_check<W: Write>(args: &OeisCheckArgs, sink: &mut Sink<W>) -> CliResult {
    let jobs: Vec<Job> = if args.registry {
        registry()
            .into_iter()
            .map(|row| Job { family: row.family, id: row.id, listed_shift: Some(row.listed_shift) })
            .collect()
    } else {
        let id: SequenceId = args.id.as_deref().unwrap_or_default().parse()?;
        let kind = args.family.ok_or_else(|| CliError::Usage("--id needs --family".into()))?;
        let family = args.params.family(kind)?;
        let listed_shift = registry().into_iter().find(|r| r.id == id && r.family == family).map(|r| r.listed_shift);
        vec![Job { family, id, listed_shift }]
    };
    let cfg = FetchConfig {
        cache_dir: args.cache_dir.clone().unwrap_or_else(default_cache_dir),
        offline: !args.fetch,
        timeout: Duration::from_secs(args.timeout_secs),
        retries: args.retries,
        ..FetchConfig::new("")
    };
    let horizon = ALIGN_HORIZON.max(args.upto);
    let mut failed = 0;
    for job in &jobs {
        let (bfile, source) = load(job.id, args, &cfg)?;
        let mapping = align(job.family, &bfile, horizon, args.max_shift)?;
        let (checked, mismatches) = match &mapping {
            Some(m) => {
                let report = cross_check(m, &bfile, 1..=args.upto)?;
                (report.checked(), report.mismatches.len() as u64)
            }
            None => (0, 0),
        };
        let pass = mapping.is_some() && mismatches == 0;
        let found_shift = mapping.map(|m| m.shift);
        let mut status = if pass { "ok" } else { "FAIL" }.to_string();
        if pass && job.listed_shift.is_some_and(|s| Some(s) != found_shift) {
            status.push_str(" (listed shift differs)");
        }
        failed += usize::from(!pass);
        let listed = job.listed_shift.map_or_else(|| "-".to_string(), |s| s.to_string());
        let line = match found_shift {
            Some(shift) => format!(
                "{} {} {}: shift {shift}, {mismatches} mismatches in n=1..{} (listed shift {listed}) {status}",
                job.family,
                job.id,
                shift_notation(shift),
                args.upto
            ),
            None => format!(
                "{} {}: no shift within {} fits (listed shift {listed}) {status}",
                job.family, job.id, args.max_shift
            ),
        };
        let record = OeisRecord {
            family: job.family.to_string(),
            id: job.id.to_string(),
            listed_shift: job.listed_shift,
            found_shift,
            checked,
            mismatches,
            source: source.into(),
            status,
        };
        sink.record(&record, Some(&line))?;
    }
    sink.plain_line(&format!("oeis-check: {} rows, {} passed, {failed} failed", jobs.len(), jobs.len() - failed))?;
    if failed > 0 {
        return Err(CliError::Mismatch(format!("{failed} of {} rows failed", jobs.len())));
    }
    Ok(())
}
