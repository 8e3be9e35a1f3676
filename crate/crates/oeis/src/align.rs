use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use rcomp_core::family::Counter;
use rcomp_core::{BigCount, CountingFamily, Method};

use crate::bfile::BFile;
use crate::error::{Error, Result};
use crate::id::SequenceId;

/// Fewest points of agreement accepted as an alignment.
pub const MIN_OVERLAP: usize = 10;

/// `family(n) = a(n + shift)` for the sequence `id`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OeisMapping {
    pub family: CountingFamily,
    pub id: SequenceId,
    pub shift: i64,
}

impl fmt::Display for OeisMapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n) = {}(n{:+})", self.family, self.id, self.shift)
    }
}

/// The unique `shift` in `[-max_shift, max_shift]` with
/// `values[n - 1] = a(n + shift)` wherever `a(n + shift)` exists, or `None`.
pub fn find_shift(values: &[BigCount], bfile: &BFile, max_shift: u64) -> Result<Option<i64>> {
    if values.len() < MIN_OVERLAP {
        return Err(Error::TooShort { need: MIN_OVERLAP, got: values.len() });
    }
    let max_shift = i64::try_from(max_shift).unwrap_or(i64::MAX / 2);
    let values: Vec<BigInt> = values.iter().map(BigCount::to_bigint).collect();
    let fits: Vec<i64> = (-max_shift..=max_shift)
        .filter(|&shift| {
            let mut overlap = 0;
            for (i, v) in values.iter().enumerate() {
                let n = i as i64 + 1;
                if let Some(a) = bfile.get(n + shift) {
                    if a != v {
                        return false;
                    }
                    overlap += 1;
                }
            }
            overlap >= MIN_OVERLAP
        })
        .collect();
    match fits.as_slice() {
        [] => Ok(None),
        [shift] => Ok(Some(*shift)),
        _ => Err(Error::Ambiguous(fits)),
    }
}

/// Evaluate `family` over `1..=horizon` and align it with `bfile`.
pub fn align(family: CountingFamily, bfile: &BFile, horizon: u64, max_shift: u64) -> Result<Option<OeisMapping>> {
    let values = Counter::new().values(family, horizon, Method::Recurrence)?;
    Ok(find_shift(&values, bfile, max_shift)?.map(|shift| OeisMapping { family, id: bfile.id(), shift }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: u64,
    pub computed: BigCount,
    pub listed: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub mapping: OeisMapping,
    pub range: RangeInclusive<u64>,
    pub mismatches: Vec<Mismatch>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn checked(&self) -> u64 {
        self.range.end() - self.range.start() + 1
    }
}

/// Recompute the family over `range` and compare against the b-file.
pub fn cross_check(mapping: &OeisMapping, bfile: &BFile, range: RangeInclusive<u64>) -> Result<CrossCheckReport> {
    let (lo, hi) = (*range.start(), *range.end());
    let want = (lo as i64 + mapping.shift, hi as i64 + mapping.shift);
    let uncovered = || Error::RangeUncovered {
        id: bfile.id().to_string(),
        first: bfile.first_index().unwrap_or(0),
        last: bfile.last_index().unwrap_or(-1),
        lo: want.0,
        hi: want.1,
    };
    if lo == 0 || hi < lo {
        return Err(Error::Core(rcomp_core::Error::OutOfRange { n: lo, lo: 1, hi }));
    }
    match (bfile.first_index(), bfile.last_index()) {
        (Some(first), Some(last)) if first <= want.0 && want.1 <= last => {}
        _ => return Err(uncovered()),
    }
    let mut counter = Counter::new();
    let mut mismatches = Vec::new();
    for n in range.clone() {
        let computed = counter.count(mapping.family, n, Method::Recurrence)?;
        let listed = bfile.get(n as i64 + mapping.shift).expect("coverage checked above");
        if computed.to_bigint() != *listed {
            mismatches.push(Mismatch { n, computed, listed: listed.clone() });
        }
    }
    Ok(CrossCheckReport { mapping: *mapping, range, mismatches })
}
