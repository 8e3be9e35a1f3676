use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::id::SequenceId;

/// Parsed contents of an OEIS b-file. Indices are contiguous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    id: SequenceId,
    first: i64,
    values: Vec<BigInt>,
}

impl BFile {
    /// Build from values at consecutive indices starting at `first`.
    pub fn new(id: SequenceId, first: i64, values: Vec<BigInt>) -> Self {
        BFile { id, first, values }
    }

    pub fn id(&self) -> SequenceId {
        self.id
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn first_index(&self) -> Option<i64> {
        (!self.values.is_empty()).then_some(self.first)
    }

    pub fn last_index(&self) -> Option<i64> {
        (!self.values.is_empty()).then(|| self.first + self.values.len() as i64 - 1)
    }

    pub fn get(&self, index: i64) -> Option<&BigInt> {
        let offset = index.checked_sub(self.first)?;
        usize::try_from(offset).ok().and_then(|i| self.values.get(i))
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.values.iter().enumerate().map(move |(i, v)| (self.first + i as i64, v))
    }

    /// Serialize as plain `index value` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.entries() {
            out.push_str(&format!("{i} {v}\n"));
        }
        out
    }
}

/// Parse b-file text. Comment (`#`) and blank lines are skipped; LF and CRLF
/// endings are both accepted.
pub fn parse_bfile(id: SequenceId, text: &[u8]) -> Result<BFile> {
    let text = std::str::from_utf8(text).map_err(|e| {
        let line = text[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count() + 1;
        Error::Parse { line, message: "not valid UTF-8".into() }
    })?;
    let mut first = None;
    let mut values = Vec::new();
    for (lineno, raw) in text.split('\n').enumerate() {
        let line_no = lineno + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw).trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::Parse { line: line_no, message: format!("expected '<index> <value>', got {line:?}") });
        };
        let index: i64 =
            idx.parse().map_err(|_| Error::Parse { line: line_no, message: format!("bad index {idx:?}") })?;
        let value: BigInt =
            val.parse().map_err(|_| Error::Parse { line: line_no, message: format!("bad value {val:?}") })?;
        let start = *first.get_or_insert(index);
        let expected = start + values.len() as i64;
        if index != expected {
            return Err(Error::Gap { line: line_no, expected, found: index });
        }
        values.push(value);
    }
    Ok(BFile { id, first: first.unwrap_or(0), values })
}
