use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// An OEIS A-number such as `A000045`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SequenceId(u32);

impl SequenceId {
    pub fn number(self) -> u32 {
        self.0
    }

    /// Upstream b-file name, e.g. `b000045.txt`.
    pub fn bfile_name(self) -> String {
        format!("b{:06}.txt", self.0)
    }
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let digits = s.strip_prefix('A').ok_or_else(|| Error::InvalidId(s.to_string()))?;
        if digits.len() != 6 || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidId(s.to_string()));
        }
        Ok(SequenceId(digits.parse().expect("six ascii digits")))
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{:06}", self.0)
    }
}
