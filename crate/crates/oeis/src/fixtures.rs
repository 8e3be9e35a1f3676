//! Offline copies of the b-files the registry refers to, terms 0..100.

use crate::bfile::{parse_bfile, BFile};
use crate::error::Result;
use crate::id::SequenceId;

macro_rules! bundle {
    ($($digits:literal),* $(,)?) => {
        &[$(($digits, include_str!(concat!("../fixtures/b", $digits, ".txt")))),*]
    };
}

static FIXTURES: &[(&str, &str)] = bundle!(
    "000045", "000073", "000078", "000079", "000930", "000931", "001591", "001592", "003269", "003520", "005708",
    "005709", "005710", "017898", "017899", "017900", "017901", "017902", "017903", "017904", "017905", "017906",
    "017907", "017908", "017909", "078012", "172316", "172317", "172318", "172319", "172320",
);

pub fn bundled_text(id: SequenceId) -> Option<&'static str> {
    let digits = format!("{:06}", id.number());
    FIXTURES.iter().find(|(d, _)| *d == digits).map(|(_, text)| *text)
}

/// The bundled b-file for `id`, if one ships with the crate.
pub fn bundled(id: SequenceId) -> Option<Result<BFile>> {
    bundled_text(id).map(|text| parse_bfile(id, text.as_bytes()))
}

pub fn bundled_ids() -> impl Iterator<Item = SequenceId> {
    FIXTURES.iter().map(|(d, _)| format!("A{d}").parse().expect("fixture names are valid ids"))
}
