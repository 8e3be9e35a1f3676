//! Catalogued OEIS counterparts of the counting families, with the index
//! shift each was originally listed under.

use std::fmt;

use rcomp_core::CountingFamily;

use crate::id::SequenceId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Group {
    /// `s_{1,m}`, parts congruent to 1 mod m.
    ResidueOne,
    /// `t_q`, parts at most q.
    AtMost,
    /// `u_q`, parts at least q.
    AtLeast,
    /// `s_{2,3}`, the Padovan sequence.
    Padovan,
}

impl Group {
    pub fn label(self) -> &'static str {
        match self {
            Group::ResidueOne => "s_{1,m}",
            Group::AtMost => "t_q",
            Group::AtLeast => "u_q",
            Group::Padovan => "s_{2,3}",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegistryRow {
    pub group: Group,
    pub family: CountingFamily,
    pub id: SequenceId,
    /// Shift as listed alongside the sequence. A hint only; `align` decides.
    pub listed_shift: i64,
}

/// `a(n)`, `a(n+2)`, `a(n-1)` for shifts 0, 2, -1.
pub fn shift_notation(shift: i64) -> String {
    match shift {
        0 => "a(n)".to_string(),
        s => format!("a(n{s:+})"),
    }
}

impl fmt::Display for RegistryRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.family, self.id, shift_notation(self.listed_shift))
    }
}

const RESIDUE_ONE: [(u64, i64, u32); 8] =
    [(1, 0, 79), (2, 0, 45), (3, -1, 930), (4, 0, 3269), (5, -1, 3520), (6, -1, 5708), (7, -1, 5709), (8, -1, 5710)];

const AT_MOST: [(u64, i64, u32); 10] = [
    (2, 1, 45),
    (3, 2, 73),
    (4, 3, 78),
    (5, 4, 1591),
    (6, 5, 1592),
    (7, -1, 172316),
    (8, -1, 172317),
    (9, -1, 172318),
    (10, -1, 172319),
    (11, -1, 172320),
];

const AT_LEAST: [(u64, i64, u32); 14] = [
    (2, -1, 45),
    (3, 0, 78012),
    (4, 0, 17898),
    (5, 0, 17899),
    (6, 0, 17900),
    (7, 0, 17901),
    (8, 0, 17902),
    (9, 0, 17903),
    (10, 0, 17904),
    (11, 0, 17905),
    (12, 0, 17906),
    (13, 0, 17907),
    (14, 0, 17908),
    (15, 0, 17909),
];

fn id(number: u32) -> SequenceId {
    format!("A{number:06}").parse().expect("registry ids are six digits")
}

/// Every catalogued row, grouped and in parameter order.
pub fn registry() -> Vec<RegistryRow> {
    let mut rows = Vec::new();
    for (m, shift, number) in RESIDUE_ONE {
        rows.push(RegistryRow {
            group: Group::ResidueOne,
            family: CountingFamily::S { r: 1, m },
            id: id(number),
            listed_shift: shift,
        });
    }
    for (q, shift, number) in AT_MOST {
        rows.push(RegistryRow {
            group: Group::AtMost,
            family: CountingFamily::T { q },
            id: id(number),
            listed_shift: shift,
        });
    }
    for (q, shift, number) in AT_LEAST {
        rows.push(RegistryRow {
            group: Group::AtLeast,
            family: CountingFamily::U { q },
            id: id(number),
            listed_shift: shift,
        });
    }
    rows.push(RegistryRow {
        group: Group::Padovan,
        family: CountingFamily::S { r: 2, m: 3 },
        id: id(931),
        listed_shift: 1,
    });
    rows
}
