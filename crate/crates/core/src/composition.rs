//! Core domain types: compositions and the part restrictions that select them.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// An ordered sequence of positive parts together with their total.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u64>,
    total: u64,
}

impl Composition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition("parts must be positive".into()));
        }
        let total = parts
            .iter()
            .try_fold(0u64, |acc, &p| acc.checked_add(p))
            .ok_or_else(|| Error::InvalidComposition("total overflows u64".into()))?;
        Ok(Composition { parts, total })
    }

    /// Caller guarantees `parts` is nonempty, positive and sums to `total`.
    pub(crate) fn from_parts_unchecked(parts: Vec<u64>, total: u64) -> Self {
        debug_assert_eq!(parts.iter().sum::<u64>(), total);
        Composition { parts, total }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reversed(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts, total: self.total }
    }
}

/// Written in equation form, `5=3+1+1`.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}=", self.total)?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parts congruent to `r` modulo `m`, with `0 < r <= m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModClass {
    r: u64,
    m: u64,
}

impl ModClass {
    pub fn new(r: u64, m: u64) -> Result<Self> {
        if r == 0 || m == 0 {
            return Err(Error::invalid(format!("residue class needs r, m >= 1 (got r={r}, m={m})")));
        }
        if r > m {
            return Err(Error::invalid(format!("residue class needs r <= m (got r={r}, m={m})")));
        }
        Ok(ModClass { r, m })
    }

    /// Like [`ModClass::new`] but additionally requires `gcd(r, m) = 1`.
    pub fn coprime(r: u64, m: u64) -> Result<Self> {
        let c = Self::new(r, m)?;
        if !c.is_reduced() {
            return Err(Error::invalid(format!("residue class must be reduced: gcd({r}, {m}) = {}", r.gcd(&m))));
        }
        Ok(c)
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn is_reduced(&self) -> bool {
        self.r.gcd(&self.m) == 1
    }

    pub fn contains(&self, a: u64) -> bool {
        a >= self.r && (a - self.r).is_multiple_of(self.m)
    }
}

/// Inclusive part-size window. A missing lower bound is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SizeBounds {
    lo: u64,
    hi: Option<u64>,
}

impl SizeBounds {
    pub fn new(lo: Option<u64>, hi: Option<u64>) -> Result<Self> {
        let lo = match lo {
            Some(0) => return Err(Error::invalid("lower part bound must be >= 1")),
            Some(lo) => lo,
            None => 1,
        };
        match hi {
            Some(0) => Err(Error::invalid("upper part bound must be >= 1")),
            Some(hi) if lo > hi => Err(Error::invalid(format!("part bounds out of order: lower {lo} > upper {hi}"))),
            _ => Ok(SizeBounds { lo, hi }),
        }
    }

    /// Parts at most `q`.
    pub fn at_most(q: u64) -> Result<Self> {
        Self::new(None, Some(q))
    }

    /// Parts at least `q`.
    pub fn at_least(q: u64) -> Result<Self> {
        Self::new(Some(q), None)
    }

    /// Parts in `[p, q]`.
    pub fn between(p: u64, q: u64) -> Result<Self> {
        Self::new(Some(p), Some(q))
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> Option<u64> {
        self.hi
    }

    pub fn contains(&self, a: u64) -> bool {
        a >= self.lo && self.hi.is_none_or(|hi| a <= hi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartKind {
    All,
    ModClass(ModClass),
    Size(SizeBounds),
}

/// A restriction on admissible parts plus an optional exact part count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PartConstraint {
    kind: PartKind,
    exact_parts: Option<u64>,
}

impl PartConstraint {
    pub fn all() -> Self {
        PartConstraint { kind: PartKind::All, exact_parts: None }
    }

    pub fn mod_class(r: u64, m: u64) -> Result<Self> {
        Ok(PartConstraint { kind: PartKind::ModClass(ModClass::new(r, m)?), exact_parts: None })
    }

    pub fn size(bounds: SizeBounds) -> Self {
        PartConstraint { kind: PartKind::Size(bounds), exact_parts: None }
    }

    pub fn from_kind(kind: PartKind) -> Self {
        PartConstraint { kind, exact_parts: None }
    }

    pub fn with_exact_parts(mut self, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::invalid("exact part count must be >= 1"));
        }
        self.exact_parts = Some(k);
        Ok(self)
    }

    pub fn kind(&self) -> PartKind {
        self.kind
    }

    pub fn exact_parts(&self) -> Option<u64> {
        self.exact_parts
    }
}

/// Outcome of reducing a residue class by `d = gcd(r, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalized {
    /// Counting compositions of `n` over the original class equals counting
    /// compositions of `reduced_n` over `class`.
    Reduced { class: ModClass, reduced_n: u64 },
    /// `d` does not divide `n`; no composition exists.
    Empty,
}

/// Divide `r`, `m` and `n` through by `gcd(r, m)`.
pub fn normalize_mod_class(r: u64, m: u64, n: u64) -> Result<Normalized> {
    ModClass::new(r, m)?;
    if n == 0 {
        return Err(Error::invalid("n must be >= 1"));
    }
    let d = r.gcd(&m);
    if !n.is_multiple_of(d) {
        return Ok(Normalized::Empty);
    }
    Ok(Normalized::Reduced { class: ModClass { r: r / d, m: m / d }, reduced_n: n / d })
}

/// Part-level test; ignores `exact_parts`.
pub fn admits_part(c: &PartConstraint, a: u64) -> bool {
    match c.kind {
        PartKind::All => a >= 1,
        PartKind::ModClass(mc) => mc.contains(a),
        PartKind::Size(b) => b.contains(a),
    }
}

pub fn validate_composition(c: &PartConstraint, comp: &Composition, n: u64) -> bool {
    comp.total() == n
        && comp.parts().iter().all(|&a| admits_part(c, a))
        && c.exact_parts.is_none_or(|k| comp.len() as u64 == k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[u64]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            normalize_mod_class(1, 2, 9).unwrap(),
            Normalized::Reduced { class: ModClass::new(1, 2).unwrap(), reduced_n: 9 }
        );
        assert_eq!(
            normalize_mod_class(2, 4, 6).unwrap(),
            Normalized::Reduced { class: ModClass::new(1, 2).unwrap(), reduced_n: 3 }
        );
        assert_eq!(normalize_mod_class(2, 4, 5).unwrap(), Normalized::Empty);
    }

    #[test]
    fn normalize_rejects_bad_classes() {
        assert!(matches!(normalize_mod_class(3, 2, 5), Err(Error::InvalidConstraint(_))));
        assert!(matches!(normalize_mod_class(0, 2, 5), Err(Error::InvalidConstraint(_))));
    }

    #[test]
    fn normalize_is_idempotent() {
        for m in 1..=12 {
            for r in 1..=m {
                for n in 1..=30 {
                    if let Normalized::Reduced { class, reduced_n } = normalize_mod_class(r, m, n).unwrap() {
                        assert_eq!(
                            normalize_mod_class(class.r(), class.m(), reduced_n).unwrap(),
                            Normalized::Reduced { class, reduced_n }
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn admits_part_examples() {
        assert!(admits_part(&PartConstraint::mod_class(3, 7).unwrap(), 17));
        assert!(!admits_part(&PartConstraint::mod_class(3, 7).unwrap(), 16));
        let window = PartConstraint::size(SizeBounds::between(5, 9).unwrap());
        assert!(!admits_part(&window, 4));
        assert!(admits_part(&window, 9));
        assert!(!admits_part(&window, 10));
        assert!(admits_part(&PartConstraint::all(), 1));
    }

    #[test]
    fn validate_examples() {
        let odd = PartConstraint::mod_class(1, 2).unwrap();
        assert!(validate_composition(&odd, &comp(&[3, 1, 1]), 5));
        assert!(!validate_composition(&odd, &comp(&[2, 3]), 5));
        assert!(!validate_composition(&odd, &comp(&[3, 1, 1]), 6));

        let t34 = PartConstraint::size(SizeBounds::at_most(3).unwrap()).with_exact_parts(4).unwrap();
        assert!(validate_composition(&t34, &comp(&[3, 2, 1, 1]), 7));
        assert!(!validate_composition(&t34, &comp(&[3, 3, 1]), 7));
    }

    #[test]
    fn construction_errors() {
        assert!(Composition::new(vec![]).is_err());
        assert!(Composition::new(vec![2, 0, 1]).is_err());
        assert!(SizeBounds::between(5, 4).is_err());
        assert!(SizeBounds::new(Some(0), None).is_err());
        assert!(PartConstraint::all().with_exact_parts(0).is_err());
        assert!(ModClass::coprime(2, 4).is_err());
        assert!(ModClass::coprime(3, 4).is_ok());
    }

    #[test]
    fn display_is_equation_form() {
        assert_eq!(comp(&[3, 1, 1]).to_string(), "5=3+1+1");
        assert_eq!(comp(&[1]).to_string(), "1=1");
    }
}
