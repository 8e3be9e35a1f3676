//! Exhaustive generation of restricted compositions.
//!
//! Compositions come out in strictly decreasing lexicographic order of their
//! part sequences: `5; 4+1; 3+2; 3+1+1; 2+3; ...`. This is the order of a
//! depth-first walk that tries the largest admissible part first.

use crate::composition::{Composition, PartConstraint, PartKind};
use crate::count::BigCount;
use crate::error::{Error, Result};

/// Hard cap on how many compositions a single enumeration may produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_items: u64,
}

impl EnumerationBudget {
    pub const DEFAULT_MAX_ITEMS: u64 = 10_000_000;

    pub fn new(max_items: u64) -> Self {
        EnumerationBudget { max_items }
    }

    pub fn unlimited() -> Self {
        EnumerationBudget { max_items: u64::MAX }
    }
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_items: Self::DEFAULT_MAX_ITEMS }
    }
}

enum PartRule<'a> {
    Window { lo: u64, hi: Option<u64> },
    Residue { r: u64, m: u64 },
    Predicate(Box<dyn Fn(u64) -> bool + 'a>),
}

impl PartRule<'_> {
    fn from_kind(kind: PartKind) -> Self {
        match kind {
            PartKind::All => PartRule::Window { lo: 1, hi: None },
            PartKind::Size(b) => PartRule::Window { lo: b.lo(), hi: b.hi() },
            PartKind::ModClass(mc) => PartRule::Residue { r: mc.r(), m: mc.m() },
        }
    }

    /// Largest admissible part `<= x`.
    fn largest_at_most(&self, x: u64) -> Option<u64> {
        match self {
            PartRule::Window { lo, hi } => {
                let cap = hi.map_or(x, |hi| hi.min(x));
                (cap >= *lo).then_some(cap)
            }
            PartRule::Residue { r, m } => (x >= *r).then(|| r + (x - r) / m * m),
            PartRule::Predicate(admits) => (1..=x).rev().find(|&a| admits(a)),
        }
    }

    /// Next admissible part strictly below `a`.
    fn next_below(&self, a: u64) -> Option<u64> {
        match self {
            PartRule::Window { lo, .. } => (a > *lo).then(|| a - 1),
            PartRule::Residue { r, m } => (a >= r + m).then(|| a - m),
            PartRule::Predicate(admits) => (1..a).rev().find(|&b| admits(b)),
        }
    }

    fn min_part(&self) -> u64 {
        match self {
            PartRule::Window { lo, .. } => *lo,
            PartRule::Residue { r, .. } => *r,
            PartRule::Predicate(_) => 1,
        }
    }

    fn max_part(&self) -> Option<u64> {
        match self {
            PartRule::Window { hi, .. } => *hi,
            _ => None,
        }
    }
}

/// Depth-first walker over the composition tree. `parts` always holds a
/// prefix of admissible parts and `rem` what is left to reach `n`.
struct Walker<'a> {
    n: u64,
    rule: PartRule<'a>,
    exact_parts: Option<u64>,
    parts: Vec<u64>,
    rem: u64,
    started: bool,
    done: bool,
}

impl<'a> Walker<'a> {
    fn new(n: u64, rule: PartRule<'a>, exact_parts: Option<u64>) -> Self {
        Walker { n, rule, exact_parts, parts: Vec::new(), rem: n, started: false, done: false }
    }

    /// Can the current prefix still be completed, as far as cheap bounds tell?
    fn feasible(&self) -> bool {
        let Some(k) = self.exact_parts else {
            return true;
        };
        let used = self.parts.len() as u64;
        if used > k {
            return false;
        }
        let slots = k - used;
        if slots == 0 {
            return self.rem == 0;
        }
        let min_ok = slots.checked_mul(self.rule.min_part()).is_some_and(|lo| self.rem >= lo);
        let max_ok = self.rule.max_part().is_none_or(|hi| slots.checked_mul(hi).is_none_or(|cap| self.rem <= cap));
        min_ok && max_ok
    }

    /// Greedily append the largest admissible parts. True when this lands on a
    /// complete composition.
    fn extend(&mut self) -> bool {
        loop {
            if !self.feasible() {
                return false;
            }
            if self.rem == 0 {
                return !self.parts.is_empty();
            }
            match self.rule.largest_at_most(self.rem) {
                Some(a) => {
                    self.parts.push(a);
                    self.rem -= a;
                }
                None => return false,
            }
        }
    }

    /// Move to the next complete composition; false once exhausted.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            if self.extend() {
                return true;
            }
        }
        loop {
            let Some(a) = self.parts.pop() else {
                self.done = true;
                return false;
            };
            self.rem += a;
            if let Some(b) = self.rule.next_below(a) {
                self.parts.push(b);
                self.rem -= b;
                if self.extend() {
                    return true;
                }
            }
        }
    }
}

/// Stream of compositions produced by [`enumerate_compositions`].
///
/// Yields `Err(BudgetExceeded)` once, in place of the first composition past
/// the budget, and then ends.
pub struct Compositions<'a> {
    walker: Walker<'a>,
    budget: EnumerationBudget,
    produced: u64,
    failed: bool,
}

impl Iterator for Compositions<'_> {
    type Item = Result<Composition>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed || !self.walker.advance() {
            return None;
        }
        if self.produced == self.budget.max_items {
            self.failed = true;
            return Some(Err(Error::BudgetExceeded { max_items: self.budget.max_items }));
        }
        self.produced += 1;
        let parts = self.walker.parts.clone();
        Some(Ok(Composition::from_parts_unchecked(parts, self.walker.n)))
    }
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("n must be >= 1"));
    }
    Ok(())
}

/// Every composition of `n` satisfying `c`, in decreasing lexicographic order.
pub fn enumerate_compositions(n: u64, c: &PartConstraint, budget: EnumerationBudget) -> Result<Compositions<'static>> {
    check_n(n)?;
    Ok(Compositions {
        walker: Walker::new(n, PartRule::from_kind(c.kind()), c.exact_parts()),
        budget,
        produced: 0,
        failed: false,
    })
}

/// Enumerate with an arbitrary per-part predicate instead of one of the
/// built-in constraint families.
pub fn enumerate_with_predicate<'a, F>(
    n: u64,
    admits: F,
    exact_parts: Option<u64>,
    budget: EnumerationBudget,
) -> Result<Compositions<'a>>
where
    F: Fn(u64) -> bool + 'a,
{
    check_n(n)?;
    Ok(Compositions {
        walker: Walker::new(n, PartRule::Predicate(Box::new(admits)), exact_parts),
        budget,
        produced: 0,
        failed: false,
    })
}

fn count_walk(mut walker: Walker<'_>, budget: EnumerationBudget) -> Result<BigCount> {
    let mut count = 0u64;
    while walker.advance() {
        if count == budget.max_items {
            return Err(Error::BudgetExceeded { max_items: budget.max_items });
        }
        count += 1;
    }
    Ok(BigCount::from(count))
}

/// Number of compositions [`enumerate_compositions`] would yield, without
/// allocating them.
pub fn count_by_enumeration(n: u64, c: &PartConstraint, budget: EnumerationBudget) -> Result<BigCount> {
    check_n(n)?;
    count_walk(Walker::new(n, PartRule::from_kind(c.kind()), c.exact_parts()), budget)
}

pub fn count_with_predicate<F>(
    n: u64,
    admits: F,
    exact_parts: Option<u64>,
    budget: EnumerationBudget,
) -> Result<BigCount>
where
    F: Fn(u64) -> bool,
{
    check_n(n)?;
    count_walk(Walker::new(n, PartRule::Predicate(Box::new(admits)), exact_parts), budget)
}
