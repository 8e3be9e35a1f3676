//! One enum for every counting function, and a dispatcher that evaluates it
//! by any of the available methods.

use std::fmt;
use std::str::FromStr;

use crate::closed_forms::{s_rm_diagonal, s_rmk_closed, t_qk_closed, u_qk_closed, v_pqk_closed};
use crate::composition::{normalize_mod_class, ModClass, Normalized, PartConstraint, SizeBounds};
use crate::count::BigCount;
use crate::enumerate::{count_by_enumeration, EnumerationBudget};
use crate::error::{Error, Result};
use crate::recurrences::Recurrences;
use crate::series::{gf_fixed_k, gf_s_rm, gf_s_rmk, gf_t_q, gf_u_q, gf_v_pq, FixedK, RationalGF};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CountingFamily {
    /// Unrestricted, `C(n)`.
    All,
    /// Parts `≡ r (mod m)`.
    S {
        r: u64,
        m: u64,
    },
    /// Exactly `k` parts `≡ r (mod m)`.
    Sk {
        r: u64,
        m: u64,
        k: u64,
    },
    /// Parts `<= q`.
    T {
        q: u64,
    },
    /// Parts `>= q`.
    U {
        q: u64,
    },
    /// Parts in `[p, q]`.
    V {
        p: u64,
        q: u64,
    },
    Tk {
        q: u64,
        k: u64,
    },
    Uk {
        q: u64,
        k: u64,
    },
    Vk {
        p: u64,
        q: u64,
        k: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Recurrence,
    Closed,
    Series,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Recurrence, Method::Closed, Method::Series, Method::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Method::Recurrence => "recurrence",
            Method::Closed => "closed",
            Method::Series => "series",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| Error::invalid(format!("unknown method {s:?}")))
    }
}

fn positive(name: &str, v: u64) -> Result<()> {
    if v == 0 {
        return Err(Error::invalid(format!("{name} must be >= 1")));
    }
    Ok(())
}

impl CountingFamily {
    /// Check parameter ranges. Residue classes need `0 < r <= m` but not
    /// coprimality; reducible classes are normalized during evaluation.
    pub fn validate(&self) -> Result<()> {
        match *self {
            CountingFamily::All => Ok(()),
            CountingFamily::S { r, m } => ModClass::new(r, m).map(|_| ()),
            CountingFamily::Sk { r, m, k } => {
                ModClass::new(r, m)?;
                positive("k", k)
            }
            CountingFamily::T { q } | CountingFamily::U { q } => positive("q", q),
            CountingFamily::V { p, q } => SizeBounds::between(p, q).map(|_| ()),
            CountingFamily::Tk { q, k } | CountingFamily::Uk { q, k } => {
                positive("q", q)?;
                positive("k", k)
            }
            CountingFamily::Vk { p, q, k } => {
                SizeBounds::between(p, q)?;
                positive("k", k)
            }
        }
    }

    pub fn constraint(&self) -> Result<PartConstraint> {
        self.validate()?;
        Ok(match *self {
            CountingFamily::All => PartConstraint::all(),
            CountingFamily::S { r, m } => PartConstraint::mod_class(r, m)?,
            CountingFamily::Sk { r, m, k } => PartConstraint::mod_class(r, m)?.with_exact_parts(k)?,
            CountingFamily::T { q } => PartConstraint::size(SizeBounds::at_most(q)?),
            CountingFamily::U { q } => PartConstraint::size(SizeBounds::at_least(q)?),
            CountingFamily::V { p, q } => PartConstraint::size(SizeBounds::between(p, q)?),
            CountingFamily::Tk { q, k } => PartConstraint::size(SizeBounds::at_most(q)?).with_exact_parts(k)?,
            CountingFamily::Uk { q, k } => PartConstraint::size(SizeBounds::at_least(q)?).with_exact_parts(k)?,
            CountingFamily::Vk { p, q, k } => PartConstraint::size(SizeBounds::between(p, q)?).with_exact_parts(k)?,
        })
    }

    /// Generating function `sum_n f(n) x^n`. Residue families must already be
    /// reduced (`gcd(r, m) = 1`).
    pub fn generating_function(&self) -> Result<RationalGF> {
        self.validate()?;
        match *self {
            CountingFamily::All => gf_s_rm(1, 1),
            CountingFamily::S { r, m } => gf_s_rm(r, m),
            CountingFamily::Sk { r, m, k } => gf_s_rmk(r, m, k),
            CountingFamily::T { q } => gf_t_q(q),
            CountingFamily::U { q } => gf_u_q(q),
            CountingFamily::V { p, q } => gf_v_pq(p, q),
            CountingFamily::Tk { q, k } => gf_fixed_k(FixedK::AtMost { q, k }),
            CountingFamily::Uk { q, k } => gf_fixed_k(FixedK::AtLeast { q, k }),
            CountingFamily::Vk { p, q, k } => gf_fixed_k(FixedK::Window { p, q, k }),
        }
    }

    /// Divide a residue family through by `gcd(r, m)`. Returns the family and
    /// index to evaluate instead, or `None` when the count is zero because
    /// `gcd(r, m)` does not divide `n`. Other families pass through.
    pub fn reduce(&self, n: u64) -> Result<Option<(CountingFamily, u64)>> {
        let (r, m) = match *self {
            CountingFamily::S { r, m } | CountingFamily::Sk { r, m, .. } => (r, m),
            _ => return Ok(Some((*self, n))),
        };
        Ok(match normalize_mod_class(r, m, n)? {
            Normalized::Empty => None,
            Normalized::Reduced { class, reduced_n } => {
                let (r, m) = (class.r(), class.m());
                let fam = match *self {
                    CountingFamily::Sk { k, .. } => CountingFamily::Sk { r, m, k },
                    _ => CountingFamily::S { r, m },
                };
                Some((fam, reduced_n))
            }
        })
    }

    /// The `gcd(r, m)` scale factor for residue families, 1 otherwise.
    fn scale(&self) -> u64 {
        match *self {
            CountingFamily::S { r, m } | CountingFamily::Sk { r, m, .. } => num_integer::gcd(r, m),
            _ => 1,
        }
    }

    /// Family with any residue class reduced, for building generating
    /// functions over the reduced index.
    fn reduced_family(&self) -> CountingFamily {
        let d = self.scale();
        match *self {
            CountingFamily::S { r, m } => CountingFamily::S { r: r / d, m: m / d },
            CountingFamily::Sk { r, m, k } => CountingFamily::Sk { r: r / d, m: m / d, k },
            other => other,
        }
    }
}

/// `s_{1,2}`, `t_{3}`, `v_{4,7,3}`; `C` for the unrestricted family.
impl fmt::Display for CountingFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CountingFamily::All => f.write_str("C"),
            CountingFamily::S { r, m } => write!(f, "s_{{{r},{m}}}"),
            CountingFamily::Sk { r, m, k } => write!(f, "s_{{{r},{m},{k}}}"),
            CountingFamily::T { q } => write!(f, "t_{{{q}}}"),
            CountingFamily::U { q } => write!(f, "u_{{{q}}}"),
            CountingFamily::V { p, q } => write!(f, "v_{{{p},{q}}}"),
            CountingFamily::Tk { q, k } => write!(f, "t_{{{q},{k}}}"),
            CountingFamily::Uk { q, k } => write!(f, "u_{{{q},{k}}}"),
            CountingFamily::Vk { p, q, k } => write!(f, "v_{{{p},{q},{k}}}"),
        }
    }
}

/// Evaluates any family by any method, sharing one recurrence memo.
#[derive(Clone, Debug, Default)]
pub struct Counter {
    recurrences: Recurrences,
    budget: EnumerationBudget,
}

impl Counter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_budget(budget: EnumerationBudget) -> Self {
        Counter { recurrences: Recurrences::new(), budget }
    }

    pub fn with_recurrences(recurrences: Recurrences, budget: EnumerationBudget) -> Self {
        Counter { recurrences, budget }
    }

    pub fn recurrences_mut(&mut self) -> &mut Recurrences {
        &mut self.recurrences
    }

    pub fn count(&mut self, family: CountingFamily, n: u64, method: Method) -> Result<BigCount> {
        family.validate()?;
        if n == 0 {
            return Err(Error::invalid("n must be >= 1"));
        }
        if method == Method::Oracle {
            return count_by_enumeration(n, &family.constraint()?, self.budget);
        }
        let Some((family, n)) = family.reduce(n)? else {
            return Ok(BigCount::zero());
        };
        match method {
            Method::Recurrence => self.recurrence(family, n),
            Method::Closed => closed(family, n),
            Method::Series => {
                let c = family.generating_function()?.coefficient(n as usize);
                Ok(BigCount::from_bigint(&c).expect("counting series has nonnegative coefficients"))
            }
            Method::Oracle => unreachable!(),
        }
    }

    /// Values for `n = 1..=upto`. The series method expands once.
    pub fn values(&mut self, family: CountingFamily, upto: u64, method: Method) -> Result<Vec<BigCount>> {
        if method != Method::Series {
            return (1..=upto).map(|n| self.count(family, n, method)).collect();
        }
        let d = family.scale();
        let series = family.reduced_family().generating_function()?.expand((upto / d) as usize);
        Ok((1..=upto)
            .map(|n| {
                if n % d == 0 {
                    series.count((n / d) as usize).expect("counting series has nonnegative coefficients")
                } else {
                    BigCount::zero()
                }
            })
            .collect())
    }

    fn recurrence(&mut self, family: CountingFamily, n: u64) -> Result<BigCount> {
        let rec = &mut self.recurrences;
        match family {
            CountingFamily::All => rec.count_all(n),
            CountingFamily::S { r, m } => rec.s_rm(n, r, m),
            CountingFamily::Sk { r, m, k } => rec.s_rmk(n, r, m, k),
            CountingFamily::T { q } => rec.t_q(n, q),
            CountingFamily::U { q } => rec.u_q(n, q),
            CountingFamily::V { p, q } => rec.v_pq(n, p, q),
            CountingFamily::Tk { q, k } => rec.t_qk(n, q, k),
            CountingFamily::Uk { q, k } => rec.u_qk(n, q, k),
            CountingFamily::Vk { p, q, k } => rec.v_pqk(n, p, q, k),
        }
    }
}

/// Closed forms. Families without a single closed formula are summed over
/// the part count `k`.
fn closed(family: CountingFamily, n: u64) -> Result<BigCount> {
    match family {
        CountingFamily::All => Ok(BigCount::pow2(n - 1)),
        CountingFamily::S { r, m } => Ok(s_rm_diagonal(n, r, m)?.0),
        CountingFamily::Sk { r, m, k } => s_rmk_closed(n, r, m, k),
        CountingFamily::T { q } => (1..=n).map(|k| t_qk_closed(n, q, k)).sum(),
        CountingFamily::U { q } => (1..=n / q).map(|k| u_qk_closed(n, q, k)).sum(),
        CountingFamily::V { p, q } => (1..=n / p).map(|k| v_pqk_closed(n, p, q, k)).sum(),
        CountingFamily::Tk { q, k } => t_qk_closed(n, q, k),
        CountingFamily::Uk { q, k } => u_qk_closed(n, q, k),
        CountingFamily::Vk { p, q, k } => v_pqk_closed(n, p, q, k),
    }
}
