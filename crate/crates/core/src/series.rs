//! Exact polynomials, truncated power series and rational generating functions.
//!
//! Every counting family has a rational generating function `N(x) / D(x)`
//! with `D(0) = 1`. Coefficients are extracted with the linear recurrence the
//! denominator induces:
//!
//! ```text
//! c_n = N_n - sum_{j=1..n} D_j * c_{n-j}
//! ```

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::composition::ModClass;
use crate::count::BigCount;
use crate::error::{Error, Result};

/// Dense polynomial with exact integer coefficients; index = exponent.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c x^e`
    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        Self::new(coeffs)
    }

    /// `x^e`
    pub fn x_pow(e: u64) -> Self {
        Self::monomial(BigInt::one(), e as usize)
    }

    /// `x^lo + x^(lo+1) + ... + x^hi`; zero when `lo > hi`.
    pub fn geometric(lo: u64, hi: u64) -> Self {
        if lo > hi {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); hi as usize + 1];
        for c in &mut coeffs[lo as usize..] {
            *c = BigInt::one();
        }
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^e`, zero beyond the degree.
    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn pow(&self, mut e: u64) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Drop every term of degree above `order`.
    pub fn truncate(&self, order: usize) -> Polynomial {
        Polynomial::new(self.coeffs.iter().take(order + 1).cloned().collect())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            match (e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{abs}x")?,
                (_, true) => write!(f, "x^{e}")?,
                (_, false) => write!(f, "{abs}x^{e}")?,
            }
        }
        Ok(())
    }
}

/// A formal power series known through `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coefficients: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn coefficient(&self, n: usize) -> &BigInt {
        &self.coefficients[n]
    }

    /// Coefficient `n` as a count; `None` if it is negative.
    pub fn count(&self, n: usize) -> Option<BigCount> {
        BigCount::from_bigint(&self.coefficients[n])
    }

    /// Coefficients `1..=order` as counts, `None` if any is negative.
    pub fn counts(&self) -> Option<Vec<BigCount>> {
        self.coefficients[1..].iter().map(BigCount::from_bigint).collect()
    }
}

/// `numerator / denominator` with `denominator(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalGF {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if !denominator.coeff(0).is_one() {
            return Err(Error::BadDenominator);
        }
        Ok(RationalGF { numerator, denominator })
    }

    /// A polynomial, viewed as a generating function over `1`.
    pub fn polynomial(p: Polynomial) -> Self {
        RationalGF { numerator: p, denominator: Polynomial::one() }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    /// Multiply through by another generating function.
    pub fn times(&self, other: &RationalGF) -> RationalGF {
        RationalGF {
            numerator: &self.numerator * &other.numerator,
            denominator: &self.denominator * &other.denominator,
        }
    }

    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let den = self.denominator.coeffs();
        let mut c: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut v = self.numerator.coeff(n);
            for j in 1..den.len().min(n + 1) {
                if !den[j].is_zero() {
                    v -= &den[j] * &c[n - j];
                }
            }
            c.push(v);
        }
        TruncatedSeries { coefficients: c }
    }

    /// Single coefficient; expands through `n`.
    pub fn coefficient(&self, n: usize) -> BigInt {
        self.expand(n).coefficients.pop().unwrap_or_default()
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == Polynomial::one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

pub fn expand_rational(gf: &RationalGF, order: usize) -> TruncatedSeries {
    gf.expand(order)
}

fn one_minus(p: &Polynomial) -> Polynomial {
    &Polynomial::one() - p
}

/// `x^r / (1 - x^r - x^m)` for compositions into parts `≡ r (mod m)`.
pub fn gf_s_rm(r: u64, m: u64) -> Result<RationalGF> {
    ModClass::coprime(r, m)?;
    let den = one_minus(&(&Polynomial::x_pow(r) + &Polynomial::x_pow(m)));
    RationalGF::new(Polynomial::x_pow(r), den)
}

/// `x^(rk) / (1 - x^m)^k` for exactly `k` parts `≡ r (mod m)`.
pub fn gf_s_rmk(r: u64, m: u64, k: u64) -> Result<RationalGF> {
    ModClass::coprime(r, m)?;
    check_k(k)?;
    let den = one_minus(&Polynomial::x_pow(m)).pow(k);
    RationalGF::new(Polynomial::x_pow(r * k), den)
}

/// `(x + ... + x^q) / (1 - x - ... - x^q)` for parts `<= q`.
pub fn gf_t_q(q: u64) -> Result<RationalGF> {
    if q == 0 {
        return Err(Error::invalid("q must be >= 1"));
    }
    gf_v_pq(1, q)
}

/// `x^q / (1 - x - x^q)` for parts `>= q`.
pub fn gf_u_q(q: u64) -> Result<RationalGF> {
    if q == 0 {
        return Err(Error::invalid("q must be >= 1"));
    }
    let den = one_minus(&(&Polynomial::x_pow(1) + &Polynomial::x_pow(q)));
    RationalGF::new(Polynomial::x_pow(q), den)
}

/// `(x^p + ... + x^q) / (1 - x^p - ... - x^q)` for parts in `[p, q]`.
pub fn gf_v_pq(p: u64, q: u64) -> Result<RationalGF> {
    if p == 0 || p > q {
        return Err(Error::invalid(format!("need 1 <= p <= q (got p={p}, q={q})")));
    }
    let window = Polynomial::geometric(p, q);
    RationalGF::new(window.clone(), one_minus(&window))
}

/// Families with a fixed number of parts `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedK {
    /// parts `<= q`
    AtMost { q: u64, k: u64 },
    /// parts `>= q`
    AtLeast { q: u64, k: u64 },
    /// parts in `[p, q]`
    Window { p: u64, q: u64, k: u64 },
}

/// Generating function for a fixed-`k` size family:
/// `x^k (1 + ... + x^(q-1))^k`, `x^(qk) / (1 - x)^k` or
/// `x^(pk) (1 + ... + x^(q-p))^k`.
pub fn gf_fixed_k(family: FixedK) -> Result<RationalGF> {
    match family {
        FixedK::AtMost { q, k } => {
            if q == 0 {
                return Err(Error::invalid("q must be >= 1"));
            }
            check_k(k)?;
            let body = Polynomial::geometric(0, q - 1).pow(k);
            Ok(RationalGF::polynomial(&Polynomial::x_pow(k) * &body))
        }
        FixedK::AtLeast { q, k } => {
            if q == 0 {
                return Err(Error::invalid("q must be >= 1"));
            }
            check_k(k)?;
            let den = one_minus(&Polynomial::x_pow(1)).pow(k);
            RationalGF::new(Polynomial::x_pow(q * k), den)
        }
        FixedK::Window { p, q, k } => {
            if p == 0 || p > q {
                return Err(Error::invalid(format!("need 1 <= p <= q (got p={p}, q={q})")));
            }
            check_k(k)?;
            let body = Polynomial::geometric(0, q - p).pow(k);
            Ok(RationalGF::polynomial(&Polynomial::x_pow(p * k) * &body))
        }
    }
}

fn check_k(k: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::invalid("part count k must be >= 1"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn polynomial_arithmetic() {
        let one_plus_x = Polynomial::from_i64s(&[1, 1]);
        assert_eq!(one_plus_x.pow(2), Polynomial::from_i64s(&[1, 2, 1]));
        let tri = Polynomial::from_i64s(&[1, 1, 1]);
        assert_eq!(tri.pow(2), Polynomial::from_i64s(&[1, 2, 3, 2, 1]));
        assert_eq!(&tri * &Polynomial::zero(), Polynomial::zero());
        assert_eq!(tri.pow(0), Polynomial::one());
        assert_eq!(&tri - &tri, Polynomial::zero());
        assert_eq!((&tri + &one_plus_x).coeffs(), &ints(&[2, 2, 1])[..]);
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::x_pow(4).degree(), Some(4));
    }

    #[test]
    fn power_matches_repeated_multiplication() {
        let p = Polynomial::from_i64s(&[1, -1, 0, 2]);
        let mut acc = Polynomial::one();
        for e in 0..9 {
            assert_eq!(p.pow(e), acc);
            acc = &acc * &p;
        }
    }

    #[test]
    fn display() {
        assert_eq!(Polynomial::from_i64s(&[1, -1, 0, -1]).to_string(), "1 - x - x^3");
        assert_eq!(gf_s_rm(1, 2).unwrap().to_string(), "(x) / (1 - x - x^2)");
    }

    #[test]
    fn expand_examples() {
        let pow2 = RationalGF::new(Polynomial::x_pow(1), Polynomial::from_i64s(&[1, -2])).unwrap();
        assert_eq!(pow2.expand(6).coefficients(), &ints(&[0, 1, 2, 4, 8, 16, 32])[..]);
        let fib = RationalGF::new(Polynomial::x_pow(1), Polynomial::from_i64s(&[1, -1, -1])).unwrap();
        assert_eq!(fib.expand(8).coefficients(), &ints(&[0, 1, 1, 2, 3, 5, 8, 13, 21])[..]);
        let cube = RationalGF::new(Polynomial::one(), Polynomial::from_i64s(&[1, -1]).pow(3)).unwrap();
        assert_eq!(cube.expand(4).coefficients(), &ints(&[1, 3, 6, 10, 15])[..]);
    }

    #[test]
    fn bad_denominator() {
        assert_eq!(RationalGF::new(Polynomial::one(), Polynomial::from_i64s(&[2, 1])), Err(Error::BadDenominator));
        assert_eq!(RationalGF::new(Polynomial::one(), Polynomial::x_pow(1)), Err(Error::BadDenominator));
    }

    #[test]
    fn constructors() {
        assert_eq!(gf_s_rm(1, 1).unwrap().denominator(), &Polynomial::from_i64s(&[1, -2]));
        assert_eq!(gf_s_rm(2, 3).unwrap().denominator(), &Polynomial::from_i64s(&[1, 0, -1, -1]));
        assert_eq!(gf_s_rm(2, 3).unwrap().numerator(), &Polynomial::x_pow(2));
        assert!(gf_s_rm(2, 4).is_err());
        assert!(gf_s_rm(3, 2).is_err());

        let g = gf_s_rmk(1, 1, 1).unwrap();
        assert_eq!(g.numerator(), &Polynomial::x_pow(1));
        assert_eq!(g.denominator(), &Polynomial::from_i64s(&[1, -1]));
        assert_eq!(gf_s_rmk(1, 2, 3).unwrap().coefficient(73), BigInt::from(666));
        assert_eq!(gf_s_rmk(3, 17, 4).unwrap().coefficient(63), BigInt::from(20));

        let t1 = gf_t_q(1).unwrap().expand(20);
        assert!(t1.coefficients()[1..].iter().all(One::is_one));

        let vpp = gf_v_pq(4, 4).unwrap();
        assert_eq!(vpp.numerator(), &Polynomial::x_pow(4));
        assert_eq!(vpp.denominator(), &Polynomial::from_i64s(&[1, 0, 0, 0, -1]));
        assert!(gf_v_pq(5, 4).is_err());
    }

    #[test]
    fn fixed_k_examples() {
        let t = gf_fixed_k(FixedK::AtMost { q: 3, k: 4 }).unwrap();
        assert_eq!(t.coefficient(7), BigInt::from(16));
        let u = gf_fixed_k(FixedK::AtLeast { q: 3, k: 5 }).unwrap();
        assert_eq!(u.coefficient(17), BigInt::from(15));
        let v = gf_fixed_k(FixedK::Window { p: 4, q: 7, k: 3 }).unwrap();
        assert_eq!(v.coefficient(16), BigInt::from(12));
        let v = gf_fixed_k(FixedK::Window { p: 3, q: 7, k: 3 }).unwrap();
        assert_eq!(v.coefficient(16), BigInt::from(18));
        assert!(gf_fixed_k(FixedK::Window { p: 4, q: 3, k: 3 }).is_err());
    }

    #[test]
    fn u3_is_shifted_s13() {
        let u3 = gf_u_q(3).unwrap().expand(60);
        let s13 = gf_s_rm(1, 3).unwrap().expand(60);
        for n in 3..=60 {
            assert_eq!(u3.coefficient(n), s13.coefficient(n - 2));
        }
    }

    #[test]
    fn one_plus_x_times_fibonacci() {
        let shifted = gf_s_rm(1, 2).unwrap().times(&RationalGF::polynomial(Polynomial::from_i64s(&[1, 1])));
        let t2 = gf_t_q(2).unwrap();
        assert_eq!(shifted.expand(50), t2.expand(50));
    }
}
