//! Closed-form counts built from binomial and bracket coefficients.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::composition::ModClass;
use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::series::Polynomial;

pub mod identities;

/// `C(a, b)`, zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> BigCount {
    if b > a {
        return BigCount::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    // acc = C(a - b + i, i) after step i, always an integer
    for i in 1..=b {
        acc *= a - b + i;
        acc /= i;
    }
    BigCount::from(acc)
}

/// Least positive `x` with `r x ≡ 1 (mod m)`; 1 when `m = 1`.
pub fn mod_inverse(r: u64, m: u64) -> Result<u64> {
    if r == 0 || m == 0 {
        return Err(Error::invalid(format!("need r, m >= 1 (got r={r}, m={m})")));
    }
    if m == 1 {
        return Ok(1);
    }
    let (mut old_r, mut cur_r) = (i128::from(r % m), i128::from(m));
    let (mut old_s, mut cur_s) = (1i128, 0i128);
    while cur_r != 0 {
        let q = old_r / cur_r;
        (old_r, cur_r) = (cur_r, old_r - q * cur_r);
        (old_s, cur_s) = (cur_s, old_s - q * cur_s);
    }
    if old_r != 1 {
        return Err(Error::NotCoprime { r, m });
    }
    Ok(old_s.rem_euclid(i128::from(m)) as u64)
}

/// Exactly `k` parts `≡ r (mod m)`: `C((n - rk)/m + k - 1, k - 1)` when
/// `n ≡ rk (mod m)` and `n >= rk`, else 0.
pub fn s_rmk_closed(n: u64, r: u64, m: u64, k: u64) -> Result<BigCount> {
    ModClass::coprime(r, m)?;
    if k == 0 {
        return Err(Error::invalid("part count k must be >= 1"));
    }
    let Some(rk) = r.checked_mul(k) else {
        return Ok(BigCount::zero());
    };
    if n < rk || !(n - rk).is_multiple_of(m) {
        return Ok(BigCount::zero());
    }
    Ok(binomial((n - rk) / m + k - 1, k - 1))
}

/// One entry of the Pascal-triangle diagonal summed by [`s_rm_diagonal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalTerm {
    pub lambda: u64,
    pub row: u64,
    pub col: u64,
    pub value: BigCount,
}

/// Compositions of `n` into parts `≡ r (mod m)` as a sum of binomial
/// coefficients along a falling diagonal of Pascal's triangle.
///
/// With `xi` the least positive residue of `r^-1 n (mod m)`, only part counts
/// `k = m*lambda + xi` contribute, and
///
/// ```text
/// s_{r,m}(n) = sum_{lambda=0}^{floor((n - r xi)/(r m))} C((m-r) lambda + (n - r xi)/m + xi - 1, m lambda + xi - 1)
/// ```
///
/// The sum is empty (zero) when `n < r xi`.
pub fn s_rm_diagonal(n: u64, r: u64, m: u64) -> Result<(BigCount, Vec<DiagonalTerm>)> {
    ModClass::coprime(r, m)?;
    if n == 0 {
        return Err(Error::invalid("n must be >= 1"));
    }
    let inv = mod_inverse(r, m)?;
    let residue = ((u128::from(inv) * u128::from(n)) % u128::from(m)) as u64;
    // residue class representative in 1..=m
    let xi = if residue == 0 { m } else { residue };
    debug_assert_eq!(xi, ((u128::from(inv) * u128::from(n) + u128::from(m) - 1) % u128::from(m)) as u64 + 1);
    let Some(base) = n.checked_sub(r * xi) else {
        return Ok((BigCount::zero(), Vec::new()));
    };
    debug_assert_eq!(base % m, 0);
    let top = base / (r * m);
    let mut terms = Vec::with_capacity(top as usize + 1);
    for lambda in 0..=top {
        let row = (m - r) * lambda + base / m + xi - 1;
        let col = m * lambda + xi - 1;
        terms.push(DiagonalTerm { lambda, row, col, value: binomial(row, col) });
    }
    let total = terms.iter().map(|t| &t.value).sum();
    Ok((total, terms))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketMethod {
    /// Multiply out `(1 + x + ... + x^(q-1))^k`.
    Expansion,
    /// Signed binomial sum from inclusion–exclusion.
    InclusionExclusion,
}

/// Coefficient of `x^n` in `(1 + x + ... + x^(q-1))^k`.
pub fn bracket_coefficient(k: u64, n: u64, q: u64, method: BracketMethod) -> Result<BigCount> {
    if q == 0 {
        return Err(Error::invalid("q must be >= 1"));
    }
    if k == 0 {
        return Ok(if n == 0 { BigCount::one() } else { BigCount::zero() });
    }
    match method {
        BracketMethod::Expansion => {
            let c = Polynomial::geometric(0, q - 1).pow(k).coeff(n as usize);
            Ok(BigCount::from_bigint(&c).expect("coefficients of a positive polynomial are nonnegative"))
        }
        BracketMethod::InclusionExclusion => Ok(bracket_inclusion_exclusion(k, n, q)),
    }
}

/// `sum_{j=0}^{floor(n/q)} (-1)^j C(k, j) C(k - 1 + n - qj, k - 1)`
fn bracket_inclusion_exclusion(k: u64, n: u64, q: u64) -> BigCount {
    let mut acc = BigInt::zero();
    for j in 0..=(n / q).min(k) {
        let term = binomial(k, j).to_bigint() * binomial(k - 1 + n - q * j, k - 1).to_bigint();
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    BigCount::from_bigint(&acc).expect("inclusion-exclusion sum must be nonnegative")
}

/// Exactly `k` parts, each `<= q`.
pub fn t_qk_closed(n: u64, q: u64, k: u64) -> Result<BigCount> {
    if q == 0 || k == 0 {
        return Err(Error::invalid("q and k must be >= 1"));
    }
    if n < k || n > q.saturating_mul(k) {
        return Ok(BigCount::zero());
    }
    bracket_coefficient(k, n - k, q, BracketMethod::InclusionExclusion)
}

/// Exactly `k` parts, each `>= q`: `C(n - qk + k - 1, k - 1)`.
pub fn u_qk_closed(n: u64, q: u64, k: u64) -> Result<BigCount> {
    if q == 0 || k == 0 {
        return Err(Error::invalid("q and k must be >= 1"));
    }
    match q.checked_mul(k) {
        Some(qk) if n >= qk => Ok(binomial(n - qk + k - 1, k - 1)),
        _ => Ok(BigCount::zero()),
    }
}

/// Exactly `k` parts, each in `[p, q]`.
pub fn v_pqk_closed(n: u64, p: u64, q: u64, k: u64) -> Result<BigCount> {
    if p == 0 || k == 0 {
        return Err(Error::invalid("p and k must be >= 1"));
    }
    if p > q {
        return Err(Error::invalid(format!("need p <= q (got p={p}, q={q})")));
    }
    let Some(pk) = p.checked_mul(k) else {
        return Ok(BigCount::zero());
    };
    if n < pk || n > q.saturating_mul(k) {
        return Ok(BigCount::zero());
    }
    bracket_coefficient(k, n - pk, q - p + 1, BracketMethod::InclusionExclusion)
}

/// Largest `n` for which [`binet_estimate`] rounds to the exact Fibonacci number.
pub const BINET_MAX_N: u64 = 70;

/// Fibonacci `F_n` from `(alpha^n - beta^n) / sqrt(5)` in double precision.
pub fn binet_estimate(n: u64) -> Result<f64> {
    if !(1..=BINET_MAX_N).contains(&n) {
        return Err(Error::OutOfRange { n, lo: 1, hi: BINET_MAX_N });
    }
    let sqrt5 = 5f64.sqrt();
    let alpha = (1.0 + sqrt5) / 2.0;
    let beta = (1.0 - sqrt5) / 2.0;
    let e = n as i32;
    Ok((alpha.powi(e) - beta.powi(e)) / sqrt5)
}
