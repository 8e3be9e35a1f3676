//! Binomial-sum identities obtained by specializing the diagonal sum to
//! small moduli, written out case by case on the residue of `n`.
//!
//! These are evaluated directly from their own formulas (not through
//! [`super::s_rm_diagonal`]) so they can serve as independent checks.

use super::binomial;
use crate::count::BigCount;

/// `sum_{lambda=0}^{upper} C(row(lambda), col(lambda))`, empty when `upper < 0`.
fn diagonal_sum(upper: i64, row: impl Fn(u64) -> u64, col: impl Fn(u64) -> u64) -> BigCount {
    if upper < 0 {
        return BigCount::zero();
    }
    (0..=upper as u64).map(|l| binomial(row(l), col(l))).sum()
}

/// `2^(n-1) = sum_{lambda=0}^{n-1} C(n-1, lambda)`.
pub fn powers_of_two_row(n: u64) -> BigCount {
    assert!(n >= 1);
    diagonal_sum(n as i64 - 1, |_| n - 1, |l| l)
}

/// Fibonacci `F_n`, split on the parity of `n`.
pub fn fibonacci_split(n: u64) -> BigCount {
    assert!(n >= 1);
    if n % 2 == 1 {
        let h = (n - 1) / 2;
        diagonal_sum(h as i64, |l| l + h, |l| 2 * l)
    } else {
        diagonal_sum((n as i64 - 2) / 2, |l| l + n / 2, |l| 2 * l + 1)
    }
}

/// Narayana's cows `s_{1,3}(n)`, split on `n mod 3`.
pub fn narayana_split(n: u64) -> BigCount {
    assert!(n >= 1);
    match n % 3 {
        1 => diagonal_sum(((n - 1) / 3) as i64, |l| 2 * l + (n - 1) / 3, |l| 3 * l),
        2 => diagonal_sum(((n - 2) / 3) as i64, |l| 2 * l + (n + 1) / 3, |l| 3 * l + 1),
        _ => diagonal_sum(((n - 3) / 3) as i64, |l| 2 * l + (n + 3) / 3, |l| 3 * l + 2),
    }
}

/// Padovan `s_{2,3}(n)`, split on `n mod 3`.
pub fn padovan_split(n: u64) -> BigCount {
    assert!(n >= 1);
    let n_i = n as i64;
    match n % 3 {
        1 => diagonal_sum((n_i - 4).div_euclid(6), |l| l + (n - 1) / 3, |l| 3 * l + 1),
        2 => diagonal_sum((n_i - 2).div_euclid(6), |l| l + (n - 2) / 3, |l| 3 * l),
        _ => diagonal_sum((n_i - 6).div_euclid(6), |l| l + n / 3, |l| 3 * l + 2),
    }
}
