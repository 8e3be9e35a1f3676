//! Memoized linear recurrences for every counting family.
//!
//! Each family keeps its own table indexed by `n` (and by the part count `k`
//! for the fixed-part families). Tables are filled bottom-up, so evaluation
//! depth never depends on `n`.

use std::collections::HashMap;

use crate::composition::{normalize_mod_class, ModClass, Normalized};
use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::DEFAULT_MAX_N;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum SeqKey {
    All,
    Residue { r: u64, m: u64 },
    AtMost { q: u64 },
    AtLeast { q: u64 },
    Window { p: u64, q: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum GridKey {
    Residue {
        r: u64,
        m: u64,
    },
    /// Parts in `[lo, hi]`, `hi = None` meaning unbounded.
    Bounded {
        lo: u64,
        hi: Option<u64>,
    },
}

/// Cache of evaluated counts. Entries are written once and never modified.
#[derive(Clone, Debug, Default)]
pub struct MemoTable {
    seqs: HashMap<SeqKey, Vec<BigCount>>,
    // grid[k][n]
    grids: HashMap<GridKey, Vec<Vec<BigCount>>>,
    corrupt_at: Option<u64>,
}

impl MemoTable {
    pub fn len(&self) -> usize {
        self.seqs.values().map(Vec::len).sum::<usize>()
            + self.grids.values().flat_map(|g| g.iter().map(Vec::len)).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn stored(&self, n: u64, value: BigCount) -> BigCount {
        if self.corrupt_at == Some(n) {
            value + BigCount::one()
        } else {
            value
        }
    }

    /// Extend the sequence for `key` through index `n`. `step` sees the
    /// values for indices `0..i` and returns the value at `i`.
    fn ensure_seq<F>(&mut self, key: SeqKey, n: u64, step: F) -> BigCount
    where
        F: Fn(&[BigCount], u64) -> BigCount,
    {
        let mut seq = self.seqs.remove(&key).unwrap_or_else(|| vec![BigCount::zero()]);
        while (seq.len() as u64) <= n {
            let i = seq.len() as u64;
            let v = step(&seq, i);
            seq.push(self.stored(i, v));
        }
        let out = seq[n as usize].clone();
        self.seqs.insert(key, seq);
        out
    }

    /// Ensure the `(k, n)` grid for `key` covers the request. The grid is
    /// rebuilt when it needs to grow; recomputed entries equal the old ones.
    fn ensure_grid<F>(&mut self, key: GridKey, k: u64, n: u64, cell: F) -> BigCount
    where
        F: Fn(&[Vec<BigCount>], &[BigCount], u64, u64) -> BigCount,
    {
        let covered = self.grids.get(&key).is_some_and(|g| (g.len() as u64) > k && (g[0].len() as u64) > n);
        if !covered {
            let (old_k, old_n) = self.grids.get(&key).map_or((0, 0), |g| (g.len() as u64 - 1, g[0].len() as u64 - 1));
            let (kk, nn) = (k.max(old_k), n.max(old_n));
            let mut grid: Vec<Vec<BigCount>> = Vec::with_capacity(kk as usize + 1);
            for row_k in 0..=kk {
                let mut row = Vec::with_capacity(nn as usize + 1);
                for col_n in 0..=nn {
                    let v = cell(&grid, &row, row_k, col_n);
                    row.push(self.stored(col_n, v));
                }
                grid.push(row);
            }
            self.grids.insert(key, grid);
        }
        self.grids[&key][k as usize][n as usize].clone()
    }
}

/// Recurrence evaluator with its own memo table.
#[derive(Clone, Debug)]
pub struct Recurrences {
    memo: MemoTable,
    max_n: u64,
}

impl Default for Recurrences {
    fn default() -> Self {
        Self::new()
    }
}

impl Recurrences {
    pub fn new() -> Self {
        Self::with_max_n(DEFAULT_MAX_N)
    }

    pub fn with_max_n(max_n: u64) -> Self {
        Recurrences { memo: MemoTable::default(), max_n }
    }

    pub fn max_n(&self) -> u64 {
        self.max_n
    }

    pub fn memo(&self) -> &MemoTable {
        &self.memo
    }

    /// Test hook: every value subsequently written at index `n` is stored off
    /// by one, so everything built on top of it is wrong too.
    #[doc(hidden)]
    pub fn corrupt_memo_at(&mut self, n: u64) {
        self.memo.corrupt_at = Some(n);
    }

    fn check_n(&self, n: u64) -> Result<()> {
        if n == 0 {
            return Err(Error::invalid("n must be >= 1"));
        }
        if n > self.max_n {
            return Err(Error::IndexTooLarge { n, max: self.max_n });
        }
        Ok(())
    }

    /// `C(n) = 2^(n-1)` via `C(n) = 2 C(n-1)`.
    pub fn count_all(&mut self, n: u64) -> Result<BigCount> {
        self.check_n(n)?;
        Ok(self.memo.ensure_seq(SeqKey::All, n, |seq, i| {
            if i == 1 {
                BigCount::one()
            } else {
                &seq[i as usize - 1] + &seq[i as usize - 1]
            }
        }))
    }

    /// Compositions of `n` with every part `≡ r (mod m)`.
    pub fn s_rm(&mut self, n: u64, r: u64, m: u64) -> Result<BigCount> {
        self.check_n(n)?;
        let (class, n) = match normalize_mod_class(r, m, n)? {
            Normalized::Empty => return Ok(BigCount::zero()),
            Normalized::Reduced { class, reduced_n } => (class, reduced_n),
        };
        let (r, m) = (class.r(), class.m());
        Ok(self.memo.ensure_seq(SeqKey::Residue { r, m }, n, |seq, i| {
            if i <= m {
                if i % r == 0 {
                    BigCount::one()
                } else {
                    BigCount::zero()
                }
            } else {
                &seq[(i - r) as usize] + &seq[(i - m) as usize]
            }
        }))
    }

    /// Compositions of `n` into exactly `k` parts, each `≡ r (mod m)`.
    /// Requires `gcd(r, m) = 1`.
    pub fn s_rmk(&mut self, n: u64, r: u64, m: u64, k: u64) -> Result<BigCount> {
        self.check_n(n)?;
        ModClass::coprime(r, m)?;
        check_k(k)?;
        if k > n {
            return Ok(BigCount::zero());
        }
        Ok(self.memo.ensure_grid(GridKey::Residue { r, m }, k, n, |grid, row, k, n| {
            if k == 0 || n == 0 {
                BigCount::zero()
            } else if k == 1 {
                indicator(n >= r && (n - r).is_multiple_of(m))
            } else if n <= m {
                indicator(n == r * k)
            } else {
                &grid[k as usize - 1][(n - r) as usize] + &row[(n - m) as usize]
            }
        }))
    }

    /// Compositions of `n` with every part `<= q`.
    pub fn t_q(&mut self, n: u64, q: u64) -> Result<BigCount> {
        self.check_n(n)?;
        check_bound("q", q)?;
        Ok(self.memo.ensure_seq(SeqKey::AtMost { q }, n, |seq, i| {
            if i <= q {
                BigCount::pow2(i - 1)
            } else {
                (1..=q).map(|j| &seq[(i - j) as usize]).sum()
            }
        }))
    }

    /// Compositions of `n` with every part `>= q`.
    pub fn u_q(&mut self, n: u64, q: u64) -> Result<BigCount> {
        self.check_n(n)?;
        check_bound("q", q)?;
        Ok(self.memo.ensure_seq(SeqKey::AtLeast { q }, n, |seq, i| {
            if i < q {
                BigCount::zero()
            } else if i == q {
                BigCount::one()
            } else {
                &seq[(i - 1) as usize] + &seq[(i - q) as usize]
            }
        }))
    }

    /// Compositions of `n` with every part in `[p, q]`.
    pub fn v_pq(&mut self, n: u64, p: u64, q: u64) -> Result<BigCount> {
        self.check_n(n)?;
        check_window(p, q)?;
        if n <= q {
            return self.u_q(n, p);
        }
        // The first q terms come from u_p; fill them before extending.
        let prefix: Vec<BigCount> = (1..=q).map(|i| self.u_q(i, p)).collect::<Result<_>>()?;
        Ok(self.memo.ensure_seq(SeqKey::Window { p, q }, n, |seq, i| {
            if i <= q {
                prefix[i as usize - 1].clone()
            } else {
                (p..=q).map(|a| &seq[(i - a) as usize]).sum()
            }
        }))
    }

    /// Exactly `k` parts, each `<= q`.
    pub fn t_qk(&mut self, n: u64, q: u64, k: u64) -> Result<BigCount> {
        check_bound("q", q)?;
        self.bounded_k(n, 1, Some(q), k)
    }

    /// Exactly `k` parts, each `>= q`.
    pub fn u_qk(&mut self, n: u64, q: u64, k: u64) -> Result<BigCount> {
        check_bound("q", q)?;
        self.bounded_k(n, q, None, k)
    }

    /// Exactly `k` parts, each in `[p, q]`.
    pub fn v_pqk(&mut self, n: u64, p: u64, q: u64, k: u64) -> Result<BigCount> {
        check_window(p, q)?;
        self.bounded_k(n, p, Some(q), k)
    }

    /// First-part decomposition: `f_k(n) = sum_{a=lo}^{hi} f_{k-1}(n - a)`,
    /// with `f_0(0) = 1` and `f_0(n) = 0` otherwise.
    fn bounded_k(&mut self, n: u64, lo: u64, hi: Option<u64>, k: u64) -> Result<BigCount> {
        self.check_n(n)?;
        check_k(k)?;
        if k > n {
            return Ok(BigCount::zero());
        }
        Ok(self.memo.ensure_grid(GridKey::Bounded { lo, hi }, k, n, |grid, _row, k, n| {
            if k == 0 {
                return indicator(n == 0);
            }
            let top = hi.map_or(n, |hi| hi.min(n));
            if top < lo {
                return BigCount::zero();
            }
            let prev = &grid[k as usize - 1];
            (lo..=top).map(|a| &prev[(n - a) as usize]).sum()
        }))
    }
}

fn indicator(b: bool) -> BigCount {
    if b {
        BigCount::one()
    } else {
        BigCount::zero()
    }
}

fn check_k(k: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::invalid("part count k must be >= 1"));
    }
    Ok(())
}

fn check_bound(name: &str, v: u64) -> Result<()> {
    if v == 0 {
        return Err(Error::invalid(format!("{name} must be >= 1")));
    }
    Ok(())
}

fn check_window(p: u64, q: u64) -> Result<()> {
    check_bound("p", p)?;
    if p > q {
        return Err(Error::invalid(format!("need p <= q (got p={p}, q={q})")));
    }
    Ok(())
}

pub fn count_all(n: u64) -> Result<BigCount> {
    Recurrences::new().count_all(n)
}

pub fn s_rm(n: u64, r: u64, m: u64) -> Result<BigCount> {
    Recurrences::new().s_rm(n, r, m)
}

pub fn s_rmk(n: u64, r: u64, m: u64, k: u64) -> Result<BigCount> {
    Recurrences::new().s_rmk(n, r, m, k)
}

pub fn t_q(n: u64, q: u64) -> Result<BigCount> {
    Recurrences::new().t_q(n, q)
}

pub fn u_q(n: u64, q: u64) -> Result<BigCount> {
    Recurrences::new().u_q(n, q)
}

pub fn v_pq(n: u64, p: u64, q: u64) -> Result<BigCount> {
    Recurrences::new().v_pq(n, p, q)
}
