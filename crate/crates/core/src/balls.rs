//! Kendall balls, shells and double balls.
//!
//! The ball size `B_K(r)` does not depend on the center (right invariance), so all
//! sizes come from the Mahonian triangle `T(n, k)`: the number of permutations of
//! `[n]` with exactly `k` inversions.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::code::PermCode;
use crate::error::{ensure_range, Error, Result};
use crate::perm::Permutation;

/// Largest degree for which balls are enumerated explicitly.
pub const ENUMERATION_MAX_DEGREE: usize = 9;

pub fn pairs(n: usize) -> u64 {
    (n as u64) * (n as u64).saturating_sub(1) / 2
}

/// Row `n` of the Mahonian triangle, exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MahonianTable {
    n: usize,
    counts: Vec<BigUint>,
}

impl MahonianTable {
    pub fn new(n: usize) -> Self {
        // T(m, k) = sum_{j=0}^{min(k, m-1)} T(m-1, k-j)
        let mut row = vec![BigUint::one()];
        for m in 2..=n {
            let max_k = pairs(m) as usize;
            let mut prefix = Vec::with_capacity(row.len() + 1);
            prefix.push(BigUint::zero());
            for (i, v) in row.iter().enumerate() {
                let next = &prefix[i] + v;
                prefix.push(next);
            }
            let mut next = Vec::with_capacity(max_k + 1);
            for k in 0..=max_k {
                let hi = k.min(row.len() - 1);
                let lo = k.saturating_sub(m - 1);
                if lo > hi {
                    next.push(BigUint::zero());
                } else {
                    next.push(&prefix[hi + 1] - &prefix[lo]);
                }
            }
            row = next;
        }
        MahonianTable { n, counts: row }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn max_k(&self) -> u64 {
        pairs(self.n)
    }

    /// `T(n, k)`; zero outside `0..=C(n,2)`.
    pub fn count(&self, k: u64) -> BigUint {
        self.counts
            .get(k as usize)
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `B_K(r) = sum_{k <= r} T(n, k)`.
    pub fn ball(&self, r: u64) -> BigUint {
        self.counts.iter().take(r as usize + 1).sum()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

pub fn mahonian_table(n: usize) -> Result<MahonianTable> {
    if n == 0 {
        return Err(Error::Precondition("n >= 1 required".into()));
    }
    Ok(MahonianTable::new(n))
}

pub fn ball_size(n: usize, r: u64) -> Result<BigUint> {
    let table = mahonian_table(n)?;
    ensure_range("radius", r, 0, table.max_k())?;
    Ok(table.ball(r))
}

/// All permutations within distance `r` of `center`, in breadth-first order.
///
/// Neighbours are generated by swapping adjacent positions `i, i+1` for
/// `i = 1, .., n-1` in ascending order, so the output order is deterministic.
pub fn ball_enumerate(center: &Permutation, r: u64) -> Result<PermCode> {
    let n = center.degree();
    if n > ENUMERATION_MAX_DEGREE {
        return Err(Error::TooLarge {
            what: "degree",
            value: n as u64,
            limit: ENUMERATION_MAX_DEGREE as u64,
        });
    }
    ensure_range("radius", r, 0, pairs(n))?;
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(center.clone());
    queue.push_back((center.clone(), 0u64));
    while let Some((p, depth)) = queue.pop_front() {
        order.push(p.clone());
        if depth == r {
            continue;
        }
        for i in 0..n - 1 {
            let q = p.swap_adjacent_positions(i);
            if seen.insert(q.clone()) {
                queue.push_back((q, depth + 1));
            }
        }
    }
    PermCode::new(n, order)
}

/// `DB_{n,r} = |B_r(ξ) ∪ B_r([2,1,3,..,n])|`.
///
/// `r = 1` uses the closed form `2(n-1)`; larger radii take the union of two
/// enumerated balls and need `n <= 9`.
pub fn double_ball_size(n: usize, r: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::Precondition("double balls need n >= 2".into()));
    }
    ensure_range("radius", r, 0, pairs(n))?;
    if r == 0 {
        return Ok(BigUint::from(2u32));
    }
    if r == 1 {
        return Ok(BigUint::from(2 * (n as u64 - 1)));
    }
    let a = ball_enumerate(&Permutation::identity(n), r)?;
    let b = ball_enumerate(&Permutation::adjacent_transposition(n, 1)?, r)?;
    let mut union: HashSet<&Permutation> = a.members().iter().collect();
    union.extend(b.members().iter());
    Ok(BigUint::from(union.len()))
}

/// `DB_{n,r}` by counting, valid for every `n >= 2`.
///
/// `B_r(τ) \ B_r(ξ)` for `τ = [2,1,3,..]` is the set of permutations with exactly
/// `r+1` inversions in which `2` precedes `1`. Passing to inverses, these are the
/// words with a descent at position 1, i.e. Lehmer digits `L1 > L2`; the remaining
/// `n-2` digits contribute a Mahonian factor.
pub fn double_ball_size_counted(n: usize, r: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::Precondition("double balls need n >= 2".into()));
    }
    ensure_range("radius", r, 0, pairs(n))?;
    let full = MahonianTable::new(n);
    let rest = if n >= 3 {
        MahonianTable::new(n - 2)
    } else {
        MahonianTable {
            n: 0,
            counts: vec![BigUint::one()],
        }
    };
    let k = r + 1;
    let mut extra = BigUint::zero();
    for l1 in 0..n as u64 {
        for l2 in 0..l1.min(n as u64 - 1) {
            if l1 + l2 <= k {
                extra += rest.count(k - l1 - l2);
            }
        }
    }
    Ok(full.ball(r) + extra)
}
