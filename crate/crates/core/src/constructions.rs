//! Explicit constructions: equal-sum 3-partitions, the size-4 codes at distance
//! `floor(2/3 · C(n,2))`, and a permutation at any prescribed distance from `ξ`.

use serde::Serialize;

use crate::balls::pairs;
use crate::code::PermCode;
use crate::error::{ensure_range, Error, Result};
use crate::perm::{Permutation, MAX_DEGREE};

/// Three disjoint parts with equal sums covering `ground`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionTriple {
    pub n: u32,
    /// Each part sorted ascending.
    pub parts: [Vec<u32>; 3],
    /// `[n]`, or `[n] \ {1}` when `n ≡ 1 (mod 3)`.
    pub ground: Vec<u32>,
}

impl PartitionTriple {
    pub fn part_sum(&self, i: usize) -> u64 {
        self.parts[i].iter().map(|&v| v as u64).sum()
    }

    /// Disjoint, covering, equal sums.
    pub fn is_valid(&self) -> bool {
        let mut all: Vec<u32> = self.parts.iter().flatten().copied().collect();
        all.sort_unstable();
        all == self.ground
            && self.parts.iter().all(|p| !p.is_empty())
            && self.part_sum(0) == self.part_sum(1)
            && self.part_sum(1) == self.part_sum(2)
    }
}

fn base_triple(n: u32) -> [&'static [u32]; 3] {
    match n {
        5 => [&[5], &[1, 4], &[3, 2]],
        6 => [&[6, 1], &[5, 2], &[3, 4]],
        7 => [&[2, 7], &[3, 6], &[4, 5]],
        8 => [&[8, 4], &[7, 3, 2], &[1, 5, 6]],
        9 => [&[6, 5, 4], &[9, 1, 2, 3], &[8, 7]],
        10 => [&[10, 8], &[9, 2, 7], &[3, 4, 6, 5]],
        _ => unreachable!("base triples exist for 5..=10"),
    }
}

/// Partition of `[n]` (or `[n] \ {1}` when `n ≡ 1 mod 3`) into three parts with equal
/// sums.
///
/// Writes `n = 6t + r` with `r ∈ 5..=10`, starts from the fixed triple for `r`, and
/// adds each block `{k+1, .., k+6}` (`k = r, r+6, ..`) as the pairs
/// `{k+1, k+6}`, `{k+2, k+5}`, `{k+3, k+4}`.
pub fn equal_sum_partition(n: u32) -> Result<PartitionTriple> {
    ensure_range("n", n as u64, 5, MAX_DEGREE as u64)?;
    let r = (n - 5) % 6 + 5;
    let mut parts: [Vec<u32>; 3] = base_triple(r).map(|p| p.to_vec());
    let mut k = r;
    while k < n {
        parts[0].extend([k + 1, k + 6]);
        parts[1].extend([k + 2, k + 5]);
        parts[2].extend([k + 3, k + 4]);
        k += 6;
    }
    for p in &mut parts {
        p.sort_unstable();
    }
    let first = if n % 3 == 1 { 2 } else { 1 };
    let triple = PartitionTriple {
        n,
        parts,
        ground: (first..=n).collect(),
    };
    debug_assert!(triple.is_valid(), "n = {n}");
    Ok(triple)
}

/// The permutation whose prefix is `{n - j : j ∈ delta}` in ascending order and whose
/// suffix is the complement in descending order. Its distance from `ξ` is
/// `C(n,2) - Σ delta`.
pub fn alpha_from_delta(n: usize, delta: &[u32]) -> Result<Permutation> {
    ensure_range("n", n as u64, 1, MAX_DEGREE as u64)?;
    let mut used = vec![false; n + 1];
    for &j in delta {
        if j == 0 || j as usize >= n {
            return Err(Error::OutOfRange {
                what: "delta element",
                value: j as u64,
                min: 1,
                max: n as u64 - 1,
            });
        }
        let v = n - j as usize;
        if used[v] {
            return Err(Error::Precondition(format!("delta repeats {j}")));
        }
        used[v] = true;
    }
    let prefix = (1..=n).filter(|&v| used[v]);
    let suffix = (1..=n).rev().filter(|&v| !used[v]);
    let word: Vec<usize> = prefix.chain(suffix).collect();
    let alpha = Permutation::from_one_based(&word)?;
    let sum: u64 = delta.iter().map(|&j| j as u64).sum();
    debug_assert_eq!(alpha.inversions(), pairs(n) - sum);
    Ok(alpha)
}

/// A code together with the distance its construction guarantees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizedCode {
    pub code: PermCode,
    pub target_distance: u32,
}

/// `{ξ, α₁, α₂, α₃}` built from `equal_sum_partition(n - 1)`, with minimum distance at
/// least `floor(2/3 · C(n,2))`.
pub fn construct_size4(n: usize) -> Result<SizedCode> {
    ensure_range("n", n as u64, 6, MAX_DEGREE as u64)?;
    let triple = equal_sum_partition(n as u32 - 1)?;
    let mut members = vec![Permutation::identity(n)];
    for part in &triple.parts {
        members.push(alpha_from_delta(n, part)?);
    }
    let target = (2 * pairs(n) / 3) as u32;
    let code = PermCode::new(n, members)?.with_claimed_distance(target);
    code.verify(None)?;
    Ok(SizedCode {
        code,
        target_distance: target,
    })
}

/// A subset of `[n-1]` summing to `t`: take `n-1, n-2, ..` while they fit, then the
/// remainder.
pub fn subset_with_sum(n: usize, t: u64) -> Result<Vec<u32>> {
    ensure_range("t", t, 0, pairs(n))?;
    let mut rest = t;
    let mut out = Vec::new();
    for j in (1..n as u64).rev() {
        if j <= rest {
            out.push(j as u32);
            rest -= j;
        }
    }
    debug_assert_eq!(rest, 0);
    out.reverse();
    Ok(out)
}

/// A permutation at distance exactly `d` from the identity.
pub fn permutation_at_distance(n: usize, d: u64) -> Result<Permutation> {
    ensure_range("n", n as u64, 1, MAX_DEGREE as u64)?;
    ensure_range("d", d, 0, pairs(n))?;
    let alpha = alpha_from_delta(n, &subset_with_sum(n, pairs(n) - d)?)?;
    if alpha.inversions() != d {
        return Err(Error::Verification(format!(
            "{alpha} is at distance {} instead of {d}",
            alpha.inversions()
        )));
    }
    Ok(alpha)
}
