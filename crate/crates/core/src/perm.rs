//! Permutations of `[n] = {1, .., n}` in one-line notation and the Kendall tau metric.
//!
//! Composition follows the left-to-right convention used throughout this crate:
//!
//! ```text
//! compose(p, q)(i) = q(p(i))
//! ```
//!
//! i.e. `p` is applied first. This is the REVERSE of ordinary function composition
//! `p ∘ q`. With this convention the Kendall tau metric is right invariant:
//! `d(p·r, q·r) = d(p, q)`, because right multiplication by `r` relabels symbols.
//!
//! All public input and output is 1-based. Words are stored 0-based internally.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest degree a [`Permutation`] can have (symbols are stored in a byte).
pub const MAX_DEGREE: usize = 255;

/// A permutation of `[n]`, `n >= 1`, in one-line notation `[π(1), .., π(n)]`.
///
/// The derived ordering is lexicographic on the one-line word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

/// A Kendall tau distance, always within `0..=n(n-1)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KendallDistance(pub u32);

impl KendallDistance {
    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for KendallDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(count: u64) -> Parity {
        if count % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn xor(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl Permutation {
    /// Builds a permutation from a 1-based one-line word.
    pub fn from_one_based<T>(word: &[T]) -> Result<Self>
    where
        T: Copy + TryInto<i64>,
    {
        let n = word.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty word".into()));
        }
        if n > MAX_DEGREE {
            return Err(Error::TooLarge {
                what: "degree",
                value: n as u64,
                limit: MAX_DEGREE as u64,
            });
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &v in word {
            let v: i64 = v
                .try_into()
                .map_err(|_| Error::InvalidPermutation("value does not fit an integer".into()))?;
            if v < 1 || v > n as i64 {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            let z = (v - 1) as usize;
            if seen[z] {
                return Err(Error::InvalidPermutation(format!("duplicate value {v}")));
            }
            seen[z] = true;
            out.push(z as u8);
        }
        Ok(Permutation { word: out })
    }

    pub fn from_zero_based(word: Vec<u8>) -> Result<Self> {
        if word.is_empty() || !is_valid_zero_based(&word) {
            return Err(Error::InvalidPermutation(format!(
                "{word:?} is not a permutation of 0..n"
            )));
        }
        Ok(Permutation { word })
    }

    /// The identity `ξ = [1, 2, .., n]`.
    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n), "degree {n} unsupported");
        Permutation {
            word: (0..n as u8).collect(),
        }
    }

    /// The reversal `[n, n-1, .., 1]`, at distance `C(n,2)` from the identity.
    pub fn reversal(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n), "degree {n} unsupported");
        Permutation {
            word: (0..n as u8).rev().collect(),
        }
    }

    /// The adjacent transposition `(i, i+1)` written as a word, `1 <= i < n`.
    pub fn adjacent_transposition(n: usize, i: usize) -> Result<Self> {
        if n < 2 || i == 0 || i >= n {
            return Err(Error::OutOfRange {
                what: "transposition index",
                value: i as u64,
                min: 1,
                max: n.saturating_sub(1) as u64,
            });
        }
        let mut p = Self::identity(n);
        p.word.swap(i - 1, i);
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    /// The image `π(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.word[i - 1] as usize + 1
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.word.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn zero_based(&self) -> &[u8] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Left-to-right product: the result maps `i` to `other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        check_same_degree(self, other)?;
        Ok(self.then_unchecked(other))
    }

    pub(crate) fn then_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            word: self.word.iter().map(|&v| other.word[v as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { word: inv }
    }

    pub fn inversions(&self) -> u64 {
        let mut buf: Vec<u8> = self.word.clone();
        let mut scratch = vec![0u8; buf.len()];
        merge_count(&mut buf, &mut scratch)
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.inversions())
    }

    /// Swaps the entries at 0-based positions `i` and `i + 1`.
    pub(crate) fn swap_adjacent_positions(&self, i: usize) -> Permutation {
        let mut w = self.word.clone();
        w.swap(i, i + 1);
        Permutation { word: w }
    }
}

fn is_valid_zero_based(word: &[u8]) -> bool {
    let n = word.len();
    if n > MAX_DEGREE {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in word {
        let v = v as usize;
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

fn check_same_degree(p: &Permutation, q: &Permutation) -> Result<()> {
    if p.degree() != q.degree() {
        Err(Error::LengthMismatch {
            left: p.degree(),
            right: q.degree(),
        })
    } else {
        Ok(())
    }
}

/// Sorts `buf` and returns its number of inversions.
fn merge_count(buf: &mut [u8], scratch: &mut [u8]) -> u64 {
    let n = buf.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut count = {
        let (left, right) = buf.split_at_mut(mid);
        let (sl, sr) = scratch.split_at_mut(mid);
        merge_count(left, sl) + merge_count(right, sr)
    };
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if buf[i] <= buf[j] {
            scratch[k] = buf[i];
            i += 1;
        } else {
            scratch[k] = buf[j];
            count += (mid - i) as u64;
            j += 1;
        }
        k += 1;
    }
    scratch[k..k + mid - i].copy_from_slice(&buf[i..mid]);
    k += mid - i;
    scratch[k..k + n - j].copy_from_slice(&buf[j..n]);
    buf.copy_from_slice(&scratch[..n]);
    count
}

/// Left-to-right product `p·q`, mapping `i` to `q(p(i))`.
///
/// Note the order: this is `q ∘ p` in function-composition notation.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.then(q)
}

pub fn inverse(p: &Permutation) -> Permutation {
    p.inverse()
}

/// `|{(i, j) : i < j, p⁻¹(i) > p⁻¹(j)}|`, counted by merge sort in `O(n log n)`.
pub fn inversions(p: &Permutation) -> u64 {
    p.inversions()
}

pub fn parity(p: &Permutation) -> Parity {
    p.parity()
}

/// Kendall tau distance: the number of symbol pairs ordered differently by `p` and `q`.
///
/// Computed as the inversion count of the word listing, for each symbol of `q` in
/// order, its position inside `p`.
pub fn kendall_distance(p: &Permutation, q: &Permutation) -> Result<KendallDistance> {
    check_same_degree(p, q)?;
    let pos_in_p = p.inverse();
    let mut w: Vec<u8> = q.word.iter().map(|&s| pos_in_p.word[s as usize]).collect();
    let mut scratch = vec![0u8; w.len()];
    Ok(KendallDistance(merge_count(&mut w, &mut scratch) as u32))
}

/// Kendall tau distance by the `O(n²)` pair count. Reference oracle for the fast path.
pub fn kendall_distance_naive(p: &Permutation, q: &Permutation) -> Result<KendallDistance> {
    check_same_degree(p, q)?;
    let pi = p.inverse();
    let qi = q.inverse();
    let n = p.degree();
    let mut count = 0u32;
    for i in 0..n {
        for j in i + 1..n {
            let before_in_p = pi.word[i] < pi.word[j];
            let before_in_q = qi.word[i] < qi.word[j];
            if before_in_p != before_in_q {
                count += 1;
            }
        }
    }
    Ok(KendallDistance(count))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", *v as usize + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_string().replace(' ', ", "))
    }
}

/// Parses the text form: whitespace-separated 1-based integers, e.g. `4 2 1 3 7 5 6`.
/// Commas and surrounding brackets are tolerated.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s
            .chars()
            .map(|c| {
                if c == ',' || c == '[' || c == ']' {
                    ' '
                } else {
                    c
                }
            })
            .collect();
        let mut vals = Vec::new();
        for tok in cleaned.split_whitespace() {
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::InvalidPermutation(format!("not an integer: {tok:?}")))?;
            vals.push(v);
        }
        Permutation::from_one_based(&vals)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<i64> = Vec::deserialize(d)?;
        Permutation::from_one_based(&v).map_err(serde::de::Error::custom)
    }
}

/// Pair-order signature for degrees up to 16: bit `k` records whether the `k`-th
/// symbol pair `(a, b)`, `a < b`, is inverted. The Kendall distance of two
/// permutations is the Hamming distance of their signatures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairSignature(pub u128);

pub const SIGNATURE_MAX_DEGREE: usize = 16;

impl PairSignature {
    pub fn of(p: &Permutation) -> Option<PairSignature> {
        let n = p.degree();
        if n > SIGNATURE_MAX_DEGREE {
            return None;
        }
        let pos = p.inverse();
        let mut bits = 0u128;
        let mut k = 0;
        for a in 0..n {
            for b in a + 1..n {
                if pos.word[a] > pos.word[b] {
                    bits |= 1u128 << k;
                }
                k += 1;
            }
        }
        Some(PairSignature(bits))
    }

    #[inline]
    pub fn distance(self, other: PairSignature) -> u32 {
        (self.0 ^ other.0).count_ones()
    }

    #[inline]
    pub fn inversions(self) -> u32 {
        self.0.count_ones()
    }
}

/// `n!` as a `u64`, for `n <= 20`.
pub fn factorial_u64(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

/// Lexicographic rank of `p` in `S_n` (its Lehmer code read in the factorial base).
/// Defined for `n <= 20`.
pub fn lehmer_rank(p: &Permutation) -> u64 {
    let n = p.degree();
    assert!(n <= 20, "lehmer rank needs n <= 20");
    let mut rank = 0u64;
    let mut used = 0u32;
    for (i, &v) in p.word.iter().enumerate() {
        let smaller_unused = (v as u32 - (used & ((1u32 << v) - 1)).count_ones()) as u64;
        rank = rank * (n - i) as u64 + smaller_unused;
        used |= 1 << v;
    }
    rank
}

/// Inverse of [`lehmer_rank`].
pub fn lehmer_unrank(n: usize, mut rank: u64) -> Result<Permutation> {
    let total = factorial_u64(n).filter(|_| n >= 1).ok_or(Error::TooLarge {
        what: "degree",
        value: n as u64,
        limit: 20,
    })?;
    if rank >= total {
        return Err(Error::OutOfRange {
            what: "rank",
            value: rank,
            min: 0,
            max: total - 1,
        });
    }
    let mut digits = vec![0usize; n];
    for i in (0..n).rev() {
        let base = (n - i) as u64;
        digits[i] = (rank % base) as usize;
        rank /= base;
    }
    let mut pool: Vec<u8> = (0..n as u8).collect();
    let word = digits.into_iter().map(|d| pool.remove(d)).collect();
    Ok(Permutation { word })
}

/// Iterator over `S_n` in lexicographic order (equivalently, Lehmer rank order).
pub struct LexPermutations {
    next: Option<Vec<u8>>,
}

impl LexPermutations {
    pub fn new(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n));
        LexPermutations {
            next: Some((0..n as u8).collect()),
        }
    }
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { word: cur })
    }
}

fn next_permutation(w: &mut [u8]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    LexPermutations::new(n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn compose_follows_left_to_right_convention() {
        assert_eq!(compose(&p("2 1 3"), &p("1 3 2")).unwrap(), p("3 1 2"));
        let q = p("3 1 4 2");
        assert_eq!(compose(&Permutation::identity(4), &q).unwrap(), q);
        assert!(compose(&q, &q.inverse()).unwrap().is_identity());
        assert!(matches!(
            compose(&p("1 2"), &p("1 2 3")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn inverse_of_three_cycle() {
        assert_eq!(p("2 3 1").inverse(), p("3 1 2"));
        assert!(Permutation::identity(5).inverse().is_identity());
    }

    #[test]
    fn inversion_extremes() {
        assert_eq!(Permutation::identity(9).inversions(), 0);
        assert_eq!(Permutation::reversal(9).inversions(), 36);
        assert_eq!(
            Permutation::adjacent_transposition(5, 3).unwrap().parity(),
            Parity::Odd
        );
        assert_eq!(Permutation::identity(5).parity(), Parity::Even);
    }

    #[test]
    fn parser_rejects_bad_words() {
        for bad in ["", "1 1 2", "1 3", "0 1 2", "-1 1", "1 x 2"] {
            assert!(bad.parse::<Permutation>().is_err(), "{bad:?} accepted");
        }
        assert_eq!(p("[1, 3, 2]"), p("1 3 2"));
        assert_eq!(p("4 2 1 3 7 5 6").to_string(), "4 2 1 3 7 5 6");
    }

    #[test]
    fn distance_small_cases() {
        let id = Permutation::identity(6);
        assert_eq!(kendall_distance(&id, &id).unwrap().get(), 0);
        assert_eq!(kendall_distance(&id, &p("2 1 3 4 5 6")).unwrap().get(), 1);
        assert_eq!(
            kendall_distance_naive(&id, &Permutation::reversal(6))
                .unwrap()
                .get(),
            15
        );
    }

    #[test]
    fn example_fourteen_pair_is_sixty_apart() {
        let a1 = p("1 6 7 12 14 13 11 10 9 8 5 4 3 2");
        let a2 = p("2 5 8 11 14 13 12 10 9 7 6 4 3 1");
        assert_eq!(kendall_distance(&a1, &a2).unwrap().get(), 60);
    }

    #[test]
    fn fast_and_naive_agree_on_all_of_s4() {
        let all = all_permutations(4);
        assert_eq!(all.len(), 24);
        for a in &all {
            for b in &all {
                let fast = kendall_distance(a, b).unwrap();
                assert_eq!(fast, kendall_distance_naive(a, b).unwrap());
                let sig = PairSignature::of(a)
                    .unwrap()
                    .distance(PairSignature::of(b).unwrap());
                assert_eq!(sig, fast.get());
            }
        }
    }

    #[test]
    fn lehmer_rank_matches_lex_order() {
        for n in 1..=6 {
            for (i, q) in LexPermutations::new(n).enumerate() {
                assert_eq!(lehmer_rank(&q), i as u64);
                assert_eq!(lehmer_unrank(n, i as u64).unwrap(), q);
            }
        }
        assert!(lehmer_unrank(3, 6).is_err());
    }
}
