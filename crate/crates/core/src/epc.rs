//! Equidistant permutation codes and exact computations in small symmetric groups.
//!
//! Right invariance lets every equidistant code be translated to one containing `ξ`.
//! Such a code with common distance `d` is `ξ` together with a clique in the graph on
//! `shell(n, d)` whose edges join members at distance exactly `d`.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::balls::pairs;
use crate::clique::{BitSet, Graph};
use crate::error::{ensure_range, Error, Result};
use crate::perm::{
    all_permutations, factorial_u64, lehmer_rank, LexPermutations, PairSignature, Permutation,
};

pub const MATRIX_MAX_DEGREE: usize = 7;
pub const SHELL_MAX_DEGREE: usize = 8;
pub const CLIQUE_SHELL_LIMIT: usize = 1000;
pub const CACHE_ENV: &str = "PERMKIT_CACHE_DIR";

/// All pairwise distances in `S_n`, indexed by lexicographic rank, one byte each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    size: usize,
    data: Vec<u8>,
}

impl DistanceMatrix {
    pub fn build(n: usize) -> Result<Self> {
        if n == 0 || n > MATRIX_MAX_DEGREE {
            return Err(Error::TooLarge {
                what: "degree",
                value: n as u64,
                limit: MATRIX_MAX_DEGREE as u64,
            });
        }
        let sigs: Vec<PairSignature> = LexPermutations::new(n)
            .map(|p| PairSignature::of(&p).expect("small degree"))
            .collect();
        let size = sigs.len();
        let mut data = vec![0u8; size * size];
        data.par_chunks_mut(size).enumerate().for_each(|(i, row)| {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = sigs[i].distance(sigs[j]) as u8;
            }
        });
        Ok(DistanceMatrix { n, size, data })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// `n!`.
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.size + j]
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.size..(i + 1) * self.size]
    }

    pub fn distance(&self, a: &Permutation, b: &Permutation) -> u8 {
        self.get(lehmer_rank(a) as usize, lehmer_rank(b) as usize)
    }

    pub fn cache_file(dir: &Path, n: usize) -> PathBuf {
        dir.join(format!("kendall_s{n}.bin"))
    }

    /// Raw row-major bytes.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        let mut f = fs::File::create(&tmp)?;
        f.write_all(&self.data)?;
        f.sync_all()?;
        fs::rename(tmp, path)?;
        Ok(())
    }

    pub fn load(path: &Path, n: usize) -> Result<Self> {
        let size = factorial_u64(n)
            .filter(|_| (1..=MATRIX_MAX_DEGREE).contains(&n))
            .ok_or(Error::TooLarge {
                what: "degree",
                value: n as u64,
                limit: MATRIX_MAX_DEGREE as u64,
            })? as usize;
        let data = fs::read(path)?;
        if data.len() != size * size {
            return Err(Error::Io(format!(
                "{} has {} bytes, expected {}",
                path.display(),
                data.len(),
                size * size
            )));
        }
        Ok(DistanceMatrix { n, size, data })
    }

    /// Loads the cached matrix from `dir`, building and storing it when absent or
    /// malformed.
    pub fn load_or_build(n: usize, dir: Option<&Path>) -> Result<Self> {
        let Some(dir) = dir else {
            return Self::build(n);
        };
        let path = Self::cache_file(dir, n);
        if let Ok(m) = Self::load(&path, n) {
            return Ok(m);
        }
        let m = Self::build(n)?;
        fs::create_dir_all(dir)?;
        m.save(&path)?;
        Ok(m)
    }
}

/// Permutations at distance exactly `d` from `ξ`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Shell {
    pub n: usize,
    pub d: u64,
    pub members: Vec<Permutation>,
}

pub fn shell(n: usize, d: u64) -> Result<Shell> {
    if n == 0 || n > SHELL_MAX_DEGREE {
        return Err(Error::TooLarge {
            what: "degree",
            value: n as u64,
            limit: SHELL_MAX_DEGREE as u64,
        });
    }
    ensure_range("d", d, 0, pairs(n))?;
    let members = LexPermutations::new(n)
        .filter(|p| p.inversions() == d)
        .collect();
    Ok(Shell { n, d, members })
}

fn shell_graph(sh: &Shell, d: u32) -> Result<Graph> {
    if sh.members.len() > CLIQUE_SHELL_LIMIT {
        return Err(Error::TooLarge {
            what: "shell size",
            value: sh.members.len() as u64,
            limit: CLIQUE_SHELL_LIMIT as u64,
        });
    }
    let sigs: Vec<PairSignature> = sh
        .members
        .iter()
        .map(|p| PairSignature::of(p).expect("small degree"))
        .collect();
    Ok(Graph::from_fn(sigs.len(), |i, j| {
        sigs[i].distance(sigs[j]) == d
    }))
}

/// Entry `i - 2` counts the `i`-subsets of the shell that are pairwise at distance
/// exactly `d`, for `i = 2..=max_size`.
pub fn count_equidistant_cliques(sh: &Shell, d: u32, max_size: usize) -> Result<Vec<u64>> {
    if max_size < 2 {
        return Err(Error::Precondition("max_size >= 2 required".into()));
    }
    let g = shell_graph(sh, d)?;
    let per_root: Vec<Vec<u64>> = (0..g.order())
        .into_par_iter()
        .map(|r| g.count_cliques_from(r, max_size))
        .collect();
    let mut totals = vec![0u64; max_size];
    for counts in per_root {
        for (t, c) in totals.iter_mut().zip(counts) {
            *t += c;
        }
    }
    Ok(totals.split_off(1))
}

/// The `size`-subsets of the shell pairwise at distance `d`, as sorted index lists
/// into `sh.members`, in lexicographic order.
pub fn equidistant_cliques(sh: &Shell, d: u32, size: usize) -> Result<Vec<Vec<usize>>> {
    Ok(shell_graph(sh, d)?.cliques_of_size(size))
}

/// Largest equidistant code with common distance `d` in `S_n`.
pub fn ep_max(n: usize, d: u64) -> Result<usize> {
    if n > MATRIX_MAX_DEGREE {
        return Err(Error::TooLarge {
            what: "degree",
            value: n as u64,
            limit: MATRIX_MAX_DEGREE as u64,
        });
    }
    ensure_range("d", d, 1, pairs(n))?;
    let sh = shell(n, d)?;
    let g = shell_graph(&sh, d as u32)?;
    // Largest clique in the shell graph, plus ξ.
    Ok(g.max_clique_within(&BitSet::full(g.order())) + 1)
}

/// Outcome of scanning every six-element `(7, 12)` equidistant code `M ∋ ξ` for the
/// permutations far from all of `M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub threshold: u32,
    pub candidates: usize,
    /// `max |B_M|` with `B_M = {σ : d_K(m, σ) >= threshold for all m ∈ M}`.
    pub max_b: usize,
    pub min_b: usize,
    /// Whether every two distinct members of every `B_M` are closer than `threshold`.
    pub pairs_close: bool,
    /// Largest distance between two distinct members of a single `B_M`.
    pub max_pair_distance: u8,
}

impl ExtensionReport {
    /// At most one member of `B_M` can join `M`, so an `(7, threshold)` code holding a
    /// six-element equidistant code has at most seven members.
    pub fn confirms_extension_bound(&self) -> bool {
        self.max_b <= 14 && self.pairs_close
    }
}

pub fn epc_extension_check(threshold: u32) -> Result<ExtensionReport> {
    let m = DistanceMatrix::build(7)?;
    epc_extension_check_with(&m, threshold)
}

pub fn epc_extension_check_with(
    matrix: &DistanceMatrix,
    threshold: u32,
) -> Result<ExtensionReport> {
    if matrix.degree() != 7 {
        return Err(Error::Precondition(
            "the extension check is defined on S_7".into(),
        ));
    }
    let sh = shell(7, 12)?;
    let sets = equidistant_cliques(&sh, 12, 5)?;
    let size = matrix.size();
    let far = |rank: usize| -> BitSet {
        let mut b = BitSet::new(size);
        for (j, &dist) in matrix.row(rank).iter().enumerate() {
            if dist as u32 >= threshold {
                b.insert(j);
            }
        }
        b
    };
    let id_far = far(0);
    let ranks: Vec<usize> = sh.members.iter().map(|p| lehmer_rank(p) as usize).collect();
    let shell_far: Vec<BitSet> = ranks.par_iter().map(|&r| far(r)).collect();
    let per_set: Vec<(usize, bool, u8)> = sets
        .par_iter()
        .map(|a| {
            let mut b = id_far.clone();
            for &i in a {
                b.intersect_with(&shell_far[i]);
            }
            let members: Vec<usize> = b.iter().collect();
            let mut close = true;
            let mut max_pair = 0u8;
            for (x, &i) in members.iter().enumerate() {
                for &j in &members[x + 1..] {
                    let dist = matrix.get(i, j);
                    max_pair = max_pair.max(dist);
                    if dist as u32 >= threshold {
                        close = false;
                    }
                }
            }
            (members.len(), close, max_pair)
        })
        .collect();
    Ok(ExtensionReport {
        threshold,
        candidates: sets.len(),
        max_b: per_set.iter().map(|s| s.0).max().unwrap_or(0),
        min_b: per_set.iter().map(|s| s.0).min().unwrap_or(0),
        pairs_close: per_set.iter().all(|s| s.1),
        max_pair_distance: per_set.iter().map(|s| s.2).max().unwrap_or(0),
    })
}

/// Computed facts about equidistant codes that sharpen the counting argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EpFacts {
    pub n: usize,
    /// Even common distance the facts refer to.
    pub even_distance: u32,
    /// `EP(n, even_distance)`.
    pub ep: usize,
    /// `(s, m)`: a code at distance `even_distance - 1` containing an `s`-element
    /// equidistant code has at most `m` members.
    pub extension: Option<(usize, usize)>,
}

impl EpFacts {
    /// `EP(7, 12) = 7`, and a `(7, 11)` code containing a six-element `(7, 12)`
    /// equidistant code has at most 7 members.
    pub fn s7_d12() -> Self {
        EpFacts {
            n: 7,
            even_distance: 12,
            ep: 7,
            extension: Some((6, 7)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    /// Sizes of the even and odd parts (larger first).
    pub parts: (usize, usize),
    pub lower: u64,
    pub upper: u64,
    pub survives_sum: bool,
    /// Lower equals upper, so every pair sits at its minimum distance.
    pub tight: bool,
    pub refuted_by_extension: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Feasible,
    Contradiction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Feasibility {
    pub n: usize,
    pub d: u32,
    pub size: usize,
    pub verdict: Verdict,
    pub splits: Vec<SplitReport>,
}

fn c2(x: usize) -> u64 {
    (x as u64) * (x as u64).saturating_sub(1) / 2
}

/// Tests whether an `(n, d)` code of `size` members is compatible with
///
/// * `Σ <= C(n,2) · ceil(M/2) · floor(M/2)` for the sum of pairwise distances, and
/// * the lower bounds forced by minimum distance, parity and `facts`.
///
/// For even `d` the code is one block; a block larger than `EP(n, d)` is not
/// equidistant, so some pair exceeds `d`. For odd `d` the code splits by parity:
/// pairs inside a part have even distance `>= d + 1`, pairs across have `>= d`.
pub fn sum_distance_feasibility(
    n: usize,
    d: u32,
    size: usize,
    facts: Option<&EpFacts>,
) -> Result<Feasibility> {
    if size < 2 {
        return Err(Error::Precondition("size >= 2 required".into()));
    }
    ensure_range("d", d as u64, 1, pairs(n))?;
    let even = if d % 2 == 0 { d } else { d + 1 };
    let facts = match facts {
        Some(f) if f.n == n && f.even_distance == even => Some(f),
        Some(_) => return Err(Error::Precondition("facts do not match (n, d)".into())),
        None => None,
    };
    let upper = pairs(n) * (size.div_ceil(2) * (size / 2)) as u64;
    let block_lower = |s: usize, dist: u32, bump: u64| -> u64 {
        let over = facts.is_some_and(|f| s > f.ep);
        c2(s) * dist as u64 + if over { bump } else { 0 }
    };
    let mut splits = Vec::new();
    if d % 2 == 0 {
        let lower = block_lower(size, d, 1);
        splits.push(SplitReport {
            parts: (size, 0),
            lower,
            upper,
            survives_sum: lower <= upper,
            tight: lower == upper,
            refuted_by_extension: false,
        });
    } else {
        for a in size.div_ceil(2)..=size {
            let b = size - a;
            // Two same-parity distances differ by an even amount.
            let lower =
                block_lower(a, even, 2) + block_lower(b, even, 2) + d as u64 * (a * b) as u64;
            let survives = lower <= upper;
            let tight = lower == upper;
            // Tightness forces both parts to be equidistant at `even`.
            let refuted = survives
                && tight
                && facts
                    .and_then(|f| f.extension)
                    .is_some_and(|(s, m)| a >= s && size > m);
            splits.push(SplitReport {
                parts: (a, b),
                lower,
                upper,
                survives_sum: survives,
                tight,
                refuted_by_extension: refuted,
            });
        }
    }
    let verdict = if splits
        .iter()
        .any(|s| s.survives_sum && !s.refuted_by_extension)
    {
        Verdict::Feasible
    } else {
        Verdict::Contradiction
    };
    Ok(Feasibility {
        n,
        d,
        size,
        verdict,
        splits,
    })
}

/// Exact `P(n, d)` by maximum clique search with `ξ` fixed in the code.
pub fn max_clique_exact(n: usize, d: u32) -> Result<usize> {
    ensure_range("n", n as u64, 1, 6)?;
    ensure_range("d", d as u64, 1, pairs(n).max(1))?;
    if n == 6 && d < 5 {
        return Err(Error::Precondition(
            "n = 6 is supported for d >= 5 only".into(),
        ));
    }
    if n == 1 {
        return Ok(1);
    }
    let perms = all_permutations(n);
    let far: Vec<Permutation> = perms
        .into_iter()
        .filter(|p| p.inversions() >= d as u64)
        .collect();
    let sigs: Vec<PairSignature> = far
        .iter()
        .map(|p| PairSignature::of(p).expect("small"))
        .collect();
    let g = Graph::from_fn(far.len(), |i, j| sigs[i].distance(sigs[j]) >= d).degree_sorted();
    Ok(g.max_clique_within(&BitSet::full(g.order())) + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balls::MahonianTable;
    use num_bigint::BigUint;

    #[test]
    fn matrix_is_a_metric_table() {
        let m = DistanceMatrix::build(4).unwrap();
        assert_eq!(m.size(), 24);
        for i in 0..24 {
            assert_eq!(m.get(i, i), 0);
            for j in 0..24 {
                assert_eq!(m.get(i, j), m.get(j, i));
                assert!(m.get(i, j) <= 6);
            }
        }
        assert_eq!(m.get(0, 23), 6);
        assert!(DistanceMatrix::build(8).is_err());
    }

    #[test]
    fn matrix_cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("permkit-cache-{}", std::process::id()));
        let a = DistanceMatrix::load_or_build(4, Some(&dir)).unwrap();
        assert!(DistanceMatrix::cache_file(&dir, 4).exists());
        let b = DistanceMatrix::load_or_build(4, Some(&dir)).unwrap();
        assert_eq!(a, b);
        fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn shells_are_mahonian() {
        for n in 1..=6 {
            let t = MahonianTable::new(n);
            for d in 0..=pairs(n) {
                assert_eq!(
                    BigUint::from(shell(n, d).unwrap().members.len()),
                    t.count(d)
                );
            }
        }
    }

    #[test]
    fn clique_counts_match_subsets_in_s4() {
        let sh = shell(4, 3).unwrap();
        let counts = count_equidistant_cliques(&sh, 2, 4).unwrap();
        let k = sh.members.len();
        let dist = |a: usize, b: usize| {
            crate::perm::kendall_distance(&sh.members[a], &sh.members[b])
                .unwrap()
                .get()
        };
        let mut brute = vec![0u64; 3];
        for mask in 0u32..(1 << k) {
            let idx: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
            if idx.len() < 2 || idx.len() > 4 {
                continue;
            }
            let ok = idx
                .iter()
                .enumerate()
                .all(|(x, &a)| idx[x + 1..].iter().all(|&b| dist(a, b) == 2));
            if ok {
                brute[idx.len() - 2] += 1;
            }
        }
        assert_eq!(counts, brute);
    }

    #[test]
    fn odd_distance_equidistant_codes_are_pairs() {
        for n in 3..=6 {
            for d in (1..=pairs(n)).filter(|d| d % 2 == 1) {
                assert_eq!(ep_max(n, d).unwrap(), 2, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn exact_p5() {
        let row: Vec<usize> = (3..=10).map(|d| max_clique_exact(5, d).unwrap()).collect();
        assert_eq!(row, vec![20, 12, 6, 5, 2, 2, 2, 2]);
        assert_eq!(max_clique_exact(5, 1).unwrap(), 120);
        assert_eq!(max_clique_exact(4, 5).unwrap(), 2);
        assert!(max_clique_exact(6, 3).is_err());
    }

    #[test]
    fn counting_arguments() {
        let f = EpFacts::s7_d12();
        let r = sum_distance_feasibility(7, 12, 8, Some(&f)).unwrap();
        assert_eq!(r.verdict, Verdict::Contradiction);
        assert_eq!((r.splits[0].lower, r.splits[0].upper), (337, 336));
        let r = sum_distance_feasibility(7, 12, 7, Some(&f)).unwrap();
        assert_eq!(r.verdict, Verdict::Feasible);
        let r = sum_distance_feasibility(7, 11, 12, Some(&f)).unwrap();
        assert_eq!(r.verdict, Verdict::Contradiction);
        let survivors: Vec<_> = r.splits.iter().filter(|s| s.survives_sum).collect();
        assert_eq!(survivors.len(), 1);
        assert_eq!(survivors[0].parts, (6, 6));
        assert!(survivors[0].tight && survivors[0].refuted_by_extension);
        let r = sum_distance_feasibility(7, 11, 11, Some(&f)).unwrap();
        assert_eq!(r.verdict, Verdict::Contradiction);
        let r = sum_distance_feasibility(7, 11, 12, None).unwrap();
        assert_eq!(r.verdict, Verdict::Feasible);
    }
}
