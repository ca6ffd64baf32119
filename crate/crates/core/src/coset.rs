//! Codes built from a subgroup `H ≤ S_n` together with some of its left cosets.
//!
//! Left cosets use the library's composition convention: `xH = {x · h}` with
//! `(x · h)(i) = h(x(i))`. The published tables validate under this convention and
//! not under the usual function composition, which is kept available as
//! [`Convention::RightToLeft`] for comparison.
//!
//! The metric is right invariant, but left cosets are not translates under it, so
//! every coset is checked in full.

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::code::{min_pairwise_distance, PermCode};
use crate::error::{Error, Result};
use crate::perm::{
    factorial_u64, kendall_distance, lehmer_rank, LexPermutations, PairSignature, Permutation,
};
use crate::tables::TableRow;

pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;
/// Largest degree for which `S_n` is walked explicitly.
pub const TRANSVERSAL_MAX_DEGREE: usize = 10;
pub const CYCLIC_SOURCE_MAX_DEGREE: usize = 8;

/// A subgroup of `S_n` given by generators, with its elements in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subgroup {
    n: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl Subgroup {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

/// Subgroup generated by `generators`, with the default element cap.
pub fn closure(n: usize, generators: &[Permutation]) -> Result<Subgroup> {
    closure_with_cap(n, generators, DEFAULT_ELEMENT_CAP)
}

/// Breadth-first closure under right multiplication by the generators.
pub fn closure_with_cap(n: usize, generators: &[Permutation], cap: usize) -> Result<Subgroup> {
    for g in generators {
        if g.degree() != n {
            return Err(Error::LengthMismatch {
                left: n,
                right: g.degree(),
            });
        }
    }
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(e) = queue.pop_front() {
        for g in generators {
            let next = e.then_unchecked(g);
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(Subgroup {
        n,
        generators: generators.to_vec(),
        elements,
    })
}

fn require_nontrivial(h: &Subgroup) -> Result<()> {
    if h.order() < 2 {
        return Err(Error::Precondition("subgroup is trivial".into()));
    }
    Ok(())
}

/// Minimum distance of `H` as a code: `min d_K(ξ, h)` over `h ≠ ξ`.
pub fn subgroup_min_weight(h: &Subgroup) -> Result<u32> {
    require_nontrivial(h)?;
    Ok(h.elements
        .iter()
        .filter(|e| !e.is_identity())
        .map(|e| e.inversions() as u32)
        .min()
        .expect("nontrivial"))
}

/// How a coset `xH` is formed from `x` and `h`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub enum Convention {
    /// `i ↦ h(x(i))`, matching [`Permutation::then`].
    #[default]
    LeftToRight,
    /// `i ↦ x(h(i))`, ordinary function composition.
    RightToLeft,
}

impl Convention {
    pub fn product(self, x: &Permutation, h: &Permutation) -> Permutation {
        match self {
            Convention::LeftToRight => x.then_unchecked(h),
            Convention::RightToLeft => h.then_unchecked(x),
        }
    }
}

pub fn left_coset(x: &Permutation, h: &Subgroup, conv: Convention) -> Result<Vec<Permutation>> {
    if x.degree() != h.n {
        return Err(Error::LengthMismatch {
            left: h.n,
            right: x.degree(),
        });
    }
    Ok(h.elements.iter().map(|e| conv.product(x, e)).collect())
}

/// Lexicographically smallest member of every left coset, in lexicographic order.
/// The first entry is `ξ`.
pub fn left_transversal(h: &Subgroup) -> Result<Vec<Permutation>> {
    left_transversal_with(h, Convention::LeftToRight, DEFAULT_ELEMENT_CAP)
}

pub fn left_transversal_with(
    h: &Subgroup,
    conv: Convention,
    cap: usize,
) -> Result<Vec<Permutation>> {
    let n = h.n;
    if n > TRANSVERSAL_MAX_DEGREE {
        return Err(Error::TooLarge {
            what: "degree",
            value: n as u64,
            limit: TRANSVERSAL_MAX_DEGREE as u64,
        });
    }
    let total = factorial_u64(n).expect("n <= 10") as usize;
    let count = total / h.order();
    if count > cap {
        return Err(Error::CapExceeded { cap });
    }
    let mut covered = vec![false; total];
    let mut reps = Vec::with_capacity(count);
    for p in LexPermutations::new(n) {
        if covered[lehmer_rank(&p) as usize] {
            continue;
        }
        for e in &h.elements {
            covered[lehmer_rank(&conv.product(&p, e)) as usize] = true;
        }
        reps.push(p);
        if reps.len() == count {
            break;
        }
    }
    Ok(reps)
}

fn signatures(ps: &[Permutation]) -> Option<Vec<PairSignature>> {
    ps.iter().map(PairSignature::of).collect()
}

fn distance(a: &Permutation, b: &Permutation) -> u32 {
    kendall_distance(a, b).expect("same degree").get()
}

/// Minimum pairwise distance inside `xH`.
pub fn coset_min_distance(x: &Permutation, h: &Subgroup) -> Result<u32> {
    coset_min_distance_with(x, h, Convention::LeftToRight)
}

pub fn coset_min_distance_with(x: &Permutation, h: &Subgroup, conv: Convention) -> Result<u32> {
    require_nontrivial(h)?;
    let coset = left_coset(x, h, conv)?;
    Ok(min_pairwise_distance(&coset)
        .min_distance
        .expect("at least two elements"))
}

/// `min d_K(g, m)` over `m ∈ M`.
pub fn min_distance_to_set(m: &[Permutation], g: &Permutation) -> Result<u32> {
    if m.is_empty() {
        return Err(Error::Precondition("empty set".into()));
    }
    for x in m {
        if x.degree() != g.degree() {
            return Err(Error::LengthMismatch {
                left: x.degree(),
                right: g.degree(),
            });
        }
    }
    Ok(m.iter().map(|x| distance(x, g)).min().expect("non-empty"))
}

/// `H ∪ ⋃ xH` over the chosen representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetCode {
    pub subgroup: Subgroup,
    pub reps: Vec<Permutation>,
    pub code: PermCode,
    pub d: u32,
    pub convention: Convention,
    /// Representatives rejected only because some other member of their coset is too
    /// close to the code; checking the representative alone would have accepted them.
    pub shortcut_violations: Vec<Permutation>,
}

/// Accumulated code members for fast distance queries.
struct Accumulator {
    members: Vec<Permutation>,
    sigs: Option<Vec<PairSignature>>,
}

impl Accumulator {
    fn new(members: Vec<Permutation>) -> Self {
        let sigs = signatures(&members);
        Accumulator { members, sigs }
    }

    fn far_from_all(&self, g: &Permutation, d: u32) -> bool {
        match (&self.sigs, PairSignature::of(g)) {
            (Some(sigs), Some(s)) => sigs.iter().all(|m| m.distance(s) >= d),
            _ => self.members.iter().all(|m| distance(m, g) >= d),
        }
    }

    fn extend(&mut self, coset: Vec<Permutation>) {
        if let Some(sigs) = &mut self.sigs {
            sigs.extend(
                coset
                    .iter()
                    .map(|p| PairSignature::of(p).expect("small degree")),
            );
        }
        self.members.extend(coset);
    }
}

/// Greedy selection over the canonical transversal: a coset is added when it is itself
/// an `(n, d)` code and every member is at distance `>= d` from the code so far.
pub fn greedy_coset_code(h: &Subgroup, d: u32) -> Result<CosetCode> {
    let weight = subgroup_min_weight(h)?;
    if weight < d {
        return Err(Error::Precondition(format!(
            "subgroup has minimum weight {weight} < {d}"
        )));
    }
    let transversal = left_transversal(h)?;
    let mut acc = Accumulator::new(h.elements.clone());
    let mut reps = Vec::new();
    let mut flagged = Vec::new();
    for x in transversal.into_iter().skip(1) {
        let rep_ok = acc.far_from_all(&x, d);
        if !rep_ok {
            continue;
        }
        if coset_min_distance(&x, h)? < d {
            continue;
        }
        let coset = left_coset(&x, h, Convention::LeftToRight)?;
        let coset_ok = coset.par_iter().all(|g| acc.far_from_all(g, d));
        if coset_ok {
            acc.extend(coset);
            reps.push(x);
        } else {
            flagged.push(x);
        }
    }
    let code = PermCode::new(h.n, acc.members)?.with_claimed_distance(d);
    Ok(CosetCode {
        subgroup: h.clone(),
        reps,
        code,
        d,
        convention: Convention::LeftToRight,
        shortcut_violations: flagged,
    })
}

/// Builds `H ∪ ⋃ xH` from explicit data and checks size and minimum distance.
pub fn build_coset_code(
    h: &Subgroup,
    reps: &[Permutation],
    d: u32,
    conv: Convention,
) -> Result<CosetCode> {
    let mut members = h.elements.clone();
    for x in reps {
        members.extend(left_coset(x, h, conv)?);
    }
    let code = PermCode::new(h.n, members)
        .map_err(|e| Error::Verification(format!("cosets overlap: {e}")))?
        .with_claimed_distance(d);
    code.verify(None)?;
    Ok(CosetCode {
        subgroup: h.clone(),
        reps: reps.to_vec(),
        code,
        d,
        convention: conv,
        shortcut_violations: Vec::new(),
    })
}

fn perms(rows: &[&[u8]]) -> Result<Vec<Permutation>> {
    rows.iter()
        .map(|w| Permutation::from_one_based(w))
        .collect()
}

/// Checks one published row: `|H|` must match, and the union must be a code of size
/// `(|reps| + 1) |H|` at distance `d`. Tries [`Convention::LeftToRight`] first, then
/// [`Convention::RightToLeft`].
pub fn verify_table_row(
    n: usize,
    d: u32,
    generators: &[Permutation],
    reps: &[Permutation],
    expected_order: Option<usize>,
) -> Result<CosetCode> {
    let h = closure(n, generators)?;
    if let Some(o) = expected_order {
        if h.order() != o {
            return Err(Error::Verification(format!(
                "subgroup has order {} but {o} was expected",
                h.order()
            )));
        }
    }
    let mut first_err = None;
    for conv in [Convention::LeftToRight, Convention::RightToLeft] {
        match build_coset_code(&h, reps, d, conv) {
            Ok(c) => return Ok(c),
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    Err(first_err.expect("two attempts"))
}

/// [`verify_table_row`] with a fixed convention.
pub fn verify_table_row_with(row: &TableRow, conv: Convention) -> Result<CosetCode> {
    let h = closure(row.n, &perms(row.generators)?)?;
    if h.order() != row.order {
        return Err(Error::Verification(format!(
            "subgroup has order {} but the table lists {}",
            h.order(),
            row.order
        )));
    }
    build_coset_code(&h, &perms(row.reps)?, row.d, conv)
}

/// Verifies every row under a single convention, returning the first convention under
/// which all rows pass.
pub fn verify_table(rows: &[TableRow]) -> Result<(Convention, Vec<CosetCode>)> {
    let mut last_err = None;
    for conv in [Convention::LeftToRight, Convention::RightToLeft] {
        let results: Result<Vec<CosetCode>> = rows
            .par_iter()
            .map(|r| verify_table_row_with(r, conv))
            .collect();
        match results {
            Ok(codes) => return Ok((conv, codes)),
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.expect("two attempts"))
}

pub fn table_row_code(row: &TableRow) -> Result<CosetCode> {
    verify_table_row(
        row.n,
        row.d,
        &perms(row.generators)?,
        &perms(row.reps)?,
        Some(row.order),
    )
}

/// Every distinct cyclic subgroup `⟨g⟩` of `S_n`, including the trivial one, ordered
/// by order and then by element list. Each is generated by its lexicographically
/// smallest generator.
pub fn cyclic_subgroup_source(n: usize) -> Result<Vec<Subgroup>> {
    if n == 0 || n > CYCLIC_SOURCE_MAX_DEGREE {
        return Err(Error::TooLarge {
            what: "degree",
            value: n as u64,
            limit: CYCLIC_SOURCE_MAX_DEGREE as u64,
        });
    }
    let mut seen: HashSet<Vec<Permutation>> = HashSet::new();
    let mut out = Vec::new();
    for g in LexPermutations::new(n) {
        let mut elements = vec![Permutation::identity(n)];
        let mut cur = g.clone();
        while !cur.is_identity() {
            elements.push(cur.clone());
            cur = cur.then_unchecked(&g);
        }
        elements.sort_unstable();
        if seen.insert(elements.clone()) {
            out.push(Subgroup {
                n,
                generators: vec![g],
                elements,
            });
        }
    }
    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements.cmp(&b.elements))
    });
    Ok(out)
}

/// Runs the greedy on every admissible subgroup and keeps the largest code; ties go to
/// the earliest subgroup in the input order.
pub fn search(subgroups: &[Subgroup], d: u32) -> Result<Option<CosetCode>> {
    let results: Vec<Option<CosetCode>> = subgroups
        .par_iter()
        .map(|h| {
            if h.order() < 2 || subgroup_min_weight(h).ok()? < d {
                return None;
            }
            greedy_coset_code(h, d).ok()
        })
        .collect();
    let mut best: Option<CosetCode> = None;
    for c in results.into_iter().flatten() {
        if best.as_ref().is_none_or(|b| c.code.len() > b.code.len()) {
            best = Some(c);
        }
    }
    Ok(best)
}
