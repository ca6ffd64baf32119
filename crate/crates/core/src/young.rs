//! Action of `T = {ξ} ∪ {adjacent transpositions}` on the cosets of the Young subgroup
//! fixing the last `r` positions.
//!
//! The coset `S_n^F = {σ : σ(n-r+k) = f_k}` is labelled by the tuple `F` of distinct
//! symbols. Right multiplication by `t` sends it to `S_n^{t(F)}`, where `t` is applied
//! to each symbol. Entry `(i, j)` counts the `t ∈ T` moving `F_i` to `F_j`.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::bounds::factorial;
use crate::error::{Error, Result};
use crate::simplex::{maximize, rational, LpSolution};

pub const DEFAULT_ELL_CAP: usize = 100_000;
pub const LP_MAX_ELL: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetActionMatrix {
    pub n: usize,
    pub r: usize,
    /// Row labels: `r`-tuples of distinct symbols (1-based), lexicographic.
    pub tuples: Vec<Vec<u8>>,
    entries: Vec<u32>,
}

impl CosetActionMatrix {
    pub fn ell(&self) -> usize {
        self.tuples.len()
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.ell() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        let ell = self.ell();
        self.entries[i * ell + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        let ell = self.ell();
        &self.entries[i * ell..(i + 1) * ell]
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for i in 0..self.ell() {
            let row: Vec<String> = self.row(i).iter().map(u32::to_string).collect();
            let _ = writeln!(s, "{}", row.join(","));
        }
        s
    }
}

fn tuples(n: usize, r: usize) -> Vec<Vec<u8>> {
    fn rec(n: usize, r: usize, cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                cur.push(v as u8);
                rec(n, r, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, r, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
    out
}

/// Builds the matrix for `1 <= r` and `4r < n`, the range in which it is strictly
/// diagonally dominant.
pub fn build_coset_matrix(n: usize, r: usize) -> Result<CosetActionMatrix> {
    if r == 0 || 4 * r >= n {
        return Err(Error::Precondition(format!(
            "need 1 <= r < n/4, got n = {n}, r = {r}"
        )));
    }
    build_coset_matrix_unrestricted(n, r, DEFAULT_ELL_CAP)
}

/// Builds the matrix for any `1 <= r <= n`, subject only to the size cap.
pub fn build_coset_matrix_unrestricted(
    n: usize,
    r: usize,
    cap: usize,
) -> Result<CosetActionMatrix> {
    if r == 0 || r > n || n > 255 {
        return Err(Error::Precondition(format!(
            "need 1 <= r <= n, got n = {n}, r = {r}"
        )));
    }
    let ell = (n - r + 1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k));
    match ell {
        Some(e) if e <= cap => {}
        _ => return Err(Error::CapExceeded { cap }),
    }
    let labels = tuples(n, r);
    let ell = labels.len();
    let index: HashMap<&[u8], usize> = labels
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();
    let mut entries = vec![0u32; ell * ell];
    for (i, f) in labels.iter().enumerate() {
        entries[i * ell + i] += 1;
        for a in 1..n as u8 {
            let image: Vec<u8> = f
                .iter()
                .map(|&v| {
                    if v == a {
                        a + 1
                    } else if v == a + 1 {
                        a
                    } else {
                        v
                    }
                })
                .collect();
            entries[i * ell + index[image.as_slice()]] += 1;
        }
    }
    Ok(CosetActionMatrix {
        n,
        r,
        tuples: labels,
        entries,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma5Report {
    pub n: usize,
    pub r: usize,
    pub ell: usize,
    pub symmetric: bool,
    pub diagonal_at_least_n_minus_2r: bool,
    pub off_diagonal_zero_one: bool,
    pub row_sums_equal_n: bool,
    pub strictly_dominant: bool,
    pub uniform_point_feasible: bool,
    pub violations: Vec<String>,
}

impl Lemma5Report {
    pub fn all_pass(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_lemma5(m: &CosetActionMatrix) -> Lemma5Report {
    let ell = m.ell();
    let n = m.n as i64;
    let floor = n - 2 * m.r as i64;
    let mut v = Vec::new();
    let mut symmetric = true;
    let mut diag = true;
    let mut off = true;
    let mut sums = true;
    let mut dominant = true;
    for i in 0..ell {
        let row = m.row(i);
        let a_ii = row[i] as i64;
        if a_ii < floor {
            diag = false;
            v.push(format!("a[{i}][{i}] = {a_ii} < {floor}"));
        }
        let mut off_sum = 0i64;
        for (j, &a) in row.iter().enumerate() {
            if j == i {
                continue;
            }
            off_sum += a as i64;
            if a > 1 {
                off = false;
                v.push(format!("a[{i}][{j}] = {a} is not 0 or 1"));
            }
            if a != m.get(j, i) && i < j {
                symmetric = false;
                v.push(format!("a[{i}][{j}] != a[{j}][{i}]"));
            }
        }
        if a_ii + off_sum != n {
            sums = false;
            v.push(format!("row {i} sums to {}", a_ii + off_sum));
        }
        if a_ii <= off_sum {
            dominant = false;
            if 4 * m.r < m.n {
                v.push(format!(
                    "row {i} is not strictly dominant ({a_ii} <= {off_sum})"
                ));
            }
        }
    }
    Lemma5Report {
        n: m.n,
        r: m.r,
        ell,
        symmetric,
        diagonal_at_least_n_minus_2r: diag,
        off_diagonal_zero_one: off,
        row_sums_equal_n: sums,
        strictly_dominant: dominant,
        uniform_point_feasible: uniform_point_feasible(m),
        violations: v,
    }
}

/// `A · ((n-r)!/n · 1) = (n-r)! · 1`, in exact arithmetic.
pub fn uniform_point_feasible(m: &CosetActionMatrix) -> bool {
    let rhs = BigRational::from_integer(BigInt::from(factorial((m.n - m.r) as u64)));
    let beta = &rhs / rational(m.n as i64);
    (0..m.ell()).all(|i| {
        let s: BigRational = m.row(i).iter().map(|&a| &beta * rational(a as i64)).sum();
        s == rhs
    })
}

/// Optimum of `max Σ x_i` subject to `A x <= (n-r)! · 1`, `x >= 0`.
pub fn ip_relaxation_upper(m: &CosetActionMatrix) -> Result<LpSolution> {
    let ell = m.ell();
    if ell > LP_MAX_ELL {
        return Err(Error::TooLarge {
            what: "ell",
            value: ell as u64,
            limit: LP_MAX_ELL as u64,
        });
    }
    let c = vec![rational(1); ell];
    let a: Vec<Vec<BigRational>> = (0..ell)
        .map(|i| m.row(i).iter().map(|&v| rational(v as i64)).collect())
        .collect();
    let rhs = BigRational::from_integer(BigInt::from(factorial((m.n - m.r) as u64)));
    maximize(&c, &a, &vec![rhs; ell])
}
