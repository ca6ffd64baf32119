//! Bounds on `P(n, d)`, the largest size of a permutation code of length `n` with
//! minimum Kendall distance `d`.
//!
//! Every returned value is an exact integer. Quotients are rounded in the direction
//! the counting argument allows (`ceil` for existence bounds, `floor` for packing
//! bounds). Square roots are never evaluated in floating point: comparisons are
//! made between cross-multiplied integer squares.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::balls::{double_ball_size_counted, pairs, MahonianTable};
use crate::error::{ensure_range, Error, Result};

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn ceil_div(a: &BigUint, b: &BigUint) -> BigUint {
    a.div_ceil(b)
}

/// Trial division. `0` and `1` are not prime.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut f = 3u64;
    while f.saturating_mul(f) <= n {
        if n % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

/// `n = p^k` for a prime `p` and `k >= 1`. `1` is not a prime power.
pub fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2u64;
    while f.saturating_mul(f) <= n {
        if n % f == 0 {
            let mut m = n;
            while m % f == 0 {
                m /= f;
            }
            return m == 1;
        }
        f += 1;
    }
    true
}

fn check_distance(n: u64, d: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::Precondition("n >= 2 required".into()));
    }
    ensure_range("d", d, 1, pairs(n as usize))
}

/// Gilbert–Varshamov: `P(n, d) >= ceil(n! / B_K(d-1))`.
pub fn gv_lower(n: u64, d: u64) -> Result<BigUint> {
    check_distance(n, d)?;
    let table = MahonianTable::new(n as usize);
    Ok(ceil_div(&factorial(n), &table.ball(d - 1)))
}

/// Sphere packing: `P(n, d) <= floor(n! / B_K(floor((d-1)/2)))`.
pub fn sphere_packing_upper(n: u64, d: u64) -> Result<BigUint> {
    check_distance(n, d)?;
    let table = MahonianTable::new(n as usize);
    Ok(factorial(n) / table.ball((d - 1) / 2))
}

/// Double-ball packing for even `d >= 4`: `P(n, d) <= floor(n! / DB_{n,(d-2)/2})`.
pub fn double_ball_upper(n: u64, d: u64) -> Result<BigUint> {
    check_distance(n, d)?;
    if d % 2 != 0 || d < 4 {
        return Err(Error::Precondition(
            "double-ball bound needs even d >= 4".into(),
        ));
    }
    let radius = (d - 2) / 2;
    let db = if radius == 1 {
        BigUint::from(2 * (n - 1))
    } else {
        double_ball_size_counted(n as usize, radius)?
    };
    Ok(factorial(n) / db)
}

/// `P(n, d) >= ceil(P(n, d-1) / 2)` for even `d`, given a lower bound on `P(n, d-1)`.
pub fn half_lower(n: u64, d: u64, odd_lower: &BigUint) -> Result<BigUint> {
    check_distance(n, d)?;
    if d % 2 != 0 {
        return Err(Error::Precondition("halving applies to even d".into()));
    }
    Ok(ceil_div(odd_lower, &BigUint::from(2u32)))
}

/// `P(n, 3) >= ceil(n! / (2n - 1))`.
pub fn jiang_lower3(n: u64) -> Result<BigUint> {
    check_distance(n, 3)?;
    Ok(ceil_div(&factorial(n), &BigUint::from(2 * n - 1)))
}

/// `P(n, 3) >= ceil(n! / (2n - 2))` when `n - 2` is a prime power.
pub fn barg_lower3(n: u64) -> Result<BigUint> {
    check_distance(n, 3)?;
    if !is_prime_power(n - 2) {
        return Err(Error::Precondition(format!(
            "n - 2 = {} is not a prime power",
            n - 2
        )));
    }
    Ok(ceil_div(&factorial(n), &BigUint::from(2 * n - 2)))
}

fn wzyg_m(n: u64, t: u64) -> Result<BigUint> {
    if n < 4 || !is_prime_power(n - 2) {
        return Err(Error::Precondition(format!(
            "n - 2 = {} is not a prime power",
            n.saturating_sub(2)
        )));
    }
    let q = BigUint::from(n - 2);
    Ok((q.pow(t as u32 + 1) - 1u32) / BigUint::from(n - 3))
}

/// For `d = 2t + 1`, `t >= 1` and `n - 2` a prime power:
/// `P(n, d) >= ceil(n! / ((2t + 1) m))`, `m = ((n-2)^(t+1) - 1) / (n - 3)`.
pub fn wzyg_lower(n: u64, d: u64) -> Result<BigUint> {
    check_distance(n, d)?;
    if d % 2 == 0 || d < 3 {
        return Err(Error::Precondition("needs odd d >= 3".into()));
    }
    let t = (d - 1) / 2;
    let m = wzyg_m(n, t)?;
    Ok(ceil_div(&factorial(n), &(m * (2 * t + 1))))
}

/// Even companion: for `d = 2t + 2`, `P(n, d) >= ceil(n! / (2 (2t + 1) m))`.
pub fn wzyg_lower_even(n: u64, d: u64) -> Result<BigUint> {
    check_distance(n, d)?;
    if d % 2 != 0 || d < 4 {
        return Err(Error::Precondition("needs even d >= 4".into()));
    }
    let t = (d - 2) / 2;
    let m = wzyg_m(n, t)?;
    Ok(ceil_div(&factorial(n), &(m * (2 * (2 * t + 1)))))
}

fn wzyg_feasible(n_pairs: u128, d: u128, m: u128) -> bool {
    let lo = m / 2;
    let hi = m - lo;
    let c2 = |x: u128| x * x.saturating_sub(1) / 2;
    let rhs = n_pairs * lo * hi;
    if d % 2 == 0 {
        let t = d / 2;
        2 * c2(m) * t <= rhs
    } else {
        let t = (d - 1) / 2;
        (2 * t + 2) * (c2(lo) + c2(hi)) + (2 * t + 1) * lo * hi <= rhs
    }
}

/// Largest `M` passing the pairwise-distance-sum test for `(n, d)`; an upper bound on
/// `P(n, d)`. `None` when the test never fails (roughly `d <= C(n,2)/2`).
pub fn wzyg_max_size(n: u64, d: u64) -> Result<Option<u64>> {
    check_distance(n, d)?;
    if d < 2 {
        return Err(Error::Precondition("needs d >= 2".into()));
    }
    let np = pairs(n as usize) as u128;
    // Past M = 2 C(n,2) + 4 the test is monotone, so scanning that far suffices.
    let limit = 2 * np + 4;
    let mut best = 1u128;
    for m in 2..=limit {
        if wzyg_feasible(np, d as u128, m) {
            best = m;
        }
    }
    if best >= limit - 1 {
        Ok(None)
    } else {
        Ok(Some(best as u64))
    }
}

/// Exact evaluation of
/// `t = (n - 6r) / sqrt(n² - 8rn + 20r²) * sqrt((n-1)! / (n (n-r)!))`
/// and of the resulting upper bounds on `P(n, 3)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem2Evaluation {
    pub n: u64,
    pub r: u64,
    /// Largest `k` with `k² · D · n · (n-r)! <= (n-6r)² · (n-1)!`.
    #[serde(serialize_with = "ser_decimal")]
    pub term_floor: BigUint,
    /// Smallest `k` with `k² · D · n · (n-r)! >= (n-6r)² · (n-1)!`.
    #[serde(serialize_with = "ser_decimal")]
    pub term_ceil: BigUint,
    /// `(n-1)! - term_ceil`: valid for integer code sizes.
    #[serde(serialize_with = "ser_decimal")]
    pub bound_sound: BigUint,
    /// `(n-1)! - term_floor`: the rounding used by the published comparison table.
    #[serde(serialize_with = "ser_decimal")]
    pub bound_table_mode: BigUint,
}

impl Theorem2Evaluation {
    /// `D = n² - 8rn + 20r²`; positive for all `n, r`.
    pub fn radicand_denominator(&self) -> BigUint {
        let (n, r) = (BigUint::from(self.n), BigUint::from(self.r));
        &n * &n + BigUint::from(20u32) * &r * &r - BigUint::from(8u32) * &r * &n
    }

    /// `(D · n · (n-r)!, (n-6r)² · (n-1)!)`: the term squared is `rhs / lhs`.
    pub fn cross_multiplied(&self) -> (BigUint, BigUint) {
        let lhs = self.radicand_denominator() * self.n * factorial(self.n - self.r);
        let gap = BigUint::from(self.n - 6 * self.r);
        let rhs = &gap * &gap * factorial(self.n - 1);
        (lhs, rhs)
    }

    pub fn bound(&self, rounding: Rounding) -> &BigUint {
        match rounding {
            Rounding::Sound => &self.bound_sound,
            Rounding::Table => &self.bound_table_mode,
        }
    }

    pub fn term(&self, rounding: Rounding) -> &BigUint {
        match rounding {
            Rounding::Sound => &self.term_ceil,
            Rounding::Table => &self.term_floor,
        }
    }
}

/// Upper bound on `P(n, 3)` for prime `n` and `1 <= r`, `6r < n`.
pub fn theorem2_upper(n: u64, r: u64) -> Result<Theorem2Evaluation> {
    if !is_prime(n) {
        return Err(Error::Precondition(format!("n = {n} is not prime")));
    }
    if r == 0 || 6 * r > n {
        return Err(Error::OutOfRange {
            what: "r",
            value: r,
            min: 1,
            max: n / 6,
        });
    }
    if n <= 6 * r {
        return Err(Error::Precondition("n - 6r must be positive".into()));
    }
    let mut eval = Theorem2Evaluation {
        n,
        r,
        term_floor: BigUint::zero(),
        term_ceil: BigUint::zero(),
        bound_sound: BigUint::zero(),
        bound_table_mode: BigUint::zero(),
    };
    let (lhs, rhs) = eval.cross_multiplied();
    let mut k = (&rhs / &lhs).sqrt();
    while (&k + 1u32) * (&k + 1u32) * &lhs <= rhs {
        k += 1u32;
    }
    while &k * &k * &lhs > rhs {
        k -= 1u32;
    }
    let ceil = if &k * &k * &lhs == rhs {
        k.clone()
    } else {
        &k + 1u32
    };
    let top = factorial(n - 1);
    eval.bound_sound = &top - &ceil;
    eval.bound_table_mode = &top - &k;
    eval.term_floor = k;
    eval.term_ceil = ceil;
    Ok(eval)
}

/// The admissible `r` maximising the subtracted term (smallest such `r` on ties).
pub fn theorem2_best(n: u64) -> Result<Theorem2Evaluation> {
    let mut best: Option<Theorem2Evaluation> = None;
    for r in 1..=n / 6 {
        if n <= 6 * r {
            break;
        }
        let e = theorem2_upper(n, r)?;
        if best.as_ref().is_none_or(|b| e.term_floor > b.term_floor) {
            best = Some(e);
        }
    }
    best.ok_or_else(|| Error::Precondition(format!("no admissible r for n = {n}")))
}

/// The earlier bound `P(n, 3) <= (n-1)! - ceil(n/3) + 2` for primes `n >= 11`.
pub fn prior_prime_upper3(n: u64) -> Result<BigUint> {
    if n < 11 || !is_prime(n) {
        return Err(Error::Precondition(format!(
            "needs a prime n >= 11, got {n}"
        )));
    }
    Ok(factorial(n - 1) + 2u32 - n.div_ceil(3))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CorollaryBranch {
    /// `n = 6r + 1`: closed form `1.61 (5r + 5)^((r-4)/2)`.
    SixRPlusOne,
    /// `n = 6r + 5`: closed form `5 · 1.61 (5r + 9)^((r-4)/2)`.
    SixRPlusFive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryCheck {
    pub r: u64,
    pub n: u64,
    pub branch: CorollaryBranch,
    #[serde(serialize_with = "ser_decimal")]
    pub term_floor: BigUint,
    /// `ceil` of the closed-form subtracted term.
    #[serde(serialize_with = "ser_decimal")]
    pub closed_form_ceil: BigUint,
    pub holds: bool,
}

/// Checks that the exact term at `(n, r)` is at least the closed-form term of the
/// corollary, so the corollary's bound follows from the exact one.
pub fn corollary1_check(r: u64, branch: CorollaryBranch) -> Result<CorollaryCheck> {
    if r < 6 {
        return Err(Error::OutOfRange {
            what: "r",
            value: r,
            min: 6,
            max: u64::MAX,
        });
    }
    let (n, mult, base) = match branch {
        CorollaryBranch::SixRPlusOne => (6 * r + 1, 1u32, 5 * r + 5),
        CorollaryBranch::SixRPlusFive => (6 * r + 5, 5u32, 5 * r + 9),
    };
    if !is_prime(n) {
        return Err(Error::Precondition(format!("n = {n} is not prime")));
    }
    let eval = theorem2_upper(n, r)?;
    // closed form = (161 · mult / 100) · base^((r-4)/2)
    let coef = BigUint::from(161u32 * mult);
    let hundred = BigUint::from(100u32);
    let base = BigUint::from(base);
    let closed_form_ceil = if r % 2 == 0 {
        let v = coef * base.pow(((r - 4) / 2) as u32);
        ceil_div(&v, &hundred)
    } else {
        // sqrt(coef² · base^(r-4)), rounded up, then divided by 100 rounding up.
        let sq = &coef * &coef * base.pow((r - 4) as u32);
        let s = sq.sqrt();
        let root_ceil = if &s * &s == sq { s } else { s + 1u32 };
        ceil_div(&root_ceil, &hundred)
    };
    Ok(CorollaryCheck {
        r,
        n,
        branch,
        holds: eval.term_floor >= closed_form_ceil,
        term_floor: eval.term_floor,
        closed_form_ceil,
    })
}

/// Source of a bound value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Provenance {
    Gv,
    SpherePacking,
    DoubleBall,
    Half,
    #[serde(rename = "JIANG_3")]
    Jiang3,
    #[serde(rename = "BARG_3")]
    Barg3,
    WzygLower,
    WzygFeasibility,
    Theorem2,
    ExactRange,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string"))
    }
}

fn ser_decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    #[serde(rename = "value_decimal", serialize_with = "ser_decimal")]
    pub value: BigUint,
    pub provenance: Provenance,
    /// Distance at which the formula was applied. Upper bounds for a smaller
    /// distance carry over because `P(n, d)` is non-increasing in `d`.
    pub at_d: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Rounding {
    /// `(n-1)! - ceil(t)`.
    #[default]
    Sound,
    /// `(n-1)! - floor(t)`.
    Table,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RadiusChoice {
    /// Maximise the subtracted term over all admissible `r`.
    #[default]
    Best,
    /// `r = floor(n/6)`.
    Floor,
    Fixed(u64),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BoundOptions {
    pub rounding: Rounding,
    pub radius: RadiusChoice,
}

impl BoundOptions {
    /// Reproduces the published table: `r = floor(n/6)` with the floor rounding.
    pub fn table_mode() -> Self {
        BoundOptions {
            rounding: Rounding::Table,
            radius: RadiusChoice::Floor,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: u64,
    pub d: u64,
    pub lower: Vec<BoundEntry>,
    pub upper: Vec<BoundEntry>,
    #[serde(serialize_with = "ser_decimal")]
    pub best_lower: BigUint,
    #[serde(serialize_with = "ser_decimal")]
    pub best_upper: BigUint,
    /// Present when the `P(n, 3)` radical bound was applied.
    pub theorem2: Option<Theorem2Evaluation>,
}

impl BoundReport {
    pub fn is_exact(&self) -> bool {
        self.best_lower == self.best_upper
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Shared per-`n` state for evaluating every distance.
struct Grid {
    n: u64,
    n_pairs: u64,
    fact: BigUint,
    balls: Vec<BigUint>,
    opts: BoundOptions,
}

impl Grid {
    fn new(n: u64, opts: BoundOptions) -> Self {
        let table = MahonianTable::new(n as usize);
        let mut balls = Vec::with_capacity(table.counts().len());
        let mut acc = BigUint::zero();
        for c in table.counts() {
            acc += c;
            balls.push(acc.clone());
        }
        Grid {
            n,
            n_pairs: pairs(n as usize),
            fact: factorial(n),
            balls,
            opts,
        }
    }

    fn exact_range(&self, d: u64) -> Option<BigUint> {
        let np = self.n_pairs;
        if d == 1 {
            Some(self.fact.clone())
        } else if d == 2 {
            Some(&self.fact / 2u32)
        } else if 3 * d > 2 * np {
            Some(BigUint::from(2u32))
        } else if self.n >= 6 && 5 * d > 3 * np {
            Some(BigUint::from(4u32))
        } else {
            None
        }
    }

    fn theorem2(&self) -> Option<Theorem2Evaluation> {
        let n = self.n;
        if !is_prime(n) || n < 7 {
            return None;
        }
        match self.opts.radius {
            RadiusChoice::Best => theorem2_best(n).ok(),
            RadiusChoice::Floor => theorem2_upper(n, n / 6).ok(),
            RadiusChoice::Fixed(r) => theorem2_upper(n, r).ok(),
        }
    }

    fn lower(&self, d: u64, prev_best_lower: Option<&BigUint>) -> Vec<BoundEntry> {
        let n = self.n;
        let mut out = Vec::new();
        let mut push = |value: BigUint, provenance| {
            out.push(BoundEntry {
                value,
                provenance,
                at_d: d,
            })
        };
        if let Some(v) = self.exact_range(d) {
            push(v, Provenance::ExactRange);
        }
        push(
            ceil_div(&self.fact, &self.balls[(d - 1) as usize]),
            Provenance::Gv,
        );
        if d == 3 {
            if let Ok(v) = jiang_lower3(n) {
                push(v, Provenance::Jiang3);
            }
            if let Ok(v) = barg_lower3(n) {
                push(v, Provenance::Barg3);
            }
        }
        if d % 2 == 1 && d >= 3 {
            if let Ok(v) = wzyg_lower(n, d) {
                push(v, Provenance::WzygLower);
            }
        }
        if d % 2 == 0 && d >= 4 {
            if let Ok(v) = wzyg_lower_even(n, d) {
                push(v, Provenance::WzygLower);
            }
        }
        if d % 2 == 0 {
            if let Some(prev) = prev_best_lower {
                push(ceil_div(prev, &BigUint::from(2u32)), Provenance::Half);
            }
        }
        out
    }

    fn upper(&self, d: u64, theorem2: Option<&Theorem2Evaluation>) -> Vec<BoundEntry> {
        let n = self.n;
        let mut out = Vec::new();
        let mut push = |value: BigUint, provenance| {
            out.push(BoundEntry {
                value,
                provenance,
                at_d: d,
            })
        };
        if let Some(v) = self.exact_range(d) {
            push(v, Provenance::ExactRange);
        }
        push(
            &self.fact / &self.balls[((d - 1) / 2) as usize],
            Provenance::SpherePacking,
        );
        if d % 2 == 0 && d >= 4 {
            if let Ok(v) = double_ball_upper(n, d) {
                push(v, Provenance::DoubleBall);
            }
        }
        if d >= 2 {
            if let Ok(Some(m)) = wzyg_max_size(n, d) {
                push(BigUint::from(m), Provenance::WzygFeasibility);
            }
        }
        if let Some(e) = theorem2 {
            push(e.bound(self.opts.rounding).clone(), Provenance::Theorem2);
        }
        out
    }
}

fn min_entry(entries: &[BoundEntry]) -> &BoundEntry {
    entries
        .iter()
        .min_by(|a, b| a.value.cmp(&b.value))
        .expect("at least one bound applies")
}

fn max_entry(entries: &[BoundEntry]) -> &BoundEntry {
    entries
        .iter()
        .max_by(|a, b| a.value.cmp(&b.value).then(b.at_d.cmp(&a.at_d)))
        .expect("at least one bound applies")
}

/// Reports for every `d` in `1..=max_d`, with default options.
pub fn bound_reports(n: u64, max_d: u64, opts: BoundOptions) -> Result<Vec<BoundReport>> {
    check_distance(n, max_d)?;
    let grid = Grid::new(n, opts);
    let mut reports: Vec<BoundReport> = Vec::with_capacity(max_d as usize);
    for d in 1..=max_d {
        let prev = reports.last();
        let lower = grid.lower(d, prev.map(|r| &r.best_lower));
        let theorem2 = if d == 3 { grid.theorem2() } else { None };
        let mut upper = grid.upper(d, theorem2.as_ref());
        if let Some(prev) = prev {
            let inherited = min_entry(&prev.upper).clone();
            if inherited.value < min_entry(&upper).value {
                upper.push(inherited);
            }
        }
        let best_lower = max_entry(&lower).value.clone();
        let best_upper = min_entry(&upper).value.clone();
        debug_assert!(best_lower <= best_upper, "n={n} d={d}");
        reports.push(BoundReport {
            n,
            d,
            lower,
            upper,
            best_lower,
            best_upper,
            theorem2,
        });
    }
    Ok(reports)
}

/// All applicable bounds on `P(n, d)` with provenance, using default options.
pub fn best_bounds(n: u64, d: u64) -> Result<BoundReport> {
    best_bounds_with(n, d, BoundOptions::default())
}

pub fn best_bounds_with(n: u64, d: u64, opts: BoundOptions) -> Result<BoundReport> {
    let mut all = bound_reports(n, d, opts)?;
    Ok(all.pop().expect("d >= 1"))
}

/// Renders `(n-1)! - k` compactly when `value` has that shape for a small `k`.
pub fn describe_near_factorial(value: &BigUint, m: u64) -> Option<String> {
    let f = factorial(m);
    if value > &f {
        return None;
    }
    let k = (&f - value).to_u64()?;
    Some(if k == 0 {
        format!("{m}!")
    } else {
        format!("{m}!-{k}")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn primes_and_prime_powers() {
        assert!(is_prime(37) && !is_prime(49) && !is_prime(1) && is_prime(2));
        assert!(is_prime_power(49) && is_prime_power(5) && is_prime_power(8));
        assert!(!is_prime_power(1) && !is_prime_power(6) && !is_prime_power(12));
    }

    #[test]
    fn gv_and_sphere_packing() {
        assert_eq!(gv_lower(6, 1).unwrap(), factorial(6));
        // T(5, ·) = 1, 4, 9, ...: B_K(2) = 14
        assert_eq!(gv_lower(5, 3).unwrap(), big(9));
        assert_eq!(gv_lower(4, 6).unwrap(), big(2));
        for n in 3..12 {
            assert_eq!(sphere_packing_upper(n, 3).unwrap(), factorial(n - 1));
            assert_eq!(sphere_packing_upper(n, 1).unwrap(), factorial(n));
        }
        // T(7, ·) = 1, 6, 20, ...: B_K(2) = 27
        assert_eq!(sphere_packing_upper(7, 5).unwrap(), big(186));
        assert!(gv_lower(4, 7).is_err());
    }

    #[test]
    fn double_ball_and_half() {
        assert_eq!(double_ball_upper(7, 4).unwrap(), big(420));
        assert_eq!(double_ball_upper(8, 4).unwrap(), big(2880));
        assert_eq!(double_ball_upper(6, 4).unwrap(), big(72));
        assert_eq!(double_ball_upper(7, 6).unwrap(), big(120));
        assert_eq!(double_ball_upper(8, 6).unwrap(), big(720));
        assert!(double_ball_upper(7, 5).is_err());
        assert_eq!(half_lower(7, 4, &big(588)).unwrap(), big(294));
        assert_eq!(half_lower(5, 2, &big(2)).unwrap(), big(1));
        for n in 4..12 {
            let h = half_lower(n, 4, &jiang_lower3(n).unwrap()).unwrap();
            assert_eq!(h, ceil_div(&factorial(n), &big(2 * (2 * n - 1))));
        }
    }

    #[test]
    fn distance_three_lower_bounds() {
        assert_eq!(jiang_lower3(8).unwrap(), big(2688));
        assert_eq!(jiang_lower3(4).unwrap(), big(4));
        assert_eq!(barg_lower3(7).unwrap(), big(420));
        assert!(barg_lower3(8).is_err());
    }

    #[test]
    fn wzyg_lower_values() {
        assert_eq!(wzyg_lower(7, 5).unwrap(), big(33));
        assert_eq!(wzyg_lower(9, 5).unwrap(), big(1274));
        for n in [5u64, 7, 9, 10] {
            let expected = ceil_div(&factorial(n), &big(3 * (n - 1)));
            assert_eq!(wzyg_lower(n, 3).unwrap(), expected);
        }
        assert!(wzyg_lower(8, 5).is_err());
        assert!(wzyg_lower(7, 4).is_err());
    }

    #[test]
    fn feasibility_test_values() {
        assert_eq!(wzyg_max_size(7, 12).unwrap(), Some(8));
        assert_eq!(wzyg_max_size(7, 11).unwrap(), Some(12));
        assert_eq!(wzyg_max_size(7, 3).unwrap(), None);
    }

    #[test]
    fn theorem2_rows() {
        let e = theorem2_upper(37, 6).unwrap();
        assert_eq!(e.term_floor, big(62));
        assert_eq!(e.bound_table_mode, factorial(36) - 62u32);
        assert_eq!(e.bound_sound, factorial(36) - 63u32);
        assert_eq!(theorem2_upper(43, 7).unwrap().term_floor, big(456));
        assert_eq!(theorem2_upper(61, 10).unwrap().term_floor, big(323371));
        assert!(theorem2_upper(39, 6).is_err());
        assert!(theorem2_upper(37, 7).is_err());
        assert!(theorem2_upper(37, 0).is_err());
    }

    #[test]
    fn theorem2_term_brackets_the_radical() {
        for n in [7u64, 13, 29, 37, 41, 53] {
            for r in 1..=n / 6 {
                let e = theorem2_upper(n, r).unwrap();
                let (lhs, rhs) = e.cross_multiplied();
                assert!(&e.term_floor * &e.term_floor * &lhs <= rhs);
                assert!((&e.term_floor + 1u32) * (&e.term_floor + 1u32) * &lhs > rhs);
                assert!(&e.term_ceil * &e.term_ceil * &lhs >= rhs);
                if !e.term_ceil.is_zero() {
                    assert!((&e.term_ceil - 1u32) * (&e.term_ceil - 1u32) * &lhs < rhs);
                }
            }
        }
    }

    #[test]
    fn corollary_checks() {
        let c = corollary1_check(6, CorollaryBranch::SixRPlusOne).unwrap();
        assert_eq!(
            (c.n, c.closed_form_ceil.clone(), c.holds),
            (37, big(57), true)
        );
        let c = corollary1_check(6, CorollaryBranch::SixRPlusFive).unwrap();
        assert_eq!(
            (c.n, c.closed_form_ceil.clone(), c.holds),
            (41, big(314), true)
        );
        // r = 7 has a half-integer exponent: 1.61 · 40^1.5 = 407.30...
        let c = corollary1_check(7, CorollaryBranch::SixRPlusOne).unwrap();
        assert_eq!(c.closed_form_ceil, big(408));
        assert!(corollary1_check(5, CorollaryBranch::SixRPlusOne).is_err());
        // 6·8 + 1 = 49 is not prime
        assert!(corollary1_check(8, CorollaryBranch::SixRPlusOne).is_err());
    }

    #[test]
    fn report_exact_ranges() {
        let r = best_bounds(9, 1).unwrap();
        assert!(r.is_exact());
        assert_eq!(r.best_upper, factorial(9));
        let r = best_bounds(6, 11).unwrap();
        assert!(r.is_exact());
        assert_eq!(r.best_upper, big(2));
        let r = best_bounds(14, 60).unwrap();
        assert!(r.is_exact());
        assert_eq!(r.best_upper, big(4));
    }

    #[test]
    fn report_json_shape() {
        let r = best_bounds_with(37, 3, BoundOptions::table_mode()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let want = (factorial(36) - 62u32).to_str_radix(10);
        assert!(v["upper"]
            .as_array()
            .unwrap()
            .iter()
            .any(|e| e["provenance"] == "THEOREM2" && e["value_decimal"] == want.as_str()));
        assert!(v["best_lower"].is_string());
        assert_eq!(Provenance::Jiang3.to_string(), "JIANG_3");
    }
}
