//! Dense tableau simplex over exact rationals for `max c·x` subject to
//! `A x <= b`, `x >= 0`, `b >= 0`. Bland's rule prevents cycling.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub value: BigRational,
    pub x: Vec<BigRational>,
    pub pivots: usize,
}

pub fn maximize(
    c: &[BigRational],
    a: &[Vec<BigRational>],
    b: &[BigRational],
) -> Result<LpSolution> {
    let m = a.len();
    let n = c.len();
    if b.len() != m || a.iter().any(|row| row.len() != n) {
        return Err(Error::Precondition("inconsistent LP dimensions".into()));
    }
    if b.iter().any(Signed::is_negative) {
        return Err(Error::Precondition(
            "right-hand side must be non-negative".into(),
        ));
    }
    let width = n + m + 1;
    // Rows 0..m are constraints with slack columns n..n+m; row m is the objective
    // stored as -c so that optimality means no negative entries.
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let mut row = a[i].clone();
        row.extend((0..m).map(|j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        }));
        row.push(b[i].clone());
        t.push(row);
    }
    let mut obj: Vec<BigRational> = c.iter().map(|v| -v).collect();
    obj.resize(width, BigRational::zero());
    t.push(obj);
    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut pivots = 0;
    while let Some(col) = (0..n + m).find(|&j| t[m][j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][col].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][col];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((row, _)) = leave else {
            return Err(Error::Precondition("LP is unbounded".into()));
        };
        let p = t[row][col].clone();
        for v in t[row].iter_mut() {
            *v /= &p;
        }
        let pivot_row = t[row].clone();
        for (i, r) in t.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for (v, pv) in r.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        basis[row] = col;
        pivots += 1;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][width - 1].clone();
        }
    }
    Ok(LpSolution {
        value: t[m][width - 1].clone(),
        x,
        pivots,
    })
}

pub fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_instance() {
        // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18 → 36 at (2, 6)
        let c = vec![rational(3), rational(5)];
        let a = vec![
            vec![rational(1), rational(0)],
            vec![rational(0), rational(2)],
            vec![rational(3), rational(2)],
        ];
        let b = vec![rational(4), rational(12), rational(18)];
        let s = maximize(&c, &a, &b).unwrap();
        assert_eq!(s.value, rational(36));
        assert_eq!(s.x, vec![rational(2), rational(6)]);
    }

    #[test]
    fn fractional_optimum_and_unbounded() {
        // max x + y s.t. 2x + y <= 1, x + 2y <= 1 → 2/3
        let c = vec![rational(1), rational(1)];
        let a = vec![
            vec![rational(2), rational(1)],
            vec![rational(1), rational(2)],
        ];
        let s = maximize(&c, &a, &[rational(1), rational(1)]).unwrap();
        assert_eq!(s.value, BigRational::new(2.into(), 3.into()));
        let a = vec![vec![rational(1), rational(-1)]];
        assert!(maximize(&c, &a, &[rational(1)]).is_err());
    }
}
