//! A small exact-rational primal simplex for feasibility-style problems:
//! maximize c.x subject to Ax <= b, x >= 0, with b >= 0 so the slack basis
//! is feasible from the start. Bland's rule guarantees termination.
//!
//! Floating point would misclassify near-degenerate lifts, so everything is
//! big-rational.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub struct Solution {
    pub objective: BigRational,
    pub values: Vec<BigRational>,
}

/// Maximize `c . x` s.t. `a x <= b`, `x >= 0`. Requires `b >= 0`.
/// Panics if the problem is unbounded (callers arrange boundedness).
pub fn maximize(a: &[Vec<i64>], b: &[i64], c: &[i64]) -> Solution {
    let m = a.len();
    let n = c.len();
    assert_eq!(b.len(), m);
    assert!(b.iter().all(|&v| v >= 0), "slack basis must be feasible");

    let rat = |v: i64| BigRational::from_integer(BigInt::from(v));
    // Tableau: m rows of [n structural | m slack | rhs], then objective row
    // holding z_j - c_j.
    let cols = n + m + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let mut row: Vec<BigRational> = Vec::with_capacity(cols);
        row.extend(a[i].iter().map(|&v| rat(v)));
        for j in 0..m {
            row.push(if i == j { BigRational::one() } else { BigRational::zero() });
        }
        row.push(rat(b[i]));
        t.push(row);
    }
    let mut obj: Vec<BigRational> = Vec::with_capacity(cols);
    obj.extend(c.iter().map(|&v| -rat(v)));
    obj.resize(cols, BigRational::zero());
    t.push(obj);

    let mut basis: Vec<usize> = (n..n + m).collect();
    loop {
        // Bland: entering variable = smallest index with negative reduced cost.
        let Some(enter) = (0..n + m).find(|&j| t[m][j].is_negative()) else {
            break;
        };
        // Ratio test; ties broken by smallest basis variable (Bland).
        let mut leave: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][cols - 1] / &t[i][enter];
                let better = match &best {
                    None => true,
                    Some(r) => {
                        ratio < *r || (ratio == *r && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let leave = leave.expect("LP must be bounded");
        // Pivot.
        let piv = t[leave][enter].clone();
        for v in t[leave].iter_mut() {
            *v /= &piv;
        }
        for i in 0..=m {
            if i == leave || t[i][enter].is_zero() {
                continue;
            }
            let factor = t[i][enter].clone();
            for j in 0..cols {
                let delta = &factor * &t[leave][j];
                t[i][j] -= delta;
            }
        }
        basis[leave] = enter;
    }

    let mut values = vec![BigRational::zero(); n];
    for i in 0..m {
        if basis[i] < n {
            values[basis[i]] = t[i][cols - 1].clone();
        }
    }
    Solution {
        objective: -t[m][cols - 1].clone(),
        values,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn solve(a: &[Vec<i64>], b: &[i64], c: &[i64]) -> (f64, Vec<f64>) {
        let s = maximize(a, b, c);
        (
            s.objective.to_f64().unwrap(),
            s.values.iter().map(|v| v.to_f64().unwrap()).collect(),
        )
    }

    #[test]
    fn simple_2d() {
        // max x + y s.t. x <= 2, y <= 3, x + y <= 4
        let (obj, xs) = solve(
            &[vec![1, 0], vec![0, 1], vec![1, 1]],
            &[2, 3, 4],
            &[1, 1],
        );
        assert_eq!(obj, 4.0);
        assert_eq!(xs[0] + xs[1], 4.0);
    }

    #[test]
    fn degenerate_vertex_terminates() {
        // Redundant constraints through one vertex; Bland must not cycle.
        let (obj, _) = solve(
            &[
                vec![1, 1],
                vec![1, 1],
                vec![2, 2],
                vec![1, 0],
            ],
            &[1, 1, 2, 1],
            &[3, 2],
        );
        assert_eq!(obj, 3.0);
    }

    #[test]
    fn zero_objective_at_origin() {
        // max eps s.t. eps <= 0 forces optimum 0.
        let (obj, _) = solve(&[vec![1]], &[0], &[1]);
        assert_eq!(obj, 0.0);
    }

    #[test]
    fn exact_fractions() {
        // max y s.t. 3y <= 1 -> y = 1/3 exactly.
        let s = maximize(&[vec![3]], &[1], &[1]);
        assert_eq!(s.objective, BigRational::new(1.into(), 3.into()));
    }
}
