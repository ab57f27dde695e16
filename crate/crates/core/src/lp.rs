//! Exact rational feasibility for small linear systems.
//!
//! Dense two-phase tableau reduced to phase one only: we need feasibility, not an
//! optimum. Bland's rule on both the entering and leaving choice, so no cycling.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// Is there an `x ∈ ℝ^dim` (free variables) satisfying every constraint?
pub fn is_feasible(dim: usize, constraints: &[Constraint]) -> bool {
    // x = p - q with p, q >= 0; one slack per inequality; one artificial per row.
    let m = constraints.len();
    if m == 0 {
        return true;
    }
    let slack_count = constraints.iter().filter(|c| c.relation != Relation::Eq).count();
    let structural = 2 * dim + slack_count;
    let cols = structural + m;
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut slack = 2 * dim;
    for (r, c) in constraints.iter().enumerate() {
        debug_assert_eq!(c.coeffs.len(), dim);
        let mut row = vec![Rational::zero(); cols + 1];
        for (j, a) in c.coeffs.iter().enumerate() {
            row[j] = a.clone();
            row[dim + j] = -a.clone();
        }
        match c.relation {
            Relation::Le => {
                row[slack] = Rational::one();
                slack += 1;
            }
            Relation::Ge => {
                row[slack] = -Rational::one();
                slack += 1;
            }
            Relation::Eq => {}
        }
        row[cols] = c.rhs.clone();
        if row[cols].is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
        }
        row[structural + r] = Rational::one();
        basis.push(structural + r);
        tab.push(row);
    }

    // Phase-one objective: minimize the sum of artificials. Reduced costs are
    // stored as `cost[j]` for the row form `min Σ a`, expressed in non-basics.
    let mut cost = vec![Rational::zero(); cols + 1];
    for row in &tab {
        for j in 0..structural {
            cost[j] -= &row[j];
        }
        cost[cols] -= &row[cols];
    }

    loop {
        let entering = (0..cols).find(|&j| cost[j].is_negative());
        let Some(e) = entering else { break };
        let mut leave: Option<(usize, Rational)> = None;
        for (r, row) in tab.iter().enumerate() {
            if row[e].is_positive() {
                let ratio = &row[cols] / &row[e];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so a pivot row always exists.
        let (r, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut tab, &mut cost, r, e);
        basis[r] = e;
    }
    cost[cols].is_zero()
}

fn pivot(tab: &mut [Vec<Rational>], cost: &mut [Rational], r: usize, e: usize) {
    let p = tab[r][e].clone();
    for v in tab[r].iter_mut() {
        *v /= &p;
    }
    let pivot_row = tab[r].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i != r && !row[e].is_zero() {
            let f = row[e].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
    }
    if !cost[e].is_zero() {
        let f = cost[e].clone();
        for (v, pv) in cost.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn c(coeffs: &[i64], relation: Relation, rhs: i64) -> Constraint {
        Constraint { coeffs: coeffs.iter().map(|&v| q(v)).collect(), relation, rhs: q(rhs) }
    }

    #[test]
    fn simple_feasible_and_infeasible() {
        assert!(is_feasible(1, &[c(&[1], Relation::Ge, 1), c(&[1], Relation::Le, 2)]));
        assert!(!is_feasible(1, &[c(&[1], Relation::Ge, 3), c(&[1], Relation::Le, 2)]));
        assert!(is_feasible(2, &[c(&[1, 1], Relation::Eq, 0), c(&[1, -1], Relation::Ge, 4)]));
        assert!(!is_feasible(2, &[c(&[1, 1], Relation::Eq, 0), c(&[1, 1], Relation::Ge, 1)]));
    }

    #[test]
    fn free_variables_may_go_negative() {
        assert!(is_feasible(1, &[c(&[1], Relation::Le, -5)]));
        assert!(is_feasible(2, &[c(&[2, 0], Relation::Eq, -3), c(&[0, -1], Relation::Ge, 7)]));
    }

    #[test]
    fn degenerate_system_terminates() {
        // Many redundant constraints through the origin.
        let mut cs = alloc::vec::Vec::new();
        for a in -2..=2 {
            for b in -2..=2 {
                cs.push(c(&[a, b], Relation::Le, 0));
            }
        }
        assert!(is_feasible(2, &cs));
        cs.push(c(&[1, 0], Relation::Ge, 1));
        assert!(!is_feasible(2, &cs));
    }
}
