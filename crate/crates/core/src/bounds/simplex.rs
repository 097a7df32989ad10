//! Exact two-phase simplex (phase 1 only) over `BigRational`, Bland's rule.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// `coeffs · x  (rel)  rhs`.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub rel: Relation,
    pub rhs: BigRational,
}

/// Whether some `x >= 0` satisfies every constraint.
pub fn feasible(nvars: usize, constraints: &[Constraint]) -> bool {
    let m = constraints.len();
    if m == 0 {
        return true;
    }
    let slacks = constraints.iter().filter(|c| c.rel != Relation::Eq).count();
    // columns: original vars, slack/surplus vars, artificials, rhs
    let ncols = nvars + slacks + m;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    let mut basis = Vec::with_capacity(m);
    let mut slack_col = nvars;
    for (r, c) in constraints.iter().enumerate() {
        assert_eq!(c.coeffs.len(), nvars, "constraint width");
        let mut row = vec![BigRational::zero(); ncols + 1];
        row[..nvars].clone_from_slice(&c.coeffs);
        match c.rel {
            Relation::Le => {
                row[slack_col] = BigRational::one();
                slack_col += 1;
            }
            Relation::Ge => {
                row[slack_col] = -BigRational::one();
                slack_col += 1;
            }
            Relation::Eq => {}
        }
        row[ncols] = c.rhs.clone();
        if row[ncols].is_negative() {
            row.iter_mut().for_each(|x| *x = -x.clone());
        }
        row[nvars + slacks + r] = BigRational::one();
        basis.push(nvars + slacks + r);
        t.push(row);
    }
    // objective: minimise the artificial sum, written as reduced costs
    let mut obj = vec![BigRational::zero(); ncols + 1];
    for row in &t {
        for (k, x) in row.iter().enumerate() {
            if k < nvars + slacks || k == ncols {
                obj[k] -= x;
            }
        }
    }
    t.push(obj);
    loop {
        let Some(enter) = (0..ncols).find(|&k| t[m][k].is_negative()) else { break };
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..m {
            if t[r][enter].is_positive() {
                let ratio = &t[r][ncols] / &t[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else {
            unreachable!("phase-1 objective is bounded below by zero")
        };
        pivot(&mut t, pr, enter);
        basis[pr] = enter;
    }
    t[m][ncols].is_zero()
}

fn pivot(t: &mut [Vec<BigRational>], pr: usize, pc: usize) {
    let p = t[pr][pc].clone();
    t[pr].iter_mut().for_each(|x| *x /= &p);
    let pivot_row = t[pr].clone();
    for (r, row) in t.iter_mut().enumerate() {
        if r == pr || row[pc].is_zero() {
            continue;
        }
        let f = row[pc].clone();
        for (x, y) in row.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
}
