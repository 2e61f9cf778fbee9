//! Exact simplex over an ordered field.
//!
//! The solver is generic over the scalar via num-traits; the crate
//! instantiates it at [`crate::Rat`] since every width threshold is an exact
//! rational. Problems here are tiny (tens of variables), so a dense
//! two-phase tableau with Bland's anti-cycling rule is both simple and
//! deterministic: identical inputs pivot identically.

use crate::error::{Error, Result};
use num_traits::{Num, Signed};
use std::fmt::Debug;

/// Scalar admissible for the exact simplex: an ordered field.
pub trait LpScalar: Num + Signed + Clone + Ord + Debug {}
impl<T: Num + Signed + Clone + Ord + Debug> LpScalar for T {}

/// min c·x  subject to  A x >= b,  x >= 0.
pub struct Program<T> {
    pub objective: Vec<T>,
    pub constraints: Vec<(Vec<T>, T)>,
}

pub struct Solution<T> {
    pub value: T,
    /// Basic optimal assignment for the structural variables.
    pub assignment: Vec<T>,
}

impl<T: LpScalar> Program<T> {
    pub fn new(objective: Vec<T>) -> Self {
        Program {
            objective,
            constraints: Vec::new(),
        }
    }

    pub fn add_ge(&mut self, coeffs: Vec<T>, rhs: T) {
        debug_assert_eq!(coeffs.len(), self.objective.len());
        self.constraints.push((coeffs, rhs));
    }

    /// Solves the program; errors on infeasibility or unboundedness.
    pub fn solve(&self) -> Result<Solution<T>> {
        let n = self.objective.len();
        let m = self.constraints.len();
        if m == 0 {
            return Ok(Solution {
                value: T::zero(),
                assignment: vec![T::zero(); n],
            });
        }
        // Columns: n structural, m surplus, m artificial. Rows get their rhs
        // non-negative by flipping; with A x >= b and b >= 0 no flip occurs in
        // our covers, but keep it general.
        let total = n + 2 * m;
        let mut rows: Vec<Vec<T>> = Vec::with_capacity(m);
        let mut rhs: Vec<T> = Vec::with_capacity(m);
        for (i, (coefs, b)) in self.constraints.iter().enumerate() {
            let mut row = vec![T::zero(); total];
            let flip = b < &T::zero();
            for (j, c) in coefs.iter().enumerate() {
                row[j] = if flip { -c.clone() } else { c.clone() };
            }
            // surplus: A x - s = b (sign flips with the row)
            row[n + i] = if flip { T::one() } else { -T::one() };
            row[n + m + i] = T::one();
            rows.push(row);
            rhs.push(if flip { -b.clone() } else { b.clone() });
        }
        let mut basis: Vec<usize> = (0..m).map(|i| n + m + i).collect();

        // Phase 1: minimize the sum of artificials.
        let mut phase1 = vec![T::zero(); total];
        for slot in phase1.iter_mut().skip(n + m) {
            *slot = T::one();
        }
        simplex(&mut rows, &mut rhs, &mut basis, &phase1, total)?;
        let p1: T = basis
            .iter()
            .enumerate()
            .filter(|(_, &j)| j >= n + m)
            .map(|(i, _)| rhs[i].clone())
            .fold(T::zero(), |a, b| a + b);
        if !p1.is_zero() {
            return Err(Error::Lp("infeasible program".into()));
        }
        // Drive artificials out of the basis. A row where that fails is
        // all-zero over the real columns (redundant constraint) and is
        // dropped, so no artificial can creep back to a positive level.
        for i in 0..m {
            if basis[i] >= n + m {
                if let Some(j) = (0..n + m).find(|&j| !rows[i][j].is_zero()) {
                    pivot(&mut rows, &mut rhs, &mut basis, i, j);
                }
            }
        }
        let mut i = 0;
        while i < basis.len() {
            if basis[i] >= n + m {
                debug_assert!(rhs[i].is_zero());
                rows.remove(i);
                rhs.remove(i);
                basis.remove(i);
            } else {
                i += 1;
            }
        }

        // Phase 2 on the structural objective, artificial columns frozen.
        let mut phase2 = vec![T::zero(); total];
        phase2[..n].clone_from_slice(&self.objective);
        simplex(&mut rows, &mut rhs, &mut basis, &phase2, n + m)?;

        let mut assignment = vec![T::zero(); n];
        for (i, &j) in basis.iter().enumerate() {
            if j < n {
                assignment[j] = rhs[i].clone();
            }
        }
        let value = assignment
            .iter()
            .zip(&self.objective)
            .map(|(x, c)| x.clone() * c.clone())
            .fold(T::zero(), |a, b| a + b);
        Ok(Solution { value, assignment })
    }
}

/// Runs the simplex to optimality for the given objective. `active` bounds
/// the columns allowed to enter the basis.
fn simplex<T: LpScalar>(
    rows: &mut [Vec<T>],
    rhs: &mut [T],
    basis: &mut [usize],
    objective: &[T],
    active: usize,
) -> Result<()> {
    loop {
        // Reduced costs: c_j - c_B B^-1 A_j; the tableau is kept in the
        // basis-reduced form, so compute z_j directly from the rows.
        let mut entering = None;
        for j in 0..active {
            if basis.contains(&j) {
                continue;
            }
            let mut red = objective[j].clone();
            for (i, &bj) in basis.iter().enumerate() {
                if !objective[bj].is_zero() && !rows[i][j].is_zero() {
                    red = red - objective[bj].clone() * rows[i][j].clone();
                }
            }
            if red < T::zero() {
                entering = Some(j); // Bland: lowest index
                break;
            }
        }
        let Some(j) = entering else {
            return Ok(());
        };
        // Ratio test; Bland ties by lowest basic variable index.
        let mut leaving: Option<(usize, T)> = None;
        for i in 0..rows.len() {
            if rows[i][j] > T::zero() {
                let ratio = rhs[i].clone() / rows[i][j].clone();
                let better = match &leaving {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
        }
        let Some((i, _)) = leaving else {
            return Err(Error::Lp("unbounded program".into()));
        };
        pivot(rows, rhs, basis, i, j);
    }
}

fn pivot<T: LpScalar>(rows: &mut [Vec<T>], rhs: &mut [T], basis: &mut [usize], r: usize, c: usize) {
    let p = rows[r][c].clone();
    for x in rows[r].iter_mut() {
        *x = x.clone() / p.clone();
    }
    rhs[r] = rhs[r].clone() / p;
    for i in 0..rows.len() {
        if i == r || rows[i][c].is_zero() {
            continue;
        }
        let f = rows[i][c].clone();
        for j in 0..rows[i].len() {
            if !rows[r][j].is_zero() {
                rows[i][j] = rows[i][j].clone() - f.clone() * rows[r][j].clone();
            }
        }
        rhs[i] = rhs[i].clone() - f * rhs[r].clone();
    }
    basis[r] = c;
}
