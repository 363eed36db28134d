use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{IntMatrix, LinalgError};
use crate::decimal;

/// Smith normal form `left * m * right = smith` with unimodular transforms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SnfResult {
    pub smith: IntMatrix,
    pub left: IntMatrix,
    pub right: IntMatrix,
    /// Nonzero diagonal entries of `smith`, each dividing the next.
    #[serde(serialize_with = "decimal::int_vec")]
    pub invariant_factors: Vec<BigInt>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Invariant factors greater than one (the torsion part of the cokernel).
    pub fn torsion_factors(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|s| *s > &BigInt::from(1))
            .cloned()
            .collect()
    }
}

/// Computes the Smith normal form of an integer matrix.
///
/// Row and column gcd reduction, always pivoting on an entry of minimal
/// nonzero absolute value in the remaining block. Every row operation is
/// mirrored on `left` and every column operation on `right`.
pub fn snf(m: &IntMatrix) -> Result<SnfResult, LinalgError> {
    if m.is_empty() {
        return Err(LinalgError::Empty);
    }
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let mut invariant_factors = Vec::new();

    for t in 0..rows.min(cols) {
        while let Some((pi, pj)) = min_pivot(&a, t) {
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let pivot = a[(t, t)].clone();
            let mut remainder = false;
            for i in t + 1..rows {
                let q = &a[(i, t)] / &pivot;
                if !q.is_zero() {
                    add_row_multiple(&mut a, i, t, &-&q);
                    add_row_multiple(&mut left, i, t, &-&q);
                }
                remainder |= !a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = &a[(t, j)] / &pivot;
                if !q.is_zero() {
                    add_col_multiple(&mut a, j, t, &-&q);
                    add_col_multiple(&mut right, j, t, &-&q);
                }
                remainder |= !a[(t, j)].is_zero();
            }
            if remainder {
                // a smaller remainder now sits in row or column t
                continue;
            }

            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[(i, j)] % &pivot).is_zero()));
            match offender {
                Some(i) => {
                    add_row_multiple(&mut a, t, i, &BigInt::from(1));
                    add_row_multiple(&mut left, t, i, &BigInt::from(1));
                }
                None => break,
            }
        }

        if a[(t, t)].is_zero() {
            // the remaining block is zero
            break;
        }
        if a[(t, t)].is_negative() {
            negate_row(&mut a, t);
            negate_row(&mut left, t);
        }
        invariant_factors.push(a[(t, t)].clone());
    }

    Ok(SnfResult {
        smith: a,
        left,
        right,
        invariant_factors,
    })
}

fn min_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.magnitude() < a[(bi, bj)].magnitude()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// row[target] += factor * row[source]
fn add_row_multiple(m: &mut IntMatrix, target: usize, source: usize, factor: &BigInt) {
    for j in 0..m.cols() {
        let delta = factor * &m[(source, j)];
        if !delta.is_zero() {
            *m.get_mut(target, j) += delta;
        }
    }
}

/// col[target] += factor * col[source]
fn add_col_multiple(m: &mut IntMatrix, target: usize, source: usize, factor: &BigInt) {
    for i in 0..m.rows() {
        let delta = factor * &m[(i, source)];
        if !delta.is_zero() {
            *m.get_mut(i, target) += delta;
        }
    }
}

fn negate_row(m: &mut IntMatrix, row: usize) {
    for j in 0..m.cols() {
        let x = m.get_mut(row, j);
        *x = -&*x;
    }
}
