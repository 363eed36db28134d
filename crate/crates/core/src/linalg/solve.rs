use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{snf, IntMatrix, LinalgError};

/// Outcome of [`solve_integer_system`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemSolution {
    Solved(Vec<BigInt>),
    Unsolvable(Inconsistency),
}

impl SystemSolution {
    pub fn solution(&self) -> Option<&[BigInt]> {
        match self {
            SystemSolution::Solved(x) => Some(x),
            SystemSolution::Unsolvable(_) => None,
        }
    }
}

/// Certificate that `A x = b` has no integer solution, read off the Smith
/// form `U A V = D` and the transformed target `U b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inconsistency {
    /// `σ_row` does not divide `(U b)_row`.
    NotDivisible {
        row: usize,
        factor: BigInt,
        target: BigInt,
    },
    /// `D` has a zero row here but `(U b)_row ≠ 0`.
    ZeroRow { row: usize, target: BigInt },
}

/// Finds an integer solution of `a * x = b`, if one exists.
pub fn solve_integer_system(a: &IntMatrix, b: &[BigInt]) -> Result<SystemSolution, LinalgError> {
    if a.rows() != b.len() {
        return Err(LinalgError::DimensionMismatch(format!(
            "{} equations but right-hand side of length {}",
            a.rows(),
            b.len()
        )));
    }
    if a.is_empty() {
        // no unknowns or no equations: only the zero combination is available
        return Ok(match b.iter().position(|x| !x.is_zero()) {
            Some(row) => SystemSolution::Unsolvable(Inconsistency::ZeroRow {
                row,
                target: b[row].clone(),
            }),
            None => SystemSolution::Solved(vec![BigInt::zero(); a.cols()]),
        });
    }

    let form = snf(a)?;
    let target = form.left.mul_vec(b)?;
    let mut y = vec![BigInt::zero(); a.cols()];
    for (row, sigma) in form.invariant_factors.iter().enumerate() {
        let (q, r) = target[row].div_rem(sigma);
        if !r.is_zero() {
            return Ok(SystemSolution::Unsolvable(Inconsistency::NotDivisible {
                row,
                factor: sigma.clone(),
                target: target[row].clone(),
            }));
        }
        y[row] = q;
    }
    if let Some(row) = (form.rank()..a.rows()).find(|&i| !target[i].is_zero()) {
        return Ok(SystemSolution::Unsolvable(Inconsistency::ZeroRow {
            row,
            target: target[row].clone(),
        }));
    }
    let x = form.right.mul_vec(&y)?;
    assert_eq!(a.mul_vec(&x)?, b, "integer solution failed substitution");
    Ok(SystemSolution::Solved(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn identity_system() {
        let sol = solve_integer_system(&IntMatrix::identity(2), &ints(&[5, -1])).unwrap();
        assert_eq!(sol, SystemSolution::Solved(ints(&[5, -1])));
    }

    #[test]
    fn parity_obstruction() {
        let a = IntMatrix::from_i64_rows(&[&[2]]);
        let sol = solve_integer_system(&a, &ints(&[3])).unwrap();
        assert!(matches!(
            sol,
            SystemSolution::Unsolvable(Inconsistency::NotDivisible { .. })
        ));
    }

    #[test]
    fn bezout_row() {
        let a = IntMatrix::from_i64_rows(&[&[2, 3]]);
        let x = solve_integer_system(&a, &ints(&[1])).unwrap();
        let x = x.solution().unwrap();
        assert_eq!(&x[0] * 2 + &x[1] * 3, BigInt::from(1));
    }

    #[test]
    fn overdetermined_inconsistent() {
        let a = IntMatrix::from_i64_rows(&[&[1], &[1]]);
        let sol = solve_integer_system(&a, &ints(&[1, 2])).unwrap();
        assert!(matches!(
            sol,
            SystemSolution::Unsolvable(Inconsistency::ZeroRow { .. })
        ));
    }

    #[test]
    fn dimension_mismatch() {
        let a = IntMatrix::identity(2);
        assert!(matches!(
            solve_integer_system(&a, &ints(&[1])),
            Err(LinalgError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn no_unknowns() {
        let a = IntMatrix::zeros(2, 0);
        assert_eq!(
            solve_integer_system(&a, &ints(&[0, 0])).unwrap(),
            SystemSolution::Solved(vec![])
        );
        assert!(solve_integer_system(&a, &ints(&[0, 1]))
            .unwrap()
            .solution()
            .is_none());
    }
}
