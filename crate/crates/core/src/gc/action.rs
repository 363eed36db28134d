use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Signature;
use crate::linalg::RatMatrix;

/// Conjugation by the stable letter on `Q^s`, acting on row vectors.
///
/// Row `i < s - 1` is the basis vector `e_{i+1}`; the last row is
/// `(-c_0/c_s, …, -c_{s-1}/c_s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompanionAction {
    matrix: RatMatrix,
    inverse: RatMatrix,
}

impl CompanionAction {
    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn inverse(&self) -> &RatMatrix {
        &self.inverse
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `v · A^k`.
    pub fn apply(&self, v: &[BigRational], k: &BigInt) -> Vec<BigRational> {
        if k.is_zero() {
            return v.to_vec();
        }
        let step = if k.sign() == num_bigint::Sign::Minus {
            &self.inverse
        } else {
            &self.matrix
        };
        match u32::try_from(k.magnitude()) {
            Ok(n) if n <= 32 => (0..n).fold(v.to_vec(), |acc, _| {
                step.vec_mul(&acc).expect("vector length matches action")
            }),
            _ => {
                let power = self.matrix.pow(k).expect("companion matrix is invertible");
                power.vec_mul(v).expect("vector length matches action")
            }
        }
    }

    /// Whether `A` has finite multiplicative order.
    ///
    /// A finite-order rational `s × s` matrix has eigenvalues that are roots
    /// of unity of orders `d` with `φ(d) ≤ s`, so the test is `A^K = I` for
    /// `K = lcm{d : φ(d) ≤ s}`.
    pub fn has_finite_order(&self) -> bool {
        let k = finite_order_exponent(self.dim());
        self.matrix.pow(&k).expect("square matrix").is_identity()
    }
}

pub fn companion_action(c: &Signature) -> CompanionAction {
    let s = c.s();
    let top = &c.coeffs()[s];
    let mut rows = vec![vec![BigRational::zero(); s]; s];
    for (i, row) in rows.iter_mut().enumerate().take(s - 1) {
        row[i + 1] = BigRational::one();
    }
    for (j, cj) in c.coeffs()[..s].iter().enumerate() {
        rows[s - 1][j] = BigRational::new(-cj, top.clone());
    }
    let matrix = RatMatrix::from_rows(rows).expect("square by construction");
    // det A = ±c_0/c_s ≠ 0
    let inverse = matrix
        .inverse()
        .expect("companion matrix of a valid signature is invertible");
    CompanionAction { matrix, inverse }
}

/// `lcm{d ≥ 1 : φ(d) ≤ s}`, the exponent killing every finite-order
/// element of `GL(s, Q)`.
pub fn finite_order_exponent(s: usize) -> BigInt {
    // φ(d) ≥ sqrt(d/2), so φ(d) ≤ s forces d ≤ 2s²
    let bound = 2 * s * s + 2;
    (1..=bound)
        .filter(|&d| totient(d) <= s)
        .fold(BigInt::one(), |acc, d| acc.lcm(&BigInt::from(d)))
}

fn totient(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntMatrix;

    fn action(c: &[i64]) -> CompanionAction {
        companion_action(&Signature::from_i64(c).unwrap())
    }

    #[test]
    fn small_examples() {
        assert_eq!(
            action(&[2, -1]).matrix(),
            &RatMatrix::from_i64_rows(&[&[2]])
        );
        assert_eq!(
            action(&[1, 1]).matrix(),
            &RatMatrix::from_i64_rows(&[&[-1]])
        );
        assert_eq!(
            action(&[1, 1, 1]).matrix(),
            &RatMatrix::from_i64_rows(&[&[0, 1], &[-1, -1]])
        );
        assert_eq!(
            action(&[3, 0, 2]).matrix()[(1, 0)],
            BigRational::new((-3).into(), 2.into())
        );
    }

    #[test]
    fn characteristic_polynomial() {
        // det(c_s x I - c_s A) = c_s^(s-1) f(x), checked at several points
        for c in [
            vec![2, -1],
            vec![1, 3, 1],
            vec![4, -2, 0, 3],
            vec![-1, 5, 2, 2, 7],
        ] {
            let sig = Signature::from_i64(&c).unwrap();
            let s = sig.s();
            let cs = c[s];
            let a = companion_action(&sig);
            for x in -3i64..=3 {
                let rows: Vec<Vec<BigInt>> = (0..s)
                    .map(|i| {
                        (0..s)
                            .map(|j| {
                                let diag = if i == j {
                                    BigRational::from_integer((cs * x).into())
                                } else {
                                    BigRational::zero()
                                };
                                let entry = diag
                                    - a.matrix()[(i, j)].clone()
                                        * BigRational::from_integer(cs.into());
                                assert!(entry.is_integer());
                                entry.to_integer()
                            })
                            .collect()
                    })
                    .collect();
                let det = IntMatrix::from_rows(rows).unwrap().determinant().unwrap();
                let f: i64 = c.iter().rev().fold(0, |acc, ci| acc * x + ci);
                assert_eq!(det, BigInt::from(cs.pow(s as u32 - 1) * f), "c={c:?} x={x}");
            }
        }
    }

    #[test]
    fn exponents() {
        assert_eq!(finite_order_exponent(1), BigInt::from(2));
        assert_eq!(finite_order_exponent(2), BigInt::from(12));
        assert_eq!(finite_order_exponent(4), BigInt::from(120));
        assert_eq!(totient(12), 4);
        assert_eq!(totient(1), 1);
    }

    #[test]
    fn apply_large_shift_matches_iteration() {
        let a = action(&[2, 1, -3]);
        let v = vec![BigRational::one(), BigRational::new(1.into(), 3.into())];
        let big = a.apply(&v, &BigInt::from(40));
        let stepwise = a.apply(&a.apply(&v, &BigInt::from(20)), &BigInt::from(20));
        assert_eq!(big, stepwise);
        assert_eq!(a.apply(&big, &BigInt::from(-40)), v);
    }

    #[test]
    fn finite_order_detection() {
        assert!(!action(&[2, -1]).has_finite_order());
        assert!(action(&[1, 1]).has_finite_order());
        assert!(action(&[1, 1, 1]).has_finite_order());
        assert!(!action(&[1, 3, 1]).has_finite_order());
        // x^2 + 1: order 4
        assert!(action(&[1, 0, 1]).has_finite_order());
        // x^4 - x^2 + 1 = Φ_12
        assert!(action(&[1, 0, -1, 0, 1]).has_finite_order());
        // (x - 1)^2: unipotent, infinite order
        assert!(!action(&[1, -2, 1]).has_finite_order());
    }
}
