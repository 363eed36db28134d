use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::GcError;
use crate::linalg::IntMatrix;
use crate::word::{Generator, GeneratorWord};

/// Coefficient vector `c = (c_0, …, c_s)` of a Gc-group.
///
/// Valid signatures have `s ≥ 1`, `c_0 ≠ 0`, `c_s ≠ 0` and coprime entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    coeffs: Vec<BigInt>,
}

impl Signature {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self, GcError> {
        if coeffs.len() < 2 {
            return Err(GcError::InvalidSignature(format!(
                "need at least two coefficients, got {}",
                coeffs.len()
            )));
        }
        if coeffs[0].is_zero() || coeffs[coeffs.len() - 1].is_zero() {
            return Err(GcError::InvalidSignature(
                "first and last coefficients must be nonzero".into(),
            ));
        }
        let g = coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if !g.is_one() {
            return Err(GcError::InvalidSignature(format!(
                "coefficients share the factor {g}"
            )));
        }
        Ok(Self { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self, GcError> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Length of the relation, i.e. the dimension of the ambient `Q^s`.
    pub fn s(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn negated(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// The defining relator `b_0^c_0 b_1^c_1 ⋯ b_s^c_s` with `b_i = a^-i b a^i`.
    pub fn relator_word(&self) -> GeneratorWord {
        self.coeffs
            .iter()
            .enumerate()
            .fold(GeneratorWord::empty(), |w, (i, c)| {
                w.concat(&GeneratorWord::conjugate_b(i, c.clone()))
            })
    }

    /// The commutator relator `[b, b_i]`.
    pub fn commutator_relator(i: i64) -> GeneratorWord {
        GeneratorWord::commutator(
            &GeneratorWord::letter(Generator::B, 1),
            &GeneratorWord::conjugate_b(i, 1),
        )
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Signature {
    type Err = GcError;

    /// Comma-separated integers, e.g. `2,-1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let coeffs = s
            .split(',')
            .map(|part| {
                part.trim().parse::<BigInt>().map_err(|_| {
                    GcError::InvalidSignature(format!("not an integer: {:?}", part.trim()))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(coeffs)
    }
}

/// The `m × (m + s)` relation matrix whose row `i` holds `c` starting at column `i`.
pub fn band_matrix(c: &Signature, m: usize) -> Result<IntMatrix, GcError> {
    if m == 0 {
        return Err(GcError::Argument(
            "band matrix needs at least one row".into(),
        ));
    }
    let s = c.s();
    let mut rows = vec![vec![BigInt::zero(); m + s]; m];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i..=i + s].clone_from_slice(c.coeffs());
    }
    Ok(IntMatrix::from_rows(rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Signature::from_i64(&[2, -1]).is_ok());
        assert!(Signature::from_i64(&[3]).is_err());
        assert!(Signature::from_i64(&[]).is_err());
        assert!(Signature::from_i64(&[0, 1]).is_err());
        assert!(Signature::from_i64(&[1, 0]).is_err());
        assert!(Signature::from_i64(&[2, 4, 6]).is_err());
        assert!(Signature::from_i64(&[2, 0, 3]).is_ok());
    }

    #[test]
    fn text_form() {
        let c: Signature = "2, -1".parse().unwrap();
        assert_eq!(c, Signature::from_i64(&[2, -1]).unwrap());
        assert_eq!(c.to_string(), "2,-1");
        assert!("2,x".parse::<Signature>().is_err());
        assert!("".parse::<Signature>().is_err());
    }

    #[test]
    fn band_displayed_form() {
        let c = Signature::from_i64(&[2, 3]).unwrap();
        assert_eq!(
            band_matrix(&c, 2).unwrap(),
            IntMatrix::from_i64_rows(&[&[2, 3, 0], &[0, 2, 3]])
        );
    }

    #[test]
    fn band_single_row_is_signature() {
        let c = Signature::from_i64(&[1, 0, 5]).unwrap();
        assert_eq!(
            band_matrix(&c, 1).unwrap(),
            IntMatrix::from_i64_rows(&[&[1, 0, 5]])
        );
    }

    #[test]
    fn band_dimensions_and_zero_rows() {
        let c = Signature::from_i64(&[1, -2, 0, 7]).unwrap();
        for m in 1..6 {
            let b = band_matrix(&c, m).unwrap();
            assert_eq!((b.rows(), b.cols()), (m, m + 3));
        }
        assert!(matches!(band_matrix(&c, 0), Err(GcError::Argument(_))));
    }

    #[test]
    fn relator_word_shape() {
        let c = Signature::from_i64(&[2, -1]).unwrap();
        assert_eq!(c.relator_word().to_string(), "b^2 a^-1 b^-1 a");
    }
}
