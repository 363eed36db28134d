use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::decimal;

/// An element `(v, k)` of `Q^s ⋊ Z`: the stable letter to the power `k`
/// followed by the translation `v`.
///
/// JSON form: `{"shift": "k", "translation": ["p/q", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GcElement {
    #[serde(serialize_with = "decimal::int", deserialize_with = "decimal::de_int")]
    shift: BigInt,
    #[serde(
        serialize_with = "decimal::rat_vec",
        deserialize_with = "decimal::de_rat_vec"
    )]
    translation: Vec<BigRational>,
}

impl GcElement {
    pub fn new(translation: Vec<BigRational>, shift: BigInt) -> Self {
        Self { shift, translation }
    }

    pub fn identity(s: usize) -> Self {
        Self::new(vec![BigRational::zero(); s], BigInt::zero())
    }

    /// Image of `a`: zero translation, shift one.
    pub fn stable_letter(s: usize) -> Self {
        Self::new(vec![BigRational::zero(); s], BigInt::one())
    }

    /// Image of `b`: the first basis vector.
    pub fn base_generator(s: usize) -> Self {
        Self::translation_only(unit_vector(s, 0))
    }

    pub fn translation_only(translation: Vec<BigRational>) -> Self {
        Self::new(translation, BigInt::zero())
    }

    pub fn from_i64(translation: &[i64], shift: i64) -> Self {
        Self::new(
            translation
                .iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
            shift.into(),
        )
    }

    pub fn translation(&self) -> &[BigRational] {
        &self.translation
    }

    pub fn shift(&self) -> &BigInt {
        &self.shift
    }

    pub fn dim(&self) -> usize {
        self.translation.len()
    }

    pub fn is_identity(&self) -> bool {
        self.shift.is_zero() && self.translation.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for GcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.translation.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "; shift {})", self.shift)
    }
}

pub(crate) fn unit_vector(s: usize, i: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); s];
    v[i] = BigRational::one();
    v
}
