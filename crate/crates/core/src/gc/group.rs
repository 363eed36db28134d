use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::action::{companion_action, CompanionAction};
use super::element::unit_vector;
use super::{GcElement, GcError, Signature};
use crate::decimal;
use crate::linalg::{snf, IntMatrix};
use crate::word::{Generator, GeneratorWord};

/// A Gc-group together with its companion action.
///
/// Elements multiply as `(v₁, k₁)(v₂, k₂) = (v₁·A^k₂ + v₂, k₁ + k₂)`, which
/// makes `a^-i b a^i` evaluate to `(e₁·A^i, 0)`.
#[derive(Clone, Debug)]
pub struct GcGroup {
    signature: Signature,
    action: CompanionAction,
}

/// `Z^free_rank ⊕ Z/σ₁ ⊕ …` with every listed `σ > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    pub free_rank: usize,
    #[serde(serialize_with = "decimal::int_vec")]
    pub torsion_factors: Vec<BigInt>,
}

impl GcGroup {
    pub fn new(signature: Signature) -> Self {
        let action = companion_action(&signature);
        Self { signature, action }
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn action(&self) -> &CompanionAction {
        &self.action
    }

    pub fn s(&self) -> usize {
        self.signature.s()
    }

    pub fn identity(&self) -> GcElement {
        GcElement::identity(self.s())
    }

    /// `b_i = a^-i b a^i`, i.e. `e₁·A^i`.
    pub fn conjugate_b(&self, i: i64) -> Vec<BigRational> {
        self.action
            .apply(&unit_vector(self.s(), 0), &BigInt::from(i))
    }

    fn check(&self, g: &GcElement) -> Result<(), GcError> {
        if g.dim() != self.s() {
            return Err(GcError::SignatureMismatch {
                expected: self.s(),
                found: g.dim(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, g: &GcElement, h: &GcElement) -> Result<GcElement, GcError> {
        self.check(g)?;
        self.check(h)?;
        let moved = self.action.apply(g.translation(), h.shift());
        let translation = moved
            .into_iter()
            .zip(h.translation())
            .map(|(x, y)| x + y)
            .collect();
        Ok(GcElement::new(translation, g.shift() + h.shift()))
    }

    pub fn inv(&self, g: &GcElement) -> Result<GcElement, GcError> {
        self.check(g)?;
        let back = -g.shift();
        let translation = self
            .action
            .apply(g.translation(), &back)
            .into_iter()
            .map(|x| -x)
            .collect();
        Ok(GcElement::new(translation, back))
    }

    pub fn pow(&self, g: &GcElement, n: u32) -> Result<GcElement, GcError> {
        self.check(g)?;
        let mut result = self.identity();
        let mut base = g.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = self.mul(&result, &base)?;
            }
            base = self.mul(&base, &base)?;
            n >>= 1;
        }
        Ok(result)
    }

    /// Image of a word under `a ↦ (0, 1)`, `b ↦ (e₁, 0)`.
    pub fn eval(&self, word: &GeneratorWord) -> GcElement {
        let s = self.s();
        let mut translation = vec![BigRational::zero(); s];
        let mut shift = BigInt::zero();
        for (g, e) in word.letters() {
            match g {
                Generator::A => {
                    translation = self.action.apply(&translation, e);
                    shift += e;
                }
                Generator::B => translation[0] += BigRational::from_integer(e.clone()),
            }
        }
        GcElement::new(translation, shift)
    }

    /// Solves the word problem.
    pub fn is_identity(&self, word: &GeneratorWord) -> bool {
        self.eval(word).is_identity()
    }

    /// Checks that the images of `a` and `b` satisfy the defining relations:
    /// `Σ c_i e₁A^i = 0`, the relator word evaluates to the identity, and
    /// `[b, b_i]` is trivial for `|i| ≤ s`.
    pub fn relator_check(&self) -> bool {
        let s = self.s();
        let linear = self.signature.coeffs().iter().enumerate().fold(
            vec![BigRational::zero(); s],
            |acc, (i, c)| {
                let bi = self.conjugate_b(i as i64);
                acc.into_iter()
                    .zip(bi)
                    .map(|(x, y)| x + y * BigRational::from_integer(c.clone()))
                    .collect()
            },
        );
        let bound = s as i64;
        linear.iter().all(Zero::is_zero)
            && self.is_identity(&self.signature.relator_word())
            && (-bound..=bound).all(|i| self.is_identity(&Signature::commutator_relator(i)))
    }

    /// Whether the group is not virtually abelian, i.e. the companion
    /// action has infinite order.
    pub fn is_proper(&self) -> bool {
        !self.action.has_finite_order()
    }

    /// Abelianization from the relation matrix on the generators `(b, a)`.
    ///
    /// All `b_i` become equal, so the defining relator contributes the row
    /// `(Σ c_i, 0)`; the commutators contribute zero rows.
    pub fn abelianization(&self) -> Abelianization {
        let relations =
            IntMatrix::from_rows(vec![vec![self.signature.coeff_sum(), BigInt::zero()]])
                .expect("1x2 matrix");
        let form = snf(&relations).expect("nonempty matrix");
        Abelianization {
            free_rank: 2 - form.rank(),
            torsion_factors: form
                .invariant_factors
                .into_iter()
                .filter(|s| !s.is_one())
                .collect(),
        }
    }
}
