//! The wreath products `Z ≀ Z` and `C_n ≀ Z`.
//!
//! An element is a finitely supported function `Z → Z` (or `Z → Z/n`)
//! together with a shift. Generators: `a = (0, 1)` and `b = (δ₀, 0)`.
//! Multiplication is
//!
//! ```text
//! (f₁, t₁)(f₂, t₂) = (f₁ + f₂(· + t₁), t₁ + t₂)
//! ```
//!
//! so the value of `f₂` at position `p` lands at `p - t₁`, and the
//! conjugate `a^-i b a^i` is supported at `{i}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decimal;
use crate::word::{Generator, GeneratorWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WreathError {
    #[error("modulus mismatch: {0:?} vs {1:?}")]
    ModulusMismatch(Option<u64>, Option<u64>),
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
}

/// Element of `Z ≀ Z` (`modulus = None`) or `C_n ≀ Z` (`modulus = Some(n)`).
///
/// The support map never stores zero, and with a modulus every stored value
/// lies in `1..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WreathFile")]
pub struct WreathElement {
    modulus: Option<u64>,
    #[serde(serialize_with = "decimal::int")]
    shift: BigInt,
    #[serde(serialize_with = "decimal::int_map")]
    support: BTreeMap<BigInt, BigInt>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WreathFile {
    modulus: Option<u64>,
    #[serde(deserialize_with = "decimal::de_int")]
    shift: BigInt,
    #[serde(deserialize_with = "decimal::de_int_map")]
    support: BTreeMap<BigInt, BigInt>,
}

impl TryFrom<WreathFile> for WreathElement {
    type Error = WreathError;

    fn try_from(file: WreathFile) -> Result<Self, Self::Error> {
        Self::new(file.support, file.shift, file.modulus)
    }
}

fn check_modulus(modulus: Option<u64>) -> Result<(), WreathError> {
    match modulus {
        Some(n) if n < 2 => Err(WreathError::InvalidModulus(n)),
        _ => Ok(()),
    }
}

impl WreathElement {
    /// Builds an element, reducing values and dropping zeros.
    pub fn new(
        support: BTreeMap<BigInt, BigInt>,
        shift: BigInt,
        modulus: Option<u64>,
    ) -> Result<Self, WreathError> {
        check_modulus(modulus)?;
        let mut g = Self {
            modulus,
            shift,
            support: BTreeMap::new(),
        };
        for (pos, val) in support {
            g.add_at(pos, val);
        }
        Ok(g)
    }

    pub fn identity(modulus: Option<u64>) -> Result<Self, WreathError> {
        Self::new(BTreeMap::new(), BigInt::zero(), modulus)
    }

    pub fn generator(g: Generator, modulus: Option<u64>) -> Result<Self, WreathError> {
        let mut e = Self::identity(modulus)?;
        match g {
            Generator::A => e.shift = BigInt::one(),
            Generator::B => e.add_at(BigInt::zero(), BigInt::one()),
        }
        Ok(e)
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn shift(&self) -> &BigInt {
        &self.shift
    }

    pub fn support(&self) -> &BTreeMap<BigInt, BigInt> {
        &self.support
    }

    pub fn is_identity(&self) -> bool {
        self.support.is_empty() && self.shift.is_zero()
    }

    /// Whether the base group is `C_p` for a prime `p`.
    pub fn has_prime_modulus(&self) -> bool {
        self.modulus
            .is_some_and(|n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
    }

    fn add_at(&mut self, pos: BigInt, val: BigInt) {
        let mut value = self.support.remove(&pos).unwrap_or_default() + val;
        if let Some(n) = self.modulus {
            value = value.mod_floor(&BigInt::from(n));
        }
        if !value.is_zero() {
            self.support.insert(pos, value);
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), WreathError> {
        if self.modulus != other.modulus {
            return Err(WreathError::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, WreathError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (pos, val) in &other.support {
            out.add_at(pos - &self.shift, val.clone());
        }
        out.shift += &other.shift;
        Ok(out)
    }

    pub fn inv(&self) -> Self {
        let mut out = Self {
            modulus: self.modulus,
            shift: -&self.shift,
            support: BTreeMap::new(),
        };
        for (pos, val) in &self.support {
            out.add_at(pos + &self.shift, -val);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(
            Self {
                modulus: self.modulus,
                shift: BigInt::zero(),
                support: BTreeMap::new(),
            },
            |acc, _| acc.mul(self).expect("same modulus"),
        )
    }

    /// Homomorphic image of a word.
    pub fn eval(word: &GeneratorWord, modulus: Option<u64>) -> Result<Self, WreathError> {
        let mut g = Self::identity(modulus)?;
        for (letter, e) in word.letters() {
            match letter {
                Generator::A => g.shift += e,
                Generator::B => {
                    let pos = -&g.shift;
                    g.add_at(pos, e.clone());
                }
            }
        }
        Ok(g)
    }

    /// The product `Π b_i^{c_i}` for `i = 0, 1, …`, evaluated as a word.
    ///
    /// In `Z ≀ Z` this is the identity only for the zero vector, so no
    /// relation `Σ c_i b_i = 0` holds there.
    pub fn base_relation(cvec: &[BigInt], modulus: Option<u64>) -> Result<Self, WreathError> {
        let word = cvec
            .iter()
            .enumerate()
            .fold(GeneratorWord::empty(), |w, (i, c)| {
                w.concat(&GeneratorWord::conjugate_b(i, c.clone()))
            });
        Self::eval(&word, modulus)
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (pos, val)) in self.support.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{pos} ↦ {val}")?;
        }
        write!(f, "}}; shift {}", self.shift)?;
        if let Some(n) = self.modulus {
            write!(f, " (mod {n})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::word::parse_word;

    fn eval(text: &str, modulus: Option<u64>) -> WreathElement {
        WreathElement::eval(&parse_word(text).unwrap(), modulus).unwrap()
    }

    fn support(pairs: &[(i64, i64)]) -> BTreeMap<BigInt, BigInt> {
        pairs
            .iter()
            .map(|&(p, v)| (BigInt::from(p), BigInt::from(v)))
            .collect()
    }

    #[test]
    fn identity_law() {
        let h = eval("b a^2 b^-3", None);
        let e = WreathElement::identity(None).unwrap();
        assert_eq!(e.mul(&h).unwrap(), h);
        assert_eq!(h.mul(&e).unwrap(), h);
        assert!(e.is_identity());
    }

    #[test]
    fn pointwise_addition() {
        let b = eval("b", None);
        let bb = b.mul(&b).unwrap();
        assert_eq!(bb.support(), &support(&[(0, 2)]));
        assert!(bb.shift().is_zero());
        let b2 = eval("b", Some(2));
        assert!(b2.mul(&b2).unwrap().is_identity());
    }

    #[test]
    fn eval_conventions() {
        let a3 = eval("a^3", None);
        assert!(a3.support().is_empty());
        assert_eq!(a3.shift(), &BigInt::from(3));
        assert_eq!(eval("a^-2 b a^2", None).support(), &support(&[(2, 1)]));
        let g = eval("b a b a^-1", None);
        assert_eq!(g.support(), &support(&[(-1, 1), (0, 1)]));
        assert_eq!(g, eval("b", None).mul(&eval("a b a^-1", None)).unwrap());
    }

    #[test]
    fn commutators_vanish() {
        for modulus in [None, Some(3)] {
            for i in -5..=5 {
                let w = GeneratorWord::commutator(
                    &parse_word("b").unwrap(),
                    &GeneratorWord::conjugate_b(i, 1),
                );
                assert!(WreathElement::eval(&w, modulus).unwrap().is_identity());
            }
        }
        assert!(!eval("a^-1 b^-1 a b", None).is_identity());
    }

    #[test]
    fn cyclic_exponent() {
        let b = eval("b", Some(3));
        assert!(b.pow(3).is_identity());
        assert!(!b.pow(2).is_identity());
        assert_eq!(b.pow(2).support(), &support(&[(0, 2)]));
    }

    #[test]
    fn base_relations() {
        let z = |xs: &[i64]| xs.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert!(WreathElement::base_relation(&z(&[0, 0, 0]), None)
            .unwrap()
            .is_identity());
        let r = WreathElement::base_relation(&z(&[2, -1]), None).unwrap();
        assert_eq!(r.support(), &support(&[(0, 2), (1, -1)]));
        assert!(WreathElement::base_relation(&z(&[2, 0]), Some(2))
            .unwrap()
            .is_identity());
        assert!(!WreathElement::base_relation(&z(&[2, 1]), Some(2))
            .unwrap()
            .is_identity());
    }

    #[test]
    fn modulus_errors() {
        let x = eval("b", None);
        let y = eval("b", Some(5));
        assert_eq!(x.mul(&y), Err(WreathError::ModulusMismatch(None, Some(5))));
        assert_eq!(
            WreathElement::identity(Some(1)),
            Err(WreathError::InvalidModulus(1))
        );
        assert!(y.has_prime_modulus());
        assert!(!eval("b", Some(6)).has_prime_modulus());
        assert!(!x.has_prime_modulus());
    }

    #[test]
    fn values_reduced_into_range() {
        let g = WreathElement::new(
            support(&[(0, -1), (4, 7), (5, 10)]),
            BigInt::from(1),
            Some(5),
        )
        .unwrap();
        assert_eq!(g.support(), &support(&[(0, 4), (4, 2)]));
    }

    #[test]
    fn json_form() {
        let g = eval("b a^-3 b^-2", None);
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(
            text,
            r#"{"modulus":null,"shift":"-3","support":{"0":"1","3":"-2"}}"#
        );
        assert_eq!(serde_json::from_str::<WreathElement>(&text).unwrap(), g);
        let h = eval("a^-1 b^4 a^11", Some(3));
        let text = serde_json::to_string(&h).unwrap();
        assert_eq!(text, r#"{"modulus":3,"shift":"10","support":{"1":"1"}}"#);
        assert!(
            serde_json::from_str::<WreathElement>(r#"{"modulus":1,"shift":"0","support":{}}"#)
                .is_err()
        );
    }

    fn arb_word() -> impl Strategy<Value = GeneratorWord> {
        prop::collection::vec((prop::bool::ANY, -4i64..=4), 0..=20).prop_map(|raw| {
            GeneratorWord::from_letters(raw.into_iter().map(|(is_a, e)| {
                (
                    if is_a { Generator::A } else { Generator::B },
                    BigInt::from(e),
                )
            }))
        })
    }

    fn arb_modulus() -> impl Strategy<Value = Option<u64>> {
        prop_oneof![Just(None), (2u64..=7).prop_map(Some)]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn group_axioms(m in arb_modulus(), u in arb_word(), v in arb_word(), w in arb_word()) {
            let (x, y, z) = (
                WreathElement::eval(&u, m).unwrap(),
                WreathElement::eval(&v, m).unwrap(),
                WreathElement::eval(&w, m).unwrap(),
            );
            prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
            prop_assert!(x.mul(&x.inv()).unwrap().is_identity());
            prop_assert!(x.inv().mul(&x).unwrap().is_identity());
            prop_assert_eq!(WreathElement::eval(&u.concat(&v), m).unwrap(), x.mul(&y).unwrap());
            prop_assert_eq!(x.inv(), WreathElement::eval(&u.inverse(), m).unwrap());
        }

        #[test]
        fn stored_values_normalized(m in arb_modulus(), u in arb_word()) {
            let x = WreathElement::eval(&u, m).unwrap();
            for val in x.support().values() {
                prop_assert!(!val.is_zero());
                if let Some(n) = m {
                    prop_assert!(val > &BigInt::zero() && val < &BigInt::from(n));
                }
            }
        }

        #[test]
        fn json_round_trip(m in arb_modulus(), u in arb_word()) {
            let x = WreathElement::eval(&u, m).unwrap();
            let text = serde_json::to_string(&x).unwrap();
            prop_assert_eq!(serde_json::from_str::<WreathElement>(&text).unwrap(), x);
        }
    }
}
