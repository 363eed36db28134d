use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use solvkit::gc::{band_matrix, GcGroup, Signature};
use solvkit::linalg::snf;
use solvkit::verify::minkowski_bound;
use solvkit::word::{Generator, GeneratorWord};
use solvkit::WreathElement;

fn arb_signature() -> impl Strategy<Value = Signature> {
    prop::collection::vec(-9i64..=9, 2..=6)
        .prop_filter_map("valid signature", |c| Signature::from_i64(&c).ok())
}

/// `Π b_{start+i}^{c_i}` as a word.
fn base_word(cvec: &[i64], start: i64) -> GeneratorWord {
    cvec.iter()
        .enumerate()
        .fold(GeneratorWord::empty(), |w, (i, &c)| {
            w.concat(&GeneratorWord::conjugate_b(start + i as i64, c))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn band_matrices_reduce_to_unit_block(c in arb_signature(), m in 1usize..=6) {
        let smith = snf(&band_matrix(&c, m).unwrap()).unwrap().smith;
        for i in 0..m {
            for j in 0..m + c.s() {
                prop_assert_eq!(smith[(i, j)].clone(), BigInt::from(u8::from(i == j)));
            }
        }
    }

    #[test]
    fn intervals_are_free_abelian(c in arb_signature(), k in -8i64..=8, len in 1i64..=14) {
        let r = GcGroup::new(c.clone()).interval_subgroup(k, k + len - 1).unwrap();
        prop_assert_eq!(r.generators, len as usize);
        prop_assert_eq!(r.free_rank, r.generators.min(c.s()));
        prop_assert!(r.torsion_factors.is_empty());
    }

    #[test]
    fn abelianization_matches_coefficient_sum(c in arb_signature()) {
        let ab = GcGroup::new(c.clone()).abelianization();
        let sum = c.coeffs().iter().sum::<BigInt>().abs();
        if sum.is_zero() {
            prop_assert_eq!(ab.free_rank, 2);
            prop_assert!(ab.torsion_factors.is_empty());
        } else {
            prop_assert_eq!(ab.free_rank, 1);
            let expected: Vec<BigInt> = if sum == BigInt::from(1) { vec![] } else { vec![sum] };
            prop_assert_eq!(ab.torsion_factors, expected);
        }
    }

    #[test]
    fn wreath_base_is_free(cvec in prop::collection::vec(-9i64..=9, 1..=8)) {
        let big: Vec<BigInt> = cvec.iter().map(|&c| BigInt::from(c)).collect();
        let g = WreathElement::base_relation(&big, None).unwrap();
        prop_assert_eq!(g.is_identity(), cvec.iter().all(|&c| c == 0));
        for (i, &c) in cvec.iter().enumerate() {
            prop_assert_eq!(g.support().get(&BigInt::from(i)).cloned().unwrap_or_default(), BigInt::from(c));
        }
    }

    #[test]
    fn finite_base_has_exponent_n(
        n in 2u64..=9,
        cvec in prop::collection::vec(-9i64..=9, 1..=6),
        start in -5i64..=5,
    ) {
        let g = WreathElement::eval(&base_word(&cvec, start), Some(n)).unwrap();
        prop_assert!(g.pow(n as u32).is_identity());
        let trivial = cvec.iter().all(|c| c.is_multiple_of(&(n as i64)));
        prop_assert_eq!(g.is_identity(), trivial);
    }

    #[test]
    fn conjugation_translates_support(
        cvec in prop::collection::vec(-9i64..=9, 1..=6),
        start in -5i64..=5,
        k in -12i64..=12,
    ) {
        let w = base_word(&cvec, start);
        let conj = GeneratorWord::letter(Generator::A, -k).concat(&w).concat(&GeneratorWord::letter(Generator::A, k));
        let g = WreathElement::eval(&w, None).unwrap();
        let h = WreathElement::eval(&conj, None).unwrap();
        let expected: BTreeSet<BigInt> = g.support().keys().map(|p| p + k).collect();
        prop_assert!(h.shift().is_zero());
        prop_assert_eq!(h.support().keys().cloned().collect::<BTreeSet<_>>(), expected);
    }
}

#[test]
fn minkowski_divisibility() {
    for n in 1..=12 {
        let l = minkowski_bound(n).unwrap();
        assert!(l.is_multiple_of(&BigInt::from(2)));
        if n >= 2 {
            assert!(l.is_multiple_of(&BigInt::from(24)));
        }
        if n < 12 {
            assert!(minkowski_bound(n + 1).unwrap().is_multiple_of(&l));
        }
    }
}
