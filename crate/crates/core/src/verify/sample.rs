use num_bigint::BigInt;
use rand::Rng;

use crate::gc::Signature;
use crate::linalg::IntMatrix;
use crate::word::{Generator, GeneratorWord};

/// A uniformly drawn valid signature with `1 ≤ s ≤ s_max` and `|c_i| ≤ bound`.
pub(crate) fn signature<R: Rng>(rng: &mut R, s_max: usize, bound: i64) -> Signature {
    let bound = bound.max(1);
    loop {
        let s = rng.gen_range(1..=s_max.max(1));
        let coeffs: Vec<i64> = (0..=s).map(|_| rng.gen_range(-bound..=bound)).collect();
        if let Ok(sig) = Signature::from_i64(&coeffs) {
            return sig;
        }
    }
}

pub(crate) fn matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let rows = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
                .collect()
        })
        .collect();
    IntMatrix::from_rows(rows).expect("rectangular")
}

pub(crate) fn int_vec<R: Rng>(rng: &mut R, len: usize, bound: i64) -> Vec<BigInt> {
    (0..len)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect()
}

/// A random word of at most `max_len` syllables with exponents in `±max_exp`.
pub(crate) fn word<R: Rng>(rng: &mut R, max_len: usize, max_exp: i64) -> GeneratorWord {
    let len = rng.gen_range(0..=max_len);
    GeneratorWord::from_letters((0..len).map(|_| {
        let g = if rng.gen_bool(0.5) {
            Generator::A
        } else {
            Generator::B
        };
        (g, BigInt::from(rng.gen_range(-max_exp..=max_exp)))
    }))
}

/// Compact one-line rendering for failure descriptions.
pub(crate) fn compact(m: &IntMatrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| {
            format!(
                "[{}]",
                r.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    format!("[{}]", rows.join(","))
}
