use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::sample::{self, compact};
use super::{Harness, LemmaReport, Tally};
use crate::gc::{band_matrix, Signature};
use crate::linalg::{minor_gcds, IntMatrix, SnfResult};

impl Harness {
    /// See [`super::check_smithc`].
    pub fn check_smithc(
        &self,
        s_max: usize,
        m_max: usize,
        coeff_bound: i64,
        samples: usize,
        seed: u64,
    ) -> LemmaReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut tally = Tally::new("smithc");
        for _ in 0..samples {
            let c = sample::signature(&mut rng, s_max, coeff_bound);
            let m = rng.gen_range(1..=m_max.max(1));
            let band = band_matrix(&c, m).expect("m ≥ 1");
            let expected = unit_block(m, m + c.s());
            match (self.snf)(&band) {
                Ok(form) => tally.record(form.smith == expected, || {
                    format!("c=({c}) m={m}: smith form {}", compact(&form.smith))
                }),
                Err(e) => tally.record(false, || format!("c=({c}) m={m}: {e}")),
            }
        }
        tally.finish()
    }

    /// See [`super::check_smithform`].
    pub fn check_smithform(
        &self,
        samples: usize,
        dims: (usize, usize),
        entry_bound: i64,
        seed: u64,
    ) -> LemmaReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut tally = Tally::new("smithform");
        for _ in 0..samples {
            let rows = rng.gen_range(1..=dims.0.max(1));
            let cols = rng.gen_range(1..=dims.1.max(1));
            let m = sample::matrix(&mut rng, rows, cols, entry_bound);
            let verdict = (self.snf)(&m)
                .map_err(|e| e.to_string())
                .and_then(|form| smithform_holds(&m, &form));
            tally.record(verdict.is_ok(), || {
                format!("{}: {}", compact(&m), verdict.unwrap_err())
            });
        }
        tally.finish()
    }
}

/// `(I_rows | 0)`.
fn unit_block(rows: usize, cols: usize) -> IntMatrix {
    let rows = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(rows).expect("rectangular")
}

/// The claimed form is a genuine Smith form of `m` and its factors are the
/// successive quotients of the minor gcds.
fn smithform_holds(m: &IntMatrix, form: &SnfResult) -> Result<(), String> {
    let sigma = &form.invariant_factors;
    let product = form
        .left
        .mul(m)
        .and_then(|lm| lm.mul(&form.right))
        .map_err(|e| e.to_string())?;
    if product != form.smith {
        return Err("left·m·right differs from the smith form".into());
    }
    for t in [&form.left, &form.right] {
        if !t.determinant().map_err(|e| e.to_string())?.abs().is_one() {
            return Err("transform is not unimodular".into());
        }
    }
    let gamma = minor_gcds(m).map_err(|e| e.to_string())?;
    let rank = gamma.iter().take_while(|g| !g.is_zero()).count();
    if sigma.len() != rank {
        return Err(format!("{} invariant factors for rank {rank}", sigma.len()));
    }
    let mut previous = BigInt::one();
    for (i, (s, g)) in sigma.iter().zip(&gamma).enumerate() {
        if &(s * &previous) != g {
            return Err(format!(
                "σ_{} = {s} but γ_{} / γ_{} = {g} / {previous}",
                i + 1,
                i + 1,
                i
            ));
        }
        previous = g.clone();
    }
    if sigma.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
        return Err("invariant factors do not form a divisor chain".into());
    }
    Ok(())
}

/// Checks the two outermost maximal minors of the band matrix: the
/// leftmost `m × m` window has determinant `c_0^m` and the rightmost `c_s^m`.
pub fn check_extreme_minors(c: &Signature, m: usize) -> LemmaReport {
    let mut tally = Tally::new("extreme_minors");
    let s = c.s();
    let band = match band_matrix(c, m) {
        Ok(b) => b,
        Err(e) => {
            tally.record(false, || format!("c=({c}) m={m}: {e}"));
            return tally.finish();
        }
    };
    let rows: Vec<usize> = (0..m).collect();
    for (offset, coeff) in [(0, &c.coeffs()[0]), (s, &c.coeffs()[s])] {
        let window: Vec<usize> = (offset..offset + m).collect();
        let det = band.select(&rows, &window).determinant();
        let expected = num_traits::pow(coeff.clone(), m);
        match det {
            Ok(d) => tally.record(d == expected, || {
                format!("c=({c}) m={m}: window at column {offset} has determinant {d}, expected {expected}")
            }),
            Err(e) => tally.record(false, || format!("c=({c}) m={m}: {e}")),
        }
    }
    tally.finish()
}
