use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{band_matrix, GcError, GcGroup};
use crate::decimal;
use crate::linalg::{snf, solve_integer_system, IntMatrix, LinalgError, SystemSolution};

/// Structure of the subgroup generated by `b_k, …, b_k'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalSubgroupReport {
    pub generators: usize,
    /// Relators `r_j = Σ c_i b_{j+i}` with `k ≤ j ≤ k' - s`.
    pub relators: usize,
    pub free_rank: usize,
    #[serde(serialize_with = "decimal::int_vec")]
    pub torsion_factors: Vec<BigInt>,
}

/// Result of a bounded search for `v` in the base subgroup `⟨b_i⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// `v = Σ coefficients[n] · b_{first_index + n}`.
    Member {
        first_index: i64,
        coefficients: Vec<BigInt>,
    },
    /// No witness within the window bound. This does not prove non-membership.
    NotFoundWithinBound { j_max: u32 },
}

/// Result of [`GcGroup::power_subgroup_index`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PowerIndex {
    Index(BigInt),
    /// Window cap reached before two consecutive windows agreed.
    NotStabilized {
        last: BigInt,
    },
}

impl GcGroup {
    /// Presentation of `⟨b_k, …, b_k'⟩` read off its relation matrix.
    pub fn interval_subgroup(&self, k: i64, k_hi: i64) -> Result<IntervalSubgroupReport, GcError> {
        if k > k_hi {
            return Err(GcError::Argument(format!("empty interval {k}..={k_hi}")));
        }
        let generators = usize::try_from(i128::from(k_hi) - i128::from(k) + 1)
            .map_err(|_| GcError::Argument("interval too long".into()))?;
        let relators = generators.saturating_sub(self.s());
        let (rank, torsion_factors) = if relators == 0 {
            (0, Vec::new())
        } else {
            let form = snf(&band_matrix(self.signature(), relators)?)?;
            (form.rank(), form.torsion_factors())
        };
        Ok(IntervalSubgroupReport {
            generators,
            relators,
            free_rank: generators - rank,
            torsion_factors,
        })
    }

    /// Searches for `v` in the `Z`-span of `b_i = e₁A^i`, over the windows
    /// `-j ≤ i ≤ j + s - 1` for `j = 0, …, j_max`.
    pub fn base_membership(&self, v: &[BigRational], j_max: u32) -> Result<Membership, GcError> {
        let s = self.s();
        if v.len() != s {
            return Err(GcError::SignatureMismatch {
                expected: s,
                found: v.len(),
            });
        }
        if v.iter().all(Zero::is_zero) {
            return Ok(Membership::Member {
                first_index: 0,
                coefficients: Vec::new(),
            });
        }

        let reach = i64::from(j_max);
        let orbit = self.orbit(-reach, reach + s as i64 - 1);
        for j in 0..=reach {
            let lo = -j;
            let window = &orbit[(reach - j) as usize..(reach + j) as usize + s];
            let scale = window
                .iter()
                .chain(std::iter::once(&v.to_vec()))
                .flatten()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let scaled = |x: &BigRational| (x * &scale).to_integer();
            let rows = (0..s)
                .map(|r| window.iter().map(|w| scaled(&w[r])).collect())
                .collect();
            let system = IntMatrix::from_rows(rows)?;
            let target: Vec<BigInt> = v.iter().map(scaled).collect();
            if let SystemSolution::Solved(coefficients) = solve_integer_system(&system, &target)? {
                let recombined = window.iter().zip(&coefficients).fold(
                    vec![BigRational::zero(); s],
                    |acc, (w, n)| {
                        let n = BigRational::from_integer(n.clone());
                        acc.into_iter().zip(w).map(|(a, x)| a + x * &n).collect()
                    },
                );
                assert_eq!(recombined, v, "membership witness failed verification");
                return Ok(Membership::Member {
                    first_index: lo,
                    coefficients,
                });
            }
        }
        Ok(Membership::NotFoundWithinBound { j_max })
    }

    /// Index of `⟨a, b^t⟩` in the group, i.e. `|N / tN|` for the base
    /// subgroup `N = ⟨b_i⟩`.
    ///
    /// `N₀ = ⟨b_0, …, b_{s-1}⟩` maps onto `N / tN`. For growing windows
    /// `W_j = ⟨b_{-j}, …, b_{j+s-1}⟩` this counts the image of `N₀` in
    /// `W_j / tW_j`, a non-increasing sequence of divisors of `t^s` that
    /// settles at `|N / tN|` once every element of `N₀ ∩ tN` has been seen
    /// to be divisible inside a window. Two consecutive equal counts are
    /// taken as the fixpoint.
    pub fn power_subgroup_index(&self, t: u64, j_cap: u32) -> Result<PowerIndex, GcError> {
        if t == 0 {
            return Err(GcError::Argument("t must be at least 1".into()));
        }
        let mut previous = self.base_image_in_window(t, 0)?;
        for j in 1..=j_cap as usize {
            let current = self.base_image_in_window(t, j)?;
            if current == previous {
                return Ok(PowerIndex::Index(current));
            }
            previous = current;
        }
        Ok(PowerIndex::NotStabilized { last: previous })
    }

    /// Order of the image of `⟨b_0, …, b_{s-1}⟩` in `W_j / tW_j`.
    ///
    /// `W_j` is presented on `b_{-j}, …, b_{j+s-1}` by the `2j` relators
    /// that fit in the window, and `W_j / tW_j ≅ (Z/t)^s`. Quotienting
    /// further by the base generators deletes their columns; the image has
    /// order `t^s` divided by the index of what remains.
    pub(crate) fn base_image_in_window(&self, t: u64, j: usize) -> Result<BigInt, GcError> {
        let s = self.s();
        let t = BigInt::from(t);
        let full = num_traits::pow(t.clone(), s);
        if j == 0 {
            return Ok(full);
        }
        let band = band_matrix(self.signature(), 2 * j)?;
        let keep: Vec<usize> = (0..j).chain(j + s..2 * j + s).collect();
        let outer = keep.len();
        let mut rows: Vec<Vec<BigInt>> = (0..band.rows())
            .map(|r| keep.iter().map(|&c| band[(r, c)].clone()).collect())
            .collect();
        for i in 0..outer {
            let mut row = vec![BigInt::zero(); outer];
            row[i] = t.clone();
            rows.push(row);
        }
        let form = snf(&IntMatrix::from_rows(rows)?)?;
        if form.rank() != outer {
            return Err(LinalgError::Singular.into());
        }
        let index: BigInt = form.invariant_factors.iter().product();
        let (image, rem) = full.div_rem(&index);
        assert!(rem.is_zero(), "window index {index} does not divide {full}");
        Ok(image)
    }

    /// `b_lo, …, b_hi` as vectors in `Q^s`.
    fn orbit(&self, lo: i64, hi: i64) -> Vec<Vec<BigRational>> {
        let forward = self.action().matrix();
        let mut current = self.conjugate_b(lo);
        let mut out = Vec::with_capacity((hi - lo + 1).max(0) as usize);
        for _ in lo..hi {
            let next = forward.vec_mul(&current).expect("dimension");
            out.push(std::mem::replace(&mut current, next));
        }
        out.push(current);
        out
    }
}
