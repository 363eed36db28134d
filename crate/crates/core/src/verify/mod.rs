//! Executable re-verification of the computational lemmas behind the
//! library, at desk scale and in exact arithmetic.
//!
//! Every check returns a [`LemmaReport`]; failures are data, never panics.
//! [`run_all`] drives the whole suite from a single seed.

mod checks;
mod minkowski;
mod sample;
mod suites;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::linalg::{snf, IntMatrix, LinalgError, SnfResult};

pub use minkowski::{finite_subgroup_orders, minkowski_bound};

/// Outcome of one lemma check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    lemma_id: String,
    cases_run: usize,
    cases_passed: usize,
    first_failure: Option<String>,
}

impl LemmaReport {
    pub fn lemma_id(&self) -> &str {
        &self.lemma_id
    }

    pub fn cases_run(&self) -> usize {
        self.cases_run
    }

    pub fn cases_passed(&self) -> usize {
        self.cases_passed
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.first_failure.as_deref()
    }

    pub fn passed(&self) -> bool {
        self.cases_passed == self.cases_run
    }

    /// Concatenates reports under a new id, keeping the earliest failure.
    pub fn merge(lemma_id: &str, reports: impl IntoIterator<Item = LemmaReport>) -> LemmaReport {
        let mut out = Tally::new(lemma_id).finish();
        for r in reports {
            out.cases_run += r.cases_run;
            out.cases_passed += r.cases_passed;
            if out.first_failure.is_none() {
                out.first_failure = r.first_failure;
            }
        }
        out
    }
}

/// Accumulates case outcomes; descriptions are only built for the first failure.
pub(crate) struct Tally(LemmaReport);

impl Tally {
    pub(crate) fn new(lemma_id: &str) -> Self {
        Tally(LemmaReport {
            lemma_id: lemma_id.to_string(),
            cases_run: 0,
            cases_passed: 0,
            first_failure: None,
        })
    }

    pub(crate) fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.0.cases_run += 1;
        if ok {
            self.0.cases_passed += 1;
        } else if self.0.first_failure.is_none() {
            self.0.first_failure = Some(describe());
        }
    }

    pub(crate) fn finish(self) -> LemmaReport {
        self.0
    }
}

pub type SnfFn = fn(&IntMatrix) -> Result<SnfResult, LinalgError>;

/// The check suite, parameterized by the Smith normal form routine under test.
///
/// The default harness checks the library's own [`snf`]; substituting a
/// deliberately broken routine lets a mutation test confirm the checks bite.
#[derive(Clone, Copy)]
pub struct Harness {
    snf: SnfFn,
}

impl Default for Harness {
    fn default() -> Self {
        Harness { snf }
    }
}

impl Harness {
    pub fn with_snf(snf: SnfFn) -> Self {
        Harness { snf }
    }

    /// Every check, in a fixed order, each seeded from its own stream.
    pub fn run_all(&self, seed: u64) -> Vec<LemmaReport> {
        type Check = fn(&Harness, u64) -> LemmaReport;
        let checks: [Check; 13] = [
            |h, seed| h.check_smithc(5, 6, 9, 100, seed),
            |h, seed| h.check_smithform(200, (4, 5), 9, seed),
            |h, seed| h.extreme_minors_suite(50, seed),
            |_, seed| suites::embed_relators(100, seed),
            |_, seed| suites::torsion_probe(200, 20, seed),
            |_, _| suites::bs_crosscheck(),
            |_, seed| suites::power_index(50, seed),
            |_, seed| suites::interval(100, seed),
            |_, seed| suites::wreath_base_freeness(100, seed),
            |_, seed| suites::wreath_exponent_law(100, seed),
            |_, seed| suites::wreath_conjugation(100, seed),
            |_, seed| suites::wreath_torsion_probe(100, 20, seed),
            |_, _| suites::minkowski(),
        ];
        std::thread::scope(|scope| {
            let handles: Vec<_> = checks
                .iter()
                .enumerate()
                .map(|(i, check)| scope.spawn(move || check(self, stream_seed(seed, i as u64))))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("check panicked"))
                .collect()
        })
    }

    fn extreme_minors_suite(&self, samples: usize, seed: u64) -> LemmaReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let reports: Vec<_> = (0..samples)
            .map(|_| {
                let c = sample::signature(&mut rng, 5, 9);
                let m = rand::Rng::gen_range(&mut rng, 1..=6);
                check_extreme_minors(&c, m)
            })
            .collect();
        LemmaReport::merge("extreme_minors", reports)
    }
}

fn stream_seed(seed: u64, stream: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng.next_u64()
}

/// Samples signatures and band heights and checks that the Smith form of
/// every band matrix is `(I_m | 0)`.
pub fn check_smithc(
    s_max: usize,
    m_max: usize,
    coeff_bound: i64,
    samples: usize,
    seed: u64,
) -> LemmaReport {
    Harness::default().check_smithc(s_max, m_max, coeff_bound, samples, seed)
}

/// Compares invariant factors against quotients of minor gcds on random
/// matrices of at most `dims = (rows, cols)`.
pub fn check_smithform(
    samples: usize,
    dims: (usize, usize),
    entry_bound: i64,
    seed: u64,
) -> LemmaReport {
    Harness::default().check_smithform(samples, dims, entry_bound, seed)
}

pub use checks::check_extreme_minors;

/// Runs the full suite with the library's own routines.
pub fn run_all(seed: u64) -> Vec<LemmaReport> {
    Harness::default().run_all(seed)
}
