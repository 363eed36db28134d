//! Property suites over the group models.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{finite_subgroup_orders, minkowski_bound, sample, LemmaReport, Tally};
use crate::gc::{GcGroup, PowerIndex, Signature};
use crate::word::{parse_word, Generator, GeneratorWord};
use crate::wreath::WreathElement;

const INDEX_CAP: u32 = 40;

fn word(text: &str) -> GeneratorWord {
    parse_word(text).expect("fixed word")
}

/// Defining relations hold in the matrix model: the built-in check plus
/// `[b, b_i]` for `|i| ≤ 4` and the defining word.
pub(super) fn embed_relators(samples: usize, seed: u64) -> LemmaReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::new("embed_relators");
    for _ in 0..samples {
        let c = sample::signature(&mut rng, 5, 9);
        let g = GcGroup::new(c.clone());
        let failing = if !g.relator_check() {
            Some("relator_check".to_string())
        } else if !g.is_identity(&c.relator_word()) {
            Some(format!("defining word {}", c.relator_word()))
        } else {
            (-4..=4)
                .map(Signature::commutator_relator)
                .find(|r| !g.is_identity(r))
                .map(|r| format!("commutator {r}"))
        };
        tally.record(failing.is_none(), || {
            format!("c=({c}): {} is not trivial", failing.unwrap_or_default())
        });
    }
    tally.finish()
}

/// Random non-identity elements have no nontrivial power up to `max_power`.
pub(super) fn torsion_probe(samples: usize, max_power: u32, seed: u64) -> LemmaReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::new("torsion_free");
    while tally_len(&tally) < samples {
        let c = sample::signature(&mut rng, 3, 9);
        let g = GcGroup::new(c.clone());
        let w = sample::word(&mut rng, 8, 2);
        let x = g.eval(&w);
        if x.is_identity() {
            continue;
        }
        let mut power = x.clone();
        let mut hit = None;
        for n in 1..=max_power {
            if power.is_identity() {
                hit = Some(n);
                break;
            }
            power = g.mul(&power, &x).expect("same dimension");
        }
        tally.record(hit.is_none(), || {
            format!("c=({c}) word {w}: power {} is trivial", hit.unwrap())
        });
    }
    tally.finish()
}

fn tally_len(t: &Tally) -> usize {
    t.0.cases_run
}

/// Baumslag–Solitar sanity checks.
pub(super) fn bs_crosscheck() -> LemmaReport {
    let mut tally = Tally::new("bs_crosscheck");
    let bs = GcGroup::new(Signature::from_i64(&[2, -1]).expect("valid"));
    tally.record(bs.eval(&word("a^-1 b a")) == bs.eval(&word("b^2")), || {
        "a^-1 b a ≠ b^2 for c=(2,-1)".into()
    });
    tally.record(bs.is_proper(), || "c=(2,-1) not proper".into());
    for c in [&[1, 1][..], &[1, 1, 1]] {
        let proper = GcGroup::new(Signature::from_i64(c).expect("valid")).is_proper();
        tally.record(!proper, || format!("c={c:?} reported proper"));
    }
    tally.finish()
}

/// `|N / tN|` stabilizes and divides `t^s`; known values are reproduced.
pub(super) fn power_index(samples: usize, seed: u64) -> LemmaReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::new("power_index");
    for (c, t, expected) in [
        (&[2, -1][..], 2u64, 1u32),
        (&[2, -1], 3, 3),
        (&[1, -1], 5, 5),
    ] {
        let got =
            GcGroup::new(Signature::from_i64(c).expect("valid")).power_subgroup_index(t, INDEX_CAP);
        tally.record(
            matches!(&got, Ok(PowerIndex::Index(v)) if *v == BigInt::from(expected)),
            || format!("c={c:?} t={t}: got {got:?}, expected {expected}"),
        );
    }
    for _ in 0..samples {
        let c = sample::signature(&mut rng, 3, 9);
        let t = rng.gen_range(1..=6u64);
        let bound = num_traits::pow(BigInt::from(t), c.s());
        let got = GcGroup::new(c.clone()).power_subgroup_index(t, INDEX_CAP);
        let ok = matches!(&got, Ok(PowerIndex::Index(v)) if bound.is_multiple_of(v));
        tally.record(ok, || format!("c=({c}) t={t}: {got:?} (t^s = {bound})"));
    }
    tally.finish()
}

/// Interval subgroups are free abelian of rank `min(generators, s)`.
pub(super) fn interval(samples: usize, seed: u64) -> LemmaReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::new("interval");
    for _ in 0..samples {
        let c = sample::signature(&mut rng, 5, 9);
        let k = rng.gen_range(-6..=6i64);
        let k_hi = k + rng.gen_range(0..12i64);
        let got = GcGroup::new(c.clone()).interval_subgroup(k, k_hi);
        let ok = matches!(&got, Ok(r) if r.free_rank == r.generators.min(c.s()) && r.torsion_factors.is_empty());
        tally.record(ok, || format!("c=({c}) interval {k}..={k_hi}: {got:?}"));
    }
    tally.finish()
}

/// In `Z ≀ Z`, `Π b_i^{c_i}` is trivial exactly when every `c_i` is zero.
pub(super) fn wreath_base_freeness(samples: usize, seed: u64) -> LemmaReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::new("wreath_base_freeness");
    for n in 0..samples {
        let len = rng.gen_range(1..=8);
        // every tenth vector is zero so both directions are exercised
        let cvec = if n % 10 == 0 {
            vec![BigInt::zero(); len]
        } else {
            sample::int_vec(&mut rng, len, 9)
        };
        let zero = cvec.iter().all(Zero::is_zero);
        let got = WreathElement::base_relation(&cvec, None);
        let ok = matches!(&got, Ok(g) if g.is_identity() == zero);
        tally.record(ok, || format!("cvec {cvec:?}: {got:?}"));
    }
    tally.finish()
}

/// In `C_n ≀ Z` every element of the base has order dividing `n`.
pub(super) fn wreath_exponent_law(samples: usize, seed: u64) -> LemmaReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::new("wreath_exponent_law");
    for _ in 0..samples {
        let n = rng.gen_range(2..=7u64);
        let g = random_base_element(&mut rng, Some(n));
        tally.record(g.pow(n as u32).is_identity(), || {
            format!("C_{n}: ({g})^{n} is not trivial")
        });
    }
    tally.finish()
}

/// Conjugating a base element by `a^k` translates its support by `k`.
pub(super) fn wreath_conjugation(samples: usize, seed: u64) -> LemmaReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::new("wreath_conjugation");
    for i in 0..samples {
        let modulus = if i % 2 == 0 {
            None
        } else {
            Some(rng.gen_range(2..=7u64))
        };
        let g = random_base_element(&mut rng, modulus);
        let k = rng.gen_range(-10..=10i64);
        let a = |e: i64| {
            WreathElement::eval(&GeneratorWord::letter(Generator::A, e), modulus)
                .expect("valid modulus")
        };
        let conj = a(-k).mul(&g).and_then(|x| x.mul(&a(k)));
        let shifted: Vec<BigInt> = g.support().keys().map(|p| p + k).collect();
        let ok = matches!(&conj, Ok(x) if x.shift().is_zero() && x.support().keys().cloned().eq(shifted.iter().cloned()));
        tally.record(ok, || format!("k={k}, g = {g}: conjugate {conj:?}"));
    }
    tally.finish()
}

/// Non-identity elements of `Z ≀ Z` have no nontrivial power up to `max_power`.
pub(super) fn wreath_torsion_probe(samples: usize, max_power: u32, seed: u64) -> LemmaReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::new("wreath_torsion_free");
    while tally_len(&tally) < samples {
        let w = sample::word(&mut rng, 8, 3);
        let g = WreathElement::eval(&w, None).expect("no modulus");
        if g.is_identity() {
            continue;
        }
        let hit = (1..=max_power).find(|&n| g.pow(n).is_identity());
        tally.record(hit.is_none(), || {
            format!("word {w}: power {} is trivial", hit.unwrap())
        });
    }
    tally.finish()
}

fn random_base_element<R: Rng>(rng: &mut R, modulus: Option<u64>) -> WreathElement {
    let len = rng.gen_range(1..=6);
    let start = rng.gen_range(-5..=5i64);
    let cvec = sample::int_vec(rng, len, 9);
    let w = GeneratorWord::letter(Generator::A, -start)
        .concat(
            &cvec
                .iter()
                .enumerate()
                .fold(GeneratorWord::empty(), |acc, (i, c)| {
                    acc.concat(&GeneratorWord::conjugate_b(i, c.clone()))
                }),
        )
        .concat(&GeneratorWord::letter(Generator::A, start));
    WreathElement::eval(&w, modulus).expect("valid modulus")
}

/// The closed formula agrees with exhaustive search in ranks 1 and 2 and
/// forms a divisor chain with the expected small factors.
pub(super) fn minkowski() -> LemmaReport {
    let mut tally = Tally::new("minkowski");
    for n in 1..=2usize {
        let bound = minkowski_bound(n as u32).expect("n ≥ 1");
        let orders = finite_subgroup_orders(n, 2);
        let lcm = orders
            .iter()
            .fold(BigInt::from(1), |acc, &o| acc.lcm(&BigInt::from(o)));
        tally.record(lcm == bound, || {
            format!("L({n}) = {bound} but subgroup orders {orders:?} have lcm {lcm}")
        });
    }
    for n in 1..=11u32 {
        let (lo, hi) = (
            minkowski_bound(n).expect("n ≥ 1"),
            minkowski_bound(n + 1).expect("n ≥ 1"),
        );
        tally.record(hi.is_multiple_of(&lo), || {
            format!("L({n}) = {lo} does not divide L({}) = {hi}", n + 1)
        });
        let base = if n >= 2 { 24 } else { 2 };
        tally.record(lo.is_multiple_of(&BigInt::from(base)), || {
            format!("L({n}) = {lo} is not a multiple of {base}")
        });
    }
    tally.finish()
}
