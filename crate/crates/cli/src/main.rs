//! `solvkit` command-line front end.
//!
//! Exit status: 0 on success, 1 on a domain or usage error (message on
//! stderr), 2 when `verify all` reports a failing check.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;
use solvkit::gc::{Membership, PowerIndex};
use solvkit::linalg::{matrix_from_json, minor_gcds, snf, Scalar};
use solvkit::verify::{minkowski_bound, run_all, LemmaReport};
use solvkit::word::parse_word;
use solvkit::{GcGroup, GeneratorWord, IntMatrix, Signature, WreathElement};

#[derive(Parser)]
#[command(
    name = "solvkit",
    version,
    about = "Exact computations in Gc groups and wreath products"
)]
struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operations in the group G(c).
    Gc {
        #[command(subcommand)]
        op: GcOp,
    },
    /// Smith normal form of a matrix file.
    Snf {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Gcds of the k × k minors of a matrix file.
    Minors {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// The m-row band relation matrix of a signature.
    Band {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_signature)]
        c: Signature,
        #[arg(long)]
        m: usize,
    },
    /// Words in Z ≀ Z, or C_n ≀ Z with `--mod n`.
    Wreath {
        #[command(subcommand)]
        op: WreathOp,
    },
    /// Re-run the lemma checks.
    Verify {
        #[command(subcommand)]
        op: VerifyOp,
    },
    /// Minkowski's bound on finite subgroup orders of GL(n, Z).
    Minkowski {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Subcommand)]
enum GcOp {
    Eval {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_signature)]
        c: Signature,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    IsIdentity {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_signature)]
        c: Signature,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    IsProper {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_signature)]
        c: Signature,
    },
    Abelianization {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_signature)]
        c: Signature,
    },
    Interval {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_signature)]
        c: Signature,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
    },
    Index {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_signature)]
        c: Signature,
        #[arg(long)]
        t: u64,
        #[arg(long, default_value_t = 40)]
        cap: u32,
    },
    Member {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_signature)]
        c: Signature,
        /// Comma-separated rationals such as `1/2,0`.
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, default_value_t = 10)]
        jmax: u32,
    },
}

#[derive(Subcommand)]
enum WreathOp {
    Eval {
        #[arg(long = "mod")]
        modulus: Option<u64>,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    IsIdentity {
        #[arg(long = "mod")]
        modulus: Option<u64>,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(Subcommand)]
enum VerifyOp {
    All {
        #[arg(long, env = "SOLVKIT_SEED", default_value_t = 0)]
        seed: u64,
    },
}

fn parse_signature(text: &str) -> Result<Signature, String> {
    text.parse().map_err(|e| format!("{e}"))
}

/// Rendered result of one command.
struct Output {
    human: String,
    json: String,
    status: ExitCode,
}

impl Output {
    fn ok(human: impl Into<String>, json: impl Into<String>) -> Self {
        Output {
            human: human.into(),
            json: json.into(),
            status: ExitCode::SUCCESS,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            println!(
                "{}",
                if cli.json {
                    out.json
                } else {
                    out.human.trim_end().to_string()
                }
            );
            out.status
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<Output, String> {
    match command {
        Command::Gc { op } => run_gc(op),
        Command::Snf { input } => {
            let m = read_matrix(&input)?;
            let form = snf(&m).map_err(|e| e.to_string())?;
            let human = format!(
                "invariant factors: {}\nsmith form:\n{}",
                join(&form.invariant_factors),
                form.smith
            );
            Ok(Output::ok(human, to_json(&form)?))
        }
        Command::Minors { input } => {
            let m = read_matrix(&input)?;
            let gammas = minor_gcds(&m).map_err(|e| e.to_string())?;
            let strings: Vec<String> = gammas.iter().map(ToString::to_string).collect();
            Ok(Output::ok(
                join(&gammas),
                json!({ "minor_gcds": strings }).to_string(),
            ))
        }
        Command::Band { c, m } => {
            let band = solvkit::gc::band_matrix(&c, m).map_err(|e| e.to_string())?;
            Ok(Output::ok(band.to_string(), to_json(&band)?))
        }
        Command::Wreath { op } => {
            let (modulus, word, identity_only) = match op {
                WreathOp::Eval { modulus, word } => (modulus, word, false),
                WreathOp::IsIdentity { modulus, word } => (modulus, word, true),
            };
            let g = WreathElement::eval(&word_arg(&word)?, modulus).map_err(|e| e.to_string())?;
            if identity_only {
                Ok(bool_output("is_identity", g.is_identity()))
            } else {
                Ok(Output::ok(g.to_string(), to_json(&g)?))
            }
        }
        Command::Verify {
            op: VerifyOp::All { seed },
        } => {
            let reports = run_all(seed);
            let status = if reports.iter().all(LemmaReport::passed) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            };
            Ok(Output {
                human: report_table(&reports),
                json: to_json(&reports)?,
                status,
            })
        }
        Command::Minkowski { n } => {
            let bound = minkowski_bound(n)?;
            Ok(Output::ok(
                bound.to_string(),
                json!({ "bound": bound.to_string(), "n": n }).to_string(),
            ))
        }
    }
}

fn run_gc(op: GcOp) -> Result<Output, String> {
    match op {
        GcOp::Eval { c, word } => {
            let g = GcGroup::new(c).eval(&word_arg(&word)?);
            let human = format!(
                "translation ({}), shift {}",
                join(g.translation()),
                g.shift()
            );
            Ok(Output::ok(human, to_json(&g)?))
        }
        GcOp::IsIdentity { c, word } => Ok(bool_output(
            "is_identity",
            GcGroup::new(c).is_identity(&word_arg(&word)?),
        )),
        GcOp::IsProper { c } => Ok(bool_output("is_proper", GcGroup::new(c).is_proper())),
        GcOp::Abelianization { c } => {
            let ab = GcGroup::new(c).abelianization();
            let human = format!(
                "free rank {}, torsion [{}]",
                ab.free_rank,
                join(&ab.torsion_factors)
            );
            Ok(Output::ok(human, to_json(&ab)?))
        }
        GcOp::Interval { c, from, to } => {
            let r = GcGroup::new(c)
                .interval_subgroup(from, to)
                .map_err(|e| e.to_string())?;
            let human = format!(
                "{} generators, {} relators, free rank {}, torsion [{}]",
                r.generators,
                r.relators,
                r.free_rank,
                join(&r.torsion_factors)
            );
            Ok(Output::ok(human, to_json(&r)?))
        }
        GcOp::Index { c, t, cap } => match GcGroup::new(c)
            .power_subgroup_index(t, cap)
            .map_err(|e| e.to_string())?
        {
            PowerIndex::Index(i) => Ok(Output::ok(
                format!("index {i}"),
                json!({ "index": i.to_string(), "stabilized": true }).to_string(),
            )),
            PowerIndex::NotStabilized { last } => Ok(Output::ok(
                format!("not stabilized within {cap} windows (last value {last})"),
                json!({ "last": last.to_string(), "stabilized": false }).to_string(),
            )),
        },
        GcOp::Member { c, v, jmax } => {
            let v = parse_rationals(&v)?;
            match GcGroup::new(c)
                .base_membership(&v, jmax)
                .map_err(|e| e.to_string())?
            {
                Membership::Member {
                    first_index,
                    coefficients,
                } => {
                    let strings: Vec<String> =
                        coefficients.iter().map(ToString::to_string).collect();
                    Ok(Output::ok(
                        format!("member: coefficients [{}] on b_{first_index} onwards", join(&coefficients)),
                        json!({ "coefficients": strings, "first_index": first_index.to_string(), "member": true })
                            .to_string(),
                    ))
                }
                Membership::NotFoundWithinBound { j_max } => Ok(Output::ok(
                    format!("not found within window bound {j_max}"),
                    json!({ "j_max": j_max, "member": false }).to_string(),
                )),
            }
        }
    }
}

fn word_arg(text: &str) -> Result<GeneratorWord, String> {
    parse_word(text).map_err(|e| format!("cannot parse word {text:?}: {e}"))
}

fn parse_rationals(text: &str) -> Result<Vec<BigRational>, String> {
    text.split(',')
        .map(|part| {
            BigRational::parse_exact(part.trim())
                .ok_or_else(|| format!("invalid rational {:?}", part.trim()))
        })
        .collect()
}

fn read_matrix(path: &PathBuf) -> Result<IntMatrix, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    matrix_from_json::<BigInt>(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Serializes through `serde_json::Value` so every object has sorted keys.
fn to_json<T: serde::Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_value(value)
        .map(|v| v.to_string())
        .map_err(|e| e.to_string())
}

fn bool_output(key: &str, value: bool) -> Output {
    Output::ok(value.to_string(), json!({ key: value }).to_string())
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn report_table(reports: &[LemmaReport]) -> String {
    let width = reports
        .iter()
        .map(|r| r.lemma_id().len())
        .max()
        .unwrap_or(0)
        .max("check".len());
    let mut lines = vec![format!("{:width$}  {:>9}  status", "check", "passed")];
    for r in reports {
        let counts = format!("{}/{}", r.cases_passed(), r.cases_run());
        lines.push(format!(
            "{:width$}  {counts:>9}  {}",
            r.lemma_id(),
            if r.passed() { "ok" } else { "FAIL" }
        ));
    }
    for r in reports.iter().filter(|r| !r.passed()) {
        lines.push(format!(
            "{}: {}",
            r.lemma_id(),
            r.first_failure().unwrap_or("")
        ));
    }
    lines.join("\n")
}
