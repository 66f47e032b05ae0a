//! Command-line front end: JSON algebras in, JSON reports out.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use liebreadth::algebra::StructureTensor;
use liebreadth::breadth::{breadth_with, char_breadth2, BreadthOptions, Certainty, Method};
use liebreadth::catalog::{build, FamilyTag};
use liebreadth::error::Error;
use liebreadth::field::{Field, Scalar};
use liebreadth::generate::{enumerate_gfp_with, random_mixed_solvable, random_nilpotent, random_solvable, EnumOptions};
use liebreadth::invariants::{invariants, is_solvable};
use liebreadth::json::{
    algebra_from_str, algebra_to_json, classification_to_json, field_from_text, matrix_to_json, vector_to_json,
};
use liebreadth::recognize::{are_isomorphic, classify, verify_isomorphism};

#[derive(Parser)]
#[command(name = "liebreadth", version, about = "Breadth and classification of Lie algebras given by structure constants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Jacobi identity; exits 1 and lists violating triples if it fails.
    Validate { file: String },
    /// Series, center, and structural predicates.
    Invariants { file: String },
    /// b(L) with its certainty and a witness element.
    Breadth {
        file: String,
        #[arg(long, default_value_t = 24)]
        trials: usize,
        #[arg(long = "entry-bound", default_value_t = 1 << 31)]
        entry_bound: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Name the family of a pure solvable algebra of breadth ≤ 2.
    Classify { file: String },
    /// Decide isomorphism of two classifiable algebras.
    Iso { first: String, second: String },
    /// List catalog tags, or emit one catalog algebra.
    Catalog {
        #[arg(long)]
        tag: Option<String>,
        /// γ for `--tag L8`.
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Exhaustive scan of all tensors over GF(p) in dimension n.
    Enumerate {
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, value_enum)]
        check: Option<Check>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Emit a random algebra.
    Random {
        #[arg(long, value_enum, default_value_t = Kind::Solvable)]
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// dim A for `--kind solvable`.
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// dim V for `--kind solvable`.
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        bound: u64,
        #[arg(long, default_value = "Q")]
        field: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Symbolic,
    MonteCarlo,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Breadth1,
    Breadth2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Solvable,
    Nilpotent,
    Mixed,
}

enum Failure {
    /// Bad flags or unreadable input paths.
    Usage(String),
    /// The library refused the input.
    Rejected(Error),
    /// A report was produced but it signals failure.
    Report(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Rejected(e)
    }
}

type Outcome = Result<Value, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(v) => {
            emit(&v);
            ExitCode::SUCCESS
        }
        Err(Failure::Report(v)) => {
            emit(&v);
            ExitCode::from(1)
        }
        Err(Failure::Rejected(e)) => {
            emit(&json!({"error": error_kind(&e), "message": e.to_string()}));
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(v: &Value) {
    let mut out = io::stdout().lock();
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::PreconditionFailed(_) => "PreconditionFailed",
        Error::FieldExtensionNeeded(_) => "FieldExtensionNeeded",
        Error::InconsistentWithClassification(_) => "InconsistentWithClassification",
        Error::Parse(_) => "Parse",
        Error::BudgetExceeded { .. } => "BudgetExceeded",
        Error::BadParameter(_) => "BadParameter",
        Error::DimensionMismatch { .. } => "DimensionMismatch",
        _ => "Error",
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))
    }
}

fn load(path: &str) -> Result<StructureTensor, Failure> {
    Ok(algebra_from_str(&read_input(path)?)?)
}

fn parse_field(s: &str) -> Result<Field, Failure> {
    field_from_text(s).map_err(|e| Failure::Usage(format!("--field: {e}")))
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Validate { file } => {
            let l = load(&file)?;
            let report = l.validate();
            let triples: Vec<Value> = report
                .violations
                .iter()
                .map(|[i, j, k]| json!([i + 1, j + 1, k + 1]))
                .collect();
            let v = json!({"valid": report.is_lie(), "violations": triples});
            if report.is_lie() {
                Ok(v)
            } else {
                Err(Failure::Report(v))
            }
        }
        Command::Invariants { file } => {
            let l = load(&file)?;
            let r = invariants(&l);
            Ok(json!({
                "dim": r.dim,
                "dim_derived": r.dim_derived,
                "dim_center": r.dim_center,
                "derived_series_dims": r.derived_series_dims,
                "lower_central_dims": r.lower_central_dims,
                "lcs_stable_dim": r.lcs_stable_dim(),
                "solvable": r.solvable,
                "nilpotent": r.nilpotent,
                "pure": r.pure,
                "jacobi": l.is_lie(),
            }))
        }
        Command::Breadth {
            file,
            trials,
            entry_bound,
            seed,
            method,
        } => {
            let l = load(&file)?;
            if trials == 0 {
                return Err(Failure::Usage("--trials must be at least 1".into()));
            }
            let opts = BreadthOptions {
                trials,
                entry_bound,
                seed,
                method: match method {
                    MethodArg::Auto => Method::Auto,
                    MethodArg::Symbolic => Method::Symbolic,
                    MethodArg::MonteCarlo => Method::MonteCarlo,
                },
                ..BreadthOptions::default()
            };
            let r = breadth_with(&l, &opts);
            let certainty = match r.certainty {
                Certainty::Exact => json!("exact"),
                Certainty::MonteCarlo { trials, entry_bound } => {
                    json!({"monte_carlo": {"trials": trials, "entry_bound": entry_bound}})
                }
            };
            Ok(json!({
                "value": r.value,
                "certainty": certainty,
                "witness": vector_to_json(&r.witness),
                "upper_bound": r.upper_bound,
            }))
        }
        Command::Classify { file } => {
            let l = load(&file)?;
            let r = classify(&l)?;
            let v = classification_to_json(&r);
            if r.verified {
                Ok(v)
            } else {
                Err(Failure::Report(v))
            }
        }
        Command::Iso { first, second } => {
            let a = load(&first)?;
            let b = load(&second)?;
            let (iso, witness) = are_isomorphic(&a, &b)?;
            let verified = match &witness {
                Some(p) => verify_isomorphism(&a, &b, p)?,
                None => false,
            };
            Ok(json!({
                "isomorphic": iso,
                "witness": witness.as_ref().map(matrix_to_json),
                "verified": verified,
            }))
        }
        Command::Catalog { tag, gamma, field } => {
            let field = parse_field(&field)?;
            let Some(tag) = tag else {
                let tags: Vec<String> = FamilyTag::samples().iter().map(|t| t.to_string()).collect();
                return Ok(json!({
                    "tags": tags,
                    "parameters": {
                        "Abelian(n)": "n ≥ 0",
                        "HeisenbergCentral(k,m)": "k ≥ 1, m ≥ 1",
                        "Breadth1Solvable(n)": "n ≥ 2",
                        "L2(n)": "n even, n ≥ 2",
                        "L3(n)": "n odd, n ≥ 1",
                        "L8(γ)": "γ ≠ 0, e.g. L8(1/2) or --tag L8 --gamma 1/2",
                    },
                }));
            };
            let tag = match (tag.trim(), gamma) {
                ("L8", Some(g)) => FamilyTag::L8(
                    Scalar::parse(&g, field).map_err(|e| Failure::Usage(format!("--gamma: {e}")))?,
                ),
                ("L8", None) => return Err(Failure::Usage("--tag L8 needs --gamma".into())),
                (t, Some(_)) => return Err(Failure::Usage(format!("--gamma only applies to L8, not {t}"))),
                (t, None) => t.parse().map_err(|e| Failure::Usage(format!("--tag: {e}")))?,
            };
            Ok(algebra_to_json(&build(&tag, field)?))
        }
        Command::Enumerate { p, n, check, jobs } => {
            let job = move || -> Outcome {
                let visitor = |l: &StructureTensor, b: usize| match check {
                    None => true,
                    Some(Check::Breadth1) => (b == 1) == (l.derived_algebra().dim() == 1),
                    Some(Check::Breadth2) => {
                        !is_solvable(l) || char_breadth2(l).map(|(ok, _)| ok).unwrap_or(false)
                    }
                };
                let st = enumerate_gfp_with(p, n, &EnumOptions::default(), visitor)?;
                let hist: serde_json::Map<String, Value> = st
                    .breadth_histogram
                    .iter()
                    .map(|(b, c)| (b.to_string(), json!(c)))
                    .collect();
                Ok(json!({
                    "p": p,
                    "n": n,
                    "total": st.total,
                    "jacobi_ok": st.jacobi_ok,
                    "breadth_histogram": hist,
                    "check": check.map(|c| match c {
                        Check::Breadth1 => "breadth1",
                        Check::Breadth2 => "breadth2",
                    }),
                    "exceptions": st.flagged,
                }))
            };
            match jobs {
                Some(0) => Err(Failure::Usage("--jobs must be at least 1".into())),
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build()
                    .map_err(|e| Failure::Usage(format!("--jobs: {e}")))?
                    .install(job),
                None => job(),
            }
        }
        Command::Random {
            kind,
            seed,
            m,
            k,
            bound,
            field,
        } => {
            let field = parse_field(&field)?;
            let l = match kind {
                Kind::Solvable => random_solvable((m, k), field, bound, seed)
                    .map_err(|e| Failure::Usage(format!("--m/--k: {e}")))?,
                Kind::Nilpotent => random_nilpotent(seed)?,
                Kind::Mixed => random_mixed_solvable(seed)?,
            };
            Ok(algebra_to_json(&l))
        }
    }
}
