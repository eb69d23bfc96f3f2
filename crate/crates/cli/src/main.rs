use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use pbp_core::abels::acentral_check;
use pbp_core::bs::{bs_presentable, verify_witness, witness_subgroup, BsGroup};
use pbp_core::classifier::{classify, ClassifyError, GroupDescriptor};
use pbp_core::coxeter::{classify as classify_components, coxeter_presentable, CoxeterError, CoxeterMatrix};
use pbp_core::lie::{catalogue, lie_presentable, LieAlgebra, LieError};
use pbp_core::presentation::{
    abelianization, coset_enumerate, reidemeister_schreier, rs_counts, FinitePresentation, PermutationHom,
};
use pbp_core::verdict::{explain, Verdict};

#[derive(Parser)]
#[command(name = "pbp", version, about = "Decide presentability by products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a group descriptor.
    Classify {
        #[arg(short, long)]
        input: PathBuf,
        /// Print the trace as text instead of JSON.
        #[arg(long)]
        explain: bool,
    },
    /// Decide a Coxeter group from its matrix.
    Coxeter {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        explain: bool,
    },
    /// Decide BS(m, n).
    #[command(allow_negative_numbers = true)]
    Bs {
        m: i64,
        n: i64,
        /// Run the checks on the finite-index witness (needs |m| = |n| >= 2).
        #[arg(long)]
        witness: bool,
        /// Word length for the bounded freeness check.
        #[arg(long, default_value_t = 6)]
        verify_bound: usize,
    },
    /// Decide a Lie algebra given as a JSON file or a catalogue name.
    #[command(group(clap::ArgGroup::new("source").required(true).args(["input", "catalogue"])))]
    Lie {
        /// JSON algebra file; a catalogue name is accepted here too.
        #[arg(short, long)]
        input: Option<String>,
        /// e.g. `sol`, `so(2,1)`, `vr(2,1,1)`, `sl2 + af`.
        #[arg(long)]
        catalogue: Option<String>,
        #[arg(long)]
        explain: bool,
    },
    /// Reidemeister-Schreier presentation and abelianization of a kernel.
    Subgroup {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        hom: PathBuf,
    },
    /// Acentrality check for the diagonal element over Z[1/p].
    Abels {
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        exponent: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Delegate(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<CoxeterError> for Failure {
    fn from(e: CoxeterError) -> Self {
        match e {
            CoxeterError::InvalidMatrix(_) | CoxeterError::Json(_) => Failure::Input(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        match e {
            LieError::Verification(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn input<E: ToString>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

// Write errors such as a closed pipe are ignored.
fn emit(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn print(v: &Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("json")));
}

fn show(v: &Verdict, text: bool) {
    if text {
        emit(&explain(v));
    } else {
        print(&v.to_json());
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify { input: path, explain } => {
            let d = GroupDescriptor::from_json(&read(&path)?)?;
            show(&classify(&d)?, explain);
        }
        Command::Coxeter { input: path, explain } => {
            let m = CoxeterMatrix::from_json(&read(&path)?)?;
            let v = coxeter_presentable(&m)?;
            if explain {
                show(&v, true);
            } else {
                print(&json!({"components": classify_components(&m)?, "verdict": v.to_json()}));
            }
        }
        Command::Bs { m, n, witness, verify_bound } => {
            let v = bs_presentable(m, n).map_err(input)?;
            if !witness {
                print(&v.to_json());
                return Ok(());
            }
            let b = BsGroup::new(m, n).map_err(input)?;
            let eta = if m == n { 1 } else { -1 };
            if m.abs() != n.abs() {
                return Err(Failure::Input(format!("no witness: |{m}| != |{n}|")));
            }
            let w = witness_subgroup(m.abs(), eta).map_err(input)?;
            let report = verify_witness(&b, &w, verify_bound).map_err(input)?;
            print(&json!({"verdict": v.to_json(), "witness_report": report.to_json()}));
            if !report.all_passed() {
                return Err(Failure::Verification("witness checks failed".into()));
            }
        }
        Command::Lie { input, catalogue: name, explain } => {
            let l = match (input, name) {
                (Some(src), _) if Path::new(&src).exists() => LieAlgebra::from_json(&read(Path::new(&src))?)?,
                (Some(name), _) | (None, Some(name)) => catalogue::by_name(&name)?,
                (None, None) => unreachable!("clap requires a source"),
            };
            show(&lie_presentable(&l)?.verdict, explain);
        }
        Command::Subgroup { input: path, hom } => {
            let p = FinitePresentation::from_json(&read(&path)?).map_err(input)?;
            let pi = PermutationHom::from_json(&read(&hom)?, &p).map_err(input)?;
            let table = coset_enumerate(&p, &pi).map_err(input)?;
            let sub = reidemeister_schreier(&p, &table).map_err(input)?;
            let ab = abelianization(&sub.presentation);
            let d = table.index() as u64;
            let (a, b) = (p.generator_count() as u64, p.relator_count() as u64);
            print(&json!({
                "index": d,
                "presentation": sub.presentation.to_json(),
                "generators_in_parent": sub.generators_in_parent.iter().map(|w| p.render(w)).collect::<Vec<_>>(),
                "expected_counts": rs_counts(a, b, d),
                "abelianization": {
                    "free_rank": ab.free_rank,
                    "torsion": ab.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                },
            }));
        }
        Command::Abels { prime, trials, exponent, seed } => {
            let r = acentral_check(prime, 1, exponent, trials, seed).map_err(input)?;
            print(&r.to_json());
            if !r.passed() {
                return Err(Failure::Verification("acentrality check failed".into()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
    }
}
