//! Command-line front end: analyze operation tables, compute closures and
//! minimality, run the classifications, check the midpoint algebras, and
//! test homomorphisms. JSON output is the default; `--text` renders the same
//! information for reading.
//!
//! Exit codes: 0 success, 1 a verification anomaly was found, 2 malformed
//! input, 3 element budget exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use minclone::{
    check_small_clone_constraints, classify_three_element, conservative_restriction_profile,
    midpoint_algebra, principal_congruence, satisfies_m1_identities, symmetry_class,
    ternary_closure_with_budget, ternary_hom_check, verify_four_element_tables, CloneError,
    FiniteOperation, HomCheck, MinimalityVerdict, OpFile, SemigroupOp, TernaryPart, DEFAULT_BUDGET,
};
use serde::Serialize;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

mod render;

#[derive(Parser)]
#[command(
    name = "minclone",
    version,
    about = "Majority operations and the clones they generate"
)]
struct Cli {
    /// Emit plain text instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    /// Element budget for closure computations.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Worker threads for the exhaustive scans.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report on one operation table file.
    Analyze { path: PathBuf },
    /// Ternary part generated by the table, with witness terms.
    Closure {
        path: PathBuf,
        /// Write the part export here instead of stdout.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Minimality of the clone generated by a majority table.
    Minimal { path: PathBuf },
    /// Cayley table and idempotents of the nontrivial part under ∗, • or ⊚.
    Semigroup {
        path: PathBuf,
        #[arg(long, value_enum)]
        op: SemigroupArg,
    },
    /// Build and check the n-element midpoint majority algebra.
    An {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        check: Option<AnCheck>,
        /// Principal congruence of a pair, with the merge certificate.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        pair: Option<Vec<u8>>,
        /// Write the operation table here as well.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ternary-part homomorphism from the clone of SRC into the clone of DST.
    Hom { src: PathBuf, dst: PathBuf },
    /// Exhaustive classification of the 729 majority tables on {1,2,3}.
    Classify3 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verification of the twelve four-element reference tables.
    Verify4 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Restriction profile of a conservative minimal majority table.
    Profile { path: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum SemigroupArg {
    Star,
    Bullet,
    Circ,
}

impl From<SemigroupArg> for SemigroupOp {
    fn from(a: SemigroupArg) -> SemigroupOp {
        match a {
            SemigroupArg::Star => SemigroupOp::Star,
            SemigroupArg::Bullet => SemigroupOp::Bullet,
            SemigroupArg::Circ => SemigroupOp::Circ,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AnCheck {
    M1,
    Simple,
    Ideals,
}

enum Failure {
    /// Malformed or unusable input (exit 2).
    Input(String),
    /// Element budget exceeded (exit 3).
    Budget(String),
    /// A verification anomaly: the data contradicts the expected structure
    /// (exit 1).
    Anomaly(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Anomaly(_) => 1,
            Failure::Input(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Budget(m) | Failure::Anomaly(m) => m,
        }
    }
}

fn from_clone_error(e: CloneError) -> Failure {
    match e {
        CloneError::BudgetExceeded(b) => Failure::Budget(format!("element budget {b} exceeded")),
        other => Failure::Input(other.to_string()),
    }
}

fn load_op(path: &Path) -> Result<(FiniteOperation, Option<String>), Failure> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let file: OpFile = serde_json::from_str(&raw)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let name = file.name.clone();
    let op = file
        .into_op()
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok((op, name))
}

/// Writes a line to stdout, treating a closed pipe as a normal exit.
fn print_out(payload: &str) {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    if let Err(e) = writeln!(lock, "{payload}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}

fn emit(payload: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print_out(payload);
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct AnalysisResult {
    schema_version: u32,
    input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    domain: usize,
    arity: usize,
    projection: Option<usize>,
    majority: Option<bool>,
    near_unanimity: Option<bool>,
    conservative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    symmetry: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    stabilizer_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbit_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    part_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    majority_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    minimal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    minimality_witness: Option<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    idempotents: Option<BTreeMap<String, Vec<u8>>>,
}

fn analyze(path: &Path, budget: usize) -> Result<AnalysisResult, Failure> {
    let (op, name) = load_op(path)?;
    let ternary = op.arity() == 3;
    let majority = if ternary {
        Some(op.is_majority().unwrap())
    } else {
        None
    };
    let near_unanimity = if op.arity() >= 3 {
        Some(op.is_near_unanimity().unwrap())
    } else {
        None
    };
    let mut result = AnalysisResult {
        schema_version: 1,
        input: path.display().to_string(),
        name,
        domain: op.domain_size(),
        arity: op.arity(),
        projection: op.is_projection(),
        majority,
        near_unanimity,
        conservative: op.is_conservative(),
        symmetry: None,
        stabilizer_size: None,
        orbit_size: None,
        part_size: None,
        majority_count: None,
        minimal: None,
        minimality_witness: None,
        idempotents: None,
    };
    if ternary {
        let class = symmetry_class(&op).unwrap();
        let stab = minclone::stabilizer(&op).unwrap().len();
        result.symmetry = Some(class.name().to_string());
        result.stabilizer_size = Some(stab);
        result.orbit_size = Some(6 / stab);
    }
    if majority == Some(true) {
        let outcome = minclone::clone::is_minimal_majority_clone_with_budget(&op, budget)
            .map_err(from_clone_error)?;
        result.part_size = Some(outcome.part.len());
        result.majority_count = Some(outcome.part.majority_count());
        match &outcome.verdict {
            MinimalityVerdict::Minimal { .. } => result.minimal = Some(true),
            MinimalityVerdict::NotMinimal { witness_index, .. } => {
                result.minimal = Some(false);
                result.minimality_witness =
                    Some(outcome.part.element(*witness_index).values().to_vec());
            }
        }
        let nontrivial: Vec<FiniteOperation> = outcome.part.elements()[3..].to_vec();
        let mut idempotents = BTreeMap::new();
        for which in [SemigroupOp::Star, SemigroupOp::Bullet, SemigroupOp::Circ] {
            let idem = minclone::find_idempotent(&nontrivial, which)
                .map_err(|e| Failure::Input(e.to_string()))?;
            idempotents.insert(which.name().to_string(), idem.values().to_vec());
        }
        result.idempotents = Some(idempotents);
    }
    Ok(result)
}

fn closure_part(path: &Path, budget: usize) -> Result<TernaryPart, Failure> {
    let (op, _) = load_op(path)?;
    if op.arity() != 3 {
        return Err(Failure::Input(format!(
            "expected a ternary table, got arity {}",
            op.arity()
        )));
    }
    ternary_closure_with_budget(std::slice::from_ref(&op), budget).map_err(from_clone_error)
}

#[derive(Serialize)]
struct MinimalOutput {
    schema_version: u32,
    minimal: bool,
    part_size: usize,
    majority_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_generates: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    majority_checked: Option<usize>,
}

#[derive(Serialize)]
struct SemigroupOutput {
    schema_version: u32,
    op: String,
    size: usize,
    elements: Vec<Vec<u8>>,
    cayley: Vec<Vec<u16>>,
    idempotents: Vec<usize>,
}

#[derive(Serialize)]
struct HomOutput {
    schema_version: u32,
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    images: Option<Vec<Vec<u8>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witnesses: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<HomViolationOutput>,
}

#[derive(Serialize)]
struct HomViolationOutput {
    outer_args: [usize; 3],
    transported: Vec<u8>,
    target_composed: Vec<u8>,
}

#[derive(Serialize)]
struct AnOutput {
    schema_version: u32,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pair: Option<(u8, u8)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    collapses_to_full: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    blocks: Option<Vec<Vec<u8>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    merges: Option<Vec<(u8, u8)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    table: Option<OpFile>,
}

fn run(cli: &Cli) -> Result<Option<Failure>, Failure> {
    match &cli.command {
        Command::Analyze { path } => {
            let result = analyze(path, cli.budget)?;
            if cli.text {
                print_out(&render::analysis(&result));
            } else {
                print_out(&serde_json::to_string_pretty(&result).unwrap());
            }
            Ok(None)
        }
        Command::Closure { path, export } => {
            let part = closure_part(path, cli.budget)?;
            let payload = if cli.text {
                render::part(&part)
            } else {
                serde_json::to_string_pretty(&part.to_export()).unwrap()
            };
            emit(&payload, export.as_deref())?;
            Ok(None)
        }
        Command::Minimal { path } => {
            let (op, _) = load_op(path)?;
            if !op
                .is_majority()
                .map_err(|e| Failure::Input(e.to_string()))?
            {
                return Err(Failure::Input("not a majority operation".into()));
            }
            let outcome = minclone::clone::is_minimal_majority_clone_with_budget(&op, cli.budget)
                .map_err(from_clone_error)?;
            let out = match &outcome.verdict {
                MinimalityVerdict::Minimal { majority_indices } => MinimalOutput {
                    schema_version: 1,
                    minimal: true,
                    part_size: outcome.part.len(),
                    majority_count: outcome.part.majority_count(),
                    witness: None,
                    witness_generates: None,
                    majority_checked: Some(majority_indices.len()),
                },
                MinimalityVerdict::NotMinimal {
                    witness_index,
                    generated_size,
                } => MinimalOutput {
                    schema_version: 1,
                    minimal: false,
                    part_size: outcome.part.len(),
                    majority_count: outcome.part.majority_count(),
                    witness: Some(outcome.part.element(*witness_index).values().to_vec()),
                    witness_generates: Some(*generated_size),
                    majority_checked: None,
                },
            };
            if cli.text {
                print_out(&render::minimal(&out));
            } else {
                print_out(&serde_json::to_string_pretty(&out).unwrap());
            }
            Ok(None)
        }
        Command::Semigroup { path, op } => {
            let part = closure_part(path, cli.budget)?;
            let nontrivial: Vec<FiniteOperation> = part.elements()[3..].to_vec();
            if nontrivial.is_empty() {
                return Err(Failure::Input("the part has no nontrivial elements".into()));
            }
            let which: SemigroupOp = (*op).into();
            let n = nontrivial.len();
            let flat = minclone::symmetry::cayley_table(&nontrivial, which)
                .map_err(|e| Failure::Input(e.to_string()))?;
            let cayley: Vec<Vec<u16>> = (0..n).map(|a| flat[a * n..(a + 1) * n].to_vec()).collect();
            let idempotents: Vec<usize> =
                (0..n).filter(|&a| flat[a * n + a] as usize == a).collect();
            let out = SemigroupOutput {
                schema_version: 1,
                op: which.name().to_string(),
                size: n,
                elements: nontrivial.iter().map(|e| e.values().to_vec()).collect(),
                cayley,
                idempotents,
            };
            if cli.text {
                print_out(&render::semigroup(&out));
            } else {
                print_out(&serde_json::to_string_pretty(&out).unwrap());
            }
            Ok(None)
        }
        Command::An {
            n,
            check,
            pair,
            out,
        } => {
            if *n < 2 {
                return Err(Failure::Input("need n >= 2".into()));
            }
            if *n > 64 {
                return Err(Failure::Input(
                    "n > 64 is out of the supported range".into(),
                ));
            }
            let op = midpoint_algebra(*n);
            let mut result = AnOutput {
                schema_version: 1,
                n: *n,
                check: None,
                holds: None,
                pair: None,
                collapses_to_full: None,
                blocks: None,
                merges: None,
                table: None,
            };
            match check {
                Some(AnCheck::M1) => {
                    result.check = Some("m1".into());
                    result.holds = Some(satisfies_m1_identities(&op).unwrap());
                }
                Some(AnCheck::Simple) => {
                    result.check = Some("simple".into());
                    result.holds = Some(minclone::is_simple(&op));
                }
                Some(AnCheck::Ideals) => {
                    result.check = Some("ideals".into());
                    let mut all_intervals = true;
                    for a in 1..=*n as u8 {
                        for b in a + 1..=*n as u8 {
                            let ideal = minclone::ideal_closure(&op, &[a, b])
                                .map_err(|e| Failure::Input(e.to_string()))?;
                            let lo = *ideal.first().unwrap();
                            let hi = *ideal.last().unwrap();
                            if ideal != (lo..=hi).collect::<Vec<u8>>() {
                                all_intervals = false;
                            }
                        }
                    }
                    result.holds = Some(all_intervals);
                }
                None => {}
            }
            if let Some(p) = pair {
                let (a, b) = (p[0], p[1]);
                let pc =
                    principal_congruence(&op, a, b).map_err(|e| Failure::Input(e.to_string()))?;
                result.pair = Some((a, b));
                result.collapses_to_full = Some(pc.partition.is_full());
                result.blocks = Some(pc.partition.blocks());
                result.merges = Some(pc.merges);
            }
            if check.is_none() && pair.is_none() || out.is_some() {
                result.table = Some(OpFile::from_op(&op, Some(format!("an_{n}"))));
            }
            if let Some(path) = out {
                let table = serde_json::to_string_pretty(result.table.as_ref().unwrap()).unwrap();
                emit(&format!("{table}\n"), Some(path))?;
                result.table = None;
            }
            if cli.text {
                print_out(&render::an(&result));
            } else {
                print_out(&serde_json::to_string_pretty(&result).unwrap());
            }
            Ok(None)
        }
        Command::Hom { src, dst } => {
            let (m, _) = load_op(src)?;
            let (f, _) = load_op(dst)?;
            let check = ternary_hom_check(&m, &f, cli.budget).map_err(from_clone_error)?;
            let out = match check {
                HomCheck::Hom(map) => HomOutput {
                    schema_version: 1,
                    found: true,
                    witnesses: Some(
                        map.source
                            .witnesses()
                            .iter()
                            .map(|w| w.to_prefix(1))
                            .collect(),
                    ),
                    images: Some(map.images.iter().map(|i| i.values().to_vec()).collect()),
                    violation: None,
                },
                HomCheck::Violation { violation, .. } => HomOutput {
                    schema_version: 1,
                    found: false,
                    images: None,
                    witnesses: None,
                    violation: Some(HomViolationOutput {
                        outer_args: violation.args,
                        transported: violation.transported.values().to_vec(),
                        target_composed: violation.target_composed.values().to_vec(),
                    }),
                },
            };
            if cli.text {
                print_out(&render::hom(&out));
            } else {
                print_out(&serde_json::to_string_pretty(&out).unwrap());
            }
            Ok(None)
        }
        Command::Classify3 { out } => {
            let report = classify_three_element(cli.threads);
            let payload = if cli.text {
                render::classification(&report)
            } else {
                serde_json::to_string_pretty(&report).unwrap()
            };
            emit(&payload, out.as_deref())?;
            let few = check_small_clone_constraints(&report);
            if !report.anomalies.is_empty() || !few.passed() {
                return Ok(Some(Failure::Anomaly(format!(
                    "{} anomalies, {} constraint violations",
                    report.anomalies.len(),
                    few.violations.len()
                ))));
            }
            Ok(None)
        }
        Command::Verify4 { out } => {
            let report = verify_four_element_tables().map_err(|e| Failure::Input(e.to_string()))?;
            let payload = if cli.text {
                render::classification(&report)
            } else {
                serde_json::to_string_pretty(&report).unwrap()
            };
            emit(&payload, out.as_deref())?;
            let few = check_small_clone_constraints(&report);
            if !report.anomalies.is_empty() || !few.passed() {
                return Ok(Some(Failure::Anomaly(format!(
                    "{} anomalies, {} constraint violations",
                    report.anomalies.len(),
                    few.violations.len()
                ))));
            }
            Ok(None)
        }
        Command::Profile { path } => {
            let (op, _) = load_op(path)?;
            let profile =
                conservative_restriction_profile(&op).map_err(|e| Failure::Input(e.to_string()))?;
            if cli.text {
                print_out(&render::profile(&profile));
            } else {
                print_out(&serde_json::to_string_pretty(&profile).unwrap());
            }
            Ok(None)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(anomaly)) => {
            eprintln!("error: {}", anomaly.message());
            ExitCode::from(anomaly.code())
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
