//! `softgamma` command-line front end.
//!
//! Exit codes: 0 success, 1 a check or operation failed on well-formed
//! input, 2 unreadable input or bad usage. Machine-readable output goes to
//! stdout only.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use softgamma::algebra::{check_gamma_semiring, enumerate_sub_gamma_semirings, GammaSemiring, Mode};
use softgamma::catalog::{example, EXAMPLE_NAMES};
use softgamma::harness::{fuzz_theorem, replay, BaseDescriptor, InstanceSpec, Policy, TheoremId};
use softgamma::io::{self, to_json_text, RelationDoc, SoftFunctionDoc, SoftSetDoc, StructureDoc};
use softgamma::soft::{
    and_intersect, cartesian_product, extended_intersect, extended_union, or_union, restricted_intersect,
    restricted_union, soft_image, soft_preimage, soft_set_from_relation, IndexedFamily, SoftSet,
};
use softgamma::soft_gamma::{is_soft_gamma_semiring, Verdict};
use softgamma::{Error, ElemSet};

#[derive(Parser)]
#[command(name = "softgamma", version, about = "Soft sets over finite Γ-semirings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Γ-semiring axioms of a structure file.
    Validate {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Strict)]
        mode: ModeArg,
    },
    /// Apply a soft-set operation.
    ///
    /// `image` and `preimage` take FUNCTION SOURCE TARGET; the others take
    /// two or more soft-set files.
    Op {
        #[arg(value_enum)]
        kind: OpKind,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Decide whether a soft set is a soft Γ-semiring over a structure.
    SoftCheck { structure: PathBuf, soft_set: PathBuf },
    /// List every sub-Γ-semiring of a structure.
    Subsemirings { file: PathBuf },
    /// Build the soft set ψ(y) = {s : (y,α,s) ∈ R for all α} from a relation.
    FromRelation {
        structure: PathBuf,
        relation: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Fuzz a closure statement on seeded random instances.
    Theorem {
        #[arg(value_parser = parse_theorem)]
        id: TheoremId,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Disable the distinguishing hypothesis; success means a
        /// counterexample was found.
        #[arg(long)]
        drop_hypothesis: bool,
        /// zn, minmax, matrix, mixed, z8, minmax5, matrix2x1x2, zn:N:g,g[:strict],
        /// minmax:N:g,g or matrix:P:R:C.
        #[arg(long, default_value = "mixed", value_parser = parse_family)]
        family: BaseDescriptor,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        /// Re-check the instance stored in a verdict, counterexample or
        /// instance file instead of fuzzing.
        #[arg(long, conflicts_with_all = ["trials", "seed", "family"])]
        replay: Option<PathBuf>,
    },
    /// Emit a named example structure.
    Example {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(EXAMPLE_NAMES))]
        name: String,
        /// Write `<name>.json` (and `<name>.soft.json`) into this directory.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Strict,
    Weak,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OpKind {
    Rint,
    Eint,
    Runion,
    Eunion,
    And,
    Or,
    Prod,
    Image,
    Preimage,
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<BaseDescriptor, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed command: exit code and message for stderr.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(if e.is_domain() { 1 } else { 2 }, e.to_string())
    }
}

/// Input errors: anything that stops a file from being read as a document.
fn input(e: Error) -> Failure {
    Failure(2, e.to_string())
}

type CmdResult = Result<u8, Failure>;

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure(2, format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_structure(path: &Path) -> Result<GammaSemiring, Failure> {
    io::read_structure(path).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
}

fn read_soft_set(path: &Path) -> Result<SoftSet, Failure> {
    io::read_soft_set(path).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    io::read(path).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
}

fn soft_text(ss: &SoftSet) -> String {
    to_json_text(&SoftSetDoc::from_soft_set(ss))
}

fn cmd_validate(file: &Path, mode: ModeArg) -> CmdResult {
    let gs = read_structure(file)?;
    let mode = match mode {
        ModeArg::Strict => Mode::Strict,
        ModeArg::Weak => Mode::Weak,
    };
    let report = check_gamma_semiring(&gs, mode).map_err(input)?;
    emit(&to_json_text(&report), None)?;
    Ok(if report.passed { 0 } else { 1 })
}

fn cmd_op(kind: OpKind, files: &[PathBuf], output: Option<&Path>) -> CmdResult {
    let result = match kind {
        OpKind::Image | OpKind::Preimage => {
            let [fun, src, tgt] = files else {
                return Err(Failure(2, "image and preimage take FUNCTION SOURCE TARGET".into()));
            };
            let doc: SoftFunctionDoc = read_json(fun)?;
            let (src, tgt) = (read_soft_set(src)?, read_soft_set(tgt)?);
            if kind == OpKind::Image {
                soft_image(&doc.bind(src, tgt)?)
            } else {
                preimage(&doc, &src, &tgt)?
            }
        }
        _ => {
            if files.len() < 2 {
                return Err(Failure(2, "this operation takes at least two soft-set files".into()));
            }
            let members = files.iter().map(|f| read_soft_set(f)).collect::<Result<Vec<_>, _>>()?;
            if kind == OpKind::Prod {
                cartesian_product(&members)?
            } else {
                let family = IndexedFamily::new(members).map_err(input)?;
                match kind {
                    OpKind::Rint => restricted_intersect(&family)?,
                    OpKind::Eint => extended_intersect(&family)?,
                    OpKind::Runion => restricted_union(&family)?,
                    OpKind::Eunion => extended_union(&family)?,
                    OpKind::And => and_intersect(&family)?,
                    OpKind::Or => or_union(&family)?,
                    _ => unreachable!(),
                }
            }
        }
    };
    emit(&soft_text(&result), output)?;
    Ok(0)
}

/// `f⁻¹(σ(g(ω)))` over the parameters of `src`; only the universe and
/// parameters of `src` are used.
fn preimage(doc: &SoftFunctionDoc, src: &SoftSet, tgt: &SoftSet) -> Result<SoftSet, Failure> {
    let lookup = |pairs: &[(softgamma::Label, softgamma::Label)], from: &softgamma::Label, what: &str| {
        pairs
            .iter()
            .find(|(a, _)| a == from)
            .map(|(_, b)| b.clone())
            .ok_or_else(|| Failure(2, format!("{what} map has no entry for `{from}`")))
    };
    let carrier = src
        .universe()
        .labels()
        .iter()
        .map(|x| {
            let y = lookup(&doc.carrier_map, x, "carrier")?;
            tgt.universe().require(&y, "target element").map_err(input)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let params = src.parameter_list();
    let g = params
        .iter()
        .map(|w| lookup(&doc.parameter_map, w, "parameter"))
        .collect::<Result<Vec<_>, _>>()?;
    soft_preimage(src.universe(), &carrier, &params, &g, tgt).map_err(input)
}

/// Reads a soft set over the structure's carrier; a different universe is an
/// input error.
fn soft_set_over(gs: &GammaSemiring, path: &Path) -> Result<SoftSet, Failure> {
    let doc: SoftSetDoc = read_json(path)?;
    if doc.universe != gs.elements().labels() {
        return Err(Failure(2, Error::UniverseMismatch.to_string()));
    }
    doc.into_soft_set_over(Some(gs.elements()))
        .map_err(|e| Failure(2, format!("{}: {e}", path.display())))
}

fn cmd_soft_check(structure: &Path, soft: &Path) -> CmdResult {
    let gs = read_structure(structure)?;
    let ss = soft_set_over(&gs, soft)?;
    let witness = is_soft_gamma_semiring(&gs, &ss).map_err(input)?;
    emit(&to_json_text(&witness), None)?;
    Ok(if witness.verdict { 0 } else { 1 })
}

fn cmd_subsemirings(file: &Path) -> CmdResult {
    let gs = read_structure(file)?;
    let subs = enumerate_sub_gamma_semirings(&gs)?;
    let labels = |t: &ElemSet| t.iter().map(|i| gs.elements().label(i).clone()).collect::<Vec<_>>();
    let doc = json!({
        "structure": gs.name(),
        "count": subs.len(),
        "subsemirings": subs.iter().map(labels).collect::<Vec<_>>(),
    });
    emit(&to_json_text(&doc), None)?;
    Ok(0)
}

fn cmd_from_relation(structure: &Path, relation: &Path, output: Option<&Path>) -> CmdResult {
    let gs = read_structure(structure)?;
    let doc: RelationDoc = read_json(relation)?;
    let rel = doc.into_relation(&gs).map_err(input)?;
    let ss = soft_set_from_relation(&rel, &gs).map_err(input)?;
    emit(&soft_text(&ss), output)?;
    Ok(0)
}

/// Exit 0 when the run matches what was asked for: no counterexample, or
/// with `drop_hypothesis` at least one.
fn theorem_exit(found_counterexample: bool, drop_hypothesis: bool) -> u8 {
    if found_counterexample == drop_hypothesis {
        0
    } else {
        1
    }
}

#[derive(Serialize)]
struct ReplayReport {
    theorem: TheoremId,
    drop_hypothesis: bool,
    #[serde(flatten)]
    outcome: softgamma::harness::Outcome,
}

fn cmd_theorem(
    id: TheoremId,
    trials: usize,
    seed: u64,
    drop_hypothesis: bool,
    family: BaseDescriptor,
    output: Option<&Path>,
    replay_file: Option<&Path>,
) -> CmdResult {
    if let Some(path) = replay_file {
        let doc: Value = read_json(path)?;
        let outcome = replay(id, &doc, drop_hypothesis).map_err(input)?;
        let failed = outcome.verdict == Verdict::Fail;
        let report = ReplayReport {
            theorem: id,
            drop_hypothesis,
            outcome,
        };
        emit(&to_json_text(&report), output)?;
        return Ok(theorem_exit(failed, drop_hypothesis));
    }
    let template = InstanceSpec::new(family, Policy::default(), seed);
    let verdict = fuzz_theorem(id, trials, &template, drop_hypothesis)?;
    emit(&to_json_text(&verdict), output)?;
    Ok(theorem_exit(verdict.failures > 0, drop_hypothesis))
}

fn cmd_example(name: &str, output: Option<&Path>) -> CmdResult {
    let ex = example(name).map_err(input)?;
    let structure = StructureDoc::from_structure(&ex.structure);
    let soft = ex.soft_set.as_ref().map(SoftSetDoc::from_soft_set);
    match output {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| Failure(2, format!("{}: {e}", dir.display())))?;
            emit(&to_json_text(&structure), Some(&dir.join(format!("{name}.json"))))?;
            if let Some(soft) = soft {
                emit(&to_json_text(&soft), Some(&dir.join(format!("{name}.soft.json"))))?;
            }
        }
        None => {
            let mut doc = json!({ "structure": structure });
            if let Some(soft) = soft {
                doc["soft_set"] = serde_json::to_value(soft).map_err(|e| Failure(2, e.to_string()))?;
            }
            emit(&to_json_text(&doc), None)?;
        }
    }
    Ok(0)
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Validate { file, mode } => cmd_validate(&file, mode),
        Command::Op { kind, files, output } => cmd_op(kind, &files, output.as_deref()),
        Command::SoftCheck { structure, soft_set } => cmd_soft_check(&structure, &soft_set),
        Command::Subsemirings { file } => cmd_subsemirings(&file),
        Command::FromRelation {
            structure,
            relation,
            output,
        } => cmd_from_relation(&structure, &relation, output.as_deref()),
        Command::Theorem {
            id,
            trials,
            seed,
            drop_hypothesis,
            family,
            output,
            replay,
        } => cmd_theorem(
            id,
            trials,
            seed,
            drop_hypothesis,
            family,
            output.as_deref(),
            replay.as_deref(),
        ),
        Command::Example { name, output } => cmd_example(&name, output.as_deref()),
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors and 0 for --help/--version.
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("softgamma: {msg}");
            ExitCode::from(code)
        }
    }
}
