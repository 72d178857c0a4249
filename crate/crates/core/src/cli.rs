//! Command-line front end. [`run`] takes the argument vector and returns the
//! exit code together with what should go to stdout and stderr, so the
//! binary is a thin shell around it.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::closure::{closure_signature_with, signatures_match, FramingConvention};
use crate::dsl;
use crate::error::BraidError;
use crate::framed::FramedBraid;
use crate::fuzz::{self, FuzzConfig, FuzzMove};
use crate::hilden::{verify_relation_suite, GeneratorDictionary, Suite};
use crate::moves::{self, InsertSide, MoveDescriptor, MoveKind};
use crate::plat::{plat_signature, plat_trivializes};
use crate::word::Permutation;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "fbk",
    version,
    about = "Framed braid toolkit: normal forms, closures, moves, Hilden relations"
)]
struct Cli {
    /// Indent JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Framed normal form t_1^λ1 … t_n^λn Δ^inf A_1 … A_k.
    Nf {
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// Equality of two framed braids.
    Eq {
        #[arg(long)]
        n: usize,
        left: String,
        right: String,
    },
    /// Components, framings and linking numbers of the standard closure.
    Closure {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Convention::Blackboard)]
        convention: Convention,
        word: String,
    },
    /// Plat closure invariants (even strand count).
    Plat {
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// Apply one move and report the result.
    Move {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        split: usize,
        #[arg(long, default_value_t = 1)]
        index: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        sign: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = Side::After)]
        side: Side,
        /// Conjugating word for `--kind conj`.
        #[arg(long)]
        conjugator: Option<String>,
        word: String,
    },
    /// Verify a relation suite on the built-in generators.
    HildenVerify {
        #[arg(long)]
        suite: Suite,
        /// Half strand count.
        #[arg(long)]
        n: usize,
        /// Extra generator words, one `name = word` per line.
        #[arg(long)]
        dict: Option<PathBuf>,
    },
    /// Solve δ_i − r_i = κ_i − r_{p(i)} for r.
    Transfer {
        /// JSON object {"perm": [images], "delta": [...], "kappa": [...]} or array [perm, delta, kappa].
        #[arg(required_unless_present = "file")]
        input: Option<String>,
        #[arg(long, conflicts_with = "input")]
        file: Option<PathBuf>,
    },
    /// Randomized move-invariance trials.
    Fuzz {
        /// Overridden by the FBK_SEED environment variable.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        len_min: usize,
        #[arg(long, default_value_t = 15)]
        len_max: usize,
        /// Weighted move list, e.g. `rl,int-rl=2,double-coset`.
        #[arg(long, default_value = "rl,int-rl")]
        moves: String,
        /// Plain L and M moves on framed input, expected to shift framing by ±1.
        #[arg(long, conflicts_with = "moves")]
        negative_control: bool,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Convention {
    Blackboard,
    Integer,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Side {
    After,
    Before,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Kind {
    LOver,
    LUnder,
    RlOver,
    RlUnder,
    IntRlOver,
    IntRlUnder,
    M,
    Rm,
    Conj,
    TauConj,
}

impl From<Kind> for MoveKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::LOver => MoveKind::LOver,
            Kind::LUnder => MoveKind::LUnder,
            Kind::RlOver => MoveKind::RlOver,
            Kind::RlUnder => MoveKind::RlUnder,
            Kind::IntRlOver => MoveKind::IntRlOver,
            Kind::IntRlUnder => MoveKind::IntRlUnder,
            Kind::M => MoveKind::M,
            Kind::Rm => MoveKind::Rm,
            Kind::Conj => MoveKind::Conjugation,
            Kind::TauConj => MoveKind::TauConjugation,
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TransferInput {
    Object {
        #[serde(alias = "p")]
        perm: Vec<usize>,
        delta: Vec<i64>,
        kappa: Vec<i64>,
    },
    Triple(Vec<usize>, Vec<i64>, Vec<i64>),
}

enum Failure {
    Usage(String),
}

impl From<BraidError> for Failure {
    fn from(e: BraidError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn framed(text: &str, n: usize) -> Result<FramedBraid, Failure> {
    Ok(FramedBraid::normalize(&dsl::parse(text, n)?))
}

fn components_json<T: Serialize>(components: &[T]) -> Value {
    serde_json::to_value(components).expect("plain data")
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(cli.command) {
        Ok((value, ok)) => {
            let mut stdout = if cli.pretty {
                serde_json::to_string_pretty(&value)
            } else {
                serde_json::to_string(&value)
            }
            .expect("json values serialize");
            stdout.push('\n');
            Output {
                code: if ok { EXIT_OK } else { EXIT_FAILED },
                stdout,
                stderr: String::new(),
            }
        }
        Err(Failure::Usage(msg)) => Output {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn execute(command: Command) -> Result<(Value, bool), Failure> {
    match command {
        Command::Nf { n, word } => {
            let b = framed(&word, n)?;
            let nf = b.normal_form();
            let factors: Vec<&[usize]> =
                nf.garside.factors.iter().map(Permutation::images).collect();
            let spelled = FramedBraid::new(nf.lambda.clone(), nf.garside.to_word())?;
            Ok((
                json!({
                    "n": n,
                    "lambda": nf.lambda,
                    "inf": nf.garside.inf,
                    "factors": factors,
                    "word": dsl::print(&spelled.spell()),
                }),
                true,
            ))
        }
        Command::Eq { n, left, right } => {
            let equal = framed(&left, n)?.framed_equal(&framed(&right, n)?)?;
            Ok((json!({ "equal": equal }), true))
        }
        Command::Closure {
            n,
            convention,
            word,
        } => {
            let convention = match convention {
                Convention::Blackboard => FramingConvention::Blackboard,
                Convention::Integer => FramingConvention::Integer,
            };
            let sig = closure_signature_with(&framed(&word, n)?, convention)?;
            Ok((
                json!({
                    "component_count": sig.component_count,
                    "components": components_json(&sig.components),
                    "linking": sig.linking,
                }),
                true,
            ))
        }
        Command::Plat { n, word } => {
            let b = framed(&word, n)?;
            let sig = plat_signature(&b)?;
            Ok((
                json!({
                    "component_count": sig.component_count,
                    "components": components_json(&sig.components),
                    "abs_linking": sig.abs_linking,
                    "zero_framed_unlink": plat_trivializes(&b)?,
                }),
                true,
            ))
        }
        Command::Move {
            n,
            kind,
            split,
            index,
            sign,
            k,
            side,
            conjugator,
            word,
        } => {
            let a = framed(&word, n)?;
            let kind = MoveKind::from(kind);
            let mut d = MoveDescriptor {
                kind,
                split,
                index,
                sign,
                k,
                ..MoveDescriptor::new(kind)
            };
            d.side = match side {
                Side::After => InsertSide::After,
                Side::Before => InsertSide::Before,
            };
            if let Some(c) = conjugator {
                d.conjugator = Some(framed(&c, n)?);
            }
            let result = moves::apply_move(&a, &d)?;
            let convention = match kind {
                MoveKind::IntRlOver | MoveKind::IntRlUnder => FramingConvention::Integer,
                _ => FramingConvention::Blackboard,
            };
            let preserved = signatures_match(
                &closure_signature_with(&a, convention)?,
                &closure_signature_with(&result, convention)?,
            );
            let mut out = json!({
                "input": dsl::print(&a.spell()),
                "descriptor": d,
                "output": dsl::print(&result.spell()),
                "strands": result.strands(),
                "signature_preserved": preserved,
            });
            if kind == MoveKind::TauConjugation {
                let chain = moves::tau_conjugation_as_rl_sequence(&a, index, sign)?;
                let steps: Vec<Value> = chain
                    .iter()
                    .map(|link| {
                        json!({ "step": link.step.name(), "element": dsl::print(&link.element.spell()) })
                    })
                    .collect();
                out["chain"] = Value::Array(steps);
            }
            Ok((out, true))
        }
        Command::HildenVerify { suite, n, dict } => {
            if n == 0 {
                return Err(Failure::Usage("n must be at least 1".into()));
            }
            let mut d = GeneratorDictionary::builtin(n);
            if let Some(path) = dict {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
                d.load(&text)?;
            }
            let reports = verify_relation_suite(&d, suite);
            let ok = reports.iter().all(|r| r.holds || r.skipped);
            Ok((serde_json::to_value(&reports).expect("plain data"), ok))
        }
        Command::Transfer { input, file } => {
            let text = match (input, file) {
                (Some(t), _) => t,
                (None, Some(path)) => std::fs::read_to_string(&path)
                    .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            let t: TransferInput = serde_json::from_str(&text).map_err(|_| {
                Failure::Usage("bad transfer input: expected {\"perm\", \"delta\", \"kappa\"} or [perm, delta, kappa]".into())
            })?;
            let (perm, delta, kappa) = match t {
                TransferInput::Object { perm, delta, kappa }
                | TransferInput::Triple(perm, delta, kappa) => (perm, delta, kappa),
            };
            let p = Permutation::from_images(perm)?;
            let r = moves::solve_framing_transfer(&p, &delta, &kappa)?;
            Ok((json!({ "r": r }), true))
        }
        Command::Fuzz {
            seed,
            trials,
            n_min,
            n_max,
            len_min,
            len_max,
            moves,
            negative_control,
        } => {
            let seed = match std::env::var("FBK_SEED") {
                Ok(s) => s
                    .trim()
                    .parse()
                    .map_err(|_| Failure::Usage(format!("FBK_SEED is not a u64: {s:?}")))?,
                Err(_) => seed,
            };
            let move_mix = if negative_control {
                vec![(FuzzMove::NegL, 1), (FuzzMove::NegM, 1)]
            } else {
                fuzz::parse_move_mix(&moves).map_err(Failure::Usage)?
            };
            let config = FuzzConfig {
                seed,
                trials,
                n_range: (n_min, n_max),
                word_length_range: (len_min, len_max),
                move_mix,
            };
            let report = fuzz::fuzz(&config)?;
            let ok = report.all_passed();
            Ok((serde_json::to_value(&report).expect("plain data"), ok))
        }
    }
}
