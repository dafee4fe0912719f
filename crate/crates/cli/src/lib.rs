//! Command-line front end for `ezd-core`: ring files, reports and the corpus census.

pub mod census;
pub mod report;
pub mod ringfile;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ezd_core::classify::classify;
use ezd_core::ezd::{
    analyze_sequence, annihilator_principal_check, pair_test, search, strong_test_tor, tor_periodic, Checks,
    Pool, SearchMode,
};
use ezd_core::ideal::ideal_of;
use ezd_core::koszul::koszul_criterion_check;
use ezd_core::{Error, MonomialOrder};

use crate::report::*;
use crate::ringfile::LoadedRing;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// 1 for bad input, 2 when a size guard refuses the computation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::TooLong { .. } | Error::PoolTooLarge(_)) => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
    Grlex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Grevlex => MonomialOrder::Grevlex,
            OrderArg::Lex => MonomialOrder::Lex,
            OrderArg::Grlex => MonomialOrder::Grlex,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    Minimal,
    Permutable,
    Strong,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Pairs,
    Sequences,
    Minimal,
    Strong,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PoolArg {
    Linear,
    All,
}

#[derive(Debug, Parser)]
#[command(name = "ezd", version, about = "Exact zero-divisors on artinian local rings")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Overrides the monomial order given in the ring file.
    #[arg(long, global = true, value_enum)]
    pub order: Option<OrderArg>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function, socle, Gorenstein and complete-intersection data.
    Analyze { file: PathBuf },
    /// Is X an exact zero-divisor (modulo the optional ideal)?
    Pair {
        file: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long = "mod")]
        modulo: Option<String>,
    },
    /// Sequence test, with optional permutability and strongness checks.
    Seq {
        file: PathBuf,
        #[arg(long)]
        xs: String,
        #[arg(long, value_enum, default_value_t = CheckArg::Minimal)]
        check: CheckArg,
    },
    /// Koszul homology of every prefix compared with the sequence test.
    Koszul {
        file: PathBuf,
        #[arg(long)]
        xs: String,
    },
    /// Tor of R/J against R/(x) for a pair (x, y).
    Tor {
        file: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long = "mod", default_value = "")]
        modulo: String,
    },
    /// Depth-first search for pairs or sequences.
    Search {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, default_value_t = 1)]
        len: usize,
        #[arg(long, value_enum, default_value_t = PoolArg::Linear)]
        pool: PoolArg,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Cross-checks over every `.ring` file in a directory.
    Census { dir: PathBuf },
}

/// What a command produced: the report, and whether its consistency checks held.
pub struct Outcome {
    pub report: Value,
    pub consistent: bool,
}

fn load(file: &std::path::Path, order: Option<OrderArg>) -> Result<LoadedRing, CliError> {
    LoadedRing::load(file, order.map(Into::into))
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let order = cli.order;
    let done = |report| Ok(Outcome { report, consistent: true });
    match &cli.command {
        Command::Analyze { file } => {
            let lr = load(file, order)?;
            let c = classify(&lr.ring);
            done(envelope(
                "analyze",
                json!({"file": file.display().to_string()}),
                Some(&lr.ring),
                classify_json(&lr.ring, &c),
            ))
        }
        Command::Pair { file, x, modulo } => {
            let lr = load(file, order)?;
            let xe = lr.element(x)?;
            let j = lr.elements(modulo.as_deref().unwrap_or(""))?;
            let ji = ideal_of(&lr.ring, &j);
            let r = pair_test(&lr.ring, &xe, Some(&ji));
            done(envelope(
                "pair",
                json!({"file": file.display().to_string(), "x": x, "mod": modulo}),
                Some(&lr.ring),
                pair_json(&lr.ring, &r),
            ))
        }
        Command::Seq { file, xs, check } => {
            let lr = load(file, order)?;
            let xv = lr.elements(xs)?;
            let checks = Checks {
                permutable: matches!(check, CheckArg::Permutable | CheckArg::All),
                strong: matches!(check, CheckArg::Strong | CheckArg::All),
            };
            let rep = analyze_sequence(&lr.ring, &xv, checks)?;
            let mut payload = sequence_json(&lr.ring, &rep);
            let m = payload.as_object_mut().expect("object");
            if checks.strong {
                m.insert("strong_tor".into(), tor_strong_json(&strong_test_tor(&lr.ring, &xv)?));
            }
            if rep.is_sequence && !xv.is_empty() {
                m.insert(
                    "annihilator".into(),
                    annihilator_json(&lr.ring, &annihilator_principal_check(&lr.ring, &xv)),
                );
            }
            done(envelope(
                "seq",
                json!({"file": file.display().to_string(), "xs": xs, "check": format!("{check:?}").to_lowercase()}),
                Some(&lr.ring),
                payload,
            ))
        }
        Command::Koszul { file, xs } => {
            let lr = load(file, order)?;
            let xv = lr.elements(xs)?;
            let k = koszul_criterion_check(&lr.ring, &xv)?;
            Ok(Outcome {
                consistent: k.agree,
                report: envelope(
                    "koszul",
                    json!({"file": file.display().to_string(), "xs": xs}),
                    Some(&lr.ring),
                    koszul_json(&k),
                ),
            })
        }
        Command::Tor { file, x, y, modulo } => {
            let lr = load(file, order)?;
            let (xe, ye) = (lr.element(x)?, lr.element(y)?);
            let j = ideal_of(&lr.ring, &lr.elements(modulo)?);
            let t = tor_periodic(&lr.ring, &xe, &ye, &j)?;
            done(envelope(
                "tor",
                json!({"file": file.display().to_string(), "x": x, "y": y, "mod": modulo}),
                Some(&lr.ring),
                tor_json(&t),
            ))
        }
        Command::Search {
            file,
            mode,
            len,
            pool,
            limit,
        } => {
            let lr = load(file, order)?;
            let m = match mode {
                ModeArg::Pairs => SearchMode::Pairs,
                ModeArg::Sequences => SearchMode::Sequences,
                ModeArg::Minimal => SearchMode::MinimalSequences,
                ModeArg::Strong => SearchMode::Strong,
            };
            let p = match pool {
                PoolArg::Linear => Pool::LinearForms,
                PoolArg::All => Pool::AllElements,
            };
            let hits = search(&lr.ring, m, *len, &p, *limit)?;
            done(envelope(
                "search",
                json!({
                    "file": file.display().to_string(),
                    "mode": format!("{mode:?}").to_lowercase(),
                    "len": len,
                    "pool": format!("{pool:?}").to_lowercase(),
                    "limit": limit,
                }),
                Some(&lr.ring),
                json!({
                    "count": hits.len(),
                    "hits": hits.iter().map(|h| hit_json(&lr.ring, h)).collect::<Vec<_>>(),
                }),
            ))
        }
        Command::Census { dir } => {
            let c = census::run_census(dir, order.map(Into::into))?;
            Ok(Outcome {
                consistent: c.consistent,
                report: envelope("census", json!({"dir": dir.display().to_string()}), None, c.report),
            })
        }
    }
}

/// Parses arguments, runs the command and renders the report.
/// Returns the exit code and what to print on stdout and stderr.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return (code, String::new(), e.to_string());
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&out.report).expect("serializable") + "\n",
                Format::Text => to_text(&out.report),
            };
            (if out.consistent { 0 } else { 3 }, text, String::new())
        }
        Err(e) => {
            let err = json!({
                "schema_version": SCHEMA_VERSION,
                "error": e.to_string(),
                "exit_code": e.exit_code(),
            });
            (e.exit_code(), serde_json::to_string_pretty(&err).expect("serializable") + "\n", format!("error: {e}\n"))
        }
    }
}
