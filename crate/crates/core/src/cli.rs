//! Command-line front end.
//!
//! Exit codes: 0 yes or success, 1 no, 2 usage or input error, 3 inconclusive.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::decide::{decide, klein_scan, DecisionReport, Obtainable};
use crate::diagram::{modify, schubert_diagram, wedge_site, Modification, PlanarDiagram};
use crate::error::{Error, Result};
use crate::invariants::{alexander, determinant, is_trivial, jones_with_cap, Budget, TrivialityVerdict};
use crate::lens::{canonical_form, DualKnotSpec};
use crate::report::{criterion_line, decision_text, obtainable_name, to_json};
use crate::residue::{longitudinal_criterion, LensParams};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "lens-surgery", version, about = "Lens spaces from surface-slope surgery on doubly primitive knots")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate the residue criterion for K(L(p,q); u).
    Criterion {
        p: i64,
        q: i64,
        u: i64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Decide whether L(p,q) arises from a nontrivial doubly primitive knot.
    Decide {
        p: i64,
        q: i64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run the decision on L(4n, 2n-1) for n in [n_min, n_max].
    Klein {
        n_min: i64,
        n_max: i64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Emit the Schubert diagram, or its modification at wedge u, as PD text.
    Diagram {
        p: i64,
        q: i64,
        u: Option<i64>,
        /// Emit the unmodified Schubert diagram.
        #[arg(long)]
        raw: bool,
        #[arg(long, value_enum, default_value_t = ModeArg::Smoothing)]
        mode: ModeArg,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Compute invariants of a PD file.
    Invariants {
        file: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Smoothing,
    CrossingPositive,
    CrossingNegative,
}

impl From<ModeArg> for Modification {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Smoothing => Modification::Smoothing,
            ModeArg::CrossingPositive => Modification::CrossingPositive,
            ModeArg::CrossingNegative => Modification::CrossingNegative,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Default)]
pub struct RunArgs {
    /// TOML file with `format` and a `[budget]` table; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub node_cap: Option<usize>,
    #[arg(long)]
    pub headroom: Option<usize>,
    #[arg(long)]
    pub jones_cap: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Shorthand for `--format json`.
    #[arg(long)]
    pub json: bool,
    /// Write output here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    format: Option<Format>,
    budget: Option<BudgetFile>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct BudgetFile {
    node_cap: Option<usize>,
    headroom: Option<usize>,
    jones_cap: Option<usize>,
}

/// Resolved settings for one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub budget: Budget,
    pub format: Format,
    pub output: Option<PathBuf>,
}

impl RunArgs {
    pub fn resolve(&self) -> Result<RunConfig> {
        let file = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
                toml::from_str::<ConfigFile>(&text).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?
            }
            None => ConfigFile::default(),
        };
        let fb = file.budget.unwrap_or_default();
        let d = Budget::default();
        let budget = Budget {
            node_cap: self.node_cap.or(fb.node_cap).unwrap_or(d.node_cap),
            headroom: self.headroom.or(fb.headroom).unwrap_or(d.headroom),
            jones_cap: self.jones_cap.or(fb.jones_cap).unwrap_or(d.jones_cap),
        };
        budget.validate()?;
        let format = if self.json { Format::Json } else { self.format.or(file.format).unwrap_or(Format::Text) };
        Ok(RunConfig { budget, format, output: self.output.clone() })
    }
}

fn emit(cfg: &RunConfig, text: &str, stdout: &mut dyn Write) -> Result<()> {
    let io = |e: std::io::Error| Error::Precondition(format!("write failed: {e}"));
    match &cfg.output {
        Some(path) => std::fs::write(path, text).map_err(io),
        None => stdout.write_all(text.as_bytes()).map_err(io),
    }
}

fn exit_for(o: Obtainable) -> i32 {
    match o {
        Obtainable::Yes => EXIT_YES,
        Obtainable::No => EXIT_NO,
        Obtainable::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

/// Parses `args` (program name first) and runs the command, writing to `stdout`
/// and `stderr`. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let _ = if e.use_stderr() { write!(stderr, "{e}") } else { write!(stdout, "{e}") };
            return code;
        }
    };
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Criterion { p, q, u, run } => {
            let cfg = run.resolve()?;
            let r = longitudinal_criterion(DualKnotSpec::new(LensParams::new(p, q)?, u)?)?;
            let text = match cfg.format {
                Format::Text => format!("{}\n", criterion_line(&r)),
                Format::Json => to_json(&r) + "\n",
            };
            emit(&cfg, &text, stdout)?;
            Ok(if r.passes { EXIT_YES } else { EXIT_NO })
        }
        Command::Decide { p, q, run } => {
            let cfg = run.resolve()?;
            let report = decide(LensParams::new(p, q)?, &cfg.budget)?;
            emit(&cfg, &render(&cfg, &report), stdout)?;
            Ok(exit_for(report.obtainable))
        }
        Command::Klein { n_min, n_max, run } => {
            let cfg = run.resolve()?;
            let reports = klein_scan(n_min, n_max, &cfg.budget)?;
            let text = match cfg.format {
                Format::Json => to_json(&reports) + "\n",
                Format::Text => klein_text(n_min, &reports),
            };
            emit(&cfg, &text, stdout)?;
            let inconclusive = reports.iter().any(|r| r.obtainable == Obtainable::Inconclusive);
            Ok(if inconclusive { EXIT_INCONCLUSIVE } else { EXIT_YES })
        }
        Command::Diagram { p, q, u, raw, mode, run } => {
            let cfg = run.resolve()?;
            let params = LensParams::new(p, q)?;
            let sd = schubert_diagram(params)?;
            let pd = match (raw, u) {
                (true, _) => sd.diagram(),
                (false, Some(u)) => PlanarDiagram::from_map(&modify(&sd, wedge_site(&sd, u)?, mode.into())?),
                (false, None) => return Err(Error::Precondition("give a wedge index u or --raw".into())),
            };
            emit(&cfg, &pd.to_string(), stdout)?;
            Ok(EXIT_YES)
        }
        Command::Invariants { file, run } => {
            let cfg = run.resolve()?;
            let pd = read_pd(&file)?;
            let report = invariants_report(&pd, &cfg.budget)?;
            let text = match cfg.format {
                Format::Json => to_json(&report) + "\n",
                Format::Text => invariants_text(&report),
            };
            emit(&cfg, &text, stdout)?;
            Ok(EXIT_YES)
        }
    }
}

fn render(cfg: &RunConfig, report: &DecisionReport) -> String {
    match cfg.format {
        Format::Text => decision_text(report),
        Format::Json => to_json(report) + "\n",
    }
}

fn klein_text(n_min: i64, reports: &[DecisionReport]) -> String {
    let mut out = String::new();
    let mut yes = Vec::new();
    for (i, r) in reports.iter().enumerate() {
        let n = n_min + i as i64;
        let c = canonical_form(r.canonical_params());
        let w: Vec<String> = r.witnesses.iter().map(i64::to_string).collect();
        out += &format!("n={n} L({},{}) {} [{}]\n", c.p(), c.q(), obtainable_name(r.obtainable), w.join(", "));
        if r.obtainable == Obtainable::Yes {
            yes.push(format!("L({},{})", c.p(), c.q()));
        }
    }
    out += &format!("yes-set: {{{}}}\n", yes.join(", "));
    out
}

fn read_pd(path: &Path) -> Result<PlanarDiagram> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
    PlanarDiagram::parse(&text)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub crossings: usize,
    pub components: usize,
    pub determinant: u128,
    /// Only for knots.
    pub alexander: Option<String>,
    /// Absent above the Jones cap.
    pub jones: Option<String>,
    pub triviality: Option<TrivialityVerdict>,
}

pub fn invariants_report(pd: &PlanarDiagram, budget: &Budget) -> Result<InvariantsReport> {
    let components = pd.component_count();
    let knot = components == 1;
    let jones = match jones_with_cap(pd, budget.jones_cap) {
        Ok(v) => Some(v.to_string()),
        Err(Error::CrossingCap { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(InvariantsReport {
        crossings: pd.crossing_count(),
        components,
        determinant: determinant(pd)?,
        alexander: if knot { Some(alexander(pd)?.to_string()) } else { None },
        jones,
        triviality: if knot { Some(is_trivial(&pd.to_map(), budget)?) } else { None },
    })
}

fn invariants_text(r: &InvariantsReport) -> String {
    let mut out = format!("crossings: {}\ncomponents: {}\ndeterminant: {}\n", r.crossings, r.components, r.determinant);
    if let Some(a) = &r.alexander {
        out += &format!("alexander: {a}\n");
    }
    match &r.jones {
        Some(j) => out += &format!("jones (s = t^1/2): {j}\n"),
        None => out += "jones: above crossing cap\n",
    }
    if let Some(v) = &r.triviality {
        let line = match v {
            TrivialityVerdict::Trivial { certificate } => format!("trivial ({} moves)", certificate.len()),
            TrivialityVerdict::Nontrivial { witness } => format!("nontrivial ({} {})", witness.invariant, witness.value),
            TrivialityVerdict::Unknown { nodes_visited, reason } => format!("unknown ({nodes_visited} diagrams, {reason})"),
        };
        out += &format!("triviality: {line}\n");
    }
    out
}
