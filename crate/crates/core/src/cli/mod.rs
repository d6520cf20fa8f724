//! Command-line surface: `check` runs one decision procedure on module files
//! or named fixtures, `verify-paper` runs every claim of the verification
//! harness.
//!
//! Exit codes: 0 yes/pass, 1 no/fail, 2 undecided, 3 input or usage error.

pub mod claims;
pub mod schema;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::Scope;
use crate::equiv::{
    r_decomposable, r_distinct, r_isomorphic, restriction_function, rt_isomorphic, t_isomorphic, t_orbit, EquivVerdict,
};
use crate::error::{Error, Result};
use crate::families::paper_fixture;
use crate::linalg::{Fp, Mat};
use crate::modrep::{decompose_with_basis, is_indecomposable, is_isomorphic, same_algebra, Indecomposability, Module, SearchConfig, Verdict};

pub use claims::{verify_paper, ClaimRecord, ClaimStatus, Report};
pub use schema::{module_to_json, parse_algebra, parse_module, read_module};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Structured,
}

/// Settings shared by every command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub fields: Vec<u64>,
    pub budget: u64,
    pub seed: u64,
    pub scope: Scope,
    pub report: ReportFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            fields: vec![2, 3, 5],
            budget: 1 << 20,
            seed: 0,
            scope: Scope::Maximal,
            report: ReportFormat::Text,
        }
    }
}

impl RunConfig {
    pub fn search(&self) -> SearchConfig {
        SearchConfig {
            budget: self.budget,
            seed: self.seed,
            ..SearchConfig::default()
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "modequiv", version, about = "Decide R-, T- and RT-isomorphism of modules over small algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run one decision procedure
    Check(CheckArgs),
    /// Run every claim of the verification harness
    VerifyPaper(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Iso,
    Indec,
    Decompose,
    Riso,
    Rdistinct,
    Rdecomp,
    Tiso,
    Rtiso,
    Torbit,
    Resfn,
}

impl CheckKind {
    fn arity(self) -> (usize, Option<usize>) {
        match self {
            CheckKind::Indec | CheckKind::Decompose | CheckKind::Rdecomp | CheckKind::Resfn => (1, Some(1)),
            CheckKind::Torbit => (1, None),
            _ => (2, Some(2)),
        }
    }

    fn name(self) -> &'static str {
        match self {
            CheckKind::Iso => "iso",
            CheckKind::Indec => "indec",
            CheckKind::Decompose => "decompose",
            CheckKind::Riso => "riso",
            CheckKind::Rdistinct => "rdistinct",
            CheckKind::Rdecomp => "rdecomp",
            CheckKind::Tiso => "tiso",
            CheckKind::Rtiso => "rtiso",
            CheckKind::Torbit => "torbit",
            CheckKind::Resfn => "resfn",
        }
    }
}

#[derive(Args, Debug)]
pub struct Common {
    #[arg(long, default_value_t = 1 << 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "maximal")]
    pub scope: Scope,
    #[arg(long, value_enum, default_value = "text")]
    pub report: ReportFormat,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub kind: CheckKind,
    /// Module files, or fixture references such as `wild6.M1`
    pub inputs: Vec<String>,
    /// Take every module of this fixture (or resolve bare `M<i>` inputs in it)
    #[arg(long)]
    pub fixture: Option<String>,
    /// Prime field for fixture references
    #[arg(long, default_value_t = 2)]
    pub field: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [2, 3, 5])]
    pub fields: Vec<u64>,
    #[command(flatten)]
    pub common: Common,
}

/// Parses `args` (including the program name), runs the command, and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are not errors
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_YES;
        }
    };
    match cli.command {
        Command::Check(args) => {
            let cfg = RunConfig {
                fields: vec![args.field],
                budget: args.common.budget,
                seed: args.common.seed,
                scope: args.common.scope,
                report: args.common.report,
            };
            match cmd_check(args.kind, &args.inputs, args.fixture.as_deref(), &cfg) {
                Ok(outcome) => {
                    let _ = outcome.print(out, cfg.report);
                    outcome.exit_code()
                }
                Err(e) => report_error(e, args.kind, cfg.report, out, err),
            }
        }
        Command::VerifyPaper(args) => {
            let cfg = RunConfig {
                fields: args.fields,
                budget: args.common.budget,
                seed: args.common.seed,
                scope: args.common.scope,
                report: args.common.report,
            };
            match cmd_verify_paper(&cfg) {
                Ok(report) => {
                    let text = match cfg.report {
                        ReportFormat::Text => report.to_text(),
                        ReportFormat::Structured => report.to_json(),
                    };
                    let _ = writeln!(out, "{text}");
                    if report.passed() {
                        EXIT_YES
                    } else {
                        EXIT_NO
                    }
                }
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_USAGE
                }
            }
        }
    }
}

/// Budget exhaustion during a check is an undecided verdict; anything else
/// is an input error.
fn report_error(e: Error, kind: CheckKind, format: ReportFormat, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match e {
        Error::Undecided(_) | Error::BudgetExceeded { .. } => {
            let outcome = Outcome {
                kind,
                verdict: Verdict::Undecided,
                lines: vec![e.to_string()],
                detail: json!({"reason": e.to_string()}),
            };
            let _ = outcome.print(out, format);
            EXIT_UNDECIDED
        }
        other => {
            let _ = writeln!(err, "error: {other}");
            EXIT_USAGE
        }
    }
}

/// Result of one `check`.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub kind: CheckKind,
    pub verdict: Verdict,
    /// Human-readable detail printed after the verdict line.
    pub lines: Vec<String>,
    pub detail: Value,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Yes => EXIT_YES,
            Verdict::No => EXIT_NO,
            Verdict::Undecided => EXIT_UNDECIDED,
        }
    }

    pub fn print(&self, out: &mut dyn Write, format: ReportFormat) -> std::io::Result<()> {
        match format {
            ReportFormat::Text => {
                writeln!(out, "{}", self.verdict)?;
                for l in &self.lines {
                    writeln!(out, "  {l}")?;
                }
                Ok(())
            }
            ReportFormat::Structured => {
                let v = json!({"kind": self.kind.name(), "verdict": self.verdict, "detail": self.detail});
                writeln!(out, "{v}")
            }
        }
    }
}

fn fixture_module(name: &str, index: usize, field: Fp) -> Result<Module> {
    let (_, modules) = paper_fixture(name, field)?;
    let count = modules.len();
    modules
        .into_iter()
        .nth(index)
        .ok_or_else(|| Error::UnknownFixture(format!("{name}.M{} (fixture has {count} modules)", index + 1)))
}

/// `M<i>` with `i >= 1`, as a 0-based index.
fn module_index(s: &str) -> Option<usize> {
    s.strip_prefix('M')?.parse::<usize>().ok()?.checked_sub(1)
}

/// Reads module files or resolves fixture references; all modules must share
/// one algebra.
pub fn parse_inputs(inputs: &[String], fixture: Option<&str>, field: u64) -> Result<Vec<Module>> {
    let field = Fp::new(field)?;
    let mut modules = Vec::new();
    if inputs.is_empty() {
        if let Some(name) = fixture {
            modules = paper_fixture(name, field)?.1;
        }
    }
    for input in inputs {
        let path = Path::new(input);
        let m = if path.exists() {
            read_module(path)?
        } else if let (Some(name), Some(i)) = (fixture, module_index(input)) {
            fixture_module(name, i, field)?
        } else if let Some((name, i)) = input.rsplit_once('.').and_then(|(n, m)| Some((n, module_index(m)?))) {
            fixture_module(name, i, field)?
        } else {
            return Err(Error::Schema(format!("`{input}` is neither a readable file nor a fixture reference")));
        };
        modules.push(m);
    }
    if let Some(first) = modules.first() {
        let algebra = first.algebra().clone();
        if modules.iter().any(|m| !same_algebra(m.algebra(), &algebra)) {
            return Err(Error::AlgebraMismatch);
        }
    }
    Ok(modules)
}

fn mat_json(m: &Mat) -> Value {
    json!(m.to_rows())
}

fn equiv_outcome(kind: CheckKind, v: EquivVerdict) -> Outcome {
    let mut lines = Vec::new();
    if let Some(w) = &v.witness {
        lines.push(w.summary());
    }
    lines.push(format!("checked {}", v.checked));
    Outcome {
        kind,
        verdict: v.verdict,
        lines,
        detail: v.to_json(),
    }
}

/// Runs one decision procedure on parsed inputs.
pub fn cmd_check(kind: CheckKind, inputs: &[String], fixture: Option<&str>, cfg: &RunConfig) -> Result<Outcome> {
    let field = *cfg.fields.first().unwrap_or(&2);
    let modules = parse_inputs(inputs, fixture, field)?;
    let (min, max) = kind.arity();
    if modules.len() < min || max.is_some_and(|m| modules.len() > m) {
        let want = match max {
            Some(m) if m == min => format!("{min}"),
            Some(m) => format!("{min} to {m}"),
            None => format!("at least {min}"),
        };
        return Err(Error::Schema(format!(
            "`{}` takes {want} modules, got {}",
            kind.name(),
            modules.len()
        )));
    }
    let search = cfg.search();
    let m = &modules[0];
    Ok(match kind {
        CheckKind::Iso => {
            let r = is_isomorphic(m, &modules[1], &search)?;
            let mut lines = vec![r.describe()];
            if let Some(w) = r.witness() {
                lines.push(format!("witness {:?}", w.to_rows()));
            }
            Outcome {
                kind,
                verdict: r.verdict(),
                lines,
                detail: json!({"reason": r.describe(), "witness": r.witness().map(mat_json)}),
            }
        }
        CheckKind::Indec => {
            let r = is_indecomposable(m, search.budget)?;
            let (line, detail) = match &r {
                Indecomposability::Indecomposable { end_dim } => (
                    format!("End has dimension {end_dim} and no nontrivial idempotent"),
                    json!({"end_dim": end_dim}),
                ),
                Indecomposability::Decomposable { idempotent } => (
                    format!("idempotent {:?}", idempotent.to_rows()),
                    json!({"idempotent": mat_json(idempotent)}),
                ),
                Indecomposability::Undecided { end_dim } => (
                    format!("End has dimension {end_dim}, above budget"),
                    json!({"end_dim": end_dim}),
                ),
            };
            Outcome {
                kind,
                verdict: r.verdict(),
                lines: vec![line],
                detail,
            }
        }
        CheckKind::Decompose => {
            let d = decompose_with_basis(m, search.budget)?;
            let dims: Vec<usize> = d.parts.iter().map(Module::dim).collect();
            Outcome {
                kind,
                verdict: Verdict::Yes,
                lines: vec![
                    format!("summand dimensions {dims:?}"),
                    format!("basis {:?}", d.basis.to_rows()),
                ],
                detail: json!({"dims": dims, "basis": mat_json(&d.basis)}),
            }
        }
        CheckKind::Riso => equiv_outcome(kind, r_isomorphic(m, &modules[1], cfg.scope, &search)?),
        CheckKind::Rdistinct => equiv_outcome(kind, r_distinct(m, &modules[1], cfg.scope, &search)?),
        CheckKind::Rdecomp => equiv_outcome(kind, r_decomposable(m, &search)?),
        CheckKind::Tiso => equiv_outcome(kind, t_isomorphic(m, &modules[1], &search)?),
        CheckKind::Rtiso => equiv_outcome(kind, rt_isomorphic(m, &modules[1], &search)?),
        CheckKind::Torbit => {
            let orbit = t_orbit(m, &modules[1..], &search)?;
            let p = &orbit.partition;
            let verdict = if p.classes.len() == 1 {
                Verdict::Yes
            } else if p.is_decided() {
                Verdict::No
            } else {
                Verdict::Undecided
            };
            let c = &orbit.closure;
            Outcome {
                kind,
                verdict,
                lines: vec![
                    format!("classes {:?}", p.classes),
                    format!(
                        "{} automorphisms, {} twist classes, closed: {}",
                        c.automorphisms,
                        c.representatives.len(),
                        c.is_closed()
                    ),
                ],
                detail: json!({
                    "classes": p.classes,
                    "undecided": p.undecided,
                    "automorphisms": c.automorphisms,
                    "twist_classes": c.representatives.len(),
                    "matched": c.matched,
                    "closed": c.is_closed(),
                }),
            }
        }
        CheckKind::Resfn => {
            let rf = restriction_function(m, cfg.scope, &search)?;
            let p = &rf.partition;
            let lines = p
                .classes
                .iter()
                .map(|c| c.iter().map(|&i| p.labels[i].as_str()).collect::<Vec<_>>().join(" | "))
                .collect();
            Outcome {
                kind,
                verdict: if p.is_decided() {
                    Verdict::Yes
                } else {
                    Verdict::Undecided
                },
                lines,
                detail: json!({"subalgebras": p.labels, "classes": p.classes, "undecided": p.undecided}),
            }
        }
    })
}

pub fn cmd_verify_paper(cfg: &RunConfig) -> Result<Report> {
    for &p in &cfg.fields {
        Fp::new(p)?;
    }
    Ok(verify_paper(cfg))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("modequiv").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn fixture_references() {
        assert_eq!(module_index("M2"), Some(1));
        assert_eq!(module_index("M0"), None);
        let ms = parse_inputs(&["wild6.M1".into(), "M2".into()], Some("wild6"), 2).unwrap();
        assert_eq!(ms.len(), 2);
        assert!(matches!(
            parse_inputs(&["wild6.M3".into()], None, 2),
            Err(Error::UnknownFixture(_))
        ));
        assert!(matches!(
            parse_inputs(&["tame3.M1".into(), "wild6.M1".into()], None, 2),
            Err(Error::AlgebraMismatch)
        ));
    }

    #[test]
    fn iso_and_riso_exit_codes() {
        let (code, out, _) = run_args(&["check", "iso", "wild6.M1", "wild6.M2"]);
        assert_eq!((code, out.lines().next()), (1, Some("NO")));
        let (code, out, _) = run_args(&["check", "riso", "wild6.M1", "wild6.M2", "--scope", "all"]);
        assert_eq!((code, out.lines().next()), (0, Some("YES")));
    }

    #[test]
    fn usage_errors_exit_three() {
        assert_eq!(run_args(&["check", "iso", "wild6.M1"]).0, 3);
        assert_eq!(run_args(&["check", "frobnicate", "a", "b"]).0, 3);
        assert_eq!(run_args(&["check", "iso", "nope.json", "wild6.M1"]).0, 3);
        assert_eq!(run_args(&["check", "iso", "wild6.M1", "wild6.M2", "--budget", "0"]).0, 3);
        assert_eq!(run_args(&["verify-paper", "--fields", "4"]).0, 3);
    }

    #[test]
    fn budget_exhaustion_is_undecided() {
        let (code, out, _) = run_args(&["check", "tiso", "rnott6.M1", "rnott6.M2", "--budget", "10"]);
        assert_eq!(code, 2, "{out}");
        assert!(out.starts_with("UNDECIDED"));
    }

    #[test]
    fn structured_output_is_json() {
        let (code, out, _) = run_args(&["check", "tiso", "--fixture", "tame3", "M1", "M1", "--report", "structured"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["verdict"], "yes");
        assert_eq!(v["kind"], "tiso");
    }
}
