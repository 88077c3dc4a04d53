//! Command-line front end. CSV goes to stdout (or `--out`), diagnostics and
//! summaries to stderr.
//!
//! Exit codes: 0 success, 1 computation or verification failure, 2 usage or
//! parameter error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::exec::Exec;
use crate::functions::{derivative, eval_closed, second_derivative, BetaGamma};
use crate::gram::{gram_table_with, QuadratureSpec};
use crate::interp::{lebesgue_constant_with, lebesgue_function, Interpolant};
use crate::nodes::{bg_chebyshev_zeros, bg_cl_points, equispaced, trimmed_cl, NodeSet, TrimSpec};
use crate::tolerances::{grid, Tolerances};
use crate::verify::{run_suite, Suite, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Derivative columns are left empty this close to `±1`.
pub const DERIVATIVE_EDGE: f64 = 1e-12;

/// Shortest round-trip decimal, switching to exponent notation for very
/// large or very small magnitudes.
pub fn fmt_float(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || !v.is_finite() || (1e-5..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

#[derive(Debug, Parser)]
#[command(name = "bgcheb", version, about = "(beta,gamma)-Chebyshev functions and points")]
pub struct Cli {
    /// Write CSV output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Run sweeps on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate T_n and its first two derivatives.
    Eval(EvalArgs),
    /// Export a node set.
    Nodes(NodeArgs),
    /// Gram table of inner products up to a maximum degree.
    Gram(GramArgs),
    /// Lebesgue function of a node set and its maximum.
    Lebesgue(LebesgueArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Data behind the two figures.
    Figure(FigureArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ParamArgs {
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub gamma: f64,
}

impl ParamArgs {
    fn params(&self) -> Result<BetaGamma, CliError> {
        BetaGamma::new(self.beta, self.gamma).map_err(CliError::Usage)
    }
}

/// `lo:hi` or `lo:hi:steps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
    pub steps: Option<usize>,
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("bad number '{t}': {e}"));
        let (lo, hi, steps) = match parts.as_slice() {
            [lo, hi] => (num(lo)?, num(hi)?, None),
            [lo, hi, steps] => {
                let steps = steps
                    .trim()
                    .parse::<usize>()
                    .map_err(|e| format!("bad step count '{steps}': {e}"))?;
                (num(lo)?, num(hi)?, Some(steps))
            }
            _ => return Err(format!("expected lo:hi or lo:hi:steps, got '{s}'")),
        };
        if !(lo < hi) {
            return Err(format!("range needs lo < hi (got {lo}:{hi})"));
        }
        if steps == Some(0) {
            return Err("range needs at least one step".into());
        }
        Ok(Self { lo, hi, steps })
    }
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub n: usize,
    /// Comma-separated abscissae.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "range", required_unless_present = "range")]
    pub x: Vec<f64>,
    /// `lo:hi:steps`, giving steps+1 equispaced abscissae.
    #[arg(long, allow_hyphen_values = true)]
    pub range: Option<Range>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    BgZeros,
    BgCl,
    Equispaced,
    Trim,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct NodeArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Degree for bg-zeros and bg-cl (n and n+1 points), point count for
    /// equispaced and trim.
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k1: Option<usize>,
    #[arg(long)]
    pub k2: Option<usize>,
}

impl NodeArgs {
    fn build(&self) -> Result<NodeSet, CliError> {
        let usage = CliError::Usage;
        if self.kind == KindArg::Trim {
            let (Some(k1), Some(k2)) = (self.k1, self.k2) else {
                return Err(CliError::Usage(crate::error::domain("--kind trim requires --k1 and --k2")));
            };
            let trim = TrimSpec::new(k1, k2).map_err(usage)?;
            return trimmed_cl(self.n, trim).map_err(usage);
        }
        if self.k1.is_some() || self.k2.is_some() {
            return Err(CliError::Usage(crate::error::domain("--k1/--k2 only apply to --kind trim")));
        }
        let p = self.params.params()?;
        match self.kind {
            KindArg::BgZeros => bg_chebyshev_zeros(p, self.n),
            KindArg::BgCl => bg_cl_points(p, self.n + 1),
            KindArg::Equispaced => equispaced(p, self.n),
            KindArg::Trim => unreachable!(),
        }
        .map_err(usage)
    }
}

#[derive(Debug, Args)]
pub struct GramArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = 20)]
    pub max_degree: usize,
    /// Quadrature panels (default: max(8, max_degree)).
    #[arg(long)]
    pub panels: Option<usize>,
    #[arg(long, default_value_t = 16)]
    pub points_per_panel: usize,
}

#[derive(Debug, Args)]
pub struct LebesgueArgs {
    #[command(flatten)]
    pub nodes: NodeArgs,
    #[arg(long, default_value = "-1:1", allow_hyphen_values = true)]
    pub interval: Range,
    #[arg(long, default_value_t = crate::interp::DEFAULT_GRID_PER_GAP)]
    pub grid_per_gap: usize,
    /// Number of rows in the sampled Lebesgue function.
    #[arg(long, default_value_t = 1001)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Overrides each suite's default degree bound.
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub tol_orthogonality: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub tol_recurrence: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub tol_contfrac: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub tol_associated: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub tol_casoratian: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub tol_genfun: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub tol_cd: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub tol_sl: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub tol_nodes: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub tol_roots: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub tol_lebesgue: Option<f64>,
}

impl VerifyArgs {
    fn tolerances(&self) -> Tolerances {
        let mut t = Tolerances::default();
        let set = |field: &mut f64, v: Option<f64>| {
            if let Some(v) = v {
                *field = v;
            }
        };
        set(&mut t.orthogonality, self.tol_orthogonality);
        set(&mut t.recurrence, self.tol_recurrence);
        set(&mut t.contfrac, self.tol_contfrac);
        set(&mut t.associated, self.tol_associated);
        set(&mut t.casoratian, self.tol_casoratian);
        set(&mut t.genfun_slack, self.tol_genfun);
        set(&mut t.christoffel_darboux, self.tol_cd);
        set(&mut t.sturm_liouville, self.tol_sl);
        set(&mut t.nodes, self.tol_nodes);
        set(&mut t.roots, self.tol_roots);
        set(&mut t.lebesgue, self.tol_lebesgue);
        t
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureId {
    /// T_5 for (1, 0.1) and T_6 for (0.3, 0.4) with their zeros.
    #[value(name = "1")]
    Functions,
    /// Lebesgue functions of the two trimmed CL families for n = 5, 6, 7.
    #[value(name = "2")]
    Lebesgue,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[arg(long, value_enum)]
    pub id: FigureId,
    #[arg(long, default_value_t = 1001)]
    pub samples: usize,
}

#[derive(Debug)]
enum CliError {
    Usage(Error),
    Compute(Error),
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

struct Output {
    csv: String,
    diagnostics: String,
    failed: Option<String>,
}

impl Output {
    fn csv(csv: String) -> Self {
        Self {
            csv,
            diagnostics: String::new(),
            failed: None,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    let result = dispatch(&cli.command, exec).and_then(|out| {
        match &cli.out {
            Some(path) => std::fs::write(path, &out.csv)?,
            None => stdout.write_all(out.csv.as_bytes())?,
        }
        stderr.write_all(out.diagnostics.as_bytes())?;
        Ok(out)
    });
    match result {
        Ok(Output { failed: None, .. }) => EXIT_OK,
        Ok(Output { failed: Some(msg), .. }) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_FAILURE
        }
        Err(CliError::Usage(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
        Err(CliError::Compute(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_FAILURE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn dispatch(cmd: &Command, exec: Exec) -> Result<Output, CliError> {
    match cmd {
        Command::Eval(a) => cmd_eval(a),
        Command::Nodes(a) => cmd_nodes(a),
        Command::Gram(a) => cmd_gram(a, exec),
        Command::Lebesgue(a) => cmd_lebesgue(a, exec),
        Command::Verify(a) => cmd_verify(a, exec),
        Command::Figure(a) => cmd_figure(a),
    }
}

fn range_points(r: Range, default_steps: usize) -> Vec<f64> {
    grid(r.lo, r.hi, r.steps.unwrap_or(default_steps) + 1)
}

fn cmd_eval(a: &EvalArgs) -> Result<Output, CliError> {
    let p = a.params.params()?;
    let xs = match a.range {
        Some(r) => range_points(r, 200),
        None => a.x.clone(),
    };
    if let Some(&bad) = xs.iter().find(|x| !(x.abs() <= 1.0)) {
        return Err(CliError::Usage(crate::error::domain(format!("abscissa {bad} lies outside [-1, 1]"))));
    }
    let mut csv = String::from("x,T,dT,d2T\n");
    for &x in &xs {
        let t = eval_closed(p, a.n, x).map_err(CliError::Compute)?;
        let (d1, d2) = if x.abs() >= 1.0 - DERIVATIVE_EDGE {
            (String::new(), String::new())
        } else {
            (
                fmt_float(derivative(p, a.n, x).map_err(CliError::Compute)?),
                fmt_float(second_derivative(p, a.n, x).map_err(CliError::Compute)?),
            )
        };
        let _ = writeln!(csv, "{},{},{},{}", fmt_float(x), fmt_float(t), d1, d2);
    }
    Ok(Output::csv(csv))
}

fn cmd_nodes(a: &NodeArgs) -> Result<Output, CliError> {
    let set = a.build()?;
    let mut csv = String::from("j,x\n");
    for (j, &x) in set.points().iter().enumerate() {
        let _ = writeln!(csv, "{j},{}", fmt_float(x));
    }
    Ok(Output::csv(csv))
}

fn cmd_gram(a: &GramArgs, exec: Exec) -> Result<Output, CliError> {
    let p = a.params.params()?;
    let q = match a.panels {
        Some(panels) => QuadratureSpec::new(panels, a.points_per_panel).map_err(CliError::Usage)?,
        None => {
            let d = QuadratureSpec::for_degree(a.max_degree);
            QuadratureSpec::new(d.panels(), a.points_per_panel).map_err(CliError::Usage)?
        }
    };
    let table = gram_table_with(p, a.max_degree, q, exec);
    let mut csv = String::from("r,s,value\n");
    for (r, s, v) in table.iter() {
        let _ = writeln!(csv, "{r},{s},{}", fmt_float(v));
    }
    let mut out = Output::csv(csv);
    out.diagnostics = format!("max deviation from 0, pi, pi/2: {}\n", fmt_float(table.max_deviation()));
    Ok(out)
}

fn cmd_lebesgue(a: &LebesgueArgs, exec: Exec) -> Result<Output, CliError> {
    if a.samples < 2 {
        return Err(CliError::Usage(crate::error::domain("--samples must be at least 2")));
    }
    if a.interval.steps.is_some() {
        return Err(CliError::Usage(crate::error::domain("--interval takes lo:hi")));
    }
    let set = a.nodes.build()?;
    let it = Interpolant::new(&set).map_err(CliError::Compute)?;
    let interval = (a.interval.lo, a.interval.hi);
    let report = lebesgue_constant_with(&it, interval, a.grid_per_gap, exec).map_err(CliError::Usage)?;
    let mut csv = String::from("x,lambda\n");
    for x in grid(interval.0, interval.1, a.samples) {
        let _ = writeln!(csv, "{},{}", fmt_float(x), fmt_float(lebesgue_function(&it, x)));
    }
    let mut out = Output::csv(csv);
    out.diagnostics = format!(
        "Lambda={}, argmax={}\n",
        fmt_float(report.constant),
        fmt_float(report.argmax)
    );
    Ok(out)
}

fn cmd_verify(a: &VerifyArgs, exec: Exec) -> Result<Output, CliError> {
    let suite: Suite = a.suite.parse().map_err(CliError::Usage)?;
    let cfg = VerifyConfig {
        n_max: a.n_max,
        tol: a.tolerances(),
        exec,
    };
    let report = run_suite(suite, &cfg).map_err(CliError::Compute)?;
    let mut out = Output::csv(report.to_csv());
    out.diagnostics = format!("{}\n", report.summary());
    if !report.pass() {
        let names: Vec<String> = report
            .failures()
            .map(|c| format!("{}/{} ({})", c.suite, c.identity, c.params))
            .collect();
        out.failed = Some(format!("failing checks: {}", names.join("; ")));
    }
    Ok(out)
}

fn cmd_figure(a: &FigureArgs) -> Result<Output, CliError> {
    if a.samples < 2 {
        return Err(CliError::Usage(crate::error::domain("--samples must be at least 2")));
    }
    let xs = grid(-1.0, 1.0, a.samples);
    let mut csv = String::from("series,x,y\n");
    let compute = CliError::Compute;
    match a.id {
        FigureId::Functions => {
            for (panel, beta, gamma, n) in [("left", 1.0, 0.1, 5), ("right", 0.3, 0.4, 6)] {
                let p = BetaGamma::new(beta, gamma).map_err(compute)?;
                for &x in &xs {
                    let y = eval_closed(p, n, x).map_err(compute)?;
                    let _ = writeln!(csv, "{panel}:T{n},{},{}", fmt_float(x), fmt_float(y));
                }
                for &z in bg_chebyshev_zeros(p, n).map_err(compute)?.points() {
                    let _ = writeln!(csv, "{panel}:zeros,{},0", fmt_float(z));
                }
            }
        }
        FigureId::Lebesgue => {
            for (panel, k2) in [("left", 0), ("right", 1)] {
                for n in 5..=7 {
                    let set = trimmed_cl(n, TrimSpec::new(1, k2).map_err(compute)?).map_err(compute)?;
                    let it = Interpolant::new(&set).map_err(compute)?;
                    for &x in &xs {
                        let _ = writeln!(
                            csv,
                            "{panel}:n{n},{},{}",
                            fmt_float(x),
                            fmt_float(lebesgue_function(&it, x))
                        );
                    }
                }
            }
        }
    }
    Ok(Output::csv(csv))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["bgcheb"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn float_format() {
        assert_eq!(fmt_float(0.5), "0.5");
        assert_eq!(fmt_float(-1.0), "-1");
        assert_eq!(fmt_float(0.0), "0");
        assert_eq!(fmt_float(1.5e-17), "1.5e-17");
        assert_eq!(fmt_float(0.1 + 0.2), "0.30000000000000004");
        assert_eq!(fmt_float(3e20), "3e20");
    }

    #[test]
    fn range_parsing() {
        let r: Range = "-1:1:200".parse().unwrap();
        assert_eq!((r.lo, r.hi, r.steps), (-1.0, 1.0, Some(200)));
        let r: Range = "-1:0.5".parse().unwrap();
        assert_eq!(r.steps, None);
        assert!("1:-1".parse::<Range>().is_err());
        assert!("0:1:0".parse::<Range>().is_err());
        assert!("0:1:2:3".parse::<Range>().is_err());
        assert!("a:1".parse::<Range>().is_err());
    }

    #[test]
    fn eval_examples() {
        let (code, out, _) = run_str(&["eval", "--beta", "0", "--gamma", "0", "--n", "3", "--x", "0.5"]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("x,T,dT,d2T"));
        assert!(lines.next().unwrap().starts_with("0.5,-1,"));

        let (code, out, _) = run_str(&["eval", "--beta", "1", "--gamma", "0.1", "--n", "5", "--range", "-1:1:200"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 202);
        assert!(out.lines().nth(1).unwrap().ends_with(",,"));

        let (code, _, err) = run_str(&["eval", "--beta", "2.5", "--n", "3", "--x", "0.1"]);
        assert_eq!(code, 2);
        assert!(err.contains("beta"), "{err}");
        let (code, _, _) = run_str(&["eval", "--n", "3", "--x", "1.5"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_str(&["eval", "--n", "3"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn nodes_examples() {
        let (code, out, _) = run_str(&["nodes", "--kind", "bg-cl", "--beta", "0", "--gamma", "0", "--n", "5"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 7);
        assert_eq!(out.lines().nth(1), Some("0,1"));
        assert_eq!(out.lines().nth(6), Some("5,-1"));

        let (code, out, _) = run_str(&["nodes", "--kind", "trim", "--n", "10", "--k1", "1", "--k2", "0"]);
        assert_eq!(code, 0);
        let xs: Vec<f64> = out.lines().skip(1).map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
        assert_eq!(xs.len(), 10);
        for (j, x) in xs.iter().enumerate() {
            assert!((x - (j as f64 * std::f64::consts::PI / 10.0).cos()).abs() < 1e-14);
        }

        let (code, out, _) = run_str(&["nodes", "--kind", "bg-zeros", "--beta", "0.3", "--gamma", "0.4", "--n", "6"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 7);

        assert_eq!(run_str(&["nodes", "--kind", "trim", "--n", "10"]).0, 2);
        assert_eq!(run_str(&["nodes", "--kind", "trim", "--n", "10", "--k1", "0", "--k2", "0"]).0, 2);
        assert_eq!(run_str(&["nodes", "--kind", "bg-cl", "--n", "4", "--k1", "1"]).0, 2);
        assert_eq!(run_str(&["nodes", "--kind", "nope", "--n", "4"]).0, 2);
    }

    #[test]
    fn lebesgue_examples() {
        let (code, out, err) = run_str(&["lebesgue", "--kind", "trim", "--n", "5", "--k1", "1", "--k2", "0", "--interval", "-1:1"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("x,lambda"));
        assert_eq!(out.lines().count(), 1002);
        assert!(err.starts_with("Lambda=9"), "{err}");
        assert!(err.contains("argmax=-1\n"), "{err}");

        let (code, _, err) = run_str(&["lebesgue", "--kind", "trim", "--n", "6", "--k1", "1", "--k2", "1"]);
        assert_eq!(code, 0);
        let lambda: f64 = err.trim_start_matches("Lambda=").split(',').next().unwrap().parse().unwrap();
        assert!((lambda - 6.0).abs() < 6e-9, "{err}");
    }

    #[test]
    fn gram_and_figure_shapes() {
        let (code, out, _) = run_str(&["gram", "--beta", "0.3", "--gamma", "0.4", "--max-degree", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 1 + 15);
        assert_eq!(out.lines().next(), Some("r,s,value"));

        let (code, out, _) = run_str(&["figure", "--id", "1", "--samples", "11"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 1 + 11 + 5 + 11 + 6);
        let (code, out, _) = run_str(&["figure", "--id", "2", "--samples", "11"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 1 + 6 * 11);
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, err) = run_str(&["verify", "--suite", "casoratian", "--n-max", "12"]);
        assert_eq!(code, 0, "{err}");
        assert_eq!(out.lines().next(), Some(crate::VerificationReport::CSV_HEADER));
        let (code, _, err) = run_str(&["verify", "--suite", "casoratian", "--tol-casoratian", "-1"]);
        assert_eq!(code, 1);
        assert!(err.contains("failing checks"));
        assert_eq!(run_str(&["verify", "--suite", "bogus"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }
}
