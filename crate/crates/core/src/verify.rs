//! Verification suites: every identity and invariant of the library evaluated
//! over fixed sweeps, reported as one row per check.
//!
//! All sweeps are deterministic (fixed grids, seeded generator, fixed
//! reduction order), so a report is byte-identical across runs and across
//! execution modes.

use std::fmt::Write as _;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::contfrac::{associated, casoratian, casoratian_constant, cf_convergent, normalized, LambdaSeq};
use crate::error::{domain, Error, Result};
use crate::exec::Exec;
use crate::functions::{eval_closed, eval_recurrence, first, BetaGamma};
use crate::gram::{gram_table_with, QuadratureSpec};
use crate::identities::{cd_lhs, cd_rhs, genfun_closed, genfun_partial, genfun_tail_bound, sl_residual, GenFunPoint, KernelPair};
use crate::interp::{lagrange_basis, lebesgue_constant_with, lebesgue_function, Interpolant, DEFAULT_GRID_PER_GAP};
use crate::nodes::{
    bg_chebyshev_zeros, bg_cl_points, classical_cl, equispaced, interlaces, kte_mapped, subset_params, trimmed_cl,
    zeros_as_cl, TrimSpec,
};
use crate::tolerances::{grid, parameter_sweep, Tolerances, GRAM_SWEEP};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Orthogonality,
    Recurrence,
    Contfrac,
    Casoratian,
    Genfun,
    Cd,
    Sl,
    NodesIdentities,
    LebesgueTheorem,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 9] = [
        Suite::Orthogonality,
        Suite::Recurrence,
        Suite::Contfrac,
        Suite::Casoratian,
        Suite::Genfun,
        Suite::Cd,
        Suite::Sl,
        Suite::NodesIdentities,
        Suite::LebesgueTheorem,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Orthogonality => "orthogonality",
            Suite::Recurrence => "recurrence",
            Suite::Contfrac => "contfrac",
            Suite::Casoratian => "casoratian",
            Suite::Genfun => "genfun",
            Suite::Cd => "cd",
            Suite::Sl => "sl",
            Suite::NodesIdentities => "nodes-identities",
            Suite::LebesgueTheorem => "lebesgue-theorem",
            Suite::All => "all",
        }
    }

    /// Default upper degree of the suite's sweep.
    pub fn default_n_max(self) -> usize {
        match self {
            Suite::Orthogonality => 20,
            Suite::Recurrence => 50,
            Suite::Contfrac => 40,
            Suite::Casoratian => 12,
            Suite::Genfun => 200,
            Suite::Cd => 30,
            Suite::Sl => 30,
            Suite::NodesIdentities => 50,
            Suite::LebesgueTheorem => 25,
            Suite::All => 0,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::INDIVIDUAL
            .iter()
            .chain(std::iter::once(&Suite::All))
            .copied()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| domain(format!("unknown suite '{s}'")))
    }
}

/// One row of a report. `pass` is `max_residual <= tolerance`.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub identity: &'static str,
    pub params: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    fn new(suite: Suite, identity: &'static str, params: String, max_residual: f64, tolerance: f64) -> Self {
        Self {
            suite: suite.name(),
            identity,
            params,
            max_residual,
            tolerance,
            pass: max_residual <= tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub const CSV_HEADER: &'static str = "suite,identity,params,max_residual,tolerance,pass";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                c.suite,
                c.identity,
                c.params,
                crate::cli::fmt_float(c.max_residual),
                crate::cli::fmt_float(c.tolerance),
                c.pass
            );
        }
        out
    }

    pub fn summary(&self) -> String {
        let failed = self.failures().count();
        format!(
            "suite {}: {} checks, {} failed, overall {}",
            self.suite,
            self.checks.len(),
            failed,
            if self.pass() { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct VerifyConfig {
    /// Overrides every suite's default degree bound.
    pub n_max: Option<usize>,
    pub tol: Tolerances,
    pub exec: Exec,
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::INDIVIDUAL.to_vec()
    } else {
        vec![suite]
    };
    let mut checks = Vec::new();
    for s in suites {
        let n_max = cfg.n_max.unwrap_or(s.default_n_max());
        let mut part = match s {
            Suite::Orthogonality => orthogonality(n_max, cfg)?,
            Suite::Recurrence => recurrence(n_max, cfg)?,
            Suite::Contfrac => contfrac(n_max, cfg)?,
            Suite::Casoratian => casoratian_suite(n_max, cfg)?,
            Suite::Genfun => genfun(n_max, cfg)?,
            Suite::Cd => christoffel_darboux(n_max, cfg)?,
            Suite::Sl => sturm_liouville(n_max, cfg)?,
            Suite::NodesIdentities => node_identities(n_max, cfg)?,
            Suite::LebesgueTheorem => lebesgue_theorem(n_max, cfg)?,
            Suite::All => unreachable!(),
        };
        checks.append(&mut part);
    }
    Ok(VerificationReport {
        suite: suite.name().to_string(),
        checks,
    })
}

fn fmt_p(p: BetaGamma) -> String {
    format!("beta={} gamma={}", p.beta(), p.gamma())
}

fn max_abs<I: IntoIterator<Item = f64>>(it: I) -> f64 {
    it.into_iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// Maximum of per-item results in index order, propagating the first error.
fn max_over<F>(exec: Exec, len: usize, f: F) -> Result<f64>
where
    F: Fn(usize) -> Result<f64> + Sync + Send,
{
    let parts = exec.map(len, f);
    let mut m: f64 = 0.0;
    for v in parts {
        m = m.max(v?);
    }
    Ok(m)
}

fn orthogonality(n_max: usize, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    GRAM_SWEEP
        .iter()
        .map(|&(b, g)| {
            let p = BetaGamma::new(b, g)?;
            let table = gram_table_with(p, n_max, QuadratureSpec::for_degree(n_max), cfg.exec);
            Ok(Check::new(
                Suite::Orthogonality,
                "gram-table",
                format!("{} max_degree={n_max}", fmt_p(p)),
                table.max_deviation(),
                cfg.tol.orthogonality,
            ))
        })
        .collect()
}

fn recurrence(n_max: usize, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let sweep = parameter_sweep();
    let xs = grid(-1.0, 1.0, 1000);
    (0..=n_max)
        .map(|n| {
            let r = max_over(cfg.exec, sweep.len(), |k| {
                let p = sweep[k];
                let mut m: f64 = 0.0;
                for &x in &xs {
                    m = m.max((eval_recurrence(p, n, x)? - eval_closed(p, n, x)?).abs());
                }
                Ok(m)
            })?;
            Ok(Check::new(
                Suite::Recurrence,
                "recurrence-vs-closed",
                format!("n={n} sweep=5x5 grid=1000"),
                r,
                cfg.tol.recurrence,
            ))
        })
        .collect()
}

fn contfrac(n_max: usize, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let sweep = parameter_sweep();
    let xs = grid(-1.0, 1.0, 200);
    let unit = LambdaSeq::default();
    let alternatives = [LambdaSeq::new(0.1)?, LambdaSeq::new(10.0)?];
    let mut checks = Vec::new();
    for n in 0..=n_max {
        let r = max_over(cfg.exec, sweep.len(), |k| {
            let p = sweep[k];
            let mut m: f64 = 0.0;
            for &x in &xs {
                let b = cf_convergent(p, n, x, unit)?.denominator;
                m = m.max((b - normalized(p, n, x)?).abs());
            }
            Ok(m)
        })?;
        checks.push(Check::new(
            Suite::Contfrac,
            "denominator-is-normalized",
            format!("n={n} sweep=5x5 grid=200"),
            r,
            cfg.tol.contfrac,
        ));
    }
    for n in -1..=n_max as isize {
        let r = max_over(cfg.exec, sweep.len(), |k| {
            let p = sweep[k];
            let mut m: f64 = 0.0;
            for &x in &xs {
                let base = associated(p, n, x, unit)?;
                for l in alternatives {
                    m = m.max((associated(p, n, x, l)? - base).abs());
                }
            }
            Ok(m)
        })?;
        checks.push(Check::new(
            Suite::Contfrac,
            "associated-lambda1-independence",
            format!("n={n} lambda1=0.1;1;10"),
            r,
            cfg.tol.associated,
        ));
    }
    Ok(checks)
}

fn casoratian_suite(n_max: usize, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let sweep = parameter_sweep();
    let xs = grid(-1.0, 1.0, 200);
    let mut checks = Vec::new();
    for n in 1..=n_max.max(1) {
        let expected = casoratian_constant(n);
        let values: Vec<Result<(f64, f64)>> = cfg.exec.map(sweep.len(), |k| {
            let p = sweep[k];
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            let mut dev: f64 = 0.0;
            for &x in &xs {
                let c = casoratian(p, n, x)?;
                lo = lo.min(c);
                hi = hi.max(c);
                dev = dev.max((c - expected).abs());
            }
            Ok((dev, hi - lo))
        });
        let (mut dev, mut spread): (f64, f64) = (0.0, 0.0);
        for v in values {
            let (d, s) = v?;
            dev = dev.max(d);
            spread = spread.max(s);
        }
        checks.push(Check::new(
            Suite::Casoratian,
            "casoratian-value",
            format!("n={n} expected={expected}"),
            dev,
            cfg.tol.casoratian,
        ));
        checks.push(Check::new(
            Suite::Casoratian,
            "casoratian-constant-in-x",
            format!("n={n}"),
            spread,
            cfg.tol.casoratian,
        ));
    }
    Ok(checks)
}

fn genfun(terms: usize, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let sweep = parameter_sweep();
    let xs = grid(-1.0, 1.0, 101);
    [-0.9, -0.5, -0.1, 0.1, 0.5, 0.9]
        .iter()
        .map(|&u| {
            let bound = genfun_tail_bound(u, terms);
            let excess = max_over(cfg.exec, sweep.len(), |k| {
                let p = sweep[k];
                let mut m: f64 = 0.0;
                for &x in &xs {
                    let pt = GenFunPoint::new(u, x)?;
                    let err = (genfun_partial(p, pt, terms)? - genfun_closed(p, pt)?).abs();
                    m = m.max(err - bound);
                }
                Ok(m)
            })?;
            Ok(Check::new(
                Suite::Genfun,
                "partial-sum-tail-bound",
                format!("u={u} N={terms} bound={bound}"),
                excess,
                cfg.tol.genfun_slack,
            ))
        })
        .collect()
}

/// `count` pairs in `[-1,1]²` with `|T_1(x) - T_1(y)| ≥ min_gap`.
pub fn separated_pairs(p: BetaGamma, count: usize, min_gap: f64, seed: u64) -> Result<Vec<KernelPair>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let x: f64 = rng.gen_range(-1.0..=1.0);
        let y: f64 = rng.gen_range(-1.0..=1.0);
        if (first(p, x)? - first(p, y)?).abs() >= min_gap {
            out.push(KernelPair::new(x, y)?);
        }
    }
    Ok(out)
}

/// Minimum `|T_1(x) - T_1(y)|` for the random pairs of the CD check.
pub const CD_MIN_GAP: f64 = 1e-2;
pub const CD_PAIRS: usize = 1000;
pub const CD_SEED: u64 = 0x00c0_ffee;

fn christoffel_darboux(n_max: usize, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let sweep = parameter_sweep();
    let pair_sets: Vec<Vec<KernelPair>> = sweep
        .iter()
        .enumerate()
        .map(|(k, &p)| separated_pairs(p, CD_PAIRS, CD_MIN_GAP, CD_SEED + k as u64))
        .collect::<Result<_>>()?;
    (0..=n_max)
        .map(|n| {
            let r = max_over(cfg.exec, sweep.len(), |k| {
                let p = sweep[k];
                let mut m: f64 = 0.0;
                for &pair in &pair_sets[k] {
                    let rhs = cd_rhs(p, n, pair, crate::identities::DEFAULT_SINGULAR_THRESHOLD)?;
                    let lhs = cd_lhs(p, n, pair)?;
                    m = m.max((lhs - rhs).abs() / (1.0 + rhs.abs()));
                }
                Ok(m)
            })?;
            Ok(Check::new(
                Suite::Cd,
                "christoffel-darboux",
                format!("n={n} pairs={CD_PAIRS} sweep=5x5"),
                r,
                cfg.tol.christoffel_darboux,
            ))
        })
        .collect()
}

fn sturm_liouville(n_max: usize, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let sweep = parameter_sweep();
    let edge = 1.0 - 1e-3;
    let xs = grid(-edge, edge, 401);
    (0..=n_max)
        .map(|n| {
            let r = max_over(cfg.exec, sweep.len(), |k| {
                let p = sweep[k];
                let mut m: f64 = 0.0;
                for &x in &xs {
                    m = m.max(sl_residual(p, n, x)?.abs());
                }
                Ok(m)
            })?;
            Ok(Check::new(
                Suite::Sl,
                "sturm-liouville-residual",
                format!("n={n} |x|<=1-1e-3 sweep=5x5"),
                r,
                cfg.tol.sturm_liouville * (n * n) as f64,
            ))
        })
        .collect()
}

fn node_identities(n_max: usize, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let sweep = parameter_sweep();
    let tol = cfg.tol;
    let mut checks = Vec::new();
    for n in 1..=n_max.max(1) {
        let params = format!("n={n}");
        let roots = max_over(cfg.exec, sweep.len(), |k| {
            let p = sweep[k];
            let zeros = bg_chebyshev_zeros(p, n)?;
            let mut m = max_abs(zeros.points().iter().map(|&z| eval_closed(p, n, z).unwrap_or(f64::NAN)));
            let cl = bg_cl_points(p, n + 1)?;
            for &u in cl.points() {
                m = m.max(crate::functions::eval_cl_function(p, n, u)?.abs());
            }
            Ok(m)
        })?;
        checks.push(Check::new(Suite::NodesIdentities, "zeros-are-roots", params.clone(), roots, tol.roots));

        let interlace_failures = max_over(cfg.exec, sweep.len(), |k| {
            let p = sweep[k];
            let ok = interlaces(bg_cl_points(p, n + 1)?.points(), bg_chebyshev_zeros(p, n)?.points());
            Ok(if ok { 0.0 } else { 1.0 })
        })?;
        checks.push(Check::new(Suite::NodesIdentities, "interlacing", params.clone(), interlace_failures, 0.0));

        if n >= 2 {
            let kte = max_over(cfg.exec, sweep.len(), |k| {
                let p = sweep[k];
                let mapped = kte_mapped(1.0, &equispaced(p, n)?)?;
                Ok(mapped.max_distance(bg_cl_points(p, n)?.points()).unwrap_or(f64::INFINITY))
            })?;
            checks.push(Check::new(Suite::NodesIdentities, "kte-map", params.clone(), kte, tol.nodes));

            let zc = max_over(cfg.exec, sweep.len(), |k| {
                let p = sweep[k];
                let (_, set) = zeros_as_cl(p, n)?;
                Ok(set.max_distance(bg_chebyshev_zeros(p, n)?.points()).unwrap_or(f64::INFINITY))
            })?;
            checks.push(Check::new(Suite::NodesIdentities, "zeros-as-cl", params.clone(), zc, tol.nodes));
        }

        let trims: Vec<TrimSpec> = (0..=5usize)
            .flat_map(|k1| (0..=5usize).map(move |k2| (k1, k2)))
            .filter_map(|(k1, k2)| TrimSpec::new(k1, k2).ok())
            .collect();
        let subset = max_over(cfg.exec, trims.len(), |k| {
            let t = trims[k];
            let u = bg_cl_points(subset_params(n, t)?, n + 1)?;
            let full = classical_cl(n + t.kappa1() + t.kappa2() + 1)?;
            Ok(u
                .max_distance(&full.points()[t.kappa2()..t.kappa2() + n + 1])
                .unwrap_or(f64::INFINITY))
        })?;
        checks.push(Check::new(Suite::NodesIdentities, "cl-subset", format!("n={n} kappa<=5"), subset, tol.nodes));
    }
    Ok(checks)
}

/// Samples per subinterval for the dense proof-property checks.
pub const DENSE_SAMPLES: usize = 1000;

/// Largest increase between consecutive samples of the Lebesgue function of
/// the left-trimmed set on `[-1, u_min]` (0 when strictly decreasing).
pub fn left_monotonicity_violation(n: usize) -> Result<f64> {
    let set = trimmed_cl(n, TrimSpec::new(1, 0)?)?;
    let it = Interpolant::new(&set)?;
    let u_min = *set.points().last().expect("non-empty");
    let xs = grid(-1.0, u_min, DENSE_SAMPLES);
    let vals: Vec<f64> = xs.iter().map(|&x| lebesgue_function(&it, x)).collect();
    Ok(vals
        .windows(2)
        .map(|w| if w[1] < w[0] { 0.0 } else { w[1] - w[0] + f64::MIN_POSITIVE })
        .fold(0.0, f64::max))
}

/// `max(0, max 2|ℓ_n(x)| - 1)` over `[u_{n-1}, 1]` for the `n+1` classical CL
/// nodes.
pub fn last_basis_bound_excess(n: usize) -> Result<f64> {
    let set = classical_cl(n + 1)?;
    let it = Interpolant::new(&set)?;
    let u = set.points()[n - 1];
    let m = grid(u, 1.0, 20 * DENSE_SAMPLES)
        .into_iter()
        .map(|x| 2.0 * lagrange_basis(&it, n, x).abs())
        .fold(0.0, f64::max);
    Ok((m - 1.0).max(0.0))
}

/// `max(0, Λ(classical CL, n+1 nodes) - n)`.
pub fn classical_cl_bound_excess(n: usize, exec: Exec) -> Result<f64> {
    let it = Interpolant::new(&classical_cl(n + 1)?)?;
    let r = lebesgue_constant_with(&it, (-1.0, 1.0), DEFAULT_GRID_PER_GAP, exec)?;
    Ok((r.constant - n as f64).max(0.0))
}

fn lebesgue_theorem(n_max: usize, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let tol = cfg.tol.lebesgue;
    let left = TrimSpec::new(1, 0)?;
    let both = TrimSpec::new(1, 1)?;
    for n in 2..=n_max.max(2) {
        let it = Interpolant::new(&trimmed_cl(n, left)?)?;
        let want = (2 * n - 1) as f64;
        let r = lebesgue_constant_with(&it, (-1.0, 1.0), DEFAULT_GRID_PER_GAP, cfg.exec)?;
        checks.push(Check::new(
            Suite::LebesgueTheorem,
            "left-trimmed-constant",
            format!("n={n} expected={want} got={}", r.constant),
            (r.constant - want).abs() / want,
            tol,
        ));
        checks.push(Check::new(
            Suite::LebesgueTheorem,
            "left-trimmed-argmax",
            format!("n={n} argmax={}", r.argmax),
            (r.argmax + 1.0).abs(),
            0.0,
        ));
        let endpoint = lebesgue_function(&it, -1.0);
        checks.push(Check::new(
            Suite::LebesgueTheorem,
            "left-trimmed-endpoint",
            format!("n={n}"),
            (endpoint - want).abs() / want,
            cfg.tol.lebesgue.min(1e-10),
        ));

        let it = Interpolant::new(&trimmed_cl(n, both)?)?;
        let r = lebesgue_constant_with(&it, (-1.0, 1.0), DEFAULT_GRID_PER_GAP, cfg.exec)?;
        checks.push(Check::new(
            Suite::LebesgueTheorem,
            "both-trimmed-constant",
            format!("n={n} expected={n} got={}", r.constant),
            (r.constant - n as f64).abs() / n as f64,
            tol,
        ));

        checks.push(Check::new(
            Suite::LebesgueTheorem,
            "left-trimmed-monotone",
            format!("n={n} samples={DENSE_SAMPLES}"),
            left_monotonicity_violation(n)?,
            0.0,
        ));
        checks.push(Check::new(
            Suite::LebesgueTheorem,
            "last-basis-bound",
            format!("n={n}"),
            last_basis_bound_excess(n)?,
            0.0,
        ));
        checks.push(Check::new(
            Suite::LebesgueTheorem,
            "classical-cl-bound",
            format!("n={n}"),
            classical_cl_bound_excess(n, cfg.exec)?,
            0.0,
        ));
    }
    Ok(checks)
}
