//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::f64::consts::PI;
use std::process::Command;
use std::time::{Duration, Instant};

use bgcheb::contfrac::{associated, casoratian, cf_convergent, normalized, LambdaSeq};
use bgcheb::functions::{eval_closed, eval_recurrence, BetaGamma};
use bgcheb::gram::{gram_table, QuadratureSpec};
use bgcheb::identities::{
    cd_lhs, cd_rhs, genfun_closed, genfun_partial, genfun_tail_bound, sl_residual, GenFunPoint,
    DEFAULT_SINGULAR_THRESHOLD,
};
use bgcheb::interp::{lagrange_basis, lebesgue_constant, lebesgue_function, Interpolant};
use bgcheb::nodes::{
    bg_chebyshev_zeros, bg_cl_points, classical_cl, equispaced, kte_mapped, subset_params, trimmed_cl, zeros_as_cl,
};
use bgcheb::tolerances::{grid, parameter_sweep, GRAM_SWEEP};
use bgcheb::verify::{separated_pairs, CD_MIN_GAP, CD_PAIRS, CD_SEED};
use bgcheb::{Exec, TrimSpec};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn left() -> TrimSpec {
    TrimSpec::new(1, 0).unwrap()
}

fn both() -> TrimSpec {
    TrimSpec::new(1, 1).unwrap()
}

fn lebesgue_theorem() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut bad_argmax = Vec::new();
    for n in 2..=25 {
        let it = Interpolant::new(&trimmed_cl(n, left()).unwrap()).unwrap();
        let r = lebesgue_constant(&it, (-1.0, 1.0), 32).unwrap();
        let want = (2 * n - 1) as f64;
        worst = worst.max((r.constant - want).abs() / want);
        if r.argmax != -1.0 {
            bad_argmax.push((n, r.argmax));
        }
    }
    let elapsed = start.elapsed();
    check(
        worst < 1e-9 && bad_argmax.is_empty() && elapsed < Duration::from_secs(5),
        format!("max rel err {worst:e}, bad argmax {bad_argmax:?}, {elapsed:.2?}"),
    )
}

fn endpoint_value() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 2..=50 {
        let it = Interpolant::new(&trimmed_cl(n, left()).unwrap()).unwrap();
        let want = (2 * n - 1) as f64;
        worst = worst.max((lebesgue_function(&it, -1.0) - want).abs() / want);
    }
    check(worst < 1e-10, format!("max rel err {worst:e} for n = 2..50"))
}

fn trimmed_both_ends() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 2..=25 {
        let it = Interpolant::new(&trimmed_cl(n, both()).unwrap()).unwrap();
        let r = lebesgue_constant(&it, (-1.0, 1.0), 32).unwrap();
        worst = worst.max((r.constant - n as f64).abs() / n as f64);
    }
    check(worst < 1e-9, format!("max rel err {worst:e} for n = 2..25"))
}

fn orthogonality() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for (b, g) in GRAM_SWEEP {
        let p = BetaGamma::new(b, g).unwrap();
        worst = worst.max(gram_table(p, 20, QuadratureSpec::for_degree(20)).max_deviation());
    }
    let elapsed = start.elapsed();
    check(
        worst < 1e-10 && elapsed < Duration::from_secs(10),
        format!("max deviation {worst:e}, {elapsed:.2?}"),
    )
}

fn recurrence() -> Outcome {
    let xs = grid(-1.0, 1.0, 1000);
    let mut worst: f64 = 0.0;
    for p in parameter_sweep() {
        for n in 0..=50 {
            for &x in &xs {
                worst = worst.max((eval_recurrence(p, n, x).unwrap() - eval_closed(p, n, x).unwrap()).abs());
            }
        }
    }
    check(worst < 1e-10, format!("max |recurrence - closed| {worst:e}"))
}

fn continued_fractions() -> Outcome {
    let xs = grid(-1.0, 1.0, 200);
    let unit = LambdaSeq::default();
    let others = [LambdaSeq::new(0.1).unwrap(), LambdaSeq::new(10.0).unwrap()];
    let (mut denom, mut assoc): (f64, f64) = (0.0, 0.0);
    for p in parameter_sweep() {
        for &x in &xs {
            for n in 0..=40 {
                let b = cf_convergent(p, n, x, unit).unwrap().denominator;
                denom = denom.max((b - normalized(p, n, x).unwrap()).abs());
            }
            for n in -1..=40isize {
                let base = associated(p, n, x, unit).unwrap();
                for l in others {
                    assoc = assoc.max((associated(p, n, x, l).unwrap() - base).abs());
                }
            }
        }
    }
    check(
        denom < 1e-11 && assoc < 1e-12,
        format!("B_n vs normalized {denom:e}, lambda1 spread {assoc:e}"),
    )
}

fn casoratian_identity() -> Outcome {
    let xs = grid(-1.0, 1.0, 200);
    let (mut worst, mut spread): (f64, f64) = (0.0, 0.0);
    let mut first_bad = None;
    for n in 1..=12usize {
        let expected = if n == 1 { -0.5 } else { -0.5 * 0.25f64.powi(n as i32 - 2) };
        for p in parameter_sweep() {
            let vals: Vec<f64> = xs.iter().map(|&x| casoratian(p, n, x).unwrap()).collect();
            let lo = vals.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            spread = spread.max(hi - lo);
            let r = vals.iter().map(|v| (v - expected).abs()).fold(0.0, f64::max);
            if r >= 1e-12 && first_bad.is_none() {
                first_bad = Some((n, expected, vals[0]));
            }
            worst = worst.max(r);
        }
    }
    let detail = match first_bad {
        Some((n, want, got)) => format!(
            "max residual {worst:e}, spread {spread:e}; first mismatch n={n}: expected {want}, computed {got}"
        ),
        None => format!("max residual {worst:e}, spread {spread:e}"),
    };
    check(worst < 1e-12 && spread < 1e-12, detail)
}

fn generating_function() -> Outcome {
    let xs = grid(-1.0, 1.0, 101);
    let mut excess = f64::NEG_INFINITY;
    for u in [-0.9, -0.5, -0.1, 0.1, 0.5, 0.9] {
        let bound = genfun_tail_bound(u, 200) + 1e-13;
        for p in parameter_sweep() {
            for &x in &xs {
                let pt = GenFunPoint::new(u, x).unwrap();
                let err = (genfun_partial(p, pt, 200).unwrap() - genfun_closed(p, pt).unwrap()).abs();
                excess = excess.max(err - bound);
            }
        }
    }
    check(excess <= 0.0, format!("max (error - bound) {excess:e}"))
}

fn christoffel_darboux() -> Outcome {
    let mut worst: f64 = 0.0;
    for (k, p) in parameter_sweep().into_iter().enumerate() {
        let pairs = separated_pairs(p, CD_PAIRS, CD_MIN_GAP, CD_SEED + k as u64).unwrap();
        for n in 0..=30 {
            for &pair in &pairs {
                let rhs = cd_rhs(p, n, pair, DEFAULT_SINGULAR_THRESHOLD).unwrap();
                let lhs = cd_lhs(p, n, pair).unwrap();
                worst = worst.max((lhs - rhs).abs() / (1.0 + rhs.abs()));
            }
        }
    }
    check(worst < 1e-10, format!("max |lhs - rhs| / (1 + |rhs|) {worst:e}"))
}

fn sturm_liouville() -> Outcome {
    let edge = 1.0 - 1e-3;
    let xs = grid(-edge, edge, 401);
    let mut worst_ratio: f64 = 0.0;
    for p in parameter_sweep() {
        for n in 1..=30usize {
            let r = xs.iter().map(|&x| sl_residual(p, n, x).unwrap().abs()).fold(0.0, f64::max);
            worst_ratio = worst_ratio.max(r / (1e-7 * (n * n) as f64));
        }
        let r0 = xs.iter().map(|&x| sl_residual(p, 0, x).unwrap().abs()).fold(0.0, f64::max);
        if r0 != 0.0 {
            return Err(format!("n = 0 residual {r0:e}"));
        }
    }
    check(worst_ratio < 1.0, format!("max residual / (1e-7 n^2) = {worst_ratio:e}"))
}

fn node_identities() -> Outcome {
    let sweep = parameter_sweep();
    let (mut kte, mut zc, mut subset): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for n in 2..=50usize {
        for &p in &sweep {
            let mapped = kte_mapped(1.0, &equispaced(p, n).unwrap()).unwrap();
            kte = kte.max(mapped.max_distance(bg_cl_points(p, n).unwrap().points()).unwrap());
            let (_, set) = zeros_as_cl(p, n).unwrap();
            zc = zc.max(set.max_distance(bg_chebyshev_zeros(p, n).unwrap().points()).unwrap());
        }
    }
    for n in 1..=50usize {
        for k1 in 0..=5usize {
            for k2 in 0..=5usize {
                let Ok(t) = TrimSpec::new(k1, k2) else { continue };
                let u = bg_cl_points(subset_params(n, t).unwrap(), n + 1).unwrap();
                let full = classical_cl(n + k1 + k2 + 1).unwrap();
                subset = subset.max(u.max_distance(&full.points()[k2..k2 + n + 1]).unwrap());
            }
        }
    }
    check(
        kte <= 1e-14 && zc <= 1e-14 && subset <= 1e-14,
        format!("kte {kte:e}, zeros-as-cl {zc:e}, cl-subset {subset:e}"),
    )
}

fn proof_properties() -> Outcome {
    let mut problems = Vec::new();
    let mut worst_basis: f64 = 0.0;
    let mut worst_bound = f64::NEG_INFINITY;
    for n in 2..=25usize {
        // λ strictly decreasing on [-1, u_{n-1}] for the left-trimmed set
        let set = trimmed_cl(n, left()).unwrap();
        let it = Interpolant::new(&set).unwrap();
        let u = *set.points().last().unwrap();
        let vals: Vec<f64> = grid(-1.0, u, 1000).iter().map(|&x| lebesgue_function(&it, x)).collect();
        if let Some(i) = vals.windows(2).position(|w| w[1] >= w[0]) {
            problems.push(format!("n={n}: not decreasing at sample {i}"));
        }

        // 2|ℓ_n(cos θ)| ≤ 1 for θ in [0, θ_{n-1}] at the n+1 classical CL nodes
        let cl = Interpolant::new(&classical_cl(n + 1).unwrap()).unwrap();
        let theta_max = (n - 1) as f64 * PI / n as f64;
        for &theta in &grid(0.0, theta_max, 20_000) {
            worst_basis = worst_basis.max(2.0 * lagrange_basis(&cl, n, theta.cos()).abs());
        }

        // λ(U_{n+1}; x) ≤ n on [-1, 1]
        let m = grid(-1.0, 1.0, 20_001)
            .iter()
            .map(|&x| lebesgue_function(&cl, x))
            .fold(0.0, f64::max);
        worst_bound = worst_bound.max(m - n as f64);
    }
    if worst_basis > 1.0 {
        problems.push(format!("max 2|l_n| = {worst_basis}"));
    }
    if worst_bound > 1e-12 {
        problems.push(format!("max lambda - n = {worst_bound:e}"));
    }
    let detail = format!("max 2|l_n| {worst_basis}, max (lambda - n) {worst_bound:e}");
    if problems.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{detail}; {}", problems.join("; ")))
    }
}

fn brute_force_oracle() -> Outcome {
    const SAMPLES: usize = 1_000_000;
    let mut worst: f64 = 0.0;
    let exec = Exec::default();
    for n in 2..=8usize {
        let sets = [
            classical_cl(n + 1).unwrap(),
            trimmed_cl(n, left()).unwrap(),
            trimmed_cl(n, both()).unwrap(),
            bg_cl_points(BetaGamma::new(0.3, 0.4).unwrap(), n + 1).unwrap(),
        ];
        for set in &sets {
            let it = Interpolant::new(set).unwrap();
            let r = lebesgue_constant(&it, (-1.0, 1.0), 32).unwrap();
            let chunks = 64;
            let per = SAMPLES / chunks;
            let brute = exec.max_of(chunks, |c| {
                let start = c * per;
                let end = if c + 1 == chunks { SAMPLES } else { start + per };
                (start..end)
                    .map(|i| lebesgue_function(&it, -1.0 + 2.0 * i as f64 / (SAMPLES - 1) as f64))
                    .fold(0.0, f64::max)
            });
            worst = worst.max((r.constant - brute).abs());
        }
    }
    check(worst < 1e-6, format!("max |Lambda - brute force| {worst:e}"))
}

fn cli_determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_bgcheb"))
            .args(["verify", "--suite", "all"])
            .output()
            .expect("failed to run bgcheb")
    };
    let a = run();
    let b = run();
    let code = a.status.code();
    check(
        code == Some(0) && b.status.code() == Some(0) && a.stdout == b.stdout && !a.stdout.is_empty(),
        format!(
            "exit {:?}/{:?}, {} bytes, identical: {}",
            code,
            b.status.code(),
            a.stdout.len(),
            a.stdout == b.stdout
        ),
    )
}

fn main() {
    let criteria: [Criterion; 14] = [
        ("Lebesgue constant of the left-trimmed CL family", lebesgue_theorem),
        ("Lebesgue function at -1", endpoint_value),
        ("Lebesgue constant of the both-ends-trimmed family", trimmed_both_ends),
        ("Gram table orthogonality", orthogonality),
        ("recurrence vs closed form", recurrence),
        ("continued fraction denominators and associated functions", continued_fractions),
        ("Casoratian identity", casoratian_identity),
        ("generating function tail bound", generating_function),
        ("Christoffel-Darboux formula", christoffel_darboux),
        ("Sturm-Liouville residual", sturm_liouville),
        ("node identities", node_identities),
        ("proof-internal properties", proof_properties),
        ("brute-force Lebesgue oracle", brute_force_oracle),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let (status, detail) = match f() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {status}: {name} ({detail})", i + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
