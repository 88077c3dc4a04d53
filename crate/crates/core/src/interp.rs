//! Barycentric Lagrange interpolation, Lebesgue functions and constants, and
//! the closed trigonometric form of the Lagrange basis at classical CL nodes.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::exec::Exec;
use crate::nodes::NodeSet;

/// Nodes closer than this are considered coincident.
pub const COINCIDENT_NODES: f64 = 1e-14;

/// An evaluation point this close to a node is treated as the node.
pub const NODE_SNAP: f64 = 1e-15;

/// Abscissa tolerance of the golden-section refinement.
pub const REFINE_TOL: f64 = 1e-12;

/// Relative gap below which two candidate maxima count as a tie.
pub const TIE_RTOL: f64 = 1e-13;

pub const DEFAULT_GRID_PER_GAP: usize = 32;

/// Barycentric weights `w_i = Π_{j≠i} 1/(x_i - x_j)`, rescaled so that
/// `max |w_i| = 1`.
///
/// Products are accumulated as mantissa × 2^exponent with exact power-of-two
/// rescaling, so large node counts neither overflow nor underflow.
pub fn barycentric_weights(points: &[f64]) -> Result<Vec<f64>> {
    Ok(scaled_weights(points)?.0)
}

const BIG: f64 = 1.157_920_892_373_162e77; // 2^256
const SMALL: f64 = 1.0 / BIG;

/// `Π (x - x_j)` over `points` skipping index `skip`, as mantissa and power
/// of two.
fn scaled_product(points: &[f64], x: f64, skip: Option<usize>) -> (f64, i32) {
    let mut m = 1.0f64;
    let mut e = 0i32;
    for (j, &xj) in points.iter().enumerate() {
        if Some(j) == skip {
            continue;
        }
        m *= x - xj;
        if m.abs() > BIG {
            m *= SMALL;
            e += 256;
        } else if m.abs() < SMALL && m != 0.0 {
            m *= BIG;
            e -= 256;
        }
    }
    (m, e)
}

/// Weights together with the factor `c = 2^exp / max` they carry relative to
/// the unscaled products.
fn scaled_weights(points: &[f64]) -> Result<(Vec<f64>, Scale)> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            let gap = (points[i] - points[j]).abs();
            if gap < COINCIDENT_NODES {
                return Err(Error::DegenerateNodes { i, j, gap });
            }
        }
    }
    let scaled: Vec<(f64, i32)> = points
        .iter()
        .enumerate()
        .map(|(i, &xi)| scaled_product(points, xi, Some(i)))
        .collect();
    // |w_i| = 1/(|m_i| 2^{e_i}); the largest weight has the smallest product.
    let log_mag = |&(m, e): &(f64, i32)| m.abs().log2() + e as f64;
    let (_, ref_e) = scaled
        .iter()
        .copied()
        .min_by(|a, b| log_mag(a).total_cmp(&log_mag(b)))
        .unwrap_or((1.0, 0));
    let mut weights: Vec<f64> = scaled
        .iter()
        .map(|&(m, e)| pow2(ref_e - e) / m)
        .collect();
    let max = weights.iter().fold(0.0f64, |acc, w| acc.max(w.abs()));
    let max = if max > 0.0 { max } else { 1.0 };
    weights.iter_mut().for_each(|w| *w /= max);
    Ok((weights, Scale { exp: ref_e, max }))
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Scale {
    exp: i32,
    max: f64,
}

fn pow2(e: i32) -> f64 {
    // 2^e without overflow in the intermediate for |e| up to a few thousand
    let mut v = 1.0f64;
    let mut e = e;
    while e > 1000 {
        v *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        v *= 2f64.powi(-1000);
        e += 1000;
    }
    v * 2f64.powi(e)
}

/// Node set, barycentric weights and optional ordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Interpolant {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    scale: Scale,
    values: Option<Vec<f64>>,
}

impl Interpolant {
    pub fn new(nodes: &NodeSet) -> Result<Self> {
        Self::from_points(nodes.points())
    }

    pub fn from_points(points: &[f64]) -> Result<Self> {
        if points.is_empty() {
            return Err(domain("interpolant needs at least one node"));
        }
        let (weights, scale) = scaled_weights(points)?;
        Ok(Self {
            nodes: points.to_vec(),
            weights,
            scale,
            values: None,
        })
    }

    pub fn with_values(mut self, values: Vec<f64>) -> Result<Self> {
        if values.len() != self.nodes.len() {
            return Err(domain(format!(
                "expected {} ordinates, got {}",
                self.nodes.len(),
                values.len()
            )));
        }
        self.values = Some(values);
        Ok(self)
    }

    /// Samples `f` at the nodes.
    pub fn with_function<F: Fn(f64) -> f64>(self, f: F) -> Self {
        let values = self.nodes.iter().map(|&x| f(x)).collect();
        Self {
            values: Some(values),
            ..self
        }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn values(&self) -> Option<&[f64]> {
        self.values.as_deref()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn coincident_node(&self, x: f64) -> Option<usize> {
        self.nodes.iter().position(|&xi| (x - xi).abs() <= NODE_SNAP)
    }

    /// `(Σ |w_i/(x-x_i)|, Σ w_i/(x-x_i))` for `x` off the nodes.
    fn sums(&self, x: f64) -> (f64, f64) {
        let (abs, sig) = self
            .nodes
            .iter()
            .zip(&self.weights)
            .fold((0.0, 0.0), |(abs, sig), (&xi, &wi)| {
                let t = wi / (x - xi);
                (abs + t.abs(), sig + t)
            });
        (abs, self.outside_denominator(x).unwrap_or(sig))
    }

    /// Outside the node hull the signed sum cancels badly; there it equals
    /// `c / Π (x - x_j)` exactly, which is computed directly instead.
    fn outside_denominator(&self, x: f64) -> Option<f64> {
        let (lo, hi) = self
            .nodes
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
        if x > lo && x < hi {
            return None;
        }
        let (m, e) = scaled_product(&self.nodes, x, None);
        Some(pow2(self.scale.exp - e) / (self.scale.max * m))
    }
}

/// `ℓ_i(x)` by the barycentric second form.
pub fn lagrange_basis(interp: &Interpolant, i: usize, x: f64) -> f64 {
    assert!(i < interp.len(), "basis index {i} out of range");
    if let Some(k) = interp.coincident_node(x) {
        return if k == i { 1.0 } else { 0.0 };
    }
    let (_, denom) = interp.sums(x);
    interp.weights[i] / (x - interp.nodes[i]) / denom
}

/// `λ(x) = Σ |ℓ_i(x)|`.
pub fn lebesgue_function(interp: &Interpolant, x: f64) -> f64 {
    if interp.coincident_node(x).is_some() {
        return 1.0;
    }
    let (abs, sig) = interp.sums(x);
    abs / sig.abs()
}

/// Barycentric value of the interpolant with stored ordinates.
pub fn interpolate(interp: &Interpolant, x: f64) -> Result<f64> {
    let values = interp.values.as_ref().ok_or(Error::MissingValues)?;
    if let Some(k) = interp.coincident_node(x) {
        return Ok(values[k]);
    }
    let (num, den) = interp
        .nodes
        .iter()
        .zip(&interp.weights)
        .zip(values)
        .fold((0.0, 0.0), |(num, den), ((&xi, &wi), &fi)| {
            let t = wi / (x - xi);
            (num + t * fi, den + t)
        });
    Ok(num / den)
}

/// Closed form of the `i`-th Lagrange basis function at the `n + 1`
/// classical CL nodes `cos(iπ/n)`, as a function of `θ = arccos x`:
///
/// ```text
/// ℓ_i(cos θ) = (-1)^i δ_i / (2n) · sin(nθ) · (cot((θ+θ_i)/2) + cot((θ-θ_i)/2))
/// ```
///
/// with `θ_i = iπ/n` and `δ_i = 1/2` at `i ∈ {0, n}`, 1 otherwise.
pub fn trig_lagrange_cl(n: usize, i: usize, theta: f64) -> Result<f64> {
    if n == 0 || i > n {
        return Err(domain(format!("need 0 <= i <= n and n >= 1 (got n={n}, i={i})")));
    }
    if !(0.0..=PI).contains(&theta) {
        return Err(domain(format!("theta = {theta} lies outside [0, pi]")));
    }
    let theta_i = i as f64 * PI / n as f64;
    if (theta - theta_i).abs() < 1e-10 {
        return Err(Error::Singularity {
            x: theta.cos(),
            what: "trigonometric Lagrange form at its own node",
        });
    }
    let delta = if i == 0 || i == n { 0.5 } else { 1.0 };
    let sign = if i.is_multiple_of(2) { 1.0 } else { -1.0 };
    let cot = |a: f64| a.cos() / a.sin();
    Ok(sign * delta / (2 * n) as f64
        * (n as f64 * theta).sin()
        * (cot((theta + theta_i) / 2.0) + cot((theta - theta_i) / 2.0)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LebesgueReport {
    pub constant: f64,
    pub argmax: f64,
    pub n_samples: usize,
    pub refined: bool,
}

/// Maximum of the Lebesgue function over `interval`, default execution mode.
pub fn lebesgue_constant(interp: &Interpolant, interval: (f64, f64), grid_per_gap: usize) -> Result<LebesgueReport> {
    lebesgue_constant_with(interp, interval, grid_per_gap, Exec::default())
}

/// Maximum of the Lebesgue function over `interval`.
///
/// The interval is cut at every node inside it. In each gap the function is
/// sampled at both ends and at `grid_per_gap` Chebyshev-distributed interior
/// points; the best sample's bracket is then refined by golden-section search.
/// Gap maxima are reduced in ascending gap order, ties going to the smaller
/// abscissa.
pub fn lebesgue_constant_with(
    interp: &Interpolant,
    interval: (f64, f64),
    grid_per_gap: usize,
    exec: Exec,
) -> Result<LebesgueReport> {
    let (lo, hi) = interval;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(domain(format!("interval must satisfy lo < hi (got [{lo}, {hi}])")));
    }
    if grid_per_gap < 8 {
        return Err(domain(format!("grid_per_gap must be >= 8 (got {grid_per_gap})")));
    }
    let mut cuts = vec![lo];
    let mut inner: Vec<f64> = interp
        .nodes
        .iter()
        .copied()
        .filter(|&x| x > lo && x < hi)
        .collect();
    inner.sort_by(f64::total_cmp);
    cuts.extend(inner);
    cuts.push(hi);
    cuts.dedup();

    let gaps = cuts.len() - 1;
    let per_gap = exec.map(gaps, |g| maximize_gap(interp, cuts[g], cuts[g + 1], grid_per_gap));

    let mut best = (f64::NEG_INFINITY, lo);
    let mut n_samples = 0;
    for (value, x, samples) in per_gap {
        n_samples += samples;
        if beats(value, x, best.0, best.1) {
            best = (value, x);
        }
    }
    Ok(LebesgueReport {
        constant: best.0,
        argmax: best.1,
        n_samples,
        refined: true,
    })
}

/// Candidate `(v, x)` replaces `(best_v, best_x)` if clearly larger, or tied
/// and further left.
fn beats(v: f64, x: f64, best_v: f64, best_x: f64) -> bool {
    if !best_v.is_finite() {
        return true;
    }
    let tol = TIE_RTOL * best_v.abs().max(v.abs());
    v > best_v + tol || ((v - best_v).abs() <= tol && x < best_x)
}

fn maximize_gap(interp: &Interpolant, a: f64, b: f64, m: usize) -> (f64, f64, usize) {
    let mut xs = Vec::with_capacity(m + 2);
    xs.push(a);
    xs.extend((1..=m).map(|k| {
        let c = (k as f64 * PI / (m + 1) as f64).cos();
        a + (b - a) * (1.0 - c) / 2.0
    }));
    xs.push(b);
    let vals: Vec<f64> = xs.iter().map(|&x| lebesgue_function(interp, x)).collect();

    let mut k_best = 0;
    for k in 1..xs.len() {
        if beats(vals[k], xs[k], vals[k_best], xs[k_best]) {
            k_best = k;
        }
    }
    let left = xs[k_best.saturating_sub(1)];
    let right = xs[(k_best + 1).min(xs.len() - 1)];
    let (xr, vr, evals) = golden_max(|x| lebesgue_function(interp, x), left, right);
    let samples = xs.len() + evals;
    if beats(vr, xr, vals[k_best], xs[k_best]) {
        (vr, xr, samples)
    } else {
        (vals[k_best], xs[k_best], samples)
    }
}

/// Golden-section search for a maximum on `[a, b]`; returns
/// `(argmax, max, evaluations)`.
fn golden_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> (f64, f64, usize) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    let mut evals = 2;
    while (b - a).abs() > REFINE_TOL {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        evals += 1;
        if evals > 400 {
            break;
        }
    }
    if fc >= fd {
        (c, fc, evals)
    } else {
        (d, fd, evals)
    }
}
