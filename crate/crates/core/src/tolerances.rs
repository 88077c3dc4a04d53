//! Verification thresholds in one place. The CLI overrides individual fields
//! with `--tol-*` flags.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Gram entries vs `0`, `π`, `π/2`.
    pub orthogonality: f64,
    /// Closed form vs three-term recurrence.
    pub recurrence: f64,
    /// Partial denominators vs normalized functions.
    pub contfrac: f64,
    /// `λ1`-independence of the associated functions.
    pub associated: f64,
    /// Casoratian vs its constant, and its spread in `x`.
    pub casoratian: f64,
    /// Slack on top of the geometric tail bound.
    pub genfun_slack: f64,
    /// Relative Christoffel–Darboux mismatch, scaled by `1 + |rhs|`.
    pub christoffel_darboux: f64,
    /// Sturm–Liouville residual per `n²`.
    pub sturm_liouville: f64,
    /// Elementwise node-set equality.
    pub nodes: f64,
    /// `|T_n|` at generated zeros and `|CL function|` at CL points.
    pub roots: f64,
    /// Relative error of computed Lebesgue constants.
    pub lebesgue: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            orthogonality: 1e-10,
            recurrence: 1e-10,
            contfrac: 1e-11,
            associated: 1e-12,
            casoratian: 1e-12,
            genfun_slack: 1e-13,
            christoffel_darboux: 1e-10,
            sturm_liouville: 1e-7,
            nodes: 1e-14,
            roots: 1e-12,
            lebesgue: 1e-9,
        }
    }
}

/// The 5×5 parameter sweep: every `(β, γ)` with both in
/// `{0, 0.2, 0.4, 0.6, 0.9}` (all admissible).
pub const SWEEP_AXIS: [f64; 5] = [0.0, 0.2, 0.4, 0.6, 0.9];

pub fn parameter_sweep() -> Vec<crate::BetaGamma> {
    SWEEP_AXIS
        .iter()
        .flat_map(|&b| SWEEP_AXIS.iter().map(move |&g| (b, g)))
        .map(|(b, g)| crate::BetaGamma::new(b, g).expect("sweep pairs are admissible"))
        .collect()
}

/// Parameter pairs used for the orthogonality check.
pub const GRAM_SWEEP: [(f64, f64); 4] = [(0.0, 0.0), (0.3, 0.4), (1.0, 0.1), (0.9, 0.9)];

/// `count` equispaced points on `[lo, hi]`, endpoints included.
pub fn grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..count)
            .map(|i| {
                if i == count - 1 {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / (count - 1) as f64
                }
            })
            .collect(),
    }
}
