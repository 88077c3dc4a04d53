//! Node families: (β,γ)-Chebyshev zeros, (β,γ)-Chebyshev–Lobatto points,
//! equispaced points, the KTE map, and trimmed classical CL sets.
//!
//! Every [`NodeSet`] is stored strictly decreasing, i.e. in generation order
//! `cos(angle_j)` with `j` ascending.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{domain, Result};
use crate::functions::BetaGamma;

/// Tolerance for elementwise comparison of two node sets.
pub const SET_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    BgZeros,
    BgCl,
    Equispaced,
    TrimmedCl,
}

impl NodeKind {
    pub fn label(self) -> &'static str {
        match self {
            NodeKind::BgZeros => "bg-zeros",
            NodeKind::BgCl => "bg-cl",
            NodeKind::Equispaced => "equispaced",
            NodeKind::TrimmedCl => "trimmed-cl",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet {
    points: Vec<f64>,
    kind: NodeKind,
    params: BetaGamma,
}

impl NodeSet {
    fn new(points: Vec<f64>, kind: NodeKind, params: BetaGamma) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] > w[1]));
        debug_assert!(points.iter().all(|x| x.abs() <= 1.0));
        Self {
            points,
            kind,
            params,
        }
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn kind(&self) -> NodeKind {
        self.kind
    }

    pub fn params(&self) -> BetaGamma {
        self.params
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn into_points(self) -> Vec<f64> {
        self.points
    }

    /// Largest elementwise distance to `other`, or `None` when the
    /// cardinalities differ.
    pub fn max_distance(&self, other: &[f64]) -> Option<f64> {
        if self.points.len() != other.len() {
            return None;
        }
        Some(
            self.points
                .iter()
                .zip(other)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max),
        )
    }
}

/// Trim counts `(κ1, κ2)`: κ1 points removed at the left (−1) end and κ2 at
/// the right (+1) end of a classical CL set. Zero is allowed for either.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrimSpec {
    kappa1: usize,
    kappa2: usize,
}

impl TrimSpec {
    pub fn new(kappa1: usize, kappa2: usize) -> Result<Self> {
        if kappa1 + kappa2 == 0 {
            return Err(domain("trim requires kappa1 + kappa2 >= 1"));
        }
        Ok(Self { kappa1, kappa2 })
    }

    pub fn kappa1(&self) -> usize {
        self.kappa1
    }

    pub fn kappa2(&self) -> usize {
        self.kappa2
    }
}

/// The `n` zeros of `T_n` in the orthogonality interval,
/// `cos((2-β-γ)(2j-1)π/(4n) + γπ/2)`, `j = 1..n`.
pub fn bg_chebyshev_zeros(p: BetaGamma, n: usize) -> Result<NodeSet> {
    if n == 0 {
        return Err(domain("Chebyshev zeros require n >= 1"));
    }
    let shift = p.gamma() * FRAC_PI_2;
    let points = (1..=n)
        .map(|j| (p.span() * (2 * j - 1) as f64 * PI / (4 * n) as f64 + shift).cos())
        .collect();
    Ok(NodeSet::new(points, NodeKind::BgZeros, p))
}

/// `count = n + 1` CL points `cos((2-β-γ)jπ/(2n) + γπ/2)`, `j = 0..n`.
/// The first point is the right end of the orthogonality interval and the
/// last is its left end.
pub fn bg_cl_points(p: BetaGamma, count: usize) -> Result<NodeSet> {
    if count < 2 {
        return Err(domain("CL points require count >= 2"));
    }
    let n = count - 1;
    let shift = p.gamma() * FRAC_PI_2;
    let (lo, hi) = p.omega();
    let points = (0..=n)
        .map(|j| match j {
            0 => hi,
            j if j == n => lo,
            j => (p.span() * j as f64 * PI / (2 * n) as f64 + shift).cos(),
        })
        .collect();
    Ok(NodeSet::new(points, NodeKind::BgCl, p))
}

/// Classical CL points `cos(jπ/(count-1))`.
pub fn classical_cl(count: usize) -> Result<NodeSet> {
    bg_cl_points(BetaGamma::CLASSICAL, count)
}

/// `n` equispaced points `1 - γ - (2-β-γ) j/(n-1)`, from `1-γ` down to `β-1`.
pub fn equispaced(p: BetaGamma, n: usize) -> Result<NodeSet> {
    if n < 2 {
        return Err(domain("equispaced points require n >= 2"));
    }
    let points = (0..n)
        .map(|j| match j {
            0 => 1.0 - p.gamma(),
            j if j == n - 1 => p.beta() - 1.0,
            j => 1.0 - p.gamma() - p.span() * j as f64 / (n - 1) as f64,
        })
        .collect();
    Ok(NodeSet::new(points, NodeKind::Equispaced, p))
}

/// Kosloff–Tal-Ezer map `sin(απx/2) / sin(απ/2)`.
pub fn kte_map(alpha: f64, x: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(domain(format!("KTE parameter alpha must lie in (0, 1] (got {alpha})")));
    }
    let x = crate::functions::clamp_unit(x)?;
    Ok((alpha * PI * x / 2.0).sin() / (alpha * FRAC_PI_2).sin())
}

/// Applies [`kte_map`] elementwise; the result keeps the input's parameters
/// and is tagged as a CL set (which it equals at `alpha = 1`).
pub fn kte_mapped(alpha: f64, nodes: &NodeSet) -> Result<NodeSet> {
    let points = nodes
        .points()
        .iter()
        .map(|&x| kte_map(alpha, x))
        .collect::<Result<Vec<_>>>()?;
    Ok(NodeSet::new(points, NodeKind::BgCl, nodes.params()))
}

/// `β = 2κ1/(n+κ1+κ2)`, `γ = 2κ2/(n+κ1+κ2)` for degree `n ≥ 1`.
///
/// With these parameters the `n + 1` CL points equal the classical CL set of
/// `n + κ1 + κ2 + 1` points with its κ2 largest and κ1 smallest points
/// removed.
pub fn subset_params(n: usize, trim: TrimSpec) -> Result<BetaGamma> {
    if n == 0 {
        return Err(domain("subset parameters require n >= 1"));
    }
    let total = (n + trim.kappa1 + trim.kappa2) as f64;
    BetaGamma::new(2.0 * trim.kappa1 as f64 / total, 2.0 * trim.kappa2 as f64 / total)
}

/// The trimmed classical CL set with exactly `count ≥ 2` points, generated as
/// (β,γ)-CL points. `trimmed_cl(n, (1, 0))` is the CL set of `n + 1` points
/// without `-1`; `trimmed_cl(n, (1, 1))` is the CL set of `n + 2` points
/// without `±1`.
pub fn trimmed_cl(count: usize, trim: TrimSpec) -> Result<NodeSet> {
    if count < 2 {
        return Err(domain("trimmed CL set requires count >= 2"));
    }
    let p = subset_params(count - 1, trim)?;
    let mut set = bg_cl_points(p, count)?;
    set.kind = NodeKind::TrimmedCl;
    Ok(set)
}

/// Expresses the zeros of `T_n` as CL points for the shifted pair
/// `(β + s, γ + s)`, `s = (2-β-γ)/(2n)`, and returns that pair with the
/// resulting `n` points. Fails for `n = 1`, where the shifted pair sums to 2.
pub fn zeros_as_cl(p: BetaGamma, n: usize) -> Result<(BetaGamma, NodeSet)> {
    if n == 0 {
        return Err(domain("zeros_as_cl requires n >= 1"));
    }
    let s = p.span() / (2 * n) as f64;
    let shifted = BetaGamma::new(p.beta() + s, p.gamma() + s)?;
    let set = bg_cl_points(shifted, n)?;
    Ok((shifted, set))
}

/// True when exactly one point of `inner` lies strictly inside each gap of
/// `outer` (both decreasing) and no point of `inner` lies outside the span
/// of `outer`.
pub fn interlaces(outer: &[f64], inner: &[f64]) -> bool {
    if outer.len() < 2 || inner.len() + 1 != outer.len() {
        return false;
    }
    outer
        .windows(2)
        .zip(inner)
        .all(|(w, &y)| w[0] > y && y > w[1])
}
