//! The (β,γ)-Chebyshev functions of the first kind,
//!
//! ```text
//! T_n(x) = cos( 2n/(2-β-γ) · (arccos x - γπ/2) ),
//! ```
//!
//! evaluated by closed form and by the three-term recurrence, together with
//! their first two derivatives and the derivative-based function whose zeros
//! are the (β,γ)-Chebyshev–Lobatto points.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{domain, Error, Result};

/// Inputs with `|x| - 1` in `(0, CLAMP_BAND]` are snapped to `±1`.
pub const CLAMP_BAND: f64 = 1e-12;

/// Derivatives are refused within this distance of `±1`.
pub const SINGULAR_BAND: f64 = 1e-12;

/// An admissible parameter pair: `0 ≤ β, γ < 2` and `β + γ < 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaGamma {
    beta: f64,
    gamma: f64,
}

impl BetaGamma {
    /// The classical Chebyshev case `β = γ = 0`.
    pub const CLASSICAL: BetaGamma = BetaGamma {
        beta: 0.0,
        gamma: 0.0,
    };

    pub fn new(beta: f64, gamma: f64) -> Result<Self> {
        if !beta.is_finite() || !gamma.is_finite() {
            return Err(domain(format!(
                "beta and gamma must be finite (got beta={beta}, gamma={gamma})"
            )));
        }
        if !(0.0..2.0).contains(&beta) {
            return Err(domain(format!("beta must lie in [0, 2) (got {beta})")));
        }
        if !(0.0..2.0).contains(&gamma) {
            return Err(domain(format!("gamma must lie in [0, 2) (got {gamma})")));
        }
        if beta + gamma >= 2.0 {
            return Err(domain(format!(
                "beta + gamma must be < 2 (got {beta} + {gamma} = {})",
                beta + gamma
            )));
        }
        Ok(Self { beta, gamma })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// `2 - β - γ`, strictly positive.
    pub fn span(&self) -> f64 {
        2.0 - self.beta - self.gamma
    }

    /// Orthogonality interval `[-cos(βπ/2), cos(γπ/2)]`.
    pub fn omega(&self) -> (f64, f64) {
        (-(self.beta * FRAC_PI_2).cos(), (self.gamma * FRAC_PI_2).cos())
    }

    /// The pair with the roles of β and γ exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            beta: self.gamma,
            gamma: self.beta,
        }
    }

    /// Frequency multiplier `2n / (2 - β - γ)`.
    pub fn frequency(&self, n: usize) -> f64 {
        2.0 * n as f64 / self.span()
    }
}

/// A real angle in radians.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Theta(pub f64);

impl Theta {
    /// `arccos(x) - γπ/2`; lies in `[-γπ/2, π - γπ/2]`.
    pub fn shifted(p: BetaGamma, x: f64) -> Result<Self> {
        let x = clamp_unit(x)?;
        Ok(Theta(x.acos() - p.gamma * PI / 2.0))
    }
}

/// Validates `x ∈ [-1, 1]`, snapping values within [`CLAMP_BAND`] of `±1`.
pub fn clamp_unit(x: f64) -> Result<f64> {
    if x.is_nan() || x.abs() > 1.0 + CLAMP_BAND {
        return Err(domain(format!("x = {x} lies outside [-1, 1]")));
    }
    Ok(x.clamp(-1.0, 1.0))
}

fn interior(x: f64, what: &'static str) -> Result<f64> {
    let x = clamp_unit(x)?;
    if x.abs() >= 1.0 - SINGULAR_BAND {
        return Err(Error::Singularity { x, what });
    }
    Ok(x)
}

/// `T_n(x)` by the closed form.
pub fn eval_closed(p: BetaGamma, n: usize, x: f64) -> Result<f64> {
    let theta = Theta::shifted(p, x)?;
    Ok((p.frequency(n) * theta.0).cos())
}

/// `T_1(x)`, the only function the recurrence needs besides `T_0 = 1`.
pub fn first(p: BetaGamma, x: f64) -> Result<f64> {
    eval_closed(p, 1, x)
}

/// `T_n(x)` by `T_{k+1} = 2 T_1 T_k - T_{k-1}`, iteratively.
pub fn eval_recurrence(p: BetaGamma, n: usize, x: f64) -> Result<f64> {
    let t1 = first(p, x)?;
    if n == 0 {
        return Ok(1.0);
    }
    let (mut prev, mut cur) = (1.0, t1);
    for _ in 1..n {
        let next = 2.0 * t1 * cur - prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `dT_n/dx = k sin(kθ) / sqrt(1 - x²)` with `k = 2n/(2-β-γ)`.
pub fn derivative(p: BetaGamma, n: usize, x: f64) -> Result<f64> {
    let x = interior(x, "first derivative")?;
    if n == 0 {
        return Ok(0.0);
    }
    let k = p.frequency(n);
    let theta = Theta::shifted(p, x)?.0;
    Ok(k * (k * theta).sin() / (1.0 - x * x).sqrt())
}

/// Two-term second derivative:
/// `-k² cos(kθ)/(1-x²) + k sin(kθ) x / (1-x²)^{3/2}`.
pub fn second_derivative(p: BetaGamma, n: usize, x: f64) -> Result<f64> {
    let x = interior(x, "second derivative")?;
    if n == 0 {
        return Ok(0.0);
    }
    let k = p.frequency(n);
    let theta = Theta::shifted(p, x)?.0;
    let one_minus = 1.0 - x * x;
    let root = one_minus.sqrt();
    Ok(-k * k * (k * theta).cos() / one_minus + k * (k * theta).sin() * x / (one_minus * root))
}

/// `((2-β-γ)/(2n)) (1-x²) T_n'(x)`, whose zeros on the orthogonality
/// interval are the (β,γ)-CL points. The prefactor cancels `k` and the
/// `(1-x²)/sqrt(1-x²)` quotient is taken as `sqrt(1-x²)`, so the value is
/// finite (and zero) at `±1`.
pub fn eval_cl_function(p: BetaGamma, n: usize, x: f64) -> Result<f64> {
    if n == 0 {
        return Err(domain("CL function requires n >= 1"));
    }
    let x = clamp_unit(x)?;
    let theta = Theta::shifted(p, x)?.0;
    Ok((p.frequency(n) * theta).sin() * (1.0 - x * x).sqrt())
}
