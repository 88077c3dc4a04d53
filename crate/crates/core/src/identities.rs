//! Generating function, Christoffel–Darboux formula and Sturm–Liouville
//! residual. Each identity has two independently computed sides so that
//! their difference can be checked.

use crate::error::{domain, Error, Result};
use crate::functions::{clamp_unit, derivative, eval_closed, eval_recurrence, first, second_derivative, BetaGamma};

/// Default lower bound on `|T_1(x) - T_1(y)|` for the ratio form.
pub const DEFAULT_SINGULAR_THRESHOLD: f64 = 1e-8;

/// Residual evaluation is refused within this distance of `±1`.
pub const SL_EDGE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenFunPoint {
    u: f64,
    x: f64,
}

impl GenFunPoint {
    pub fn new(u: f64, x: f64) -> Result<Self> {
        if !(u.abs() < 1.0) {
            return Err(domain(format!("generating function needs |u| < 1 (got {u})")));
        }
        let x = clamp_unit(x)?;
        Ok(Self { u, x })
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn x(&self) -> f64 {
        self.x
    }
}

/// `F(u, x) = (1 - u T_1(x)) / (1 + u² - 2u T_1(x))`.
pub fn genfun_closed(p: BetaGamma, pt: GenFunPoint) -> Result<f64> {
    let t1 = first(p, pt.x)?;
    let u = pt.u;
    Ok((1.0 - u * t1) / (1.0 + u * u - 2.0 * u * t1))
}

/// `Σ_{n=0}^{terms} T_n(x) uⁿ`, with `T_n` from the recurrence.
pub fn genfun_partial(p: BetaGamma, pt: GenFunPoint, terms: usize) -> Result<f64> {
    let t1 = first(p, pt.x)?;
    let u = pt.u;
    let (mut prev, mut cur) = (1.0, t1);
    let mut sum = 1.0;
    let mut power = 1.0;
    for n in 1..=terms {
        power *= u;
        if n > 1 {
            let next = 2.0 * t1 * cur - prev;
            prev = cur;
            cur = next;
        }
        sum += cur * power;
    }
    Ok(sum)
}

/// `|u|^{terms+1} / (1 - |u|)`, the tail bound for [`genfun_partial`].
pub fn genfun_tail_bound(u: f64, terms: usize) -> f64 {
    u.abs().powi(terms as i32 + 1) / (1.0 - u.abs())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelPair {
    pub x: f64,
    pub y: f64,
}

impl KernelPair {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        Ok(Self {
            x: clamp_unit(x)?,
            y: clamp_unit(y)?,
        })
    }

    pub fn swapped(&self) -> Self {
        Self {
            x: self.y,
            y: self.x,
        }
    }
}

/// Primed sum `½ T_0(x)T_0(y) + Σ_{j=1}^{n} T_j(x) T_j(y)`.
pub fn cd_lhs(p: BetaGamma, n: usize, pair: KernelPair) -> Result<f64> {
    let mut sum = 0.5;
    for j in 1..=n {
        sum += eval_closed(p, j, pair.x)? * eval_closed(p, j, pair.y)?;
    }
    Ok(sum)
}

/// `½ (T_{n+1}(x) T_n(y) - T_n(x) T_{n+1}(y)) / (T_1(x) - T_1(y))`.
///
/// Fails with [`Error::NearSingular`] when the denominator is below
/// `threshold`; the confluent limit is not provided.
pub fn cd_rhs(p: BetaGamma, n: usize, pair: KernelPair, threshold: f64) -> Result<f64> {
    let denominator = first(p, pair.x)? - first(p, pair.y)?;
    if denominator.abs() <= threshold {
        return Err(Error::NearSingular {
            denominator: denominator.abs(),
            threshold,
        });
    }
    let tx = (eval_recurrence(p, n, pair.x)?, eval_recurrence(p, n + 1, pair.x)?);
    let ty = (eval_recurrence(p, n, pair.y)?, eval_recurrence(p, n + 1, pair.y)?);
    Ok(0.5 * (tx.1 * ty.0 - tx.0 * ty.1) / denominator)
}

/// Left side of
/// `d/dx(sqrt(1-x²) y') + (4n²/(2-β-γ)²) y / sqrt(1-x²) = 0` at `y = T_n`,
/// expanded as `-x/sqrt(1-x²) T' + sqrt(1-x²) T'' + c T / sqrt(1-x²)`.
pub fn sl_residual(p: BetaGamma, n: usize, x: f64) -> Result<f64> {
    let x = clamp_unit(x)?;
    if x.abs() > 1.0 - SL_EDGE {
        return Err(Error::Singularity {
            x,
            what: "Sturm-Liouville residual",
        });
    }
    let root = (1.0 - x * x).sqrt();
    let k = p.frequency(n);
    let t = eval_closed(p, n, x)?;
    let d1 = derivative(p, n, x)?;
    let d2 = second_derivative(p, n, x)?;
    Ok(-x / root * d1 + root * d2 + k * k / root * t)
}
