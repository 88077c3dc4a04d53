//! Normalized and associated (β,γ)-Chebyshev functions and the continued
//! fraction
//!
//! ```text
//! λ1 |      λ2 |      λ3 |
//! ---------  - ---------  - --------- - …
//! | T_1(x)     | T_1(x)     | T_1(x)
//! ```
//!
//! with `λ2 = 1/2` and `λk = 1/4` for `k ≥ 3`. Its partial denominators are
//! the normalized functions `T̂_n = 2^{1-n} T_n` (`T̂_0 = 1`) and its partial
//! numerators are `λ1 P̂_{n-1}`.

use crate::error::{domain, Result};
use crate::functions::{eval_closed, first, BetaGamma};

/// Partial numerator `A_n` and denominator `B_n` at `index = n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CfState {
    pub numerator: f64,
    pub denominator: f64,
    pub index: isize,
}

impl CfState {
    /// `A_n / B_n`, or `None` when the denominator vanishes.
    pub fn value(&self) -> Option<f64> {
        (self.denominator != 0.0).then(|| self.numerator / self.denominator)
    }
}

/// The coefficient sequence; only `λ1` is free.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaSeq {
    lambda1: f64,
}

impl Default for LambdaSeq {
    fn default() -> Self {
        Self { lambda1: 1.0 }
    }
}

impl LambdaSeq {
    pub fn new(lambda1: f64) -> Result<Self> {
        if lambda1 == 0.0 || !lambda1.is_finite() {
            return Err(domain(format!("lambda1 must be finite and nonzero (got {lambda1})")));
        }
        Ok(Self { lambda1 })
    }

    pub fn lambda1(&self) -> f64 {
        self.lambda1
    }

    /// `λ_k` for `k ≥ 1`.
    pub fn get(&self, k: usize) -> f64 {
        match k {
            0 => panic!("lambda index starts at 1"),
            1 => self.lambda1,
            2 => 0.5,
            _ => 0.25,
        }
    }
}

/// `T̂_n = 2^{1-n} T_n` for `n ≥ 1` and `T̂_0 = 1`.
pub fn normalized(p: BetaGamma, n: usize, x: f64) -> Result<f64> {
    let t = eval_closed(p, n, x)?;
    if n == 0 {
        return Ok(1.0);
    }
    Ok(t * 2f64.powi(1 - n as i32))
}

/// `T̂_n` from `T̂_k = T_1 T̂_{k-1} - λ_k T̂_{k-2}`, `T̂_{-1} = 0`, `T̂_0 = 1`.
pub fn normalized_recurrence(p: BetaGamma, n: usize, x: f64) -> Result<f64> {
    Ok(cf_convergent(p, n, x, LambdaSeq::default())?.denominator)
}

/// Runs both partial-fraction recurrences up to index `n`:
///
/// ```text
/// B_k = T_1 B_{k-1} - λ_k B_{k-2},  B_{-1} = 0, B_0 = 1
/// A_k = T_1 A_{k-1} - λ_k A_{k-2},  A_{-1} = 1, A_0 = 0, A_1 = λ1
/// ```
pub fn cf_convergent(p: BetaGamma, n: usize, x: f64, lambdas: LambdaSeq) -> Result<CfState> {
    let t1 = first(p, x)?;
    let (mut a_prev, mut a) = (1.0, 0.0);
    let (mut b_prev, mut b) = (0.0, 1.0);
    for k in 1..=n {
        let lam = lambdas.get(k);
        // A_1 = λ1 follows from A_1 = T_1·A_0 + λ1·A_{-1} (the first link has a plus sign).
        let a_next = if k == 1 { lam } else { t1 * a - lam * a_prev };
        let b_next = t1 * b - lam * b_prev;
        a_prev = a;
        a = a_next;
        b_prev = b;
        b = b_next;
    }
    Ok(CfState {
        numerator: a,
        denominator: b,
        index: n as isize,
    })
}

/// `P̂_n = A_{n+1} / λ1` for `n ≥ -1`.
pub fn associated(p: BetaGamma, n: isize, x: f64, lambdas: LambdaSeq) -> Result<f64> {
    if n < -1 {
        return Err(domain("associated functions are defined for n >= -1"));
    }
    let state = cf_convergent(p, (n + 1) as usize, x, lambdas)?;
    Ok(state.numerator / lambdas.lambda1())
}

/// `P̂_n` from `P̂_k = T_1 P̂_{k-1} - λ_{k+1} P̂_{k-2}`, `P̂_{-1} = 0`, `P̂_0 = 1`.
pub fn associated_recurrence(p: BetaGamma, n: isize, x: f64) -> Result<f64> {
    if n < -1 {
        return Err(domain("associated functions are defined for n >= -1"));
    }
    let t1 = first(p, x)?;
    if n == -1 {
        return Ok(0.0);
    }
    let lambdas = LambdaSeq::default();
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 1..=n as usize {
        let next = t1 * cur - lambdas.get(k + 1) * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `T̂_{n+1} P̂_{n-1} - T̂_n P̂_n`, with `T̂` from the closed form and `P̂` from
/// its own recurrence.
pub fn casoratian(p: BetaGamma, n: usize, x: f64) -> Result<f64> {
    if n == 0 {
        return Err(domain("casoratian requires n >= 1"));
    }
    let n_i = n as isize;
    Ok(normalized(p, n + 1, x)? * associated_recurrence(p, n_i - 1, x)?
        - normalized(p, n, x)? * associated_recurrence(p, n_i, x)?)
}

/// The constant the Casoratian takes: `-λ2 λ3 ⋯ λ_{n+1} = -(1/2)(1/4)^{n-1}`.
pub fn casoratian_constant(n: usize) -> f64 {
    assert!(n >= 1, "casoratian requires n >= 1");
    -0.5 * 0.25f64.powi(n as i32 - 1)
}
