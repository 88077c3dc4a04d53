//! Weighted inner products on the orthogonality interval and the Gram table
//! of `T_0..T_d`.
//!
//! With `x = cos t` the weight `2/((2-β-γ) sqrt(1-x²))` cancels the Jacobian,
//! and the integral over `[-cos(βπ/2), cos(γπ/2)]` becomes
//!
//! ```text
//! ∫_{γπ/2}^{π-βπ/2} cos(r ψ(t)) cos(s ψ(t)) · 2/(2-β-γ) dt,
//! ψ(t) = 2 (t - γπ/2) / (2-β-γ),
//! ```
//!
//! a smooth trigonometric integrand.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::exec::Exec;
use crate::functions::{clamp_unit, BetaGamma, SINGULAR_BAND};
use crate::quadrature::CompositeRule;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadratureSpec {
    panels: usize,
    points_per_panel: usize,
}

impl QuadratureSpec {
    pub fn new(panels: usize, points_per_panel: usize) -> Result<Self> {
        if panels < 1 {
            return Err(domain("quadrature needs at least one panel"));
        }
        if points_per_panel < 2 {
            return Err(domain("quadrature needs at least two points per panel"));
        }
        Ok(Self {
            panels,
            points_per_panel,
        })
    }

    /// `max(8, max_degree)` panels of 16 points.
    pub fn for_degree(max_degree: usize) -> Self {
        Self {
            panels: max_degree.max(8),
            points_per_panel: 16,
        }
    }

    pub fn panels(&self) -> usize {
        self.panels
    }

    pub fn points_per_panel(&self) -> usize {
        self.points_per_panel
    }

    pub fn refined(&self) -> Self {
        Self {
            panels: 2 * self.panels,
            ..*self
        }
    }

    fn rule(&self) -> CompositeRule {
        CompositeRule::new(self.panels, self.points_per_panel)
    }
}

/// `2 / ((2-β-γ) sqrt(1-x²))`.
pub fn weight(p: BetaGamma, x: f64) -> Result<f64> {
    let x = clamp_unit(x)?;
    if x.abs() >= 1.0 - SINGULAR_BAND {
        return Err(Error::Singularity {
            x,
            what: "orthogonality weight",
        });
    }
    Ok(2.0 / (p.span() * (1.0 - x * x).sqrt()))
}

/// Value the Gram entry `(r, s)` must take.
pub fn expected_inner_product(r: usize, s: usize) -> f64 {
    match (r, s) {
        (0, 0) => PI,
        (r, s) if r == s => PI / 2.0,
        _ => 0.0,
    }
}

fn integrate(p: BetaGamma, r: usize, s: usize, rule: &CompositeRule) -> f64 {
    let span = p.span();
    let shift = p.gamma() * PI / 2.0;
    let (rf, sf) = (r as f64, s as f64);
    let a = shift;
    let b = PI - p.beta() * PI / 2.0;
    rule.integrate(a, b, |t| {
        let psi = 2.0 * (t - shift) / span;
        (rf * psi).cos() * (sf * psi).cos() * (2.0 / span)
    })
}

/// `∫ T_r T_s w dx` over the orthogonality interval.
pub fn inner_product(p: BetaGamma, r: usize, s: usize, q: QuadratureSpec) -> f64 {
    integrate(p, r, s, &q.rule())
}

/// Upper triangle `0 ≤ r ≤ s ≤ max_degree`, packed row by row.
#[derive(Debug, Clone, PartialEq)]
pub struct GramTable {
    max_degree: usize,
    entries: Vec<f64>,
}

impl GramTable {
    fn index(&self, r: usize, s: usize) -> usize {
        let (r, s) = if r <= s { (r, s) } else { (s, r) };
        let d = self.max_degree + 1;
        r * d - r * r.saturating_sub(1) / 2 + (s - r)
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Entry `(r, s)`; symmetric in its arguments.
    pub fn get(&self, r: usize, s: usize) -> f64 {
        assert!(r <= self.max_degree && s <= self.max_degree);
        self.entries[self.index(r, s)]
    }

    /// `(r, s, value)` in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        upper_pairs(self.max_degree).map(move |(r, s)| (r, s, self.get(r, s)))
    }

    /// Largest `|entry - expected|` over the table.
    pub fn max_deviation(&self) -> f64 {
        self.iter()
            .map(|(r, s, v)| (v - expected_inner_product(r, s)).abs())
            .fold(0.0, f64::max)
    }
}

fn upper_pairs(d: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=d).flat_map(move |r| (r..=d).map(move |s| (r, s)))
}

pub fn gram_table(p: BetaGamma, max_degree: usize, q: QuadratureSpec) -> GramTable {
    gram_table_with(p, max_degree, q, Exec::default())
}

pub fn gram_table_with(p: BetaGamma, max_degree: usize, q: QuadratureSpec, exec: Exec) -> GramTable {
    let pairs: Vec<(usize, usize)> = upper_pairs(max_degree).collect();
    let rule = q.rule();
    let entries = exec.map(pairs.len(), |k| {
        let (r, s) = pairs[k];
        integrate(p, r, s, &rule)
    });
    GramTable {
        max_degree,
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bg(b: f64, g: f64) -> BetaGamma {
        BetaGamma::new(b, g).unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight(bg(0.0, 0.0), 0.0).unwrap(), 1.0);
        assert_eq!(weight(bg(0.5, 0.5), 0.0).unwrap(), 2.0);
        let p = bg(0.3, 0.4);
        let big = weight(p, 1.0 - 1e-10).unwrap();
        assert!(big > 1e4 * (2.0 / p.span()) / 2f64.sqrt());
        assert!(matches!(weight(p, 1.0), Err(Error::Singularity { .. })));
        assert!(weight(p, -1.0).is_err());
    }

    #[test]
    fn inner_product_examples() {
        let q = QuadratureSpec::for_degree(8);
        assert!((inner_product(bg(0.0, 0.0), 0, 0, q) - PI).abs() < 1e-10);
        assert!((inner_product(bg(0.3, 0.4), 3, 3, q) - PI / 2.0).abs() < 1e-10);
        for p in [bg(0.0, 0.0), bg(0.3, 0.4), bg(1.0, 0.1), bg(1.5, 0.45)] {
            assert!(inner_product(p, 2, 5, q).abs() < 1e-10);
        }
    }

    #[test]
    fn packed_index_is_bijective() {
        for d in 0..12 {
            let t = GramTable {
                max_degree: d,
                entries: vec![0.0; (d + 1) * (d + 2) / 2],
            };
            let idx: Vec<usize> = upper_pairs(d).map(|(r, s)| t.index(r, s)).collect();
            assert_eq!(idx, (0..idx.len()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn table_examples() {
        let t = gram_table(bg(0.0, 0.0), 3, QuadratureSpec::for_degree(3));
        for (r, s, v) in t.iter() {
            let want = expected_inner_product(r, s);
            assert!((v - want).abs() < 1e-10, "({r},{s}) = {v}");
        }
        assert_eq!(t.get(1, 3), t.get(3, 1));

        let t = gram_table(bg(1.0, 0.1), 5, QuadratureSpec::for_degree(5));
        assert!(t.max_deviation() < 1e-10);

        let t = gram_table(bg(0.6, 0.2), 0, QuadratureSpec::for_degree(0));
        assert_eq!(t.iter().count(), 1);
        assert!((t.get(0, 0) - PI).abs() < 1e-10);
    }

    #[test]
    fn refinement_and_swap_invariance() {
        let p = bg(0.9, 0.2);
        let q = QuadratureSpec::for_degree(20);
        let a = gram_table(p, 20, q);
        let b = gram_table(p, 20, q.refined());
        let c = gram_table(p.swapped(), 20, q);
        for ((x, y), z) in a.entries.iter().zip(&b.entries).zip(&c.entries) {
            assert!((x - y).abs() < 1e-11);
            assert!((x - z).abs() < 1e-10);
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let p = bg(0.3, 0.4);
        let q = QuadratureSpec::for_degree(10);
        assert_eq!(
            gram_table_with(p, 10, q, Exec::Sequential),
            gram_table_with(p, 10, q, Exec::Parallel)
        );
    }

    #[test]
    fn spec_validation() {
        assert!(QuadratureSpec::new(0, 16).is_err());
        assert!(QuadratureSpec::new(4, 1).is_err());
        let q = QuadratureSpec::for_degree(30);
        assert_eq!((q.panels(), q.points_per_panel()), (30, 16));
    }
}
