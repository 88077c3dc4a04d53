//! Sequential / data-parallel execution of index-mapped work.
//!
//! Every sweep in the crate is expressed as "evaluate `f(i)` for `i in 0..len`
//! and collect in index order", followed by a sequential reduction. The
//! collected order is the same in both modes, so results are bit-identical
//! whichever mode runs.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled; otherwise runs
    /// sequentially.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub fn map<T, F>(self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            Exec::Sequential => (0..len).map(f).collect(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..len).into_par_iter().map(f).collect(),
            #[cfg(not(feature = "parallel"))]
            Exec::Parallel => (0..len).map(f).collect(),
        }
    }

    /// Maximum of `f(i)` over `0..len`, NaN-free inputs assumed. Reduction runs
    /// in index order after the (possibly parallel) map.
    pub fn max_of<F>(self, len: usize, f: F) -> f64
    where
        F: Fn(usize) -> f64 + Sync + Send,
    {
        self.map(len, f)
            .into_iter()
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree_and_preserve_order() {
        let f = |i: usize| (i as f64).sin();
        let a = Exec::Sequential.map(1000, f);
        let b = Exec::Parallel.map(1000, f);
        assert_eq!(a, b);
        assert_eq!(
            Exec::Sequential.max_of(1000, f),
            Exec::Parallel.max_of(1000, f)
        );
    }

    #[test]
    fn empty_max_is_neg_infinity() {
        assert_eq!(Exec::Sequential.max_of(0, |_| 1.0), f64::NEG_INFINITY);
    }
}
