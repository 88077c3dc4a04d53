//! (β,γ)-Chebyshev functions of the first kind: evaluation, node families,
//! orthogonality, continued fractions, classical identities, and Lebesgue
//! constants of the associated interpolation nodes.
//!
//! ```
//! use bgcheb::{functions::eval_closed, BetaGamma};
//!
//! let p = BetaGamma::new(0.3, 0.4)?;
//! let t = eval_closed(p, 4, 0.2)?;
//! assert!(t.abs() <= 1.0);
//! # Ok::<(), bgcheb::Error>(())
//! ```

pub mod cli;
pub mod contfrac;
pub mod error;
pub mod exec;
pub mod functions;
pub mod gram;
pub mod identities;
pub mod interp;
pub mod nodes;
pub mod quadrature;
pub mod tolerances;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Exec;
pub use functions::BetaGamma;
pub use interp::{Interpolant, LebesgueReport};
pub use nodes::{NodeKind, NodeSet, TrimSpec};
pub use verify::{Check, Suite, VerificationReport};
