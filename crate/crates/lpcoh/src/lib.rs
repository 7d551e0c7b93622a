//! Exact-arithmetic toolkit for root-subset certificates and spectral
//! exponent intervals of solvable Lie groups `A ⋉ N`.
//!
//! Everything here is computed over arbitrary-precision rationals; no
//! floating point is used anywhere. The crate is organised as follows:
//!
//! * [`exact`] — rational vectors/matrices, exact rank and kernel, and a
//!   rational-pivot simplex used for strict-positivity and cone tests;
//! * [`roots`] — the root systems `A_l .. G2` in explicit Euclidean
//!   coordinates, with norm-class bookkeeping;
//! * [`cartan`] — the catalog of real-form classes (restricted root family
//!   plus per-norm-class multiplicities) and their `2ρ` vectors;
//! * [`psi`] — construction, verification and exhaustive search of root
//!   subsets `Ψ` with strictly positive coefficients summing to `2ρ`;
//! * [`spectral`] — spectral profiles of `-ad ξ` and the vanishing /
//!   non-vanishing exponent intervals they govern;
//! * [`batch`] — the full catalog sweep used by the CLI report command.

pub mod batch;
pub mod cartan;
pub mod exact;
pub mod psi;
pub mod roots;
pub mod spectral;

pub use exact::{Rational, RationalMatrix, RationalVector};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("{0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
