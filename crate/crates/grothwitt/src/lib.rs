//! Exact arithmetic for the big Witt ring Lambda(Q) = 1 + t Q[[t]] and the
//! T-graded motivic measures of curves over finite fields that live in it.
//!
//! The crate covers: truncated Lambda-series and their ghost coordinates,
//! the subring generated by differences of polynomials with constant term 1,
//! zeta functions of curves computed from point counts, the zero-dimensional
//! subring spanned by classes of etale points, and three certified
//! (in)dependence tests for Frobenius eigenvalue data: a Jacobi criterion
//! over group algebras, a lattice-dimension criterion, and a two-curves
//! classifier. A thin CLI (`grothwitt`) exposes every capability; the
//! `examples/` directory walks through each one.

pub mod config;
pub mod cyclotomic;
pub mod dh;
pub mod field;
pub mod indep;
pub mod k0;
pub mod numeric;
pub mod poly;
pub mod rational_witt;
pub mod skolem;
pub mod verify;
pub mod witt;
pub mod zeta;

pub use config::Config;

/// Exact rational scalar used throughout.
pub type Rat = num_rational::BigRational;
/// Exact integer scalar used throughout.
pub type Int = num_bigint::BigInt;

/// Error type shared by every module.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Mixed or insufficient series precision.
    #[error("precision error: {0}")]
    Precision(String),
    /// A caller-supplied value is outside its contracted domain.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// An enumeration or search exceeded the configured budget.
    #[error("budget exceeded: {0}")]
    Budget(String),
    /// Input data failed a named validation check.
    #[error("validation failed [{check}]: {detail}")]
    Validation { check: String, detail: String },
    /// No periodic description fits the observed zero set on its horizon.
    #[error("no periodic description with modulus <= horizon/2 matches; raw zero set {zeros:?}")]
    NoPeriodicFit { zeros: Vec<u64> },
    /// A bounded search ended without a decision.
    #[error("search exhausted: {0}")]
    Exhausted(String),
}

impl Error {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Precision(_) | Error::Argument(_) | Error::Validation { .. } => 2,
            Error::Budget(_) | Error::NoPeriodicFit { .. } | Error::Exhausted(_) => 3,
        }
    }
}

/// Parses an exact rational from its decimal string form, e.g. `3`, `-7/2`.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| Error::Argument(format!("cannot parse rational {s:?}: {e}")))
}

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}
