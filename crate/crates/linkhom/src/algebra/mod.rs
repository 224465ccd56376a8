//! Exact arithmetic foundations: sparse Laurent polynomials, multivariate
//! rational functions, truncated power series, and graded linear algebra
//! over the rationals.

pub mod laurent;
pub mod linalg;
pub mod multipoly;
pub mod multirat;
pub mod series;
pub mod xpoly;

pub use laurent::{quantum_binomial, quantum_factorial, quantum_int, LaurentPoly};
pub use linalg::{Eliminator, QMat, SparseMatQ};
pub use multipoly::{MultiPoly, VAR_A, VAR_H, VAR_V};
pub use multirat::MultiRational;
pub use series::{HVSeries, TriGradedSeries, TruncatedVSeries};
pub use xpoly::{PolyMatrix, XPoly};

use num::BigInt;
use num::BigRational;

/// Exact rational scalar.
pub type QQ = BigRational;
/// Exact integer scalar.
pub type ZZ = BigInt;

/// Rational from an integer.
pub fn qq(n: i64) -> QQ {
    QQ::from_integer(ZZ::from(n))
}

/// Rational fraction n/d.
pub fn qq_frac(n: i64, d: i64) -> QQ {
    QQ::new(ZZ::from(n), ZZ::from(d))
}
