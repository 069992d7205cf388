//! Exact combinatorics of shifted Young diagrams, factorial Schur P-polynomials and the
//! limit theory of spin characters of the symmetric groups.
//!
//! The polynomial machinery is generic over [`Scalar`]; everything that must be exact
//! uses [`Rational`].

pub mod dimensions;
pub mod error;
pub mod linalg;
pub mod partition;
pub mod poly;
pub mod scalar;
pub mod serial;
pub mod spin;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{Partition, StrictPartition};
pub use scalar::Scalar;

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
/// Exact `a + b√2` with rational `a`, `b`.
pub type Root2 = spin::Root2Value<Rational>;
/// Sparse polynomial with exact coefficients.
pub type RationalPoly = poly::Poly<Rational>;
/// Homogeneous symmetric polynomial in the monomial basis with exact coefficients.
pub type MonomialPoly = poly::MonomialPolynomial<Rational>;
/// Graded symmetric polynomial with exact coefficients.
pub type SymmetricPoly = poly::SymmetricPolynomial<Rational>;
/// Double-precision polynomial for quick numeric work.
pub type FloatPoly = poly::Poly<f64>;
