//! Exact computation of beta-deformed torus knot invariants.
//!
//! The invariant of the `(n, m)` torus knot is a sum over partitions of `n`
//! of closed-form Macdonald quantities (framing, elementary symmetric
//! "gamma" factors, expansion coefficients of the power sum, Macdonald
//! dimensions). [`invariant::compute`] evaluates that sum exactly, changes
//! to knot variables `(a, q, t)`, and divides out the denominators.
//!
//! [`oracle`] rebuilds Macdonald polynomials by brute force and is used to
//! cross-check every closed form.

pub mod algebra;
pub mod invariant;
pub mod macdonald;
pub mod oracle;
pub mod partitions;

pub use algebra::{FactoredRational, LaurentPolynomial, Monomial, Rational, VarAlphabet};
pub use invariant::{compute, KnotRequest, Superpolynomial};
pub use partitions::Partition;
