//! Exact sparse Laurent polynomial arithmetic.
//!
//! Everything the invariant pipeline touches is either a [`LaurentPolynomial`]
//! or a [`FactoredRational`] (monomial times a product of binomials `1 - b`
//! raised to signed powers). Denominators stay factored until the final sum.

mod factored;
mod modp;
mod monomial;
mod poly;
mod rational;
mod subst;

pub use factored::{sum_rationals, sum_weighted, FactoredRational, RationalSum};
pub use modp::{eval_mod_p, inv_mod, mul_mod, pow_mod, rational_mod, PRIME};
pub use monomial::{Monomial, VarAlphabet, MAX_VARS};
pub use poly::LaurentPolynomial;
pub use rational::{ParseRationalError, Rational};
pub use subst::SubstitutionMap;

#[derive(Debug, thiserror::Error)]
pub enum AlgebraError {
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: String, right: String },
    #[error("quotient is not a Laurent polynomial")]
    NonDivisible,
    #[error("binomial 1 - 1 is zero")]
    ZeroBinomial,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
}
