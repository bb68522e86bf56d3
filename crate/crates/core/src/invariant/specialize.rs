use std::fmt;
use std::str::FromStr;

use crate::algebra::{LaurentPolynomial, Monomial, SubstitutionMap, VarAlphabet};

use super::{InvariantError, Superpolynomial};

/// Classical reductions of the triply graded invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    /// `t = -1`, polynomial in `(a, q)`.
    Homfly,
    /// `t = -1, a = q^2`.
    Jones,
    /// `t = -1, a = 1`.
    Alexander,
}

impl FromStr for Specialization {
    type Err = InvariantError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "homfly" => Ok(Specialization::Homfly),
            "jones" => Ok(Specialization::Jones),
            "alexander" => Ok(Specialization::Alexander),
            other => Err(InvariantError::Usage(format!("unknown specialization {other:?}"))),
        }
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Specialization::Homfly => "homfly",
            Specialization::Jones => "jones",
            Specialization::Alexander => "alexander",
        };
        f.write_str(s)
    }
}

fn map_for(target: Specialization) -> SubstitutionMap {
    let knot = VarAlphabet::knot();
    match target {
        Specialization::Homfly => {
            let aq = VarAlphabet::new(&["a", "q"]).expect("valid alphabet");
            SubstitutionMap::new(
                &knot,
                &aq,
                vec![(1, Monomial::new(&[1, 0])), (1, Monomial::new(&[0, 1])), (-1, Monomial::one(2))],
            )
        }
        Specialization::Jones | Specialization::Alexander => {
            let q = VarAlphabet::new(&["q"]).expect("valid alphabet");
            let a_image = if target == Specialization::Jones { 2 } else { 0 };
            SubstitutionMap::new(
                &knot,
                &q,
                vec![(1, Monomial::new(&[a_image])), (1, Monomial::new(&[1])), (-1, Monomial::one(1))],
            )
        }
    }
    .expect("well-formed substitution")
}

/// Reduces a superpolynomial; coefficients may become negative.
pub fn specialize(p: &Superpolynomial, target: Specialization) -> Result<LaurentPolynomial, InvariantError> {
    Ok(map_for(target).apply(&p.terms)?)
}
