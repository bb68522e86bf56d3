//! The torus knot invariant `P_{n,m}(a, q, t)`.
//!
//! For `m = n k + r` the invariant is
//!
//! ```text
//! const * sum_{|Y| = n} T_Y^k C_Y e_r({t^i/q^j}) dim(Y) / dim([1]),
//! const = (1 - q)/(1 - q^n) t^m q^{r n + r(r-1)/2 - n(n-1)/2}
//! ```
//!
//! evaluated in Macdonald variables, then rewritten with
//! `q = t^2 q^2, t = q^2, t^N = -a^2 t` in knot variables. The quotient is
//! exact precisely when `gcd(n, m) = 1`; it is then divided by its monomial
//! content so the constant term is `+1`.

mod fixture;
mod format;
mod genfun;
mod scan;
mod specialize;

use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{
    sum_weighted, AlgebraError, FactoredRational, LaurentPolynomial, Monomial, Rational, RationalSum,
    SubstitutionMap, VarAlphabet,
};
use crate::macdonald;
use crate::partitions::{self, Partition};

pub use fixture::{corpus, diff_terms, CorpusEntry, KnotFixture, TermDiff};
pub use format::{grouped, latex};
pub use genfun::{generating_function, Calibration, GeneratingFunction, GeneratingFunctionJson};
pub use scan::{scan, ScanReport, ScanRow, ScanStatus};
pub use specialize::{specialize, Specialization};

#[derive(Debug, thiserror::Error)]
pub enum InvariantError {
    #[error("P({n},{m}) is not a polynomial: gcd({n},{m}) = {gcd}")]
    NonPolynomial { n: u32, m: u32, gcd: u32 },
    #[error("integrity check failed for ({n},{m}): {detail}")]
    Integrity { n: u32, m: u32, detail: String },
    #[error("calibration failed: {0}")]
    Calibration(String),
    #[error("generating function does not reproduce the invariants: {0}")]
    Validation(String),
    #[error("invalid request: {0}")]
    Usage(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Winding numbers `(n, m)` with `m = n k + r`, `0 <= r < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KnotRequest {
    pub n: u32,
    pub m: u32,
}

impl KnotRequest {
    pub fn new(n: u32, m: u32) -> Result<Self, InvariantError> {
        if n == 0 || m == 0 {
            return Err(InvariantError::Usage(format!("winding numbers must be positive, got ({n},{m})")));
        }
        Ok(KnotRequest { n, m })
    }

    pub fn k(&self) -> u32 {
        self.m / self.n
    }

    pub fn r(&self) -> u32 {
        self.m % self.n
    }

    pub fn gcd(&self) -> u32 {
        self.n.gcd(&self.m)
    }
}

/// Verification flags; set by [`verify_properties`], never coerced.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct Flags {
    pub polynomial: bool,
    pub integral: bool,
    pub positive: bool,
    pub normalized: bool,
}

impl Flags {
    pub fn all(&self) -> bool {
        self.polynomial && self.integral && self.positive && self.normalized
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Superpolynomial {
    pub n: u32,
    pub m: u32,
    /// Polynomial in `(a, q, t)`.
    pub terms: LaurentPolynomial,
    pub flags: Flags,
    /// The monomial divided out during normalization (identity when the
    /// terms are still raw).
    pub raw_content: Monomial,
}

impl Superpolynomial {
    /// Exponent maxima `(a, q, t)`.
    pub fn max_degrees(&self) -> (i32, i32, i32) {
        let f = |i| self.terms.max_exp(i).unwrap_or(0);
        (f(0), f(1), f(2))
    }
}

fn mono3(a: i32, b: i32, c: i32) -> Monomial {
    Monomial::new(&[a, b, c])
}

/// `(1 - q)/(1 - q^n) t^m q^{rn + r(r-1)/2 - n(n-1)/2}` over `(q, t, A)`.
pub fn normalization_constant(req: &KnotRequest) -> FactoredRational {
    let (n, m, r) = (req.n as i64, req.m as i64, req.r() as i64);
    let q_exp = r * n + r * (r - 1) / 2 - n * (n - 1) / 2;
    FactoredRational::monomial(&VarAlphabet::macd(), mono3(q_exp as i32, m as i32, 0))
        .with_factor(mono3(1, 0, 0), 1)
        .and_then(|c| c.with_factor(mono3(n as i32, 0, 0), -1))
        .expect("q and q^n are nontrivial")
}

/// One summand, already in knot variables: a factored part free of `t^N`
/// and a polynomial weight collecting `gamma` and the dimension numerators
/// that involve `t^N` (those do not stay binomials under `t^N -> -a^2 t`).
pub fn partition_term(y: &Partition, req: &KnotRequest) -> Result<(FactoredRational, LaurentPolynomial), InvariantError> {
    let macd = VarAlphabet::macd();
    let sigma = SubstitutionMap::macd_to_knot();
    let k = req.k() as i32;
    let factored = normalization_constant(req)
        .mul_monomial(&macdonald::framing(y).pow(k))
        .mul(&macdonald::expansion_coefficient(y))
        .mul(&macdonald::normalized_dimension(y));

    let mut plain = FactoredRational::monomial(&macd, *factored.prefactor()).scale(factored.coeff());
    let mut weight = macdonald::gamma(y, req.r() as usize);
    for (b, mult) in factored.factors() {
        if b.exp(2) == 0 {
            plain = plain.with_factor(*b, mult)?;
        } else {
            if mult < 0 {
                return Err(InvariantError::Integrity {
                    n: req.n,
                    m: req.m,
                    detail: format!("t^N appears in a denominator binomial {b:?}"),
                });
            }
            let bin = LaurentPolynomial::binomial(&macd, *b);
            for _ in 0..mult {
                weight = &weight * &bin;
            }
        }
    }
    Ok((plain.substitute(&sigma)?, sigma.apply(&weight)?))
}

/// The full sum over partitions of `n` as numerator over factored
/// denominator, in knot variables.
pub fn invariant_sum(req: &KnotRequest) -> Result<RationalSum, InvariantError> {
    let parts = partitions::enumerate(req.n as usize);
    let terms = parts
        .par_iter()
        .map(|y| partition_term(y, req))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(sum_weighted(&VarAlphabet::knot(), &terms)?)
}

/// Exact quotient before monomial normalization.
pub fn compute_raw(req: &KnotRequest) -> Result<LaurentPolynomial, InvariantError> {
    let sum = invariant_sum(req)?;
    match sum.quotient() {
        Ok(q) => Ok(q),
        Err(AlgebraError::NonDivisible) => {
            Err(InvariantError::NonPolynomial { n: req.n, m: req.m, gcd: req.gcd() })
        }
        Err(e) => Err(e.into()),
    }
}

/// Computes the normalized invariant; `NonPolynomial` when the exact
/// division fails.
pub fn compute(req: &KnotRequest) -> Result<Superpolynomial, InvariantError> {
    let raw = compute_raw(req)?;
    normalize(req, raw)
}

/// Like [`compute`] but keeps the raw quotient and reports its content.
pub fn compute_unnormalized(req: &KnotRequest) -> Result<Superpolynomial, InvariantError> {
    let raw = compute_raw(req)?;
    let content = raw.monomial_content().map_err(|_| InvariantError::Integrity {
        n: req.n,
        m: req.m,
        detail: "the quotient vanishes identically".into(),
    })?;
    let mut p = Superpolynomial { n: req.n, m: req.m, terms: raw, flags: Flags::default(), raw_content: content };
    p.flags = verify_properties(&p);
    p.flags.polynomial = true;
    Ok(p)
}

fn normalize(req: &KnotRequest, raw: LaurentPolynomial) -> Result<Superpolynomial, InvariantError> {
    let content = raw.monomial_content().map_err(|_| InvariantError::Integrity {
        n: req.n,
        m: req.m,
        detail: "the quotient vanishes identically".into(),
    })?;
    let terms = raw.div_monomial(&content);
    let constant = terms.constant_term();
    if !constant.is_one() {
        return Err(InvariantError::Integrity {
            n: req.n,
            m: req.m,
            detail: format!(
                "constant term after removing content {} is {constant}, expected 1 (lowest terms: {})",
                content.display(&VarAlphabet::knot()),
                terms.terms().iter().take(3).map(|(m, c)| format!("{c}*{}", m.display(&VarAlphabet::knot()))).collect::<Vec<_>>().join(", ")
            ),
        });
    }
    let mut p = Superpolynomial { n: req.n, m: req.m, terms, flags: Flags::default(), raw_content: content };
    p.flags = verify_properties(&p);
    Ok(p)
}

/// Integrality, positivity, nonnegative exponents and unit constant term.
pub fn verify_properties(p: &Superpolynomial) -> Flags {
    let terms = p.terms.terms();
    let polynomial = terms.iter().all(|(m, _)| m.is_nonnegative());
    Flags {
        polynomial,
        integral: terms.iter().all(|(_, c)| c.is_integer()),
        positive: terms.iter().all(|(_, c)| c.is_positive()),
        normalized: polynomial && p.terms.constant_term() == Rational::one() && !p.terms.is_zero(),
    }
}

/// Sum of all coefficients (the value at `a = q = t = 1`).
pub fn coefficient_sum(p: &LaurentPolynomial) -> Rational {
    p.terms().iter().fold(Rational::zero(), |acc, (_, c)| &acc + c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knot(terms: &[((i32, i32, i32), i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            &VarAlphabet::knot(),
            terms.iter().map(|&((a, q, t), c)| (mono3(a, q, t), Rational::from(c))),
        )
    }

    #[test]
    fn request_decomposition() {
        let r = KnotRequest::new(3, 11).unwrap();
        assert_eq!((r.k(), r.r()), (3, 2));
        assert_eq!(r.n * r.k() + r.r(), r.m);
        assert!(KnotRequest::new(0, 3).is_err());
        // m smaller than n is allowed
        let s = KnotRequest::new(4, 3).unwrap();
        assert_eq!((s.k(), s.r()), (0, 3));
    }

    #[test]
    fn trefoil() {
        let p = compute(&KnotRequest::new(2, 3).unwrap()).unwrap();
        assert_eq!(p.terms, knot(&[((0, 0, 0), 1), ((0, 4, 2), 1), ((2, 2, 3), 1)]));
        assert!(p.flags.all());
    }

    #[test]
    fn two_five() {
        let p = compute(&KnotRequest::new(2, 5).unwrap()).unwrap();
        assert_eq!(
            p.terms,
            knot(&[((0, 0, 0), 1), ((0, 4, 2), 1), ((0, 8, 4), 1), ((2, 2, 3), 1), ((2, 6, 5), 1)])
        );
    }

    #[test]
    fn non_coprime_is_not_polynomial() {
        for (n, m) in [(2, 4), (2, 2), (3, 6), (4, 6)] {
            match compute(&KnotRequest::new(n, m).unwrap()) {
                Err(InvariantError::NonPolynomial { gcd, .. }) => assert_eq!(gcd, n.gcd(&m)),
                other => panic!("({n},{m}) gave {other:?}"),
            }
        }
    }

    #[test]
    fn unknot_family() {
        for m in 1..=6 {
            let p = compute(&KnotRequest::new(1, m).unwrap()).unwrap();
            assert!(p.terms.is_one(), "(1,{m}) gave {}", p.terms);
        }
    }

    #[test]
    fn raw_content_round_trip() {
        let req = KnotRequest::new(3, 4).unwrap();
        let raw = compute_unnormalized(&req).unwrap();
        let p = compute(&req).unwrap();
        assert_eq!(raw.terms.div_monomial(&raw.raw_content), p.terms);
        assert_eq!(raw.raw_content, p.raw_content);
        assert!(!raw.flags.normalized || raw.raw_content.is_one());
    }

    #[test]
    fn verify_properties_of_identity() {
        let p = Superpolynomial {
            n: 1,
            m: 1,
            terms: knot(&[((0, 0, 0), 1)]),
            flags: Flags::default(),
            raw_content: Monomial::one(3),
        };
        assert!(verify_properties(&p).all());
        let bad = Superpolynomial { terms: knot(&[((0, 0, 0), 1), ((0, 1, 0), -2)]), ..p };
        let f = verify_properties(&bad);
        assert!(f.integral && !f.positive);
    }

    #[test]
    fn sum_is_schedule_independent() {
        let req = KnotRequest::new(4, 7).unwrap();
        let parallel = compute(&req).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let sequential = pool.install(|| compute(&req)).unwrap();
        assert_eq!(parallel.terms.to_canonical_text(), sequential.terms.to_canonical_text());
    }
}
