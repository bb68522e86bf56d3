use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::monomial::{Monomial, VarAlphabet};
use super::poly::LaurentPolynomial;
use super::rational::Rational;
use super::subst::SubstitutionMap;
use super::AlgebraError;

/// `coeff * prefactor * prod (1 - b)^mult` with signed multiplicities.
///
/// Binomials are stored canonically: the first nonzero exponent of `b` is
/// positive (`1 - b = -b (1 - 1/b)` folds the other orientation into the
/// prefactor), so equal factors always merge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredRational {
    alphabet: VarAlphabet,
    coeff: Rational,
    prefactor: Monomial,
    factors: BTreeMap<Monomial, i32>,
}

fn is_positive_orientation(b: &Monomial) -> bool {
    b.exps().iter().find(|&&e| e != 0).is_some_and(|&e| e > 0)
}

impl FactoredRational {
    pub fn one(alphabet: &VarAlphabet) -> Self {
        FactoredRational {
            alphabet: alphabet.clone(),
            coeff: Rational::one(),
            prefactor: alphabet.one(),
            factors: BTreeMap::new(),
        }
    }

    pub fn constant(alphabet: &VarAlphabet, c: Rational) -> Self {
        assert!(!c.is_zero(), "a factored rational cannot be zero");
        let mut r = Self::one(alphabet);
        r.coeff = c;
        r
    }

    pub fn monomial(alphabet: &VarAlphabet, m: Monomial) -> Self {
        let mut r = Self::one(alphabet);
        r.prefactor = m;
        r
    }

    /// `(1 - b)^mult`.
    pub fn binomial(alphabet: &VarAlphabet, b: Monomial, mult: i32) -> Result<Self, AlgebraError> {
        Self::one(alphabet).with_factor(b, mult)
    }

    /// Multiplies in `(1 - b)^mult`.
    pub fn with_factor(mut self, b: Monomial, mult: i32) -> Result<Self, AlgebraError> {
        if b.nvars() != self.alphabet.len() {
            return Err(AlgebraError::Usage("binomial arity does not match alphabet".into()));
        }
        if b.is_one() {
            return Err(AlgebraError::ZeroBinomial);
        }
        if mult == 0 {
            return Ok(self);
        }
        let b = if is_positive_orientation(&b) {
            b
        } else {
            if mult % 2 != 0 {
                self.coeff = -self.coeff;
            }
            self.prefactor = self.prefactor.mul(&b.pow(mult));
            b.inv()
        };
        let entry = self.factors.entry(b).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.factors.remove(&b);
        }
        Ok(self)
    }

    pub fn alphabet(&self) -> &VarAlphabet {
        &self.alphabet
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn prefactor(&self) -> &Monomial {
        &self.prefactor
    }

    /// All `(b, multiplicity)` pairs, ascending by `b`.
    pub fn factors(&self) -> impl Iterator<Item = (&Monomial, i32)> {
        self.factors.iter().map(|(b, &m)| (b, m))
    }

    pub fn multiplicity(&self, b: &Monomial) -> i32 {
        self.factors.get(b).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.alphabet, other.alphabet, "alphabet mismatch");
        let mut r = self.clone();
        r.coeff = &r.coeff * &other.coeff;
        r.prefactor = r.prefactor.mul(&other.prefactor);
        for (b, &m) in &other.factors {
            let entry = r.factors.entry(*b).or_insert(0);
            *entry += m;
            if *entry == 0 {
                r.factors.remove(b);
            }
        }
        r
    }

    pub fn inv(&self) -> Self {
        FactoredRational {
            alphabet: self.alphabet.clone(),
            coeff: self.coeff.recip(),
            prefactor: self.prefactor.inv(),
            factors: self.factors.iter().map(|(b, m)| (*b, -m)).collect(),
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let k = k.unsigned_abs();
        FactoredRational {
            alphabet: self.alphabet.clone(),
            coeff: base.coeff.pow(k),
            prefactor: base.prefactor.pow(k as i32),
            factors: base.factors.iter().map(|(b, m)| (*b, m * k as i32)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        assert!(!c.is_zero(), "a factored rational cannot be zero");
        let mut r = self.clone();
        r.coeff = &r.coeff * c;
        r
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let mut r = self.clone();
        r.prefactor = r.prefactor.mul(m);
        r
    }

    /// Applies a monomial substitution factor by factor. Binomials whose
    /// image is not of the form `1 - b` are rejected.
    pub fn substitute(&self, sigma: &SubstitutionMap) -> Result<Self, AlgebraError> {
        let target = sigma.target();
        let (ps, pm) = sigma.apply_monomial(&self.prefactor);
        let mut r = Self::monomial(target, pm).scale(&if ps < 0 { -self.coeff.clone() } else { self.coeff.clone() });
        for (b, &m) in &self.factors {
            let (s, img) = sigma.apply_monomial(b);
            if s < 0 {
                return Err(AlgebraError::Usage("substitution maps a binomial to 1 + b".into()));
            }
            r = r.with_factor(img, m)?;
        }
        Ok(r)
    }

    /// `(numerator, denominator)` as expanded Laurent polynomials.
    pub fn expand(&self) -> (LaurentPolynomial, LaurentPolynomial) {
        let mut num = LaurentPolynomial::term(&self.alphabet, self.prefactor, self.coeff.clone());
        let mut den = LaurentPolynomial::one(&self.alphabet);
        for (b, &m) in &self.factors {
            let bin = LaurentPolynomial::binomial(&self.alphabet, *b);
            let target = if m > 0 { &mut num } else { &mut den };
            for _ in 0..m.unsigned_abs() {
                *target = &*target * &bin;
            }
        }
        (num, den)
    }

    /// Negative multiplicities as positive exponents.
    fn denominator_multiplicities(&self) -> impl Iterator<Item = (Monomial, u32)> + '_ {
        self.factors.iter().filter(|(_, &m)| m < 0).map(|(b, &m)| (*b, m.unsigned_abs()))
    }
}

/// A sum of rational terms over a common factored denominator.
#[derive(Clone, Debug)]
pub struct RationalSum {
    pub numerator: LaurentPolynomial,
    /// `(factor, multiplicity)`; the denominator is their product.
    pub denominator_factors: Vec<(LaurentPolynomial, u32)>,
}

impl RationalSum {
    pub fn denominator(&self) -> LaurentPolynomial {
        let mut den = LaurentPolynomial::one(self.numerator.alphabet());
        for (f, m) in &self.denominator_factors {
            for _ in 0..*m {
                den = &den * f;
            }
        }
        den
    }

    /// Exact quotient, dividing one factor at a time. Each intermediate
    /// division is exact whenever the full one is.
    pub fn quotient(&self) -> Result<LaurentPolynomial, AlgebraError> {
        let mut q = self.numerator.clone();
        for (f, m) in &self.denominator_factors {
            for _ in 0..*m {
                q = q.exact_divide(f)?;
            }
        }
        Ok(q)
    }

    pub fn substitute(&self, sigma: &SubstitutionMap) -> Result<RationalSum, AlgebraError> {
        Ok(RationalSum {
            numerator: sigma.apply(&self.numerator)?,
            denominator_factors: self
                .denominator_factors
                .iter()
                .map(|(f, m)| Ok((sigma.apply(f)?, *m)))
                .collect::<Result<_, AlgebraError>>()?,
        })
    }
}

/// Sums `r_i * w_i` over a common denominator, where each `r_i` is factored
/// and each `w_i` is an already expanded polynomial weight.
///
/// The common denominator takes, binomial by binomial, the largest negative
/// multiplicity among the terms. Terms are expanded in parallel; the result
/// does not depend on the schedule.
pub fn sum_weighted(
    alphabet: &VarAlphabet,
    terms: &[(FactoredRational, LaurentPolynomial)],
) -> Result<RationalSum, AlgebraError> {
    for (r, w) in terms {
        if r.alphabet() != alphabet || w.alphabet() != alphabet {
            return Err(AlgebraError::AlphabetMismatch {
                left: format!("{alphabet:?}"),
                right: format!("{:?}", r.alphabet()),
            });
        }
    }
    let mut lcm: BTreeMap<Monomial, u32> = BTreeMap::new();
    for (r, _) in terms {
        for (b, m) in r.denominator_multiplicities() {
            let e = lcm.entry(b).or_insert(0);
            *e = (*e).max(m);
        }
    }
    let numerator = terms
        .par_iter()
        .map(|(r, w)| {
            let mut num = w.scale(&r.coeff).mul_monomial(&r.prefactor);
            for (b, &m) in &lcm {
                let own = r.multiplicity(b);
                let extra = m as i32 + own.min(0);
                for _ in 0..extra {
                    num = &num * &LaurentPolynomial::binomial(alphabet, *b);
                }
            }
            for (b, &m) in r.factors.iter().filter(|(_, &m)| m > 0) {
                for _ in 0..m {
                    num = &num * &LaurentPolynomial::binomial(alphabet, *b);
                }
            }
            num
        })
        .reduce(|| LaurentPolynomial::zero(alphabet), |a, b| &a + &b);
    let denominator_factors = lcm
        .into_iter()
        .map(|(b, m)| (LaurentPolynomial::binomial(alphabet, b), m))
        .collect();
    Ok(RationalSum { numerator, denominator_factors })
}

/// Sum of factored rationals over their common denominator.
pub fn sum_rationals(alphabet: &VarAlphabet, rs: &[FactoredRational]) -> Result<RationalSum, AlgebraError> {
    let terms: Vec<_> = rs.iter().map(|r| (r.clone(), LaurentPolynomial::one(alphabet))).collect();
    sum_weighted(alphabet, &terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qt() -> VarAlphabet {
        VarAlphabet::new(&["q", "t"]).unwrap()
    }

    fn poly(al: &VarAlphabet, terms: &[(&[i32], i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(al, terms.iter().map(|(e, c)| (Monomial::new(e), Rational::from(*c))))
    }

    #[test]
    fn expand_simple() {
        let al = qt();
        let r = FactoredRational::monomial(&al, Monomial::new(&[0, 2]))
            .with_factor(Monomial::new(&[1, 0]), -1)
            .unwrap();
        let (n, d) = r.expand();
        assert_eq!(n, poly(&al, &[(&[0, 2], 1)]));
        assert_eq!(d, poly(&al, &[(&[0, 0], 1), (&[1, 0], -1)]));
    }

    #[test]
    fn orientation_is_canonical() {
        let al = qt();
        let a = FactoredRational::binomial(&al, Monomial::new(&[0, -1]), 1).unwrap();
        let (n, d) = a.expand();
        assert!(d.is_one());
        assert_eq!(n, poly(&al, &[(&[0, 0], 1), (&[0, -1], -1)]));
        // (1 - 1/t) / (1 - t) = -1/t
        let b = a.mul(&FactoredRational::binomial(&al, Monomial::new(&[0, 1]), -1).unwrap());
        assert_eq!(b.factors().count(), 0);
        assert_eq!(b.expand().0, poly(&al, &[(&[0, -1], -1)]));
    }

    #[test]
    fn zero_binomial_rejected() {
        assert!(matches!(
            FactoredRational::binomial(&qt(), Monomial::one(2), 1),
            Err(AlgebraError::ZeroBinomial)
        ));
    }

    #[test]
    fn sums() {
        let al = qt();
        let inv_1mq = FactoredRational::binomial(&al, Monomial::new(&[1, 0]), -1).unwrap();
        let s = sum_rationals(&al, &[inv_1mq.clone(), inv_1mq.scale(&-Rational::one())]).unwrap();
        assert!(s.numerator.is_zero());
        assert_eq!(s.denominator(), poly(&al, &[(&[0, 0], 1), (&[1, 0], -1)]));

        let inv_1mt = FactoredRational::binomial(&al, Monomial::new(&[0, 1]), -1).unwrap();
        let s = sum_rationals(&al, &[inv_1mq, inv_1mt]).unwrap();
        assert_eq!(s.numerator, poly(&al, &[(&[0, 0], 2), (&[1, 0], -1), (&[0, 1], -1)]));
        assert_eq!(
            s.denominator(),
            poly(&al, &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1), (&[1, 1], 1)])
        );
    }

    #[test]
    fn sum_with_shared_binomials() {
        // (1-q)^2/(1-t) + (1-q)/(1-t)^2 = (1-q)(2 - q - t + qt)/(1-t)^2
        let al = qt();
        let q = Monomial::new(&[1, 0]);
        let t = Monomial::new(&[0, 1]);
        let a = FactoredRational::binomial(&al, q, 2).unwrap().with_factor(t, -1).unwrap();
        let b = FactoredRational::binomial(&al, q, 1).unwrap().with_factor(t, -2).unwrap();
        let s = sum_rationals(&al, &[a, b]).unwrap();
        let expected = &poly(&al, &[(&[0, 0], 1), (&[1, 0], -1)]) * &poly(&al, &[(&[0, 0], 2), (&[1, 0], -1), (&[0, 1], -1), (&[1, 1], 1)]);
        assert_eq!(s.numerator, expected);
        assert_eq!(s.denominator_factors.len(), 1);
        assert_eq!(s.denominator_factors[0].1, 2);
    }
}
