use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::monomial::{Monomial, VarAlphabet};
use super::rational::Rational;
use super::AlgebraError;

/// Sparse Laurent polynomial with exact rational coefficients.
///
/// Terms are kept sorted ascending by monomial (lexicographic in alphabet
/// order) with no zero coefficients, so structural equality is value
/// equality and serialization is canonical.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    alphabet: VarAlphabet,
    terms: Vec<(Monomial, Rational)>,
}

impl LaurentPolynomial {
    pub fn zero(alphabet: &VarAlphabet) -> Self {
        LaurentPolynomial { alphabet: alphabet.clone(), terms: Vec::new() }
    }

    pub fn one(alphabet: &VarAlphabet) -> Self {
        Self::constant(alphabet, Rational::one())
    }

    pub fn constant(alphabet: &VarAlphabet, c: Rational) -> Self {
        Self::term(alphabet, alphabet.one(), c)
    }

    pub fn term(alphabet: &VarAlphabet, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), alphabet.len(), "monomial arity does not match alphabet");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        LaurentPolynomial { alphabet: alphabet.clone(), terms }
    }

    pub fn monomial(alphabet: &VarAlphabet, m: Monomial) -> Self {
        Self::term(alphabet, m, Rational::one())
    }

    /// `1 - b`, the building block of every factored expression.
    pub fn binomial(alphabet: &VarAlphabet, b: Monomial) -> Self {
        Self::from_terms(alphabet, [(alphabet.one(), Rational::one()), (b, -Rational::one())])
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms<I>(alphabet: &VarAlphabet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), alphabet.len(), "monomial arity does not match alphabet");
            match acc.get_mut(&m) {
                Some(v) => *v += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_sorted_unchecked(alphabet, acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    fn from_sorted_unchecked(alphabet: &VarAlphabet, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        LaurentPolynomial { alphabet: alphabet.clone(), terms }
    }

    pub fn alphabet(&self) -> &VarAlphabet {
        &self.alphabet
    }

    /// Terms in ascending lexicographic order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|(k, _)| k.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&self.alphabet.one())
    }

    /// Leading term under lexicographic order.
    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    fn check_alphabet(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.alphabet != other.alphabet {
            return Err(AlgebraError::AlphabetMismatch {
                left: format!("{:?}", self.alphabet),
                right: format!("{:?}", other.alphabet),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_alphabet(other)?;
        Ok(Self::from_sorted_unchecked(&self.alphabet, merge(&self.terms, &other.terms, false)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_alphabet(other)?;
        Ok(Self::from_sorted_unchecked(&self.alphabet, merge(&self.terms, &other.terms, true)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_alphabet(other)?;
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.is_zero() {
            return Ok(Self::zero(&self.alphabet));
        }
        if small.len() <= 8 {
            // Shifting by a monomial preserves lexicographic order, so each
            // partial product is already sorted and can be merged linearly.
            let mut acc: Vec<(Monomial, Rational)> = Vec::new();
            for (m, c) in &small.terms {
                let shifted: Vec<(Monomial, Rational)> =
                    large.terms.iter().map(|(lm, lc)| (lm.mul(m), lc * c)).collect();
                acc = if acc.is_empty() { shifted } else { merge(&acc, &shifted, false) };
            }
            return Ok(Self::from_sorted_unchecked(&self.alphabet, acc));
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(small.len() * large.len());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                let p = c1 * c2;
                match acc.entry(m1.mul(m2)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += &p,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(p);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Ok(Self::from_sorted_unchecked(&self.alphabet, terms))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.alphabet);
        }
        let terms = self.terms.iter().map(|(m, k)| (*m, k * c)).collect();
        Self::from_sorted_unchecked(&self.alphabet, terms)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let terms = self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect();
        Self::from_sorted_unchecked(&self.alphabet, terms)
    }

    pub fn div_monomial(&self, m: &Monomial) -> Self {
        self.mul_monomial(&m.inv())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.alphabet);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Componentwise minimum of all exponent vectors.
    pub fn monomial_content(&self) -> Result<Monomial, AlgebraError> {
        let mut it = self.terms.iter();
        let first = it
            .next()
            .ok_or_else(|| AlgebraError::Usage("monomial content of the zero polynomial".into()))?
            .0;
        Ok(it.fold(first, |acc, (m, _)| acc.gcd(m)))
    }

    /// Largest exponent of variable `i` over all terms.
    pub fn max_exp(&self, i: usize) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.exp(i)).max()
    }

    pub fn min_exp(&self, i: usize) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.exp(i)).min()
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Both operands are shifted to ordinary polynomials by their monomial
    /// content, then divided under lexicographic order; any nonzero
    /// remainder means the quotient is not a Laurent polynomial.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        self.check_alphabet(divisor)?;
        if divisor.is_zero() {
            return Err(AlgebraError::Usage("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero(&self.alphabet));
        }
        let fc = self.monomial_content()?;
        let gc = divisor.monomial_content()?;
        let g: Vec<(Monomial, Rational)> =
            divisor.terms.iter().map(|(m, c)| (m.div(&gc), c.clone())).collect();
        let (g_lm, g_lc) = g.last().cloned().expect("nonzero divisor");
        let g_rest = &g[..g.len() - 1];

        let mut rem: BTreeMap<Monomial, Rational> =
            self.terms.iter().map(|(m, c)| (m.div(&fc), c.clone())).collect();
        let mut quotient: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((lm, lc)) = rem.pop_last() {
            if !g_lm.divides(&lm) {
                return Err(AlgebraError::NonDivisible);
            }
            let qm = lm.div(&g_lm);
            let qc = &lc / &g_lc;
            for (m, c) in g_rest {
                let key = m.mul(&qm);
                let delta = &qc * c;
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= &delta;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        quotient.reverse();
        let shift = fc.div(&gc);
        let terms = quotient.into_iter().map(|(m, c)| (m.mul(&shift), c)).collect();
        Ok(Self::from_sorted_unchecked(&self.alphabet, terms))
    }

    /// Rewrites every term into `target`, merging collisions.
    pub fn map_terms<F>(&self, target: &VarAlphabet, mut f: F) -> Self
    where
        F: FnMut(&Monomial, &Rational) -> (Monomial, Rational),
    {
        Self::from_terms(target, self.terms.iter().map(|(m, c)| f(m, c)))
    }

    /// Canonical text form: one `<exp_1> ... <exp_n> <coeff>` line per term,
    /// ascending lexicographic by exponents.
    pub fn to_canonical_text(&self) -> String {
        let mut out = String::new();
        for (m, c) in &self.terms {
            for e in m.exps() {
                out.push_str(&e.to_string());
                out.push(' ');
            }
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }

    pub fn parse_canonical_text(alphabet: &VarAlphabet, text: &str) -> Result<Self, AlgebraError> {
        let mut terms = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != alphabet.len() + 1 {
                return Err(AlgebraError::Parse(format!(
                    "line {}: expected {} fields, found {}",
                    lineno + 1,
                    alphabet.len() + 1,
                    fields.len()
                )));
            }
            let mut exps = Vec::with_capacity(alphabet.len());
            for f in &fields[..alphabet.len()] {
                exps.push(f.parse::<i32>().map_err(|e| AlgebraError::Parse(format!("line {}: {e}", lineno + 1)))?);
            }
            let c: Rational = fields[alphabet.len()]
                .parse()
                .map_err(|e| AlgebraError::Parse(format!("line {}: {e}", lineno + 1)))?;
            terms.push((Monomial::new(&exps), c));
        }
        Ok(Self::from_terms(alphabet, terms))
    }
}

fn merge(a: &[(Monomial, Rational)], b: &[(Monomial, Rational)], negate_b: bool) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let take_b = |c: &Rational| if negate_b { -c } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0, take_b(&b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(m, c)| (*m, take_b(c))));
    out
}

macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl<'a> $tr<&'a LaurentPolynomial> for &'a LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.display(&self.alphabet))?;
            } else {
                write!(f, "{abs}*{}", m.display(&self.alphabet))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
