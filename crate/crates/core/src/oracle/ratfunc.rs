use std::collections::BTreeMap;
use std::fmt;
use std::sync::LazyLock;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{FactoredRational, LaurentPolynomial, Monomial, Rational, VarAlphabet};

static QT: LazyLock<VarAlphabet> = LazyLock::new(|| VarAlphabet::new(&["q", "t"]).expect("valid alphabet"));

/// The two-variable alphabet `(q, t)` used throughout the oracle.
pub fn qt() -> VarAlphabet {
    QT.clone()
}

/// Drops the `A` slot of a Macdonald-alphabet polynomial. Panics if `A`
/// actually occurs.
pub fn from_macd(p: &LaurentPolynomial) -> LaurentPolynomial {
    p.map_terms(&QT, |m, c| {
        assert_eq!(m.exp(2), 0, "A still present in {p}");
        (Monomial::new(&[m.exp(0), m.exp(1)]), c.clone())
    })
}

/// An irreducible piece of a binomial: `1 - u` for `d = 1`, otherwise the
/// cyclotomic polynomial `Phi_d(u)`, with `u = q^a t^b`, `gcd(a, b) = 1`
/// and `(a, b)` lexicographically positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Factor {
    a: i32,
    b: i32,
    d: u32,
}

/// Integer coefficients of `Phi_d(x)`, lowest degree first.
fn cyclotomic(d: u32) -> Vec<i64> {
    static CACHE: LazyLock<std::sync::Mutex<BTreeMap<u32, Vec<i64>>>> = LazyLock::new(Default::default);
    if let Some(c) = CACHE.lock().expect("cache").get(&d) {
        return c.clone();
    }
    // x^d - 1 divided by Phi_e for every proper divisor e
    let mut p = vec![0i64; d as usize + 1];
    p[0] = -1;
    p[d as usize] = 1;
    for e in (1..d).filter(|e| d % e == 0) {
        let f = cyclotomic(e);
        let mut quotient = vec![0i64; p.len() - f.len() + 1];
        for i in (0..quotient.len()).rev() {
            let c = p[i + f.len() - 1];
            quotient[i] = c;
            for (j, fj) in f.iter().enumerate() {
                p[i + j] -= c * fj;
            }
        }
        debug_assert!(p.iter().all(|&c| c == 0));
        p = quotient;
    }
    CACHE.lock().expect("cache").insert(d, p.clone());
    p
}

impl Factor {
    fn poly(&self) -> LaurentPolynomial {
        let u = Monomial::new(&[self.a, self.b]);
        if self.d == 1 {
            return LaurentPolynomial::binomial(&QT, u);
        }
        LaurentPolynomial::from_terms(
            &QT,
            cyclotomic(self.d).into_iter().enumerate().map(|(k, c)| (u.pow(k as i32), Rational::from(c))),
        )
    }
}

/// Splits `1 - q^a t^b` into `sign * monomial * prod factors`.
fn split_binomial(a: i32, b: i32) -> (i64, Monomial, Vec<Factor>) {
    assert!(a != 0 || b != 0, "1 - 1 is not a factor");
    let (sign, mono, a, b) = if a > 0 || (a == 0 && b > 0) {
        (1, Monomial::one(2), a, b)
    } else {
        (-1, Monomial::new(&[a, b]), -a, -b)
    };
    let g = (a.unsigned_abs()).gcd(&b.unsigned_abs());
    let (pa, pb) = (a / g as i32, b / g as i32);
    let factors = (1..=g).filter(|d| g % d == 0).map(|d| Factor { a: pa, b: pb, d }).collect();
    (sign, mono, factors)
}

/// A quotient `num / prod den` of a Laurent polynomial by a product of
/// cyclotomic pieces of binomials.
///
/// After every operation each denominator factor is divided out of the
/// numerator as often as possible, so zero is recognised and the sizes stay
/// close to those of the reduced value.
#[derive(Clone)]
pub struct RatFunc {
    num: LaurentPolynomial,
    den: BTreeMap<Factor, u32>,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self::from_poly(LaurentPolynomial::zero(&QT))
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(LaurentPolynomial::constant(&QT, c))
    }

    pub fn from_poly(p: LaurentPolynomial) -> Self {
        assert_eq!(p.alphabet(), &*QT);
        RatFunc { num: p, den: BTreeMap::new() }
    }

    /// `1 - q^a t^b`.
    pub fn binomial(a: i32, b: i32) -> Self {
        Self::from_poly(LaurentPolynomial::binomial(&QT, Monomial::new(&[a, b])))
    }

    /// `1 / (1 - q^a t^b)`.
    pub fn inv_binomial(a: i32, b: i32) -> Self {
        let (sign, mono, factors) = split_binomial(a, b);
        let mut den = BTreeMap::new();
        for f in factors {
            *den.entry(f).or_insert(0) += 1;
        }
        RatFunc { num: LaurentPolynomial::term(&QT, mono.inv(), Rational::from(sign)), den }
    }

    /// `num / den`; `den` must be a monomial times binomials.
    ///
    /// # Panics
    /// If `den` does not factor over binomials.
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Self {
        Self::from_poly(num).div(&Self::from_poly(den))
    }

    /// Converts an `A`-free factored rational from the Macdonald alphabet.
    pub fn from_factored(r: &FactoredRational) -> Self {
        let pre = r.prefactor();
        assert_eq!(pre.exp(2), 0, "A still present");
        let mut out = Self::from_poly(LaurentPolynomial::term(&QT, Monomial::new(&[pre.exp(0), pre.exp(1)]), r.coeff().clone()));
        for (b, mult) in r.factors() {
            assert_eq!(b.exp(2), 0, "A still present");
            let bin = if mult > 0 { Self::binomial(b.exp(0), b.exp(1)) } else { Self::inv_binomial(b.exp(0), b.exp(1)) };
            for _ in 0..mult.unsigned_abs() {
                out = out.mul(&bin);
            }
        }
        out
    }

    pub fn numer(&self) -> &LaurentPolynomial {
        &self.num
    }

    /// Expanded denominator.
    pub fn denom(&self) -> LaurentPolynomial {
        let mut d = LaurentPolynomial::one(&QT);
        for (f, m) in &self.den {
            for _ in 0..*m {
                d = &d * &f.poly();
            }
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// # Panics
    /// On zero, or when the numerator is not a product of binomials.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        let (c, mono, factors) = factor(&self.num).unwrap_or_else(|| panic!("{} does not factor over binomials", self.num));
        let mut num = LaurentPolynomial::term(&QT, mono.inv(), c.recip());
        for (f, m) in &self.den {
            for _ in 0..*m {
                num = &num * &f.poly();
            }
        }
        RatFunc { num, den: factors }.reduced()
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let mut den = self.den.clone();
        for (f, &m) in &other.den {
            let e = den.entry(*f).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |r: &RatFunc| {
            let mut p = r.num.clone();
            for (f, &m) in &den {
                for _ in r.den.get(f).copied().unwrap_or(0)..m {
                    p = &p * &f.poly();
                }
            }
            p
        };
        RatFunc { num: &lift(self) + &lift(other), den }.reduced()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: -self.num.clone(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut den = self.den.clone();
        for (f, &m) in &other.den {
            *den.entry(*f).or_insert(0) += m;
        }
        RatFunc { num: &self.num * &other.num, den }.reduced()
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.recip())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Substitutes `q = t`; `None` if the denominator vanishes there.
    pub fn at_q_equals_t(&self) -> Option<Self> {
        let diag = |p: &LaurentPolynomial| p.map_terms(&QT, |m, c| (Monomial::new(&[0, m.exp(0) + m.exp(1)]), c.clone()));
        let den = diag(&self.denom());
        if den.is_zero() {
            return None;
        }
        Some(Self::new(diag(&self.num), den))
    }

    /// The value as a plain rational number, if it is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_empty() && self.num.terms().iter().all(|(m, _)| m.is_one()) {
            return Some(self.num.constant_term());
        }
        None
    }

    fn reduced(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let keys: Vec<Factor> = self.den.keys().copied().collect();
        for f in keys {
            let p = f.poly();
            while self.den[&f] > 0 {
                match self.num.exact_divide(&p) {
                    Ok(q) => {
                        self.num = q;
                        *self.den.get_mut(&f).expect("present") -= 1;
                    }
                    Err(_) => break,
                }
            }
            if self.den[&f] == 0 {
                self.den.remove(&f);
            }
        }
        self
    }
}

/// `p = c * monomial * prod factors`, or `None` if `p` has a factor that is
/// not a piece of a binomial.
fn factor(p: &LaurentPolynomial) -> Option<(Rational, Monomial, BTreeMap<Factor, u32>)> {
    let mono = p.monomial_content().ok()?;
    let mut rest = p.div_monomial(&mono);
    let mut found: BTreeMap<Factor, u32> = BTreeMap::new();
    loop {
        if rest.len() == 1 {
            let (m, c) = rest.terms()[0].clone();
            return Some((c, mono.mul(&m), found));
        }
        let dq = rest.max_exp(0)? - rest.min_exp(0)?;
        let dt = rest.max_exp(1)? - rest.min_exp(1)?;
        let mut progress = false;
        'search: for a in 0..=dq {
            for b in -dt..=dt {
                if (a == 0 && b <= 0) || (a.unsigned_abs()).gcd(&b.unsigned_abs()) != 1 {
                    continue;
                }
                let step = a.max(b.abs()).max(1);
                let max_d = (dq.max(dt) / step).max(1) as u32 * 6 + 6;
                for d in 1..=max_d {
                    let f = Factor { a, b, d };
                    let fp = f.poly();
                    let span_q = fp.max_exp(0)? - fp.min_exp(0)?;
                    let span_t = fp.max_exp(1)? - fp.min_exp(1)?;
                    if span_q > dq || span_t > dt {
                        continue;
                    }
                    if let Ok(q) = rest.exact_divide(&fp) {
                        rest = q;
                        *found.entry(f).or_insert(0) += 1;
                        progress = true;
                        break 'search;
                    }
                }
            }
        }
        if !progress {
            return None;
        }
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.denom())
        }
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::constant(Rational::from(c))
    }
}
