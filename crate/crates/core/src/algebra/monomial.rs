use std::fmt;
use std::sync::{Arc, LazyLock};

use super::AlgebraError;

/// Upper bound on the number of variables a single alphabet may carry.
pub const MAX_VARS: usize = 8;

/// Ordered list of distinct variable names.
///
/// Cloning is cheap; polynomials carry their alphabet and refuse to combine
/// with polynomials over a different one.
#[derive(Clone)]
pub struct VarAlphabet(Arc<[String]>);

static MACD: LazyLock<VarAlphabet> = LazyLock::new(|| VarAlphabet::new(&["q", "t", "A"]).unwrap());
static KNOT: LazyLock<VarAlphabet> = LazyLock::new(|| VarAlphabet::new(&["a", "q", "t"]).unwrap());

impl VarAlphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, AlgebraError> {
        if names.len() > MAX_VARS {
            return Err(AlgebraError::Usage(format!(
                "alphabet of {} variables exceeds the limit of {MAX_VARS}",
                names.len()
            )));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(AlgebraError::Usage(format!("duplicate variable name {a:?}")));
            }
        }
        Ok(VarAlphabet(names.into()))
    }

    /// Macdonald side: `(q, t, A)` where `A` stands for `t^N`.
    pub fn macd() -> Self {
        MACD.clone()
    }

    /// Knot side: `(a, q, t)`.
    pub fn knot() -> Self {
        KNOT.clone()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// Monomial consisting of a single variable to the first power.
    pub fn var(&self, name: &str) -> Monomial {
        let i = self
            .index_of(name)
            .unwrap_or_else(|| panic!("variable {name:?} not in alphabet {self:?}"));
        let mut e = vec![0; self.len()];
        e[i] = 1;
        Monomial::new(&e)
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.len())
    }
}

impl PartialEq for VarAlphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for VarAlphabet {}

impl fmt::Debug for VarAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.join(", "))
    }
}

/// Laurent monomial: a signed exponent vector.
///
/// Ordering is lexicographic on the exponents in alphabet order. Unused slots
/// beyond `len` are always zero so the derived comparisons stay lexicographic.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: [i32; MAX_VARS],
    len: u8,
}

impl Monomial {
    pub fn new(exps: &[i32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut e = [0; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Monomial { exps: e, len: exps.len() as u8 }
    }

    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "too many variables");
        Monomial { exps: [0; MAX_VARS], len: nvars as u8 }
    }

    pub fn nvars(&self) -> usize {
        self.len as usize
    }

    pub fn exps(&self) -> &[i32] {
        &self.exps[..self.len as usize]
    }

    pub fn exp(&self, i: usize) -> i32 {
        self.exps()[i]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Total degree (sum of exponents).
    pub fn degree(&self) -> i64 {
        self.exps().iter().map(|&e| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len, other.len);
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.exps[i] += other.exps[i];
        }
        r
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len, other.len);
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.exps[i] -= other.exps[i];
        }
        r
    }

    pub fn inv(&self) -> Monomial {
        let mut r = *self;
        for e in r.exps.iter_mut() {
            *e = -*e;
        }
        r
    }

    pub fn pow(&self, k: i32) -> Monomial {
        let mut r = *self;
        for e in r.exps.iter_mut() {
            *e *= k;
        }
        r
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.exps[i] = r.exps[i].min(other.exps[i]);
        }
        r
    }

    /// Componentwise `self <= other`, i.e. `self` divides `other` in the
    /// ordinary (non-Laurent) sense.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.exps.iter().all(|&e| e >= 0)
    }

    pub fn display<'a>(&'a self, alphabet: &'a VarAlphabet) -> impl fmt::Display + 'a {
        MonomialDisplay { m: self, alphabet }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps())
    }
}

struct MonomialDisplay<'a> {
    m: &'a Monomial,
    alphabet: &'a VarAlphabet,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, &e) in self.alphabet.names().iter().zip(self.m.exps()) {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}
