use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{LaurentPolynomial, Monomial, Rational, VarAlphabet};

use super::{InvariantError, Superpolynomial};

/// On-disk form of one knot: terms `[a_exp, q_exp, t_exp, "coeff"]` sorted
/// ascending by exponents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotFixture {
    pub n: u32,
    pub m: u32,
    pub normalized: bool,
    pub terms: Vec<(i32, i32, i32, String)>,
}

impl KnotFixture {
    pub fn from_superpolynomial(p: &Superpolynomial) -> Self {
        KnotFixture {
            n: p.n,
            m: p.m,
            normalized: p.flags.normalized,
            terms: p
                .terms
                .terms()
                .iter()
                .map(|(m, c)| (m.exp(0), m.exp(1), m.exp(2), c.to_string()))
                .collect(),
        }
    }

    pub fn polynomial(&self) -> Result<LaurentPolynomial, InvariantError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (a, q, t, c) in &self.terms {
            let c: Rational = c.parse().map_err(|e| InvariantError::Usage(format!("fixture ({},{}): {e}", self.n, self.m)))?;
            terms.push((Monomial::new(&[*a, *q, *t]), c));
        }
        Ok(LaurentPolynomial::from_terms(&VarAlphabet::knot(), terms))
    }

    /// Compact JSON plus trailing newline; the byte-level comparison format.
    pub fn to_canonical_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("fixture serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, InvariantError> {
        serde_json::from_str(text).map_err(|e| InvariantError::Usage(format!("bad fixture JSON: {e}")))
    }
}

/// One entry of the shipped corpus.
pub struct CorpusEntry {
    pub n: u32,
    pub m: u32,
    pub json: &'static str,
}

macro_rules! corpus_entries {
    ($(($n:literal, $m:literal)),* $(,)?) => {
        &[$(CorpusEntry {
            n: $n,
            m: $m,
            json: include_str!(concat!("../../fixtures/torus_", stringify!($n), "_", stringify!($m), ".json")),
        }),*]
    };
}

static CORPUS: &[CorpusEntry] = corpus_entries![
    (2, 3), (2, 5), (2, 7),
    (3, 4), (3, 5), (3, 7), (3, 8), (3, 10), (3, 11),
    (4, 5), (4, 7), (4, 9), (4, 11),
    (5, 6), (5, 8),
];

/// The fifteen reference tables, embedded at build time.
pub fn corpus() -> &'static [CorpusEntry] {
    CORPUS
}

/// A single term-level disagreement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermDiff {
    pub exps: (i32, i32, i32),
    pub expected: Rational,
    pub actual: Rational,
}

/// Terms where `expected` and `actual` disagree, ascending.
pub fn diff_terms(expected: &LaurentPolynomial, actual: &LaurentPolynomial) -> Vec<TermDiff> {
    let mut all: BTreeMap<Monomial, (Rational, Rational)> = BTreeMap::new();
    for (m, c) in expected.terms() {
        all.entry(*m).or_insert_with(|| (Rational::from(0), Rational::from(0))).0 = c.clone();
    }
    for (m, c) in actual.terms() {
        all.entry(*m).or_insert_with(|| (Rational::from(0), Rational::from(0))).1 = c.clone();
    }
    all.into_iter()
        .filter(|(_, (e, a))| e != a)
        .map(|(m, (expected, actual))| TermDiff { exps: (m.exp(0), m.exp(1), m.exp(2)), expected, actual })
        .collect()
}
