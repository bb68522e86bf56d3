use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{sum_weighted, AlgebraError, LaurentPolynomial, Monomial, SubstitutionMap, VarAlphabet};
use crate::macdonald;
use crate::partitions;

use super::{compute, compute_raw, partition_term, InvariantError, KnotRequest};

/// Monomials fixing the normalization across a family: the raw content of
/// `P_{n, nk+r}` is `mu * nu^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Calibration {
    pub mu: Monomial,
    pub nu: Monomial,
}

/// `F_{n,r}(z) = sum_k P_{n, nk+r} z^k` as `N(z) / prod (1 - z alpha)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratingFunction {
    pub n: u32,
    pub r: u32,
    /// `(power of z, coefficient)`, ascending, zero coefficients omitted.
    pub numerator: Vec<(u32, LaurentPolynomial)>,
    /// Distinct pole monomials `alpha`, ascending.
    pub denominator: Vec<Monomial>,
    pub calibration: Calibration,
}

type Terms = Vec<(i32, i32, i32, String)>;

#[derive(Clone, Debug, Serialize)]
pub struct GeneratingFunctionJson {
    pub n: u32,
    pub r: u32,
    pub numerator: Vec<(u32, Terms)>,
    pub denominator: Vec<(i32, i32, i32)>,
}

fn triple(m: &Monomial) -> (i32, i32, i32) {
    (m.exp(0), m.exp(1), m.exp(2))
}

fn poly_terms(p: &LaurentPolynomial) -> Terms {
    p.terms().iter().map(|(m, c)| (m.exp(0), m.exp(1), m.exp(2), c.to_string())).collect()
}

impl GeneratingFunction {
    /// Taylor coefficients of `z^0 ..= z^k_max`.
    pub fn series(&self, k_max: u32) -> Vec<LaurentPolynomial> {
        let knot = VarAlphabet::knot();
        let len = k_max as usize + 1;
        let mut coeffs = vec![LaurentPolynomial::zero(&knot); len];
        for (j, c) in &self.numerator {
            if (*j as usize) < len {
                coeffs[*j as usize] = c.clone();
            }
        }
        // multiply by 1/(1 - z alpha) = sum alpha^i z^i, one pole at a time
        for alpha in &self.denominator {
            for k in 1..len {
                let carry = coeffs[k - 1].mul_monomial(alpha);
                coeffs[k] = &coeffs[k] + &carry;
            }
        }
        coeffs
    }

    pub fn to_json(&self) -> GeneratingFunctionJson {
        GeneratingFunctionJson {
            n: self.n,
            r: self.r,
            numerator: self.numerator.iter().map(|(j, c)| (*j, poly_terms(c))).collect(),
            denominator: self.denominator.iter().map(triple).collect(),
        }
    }

    pub fn to_canonical_json(&self) -> String {
        let mut s = serde_json::to_string(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }
}

/// `e_j` of a list of monomials.
fn elementary(alphas: &[Monomial], j: usize) -> LaurentPolynomial {
    let knot = VarAlphabet::knot();
    let mut e = vec![LaurentPolynomial::one(&knot)];
    for a in alphas {
        e.push(LaurentPolynomial::zero(&knot));
        for k in (1..e.len()).rev() {
            let add = e[k - 1].mul_monomial(a);
            e[k] = &e[k] + &add;
        }
    }
    e.into_iter().nth(j).unwrap_or_else(|| LaurentPolynomial::zero(&knot))
}

/// Builds `F_{n,r}` in closed form and checks its first `k_check + 1`
/// Taylor coefficients against [`compute`].
///
/// The pole of partition `Y` is `sigma(t^n T_Y) / nu` where `nu` is the
/// per-step ratio of raw contents, calibrated on `k = 0..=3`.
pub fn generating_function(n: u32, r: u32, k_check: u32) -> Result<GeneratingFunction, InvariantError> {
    if n < 2 || r == 0 || r >= n {
        return Err(InvariantError::Usage(format!("generating function needs n >= 2 and 1 <= r < n, got n={n}, r={r}")));
    }
    let contents = (0..=3u32)
        .into_par_iter()
        .map(|k| {
            let req = KnotRequest::new(n, n * k + r)?;
            Ok(compute_raw(&req)?.monomial_content()?)
        })
        .collect::<Result<Vec<Monomial>, InvariantError>>()?;
    let mu = contents[0];
    let nu = contents[1].div(&contents[0]);
    for k in 1..3 {
        let step = contents[k + 1].div(&contents[k]);
        if step != nu {
            return Err(InvariantError::Calibration(format!(
                "content ratio at k={k} is {step:?}, at k=0 it is {nu:?}"
            )));
        }
    }

    let sigma = SubstitutionMap::macd_to_knot();
    let base = KnotRequest::new(n, r)?;
    let t_n = Monomial::new(&[0, n as i32, 0]);
    let parts = partitions::enumerate(n as usize);
    let mut poles: Vec<Monomial> = Vec::with_capacity(parts.len());
    let mut terms = Vec::with_capacity(parts.len());
    for y in &parts {
        let (sign, beta) = sigma.apply_monomial(&macdonald::framing(y).mul(&t_n));
        debug_assert_eq!(sign, 1);
        poles.push(beta.div(&nu));
        terms.push(partition_term(y, &base)?);
    }
    let mut distinct = poles.clone();
    distinct.sort();
    distinct.dedup();

    let knot = VarAlphabet::knot();
    let mut numerator = Vec::new();
    for j in 0..distinct.len() {
        let weighted: Vec<_> = terms
            .iter()
            .zip(&poles)
            .map(|((fr, w), alpha)| {
                let others: Vec<Monomial> = distinct.iter().filter(|d| *d != alpha).copied().collect();
                let mut e = elementary(&others, j);
                if j % 2 == 1 {
                    e = -e;
                }
                (fr.clone(), w * &e)
            })
            .collect();
        let sum = sum_weighted(&knot, &weighted)?;
        let coeff = match sum.quotient() {
            Ok(c) => c.div_monomial(&mu),
            Err(AlgebraError::NonDivisible) => {
                return Err(InvariantError::Calibration(format!("numerator coefficient of z^{j} is not a polynomial")))
            }
            Err(e) => return Err(e.into()),
        };
        if !coeff.is_zero() {
            numerator.push((j as u32, coeff));
        }
    }

    let gf = GeneratingFunction { n, r, numerator, denominator: distinct, calibration: Calibration { mu, nu } };

    let series = gf.series(k_check);
    let expected = (0..=k_check)
        .into_par_iter()
        .map(|k| Ok(compute(&KnotRequest::new(n, n * k + r)?)?.terms))
        .collect::<Result<Vec<_>, InvariantError>>()?;
    let mismatches: BTreeMap<u32, usize> = series
        .iter()
        .zip(&expected)
        .enumerate()
        .filter(|(_, (s, e))| s != e)
        .map(|(k, (s, e))| (k as u32, (s - e).len()))
        .collect();
    if !mismatches.is_empty() {
        return Err(InvariantError::Validation(format!("differing terms per k: {mismatches:?}")));
    }
    Ok(gf)
}
