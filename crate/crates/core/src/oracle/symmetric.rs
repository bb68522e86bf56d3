use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{LaurentPolynomial, Monomial, Rational, VarAlphabet};
use crate::partitions::{self, Partition};

use super::ratfunc::{qt, RatFunc};
use super::OracleError;

/// Largest partition size the oracle accepts.
pub const MAX_SIZE: usize = 5;
/// Most explicit variables the oracle expands into.
pub const MAX_VARS: usize = 6;

/// A symmetric function in the monomial basis, truncated to `nx` variables
/// (monomials `m_mu` with more than `nx` parts are dropped).
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricPoly {
    pub nx: usize,
    pub coeffs: BTreeMap<Partition, RatFunc>,
}

impl SymmetricPoly {
    pub fn coeff(&self, mu: &Partition) -> RatFunc {
        self.coeffs.get(mu).cloned().unwrap_or_else(RatFunc::zero)
    }

    fn truncated(&self, nx: usize) -> SymmetricPoly {
        SymmetricPoly {
            nx,
            coeffs: self.coeffs.iter().filter(|(mu, _)| mu.len() <= nx).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    /// Evaluates at concrete points given as `(q, t)` monomials, e.g. the
    /// principal specialization `x_i = t^{i-1}`.
    pub fn evaluate(&self, point: &[Monomial]) -> RatFunc {
        let mut total = RatFunc::zero();
        for (mu, c) in &self.coeffs {
            if mu.len() > point.len() {
                continue;
            }
            total = total.add(&c.mul(&RatFunc::from_poly(monomial_symmetric_at(mu, point))));
        }
        total
    }
}

/// `m_mu(x_1, ..., x_N)` at monomial points, by summing over the distinct
/// rearrangements of `mu` padded with zeros.
pub fn monomial_symmetric_at(mu: &Partition, point: &[Monomial]) -> LaurentPolynomial {
    let al = qt();
    if mu.len() > point.len() {
        return LaurentPolynomial::zero(&al);
    }
    let mut exps: Vec<usize> = mu.rows().to_vec();
    exps.resize(point.len(), 0);
    exps.sort_unstable();
    let mut total = LaurentPolynomial::zero(&al);
    loop {
        let mut m = Monomial::one(al.len());
        for (x, &e) in point.iter().zip(&exps) {
            m = m.mul(&x.pow(e as i32));
        }
        total = &total + &LaurentPolynomial::monomial(&al, m);
        if !next_permutation(&mut exps) {
            break;
        }
    }
    total
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Alphabet `x1, ..., x_nx`.
pub fn x_alphabet(nx: usize) -> VarAlphabet {
    let names: Vec<String> = (1..=nx).map(|i| format!("x{i}")).collect();
    VarAlphabet::new(&names).expect("at most eight variables")
}

/// `p_k(x_1, ..., x_nx)` as an explicit polynomial.
pub fn power_sum_explicit(k: usize, nx: usize) -> LaurentPolynomial {
    let al = x_alphabet(nx);
    LaurentPolynomial::from_terms(
        &al,
        (0..nx).map(|i| {
            let mut e = vec![0; nx];
            e[i] = k as i32;
            (Monomial::new(&e), Rational::one())
        }),
    )
}

/// Coefficient of `x^mu` (padded) in an explicit polynomial.
pub fn explicit_coefficient(p: &LaurentPolynomial, mu: &Partition) -> Rational {
    let mut e: Vec<i32> = mu.rows().iter().map(|&r| r as i32).collect();
    e.resize(p.alphabet().len(), 0);
    p.coeff(&Monomial::new(&e))
}

/// `z_rho = prod_i i^{m_i} m_i!`.
pub fn z(rho: &Partition) -> i64 {
    rho.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &m)| (i as i64).pow(m as u32) * (1..=m as i64).product::<i64>())
        .product()
}

/// Change of basis data in degree `n`: `p_rho = sum_lambda L[rho][lambda] m_lambda`
/// and its inverse `m_lambda = sum_rho K[lambda][rho] p_rho`.
pub struct Transition {
    pub parts: Vec<Partition>,
    pub l: Vec<Vec<Rational>>,
    pub k: Vec<Vec<Rational>>,
}

impl Transition {
    pub fn new(n: usize) -> Self {
        let parts = partitions::enumerate(n);
        let nx = n.max(1);
        let l: Vec<Vec<Rational>> = parts
            .iter()
            .map(|rho| {
                let mut p = LaurentPolynomial::one(&x_alphabet(nx));
                for &r in rho.rows() {
                    p = &p * &power_sum_explicit(r, nx);
                }
                parts.iter().map(|lambda| explicit_coefficient(&p, lambda)).collect()
            })
            .collect();
        let k = invert(&l);
        Transition { parts, l, k }
    }

    pub fn index(&self, y: &Partition) -> usize {
        self.parts.iter().position(|p| p == y).expect("partition of the right size")
    }
}

/// Gauss-Jordan inverse over the rationals.
fn invert(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).expect("transition matrix is invertible");
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * p);
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// `z_rho prod_i (1 - q^{rho_i}) / (1 - t^{rho_i})`.
pub fn power_sum_norm(rho: &Partition) -> RatFunc {
    let mut w = RatFunc::from(z(rho));
    for &r in rho.rows() {
        w = w.mul(&RatFunc::binomial(r as i32, 0)).mul(&RatFunc::inv_binomial(0, r as i32));
    }
    w
}

/// All Macdonald polynomials of one degree, with the Gram matrix of the
/// monomial basis under the `(q, t)` inner product.
pub struct MacdonaldBasis {
    pub transition: Transition,
    pub gram: Vec<Vec<RatFunc>>,
    /// `p[i]` is `P` of `transition.parts[i]`, in the monomial basis.
    pub p: Vec<Vec<RatFunc>>,
}

impl MacdonaldBasis {
    pub fn new(n: usize) -> Result<Self, OracleError> {
        if n > MAX_SIZE {
            return Err(OracleError::Usage(format!("oracle is capped at size {MAX_SIZE}, got {n}")));
        }
        let transition = Transition::new(n);
        let size = transition.parts.len();
        let weights: Vec<RatFunc> = transition.parts.iter().map(power_sum_norm).collect();
        let mut gram = vec![vec![RatFunc::zero(); size]; size];
        for a in 0..size {
            for b in a..size {
                let mut g = RatFunc::zero();
                for (r, w) in weights.iter().enumerate() {
                    let c = &transition.k[a][r] * &transition.k[b][r];
                    if !c.is_zero() {
                        g = g.add(&w.scale(&c));
                    }
                }
                gram[a][b] = g.clone();
                gram[b][a] = g;
            }
        }

        // Gram-Schmidt from the bottom of the (reverse lexicographic) order;
        // for sizes up to five it is a total order refining dominance.
        let mut p: Vec<Vec<RatFunc>> = vec![Vec::new(); size];
        let mut norms: Vec<RatFunc> = vec![RatFunc::zero(); size];
        for y in (0..size).rev() {
            let mut v = vec![RatFunc::zero(); size];
            v[y] = RatFunc::one();
            for mu in (y + 1)..size {
                let proj = inner_with_basis(&p[mu], &gram, y).div(&norms[mu]);
                for (vi, pi) in v.iter_mut().zip(&p[mu]) {
                    if !pi.is_zero() {
                        *vi = vi.sub(&proj.mul(pi));
                    }
                }
            }
            norms[y] = inner(&v, &v, &gram);
            p[y] = v;
        }
        Ok(MacdonaldBasis { transition, gram, p })
    }

    pub fn parts(&self) -> &[Partition] {
        &self.transition.parts
    }

    pub fn polynomial(&self, y: &Partition) -> SymmetricPoly {
        let i = self.transition.index(y);
        SymmetricPoly {
            nx: usize::MAX,
            coeffs: self
                .parts()
                .iter()
                .zip(&self.p[i])
                .filter(|(_, c)| !c.is_zero())
                .map(|(mu, c)| (mu.clone(), c.clone()))
                .collect(),
        }
    }

    /// `<f, g>` for coefficient vectors in the monomial basis.
    pub fn inner(&self, f: &[RatFunc], g: &[RatFunc]) -> RatFunc {
        inner(f, g, &self.gram)
    }
}

/// `<f, m_j>`.
fn inner_with_basis(f: &[RatFunc], gram: &[Vec<RatFunc>], j: usize) -> RatFunc {
    let mut total = RatFunc::zero();
    for (i, c) in f.iter().enumerate() {
        if !c.is_zero() {
            total = total.add(&c.mul(&gram[i][j]));
        }
    }
    total
}

fn inner(f: &[RatFunc], g: &[RatFunc], gram: &[Vec<RatFunc>]) -> RatFunc {
    let mut total = RatFunc::zero();
    for (j, c) in g.iter().enumerate() {
        if !c.is_zero() {
            total = total.add(&c.mul(&inner_with_basis(f, gram, j)));
        }
    }
    total
}

/// `P_Y` restricted to `nx` variables.
pub fn macdonald_p(y: &Partition, nx: usize) -> Result<SymmetricPoly, OracleError> {
    if nx < y.len() || nx > MAX_VARS {
        return Err(OracleError::Usage(format!("need {} <= nx <= {MAX_VARS} for {y}, got nx = {nx}", y.len())));
    }
    Ok(MacdonaldBasis::new(y.size())?.polynomial(y).truncated(nx))
}
