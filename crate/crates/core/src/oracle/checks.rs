use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{FactoredRational, LaurentPolynomial, Monomial, Rational, VarAlphabet};
use crate::macdonald;
use crate::partitions::{self, Partition};

use super::ratfunc::{from_macd, qt, RatFunc};
use super::symmetric::{explicit_coefficient, power_sum_norm, x_alphabet, MacdonaldBasis, MAX_VARS};
use super::OracleError;

/// `P_Y(1, t, ..., t^{N-1})` from the brute-force polynomial against the
/// closed-form dimension at `A = t^N`.
pub fn verify_dimension(y: &Partition, n_concrete: usize) -> Result<bool, OracleError> {
    if n_concrete == 0 || n_concrete > MAX_VARS {
        return Err(OracleError::Usage(format!("N must be in 1..={MAX_VARS}, got {n_concrete}")));
    }
    let basis = MacdonaldBasis::new(y.size())?;
    let t = qt().var("t");
    let point: Vec<Monomial> = (0..n_concrete as i32).map(|i| t.pow(i)).collect();
    let brute = basis.polynomial(y).evaluate(&point);
    let (num, den) = macdonald::specialize_a(&macdonald::dimension(y), n_concrete as i32);
    Ok(brute == RatFunc::new(from_macd(&num), from_macd(&den)))
}

fn coefficients(basis: &MacdonaldBasis, n: usize) -> BTreeMap<Partition, RatFunc> {
    let parts = basis.parts();
    let target = &basis.transition.l[basis.transition.index(&Partition::new(vec![n]).expect("valid"))];
    let mut c: Vec<RatFunc> = Vec::with_capacity(parts.len());
    for i in 0..parts.len() {
        let mut ci = RatFunc::constant(target[i].clone());
        for (j, cj) in c.iter().enumerate() {
            ci = ci.sub(&cj.mul(&basis.p[j][i]));
        }
        c.push(ci);
    }
    parts.iter().cloned().zip(c).collect()
}

/// Solves `p_n = sum_Y C_Y P_Y` by a triangular solve in the monomial basis.
pub fn verify_power_sum_expansion(n: usize) -> Result<BTreeMap<Partition, RatFunc>, OracleError> {
    if n == 0 {
        return Err(OracleError::Usage("power sum degree must be positive".into()));
    }
    Ok(coefficients(&MacdonaldBasis::new(n)?, n))
}

/// Brute-force `C_Y` against the closed form, per partition.
pub fn compare_power_sum_expansion(n: usize) -> Result<Vec<(Partition, bool)>, OracleError> {
    Ok(verify_power_sum_expansion(n)?
        .into_iter()
        .map(|(y, c)| {
            let closed = RatFunc::from_factored(&macdonald::expansion_coefficient(&y));
            (y, c == closed)
        })
        .collect())
}

/// `C_Y = (1 - q^n) m_Y [dim(Y) / (1 - A)]_{A = 1}`.
fn limit_step(y: &Partition) -> Result<RatFunc, OracleError> {
    let macd = VarAlphabet::macd();
    let a = Monomial::new(&[0, 0, 1]);
    let reduced = macdonald::dimension(y).mul(&FactoredRational::binomial(&macd, a, -1)?);
    let (num, den) = reduced.expand();
    let at_one = |p: &LaurentPolynomial| p.map_terms(&macd, |m, c| (Monomial::new(&[m.exp(0), m.exp(1), 0]), c.clone()));
    let ratio = RatFunc::new(from_macd(&at_one(&num)), from_macd(&at_one(&den)));
    Ok(RatFunc::binomial(y.size() as i32, 0).mul(&RatFunc::from_factored(&macdonald::cauchy_norm(y))).mul(&ratio))
}

/// Degree-by-degree Cauchy identity up to degree `d`, with the closed-form
/// norms `m_Y`, on monomials `m_lambda(x) m_mu(y)` in `nx` and `ly`
/// variables. Also replays the limit that produces `C_Y`, and the identity
/// with `y` principally specialized to `ly` points.
pub fn verify_cauchy(d: usize, nx: usize, ly: usize) -> Result<bool, OracleError> {
    if nx < d || ly < d || nx > MAX_VARS || ly > MAX_VARS {
        return Err(OracleError::Usage(format!("need d <= nx, ly <= {MAX_VARS}, got d={d}, nx={nx}, ly={ly}")));
    }
    for n in 1..=d {
        let basis = MacdonaldBasis::new(n)?;
        let parts = basis.parts();
        let norms: Vec<RatFunc> = parts.iter().map(|y| RatFunc::from_factored(&macdonald::cauchy_norm(y))).collect();
        let kernel: Vec<RatFunc> = parts.iter().map(|rho| power_sum_norm(rho).recip()).collect();
        let l = &basis.transition.l;

        for (i, lambda) in parts.iter().enumerate() {
            for (j, mu) in parts.iter().enumerate() {
                if lambda.len() > nx || mu.len() > ly || j < i {
                    continue;
                }
                let mut lhs = RatFunc::zero();
                for (y, norm) in norms.iter().enumerate() {
                    lhs = lhs.add(&norm.mul(&basis.p[y][i]).mul(&basis.p[y][j]));
                }
                let mut rhs = RatFunc::zero();
                for (r, w) in kernel.iter().enumerate() {
                    let c = &l[r][i] * &l[r][j];
                    if !c.is_zero() {
                        rhs = rhs.add(&w.scale(&c));
                    }
                }
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }

        for y in parts {
            if limit_step(y)? != RatFunc::from_factored(&macdonald::expansion_coefficient(y)) {
                return Ok(false);
            }
        }

        let dims: Vec<RatFunc> = parts
            .iter()
            .map(|y| {
                let (num, den) = macdonald::specialize_a(&macdonald::dimension(y), ly as i32);
                RatFunc::new(from_macd(&num), from_macd(&den))
            })
            .collect();
        for (i, lambda) in parts.iter().enumerate() {
            if lambda.len() > nx {
                continue;
            }
            let mut lhs = RatFunc::zero();
            for y in 0..parts.len() {
                lhs = lhs.add(&norms[y].mul(&dims[y]).mul(&basis.p[y][i]));
            }
            let mut rhs = RatFunc::zero();
            for (r, rho) in parts.iter().enumerate() {
                if l[r][i].is_zero() {
                    continue;
                }
                let mut w = RatFunc::constant(Rational::new(1, super::symmetric::z(rho)));
                for &part in rho.rows() {
                    let k = part as i32;
                    w = w.mul(&RatFunc::binomial(0, k * ly as i32)).mul(&RatFunc::inv_binomial(k, 0));
                }
                rhs = rhs.add(&w.scale(&l[r][i]));
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `<P_Y, P_mu> = 0` for distinct partitions of `n`.
pub fn verify_orthogonality(n: usize) -> Result<bool, OracleError> {
    let basis = MacdonaldBasis::new(n)?;
    let size = basis.parts().len();
    for i in 0..size {
        for j in (i + 1)..size {
            if !basis.inner(&basis.p[i], &basis.p[j]).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Complete homogeneous `h_k(x_1, ..., x_nx)`.
fn complete(k: usize, nx: usize) -> LaurentPolynomial {
    let al = x_alphabet(nx);
    let mut h: Vec<LaurentPolynomial> = (0..=k).map(|j| if j == 0 { LaurentPolynomial::one(&al) } else { LaurentPolynomial::zero(&al) }).collect();
    for v in 0..nx {
        let mut e = vec![0; nx];
        e[v] = 1;
        let x = Monomial::new(&e);
        for j in 1..=k {
            let carry = h[j - 1].mul_monomial(&x);
            h[j] = &h[j] + &carry;
        }
    }
    h.pop().expect("k + 1 entries")
}

fn determinant(m: &[Vec<LaurentPolynomial>], al: &VarAlphabet) -> LaurentPolynomial {
    if m.is_empty() {
        return LaurentPolynomial::one(al);
    }
    let mut total = LaurentPolynomial::zero(al);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPolynomial>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, e)| e.clone()).collect()).collect();
        let term = entry * &determinant(&minor, al);
        total = if j % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

/// Schur polynomial by Jacobi-Trudi, `det h_{Y_i - i + j}`.
pub fn schur_explicit(y: &Partition, nx: usize) -> LaurentPolynomial {
    let al = x_alphabet(nx);
    let l = y.len();
    let m: Vec<Vec<LaurentPolynomial>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| {
                    let k = y.row(i) as i64 - i as i64 + j as i64;
                    if k < 0 {
                        LaurentPolynomial::zero(&al)
                    } else {
                        complete(k as usize, nx)
                    }
                })
                .collect()
        })
        .collect();
    determinant(&m, &al)
}

/// `P_Y` at `q = t` against the Jacobi-Trudi Schur polynomial in `nx`
/// variables.
pub fn verify_schur_limit(y: &Partition, nx: usize) -> Result<bool, OracleError> {
    if nx < y.len() || nx > MAX_VARS {
        return Err(OracleError::Usage(format!("need {} <= nx <= {MAX_VARS}, got {nx}", y.len())));
    }
    let p = MacdonaldBasis::new(y.size())?.polynomial(y);
    let s = schur_explicit(y, nx);
    for mu in partitions::enumerate(y.size()) {
        if mu.len() > nx {
            continue;
        }
        let expected = explicit_coefficient(&s, &mu);
        let Some(at_diag) = p.coeff(&mu).at_q_equals_t() else {
            return Ok(false);
        };
        if at_diag.as_constant() != Some(expected) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Closed-form dimension at `q = t`, `A = t^N` against the Jacobi-Trudi
/// Schur polynomial at `x_i = t^{i-1}`, `i = 1..=N`.
pub fn verify_schur_dimension(y: &Partition, n_concrete: usize) -> Result<bool, OracleError> {
    if n_concrete == 0 || n_concrete > MAX_VARS {
        return Err(OracleError::Usage(format!("N must be in 1..={MAX_VARS}, got {n_concrete}")));
    }
    let s = schur_explicit(y, n_concrete);
    let al = qt();
    let principal = s.map_terms(&al, |m, c| {
        let t_exp: i32 = m.exps().iter().enumerate().map(|(i, e)| i as i32 * e).sum();
        (Monomial::new(&[0, t_exp]), c.clone())
    });
    let (num, den) = macdonald::specialize_a(&macdonald::dimension(y), n_concrete as i32);
    let closed = RatFunc::new(from_macd(&num), from_macd(&den)).at_q_equals_t();
    Ok(closed == Some(RatFunc::from_poly(principal)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn dimension_examples() {
        assert!(verify_dimension(&p(&[1]), 3).unwrap());
        assert!(verify_dimension(&p(&[2]), 3).unwrap());
        assert!(verify_dimension(&p(&[2, 1]), 4).unwrap());
        assert!(verify_dimension(&p(&[1, 1, 1]), 2).unwrap());
    }

    #[test]
    fn power_sum_in_degree_two() {
        let c = verify_power_sum_expansion(2).unwrap();
        assert_eq!(c[&p(&[2])], RatFunc::one());
        // -(1+q)(1-t)/(1-qt)
        let expected = RatFunc::binomial(2, 0).mul(&RatFunc::binomial(0, 1)).div(&RatFunc::binomial(1, 0)).div(&RatFunc::binomial(1, 1)).neg();
        assert_eq!(c[&p(&[1, 1])], expected);
        assert_eq!(verify_power_sum_expansion(1).unwrap()[&p(&[1])], RatFunc::one());
    }

    #[test]
    fn cauchy_low_degree() {
        assert!(verify_cauchy(1, 1, 1).unwrap());
        assert!(verify_cauchy(2, 2, 2).unwrap());
        assert!(verify_cauchy(2, 2, 3).is_ok());
        assert!(verify_cauchy(3, 2, 2).is_err());
    }

    #[test]
    fn schur_examples() {
        assert!(verify_schur_limit(&p(&[2, 1]), 3).unwrap());
        assert!(verify_schur_limit(&p(&[2]), 2).unwrap());
        // s_21 in three variables has m_111 coefficient 2
        assert_eq!(explicit_coefficient(&schur_explicit(&p(&[2, 1]), 3), &p(&[1, 1, 1])), Rational::from(2));
        for n in 1..=4 {
            assert!(verify_schur_dimension(&p(&[2, 1]), n).unwrap());
            assert!(verify_schur_dimension(&p(&[1, 1, 1]), n).unwrap());
        }
    }
}
