//! Closed-form Macdonald ingredients over the alphabet `(q, t, A)`, where
//! `A` stands for `t^N`.
//!
//! Every quantity except `gamma` is a [`FactoredRational`]: a monomial times
//! a product of binomials. Exponents of the form `(...)/2` are checked to be
//! integral before they are used.

use crate::algebra::{FactoredRational, LaurentPolynomial, Monomial, VarAlphabet};
use crate::partitions::Partition;

const Q: usize = 0;
const T: usize = 1;
const A: usize = 2;

fn mono(q: i32, t: i32, a: i32) -> Monomial {
    Monomial::new(&[q, t, a])
}

fn halve(x: usize, what: &str) -> i32 {
    assert!(x % 2 == 0, "{what} must be even, got {x}");
    (x / 2) as i32
}

/// Cell monomial `t^i / q^j`.
pub fn cell_monomial(i: usize, j: usize) -> Monomial {
    mono(-(j as i32), i as i32, 0)
}

/// `(sum_j Y~_j^2 - |Y|) / 2`, shared by the dimension and the expansion
/// coefficient.
fn dimension_t_exponent(y: &Partition) -> i32 {
    let tr = y.transpose();
    halve(tr.sum_squares() - y.size(), "sum of squared columns minus size")
}

/// Framing factor `T_Y = prod_{(i,j) in Y} t^i / q^j` as a cell product.
pub fn framing(y: &Partition) -> Monomial {
    let m = y.cells().fold(mono(0, 0, 0), |acc, (i, j)| acc.mul(&cell_monomial(i, j)));
    debug_assert_eq!(m, framing_closed_form(y));
    m
}

/// `t^{(|Y| + sum Y~^2)/2} q^{-(|Y| + sum Y^2)/2}`.
pub fn framing_closed_form(y: &Partition) -> Monomial {
    let n = y.size();
    let te = halve(n + y.transpose().sum_squares(), "framing t-exponent numerator");
    let qe = halve(n + y.sum_squares(), "framing q-exponent numerator");
    mono(-qe, te, 0)
}

/// `e_r` of the cell monomials `{t^i / q^j}`. Zero when `r > |Y|`.
pub fn gamma(y: &Partition, r: usize) -> LaurentPolynomial {
    gamma_all(y).into_iter().nth(r).unwrap_or_else(|| LaurentPolynomial::zero(&VarAlphabet::macd()))
}

/// `[e_0, e_1, ..., e_|Y|]` of the cell monomials.
pub fn gamma_all(y: &Partition) -> Vec<LaurentPolynomial> {
    let al = VarAlphabet::macd();
    let mut e = vec![LaurentPolynomial::one(&al)];
    for (i, j) in y.cells() {
        let x = cell_monomial(i, j);
        e.push(LaurentPolynomial::zero(&al));
        for k in (1..e.len()).rev() {
            let add = e[k - 1].mul_monomial(&x);
            e[k] = &e[k] + &add;
        }
    }
    e
}

/// Macdonald dimension `M_Y(1, t, ..., t^{N-1})` with `t^N = A`:
///
/// `t^{(sum Y~^2 - |Y|)/2} prod_cells (1 - A t^{1-i} q^{j-1}) / (1 - t^{leg+1} q^{arm})`.
pub fn dimension(y: &Partition) -> FactoredRational {
    let al = VarAlphabet::macd();
    let mut r = FactoredRational::monomial(&al, mono(0, dimension_t_exponent(y), 0));
    for c in y.cell_stats() {
        let (i, j) = (c.row as i32, c.col as i32);
        r = r
            .with_factor(mono(j - 1, 1 - i, 1), 1)
            .and_then(|r| r.with_factor(mono(c.arm as i32, c.leg as i32 + 1, 0), -1))
            .expect("cell binomials are never trivial");
    }
    r
}

/// Numerator cell monomial as written in the product formula,
/// `(t/q) t^{N-i} q^j`, with `t^N = A`.
pub fn dimension_numerator_monomial_unsimplified(i: usize, j: usize) -> Monomial {
    let t_over_q = mono(-1, 1, 0);
    let t_n = mono(0, 0, 1);
    t_over_q.mul(&t_n).mul(&mono(j as i32, -(i as i32), 0))
}

/// Cauchy norm `m_Y = prod_cells (1 - t^{leg+1} q^{arm}) / (1 - t^{leg} q^{arm+1})`.
pub fn cauchy_norm(y: &Partition) -> FactoredRational {
    let al = VarAlphabet::macd();
    let mut r = FactoredRational::one(&al);
    for c in y.cell_stats() {
        let (arm, leg) = (c.arm as i32, c.leg as i32);
        r = r
            .with_factor(mono(arm, leg + 1, 0), 1)
            .and_then(|r| r.with_factor(mono(arm + 1, leg, 0), -1))
            .expect("cell binomials are never trivial");
    }
    r
}

/// Coefficient `C_Y` of `P_Y` in the power sum `p_{|Y|}`:
///
/// `(1 - q^n) t^{(sum Y~^2 - |Y|)/2} prod_{cells != (1,1)} (1 - t^{1-i} q^{j-1}) / prod_cells (1 - t^{leg} q^{arm+1})`.
pub fn expansion_coefficient(y: &Partition) -> FactoredRational {
    let al = VarAlphabet::macd();
    let n = y.size() as i32;
    let mut r = FactoredRational::monomial(&al, mono(0, dimension_t_exponent(y), 0));
    if n > 0 {
        r = r.with_factor(mono(n, 0, 0), 1).expect("n > 0");
    }
    for c in y.cell_stats() {
        let (i, j) = (c.row as i32, c.col as i32);
        if (i, j) != (1, 1) {
            r = r.with_factor(mono(j - 1, 1 - i, 0), 1).expect("cell other than (1,1)");
        }
        r = r.with_factor(mono(c.arm as i32 + 1, c.leg as i32, 0), -1).expect("arm + 1 > 0");
    }
    r
}

/// `dim(Y) / dim([1])`.
pub fn normalized_dimension(y: &Partition) -> FactoredRational {
    dimension(y).div(&dimension(&Partition::new(vec![1]).expect("valid")))
}

/// Exponent index helpers for callers that inspect MACD monomials.
pub fn macd_exponents(m: &Monomial) -> (i32, i32, i32) {
    (m.exp(Q), m.exp(T), m.exp(A))
}

/// Evaluates `FactoredRational` numerator / denominator at `A` replaced by
/// `t^n_vars`, returning polynomials in `(q, t, A)` with no `A` left.
pub fn specialize_a(r: &FactoredRational, n_vars: i32) -> (LaurentPolynomial, LaurentPolynomial) {
    let al = VarAlphabet::macd();
    let (num, den) = r.expand();
    let sub = |p: &LaurentPolynomial| {
        p.map_terms(&al, |m, c| (mono(m.exp(Q), m.exp(T) + n_vars * m.exp(A), 0), c.clone()))
    };
    (sub(&num), sub(&den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use crate::partitions::enumerate;
    use num_traits::One;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn poly(terms: &[((i32, i32, i32), i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            &VarAlphabet::macd(),
            terms.iter().map(|&((q, t, a), c)| (mono(q, t, a), Rational::from(c))),
        )
    }

    /// `num1/den1 == num2/den2` by cross multiplication.
    fn same_fraction(a: &(LaurentPolynomial, LaurentPolynomial), b: &(LaurentPolynomial, LaurentPolynomial)) -> bool {
        &a.0 * &b.1 == &b.0 * &a.1
    }

    #[test]
    fn framing_examples() {
        assert_eq!(framing(&p(&[1])), mono(-1, 1, 0));
        assert_eq!(framing(&p(&[2])), mono(-3, 2, 0));
        assert_eq!(framing(&p(&[1, 1])), mono(-2, 3, 0));
    }

    #[test]
    fn framing_closed_form_matches_cells() {
        for n in 0..=8 {
            for y in enumerate(n) {
                let cells = y.cells().fold(mono(0, 0, 0), |acc, (i, j)| acc.mul(&cell_monomial(i, j)));
                assert_eq!(cells, framing_closed_form(&y), "{y}");
            }
        }
    }

    #[test]
    fn gamma_examples() {
        for n in 0..=6 {
            for y in enumerate(n) {
                assert!(gamma(&y, 0).is_one());
                assert_eq!(gamma(&y, n), LaurentPolynomial::monomial(&VarAlphabet::macd(), framing(&y)));
                assert!(gamma(&y, n + 1).is_zero());
            }
        }
        assert_eq!(gamma(&p(&[2]), 1), poly(&[((-1, 1, 0), 1), ((-2, 1, 0), 1)]));
    }

    #[test]
    fn gamma_generating_identity() {
        // sum_r e_r z^r == prod (1 + z x_cell); z is carried as the A slot.
        for n in 0..=6 {
            for y in enumerate(n) {
                let lhs = gamma_all(&y)
                    .iter()
                    .enumerate()
                    .fold(poly(&[]), |acc, (r, e)| &acc + &e.mul_monomial(&mono(0, 0, r as i32)));
                let rhs = y.cells().fold(poly(&[((0, 0, 0), 1)]), |acc, (i, j)| {
                    let f = LaurentPolynomial::from_terms(
                        &VarAlphabet::macd(),
                        [(mono(0, 0, 0), Rational::one()), (cell_monomial(i, j).mul(&mono(0, 0, 1)), Rational::one())],
                    );
                    &acc * &f
                });
                assert_eq!(lhs, rhs, "{y}");
            }
        }
    }

    #[test]
    fn dimension_examples() {
        let d1 = dimension(&p(&[1])).expand();
        assert_eq!(d1, (poly(&[((0, 0, 0), 1), ((0, 0, 1), -1)]), poly(&[((0, 0, 0), 1), ((0, 1, 0), -1)])));

        let d2 = dimension(&p(&[2])).expand();
        let expect2 = (
            &poly(&[((0, 0, 0), 1), ((0, 0, 1), -1)]) * &poly(&[((0, 0, 0), 1), ((1, 0, 1), -1)]),
            &poly(&[((0, 0, 0), 1), ((0, 1, 0), -1)]) * &poly(&[((0, 0, 0), 1), ((1, 1, 0), -1)]),
        );
        assert!(same_fraction(&d2, &expect2));

        let d11 = dimension(&p(&[1, 1])).expand();
        let expect11 = (
            &poly(&[((0, 0, 0), 1), ((0, 0, 1), -1)]) * &poly(&[((0, 1, 0), 1), ((0, 0, 1), -1)]),
            &poly(&[((0, 0, 0), 1), ((0, 1, 0), -1)]) * &poly(&[((0, 0, 0), 1), ((0, 2, 0), -1)]),
        );
        assert!(same_fraction(&d11, &expect11));
    }

    #[test]
    fn unsimplified_numerator_form_agrees() {
        for n in 1..=6 {
            for y in enumerate(n) {
                for (i, j) in y.cells() {
                    assert_eq!(
                        dimension_numerator_monomial_unsimplified(i, j),
                        mono(j as i32 - 1, 1 - i as i32, 1)
                    );
                }
            }
        }
    }

    #[test]
    fn cauchy_norm_examples() {
        let m1 = cauchy_norm(&p(&[1])).expand();
        assert_eq!(m1, (poly(&[((0, 0, 0), 1), ((0, 1, 0), -1)]), poly(&[((0, 0, 0), 1), ((1, 0, 0), -1)])));
        let m2 = cauchy_norm(&p(&[2])).expand();
        let expect = (
            &poly(&[((0, 0, 0), 1), ((0, 1, 0), -1)]) * &poly(&[((0, 0, 0), 1), ((1, 1, 0), -1)]),
            &poly(&[((0, 0, 0), 1), ((1, 0, 0), -1)]) * &poly(&[((0, 0, 0), 1), ((2, 0, 0), -1)]),
        );
        assert!(same_fraction(&m2, &expect));
    }

    #[test]
    fn expansion_coefficient_examples() {
        for n in 1..=6 {
            let (num, den) = expansion_coefficient(&p(&[n])).expand();
            assert_eq!(num, den, "C_[{n}] should be 1");
        }
        let c11 = expansion_coefficient(&p(&[1, 1])).expand();
        let expect = (
            &poly(&[((0, 0, 0), -1), ((1, 0, 0), -1)]) * &poly(&[((0, 0, 0), 1), ((0, 1, 0), -1)]),
            poly(&[((0, 0, 0), 1), ((1, 1, 0), -1)]),
        );
        assert!(same_fraction(&c11, &expect));
    }

    #[test]
    fn normalized_dimension_of_single_box_is_one() {
        let r = normalized_dimension(&p(&[1]));
        assert_eq!(r.expand().0, poly(&[((0, 0, 0), 1)]));
        assert_eq!(r.factors().count(), 0);
    }
}
