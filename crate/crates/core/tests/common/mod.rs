//! Reference generating functions, shared by test targets.
#![allow(dead_code)]

use torus_super::{LaurentPolynomial, Monomial, Rational, VarAlphabet};

/// Numerator terms `(z, a, q, t)` with coefficient 1.
pub fn numerator(terms: &[(u32, i32, i32, i32)]) -> Vec<(u32, LaurentPolynomial)> {
    let knot = VarAlphabet::knot();
    let max_z = terms.iter().map(|x| x.0).max().unwrap();
    (0..=max_z)
        .map(|j| {
            let p = LaurentPolynomial::from_terms(
                &knot,
                terms.iter().filter(|x| x.0 == j).map(|&(_, a, q, t)| (Monomial::new(&[a, q, t]), Rational::from(1))),
            );
            (j, p)
        })
        .filter(|(_, p)| !p.is_zero())
        .collect()
}

pub fn poles(ps: &[(i32, i32, i32)]) -> Vec<Monomial> {
    let mut v: Vec<_> = ps.iter().map(|&(a, q, t)| Monomial::new(&[a, q, t])).collect();
    v.sort();
    v
}

pub const F21_POLES: &[(i32, i32, i32)] = &[(0, 0, 0), (0, 4, 2)];
pub const F21_NUMERATOR: &[(u32, i32, i32, i32)] = &[(0, 0, 0, 0), (1, 2, 2, 3)];

pub const F3_POLES: &[(i32, i32, i32)] = &[(0, 0, 0), (0, 6, 4), (0, 12, 6)];
pub const F31_NUMERATOR: &[(u32, i32, i32, i32)] = &[
    (0, 0, 0, 0),
    (1, 0, 4, 2),
    (1, 0, 8, 4),
    (1, 2, 2, 3),
    (1, 2, 4, 5),
    (1, 2, 6, 5),
    (1, 2, 8, 7),
    (1, 2, 10, 7),
    (2, 2, 12, 9),
    (1, 4, 6, 8),
    (2, 4, 10, 10),
    (2, 4, 14, 12),
];
pub const F32_NUMERATOR: &[(u32, i32, i32, i32)] = &[
    (0, 0, 0, 0),
    (0, 0, 4, 2),
    (1, 0, 8, 4),
    (0, 2, 2, 3),
    (1, 2, 4, 5),
    (1, 2, 6, 5),
    (1, 2, 8, 7),
    (1, 2, 10, 7),
    (1, 2, 12, 9),
    (1, 4, 6, 8),
    (1, 4, 10, 10),
    (2, 4, 14, 12),
];

pub const F41_POLES: &[(i32, i32, i32)] = &[(0, 0, 0), (0, 8, 6), (0, 12, 8), (0, 16, 10), (0, 24, 12)];
