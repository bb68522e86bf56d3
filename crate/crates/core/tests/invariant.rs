use torus_super::invariant::{corpus, specialize, InvariantError, Specialization};
use torus_super::{compute, KnotRequest, LaurentPolynomial, Monomial, Rational, VarAlphabet};

fn q_alphabet() -> VarAlphabet {
    VarAlphabet::new(&["q"]).unwrap()
}

fn q_poly(terms: &[(i32, i64)]) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(&q_alphabet(), terms.iter().map(|&(e, c)| (Monomial::new(&[e]), Rational::from(c))))
}

/// Divides out the monomial content and fixes the sign so the constant term is `+1`.
fn normalize(p: &LaurentPolynomial) -> LaurentPolynomial {
    let p = p.div_monomial(&p.monomial_content().unwrap());
    let c = p.constant_term();
    p.scale(&(Rational::from(1) / c))
}

/// `(x^{nm} - 1)(x - 1) / ((x^n - 1)(x^m - 1))` at `x = q^2`.
fn alexander_closed_form(n: u32, m: u32) -> LaurentPolynomial {
    let x = |e: u32| q_poly(&[(2 * e as i32, 1), (0, -1)]);
    let num = &x(n * m) * &x(1);
    let den = &x(n) * &x(m);
    normalize(&num.exact_divide(&den).unwrap())
}

/// `s^{(n-1)(m-1)/2} (1 - s^{n+1} - s^{m+1} + s^{n+m}) / (1 - s^2)` at `s = q^2`.
fn jones_closed_form(n: u32, m: u32) -> LaurentPolynomial {
    let (n, m) = (n as i32, m as i32);
    let num = q_poly(&[(0, 1), (2 * (n + 1), -1), (2 * (m + 1), -1), (2 * (n + m), 1)]);
    let den = q_poly(&[(0, 1), (4, -1)]);
    normalize(&num.exact_divide(&den).unwrap())
}

#[test]
fn trefoil_chain() {
    let p = compute(&KnotRequest::new(2, 3).unwrap()).unwrap();
    let knot = VarAlphabet::knot();
    let expected = LaurentPolynomial::from_terms(
        &knot,
        [([0, 0, 0], 1), ([0, 4, 2], 1), ([2, 2, 3], 1)].map(|(e, c)| (Monomial::new(&e), Rational::from(c))),
    );
    assert_eq!(p.terms, expected);
    assert!(p.flags.all());

    let aq = VarAlphabet::new(&["a", "q"]).unwrap();
    let homfly = LaurentPolynomial::from_terms(
        &aq,
        [([0, 0], 1), ([0, 4], 1), ([2, 2], -1)].map(|(e, c)| (Monomial::new(&e), Rational::from(c))),
    );
    assert_eq!(specialize(&p, Specialization::Homfly).unwrap(), homfly);
    assert_eq!(specialize(&p, Specialization::Jones).unwrap(), q_poly(&[(0, 1), (4, 1), (6, -1)]));
    assert_eq!(specialize(&p, Specialization::Alexander).unwrap(), q_poly(&[(0, 1), (2, -1), (4, 1)]));
}

#[test]
fn unknot_cases() {
    for m in 1..=6 {
        let p = compute(&KnotRequest::new(1, m).unwrap()).unwrap();
        assert!(p.terms.is_one(), "(1,{m}) gave {}", p.terms);
    }
}

#[test]
fn shared_factors_are_rejected() {
    for (n, m, g) in [(2, 2, 2), (2, 4, 2), (3, 6, 3), (4, 6, 2), (6, 9, 3)] {
        match compute(&KnotRequest::new(n, m).unwrap()) {
            Err(InvariantError::NonPolynomial { gcd, .. }) => assert_eq!(gcd, g),
            other => panic!("({n},{m}) gave {other:?}"),
        }
    }
    assert!(matches!(KnotRequest::new(0, 3), Err(InvariantError::Usage(_))));
}

#[test]
fn coprime_pairs_are_positive_integral_polynomials() {
    for n in 2..=5u32 {
        for m in (n + 1)..=11 {
            let req = KnotRequest::new(n, m).unwrap();
            if req.gcd() != 1 {
                continue;
            }
            let p = compute(&req).unwrap();
            assert!(p.flags.all(), "({n},{m}) flags {:?}", p.flags);
        }
    }
}

/// Reports how the `t = -1` reductions compare with the classical torus knot
/// Alexander and Jones polynomials. Only the trefoil is asserted.
#[test]
fn classical_reductions_report() {
    let mut agree = 0;
    let mut total = 0;
    for entry in corpus() {
        let p = compute(&KnotRequest::new(entry.n, entry.m).unwrap()).unwrap();
        let alex = specialize(&p, Specialization::Alexander).unwrap();
        let jones = specialize(&p, Specialization::Jones).unwrap();
        let alex_ok = normalize(&alex) == alexander_closed_form(entry.n, entry.m);
        let jones_ok = normalize(&jones) == jones_closed_form(entry.n, entry.m);
        eprintln!("({},{}) alexander {alex_ok} jones {jones_ok}", entry.n, entry.m);
        total += 1;
        if alex_ok && jones_ok {
            agree += 1;
        }
        if (entry.n, entry.m) == (2, 3) {
            assert!(alex_ok && jones_ok);
        }
    }
    eprintln!("classical reductions agree on {agree}/{total} corpus pairs");
}

/// Reports whether swapping the winding numbers changes the result.
#[test]
fn winding_swap_report() {
    for (n, m) in [(2, 3), (2, 5), (3, 4), (3, 5), (2, 7), (4, 5)] {
        let fwd = compute(&KnotRequest::new(n, m).unwrap());
        let rev = compute(&KnotRequest::new(m, n).unwrap());
        let outcome = match (&fwd, &rev) {
            (Ok(a), Ok(b)) if a.terms == b.terms => "equal".to_string(),
            (Ok(a), Ok(b)) => format!("differ ({} vs {} terms)", a.terms.len(), b.terms.len()),
            (Ok(_), Err(e)) => format!("swapped order fails: {e}"),
            (Err(e), _) => format!("forward fails: {e}"),
        };
        eprintln!("({n},{m}) vs ({m},{n}): {outcome}");
    }
}
