use torus_super::oracle::{
    compare_power_sum_expansion, macdonald_p, run_all, verify_cauchy, verify_dimension, verify_orthogonality,
    verify_schur_dimension, verify_schur_limit, RatFunc,
};
use torus_super::partitions::{enumerate, Partition};

fn p(rows: &[usize]) -> Partition {
    Partition::new(rows.to_vec()).unwrap()
}

#[test]
fn orthogonal_up_to_four() {
    for n in 1..=4 {
        assert!(verify_orthogonality(n).unwrap(), "n = {n}");
    }
}

#[test]
fn expansion_coefficients_up_to_four() {
    for n in 1..=4 {
        for (y, ok) in compare_power_sum_expansion(n).unwrap() {
            assert!(ok, "C_{y}");
        }
    }
}

#[test]
fn dimensions_up_to_four() {
    for n in 1..=4 {
        for y in enumerate(n) {
            for big_n in 3..=5 {
                assert!(verify_dimension(&y, big_n).unwrap(), "{y} at N = {big_n}");
            }
        }
    }
}

#[test]
fn cauchy_to_third_order() {
    for d in 1..=3 {
        assert!(verify_cauchy(d, d, d).unwrap(), "d = {d}");
    }
    assert!(verify_cauchy(2, 3, 2).unwrap());
}

#[test]
fn schur_degeneration() {
    for n in 1..=3 {
        for y in enumerate(n) {
            assert!(verify_schur_limit(&y, n).unwrap(), "{y}");
        }
    }
    for n in 1..=4 {
        for y in enumerate(n) {
            for big_n in 1..=4 {
                assert!(verify_schur_dimension(&y, big_n).unwrap(), "{y} at N = {big_n}");
            }
        }
    }
}

#[test]
fn single_row_and_column() {
    assert_eq!(macdonald_p(&p(&[1]), 1).unwrap().coeff(&p(&[1])), RatFunc::one());
    let col = macdonald_p(&p(&[1, 1, 1]), 3).unwrap();
    assert_eq!(col.coeffs.len(), 1);
}

#[test]
fn every_suite_passes_at_size_four() {
    let checks = run_all(4).unwrap();
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| c.to_string()).collect();
    assert!(failed.is_empty(), "{failed:#?}");
    assert!(run_all(6).is_err());
}
