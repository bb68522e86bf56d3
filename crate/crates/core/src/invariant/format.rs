use std::collections::BTreeMap;
use std::fmt::Write;

use crate::algebra::{LaurentPolynomial, Monomial, Rational, VarAlphabet};

/// Terms grouped by `a`-degree: `(a_exp, coefficient polynomial in (q, t))`.
fn by_a_degree(p: &LaurentPolynomial) -> BTreeMap<i32, Vec<(Monomial, Rational)>> {
    let mut blocks: BTreeMap<i32, Vec<(Monomial, Rational)>> = BTreeMap::new();
    for (m, c) in p.terms() {
        blocks.entry(m.exp(0)).or_default().push((Monomial::new(&[0, m.exp(1), m.exp(2)]), c.clone()));
    }
    blocks
}

fn plain_block(terms: &[(Monomial, Rational)]) -> String {
    let qt = LaurentPolynomial::from_terms(&VarAlphabet::knot(), terms.iter().cloned());
    qt.to_string()
}

/// One line per `a`-degree, e.g. `a^2: q^2*t^3`.
pub fn grouped(p: &LaurentPolynomial) -> String {
    let mut out = String::new();
    for (a, terms) in by_a_degree(p) {
        let _ = writeln!(out, "a^{a}: {}", plain_block(&terms));
    }
    out
}

fn latex_power(var: &str, e: i32) -> String {
    match e {
        0 => String::new(),
        1 => format!("\\textbf{{{var}}}"),
        e if (0..10).contains(&e) => format!("\\textbf{{{var}}}^{e}"),
        e => format!("\\textbf{{{var}}}^{{{e}}}"),
    }
}

fn latex_block(terms: &[(Monomial, Rational)]) -> String {
    let mut out = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = if neg { -c } else { c.clone() };
        if neg {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let body = [latex_power("q", m.exp(1)), latex_power("t", m.exp(2))]
            .into_iter()
            .filter(|s| !s.is_empty())
            .collect::<Vec<_>>()
            .join(" ");
        match (abs.to_i64(), body.is_empty()) {
            (_, true) => out.push_str(&abs.to_string()),
            (Some(1), false) => out.push_str(&body),
            _ => {
                let _ = write!(out, "{abs} {body}");
            }
        }
    }
    out
}

/// `array` table with one row per `a`-degree.
pub fn latex(p: &LaurentPolynomial) -> String {
    let mut out = String::from("\\[\n\\begin{array}{c|lll}\n\\textbf{a}-{\\rm degree} & {\\rm coefficient} & \\rule{0pt}{3mm}  \\\\\n");
    for (a, terms) in by_a_degree(p) {
        let _ = writeln!(out, "\\hline \\textbf{{a}}^{a} & {} & \\rule{{0pt}}{{5mm}}  \\\\", latex_block(&terms));
    }
    out.push_str("\\end{array}\n\\]\n");
    out
}
