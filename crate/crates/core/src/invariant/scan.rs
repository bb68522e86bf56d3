use std::fmt::Write;
use std::time::Instant;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use super::{compute, InvariantError, KnotRequest};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanStatus {
    /// Coprime pair, polynomial with every flag set.
    Polynomial,
    /// Non-coprime pair, division failed as expected.
    NonPolynomial,
    /// Anything else; the string says what went wrong.
    Failed(String),
}

impl ScanStatus {
    pub fn label(&self) -> String {
        match self {
            ScanStatus::Polynomial => "polynomial".into(),
            ScanStatus::NonPolynomial => "nonpolynomial".into(),
            ScanStatus::Failed(why) => format!("FAIL: {why}"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub n: u32,
    pub m: u32,
    pub gcd: u32,
    pub status: ScanStatus,
    pub a_max: Option<i32>,
    pub q_max: Option<i32>,
    pub t_max: Option<i32>,
    pub term_count: usize,
    pub millis: u128,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    pub fn failures(&self) -> impl Iterator<Item = &ScanRow> {
        self.rows.iter().filter(|r| matches!(r.status, ScanStatus::Failed(_)))
    }

    /// `n,m,gcd,status,a_max,q_max,t_max,term_count,millis`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,m,gcd,status,a_max,q_max,t_max,term_count,millis\n");
        let opt = |v: Option<i32>| v.map(|x| x.to_string()).unwrap_or_default();
        for r in &self.rows {
            let status = r.status.label().replace(',', ";");
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                r.n,
                r.m,
                r.gcd,
                status,
                opt(r.a_max),
                opt(r.q_max),
                opt(r.t_max),
                r.term_count,
                r.millis
            );
        }
        out
    }
}

fn scan_pair(n: u32, m: u32) -> ScanRow {
    let gcd = n.gcd(&m);
    let start = Instant::now();
    let result = KnotRequest::new(n, m).and_then(|req| compute(&req));
    let millis = start.elapsed().as_millis();
    let mut row = ScanRow { n, m, gcd, status: ScanStatus::Polynomial, a_max: None, q_max: None, t_max: None, term_count: 0, millis };
    row.status = match (result, gcd) {
        (Ok(p), 1) => {
            let (a, q, t) = p.max_degrees();
            row.a_max = Some(a);
            row.q_max = Some(q);
            row.t_max = Some(t);
            row.term_count = p.terms.len();
            if p.flags.all() {
                ScanStatus::Polynomial
            } else {
                ScanStatus::Failed(format!("flags {:?}", p.flags))
            }
        }
        (Ok(_), g) => ScanStatus::Failed(format!("polynomial although gcd = {g}")),
        (Err(InvariantError::NonPolynomial { .. }), 1) => ScanStatus::Failed("not a polynomial although coprime".into()),
        (Err(InvariantError::NonPolynomial { .. }), _) => ScanStatus::NonPolynomial,
        (Err(e), _) => ScanStatus::Failed(e.to_string()),
    };
    row
}

/// Every pair `2 <= n <= n_max`, `n < m <= m_max`, in `(n, m)` order.
pub fn scan(n_max: u32, m_max: u32) -> ScanReport {
    let pairs: Vec<(u32, u32)> = (2..=n_max).flat_map(|n| ((n + 1)..=m_max).map(move |m| (n, m))).collect();
    let mut rows: Vec<ScanRow> = pairs.par_iter().map(|&(n, m)| scan_pair(n, m)).collect();
    rows.sort_by_key(|r| (r.n, r.m));
    ScanReport { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_scan() {
        let report = scan(3, 7);
        assert_eq!(report.rows.len(), 5 + 4);
        assert_eq!(report.failures().count(), 0);
        let row = report.rows.iter().find(|r| (r.n, r.m) == (2, 4)).unwrap();
        assert_eq!(row.status, ScanStatus::NonPolynomial);
        let csv = report.to_csv();
        assert!(csv.starts_with("n,m,gcd,status,a_max,q_max,t_max,term_count,millis\n2,3,1,polynomial,2,4,3,3,"));
    }

    #[test]
    fn degenerate_pair() {
        assert_eq!(scan_pair(2, 2).status, ScanStatus::NonPolynomial);
    }
}
