//! Brute-force Macdonald polynomials in finitely many variables.
//!
//! `P_Y` is built by Gram-Schmidt on the monomial basis under the `(q, t)`
//! inner product `<p_rho, p_rho> = z_rho prod (1 - q^rho_i)/(1 - t^rho_i)`,
//! with basis changes read off explicit power-sum expansions. Nothing here
//! uses the closed forms of [`crate::macdonald`]; the checks compare against
//! them. Sizes are capped at [`MAX_SIZE`] boxes and [`MAX_VARS`] variables.

mod checks;
mod ratfunc;
mod symmetric;

use std::fmt;

use rayon::prelude::*;

use crate::algebra::AlgebraError;
use crate::partitions::{self, Partition};

pub use checks::{
    compare_power_sum_expansion, schur_explicit, verify_cauchy, verify_dimension, verify_orthogonality,
    verify_power_sum_expansion, verify_schur_dimension, verify_schur_limit,
};
pub use ratfunc::{qt, RatFunc};
pub use symmetric::{macdonald_p, MacdonaldBasis, SymmetricPoly, Transition, MAX_SIZE, MAX_VARS};

#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    #[error("oracle usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Outcome of one oracle comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCheck {
    pub suite: &'static str,
    pub case: String,
    pub passed: bool,
}

impl fmt::Display for OracleCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "ok  " } else { "FAIL" };
        write!(f, "{mark} {:<14} {}", self.suite, self.case)
    }
}

enum Job {
    Orthogonality(usize),
    PowerSum(usize),
    Dimension(Partition, usize),
    Cauchy(usize),
    Schur(Partition),
}

impl Job {
    fn run(&self) -> Result<Vec<OracleCheck>, OracleError> {
        let one = |suite, case: String, passed| vec![OracleCheck { suite, case, passed }];
        Ok(match self {
            Job::Orthogonality(n) => one("orthogonality", format!("n={n}"), verify_orthogonality(*n)?),
            Job::PowerSum(n) => compare_power_sum_expansion(*n)?
                .into_iter()
                .map(|(y, passed)| OracleCheck { suite: "power-sum", case: format!("C_{y}"), passed })
                .collect(),
            Job::Dimension(y, n) => one("dimension", format!("{y} N={n}"), verify_dimension(y, *n)?),
            Job::Cauchy(d) => one("cauchy", format!("d={d} Nx=Ly={d}"), verify_cauchy(*d, *d, *d)?),
            Job::Schur(y) => {
                let nx = y.size();
                let mut out = one("schur", format!("{y} Nx={nx}"), verify_schur_limit(y, nx)?);
                for n in 1..=nx {
                    out.extend(one("schur-dim", format!("{y} N={n}"), verify_schur_dimension(y, n)?));
                }
                out
            }
        })
    }
}

/// Runs every suite on partitions of size at most `max_size`. The Cauchy
/// check stops at degree three.
pub fn run_all(max_size: usize) -> Result<Vec<OracleCheck>, OracleError> {
    if max_size == 0 || max_size > MAX_SIZE {
        return Err(OracleError::Usage(format!("max size must be in 1..={MAX_SIZE}, got {max_size}")));
    }
    let mut jobs = Vec::new();
    for n in 1..=max_size {
        jobs.push(Job::Orthogonality(n));
        jobs.push(Job::PowerSum(n));
        for y in partitions::enumerate(n) {
            for big_n in 3..=5 {
                jobs.push(Job::Dimension(y.clone(), big_n));
            }
            if n <= 4 {
                jobs.push(Job::Schur(y));
            }
        }
        if n <= 3 {
            jobs.push(Job::Cauchy(n));
        }
    }
    let results = jobs.par_iter().map(Job::run).collect::<Result<Vec<_>, _>>()?;
    Ok(results.into_iter().flatten().collect())
}
