use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::poly::LaurentPolynomial;
use super::rational::Rational;
use super::AlgebraError;

/// The Mersenne prime 2^61 - 1.
pub const PRIME: u64 = (1 << 61) - 1;

pub fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

pub fn pow_mod(mut base: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    base %= PRIME;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64) -> Option<u64> {
    if a % PRIME == 0 {
        None
    } else {
        Some(pow_mod(a, PRIME - 2))
    }
}

fn bigint_mod(n: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    let r = n.mod_floor(&p);
    debug_assert!(!r.is_negative());
    r.to_u64().expect("residue fits in u64")
}

pub fn rational_mod(c: &Rational) -> Result<u64, AlgebraError> {
    if let Some(n) = c.to_i64() {
        return Ok(n.rem_euclid(PRIME as i64) as u64);
    }
    let num = bigint_mod(&c.numer());
    let den = inv_mod(bigint_mod(&c.denom()))
        .ok_or_else(|| AlgebraError::Usage("coefficient denominator vanishes modulo the prime".into()))?;
    Ok(mul_mod(num, den))
}

/// Evaluates `f` at `point` (one residue per alphabet variable) in the prime
/// field. Zero residues are rejected since exponents may be negative.
pub fn eval_mod_p(f: &LaurentPolynomial, point: &[u64]) -> Result<u64, AlgebraError> {
    if point.len() != f.alphabet().len() {
        return Err(AlgebraError::Usage(format!(
            "evaluation point has {} coordinates, alphabet has {}",
            point.len(),
            f.alphabet().len()
        )));
    }
    let mut inverses = Vec::with_capacity(point.len());
    for &v in point {
        let v = v % PRIME;
        let inv = inv_mod(v).ok_or_else(|| AlgebraError::Usage("evaluation at zero is undefined for Laurent polynomials".into()))?;
        inverses.push((v, inv));
    }
    let mut acc = 0u64;
    for (m, c) in f.terms() {
        let mut v = rational_mod(c)?;
        for (e, &(x, xi)) in m.exps().iter().zip(&inverses) {
            let base = if *e >= 0 { x } else { xi };
            v = mul_mod(v, pow_mod(base, e.unsigned_abs() as u64));
        }
        acc = (acc + v) % PRIME;
    }
    Ok(acc)
}
