use num_traits::One;

use super::monomial::{Monomial, VarAlphabet};
use super::poly::LaurentPolynomial;
use super::rational::Rational;
use super::AlgebraError;

/// Monomial substitution `x_i -> sign_i * image_i`.
///
/// Extends to a ring homomorphism between Laurent polynomial rings.
#[derive(Clone, Debug)]
pub struct SubstitutionMap {
    source: VarAlphabet,
    target: VarAlphabet,
    images: Vec<(i8, Monomial)>,
}

impl SubstitutionMap {
    pub fn new(
        source: &VarAlphabet,
        target: &VarAlphabet,
        images: Vec<(i8, Monomial)>,
    ) -> Result<Self, AlgebraError> {
        if images.len() != source.len() {
            return Err(AlgebraError::Usage(format!(
                "substitution covers {} variables but the source alphabet has {}",
                images.len(),
                source.len()
            )));
        }
        for (sign, m) in &images {
            if *sign != 1 && *sign != -1 {
                return Err(AlgebraError::Usage(format!("substitution sign must be +1 or -1, got {sign}")));
            }
            if m.nvars() != target.len() {
                return Err(AlgebraError::Usage("image monomial arity does not match target alphabet".into()));
            }
        }
        Ok(SubstitutionMap { source: source.clone(), target: target.clone(), images })
    }

    /// The change of variables from Macdonald parameters to knot variables:
    /// `q -> t^2 q^2`, `t -> q^2`, `A = t^N -> -a^2 t`.
    pub fn macd_to_knot() -> Self {
        let knot = VarAlphabet::knot();
        Self::new(
            &VarAlphabet::macd(),
            &knot,
            vec![
                (1, Monomial::new(&[0, 2, 2])),
                (1, Monomial::new(&[0, 2, 0])),
                (-1, Monomial::new(&[2, 0, 1])),
            ],
        )
        .expect("well-formed substitution")
    }

    pub fn source(&self) -> &VarAlphabet {
        &self.source
    }

    pub fn target(&self) -> &VarAlphabet {
        &self.target
    }

    /// Image of a single monomial as `(sign, monomial)`.
    pub fn apply_monomial(&self, m: &Monomial) -> (i8, Monomial) {
        let mut sign = 1i8;
        let mut out = self.target.one();
        for (e, (s, img)) in m.exps().iter().zip(&self.images) {
            if *s < 0 && e.rem_euclid(2) == 1 {
                sign = -sign;
            }
            out = out.mul(&img.pow(*e));
        }
        (sign, out)
    }

    pub fn apply(&self, f: &LaurentPolynomial) -> Result<LaurentPolynomial, AlgebraError> {
        if f.alphabet() != &self.source {
            return Err(AlgebraError::AlphabetMismatch {
                left: format!("{:?}", f.alphabet()),
                right: format!("{:?}", self.source),
            });
        }
        let minus_one = -Rational::one();
        Ok(f.map_terms(&self.target, |m, c| {
            let (s, img) = self.apply_monomial(m);
            (img, if s < 0 { c * &minus_one } else { c.clone() })
        }))
    }
}
