//! Conversion between the character basis (a, b) and the symmetric basis
//! (e₁, e₂±¹, hₙ) of S₂-invariant Laurent polynomials.
//!
//! hₙ is the complete homogeneous polynomial Σ_{i+j=n} aⁱbʲ, generated by the
//! recursion hₙ = e₁hₙ₋₁ − e₂hₙ₋₂ with h₋₁ = 0 and h₀ = 1.

use alloc::vec::Vec;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;

/// An element of ℤ[e₁, e₂±¹]; expands to an a ↔ b symmetric Laurent
/// polynomial under e₁ ↦ a+b, e₂ ↦ ab.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetricExpression {
    poly: LaurentPolynomial,
}

impl SymmetricExpression {
    /// Wraps a polynomial over {e1, e2}; any other alphabet is rejected.
    pub fn new(poly: LaurentPolynomial) -> Result<Self> {
        if *poly.alphabet() != Alphabet::symmetric() {
            return Err(Error::AlphabetMismatch {
                expected: Alphabet::symmetric().describe(),
                found: poly.alphabet().describe(),
            });
        }
        Ok(SymmetricExpression { poly })
    }

    pub fn parse(input: &str) -> Result<Self> {
        Self::new(LaurentPolynomial::parse(&Alphabet::symmetric(), input)?)
    }

    pub fn polynomial(&self) -> &LaurentPolynomial {
        &self.poly
    }

    pub fn into_polynomial(self) -> LaurentPolynomial {
        self.poly
    }

    /// Image under e₁ ↦ a+b, e₂ ↦ ab; always a ↔ b symmetric.
    pub fn to_characters(&self) -> LaurentPolynomial {
        let ab = Alphabet::characters();
        let e1 = LaurentPolynomial::parse(&ab, "a + b").unwrap();
        let e2 = LaurentPolynomial::parse(&ab, "a*b").unwrap();
        self.poly
            .map_variables(&ab, &[e1, e2])
            .expect("e2 maps to the unit monomial ab")
    }
}

/// The complete homogeneous symmetric polynomial hₙ in e₁, e₂, via the
/// recursion hₙ = e₁hₙ₋₁ − e₂hₙ₋₂, h₋₁ = 0, h₀ = 1. Accepts n ≥ −1.
pub fn complete_homogeneous(n: i64) -> Result<SymmetricExpression> {
    if n < -1 {
        return Err(Error::OutOfRange(alloc::format!(
            "complete_homogeneous defined for n >= -1, got {n}"
        )));
    }
    let sym = Alphabet::symmetric();
    if n == -1 {
        return SymmetricExpression::new(LaurentPolynomial::zero(&sym));
    }
    let e1 = LaurentPolynomial::variable(&sym, "e1").unwrap();
    let e2 = LaurentPolynomial::variable(&sym, "e2").unwrap();
    let mut prev = LaurentPolynomial::zero(&sym); // h_{-1}
    let mut cur = LaurentPolynomial::one(&sym); // h_0
    for _ in 0..n {
        let next = &(&e1 * &cur) - &(&e2 * &prev);
        prev = cur;
        cur = next;
    }
    SymmetricExpression::new(cur)
}

/// Rewrites an a ↔ b symmetric Laurent polynomial in e₁ and e₂±¹.
///
/// Negative exponents are cleared by pre-multiplying with a power of
/// e₂ = ab; the remaining polynomial part is rewritten by repeatedly
/// subtracting c·e₁^{p−q}·e₂^q for its lex-leading monomial a^p b^q. The
/// lex-leading monomial strictly decreases, so the loop terminates.
pub fn from_characters(f: &LaurentPolynomial) -> Result<SymmetricExpression> {
    let ab = Alphabet::characters();
    if *f.alphabet() != ab {
        return Err(Error::AlphabetMismatch {
            expected: ab.describe(),
            found: f.alphabet().describe(),
        });
    }
    if !f.is_ab_symmetric()? {
        return Err(Error::NotSymmetric(alloc::format!("{f}")));
    }
    let sym = Alphabet::symmetric();
    let mins = f.min_exponents();
    let clear = (-mins.iter().copied().min().unwrap_or(0)).max(0);
    let mut rest = f
        .mul_variable_pow("a", clear)?
        .mul_variable_pow("b", clear)?;

    let e1 = LaurentPolynomial::parse(&ab, "a + b").unwrap();
    let e2 = LaurentPolynomial::parse(&ab, "a*b").unwrap();
    let mut result = LaurentPolynomial::zero(&sym);
    while let Some((exps, coeff)) = rest.lex_leading().map(|(e, c)| (Vec::from(e), c.clone())) {
        let (p, q) = (exps[0], exps[1]);
        debug_assert!(p >= q, "lex leader of a symmetric polynomial has p >= q");
        let image = &e1.pow((p - q) as u32) * &e2.pow(q as u32);
        rest = &rest - &image.scale(coeff.clone());
        let term = LaurentPolynomial::monomial(&sym, &[p - q, q], coeff)?;
        result = &result + &term;
    }
    let shifted = result.mul_variable_pow("e2", -clear)?;
    SymmetricExpression::new(shifted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SymmetricExpression {
        SymmetricExpression::parse(s).unwrap()
    }

    fn cp(s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(&Alphabet::characters(), s).unwrap()
    }

    #[test]
    fn h_small_values() {
        assert_eq!(complete_homogeneous(0).unwrap(), sp("1"));
        assert!(complete_homogeneous(-1).unwrap().polynomial().is_zero());
        assert_eq!(complete_homogeneous(1).unwrap(), sp("e1"));
        assert_eq!(complete_homogeneous(2).unwrap(), sp("e1^2 - e2"));
        assert!(complete_homogeneous(-2).is_err());
    }

    #[test]
    fn h_expands_to_monomial_sums() {
        // h_n(a, b) = a^n + a^{n-1}b + ... + b^n, enumerated directly
        let ab = Alphabet::characters();
        for n in 0..=20i64 {
            let mut expect = LaurentPolynomial::zero(&ab);
            for i in 0..=n {
                let m =
                    LaurentPolynomial::monomial(&ab, &[(n - i) as i32, i as i32], 1).unwrap();
                expect = &expect + &m;
            }
            let h = complete_homogeneous(n).unwrap().to_characters();
            assert_eq!(h, expect, "h_{n}");
        }
    }

    #[test]
    fn to_characters_basics() {
        assert_eq!(sp("e1").to_characters(), cp("a + b"));
        assert_eq!(sp("e2^-1").to_characters(), cp("a^-1*b^-1"));
        assert_eq!(
            complete_homogeneous(3).unwrap().to_characters(),
            cp("a^3 + a^2*b + a*b^2 + b^3")
        );
    }

    #[test]
    fn from_characters_basics() {
        assert_eq!(from_characters(&cp("a + b")).unwrap(), sp("e1"));
        assert_eq!(from_characters(&cp("a^-1 + b^-1")).unwrap(), sp("e1*e2^-1"));
        assert_eq!(
            from_characters(&cp("a^2*b^2 - a*b")).unwrap(),
            sp("e2^2 - e2")
        );
    }

    #[test]
    fn from_characters_rejects_asymmetric_input() {
        assert!(matches!(
            from_characters(&cp("a^2 + b")),
            Err(Error::NotSymmetric(_))
        ));
    }

    #[test]
    fn shifted_recursion_holds() {
        // h_1 = e1 and h_{n} - e1 h_{n-1} + e2 h_{n-2} = 0
        let e1 = sp("e1").into_polynomial();
        let e2 = sp("e2").into_polynomial();
        assert_eq!(complete_homogeneous(1).unwrap().polynomial(), &e1);
        for n in 1..=12i64 {
            let hn = complete_homogeneous(n).unwrap().into_polynomial();
            let h1 = complete_homogeneous(n - 1).unwrap().into_polynomial();
            let h2 = complete_homogeneous(n - 2).unwrap().into_polynomial();
            let lhs = &(&hn - &(&e1 * &h1)) + &(&e2 * &h2);
            assert!(lhs.is_zero(), "recursion fails at n = {n}");
        }
    }
}
