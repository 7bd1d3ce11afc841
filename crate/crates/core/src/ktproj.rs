//! Torus-equivariant K-theory of projective spaces of binary forms.
//!
//! ℙ^N carries the T₂-action with weight a^{N−k}b^k on the k-th coordinate;
//! its equivariant K-theory is R(T₂)[t±¹] modulo the single product relation
//! ∏ₖ (1 − a^{N−k}b^k t⁻¹), where t is the hyperplane class.

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;

/// The presentation of K₀(ℙ^N, T₂) over {a, b, t}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjSpacePresentation {
    pub dimension: usize,
    pub relation: LaurentPolynomial,
}

/// One linear factor 1 − a^p b^q t⁻¹.
fn weight_factor(alpha: &Alphabet, p: i32, q: i32) -> LaurentPolynomial {
    let one = LaurentPolynomial::one(alpha);
    let m = LaurentPolynomial::monomial(alpha, &[p, q, -1], 1).unwrap();
    &one - &m
}

/// The defining relation ∏_{k=0}^{N} (1 − a^{N−k}b^k t⁻¹) of K₀(ℙ^N, T₂).
pub fn proj_presentation(n: usize) -> ProjSpacePresentation {
    let alpha = Alphabet::characters_t();
    let mut relation = LaurentPolynomial::one(&alpha);
    for k in 0..=n {
        relation = &relation * &weight_factor(&alpha, (n - k) as i32, k as i32);
    }
    ProjSpacePresentation { dimension: n, relation }
}

/// The class of the k-th fixed point Q_k in ℙ^N: the product over i ≠ k of
/// the hyperplane factors 1 − a^{N−i}b^i t⁻¹.
pub fn fixed_point_class(n: usize, k: usize) -> Result<LaurentPolynomial> {
    if k > n {
        return Err(Error::OutOfRange(alloc::format!(
            "fixed point index {k} exceeds dimension {n}"
        )));
    }
    let alpha = Alphabet::characters_t();
    let mut class = LaurentPolynomial::one(&alpha);
    for i in 0..=n {
        if i != k {
            class = &class * &weight_factor(&alpha, (n - i) as i32, i as i32);
        }
    }
    Ok(class)
}

/// The class 1 − χ⁻¹t^{−d} of a degree-d invariant hypersurface with
/// character χ (a unit monomial in a, b).
pub fn hypersurface_class(d: u32, chi: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    let alpha = Alphabet::characters_t();
    if *chi.alphabet() != alpha {
        return Err(Error::AlphabetMismatch {
            expected: alpha.describe(),
            found: chi.alphabet().describe(),
        });
    }
    if !chi.is_unit_monomial() {
        return Err(Error::NonUnitSubstitution("chi must be a unit monomial".into()));
    }
    let (exps, _) = chi.lex_leading().unwrap();
    if exps[2] != 0 {
        return Err(Error::OutOfRange("chi must not involve t".into()));
    }
    let inv = LaurentPolynomial::monomial(&alpha, &[-exps[0], -exps[1], -(d as i32)], 1)?;
    Ok(&LaurentPolynomial::one(&alpha) - &inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(&Alphabet::characters_t(), s).unwrap()
    }

    #[test]
    fn presentations_match_weight_products() {
        assert_eq!(
            proj_presentation(1).relation,
            &p("1 - a*t^-1") * &p("1 - b*t^-1")
        );
        assert_eq!(
            proj_presentation(2).relation,
            &(&p("1 - a^2*t^-1") * &p("1 - a*b*t^-1")) * &p("1 - b^2*t^-1")
        );
        // degree-7 product for the sextics
        let six = proj_presentation(6);
        let mut expect = LaurentPolynomial::one(&Alphabet::characters_t());
        for k in 0..=6 {
            expect = &expect * &p(&alloc::format!("1 - a^{}*b^{}*t^-1", 6 - k, k));
        }
        assert_eq!(six.relation, expect);
        assert_eq!(six.relation.coefficients_of("t").unwrap().len(), 8);
    }

    #[test]
    fn fixed_point_classes() {
        assert_eq!(
            fixed_point_class(2, 0).unwrap(),
            &p("1 - a*b*t^-1") * &p("1 - b^2*t^-1")
        );
        assert_eq!(
            fixed_point_class(2, 2).unwrap(),
            &p("1 - a^2*t^-1") * &p("1 - a*b*t^-1")
        );
        assert_eq!(fixed_point_class(1, 0).unwrap(), p("1 - b*t^-1"));
        assert!(fixed_point_class(2, 3).is_err());
    }

    #[test]
    fn hypersurface_classes() {
        assert_eq!(hypersurface_class(1, &p("a*b")).unwrap(), p("1 - a^-1*b^-1*t^-1"));
        assert_eq!(
            hypersurface_class(2, &p("a^2*b^2")).unwrap(),
            p("1 - a^-2*b^-2*t^-2")
        );
        assert!(hypersurface_class(1, &p("a + b")).is_err());
        assert!(hypersurface_class(1, &p("2*a")).is_err());
    }

    #[test]
    fn fixed_point_through_hyperplanes() {
        // Q_0 in P^2 is the intersection of the hyperplanes with characters
        // (ab)^-1 and (b^2)^-1 acting on the two vanishing coordinates
        let h1 = hypersurface_class(1, &p("a^-1*b^-1")).unwrap();
        let h2 = hypersurface_class(1, &p("b^-2")).unwrap();
        assert_eq!(&h1 * &h2, fixed_point_class(2, 0).unwrap());
    }

    #[test]
    fn relation_factors_through_every_fixed_point() {
        for n in 0..=8usize {
            let rel = proj_presentation(n).relation;
            for k in 0..=n {
                let fpc = fixed_point_class(n, k).unwrap();
                let omitted = p(&alloc::format!("1 - a^{}*b^{}*t^-1", n - k, k));
                assert_eq!(rel, &fpc * &omitted, "N = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn fixed_point_swap_symmetry() {
        for n in 0..=8usize {
            for k in 0..=n {
                let lhs = fixed_point_class(n, k).unwrap().swap_ab().unwrap();
                let rhs = fixed_point_class(n, n - k).unwrap();
                assert_eq!(lhs, rhs, "N = {n}, k = {k}");
                let factors = n; // exactly N factors
                let top = fixed_point_class(n, k)
                    .unwrap()
                    .coefficients_of("t")
                    .unwrap();
                assert_eq!(top.keys().min().copied().unwrap_or(0), -(factors as i32));
            }
        }
    }
}
