//! Representation-ring calculus for T₂, GL₂ and the torus normalizer
//! G = T₂⋊S₂: the rank-two classes [Wₙ], their exterior squares and duals,
//! induced characters, restriction to the torus, and λ₋₁ Euler classes.
//!
//! Classes live in ℤ[ε, λ±¹, γ±¹] modulo (1 − γ², ε(1 − γ)), kept in a
//! normal form with γ-degree 0 or 1 and no term divisible by εγ.

use num_bigint::BigInt;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;

/// An element of R(G) = ℤ[ε, λ±¹, γ±¹]/(1 − γ², ε(1 − γ)) in normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct GClass {
    poly: LaurentPolynomial,
}

impl GClass {
    /// Reduces an arbitrary polynomial over {eps, lam, gam} to normal form:
    /// first γ-exponents mod 2, then εγ → ε, until no rule applies.
    pub fn new(poly: LaurentPolynomial) -> Result<Self> {
        let alpha = Alphabet::normalizer();
        if *poly.alphabet() != alpha {
            return Err(Error::AlphabetMismatch {
                expected: alpha.describe(),
                found: poly.alphabet().describe(),
            });
        }
        let mut normal = LaurentPolynomial::zero(&alpha);
        for (exps, coeff) in poly.terms() {
            let (i, j, k) = (exps[0], exps[1], exps[2]);
            let mut k = k.rem_euclid(2);
            if i > 0 && k == 1 {
                k = 0;
            }
            let term = LaurentPolynomial::monomial(&alpha, &[i, j, k], coeff.clone())?;
            normal = &normal + &term;
        }
        Ok(GClass { poly: normal })
    }

    pub fn parse(input: &str) -> Result<Self> {
        Self::new(LaurentPolynomial::parse(&Alphabet::normalizer(), input)?)
    }

    pub fn zero() -> Self {
        GClass { poly: LaurentPolynomial::zero(&Alphabet::normalizer()) }
    }

    pub fn one() -> Self {
        GClass { poly: LaurentPolynomial::one(&Alphabet::normalizer()) }
    }

    pub fn polynomial(&self) -> &LaurentPolynomial {
        &self.poly
    }

    pub fn into_polynomial(self) -> LaurentPolynomial {
        self.poly
    }

    pub fn add(&self, other: &Self) -> Self {
        GClass { poly: &self.poly + &other.poly }
    }

    pub fn sub(&self, other: &Self) -> Self {
        GClass { poly: &self.poly - &other.poly }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.poly * &other.poly).expect("normal form over the same alphabet")
    }

    /// Restriction to the maximal torus: ε ↦ a+b, λ ↦ ab, γ ↦ 1.
    ///
    /// The sign character is trivial on T₂, so γ restricts to 1; the image is
    /// always a ↔ b symmetric.
    pub fn restrict_to_torus(&self) -> LaurentPolynomial {
        let ab = Alphabet::characters();
        let images = [
            LaurentPolynomial::parse(&ab, "a + b").unwrap(),
            LaurentPolynomial::parse(&ab, "a*b").unwrap(),
            LaurentPolynomial::one(&ab),
        ];
        self.poly
            .map_variables(&ab, &images)
            .expect("lam and gam map to unit monomials")
    }
}

impl core::fmt::Display for GClass {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.poly)
    }
}

impl core::fmt::Debug for GClass {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.poly)
    }
}

fn monomial(i: i32, j: i32, k: i32, c: impl Into<BigInt>) -> GClass {
    let alpha = Alphabet::normalizer();
    GClass::new(LaurentPolynomial::monomial(&alpha, &[i, j, k], c).unwrap()).unwrap()
}

/// The class [Wₙ] of the rank-two representation induced from χ₁ⁿ.
///
/// Defined by [W₀] = 1 + γ, [W₁] = ε and the tensor recursion
/// [Wₙ] = ε[Wₙ₋₁] − λγ[Wₙ₋₂]; negative indices via [Wₙ] = λⁿ[W₋ₙ].
pub fn w_class(n: i64) -> GClass {
    if n < 0 {
        let pos = w_class(-n);
        let shift = monomial(0, n as i32, 0, 1);
        return pos.mul(&shift);
    }
    let eps = monomial(1, 0, 0, 1);
    let lam_gam = monomial(0, 1, 1, 1);
    let mut prev = GClass::one().add(&monomial(0, 0, 1, 1)); // W_0 = 1 + gam
    if n == 0 {
        return prev;
    }
    let mut cur = eps.clone(); // W_1
    for _ in 1..n {
        let next = eps.mul(&cur).sub(&lam_gam.mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// [Wₙ^∨] = [W₋ₙ] = λ⁻ⁿ[Wₙ].
pub fn dual_w_class(n: i64) -> GClass {
    w_class(n).mul(&monomial(0, -n as i32, 0, 1))
}

/// [∧²Wₙ] = γλⁿ for n even, λⁿ for n odd.
pub fn det_w_class(n: i64) -> GClass {
    monomial(0, n as i32, if n.rem_euclid(2) == 0 { 1 } else { 0 }, 1)
}

/// [∧²Wₙ^∨] = γλ⁻ⁿ for n even, λ⁻ⁿ for n odd.
pub fn det_dual_w_class(n: i64) -> GClass {
    monomial(0, -n as i32, if n.rem_euclid(2) == 0 { 1 } else { 0 }, 1)
}

/// A rank-two bundle class together with its determinant and index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoDimBundleClass {
    pub rank2_class: GClass,
    pub det_class: GClass,
    pub index: i64,
}

pub fn two_dim_bundle(n: i64) -> TwoDimBundleClass {
    TwoDimBundleClass { rank2_class: w_class(n), det_class: det_w_class(n), index: n }
}

/// Pushforward of the character a^m b^n along R(T₂) → R(G):
/// [∧²Wₙ ⊗ W_{m−n}] for m ≠ n, [∧²Wₘ ⊗ W₀] for m = n.
pub fn induce_character(m: i64, n: i64) -> GClass {
    if m == n {
        det_w_class(m).mul(&w_class(0))
    } else {
        det_w_class(n).mul(&w_class(m - n))
    }
}

/// The λ₋₁ Euler class of a dual sum of rank-two bundles:
/// ∏ᵢ (1 − [W_{nᵢ}^∨] + [∧²W_{nᵢ}^∨]).
///
/// For indices [4, 6] this is the boundary relation R₀.
pub fn euler_lambda_minus1_dual(indices: &[i64]) -> GClass {
    let mut acc = GClass::one();
    for &n in indices {
        let factor = GClass::one().sub(&dual_w_class(n)).add(&det_dual_w_class(n));
        acc = acc.mul(&factor);
    }
    acc
}

/// The relations R₁, R₂ coming from excising the two punctured axes of
/// W₄,₆: the induced classes of (1−b⁻⁴)(1−b⁻⁶) and a(1−b⁻⁴)(1−b⁻⁶).
///
/// R₁ = (1+γ) − γ(λ⁻⁴[W₄] + λ⁻⁶[W₆] − λ⁻¹⁰[W₁₀]),
/// R₂ = ε − γ(λ⁻⁴[W₅] + λ⁻⁶[W₇] − λ⁻¹⁰[W₁₁]).
pub fn boundary_relations_r1_r2() -> (GClass, GClass) {
    let gam = monomial(0, 0, 1, 1);
    let inner1 = w_class(4)
        .mul(&monomial(0, -4, 0, 1))
        .add(&w_class(6).mul(&monomial(0, -6, 0, 1)))
        .sub(&w_class(10).mul(&monomial(0, -10, 0, 1)));
    let r1 = GClass::one().add(&gam).sub(&gam.mul(&inner1));
    let inner2 = w_class(5)
        .mul(&monomial(0, -4, 0, 1))
        .add(&w_class(7).mul(&monomial(0, -6, 0, 1)))
        .sub(&w_class(11).mul(&monomial(0, -10, 0, 1)));
    let r2 = monomial(1, 0, 0, 1).sub(&gam.mul(&inner2));
    (r1, r2)
}

/// Substitutes γ ↦ λδ on the normal-form representative (γ-degree ≤ 1),
/// landing in ℤ[ε, λ±¹, δ±¹].
pub fn gamma_to_lambda_delta(c: &GClass) -> LaurentPolynomial {
    let target = Alphabet::boundary();
    let images = [
        LaurentPolynomial::variable(&target, "eps").unwrap(),
        LaurentPolynomial::variable(&target, "lam").unwrap(),
        LaurentPolynomial::parse(&target, "lam*del").unwrap(),
    ];
    c.polynomial()
        .map_variables(&target, &images)
        .expect("gam has degree <= 1 in normal form and lam*del is a unit monomial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn g(s: &str) -> GClass {
        GClass::parse(s).unwrap()
    }

    fn ab(s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(&Alphabet::characters(), s).unwrap()
    }

    #[test]
    fn normal_form_rules() {
        assert_eq!(g("gam^2"), g("1"));
        assert_eq!(g("eps*gam"), g("eps"));
        assert_eq!(g("gam^-1"), g("gam"));
        assert_eq!(g("eps^3*lam^-2*gam^5 + gam^3"), g("eps^3*lam^-2 + gam"));
    }

    #[test]
    fn w_small_and_displayed_values() {
        assert_eq!(w_class(0), g("1 + gam"));
        assert_eq!(w_class(1), g("eps"));
        assert_eq!(w_class(4), g("eps^4 - 4*eps^2*lam + lam^2 + lam^2*gam"));
        assert_eq!(
            w_class(6),
            g("eps^6 - 6*eps^4*lam + 9*eps^2*lam^2 - lam^3 - lam^3*gam")
        );
    }

    #[test]
    fn dual_values_match_displays() {
        assert_eq!(
            dual_w_class(4),
            g("eps^4*lam^-4 - 4*eps^2*lam^-3 + lam^-2 + lam^-2*gam")
        );
        assert_eq!(
            dual_w_class(6),
            g("eps^6*lam^-6 - 6*eps^4*lam^-5 + 9*eps^2*lam^-4 - lam^-3 - lam^-3*gam")
        );
        assert_eq!(dual_w_class(0), g("1 + gam"));
    }

    #[test]
    fn recursion_duality_absorption() {
        let eps = g("eps");
        let lam_gam = g("lam*gam");
        for n in 2..=12 {
            let lhs = w_class(n - 1).mul(&eps);
            let rhs = w_class(n).add(&lam_gam.mul(&w_class(n - 2)));
            assert_eq!(lhs, rhs, "recursion at n = {n}");
        }
        for n in 1..=12 {
            let lam_n = GClass::parse(&alloc::format!("lam^{n}")).unwrap();
            assert_eq!(dual_w_class(n).mul(&lam_n), w_class(n), "duality at n = {n}");
            assert_eq!(g("gam").mul(&w_class(n)), w_class(n), "absorption at n = {n}");
        }
    }

    #[test]
    fn restriction_to_torus() {
        assert_eq!(g("eps").restrict_to_torus(), ab("a + b"));
        assert_eq!(g("gam").restrict_to_torus(), ab("1"));
        assert_eq!(
            g("eps^4 - 4*eps^2*lam + 2*lam^2").restrict_to_torus(),
            ab("a^4 + b^4")
        );
        for n in 1..=12i64 {
            let expect = ab(&alloc::format!("a^{n} + b^{n}"));
            assert_eq!(w_class(n).restrict_to_torus(), expect, "restrict W_{n}");
        }
    }

    #[test]
    fn induced_characters() {
        assert_eq!(induce_character(0, 0), g("1 + gam"));
        assert_eq!(induce_character(1, 0), g("eps"));
        assert_eq!(induce_character(1, 1), g("lam + lam*gam"));
        for m in -6..=6 {
            for n in -6..=6 {
                assert_eq!(
                    induce_character(m, n),
                    induce_character(n, m),
                    "symmetry at ({m}, {n})"
                );
            }
        }
    }

    #[test]
    fn euler_duals() {
        assert_eq!(euler_lambda_minus1_dual(&[]), GClass::one());
        assert_eq!(euler_lambda_minus1_dual(&[1]), g("1 - eps*lam^-1 + lam^-1"));
        // R0 agrees with the expanded product of the two displayed factors
        let f4 = GClass::one().sub(&dual_w_class(4)).add(&g("gam*lam^-4"));
        let f6 = GClass::one().sub(&dual_w_class(6)).add(&g("gam*lam^-6"));
        assert_eq!(euler_lambda_minus1_dual(&[4, 6]), f4.mul(&f6));
    }

    #[test]
    fn r1_r2_restrict_to_the_axis_classes() {
        let (r1, r2) = boundary_relations_r1_r2();
        let one_b = ab("1 - b^-4") * ab("1 - b^-6");
        let one_a = ab("1 - a^-4") * ab("1 - a^-6");
        assert_eq!(r1.restrict_to_torus(), &one_a + &one_b);
        let rhs2 = &(&ab("a") * &one_b) + &(&ab("b") * &one_a);
        assert_eq!(r2.restrict_to_torus(), rhs2);
        // R2 carries the plain eps term the display starts with
        let eps_only: Vec<_> = r2
            .polynomial()
            .terms()
            .filter(|(e, _)| e[0] == 1 && e[1] == 0 && e[2] == 0)
            .collect();
        assert_eq!(eps_only.len(), 1);
    }

    #[test]
    fn gamma_multiplication_fixes_boundary_relations() {
        // every W_n is gamma-absorbed, so R1 and R2 are fixed by gamma
        let (r1, r2) = boundary_relations_r1_r2();
        assert_eq!(g("gam").mul(&r1), r1);
        assert_eq!(g("gam").mul(&r2), r2);
        let one_plus_gam = g("1 + gam");
        assert_eq!(g("gam").mul(&one_plus_gam), one_plus_gam);
    }

    #[test]
    fn gamma_substitution_lands_in_boundary_ring() {
        let img = gamma_to_lambda_delta(&g("gam*lam^-1"));
        let target = Alphabet::boundary();
        assert_eq!(img, LaurentPolynomial::parse(&target, "del").unwrap());
    }
}
