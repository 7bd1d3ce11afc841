//! Fixed-point localization engine for the power maps
//! (f, g) ↦ f^q·g on ℙ^r × ℙ^s → ℙ^N with s = N − q·r and q ∈ {2, 3}.
//!
//! The pushforward of x₁^k is the sum over the fixed points P_{i,j} of
//!
//! ```text
//!   (a^{r−i} b^i)^k · [Q_{q·i+j}] / λ₋₁(N^∨_{P_{i,j}})
//! ```
//!
//! accumulated over a single running common denominator; the localization
//! theorem guarantees the sum cancels to a genuine Laurent polynomial, and
//! the final exact division certifies it.

use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::ktproj::fixed_point_class;
use crate::laurent::{LaurentPolynomial, RationalClass};
use crate::symfun::{from_characters, SymmetricExpression};

/// A torus fixed point of ℙ^r × ℙ^s, with 0 ≤ i ≤ r and 0 ≤ j ≤ s.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixedPoint {
    pub i: usize,
    pub j: usize,
}

/// Witness that the localization sum cancelled exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisionCertificate {
    pub fixed_points: usize,
    pub numerator_terms: usize,
    pub denominator_terms: usize,
    pub exact: bool,
}

/// A computed pushforward (π_r)_*(x₁^k) or (τ_r)_*(x₁^k) over {a, b, t}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushforwardResult {
    pub q: u32,
    pub r: usize,
    pub n: usize,
    pub k: usize,
    pub value: LaurentPolynomial,
    pub certificate: DivisionCertificate,
}

/// λ₋₁ of the conormal bundle at a fixed point of ℙ^r × ℙ^s: the product
/// ∏_{k≠i}(1 − a^{r−k}b^k / a^{r−i}b^i) · ∏_{k≠j}(1 − a^{s−k}b^k / a^{s−j}b^j),
/// returned with expanded numerator and a single monomial denominator.
pub fn conormal_euler(r: usize, s: usize, p: FixedPoint) -> Result<RationalClass> {
    if p.i > r || p.j > s {
        return Err(Error::OutOfRange(alloc::format!(
            "fixed point ({}, {}) outside P^{r} x P^{s}",
            p.i,
            p.j
        )));
    }
    let alpha = Alphabet::characters_t();
    let mut numerator = LaurentPolynomial::one(&alpha);
    let mut den_a: i32 = 0;
    let mut den_b: i32 = 0;
    let mut block = |dim: usize, fixed: usize| -> Result<()> {
        for k in 0..=dim {
            if k == fixed {
                continue;
            }
            let base = LaurentPolynomial::monomial(
                &alpha,
                &[(dim - fixed) as i32, fixed as i32, 0],
                1,
            )?;
            let other =
                LaurentPolynomial::monomial(&alpha, &[(dim - k) as i32, k as i32, 0], 1)?;
            numerator = &numerator * &(&base - &other);
            den_a += (dim - fixed) as i32;
            den_b += fixed as i32;
        }
        Ok(())
    };
    block(r, p.i)?;
    block(s, p.j)?;
    let denominator = LaurentPolynomial::monomial(&alpha, &[den_a, den_b, 0], 1)?;
    RationalClass::new(numerator, denominator)
}

/// Pushforward of x₁^k along (f, g) ↦ f^q·g via fixed-point localization.
///
/// Requires q ∈ {2, 3}, r ≥ 1, 0 ≤ k ≤ r and N − q·r ≥ 0. The rational sum
/// must cancel to a Laurent polynomial; inexact cancellation signals an
/// implementation bug and is reported as an error.
pub fn pushforward_power_map(q: u32, r: usize, n: usize, k: usize) -> Result<PushforwardResult> {
    if q != 2 && q != 3 {
        return Err(Error::OutOfRange(alloc::format!("q must be 2 or 3, got {q}")));
    }
    if r < 1 {
        return Err(Error::OutOfRange("r must be at least 1".into()));
    }
    if k > r {
        return Err(Error::OutOfRange(alloc::format!("k = {k} exceeds r = {r}")));
    }
    if n < q as usize * r {
        return Err(Error::OutOfRange(alloc::format!(
            "need N >= q*r, got N = {n}, q*r = {}",
            q as usize * r
        )));
    }
    let s = n - q as usize * r;
    let alpha = Alphabet::characters_t();
    let mut contributions = alloc::vec::Vec::new();
    for i in 0..=r {
        for j in 0..=s {
            let euler = conormal_euler(r, s, FixedPoint { i, j })?;
            let weight = LaurentPolynomial::monomial(
                &alpha,
                &[((r - i) * k) as i32, (i * k) as i32, 0],
                1,
            )?;
            let image = fixed_point_class(n, q as usize * i + j)?;
            // weight^k * [Q_{qi+j}] / euler, with euler's own monomial
            // denominator moved up into the numerator
            let num = &(&weight * &image) * euler.denominator();
            contributions.push(RationalClass::new(num, euler.numerator().clone())?);
        }
    }
    let total = RationalClass::sum(&contributions)?;
    let value = total.reduce().map_err(|e| match e {
        Error::InexactDivision => Error::InexactDivision,
        other => other,
    })?;
    let certificate = DivisionCertificate {
        fixed_points: (r + 1) * (s + 1),
        numerator_terms: total.numerator().num_terms(),
        denominator_terms: total.denominator().num_terms(),
        exact: true,
    };
    Ok(PushforwardResult { q, r, n, k, value, certificate })
}

/// Regroups a pushforward value by powers of t and rewrites each coefficient
/// in e₁, e₂; the result lives over {e1, e2, t}.
pub fn symmetrize_with_t(value: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    let target = Alphabet::symmetric_t();
    let mut out = LaurentPolynomial::zero(&target);
    for (tdeg, coeff) in value.coefficients_of("t")? {
        let chars = coeff.rename(&Alphabet::characters(), &[])?;
        let sym = from_characters(&chars)?;
        let lifted = sym.polynomial().map_variables(
            &target,
            &[
                LaurentPolynomial::variable(&target, "e1").unwrap(),
                LaurentPolynomial::variable(&target, "e2").unwrap(),
            ],
        )?;
        out = &out + &lifted.mul_variable_pow("t", tdeg)?;
    }
    Ok(out)
}

/// Pushforward followed by the chart relation t ↦ (ab)², rewritten in the
/// symmetric basis. For (2,1,6,0) and (2,1,6,1) these are the two relations
/// presenting K₀(ℳ₂); for (3,1,6,·) and (3,2,6,0) the complement relations.
pub fn pushforward_on_moduli_chart(
    q: u32,
    r: usize,
    n: usize,
    k: usize,
) -> Result<SymmetricExpression> {
    let result = pushforward_power_map(q, r, n, k)?;
    let alpha = Alphabet::characters_t();
    let image = LaurentPolynomial::parse(&alpha, "a^2*b^2").unwrap();
    let substituted = result.value.substitute("t", &image)?;
    let chars = substituted.rename(&Alphabet::characters(), &[])?;
    from_characters(&chars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ktproj::proj_presentation;
    use crate::symfun::complete_homogeneous;

    fn p(s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(&Alphabet::characters_t(), s).unwrap()
    }

    #[test]
    fn conormal_euler_on_the_line() {
        let ab = conormal_euler(1, 0, FixedPoint { i: 0, j: 0 }).unwrap();
        let expect = RationalClass::new(p("a - b"), p("a")).unwrap();
        assert!(ab.equals(&expect).unwrap());
        // as a Laurent class this is 1 - a^-1*b
        assert!(ab
            .equals(&RationalClass::from_polynomial(p("1 - a^-1*b")))
            .unwrap());
        let other = conormal_euler(1, 0, FixedPoint { i: 1, j: 0 }).unwrap();
        assert!(other
            .equals(&RationalClass::from_polynomial(p("1 - a*b^-1")))
            .unwrap());
        let trivial = conormal_euler(0, 0, FixedPoint { i: 0, j: 0 }).unwrap();
        assert!(trivial
            .equals(&RationalClass::from_polynomial(p("1")))
            .unwrap());
        assert!(conormal_euler(1, 0, FixedPoint { i: 2, j: 0 }).is_err());
    }

    #[test]
    fn veronese_pushforwards() {
        let k0 = pushforward_power_map(2, 1, 2, 0).unwrap();
        assert_eq!(k0.value, p("1 - a^2*b^2*t^-2"));
        assert!(k0.certificate.exact);
        assert_eq!(k0.certificate.fixed_points, 2);
        let k1 = pushforward_power_map(2, 1, 2, 1).unwrap();
        assert_eq!(k1.value, &p("a + b") * &p("1 - a*b*t^-1"));
    }

    #[test]
    fn cube_map_pushforward_matches_h_expression() {
        // (tau_1)_*(1) = t^-3 e2^4 h10 - t^-2 e2^2 h2 h6 + t^-1 e2 h2^2 + 1
        let got = symmetrize_with_t(&pushforward_power_map(3, 1, 6, 0).unwrap().value).unwrap();
        let st = Alphabet::symmetric_t();
        let lift = |s: &SymmetricExpression| {
            s.polynomial()
                .map_variables(
                    &st,
                    &[
                        LaurentPolynomial::variable(&st, "e1").unwrap(),
                        LaurentPolynomial::variable(&st, "e2").unwrap(),
                    ],
                )
                .unwrap()
        };
        let h10 = lift(&complete_homogeneous(10).unwrap());
        let h6 = lift(&complete_homogeneous(6).unwrap());
        let h2 = lift(&complete_homogeneous(2).unwrap());
        let tp = |s: &str| LaurentPolynomial::parse(&st, s).unwrap();
        let expect = &(&(&tp("e2^4*t^-3") * &h10) - &(&tp("e2^2*t^-2") * &(&h2 * &h6)))
            + &(&(&tp("e2*t^-1") * &h2.pow(2)) + &tp("1"));
        assert_eq!(got, expect);
    }

    #[test]
    fn polynomiality_certificate_over_the_grid() {
        for q in [2u32, 3] {
            for r in 1..=3usize {
                for n in (q as usize * r)..=8 {
                    for k in 0..=r {
                        let res = pushforward_power_map(q, r, n, k).unwrap();
                        assert!(res.certificate.exact, "q={q} r={r} N={n} k={k}");
                        // symmetry under a <-> b
                        assert!(res.value.is_ab_symmetric().unwrap());
                        // t-exponents within [-N, 0]
                        for (e, _) in res.value.terms() {
                            assert!(e[2] <= 0 && e[2] >= -(n as i32));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pushforward_times_relation_lies_in_relation_ideal() {
        // projection-formula sanity: multiplying any pushforward by the
        // presentation relation stays divisible by the relation
        let rel = proj_presentation(4).relation;
        let val = pushforward_power_map(2, 1, 4, 1).unwrap().value;
        let prod = &val * &rel;
        assert_eq!(prod.exact_divide(&rel).unwrap(), val);
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(pushforward_power_map(4, 1, 2, 0).is_err());
        assert!(pushforward_power_map(2, 0, 2, 0).is_err());
        assert!(pushforward_power_map(2, 1, 1, 0).is_err());
        assert!(pushforward_power_map(2, 1, 2, 2).is_err());
    }
}
