//! The ℤ-bases listed for K₀(ℳ₂), K₀(Δ₁) and K₀(M̄₂∖Δ₁), encoded as
//! monomial data. The Δ₁ list is stated in symbols (ε, δ, γ) whose δ admits
//! two readings — δ = λ and δ = γλ⁻¹ — so it is kept abstract as exponent
//! triples and materialized per reading.

use alloc::vec::Vec;

use crate::alphabet::Alphabet;
use crate::error::Result;
use crate::laurent::LaurentPolynomial;

/// 18 monomials in ε, λ±¹ spanning K₀(ℳ₂).
pub const M2_BASIS: &[&str] = &[
    "1",
    "eps",
    "eps^2",
    "eps^3",
    "eps^4",
    "eps^4*lam^-1",
    "eps^3*lam^-1",
    "eps^2*lam^-1",
    "eps*lam",
    "eps*lam^2",
    "eps*lam^-1",
    "eps*lam^-2",
    "eps*lam^-3",
    "lam",
    "lam^2",
    "lam^-1",
    "lam^-2",
    "lam^-3",
];

/// 32 monomials in e₁, e₂±¹ spanning K₀(M̄₂∖Δ₁).
pub const COMPLEMENT_BASIS: &[&str] = &[
    "e1^5",
    "e1^4",
    "e1^4*e2^-1",
    "e1^3",
    "e1^3*e2",
    "e1^3*e2^-1",
    "e1^3*e2^2",
    "e1^3*e2^-2",
    "e1^2",
    "e1^2*e2",
    "e1^2*e2^-1",
    "e1^2*e2^2",
    "e1^2*e2^-2",
    "e1^2*e2^-3",
    "e1",
    "e1*e2",
    "e1*e2^-1",
    "e1*e2^2",
    "e1*e2^-2",
    "e1*e2^3",
    "e1*e2^-3",
    "e1*e2^4",
    "e1*e2^-4",
    "e2",
    "e2^2",
    "e2^3",
    "e2^4",
    "e2^-1",
    "e2^-2",
    "e2^-3",
    "e2^-4",
    "1",
];

/// The 65 listed Δ₁ monomials as (ε-degree, δ-degree, γ-degree) triples.
pub fn delta1_basis_exponents() -> Vec<(i32, i32, i32)> {
    let mut out = Vec::with_capacity(65);
    let rows: [(i32, &[i32]); 6] = [
        (5, &[0, 1, -1, -2]),
        (4, &[0, 1, -1, 2, -2, -3]),
        (3, &[0, 1, -1, 2, -2, 3, -3, 4]),
        (2, &[0, 1, -1, 2, -2, 3, -3, 4, -4, -5]),
        (1, &[0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6]),
        (0, &[1, 2, 3, 4, 5, 6, -1, -2, -3, -4, -5, -6, -7]),
    ];
    for (i, js) in rows {
        for &j in js {
            out.push((i, j, 0));
        }
    }
    for j in [1, 2, 3, 4, -1, -2, -3, -4, -5] {
        out.push((0, j, 1));
    }
    out.push((0, 0, 1));
    out.push((0, 0, 0));
    out
}

/// How the δ symbol of the Δ₁ list is interpreted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaReading {
    /// δ = λ
    Lambda,
    /// δ = γλ⁻¹ (the boundary line-bundle class)
    GammaLambdaInv,
}

impl DeltaReading {
    pub fn label(self) -> &'static str {
        match self {
            DeltaReading::Lambda => "delta = lam",
            DeltaReading::GammaLambdaInv => "delta = gam*lam^-1",
        }
    }
}

/// Materializes the Δ₁ monomial list over {eps, lam, gam} under a reading.
pub fn delta1_basis(reading: DeltaReading) -> Result<Vec<LaurentPolynomial>> {
    let alpha = Alphabet::normalizer();
    delta1_basis_exponents()
        .into_iter()
        .map(|(i, j, k)| {
            let exps = match reading {
                DeltaReading::Lambda => [i, j, k],
                DeltaReading::GammaLambdaInv => [i, -j, j + k],
            };
            LaurentPolynomial::monomial(&alpha, &exps, 1)
        })
        .collect()
}

pub fn parse_basis(alphabet: &Alphabet, monomials: &[&str]) -> Result<Vec<LaurentPolynomial>> {
    monomials
        .iter()
        .map(|s| LaurentPolynomial::parse(alphabet, s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cardinalities() {
        assert_eq!(M2_BASIS.len(), 18);
        assert_eq!(COMPLEMENT_BASIS.len(), 32);
        assert_eq!(delta1_basis_exponents().len(), 65);
    }

    #[test]
    fn lists_parse_and_are_distinct() {
        let m2 = parse_basis(&Alphabet::hodge(), M2_BASIS).unwrap();
        let mut seen = m2.clone();
        seen.dedup();
        assert_eq!(seen.len(), 18);
        let comp = parse_basis(&Alphabet::symmetric(), COMPLEMENT_BASIS).unwrap();
        assert_eq!(comp.len(), 32);
        for reading in [DeltaReading::Lambda, DeltaReading::GammaLambdaInv] {
            let b = delta1_basis(reading).unwrap();
            assert_eq!(b.len(), 65);
            for m in &b {
                assert!(m.is_unit_monomial() || m.num_terms() == 1);
            }
        }
    }
}
