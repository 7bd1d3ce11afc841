//! Quotient reports: rank over ℚ from the standard monomials of a
//! rational-coefficient GB, ranks mod p from 𝔽_p GBs, a freeness verdict
//! justified by the leading-coefficient bound of the strong ℤ-basis, and
//! optional candidate ℤ-basis verification through a unimodular change of
//! basis.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::field::{field_groebner, PrimeFieldEngine, RationalEngine};
use super::staircase::standard_monomials;
use super::strong::Budget;
use super::{strong_gb, Mono, PolynomializedRing, StrongGroebnerBasis};
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;

/// Verification record for a proposed ℤ-basis of the quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateBasisCheck {
    pub monomials: Vec<String>,
    pub cardinality_ok: bool,
    pub unimodular: bool,
    pub determinant: Option<String>,
    pub passed: bool,
    pub detail: String,
}

/// Rank and torsion data for a presented quotient ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub rank_q: usize,
    /// None records an infinite rank mod that prime (torsion blow-up).
    pub rank_mod_p: BTreeMap<u64, Option<usize>>,
    pub free: bool,
    pub basis: Vec<String>,
    pub primes: Vec<u64>,
    /// Largest absolute leading coefficient of the reduced strong ℤ-basis;
    /// torsion primes necessarily divide one of the leading coefficients,
    /// so testing every prime up to this bound is exhaustive.
    pub leading_coeff_bound: u64,
    pub candidate: Option<CandidateBasisCheck>,
}

fn primes_up_to(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= n {
        if (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0) {
            out.push(p);
        }
        p += 1;
    }
    out
}

/// Fraction-free Bareiss determinant; exact over ℤ.
fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(pivot) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, pivot);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

fn candidate_check(
    gb: &StrongGroebnerBasis,
    std_monomials: &[Mono],
    candidates: &[LaurentPolynomial],
) -> CandidateBasisCheck {
    let monomials: Vec<String> = candidates.iter().map(|c| c.to_string()).collect();
    let cardinality_ok = candidates.len() == std_monomials.len();
    if !cardinality_ok {
        return CandidateBasisCheck {
            monomials,
            cardinality_ok,
            unimodular: false,
            determinant: None,
            passed: false,
            detail: alloc::format!(
                "expected {} monomials, got {}",
                std_monomials.len(),
                candidates.len()
            ),
        };
    }
    if !gb.all_leading_coefficients_unit() {
        return CandidateBasisCheck {
            monomials,
            cardinality_ok,
            unimodular: false,
            determinant: None,
            passed: false,
            detail: "standard monomials do not form a Z-basis: non-unit leading coefficient"
                .into(),
        };
    }
    let index: BTreeMap<&Mono, usize> =
        std_monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let n = std_monomials.len();
    let mut matrix = alloc::vec![alloc::vec![BigInt::zero(); n]; n];
    for (row, cand) in candidates.iter().enumerate() {
        let nf = match gb.normal_form_poly(cand) {
            Ok(nf) => nf,
            Err(e) => {
                return CandidateBasisCheck {
                    monomials,
                    cardinality_ok,
                    unimodular: false,
                    determinant: None,
                    passed: false,
                    detail: alloc::format!("normal form failed: {e}"),
                }
            }
        };
        for (mono, coeff) in &nf.terms {
            match index.get(mono) {
                Some(&col) => matrix[row][col] = coeff.clone(),
                None => {
                    return CandidateBasisCheck {
                        monomials,
                        cardinality_ok,
                        unimodular: false,
                        determinant: None,
                        passed: false,
                        detail: alloc::format!(
                            "normal form leaves the standard-monomial lattice at {}",
                            gb.ring().mono_to_string(mono)
                        ),
                    }
                }
            }
        }
    }
    let det = determinant(matrix);
    let unimodular = det.abs().is_one();
    CandidateBasisCheck {
        monomials,
        cardinality_ok,
        unimodular,
        determinant: Some(det.to_string()),
        passed: unimodular,
        detail: if unimodular {
            "unimodular change of basis".into()
        } else {
            alloc::format!("determinant {det} is not a unit")
        },
    }
}

/// Verifies a candidate ℤ-basis against an already computed strong basis.
pub fn candidate_basis_check(
    gb: &StrongGroebnerBasis,
    candidates: &[LaurentPolynomial],
) -> Result<CandidateBasisCheck> {
    let std = standard_monomials(&gb.leading_monomials(), gb.ring().nvars())?;
    Ok(candidate_check(gb, &std, candidates))
}

/// Computes the full quotient report of ℤ[alphabet]/(gens).
///
/// The prime set is extended by every prime up to the largest leading
/// coefficient of the strong ℤ-basis, which bounds all possible torsion.
pub fn quotient_report(
    gens: &[LaurentPolynomial],
    alphabet: &Alphabet,
    primes: &[u64],
    candidate_basis: Option<&[LaurentPolynomial]>,
    budget: &mut Budget,
) -> Result<QuotientReport> {
    Ok(quotient_report_with_gb(gens, alphabet, primes, candidate_basis, budget)?.0)
}

/// As [`quotient_report`], additionally returning the strong ℤ-basis for
/// follow-up membership queries.
pub fn quotient_report_with_gb(
    gens: &[LaurentPolynomial],
    alphabet: &Alphabet,
    primes: &[u64],
    candidate_basis: Option<&[LaurentPolynomial]>,
    budget: &mut Budget,
) -> Result<(QuotientReport, StrongGroebnerBasis)> {
    let ring = PolynomializedRing::new(alphabet);
    let order = ring.grevlex_order();
    let zgb = strong_gb(gens, &ring, order.clone(), budget)?;

    let lc_bound_big = zgb.leading_coefficient_bound();
    let lc_bound: u64 = lc_bound_big
        .clone()
        .try_into()
        .map_err(|_| Error::ResourceLimit(alloc::format!("leading coefficient bound {lc_bound_big}")))?;
    if lc_bound > 1_000_000 {
        return Err(Error::ResourceLimit(alloc::format!(
            "cannot enumerate primes up to {lc_bound}"
        )));
    }

    // rank over Q from a genuine rational-coefficient GB, cross-checked
    // against the leading monomials of the strong Z-basis
    let mut rational_inputs = Vec::with_capacity(gens.len());
    for g in gens {
        rational_inputs.push(ring.to_poly(g, &order)?);
    }
    rational_inputs.extend(ring.unit_relations(&order));
    let (_, q_lms) = field_groebner(&RationalEngine, rational_inputs.clone(), &order, budget)?;
    let std_q = standard_monomials(&q_lms, ring.nvars())?;
    let std_z = standard_monomials(&zgb.leading_monomials(), ring.nvars())?;
    assert_eq!(
        std_q, std_z,
        "rational and integral staircases must agree on the free part"
    );
    let rank_q = std_q.len();

    let mut prime_set: Vec<u64> = primes.to_vec();
    prime_set.extend(primes_up_to(lc_bound));
    prime_set.sort_unstable();
    prime_set.dedup();

    let mut rank_mod_p = BTreeMap::new();
    for &p in &prime_set {
        let engine = PrimeFieldEngine::new(p);
        let inputs: Vec<_> = rational_inputs
            .iter()
            .map(|z| engine.from_zpoly(z, &order))
            .collect();
        let (_, lms) = field_groebner(&engine, inputs, &order, budget)?;
        let rank = match standard_monomials(&lms, ring.nvars()) {
            Ok(std) => Some(std.len()),
            Err(Error::InfiniteRank) => None,
            Err(e) => return Err(e),
        };
        rank_mod_p.insert(p, rank);
    }
    let free = rank_mod_p.values().all(|r| *r == Some(rank_q));

    let basis: Vec<String> = std_q.iter().map(|m| ring.mono_to_string(m)).collect();
    let candidate = candidate_basis.map(|cands| candidate_check(&zgb, &std_q, cands));

    let report = QuotientReport {
        rank_q,
        rank_mod_p,
        free,
        basis,
        primes: prime_set,
        leading_coeff_bound: lc_bound,
        candidate,
    };
    Ok((report, zgb))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(alpha: &Alphabet, s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(alpha, s).unwrap()
    }

    #[test]
    fn principal_square_quotient() {
        // Z[x]/(x^2): rank 2, free, basis {1, x}
        let alpha = Alphabet::new(&["x"], &[]).unwrap();
        let mut budget = Budget::new(100_000);
        let report = quotient_report(
            &[parse(&alpha, "x^2")],
            &alpha,
            &[2, 3, 5, 7, 11, 13],
            None,
            &mut budget,
        )
        .unwrap();
        assert_eq!(report.rank_q, 2);
        assert!(report.free);
        assert_eq!(report.basis, alloc::vec!["1".to_string(), "x".to_string()]);
    }

    #[test]
    fn torsion_quotient_is_not_free() {
        // Z[x]/(2, x): rank 0 over Q but one dimension mod 2
        let alpha = Alphabet::new(&["x"], &[]).unwrap();
        let mut budget = Budget::new(100_000);
        let report = quotient_report(
            &[parse(&alpha, "2"), parse(&alpha, "x")],
            &alpha,
            &[3],
            None,
            &mut budget,
        )
        .unwrap();
        assert_eq!(report.rank_q, 0);
        assert_eq!(report.rank_mod_p[&2], Some(1));
        assert!(!report.free);
        // the bound forces 2 into the prime set even though only 3 was given
        assert!(report.primes.contains(&2));
    }

    #[test]
    fn infinite_rank_detected() {
        let alpha = Alphabet::new(&["x", "y"], &[]).unwrap();
        let mut budget = Budget::new(100_000);
        let r = quotient_report(&[parse(&alpha, "x*y")], &alpha, &[2], None, &mut budget);
        assert!(matches!(r, Err(Error::InfiniteRank)));
    }

    #[test]
    fn candidate_basis_unimodularity() {
        let alpha = Alphabet::new(&["x"], &[]).unwrap();
        let mut budget = Budget::new(100_000);
        let good = [parse(&alpha, "1"), parse(&alpha, "x + 1")];
        let report = quotient_report(
            &[parse(&alpha, "x^2")],
            &alpha,
            &[2, 3],
            Some(&good),
            &mut budget,
        )
        .unwrap();
        assert!(report.candidate.as_ref().unwrap().passed);

        let bad = [parse(&alpha, "1"), parse(&alpha, "2*x")];
        let report = quotient_report(
            &[parse(&alpha, "x^2")],
            &alpha,
            &[2, 3],
            Some(&bad),
            &mut budget,
        )
        .unwrap();
        let check = report.candidate.unwrap();
        assert!(!check.passed);
        assert_eq!(check.determinant.as_deref(), Some("2"));

        let wrong_count = [parse(&alpha, "1")];
        let report = quotient_report(
            &[parse(&alpha, "x^2")],
            &alpha,
            &[2, 3],
            Some(&wrong_count),
            &mut budget,
        )
        .unwrap();
        assert!(!report.candidate.unwrap().cardinality_ok);
    }

    #[test]
    fn bareiss_determinant() {
        let m = alloc::vec![
            alloc::vec![BigInt::from(2), BigInt::from(0), BigInt::from(1)],
            alloc::vec![BigInt::from(1), BigInt::from(3), BigInt::from(2)],
            alloc::vec![BigInt::from(0), BigInt::from(1), BigInt::from(4)],
        ];
        assert_eq!(determinant(m), BigInt::from(21));
        let singular = alloc::vec![
            alloc::vec![BigInt::from(1), BigInt::from(2)],
            alloc::vec![BigInt::from(2), BigInt::from(4)],
        ];
        assert_eq!(determinant(singular), BigInt::zero());
    }

    #[test]
    fn laurent_quotient_with_inverses() {
        // Z[lam, lam^-1]/(lam^2 - 1) has rank 2: {1, lam}
        let alpha = Alphabet::new(&["lam"], &["lam"]).unwrap();
        let mut budget = Budget::new(100_000);
        let report = quotient_report(
            &[parse(&alpha, "lam^2 - 1")],
            &alpha,
            &[2, 3, 5],
            None,
            &mut budget,
        )
        .unwrap();
        assert_eq!(report.rank_q, 2);
        assert!(report.free);
    }
}
