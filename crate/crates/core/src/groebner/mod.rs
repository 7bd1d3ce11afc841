//! Strong Gröbner bases over ℤ for ideals in Laurent polynomial rings:
//! membership, elimination, intersection, and quotient reports (ranks over ℚ
//! and over 𝔽_p, freeness, ℤ-bases).
//!
//! Laurent rings are polynomialized: every invertible variable x gets an
//! auxiliary inverse x_inv together with the unit relation x·x_inv − 1, which
//! joins every generator set automatically.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

pub mod field;
pub mod order;
pub mod report;
pub mod staircase;
pub mod strong;
mod zpoly;

pub use order::{Mono, TermOrder};
pub use report::{candidate_basis_check, quotient_report, quotient_report_with_gb, CandidateBasisCheck, QuotientReport};
pub use strong::Budget;
pub use zpoly::ZPoly;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::laurent::{Exponents, LaurentPolynomial};

/// Default reduction-step budget (overridable everywhere budgets appear).
pub const DEFAULT_STEP_BUDGET: u64 = 10_000_000;

/// A Laurent ring made polynomial by adjoining inverse variables.
#[derive(Clone, Debug)]
pub struct PolynomializedRing {
    alphabet: Alphabet,
    names: Vec<String>,
    inverse_of: Vec<Option<usize>>,
}

impl PolynomializedRing {
    pub fn new(alphabet: &Alphabet) -> Self {
        let mut names: Vec<String> = alphabet.names().to_vec();
        let mut inverse_of = alloc::vec![None; alphabet.len()];
        for idx in alphabet.invertible_indices() {
            inverse_of[idx] = Some(names.len());
            names.push(alloc::format!("{}_inv", alphabet.name(idx)));
        }
        PolynomializedRing { alphabet: alphabet.clone(), names, inverse_of }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn variable_names(&self) -> &[String] {
        &self.names
    }

    /// The relations x·x_inv − 1, one per invertible variable.
    pub fn unit_relations(&self, order: &TermOrder) -> Vec<ZPoly> {
        let mut out = Vec::new();
        for (idx, inv) in self.inverse_of.iter().enumerate() {
            if let Some(inv_idx) = inv {
                let mut prod = Mono::from_elem(0, self.nvars());
                prod[idx] = 1;
                prod[*inv_idx] = 1;
                let one = Mono::from_elem(0, self.nvars());
                out.push(ZPoly::from_unsorted(
                    alloc::vec![(prod, BigInt::from(1)), (one, BigInt::from(-1))],
                    order,
                ));
            }
        }
        out
    }

    pub fn to_poly(&self, f: &LaurentPolynomial, order: &TermOrder) -> Result<ZPoly> {
        if f.alphabet() != &self.alphabet {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet.describe(),
                found: f.alphabet().describe(),
            });
        }
        let mut terms = Vec::with_capacity(f.num_terms());
        for (exps, coeff) in f.terms() {
            let mut mono = Mono::from_elem(0, self.nvars());
            for (i, &e) in exps.iter().enumerate() {
                if e >= 0 {
                    mono[i] = e;
                } else {
                    mono[self.inverse_of[i].expect("negative exponent on invertible var")] = -e;
                }
            }
            terms.push((mono, coeff.clone()));
        }
        Ok(ZPoly::from_unsorted(terms, order))
    }

    pub fn to_laurent(&self, p: &ZPoly) -> LaurentPolynomial {
        let mut acc = LaurentPolynomial::zero(&self.alphabet);
        for (mono, coeff) in &p.terms {
            let mut exps: Exponents = Exponents::from_elem(0, self.alphabet.len());
            for i in 0..self.alphabet.len() {
                exps[i] = mono[i];
                if let Some(inv_idx) = self.inverse_of[i] {
                    exps[i] -= mono[inv_idx];
                }
            }
            let term = LaurentPolynomial::monomial(&self.alphabet, &exps, coeff.clone())
                .expect("invertible bookkeeping is consistent");
            acc = &acc + &term;
        }
        acc
    }

    /// Formats a polynomialized monomial as a Laurent monomial string.
    pub fn mono_to_string(&self, mono: &Mono) -> String {
        let p = ZPoly { terms: alloc::vec![(mono.clone(), BigInt::from(1))] };
        self.to_laurent(&p).to_string()
    }

    /// grevlex over all polynomial variables.
    pub fn grevlex_order(&self) -> TermOrder {
        TermOrder::grevlex(self.nvars())
    }

    /// Block elimination order: the listed Laurent variables (with their
    /// inverse twins) form the leading block, then all remaining inverse
    /// variables, then the remaining base variables.
    pub fn elimination_order(&self, drop: &[&str]) -> Result<TermOrder> {
        let leading = self.poly_indices_with_twins(drop)?;
        let mut inverse_block = Vec::new();
        let mut base_block = Vec::new();
        for v in 0..self.nvars() {
            if leading.contains(&v) {
                continue;
            }
            if v >= self.alphabet.len() {
                inverse_block.push(v);
            } else {
                base_block.push(v);
            }
        }
        let mut blocks = alloc::vec![leading];
        if !inverse_block.is_empty() {
            blocks.push(inverse_block);
        }
        if !base_block.is_empty() {
            blocks.push(base_block);
        }
        Ok(TermOrder::blocks(blocks, self.nvars()))
    }

    fn poly_indices_with_twins(&self, names: &[&str]) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for name in names {
            let idx = self.alphabet.index_of(name)?;
            out.push(idx);
            if let Some(inv_idx) = self.inverse_of[idx] {
                out.push(inv_idx);
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

/// A reduced strong Gröbner basis over ℤ, together with its ring and order.
#[derive(Clone, Debug)]
pub struct StrongGroebnerBasis {
    ring: PolynomializedRing,
    order: TermOrder,
    elements: Vec<ZPoly>,
}

impl StrongGroebnerBasis {
    pub fn ring(&self) -> &PolynomializedRing {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[ZPoly] {
        &self.elements
    }

    pub fn elements_laurent(&self) -> Vec<LaurentPolynomial> {
        self.elements.iter().map(|p| self.ring.to_laurent(p)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.elements.iter().map(|p| p.leading_mono().clone()).collect()
    }

    /// The largest absolute leading coefficient.
    pub fn leading_coefficient_bound(&self) -> BigInt {
        self.elements
            .iter()
            .map(|p| p.leading_coeff().abs())
            .max()
            .unwrap_or_else(|| BigInt::from(1))
    }

    pub fn all_leading_coefficients_unit(&self) -> bool {
        self.elements.iter().all(|p| p.leading_coeff().abs() == BigInt::from(1))
    }

    /// Canonical remainder of `f`; zero exactly when f lies in the ideal.
    pub fn normal_form(&self, f: &LaurentPolynomial) -> Result<LaurentPolynomial> {
        let p = self.ring.to_poly(f, &self.order)?;
        let mut budget = Budget::new(u64::MAX);
        let nf = strong::normal_form(p, &self.elements, &self.order, &mut budget)?;
        Ok(self.ring.to_laurent(&nf))
    }

    pub fn contains(&self, f: &LaurentPolynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub(crate) fn normal_form_poly(&self, f: &LaurentPolynomial) -> Result<ZPoly> {
        let p = self.ring.to_poly(f, &self.order)?;
        let mut budget = Budget::new(u64::MAX);
        strong::normal_form(p, &self.elements, &self.order, &mut budget)
    }

    /// Generators of the elimination ideal: the basis elements free of the
    /// dropped variables. Requires the order's leading block to consist of
    /// exactly those variables (and their inverse twins).
    pub fn eliminate(&self, drop: &[&str]) -> Result<Vec<LaurentPolynomial>> {
        let drop_indices = self.ring.poly_indices_with_twins(drop)?;
        let mut leading: Vec<usize> = self.order.leading_block().to_vec();
        leading.sort_unstable();
        if leading != drop_indices {
            return Err(Error::OrderMismatch(alloc::format!(
                "leading block {:?} does not match dropped variables {:?}",
                leading,
                drop_indices
            )));
        }
        Ok(self
            .elements
            .iter()
            .filter(|p| p.support_avoids(&drop_indices))
            .map(|p| self.ring.to_laurent(p))
            .collect())
    }
}

/// Reduced strong Gröbner basis over ℤ of the Laurent ideal generated by
/// `gens` (unit relations added automatically). Deterministic for a fixed
/// order: the reduced basis is canonical.
pub fn strong_gb(
    gens: &[LaurentPolynomial],
    ring: &PolynomializedRing,
    order: TermOrder,
    budget: &mut Budget,
) -> Result<StrongGroebnerBasis> {
    let mut polys = Vec::with_capacity(gens.len());
    for g in gens {
        polys.push(ring.to_poly(g, &order)?);
    }
    polys.extend(ring.unit_relations(&order));
    if polys.iter().all(|p| p.is_zero()) {
        return Ok(StrongGroebnerBasis { ring: ring.clone(), order, elements: Vec::new() });
    }
    let elements = strong::strong_groebner(polys, &order, budget)?;
    Ok(StrongGroebnerBasis { ring: ring.clone(), order, elements })
}

/// Convenience wrapper: grevlex strong GB over the given alphabet.
pub fn strong_gb_grevlex(
    gens: &[LaurentPolynomial],
    alphabet: &Alphabet,
    budget: &mut Budget,
) -> Result<StrongGroebnerBasis> {
    let ring = PolynomializedRing::new(alphabet);
    let order = ring.grevlex_order();
    strong_gb(gens, &ring, order, budget)
}

/// Generators of I ∩ J via the tag construction: eliminate w from
/// w·I + (1−w)·J in the ring extended by a fresh tag variable.
pub fn ideal_intersect(
    i_gens: &[LaurentPolynomial],
    j_gens: &[LaurentPolynomial],
    alphabet: &Alphabet,
    budget: &mut Budget,
) -> Result<Vec<LaurentPolynomial>> {
    let tagged = alphabet.with_tag("w")?;
    let ring = PolynomializedRing::new(&tagged);
    let order = ring.elimination_order(&["w"])?;
    let w = LaurentPolynomial::variable(&tagged, "w")?;
    let one_minus_w = &LaurentPolynomial::one(&tagged) - &w;
    let mut gens = Vec::with_capacity(i_gens.len() + j_gens.len());
    for f in i_gens {
        gens.push(&w * &f.rename(&tagged, &[])?);
    }
    for g in j_gens {
        gens.push(&one_minus_w * &g.rename(&tagged, &[])?);
    }
    let gb = strong_gb(&gens, &ring, order, budget)?;
    let eliminated = gb.eliminate(&["w"])?;
    eliminated
        .iter()
        .map(|f| f.rename(alphabet, &[]))
        .collect::<Result<Vec<_>>>()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(alpha: &Alphabet, s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(alpha, s).unwrap()
    }

    #[test]
    fn polynomialization_roundtrip() {
        let alpha = Alphabet::characters_t();
        let ring = PolynomializedRing::new(&alpha);
        assert_eq!(ring.nvars(), 6);
        let order = ring.grevlex_order();
        let f = parse(&alpha, "1 - a^2*b^2*t^-2 + 3*a^-1");
        let p = ring.to_poly(&f, &order).unwrap();
        assert_eq!(ring.to_laurent(&p), f);
    }

    #[test]
    fn laurent_unit_relation_collapses() {
        // 1 - x^2 x_inv^2 lies in the ideal generated by the unit relation
        let alpha = Alphabet::new(&["x"], &["x"]).unwrap();
        let ring = PolynomializedRing::new(&alpha);
        let mut budget = Budget::new(100_000);
        let gb = strong_gb(&[], &ring, ring.grevlex_order(), &mut budget).unwrap();
        assert_eq!(gb.elements().len(), 1);
        // x^2 * x^-2 = 1 trivially on the Laurent side; the polynomialized
        // engine must agree that x^2*xinv^2 - 1 reduces to zero
        let f = parse(&alpha, "1") ;
        let nf = gb.normal_form(&f).unwrap();
        assert_eq!(nf, parse(&alpha, "1"));
        assert!(gb.contains(&LaurentPolynomial::zero(&alpha)).unwrap());
    }

    #[test]
    fn membership_in_normalizer_ideal() {
        let alpha = Alphabet::normalizer();
        let ring = PolynomializedRing::new(&alpha);
        let mut budget = Budget::new(1_000_000);
        let gens = [parse(&alpha, "gam^2 - 1"), parse(&alpha, "eps - eps*gam")];
        let gb = strong_gb(&gens, &ring, ring.grevlex_order(), &mut budget).unwrap();
        // gam^2 lam - lam reduces to zero, gam*lam does not
        assert!(gb.contains(&parse(&alpha, "gam^2*lam - lam")).unwrap());
        assert!(!gb.contains(&parse(&alpha, "gam*lam")).unwrap());
        assert_eq!(
            gb.normal_form(&parse(&alpha, "gam^2*lam")).unwrap(),
            parse(&alpha, "lam")
        );
    }

    #[test]
    fn elimination_requires_matching_block() {
        let alpha = Alphabet::new(&["x", "y"], &[]).unwrap();
        let ring = PolynomializedRing::new(&alpha);
        let mut budget = Budget::new(100_000);
        let gens = [parse(&alpha, "x - y")];
        let gb = strong_gb(&gens, &ring, ring.grevlex_order(), &mut budget).unwrap();
        assert!(matches!(gb.eliminate(&["x"]), Err(Error::OrderMismatch(_))));

        let order = ring.elimination_order(&["x"]).unwrap();
        let gb = strong_gb(&gens, &ring, order, &mut budget).unwrap();
        // principal ideal (x - y) meets Z[y] trivially
        assert!(gb.eliminate(&["x"]).unwrap().is_empty());

        let gens = [parse(&alpha, "x - y"), parse(&alpha, "y - 3")];
        let order = ring.elimination_order(&["x"]).unwrap();
        let gb = strong_gb(&gens, &ring, order, &mut budget).unwrap();
        assert_eq!(gb.eliminate(&["x"]).unwrap(), alloc::vec![parse(&alpha, "y - 3")]);
    }

    #[test]
    fn intersections() {
        let alpha = Alphabet::new(&["x", "y"], &[]).unwrap();
        let mut budget = Budget::new(1_000_000);
        // (x) ∩ (y) = (xy)
        let inter = ideal_intersect(
            &[parse(&alpha, "x")],
            &[parse(&alpha, "y")],
            &alpha,
            &mut budget,
        )
        .unwrap();
        let gb = strong_gb_grevlex(&inter, &alpha, &mut budget).unwrap();
        assert!(gb.contains(&parse(&alpha, "x*y")).unwrap());
        let gb_xy = strong_gb_grevlex(&[parse(&alpha, "x*y")], &alpha, &mut budget).unwrap();
        for f in &inter {
            assert!(gb_xy.contains(f).unwrap());
        }

        // (2) ∩ (3) = (6) in Z[x]
        let ax = Alphabet::new(&["x"], &[]).unwrap();
        let inter = ideal_intersect(
            &[parse(&ax, "2")],
            &[parse(&ax, "3")],
            &ax,
            &mut budget,
        )
        .unwrap();
        let gb = strong_gb_grevlex(&inter, &ax, &mut budget).unwrap();
        assert!(gb.contains(&parse(&ax, "6")).unwrap());
        assert!(!gb.contains(&parse(&ax, "2")).unwrap());
        assert!(!gb.contains(&parse(&ax, "3")).unwrap());

        // idempotence: I ∩ I = I, verified by mutual membership
        let gens = [parse(&alpha, "x^2 + y"), parse(&alpha, "3*y")];
        let inter = ideal_intersect(&gens, &gens, &alpha, &mut budget).unwrap();
        let gb_i = strong_gb_grevlex(&gens, &alpha, &mut budget).unwrap();
        let gb_inter = strong_gb_grevlex(&inter, &alpha, &mut budget).unwrap();
        for f in &inter {
            assert!(gb_i.contains(f).unwrap());
        }
        for f in &gens {
            assert!(gb_inter.contains(f).unwrap());
        }
    }
}
