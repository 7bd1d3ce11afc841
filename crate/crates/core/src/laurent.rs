//! Multivariate Laurent polynomials over ℤ and formal quotients of them.
//!
//! A [`LaurentPolynomial`] is a finite map from exponent vectors to nonzero
//! integer coefficients over a fixed [`Alphabet`]; negative exponents are only
//! allowed on invertible variables. Terms are kept in lexicographic order of
//! their exponent vectors, which fixes the serialization once and for all.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

mod text;

/// Exponent vector; entry order follows the alphabet.
pub type Exponents = SmallVec<[i32; 8]>;

/// An exact multivariate Laurent polynomial over ℤ.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    alphabet: Alphabet,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(alphabet: &Alphabet) -> Self {
        LaurentPolynomial { alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    pub fn one(alphabet: &Alphabet) -> Self {
        Self::constant(alphabet, BigInt::one())
    }

    pub fn constant(alphabet: &Alphabet, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exponents::from_elem(0, alphabet.len()), c);
        }
        LaurentPolynomial { alphabet: alphabet.clone(), terms }
    }

    /// A single term `c · x₀^e₀ ⋯ xₙ^eₙ`.
    pub fn monomial(alphabet: &Alphabet, exps: &[i32], c: impl Into<BigInt>) -> Result<Self> {
        if exps.len() != alphabet.len() {
            return Err(Error::OutOfRange("exponent vector length".into()));
        }
        for (i, &e) in exps.iter().enumerate() {
            if e < 0 && !alphabet.is_invertible(i) {
                return Err(Error::NegativeExponent(alphabet.name(i).to_string()));
            }
        }
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exponents::from_slice(exps), c);
        }
        Ok(LaurentPolynomial { alphabet: alphabet.clone(), terms })
    }

    pub fn variable(alphabet: &Alphabet, name: &str) -> Result<Self> {
        Self::variable_pow(alphabet, name, 1)
    }

    pub fn variable_pow(alphabet: &Alphabet, name: &str, exp: i32) -> Result<Self> {
        let idx = alphabet.index_of(name)?;
        let mut exps = alloc::vec![0i32; alphabet.len()];
        exps[idx] = exp;
        Self::monomial(alphabet, &exps, 1)
    }

    /// Parses the shared textual grammar `term (± term)*` with
    /// `term = [int][*var^int]*`, e.g. `1 - a^2*b^2*t^-2`.
    pub fn parse(alphabet: &Alphabet, input: &str) -> Result<Self> {
        text::parse(alphabet, input)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// True iff the polynomial is a single term with coefficient ±1 whose
    /// support lies entirely on invertible variables.
    pub fn is_unit_monomial(&self) -> bool {
        if self.terms.len() != 1 {
            return false;
        }
        let (exps, c) = self.terms.iter().next().unwrap();
        if !(c.is_one() || (-c).is_one()) {
            return false;
        }
        exps.iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || self.alphabet.is_invertible(i))
    }

    fn check_alphabet(&self, other: &Self) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                expected: self.alphabet.describe(),
                found: other.alphabet.describe(),
            })
        }
    }

    fn insert_term(terms: &mut BTreeMap<Exponents, BigInt>, exps: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_alphabet(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert_term(&mut terms, e.clone(), c.clone());
        }
        Ok(LaurentPolynomial { alphabet: self.alphabet.clone(), terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_alphabet(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert_term(&mut terms, e.clone(), -c.clone());
        }
        Ok(LaurentPolynomial { alphabet: self.alphabet.clone(), terms })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_alphabet(other)?;
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = e1.clone();
                for (x, y) in e.iter_mut().zip(e2.iter()) {
                    *x += *y;
                }
                Self::insert_term(&mut terms, e, c1 * c2);
            }
        }
        Ok(LaurentPolynomial { alphabet: self.alphabet.clone(), terms })
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero(&self.alphabet);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v * &c)).collect();
        LaurentPolynomial { alphabet: self.alphabet.clone(), terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.alphabet);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact image of `self` under `var ↦ value`.
    ///
    /// If `var` is invertible the value must be a unit monomial, so that
    /// negative powers substitute soundly.
    pub fn substitute(&self, var: &str, value: &Self) -> Result<Self> {
        self.check_alphabet(value)?;
        let idx = self.alphabet.index_of(var)?;
        let invertible = self.alphabet.is_invertible(idx);
        if invertible && !value.is_unit_monomial() {
            return Err(Error::NonUnitSubstitution(var.to_string()));
        }
        let mut powers: BTreeMap<i32, LaurentPolynomial> = BTreeMap::new();
        let mut result = Self::zero(&self.alphabet);
        for (e, c) in &self.terms {
            let k = e[idx];
            let power = powers
                .entry(k)
                .or_insert_with(|| value.monomial_or_general_pow(k))
                .clone();
            let mut rest = e.clone();
            rest[idx] = 0;
            let term = LaurentPolynomial {
                alphabet: self.alphabet.clone(),
                terms: BTreeMap::from([(rest, c.clone())]),
            };
            result = &result + &(&term * &power);
        }
        Ok(result)
    }

    /// `self^k` for a unit monomial (any k ∈ ℤ), or the plain power for k ≥ 0.
    fn monomial_or_general_pow(&self, k: i32) -> Self {
        if k >= 0 && !self.is_unit_monomial() {
            return self.pow(k as u32);
        }
        if self.is_zero() {
            // 0^k with k >= 0 handled above; k < 0 cannot arise for valid input
            return self.clone();
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let exps: Exponents = e.iter().map(|&x| x * k).collect();
        let coeff = if c.is_negative() && k.rem_euclid(2) == 1 {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        LaurentPolynomial {
            alphabet: self.alphabet.clone(),
            terms: BTreeMap::from([(exps, coeff)]),
        }
    }

    /// Ring homomorphism determined by an image for every variable.
    ///
    /// Variables that occur with negative exponents must map to unit
    /// monomials of the target alphabet.
    pub fn map_variables(&self, target: &Alphabet, images: &[LaurentPolynomial]) -> Result<Self> {
        if images.len() != self.alphabet.len() {
            return Err(Error::OutOfRange("one image per variable required".into()));
        }
        for img in images {
            if img.alphabet != *target {
                return Err(Error::AlphabetMismatch {
                    expected: target.describe(),
                    found: img.alphabet.describe(),
                });
            }
        }
        let mut power_cache: BTreeMap<(usize, i32), LaurentPolynomial> = BTreeMap::new();
        let mut result = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if k < 0 && !images[i].is_unit_monomial() {
                    return Err(Error::NonUnitSubstitution(self.alphabet.name(i).to_string()));
                }
                let p = power_cache
                    .entry((i, k))
                    .or_insert_with(|| images[i].monomial_or_general_pow(k));
                term = &term * p;
            }
            result = &result + &term;
        }
        Ok(result)
    }

    /// Transports the polynomial onto another alphabet, renaming variables by
    /// the given pairs and matching the rest by name. Source variables missing
    /// from the target are fine as long as they do not occur.
    pub fn rename(&self, target: &Alphabet, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut images = Vec::with_capacity(self.alphabet.len());
        for (idx, n) in self.alphabet.names().iter().enumerate() {
            let new_name = pairs
                .iter()
                .find(|(from, _)| from == n)
                .map(|(_, to)| *to)
                .unwrap_or(n.as_str());
            match LaurentPolynomial::variable(target, new_name) {
                Ok(img) => images.push(img),
                Err(e) => {
                    if self.occurs(idx) {
                        return Err(e);
                    }
                    images.push(LaurentPolynomial::zero(target));
                }
            }
        }
        self.map_variables(target, &images)
    }

    fn occurs(&self, idx: usize) -> bool {
        self.terms.keys().any(|e| e[idx] != 0)
    }

    /// Returns q with `self = q · g`, or an error when the division is not
    /// exact. The result is verified by multiplying back.
    pub fn exact_divide(&self, g: &Self) -> Result<Self> {
        self.check_alphabet(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let nvars = self.alphabet.len();
        let shift_f = self.min_exponents();
        let shift_g = g.min_exponents();
        let f_shifted = self.shift(&shift_f.iter().map(|&x| -x).collect::<Vec<_>>());
        let g_shifted = g.shift(&shift_g.iter().map(|&x| -x).collect::<Vec<_>>());

        let (g_lead_e, g_lead_c) = g_shifted.terms.iter().next_back().unwrap();
        let mut rem = f_shifted.terms;
        let mut quo: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        while let Some((re, rc)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let mut qe = Exponents::from_elem(0, nvars);
            let mut divisible = true;
            for i in 0..nvars {
                let d = re[i] - g_lead_e[i];
                if d < 0 {
                    divisible = false;
                    break;
                }
                qe[i] = d;
            }
            if !divisible || !(&rc % g_lead_c).is_zero() {
                return Err(Error::InexactDivision);
            }
            let qc = &rc / g_lead_c;
            for (e, c) in &g_shifted.terms {
                let mut te = qe.clone();
                for (x, y) in te.iter_mut().zip(e.iter()) {
                    *x += *y;
                }
                Self::insert_term(&mut rem, te, -(&qc * c));
            }
            quo.insert(qe, qc);
        }
        let mut shift_q = Vec::with_capacity(nvars);
        for i in 0..nvars {
            shift_q.push(shift_f[i] - shift_g[i]);
        }
        let q = LaurentPolynomial { alphabet: self.alphabet.clone(), terms: quo }.shift(&shift_q);
        for (i, &s) in shift_q.iter().enumerate() {
            if s < 0 && !self.alphabet.is_invertible(i) && q.min_exponents()[i] < 0 {
                return Err(Error::InexactDivision);
            }
        }
        if &(&q * g) != self {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }

    /// Exchanges the exponents of variables `a` and `b` in every term.
    pub fn swap_ab(&self) -> Result<Self> {
        self.swap_variables("a", "b")
    }

    pub fn swap_variables(&self, x: &str, y: &str) -> Result<Self> {
        let ix = self.alphabet.index_of(x)?;
        let iy = self.alphabet.index_of(y)?;
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2.swap(ix, iy);
                (e2, c.clone())
            })
            .collect();
        Ok(LaurentPolynomial { alphabet: self.alphabet.clone(), terms })
    }

    /// True when the polynomial is fixed by the a ↔ b involution.
    pub fn is_ab_symmetric(&self) -> Result<bool> {
        Ok(self.swap_ab()? == *self)
    }

    /// Per-variable minimum exponent over all terms (0 for the zero polynomial).
    pub fn min_exponents(&self) -> Vec<i32> {
        let mut mins = alloc::vec![0i32; self.alphabet.len()];
        let mut first = true;
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                if first || x < mins[i] {
                    mins[i] = x;
                }
            }
            if !e.is_empty() {
                first = false;
            }
        }
        if self.terms.is_empty() {
            mins.fill(0);
        }
        mins
    }

    fn shift(&self, by: &[i32]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = e.clone();
                for (x, s) in e2.iter_mut().zip(by.iter()) {
                    *x += *s;
                }
                (e2, c.clone())
            })
            .collect();
        LaurentPolynomial { alphabet: self.alphabet.clone(), terms }
    }

    /// Multiplies by `x^k` for a single variable.
    pub fn mul_variable_pow(&self, var: &str, k: i32) -> Result<Self> {
        let idx = self.alphabet.index_of(var)?;
        let mut by = alloc::vec![0i32; self.alphabet.len()];
        by[idx] = k;
        let shifted = self.shift(&by);
        if k < 0 && !self.alphabet.is_invertible(idx) && shifted.min_exponents()[idx] < 0 {
            return Err(Error::NegativeExponent(var.to_string()));
        }
        Ok(shifted)
    }

    /// Splits the polynomial by the exponent of one variable: the value at
    /// key k is the coefficient of `var^k`, with that variable zeroed out.
    pub fn coefficients_of(&self, var: &str) -> Result<BTreeMap<i32, LaurentPolynomial>> {
        let idx = self.alphabet.index_of(var)?;
        let mut out: BTreeMap<i32, LaurentPolynomial> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e[idx];
            let mut rest = e.clone();
            rest[idx] = 0;
            let slot = out.entry(k).or_insert_with(|| Self::zero(&self.alphabet));
            Self::insert_term(&mut slot.terms, rest, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        Ok(out)
    }

    /// Evaluates at an integer point; requires every exponent to be
    /// non-negative (clear denominators first for genuinely Laurent input).
    pub fn evaluate_integer(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.alphabet.len() {
            return Err(Error::OutOfRange("one value per variable required".into()));
        }
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k < 0 {
                    return Err(Error::NegativeExponent(self.alphabet.name(i).to_string()));
                }
                term *= point[i].pow(k as u32);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// The lexicographically largest term, if any.
    pub fn lex_leading(&self) -> Option<(&[i32], &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (e.as_slice(), c))
    }

    /// Human-readable difference of two polynomials, one line per monomial
    /// whose coefficients disagree. Empty when equal.
    pub fn term_diff(&self, other: &Self) -> Vec<String> {
        let mut lines = Vec::new();
        let zero = BigInt::zero();
        let mut keys: Vec<&Exponents> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for e in keys {
            let lhs = self.terms.get(e).unwrap_or(&zero);
            let rhs = other.terms.get(e).unwrap_or(&zero);
            if lhs != rhs {
                lines.push(alloc::format!(
                    "{}: {} vs {}",
                    text::format_monomial(&self.alphabet, e),
                    lhs,
                    rhs
                ));
            }
        }
        lines
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::format_polynomial(f, &self.alphabet, &self.terms)
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                self.$checked(rhs).expect("operands share an alphabet")
            }
        }
        impl $trait for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        LaurentPolynomial { alphabet: self.alphabet.clone(), terms }
    }
}

/// A formal quotient of two Laurent polynomials; used only inside the
/// localization engine, where every accumulated sum is certified to cancel
/// back to a polynomial.
#[derive(Clone, Debug)]
pub struct RationalClass {
    numerator: LaurentPolynomial,
    denominator: LaurentPolynomial,
}

impl RationalClass {
    pub fn new(numerator: LaurentPolynomial, denominator: LaurentPolynomial) -> Result<Self> {
        numerator.check_alphabet(&denominator)?;
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalClass { numerator, denominator })
    }

    pub fn from_polynomial(p: LaurentPolynomial) -> Self {
        let one = LaurentPolynomial::one(p.alphabet());
        RationalClass { numerator: p, denominator: one }
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.denominator
    }

    /// Cross-multiplication equality.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.numerator.check_alphabet(&other.numerator)?;
        Ok(&self.numerator * &other.denominator == &other.numerator * &self.denominator)
    }

    /// Sum over a single running common denominator; no gcd cancellation
    /// happens here — reduction is one exact division at the very end.
    pub fn sum(classes: &[RationalClass]) -> Result<RationalClass> {
        let first = classes.first().ok_or(Error::DivisionByZero)?;
        let mut num = first.numerator.clone();
        let mut den = first.denominator.clone();
        for c in &classes[1..] {
            num = &(&num * &c.denominator) + &(&c.numerator * &den);
            den = &den * &c.denominator;
        }
        RationalClass::new(num, den)
    }

    /// Reduces to a Laurent polynomial when the denominator divides the
    /// numerator exactly.
    pub fn reduce(&self) -> Result<LaurentPolynomial> {
        self.numerator.exact_divide(&self.denominator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abt() -> Alphabet {
        Alphabet::characters_t()
    }

    fn p(alpha: &Alphabet, s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(alpha, s).unwrap()
    }

    #[test]
    fn veronese_product() {
        let alpha = abt();
        let f = p(&alpha, "1 - a*b*t^-1");
        let g = p(&alpha, "1 + a*b*t^-1");
        assert_eq!(&f * &g, p(&alpha, "1 - a^2*b^2*t^-2"));
    }

    #[test]
    fn additive_identity() {
        let alpha = abt();
        let f = p(&alpha, "3*a^2 - b*t^-1 + 7");
        assert_eq!(&f + &LaurentPolynomial::zero(&alpha), f);
    }

    #[test]
    fn difference_of_squares() {
        let alpha = Alphabet::characters();
        let f = p(&alpha, "a + b");
        let g = p(&alpha, "a - b");
        assert_eq!(&f * &g, p(&alpha, "a^2 - b^2"));
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let f = p(&abt(), "a");
        let g = p(&Alphabet::characters(), "a");
        assert!(matches!(f.checked_add(&g), Err(Error::AlphabetMismatch { .. })));
    }

    #[test]
    fn substitute_defining_relation_vanishes() {
        let alpha = Alphabet::new(&["t", "e2"], &["t", "e2"]).unwrap();
        let f = p(&alpha, "1 - t*e2^-2");
        let image = p(&alpha, "e2^2");
        assert!(f.substitute("t", &image).unwrap().is_zero());
    }

    #[test]
    fn substitute_gamma_by_lambda_delta() {
        let alpha = Alphabet::new(&["gam", "lam", "del"], &["gam", "lam", "del"]).unwrap();
        let f = p(&alpha, "gam*lam^-1");
        let image = p(&alpha, "lam*del");
        assert_eq!(f.substitute("gam", &image).unwrap(), p(&alpha, "del"));
    }

    #[test]
    fn substitute_inverse_power_of_unit() {
        let alpha = abt();
        let f = p(&alpha, "a*b*t^-1");
        let image = p(&alpha, "a^2*b^2");
        assert_eq!(f.substitute("t", &image).unwrap(), p(&alpha, "a^-1*b^-1"));
    }

    #[test]
    fn substitute_non_unit_into_invertible_rejected() {
        let alpha = abt();
        let f = p(&alpha, "t^-1");
        let image = p(&alpha, "a + b");
        assert!(matches!(
            f.substitute("t", &image),
            Err(Error::NonUnitSubstitution(_))
        ));
    }

    #[test]
    fn exact_division_examples() {
        let ab = Alphabet::characters();
        assert_eq!(
            p(&ab, "a^2 - b^2").exact_divide(&p(&ab, "a - b")).unwrap(),
            p(&ab, "a + b")
        );
        let alpha = abt();
        let f = p(&alpha, "5*a - 2*b*t^-3");
        assert_eq!(f.exact_divide(&LaurentPolynomial::one(&alpha)).unwrap(), f);
        assert_eq!(
            p(&alpha, "1 - a^2*b^2*t^-2")
                .exact_divide(&p(&alpha, "1 - a*b*t^-1"))
                .unwrap(),
            p(&alpha, "1 + a*b*t^-1")
        );
    }

    #[test]
    fn division_error_cases_are_distinct() {
        let ab = Alphabet::characters();
        let f = p(&ab, "a + 1");
        assert!(matches!(
            f.exact_divide(&LaurentPolynomial::zero(&ab)),
            Err(Error::DivisionByZero)
        ));
        // b alone is a unit of the Laurent ring, so division by it succeeds
        assert_eq!(f.exact_divide(&p(&ab, "b")).unwrap(), p(&ab, "a*b^-1 + b^-1"));
        assert!(matches!(
            f.exact_divide(&p(&ab, "b + 1")),
            Err(Error::InexactDivision)
        ));
        assert!(matches!(
            p(&ab, "3*a").exact_divide(&p(&ab, "2")),
            Err(Error::InexactDivision)
        ));
    }

    #[test]
    fn swap_examples() {
        let ab = Alphabet::characters();
        assert_eq!(p(&ab, "a^2*b").swap_ab().unwrap(), p(&ab, "a*b^2"));
        let sym = p(&ab, "a + b");
        assert_eq!(sym.swap_ab().unwrap(), sym);
    }

    #[test]
    fn rational_sum_of_veronese_weights() {
        let ab = Alphabet::characters();
        let den = p(&ab, "b - a");
        let c1 = RationalClass::new(p(&ab, "b"), den.clone()).unwrap();
        let c2 = RationalClass::new(p(&ab, "-a"), den).unwrap();
        let s = RationalClass::sum(&[c1, c2]).unwrap();
        assert_eq!(s.reduce().unwrap(), LaurentPolynomial::one(&ab));
    }

    #[test]
    fn rational_sum_identity_and_geometric_pair() {
        let ab = Alphabet::characters();
        let x = RationalClass::new(p(&ab, "a^2 - 3"), p(&ab, "b + 1")).unwrap();
        let zero = RationalClass::from_polynomial(LaurentPolynomial::zero(&ab));
        assert!(RationalClass::sum(&[x.clone(), zero]).unwrap().equals(&x).unwrap());

        let c1 = RationalClass::new(p(&ab, "1"), p(&ab, "1 - a^-1*b")).unwrap();
        let c2 = RationalClass::new(p(&ab, "1"), p(&ab, "1 - a*b^-1")).unwrap();
        let s = RationalClass::sum(&[c1, c2]).unwrap();
        assert_eq!(s.reduce().unwrap(), LaurentPolynomial::one(&ab));
    }

    #[test]
    fn zero_denominator_rejected() {
        let ab = Alphabet::characters();
        assert!(matches!(
            RationalClass::new(p(&ab, "1"), LaurentPolynomial::zero(&ab)),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn grouping_by_t_exponent() {
        let alpha = abt();
        let f = p(&alpha, "1 + a*b*t^-1 + 2*a*t^-1 - b^2*t^2");
        let groups = f.coefficients_of("t").unwrap();
        assert_eq!(groups[&0], p(&alpha, "1"));
        assert_eq!(groups[&-1], p(&alpha, "a*b + 2*a"));
        assert_eq!(groups[&2], p(&alpha, "-b^2"));
    }
}
