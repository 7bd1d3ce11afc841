//! Dense-in-terms polynomial representation used by the Gröbner engines:
//! a vector of (monomial, coefficient) pairs kept sorted descending in the
//! active term order, leading term first.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::order::{mono_mul, Mono, TermOrder};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZPoly {
    pub terms: Vec<(Mono, BigInt)>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_unsorted(mut terms: Vec<(Mono, BigInt)>, order: &TermOrder) -> Self {
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Mono, BigInt)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 += c;
                    if last.1.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((m, c));
            }
        }
        ZPoly { terms: out }
    }

    pub fn leading(&self) -> (&Mono, &BigInt) {
        let (m, c) = &self.terms[0];
        (m, c)
    }

    pub fn leading_mono(&self) -> &Mono {
        &self.terms[0].0
    }

    pub fn leading_coeff(&self) -> &BigInt {
        &self.terms[0].1
    }

    /// Flips the global sign when the leading coefficient is negative.
    pub fn normalize_sign(mut self) -> Self {
        if !self.is_zero() && self.terms[0].1.is_negative() {
            for (_, c) in &mut self.terms {
                *c = -&*c;
            }
        }
        self
    }

    /// self − c · x^shift · g, merged in one pass.
    pub fn sub_scaled_shifted(&self, c: &BigInt, shift: &[i32], g: &ZPoly, order: &TermOrder) -> ZPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < g.terms.len() {
            let gm = mono_mul(&g.terms[j].0, shift);
            match order.cmp(&self.terms[i].0, &gm) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm, -(c * &g.terms[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = &self.terms[i].1 - c * &g.terms[j].1;
                    if !coeff.is_zero() {
                        out.push((gm, coeff));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        while i < self.terms.len() {
            out.push(self.terms[i].clone());
            i += 1;
        }
        while j < g.terms.len() {
            out.push((mono_mul(&g.terms[j].0, shift), -(c * &g.terms[j].1)));
            j += 1;
        }
        ZPoly { terms: out }
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn add(&self, other: &ZPoly, order: &TermOrder) -> ZPoly {
        let minus_one = BigInt::from(-1);
        let shift = Mono::from_elem(0, order.nvars());
        self.sub_scaled_shifted(&minus_one, &shift, other, order)
    }

    /// gcd of all coefficients; zero polynomial gives 0.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = num_integer::Integer::gcd(&g, c);
            if g == BigInt::from(1) {
                break;
            }
        }
        g
    }

    pub fn divide_content(mut self) -> Self {
        let g = self.content();
        if g.is_zero() || g == BigInt::from(1) {
            return self;
        }
        for (_, c) in &mut self.terms {
            *c = &*c / &g;
        }
        self
    }

    pub fn support_avoids(&self, vars: &[usize]) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| vars.iter().all(|&v| m[v] == 0))
    }
}
