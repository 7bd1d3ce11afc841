//! Buchberger over a field, used for ranks: once with rational coefficients
//! (represented fraction-free by primitive integer polynomials) and once per
//! prime p with coefficients in 𝔽_p. Pair management follows the standard
//! Gebauer–Möller update.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::order::{mono_coprime, mono_div, mono_divides, mono_lcm, mono_mul, mono_total_degree, Mono, TermOrder};
use super::strong::Budget;
use super::zpoly::ZPoly;
use crate::error::Result;

pub trait FieldEngine {
    type Poly: Clone;

    fn is_zero(p: &Self::Poly) -> bool;
    fn leading_mono(p: &Self::Poly) -> &Mono;
    fn s_polynomial(&self, f: &Self::Poly, g: &Self::Poly, order: &TermOrder) -> Self::Poly;
    fn reduce(
        &self,
        f: Self::Poly,
        basis: &[Self::Poly],
        order: &TermOrder,
        budget: &mut Budget,
    ) -> Result<Self::Poly>;
}

/// Rational coefficients, carried fraction-free: polynomials are primitive
/// (content 1) with positive leading coefficient, and reduction steps
/// cross-multiply then strip content. Leading monomials agree with the GB
/// over ℚ of the same ideal.
pub struct RationalEngine;

impl FieldEngine for RationalEngine {
    type Poly = ZPoly;

    fn is_zero(p: &ZPoly) -> bool {
        p.is_zero()
    }

    fn leading_mono(p: &ZPoly) -> &Mono {
        p.leading_mono()
    }

    fn s_polynomial(&self, f: &ZPoly, g: &ZPoly, order: &TermOrder) -> ZPoly {
        let (mf, cf) = f.leading();
        let (mg, cg) = g.leading();
        let m = mono_lcm(mf, mg);
        let l = cf.lcm(cg);
        let shift_f = mono_div(&m, mf).unwrap();
        let scaled = f.scale(&(&l / cf));
        let lifted = ZPoly {
            terms: scaled
                .terms
                .into_iter()
                .map(|(mm, cc)| (mono_mul(&mm, &shift_f), cc))
                .collect(),
        };
        let shift_g = mono_div(&m, mg).unwrap();
        lifted
            .sub_scaled_shifted(&(&l / cg), &shift_g, g, order)
            .divide_content()
            .normalize_sign()
    }

    fn reduce(
        &self,
        f: ZPoly,
        basis: &[ZPoly],
        order: &TermOrder,
        budget: &mut Budget,
    ) -> Result<ZPoly> {
        let mut rem = f;
        let mut done = 0usize;
        'terms: while done < rem.terms.len() {
            let (m, c) = {
                let (m, c) = (&rem.terms[done].0, &rem.terms[done].1);
                (m.clone(), c.clone())
            };
            for g in basis {
                if g.is_zero() || !mono_divides(g.leading_mono(), &m) {
                    continue;
                }
                let lc = g.leading_coeff();
                let d = c.gcd(lc);
                let scale = lc / &d;
                if !scale.is_one() {
                    rem = rem.scale(&scale);
                }
                // the term is now (c·lc/d)·m and q·lc cancels it exactly
                let q = &c / &d;
                let shift = mono_div(&m, g.leading_mono()).unwrap();
                rem = rem.sub_scaled_shifted(&q, &shift, g, order);
                rem = rem.divide_content();
                budget.step()?;
                continue 'terms;
            }
            done += 1;
        }
        Ok(rem.normalize_sign())
    }
}

/// Coefficients in 𝔽_p for a prime p < 2³¹.
pub struct PrimeFieldEngine {
    pub p: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    pub terms: Vec<(Mono, u64)>,
}

impl FpPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_mono(&self) -> &Mono {
        &self.terms[0].0
    }
}

impl PrimeFieldEngine {
    pub fn new(p: u64) -> Self {
        debug_assert!(p >= 2 && p < (1 << 31));
        PrimeFieldEngine { p }
    }

    pub fn from_zpoly(&self, z: &ZPoly, order: &TermOrder) -> FpPoly {
        let p = BigInt::from(self.p);
        let mut terms: Vec<(Mono, u64)> = Vec::new();
        for (m, c) in &z.terms {
            let r = c.mod_floor(&p);
            let r: u64 = r.try_into().unwrap();
            if r != 0 {
                terms.push((m.clone(), r));
            }
        }
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        FpPoly { terms }
    }

    fn inv(&self, a: u64) -> u64 {
        // extended Euclid in i128; p is prime and a != 0 mod p
        let (mut t, mut new_t): (i128, i128) = (0, 1);
        let (mut r, mut new_r): (i128, i128) = (self.p as i128, (a % self.p) as i128);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        debug_assert_eq!(r, 1);
        t.rem_euclid(self.p as i128) as u64
    }

    fn sub_scaled_shifted(&self, f: &FpPoly, q: u64, shift: &[i32], g: &FpPoly, order: &TermOrder) -> FpPoly {
        let p = self.p as u128;
        let q = q as u128;
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < f.terms.len() && j < g.terms.len() {
            let gm = mono_mul(&g.terms[j].0, shift);
            match order.cmp(&f.terms[i].0, &gm) {
                Ordering::Greater => {
                    out.push(f.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = (p - (q * g.terms[j].1 as u128) % p) % p;
                    if c != 0 {
                        out.push((gm, c as u64));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ((f.terms[i].1 as u128 + p) - (q * g.terms[j].1 as u128) % p) % p;
                    if c != 0 {
                        out.push((gm, c as u64));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&f.terms[i..]);
        while j < g.terms.len() {
            let gm = mono_mul(&g.terms[j].0, shift);
            let c = (p - (q * g.terms[j].1 as u128) % p) % p;
            if c != 0 {
                out.push((gm, c as u64));
            }
            j += 1;
        }
        FpPoly { terms: out }
    }
}

impl FieldEngine for PrimeFieldEngine {
    type Poly = FpPoly;

    fn is_zero(p: &FpPoly) -> bool {
        p.is_zero()
    }

    fn leading_mono(p: &FpPoly) -> &Mono {
        p.leading_mono()
    }

    fn s_polynomial(&self, f: &FpPoly, g: &FpPoly, order: &TermOrder) -> FpPoly {
        let (mf, cf) = (&f.terms[0].0, f.terms[0].1);
        let (mg, cg) = (&g.terms[0].0, g.terms[0].1);
        let m = mono_lcm(mf, mg);
        let shift_f = mono_div(&m, mf).unwrap();
        let lifted = FpPoly {
            terms: f
                .terms
                .iter()
                .map(|(mm, cc)| (mono_mul(mm, &shift_f), *cc))
                .collect(),
        };
        let shift_g = mono_div(&m, mg).unwrap();
        // cancel with multiplier cf/cg on g
        let q = (cf as u128 * self.inv(cg) as u128 % self.p as u128) as u64;
        self.sub_scaled_shifted(&lifted, q, &shift_g, g, order)
    }

    fn reduce(
        &self,
        f: FpPoly,
        basis: &[FpPoly],
        order: &TermOrder,
        budget: &mut Budget,
    ) -> Result<FpPoly> {
        let mut rem = f;
        let mut done = 0usize;
        'terms: while done < rem.terms.len() {
            let (m, c) = (rem.terms[done].0.clone(), rem.terms[done].1);
            for g in basis {
                if g.is_zero() || !mono_divides(g.leading_mono(), &m) {
                    continue;
                }
                let q = (c as u128 * self.inv(g.terms[0].1) as u128 % self.p as u128) as u64;
                let shift = mono_div(&m, g.leading_mono()).unwrap();
                rem = self.sub_scaled_shifted(&rem, q, &shift, g, order);
                budget.step()?;
                continue 'terms;
            }
            done += 1;
        }
        Ok(rem)
    }
}

struct FieldPair {
    degree: i64,
    lcm: Mono,
    i: usize,
    j: usize,
}

/// Gebauer–Möller update: installs pairs against the new element `t`,
/// discarding multiples, coprime pairs, and chain-superseded old pairs.
fn update_pairs(pairs: &mut Vec<FieldPair>, lms: &[Mono], alive: &mut [bool], t: usize) {
    let mut candidates: Vec<FieldPair> = (0..t)
        .filter(|&i| alive[i])
        .map(|i| {
            let lcm = mono_lcm(&lms[i], &lms[t]);
            FieldPair { degree: mono_total_degree(&lcm), lcm, i, j: t }
        })
        .collect();
    let mut kept: Vec<FieldPair> = Vec::new();
    while let Some(pair) = candidates.pop() {
        let coprime = mono_coprime(&lms[pair.i], &lms[t]);
        let dominated = candidates
            .iter()
            .any(|q| mono_divides(&q.lcm, &pair.lcm) && q.lcm != pair.lcm)
            || kept.iter().any(|q| mono_divides(&q.lcm, &pair.lcm));
        if coprime || !dominated {
            kept.push(pair);
        }
    }
    kept.retain(|pair| !mono_coprime(&lms[pair.i], &lms[t]));
    pairs.retain(|pair| {
        !mono_divides(&lms[t], &pair.lcm)
            || mono_lcm(&lms[pair.i], &lms[t]) == pair.lcm
            || mono_lcm(&lms[pair.j], &lms[t]) == pair.lcm
    });
    pairs.extend(kept);
    for i in 0..t {
        if alive[i] && mono_divides(&lms[t], &lms[i]) {
            alive[i] = false;
        }
    }
}

/// Buchberger over a field with normal selection; returns the basis together
/// with its minimal set of leading monomials.
pub fn field_groebner<E: FieldEngine>(
    engine: &E,
    gens: Vec<E::Poly>,
    order: &TermOrder,
    budget: &mut Budget,
) -> Result<(Vec<E::Poly>, Vec<Mono>)> {
    let mut basis: Vec<E::Poly> = Vec::new();
    let mut lms: Vec<Mono> = Vec::new();
    let mut alive: Vec<bool> = Vec::new();
    let mut pairs: Vec<FieldPair> = Vec::new();
    for g in gens {
        if E::is_zero(&g) {
            continue;
        }
        let reduced = engine.reduce(g, &basis, order, budget)?;
        if E::is_zero(&reduced) {
            continue;
        }
        lms.push(E::leading_mono(&reduced).clone());
        basis.push(reduced);
        alive.push(true);
        let t = basis.len() - 1;
        update_pairs(&mut pairs, &lms, &mut alive, t);
    }
    while !pairs.is_empty() {
        let mut best = 0;
        for idx in 1..pairs.len() {
            let c = pairs[idx]
                .degree
                .cmp(&pairs[best].degree)
                .then_with(|| order.cmp(&pairs[idx].lcm, &pairs[best].lcm))
                .then_with(|| (pairs[idx].i, pairs[idx].j).cmp(&(pairs[best].i, pairs[best].j)));
            if c == Ordering::Less {
                best = idx;
            }
        }
        let pair = pairs.swap_remove(best);
        let s = engine.s_polynomial(&basis[pair.i], &basis[pair.j], order);
        let reduced = engine.reduce(s, &basis, order, budget)?;
        if E::is_zero(&reduced) {
            continue;
        }
        lms.push(E::leading_mono(&reduced).clone());
        basis.push(reduced);
        alive.push(true);
        let t = basis.len() - 1;
        update_pairs(&mut pairs, &lms, &mut alive, t);
    }
    // minimal leading monomials: drop any divisible by another
    let mut minimal: Vec<Mono> = Vec::new();
    for (i, m) in lms.iter().enumerate() {
        let redundant = lms
            .iter()
            .enumerate()
            .any(|(j, n)| j != i && (mono_divides(n, m) && (n != m || j < i)));
        if !redundant {
            minimal.push(m.clone());
        }
    }
    minimal.sort();
    minimal.dedup();
    Ok((basis, minimal))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(&[i32], i64)], order: &TermOrder) -> ZPoly {
        ZPoly::from_unsorted(
            terms
                .iter()
                .map(|(m, c)| (Mono::from_slice(m), BigInt::from(*c)))
                .collect(),
            order,
        )
    }

    #[test]
    fn rational_vs_classic_example() {
        // (x^2 + y^2 - 1, x - y): leading monomials over Q in grevlex are
        // {x, y^2}
        let order = TermOrder::grevlex(2);
        let mut budget = Budget::new(100_000);
        let f = poly(&[(&[2, 0], 1), (&[0, 2], 1), (&[0, 0], -1)], &order);
        let g = poly(&[(&[1, 0], 1), (&[0, 1], -1)], &order);
        let (_, lms) = field_groebner(&RationalEngine, alloc::vec![f, g], &order, &mut budget).unwrap();
        assert_eq!(
            lms,
            alloc::vec![Mono::from_slice(&[0, 2]), Mono::from_slice(&[1, 0])]
        );
    }

    #[test]
    fn fraction_free_reduction_strips_content() {
        let order = TermOrder::grevlex(1);
        let mut budget = Budget::new(1_000);
        // reduce 3x by 2x - 4: over Q the remainder is a constant
        let f = poly(&[(&[1], 3)], &order);
        let g = poly(&[(&[1], 2), (&[0], -4)], &order);
        let r = RationalEngine.reduce(f, &[g], &order, &mut budget).unwrap();
        assert_eq!(r, poly(&[(&[0], 1)], &order));
    }

    #[test]
    fn prime_field_grobner_detects_mod_p_collapse() {
        // 2x - 1 reduces to -1 mod 2, so the ideal is the whole ring
        let order = TermOrder::grevlex(1);
        let mut budget = Budget::new(1_000);
        let engine = PrimeFieldEngine::new(2);
        let z = poly(&[(&[1], 2), (&[0], -1)], &order);
        let f = engine.from_zpoly(&z, &order);
        assert_eq!(f.terms.len(), 1);
        let (_, lms) = field_groebner(&engine, alloc::vec![f], &order, &mut budget).unwrap();
        assert_eq!(lms, alloc::vec![Mono::from_slice(&[0])]);
    }

    #[test]
    fn fp_inverse() {
        let e = PrimeFieldEngine::new(13);
        for a in 1..13u64 {
            assert_eq!(a * e.inv(a) % 13, 1);
        }
    }
}
