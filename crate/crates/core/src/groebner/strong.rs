//! Strong Gröbner bases over ℤ via Buchberger's algorithm with both
//! S-polynomials and gcd-combinations (G-polynomials).
//!
//! Strong reduction divides coefficients Euclideanly: the term c·m reduces by
//! g whenever LM(g) | m and ⌊c / lc(g)⌋ ≠ 0, with remainders kept in
//! [0, lc(g)). Leading coefficients are normalized positive, which together
//! with full tail reduction pins a unique canonical reduced basis.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::order::{mono_coprime, mono_div, mono_divides, mono_lcm, mono_total_degree, Mono, TermOrder};
use super::zpoly::ZPoly;
use crate::error::{Error, Result};

/// Shared reduction-step budget; one unit per elementary reduction.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn step(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { steps: self.used })
        } else {
            Ok(())
        }
    }
}

/// Full strong normal form of `f` against `basis`.
pub fn normal_form(f: ZPoly, basis: &[ZPoly], order: &TermOrder, budget: &mut Budget) -> Result<ZPoly> {
    let mut rem = f;
    let mut done: Vec<(Mono, BigInt)> = Vec::new();
    'terms: while !rem.is_zero() {
        let (m, c) = {
            let (m, c) = rem.leading();
            (m.clone(), c.clone())
        };
        for g in basis {
            if g.is_zero() || !mono_divides(g.leading_mono(), &m) {
                continue;
            }
            let q = c.div_floor(g.leading_coeff());
            if q.is_zero() {
                continue;
            }
            let shift = mono_div(&m, g.leading_mono()).unwrap();
            rem = rem.sub_scaled_shifted(&q, &shift, g, order);
            budget.step()?;
            continue 'terms;
        }
        done.push(rem.terms.remove(0));
    }
    Ok(ZPoly { terms: done })
}

/// S-polynomial: cancels the lcm of the two leading terms.
fn s_polynomial(f: &ZPoly, g: &ZPoly, order: &TermOrder) -> ZPoly {
    let (mf, cf) = f.leading();
    let (mg, cg) = g.leading();
    let m = mono_lcm(mf, mg);
    let l = cf.lcm(cg);
    let scaled = f.scale(&(&l / cf));
    let shift_f = mono_div(&m, mf).unwrap();
    let lifted = ZPoly {
        terms: scaled
            .terms
            .into_iter()
            .map(|(mm, cc)| (super::order::mono_mul(&mm, &shift_f), cc))
            .collect(),
    };
    let shift_g = mono_div(&m, mg).unwrap();
    lifted.sub_scaled_shifted(&(&l / cg), &shift_g, g, order)
}

/// G-polynomial: realizes gcd(lc f, lc g) on the lcm monomial via Bézout.
fn g_polynomial(f: &ZPoly, g: &ZPoly, order: &TermOrder) -> ZPoly {
    let (mf, cf) = f.leading();
    let (mg, cg) = g.leading();
    let m = mono_lcm(mf, mg);
    let ext = cf.extended_gcd(cg);
    let scaled = f.scale(&ext.x);
    let shift_f = mono_div(&m, mf).unwrap();
    let lifted = ZPoly {
        terms: scaled
            .terms
            .into_iter()
            .map(|(mm, cc)| (super::order::mono_mul(&mm, &shift_f), cc))
            .collect(),
    };
    let shift_g = mono_div(&m, mg).unwrap();
    lifted.sub_scaled_shifted(&-ext.y, &shift_g, g, order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum PairKind {
    Gcd,
    Syzygy,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct PairEntry {
    key: Vec<i64>,
    kind: PairKind,
    i: usize,
    j: usize,
}

struct PairQueue {
    heap: alloc::collections::BinaryHeap<core::cmp::Reverse<PairEntry>>,
    pending_syzygy: alloc::collections::BTreeSet<(usize, usize)>,
}

impl PairQueue {
    fn new() -> Self {
        PairQueue {
            heap: alloc::collections::BinaryHeap::new(),
            pending_syzygy: alloc::collections::BTreeSet::new(),
        }
    }

    fn push_pairs(&mut self, basis: &[ZPoly], i: usize, j: usize, order: &TermOrder) {
        let (mi, ci) = basis[i].leading();
        let (mj, cj) = basis[j].leading();
        let lcm = mono_lcm(mi, mj);
        let key = order.sort_key(&lcm);
        // product criterion over a Euclidean domain: the S-pair may be
        // skipped only when the leading monomials AND the leading
        // coefficients are coprime
        let coeff_gcd = ci.gcd(cj);
        if !(mono_coprime(mi, mj) && coeff_gcd.is_one()) {
            self.heap.push(core::cmp::Reverse(PairEntry {
                key: key.clone(),
                kind: PairKind::Syzygy,
                i,
                j,
            }));
            self.pending_syzygy.insert((i, j));
        }
        // the gcd-combination is redundant when either coefficient divides
        // the other
        if &coeff_gcd != ci.min(cj) {
            self.heap.push(core::cmp::Reverse(PairEntry { key, kind: PairKind::Gcd, i, j }));
        }
    }

    fn pop(&mut self) -> Option<PairEntry> {
        let entry = self.heap.pop()?.0;
        if entry.kind == PairKind::Syzygy {
            self.pending_syzygy.remove(&(entry.i, entry.j));
        }
        Some(entry)
    }

    fn is_pending(&self, i: usize, j: usize) -> bool {
        let key = if i < j { (i, j) } else { (j, i) };
        self.pending_syzygy.contains(&key)
    }
}

/// Chain criterion over ℤ: the syzygy of the pair (i, j) is a term
/// combination of the syzygies through k whenever LM(k) divides the lcm
/// monomial and lc(k) divides the lcm coefficient; the pair may be dropped
/// once both neighbor pairs have been handled.
fn chain_redundant(basis: &[ZPoly], queue: &PairQueue, i: usize, j: usize) -> bool {
    let (mi, ci) = basis[i].leading();
    let (mj, cj) = basis[j].leading();
    let lcm_mono = mono_lcm(mi, mj);
    let lcm_coeff = ci.lcm(cj);
    for k in 0..basis.len() {
        if k == i || k == j {
            continue;
        }
        let (mk, ck) = basis[k].leading();
        if mono_divides(mk, &lcm_mono)
            && (&lcm_coeff % ck).is_zero()
            && !queue.is_pending(i, k)
            && !queue.is_pending(k, j)
        {
            return true;
        }
    }
    false
}

/// Buchberger saturation: processes every S- and G-pair until all reduce to
/// zero. Returns a (non-reduced) strong Gröbner basis.
pub fn saturate(gens: Vec<ZPoly>, order: &TermOrder, budget: &mut Budget) -> Result<Vec<ZPoly>> {
    let mut basis: Vec<ZPoly> = Vec::new();
    for g in gens {
        let g = g.normalize_sign();
        if !g.is_zero() {
            basis.push(g);
        }
    }
    let mut queue = PairQueue::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            queue.push_pairs(&basis, i, j, order);
        }
    }
    while let Some(pair) = queue.pop() {
        if pair.kind == PairKind::Syzygy && chain_redundant(&basis, &queue, pair.i, pair.j) {
            continue;
        }
        let candidate = match pair.kind {
            PairKind::Syzygy => s_polynomial(&basis[pair.i], &basis[pair.j], order),
            PairKind::Gcd => g_polynomial(&basis[pair.i], &basis[pair.j], order),
        };
        let reduced = normal_form(candidate, &basis, order, budget)?.normalize_sign();
        if reduced.is_zero() {
            continue;
        }
        basis.push(reduced);
        let t = basis.len() - 1;
        for i in 0..t {
            queue.push_pairs(&basis, i, t, order);
        }
    }
    Ok(basis)
}

fn cmp_polys(a: &ZPoly, b: &ZPoly, order: &TermOrder) -> Ordering {
    let by_lead = order
        .cmp(a.leading_mono(), b.leading_mono())
        .then_with(|| a.leading_coeff().cmp(b.leading_coeff()));
    if by_lead != Ordering::Equal {
        return by_lead;
    }
    for ((ma, ca), (mb, cb)) in a.terms.iter().zip(b.terms.iter()) {
        let c = order.cmp(ma, mb).then_with(|| ca.cmp(cb));
        if c != Ordering::Equal {
            return c;
        }
    }
    a.terms.len().cmp(&b.terms.len())
}

/// Canonical reduced strong basis: minimal leading terms, every polynomial
/// fully reduced against the others, positive leading coefficients, sorted by
/// leading term. The result is the unique reduced strong GB of the ideal.
pub fn reduce_basis(mut basis: Vec<ZPoly>, order: &TermOrder, budget: &mut Budget) -> Result<Vec<ZPoly>> {
    loop {
        basis.retain(|g| !g.is_zero());
        basis.sort_by(|a, b| cmp_polys(a, b, order));
        basis.dedup();
        let mut changed = false;
        let mut next: Vec<ZPoly> = Vec::with_capacity(basis.len());
        for i in 0..basis.len() {
            let mut others: Vec<ZPoly> = Vec::with_capacity(basis.len() - 1);
            others.extend(next.iter().cloned());
            others.extend(basis[i + 1..].iter().cloned());
            let reduced = normal_form(basis[i].clone(), &others, order, budget)?.normalize_sign();
            if reduced != basis[i] {
                changed = true;
            }
            if !reduced.is_zero() {
                next.push(reduced);
            }
        }
        basis = next;
        if !changed {
            break;
        }
    }
    basis.sort_by(|a, b| cmp_polys(a, b, order));
    Ok(basis)
}

/// Strong Gröbner basis, reduced and canonical.
pub fn strong_groebner(gens: Vec<ZPoly>, order: &TermOrder, budget: &mut Budget) -> Result<Vec<ZPoly>> {
    let saturated = saturate(gens, order, budget)?;
    reduce_basis(saturated, order, budget)
}
