//! Standard monomials of a zero-dimensional leading-term ideal: the
//! monomials not divisible by any leading monomial. Finiteness requires a
//! pure power of every variable among the leading monomials.

use alloc::vec::Vec;

use super::order::{mono_divides, Mono};
use crate::error::{Error, Result};

/// Enumerates all standard monomials, sorted lexicographically.
///
/// Errors with [`Error::InfiniteRank`] when some variable has no pure power
/// in the leading-term ideal.
pub fn standard_monomials(lms: &[Mono], nvars: usize) -> Result<Vec<Mono>> {
    if lms.iter().any(|m| m.iter().all(|&e| e == 0)) {
        return Ok(Vec::new()); // unit ideal
    }
    let mut bounds = Vec::with_capacity(nvars);
    for v in 0..nvars {
        let bound = lms
            .iter()
            .filter(|m| m.iter().enumerate().all(|(w, &e)| w == v || e == 0))
            .map(|m| m[v])
            .filter(|&e| e > 0)
            .min();
        match bound {
            Some(b) => bounds.push(b),
            None => return Err(Error::InfiniteRank),
        }
    }
    let capacity: u64 = bounds.iter().map(|&b| b as u64).product();
    if capacity > 50_000_000 {
        return Err(Error::ResourceLimit(alloc::format!(
            "staircase bounding box of size {capacity}"
        )));
    }
    let mut out = Vec::new();
    let mut current = Mono::from_elem(0, nvars);
    enumerate(&mut current, 0, &bounds, lms, &mut out);
    Ok(out)
}

fn enumerate(current: &mut Mono, var: usize, bounds: &[i32], lms: &[Mono], out: &mut Vec<Mono>) {
    if var == bounds.len() {
        if !lms.iter().any(|m| mono_divides(m, current)) {
            out.push(current.clone());
        }
        return;
    }
    for e in 0..bounds[var] {
        current[var] = e;
        enumerate(current, var + 1, bounds, lms, out);
    }
    current[var] = 0;
}
