//! Term orders: graded reverse lexicographic within variable blocks, blocks
//! compared left to right. A single block gives plain grevlex; an elimination
//! order puts the variables to be dropped in the leading block.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::laurent::Exponents;

pub type Mono = Exponents;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    blocks: Vec<Vec<usize>>,
    nvars: usize,
}

impl TermOrder {
    /// Graded reverse lexicographic over all variables.
    pub fn grevlex(nvars: usize) -> Self {
        TermOrder { blocks: alloc::vec![(0..nvars).collect()], nvars }
    }

    /// Block order with the given blocks, compared left to right and grevlex
    /// inside each block. Blocks must partition 0..nvars.
    pub fn blocks(blocks: Vec<Vec<usize>>, nvars: usize) -> Self {
        debug_assert_eq!(blocks.iter().map(|b| b.len()).sum::<usize>(), nvars);
        TermOrder { blocks, nvars }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn leading_block(&self) -> &[usize] {
        &self.blocks[0]
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn cmp(&self, x: &[i32], y: &[i32]) -> Ordering {
        for block in &self.blocks {
            let dx: i64 = block.iter().map(|&v| x[v] as i64).sum();
            let dy: i64 = block.iter().map(|&v| y[v] as i64).sum();
            match dx.cmp(&dy) {
                Ordering::Equal => {}
                other => return other,
            }
            // reverse lexicographic tie-break: the last variable of the
            // block with differing exponent decides, smaller exponent wins
            for &v in block.iter().rev() {
                match x[v].cmp(&y[v]) {
                    Ordering::Equal => {}
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
        }
        Ordering::Equal
    }

    pub fn max<'a>(&self, x: &'a [i32], y: &'a [i32]) -> &'a [i32] {
        if self.cmp(x, y) == Ordering::Less {
            y
        } else {
            x
        }
    }

    /// A vector whose lexicographic order coincides with this term order;
    /// lets monomials live in ordered containers without a comparator.
    pub fn sort_key(&self, x: &[i32]) -> alloc::vec::Vec<i64> {
        let mut key = alloc::vec::Vec::with_capacity(x.len() + self.blocks.len());
        for block in &self.blocks {
            key.push(block.iter().map(|&v| x[v] as i64).sum::<i64>());
            for &v in block.iter().rev() {
                key.push(-(x[v] as i64));
            }
        }
        key
    }
}

pub fn mono_mul(a: &[i32], b: &[i32]) -> Mono {
    a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()
}

/// Componentwise quotient a / b, defined when b divides a.
pub fn mono_div(a: &[i32], b: &[i32]) -> Option<Mono> {
    let mut out = Mono::with_capacity(a.len());
    for (x, y) in a.iter().zip(b.iter()) {
        if x < y {
            return None;
        }
        out.push(x - y);
    }
    Some(out)
}

pub fn mono_divides(b: &[i32], a: &[i32]) -> bool {
    b.iter().zip(a.iter()).all(|(y, x)| y <= x)
}

pub fn mono_lcm(a: &[i32], b: &[i32]) -> Mono {
    a.iter().zip(b.iter()).map(|(x, y)| *x.max(y)).collect()
}

pub fn mono_coprime(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| *x == 0 || *y == 0)
}

pub fn mono_is_one(a: &[i32]) -> bool {
    a.iter().all(|&x| x == 0)
}

pub fn mono_total_degree(a: &[i32]) -> i64 {
    a.iter().map(|&x| x as i64).sum()
}
