//! Variable alphabets: ordered lists of variable names with a designated
//! subset allowed to carry negative exponents.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq)]
struct Inner {
    names: Vec<String>,
    invertible: Vec<bool>,
}

/// An ordered alphabet of distinct variable names, a subset of which are
/// invertible (may appear with negative exponents).
///
/// Alphabets are immutable and cheap to clone; equality is by content, so two
/// independently constructed alphabets with the same names and invertibility
/// pattern compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet(Arc<Inner>);

impl Alphabet {
    /// Builds an alphabet from variable names and the invertible subset.
    pub fn new(names: &[&str], invertible: &[&str]) -> Result<Self> {
        let mut seen: Vec<&str> = Vec::new();
        for n in names {
            if seen.contains(n) {
                return Err(Error::Parse(alloc::format!("duplicate variable `{n}`")));
            }
            seen.push(n);
        }
        for inv in invertible {
            if !names.contains(inv) {
                return Err(Error::UnknownVariable((*inv).to_string()));
            }
        }
        let inv_flags = names.iter().map(|n| invertible.contains(n)).collect();
        Ok(Alphabet(Arc::new(Inner {
            names: names.iter().map(|n| n.to_string()).collect(),
            invertible: inv_flags,
        })))
    }

    /// The character alphabet {a, b} of the maximal torus T₂; both invertible.
    pub fn characters() -> Self {
        Self::new(&["a", "b"], &["a", "b"]).unwrap()
    }

    /// {a, b, t} with t the hyperplane class of a projective space; all invertible.
    pub fn characters_t() -> Self {
        Self::new(&["a", "b", "t"], &["a", "b", "t"]).unwrap()
    }

    /// The symmetric alphabet {e1, e2} with e2 invertible.
    pub fn symmetric() -> Self {
        Self::new(&["e1", "e2"], &["e2"]).unwrap()
    }

    /// {e1, e2, t} with e2 and t invertible.
    pub fn symmetric_t() -> Self {
        Self::new(&["e1", "e2", "t"], &["e2", "t"]).unwrap()
    }

    /// {eps, lam} with lam invertible — the Hodge-class presentation ring.
    pub fn hodge() -> Self {
        Self::new(&["eps", "lam"], &["lam"]).unwrap()
    }

    /// {eps, lam, gam} with lam, gam invertible — the representation ring of
    /// the torus normalizer.
    pub fn normalizer() -> Self {
        Self::new(&["eps", "lam", "gam"], &["lam", "gam"]).unwrap()
    }

    /// {eps, lam, del} with lam, del invertible — the boundary presentation ring.
    pub fn boundary() -> Self {
        Self::new(&["eps", "lam", "del"], &["lam", "del"]).unwrap()
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.0.names[idx]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.0
            .names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn is_invertible(&self, idx: usize) -> bool {
        self.0.invertible[idx]
    }

    pub fn invertible_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.0.invertible[i])
    }

    /// Extends the alphabet with a fresh non-invertible variable, placed first.
    pub fn with_tag(&self, tag: &str) -> Result<Self> {
        let mut names: Vec<&str> = alloc::vec![tag];
        names.extend(self.0.names.iter().map(|s| s.as_str()));
        let inv: Vec<&str> = self
            .0
            .names
            .iter()
            .enumerate()
            .filter(|(i, _)| self.0.invertible[*i])
            .map(|(_, s)| s.as_str())
            .collect();
        Self::new(&names, &inv)
    }

    pub(crate) fn describe(&self) -> String {
        let mut s = String::new();
        for (i, n) in self.0.names.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push_str(n);
            if self.0.invertible[i] {
                s.push('~');
            }
        }
        s
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({})", self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_alphabets() {
        let ab = Alphabet::characters();
        assert_eq!(ab.len(), 2);
        assert!(ab.is_invertible(0) && ab.is_invertible(1));

        let sym = Alphabet::symmetric();
        assert!(!sym.is_invertible(0));
        assert!(sym.is_invertible(1));

        assert_eq!(Alphabet::normalizer().names(), &["eps", "lam", "gam"]);
    }

    #[test]
    fn rejects_duplicates_and_unknown_invertibles() {
        assert!(Alphabet::new(&["x", "x"], &[]).is_err());
        assert!(Alphabet::new(&["x"], &["y"]).is_err());
    }

    #[test]
    fn value_equality() {
        let one = Alphabet::new(&["a", "b"], &["a", "b"]).unwrap();
        assert_eq!(one, Alphabet::characters());
        assert_ne!(one, Alphabet::symmetric());
    }

    #[test]
    fn tag_extension_prepends() {
        let ext = Alphabet::boundary().with_tag("w").unwrap();
        assert_eq!(ext.names(), &["w", "eps", "lam", "del"]);
        assert!(!ext.is_invertible(0));
        assert!(ext.is_invertible(2) && ext.is_invertible(3));
    }
}
