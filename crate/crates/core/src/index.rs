use std::fmt;
use std::ops::Deref;

use smallvec::SmallVec;

/// Exponent type used throughout; negative values give Laurent terms.
pub type Exponent = i32;

/// A fixed-length vector of signed exponents: the key of a sparse array.
///
/// Ordering is lexicographic on the exponents, which is what the ordered
/// backend iterates by.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiIndex(SmallVec<[Exponent; 4]>);

impl MultiIndex {
    /// The all-zeros index of the given length.
    pub fn zeros(arity: usize) -> Self {
        MultiIndex(SmallVec::from_elem(0, arity))
    }

    /// Index with 1 in slot `dim` (0-based) and 0 elsewhere.
    pub fn unit_vector(arity: usize, dim: usize) -> Self {
        let mut idx = Self::zeros(arity);
        idx.0[dim] = 1;
        idx
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn as_slice(&self) -> &[Exponent] {
        &self.0
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [Exponent] {
        &mut self.0
    }

    /// Componentwise sum, or `None` if any component overflows.
    pub fn checked_add(&self, other: &MultiIndex) -> Option<MultiIndex> {
        debug_assert_eq!(self.len(), other.len());
        let mut out = SmallVec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            out.push(a.checked_add(*b)?);
        }
        Some(MultiIndex(out))
    }

    pub fn negated(&self) -> MultiIndex {
        self.0.iter().map(|e| -e).collect()
    }

    /// Drops slot `dim` (0-based), shrinking the index by one.
    pub fn without(&self, dim: usize) -> MultiIndex {
        self.0
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != dim)
            .map(|(_, &e)| e)
            .collect()
    }

    /// Inserts `value` at slot `dim` (0-based), growing the index by one.
    pub fn with_inserted(&self, dim: usize, value: Exponent) -> MultiIndex {
        let mut out = self.0.clone();
        out.insert(dim, value);
        MultiIndex(out)
    }
}

impl Deref for MultiIndex {
    type Target = [Exponent];

    fn deref(&self) -> &[Exponent] {
        &self.0
    }
}

impl FromIterator<Exponent> for MultiIndex {
    fn from_iter<I: IntoIterator<Item = Exponent>>(iter: I) -> Self {
        MultiIndex(iter.into_iter().collect())
    }
}

impl From<Vec<Exponent>> for MultiIndex {
    fn from(v: Vec<Exponent>) -> Self {
        MultiIndex(SmallVec::from_vec(v))
    }
}

impl From<&[Exponent]> for MultiIndex {
    fn from(v: &[Exponent]) -> Self {
        MultiIndex(SmallVec::from_slice(v))
    }
}

impl<const N: usize> From<[Exponent; N]> for MultiIndex {
    fn from(v: [Exponent; N]) -> Self {
        MultiIndex(SmallVec::from_slice(&v))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}
