//! Order-agnostic access to coefficients and indices.
//!
//! Terms have no meaningful order, so coefficient and index extractions come
//! back as [`UnorderedView`]s tagged with a digest of the exact iteration
//! sequence they were taken from. Two views may only be combined
//! positionally when their digests agree.

use sha2::{Digest, Sha256};

use crate::error::{Result, SprayError};
use crate::index::MultiIndex;
use crate::poly::{Backend, SparsePoly};

/// An immutable snapshot of per-term data in backend iteration order.
#[derive(Clone, Debug, PartialEq)]
pub struct UnorderedView<T> {
    elements: Vec<T>,
    order_hash: String,
}

impl<T> UnorderedView<T> {
    pub fn order_hash(&self) -> &str {
        &self.order_hash
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in extraction order. The order carries no meaning on its own.
    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    /// Whether `other` was taken from the same term sequence as `self`.
    pub fn compatible<U>(&self, other: &UnorderedView<U>) -> bool {
        self.order_hash == other.order_hash
    }

    fn check_compatible<U>(&self, other: &UnorderedView<U>) -> Result<()> {
        if self.compatible(other) {
            Ok(())
        } else {
            Err(SprayError::HashMismatch {
                left: self.order_hash.clone(),
                right: other.order_hash.clone(),
            })
        }
    }

    /// Positional pairing of two compatible views.
    pub fn zip<U: Clone>(&self, other: &UnorderedView<U>) -> Result<Vec<(T, U)>>
    where
        T: Clone,
    {
        self.check_compatible(other)?;
        Ok(self
            .elements
            .iter()
            .cloned()
            .zip(other.elements.iter().cloned())
            .collect())
    }
}

impl UnorderedView<f64> {
    /// Sum of the elements, independent of their order.
    ///
    /// Values are sorted before a Neumaier-compensated pass, so any
    /// permutation of the same multiset gives a bit-identical result.
    pub fn sum(&self) -> f64 {
        let mut values = self.elements.clone();
        values.sort_unstable_by(f64::total_cmp);
        neumaier_sum(&values)
    }
}

pub(crate) fn neumaier_sum(values: &[f64]) -> f64 {
    let mut sum = 0.0;
    let mut compensation = 0.0;
    for &v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            compensation += (sum - t) + v;
        } else {
            compensation += (v - t) + sum;
        }
        sum = t;
    }
    sum + compensation
}

fn order_hash(p: &SparsePoly) -> String {
    let mut hasher = Sha256::new();
    hasher.update((p.arity() as u64).to_le_bytes());
    for (idx, v) in p.iter() {
        for e in idx.iter() {
            hasher.update(e.to_le_bytes());
        }
        hasher.update(v.to_bits().to_le_bytes());
    }
    hex::encode(hasher.finalize())
}

impl SparsePoly {
    /// The stored coefficients, in backend order.
    pub fn coeffs(&self) -> UnorderedView<f64> {
        UnorderedView {
            elements: self.iter().map(|(_, v)| v).collect(),
            order_hash: order_hash(self),
        }
    }

    /// The stored indices, aligned with [`coeffs`](Self::coeffs) taken from the same state.
    pub fn indices(&self) -> UnorderedView<MultiIndex> {
        UnorderedView {
            elements: self.iter().map(|(k, _)| k.clone()).collect(),
            order_hash: order_hash(self),
        }
    }

    /// Rebuilds a polynomial from an index view and a compatible coefficient view.
    pub fn from_views(
        indices: &UnorderedView<MultiIndex>,
        coeffs: &UnorderedView<f64>,
        arity: usize,
        backend: Backend,
    ) -> Result<SparsePoly> {
        SparsePoly::from_pairs(indices.zip(coeffs)?, arity, backend)
    }

    /// Coefficient of the all-zeros index (0 when absent).
    pub fn constant(&self) -> f64 {
        self.get(&MultiIndex::zeros(self.arity())).unwrap_or(0.0)
    }

    /// The constant term as a polynomial of the same arity.
    pub fn constant_term(&self) -> SparsePoly {
        let c = self.constant();
        let mut out = self.blank(1);
        if c != 0.0 {
            out.insert_nonzero(MultiIndex::zeros(self.arity()), c);
        }
        out
    }
}
