//! The sparse polynomial value type and its term-map backends.
//!
//! A [`SparsePoly`] is a map from [`MultiIndex`] to a finite `f64`
//! coefficient together with a fixed arity. Exact zeros are never stored, so
//! the zero polynomial is an empty map that still remembers its arity.

use std::collections::btree_map::{self, BTreeMap};
use std::collections::hash_map;
use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;

use crate::error::{Result, SprayError};
use crate::index::{Exponent, MultiIndex};

/// Associative container used for the term map.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Backend {
    /// Balanced tree; terms iterate in lexicographic index order.
    Ordered,
    /// Hash table; iteration order is unspecified but deterministic for a
    /// given sequence of insertions.
    #[default]
    Hashed,
}

impl Backend {
    pub const ALL: [Backend; 2] = [Backend::Ordered, Backend::Hashed];

    pub fn name(self) -> &'static str {
        match self {
            Backend::Ordered => "ordered",
            Backend::Hashed => "hashed",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Backend {
    type Err = SprayError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ordered" | "map" | "btree" => Ok(Backend::Ordered),
            "hashed" | "unordered" | "unordered_map" | "hash" => Ok(Backend::Hashed),
            other => Err(SprayError::domain(format!("unknown backend `{other}`"))),
        }
    }
}

#[derive(Clone, Debug)]
enum TermMap {
    Ordered(BTreeMap<MultiIndex, f64>),
    Hashed(FxHashMap<MultiIndex, f64>),
}

impl TermMap {
    fn new(backend: Backend, capacity: usize) -> Self {
        match backend {
            Backend::Ordered => TermMap::Ordered(BTreeMap::new()),
            Backend::Hashed => TermMap::Hashed(FxHashMap::with_capacity_and_hasher(
                capacity,
                Default::default(),
            )),
        }
    }

    fn backend(&self) -> Backend {
        match self {
            TermMap::Ordered(_) => Backend::Ordered,
            TermMap::Hashed(_) => Backend::Hashed,
        }
    }

    fn len(&self) -> usize {
        match self {
            TermMap::Ordered(m) => m.len(),
            TermMap::Hashed(m) => m.len(),
        }
    }

    fn get(&self, key: &MultiIndex) -> Option<f64> {
        match self {
            TermMap::Ordered(m) => m.get(key).copied(),
            TermMap::Hashed(m) => m.get(key).copied(),
        }
    }

    /// Adds `value` to the entry at `key`; may leave an exact zero behind.
    #[inline]
    fn accumulate(&mut self, key: MultiIndex, value: f64) {
        match self {
            TermMap::Ordered(m) => *m.entry(key).or_insert(0.0) += value,
            TermMap::Hashed(m) => *m.entry(key).or_insert(0.0) += value,
        }
    }

    fn insert(&mut self, key: MultiIndex, value: f64) {
        match self {
            TermMap::Ordered(m) => {
                m.insert(key, value);
            }
            TermMap::Hashed(m) => {
                m.insert(key, value);
            }
        }
    }

    fn remove(&mut self, key: &MultiIndex) {
        match self {
            TermMap::Ordered(m) => {
                m.remove(key);
            }
            TermMap::Hashed(m) => {
                m.remove(key);
            }
        }
    }

    fn drop_zeros(&mut self) {
        match self {
            TermMap::Ordered(m) => m.retain(|_, v| *v != 0.0),
            TermMap::Hashed(m) => m.retain(|_, v| *v != 0.0),
        }
    }

    fn iter(&self) -> Iter<'_> {
        match self {
            TermMap::Ordered(m) => Iter::Ordered(m.iter()),
            TermMap::Hashed(m) => Iter::Hashed(m.iter()),
        }
    }
}

/// Iterator over `(index, coefficient)` pairs in backend order.
pub enum Iter<'a> {
    Ordered(btree_map::Iter<'a, MultiIndex, f64>),
    Hashed(hash_map::Iter<'a, MultiIndex, f64>),
}

impl<'a> Iterator for Iter<'a> {
    type Item = (&'a MultiIndex, f64);

    #[inline]
    fn next(&mut self) -> Option<Self::Item> {
        match self {
            Iter::Ordered(it) => it.next().map(|(k, v)| (k, *v)),
            Iter::Hashed(it) => it.next().map(|(k, v)| (k, *v)),
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        match self {
            Iter::Ordered(it) => it.size_hint(),
            Iter::Hashed(it) => it.size_hint(),
        }
    }
}

impl ExactSizeIterator for Iter<'_> {}

/// A sparse multivariate Laurent polynomial with real coefficients.
///
/// Operations never mutate their inputs; binary operations return a value
/// stored in the left operand's backend.
#[derive(Clone)]
pub struct SparsePoly {
    arity: usize,
    terms: TermMap,
}

pub(crate) fn check_arity(arity: usize) -> Result<()> {
    if arity == 0 {
        Err(SprayError::domain("arity must be at least 1"))
    } else {
        Ok(())
    }
}

pub(crate) fn check_finite(value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(SprayError::Value(value))
    }
}

impl SparsePoly {
    /// The zero polynomial of the given arity in the given backend.
    pub fn empty(arity: usize, backend: Backend) -> Result<Self> {
        check_arity(arity)?;
        Ok(Self::empty_unchecked(arity, backend, 0))
    }

    pub(crate) fn empty_unchecked(arity: usize, backend: Backend, capacity: usize) -> Self {
        SparsePoly {
            arity,
            terms: TermMap::new(backend, capacity),
        }
    }

    /// Builds a polynomial from index rows and matching values.
    ///
    /// Repeated rows are summed and zero results dropped. An empty `values`
    /// slice gives every row the coefficient 1.
    pub fn from_terms<R>(rows: R, values: &[f64], arity: usize, backend: Backend) -> Result<Self>
    where
        R: IntoIterator,
        R::Item: Into<MultiIndex>,
    {
        check_arity(arity)?;
        let rows: Vec<MultiIndex> = rows.into_iter().map(Into::into).collect();
        if !values.is_empty() && values.len() != rows.len() {
            return Err(SprayError::domain(format!(
                "{} index rows but {} values",
                rows.len(),
                values.len()
            )));
        }
        let mut out = Self::empty_unchecked(arity, backend, rows.len());
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != arity {
                return Err(SprayError::Arity {
                    expected: arity,
                    found: row.len(),
                });
            }
            let value = values.get(i).copied().unwrap_or(1.0);
            check_finite(value)?;
            out.terms.accumulate(row, value);
        }
        out.terms.drop_zeros();
        Ok(out)
    }

    /// Builds from `(index, value)` pairs; same semantics as [`from_terms`](Self::from_terms).
    pub fn from_pairs<I, K>(pairs: I, arity: usize, backend: Backend) -> Result<Self>
    where
        I: IntoIterator<Item = (K, f64)>,
        K: Into<MultiIndex>,
    {
        check_arity(arity)?;
        let mut out = Self::empty_unchecked(arity, backend, 0);
        for (row, value) in pairs {
            let row = row.into();
            out.check_index(&row)?;
            check_finite(value)?;
            out.terms.accumulate(row, value);
        }
        out.terms.drop_zeros();
        Ok(out)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn backend(&self) -> Backend {
        self.terms.backend()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.len() == 0
    }

    /// Terms in backend iteration order.
    pub fn iter(&self) -> Iter<'_> {
        self.terms.iter()
    }

    /// Terms sorted lexicographically by index, independent of backend.
    pub fn sorted_terms(&self) -> Vec<(&MultiIndex, f64)> {
        let mut v: Vec<_> = self.iter().collect();
        if self.backend() == Backend::Hashed {
            v.sort_unstable_by(|a, b| a.0.cmp(b.0));
        }
        v
    }

    pub(crate) fn check_index(&self, idx: &[Exponent]) -> Result<()> {
        if idx.len() != self.arity {
            Err(SprayError::Arity {
                expected: self.arity,
                found: idx.len(),
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_same_arity(&self, other: &SparsePoly) -> Result<()> {
        if self.arity != other.arity {
            Err(SprayError::Arity {
                expected: self.arity,
                found: other.arity,
            })
        } else {
            Ok(())
        }
    }

    /// The coefficient at `idx`, or 0 when absent.
    pub fn get(&self, idx: &[Exponent]) -> Result<f64> {
        self.check_index(idx)?;
        Ok(self.terms.get(&MultiIndex::from(idx)).unwrap_or(0.0))
    }

    /// Overwrites the coefficient at every listed index with `value`.
    ///
    /// Missing indices are created; a `value` of 0 deletes them.
    pub fn set<R>(mut self, rows: R, value: f64) -> Result<Self>
    where
        R: IntoIterator,
        R::Item: Into<MultiIndex>,
    {
        check_finite(value)?;
        for row in rows {
            let row = row.into();
            self.check_index(&row)?;
            if value == 0.0 {
                self.terms.remove(&row);
            } else {
                self.terms.insert(row, value);
            }
        }
        Ok(self)
    }

    /// Re-homes the terms in another backend.
    pub fn into_backend(self, backend: Backend) -> Self {
        if backend == self.backend() {
            return self;
        }
        let mut out = Self::empty_unchecked(self.arity, backend, self.num_terms());
        for (k, v) in self.iter() {
            out.terms.insert(k.clone(), v);
        }
        out
    }

    /// Fresh zero polynomial with the same arity and backend, presized for `capacity` terms.
    pub(crate) fn blank(&self, capacity: usize) -> Self {
        Self::empty_unchecked(self.arity, self.backend(), capacity)
    }

    #[inline]
    pub(crate) fn accumulate(&mut self, key: MultiIndex, value: f64) {
        self.terms.accumulate(key, value);
    }

    pub(crate) fn insert_nonzero(&mut self, key: MultiIndex, value: f64) {
        debug_assert!(value != 0.0);
        self.terms.insert(key, value);
    }

    pub(crate) fn finish(mut self) -> Self {
        self.terms.drop_zeros();
        self
    }

    pub(crate) fn with_arity(self, arity: usize) -> Self {
        SparsePoly { arity, ..self }
    }
}

impl PartialEq for SparsePoly {
    /// Same arity and identical term sets, regardless of backend.
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity
            && self.num_terms() == other.num_terms()
            && self.iter().all(|(k, v)| other.terms.get(k) == Some(v))
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SparsePoly")
            .field("arity", &self.arity)
            .field("backend", &self.backend())
            .field("terms", &self.sorted_terms())
            .finish()
    }
}

impl<'a> IntoIterator for &'a SparsePoly {
    type Item = (&'a MultiIndex, f64);
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
