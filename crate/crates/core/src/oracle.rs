//! Deliberately naive dense reference implementations.
//!
//! Nothing here goes through the sparse term maps' arithmetic: products are
//! full d-dimensional convolutions over row-major arrays and walks evolve an
//! explicit probability vector over every lattice node. The test suites use
//! these to cross-check the sparse code paths.

use crate::applications::WalkConfig;
use crate::error::{Result, SprayError};
use crate::index::{Exponent, MultiIndex};
use crate::poly::{Backend, SparsePoly};

/// Largest number of cells any dense array may hold.
pub const CELL_LIMIT: usize = 1_000_000;

/// A dense coefficient array over the bounding box of a polynomial's support.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseArray {
    /// Exponent stored at cell 0 along each dimension.
    pub offsets: Vec<i64>,
    pub extents: Vec<usize>,
    /// Row-major: the last dimension varies fastest.
    pub data: Vec<f64>,
}

fn checked_cells(extents: &[usize]) -> Result<usize> {
    let cells = extents.iter().map(|&e| e as u128).product::<u128>();
    if cells > CELL_LIMIT as u128 {
        Err(SprayError::OracleCapacity {
            cells,
            limit: CELL_LIMIT,
        })
    } else {
        Ok(cells as usize)
    }
}

impl DenseArray {
    pub fn arity(&self) -> usize {
        self.extents.len()
    }

    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.extents.len()];
        for i in (0..self.extents.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * self.extents[i + 1];
        }
        strides
    }

    /// Exponent vector of cell `flat`.
    fn exponents_of(&self, flat: usize) -> Vec<i64> {
        let mut rest = flat;
        let mut out = vec![0; self.extents.len()];
        for i in (0..self.extents.len()).rev() {
            out[i] = self.offsets[i] + (rest % self.extents[i]) as i64;
            rest /= self.extents[i];
        }
        out
    }
}

pub fn to_dense(p: &SparsePoly) -> Result<DenseArray> {
    let d = p.arity();
    if p.is_zero() {
        return Ok(DenseArray {
            offsets: vec![0; d],
            extents: vec![1; d],
            data: vec![0.0],
        });
    }
    let mut lo = vec![i64::MAX; d];
    let mut hi = vec![i64::MIN; d];
    for (idx, _) in p.iter() {
        for (i, &e) in idx.iter().enumerate() {
            lo[i] = lo[i].min(i64::from(e));
            hi[i] = hi[i].max(i64::from(e));
        }
    }
    let extents: Vec<usize> = lo
        .iter()
        .zip(&hi)
        .map(|(l, h)| (h - l + 1) as usize)
        .collect();
    let cells = checked_cells(&extents)?;
    let mut out = DenseArray {
        offsets: lo,
        extents,
        data: vec![0.0; cells],
    };
    let strides = out.strides();
    for (idx, v) in p.iter() {
        let flat: usize = idx
            .iter()
            .zip(&out.offsets)
            .zip(&strides)
            .map(|((&e, &o), &s)| (i64::from(e) - o) as usize * s)
            .sum();
        out.data[flat] = v;
    }
    Ok(out)
}

pub fn from_dense(a: &DenseArray, backend: Backend) -> Result<SparsePoly> {
    let mut pairs = Vec::new();
    for (flat, &v) in a.data.iter().enumerate() {
        if v != 0.0 {
            let idx = a
                .exponents_of(flat)
                .into_iter()
                .map(|e| {
                    Exponent::try_from(e)
                        .map_err(|_| SprayError::Overflow(format!("exponent {e} out of range")))
                })
                .collect::<Result<MultiIndex>>()?;
            pairs.push((idx, v));
        }
    }
    SparsePoly::from_pairs(pairs, a.arity(), backend)
}

/// Full convolution of two dense arrays.
pub fn dense_multiply(a: &DenseArray, b: &DenseArray) -> Result<DenseArray> {
    if a.arity() != b.arity() {
        return Err(SprayError::Arity {
            expected: a.arity(),
            found: b.arity(),
        });
    }
    let extents: Vec<usize> = a
        .extents
        .iter()
        .zip(&b.extents)
        .map(|(x, y)| x + y - 1)
        .collect();
    let cells = checked_cells(&extents)?;
    let mut out = DenseArray {
        offsets: a
            .offsets
            .iter()
            .zip(&b.offsets)
            .map(|(x, y)| x + y)
            .collect(),
        extents,
        data: vec![0.0; cells],
    };
    let strides = out.strides();
    for (i, &va) in a.data.iter().enumerate() {
        if va == 0.0 {
            continue;
        }
        let ea = a.exponents_of(i);
        for (j, &vb) in b.data.iter().enumerate() {
            if vb == 0.0 {
                continue;
            }
            let eb = b.exponents_of(j);
            let flat: usize = (0..out.arity())
                .map(|k| (ea[k] + eb[k] - out.offsets[k]) as usize * strides[k])
                .sum();
            out.data[flat] += va * vb;
        }
    }
    Ok(out)
}

/// Survival probability of the trapped periodic walk, computed by evolving
/// a dense vector over all `n^d` lattice nodes.
pub fn dense_walk(cfg: &WalkConfig) -> Result<f64> {
    cfg.validate()?;
    let n = cfg.n as usize;
    let extents = vec![n; cfg.d];
    let cells = checked_cells(&extents)?;
    let node = |coords: &mut dyn Iterator<Item = i64>| -> usize {
        coords.fold(0, |acc, c| acc * n + c.rem_euclid(cfg.n) as usize)
    };
    let coords_of = |mut flat: usize| -> Vec<i64> {
        let mut out = vec![0; cfg.d];
        for slot in out.iter_mut().rev() {
            *slot = (flat % n) as i64;
            flat /= n;
        }
        out
    };
    let moves: Vec<(Vec<i64>, f64)> = cfg
        .kernel
        .iter()
        .map(|(idx, v)| (idx.iter().map(|&e| i64::from(e)).collect(), v))
        .collect();
    let traps: Vec<usize> = cfg
        .traps
        .iter()
        .map(|t| node(&mut t.iter().map(|&e| i64::from(e))))
        .collect();

    let mut state = vec![0.0; cells];
    state[node(&mut cfg.initial.iter().map(|&e| i64::from(e)))] = 1.0;
    for _ in 0..cfg.steps {
        let mut next = vec![0.0; cells];
        for (from, &mass) in state.iter().enumerate() {
            if mass == 0.0 {
                continue;
            }
            let here = coords_of(from);
            for (step, prob) in &moves {
                let to = node(&mut here.iter().zip(step).map(|(a, b)| a + b));
                next[to] += mass * prob;
            }
        }
        for &t in &traps {
            next[t] = 0.0;
        }
        state = next;
    }
    Ok(state.iter().sum())
}
