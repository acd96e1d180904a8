//! Evaluation, substitution and partial differentiation.

use crate::error::{Result, SprayError};
use crate::index::Exponent;
use crate::poly::SparsePoly;

/// `base^exp` by repeated squaring; negative exponents go through the
/// reciprocal. The caller rules out `0^negative`.
pub(crate) fn int_pow(base: f64, exp: Exponent) -> f64 {
    let mut n = exp.unsigned_abs();
    let mut b = base;
    let mut acc = 1.0;
    while n > 0 {
        if n & 1 == 1 {
            acc *= b;
        }
        b *= b;
        n >>= 1;
    }
    if exp < 0 {
        1.0 / acc
    } else {
        acc
    }
}

fn dim_index(p: &SparsePoly, dim: usize) -> Result<usize> {
    if dim == 0 || dim > p.arity() {
        Err(SprayError::domain(format!(
            "dimension {dim} out of range 1..={}",
            p.arity()
        )))
    } else {
        Ok(dim - 1)
    }
}

impl SparsePoly {
    /// Value of the polynomial at `point`.
    pub fn evaluate(&self, point: &[f64]) -> Result<f64> {
        if point.len() != self.arity() {
            return Err(SprayError::Arity {
                expected: self.arity(),
                found: point.len(),
            });
        }
        let mut total = 0.0;
        for (idx, c) in self.iter() {
            let mut term = c;
            for (dim, (&x, &e)) in point.iter().zip(idx.iter()).enumerate() {
                if x == 0.0 && e < 0 {
                    return Err(SprayError::Singularity { dim: dim + 1 });
                }
                term *= int_pow(x, e);
            }
            total += term;
        }
        Ok(total)
    }

    /// Fixes variable `dim` (1-based) at `value` and removes it, so the
    /// result has one variable fewer. Remaining variables keep their order.
    pub fn substitute(&self, dim: usize, value: f64) -> Result<SparsePoly> {
        let slot = dim_index(self, dim)?;
        if self.arity() < 2 {
            return Err(SprayError::domain(
                "substitution would leave a polynomial with no variables",
            ));
        }
        if !value.is_finite() {
            return Err(SprayError::Value(value));
        }
        let mut out = self.blank(self.num_terms()).with_arity(self.arity() - 1);
        for (idx, c) in self.iter() {
            let e = idx[slot];
            if value == 0.0 && e < 0 {
                return Err(SprayError::Singularity { dim });
            }
            out.accumulate(idx.without(slot), c * int_pow(value, e));
        }
        Ok(out.finish())
    }

    /// `order`-th partial derivative with respect to variable `dim` (1-based).
    pub fn deriv(&self, dim: usize, order: u32) -> Result<SparsePoly> {
        let slot = dim_index(self, dim)?;
        let mut current = self.clone();
        for _ in 0..order {
            if current.is_zero() {
                break;
            }
            let mut next = current.blank(current.num_terms());
            for (idx, c) in current.iter() {
                let e = idx[slot];
                if e == 0 {
                    continue;
                }
                let mut lowered = idx.clone();
                lowered.as_mut_slice()[slot] = e.checked_sub(1).ok_or_else(|| {
                    SprayError::Overflow(format!("exponent underflow differentiating {idx}"))
                })?;
                next.accumulate(lowered, c * f64::from(e));
            }
            current = next.finish();
        }
        Ok(current)
    }

    /// Mixed partial derivative: differentiate `orders[i]` times in variable `i + 1`.
    pub fn aderiv(&self, orders: &[u32]) -> Result<SparsePoly> {
        if orders.len() != self.arity() {
            return Err(SprayError::Arity {
                expected: self.arity(),
                found: orders.len(),
            });
        }
        orders
            .iter()
            .enumerate()
            .try_fold(self.clone(), |p, (i, &k)| p.deriv(i + 1, k))
    }
}
