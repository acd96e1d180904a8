//! Ring operations: sums, products, powers, scalar arithmetic and periodic
//! wrapping of exponents.
//!
//! The `try_*` methods report arity mismatches as errors. The `std::ops`
//! impls panic on mismatch instead, which keeps expression-style code short.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Result, SprayError};
use crate::index::{Exponent, MultiIndex};
use crate::poly::{check_finite, SparsePoly};

/// Upper bound on the presized capacity of a product's term map.
const PRODUCT_CAPACITY_CAP: usize = 1 << 20;

impl SparsePoly {
    pub fn try_add(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_same_arity(other)?;
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.accumulate(k.clone(), v);
        }
        Ok(out.finish())
    }

    pub fn try_sub(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_same_arity(other)?;
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.accumulate(k.clone(), -v);
        }
        Ok(out.finish())
    }

    pub fn negate(&self) -> SparsePoly {
        let mut out = self.blank(self.num_terms());
        for (k, v) in self.iter() {
            out.insert_nonzero(k.clone(), -v);
        }
        out
    }

    /// Polynomial product: every pair of terms contributes at the sum of
    /// their indices.
    pub fn try_mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_same_arity(other)?;
        let capacity = self
            .num_terms()
            .saturating_mul(other.num_terms())
            .min(PRODUCT_CAPACITY_CAP);
        let mut out = self.blank(capacity);
        for (ka, va) in self.iter() {
            for (kb, vb) in other.iter() {
                let key = ka.checked_add(kb).ok_or_else(|| {
                    SprayError::Overflow(format!("exponent overflow multiplying {ka} by {kb}"))
                })?;
                out.accumulate(key, va * vb);
            }
        }
        Ok(out.finish())
    }

    /// Non-negative integer power by iterated multiplication; `p^0` is the unit.
    pub fn pow(&self, n: i64) -> Result<SparsePoly> {
        if n < 0 {
            return Err(SprayError::domain(format!(
                "negative power {n} is not supported"
            )));
        }
        if n == 0 {
            return Ok(self.unit_like());
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// The constant polynomial 1 with this polynomial's arity and backend.
    pub(crate) fn unit_like(&self) -> SparsePoly {
        let mut out = self.blank(1);
        out.insert_nonzero(MultiIndex::zeros(self.arity()), 1.0);
        out
    }

    /// Adds `c` to the constant term.
    pub fn scalar_add(&self, c: f64) -> Result<SparsePoly> {
        check_finite(c)?;
        let mut out = self.clone();
        out.accumulate(MultiIndex::zeros(self.arity()), c);
        Ok(out.finish())
    }

    pub fn scalar_mul(&self, c: f64) -> Result<SparsePoly> {
        check_finite(c)?;
        if c == 0.0 {
            return Ok(self.blank(0));
        }
        let mut out = self.blank(self.num_terms());
        for (k, v) in self.iter() {
            out.accumulate(k.clone(), v * c);
        }
        // underflow can produce exact zeros
        Ok(out.finish())
    }

    pub fn scalar_div(&self, c: f64) -> Result<SparsePoly> {
        check_finite(c)?;
        if c == 0.0 {
            return Err(SprayError::domain("division by zero"));
        }
        let mut out = self.blank(self.num_terms());
        for (k, v) in self.iter() {
            out.accumulate(k.clone(), v / c);
        }
        Ok(out.finish())
    }

    /// Reduces every exponent into `0..n` (non-negative modulo), summing the
    /// coefficients of indices that collide.
    pub fn wrap_mod(&self, n: i64) -> Result<SparsePoly> {
        if n < 1 {
            return Err(SprayError::domain(format!("modulus must be >= 1, got {n}")));
        }
        let n = Exponent::try_from(n)
            .map_err(|_| SprayError::domain(format!("modulus {n} exceeds the exponent range")))?;
        let mut out = self.blank(self.num_terms());
        for (k, v) in self.iter() {
            let mut key = k.clone();
            for e in key.as_mut_slice() {
                *e = e.rem_euclid(n);
            }
            out.accumulate(key, v);
        }
        Ok(out.finish())
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&SparsePoly> for &SparsePoly {
            type Output = SparsePoly;

            fn $method(self, rhs: &SparsePoly) -> SparsePoly {
                self.$imp(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait<SparsePoly> for SparsePoly {
            type Output = SparsePoly;

            fn $method(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&SparsePoly> for SparsePoly {
            type Output = SparsePoly;

            fn $method(self, rhs: &SparsePoly) -> SparsePoly {
                (&self).$method(rhs)
            }
        }

        impl $trait<SparsePoly> for &SparsePoly {
            type Output = SparsePoly;

            fn $method(self, rhs: SparsePoly) -> SparsePoly {
                self.$method(&rhs)
            }
        }
    };
}

binary_op!(Add, add, try_add);
binary_op!(Sub, sub, try_sub);
binary_op!(Mul, mul, try_mul);

macro_rules! scalar_op {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<f64> for &SparsePoly {
            type Output = SparsePoly;

            fn $method(self, rhs: f64) -> SparsePoly {
                self.$imp(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait<f64> for SparsePoly {
            type Output = SparsePoly;

            fn $method(self, rhs: f64) -> SparsePoly {
                (&self).$method(rhs)
            }
        }
    };
}

scalar_op!(Add, add, scalar_add);
scalar_op!(Mul, mul, scalar_mul);
scalar_op!(Div, div, scalar_div);

impl Sub<f64> for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: f64) -> SparsePoly {
        self + (-rhs)
    }
}

impl Sub<f64> for SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: f64) -> SparsePoly {
        &self + (-rhs)
    }
}

impl Add<SparsePoly> for f64 {
    type Output = SparsePoly;

    fn add(self, rhs: SparsePoly) -> SparsePoly {
        rhs + self
    }
}

impl Add<&SparsePoly> for f64 {
    type Output = SparsePoly;

    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        rhs + self
    }
}

impl Mul<&SparsePoly> for f64 {
    type Output = SparsePoly;

    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        rhs * self
    }
}

impl Mul<SparsePoly> for f64 {
    type Output = SparsePoly;

    fn mul(self, rhs: SparsePoly) -> SparsePoly {
        rhs * self
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        self.negate()
    }
}

impl Neg for SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        self.negate()
    }
}
