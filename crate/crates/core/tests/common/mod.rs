#![allow(dead_code)]

use rand::Rng;
use spray::{Backend, MultiIndex, SparsePoly};

/// Random polynomial with up to `max_terms` rows, exponents in `exp_lo..=exp_hi`
/// and small nonzero integer coefficients (or arbitrary reals when
/// `fractional`).
pub fn random_poly<R: Rng>(
    rng: &mut R,
    arity: usize,
    max_terms: usize,
    (exp_lo, exp_hi): (i32, i32),
    fractional: bool,
    backend: Backend,
) -> SparsePoly {
    let n = rng.random_range(0..=max_terms);
    let pairs: Vec<(MultiIndex, f64)> = (0..n)
        .map(|_| {
            let idx: MultiIndex = (0..arity)
                .map(|_| rng.random_range(exp_lo..=exp_hi))
                .collect();
            let v = if fractional {
                rng.random_range(-10.0..10.0)
            } else {
                let mut v = 0;
                while v == 0 {
                    v = rng.random_range(-5..=5);
                }
                f64::from(v)
            };
            (idx, v)
        })
        .collect();
    SparsePoly::from_pairs(pairs, arity, backend).unwrap()
}

pub fn has_no_stored_zeros(p: &SparsePoly) -> bool {
    p.iter().all(|(_, v)| v != 0.0)
}

fn squares_sum(vars: &[SparsePoly]) -> SparsePoly {
    let arity = vars[0].arity();
    vars.iter()
        .fold(SparsePoly::zero(arity).unwrap(), |acc, v| {
            acc + v.pow(2).unwrap()
        })
}

/// `(sum a_i^2)(sum b_i^2) - sum_k z_k^2` where each `z_k` is the bilinear
/// form `sum_j sign * a_|s| * b_j` described by one `(signed a-index, b-index)`
/// row of `table` (1-based indices).
fn square_identity_difference(dim: usize, table: &[([i32; 8], [usize; 8])]) -> SparsePoly {
    let arity = 2 * dim;
    let a: Vec<_> = (1..=dim)
        .map(|i| SparsePoly::lone(i, arity).unwrap())
        .collect();
    let b: Vec<_> = (1..=dim)
        .map(|i| SparsePoly::lone(dim + i, arity).unwrap())
        .collect();
    let lhs = squares_sum(&a) * squares_sum(&b);
    let mut rhs = SparsePoly::zero(arity).unwrap();
    for (signs, b_idx) in table {
        let mut z = SparsePoly::zero(arity).unwrap();
        for (&s, &j) in signs.iter().zip(b_idx.iter()).take(dim) {
            let term = &a[s.unsigned_abs() as usize - 1] * &b[j - 1];
            z = if s > 0 { z + term } else { z - term };
        }
        rhs = rhs + z.pow(2).unwrap();
    }
    lhs - rhs
}

const EIGHT_SQUARE: [([i32; 8], [usize; 8]); 8] = [
    ([1, -2, -3, -4, -5, -6, -7, -8], [1, 2, 3, 4, 5, 6, 7, 8]),
    ([1, 2, 3, -4, 5, -6, -7, 8], [2, 1, 4, 3, 6, 5, 8, 7]),
    ([1, -2, 3, 4, 5, 6, -7, -8], [3, 4, 1, 2, 7, 8, 5, 6]),
    ([1, 2, -3, 4, 5, -6, 7, -8], [4, 3, 2, 1, 8, 7, 6, 5]),
    ([1, -2, -3, -4, 5, 6, 7, 8], [5, 6, 7, 8, 1, 2, 3, 4]),
    ([1, 2, -3, 4, -5, 6, -7, 8], [6, 5, 8, 7, 2, 1, 4, 3]),
    ([1, 2, 3, -4, -5, 6, 7, -8], [7, 8, 5, 6, 3, 4, 1, 2]),
    ([1, -2, 3, 4, -5, -6, 7, 8], [8, 7, 6, 5, 4, 3, 2, 1]),
];

const FOUR_SQUARE: [([i32; 8], [usize; 8]); 4] = [
    ([1, -2, -3, -4, 0, 0, 0, 0], [1, 2, 3, 4, 0, 0, 0, 0]),
    ([1, 2, 3, -4, 0, 0, 0, 0], [2, 1, 4, 3, 0, 0, 0, 0]),
    ([1, -2, 3, 4, 0, 0, 0, 0], [3, 4, 1, 2, 0, 0, 0, 0]),
    ([1, 2, -3, 4, 0, 0, 0, 0], [4, 3, 2, 1, 0, 0, 0, 0]),
];

/// Euler's four-square identity in 8 variables; zero when the identity holds.
pub fn four_square_difference() -> SparsePoly {
    square_identity_difference(4, &FOUR_SQUARE)
}

/// Degen's eight-square identity in 16 variables; zero when the identity holds.
pub fn eight_square_difference() -> SparsePoly {
    square_identity_difference(8, &EIGHT_SQUARE)
}

/// Five-point central-difference estimate of d/dx_dim at `point` (dim 1-based).
pub fn finite_difference(p: &SparsePoly, point: &[f64], dim: usize) -> f64 {
    let h = 1e-3 * point[dim - 1].abs().max(1.0);
    let at = |offset: f64| {
        let mut q = point.to_vec();
        q[dim - 1] += offset;
        p.evaluate(&q).unwrap()
    };
    (-at(2.0 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2.0 * h)) / (12.0 * h)
}

/// Sum of |term| at `point`: the natural scale for cancellation error.
pub fn magnitude_at(p: &SparsePoly, point: &[f64]) -> f64 {
    p.iter()
        .map(|(idx, c)| {
            idx.iter()
                .zip(point)
                .fold(c.abs(), |acc, (&e, &x)| acc * x.abs().powi(e))
        })
        .sum()
}
