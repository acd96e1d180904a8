//! Named constructors. All of them build in the default backend; use
//! [`SparsePoly::into_backend`] to move the result elsewhere.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Result, SprayError};
use crate::index::{Exponent, MultiIndex};
use crate::poly::{check_arity, check_finite, Backend, SparsePoly};

/// Parameters for [`SparsePoly::rspray`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub n_rows: usize,
    pub arity: usize,
    /// Exponents are drawn uniformly from `0..=max_exponent`.
    pub max_exponent: Exponent,
    /// Values are drawn uniformly from `1..=max_value`.
    pub max_value: u32,
    pub seed: u64,
}

impl Default for RandomSpec {
    fn default() -> Self {
        RandomSpec {
            n_rows: 7,
            arity: 3,
            max_exponent: 2,
            max_value: 9,
            seed: 0,
        }
    }
}

impl SparsePoly {
    /// The zero polynomial of arity `a`.
    pub fn zero(a: usize) -> Result<SparsePoly> {
        SparsePoly::empty(a, Backend::default())
    }

    /// The constant polynomial 1 of arity `a`.
    pub fn unit(a: usize) -> Result<SparsePoly> {
        check_arity(a)?;
        Ok(SparsePoly::empty_unchecked(a, Backend::default(), 1).unit_like())
    }

    /// The single variable `x_i` (1-based) among `a` variables.
    pub fn lone(i: usize, a: usize) -> Result<SparsePoly> {
        check_arity(a)?;
        if i == 0 || i > a {
            return Err(SprayError::domain(format!(
                "variable {i} out of range 1..={a}"
            )));
        }
        SparsePoly::from_pairs(
            [(MultiIndex::unit_vector(a, i - 1), 1.0)],
            a,
            Backend::default(),
        )
    }

    /// `sum_i coeffs[i] * x_i`, with arity `coeffs.len()`.
    pub fn linear(coeffs: &[f64]) -> Result<SparsePoly> {
        let a = coeffs.len();
        check_arity(a)?;
        coeffs.iter().try_for_each(|&c| check_finite(c))?;
        SparsePoly::from_pairs(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (MultiIndex::unit_vector(a, i), c)),
            a,
            Backend::default(),
        )
    }

    /// The product `x_1 x_2 ... x_a`.
    pub fn xyz(a: usize) -> Result<SparsePoly> {
        check_arity(a)?;
        SparsePoly::from_pairs([(MultiIndex::from(vec![1; a]), 1.0)], a, Backend::default())
    }

    /// Sum of all monic monomials of total degree `n` in `d` variables.
    pub fn homog(d: usize, n: u32) -> Result<SparsePoly> {
        check_arity(d)?;
        let n = Exponent::try_from(n)
            .map_err(|_| SprayError::domain(format!("degree {n} out of range")))?;
        let mut rows = Vec::new();
        let mut current = vec![0; d];
        compositions(n, 0, &mut current, &mut rows);
        SparsePoly::from_terms(rows, &[], d, Backend::default())
    }

    /// A random polynomial with non-negative exponents and positive integer
    /// coefficients. Duplicate rows are summed. Deterministic for a given seed.
    pub fn rspray(spec: &RandomSpec) -> Result<SparsePoly> {
        check_arity(spec.arity)?;
        if spec.max_exponent < 0 || spec.max_value == 0 {
            return Err(SprayError::domain(
                "rspray needs max_exponent >= 0 and max_value >= 1",
            ));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        let mut rows = Vec::with_capacity(spec.n_rows);
        let mut values = Vec::with_capacity(spec.n_rows);
        for _ in 0..spec.n_rows {
            let row: MultiIndex = (0..spec.arity)
                .map(|_| rng.random_range(0..=spec.max_exponent))
                .collect();
            rows.push(row);
            values.push(f64::from(rng.random_range(1..=spec.max_value)));
        }
        if rows.is_empty() {
            return SparsePoly::zero(spec.arity);
        }
        SparsePoly::from_terms(rows, &values, spec.arity, Backend::default())
    }

    /// Generating function of a `d`-dimensional knight: two squares along
    /// one axis and one square along another, in every sign combination.
    pub fn knight(d: usize) -> Result<SparsePoly> {
        if d < 2 {
            return Err(SprayError::domain(format!(
                "a knight needs at least 2 dimensions, got {d}"
            )));
        }
        let mut rows = Vec::with_capacity(4 * d * (d - 1));
        for long in 0..d {
            for short in (0..d).filter(|&s| s != long) {
                for (a, b) in [(2, 1), (2, -1), (-2, 1), (-2, -1)] {
                    let mut row = MultiIndex::zeros(d);
                    row.as_mut_slice()[long] = a;
                    row.as_mut_slice()[short] = b;
                    rows.push(row);
                }
            }
        }
        SparsePoly::from_terms(rows, &[], d, Backend::default())
    }

    /// Lazy nearest-neighbour walk: stay put or step along one axis, each
    /// with probability `1 / (2d + 1)`.
    pub fn walk_kernel(d: usize) -> Result<SparsePoly> {
        check_arity(d)?;
        let mut rows = vec![MultiIndex::zeros(d)];
        for i in 0..d {
            let step = MultiIndex::unit_vector(d, i);
            rows.push(step.negated());
            rows.push(step);
        }
        SparsePoly::from_terms(rows, &[], d, Backend::default())?.scalar_div((2 * d + 1) as f64)
    }

    /// `a b^2 + b c^2 + ... + y z^2 + z a^2` in 26 variables.
    pub fn cyclic_squares() -> Result<SparsePoly> {
        const N: usize = 26;
        let rows = (0..N).map(|i| {
            let mut row = MultiIndex::zeros(N);
            row.as_mut_slice()[i] = 1;
            row.as_mut_slice()[(i + 1) % N] = 2;
            row
        });
        SparsePoly::from_terms(rows, &[], N, Backend::default())
    }
}

fn compositions(
    remaining: Exponent,
    slot: usize,
    current: &mut [Exponent],
    out: &mut Vec<MultiIndex>,
) {
    if slot + 1 == current.len() {
        current[slot] = remaining;
        out.push(MultiIndex::from(&*current));
        return;
    }
    for e in (0..=remaining).rev() {
        current[slot] = e;
        compositions(remaining - e, slot + 1, current, out);
    }
}
