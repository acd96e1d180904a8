//! Random walks on periodic lattices with absorbing traps, and closed-walk
//! counts for d-dimensional knights.

use crate::error::{Result, SprayError};
use crate::index::MultiIndex;
use crate::poly::{Backend, SparsePoly};

/// Largest integer below which every `f64` integer is exact.
const EXACT_INTEGER_LIMIT: f64 = 9_007_199_254_740_992.0;

/// A walk on the periodic lattice `(Z/nZ)^d`.
#[derive(Clone, Debug)]
pub struct WalkConfig {
    pub d: usize,
    /// Side length of the lattice.
    pub n: i64,
    /// Nodes whose mass is removed after every step.
    pub traps: Vec<MultiIndex>,
    /// One-step transition polynomial; its coefficients are move probabilities.
    pub kernel: SparsePoly,
    /// Node holding all of the mass before the first step.
    pub initial: MultiIndex,
    pub steps: u32,
}

/// Result of [`run_walk`].
#[derive(Clone, Debug)]
pub struct WalkOutcome {
    pub final_state: SparsePoly,
    /// Total probability mass not absorbed by a trap.
    pub survival: f64,
}

impl WalkConfig {
    /// 17x17 lattice, lazy nearest-neighbour kernel, traps at (2,3) and
    /// (3,5), start at (10,10), 100 steps.
    pub fn standard() -> Self {
        WalkConfig {
            d: 2,
            n: 17,
            traps: vec![MultiIndex::from([2, 3]), MultiIndex::from([3, 5])],
            kernel: SparsePoly::walk_kernel(2).expect("d = 2 is valid"),
            initial: MultiIndex::from([10, 10]),
            steps: 100,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(SprayError::domain("lattice dimension must be at least 1"));
        }
        if self.n < 1 {
            return Err(SprayError::domain(format!(
                "side length must be at least 1, got {}",
                self.n
            )));
        }
        let arity_err = |found: usize| SprayError::Arity {
            expected: self.d,
            found,
        };
        if self.kernel.arity() != self.d {
            return Err(arity_err(self.kernel.arity()));
        }
        if self.initial.len() != self.d {
            return Err(arity_err(self.initial.len()));
        }
        for trap in &self.traps {
            if trap.len() != self.d {
                return Err(arity_err(trap.len()));
            }
            if trap
                .iter()
                .any(|&e| i64::from(e) < 0 || i64::from(e) >= self.n)
            {
                return Err(SprayError::domain(format!(
                    "trap {trap} lies outside the lattice 0..{}",
                    self.n
                )));
            }
        }
        let mass = self.kernel.coeffs().sum();
        if mass > 1.0 + 1e-12 {
            return Err(SprayError::domain(format!(
                "kernel coefficients sum to {mass}, more than 1"
            )));
        }
        Ok(())
    }

    /// Unit mass at the initial node, in the kernel's backend.
    pub fn initial_state(&self) -> Result<SparsePoly> {
        SparsePoly::from_pairs([(self.initial.clone(), 1.0)], self.d, self.kernel.backend())
    }
}

/// Advances the walk one step: spread by the kernel, wrap onto the torus,
/// then empty the traps.
pub fn timestep(state: &SparsePoly, cfg: &WalkConfig) -> Result<SparsePoly> {
    if state.arity() != cfg.d {
        return Err(SprayError::Arity {
            expected: cfg.d,
            found: state.arity(),
        });
    }
    state
        .try_mul(&cfg.kernel)?
        .wrap_mod(cfg.n)?
        .set(cfg.traps.iter().cloned(), 0.0)
}

pub fn run_walk(cfg: &WalkConfig) -> Result<WalkOutcome> {
    cfg.validate()?;
    let mut state = cfg.initial_state()?;
    for _ in 0..cfg.steps {
        state = timestep(&state, cfg)?;
    }
    let survival = state.coeffs().sum();
    Ok(WalkOutcome {
        final_state: state,
        survival,
    })
}

/// Distribution after `steps` moves on the unbounded lattice.
pub fn free_walk_pmf(initial: &MultiIndex, kernel: &SparsePoly, steps: u32) -> Result<SparsePoly> {
    let start = SparsePoly::from_pairs([(initial.clone(), 1.0)], kernel.arity(), kernel.backend())?;
    start.try_mul(&kernel.pow(i64::from(steps))?)
}

/// Number of `moves`-move knight tours in `d` dimensions that end where they
/// started. With `allow_pause`, standing still counts as a move.
pub fn knight_closed_walks(d: usize, moves: u32, allow_pause: bool) -> Result<f64> {
    knight_closed_walks_in(d, moves, allow_pause, Backend::default())
}

pub fn knight_closed_walks_in(
    d: usize,
    moves: u32,
    allow_pause: bool,
    backend: Backend,
) -> Result<f64> {
    let mut k = SparsePoly::knight(d)?.into_backend(backend);
    if allow_pause {
        k = k.scalar_add(1.0)?;
    }
    let walks = k.pow(i64::from(moves))?;
    // every coefficient is a non-negative count, so the largest one bounds
    // all partial sums that fed into the constant term
    let largest = walks.iter().map(|(_, v)| v).fold(0.0, f64::max);
    if largest >= EXACT_INTEGER_LIMIT {
        return Err(SprayError::Overflow(format!(
            "walk counts reach {largest:e}, beyond exact double-precision integers"
        )));
    }
    Ok(walks.constant())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_step_far_from_traps_conserves_mass() {
        let cfg = WalkConfig::standard();
        let s = timestep(&cfg.initial_state().unwrap(), &cfg).unwrap();
        assert_eq!(s.num_terms(), 5);
        assert!((s.coeffs().sum() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn trap_mass_is_removed() {
        let cfg = WalkConfig {
            initial: MultiIndex::from([2, 3]),
            ..WalkConfig::standard()
        };
        let s = timestep(&cfg.initial_state().unwrap(), &cfg).unwrap();
        assert_eq!(s.get(&[2, 3]).unwrap(), 0.0);
        assert!((s.coeffs().sum() - 0.8).abs() < 1e-15);
    }

    #[test]
    fn zero_steps_survive() {
        let cfg = WalkConfig {
            steps: 0,
            ..WalkConfig::standard()
        };
        assert_eq!(run_walk(&cfg).unwrap().survival, 1.0);
    }

    #[test]
    fn no_traps_conserve_mass() {
        let cfg = WalkConfig {
            traps: vec![],
            steps: 50,
            ..WalkConfig::standard()
        };
        assert!((run_walk(&cfg).unwrap().survival - 1.0).abs() < 1e-12);
    }

    #[test]
    fn config_validation() {
        let base = WalkConfig::standard();
        let bad_trap = WalkConfig {
            traps: vec![MultiIndex::from([17, 0])],
            ..base.clone()
        };
        assert!(matches!(run_walk(&bad_trap), Err(SprayError::Domain(_))));
        let bad_dim = WalkConfig {
            initial: MultiIndex::from([1, 2, 3]),
            ..base.clone()
        };
        assert!(matches!(run_walk(&bad_dim), Err(SprayError::Arity { .. })));
        let heavy = WalkConfig {
            kernel: SparsePoly::walk_kernel(2).unwrap() * 2.0,
            ..base.clone()
        };
        assert!(matches!(run_walk(&heavy), Err(SprayError::Domain(_))));
        let bad_n = WalkConfig { n: 0, ..base };
        assert!(run_walk(&bad_n).is_err());
    }

    #[test]
    fn free_walk_first_step_is_shifted_kernel() {
        let k = SparsePoly::walk_kernel(2).unwrap();
        let start = MultiIndex::from([3, -1]);
        let pmf = free_walk_pmf(&start, &k, 1).unwrap();
        let shift = SparsePoly::from_pairs([(start, 1.0)], 2, Backend::Hashed).unwrap();
        assert_eq!(pmf, &shift * &k);
        assert_eq!(
            free_walk_pmf(&MultiIndex::from([0, 0]), &k, 0).unwrap(),
            SparsePoly::unit(2).unwrap()
        );
    }

    #[test]
    fn short_knight_counts() {
        for d in 2..=4 {
            assert_eq!(
                knight_closed_walks(d, 2, false).unwrap(),
                (4 * d * (d - 1)) as f64
            );
            assert_eq!(knight_closed_walks(d, 0, false).unwrap(), 1.0);
        }
        for m in [1, 3, 5, 7] {
            assert_eq!(knight_closed_walks(2, m, false).unwrap(), 0.0);
        }
        assert!(knight_closed_walks(1, 2, false).is_err());
    }

    #[test]
    fn overflow_guard() {
        // 9^20 walks spread over ~6500 cells puts the peak count above 2^53
        assert!(matches!(
            knight_closed_walks(2, 20, true),
            Err(SprayError::Overflow(_))
        ));
    }
}
