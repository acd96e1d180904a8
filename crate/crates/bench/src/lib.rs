//! Workloads shared by the backend benchmarks.

use spray::{Backend, SparsePoly, WalkConfig};

/// `knight(d)` in the requested backend, optionally with the pause move.
pub fn knight_kernel(d: usize, pause: bool, backend: Backend) -> SparsePoly {
    let k = SparsePoly::knight(d).expect("d >= 2").into_backend(backend);
    if pause {
        k + 1.0
    } else {
        k
    }
}

/// The standard trapped walk with its kernel moved to `backend`.
pub fn walk_config(backend: Backend, steps: u32) -> WalkConfig {
    let cfg = WalkConfig::standard();
    WalkConfig {
        kernel: cfg.kernel.clone().into_backend(backend),
        steps,
        ..cfg
    }
}
