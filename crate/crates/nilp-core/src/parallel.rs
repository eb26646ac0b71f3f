//! Data-parallel helpers with a sequential fallback.
//!
//! Everything in this crate is pure, so the heavy sweeps (catalog
//! verification, cochain matrix assembly, row elimination) parallelise
//! trivially with rayon. The `parallel` cargo feature selects the rayon
//! code paths at compile time; [`set_enabled`] additionally lets benches
//! force the sequential path at runtime so both can be compared within a
//! single binary. Without the feature the helpers are plain loops.

use std::sync::atomic::{AtomicBool, Ordering};

static RUNTIME_ENABLED: AtomicBool = AtomicBool::new(true);

/// Runtime switch for the rayon code paths. Only meaningful when the
/// crate is built with the `parallel` feature; a no-op otherwise.
pub fn set_enabled(enabled: bool) {
    RUNTIME_ENABLED.store(enabled, Ordering::Relaxed);
}

/// True when the rayon paths are compiled in and currently enabled.
pub fn enabled() -> bool {
    cfg!(feature = "parallel") && RUNTIME_ENABLED.load(Ordering::Relaxed)
}

/// Map `0..n` through `f`, in parallel when worthwhile.
pub(crate) fn map_indexed<T, F>(n: usize, min_len_for_parallel: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        if enabled() && n >= min_len_for_parallel {
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    let _ = min_len_for_parallel;
    (0..n).map(f).collect()
}

/// Run two independent computations, in parallel when enabled.
pub(crate) fn join<A, B, RA, RB>(a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    #[cfg(feature = "parallel")]
    {
        if enabled() {
            return rayon::join(a, b);
        }
    }
    (a(), b())
}
