//! Data-parallel map helper with a sequential fallback.
//!
//! With the `parallel` feature (default) the map runs on rayon; results
//! are collected in index order and any reduction is performed
//! sequentially afterwards, so output bytes do not depend on the thread
//! count. Without the feature, or inside `force_sequential`, the same
//! code runs on one thread — the benches compare both paths.

use std::cell::Cell;

thread_local! {
    static FORCE_SEQ: Cell<bool> = const { Cell::new(false) };
}

/// Run `f` with parallelism disabled on this thread (used by benches and
/// determinism tests).
pub fn force_sequential<R>(f: impl FnOnce() -> R) -> R {
    FORCE_SEQ.with(|c| c.set(true));
    let out = f();
    FORCE_SEQ.with(|c| c.set(false));
    out
}

fn sequential_forced() -> bool {
    FORCE_SEQ.with(|c| c.get())
}

/// Order-preserving map over an index range.
#[cfg(feature = "parallel")]
pub fn par_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    if sequential_forced() {
        (0..n).map(f).collect()
    } else {
        (0..n).into_par_iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let _ = sequential_forced();
    (0..n).map(f).collect()
}
