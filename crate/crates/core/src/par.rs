//! Thin execution layer: data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature (default) the hot loops fan out over rayon;
//! without it the same code paths run on plain iterators.  Results are
//! collected in input order either way, so output never depends on thread
//! scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, in parallel when the `parallel` feature is on.
pub fn map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

/// Always-sequential twin of [`map_vec`]; reference path for benchmarks.
pub fn map_vec_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_iter().map(f).collect()
}

/// Installs a global rayon pool with `jobs` threads.  Call at most once,
/// before any parallel work.  No-op without the `parallel` feature.
pub fn configure_threads(jobs: usize) {
    #[cfg(feature = "parallel")]
    {
        // Ignore the error from a pool that is already installed: tests and
        // repeated CLI invocations in-process just keep the first pool.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
    }
}
