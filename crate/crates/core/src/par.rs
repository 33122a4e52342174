//! Execution-mode plumbing: the data-parallel inner loops (witness-stream
//! scans, per-pair verification, probe sampling) run on rayon when the
//! `parallel` feature is enabled and the caller asks for it, and fall back
//! to plain iterators otherwise. Results are merged deterministically, so
//! the mode never changes output content or order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How to drive a data-parallel inner loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    /// Uses the current rayon thread pool. Without the `parallel` feature
    /// this degrades to the sequential path.
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

/// Map `op` over `items`, preserving input order in the output.
pub(crate) fn map_items<T, U, F>(mode: ExecMode, items: &[T], op: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if mode == ExecMode::Parallel {
            return items.par_iter().map(op).collect();
        }
    }
    let _ = mode;
    items.iter().map(op).collect()
}

/// Map `op` over `items` and fold the per-item results with `merge`,
/// starting from `identity()`. `merge` must be associative and commutative
/// so the parallel reduction is schedule-independent.
pub(crate) fn map_reduce<T, U, F, I, M>(
    mode: ExecMode,
    items: &[T],
    op: F,
    identity: I,
    merge: M,
) -> U
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
    I: Fn() -> U + Sync + Send,
    M: Fn(U, U) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if mode == ExecMode::Parallel {
            return items.par_iter().map(&op).reduce(&identity, &merge);
        }
    }
    let _ = mode;
    items.iter().map(&op).fold(identity(), &merge)
}
