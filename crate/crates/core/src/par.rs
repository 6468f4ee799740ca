//! Execution mode selection.
//!
//! With the `parallel` feature the hot loops can fan out over rayon's global
//! pool; without it every mode runs sequentially.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Whether parallel execution is both requested and compiled in.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Maps `f` over `items` and folds the results with `combine`.
///
/// Results are combined in an unspecified order, so `combine` must be
/// associative and commutative.
pub fn map_reduce<T, R, I, F, C>(exec: Exec, items: &[T], identity: I, f: F, combine: C) -> R
where
    T: Sync,
    R: Send,
    I: Fn() -> R + Sync + Send,
    F: Fn(&T) -> R + Sync + Send,
    C: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(&f).reduce(&identity, &combine);
    }
    let _ = exec;
    items.iter().map(f).fold(identity(), combine)
}

/// Maps `f` over `items`, keeping input order.
pub fn map_collect<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(&f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Splits `items` into at most `parts` contiguous chunks of near-equal size.
pub fn chunks<T>(items: &[T], parts: usize) -> Vec<&[T]> {
    if items.is_empty() {
        return Vec::new();
    }
    let parts = parts.clamp(1, items.len());
    let size = items.len().div_ceil(parts);
    items.chunks(size).collect()
}

/// Worker count for chunked work.
pub fn workers(exec: Exec) -> usize {
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return rayon::current_num_threads();
    }
    let _ = exec;
    1
}
