//! Execution strategy for the data-parallel enumeration kernels.
//!
//! Every kernel folds an exact commutative sum or collects into a canonical
//! sort, so the result is identical whichever strategy runs it. Without the
//! `parallel` feature the parallel strategy degrades to the sequential code
//! path.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

/// Map items and combine with an associative, commutative operation.
pub(crate) fn map_reduce<T, R, M, Z, C>(
    items: &[T],
    strategy: Strategy,
    zero: Z,
    map: M,
    combine: C,
) -> R
where
    T: Sync,
    R: Send,
    M: Fn(&T) -> R + Sync + Send,
    Z: Fn() -> R + Sync + Send,
    C: Fn(R, R) -> R + Sync + Send,
{
    match strategy {
        Strategy::Sequential => items.iter().map(&map).fold(zero(), &combine),
        Strategy::Parallel => {
            #[cfg(feature = "parallel")]
            {
                items.par_iter().map(&map).reduce(&zero, &combine)
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.iter().map(&map).fold(zero(), &combine)
            }
        }
    }
}

/// Map items to batches and concatenate; order of the output is not
/// guaranteed, callers sort canonically.
pub(crate) fn flat_map_collect<T, R, M>(items: &[T], strategy: Strategy, map: M) -> Vec<R>
where
    T: Sync,
    R: Send,
    M: Fn(&T) -> Vec<R> + Sync + Send,
{
    match strategy {
        Strategy::Sequential => items.iter().flat_map(&map).collect(),
        Strategy::Parallel => {
            #[cfg(feature = "parallel")]
            {
                items.par_iter().flat_map_iter(&map).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.iter().flat_map(&map).collect()
            }
        }
    }
}
