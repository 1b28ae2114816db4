//! Execution strategy for the data-parallel kernels.
//!
//! Every kernel reduces with exact rational addition, which is associative
//! and commutative, so the result is identical under either strategy and
//! for any number of worker threads.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Sequential,
    /// Runs on the global rayon pool. Without the `parallel` feature this
    /// falls back to the sequential path.
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

impl Strategy {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Strategy::Parallel
    }

    /// Folds every index in `0..len` into an accumulator and merges the
    /// partial accumulators.
    pub(crate) fn fold_range<A, I, F, M>(self, len: u64, init: I, fold: F, merge: M) -> A
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(A, u64) -> A + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Strategy::Parallel {
            return (0..len).into_par_iter().fold(&init, &fold).reduce(&init, &merge);
        }
        let _ = &merge;
        (0..len).fold(init(), fold)
    }

    /// Same as [`Strategy::fold_range`] over the items of a slice.
    pub(crate) fn fold_slice<T, A, I, F, M>(self, items: &[T], init: I, fold: F, merge: M) -> A
    where
        T: Sync,
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(A, &T) -> A + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Strategy::Parallel {
            return items.par_iter().fold(&init, &fold).reduce(&init, &merge);
        }
        let _ = &merge;
        items.iter().fold(init(), fold)
    }

    /// Order-preserving map.
    pub(crate) fn map_slice<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Strategy::Parallel {
            return items.par_iter().map(&f).collect();
        }
        items.iter().map(f).collect()
    }
}
