//! Data-parallel execution with a sequential fallback.
//!
//! Every heavy loop in the crate (the set-partition sum, per-cell Euler
//! characteristic tables, identity sweeps) goes through [`Exec`]. With the
//! `parallel` feature the `Parallel` strategy runs on the rayon pool; without
//! it both strategies run sequentially. Reductions are over exact arithmetic,
//! so the result never depends on the strategy or on the thread count.

/// Execution strategy for data-parallel loops.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Exec {
    #[default]
    Parallel,
    Sequential,
}

impl Exec {
    /// True when this strategy actually uses worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Maps every item and collects the results in input order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Maps every item and folds the results with an associative `combine`.
    pub fn map_reduce<T, R, F, I, C>(self, items: &[T], map: F, identity: I, combine: C) -> R
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
        I: Fn() -> R + Sync + Send,
        C: Fn(R, R) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(map).reduce(identity, combine);
        }
        items.iter().map(map).fold(identity(), combine)
    }
}

/// Configures the global worker pool. Returns false if it was already built.
#[cfg(feature = "parallel")]
pub fn init_pool(threads: usize) -> bool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .is_ok()
}

#[cfg(not(feature = "parallel"))]
pub fn init_pool(_threads: usize) -> bool {
    false
}
