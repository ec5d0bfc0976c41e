//! Execution strategy for the data-parallel sweeps.
//!
//! With the `parallel` feature (default) [`Execution::Parallel`] runs on the
//! rayon pool; without it every strategy runs sequentially. Both strategies
//! preserve input order, so results never depend on the choice.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Order-preserving map over `items`.
    pub fn map<T, U, F>(self, items: Vec<T>, f: F) -> Vec<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.into_par_iter().map(f).collect(),
            _ => items.into_iter().map(f).collect(),
        }
    }
}

/// Runs `f` with at most `jobs` worker threads when `jobs` is given.
///
/// Without the `parallel` feature `jobs` is ignored.
pub fn with_jobs<R, F>(jobs: Option<usize>, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    #[cfg(feature = "parallel")]
    if let Some(n) = jobs {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            return pool.install(f);
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = jobs;
    f()
}
