//! Thin switch between rayon data parallelism and a sequential fallback.
//!
//! With the default `parallel` feature the maps below fan out over the rayon
//! global pool; without it they run in order on the calling thread. Both
//! paths return results in input order, so downstream output is identical
//! either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Apply `f` to every item and collect the results in input order.
#[cfg(feature = "parallel")]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

/// Apply `f` to every item and collect the results in input order.
#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
