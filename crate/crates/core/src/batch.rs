//! Data-parallel helpers. With the `parallel` feature (default) the closures
//! run on the rayon pool; without it, the same API runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Apply `f` to every item, preserving order.
#[cfg(feature = "parallel")]
pub fn map_batch<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_batch<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Apply `f` to every item sequentially regardless of features; the benches
/// use this as the baseline against `map_batch`.
pub fn map_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
