//! Data-parallel sweep helper. With the `parallel` feature (default) the
//! sweep runs on rayon; without it the same call runs sequentially. Output
//! order equals input order in both modes, so reports stay deterministic.

#[cfg(feature = "parallel")]
pub(crate) fn try_map_ordered<T, U, E, F>(items: Vec<T>, f: F) -> Result<Vec<U>, E>
where
    T: Send,
    U: Send,
    E: Send,
    F: Fn(T) -> Result<U, E> + Send + Sync,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn try_map_ordered<T, U, E, F>(items: Vec<T>, f: F) -> Result<Vec<U>, E>
where
    T: Send,
    U: Send,
    E: Send,
    F: Fn(T) -> Result<U, E> + Send + Sync,
{
    items.into_iter().map(f).collect()
}
