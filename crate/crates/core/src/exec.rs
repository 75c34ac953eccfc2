//! Data-parallel map helpers. With the default `parallel` feature these run
//! on rayon; without it they degrade to plain iteration. Callers are written
//! so the merged result is identical either way.

/// Runs `f` on a rayon pool with the given thread count (`None` = default
/// pool). Without the `parallel` feature the count is ignored and `f` runs
/// inline.
#[cfg(feature = "parallel")]
pub fn run_with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .expect("thread pool builds")
            .install(f),
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn run_with_threads<R>(_threads: Option<usize>, f: impl FnOnce() -> R) -> R {
    f()
}

#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..n).map(f).collect()
}
