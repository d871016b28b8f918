//! Data-parallel helpers. With the `parallel` feature these run on rayon;
//! without it, or when `parallel` is false, they run sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map_collect<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().map(f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

/// Smallest `i < n` satisfying `pred`.
pub fn find_first<F>(n: u64, parallel: bool, pred: F) -> Option<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return (0..n).into_par_iter().find_first(|&i| pred(i));
    }
    let _ = parallel;
    (0..n).find(|&i| pred(i))
}

/// Runs `f` with `jobs` worker threads; `0` means the rayon default.
pub fn install<R, F>(jobs: usize, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    #[cfg(feature = "parallel")]
    if jobs != 1 {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if jobs > 0 {
            builder = builder.num_threads(jobs);
        }
        if let Ok(pool) = builder.build() {
            return pool.install(f);
        }
    }
    let _ = jobs;
    f()
}

pub fn enabled() -> bool {
    cfg!(feature = "parallel")
}
