//! Runs independent jobs (whole games, separate searches) side by side.
//!
//! Results always come back in index order, so a batch is as deterministic
//! as its jobs. With the `parallel` feature off everything runs on the
//! calling thread.

/// Applies `job` to `0..n`, in parallel when the `parallel` feature is on.
pub fn map_indexed<T, F>(n: usize, job: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        par_map_indexed(n, job)
    }
    #[cfg(not(feature = "parallel"))]
    {
        seq_map_indexed(n, job)
    }
}

pub fn seq_map_indexed<T, F>(n: usize, job: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(job).collect()
}

#[cfg(feature = "parallel")]
pub fn par_map_indexed<T, F>(n: usize, job: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(job).collect()
}
