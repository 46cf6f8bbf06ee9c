//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) [`Exec::Parallel`] runs on the rayon
//! pool; without it every helper runs sequentially. Results are always returned
//! in input order, so output never depends on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Maps `f` over `0..n`, keeping the `Some` results in index order.
pub fn filter_map_range<R, F>(exec: Exec, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..n).into_par_iter().filter_map(f).collect();
    }
    let _ = exec;
    (0..n).filter_map(f).collect()
}

/// Flat-maps `f` over a slice, concatenating results in input order.
pub fn flat_map_slice<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Vec<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().flat_map_iter(&f).collect();
    }
    let _ = exec;
    items.iter().flat_map(f).collect()
}

/// Maps `f` over a slice in input order.
pub fn map_slice<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Sorts pairs by their key; stable so equal keys keep their order.
pub fn sort_by_key<K: Ord + Send, V: Send>(items: &mut [(K, V)]) {
    #[cfg(feature = "parallel")]
    {
        items.par_sort_by(|a, b| a.0.cmp(&b.0));
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.sort_by(|a, b| a.0.cmp(&b.0));
    }
}

/// Runs `f` inside a pool of `jobs` workers (0 = rayon default).
pub fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if jobs > 0 {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            return pool.install(f);
        }
    }
    let _ = jobs;
    f()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_deterministic() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            let v = filter_map_range(exec, 1000, |i| (i % 3 == 0).then_some(i));
            assert_eq!(v, (0..1000).step_by(3).collect::<Vec<_>>());
            let w = flat_map_slice(exec, &[1usize, 2, 3], |&k| vec![k; k]);
            assert_eq!(w, vec![1, 2, 2, 3, 3, 3]);
        }
        assert_eq!(with_jobs(2, || 7), 7);
    }
}
