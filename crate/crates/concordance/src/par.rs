//! Parallel sweep helpers with a sequential fallback.
//!
//! Sweeps over independent inputs map through [`map_sweep`]; results come back
//! in input order, so parallel and sequential execution are observationally
//! identical. The `parallel` feature (default) backs this with rayon.

/// Execution mode for a sweep. `Auto` follows the crate feature.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Auto,
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        Exec::Auto
    }
}

impl Exec {
    fn parallel(self) -> bool {
        match self {
            Exec::Sequential => false,
            Exec::Parallel => cfg!(feature = "parallel"),
            Exec::Auto => cfg!(feature = "parallel"),
        }
    }
}

/// Map `f` over `items`, preserving input order in the output.
pub fn map_sweep<T, R, F>(exec: Exec, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if exec.parallel() {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
    }
    let _ = exec;
    items.into_iter().map(f).collect()
}

/// Configure the global rayon pool size; no-op without the feature or if a
/// pool already exists.
pub fn configure_threads(jobs: usize) {
    #[cfg(feature = "parallel")]
    {
        if jobs > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = jobs;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_preserved() {
        let xs: Vec<u32> = (0..100).collect();
        let seq = map_sweep(Exec::Sequential, xs.clone(), |x| x * x);
        let par = map_sweep(Exec::Auto, xs, |x| x * x);
        assert_eq!(seq, par);
    }
}
