//! Data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature the default is rayon; without it every call
//! runs on the current thread. `SHIFTED_CRYSTAL_THREADS` caps the pool size.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Parallel when the feature is compiled in.
    pub fn default_for_build() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

#[cfg(feature = "parallel")]
fn init_pool() {
    use std::sync::Once;
    static INIT: Once = Once::new();
    INIT.call_once(|| {
        if let Some(k) = std::env::var("SHIFTED_CRYSTAL_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
            // Fails only if a global pool already exists; that pool is then used as is.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global();
        }
    });
}

/// Order-preserving map.
pub fn map_with<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            init_pool();
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_with(Execution::default_for_build(), items, f)
}

/// Order-preserving flat map.
pub fn flat_map_with<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Vec<R> + Sync + Send,
{
    map_with(exec, items, f).into_iter().flatten().collect()
}

pub fn flat_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Vec<R> + Sync + Send,
{
    flat_map_with(Execution::default_for_build(), items, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = map_with(Execution::Sequential, &xs, |x| x * x);
        let b = map_with(Execution::Parallel, &xs, |x| x * x);
        assert_eq!(a, b);
        assert_eq!(flat_map(&xs[..3], |&x| vec![x; x as usize]), vec![1, 2, 2]);
    }
}
