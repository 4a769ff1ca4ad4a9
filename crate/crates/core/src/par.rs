//! Index-range scans that run on rayon when the `parallel` feature is on and
//! sequentially otherwise. Results always come back in index order, so the
//! output never depends on the worker count.

/// Requested worker count for a scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Workers {
    /// Rayon's global pool (sequential without the `parallel` feature).
    #[default]
    Auto,
    /// A dedicated pool of this many threads; `Fixed(1)` never touches rayon.
    Fixed(usize),
}

impl Workers {
    pub fn sequential() -> Self {
        Workers::Fixed(1)
    }
}

/// `(0..n).map(f)` collected in index order.
pub fn map_range<T, F>(n: u64, workers: Workers, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        match workers {
            Workers::Fixed(k) if k <= 1 => (0..n).map(f).collect(),
            Workers::Fixed(k) => rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .expect("thread pool")
                .install(|| (0..n).into_par_iter().map(f).collect()),
            Workers::Auto => (0..n).into_par_iter().map(f).collect(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = workers;
        (0..n).map(f).collect()
    }
}

/// Like [`map_range`] but over a slice.
pub fn map_slice<I, T, F>(items: &[I], workers: Workers, f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    map_range(items.len() as u64, workers, |i| f(&items[i as usize]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_independent_of_workers() {
        let seq = map_range(1000, Workers::sequential(), |i| i * i);
        for w in [Workers::Auto, Workers::Fixed(2), Workers::Fixed(7)] {
            assert_eq!(map_range(1000, w, |i| i * i), seq);
        }
        assert!(map_range(0, Workers::Auto, |i| i).is_empty());
    }
}
