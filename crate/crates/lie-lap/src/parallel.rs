//! Rayon-backed [`Executor`].

use lie_lap_core::exec::Executor;
use rayon::prelude::*;
use rayon::ThreadPool;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "LIE_LAP_THREADS";

pub struct Rayon {
    pool: ThreadPool,
}

impl Rayon {
    /// A pool with `threads` workers; `None` reads `LIE_LAP_THREADS`, and
    /// falls back to rayon's default (one per core).
    pub fn new(threads: Option<usize>) -> Self {
        let threads = threads.or_else(|| std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse().ok()));
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = threads.filter(|&n| n > 0) {
            builder = builder.num_threads(n);
        }
        Rayon { pool: builder.build().expect("thread pool") }
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl Executor for Rayon {
    fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        self.pool.install(|| items.par_iter().map(f).collect())
    }
}
