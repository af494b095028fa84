use rayon::{ThreadPool, ThreadPoolBuilder};

use crate::error::{Error, Result};

/// Worker pool handed to the parallel searches. Results never depend on the
/// number of workers.
pub struct Parallelism {
    pool: ThreadPool,
}

impl Parallelism {
    pub fn new(workers: usize) -> Result<Parallelism> {
        if workers == 0 {
            return Err(Error::TooLarge("worker count must be at least 1".into()));
        }
        let pool = ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::TooLarge(format!("cannot start worker pool: {e}")))?;
        Ok(Parallelism { pool })
    }

    pub fn sequential() -> Parallelism {
        Self::new(1).expect("single-thread pool")
    }

    /// One worker per available core.
    pub fn available() -> Parallelism {
        let k = std::thread::available_parallelism().map_or(1, |k| k.get());
        Self::new(k).expect("worker pool")
    }

    pub fn workers(&self) -> usize {
        self.pool.current_num_threads()
    }

    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        self.pool.install(f)
    }
}

impl Default for Parallelism {
    fn default() -> Self {
        Self::available()
    }
}
