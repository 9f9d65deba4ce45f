//! Thread-pool backed [`Mapper`] for the subpolytope search.

use fine_core::classify::Mapper;
use rayon::prelude::*;

/// Environment variable holding the default worker count.
pub const JOBS_ENV: &str = "FINE_JOBS";

/// Worker count from `FINE_JOBS`, falling back to the available parallelism.
pub fn default_jobs() -> usize {
    std::env::var(JOBS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Maps work items on a dedicated rayon pool. Results keep input order, so
/// output does not depend on the worker count.
pub struct RayonMapper {
    pool: rayon::ThreadPool,
}

impl RayonMapper {
    pub fn new(jobs: usize) -> Result<Self, rayon::ThreadPoolBuildError> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build()?;
        Ok(Self { pool })
    }

    pub fn jobs(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl Mapper for RayonMapper {
    fn map<T: Sync, R: Send, F: Fn(&T) -> R + Sync + Send>(&self, items: &[T], f: F) -> Vec<R> {
        self.pool.install(|| items.par_iter().map(&f).collect())
    }
}
