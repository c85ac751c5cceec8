//! Serial or data-parallel evaluation of independent work items.
//!
//! With the `parallel` feature, [`Execution::Parallel`] runs on a rayon
//! pool of the requested size; without it every mode falls back to a plain
//! loop. Results always come back in input order, so callers see the same
//! output whichever mode ran.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Serial,
    /// `jobs == 0` means one worker per available core.
    Parallel { jobs: usize },
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel { jobs: 0 }
        } else {
            Execution::Serial
        }
    }
}

impl Execution {
    pub fn from_jobs(jobs: usize) -> Self {
        if jobs == 1 {
            Execution::Serial
        } else {
            Execution::Parallel { jobs }
        }
    }

    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && matches!(self, Execution::Parallel { .. })
    }

    /// `items.iter().map(f).collect()`, possibly in parallel.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel { jobs } => par::map(jobs, items, f),
            _ => items.iter().map(f).collect(),
        }
    }
}

#[cfg(feature = "parallel")]
mod par {
    use rayon::prelude::*;

    pub(super) fn map<T, R, F>(jobs: usize, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        let run = || items.par_iter().map(&f).collect();
        if jobs == 0 {
            return run();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree_and_keep_order() {
        let items: Vec<u64> = (0..1000).collect();
        let f = |x: &u64| x * x + 1;
        let serial = Execution::Serial.map(&items, f);
        let par = Execution::Parallel { jobs: 3 }.map(&items, f);
        let auto = Execution::default().map(&items, f);
        assert_eq!(serial, par);
        assert_eq!(serial, auto);
        assert_eq!(serial[10], 101);
    }
}
