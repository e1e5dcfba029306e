use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use exradii_core::oracle::{scan_base, sort_hits};
use exradii_core::{HeronHit, Scan};
use rayon::prelude::*;

/// Runs the per-base scan on a rayon pool. Output is sorted after the
/// merge, so it is identical for any thread count.
#[derive(Debug, Default)]
pub struct ParallelScan {
    /// `None` uses rayon's default.
    pub threads: Option<usize>,
    /// Print a progress line to stderr every this many bases.
    pub progress_every: Option<u64>,
}

impl ParallelScan {
    pub fn with_threads(threads: Option<usize>) -> Self {
        ParallelScan { threads, progress_every: None }
    }

    fn run(&self, bound: u64) -> Vec<HeronHit> {
        let done = AtomicU64::new(0);
        let start = Instant::now();
        let mut hits: Vec<HeronHit> = (1..=bound)
            .into_par_iter()
            .flat_map_iter(|alpha| {
                let hits = scan_base(alpha, bound);
                if let Some(every) = self.progress_every.filter(|&e| e > 0) {
                    let n = done.fetch_add(1, Ordering::Relaxed) + 1;
                    if n.is_multiple_of(every) {
                        eprintln!(
                            "scanned {n}/{bound} bases ({:.1?})",
                            start.elapsed()
                        );
                    }
                }
                hits
            })
            .collect();
        sort_hits(&mut hits);
        hits
    }
}

impl Scan for ParallelScan {
    fn hits(&self, bound: u64) -> Vec<HeronHit> {
        match self.threads {
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("thread pool")
                .install(|| self.run(bound)),
            None => self.run(bound),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exradii_core::Sequential;

    #[test]
    fn same_hits_for_any_thread_count() {
        let reference = Sequential.hits(400);
        for threads in [1, 2, 3, 8] {
            assert_eq!(ParallelScan::with_threads(Some(threads)).hits(400), reference);
        }
        assert_eq!(ParallelScan::default().hits(400), reference);
    }
}
