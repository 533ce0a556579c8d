//! A thread-pool executor for prefix tasks.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use antiramsey_core::search::{Executor, Search, Sequential, TaskOutcome};

/// Runs prefix tasks on `jobs` scoped threads. Outcomes come back in prefix
/// order, so results do not depend on the thread count.
#[derive(Debug, Clone, Copy)]
pub struct Threads {
    jobs: usize,
}

impl Threads {
    pub fn new(jobs: usize) -> Self {
        Threads { jobs: jobs.max(1) }
    }

    pub fn jobs(&self) -> usize {
        self.jobs
    }
}

impl Executor for Threads {
    fn run(&self, search: &Search, prefixes: &[Vec<usize>]) -> Vec<TaskOutcome> {
        if self.jobs == 1 || prefixes.len() < 2 {
            return Sequential.run(search, prefixes);
        }
        let next = AtomicUsize::new(0);
        let slots: Vec<Mutex<Option<TaskOutcome>>> = prefixes.iter().map(|_| Mutex::new(None)).collect();
        thread::scope(|s| {
            for _ in 0..self.jobs.min(prefixes.len()) {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(p) = prefixes.get(i) else { break };
                    let out = search.run_task(p);
                    *slots[i].lock().unwrap() = Some(out);
                });
            }
        });
        slots
            .into_iter()
            .map(|m| m.into_inner().unwrap().expect("every task ran"))
            .collect()
    }
}
