//! Deterministic parallel execution of verification suites.
//!
//! Trials are seeded individually from (seed, trial index), so the same
//! report comes back no matter how the work is split across threads.

use lct_core::bounds::{run_trial, summarize, InstanceSampler, Suite, SuiteReport, TrialRecord};

/// Worker count: `LCT_KIT_THREADS` if set, else the machine parallelism.
pub fn thread_cap() -> usize {
    match std::env::var("LCT_KIT_THREADS") {
        Ok(v) => v.trim().parse::<usize>().ok().filter(|&t| t >= 1).unwrap_or(1),
        Err(_) => std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1),
    }
    .min(256)
}

/// Runs `trials` suite trials on up to `threads` workers.
pub fn run_suite_parallel(
    sampler: &InstanceSampler,
    suite: Suite,
    trials: u64,
    threads: usize,
) -> SuiteReport {
    let workers = threads.clamp(1, trials.max(1) as usize);
    let mut records: Vec<TrialRecord> = if workers == 1 {
        (0..trials).map(|t| run_trial(sampler, suite, t)).collect()
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers as u64)
                .map(|offset| {
                    scope.spawn(move || {
                        (offset..trials)
                            .step_by(workers)
                            .map(|t| run_trial(sampler, suite, t))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("suite worker panicked"))
                .collect()
        })
    };
    records.sort_by_key(|r| r.trial);
    summarize(suite, records)
}
