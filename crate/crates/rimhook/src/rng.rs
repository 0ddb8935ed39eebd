//! Seeding conventions for reproducible (and reproducibly parallel)
//! sampling.
//!
//! Every stochastic routine takes either an explicit generator or a
//! `(master seed, worker count)` pair. Worker w draws from the ChaCha stream
//! `w` of the master seed, so results depend only on the pair, never on
//! scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Generator for one worker of a parallel run.
pub fn worker_rng(master_seed: u64, worker: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(worker);
    rng
}

/// Deterministic split of `count` across `workers`: the first
/// `count % workers` workers take one extra item.
pub fn split_count(count: usize, workers: usize) -> Vec<usize> {
    assert!(workers >= 1);
    let base = count / workers;
    let extra = count % workers;
    (0..workers)
        .map(|w| base + usize::from(w < extra))
        .collect()
}

/// Runs `f(worker_index)` on `workers` scoped threads and returns the
/// results in worker order.
pub fn run_workers<T, F>(workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    assert!(workers >= 1);
    if workers == 1 {
        return vec![f(0)];
    }
    let mut slots: Vec<Option<T>> = (0..workers).map(|_| None).collect();
    std::thread::scope(|scope| {
        for (w, slot) in slots.iter_mut().enumerate() {
            let f = &f;
            scope.spawn(move || {
                *slot = Some(f(w));
            });
        }
    });
    slots.into_iter().map(|s| s.expect("worker finished")).collect()
}
