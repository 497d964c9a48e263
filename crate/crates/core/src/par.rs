//! Sharded sampling with an optional rayon backend.
//!
//! Every sweep in the crate splits its sample range into a fixed number of
//! shards, each driven by its own deterministic RNG stream (ChaCha stream `shard` under `seed`).
//! Results therefore do not depend on the thread count or on whether the
//! `parallel` feature is enabled.

use std::ops::Range;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Number of shards a sample range is split into.
pub const SHARDS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled, otherwise falls back
    /// to sequential execution.
    #[default]
    Parallel,
}

/// RNG for one shard of a seeded sweep.
pub fn shard_rng(seed: u64, shard: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shard as u64);
    rng
}

/// Index range covered by `shard` when `samples` are split into [`SHARDS`].
pub fn shard_range(samples: usize, shard: usize) -> Range<usize> {
    let per = samples.div_ceil(SHARDS);
    let start = (shard * per).min(samples);
    let end = ((shard + 1) * per).min(samples);
    start..end
}

/// Run `f` once per shard and collect the results in shard order.
pub fn map_shards<T, F>(exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        Execution::Sequential => (0..SHARDS).map(f).collect(),
        Execution::Parallel => parallel_map(f),
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, F>(f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..SHARDS).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, F>(f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..SHARDS).map(f).collect()
}
