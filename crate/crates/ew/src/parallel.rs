//! Rayon drivers for the slice scan and see-saw restarts.
//!
//! Output is identical to the sequential versions in `ew_core`: nodes come back in grid
//! order and restarts are aggregated by `(value, index)`.

use std::sync::OnceLock;

use ew_core::certify::{aggregate, seesaw_restart, Extremum, SeesawConfig, SeesawResult};
use ew_core::simplex::{GridSpec, SliceContext, SliceGrid};
use ew_core::{BipartiteOperator, Result};
use rayon::prelude::*;
use rayon::ThreadPool;

/// Worker pool capped by `EW_THREADS` when set.
pub fn pool() -> &'static ThreadPool {
    static POOL: OnceLock<ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(n) = std::env::var("EW_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
            b = b.num_threads(n.max(1));
        }
        b.build().expect("thread pool")
    })
}

pub fn par_scan_slice(grid: &GridSpec, ctx: &SliceContext) -> Result<SliceGrid> {
    let nodes = grid.nodes();
    let points = pool().install(|| {
        nodes
            .par_iter()
            .map(|&(a, b)| ctx.classify(a, b))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(SliceGrid {
        spec: *grid,
        witness_names: ctx.witness_names().to_vec(),
        points,
    })
}

pub fn par_seesaw(w: &BipartiteOperator, ext: Extremum, cfg: &SeesawConfig) -> Result<SeesawResult> {
    let runs = pool().install(|| {
        (0..cfg.restarts)
            .into_par_iter()
            .map(|i| seesaw_restart(w, ext, cfg, i))
            .collect::<Result<Vec<_>>>()
    })?;
    aggregate(ext, &runs)
}

/// Closure form accepted by the `*_with` entry points of `ew_core`.
pub fn searcher(cfg: SeesawConfig) -> impl Fn(&BipartiteOperator, Extremum) -> Result<SeesawResult> {
    move |w, ext| par_seesaw(w, ext, &cfg)
}
