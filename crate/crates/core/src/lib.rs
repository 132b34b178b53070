//! Recognition and reconstruction toolkit for distance matrices of
//! positive-weighted graphs.
//!
//! Given a symmetric matrix of exact nonnegative rationals, the crate
//! decides whether it is the distance matrix of a positive-weighted
//! n-hypercube in which every edge is useful (two independent condition
//! sets), of an arbitrary positive-weighted 3-cube, of a positive-weighted
//! Petersen graph, or of a positive-weighted tree. Accepting verdicts come
//! with a verified certificate (an embedding onto the target graph plus the
//! reconstructed edge weights); rejections name the violated condition and a
//! concrete witness.
//!
//! The entry-classification kernel at the center of every recognizer runs in
//! O(m^3) exact integer comparisons and, with the `parallel` feature
//! (default), distributes rows across rayon workers; results are
//! bit-identical to the sequential order.

pub mod embed;
pub mod error;
pub mod generators;
pub mod graph;
pub mod matrix;
pub mod matrix_io;
pub mod oracle;
pub mod rational;
pub mod recognize;
mod scaled;

use std::sync::atomic::{AtomicBool, Ordering};

static FORCE_SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Disables or re-enables the data-parallel kernels at runtime. The
/// sequential and parallel paths produce bit-identical results; this only
/// affects scheduling (the CLI maps `METRIC_RECOGNIZER_THREADS=0` here).
pub fn set_force_sequential(force: bool) {
    FORCE_SEQUENTIAL.store(force, Ordering::Relaxed);
}

/// True when kernels may fan out to worker threads.
pub fn parallel_active() -> bool {
    cfg!(feature = "parallel") && !FORCE_SEQUENTIAL.load(Ordering::Relaxed)
}
