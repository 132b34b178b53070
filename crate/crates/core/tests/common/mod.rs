//! Shared helpers and independent oracles for the integration suites. The
//! oracles here deliberately avoid the library's own algorithms: shortest
//! paths are recomputed by edge relaxation and skeleton layers by boolean
//! walk powers.

#![allow(dead_code)]
#![allow(clippy::needless_range_loop)] // index-style loops mirror the definitions

use metric_core::graph::{Graph, WeightedGraph};
use metric_core::matrix::{DistanceMatrix, EntryClassification, PredistanceMatrix};
use metric_core::rational::{rat_int, Rat};
use metric_core::recognize::{recognize, Recognizer, Verdict};
use std::collections::BTreeMap;

pub fn unit_weighted(g: &Graph) -> WeightedGraph {
    let weights: BTreeMap<_, _> = g.edges().into_iter().map(|e| (e, rat_int(1))).collect();
    WeightedGraph::new(g.clone(), weights).expect("unit weights are positive")
}

pub fn unit_matrix(g: &Graph) -> DistanceMatrix {
    unit_weighted(g).apsp().expect("graph must be connected")
}

/// Independent all-pairs shortest paths: per-source Bellman-Ford relaxation
/// until a fixed point.
pub fn reference_apsp(w: &WeightedGraph) -> Vec<Vec<Option<Rat>>> {
    let m = w.order();
    let edges: Vec<(usize, usize, Rat)> = w
        .edge_weights()
        .map(|(u, v, wt)| (u, v, wt.clone()))
        .collect();
    (0..m)
        .map(|s| {
            let mut dist: Vec<Option<Rat>> = vec![None; m];
            dist[s] = Some(rat_int(0));
            for _round in 0..m {
                let mut changed = false;
                for (u, v, wt) in &edges {
                    for (a, b) in [(*u, *v), (*v, *u)] {
                        if let Some(da) = dist[a].clone() {
                            let cand = &da + wt;
                            if dist[b].as_ref().is_none_or(|db| cand < *db) {
                                dist[b] = Some(cand);
                                changed = true;
                            }
                        }
                    }
                }
                if !changed {
                    break;
                }
            }
            dist
        })
        .collect()
}

/// Definitional layer depth: the smallest k such that a walk of exactly k
/// indecomposable steps joins x and y, computed by boolean walk powers.
pub fn definitional_depths(c: &EntryClassification, x: usize) -> Vec<Option<usize>> {
    let m = c.order();
    let mut depth: Vec<Option<usize>> = vec![None; m];
    depth[x] = Some(0);
    let mut reachable = vec![false; m];
    reachable[x] = true;
    for k in 1..=m {
        let mut next = vec![false; m];
        for y in 0..m {
            for z in 0..m {
                if reachable[z] && z != y && c.is_indecomposable(z, y) {
                    next[y] = true;
                    break;
                }
            }
        }
        for y in 0..m {
            if next[y] && depth[y].is_none() {
                depth[y] = Some(k);
            }
        }
        reachable = next;
    }
    depth
}

/// Runs a recognizer through the full pipeline, treating validation failure
/// as a rejection; panics on internal recognizer errors.
pub fn pipeline_accepts(p: PredistanceMatrix, which: Recognizer) -> bool {
    match p.validate() {
        Err(_) => false,
        Ok(d) => match recognize(&d, which) {
            Ok(v) => v.accepted,
            Err(e) => panic!("recognizer error on same-order input: {e}"),
        },
    }
}

/// Re-verifies an accepting certificate from outside the recognizer: the
/// APSP of the certificate graph must equal the input entrywise.
pub fn certificate_round_trips(v: &Verdict, d: &DistanceMatrix) -> bool {
    let Some(cert) = &v.certificate else {
        return false;
    };
    let Ok(reconstructed) = cert.graph.apsp() else {
        return false;
    };
    reconstructed == *d
}
