//! Brute-force realizability oracle: searches all bijections of the index
//! set onto a target graph's vertices and tests each candidate by an APSP
//! round-trip. Independent of the recognizers, it provides ground truth for
//! every theorem-level check at small orders.

use crate::embed::Embedding;
use crate::error::OracleError;
use crate::graph::{Graph, WeightedGraph};
use crate::matrix::{classify, skeleton, DistanceMatrix};
use crate::rational::rat_int;

/// Factorial search guard.
pub const ORACLE_MAX_ORDER: usize = 10;

/// Searches for a bijection of `{0..m}` onto the target's vertices under
/// which the matrix is realized: mapped skeleton edges get the matrix entry
/// as weight, remaining target edges get twice the maximum entry, and the
/// APSP of the result must reproduce the matrix. Returns the first verifying
/// embedding.
///
/// The search is pruned by the fact that a skeleton edge must land on a
/// target edge (its entry is strictly cheaper than any two-leg path), so
/// candidates are filtered by the adjacency of already-placed neighbors.
pub fn oracle_realizable(
    d: &DistanceMatrix,
    target: &Graph,
) -> Result<Option<Embedding>, OracleError> {
    let m = d.order();
    if m != target.order() {
        return Err(OracleError::OrderMismatch {
            matrix: m,
            target: target.order(),
        });
    }
    if m > ORACLE_MAX_ORDER {
        return Err(OracleError::SizeGuard {
            m,
            max: ORACLE_MAX_ORDER,
        });
    }
    let c = classify(d);
    let skel = skeleton(d, &c);

    // Place vertices in skeleton BFS order from a maximum-degree root, so
    // every vertex after the first is constrained by a placed neighbor.
    let root = (0..m).max_by_key(|&v| skel.degree(v)).unwrap_or(0);
    let dist = skel.bfs_distances(root);
    let mut by_depth: Vec<(usize, usize)> = dist
        .iter()
        .enumerate()
        .map(|(v, &t)| (t, v))
        .collect();
    by_depth.sort_unstable();
    let order: Vec<usize> = by_depth.into_iter().map(|(_, v)| v).collect();

    let mut image = vec![usize::MAX; m];
    let mut used = vec![false; m];
    let found = place(d, &skel, target, &order, 0, &mut image, &mut used);
    Ok(found)
}

fn place(
    d: &DistanceMatrix,
    skel: &Graph,
    target: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> Option<Embedding> {
    let m = order.len();
    if depth == m {
        let emb = Embedding::new(image.clone());
        return if verifies(d, skel, target, &emb) {
            Some(emb)
        } else {
            None
        };
    }
    let v = order[depth];
    'cand: for t in 0..m {
        if used[t] || target.degree(t) < skel.degree(v) {
            continue;
        }
        for &w in skel.neighbors(v) {
            if image[w] != usize::MAX && !target.has_edge(image[w], t) {
                continue 'cand;
            }
        }
        image[v] = t;
        used[t] = true;
        if let Some(found) = place(d, skel, target, order, depth + 1, image, used) {
            return Some(found);
        }
        image[v] = usize::MAX;
        used[t] = false;
    }
    None
}

fn verifies(d: &DistanceMatrix, skel: &Graph, target: &Graph, emb: &Embedding) -> bool {
    let inv = emb.inverse();
    let heavy = d.max_entry() * rat_int(2);
    let edges: Vec<(usize, usize, _)> = target
        .edges()
        .into_iter()
        .map(|(a, b)| {
            let (i, j) = (inv[a], inv[b]);
            let w = if skel.has_edge(i, j) {
                d.get(i, j).clone()
            } else {
                heavy.clone()
            };
            (i, j, w)
        })
        .collect();
    let Ok(wg) = WeightedGraph::from_edge_weights(d.order(), edges) else {
        return false;
    };
    let Ok(reconstructed) = wg.apsp() else {
        return false;
    };
    let m = d.order();
    (0..m).all(|i| {
        (0..m).all(|j| d.tolerance().eq(reconstructed.get(i, j), d.get(i, j)))
    })
}
