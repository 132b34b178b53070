//! Seeded, deterministic instance generators and mutation fixtures.
//!
//! Weights are sampled as dyadic rationals `k/2^16` inside the requested
//! range, so generated matrices stay exact and cheap to compare. The
//! all-useful weight ranges are chosen so every edge is forced useful: in a
//! hypercube any detour between adjacent vertices has at least two edges, so
//! weights in [1,2) keep the direct edge strictly cheapest; in the Petersen
//! graph (girth 5) a detour has at least four edges, allowing [1,4).

use crate::error::{GenError, GraphError, MatrixError};
use crate::graph::{Graph, WeightedGraph};
use crate::matrix::{DistanceMatrix, PredistanceMatrix};
use crate::rational::{rat, rat_int, Rat, Tolerance};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Instance families the generator can produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenFamily {
    /// All-useful weighted n-hypercube.
    Hypercube(u32),
    /// All-useful weighted Petersen graph.
    Petersen,
    /// Random positive-weighted tree on m vertices.
    Tree(usize),
    /// Weighted 3-cube with exactly t useless edges.
    Q3WithUseless(usize),
}

/// Family, weight range and seed of a generated instance.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub family: GenFamily,
    /// Half-open weight range [lo, hi); lo must be positive.
    pub weight_range: (Rat, Rat),
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn hypercube(n: u32, seed: u64) -> Self {
        GeneratorSpec {
            family: GenFamily::Hypercube(n),
            weight_range: (rat_int(1), rat_int(2)),
            seed,
        }
    }

    pub fn petersen(seed: u64) -> Self {
        GeneratorSpec {
            family: GenFamily::Petersen,
            weight_range: (rat_int(1), rat_int(4)),
            seed,
        }
    }

    pub fn tree(m: usize, seed: u64) -> Self {
        GeneratorSpec {
            family: GenFamily::Tree(m),
            weight_range: (rat(1, 16), rat_int(10)),
            seed,
        }
    }

    pub fn q3_with_useless(t: usize, seed: u64) -> Self {
        GeneratorSpec {
            family: GenFamily::Q3WithUseless(t),
            weight_range: (rat_int(1), rat_int(2)),
            seed,
        }
    }

    pub fn with_weight_range(mut self, lo: Rat, hi: Rat) -> Self {
        self.weight_range = (lo, hi);
        self
    }

    fn validate(&self) -> Result<(), GenError> {
        let (lo, hi) = &self.weight_range;
        if *lo <= Rat::zero() {
            return Err(GenError::Spec("weight range lower bound must be positive".into()));
        }
        if lo >= hi {
            return Err(GenError::Spec("weight range must be nonempty".into()));
        }
        match self.family {
            GenFamily::Hypercube(n) => {
                if !(1..=6).contains(&n) {
                    return Err(GenError::Spec(format!(
                        "hypercube generator supports n in 1..=6, got {n}"
                    )));
                }
                if *lo < rat_int(1) || *hi > rat_int(2) {
                    return Err(GenError::Spec(
                        "all-useful hypercube weights must lie in [1,2)".into(),
                    ));
                }
            }
            GenFamily::Petersen => {
                if *lo < rat_int(1) || *hi > rat_int(4) {
                    return Err(GenError::Spec(
                        "all-useful Petersen weights must lie in [1,4)".into(),
                    ));
                }
            }
            GenFamily::Tree(m) => {
                if !(2..=1024).contains(&m) {
                    return Err(GenError::Spec(format!(
                        "tree generator supports 2..=1024 vertices, got {m}"
                    )));
                }
            }
            GenFamily::Q3WithUseless(t) => {
                if t > 5 {
                    return Err(GenError::Spec(format!(
                        "at most 5 edges can be made useless (the skeleton needs 7 edges), got {t}"
                    )));
                }
                if *lo < rat_int(1) || *hi > rat_int(2) {
                    return Err(GenError::Spec(
                        "base weights for the useless-edge generator must lie in [1,2)".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

fn sample_weight(rng: &mut ChaCha8Rng, lo: &Rat, hi: &Rat) -> Rat {
    let k = rng.random_range(0..1u32 << 16);
    lo + (hi - lo) * rat(k as i64, 1 << 16)
}

fn weighted(g: Graph, rng: &mut ChaCha8Rng, lo: &Rat, hi: &Rat) -> WeightedGraph {
    let edges = g
        .edges()
        .into_iter()
        .map(|(u, v)| (u, v, sample_weight(rng, lo, hi)))
        .collect();
    WeightedGraph::from_edge_weights(g.order(), edges).expect("sampled weights are positive")
}

/// Generates a weighted instance and its distance matrix, deterministically
/// under the seed.
pub fn gen_weighted(spec: &GeneratorSpec) -> Result<(WeightedGraph, DistanceMatrix), GenError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (lo, hi) = (&spec.weight_range.0, &spec.weight_range.1);
    match spec.family {
        GenFamily::Hypercube(n) => {
            let wg = weighted(Graph::hypercube(n)?, &mut rng, lo, hi);
            let d = wg.apsp()?;
            Ok((wg, d))
        }
        GenFamily::Petersen => {
            let wg = weighted(Graph::petersen(), &mut rng, lo, hi);
            let d = wg.apsp()?;
            Ok((wg, d))
        }
        GenFamily::Tree(m) => {
            let mut g = Graph::new(m);
            for v in 1..m {
                g.add_edge(v, rng.random_range(0..v));
            }
            let wg = weighted(g, &mut rng, lo, hi);
            let d = wg.apsp()?;
            Ok((wg, d))
        }
        GenFamily::Q3WithUseless(t) => gen_q3_with_useless(t, &mut rng, lo, hi),
    }
}

/// Weighted 3-cube whose chosen `t` edges are made useless: base weights in
/// [1,2) on the surviving edges force them useful, and raising the chosen
/// edges to twice the maximum surviving distance pushes every realizing path
/// off them. The surviving skeleton must stay connected and spanning.
fn gen_q3_with_useless(
    t: usize,
    rng: &mut ChaCha8Rng,
    lo: &Rat,
    hi: &Rat,
) -> Result<(WeightedGraph, DistanceMatrix), GenError> {
    let q3 = Graph::hypercube(3)?;
    let all_edges = q3.edges();
    for attempt in 0..10_000 {
        let mut idx: Vec<usize> = (0..all_edges.len()).collect();
        for i in 0..t {
            let j = rng.random_range(i..idx.len());
            idx.swap(i, j);
        }
        let raised: Vec<usize> = idx[..t].to_vec();
        let mut light = Graph::new(8);
        for (e, &(u, v)) in all_edges.iter().enumerate() {
            if !raised.contains(&e) {
                light.add_edge(u, v);
            }
        }
        if !light.is_connected() {
            continue;
        }
        let light_weights: Vec<(usize, usize, Rat)> = light
            .edges()
            .into_iter()
            .map(|(u, v)| (u, v, sample_weight(rng, lo, hi)))
            .collect();
        let light_wg = WeightedGraph::from_edge_weights(8, light_weights.clone())
            .expect("sampled weights are positive");
        let d_light = light_wg.apsp()?;
        let heavy = d_light.max_entry() * rat_int(2);

        let mut full_edges = light_weights;
        for &e in &raised {
            let (u, v) = all_edges[e];
            full_edges.push((u, v, heavy.clone()));
        }
        let wg = WeightedGraph::from_edge_weights(8, full_edges)
            .expect("sampled weights are positive");
        let d = wg.apsp()?;
        debug_assert_eq!(d, d_light, "raised edges must not shorten any path");
        let _ = attempt;
        return Ok((wg, d));
    }
    Err(GenError::Spec(
        "could not select useless edges keeping the skeleton connected".into(),
    ))
}

/// Random connected weighted graph utility: a random attachment tree plus up
/// to `extra_edges` additional random edges, weights in the given range.
pub fn gen_random_connected(
    m: usize,
    extra_edges: usize,
    weight_range: (Rat, Rat),
    seed: u64,
) -> Result<WeightedGraph, GenError> {
    if m < 2 {
        return Err(GenError::Spec("need at least two vertices".into()));
    }
    let (lo, hi) = weight_range;
    if lo <= Rat::zero() || lo >= hi {
        return Err(GenError::Spec("invalid weight range".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(m);
    for v in 1..m {
        g.add_edge(v, rng.random_range(0..v));
    }
    for _ in 0..extra_edges {
        for _attempt in 0..64 {
            let u = rng.random_range(0..m);
            let v = rng.random_range(0..m);
            if u != v && !g.has_edge(u, v) {
                g.add_edge(u, v);
                break;
            }
        }
    }
    Ok(weighted(g, &mut rng, &lo, &hi))
}

/// Deliberate corruptions of a distance matrix for negative testing.
#[derive(Debug, Clone, PartialEq)]
pub enum MutationKind {
    /// Adds `delta` to the symmetric pair `(i, j)` (0-based, `i != j`).
    EntryBump { i: usize, j: usize, delta: Rat },
    /// Exchanges the values of two symmetric pairs.
    SwapPair {
        first: (usize, usize),
        second: (usize, usize),
    },
    /// Multiplies row and column `i` (off-diagonal) by `factor`.
    ScaleRow { i: usize, factor: Rat },
}

/// Applies a mutation; the result is only a predistance matrix and must be
/// revalidated.
#[allow(clippy::needless_range_loop)] // cross-indexes rows[i][j] and rows[j][i]
pub fn mutate(d: &DistanceMatrix, kind: &MutationKind) -> Result<PredistanceMatrix, MatrixError> {
    let mut rows = d.to_predistance().rows();
    match kind {
        MutationKind::EntryBump { i, j, delta } => {
            assert_ne!(i, j, "diagonal entries stay zero");
            rows[*i][*j] = &rows[*i][*j] + delta;
            rows[*j][*i] = rows[*i][*j].clone();
        }
        MutationKind::SwapPair { first, second } => {
            let a = rows[first.0][first.1].clone();
            let b = rows[second.0][second.1].clone();
            rows[first.0][first.1] = b.clone();
            rows[first.1][first.0] = b;
            rows[second.0][second.1] = a.clone();
            rows[second.1][second.0] = a;
        }
        MutationKind::ScaleRow { i, factor } => {
            let m = rows.len();
            for j in 0..m {
                if j != *i {
                    rows[*i][j] = &rows[*i][j] * factor;
                    rows[j][*i] = rows[*i][j].clone();
                }
            }
        }
    }
    PredistanceMatrix::from_rows(rows)
}

/// Distance matrix of the unit-weight n-hypercube: entry `(i,j)` is the
/// Hamming distance of the bit patterns. Constructed directly (the benchmark
/// path), checked against APSP in tests.
pub fn unit_hypercube_matrix(n: u32) -> Result<DistanceMatrix, GraphError> {
    if !(1..=10).contains(&n) {
        return Err(GraphError::DimensionOutOfRange { n, max: 10 });
    }
    let m = 1usize << n;
    let mut entries = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            entries.push(rat_int((i ^ j).count_ones() as i64));
        }
    }
    Ok(DistanceMatrix::from_metric_unchecked(
        m,
        entries,
        Tolerance::exact(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::useful_edges;
    use crate::matrix::classify;
    use crate::recognize::{recognize, Recognizer};

    #[test]
    fn hypercube_instances_are_all_useful_and_accepted() {
        for seed in [1u64, 2, 3] {
            let (wg, d) = gen_weighted(&GeneratorSpec::hypercube(3, seed)).unwrap();
            assert_eq!(useful_edges(&wg).unwrap().len(), 12);
            let v = recognize(&d, Recognizer::HypercubeCount).unwrap();
            assert!(v.accepted);
        }
    }

    #[test]
    fn petersen_instances_accepted() {
        let (_, d) = gen_weighted(&GeneratorSpec::petersen(7)).unwrap();
        let v = recognize(&d, Recognizer::Petersen).unwrap();
        assert!(v.accepted, "rejection: {:?}", v.rejection);
    }

    #[test]
    fn tree_instances_accepted() {
        for seed in 0..5u64 {
            let (_, d) = gen_weighted(&GeneratorSpec::tree(8, seed)).unwrap();
            let v = recognize(&d, Recognizer::Tree).unwrap();
            assert!(v.accepted, "seed {seed}: {:?}", v.rejection);
        }
    }

    #[test]
    fn useless_edge_counts_match() {
        for t in 0..=5usize {
            let (wg, d) = gen_weighted(&GeneratorSpec::q3_with_useless(t, 42)).unwrap();
            let c = classify(&d);
            assert_eq!(c.count_indecomposable_pairs(), 12 - t, "t = {t}");
            assert_eq!(useful_edges(&wg).unwrap().len(), 12 - t);
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let a = gen_weighted(&GeneratorSpec::petersen(99)).unwrap();
        let b = gen_weighted(&GeneratorSpec::petersen(99)).unwrap();
        assert_eq!(a, b);
        let c = gen_weighted(&GeneratorSpec::petersen(100)).unwrap();
        assert_ne!(a.1, c.1);
    }

    #[test]
    fn spec_validation() {
        assert!(gen_weighted(&GeneratorSpec::hypercube(0, 1)).is_err());
        assert!(gen_weighted(&GeneratorSpec::q3_with_useless(6, 1)).is_err());
        let bad = GeneratorSpec::hypercube(2, 1).with_weight_range(rat_int(1), rat_int(3));
        assert!(gen_weighted(&bad).is_err());
        let bad = GeneratorSpec::tree(4, 1).with_weight_range(rat_int(0), rat_int(1));
        assert!(gen_weighted(&bad).is_err());
    }

    #[test]
    fn mutation_semantics() {
        let d = unit_hypercube_matrix(2).unwrap();

        let bumped = mutate(
            &d,
            &MutationKind::EntryBump {
                i: 0,
                j: 3,
                delta: rat(1, 2),
            },
        )
        .unwrap();
        assert_eq!(*bumped.get(0, 3), rat(5, 2));
        assert_eq!(*bumped.get(3, 0), rat(5, 2));

        let swapped = mutate(
            &d,
            &MutationKind::SwapPair {
                first: (0, 1),
                second: (0, 3),
            },
        )
        .unwrap();
        assert_eq!(*swapped.get(0, 1), rat_int(2));
        assert_eq!(*swapped.get(3, 0), rat_int(1));

        let scaled = mutate(
            &d,
            &MutationKind::ScaleRow {
                i: 1,
                factor: rat_int(3),
            },
        )
        .unwrap();
        assert_eq!(*scaled.get(1, 0), rat_int(3));
        assert_eq!(*scaled.get(2, 1), rat_int(6));
        assert_eq!(*scaled.get(1, 1), rat_int(0));
        assert_eq!(*scaled.get(0, 2), rat_int(1), "other rows untouched");
    }

    #[test]
    fn zero_delta_bump_is_identity() {
        let d = unit_hypercube_matrix(2).unwrap();
        let mutated = mutate(
            &d,
            &MutationKind::EntryBump {
                i: 0,
                j: 3,
                delta: Rat::zero(),
            },
        )
        .unwrap();
        assert_eq!(mutated.rows(), d.to_predistance().rows());
    }

    #[test]
    fn unit_matrix_matches_apsp() {
        for n in 1..=4u32 {
            let direct = unit_hypercube_matrix(n).unwrap();
            let g = Graph::hypercube(n).unwrap();
            let edges = g
                .edges()
                .into_iter()
                .map(|(u, v)| (u, v, rat_int(1)))
                .collect();
            let via_apsp = WeightedGraph::from_edge_weights(1 << n, edges)
                .unwrap()
                .apsp()
                .unwrap();
            assert_eq!(direct, via_apsp);
        }
    }
}
