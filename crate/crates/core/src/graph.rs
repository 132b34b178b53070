//! Simple undirected graphs, positive-weighted graphs and the structural
//! predicates the recognizers rely on: bipartiteness, the (0,2) property,
//! geodesic counting, short-cycle detection and useful-edge computation.

use crate::error::GraphError;
use crate::matrix::{classify, DistanceMatrix};
use crate::rational::{format_rat, Rat, Tolerance};
use num_traits::Zero;
use std::collections::{BTreeMap, VecDeque};

/// Simple undirected graph on vertices `0..order` with sorted adjacency
/// lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(order: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); order],
        }
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(order);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub(crate) fn from_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let mut g = Graph { adj };
        for list in &mut g.adj {
            list.sort_unstable();
            list.dedup();
        }
        g
    }

    /// Inserts the edge `{u, v}`; loops are rejected, duplicates ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "loops are not allowed");
        for (a, b) in [(u, v), (v, u)] {
            if let Err(pos) = self.adj[a].binary_search(&b) {
                self.adj[a].insert(pos, b);
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        for (a, b) in [(u, v), (v, u)] {
            if let Ok(pos) = self.adj[a].binary_search(&b) {
                self.adj[a].remove(pos);
            }
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Hop distances from `x`; unreachable vertices get `usize::MAX`.
    pub fn bfs_distances(&self, x: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        let mut queue = VecDeque::new();
        dist[x] = 0;
        queue.push_back(x);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || !self.bfs_distances(0).contains(&usize::MAX)
    }

    /// Two-colors the graph. Returns the coloring, or the vertex list of an
    /// odd cycle when the graph is not bipartite. The graph must be
    /// connected.
    pub fn bipartition(&self) -> Result<Vec<bool>, Vec<usize>> {
        let m = self.order();
        let mut color = vec![None; m];
        let mut parent = vec![usize::MAX; m];
        let mut queue = VecDeque::new();
        color[0] = Some(false);
        queue.push_back(0);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                match color[w] {
                    None => {
                        color[w] = Some(!color[v].unwrap());
                        parent[w] = v;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == color[v].unwrap() => {
                        return Err(odd_cycle(&parent, v, w));
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }

    /// Common neighbors of `u` and `v` (sorted).
    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        let (mut a, mut b) = (self.adj[u].iter().peekable(), self.adj[v].iter().peekable());
        let mut out = Vec::new();
        while let (Some(&&x), Some(&&y)) = (a.peek(), b.peek()) {
            match x.cmp(&y) {
                std::cmp::Ordering::Less => {
                    a.next();
                }
                std::cmp::Ordering::Greater => {
                    b.next();
                }
                std::cmp::Ordering::Equal => {
                    out.push(x);
                    a.next();
                    b.next();
                }
            }
        }
        out
    }

    /// First distinct pair (lexicographic) whose common-neighbor count is
    /// neither 0 nor 2, with its common neighbors.
    pub fn zero_two_violation(&self) -> Option<(usize, usize, Vec<usize>)> {
        let m = self.order();
        for u in 0..m {
            for v in (u + 1)..m {
                let common = self.common_neighbors(u, v);
                if !common.is_empty() && common.len() != 2 {
                    return Some((u, v, common));
                }
            }
        }
        None
    }

    /// Every distinct vertex pair has exactly 0 or 2 common neighbors.
    pub fn is_zero_two(&self) -> bool {
        self.zero_two_violation().is_none()
    }

    /// Hop distances from `x` together with the number of geodesics from `x`
    /// to every vertex. Counts saturate at `u128::MAX`.
    pub fn geodesic_counts_from(&self, x: usize) -> (Vec<usize>, Vec<u128>) {
        let m = self.order();
        let mut dist = vec![usize::MAX; m];
        let mut count = vec![0u128; m];
        let mut queue = VecDeque::new();
        dist[x] = 0;
        count[x] = 1;
        queue.push_back(x);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    count[w] = count[w].saturating_add(count[v]);
                }
            }
        }
        (dist, count)
    }

    /// Number of minimum-edge-count paths between `x` and `y` (1 when
    /// `x == y`). Saturates at `u128::MAX`; 0 when unreachable.
    pub fn count_geodesics(&self, x: usize, y: usize) -> u128 {
        self.geodesic_counts_from(x).1[y]
    }

    /// Mulder test: a connected (0,2)-graph is regular of some degree `d`
    /// and is a hypercube graph exactly when its order is `2^d`.
    pub fn is_hypercube(&self) -> bool {
        if self.order() == 0 || !self.is_connected() {
            return false;
        }
        let d = self.degree(0);
        if (1..self.order()).any(|v| self.degree(v) != d) {
            return false;
        }
        if d >= usize::BITS as usize || (1usize << d) != self.order() {
            return false;
        }
        self.is_zero_two()
    }

    /// Finds a 3- or 4-cycle if one exists (vertex list in cycle order);
    /// `None` means girth >= 5.
    pub fn short_cycle(&self) -> Option<Vec<usize>> {
        let m = self.order();
        for u in 0..m {
            for v in (u + 1)..m {
                let common = self.common_neighbors(u, v);
                if self.has_edge(u, v) {
                    if let Some(&z) = common.first() {
                        return Some(vec![u, v, z]);
                    }
                }
                if common.len() >= 2 {
                    return Some(vec![u, common[0], v, common[1]]);
                }
            }
        }
        None
    }

    /// All 5-cycles, one representative per cycle: the smallest vertex
    /// first, the smaller neighbor second.
    pub fn five_cycles(&self) -> Vec<[usize; 5]> {
        let mut out = Vec::new();
        for a in 0..self.order() {
            for &b in self.neighbors(a) {
                if b <= a {
                    continue;
                }
                for &c in self.neighbors(b) {
                    if c <= a || c == b {
                        continue;
                    }
                    for &d in self.neighbors(c) {
                        if d <= a || d == b || d == c {
                            continue;
                        }
                        for &e in self.neighbors(d) {
                            if e <= b || e == c || e == d {
                                continue;
                            }
                            if self.has_edge(e, a) {
                                out.push([a, b, c, d, e]);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Any cycle in the graph (vertex list in cycle order), if one exists.
    /// Peels degree-<=1 vertices down to the 2-core, then walks it.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        let m = self.order();
        let mut deg: Vec<usize> = (0..m).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; m];
        let mut queue: Vec<usize> = (0..m).filter(|&v| deg[v] <= 1).collect();
        while let Some(v) = queue.pop() {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] <= 1 {
                        queue.push(w);
                    }
                }
            }
        }
        let start = (0..m).find(|&v| !removed[v])?;
        // Every remaining vertex has at least two core neighbors, so the
        // walk never gets stuck and must revisit a vertex.
        let mut pos = vec![usize::MAX; m];
        let mut path = vec![start];
        pos[start] = 0;
        let (mut prev, mut cur) = (usize::MAX, start);
        loop {
            let next = *self.adj[cur]
                .iter()
                .find(|&&w| !removed[w] && w != prev)
                .expect("2-core vertex has a forward neighbor");
            if pos[next] != usize::MAX {
                return Some(path[pos[next]..].to_vec());
            }
            pos[next] = path.len();
            path.push(next);
            prev = cur;
            cur = next;
        }
    }

    /// The n-hypercube graph: vertices are the n-bit patterns `0..2^n`,
    /// edges join patterns at Hamming distance one.
    pub fn hypercube(n: u32) -> Result<Graph, GraphError> {
        if !(1..=20).contains(&n) {
            return Err(GraphError::DimensionOutOfRange { n, max: 20 });
        }
        let m = 1usize << n;
        let mut adj = Vec::with_capacity(m);
        for v in 0..m {
            adj.push((0..n).map(|b| v ^ (1usize << b)).collect::<Vec<_>>());
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// The Petersen graph with outer 5-cycle `0..5`, inner pentagram `5..10`
    /// (inner `5+j` adjacent to `5+((j+2) mod 5)` and `5+((j+3) mod 5)`),
    /// and spokes `j - (5+j)`.
    pub fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for j in 0..5 {
            g.add_edge(j, (j + 1) % 5);
            g.add_edge(j, j + 5);
            g.add_edge(5 + j, 5 + (j + 2) % 5);
        }
        g
    }

    /// Fixed 16-vertex connected bipartite 4-regular graph that is not a
    /// 4-hypercube graph: vertices 0..8 form one side (`y`), 8..16 the other
    /// (`z`); vertices 0 and 1 share all four neighbors 8..12.
    pub fn bipartite_4regular_non_hypercube() -> Graph {
        let y = |i: usize| i - 1; // y_1..y_8 -> 0..8
        let z = |i: usize| 7 + i; // z_1..z_8 -> 8..16
        let mut g = Graph::new(16);
        for i in 1..=4 {
            g.add_edge(y(1), z(i));
            g.add_edge(y(2), z(i));
        }
        for j in 5..=8 {
            g.add_edge(z(7), y(j));
            g.add_edge(z(8), y(j));
        }
        for i in [1, 2, 5, 6] {
            g.add_edge(y(3), z(i));
        }
        for i in [3, 4, 5, 6] {
            g.add_edge(y(4), z(i));
        }
        g.add_edge(z(5), y(5));
        g.add_edge(z(5), y(6));
        g.add_edge(z(6), y(7));
        g.add_edge(z(6), y(8));
        for i in 1..=4 {
            g.add_edge(z(i), y(i + 4));
        }
        g
    }
}

fn odd_cycle(parent: &[usize], v: usize, w: usize) -> Vec<usize> {
    // Walk both endpoints up to their lowest common ancestor.
    let mut ancestors_v = vec![v];
    let mut cur = v;
    while parent[cur] != usize::MAX {
        cur = parent[cur];
        ancestors_v.push(cur);
    }
    let mut path_w = vec![w];
    let mut cur = w;
    while !ancestors_v.contains(&cur) {
        cur = parent[cur];
        path_w.push(cur);
    }
    let lca = cur;
    let mut cycle: Vec<usize> = ancestors_v
        .iter()
        .copied()
        .take_while(|&x| x != lca)
        .collect();
    cycle.push(lca);
    path_w.pop(); // drop the lca duplicate
    cycle.extend(path_w.into_iter().rev());
    debug_assert!(cycle.len() % 2 == 1, "conflict cycle must be odd");
    cycle
}

/// Positive-weighted simple connected graph.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    graph: Graph,
    weights: BTreeMap<(usize, usize), Rat>,
}

impl WeightedGraph {
    /// Pairs a graph with per-edge weights; every edge must carry a positive
    /// weight. Keys may come in either orientation.
    pub fn new(graph: Graph, weights: BTreeMap<(usize, usize), Rat>) -> Result<Self, GraphError> {
        let mut normalized = BTreeMap::new();
        for ((u, v), w) in weights {
            let key = (u.min(v), u.max(v));
            if w <= Rat::zero() {
                return Err(GraphError::NonpositiveWeight {
                    u: key.0 + 1,
                    v: key.1 + 1,
                    value: format_rat(&w),
                });
            }
            normalized.insert(key, w);
        }
        for (u, v) in graph.edges() {
            if !normalized.contains_key(&(u, v)) {
                return Err(GraphError::MissingWeight { u: u + 1, v: v + 1 });
            }
        }
        Ok(WeightedGraph {
            graph,
            weights: normalized,
        })
    }

    pub fn from_edge_weights(
        order: usize,
        edges: Vec<(usize, usize, Rat)>,
    ) -> Result<Self, GraphError> {
        let mut graph = Graph::new(order);
        let mut weights = BTreeMap::new();
        for (u, v, w) in edges {
            graph.add_edge(u, v);
            weights.insert((u.min(v), u.max(v)), w);
        }
        WeightedGraph::new(graph, weights)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn weight(&self, u: usize, v: usize) -> &Rat {
        &self.weights[&(u.min(v), u.max(v))]
    }

    /// Edges with weights, `(u, v, w)` with `u < v`, sorted.
    pub fn edge_weights(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.weights.iter().map(|(&(u, v), w)| (u, v, w))
    }

    /// All-pairs shortest paths by Floyd-Warshall over exact rationals.
    /// The result is a valid distance matrix by construction.
    pub fn apsp(&self) -> Result<DistanceMatrix, GraphError> {
        let m = self.order();
        let mut dist: Vec<Option<Rat>> = vec![None; m * m];
        for v in 0..m {
            dist[v * m + v] = Some(Rat::zero());
        }
        for ((u, v), w) in &self.weights {
            dist[u * m + v] = Some(w.clone());
            dist[v * m + u] = Some(w.clone());
        }
        for k in 0..m {
            for i in 0..m {
                let Some(d_ik) = dist[i * m + k].clone() else {
                    continue;
                };
                for j in 0..m {
                    let Some(d_kj) = &dist[k * m + j] else {
                        continue;
                    };
                    let via = &d_ik + d_kj;
                    match &dist[i * m + j] {
                        Some(cur) if *cur <= via => {}
                        _ => dist[i * m + j] = Some(via),
                    }
                }
            }
        }
        let mut entries = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                match &dist[i * m + j] {
                    Some(v) => entries.push(v.clone()),
                    None => return Err(GraphError::Disconnected { i: i + 1, j: j + 1 }),
                }
            }
        }
        Ok(DistanceMatrix::from_metric_unchecked(
            m,
            entries,
            Tolerance::exact(),
        ))
    }
}

/// Useful edges by deletion: an edge is useful exactly when removing it
/// strictly increases some pairwise distance (or disconnects the graph).
pub fn useful_edges_by_deletion(w: &WeightedGraph) -> Result<Vec<(usize, usize)>, GraphError> {
    let base = w.apsp()?;
    let m = w.order();
    let mut useful = Vec::new();
    for (u, v) in w.graph().edges() {
        let mut reduced_graph = w.graph().clone();
        reduced_graph.remove_edge(u, v);
        let mut weights: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
        for (a, b, wt) in w.edge_weights() {
            if (a, b) != (u, v) {
                weights.insert((a, b), wt.clone());
            }
        }
        let reduced = WeightedGraph::new(reduced_graph, weights)?;
        match reduced.apsp() {
            Err(GraphError::Disconnected { .. }) => useful.push((u, v)),
            Err(e) => return Err(e),
            Ok(d) => {
                let increased = (0..m)
                    .any(|i| (0..m).any(|j| d.get(i, j) > base.get(i, j)));
                if increased {
                    useful.push((u, v));
                }
            }
        }
    }
    Ok(useful)
}

/// Useful edges by indecomposability: an edge is useful exactly when the
/// distance-matrix entry of its endpoints is indecomposable.
pub fn useful_edges_by_indecomposability(
    w: &WeightedGraph,
) -> Result<Vec<(usize, usize)>, GraphError> {
    let d = w.apsp()?;
    let c = classify(&d);
    Ok(w.graph()
        .edges()
        .into_iter()
        .filter(|&(u, v)| c.is_indecomposable(u, v))
        .collect())
}

/// Useful edges, computed by both routes; the two must agree.
pub fn useful_edges(w: &WeightedGraph) -> Result<Vec<(usize, usize)>, GraphError> {
    let by_deletion = useful_edges_by_deletion(w)?;
    let by_mask = useful_edges_by_indecomposability(w)?;
    assert_eq!(
        by_deletion, by_mask,
        "deletion-based and indecomposability-based useful edges must coincide"
    );
    Ok(by_mask)
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    #[test]
    fn hypercube_counts() {
        let q1 = Graph::hypercube(1).unwrap();
        assert_eq!((q1.order(), q1.edge_count()), (2, 1));

        let q3 = Graph::hypercube(3).unwrap();
        assert_eq!((q3.order(), q3.edge_count()), (8, 12));
        assert!((0..8).all(|v| q3.degree(v) == 3));

        let q4 = Graph::hypercube(4).unwrap();
        assert_eq!((q4.order(), q4.edge_count()), (16, 32));
        assert!(q4.is_bipartite());

        assert!(Graph::hypercube(0).is_err());
        assert!(Graph::hypercube(21).is_err());
    }

    #[test]
    fn petersen_structure() {
        let p = Graph::petersen();
        assert_eq!(p.order(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        // Vertex 1 (1-based) is adjacent to 2, 5 and 6 (1-based).
        assert_eq!(p.neighbors(0), &[1, 4, 5]);
        // Girth 5: no 3- or 4-cycle, but 5-cycles exist.
        assert!(p.short_cycle().is_none());
        assert_eq!(p.five_cycles().len(), 12);
        assert!(!p.is_bipartite());
    }

    #[test]
    fn zero_two_examples() {
        assert!(Graph::hypercube(3).unwrap().is_zero_two());

        let counterexample = Graph::bipartite_4regular_non_hypercube();
        let (u, v, common) = counterexample.zero_two_violation().unwrap();
        assert_eq!((u, v), (0, 1));
        assert_eq!(common.len(), 4);

        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let (u, v, common) = k3.zero_two_violation().unwrap();
        assert_eq!((u, v), (0, 1));
        assert_eq!(common, vec![2]);
    }

    #[test]
    fn counterexample_is_bipartite_4_regular() {
        let g = Graph::bipartite_4regular_non_hypercube();
        assert_eq!(g.order(), 16);
        assert!((0..16).all(|v| g.degree(v) == 4));
        assert!(g.is_connected());
        let coloring = g.bipartition().unwrap();
        // The parts are exactly the y-row and the z-row.
        assert!((0..8).all(|v| coloring[v] == coloring[0]));
        assert!((8..16).all(|v| coloring[v] != coloring[0]));
        assert!(!g.is_hypercube());
    }

    #[test]
    fn geodesic_counts() {
        let q3 = Graph::hypercube(3).unwrap();
        assert_eq!(q3.count_geodesics(0, 7), 6); // 3!
        assert_eq!(q3.count_geodesics(0, 0), 1);
        let p = Graph::petersen();
        assert_eq!(p.count_geodesics(0, 1), 1);
    }

    #[test]
    fn mulder_test() {
        for n in 1..=6 {
            assert!(Graph::hypercube(n).unwrap().is_hypercube(), "Q_{n}");
        }
        assert!(!Graph::bipartite_4regular_non_hypercube().is_hypercube());
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert!(!c6.is_hypercube());
    }

    #[test]
    fn bipartition_witnesses_odd_cycle() {
        let p = Graph::petersen();
        let cycle = p.bipartition().unwrap_err();
        assert!(cycle.len() % 2 == 1 && cycle.len() >= 5);
        for i in 0..cycle.len() {
            assert!(p.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
    }

    #[test]
    fn find_cycle_on_trees_and_cycles() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(path.find_cycle().is_none());
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let cycle = c4.find_cycle().unwrap();
        assert_eq!(cycle.len(), 4);
    }

    #[test]
    fn apsp_examples() {
        let single = WeightedGraph::from_edge_weights(2, vec![(0, 1, rat_int(7))]).unwrap();
        let d = single.apsp().unwrap();
        assert_eq!(*d.get(0, 1), rat_int(7));

        let q2 = Graph::hypercube(2).unwrap();
        let weights: BTreeMap<_, _> = q2
            .edges()
            .into_iter()
            .map(|e| (e, rat_int(1)))
            .collect();
        let d = WeightedGraph::new(q2, weights).unwrap().apsp().unwrap();
        let expected = [[0, 1, 1, 2], [1, 0, 2, 1], [1, 2, 0, 1], [2, 1, 1, 0]];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(*d.get(i, j), rat_int(expected[i][j]));
            }
        }

        let disconnected = WeightedGraph::from_edge_weights(
            3,
            vec![(0, 1, rat_int(1))],
        )
        .unwrap();
        assert!(matches!(
            disconnected.apsp(),
            Err(GraphError::Disconnected { .. })
        ));
    }

    #[test]
    fn unit_q3_apsp_has_antipodal_distance_three() {
        let q3 = Graph::hypercube(3).unwrap();
        let weights: BTreeMap<_, _> = q3
            .edges()
            .into_iter()
            .map(|e| (e, rat_int(1)))
            .collect();
        let d = WeightedGraph::new(q3, weights).unwrap().apsp().unwrap();
        assert_eq!(*d.get(0, 7), rat_int(3));
    }

    #[test]
    fn useful_edges_examples() {
        // Unit Q3: every edge useful.
        let q3 = Graph::hypercube(3).unwrap();
        let weights: BTreeMap<_, _> = q3
            .edges()
            .into_iter()
            .map(|e| (e, rat_int(1)))
            .collect();
        let w = WeightedGraph::new(q3, weights).unwrap();
        assert_eq!(useful_edges(&w).unwrap().len(), 12);

        // 4-cycle with weights 1,1,1,3: the weight-3 edge is useless.
        let w = WeightedGraph::from_edge_weights(
            4,
            vec![
                (0, 1, rat_int(1)),
                (1, 2, rat_int(1)),
                (2, 3, rat_int(1)),
                (3, 0, rat_int(3)),
            ],
        )
        .unwrap();
        let useful = useful_edges(&w).unwrap();
        assert_eq!(useful, vec![(0, 1), (1, 2), (2, 3)]);

        // A single edge is always useful.
        let w = WeightedGraph::from_edge_weights(2, vec![(0, 1, rat_int(5))]).unwrap();
        assert_eq!(useful_edges(&w).unwrap(), vec![(0, 1)]);
    }
}
