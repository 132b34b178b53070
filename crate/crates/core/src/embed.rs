//! Vertex embeddings into target graphs: the backtracking subgraph embedder
//! into the 3-cube and the breadth-first bit labelling that maps a graph
//! already known to be a hypercube onto its canonical coordinates.

use crate::graph::Graph;

/// Bijection from source vertices `0..m` onto the vertices of a target
/// graph, used as the certificate carrier for accepting verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Embedding { map }
    }

    pub fn identity(m: usize) -> Self {
        Embedding {
            map: (0..m).collect(),
        }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image_of(&self, v: usize) -> usize {
        self.map[v]
    }

    /// Inverse map; target vertex -> source vertex. The embedding must be a
    /// bijection onto `0..m`.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![usize::MAX; self.map.len()];
        for (src, &tgt) in self.map.iter().enumerate() {
            inv[tgt] = src;
        }
        inv
    }

    /// True when the map is a bijection onto the target's vertex set and
    /// every source edge lands on a target edge.
    pub fn is_valid_into(&self, source: &Graph, target: &Graph) -> bool {
        if self.map.len() != source.order() || source.order() != target.order() {
            return false;
        }
        let mut seen = vec![false; target.order()];
        for &t in &self.map {
            if t >= target.order() || seen[t] {
                return false;
            }
            seen[t] = true;
        }
        source
            .edges()
            .into_iter()
            .all(|(u, v)| target.has_edge(self.map[u], self.map[v]))
    }

    /// Labels for a hypercube target: vertex `t` becomes its n-bit pattern.
    pub fn hypercube_labels(&self, n: u32) -> Vec<String> {
        self.map
            .iter()
            .map(|&t| {
                (0..n)
                    .rev()
                    .map(|b| if t >> b & 1 == 1 { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }

    /// Labels for the Petersen target: outer vertices `0..5` become
    /// `v1..v5`, inner vertices `5..10` become `vbar1..vbar5`.
    pub fn petersen_labels(&self) -> Vec<String> {
        self.map
            .iter()
            .map(|&t| {
                if t < 5 {
                    format!("v{}", t + 1)
                } else {
                    format!("vbar{}", t - 4)
                }
            })
            .collect()
    }

    /// 1-based identity labels, used for tree certificates.
    pub fn identity_labels(&self) -> Vec<String> {
        self.map.iter().map(|&t| (t + 1).to_string()).collect()
    }
}

/// Searches for a bijection of the 8 vertices of `s` onto the 3-bit patterns
/// mapping every edge of `s` to a hypercube edge. Vertices are placed in
/// decreasing-degree order and candidate images are filtered by the Hamming
/// neighborhoods of already-placed neighbors.
pub fn embed_into_q3(s: &Graph) -> Option<Embedding> {
    assert_eq!(s.order(), 8, "the 3-cube embedder works on 8 vertices");
    if (0..8).any(|v| s.degree(v) > 3) {
        return None;
    }
    let mut order: Vec<usize> = (0..8).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(s.degree(v)));

    let mut image = vec![usize::MAX; 8];
    let mut used = [false; 8];
    fn place(
        s: &Graph,
        order: &[usize],
        depth: usize,
        image: &mut Vec<usize>,
        used: &mut [bool; 8],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        'cand: for t in 0..8usize {
            if used[t] {
                continue;
            }
            for &w in s.neighbors(v) {
                if image[w] != usize::MAX && (image[w] ^ t).count_ones() != 1 {
                    continue 'cand;
                }
            }
            image[v] = t;
            used[t] = true;
            if place(s, order, depth + 1, image, used) {
                return true;
            }
            image[v] = usize::MAX;
            used[t] = false;
        }
        false
    }
    if place(s, &order, 0, &mut image, &mut used) {
        let emb = Embedding::new(image);
        debug_assert!(emb.is_valid_into(s, &Graph::hypercube(3).unwrap()));
        Some(emb)
    } else {
        None
    }
}

/// Maps a graph that is isomorphic to some `Q_n` onto its bit coordinates:
/// vertex 0 becomes the zero pattern, its neighbors the unit bits, and every
/// deeper vertex the OR of two of its lower neighbors. Returns `None` when
/// the structure breaks, i.e. when the graph is not a hypercube graph.
pub fn hypercube_labeling(g: &Graph) -> Option<Embedding> {
    let m = g.order();
    if m == 0 || !m.is_power_of_two() {
        return None;
    }
    let n = m.trailing_zeros() as usize;
    if (0..m).any(|v| g.degree(v) != n) {
        return None;
    }

    let dist = g.bfs_distances(0);
    if dist.contains(&usize::MAX) {
        return None;
    }
    let mut by_depth: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (v, &t) in dist.iter().enumerate() {
        if t > n {
            return None;
        }
        by_depth[t].push(v);
    }

    let mut label = vec![usize::MAX; m];
    label[0] = 0;
    for (bit, &v) in by_depth.get(1)?.iter().enumerate() {
        label[v] = 1usize << bit;
    }
    for (depth, layer) in by_depth.iter().enumerate().skip(2) {
        for &v in layer {
            let mut lower = g
                .neighbors(v)
                .iter()
                .filter(|&&w| dist[w] == depth - 1 && label[w] != usize::MAX);
            let (a, b) = (lower.next()?, lower.next()?);
            let lab = label[*a] | label[*b];
            if lab.count_ones() as usize != depth {
                return None;
            }
            label[v] = lab;
        }
    }

    let mut seen = vec![false; m];
    for &l in &label {
        if l == usize::MAX || l >= m || seen[l] {
            return None;
        }
        seen[l] = true;
    }
    for (u, v) in g.edges() {
        if (label[u] ^ label[v]).count_ones() != 1 {
            return None;
        }
    }
    Some(Embedding::new(label))
}
