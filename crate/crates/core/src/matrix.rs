//! Predistance and distance matrices with the matrix-level predicates the
//! recognition theorems consume: tower-matrix entry classification, skeleton
//! extraction, breadth-first layers, the four-point condition and the median
//! property.
//!
//! Public vertex indices in function arguments are 0-based; indices inside
//! errors and witness records are 1-based (see [`crate::error`]).

use crate::error::MatrixError;
use crate::graph::Graph;
use crate::rational::{format_rat, Rat, Tolerance};
use crate::scaled::Scaled;
use num_traits::Zero;

/// Square matrix with zero diagonal and strictly positive off-diagonal
/// entries. No triangle requirement yet.
#[derive(Debug, Clone, PartialEq)]
pub struct PredistanceMatrix {
    m: usize,
    entries: Vec<Rat>,
}

impl PredistanceMatrix {
    /// Builds a predistance matrix from rows, checking shape, zero diagonal,
    /// symmetry and positivity. The first offending cell in row-major order
    /// wins when several checks fail.
    #[allow(clippy::needless_range_loop)] // cross-indexes rows[i][j] and rows[j][i]
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, MatrixError> {
        let m = rows.len();
        if m < 2 {
            return Err(MatrixError::OrderTooSmall { m });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(MatrixError::NotSquare {
                    row: i + 1,
                    got: row.len(),
                    expected: m,
                });
            }
        }
        for i in 0..m {
            for j in 0..m {
                let v = &rows[i][j];
                if i == j {
                    if !v.is_zero() {
                        return Err(MatrixError::NonzeroDiagonal {
                            i: i + 1,
                            value: format_rat(v),
                        });
                    }
                } else {
                    if *v <= Rat::zero() {
                        return Err(MatrixError::NonpositiveEntry {
                            i: i + 1,
                            j: j + 1,
                            value: format_rat(v),
                        });
                    }
                    if i < j && rows[j][i] != *v {
                        return Err(MatrixError::NotSymmetric {
                            i: i + 1,
                            j: j + 1,
                            a: format_rat(v),
                            b: format_rat(&rows[j][i]),
                        });
                    }
                }
            }
        }
        let mut entries = Vec::with_capacity(m * m);
        for row in rows {
            entries.extend(row);
        }
        Ok(PredistanceMatrix { m, entries })
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.m + j]
    }

    pub fn rows(&self) -> Vec<Vec<Rat>> {
        self.entries.chunks(self.m).map(|r| r.to_vec()).collect()
    }

    /// Checks all triangle inequalities and promotes to a [`DistanceMatrix`].
    ///
    /// On failure reports the lexicographically smallest violating triple
    /// `(i, k, j)` with `D[i][j] > D[i][k] + D[k][j]` (1-based).
    pub fn validate_with(self, tol: Tolerance) -> Result<DistanceMatrix, MatrixError> {
        let scaled = Scaled::build(self.m, &self.entries, tol.eps());
        if let Some((i, k, j)) = scaled.triangle_violation(crate::parallel_active()) {
            return Err(MatrixError::TriangleViolation {
                i: i + 1,
                k: k + 1,
                j: j + 1,
                d_ij: format_rat(self.get(i, j)),
                d_ik: format_rat(self.get(i, k)),
                d_kj: format_rat(self.get(k, j)),
            });
        }
        Ok(DistanceMatrix {
            m: self.m,
            entries: self.entries,
            tol,
            scaled,
        })
    }

    /// [`Self::validate_with`] under exact comparison.
    pub fn validate(self) -> Result<DistanceMatrix, MatrixError> {
        self.validate_with(Tolerance::exact())
    }
}

/// Predistance matrix that passed all triangle inequalities; by Hakimi-Yau it
/// is realizable by some positive-weighted graph on `{1, ..., m}`.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    m: usize,
    entries: Vec<Rat>,
    tol: Tolerance,
    scaled: Scaled,
}

impl PartialEq for DistanceMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.entries == other.entries && self.tol == other.tol
    }
}

impl DistanceMatrix {
    /// Wraps entries already known to satisfy the invariants (shortest-path
    /// metrics computed in-crate).
    pub(crate) fn from_metric_unchecked(m: usize, entries: Vec<Rat>, tol: Tolerance) -> Self {
        debug_assert_eq!(entries.len(), m * m);
        let scaled = Scaled::build(m, &entries, tol.eps());
        DistanceMatrix {
            m,
            entries,
            tol,
            scaled,
        }
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.m + j]
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn tolerance(&self) -> &Tolerance {
        &self.tol
    }

    pub fn max_entry(&self) -> &Rat {
        self.entries.iter().max().expect("m >= 2")
    }

    /// Demotes back to a predistance matrix (for mutation fixtures).
    pub fn to_predistance(&self) -> PredistanceMatrix {
        PredistanceMatrix {
            m: self.m,
            entries: self.entries.clone(),
        }
    }

    /// Entrywise positive rescaling `q * D`. Scaling preserves validity and,
    /// because every predicate compares sums of entries, every verdict.
    pub fn scale_by(&self, q: &Rat) -> DistanceMatrix {
        assert!(*q > Rat::zero(), "scale factor must be positive");
        let entries: Vec<Rat> = self.entries.iter().map(|e| e * q).collect();
        let tol = if self.tol.is_exact() {
            Tolerance::exact()
        } else {
            Tolerance::absolute(self.tol.eps() * q)
        };
        DistanceMatrix::from_metric_unchecked(self.m, entries, tol)
    }

    /// Canonical matrix text: m lines of m whitespace-separated tokens.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.m {
            for j in 0..self.m {
                if j > 0 {
                    out.push(' ');
                }
                out.push_str(&format_rat(self.get(i, j)));
            }
            out.push('\n');
        }
        out
    }

    pub(crate) fn scaled(&self) -> &Scaled {
        &self.scaled
    }
}

/// Lazy view of the m^2 x m tower matrix: the `(i,j)`-row holds
/// `D[i][l] + D[l][j]` for `l = 1..m`, the weight of the cheapest `i`-`j`
/// path through `l`. Never materialized; `classify` scans rows on the fly.
#[derive(Debug, Clone, Copy)]
pub struct TowerMatrix<'a> {
    d: &'a DistanceMatrix,
}

impl<'a> TowerMatrix<'a> {
    pub fn order(&self) -> usize {
        self.d.order()
    }

    pub fn value(&self, i: usize, j: usize, l: usize) -> Rat {
        self.d.get(i, l) + self.d.get(l, j)
    }

    pub fn row(&self, i: usize, j: usize) -> Vec<Rat> {
        (0..self.d.order()).map(|l| self.value(i, j, l)).collect()
    }
}

/// Tower-matrix view of a distance matrix.
pub fn tower(d: &DistanceMatrix) -> TowerMatrix<'_> {
    TowerMatrix { d }
}

/// Per-pair indecomposability verdicts plus the row-minimum multiplicities
/// that witness them.
#[derive(Debug, Clone, PartialEq)]
pub struct EntryClassification {
    m: usize,
    mask: Vec<bool>,
    mult: Vec<u32>,
}

impl EntryClassification {
    pub fn order(&self) -> usize {
        self.m
    }

    /// `D[i][j]` is indecomposable (requires `i != j`).
    pub fn is_indecomposable(&self, i: usize, j: usize) -> bool {
        self.mask[i * self.m + j]
    }

    /// How many indices attain the `(i,j)`-row minimum of the tower matrix.
    pub fn min_multiplicity(&self, i: usize, j: usize) -> u32 {
        self.mult[i * self.m + j]
    }

    /// All indecomposable pairs `(i, j)` with `i < j`, 0-based.
    pub fn indecomposable_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for i in 0..self.m {
            for j in (i + 1)..self.m {
                if self.mask[i * self.m + j] {
                    pairs.push((i, j));
                }
            }
        }
        pairs
    }

    /// The count `r` of indecomposable pairs.
    pub fn count_indecomposable_pairs(&self) -> usize {
        self.indecomposable_pairs().len()
    }

    /// Number of `y` with `D[x][y]` indecomposable, i.e. `#X_1(x)`.
    pub fn skeleton_degree(&self, x: usize) -> usize {
        (0..self.m)
            .filter(|&y| y != x && self.mask[x * self.m + y])
            .count()
    }
}

fn classify_impl(d: &DistanceMatrix, parallel: bool) -> EntryClassification {
    let (mask, mult) = d.scaled().classify(parallel);
    let m = d.order();
    if cfg!(debug_assertions) && d.tolerance().is_exact() {
        for i in 0..m {
            debug_assert_eq!(mult[i * m + i], 1);
            for j in 0..m {
                debug_assert_eq!(mask[i * m + j], mask[j * m + i]);
                if i != j {
                    debug_assert!(mult[i * m + j] >= 2);
                }
            }
        }
    }
    EntryClassification { m, mask, mult }
}

/// Classifies every entry as indecomposable or decomposable by scanning the
/// tower-matrix rows: an entry is indecomposable exactly when its row minimum
/// is attained only twice (at `l = i` and `l = j`). Costs O(m^3) exact
/// comparisons; rows are distributed across workers when parallelism is on.
pub fn classify(d: &DistanceMatrix) -> EntryClassification {
    classify_impl(d, crate::parallel_active())
}

/// Always-sequential [`classify`], kept public for benchmarking both paths.
pub fn classify_sequential(d: &DistanceMatrix) -> EntryClassification {
    classify_impl(d, false)
}

/// Skeleton graph on `{1, ..., m}`: edges are exactly the indecomposable
/// pairs. Connected for every valid distance matrix, since each decomposable
/// entry splits into indecomposable summands.
pub fn skeleton(d: &DistanceMatrix, c: &EntryClassification) -> Graph {
    debug_assert_eq!(d.order(), c.order());
    let m = d.order();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, list) in adj.iter_mut().enumerate() {
        for j in 0..m {
            if i != j && c.is_indecomposable(i, j) {
                list.push(j);
            }
        }
    }
    Graph::from_adjacency(adj)
}

/// Breadth-first layers `X_0(x), X_1(x), ...` of the skeleton: `y` lies in
/// layer `t` exactly when the shortest chain of indecomposable entries from
/// `x` to `y` has `t` steps.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerPartition {
    base: usize,
    layers: Vec<Vec<usize>>,
}

impl LayerPartition {
    pub fn base(&self) -> usize {
        self.base
    }

    /// Layers in order of depth; `layers()[0] == [base]`.
    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    pub fn layer(&self, t: usize) -> &[usize] {
        self.layers.get(t).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn depth_of(&self, y: usize) -> Option<usize> {
        self.layers.iter().position(|l| l.contains(&y))
    }
}

/// Layer partition of the skeleton from base vertex `x` (0-based).
pub fn layer_partition(
    d: &DistanceMatrix,
    c: &EntryClassification,
    x: usize,
) -> Result<LayerPartition, MatrixError> {
    let g = skeleton(d, c);
    let dist = g.bfs_distances(x);
    if let Some(unreached) = dist.iter().position(|&d| d == usize::MAX) {
        return Err(MatrixError::DisconnectedSkeleton {
            unreached: unreached + 1,
        });
    }
    let depth = dist.iter().copied().max().unwrap_or(0);
    let mut layers = vec![Vec::new(); depth + 1];
    for (v, &t) in dist.iter().enumerate() {
        layers[t].push(v);
    }
    Ok(LayerPartition { base: x, layers })
}

/// Witness of a four-point condition failure: the maximum of the three
/// pair-sums of the quadruple is attained only once.
#[derive(Debug, Clone, PartialEq)]
pub struct FourPointWitness {
    /// Violating quadruple, 1-based, increasing.
    pub indices: [usize; 4],
    /// The sums `D_ij + D_kh`, `D_ik + D_jh`, `D_ih + D_jk`.
    pub sums: [Rat; 3],
}

/// Checks the four-point condition: for all distinct `i, j, k, h` the maximum
/// of the three pair-sums is attained at least twice. Returns the
/// lexicographically smallest violating quadruple, or `None` when the
/// condition holds (vacuously for `m < 4`).
pub fn four_point_violation(d: &DistanceMatrix) -> Option<FourPointWitness> {
    let [i, j, k, h] = d.scaled().four_point_violation(crate::parallel_active())?;
    Some(FourPointWitness {
        indices: [i + 1, j + 1, k + 1, h + 1],
        sums: [
            d.get(i, j) + d.get(k, h),
            d.get(i, k) + d.get(j, h),
            d.get(i, h) + d.get(j, k),
        ],
    })
}

pub fn four_point_holds(d: &DistanceMatrix) -> bool {
    four_point_violation(d).is_none()
}

/// Witness of a median failure: a triple with zero or several medians.
#[derive(Debug, Clone, PartialEq)]
pub struct MedianWitness {
    /// Violating triple, 1-based, increasing.
    pub triple: [usize; 3],
    /// All medians found for the triple (1-based); empty or length >= 2.
    pub medians: Vec<usize>,
}

/// Checks that every triple `{a, b, c}` has exactly one element `y` with
/// `D[i][j] = D[i][y] + D[y][j]` for all distinct `i, j` in the triple.
/// Returns the lexicographically smallest violating triple, or `None` when
/// the matrix is median (vacuously for `m < 3`).
pub fn median_violation(d: &DistanceMatrix) -> Option<MedianWitness> {
    let (triple, medians) = d.scaled().median_violation(crate::parallel_active())?;
    Some(MedianWitness {
        triple: [triple[0] + 1, triple[1] + 1, triple[2] + 1],
        medians: medians.into_iter().map(|y| y + 1).collect(),
    })
}

pub fn is_median(d: &DistanceMatrix) -> bool {
    median_violation(d).is_none()
}

/// Structure report of the skeleton tree used by the order-8 recognizer when
/// only seven entries are indecomposable.
#[derive(Debug, Clone, PartialEq)]
pub struct PathAnalysis {
    /// Edge counts of all maximal (leaf-to-leaf) paths, ascending.
    pub maximal_lengths: Vec<usize>,
    /// Some maximal path has an odd number of edges.
    pub has_odd_maximal: bool,
    /// Vertices of skeleton-degree exactly 3 (0-based).
    pub degree3: Vec<usize>,
    /// When exactly two degree-3 vertices exist: whether they are adjacent,
    /// and their tree distance.
    pub degree3_adjacent: Option<bool>,
    pub degree3_distance: Option<usize>,
}

/// Computes the multiset of maximal indecomposable-entry path lengths of the
/// skeleton, which must be a tree. Maximal paths in a tree are exactly the
/// leaf-to-leaf paths; the length counts steps.
pub fn indecomposable_paths(
    d: &DistanceMatrix,
    c: &EntryClassification,
) -> Result<PathAnalysis, MatrixError> {
    let g = skeleton(d, c);
    let m = g.order();
    let dist0 = g.bfs_distances(0);
    if let Some(unreached) = dist0.iter().position(|&t| t == usize::MAX) {
        return Err(MatrixError::DisconnectedSkeleton {
            unreached: unreached + 1,
        });
    }
    if g.edge_count() != m - 1 {
        let cycle = g
            .find_cycle()
            .expect("connected graph with more than m-1 edges has a cycle");
        return Err(MatrixError::NotATree {
            cycle: cycle.into_iter().map(|v| v + 1).collect(),
        });
    }

    let leaves: Vec<usize> = (0..m).filter(|&v| g.degree(v) == 1).collect();
    let mut maximal_lengths = Vec::new();
    for (a, &u) in leaves.iter().enumerate() {
        let dist = g.bfs_distances(u);
        for &v in &leaves[a + 1..] {
            maximal_lengths.push(dist[v]);
        }
    }
    maximal_lengths.sort_unstable();
    let has_odd_maximal = maximal_lengths.iter().any(|l| l % 2 == 1);

    let degree3: Vec<usize> = (0..m).filter(|&v| g.degree(v) == 3).collect();
    let (degree3_adjacent, degree3_distance) = if degree3.len() == 2 {
        let dist = g.bfs_distances(degree3[0])[degree3[1]];
        (Some(dist == 1), Some(dist))
    } else {
        (None, None)
    };

    Ok(PathAnalysis {
        maximal_lengths,
        has_odd_maximal,
        degree3,
        degree3_adjacent,
        degree3_distance,
    })
}
