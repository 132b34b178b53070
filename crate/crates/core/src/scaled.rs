//! Common-denominator integer form of a matrix and the O(m^3) sweep kernels.
//!
//! Exact rational comparisons dominate the entry-classification cost, so the
//! matrix is rescaled once: with `L` the lcm of all entry denominators, entry
//! `(i,j)` becomes the integer `L * D[i][j]`. Comparing path sums of two
//! entries then needs only integer adds and compares. When every scaled value
//! fits comfortably in an `i64` the kernels run on machine integers; otherwise
//! they fall back to `BigInt`. The comparison tolerance is folded in as the
//! integer threshold `floor(eps * L)`, which is exact because the compared
//! differences are themselves integers.
//!
//! All kernels have a sequential and (behind the `parallel` feature) a
//! rayon-parallel path. The parallel paths partition pure per-row work and
//! reduce with index-ordered minima, so results are bit-identical to the
//! sequential order.

use crate::rational::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Orders below this run sequentially even when parallelism is enabled.
const PAR_MIN_ORDER: usize = 64;

/// Integer type a kernel can run on.
pub(crate) trait KernelInt: Clone + Ord + Send + Sync {
    fn sum(a: &Self, b: &Self) -> Self;
    fn diff_abs(a: &Self, b: &Self) -> Self;
    fn is_zero_value(&self) -> bool;
}

impl KernelInt for i64 {
    #[inline(always)]
    fn sum(a: &Self, b: &Self) -> Self {
        a + b
    }
    #[inline(always)]
    fn diff_abs(a: &Self, b: &Self) -> Self {
        (a - b).abs()
    }
    #[inline(always)]
    fn is_zero_value(&self) -> bool {
        *self == 0
    }
}

impl KernelInt for BigInt {
    fn sum(a: &Self, b: &Self) -> Self {
        a + b
    }
    fn diff_abs(a: &Self, b: &Self) -> Self {
        (a - b).abs()
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Repr {
    Small { num: Vec<i64>, eps: i64 },
    Big { num: Vec<BigInt>, eps: BigInt },
}

/// Scaled integer form of a symmetric rational matrix.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Scaled {
    pub m: usize,
    pub repr: Repr,
}

impl Scaled {
    pub fn build(m: usize, entries: &[Rat], eps: &Rat) -> Scaled {
        debug_assert_eq!(entries.len(), m * m);
        let mut den = BigInt::one();
        for e in entries {
            den = den.lcm(e.denom());
        }
        let eps_scaled: BigInt = (eps * Rat::from_integer(den.clone())).floor().to_integer();
        let num: Vec<BigInt> = entries
            .iter()
            .map(|e| e.numer() * (&den / e.denom()))
            .collect();

        // Kernels add at most two scaled values and compare against a third
        // plus the tolerance; capping magnitudes at i64::MAX/4 leaves room.
        let limit = BigInt::from(i64::MAX >> 2);
        let fits = eps_scaled.abs() <= limit && num.iter().all(|n| n.abs() <= limit);
        let repr = if fits {
            Repr::Small {
                num: num.iter().map(|n| n.to_i64().unwrap()).collect(),
                eps: eps_scaled.to_i64().unwrap(),
            }
        } else {
            Repr::Big {
                num,
                eps: eps_scaled,
            }
        };
        Scaled { m, repr }
    }

    /// Lexicographically smallest `(i, k, j)` (0-based, distinct) with
    /// `D[i][j] > D[i][k] + D[k][j]` beyond the tolerance, if any.
    pub fn triangle_violation(&self, parallel: bool) -> Option<(usize, usize, usize)> {
        match &self.repr {
            Repr::Small { num, eps } => triangle_violation(self.m, num, eps, parallel),
            Repr::Big { num, eps } => triangle_violation(self.m, num, eps, parallel),
        }
    }

    /// Row-minimum multiplicities of the tower matrix: `mult[i*m+j]` is the
    /// number of indices `l` attaining (within tolerance) the minimum of
    /// `D[i][l] + D[l][j]` over `l`. The mask marks multiplicity exactly two.
    pub fn classify(&self, parallel: bool) -> (Vec<bool>, Vec<u32>) {
        match &self.repr {
            Repr::Small { num, eps } => classify(self.m, num, eps, parallel),
            Repr::Big { num, eps } => classify(self.m, num, eps, parallel),
        }
    }

    /// Lexicographically smallest `i < j < k < h` (0-based) whose three
    /// pair-sums attain their maximum only once, if any.
    pub fn four_point_violation(&self, parallel: bool) -> Option<[usize; 4]> {
        match &self.repr {
            Repr::Small { num, eps } => four_point_violation(self.m, num, eps, parallel),
            Repr::Big { num, eps } => four_point_violation(self.m, num, eps, parallel),
        }
    }

    /// Lexicographically smallest triple `a < b < c` (0-based) without a
    /// unique median, together with the medians found, if any.
    pub fn median_violation(&self, parallel: bool) -> Option<([usize; 3], Vec<usize>)> {
        match &self.repr {
            Repr::Small { num, eps } => median_violation(self.m, num, eps, parallel),
            Repr::Big { num, eps } => median_violation(self.m, num, eps, parallel),
        }
    }
}

fn triangle_violation_row<T: KernelInt>(
    m: usize,
    num: &[T],
    eps: &T,
    i: usize,
) -> Option<(usize, usize, usize)> {
    let row_i = &num[i * m..(i + 1) * m];
    for k in 0..m {
        if k == i {
            continue;
        }
        let d_ik = &row_i[k];
        let row_k = &num[k * m..(k + 1) * m];
        for j in 0..m {
            if j == i || j == k {
                continue;
            }
            // violation: D[i][j] > D[i][k] + D[k][j] + eps
            let bound = T::sum(&T::sum(d_ik, &row_k[j]), eps);
            if row_i[j] > bound {
                return Some((i, k, j));
            }
        }
    }
    None
}

fn triangle_violation<T: KernelInt>(
    m: usize,
    num: &[T],
    eps: &T,
    parallel: bool,
) -> Option<(usize, usize, usize)> {
    #[cfg(feature = "parallel")]
    if parallel && m >= PAR_MIN_ORDER {
        return (0..m)
            .into_par_iter()
            .filter_map(|i| triangle_violation_row(m, num, eps, i))
            .min();
    }
    let _ = parallel;
    (0..m).find_map(|i| triangle_violation_row(m, num, eps, i))
}

fn classify_row<T: KernelInt>(
    m: usize,
    num: &[T],
    eps: &T,
    i: usize,
    mask_row: &mut [bool],
    mult_row: &mut [u32],
) {
    let row_i = &num[i * m..(i + 1) * m];
    let exact = eps.is_zero_value();
    for j in 0..m {
        // By symmetry column j of D equals row j, so both scans are
        // contiguous: T(i,j,l) = D[i][l] + D[j][l].
        let row_j = &num[j * m..(j + 1) * m];
        let mut min = T::sum(&row_i[0], &row_j[0]);
        let mut count = 1u32;
        if exact {
            for l in 1..m {
                let v = T::sum(&row_i[l], &row_j[l]);
                if v < min {
                    min = v;
                    count = 1;
                } else if v == min {
                    count += 1;
                }
            }
        } else {
            for l in 1..m {
                let v = T::sum(&row_i[l], &row_j[l]);
                if v < min {
                    min = v;
                }
            }
            let bound = T::sum(&min, eps);
            count = (0..m)
                .filter(|&l| T::sum(&row_i[l], &row_j[l]) <= bound)
                .count() as u32;
        }
        mask_row[j] = count == 2;
        mult_row[j] = count;
    }
}

fn classify<T: KernelInt>(m: usize, num: &[T], eps: &T, parallel: bool) -> (Vec<bool>, Vec<u32>) {
    let mut mask = vec![false; m * m];
    let mut mult = vec![0u32; m * m];
    #[cfg(feature = "parallel")]
    if parallel && m >= PAR_MIN_ORDER {
        mask.par_chunks_mut(m)
            .zip(mult.par_chunks_mut(m))
            .enumerate()
            .for_each(|(i, (mask_row, mult_row))| {
                classify_row(m, num, eps, i, mask_row, mult_row);
            });
        return (mask, mult);
    }
    let _ = parallel;
    for i in 0..m {
        let (mask_row, mult_row) = (
            &mut mask[i * m..(i + 1) * m],
            &mut mult[i * m..(i + 1) * m],
        );
        classify_row(m, num, eps, i, mask_row, mult_row);
    }
    (mask, mult)
}

fn four_point_violation_at<T: KernelInt>(
    m: usize,
    num: &[T],
    eps: &T,
    i: usize,
) -> Option<[usize; 4]> {
    let at = |a: usize, b: usize| &num[a * m + b];
    for j in (i + 1)..m {
        for k in (j + 1)..m {
            for h in (k + 1)..m {
                let s1 = T::sum(at(i, j), at(k, h));
                let s2 = T::sum(at(i, k), at(j, h));
                let s3 = T::sum(at(i, h), at(j, k));
                let max = s1.clone().max(s2.clone()).max(s3.clone());
                let hits = [&s1, &s2, &s3]
                    .iter()
                    .filter(|s| T::sum(s, eps) >= max)
                    .count();
                if hits < 2 {
                    return Some([i, j, k, h]);
                }
            }
        }
    }
    None
}

fn four_point_violation<T: KernelInt>(
    m: usize,
    num: &[T],
    eps: &T,
    parallel: bool,
) -> Option<[usize; 4]> {
    if m < 4 {
        return None;
    }
    #[cfg(feature = "parallel")]
    if parallel && m >= PAR_MIN_ORDER {
        return (0..m - 3)
            .into_par_iter()
            .filter_map(|i| four_point_violation_at(m, num, eps, i))
            .min();
    }
    let _ = parallel;
    (0..m - 3).find_map(|i| four_point_violation_at(m, num, eps, i))
}

fn median_violation_at<T: KernelInt>(
    m: usize,
    num: &[T],
    eps: &T,
    a: usize,
) -> Option<([usize; 3], Vec<usize>)> {
    let at = |x: usize, y: usize| &num[x * m + y];
    let between = |x: usize, y: usize, mid: usize| {
        T::diff_abs(at(x, y), &T::sum(at(x, mid), at(mid, y))) <= *eps
    };
    for b in (a + 1)..m {
        for c in (b + 1)..m {
            let medians: Vec<usize> = (0..m)
                .filter(|&y| between(a, b, y) && between(a, c, y) && between(b, c, y))
                .collect();
            if medians.len() != 1 {
                return Some(([a, b, c], medians));
            }
        }
    }
    None
}

fn median_violation<T: KernelInt>(
    m: usize,
    num: &[T],
    eps: &T,
    parallel: bool,
) -> Option<([usize; 3], Vec<usize>)> {
    if m < 3 {
        return None;
    }
    #[cfg(feature = "parallel")]
    if parallel && m >= PAR_MIN_ORDER {
        return (0..m - 2)
            .into_par_iter()
            .filter_map(|a| median_violation_at(m, num, eps, a))
            .min_by_key(|(triple, _)| *triple);
    }
    let _ = parallel;
    (0..m - 2).find_map(|a| median_violation_at(m, num, eps, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn scaled_of(entries: &[i64], m: usize) -> Scaled {
        let rats: Vec<Rat> = entries.iter().map(|&v| rat_int(v)).collect();
        Scaled::build(m, &rats, &Rat::zero())
    }

    #[test]
    fn picks_small_repr_for_integers() {
        let s = scaled_of(&[0, 1, 1, 0], 2);
        assert!(matches!(s.repr, Repr::Small { .. }));
    }

    #[test]
    fn big_repr_when_denominators_explode() {
        // Denominators are pairwise coprime primes near 2^31; their lcm
        // pushes the scaled numerators past the i64 guard.
        let primes = [2147483647i64, 2147483629, 2147483587];
        let mut entries = vec![Rat::zero(); 9];
        let mut set = |i: usize, j: usize, v: Rat| {
            entries[i * 3 + j] = v.clone();
            entries[j * 3 + i] = v;
        };
        set(0, 1, rat(1, primes[0]) + rat_int(1));
        set(0, 2, rat(1, primes[1]) + rat_int(1));
        set(1, 2, rat(1, primes[2]) + rat_int(1));
        let s = Scaled::build(3, &entries, &Rat::zero());
        assert!(matches!(s.repr, Repr::Big { .. }));
        assert!(s.triangle_violation(false).is_none());
    }

    #[test]
    fn triangle_violation_reports_lex_smallest() {
        // D[0][2] = 3 > 1 + 1
        let s = scaled_of(&[0, 1, 3, 1, 0, 1, 3, 1, 0], 3);
        assert_eq!(s.triangle_violation(false), Some((0, 1, 2)));
        assert_eq!(s.triangle_violation(true), Some((0, 1, 2)));
    }

    #[test]
    fn classify_counts_row_minima() {
        // Path metric 1 - 2 - 3 with weights 1 and 2.
        let s = scaled_of(&[0, 1, 3, 1, 0, 2, 3, 2, 0], 3);
        let (mask, mult) = s.classify(false);
        let at = |i: usize, j: usize| (mask[i * 3 + j], mult[i * 3 + j]);
        assert_eq!(at(0, 1), (true, 2));
        assert_eq!(at(1, 2), (true, 2));
        // 3 = 1 + 2 via the middle vertex: minimum reached three times.
        assert_eq!(at(0, 2), (false, 3));
        assert_eq!(at(0, 0), (false, 1));
    }

    #[test]
    fn tolerant_classify_clusters_near_ties() {
        // D[0][2] = 19/10, detour 1 + 1 = 2; within eps = 1/5 they tie.
        let entries = vec![
            rat_int(0),
            rat_int(1),
            rat(19, 10),
            rat_int(1),
            rat_int(0),
            rat_int(1),
            rat(19, 10),
            rat_int(1),
            rat_int(0),
        ];
        let exact = Scaled::build(3, &entries, &Rat::zero());
        let (mask, _) = exact.classify(false);
        assert!(mask[2], "exact mode keeps the entry indecomposable");

        let loose = Scaled::build(3, &entries, &rat(1, 5));
        let (mask, mult) = loose.classify(false);
        assert!(!mask[2]);
        assert_eq!(mult[2], 3);
    }

    #[test]
    fn four_point_and_median_kernels() {
        // Unit 4-cycle metric: the four-point condition fails at (0,1,2,3).
        let q2 = scaled_of(&[0, 1, 1, 2, 1, 0, 2, 1, 1, 2, 0, 1, 2, 1, 1, 0], 4);
        assert_eq!(q2.four_point_violation(false), Some([0, 1, 2, 3]));

        // Unit triangle: no median for the only triple.
        let k3 = scaled_of(&[0, 1, 1, 1, 0, 1, 1, 1, 0], 3);
        let (triple, medians) = k3.median_violation(false).unwrap();
        assert_eq!(triple, [0, 1, 2]);
        assert!(medians.is_empty());

        // Path metric: vertex 1 is the unique median.
        let path = scaled_of(&[0, 1, 3, 1, 0, 2, 3, 2, 0], 3);
        assert_eq!(path.median_violation(false), None);
    }
}
