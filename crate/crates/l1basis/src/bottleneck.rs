//! Minimal dominating radius under reindexing, as a bottleneck assignment.
//!
//! For a basis {x_j} the distance matrix d[i][j] = ||x_j - e_i||_1 is exact,
//! and the smallest delta such that some permutation puts every x_j within
//! delta of its own standard vector is the bottleneck assignment value:
//! binary search over the sorted distinct distances, feasibility by maximum
//! bipartite matching on the thresholded graph. Exact arithmetic rules out
//! floating thresholds, so the candidate set is exactly the distance values.

use crate::basis::Basis;
use crate::scalar::Scalar;
use crate::vector::Vector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BottleneckResult {
    /// min over permutations of max_i d[i][sigma(i)]
    pub delta_min: Scalar,
    /// sigma: assignment[i] is the basis vector matched to e_i
    pub assignment: Vec<usize>,
    /// d[i][j] = ||x_j - e_i||_1
    pub distance_matrix: Vec<Vec<Scalar>>,
    /// whether the input basis had unit l1 columns; the delta <= 2 bound
    /// concerns normalized bases only
    pub normalized_input: bool,
}

pub fn min_dominating_delta(b: &Basis) -> BottleneckResult {
    let n = b.dimension();
    let vectors = b.vectors();
    let distance_matrix: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let e_i = Vector::standard(n, i);
            vectors.iter().map(|x| x.sub(&e_i).l1_norm()).collect()
        })
        .collect();

    let mut thresholds: Vec<Scalar> = distance_matrix.iter().flatten().cloned().collect();
    thresholds.sort();
    thresholds.dedup();

    // smallest threshold admitting a perfect matching
    let mut lo = 0usize;
    let mut hi = thresholds.len() - 1;
    debug_assert!(matching_at(&distance_matrix, &thresholds[hi]).is_some());
    while lo < hi {
        let mid = (lo + hi) / 2;
        if matching_at(&distance_matrix, &thresholds[mid]).is_some() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let delta_min = thresholds[lo].clone();
    let assignment = matching_at(&distance_matrix, &delta_min).expect("feasible at optimum");

    BottleneckResult {
        delta_min,
        assignment,
        distance_matrix,
        normalized_input: b.is_normalized(),
    }
}

/// Perfect matching on the graph {(i, j): d[i][j] <= t}, by augmenting paths.
/// Returns row_match with row_match[i] = j, or None if no perfect matching.
fn matching_at(d: &[Vec<Scalar>], t: &Scalar) -> Option<Vec<usize>> {
    let n = d.len();
    let mut col_match: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let mut seen = vec![false; n];
        if !augment(d, t, i, &mut seen, &mut col_match) {
            return None;
        }
    }
    let mut row_match = vec![0usize; n];
    for (j, m) in col_match.iter().enumerate() {
        row_match[m.expect("perfect matching")] = j;
    }
    Some(row_match)
}

fn augment(
    d: &[Vec<Scalar>],
    t: &Scalar,
    i: usize,
    seen: &mut [bool],
    col_match: &mut [Option<usize>],
) -> bool {
    let n = d.len();
    for j in 0..n {
        if seen[j] || d[i][j] > *t {
            continue;
        }
        seen[j] = true;
        let free = match col_match[j] {
            None => true,
            Some(owner) => augment(d, t, owner, seen, col_match),
        };
        if free {
            col_match[j] = Some(i);
            return true;
        }
    }
    false
}
