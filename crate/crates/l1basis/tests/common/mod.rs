//! Independent oracles for the acceptance and property suites.
//!
//! Everything here recomputes library quantities along a different route:
//! operator norms by evaluating all signed unit vectors, equivalence
//! constants by enumerating the vertices of the piecewise-linear arrangement
//! on the l1 sphere, the unconditional constant straight from its
//! definition, and the bottleneck value by brute force over permutations.
//! None of these call the code paths they check.

#![allow(dead_code)]

use l1basis::{Matrix, Scalar, Vector};

/// max ||Mz||_1 over the 2n signed unit vectors z.
pub fn opnorm_bruteforce(m: &Matrix) -> Scalar {
    let n = m.dimension();
    let mut best = Scalar::zero();
    for j in 0..n {
        for sign in [1i64, -1] {
            let z = Vector::standard(n, j).scale(&Scalar::from(sign));
            best = best.max(m.mul_vector(&z).l1_norm());
        }
    }
    best
}

/// Solves T x = b by forward elimination and back substitution.
/// Returns None on a singular system.
pub fn solve_linear(t: &Matrix, b: &Vector) -> Option<Vector> {
    let n = t.dimension();
    let mut a: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut row: Vec<Scalar> = (0..n).map(|j| t.at(i, j).clone()).collect();
            row.push(b.coord(i).clone());
            row
        })
        .collect();
    for c in 0..n {
        let pivot = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, pivot);
        let inv = a[c][c].recip();
        for cell in &mut a[c][c..=n] {
            *cell = &*cell * &inv;
        }
        let pivot_row: Vec<Scalar> = a[c][c..=n].to_vec();
        for row in a.iter_mut().take(n).skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (dst, src) in row[c..=n].iter_mut().zip(&pivot_row) {
                *dst -= &f * src;
            }
        }
    }
    let mut x = vec![Scalar::zero(); n];
    for c in (0..n).rev() {
        let mut acc = a[c][n].clone();
        for j in c + 1..n {
            acc -= &a[c][j] * &x[j];
        }
        x[c] = acc;
    }
    Some(Vector::new(x))
}

/// A kernel vector of an (n-1) x n homogeneous system, when the kernel is a
/// single line; None when the rank is deficient.
pub fn kernel_vector(mut rows: Vec<Vec<Scalar>>, n: usize) -> Option<Vec<Scalar>> {
    let m = rows.len();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0;
    for c in 0..n {
        let Some(pivot) = (rank..m).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][c].recip();
        for cell in &mut rows[rank][c..n] {
            *cell = &*cell * &inv;
        }
        let pivot_row: Vec<Scalar> = rows[rank][c..n].to_vec();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (dst, src) in row[c..n].iter_mut().zip(&pivot_row) {
                    *dst -= &f * src;
                }
            }
        }
        pivot_cols.push(c);
        rank += 1;
        if rank == m {
            break;
        }
    }
    if rank < m {
        return None;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let [free_col] = free.as_slice() else {
        return None;
    };
    let mut x = vec![Scalar::zero(); n];
    x[*free_col] = Scalar::one();
    for (row, &pc) in pivot_cols.iter().enumerate() {
        x[pc] = -&rows[row][*free_col];
    }
    Some(x)
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Exact (min, max) of ||T a||_1 over the l1 sphere ||a||_1 = 1.
///
/// The maximum of the convex map is attained at the signed unit vectors.
/// The minimum is attained at a vertex of the arrangement that the sign
/// patterns of a and of T a carve out of the sphere: a point where n-1
/// independent constraints from {a_i = 0} and {(T a)_k = 0} are active.
/// Every such candidate is the kernel line of an (n-1) x n system, so
/// enumerating all splits |A| + |B| = n - 1 covers every vertex.
pub fn equivalence_oracle(t: &Matrix) -> (Scalar, Scalar) {
    let n = t.dimension();
    let max = (0..n)
        .map(|j| t.mul_vector(&Vector::standard(n, j)).l1_norm())
        .fold(Scalar::zero(), Scalar::max);

    let mut min: Option<Scalar> = None;
    for a_size in 0..n {
        let b_size = n - 1 - a_size;
        for zeros in combinations(n, a_size) {
            for rows_of_image in combinations(n, b_size) {
                let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(n - 1);
                for &i in &zeros {
                    let mut unit = vec![Scalar::zero(); n];
                    unit[i] = Scalar::one();
                    rows.push(unit);
                }
                for &k in &rows_of_image {
                    rows.push((0..n).map(|j| t.at(k, j).clone()).collect());
                }
                let Some(alpha) = kernel_vector(rows, n) else {
                    continue;
                };
                let alpha = Vector::new(alpha);
                let denom = alpha.l1_norm();
                if denom.is_zero() {
                    continue;
                }
                let ratio = &t.mul_vector(&alpha).l1_norm() / &denom;
                min = Some(match min {
                    Some(cur) => cur.min(ratio),
                    None => ratio,
                });
            }
        }
    }
    (min.expect("sphere vertices always exist"), max)
}

/// The unconditional constant straight from the definition: the largest
/// ratio ||sum eps_i a_i x_i|| / ||sum a_i x_i|| over all sign vectors and
/// over the preimages of the signed unit vectors, where both maxima are
/// attained. Preimages are found by an independent linear solve.
pub fn unconditional_oracle(t: &Matrix) -> Scalar {
    let n = t.dimension();
    let preimages: Vec<Vector> = (0..n)
        .map(|i| solve_linear(t, &Vector::standard(n, i)).expect("invertible"))
        .collect();
    let mut best = Scalar::zero();
    for mask in 0u64..(1 << n) {
        for alpha in &preimages {
            let flipped = Vector::new(
                alpha
                    .iter()
                    .enumerate()
                    .map(|(i, c)| if mask >> i & 1 == 1 { -c } else { c.clone() })
                    .collect(),
            );
            // ||T alpha||_1 = 1 by construction, so the value is the ratio
            best = best.max(t.mul_vector(&flipped).l1_norm());
        }
    }
    best
}

/// min over all permutations of max_i d[i][sigma(i)].
pub fn bottleneck_bruteforce(d: &[Vec<Scalar>]) -> Scalar {
    let n = d.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Scalar> = None;
    heap_permutations(&mut perm, n, &mut |p| {
        let cost = (0..n)
            .map(|i| d[i][p[i]].clone())
            .fold(Scalar::zero(), Scalar::max);
        best = Some(match best.take() {
            Some(cur) => cur.min(cost),
            None => cost,
        });
    });
    best.expect("n >= 1")
}

fn heap_permutations(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == 1 {
        visit(items);
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, visit);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Deterministic grid scalar draw used by the suites.
pub fn grid_scalar(rng: &mut impl rand::Rng, numerators: &[i64], denominators: &[i64]) -> Scalar {
    let n = numerators[rng.gen_range(0..numerators.len())];
    let d = denominators[rng.gen_range(0..denominators.len())];
    Scalar::new(n, d)
}
