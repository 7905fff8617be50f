//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's homology, face enumeration or tableau code.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::Rng;

/// A random complex on at most `max_vertices` vertices, as raw facets.
pub fn random_facets(rng: &mut StdRng, max_vertices: usize) -> (usize, Vec<Vec<u32>>) {
    let n = rng.gen_range(1..=max_vertices);
    let count = rng.gen_range(1..=8);
    let facets = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=n.min(5));
            let mut f: Vec<u32> = Vec::new();
            while f.len() < size {
                let v = rng.gen_range(0..n as u32);
                if !f.contains(&v) {
                    f.push(v);
                }
            }
            f.sort_unstable();
            f
        })
        .collect();
    (n, facets)
}

/// All faces of dimension `k` (size `k + 1`) by testing every vertex subset.
pub fn brute_faces(n: usize, facets: &[Vec<u32>], k: usize) -> Vec<Vec<u32>> {
    let masks: Vec<u32> = facets
        .iter()
        .map(|f| f.iter().fold(0, |m, &v| m | 1 << v))
        .collect();
    let mut out: Vec<Vec<u32>> = (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k + 1 && masks.iter().any(|&m| s & !m == 0))
        .map(|s| (0..n as u32).filter(|&v| s >> v & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// Dense signed boundary matrix from `k`-faces to `(k-1)`-faces; for
/// `k = 0` the augmentation row.
pub fn dense_boundary(lower: &[Vec<u32>], upper: &[Vec<u32>]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; upper.len()]; lower.len()];
    for (j, f) in upper.iter().enumerate() {
        for drop in 0..f.len() {
            let mut g = f.clone();
            g.remove(drop);
            let i = lower
                .iter()
                .position(|x| *x == g)
                .expect("boundary face present");
            m[i][j] = if drop % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// Rank over the rationals by plain Gaussian elimination.
pub fn rational_rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = BigRational::one() / a[rank][c].clone();
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let factor = row[c].clone() * inv.clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x -= p.clone() * factor.clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced Betti numbers in degrees `-1..=dim` over the rationals.
pub fn oracle_reduced_betti(n: usize, facets: &[Vec<u32>]) -> Vec<u64> {
    let dim = facets.iter().map(|f| f.len()).max().unwrap_or(0) as isize - 1;
    if dim < 0 {
        return vec![1];
    }
    // faces[i] = faces of dimension i - 1
    let mut faces: Vec<Vec<Vec<u32>>> = vec![vec![vec![]]];
    for k in 0..=dim as usize {
        faces.push(brute_faces(n, facets, k));
    }
    let ranks: Vec<usize> = (1..faces.len())
        .map(|i| rational_rank(&dense_boundary(&faces[i - 1], &faces[i])))
        .collect();
    (0..faces.len())
        .map(|i| {
            let below = if i == 0 { 0 } else { ranks[i - 1] };
            let above = ranks.get(i).copied().unwrap_or(0);
            (faces[i].len() - below - above) as u64
        })
        .collect()
}

/// Visits every permutation of `0..m` (Heap's algorithm).
pub fn for_each_permutation(m: usize, mut f: impl FnMut(&[u32])) {
    let mut a: Vec<u32> = (0..m as u32).collect();
    let mut c = vec![0usize; m];
    f(&a);
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Permutations of `1..=m` whose descent set (positions `i` with
/// `w(i) > w(i+1)`) is exactly `q`.
pub fn permutations_with_descent_set(m: usize, q: &[u32]) -> u64 {
    let mut count = 0;
    for_each_permutation(m, |w| {
        let ok = (1..m).all(|i| (w[i - 1] > w[i]) == q.contains(&(i as u32)));
        if ok {
            count += 1;
        }
    });
    count
}

/// Standard Young tableaux of a shape, by removing the largest entry from
/// each corner in turn, without memoization.
pub fn syt_brute(shape: &[u32]) -> u64 {
    let total: u32 = shape.iter().sum();
    if total == 0 {
        return 1;
    }
    let mut count = 0;
    for r in 0..shape.len() {
        let is_corner = shape[r] > 0 && shape.get(r + 1).copied().unwrap_or(0) < shape[r];
        if is_corner {
            let mut s = shape.to_vec();
            s[r] -= 1;
            while s.last() == Some(&0) {
                s.pop();
            }
            count += syt_brute(&s);
        }
    }
    count
}

/// Every partition of `n` as a part list.
pub fn all_partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=rest.min(max) {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
