//! Reduced simplicial homology over the rationals.
//!
//! Betti numbers come from ranks of boundary matrices. Ranks are first taken
//! modulo the prime `2^31 - 1` by sparse column reduction; the boundary
//! matrices are reduced from the top dimension down so that columns already
//! known to be dependent are skipped. The modular answer is accepted when the
//! resulting Betti numbers are nonnegative and reproduce the reduced Euler
//! characteristic of the f-vector; otherwise every rank is recomputed by
//! fraction-free elimination over the integers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::complex::{FaceList, SimplicialComplex};

/// Modulus used by the fast rank path.
pub const RANK_PRIME: u32 = 2_147_483_647;

/// Sparse integer matrix stored by columns; each column holds
/// `(row, value)` pairs sorted by row with nonzero values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    n_rows: usize,
    cols: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    /// Builds a matrix from columns; entries are sorted and zeros dropped.
    pub fn from_columns(n_rows: usize, cols: Vec<Vec<(u32, i64)>>) -> Self {
        let cols = cols
            .into_iter()
            .map(|mut c| {
                c.retain(|&(_, v)| v != 0);
                c.sort_unstable_by_key(|&(r, _)| r);
                assert!(
                    c.iter().all(|&(r, _)| (r as usize) < n_rows),
                    "row index out of range"
                );
                c
            })
            .collect();
        Self { n_rows, cols }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let cols = (0..n_cols)
            .map(|j| {
                (0..n_rows)
                    .filter(|&i| rows[i][j] != 0)
                    .map(|i| (i as u32, rows[i][j]))
                    .collect()
            })
            .collect();
        Self { n_rows, cols }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(u32, i64)] {
        &self.cols[j]
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.n_cols()]; self.n_rows];
        for (j, c) in self.cols.iter().enumerate() {
            for &(i, v) in c {
                out[i as usize][j] = v;
            }
        }
        out
    }

    /// Product `self · rhs`, densely.
    pub fn mul_dense(&self, rhs: &SparseMatrix) -> Vec<Vec<i64>> {
        assert_eq!(self.n_cols(), rhs.n_rows(), "inner dimensions differ");
        let mut out = vec![vec![0; rhs.n_cols()]; self.n_rows];
        for (j, c) in rhs.cols.iter().enumerate() {
            for &(k, b) in c {
                for &(i, a) in &self.cols[k as usize] {
                    out[i as usize][j] += a * b;
                }
            }
        }
        out
    }
}

/// Matrix of `∂_k : C_k → C_{k-1}` with rows and columns in the sorted face
/// order of [`SimplicialComplex::enumerate_faces`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub k: usize,
    pub matrix: SparseMatrix,
}

/// Betti numbers indexed by degree, starting at `min_degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub min_degree: isize,
    pub values: Vec<u64>,
}

impl BettiTable {
    pub fn new(min_degree: isize, values: Vec<u64>) -> Self {
        Self { min_degree, values }
    }

    /// Betti number in `degree`, zero outside the stored range.
    pub fn get(&self, degree: isize) -> u64 {
        usize::try_from(degree - self.min_degree)
            .ok()
            .and_then(|i| self.values.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn max_degree(&self) -> isize {
        self.min_degree + self.values.len() as isize - 1
    }

    /// `(degree, betti)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (isize, u64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &b)| (self.min_degree + i as isize, b))
    }

    /// `Σ (-1)^i β_i`.
    pub fn euler_characteristic(&self) -> i128 {
        self.iter()
            .map(|(d, b)| {
                if d.rem_euclid(2) == 0 {
                    b as i128
                } else {
                    -(b as i128)
                }
            })
            .sum()
    }

    /// Highest degree with a nonzero entry.
    pub fn top_nonzero_degree(&self) -> Option<isize> {
        self.iter().filter(|&(_, b)| b != 0).map(|(d, _)| d).last()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// How boundary ranks are computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RankMethod {
    /// Modular rank with a consistency check and exact fallback.
    #[default]
    Modular,
    /// Fraction-free integer elimination only.
    Exact,
}

fn boundary_from_lists(k: usize, rows: &FaceList, cols: &FaceList) -> BoundaryMatrix {
    let mut buf = Vec::with_capacity(k + 1);
    let columns = cols
        .iter()
        .map(|face| {
            let mut col: Vec<(u32, i64)> = (0..face.len())
                .map(|j| {
                    buf.clear();
                    buf.extend(
                        face.iter()
                            .enumerate()
                            .filter(|&(i, _)| i != j)
                            .map(|(_, &v)| v),
                    );
                    let row = rows
                        .index_of(&buf)
                        .expect("boundary face present in complex");
                    (row as u32, if j % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable_by_key(|&(r, _)| r);
            col
        })
        .collect();
    BoundaryMatrix {
        k,
        matrix: SparseMatrix {
            n_rows: rows.len(),
            cols: columns,
        },
    }
}

/// `∂_k` of `complex`; for `k = 0` the single row is the augmentation.
pub fn boundary_matrix(complex: &SimplicialComplex, k: usize) -> BoundaryMatrix {
    let rows = complex.face_list(k as isize - 1);
    let cols = complex.face_list(k as isize);
    boundary_from_lists(k, &rows, &cols)
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rank_exact(m: &SparseMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = m
        .to_dense()
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    let (n_rows, n_cols) = (m.n_rows(), m.n_cols());
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(p) = (rank..n_rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..n_rows {
            if a[i][col].is_zero() {
                for j in col + 1..n_cols {
                    let v = &a[rank][col] * &a[i][j];
                    a[i][j] = v / &prev;
                }
                continue;
            }
            for j in col + 1..n_cols {
                let v = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                a[i][j] = v / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank modulo `p`.
pub fn rank_mod_p(m: &SparseMatrix, p: u32) -> usize {
    let mut red = ModularReducer::new(m.n_rows(), p);
    m.cols
        .iter()
        .filter(|c| red.add_column(c).is_some())
        .count()
}

fn to_residue(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime: a^(p-2)
    let (mut base, mut exp, mut acc) = (a as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

/// Left-to-right column reduction modulo a prime. A reduced column's pivot
/// is its largest row index; stored pivot columns are scaled so the pivot
/// entry is one.
struct ModularReducer {
    p: u32,
    pivot_col: Vec<u32>,
    stored: Vec<Vec<(u32, u32)>>,
    scratch: Vec<(u32, u32)>,
}

impl ModularReducer {
    fn new(n_rows: usize, p: u32) -> Self {
        Self {
            p,
            pivot_col: vec![u32::MAX; n_rows],
            stored: Vec::new(),
            scratch: Vec::new(),
        }
    }

    /// Reduces a column; returns its pivot row if it is independent of the
    /// columns seen so far.
    fn add_column(&mut self, col: &[(u32, i64)]) -> Option<u32> {
        let p = self.p;
        let mut cur: Vec<(u32, u32)> = col
            .iter()
            .map(|&(r, v)| (r, to_residue(v, p)))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(low, val)) = cur.last() {
            let pc = self.pivot_col[low as usize];
            if pc == u32::MAX {
                break;
            }
            // cur -= val * pivot
            let factor = p - val;
            let piv = &self.stored[pc as usize];
            self.scratch.clear();
            let (mut i, mut j) = (0, 0);
            while i < cur.len() || j < piv.len() {
                let take_cur = j == piv.len() || (i < cur.len() && cur[i].0 < piv[j].0);
                let take_piv = i == cur.len() || (j < piv.len() && piv[j].0 < cur[i].0);
                if take_cur {
                    self.scratch.push(cur[i]);
                    i += 1;
                } else if take_piv {
                    self.scratch.push((piv[j].0, mul_mod(factor, piv[j].1, p)));
                    j += 1;
                } else {
                    let v =
                        ((cur[i].1 as u64 + mul_mod(factor, piv[j].1, p) as u64) % p as u64) as u32;
                    if v != 0 {
                        self.scratch.push((cur[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            std::mem::swap(&mut cur, &mut self.scratch);
        }
        let &(low, val) = cur.last()?;
        let inv = inv_mod(val, p);
        for e in cur.iter_mut() {
            e.1 = mul_mod(e.1, inv, p);
        }
        self.pivot_col[low as usize] = self.stored.len() as u32;
        self.stored.push(cur);
        Some(low)
    }
}

/// Ranks of `∂_0 .. ∂_d` modulo [`RANK_PRIME`], reducing from the top
/// dimension down and skipping columns that a higher boundary already
/// marked as dependent.
fn modular_ranks(faces: &[FaceList]) -> Vec<usize> {
    // faces[i] holds the faces of dimension i - 1
    let d = faces.len() - 2;
    let mut ranks = vec![0; d + 1];
    let mut cleared: Vec<bool> = Vec::new();
    for k in (0..=d).rev() {
        let bd = boundary_from_lists(k, &faces[k], &faces[k + 1]);
        let mut red = ModularReducer::new(bd.matrix.n_rows(), RANK_PRIME);
        let mut next_cleared = vec![false; bd.matrix.n_rows()];
        let mut rank = 0;
        for (j, col) in bd.matrix.cols.iter().enumerate() {
            if cleared.get(j).copied().unwrap_or(false) {
                continue;
            }
            if let Some(low) = red.add_column(col) {
                next_cleared[low as usize] = true;
                rank += 1;
            }
        }
        ranks[k] = rank;
        cleared = next_cleared;
    }
    ranks
}

fn betti_from_ranks(counts: &[u64], ranks: &[usize]) -> Vec<i64> {
    // counts[i] = f_{i-1}; ranks[k] = rank ∂_k
    (0..counts.len())
        .map(|i| {
            let below = if i == 0 { 0 } else { ranks[i - 1] as i64 };
            let above = ranks.get(i).copied().unwrap_or(0) as i64;
            counts[i] as i64 - below - above
        })
        .collect()
}

/// Reduced Betti numbers, degrees `-1 ..= dim K`.
pub fn reduced_betti(complex: &SimplicialComplex) -> BettiTable {
    reduced_betti_with(complex, RankMethod::Modular)
}

pub fn reduced_betti_with(complex: &SimplicialComplex, method: RankMethod) -> BettiTable {
    let d = complex.dim();
    if d < 0 {
        return BettiTable::new(-1, vec![1]);
    }
    let faces: Vec<FaceList> = (-1..=d).map(|k| complex.face_list(k)).collect();
    let counts: Vec<u64> = faces.iter().map(|f| f.len() as u64).collect();
    let euler: i128 = counts
        .iter()
        .enumerate()
        .map(|(i, &f)| if i % 2 == 0 { -(f as i128) } else { f as i128 })
        .sum();

    if method == RankMethod::Modular {
        let betti = betti_from_ranks(&counts, &modular_ranks(&faces));
        let alt: i128 = betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { -(b as i128) } else { b as i128 })
            .sum();
        if betti.iter().all(|&b| b >= 0) && alt == euler {
            return BettiTable::new(-1, betti.into_iter().map(|b| b as u64).collect());
        }
        log::warn!("modular Betti numbers failed the consistency check; recomputing exactly");
    }
    let ranks: Vec<usize> = (0..=d as usize)
        .map(|k| rank_exact(&boundary_from_lists(k, &faces[k], &faces[k + 1]).matrix))
        .collect();
    let betti = betti_from_ranks(&counts, &ranks);
    BettiTable::new(
        -1,
        betti
            .into_iter()
            .map(|b| u64::try_from(b).expect("exact Betti numbers are nonnegative"))
            .collect(),
    )
}
