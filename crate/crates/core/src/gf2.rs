//! Linear algebra over the two-element field on bit-packed rows.
//!
//! Vectors are stored 64 coordinates per machine word and added by XOR.
//! A vector of length `m` doubles as a subset of `{0, .., m-1}` through its
//! support. Matrices are lists of equal-length row vectors; the text format
//! is one row per line of `0`/`1` characters.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest rank whose row space [`Gf2Matrix::row_space`] will enumerate.
pub const ROW_SPACE_RANK_LIMIT: usize = 30;

const WORD: usize = 64;

/// A vector over the two-element field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Vector {
    words: Vec<u64>,
    len: usize,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    /// Builds the indicator vector of `support`.
    ///
    /// # Panics
    /// Panics if an index is out of range.
    pub fn from_support<I: IntoIterator<Item = usize>>(len: usize, support: I) -> Self {
        let mut v = Self::zeros(len);
        for i in support {
            v.set(i, true);
        }
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        Self::from_support(
            bits.len(),
            bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i),
        )
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    /// Coordinate-wise addition.
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Standard bilinear form, valued in {0, 1}.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot product");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }

    /// Indices of the nonzero coordinates, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.ones().collect()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + b)
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.ones().next()
    }

    /// Moves coordinate `i` to position `perm[i]`.
    pub fn permute(&self, perm: &[u32]) -> Self {
        assert_eq!(perm.len(), self.len, "permutation degree mismatch");
        let mut out = Self::zeros(self.len);
        for i in self.ones() {
            out.set(perm[i] as usize, true);
        }
        out
    }
}

impl Ord for Gf2Vector {
    /// Lexicographic order on the `0`/`1` string, coordinate 0 first.
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let bit = diff.trailing_zeros();
                return if (a >> bit) & 1 == 1 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
        }
        self.len.cmp(&other.len)
    }
}

impl PartialOrd for Gf2Vector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vector({self})")
    }
}

impl FromStr for Gf2Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut v = Self::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => {
                    return Err(Error::Parse(format!(
                        "unexpected character {c:?} in bit row"
                    )))
                }
            }
        }
        Ok(v)
    }
}

/// A matrix over the two-element field, stored by rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    n_cols: usize,
    rows: Vec<Gf2Vector>,
}

/// Outcome of Gauss–Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReduction {
    /// Nonzero rows of the reduced row-echelon form, pivots ascending.
    pub reduced: Gf2Matrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
    /// Row `i` holds the coefficients expressing `reduced` row `i` in the
    /// original rows.
    pub combinations: Vec<Gf2Vector>,
}

impl Gf2Matrix {
    pub fn new(n_cols: usize, rows: Vec<Gf2Vector>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != n_cols) {
            return Err(Error::DimensionMismatch {
                expected: n_cols,
                found: r.len(),
            });
        }
        Ok(Self { n_cols, rows })
    }

    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Self {
            n_cols,
            rows: vec![Gf2Vector::zeros(n_cols); n_rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            n_cols: n,
            rows: (0..n).map(|i| Gf2Vector::from_support(n, [i])).collect(),
        }
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(n_rows: usize, columns: &[Gf2Vector]) -> Result<Self> {
        let mut m = Self::zeros(n_rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != n_rows {
                return Err(Error::DimensionMismatch {
                    expected: n_rows,
                    found: col.len(),
                });
            }
            for i in col.ones() {
                m.rows[i].set(j, true);
            }
        }
        Ok(m)
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn rows(&self) -> &[Gf2Vector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Gf2Vector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn column(&self, j: usize) -> Gf2Vector {
        Gf2Vector::from_support(
            self.n_rows(),
            (0..self.n_rows()).filter(|&i| self.rows[i].get(j)),
        )
    }

    /// Column `i` of `self` becomes column `perm[i]` of the result.
    ///
    /// With `perm` the vertex permutation of a group element `g`, this is
    /// `g · Λ = Λ P_g^{-1}`.
    pub fn permute_columns(&self, perm: &[u32]) -> Self {
        Self {
            n_cols: self.n_cols,
            rows: self.rows.iter().map(|r| r.permute(perm)).collect(),
        }
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.n_cols != rhs.n_rows() {
            return Err(Error::DimensionMismatch {
                expected: self.n_cols,
                found: rhs.n_rows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = Gf2Vector::zeros(rhs.n_cols);
                for k in r.ones() {
                    acc.xor_assign(&rhs.rows[k]);
                }
                acc
            })
            .collect();
        Ok(Gf2Matrix {
            n_cols: rhs.n_cols,
            rows,
        })
    }

    /// Gauss–Jordan elimination to reduced row-echelon form.
    pub fn row_reduce(&self) -> RowReduction {
        let n = self.n_rows();
        let mut rows = self.rows.clone();
        let mut combos: Vec<Gf2Vector> = (0..n).map(|i| Gf2Vector::from_support(n, [i])).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.n_cols {
            if r == n {
                break;
            }
            let Some(p) = (r..n).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(r, p);
            combos.swap(r, p);
            let (pivot_row, pivot_combo) = (rows[r].clone(), combos[r].clone());
            for i in 0..n {
                if i != r && rows[i].get(col) {
                    rows[i].xor_assign(&pivot_row);
                    combos[i].xor_assign(&pivot_combo);
                }
            }
            pivots.push(col);
            r += 1;
        }
        rows.truncate(r);
        combos.truncate(r);
        RowReduction {
            reduced: Gf2Matrix {
                n_cols: self.n_cols,
                rows,
            },
            rank: r,
            pivot_columns: pivots,
            combinations: combos,
        }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().rank
    }

    /// Basis of `{v : M v = 0}`, one basis vector per free column.
    pub fn kernel(&self) -> Gf2Matrix {
        let red = self.row_reduce();
        let mut is_pivot = vec![false; self.n_cols];
        for &p in &red.pivot_columns {
            is_pivot[p] = true;
        }
        let basis = (0..self.n_cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = Gf2Vector::from_support(self.n_cols, [f]);
                for (row, &p) in red.reduced.rows.iter().zip(&red.pivot_columns) {
                    if row.get(f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect();
        Gf2Matrix {
            n_cols: self.n_cols,
            rows: basis,
        }
    }

    /// All `2^rank` vectors of the row space, zero first.
    ///
    /// Vector `t` is the sum of the reduced basis rows selected by the bits
    /// of `t`.
    pub fn row_space(&self) -> Result<Vec<Gf2Vector>> {
        let red = self.row_reduce();
        if red.rank > ROW_SPACE_RANK_LIMIT {
            return Err(Error::RankTooLarge {
                rank: red.rank,
                limit: ROW_SPACE_RANK_LIMIT,
            });
        }
        let basis = &red.reduced.rows;
        let mut out = Vec::with_capacity(1 << red.rank);
        out.push(Gf2Vector::zeros(self.n_cols));
        for (k, b) in basis.iter().enumerate() {
            for t in 0..(1usize << k) {
                out.push(out[t].xor(b));
            }
        }
        Ok(out)
    }

    /// True iff both matrices span the same subspace.
    pub fn row_spaces_equal(&self, other: &Gf2Matrix) -> Result<bool> {
        if self.n_cols != other.n_cols {
            return Err(Error::DimensionMismatch {
                expected: self.n_cols,
                found: other.n_cols,
            });
        }
        Ok(self.row_reduce().reduced == other.row_reduce().reduced)
    }

    /// Coefficients `x` with `Σ x_i row_i = target`, if the target lies in
    /// the row space.
    pub fn express(&self, target: &Gf2Vector) -> Option<Gf2Vector> {
        self.row_reduce().express(target)
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let cols = (0..self.n_cols).map(|j| self.column(j)).collect();
        Gf2Matrix {
            n_cols: self.n_rows(),
            rows: cols,
        }
    }

    /// Columns indexed by `cols` are linearly independent.
    pub fn columns_independent(&self, cols: &[usize]) -> bool {
        let sub: Vec<Gf2Vector> = cols.iter().map(|&j| self.column(j)).collect();
        match Gf2Matrix::new(self.n_rows(), sub) {
            Ok(m) => m.rank() == cols.len(),
            Err(_) => false,
        }
    }

    /// Parses the text format: one row per line, `0`/`1` characters only.
    pub fn parse(text: &str) -> Result<Self> {
        let rows: Vec<Gf2Vector> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(Gf2Vector::from_str)
            .collect::<Result<_>>()?;
        let n_cols = rows.first().map_or(0, Gf2Vector::len);
        Gf2Matrix::new(n_cols, rows)
    }
}

impl RowReduction {
    pub fn express(&self, target: &Gf2Vector) -> Option<Gf2Vector> {
        let mut residual = target.clone();
        let mut coeffs = Gf2Vector::zeros(self.combinations.first().map_or(0, Gf2Vector::len));
        for ((row, combo), &p) in self
            .reduced
            .rows
            .iter()
            .zip(&self.combinations)
            .zip(&self.pivot_columns)
        {
            if residual.get(p) {
                residual.xor_assign(row);
                coeffs.xor_assign(combo);
            }
        }
        residual.is_zero().then_some(coeffs)
    }
}

impl FromStr for Gf2Matrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Gf2Matrix::parse(s)
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            write!(f, "{row}")?;
        }
        write!(f, "]")
    }
}
