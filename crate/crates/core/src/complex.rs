//! Finite abstract simplicial complexes stored by their facets.
//!
//! Faces are never stored; they are enumerated on demand from the facet list.
//! Vertices are `0..n_vertices`. A complex with no facets is the empty
//! complex `{∅}`: its only face is the empty face.

use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::Gf2Vector;

/// Abstract simplicial complex on the vertex set `0..n_vertices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawComplex", into = "RawComplex")]
pub struct SimplicialComplex {
    n_vertices: usize,
    facets: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct RawComplex {
    n_vertices: usize,
    facets: Vec<Vec<u32>>,
}

impl TryFrom<RawComplex> for SimplicialComplex {
    type Error = Error;

    fn try_from(raw: RawComplex) -> Result<Self> {
        SimplicialComplex::new(raw.n_vertices, raw.facets)
    }
}

impl From<SimplicialComplex> for RawComplex {
    fn from(k: SimplicialComplex) -> Self {
        RawComplex {
            n_vertices: k.n_vertices,
            facets: k.facets,
        }
    }
}

/// Face counts `(f_{-1}, f_0, .., f_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector {
    pub counts: Vec<u64>,
}

impl FVector {
    /// Dimension of the complex, `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.counts.len() as isize - 2
    }

    /// Number of faces of dimension `k`, `k >= -1`.
    pub fn get(&self, k: isize) -> u64 {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.counts.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// `Σ_{i >= -1} (-1)^i f_i`.
    pub fn reduced_euler_characteristic(&self) -> i128 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { -(f as i128) } else { f as i128 })
            .sum()
    }

    /// `h_k = Σ_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}` for a complex of
    /// dimension `d - 1`.
    pub fn h_vector(&self) -> Vec<i128> {
        let d = self.counts.len() - 1;
        (0..=d)
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        let term = binomial((d - i) as u64, (k - i) as u64) as i128
                            * self.counts[i] as i128;
                        if (k - i) % 2 == 0 {
                            term
                        } else {
                            -term
                        }
                    })
                    .sum()
            })
            .collect()
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Faces of a single dimension, sorted lexicographically, packed with a
/// fixed stride.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FaceList {
    width: usize,
    data: Vec<u32>,
}

impl FaceList {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.data.len().checked_div(self.width).unwrap_or(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, i: usize) -> &[u32] {
        &self.data[i * self.width..(i + 1) * self.width]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.len()).map(move |i| self.get(i))
    }

    /// Position of `face` in the list, by binary search.
    pub fn index_of(&self, face: &[u32]) -> Option<usize> {
        if face.len() != self.width {
            return None;
        }
        if self.width == 0 {
            return Some(0);
        }
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(face) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn to_vecs(&self) -> Vec<Vec<u32>> {
        self.iter().map(<[u32]>::to_vec).collect()
    }
}

/// A full subcomplex together with the map back to the ambient vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullSubcomplex {
    pub complex: SimplicialComplex,
    /// `vertex_map[new] = old`.
    pub vertex_map: Vec<u32>,
}

impl SimplicialComplex {
    /// Builds a complex from generating simplices; non-maximal and duplicate
    /// simplices are pruned and the empty simplex is dropped.
    pub fn new(n_vertices: usize, facets: Vec<Vec<u32>>) -> Result<Self> {
        let mut cleaned = Vec::with_capacity(facets.len());
        for mut f in facets {
            f.sort_unstable();
            f.dedup();
            if let Some(&v) = f.last() {
                if v as usize >= n_vertices {
                    return Err(Error::InvalidInput(format!(
                        "vertex {v} out of range for a complex on {n_vertices} vertices"
                    )));
                }
                cleaned.push(f);
            }
        }
        Ok(Self {
            n_vertices,
            facets: prune_to_maximal(cleaned),
        })
    }

    /// The complex `{∅}` on no vertices.
    pub fn empty() -> Self {
        Self {
            n_vertices: 0,
            facets: Vec::new(),
        }
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Self {
        let facets = if n == 0 {
            Vec::new()
        } else {
            vec![(0..n as u32).collect()]
        };
        Self {
            n_vertices: n,
            facets,
        }
    }

    /// The boundary of the simplex on `n` vertices.
    pub fn simplex_boundary(n: usize) -> Self {
        let facets = (0..n as u32)
            .map(|skip| (0..n as u32).filter(|&v| v != skip).collect())
            .collect();
        Self::new(n, facets).expect("valid boundary complex")
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Facets, each sorted ascending, listed lexicographically.
    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    /// Dimension, `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
            .unwrap_or(-1)
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets.is_empty()
    }

    /// True iff `face` (sorted) is a face of the complex.
    pub fn contains_face(&self, face: &[u32]) -> bool {
        face.is_empty() || self.facets.iter().any(|f| is_subset(face, f))
    }

    /// The induced subcomplex on `subset`, reindexed to `0..subset.len()` in
    /// ascending order of the original labels.
    pub fn full_subcomplex(&self, subset: &[u32]) -> FullSubcomplex {
        let mut vertex_map: Vec<u32> = subset.to_vec();
        vertex_map.sort_unstable();
        vertex_map.dedup();
        let mut new_index = vec![u32::MAX; self.n_vertices];
        for (i, &v) in vertex_map.iter().enumerate() {
            new_index[v as usize] = i as u32;
        }
        let mut pieces: Vec<Vec<u32>> = self
            .facets
            .iter()
            .map(|f| {
                f.iter()
                    .filter_map(|&v| Some(new_index[v as usize]).filter(|&x| x != u32::MAX))
                    .collect::<Vec<_>>()
            })
            .filter(|f: &Vec<u32>| !f.is_empty())
            .collect();
        pieces.sort_unstable();
        pieces.dedup();
        let complex = Self {
            n_vertices: vertex_map.len(),
            facets: prune_to_maximal(pieces),
        };
        FullSubcomplex {
            complex,
            vertex_map,
        }
    }

    /// The induced subcomplex on the support of `s`.
    pub fn full_subcomplex_on(&self, s: &Gf2Vector) -> FullSubcomplex {
        let support: Vec<u32> = s.ones().map(|i| i as u32).collect();
        self.full_subcomplex(&support)
    }

    /// Faces of dimension `dim` (as a packed list), lexicographically sorted.
    pub fn face_list(&self, dim: isize) -> FaceList {
        if dim < -1 {
            return FaceList {
                width: 1,
                data: Vec::new(),
            };
        }
        if dim == -1 {
            return FaceList {
                width: 0,
                data: Vec::new(),
            };
        }
        let width = (dim + 1) as usize;
        let mut faces: Vec<Box<[u32]>> = Vec::new();
        let mut buf = Vec::with_capacity(width);
        for f in self.facets.iter().filter(|f| f.len() >= width) {
            for_each_subset(f, width, &mut buf, &mut |s| faces.push(s.into()));
        }
        faces.sort_unstable();
        faces.dedup();
        let mut data = Vec::with_capacity(faces.len() * width);
        for f in faces {
            data.extend_from_slice(&f);
        }
        FaceList { width, data }
    }

    /// Faces of dimension `dim`, each sorted, listed lexicographically.
    /// Dimension `-1` yields the single empty face.
    pub fn enumerate_faces(&self, dim: isize) -> Vec<Vec<u32>> {
        if dim == -1 {
            return vec![Vec::new()];
        }
        self.face_list(dim).to_vecs()
    }

    pub fn f_vector(&self) -> FVector {
        let d = self.dim();
        let mut counts = vec![1u64];
        for k in 0..=d {
            counts.push(self.count_faces(k as usize + 1));
        }
        FVector { counts }
    }

    fn count_faces(&self, width: usize) -> u64 {
        if self.facets.iter().all(|f| f.len() == width) {
            return self.facets.len() as u64;
        }
        let mut seen: FxHashSet<Box<[u32]>> = FxHashSet::default();
        let mut buf = Vec::with_capacity(width);
        for f in self.facets.iter().filter(|f| f.len() >= width) {
            for_each_subset(f, width, &mut buf, &mut |s| {
                if !seen.contains(s) {
                    seen.insert(s.into());
                }
            });
        }
        seen.len() as u64
    }

    pub fn h_vector(&self) -> Vec<i128> {
        self.f_vector().h_vector()
    }

    pub fn euler_characteristic_reduced(&self) -> i128 {
        self.f_vector().reduced_euler_characteristic()
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[u32]) -> Result<Self> {
        if perm.len() != self.n_vertices {
            return Err(Error::DimensionMismatch {
                expected: self.n_vertices,
                found: perm.len(),
            });
        }
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().map(|&v| perm[v as usize]).collect())
            .collect();
        Self::new(self.n_vertices, facets)
    }

    /// Lookup table from sorted facet to its index.
    pub(crate) fn facet_index(&self) -> FxHashMap<&[u32], usize> {
        self.facets
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect()
    }
}

/// Calls `f` on every `k`-subset of the sorted slice `set`, in lexicographic
/// order.
pub(crate) fn for_each_subset(
    set: &[u32],
    k: usize,
    buf: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32]),
) {
    fn rec(set: &[u32], start: usize, k: usize, buf: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if buf.len() == k {
            f(buf);
            return;
        }
        let need = k - buf.len();
        for i in start..=set.len() - need {
            buf.push(set[i]);
            rec(set, i + 1, k, buf, f);
            buf.pop();
        }
    }
    buf.clear();
    if k <= set.len() {
        rec(set, 0, k, buf, f);
    }
}

pub(crate) fn is_subset(small: &[u32], big: &[u32]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    let mut it = big.iter();
    small.iter().all(|x| it.by_ref().any(|y| y == x))
}

/// Keeps the inclusion-maximal sets, sorted lexicographically.
fn prune_to_maximal(mut sets: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    sets.sort_unstable();
    sets.dedup();
    let Some(max_len) = sets.iter().map(Vec::len).max() else {
        return sets;
    };
    if sets.iter().all(|s| s.len() == max_len) {
        return sets;
    }
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(sets[i].len()));
    let mut by_vertex: FxHashMap<u32, Vec<usize>> = FxHashMap::default();
    let mut keep = vec![false; sets.len()];
    for &i in &order {
        let s = &sets[i];
        let covered = by_vertex.get(&s[0]).is_some_and(|cands| {
            cands
                .iter()
                .any(|&j| sets[j].len() > s.len() && is_subset(s, &sets[j]))
        });
        if !covered {
            keep[i] = true;
            for &v in s {
                by_vertex.entry(v).or_default().push(i);
            }
        }
    }
    sets.into_iter()
        .zip(keep)
        .filter_map(|(s, k)| k.then_some(s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> SimplicialComplex {
        SimplicialComplex::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap()
    }

    #[test]
    fn pruning_removes_faces_of_facets() {
        let k = SimplicialComplex::new(
            4,
            vec![vec![0, 1], vec![0, 1, 2], vec![3], vec![2, 1], vec![]],
        )
        .unwrap();
        assert_eq!(k.facets(), &[vec![0, 1, 2], vec![3]]);
    }

    #[test]
    fn out_of_range_vertex_rejected() {
        assert!(SimplicialComplex::new(2, vec![vec![0, 2]]).is_err());
    }

    #[test]
    fn square_subcomplex_on_opposite_vertices() {
        let sub = square().full_subcomplex(&[0, 2]);
        assert_eq!(sub.complex.facets(), &[vec![0], vec![1]]);
        assert_eq!(sub.vertex_map, vec![0, 2]);
    }

    #[test]
    fn full_vertex_set_gives_back_the_complex() {
        let k = square();
        assert_eq!(k.full_subcomplex(&[0, 1, 2, 3]).complex, k);
    }

    #[test]
    fn empty_subset_gives_empty_complex() {
        let sub = square().full_subcomplex(&[]);
        assert!(sub.complex.is_empty_complex());
        assert_eq!(sub.complex.f_vector().counts, vec![1]);
        assert_eq!(sub.complex.dim(), -1);
    }

    #[test]
    fn triangle_boundary_on_two_vertices_is_an_edge() {
        let tri = SimplicialComplex::simplex_boundary(3);
        // all 7 faces enumerated by hand: ∅, 0, 1, 2, 01, 02, 12
        let all: usize = (-1..=1).map(|d| tri.enumerate_faces(d).len()).sum();
        assert_eq!(all, 7);
        for pair in [[0, 1], [0, 2], [1, 2]] {
            let sub = tri.full_subcomplex(&pair);
            assert_eq!(sub.complex.facets(), &[vec![0, 1]]);
        }
    }

    #[test]
    fn face_enumeration() {
        let tri = SimplicialComplex::simplex_boundary(3);
        assert_eq!(
            tri.enumerate_faces(1),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert_eq!(tri.enumerate_faces(-1), vec![Vec::<u32>::new()]);
        assert_eq!(tri.enumerate_faces(0).len(), 3);
        let fl = tri.face_list(1);
        assert_eq!(fl.index_of(&[0, 2]), Some(1));
        assert_eq!(fl.index_of(&[0, 3]), None);
    }

    #[test]
    fn simplex_boundary_h_vector_is_all_ones() {
        for n in 2..7 {
            let k = SimplicialComplex::simplex_boundary(n);
            assert_eq!(k.h_vector(), vec![1; n]);
        }
    }

    #[test]
    fn h_vector_sums_to_facet_count() {
        let k = square();
        let h = k.h_vector();
        assert_eq!(h, vec![1, 2, 1]);
        assert_eq!(h.iter().sum::<i128>(), k.facets().len() as i128);
    }

    #[test]
    fn reduced_euler_characteristic() {
        assert_eq!(square().euler_characteristic_reduced(), -1);
        assert_eq!(
            SimplicialComplex::empty().euler_characteristic_reduced(),
            -1
        );
        assert_eq!(
            SimplicialComplex::simplex(4).euler_characteristic_reduced(),
            0
        );
        // two points: -1 + 2
        assert_eq!(
            SimplicialComplex::new(2, vec![vec![0], vec![1]])
                .unwrap()
                .euler_characteristic_reduced(),
            1
        );
    }

    #[test]
    fn nested_full_subcomplexes_compose() {
        let k = SimplicialComplex::simplex_boundary(5);
        let s = [0u32, 1, 2, 4];
        let outer = k.full_subcomplex(&s);
        // T in the new labels of the first subcomplex
        let t_new = [1u32, 2, 3];
        let inner = outer.complex.full_subcomplex(&t_new);
        let t_old: Vec<u32> = t_new
            .iter()
            .map(|&i| outer.vertex_map[i as usize])
            .collect();
        let direct = k.full_subcomplex(&t_old);
        assert_eq!(inner.complex, direct.complex);
        let composed: Vec<u32> = inner
            .vertex_map
            .iter()
            .map(|&i| outer.vertex_map[i as usize])
            .collect();
        assert_eq!(composed, direct.vertex_map);
    }

    #[test]
    fn json_format() {
        let k: SimplicialComplex =
            serde_json::from_str(r#"{"n_vertices": 3, "facets": [[1,0],[2]]}"#).unwrap();
        assert_eq!(k.facets(), &[vec![0, 1], vec![2]]);
        let back = serde_json::to_string(&k).unwrap();
        assert_eq!(back, r#"{"n_vertices":3,"facets":[[0,1],[2]]}"#);
        assert!(
            serde_json::from_str::<SimplicialComplex>(r#"{"n_vertices": 1, "facets": [[1]]}"#)
                .is_err()
        );
    }
}
