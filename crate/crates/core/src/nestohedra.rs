//! Building sets, nested set complexes and their characteristic matrices.
//!
//! Ground sets are `{0, .., n}` and members are bitmasks. The element `n`
//! plays the role of the extra coordinate whose characteristic vector is the
//! all-ones vector.

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::group::{check_equivariance, toric_homology, RealToricSpace, VertexGroup};
use crate::homology::BettiTable;
use crate::tableaux::{odd_descents, skew_hook_dimension, skew_hook_from_descents};

/// Largest ground set accepted.
pub const MAX_GROUND: usize = 24;

/// A family of nonempty subsets of `{0, .., ground - 1}` containing every
/// singleton and closed under unions of intersecting members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildingSet {
    ground: usize,
    /// Sorted by size, then by the ascending element list.
    members: Vec<u32>,
}

/// JSON form: `{"ground": n + 1, "members": [[0, 1], ...]}`, 0-indexed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildingSetFile {
    pub ground: usize,
    pub members: Vec<Vec<u32>>,
}

fn elements(mask: u32) -> Vec<u32> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

fn member_key(mask: u32) -> (u32, Vec<u32>) {
    (mask.count_ones(), elements(mask))
}

/// Checks the singleton and union axioms and returns the building set.
pub fn validate_building_set(ground: usize, members: &[Vec<u32>]) -> Result<BuildingSet> {
    if ground == 0 || ground > MAX_GROUND {
        return Err(Error::InvalidInput(format!(
            "ground set size {ground} outside 1..={MAX_GROUND}"
        )));
    }
    let mut masks = Vec::with_capacity(members.len());
    for m in members {
        if m.is_empty() {
            return Err(Error::InvalidInput(
                "building set members must be nonempty".into(),
            ));
        }
        let mut mask = 0u32;
        for &x in m {
            if x as usize >= ground {
                return Err(Error::InvalidInput(format!(
                    "element {x} outside the ground set 0..{ground}"
                )));
            }
            mask |= 1 << x;
        }
        masks.push(mask);
    }
    masks.sort_by_key(|&m| member_key(m));
    masks.dedup();
    let set: FxHashSet<u32> = masks.iter().copied().collect();
    for i in 0..ground as u32 {
        if !set.contains(&(1 << i)) {
            return Err(Error::MissingSingleton(i));
        }
    }
    for (a, &x) in masks.iter().enumerate() {
        for &y in &masks[a + 1..] {
            if x & y != 0 && !set.contains(&(x | y)) {
                return Err(Error::NotUnionClosed(elements(x), elements(y)));
            }
        }
    }
    Ok(BuildingSet {
        ground,
        members: masks,
    })
}

impl BuildingSet {
    pub fn from_file(file: &BuildingSetFile) -> Result<Self> {
        validate_building_set(file.ground, &file.members)
    }

    pub fn to_file(&self) -> BuildingSetFile {
        BuildingSetFile {
            ground: self.ground,
            members: self.members.iter().map(|&m| elements(m)).collect(),
        }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, mask: u32) -> bool {
        self.members
            .binary_search_by(|&m| member_key(m).cmp(&member_key(mask)))
            .is_ok()
    }

    pub fn is_connected(&self) -> bool {
        self.contains(self.full())
    }

    fn full(&self) -> u32 {
        ((1u64 << self.ground) - 1) as u32
    }

    /// The power set of `{0, .., ground - 1}` minus the empty set.
    pub fn complete(ground: usize) -> Result<Self> {
        Self::with_sizes(ground, |_| true)
    }

    /// Subsets of `{0, .., n}` of size 1 or of size greater than `k`.
    pub fn family_b(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::Precondition(format!(
                "need 1 <= k <= n, got n = {n}, k = {k}"
            )));
        }
        Self::with_sizes(n + 1, |s| s == 1 || s > k)
    }

    fn with_sizes(ground: usize, keep: impl Fn(usize) -> bool) -> Result<Self> {
        if ground == 0 || ground > MAX_GROUND {
            return Err(Error::InvalidInput(format!(
                "ground set size {ground} outside 1..={MAX_GROUND}"
            )));
        }
        let mut members: Vec<u32> = (1u32..=((1u64 << ground) - 1) as u32)
            .filter(|m| keep(m.count_ones() as usize))
            .collect();
        members.sort_by_key(|&m| member_key(m));
        Ok(Self { ground, members })
    }
}

/// The nested set complex on the proper members of a connected building set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedSetComplex {
    /// Vertex `v` is the member `vertices[v]`.
    pub vertices: Vec<u32>,
    pub complex: SimplicialComplex,
}

/// Faces are sets of proper members that are pairwise nested or disjoint and
/// where no two or more pairwise disjoint members have a union in the
/// building set.
pub fn nested_set_complex(b: &BuildingSet) -> Result<NestedSetComplex> {
    if !b.is_connected() {
        return Err(Error::NotConnected);
    }
    let full = b.full();
    let vertices: Vec<u32> = b.members.iter().copied().filter(|&m| m != full).collect();
    let members: FxHashSet<u32> = b.members.iter().copied().collect();
    let mut facets = Vec::new();
    let mut face = Vec::new();
    extend_nested(&vertices, &members, 0, &mut face, &mut facets);
    let complex = SimplicialComplex::new(vertices.len(), facets)?;
    Ok(NestedSetComplex { vertices, complex })
}

fn extend_nested(
    vertices: &[u32],
    members: &FxHashSet<u32>,
    from: usize,
    face: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    let mut extended = false;
    for v in from..vertices.len() {
        if compatible(vertices, members, face, vertices[v]) {
            extended = true;
            face.push(v as u32);
            extend_nested(vertices, members, v + 1, face, out);
            face.pop();
        }
    }
    if !extended && !face.is_empty() {
        out.push(face.clone());
    }
}

/// Whether `j` can join `face`.
fn compatible(vertices: &[u32], members: &FxHashSet<u32>, face: &[u32], j: u32) -> bool {
    let masks: Vec<u32> = face.iter().map(|&v| vertices[v as usize]).collect();
    if masks
        .iter()
        .any(|&m| m & j != 0 && m & j != m && m & j != j)
    {
        return false;
    }
    // every pairwise disjoint collection containing j
    let disjoint: Vec<u32> = masks.iter().copied().filter(|&m| m & j == 0).collect();
    fn bad_union(cands: &[u32], start: usize, acc: u32, members: &FxHashSet<u32>) -> bool {
        for i in start..cands.len() {
            if cands[i] & acc == 0 {
                let u = acc | cands[i];
                if members.contains(&u) || bad_union(cands, i + 1, u, members) {
                    return true;
                }
            }
        }
        false
    }
    !bad_union(&disjoint, 0, j, members)
}

/// Whether every pair in `face` (as members) is nested or disjoint and no
/// union of two or more pairwise disjoint ones is a member.
pub fn is_nested(b: &BuildingSet, face: &[u32]) -> bool {
    for (i, &x) in face.iter().enumerate() {
        for &y in &face[i + 1..] {
            let z = x & y;
            if z != 0 && z != x && z != y {
                return false;
            }
        }
    }
    let k = face.len();
    (1u32..1 << k).filter(|s| s.count_ones() >= 2).all(|s| {
        let chosen: Vec<u32> = (0..k)
            .filter(|&i| s >> i & 1 == 1)
            .map(|i| face[i])
            .collect();
        let pairwise_disjoint = chosen
            .iter()
            .enumerate()
            .all(|(i, &x)| chosen[i + 1..].iter().all(|&y| x & y == 0));
        !pairwise_disjoint || !b.contains(chosen.iter().fold(0, |a, &x| a | x))
    })
}

/// Column for member `I` is `Σ_{k ∈ I} e_k` with `e_n` the all-ones vector.
pub fn lambda_of_building_set(b: &BuildingSet, nsc: &NestedSetComplex) -> Gf2Matrix {
    let n = b.ground - 1;
    let columns: Vec<Gf2Vector> = nsc
        .vertices
        .iter()
        .map(|&m| {
            let low = m & ((1u64 << n) - 1) as u32;
            let mut v = Gf2Vector::from_support(n, elements(low).into_iter().map(|x| x as usize));
            if m >> n & 1 == 1 {
                v.xor_assign(&Gf2Vector::from_support(n, 0..n));
            }
            v
        })
        .collect();
    Gf2Matrix::from_columns(n, &columns).expect("columns have length n")
}

/// The real toric space of a connected building set.
pub fn toric_space_of(b: &BuildingSet) -> Result<(NestedSetComplex, RealToricSpace)> {
    let nsc = nested_set_complex(b)?;
    let lambda = lambda_of_building_set(b, &nsc);
    let space = RealToricSpace::new(nsc.complex.clone(), lambda)?;
    Ok((nsc, space))
}

/// Vertex permutations induced by permutations of the ground set.
pub fn induced_vertex_group(
    b: &BuildingSet,
    nsc: &NestedSetComplex,
    ground_perms: &[Vec<u32>],
) -> Result<VertexGroup> {
    let index: rustc_hash::FxHashMap<u32, u32> = nsc
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &m)| (m, i as u32))
        .collect();
    let mut gens = Vec::with_capacity(ground_perms.len());
    for p in ground_perms {
        if p.len() != b.ground {
            return Err(Error::DimensionMismatch {
                expected: b.ground,
                found: p.len(),
            });
        }
        let image_of = |m: u32| {
            elements(m)
                .into_iter()
                .fold(0u32, |acc, x| acc | 1 << p[x as usize])
        };
        let perm: Option<Vec<u32>> = nsc
            .vertices
            .iter()
            .map(|&m| index.get(&image_of(m)).copied())
            .collect();
        gens.push(perm.ok_or_else(|| {
            Error::Precondition("permutation does not preserve the building set".into())
        })?);
    }
    VertexGroup::new(nsc.vertices.len(), gens)
}

/// Adjacent transpositions of `{0, .., m - 1}`.
pub fn adjacent_transpositions(m: usize) -> Vec<Vec<u32>> {
    (0..m.saturating_sub(1))
        .map(|i| {
            let mut p: Vec<u32> = (0..m as u32).collect();
            p.swap(i, i + 1);
            p
        })
        .collect()
}

/// Whether the ground-set permutations act on the toric space.
pub fn symmetric_equivariance(b: &BuildingSet, ground_perms: &[Vec<u32>]) -> Result<bool> {
    let (nsc, space) = toric_space_of(b)?;
    let g = induced_vertex_group(b, &nsc, ground_perms)?;
    Ok(check_equivariance(&g, &space)?.preserved)
}

/// Result of [`top_homology_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopHomologyReport {
    pub n: usize,
    pub k: usize,
    pub betti: BettiTable,
    pub top_degree: usize,
    pub top_dimension: u64,
    /// Dimension of the Foulkes representation for the descent set.
    pub expected_top_dimension: u128,
    pub descent_set: Vec<u32>,
    pub vanishing_above: bool,
}

impl TopHomologyReport {
    pub fn holds(&self) -> bool {
        self.vanishing_above && self.top_dimension as u128 == self.expected_top_dimension
    }
}

/// The descent set `{1, .., k} ∪ {1, 3, .., n}` for odd `n`.
pub fn top_descent_set(n: usize, k: usize) -> Vec<u32> {
    let mut q: Vec<u32> = (1..=k as u32).chain(odd_descents(n as u32)).collect();
    q.sort_unstable();
    q.dedup();
    q
}

/// Computes the homology of the toric space of `B_{n,k}` with the symmetric
/// group shortcut and compares its top degree with the skew hook count.
pub fn top_homology_check(n: usize, k: usize) -> Result<TopHomologyReport> {
    if n.is_multiple_of(2) {
        return Err(Error::Precondition(format!("n = {n} must be odd")));
    }
    let b = BuildingSet::family_b(n, k)?;
    let (nsc, space) = toric_space_of(&b)?;
    let g = induced_vertex_group(&b, &nsc, &adjacent_transpositions(n + 1))?;
    let betti = toric_homology(&space, Some(&g))?;
    let top_degree = n.div_ceil(2) + k / 2;
    let descent_set = top_descent_set(n, k);
    let expected_top_dimension =
        skew_hook_dimension(&skew_hook_from_descents(n as u32 + 1, &descent_set)?)?;
    let vanishing_above = betti
        .iter()
        .all(|(d, v)| d <= top_degree as isize || v == 0);
    Ok(TopHomologyReport {
        n,
        k,
        top_dimension: betti.get(top_degree as isize),
        betti,
        top_degree,
        expected_top_dimension,
        descent_set,
        vanishing_above,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::type_a_subset_model;

    #[test]
    fn validation() {
        let all: Vec<Vec<u32>> = (1u32..8).map(elements).collect();
        assert!(validate_building_set(3, &all).unwrap().is_connected());
        let bad = vec![vec![0], vec![1], vec![0, 1], vec![1, 2]];
        assert_eq!(
            validate_building_set(3, &bad),
            Err(Error::MissingSingleton(2))
        );
        let not_closed = vec![vec![0], vec![1], vec![2], vec![0, 1], vec![1, 2]];
        assert!(matches!(
            validate_building_set(3, &not_closed),
            Err(Error::NotUnionClosed(..))
        ));
        for (n, k) in [(3, 1), (3, 2), (5, 2), (5, 5)] {
            let b = BuildingSet::family_b(n, k).unwrap();
            assert_eq!(
                validate_building_set(n + 1, &b.to_file().members).unwrap(),
                b
            );
        }
        let disconnected = validate_building_set(2, &[vec![0], vec![1]]).unwrap();
        assert_eq!(nested_set_complex(&disconnected), Err(Error::NotConnected));
    }

    #[test]
    fn complete_building_set_gives_type_a() {
        for n in 1..=4 {
            let nsc = nested_set_complex(&BuildingSet::family_b(n, 1).unwrap()).unwrap();
            let model = type_a_subset_model(n).unwrap();
            assert_eq!(nsc.vertices, model.vertices);
            assert_eq!(nsc.complex, model.complex);
        }
        let hex = nested_set_complex(&BuildingSet::complete(3).unwrap()).unwrap();
        assert_eq!(hex.complex.facets().len(), 6);
        assert_eq!(hex.complex.n_vertices(), 6);
    }

    #[test]
    fn singletons_plus_ground() {
        // faces: any set of singletons whose union is not a member
        let b = validate_building_set(3, &[vec![0], vec![1], vec![2], vec![0, 1, 2]]).unwrap();
        let nsc = nested_set_complex(&b).unwrap();
        assert_eq!(nsc.complex.facets(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn faces_satisfy_the_axioms() {
        for (n, k) in [(3, 2), (4, 2), (5, 3)] {
            let b = BuildingSet::family_b(n, k).unwrap();
            let nsc = nested_set_complex(&b).unwrap();
            for f in nsc.complex.facets() {
                let masks: Vec<u32> = f.iter().map(|&v| nsc.vertices[v as usize]).collect();
                assert!(is_nested(&b, &masks));
                assert_eq!(
                    f.len(),
                    n,
                    "nested set complexes are pure of dimension n - 1"
                );
            }
        }
    }

    #[test]
    fn lambda_columns() {
        let b = BuildingSet::family_b(3, 1).unwrap();
        let nsc = nested_set_complex(&b).unwrap();
        let lambda = lambda_of_building_set(&b, &nsc);
        let col = |mask: u32| lambda.column(nsc.vertices.iter().position(|&m| m == mask).unwrap());
        assert_eq!(col(0b1000).to_string(), "111");
        assert_eq!(col(0b0010).to_string(), "010");
        assert_eq!(col(0b1001).to_string(), "011");
    }

    #[test]
    fn symmetric_group_acts() {
        for (n, k) in [(3, 1), (5, 2), (4, 3)] {
            let b = BuildingSet::family_b(n, k).unwrap();
            assert!(symmetric_equivariance(&b, &adjacent_transpositions(n + 1)).unwrap());
            assert!(symmetric_equivariance(&b, &[]).unwrap());
        }
    }

    #[test]
    fn small_top_homology() {
        let r = top_homology_check(3, 1).unwrap();
        assert_eq!(r.top_degree, 2);
        assert_eq!(r.top_dimension, 5);
        assert!(r.holds());
        assert!(top_homology_check(4, 1).is_err());
    }
}
