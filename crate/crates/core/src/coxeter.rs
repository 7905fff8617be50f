//! Root systems, Weyl groups on co-weight coordinates, and Coxeter complexes.
//!
//! Simple roots are numbered as in Bourbaki. The Cartan integers are
//! `c_ij = ⟨α_i^∨, α_j⟩ = 2(α_i, α_j)/(α_i, α_i)` and the simple reflection
//! `s_i` acts on co-weight coordinates by `d_j ↦ d_j − d_i c_ij`.
//!
//! The Coxeter complex has one vertex per ray in the Weyl orbits of the
//! fundamental co-weights `ω_1, .., ω_n` (vertices `0..n`), and one facet
//! `{wω_1, .., wω_n}` per group element `w`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};

use crate::complex::{FVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::group::{VertexGroup, DEFAULT_GROUP_ORDER_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A finite crystallographic root system of irreducible type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootSystem {
    kind: CartanType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
}

/// Twice the inner products of the simple roots, short roots of squared
/// length 2.
fn gram_matrix(kind: CartanType, n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; n]; n];
    fn bond(g: &mut [Vec<i64>], i: usize, j: usize, v: i64) {
        g[i][j] = v;
        g[j][i] = v;
    }
    match kind {
        CartanType::A => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = 2;
            }
            for i in 1..n {
                bond(&mut g, i - 1, i, -1);
            }
        }
        CartanType::B => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = if i + 1 < n { 4 } else { 2 };
            }
            for i in 1..n {
                bond(&mut g, i - 1, i, -2);
            }
        }
        CartanType::C => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = if i + 1 < n { 2 } else { 4 };
            }
            for i in 1..n {
                bond(&mut g, i - 1, i, if i + 1 == n { -2 } else { -1 });
            }
        }
        CartanType::D => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = 2;
            }
            for i in 1..n - 1 {
                bond(&mut g, i - 1, i, -1);
            }
            bond(&mut g, n - 3, n - 1, -1);
        }
        CartanType::E => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = 2;
            }
            bond(&mut g, 0, 2, -1);
            bond(&mut g, 1, 3, -1);
            for i in 3..n {
                bond(&mut g, i - 1, i, -1);
            }
        }
        CartanType::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            bond(&mut g, 0, 1, -2);
            bond(&mut g, 1, 2, -2);
            bond(&mut g, 2, 3, -1);
        }
        CartanType::G => {
            g[0][0] = 2;
            g[1][1] = 6;
            bond(&mut g, 0, 1, -3);
        }
    }
    g
}

fn valid_rank(kind: CartanType, n: usize) -> bool {
    match kind {
        CartanType::A => n >= 1,
        CartanType::B | CartanType::C => n >= 2,
        CartanType::D => n >= 4,
        CartanType::E => (6..=8).contains(&n),
        CartanType::F => n == 4,
        CartanType::G => n == 2,
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Order of the Weyl group of the given irreducible type.
pub fn weyl_group_order(kind: CartanType, n: usize) -> u128 {
    match kind {
        CartanType::A => factorial(n + 1),
        CartanType::B | CartanType::C => (1u128 << n) * factorial(n),
        CartanType::D => (1u128 << (n - 1)) * factorial(n),
        CartanType::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        CartanType::F => 1152,
        CartanType::G => 12,
    }
}

impl RootSystem {
    pub fn new(kind: CartanType, rank: usize) -> Result<Self> {
        if !valid_rank(kind, rank) {
            return Err(Error::InvalidInput(format!(
                "no root system of type {kind:?}{rank}"
            )));
        }
        let g = gram_matrix(kind, rank);
        let cartan = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * g[i][j] / g[i][i]).collect())
            .collect();
        Ok(Self { kind, rank, cartan })
    }

    /// Accepts a Cartan matrix only if it is the built-in one for `kind`.
    pub fn from_cartan(kind: CartanType, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let rs = Self::new(kind, cartan.len())?;
        if rs.cartan != cartan {
            return Err(Error::InvalidInput(format!(
                "matrix is not the Cartan matrix of {rs}"
            )));
        }
        Ok(rs)
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn weyl_order(&self) -> u128 {
        weyl_group_order(self.kind, self.rank)
    }

    /// Applies `s_i` (0-indexed) to co-weight coordinates.
    pub fn reflect(&self, i: usize, coords: &[i64]) -> Vec<i64> {
        let di = coords[i];
        coords
            .iter()
            .zip(&self.cartan[i])
            .map(|(&d, &c)| d - di * c)
            .collect()
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

impl FromStr for RootSystem {
    type Err = Error;

    /// Parses labels such as `E6`, `B3`, `a2` or `G_2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => CartanType::A,
            Some('B') => CartanType::B,
            Some('C') => CartanType::C,
            Some('D') => CartanType::D,
            Some('E') => CartanType::E,
            Some('F') => CartanType::F,
            Some('G') => CartanType::G,
            _ => return Err(Error::Parse(format!("unknown root system {s:?}"))),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in root system {s:?}")))?;
        RootSystem::new(kind, rank)
    }
}

/// Limits for [`build_coxeter_complex_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Largest Weyl group order whose chambers will be enumerated.
    pub max_group_order: u128,
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self {
            max_group_order: DEFAULT_GROUP_ORDER_LIMIT,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterComplex {
    pub root_system: RootSystem,
    pub complex: SimplicialComplex,
    /// Co-weight coordinates of each vertex.
    pub ray_coords: Vec<Vec<i64>>,
    /// Vertices of `ω_1, .., ω_n`, always `0..n`.
    pub fundamental_vertices: Vec<u32>,
    /// For each vertex, the index `i` of the orbit `W·ω_i` containing it.
    pub ray_type: Vec<usize>,
}

pub fn build_coxeter_complex(rs: &RootSystem) -> Result<CoxeterComplex> {
    build_coxeter_complex_with(rs, BuildOptions::default())
}

/// Enumerates rays by breadth-first closure (each new layer sorted by
/// coordinates) and then chambers by closure over the simple reflections.
pub fn build_coxeter_complex_with(
    rs: &RootSystem,
    options: BuildOptions,
) -> Result<CoxeterComplex> {
    let order = rs.weyl_order();
    if order > options.max_group_order {
        return Err(Error::GroupTooLarge {
            order,
            limit: options.max_group_order,
        });
    }
    let n = rs.rank;
    let (ray_coords, ray_type, index) = ray_orbits(rs);
    let perms = reflection_permutations(rs, &ray_coords, &index)?;

    let start: Vec<u32> = (0..n as u32).collect();
    let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    let mut facets = Vec::with_capacity(order as usize);
    while let Some(chamber) = queue.pop_front() {
        for p in &perms {
            let next: Vec<u32> = chamber.iter().map(|&v| p[v as usize]).collect();
            if !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
        let mut facet = chamber;
        facet.sort_unstable();
        facets.push(facet);
    }
    debug_assert_eq!(facets.len() as u128, order);
    let complex = SimplicialComplex::new(ray_coords.len(), facets)?;
    Ok(CoxeterComplex {
        root_system: rs.clone(),
        complex,
        ray_coords,
        fundamental_vertices: (0..n as u32).collect(),
        ray_type,
    })
}

type RayIndex = FxHashMap<Vec<i64>, u32>;

fn ray_orbits(rs: &RootSystem) -> (Vec<Vec<i64>>, Vec<usize>, RayIndex) {
    let n = rs.rank;
    let mut coords: Vec<Vec<i64>> = Vec::new();
    let mut types: Vec<usize> = Vec::new();
    let mut index = RayIndex::default();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        index.insert(e.clone(), i as u32);
        coords.push(e);
        types.push(i);
    }
    let mut layer: Vec<u32> = (0..n as u32).collect();
    while !layer.is_empty() {
        let mut fresh: Vec<(Vec<i64>, usize)> = Vec::new();
        let mut fresh_set: FxHashSet<Vec<i64>> = FxHashSet::default();
        for &v in &layer {
            for i in 0..n {
                let image = rs.reflect(i, &coords[v as usize]);
                if !index.contains_key(&image) && fresh_set.insert(image.clone()) {
                    fresh.push((image, types[v as usize]));
                }
            }
        }
        fresh.sort();
        layer.clear();
        for (c, t) in fresh {
            let id = coords.len() as u32;
            index.insert(c.clone(), id);
            coords.push(c);
            types.push(t);
            layer.push(id);
        }
    }
    (coords, types, index)
}

fn reflection_permutations(
    rs: &RootSystem,
    coords: &[Vec<i64>],
    index: &RayIndex,
) -> Result<Vec<Vec<u32>>> {
    (0..rs.rank)
        .map(|i| {
            coords
                .iter()
                .map(|c| {
                    let image = rs.reflect(i, c);
                    index
                        .get(&image)
                        .copied()
                        .ok_or(Error::VertexNotFound { coords: image })
                })
                .collect()
        })
        .collect()
}

/// Columns are the ray coordinates reduced mod 2.
pub fn lambda_matrix(cx: &CoxeterComplex) -> Gf2Matrix {
    let n = cx.root_system.rank;
    let columns: Vec<Gf2Vector> = cx
        .ray_coords
        .iter()
        .map(|c| Gf2Vector::from_support(n, (0..n).filter(|&j| c[j].rem_euclid(2) == 1)))
        .collect();
    Gf2Matrix::from_columns(n, &columns).expect("ray coordinates have the rank as length")
}

/// The matrix `A` with `s_i · Λ = A Λ`: row `j` becomes row `j` plus
/// `c_ij` times row `i`, mod 2.
pub fn simple_reflection_row_action(rs: &RootSystem, i: usize) -> Result<Gf2Matrix> {
    let n = rs.rank;
    if i >= n {
        return Err(Error::InvalidInput(format!(
            "simple reflection {i} out of range for rank {n}"
        )));
    }
    let mut a = Gf2Matrix::identity(n);
    for j in 0..n {
        if j != i && rs.cartan[i][j].rem_euclid(2) == 1 {
            a.set(j, i, true);
        }
    }
    Ok(a)
}

/// The simple reflections as vertex permutations, matched on exact
/// coordinates.
pub fn weyl_vertex_action(cx: &CoxeterComplex) -> Result<VertexGroup> {
    let index: RayIndex = cx
        .ray_coords
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), i as u32))
        .collect();
    let perms = reflection_permutations(&cx.root_system, &cx.ray_coords, &index)?;
    VertexGroup::new(cx.ray_coords.len(), perms)
}

/// An orbit of the Weyl group on coefficient vectors, where `x` stands for
/// the row combination `Σ x_j Λ^j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientOrbit {
    /// 0-indexed rows of a member with the fewest rows, lexicographically
    /// first among those.
    pub representative_rows: Vec<usize>,
    pub size: usize,
}

/// Orbits of the Weyl group on the nonzero vectors of `Row Λ`, computed on
/// coefficient vectors through the row action alone, so the complex is
/// never built. Sorted by size descending, then representative.
pub fn coefficient_orbits(rs: &RootSystem) -> Result<Vec<CoefficientOrbit>> {
    let n = rs.rank;
    if n > 24 {
        return Err(Error::RankTooLarge { rank: n, limit: 24 });
    }
    // x ↦ x A_i changes only coordinate i: x_i += Σ_{j≠i} c_ij x_j
    let masks: Vec<u32> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && rs.cartan[i][j].rem_euclid(2) == 1)
                .fold(0u32, |m, j| m | 1 << j)
        })
        .collect();
    let act = |x: u32, i: usize| -> u32 {
        if (x & masks[i]).count_ones() % 2 == 1 {
            x ^ (1 << i)
        } else {
            x
        }
    };
    let total = 1usize << n;
    let mut visited = vec![false; total];
    let mut orbits = Vec::new();
    for start in 1..total as u32 {
        if visited[start as usize] {
            continue;
        }
        visited[start as usize] = true;
        let mut members = vec![start];
        let mut k = 0;
        while k < members.len() {
            for i in 0..n {
                let y = act(members[k], i);
                if !visited[y as usize] {
                    visited[y as usize] = true;
                    members.push(y);
                }
            }
            k += 1;
        }
        let rows_of = |x: u32| -> Vec<usize> { (0..n).filter(|&j| x >> j & 1 == 1).collect() };
        let representative_rows = members
            .iter()
            .map(|&x| rows_of(x))
            .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
            .unwrap();
        orbits.push(CoefficientOrbit {
            representative_rows,
            size: members.len(),
        });
    }
    orbits.sort_by(|a, b| {
        b.size
            .cmp(&a.size)
            .then_with(|| a.representative_rows.cmp(&b.representative_rows))
    });
    Ok(orbits)
}

/// Order of the parabolic subgroup generated by the simple reflections in
/// `nodes`, from the Dynkin types of its connected components.
pub fn parabolic_order(rs: &RootSystem, nodes: &[usize]) -> u128 {
    let mut seen = vec![false; rs.rank];
    let in_set: Vec<bool> = (0..rs.rank).map(|i| nodes.contains(&i)).collect();
    let mut order = 1u128;
    for &start in nodes {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for u in 0..rs.rank {
                if in_set[u] && !seen[u] && rs.cartan[v][u] != 0 {
                    seen[u] = true;
                    comp.push(u);
                }
            }
            k += 1;
        }
        let (kind, m) = classify_component(rs, &comp);
        order *= weyl_group_order(kind, m);
    }
    order
}

fn classify_component(rs: &RootSystem, comp: &[usize]) -> (CartanType, usize) {
    let m = comp.len();
    let c = &rs.cartan;
    let mut degree = vec![0usize; m];
    let mut max_bond = 1;
    let mut multi_bond_ends = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let (i, j) = (comp[a], comp[b]);
            let bond = c[i][j] * c[j][i];
            if bond != 0 {
                degree[a] += 1;
                degree[b] += 1;
                if bond > 1 {
                    multi_bond_ends.push((a, b));
                }
                max_bond = max_bond.max(bond);
            }
        }
    }
    if max_bond == 3 {
        return (CartanType::G, 2);
    }
    if max_bond == 2 {
        let (a, b) = multi_bond_ends[0];
        if m == 4 && degree[a] == 2 && degree[b] == 2 {
            return (CartanType::F, 4);
        }
        return (CartanType::B, m);
    }
    let Some(branch) = (0..m).find(|&a| degree[a] == 3) else {
        return (CartanType::A, m);
    };
    // arm lengths from the branch node
    let mut arms = Vec::new();
    for first in 0..m {
        if first == branch || c[comp[branch]][comp[first]] == 0 {
            continue;
        }
        let (mut prev, mut cur, mut len) = (branch, first, 1);
        loop {
            let next = (0..m).find(|&x| x != prev && x != cur && c[comp[cur]][comp[x]] != 0);
            match next {
                Some(x) => {
                    prev = cur;
                    cur = x;
                    len += 1;
                }
                None => break,
            }
        }
        arms.push(len);
    }
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => (CartanType::D, m),
        [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => (CartanType::E, m),
        _ => unreachable!("not a finite Dynkin diagram"),
    }
}

/// f-vector of the Coxeter complex from parabolic indices:
/// `f_{k-1} = Σ_{|L| = k} |W| / |W_{Δ∖L}|`.
pub fn f_vector_by_parabolic_indices(rs: &RootSystem) -> FVector {
    let n = rs.rank;
    let order = rs.weyl_order();
    let mut counts = vec![0u64; n + 1];
    for mask in 0u32..(1 << n) {
        let complement: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 0).collect();
        let index = order / parabolic_order(rs, &complement);
        counts[mask.count_ones() as usize] +=
            u64::try_from(index).expect("face count fits in 64 bits");
    }
    debug_assert_eq!(counts[n] as u128, order);
    FVector { counts }
}

/// h-vector from [`f_vector_by_parabolic_indices`].
pub fn h_vector_by_parabolic_indices(rs: &RootSystem) -> Vec<i128> {
    f_vector_by_parabolic_indices(rs).h_vector()
}

/// Number of vertices, `Σ_i |W| / |W_{Δ∖{i}}|`.
pub fn vertex_count(rs: &RootSystem) -> u128 {
    let n = rs.rank;
    (0..n)
        .map(|i| {
            rs.weyl_order() / parabolic_order(rs, &(0..n).filter(|&j| j != i).collect::<Vec<_>>())
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{check_equivariance, orbit_decomposition, RealToricSpace};

    fn rs(s: &str) -> RootSystem {
        s.parse().unwrap()
    }

    #[test]
    fn parses_labels() {
        assert_eq!(rs("E6").to_string(), "E6");
        assert_eq!(rs("g_2").to_string(), "G2");
        assert!("E9".parse::<RootSystem>().is_err());
        assert!("D3".parse::<RootSystem>().is_err());
        assert!("X2".parse::<RootSystem>().is_err());
    }

    #[test]
    fn cartan_matrices() {
        assert_eq!(rs("G2").cartan(), &[vec![2, -3], vec![-1, 2]]);
        assert_eq!(rs("B2").cartan(), &[vec![2, -1], vec![-2, 2]]);
        assert_eq!(rs("C2").cartan(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(rs("F4").cartan()[1], vec![-1, 2, -1, 0]);
        assert_eq!(rs("F4").cartan()[2], vec![0, -2, 2, -1]);
        for label in [
            "A1", "A5", "B4", "C3", "D4", "D6", "E6", "E7", "E8", "F4", "G2",
        ] {
            let r = rs(label);
            for i in 0..r.rank() {
                assert_eq!(r.cartan()[i][i], 2);
                for j in 0..r.rank() {
                    assert!(i == j || r.cartan()[i][j] <= 0);
                    assert_eq!(r.cartan()[i][j] == 0, r.cartan()[j][i] == 0);
                }
            }
            assert!(RootSystem::from_cartan(r.kind(), r.cartan().to_vec()).is_ok());
        }
        let mut bad = rs("B3").cartan().to_vec();
        bad[0][1] = -2;
        assert!(RootSystem::from_cartan(CartanType::B, bad).is_err());
    }

    #[test]
    fn a1_lambda() {
        let cx = build_coxeter_complex(&rs("A1")).unwrap();
        assert_eq!(cx.ray_coords, vec![vec![1], vec![-1]]);
        assert_eq!(lambda_matrix(&cx).to_string(), "11\n");
    }

    #[test]
    fn a2_is_a_hexagon() {
        let cx = build_coxeter_complex(&rs("A2")).unwrap();
        assert_eq!(cx.complex.n_vertices(), 6);
        assert_eq!(cx.complex.facets().len(), 6);
        let mut deg = [0; 6];
        for f in cx.complex.facets() {
            for &v in f {
                deg[v as usize] += 1;
            }
        }
        assert!(deg.iter().all(|&d| d == 2));
        let g = weyl_vertex_action(&cx).unwrap();
        assert_eq!(g.generators().len(), 2);
        for p in g.generators() {
            assert!((0..6).all(|v| p[p[v] as usize] == v as u32));
        }
    }

    #[test]
    fn g2_complex() {
        let cx = build_coxeter_complex(&rs("G2")).unwrap();
        assert_eq!(cx.complex.n_vertices(), 12);
        assert_eq!(cx.complex.facets().len(), 12);
        assert_eq!(cx.complex.h_vector(), vec![1, 10, 1]);
        let lambda = lambda_matrix(&cx);
        assert_eq!(lambda.rank(), 2);
        assert_eq!(lambda.n_cols(), 12);
        let g = weyl_vertex_action(&cx).unwrap();
        assert_eq!(g.order(100).unwrap(), 12);
    }

    #[test]
    fn first_columns_are_identity_and_all_nonzero() {
        for label in ["A3", "B3", "C3", "D4", "G2", "F4"] {
            let cx = build_coxeter_complex(&rs(label)).unwrap();
            let lambda = lambda_matrix(&cx);
            let n = cx.root_system.rank();
            for j in 0..lambda.n_cols() {
                let col = lambda.column(j);
                assert!(!col.is_zero(), "{label} column {j}");
                if j < n {
                    assert_eq!(col.support(), vec![j]);
                }
            }
        }
    }

    #[test]
    fn facets_are_colored_chambers() {
        for label in ["A3", "B3", "C4", "D4", "G2", "F4"] {
            let r = rs(label);
            let cx = build_coxeter_complex(&r).unwrap();
            assert_eq!(cx.complex.facets().len() as u128, r.weyl_order(), "{label}");
            assert_eq!(cx.complex.n_vertices() as u128, vertex_count(&r), "{label}");
            for f in cx.complex.facets() {
                let mut types: Vec<usize> = f.iter().map(|&v| cx.ray_type[v as usize]).collect();
                types.sort_unstable();
                assert_eq!(types, (0..r.rank()).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn row_action_matches_vertex_permutation() {
        for label in ["A1", "A4", "B3", "C3", "D5", "G2", "F4"] {
            let r = rs(label);
            let cx = build_coxeter_complex(&r).unwrap();
            let lambda = lambda_matrix(&cx);
            let g = weyl_vertex_action(&cx).unwrap();
            for (i, p) in g.generators().iter().enumerate() {
                let a = simple_reflection_row_action(&r, i).unwrap();
                assert_eq!(
                    lambda.permute_columns(p),
                    a.mul(&lambda).unwrap(),
                    "{label} s{i}"
                );
            }
            let x = RealToricSpace::new(cx.complex.clone(), lambda).unwrap();
            assert!(check_equivariance(&g, &x).unwrap().preserved);
        }
    }

    #[test]
    fn parabolic_f_vector_matches_enumeration() {
        for label in [
            "A1", "A3", "A4", "B2", "B3", "C3", "B4", "D4", "D5", "G2", "F4",
        ] {
            let r = rs(label);
            let cx = build_coxeter_complex(&r).unwrap();
            assert_eq!(
                f_vector_by_parabolic_indices(&r),
                cx.complex.f_vector(),
                "{label}"
            );
        }
    }

    #[test]
    fn parabolic_orders_of_subdiagrams() {
        let e8 = rs("E8");
        assert_eq!(parabolic_order(&e8, &[0, 1, 2, 3, 4, 5, 6]), 2_903_040);
        assert_eq!(
            parabolic_order(&e8, &[1, 2, 3, 4, 5, 6, 7]),
            weyl_group_order(CartanType::D, 7)
        );
        assert_eq!(parabolic_order(&e8, &[0, 2, 3, 4, 5, 6, 7]), factorial(8));
        assert_eq!(parabolic_order(&e8, &[]), 1);
        let f4 = rs("F4");
        assert_eq!(parabolic_order(&f4, &[0, 1, 2]), 48);
        assert_eq!(parabolic_order(&f4, &[1, 2]), 8);
        assert_eq!(parabolic_order(&f4, &[0, 3]), 4);
    }

    #[test]
    fn coefficient_orbits_match_vertex_orbits() {
        for label in ["G2", "F4", "B3", "A4"] {
            let r = rs(label);
            let cx = build_coxeter_complex(&r).unwrap();
            let g = weyl_vertex_action(&cx).unwrap();
            let vertex = orbit_decomposition(&g, &lambda_matrix(&cx)).unwrap();
            let coeff: Vec<usize> = coefficient_orbits(&r)
                .unwrap()
                .iter()
                .map(|o| o.size)
                .collect();
            assert_eq!(vertex.nonzero_sizes(), coeff, "{label}");
        }
    }

    #[test]
    fn build_guard() {
        let e8 = rs("E8");
        assert!(matches!(
            build_coxeter_complex(&e8),
            Err(Error::GroupTooLarge { .. })
        ));
        let tight = BuildOptions {
            max_group_order: 100,
        };
        assert!(matches!(
            build_coxeter_complex_with(&rs("F4"), tight),
            Err(Error::GroupTooLarge { .. })
        ));
    }

    #[test]
    fn row_action_of_identity_word() {
        // s_i twice is the identity
        let r = rs("F4");
        for i in 0..4 {
            let a = simple_reflection_row_action(&r, i).unwrap();
            assert_eq!(a.mul(&a).unwrap(), Gf2Matrix::identity(4));
        }
        assert!(simple_reflection_row_action(&r, 4).is_err());
    }
}
