//! Order complexes of rank-selected Boolean lattices and of the odd-rank
//! faces of cross-polytopes, plus the subset model of the type A Coxeter
//! complex.
//!
//! Subsets of a ground set are bitmasks over positions in the ground list.
//! Signed subsets are pairs of disjoint bitmasks `(positive, negative)`.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Largest ground set the bitmask encodings accept.
pub const MAX_GROUND: usize = 20;

/// Chains in the Boolean lattice on `ground` restricted to `ranks`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankSelectedBooleanComplex {
    pub ground: Vec<u32>,
    pub ranks: Vec<usize>,
    /// Vertex `v` is the subset `vertices[v]` (bits index into `ground`),
    /// sorted by size and then lexicographically.
    pub vertices: Vec<u32>,
    pub complex: SimplicialComplex,
}

impl RankSelectedBooleanComplex {
    /// Vertex labels as subsets of the ground set.
    pub fn vertex_sets(&self) -> Vec<Vec<u32>> {
        self.vertices
            .iter()
            .map(|&m| mask_elements(m, &self.ground))
            .collect()
    }
}

/// Odd-size signed subsets of `±ground`, ordered by inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossPolytopeOddComplex {
    pub ground: Vec<u32>,
    /// `(positive, negative)` bitmasks over positions in `ground`.
    pub vertices: Vec<(u32, u32)>,
    pub complex: SimplicialComplex,
}

fn mask_elements(mask: u32, ground: &[u32]) -> Vec<u32> {
    (0..ground.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| ground[i])
        .collect()
}

/// Sort key: size first, then the ascending list of positions.
fn subset_key(mask: u32) -> (u32, Vec<u32>) {
    (
        mask.count_ones(),
        (0..32).filter(|&i| mask >> i & 1 == 1).collect(),
    )
}

fn check_ground(ground: &[u32]) -> Result<()> {
    if ground.len() > MAX_GROUND {
        return Err(Error::InvalidInput(format!(
            "ground set of size {} exceeds {MAX_GROUND}",
            ground.len()
        )));
    }
    let mut sorted = ground.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != ground.len() {
        return Err(Error::InvalidInput(
            "ground set has repeated elements".into(),
        ));
    }
    Ok(())
}

/// Order complex of the subsets of `ground` whose sizes lie in `ranks`.
pub fn boolean_rank_selected(
    ground: &[u32],
    ranks: &[usize],
) -> Result<RankSelectedBooleanComplex> {
    check_ground(ground)?;
    let m = ground.len();
    let mut ranks = ranks.to_vec();
    ranks.sort_unstable();
    ranks.dedup();
    if ranks.is_empty() || ranks[0] == 0 || *ranks.last().unwrap() > m {
        return Err(Error::Precondition(format!(
            "ranks {ranks:?} must be a nonempty subset of 1..={m}"
        )));
    }
    let mut vertices: Vec<u32> = (0u32..1 << m)
        .filter(|s| ranks.binary_search(&(s.count_ones() as usize)).is_ok())
        .collect();
    vertices.sort_by_key(|&s| subset_key(s));
    let facets = maximal_chains(&vertices, u32::count_ones, |a, b| a & !b == 0);
    let complex = SimplicialComplex::new(vertices.len(), facets)?;
    Ok(RankSelectedBooleanComplex {
        ground: ground.to_vec(),
        ranks,
        vertices,
        complex,
    })
}

/// Maximal chains of a graded family sorted by rank, under the order `le`.
fn maximal_chains<T: Copy>(
    vertices: &[T],
    rank: impl Fn(T) -> u32,
    le: impl Fn(T, T) -> bool,
) -> Vec<Vec<u32>> {
    let n = vertices.len();
    // successors: comparable elements of the next occupied rank above
    let covers: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let above: Vec<usize> = (i + 1..n)
                .filter(|&j| rank(vertices[j]) > rank(vertices[i]) && le(vertices[i], vertices[j]))
                .collect();
            let Some(next) = above.iter().map(|&j| rank(vertices[j])).min() else {
                return Vec::new();
            };
            above
                .into_iter()
                .filter(|&j| rank(vertices[j]) == next)
                .map(|j| j as u32)
                .collect()
        })
        .collect();
    let min_rank = vertices.iter().map(|&v| rank(v)).min();
    let mut facets = Vec::new();
    let mut chain = Vec::new();
    fn extend(v: u32, covers: &[Vec<u32>], chain: &mut Vec<u32>, facets: &mut Vec<Vec<u32>>) {
        chain.push(v);
        if covers[v as usize].is_empty() {
            facets.push(chain.clone());
        }
        for &w in &covers[v as usize] {
            extend(w, covers, chain, facets);
        }
        chain.pop();
    }
    for (start, &v) in vertices.iter().enumerate() {
        if Some(rank(v)) == min_rank {
            extend(start as u32, &covers, &mut chain, &mut facets);
        }
    }
    facets
}

/// Order complex of the odd-size signed subsets `J ⊆ ±ground` with
/// `J ∩ −J = ∅`.
pub fn cross_polytope_odd(ground: &[u32]) -> Result<CrossPolytopeOddComplex> {
    check_ground(ground)?;
    let m = ground.len();
    if m == 0 {
        return Err(Error::Precondition("ground set must be nonempty".into()));
    }
    let mut vertices = Vec::new();
    for support in 0u32..1 << m {
        if support.count_ones() % 2 == 0 {
            continue;
        }
        // every sign pattern on the support
        let mut neg = 0u32;
        loop {
            vertices.push((support & !neg, neg));
            if neg == support {
                break;
            }
            neg = (neg.wrapping_sub(support)) & support;
        }
    }
    vertices.sort_by_key(|&(p, q)| {
        (
            p.count_ones() + q.count_ones(),
            subset_key(p | q).1,
            subset_key(q).1,
        )
    });
    let facets = maximal_chains(
        &vertices,
        |(p, q)| (p | q).count_ones(),
        |(p, q), (p2, q2)| p & !p2 == 0 && q & !q2 == 0,
    );
    let complex = SimplicialComplex::new(vertices.len(), facets)?;
    Ok(CrossPolytopeOddComplex {
        ground: ground.to_vec(),
        vertices,
        complex,
    })
}

/// The subset model of the type A_n Coxeter complex: vertices are the
/// proper nonempty subsets of `{0, .., n}` (size, then lexicographic) and
/// facets are the complete flags `{w(0)} ⊂ {w(0), w(1)} ⊂ ..`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetModel {
    pub n: usize,
    pub vertices: Vec<u32>,
    pub complex: SimplicialComplex,
}

pub fn type_a_subset_model(n: usize) -> Result<SubsetModel> {
    if n == 0 || n + 1 > MAX_GROUND {
        return Err(Error::InvalidInput(format!(
            "subset model needs 1 <= n < {MAX_GROUND}"
        )));
    }
    let ground: Vec<u32> = (0..=n as u32).collect();
    let b = boolean_rank_selected(&ground, &(1..=n).collect::<Vec<_>>())?;
    Ok(SubsetModel {
        n,
        vertices: b.vertices,
        complex: b.complex,
    })
}

impl SubsetModel {
    pub fn vertex_of(&self, subset: u32) -> Option<u32> {
        let key = subset_key(subset);
        self.vertices
            .binary_search_by(|&v| subset_key(v).cmp(&key))
            .ok()
            .map(|i| i as u32)
    }

    /// `K_S` for `I`: the full subcomplex on subsets `J` with `|J ∩ I|` odd.
    pub fn odd_intersection_subcomplex(&self, i_mask: u32) -> SimplicialComplex {
        let keep: Vec<u32> = (0..self.vertices.len() as u32)
            .filter(|&v| (self.vertices[v as usize] & i_mask).count_ones() % 2 == 1)
            .collect();
        self.complex.full_subcomplex(&keep).complex
    }
}

/// `K_S` inside the subset model of `K_{A_n}` for an even subset `I` of
/// `{0, .., n}` given as a bitmask.
pub fn type_a_ks_model(n: usize, i_mask: u32) -> Result<SimplicialComplex> {
    let size = i_mask.count_ones();
    if size < 2 || size % 2 == 1 || i_mask >> (n + 1) != 0 {
        return Err(Error::Precondition(format!(
            "I = {i_mask:#b} must be an even nonempty subset of 0..={n}"
        )));
    }
    Ok(type_a_subset_model(n)?.odd_intersection_subcomplex(i_mask))
}

/// The subset `{p : x_p maximal}` of `{0, .., n}` attached to a type A
/// co-weight with coordinates `d`, where `x_p = Σ_{j >= p} d_j`.
pub fn coweight_to_subset(d: &[i64]) -> u32 {
    let n = d.len();
    let x: Vec<i64> = (0..=n).map(|p| d[p..].iter().sum()).collect();
    let max = *x.iter().max().unwrap();
    (0..=n)
        .filter(|&p| x[p] == max)
        .fold(0u32, |m, p| m | 1 << p)
}
