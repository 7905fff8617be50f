//! Vertex-permutation groups acting on real toric spaces.
//!
//! A real toric space is a pair `(K, Λ)`: a simplicial complex on `m`
//! vertices and an `n × m` characteristic matrix over the two-element field.
//! Its rational Betti numbers split over the row space of `Λ`:
//! `β_k = Σ_{S ∈ Row Λ} β̃_{k-1}(K_S)`. When a group of automorphisms of `K`
//! preserves `Row Λ`, only one `K_S` per orbit has to be computed.

use std::collections::VecDeque;

use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::homology::{reduced_betti, BettiTable};

/// Default cap on the group order enumerated by [`VertexGroup::order`].
pub const DEFAULT_GROUP_ORDER_LIMIT: u128 = 3_000_000;

/// A permutation group on `0..degree`, given by generators.
///
/// Generator `g` sends vertex `i` to `g[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGroup", into = "RawGroup")]
pub struct VertexGroup {
    degree: usize,
    generators: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct RawGroup {
    degree: usize,
    generators: Vec<Vec<u32>>,
}

impl TryFrom<RawGroup> for VertexGroup {
    type Error = Error;

    fn try_from(raw: RawGroup) -> Result<Self> {
        VertexGroup::new(raw.degree, raw.generators)
    }
}

impl From<VertexGroup> for RawGroup {
    fn from(g: VertexGroup) -> Self {
        RawGroup {
            degree: g.degree,
            generators: g.generators,
        }
    }
}

impl VertexGroup {
    pub fn new(degree: usize, generators: Vec<Vec<u32>>) -> Result<Self> {
        for (gi, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return Err(Error::InvalidInput(format!(
                    "generator {gi} has length {} but degree is {degree}",
                    g.len()
                )));
            }
            let mut seen = vec![false; degree];
            for &x in g {
                if x as usize >= degree || std::mem::replace(&mut seen[x as usize], true) {
                    return Err(Error::InvalidInput(format!(
                        "generator {gi} is not a permutation of 0..{degree}"
                    )));
                }
            }
        }
        Ok(Self { degree, generators })
    }

    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            generators: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    /// Checks that every generator maps facets of `complex` to facets.
    pub fn check_automorphisms(&self, complex: &SimplicialComplex) -> Result<()> {
        if complex.n_vertices() != self.degree {
            return Err(Error::DimensionMismatch {
                expected: complex.n_vertices(),
                found: self.degree,
            });
        }
        let index = complex.facet_index();
        for (gi, g) in self.generators.iter().enumerate() {
            for f in complex.facets() {
                let mut image: Vec<u32> = f.iter().map(|&v| g[v as usize]).collect();
                image.sort_unstable();
                if !index.contains_key(image.as_slice()) {
                    return Err(Error::NotAnAutomorphism {
                        generator: gi,
                        facet: f.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Order of the generated group, by closure, refusing to go past `limit`.
    pub fn order(&self, limit: u128) -> Result<u128> {
        let identity: Vec<u32> = (0..self.degree as u32).collect();
        let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q: Vec<u32> = p.iter().map(|&x| g[x as usize]).collect();
                if seen.insert(q.clone()) {
                    if seen.len() as u128 > limit {
                        return Err(Error::GroupTooLarge {
                            order: seen.len() as u128,
                            limit,
                        });
                    }
                    queue.push_back(q);
                }
            }
        }
        Ok(seen.len() as u128)
    }

    /// The orbit of `v` under coordinate permutation, in discovery order.
    pub fn orbit_of(&self, v: &Gf2Vector) -> Vec<Gf2Vector> {
        let mut seen: FxHashSet<Gf2Vector> = FxHashSet::default();
        seen.insert(v.clone());
        let mut out = vec![v.clone()];
        let mut i = 0;
        while i < out.len() {
            for g in &self.generators {
                let w = out[i].permute(g);
                if seen.insert(w.clone()) {
                    out.push(w);
                }
            }
            i += 1;
        }
        out
    }
}

/// The real toric space `M(K, Λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealToricSpace {
    complex: SimplicialComplex,
    lambda: Gf2Matrix,
}

impl RealToricSpace {
    /// Pairs a complex with a characteristic matrix, checking that the
    /// columns over every facet are linearly independent.
    pub fn new(complex: SimplicialComplex, lambda: Gf2Matrix) -> Result<Self> {
        if lambda.n_cols() != complex.n_vertices() {
            return Err(Error::DimensionMismatch {
                expected: complex.n_vertices(),
                found: lambda.n_cols(),
            });
        }
        let cols: Vec<Gf2Vector> = (0..lambda.n_cols()).map(|j| lambda.column(j)).collect();
        for f in complex.facets() {
            let sub = Gf2Matrix::new(
                lambda.n_rows(),
                f.iter().map(|&v| cols[v as usize].clone()).collect(),
            )?;
            if sub.rank() != f.len() {
                return Err(Error::SingularCharacteristic { face: f.clone() });
            }
        }
        Ok(Self { complex, lambda })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn lambda(&self) -> &Gf2Matrix {
        &self.lambda
    }
}

/// Outcome of [`check_equivariance`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivariance {
    pub preserved: bool,
    /// First generator whose action changes the row space.
    pub violating_generator: Option<usize>,
    /// For each generator `g`, a matrix `A_g` with `g · Λ = A_g Λ`; empty
    /// unless `preserved`.
    pub transforms: Vec<Gf2Matrix>,
}

/// Decides whether every generator preserves `ker Λ`, equivalently `Row Λ`.
pub fn check_equivariance(group: &VertexGroup, space: &RealToricSpace) -> Result<Equivariance> {
    group.check_automorphisms(&space.complex)?;
    let lambda = &space.lambda;
    let reduction = lambda.row_reduce();
    let mut transforms = Vec::with_capacity(group.generators.len());
    for (gi, g) in group.generators.iter().enumerate() {
        let moved = lambda.permute_columns(g);
        let rows: Option<Vec<Gf2Vector>> =
            moved.rows().iter().map(|r| reduction.express(r)).collect();
        match rows {
            Some(rows) => transforms.push(Gf2Matrix::new(lambda.n_rows(), rows)?),
            None => {
                return Ok(Equivariance {
                    preserved: false,
                    violating_generator: Some(gi),
                    transforms: Vec::new(),
                })
            }
        }
    }
    Ok(Equivariance {
        preserved: true,
        violating_generator: None,
        transforms,
    })
}

/// One orbit of the group on `Row Λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Lexicographically smallest member.
    pub representative: Gf2Vector,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    /// The zero vector's singleton orbit first, then the nonzero orbits by
    /// representative.
    pub orbits: Vec<Orbit>,
    pub total: usize,
}

impl OrbitDecomposition {
    pub fn nonzero(&self) -> &[Orbit] {
        &self.orbits[1..]
    }

    /// Sizes of the nonzero orbits, descending.
    pub fn nonzero_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.nonzero().iter().map(|o| o.size).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }
}

/// Orbits of `group` on `Row Λ`, acting by permuting coordinates.
pub fn orbit_decomposition(group: &VertexGroup, lambda: &Gf2Matrix) -> Result<OrbitDecomposition> {
    if group.degree != lambda.n_cols() {
        return Err(Error::DimensionMismatch {
            expected: lambda.n_cols(),
            found: group.degree,
        });
    }
    let space = lambda.row_space()?;
    let index: FxHashMap<&Gf2Vector, usize> =
        space.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut visited = vec![false; space.len()];
    let mut orbits = Vec::new();
    for start in 0..space.len() {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            for g in &group.generators {
                let image = space[members[i]].permute(g);
                let Some(&j) = index.get(&image) else {
                    return Err(Error::Precondition(
                        "the group does not preserve the row space".into(),
                    ));
                };
                if !visited[j] {
                    visited[j] = true;
                    members.push(j);
                }
            }
            i += 1;
        }
        let representative = members
            .iter()
            .map(|&j| &space[j])
            .min()
            .expect("nonempty orbit")
            .clone();
        orbits.push(Orbit {
            representative,
            size: members.len(),
        });
    }
    // space[0] is the zero vector, so its orbit is already first
    orbits[1..].sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(OrbitDecomposition {
        orbits,
        total: space.len(),
    })
}

/// Rational Betti numbers of the real toric space, degrees `0..=dim K + 1`.
///
/// With a group, `K_S` is only computed for one representative per orbit
/// and weighted by the orbit size. Jobs run on the current rayon pool,
/// largest support first; the sum does not depend on scheduling.
pub fn toric_homology(space: &RealToricSpace, group: Option<&VertexGroup>) -> Result<BettiTable> {
    let mut jobs: Vec<(Gf2Vector, u64)> = match group {
        Some(g) => {
            if !check_equivariance(g, space)?.preserved {
                return Err(Error::Precondition(
                    "the group does not preserve ker Λ".into(),
                ));
            }
            orbit_decomposition(g, &space.lambda)?
                .orbits
                .into_iter()
                .map(|o| (o.representative, o.size as u64))
                .collect()
        }
        None => space
            .lambda
            .row_space()?
            .into_iter()
            .map(|s| (s, 1))
            .collect(),
    };
    jobs.sort_by_key(|(s, _)| std::cmp::Reverse(s.weight()));
    let pieces: Vec<(BettiTable, u64)> = jobs
        .par_iter()
        .map(|(s, mult)| {
            (
                reduced_betti(&space.complex.full_subcomplex_on(s).complex),
                *mult,
            )
        })
        .collect();
    let top = space.complex.dim() + 1;
    let mut values = vec![0u64; (top + 1).max(1) as usize];
    for (b, mult) in &pieces {
        for (deg, v) in b.iter() {
            values[(deg + 1) as usize] += v * mult;
        }
    }
    Ok(BettiTable::new(0, values))
}

/// Euler characteristic of the real toric space from its cube cell
/// structure: `Σ_i (-1)^i f_{i-1} 2^{n-i}` with `n` the number of rows of
/// `Λ`. For `n = dim K + 1` this is the alternating sum of the h-vector.
pub fn euler_characteristic(space: &RealToricSpace) -> i128 {
    let n = space.lambda.n_rows() as u32;
    let f = space.complex.f_vector();
    f.counts
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let term = c as i128 * (1i128 << (n - i as u32));
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}
