//! Partitions, standard tableaux and the irreducible decompositions of the
//! homology of the type A and type B Weyl-chamber toric varieties.
//!
//! A descent of a standard tableau is an entry `i` such that `i + 1` sits in
//! a strictly lower row. Double tableaux number `1..n` across two tableaux
//! and have two further descent rules: `i` in the first tableau with `i + 1`
//! in the second, and `n` itself when it lies in the first tableau.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::complex::binomial;
use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    /// Trailing zeros are dropped; other zeros or increases are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("{parts:?} is not a partition")));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition(
            (1..=cols)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    /// Lexicographic on the parts.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of standard tableaux of shape `λ`, by the hook length formula.
pub fn hook_dimension(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let mut num: BigUint = BigUint::one();
    for k in 2..=lambda.size() {
        num *= k;
    }
    let mut den: BigUint = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            den *= row - j + conj.part(j as usize) - i as u32 - 1;
        }
    }
    (num / den)
        .to_u128()
        .expect("tableau count fits in 128 bits")
}

/// Rows where a box can be added to `shape`.
fn addable_rows(shape: &[u32]) -> impl Iterator<Item = usize> + '_ {
    (0..=shape.len()).filter(move |&r| r == 0 || shape.get(r).copied().unwrap_or(0) < shape[r - 1])
}

fn add_box(shape: &mut Vec<u32>, r: usize) {
    if r == shape.len() {
        shape.push(1);
    } else {
        shape[r] += 1;
    }
}

fn remove_box(shape: &mut Vec<u32>, r: usize) {
    shape[r] -= 1;
    if shape[r] == 0 {
        shape.pop();
    }
}

fn descent_mask(q: &[u32], n: u32) -> Result<u64> {
    if n >= 64 {
        return Err(Error::InvalidInput(format!(
            "{n} entries exceed the supported 63"
        )));
    }
    q.iter().try_fold(0u64, |m, &i| {
        if i == 0 || i > n {
            Err(Error::InvalidInput(format!("descent {i} outside 1..={n}")))
        } else {
            Ok(m | 1 << i)
        }
    })
}

/// `c_{Q,ν}`: standard tableaux of shape `ν` whose descent set is exactly `Q`.
pub fn count_descent_tableaux(nu: &Partition, q: &[u32]) -> Result<u128> {
    let n = nu.size();
    if n == 0 {
        return Ok(u128::from(q.is_empty()));
    }
    let target = descent_mask(q, n)?;
    if q.contains(&n) {
        // the last entry is never a descent
        return Ok(0);
    }
    let mut memo = FxHashMap::default();
    let mut shape = vec![1];
    Ok(count_fillings(
        nu.parts(),
        &mut shape,
        0,
        1,
        target,
        &mut memo,
    ))
}

/// Extends a standard filling of `shape` (entries `1..=placed`, entry
/// `placed` in row `last`) to the full shape `target_shape`.
fn count_fillings(
    target_shape: &[u32],
    shape: &mut Vec<u32>,
    last: usize,
    placed: u32,
    descents: u64,
    memo: &mut FxHashMap<(Vec<u32>, usize), u128>,
) -> u128 {
    if shape.as_slice() == target_shape {
        return 1;
    }
    if let Some(&c) = memo.get(&(shape.clone(), last)) {
        return c;
    }
    let want_descent = descents >> placed & 1 == 1;
    let rows: Vec<usize> = addable_rows(shape)
        .filter(|&r| shape.get(r).copied().unwrap_or(0) < target_shape.get(r).copied().unwrap_or(0))
        .collect();
    let mut total = 0;
    for r in rows {
        if (r > last) != want_descent {
            continue;
        }
        add_box(shape, r);
        total += count_fillings(target_shape, shape, r, placed + 1, descents, memo);
        remove_box(shape, r);
    }
    memo.insert((shape.clone(), last), total);
    total
}

/// A skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidInput(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Ok(Self { outer, inner })
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    fn cells(&self) -> Vec<(usize, u32)> {
        (0..self.outer.len())
            .flat_map(|r| (self.inner.part(r)..self.outer.part(r)).map(move |c| (r, c)))
            .collect()
    }

    /// Edge-connected with no 2×2 block of cells.
    pub fn is_skew_hook(&self) -> bool {
        let cells = self.cells();
        if cells.is_empty() {
            return false;
        }
        let has = |r: usize, c: u32| {
            r < self.outer.len() && self.inner.part(r) <= c && c < self.outer.part(r)
        };
        if cells
            .iter()
            .any(|&(r, c)| has(r + 1, c) && has(r, c + 1) && has(r + 1, c + 1))
        {
            return false;
        }
        // consecutive nonempty rows must overlap in exactly one column
        let rows: Vec<usize> = (0..self.outer.len())
            .filter(|&r| self.outer.part(r) > self.inner.part(r))
            .collect();
        rows.windows(2)
            .all(|w| w[1] == w[0] + 1 && self.inner.part(w[0]) + 1 == self.outer.part(w[1]))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// The skew hook with `k` boxes whose standard fillings, read from the
/// bottom-left end, have descent set `Q`: box `i + 1` sits above box `i`
/// when `i ∈ Q` and to its right otherwise.
pub fn skew_hook_from_descents(k: u32, q: &[u32]) -> Result<SkewShape> {
    if k == 0 {
        return Err(Error::InvalidInput(
            "a skew hook needs at least one box".into(),
        ));
    }
    let mask = descent_mask(q, k)?;
    if q.contains(&k) {
        return Err(Error::InvalidInput(format!("descent {k} outside 1..{k}")));
    }
    // walk from the bottom-left box; rows counted upward
    let mut cells = vec![(0u32, 0u32)];
    for i in 1..k {
        let (h, c) = *cells.last().unwrap();
        cells.push(if mask >> i & 1 == 1 {
            (h + 1, c)
        } else {
            (h, c + 1)
        });
    }
    let top = cells.last().unwrap().0;
    let n_rows = top as usize + 1;
    let mut outer = vec![0u32; n_rows];
    let mut inner = vec![u32::MAX; n_rows];
    for &(h, c) in &cells {
        let r = (top - h) as usize;
        outer[r] = outer[r].max(c + 1);
        inner[r] = inner[r].min(c);
    }
    SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)
}

/// Standard fillings of a skew hook.
pub fn skew_hook_dimension(shape: &SkewShape) -> Result<u128> {
    if !shape.is_skew_hook() {
        return Err(Error::NotASkewHook {
            outer: shape.outer.0.clone(),
            inner: shape.inner.0.clone(),
        });
    }
    Ok(skew_standard_count(shape))
}

/// Saturated chains from `inner` to `outer` in Young's lattice.
pub fn skew_standard_count(shape: &SkewShape) -> u128 {
    fn go(cur: &mut Vec<u32>, outer: &[u32], memo: &mut FxHashMap<Vec<u32>, u128>) -> u128 {
        if cur.as_slice() == outer {
            return 1;
        }
        if let Some(&c) = memo.get(cur.as_slice()) {
            return c;
        }
        let rows: Vec<usize> = addable_rows(cur)
            .filter(|&r| cur.get(r).copied().unwrap_or(0) < outer.get(r).copied().unwrap_or(0))
            .collect();
        let mut total = 0;
        for r in rows {
            add_box(cur, r);
            total += go(cur, outer, memo);
            remove_box(cur, r);
        }
        memo.insert(cur.clone(), total);
        total
    }
    go(
        &mut shape.inner.0.clone(),
        &shape.outer.0,
        &mut FxHashMap::default(),
    )
}

/// All `η ⊇ ν` with `η / ν` a horizontal strip of `boxes` boxes, in
/// decreasing lexicographic order.
pub fn pieri_add_horizontal_strip(nu: &Partition, boxes: u32) -> Vec<Partition> {
    // η_0 >= ν_0 free; ν_{i-1} >= η_i >= ν_i for i >= 1, including one new row
    fn go(nu: &Partition, i: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i > nu.len() {
            if rest == 0 {
                out.push(Partition::new(cur.clone()).expect("strip keeps the shape a partition"));
            }
            return;
        }
        let lo = nu.part(i);
        let hi = if i == 0 {
            lo + rest
        } else {
            nu.part(i - 1).min(lo + rest)
        };
        for v in (lo..=hi).rev() {
            cur.push(v);
            go(nu, i + 1, rest - (v - lo), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(nu, 0, boxes, &mut Vec::new(), &mut out);
    out
}

/// One irreducible summand with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand<L> {
    pub label: L,
    pub multiplicity: u64,
    /// Dimension of one copy of the irreducible.
    pub dimension: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition<L> {
    pub terms: Vec<Summand<L>>,
    pub total_dimension: u128,
}

impl<L> Decomposition<L> {
    fn from_terms(terms: Vec<Summand<L>>) -> Self {
        let total_dimension = terms
            .iter()
            .map(|t| t.multiplicity as u128 * t.dimension)
            .sum();
        Self {
            terms,
            total_dimension,
        }
    }
}

impl<L: fmt::Display> fmt::Display for Decomposition<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                if t.multiplicity == 1 {
                    format!("S^{}", t.label)
                } else {
                    format!("{}S^{}", t.multiplicity, t.label)
                }
            })
            .collect();
        write!(f, "{} (dim {})", parts.join(" ⊕ "), self.total_dimension)
    }
}

/// The odd numbers `1, 3, ..` up to `max`.
pub fn odd_descents(max: u32) -> Vec<u32> {
    (1..=max).step_by(2).collect()
}

/// `H_r` of the type A_n toric variety as a sum of symmetric group
/// irreducibles on `n + 1` letters, ordered by decreasing shape.
pub fn decompose_type_a(n: u32, r: u32) -> Result<Decomposition<Partition>> {
    if 2 * r > n + 1 {
        return Err(Error::Precondition(format!(
            "degree {r} out of range for n = {n}"
        )));
    }
    let q = if r == 0 {
        Vec::new()
    } else {
        odd_descents(2 * r - 1)
    };
    let mut mult: BTreeMap<Partition, u64> = BTreeMap::new();
    for nu in partitions(2 * r) {
        let c = count_descent_tableaux(&nu, &q)?;
        if c == 0 {
            continue;
        }
        for eta in pieri_add_horizontal_strip(&nu, n + 1 - 2 * r) {
            *mult.entry(eta).or_default() += c as u64;
        }
    }
    let terms = mult
        .into_iter()
        .rev()
        .map(|(label, multiplicity)| {
            let dimension = hook_dimension(&label);
            Summand {
                label,
                multiplicity,
                dimension,
            }
        })
        .collect();
    Ok(Decomposition::from_terms(terms))
}

/// A pair of partitions labelling an irreducible of the hyperoctahedral
/// group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DoublePartition {
    pub first: Partition,
    pub second: Partition,
}

impl DoublePartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Self { first, second }
    }

    pub fn size(&self) -> u32 {
        self.first.size() + self.second.size()
    }

    /// Decomposition order: smaller first part size first, then decreasing
    /// shapes.
    fn order_key(
        &self,
    ) -> (
        u32,
        std::cmp::Reverse<Partition>,
        std::cmp::Reverse<Partition>,
    ) {
        (
            self.first.size(),
            std::cmp::Reverse(self.first.clone()),
            std::cmp::Reverse(self.second.clone()),
        )
    }
}

impl fmt::Display for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// All double partitions of `n`.
pub fn double_partitions(n: u32) -> Vec<DoublePartition> {
    (0..=n)
        .flat_map(|k| {
            let firsts = partitions(k);
            let seconds = partitions(n - k);
            firsts.into_iter().flat_map(move |a| {
                seconds
                    .clone()
                    .into_iter()
                    .map(move |b| DoublePartition::new(a.clone(), b))
            })
        })
        .collect()
}

/// `dim S^{(λ,μ)} = C(n, |λ|) f^λ f^μ`.
pub fn dim_hyperoctahedral(lm: &DoublePartition) -> u128 {
    binomial(lm.size() as u64, lm.first.size() as u64)
        * hook_dimension(&lm.first)
        * hook_dimension(&lm.second)
}

/// Double standard tableaux of shape `(λ, μ)` with descent set exactly
/// `target` (a subset of `1..=n`).
pub fn double_tableaux_count(lm: &DoublePartition, target: &[u32]) -> Result<u128> {
    let n = lm.size();
    if n == 0 {
        return Ok(u128::from(target.is_empty()));
    }
    let mask = descent_mask(target, n)?;
    let mut memo = FxHashMap::default();
    let mut state = DoubleState {
        shapes: [Vec::new(), Vec::new()],
        last: (0, 0),
    };
    let targets = [lm.first.parts(), lm.second.parts()];
    let mut total = 0;
    // place entry 1
    for t in 0..2 {
        if targets[t].is_empty() {
            continue;
        }
        state.shapes[t].push(1);
        state.last = (t, 0);
        total += count_double(&targets, &mut state, 1, n, mask, &mut memo);
        state.shapes[t].pop();
    }
    Ok(total)
}

struct DoubleState {
    shapes: [Vec<u32>; 2],
    /// (tableau, row) of the last placed entry
    last: (usize, usize),
}

type DoubleMemo = FxHashMap<([Vec<u32>; 2], (usize, usize)), u128>;

fn count_double(
    targets: &[&[u32]; 2],
    st: &mut DoubleState,
    placed: u32,
    n: u32,
    mask: u64,
    memo: &mut DoubleMemo,
) -> u128 {
    if placed == n {
        let descent_n = st.last.0 == 0;
        return u128::from(descent_n == (mask >> n & 1 == 1));
    }
    let key = (st.shapes.clone(), st.last);
    if let Some(&c) = memo.get(&key) {
        return c;
    }
    let want = mask >> placed & 1 == 1;
    let (lt, lr) = st.last;
    let mut total = 0;
    for t in 0..2 {
        let rows: Vec<usize> = addable_rows(&st.shapes[t])
            .filter(|&r| {
                st.shapes[t].get(r).copied().unwrap_or(0) < targets[t].get(r).copied().unwrap_or(0)
            })
            .collect();
        for r in rows {
            let descent = if t == lt { r > lr } else { lt == 0 && t == 1 };
            if descent != want {
                continue;
            }
            add_box(&mut st.shapes[t], r);
            let saved = st.last;
            st.last = (t, r);
            total += count_double(targets, st, placed + 1, n, mask, memo);
            st.last = saved;
            remove_box(&mut st.shapes[t], r);
        }
    }
    memo.insert(key, total);
    total
}

/// `H_k` of the type B_n toric variety as a sum of hyperoctahedral
/// irreducibles.
pub fn decompose_type_b(n: u32, k: u32) -> Result<Decomposition<DoublePartition>> {
    let rs: Vec<u32> = if k == 0 {
        vec![0]
    } else {
        vec![2 * k - 1, 2 * k]
    };
    let mut mult: FxHashMap<DoublePartition, u64> = FxHashMap::default();
    for r in rs.into_iter().filter(|&r| r <= n) {
        let target = odd_descents(r);
        for lm in double_partitions(r) {
            let b = double_tableaux_count(&lm, &target)?;
            if b == 0 {
                continue;
            }
            for nu in pieri_add_horizontal_strip(&lm.second, n - r) {
                *mult
                    .entry(DoublePartition::new(lm.first.clone(), nu))
                    .or_default() += b as u64;
            }
        }
    }
    let mut terms: Vec<Summand<DoublePartition>> = mult
        .into_iter()
        .map(|(label, multiplicity)| {
            let dimension = dim_hyperoctahedral(&label);
            Summand {
                label,
                multiplicity,
                dimension,
            }
        })
        .collect();
    terms.sort_by_key(|t| t.label.order_key());
    Ok(Decomposition::from_terms(terms))
}

/// Alternating permutations of `1..=m` (descent set `{1, 3, 5, ..}`) for
/// every `m <= max`, by the boustrophedon recursion.
pub fn alternating_permutation_counts(max: usize) -> Vec<u128> {
    let mut out = vec![1u128];
    let mut row = vec![1u128];
    for _ in 1..=max {
        let mut next = vec![0u128];
        for &x in row.iter().rev() {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        out.push(*next.last().unwrap());
        row = next;
    }
    out
}
