//! Hypertrees: membership, enumeration, tightness and valence transfers.
//!
//! Membership is decided two independent ways. [`is_hypertree_by_tree_search`]
//! looks for a realising spanning tree directly; it is the ground truth.
//! [`is_hypertree_by_polymatroid`] checks the sum condition and the bound
//! `Σ_{E'} f ≤ μ(E')` over every subset of `E`.

use std::borrow::Borrow;
use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::activity::EdgeOrder;
use crate::dsu::UnionFind;
use crate::error::{Error, Result, Values};
use crate::graph::{BipGraph, EdgeSubset, Vertex};
use crate::limits;

/// A value vector indexed by `E`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Hypertree(Vec<u32>);

impl Hypertree {
    /// Wraps a vector without checking membership.
    pub fn new(values: Vec<u32>) -> Self {
        Hypertree(values)
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, e: usize) -> u32 {
        self.0[e]
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    /// `f - χ_from + χ_to`, or `None` when `f(from) = 0`.
    pub fn transferred(&self, from: usize, to: usize) -> Option<Hypertree> {
        transfer(&self.0, from, to).map(Hypertree)
    }
}

fn transfer(f: &[u32], from: usize, to: usize) -> Option<Vec<u32>> {
    if f[from] == 0 {
        return None;
    }
    let mut g = f.to_vec();
    g[from] -= 1;
    g[to] += 1;
    Some(g)
}

impl Borrow<[u32]> for Hypertree {
    fn borrow(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for Hypertree {
    fn from(v: Vec<u32>) -> Self {
        Hypertree(v)
    }
}

impl fmt::Display for Hypertree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Values(self.0.clone()).fmt(f)
    }
}

/// A deduplicated, lexicographically sorted set of hypertrees with
/// constant-time membership.
#[derive(Clone, Debug, Default)]
pub struct HypertreeSet {
    members: Vec<Hypertree>,
    index: HashMap<Hypertree, usize>,
}

impl HypertreeSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, f: &[u32]) -> bool {
        self.index.contains_key(f)
    }

    pub fn position(&self, f: &[u32]) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Hypertree> {
        self.members.iter()
    }

    pub fn as_slice(&self) -> &[Hypertree] {
        &self.members
    }

    /// Width of the member vectors, i.e. `|E|`; zero for an empty set.
    pub fn width(&self) -> usize {
        self.members.first().map_or(0, Hypertree::len)
    }

    /// Copy of the set with one member removed (used to build corrupted
    /// fixtures).
    pub fn without(&self, f: &[u32]) -> HypertreeSet {
        self.iter().filter(|h| h.values() != f).cloned().collect()
    }

    /// Copy of the set with one extra vector inserted.
    pub fn with(&self, f: Hypertree) -> HypertreeSet {
        self.iter().cloned().chain(std::iter::once(f)).collect()
    }
}

impl FromIterator<Hypertree> for HypertreeSet {
    fn from_iter<I: IntoIterator<Item = Hypertree>>(iter: I) -> Self {
        let mut members: Vec<Hypertree> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        let index = members.iter().cloned().enumerate().map(|(i, h)| (h, i)).collect();
        HypertreeSet { members, index }
    }
}

impl PartialEq for HypertreeSet {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for HypertreeSet {}

impl<'a> IntoIterator for &'a HypertreeSet {
    type Item = &'a Hypertree;
    type IntoIter = std::slice::Iter<'a, Hypertree>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl Serialize for HypertreeSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(s)
    }
}

/// A spanning tree of a bipartite graph as a sorted list of `(v, e)` edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningTree {
    edges: Vec<(usize, usize)>,
}

impl SpanningTree {
    pub fn new(mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        SpanningTree { edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `d_τ(e) - 1` for every `e`; `None` if some `E`-vertex is missed.
    pub fn induced_values(&self, e_count: usize) -> Option<Vec<u32>> {
        let mut deg = vec![0u32; e_count];
        for &(_, e) in &self.edges {
            deg[e] += 1;
        }
        deg.into_iter().map(|d| d.checked_sub(1)).collect()
    }

    /// Checks that this is a spanning tree of `g` realising `f`.
    pub fn validate(&self, g: &BipGraph, f: &[u32]) -> Result<()> {
        if f.len() != g.e_count() {
            return Err(Error::LengthMismatch {
                expected: g.e_count(),
                actual: f.len(),
            });
        }
        if self.edges.len() + 1 != g.vertex_count() {
            return Err(Error::InvalidWitness(format!(
                "{} edges, a spanning tree needs {}",
                self.edges.len(),
                g.vertex_count() - 1
            )));
        }
        let nv = g.v_count();
        let mut uf = UnionFind::new(g.vertex_count());
        for &(v, e) in &self.edges {
            if !g.has_edge(v, e) {
                return Err(Error::InvalidWitness(format!("({v}, {e}) is not an edge")));
            }
            if !uf.union(v, nv + e) {
                return Err(Error::InvalidWitness("edge set contains a cycle".into()));
            }
        }
        if self.induced_values(g.e_count()).as_deref() != Some(f) {
            return Err(Error::InvalidWitness("degrees do not match the hypertree".into()));
        }
        Ok(())
    }
}

fn check_len(g: &BipGraph, f: &[u32]) -> Result<()> {
    if f.len() != g.e_count() {
        return Err(Error::LengthMismatch {
            expected: g.e_count(),
            actual: f.len(),
        });
    }
    Ok(())
}

/// In the box `0 ≤ f(e) ≤ d(e) - 1` with `Σ f = |V| - 1`.
fn in_box(g: &BipGraph, f: &[u32]) -> bool {
    let within = f
        .iter()
        .enumerate()
        .all(|(e, &x)| (x as usize) < g.degree(Vertex::E(e)));
    let sum: u64 = f.iter().map(|&x| u64::from(x)).sum();
    within && sum + 1 == g.v_count() as u64
}

/// Searches for a spanning tree `τ` with `d_τ(e) = f(e) + 1` for all `e`.
///
/// `E`-vertices are processed in decreasing order of `f(e)`; for each the
/// search picks `f(e) + 1` neighbours lying in distinct components of the
/// partial forest. A branch is cut as soon as some component of the forest
/// can no longer be reached from an unprocessed `E`-vertex.
pub fn is_hypertree_by_tree_search(g: &BipGraph, f: &[u32]) -> Result<Option<SpanningTree>> {
    g.require_connected()?;
    check_len(g, f)?;
    if !in_box(g, f) {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..g.e_count()).collect();
    order.sort_by_key(|&e| (std::cmp::Reverse(f[e]), e));
    let mut pending = vec![0usize; g.v_count()];
    for v in 0..g.v_count() {
        pending[v] = g.degree(Vertex::V(v));
    }
    let mut search = TreeSearch {
        g,
        f,
        order,
        uf: UnionFind::new(g.vertex_count()),
        chosen: Vec::with_capacity(g.vertex_count()),
        touched: vec![0; g.vertex_count()],
        stamp: 0,
    };
    Ok(search.run(0).then(|| SpanningTree::new(search.chosen)))
}

struct TreeSearch<'a> {
    g: &'a BipGraph,
    f: &'a [u32],
    order: Vec<usize>,
    uf: UnionFind,
    chosen: Vec<(usize, usize)>,
    touched: Vec<u32>,
    stamp: u32,
}

impl TreeSearch<'_> {
    fn run(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            // |V| + |E| - 1 edges and no cycle: a spanning tree.
            return true;
        }
        let e = self.order[pos];
        let need = self.f[e] as usize + 1;
        self.choose(pos, e, 0, need)
    }

    fn choose(&mut self, pos: usize, e: usize, start: usize, need: usize) -> bool {
        if need == 0 {
            return self.viable(pos) && self.run(pos + 1);
        }
        let g = self.g;
        let nbrs = g.e_neighbors(e);
        if nbrs.len() < start + need {
            return false;
        }
        let node = g.v_count() + e;
        for i in start..=nbrs.len() - need {
            let v = nbrs[i];
            let mark = self.uf.snapshot();
            if self.uf.union(node, v) {
                self.chosen.push((v, e));
                if self.choose(pos, e, i + 1, need - 1) {
                    return true;
                }
                self.chosen.pop();
            }
            self.uf.rollback(mark);
        }
        false
    }

    /// After `order[..=pos]` is placed: either the forest is already one
    /// component on `V`, or every component still touches an unprocessed
    /// `E`-vertex.
    fn viable(&mut self, pos: usize) -> bool {
        let g = self.g;
        let first = self.uf.find(0);
        if (1..g.v_count()).all(|v| self.uf.find(v) == first) {
            return true;
        }
        self.stamp += 1;
        for &e in &self.order[pos + 1..] {
            for &v in g.e_neighbors(e) {
                let r = self.uf.find(v);
                self.touched[r] = self.stamp;
            }
        }
        (0..g.v_count()).all(|v| self.touched[self.uf.find(v)] == self.stamp)
    }
}

/// `μ` over bitmask subsets, with a fast path on `u128` neighbourhood masks.
pub(crate) struct MuTable<'a> {
    g: &'a BipGraph,
    masks: Option<Vec<u128>>,
}

impl<'a> MuTable<'a> {
    pub(crate) fn new(g: &'a BipGraph) -> Self {
        let masks = (g.v_count() <= 128).then(|| {
            (0..g.e_count())
                .map(|e| g.e_neighbors(e).iter().fold(0u128, |m, &v| m | 1 << v))
                .collect()
        });
        MuTable { g, masks }
    }

    pub(crate) fn mu(&self, bits: u64) -> usize {
        if bits == 0 {
            return 0;
        }
        let Some(masks) = &self.masks else {
            let es: Vec<usize> = (0..64).filter(|&i| bits >> i & 1 == 1).collect();
            return self.g.mu_of(&es);
        };
        let mut comps = [0u128; 64];
        let mut n = 0;
        let mut rest = bits;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut m = masks[e];
            let mut i = 0;
            while i < n {
                if comps[i] & m != 0 {
                    m |= comps[i];
                    n -= 1;
                    comps[i] = comps[n];
                } else {
                    i += 1;
                }
            }
            comps[n] = m;
            n += 1;
        }
        let union = comps[..n].iter().fold(0u128, |a, &b| a | b);
        union.count_ones() as usize - n
    }
}

fn check_subset_cap(width: usize, cap: usize) -> Result<()> {
    if width > cap {
        return Err(Error::Capacity {
            what: "|E| for subset enumeration",
            actual: width,
            limit: cap,
        });
    }
    Ok(())
}

/// Calls `visit(bits)` for every non-empty subset of `{0..width}` in
/// reflected Gray-code order, with the index of the bit just flipped.
/// Stops early when `visit` returns `false`.
pub(crate) fn gray_subsets(width: usize, mut visit: impl FnMut(u64, usize) -> bool) {
    let mut bits = 0u64;
    for i in 1..(1u64 << width) {
        let flip = i.trailing_zeros() as usize;
        bits ^= 1 << flip;
        if !visit(bits, flip) {
            return;
        }
    }
}

/// Polymatroid membership test: `Σ f = |V| - 1` and `Σ_{E'} f ≤ μ(E')`
/// for all `E' ⊆ E`, under the cap from [`limits::subset_cap`].
pub fn is_hypertree_by_polymatroid(g: &BipGraph, f: &[u32]) -> Result<bool> {
    is_hypertree_by_polymatroid_with_cap(g, f, limits::subset_cap())
}

pub fn is_hypertree_by_polymatroid_with_cap(g: &BipGraph, f: &[u32], cap: usize) -> Result<bool> {
    g.require_connected()?;
    check_len(g, f)?;
    check_subset_cap(g.e_count(), cap)?;
    let total: u64 = f.iter().map(|&x| u64::from(x)).sum();
    if total + 1 != g.v_count() as u64 {
        return Ok(false);
    }
    let table = MuTable::new(g);
    let mut sum: i64 = 0;
    let mut ok = true;
    gray_subsets(g.e_count(), |bits, flip| {
        if bits >> flip & 1 == 1 {
            sum += i64::from(f[flip]);
        } else {
            sum -= i64::from(f[flip]);
        }
        ok = sum <= table.mu(bits) as i64;
        ok
    });
    Ok(ok)
}

/// All vectors in the degree box `0 ≤ f(e) ≤ d(e) - 1` with `Σ f = |V| - 1`.
pub fn box_vectors(g: &BipGraph) -> Vec<Vec<u32>> {
    fn rec(
        caps: &[u32],
        pos: usize,
        remaining: u32,
        suffix_cap: &[u32],
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if pos == caps.len() {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if suffix_cap[pos] < remaining {
            return;
        }
        for x in 0..=caps[pos].min(remaining) {
            cur.push(x);
            rec(caps, pos + 1, remaining - x, suffix_cap, cur, out);
            cur.pop();
        }
    }
    let caps: Vec<u32> = (0..g.e_count())
        .map(|e| g.degree(Vertex::E(e)).saturating_sub(1) as u32)
        .collect();
    let mut suffix_cap = vec![0u32; caps.len() + 1];
    for i in (0..caps.len()).rev() {
        suffix_cap[i] = suffix_cap[i + 1] + caps[i];
    }
    let mut out = Vec::new();
    let target = g.v_count().saturating_sub(1) as u32;
    rec(&caps, 0, target, &suffix_cap, &mut Vec::new(), &mut out);
    out
}

/// Brute force: the degree box filtered by tree search.
pub fn enumerate_by_tree_search(g: &BipGraph) -> Result<HypertreeSet> {
    g.require_connected()?;
    let mut out = Vec::new();
    for f in box_vectors(g) {
        if is_hypertree_by_tree_search(g, &f)?.is_some() {
            out.push(Hypertree(f));
        }
    }
    Ok(out.into_iter().collect())
}

/// Brute force: the degree box filtered by the polymatroid test.
pub fn enumerate_by_polymatroid(g: &BipGraph) -> Result<HypertreeSet> {
    enumerate_by_polymatroid_with_cap(g, limits::subset_cap())
}

pub fn enumerate_by_polymatroid_with_cap(g: &BipGraph, cap: usize) -> Result<HypertreeSet> {
    g.require_connected()?;
    check_subset_cap(g.e_count(), cap)?;
    let mut out = Vec::new();
    for f in box_vectors(g) {
        if is_hypertree_by_polymatroid_with_cap(g, &f, cap)? {
            out.push(Hypertree(f));
        }
    }
    Ok(out.into_iter().collect())
}

/// `B_H`, by breadth-first closure under single valence transfers starting
/// from the exterior greedy hypertree of the identity order. Each candidate
/// is admitted only after tree search finds a realising spanning tree.
pub fn enumerate_hypertrees(g: &BipGraph) -> Result<HypertreeSet> {
    g.require_connected()?;
    let ne = g.e_count();
    let caps: Vec<u32> = (0..ne).map(|e| g.degree(Vertex::E(e)) as u32 - 1).collect();
    let start = greedy_exterior_hypertree(g, &EdgeOrder::identity(ne))?;
    debug_assert!(is_hypertree_by_tree_search(g, start.values())?.is_some());
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(start.0.clone());
    let mut accepted = vec![start.clone()];
    let mut frontier = vec![start.0];
    while !frontier.is_empty() {
        let mut candidates = Vec::new();
        for f in &frontier {
            for from in (0..ne).filter(|&e| f[e] > 0) {
                for to in (0..ne).filter(|&e| e != from && f[e] < caps[e]) {
                    let mut c = f.clone();
                    c[from] -= 1;
                    c[to] += 1;
                    if seen.insert(c.clone()) {
                        candidates.push(c);
                    }
                }
            }
        }
        let verdicts: Vec<bool> = candidates
            .par_iter()
            .map(|c| matches!(is_hypertree_by_tree_search(g, c), Ok(Some(_))))
            .collect();
        frontier = candidates
            .into_iter()
            .zip(verdicts)
            .filter_map(|(c, ok)| ok.then_some(c))
            .collect();
        accepted.extend(frontier.iter().cloned().map(Hypertree));
    }
    Ok(accepted.into_iter().collect())
}

/// Whether `f - χ_from + χ_to` is again a hypertree.
pub fn can_transfer(b: &HypertreeSet, f: &[u32], from: usize, to: usize) -> Result<bool> {
    if from == to {
        return Err(Error::SameEdge(from));
    }
    if !b.contains(f) {
        return Err(Error::NotAHypertree(Values(f.to_vec())));
    }
    Ok(transfer(f, from, to).is_some_and(|g| b.contains(&g)))
}

/// `Σ_{E'} f = μ(E')`.
pub fn is_tight(g: &BipGraph, f: &[u32], subset: &EdgeSubset) -> Result<bool> {
    check_len(g, f)?;
    let sum: usize = subset.iter().map(|e| f[e] as usize).sum();
    Ok(sum == g.mu(subset)?)
}

/// Tightness through a realising tree: `A` is tight iff the components of
/// `τ|_A` span the components of `G|_A`.
pub fn tight_forest_check(g: &BipGraph, f: &[u32], tau: &SpanningTree, a: &EdgeSubset) -> Result<bool> {
    tau.validate(g, f)?;
    if a.width() != g.e_count() {
        return Err(Error::LengthMismatch {
            expected: g.e_count(),
            actual: a.width(),
        });
    }
    if a.is_empty() {
        return Ok(true);
    }
    let restriction = g.restriction(a)?;
    let nv = g.v_count();
    let mut uf = UnionFind::new(g.vertex_count());
    for &(v, e) in tau.edges() {
        if a.contains(e) {
            uf.union(v, nv + e);
        }
    }
    let mut roots: Vec<usize> = a
        .iter()
        .map(|e| uf.find(nv + e))
        .chain(restriction.v_support.iter().map(|&v| uf.find(v)))
        .collect();
    roots.sort_unstable();
    roots.dedup();
    Ok(roots.len() == restriction.components)
}

/// All subsets of `E` tight at `f`, as bitmasks.
#[derive(Clone, Debug)]
pub struct TightSets {
    width: usize,
    masks: Vec<u64>,
}

impl TightSets {
    pub fn compute(g: &BipGraph, f: &[u32]) -> Result<Self> {
        TightSets::compute_with_cap(g, f, limits::subset_cap())
    }

    pub fn compute_with_cap(g: &BipGraph, f: &[u32], cap: usize) -> Result<Self> {
        check_len(g, f)?;
        check_subset_cap(g.e_count(), cap)?;
        let table = MuTable::new(g);
        let mut masks = vec![0u64];
        let mut sum: i64 = 0;
        gray_subsets(g.e_count(), |bits, flip| {
            if bits >> flip & 1 == 1 {
                sum += i64::from(f[flip]);
            } else {
                sum -= i64::from(f[flip]);
            }
            if sum == table.mu(bits) as i64 {
                masks.push(bits);
            }
            true
        });
        masks.sort_unstable();
        Ok(TightSets {
            width: g.e_count(),
            masks,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn is_tight(&self, bits: u64) -> bool {
        self.masks.binary_search(&bits).is_ok()
    }

    /// Some tight set contains `inside` and avoids `outside`.
    pub fn separates(&self, inside: usize, outside: usize) -> bool {
        self.masks
            .iter()
            .any(|&m| m >> inside & 1 == 1 && m >> outside & 1 == 0)
    }
}

/// The exterior greedy hypertree `g'(e) = d(e) - 1 - n(e)`, where
/// `n(e_k) = n(G_k) - n(G_{k+1})` for the suffix restrictions
/// `G_k = G|_{{e_k, ..., e_last}}` of the order.
pub fn greedy_exterior_hypertree(g: &BipGraph, order: &EdgeOrder) -> Result<Hypertree> {
    g.require_connected()?;
    let ne = g.e_count();
    if order.len() != ne {
        return Err(Error::InvalidOrder(format!(
            "order covers {} elements, graph has {ne}",
            order.len()
        )));
    }
    let ranked = order.ranked();
    let suffix_nullity: Vec<usize> = (0..=ne).map(|k| g.restricted_nullity(&ranked[k..])).collect();
    let mut values = vec![0u32; ne];
    for k in 0..ne {
        let e = ranked[k];
        let drop = if k + 1 < ne {
            suffix_nullity[k] - suffix_nullity[k + 1]
        } else {
            0
        };
        values[e] = (g.degree(Vertex::E(e)) - 1 - drop) as u32;
    }
    Ok(Hypertree(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    fn hexagon() -> BipGraph {
        FamilySpec::cycle(3).generate().unwrap()
    }

    fn k(m: usize, n: usize) -> BipGraph {
        FamilySpec::complete_bipartite(m, n).generate().unwrap()
    }

    fn set(vs: &[&[u32]]) -> HypertreeSet {
        vs.iter().map(|v| Hypertree::new(v.to_vec())).collect()
    }

    #[test]
    fn tree_search_examples() {
        let g = hexagon();
        let tau = is_hypertree_by_tree_search(&g, &[0, 1, 1]).unwrap().unwrap();
        tau.validate(&g, &[0, 1, 1]).unwrap();
        assert_eq!(tau.edges().len(), 5);
        assert!(is_hypertree_by_tree_search(&g, &[0, 0, 2]).unwrap().is_none());
        // K_{2,3}: Σf must be |V| - 1 = 1.
        assert!(is_hypertree_by_tree_search(&k(2, 3), &[1, 1, 0]).unwrap().is_none());
    }

    #[test]
    fn polymatroid_examples() {
        let g = hexagon();
        assert!(is_hypertree_by_polymatroid(&g, &[0, 1, 1]).unwrap());
        assert!(!is_hypertree_by_polymatroid(&g, &[1, 1, 1]).unwrap());
        assert!(is_hypertree_by_polymatroid(&k(3, 3), &[2, 0, 0]).unwrap());
        assert!(is_hypertree_by_tree_search(&k(3, 3), &[2, 0, 0]).unwrap().is_some());
    }

    #[test]
    fn polymatroid_capacity_error() {
        let g = hexagon();
        assert!(matches!(
            is_hypertree_by_polymatroid_with_cap(&g, &[0, 1, 1], 2),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn disconnected_rejected() {
        let g = BipGraph::build(&["a", "b"], &["x", "y"], &[("a", "x"), ("b", "y")]).unwrap();
        assert!(matches!(is_hypertree_by_tree_search(&g, &[0, 0]), Err(Error::Disconnected)));
        assert!(matches!(enumerate_hypertrees(&g), Err(Error::Disconnected)));
        assert!(matches!(
            greedy_exterior_hypertree(&g, &EdgeOrder::identity(2)),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_hypertrees(&hexagon()).unwrap(),
            set(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]])
        );
        let star = k(1, 4);
        assert_eq!(enumerate_hypertrees(&star).unwrap(), set(&[&[0, 0, 0, 0]]));
        let b = enumerate_hypertrees(&k(3, 3)).unwrap();
        assert_eq!(
            b,
            set(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
        );
        assert_eq!(b, enumerate_by_tree_search(&k(3, 3)).unwrap());
    }

    #[test]
    fn can_transfer_examples() {
        let g = hexagon();
        let b = enumerate_hypertrees(&g).unwrap();
        assert!(can_transfer(&b, &[0, 1, 1], 1, 0).unwrap());
        assert!(!can_transfer(&b, &[0, 1, 1], 0, 1).unwrap());
        assert!(matches!(can_transfer(&b, &[0, 1, 1], 2, 2), Err(Error::SameEdge(2))));
        assert!(matches!(
            can_transfer(&b, &[2, 0, 0], 0, 1),
            Err(Error::NotAHypertree(_))
        ));
    }

    #[test]
    fn tightness_examples() {
        let g = hexagon();
        let f = [0, 1, 1];
        let s = |idx: &[usize]| EdgeSubset::from_indices(3, idx.iter().copied()).unwrap();
        assert!(is_tight(&g, &f, &s(&[])).unwrap());
        assert!(is_tight(&g, &f, &s(&[0, 1, 2])).unwrap());
        assert!(!is_tight(&g, &f, &s(&[0])).unwrap());
        assert!(is_tight(&g, &f, &s(&[1, 2])).unwrap());

        let tau = is_hypertree_by_tree_search(&g, &f).unwrap().unwrap();
        assert!(tight_forest_check(&g, &f, &tau, &s(&[1, 2])).unwrap());
        assert!(!tight_forest_check(&g, &f, &tau, &s(&[0])).unwrap());
        assert!(tight_forest_check(&g, &f, &tau, &s(&[0, 1, 2])).unwrap());
        assert!(matches!(
            tight_forest_check(&g, &[1, 0, 1], &tau, &s(&[0])),
            Err(Error::InvalidWitness(_))
        ));
    }

    #[test]
    fn greedy_examples() {
        let g = hexagon();
        assert_eq!(
            greedy_exterior_hypertree(&g, &EdgeOrder::identity(3)).unwrap().values(),
            &[0, 1, 1]
        );
        let tree = FamilySpec::tree(3, 4, 11).generate().unwrap();
        let only: Vec<u32> = (0..4).map(|e| tree.degree(Vertex::E(e)) as u32 - 1).collect();
        assert_eq!(greedy_exterior_hypertree(&tree, &EdgeOrder::identity(4)).unwrap().values(), &only[..]);
        let k23 = k(2, 3);
        let gp = greedy_exterior_hypertree(&k23, &EdgeOrder::identity(3)).unwrap();
        assert_eq!(gp.values(), &[0, 0, 1]);
        assert!(is_hypertree_by_tree_search(&k23, gp.values()).unwrap().is_some());
    }

    #[test]
    fn greedy_suffixes_are_tight() {
        let g = k(3, 4);
        let order = EdgeOrder::from_ranking(vec![2, 0, 3, 1]).unwrap();
        let gp = greedy_exterior_hypertree(&g, &order).unwrap();
        let ranked = order.ranked();
        for k in 0..4 {
            let s = EdgeSubset::from_indices(4, ranked[k..].iter().copied()).unwrap();
            assert!(is_tight(&g, gp.values(), &s).unwrap());
        }
    }

    #[test]
    fn tight_sets_table() {
        let g = hexagon();
        let t = TightSets::compute(&g, &[0, 1, 1]).unwrap();
        assert!(t.is_tight(0));
        assert!(t.is_tight(0b111));
        assert!(t.is_tight(0b110));
        assert!(!t.is_tight(0b001));
    }
}
