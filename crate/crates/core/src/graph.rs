//! Bipartite graphs, hypergraphs and the structural quantities on them.
//!
//! A [`BipGraph`] has two labelled colour classes `V` and `E`. Internally
//! vertices are addressed by index; labels are kept for output and for
//! traceable counterexamples. The class `E` plays the role of hyperedges
//! unless a routine says otherwise.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dsu::UnionFind;
use crate::error::{Error, Result};

/// One of the two colour classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    V,
    E,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::V => Side::E,
            Side::E => Side::V,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::V => write!(f, "V"),
            Side::E => write!(f, "E"),
        }
    }
}

/// A vertex of a bipartite graph, tagged by its class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    V(usize),
    E(usize),
}

impl Vertex {
    pub fn side(self) -> Side {
        match self {
            Vertex::V(_) => Side::V,
            Vertex::E(_) => Side::E,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Vertex::V(i) | Vertex::E(i) => i,
        }
    }
}

/// A simple bipartite graph with distinguished colour classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipGraph {
    v_names: Vec<String>,
    e_names: Vec<String>,
    v_adj: Vec<Vec<usize>>,
    e_adj: Vec<Vec<usize>>,
    connected: bool,
}

fn check_unique(side: Side, names: &[String]) -> Result<()> {
    if names.is_empty() {
        return Err(Error::EmptyClass(side));
    }
    let mut seen = HashSet::with_capacity(names.len());
    for n in names {
        if !seen.insert(n.as_str()) {
            return Err(Error::DuplicateLabel {
                side,
                label: n.clone(),
            });
        }
    }
    Ok(())
}

impl BipGraph {
    /// Builds a graph from index pairs `(v, e)`. Repeated pairs collapse.
    pub fn from_index_pairs<I>(v_names: Vec<String>, e_names: Vec<String>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_unique(Side::V, &v_names)?;
        check_unique(Side::E, &e_names)?;
        let (nv, ne) = (v_names.len(), e_names.len());
        let mut v_adj = vec![Vec::new(); nv];
        let mut e_adj = vec![Vec::new(); ne];
        for (v, e) in pairs {
            if v >= nv {
                return Err(Error::IndexOutOfRange { side: Side::V, index: v, len: nv });
            }
            if e >= ne {
                return Err(Error::IndexOutOfRange { side: Side::E, index: e, len: ne });
            }
            v_adj[v].push(e);
            e_adj[e].push(v);
        }
        for list in v_adj.iter_mut().chain(e_adj.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        let mut g = BipGraph {
            v_names,
            e_names,
            v_adj,
            e_adj,
            connected: false,
        };
        g.connected = g.component_count() == 1;
        Ok(g)
    }

    /// Builds a graph from labelled adjacency pairs `(v-label, e-label)`.
    pub fn build<S: AsRef<str>>(v_names: &[S], e_names: &[S], adj: &[(S, S)]) -> Result<Self> {
        let v_names: Vec<String> = v_names.iter().map(|s| s.as_ref().to_owned()).collect();
        let e_names: Vec<String> = e_names.iter().map(|s| s.as_ref().to_owned()).collect();
        check_unique(Side::V, &v_names)?;
        check_unique(Side::E, &e_names)?;
        let v_index: HashMap<&str, usize> =
            v_names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let e_index: HashMap<&str, usize> =
            e_names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut pairs = Vec::with_capacity(adj.len());
        for (v, e) in adj {
            let (v, e) = (v.as_ref(), e.as_ref());
            let vi = *v_index.get(v).ok_or_else(|| Error::UnknownLabel(v.to_owned()))?;
            let ei = *e_index.get(e).ok_or_else(|| Error::UnknownLabel(e.to_owned()))?;
            pairs.push((vi, ei));
        }
        BipGraph::from_index_pairs(v_names, e_names, pairs)
    }

    /// The incidence graph `Bip H` of a hypergraph: `(v, e)` adjacent iff
    /// `v ∈ e`. Every member of the hyperedge multiset gets its own
    /// `E`-vertex.
    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self> {
        let pairs = h
            .hyperedges
            .iter()
            .enumerate()
            .flat_map(|(e, members)| members.iter().map(move |&v| (v, e)));
        BipGraph::from_index_pairs(h.vertices.clone(), h.edge_names.clone(), pairs)
    }

    /// Reads `E` as a multiset of subsets of `V`.
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph {
            vertices: self.v_names.clone(),
            edge_names: self.e_names.clone(),
            hyperedges: self.e_adj.clone(),
        }
    }

    /// Swaps the roles of the two colour classes.
    pub fn dual(&self) -> BipGraph {
        BipGraph {
            v_names: self.e_names.clone(),
            e_names: self.v_names.clone(),
            v_adj: self.e_adj.clone(),
            e_adj: self.v_adj.clone(),
            connected: self.connected,
        }
    }

    /// The graph seen from `side` as the hyperedge class.
    pub fn oriented(&self, side: Side) -> BipGraph {
        match side {
            Side::E => self.clone(),
            Side::V => self.dual(),
        }
    }

    pub fn v_count(&self) -> usize {
        self.v_names.len()
    }

    pub fn e_count(&self) -> usize {
        self.e_names.len()
    }

    pub fn class_size(&self, side: Side) -> usize {
        match side {
            Side::V => self.v_count(),
            Side::E => self.e_count(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.v_count() + self.e_count()
    }

    /// Number of edges `|ε|`.
    pub fn edge_count(&self) -> usize {
        self.e_adj.iter().map(Vec::len).sum()
    }

    pub fn v_names(&self) -> &[String] {
        &self.v_names
    }

    pub fn e_names(&self) -> &[String] {
        &self.e_names
    }

    pub fn name(&self, u: Vertex) -> &str {
        match u {
            Vertex::V(i) => &self.v_names[i],
            Vertex::E(i) => &self.e_names[i],
        }
    }

    pub fn find(&self, side: Side, label: &str) -> Option<usize> {
        let names = match side {
            Side::V => &self.v_names,
            Side::E => &self.e_names,
        };
        names.iter().position(|n| n == label)
    }

    /// Looks a label up in either class, preferring `V` on a clash.
    pub fn find_any(&self, label: &str) -> Option<Vertex> {
        self.find(Side::V, label)
            .map(Vertex::V)
            .or_else(|| self.find(Side::E, label).map(Vertex::E))
    }

    /// Sorted `V`-neighbours of the `E`-vertex `e`.
    pub fn e_neighbors(&self, e: usize) -> &[usize] {
        &self.e_adj[e]
    }

    /// Sorted `E`-neighbours of the `V`-vertex `v`.
    pub fn v_neighbors(&self, v: usize) -> &[usize] {
        &self.v_adj[v]
    }

    pub fn neighbors(&self, u: Vertex) -> Vec<Vertex> {
        match u {
            Vertex::V(i) => self.v_adj[i].iter().map(|&e| Vertex::E(e)).collect(),
            Vertex::E(i) => self.e_adj[i].iter().map(|&v| Vertex::V(v)).collect(),
        }
    }

    pub fn degree(&self, u: Vertex) -> usize {
        match u {
            Vertex::V(i) => self.v_adj[i].len(),
            Vertex::E(i) => self.e_adj[i].len(),
        }
    }

    pub fn has_edge(&self, v: usize, e: usize) -> bool {
        self.e_adj.get(e).is_some_and(|l| l.binary_search(&v).is_ok())
    }

    /// All edges as `(v, e)` pairs, ordered by `e` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.e_adj
            .iter()
            .enumerate()
            .flat_map(|(e, vs)| vs.iter().map(move |&v| (v, e)))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..self.v_count())
            .map(Vertex::V)
            .chain((0..self.e_count()).map(Vertex::E))
    }

    /// The stored connectivity flag.
    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.connected {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Number of connected components, by a fresh search.
    pub fn component_count(&self) -> usize {
        self.component_count_without(&[])
    }

    /// Number of components of `G - removed`.
    pub fn component_count_without(&self, removed: &[Vertex]) -> usize {
        let nv = self.v_count();
        let mut seen = vec![false; self.vertex_count()];
        for &u in removed {
            seen[self.flat(u)] = true;
        }
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.vertex_count() {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                let nbrs: Box<dyn Iterator<Item = usize>> = if x < nv {
                    Box::new(self.v_adj[x].iter().map(|&e| nv + e))
                } else {
                    Box::new(self.e_adj[x - nv].iter().copied())
                };
                for y in nbrs {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        count
    }

    /// Flat index: `V`-vertices first, then `E`-vertices.
    pub(crate) fn flat(&self, u: Vertex) -> usize {
        match u {
            Vertex::V(i) => i,
            Vertex::E(i) => self.v_count() + i,
        }
    }

    /// Cycle-space dimension `|ε| - (|V| + |E|) + c`.
    pub fn nullity(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count()
    }

    /// `G|_{E'}`: the elements of `E'`, their incident edges, and the
    /// `V`-endpoints of those edges.
    pub fn restriction(&self, subset: &EdgeSubset) -> Result<Restriction> {
        self.check_width(subset)?;
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let (support, components) = self.support_and_components(subset.iter());
        let edge_count = subset.iter().map(|e| self.e_adj[e].len()).sum();
        Ok(Restriction {
            edges: *subset,
            v_support: support,
            components,
            edge_count,
        })
    }

    /// `μ(E') = |∪E'| - c(E')`, and `0` for the empty set.
    pub fn mu(&self, subset: &EdgeSubset) -> Result<usize> {
        self.check_width(subset)?;
        if subset.is_empty() {
            return Ok(0);
        }
        let (support, components) = self.support_and_components(subset.iter());
        Ok(support.len() - components)
    }

    /// `μ` for an arbitrary list of distinct `E`-indices.
    pub(crate) fn mu_of(&self, es: &[usize]) -> usize {
        if es.is_empty() {
            return 0;
        }
        let (support, components) = self.support_and_components(es.iter().copied());
        support.len() - components
    }

    /// Nullity of `G|_{E'}` for a list of distinct `E`-indices.
    pub(crate) fn restricted_nullity(&self, es: &[usize]) -> usize {
        if es.is_empty() {
            return 0;
        }
        let (support, components) = self.support_and_components(es.iter().copied());
        let edges: usize = es.iter().map(|&e| self.e_adj[e].len()).sum();
        edges + components - support.len() - es.len()
    }

    fn support_and_components(&self, es: impl Iterator<Item = usize>) -> (Vec<usize>, usize) {
        let nv = self.v_count();
        let mut uf = UnionFind::new(nv + self.e_count());
        let mut in_support = vec![false; nv];
        let mut members = Vec::new();
        for e in es {
            members.push(nv + e);
            for &v in &self.e_adj[e] {
                in_support[v] = true;
                uf.union(nv + e, v);
            }
        }
        let mut roots: Vec<usize> = members.iter().map(|&x| uf.find(x)).collect();
        roots.sort_unstable();
        roots.dedup();
        let support = (0..nv).filter(|&v| in_support[v]).collect();
        (support, roots.len())
    }

    fn check_width(&self, subset: &EdgeSubset) -> Result<()> {
        if subset.width() != self.e_count() {
            return Err(Error::LengthMismatch {
                expected: self.e_count(),
                actual: subset.width(),
            });
        }
        Ok(())
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            v: self.v_names.clone(),
            e: self.e_names.clone(),
            adj: self
                .edges()
                .map(|(v, e)| (self.v_names[v].clone(), self.e_names[e].clone()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("graph serialisation cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(s)?;
        file.to_graph()
    }
}

impl fmt::Display for BipGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

/// The on-disk JSON graph format:
/// `{"v": [...], "e": [...], "adj": [["v-label", "e-label"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub v: Vec<String>,
    pub e: Vec<String>,
    pub adj: Vec<(String, String)>,
}

impl GraphFile {
    pub fn to_graph(&self) -> Result<BipGraph> {
        BipGraph::build(&self.v, &self.e, &self.adj)
    }
}

/// A hypergraph: vertex labels and a multiset of non-empty vertex subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: Vec<String>,
    edge_names: Vec<String>,
    hyperedges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Hyperedges are given as vertex-index lists; each is stored as a
    /// sorted set. Hyperedge labels default to `h0, h1, ...`.
    pub fn new(vertices: Vec<String>, hyperedges: Vec<Vec<usize>>) -> Result<Self> {
        let names = (0..hyperedges.len()).map(|i| format!("h{i}")).collect();
        Hypergraph::with_edge_names(vertices, names, hyperedges)
    }

    pub fn with_edge_names(
        vertices: Vec<String>,
        edge_names: Vec<String>,
        hyperedges: Vec<Vec<usize>>,
    ) -> Result<Self> {
        check_unique(Side::V, &vertices)?;
        check_unique(Side::E, &edge_names)?;
        if edge_names.len() != hyperedges.len() {
            return Err(Error::LengthMismatch {
                expected: hyperedges.len(),
                actual: edge_names.len(),
            });
        }
        let mut sets = Vec::with_capacity(hyperedges.len());
        for (i, mut members) in hyperedges.into_iter().enumerate() {
            if members.is_empty() {
                return Err(Error::EmptyHyperedge(i));
            }
            if let Some(&bad) = members.iter().find(|&&v| v >= vertices.len()) {
                return Err(Error::IndexOutOfRange {
                    side: Side::V,
                    index: bad,
                    len: vertices.len(),
                });
            }
            members.sort_unstable();
            members.dedup();
            sets.push(members);
        }
        Ok(Hypergraph {
            vertices,
            edge_names,
            hyperedges: sets,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edge_names(&self) -> &[String] {
        &self.edge_names
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }
}

/// Maximum width of an [`EdgeSubset`].
pub const MAX_SUBSET_WIDTH: usize = 64;

/// A subset of the `E`-class stored as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    bits: u64,
    width: usize,
}

impl EdgeSubset {
    pub fn empty(width: usize) -> Result<Self> {
        if width > MAX_SUBSET_WIDTH {
            return Err(Error::Capacity {
                what: "edge subset width",
                actual: width,
                limit: MAX_SUBSET_WIDTH,
            });
        }
        Ok(EdgeSubset { bits: 0, width })
    }

    pub fn full(width: usize) -> Result<Self> {
        let s = EdgeSubset::empty(width)?;
        Ok(EdgeSubset {
            bits: low_mask(width),
            ..s
        })
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, indices: I) -> Result<Self> {
        let mut s = EdgeSubset::empty(width)?;
        for i in indices {
            if i >= width {
                return Err(Error::IndexOutOfRange {
                    side: Side::E,
                    index: i,
                    len: width,
                });
            }
            s.bits |= 1 << i;
        }
        Ok(s)
    }

    /// Bits above `width` are discarded.
    pub fn from_bits(width: usize, bits: u64) -> Result<Self> {
        let s = EdgeSubset::empty(width)?;
        Ok(EdgeSubset {
            bits: bits & low_mask(width),
            ..s
        })
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.width && self.bits >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.width, "index {i} outside subset of width {}", self.width);
        self.bits |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.width {
            self.bits &= !(1 << i);
        }
    }

    pub fn union(&self, other: &EdgeSubset) -> EdgeSubset {
        EdgeSubset {
            bits: self.bits | other.bits,
            width: self.width.max(other.width),
        }
    }

    pub fn intersection(&self, other: &EdgeSubset) -> EdgeSubset {
        EdgeSubset {
            bits: self.bits & other.bits,
            width: self.width.max(other.width),
        }
    }

    pub fn complement(&self) -> EdgeSubset {
        EdgeSubset {
            bits: !self.bits & low_mask(self.width),
            width: self.width,
        }
    }

    pub fn is_subset(&self, other: &EdgeSubset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (0..self.width).filter(move |&i| bits >> i & 1 == 1)
    }
}

pub(crate) fn low_mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

/// The restriction `G|_{E'}` summarised by its parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub edges: EdgeSubset,
    /// `∪E'`, sorted.
    pub v_support: Vec<usize>,
    /// `c(E')`.
    pub components: usize,
    /// Number of graph edges incident with `E'`.
    pub edge_count: usize,
}

impl Restriction {
    pub fn mu(&self) -> usize {
        self.v_support.len() - self.components
    }

    pub fn nullity(&self) -> usize {
        self.edge_count + self.components - self.v_support.len() - self.edges.len()
    }

    /// Materialises the restriction as a graph, keeping labels.
    pub fn to_graph(&self, g: &BipGraph) -> Result<BipGraph> {
        let es: Vec<usize> = self.edges.iter().collect();
        let v_pos: HashMap<usize, usize> =
            self.v_support.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let pairs: Vec<(usize, usize)> = es
            .iter()
            .enumerate()
            .flat_map(|(j, &e)| g.e_neighbors(e).iter().map(move |v| (v, j)))
            .map(|(v, j)| (v_pos[v], j))
            .collect();
        BipGraph::from_index_pairs(
            self.v_support.iter().map(|&v| g.v_names()[v].clone()).collect(),
            es.iter().map(|&e| g.e_names()[e].clone()).collect(),
            pairs,
        )
    }
}
