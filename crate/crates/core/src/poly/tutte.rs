//! Tutte polynomial oracle by deletion–contraction.
//!
//! For a connected graph viewed as a hypergraph, the interior polynomial is
//! `x^{|V|-1} T(1/x, 1)` and the exterior polynomial is
//! `y^{|E|-|V|+1} T(1, 1/y)`. These give an oracle for the activity-based
//! pipeline that shares no code with it.

use std::collections::HashMap;

use super::{IntPoly, IntPoly2};
use crate::dsu::UnionFind;
use crate::error::{Error, Result};
use crate::graph::{BipGraph, Hypergraph};
use crate::limits::DEFAULT_TUTTE_CAP;

/// An undirected multigraph; loops and parallel edges allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertex_names: Vec<String>,
    edge_names: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    /// Vertices are named `0, 1, ...` and edges `x0, x1, ...`.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let vertex_names = (0..vertex_count).map(|i| i.to_string()).collect();
        let edge_names = (0..edges.len()).map(|i| format!("x{i}")).collect();
        Multigraph::with_names(vertex_names, edge_names, edges)
    }

    pub fn with_names(
        vertex_names: Vec<String>,
        edge_names: Vec<String>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        if vertex_names.is_empty() {
            return Err(Error::EmptyClass(crate::graph::Side::V));
        }
        if edge_names.len() != edges.len() {
            return Err(Error::LengthMismatch {
                expected: edges.len(),
                actual: edge_names.len(),
            });
        }
        let n = vertex_names.len();
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(Error::IndexOutOfRange {
                side: crate::graph::Side::V,
                index: a.max(b),
                len: n,
            });
        }
        Ok(Multigraph {
            vertex_names,
            edge_names,
            edges,
        })
    }

    /// Reads a bipartite graph whose `E`-vertices all have degree 1 or 2
    /// as a multigraph on `V`; a degree-1 `E`-vertex is a loop.
    pub fn from_bipartite(g: &BipGraph) -> Result<Self> {
        let mut edges = Vec::with_capacity(g.e_count());
        for e in 0..g.e_count() {
            match *g.e_neighbors(e) {
                [a] => edges.push((a, a)),
                [a, b] => edges.push((a, b)),
                _ => {
                    return Err(Error::InvalidTransform(format!(
                        "E-vertex `{}` has degree {}; not an ordinary graph edge",
                        g.e_names()[e],
                        g.e_neighbors(e).len()
                    )))
                }
            }
        }
        Multigraph::with_names(g.v_names().to_vec(), g.e_names().to_vec(), edges)
    }

    /// `Bip H` of the graph seen as a hypergraph: one `E`-vertex per edge.
    pub fn subdivision(&self) -> Result<BipGraph> {
        let h = Hypergraph::with_edge_names(
            self.vertex_names.clone(),
            self.edge_names.clone(),
            self.edges.iter().map(|&(a, b)| vec![a, b]).collect(),
        )?;
        BipGraph::from_hypergraph(&h)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.vertex_count());
        let mut parts = self.vertex_count();
        for &(a, b) in &self.edges {
            if uf.union(a, b) {
                parts -= 1;
            }
        }
        parts == 1
    }
}

/// `T_G(x, y)` with the default edge cap.
pub fn tutte_polynomial(g: &Multigraph) -> Result<IntPoly2> {
    tutte_polynomial_with_cap(g, DEFAULT_TUTTE_CAP)
}

pub fn tutte_polynomial_with_cap(g: &Multigraph, cap: usize) -> Result<IntPoly2> {
    if g.edge_count() > cap {
        return Err(Error::Capacity {
            what: "edges for the Tutte oracle",
            actual: g.edge_count(),
            limit: cap,
        });
    }
    let mut memo = HashMap::new();
    Ok(tutte_rec(g.edges.clone(), &mut memo))
}

type Key = Vec<(usize, usize)>;

fn tutte_rec(mut edges: Vec<(usize, usize)>, memo: &mut HashMap<Key, IntPoly2>) -> IntPoly2 {
    let before = edges.len();
    edges.retain(|&(a, b)| a != b);
    let loops = before - edges.len();
    if edges.is_empty() {
        return IntPoly2::monomial(1, 0, loops);
    }
    let key = certificate(&edges);
    let core = match memo.get(&key) {
        Some(p) => p.clone(),
        None => {
            let (a, b) = key[0];
            let rest: Vec<(usize, usize)> = key[1..].to_vec();
            let merge = |v: usize| if v == b { a } else { v };
            let contracted: Vec<(usize, usize)> =
                rest.iter().map(|&(u, v)| (merge(u), merge(v))).collect();
            let p = if is_bridge(&rest, a, b) {
                tutte_rec(contracted, memo).shift(1, 0)
            } else {
                &tutte_rec(rest, memo) + &tutte_rec(contracted, memo)
            };
            memo.insert(key, p.clone());
            p
        }
    };
    core.shift(0, loops)
}

/// `a` and `b` lie in different components of `rest`.
fn is_bridge(rest: &[(usize, usize)], a: usize, b: usize) -> bool {
    let n = rest.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0).max(a).max(b) + 1;
    let mut uf = UnionFind::new(n);
    for &(u, v) in rest {
        uf.union(u, v);
    }
    uf.find(a) != uf.find(b)
}

/// Relabels the non-isolated vertices by (degree, sorted neighbour degrees)
/// and returns the sorted edge list. Equal certificates mean isomorphic
/// loopless multigraphs, which is all the memo table needs.
fn certificate(edges: &[(usize, usize)]) -> Key {
    let n = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0) + 1;
    let mut deg = vec![0usize; n];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    let mut nbr_degs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in edges {
        nbr_degs[a].push(deg[b]);
        nbr_degs[b].push(deg[a]);
    }
    for l in &mut nbr_degs {
        l.sort_unstable();
    }
    let mut present: Vec<usize> = (0..n).filter(|&v| deg[v] > 0).collect();
    present.sort_by(|&u, &v| (deg[u], &nbr_degs[u], u).cmp(&(deg[v], &nbr_degs[v], v)));
    let mut label = vec![usize::MAX; n];
    for (i, &v) in present.iter().enumerate() {
        label[v] = i;
    }
    let mut out: Key = edges
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (label[a], label[b]);
            (x.min(y), x.max(y))
        })
        .collect();
    out.sort_unstable();
    out
}

/// `x^{|V|-1} T(1/x, 1)`.
pub fn interior_from_tutte(g: &Multigraph) -> Result<IntPoly> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let t = tutte_polynomial(g)?;
    let rank = g.vertex_count() - 1;
    let mut coeffs = vec![num_bigint::BigInt::from(0); rank + 1];
    for (i, _, c) in t.terms() {
        coeffs[rank - i] += c;
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// `y^{|E|-|V|+1} T(1, 1/y)`.
pub fn exterior_from_tutte(g: &Multigraph) -> Result<IntPoly> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let t = tutte_polynomial(g)?;
    let nullity = g.edge_count() + 1 - g.vertex_count();
    let mut coeffs = vec![num_bigint::BigInt::from(0); nullity + 1];
    for (_, j, c) in t.terms() {
        coeffs[nullity - j] += c;
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Multigraph {
        Multigraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(cs.to_vec())
    }

    #[test]
    fn base_cases() {
        let bridge = Multigraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(tutte_polynomial(&bridge).unwrap(), IntPoly2::x());
        let lp = Multigraph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(tutte_polynomial(&lp).unwrap(), IntPoly2::y());
    }

    #[test]
    fn triangle_polynomial() {
        assert_eq!(tutte_polynomial(&triangle()).unwrap().to_string(), "y + x + x^2");
    }

    #[test]
    fn k4_polynomial() {
        let k4 = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        // x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3; T(1,1) = 16 spanning trees.
        let t = tutte_polynomial(&k4).unwrap();
        assert_eq!(t.to_string(), "2y + 3y^2 + y^3 + 2x + 4xy + 3x^2 + x^3");
        let one = num_bigint::BigInt::from(1);
        assert_eq!(t.eval(&one, &one), num_bigint::BigInt::from(16));
    }

    #[test]
    fn specialisations_of_triangle() {
        assert_eq!(interior_from_tutte(&triangle()).unwrap(), p(&[1, 1, 1]));
        assert_eq!(exterior_from_tutte(&triangle()).unwrap(), p(&[1, 2]));
    }

    #[test]
    fn trees_specialise_to_one() {
        let path = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(interior_from_tutte(&path).unwrap(), IntPoly::one());
        assert_eq!(tutte_polynomial(&path).unwrap(), IntPoly2::monomial(1, 3, 0));
    }

    #[test]
    fn capacity_and_connectivity_errors() {
        let many = Multigraph::new(2, vec![(0, 1); 13]).unwrap();
        assert!(matches!(tutte_polynomial(&many), Err(Error::Capacity { .. })));
        let split = Multigraph::new(3, vec![(0, 1)]).unwrap();
        assert!(matches!(interior_from_tutte(&split), Err(Error::Disconnected)));
    }

    #[test]
    fn bipartite_round_trip() {
        let g = triangle().subdivision().unwrap();
        assert_eq!((g.v_count(), g.e_count()), (3, 3));
        let back = Multigraph::from_bipartite(&g).unwrap();
        assert_eq!(back.edge_count(), 3);
        let with_loop = Multigraph::new(1, vec![(0, 0)]).unwrap().subdivision().unwrap();
        assert_eq!(with_loop.edge_count(), 1);
    }
}
