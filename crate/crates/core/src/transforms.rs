//! Graph surgeries used by the recursions: deletion, contraction, joins,
//! the `G_t` / `G'` pair construction and the balanced decomposition.
//!
//! Every operation returns a fresh simple graph. Labels are preserved where
//! a vertex survives; merged vertices are labelled `a+b`, and labels that
//! would clash get a `'` suffix.

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{BipGraph, Side, Vertex};
use crate::poly::IntPoly;

fn check_vertex(g: &BipGraph, u: Vertex) -> Result<()> {
    let len = g.class_size(u.side());
    if u.index() >= len {
        return Err(Error::IndexOutOfRange {
            side: u.side(),
            index: u.index(),
            len,
        });
    }
    Ok(())
}

/// Appends `'` until `name` is not in `taken`, then records it.
fn fresh(taken: &mut HashSet<String>, name: &str) -> String {
    let mut out = name.to_owned();
    while taken.contains(&out) {
        out.push('\'');
    }
    taken.insert(out.clone());
    out
}

/// Applies an `E`-side operation to either side by passing through the dual.
fn on_side(g: &BipGraph, u: Vertex, op: impl Fn(&BipGraph, usize) -> Result<BipGraph>) -> Result<BipGraph> {
    check_vertex(g, u)?;
    match u {
        Vertex::E(e) => op(g, e),
        Vertex::V(v) => Ok(op(&g.dual(), v)?.dual()),
    }
}

fn delete_e(g: &BipGraph, e: usize) -> Result<BipGraph> {
    if g.e_count() == 1 {
        return Err(Error::InvalidTransform(format!(
            "deleting `{}` would empty its class",
            g.e_names()[e]
        )));
    }
    let e_names: Vec<String> = (0..g.e_count()).filter(|&x| x != e).map(|x| g.e_names()[x].clone()).collect();
    let shift = |x: usize| if x > e { x - 1 } else { x };
    let pairs = g.edges().filter(|&(_, x)| x != e).map(|(v, x)| (v, shift(x)));
    BipGraph::from_index_pairs(g.v_names().to_vec(), e_names, pairs)
}

fn contract_e(g: &BipGraph, e: usize) -> Result<BipGraph> {
    let merged = g.e_neighbors(e);
    let Some(&keep) = merged.first() else {
        return Err(Error::InvalidTransform(format!(
            "cannot contract `{}`: it has no neighbours",
            g.e_names()[e]
        )));
    };
    if g.e_count() == 1 {
        return Err(Error::InvalidTransform(format!(
            "contracting `{}` would empty its class",
            g.e_names()[e]
        )));
    }
    let is_merged = |v: usize| merged.binary_search(&v).is_ok();
    let mut new_index = vec![0usize; g.v_count()];
    let mut v_names = Vec::new();
    for v in 0..g.v_count() {
        if is_merged(v) && v != keep {
            continue;
        }
        new_index[v] = v_names.len();
        v_names.push(g.v_names()[v].clone());
    }
    for &v in merged {
        new_index[v] = new_index[keep];
    }
    let label = merged.iter().map(|&v| g.v_names()[v].as_str()).collect::<Vec<_>>().join("+");
    let mut taken: HashSet<String> = v_names.iter().cloned().collect();
    taken.remove(&g.v_names()[keep]);
    v_names[new_index[keep]] = fresh(&mut taken, &label);
    let shift = |x: usize| if x > e { x - 1 } else { x };
    let e_names: Vec<String> = (0..g.e_count()).filter(|&x| x != e).map(|x| g.e_names()[x].clone()).collect();
    let pairs = g.edges().filter(|&(_, x)| x != e).map(|(v, x)| (new_index[v], shift(x)));
    BipGraph::from_index_pairs(v_names, e_names, pairs)
}

/// `G \ u` for a vertex of degree 1.
pub fn delete_valence1(g: &BipGraph, u: Vertex) -> Result<BipGraph> {
    check_vertex(g, u)?;
    let d = g.degree(u);
    if d != 1 {
        return Err(Error::InvalidTransform(format!(
            "`{}` has degree {d}, expected 1",
            g.name(u)
        )));
    }
    delete_vertex(g, u)
}

/// `G \ u`: removes `u` and its incident edges. The result may be
/// disconnected.
pub fn delete_vertex(g: &BipGraph, u: Vertex) -> Result<BipGraph> {
    on_side(g, u, delete_e)
}

/// `G / u`: removes `u`, identifies its neighbours and collapses multi-edges.
pub fn contract_vertex(g: &BipGraph, u: Vertex) -> Result<BipGraph> {
    on_side(g, u, contract_e)
}

/// Attaches a new leaf to `u`.
pub fn add_pendant(g: &BipGraph, u: Vertex) -> Result<BipGraph> {
    check_vertex(g, u)?;
    let mut v_names = g.v_names().to_vec();
    let mut e_names = g.e_names().to_vec();
    let mut pairs: Vec<(usize, usize)> = g.edges().collect();
    let mut taken: HashSet<String> = v_names.iter().chain(e_names.iter()).cloned().collect();
    match u {
        Vertex::V(v) => {
            pairs.push((v, e_names.len()));
            e_names.push(fresh(&mut taken, "leaf"));
        }
        Vertex::E(e) => {
            pairs.push((v_names.len(), e));
            v_names.push(fresh(&mut taken, "leaf"));
        }
    }
    BipGraph::from_index_pairs(v_names, e_names, pairs)
}

/// Disjoint union of `g1` and `g2` with `g2`'s vertices renumbered after
/// `g1`'s, then `g2`'s copy of each listed vertex sent to `g1`'s.
fn glue(g1: &BipGraph, g2: &BipGraph, v_glue: Option<(usize, usize)>, e_glue: Option<(usize, usize)>) -> Result<BipGraph> {
    let mut taken: HashSet<String> = g1.v_names().iter().chain(g1.e_names()).cloned().collect();
    let mut v_names = g1.v_names().to_vec();
    let mut e_names = g1.e_names().to_vec();
    let mut v_map = vec![0usize; g2.v_count()];
    for v in 0..g2.v_count() {
        match v_glue {
            Some((a, b)) if b == v => v_map[v] = a,
            _ => {
                v_map[v] = v_names.len();
                v_names.push(fresh(&mut taken, &g2.v_names()[v]));
            }
        }
    }
    let mut e_map = vec![0usize; g2.e_count()];
    for e in 0..g2.e_count() {
        match e_glue {
            Some((a, b)) if b == e => e_map[e] = a,
            _ => {
                e_map[e] = e_names.len();
                e_names.push(fresh(&mut taken, &g2.e_names()[e]));
            }
        }
    }
    let pairs = g1.edges().chain(g2.edges().map(|(v, e)| (v_map[v], e_map[e])));
    BipGraph::from_index_pairs(v_names, e_names, pairs.collect::<Vec<_>>())
}

/// Identifies `u1 ∈ G1` with `u2 ∈ G2`; both must lie in the same class.
pub fn one_point_join(g1: &BipGraph, g2: &BipGraph, u1: Vertex, u2: Vertex) -> Result<BipGraph> {
    check_vertex(g1, u1)?;
    check_vertex(g2, u2)?;
    match (u1, u2) {
        (Vertex::V(a), Vertex::V(b)) => glue(g1, g2, Some((a, b)), None),
        (Vertex::E(a), Vertex::E(b)) => glue(g1, g2, None, Some((a, b))),
        _ => Err(Error::InvalidTransform(format!(
            "cannot join a {}-vertex to an {}-vertex",
            u1.side(),
            u2.side()
        ))),
    }
}

/// Identifies the edge `(v1, e1)` of `G1` with the edge `(v2, e2)` of `G2`.
pub fn edge_join(g1: &BipGraph, g2: &BipGraph, (v1, e1): (usize, usize), (v2, e2): (usize, usize)) -> Result<BipGraph> {
    for (g, v, e) in [(g1, v1, e1), (g2, v2, e2)] {
        check_vertex(g, Vertex::V(v))?;
        check_vertex(g, Vertex::E(e))?;
        if !g.has_edge(v, e) {
            return Err(Error::InvalidTransform(format!(
                "`{}`-`{}` is not an edge",
                g.v_names()[v],
                g.e_names()[e]
            )));
        }
    }
    glue(g1, g2, Some((v1, v2)), Some((e1, e2)))
}

fn check_pair(g: &BipGraph, e1: usize, e2: usize) -> Result<()> {
    check_vertex(g, Vertex::E(e1))?;
    check_vertex(g, Vertex::E(e2))?;
    if e1 == e2 {
        return Err(Error::SameEdge(e1));
    }
    Ok(())
}

/// `G_t`: adds `t` new `V`-vertices, each adjacent to exactly `e1` and `e2`.
pub fn add_parallel_pair_vertices(g: &BipGraph, e1: usize, e2: usize, t: usize) -> Result<BipGraph> {
    check_pair(g, e1, e2)?;
    let mut taken: HashSet<String> = g.v_names().iter().chain(g.e_names()).cloned().collect();
    let mut v_names = g.v_names().to_vec();
    let mut pairs: Vec<(usize, usize)> = g.edges().collect();
    for i in 1..=t {
        let v = v_names.len();
        v_names.push(fresh(&mut taken, &format!("w{i}")));
        pairs.push((v, e1));
        pairs.push((v, e2));
    }
    BipGraph::from_index_pairs(v_names, g.e_names().to_vec(), pairs)
}

/// `G'`: identifies `e1` and `e2` and collapses multi-edges.
pub fn identify_pair(g: &BipGraph, e1: usize, e2: usize) -> Result<BipGraph> {
    check_pair(g, e1, e2)?;
    let (keep, gone) = (e1.min(e2), e1.max(e2));
    let mut taken: HashSet<String> = g.v_names().iter().chain(g.e_names()).cloned().collect();
    taken.remove(&g.e_names()[keep]);
    let label = format!("{}+{}", g.e_names()[keep], g.e_names()[gone]);
    let mut e_names = Vec::with_capacity(g.e_count() - 1);
    for e in 0..g.e_count() {
        if e == keep {
            e_names.push(fresh(&mut taken, &label));
        } else if e != gone {
            e_names.push(g.e_names()[e].clone());
        }
    }
    let remap = |e: usize| match e.cmp(&gone) {
        std::cmp::Ordering::Less => e,
        std::cmp::Ordering::Equal => keep,
        std::cmp::Ordering::Greater => e - 1,
    };
    let pairs = g.edges().map(|(v, e)| (v, remap(e)));
    BipGraph::from_index_pairs(g.v_names().to_vec(), e_names, pairs.collect::<Vec<_>>())
}

/// One summand `coefficient · x^exponent · I(graph)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTerm {
    pub coefficient: BigInt,
    pub exponent: usize,
    pub graph: BipGraph,
}

/// `I(G)` written as a signed combination of interior polynomials of
/// balanced graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub terms: Vec<DecompositionTerm>,
    /// The source had `|V| > |E|` and was replaced by its dual first.
    pub dualized: bool,
}

impl Decomposition {
    /// `Σ coefficient · x^exponent · interior(graph)`.
    pub fn reassemble(&self, mut interior: impl FnMut(&BipGraph) -> Result<IntPoly>) -> Result<IntPoly> {
        let mut acc = IntPoly::zero();
        for term in &self.terms {
            acc += &interior(&term.graph)?.scale(&term.coefficient).shift(term.exponent);
        }
        Ok(acc)
    }
}

/// With `t = |E| - |V|` and `G^0 = G`, emits `G_{n-i}` (that is, `G^i` plus
/// `t - i` vertices on its first two hyperedges) with coefficient
/// `(-1)^i t!/(t-i)!` and exponent `i`, where `G^{i+1}` identifies those two
/// hyperedges of `G^i`.
pub fn balanced_decomposition(g: &BipGraph) -> Result<Decomposition> {
    g.require_connected()?;
    let dualized = g.v_count() > g.e_count();
    let mut current = g.oriented(if dualized { Side::V } else { Side::E });
    let t = current.e_count() - current.v_count();
    let mut terms = Vec::with_capacity(t + 1);
    let mut falling = BigInt::from(1);
    for i in 0..=t {
        let sign = if i % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
        let graph = if t - i == 0 {
            current.clone()
        } else {
            add_parallel_pair_vertices(&current, 0, 1, t - i)?
        };
        terms.push(DecompositionTerm {
            coefficient: sign * &falling,
            exponent: i,
            graph,
        });
        if i < t {
            falling *= BigInt::from(t - i);
            current = identify_pair(&current, 0, 1)?;
        }
    }
    Ok(Decomposition { terms, dualized })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::activity::EdgeOrder;
    use crate::families::FamilySpec;
    use crate::poly::interior_polynomial;

    fn interior(g: &BipGraph) -> IntPoly {
        interior_polynomial(g, &EdgeOrder::identity(g.e_count())).unwrap()
    }

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(cs.to_vec())
    }

    fn hexagon() -> BipGraph {
        FamilySpec::cycle(3).generate().unwrap()
    }

    #[test]
    fn valence_one_deletion() {
        let path = BipGraph::build(&["v1", "v2"], &["e1"], &[("v1", "e1"), ("v2", "e1")]).unwrap();
        let edge = delete_valence1(&path, Vertex::V(1)).unwrap();
        assert_eq!((edge.v_count(), edge.e_count(), edge.edge_count()), (1, 1, 1));
        let with_leaf = add_pendant(&hexagon(), Vertex::E(0)).unwrap();
        let leaf = Vertex::V(with_leaf.v_count() - 1);
        assert_eq!(delete_valence1(&with_leaf, leaf).unwrap(), hexagon());
        assert!(matches!(
            delete_valence1(&hexagon(), Vertex::V(0)),
            Err(Error::InvalidTransform(_))
        ));
    }

    #[test]
    fn delete_and_contract_on_hexagon() {
        let g = hexagon();
        let deleted = delete_vertex(&g, Vertex::E(0)).unwrap();
        assert_eq!((deleted.vertex_count(), deleted.edge_count()), (5, 4));
        assert!(deleted.is_connected());
        let contracted = contract_vertex(&g, Vertex::E(0)).unwrap();
        assert_eq!((contracted.v_count(), contracted.e_count()), (2, 2));
        assert!(contracted.vertices().all(|u| contracted.degree(u) == 2));
        assert_eq!(interior(&g), &interior(&deleted) + &interior(&contracted).shift(1));
        assert_eq!(interior(&g), p(&[1, 1, 1]));
    }

    #[test]
    fn contraction_errors() {
        let single = BipGraph::build(&["v1"], &["e1"], &[("v1", "e1")]).unwrap();
        assert!(contract_vertex(&single, Vertex::E(0)).is_err());
        let isolated = BipGraph::build(&["v1", "v2"], &["e1", "e2"], &[("v1", "e1"), ("v2", "e1")]).unwrap();
        assert!(contract_vertex(&isolated, Vertex::E(1)).is_err());
    }

    #[test]
    fn joins_multiply() {
        let g = hexagon();
        let joined = one_point_join(&g, &g, Vertex::E(0), Vertex::E(0)).unwrap();
        assert_eq!((joined.v_count(), joined.e_count()), (6, 5));
        assert_eq!(interior(&joined), &p(&[1, 1, 1]) * &p(&[1, 1, 1]));
        let c4 = FamilySpec::cycle(2).generate().unwrap();
        let ladder = edge_join(&c4, &c4, (0, 0), (0, 0)).unwrap();
        assert_eq!(ladder.edge_count(), 7);
        assert_eq!(interior(&ladder), p(&[1, 2, 1]));
        assert!(one_point_join(&g, &g, Vertex::V(0), Vertex::E(0)).is_err());
        assert!(edge_join(&c4, &c4, (0, 0), (0, 1)).is_ok());
        let hex = hexagon();
        assert!(edge_join(&hex, &hex, (0, 1), (0, 0)).is_err());
    }

    #[test]
    fn pair_identity_on_hexagon() {
        let g = hexagon();
        // v2 is adjacent to both e1 and e2.
        let g1 = add_parallel_pair_vertices(&g, 0, 1, 1).unwrap();
        assert_eq!(g1.vertex_count(), 7);
        let gp = identify_pair(&g, 0, 1).unwrap();
        assert_eq!(interior(&g), &interior(&g1) - &interior(&gp).shift(1));
        assert!(matches!(identify_pair(&g, 1, 1), Err(Error::SameEdge(1))));
    }

    #[test]
    fn identify_opposite_vertices() {
        let c8 = FamilySpec::cycle(4).generate().unwrap();
        let theta = identify_pair(&c8, 0, 2).unwrap();
        assert_eq!(theta.e_count(), 3);
        assert_eq!(theta.nullity(), 2);
        let gp = identify_pair(&hexagon(), 0, 2).unwrap();
        assert_eq!(gp.vertex_count(), 5);
    }

    #[test]
    fn decomposition_of_k23() {
        let k23 = FamilySpec::complete_bipartite(2, 3).generate().unwrap();
        let d = balanced_decomposition(&k23).unwrap();
        assert_eq!(d.terms.len(), 2);
        assert!(d.terms.iter().all(|t| t.graph.v_count() == t.graph.e_count()));
        assert_eq!(d.reassemble(|g| Ok(interior(g))).unwrap(), interior(&k23));
        let balanced = balanced_decomposition(&hexagon()).unwrap();
        assert_eq!(balanced.terms.len(), 1);
        assert_eq!(balanced.terms[0].graph, hexagon());
    }

    #[test]
    fn decomposition_dualizes() {
        let k32 = FamilySpec::complete_bipartite(2, 4).generate().unwrap().dual();
        let d = balanced_decomposition(&k32).unwrap();
        assert!(d.dualized);
        assert_eq!(d.terms.len(), 3);
        assert_eq!(d.reassemble(|g| Ok(interior(g))).unwrap(), interior(&k32));
    }
}
