use std::collections::{BTreeMap, HashMap};
use std::hash::Hasher;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::corpus::{Corpus, CorpusEntry, NamedGraph, Origin};
use super::{CheckReport, Counterexample, Engine, Fault, SuiteConfig, Verdict};
use crate::activity::{profiles, EdgeOrder};
use crate::error::{Error, Result};
use crate::families::{Family, FamilySpec};
use crate::graph::{BipGraph, Side, Vertex};
use crate::hypertree::{
    can_transfer, enumerate_by_polymatroid, enumerate_by_tree_search, greedy_exterior_hypertree,
    is_hypertree_by_tree_search, HypertreeSet, TightSets,
};
use crate::activity::{internal_inactive_in, external_inactive_in};
use crate::poly::tutte::{exterior_from_tutte, interior_from_tutte};
use crate::poly::{first_gap, IntPoly};
use crate::transforms::{
    add_parallel_pair_vertices, add_pendant, balanced_decomposition, contract_vertex, delete_valence1,
    delete_vertex, edge_join, identify_pair, one_point_join,
};

type Counters = BTreeMap<&'static str, usize>;

fn bump(c: &mut Counters, key: &'static str, by: usize) {
    *c.entry(key).or_default() += by;
}

/// What went wrong on one corpus entry.
struct Failure {
    detail: String,
    order: Option<Vec<String>>,
    hypertree: Option<Vec<u32>>,
    polynomial: Option<IntPoly>,
}

impl Failure {
    fn new(detail: impl Into<String>) -> Self {
        Failure {
            detail: detail.into(),
            order: None,
            hypertree: None,
            polynomial: None,
        }
    }

    fn order(mut self, g: &BipGraph, order: &EdgeOrder) -> Self {
        self.order = Some(order.labels(g.e_names()).into_iter().map(str::to_owned).collect());
        self
    }

    fn hypertree(mut self, f: &[u32]) -> Self {
        self.hypertree = Some(f.to_vec());
        self
    }

    fn poly(mut self, p: &IntPoly) -> Self {
        self.polynomial = Some(p.clone());
        self
    }
}

fn counterexample(entry: &CorpusEntry, f: Failure) -> Counterexample {
    Counterexample {
        entry: entry.name.clone(),
        origin: entry.origin.clone(),
        graph: entry.graph.to_file(),
        order: f.order,
        hypertree: f.hypertree,
        polynomial: f.polynomial,
        detail: f.detail,
    }
}

fn report(name: &str, corpus: &str, counters: Counters, cx: Option<Counterexample>) -> CheckReport {
    let instances = counters.get("instances").copied().unwrap_or(0);
    CheckReport {
        name: name.to_owned(),
        corpus: corpus.to_owned(),
        instances,
        verdict: if cx.is_some() { Verdict::Fail } else { Verdict::Pass },
        counterexample: cx,
        notes: counters
            .into_iter()
            .filter(|(k, _)| *k != "instances")
            .map(|(k, v)| format!("{k}: {v}"))
            .collect(),
    }
}

/// Visits entries in order and stops at the first failure.
fn scan(
    name: &str,
    corpus: &Corpus,
    mut visit: impl FnMut(&CorpusEntry, &mut Counters) -> Result<Option<Failure>>,
) -> Result<CheckReport> {
    let mut counters = Counters::new();
    for entry in corpus.iter() {
        if let Some(f) = visit(entry, &mut counters)? {
            return Ok(report(name, &corpus.description, counters, Some(counterexample(entry, f))));
        }
    }
    Ok(report(name, &corpus.description, counters, None))
}

/// A seed that depends only on the graph, so replays see the same orders.
fn graph_seed(seed: u64, g: &BipGraph) -> u64 {
    let mut h = std::collections::hash_map::DefaultHasher::new();
    h.write(g.to_json().as_bytes());
    seed ^ h.finish()
}

/// Breadth-first transfer closure against both brute-force enumerations,
/// and a validated witness tree for every member.
pub fn check_enumeration_oracles(engine: &Engine, corpus: &Corpus) -> Result<CheckReport> {
    scan("enumeration_oracles", corpus, |en, c| {
        let g = &en.graph;
        let bfs = &engine.compute(g)?.hypertrees;
        bump(c, "instances", 1);
        for (label, other) in [
            ("tree-search brute force", enumerate_by_tree_search(g)?),
            ("polymatroid brute force", enumerate_by_polymatroid(g)?),
        ] {
            if *bfs == other {
                continue;
            }
            let detail = format!("transfer closure has {} hypertrees, {label} has {}", bfs.len(), other.len());
            let witness = other
                .iter()
                .find(|f| !bfs.contains(f.values()))
                .or_else(|| bfs.iter().find(|f| !other.contains(f.values())));
            let mut fail = Failure::new(detail);
            if let Some(f) = witness {
                fail = fail.hypertree(f.values());
            }
            return Ok(Some(fail));
        }
        for f in bfs {
            let ok = match is_hypertree_by_tree_search(g, f.values())? {
                Some(tau) => tau.validate(g, f.values()).is_ok(),
                None => false,
            };
            if !ok {
                return Ok(Some(Failure::new("member without a valid witness tree").hypertree(f.values())));
            }
        }
        bump(c, "hypertrees", bfs.len());
        Ok(None)
    })
}

/// The supports of `I` and `X` have no gaps.
pub fn check_interpolating(engine: &Engine, corpus: &Corpus) -> Result<CheckReport> {
    scan("interpolating", corpus, |en, c| {
        let comp = engine.compute(&en.graph)?;
        for (label, p) in [("I", &comp.interior), ("X", &comp.exterior)] {
            bump(c, "instances", 1);
            if p.is_zero() {
                return Ok(Some(Failure::new(format!("{label} is zero")).poly(p)));
            }
            if let Some(k) = first_gap(p) {
                return Ok(Some(
                    Failure::new(format!("{label} = {} has a gap at exponent {k}", p.render(var(label)))).poly(p),
                ));
            }
        }
        Ok(None)
    })
}

fn var(label: &str) -> &'static str {
    if label.starts_with('X') {
        "y"
    } else {
        "x"
    }
}

/// Components of `G - {a, b}` for every pair of the given class.
fn two_cuts(g: &BipGraph, side: Side) -> Vec<(usize, usize, usize)> {
    let n = g.class_size(side);
    let mk = |i| match side {
        Side::V => Vertex::V(i),
        Side::E => Vertex::E(i),
    };
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            out.push((a, b, g.component_count_without(&[mk(a), mk(b)])));
        }
    }
    out
}

/// Largest `Σ (t_i - 2)` over families of disjoint pairs, by a subset DP.
fn best_disjoint_family(size: usize, cuts: &[(usize, usize, usize)]) -> usize {
    let weight: HashMap<(usize, usize), usize> = cuts
        .iter()
        .filter(|&&(_, _, t)| t > 2)
        .map(|&(a, b, t)| ((a, b), t - 2))
        .collect();
    if weight.is_empty() {
        return 0;
    }
    let full = (1usize << size) - 1;
    let mut best = vec![0usize; full + 1];
    for mask in 1..=full {
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut value = best[rest];
        for (&(a, b), &w) in &weight {
            if a == i && rest >> b & 1 == 1 {
                value = value.max(w + best[rest & !(1 << b)]);
            }
        }
        best[mask] = value;
    }
    best[full]
}

/// Degree bounds: the basic one, the 2-cut strengthening on either side,
/// the vanishing top coefficient for balanced graphs with a 2-cut of at
/// least three components, and the disjoint-cut-family bound when it is
/// stronger than the basic one.
pub fn check_degree_bounds(engine: &Engine, corpus: &Corpus) -> Result<CheckReport> {
    scan("degree_bounds", corpus, |en, c| {
        let g = &en.graph;
        let interior = engine.interior(g)?;
        let d = interior.degree()?;
        let (nv, ne) = (g.v_count(), g.e_count());
        bump(c, "instances", 1);
        let basic = (ne - 1).min(nv - 1);
        if d > basic {
            return Ok(Some(
                Failure::new(format!("deg I = {d} exceeds min(|E|-1, |V|-1) = {basic}")).poly(&interior),
            ));
        }
        let mut best = [0usize; 2];
        for (k, side) in [Side::E, Side::V].into_iter().enumerate() {
            let cuts = two_cuts(g, side);
            for &(a, b, t) in cuts.iter().filter(|&&(_, _, t)| t >= 2) {
                bump(c, "2-cuts", 1);
                // t ≤ |other class| + 1 for a genuine cut, so no underflow.
                let bound = match side {
                    Side::E => (ne - 1).min((nv + 1).saturating_sub(t)),
                    Side::V => (ne + 1).saturating_sub(t).min(nv - 1),
                };
                let names = match side {
                    Side::E => g.e_names(),
                    Side::V => g.v_names(),
                };
                if d > bound {
                    return Ok(Some(
                        Failure::new(format!(
                            "deg I = {d} exceeds {bound} for the 2-cut {{{}, {}}} in {side} with {t} components",
                            names[a], names[b]
                        ))
                        .poly(&interior),
                    ));
                }
                if nv == ne && t >= 3 {
                    bump(c, "balanced with a 3-component 2-cut", 1);
                    if !interior.coeff(nv - 1).is_zero() {
                        return Ok(Some(
                            Failure::new(format!(
                                "balanced with 2-cut {{{}, {}}} in {side} of {t} components, yet [x^{}]I ≠ 0",
                                names[a],
                                names[b],
                                nv - 1
                            ))
                            .poly(&interior),
                        ));
                    }
                }
            }
            best[k] = best_disjoint_family(g.class_size(side), &cuts);
        }
        // best[0] is the E-side family (k_i), best[1] the V-side one (t_i).
        let general = (ne - 1).saturating_sub(best[1]).min((nv - 1).saturating_sub(best[0]));
        if general < basic {
            bump(c, "cut-family bound binding", 1);
            if d > general {
                return Ok(Some(
                    Failure::new(format!("deg I = {d} exceeds the cut-family bound {general}")).poly(&interior),
                ));
            }
        }
        Ok(None)
    })
}

/// Constant terms 1, `[x]I = n(G)`, and `[y]X = |V| - 1` when every `G - e`
/// is connected.
pub fn check_linear_coefficients(engine: &Engine, corpus: &Corpus) -> Result<CheckReport> {
    scan("linear_coefficients", corpus, |en, c| {
        let g = &en.graph;
        let comp = engine.compute(g)?;
        bump(c, "instances", 1);
        for (label, p) in [("I", &comp.interior), ("X", &comp.exterior)] {
            if !p.coeff(0).is_one() {
                return Ok(Some(Failure::new(format!("constant term of {label} is {}", p.coeff(0))).poly(p)));
            }
        }
        let nullity = BigInt::from(g.nullity());
        if comp.interior.coeff(1) != nullity {
            return Ok(Some(
                Failure::new(format!("[x]I = {} but n(G) = {nullity}", comp.interior.coeff(1))).poly(&comp.interior),
            ));
        }
        let robust = (0..g.e_count()).all(|e| g.component_count_without(&[Vertex::E(e)]) == 1);
        if robust {
            bump(c, "G - e connected for all e", 1);
            let want = BigInt::from(g.v_count() - 1);
            if comp.exterior.coeff(1) != want {
                return Ok(Some(
                    Failure::new(format!("[y]X = {} but |V| - 1 = {want}", comp.exterior.coeff(1)))
                        .poly(&comp.exterior),
                ));
            }
        }
        Ok(None)
    })
}

/// Order invariance of `I` and `X`, dual invariance of `I`, and the
/// recorded asymmetry of `X` on `K_{2,3}`.
pub fn check_invariance(engine: &Engine, corpus: &Corpus, orders: usize, seed: u64) -> Result<CheckReport> {
    let mut out = scan("invariance", corpus, |en, c| {
        let g = &en.graph;
        let base = engine.compute(g)?;
        let mut rng = ChaCha8Rng::seed_from_u64(graph_seed(seed, g));
        bump(c, "instances", 1);
        for _ in 0..orders {
            let order = EdgeOrder::random(g.e_count(), &mut rng);
            let (i, xp) = engine.polynomials_under(g, &order)?;
            bump(c, "orders", 1);
            if i != base.interior {
                return Ok(Some(
                    Failure::new(format!("I = {i} under this order, {} under the identity", base.interior))
                        .order(g, &order)
                        .poly(&i),
                ));
            }
            if xp != base.exterior {
                return Ok(Some(
                    Failure::new(format!(
                        "X = {} under this order, {} under the identity",
                        xp.render("y"),
                        base.exterior.render("y")
                    ))
                    .order(g, &order)
                    .poly(&xp),
                ));
            }
        }
        let dual = g.dual();
        let di = engine.interior(&dual)?;
        if di != base.interior {
            return Ok(Some(
                Failure::new(format!("I = {} but the dual has I = {di}", base.interior)).poly(&di),
            ));
        }
        if engine.exterior(&dual)? != base.exterior {
            bump(c, "graphs with X(G) ≠ X(dual)", 1);
        }
        Ok(None)
    })?;
    if out.passed() {
        let en = CorpusEntry::from_family(FamilySpec::complete_bipartite(2, 3))?;
        let on_e = engine.exterior(&en.graph)?;
        let on_v = engine.exterior(&en.graph.dual())?;
        let expect_e = IntPoly::from_coeffs(vec![1, 1, 1]);
        let expect_v = IntPoly::from_coeffs(vec![1, 2]);
        if on_e != expect_e || on_v != expect_v {
            out.verdict = Verdict::Fail;
            out.counterexample = Some(counterexample(
                &en,
                Failure::new(format!(
                    "expected X = 1 + y + y^2 on the 3-side and 1 + 2y on the 2-side, got {} and {}",
                    on_e.render("y"),
                    on_v.render("y")
                ))
                .poly(&on_e),
            ));
        } else {
            out.notes.push(format!(
                "K_{{2,3}} exterior asymmetry: {} (E side) vs {} (V side)",
                on_e.render("y"),
                on_v.render("y")
            ));
        }
    }
    Ok(out)
}

/// Deletion and contraction recursions, pendant insensitivity, join
/// multiplicativity, the pair identity, the balanced decomposition and the
/// quadratic-coefficient identity.
pub fn check_recursions(engine: &Engine, corpus: &Corpus) -> Result<CheckReport> {
    let partners: Vec<BipGraph> = [FamilySpec::cycle(2), FamilySpec::cycle(3), FamilySpec::complete_bipartite(2, 3)]
        .iter()
        .map(FamilySpec::generate)
        .collect::<Result<_>>()?;
    scan("recursions", corpus, |en, c| {
        let g = &en.graph;
        let (i_g, x_g) = (engine.interior(g)?, engine.exterior(g)?);
        bump(c, "instances", 1);
        let same = |h: &BipGraph, what: String| -> Result<Option<Failure>> {
            let (i_h, x_h) = (engine.interior(h)?, engine.exterior(h)?);
            if i_h != i_g || x_h != x_g {
                return Ok(Some(Failure::new(format!(
                    "{what}: I {} → {i_h}, X {} → {}",
                    i_g,
                    x_g.render("y"),
                    x_h.render("y")
                ))));
            }
            Ok(None)
        };
        for u in g.vertices() {
            let d = g.degree(u);
            let class = g.class_size(u.side());
            if d == 1 && class > 1 {
                bump(c, "valence-1 deletions", 1);
                if let Some(f) = same(&delete_valence1(g, u)?, format!("deleting the leaf `{}`", g.name(u)))? {
                    return Ok(Some(f));
                }
            }
            if d == 2 && class > 1 {
                let deleted = delete_vertex(g, u)?;
                let contracted = contract_vertex(g, u)?;
                if deleted.is_connected() {
                    bump(c, "valence-2 interior recursions", 1);
                    let rhs = &engine.interior(&deleted)? + &engine.interior(&contracted)?.shift(1);
                    if rhs != i_g {
                        return Ok(Some(
                            Failure::new(format!(
                                "I(G) = {i_g} but I(G\\{u}) + x I(G/{u}) = {rhs}",
                                u = g.name(u)
                            ))
                            .poly(&rhs),
                        ));
                    }
                }
                if let Vertex::E(_) = u {
                    bump(c, "degree-2 exterior recursions", 1);
                    // Without connectivity of G\e it has no hypertrees, so
                    // the recursion reads X(G) = X(G/e).
                    let mut rhs = engine.exterior(&contracted)?;
                    if deleted.is_connected() {
                        rhs = &rhs + &engine.exterior(&deleted)?.shift(1);
                    } else {
                        bump(c, "degree-2 exterior recursions with G\\e disconnected", 1);
                    }
                    if rhs != x_g {
                        return Ok(Some(
                            Failure::new(format!(
                                "X(G) = {} but y X(G\\{u}) + X(G/{u}) = {}",
                                x_g.render("y"),
                                rhs.render("y"),
                                u = g.name(u)
                            ))
                            .poly(&rhs),
                        ));
                    }
                }
            }
        }
        for u in [Vertex::V(0), Vertex::E(0)] {
            bump(c, "pendant insertions", 1);
            if let Some(f) = same(&add_pendant(g, u)?, format!("adding a leaf at `{}`", g.name(u)))? {
                return Ok(Some(f));
            }
        }
        let (v0, e0) = g.edges().next().expect("connected graphs have an edge");
        for p in &partners {
            let (i_p, x_p) = (engine.interior(p)?, engine.exterior(p)?);
            let want = (&i_g * &i_p, &x_g * &x_p);
            let joins = [
                ("vertex join at V", one_point_join(g, p, Vertex::V(0), Vertex::V(0))?),
                ("vertex join at E", one_point_join(g, p, Vertex::E(0), Vertex::E(0))?),
                ("edge join", edge_join(g, p, (v0, e0), (0, 0))?),
            ];
            for (what, h) in joins {
                bump(c, "joins", 1);
                let got = (engine.interior(&h)?, engine.exterior(&h)?);
                if got != want {
                    return Ok(Some(Failure::new(format!(
                        "{what} with {}: I = {}, X = {}; products give {} and {}",
                        p.to_json(),
                        got.0,
                        got.1.render("y"),
                        want.0,
                        want.1.render("y")
                    ))));
                }
            }
        }
        if g.e_count() >= 2 {
            let merged = identify_pair(g, 0, 1)?;
            let i_m = engine.interior(&merged)?;
            for t in 1..=2usize {
                bump(c, "pair identity instances", 1);
                let gt = add_parallel_pair_vertices(g, 0, 1, t)?;
                let rhs = &engine.interior(&gt)? - &i_m.scale(&BigInt::from(t)).shift(1);
                if rhs != i_g {
                    return Ok(Some(
                        Failure::new(format!("I(G) = {i_g} but I(G_{t}) - {t}x I(G') = {rhs}")).poly(&rhs),
                    ));
                }
            }
            // Pairs with equal common neighbourhoods give equal [x^2] in G_1.
            let mut by_common: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
            for a in 0..g.e_count() {
                for b in a + 1..g.e_count() {
                    let common = g.e_neighbors(a).iter().filter(|v| g.e_neighbors(b).contains(v)).count();
                    match by_common.get(&common) {
                        None => {
                            by_common.insert(common, (a, b));
                        }
                        Some(&(a0, b0)) if a0 != usize::MAX => {
                            let q1 = engine.interior(&add_parallel_pair_vertices(g, a0, b0, 1)?)?.coeff(2);
                            let q2 = engine.interior(&add_parallel_pair_vertices(g, a, b, 1)?)?.coeff(2);
                            bump(c, "quadratic-coefficient comparisons", 1);
                            if q1 != q2 {
                                return Ok(Some(Failure::new(format!(
                                    "pairs ({}, {}) and ({}, {}) share {common} neighbours but [x^2] of G_1 is {q1} vs {q2}",
                                    g.e_names()[a0],
                                    g.e_names()[b0],
                                    g.e_names()[a],
                                    g.e_names()[b]
                                ))));
                            }
                            // One comparison per common size is enough.
                            by_common.insert(common, (usize::MAX, usize::MAX));
                        }
                        _ => {}
                    }
                }
            }
        }
        if g.v_count().abs_diff(g.e_count()) <= 3 {
            bump(c, "balanced decompositions", 1);
            let d = balanced_decomposition(g)?;
            if let Some(t) = d.terms.iter().find(|t| t.graph.v_count() != t.graph.e_count()) {
                return Ok(Some(Failure::new(format!("unbalanced term graph {}", t.graph.to_json()))));
            }
            let re = d.reassemble(|h| engine.interior(h))?;
            if re != i_g {
                return Ok(Some(
                    Failure::new(format!("I(G) = {i_g} but the decomposition reassembles to {re}")).poly(&re),
                ));
            }
        }
        Ok(None)
    })
}

/// Interior and exterior polynomials of subdivisions against the Tutte
/// specialisations.
pub fn check_tutte(engine: &Engine, graphs: &[NamedGraph], description: &str) -> Result<CheckReport> {
    let mut counters = Counters::new();
    for ng in graphs {
        if !ng.graph.is_connected() || ng.graph.edge_count() > 7 {
            bump(&mut counters, "skipped", 1);
            continue;
        }
        let sub = ng.graph.subdivision()?;
        bump(&mut counters, "instances", 1);
        let pairs = [
            ("interior", engine.interior(&sub)?, interior_from_tutte(&ng.graph)?, "x"),
            ("exterior", engine.exterior(&sub)?, exterior_from_tutte(&ng.graph)?, "y"),
        ];
        for (what, ours, theirs, v) in pairs {
            if ours != theirs {
                let entry = CorpusEntry {
                    name: ng.name.clone(),
                    origin: Origin::Named,
                    graph: sub,
                };
                let f = Failure::new(format!(
                    "{what}: {} from hypertrees, {} from the Tutte polynomial",
                    ours.render(v),
                    theirs.render(v)
                ))
                .poly(&ours);
                return Ok(report("tutte", description, counters, Some(counterexample(&entry, f))));
            }
        }
    }
    Ok(report("tutte", description, counters, None))
}

/// `f_i`: one at every hyperedge except a zero at `i`.
fn all_ones_but(n: usize, i: usize) -> Vec<u32> {
    let mut f = vec![1; n];
    f[i] = 0;
    f
}

/// Ear graphs are balanced, 2-connected and have monic `I` of degree
/// `n - 1`; every balanced graph has `[x^{n-1}]I ≤ 1`, nonzero exactly when
/// every `f_i` is a hypertree.
pub fn check_monic_ear(engine: &Engine, corpus: &Corpus) -> Result<CheckReport> {
    scan("monic_ear", corpus, |en, c| {
        let g = &en.graph;
        let (nv, ne) = (g.v_count(), g.e_count());
        if let Origin::Family {
            spec: spec @ FamilySpec { family: Family::EarGraph { .. }, .. },
        } = &en.origin
        {
            bump(c, "ear graphs", 1);
            let (regen, ears) = spec.generate_with_ears()?;
            if regen != *g {
                return Ok(Some(Failure::new("graph differs from its regenerated ear decomposition")));
            }
            if !ears.is_class_crossing() || nv != ne {
                return Ok(Some(Failure::new("ear decomposition is not balanced and class-crossing")));
            }
            if let Some(u) = g.vertices().find(|&u| g.component_count_without(&[u]) != 1) {
                return Ok(Some(Failure::new(format!("`{}` is a cut vertex", g.name(u)))));
            }
            let i = engine.interior(g)?;
            if i.degree()? != nv - 1 || !i.coeff(nv - 1).is_one() {
                return Ok(Some(Failure::new(format!("I = {i} is not monic of degree {}", nv - 1)).poly(&i)));
            }
        }
        if nv == ne {
            bump(c, "instances", 1);
            let comp = engine.compute(g)?;
            let top = comp.interior.coeff(nv - 1);
            if top > BigInt::one() {
                return Ok(Some(Failure::new(format!("[x^{}]I = {top} exceeds 1", nv - 1)).poly(&comp.interior)));
            }
            let missing = (0..ne).map(|i| all_ones_but(ne, i)).find(|f| !comp.hypertrees.contains(f));
            if top.is_zero() != missing.is_some() {
                let mut f = Failure::new(format!(
                    "[x^{}]I = {top} but the all-ones-but-one vectors are {}",
                    nv - 1,
                    if missing.is_some() { "not all hypertrees" } else { "all hypertrees" }
                ))
                .poly(&comp.interior);
                if let Some(m) = missing {
                    f = f.hypertree(&m);
                }
                return Ok(Some(f));
            }
        }
        Ok(None)
    })
}

/// Membership-based and tight-set activity agree, transfers satisfy the
/// tightness criterion and transitivity, and the exterior greedy
/// hypertree is the unique one with no external inactivity.
pub fn check_activity(engine: &Engine, corpus: &Corpus, seed: u64) -> Result<CheckReport> {
    const MAX_E: usize = 8;
    const MAX_E_TRANSITIVITY: usize = 6;
    scan("activity", corpus, |en, c| {
        let g = &en.graph;
        let ne = g.e_count();
        if ne > MAX_E {
            bump(c, "skipped (|E| > 8)", 1);
            return Ok(None);
        }
        let b: &HypertreeSet = &engine.compute(g)?.hypertrees;
        bump(c, "instances", 1);
        let mut rng = ChaCha8Rng::seed_from_u64(graph_seed(seed, g));
        let orders = [EdgeOrder::identity(ne), EdgeOrder::random(ne, &mut rng)];
        let tights: Vec<TightSets> = b.iter().map(|f| TightSets::compute(g, f.values())).collect::<Result<_>>()?;
        for order in &orders {
            let profs = profiles(b, order)?;
            for (p, tight) in profs.iter().zip(&tights) {
                let f = p.hypertree.values();
                for e in 0..ne {
                    bump(c, "activity comparisons", 2);
                    if p.internally_inactive[e] != internal_inactive_in(tight, f, order, e)
                        || p.externally_inactive[e] != external_inactive_in(tight, f, order, e)
                    {
                        return Ok(Some(
                            Failure::new(format!(
                                "activity of `{}` differs between definitions",
                                g.e_names()[e]
                            ))
                            .order(g, order)
                            .hypertree(f),
                        ));
                    }
                }
            }
            let greedy = greedy_exterior_hypertree(g, order)?;
            let zero: Vec<&[u32]> =
                profs.iter().filter(|p| p.external_inactivity() == 0).map(|p| p.hypertree.values()).collect();
            if zero != [greedy.values()] {
                return Ok(Some(
                    Failure::new(format!("{} hypertrees with no external inactivity, greedy is {greedy}", zero.len()))
                        .order(g, order)
                        .hypertree(greedy.values()),
                ));
            }
            let t = TightSets::compute(g, greedy.values())?;
            let ranked = order.ranked();
            for k in 0..ne {
                let mask = ranked[k..].iter().fold(0u64, |m, &e| m | 1 << e);
                if !t.is_tight(mask) {
                    return Ok(Some(
                        Failure::new(format!("suffix from `{}` is not tight at the greedy hypertree", g.e_names()[ranked[k]]))
                            .order(g, order)
                            .hypertree(greedy.values()),
                    ));
                }
            }
        }
        for (f, tight) in b.iter().zip(&tights) {
            let f = f.values();
            let mut can = vec![vec![false; ne]; ne];
            for a in 0..ne {
                for d in 0..ne {
                    if a == d {
                        continue;
                    }
                    can[a][d] = can_transfer(b, f, a, d)?;
                    let by_tight = f[a] != 0 && !tight.separates(d, a);
                    bump(c, "transfer criterion comparisons", 1);
                    if can[a][d] != by_tight {
                        return Ok(Some(
                            Failure::new(format!(
                                "transfer `{}` → `{}` is {} but the tight-set criterion says {}",
                                g.e_names()[a],
                                g.e_names()[d],
                                can[a][d],
                                by_tight
                            ))
                            .hypertree(f),
                        ));
                    }
                }
            }
            if ne <= MAX_E_TRANSITIVITY {
                for a in 0..ne {
                    for m in 0..ne {
                        for z in 0..ne {
                            if a != m && m != z && a != z && can[a][m] && can[m][z] {
                                bump(c, "transitivity premises", 1);
                                if !can[a][z] {
                                    return Ok(Some(
                                        Failure::new(format!(
                                            "`{}` → `{}` → `{}` but not `{}` → `{}`",
                                            g.e_names()[a],
                                            g.e_names()[m],
                                            g.e_names()[z],
                                            g.e_names()[a],
                                            g.e_names()[z]
                                        ))
                                        .hypertree(f),
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    })
}

/// Family instances against their closed forms, and ladders against the
/// chained edge join of squares.
pub fn check_closed_forms(engine: &Engine, corpus: &Corpus) -> Result<CheckReport> {
    let square = FamilySpec::cycle(2).generate()?;
    scan("closed_forms", corpus, |en, c| {
        let Origin::Family { spec } = &en.origin else {
            return Ok(None);
        };
        let g = &en.graph;
        let comp = engine.compute(g)?;
        for (what, closed, ours, v) in [
            ("I", spec.closed_form_interior(), &comp.interior, "x"),
            ("X", spec.closed_form_exterior(), &comp.exterior, "y"),
        ] {
            match closed {
                Ok(p) => {
                    bump(c, "instances", 1);
                    if p != *ours {
                        return Ok(Some(
                            Failure::new(format!("{what} = {} but the closed form is {}", ours.render(v), p.render(v)))
                                .poly(ours),
                        ));
                    }
                }
                Err(Error::NoClosedForm(_)) => bump(c, "no closed form", 1),
                Err(e) => return Err(e),
            }
        }
        if let Family::Ladder { n } = spec.family {
            let mut chain = square.clone();
            for _ in 1..n {
                let far = (chain.v_count() - 1, chain.e_count() - 1);
                chain = edge_join(&chain, &square, far, (0, 0))?;
            }
            bump(c, "ladder joins", 1);
            let mut da: Vec<usize> = chain.vertices().map(|u| chain.degree(u)).collect();
            let mut db: Vec<usize> = g.vertices().map(|u| g.degree(u)).collect();
            da.sort_unstable();
            db.sort_unstable();
            let cc = engine.compute(&chain)?;
            if da != db || cc.interior != comp.interior || cc.exterior != comp.exterior {
                return Ok(Some(Failure::new(format!(
                    "edge join of {n} squares gives I = {}, X = {}",
                    cc.interior,
                    cc.exterior.render("y")
                ))));
            }
        }
        Ok(None)
    })
}

/// Corrupted fixtures must fail their checks, and the failure must
/// replay. Passes when every control fails as intended.
pub fn negative_controls() -> Result<CheckReport> {
    let config = SuiteConfig {
        quick: true,
        ..SuiteConfig::default()
    };
    let edge = CorpusEntry::from_family(FamilySpec::complete_bipartite(1, 1))?;
    let hexagon = CorpusEntry::from_family(FamilySpec::cycle(3))?;
    let mut counters = Counters::new();
    let controls: [(&str, Fault, &CorpusEntry); 4] = [
        ("interpolating", Fault::GapPolynomial, &edge),
        ("interpolating", Fault::GapPolynomial, &hexagon),
        ("enumeration_oracles", Fault::DropHypertree, &hexagon),
        ("closed_forms", Fault::DropHypertree, &hexagon),
    ];
    for (check, fault, entry) in controls {
        bump(&mut counters, "instances", 1);
        let engine = Engine::with_fault(fault);
        let corpus = Corpus::single(entry.clone());
        let got = super::run_check(check, &engine, &corpus, &config, None)?;
        let replays = !got.passed() && super::replay(&got, &Engine::with_fault(fault), &config)?;
        if !replays {
            let f = Failure::new(format!(
                "`{check}` with fault {fault:?} on {} {}",
                entry.name,
                if got.passed() { "passed" } else { "failed but did not replay" }
            ));
            return Ok(report("negative_controls", "corrupted fixtures", counters, Some(counterexample(entry, f))));
        }
        bump(&mut counters, "controls failing as intended", 1);
    }
    Ok(report("negative_controls", "corrupted fixtures", counters, None))
}
