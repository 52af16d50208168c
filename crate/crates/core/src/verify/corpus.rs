//! Deterministic graph corpora for the checks.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::families::{random_connected_bipartite, FamilySpec};
use crate::graph::BipGraph;
use crate::poly::tutte::Multigraph;

/// Where a corpus graph came from; enough to regenerate it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Origin {
    Exhaustive,
    Family { spec: FamilySpec },
    Random { seed: u64, v: usize, e: usize },
    Named,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub origin: Origin,
    pub graph: BipGraph,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub description: String,
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn new(description: impl Into<String>, entries: Vec<CorpusEntry>) -> Self {
        Corpus {
            description: description.into(),
            entries,
        }
    }

    /// A corpus of one graph.
    pub fn single(entry: CorpusEntry) -> Self {
        Corpus::new(format!("single graph {}", entry.name), vec![entry])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, CorpusEntry> {
        self.entries.iter()
    }

    /// Concatenates and orders entries by size so that the first failure
    /// found is a smallest one.
    pub fn merge(description: impl Into<String>, parts: Vec<Corpus>) -> Self {
        let mut entries: Vec<CorpusEntry> = parts.into_iter().flat_map(|c| c.entries).collect();
        entries.sort_by_key(|en| (en.graph.vertex_count(), en.graph.edge_count()));
        Corpus::new(description, entries)
    }

    /// Entries accepted by `keep`, under a new description.
    pub fn filter(&self, description: impl Into<String>, keep: impl Fn(&CorpusEntry) -> bool) -> Self {
        Corpus::new(description, self.entries.iter().filter(|en| keep(en)).cloned().collect())
    }

    pub fn family_entries(&self) -> impl Iterator<Item = (&CorpusEntry, &FamilySpec)> {
        self.entries.iter().filter_map(|en| match &en.origin {
            Origin::Family { spec } => Some((en, spec)),
            _ => None,
        })
    }
}

impl CorpusEntry {
    pub fn named(name: impl Into<String>, graph: BipGraph) -> Self {
        CorpusEntry {
            name: name.into(),
            origin: Origin::Named,
            graph,
        }
    }

    fn exhaustive(graph: BipGraph) -> Self {
        CorpusEntry {
            name: String::new(),
            origin: Origin::Exhaustive,
            graph,
        }
    }

    pub fn from_family(spec: FamilySpec) -> Result<Self> {
        Ok(CorpusEntry {
            name: spec.to_string(),
            origin: Origin::Family { spec },
            graph: spec.generate()?,
        })
    }
}

/// The default corpus: every connected bipartite graph with
/// `|V| + |E| ≤ 9` up to isomorphism, the family instances, and 50 seeded
/// random graphs with `|V| + |E| ≤ 14`.
pub fn default_corpus(seed: u64) -> Result<Corpus> {
    Ok(Corpus::merge(
        format!("exhaustive |V|+|E| ≤ 9, family instances, 50 random |V|+|E| ≤ 14 (seed {seed})"),
        vec![exhaustive(9)?, family_instances()?, random_corpus(50, 14, seed)?],
    ))
}

/// A smaller corpus for quick runs: exhaustive `|V| + |E| ≤ 6` plus a
/// handful of family instances.
pub fn quick_corpus() -> Result<Corpus> {
    let families = [
        FamilySpec::cycle(3),
        FamilySpec::complete_bipartite(2, 3),
        FamilySpec::complete_bipartite(3, 3),
        FamilySpec::kmn_minus_matching(3, 3, 3),
        FamilySpec::ladder(2),
        FamilySpec::ear_graph(4, 1),
    ];
    let fam = families.into_iter().map(CorpusEntry::from_family).collect::<Result<Vec<_>>>()?;
    Ok(Corpus::merge(
        "exhaustive |V|+|E| ≤ 6 plus six family instances",
        vec![exhaustive(6)?, Corpus::new("", fam)],
    ))
}

/// Canonical form of a graph given by `E`-neighbourhood masks over `a`
/// `V`-vertices: the least sorted mask list over all relabellings of `V`.
fn canonical_masks(a: usize, masks: &[u16], perms: &[Vec<usize>]) -> Vec<u16> {
    perms
        .iter()
        .map(|p| {
            let mut out: Vec<u16> = masks
                .iter()
                .map(|&m| (0..a).filter(|&i| m >> i & 1 == 1).fold(0u16, |acc, i| acc | 1 << p[i]))
                .collect();
            out.sort_unstable();
            out
        })
        .min()
        .expect("at least the identity permutation")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn graph_from_masks(a: usize, masks: &[u16]) -> Result<BipGraph> {
    let v_names = (1..=a).map(|i| format!("v{i}")).collect();
    let e_names = (1..=masks.len()).map(|i| format!("e{i}")).collect();
    let pairs = masks
        .iter()
        .enumerate()
        .flat_map(|(e, &m)| (0..a).filter(move |&v| m >> v & 1 == 1).map(move |v| (v, e)));
    BipGraph::from_index_pairs(v_names, e_names, pairs.collect::<Vec<_>>())
}

/// All connected bipartite graphs with `|V| + |E| ≤ max_total`, one per
/// isomorphism class of graphs with labelled colour classes.
pub fn exhaustive(max_total: usize) -> Result<Corpus> {
    let mut entries = Vec::new();
    for a in 1..=max_total / 2 {
        let perms = permutations(a);
        let full = (1u16 << a) - 1;
        for b in a..=max_total - a {
            // Non-decreasing sequences of non-empty masks.
            let mut masks = vec![1u16; b];
            loop {
                if canonical_masks(a, &masks, &perms) == masks {
                    let g = graph_from_masks(a, &masks)?;
                    if g.is_connected() {
                        if a < b {
                            entries.push(CorpusEntry::exhaustive(g.dual()));
                        }
                        entries.push(CorpusEntry::exhaustive(g));
                    }
                }
                let Some(i) = (0..b).rev().find(|&i| masks[i] < full) else {
                    break;
                };
                let next = masks[i] + 1;
                for m in &mut masks[i..] {
                    *m = next;
                }
            }
        }
    }
    let mut corpus = Corpus::merge(format!("exhaustive |V|+|E| ≤ {max_total}"), vec![Corpus::new("", entries)]);
    for (i, en) in corpus.entries.iter_mut().enumerate() {
        en.name = format!("exhaustive#{i} |V|={} |E|={}", en.graph.v_count(), en.graph.e_count());
    }
    Ok(corpus)
}

/// The family instances at desk scale.
pub fn family_specs() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for n in 2..=7 {
        specs.push(FamilySpec::cycle(n));
    }
    for n in 1..=6 {
        specs.push(FamilySpec::ladder(n));
    }
    for m in 1..=4 {
        for n in m.max(2)..=5 {
            specs.push(FamilySpec::complete_bipartite(m, n));
            for q in 1..=m {
                let s = FamilySpec::kmn_minus_matching(m, n, q);
                if s.validate().is_ok() {
                    specs.push(s);
                }
            }
        }
    }
    for (v, e) in [(1, 3), (3, 4), (4, 3), (5, 5), (2, 6)] {
        specs.push(FamilySpec::tree(v, e, (v * 10 + e) as u64));
    }
    for n in 2..=5 {
        for extra in [1, 3, 16 - 2 * n] {
            specs.push(FamilySpec::unicyclic(n, extra, (n * 100 + extra) as u64));
        }
    }
    for n in 2..=7 {
        for seed in 0..4 {
            specs.push(FamilySpec::ear_graph(n, seed));
        }
    }
    specs
}

pub fn family_instances() -> Result<Corpus> {
    let entries = family_specs().into_iter().map(CorpusEntry::from_family).collect::<Result<Vec<_>>>()?;
    Ok(Corpus::new("family instances", entries))
}

/// Class sizes and seed of the `i`-th random graph under `seed`.
fn random_params(i: usize, max_total: usize, seed: u64) -> (usize, usize, u64) {
    let graph_seed = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(graph_seed);
    let total = rng.gen_range(4.min(max_total)..=max_total);
    let v = rng.gen_range(1..total);
    (v, total - v, graph_seed)
}

/// Regenerates a random corpus graph from its recorded origin.
pub fn random_graph(v: usize, e: usize, seed: u64) -> Result<BipGraph> {
    random_connected_bipartite(v, e, 1.0 / 3.0, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn random_corpus(count: usize, max_total: usize, seed: u64) -> Result<Corpus> {
    let mut entries = Vec::with_capacity(count);
    for i in 0..count {
        let (v, e, graph_seed) = random_params(i, max_total, seed);
        entries.push(CorpusEntry {
            name: format!("random#{i}[seed={seed}] |V|={v} |E|={e}"),
            origin: Origin::Random { seed: graph_seed, v, e },
            graph: random_graph(v, e, graph_seed)?,
        });
    }
    Ok(Corpus::new(format!("{count} random graphs |V|+|E| ≤ {max_total} (seed {seed})"), entries))
}

/// An ordinary graph for the Tutte comparison.
#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Multigraph,
}

fn named(name: impl Into<String>, n: usize, edges: Vec<(usize, usize)>) -> Result<NamedGraph> {
    Ok(NamedGraph {
        name: name.into(),
        graph: Multigraph::new(n, edges)?,
    })
}

/// Certificate of a simple graph: least sorted edge list over relabellings
/// that list vertices by non-increasing degree.
fn simple_certificate(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut deg = vec![0usize; n];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    let mut classes: Vec<usize> = (0..n).collect();
    classes.sort_by_key(|&v| std::cmp::Reverse(deg[v]));
    // Blocks of equal degree; relabel within each block in every order.
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for v in classes {
        match blocks.last_mut() {
            Some(b) if deg[b[0]] == deg[v] => b.push(v),
            _ => blocks.push(vec![v]),
        }
    }
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut label = vec![0usize; n];
    fn rec(
        blocks: &[Vec<usize>],
        k: usize,
        next: usize,
        label: &mut Vec<usize>,
        edges: &[(usize, usize)],
        best: &mut Option<Vec<(usize, usize)>>,
    ) {
        if k == blocks.len() {
            let mut out: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(a, b)| (label[a].min(label[b]), label[a].max(label[b])))
                .collect();
            out.sort_unstable();
            if best.as_ref().is_none_or(|b| out < *b) {
                *best = Some(out);
            }
            return;
        }
        for perm in permutations(blocks[k].len()) {
            for (i, &p) in perm.iter().enumerate() {
                label[blocks[k][i]] = next + p;
            }
            rec(blocks, k + 1, next + blocks[k].len(), label, edges, best);
        }
    }
    rec(&blocks, 0, 0, &mut label, edges, &mut best);
    best.unwrap_or_default()
}

/// Every connected simple graph with at most `max_edges` edges, up to
/// isomorphism, grown one edge at a time from a single edge.
pub fn connected_simple_graphs(max_edges: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut out = Vec::new();
    let mut level: Vec<(usize, Vec<(usize, usize)>)> = vec![(2, vec![(0, 1)])];
    for _ in 1..=max_edges {
        out.extend(level.iter().cloned());
        let mut seen: HashSet<(usize, Vec<(usize, usize)>)> = HashSet::new();
        let mut next = Vec::new();
        for (n, edges) in &level {
            let present: HashSet<(usize, usize)> = edges.iter().copied().collect();
            let mut grow = Vec::new();
            for a in 0..*n {
                for b in a + 1..*n {
                    if !present.contains(&(a, b)) {
                        grow.push((*n, (a, b)));
                    }
                }
                grow.push((n + 1, (a, *n)));
            }
            for (m, edge) in grow {
                let mut es = edges.clone();
                es.push(edge);
                let cert = simple_certificate(m, &es);
                if seen.insert((m, cert.clone())) {
                    next.push((m, cert));
                }
            }
        }
        level = next;
    }
    out
}

/// Graphs for the Tutte comparison: all connected simple graphs with at
/// most seven edges, the named small graphs, seeded random samples and a
/// few multigraphs with loops and parallel edges.
pub fn tutte_corpus(seed: u64) -> Result<Vec<NamedGraph>> {
    let mut out = Vec::new();
    for (i, (n, edges)) in connected_simple_graphs(7).into_iter().enumerate() {
        out.push(named(format!("simple#{i}"), n, edges)?);
    }
    out.push(named("triangle", 3, vec![(0, 1), (1, 2), (2, 0)])?);
    out.push(named("K4", 4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?);
    out.push(named("C5", 5, (0..5).map(|i| (i, (i + 1) % 5)).collect())?);
    for k in 1..=7 {
        out.push(named(format!("P{}", k + 1), k + 1, (0..k).map(|i| (i, i + 1)).collect())?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7u64.rotate_left(40));
    for i in 0..10 {
        let n = rng.gen_range(4..=8);
        // A random recursive tree plus random chords up to seven edges.
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
        while edges.len() < 7 {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            let (a, b) = (a.min(b), a.max(b));
            if a != b && !edges.iter().any(|&(x, y)| (x.min(y), x.max(y)) == (a, b)) {
                edges.push((a, b));
            } else if rng.gen_bool(0.2) {
                break;
            }
        }
        out.push(named(format!("sample#{i}[seed={seed}]"), n, edges)?);
    }
    out.push(named("digon", 2, vec![(0, 1), (0, 1)])?);
    out.push(named("triangle+loop", 3, vec![(0, 1), (1, 2), (2, 0), (1, 1)])?);
    out.push(named("theta", 2, vec![(0, 1), (0, 1), (0, 1)])?);
    out.push(named("path+double", 3, vec![(0, 1), (1, 2), (1, 2)])?);
    Ok(out)
}
