//! Named graph families with known interior and exterior polynomials.
//!
//! Every generator labels `V` as `v1, v2, ...` and `E` as `e1, e2, ...`,
//! with `E` as the hyperedge class. Random families are driven by a
//! ChaCha8 generator so a seed fully determines the graph.

use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::BipGraph;
use crate::poly::{binomial, IntPoly};

/// A family and its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// A random tree with `v` vertices in `V` and `e` in `E`.
    Tree { v: usize, e: usize },
    /// The cycle `C_{2n}`.
    Cycle { n: usize },
    /// `C_{2n}` with `extra` pendant vertices grown at random.
    Unicyclic { n: usize, extra: usize },
    /// The ladder `P_{n+1} × P_2`.
    Ladder { n: usize },
    /// `K_{m,n}` with `|V| = m` and `|E| = n`.
    CompleteBipartite { m: usize, n: usize },
    /// `K_{m,n}` minus a matching of `q` edges.
    KmnMinusMatching { m: usize, n: usize, q: usize },
    /// A balanced graph on `n + n` vertices built from an even cycle by
    /// odd ears running from `V` to `E`.
    EarGraph { n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    #[serde(flatten)]
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// One ear of an [`EarDecomposition`]: a path with `length` edges from an
/// existing `V`-vertex to an existing `E`-vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ear {
    pub from: String,
    pub to: String,
    pub length: usize,
}

/// How an ear graph was grown: the starting cycle `C_{2k}` and its ears.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EarDecomposition {
    pub cycle_half_length: usize,
    pub ears: Vec<Ear>,
}

impl EarDecomposition {
    /// Every ear has odd length at least 3, hence joins the two classes.
    pub fn is_class_crossing(&self) -> bool {
        self.ears.iter().all(|ear| ear.length >= 3 && ear.length % 2 == 1)
    }
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        FamilySpec { family, seed: None }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn tree(v: usize, e: usize, seed: u64) -> Self {
        FamilySpec::new(Family::Tree { v, e }).with_seed(seed)
    }

    pub fn cycle(n: usize) -> Self {
        FamilySpec::new(Family::Cycle { n })
    }

    pub fn unicyclic(n: usize, extra: usize, seed: u64) -> Self {
        FamilySpec::new(Family::Unicyclic { n, extra }).with_seed(seed)
    }

    pub fn ladder(n: usize) -> Self {
        FamilySpec::new(Family::Ladder { n })
    }

    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        FamilySpec::new(Family::CompleteBipartite { m, n })
    }

    pub fn kmn_minus_matching(m: usize, n: usize, q: usize) -> Self {
        FamilySpec::new(Family::KmnMinusMatching { m, n, q })
    }

    pub fn ear_graph(n: usize, seed: u64) -> Self {
        FamilySpec::new(Family::EarGraph { n }).with_seed(seed)
    }

    pub fn tag(&self) -> &'static str {
        match self.family {
            Family::Tree { .. } => "tree",
            Family::Cycle { .. } => "cycle",
            Family::Unicyclic { .. } => "unicyclic",
            Family::Ladder { .. } => "ladder",
            Family::CompleteBipartite { .. } => "complete_bipartite",
            Family::KmnMinusMatching { .. } => "kmn_minus_matching",
            Family::EarGraph { .. } => "ear_graph",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match self.family {
            Family::Tree { v, e } => vec![v, e],
            Family::Cycle { n } | Family::Ladder { n } | Family::EarGraph { n } => vec![n],
            Family::Unicyclic { n, extra } => vec![n, extra],
            Family::CompleteBipartite { m, n } => vec![m, n],
            Family::KmnMinusMatching { m, n, q } => vec![m, n, q],
        }
    }

    fn is_random(&self) -> bool {
        matches!(
            self.family,
            Family::Tree { .. } | Family::Unicyclic { .. } | Family::EarGraph { .. }
        )
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.unwrap_or(0))
    }

    /// Parses `<tag> <params...> [--seed N]`.
    pub fn parse<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let tokens: Vec<&str> = tokens.iter().map(AsRef::as_ref).collect();
        let (tag, rest) = tokens
            .split_first()
            .ok_or_else(|| Error::InvalidFamily("missing family tag".into()))?;
        let mut params = Vec::new();
        let mut seed = None;
        let mut i = 0;
        while i < rest.len() {
            if rest[i] == "--seed" {
                let raw = rest
                    .get(i + 1)
                    .ok_or_else(|| Error::InvalidFamily("--seed needs a value".into()))?;
                seed = Some(raw.parse::<u64>().map_err(|_| {
                    Error::InvalidFamily(format!("seed `{raw}` is not a non-negative integer"))
                })?);
                i += 2;
                continue;
            }
            params.push(rest[i].parse::<usize>().map_err(|_| {
                Error::InvalidFamily(format!("parameter `{}` is not a non-negative integer", rest[i]))
            })?);
            i += 1;
        }
        let arity = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidFamily(format!(
                    "`{tag}` takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let family = match *tag {
            "tree" => {
                arity(2)?;
                Family::Tree { v: params[0], e: params[1] }
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle { n: params[0] }
            }
            "unicyclic" => {
                arity(2)?;
                Family::Unicyclic { n: params[0], extra: params[1] }
            }
            "ladder" => {
                arity(1)?;
                Family::Ladder { n: params[0] }
            }
            "complete_bipartite" => {
                arity(2)?;
                Family::CompleteBipartite { m: params[0], n: params[1] }
            }
            "kmn_minus_matching" => {
                arity(3)?;
                Family::KmnMinusMatching { m: params[0], n: params[1], q: params[2] }
            }
            "ear_graph" => {
                arity(1)?;
                Family::EarGraph { n: params[0] }
            }
            other => return Err(Error::InvalidFamily(format!("unknown family `{other}`"))),
        };
        Ok(FamilySpec { family, seed })
    }

    /// Checks the parameter ranges.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        match self.family {
            Family::Tree { v, e } if v == 0 || e == 0 => {
                bad("a tree needs both classes non-empty".into())
            }
            Family::Cycle { n } | Family::Unicyclic { n, .. } if n < 2 => {
                bad(format!("cycle half-length must be at least 2, got {n}"))
            }
            Family::Ladder { n } if n < 1 => bad("ladder needs n ≥ 1".into()),
            Family::CompleteBipartite { m, n } if m == 0 || m > n => {
                bad(format!("complete_bipartite needs 1 ≤ m ≤ n, got m={m}, n={n}"))
            }
            Family::KmnMinusMatching { m, n, q } if m == 0 || m > n || q > m => {
                bad(format!("kmn_minus_matching needs q ≤ m ≤ n and m ≥ 1, got m={m}, n={n}, q={q}"))
            }
            // Removing the matching isolates a vertex or splits the graph.
            Family::KmnMinusMatching { m, n, q } if q > 0 && (m == 1 || n == 2 && q == 2) => {
                bad(format!("kmn_minus_matching({m},{n},{q}) is disconnected"))
            }
            Family::EarGraph { n } if n < 2 => bad(format!("ear_graph needs n ≥ 2, got {n}")),
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<BipGraph> {
        self.validate()?;
        match self.family {
            Family::Tree { v, e } => random_tree(v, e, &mut self.rng()),
            Family::Cycle { n } => cycle_graph(n),
            Family::Unicyclic { n, extra } => unicyclic(n, extra, &mut self.rng()),
            Family::Ladder { n } => ladder(n),
            Family::CompleteBipartite { m, n } => kmn_minus(m, n, 0),
            Family::KmnMinusMatching { m, n, q } => kmn_minus(m, n, q),
            Family::EarGraph { n } => Ok(ear_graph(n, &mut self.rng())?.0),
        }
    }

    /// The ear graph together with the decomposition it was grown from.
    pub fn generate_with_ears(&self) -> Result<(BipGraph, EarDecomposition)> {
        self.validate()?;
        match self.family {
            Family::EarGraph { n } => ear_graph(n, &mut self.rng()),
            _ => Err(Error::InvalidFamily(format!("`{}` has no ear decomposition", self.tag()))),
        }
    }

    pub fn closed_form_interior(&self) -> Result<IntPoly> {
        self.validate()?;
        match self.family {
            Family::Tree { .. } => Ok(IntPoly::one()),
            Family::Cycle { n } | Family::Unicyclic { n, .. } => {
                Ok(IntPoly::from_coeffs(vec![1; n]))
            }
            Family::Ladder { n } => Ok(IntPoly::from_coeffs(vec![1, 1]).pow(n as u32)),
            Family::CompleteBipartite { m, n } => Ok(kmn_interior(m, n)),
            Family::KmnMinusMatching { m, n, q } => {
                let k = kmn_interior(m, n);
                let linear = BigInt::from((n - 1) * (m - 1)) - BigInt::from(q);
                let mut coeffs = k.coeffs().to_vec();
                if coeffs.len() < 2 {
                    coeffs.resize(2, BigInt::from(0));
                }
                coeffs[1] = linear;
                Ok(IntPoly::from_coeffs(coeffs))
            }
            Family::EarGraph { .. } => Err(Error::NoClosedForm(self.to_string())),
        }
    }

    pub fn closed_form_exterior(&self) -> Result<IntPoly> {
        self.validate()?;
        match self.family {
            Family::Tree { .. } => Ok(IntPoly::one()),
            Family::Cycle { n } | Family::Unicyclic { n, .. } => {
                Ok(IntPoly::from_coeffs(vec![1, n as i64 - 1]))
            }
            Family::Ladder { n } => Ok(IntPoly::from_coeffs(vec![1, 1]).pow(n as u32)),
            Family::CompleteBipartite { m, n } => Ok(kmn_exterior(m, n)),
            // The general formula gives a negative top coefficient here.
            Family::KmnMinusMatching { m: 2, q: 2, .. } => Err(Error::NoClosedForm(format!(
                "{self}: the general exterior formula is negative at m = q = 2"
            ))),
            Family::KmnMinusMatching { m, n, q } => {
                let mut coeffs: Vec<BigInt> = (0..n - 1).map(|i| multiset(m, i)).collect();
                let top = if m >= 2 {
                    binomial((m + n - 3) as u64, (n - 1) as u64)
                } else {
                    BigInt::from(0)
                };
                coeffs.push(top - BigInt::from(q));
                Ok(IntPoly::from_coeffs(coeffs))
            }
            Family::EarGraph { .. } => Err(Error::NoClosedForm(self.to_string())),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(usize::to_string).collect();
        write!(f, "{}({})", self.tag(), params.join(","))?;
        if self.is_random() {
            write!(f, "[seed={}]", self.seed.unwrap_or(0))?;
        }
        Ok(())
    }
}

/// `Σ_{i<m} C(n-1,i) C(m-1,i) x^i`.
fn kmn_interior(m: usize, n: usize) -> IntPoly {
    IntPoly::from_coeffs(
        (0..m as u64)
            .map(|i| binomial(n as u64 - 1, i) * binomial(m as u64 - 1, i))
            .collect(),
    )
}

/// `Σ_{i<n} C(m+i-2, i) y^i`.
fn kmn_exterior(m: usize, n: usize) -> IntPoly {
    IntPoly::from_coeffs((0..n).map(|i| multiset(m, i)).collect())
}

/// `C(m+i-2, i)`, read as 1 at `i = 0` also when `m = 1`.
fn multiset(m: usize, i: usize) -> BigInt {
    if i == 0 {
        BigInt::from(1)
    } else {
        binomial((m + i) as u64 - 2, i as u64)
    }
}

fn labels(prefix: char, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| [(i, i), ((i + 1) % n, i)]).collect()
}

fn cycle_graph(n: usize) -> Result<BipGraph> {
    BipGraph::from_index_pairs(labels('v', n), labels('e', n), cycle_edges(n))
}

fn ladder(n: usize) -> Result<BipGraph> {
    // Grid vertex (i, j) with i ≤ n, j ∈ {0, 1}; parity decides the class.
    let mut v_of = vec![[0usize; 2]; n + 1];
    let (mut nv, mut ne) = (0, 0);
    for (i, slot) in v_of.iter_mut().enumerate() {
        for j in 0..2 {
            if (i + j) % 2 == 0 {
                slot[j] = nv;
                nv += 1;
            } else {
                slot[j] = ne;
                ne += 1;
            }
        }
    }
    let mut pairs = Vec::new();
    let mut link = |a: (usize, usize), b: (usize, usize)| {
        let (va, vb) = if (a.0 + a.1).is_multiple_of(2) { (a, b) } else { (b, a) };
        pairs.push((v_of[va.0][va.1], v_of[vb.0][vb.1]));
    };
    for i in 0..=n {
        link((i, 0), (i, 1));
        if i < n {
            link((i, 0), (i + 1, 0));
            link((i, 1), (i + 1, 1));
        }
    }
    BipGraph::from_index_pairs(labels('v', nv), labels('e', ne), pairs)
}

fn kmn_minus(m: usize, n: usize, q: usize) -> Result<BipGraph> {
    let pairs = (0..m).flat_map(|v| (0..n).map(move |e| (v, e))).filter(|&(v, e)| !(v == e && v < q));
    let g = BipGraph::from_index_pairs(labels('v', m), labels('e', n), pairs)?;
    g.require_connected()?;
    Ok(g)
}

/// Spanning-tree edges of `K_{a,b}` drawn uniformly by the Aldous–Broder
/// walk. Flat indices: `V` first, then `E`.
fn uniform_spanning_tree<R: Rng + ?Sized>(a: usize, b: usize, rng: &mut R) -> Vec<(usize, usize)> {
    let total = a + b;
    let mut seen = vec![false; total];
    let mut at = rng.gen_range(0..total);
    seen[at] = true;
    let mut left = total - 1;
    let mut tree = Vec::with_capacity(total - 1);
    while left > 0 {
        let next = if at < a { a + rng.gen_range(0..b) } else { rng.gen_range(0..a) };
        if !seen[next] {
            seen[next] = true;
            left -= 1;
            let (v, e) = if at < a { (at, next - a) } else { (next, at - a) };
            tree.push((v, e));
        }
        at = next;
    }
    tree
}

fn random_tree<R: Rng + ?Sized>(v: usize, e: usize, rng: &mut R) -> Result<BipGraph> {
    BipGraph::from_index_pairs(labels('v', v), labels('e', e), uniform_spanning_tree(v, e, rng))
}

/// A connected bipartite graph with `|V| = a`, `|E| = b`: a uniform spanning
/// tree of `K_{a,b}` plus every other pair independently with probability `p`.
pub fn random_connected_bipartite<R: Rng + ?Sized>(a: usize, b: usize, p: f64, rng: &mut R) -> Result<BipGraph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidFamily("both classes must be non-empty".into()));
    }
    let mut present = vec![false; a * b];
    for (v, e) in uniform_spanning_tree(a, b, rng) {
        present[v * b + e] = true;
    }
    for slot in present.iter_mut() {
        if !*slot && rng.gen_bool(p) {
            *slot = true;
        }
    }
    let pairs = (0..a * b).filter(|&k| present[k]).map(|k| (k / b, k % b));
    BipGraph::from_index_pairs(labels('v', a), labels('e', b), pairs)
}

fn unicyclic<R: Rng + ?Sized>(n: usize, extra: usize, rng: &mut R) -> Result<BipGraph> {
    let mut pairs = cycle_edges(n);
    let (mut nv, mut ne) = (n, n);
    for _ in 0..extra {
        // Attach a new leaf to a uniformly random existing vertex.
        let pick = rng.gen_range(0..nv + ne);
        if pick < nv {
            pairs.push((pick, ne));
            ne += 1;
        } else {
            pairs.push((nv, pick - nv));
            nv += 1;
        }
    }
    BipGraph::from_index_pairs(labels('v', nv), labels('e', ne), pairs)
}

fn ear_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<(BipGraph, EarDecomposition)> {
    let k = rng.gen_range(2..=n);
    let mut pairs = cycle_edges(k);
    let (mut nv, mut ne) = (k, k);
    let mut ears = Vec::new();
    while nv < n {
        // An ear of length 2j+1 adds j vertices to each class.
        let j = rng.gen_range(1..=n - nv);
        let from = rng.gen_range(0..nv);
        let to = rng.gen_range(0..ne);
        let mut prev_v = from;
        for step in 0..j {
            let (e_new, v_new) = (ne + step, nv + step);
            pairs.push((prev_v, e_new));
            pairs.push((v_new, e_new));
            prev_v = v_new;
        }
        pairs.push((prev_v, to));
        ears.push(Ear {
            from: format!("v{}", from + 1),
            to: format!("e{}", to + 1),
            length: 2 * j + 1,
        });
        nv += j;
        ne += j;
    }
    let g = BipGraph::from_index_pairs(labels('v', nv), labels('e', ne), pairs)?;
    Ok((g, EarDecomposition { cycle_half_length: k, ears }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Vertex;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(cs.to_vec())
    }

    #[test]
    fn cycle_is_two_regular() {
        let g = FamilySpec::cycle(3).generate().unwrap();
        assert_eq!((g.v_count(), g.e_count(), g.edge_count()), (3, 3, 6));
        assert!(g.vertices().all(|u| g.degree(u) == 2));
        assert!(g.is_connected());
    }

    #[test]
    fn matching_deleted_k33_is_a_hexagon() {
        let g = FamilySpec::kmn_minus_matching(3, 3, 3).generate().unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(g.vertices().all(|u| g.degree(u) == 2));
        assert!(g.is_connected());
    }

    #[test]
    fn ladder_shape() {
        let g = FamilySpec::ladder(3).generate().unwrap();
        assert_eq!((g.v_count(), g.e_count(), g.edge_count()), (4, 4, 10));
        assert_eq!(g.nullity(), 3);
    }

    #[test]
    fn closed_forms_quoted() {
        assert_eq!(FamilySpec::ladder(2).closed_form_interior().unwrap(), p(&[1, 2, 1]));
        assert_eq!(FamilySpec::complete_bipartite(3, 3).closed_form_interior().unwrap(), p(&[1, 4, 1]));
        assert_eq!(FamilySpec::complete_bipartite(3, 3).closed_form_exterior().unwrap(), p(&[1, 2, 3]));
        assert_eq!(FamilySpec::complete_bipartite(2, 3).closed_form_exterior().unwrap(), p(&[1, 1, 1]));
        assert_eq!(FamilySpec::cycle(4).closed_form_exterior().unwrap(), p(&[1, 3]));
        let hex = FamilySpec::kmn_minus_matching(3, 3, 3);
        assert_eq!(hex.closed_form_interior().unwrap(), p(&[1, 1, 1]));
        assert_eq!(hex.closed_form_exterior().unwrap(), p(&[1, 2]));
    }

    #[test]
    fn star_closed_forms_are_one() {
        let star = FamilySpec::complete_bipartite(1, 4);
        assert_eq!(star.closed_form_interior().unwrap(), IntPoly::one());
        assert_eq!(star.closed_form_exterior().unwrap(), IntPoly::one());
    }

    #[test]
    fn invalid_parameters() {
        for spec in [
            FamilySpec::kmn_minus_matching(3, 3, 4),
            FamilySpec::kmn_minus_matching(2, 2, 2),
            FamilySpec::complete_bipartite(4, 3),
            FamilySpec::cycle(1),
            FamilySpec::ear_graph(1, 0),
        ] {
            assert!(matches!(spec.generate(), Err(Error::InvalidFamily(_))), "{spec}");
        }
    }

    #[test]
    fn ear_graph_has_no_closed_form() {
        let spec = FamilySpec::ear_graph(4, 1);
        assert!(matches!(spec.closed_form_interior(), Err(Error::NoClosedForm(_))));
    }

    #[test]
    fn ear_graphs_are_balanced_and_seeded() {
        for seed in 0..20 {
            let spec = FamilySpec::ear_graph(6, seed);
            let (g, ears) = spec.generate_with_ears().unwrap();
            assert_eq!((g.v_count(), g.e_count()), (6, 6));
            assert!(ears.is_class_crossing());
            assert!(g.vertices().all(|u| g.degree(u) >= 2));
            assert_eq!(g, spec.generate().unwrap());
        }
    }

    #[test]
    fn random_families_are_deterministic() {
        let a = FamilySpec::unicyclic(3, 5, 9).generate().unwrap();
        let b = FamilySpec::unicyclic(3, 5, 9).generate().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.vertex_count(), 11);
        assert_eq!(a.nullity(), 1);
        let t = FamilySpec::tree(3, 4, 2).generate().unwrap();
        assert_eq!(t.nullity(), 0);
        assert!(t.is_connected());
    }

    #[test]
    fn random_connected_is_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let a = rng.gen_range(1..6);
            let b = rng.gen_range(1..6);
            let g = random_connected_bipartite(a, b, 1.0 / 3.0, &mut rng).unwrap();
            assert!(g.is_connected());
            assert!(g.degree(Vertex::V(0)) >= 1);
        }
    }

    #[test]
    fn parse_grammar() {
        let spec = FamilySpec::parse(&["kmn_minus_matching", "3", "3", "3"]).unwrap();
        assert_eq!(spec, FamilySpec::kmn_minus_matching(3, 3, 3));
        let spec = FamilySpec::parse(&["ear_graph", "5", "--seed", "7"]).unwrap();
        assert_eq!(spec, FamilySpec::ear_graph(5, 7));
        assert!(FamilySpec::parse(&["cycle"]).is_err());
        assert!(FamilySpec::parse(&["moebius", "3"]).is_err());
        assert_eq!(FamilySpec::ear_graph(5, 7).to_string(), "ear_graph(5)[seed=7]");
    }

    #[test]
    fn serde_round_trip() {
        let spec = FamilySpec::unicyclic(3, 2, 4);
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<FamilySpec>(&json).unwrap(), spec);
    }
}
