//! Executable checks of the structural theorems over deterministic corpora.
//!
//! Each check scans a [`Corpus`] in size order and stops at the first
//! violation, so a failing [`CheckReport`] carries a smallest
//! counterexample found. Counterexamples record the graph, its origin and
//! the offending quantity; [`replay`] re-runs a check on the counterexample
//! alone.
//!
//! Polynomials are computed through an [`Engine`], which caches per-graph
//! results and can inject a [`Fault`] so that negative controls can confirm
//! the checks are able to fail.

mod checks;
pub mod corpus;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::activity::EdgeOrder;
use crate::error::{Error, Result};
use crate::graph::{BipGraph, GraphFile};
use crate::hypertree::{enumerate_hypertrees, HypertreeSet};
use crate::poly::{exterior_from_set, interior_from_set, IntPoly};

pub use checks::{
    check_activity, check_closed_forms, check_degree_bounds, check_enumeration_oracles,
    check_interpolating, check_invariance, check_linear_coefficients, check_monic_ear,
    check_recursions, check_tutte, negative_controls,
};
pub use corpus::{Corpus, CorpusEntry, NamedGraph, Origin};

/// A deliberate corruption applied by an [`Engine`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Fault {
    /// Drop the largest member of every hypertree set with at least two.
    DropHypertree,
    /// Add `x^{d+2}` to every polynomial of degree `d`.
    GapPolynomial,
}

/// Hypertrees and both polynomials under the identity order.
#[derive(Clone, Debug)]
pub struct Computed {
    pub hypertrees: HypertreeSet,
    pub interior: IntPoly,
    pub exterior: IntPoly,
}

/// Computes and caches invariants, optionally with an injected fault.
#[derive(Debug, Default)]
pub struct Engine {
    fault: Option<Fault>,
    cache: Mutex<HashMap<String, Arc<Computed>>>,
}

impl Engine {
    pub fn new() -> Self {
        Engine::default()
    }

    pub fn with_fault(fault: Fault) -> Self {
        Engine {
            fault: Some(fault),
            cache: Mutex::default(),
        }
    }

    pub fn fault(&self) -> Option<Fault> {
        self.fault
    }

    pub fn clear(&self) {
        self.cache.lock().expect("cache lock").clear();
    }

    fn corrupt_set(&self, b: HypertreeSet) -> HypertreeSet {
        match self.fault {
            Some(Fault::DropHypertree) if b.len() >= 2 => {
                let last = b.as_slice()[b.len() - 1].clone();
                b.without(last.values())
            }
            _ => b,
        }
    }

    fn corrupt_poly(&self, p: IntPoly) -> IntPoly {
        match self.fault {
            Some(Fault::GapPolynomial) => {
                let d = p.degree().unwrap_or(0);
                &p + &IntPoly::monomial(1, d + 2)
            }
            _ => p,
        }
    }

    pub fn compute(&self, g: &BipGraph) -> Result<Arc<Computed>> {
        let key = g.to_json();
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(Arc::clone(hit));
        }
        let hypertrees = self.corrupt_set(enumerate_hypertrees(g)?);
        let order = EdgeOrder::identity(g.e_count());
        let interior = self.corrupt_poly(interior_from_set(&hypertrees, &order)?);
        let exterior = self.corrupt_poly(exterior_from_set(&hypertrees, &order)?);
        let value = Arc::new(Computed {
            hypertrees,
            interior,
            exterior,
        });
        self.cache
            .lock()
            .expect("cache lock")
            .insert(key, Arc::clone(&value));
        Ok(value)
    }

    pub fn interior(&self, g: &BipGraph) -> Result<IntPoly> {
        Ok(self.compute(g)?.interior.clone())
    }

    pub fn exterior(&self, g: &BipGraph) -> Result<IntPoly> {
        Ok(self.compute(g)?.exterior.clone())
    }

    /// `(I, X)` under `order`, from the cached hypertree set.
    pub fn polynomials_under(&self, g: &BipGraph, order: &EdgeOrder) -> Result<(IntPoly, IntPoly)> {
        let c = self.compute(g)?;
        Ok((
            self.corrupt_poly(interior_from_set(&c.hypertrees, order)?),
            self.corrupt_poly(exterior_from_set(&c.hypertrees, order)?),
        ))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A violating instance, replayable on its own.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub entry: String,
    pub origin: Origin,
    pub graph: GraphFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypertree: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<IntPoly>,
    pub detail: String,
}

impl Counterexample {
    /// The corpus entry the counterexample was found on.
    pub fn entry(&self) -> Result<CorpusEntry> {
        Ok(CorpusEntry {
            name: self.entry.clone(),
            origin: self.origin.clone(),
            graph: self.graph.to_graph()?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub corpus: String,
    pub instances: usize,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Settings shared by the checks of one suite run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub orders_per_graph: usize,
    /// Use the small corpus instead of the default one.
    pub quick: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            orders_per_graph: 20,
            quick: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub corpus: String,
    pub corpus_size: usize,
    pub passed: bool,
    pub checks: Vec<CheckReport>,
}

/// Check names accepted by [`run_check`], in suite order. The
/// enumeration-oracle comparison runs first and gates the others.
pub const CHECK_NAMES: [&str; 11] = [
    "enumeration_oracles",
    "interpolating",
    "degree_bounds",
    "linear_coefficients",
    "invariance",
    "recursions",
    "tutte",
    "monic_ear",
    "activity",
    "closed_forms",
    "negative_controls",
];

/// The corpus selected by `config`.
pub fn suite_corpus(config: &SuiteConfig) -> Result<Corpus> {
    if config.quick {
        corpus::quick_corpus()
    } else {
        corpus::default_corpus(config.seed)
    }
}

/// Runs one named check. `tutte` uses its own graph corpus and ignores
/// `corpus` unless `tutte_graphs` is given.
pub fn run_check(
    name: &str,
    engine: &Engine,
    corpus: &Corpus,
    config: &SuiteConfig,
    tutte_graphs: Option<&[NamedGraph]>,
) -> Result<CheckReport> {
    match name {
        "enumeration_oracles" => check_enumeration_oracles(engine, corpus),
        "interpolating" => check_interpolating(engine, corpus),
        "degree_bounds" => check_degree_bounds(engine, corpus),
        "linear_coefficients" => check_linear_coefficients(engine, corpus),
        "invariance" => check_invariance(engine, corpus, config.orders_per_graph, config.seed),
        "recursions" => check_recursions(engine, corpus),
        "tutte" => match tutte_graphs {
            Some(graphs) => check_tutte(engine, graphs, "given graphs"),
            None => {
                let graphs = corpus::tutte_corpus(config.seed)?;
                check_tutte(engine, &graphs, &format!("connected graphs ≤ 7 edges (seed {})", config.seed))
            }
        },
        "monic_ear" => check_monic_ear(engine, corpus),
        "activity" => check_activity(engine, corpus, config.seed),
        "closed_forms" => check_closed_forms(engine, corpus),
        "negative_controls" => negative_controls(),
        other => Err(Error::UnknownCheck(other.to_owned())),
    }
}

/// Runs every check in [`CHECK_NAMES`] order. If the enumeration oracles
/// disagree, the remaining checks are reported as failed without running,
/// since their polynomials would rest on an unverified hypertree set.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let corpus = suite_corpus(config)?;
    let engine = Engine::new();
    let mut checks = Vec::with_capacity(CHECK_NAMES.len());
    let gate = run_check(CHECK_NAMES[0], &engine, &corpus, config, None)?;
    let gate_ok = gate.passed();
    checks.push(gate);
    for name in &CHECK_NAMES[1..] {
        if gate_ok || *name == "negative_controls" {
            checks.push(run_check(name, &engine, &corpus, config, None)?);
        } else {
            checks.push(CheckReport {
                name: (*name).to_owned(),
                corpus: corpus.description.clone(),
                instances: 0,
                verdict: Verdict::Fail,
                counterexample: None,
                notes: vec!["not run: enumeration oracles disagree".into()],
            });
        }
    }
    Ok(SuiteReport {
        seed: config.seed,
        corpus: corpus.description.clone(),
        corpus_size: corpus.len(),
        passed: checks.iter().all(CheckReport::passed),
        checks,
    })
}

/// Re-runs `report`'s check on its counterexample alone. Returns whether
/// the check fails again; errors if the report has no counterexample.
pub fn replay(report: &CheckReport, engine: &Engine, config: &SuiteConfig) -> Result<bool> {
    let cx = report
        .counterexample
        .as_ref()
        .ok_or_else(|| Error::NotReplayable(format!("report `{}` has no counterexample", report.name)))?;
    let entry = cx.entry()?;
    let single = Corpus::single(entry.clone());
    let rerun = if report.name == "tutte" {
        let graph = crate::poly::tutte::Multigraph::from_bipartite(&entry.graph)?;
        let named = [NamedGraph { name: entry.name, graph }];
        run_check("tutte", engine, &single, config, Some(&named))?
    } else {
        run_check(&report.name, engine, &single, config, None)?
    };
    Ok(!rerun.passed())
}
