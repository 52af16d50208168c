use hytrex::families::FamilySpec;
use hytrex::verify::{
    check_interpolating, replay, run_check, run_suite, CheckReport, Corpus, CorpusEntry, Engine, Fault, SuiteConfig,
    CHECK_NAMES,
};

fn quick() -> SuiteConfig {
    SuiteConfig {
        quick: true,
        ..SuiteConfig::default()
    }
}

#[test]
fn quick_suite_passes() {
    let report = run_suite(&quick()).unwrap();
    let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
    assert_eq!(names, CHECK_NAMES);
    for c in &report.checks {
        assert!(c.passed(), "{}: {:?}", c.name, c.counterexample);
        assert!(c.instances > 0, "{} tested nothing", c.name);
    }
}

#[test]
fn suite_is_deterministic() {
    let a = serde_json::to_string(&run_suite(&quick()).unwrap()).unwrap();
    let b = serde_json::to_string(&run_suite(&quick()).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn counterexamples_survive_serialization_and_replay() {
    let engine = Engine::with_fault(Fault::GapPolynomial);
    let corpus = Corpus::single(CorpusEntry::from_family(FamilySpec::cycle(3)).unwrap());
    let report = check_interpolating(&engine, &corpus).unwrap();
    assert!(!report.passed());
    let cx = report.counterexample.as_ref().unwrap();
    assert!(cx.detail.contains("gap"));
    let back: CheckReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(back, report);
    assert!(replay(&back, &Engine::with_fault(Fault::GapPolynomial), &quick()).unwrap());
    assert!(!replay(&back, &Engine::new(), &quick()).unwrap());
}

#[test]
fn dropped_hypertree_trips_the_gate() {
    let engine = Engine::with_fault(Fault::DropHypertree);
    let corpus = Corpus::single(CorpusEntry::from_family(FamilySpec::complete_bipartite(3, 3)).unwrap());
    let report = run_check("enumeration_oracles", &engine, &corpus, &quick(), None).unwrap();
    assert!(!report.passed());
    assert!(report.counterexample.unwrap().hypertree.is_some());
}

#[test]
fn passing_reports_cannot_be_replayed() {
    let corpus = Corpus::single(CorpusEntry::from_family(FamilySpec::cycle(3)).unwrap());
    let report = check_interpolating(&Engine::new(), &corpus).unwrap();
    assert!(report.passed());
    assert!(replay(&report, &Engine::new(), &quick()).is_err());
}

#[test]
fn unknown_checks_are_rejected() {
    let corpus = Corpus::single(CorpusEntry::from_family(FamilySpec::cycle(2)).unwrap());
    assert!(run_check("nonsense", &Engine::new(), &corpus, &quick(), None).is_err());
}
