//! One pass/fail line per acceptance criterion. Run with `--nocapture` to
//! see the table.

use std::time::{Duration, Instant};

use hytrex::families::FamilySpec;
use hytrex::poly::IntPoly;
use hytrex::verify::{self, corpus, Engine, SuiteConfig};

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n || n < 0 {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn poly(coeffs: Vec<i64>) -> IntPoly {
    IntPoly::from_coeffs(coeffs)
}

fn polys(spec: FamilySpec) -> (IntPoly, IntPoly) {
    let engine = Engine::new();
    let g = spec.generate().unwrap();
    (engine.interior(&g).unwrap(), engine.exterior(&g).unwrap())
}

struct Outcome {
    ok: bool,
    elapsed: Duration,
    detail: String,
}

fn timed(limit: Option<Duration>, body: impl FnOnce() -> Result<String, String>) -> Outcome {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    match result {
        Ok(detail) => match limit {
            Some(l) if elapsed > l => Outcome {
                ok: false,
                elapsed,
                detail: format!("{detail}; exceeded {l:?}"),
            },
            _ => Outcome { ok: true, elapsed, detail },
        },
        Err(detail) => Outcome { ok: false, elapsed, detail },
    }
}

fn cycles() -> Result<String, String> {
    for n in 2..=7 {
        let (i, x) = polys(FamilySpec::cycle(n));
        let want_i = poly(vec![1; n]);
        let want_x = poly(vec![1, n as i64 - 1]);
        if i != want_i || x != want_x {
            return Err(format!("C_{}: I = {i}, X = {}", 2 * n, x.render("y")));
        }
    }
    Ok("C_4 .. C_14".into())
}

fn complete_bipartite() -> Result<String, String> {
    let mut count = 0;
    for m in 2..=4i64 {
        for n in m..=5i64 {
            let (i, x) = polys(FamilySpec::complete_bipartite(m as usize, n as usize));
            let want_i = poly((0..m).map(|k| binom(n - 1, k) * binom(m - 1, k)).collect());
            let want_x = poly((0..n).map(|k| binom(m + k - 2, k)).collect());
            if i != want_i || x != want_x {
                return Err(format!("K_{{{m},{n}}}: I = {i}, X = {}", x.render("y")));
            }
            count += 1;
        }
    }
    let (i, x) = polys(FamilySpec::complete_bipartite(3, 3));
    if i != poly(vec![1, 4, 1]) || x != poly(vec![1, 2, 3]) {
        return Err(format!("K_{{3,3}}: I = {i}, X = {}", x.render("y")));
    }
    Ok(format!("{count} graphs"))
}

fn matching_deleted() -> Result<String, String> {
    let (i, x) = polys(FamilySpec::kmn_minus_matching(3, 3, 3));
    let (ci, cx) = polys(FamilySpec::cycle(3));
    if i == poly(vec![1, 1, 1]) && x == poly(vec![1, 2]) && i == ci && x == cx {
        Ok(format!("I = {i}, X = {}", x.render("y")))
    } else {
        Err(format!("I = {i}, X = {}", x.render("y")))
    }
}

fn ladders() -> Result<String, String> {
    let one_plus = poly(vec![1, 1]);
    for n in 1..=6 {
        let (i, x) = polys(FamilySpec::ladder(n));
        let want = one_plus.pow(n as u32);
        if i != want || x != want {
            return Err(format!("ladder n={n}: I = {i}, X = {}", x.render("y")));
        }
    }
    Ok("n = 1 .. 6".into())
}

fn tutte() -> Result<String, String> {
    let graphs = corpus::tutte_corpus(0).map_err(|e| e.to_string())?;
    let r = verify::check_tutte(&Engine::new(), &graphs, "acceptance").map_err(|e| e.to_string())?;
    if r.passed() {
        Ok(format!("{} graphs", r.instances))
    } else {
        Err(r.counterexample.map(|c| c.detail).unwrap_or_default())
    }
}

fn suite() -> Result<String, String> {
    let report = verify::run_suite(&SuiteConfig::default()).map_err(|e| e.to_string())?;
    let failed: Vec<&str> = report.checks.iter().filter(|c| !c.passed()).map(|c| c.name.as_str()).collect();
    if failed.is_empty() {
        Ok(format!("{} checks over {} graphs", report.checks.len(), report.corpus_size))
    } else {
        Err(format!("failed: {}", failed.join(", ")))
    }
}

fn gate() -> Result<String, String> {
    let config = SuiteConfig::default();
    let corpus = verify::suite_corpus(&config).map_err(|e| e.to_string())?;
    let r = verify::check_enumeration_oracles(&Engine::new(), &corpus).map_err(|e| e.to_string())?;
    if !r.passed() {
        return Err(r.counterexample.map(|c| c.detail).unwrap_or_default());
    }
    if r.instances != corpus.len() {
        return Err(format!("{} of {} graphs compared", r.instances, corpus.len()));
    }
    Ok(format!("{} graphs", r.instances))
}

fn controls() -> Result<String, String> {
    let r = verify::negative_controls().map_err(|e| e.to_string())?;
    if r.passed() {
        Ok(format!("{} corrupted fixtures rejected", r.instances))
    } else {
        Err(r.counterexample.map(|c| c.detail).unwrap_or_default())
    }
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, Option<Duration>, fn() -> Result<String, String>);
    let criteria: [Criterion; 8] = [
        ("closed-form cycles", Some(Duration::from_secs(1)), cycles),
        ("complete bipartite table", Some(Duration::from_secs(60)), complete_bipartite),
        ("matching-deleted equals hexagon", None, matching_deleted),
        ("ladder identity", None, ladders),
        ("Tutte cross-check", None, tutte),
        ("theorem suite", Some(Duration::from_secs(600)), suite),
        ("enumeration oracle gate", None, gate),
        ("negative controls", None, controls),
    ];
    let mut all = true;
    for (k, (name, limit, body)) in criteria.into_iter().enumerate() {
        let out = timed(limit, body);
        all &= out.ok;
        println!(
            "{} {}. {name} ({:.2?}): {}",
            if out.ok { "PASS" } else { "FAIL" },
            k + 1,
            out.elapsed,
            out.detail
        );
    }
    assert!(all, "some acceptance criteria failed");
}
