//! `hytrex`: interior and exterior polynomials, hypertrees and theorem
//! checks from the command line.
//!
//! Exit status is 0 on success, 1 when a verification check fails and 2 on
//! usage or input errors.

use std::path::Path;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hytrex::activity::{profiles, EdgeOrder};
use hytrex::families::{Family, FamilySpec};
use hytrex::graph::{BipGraph, Side, Vertex};
use hytrex::hypertree::enumerate_hypertrees;
use hytrex::poly::tutte::{exterior_from_tutte, interior_from_tutte, tutte_polynomial, Multigraph};
use hytrex::poly::{exterior_polynomial, interior_polynomial, IntPoly};
use hytrex::transforms;
use hytrex::verify::{self, Engine, SuiteConfig, CHECK_NAMES};

#[derive(Parser, Debug)]
#[command(name = "hytrex", version, about = "Interior and exterior polynomials of bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for random families and for the verification corpus.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads; results do not depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Interior polynomial I(x).
    Interior(GraphArgs),
    /// Exterior polynomial X(y) with the chosen class as hyperedges.
    Exterior(GraphArgs),
    /// All hypertrees with their internal and external inactivities.
    Hypertrees(GraphArgs),
    /// Tutte polynomial of a graph given by its subdivision, with both
    /// specialisations.
    Tutte(GraphArgs),
    /// Generate a family member: `family <tag> <params...>`.
    Family {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = false)]
        tokens: Vec<String>,
    },
    /// Apply a graph surgery and print the result.
    Transform(TransformArgs),
    /// Run one named check or `all`.
    Verify {
        check: String,
        /// Use the small corpus.
        #[arg(long)]
        quick: bool,
        /// Random orders sampled per graph by the invariance check.
        #[arg(long, default_value_t = 20)]
        orders: usize,
    },
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// A graph JSON file, or `family <tag> <params...>`.
    #[arg(required = true, num_args = 1..)]
    input: Vec<String>,
    /// Comma-separated hyperedge labels, smallest first.
    #[arg(long, value_delimiter = ',')]
    order: Option<Vec<String>>,
    /// Which colour class plays the hyperedges.
    #[arg(long, value_enum, default_value_t = Hyperedges::E)]
    hyperedges: Hyperedges,
}

#[derive(Args, Debug)]
struct TransformArgs {
    #[arg(value_enum)]
    op: Op,
    /// A graph JSON file, or `family <tag> <params...>`.
    #[arg(required = true, num_args = 1..)]
    input: Vec<String>,
    /// Vertex labels the operation acts on; `v:` or `e:` picks the class.
    #[arg(long = "at")]
    at: Vec<String>,
    /// Second graph for joins: a file, or `family <tag> <params...>` quoted.
    #[arg(long = "with")]
    with: Option<String>,
    /// Number of vertices added by `add-pair`.
    #[arg(long, default_value_t = 1)]
    count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Hyperedges {
    V,
    E,
}

impl Hyperedges {
    fn side(self) -> Side {
        match self {
            Hyperedges::V => Side::V,
            Hyperedges::E => Side::E,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Op {
    Dual,
    DeleteLeaf,
    Delete,
    Contract,
    AddPendant,
    Identify,
    AddPair,
    VertexJoin,
    EdgeJoin,
    Decompose,
}

#[derive(Debug)]
enum Failure {
    /// Bad arguments or input; exit 2.
    Input(String),
    /// A check failed; exit 1.
    Check,
}

impl From<hytrex::error::Error> for Failure {
    fn from(e: hytrex::error::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome<()> {
    match &cli.command {
        Command::Interior(args) => polynomial(cli, args, Kind::Interior),
        Command::Exterior(args) => polynomial(cli, args, Kind::Exterior),
        Command::Hypertrees(args) => hypertrees(cli, args),
        Command::Tutte(args) => tutte(cli, args),
        Command::Family { tokens } => {
            let tokens = tokens.strip_prefix(&["family".to_owned()]).unwrap_or(tokens);
            let g = family(tokens, cli.seed)?.generate()?;
            print_graph(cli, &g);
            Ok(())
        }
        Command::Transform(args) => transform(cli, args),
        Command::Verify { check, quick, orders } => verify_cmd(cli, check, *quick, *orders),
    }
}

fn family(tokens: &[String], seed: Option<u64>) -> Outcome<FamilySpec> {
    let mut spec = FamilySpec::parse(tokens)?;
    let random = matches!(
        spec.family,
        Family::Tree { .. } | Family::Unicyclic { .. } | Family::EarGraph { .. }
    );
    if let (Some(s), None, true) = (seed, spec.seed, random) {
        spec = spec.with_seed(s);
    }
    Ok(spec)
}

fn load(input: &[String], seed: Option<u64>) -> Outcome<BipGraph> {
    match input {
        [head, rest @ ..] if head == "family" => Ok(family(rest, seed)?.generate()?),
        [path] => {
            let text = std::fs::read_to_string(Path::new(path))
                .map_err(|e| Failure::Input(format!("cannot read `{path}`: {e}")))?;
            BipGraph::from_json(&text).map_err(|e| Failure::Input(format!("`{path}`: {e}")))
        }
        _ => Err(Failure::Input(format!(
            "expected a graph file or `family <tag> <params...>`, got `{}`",
            input.join(" ")
        ))),
    }
}

/// The input with the chosen class as hyperedges, and the order to use.
fn prepare(cli: &Cli, args: &GraphArgs) -> Outcome<(BipGraph, EdgeOrder)> {
    let g = load(&args.input, cli.seed)?.oriented(args.hyperedges.side());
    let order = match &args.order {
        Some(labels) => EdgeOrder::from_labels(&g, Side::E, labels)?,
        None => EdgeOrder::identity(g.e_count()),
    };
    eprintln!("order: {}", order.labels(g.e_names()).join(","));
    Ok((g, order))
}

enum Kind {
    Interior,
    Exterior,
}

fn print_poly(cli: &Cli, p: &IntPoly, var: &str) {
    if cli.json {
        println!("{}", serde_json::to_string(p).expect("polynomials serialise"));
    } else {
        println!("{}", p.render(var));
    }
}

fn polynomial(cli: &Cli, args: &GraphArgs, kind: Kind) -> Outcome<()> {
    let (g, order) = prepare(cli, args)?;
    match kind {
        Kind::Interior => print_poly(cli, &interior_polynomial(&g, &order)?, "x"),
        Kind::Exterior => print_poly(cli, &exterior_polynomial(&g, &order, Side::E)?, "y"),
    }
    Ok(())
}

fn hypertrees(cli: &Cli, args: &GraphArgs) -> Outcome<()> {
    let (g, order) = prepare(cli, args)?;
    let b = enumerate_hypertrees(&g)?;
    let rows = profiles(&b, &order)?;
    if cli.json {
        let list: Vec<Value> = rows
            .iter()
            .map(|p| {
                json!({
                    "values": p.hypertree.values(),
                    "internal_inactivity": p.internal_inactivity(),
                    "external_inactivity": p.external_inactivity(),
                })
            })
            .collect();
        let out = json!({ "hyperedges": g.e_names(), "hypertrees": list });
        println!("{}", serde_json::to_string(&out).expect("json values serialise"));
        return Ok(());
    }
    let mut header: Vec<String> = g.e_names().to_vec();
    header.extend(["ῑ".to_owned(), "ε̄".to_owned()]);
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|p| {
            let mut r: Vec<String> = p.hypertree.values().iter().map(u32::to_string).collect();
            r.push(p.internal_inactivity().to_string());
            r.push(p.external_inactivity().to_string());
            r
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            std::iter::once(&header[c])
                .chain(body.iter().map(|r| &r[c]))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(1)
        })
        .collect();
    for row in std::iter::once(&header).chain(&body) {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
            .collect();
        let (values, tail) = cells.split_at(cells.len() - 2);
        println!("{} | {}", values.join(" "), tail.join(" ").trim_end());
    }
    println!("{} hypertrees", rows.len());
    Ok(())
}

fn tutte(cli: &Cli, args: &GraphArgs) -> Outcome<()> {
    let g = load(&args.input, cli.seed)?.oriented(args.hyperedges.side());
    let m = Multigraph::from_bipartite(&g)?;
    let t = tutte_polynomial(&m)?;
    let (i, x) = (interior_from_tutte(&m)?, exterior_from_tutte(&m)?);
    if cli.json {
        let terms: Vec<Value> = t
            .terms()
            .map(|(a, b, c)| {
                let c = serde_json::Number::from_str(&c.to_string()).expect("integers are JSON numbers");
                json!([a, b, c])
            })
            .collect();
        let out = json!({ "tutte": terms, "interior": i, "exterior": x });
        println!("{}", serde_json::to_string(&out).expect("json values serialise"));
    } else {
        println!("T(x, y) = {t}");
        println!("I(x) = {}", i.render("x"));
        println!("X(y) = {}", x.render("y"));
    }
    Ok(())
}

fn print_graph(cli: &Cli, g: &BipGraph) {
    if cli.json {
        println!("{}", g.to_json());
    } else {
        println!("{}", serde_json::to_string_pretty(&g.to_file()).expect("graphs serialise"));
    }
}

fn vertex(g: &BipGraph, label: &str) -> Outcome<Vertex> {
    let found = match label.split_once(':') {
        Some(("v", l)) => g.find(Side::V, l).map(Vertex::V),
        Some(("e", l)) => g.find(Side::E, l).map(Vertex::E),
        _ => g.find_any(label),
    };
    found.ok_or_else(|| Failure::Input(format!("unknown vertex `{label}`")))
}

fn hyperedge(g: &BipGraph, label: &str) -> Outcome<usize> {
    match vertex(g, label)? {
        Vertex::E(e) => Ok(e),
        Vertex::V(_) => Err(Failure::Input(format!("`{label}` is not in the hyperedge class"))),
    }
}

fn transform(cli: &Cli, args: &TransformArgs) -> Outcome<()> {
    let g = load(&args.input, cli.seed)?;
    let need = |k: usize| -> Outcome<&[String]> {
        if args.at.len() == k {
            Ok(&args.at)
        } else {
            Err(Failure::Input(format!("{:?} needs {k} --at label(s), got {}", args.op, args.at.len())))
        }
    };
    let other = || -> Outcome<BipGraph> {
        let raw = args
            .with
            .as_deref()
            .ok_or_else(|| Failure::Input("joins need --with <graph>".into()))?;
        let tokens: Vec<String> = raw.split_whitespace().map(str::to_owned).collect();
        load(&tokens, cli.seed)
    };
    let out = match args.op {
        Op::Dual => g.dual(),
        Op::DeleteLeaf => transforms::delete_valence1(&g, vertex(&g, &need(1)?[0])?)?,
        Op::Delete => transforms::delete_vertex(&g, vertex(&g, &need(1)?[0])?)?,
        Op::Contract => transforms::contract_vertex(&g, vertex(&g, &need(1)?[0])?)?,
        Op::AddPendant => transforms::add_pendant(&g, vertex(&g, &need(1)?[0])?)?,
        Op::Identify => {
            let at = need(2)?;
            transforms::identify_pair(&g, hyperedge(&g, &at[0])?, hyperedge(&g, &at[1])?)?
        }
        Op::AddPair => {
            let at = need(2)?;
            transforms::add_parallel_pair_vertices(&g, hyperedge(&g, &at[0])?, hyperedge(&g, &at[1])?, args.count)?
        }
        Op::VertexJoin => {
            let at = need(2)?;
            let h = other()?;
            transforms::one_point_join(&g, &h, vertex(&g, &at[0])?, vertex(&h, &at[1])?)?
        }
        Op::EdgeJoin => {
            let at = need(4)?;
            let h = other()?;
            let pick = |g: &BipGraph, v: &str, e: &str| -> Outcome<(usize, usize)> {
                let v = g
                    .find(Side::V, v)
                    .ok_or_else(|| Failure::Input(format!("unknown V-vertex `{v}`")))?;
                Ok((v, hyperedge(g, &format!("e:{e}"))?))
            };
            transforms::edge_join(&g, &h, pick(&g, &at[0], &at[1])?, pick(&h, &at[2], &at[3])?)?
        }
        Op::Decompose => {
            let d = transforms::balanced_decomposition(&g)?;
            if cli.json {
                let terms: Vec<Value> = d
                    .terms
                    .iter()
                    .map(|t| {
                        let c = serde_json::Number::from_str(&t.coefficient.to_string())
                            .expect("integers are JSON numbers");
                        json!({ "coefficient": c, "exponent": t.exponent, "graph": t.graph.to_file() })
                    })
                    .collect();
                let out = json!({ "dualized": d.dualized, "terms": terms });
                println!("{}", serde_json::to_string(&out).expect("json values serialise"));
            } else {
                for t in &d.terms {
                    println!("{} x^{} I({})", t.coefficient, t.exponent, t.graph.to_json());
                }
            }
            return Ok(());
        }
    };
    print_graph(cli, &out);
    Ok(())
}

fn verify_cmd(cli: &Cli, check: &str, quick: bool, orders: usize) -> Outcome<()> {
    let config = SuiteConfig {
        seed: cli.seed.unwrap_or(0),
        orders_per_graph: orders,
        quick,
    };
    let (passed, json, lines) = if check == "all" {
        let report = verify::run_suite(&config)?;
        let lines: Vec<String> = report.checks.iter().map(summary).collect();
        (report.passed, serde_json::to_string_pretty(&report), lines)
    } else {
        if !CHECK_NAMES.contains(&check) {
            return Err(Failure::Input(format!(
                "unknown check `{check}`; expected `all` or one of {}",
                CHECK_NAMES.join(", ")
            )));
        }
        let corpus = verify::suite_corpus(&config)?;
        let report = verify::run_check(check, &Engine::new(), &corpus, &config, None)?;
        (report.passed(), serde_json::to_string_pretty(&report), vec![summary(&report)])
    };
    println!("{}", json.expect("reports serialise"));
    for line in lines {
        eprintln!("{line}");
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn summary(r: &verify::CheckReport) -> String {
    let verdict = if r.passed() { "pass" } else { "FAIL" };
    match &r.counterexample {
        Some(cx) => format!("{verdict} {} ({} instances): {} on {}", r.name, r.instances, cx.detail, cx.entry),
        None => format!("{verdict} {} ({} instances)", r.name, r.instances),
    }
}
