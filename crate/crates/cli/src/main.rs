//! `leakyforce`: closures, leaky-forcing checks and numbers, possible forces,
//! leak patterns and the verification suite, all printed as JSON.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use leakyforce::forcing::{closure, possible_forces};
use leakyforce::format::{emit_graph6, looks_like_edge_list, parse_corpus, parse_edge_list, parse_graph6};
use leakyforce::solver::{check_leaky_set, check_pattern_leaky_set, leaky_number, pattern_leaky_number};
use leakyforce::verify::{possible_forces_oracle, run_theorem_suite_with, OracleMode, SuiteConfig, DEFAULT_STATE_CAP};
use leakyforce::{Error, Graph, LeakBudget, LeakKind, LeakPattern, LeakSet, VertexSet};

#[derive(Parser, Debug)]
#[command(
    name = "leakyforce",
    version,
    about = "Zero forcing under vertex, edge, specified and mixed leaks"
)]
struct Cli {
    #[command(flatten)]
    source: GraphSource,

    /// Worker threads for the exhaustive searches.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,

    /// Exit with status 1 when the computed verdict is negative.
    #[arg(long = "assert", global = true)]
    assert_verdict: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GraphSource {
    /// Graph file (graph6 word or edge list).
    #[arg(long, global = true, conflicts_with = "g6")]
    graph: Option<PathBuf>,

    /// Inline graph6 word.
    #[arg(long, global = true)]
    g6: Option<String>,

    /// Format of --graph; detected from the content when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Vertex,
    Edge,
    Specified,
    Mixed,
}

impl From<Kind> for LeakKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Vertex => LeakKind::Vertex,
            Kind::Edge => LeakKind::Edge,
            Kind::Specified => LeakKind::Specified,
            Kind::Mixed => LeakKind::Mixed,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Oracle {
    Completing,
    Reachable,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closure of a blue set under leaks.
    Closure {
        #[arg(long)]
        set: String,
        #[arg(long, default_value = "")]
        leaks: String,
    },
    /// Whether a blue set survives every leak set within a budget.
    Check {
        #[arg(long)]
        set: String,
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Forces that occur in some forcing process of the set.
    Forces {
        #[arg(long)]
        set: String,
        #[arg(long, default_value = "")]
        leaks: String,
        /// Use the state-space oracle instead of blocked closures.
        #[arg(long, value_enum)]
        oracle: Option<Oracle>,
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        state_cap: usize,
    },
    /// Minimum leaky forcing number with a witness.
    Number {
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Queries against a leak pattern given as arcs, e.g. `a:0>1,a:2>1`.
    Pattern {
        #[arg(long)]
        arcs: String,
        #[arg(long, conflicts_with = "number", required_unless_present = "number")]
        set: Option<String>,
        #[arg(long)]
        number: bool,
    },
    /// Run the verification suite over a graph6 corpus.
    Verify {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        ell_max: usize,
        #[arg(long, default_value_t = SuiteConfig::default().splice_samples)]
        splice_samples: usize,
        #[arg(long, default_value_t = SuiteConfig::default().oracle_samples)]
        oracle_samples: usize,
        #[arg(long, default_value_t = SuiteConfig::default().seed)]
        seed: u64,
    },
}

enum Failure {
    Input(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceCap { .. } => Failure::Resource(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

struct Output {
    query: Map<String, Value>,
    result: Value,
    stats: Map<String, Value>,
    negative: bool,
}

fn load_graph(source: &GraphSource) -> Result<Graph, Failure> {
    if let Some(word) = &source.g6 {
        return Ok(parse_graph6(word.trim())?);
    }
    let Some(path) = &source.graph else {
        return Err(Failure::Input(
            "a graph is required: pass --graph <file> or --g6 <word>".into(),
        ));
    };
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let edges = match source.format {
        Some(Format::Edges) => true,
        Some(Format::Graph6) => false,
        None => looks_like_edge_list(&text),
    };
    if edges {
        Ok(parse_edge_list(&text)?)
    } else {
        let word = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .find(|l| !l.is_empty())
            .ok_or_else(|| Failure::Input(format!("{}: no graph6 word", path.display())))?;
        Ok(parse_graph6(word)?)
    }
}

fn parse_set(text: &str, g: &Graph) -> Result<VertexSet, Failure> {
    let mut set = VertexSet::empty(g.n());
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let v: usize = item
            .parse()
            .map_err(|_| Failure::Input(format!("bad vertex id {item:?} in --set")))?;
        if v >= g.n() {
            return Err(Error::VertexRange { vertex: v, n: g.n() }.into());
        }
        set.insert(v);
    }
    Ok(set)
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let mut query = Map::new();
    let mut stats = Map::new();
    let mut insert = |k: &str, v: Value| {
        query.insert(k.to_string(), v);
    };

    if let Command::Verify {
        corpus,
        ell_max,
        splice_samples,
        oracle_samples,
        seed,
    } = &cli.command
    {
        if *ell_max < 1 {
            return Err(Failure::Input("--ell-max must be at least 1".into()));
        }
        let text = fs::read_to_string(corpus).map_err(|e| Failure::Input(format!("{}: {e}", corpus.display())))?;
        let graphs = parse_corpus(&text)?;
        let config = SuiteConfig {
            ell_max: *ell_max,
            splice_samples: *splice_samples,
            oracle_samples: *oracle_samples,
            seed: *seed,
            ..SuiteConfig::default()
        };
        let report = run_theorem_suite_with(&graphs, &config);
        insert("verb", json!("verify"));
        insert("corpus", json!(corpus.display().to_string()));
        insert("ell_max", json!(ell_max));
        stats.insert("runtime_ms".into(), json!(report.runtime_ms as u64));
        return Ok(Output {
            negative: report.totals.violations > 0,
            result: json!(report),
            query,
            stats,
        });
    }

    let g = load_graph(&cli.source)?;
    insert("graph6", emit_graph6(&g).map(Value::from).unwrap_or(Value::Null));

    let (result, negative) = match &cli.command {
        Command::Closure { set, leaks } => {
            let b = parse_set(set, &g)?;
            let l = LeakSet::parse_for(leaks, &g)?;
            insert("verb", json!("closure"));
            insert("set", json!(b));
            insert("leaks", json!(l));
            let r = closure(&g, &b, &l);
            let complete = r.is_complete();
            let mut v = json!(r);
            v["complete"] = json!(complete);
            (v, !complete)
        }
        Command::Check { set, ell, kind } => {
            let b = parse_set(set, &g)?;
            let kind = LeakKind::from(*kind);
            insert("verb", json!("check"));
            insert("set", json!(b));
            insert("ell", json!(ell));
            insert("kind", json!(kind));
            let v = check_leaky_set(&g, &b, LeakBudget::new(kind, *ell));
            stats.insert("leaksets_checked".into(), json!(v.leaksets_checked));
            (json!(v), !v.holds)
        }
        Command::Forces {
            set,
            leaks,
            oracle,
            state_cap,
        } => {
            let b = parse_set(set, &g)?;
            let l = LeakSet::parse_for(leaks, &g)?;
            insert("verb", json!("forces"));
            insert("set", json!(b));
            insert("leaks", json!(l));
            let (method, forces) = match oracle {
                None => ("blocked_closure", possible_forces(&g, &b, &l)),
                Some(mode) => {
                    let mode = match mode {
                        Oracle::Completing => OracleMode::Completing,
                        Oracle::Reachable => OracleMode::Reachable,
                    };
                    let name = match mode {
                        OracleMode::Completing => "oracle_completing",
                        OracleMode::Reachable => "oracle_reachable",
                    };
                    (name, possible_forces_oracle(&g, &b, &l, mode, *state_cap)?)
                }
            };
            (json!({ "method": method, "forces": forces }), false)
        }
        Command::Number { ell, kind } => {
            let kind = LeakKind::from(*kind);
            insert("verb", json!("number"));
            insert("ell", json!(ell));
            insert("kind", json!(kind));
            let r = leaky_number(&g, LeakBudget::new(kind, *ell));
            stats.insert("subsets_checked".into(), json!(r.stats.subsets_checked));
            stats.insert("leaksets_checked".into(), json!(r.stats.leaksets_checked));
            (json!(r), false)
        }
        Command::Pattern { arcs, set, number } => {
            let pattern = LeakPattern::parse(arcs)?;
            insert("verb", json!("pattern"));
            insert("arcs", json!(pattern));
            let independence = pattern.independence_number();
            match (set, number) {
                (Some(set), false) => {
                    let b = parse_set(set, &g)?;
                    insert("set", json!(b));
                    let v = check_pattern_leaky_set(&g, &b, &pattern);
                    stats.insert("leaksets_checked".into(), json!(v.leaksets_checked));
                    let mut out = json!(v);
                    out["independence"] = json!(independence);
                    (out, !v.holds)
                }
                _ => {
                    let r = pattern_leaky_number(&g, &pattern);
                    stats.insert("subsets_checked".into(), json!(r.stats.subsets_checked));
                    stats.insert("leaksets_checked".into(), json!(r.stats.leaksets_checked));
                    let mut out = json!(r);
                    out["independence"] = json!(independence);
                    (out, false)
                }
            }
        }
        Command::Verify { .. } => unreachable!("handled above"),
    };
    Ok(Output {
        query,
        result,
        stats,
        negative,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.workers.max(1)).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(mut out) => {
            out.stats
                .entry("runtime_ms")
                .or_insert_with(|| json!(start.elapsed().as_millis() as u64));
            let doc = json!({ "query": out.query, "result": out.result, "stats": out.stats });
            println!("{}", serde_json::to_string_pretty(&doc).expect("JSON values serialize"));
            if cli.assert_verdict && out.negative {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
