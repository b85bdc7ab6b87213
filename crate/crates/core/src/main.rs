use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sierpcolor::coloring::{validate_edge, validate_vertex, EdgeColoring, Validity, VertexColoring};
use sierpcolor::constructions::{
    cycle_s2_coloring, edge_lift_condition_i, edge_lift_condition_ii, edge_lift_general,
    extreme_plus_one_s2, lift_vertex_plus_one, lift_vertex_projection, ChoiceFunction,
};
use sierpcolor::error::Error;
use sierpcolor::graph::Graph;
use sierpcolor::reductions::{common_neighbor_graph, gadget_h, gadget_p, tilde_graph, ConflictGraph};
use sierpcolor::repro::{self, ReproOptions, RowStatus, Suite};
use sierpcolor::s3::{self, S3Type};
use sierpcolor::sierpinski::{Materialized, SierpinskiGraph, DEFAULT_VERTEX_BUDGET};
use sierpcolor::solver::{
    self, constrained_certificate_search, find_embedding, injective_chromatic_index,
    injective_chromatic_number, CertCondition, ConstrainedStatus, EmbeddingStatus,
    InjectiveStatus, SolveStatus,
};

/// Exit codes: 0 success, 2 input error, 3 budget exhausted, 4 mismatch or
/// violation.
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

#[derive(Parser)]
#[command(name = "sierpcolor", version, about = "Generalized Sierpinski graphs and injective colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceKind {
    CommonNeighbor,
    Tilde,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Vertex,
    Edge,
}

#[derive(Clone, Copy, ValueEnum)]
enum Condition {
    I,
    Ii,
    #[value(name = "typeA")]
    TypeA,
    #[value(name = "typeB")]
    TypeB,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    #[value(name = "vlift+1")]
    VliftPlusOne,
    #[value(name = "vlift-proj")]
    VliftProj,
    #[value(name = "cycle-s2")]
    CycleS2,
    #[value(name = "extreme+1")]
    ExtremePlusOne,
    Elift,
    EliftI,
    EliftIi,
    #[value(name = "s3-typeA")]
    S3TypeA,
    #[value(name = "s3-typeB")]
    S3TypeB,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a base or Sierpinski graph as JSON or DOT.
    Gen {
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Vertex budget for materialization.
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        vertex_budget: usize,
    },
    /// Emit a conflict graph with its node map.
    Reduce {
        #[arg(long)]
        base: Option<String>,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, value_enum)]
        kind: ReduceKind,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Sidecar node-map table (tsv); defaults to <out>.map.tsv.
        #[arg(long)]
        map_out: Option<PathBuf>,
    },
    /// Exact injective chromatic number / index, or k-decision.
    Solve {
        #[arg(long)]
        base: Option<String>,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, value_enum)]
        variant: Variant,
        /// Decide k-colorability instead of computing the exact value.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum)]
        condition: Option<Condition>,
        /// Comma-separated A-side of the base bipartition (condition ii).
        #[arg(long)]
        bipartition: Option<String>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Run a coloring construction.
    Construct {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        bipartition: Option<String>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check a coloring file against a graph.
    Verify {
        #[arg(long)]
        base: Option<String>,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Search for a subgraph embedding.
    Embed {
        /// H, P, or a graph JSON file.
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute the headline values and print the MATCH/MISMATCH table.
    Repro {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = sierpcolor::corpus::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        cert_dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::VertexBudget { .. } => EXIT_BUDGET,
        Error::Internal(_) => 1,
        Error::Io(_) => EXIT_INPUT,
        _ => EXIT_INPUT,
    }
}

fn default_budget(flag: Option<u64>) -> u64 {
    if let Some(b) = flag {
        return b;
    }
    std::env::var("SIERP_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(solver::DEFAULT_EXPANSION_BUDGET)
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(Error::from),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load_graph(
    base: &Option<String>,
    n: usize,
    graph: &Option<PathBuf>,
) -> Result<(Graph, Option<Materialized>), Error> {
    match (base, graph) {
        (Some(spec), None) => {
            let b = Graph::parse_spec(spec)?;
            let m = SierpinskiGraph::new(b, n)?.materialize()?;
            Ok((m.graph.clone(), Some(m)))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            Ok((Graph::from_json(&text)?, None))
        }
        _ => Err(Error::InvalidInput("provide exactly one of --base or --graph".into())),
    }
}

fn parse_bipartition(text: &Option<String>) -> Result<Option<Vec<usize>>, Error> {
    match text {
        None => Ok(None),
        Some(t) => {
            let side = t
                .split(',')
                .filter(|p| !p.is_empty())
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidInput(format!("bad bipartition entry {p:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Some(side))
        }
    }
}

fn conflict_output(cg: &ConflictGraph, format: Format) -> String {
    match format {
        Format::Json => cg.graph.to_json(),
        Format::Dot => cg.graph.to_dot(),
    }
}

fn node_map_table(cg: &ConflictGraph) -> String {
    let mut out = String::from("node\tsource\n");
    for (i, name) in cg.node_names.iter().enumerate() {
        out.push_str(&format!("{i}\t{name}\n"));
    }
    out
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Gen { base, n, format, out, vertex_budget } => {
            let b = Graph::parse_spec(&base)?;
            let m = SierpinskiGraph::new(b, n)?.materialize_with_budget(vertex_budget)?;
            let content = match format {
                Format::Json => m.graph.to_json(),
                Format::Dot => m.graph.to_dot(),
            };
            emit(&out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce { base, n, graph, kind, format, out, map_out } => {
            let (g, _) = load_graph(&base, n, &graph)?;
            let cg = match kind {
                ReduceKind::CommonNeighbor => common_neighbor_graph(&g),
                ReduceKind::Tilde => tilde_graph(&g)?,
            };
            emit(&out, &conflict_output(&cg, format))?;
            let map_path = map_out.or_else(|| {
                out.as_ref().map(|p| {
                    let mut name = p.as_os_str().to_owned();
                    name.push(".map.tsv");
                    PathBuf::from(name)
                })
            });
            if let Some(path) = map_path {
                std::fs::write(path, node_map_table(&cg))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve {
            base,
            n,
            graph,
            variant,
            k,
            condition,
            bipartition,
            budget,
            certificate,
        } => {
            let budget = default_budget(budget);
            let (g, mat) = load_graph(&base, n, &graph)?;
            let a_side = parse_bipartition(&bipartition)?;

            if let Some(cond) = condition {
                let m = mat.ok_or_else(|| {
                    Error::InvalidInput("conditions need a Sierpinski instance (--base/--n)".into())
                })?;
                if !matches!(variant, Variant::Edge) {
                    return Err(Error::InvalidInput("conditions apply to the edge variant".into()));
                }
                let k = k.ok_or_else(|| Error::InvalidInput("conditions need --k".into()))?;
                let cond = match cond {
                    Condition::I => CertCondition::DistanceI,
                    Condition::Ii => CertCondition::BipartiteII {
                        a_side: a_side.ok_or_else(|| {
                            Error::InvalidInput("condition ii needs --bipartition".into())
                        })?,
                    },
                    Condition::TypeA => CertCondition::TypeA,
                    Condition::TypeB => CertCondition::TypeB,
                };
                let out = constrained_certificate_search(&m, k, &cond, budget)?;
                eprintln!("explored {} nodes", out.explored);
                return match out.status {
                    ConstrainedStatus::Sat(cert) => {
                        println!("SAT");
                        if let Some(path) = certificate {
                            std::fs::write(path, cert.to_json(&m.graph))?;
                        }
                        Ok(ExitCode::SUCCESS)
                    }
                    ConstrainedStatus::Unsat => {
                        println!("UNSAT");
                        Ok(ExitCode::SUCCESS)
                    }
                    ConstrainedStatus::Unknown => {
                        println!("UNKNOWN");
                        Ok(ExitCode::from(EXIT_BUDGET))
                    }
                };
            }

            if let Some(k) = k {
                let conflict = match variant {
                    Variant::Vertex => common_neighbor_graph(&g),
                    Variant::Edge => tilde_graph(&g)?,
                };
                let out =
                    solver::k_colorable(&conflict.graph, k, &solver::ColorConstraints::none(), budget)?;
                eprintln!("explored {} nodes", out.explored);
                return match out.status {
                    SolveStatus::Sat(colors) => {
                        println!("SAT");
                        if let Some(path) = certificate {
                            let text = match variant {
                                Variant::Vertex => {
                                    VertexColoring::new(&g, k, colors)?.to_json(&g)
                                }
                                Variant::Edge => EdgeColoring::new(&g, k, colors)?.to_json(&g),
                            };
                            std::fs::write(path, text)?;
                        }
                        Ok(ExitCode::SUCCESS)
                    }
                    SolveStatus::Unsat => {
                        println!("UNSAT");
                        Ok(ExitCode::SUCCESS)
                    }
                    SolveStatus::Unknown => {
                        println!("UNKNOWN");
                        Ok(ExitCode::from(EXIT_BUDGET))
                    }
                };
            }

            match variant {
                Variant::Vertex => {
                    let out = injective_chromatic_number(&g, budget)?;
                    eprintln!("explored {} nodes", out.explored);
                    match out.status {
                        InjectiveStatus::Exact { value, certificate: cert } => {
                            println!("{value}");
                            if let Some(path) = certificate {
                                std::fs::write(path, cert.to_json(&g))?;
                            }
                            Ok(ExitCode::SUCCESS)
                        }
                        InjectiveStatus::Unknown { lower, upper } => {
                            println!("UNKNOWN [{lower},{upper}]");
                            Ok(ExitCode::from(EXIT_BUDGET))
                        }
                    }
                }
                Variant::Edge => {
                    let out = injective_chromatic_index(&g, budget)?;
                    eprintln!("explored {} nodes", out.explored);
                    match out.status {
                        InjectiveStatus::Exact { value, certificate: cert } => {
                            println!("{value}");
                            if let Some(path) = certificate {
                                std::fs::write(path, cert.to_json(&g))?;
                            }
                            Ok(ExitCode::SUCCESS)
                        }
                        InjectiveStatus::Unknown { lower, upper } => {
                            println!("UNKNOWN [{lower},{upper}]");
                            Ok(ExitCode::from(EXIT_BUDGET))
                        }
                    }
                }
            }
        }
        Command::Construct { theorem, base, n, input, out, bipartition, budget } => {
            let budget = default_budget(budget);
            let b = Graph::parse_spec(&base)?;
            let read_input = || -> Result<String, Error> {
                let path = input
                    .as_ref()
                    .ok_or_else(|| Error::InvalidInput("this construction needs --in".into()))?;
                Ok(std::fs::read_to_string(path)?)
            };
            let content = match theorem {
                Theorem::CycleS2 => {
                    let k = b.order();
                    let (m2, f) = cycle_s2_coloring(k)?;
                    f.to_json(&m2.graph)
                }
                Theorem::VliftPlusOne | Theorem::VliftProj => {
                    let m2 = SierpinskiGraph::new(b.clone(), 2)?.materialize()?;
                    let f2 = VertexColoring::from_json(&m2.graph, &read_input()?)?;
                    let mn = SierpinskiGraph::new(b, n)?.materialize()?;
                    let lifted = match theorem {
                        Theorem::VliftPlusOne => lift_vertex_plus_one(&f2, &m2, &mn)?,
                        _ => lift_vertex_projection(&f2, &m2, &mn)?,
                    };
                    lifted.to_json(&mn.graph)
                }
                Theorem::ExtremePlusOne => {
                    let f = VertexColoring::from_json(&b, &read_input()?)?;
                    let m2 = SierpinskiGraph::new(b.clone(), 2)?.materialize()?;
                    extreme_plus_one_s2(&f, &b, &m2)?.to_json(&m2.graph)
                }
                Theorem::Elift | Theorem::EliftI => {
                    let m3 = SierpinskiGraph::new(b.clone(), 3)?.materialize()?;
                    let f3 = EdgeColoring::from_json(&m3.graph, &read_input()?)?;
                    let mn = SierpinskiGraph::new(b.clone(), n)?.materialize()?;
                    let choice = ChoiceFunction::lexicographic(&b);
                    let lifted = match theorem {
                        Theorem::Elift => edge_lift_general(&f3, &m3, &mn, &choice)?,
                        _ => edge_lift_condition_i(&f3, &m3, &mn, &choice)?,
                    };
                    lifted.to_json(&mn.graph)
                }
                Theorem::EliftIi => {
                    let side = parse_bipartition(&bipartition)?
                        .ok_or_else(|| Error::InvalidInput("elift-ii needs --bipartition".into()))?;
                    let m3 = SierpinskiGraph::new(b.clone(), 3)?.materialize()?;
                    let f3 = EdgeColoring::from_json(&m3.graph, &read_input()?)?;
                    let mn = SierpinskiGraph::new(b, n)?.materialize()?;
                    edge_lift_condition_ii(&f3, &m3, &mn, &side)?.to_json(&mn.graph)
                }
                Theorem::S3TypeA | Theorem::S3TypeB => {
                    if b.order() != 3 || b.size() != 3 {
                        return Err(Error::InvalidInput("typed colorings need --base K3".into()));
                    }
                    let want = if matches!(theorem, Theorem::S3TypeA) { S3Type::A } else { S3Type::B };
                    if n < 3 {
                        return Err(Error::InvalidInput("typed colorings need --n >= 3".into()));
                    }
                    let (mut a, mut b_col) = s3::s3_base_colorings(budget)?;
                    let mut m_prev = SierpinskiGraph::new(Graph::complete(3), 3)?.materialize()?;
                    for dim in 4..=n {
                        let m_next = SierpinskiGraph::new(Graph::complete(3), dim)?.materialize()?;
                        let na = s3::s3_compose(&a, &b_col, S3Type::A, &m_prev, &m_next)?;
                        let nb = s3::s3_compose(&a, &b_col, S3Type::B, &m_prev, &m_next)?;
                        a = na;
                        b_col = nb;
                        m_prev = m_next;
                    }
                    let typed = match want {
                        S3Type::A => a,
                        S3Type::B => b_col,
                    };
                    typed.coloring.to_json(&m_prev.graph)
                }
            };
            emit(&out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { base, n, graph, coloring } => {
            let (g, _mat) = load_graph(&base, n, &graph)?;
            let text = std::fs::read_to_string(coloring)?;
            let value: serde_json::Value = serde_json::from_str(&text)?;
            let kind = value["kind"].as_str().unwrap_or("");
            let validity = match kind {
                "vertex" => {
                    let f = VertexColoring::from_json(&g, &text)?;
                    validate_vertex(&g, &f)?
                }
                "edge" => {
                    let c = EdgeColoring::from_json(&g, &text)?;
                    validate_edge(&g, &c)?
                }
                other => {
                    return Err(Error::InvalidInput(format!("unknown coloring kind {other:?}")))
                }
            };
            match validity {
                Validity::Valid => {
                    println!("OK");
                    Ok(ExitCode::SUCCESS)
                }
                Validity::Invalid(v) => {
                    println!("VIOLATION: {}", v.describe(&g));
                    Ok(ExitCode::from(EXIT_MISMATCH))
                }
            }
        }
        Command::Embed { pattern, base, n, budget, out } => {
            let budget = default_budget(budget);
            let pat = match pattern.as_str() {
                "H" | "h" => gadget_h(),
                "P" | "p" => gadget_p(),
                path => Graph::from_json(&std::fs::read_to_string(path)?)?,
            };
            let b = Graph::parse_spec(&base)?;
            let m = SierpinskiGraph::new(b, n)?.materialize()?;
            let result = find_embedding(&pat, &m.graph, budget)?;
            eprintln!("explored {} nodes", result.explored);
            match result.status {
                EmbeddingStatus::Found(map) => {
                    let words: Vec<String> = map.iter().map(|&v| m.graph.label(v)).collect();
                    let json = serde_json::json!({
                        "pattern": pattern,
                        "host_base": base,
                        "host_dim": n,
                        "map": words,
                    });
                    let text = serde_json::to_string_pretty(&json).expect("embedding serializes");
                    emit(&out, &(text + "\n"))?;
                    Ok(ExitCode::SUCCESS)
                }
                EmbeddingStatus::NotFound => {
                    println!("NONE");
                    Ok(ExitCode::SUCCESS)
                }
                EmbeddingStatus::Unknown => {
                    println!("UNKNOWN");
                    Ok(ExitCode::from(EXIT_BUDGET))
                }
            }
        }
        Command::Repro { suite, budget, seed, jobs, out, cert_dir } => {
            let opts = ReproOptions {
                suite: Suite::parse(&suite)?,
                budget: default_budget(budget),
                seed,
                jobs,
                cert_dir,
            };
            let rows = repro::run(&opts)?;
            let table = repro::to_tsv(&rows);
            emit(&out, &table)?;
            let mismatch = rows.iter().any(|r| r.status == RowStatus::Mismatch);
            let skipped = rows.iter().any(|r| r.status == RowStatus::SkippedBudget);
            if mismatch {
                Ok(ExitCode::from(EXIT_MISMATCH))
            } else if skipped {
                Ok(ExitCode::from(EXIT_BUDGET))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}
