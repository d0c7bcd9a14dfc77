//! Command-line front door: generation, structural transforms, construction,
//! verification, dimension reduction, the exact solver, and suitable-family
//! tooling. Exit code 0 on success, 1 on domain errors (invalid
//! representation, hypothesis violation), 2 on usage errors. Data goes to
//! `-o` files or stdout, diagnostics to stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use boxrep::construct::{
    boxrep_line_graph, boxrep_subdivided_complete, boxrep_subdivision_auto,
    boxrep_fully_subdivided,
};
use boxrep::gen;
use boxrep::graph::{full_subdivision, greedy_coloring, hypercube, line_graph};
use boxrep::interval::{reduce_dimensions, verify_box_representation};
use boxrep::oracle::{exact_boxicity, OracleCaps};
use boxrep::suitable::{
    build_simply_3_suitable, extract_family_from_boxrep, min_simply_3_suitable_size,
    simply_3_suitable_witness,
};
use boxrep::textio::{
    parse_boxrep, parse_graph, parse_perms, write_boxrep, write_certificate, write_graph,
    write_multigraph, write_perms, AnyGraph,
};

#[derive(Parser)]
#[command(
    name = "boxrep",
    version,
    about = "Build, verify and exactly solve axis-parallel box representations of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArg {
    /// Write the result here instead of stdout.
    #[arg(short = 'o', long = "output", value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph in the text format.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Fully subdivide a simple graph (edge j becomes vertex n+j).
    Subdivide {
        input: PathBuf,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Line graph of a multigraph (vertex j is edge j).
    Linegraph {
        input: PathBuf,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Build a box representation.
    Construct {
        #[command(subcommand)]
        what: ConstructCommand,
    },
    /// Check a box representation against a graph.
    Verify { graph: PathBuf, rep: PathBuf },
    /// Greedily drop dimensions that are not needed for validity.
    Reduce {
        graph: PathBuf,
        rep: PathBuf,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Exact boxicity with a witness certificate (desk-scale brute force).
    Exact {
        graph: PathBuf,
        /// Maximum number of non-edges the search will accept.
        #[arg(long, value_name = "K")]
        caps: Option<usize>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Simply 3-suitable permutation family tooling.
    Suitable {
        #[command(subcommand)]
        what: SuitableCommand,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Complete graph on n vertices.
    Complete {
        n: usize,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Cycle on n vertices (n >= 3).
    Cycle {
        n: usize,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Hypercube on 2^d vertices.
    Hypercube {
        d: usize,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Seed-deterministic multigraph with m uniform non-loop edges.
    RandomMultigraph {
        n: usize,
        m: usize,
        seed: u64,
        #[command(flatten)]
        out: OutputArg,
    },
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// Representation of the full subdivision of the input graph, branching
    /// on its shape (complete / odd cycle / greedy coloring).
    Subdivision {
        input: PathBuf,
        /// Vertex order for the greedy coloring (whitespace-separated ids);
        /// forces the coloring branch.
        #[arg(long, value_name = "FILE")]
        order: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Representation of the fully subdivided complete graph K_n.
    SubdividedComplete {
        n: usize,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Representation of the line graph of the input multigraph.
    Linegraph {
        input: PathBuf,
        /// Write the per-color-class pipeline diagnostics here.
        #[arg(long, value_name = "PATH")]
        emit_decomposition: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArg,
    },
}

#[derive(Subcommand)]
enum SuitableCommand {
    /// Build the recursive family for [n].
    Build {
        n: usize,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Verify a family file; reports a witness on failure.
    Check { input: PathBuf },
    /// Exact minimum family size by exhaustive search (2 <= n <= 7).
    Min {
        n: usize,
        /// Largest family size the search may try.
        #[arg(long, default_value_t = 4)]
        cap: usize,
    },
    /// Extract endpoint-order permutations from a representation of the
    /// fully subdivided K_n.
    Extract {
        rep: PathBuf,
        n: usize,
        #[command(flatten)]
        out: OutputArg,
    },
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(out: &OutputArg, data: &str) -> Result<(), String> {
    match &out.output {
        Some(path) => {
            fs::write(path, data).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => {
            print!("{data}");
            Ok(())
        }
    }
}

fn load_simple(path: &Path) -> Result<boxrep::Graph, String> {
    match parse_graph(&read(path)?).map_err(|e| e.to_string())? {
        AnyGraph::Simple(g) => Ok(g),
        AnyGraph::Multi(_) => Err(format!(
            "{}: expected a simple graph, found a multigraph",
            path.display()
        )),
    }
}

fn load_multi(path: &Path) -> Result<boxrep::Multigraph, String> {
    match parse_graph(&read(path)?).map_err(|e| e.to_string())? {
        AnyGraph::Multi(h) => Ok(h),
        AnyGraph::Simple(g) => {
            // a simple graph is a multigraph without repeated edges
            boxrep::Multigraph::from_edge_list(g.n(), g.edges()).map_err(|e| e.to_string())
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Gen { what } => {
            let (text, out) = match what {
                GenCommand::Complete { n, out } => (write_graph(&gen::complete(n)), out),
                GenCommand::Cycle { n, out } => (
                    write_graph(&gen::cycle(n).map_err(|e| e.to_string())?),
                    out,
                ),
                GenCommand::Hypercube { d, out } => (
                    write_graph(&hypercube(d).map_err(|e| e.to_string())?),
                    out,
                ),
                GenCommand::RandomMultigraph { n, m, seed, out } => (
                    write_multigraph(
                        &gen::random_multigraph(n, m, seed).map_err(|e| e.to_string())?,
                    ),
                    out,
                ),
            };
            emit(&out, &text)?;
            Ok(0)
        }
        Command::Subdivide { input, out } => {
            let g = load_simple(&input)?;
            let (sub, _) = full_subdivision(&g);
            emit(&out, &write_graph(&sub))?;
            Ok(0)
        }
        Command::Linegraph { input, out } => {
            let h = load_multi(&input)?;
            let (g, _) = line_graph(&h);
            emit(&out, &write_graph(&g))?;
            Ok(0)
        }
        Command::Construct { what } => match what {
            ConstructCommand::Subdivision { input, order, out } => {
                let h = load_simple(&input)?;
                let built = match order {
                    None => boxrep_subdivision_auto(&h).map_err(|e| e.to_string())?,
                    Some(path) => {
                        let text = read(&path)?;
                        let ids = text
                            .lines()
                            .filter(|l| !l.trim_start().starts_with('#'))
                            .flat_map(str::split_whitespace)
                            .map(|t| {
                                t.parse::<usize>()
                                    .map_err(|_| format!("{}: bad id `{t}`", path.display()))
                            })
                            .collect::<Result<Vec<_>, _>>()?;
                        let col = greedy_coloring(&h, &ids).map_err(|e| e.to_string())?;
                        boxrep_fully_subdivided(&h, &col).map_err(|e| e.to_string())?
                    }
                };
                emit(&out, &write_boxrep(&built.rep))?;
                eprintln!(
                    "subdivided graph: {} vertices, {} edges; dims={}",
                    built.graph.n(),
                    built.graph.edge_count(),
                    built.rep.k()
                );
                Ok(0)
            }
            ConstructCommand::SubdividedComplete { n, out } => {
                let built = boxrep_subdivided_complete(n).map_err(|e| e.to_string())?;
                emit(&out, &write_boxrep(&built.rep))?;
                eprintln!(
                    "subdivided K_{n}: {} vertices; dims={}",
                    built.graph.n(),
                    built.rep.k()
                );
                Ok(0)
            }
            ConstructCommand::Linegraph {
                input,
                emit_decomposition,
                out,
            } => {
                let h = load_multi(&input)?;
                let built = boxrep_line_graph(&h).map_err(|e| e.to_string())?;
                emit(&out, &write_boxrep(&built.rep))?;
                if let Some(path) = emit_decomposition {
                    fs::write(&path, built.decomposition.dump())
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                }
                eprintln!(
                    "line graph: {} vertices, {} edges; dims={}",
                    built.graph.n(),
                    built.graph.edge_count(),
                    built.rep.k()
                );
                Ok(0)
            }
        },
        Command::Verify { graph, rep } => {
            let g = load_simple(&graph)?;
            let b = parse_boxrep(&read(&rep)?).map_err(|e| e.to_string())?;
            let report = verify_box_representation(&g, &b).map_err(|e| e.to_string())?;
            if report.valid {
                println!("valid, dims={}", b.k());
                Ok(0)
            } else {
                println!("invalid, dims={}", b.k());
                for (u, v) in &report.missing_edges {
                    println!("missing edge: {u} {v}");
                }
                for (u, v) in &report.excess_pairs {
                    println!("excess pair: {u} {v}");
                }
                for (d, (u, v)) in &report.supergraph_violations {
                    println!("dimension {d} is not a supergraph: misses edge {u} {v}");
                }
                Ok(1)
            }
        }
        Command::Reduce { graph, rep, out } => {
            let g = load_simple(&graph)?;
            let b = parse_boxrep(&read(&rep)?).map_err(|e| e.to_string())?;
            let reduced = reduce_dimensions(&g, &b).map_err(|e| e.to_string())?;
            emit(&out, &write_boxrep(&reduced))?;
            eprintln!("dims: {} -> {}", b.k(), reduced.k());
            Ok(0)
        }
        Command::Exact { graph, caps, out } => {
            let g = load_simple(&graph)?;
            let mut oracle_caps = OracleCaps::default();
            if let Some(k) = caps {
                oracle_caps.max_non_edges = k;
            }
            let cert = exact_boxicity(&g, &oracle_caps).map_err(|e| e.to_string())?;
            emit(&out, &write_certificate(&cert))?;
            Ok(0)
        }
        Command::Suitable { what } => match what {
            SuitableCommand::Build { n, out } => {
                let family = build_simply_3_suitable(n).map_err(|e| e.to_string())?;
                emit(&out, &write_perms(&family))?;
                Ok(0)
            }
            SuitableCommand::Check { input } => {
                let family = parse_perms(&read(&input)?).map_err(|e| e.to_string())?;
                match simply_3_suitable_witness(&family) {
                    None => {
                        println!("simply 3-suitable: yes");
                        Ok(0)
                    }
                    Some((x, s, t)) => {
                        println!("simply 3-suitable: no");
                        println!("witness: {x} lies between {s} and {t} in every member");
                        Ok(1)
                    }
                }
            }
            SuitableCommand::Min { n, cap } => {
                let size = min_simply_3_suitable_size(n, cap).map_err(|e| e.to_string())?;
                println!("{size}");
                Ok(0)
            }
            SuitableCommand::Extract { rep, n, out } => {
                let b = parse_boxrep(&read(&rep)?).map_err(|e| e.to_string())?;
                let ext = extract_family_from_boxrep(&b, n).map_err(|e| e.to_string())?;
                emit(&out, &write_perms(&ext.family))?;
                eprintln!(
                    "extracted family simply 3-suitable: {}",
                    if ext.suitable { "yes" } else { "no" }
                );
                Ok(if ext.suitable { 0 } else { 1 })
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
