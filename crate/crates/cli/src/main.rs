//! `nci`: classify graphs and squarefree monomial ideals, compute Betti
//! tables, and run the exhaustive harnesses from the command line.
//!
//! Exit status is 0 on success, 2 when the input cannot be parsed (or the
//! command line itself is malformed) and 3 when a precondition fails.

mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nci::enumerate::{self, HypergraphSearchParams};
use nci::io::{parse_graph_input, parse_ideal_input, GraphFormat};
use nci::{edge_ideal, graph_of, Graph, Method, MonomialIdeal, VertexId};

#[derive(Parser)]
#[command(name = "nci", version, about = "Nearly complete intersection edge ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format. `dot` applies to classify and invert.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    /// graph6 for a single whitespace-free line that decodes, else edge list.
    Auto,
    Edges,
    Graph6,
}

#[derive(Args)]
struct Input {
    /// Input file; `-` or nothing reads standard input.
    path: Option<PathBuf>,

    /// Inline input with `;` separating lines, instead of a file.
    #[arg(long, conflicts_with = "path")]
    inline: Option<String>,

    /// Read a monomial list instead of a graph.
    #[arg(long)]
    ideal: bool,

    /// How to read graph input.
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    input_format: InputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Decide CI / NCI / NEITHER with supporting evidence.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Invert every vertex instead of searching for an obstruction.
        #[arg(long)]
        definitional: bool,
    },
    /// Print the inversion of a graph at a vertex.
    Invert {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        vertex: String,
    },
    /// Test whether the ideal (or edge ideal) is a complete intersection.
    CiCheck {
        #[command(flatten)]
        input: Input,
    },
    /// Graded Betti numbers of R/I.
    Betti {
        #[command(flatten)]
        input: Input,
    },
    /// Compare the total Betti number with 2^c + 2^(c-1).
    TotalRank {
        #[command(flatten)]
        input: Input,
    },
    /// One graph per isomorphism class of connected graphs on n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Run both deciders on every connected graph with n vertices.
    CrossValidate {
        #[arg(long)]
        n: usize,
    },
    /// Verdict counts for n = 1..=n-max.
    Census {
        #[arg(long)]
        n_max: usize,
    },
    /// Search for NCI ideals with a generator of degree three or more.
    HypergraphSearch {
        #[arg(long, default_value_t = 7)]
        max_vars: usize,
        #[arg(long, default_value_t = 8)]
        max_gens: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<nci::Error> for Failure {
    fn from(e: nci::Error) -> Self {
        Failure {
            code: if e.is_parse_error() { 2 } else { 3 },
            message: e.to_string(),
        }
    }
}

fn precondition(message: impl Into<String>) -> Failure {
    Failure {
        code: 3,
        message: message.into(),
    }
}

fn read_text(input: &Input) -> Result<String, Failure> {
    if let Some(inline) = &input.inline {
        return Ok(inline.replace(';', "\n"));
    }
    let unreadable = |e: io::Error| Failure {
        code: 2,
        message: format!("cannot read input: {e}"),
    };
    match &input.path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).map_err(unreadable),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(unreadable)?;
            Ok(s)
        }
    }
}

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    if input.ideal {
        let ideal = read_ideal(input)?;
        return graph_of(&ideal).map_err(Failure::from);
    }
    let format = match input.input_format {
        InputFormat::Auto => GraphFormat::Auto,
        InputFormat::Edges => GraphFormat::EdgeList,
        InputFormat::Graph6 => GraphFormat::Graph6,
    };
    Ok(parse_graph_input(&read_text(input)?, format)?)
}

fn read_ideal(input: &Input) -> Result<MonomialIdeal, Failure> {
    let parsed = parse_ideal_input(&read_text(input)?)?;
    for w in &parsed.warnings {
        eprintln!("warning: {w}");
    }
    Ok(parsed.ideal)
}

/// The ideal named by the input: as given under `--ideal`, otherwise the
/// edge ideal of the graph.
fn read_as_ideal(input: &Input) -> Result<MonomialIdeal, Failure> {
    if input.ideal {
        read_ideal(input)
    } else {
        Ok(edge_ideal(&read_graph(input)?))
    }
}

fn json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn no_dot(format: Format, command: &str) -> Result<(), Failure> {
    if format == Format::Dot {
        Err(precondition(format!("--format dot is not available for {command}")))
    } else {
        Ok(())
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Classify { input, definitional } => {
            let method = if *definitional {
                Method::Definitional
            } else {
                Method::Structural
            };
            let (report, graph) = if input.ideal {
                let ideal = read_ideal(input)?;
                (nci::classify_ideal(&ideal, method)?, graph_of(&ideal).ok())
            } else {
                let g = read_graph(input)?;
                let report = match method {
                    Method::Structural => nci::classify(&g),
                    Method::Definitional => nci::is_nci_definitional(&g),
                };
                (report, Some(g))
            };
            Ok(match format {
                Format::Json => json(&report),
                Format::Text => render::classification(&report),
                Format::Dot => {
                    let g = graph.ok_or_else(|| precondition("--format dot needs an ideal generated in degrees one and two"))?;
                    nci::io::to_dot(&g, report.obstruction())
                }
            })
        }
        Command::Invert { input, vertex } => {
            let g = read_graph(input)?;
            let v = VertexId::new(vertex.as_str())?;
            let inverted = g.invert_vertex(&v)?;
            Ok(match format {
                Format::Json => json(&render::graph_json(&inverted)),
                Format::Text => nci::io::render_edge_list(&inverted),
                Format::Dot => nci::io::to_dot(&inverted, None),
            })
        }
        Command::CiCheck { input } => {
            no_dot(format, "ci-check")?;
            let ideal = read_as_ideal(input)?;
            let ci = ideal.is_complete_intersection();
            Ok(match format {
                Format::Json => json(&serde_json::json!({
                    "ideal": ideal.to_string(),
                    "complete_intersection": ci,
                })),
                _ => format!("{ideal}: {}\n", if ci { "CI" } else { "not CI" }),
            })
        }
        Command::Betti { input } => {
            no_dot(format, "betti")?;
            let table = nci::betti_table(&read_as_ideal(input)?)?;
            Ok(match format {
                Format::Json => json(&table),
                _ => render::betti(&table),
            })
        }
        Command::TotalRank { input } => {
            no_dot(format, "total-rank")?;
            let check = nci::total_rank_check(&read_as_ideal(input)?)?;
            Ok(match format {
                Format::Json => json(&check),
                _ => render::total_rank(&check),
            })
        }
        Command::Enumerate { n } => {
            no_dot(format, "enumerate")?;
            let graphs = enumerate::generate_connected_graphs(*n)?;
            Ok(match format {
                Format::Json => json(&graphs.iter().map(render::enumerated_json).collect::<Vec<_>>()),
                _ => graphs
                    .iter()
                    .map(|g| enumerate::graph6::encode(g) + "\n")
                    .collect(),
            })
        }
        Command::CrossValidate { n } => {
            no_dot(format, "cross-validate")?;
            let cv = enumerate::cross_validate(*n)?;
            Ok(match format {
                Format::Json => json(&cv),
                _ => render::cross_validation(&cv),
            })
        }
        Command::Census { n_max } => {
            no_dot(format, "census")?;
            let rows = enumerate::nci_census(*n_max)?;
            Ok(match format {
                Format::Json => json(&rows),
                _ => render::census(&rows),
            })
        }
        Command::HypergraphSearch {
            max_vars,
            max_gens,
            max_degree,
            samples,
            seed,
        } => {
            no_dot(format, "hypergraph-search")?;
            let params = HypergraphSearchParams {
                max_vars: *max_vars,
                max_gens: *max_gens,
                max_degree: *max_degree,
                sample_count: *samples,
                seed: *seed,
            };
            let found = enumerate::hypergraph_nci_search(&params)?;
            Ok(match format {
                Format::Json => json(&serde_json::json!({
                    "params": params,
                    "ideals": found.iter().map(render::generator_strings).collect::<Vec<_>>(),
                })),
                _ => found.iter().map(|i| format!("{i}\n")).collect(),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli).and_then(|report| {
        let written = match &cli.output {
            Some(path) => fs::write(path, report.as_bytes()),
            None => io::stdout().write_all(report.as_bytes()),
        };
        written.map_err(|e| precondition(format!("cannot write output: {e}")))
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
