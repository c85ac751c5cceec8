//! Command-line front end. Graphs travel as graph6 lines on stdin/stdout
//! unless `--in`/`--out` say otherwise.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use linegraph_core::exec::Execution;
use linegraph_core::graph::{format_edge_list, parse_edge_list, parse_graph6_lines, Graph};
use linegraph_core::harness::{audit_items, load_corpus, AuditOptions, Baseline, CorpusSpec, TheoremId};
use linegraph_core::lineops::{iterate_line, order_analysis, preimage};
use linegraph_core::patterns::{emit_catalog, validate_catalog};
use linegraph_core::recognition::{
    beineke_test, delta3_classify, delta4_classify, higher_order_sufficient, second_order_sufficient,
    second_order_test, soltes_test, third_order_necessary, van_rooij_test, SecondOrderMode,
    SoltesVariant, Verdict,
};
use linegraph_core::{Error, Result};

#[derive(Parser)]
#[command(name = "linegraph", version, about = "Line graphs, their roots, and forbidden-subgraph recognition")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Input file, or `-` for stdin.
    #[arg(long = "in", default_value = "-")]
    input: String,
    /// Output file; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::G6)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    G6,
    /// One graph per input as `u v` pairs.
    Edges,
}

#[derive(Subcommand)]
enum Command {
    /// Line graph (or its K-th iterate) of each input graph.
    Line {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 1)]
        iterate: usize,
    },
    /// Preimage chain of each input graph.
    Root {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Run a recognition test.
    Recognize {
        #[command(flatten)]
        io: Io,
        /// beineke | vanrooij | krausz | soltes:<a-e> | second_order:<literal|repaired> |
        /// second_order_sufficient | third_order_necessary | higher_order:<n>
        #[arg(long, default_value = "krausz")]
        method: String,
        /// Print the certificate as JSON.
        #[arg(long)]
        certificate: bool,
    },
    /// Order of each input graph, with the root chain.
    Order {
        #[command(flatten)]
        io: Io,
    },
    /// Classification of maximum-degree 3 or 4 graphs.
    Classify {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=4))]
        delta: u8,
    },
    /// Audit a theorem over a corpus against the oracle.
    Audit(AuditArgs),
    /// The pattern catalog.
    Catalog {
        /// Print every entry as "NAME graph6".
        #[arg(long)]
        emit: bool,
        /// Check the catalog's consistency; exit 1 on any problem.
        #[arg(long)]
        validate: bool,
    },
    /// Connected graphs on N vertices, one per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct AuditArgs {
    #[arg(long)]
    theorem: String,
    /// Largest order of the generated corpus.
    #[arg(long, default_value_t = 8)]
    nmax: usize,
    #[arg(long, default_value_t = 1)]
    nmin: usize,
    /// Degree bound for the generated corpus (defaults to 3/4 for delta3/delta4).
    #[arg(long)]
    max_degree: Option<usize>,
    /// Audit graph6 lines from this file instead of a generated corpus.
    #[arg(long, conflicts_with = "iterates")]
    corpus: Option<PathBuf>,
    /// Audit L^DEPTH of every connected graph with at most MAX_EDGES edges.
    #[arg(long, value_names = ["MAX_EDGES", "DEPTH"], num_args = 2)]
    iterates: Option<Vec<usize>>,
    /// Worker threads; 1 runs serially, 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Allow generated corpora beyond 8 vertices.
    #[arg(long)]
    large: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Findings file to compare against (the committed one by default).
    #[arg(long)]
    baseline: Option<PathBuf>,
    /// Rewrite this findings file with the run's counterexamples.
    #[arg(long)]
    record_baseline: Option<PathBuf>,
    /// Include wall time in the report.
    #[arg(long)]
    timing: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                // Bad arguments rather than bad data.
                Error::UnknownTheorem(_) | Error::CorpusTooLarge(_) | Error::Contract(_) => ExitCode::from(2),
                _ => ExitCode::FAILURE,
            }
        }
    }
}

fn read_graphs(io: &Io) -> Result<Vec<Graph>> {
    let mut text = String::new();
    if io.input == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(&io.input)?;
    }
    match io.format {
        Format::G6 => parse_graph6_lines(&text),
        Format::Edges => Ok(vec![parse_edge_list(&text)?]),
    }
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn show(g: &Graph, format: Format) -> String {
    match format {
        Format::G6 => format!("{g}\n"),
        Format::Edges => format_edge_list(g),
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Line { io, iterate } => {
            let mut out = String::new();
            for g in read_graphs(&io)? {
                out += &show(&iterate_line(&g, iterate)?, io.format);
            }
            write_out(io.out.as_ref(), &out)?;
        }
        Command::Root { io, depth } => {
            let mut out = String::new();
            let mut failed = false;
            for g in read_graphs(&io)? {
                let mut line = g.to_string();
                let mut cur = g;
                for _ in 0..depth {
                    match preimage(&cur) {
                        Ok(r) => {
                            if r.ambiguous {
                                let alts: Vec<String> = r.roots.iter().map(|x| x.graph.to_string()).collect();
                                line += &format!(" (ambiguous: roots {})", alts.join(", "));
                            }
                            cur = r.roots.into_iter().next().unwrap().graph;
                            line += &format!(" <- {cur}");
                        }
                        Err(e) => {
                            line += &format!(" <- none ({e})");
                            failed = true;
                            break;
                        }
                    }
                }
                out += &line;
                out.push('\n');
            }
            write_out(io.out.as_ref(), &out)?;
            if failed {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Recognize {
            io,
            method,
            certificate,
        } => {
            let test = parse_method(&method)?;
            let mut out = String::new();
            for g in read_graphs(&io)? {
                let v = test(&g)?;
                out += &format!("{g}\t{:?}", v.result);
                if g.n() == 3 && g.edge_count() == 3 {
                    out += "\tnote: K3 has two roots, K3 and K_{1,3}";
                }
                if certificate {
                    out += &format!("\t{}", serde_json::to_string(&v.certificate)?);
                }
                out.push('\n');
            }
            write_out(io.out.as_ref(), &out)?;
        }
        Command::Order { io } => {
            let mut out = String::new();
            for g in read_graphs(&io)? {
                let a = order_analysis(&g, 4 * g.n() + 16)?;
                let chain: Vec<String> = a.chain.iter().map(Graph::to_string).collect();
                out += &format!("{g}\t{}\t{:?}\t{}\n", a.order, a.terminal_reason, chain.join(" <- "));
            }
            write_out(io.out.as_ref(), &out)?;
        }
        Command::Classify { io, delta } => {
            let mut out = String::new();
            for g in read_graphs(&io)? {
                let json = if delta == 3 {
                    serde_json::to_string(&delta3_classify(&g)?)?
                } else {
                    serde_json::to_string(&delta4_classify(&g)?)?
                };
                out += &format!("{g}\t{json}\n");
            }
            write_out(io.out.as_ref(), &out)?;
        }
        Command::Audit(args) => return audit(args),
        Command::Catalog { emit, validate } => {
            if emit || !validate {
                print!("{}", emit_catalog());
            }
            if validate {
                let problems = validate_catalog();
                for p in &problems {
                    eprintln!("{p}");
                }
                if !problems.is_empty() {
                    return Ok(ExitCode::FAILURE);
                }
            }
        }
        Command::Enumerate { n, max_degree, out } => {
            let levels = linegraph_core::graph::connected_graphs_by_order(n, max_degree, Execution::default())?;
            let text: String = levels.last().unwrap().iter().map(|g| format!("{g}\n")).collect();
            write_out(out.as_ref(), &text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

type Test = Box<dyn Fn(&Graph) -> Result<Verdict>>;

fn parse_method(method: &str) -> Result<Test> {
    let unknown = || Error::Contract(format!("unknown method {method:?}"));
    let (name, arg) = method.split_once(':').map_or((method, None), |(a, b)| (a, Some(b)));
    Ok(match (name, arg) {
        ("beineke", None) => Box::new(beineke_test),
        ("vanrooij", None) => Box::new(van_rooij_test),
        ("krausz", None) => Box::new(|g: &Graph| soltes_test(g, SoltesVariant::A)),
        ("soltes", Some(v)) => {
            let v = SoltesVariant::parse(v).ok_or_else(unknown)?;
            Box::new(move |g: &Graph| soltes_test(g, v))
        }
        ("second_order", Some(m)) => {
            let mode = match m {
                "literal" => SecondOrderMode::Literal,
                "repaired" => SecondOrderMode::Repaired,
                _ => return Err(unknown()),
            };
            Box::new(move |g: &Graph| second_order_test(g, mode))
        }
        ("second_order_sufficient", None) => Box::new(second_order_sufficient),
        ("third_order_necessary", None) => Box::new(third_order_necessary),
        ("higher_order", Some(n)) => {
            let n: usize = n.parse().map_err(|_| unknown())?;
            Box::new(move |g: &Graph| higher_order_sufficient(g, n))
        }
        _ => return Err(unknown()),
    })
}

fn audit(args: AuditArgs) -> Result<ExitCode> {
    let theorem = TheoremId::parse(&args.theorem)?;
    let spec = if let Some(path) = args.corpus {
        CorpusSpec::File { path }
    } else if let Some(v) = args.iterates {
        CorpusSpec::Iterates {
            max_edges: v[0],
            depth: v[1],
        }
    } else {
        let max_degree = args.max_degree.or(match theorem {
            TheoremId::Delta3 => Some(3),
            TheoremId::Delta4 => Some(4),
            _ => None,
        });
        CorpusSpec::Generated {
            n_min: args.nmin,
            n_max: args.nmax,
            max_degree,
        }
    };
    let options = AuditOptions {
        execution: Execution::from_jobs(args.jobs),
        allow_large: args.large,
    };
    let start = std::time::Instant::now();
    let (items, notes) = load_corpus(&spec, options.allow_large, options.execution)?;
    for note in notes {
        eprintln!("skipped {note}");
    }
    let mut report = audit_items(theorem, &spec, &items, options.execution);
    report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    write_out(args.out.as_ref(), &report.to_json(args.timing)?)?;

    let mut baseline = match &args.baseline {
        Some(p) => Baseline::parse(&fs::read_to_string(p)?)?,
        None => Baseline::builtin(),
    };
    if let Some(p) = args.record_baseline {
        baseline.record(&report, &items)?;
        fs::write(p, baseline.to_json()?)?;
        return Ok(ExitCode::SUCCESS);
    }
    let check = baseline.check(&report, &items)?;
    eprintln!(
        "{}: agree {} disagree {} excluded {} skipped {} ({} unexpected, {} no longer reproduced)",
        report.theorem_id,
        report.counts.agree,
        report.counts.disagree,
        report.counts.excluded,
        report.counts.skipped,
        check.unexpected.len(),
        check.missing.len()
    );
    for c in &check.unexpected {
        eprintln!("  unexpected {}: expected {}, got {}", c.graph6, c.expected, c.got);
    }
    for g in &check.missing {
        eprintln!("  no longer reproduced {g}");
    }
    Ok(if check.is_clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
