use std::fs;
use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nlcenc::decode::Decoder;
use nlcenc::encode::{encode_recursive, EncodedStructure};
use nlcenc::factorize::recursive_factorize;
use nlcenc::gen::{gen_halfgraph, gen_random, GenConfig, LabelPool};
use nlcenc::graph::Graph;
use nlcenc::nlc::NlcTree;
use nlcenc::pipeline::{corpus_text, run_corpus, run_pipeline, run_pipeline_with_encoding, LADDER_CAP, SYNC_PARTS};
use nlcenc::verify::{chi_upper, clique_number, full_audit, ladder_index};
use nlcenc::{Error, Result};

#[derive(Parser)]
#[command(name = "nlcenc", version, about = "Encode graphs generated by k-NLC-trees into sparse structures and decode them back")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    io: Io,
}

#[derive(Args)]
struct Io {
    /// Input file; standard input when omitted.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sample a random NLC-tree.
    Gen {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        nodes: usize,
        #[arg(long, default_value_t = 20)]
        vertices: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value = "all")]
        pool: LabelPool,
        /// Resample until the generated graph has ladder index at most this.
        #[arg(long)]
        reject_ladder_above: Option<usize>,
    },
    /// NLC-tree generating the half-graph of order N.
    GenHalfgraph {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Print the graph generated by an NLC-tree.
    Eval,
    /// Print the recursive factorization of an NLC-tree.
    Factorize,
    /// Print the encoding structure of an NLC-tree.
    Encode,
    /// Decode a graph from an encoding structure.
    Decode {
        /// Trace the decision for one vertex pair instead, given as ordinals
        /// of the graph output.
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        trace: Option<Vec<usize>>,
    },
    /// Encode, decode and compare with the generated graph.
    Roundtrip,
    /// Audit the bounds of an NLC-tree's encoding.
    Verify,
    /// Ladder index of a graph or of the graph an NLC-tree generates.
    Ladder {
        #[arg(long, default_value_t = LADDER_CAP)]
        cap: usize,
    },
    /// Clique number and greedy colouring bound.
    Chi,
    /// Run every stage on one NLC-tree.
    Pipeline {
        /// Append per-stage timings (not deterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Run the pipeline over the seeded corpus.
    Corpus {
        #[arg(long, default_value_t = 200)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn read_input(io: &Io) -> Result<String> {
    match &io.input {
        Some(p) => fs::read_to_string(p).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", p.display())))),
        None => std::io::read_to_string(std::io::stdin()).map_err(Error::Io),
    }
}

/// Graph text, or the graph generated by NLC-tree text.
fn read_graph(text: &str) -> Result<Graph> {
    let head = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    if head.starts_with("graph") {
        Graph::parse(text)
    } else {
        Ok(NlcTree::parse(text)?.generate_graph())
    }
}

fn paint(text: String) -> String {
    if std::env::var_os("NO_COLOR").is_some() || !std::io::stdout().is_terminal() {
        return text;
    }
    text.replace("status=fail", "status=\x1b[31mfail\x1b[0m").replace("status=warn", "status=\x1b[33mwarn\x1b[0m")
}

/// Output text plus whether a check failed.
fn run(cli: &Cli) -> Result<(String, bool)> {
    let Format::Text = cli.io.format;
    let tree = || NlcTree::parse(&read_input(&cli.io)?);
    Ok(match &cli.cmd {
        Cmd::Gen { k, seed, nodes, vertices, density, pool, reject_ladder_above } => {
            let cfg = GenConfig {
                k: *k,
                tree_nodes: *nodes,
                vertices: *vertices,
                eta_density: *density,
                label_pool: *pool,
                seed: *seed,
                reject_ladder_above: *reject_ladder_above,
            };
            (gen_random(&cfg)?.to_text(), false)
        }
        Cmd::GenHalfgraph { n, k } => (gen_halfgraph(*n, *k)?.to_text(), false),
        Cmd::Eval => (tree()?.generate_graph().to_text(), false),
        Cmd::Factorize => {
            let t = tree()?;
            (recursive_factorize(&t)?.dump(&t), false)
        }
        Cmd::Encode => {
            let t = tree()?;
            let rf = recursive_factorize(&t)?;
            (encode_recursive(&t, &rf)?.to_text(), false)
        }
        Cmd::Decode { trace } => {
            let j = EncodedStructure::parse(&read_input(&cli.io)?)?;
            let d = Decoder::new(&j)?;
            match trace.as_deref() {
                Some(&[u, v]) => {
                    let id = |x: usize| {
                        d.vertex_ids().get(x).copied().ok_or_else(|| Error::input(format!("no vertex ordinal {x}")))
                    };
                    let (adj, lines) = d.trace(id(u)?, id(v)?)?;
                    let mut s: String = lines.iter().map(|l| format!("{l}\n")).collect();
                    s.push_str(&format!("adjacent={adj}\n"));
                    (s, false)
                }
                _ => (d.full()?.to_text(), false),
            }
        }
        Cmd::Roundtrip => {
            let t = tree()?;
            let (r, _) = run_pipeline_with_encoding(&t)?;
            let status = if r.roundtrip_ok() { "pass" } else { "fail" };
            (format!("roundtrip status={status} mismatches={} levels={}\n", r.mismatches, r.levels()), !r.roundtrip_ok())
        }
        Cmd::Verify => {
            let t = tree()?;
            let rf = recursive_factorize(&t)?;
            let j = encode_recursive(&t, &rf)?;
            let h = ladder_index(&t.generate_graph(), LADDER_CAP);
            let a = full_audit(&t, &rf, &j, h, h == LADDER_CAP, SYNC_PARTS)?;
            (a.to_text(), !a.passed())
        }
        Cmd::Ladder { cap } => {
            let g = read_graph(&read_input(&cli.io)?)?;
            let h = ladder_index(&g, *cap);
            (format!("ladder h={h} cap={cap} truncated={}\n", h == *cap), false)
        }
        Cmd::Chi => {
            let g = read_graph(&read_input(&cli.io)?)?;
            let w = clique_number(&g)?;
            (format!("chi omega={w} chi_upper={}\n", chi_upper(&g)), false)
        }
        Cmd::Pipeline { timings } => {
            let r = run_pipeline(&tree()?)?;
            (r.to_text(*timings), !r.passed())
        }
        Cmd::Corpus { n, seed } => {
            let entries = run_corpus(*n, *seed)?;
            (corpus_text(&entries), entries.iter().any(|e| !e.report.passed()))
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, failed) = match run(&cli) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("nlcenc: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let written = match &cli.io.output {
        Some(p) => fs::write(p, &text).map_err(|e| format!("{}: {e}", p.display())),
        None => std::io::stdout().write_all(paint(text).as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("nlcenc: {e}");
        return ExitCode::from(4);
    }
    if failed {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}
