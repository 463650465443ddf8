use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sigcover::circuits::enumerate_circuits;
use sigcover::construct::construct_six_cover;
use sigcover::coverability::is_coverable;
use sigcover::cover::{parse_cover, verify_k_cover, write_cover};
use sigcover::graph::io::{self, GraphFile};
use sigcover::instances::{coverable_corpus, gadget, CorpusBounds, GadgetId, GenParams};
use sigcover::oracle::{k_cover_feasible, min_cover_length, min_k_with_cover, Caps};
use sigcover::sp::{is_k4_minor_free, parts, sp_decompose, PartClass};
use sigcover::{par, Error, VertexId};

#[derive(Parser)]
#[command(name = "sigcover", version, about = "Signed circuit covers of K4-minor-free signed graphs")]
struct Cli {
    /// Print human-readable detail after the result line.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Graph file; standard input when absent or `-`.
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Whether the graph is balanced.
    Balance(Input),
    /// Least number of negative edges over all switchings.
    Epsilon(Input),
    /// Whether the graph has a signed circuit cover.
    Coverable(Input),
    /// Count the circuits of the underlying graph.
    Circuits {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = sigcover::circuits::DEFAULT_CIRCUIT_CAP)]
        cap: usize,
    },
    /// Series-parallel decomposition between two terminals.
    Decompose {
        #[command(flatten)]
        input: Input,
        /// Terminals as `x,y`; defaults to the file's `t` record or the first edge.
        #[arg(long, value_parser = parse_pair)]
        at: Option<(VertexId, VertexId)>,
    },
    /// Build a signed circuit 6-cover.
    Cover(Input),
    /// Check a cover file against the graph.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Exact search for a signed circuit k-cover.
    Feasible {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Least k with a signed circuit k-cover.
    Mink {
        #[command(flatten)]
        input: Input,
        #[arg(long = "max")]
        max: usize,
    },
    /// Shortest signed circuit cover.
    Scc(Input),
    /// Print a built-in instance.
    Gadget { name: String },
    /// Generate seeded coverable graphs.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        /// Smooth every degree-two vertex.
        #[arg(long)]
        no_deg2: bool,
        /// Write one file per graph into this directory instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Least k with a cover for each graph of a seeded corpus.
    Hunt {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        no_deg2: bool,
    },
}

fn parse_pair(s: &str) -> Result<(VertexId, VertexId), String> {
    let (a, b) = s.split_once(',').ok_or("expected `x,y`")?;
    let p = |t: &str| t.trim().parse::<VertexId>().map_err(|_| format!("bad vertex `{t}`"));
    Ok((p(a)?, p(b)?))
}

struct Reply {
    text: String,
    ok: bool,
}

impl Reply {
    fn new(ok: bool) -> Reply {
        Reply { text: String::new(), ok }
    }

    fn line(mut self, s: impl AsRef<str>) -> Reply {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
        self
    }
}

type Outcome = Result<Reply, String>;

fn read_text(path: Option<&Path>) -> Result<String, String> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
            Ok(s)
        }
    }
}

fn load(input: &Input) -> Result<GraphFile, String> {
    let text = read_text(input.file.as_deref())?;
    io::parse(&text).map_err(|e| e.to_string())
}

fn err(e: Error) -> String {
    e.to_string()
}

fn run(cli: Cli) -> Outcome {
    let verbose = cli.verbose;
    match cli.command {
        Command::Balance(input) => {
            let g = load(&input)?.graph;
            let s = g.balancing_switch();
            let mut r = Reply::new(s.is_some()).line(format!("balanced={}", s.is_some()));
            if let (true, Some(s)) = (verbose, s) {
                let vs: Vec<String> = s.0.iter().map(|v| v.to_string()).collect();
                r = r.line(format!("switch={}", vs.join(",")));
            }
            Ok(r)
        }
        Command::Epsilon(input) => {
            let g = load(&input)?.graph;
            Ok(Reply::new(true).line(format!("epsilon={}", g.negativeness().map_err(err)?)))
        }
        Command::Coverable(input) => {
            let g = load(&input)?.graph;
            let c = is_coverable(&g).map_err(err)?;
            Ok(match c.obstruction {
                None => Reply::new(true).line(format!("coverable=true epsilon={}", c.epsilon)),
                Some(o) => Reply::new(false).line(format!("coverable=false reason={o}")),
            })
        }
        Command::Circuits { input, cap } => {
            let g = load(&input)?.graph;
            let cs = enumerate_circuits(&g, cap).map_err(err)?;
            let balanced = cs.iter().filter(|c| c.is_balanced()).count();
            let mut r = Reply::new(true).line(format!(
                "circuits={} balanced={balanced} unbalanced={}",
                cs.len(),
                cs.len() - balanced
            ));
            if verbose {
                for c in &cs {
                    let ids: Vec<String> = c.edge_ids.iter().map(|e| e.to_string()).collect();
                    r = r.line(format!("{} : {}", c.sign, ids.join(" ")));
                }
            }
            Ok(r)
        }
        Command::Decompose { input, at } => {
            let file = load(&input)?;
            let g = &file.graph;
            if !is_k4_minor_free(g) {
                return Ok(Reply::new(false).line("k4_minor_free=false"));
            }
            let (x, y) = match at.or(file.terminals) {
                Some(p) => p,
                None => g
                    .edges()
                    .iter()
                    .find(|e| !e.is_loop())
                    .map(|e| (e.u, e.v))
                    .ok_or("no non-loop edge to take terminals from")?,
            };
            let tree = sp_decompose(g, x, y).map_err(err)?;
            let chain = parts(g, x, y).map_err(err)?;
            let mut r = Reply::new(true).line(format!(
                "k4_minor_free=true x={x} y={y} parts={} b0={} b1={} b2={}",
                chain.parts.len(),
                chain.count(PartClass::B0),
                chain.count(PartClass::B1),
                chain.count(PartClass::B2)
            ));
            if verbose {
                r.text.push_str(&tree.render(g));
            }
            Ok(r)
        }
        Command::Cover(input) => {
            let g = load(&input)?.graph;
            let c = is_coverable(&g).map_err(err)?;
            if let Some(o) = c.obstruction {
                return Ok(Reply::new(false).line(format!("coverable=false reason={o}")));
            }
            let (f, prov) = construct_six_cover(&g).map_err(err)?;
            let mut r = Reply::new(true);
            r.text = write_cover(&f, 6);
            Ok(r.line(format!("# provenance={prov}")))
        }
        Command::Verify { input, cover, k } => {
            let g = load(&input)?.graph;
            let text = read_text(Some(&cover))?;
            let parsed = parse_cover(&text).map_err(|e| format!("{}: {e}", cover.display()))?;
            let family = match parsed.into_family(&g) {
                Ok(f) => f,
                Err(Error::Construction(m)) => return Ok(Reply::new(false).line(format!("valid=false reason={m}"))),
                Err(e) => return Err(e.to_string()),
            };
            Ok(match verify_k_cover(&g, &family, k) {
                Ok(()) => Reply::new(true).line(format!("valid=true k={k} members={}", family.len())),
                Err(v) => Reply::new(false).line(format!("valid=false reason={v}")),
            })
        }
        Command::Feasible { input, k } => {
            let g = load(&input)?.graph;
            let rep = k_cover_feasible(&g, k, Caps::default()).map_err(err)?;
            let mut r = Reply::new(rep.feasible).line(format!(
                "feasible={} k={k} nodes={}",
                rep.feasible, rep.nodes_explored
            ));
            if verbose {
                r = r.line(format!("# wall_ms={}", rep.wall_time.as_millis()));
            }
            if let Some(f) = rep.family {
                r.text.push_str(&write_cover(&f, k));
            }
            Ok(r)
        }
        Command::Mink { input, max } => {
            let g = load(&input)?.graph;
            Ok(match min_k_with_cover(&g, max, Caps::default()).map_err(err)? {
                Some(k) => {
                    let mut r = Reply::new(true).line(format!("min_k={k}"));
                    if let Some(f) = k_cover_feasible(&g, k, Caps::default()).map_err(err)?.family {
                        r.text.push_str(&write_cover(&f, k));
                    }
                    r
                }
                None => Reply::new(false).line(format!("min_k=none max={max}")),
            })
        }
        Command::Scc(input) => {
            let g = load(&input)?.graph;
            let c = is_coverable(&g).map_err(err)?;
            if let Some(o) = c.obstruction {
                return Ok(Reply::new(false).line(format!("coverable=false reason={o}")));
            }
            let rep = min_cover_length(&g, Caps::default()).map_err(err)?;
            let mut r = Reply::new(true).line(format!(
                "min_length={} members={} nodes={}",
                rep.length,
                rep.family.len(),
                rep.nodes_explored
            ));
            r.text.push_str(&write_cover(&rep.family, 1));
            Ok(r)
        }
        Command::Gadget { name } => {
            let id: GadgetId = name.parse().map_err(err)?;
            let gd = gadget(id);
            let mut r = Reply::new(true).line(format!("# {id}"));
            r.text.push_str(&io::write(&gd.graph, gd.terminals));
            Ok(r)
        }
        Command::Gen { seed, n, no_deg2, out } => {
            let bounds = CorpusBounds { no_deg2, ..CorpusBounds::default() };
            let corpus = coverable_corpus(n, GenParams::default(), bounds, seed).map_err(err)?;
            let mut r = Reply::new(true);
            if let Some(dir) = &out {
                std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
            }
            for (i, (g, d)) in corpus.graphs.iter().zip(&corpus.draw_index).enumerate() {
                let body = format!("# graph={i} seed={seed} draw={d}\n{}", io::write(g, None));
                match &out {
                    Some(dir) => {
                        let path = dir.join(format!("graph_{i:04}.txt"));
                        std::fs::write(&path, body).map_err(|e| format!("{}: {e}", path.display()))?;
                    }
                    None => {
                        if i > 0 {
                            r.text.push('\n');
                        }
                        r.text.push_str(&body);
                    }
                }
            }
            Ok(r.line(format!("# graphs={} draws={} rejected={}", corpus.graphs.len(), corpus.draws, corpus.rejected)))
        }
        Command::Hunt { seed, n, kmax, no_deg2 } => {
            let bounds = CorpusBounds { no_deg2, ..CorpusBounds::default() };
            let corpus = coverable_corpus(n, GenParams::default(), bounds, seed).map_err(err)?;
            let found = par::map(&corpus.graphs, |g| min_k_with_cover(g, kmax, Caps::default()));
            let mut r = Reply::new(true);
            for (i, (res, g)) in found.into_iter().zip(&corpus.graphs).enumerate() {
                let k = match res {
                    Ok(Some(k)) => k.to_string(),
                    Ok(None) => "none".into(),
                    Err(e) => format!("error({e})"),
                };
                let _ = writeln!(
                    r.text,
                    "instance={i} draw={} vertices={} edges={} min_k={k}",
                    corpus.draw_index[i],
                    g.vertex_count(),
                    g.edge_count()
                );
            }
            Ok(r)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(r) => {
            print!("{}", r.text);
            if r.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
