//! `h21`: command-line front end for path-in-tree representations.
//!
//! Exit codes: 0 for success or a positive answer, 1 for a clean negative
//! answer, 2 for errors (parse failures, violated preconditions, usage).

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use h21_core::coloring::optimal_coloring;
use h21_core::dot::{graph_to_dot, rep_to_dot};
use h21_core::format::{looks_like_rep, parse_graph, parse_rep, parse_rep_unchecked, serialize_graph, serialize_rep};
use h21_core::gadgets::{self, a_n_is_degenerate};
use h21_core::svs::{SvsWitness, VptEvidence, DEFAULT_SUN_CAP};
use h21_core::{
    branch_graph, classify, classify_svs, is_member, is_svs, k_colorable, reduce_degree, Coloring, Error, Graph,
    SvsStatus, VertexSet, VptRepresentation,
};

#[derive(Parser)]
#[command(name = "h21", version, about = "Path-in-tree representations and [h,2,1] recognition")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a representation file
    Validate { rep: PathBuf },
    /// Print the intersection graph of a representation
    Intersect { rep: PathBuf },
    /// Print the maximal cliques of a representation's graph
    Cliques { rep: PathBuf },
    /// Print a branch graph, of C_q (representation) or of a given clique (graph)
    Branch {
        input: PathBuf,
        #[arg(long, conflicts_with = "clique")]
        at: Option<String>,
        #[arg(long, value_delimiter = ',')]
        clique: Option<Vec<String>>,
    },
    /// Chromatic number, or a K-coloring test with -k
    Color {
        graph: PathBuf,
        #[arg(short)]
        k: Option<usize>,
    },
    /// Least h >= 3 with the graph in [h,2,1], with per-clique detail
    Classify { rep: PathBuf },
    /// Membership in [h,2,1]
    #[command(disable_help_flag = true)]
    Member {
        rep: PathBuf,
        #[arg(short = 'h')]
        h: usize,
        #[arg(long, action = ArgAction::Help)]
        help: Option<bool>,
    },
    /// Rewrite a representation onto a host tree of maximum degree h
    #[command(disable_help_flag = true)]
    Reduce {
        rep: PathBuf,
        #[arg(short = 'h')]
        h: usize,
        #[arg(short)]
        o: PathBuf,
        #[arg(long, action = ArgAction::Help)]
        help: Option<bool>,
    },
    /// Build the star-tree gadget whose central branch graph is the input graph
    Gadget {
        graph: PathBuf,
        #[arg(short)]
        o: PathBuf,
    },
    /// Generate a named family member
    Gen {
        family: Family,
        #[arg(short, default_value_t = 4)]
        n: usize,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Test the split subclass with fast classification
    Svs {
        graph: PathBuf,
        #[arg(long)]
        rep: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SUN_CAP)]
        sun_cap: usize,
    },
    /// Graphviz export of a graph or representation file
    Dot { input: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Sun,
    An,
    T32,
    Kn,
    Cn,
}

fn read(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn load_rep(path: &Path) -> Result<VptRepresentation> {
    parse_rep(&read(path)?).with_context(|| path.display().to_string())
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?).with_context(|| path.display().to_string())
}

fn join(set: &VertexSet) -> String {
    set.iter().map(String::as_str).collect::<Vec<_>>().join(",")
}

fn print_coloring(c: &Coloring) {
    for (v, color) in &c.assignment {
        println!("color={v}:{color}");
    }
}

fn answer(yes: bool) -> ExitCode {
    if yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Validate { rep } => {
            let r = parse_rep_unchecked(&read(&rep)?).with_context(|| rep.display().to_string())?;
            let v = r.validate();
            println!("valid={}", v.is_valid());
            for d in &v.diagnostics {
                println!("diagnostic={d}");
            }
            Ok(answer(v.is_valid()))
        }
        Command::Intersect { rep } => {
            print!("{}", serialize_graph(&load_rep(&rep)?.intersection_graph()?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Cliques { rep } => {
            for c in load_rep(&rep)?.cliques()? {
                println!("clique={}", join(&c));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Branch { input, at, clique } => {
            let text = read(&input)?;
            let b = match (at, clique) {
                (Some(q), None) => {
                    if !looks_like_rep(&text) {
                        bail!("--at needs a representation file");
                    }
                    let rep = parse_rep(&text)?;
                    branch_graph(&rep.intersection_graph()?, &rep.clique_at(&q)?)?
                }
                (None, Some(c)) => {
                    let g = if looks_like_rep(&text) {
                        parse_rep(&text)?.intersection_graph()?
                    } else {
                        parse_graph(&text)?
                    };
                    branch_graph(&g, &c.into_iter().collect())?
                }
                _ => bail!("give exactly one of --at NODE or --clique v1,v2,..."),
            };
            print!("{}", serialize_graph(&b));
            Ok(ExitCode::SUCCESS)
        }
        Command::Color { graph, k } => {
            let g = load_graph(&graph)?;
            match k {
                None => {
                    let c = optimal_coloring(&g);
                    println!("chi={}", c.k);
                    print_coloring(&c);
                    Ok(ExitCode::SUCCESS)
                }
                Some(k) => {
                    let c = k_colorable(&g, k);
                    println!("colorable={}", c.is_some());
                    if let Some(c) = &c {
                        print_coloring(c);
                    }
                    Ok(answer(c.is_some()))
                }
            }
        }
        Command::Classify { rep } => {
            let report = classify(&load_rep(&rep)?)?;
            println!("h_star={}", report.h_star);
            println!("max_chi={}", report.max_chi());
            for (c, chi) in &report.per_clique {
                println!("clique={} chi={chi}", join(c));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Member { rep, h, .. } => {
            let yes = is_member(&load_rep(&rep)?, h)?;
            println!("member={yes}");
            Ok(answer(yes))
        }
        Command::Reduce { rep, h, o, .. } => {
            let out = match reduce_degree(&load_rep(&rep)?, h) {
                Err(Error::NotHColorable { h, clique }) => {
                    println!("member=false");
                    eprintln!("the branch graph of clique {{{clique}}} is not {h}-colorable");
                    return Ok(ExitCode::from(1));
                }
                other => other?,
            };
            write(&o, &serialize_rep(&out))?;
            println!("max_degree={}", out.max_tree_degree()?);
            println!("tree_nodes={}", out.tree.node_count());
            Ok(ExitCode::SUCCESS)
        }
        Command::Gadget { graph, o } => {
            let rep = gadgets::hardness_gadget(&load_graph(&graph)?)?;
            write(&o, &serialize_rep(&rep))?;
            println!("vertices={}", rep.paths.len());
            println!("central_clique={}", rep.clique_at(gadgets::GADGET_CENTER)?.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { family, n, o } => {
            let text = match family {
                Family::Sun => serialize_graph(&gadgets::sun(n)?),
                Family::Kn => serialize_graph(&gadgets::complete_graph(n)?),
                Family::Cn => serialize_graph(&gadgets::cycle_graph(n)?),
                Family::An => serialize_rep(&gadgets::a_n(n)?),
                Family::T32 => serialize_rep(&gadgets::t32()),
            };
            let degenerate = matches!(family, Family::An) && a_n_is_degenerate(n);
            match o {
                Some(path) => {
                    write(&path, &text)?;
                    if degenerate {
                        println!("degenerate=true");
                    }
                }
                None => {
                    // Keep standard output a clean file.
                    if degenerate {
                        eprintln!("degenerate=true");
                    }
                    print!("{text}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Svs { graph, rep, sun_cap } => {
            let g = load_graph(&graph)?;
            let rep = rep.as_deref().map(load_rep).transpose()?;
            let verdict = is_svs(&g, sun_cap, rep.as_ref())?;
            let status = match verdict.status {
                SvsStatus::Yes => "yes",
                SvsStatus::No => "no",
                SvsStatus::UnknownBeyondCap => "unknown",
            };
            println!("svs={status}");
            println!("sun_cap={}", verdict.cap_used);
            println!(
                "vpt={}",
                match verdict.vpt {
                    VptEvidence::Representation => "representation",
                    VptEvidence::Assumed => "assumed",
                }
            );
            match &verdict.witness {
                Some(SvsWitness::NotSplit) => println!("witness=not-split"),
                Some(SvsWitness::CliqueVertex { vertex, stable_neighbors }) => {
                    println!("witness=clique-vertex vertex={vertex} stable={}", join(stable_neighbors))
                }
                Some(SvsWitness::Sun(sun)) => {
                    println!("witness=sun stable={} clique={}", sun.stable.join(","), sun.clique.join(","))
                }
                None => {}
            }
            if let (SvsStatus::Yes, Some(part)) = (verdict.status, &verdict.partition) {
                println!("h_star={}", classify_svs(&g, part)?);
            }
            Ok(answer(verdict.status == SvsStatus::Yes))
        }
        Command::Dot { input } => {
            let text = read(&input)?;
            if looks_like_rep(&text) {
                print!("{}", rep_to_dot(&parse_rep(&text)?));
            } else {
                print!("{}", graph_to_dot(&parse_graph(&text)?));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors.
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
