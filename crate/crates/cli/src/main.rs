use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use perigraph::format::*;
use perigraph::gadgets::{
    attach_generator_gadgets, cyclic_cayley, default_gadget, fig1_graph, fig2_tree, fig3_graph, oriented_tree_ball,
    GadgetSpec,
};
use perigraph::graph::{automorphism_group, FiniteGraph, DEFAULT_ELEMENT_CAP};
use perigraph::periodic::{bipartite_2coloring, PeriodicAssignment, PeriodicGraph};
use perigraph::solver::*;
use perigraph::verify::{
    count_color_orbits, edge_inversion_witness, forced_color_distinction, orientation_from_group, ForcedDistinction,
    OrientationOutcome,
};
use perigraph::{Error, Result};

const OK: u8 = 0;
const FAILURE: u8 = 1;
const INFEASIBLE: u8 = 2;
const CLAIM_FAILS: u8 = 3;
const CAP: u8 = 4;

#[derive(Parser)]
#[command(name = "perigraph", version, about = "Periodic colorings and factors of Z-periodic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Transfer,
    Pigeonhole,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic number of the lift with a periodic witness
    Chromatic { pgf: String },
    /// Periodic proper k-coloring
    Color {
        pgf: String,
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value = "transfer")]
        method: Method,
    },
    /// Shift-invariant orientation
    Orient { pgf: String },
    /// Periodic edge-coloring with the fewest colors
    Edgecolor { pgf: String },
    /// Periodic perfect matching
    Matching { pgf: String },
    /// Periodic k-factor
    Factor {
        pgf: String,
        #[arg(short)]
        k: usize,
    },
    /// Reduce a periodic coloring to at most max degree + 1 colors
    Reduce {
        pgf: String,
        assignment: String,
        /// Collapse to two colors per lift component instead
        #[arg(long)]
        two: bool,
    },
    /// Periodic 2-coloring, if the lift is bipartite
    Bipartite { pgf: String },
    /// Periodic point of a one-dimensional subshift of finite type
    Sft { file: String },
    /// Generate construction graphs
    Gen {
        #[command(subcommand)]
        what: Gen,
    },
    /// Exhaustive checks on finite graphs
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
    /// Finite window of the lift on cells a .. a+n
    Window {
        pgf: String,
        #[arg(short, allow_hyphen_values = true)]
        a: i64,
        #[arg(short)]
        n: usize,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Subcommand)]
enum Gen {
    /// Tree ball of radius r with triangles for vertices and pendant paths for arcs
    Fig1 {
        #[arg(short, default_value_t = 1)]
        r: usize,
        #[arg(long)]
        dot: bool,
    },
    /// The same construction with ball vertices kept whole (a tree)
    Fig2 {
        #[arg(short, default_value_t = 1)]
        r: usize,
        #[arg(long)]
        dot: bool,
    },
    /// Gadget copies assembled along the oriented tree ball
    Fig3 {
        #[arg(short, default_value_t = 1)]
        r: usize,
        /// Finite graph whose vertices labelled out, in1, in2 are the ports
        #[arg(long)]
        gadget: Option<String>,
        #[arg(long)]
        dot: bool,
    },
    /// Oriented tree ball of radius r as a labelled digraph
    TreeBall {
        #[arg(short, default_value_t = 1)]
        r: usize,
    },
    /// The default ten-vertex gadget
    Gadget {
        #[arg(long)]
        dot: bool,
    },
    /// Cayley digraph of Z/n with the given generators
    Cayley {
        #[arg(short)]
        n: usize,
        #[arg(short, required = true)]
        g: Vec<usize>,
        /// Emit the path-gadget graph instead of the digraph
        #[arg(long)]
        attach: bool,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Every proper k-coloring separates a and b
    Forced {
        graph: String,
        #[arg(short)]
        a: usize,
        #[arg(short)]
        b: usize,
        #[arg(short)]
        k: usize,
    },
    /// Some group element inverts an edge
    Inversion {
        graph: String,
        /// Generators (`perm` lines); the full automorphism group by default
        #[arg(long)]
        perms: Option<String>,
    },
    /// An orientation preserved by the group exists
    OrientGroup {
        graph: String,
        #[arg(long)]
        perms: Option<String>,
    },
    /// Vertex orbits of the color-preserving automorphisms
    Orbits { graph: String, coloring: String },
}

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {path}: {e}")))
}

fn limits() -> Result<Limits> {
    match std::env::var("PERIGRAPH_STATE_CAP") {
        Ok(raw) => match raw.trim().parse() {
            Ok(state_cap) => Ok(Limits { state_cap }),
            Err(_) => Err(Error::Input(format!("PERIGRAPH_STATE_CAP={raw} is not a number"))),
        },
        Err(_) => Ok(Limits::default()),
    }
}

fn pgf(path: &str) -> Result<PeriodicGraph> {
    parse_periodic(&read(path)?)
}

fn finite(path: &str) -> Result<FiniteGraph> {
    parse_finite(&read(path)?)
}

fn graph_out(g: &FiniteGraph, dot: bool) -> String {
    if dot {
        finite_dot(g, None)
    } else {
        emit_finite(g)
    }
}

fn verdict(pg: &PeriodicGraph, found: Option<PeriodicAssignment>, colors: Option<usize>) -> (String, u8) {
    match found {
        None => ("verdict infeasible\n".into(), INFEASIBLE),
        Some(a) => {
            let mut out = String::from("verdict feasible\n");
            if let Some(k) = colors {
                out += &format!("colors {k}\n");
            }
            out += &emit_assignment(pg, &a);
            (out, OK)
        }
    }
}

fn gadget_from(g: FiniteGraph) -> Result<GadgetSpec> {
    let port = |name: &str| match g.vertices_labelled(name)[..] {
        [v] => Ok(v),
        _ => Err(Error::Input(format!("gadget needs exactly one vertex labelled {name}"))),
    };
    let (o, i1, i2) = (port("out")?, port("in1")?, port("in2")?);
    GadgetSpec::new(g, o, i1, i2)
}

fn group_for(g: &FiniteGraph, perms: &Option<String>) -> Result<perigraph::graph::GroupGenerators> {
    match perms {
        Some(path) => parse_permutations(&read(path)?, g.vertex_count()),
        None => Ok(automorphism_group(g, false, false)),
    }
}

fn run(command: Command) -> Result<(String, u8)> {
    Ok(match command {
        Command::Chromatic { pgf: path } => {
            let pg = pgf(&path)?;
            let (k, a) = chromatic_number_periodic(&pg, &limits()?)?;
            (format!("colors {k}\n{}", emit_assignment(&pg, &a)), OK)
        }
        Command::Color { pgf: path, k, method } => {
            let pg = pgf(&path)?;
            let found = match method {
                Method::Transfer => periodic_coloring_transfer(&pg, k, &limits()?)?,
                Method::Pigeonhole => periodic_coloring_pigeonhole(&pg, k, &limits()?)?,
            };
            verdict(&pg, found, Some(k))
        }
        Command::Orient { pgf: path } => {
            let pg = pgf(&path)?;
            (emit_assignment(&pg, &periodic_orientation(&pg)), OK)
        }
        Command::Edgecolor { pgf: path } => {
            let pg = pgf(&path)?;
            let (k, a) = periodic_edge_coloring(&pg, &limits()?)?;
            (format!("colors {k}\n{}", emit_assignment(&pg, &a)), OK)
        }
        Command::Matching { pgf: path } => {
            let pg = pgf(&path)?;
            let found = periodic_perfect_matching(&pg, &limits()?)?;
            verdict(&pg, found, None)
        }
        Command::Factor { pgf: path, k } => {
            let pg = pgf(&path)?;
            let found = periodic_k_factor(&pg, k, &limits()?)?;
            verdict(&pg, found, None)
        }
        Command::Reduce { pgf: path, assignment, two } => {
            let pg = pgf(&path)?;
            let c = parse_assignment(&read(&assignment)?, &pg)?;
            if two {
                let out = reduce_nontrivial_to_2_periodic(&pg, &c)?;
                (format!("colors 2\n{}", emit_assignment(&pg, &out)), OK)
            } else {
                let out = reduce_colors_periodic(&pg, &c)?;
                let used = out.coloring.distinct_values().len();
                let text = format!(
                    "# iterations {}\ncolors {used}\n{}",
                    out.iterations,
                    emit_assignment(&pg, &out.coloring)
                );
                (text, OK)
            }
        }
        Command::Bipartite { pgf: path } => {
            let pg = pgf(&path)?;
            verdict(&pg, bipartite_2coloring(&pg), Some(2))
        }
        Command::Sft { file } => {
            let spec = parse_sft(&read(&file)?)?;
            match sft_periodic_point(&spec, &limits()?)? {
                None => ("verdict infeasible\n".into(), INFEASIBLE),
                Some(w) => (
                    format!(
                        "verdict feasible\nperiod {}\nword {}\n",
                        w.len(),
                        emit_word(spec.alphabet_size(), &w)
                    ),
                    OK,
                ),
            }
        }
        Command::Gen { what } => match what {
            Gen::Fig1 { r, dot } => (graph_out(&fig1_graph(r)?, dot), OK),
            Gen::Fig2 { r, dot } => (graph_out(&fig2_tree(r)?, dot), OK),
            Gen::Fig3 { r, gadget, dot } => {
                let h = match gadget {
                    Some(path) => gadget_from(finite(&path)?)?,
                    None => default_gadget(),
                };
                (graph_out(&fig3_graph(r, &h)?, dot), OK)
            }
            Gen::TreeBall { r } => (emit_digraph(&oriented_tree_ball(r).graph), OK),
            Gen::Gadget { dot } => (graph_out(&default_gadget().graph, dot), OK),
            Gen::Cayley { n, g, attach, dot } => {
                let d = cyclic_cayley(n, &g)?;
                if attach || dot {
                    (graph_out(&attach_generator_gadgets(&d), dot), OK)
                } else {
                    (emit_digraph(&d), OK)
                }
            }
        },
        Command::Verify { what } => match what {
            Verify::Forced { graph, a, b, k } => match forced_color_distinction(&finite(&graph)?, a, b, k)? {
                ForcedDistinction::Forced { vacuous: false } => ("FORCED\n".into(), OK),
                ForcedDistinction::Forced { vacuous: true } => {
                    (format!("FORCED\n# vacuous: no proper {k}-coloring exists\n"), OK)
                }
                ForcedDistinction::Witness(c) => (format!("WITNESS\n{}", emit_coloring(&c)), CLAIM_FAILS),
            },
            Verify::Inversion { graph, perms } => {
                let g = finite(&graph)?;
                let group = group_for(&g, &perms)?;
                match edge_inversion_witness(&g, &group, DEFAULT_ELEMENT_CAP)? {
                    Some((p, (u, v))) => (format!("INVERSION {u} {v}\n{}", emit_permutation(&p)), OK),
                    None => ("NO INVERSION\n".into(), CLAIM_FAILS),
                }
            }
            Verify::OrientGroup { graph, perms } => {
                let g = finite(&graph)?;
                let group = group_for(&g, &perms)?;
                match orientation_from_group(&g, &group, DEFAULT_ELEMENT_CAP)? {
                    OrientationOutcome::Oriented(o) => {
                        let mut out = String::from("ORIENTED\n");
                        for (t, h) in o.arcs() {
                            out += &format!("arc {t} {h}\n");
                        }
                        (out, OK)
                    }
                    OrientationOutcome::Inversion(p, (u, v)) => {
                        (format!("INVERSION {u} {v}\n{}", emit_permutation(&p)), CLAIM_FAILS)
                    }
                }
            }
            Verify::Orbits { graph, coloring } => {
                let g = finite(&graph)?;
                let c = parse_coloring(&read(&coloring)?)?;
                (format!("orbits {}\n", count_color_orbits(&g, &c)?), OK)
            }
        },
        Command::Window { pgf: path, a, n, dot } => {
            let pg = pgf(&path)?;
            let w = pg.window(a, n)?;
            if dot {
                (window_dot(&w), OK)
            } else {
                let mut g = w.graph.clone();
                for (x, &(v, cell)) in w.embedding.iter().enumerate() {
                    g.set_vertex_label(x, format!("{v}@{cell}"))?;
                }
                (emit_finite(&g), OK)
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { FAILURE } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok((text, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(FAILURE);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::ResourceCap { .. }) { CAP } else { FAILURE })
        }
    }
}
