//! Command-line front end: generate family graphs, build hulls, compute
//! the Helly-gap and metric invariants, and run the full theorem suite.

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use hellygap::error::Error;
use hellygap::gap::{gap_from_hull, gap_oracle, GapWitness};
use hellygap::generators::{generate, FamilySpec};
use hellygap::graph::{EccentricityProfile, Graph, VertexSubset};
use hellygap::hull::{build_hull, DEFAULT_GUARD};
use hellygap::invariants::{
    alpha_i_parameter, audit_tree_decomposition, chordality, hyperbolicity_2delta,
    interval_thinness,
};
use hellygap::io::{emit_edge_list, parse_graph, parse_tree_decomposition};
use hellygap::suite::{
    emit_report, run_suite, ReportFormat, SuiteOptions, STRICT_PATH_GUARD,
};
use hellygap::terrain::{build_ecc_tree, terrain_report};

#[derive(Parser)]
#[command(name = "hellygap", about = "Injective hulls and the Helly-gap of connected graphs")]
struct Cli {
    /// Hull vertex guard (default 100000, or HELLYGAP_GUARD).
    #[arg(long, global = true)]
    guard: Option<usize>,
    /// Output format: json or text.
    #[arg(long, global = true, default_value = "text")]
    format: String,
    /// Seed for random target sets and generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random target sets M checked in addition to M = V.
    #[arg(long, global = true, default_value_t = 0)]
    subsets: usize,
    /// Also run the brute-force disk oracle (small graphs only).
    #[arg(long, global = true)]
    oracle: bool,
    /// Skip the hull build; alpha then comes from the oracle if at all.
    #[arg(long, global = true)]
    no_hull: bool,
    /// Check the descent bound on every shortest path, not just the
    /// canonical one.
    #[arg(long, global = true)]
    strict_paths: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a family graph in edge-list format.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Build the injective hull: vertices as integer vectors, edges,
    /// real flags.
    Hull { input: Option<PathBuf> },
    /// Compute alpha(G) with a witness.
    Gap { input: Option<PathBuf> },
    /// Metric invariants: 2delta, kappa, alpha_i, chordality; optionally
    /// audit a tree decomposition.
    Invariants {
        input: Option<PathBuf>,
        /// Tree decomposition JSON to audit against the graph.
        #[arg(long)]
        audit: Option<PathBuf>,
    },
    /// Eccentricity terrain rows for M = V.
    Terrain { input: Option<PathBuf> },
    /// Eccentricity-approximating spanning tree.
    Tree { input: Option<PathBuf> },
    /// Run the full theorem suite.
    Verify { input: Option<PathBuf> },
}

#[derive(Subcommand)]
enum Family {
    Path { n: usize },
    Cycle { n: usize },
    /// Rectilinear grid with rows x cols vertices.
    RectGrid { rows: usize, cols: usize },
    /// King grid over paths of the given lengths (edge counts).
    KingGrid { rows: usize, cols: usize },
    /// Triangular-lattice triangle of the given side length.
    TriangularGrid { side: usize },
    /// C_{4k} with two antipodal tails of length k.
    CycleWithTails { k: usize },
    /// Connected Erdos-Renyi sample, reseeded via --seed.
    Random { n: usize, p: f64 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> hellygap::Result<bool> {
    let format: ReportFormat = cli.format.parse()?;
    let guard = match cli.guard {
        Some(g) => g,
        None => match std::env::var("HELLYGAP_GUARD") {
            Ok(v) => v
                .parse()
                .map_err(|_| Error::InvalidFamilySpec(format!("bad HELLYGAP_GUARD {v:?}")))?,
            Err(_) => DEFAULT_GUARD,
        },
    };

    match &cli.cmd {
        Cmd::Gen { family } => {
            let spec = match *family {
                Family::Path { n } => FamilySpec::Path { n },
                Family::Cycle { n } => FamilySpec::Cycle { n },
                Family::RectGrid { rows, cols } => FamilySpec::RectGrid { rows, cols },
                Family::KingGrid { rows, cols } => FamilySpec::KingGrid { rows, cols },
                Family::TriangularGrid { side } => FamilySpec::TriangularGrid { side },
                Family::CycleWithTails { k } => FamilySpec::CycleWithTails { k },
                Family::Random { n, p } => {
                    FamilySpec::RandomConnected { n, p, seed: cli.seed }
                }
            };
            print!("{}", emit_edge_list(&generate(&spec)?));
            Ok(true)
        }
        Cmd::Hull { input } => {
            let g = read_graph(input)?;
            let h = build_hull(&g, guard)?;
            #[derive(Serialize)]
            struct HullOut {
                vertices: Vec<Vec<u32>>,
                edges: Vec<(usize, usize)>,
                real: Vec<bool>,
            }
            let out = HullOut {
                vertices: h.functions.iter().map(|f| f.values.clone()).collect(),
                edges: h.host.edges(),
                real: (0..h.vertex_count()).map(|v| h.is_real(v)).collect(),
            };
            match format {
                ReportFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&out).expect("serializes"))
                }
                ReportFormat::Text => {
                    println!(
                        "hull: {} vertices ({} real, {} helly), {} edges",
                        h.vertex_count(),
                        g.n(),
                        h.helly_vertices().len(),
                        h.host.edge_count()
                    );
                    for (i, f) in h.functions.iter().enumerate() {
                        let tag = if h.is_real(i) { "real " } else { "helly" };
                        println!("  {i:>4} {tag} {:?}", f.values);
                    }
                }
            }
            Ok(true)
        }
        Cmd::Gap { input } => {
            let g = read_graph(input)?;
            let h = build_hull(&g, guard)?;
            let cert = gap_from_hull(&h);
            let oracle = if cli.oracle { Some(gap_oracle(&g)?) } else { None };
            if let Some(o) = &oracle {
                if o.alpha != cert.alpha {
                    return Err(Error::InvalidFamilySpec(format!(
                        "oracle alpha {} disagrees with hull alpha {}",
                        o.alpha, cert.alpha
                    )));
                }
            }
            let witness = match &cert.witness {
                Some(GapWitness::HullVertex { function, .. }) => function.values.clone(),
                Some(GapWitness::Disks(rf)) => rf.radii.clone(),
                None => Vec::new(),
            };
            match format {
                ReportFormat::Json => {
                    #[derive(Serialize)]
                    struct GapOut {
                        value: u32,
                        witness: Vec<u32>,
                        oracle: Option<u32>,
                    }
                    let out =
                        GapOut { value: cert.alpha, witness, oracle: oracle.map(|o| o.alpha) };
                    println!("{}", serde_json::to_string_pretty(&out).expect("serializes"));
                }
                ReportFormat::Text => {
                    println!("alpha(G) = {}", cert.alpha);
                    if !witness.is_empty() {
                        println!("  witness: {witness:?}");
                    }
                    if oracle.is_some() {
                        println!("  oracle agrees");
                    }
                }
            }
            Ok(true)
        }
        Cmd::Invariants { input, audit } => {
            let g = read_graph(input)?;
            #[derive(Serialize)]
            struct InvOut {
                two_delta: u32,
                kappa: u32,
                alpha_i: u32,
                chordality: u32,
                chordality_exceeded: bool,
                audit: Option<hellygap::invariants::TreeDecompositionAudit>,
            }
            let chord = chordality(&g, 12);
            let audit_result = match audit {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
                        line: 0,
                        msg: format!("{}: {e}", path.display()),
                    })?;
                    Some(audit_tree_decomposition(&g, &parse_tree_decomposition(&text)?))
                }
                None => None,
            };
            let out = InvOut {
                two_delta: hyperbolicity_2delta(&g).0,
                kappa: interval_thinness(&g),
                alpha_i: alpha_i_parameter(&g),
                chordality: chord.length,
                chordality_exceeded: chord.exceeded,
                audit: audit_result,
            };
            match format {
                ReportFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&out).expect("serializes"))
                }
                ReportFormat::Text => {
                    println!(
                        "2delta={} kappa={} alpha_i={} chordality={}{}",
                        out.two_delta,
                        out.kappa,
                        out.alpha_i,
                        out.chordality,
                        if out.chordality_exceeded { "+ (guard hit)" } else { "" }
                    );
                    if let Some(a) = &out.audit {
                        println!(
                            "decomposition: valid={} width={} breadth={} length={}",
                            a.valid, a.width, a.breadth, a.length
                        );
                    }
                }
            }
            Ok(out.audit.as_ref().map_or(true, |a| a.valid))
        }
        Cmd::Terrain { input } => {
            let g = read_graph(input)?;
            let h = build_hull(&g, guard)?;
            let alpha = gap_from_hull(&h).alpha;
            let m = VertexSubset::full(g.n());
            let strict = cli.strict_paths.then_some(STRICT_PATH_GUARD);
            let report = terrain_report(&g, &m, alpha, strict)?;
            match format {
                ReportFormat::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report.rows).expect("serializes")
                ),
                ReportFormat::Text => {
                    for row in &report.rows {
                        let status = if row.pass { "pass" } else { "FAIL" };
                        println!("[{status}] {} {} {} vs {}", row.id, row.context, row.lhs, row.rhs);
                    }
                }
            }
            Ok(report.all_pass())
        }
        Cmd::Tree { input } => {
            let g = read_graph(input)?;
            let h = build_hull(&g, guard)?;
            let alpha = gap_from_hull(&h).alpha;
            let m = VertexSubset::full(g.n());
            let t = build_ecc_tree(&g, &m, &h, alpha)?;
            match format {
                ReportFormat::Json => {
                    #[derive(Serialize)]
                    struct TreeOut {
                        root: usize,
                        parent: Vec<Option<usize>>,
                        max_error: u32,
                        error_bound: u32,
                    }
                    let out = TreeOut {
                        root: t.root,
                        parent: t.parent,
                        max_error: t.max_error,
                        error_bound: t.error_bound,
                    };
                    println!("{}", serde_json::to_string_pretty(&out).expect("serializes"));
                }
                ReportFormat::Text => {
                    println!(
                        "root={} max_error={} error_bound={}",
                        t.root, t.max_error, t.error_bound
                    );
                    for (v, p) in t.parent.iter().enumerate() {
                        if let Some(p) = p {
                            println!("  {v} -> {p}");
                        }
                    }
                }
            }
            Ok(t.max_error <= t.error_bound)
        }
        Cmd::Verify { input } => {
            let g = read_graph(input)?;
            let opts = SuiteOptions {
                guard,
                no_hull: cli.no_hull,
                use_oracle: cli.oracle,
                subsets: cli.subsets,
                seed: cli.seed,
                strict_paths: cli.strict_paths,
                ..SuiteOptions::default()
            };
            let report = run_suite(&g, &opts)?;
            print!("{}", emit_report(&report, format)?);
            Ok(report.all_pass())
        }
    }
}

fn read_graph(input: &Option<PathBuf>) -> hellygap::Result<Graph> {
    let text = match input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("{}: {e}", path.display()),
        })?,
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| Error::Parse {
                line: 0,
                msg: format!("stdin: {e}"),
            })?;
            buf
        }
    };
    let g = parse_graph(&text)?;
    // Reject absurd interactive inputs early; the library guards cover
    // the rest.
    let _ = EccentricityProfile::new(&g.distance_matrix(), &VertexSubset::full(g.n()))?;
    Ok(g)
}
