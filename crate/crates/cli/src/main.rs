use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand};
use rand::Rng;

use subreg::casestudy;
use subreg::dot::to_dot;
use subreg::extract::{bound_omitted, classify_equality, extract};
use subreg::families::{
    build_g_family, build_tree_with_balloons, named, smallest_balloon, ExplosionSpec, GFamilySpec,
};
use subreg::graph::{Multigraph, VertexSet};
use subreg::matching::gallai_edmonds;
use subreg::oracle::{
    check_all, check_theorem, EnumerationOptions, OracleMode, ENUMERATION_LIMIT, ORACLE_LIMIT,
};
use subreg::random::{random_subcubic, seeded};
use subreg::structure::{analyze_structure, girth};
use subreg::{parse_multigraph, serialize_multigraph};

#[derive(Parser)]
#[command(name = "subreg", version, about = "Large 2-regular subgraphs of subcubic multigraphs")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, env = "SUBREG_SEED", default_value_t = 20240601)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print order, size, cut-edges, deficit, girth, balloons and the
    /// Gallai-Edmonds decomposition.
    Analyze { file: PathBuf },
    /// Print the bound on the number of omitted vertices.
    Bound { file: PathBuf },
    /// Extract a 2-regular subgraph.
    Extract {
        file: PathBuf,
        /// Write a DOT drawing of the graph with the subgraph highlighted.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the certificate as key: value lines.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Generate a graph on which the bound is attained.
    Generate {
        #[command(subcommand)]
        family: Family,
        /// Write the graph here instead of standard output.
        #[arg(long, short, global = true)]
        output: Option<PathBuf>,
    },
    /// Check the bound on a file, on every small graph, or on random graphs.
    Verify(VerifyArgs),
    /// Reproduce a worked example.
    Casestudy {
        #[arg(value_parser = ["badgraph"])]
        name: String,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Smallest balloon of the given girth (2..=8).
    Balloon {
        #[arg(long)]
        girth: usize,
    },
    /// Caterpillar with a smallest balloon at every leaf.
    Tree {
        #[arg(long)]
        internal: usize,
        #[arg(long)]
        girth: usize,
    },
    /// Cubic bipartite base minus one vertex, with optional explosions.
    Gfamily {
        /// k33, q3, or a .mg file.
        #[arg(long)]
        base: String,
        /// Explode base vertex y into graph F at its vertex z; F is a
        /// built-in name (k4, c4d, k33, petersen) or a .mg file.
        #[arg(long, value_name = "y=F:z")]
        explode: Vec<String>,
        /// Base vertex to delete.
        #[arg(long)]
        yhat: Option<usize>,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("target").required(true).args(["file", "enumerate", "random"])))]
struct VerifyArgs {
    file: Option<PathBuf>,
    /// Check every connected subcubic multigraph of order 1..=N (N <= 8).
    #[arg(long, value_name = "N")]
    enumerate: Option<usize>,
    /// Check N random subcubic graphs.
    #[arg(long, value_name = "N")]
    random: Option<usize>,
    /// Largest order of the random graphs [default: 12].
    #[arg(long)]
    max_n: Option<usize>,
    /// Also compute f2 exactly (file mode).
    #[arg(long)]
    oracle: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` means a check failed.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Analyze { file } => analyze(&read_graph(&file)?),
        Command::Bound { file } => bound(&read_graph(&file)?),
        Command::Extract { file, dot, cert } => run_extract(&read_graph(&file)?, dot, cert),
        Command::Generate { family, output } => generate(family, output),
        Command::Verify(args) => verify(args, cli.seed),
        Command::Casestudy { .. } => {
            let study = casestudy::run()?;
            print!("{}", study.report());
            Ok(study.confirmed())
        }
    }
}

fn read_graph(path: &Path) -> Result<Multigraph> {
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let g = parse_multigraph(&bytes).with_context(|| format!("cannot parse {}", path.display()))?;
    g.validate_subcubic()
        .with_context(|| format!("{} is not subcubic", path.display()))?;
    Ok(g)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn set(s: &VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn analyze(g: &Multigraph) -> Result<bool> {
    let report = analyze_structure(g)?;
    let mut out = String::new();
    writeln!(out, "n: {}", g.vertex_count())?;
    writeln!(out, "m: {}", g.edge_count())?;
    writeln!(out, "c: {}", report.c)?;
    writeln!(out, "d: {}", report.d)?;
    writeln!(out, "girth: {}", girth(g))?;
    let cuts: Vec<String> = report.cut_edges.iter().map(|e| e.to_string()).collect();
    writeln!(out, "cut-edges: {}", cuts.join(" "))?;
    let balloons: Vec<String> = report
        .two_edge_connected_components
        .iter()
        .zip(&report.balloon_flags)
        .filter(|(_, &b)| b)
        .map(|(c, _)| set(c))
        .collect();
    writeln!(out, "balloons: {}", balloons.len())?;
    for b in balloons {
        writeln!(out, "  {b}")?;
    }
    let ge = gallai_edmonds(g);
    writeln!(out, "deficiency: {}", ge.deficiency)?;
    writeln!(out, "gallai-edmonds A: {}", set(&ge.a))?;
    writeln!(out, "gallai-edmonds C: {}", set(&ge.c))?;
    writeln!(out, "gallai-edmonds D: {}", set(&ge.d))?;
    let comps: Vec<String> = ge.components_of_d.iter().map(set).collect();
    writeln!(out, "components of D: {}", comps.join(" "))?;
    print!("{out}");
    Ok(true)
}

fn bound(g: &Multigraph) -> Result<bool> {
    let report = analyze_structure(g)?;
    let b = bound_omitted(g.vertex_count(), g.edge_count(), report.c)?;
    println!("n: {}", g.vertex_count());
    println!("m: {}", g.edge_count());
    println!("c: {}", report.c);
    println!("d: {}", report.d);
    println!("bound: {b}");
    println!("guaranteed: {}", g.vertex_count() - b.min(g.vertex_count()));
    Ok(true)
}

fn run_extract(g: &Multigraph, dot: Option<PathBuf>, cert: Option<PathBuf>) -> Result<bool> {
    let (h, mut certificate) = extract(g)?;
    if g.is_connected() && g.vertex_count() > 0 {
        certificate = classify_equality(g, &certificate)?;
    }
    println!("omitted {} / bound {}", certificate.achieved_omitted, certificate.bound_omitted);
    println!("covered: {}", h.vertex_count());
    for (i, cycle) in h.cycles.iter().enumerate() {
        let edges: Vec<String> = cycle.iter().map(|e| e.to_string()).collect();
        println!("cycle {i}: edges {}", edges.join(" "));
    }
    let classes: Vec<&str> = certificate.components.iter().map(|r| r.class.name()).collect();
    println!("classes: {}", classes.join(","));
    if let Some(path) = dot {
        write_file(&path, &to_dot(g, Some(&h)))?;
    }
    if let Some(path) = cert {
        write_file(&path, &certificate.to_document())?;
    }
    Ok(true)
}

/// A built-in graph name or a path to a .mg file.
fn graph_arg(name: &str) -> Result<Multigraph> {
    match named::by_name(name) {
        Some(g) => Ok(g),
        None => read_graph(Path::new(name)),
    }
}

/// Parses `y=F:z`.
fn explosion_arg(text: &str) -> Result<(usize, ExplosionSpec)> {
    let bad = || anyhow!("explosion {text:?} is not of the form y=F:z");
    let (y, rest) = text.split_once('=').ok_or_else(bad)?;
    let (f, z) = rest.rsplit_once(':').ok_or_else(bad)?;
    let y: usize = y.parse().map_err(|_| bad())?;
    let z: usize = z.parse().map_err(|_| bad())?;
    Ok((y, ExplosionSpec { f: graph_arg(f)?, z, pairing: None }))
}

fn generate(family: Family, output: Option<PathBuf>) -> Result<bool> {
    let (graph, summary) = match family {
        Family::Balloon { girth } => {
            let g = smallest_balloon(girth)?;
            let s = format!("balloon of girth {girth} on {} vertices", g.vertex_count());
            (g, s)
        }
        Family::Tree { internal, girth } => {
            let g = build_tree_with_balloons(internal, girth)?;
            let s = format!(
                "tree with {internal} internal vertices and girth-{girth} balloons on {} vertices",
                g.vertex_count()
            );
            (g, s)
        }
        Family::Gfamily { base, explode, yhat } => {
            let mut spec = GFamilySpec::new(graph_arg(&base)?);
            spec.y_hat = yhat;
            for text in &explode {
                let (y, ex) = explosion_arg(text)?;
                if spec.explosions.insert(y, ex).is_some() {
                    bail!("vertex {y} is exploded twice");
                }
            }
            let member = build_g_family(&spec)?;
            let s = format!(
                "member on {} vertices, deleted vertex {}, 2-vertices {}",
                member.graph.vertex_count(),
                member.y_hat,
                set(&member.two_vertices)
            );
            (member.graph, s)
        }
    };
    let text = serialize_multigraph(&graph);
    match output {
        Some(path) => {
            write_file(&path, &text)?;
            println!("{summary}");
        }
        None => print!("{text}"),
    }
    Ok(true)
}

fn verify(args: VerifyArgs, seed: u64) -> Result<bool> {
    if args.max_n.is_some() && args.random.is_none() {
        bail!("--max-n only applies to --random");
    }
    if args.oracle && args.file.is_none() {
        bail!("--oracle only applies to a file");
    }
    if let Some(path) = args.file {
        let g = read_graph(&path)?;
        if args.oracle && g.vertex_count() > ORACLE_LIMIT {
            bail!(
                "the exact oracle is limited to {ORACLE_LIMIT} vertices, {} has {}",
                path.display(),
                g.vertex_count()
            );
        }
        let mode = if args.oracle { OracleMode::Auto } else { OracleMode::Never };
        return Ok(match check_theorem(&g, mode) {
            Ok(check) => {
                let c = &check.certificate;
                println!("omitted {} / bound {}", c.achieved_omitted, c.bound_omitted);
                if let Some(o) = &check.oracle {
                    println!("f2: {}", o.f2_exact);
                    println!("oracle equality: {}", o.equality_exact);
                }
                println!("pass");
                true
            }
            Err(cx) => {
                print!("{cx}");
                println!("FAIL");
                false
            }
        });
    }
    if let Some(n) = args.enumerate {
        if n > ENUMERATION_LIMIT {
            bail!("enumeration is limited to {ENUMERATION_LIMIT} vertices");
        }
        let options = EnumerationOptions { connected_only: true, ..EnumerationOptions::default() };
        for k in 1..=n {
            match check_all(k, options, OracleMode::Auto)? {
                Ok(s) => println!(
                    "n = {k}: {} graphs, {} with equality, largest omission {}",
                    s.graphs, s.equality_cases, s.max_omitted
                ),
                Err(cx) => {
                    print!("{cx}");
                    println!("FAIL");
                    return Ok(false);
                }
            }
        }
        println!("pass");
        return Ok(true);
    }
    let count = args.random.expect("clap enforces one target");
    let max_n = args.max_n.unwrap_or(12);
    if max_n == 0 {
        bail!("--max-n must be positive");
    }
    let mut rng = seeded(seed);
    let mut checked_by_oracle = 0;
    for _ in 0..count {
        let n = rng.gen_range(1..=max_n);
        let g = random_subcubic(&mut rng, n);
        match check_theorem(&g, OracleMode::Auto) {
            Ok(check) => checked_by_oracle += usize::from(check.oracle.is_some()),
            Err(cx) => {
                print!("{cx}");
                println!("FAIL");
                return Ok(false);
            }
        }
    }
    println!("{count} random graphs, {checked_by_oracle} also checked exactly");
    println!("pass");
    Ok(true)
}
