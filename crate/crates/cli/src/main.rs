use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use nfblocks::certify::{certify_graphs, run_suite, SuiteOptions, SuiteReport};
use nfblocks::charpoly::{charpoly, graph_charpoly};
use nfblocks::geometry::{geo_graph, genericity_check, lift_all, search_generic_sites, Sites};
use nfblocks::{enumerate_edges, Color, Edge, MarkedGraph, NormalForm};

mod config;

use config::Config;

const EXIT_OK: u8 = 0;
const EXIT_MATH_FAILURE: u8 = 2;
const EXIT_INCOMPLETE: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "nfblocks", version, about = "Normal-form block certification toolkit")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for batch commands.
    #[arg(long, env = "NFBLOCKS_JOBS", global = true)]
    jobs: Option<usize>,
    /// JSON file preloading q, m, sites and budget.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the generators X_q for m sites.
    Edges(Dims),
    /// Characteristic polynomial of a graph file or a one-edge graph.
    Charpoly(GraphArgs),
    /// Normalized matrix of a graph file or a one-edge graph.
    Matrix(GraphArgs),
    /// Enumerate, certify and pair-check every class up to a dimension.
    Certify(CertifyArgs),
    /// Geometric graph of a sites file.
    Geometry(GeometryArgs),
    /// Sample integer sites until one passes the genericity check.
    SearchSites(SearchArgs),
}

#[derive(Args, Debug)]
struct Dims {
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// Marked graph JSON file.
    graph: Option<PathBuf>,
    /// Inline edge, e.g. "+1,-1".
    #[arg(long, conflicts_with = "graph", allow_hyphen_values = true)]
    one_edge: Option<String>,
    #[arg(long)]
    q: Option<u32>,
}

#[derive(Args, Debug)]
struct CertifyArgs {
    #[command(flatten)]
    dims: Dims,
    #[arg(long, default_value_t = 1)]
    max_dim: usize,
    /// Specialization points tried per polynomial.
    #[arg(long)]
    budget: Option<usize>,
    /// Seed for random specialization points; the default grid is deterministic.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 100_000)]
    max_graphs: usize,
    #[arg(long, default_value_t = 5_000_000)]
    max_pairs: usize,
    /// Skip the pairwise separation checks.
    #[arg(long)]
    no_pairs: bool,
    /// Append the reducible fixture t^2 - x1^2 as a negative control.
    #[arg(long)]
    planted_reducible: bool,
    /// Write the full JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GeometryArgs {
    /// Sites JSON file {n, v}.
    sites: Option<PathBuf>,
    #[arg(long)]
    q: Option<u32>,
    /// Half-width of the enumeration box.
    #[arg(long = "R", short = 'R', default_value_t = 8)]
    radius: i64,
    #[arg(long, group = "mode")]
    check_generic: bool,
    #[arg(long, group = "mode")]
    components: bool,
    /// Lift every interior component and certify the resulting graphs.
    #[arg(long, group = "mode")]
    lift: bool,
    /// Graphviz output of the whole graph.
    #[arg(long, group = "mode")]
    dot: bool,
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long = "R", short = 'R', default_value_t = 8)]
    radius: i64,
    /// Sites are drawn from [-spread, spread]^n.
    #[arg(long, default_value_t = 4)]
    spread: i64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    max_attempts: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    schema: &'static str,
    #[serde(flatten)]
    body: T,
}

fn emit_json<T: Serialize>(schema: &'static str, body: T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(&Envelope { schema, body })?;
    s.push('\n');
    Ok(s)
}

struct Ctx {
    format: Format,
    config: Config,
}

impl Ctx {
    fn q(&self, flag: Option<u32>) -> anyhow::Result<u32> {
        flag.or(self.config.q).ok_or_else(|| anyhow!("--q is required"))
    }

    fn m(&self, flag: Option<usize>) -> anyhow::Result<usize> {
        flag.or(self.config.m).ok_or_else(|| anyhow!("--m is required"))
    }

    fn budget(&self, flag: Option<usize>) -> usize {
        flag.or(self.config.budget).unwrap_or(nfblocks::certify::DEFAULT_BUDGET)
    }

    fn sites(&self, path: Option<&Path>) -> anyhow::Result<Sites> {
        match path {
            Some(p) => config::read_sites(p),
            None => self.config.sites.clone().ok_or_else(|| anyhow!("a sites file is required")),
        }
    }
}

/// A command's stdout payload and exit code.
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: EXIT_OK }
    }
}

fn write_out(path: &Path, contents: &str) -> anyhow::Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn cmd_edges(ctx: &Ctx, d: &Dims) -> anyhow::Result<Output> {
    let q = ctx.q(d.q)?;
    let m = ctx.m(d.m)?;
    let edges = enumerate_edges(q, m)?;
    let (black, red): (Vec<&Edge>, Vec<&Edge>) = edges.iter().partition(|e| e.color == Color::Black);
    if ctx.format == Format::Json {
        #[derive(Serialize)]
        struct Listing<'a> {
            q: u32,
            m: usize,
            counts: Counts,
            black: Vec<Entry<'a>>,
            red: Vec<Entry<'a>>,
        }
        #[derive(Serialize)]
        struct Counts {
            black: usize,
            red: usize,
        }
        #[derive(Serialize)]
        struct Entry<'a> {
            label: String,
            n: &'a [i64],
        }
        fn entries<'a>(v: &[&'a Edge]) -> Vec<Entry<'a>> {
            v.iter().map(|e| Entry { label: e.to_string(), n: &e.n }).collect()
        }
        let body = Listing { q, m, counts: Counts { black: black.len(), red: red.len() }, black: entries(&black), red: entries(&red) };
        return Ok(Output::ok(emit_json("nfblocks.edges.v1", body)?));
    }
    let mut s = format!("q = {q}, m = {m}: {} black, {} red\n", black.len(), red.len());
    for (name, list) in [("black", &black), ("red", &red)] {
        s.push_str(&format!("{name}:\n"));
        for e in list.iter() {
            s.push_str(&format!("  {e}\n"));
        }
    }
    Ok(Output::ok(s))
}

fn load_graph(ctx: &Ctx, args: &GraphArgs) -> anyhow::Result<MarkedGraph> {
    match (&args.graph, &args.one_edge) {
        (Some(p), None) => {
            let raw = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            let g: MarkedGraph = serde_json::from_str(&raw).with_context(|| format!("parsing graph {}", p.display()))?;
            if let Some(q) = args.q.or(ctx.config.q) {
                if q != g.q() {
                    bail!("--q {q} disagrees with the graph file (q = {})", g.q());
                }
            }
            Ok(g)
        }
        (None, Some(spec)) => {
            let q = ctx.q(args.q)?;
            Ok(MarkedGraph::one_edge(&Edge::parse(spec, q)?, q)?)
        }
        _ => bail!("give a graph file or --one-edge"),
    }
}

fn cmd_charpoly(ctx: &Ctx, args: &GraphArgs) -> anyhow::Result<Output> {
    let g = load_graph(ctx, args)?;
    let chi = graph_charpoly(&NormalForm::new(g.q(), g.m())?, &g)?;
    if ctx.format == Format::Json {
        #[derive(Serialize)]
        struct Body<'a> {
            q: u32,
            m: usize,
            vertices: &'a [nfblocks::GElem],
            chi: String,
            coeffs: &'a nfblocks::poly::TPoly,
        }
        let body = Body { q: g.q(), m: g.m(), vertices: g.vertices(), chi: chi.to_string(), coeffs: &chi };
        return Ok(Output::ok(emit_json("nfblocks.charpoly.v1", body)?));
    }
    Ok(Output::ok(format!("{chi}\n")))
}

fn cmd_matrix(ctx: &Ctx, args: &GraphArgs) -> anyhow::Result<Output> {
    let g = load_graph(ctx, args)?;
    let mtx = NormalForm::new(g.q(), g.m())?.build_matrix(&g)?;
    if ctx.format == Format::Json {
        return Ok(Output::ok(emit_json("nfblocks.matrix.v1", &mtx)?));
    }
    let mut s = String::new();
    for (i, v) in mtx.vertex_order().iter().enumerate() {
        let row: Vec<String> = (0..mtx.dim()).map(|j| mtx.entry(i, j).to_string()).collect();
        s.push_str(&format!("{v}: [{}]\n", row.join(", ")));
    }
    let chi = charpoly(&mtx);
    s.push_str(&format!("chi = {chi}\n"));
    Ok(Output::ok(s))
}

fn suite_summary(r: &SuiteReport) -> String {
    let s = &r.summary;
    let mut out = format!(
        "{} graphs: {} irreducible, {} reducible, {} unknown; {} pairs, {} not separated\n",
        s.graphs, s.irreducible, s.reducible, s.unknown, s.pairs, s.non_separated
    );
    if r.incomplete {
        out.push_str("incomplete: a resource cap was reached\n");
    }
    if r.unknown_warning {
        out.push_str("warning: some polynomials were neither certified nor refuted\n");
    }
    for c in &r.counterexamples {
        out.push_str(&format!("counterexample: {c}\n"));
    }
    out.push_str(&format!("status: {:?}\n", r.status()));
    out
}

fn finish_report(ctx: &Ctx, report: &SuiteReport, out: Option<&Path>) -> anyhow::Result<Output> {
    let json = emit_json("nfblocks.certify-report.v1", report)?;
    if let Some(p) = out {
        write_out(p, &json)?;
    }
    let text = if ctx.format == Format::Json { json } else { suite_summary(report) };
    Ok(Output { text, code: report.status().exit_code() as u8 })
}

fn cmd_certify(ctx: &Ctx, a: &CertifyArgs) -> anyhow::Result<Output> {
    let q = ctx.q(a.dims.q)?;
    let m = ctx.m(a.dims.m)?;
    let opts = SuiteOptions {
        budget: ctx.budget(a.budget),
        seed: a.seed,
        max_graphs: a.max_graphs,
        max_pairs: a.max_pairs,
        check_pairs: !a.no_pairs,
        planted_reducible: a.planted_reducible,
    };
    let report = run_suite(q, m, a.max_dim, &opts)?;
    finish_report(ctx, &report, a.out.as_deref())
}

fn cmd_geometry(ctx: &Ctx, a: &GeometryArgs) -> anyhow::Result<Output> {
    let sites = ctx.sites(a.sites.as_deref())?;
    let q = ctx.q(a.q)?;
    let g = geo_graph(&sites, q, a.radius)?;
    let out = if a.check_generic {
        let rep = genericity_check(&sites, q, a.radius)?;
        let code = if rep.pass { EXIT_OK } else { EXIT_MATH_FAILURE };
        let text = if ctx.format == Format::Json {
            emit_json("nfblocks.genericity.v1", &rep)?
        } else {
            format!(
                "{}: {} vertices, {} single edges, {} larger, {} degenerate, {} touching the box{}\n",
                if rep.pass { "pass" } else { "fail" },
                rep.vertices,
                rep.single_edges,
                rep.larger,
                rep.degenerate,
                rep.boundary,
                if rep.exploratory { " (exploratory dimension)" } else { "" }
            )
        };
        Output { text, code }
    } else if a.components {
        #[derive(Serialize)]
        struct Census {
            q: u32,
            radius: i64,
            sites: Sites,
            components: Vec<nfblocks::geometry::GeoComponent>,
        }
        let comps: Vec<_> = g.components().into_iter().filter(|c| !c.edges.is_empty() || c.boundary).collect();
        let census = Census { q, radius: a.radius, sites: sites.clone(), components: comps };
        if ctx.format == Format::Json {
            Output::ok(emit_json("nfblocks.components.v1", &census)?)
        } else {
            let all = g.components();
            let mut s = format!("{} components in the box\n", all.len());
            for c in &census.components {
                s.push_str(&format!("{:?} {:?} edges={} boundary={}\n", c.kind, c.points, c.edges.len(), c.boundary));
            }
            Output::ok(s)
        }
    } else if a.lift {
        let lifts = lift_all(&g)?;
        let graphs = lifts.into_iter().map(|(label, l)| (label, l.graph)).collect();
        let opts = SuiteOptions { budget: ctx.budget(a.budget), ..Default::default() };
        let report = certify_graphs(q, sites.m(), graphs, &opts)?;
        return finish_report(ctx, &report, a.out.as_deref());
    } else if a.dot {
        Output::ok(g.to_dot())
    } else {
        Output::ok(emit_json("nfblocks.geograph.v1", &g)?)
    };
    if let Some(p) = &a.out {
        write_out(p, &out.text)?;
    }
    Ok(out)
}

fn cmd_search(ctx: &Ctx, a: &SearchArgs) -> anyhow::Result<Output> {
    let q = ctx.q(a.q)?;
    let m = ctx.m(a.m)?;
    let found = search_generic_sites(a.n, m, q, a.radius, a.spread, a.seed, a.max_attempts)?;
    let Some(found) = found else {
        return Ok(Output {
            text: format!("no generic sites within {} attempts\n", a.max_attempts),
            code: EXIT_INCOMPLETE,
        });
    };
    if let Some(p) = &a.out {
        write_out(p, &format!("{}\n", serde_json::to_string(&found.sites)?))?;
    }
    if ctx.format == Format::Json {
        return Ok(Output::ok(emit_json("nfblocks.search-sites.v1", &found)?));
    }
    Ok(Output::ok(format!("{} after {} attempts\n", serde_json::to_string(&found.sites)?, found.attempts)))
}

fn run(cli: &Cli) -> anyhow::Result<Output> {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring the thread pool")?;
    }
    let config = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let ctx = Ctx { format: cli.format, config };
    match &cli.command {
        Command::Edges(d) => cmd_edges(&ctx, d),
        Command::Charpoly(g) => cmd_charpoly(&ctx, g),
        Command::Matrix(g) => cmd_matrix(&ctx, g),
        Command::Certify(c) => cmd_certify(&ctx, c),
        Command::Geometry(g) => cmd_geometry(&ctx, g),
        Command::SearchSites(s) => cmd_search(&ctx, s),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
