//! `pmckit`: enumerate minimal separators and PMCs, cross-check the
//! enumerators, and solve treewidth and minimum fill-in.
//!
//! Exit status is 0 on success, 1 when a verification check fails and 2 on
//! bad input or usage.

mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pmckit::generate::{watermelon_hubs, Family};
use pmckit::modular::{modular_decomposition, modular_width, separators_by_mw};
use pmckit::recognition::{brute_force_separators_capped, is_minimal_uv_separator, DEFAULT_ORACLE_CAP};
use pmckit::solvers::{
    brute_force_fill_in_capped, brute_force_treewidth_capped, min_fill_in, treewidth, Method,
    DEFAULT_FILL_ORACLE_CAP, DEFAULT_TW_ORACLE_CAP,
};
use pmckit::vc::{minimum_vertex_cover, separators_by_vc};
use pmckit::{gr, Graph, PmcCatalog, VertexSet};

use report::{Check, GraphInfo, Mismatch, Report};

const ORACLE_CAP_VAR: &str = "PMCKIT_ORACLE_CAP";
const MAX_WITNESSES: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "pmckit", version, about = "Minimal separators, potential maximal cliques, treewidth and fill-in")]
struct Cli {
    /// Worker threads for enumeration and oracles.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Human-readable table instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Include wall-clock timings (always on for `bench`).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List minimal separators or PMCs.
    Enum {
        what: EnumWhat,
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = MethodArg::Vc)]
        method: MethodArg,
    },
    /// Count minimal separators, and optionally PMCs and u,v-separators.
    Count {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = MethodArg::Vc)]
        method: MethodArg,
        /// Also count PMCs.
        #[arg(long)]
        pmcs: bool,
        /// Count minimal u,v-separators (defaults to the hubs of a watermelon).
        #[arg(long, requires = "v")]
        u: Option<usize>,
        #[arg(long, requires = "u")]
        v: Option<usize>,
    },
    /// Compare every enumerator with the brute-force oracles.
    Verify {
        #[command(flatten)]
        source: Source,
    },
    /// Exact treewidth or minimum fill-in.
    Solve {
        what: SolveWhat,
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = MethodArg::Vc)]
        method: MethodArg,
    },
    /// Modular decomposition tree.
    Decompose {
        #[command(flatten)]
        source: Source,
    },
    /// Write a graph in `.gr` format.
    Gen {
        #[command(flatten)]
        source: Source,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Time each phase of the selected routes.
    Bench {
        #[command(flatten)]
        source: Source,
        /// Route to time; both parameterized routes when omitted.
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EnumWhat {
    Seps,
    Pmcs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SolveWhat {
    Tw,
    Fillin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Vc,
    Mw,
    Brute,
}

impl MethodArg {
    fn method(self) -> Method {
        match self {
            MethodArg::Vc => Method::Vc,
            MethodArg::Mw => Method::Mw,
            MethodArg::Brute => Method::Brute,
        }
    }

    fn name(self) -> &'static str {
        match self {
            MethodArg::Vc => "vc",
            MethodArg::Mw => "mw",
            MethodArg::Brute => "brute",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Cube,
    Watermelon,
    Path,
    Cycle,
    Complete,
    Empty,
    Gnp,
}

#[derive(Args, Debug)]
struct Source {
    /// Graph file in `.gr` format.
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Generated graph family.
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    prob: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of consecutive seeds starting at `--seed` (gnp only).
    #[arg(long, default_value_t = 1)]
    seeds: u64,
}

struct Loaded {
    graph: Graph,
    source: String,
    hubs: Option<(usize, usize)>,
}

#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome<T> = std::result::Result<T, InputError>;

impl Source {
    fn family(&self, seed: u64) -> Outcome<Family> {
        let need = |name: &str, v: Option<usize>| v.ok_or_else(|| InputError(format!("--{name} is required for this family")));
        Ok(match self.family {
            None => return Err(InputError("one of --input or --family is required".into())),
            Some(FamilyName::Cube) => Family::Cube,
            Some(FamilyName::Watermelon) => Family::Watermelon { p: need("p", self.p)?, q: need("q", self.q)? },
            Some(FamilyName::Path) => Family::Path(need("n", self.n)?),
            Some(FamilyName::Cycle) => Family::Cycle(need("n", self.n)?),
            Some(FamilyName::Complete) => Family::Complete(need("n", self.n)?),
            Some(FamilyName::Empty) => Family::Empty(need("n", self.n)?),
            Some(FamilyName::Gnp) => Family::Gnp {
                n: need("n", self.n)?,
                prob: self.prob.ok_or_else(|| InputError("--prob is required for gnp".into()))?,
                seed,
            },
        })
    }

    fn load_all(&self) -> Outcome<Vec<Loaded>> {
        if self.seeds == 0 {
            return Err(InputError("--seeds must be positive".into()));
        }
        if let Some(path) = &self.input {
            let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            let graph = gr::parse_gr(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            return Ok(vec![Loaded { graph, source: path.display().to_string(), hubs: None }]);
        }
        let seeds = if self.family == Some(FamilyName::Gnp) { self.seeds } else { 1 };
        (self.seed..self.seed + seeds)
            .map(|seed| {
                let family = self.family(seed)?;
                let hubs = match family {
                    Family::Watermelon { p, q } => Some(watermelon_hubs(p, q)),
                    _ => None,
                };
                Ok(Loaded { graph: family.generate()?, source: family.describe(), hubs })
            })
            .collect()
    }

    fn load(&self) -> Outcome<Loaded> {
        let mut all = self.load_all()?;
        if all.len() != 1 {
            return Err(InputError("--seeds is only supported by verify".into()));
        }
        Ok(all.remove(0))
    }
}

#[derive(Clone, Copy)]
struct Caps {
    sets: usize,
    tw: usize,
    fill: usize,
}

impl Caps {
    fn from_env() -> Outcome<Caps> {
        match std::env::var(ORACLE_CAP_VAR) {
            Ok(v) => {
                let cap: usize = v.trim().parse().map_err(|_| InputError(format!("{ORACLE_CAP_VAR}={v:?} is not a number")))?;
                Ok(Caps { sets: cap, tw: cap, fill: cap })
            }
            Err(_) => Ok(Caps { sets: DEFAULT_ORACLE_CAP, tw: DEFAULT_TW_ORACLE_CAP, fill: DEFAULT_FILL_ORACLE_CAP }),
        }
    }
}

struct Ctx {
    caps: Caps,
    timings: Option<BTreeMap<String, f64>>,
}

impl Ctx {
    fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if let Some(t) = &mut self.timings {
            t.insert(phase.to_string(), start.elapsed().as_secs_f64() * 1e3);
        }
        out
    }
}

fn info(l: &Loaded) -> GraphInfo {
    GraphInfo { n: l.graph.n(), m: l.graph.m(), source: l.source.clone() }
}

fn params(report: &mut Report, ctx: &mut Ctx, g: &Graph) {
    report.params.vc = Some(ctx.time("vertex_cover", || minimum_vertex_cover(g).len()));
    report.params.mw = ctx.time("decomposition", || modular_decomposition(g).ok().map(|t| modular_width(&t)));
}

fn separators(g: &Graph, method: MethodArg, caps: Caps) -> pmckit::Result<Vec<VertexSet>> {
    match method {
        MethodArg::Vc => separators_by_vc(g, minimum_vertex_cover(g)),
        MethodArg::Mw => separators_by_mw(g),
        MethodArg::Brute => brute_force_separators_capped(g, caps.sets),
    }
}

fn catalog(g: &Graph, method: MethodArg, caps: Caps) -> pmckit::Result<PmcCatalog> {
    method.method().catalog_with_cap(g, caps.sets)
}

/// Solves each component with its own catalog; max for treewidth, sum for fill-in.
fn solve(g: &Graph, what: SolveWhat, method: MethodArg, caps: Caps) -> pmckit::Result<usize> {
    let mut total = 0;
    for c in g.components_without(VertexSet::EMPTY) {
        let h = g.induced(c);
        let cat = catalog(&h, method, caps)?;
        match what {
            SolveWhat::Tw => total = total.max(treewidth(&h, &cat)?),
            SolveWhat::Fillin => total += min_fill_in(&h, &cat)?,
        }
    }
    Ok(total)
}

fn oracle_solve(g: &Graph, what: SolveWhat, caps: Caps) -> Option<usize> {
    match what {
        SolveWhat::Tw => brute_force_treewidth_capped(g, caps.tw).ok(),
        SolveWhat::Fillin => brute_force_fill_in_capped(g, caps.fill).ok(),
    }
}

fn run(cli: Cli) -> Outcome<Report> {
    let caps = Caps::from_env()?;
    let bench = matches!(cli.command, Command::Bench { .. });
    let mut ctx = Ctx { caps, timings: (cli.timings || bench).then(BTreeMap::new) };

    let mut report = match &cli.command {
        Command::Enum { what, source, method } => {
            let l = source.load()?;
            let mut r = Report::new("enum", info(&l));
            params(&mut r, &mut ctx, &l.graph);
            match what {
                EnumWhat::Seps => {
                    let seps = ctx.time("separators", || separators(&l.graph, *method, caps))?;
                    r.results.counts.insert("separators".into(), seps.len());
                    r.results.separators = Some(seps);
                }
                EnumWhat::Pmcs => {
                    let cat = ctx.time("pmcs", || catalog(&l.graph, *method, caps))?;
                    r.results.counts.insert("pmcs".into(), cat.len());
                    r.results.pmcs = Some(cat.to_vec());
                }
            }
            r
        }
        Command::Count { source, method, pmcs, u, v } => {
            let l = source.load()?;
            let g = &l.graph;
            let mut r = Report::new("count", info(&l));
            params(&mut r, &mut ctx, g);
            let seps = ctx.time("separators", || separators(g, *method, caps))?;
            r.results.counts.insert("separators".into(), seps.len());
            if let Some((u, v)) = u.zip(*v).or(l.hubs) {
                for x in [u, v] {
                    if !g.vertices().contains(x) {
                        return Err(InputError(format!("vertex {x} is not in the graph")));
                    }
                }
                let uv = seps.iter().filter(|&&s| is_minimal_uv_separator(g, s, u, v)).count();
                r.results.counts.insert("uv_separators".into(), uv);
            }
            if *pmcs {
                let cat = ctx.time("pmcs", || catalog(g, *method, caps))?;
                r.results.counts.insert("pmcs".into(), cat.len());
            }
            r
        }
        Command::Verify { source } => verify(source, &mut ctx)?,
        Command::Solve { what, source, method } => {
            let l = source.load()?;
            let g = &l.graph;
            let mut r = Report::new("solve", info(&l));
            params(&mut r, &mut ctx, g);
            let value = ctx.time("solve", || solve(g, *what, *method, caps))?;
            let name = match what {
                SolveWhat::Tw => {
                    r.results.treewidth = Some(value);
                    "treewidth"
                }
                SolveWhat::Fillin => {
                    r.results.fill_in = Some(value);
                    "fill_in"
                }
            };
            let check = match ctx.time("oracle", || oracle_solve(g, *what, caps)) {
                Some(expected) if expected == value => Check::Pass,
                Some(_) => Check::Fail,
                None => Check::Skipped,
            };
            r.check(format!("{name}.oracle"), check);
            r
        }
        Command::Decompose { source } => {
            let l = source.load()?;
            let mut r = Report::new("decompose", info(&l));
            let tree = ctx.time("decomposition", || modular_decomposition(&l.graph))?;
            r.params.mw = Some(modular_width(&tree));
            r.results.counts.insert("nodes".into(), tree.nodes().len());
            r.results.tree = Some(tree);
            r
        }
        Command::Gen { .. } => unreachable!("handled before run"),
        Command::Bench { source, method } => {
            let l = source.load()?;
            let g = &l.graph;
            let mut r = Report::new("bench", info(&l));
            params(&mut r, &mut ctx, g);
            let routes = match method {
                Some(m) => vec![*m],
                None => vec![MethodArg::Vc, MethodArg::Mw],
            };
            for m in routes {
                let seps = ctx.time(&format!("separators_{}", m.name()), || separators(g, m, caps))?;
                let cat = ctx.time(&format!("pmcs_{}", m.name()), || catalog(g, m, caps))?;
                r.results.counts.insert(format!("separators_{}", m.name()), seps.len());
                r.results.counts.insert(format!("pmcs_{}", m.name()), cat.len());
            }
            r
        }
    };
    report.timings_ms = ctx.timings;
    Ok(report)
}

fn symmetric_difference(a: &[VertexSet], b: &[VertexSet]) -> (Vec<VertexSet>, Vec<VertexSet>) {
    let only = |x: &[VertexSet], y: &[VertexSet]| -> Vec<VertexSet> {
        x.iter().filter(|s| y.binary_search(s).is_err()).take(MAX_WITNESSES).copied().collect()
    };
    (only(a, b), only(b, a))
}

fn merge_check(checks: &mut BTreeMap<String, Check>, name: String, c: Check) {
    let slot = checks.entry(name).or_insert(Check::Skipped);
    *slot = match (*slot, c) {
        (Check::Fail, _) | (_, Check::Fail) => Check::Fail,
        (Check::Pass, _) | (_, Check::Pass) => Check::Pass,
        _ => Check::Skipped,
    };
}

/// Separators and PMCs of one route; `None` when the oracle refused the graph.
type RouteSets = (Option<Vec<VertexSet>>, Option<Vec<VertexSet>>);

fn verify(source: &Source, ctx: &mut Ctx) -> Outcome<Report> {
    let caps = ctx.caps;
    let graphs = source.load_all()?;
    let described = if graphs.len() == 1 {
        info(&graphs[0])
    } else {
        GraphInfo {
            n: graphs[0].graph.n(),
            m: graphs.iter().map(|l| l.graph.m()).sum(),
            source: format!("{} x{}", graphs[0].source, graphs.len()),
        }
    };
    let mut r = Report::new("verify", described);
    if graphs.len() == 1 {
        params(&mut r, ctx, &graphs[0].graph);
    }
    let mut checks = BTreeMap::new();
    let (mut sep_total, mut pmc_total) = (0, 0);

    for l in &graphs {
        let g = &l.graph;
        let mut sets: BTreeMap<&str, RouteSets> = BTreeMap::new();
        for m in [MethodArg::Brute, MethodArg::Vc, MethodArg::Mw] {
            let seps = ctx.time(&format!("separators_{}", m.name()), || separators(g, m, caps));
            let pmcs = ctx.time(&format!("pmcs_{}", m.name()), || catalog(g, m, caps));
            let keep = |e: &pmckit::Error| matches!(e, pmckit::Error::TooLarge { .. }) && m == MethodArg::Brute;
            let seps = match seps {
                Ok(s) => Some(s),
                Err(e) if keep(&e) => None,
                Err(e) => return Err(InputError(format!("{}: {e}", l.source))),
            };
            let pmcs = match pmcs {
                Ok(c) => Some(c.to_vec()),
                Err(e) if keep(&e) => None,
                Err(e) => return Err(InputError(format!("{}: {e}", l.source))),
            };
            sets.insert(m.name(), (seps, pmcs));
        }
        let reference = if sets["brute"].0.is_some() { "brute" } else { "vc" };
        sep_total += sets["vc"].0.as_ref().map_or(0, Vec::len);
        pmc_total += sets["vc"].1.as_ref().map_or(0, Vec::len);

        for route in ["vc", "mw"] {
            if route == reference {
                continue;
            }
            for (what, pick) in [("separators", 0), ("pmcs", 1)] {
                let get = |name: &str| if pick == 0 { sets[name].0.as_ref() } else { sets[name].1.as_ref() };
                let (Some(a), Some(b)) = (get(route), get(reference)) else {
                    merge_check(&mut checks, format!("{what}.{route}"), Check::Skipped);
                    continue;
                };
                if a == b {
                    merge_check(&mut checks, format!("{what}.{route}"), Check::Pass);
                } else {
                    merge_check(&mut checks, format!("{what}.{route}"), Check::Fail);
                    let (only_left, only_right) = symmetric_difference(a, b);
                    r.results.mismatches.push(Mismatch {
                        graph: l.source.clone(),
                        what: what.into(),
                        left: route.into(),
                        right: reference.into(),
                        only_left,
                        only_right,
                    });
                }
            }
        }

        for (what, name) in [(SolveWhat::Tw, "treewidth"), (SolveWhat::Fillin, "fill_in")] {
            let Some(expected) = oracle_solve(g, what, caps) else {
                merge_check(&mut checks, format!("{name}.vc"), Check::Skipped);
                merge_check(&mut checks, format!("{name}.mw"), Check::Skipped);
                continue;
            };
            for route in [MethodArg::Vc, MethodArg::Mw] {
                let got = solve(g, what, route, caps).map_err(|e| InputError(format!("{}: {e}", l.source)))?;
                let c = if got == expected { Check::Pass } else { Check::Fail };
                if c == Check::Fail {
                    r.results.mismatches.push(Mismatch {
                        graph: l.source.clone(),
                        what: name.into(),
                        left: format!("{} = {got}", route.name()),
                        right: format!("oracle = {expected}"),
                        only_left: Vec::new(),
                        only_right: Vec::new(),
                    });
                }
                merge_check(&mut checks, format!("{name}.{}", route.name()), c);
            }
        }
    }

    r.results.counts.insert("graphs".into(), graphs.len());
    r.results.counts.insert("separators".into(), sep_total);
    r.results.counts.insert("pmcs".into(), pmc_total);
    r.results.counts.insert("mismatches".into(), r.results.mismatches.len());
    for (k, v) in checks {
        r.check(k, v);
    }
    Ok(r)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.max(1)).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }

    if let Command::Gen { source, output } = &cli.command {
        let text = match source.load() {
            Ok(l) => gr::write_gr(&l.graph),
            Err(InputError(msg)) => {
                eprintln!("error: {msg}");
                return ExitCode::from(2);
            }
        };
        match output {
            Some(path) => {
                if let Err(e) = std::fs::write(path, text) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            None => print!("{text}"),
        }
        return ExitCode::SUCCESS;
    }

    let pretty = cli.pretty;
    match run(cli) {
        Ok(report) => {
            if pretty {
                print!("{}", report.to_table());
            } else {
                println!("{}", report.to_json());
            }
            if report.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
