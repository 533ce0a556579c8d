//! Argument parsing and command dispatch.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use antiramsey_core::classify::{classify_theorem8, theorem8_matches};
use antiramsey_core::construct::{book_colorings, example1_coloring, normal_coloring, turan_coloring};
use antiramsey_core::dirac::{dirac_extremal_graphs, dirac_graph_name, verify_theorem10_with};
use antiramsey_core::formulas::{ar_balanced, ar_complete, ar_kpartite, ar_multipartite_k3};
use antiramsey_core::oracle::{brute_force_ar_with, enumerate_extremal_with, OracleOptions, DEFAULT_EDGE_CAP};
use antiramsey_core::theorem6::{ar_via_theorem6_with, Theorem6Options};
use antiramsey_core::{ArResult, ColoredGraph, Graph, Method, PartiteSpec};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::format;
use crate::manifest;
use crate::parallel::Threads;
use crate::report::{Counters, RunReport};

#[derive(Debug, Parser)]
#[command(name = "antiramsey", version, about = "Exact anti-Ramsey numbers of complete multipartite graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print only the answer.
    #[arg(long, global = true)]
    pub quiet: bool,
    /// Print the full report as JSON.
    #[arg(long, global = true, conflicts_with = "quiet")]
    pub json: bool,
    /// Worker threads for searches.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute ar(K_{n1..nr}, K_k).
    Ar(ArArgs),
    /// Write a named construction in the interchange format.
    Construct(ConstructArgs),
    /// Enumerate extremal colorings up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Match a coloring file against the three extremal constructions.
    Classify(ClassifyArgs),
    /// Run a verification.
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Formula,
    Theorem6,
    Oracle,
}

#[derive(Debug, Args)]
pub struct ArArgs {
    /// Part sizes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// Write the witness coloring here.
    #[arg(long)]
    pub witness: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_EDGE_CAP)]
    pub edge_cap: usize,
    /// Accept r < k, where every coloring is free of K_k.
    #[arg(long)]
    pub degenerate_ok: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructName {
    Normal,
    Turan,
    Book,
    Example1,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub name: ConstructName,
    #[arg(long, value_delimiter = ',')]
    pub sizes: Option<Vec<usize>>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    /// Pages of the book.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub t1: Option<usize>,
    #[arg(long)]
    pub t2: Option<usize>,
    /// Keep one book coloring per isomorphism class.
    #[arg(long)]
    pub dedupe: bool,
    /// Output file, or directory for `book`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = DEFAULT_EDGE_CAP)]
    pub edge_cap: usize,
    /// Directory for the manifest and representatives.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub file: PathBuf,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// Extremal graphs without K_k minus an edge on n vertices.
    Dirac {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Optimal base colorings of K_r for the balanced host K_r^t.
    Theorem10 {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: usize,
    },
}

/// Exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VALIDATION: i32 = 2;
    pub const CAPACITY: i32 = 3;
    pub const MISMATCH: i32 = 4;
}

#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Capacity(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Validation(_) => exit::VALIDATION,
            CliError::Capacity(_) => exit::CAPACITY,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Capacity(m) => m,
        }
    }
}

impl From<antiramsey_core::Error> for CliError {
    fn from(e: antiramsey_core::Error) -> Self {
        if e.is_capacity() {
            CliError::Capacity(e.to_string())
        } else {
            CliError::Validation(e.to_string())
        }
    }
}

impl From<format::FormatError> for CliError {
    fn from(e: format::FormatError) -> Self {
        CliError::Validation(e.to_string())
    }
}

fn io_error(path: &Path, e: std::io::Error) -> CliError {
    CliError::Validation(format!("{}: {e}", path.display()))
}

fn need<T>(v: Option<T>, flag: &str, what: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Validation(format!("{what} needs --{flag}")))
}

type Outcome = Result<RunReport, CliError>;

/// Runs a parsed command. A report with `pass == Some(false)` maps to the
/// mismatch exit status.
pub fn execute(cli: &Cli, argv: Vec<String>) -> Outcome {
    let start = Instant::now();
    let exec = Threads::new(cli.jobs);
    let mut rep = RunReport {
        command: argv,
        ..RunReport::default()
    };
    match &cli.command {
        Command::Ar(a) => cmd_ar(a, &exec, &mut rep)?,
        Command::Construct(a) => cmd_construct(a, &mut rep)?,
        Command::Enumerate(a) => cmd_enumerate(a, &exec, &mut rep)?,
        Command::Classify(a) => cmd_classify(a, &mut rep)?,
        Command::Verify(Verify::Dirac { n, k }) => cmd_dirac(*n, *k, &mut rep)?,
        Command::Verify(Verify::Theorem10 { r, t, k }) => cmd_theorem10(*r, *t, *k, &exec, &mut rep)?,
    }
    rep.elapsed_secs = start.elapsed().as_secs_f64();
    Ok(rep)
}

/// The closed formula that covers `spec`, if any.
pub fn formula(spec: &PartiteSpec, k: usize) -> Option<antiramsey_core::Result<ArResult>> {
    let r = spec.r();
    if r == k {
        Some(ar_kpartite(spec, k))
    } else if spec.sizes().iter().all(|&s| s == 1) && r > k {
        Some(ar_complete(r, k))
    } else if k == 3 && r > 3 {
        Some(ar_multipartite_k3(spec))
    } else if spec.is_balanced() && k >= 4 && r > k {
        Some(ar_balanced(r, spec.sizes()[0], k))
    } else {
        None
    }
}

fn cmd_ar(a: &ArArgs, exec: &Threads, rep: &mut RunReport) -> Result<(), CliError> {
    let spec = PartiteSpec::new(a.sizes.clone())?;
    rep.input("sizes", &spec).input("k", a.k).input("method", format!("{:?}", a.method).to_lowercase());
    if a.k < 3 {
        return Err(CliError::Validation(format!("k must be at least 3, got {}", a.k)));
    }
    let host = Graph::host(&spec);
    let oracle_opts = OracleOptions {
        edge_cap: a.edge_cap,
        ..OracleOptions::default()
    };
    let t6_opts = Theorem6Options::default();

    let mut counters = None;
    let res = if spec.r() < a.k {
        if !a.degenerate_ok {
            return Err(CliError::Validation(format!(
                "r = {} < k = {}: the host has no K_{}; pass --degenerate-ok to get e(G)",
                spec.r(),
                a.k,
                a.k
            )));
        }
        ArResult {
            value: host.edge_count() as u64,
            method: Method::Degenerate,
            witness: Some(ColoredGraph::rainbow(host.clone())),
        }
    } else {
        match a.method {
            MethodArg::Formula => formula(&spec, a.k)
                .ok_or_else(|| CliError::Validation(format!("no closed formula covers {spec} with k = {}", a.k)))??,
            MethodArg::Theorem6 => {
                let run = ar_via_theorem6_with(&spec, a.k, &t6_opts, exec)?;
                counters = Some(run.stats.into());
                rep.value("seed", run.seed);
                run.result
            }
            MethodArg::Oracle => {
                let (res, stats) = brute_force_ar_with(&host, a.k, &oracle_opts, exec)?;
                counters = Some(stats.into());
                res
            }
            MethodArg::Auto => {
                if let Some(f) = formula(&spec, a.k) {
                    f?
                } else if spec.r() <= t6_opts.base_limit {
                    let run = ar_via_theorem6_with(&spec, a.k, &t6_opts, exec)?;
                    counters = Some(run.stats.into());
                    run.result
                } else {
                    let (res, stats) = brute_force_ar_with(&host, a.k, &oracle_opts, exec)?;
                    counters = Some(stats.into());
                    res
                }
            }
        }
    };
    rep.counters = counters;
    rep.value("value", res.value).label("method", res.method.tag());
    rep.answer = Some(res.value.to_string());

    if let Some(path) = &a.witness {
        let ok = res.method == Method::Degenerate || res.witness_ok(a.k);
        match &res.witness {
            Some(w) if ok => {
                format::write_coloring(path, w, Some(res.method.tag())).map_err(|e| io_error(path, e))?;
                rep.outputs.push(path.display().to_string());
            }
            _ => {
                rep.details.push("witness failed validation; not written".into());
                rep.pass = Some(false);
            }
        }
    }
    Ok(())
}

/// Checks a construction and writes it.
fn emit(
    rep: &mut RunReport,
    cg: &ColoredGraph,
    k: usize,
    expected: Option<u64>,
    name: &str,
    path: &Path,
) -> Result<bool, CliError> {
    let colors = cg.color_count() as u64;
    if cg.contains_rainbow_clique(k) {
        rep.details.push(format!("{}: contains a rainbow K_{k}", path.display()));
        return Ok(false);
    }
    if let Some(want) = expected.filter(|&w| w != colors) {
        rep.details.push(format!("{}: {colors} colors, expected {want}", path.display()));
        return Ok(false);
    }
    format::write_coloring(path, cg, Some(name)).map_err(|e| io_error(path, e))?;
    rep.outputs.push(path.display().to_string());
    Ok(true)
}

fn cmd_construct(a: &ConstructArgs, rep: &mut RunReport) -> Result<(), CliError> {
    let single = |default: &str| a.out.clone().unwrap_or_else(|| PathBuf::from(default));
    let ok = match a.name {
        ConstructName::Normal => {
            let spec = PartiteSpec::new(need(a.sizes.clone(), "sizes", "normal")?)?;
            let k = a.k.unwrap_or(spec.r());
            rep.input("sizes", &spec).input("k", k);
            let cg = normal_coloring(&spec, k)?;
            let want = ar_kpartite(&spec, k)?.value;
            rep.value("colors", cg.color_count() as u64);
            emit(rep, &cg, k, Some(want), "normal", &single("normal.json"))?
        }
        ConstructName::Turan => {
            let (r, t, k) = (need(a.r, "r", "turan")?, need(a.t, "t", "turan")?, need(a.k, "k", "turan")?);
            rep.input("r", r).input("t", t).input("k", k);
            let cg = turan_coloring(r, t, k)?;
            let want = ar_balanced(r, t, k)?.value;
            rep.value("colors", cg.color_count() as u64);
            emit(rep, &cg, k, Some(want), "turan", &single("turan.json"))?
        }
        ConstructName::Book => {
            let n = need(a.n, "n", "book")?;
            rep.input("n", n).input("dedupe", a.dedupe);
            let all = book_colorings(n, a.dedupe)?;
            let dir = a.out.clone().unwrap_or_else(|| PathBuf::from(format!("book_{n}")));
            rep.value("colors", n as u64 + 1).value("count", all.len() as u64);
            let mut ok = true;
            for (i, cg) in all.iter().enumerate() {
                ok &= emit(rep, cg, 3, Some(n as u64 + 1), "book", &dir.join(format!("book_{i:02}.json")))?;
            }
            ok
        }
        ConstructName::Example1 => {
            let (r, k) = (need(a.r, "r", "example1")?, need(a.k, "k", "example1")?);
            let (t1, t2) = (need(a.t1, "t1", "example1")?, need(a.t2, "t2", "example1")?);
            rep.input("r", r).input("k", k).input("t1", t1).input("t2", t2);
            let cg = example1_coloring(r, k, t1, t2)?;
            rep.value("colors", cg.color_count() as u64);
            emit(rep, &cg, k, None, "example1", &single("example1.json"))?
        }
    };
    rep.answer = rep.values.get("count").or(rep.values.get("colors")).map(u64::to_string);
    if !ok {
        rep.pass = Some(false);
    }
    Ok(())
}

fn cmd_enumerate(a: &EnumerateArgs, exec: &Threads, rep: &mut RunReport) -> Result<(), CliError> {
    let spec = PartiteSpec::new(a.sizes.clone())?;
    rep.input("sizes", &spec).input("k", a.k);
    let opts = OracleOptions {
        edge_cap: a.edge_cap,
        ..OracleOptions::default()
    };
    let (fam, stats) = enumerate_extremal_with(&Graph::host(&spec), a.k, &opts, exec)?;
    rep.counters = Some(Counters::from(stats));
    rep.value("ar_value", fam.ar_value)
        .value("count", fam.representatives.len() as u64)
        .label("complete", fam.complete.to_string());
    rep.answer = Some(fam.representatives.len().to_string());
    if let Some(dir) = &a.out {
        let path = manifest::write_family(dir, &fam).map_err(|e| io_error(dir, e))?;
        rep.outputs.push(path.display().to_string());
    }
    Ok(())
}

fn cmd_classify(a: &ClassifyArgs, rep: &mut RunReport) -> Result<(), CliError> {
    rep.input("file", a.file.display()).input("k", a.k);
    let cg = format::read_coloring(&a.file)?;
    let c = classify_theorem8(&cg, a.k)?;
    let m = theorem8_matches(&cg, a.k)?;
    rep.label("construction", c.tag()).value("colors", cg.color_count() as u64);
    for (i, hit) in m.iter().enumerate() {
        rep.details.push(format!("construction{}: {}", i + 1, if *hit { "match" } else { "no match" }));
    }
    rep.answer = Some(c.tag().into());
    Ok(())
}

fn edge_list(g: &Graph) -> String {
    g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

/// Names of the extremal graphs without `K_k − e` on `n` vertices.
pub fn expected_dirac_names(n: usize, k: usize) -> Vec<&'static str> {
    match (n, k) {
        (5, 4) => vec!["hourglass", "house", "turan"],
        (6, 4) => vec!["prism", "turan"],
        _ => vec!["turan"],
    }
}

fn cmd_dirac(n: usize, k: usize, rep: &mut RunReport) -> Result<(), CliError> {
    rep.input("n", n).input("k", k);
    let graphs = dirac_extremal_graphs(n, k)?;
    let mut names: Vec<&str> = Vec::new();
    for g in &graphs {
        let name = dirac_graph_name(g, k).unwrap_or("unnamed");
        names.push(name);
        rep.details.push(format!("{name}: {}", edge_list(g)));
    }
    names.sort_unstable();
    let expected = expected_dirac_names(n, k);
    let pass = names == expected;
    if !pass {
        rep.details.push(format!("expected {expected:?}, found {names:?}"));
    }
    rep.value("count", graphs.len() as u64)
        .value("edges", graphs.first().map_or(0, |g| g.edge_count() as u64));
    rep.pass = Some(pass);
    rep.answer = Some(graphs.len().to_string());
    Ok(())
}

fn cmd_theorem10(r: usize, t: usize, k: usize, exec: &Threads, rep: &mut RunReport) -> Result<(), CliError> {
    rep.input("r", r).input("t", t).input("k", k);
    let out = verify_theorem10_with(r, t, k, &Theorem6Options::default(), exec)?;
    rep.counters = Some(out.stats.into());
    rep.value("value", out.value)
        .value("expected", out.expected)
        .value("labelled", out.labelled_count as u64)
        .value("bases", out.bases.len() as u64);
    for b in &out.bases {
        rep.details.push(format!(
            "{}: rainbow {} [{}]",
            b.name.unwrap_or("unnamed"),
            edge_list(&b.rainbow_graph),
            if b.ok { "ok" } else { "unexpected shape" }
        ));
    }
    if out.value != out.expected {
        rep.details.push(format!("value {} differs from expected {}", out.value, out.expected));
    }
    let found: Vec<_> = out.bases.iter().filter_map(|b| b.name).collect();
    for name in out.dirac_family.iter().map(|n| n.unwrap_or("unnamed")) {
        if !found.contains(&name) {
            rep.details.push(format!("no base with a rainbow {name}"));
        }
    }
    rep.pass = Some(out.pass);
    rep.answer = Some(if out.pass { "pass" } else { "fail" }.into());
    Ok(())
}

/// Parses `argv`, runs, prints, and returns the exit status.
pub fn main_with(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { exit::VALIDATION } else { exit::OK };
        }
    };
    match execute(&cli, argv.into_iter().skip(1).collect()) {
        Ok(rep) => {
            let text = if cli.json {
                rep.to_json() + "\n"
            } else if cli.quiet {
                format!("{}\n", rep.answer.as_deref().unwrap_or(""))
            } else {
                rep.human()
            };
            // a closed pipe is not an error of the run
            let _ = std::io::stdout().write_all(text.as_bytes());
            if rep.pass == Some(false) {
                exit::MISMATCH
            } else {
                exit::OK
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}
