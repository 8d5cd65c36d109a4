use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use edgefan::chromatic::{self, SolverConfig, SolverError};
use edgefan::enumerate::{self, MAX_ENUMERATION_ORDER};
use edgefan::fan::{
    self, extend_multifan, fan_order, grow_multifan, render_extended, render_fan, render_order, render_stopping,
    stopping_colors, FanError, FanSearchConfig, DEFAULT_SEED,
};
use edgefan::verify::{self, parse_checks, VerifyConfig};
use edgefan::{make_family, parse_graph6, write_graph6, Graph, PartialColoring};

const INPUT_ERROR: u8 = 1;
const UNDECIDED: u8 = 2;
const CHECK_FAILED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "edgefan",
    version,
    about = "Edge-coloring fans, chromatic index, and lemma checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Search node budget; scientific notation is accepted.
    #[arg(long, value_parser = parse_count, default_value = "1e8")]
    budget: u64,
    /// Seed for randomized fan search.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads (defaults to available parallelism).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Degree, core, chromatic index, class, criticality and overfullness.
    Analyze {
        /// graph6 strings or family specs such as `cycle:5`.
        graphs: Vec<String>,
        /// File with one graph per line (`-` for stdin).
        #[arg(long)]
        input: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Run lemma checks over a corpus and write a JSONL report.
    Verify {
        /// Comma-separated: vf1, vf2, val, extend, lemma1, theorem, edgecount, or `all`.
        #[arg(long)]
        checks: String,
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Report path.
        #[arg(long, default_value = "report.jsonl")]
        out: String,
        #[command(flatten)]
        common: Common,
    },
    /// Classify every graph of a corpus and check that overfull graphs are class 2.
    Scan {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Write one JSON line per graph here.
        #[arg(long)]
        out: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Show the multi-fan, fan order, stopping colors and extended fans.
    Fan {
        /// graph6 string or family spec.
        #[arg(long)]
        input: String,
        /// Edge as `u,v`.
        #[arg(long, value_parser = parse_edge)]
        edge: (usize, usize),
        /// Fan center, an endpoint of the edge (defaults to the first).
        #[arg(long)]
        center: Option<usize>,
        /// Coloring dump file, or `search` for a maximum fan over all colorings.
        #[arg(long, default_value = "search")]
        coloring: String,
        /// Palette size for dumps without a `palette:` line (defaults to Δ).
        #[arg(long)]
        palette: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Write a graph6 corpus.
    Gen {
        /// `n<=K`, `n=K`, `n<K`, or a family spec.
        #[arg(long = "gen")]
        spec: String,
        /// Include disconnected graphs.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Args, Clone)]
struct CorpusArgs {
    /// graph6 corpus file, one graph per line.
    #[arg(long, conflicts_with = "gen")]
    corpus: Option<String>,
    /// Generated corpus: `n<=K`, `n=K`, `n<K`, or family specs joined by `;`.
    #[arg(long)]
    gen: Option<String>,
}

fn parse_count(s: &str) -> Result<u64, String> {
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v >= 0.0 && v.fract() == 0.0 && v <= u64::MAX as f64 => Ok(v as u64),
        _ => Err(format!("`{s}` is not a nonnegative integer count")),
    }
}

fn parse_edge(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `u,v`, got `{s}`"))?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad vertex `{x}`"));
    Ok((p(a)?, p(b)?))
}

struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: INPUT_ERROR,
        message: message.into(),
    }
}

fn parse_graph(text: &str) -> Result<Graph, String> {
    let t = text.trim();
    if let Ok(g) = make_family(t) {
        return Ok(g);
    }
    parse_graph6(t.as_bytes()).map_err(|e| match e.offset() {
        Some(off) => format!("cannot parse `{t}` at byte {off}: {e}"),
        None => format!("cannot parse `{t}`: {e}"),
    })
}

fn read_source(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input_error(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| input_error(format!("{path}: {e}")))
    }
}

/// One `;`-separated part of a generator spec: an order range or a family.
enum GenPart {
    Orders { lo: usize, hi: usize },
    Family(String),
}

fn parse_gen_part(part: &str) -> Result<GenPart, Failure> {
    let order = |rest: &str| {
        rest.parse::<usize>()
            .map_err(|_| input_error(format!("bad generator `{part}`")))
    };
    let gen = if let Some(rest) = part.strip_prefix("n<=") {
        GenPart::Orders {
            lo: 1,
            hi: order(rest)?,
        }
    } else if let Some(rest) = part.strip_prefix("n<") {
        GenPart::Orders {
            lo: 1,
            hi: order(rest)?.saturating_sub(1),
        }
    } else if let Some(rest) = part.strip_prefix("n=") {
        let n = order(rest)?;
        GenPart::Orders { lo: n, hi: n }
    } else {
        GenPart::Family(part.to_string())
    };
    if let GenPart::Orders { hi, .. } = gen {
        if hi > MAX_ENUMERATION_ORDER {
            return Err(input_error(format!(
                "enumeration is capped at n = {MAX_ENUMERATION_ORDER}"
            )));
        }
    }
    Ok(gen)
}

fn generate(spec: &str, connected_only: bool) -> Result<Vec<Graph>, Failure> {
    let s: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    for part in s.split(';').filter(|x| !x.is_empty()) {
        match parse_gen_part(part)? {
            GenPart::Orders { lo, hi } => {
                for n in lo..=hi {
                    let level = enumerate::enumerate_all(n).map_err(|e| input_error(e.to_string()))?;
                    out.extend(level.filter(|g| !connected_only || g.is_connected()));
                }
            }
            GenPart::Family(f) => out.push(make_family(&f).map_err(|e| input_error(format!("`{f}`: {e}")))?),
        }
    }
    if out.is_empty() {
        return Err(input_error(format!("generator `{spec}` produced no graphs")));
    }
    Ok(out)
}

fn load_corpus(args: &CorpusArgs) -> Result<(String, Vec<verify::CorpusItem>), Failure> {
    match (&args.corpus, &args.gen) {
        (Some(path), None) => Ok((path.clone(), verify::read_corpus(&read_source(path)?))),
        (None, Some(spec)) => Ok((spec.clone(), generate(spec, true)?.into_iter().map(Ok).collect())),
        _ => Err(input_error("give exactly one of --corpus or --gen")),
    }
}

fn set_jobs(jobs: Option<usize>) {
    if let Some(n) = jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn analyze(graphs: Vec<String>, input: Option<String>, common: Common) -> Result<u8, Failure> {
    set_jobs(common.jobs);
    let mut lines = graphs;
    if let Some(path) = &input {
        lines.extend(
            read_source(path)?
                .lines()
                .filter(|l| !l.trim().is_empty())
                .map(str::to_string),
        );
    }
    if lines.is_empty() {
        lines.extend(
            read_source("-")?
                .lines()
                .filter(|l| !l.trim().is_empty())
                .map(str::to_string),
        );
    }
    if lines.is_empty() {
        return Err(input_error("no graphs given"));
    }
    let cfg = SolverConfig { budget: common.budget };
    let mut code = 0;
    for line in &lines {
        let g = parse_graph(line).map_err(input_error)?;
        print!("{}", analyze_one(line.trim(), &g, &cfg, &mut code));
    }
    Ok(code)
}

fn analyze_one(label: &str, g: &Graph, cfg: &SolverConfig, code: &mut u8) -> String {
    let mut out = format!("graph {label}\n  n={} m={}\n", g.n(), g.edge_count());
    if g.n() == 0 {
        return out;
    }
    let core = g.core_info().expect("graph is nonempty");
    out.push_str(&format!("  Δ={} δ(G_Δ)={}\n", g.max_degree(), core.core_min_degree));
    out.push_str(&format!(
        "  light vertices: {:?}\n",
        g.light_vertices().expect("graph is nonempty")
    ));
    out.push_str(&format!("  overfull={}\n", g.is_overfull().expect("graph is nonempty")));
    match chromatic::chromatic_index(g, cfg) {
        Ok(cert) => {
            let class = if g.edge_count() > 0 && cert.chi_prime == g.max_degree() + 1 {
                2
            } else {
                1
            };
            out.push_str(&format!("  χ′={} class={class}\n", cert.chi_prime));
            match chromatic::is_critical(g, cfg) {
                Ok(c) => out.push_str(&format!("  critical={c}\n")),
                Err(e) => {
                    *code = UNDECIDED;
                    out.push_str(&format!("  critical=undecided ({e})\n"));
                }
            }
        }
        Err(e) => {
            *code = UNDECIDED;
            out.push_str(&format!("  χ′=undecided ({e})\n"));
        }
    }
    out
}

fn run_verify(checks: &str, corpus: CorpusArgs, out: &str, common: Common) -> Result<u8, Failure> {
    set_jobs(common.jobs);
    let checks = parse_checks(checks).map_err(|e| input_error(e.to_string()))?;
    let (id, items) = load_corpus(&corpus)?;
    let config = VerifyConfig::with_budget(common.budget).with_seed(common.seed);
    let report = verify::scan(&id, items, &checks, &config);
    fs::write(out, report.to_jsonl()).map_err(|e| input_error(format!("{out}: {e}")))?;
    print!("{}", report.summary());
    for e in &report.input_errors {
        println!("input error at line {}: {}", e.line, e.message);
    }
    let fails = report.failures();
    println!("report written to {out}; {fails} fail(s)");
    Ok(if fails > 0 { CHECK_FAILED } else { 0 })
}

fn run_scan(corpus: CorpusArgs, out: Option<String>, common: Common) -> Result<u8, Failure> {
    use rayon::prelude::*;
    set_jobs(common.jobs);
    let (id, items) = load_corpus(&corpus)?;
    let cfg = SolverConfig { budget: common.budget };
    let rows: Vec<Result<(String, bool, bool, bool), String>> = items
        .into_par_iter()
        .map(|item| {
            let g = item.map_err(|e| format!("input error at line {}: {}", e.line, e.message))?;
            let g6 = write_graph6(&g).unwrap_or_default();
            let overfull = g.n() > 0 && g.is_overfull().unwrap_or(false);
            let cert = chromatic::chromatic_index(&g, &cfg).map_err(|e| format!("{g6}: {e}"))?;
            let class2 = g.edge_count() > 0 && cert.chi_prime == g.max_degree() + 1;
            let critical = class2 && chromatic::is_critical(&g, &cfg).map_err(|e| format!("{g6}: {e}"))?;
            let line = serde_json::json!({
                "graph6": g6,
                "n": g.n(),
                "m": g.edge_count(),
                "delta": g.max_degree(),
                "chi_prime": cert.chi_prime,
                "class": if class2 { 2 } else { 1 },
                "critical": critical,
                "overfull": overfull,
            })
            .to_string();
            Ok((line, class2, critical, overfull))
        })
        .collect();
    let (mut graphs, mut class2, mut critical, mut overfull, mut violations, mut errors) = (0, 0, 0, 0, 0, 0);
    let mut lines = String::new();
    let mut undecided = false;
    for row in rows {
        match row {
            Ok((line, c2, crit, of)) => {
                graphs += 1;
                class2 += usize::from(c2);
                critical += usize::from(crit);
                overfull += usize::from(of);
                violations += usize::from(of && !c2);
                lines.push_str(&line);
                lines.push('\n');
            }
            Err(msg) => {
                errors += 1;
                undecided |= msg.contains("undecided");
                eprintln!("{msg}");
            }
        }
    }
    if let Some(path) = &out {
        fs::write(path, lines).map_err(|e| input_error(format!("{path}: {e}")))?;
    }
    println!("corpus {id}");
    println!("graphs {graphs}  class2 {class2}  critical {critical}  overfull {overfull}");
    println!("overfull but class 1: {violations}  errors {errors}");
    Ok(if violations > 0 {
        CHECK_FAILED
    } else if undecided {
        UNDECIDED
    } else if errors > 0 {
        INPUT_ERROR
    } else {
        0
    })
}

fn run_fan(
    input: &str,
    (u, v): (usize, usize),
    center: Option<usize>,
    coloring: &str,
    palette: Option<usize>,
    common: Common,
) -> Result<u8, Failure> {
    let g = parse_graph(input).map_err(input_error)?;
    let e = g
        .edge_id(u, v)
        .ok_or_else(|| input_error(format!("{u}-{v} is not an edge")))?;
    let r = center.unwrap_or(u);
    if r != u && r != v {
        return Err(input_error(format!("center {r} is not an endpoint of {u}-{v}")));
    }
    let solver = SolverConfig { budget: common.budget };
    let host = Arc::new(g.clone());
    let c = if coloring == "search" {
        let cfg = FanSearchConfig {
            solver,
            seed: common.seed,
            ..FanSearchConfig::default()
        };
        match fan::maximum_multifan(&g, e, r, &cfg) {
            Ok(best) => {
                println!("seed {}", common.seed);
                println!(
                    "maximum fan size {} ({:?}, {} orbits, {} maximizers)",
                    best.fan.size(),
                    best.certainty,
                    best.orbits,
                    best.maximizers.len()
                );
                best.coloring
            }
            Err(FanError::NotCritical { .. }) => {
                println!("no Δ-coloring of G−e needed; edge not critical");
                return Ok(UNDECIDED);
            }
            Err(FanError::Solver(e @ SolverError::Undecided { .. })) => {
                println!("{e}");
                return Ok(UNDECIDED);
            }
            Err(e) => return Err(input_error(e.to_string())),
        }
    } else {
        let text = read_source(coloring)?;
        let c = PartialColoring::from_dump(host, &text, Some(palette.unwrap_or(g.max_degree())))
            .map_err(|e| input_error(e.to_string()))?;
        if c.uncolored_edge() != Some(e) {
            return Err(input_error(format!(
                "the coloring must leave exactly {u}-{v} uncolored"
            )));
        }
        c
    };
    print!(
        "{}",
        c.to_dump()
            .lines()
            .map(|l| format!("coloring {l}\n"))
            .collect::<String>()
    );
    let fan = grow_multifan(&c, r).map_err(|e| input_error(e.to_string()))?;
    print!("{}", render_fan(&fan));
    match fan_order(&fan) {
        Ok(order) => print!("{}", render_order(&order)),
        Err(e) => println!("order unavailable: {e}"),
    }
    let stopping = stopping_colors(&fan);
    print!("{}", render_stopping(&stopping));
    for s in fan.fan_vertices() {
        for beta in c.missing(s).intersection(stopping.all).iter() {
            match extend_multifan(&fan, s, beta) {
                Ok(ext) => print!("{}", render_extended(&ext)),
                Err(e) => println!("extended pivot={s} beta={beta}: {e}"),
            }
        }
    }
    Ok(0)
}

fn run_gen(spec: &str, all: bool, out: Option<String>) -> Result<u8, Failure> {
    let graphs = generate(spec, !all)?;
    let mut text = String::new();
    for g in &graphs {
        text.push_str(&write_graph6(g).map_err(|e| input_error(e.to_string()))?);
        text.push('\n');
    }
    match out {
        Some(path) => {
            fs::write(&path, text).map_err(|e| input_error(format!("{path}: {e}")))?;
            println!("{} graphs written to {path}", graphs.len());
        }
        None => print!("{text}"),
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INPUT_ERROR } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Analyze { graphs, input, common } => analyze(graphs, input, common),
        Command::Verify {
            checks,
            corpus,
            out,
            common,
        } => run_verify(&checks, corpus, &out, common),
        Command::Scan { corpus, out, common } => run_scan(corpus, out, common),
        Command::Fan {
            input,
            edge,
            center,
            coloring,
            palette,
            common,
        } => run_fan(&input, edge, center, &coloring, palette, common),
        Command::Gen { spec, all, out } => run_gen(&spec, all, out),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
