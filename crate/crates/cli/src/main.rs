mod output;

use std::fmt;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use extremal_core::bounds::{all_bounds, Extras};
use extremal_core::construct::{
    complete_bipartite, complete_graph, cycle, empty_graph, gstar, gstar_min_edges, harary, theta, FamilyParams,
    ThetaParams,
};
use extremal_core::format::{parse_graph6_lines, to_dot, to_graph6};
use extremal_core::invariants::InvariantReport;
use extremal_core::search::verify::{probe_conjecture, verify_theorem, ConjectureId, ParamGrid, Report, TheoremId};
use extremal_core::search::{find_extremal, Hypothesis, Objective, SearchOptions, SearchSpec};
use extremal_core::{independence_polynomial, Error, Graph};

use output::{opt, write_json, Format, Rows};

#[derive(Parser)]
#[command(name = "extremal", version, about = "Exact independent-set extremal problems on small graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a named graph or extremal construction.
    Construct(ConstructArgs),
    /// Chromatic number, connectivity, min degree, matching, components, criticality.
    Invariants {
        /// Test k-criticality against this k instead of the chromatic number.
        #[arg(long)]
        k: Option<usize>,
        /// graph6 file; stdin when absent.
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Independent-set counts.
    Count {
        /// Also print the polynomial in human form.
        #[arg(long)]
        poly: bool,
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Every closed-form bound over a parameter grid.
    Bounds {
        #[arg(long)]
        n: Span,
        #[arg(long)]
        k: Span,
        #[arg(long)]
        l: Span,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Exhaustive search for extremal graphs in one family.
    Search(SearchArgs),
    /// Check a theorem over a grid.
    Verify {
        #[arg(long)]
        theorem: TheoremId,
        #[arg(long)]
        n: Span,
        #[arg(long)]
        k: Option<Span>,
        #[arg(long)]
        l: Option<Span>,
        #[arg(long)]
        t: Option<Span>,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Look for counterexamples to a conjecture.
    Probe {
        #[arg(long)]
        conjecture: ConjectureId,
        #[arg(long)]
        n: Span,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Gstar,
    GstarMinedges,
    Harary,
    Theta,
    Cycle,
    Complete,
    Empty,
    Biclique,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
}

#[derive(Args)]
struct RunArgs {
    /// Worker threads for the search (1 runs sequentially).
    #[arg(long)]
    jobs: Option<usize>,
    /// Resumable progress file.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
}

impl RunArgs {
    fn options(&self) -> Result<SearchOptions> {
        if self.jobs == Some(0) {
            return Err(usage("--jobs must be at least 1"));
        }
        Ok(SearchOptions {
            jobs: self.jobs,
            checkpoint: self.checkpoint.clone(),
            ..Default::default()
        })
    }
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    l: usize,
    /// total, size:T or min-edges.
    #[arg(long)]
    objective: Objective,
    /// conn or mindeg.
    #[arg(long, default_value = "conn")]
    hypothesis: Hypothesis,
    /// Report one witness instead of every extremal graph.
    #[arg(long)]
    no_dedupe: bool,
    #[command(flatten)]
    run: RunArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

/// Inclusive grid values: `a`, `a..b` or a comma list of either.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Span(Vec<usize>);

impl std::str::FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut out = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let num = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad number {x:?} in {s:?}"));
            match part.split_once("..") {
                Some((a, b)) => {
                    let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
                    if a > b {
                        return Err(format!("empty range {part:?}"));
                    }
                    out.extend(a..=b);
                }
                None => out.push(num(part)?),
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(Span(out))
    }
}

impl Span {
    fn bounds(&self) -> std::ops::RangeInclusive<usize> {
        self.0[0]..=*self.0.last().expect("non-empty span")
    }
}

/// Bad parameters detected by the front end itself.
#[derive(Debug)]
struct Usage(String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn need(v: Option<usize>, name: &str, family: Family) -> Result<usize> {
    v.ok_or_else(|| usage(format!("--{name} is required for --family {family:?}").to_lowercase()))
}

fn read_graphs(file: &Option<PathBuf>) -> Result<Vec<Graph>> {
    let text = match file {
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(parse_graph6_lines(&text)?)
}

fn construct(a: &ConstructArgs) -> Result<Graph> {
    let f = a.family;
    let g = match f {
        Family::Gstar => gstar(&FamilyParams::gstar(need(a.n, "n", f)?, need(a.k, "k", f)?, need(a.l, "l", f)?)?)?,
        Family::GstarMinedges => {
            gstar_min_edges(&FamilyParams::min_edges(need(a.n, "n", f)?, need(a.k, "k", f)?, need(a.l, "l", f)?)?)?
        }
        Family::Harary => harary(need(a.n, "n", f)?, need(a.l, "l", f)?)?,
        Family::Theta => theta(&ThetaParams::new(need(a.a, "a", f)?, need(a.b, "b", f)?, need(a.c, "c", f)?)?)?,
        Family::Cycle => cycle(need(a.n, "n", f)?)?,
        Family::Complete => complete_graph(need(a.n, "n", f)?)?,
        Family::Empty => empty_graph(need(a.n, "n", f)?)?,
        Family::Biclique => complete_bipartite(need(a.a, "a", f)?, need(a.b, "b", f)?)?,
    };
    Ok(g)
}

fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.n(), "edges": g.edges(), "graph6": to_graph6(g) })
}

fn write_graph(out: &mut impl Write, g: &Graph, format: Format) -> Result<()> {
    match format {
        Format::Graph6 => writeln!(out, "{}", to_graph6(g))?,
        Format::Dot => write!(out, "{}", to_dot(g))?,
        Format::Json => write_json(out, &graph_json(g))?,
        Format::Csv | Format::Table => {
            let mut rows = Rows::new(vec!["u", "v"]);
            for (u, v) in g.edges() {
                rows.push(vec![u.to_string(), v.to_string()]);
            }
            rows.write(format, out)?;
        }
    }
    Ok(())
}

fn no_graph_format(format: Format, cmd: &str) -> Result<()> {
    if matches!(format, Format::Graph6 | Format::Dot) {
        return Err(usage(format!("{cmd} does not emit graphs; use json, csv or table")));
    }
    Ok(())
}

fn invariants(k: Option<usize>, file: &Option<PathBuf>, format: Format, out: &mut impl Write) -> Result<()> {
    no_graph_format(format, "invariants")?;
    let graphs = read_graphs(file)?;
    let mut rows = Rows::new(vec![
        "graph6",
        "chromatic",
        "connectivity",
        "min_degree",
        "max_matching",
        "components",
        "is_k_critical",
    ]);
    for g in &graphs {
        let r = InvariantReport::compute(g, k);
        if format == Format::Json {
            let mut v = serde_json::to_value(&r)?;
            v["graph6"] = to_graph6(g).into();
            v["n"] = g.n().into();
            writeln!(out, "{}", serde_json::to_string(&v)?)?;
        } else {
            rows.push(vec![
                to_graph6(g),
                r.chromatic.to_string(),
                r.connectivity.to_string(),
                r.min_degree.to_string(),
                r.max_matching.to_string(),
                r.components.to_string(),
                r.is_k_critical.to_string(),
            ]);
        }
    }
    if format != Format::Json {
        rows.write(format, out)?;
    }
    Ok(())
}

fn poly_string(coeffs: &[u64]) -> String {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(t, c)| match t {
            0 => c.to_string(),
            1 => format!("{c}x"),
            _ => format!("{c}x^{t}"),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn count(poly: bool, file: &Option<PathBuf>, format: Format, out: &mut impl Write) -> Result<()> {
    no_graph_format(format, "count")?;
    let graphs = read_graphs(file)?;
    let mut header = vec!["graph6", "n", "total", "coefficients"];
    if poly {
        header.push("polynomial");
    }
    let mut rows = Rows::new(header);
    for g in &graphs {
        let p = independence_polynomial(g);
        let coeffs: Vec<String> = p.coefficients().iter().map(u64::to_string).collect();
        if format == Format::Json {
            let mut v = json!({
                "graph6": to_graph6(g),
                "n": g.n(),
                "total": p.total().to_string(),
                "coefficients": coeffs,
            });
            if poly {
                v["polynomial"] = poly_string(p.coefficients()).into();
            }
            writeln!(out, "{}", serde_json::to_string(&v)?)?;
        } else {
            let mut row = vec![to_graph6(g), g.n().to_string(), p.total().to_string(), coeffs.join(" ")];
            if poly {
                row.push(poly_string(p.coefficients()));
            }
            rows.push(row);
        }
    }
    if format != Format::Json {
        rows.write(format, out)?;
    }
    Ok(())
}

fn bounds(n: &Span, k: &Span, l: &Span, extra: Extras, format: Format, out: &mut impl Write) -> Result<()> {
    no_graph_format(format, "bounds")?;
    let mut points = Vec::new();
    let mut rows = Rows::new(vec!["n", "k", "l", "name", "value", "regime_ok", "note"]);
    for &n in &n.0 {
        for &k in &k.0 {
            for &l in &l.0 {
                let reports = all_bounds(n, k, l, extra);
                for b in &reports {
                    rows.push(vec![
                        n.to_string(),
                        k.to_string(),
                        l.to_string(),
                        b.name.to_string(),
                        opt(b.value.as_ref()),
                        b.regime_ok.to_string(),
                        b.note.clone().unwrap_or_default(),
                    ]);
                }
                points.push(json!({ "n": n, "k": k, "l": l, "bounds": reports }));
            }
        }
    }
    match format {
        Format::Json => write_json(out, &Value::Array(points)),
        _ => rows.write(format, out),
    }
}

fn search(a: &SearchArgs, out: &mut impl Write) -> Result<()> {
    let spec = SearchSpec::new(a.n, a.k, a.l, a.objective, a.hypothesis)?.with_dedupe(!a.no_dedupe);
    let r = find_extremal(&spec, &a.run.options()?)?;
    match a.format {
        Format::Json => write_json(out, &r.to_json())?,
        Format::Graph6 => {
            for e in &r.extremal {
                writeln!(out, "{}", to_graph6(&e.graph))?;
            }
        }
        Format::Dot => {
            for e in &r.extremal {
                write!(out, "{}", to_dot(&e.graph))?;
            }
        }
        Format::Csv | Format::Table => {
            let mut rows = Rows::new(vec!["best_value", "extremal", "examined", "pruned", "verdict", "bound_name", "bound_value"]);
            let j = r.to_json();
            let graphs: Vec<String> = r.extremal.iter().map(|e| to_graph6(&e.graph)).collect();
            rows.push(vec![
                opt(r.best_value.as_ref()),
                graphs.join(" "),
                r.examined.to_string(),
                r.pruned.to_string(),
                j["verdict"].as_str().unwrap_or_default().to_string(),
                opt(r.bound_name),
                opt(r.bound_value.as_ref()),
            ]);
            rows.write(a.format, out)?;
        }
    }
    Ok(())
}

fn write_report(report: &Report, format: Format, out: &mut impl Write) -> Result<()> {
    no_graph_format(format, "verify/probe")?;
    if format == Format::Json {
        return write_json(out, &report.to_json());
    }
    let mut rows = Rows::new(vec![
        "id", "n", "k", "l", "t", "check", "bound_name", "expected", "observed", "verdict", "witness", "note",
    ]);
    for r in &report.rows {
        rows.push(vec![
            r.id.clone(),
            r.n.to_string(),
            r.k.to_string(),
            r.l.to_string(),
            opt(r.t),
            r.check.clone(),
            opt(r.bound_name.as_ref()),
            opt(r.expected.as_ref()),
            opt(r.observed.as_ref()),
            r.verdict.to_string(),
            opt(r.witness.as_ref()),
            r.note.clone().unwrap_or_default(),
        ]);
    }
    rows.write(format, out)
}

/// Runs one command; `Ok(true)` means a counterexample was found.
fn run(cli: Cli) -> Result<bool> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match &cli.cmd {
        Cmd::Construct(a) => write_graph(&mut out, &construct(a)?, a.format)?,
        Cmd::Invariants { k, file, format } => invariants(*k, file, *format, &mut out)?,
        Cmd::Count { poly, file, format } => count(*poly, file, *format, &mut out)?,
        Cmd::Bounds { n, k, l, t, d, m, format } => {
            bounds(n, k, l, Extras { t: *t, d: *d, m: *m }, *format, &mut out)?
        }
        Cmd::Search(a) => search(a, &mut out)?,
        Cmd::Verify { theorem, n, k, l, t, run, format } => {
            let grid = ParamGrid {
                k: k.as_ref().map(|s| s.0.clone()),
                l: l.as_ref().map(|s| s.0.clone()),
                t: t.as_ref().map(|s| s.0.clone()),
            };
            let report = verify_theorem(*theorem, n.bounds(), &grid, &run.options()?)?;
            write_report(&report, *format, &mut out)?;
            return Ok(report.counterexamples() > 0);
        }
        Cmd::Probe { conjecture, n, run, format } => {
            let report = probe_conjecture(*conjecture, n.bounds(), &run.options()?)?;
            write_report(&report, *format, &mut out)?;
            return Ok(report.counterexamples() > 0);
        }
    }
    Ok(false)
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if e.is::<Usage>() {
        return 2;
    }
    match e.downcast_ref::<Error>() {
        Some(Error::Checkpoint(_) | Error::Internal(_)) | None => 1,
        Some(_) => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => {
            eprintln!("counterexample found");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
