//! `nonsep`: generate wheels, elongated prisms, and maximal outerplanar
//! graphs; build and verify complete-minor certificates in their
//! complements; run the exact minor search; sweep theorem-scale checks; and
//! scan graph6 corpora.
//!
//! Exit codes: 0 all checks passed, 1 a requested check failed, 2 usage or
//! input error.

mod cache;
mod report;
mod theorems;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use nonsep_core::certificates::certify;
use nonsep_core::families::{classify, fixture, max_outerplanar, FIXTURE_NAMES};
use nonsep_core::search::{
    has_complete_minor, has_minor, hadwiger, ik_sufficient, k3311, IkStatus, SearchConfig,
};
use nonsep_core::{decode_graph6, encode_graph6, from_json, to_json, FamilySpec, Graph};
use rayon::prelude::*;
use report::Row;
use std::io::{BufRead, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "nonsep", version, about = "Non-separating planar graph workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family member, fixture, or format-converted graph
    Gen {
        #[command(subcommand)]
        target: Target,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::G6, global = true)]
        format: Format,
    },
    /// Build and verify the minor certificate for a family member
    Certify {
        #[command(subcommand)]
        target: Target,
    },
    /// Check one theorem-scale claim over a range and emit a report
    VerifyTheorem {
        /// One of: thm4.1 thm4.3 lem5.1 thm5.2 lem6.1 thm6.3 ex6.4 sec7
        id: String,
        /// Order range, e.g. 6..14 or 13,15
        #[arg(long)]
        range: Option<String>,
        #[command(flatten)]
        out: OutputOpts,
        /// Allow sweeps past the default order cap
        #[arg(long = "i-know")]
        i_know: bool,
    },
    /// Scan a file of graph6 lines ("-" for stdin), one report row each
    Scan {
        file: String,
        #[arg(long, value_enum)]
        check: Check,
        #[command(flatten)]
        out: OutputOpts,
        /// Search node budget per graph (0 = unbounded)
        #[arg(long, default_value_t = 0)]
        node_budget: u64,
    },
    /// Edge-count ledger for complements of wheels, one row per order
    Bounds {
        /// Order range, e.g. 6..100
        #[arg(long, default_value = "6..16")]
        n: String,
    },
}

#[derive(Args)]
struct OutputOpts {
    /// JSON lines instead of CSV
    #[arg(long)]
    json: bool,
    /// Byte-stable output (zeroes timing columns)
    #[arg(long)]
    deterministic: bool,
}

#[derive(Subcommand)]
enum Target {
    /// Wheel W_n (rim 1..n-1, hub n)
    Wheel { n: usize },
    /// Elongated prism by subdivision counts, e.g. 5,0,0
    Prism { subdivisions: String },
    /// Maximal outerplanar graph: a fan or an explicit chord set
    Outerplanar {
        /// Fan K_1 + P_{n-1} of the given order
        #[arg(long)]
        fan: Option<usize>,
        /// Polygon order (with --chords)
        #[arg(long)]
        n: Option<usize>,
        /// Chord list, e.g. 1-3,1-4,1-5
        #[arg(long)]
        chords: Option<String>,
    },
    /// Named fixture graph
    Fixture { name: String },
    /// Family spec as JSON ("-" reads stdin)
    Spec { json: String },
    /// Graph from a file in graph6 or JSON format ("-" reads stdin)
    Graph { input: String },
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    G6,
    Json,
}

#[derive(Copy, Clone, ValueEnum)]
enum Check {
    /// K_7 minor in each graph
    K7,
    /// K_{3,3,1,1} minor in each graph
    K3311,
    /// Exact Hadwiger number of each graph
    Hadwiger,
    /// Sufficient intrinsic-knottedness certificates in each complement
    ComplementIk,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen { target, format } => {
            let g = build_target(&target)?;
            match format {
                Format::G6 => println!("{}", encode_graph6(&g)?),
                Format::Json => println!("{}", to_json(&g)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify { target } => {
            let g = build_target(&target)?;
            let model = certify(&g).map_err(|e| anyhow!("cannot certify input: {e}"))?;
            println!("{}", model.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyTheorem { id, range, out, i_know } => {
            let cfg = SearchConfig::default();
            let report = theorems::run(&id, range.as_deref(), i_know, &cfg)?;
            let stdout = std::io::stdout();
            report.emit(&mut stdout.lock(), out.json, out.deterministic)?;
            Ok(if report.pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Scan { file, check, out, node_budget } => scan(&file, check, out, node_budget),
        Command::Bounds { n } => {
            let (lines, all) = theorems::bounds_rows(&n)?;
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            for line in lines {
                writeln!(lock, "{line}")?;
            }
            Ok(if all { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn parse_subdivisions(text: &str) -> Result<FamilySpec> {
    let parts: Vec<usize> = text
        .split(&[',', ' '][..])
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<usize>().context("subdivision counts must be integers"))
        .collect::<Result<_>>()?;
    if parts.len() != 3 {
        bail!("expected three subdivision counts, e.g. 5,0,0");
    }
    Ok(FamilySpec::prism(parts[0], parts[1], parts[2]))
}

fn parse_chords(text: &str) -> Result<Vec<(usize, usize)>> {
    text.split(',')
        .filter(|p| !p.is_empty())
        .map(|p| {
            let (u, v) = p
                .split_once('-')
                .ok_or_else(|| anyhow!("chord `{p}` should look like 1-3"))?;
            Ok((u.trim().parse()?, v.trim().parse()?))
        })
        .collect()
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?)
    }
}

/// Decodes a graph in either accepted format (JSON object or graph6 line).
fn decode_any(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        Ok(from_json(trimmed)?)
    } else {
        Ok(decode_graph6(trimmed)?)
    }
}

fn build_target(target: &Target) -> Result<Graph> {
    match target {
        Target::Wheel { n } => Ok(FamilySpec::wheel(*n).build()?),
        Target::Prism { subdivisions } => Ok(parse_subdivisions(subdivisions)?.build()?),
        Target::Outerplanar { fan, n, chords } => match (fan, n, chords) {
            (Some(n), None, None) => Ok(FamilySpec::fan(*n).build()?),
            (None, Some(n), Some(chords)) => Ok(max_outerplanar(*n, &parse_chords(chords)?)?),
            _ => bail!("use either --fan N or both --n N and --chords LIST"),
        },
        Target::Fixture { name } => {
            fixture(name).map_err(|_| anyhow!("unknown fixture `{name}`; available: {FIXTURE_NAMES:?}"))
        }
        Target::Spec { json } => {
            let text = if json == "-" { read_input("-")? } else { json.clone() };
            let spec: FamilySpec =
                serde_json::from_str(text.trim()).context("parsing family spec json")?;
            Ok(spec.build()?)
        }
        Target::Graph { input } => decode_any(&read_input(input)?),
    }
}

/// Streaming corpus scan: constant memory in the corpus length (bounded
/// batches), rows emitted in input order.
fn scan(file: &str, check: Check, out: OutputOpts, node_budget: u64) -> Result<ExitCode> {
    let cfg = SearchConfig {
        node_budget,
        ..SearchConfig::default()
    };
    let reader: Box<dyn BufRead> = if file == "-" {
        Box::new(std::io::BufReader::new(std::io::stdin()))
    } else {
        Box::new(std::io::BufReader::new(
            std::fs::File::open(file).with_context(|| format!("opening {file}"))?,
        ))
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    if !out.json {
        writeln!(lock, "{}", report::CSV_HEADER)?;
    }
    let mut all_pass = true;
    let mut any_malformed = false;
    let mut line_no = 0usize;
    let mut batch: Vec<(usize, String)> = Vec::new();
    let mut lines = reader.lines();
    const BATCH: usize = 256;
    loop {
        batch.clear();
        while batch.len() < BATCH {
            match lines.next() {
                Some(line) => {
                    line_no += 1;
                    let line = line?;
                    if line.trim().is_empty() {
                        continue;
                    }
                    batch.push((line_no, line));
                }
                None => break,
            }
        }
        if batch.is_empty() {
            break;
        }
        let rows: Vec<(Row, bool)> = batch
            .par_iter()
            .map(|(no, line)| scan_row(*no, line, check, &cfg))
            .collect();
        for (mut row, malformed) in rows {
            all_pass &= row.pass;
            any_malformed |= malformed;
            if malformed {
                eprintln!("line {}: malformed graph", row.id);
            }
            if out.deterministic {
                row.ms = 0;
            }
            writeln!(lock, "{}", if out.json { row.json() } else { row.csv() })?;
        }
    }
    let verdict = if all_pass && !any_malformed { "pass" } else { "fail" };
    if out.json {
        writeln!(
            lock,
            "{}",
            serde_json::json!({"summary": {"id": "scan", "range": check_name(check), "verdict": verdict}})
        )?;
    } else {
        writeln!(lock, "summary,scan,{},{}", check_name(check), verdict)?;
    }
    Ok(if any_malformed {
        ExitCode::from(2)
    } else if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn check_name(check: Check) -> &'static str {
    match check {
        Check::K7 => "k7",
        Check::K3311 => "k3311",
        Check::Hadwiger => "hadwiger",
        Check::ComplementIk => "complement-ik",
    }
}

fn scan_row(line_no: usize, line: &str, check: Check, cfg: &SearchConfig) -> (Row, bool) {
    let start = Instant::now();
    let mut row = Row {
        id: line_no.to_string(),
        ..Row::default()
    };
    let g = match decode_any(line) {
        Ok(g) => g,
        Err(_) => {
            row.family = "(malformed)".into();
            return (row, true);
        }
    };
    row.family = classify(&g).map(|s| s.to_string()).unwrap_or_default();
    row.order = Some(g.order());
    row.complement_size = Some(g.complement().size());
    match check {
        Check::K7 => {
            let r = has_complete_minor(&g, 7, cfg);
            row.certificate_target = "K7".into();
            row.certificate_verified = Some(r.outcome.is_found());
            row.nodes = r.nodes;
            row.pass = r.outcome.is_found();
        }
        Check::K3311 => {
            let r = has_minor(&g, &k3311(), cfg);
            row.certificate_target = "K3311".into();
            row.certificate_verified = Some(r.outcome.is_found());
            row.nodes = r.nodes;
            row.pass = r.outcome.is_found();
        }
        Check::Hadwiger => {
            let h = hadwiger(&g, cfg);
            row.hadwiger = Some(h.value);
            row.nodes = h.nodes;
            row.pass = h.exact;
        }
        Check::ComplementIk => {
            let comp = g.complement();
            let h = hadwiger(&comp, cfg);
            row.hadwiger = Some(h.value);
            let (status, nodes) = ik_sufficient(&comp, cfg);
            row.nodes = h.nodes + nodes;
            match status {
                IkStatus::Certified(model) => {
                    row.certificate_target = model.target_name();
                    row.certificate_verified = Some(true);
                    row.pass = h.exact;
                }
                IkStatus::NotCertified => {
                    row.certificate_target = "none".into();
                    row.certificate_verified = Some(false);
                    row.pass = false;
                }
                IkStatus::Inconclusive => {
                    row.certificate_target = "inconclusive".into();
                    row.certificate_verified = None;
                    row.pass = false;
                }
            }
        }
    }
    row.ms = start.elapsed().as_millis();
    (row, false)
}
