//! `bicover`: build, check, bound and search biclique coverings of `K_n`.
//!
//! Exit status: 0 on success, 1 when a covering is incomplete or breaks the
//! requested component bound, 2 on bad input.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use biclique_cover::{
    balanced_cover, bitstring_cover, bounds_report, is_complete_direct, is_complete_matrix,
    min_cover, partition_cover, read_covering, size_sum_certificate, write_covering, BoundsReport,
    Covering, SearchConfig,
};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "bicover",
    version,
    about = "Biclique edge-coverings of complete graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Bitstring,
    Balanced,
    Partition,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Bitstring => "bitstring",
            Method::Balanced => "balanced",
            Method::Partition => "partition",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a covering, verify it, and write it out.
    Construct {
        #[arg(long)]
        n: u32,
        /// Component bound (partition); must be n/2 for balanced.
        #[arg(long)]
        x: Option<u32>,
        #[arg(long, value_enum)]
        method: Method,
        /// Covering file to write; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a covering file for completeness and print its certificate.
    Verify {
        path: PathBuf,
        /// Also require every component to have at most this many vertices.
        #[arg(long)]
        x: Option<u32>,
    },
    /// Print the lower and upper bounds for (n, x).
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        x: u64,
        /// Also write the report as a CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Compute an exact minimum covering by branch and bound.
    Search {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        x: Option<u32>,
        #[arg(long)]
        node_limit: Option<u64>,
        /// Complete covering file used as the starting incumbent.
        #[arg(long)]
        seed: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct, verify and bound every (n, x) pair; emit CSV.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<u64>,
        /// CSV output path; stdout when omitted.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Evaluate the formulas only, without building coverings.
        #[arg(long)]
        bounds_only: bool,
    },
}

enum Failure {
    /// Exit 1: the covering is incomplete or violates the bound.
    Rejected(String),
    /// Exit 2: unusable input.
    Input(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct { n, x, method, out } => construct(n, x, method, out.as_deref()),
        Command::Verify { path, x } => verify(&path, x),
        Command::Bounds { n, x, csv } => bounds(n, x, csv.as_deref()),
        Command::Search {
            n,
            x,
            node_limit,
            seed,
            out,
        } => search(n, x, node_limit, seed.as_deref(), out.as_deref()),
        Command::Bench {
            n,
            x,
            csv,
            bounds_only,
        } => bench(&n, &x, csv.as_deref(), bounds_only),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rejected(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn build(n: u32, x: Option<u32>, method: Method) -> anyhow::Result<Covering> {
    let cov = match method {
        Method::Bitstring => bitstring_cover(n)?,
        Method::Balanced => {
            if !n.is_multiple_of(2) {
                bail!("method balanced needs an even n, got n = {n}");
            }
            if let Some(x) = x.filter(|&x| 2 * x as u64 != n as u64) {
                bail!("method balanced needs x = n/2 = {}, got x = {x}", n / 2);
            }
            balanced_cover(n / 2)?
        }
        Method::Partition => {
            let x = x.ok_or_else(|| anyhow!("method partition needs --x"))?;
            partition_cover(n, x)?
        }
    };
    Ok(cov)
}

/// Verification gate for everything this tool writes.
fn self_check(cov: &Covering, x: Option<u32>) -> anyhow::Result<()> {
    if let Some((u, v)) = is_complete_direct(cov)?.witness() {
        bail!("internal error: constructed covering misses {{{u},{v}}}");
    }
    if !is_complete_matrix(cov)?.is_complete() {
        bail!("internal error: verifiers disagree");
    }
    if let Some(x) = x.filter(|&x| cov.max_component_size() > x as usize) {
        bail!(
            "internal error: component size {} above {x}",
            cov.max_component_size()
        );
    }
    Ok(())
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn construct(n: u32, x: Option<u32>, method: Method, out: Option<&Path>) -> CmdResult {
    let cov = build(n, x, method)?;
    let bound = if let Method::Partition = method {
        x
    } else {
        None
    };
    self_check(&cov, bound).map_err(|e| Failure::Rejected(format!("{e:#}")))?;
    let text = write_covering(&cov).map_err(anyhow::Error::from)?;
    emit(&text, out)?;
    let summary = format!(
        "method: {}  n: {}  bicliques: {}  max component: {}  complete: true",
        method.name(),
        cov.n,
        cov.len(),
        cov.max_component_size()
    );
    // Keep stdout clean when it carries the covering itself.
    if out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(())
}

fn verify(path: &Path, x: Option<u32>) -> CmdResult {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let cov =
        read_covering(&bytes).map_err(|e| Failure::Input(anyhow!("{}: {e}", path.display())))?;
    let direct = is_complete_direct(&cov).map_err(anyhow::Error::from)?;
    let matrix = is_complete_matrix(&cov).map_err(anyhow::Error::from)?;
    let cert = size_sum_certificate(&cov).map_err(anyhow::Error::from)?;

    let verdict = |c: biclique_cover::Coverage| match c.witness() {
        None => "complete".to_string(),
        Some((u, v)) => format!("incomplete, uncovered pair {{{u},{v}}}"),
    };
    println!("n: {}", cov.n);
    println!("direct check: {}", verdict(direct));
    println!("matrix check: {}", verdict(matrix));
    println!("c: {}", cert.c);
    println!("size sum: {}", cert.size_sum);
    println!("threshold: {}", cert.threshold);
    println!("size sum >= threshold: {}", cert.size_bound_holds());
    println!("sum of 2^s_v: {}", cert.copies_sum);
    println!("2^c: {}", cert.holes);
    println!("pigeonhole holds: {}", cert.pigeonhole_holds());
    println!("max component: {}", cov.max_component_size());

    if direct.is_complete() != matrix.is_complete() {
        return Err(Failure::Rejected(
            "internal error: verifiers disagree".into(),
        ));
    }
    if let Some((u, v)) = direct.witness() {
        return Err(Failure::Rejected(format!(
            "incomplete: pair {{{u},{v}}} is not covered"
        )));
    }
    if let Some(x) = x {
        let within = cov.max_component_size() <= x as usize;
        println!("max component <= {x}: {within}");
        if !within {
            return Err(Failure::Rejected(format!(
                "component bound violated: {} > {x}",
                cov.max_component_size()
            )));
        }
    }
    Ok(())
}

fn print_bounds(r: &BoundsReport) {
    let rows: [(&str, String); 9] = [
        ("n", r.n.to_string()),
        ("x", r.x.to_string()),
        ("lower (edges)", r.lower_edges.to_string()),
        ("lower (size, n·log2 n / 2x)", r.lower_size.to_string()),
        (
            "lower (size, n·log2 2x / 2x)",
            r.lower_size_stated.to_string(),
        ),
        ("lower (combined)", r.lower_combined.to_string()),
        ("upper (formula)", r.upper_formula.to_string()),
        (
            "achieved",
            r.achieved
                .map(|a| a.to_string())
                .unwrap_or_else(|| "-".into()),
        ),
        (
            "upper / lower",
            format!("{} ({})", r.ratio_decimal(), r.ratio_exact()),
        ),
    ];
    for (label, value) in rows {
        println!("{label:<30} {value}");
    }
}

fn bounds(n: u64, x: u64, csv: Option<&Path>) -> CmdResult {
    let r = bounds_report(n, x, None).map_err(anyhow::Error::from)?;
    print_bounds(&r);
    if let Some(path) = csv {
        let mut w =
            csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
        w.write_record(BoundsReport::CSV_HEADER)
            .map_err(anyhow::Error::from)?;
        w.write_record(r.csv_record())
            .map_err(anyhow::Error::from)?;
        w.flush().map_err(anyhow::Error::from)?;
    }
    Ok(())
}

fn search(
    n: u32,
    x: Option<u32>,
    node_limit: Option<u64>,
    seed: Option<&Path>,
    out: Option<&Path>,
) -> CmdResult {
    let mut config = SearchConfig::new(n);
    config.x_max = x;
    config.node_limit = node_limit;
    if let Some(path) = seed {
        let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        let cov = read_covering(&bytes).map_err(|e| anyhow!("{}: {e}", path.display()))?;
        config.upper_seed = Some(cov);
    }
    let r = min_cover(&config).map_err(anyhow::Error::from)?;
    self_check(&r.optimal, x).map_err(|e| Failure::Rejected(format!("{e:#}")))?;
    let text = write_covering(&r.optimal).map_err(anyhow::Error::from)?;
    emit(&text, out)?;
    let summary = format!(
        "min_size: {}  nodes: {}  proven_optimal: {}",
        r.min_size, r.nodes_explored, r.proven_optimal
    );
    if out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(())
}

fn bench(ns: &[u64], xs: &[u64], csv: Option<&Path>, bounds_only: bool) -> CmdResult {
    let mut header: Vec<&str> = BoundsReport::CSV_HEADER.to_vec();
    header.extend(["method", "time_ms"]);
    let sink: Box<dyn Write> = match csv {
        Some(path) => {
            Box::new(fs::File::create(path).with_context(|| format!("writing {}", path.display()))?)
        }
        None => Box::new(std::io::stdout()),
    };
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(&header).map_err(anyhow::Error::from)?;

    let mut widest: Option<BoundsReport> = None;
    for &n in ns {
        for &x in xs {
            let started = Instant::now();
            let achieved = if bounds_only {
                None
            } else {
                let (n32, x32) = (
                    u32::try_from(n).context("n too large to construct; use --bounds-only")?,
                    u32::try_from(x).context("x too large to construct; use --bounds-only")?,
                );
                let cov = partition_cover(n32, x32).map_err(anyhow::Error::from)?;
                self_check(&cov, Some(x32)).map_err(|e| Failure::Rejected(format!("{e:#}")))?;
                Some(cov.len() as u64)
            };
            let r = bounds_report(n, x, achieved)
                .map_err(|e| Failure::Rejected(format!("internal error: {e}")))?;
            if !r.sandwiched() {
                return Err(Failure::Rejected(format!(
                    "internal error: n = {n}, x = {x}: achieved above the upper formula"
                )));
            }
            let elapsed = started.elapsed().as_secs_f64() * 1e3;
            let mut record = r.csv_record();
            record.push("partition".into());
            record.push(format!("{elapsed:.3}"));
            w.write_record(&record).map_err(anyhow::Error::from)?;

            if r.ratio.is_some() && widest.as_ref().is_none_or(|b| r.ratio > b.ratio) {
                widest = Some(r);
            }
        }
    }
    w.flush().map_err(anyhow::Error::from)?;
    match widest {
        Some(r) => eprintln!(
            "max upper/lower ratio: {} ({}) at n = {}, x = {}",
            r.ratio_decimal(),
            r.ratio_exact(),
            r.n,
            r.x
        ),
        None => eprintln!("max upper/lower ratio: undefined"),
    }
    Ok(())
}
