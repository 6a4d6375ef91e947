//! `lapsnf`: Smith normal forms, invariant-factor classification, and
//! exhaustive verification for small-graph Laplacians.

mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use input::{for_each_graph, CliError, InputFormat};
use lapsnf::{
    classify_s3, determinantal_divisors, emit_edge_list, emit_graph6, enumerate_connected,
    invariant_factors, spanning_tree_count, verify_side_claims, verify_theorem, Family,
};
use report::{ClassifyCsvWriter, ClassifyDto, VerifyDto};

/// Environment variable consulted for the default verifier job count.
const JOBS_ENV: &str = "LAPSNF_JOBS";

#[derive(Parser)]
#[command(name = "lapsnf", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the invariant factors of each input graph's Laplacian.
    Snf {
        /// Input file (.g6 or .el), or '-' for graph6 on stdin
        input: String,
        /// Also print the determinantal divisors (n <= 9)
        #[arg(long)]
        divisors: bool,
        #[arg(long, value_enum)]
        format: Option<InputFormat>,
        /// Report bad records and continue instead of stopping
        #[arg(long)]
        lenient: bool,
    },
    /// Classify each input graph by its third invariant factor.
    Classify {
        input: String,
        /// One JSON object per graph instead of text
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// CSV rows instead of text
        #[arg(long)]
        csv: bool,
        #[arg(long, value_enum)]
        format: Option<InputFormat>,
        #[arg(long)]
        lenient: bool,
    },
    /// Print the spanning-tree count of each input graph.
    Trees {
        input: String,
        #[arg(long, value_enum)]
        format: Option<InputFormat>,
        #[arg(long)]
        lenient: bool,
    },
    /// Emit a named graph family member.
    Family {
        /// Family name, e.g. complete_minus_edge, pendant_complete, k23
        name: String,
        /// Vertex count
        n: usize,
        /// Emit graph6 (default)
        #[arg(long, conflicts_with = "edges")]
        g6: bool,
        /// Emit edge-list text
        #[arg(long)]
        edges: bool,
    },
    /// Enumerate all connected graphs of the given orders and verify every
    /// classification claim. Exits 3 when violations are found.
    Verify {
        /// Order to verify (3..=9; 9 needs --allow-slow)
        #[arg(long)]
        n: usize,
        /// Verify every order from n up to this one
        #[arg(long)]
        max_n: Option<usize>,
        /// Worker threads (default: LAPSNF_JOBS or all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the summaries as JSON to this path ('-' for stdout)
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the summaries as CSV to this path ('-' for stdout)
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Confirm the 261k-class sweep at n = 9
        #[arg(long)]
        allow_slow: bool,
    },
    /// Convert between graph formats.
    Convert {
        input: String,
        /// Target format
        #[arg(long, value_enum)]
        to: InputFormat,
        #[arg(long, value_enum)]
        format: Option<InputFormat>,
        #[arg(long)]
        lenient: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    };
    std::process::exit(code);
}

fn run(cmd: Cmd) -> Result<i32, CliError> {
    match cmd {
        Cmd::Snf { input, divisors, format, lenient } => {
            cmd_snf(&input, divisors, format, lenient)
        }
        Cmd::Classify { input, json, csv, format, lenient } => {
            cmd_classify(&input, json, csv, format, lenient)
        }
        Cmd::Trees { input, format, lenient } => cmd_trees(&input, format, lenient),
        Cmd::Family { name, n, g6: _, edges } => cmd_family(&name, n, edges),
        Cmd::Verify { n, max_n, jobs, json, csv, allow_slow } => {
            cmd_verify(n, max_n, jobs, json, csv, allow_slow)
        }
        Cmd::Convert { input, to, format, lenient } => cmd_convert(&input, to, format, lenient),
    }
}

/// Reports a per-graph failure: warn and carry on under `lenient`, abort
/// otherwise.
fn skip_or_fail(source: &str, err: impl std::fmt::Display, lenient: bool) -> Result<(), CliError> {
    let msg = format!("{source}: {err}");
    if lenient {
        eprintln!("warning: {msg} (skipped)");
        Ok(())
    } else {
        Err(CliError::Input(msg))
    }
}

fn cmd_snf(
    input: &str,
    divisors: bool,
    format: Option<InputFormat>,
    lenient: bool,
) -> Result<i32, CliError> {
    for_each_graph(input, format, lenient, |rec| {
        let lap = rec.graph.laplacian();
        println!("{}", join(&invariant_factors(&lap)));
        if divisors {
            match determinantal_divisors(&lap) {
                Ok(dd) => println!("divisors {}", join(&dd.deltas)),
                Err(e) => skip_or_fail(&rec.source, e, lenient)?,
            }
        }
        Ok(())
    })?;
    Ok(0)
}

fn cmd_classify(
    input: &str,
    json: bool,
    csv: bool,
    format: Option<InputFormat>,
    lenient: bool,
) -> Result<i32, CliError> {
    let stdout = std::io::stdout();
    let mut csv_writer =
        if csv { Some(ClassifyCsvWriter::new(stdout.lock())?) } else { None };
    for_each_graph(input, format, lenient, |rec| {
        let report = match classify_s3(&rec.graph) {
            Ok(report) => report,
            Err(e) => return skip_or_fail(&rec.source, e, lenient),
        };
        let dto = ClassifyDto::new(&rec.source, &report);
        if let Some(w) = &mut csv_writer {
            w.write(&dto)?;
        } else if json {
            println!("{}", serde_json::to_string(&dto).expect("report serializes"));
        } else {
            println!("{}", dto.text_line());
        }
        Ok(())
    })?;
    if let Some(w) = &mut csv_writer {
        w.flush()?;
    }
    Ok(0)
}

fn cmd_trees(input: &str, format: Option<InputFormat>, lenient: bool) -> Result<i32, CliError> {
    for_each_graph(input, format, lenient, |rec| {
        match spanning_tree_count(&rec.graph) {
            Ok(count) => {
                println!("{count}");
                Ok(())
            }
            Err(e) => skip_or_fail(&rec.source, e, lenient),
        }
    })?;
    Ok(0)
}

fn cmd_family(name: &str, n: usize, edges: bool) -> Result<i32, CliError> {
    let Some(family) = Family::from_name(name) else {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        return Err(CliError::Usage(format!(
            "unknown family '{name}'; one of: {}",
            names.join(", ")
        )));
    };
    let graph = family.build(n).map_err(|e| CliError::Usage(e.to_string()))?;
    if edges {
        print!("{}", emit_edge_list(&graph));
    } else {
        println!("{}", String::from_utf8(emit_graph6(&graph)).expect("graph6 is ASCII"));
    }
    Ok(0)
}

fn cmd_verify(
    n: usize,
    max_n: Option<usize>,
    jobs: Option<usize>,
    json: Option<PathBuf>,
    csv: Option<PathBuf>,
    allow_slow: bool,
) -> Result<i32, CliError> {
    let last = max_n.unwrap_or(n);
    if n < 3 || last < n {
        return Err(CliError::Usage(format!("--n must be in 3..=9 and <= --max-n, got {n}")));
    }
    let jobs = jobs.or_else(|| {
        std::env::var(JOBS_ENV).ok().and_then(|v| v.parse().ok())
    });

    let run_all = || -> Result<Vec<VerifyDto>, CliError> {
        (n..=last)
            .map(|order| {
                let usage = |e: lapsnf::EnumError| CliError::Usage(e.to_string());
                if order < 5 {
                    let side = verify_side_claims(order).map_err(usage)?;
                    let total = enumerate_connected(order).map_err(usage)?.len() as u64;
                    Ok(VerifyDto::side_only(order, total, &side))
                } else {
                    let summary = verify_theorem(order, allow_slow).map_err(usage)?;
                    let side = if order <= 8 {
                        verify_side_claims(order).map_err(usage)?
                    } else {
                        Vec::new()
                    };
                    Ok(VerifyDto::new(&summary, &side))
                }
            })
            .collect()
    };
    let reports = match jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .expect("thread pool")
            .install(run_all),
        None => run_all(),
    }?;

    for dto in &reports {
        println!("{}", dto.text_line());
    }
    let violations: usize = reports.iter().map(|r| r.violations.len()).sum();

    if let Some(path) = json {
        let body = serde_json::to_string_pretty(&reports).expect("summaries serialize");
        write_output(&path, body.as_bytes())?;
    }
    if let Some(path) = csv {
        let mut buf = Vec::new();
        VerifyDto::write_csv(&reports, &mut buf).map_err(|e| CliError::Input(e.to_string()))?;
        write_output(&path, &buf)?;
    }
    Ok(if violations > 0 { 3 } else { 0 })
}

fn cmd_convert(
    input: &str,
    to: InputFormat,
    format: Option<InputFormat>,
    lenient: bool,
) -> Result<i32, CliError> {
    let mut first = true;
    for_each_graph(input, format, lenient, |rec| {
        match to {
            InputFormat::G6 => {
                println!("{}", String::from_utf8(emit_graph6(&rec.graph)).expect("ASCII"));
            }
            InputFormat::Edges => {
                // blank line between graphs; each block reparses on its own
                if !first {
                    println!();
                }
                print!("{}", emit_edge_list(&rec.graph));
            }
        }
        first = false;
        Ok(())
    })?;
    Ok(0)
}

fn write_output(path: &PathBuf, bytes: &[u8]) -> Result<(), CliError> {
    if path.as_os_str() == "-" {
        std::io::stdout().write_all(bytes).map_err(|e| CliError::Input(e.to_string()))?;
        Ok(())
    } else {
        std::fs::write(path, bytes)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }
}

fn join<T: std::fmt::Display>(values: &[T]) -> String {
    values.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}
