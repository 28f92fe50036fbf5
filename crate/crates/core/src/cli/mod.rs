//! The `regchains` command line tool: system files in, decompositions out.

mod bench;
mod render;
mod system;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use bench::{bench, BenchConfig, BenchRow};
pub use render::{parse_mode, Decomposition, JsonDecomposition, SCHEMA};
pub use system::{parse_system, parse_system_with, SystemInput};

use crate::decompose::{solve, Mode, SolveOptions};
use crate::error::{Error, Result};
use crate::verify::{admissible_prime, check_decomposition, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "regchains",
    version,
    about = "Triangular decomposition of polynomial systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Lazard,
    Kalkbrener,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Lazard => Mode::LazardWu,
            ModeArg::Kalkbrener => Mode::Kalkbrener,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose the system in FILE (`-` reads standard input).
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "lazard")]
        mode: ModeArg,
        #[arg(long)]
        squarefree: bool,
        /// Override the characteristic declared in the file.
        #[arg(long = "char", value_name = "P")]
        characteristic: Option<u64>,
        /// Check the result by enumeration over these prime fields.
        #[arg(long, value_delimiter = ',', value_name = "P,...")]
        verify: Vec<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also report timing and output size.
        #[arg(long)]
        stats: bool,
        #[arg(long, env = "REGCHAINS_JOBS", default_value_t = 1)]
        jobs: usize,
    },
    /// Time every `*.sys` file in DIR.
    Bench {
        dir: PathBuf,
        /// One or more modes, comma separated.
        #[arg(long, value_enum, value_delimiter = ',', default_value = "lazard")]
        mode: Vec<ModeArg>,
        #[arg(long)]
        squarefree: bool,
        /// Per-system time limit in seconds; runs over it are shown as `-`.
        #[arg(long, value_name = "SECONDS")]
        timeout: Option<f64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, env = "REGCHAINS_JOBS", default_value_t = 1)]
        jobs: usize,
    },
    /// Print the JSON schema of `solve --format json` output.
    Schema,
}

#[derive(Serialize)]
struct VerifyEntry {
    prime: u64,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<Report>,
}

#[derive(Serialize)]
struct JsonOutput {
    #[serde(flatten)]
    decomposition: JsonDecomposition,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    verification: Vec<VerifyEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    stats: Option<BenchRow>,
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

fn read_input(file: &PathBuf) -> Result<String> {
    let mut text = String::new();
    if file.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Io(e.to_string()))?;
    } else {
        text = std::fs::read_to_string(file).map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
    }
    Ok(text)
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Schema => {
            out.write_all(SCHEMA.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Bench {
            dir,
            mode,
            squarefree,
            timeout,
            format,
            jobs,
        } => {
            let timeout = match timeout {
                Some(t) if !(t >= 0.0 && t.is_finite()) => {
                    return Err(Error::InvalidOptions(format!("bad timeout {t}")))
                }
                t => t.map(Duration::from_secs_f64),
            };
            let cfg = BenchConfig {
                modes: mode.into_iter().map(Mode::from).collect(),
                squarefree,
                jobs,
                timeout,
            };
            let rows = bench(&dir, &cfg)?;
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows).unwrap()),
                Format::Text => {
                    let mut s = BenchRow::table_header();
                    for r in &rows {
                        s.push('\n');
                        s.push_str(&r.table_line());
                    }
                    writeln!(out, "{s}")
                }
            }
            .map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Solve {
            file,
            mode,
            squarefree,
            characteristic,
            verify,
            format,
            stats,
            jobs,
        } => {
            let text = read_input(&file)?;
            let sys = parse_system_with(&text, characteristic)?;
            let mode = Mode::from(mode);
            let opts = SolveOptions {
                mode,
                squarefree,
                jobs,
                ..SolveOptions::default()
            };
            let start = Instant::now();
            let solved = solve(&sys.ring, &sys.polys, &opts)?;
            let elapsed = start.elapsed();
            let d = Decomposition {
                ring: sys.ring.clone(),
                mode,
                squarefree,
                chains: solved.split.into_chains(),
            };
            let entries = verify
                .iter()
                .map(|&p| verify_at(&sys, &d, p))
                .collect::<Result<Vec<_>>>()?;
            let row = stats.then(|| {
                let name = file
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_default();
                let mut row = BenchRow::skeleton(&name, &sys, mode);
                row.fill(elapsed, &d);
                row
            });
            let failed = entries.iter().any(|e| e.status == "fail");
            match format {
                Format::Text => write_text(out, &d, &entries, row.as_ref()),
                Format::Json => {
                    let j = JsonOutput {
                        decomposition: d.to_json(),
                        verification: entries,
                        stats: row,
                    };
                    writeln!(out, "{}", serde_json::to_string_pretty(&j).unwrap())
                }
            }
            .map_err(io)?;
            Ok(if failed { EXIT_VERIFY_FAILED } else { EXIT_OK })
        }
    }
}

fn verify_at(sys: &SystemInput, d: &Decomposition, prime: u64) -> Result<VerifyEntry> {
    let c = sys.ring.field().characteristic();
    if c != 0 && c != prime {
        return Err(Error::InvalidOptions(format!(
            "cannot verify a computation over GF({c}) at {prime}"
        )));
    }
    if c == 0 && !admissible_prime(&sys.polys, &d.chains, prime) {
        return Ok(VerifyEntry {
            prime,
            status: "skipped",
            reason: Some("prime divides a coefficient or breaks a chain".into()),
            report: None,
        });
    }
    let report = check_decomposition(&sys.ring, &sys.polys, &d.chains, d.mode, prime)?;
    Ok(VerifyEntry {
        prime,
        status: if report.passed { "pass" } else { "fail" },
        reason: None,
        report: Some(report),
    })
}

fn write_text(
    out: &mut dyn Write,
    d: &Decomposition,
    entries: &[VerifyEntry],
    row: Option<&BenchRow>,
) -> std::io::Result<()> {
    out.write_all(d.render_text().as_bytes())?;
    let names = d.ring.order().names().join(", ");
    for e in entries {
        match (&e.report, e.status) {
            (None, status) => writeln!(
                out,
                "# verify {}: {status} ({})",
                e.prime,
                e.reason.as_deref().unwrap_or("")
            )?,
            (Some(r), status) => {
                writeln!(
                    out,
                    "# verify {}: {status} ({} points in the variety, {} covered)",
                    e.prime, r.expected_points, r.covered_points
                )?;
                for c in r.checks.iter().filter(|c| !c.passed) {
                    let pts: Vec<String> = c
                        .witnesses
                        .iter()
                        .map(|w| format!("({})", w.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")))
                        .collect();
                    writeln!(
                        out,
                        "#   {:?} check failed: {}; points ({names}): {}",
                        c.strength,
                        c.name,
                        pts.join(" ")
                    )?;
                }
            }
        }
    }
    if let Some(r) = row {
        writeln!(
            out,
            "# stats: name={} vars={} equations={} degree={} mode={} time_ms={:.3} chains={} output_size={}",
            r.name,
            r.vars,
            r.equations,
            r.degree,
            r.mode.name(),
            r.time_ms.unwrap_or(0.0),
            r.chains.unwrap_or(0),
            r.output_size.unwrap_or(0)
        )?;
    }
    Ok(())
}
