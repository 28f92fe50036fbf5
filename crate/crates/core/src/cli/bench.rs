use std::path::Path;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::render::Decomposition;
use super::system::{parse_system, SystemInput};
use crate::decompose::{solve, Mode, SolveOptions};
use crate::error::{Error, Result};

/// One benchmark measurement. The optional fields are `None` when the run
/// hit its time limit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub name: String,
    pub vars: usize,
    pub equations: usize,
    /// Largest total degree of an input polynomial.
    pub degree: u32,
    pub mode: Mode,
    pub time_ms: Option<f64>,
    pub chains: Option<usize>,
    /// Characters in the rendered chains, whitespace excluded.
    pub output_size: Option<usize>,
}

impl BenchRow {
    pub(crate) fn skeleton(name: &str, sys: &SystemInput, mode: Mode) -> BenchRow {
        BenchRow {
            name: name.to_string(),
            vars: sys.ring.nvars(),
            equations: sys.polys.len(),
            degree: sys.polys.iter().map(|p| p.total_degree()).max().unwrap_or(0),
            mode,
            time_ms: None,
            chains: None,
            output_size: None,
        }
    }

    pub(crate) fn fill(&mut self, elapsed: Duration, d: &Decomposition) {
        self.time_ms = Some(elapsed.as_secs_f64() * 1e3);
        self.chains = Some(d.chains.len());
        self.output_size = Some(d.output_size());
    }

    pub fn table_header() -> String {
        format!(
            "{:<20} {:>3} {:>3} {:>4} {:<10} {:>10} {:>7} {:>8}",
            "system", "#v", "#e", "deg", "mode", "time(ms)", "chains", "size"
        )
    }

    pub fn table_line(&self) -> String {
        let dash = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        format!(
            "{:<20} {:>3} {:>3} {:>4} {:<10} {:>10} {:>7} {:>8}",
            self.name,
            self.vars,
            self.equations,
            self.degree,
            self.mode.name(),
            dash(self.time_ms.map(|t| format!("{t:.2}"))),
            dash(self.chains.map(|c| c.to_string())),
            dash(self.output_size.map(|c| c.to_string())),
        )
    }
}

/// Settings shared by every run of a benchmark.
#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub modes: Vec<Mode>,
    pub squarefree: bool,
    pub jobs: usize,
    /// Per-system limit; `Some(0)` marks every row as skipped.
    pub timeout: Option<Duration>,
}

/// Solves every `*.sys` file in `dir`, in file-name order, once per mode.
pub fn bench(dir: &Path, cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    let entries = std::fs::read_dir(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<_> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "sys"))
        .collect();
    files.sort();
    let mut rows = Vec::new();
    for path in files {
        let text = std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let sys = parse_system(&text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let name = path.file_stem().unwrap().to_string_lossy().into_owned();
        for &mode in &cfg.modes {
            rows.push(run_one(&name, &sys, mode, cfg)?);
        }
    }
    Ok(rows)
}

fn run_one(name: &str, sys: &SystemInput, mode: Mode, cfg: &BenchConfig) -> Result<BenchRow> {
    let mut row = BenchRow::skeleton(name, sys, mode);
    if cfg.timeout == Some(Duration::ZERO) {
        return Ok(row);
    }
    let opts = SolveOptions {
        mode,
        squarefree: cfg.squarefree,
        jobs: cfg.jobs,
        timeout: cfg.timeout,
        ..SolveOptions::default()
    };
    let start = Instant::now();
    let solved = match solve(&sys.ring, &sys.polys, &opts) {
        Err(Error::Timeout) => return Ok(row),
        other => other?,
    };
    let elapsed = start.elapsed();
    if cfg.timeout.is_some_and(|t| elapsed > t) {
        return Ok(row);
    }
    let d = Decomposition {
        ring: sys.ring.clone(),
        mode,
        squarefree: cfg.squarefree,
        chains: solved.split.into_chains(),
    };
    row.fill(elapsed, &d);
    Ok(row)
}
