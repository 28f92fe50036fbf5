use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `V(F)` is the union of the quasi-components.
    #[serde(rename = "lazard")]
    LazardWu,
    /// `V(F)` is the union of the closures of the quasi-components.
    Kalkbrener,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::LazardWu => "lazard",
            Mode::Kalkbrener => "kalkbrener",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub mode: Mode,
    pub squarefree: bool,
    /// Largest height an output chain may have. Only meaningful in Kalkbrener
    /// mode, where it defaults to the number of input polynomials.
    pub height_bound: Option<usize>,
    /// Worker threads; 1 runs everything on one thread.
    pub jobs: usize,
    pub timeout: Option<Duration>,
    /// Keep every regular gcd computed on a dimension-preserving branch.
    pub record_gcds: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            mode: Mode::LazardWu,
            squarefree: false,
            height_bound: None,
            jobs: 1,
            timeout: None,
            record_gcds: false,
        }
    }
}

impl SolveOptions {
    pub fn lazard() -> Self {
        Self::default()
    }

    pub fn kalkbrener() -> Self {
        SolveOptions {
            mode: Mode::Kalkbrener,
            ..Self::default()
        }
    }

    pub fn with_squarefree(mut self, on: bool) -> Self {
        self.squarefree = on;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn with_timeout(mut self, t: Option<Duration>) -> Self {
        self.timeout = t;
        self
    }

    pub fn with_gcd_records(mut self, on: bool) -> Self {
        self.record_gcds = on;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.mode == Mode::LazardWu && self.height_bound.is_some() {
            return Err(Error::InvalidOptions("a height bound requires kalkbrener mode".into()));
        }
        if self.jobs == 0 {
            return Err(Error::InvalidOptions("at least one worker is required".into()));
        }
        Ok(())
    }
}
