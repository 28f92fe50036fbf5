use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::system::split_lines;
use crate::arith::parse::parse_poly_at;
use crate::arith::Ring;
use crate::decompose::Mode;
use crate::error::{Error, Result};
use crate::rchain::RegularChain;

/// A solved system as printed by the command line tool.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub ring: Arc<Ring>,
    pub mode: Mode,
    pub squarefree: bool,
    /// Canonically sorted.
    pub chains: Vec<RegularChain>,
}

/// JSON shape of a decomposition; see `schema/decomposition.schema.json`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JsonDecomposition {
    pub vars: Vec<String>,
    pub characteristic: u64,
    pub mode: Mode,
    pub squarefree: bool,
    /// Each chain lists its polynomials from the greatest main variable down.
    pub chains: Vec<Vec<String>>,
}

pub const SCHEMA: &str = include_str!("../../schema/decomposition.schema.json");

impl Decomposition {
    fn chain_lines(&self) -> impl Iterator<Item = String> + '_ {
        self.chains.iter().map(|c| c.to_string())
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "vars: {}\nchar: {}\nmode: {}\n",
            self.ring.order().names().join(" < "),
            self.ring.field().characteristic(),
            self.mode.name()
        );
        if self.squarefree {
            out.push_str("squarefree: yes\n");
        }
        if self.chains.is_empty() {
            out.push_str("# empty variety\n");
        }
        for line in self.chain_lines() {
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> JsonDecomposition {
        JsonDecomposition {
            vars: self.ring.order().names().to_vec(),
            characteristic: self.ring.field().characteristic(),
            mode: self.mode,
            squarefree: self.squarefree,
            chains: self
                .chains
                .iter()
                .map(|c| c.iter_desc().map(|p| p.to_string()).collect())
                .collect(),
        }
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).unwrap()
    }

    /// Size of the chains' text rendering, whitespace excluded.
    pub fn output_size(&self) -> usize {
        self.chain_lines()
            .map(|l| l.chars().filter(|c| !c.is_whitespace()).count())
            .sum()
    }

    pub fn parse_text(text: &str) -> Result<Decomposition> {
        let (header, body) = split_lines(text)?;
        let ring = header.ring(None)?;
        let mut mode = Mode::LazardWu;
        let mut squarefree = false;
        for (line, key, value) in &header.extra {
            match (key.as_str(), value.as_str()) {
                ("mode", v) => {
                    mode = parse_mode(v).ok_or_else(|| Error::parse(*line, format!("unknown mode `{v}`")))?
                }
                ("squarefree", "yes") => squarefree = true,
                ("squarefree", "no") => squarefree = false,
                _ => return Err(Error::parse(*line, format!("unknown directive `{key}`"))),
            }
        }
        let mut chains = Vec::new();
        for (line, s) in body {
            let inner = s
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| Error::parse(line, "expected a chain in brackets"))?;
            let polys = inner
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| parse_poly_at(&ring, s, line))
                .collect::<Result<Vec<_>>>()?;
            chains.push(chain_at(&ring, polys, line)?);
        }
        Ok(Decomposition {
            ring,
            mode,
            squarefree,
            chains: sorted(chains),
        })
    }

    pub fn parse_json(text: &str) -> Result<Decomposition> {
        let j: JsonDecomposition = serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
        let field = crate::arith::Field::with_characteristic(j.characteristic)?;
        let ring = Ring::new(&j.vars, field)?;
        let chains = j
            .chains
            .iter()
            .map(|c| {
                let polys = c
                    .iter()
                    .map(|s| parse_poly_at(&ring, s, 1))
                    .collect::<Result<Vec<_>>>()?;
                chain_at(&ring, polys, 1)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Decomposition {
            ring,
            mode: j.mode,
            squarefree: j.squarefree,
            chains: sorted(chains),
        })
    }
}

fn chain_at(ring: &Arc<Ring>, polys: Vec<crate::arith::Poly>, line: usize) -> Result<RegularChain> {
    RegularChain::from_polys(ring, polys).map_err(|e| Error::parse(line, e.to_string()))
}

fn sorted(mut chains: Vec<RegularChain>) -> Vec<RegularChain> {
    chains.sort();
    chains
}

pub fn parse_mode(s: &str) -> Option<Mode> {
    match s {
        "lazard" | "lazard-wu" => Some(Mode::LazardWu),
        "kalkbrener" => Some(Mode::Kalkbrener),
        _ => None,
    }
}
