use std::sync::Arc;

use crate::arith::parse::parse_poly_at;
use crate::arith::{Field, Poly, Ring};
use crate::error::{Error, Result};

/// A parsed system file: the ring and one polynomial per non-directive line.
#[derive(Clone, Debug)]
pub struct SystemInput {
    pub ring: Arc<Ring>,
    pub polys: Vec<Poly>,
}

/// `key: value` directives recognised at the top of system and
/// decomposition files.
#[derive(Default)]
pub(crate) struct Header {
    pub vars: Option<(usize, Vec<String>)>,
    pub characteristic: Option<(usize, u64)>,
    pub extra: Vec<(usize, String, String)>,
}

/// Splits `text` into its header directives and the remaining content lines,
/// numbered from 1. Comments start at `#`.
pub(crate) fn split_lines(text: &str) -> Result<(Header, Vec<(usize, &str)>)> {
    let mut header = Header::default();
    let mut body = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once(':') else {
            body.push((line, content));
            continue;
        };
        let (key, value) = (key.trim(), value.trim());
        match key {
            "vars" => {
                if header.vars.is_some() {
                    return Err(Error::parse(line, "variables declared twice"));
                }
                let names: Vec<String> = value.split('<').map(|s| s.trim().to_string()).collect();
                for n in &names {
                    let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                        && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                    if !ok {
                        return Err(Error::parse(line, format!("bad variable name `{n}`")));
                    }
                }
                header.vars = Some((line, names));
            }
            "char" => {
                let c: u64 = value
                    .parse()
                    .map_err(|_| Error::parse(line, format!("bad characteristic `{value}`")))?;
                header.characteristic = Some((line, c));
            }
            _ => header.extra.push((line, key.to_string(), value.to_string())),
        }
    }
    Ok((header, body))
}

impl Header {
    /// Builds the ring; `char_override` wins over a `char:` directive.
    pub(crate) fn ring(&self, char_override: Option<u64>) -> Result<Arc<Ring>> {
        let Some((vline, names)) = &self.vars else {
            return Err(Error::parse(1, "missing `vars:` line"));
        };
        let (cline, c) = match (char_override, self.characteristic) {
            (Some(c), _) => (0, c),
            (None, Some((l, c))) => (l, c),
            (None, None) => (0, 0),
        };
        let field = Field::with_characteristic(c).map_err(|e| match cline {
            0 => e,
            l => Error::parse(l, e.to_string()),
        })?;
        Ring::new(names, field).map_err(|e| Error::parse(*vline, e.to_string()))
    }
}

/// Parses a system file.
///
/// ```text
/// vars: y < x
/// char: 7
/// x^2 + y^2 - 1
/// x - y
/// ```
pub fn parse_system(text: &str) -> Result<SystemInput> {
    parse_system_with(text, None)
}

/// As [`parse_system`], with the characteristic forced to `char_override`.
pub fn parse_system_with(text: &str, char_override: Option<u64>) -> Result<SystemInput> {
    let (header, body) = split_lines(text)?;
    if let Some((line, key, _)) = header.extra.first() {
        return Err(Error::parse(*line, format!("unknown directive `{key}`")));
    }
    let ring = header.ring(char_override)?;
    let polys = body
        .into_iter()
        .map(|(line, s)| parse_poly_at(&ring, s, line))
        .collect::<Result<_>>()?;
    Ok(SystemInput { ring, polys })
}
