//! Text formats for presentations and maps.
//!
//! Presentation file:
//!
//! ```text
//! ring: Q | Z | Z/<m>
//! vars: <ident> <ident> ...
//! rels: <poly> ; <poly> ; ...     (optional)
//! strategy: monomial | groebner
//! ```
//!
//! Map file:
//!
//! ```text
//! domain: <path>  codomain: <path>
//! images: <poly> ; <poly> ; ...
//! ```

use super::{AlgebraMap, FpAlgebra, Strategy};
use crate::arith::RingSpec;
use crate::error::{Error, Result};
use crate::ideal::DEFAULT_DEGREE_BOUND;
use crate::poly::{parse_poly, MonomialOrder, VarSet};

fn line_error(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax { position: line, message: format!("line {}: {}", line + 1, message.into()) }
}

fn split_list(text: &str) -> impl Iterator<Item = &str> {
    text.split(';').map(str::trim).filter(|s| !s.is_empty())
}

pub fn parse_presentation(text: &str) -> Result<FpAlgebra> {
    parse_presentation_with(text, MonomialOrder::DegRevLex, DEFAULT_DEGREE_BOUND)
}

/// Parses a presentation; `order` is used when the strategy is `groebner`.
pub fn parse_presentation_with(text: &str, order: MonomialOrder, degree_bound: u32) -> Result<FpAlgebra> {
    let mut ring = None;
    let mut vars = None;
    let mut rels: Option<(usize, String)> = None;
    let mut strategy = None;
    for (no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once(':').ok_or_else(|| line_error(no, "expected `key: value`"))?;
        let value = value.trim();
        match key.trim() {
            "ring" => ring = Some(value.parse::<RingSpec>()?),
            "vars" => vars = Some(VarSet::new(value.split_whitespace())?),
            "rels" => rels = Some((no, value.to_string())),
            "strategy" => {
                strategy = Some(match value {
                    "monomial" => Strategy::MonomialDeletion,
                    "groebner" => Strategy::Groebner(order),
                    other => return Err(line_error(no, format!("unknown strategy `{other}`"))),
                })
            }
            other => return Err(line_error(no, format!("unknown key `{other}`"))),
        }
    }
    let ring = ring.ok_or_else(|| line_error(0, "missing `ring:`"))?;
    let vars = vars.ok_or_else(|| line_error(0, "missing `vars:`"))?;
    let relations = match &rels {
        Some((_, text)) => split_list(text).map(|r| parse_poly(r, &vars, ring)).collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    let strategy = strategy.unwrap_or(if ring.is_field() && relations.iter().any(|r| r.as_monomial().is_none()) {
        Strategy::Groebner(order)
    } else {
        Strategy::MonomialDeletion
    });
    FpAlgebra::with_degree_bound(ring, vars, relations, strategy, degree_bound)
}

/// Inverse of [`parse_presentation`].
pub fn format_presentation(a: &FpAlgebra) -> String {
    let mut out = format!("ring: {}\nvars: {}\n", a.ring(), a.varset());
    let rels: Vec<String> = a.relations().generators().iter().map(|r| r.to_string()).collect();
    if !rels.is_empty() {
        out.push_str(&format!("rels: {}\n", rels.join(" ; ")));
    }
    out.push_str(match a.strategy() {
        Strategy::MonomialDeletion => "strategy: monomial\n",
        Strategy::Groebner(_) => "strategy: groebner\n",
    });
    out
}

/// Parses a map file, loading the named presentations through `load`.
pub fn parse_map<F>(text: &str, mut load: F) -> Result<AlgebraMap>
where
    F: FnMut(&str) -> Result<FpAlgebra>,
{
    let mut domain = None;
    let mut codomain = None;
    let mut images = None;
    for (no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("images:") {
            images = Some(rest.trim().to_string());
            continue;
        }
        let mut tokens = line.split_whitespace();
        while let Some(key) = tokens.next() {
            let value = tokens.next().ok_or_else(|| line_error(no, format!("missing value for `{key}`")))?;
            match key {
                "domain:" => domain = Some(value.to_string()),
                "codomain:" => codomain = Some(value.to_string()),
                other => return Err(line_error(no, format!("unknown key `{other}`"))),
            }
        }
    }
    let domain = load(&domain.ok_or_else(|| line_error(0, "missing `domain:`"))?)?;
    let codomain = load(&codomain.ok_or_else(|| line_error(0, "missing `codomain:`"))?)?;
    let images = images.ok_or_else(|| line_error(0, "missing `images:`"))?;
    let texts: Vec<&str> = split_list(&images).collect();
    AlgebraMap::parse(&domain, &codomain, &texts)
}
