//! Parsing of ring description files and ideal literals.
//!
//! A ring file is JSON: variable names, a prime, and squarefree relation
//! exponent rows. Ideals on the command line are either the literals `0`
//! and `1`, a JSON array of exponent rows, or a comma-separated list of
//! monomials written with the ring's variable names, like `x^2*y, z`.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::ring::StanleyReisnerRing;
use serde::Deserialize;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingFile {
    pub variables: Vec<String>,
    pub p: u64,
    #[serde(default)]
    pub relations: Vec<Vec<u64>>,
}

pub fn parse_ring_file(src: &str) -> Result<RingFile> {
    serde_json::from_str(src).map_err(|err| Error::input(format!("bad ring file: {err}")))
}

/// Builds the ring described by `file`, optionally overriding its
/// characteristic.
pub fn build_ring(file: &RingFile, p_override: Option<u64>) -> Result<StanleyReisnerRing> {
    let n = file.variables.len();
    let mut relations = Vec::with_capacity(file.relations.len());
    for row in &file.relations {
        if row.len() != n {
            return Err(Error::input(format!(
                "relation row {row:?} has {} entries for {} variables",
                row.len(),
                n
            )));
        }
        relations.push(Monomial::new(row.clone()));
    }
    StanleyReisnerRing::new(file.variables.clone(), p_override.unwrap_or(file.p), relations)
}

pub fn parse_ring_str(src: &str, p_override: Option<u64>) -> Result<StanleyReisnerRing> {
    build_ring(&parse_ring_file(src)?, p_override)
}

/// Parses an ideal literal against the given variable names.
pub fn parse_ideal(src: &str, vars: &[String]) -> Result<MonomialIdeal> {
    let n = vars.len();
    let trimmed = src.trim();
    if trimmed.is_empty() {
        return Err(Error::input("empty ideal literal"));
    }
    if trimmed == "0" {
        return Ok(MonomialIdeal::zero(n));
    }
    if trimmed == "1" {
        return Ok(MonomialIdeal::unit(n));
    }
    if trimmed.starts_with('[') {
        let rows: Vec<Vec<u64>> = serde_json::from_str(trimmed)
            .map_err(|err| Error::input(format!("bad exponent rows: {err}")))?;
        return MonomialIdeal::from_exponents(n, rows);
    }
    let mut gens = Vec::new();
    for part in trimmed.split(',') {
        gens.push(parse_monomial(part, vars)?);
    }
    Ok(MonomialIdeal::new(n, gens))
}

fn parse_monomial(src: &str, vars: &[String]) -> Result<Monomial> {
    let trimmed = src.trim();
    if trimmed.is_empty() {
        return Err(Error::input("empty monomial in ideal literal"));
    }
    let mut exps = vec![0u64; vars.len()];
    for factor in trimmed.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::input(format!("empty factor in monomial {trimmed:?}")));
        }
        let (name, exp) = match factor.split_once('^') {
            None => (factor, 1),
            Some((name, raw)) => {
                let exp = raw.trim().parse::<u64>().map_err(|_| {
                    Error::input(format!("bad exponent {raw:?} in monomial {trimmed:?}"))
                })?;
                (name.trim(), exp)
            }
        };
        let index = vars.iter().position(|v| v == name).ok_or_else(|| {
            Error::input(format!(
                "unknown variable {name:?} (ring variables: {})",
                vars.join(", ")
            ))
        })?;
        exps[index] = exps[index]
            .checked_add(exp)
            .ok_or_else(|| Error::input(format!("exponent overflow in monomial {trimmed:?}")))?;
    }
    Ok(Monomial::new(exps))
}
