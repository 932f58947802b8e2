//! Brute-force reference routes, guarded by an explicit budget.
//!
//! These are deliberately naive second opinions: `bf_nu` expands powers
//! monomial by monomial, and `bf_contraction_trace` decides contraction
//! membership through the generators of (I^{[q]} : I) instead of the
//! support colons used by the main route. They exist to disagree loudly
//! when the clever routes are wrong, so they share as little reasoning
//! with them as possible.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::rational::{ratio_u, BigRational};
use crate::ring::{FrobeniusLevel, StanleyReisnerRing};
use std::collections::HashSet;

pub const BUDGET_ENV_VAR: &str = "FSR_ORACLE_BUDGET";

/// Size limits for brute-force runs. Exceeding a limit is a refusal,
/// not a wrong answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_n: usize,
    pub max_p: u64,
    pub max_e: u32,
    pub max_degree: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_n: 4, max_p: 3, max_e: 2, max_degree: 64 }
    }
}

impl OracleBudget {
    /// Reads overrides from `FSR_ORACLE_BUDGET`, e.g. `n=5,p=5,e=3,deg=128`.
    /// Unset keys keep their defaults; an unset variable keeps them all.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV_VAR) {
            Err(_) => Ok(OracleBudget::default()),
            Ok(raw) => OracleBudget::parse(&raw),
        }
    }

    pub fn parse(raw: &str) -> Result<Self> {
        let mut budget = OracleBudget::default();
        for part in raw.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let Some((key, value)) = part.split_once('=') else {
                return Err(Error::input(format!(
                    "budget entry {part:?} is not key=value"
                )));
            };
            let parse = |v: &str| -> Result<u64> {
                v.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::input(format!("budget value {v:?} is not a number")))
            };
            match key.trim() {
                "n" => budget.max_n = parse(value)? as usize,
                "p" => budget.max_p = parse(value)?,
                "e" => budget.max_e = parse(value)? as u32,
                "deg" => budget.max_degree = parse(value)?,
                other => {
                    return Err(Error::input(format!(
                        "unknown budget key {other:?} (expected n, p, e, deg)"
                    )))
                }
            }
        }
        Ok(budget)
    }

    fn admit_ring(&self, ring: &StanleyReisnerRing, level: FrobeniusLevel) -> Result<()> {
        if ring.n() > self.max_n {
            return Err(Error::budget(format!(
                "{} variables exceed the brute-force limit of {} (raise {BUDGET_ENV_VAR})",
                ring.n(),
                self.max_n
            )));
        }
        if ring.p() > self.max_p {
            return Err(Error::budget(format!(
                "characteristic {} exceeds the brute-force limit of {} (raise {BUDGET_ENV_VAR})",
                ring.p(),
                self.max_p
            )));
        }
        if level.e() > self.max_e {
            return Err(Error::budget(format!(
                "level e = {} exceeds the brute-force limit of {} (raise {BUDGET_ENV_VAR})",
                level.e(),
                self.max_e
            )));
        }
        Ok(())
    }

    fn admit_degrees(&self, ideals: &[&MonomialIdeal]) -> Result<()> {
        for ideal in ideals {
            for gen in ideal.gens() {
                if gen.degree() > self.max_degree {
                    return Err(Error::budget(format!(
                        "generator degree {} exceeds the brute-force limit of {} (raise {BUDGET_ENV_VAR})",
                        gen.degree(),
                        self.max_degree
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Largest m with a^m not inside J^{[q]} + I, by expanding every power
/// of `a` in full. No frontier pruning, no per-prime reduction.
pub fn bf_nu(
    ring: &StanleyReisnerRing,
    a: &MonomialIdeal,
    j: &MonomialIdeal,
    level: FrobeniusLevel,
    budget: &OracleBudget,
) -> Result<u64> {
    budget.admit_ring(ring, level)?;
    budget.admit_degrees(&[a, j])?;
    if a.ambient() != ring.n() || j.ambient() != ring.n() {
        return Err(Error::input("ideal ambient mismatch"));
    }
    let q = level.q();
    let target = j.frobenius_power(q)?.sum(ring.defining_ideal());
    if target.contains(&Monomial::one(ring.n())) {
        return Err(Error::precondition("target ideal is the unit ideal"));
    }
    // Termination cap: once any generator accumulates q * maxexp(j) + 1
    // factors, products land in the Frobenius power.
    let cap = a
        .mu()
        .saturating_mul(q.saturating_mul(j.max_exponent()).saturating_add(1))
        .saturating_add(1);
    let mut power: HashSet<Monomial> = HashSet::new();
    power.insert(Monomial::one(ring.n()));
    let mut m: u64 = 0;
    loop {
        let mut next: HashSet<Monomial> = HashSet::new();
        for w in &power {
            for g in a.gens() {
                next.insert(w.mul(g));
            }
        }
        m += 1;
        if next.is_empty() || next.iter().all(|w| target.contains(w)) {
            return Ok(m - 1);
        }
        if m > cap {
            return Err(Error::internal("brute-force power expansion ran past its cap"));
        }
        power = next;
    }
}

/// Contraction membership through the trace route: x^beta lies in the
/// level-e contraction of j exactly when, for every generator eta of
/// (I^{[q]} : I) and every congruence lift making eta + beta equal to
/// (q-1, .., q-1) plus q * delta, the witness x^delta lies in j + I.
/// Only the componentwise smallest lift matters, since membership is
/// closed under multiples.
pub fn bf_contraction_trace(
    ring: &StanleyReisnerRing,
    j: &MonomialIdeal,
    level: FrobeniusLevel,
    beta: &Monomial,
    budget: &OracleBudget,
) -> Result<bool> {
    budget.admit_ring(ring, level)?;
    budget.admit_degrees(&[j])?;
    if beta.degree() > budget.max_degree {
        return Err(Error::budget(format!(
            "monomial degree {} exceeds the brute-force limit of {} (raise {BUDGET_ENV_VAR})",
            beta.degree(),
            budget.max_degree
        )));
    }
    if j.ambient() != ring.n() || beta.ambient() != ring.n() {
        return Err(Error::input("ambient mismatch"));
    }
    let n = ring.n();
    let q = level.q();
    let defining = ring.defining_ideal();
    let trace_source = if defining.is_zero() {
        MonomialIdeal::unit(n)
    } else {
        defining.frobenius_power(q)?.colon(defining)?
    };
    let j_plus_i = j.sum(defining);
    for eta0 in trace_source.gens() {
        let mut delta = vec![0u64; n];
        for i in 0..n {
            let base = eta0.exponents()[i] + beta.exponents()[i];
            // Smallest eta_i >= eta0_i with eta_i + beta_i = q - 1 (mod q).
            let shortfall = ((q - 1) as i128 - base as i128).rem_euclid(q as i128) as u64;
            let total = base + shortfall;
            debug_assert_eq!(total % q, q - 1);
            delta[i] = (total - (q - 1)) / q;
        }
        if !j_plus_i.contains(&Monomial::new(delta)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A two-sided estimate of the F-threshold from one brute-force count.
#[derive(Clone, Debug, PartialEq)]
pub struct ThresholdBracket {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    pub nu: u64,
    pub lower: BigRational,
    pub upper: BigRational,
}

/// Brackets the F-threshold by nu(q)/q <= c <= nu(q)/q + mu(a)/q.
pub fn bf_threshold_bracket(
    ring: &StanleyReisnerRing,
    a: &MonomialIdeal,
    j: &MonomialIdeal,
    level: FrobeniusLevel,
    budget: &OracleBudget,
) -> Result<ThresholdBracket> {
    let nu = bf_nu(ring, a, j, level, budget)?;
    let q = level.q();
    let lower = ratio_u(nu, q);
    let upper = ratio_u(nu + a.mu(), q);
    Ok(ThresholdBracket { p: level.p(), e: level.e(), q, nu, lower, upper })
}
