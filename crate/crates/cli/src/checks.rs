//! Verification routines behind `--verify`.
//!
//! Each check recomputes the command's result along an independent
//! route: the brute-force oracles where one exists, otherwise an
//! algebraic identity the result must satisfy. Checks that exceed the
//! oracle budget are skipped with a note on stderr; an actual mismatch
//! is a disagreement and the process exits with code 4.

use crate::Failure;
use fsr_core::cartier::{contraction_ideal, ContractionQuery, SandwichTable};
use fsr_core::error::Error;
use fsr_core::monomial::{FacePrime, Monomial, MonomialIdeal};
use fsr_core::oracle::{bf_contraction_trace, bf_nu, bf_threshold_bracket, OracleBudget, BUDGET_ENV_VAR};
use fsr_core::rational::{to_fraction_string, BigRational};
use fsr_core::ring::{FrobeniusLevel, StanleyReisnerRing};
use std::collections::HashSet;

/// Standard wrapper: `Ok(None)` means agreement, `Ok(Some(diag))` a
/// disagreement, and a budget error downgrades to a skip note. Callers
/// with fallible work build `outcome` inside a closure so that `?`
/// lands here instead of escaping their own function.
fn gated(name: &str, outcome: Result<Option<String>, Error>) -> Result<(), Failure> {
    match outcome {
        Ok(None) => {
            eprintln!("verify: ok ({name})");
            Ok(())
        }
        Ok(Some(diag)) => Err(Failure::Disagreement(format!("{name}: {diag}"))),
        Err(Error::Budget(msg)) => {
            eprintln!("verify: skipped ({msg})");
            Ok(())
        }
        Err(err) => Err(Failure::Engine(err)),
    }
}

pub fn verify_min_primes(full: &MonomialIdeal, primes: &[FacePrime]) -> Result<(), Failure> {
    gated("minimal primes intersect to the radical", {
        let mut meet = MonomialIdeal::unit(full.ambient());
        for fp in primes {
            meet = meet.intersect(&fp.as_ideal());
        }
        if meet == full.radical() {
            Ok(None)
        } else {
            Ok(Some("intersection of the primes differs from the radical".into()))
        }
    })
}

pub fn verify_colon(
    j: &MonomialIdeal,
    g: &MonomialIdeal,
    result: &MonomialIdeal,
) -> Result<(), Failure> {
    gated("colon ideal is largest with (j : g) g inside j", {
        let mut diag = None;
        'outer: for h in result.gens() {
            for divisor in g.gens() {
                if !j.contains(&h.mul(divisor)) {
                    diag = Some(format!("{:?} times a divisor escapes j", h.exponents()));
                    break 'outer;
                }
            }
            for &i in &h.support() {
                let mut exps = h.exponents().to_vec();
                exps[i] -= 1;
                let smaller = Monomial::new(exps);
                let all_in = g.gens().iter().all(|d| j.contains(&smaller.mul(d)));
                if all_in && !g.is_zero() {
                    diag = Some(format!("{:?} is not a minimal member", h.exponents()));
                    break 'outer;
                }
            }
        }
        Ok(diag)
    })
}

pub fn verify_intersect(
    j: &MonomialIdeal,
    k: &MonomialIdeal,
    result: &MonomialIdeal,
) -> Result<(), Failure> {
    gated("intersection against membership", {
        let mut diag = None;
        if !j.contains_ideal(result) || !k.contains_ideal(result) {
            diag = Some("result is not inside both inputs".into());
        }
        for a in j.gens() {
            for b in k.gens() {
                if !result.contains(&a.lcm(b)) {
                    diag = Some("pairwise lcm escapes the result".into());
                }
            }
        }
        Ok(diag)
    })
}

pub fn verify_frobenius(j: &MonomialIdeal, q: u64, result: &MonomialIdeal) -> Result<(), Failure> {
    gated("bracket power scales exponents", {
        let expected: HashSet<Vec<u64>> = j
            .gens()
            .iter()
            .map(|g| g.exponents().iter().map(|&x| x * q).collect())
            .collect();
        let got: HashSet<Vec<u64>> =
            result.gens().iter().map(|g| g.exponents().to_vec()).collect();
        if expected == got {
            Ok(None)
        } else {
            Ok(Some("generator exponents are not the q-fold originals".into()))
        }
    })
}

pub fn verify_nu(
    ring: &StanleyReisnerRing,
    a: &MonomialIdeal,
    j: &MonomialIdeal,
    level: FrobeniusLevel,
    engine_nu: u64,
) -> Result<(), Failure> {
    gated("power count against brute force", (|| {
        let budget = OracleBudget::from_env()?;
        let oracle = bf_nu(ring, a, j, level, &budget)?;
        if oracle == engine_nu {
            Ok(None)
        } else {
            Ok(Some(format!("engine nu = {engine_nu}, brute force nu = {oracle}")))
        }
    })())
}

pub fn verify_threshold(
    ring: &StanleyReisnerRing,
    a: &MonomialIdeal,
    j: &MonomialIdeal,
    value: &BigRational,
) -> Result<(), Failure> {
    gated("threshold inside the brute-force bracket", (|| {
        let budget = OracleBudget::from_env()?;
        let level = ring.level(budget.max_e)?;
        let bracket = bf_threshold_bracket(ring, a, j, level, &budget)?;
        if &bracket.lower <= value && value <= &bracket.upper {
            Ok(None)
        } else {
            Ok(Some(format!(
                "value {} escapes [{}, {}]",
                to_fraction_string(value),
                to_fraction_string(&bracket.lower),
                to_fraction_string(&bracket.upper)
            )))
        }
    })())
}

pub fn verify_contraction_query(
    ring: &StanleyReisnerRing,
    j: &MonomialIdeal,
    level: FrobeniusLevel,
    query: &ContractionQuery,
) -> Result<(), Failure> {
    gated("membership against the trace route", (|| {
        let budget = OracleBudget::from_env()?;
        let trace = bf_contraction_trace(ring, j, level, &query.beta, &budget)?;
        if trace == query.contained {
            Ok(None)
        } else {
            Ok(Some(format!(
                "engine says {}, trace route says {}",
                query.contained, trace
            )))
        }
    })())
}

pub fn verify_contraction_ideal(
    ring: &StanleyReisnerRing,
    j: &MonomialIdeal,
    level: FrobeniusLevel,
    je: &MonomialIdeal,
) -> Result<(), Failure> {
    gated("contraction generators against the trace route", (|| {
        let budget = OracleBudget::from_env()?;
        let mut diag = None;
        'outer: for g in je.gens() {
            if !bf_contraction_trace(ring, j, level, g, &budget)? {
                diag = Some(format!("generator {:?} fails the trace test", g.exponents()));
                break;
            }
            // Minimality: strictly smaller monomials must fall outside.
            for &i in &g.support() {
                let mut exps = g.exponents().to_vec();
                exps[i] -= 1;
                let smaller = Monomial::new(exps);
                if bf_contraction_trace(ring, j, level, &smaller, &budget)? {
                    diag = Some(format!(
                        "{:?} is inside, so the listed generator is not minimal",
                        smaller.exponents()
                    ));
                    break 'outer;
                }
            }
        }
        Ok(diag)
    })())
}

pub fn verify_core(
    ring: &StanleyReisnerRing,
    j: &MonomialIdeal,
    core: &MonomialIdeal,
) -> Result<(), Failure> {
    gated("core is uniformly compatible and inside j", (|| {
        let mut diag = None;
        if !j.sum(ring.defining_ideal()).contains_ideal(core) {
            diag = Some("core escapes j plus the relations".into());
        }
        for e in 1..=2u32 {
            let level = ring.level(e)?;
            let fixed = contraction_ideal(ring, core, level)?;
            if &fixed != &core.sum(ring.defining_ideal()) {
                diag = Some(format!("core moves under the level-{e} contraction"));
            }
        }
        Ok(diag)
    })())
}

pub fn verify_compatible(
    ring: &StanleyReisnerRing,
    c: &MonomialIdeal,
    verdict: bool,
) -> Result<(), Failure> {
    gated("compatibility against a finite-level contraction", (|| {
        let target = c.sum(ring.defining_ideal());
        // Once q exceeds every generator exponent of the target, each
        // minimal generator is its own remainder digit, so fixedness at
        // that single level is equivalent to the verdict. Levels with
        // small q can be fixed points even for incompatible ideals.
        let max_exp = target.max_exponent().max(1);
        let mut e_star = 1u32;
        while ring.p().checked_pow(e_star).map_or(false, |q| q <= max_exp) {
            e_star += 1;
        }
        let mut fixed = contraction_ideal(ring, c, ring.level(e_star)?)? == target;
        if verdict {
            fixed = fixed && contraction_ideal(ring, c, ring.level(1)?)? == target;
        }
        if verdict == fixed {
            Ok(None)
        } else {
            Ok(Some(format!(
                "criterion verdict {verdict} but the level-{e_star} probe says {fixed}"
            )))
        }
    })())
}

/// Brute-force recount of b: expand powers of a in full and test each
/// monomial through the trace route.
fn bf_b(
    ring: &StanleyReisnerRing,
    a: &MonomialIdeal,
    j: &MonomialIdeal,
    level: FrobeniusLevel,
    budget: &OracleBudget,
) -> Result<u64, Error> {
    if ring.n() > budget.max_n {
        return Err(Error::budget(format!(
            "{} variables exceed the brute-force limit of {} (raise {BUDGET_ENV_VAR})",
            ring.n(),
            budget.max_n
        )));
    }
    let q = level.q();
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
        let mut all_inside = true;
        for w in &next {
            if !bf_contraction_trace(ring, j, level, w, budget)? {
                all_inside = false;
                break;
            }
        }
        if next.is_empty() || all_inside {
            return Ok(m - 1);
        }
        if m > cap {
            return Err(Error::internal("brute-force power expansion ran past its cap"));
        }
        power = next;
    }
}

pub fn verify_b(
    ring: &StanleyReisnerRing,
    a: &MonomialIdeal,
    j: &MonomialIdeal,
    level: FrobeniusLevel,
    engine_b: u64,
) -> Result<(), Failure> {
    gated("contraction count against the trace route", (|| {
        let budget = OracleBudget::from_env()?;
        let oracle = bf_b(ring, a, j, level, &budget)?;
        if oracle == engine_b {
            Ok(None)
        } else {
            Ok(Some(format!("engine b = {engine_b}, trace recount = {oracle}")))
        }
    })())
}

pub fn verify_cartier_threshold(
    ring: &StanleyReisnerRing,
    a: &MonomialIdeal,
    j: &MonomialIdeal,
    value: &BigRational,
) -> Result<(), Failure> {
    gated("cartier threshold below the brute-force bracket", (|| {
        let budget = OracleBudget::from_env()?;
        let level = ring.level(budget.max_e)?;
        let bracket = bf_threshold_bracket(ring, a, j, level, &budget)?;
        if value <= &bracket.upper {
            Ok(None)
        } else {
            Ok(Some(format!(
                "value {} exceeds the bracket top {}",
                to_fraction_string(value),
                to_fraction_string(&bracket.upper)
            )))
        }
    })())
}

pub fn verify_cartier_table(
    ring: &StanleyReisnerRing,
    a: &MonomialIdeal,
    j: &MonomialIdeal,
    table: &SandwichTable,
) -> Result<(), Failure> {
    let budget = match OracleBudget::from_env() {
        Ok(b) => b,
        Err(err) => return Err(Failure::Engine(err)),
    };
    for row in &table.rows {
        if row.e > budget.max_e {
            eprintln!("verify: skipped rows past e = {} (budget)", budget.max_e);
            break;
        }
        let level = match ring.level(row.e) {
            Ok(level) => level,
            Err(err) => return Err(Failure::Engine(err)),
        };
        gated(&format!("table row e = {}", row.e), {
            match bf_b(ring, a, j, level, &budget) {
                Ok(oracle) if oracle == row.b => Ok(None),
                Ok(oracle) => Ok(Some(format!("row b = {}, trace recount = {oracle}", row.b))),
                Err(err) => Err(err),
            }
        })?;
    }
    Ok(())
}
