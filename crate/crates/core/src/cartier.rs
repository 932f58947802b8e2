//! Cartier contractions, compatible ideals, cores, and Cartier thresholds.
//!
//! Membership of x^beta in the level-e contraction of j splits beta as
//! q*theta + alpha with alpha componentwise below q = p^e. Only the
//! support N of alpha matters: writing D_N = (I : (I : x^N)), the
//! monomial lies in the contraction exactly when x^theta * D_N sits
//! inside j + I. Everything else in this module is bookkeeping around
//! that rule: the full contraction ideal collects the minimal such
//! beta over every support class, compatibility specializes the rule to
//! theta = 0 at the minimal generators, and the core iterates the
//! compatibility test to a greatest fixed point.

use crate::error::{Error, Result};
use crate::monomial::{FacePrime, Monomial, MonomialIdeal, MAX_ENUM_VARS};
use crate::rational::{ratio_u, BigRational};
use crate::ring::{FrobeniusLevel, StanleyReisnerRing};
use crate::threshold::{f_threshold, max_power_outside, require_standard_inputs, power_search_bound};
use num_traits::Zero;
use std::collections::HashMap;

/// Memoized support colons D_N = (I : (I : x^N)); the unit ideal when
/// the ring is a polynomial ring.
pub(crate) struct ColonCache {
    defining: MonomialIdeal,
    map: HashMap<Vec<usize>, MonomialIdeal>,
}

impl ColonCache {
    pub(crate) fn new(ring: &StanleyReisnerRing) -> Self {
        ColonCache {
            defining: ring.defining_ideal().clone(),
            map: HashMap::new(),
        }
    }

    pub(crate) fn support_colon(&mut self, support: &[usize]) -> &MonomialIdeal {
        let key = support.to_vec();
        let defining = &self.defining;
        self.map.entry(key).or_insert_with(|| {
            if defining.is_zero() {
                return MonomialIdeal::unit(defining.ambient());
            }
            let mut exps = vec![0u64; defining.ambient()];
            for &i in support {
                exps[i] = 1;
            }
            let inner = defining.colon_monomial(&Monomial::new(exps));
            defining
                .colon(&inner)
                .expect("colon of a nonzero ideal is nonzero")
        })
    }
}

/// A resolved contraction membership query.
#[derive(Clone, Debug, PartialEq)]
pub struct ContractionQuery {
    pub beta: Monomial,
    pub theta: Monomial,
    pub alpha: Monomial,
    pub support: Vec<usize>,
    pub colon_gens: Vec<Monomial>,
    pub contained: bool,
}

/// Does x^beta lie in the level-e contraction of j?
pub fn contraction_contains(
    ring: &StanleyReisnerRing,
    j: &MonomialIdeal,
    level: FrobeniusLevel,
    beta: &Monomial,
) -> Result<ContractionQuery> {
    if j.ambient() != ring.n() || beta.ambient() != ring.n() {
        return Err(Error::input("ambient mismatch between ring, ideal, and monomial"));
    }
    let j_plus_i = j.sum(ring.defining_ideal());
    let (theta, alpha) = beta.div_rem(level.q());
    let support = alpha.support();
    let mut cache = ColonCache::new(ring);
    let colon = cache.support_colon(&support).clone();
    let contained = colon
        .gens()
        .iter()
        .all(|d| j_plus_i.contains(&theta.mul(d)));
    Ok(ContractionQuery {
        beta: beta.clone(),
        theta,
        alpha,
        support,
        colon_gens: colon.gens().to_vec(),
        contained,
    })
}

fn all_supports(n: usize) -> Vec<Vec<usize>> {
    (0u32..(1u32 << n))
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}

fn guard_enumeration(n: usize) -> Result<()> {
    if n > MAX_ENUM_VARS {
        return Err(Error::precondition(format!(
            "support enumeration over {n} variables exceeds the {MAX_ENUM_VARS}-variable limit"
        )));
    }
    Ok(())
}

/// The full level-e contraction ideal of j, as the monomial preimage in
/// the polynomial ring. Each support class N contributes q*theta + 1_N
/// over the minimal theta with x^theta * D_N inside j + I.
pub fn contraction_ideal(
    ring: &StanleyReisnerRing,
    j: &MonomialIdeal,
    level: FrobeniusLevel,
) -> Result<MonomialIdeal> {
    if j.ambient() != ring.n() {
        return Err(Error::input("ideal ambient mismatch"));
    }
    let n = ring.n();
    let j_plus_i = j.sum(ring.defining_ideal());
    let q = level.q();
    if q == 1 {
        return Ok(j_plus_i);
    }
    guard_enumeration(n)?;
    let mut cache = ColonCache::new(ring);
    let mut gens: Vec<Monomial> = Vec::new();
    for support in all_supports(n) {
        let colon = cache.support_colon(&support).clone();
        let class_base = j_plus_i.colon(&colon)?;
        let mut unit_exps = vec![0u64; n];
        for &i in &support {
            unit_exps[i] = 1;
        }
        let unit_part = Monomial::new(unit_exps);
        for theta in class_base.gens() {
            gens.push(theta.pow_scale(q)?.mul(&unit_part));
        }
    }
    Ok(MonomialIdeal::new(n, gens))
}

/// One generator's compatibility check.
#[derive(Clone, Debug, PartialEq)]
pub struct CompatibilityWitness {
    pub gen: Monomial,
    pub colon_gens: Vec<Monomial>,
    pub contained: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompatibilityReport {
    pub compatible: bool,
    pub witnesses: Vec<CompatibilityWitness>,
}

/// Is c uniformly compatible, i.e. fixed by every level's contraction?
/// The level-free criterion: D_N sits inside c + I for the support N of
/// every minimal generator of c + I.
pub fn is_uniformly_compatible(
    ring: &StanleyReisnerRing,
    c: &MonomialIdeal,
) -> Result<CompatibilityReport> {
    if c.ambient() != ring.n() {
        return Err(Error::input("ideal ambient mismatch"));
    }
    let c_plus_i = c.sum(ring.defining_ideal());
    let mut cache = ColonCache::new(ring);
    let mut witnesses = Vec::new();
    let mut compatible = true;
    for gen in c_plus_i.gens() {
        let colon = cache.support_colon(&gen.support()).clone();
        let contained = c_plus_i.contains_ideal(&colon);
        compatible &= contained;
        witnesses.push(CompatibilityWitness {
            gen: gen.clone(),
            colon_gens: colon.gens().to_vec(),
            contained,
        });
    }
    Ok(CompatibilityReport { compatible, witnesses })
}

/// A support removed during the core iteration, with the colon
/// generator that certified the removal.
#[derive(Clone, Debug, PartialEq)]
pub struct RemovedSupport {
    pub support: Vec<usize>,
    pub round: u32,
    pub witness: Monomial,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoreResult {
    pub core: MonomialIdeal,
    pub rounds: u32,
    pub removed: Vec<RemovedSupport>,
    /// Variables that are singleton minimal generators of the core.
    pub splitting_vars: Vec<usize>,
}

/// Greatest uniformly compatible ideal inside c + I.
///
/// The state is the family of variable supports N with x^N currently
/// kept; it starts as every support with x^N in c + I (an upward closed
/// family) and each round simultaneously discards the supports whose
/// colon D_N escapes the ideal spanned by the family. Since D_N only
/// shrinks as N grows, upward closure is preserved, and the first
/// round with no removals is the fixed point.
pub fn cartier_core(ring: &StanleyReisnerRing, c: &MonomialIdeal) -> Result<CoreResult> {
    if c.ambient() != ring.n() {
        return Err(Error::input("ideal ambient mismatch"));
    }
    let n = ring.n();
    guard_enumeration(n)?;
    let c_plus_i = c.sum(ring.defining_ideal());
    let mut cache = ColonCache::new(ring);
    let mut family: Vec<Vec<usize>> = all_supports(n)
        .into_iter()
        .filter(|s| {
            let mut exps = vec![0u64; n];
            for &i in s {
                exps[i] = 1;
            }
            c_plus_i.contains(&Monomial::new(exps))
        })
        .collect();
    let mut removed: Vec<RemovedSupport> = Vec::new();
    let mut rounds: u32 = 0;
    loop {
        let current = MonomialIdeal::new(
            n,
            family
                .iter()
                .map(|s| {
                    let mut exps = vec![0u64; n];
                    for &i in s {
                        exps[i] = 1;
                    }
                    Monomial::new(exps)
                })
                .collect(),
        );
        rounds += 1;
        let mut keep: Vec<Vec<usize>> = Vec::with_capacity(family.len());
        let mut dropped_any = false;
        for support in &family {
            let colon = cache.support_colon(support).clone();
            match colon.gens().iter().find(|d| !current.contains(d)) {
                None => keep.push(support.clone()),
                Some(witness) => {
                    dropped_any = true;
                    removed.push(RemovedSupport {
                        support: support.clone(),
                        round: rounds,
                        witness: witness.clone(),
                    });
                }
            }
        }
        family = keep;
        if !dropped_any {
            let core = current;
            let mut splitting_vars: Vec<usize> = core
                .gens()
                .iter()
                .filter(|g| g.degree() == 1)
                .map(|g| g.support()[0])
                .collect();
            splitting_vars.sort_unstable();
            return Ok(CoreResult { core, rounds, removed, splitting_vars });
        }
    }
}

/// One largest-power count against the level-e contraction.
#[derive(Clone, Debug, PartialEq)]
pub struct BRecord {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    pub b: u64,
    pub scaled: BigRational,
}

/// Largest m with a^m not inside the level-e contraction of j.
pub fn b_value(
    ring: &StanleyReisnerRing,
    a: &MonomialIdeal,
    j: &MonomialIdeal,
    level: FrobeniusLevel,
) -> Result<BRecord> {
    require_standard_inputs(ring, a, j)?;
    let q = level.q();
    let j_plus_i = j.sum(ring.defining_ideal());
    let mut cache = ColonCache::new(ring);
    let bound = power_search_bound(a, j, q)?;
    let b = max_power_outside(
        a,
        |m: &Monomial| {
            let (theta, alpha) = m.div_rem(q);
            let colon = cache.support_colon(&alpha.support());
            colon.gens().iter().all(|d| j_plus_i.contains(&theta.mul(d)))
        },
        bound,
    )?;
    Ok(BRecord { p: level.p(), e: level.e(), q, b, scaled: ratio_u(b, q) })
}

/// Per-minimal-prime trace of a Cartier threshold computation.
#[derive(Clone, Debug, PartialEq)]
pub struct CtPrimeTrace {
    pub prime_vars: Vec<usize>,
    pub local_vars: Vec<String>,
    pub core_gens: Vec<Monomial>,
    /// Splitting variables, as indices into `local_vars`.
    pub splitting_vars: Vec<usize>,
    pub a_in_core: bool,
    pub contribution: BigRational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CtRecord {
    pub value: BigRational,
    /// Set when every localization absorbed a into its core.
    pub degenerate: bool,
    pub per_prime: Vec<CtPrimeTrace>,
}

/// The Cartier threshold of a with respect to j: localize at each
/// minimal prime of j + I, split off the core of the maximal ideal,
/// and measure a's image in the quotient by the splitting variables.
pub fn cartier_threshold(
    ring: &StanleyReisnerRing,
    a: &MonomialIdeal,
    j: &MonomialIdeal,
) -> Result<CtRecord> {
    require_standard_inputs(ring, a, j)?;
    let defining = ring.defining_ideal();
    if a.gens().iter().all(|g| defining.contains(g)) {
        // a vanishes in the ring; every power is zero.
        return Ok(CtRecord {
            value: BigRational::zero(),
            degenerate: true,
            per_prime: Vec::new(),
        });
    }
    let j_plus_i = j.sum(defining);
    let mut per_prime: Vec<CtPrimeTrace> = Vec::new();
    let mut value = BigRational::zero();
    let mut degenerate = true;
    for prime in j_plus_i.minimal_primes()? {
        let loc = ring.localize_at_face_prime(&prime)?;
        let local = &loc.ring;
        let a_local = loc.localize_ideal(a);
        let core_res = cartier_core(local, &local.maximal_ideal())?;
        let a_in_core = core_res.core.contains_ideal(&a_local);
        let contribution = if a_in_core {
            BigRational::zero()
        } else {
            degenerate = false;
            let split: Vec<usize> = core_res.splitting_vars.clone();
            let kept: Vec<usize> = (0..local.n()).filter(|i| !split.contains(i)).collect();
            if kept.is_empty() {
                return Err(Error::internal(
                    "a escaped the core yet every local variable splits",
                ));
            }
            let split_prime = FacePrime::new(local.n(), split.clone());
            let quotient_vars: Vec<String> =
                kept.iter().map(|&i| local.vars()[i].clone()).collect();
            let restrict = |m: &Monomial| -> Monomial {
                Monomial::new(kept.iter().map(|&i| m.exponents()[i]).collect())
            };
            let relations: Vec<Monomial> = core_res
                .core
                .image_mod_face_prime(&split_prime)
                .gens()
                .iter()
                .map(restrict)
                .collect();
            let quotient = StanleyReisnerRing::new(quotient_vars, ring.p(), relations)?;
            let a_bar = MonomialIdeal::new(
                kept.len(),
                a_local
                    .image_mod_face_prime(&split_prime)
                    .gens()
                    .iter()
                    .map(restrict)
                    .collect(),
            );
            if a_bar.is_zero() {
                return Err(Error::internal(
                    "a escaped the core yet vanished in the split quotient",
                ));
            }
            f_threshold(&quotient, &a_bar, &quotient.maximal_ideal())?.value
        };
        if contribution > value {
            value = contribution.clone();
        }
        per_prime.push(CtPrimeTrace {
            prime_vars: prime.vars().to_vec(),
            local_vars: local.vars().to_vec(),
            core_gens: core_res.core.gens().to_vec(),
            splitting_vars: core_res.splitting_vars,
            a_in_core,
            contribution,
        });
    }
    Ok(CtRecord { value, degenerate, per_prime })
}

/// One row of the two-sided approximation table.
#[derive(Clone, Debug, PartialEq)]
pub struct SandwichRow {
    pub e: u32,
    pub q: u64,
    pub b: u64,
    pub b_scaled: BigRational,
    pub c_level: BigRational,
    pub c_scaled: BigRational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SandwichTable {
    pub mu: u64,
    pub rows: Vec<SandwichRow>,
    pub ct: BigRational,
}

/// Rows e = 1..=e_max of counts against the contraction next to the
/// F-threshold of the contraction, with the bracket and monotonicity
/// laws enforced: 0 <= c - b <= mu on every row, c/q non-increasing,
/// and ct below every c/q.
pub fn ct_sandwich_table(
    ring: &StanleyReisnerRing,
    a: &MonomialIdeal,
    j: &MonomialIdeal,
    e_max: u32,
) -> Result<SandwichTable> {
    if e_max == 0 {
        return Err(Error::input("table needs e_max >= 1"));
    }
    require_standard_inputs(ring, a, j)?;
    let ct = cartier_threshold(ring, a, j)?.value;
    let mu = a.mu();
    let mut rows: Vec<SandwichRow> = Vec::new();
    for e in 1..=e_max {
        let level = ring.level(e)?;
        let q = level.q();
        let record = b_value(ring, a, j, level)?;
        let contraction = contraction_ideal(ring, j, level)?;
        let c_level = f_threshold(ring, a, &contraction)?.value;
        let low = ratio_u(record.b, 1);
        let high = ratio_u(record.b + mu, 1);
        if c_level < low || c_level > high {
            return Err(Error::internal(
                "contraction threshold escaped the count bracket",
            ));
        }
        let c_scaled = &c_level / ratio_u(q, 1);
        if let Some(prev) = rows.last() {
            if c_scaled > prev.c_scaled {
                return Err(Error::internal(
                    "scaled contraction thresholds failed to decrease",
                ));
            }
        }
        if ct > c_scaled {
            return Err(Error::internal(
                "Cartier threshold escaped its upper approximant",
            ));
        }
        rows.push(SandwichRow {
            e,
            q,
            b: record.b,
            b_scaled: record.scaled,
            c_level,
            c_scaled,
        });
    }
    Ok(SandwichTable { mu, rows, ct })
}
