//! Frobenius power counts and F-thresholds.
//!
//! `nu_value` counts the largest power of `a` not inside a Frobenius
//! power of `j`, reduced to the polynomial quotients by the minimal
//! primes of the ring. `f_threshold` evaluates the limit of those
//! counts exactly via a family of small linear programs, one per choice
//! of coordinate for each generator of `j`, and cross-checks the result
//! against the level-one count bracket before reporting it.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::rational::{ratio_u, BigRational};
use crate::ring::{FrobeniusLevel, StanleyReisnerRing};
use crate::simplex::{maximize, LpOutcome};
use itertools::Itertools;
use num_traits::Zero;
use std::collections::HashMap;

/// One power count at a fixed Frobenius level.
#[derive(Clone, Debug, PartialEq)]
pub struct NuRecord {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    pub nu: u64,
    pub scaled: BigRational,
    /// Set when `a` vanishes in the ring, forcing the count to zero.
    pub degenerate: bool,
}

/// An F-threshold with its per-minimal-prime breakdown.
#[derive(Clone, Debug, PartialEq)]
pub struct ThresholdReport {
    pub value: BigRational,
    pub degenerate: bool,
    pub per_prime: Vec<PrimeThreshold>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PrimeThreshold {
    pub prime_vars: Vec<usize>,
    pub value: BigRational,
    pub degenerate: bool,
}

/// Power counts for e = 1..=e_max together with the exact limit.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceTable {
    pub mu: u64,
    pub rows: Vec<NuRow>,
    pub limit: BigRational,
    pub bracket_low: BigRational,
    pub bracket_high: BigRational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NuRow {
    pub e: u32,
    pub q: u64,
    pub nu: u64,
    pub scaled: BigRational,
}

/// Largest m with some degree-m product of generators of `a` outside
/// the target, walking only products that are still outside. Products
/// are extended by generators of index at least the last one used, so
/// each multiset is built once; a product inside the target never needs
/// extending because ideals are closed under multiples.
///
/// `bound` must dominate the answer; running past it reports an
/// internal error rather than looping.
pub(crate) fn max_power_outside<F>(a: &MonomialIdeal, mut in_target: F, bound: u64) -> Result<u64>
where
    F: FnMut(&Monomial) -> bool,
{
    let one = Monomial::one(a.ambient());
    if in_target(&one) {
        return Err(Error::precondition("target ideal is the unit ideal"));
    }
    let mut frontier: HashMap<Monomial, usize> = HashMap::new();
    frontier.insert(one, 0);
    let mut m: u64 = 0;
    while !frontier.is_empty() {
        if m > bound {
            return Err(Error::internal(
                "power search ran past its pigeonhole bound",
            ));
        }
        let mut next: HashMap<Monomial, usize> = HashMap::new();
        for (mono, first) in &frontier {
            for (idx, g) in a.gens().iter().enumerate().skip(*first) {
                let prod = mono.mul(g);
                if !in_target(&prod) {
                    next.entry(prod)
                        .and_modify(|e| *e = (*e).min(idx))
                        .or_insert(idx);
                }
            }
        }
        frontier = next;
        m += 1;
    }
    Ok(m - 1)
}

/// Pigeonhole bound for [`max_power_outside`] against any target
/// containing the q-th Frobenius power of `j`: once one generator of
/// `a` appears q * maxexp(j) + 1 times, its multiples land inside.
pub(crate) fn power_search_bound(a: &MonomialIdeal, j: &MonomialIdeal, q: u64) -> Result<u64> {
    let per_gen = q
        .checked_mul(j.max_exponent())
        .and_then(|v| v.checked_add(1))
        .ok_or_else(|| Error::precondition("power search bound overflows u64"))?;
    a.mu()
        .checked_mul(per_gen)
        .and_then(|v| v.checked_add(1))
        .ok_or_else(|| Error::precondition("power search bound overflows u64"))
}

fn check_ambients(ring: &StanleyReisnerRing, ideals: &[&MonomialIdeal]) -> Result<()> {
    for ideal in ideals {
        if ideal.ambient() != ring.n() {
            return Err(Error::input(format!(
                "ideal lives in {} variables, ring has {}",
                ideal.ambient(),
                ring.n()
            )));
        }
    }
    Ok(())
}

/// Checks a is inside the radical of target (both in the same ambient).
fn inside_radical(a: &MonomialIdeal, target: &MonomialIdeal) -> bool {
    let rad = target.radical();
    a.gens().iter().all(|g| rad.contains(&g.radical()))
}

pub(crate) fn require_standard_inputs(
    ring: &StanleyReisnerRing,
    a: &MonomialIdeal,
    j: &MonomialIdeal,
) -> Result<MonomialIdeal> {
    check_ambients(ring, &[a, j])?;
    let j_plus_i = j.sum(ring.defining_ideal());
    if !j_plus_i.is_proper() {
        return Err(Error::precondition("j must be proper in the ring"));
    }
    if !inside_radical(a, &j_plus_i) {
        return Err(Error::precondition(
            "a must be contained in the radical of j in the ring",
        ));
    }
    Ok(j_plus_i)
}

/// The count at one level, maximized over the polynomial quotients by
/// the minimal primes of the ring.
pub fn nu_value(
    ring: &StanleyReisnerRing,
    a: &MonomialIdeal,
    j: &MonomialIdeal,
    level: FrobeniusLevel,
) -> Result<NuRecord> {
    require_standard_inputs(ring, a, j)?;
    let q = level.q();
    let mut nu: u64 = 0;
    let mut degenerate = true;
    for prime in ring.min_primes() {
        let a_p = a.image_mod_face_prime(prime);
        if a_p.is_zero() {
            continue;
        }
        degenerate = false;
        let j_p = j.image_mod_face_prime(prime);
        if j_p.is_zero() {
            return Err(Error::internal(
                "radical containment left an empty target in a quotient",
            ));
        }
        let target = j_p.frobenius_power(q)?;
        let bound = power_search_bound(&a_p, &j_p, q)?;
        let value = max_power_outside(&a_p, |m| target.contains(m), bound)?;
        nu = nu.max(value);
    }
    Ok(NuRecord {
        p: level.p(),
        e: level.e(),
        q,
        nu,
        scaled: ratio_u(nu, q),
        degenerate,
    })
}

/// Exact limit of scaled counts in a polynomial ring, as the best value
/// over all ways of charging each generator of `j` to one coordinate of
/// its support: for a fixed choice, the products of `a`-generators
/// escaping all Frobenius powers are cut out by one linear constraint
/// per generator of `j`, and the limit is the optimum of the resulting
/// program. Requires a and j nonzero, j proper, a inside rad(j).
pub fn disjunctive_lp_value(a: &MonomialIdeal, j: &MonomialIdeal) -> Result<BigRational> {
    if a.is_zero() {
        return Err(Error::precondition("a must be nonzero"));
    }
    if j.is_zero() || j.is_unit() {
        return Err(Error::precondition("j must be nonzero and proper"));
    }
    if !inside_radical(a, j) {
        return Err(Error::precondition(
            "a must be contained in the radical of j",
        ));
    }
    let a_gens = a.gens();
    let objective: Vec<BigRational> = vec![ratio_u(1, 1); a_gens.len()];
    let supports: Vec<Vec<usize>> = j.gens().iter().map(Monomial::support).collect();
    let mut best: Option<BigRational> = None;
    for selection in supports.iter().multi_cartesian_product() {
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(selection.len());
        let mut rhs: Vec<BigRational> = Vec::with_capacity(selection.len());
        for (gen, coord) in j.gens().iter().zip(selection.iter()) {
            let i = **coord;
            rows.push(
                a_gens
                    .iter()
                    .map(|u| ratio_u(u.exponents()[i], 1))
                    .collect(),
            );
            rhs.push(ratio_u(gen.exponents()[i], 1));
        }
        match maximize(&objective, &rows, &rhs) {
            LpOutcome::Optimal { value, .. } => {
                if best.as_ref().map_or(true, |b| value > *b) {
                    best = Some(value);
                }
            }
            LpOutcome::Unbounded => {
                return Err(Error::internal(
                    "threshold program unbounded despite radical containment",
                ));
            }
        }
    }
    best.ok_or_else(|| Error::internal("no coordinate selection was available"))
}

/// The F-threshold of `a` with respect to `j` in the ring, maximized
/// over the polynomial quotients by the minimal primes. Every reported
/// value is checked against the level-one bracket nu(1) <= c <= nu(1) + mu.
pub fn f_threshold(
    ring: &StanleyReisnerRing,
    a: &MonomialIdeal,
    j: &MonomialIdeal,
) -> Result<ThresholdReport> {
    require_standard_inputs(ring, a, j)?;
    let mut per_prime = Vec::new();
    let mut value = BigRational::zero();
    let mut degenerate = true;
    for prime in ring.min_primes() {
        let a_p = a.image_mod_face_prime(prime);
        if a_p.is_zero() {
            per_prime.push(PrimeThreshold {
                prime_vars: prime.vars().to_vec(),
                value: BigRational::zero(),
                degenerate: true,
            });
            continue;
        }
        degenerate = false;
        let j_p = j.image_mod_face_prime(prime);
        if j_p.is_zero() {
            return Err(Error::internal(
                "radical containment left an empty target in a quotient",
            ));
        }
        let c = disjunctive_lp_value(&a_p, &j_p)?;
        let bound = power_search_bound(&a_p, &j_p, 1)?;
        let nu_one = max_power_outside(&a_p, |m| j_p.contains(m), bound)?;
        let low = ratio_u(nu_one, 1);
        let high = ratio_u(nu_one + a_p.mu(), 1);
        if c < low || c > high {
            return Err(Error::internal(
                "threshold program escaped the level-one count bracket",
            ));
        }
        if c > value {
            value = c.clone();
        }
        per_prime.push(PrimeThreshold {
            prime_vars: prime.vars().to_vec(),
            value: c,
            degenerate: false,
        });
    }
    Ok(ThresholdReport { value, degenerate, per_prime })
}

/// Counts for e = 1..=e_max next to the exact limit, with the scaling
/// and bracket laws enforced on every row.
pub fn convergence_table(
    ring: &StanleyReisnerRing,
    a: &MonomialIdeal,
    j: &MonomialIdeal,
    e_max: u32,
) -> Result<ConvergenceTable> {
    if e_max == 0 {
        return Err(Error::input("table needs e_max >= 1"));
    }
    let report = f_threshold(ring, a, j)?;
    let limit = report.value;
    let mu = a.mu();
    let mut rows: Vec<NuRow> = Vec::new();
    for e in 1..=e_max {
        let level = ring.level(e)?;
        let record = nu_value(ring, a, j, level)?;
        if let Some(prev) = rows.last() {
            if prev.nu.saturating_mul(level.p()) > record.nu {
                return Err(Error::internal(
                    "count table violates the p-scaling inequality",
                ));
            }
        }
        let upper = &record.scaled + ratio_u(mu, record.q);
        if record.scaled > limit || limit > upper {
            return Err(Error::internal("limit escaped the count bracket"));
        }
        rows.push(NuRow {
            e,
            q: record.q,
            nu: record.nu,
            scaled: record.scaled,
        });
    }
    let last = rows.last().expect("e_max >= 1");
    let bracket_low = last.scaled.clone();
    let bracket_high = &last.scaled + ratio_u(mu, last.q);
    Ok(ConvergenceTable { mu, rows, limit, bracket_low, bracket_high })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn poly(n: usize, p: u64) -> StanleyReisnerRing {
        StanleyReisnerRing::polynomial(n, p).unwrap()
    }

    fn ideal(ambient: usize, rows: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::new(ambient, rows.iter().map(|r| Monomial::new(r.to_vec())).collect())
    }

    #[test]
    fn nu_of_maximal_ideal_square_pair() {
        // a = (x^2, y^2), j = (x, y) in F_2[x, y]. At q = 2 every
        // generator of a already sits inside (x^2, y^2), so the count is
        // zero; at q = 4 the product x^2 y^2 escapes (x^4, y^4) but every
        // triple product lands inside, so the count is two.
        let ring = poly(2, 2);
        let a = ideal(2, &[&[2, 0], &[0, 2]]);
        let j = ideal(2, &[&[1, 0], &[0, 1]]);
        let rec = nu_value(&ring, &a, &j, ring.level(1).unwrap()).unwrap();
        assert_eq!(rec.nu, 0);
        let rec = nu_value(&ring, &a, &j, ring.level(2).unwrap()).unwrap();
        assert_eq!(rec.nu, 2);
        assert_eq!(rec.scaled, ratio(1, 2));
        assert!(!rec.degenerate);
    }

    #[test]
    fn nu_in_a_quotient_takes_the_best_prime() {
        // In F_2[x,y,z]/(xy) with a = (xz), j = (x, z): mod (y) the pair
        // is (xz) against (x, z); mod (x) the image of a vanishes.
        let ring = StanleyReisnerRing::new(
            vec!["x".into(), "y".into(), "z".into()],
            2,
            vec![Monomial::new(vec![1, 1, 0])],
        )
        .unwrap();
        let a = ideal(3, &[&[1, 0, 1]]);
        let j = ideal(3, &[&[1, 0, 0], &[0, 0, 1]]);
        let rec = nu_value(&ring, &a, &j, ring.level(1).unwrap()).unwrap();
        assert_eq!(rec.nu, 1);
        assert!(!rec.degenerate);
    }

    #[test]
    fn nu_degenerate_when_a_vanishes() {
        // a = (xy) is zero in F_2[x,y]/(xy).
        let ring = StanleyReisnerRing::new(
            vec!["x".into(), "y".into()],
            2,
            vec![Monomial::new(vec![1, 1])],
        )
        .unwrap();
        let a = ideal(2, &[&[1, 1]]);
        let j = ideal(2, &[&[1, 0]]);
        let rec = nu_value(&ring, &a, &j, ring.level(2).unwrap()).unwrap();
        assert_eq!(rec.nu, 0);
        assert!(rec.degenerate);
    }

    #[test]
    fn nu_rejects_bad_inputs() {
        let ring = poly(2, 2);
        let a = ideal(2, &[&[1, 0]]);
        // j unit in the ring.
        let unit = MonomialIdeal::unit(2);
        assert!(nu_value(&ring, &a, &unit, ring.level(1).unwrap()).is_err());
        // a outside rad(j): a = (x), j = (y).
        let j = ideal(2, &[&[0, 1]]);
        assert!(nu_value(&ring, &a, &j, ring.level(1).unwrap()).is_err());
    }

    #[test]
    fn lp_value_for_squares_pair() {
        let a = ideal(2, &[&[2, 0], &[0, 2]]);
        let j = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(disjunctive_lp_value(&a, &j).unwrap(), ratio(1, 1));
    }

    #[test]
    fn lp_value_for_principal_pair() {
        // a = (xy), j = (x): the only charge is to x, giving 1/1.
        let a = ideal(2, &[&[1, 1]]);
        let j = ideal(2, &[&[1, 0]]);
        assert_eq!(disjunctive_lp_value(&a, &j).unwrap(), ratio(1, 1));
        // a = (x^2), j = (x): value 1/2.
        let a = ideal(2, &[&[2, 0]]);
        assert_eq!(disjunctive_lp_value(&a, &j).unwrap(), ratio(1, 2));
    }

    #[test]
    fn lp_needs_radical_containment() {
        let a = ideal(2, &[&[1, 0]]);
        let j = ideal(2, &[&[0, 1]]);
        assert!(disjunctive_lp_value(&a, &j).is_err());
    }

    #[test]
    fn threshold_of_squares_is_one() {
        let ring = poly(2, 2);
        let a = ideal(2, &[&[2, 0], &[0, 2]]);
        let j = ideal(2, &[&[1, 0], &[0, 1]]);
        let report = f_threshold(&ring, &a, &j).unwrap();
        assert_eq!(report.value, ratio(1, 1));
        assert!(!report.degenerate);
    }

    #[test]
    fn threshold_in_quotient_ring() {
        let ring = StanleyReisnerRing::new(
            vec!["x".into(), "y".into(), "z".into()],
            2,
            vec![Monomial::new(vec![1, 1, 0])],
        )
        .unwrap();
        let a = ideal(3, &[&[1, 0, 1]]);
        let j = ideal(3, &[&[1, 0, 0], &[0, 0, 1]]);
        let report = f_threshold(&ring, &a, &j).unwrap();
        assert_eq!(report.value, ratio(1, 1));
        // The (x)-quotient kills a, the (y)-quotient carries the value.
        assert_eq!(report.per_prime.len(), 2);
        assert!(report.per_prime.iter().any(|p| p.degenerate));
    }

    #[test]
    fn convergence_rows_scale_up() {
        let ring = poly(2, 3);
        let a = ideal(2, &[&[1, 1]]);
        let j = ideal(2, &[&[1, 0], &[0, 1]]);
        let table = convergence_table(&ring, &a, &j, 3).unwrap();
        assert_eq!(table.rows.len(), 3);
        for pair in table.rows.windows(2) {
            assert!(pair[1].scaled >= pair[0].scaled);
        }
        assert!(table.bracket_low <= table.limit && table.limit <= table.bracket_high);
    }
}
