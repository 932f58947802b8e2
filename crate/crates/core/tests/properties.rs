//! Law-based and differential property tests.
//!
//! The expensive engines are checked against brute-force second
//! opinions on small random instances, and the cheap algebra against
//! the identities it must satisfy. Instance sizes are kept tiny so the
//! whole file stays fast; the acceptance suite drives larger counts.

use fsr_core::cartier::{
    b_value, cartier_core, cartier_threshold, contraction_contains, contraction_ideal,
    is_uniformly_compatible,
};
use fsr_core::complex::complex_of_ideal;
use fsr_core::monomial::{FacePrime, Monomial, MonomialIdeal};
use fsr_core::oracle::{bf_contraction_trace, bf_nu, OracleBudget};
use fsr_core::rational::{ratio, ratio_u};
use fsr_core::regularity::{a_invariants_squarefree, regularity_limit, scaled_regularity_at_level};
use fsr_core::ring::StanleyReisnerRing;
use fsr_core::threshold::{disjunctive_lp_value, f_threshold, nu_value};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn monomials(n: usize, max_exp: u64, max_gens: usize) -> impl Strategy<Value = Vec<Monomial>> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 0..=max_gens)
        .prop_map(|rows| rows.into_iter().map(Monomial::new).collect())
}

fn arb_ideal(n: usize, max_exp: u64, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    monomials(n, max_exp, max_gens).prop_map(move |gens| MonomialIdeal::new(n, gens))
}

fn arb_monomial(n: usize, max_exp: u64) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(Monomial::new)
}

fn arb_ring(n: usize) -> impl Strategy<Value = StanleyReisnerRing> {
    (
        prop_oneof![Just(2u64), Just(3)],
        prop::collection::vec(prop::collection::vec(0..=1u64, n), 0..=2),
    )
        .prop_map(move |(p, rows)| {
            let rels: Vec<Monomial> = rows
                .into_iter()
                .filter(|r| r.iter().any(|&x| x > 0))
                .map(Monomial::new)
                .collect();
            StanleyReisnerRing::new(names(n), p, rels).expect("valid ring")
        })
}

/// A ring with a nonzero proper target j and an ideal a whose radical
/// lies inside the radical of j plus the relations, by construction:
/// every generator of a is a multiple of some generator of the target.
fn arb_instance(
    n: usize,
) -> impl Strategy<Value = (StanleyReisnerRing, MonomialIdeal, MonomialIdeal)> {
    (
        arb_ring(n),
        prop::collection::vec(prop::collection::vec(0..=2u64, n), 1..=2),
        prop::collection::vec(
            (any::<prop::sample::Index>(), prop::collection::vec(0..=1u64, n)),
            1..=2,
        ),
    )
        .prop_filter_map("needs a nonzero target", move |(ring, j_rows, picks)| {
            let j_gens: Vec<Monomial> = j_rows
                .into_iter()
                .filter(|r| r.iter().any(|&x| x > 0))
                .map(Monomial::new)
                .collect();
            if j_gens.is_empty() {
                return None;
            }
            let j = MonomialIdeal::new(n, j_gens);
            let full = j.sum(ring.defining_ideal());
            let base = full.gens().to_vec();
            let a_gens: Vec<Monomial> = picks
                .into_iter()
                .map(|(idx, extra)| base[idx.index(base.len())].mul(&Monomial::new(extra)))
                .collect();
            let a = MonomialIdeal::new(n, a_gens);
            Some((ring, a, j))
        })
}

proptest! {
    #[test]
    fn intersection_agrees_with_membership(
        a in arb_ideal(3, 2, 3),
        b in arb_ideal(3, 2, 3),
        probe in arb_monomial(3, 4),
    ) {
        let both = a.intersect(&b);
        prop_assert_eq!(both.contains(&probe), a.contains(&probe) && b.contains(&probe));
    }

    #[test]
    fn colon_by_a_monomial_is_division(
        a in arb_ideal(3, 2, 3),
        g in arb_monomial(3, 2),
        probe in arb_monomial(3, 4),
    ) {
        let colon = a.colon_monomial(&g);
        prop_assert_eq!(colon.contains(&probe), a.contains(&probe.mul(&g)));
    }

    #[test]
    fn colon_iterates_over_products(
        a in arb_ideal(3, 2, 3),
        g in arb_monomial(3, 2),
        h in arb_monomial(3, 2),
    ) {
        let at_once = a.colon_monomial(&g.mul(&h));
        let stepwise = a.colon_monomial(&g).colon_monomial(&h);
        prop_assert_eq!(at_once, stepwise);
    }

    #[test]
    fn frobenius_commutes_with_intersection(
        a in arb_ideal(3, 2, 3),
        b in arb_ideal(3, 2, 3),
        q in prop_oneof![Just(2u64), Just(3), Just(4)],
    ) {
        let lhs = a.intersect(&b).frobenius_power(q).unwrap();
        let rhs = a.frobenius_power(q).unwrap().intersect(&b.frobenius_power(q).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn minimal_primes_meet_in_the_radical(a in arb_ideal(4, 2, 3)) {
        prop_assume!(a.is_proper());
        let primes = a.minimal_primes().unwrap();
        let mut meet = MonomialIdeal::unit(4);
        for fp in &primes {
            meet = meet.intersect(&fp.as_ideal());
        }
        prop_assert_eq!(meet, a.radical());
        for (i, fst) in primes.iter().enumerate() {
            for snd in &primes[i + 1..] {
                let fst_in_snd = fst.vars().iter().all(|v| snd.vars().contains(v));
                let snd_in_fst = snd.vars().iter().all(|v| fst.vars().contains(v));
                prop_assert!(!fst_in_snd && !snd_in_fst);
            }
        }
    }

    #[test]
    fn face_prime_quotients_have_one_corner_a_invariant(
        vars in prop::collection::btree_set(0usize..4, 0..=3),
        p in prop_oneof![Just(2u64), Just(3)],
    ) {
        // S/P is a polynomial ring on the complement, so only the top
        // local cohomology survives, in degree minus its dimension.
        let fp = FacePrime::new(4, vars.into_iter().collect());
        let table = a_invariants_squarefree(p, &fp.as_ideal()).unwrap();
        let d = 4 - fp.vars().len();
        for (i, value) in table.values.iter().enumerate() {
            if i == d {
                prop_assert_eq!(*value, Some(-(d as i64)));
            } else {
                prop_assert_eq!(*value, None);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn nu_agrees_with_brute_force(
        (ring, a, j) in arb_instance(3),
        e in 0..=2u32,
    ) {
        let level = ring.level(e).unwrap();
        let record = nu_value(&ring, &a, &j, level).unwrap();
        let oracle = bf_nu(&ring, &a, &j, level, &OracleBudget::default()).unwrap();
        prop_assert_eq!(record.nu, oracle);
    }

    #[test]
    fn scaled_nu_is_non_decreasing((ring, a, j) in arb_instance(3), e in 0..=1u32) {
        let low = nu_value(&ring, &a, &j, ring.level(e).unwrap()).unwrap();
        let high = nu_value(&ring, &a, &j, ring.level(e + 1).unwrap()).unwrap();
        prop_assert!(ring.p() * low.nu <= high.nu);
    }

    #[test]
    fn threshold_sits_in_every_level_bracket((ring, a, j) in arb_instance(3)) {
        let c = f_threshold(&ring, &a, &j).unwrap().value;
        for e in 1..=2u32 {
            let level = ring.level(e).unwrap();
            let nu = nu_value(&ring, &a, &j, level).unwrap().nu;
            let q = level.q();
            prop_assert!(ratio_u(nu, q) <= c);
            prop_assert!(c <= ratio_u(nu + a.mu(), q));
        }
    }

    #[test]
    fn lp_value_scales_under_bracket_powers(
        j in arb_ideal(3, 2, 2),
        picks in prop::collection::vec(
            (any::<prop::sample::Index>(), prop::collection::vec(0..=1u64, 3)),
            1..=2,
        ),
        p in prop_oneof![Just(2u64), Just(3)],
    ) {
        prop_assume!(!j.is_zero() && j.is_proper());
        prop_assume!(j.gens().iter().all(|g| !g.is_one()));
        let base = j.gens().to_vec();
        let a_gens: Vec<Monomial> = picks
            .into_iter()
            .map(|(idx, extra)| base[idx.index(base.len())].mul(&Monomial::new(extra)))
            .collect();
        let a = MonomialIdeal::new(3, a_gens);
        let plain = disjunctive_lp_value(&a, &j).unwrap();
        let bracket = disjunctive_lp_value(&a, &j.frobenius_power(p).unwrap()).unwrap();
        prop_assert_eq!(bracket, ratio(p as i64, 1) * plain);
    }

    #[test]
    fn contraction_is_sandwiched((ring, _a, j) in arb_instance(3), e in 1..=2u32) {
        let level = ring.level(e).unwrap();
        let je = contraction_ideal(&ring, &j, level).unwrap();
        let full = j.sum(ring.defining_ideal());
        let floor = j.frobenius_power(level.q()).unwrap().sum(ring.defining_ideal());
        prop_assert!(je.contains_ideal(&floor));
        prop_assert!(full.contains_ideal(&je));
    }

    #[test]
    fn contraction_respects_intersections(
        (ring, _a, j1) in arb_instance(3),
        j2_rows in prop::collection::vec(prop::collection::vec(0..=2u64, 3), 1..=2),
        e in 1..=2u32,
    ) {
        let j2_gens: Vec<Monomial> = j2_rows
            .into_iter()
            .filter(|r| r.iter().any(|&x| x > 0))
            .map(Monomial::new)
            .collect();
        prop_assume!(!j2_gens.is_empty());
        let j2 = MonomialIdeal::new(3, j2_gens);
        let level = ring.level(e).unwrap();
        let lhs = contraction_ideal(&ring, &j1.intersect(&j2), level).unwrap();
        let rhs = contraction_ideal(&ring, &j1, level)
            .unwrap()
            .intersect(&contraction_ideal(&ring, &j2, level).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn contraction_towers_upward((ring, _a, j) in arb_instance(3)) {
        // The p-th bracket power of the level-e contraction sits inside
        // the level-(e+1) contraction.
        let p = ring.p();
        let low = contraction_ideal(&ring, &j, ring.level(1).unwrap()).unwrap();
        let high = contraction_ideal(&ring, &j, ring.level(2).unwrap()).unwrap();
        prop_assert!(high.contains_ideal(&low.frobenius_power(p).unwrap()));
    }

    #[test]
    fn membership_route_matches_contraction_ideal(
        (ring, _a, j) in arb_instance(3),
        e in 1..=2u32,
        beta in arb_monomial(3, 5),
    ) {
        let level = ring.level(e).unwrap();
        let je = contraction_ideal(&ring, &j, level).unwrap();
        let query = contraction_contains(&ring, &j, level, &beta).unwrap();
        prop_assert_eq!(query.contained, je.contains(&beta));
    }

    #[test]
    fn membership_route_matches_trace_route(
        (ring, _a, j) in arb_instance(3),
        e in 0..=2u32,
        beta in arb_monomial(3, 5),
    ) {
        let level = ring.level(e).unwrap();
        let query = contraction_contains(&ring, &j, level, &beta).unwrap();
        let trace = bf_contraction_trace(&ring, &j, level, &beta, &OracleBudget::default()).unwrap();
        prop_assert_eq!(query.contained, trace);
    }

    #[test]
    fn count_against_contraction_stays_below_nu((ring, a, j) in arb_instance(3), e in 0..=2u32) {
        let level = ring.level(e).unwrap();
        let b = b_value(&ring, &a, &j, level).unwrap();
        let nu = nu_value(&ring, &a, &j, level).unwrap();
        prop_assert!(b.b <= nu.nu);
    }

    #[test]
    fn compatibility_matches_the_fixed_point_probe((ring, _a, c) in arb_instance(3)) {
        let report = is_uniformly_compatible(&ring, &c).unwrap();
        let target = c.sum(ring.defining_ideal());
        // Fixedness at one level with q larger than every exponent of
        // the target is equivalent to uniform compatibility.
        let max_exp = target.max_exponent().max(1);
        let mut e_star = 1u32;
        while ring.p().pow(e_star) <= max_exp {
            e_star += 1;
        }
        let fixed = contraction_ideal(&ring, &c, ring.level(e_star).unwrap()).unwrap() == target;
        prop_assert_eq!(report.compatible, fixed);
    }

    #[test]
    fn cores_are_compatible_and_dominated((ring, _a, c) in arb_instance(3)) {
        let core = cartier_core(&ring, &c).unwrap().core;
        prop_assert!(c.sum(ring.defining_ideal()).contains_ideal(&core));
        prop_assert!(core.contains_ideal(ring.defining_ideal()));
        prop_assert!(is_uniformly_compatible(&ring, &core).unwrap().compatible);
    }

    #[test]
    fn cartier_threshold_is_dominated_by_the_f_threshold((ring, a, j) in arb_instance(3)) {
        let ct = cartier_threshold(&ring, &a, &j).unwrap().value;
        let c = f_threshold(&ring, &a, &j).unwrap().value;
        prop_assert!(ct <= c);
    }

    #[test]
    fn scaled_regularity_approaches_the_limit(
        ring in arb_ring(3),
        j_rows in prop::collection::vec(prop::collection::vec(0..=1u64, 3), 0..=2),
    ) {
        let j = MonomialIdeal::new(
            3,
            j_rows
                .into_iter()
                .filter(|r| r.iter().any(|&x| x > 0))
                .map(Monomial::new)
                .collect(),
        );
        prop_assume!(j.sum(ring.defining_ideal()).is_proper());
        let report = regularity_limit(&ring, &j).unwrap();
        let limit = ratio(report.limit, 1);
        for e in 1..=2u32 {
            let level = ring.level(e).unwrap();
            let scaled = scaled_regularity_at_level(&ring, &j, level).unwrap();
            let gap = if scaled > limit { scaled - limit.clone() } else { limit.clone() - scaled };
            prop_assert!(gap <= ratio(3, level.q() as i64));
        }
    }

    #[test]
    fn euler_characteristic_is_independent_of_the_ranks(seed in arb_ideal(4, 1, 3)) {
        prop_assume!(seed.is_proper());
        let complex = complex_of_ideal(&seed.radical()).unwrap();
        let mut by_dim: BTreeMap<i64, i64> = BTreeMap::new();
        for f in complex.faces() {
            *by_dim.entry(f.len() as i64 - 1).or_default() += 1;
        }
        let chi_faces: i64 =
            by_dim.iter().map(|(&d, &c)| if d % 2 == 0 { c } else { -c }).sum();
        for p in [2u64, 3] {
            let ranks = complex.reduced_cohomology_ranks(p).unwrap();
            let chi: i64 = ranks
                .iter()
                .map(|(&d, &r)| if d % 2 == 0 { r as i64 } else { -(r as i64) })
                .sum();
            prop_assert_eq!(chi, chi_faces);
        }
    }
}
