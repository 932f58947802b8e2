//! Acceptance suite: one test per criterion, each printing a single
//! ACCEPTANCE line (visible under --nocapture) and asserting exactly.

use fsr_core::cartier::{cartier_core, cartier_threshold, contraction_contains, contraction_ideal, ct_sandwich_table};
use fsr_core::monomial::{FacePrime, Monomial, MonomialIdeal};
use fsr_core::oracle::{bf_contraction_trace, bf_nu, OracleBudget};
use fsr_core::rational::{ratio, BigRational};
use fsr_core::regularity::{a_invariants_squarefree, regularity_limit, scaled_regularity_at_level};
use fsr_core::ring::StanleyReisnerRing;
use fsr_core::threshold::{convergence_table, f_threshold, nu_value};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn ideal(ambient: usize, rows: &[&[u64]]) -> MonomialIdeal {
    MonomialIdeal::new(ambient, rows.iter().map(|r| Monomial::new(r.to_vec())).collect())
}

fn edge_ring_xy() -> StanleyReisnerRing {
    StanleyReisnerRing::new(names(&["x", "y"]), 2, vec![Monomial::new(vec![1, 1])]).unwrap()
}

fn edge_ring_xyz() -> StanleyReisnerRing {
    StanleyReisnerRing::new(names(&["x", "y", "z"]), 2, vec![Monomial::new(vec![1, 1, 0])])
        .unwrap()
}

fn triangle_ring() -> StanleyReisnerRing {
    StanleyReisnerRing::new(
        names(&["x", "y", "z"]),
        2,
        vec![
            Monomial::new(vec![1, 1, 0]),
            Monomial::new(vec![1, 0, 1]),
            Monomial::new(vec![0, 1, 1]),
        ],
    )
    .unwrap()
}

/// Random ring, target j, and an ideal a with every generator a
/// multiple of a generator of j plus the relations.
fn random_instance(
    rng: &mut ChaCha8Rng,
    max_n: usize,
) -> (StanleyReisnerRing, MonomialIdeal, MonomialIdeal) {
    let n = rng.gen_range(2..=max_n);
    let p = if rng.gen_bool(0.5) { 2 } else { 3 };
    let var_names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let mut rels = Vec::new();
    for _ in 0..rng.gen_range(0..=2) {
        let row: Vec<u64> = (0..n).map(|_| u64::from(rng.gen_bool(0.4))).collect();
        if row.iter().any(|&x| x > 0) {
            rels.push(Monomial::new(row));
        }
    }
    let ring = StanleyReisnerRing::new(var_names, p, rels).unwrap();
    let mut j_gens = Vec::new();
    while j_gens.is_empty() {
        for _ in 0..rng.gen_range(1..=3) {
            let row: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
            if row.iter().any(|&x| x > 0) {
                j_gens.push(Monomial::new(row));
            }
        }
    }
    let j = MonomialIdeal::new(n, j_gens);
    let base = j.sum(ring.defining_ideal()).gens().to_vec();
    let a_gens: Vec<Monomial> = (0..rng.gen_range(1..=3))
        .map(|_| {
            let pick = &base[rng.gen_range(0..base.len())];
            let extra: Vec<u64> = (0..n).map(|_| u64::from(rng.gen_bool(0.3))).collect();
            pick.mul(&Monomial::new(extra))
        })
        .collect();
    (ring, MonomialIdeal::new(n, a_gens), j)
}

#[test]
fn acceptance_criterion_1_exact_f_thresholds() {
    let started = Instant::now();
    let poly = StanleyReisnerRing::polynomial(2, 2).unwrap();
    let c1 = f_threshold(&poly, &ideal(2, &[&[2, 0], &[0, 2]]), &ideal(2, &[&[1, 0], &[0, 1]]))
        .unwrap();
    let first = started.elapsed();
    assert_eq!(c1.value, ratio(1, 1));
    let started = Instant::now();
    let ring = edge_ring_xyz();
    let c2 = f_threshold(&ring, &ideal(3, &[&[1, 0, 1]]), &ideal(3, &[&[1, 0, 0], &[0, 0, 1]]))
        .unwrap();
    let second = started.elapsed();
    assert_eq!(c2.value, ratio(1, 1));
    assert!(first.as_secs_f64() < 1.0, "first threshold took {first:?}");
    assert!(second.as_secs_f64() < 1.0, "second threshold took {second:?}");
    println!("ACCEPTANCE 1: PASS (both thresholds exactly 1, in {first:?} and {second:?})");
}

#[test]
fn acceptance_criterion_2_finite_level_reduction() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xF5_01);
    let budget = OracleBudget::default();
    let mut checked = 0;
    while checked < 120 {
        let (ring, a, j) = random_instance(&mut rng, 4);
        let e = rng.gen_range(0..=2);
        let level = ring.level(e).unwrap();
        let direct = bf_nu(&ring, &a, &j, level, &budget).unwrap();
        // The quotient by a minimal prime is the polynomial ring on the
        // surviving variables; generators touching the prime die.
        let poly = StanleyReisnerRing::new(ring.vars().to_vec(), ring.p(), vec![]).unwrap();
        let through_quotients = ring
            .min_primes()
            .iter()
            .map(|fp| {
                let a_q = a.image_mod_face_prime(fp);
                let j_q = j.image_mod_face_prime(fp);
                bf_nu(&poly, &a_q, &j_q, level, &budget).unwrap()
            })
            .max()
            .unwrap();
        let engine = nu_value(&ring, &a, &j, level).unwrap().nu;
        assert_eq!(direct, through_quotients, "quotient reduction differs from direct count");
        assert_eq!(direct, engine, "engine count differs from brute force");
        checked += 1;
    }
    println!("ACCEPTANCE 2: PASS ({checked} instances, three routes agree)");
}

#[test]
fn acceptance_criterion_3_contraction_dual_route() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xF5_02);
    let budget = OracleBudget { max_degree: 200, ..OracleBudget::default() };
    let mut instances = 0;
    let mut points = 0u64;
    while instances < 50 {
        let (ring, _a, j) = random_instance(&mut rng, 4);
        let n = ring.n();
        let mut e = rng.gen_range(0..=2u32);
        if n == 4 && ring.p() == 3 {
            e = e.min(1);
        }
        let level = ring.level(e).unwrap();
        let side = 2 * level.q();
        let mut beta = vec![0u64; n];
        loop {
            let m = Monomial::new(beta.clone());
            let fast = contraction_contains(&ring, &j, level, &m).unwrap().contained;
            let slow = bf_contraction_trace(&ring, &j, level, &m, &budget).unwrap();
            assert_eq!(fast, slow, "routes disagree at {beta:?} (e = {e})");
            points += 1;
            let mut i = 0;
            while i < n {
                beta[i] += 1;
                if beta[i] < side {
                    break;
                }
                beta[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        instances += 1;
    }
    println!("ACCEPTANCE 3: PASS ({instances} instances, {points} membership queries agree)");
}

#[test]
fn acceptance_criterion_4_contraction_equals_power_plus_core() {
    let rings = vec![
        StanleyReisnerRing::polynomial(1, 2).unwrap(),
        StanleyReisnerRing::polynomial(2, 3).unwrap(),
        StanleyReisnerRing::polynomial(3, 2).unwrap(),
        edge_ring_xy(),
        edge_ring_xyz(),
        triangle_ring(),
        StanleyReisnerRing::new(
            names(&["w", "x", "y", "z"]),
            3,
            vec![Monomial::new(vec![1, 1, 0, 0]), Monomial::new(vec![0, 0, 1, 1])],
        )
        .unwrap(),
    ];
    let mut primes_checked = 0;
    for ring in &rings {
        let n = ring.n();
        for mask in 0u32..(1 << n) {
            let vars: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let fp = FacePrime::new(n, vars);
            if !fp.contains_ideal(ring.defining_ideal()) {
                continue;
            }
            let prime = fp.as_ideal();
            let core = cartier_core(ring, &prime).unwrap().core;
            for e in 1..=2u32 {
                let level = ring.level(e).unwrap();
                let lhs = contraction_ideal(ring, &prime, level).unwrap();
                let rhs = prime.frobenius_power(level.q()).unwrap().sum(&core);
                assert_eq!(lhs, rhs, "face prime {:?} at e = {e}", fp.vars());
            }
            primes_checked += 1;
        }
    }
    // The recorded fixture: the level-one contraction of the maximal
    // ideal of F_2[x,y,z]/(xy) is (x, y, z^2).
    let ring = edge_ring_xyz();
    let m = ring.maximal_ideal();
    let m1 = contraction_ideal(&ring, &m, ring.level(1).unwrap()).unwrap();
    assert_eq!(m1, ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]));
    let core = cartier_core(&ring, &m).unwrap().core;
    assert_eq!(m1, m.frobenius_power(2).unwrap().sum(&core));
    println!("ACCEPTANCE 4: PASS ({primes_checked} face primes, both levels)");
}

#[test]
fn acceptance_criterion_5_cartier_threshold_fixtures() {
    let ring = edge_ring_xyz();
    let fpt_z = cartier_threshold(
        &ring,
        &ideal(3, &[&[0, 0, 1]]),
        &ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
    )
    .unwrap();
    assert_eq!(fpt_z.value, ratio(1, 1));

    let small = edge_ring_xy();
    let ct_x = cartier_threshold(&small, &ideal(2, &[&[1, 0]]), &ideal(2, &[&[1, 0]])).unwrap();
    assert_eq!(ct_x.value, ratio(0, 1));
    assert!(ct_x.degenerate);

    let a = ideal(3, &[&[1, 0, 1]]);
    let j = ideal(3, &[&[1, 0, 0], &[0, 0, 1]]);
    let ct = cartier_threshold(&ring, &a, &j).unwrap();
    let c = f_threshold(&ring, &a, &j).unwrap();
    assert_eq!(ct.value, ratio(0, 1));
    assert_eq!(c.value, ratio(1, 1));
    assert!(ct.value < c.value, "the gap must be strict");
    println!("ACCEPTANCE 5: PASS (fpt((z)) = 1, ct fixtures 0 with strict gap to c = 1)");
}

#[test]
fn acceptance_criterion_6_sandwich_and_monotonicity() {
    let fixtures: Vec<(StanleyReisnerRing, MonomialIdeal, MonomialIdeal)> = vec![
        (
            edge_ring_xyz(),
            ideal(3, &[&[0, 0, 1]]),
            ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
        ),
        (edge_ring_xyz(), ideal(3, &[&[1, 0, 1]]), ideal(3, &[&[1, 0, 0], &[0, 0, 1]])),
        (edge_ring_xy(), ideal(2, &[&[0, 1]]), ideal(2, &[&[0, 1]])),
        (edge_ring_xy(), ideal(2, &[&[1, 0]]), ideal(2, &[&[1, 0]])),
        (
            StanleyReisnerRing::polynomial(2, 2).unwrap(),
            ideal(2, &[&[2, 0], &[0, 2]]),
            ideal(2, &[&[1, 0], &[0, 1]]),
        ),
        (
            StanleyReisnerRing::polynomial(2, 3).unwrap(),
            ideal(2, &[&[1, 1]]),
            ideal(2, &[&[1, 0], &[0, 1]]),
        ),
        (triangle_ring(), ideal(3, &[&[0, 0, 1]]), ideal(3, &[&[1, 0, 0], &[0, 0, 1]])),
    ];
    for (ring, a, j) in &fixtures {
        let mu = BigRational::from_integer(a.mu().into());
        let sandwich = ct_sandwich_table(ring, a, j, 4).unwrap();
        let mut last_c: Option<BigRational> = None;
        for row in &sandwich.rows {
            let q = BigRational::from_integer(row.q.into());
            let gap = row.c_level.clone() / q.clone() - row.b_scaled.clone();
            assert!(gap >= ratio(0, 1), "count bracket violated at e = {}", row.e);
            assert!(gap <= mu.clone() / q, "count bracket violated at e = {}", row.e);
            if let Some(prev) = last_c {
                assert!(row.c_scaled <= prev, "scaled c increased at e = {}", row.e);
            }
            assert!(sandwich.ct <= row.c_scaled, "ct above a scaled c at e = {}", row.e);
            last_c = Some(row.c_scaled.clone());
        }
        let counts = convergence_table(ring, a, j, 4).unwrap();
        for pair in counts.rows.windows(2) {
            assert!(
                pair[0].scaled <= pair[1].scaled,
                "scaled nu decreased between e = {} and e = {}",
                pair[0].e,
                pair[1].e
            );
        }
    }
    println!("ACCEPTANCE 6: PASS ({} fixtures, e up to 4, zero tolerance)", fixtures.len());
}

#[test]
fn acceptance_criterion_7_regularity_fixture() {
    let ring = edge_ring_xy();
    let j = ideal(2, &[&[1, 0]]);
    let report = regularity_limit(&ring, &j).unwrap();
    assert_eq!(report.limit, 1);
    assert_eq!(report.argmax.len(), 1);
    assert_eq!(report.argmax[0].alpha, vec![1, 0]);
    assert_eq!(report.argmax[0].i, 0);
    assert!(report.i0_flagged);
    let at_four = scaled_regularity_at_level(&ring, &j, ring.level(2).unwrap()).unwrap();
    assert_eq!(at_four, ratio(3, 4), "reg(S/(xy, x^4)) = 3 scales to 3/4");
    let a_edge = a_invariants_squarefree(2, &ideal(2, &[&[1, 1]])).unwrap();
    assert_eq!(a_edge.values[1], Some(0));
    let a_line = a_invariants_squarefree(2, &ideal(2, &[&[1, 0]])).unwrap();
    assert_eq!(a_line.values[1], Some(-1));
    println!("ACCEPTANCE 7: PASS (limit 1 at alpha = (1,0), i = 0; level q = 4 gives 3/4)");
}

#[test]
fn acceptance_criterion_8_regularity_lower_bound() {
    let fixtures: Vec<(StanleyReisnerRing, MonomialIdeal)> = vec![
        (edge_ring_xy(), ideal(2, &[&[1, 0]])),
        (edge_ring_xy(), ideal(2, &[&[0, 1]])),
        (edge_ring_xyz(), ideal(3, &[&[0, 0, 1]])),
        (edge_ring_xyz(), ideal(3, &[&[1, 0, 0], &[0, 0, 1]])),
        (edge_ring_xyz(), ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
        (StanleyReisnerRing::polynomial(2, 2).unwrap(), ideal(2, &[&[1, 0], &[0, 1]])),
        (triangle_ring(), ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
    ];
    for (ring, j) in &fixtures {
        let limit = regularity_limit(ring, j).unwrap().limit;
        let quotient = j.sum(ring.defining_ideal());
        let max_a = a_invariants_squarefree(ring.p(), &quotient)
            .unwrap()
            .max_value()
            .expect("a finite a-invariant");
        let m = ring.maximal_ideal();
        let fpt = cartier_threshold(ring, &m, &m).unwrap().value;
        let bound = ratio(max_a, 1) + fpt.clone();
        assert!(
            ratio(limit, 1) >= bound,
            "limit {limit} below max a {max_a} plus fpt {fpt}"
        );
    }
    println!("ACCEPTANCE 8: PASS ({} fixtures satisfy the lower bound)", fixtures.len());
}

#[test]
fn acceptance_criterion_9_cli_determinism_and_no_floats() {
    use std::process::Command;
    let dir = tempfile::tempdir().unwrap();
    let r1 = dir.path().join("R1.json");
    let r2 = dir.path().join("R2.json");
    std::fs::write(&r1, r#"{"variables": ["x", "y"], "p": 2, "relations": [[1, 1]]}"#).unwrap();
    std::fs::write(&r2, r#"{"variables": ["x", "y", "z"], "p": 2, "relations": [[1, 1, 0]]}"#)
        .unwrap();
    let r1 = r1.to_str().unwrap();
    let r2 = r2.to_str().unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["min-primes", "--ring", r2, "--j", "z"],
        vec!["colon", "--ring", r2, "--j", "x^2*y,z^3", "--g", "z"],
        vec!["intersect", "--ring", r2, "--j", "x", "--k", "y"],
        vec!["frobenius", "--ring", r2, "--j", "x*z^2", "-e", "2"],
        vec!["nu", "--ring", r2, "--a", "z", "--j", "x,y,z", "-e", "2"],
        vec!["threshold", "--ring", r1, "--a", "x", "--j", "x", "--table", "3"],
        vec!["threshold", "--ring", r1, "--a", "x", "--j", "x", "--table", "3", "--csv"],
        vec!["cartier", "contraction", "--ring", r2, "--j", "x,y,z", "-e", "1"],
        vec!["cartier", "contraction", "--ring", r2, "--j", "x,y,z", "-e", "1", "--m", "z^2"],
        vec!["cartier", "core", "--ring", r2, "--j", "x,y,z"],
        vec!["cartier", "compatible", "--ring", r2, "--j", "z"],
        vec!["cartier", "b", "--ring", r2, "--a", "z", "--j", "x,y,z", "-e", "2"],
        vec!["cartier", "threshold", "--ring", r2, "--a", "z", "--j", "x,y,z"],
        vec!["cartier", "table", "--ring", r2, "--a", "z", "--j", "x,y,z", "--emax", "3"],
        vec!["cartier", "table", "--ring", r2, "--a", "z", "--j", "x,y,z", "--emax", "3", "--csv"],
        vec!["reg", "limit", "--ring", r1, "--j", "x"],
        vec!["reg", "table", "--ring", r1, "--j", "x", "--emax", "4"],
        vec!["reg", "table", "--ring", r1, "--j", "x", "--emax", "4", "--csv"],
        vec!["oracle", "nu", "--ring", r1, "--a", "x", "--j", "x", "-e", "2"],
        vec!["oracle", "je", "--ring", r2, "--j", "x,y,z", "-e", "1", "--m", "z"],
        vec!["oracle", "bracket", "--ring", r1, "--a", "y", "--j", "y", "-e", "2"],
    ];
    let mut audited = 0;
    for args in &commands {
        let run = |args: &[&str]| {
            let out = Command::new(env!("CARGO_BIN_EXE_fsr"))
                .args(args)
                .env_remove("FSR_FAULT_INJECT")
                .env_remove("FSR_ORACLE_BUDGET")
                .output()
                .unwrap();
            assert!(out.status.success(), "command {args:?} failed: {:?}", out);
            out.stdout
        };
        let first = run(args);
        let second = run(args);
        assert_eq!(first, second, "output of {args:?} is not byte-identical");
        let text = String::from_utf8(first).unwrap();
        let bytes = text.as_bytes();
        for i in 1..bytes.len().saturating_sub(1) {
            if bytes[i] == b'.' {
                assert!(
                    !(bytes[i - 1].is_ascii_digit() && bytes[i + 1].is_ascii_digit()),
                    "decimal number in output of {args:?}: ...{}...",
                    &text[i.saturating_sub(12)..(i + 12).min(text.len())]
                );
            }
        }
        audited += 1;
    }
    println!("ACCEPTANCE 9: PASS ({audited} commands byte-identical, no decimals)");
}
