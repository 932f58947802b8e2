//! a-invariants of squarefree quotients and the asymptotic regularity
//! of Frobenius powers.
//!
//! The a-invariants come from the combinatorial formula: a_i(S/Q) is
//! the largest -|F| over faces F of the complex of Q whose link has
//! nonvanishing reduced cohomology in degree i - |F| - 1. The scaled
//! regularity of R/J^{[q]} decomposes over supports alpha in {0,1}^n,
//! with the class alpha contributing through the quotient by
//! (I : x^alpha) + J; the limit as q grows keeps only a_i + |alpha|.

use crate::complex::complex_of_ideal;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, MAX_ENUM_VARS};
use crate::rational::{ratio_u, BigRational};
use crate::ring::{is_prime, FrobeniusLevel, StanleyReisnerRing};
use num_traits::Signed;

/// The a-invariants a_0..a_dim of a squarefree quotient S/Q; `None`
/// entries are negative infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInvariantTable {
    pub n: usize,
    pub zero_ring: bool,
    pub dim: Option<usize>,
    pub values: Vec<Option<i64>>,
}

impl AInvariantTable {
    /// Largest finite a-invariant, if any.
    pub fn max_value(&self) -> Option<i64> {
        self.values.iter().flatten().copied().max()
    }
}

/// a-invariants of S/Q for squarefree Q over F_p.
pub fn a_invariants_squarefree(p: u64, q: &MonomialIdeal) -> Result<AInvariantTable> {
    if !is_prime(p) {
        return Err(Error::input(format!("{p} is not prime")));
    }
    if !q.is_squarefree() {
        return Err(Error::precondition(
            "a-invariants need a squarefree ideal",
        ));
    }
    let n = q.ambient();
    if q.is_unit() {
        return Ok(AInvariantTable { n, zero_ring: true, dim: None, values: Vec::new() });
    }
    let complex = complex_of_ideal(q)?;
    let dim_ring = (complex.dim().expect("proper ideal gives a non-void complex") + 1) as usize;
    let mut values: Vec<Option<i64>> = vec![None; dim_ring + 1];
    for face in complex.faces() {
        let size = face.len() as i64;
        let link = complex.link(&face)?;
        for (d, rank) in link.reduced_cohomology_ranks(p)? {
            if rank == 0 {
                continue;
            }
            let i = size + 1 + d;
            if i < 0 || i > dim_ring as i64 {
                return Err(Error::internal("cohomology degree escaped the dimension range"));
            }
            let slot = &mut values[i as usize];
            *slot = Some(slot.map_or(-size, |prev| prev.max(-size)));
        }
    }
    Ok(AInvariantTable { n, zero_ring: false, dim: Some(dim_ring), values })
}

/// One support class: alpha, its size, and the a-invariants of the
/// quotient by (I : x^alpha) + J.
#[derive(Clone, Debug)]
struct AlphaClass {
    alpha: Vec<u64>,
    size: u64,
    table: AInvariantTable,
}

fn alpha_classes(
    ring: &StanleyReisnerRing,
    j: &MonomialIdeal,
) -> Result<Vec<AlphaClass>> {
    let n = ring.n();
    if n > MAX_ENUM_VARS {
        return Err(Error::precondition(format!(
            "support enumeration over {n} variables exceeds the {MAX_ENUM_VARS}-variable limit"
        )));
    }
    if j.ambient() != n {
        return Err(Error::input("ideal ambient mismatch"));
    }
    if !j.is_squarefree() {
        return Err(Error::precondition("regularity needs a squarefree j"));
    }
    let j_plus_i = j.sum(ring.defining_ideal());
    if !j_plus_i.is_proper() {
        return Err(Error::precondition("j must be proper in the ring"));
    }
    let defining = ring.defining_ideal();
    let mut classes = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let alpha: Vec<u64> = (0..n).map(|i| u64::from(mask & (1 << i) != 0)).collect();
        let x_alpha = Monomial::new(alpha.clone());
        let quotient_ideal = defining.colon_monomial(&x_alpha).sum(j);
        if quotient_ideal.is_unit() {
            continue;
        }
        let table = a_invariants_squarefree(ring.p(), &quotient_ideal)?;
        classes.push(AlphaClass {
            size: x_alpha.degree(),
            alpha,
            table,
        });
    }
    Ok(classes)
}

/// A pair attaining the limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArgmaxEntry {
    pub alpha: Vec<u64>,
    pub size: u64,
    pub i: usize,
    pub a_value: i64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScaledLevel {
    pub e: u32,
    pub q: u64,
    pub value: BigRational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegularityLimitReport {
    pub limit: i64,
    pub argmax: Vec<ArgmaxEntry>,
    /// Set when a pair with homological degree 0 attains the limit.
    pub i0_flagged: bool,
    pub finite_levels: Vec<ScaledLevel>,
}

fn scaled_value_from_classes(classes: &[AlphaClass], q: u64) -> Option<BigRational> {
    let mut best: Option<BigRational> = None;
    for class in classes {
        // At q = 1 only the zero class occurs in the decomposition.
        if q == 1 && class.size > 0 {
            continue;
        }
        for (i, slot) in class.table.values.iter().enumerate() {
            let Some(a) = *slot else { continue };
            let value = BigRational::from_integer(a.into())
                + ratio_u(class.size * (q - 1), q)
                + ratio_u(i as u64, q);
            if best.as_ref().map_or(true, |b| value > *b) {
                best = Some(value);
            }
        }
    }
    best
}

/// reg(R/J^{[q]})/q at one level, exactly.
pub fn scaled_regularity_at_level(
    ring: &StanleyReisnerRing,
    j: &MonomialIdeal,
    level: FrobeniusLevel,
) -> Result<BigRational> {
    let classes = alpha_classes(ring, j)?;
    scaled_value_from_classes(&classes, level.q())
        .ok_or_else(|| Error::internal("no support class contributed a value"))
}

/// The limit of reg(R/J^{[q]})/q as q grows, with the attaining pairs
/// and the first few exact levels (e = 0..=3).
pub fn regularity_limit(ring: &StanleyReisnerRing, j: &MonomialIdeal) -> Result<RegularityLimitReport> {
    let classes = alpha_classes(ring, j)?;
    let mut limit: Option<i64> = None;
    for class in &classes {
        if let Some(a) = class.table.max_value() {
            let candidate = a + class.size as i64;
            limit = Some(limit.map_or(candidate, |l: i64| l.max(candidate)));
        }
    }
    let limit = limit.ok_or_else(|| Error::internal("no support class contributed a value"))?;
    let mut argmax = Vec::new();
    let mut i0_flagged = false;
    for class in &classes {
        for (i, slot) in class.table.values.iter().enumerate() {
            let Some(a) = *slot else { continue };
            if a + class.size as i64 == limit {
                i0_flagged |= i == 0;
                argmax.push(ArgmaxEntry {
                    alpha: class.alpha.clone(),
                    size: class.size,
                    i,
                    a_value: a,
                });
            }
        }
    }
    let mut finite_levels = Vec::new();
    for e in 0..=3u32 {
        let level = ring.level(e)?;
        let q = level.q();
        let value = scaled_value_from_classes(&classes, q)
            .ok_or_else(|| Error::internal("no support class contributed a value"))?;
        if q > 1 {
            // Termwise, scaled and limit values differ by at most n/q.
            let gap = (&value - BigRational::from_integer(limit.into())).abs();
            if gap > ratio_u(ring.n() as u64, q) {
                return Err(Error::internal(
                    "scaled regularity strayed farther than n/q from the limit",
                ));
            }
        }
        finite_levels.push(ScaledLevel { e, q, value });
    }
    Ok(RegularityLimitReport { limit, argmax, i0_flagged, finite_levels })
}
