//! Monomials, monomial ideals, and face primes.
//!
//! Exponent vectors are dense `Vec<u64>` over a fixed ambient variable
//! count. Ideals keep a sorted minimal generating set at all times, so
//! structural equality of `MonomialIdeal` values is equality of ideals
//! and printed generator lists are deterministic.

use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Enumerating all variable supports is exponential in the variable
/// count; operations that walk the Boolean lattice refuse beyond this.
pub const MAX_ENUM_VARS: usize = 25;

/// A monomial, stored as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u64>,
}

impl Monomial {
    pub fn new(exps: Vec<u64>) -> Self {
        Monomial { exps }
    }

    /// The unit monomial 1.
    pub fn one(ambient: usize) -> Self {
        Monomial { exps: vec![0; ambient] }
    }

    /// The single variable x_i.
    pub fn variable(ambient: usize, i: usize) -> Self {
        assert!(i < ambient, "variable index out of range");
        let mut exps = vec![0; ambient];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.exps
            .iter()
            .try_fold(0u64, |acc, &e| acc.checked_add(e))
            .expect("monomial degree overflows u64")
    }

    pub fn max_exponent(&self) -> u64 {
        self.exps.iter().copied().max().unwrap_or(0)
    }

    /// Indices of variables with positive exponent, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Support as a bitmask. Callers guard the ambient count first.
    pub fn support_mask(&self) -> u32 {
        assert!(self.ambient() <= 32, "support mask needs at most 32 variables");
        let mut mask = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.ambient(), other.ambient(), "ambient mismatch");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.ambient(), other.ambient(), "ambient mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.ambient(), other.ambient(), "ambient mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflows u64"))
                .collect(),
        }
    }

    /// Componentwise truncated quotient max(self - other, 0), the
    /// generator-level step of a colon by a monomial.
    pub fn quotient_saturating(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.ambient(), other.ambient(), "ambient mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    /// Raises every exponent by the factor q, the generator-level step
    /// of a Frobenius power.
    pub fn pow_scale(&self, q: u64) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&a| {
                a.checked_mul(q)
                    .ok_or_else(|| Error::precondition("Frobenius power exponent overflows u64"))
            })
            .collect::<Result<Vec<u64>>>()?;
        Ok(Monomial { exps })
    }

    pub fn radical(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&a| u64::from(a > 0)).collect(),
        }
    }

    /// Splits beta = q*theta + alpha with alpha componentwise in [0, q).
    pub fn div_rem(&self, q: u64) -> (Monomial, Monomial) {
        assert!(q >= 1, "div_rem needs q >= 1");
        let theta = Monomial {
            exps: self.exps.iter().map(|&a| a / q).collect(),
        };
        let alpha = Monomial {
            exps: self.exps.iter().map(|&a| a % q).collect(),
        };
        (theta, alpha)
    }

    /// Renders with the given variable names, e.g. `x^2*z`.
    pub fn pretty(&self, vars: &[String]) -> String {
        assert_eq!(vars.len(), self.ambient(), "ambient mismatch");
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    vars[i].clone()
                } else {
                    format!("{}^{}", vars[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// A monomial ideal with a sorted minimal generating set.
///
/// The zero ideal has no generators; the unit ideal is generated by 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ambient: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds an ideal, minimizing and sorting the generators.
    ///
    /// # Panics
    /// Panics when a generator's ambient count disagrees with `ambient`;
    /// parsed input is validated before construction, so a mismatch is a bug.
    pub fn new(ambient: usize, gens: Vec<Monomial>) -> Self {
        for g in &gens {
            assert_eq!(g.ambient(), ambient, "generator ambient mismatch");
        }
        let mut gens: Vec<Monomial> = gens;
        gens.sort();
        gens.dedup();
        let minimal: Vec<Monomial> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
            .cloned()
            .collect();
        MonomialIdeal { ambient, gens: minimal }
    }

    pub fn zero(ambient: usize) -> Self {
        MonomialIdeal { ambient, gens: Vec::new() }
    }

    pub fn unit(ambient: usize) -> Self {
        MonomialIdeal {
            ambient,
            gens: vec![Monomial::one(ambient)],
        }
    }

    /// Builds from raw exponent vectors, validating lengths.
    pub fn from_exponents(ambient: usize, rows: Vec<Vec<u64>>) -> Result<Self> {
        for row in &rows {
            if row.len() != ambient {
                return Err(Error::input(format!(
                    "exponent vector has {} entries, expected {}",
                    row.len(),
                    ambient
                )));
            }
        }
        Ok(MonomialIdeal::new(
            ambient,
            rows.into_iter().map(Monomial::new).collect(),
        ))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators.
    pub fn mu(&self) -> u64 {
        self.gens.len() as u64
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn max_exponent(&self) -> u64 {
        self.gens.iter().map(Monomial::max_exponent).max().unwrap_or(0)
    }

    /// Monomial membership.
    ///
    /// # Panics
    /// Panics on ambient mismatch; see [`MonomialIdeal::new`].
    pub fn contains(&self, m: &Monomial) -> bool {
        assert_eq!(m.ambient(), self.ambient, "ambient mismatch");
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.ambient, gens)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.ambient, gens)
    }

    /// Colon by a single monomial, (self : m).
    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        assert_eq!(m.ambient(), self.ambient, "ambient mismatch");
        MonomialIdeal::new(
            self.ambient,
            self.gens.iter().map(|g| g.quotient_saturating(m)).collect(),
        )
    }

    /// Ideal colon (self : other), the intersection of the colons by
    /// each generator of `other`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        if other.is_zero() {
            return Err(Error::precondition("colon by the zero ideal"));
        }
        let mut acc: Option<MonomialIdeal> = None;
        for b in &other.gens {
            let part = self.colon_monomial(b);
            acc = Some(match acc {
                None => part,
                Some(prev) => prev.intersect(&part),
            });
        }
        Ok(acc.expect("nonzero ideal has generators"))
    }

    /// The Frobenius power, scaling every generator exponent by q.
    pub fn frobenius_power(&self, q: u64) -> Result<MonomialIdeal> {
        if q == 0 {
            return Err(Error::internal("Frobenius power with q = 0"));
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.pow_scale(q))
            .collect::<Result<Vec<Monomial>>>()?;
        Ok(MonomialIdeal::new(self.ambient, gens))
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ambient, self.gens.iter().map(Monomial::radical).collect())
    }

    /// Image under the quotient map killing the variables of `fp`:
    /// generators touching a killed variable map to zero and drop out.
    pub fn image_mod_face_prime(&self, fp: &FacePrime) -> MonomialIdeal {
        assert_eq!(fp.ambient(), self.ambient, "ambient mismatch");
        let killed: BTreeSet<usize> = fp.vars().iter().copied().collect();
        let gens = self
            .gens
            .iter()
            .filter(|g| g.support().iter().all(|i| !killed.contains(i)))
            .cloned()
            .collect();
        MonomialIdeal::new(self.ambient, gens)
    }

    /// Minimal primes, i.e. the minimal variable transversals of the
    /// generator supports. The zero ideal has the zero prime as its one
    /// minimal prime; the unit ideal has none.
    pub fn minimal_primes(&self) -> Result<Vec<FacePrime>> {
        if self.is_unit() {
            return Err(Error::precondition("the unit ideal has no minimal primes"));
        }
        if self.is_zero() {
            return Ok(vec![FacePrime::new(self.ambient, Vec::new())]);
        }
        let mut supports: Vec<BTreeSet<usize>> = self
            .gens
            .iter()
            .map(|g| g.support().into_iter().collect())
            .collect();
        supports.sort_by_key(|s| (s.len(), s.iter().copied().collect::<Vec<_>>()));
        supports.dedup();
        // A support containing another is hit whenever the smaller one is.
        let needed: Vec<BTreeSet<usize>> = supports
            .iter()
            .filter(|s| !supports.iter().any(|t| *t != **s && t.is_subset(s)))
            .cloned()
            .collect();
        let mut found: Vec<BTreeSet<usize>> = Vec::new();
        let mut current: BTreeSet<usize> = BTreeSet::new();
        hitting_sets(&needed, 0, &mut current, &mut found);
        let mut minimal: Vec<BTreeSet<usize>> = found
            .iter()
            .filter(|s| !found.iter().any(|t| *t != **s && t.is_subset(s)))
            .cloned()
            .collect();
        minimal.sort_by_key(|s| (s.len(), s.iter().copied().collect::<Vec<_>>()));
        minimal.dedup();
        Ok(minimal
            .into_iter()
            .map(|s| FacePrime::new(self.ambient, s.into_iter().collect()))
            .collect())
    }

    /// Renders the generator list with variable names.
    pub fn pretty(&self, vars: &[String]) -> Vec<String> {
        self.gens.iter().map(|g| g.pretty(vars)).collect()
    }
}

/// Collects all hitting sets of `sets[from..]` extending `current`;
/// minimality is filtered by the caller.
fn hitting_sets(
    sets: &[BTreeSet<usize>],
    from: usize,
    current: &mut BTreeSet<usize>,
    out: &mut Vec<BTreeSet<usize>>,
) {
    match sets[from..]
        .iter()
        .position(|s| s.iter().all(|v| !current.contains(v)))
    {
        None => out.push(current.clone()),
        Some(offset) => {
            let idx = from + offset;
            let choices: Vec<usize> = sets[idx].iter().copied().collect();
            for v in choices {
                current.insert(v);
                hitting_sets(sets, idx + 1, current, out);
                current.remove(&v);
            }
        }
    }
}

/// A prime generated by a set of variables; the empty set is the zero
/// prime of the polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacePrime {
    ambient: usize,
    vars: Vec<usize>,
}

impl FacePrime {
    pub fn new(ambient: usize, mut vars: Vec<usize>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        assert!(vars.iter().all(|&v| v < ambient), "variable index out of range");
        FacePrime { ambient, vars }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn complement(&self) -> Vec<usize> {
        let inside: BTreeSet<usize> = self.vars.iter().copied().collect();
        (0..self.ambient).filter(|i| !inside.contains(i)).collect()
    }

    pub fn as_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.ambient,
            self.vars
                .iter()
                .map(|&i| Monomial::variable(self.ambient, i))
                .collect(),
        )
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        assert_eq!(m.ambient(), self.ambient, "ambient mismatch");
        m.support().iter().any(|i| self.vars.contains(i))
    }

    pub fn contains_ideal(&self, ideal: &MonomialIdeal) -> bool {
        ideal.gens().iter().all(|g| self.contains_monomial(g))
    }
}
