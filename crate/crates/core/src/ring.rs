//! Stanley-Reisner rings over a prime field and Frobenius levels.

use crate::error::{Error, Result};
use crate::monomial::{FacePrime, Monomial, MonomialIdeal};

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    if p % 3 == 0 {
        return p == 3;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 || p % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// A Frobenius level: the pair (p, e) with q = p^e.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusLevel {
    p: u64,
    e: u32,
    q: u64,
}

impl FrobeniusLevel {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        let q = p
            .checked_pow(e)
            .ok_or_else(|| Error::precondition(format!("p^e = {p}^{e} overflows u64")))?;
        Ok(FrobeniusLevel { p, e, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

/// S/I for a squarefree monomial ideal I in S = F_p[x_1..x_n].
///
/// Minimal primes of I are computed once at construction; they are the
/// face primes of the associated simplicial complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyReisnerRing {
    vars: Vec<String>,
    p: u64,
    defining: MonomialIdeal,
    min_primes: Vec<FacePrime>,
}

impl StanleyReisnerRing {
    pub fn new(vars: Vec<String>, p: u64, relations: Vec<Monomial>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::input("a ring needs at least one variable"));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::input("empty variable name"));
            }
            if vars[..i].contains(v) {
                return Err(Error::input(format!("duplicate variable name {v}")));
            }
        }
        if !is_prime(p) {
            return Err(Error::input(format!("characteristic {p} is not prime")));
        }
        let n = vars.len();
        for r in &relations {
            if r.ambient() != n {
                return Err(Error::input(format!(
                    "relation has {} exponents, expected {}",
                    r.ambient(),
                    n
                )));
            }
        }
        let defining = MonomialIdeal::new(n, relations);
        if !defining.is_squarefree() {
            return Err(Error::input("defining ideal must be squarefree"));
        }
        if defining.is_unit() {
            return Err(Error::input("defining ideal must be proper"));
        }
        let min_primes = defining.minimal_primes()?;
        Ok(StanleyReisnerRing { vars, p, defining, min_primes })
    }

    /// The polynomial ring F_p[x1..xn].
    pub fn polynomial(n: usize, p: u64) -> Result<Self> {
        let vars = (1..=n).map(|i| format!("x{i}")).collect();
        StanleyReisnerRing::new(vars, p, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn defining_ideal(&self) -> &MonomialIdeal {
        &self.defining
    }

    pub fn is_polynomial(&self) -> bool {
        self.defining.is_zero()
    }

    pub fn min_primes(&self) -> &[FacePrime] {
        &self.min_primes
    }

    pub fn maximal_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.n(),
            (0..self.n()).map(|i| Monomial::variable(self.n(), i)).collect(),
        )
    }

    /// Krull dimension: n minus the size of the smallest minimal prime.
    pub fn dim(&self) -> usize {
        let smallest = self
            .min_primes
            .iter()
            .map(|fp| fp.vars().len())
            .min()
            .expect("a proper ideal has minimal primes");
        self.n() - smallest
    }

    pub fn level(&self, e: u32) -> Result<FrobeniusLevel> {
        FrobeniusLevel::new(self.p, e)
    }

    /// Localizes at a face prime containing the defining ideal: the
    /// variables outside the prime become units and are deleted.
    pub fn localize_at_face_prime(&self, fp: &FacePrime) -> Result<Localization> {
        if fp.ambient() != self.n() {
            return Err(Error::input("face prime ambient mismatch"));
        }
        if !fp.contains_ideal(&self.defining) {
            return Err(Error::precondition(
                "localization needs a face prime containing the defining ideal",
            ));
        }
        let kept: Vec<usize> = fp.vars().to_vec();
        if kept.is_empty() {
            return Err(Error::precondition(
                "localizing at the zero prime leaves no variables",
            ));
        }
        let vars = kept.iter().map(|&i| self.vars[i].clone()).collect();
        let relations = self
            .defining
            .gens()
            .iter()
            .map(|g| restrict(g, &kept))
            .collect();
        let ring = StanleyReisnerRing::new(vars, self.p, relations)?;
        Ok(Localization { ring, kept })
    }
}

fn restrict(m: &Monomial, kept: &[usize]) -> Monomial {
    Monomial::new(kept.iter().map(|&i| m.exponents()[i]).collect())
}

/// The result of localizing at a face prime: the smaller ring plus the
/// kept variable indices of the parent ring.
#[derive(Clone, Debug)]
pub struct Localization {
    pub ring: StanleyReisnerRing,
    pub kept: Vec<usize>,
}

impl Localization {
    /// Image of an ideal of the parent ring: exponents of inverted
    /// variables are deleted. Sensible for ideals inside the prime.
    pub fn localize_ideal(&self, ideal: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(
            self.kept.len(),
            ideal.gens().iter().map(|g| restrict(g, &self.kept)).collect(),
        )
    }
}
