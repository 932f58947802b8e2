//! Simplicial complexes of squarefree ideals and reduced cohomology.
//!
//! Faces are vertex bitmasks. The void complex (no faces at all) and
//! the irrelevant complex (only the empty face) are distinct: the void
//! complex has no reduced cohomology in any degree, the irrelevant one
//! has rank one in degree -1.

use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, MAX_ENUM_VARS};
use crate::ring::is_prime;
use std::collections::{BTreeMap, BTreeSet, HashMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<u32>,
}

fn mask_of(vertices: &[usize], n: usize) -> Result<u32> {
    let mut mask = 0u32;
    for &v in vertices {
        if v >= n {
            return Err(Error::input(format!("vertex {v} out of range for {n} vertices")));
        }
        mask |= 1 << v;
    }
    Ok(mask)
}

fn vertices_of(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask & (1 << i) != 0).collect()
}

impl SimplicialComplex {
    /// Builds the complex generated by the given faces, keeping only
    /// the maximal ones. An empty list is the void complex.
    pub fn from_facets(n: usize, faces: Vec<Vec<usize>>) -> Result<Self> {
        if n > MAX_ENUM_VARS {
            return Err(Error::precondition(format!(
                "complexes on more than {MAX_ENUM_VARS} vertices are not supported"
            )));
        }
        let mut masks = Vec::with_capacity(faces.len());
        for f in &faces {
            masks.push(mask_of(f, n)?);
        }
        masks.sort_unstable();
        masks.dedup();
        let maximal: Vec<u32> = masks
            .iter()
            .copied()
            .filter(|&m| !masks.iter().any(|&o| o != m && (m & o) == m))
            .collect();
        Ok(SimplicialComplex { n, facets: maximal })
    }

    pub fn void(n: usize) -> Result<Self> {
        SimplicialComplex::from_facets(n, Vec::new())
    }

    pub fn irrelevant(n: usize) -> Result<Self> {
        SimplicialComplex::from_facets(n, vec![Vec::new()])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| vertices_of(m, self.n)).collect()
    }

    /// Dimension, `None` for the void complex; the irrelevant complex
    /// has dimension -1.
    pub fn dim(&self) -> Option<i64> {
        self.facets
            .iter()
            .map(|m| m.count_ones() as i64 - 1)
            .max()
    }

    pub fn contains_face(&self, vertices: &[usize]) -> Result<bool> {
        let mask = mask_of(vertices, self.n)?;
        Ok(self.facets.iter().any(|&f| mask & f == mask))
    }

    /// Every face, as masks grouped by dimension.
    fn faces_by_dim(&self) -> BTreeMap<i64, Vec<u32>> {
        let mut all: BTreeSet<u32> = BTreeSet::new();
        for &facet in &self.facets {
            // Walk all submasks of the facet, including 0 and itself.
            let mut sub = facet;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        let mut by_dim: BTreeMap<i64, Vec<u32>> = BTreeMap::new();
        for mask in all {
            by_dim.entry(mask.count_ones() as i64 - 1).or_default().push(mask);
        }
        by_dim
    }

    /// All faces as sorted vertex lists, smallest first.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.faces_by_dim()
            .values()
            .flatten()
            .map(|&m| vertices_of(m, self.n))
            .collect()
    }

    /// The link of a face: all G disjoint from F with F union G a face.
    pub fn link(&self, face: &[usize]) -> Result<SimplicialComplex> {
        let mask = mask_of(face, self.n)?;
        if !self.facets.iter().any(|&f| mask & f == mask) {
            return Err(Error::precondition("link of a non-face"));
        }
        let facets = self
            .facets
            .iter()
            .filter(|&&f| mask & f == mask)
            .map(|&f| vertices_of(f & !mask, self.n))
            .collect();
        SimplicialComplex::from_facets(self.n, facets)
    }

    /// Ranks of reduced simplicial cohomology over F_p, for every
    /// degree from -1 to the dimension. Void: an empty map.
    pub fn reduced_cohomology_ranks(&self, p: u64) -> Result<BTreeMap<i64, u64>> {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        let mut out = BTreeMap::new();
        if self.is_void() {
            return Ok(out);
        }
        let by_dim = self.faces_by_dim();
        let dim = *by_dim.keys().last().expect("non-void complex");
        // Column index of each face within its dimension.
        let mut index: HashMap<u32, usize> = HashMap::new();
        for masks in by_dim.values() {
            for (i, &m) in masks.iter().enumerate() {
                index.insert(m, i);
            }
        }
        // rank_down[d] = rank of the boundary map C_d -> C_{d-1}.
        let mut rank_down: BTreeMap<i64, u64> = BTreeMap::new();
        for (&d, masks) in &by_dim {
            if d == -1 {
                rank_down.insert(d, 0);
                continue;
            }
            let below = by_dim.get(&(d - 1)).expect("faces are closed under subsets");
            let mut matrix = vec![vec![0u64; masks.len()]; below.len()];
            for (col, &mask) in masks.iter().enumerate() {
                let verts = vertices_of(mask, self.n);
                for (j, &v) in verts.iter().enumerate() {
                    let sub = mask & !(1 << v);
                    let row = index[&sub];
                    matrix[row][col] = if j % 2 == 0 { 1 } else { p - 1 };
                }
            }
            rank_down.insert(d, rank_mod_p(matrix, p));
        }
        for (&d, masks) in &by_dim {
            let f_d = masks.len() as u64;
            let down = rank_down.get(&d).copied().unwrap_or(0);
            let up = rank_down.get(&(d + 1)).copied().unwrap_or(0);
            out.insert(d, f_d - down - up);
        }
        debug_assert_eq!(*out.keys().next().unwrap(), -1);
        debug_assert_eq!(*out.keys().last().unwrap(), dim);
        Ok(out)
    }
}

/// Row-reduction rank over F_p.
fn rank_mod_p(mut matrix: Vec<Vec<u64>>, p: u64) -> u64 {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut rank = 0usize;
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(r) = (pivot_row..rows).find(|&r| matrix[r][col] % p != 0) else {
            continue;
        };
        matrix.swap(pivot_row, r);
        let inv = mod_inverse(matrix[pivot_row][col] % p, p);
        for c in col..cols {
            matrix[pivot_row][c] = mod_mul(matrix[pivot_row][c] % p, inv, p);
        }
        for r2 in 0..rows {
            if r2 != pivot_row && matrix[r2][col] % p != 0 {
                let factor = matrix[r2][col] % p;
                for c in col..cols {
                    let sub = mod_mul(factor, matrix[pivot_row][c], p);
                    matrix[r2][c] = (matrix[r2][c] + p - sub) % p;
                }
            }
        }
        rank += 1;
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    rank as u64
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p for prime p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    acc
}

/// The complex whose faces are the squarefree monomials outside the
/// ideal: facets are the complements of the minimal primes. The unit
/// ideal gives the void complex, the zero ideal the full simplex.
pub fn complex_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::precondition(
            "only squarefree ideals define simplicial complexes",
        ));
    }
    let n = ideal.ambient();
    if ideal.is_unit() {
        return SimplicialComplex::void(n);
    }
    let facets = ideal
        .minimal_primes()?
        .iter()
        .map(|prime| prime.complement())
        .collect();
    SimplicialComplex::from_facets(n, facets)
}
