//! Exact simplex over arbitrary-precision rationals.
//!
//! Solves max c.x subject to A.x <= b, x >= 0 with b >= 0, so the slack
//! basis is feasible and no first phase is needed. Bland's rule keeps
//! the pivot sequence finite and deterministic. Everything is computed
//! in `BigRational`; no floating point is involved anywhere.

use num_rational::BigRational;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal {
        value: BigRational,
        solution: Vec<BigRational>,
    },
    Unbounded,
}

/// Maximizes c.x over A.x <= b, x >= 0.
///
/// # Panics
/// Panics when dimensions disagree or some b entry is negative; callers
/// construct systems that satisfy both by design.
pub fn maximize(c: &[BigRational], a: &[Vec<BigRational>], b: &[BigRational]) -> LpOutcome {
    let n = c.len();
    let m = a.len();
    assert_eq!(b.len(), m, "row count mismatch");
    for row in a {
        assert_eq!(row.len(), n, "column count mismatch");
    }
    assert!(b.iter().all(|v| v >= &BigRational::zero()), "negative right-hand side");

    // Tableau columns: n structural variables, m slacks, then the rhs.
    // Row m is the objective row holding -c and the current value.
    let width = n + m + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for (i, row) in a.iter().enumerate() {
        let mut r = vec![BigRational::zero(); width];
        r[..n].clone_from_slice(row);
        r[n + i] = BigRational::from_integer(1.into());
        r[width - 1] = b[i].clone();
        t.push(r);
    }
    let mut obj = vec![BigRational::zero(); width];
    for (j, cj) in c.iter().enumerate() {
        obj[j] = -cj.clone();
    }
    t.push(obj);

    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        // Bland: entering column is the lowest index with negative cost row.
        let entering = match (0..n + m).find(|&j| t[m][j] < BigRational::zero()) {
            None => break,
            Some(j) => j,
        };
        // Ratio test; ties go to the smallest basis variable index.
        let mut leaving: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][entering] > BigRational::zero() {
                let ratio = &t[i][width - 1] / &t[i][entering];
                let better = match &leaving {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && basis[i] < basis[*li])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
        }
        let (pivot_row, _) = match leaving {
            None => return LpOutcome::Unbounded,
            Some(x) => x,
        };

        let pivot = t[pivot_row][entering].clone();
        for v in t[pivot_row].iter_mut() {
            *v = &*v / &pivot;
        }
        for i in 0..=m {
            if i != pivot_row && !t[i][entering].is_zero() {
                let factor = t[i][entering].clone();
                for j in 0..width {
                    let delta = &factor * &t[pivot_row][j];
                    t[i][j] = &t[i][j] - &delta;
                }
            }
        }
        basis[pivot_row] = entering;
    }

    let mut solution = vec![BigRational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            solution[bv] = t[i][width - 1].clone();
        }
    }
    LpOutcome::Optimal {
        value: t[m][width - 1].clone(),
        solution,
    }
}
