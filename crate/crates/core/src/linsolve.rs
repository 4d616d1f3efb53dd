//! Exact sparse Gaussian elimination over ℚ.
//!
//! Rows are inserted one at a time and reduced against the current pivots,
//! so only the echelon basis is ever stored.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::Rational;

pub type SparseRow = BTreeMap<usize, Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("inconsistent system (0 = nonzero after elimination)")]
    Inconsistent,
    #[error("underdetermined system: rank {rank} < {unknowns} unknowns")]
    Underdetermined { rank: usize, unknowns: usize },
}

/// Echelon basis of a linear system `A x = b` in `unknowns` variables.
/// Column `unknowns` holds the right-hand side.
#[derive(Debug, Clone)]
pub struct Echelon {
    unknowns: usize,
    pivots: BTreeMap<usize, SparseRow>,
    equations: usize,
    inconsistent: bool,
}

fn axpy(row: &mut SparseRow, factor: &Rational, other: &SparseRow) {
    for (c, v) in other {
        let entry = row.entry(*c).or_insert_with(Rational::zero);
        *entry -= factor * v;
        if entry.is_zero() {
            row.remove(c);
        }
    }
}

impl Echelon {
    pub fn new(unknowns: usize) -> Self {
        Self {
            unknowns,
            pivots: BTreeMap::new(),
            equations: 0,
            inconsistent: false,
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn equations(&self) -> usize {
        self.equations
    }

    pub fn is_inconsistent(&self) -> bool {
        self.inconsistent
    }

    /// Adds `Σ coeffs[j] x_j = rhs`.
    pub fn push(&mut self, coeffs: impl IntoIterator<Item = (usize, Rational)>, rhs: Rational) {
        self.equations += 1;
        let mut row = SparseRow::new();
        for (c, v) in coeffs {
            assert!(c < self.unknowns, "column {c} out of range");
            let entry = row.entry(c).or_insert_with(Rational::zero);
            *entry += v;
            if entry.is_zero() {
                row.remove(&c);
            }
        }
        if !rhs.is_zero() {
            row.insert(self.unknowns, rhs);
        }
        self.insert(row);
    }

    fn insert(&mut self, mut row: SparseRow) {
        loop {
            let Some((&lead, value)) = row.first_key_value() else {
                return;
            };
            if lead == self.unknowns {
                self.inconsistent = true;
                return;
            }
            match self.pivots.get(&lead) {
                Some(p) => {
                    let factor = value.clone();
                    axpy(&mut row, &factor, p);
                }
                None => {
                    let inv = value.recip();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return;
                }
            }
        }
    }

    /// Reduced row echelon form: every pivot row mentions no other pivot
    /// column.
    fn reduced(&self) -> BTreeMap<usize, SparseRow> {
        let mut done: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (&c, row) in self.pivots.iter().rev() {
            let mut row = row.clone();
            let targets: Vec<usize> = row
                .keys()
                .copied()
                .filter(|&j| j != c && done.contains_key(&j))
                .collect();
            for j in targets {
                if let Some(v) = row.get(&j).cloned() {
                    axpy(&mut row, &v, &done[&j]);
                }
            }
            done.insert(c, row);
        }
        done
    }

    /// The unique solution; fails when the system is inconsistent or has
    /// free variables.
    pub fn unique_solution(&self) -> Result<Vec<Rational>, SolveError> {
        if self.inconsistent {
            return Err(SolveError::Inconsistent);
        }
        if self.rank() < self.unknowns {
            return Err(SolveError::Underdetermined {
                rank: self.rank(),
                unknowns: self.unknowns,
            });
        }
        let reduced = self.reduced();
        Ok((0..self.unknowns)
            .map(|c| reduced[&c].get(&self.unknowns).cloned().unwrap_or_else(Rational::zero))
            .collect())
    }

    /// Basis of the solution space of the homogeneous system (the right-hand
    /// side column is ignored).
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let reduced = self.reduced();
        let free: Vec<usize> = (0..self.unknowns).filter(|c| !reduced.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.unknowns];
                v[f] = Rational::one();
                for (&c, row) in &reduced {
                    if let Some(x) = row.get(&f) {
                        v[c] = -x;
                    }
                }
                v
            })
            .collect()
    }
}

/// Rank of a set of dense vectors.
pub fn rank_of(vectors: &[Vec<Rational>]) -> usize {
    let Some(width) = vectors.first().map(Vec::len) else {
        return 0;
    };
    let mut e = Echelon::new(width);
    for v in vectors {
        e.push(
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone())),
            Rational::zero(),
        );
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn solves_small_system() {
        // x + y = 3, x - y = 1
        let mut e = Echelon::new(2);
        e.push([(0, int(1)), (1, int(1))], int(3));
        e.push([(0, int(1)), (1, int(-1))], int(1));
        e.push([(0, int(2)), (1, int(2))], int(6));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.equations(), 3);
        assert_eq!(e.unique_solution().unwrap(), vec![int(2), int(1)]);
    }

    #[test]
    fn detects_inconsistency_and_freedom() {
        let mut e = Echelon::new(2);
        e.push([(0, int(1)), (1, int(1))], int(3));
        assert_eq!(
            e.unique_solution(),
            Err(SolveError::Underdetermined { rank: 1, unknowns: 2 })
        );
        e.push([(0, int(2)), (1, int(2))], int(5));
        assert_eq!(e.unique_solution(), Err(SolveError::Inconsistent));
    }

    #[test]
    fn nullspace_of_rank_one() {
        // x - 2y + z = 0
        let mut e = Echelon::new(3);
        e.push([(0, int(1)), (1, int(-2)), (2, int(1))], int(0));
        let ns = e.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert_eq!(&v[0] - &(&v[1] * int(2)) + &v[2], int(0));
        }
        assert_eq!(rank_of(&ns), 2);
        assert_eq!(rank_of(&[vec![rat(1, 2), int(1)], vec![int(1), int(2)]]), 1);
    }
}
