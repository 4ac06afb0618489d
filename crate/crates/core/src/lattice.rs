//! Full-rank integer lattices in Hermite normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rational;

/// A sublattice of `ℤ^n` stored as a row-style Hermite normal form basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    /// Echelon rows with positive pivots and entries above each pivot reduced
    /// into `[0, pivot)`.
    basis: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Lattice {
    /// The lattice spanned by `generators`, all of length `dim`.
    pub fn from_generators(dim: usize, generators: &[Vec<BigInt>]) -> Result<Self> {
        if generators.iter().any(|g| g.len() != dim) {
            return Err(Error::InvalidInput("generator of wrong length".to_string()));
        }
        let mut rows: Vec<Vec<BigInt>> = generators.to_vec();
        let mut basis = Vec::new();
        let mut pivots = Vec::new();
        for col in 0..dim {
            // Euclid on column `col` across the remaining rows.
            loop {
                let nonzero: Vec<usize> = (0..rows.len())
                    .filter(|&r| !rows[r][col].is_zero())
                    .collect();
                if nonzero.len() <= 1 {
                    break;
                }
                let min = *nonzero
                    .iter()
                    .min_by_key(|&&r| rows[r][col].abs())
                    .expect("non-empty");
                let pivot_row = rows[min].clone();
                for &r in &nonzero {
                    if r == min {
                        continue;
                    }
                    let factor = rows[r][col].div_floor(&pivot_row[col]);
                    for (x, p) in rows[r].iter_mut().zip(&pivot_row) {
                        *x -= &factor * p;
                    }
                }
            }
            if let Some(r) = (0..rows.len()).find(|&r| !rows[r][col].is_zero()) {
                let mut row = rows.swap_remove(r);
                if row[col].is_negative() {
                    row.iter_mut().for_each(|x| *x = -&*x);
                }
                basis.push(row);
                pivots.push(col);
            }
        }
        if rows.iter().any(|r| r.iter().any(|x| !x.is_zero())) {
            return Err(Error::Invariant("HNF left a nonzero residue".to_string()));
        }
        for i in 0..basis.len() {
            let (col, piv) = (pivots[i], basis[i][pivots[i]].clone());
            for j in 0..i {
                let factor = basis[j][col].div_floor(&piv);
                if !factor.is_zero() {
                    let row_i = basis[i].clone();
                    for (x, p) in basis[j].iter_mut().zip(&row_i) {
                        *x -= &factor * p;
                    }
                }
            }
        }
        Ok(Self { dim, basis, pivots })
    }

    /// Converts integral rational generators; non-integral input is rejected.
    pub fn from_rational_generators(dim: usize, generators: &[Vec<Rational>]) -> Result<Self> {
        let ints = generators
            .iter()
            .map(|g| {
                g.iter()
                    .map(|x| {
                        x.is_integer().then(|| x.to_integer()).ok_or_else(|| {
                            Error::InvalidInput(format!("non-integral generator entry {x}"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(dim, &ints)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn is_full_rank(&self) -> bool {
        self.basis.len() == self.dim
    }

    /// `[ℤ^n : L]`, or `None` if the lattice is not of full rank.
    pub fn index(&self) -> Option<BigInt> {
        self.is_full_rank().then(|| {
            self.basis
                .iter()
                .zip(&self.pivots)
                .map(|(r, &c)| r[c].clone())
                .product()
        })
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.len() != self.dim || v.iter().any(|x| !x.is_integer()) {
            return false;
        }
        let mut rest: Vec<BigInt> = v.iter().map(|x| x.to_integer()).collect();
        for (row, &col) in self.basis.iter().zip(&self.pivots) {
            let (q, r) = rest[col].div_rem(&row[col]);
            if !r.is_zero() {
                return false;
            }
            for (x, b) in rest.iter_mut().zip(row) {
                *x -= &q * b;
            }
        }
        rest.iter().all(Zero::is_zero)
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.iter().all(|row| {
            let v: Vec<Rational> = row
                .iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect();
            self.contains(&v)
        })
    }

    pub fn is_unimodular(&self) -> bool {
        self.index().is_some_and(|d| d.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn index_and_membership() {
        let l = Lattice::from_generators(2, &big(&[&[2, -1], &[-1, 2]])).unwrap();
        assert_eq!(l.index(), Some(BigInt::from(3)));
        assert!(l.contains(&[int(1), int(1)]));
        assert!(!l.contains(&[int(1), int(0)]));
        assert!(l.contains(&[int(3), int(0)]));
    }

    #[test]
    fn redundant_generators() {
        let l = Lattice::from_generators(2, &big(&[&[4, 0], &[6, 0], &[0, 1], &[0, 5]])).unwrap();
        assert_eq!(l.index(), Some(BigInt::from(2)));
        assert!(!l.contains(&[crate::linalg::frac(1, 2), int(0)]));
    }

    #[test]
    fn degenerate() {
        let l = Lattice::from_generators(2, &big(&[&[1, 1], &[2, 2]])).unwrap();
        assert!(!l.is_full_rank());
        assert!(l.contains(&[int(3), int(3)]));
        assert!(!l.contains(&[int(3), int(2)]));
    }
}
