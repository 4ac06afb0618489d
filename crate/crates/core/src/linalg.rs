//! Exact rational vectors and matrices.
//!
//! Everything here works over [`Rational`] (arbitrary precision), so no
//! operation can overflow or round.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;
pub type Vector = Vec<Rational>;

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a reduced rational. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero_vec(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rational], c: &Rational) -> Vector {
    a.iter().map(|x| x * c).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Pairing of an integer coefficient vector with a rational vector.
pub fn dot_int(c: &[i64], v: &[Rational]) -> Rational {
    c.iter()
        .zip(v)
        .filter(|(c, _)| **c != 0)
        .fold(Rational::zero(), |acc, (c, x)| acc + x * int(*c))
}

pub fn is_integral(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// Formats a rational as `num/den`, always with an explicit denominator.
pub fn fmt_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self::from_fn(r, c, |i, j| int(rows[i][j]))
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(cols: &[Vector]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |v| v.len());
        Self::from_fn(r, c, |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix/vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn scaled(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[(r, c)].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            for r in c + 1..n {
                if m[(r, c)].is_zero() {
                    continue;
                }
                let factor = &m[(r, c)] / &pivot;
                for k in c..n {
                    let delta = &factor * &m[(c, k)];
                    m[(r, k)] -= delta;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let pivots = aug.rref_in_place(n);
        if pivots.len() < n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form, pivoting only within the first `pivot_cols`
    /// columns. Returns the pivot columns.
    fn rref_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(p, r);
            let inv = self[(r, c)].recip();
            for k in 0..self.cols {
                let v = &self[(r, k)] * &inv;
                self[(r, k)] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for k in 0..self.cols {
                    let delta = &factor * &self[(r, k)];
                    self[(i, k)] -= delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form of a list of row vectors, zero rows dropped.
pub fn rref_rows(rows: &[Vector]) -> Vec<Vector> {
    if rows.is_empty() {
        return Vec::new();
    }
    let cols = rows[0].len();
    let mut m = Matrix::from_fn(rows.len(), cols, |i, j| rows[i][j].clone());
    let pivots = m.rref_in_place(cols);
    (0..pivots.len()).map(|i| m.row(i).to_vec()).collect()
}

/// Unique solution of the square system `a x = b`, if `a` is invertible.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vector> {
    let n = a.rows();
    assert_eq!(n, a.cols());
    let mut aug = Matrix::from_fn(n, n + 1, |i, j| {
        if j < n {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let pivots = aug.rref_in_place(n);
    if pivots.len() < n {
        return None;
    }
    Some((0..n).map(|i| aug[(i, n)].clone()).collect())
}

/// Solution set of `a x = b` as a particular solution plus a basis of the
/// kernel of `a`, the basis in reduced echelon form. `None` if inconsistent.
pub fn affine_solution_space(a: &Matrix, b: &[Rational]) -> Option<(Vector, Vec<Vector>)> {
    let (m, n) = (a.rows(), a.cols());
    let mut aug = Matrix::from_fn(m, n + 1, |i, j| {
        if j < n {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let pivots = aug.rref_in_place(n);
    // A pivot-free row with nonzero right-hand side means no solution.
    for i in pivots.len()..m {
        if !aug[(i, n)].is_zero() {
            return None;
        }
    }
    let mut particular = zero_vec(n);
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug[(r, n)].clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let kernel: Vec<Vector> = free
        .iter()
        .map(|&f| {
            let mut v = unit_vec(n, f);
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -aug[(r, f)].clone();
            }
            v
        })
        .collect();
    Some((particular, rref_rows(&kernel)))
}

/// Least common multiple of all denominators in `v`.
pub fn common_denominator(v: &[Rational]) -> BigInt {
    use num_integer::Integer;
    v.iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
        .abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_inverse() {
        let m = Matrix::from_int_rows(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(m.determinant(), int(3));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(inv[(0, 0)], frac(2, 3));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = Matrix::from_int_rows(&[vec![1, 2], vec![2, 4]]);
        assert!(m.inverse().is_none());
        assert_eq!(m.determinant(), int(0));
    }

    #[test]
    fn solution_space_of_rank_deficient_system() {
        // x + y = 1 in two unknowns: line through (1, 0) with direction (-1, 1).
        let a = Matrix::from_int_rows(&[vec![1, 1]]);
        let (p, k) = affine_solution_space(&a, &[int(1)]).unwrap();
        assert_eq!(p, vec![int(1), int(0)]);
        assert_eq!(k, vec![vec![int(1), int(-1)]]);
        assert!(affine_solution_space(&Matrix::from_int_rows(&[vec![0, 0]]), &[int(1)]).is_none());
    }

    #[test]
    fn rational_text_round_trip() {
        let x = frac(-6, 4);
        assert_eq!(fmt_rational(&x), "-3/2");
        assert_eq!(parse_rational("-3/2"), Some(x));
        assert_eq!(parse_rational("5"), Some(int(5)));
        assert_eq!(parse_rational("1/0"), None);
    }
}
