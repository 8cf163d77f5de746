use std::fmt;

use num_traits::{One, Zero};

use super::{vector, Rational, Subspace, Vector};
use crate::error::{check_dim, Result};

/// Dense row-major matrix over ℚ.
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

    /// Builds a matrix from rows that all have length `cols`.
    pub fn from_rows(cols: usize, rows: impl IntoIterator<Item = Vector>) -> Result<Self> {
        let mut data = Vec::new();
        let mut count = 0;
        for row in rows {
            check_dim(cols, row.len())?;
            data.extend(row);
            count += 1;
        }
        Ok(Self {
            rows: count,
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            check_dim(rows, col.len())?;
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
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

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vector> {
        check_dim(self.cols, v.len())?;
        Ok(self.row_vectors().map(|row| vector::dot(row, v)).collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.cols, other.rows)?;
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
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.data)
    }

    pub fn rank(&self) -> usize {
        rref_with_pivots(self).1.len()
    }

    /// Row space as a canonical subspace of ℚ^cols.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_rref_unchecked(self.cols, rref_with_pivots(self))
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn truncate_rows(&mut self, rows: usize) {
        self.rows = rows;
        self.data.truncate(rows * self.cols);
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form, keeping the zero rows at the bottom.
pub fn rref(m: &Matrix) -> Matrix {
    let (mut r, pivots) = rref_with_pivots(m);
    let rank = pivots.len();
    let zero_rows = m.rows - rank;
    r.data.extend(std::iter::repeat_n(Rational::zero(), zero_rows * m.cols));
    r.rows = m.rows;
    r
}

/// Reduced row echelon form with zero rows dropped, plus the pivot columns.
pub fn rref_with_pivots(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&i| !a[(i, col)].is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = a[(row, col)].recip();
        for j in col..a.cols {
            if !a[(row, j)].is_zero() {
                a[(row, j)] *= &inv;
            }
        }
        let pivot_row: Vector = a.row(row).to_vec();
        for i in 0..a.rows {
            if i == row {
                continue;
            }
            let factor = a[(i, col)].clone();
            if factor.is_zero() {
                continue;
            }
            for j in col..a.cols {
                if !pivot_row[j].is_zero() {
                    let delta = &factor * &pivot_row[j];
                    a[(i, j)] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    a.truncate_rows(pivots.len());
    (a, pivots)
}

/// Null space `{v : m·v = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let (r, pivots) = rref_with_pivots(m);
    let n = m.cols;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis = (0..n).filter(|&j| !is_pivot[j]).map(|free| {
        let mut v = vector::zeros(n);
        v[free] = Rational::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r[(row, free)].clone();
        }
        v
    });
    Subspace::span(n, basis).expect("kernel vectors have the column dimension")
}

/// One solution of `m·x = b`, or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Rational]) -> Result<Option<Vector>> {
    check_dim(m.rows, b.len())?;
    let mut aug = Matrix::zeros(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, m.cols)] = b[i].clone();
    }
    let (r, pivots) = rref_with_pivots(&aug);
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vector::zeros(m.cols);
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, m.cols)].clone();
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn m(rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| int(x)).collect())).unwrap()
    }

    #[test]
    fn rref_of_identity_is_identity() {
        assert_eq!(rref(&Matrix::identity(3)), Matrix::identity(3));
    }

    #[test]
    fn rref_hand_elimination() {
        assert_eq!(rref(&m(&[&[2, 4], &[1, 2]])), m(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_of_zero_is_zero() {
        assert_eq!(rref(&Matrix::zeros(2, 3)), Matrix::zeros(2, 3));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Matrix::identity(2)), Subspace::zero(2));
        let k = kernel(&m(&[&[0, 1], &[0, 0]]));
        assert_eq!(k, Subspace::span(2, [vec![int(1), int(0)]]).unwrap());
        assert_eq!(kernel(&Matrix::zeros(3, 3)), Subspace::full(3));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&a, &[int(1), int(3)]).unwrap(), None);
        let x = solve(&a, &[int(1), int(2)]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), vec![int(1), int(2)]);
    }

    #[test]
    fn mul_vec_checks_dimension() {
        assert!(Matrix::identity(2).mul_vec(&[int(1)]).is_err());
    }
}
