//! Matrices over the rationals with exact rank and determinant via
//! fraction-free (Bareiss) elimination on a denominator-cleared copy.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::field::Rationals;
use crate::poly::Polynomial;
use crate::ring::{Ring, VarKind};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NumericMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl NumericMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        NumericMatrix { rows, cols, data: alloc::vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = NumericMatrix::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self, Error> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if nrows == 0 || ncols == 0 {
            return Err(Error::BadMatrix("matrix needs at least one row and column".into()));
        }
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::BadMatrix("ragged rows".into()));
        }
        Ok(NumericMatrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, Error> {
        NumericMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }

    /// Columns `c0..=c1`, all rows, 0-based.
    pub fn column_window(&self, c0: usize, c1: usize) -> NumericMatrix {
        debug_assert!(c0 <= c1 && c1 < self.cols);
        let mut out = NumericMatrix::zero(self.rows, c1 - c0 + 1);
        for i in 0..self.rows {
            for j in c0..=c1 {
                *out.get_mut(i, j - c0) = self.get(i, j).clone();
            }
        }
        out
    }

    /// Horizontal concatenation `[self | right]`.
    pub fn hconcat(&self, right: &NumericMatrix) -> NumericMatrix {
        debug_assert_eq!(self.rows, right.rows);
        let mut out = NumericMatrix::zero(self.rows, self.cols + right.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.get_mut(i, j) = self.get(i, j).clone();
            }
            for j in 0..right.cols {
                *out.get_mut(i, self.cols + j) = right.get(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &NumericMatrix) -> NumericMatrix {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = NumericMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    /// Replaces rows `row_start..row_start + g.rows()` by `g` times that block.
    pub fn apply_block_left(&mut self, g: &NumericMatrix, row_start: usize) {
        debug_assert_eq!(g.rows, g.cols);
        debug_assert!(row_start + g.rows <= self.rows);
        let k = g.rows;
        let mut block = NumericMatrix::zero(k, self.cols);
        for i in 0..k {
            for j in 0..self.cols {
                *block.get_mut(i, j) = self.get(row_start + i, j).clone();
            }
        }
        let prod = g.mul(&block);
        for i in 0..k {
            for j in 0..self.cols {
                *self.get_mut(row_start + i, j) = prod.get(i, j).clone();
            }
        }
    }

    /// Integer matrix with the same rank: each row scaled by the lcm of its
    /// denominators. The per-row factors are returned for determinant use.
    fn cleared(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut rows = Vec::with_capacity(self.rows);
        let mut scales = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut l = BigInt::one();
            for j in 0..self.cols {
                l = l.lcm(self.get(i, j).denom());
            }
            let row: Vec<BigInt> = (0..self.cols)
                .map(|j| {
                    let e = self.get(i, j);
                    e.numer() * (&l / e.denom())
                })
                .collect();
            rows.push(row);
            scales.push(l);
        }
        (rows, scales)
    }

    pub fn rank(&self) -> usize {
        let (mut a, _) = self.cleared();
        bareiss(&mut a).0
    }

    pub fn det(&self) -> Result<BigRational, Error> {
        if self.rows != self.cols {
            return Err(Error::BadMatrix("determinant of a non-square matrix".into()));
        }
        let (mut a, scales) = self.cleared();
        let (rank, det_int) = bareiss(&mut a);
        if rank < self.rows {
            return Ok(BigRational::zero());
        }
        let mut denom = BigInt::one();
        for s in scales {
            denom *= s;
        }
        Ok(BigRational::new(det_int, denom))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

/// In-place fraction-free elimination. Returns (rank, determinant of the
/// leading square when the matrix is square and nonsingular; unspecified
/// otherwise). Divisions are exact by the Bareiss identity.
fn bareiss(a: &mut [Vec<BigInt>]) -> (usize, BigInt) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    let mut sign = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            sign = !sign;
        }
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let num = &a[rank][c] * &a[i][j] - &a[i][c] * &a[rank][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division is exact");
                a[i][j] = q;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    let det = if sign { -prev } else { prev };
    (rank, det)
}

/// Evaluates a grid polynomial at a numeric matrix of matching shape.
pub fn eval_on_matrix(
    ring: &Ring<Rationals>,
    f: &Polynomial<Rationals>,
    x: &NumericMatrix,
) -> Result<BigRational, Error> {
    let (m, n) = ring.grid_dims()?;
    if x.rows() != m as usize || x.cols() != n as usize {
        return Err(Error::BadMatrix(alloc::format!(
            "matrix is {}x{}, ring wants {m}x{n}",
            x.rows(),
            x.cols()
        )));
    }
    let mut lookup = Vec::with_capacity(f.support().len());
    for v in f.support() {
        match ring.kind(v)? {
            VarKind::Grid { row, col } => {
                lookup.push((v, x.get(row as usize - 1, col as usize - 1).clone()))
            }
            _ => {
                return Err(Error::ContextMismatch(
                    "evaluation needs a pure grid polynomial".into(),
                ))
            }
        }
    }
    Ok(f.eval(&Rationals, |v| {
        lookup
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, val)| val.clone())
            .expect("support was enumerated")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_products_is_bounded_by_inner_dimension() {
        // 3x2 times 2x4 has rank exactly 2 for these generic entries.
        let a = NumericMatrix::from_i64_rows(&[&[1, 2], &[3, 5], &[-1, 7]]).unwrap();
        let b = NumericMatrix::from_i64_rows(&[&[2, 0, 1, 1], &[1, 4, -2, 3]]).unwrap();
        let prod = a.mul(&b);
        assert_eq!(prod.rank(), 2);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn determinants_with_fractions() {
        let m = NumericMatrix::from_rows(alloc::vec![
            alloc::vec![
                BigRational::new(BigInt::from(1), BigInt::from(2)),
                BigRational::from_integer(BigInt::from(3)),
            ],
            alloc::vec![
                BigRational::from_integer(BigInt::from(1)),
                BigRational::new(BigInt::from(4), BigInt::from(3)),
            ],
        ])
        .unwrap();
        // det = 1/2 * 4/3 - 3 = 2/3 - 3 = -7/3
        assert_eq!(m.det().unwrap(), BigRational::new(BigInt::from(-7), BigInt::from(3)));
        assert!(m.is_invertible());
    }

    #[test]
    fn singular_square_matrix() {
        let m = NumericMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(m.det().unwrap(), BigRational::zero());
        assert_eq!(m.rank(), 1);
        assert!(!m.is_invertible());
    }

    #[test]
    fn pivot_search_crosses_zero_columns() {
        let m = NumericMatrix::from_i64_rows(&[&[0, 0, 1], &[0, 0, 2], &[0, 1, 0]]).unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn block_application_multiplies_selected_rows() {
        let mut x = NumericMatrix::from_i64_rows(&[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let g = NumericMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        x.apply_block_left(&g, 1);
        assert_eq!(*x.get(1, 0), BigRational::from_integer(BigInt::from(1)));
        assert_eq!(*x.get(1, 1), BigRational::from_integer(BigInt::from(1)));
        assert_eq!(*x.get(2, 0), BigRational::zero());
        assert_eq!(*x.get(2, 1), BigRational::from_integer(BigInt::from(1)));
        assert_eq!(*x.get(0, 0), BigRational::from_integer(BigInt::from(1)));
    }
}
