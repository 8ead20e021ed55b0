//! Dense vectors and matrices over a finite field.
//!
//! An `n x n` [`Matrix`] is an operator on column vectors:
//! `(Tx)_i = sum_j T[i][j] x_j`. Empty shapes (`0 x c`, `r x 0`, `0 x 0`)
//! are ordinary values.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

#[derive(Clone, PartialEq, Eq)]
pub struct Vector {
    field: Field,
    entries: Vec<Elem>,
}

impl Vector {
    pub fn new(field: &Field, entries: Vec<Elem>) -> Self {
        Vector {
            field: field.clone(),
            entries,
        }
    }

    pub fn from_codes(field: &Field, codes: &[u32]) -> Result<Self> {
        let entries = codes
            .iter()
            .map(|&c| field.elem(c))
            .collect::<Result<_>>()?;
        Ok(Vector::new(field, entries))
    }

    pub fn zero(field: &Field, n: usize) -> Self {
        Vector::new(field, vec![Elem::ZERO; n])
    }

    /// Standard basis vector `e_i` (0-based).
    pub fn unit(field: &Field, n: usize, i: usize) -> Self {
        let mut v = Vector::zero(field, n);
        v.entries[i] = Elem::ONE;
        v
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Elem {
        self.entries[i]
    }

    pub fn codes(&self) -> Vec<u32> {
        self.entries.iter().map(|e| e.code()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    fn check(&self, other: &Vector) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch(format!(
                "vectors of length {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.check(other)?;
        let f = &self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(Vector::new(f, entries))
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.check(other)?;
        let f = &self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Ok(Vector::new(f, entries))
    }

    pub fn scale(&self, c: Elem) -> Vector {
        let f = &self.field;
        Vector::new(f, self.entries.iter().map(|&a| f.mul(c, a)).collect())
    }

    /// Lexicographic rank of the vector among all of `F_q^n`, first entry most significant.
    pub fn index(&self) -> u64 {
        let q = u64::from(self.field.order());
        self.entries
            .iter()
            .fold(0, |acc, e| acc * q + u64::from(e.code()))
    }

    pub fn from_index(field: &Field, n: usize, mut index: u64) -> Vector {
        let q = u64::from(field.order());
        let mut entries = vec![Elem::ZERO; n];
        for slot in entries.iter_mut().rev() {
            *slot = Elem::from_code((index % q) as u32);
            index /= q;
        }
        Vector::new(field, entries)
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.codes())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from nested rows of element codes. `cols` is needed to
    /// describe `r x c` matrices with `r = 0`.
    pub fn from_codes(field: &Field, rows: usize, cols: usize, codes: &[Vec<u32>]) -> Result<Self> {
        if codes.len() != rows || codes.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row data does not describe a {rows}x{cols} matrix"
            )));
        }
        let data = codes
            .iter()
            .flatten()
            .map(|&c| field.elem(c))
            .collect::<Result<_>>()?;
        Matrix::new(field, rows, cols, data)
    }

    /// Convenience for square matrices given as nested rows.
    pub fn square(field: &Field, codes: &[Vec<u32>]) -> Result<Self> {
        Matrix::from_codes(field, codes.len(), codes.len(), codes)
    }

    pub fn zero(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// The matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: &Field, rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Matrix::zero(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
            if c.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column of length {} in a matrix with {rows} rows",
                    c.len()
                )));
            }
            for (i, &e) in c.entries().iter().enumerate() {
                m.set(i, j, e);
            }
        }
        Ok(m)
    }

    /// The matrix whose rows are the given vectors, each of length `cols`.
    pub fn from_rows(field: &Field, cols: usize, rows: &[Vector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.field() != field {
                return Err(Error::FieldMismatch);
            }
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            data.extend_from_slice(r.entries());
        }
        Matrix::new(field, rows.len(), cols, data)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, e: Elem) {
        self.data[i * self.cols + j] = e;
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector::new(
            &self.field,
            self.data[i * self.cols..(i + 1) * self.cols].to_vec(),
        )
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::new(
            &self.field,
            (0..self.rows).map(|i| self.get(i, j)).collect(),
        )
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row_codes(&self) -> Vec<Vec<u32>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).code()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mat_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(l, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        if &self.field != x.field() {
            return Err(Error::FieldMismatch);
        }
        if self.cols != x.len() {
            return Err(Error::DimensionMismatch(format!(
                "cannot apply a {}x{} matrix to a vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        let f = &self.field;
        let entries = (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(Elem::ZERO, |acc, j| {
                    f.add(acc, f.mul(self.get(i, j), x.get(j)))
                })
            })
            .collect();
        Ok(Vector::new(f, entries))
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(
                "matrix sum of different shapes".into(),
            ));
        }
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Matrix::new(f, self.rows, self.cols, data)
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn mat_pow(&self, mut e: u64) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(&self.field, n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mat_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mat_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Reduced row echelon form and its pivot columns (ascending).
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let lead_inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let e = f.mul(lead_inv, m.get(r, j));
                m.set(r, j, e);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let e = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, e);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : Ax = 0}`: one vector per free column, ascending, with a
    /// 1 in that column and the negated RREF entries in the pivot columns.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = vec![Elem::ZERO; self.cols];
                x[free] = Elem::ONE;
                for (row, &p) in pivots.iter().enumerate() {
                    x[p] = f.neg(r.get(row, free));
                }
                Vector::new(f, x)
            })
            .collect()
    }

    /// Columns of the matrix at the pivot positions of its RREF.
    pub fn image_basis(&self) -> Vec<Vector> {
        self.rref().1.into_iter().map(|c| self.column(c)).collect()
    }

    pub fn is_invertible(&self) -> Result<bool> {
        let n = self.require_square()?;
        Ok(self.rank() == n)
    }

    /// `T^n = 0` for an `n x n` operator.
    pub fn is_nilpotent(&self) -> Result<bool> {
        let n = self.require_square()?;
        Ok(self.mat_pow(n as u64)?.is_zero())
    }

    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut aug = Matrix::zero(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, Elem::ONE);
        }
        let (r, pivots) = aug.rref();
        if !pivots.iter().copied().take(n).eq(0..n) {
            return Err(Error::NotAutomorphism);
        }
        let mut inv = Matrix::zero(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Ok(inv)
    }

    /// The unique operator on `F_q^n` sending `basis[i]` to `images[i]`.
    /// `basis` must be a basis of the whole space.
    pub fn from_basis_images(field: &Field, basis: &[Vector], images: &[Vector]) -> Result<Matrix> {
        let n = basis.len();
        if images.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {n} basis vectors",
                images.len()
            )));
        }
        let b = Matrix::from_columns(field, n, basis)?;
        let img = Matrix::from_columns(field, n, images)?;
        img.mat_mul(&b.inverse().map_err(|_| Error::NotABasis)?)
    }

    /// Lexicographic rank among all matrices of this shape, row-major with
    /// the first entry most significant.
    pub fn index(&self) -> u64 {
        let q = u64::from(self.field.order());
        self.data
            .iter()
            .fold(0, |acc, e| acc * q + u64::from(e.code()))
    }

    pub fn from_index(field: &Field, rows: usize, cols: usize, mut index: u64) -> Matrix {
        let q = u64::from(field.order());
        let mut m = Matrix::zero(field, rows, cols);
        for slot in m.data.iter_mut().rev() {
            *slot = Elem::from_code((index % q) as u32);
            index /= q;
        }
        m
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.field, self.row_codes())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.field.order().saturating_sub(1).to_string().len();
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", self.get(i, j).code()))
                .collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}
