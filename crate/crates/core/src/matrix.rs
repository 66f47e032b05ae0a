//! Dense vectors and matrices over a [`Field`], with exact elimination.
//!
//! Over ℚ, row reduction is fraction-free: rows are scaled to integers and
//! reduced with Bareiss-style exact divisions, so intermediate entries are
//! minors of the input instead of ever-growing fractions. GF(p) uses machine
//! residues; ℚ(√d) falls back to plain Gauss–Jordan on [`Scalar`]s.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{inv_mod, mul_mod, Field, Scalar};

/// A coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn new(field: Field, coords: Vec<Scalar>) -> Result<Vector> {
        if let Some(bad) = coords.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch {
                left: field,
                right: bad.field(),
            });
        }
        Ok(Vector { field, coords })
    }

    pub fn zeros(field: Field, n: usize) -> Vector {
        Vector {
            field,
            coords: vec![field.zero(); n],
        }
    }

    /// Standard basis vector e_i (0-based).
    pub fn unit(field: Field, n: usize, i: usize) -> Vector {
        let mut v = Vector::zeros(field, n);
        v.coords[i] = field.one();
        v
    }

    pub fn from_i64(field: Field, xs: &[i64]) -> Vector {
        Vector {
            field,
            coords: xs.iter().map(|&x| field.from_i64(x)).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn set(&mut self, i: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "scalar field mismatch");
        self.coords[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// Index of the first nonzero coordinate.
    pub fn pivot(&self) -> Option<usize> {
        self.coords.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Vector {
            field: self.field,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Vector {
            field: self.field,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            field: self.field,
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    /// self + c·other
    pub fn axpy(&self, c: &Scalar, other: &Vector) -> Vector {
        self.add(&other.scale(c))
    }

    pub fn neg(&self) -> Vector {
        Vector {
            field: self.field,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
    }

    pub fn lift(&self, field: Field) -> Result<Vector> {
        Ok(Vector {
            field,
            coords: self
                .coords
                .iter()
                .map(|c| c.lift(field))
                .collect::<Result<_>>()?,
        })
    }

    pub(crate) fn check(&self, field: Field, n: usize) -> Result<()> {
        if self.field != field {
            return Err(Error::FieldMismatch {
                left: field,
                right: self.field,
            });
        }
        if self.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.len(),
            });
        }
        Ok(())
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A dense matrix acting on column vectors: `rows` is the codomain
/// dimension, `cols` the domain dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Matrices double as linear maps between coordinate spaces.
pub type LinearMap = Matrix;

/// Reduced row-echelon form of a matrix.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// The nonzero rows of the reduced form, one per pivot.
    pub rows: Vec<Vector>,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    found: row.len(),
                });
            }
            for x in row {
                if x.field() != field {
                    return Err(Error::FieldMismatch {
                        left: field,
                        right: x.field(),
                    });
                }
                data.push(x);
            }
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(field, rows).expect("rectangular integer matrix")
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Result<Matrix> {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            col.check(field, rows)?;
            for i in 0..rows {
                m.data[i * m.cols + j] = col[i].clone();
            }
        }
        Ok(m)
    }

    pub fn from_row_vectors(field: Field, cols: usize, rows: &[Vector]) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            r.check(field, cols)?;
            data.extend(r.coords().iter().cloned());
        }
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn diagonal(field: Field, entries: &[Scalar]) -> Matrix {
        let n = entries.len();
        let mut m = Matrix::zeros(field, n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "scalar field mismatch");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector {
            field: self.field,
            coords: self.data[i * self.cols..(i + 1) * self.cols].to_vec(),
        }
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector {
            field: self.field,
            coords: (0..self.rows).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        v.check(self.field, self.cols)?;
        let mut out = Vector::zeros(self.field, self.rows);
        for i in 0..self.rows {
            let mut acc = self.field.zero();
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    acc = &acc + &(a * &v[j]);
                }
            }
            out.coords[i] = acc;
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_shape(other)?;
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_shape(other)?;
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn commutes_with(&self, other: &Matrix) -> Result<bool> {
        Ok(self.mul(other)? == other.mul(self)?)
    }

    /// Columns `cols` of rows `rows`.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.data[a * cols.len() + b] = self.get(i, j).clone();
            }
        }
        m
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let mut m = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[i * m.cols + j] = self.get(i, j).clone();
            }
            for j in 0..other.cols {
                m.data[i * m.cols + self.cols + j] = other.get(i, j).clone();
            }
        }
        Ok(m)
    }

    pub fn lift(&self, field: Field) -> Result<Matrix> {
        Ok(Matrix {
            field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|c| c.lift(field)).collect::<Result<_>>()?,
        })
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        Ok(())
    }

    fn check_shape(&self, other: &Matrix) -> Result<()> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(())
    }

    /// Reduced row-echelon form.
    pub fn rref(&self) -> Echelon {
        match self.field {
            Field::Rationals => rref_rational(self),
            Field::Prime(p) => rref_prime(self, p),
            Field::Quadratic(_) => rref_generic(self),
        }
    }

    pub fn rank(&self) -> usize {
        match self.field {
            Field::Prime(p) => rank_prime(self, p),
            _ => self.rref().rank(),
        }
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        match self.field {
            Field::Rationals => {
                let (ints, scales) = integer_rows(self);
                let det = bareiss_det(ints);
                let denom = scales.iter().fold(BigInt::one(), |acc, s| acc * s);
                Ok(Scalar::Rational(BigRational::new(det, denom)))
            }
            _ => Ok(det_generic(self)),
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n))?;
        let ech = aug.rref();
        if ech.rank() < n || (n > 0 && ech.pivots[n - 1] != n - 1) {
            return Err(Error::SingularMatrix);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for (i, row) in ech.rows.iter().enumerate() {
            for j in 0..n {
                inv.data[i * n + j] = row[n + j].clone();
            }
        }
        Ok(inv)
    }

    /// Basis of the null space {v : Mv = 0}.
    pub fn kernel(&self) -> Vec<Vector> {
        let ech = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = Vector::unit(self.field, self.cols, f);
                for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                    v.coords[p] = -&row[f];
                }
                v
            })
            .collect()
    }

    /// Some solution of Mx = b, if one exists.
    pub fn solve(&self, b: &Vector) -> Result<Option<Vector>> {
        b.check(self.field, self.rows)?;
        let bm = Matrix::from_columns(self.field, self.rows, std::slice::from_ref(b))?;
        let ech = self.hstack(&bm)?.rref();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = Vector::zeros(self.field, self.cols);
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            x.coords[p] = row[self.cols].clone();
        }
        Ok(Some(x))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}

/// Scales each row by the lcm of its denominators. Returns the integer rows
/// and the scale factor applied to each.
fn integer_rows(m: &Matrix) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let mut rows = Vec::with_capacity(m.rows);
    let mut scales = Vec::with_capacity(m.rows);
    for i in 0..m.rows {
        let entries: Vec<&BigRational> = (0..m.cols)
            .map(|j| match m.get(i, j) {
                Scalar::Rational(v) => v,
                _ => unreachable!("rational matrix"),
            })
            .collect();
        let l = entries.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        rows.push(
            entries
                .iter()
                .map(|v| v.numer() * (&l / v.denom()))
                .collect(),
        );
        scales.push(l);
    }
    (rows, scales)
}

fn rref_rational(m: &Matrix) -> Echelon {
    let (mut a, _) = integer_rows(m);
    let (rows, cols) = (m.rows, m.cols);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Smallest nonzero entry keeps the products short.
        let Some(p) = (r..rows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].bits())
        else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][c].clone();
        let (head, tail) = a.split_at_mut(r);
        let (prow, tail) = tail.split_first_mut().expect("pivot row");
        for row in head.iter_mut().chain(tail.iter_mut()) {
            let f = row[c].clone();
            for j in 0..cols {
                let v = &piv * &row[j] - &f * &prow[j];
                debug_assert!((&v % &prev).is_zero(), "inexact fraction-free step");
                row[j] = v / &prev;
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    let out_rows = a
        .into_iter()
        .take(r)
        .zip(&pivots)
        .map(|(row, &p)| {
            let piv = row[p].clone();
            Vector {
                field: Field::Rationals,
                coords: row
                    .into_iter()
                    .map(|x| Scalar::Rational(BigRational::new(x, piv.clone())))
                    .collect(),
            }
        })
        .collect();
    Echelon {
        rows: out_rows,
        pivots,
    }
}

fn residues(m: &Matrix) -> Vec<Vec<u64>> {
    (0..m.rows)
        .map(|i| {
            (0..m.cols)
                .map(|j| match m.get(i, j) {
                    Scalar::Modular { value, .. } => *value,
                    _ => unreachable!("modular matrix"),
                })
                .collect()
        })
        .collect()
}

/// In-place Gauss–Jordan over GF(p); returns pivot columns.
pub(crate) fn gauss_jordan_mod(a: &mut [Vec<u64>], p: u64, reduce_above: bool) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv_row) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv_row);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let start = if reduce_above { 0 } else { r + 1 };
        for i in start..rows {
            if i == r || a[i][c] == 0 {
                continue;
            }
            let f = a[i][c];
            for j in c..cols {
                let sub = mul_mod(f, a[r][j], p);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn rref_prime(m: &Matrix, p: u64) -> Echelon {
    let mut a = residues(m);
    let pivots = gauss_jordan_mod(&mut a, p, true);
    let rows = a
        .into_iter()
        .take(pivots.len())
        .map(|row| Vector {
            field: m.field,
            coords: row
                .into_iter()
                .map(|value| Scalar::Modular { value, modulus: p })
                .collect(),
        })
        .collect();
    Echelon { rows, pivots }
}

fn rank_prime(m: &Matrix, p: u64) -> usize {
    let mut a = residues(m);
    gauss_jordan_mod(&mut a, p, false).len()
}

fn rref_generic(m: &Matrix) -> Echelon {
    let mut a: Vec<Vec<Scalar>> = (0..m.rows).map(|i| m.row(i).coords).collect();
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        a[r] = a[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..cols {
                let sub = &f * &a[r][j];
                a[i][j] = &a[i][j] - &sub;
            }
        }
        pivots.push(c);
        r += 1;
    }
    let rows = a
        .into_iter()
        .take(r)
        .map(|coords| Vector {
            field: m.field,
            coords,
        })
        .collect();
    Echelon { rows, pivots }
}

/// Fraction-free determinant of an integer matrix.
pub(crate) fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn det_generic(m: &Matrix) -> Scalar {
    let n = m.rows;
    let mut a: Vec<Vec<Scalar>> = (0..n).map(|i| m.row(i).coords).collect();
    let mut det = m.field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return m.field.zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = &det * &a[c][c];
        let inv = a[c][c].inv().expect("nonzero pivot");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let sub = &f * &a[c][j];
                a[i][j] = &a[i][j] - &sub;
            }
        }
    }
    det
}
