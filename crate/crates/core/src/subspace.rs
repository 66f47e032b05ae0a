//! Subspaces of a coordinate space, kept in reduced row-echelon form.
//!
//! The echelon basis is canonical, so two subspaces are equal exactly when
//! their basis matrices are equal and `==` is structural.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{Matrix, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: (0..ambient).map(|i| Vector::unit(field, ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vector]) -> Result<Subspace> {
        if vectors.is_empty() {
            return Ok(Subspace::zero(field, ambient));
        }
        let ech = Matrix::from_row_vectors(field, ambient, vectors)?.rref();
        Ok(Subspace {
            field,
            ambient,
            basis: ech.rows,
            pivots: ech.pivots,
        })
    }

    /// Span of standard basis vectors e_i for i in `indices` (0-based).
    pub fn coordinate(field: Field, ambient: usize, indices: &[usize]) -> Subspace {
        let vs: Vec<Vector> = indices.iter().map(|&i| Vector::unit(field, ambient, i)).collect();
        Subspace::span(field, ambient, &vs).expect("unit vectors")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Echelon basis, one vector per pivot.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the columns of an ambient × dim matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient, &self.basis).expect("consistent basis")
    }

    /// Reduces `v` against the echelon basis; the result is zero iff v ∈ self.
    pub fn reduce(&self, v: &Vector) -> Result<Vector> {
        v.check(self.field, self.ambient)?;
        let mut r = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if !c.is_zero() {
                r = r.axpy(&-c, b);
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        for b in &other.basis {
            if !self.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of v in the echelon basis, or `None` if v ∉ self.
    pub fn coordinates(&self, v: &Vector) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        // Echelon rows are reduced, so the coefficient of row i is v at its pivot.
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient, &vs)
    }

    pub fn add_vector(&self, v: &Vector) -> Result<Subspace> {
        let mut vs = self.basis.clone();
        vs.push(v.clone());
        Subspace::span(self.field, self.ambient, &vs)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        // Solve Σ a_i s_i − Σ b_j t_j = 0; the a-parts give the intersection.
        let neg: Vec<Vector> = other.basis.iter().map(Vector::neg).collect();
        let m = self
            .basis_matrix()
            .hstack(&Matrix::from_columns(self.field, self.ambient, &neg)?)?;
        let k = self.dim();
        let vs: Vec<Vector> = m
            .kernel()
            .iter()
            .map(|sol| {
                self.basis
                    .iter()
                    .enumerate()
                    .fold(Vector::zeros(self.field, self.ambient), |acc, (i, b)| {
                        acc.axpy(&sol[i], b)
                    })
            })
            .collect();
        debug_assert!(vs.len() <= k);
        Subspace::span(self.field, self.ambient, &vs)
    }

    /// Standard basis vectors at the non-pivot columns: a complement to self.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    pub fn lift(&self, field: Field) -> Result<Subspace> {
        let vs = self.basis.iter().map(|b| b.lift(field)).collect::<Result<Vec<_>>>()?;
        Subspace::span(field, self.ambient, &vs)
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn v(xs: &[i64]) -> Vector {
        Vector::from_i64(Q, xs)
    }

    #[test]
    fn span_is_canonical() {
        let a = Subspace::span(Q, 3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(Q, 3, &[v(&[1, 2, 1]), v(&[1, 0, -1])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn intersection_and_sum() {
        let s = Subspace::span(Q, 3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let t = Subspace::span(Q, 3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(s.intersect(&t).unwrap(), Subspace::coordinate(Q, 3, &[1]));
        assert!(s.sum(&t).unwrap().is_full());
        assert_eq!(s.intersect(&s).unwrap(), s);
        let x2 = Subspace::coordinate(Q, 4, &[1]);
        let x3 = Subspace::coordinate(Q, 4, &[2]);
        assert_eq!(x2.sum(&x3).unwrap().dim(), 2);
    }

    #[test]
    fn coordinates_in_echelon_basis() {
        let s = Subspace::span(Q, 3, &[v(&[1, 0, 2]), v(&[0, 1, 3])]).unwrap();
        let c = s.coordinates(&v(&[2, -1, 1])).unwrap().unwrap();
        assert_eq!(c, vec![Q.from_i64(2), Q.from_i64(-1)]);
        assert_eq!(s.coordinates(&v(&[0, 0, 1])).unwrap(), None);
    }
}
