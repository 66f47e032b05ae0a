//! Lie algebras given by structure constants.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{Matrix, Vector};
use crate::subspace::Subspace;

/// A Lie algebra L with basis e_0, …, e_{n−1} and brackets
/// [e_i, e_j] = Σ_k c_{ij}^k e_k, stored only for i < j.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureTensor {
    dim: usize,
    field: Field,
    /// Pair-major: entry (pair(i, j), k).
    coeffs: Vec<Scalar>,
}

/// Jacobi violations found by [`StructureTensor::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Triples (i, j, k), i < j < k, 0-based.
    pub violations: Vec<[usize; 3]>,
}

impl ValidationReport {
    pub fn is_lie(&self) -> bool {
        self.violations.is_empty()
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl StructureTensor {
    pub fn abelian(field: Field, n: usize) -> StructureTensor {
        StructureTensor {
            dim: n,
            field,
            coeffs: vec![field.zero(); pair_count(n) * n],
        }
    }

    /// Builds a tensor from sparse integer brackets `(i, j, [(k, c), …])`,
    /// meaning [e_i, e_j] = Σ c·e_k. Indices are 0-based; i > j is allowed
    /// and stored with the sign flipped.
    pub fn from_int_brackets(
        field: Field,
        n: usize,
        brackets: &[(usize, usize, &[(usize, i64)])],
    ) -> Result<StructureTensor> {
        let mut t = StructureTensor::abelian(field, n);
        for &(i, j, terms) in brackets {
            let mut v = Vector::zeros(field, n);
            for &(k, c) in terms {
                if k >= n {
                    return Err(Error::DimensionMismatch { expected: n, found: k + 1 });
                }
                v.set(k, &v[k] + &field.from_i64(c));
            }
            t.set_bracket(i, j, &v)?;
        }
        Ok(t)
    }

    /// Sets [e_i, e_j] = v (and hence [e_j, e_i] = −v).
    pub fn set_bracket(&mut self, i: usize, j: usize, v: &Vector) -> Result<()> {
        let n = self.dim;
        v.check(self.field, n)?;
        if i >= n || j >= n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: i.max(j) + 1,
            });
        }
        if i == j {
            if v.is_zero() {
                return Ok(());
            }
            return Err(Error::BadParameter(format!("[e{i}, e{i}] must be zero")));
        }
        let (a, b, v) = if i < j { (i, j, v.clone()) } else { (j, i, v.neg()) };
        let base = pair_index(n, a, b) * n;
        self.coeffs[base..base + n].clone_from_slice(v.coords());
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::unit(self.field, self.dim, i)
    }

    /// c_{ij}^k for any i, j.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.coeffs[pair_index(self.dim, i, j) * self.dim + k].clone(),
            std::cmp::Ordering::Greater => -&self.coeffs[pair_index(self.dim, j, i) * self.dim + k],
            std::cmp::Ordering::Equal => self.field.zero(),
        }
    }

    /// [e_i, e_j] for any i, j.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let n = self.dim;
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Vector::zeros(self.field, n),
            std::cmp::Ordering::Less => {
                let base = pair_index(n, i, j) * n;
                Vector::new(self.field, self.coeffs[base..base + n].to_vec()).expect("field")
            }
            std::cmp::Ordering::Greater => self.bracket_basis(j, i).neg(),
        }
    }

    /// Nonzero brackets [e_i, e_j] with i < j.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vector)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.bracket_basis(i, j);
                if !v.is_zero() {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn bracket(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        let n = self.dim;
        u.check(self.field, n)?;
        v.check(self.field, n)?;
        let mut out = vec![self.field.zero(); n];
        for i in 0..n {
            for j in i + 1..n {
                let base = pair_index(n, i, j) * n;
                let block = &self.coeffs[base..base + n];
                if block.iter().all(Scalar::is_zero) {
                    continue;
                }
                let w = &(&u[i] * &v[j]) - &(&u[j] * &v[i]);
                if w.is_zero() {
                    continue;
                }
                for (o, c) in out.iter_mut().zip(block) {
                    if !c.is_zero() {
                        *o = &*o + &(&w * c);
                    }
                }
            }
        }
        Vector::new(self.field, out)
    }

    /// Lists every basis triple on which the Jacobi identity fails.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let b: Vec<Vec<Vector>> = (0..n)
            .map(|i| (0..n).map(|j| self.bracket_basis(i, j)).collect())
            .collect();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let t1 = self.bracket_vec_basis(&b[i][j], k);
                    let t2 = self.bracket_vec_basis(&b[j][k], i);
                    let t3 = self.bracket_vec_basis(&b[k][i], j);
                    if !t1.add(&t2).add(&t3).is_zero() {
                        violations.push([i, j, k]);
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn is_lie(&self) -> bool {
        self.validate().is_lie()
    }

    /// [v, e_k]
    fn bracket_vec_basis(&self, v: &Vector, k: usize) -> Vector {
        let n = self.dim;
        let mut out = Vector::zeros(self.field, n);
        for (i, c) in v.coords().iter().enumerate() {
            if !c.is_zero() && i != k {
                out = out.axpy(c, &self.bracket_basis(i, k));
            }
        }
        out
    }

    /// Matrix of ad_x: column j is [x, e_j].
    pub fn ad_matrix(&self, x: &Vector) -> Result<Matrix> {
        x.check(self.field, self.dim)?;
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.bracket_vec_basis(x, j)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// ad_{e_i}.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.bracket_basis(i, j)).collect();
        Matrix::from_columns(self.field, self.dim, &cols).expect("consistent")
    }

    /// ad_x on the echelon basis of A, with values in the ambient space.
    pub fn ad_restricted(&self, x: &Vector, a: &Subspace) -> Result<Matrix> {
        self.check_subspace(a)?;
        let cols = a
            .basis()
            .iter()
            .map(|b| self.bracket(x, b))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// The algebra in the basis given by the columns of P:
    /// [u, v]′ = P⁻¹[Pu, Pv].
    pub fn change_basis(&self, p: &Matrix) -> Result<StructureTensor> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.rows().max(p.cols()),
            });
        }
        if p.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: p.field(),
            });
        }
        let inv = p.inverse()?;
        let cols = p.columns();
        let mut out = StructureTensor::abelian(self.field, n);
        for i in 0..n {
            for j in i + 1..n {
                let w = self.bracket(&cols[i], &cols[j])?;
                if w.is_zero() {
                    continue;
                }
                out.set_bracket(i, j, &inv.apply(&w)?)?;
            }
        }
        Ok(out)
    }

    pub fn direct_sum(&self, other: &StructureTensor) -> Result<StructureTensor> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        let (n1, n2) = (self.dim, other.dim);
        let n = n1 + n2;
        let mut out = StructureTensor::abelian(self.field, n);
        for (i, j, v) in self.nonzero_brackets() {
            let mut w = Vector::zeros(self.field, n);
            for k in 0..n1 {
                w.set(k, v[k].clone());
            }
            out.set_bracket(i, j, &w)?;
        }
        for (i, j, v) in other.nonzero_brackets() {
            let mut w = Vector::zeros(self.field, n);
            for k in 0..n2 {
                w.set(n1 + k, v[k].clone());
            }
            out.set_bracket(n1 + i, n1 + j, &w)?;
        }
        Ok(out)
    }

    /// A ⋉ V for abelian A = span{a_1..a_m} acting on abelian V by the given
    /// commuting k×k matrices. The basis is a_1..a_m followed by v_1..v_k,
    /// and [a_i, v_j] is column j of T_i.
    pub fn semidirect(actions: &[Matrix]) -> Result<StructureTensor> {
        let first = actions
            .first()
            .ok_or_else(|| Error::BadParameter("semidirect needs at least one action".into()))?;
        let field = first.field();
        let k = first.rows();
        for t in actions {
            if t.field() != field {
                return Err(Error::FieldMismatch {
                    left: field,
                    right: t.field(),
                });
            }
            if t.rows() != k || t.cols() != k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    found: t.rows().max(t.cols()),
                });
            }
        }
        for (a, s) in actions.iter().enumerate() {
            for t in &actions[a + 1..] {
                if !s.commutes_with(t)? {
                    return Err(Error::NonCommutingActions);
                }
            }
        }
        let m = actions.len();
        let n = m + k;
        let mut out = StructureTensor::abelian(field, n);
        for (i, t) in actions.iter().enumerate() {
            for j in 0..k {
                let col = t.column(j);
                if col.is_zero() {
                    continue;
                }
                let mut w = Vector::zeros(field, n);
                for r in 0..k {
                    w.set(m + r, col[r].clone());
                }
                out.set_bracket(i, m + j, &w)?;
            }
        }
        Ok(out)
    }

    /// Whether [L, I] ⊆ I.
    pub fn is_ideal(&self, ideal: &Subspace) -> Result<bool> {
        self.check_subspace(ideal)?;
        for i in 0..self.dim {
            let e = self.basis_vector(i);
            for b in ideal.basis() {
                if !ideal.contains(&self.bracket(&e, b)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// L/I on the coset representatives e_c, c a non-pivot column of I,
    /// together with the projection L → L/I.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(StructureTensor, Matrix)> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let reps = ideal.complement_indices();
        let m = reps.len();
        let project = |v: &Vector| -> Result<Vector> {
            let r = ideal.reduce(v)?;
            Vector::new(self.field, reps.iter().map(|&c| r[c].clone()).collect())
        };
        let cols = (0..self.dim)
            .map(|j| project(&self.basis_vector(j)))
            .collect::<Result<Vec<_>>>()?;
        let proj = Matrix::from_columns(self.field, m, &cols)?;
        let mut q = StructureTensor::abelian(self.field, m);
        for s in 0..m {
            for t in s + 1..m {
                let w = project(&self.bracket_basis(reps[s], reps[t]))?;
                if !w.is_zero() {
                    q.set_bracket(s, t, &w)?;
                }
            }
        }
        Ok((q, proj))
    }

    /// span{[s, t] : s ∈ S, t ∈ T}.
    pub fn bracket_space(&self, s: &Subspace, t: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        self.check_subspace(t)?;
        let mut vs = Vec::new();
        for a in s.basis() {
            for b in t.basis() {
                let w = self.bracket(a, b)?;
                if !w.is_zero() {
                    vs.push(w);
                }
            }
        }
        Subspace::span(self.field, self.dim, &vs)
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    /// [L, L].
    pub fn derived_algebra(&self) -> Subspace {
        let vs: Vec<Vector> = self.nonzero_brackets().into_iter().map(|(_, _, v)| v).collect();
        Subspace::span(self.field, self.dim, &vs).expect("consistent")
    }

    /// The same structure constants over a field containing this one.
    pub fn lift(&self, field: Field) -> Result<StructureTensor> {
        Ok(StructureTensor {
            dim: self.dim,
            field,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.lift(field))
                .collect::<Result<_>>()?,
        })
    }

    /// Coefficient-wise reduction of a rational tensor modulo p.
    pub fn reduce_mod_p(&self, p: u64) -> Result<StructureTensor> {
        if self.field != Field::Rationals {
            return Err(Error::UnsupportedField {
                field: self.field,
                reason: "reduction mod p starts from rational coefficients".into(),
            });
        }
        let bp = num_bigint::BigInt::from(p);
        for c in &self.coeffs {
            let v = c.as_rational().expect("rational");
            if (v.denom() % &bp) == num_bigint::BigInt::from(0) {
                return Err(Error::BadPrime { p });
            }
        }
        let field = Field::prime(p)?;
        let out = self.lift(field)?;
        debug_assert!(out.is_lie() || !self.is_lie());
        Ok(out)
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: s.field(),
            });
        }
        if s.ambient() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for StructureTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim {} over {}", self.dim, self.field)?;
        for (i, j, v) in self.nonzero_brackets() {
            write!(f, "[e{}, e{}] =", i + 1, j + 1)?;
            let mut first = true;
            for (k, c) in v.coords().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " +")?;
                }
                first = false;
                if c.is_one() {
                    write!(f, " e{}", k + 1)?;
                } else {
                    write!(f, " ({c})e{}", k + 1)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
