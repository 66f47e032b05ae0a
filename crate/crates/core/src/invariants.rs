//! Series, center, centralizers, structural predicates, and maximal abelian
//! ideals.

use crate::algebra::StructureTensor;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{Matrix, Vector};
use crate::poly::{charpoly, roots};
use crate::subspace::Subspace;

/// L^(0) ⊋ L^(1) ⊋ … with L^(k) = [L^(k−1), L^(k−1)], up to the first
/// repeated term.
pub fn derived_series(l: &StructureTensor) -> Vec<Subspace> {
    let mut series = vec![l.full()];
    loop {
        let cur = series.last().expect("nonempty");
        let next = if cur.is_full() {
            l.derived_algebra()
        } else {
            l.bracket_space(cur, cur).expect("same algebra")
        };
        if &next == cur {
            return series;
        }
        series.push(next);
    }
}

/// L^0 = L ⊋ L^1 ⊋ … with L^k = [L, L^(k−1)], up to the first repeated term.
pub fn lower_central_series(l: &StructureTensor) -> Vec<Subspace> {
    let full = l.full();
    let mut series = vec![full.clone()];
    loop {
        let cur = series.last().expect("nonempty");
        let next = if cur.is_full() {
            l.derived_algebra()
        } else {
            l.bracket_space(&full, cur).expect("same algebra")
        };
        if &next == cur {
            return series;
        }
        series.push(next);
    }
}

/// {x : [x, s] = 0 for all s ∈ S}.
pub fn centralizer(l: &StructureTensor, s: &Subspace) -> Result<Subspace> {
    let n = l.dim();
    if s.ambient() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: s.ambient(),
        });
    }
    if s.is_zero() {
        return Ok(l.full());
    }
    let mut rows = Vec::new();
    for b in s.basis() {
        rows.extend(l.ad_matrix(b)?.row_vectors());
    }
    let m = Matrix::from_row_vectors(l.field(), n, &rows)?;
    Subspace::span(l.field(), n, &m.kernel())
}

pub fn center(l: &StructureTensor) -> Subspace {
    centralizer(l, &l.full()).expect("same algebra")
}

pub fn is_solvable(l: &StructureTensor) -> bool {
    derived_series(l).last().expect("nonempty").is_zero()
}

pub fn is_nilpotent(l: &StructureTensor) -> bool {
    lower_central_series(l).last().expect("nonempty").is_zero()
}

/// Z(L) ⊆ [L, L].
pub fn is_pure(l: &StructureTensor) -> bool {
    l.derived_algebra()
        .contains_subspace(&center(l))
        .expect("same algebra")
}

/// K(e_i, e_j) = tr(ad_{e_i} ad_{e_j}).
pub fn killing_form(l: &StructureTensor) -> Matrix {
    let n = l.dim();
    let ads: Vec<Matrix> = (0..n).map(|i| l.ad_basis(i)).collect();
    let mut k = Matrix::zeros(l.field(), n, n);
    for i in 0..n {
        for j in i..n {
            let t = ads[i].mul(&ads[j]).expect("square").trace();
            k.set(i, j, t.clone());
            k.set(j, i, t);
        }
    }
    k
}

/// Cartan's criterion: nondegenerate Killing form.
pub fn is_semisimple(l: &StructureTensor) -> Result<bool> {
    if !l.field().is_char_zero() {
        return Err(Error::UnsupportedField {
            field: l.field(),
            reason: "the Killing-form criterion needs characteristic zero".into(),
        });
    }
    if l.dim() == 0 {
        return Ok(true);
    }
    Ok(!killing_form(l).determinant()?.is_zero())
}

/// Summary of the standard invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub dim: usize,
    pub dim_derived: usize,
    pub dim_center: usize,
    pub derived_series_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    pub solvable: bool,
    pub nilpotent: bool,
    pub pure: bool,
}

impl InvariantReport {
    /// Dimension of the term where the lower central series stabilizes.
    pub fn lcs_stable_dim(&self) -> usize {
        *self.lower_central_dims.last().expect("nonempty")
    }
}

pub fn invariants(l: &StructureTensor) -> InvariantReport {
    let ds = derived_series(l);
    let lcs = lower_central_series(l);
    let z = center(l);
    let d = l.derived_algebra();
    InvariantReport {
        dim: l.dim(),
        dim_derived: d.dim(),
        dim_center: z.dim(),
        derived_series_dims: ds.iter().map(Subspace::dim).collect(),
        lower_central_dims: lcs.iter().map(Subspace::dim).collect(),
        solvable: ds.last().expect("nonempty").is_zero(),
        nilpotent: lcs.last().expect("nonempty").is_zero(),
        pure: d.contains_subspace(&z).expect("same algebra"),
    }
}

/// A common eigenvector of pairwise commuting square matrices, with its
/// weights.
///
/// Works over ℚ or ℚ(√d); over ℚ it adjoins one square root if an
/// eigenvalue needs it, and the returned vector lives in that field. Among
/// the candidate eigenspaces the one whose echelon basis has the smallest
/// leading pivot wins (ties by eigenvalue), and its first echelon vector
/// is returned.
pub fn common_eigenvector(actions: &[Matrix]) -> Result<(Vector, Vec<Scalar>)> {
    let first = actions
        .first()
        .ok_or_else(|| Error::BadParameter("no action matrices".into()))?;
    let k = first.rows();
    let mut field = first.field();
    if !field.is_char_zero() {
        return Err(Error::UnsupportedField {
            field,
            reason: "eigenvectors are extracted in characteristic zero".into(),
        });
    }
    if k == 0 {
        return Err(Error::BadParameter("zero-dimensional module".into()));
    }
    for (i, a) in actions.iter().enumerate() {
        for b in &actions[i + 1..] {
            if !a.commutes_with(b)? {
                return Err(Error::NonCommutingActions);
            }
        }
    }
    let mut acts: Vec<Matrix> = actions.to_vec();
    let mut space = Subspace::full(field, k);
    let mut weights: Vec<Scalar> = Vec::new();
    for idx in 0..acts.len() {
        let t = &acts[idx];
        let b = space.basis_matrix();
        // Matrix of T on the invariant subspace in its echelon basis.
        let images: Vec<Vector> = space
            .basis()
            .iter()
            .map(|v| t.apply(v))
            .collect::<Result<_>>()?;
        let restricted: Vec<Vector> = images
            .iter()
            .map(|w| {
                space
                    .coordinates(w)?
                    .map(|c| Vector::new(field, c))
                    .transpose()?
                    .ok_or(Error::NonCommutingActions)
            })
            .collect::<Result<_>>()?;
        let r = Matrix::from_columns(field, space.dim(), &restricted)?;
        let (eigs, ext) = roots(&charpoly(&r)?)?;
        let (r, b) = if ext != field {
            field = ext;
            acts = acts.iter().map(|a| a.lift(ext)).collect::<Result<_>>()?;
            weights = weights.iter().map(|w| w.lift(ext)).collect::<Result<_>>()?;
            (r.lift(ext)?, b.lift(ext)?)
        } else {
            (r, b)
        };
        let mut best: Option<(usize, Scalar, Subspace)> = None;
        for lam in eigs {
            let shifted = r.sub(&Matrix::identity(field, r.rows()).scale(&lam))?;
            let vs: Vec<Vector> = shifted
                .kernel()
                .iter()
                .map(|c| b.apply(c))
                .collect::<Result<_>>()?;
            let e = Subspace::span(field, k, &vs)?;
            let Some(&p) = e.pivots().first() else {
                continue;
            };
            let better = match &best {
                None => true,
                Some((bp, bl, _)) => p < *bp || (p == *bp && lam.canonical_cmp(bl).is_lt()),
            };
            if better {
                best = Some((p, lam, e));
            }
        }
        let (_, lam, e) = best.ok_or_else(|| {
            Error::InconsistentWithClassification("no eigenvalue on an invariant subspace".into())
        })?;
        weights.push(lam);
        space = e;
    }
    Ok((space.basis()[0].clone(), weights))
}

/// An abelian ideal A of a solvable algebra with C_L(A) = A.
///
/// Starting from the last nonzero derived term, A is enlarged by a common
/// eigenvector of L acting on the part of C_L(A)/A killed by [L, L] until
/// it is self-centralizing. The result may live in a quadratic extension
/// of the input field.
pub fn maximal_abelian_ideal(l: &StructureTensor) -> Result<Subspace> {
    if !l.field().is_char_zero() {
        return Err(Error::UnsupportedField {
            field: l.field(),
            reason: "Lie's theorem is applied in characteristic zero".into(),
        });
    }
    let ds = derived_series(l);
    if !ds.last().expect("nonempty").is_zero() {
        return Err(Error::NotSolvable);
    }
    let mut l = l.clone();
    let mut a = if ds.len() >= 2 {
        ds[ds.len() - 2].clone()
    } else {
        return Ok(l.full());
    };
    loop {
        let c = centralizer(&l, &a)?;
        if c == a {
            return Ok(a);
        }
        let field = l.field();
        let n = l.dim();
        // Representatives of C/A.
        let mut reps: Vec<Vector> = Vec::new();
        let mut acc = a.clone();
        for v in c.basis() {
            if !acc.contains(v)? {
                acc = acc.add_vector(v)?;
                reps.push(v.clone());
            }
        }
        // Q0 = {q ∈ C/A : [[L,L], q] ⊆ A}.
        let derived = l.derived_algebra();
        let mut rows: Vec<Vector> = Vec::new();
        for d in derived.basis() {
            let cols: Vec<Vector> = reps
                .iter()
                .map(|w| a.reduce(&l.bracket(d, w)?))
                .collect::<Result<_>>()?;
            rows.extend(Matrix::from_columns(field, n, &cols)?.row_vectors());
        }
        let q0: Vec<Vector> = if rows.is_empty() {
            reps.clone()
        } else {
            Matrix::from_row_vectors(field, reps.len(), &rows)?
                .kernel()
                .iter()
                .map(|alpha| combine(field, n, alpha, &reps))
                .collect()
        };
        if q0.is_empty() {
            return Err(Error::InconsistentWithClassification(
                "[L,L] acts without fixed vectors on C(A)/A".into(),
            ));
        }
        // Matrices of ad_{e_i} on Q0 modulo A.
        let mut frame = q0.clone();
        frame.extend(a.basis().iter().cloned());
        let frame_m = Matrix::from_columns(field, n, &frame)?;
        let r = q0.len();
        let mut acts = Vec::new();
        for i in 0..n {
            let e = l.basis_vector(i);
            let mut cols = Vec::with_capacity(r);
            for u in &q0 {
                let w = l.bracket(&e, u)?;
                let x = frame_m.solve(&w)?.ok_or(Error::NotAnIdeal)?;
                cols.push(Vector::new(field, x.coords()[..r].to_vec())?);
            }
            let m = Matrix::from_columns(field, r, &cols)?;
            if !m.is_zero() {
                acts.push(m);
            }
        }
        if acts.is_empty() {
            acts.push(Matrix::zeros(field, r, r));
        }
        let (alpha, _) = common_eigenvector(&acts)?;
        if alpha.field() != field {
            let ext = alpha.field();
            l = l.lift(ext)?;
            a = a.lift(ext)?;
            let q0: Vec<Vector> = q0.iter().map(|v| v.lift(ext)).collect::<Result<_>>()?;
            a = a.add_vector(&combine(ext, n, &alpha, &q0))?;
        } else {
            a = a.add_vector(&combine(field, n, &alpha, &q0))?;
        }
    }
}

fn combine(field: Field, n: usize, coeffs: &Vector, vs: &[Vector]) -> Vector {
    vs.iter()
        .zip(coeffs.coords())
        .fold(Vector::zeros(field, n), |acc, (v, c)| acc.axpy(c, v))
}
