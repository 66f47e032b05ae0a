use crate::algebra::StructureTensor;
use crate::catalog::FamilyTag;
use crate::error::{Error, Result};
use crate::invariants::{center, is_nilpotent};
use crate::matrix::{LinearMap, Matrix, Vector};
use crate::subspace::Subspace;

use super::{extend_basis, inconsistent, symplectic};

/// Normal form of a nilpotent algebra with one-dimensional derived algebra:
/// the witness onto `HeisenbergCentral(k, m)`.
///
/// The alternating form φ with [u, v] = φ(u, v)·z is reduced on a
/// complement of the center, then z and the rest of the center follow.
pub fn canonicalize_alternating(l: &StructureTensor) -> Result<(FamilyTag, LinearMap)> {
    let field = l.field();
    let n = l.dim();
    let d = l.derived_algebra();
    if d.dim() != 1 || !is_nilpotent(l) {
        return Err(Error::PreconditionFailed(
            "needs a nilpotent algebra with dim [L,L] = 1".into(),
        ));
    }
    let z = d.basis()[0].clone();
    let zl = center(l);
    let w: Vec<Vector> = zl
        .complement_indices()
        .into_iter()
        .map(|i| Vector::unit(field, n, i))
        .collect();
    let (pairs, radical) = symplectic(l, &w, &z)?;
    if !radical.is_empty() {
        return Err(inconsistent("alternating form degenerate off the center"));
    }
    let mut cols = Vec::with_capacity(n);
    for (u, v) in &pairs {
        cols.push(u.clone());
        cols.push(v.clone());
    }
    cols.push(z.clone());
    cols.extend(extend_basis(&Subspace::span(field, n, &[z])?, &zl)?);
    let tag = FamilyTag::HeisenbergCentral {
        k: pairs.len(),
        m: zl.dim(),
    };
    Ok((tag, Matrix::from_columns(field, n, &cols)?))
}
