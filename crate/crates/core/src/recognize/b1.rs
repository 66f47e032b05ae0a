use crate::algebra::StructureTensor;
use crate::catalog::FamilyTag;
use crate::error::{Error, Result};
use crate::invariants::{center, is_nilpotent, is_solvable};
use crate::matrix::{LinearMap, Matrix};

use super::{inconsistent, solve_bracket};

/// Witness onto `Breadth1Solvable(n)`: x spans [L,L], [x, y] = x, and the
/// center supplies the rest.
pub fn canonicalize_b1_solvable(l: &StructureTensor) -> Result<(FamilyTag, LinearMap)> {
    let field = l.field();
    let n = l.dim();
    let d = l.derived_algebra();
    if d.dim() != 1 || is_nilpotent(l) || !is_solvable(l) {
        return Err(Error::PreconditionFailed(
            "needs a solvable nonnilpotent algebra with dim [L,L] = 1".into(),
        ));
    }
    let x = d.basis()[0].clone();
    let y = solve_bracket(l, &x, &x)?.ok_or_else(|| inconsistent("no y with [x, y] = x"))?;
    let z = center(l);
    if z.dim() + 2 != n {
        return Err(inconsistent(format!("center has dimension {} in dimension {n}", z.dim())));
    }
    let mut cols = vec![x, y];
    cols.extend(z.basis().iter().cloned());
    Ok((FamilyTag::Breadth1Solvable(n), Matrix::from_columns(field, n, &cols)?))
}
