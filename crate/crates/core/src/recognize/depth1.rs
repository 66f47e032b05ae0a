use crate::algebra::StructureTensor;
use crate::catalog::FamilyTag;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::invariants::{center, centralizer, lower_central_series};
use crate::matrix::{LinearMap, Matrix, Vector};
use crate::subspace::Subspace;

use super::{along, coords_in, combine, extend_basis, inconsistent, solve_bracket, symplectic};

/// Witness onto L2(n) or L3(n) when dim [L,L] = 2 and the lower central
/// series stabilizes in dimension 1.
///
/// With x spanning the stable term, z spanning Z(L) and [x, y] = x, the
/// centralizer of x splits as span{x} ⊕ C′ where [y, C′] ⊆ span{z}. The
/// form [u, v] = φ(u, v)·z on C′ has radical span{z} or span{z, w}.
/// Shifting y inside the symplectic part removes its pairing with C′; a
/// surviving w has [y, w] ≠ 0 and gives L3, otherwise the result is L2.
pub fn canonicalize_depth1(l: &StructureTensor) -> Result<(FamilyTag, LinearMap)> {
    let field = l.field();
    let n = l.dim();
    let d = l.derived_algebra();
    let lcs = lower_central_series(l);
    let stable = lcs.last().expect("nonempty");
    if d.dim() != 2 || stable.dim() != 1 {
        return Err(Error::PreconditionFailed(
            "needs dim [L,L] = 2 with lower central series stable in dimension 1".into(),
        ));
    }
    let zl = center(l);
    if zl.dim() != 1 {
        return Err(inconsistent(format!("dim Z(L) = {}, expected 1", zl.dim())));
    }
    let x = stable.basis()[0].clone();
    let z = zl.basis()[0].clone();
    let y = solve_bracket(l, &x, &x)?.ok_or_else(|| inconsistent("no y with [x, y] = x"))?;
    let cx = centralizer(l, &Subspace::span(field, n, std::slice::from_ref(&x))?)?;
    if cx.dim() + 1 != n {
        return Err(inconsistent("b(x) ≠ 1"));
    }
    // x-component of [y, c] for c in the centralizer of x.
    let xz = [x.clone(), z.clone()];
    let alpha: Vec<Scalar> = cx
        .basis()
        .iter()
        .map(|c| Ok(coords_in(&l.bracket(&y, c)?, &xz)?[0].clone()))
        .collect::<Result<_>>()?;
    let row = Matrix::from_rows(field, vec![alpha])?;
    let cprime: Vec<Vector> = row
        .kernel()
        .iter()
        .map(|k| combine(field, n, k.coords(), cx.basis()))
        .collect();
    let cprime = Subspace::span(field, n, &cprime)?;
    let w = extend_basis(&Subspace::span(field, n, std::slice::from_ref(&z))?, &cprime)?;
    let (pairs, radical) = symplectic(l, &w, &z)?;
    let phi_y = |c: &Vector| -> Result<Scalar> { along(&l.bracket(&y, c)?, &z) };
    // y ← y + v with φ(v, ·) = −φ_y on the symplectic part.
    let mut v = Vector::zeros(field, n);
    for (u, t) in &pairs {
        v = v.axpy(&-phi_y(t)?, u).axpy(&phi_y(u)?, t);
    }
    let y = y.add(&v);
    let mut cols = vec![x, y.clone()];
    let tag = match radical.as_slice() {
        [] => {
            if pairs.is_empty() {
                return Err(inconsistent("no symplectic pairs for L2"));
            }
            FamilyTag::L2(2 * pairs.len())
        }
        [r] => {
            let c = phi_y(r)?;
            if c.is_zero() {
                return Err(inconsistent("a second central direction"));
            }
            cols.push(r.scale(&c.inv()?));
            FamilyTag::L3(2 * pairs.len() + 1)
        }
        _ => return Err(inconsistent("radical of the form is too large")),
    };
    for (u, t) in pairs {
        cols.push(u);
        cols.push(t);
    }
    cols.push(z);
    if cols.len() != n {
        return Err(inconsistent("basis does not fill L"));
    }
    Ok((tag, Matrix::from_columns(field, n, &cols)?))
}
