use crate::algebra::StructureTensor;
use crate::catalog::FamilyTag;
use crate::error::{Error, Result};
use crate::invariants::center;
use crate::matrix::{LinearMap, Matrix, Vector};
use crate::subspace::Subspace;

use super::{coords_in, extend_basis, inconsistent, lift_all, sqrt};

/// Witness onto L1 for dim [L,L] = 3 and dim L/Z(L) = 3.
///
/// [L,L] = span{x, y, z} is Heisenberg with [x, y] = z. For w ∉ [L,L],
/// after w ← w − β₃x + α₃y the map ad_w acts on span{x, y} by
/// [[α₁, β₁], [α₂, −α₁]] with eigenvalues ±λ, λ² = α₁² + α₂β₁. Its
/// eigenvectors x′, y′ and w/λ give the L1 basis with z′ = [x′, y′].
pub fn canonicalize_s2(l: &StructureTensor) -> Result<(FamilyTag, LinearMap)> {
    let field = l.field();
    let n = l.dim();
    let d = l.derived_algebra();
    let zl = center(l);
    if d.dim() != 3 || n - zl.dim() != 3 {
        return Err(Error::PreconditionFailed(
            "needs dim [L,L] = 3 and dim L/Z(L) = 3".into(),
        ));
    }
    let dd = l.bracket_space(&d, &d)?;
    if dd.dim() != 1 || !l.bracket_space(&d, &dd)?.is_zero() {
        return Err(inconsistent("[L,L] is not Heisenberg"));
    }
    if zl != dd {
        return Err(inconsistent("Z(L) differs from [[L,L],[L,L]]"));
    }
    let hb = extend_basis(&dd, &d)?;
    let (x, y) = (hb[0].clone(), hb[1].clone());
    let z = l.bracket(&x, &y)?;
    if z.is_zero() {
        return Err(inconsistent("[L,L] is abelian"));
    }
    let frame = [x.clone(), y.clone(), z.clone()];
    let w0 = (0..n)
        .map(|i| Vector::unit(field, n, i))
        .find(|e| !d.contains(e).unwrap_or(true))
        .ok_or_else(|| inconsistent("L = [L,L]"))?;
    let a = coords_in(&l.bracket(&w0, &x)?, &frame)?;
    let b = coords_in(&l.bracket(&w0, &y)?, &frame)?;
    let w = w0.axpy(&-b[2].clone(), &x).axpy(&a[2], &y);
    let (a1, a2, b1) = (a[0].clone(), a[1].clone(), b[0].clone());
    if b[1] != -&a1 {
        return Err(inconsistent("ad_w is not traceless on [L,L]/Z(L)"));
    }
    let disc = &(&a1 * &a1) + &(&a2 * &b1);
    if disc.is_zero() {
        return Err(inconsistent("ad_w is nilpotent on [L,L]"));
    }
    let (lam, ext) = sqrt(&disc)?;
    let (x, y, w) = if ext != field {
        let v = lift_all(&[x, y, w], ext)?;
        (v[0].clone(), v[1].clone(), v[2].clone())
    } else {
        (x, y, w)
    };
    let l = l.lift(ext)?;
    let m = Matrix::from_rows(
        ext,
        vec![vec![a1.lift(ext)?, b1.lift(ext)?], vec![a2.lift(ext)?, (-&a1).lift(ext)?]],
    )?;
    let eig = |mu: &crate::field::Scalar| -> Result<Vector> {
        let k = m.sub(&Matrix::identity(ext, 2).scale(mu))?.kernel();
        let c = k.first().ok_or_else(|| inconsistent("missing eigenvector"))?;
        Ok(x.scale(&c[0]).add(&y.scale(&c[1])))
    };
    let xp = eig(&lam)?;
    let yp = eig(&-&lam)?;
    let zp = l.bracket(&xp, &yp)?;
    let x1 = w.scale(&lam.inv()?);
    let cols = [x1, xp, yp, zp];
    debug_assert!(Subspace::span(ext, n, &cols)?.is_full());
    Ok((FamilyTag::L1, Matrix::from_columns(ext, n, &cols)?))
}
