use crate::algebra::StructureTensor;
use crate::catalog::{gamma_orbit, FamilyTag};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::invariants::{center, centralizer, lower_central_series};
use crate::matrix::{LinearMap, Matrix, Vector};
use crate::poly::{charpoly, roots};

use super::{coords_in, inconsistent, lift_all, simplify, sqrt};

/// Witness onto L4–L8 when dim [L,L] = 2 and the lower central series is
/// stable in dimension 2.
///
/// L = A ⋉ [L,L] with A abelian; A is found by correcting lifts a_i of a
/// basis of L/[L,L] by v_i ∈ [L,L] so that T_{a_i}v_j − T_{a_j}v_i =
/// −[a_i, a_j]. The commuting actions T_a on [L,L] then decide the family.
pub fn canonicalize_depth2(l: &StructureTensor) -> Result<(FamilyTag, LinearMap)> {
    let field = l.field();
    let d = l.derived_algebra();
    let lcs = lower_central_series(l);
    if d.dim() != 2 || lcs.last().expect("nonempty").dim() != 2 {
        return Err(Error::PreconditionFailed(
            "needs dim [L,L] = 2 with lower central series stable in dimension 2".into(),
        ));
    }
    if !center(l).is_zero() {
        return Err(inconsistent("Z(L) ≠ 0"));
    }
    if !l.bracket_space(&d, &d)?.is_zero() {
        return Err(inconsistent("[L,L] is not abelian"));
    }
    let c = centralizer(l, &d)?;
    if !l.bracket_space(&c, &c)?.is_zero() {
        return Err(inconsistent("C_L([L,L]) is not abelian"));
    }
    if !c.is_zero() && !c.contains_subspace(&d)? {
        return Err(inconsistent("C_L([L,L]) ≠ 0 does not contain [L,L]"));
    }
    let db = d.basis().to_vec();
    let a = abelian_complement(l, &db)?;
    let acts: Vec<Matrix> = a
        .iter()
        .map(|ai| {
            let cols: Vec<Vector> = db
                .iter()
                .map(|v| Vector::new(field, coords_in(&l.bracket(ai, v)?, &db)?))
                .collect::<Result<_>>()?;
            Matrix::from_columns(field, 2, &cols)
        })
        .collect::<Result<_>>()?;
    match a.len() {
        1 => one_generator(l, &a[0], &acts[0], &db),
        2 => two_generators(l, &a, &acts, &db),
        3 => Err(inconsistent(
            "dim A = 3: the Jacobi identity rules this branch out for Lie algebras",
        )),
        m => Err(inconsistent(format!("dim A = {m}"))),
    }
}

/// Lifts of a basis of L/[L,L] corrected to span an abelian subalgebra.
fn abelian_complement(l: &StructureTensor, db: &[Vector]) -> Result<Vec<Vector>> {
    let field = l.field();
    let n = l.dim();
    let d = crate::subspace::Subspace::span(field, n, db)?;
    let lifts: Vec<Vector> = d
        .complement_indices()
        .into_iter()
        .map(|i| Vector::unit(field, n, i))
        .collect();
    let m = lifts.len();
    if m < 2 {
        return Ok(lifts);
    }
    // Unknowns: v_i = c_{i,0} d_0 + c_{i,1} d_1, column 2i + k.
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let target = l.bracket(&lifts[i], &lifts[j])?.neg();
            // [a_i, d_k] for v_j and −[a_j, d_k] for v_i.
            let ti: Vec<Vector> = db.iter().map(|dk| l.bracket(&lifts[i], dk)).collect::<Result<_>>()?;
            let tj: Vec<Vector> = db.iter().map(|dk| l.bracket(&lifts[j], dk)).collect::<Result<_>>()?;
            for r in 0..n {
                let mut row = vec![field.zero(); 2 * m];
                for k in 0..2 {
                    row[2 * j + k] = ti[k][r].clone();
                    row[2 * i + k] = -&tj[k][r];
                }
                rows.push(row);
                rhs.push(target[r].clone());
            }
        }
    }
    let sol = Matrix::from_rows(field, rows)?
        .solve(&Vector::new(field, rhs)?)?
        .ok_or_else(|| inconsistent("no abelian complement to [L,L]"))?;
    Ok(lifts
        .iter()
        .enumerate()
        .map(|(i, a)| a.axpy(&sol[2 * i], &db[0]).axpy(&sol[2 * i + 1], &db[1]))
        .collect())
}

fn in_ambient(c: &Vector, db: &[Vector]) -> Vector {
    db[0].scale(&c[0]).add(&db[1].scale(&c[1]))
}

/// dim A = 1: L8(γ) when T_a is diagonalizable, L7 otherwise.
fn one_generator(l: &StructureTensor, a: &Vector, t: &Matrix, db: &[Vector]) -> Result<(FamilyTag, LinearMap)> {
    let n = l.dim();
    let (eigs, ext) = roots(&charpoly(t)?)?;
    let t = t.lift(ext)?;
    let db = lift_all(db, ext)?;
    let a = a.lift(ext)?;
    if eigs.iter().any(Scalar::is_zero) {
        return Err(inconsistent("zero weight forces b(L) = 1"));
    }
    let id = Matrix::identity(ext, 2);
    if eigs.len() == 1 {
        let lam = &eigs[0];
        let nil = t.scale(&lam.inv()?).sub(&id)?;
        if nil.is_zero() {
            let cols = [a.scale(&lam.inv()?), db[0].clone(), db[1].clone()];
            return Ok((FamilyTag::L8(Scalar::ratio(1, 1)), Matrix::from_columns(ext, n, &cols)?));
        }
        let e = (0..2)
            .map(|i| Vector::unit(ext, 2, i))
            .find(|e| !nil.apply(e).map(|v| v.is_zero()).unwrap_or(true))
            .expect("N ≠ 0");
        let x3 = in_ambient(&e, &db);
        let x2 = in_ambient(&nil.apply(&e)?, &db);
        let cols = [a.scale(&lam.inv()?), x2, x3];
        return Ok((FamilyTag::L7, Matrix::from_columns(ext, n, &cols)?));
    }
    let (l1, l2) = (&eigs[0], &eigs[1]);
    let g = simplify(&l2.checked_div(l1)?);
    let (rep, _) = gamma_orbit(&g)?;
    let (l1, l2) = if rep == g { (l1, l2) } else { (l2, l1) };
    let eig = |mu: &Scalar| -> Result<Vector> {
        let k = t.sub(&id.scale(mu))?.kernel();
        Ok(in_ambient(k.first().ok_or_else(|| inconsistent("missing eigenvector"))?, &db))
    };
    let cols = [a.scale(&l1.inv()?), eig(l1)?, eig(l2)?];
    Ok((FamilyTag::L8(rep), Matrix::from_columns(ext, n, &cols)?))
}

/// dim A = 2: the actions span {I, S} with S traceless; L5 when S is
/// semisimple, L6 when S is nilpotent.
fn two_generators(
    l: &StructureTensor,
    a: &[Vector],
    acts: &[Matrix],
    db: &[Vector],
) -> Result<(FamilyTag, LinearMap)> {
    let field = l.field();
    let n = l.dim();
    if !acts[0].commutes_with(&acts[1])? {
        return Err(inconsistent("actions of A do not commute"));
    }
    // c with c0 T0 + c1 T1 = I, and s with s0 T0 + s1 T1 traceless.
    let flat = |m: &Matrix| -> Vec<Scalar> {
        (0..2).flat_map(|i| (0..2).map(move |j| (i, j))).map(|(i, j)| m.get(i, j).clone()).collect()
    };
    let cols = [
        Vector::new(field, flat(&acts[0]))?,
        Vector::new(field, flat(&acts[1]))?,
    ];
    let sys = Matrix::from_columns(field, 4, &cols)?;
    if sys.rank() != 2 {
        return Err(inconsistent("A acts with a kernel, so Z(L) ≠ 0"));
    }
    let c = sys
        .solve(&Vector::new(field, flat(&Matrix::identity(field, 2)))?)?
        .ok_or_else(|| inconsistent("identity not among the actions"))?;
    let tr = Matrix::from_rows(field, vec![vec![acts[0].trace(), acts[1].trace()]])?;
    let s = tr.kernel().into_iter().next().ok_or_else(|| inconsistent("no traceless action"))?;
    let e = a[0].scale(&c[0]).add(&a[1].scale(&c[1]));
    let f = a[0].scale(&s[0]).add(&a[1].scale(&s[1]));
    let sm = acts[0].scale(&s[0]).add(&acts[1].scale(&s[1]))?;
    let det = sm.determinant()?;
    if det.is_zero() {
        let u = (0..2)
            .map(|i| Vector::unit(field, 2, i))
            .find(|u| !sm.apply(u).map(|v| v.is_zero()).unwrap_or(true))
            .ok_or_else(|| inconsistent("traceless action vanishes"))?;
        let x4 = in_ambient(&u, db);
        let x3 = in_ambient(&sm.apply(&u)?, db);
        return Ok((FamilyTag::L6, Matrix::from_columns(field, n, &[f, e, x3, x4])?));
    }
    let (mu, ext) = sqrt(&-&det)?;
    let lifted = lift_all(&[e, f], ext)?;
    let (e, f) = (&lifted[0], &lifted[1]);
    let db = lift_all(db, ext)?;
    let sm = sm.lift(ext)?;
    let id = Matrix::identity(ext, 2);
    let eig = |m: &Scalar| -> Result<Vector> {
        let k = sm.sub(&id.scale(m))?.kernel();
        Ok(in_ambient(k.first().ok_or_else(|| inconsistent("missing eigenvector"))?, &db))
    };
    let half = Field::from_i64(&ext, 2).inv()?;
    let fm = f.scale(&mu.inv()?);
    let x1 = e.add(&fm).scale(&half);
    let x3 = e.sub(&fm).scale(&half);
    let cols = [x1, eig(&mu)?, x3, eig(&-&mu)?];
    Ok((FamilyTag::L5, Matrix::from_columns(ext, n, &cols)?))
}
