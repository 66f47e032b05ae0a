//! Recognition of pure solvable algebras of breadth at most 2.
//!
//! [`classify`] names the family and returns a witness P whose columns are
//! the catalog basis written in input coordinates, so that
//! `change_basis(L, P) == build(family)`. The witness may live in a
//! quadratic extension of the input field.

mod alternating;
mod b1;
mod depth1;
mod depth2;
mod s2;

pub use alternating::canonicalize_alternating;
pub use b1::canonicalize_b1_solvable;
pub use depth1::canonicalize_depth1;
pub use depth2::canonicalize_depth2;
pub use s2::canonicalize_s2;

use crate::algebra::StructureTensor;
use crate::breadth::{breadth_with, BreadthOptions, Method};
use crate::catalog::{build, gamma_orbit, FamilyTag};
use crate::error::{Error, Result};
use crate::field::{sqrt_or_extend, Field, Scalar};
use crate::invariants::{is_nilpotent, is_pure, is_solvable, lower_central_series};
use crate::matrix::{LinearMap, Matrix, Vector};
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub family: FamilyTag,
    /// {γ, γ⁻¹} for L8, canonical representative first.
    pub parameter_orbit: Option<(Scalar, Scalar)>,
    pub witness: LinearMap,
    pub verified: bool,
    pub field_used: Field,
}

pub fn classify(l: &StructureTensor) -> Result<ClassificationReport> {
    check_preconditions(l)?;
    let b = exact_breadth(l)?;
    let d = l.derived_algebra();
    let (family, witness) = match b {
        0 => (FamilyTag::Abelian(l.dim()), Matrix::identity(l.field(), l.dim())),
        1 if is_nilpotent(l) => canonicalize_alternating(l)?,
        1 => canonicalize_b1_solvable(l)?,
        _ => {
            if is_nilpotent(l) {
                return Err(Error::PreconditionFailed(
                    "nilpotent algebras of breadth 2 are outside the classified families".into(),
                ));
            }
            match d.dim() {
                3 => canonicalize_s2(l)?,
                2 => {
                    let stable = lower_central_series(l).last().expect("nonempty").dim();
                    match stable {
                        1 => canonicalize_depth1(l)?,
                        2 => canonicalize_depth2(l)?,
                        s => {
                            return Err(Error::InconsistentWithClassification(format!(
                                "lower central series stabilizes at dimension {s}"
                            )))
                        }
                    }
                }
                k => {
                    return Err(Error::InconsistentWithClassification(format!(
                        "breadth 2 with dim [L,L] = {k}"
                    )))
                }
            }
        }
    };
    let field_used = witness.field();
    let verified = witness_holds(l, &witness, &family)?;
    let parameter_orbit = match &family {
        FamilyTag::L8(g) => Some(gamma_orbit(g)?),
        _ => None,
    };
    Ok(ClassificationReport {
        family,
        parameter_orbit,
        witness,
        verified,
        field_used,
    })
}

fn check_preconditions(l: &StructureTensor) -> Result<()> {
    let report = l.validate();
    if !report.is_lie() {
        let triples: Vec<String> = report
            .violations
            .iter()
            .map(|[i, j, k]| format!("({},{},{})", i + 1, j + 1, k + 1))
            .collect();
        return Err(Error::PreconditionFailed(format!(
            "Jacobi identity fails at {}",
            triples.join(", ")
        )));
    }
    if !l.field().is_char_zero() {
        return Err(Error::PreconditionFailed(format!(
            "classification works over ℚ or ℚ(√d), not {}",
            l.field()
        )));
    }
    if !is_solvable(l) {
        return Err(Error::PreconditionFailed("not solvable".into()));
    }
    if !is_pure(l) {
        return Err(Error::PreconditionFailed("not pure: Z(L) ⊄ [L,L]".into()));
    }
    Ok(())
}

/// b(L) when it is at most 2, certified exactly.
fn exact_breadth(l: &StructureTensor) -> Result<usize> {
    let sampled = breadth_with(
        l,
        &BreadthOptions {
            method: Method::MonteCarlo,
            ..BreadthOptions::default()
        },
    );
    // A sampled rank is attained, so it is a lower bound.
    if sampled.value > 2 {
        return Err(Error::PreconditionFailed(format!("b(L) ≥ {}", sampled.value)));
    }
    let r = breadth_with(
        l,
        &BreadthOptions {
            certify_max_dim: usize::MAX,
            ..BreadthOptions::default()
        },
    );
    if !r.is_exact() {
        return Err(Error::PreconditionFailed("breadth could not be certified".into()));
    }
    if r.value > 2 {
        return Err(Error::PreconditionFailed(format!("b(L) = {}", r.value)));
    }
    Ok(r.value)
}

fn witness_holds(l: &StructureTensor, p: &Matrix, family: &FamilyTag) -> Result<bool> {
    let f = p.field();
    if !p.is_invertible() {
        return Ok(false);
    }
    Ok(l.lift(f)?.change_basis(p)? == build(family, f)?)
}

/// Decides isomorphism of two algebras in the classified families and, when
/// they are isomorphic, returns P with P[u, v] = [Pu, Pv]′.
pub fn are_isomorphic(l: &StructureTensor, m: &StructureTensor) -> Result<(bool, Option<LinearMap>)> {
    let r1 = classify(l)?;
    let r2 = classify(m)?;
    if r1.family != r2.family {
        return Ok((false, None));
    }
    let f = common_field(r1.field_used, r2.field_used)?;
    let p1 = r1.witness.lift(f)?;
    let p2 = r2.witness.lift(f)?;
    let p = p2.mul(&p1.inverse()?)?;
    Ok((true, Some(p)))
}

fn common_field(a: Field, b: Field) -> Result<Field> {
    if a.embeds_into(&b) {
        Ok(b)
    } else if b.embeds_into(&a) {
        Ok(a)
    } else {
        Err(Error::FieldExtensionNeeded(format!("witnesses live in {a} and {b}")))
    }
}

/// P is invertible and P[e_i, e_j] = [Pe_i, Pe_j]′ for all i < j.
pub fn verify_isomorphism(l: &StructureTensor, m: &StructureTensor, p: &Matrix) -> Result<bool> {
    let n = l.dim();
    if m.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.dim(),
        });
    }
    if p.rows() != n || p.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: if p.rows() != n { p.rows() } else { p.cols() },
        });
    }
    let f = common_field(common_field(l.field(), m.field())?, p.field())?;
    let (l, m, p) = (l.lift(f)?, m.lift(f)?, p.lift(f)?);
    if !p.is_invertible() {
        return Ok(false);
    }
    let cols = p.columns();
    for i in 0..n {
        for j in i + 1..n {
            if p.apply(&l.bracket_basis(i, j))? != m.bracket(&cols[i], &cols[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// Shared helpers for the canonicalizers.

fn inconsistent(msg: impl Into<String>) -> Error {
    Error::InconsistentWithClassification(msg.into())
}

/// c with w = c·z, or an error if w leaves span{z}.
fn along(w: &Vector, z: &Vector) -> Result<Scalar> {
    let p = z.pivot().ok_or_else(|| inconsistent("zero reference vector"))?;
    let c = w[p].checked_div(&z[p])?;
    if &z.scale(&c) != w {
        return Err(inconsistent("bracket leaves the expected line"));
    }
    Ok(c)
}

/// Coefficients of v in the (linearly independent) vectors `basis`.
fn coords_in(v: &Vector, basis: &[Vector]) -> Result<Vec<Scalar>> {
    let m = Matrix::from_columns(v.field(), v.len(), basis)?;
    Ok(m
        .solve(v)?
        .ok_or_else(|| inconsistent("vector outside the expected subspace"))?
        .into_coords())
}

/// Vectors of `within` extending a basis of `sub` to a basis of `within`.
fn extend_basis(sub: &Subspace, within: &Subspace) -> Result<Vec<Vector>> {
    let mut acc = sub.clone();
    let mut out = Vec::new();
    for v in within.basis() {
        if !acc.contains(v)? {
            acc = acc.add_vector(v)?;
            out.push(v.clone());
        }
    }
    Ok(out)
}

/// y with [x, y] = target.
fn solve_bracket(l: &StructureTensor, x: &Vector, target: &Vector) -> Result<Option<Vector>> {
    l.ad_matrix(x)?.solve(target)
}

fn combine(field: Field, n: usize, coeffs: &[Scalar], vs: &[Vector]) -> Vector {
    vs.iter()
        .zip(coeffs)
        .fold(Vector::zeros(field, n), |acc, (v, c)| acc.axpy(c, v))
}

fn lift_all(vs: &[Vector], f: Field) -> Result<Vec<Vector>> {
    vs.iter().map(|v| v.lift(f)).collect()
}

/// √c, mapping a demand for a second extension to `FieldExtensionNeeded`.
fn sqrt(c: &Scalar) -> Result<(Scalar, Field)> {
    sqrt_or_extend(c).map_err(|e| match e {
        Error::AlreadyExtended(f) => {
            Error::FieldExtensionNeeded(format!("√({c}) needs an extension of {f}"))
        }
        other => other,
    })
}

/// Scalars that happen to be rational are stored as such.
fn simplify(s: &Scalar) -> Scalar {
    match s.as_rational() {
        Some(q) => Scalar::Rational(q.clone()),
        None => s.clone(),
    }
}

/// Symplectic reduction of the alternating form φ defined on span(vs) by
/// [u, v] = φ(u, v)·z. Returns pairs with φ(u, v) = 1 and a basis of the
/// radical.
fn symplectic(
    l: &StructureTensor,
    vs: &[Vector],
    z: &Vector,
) -> Result<(Vec<(Vector, Vector)>, Vec<Vector>)> {
    let phi = |u: &Vector, v: &Vector| -> Result<Scalar> { along(&l.bracket(u, v)?, z) };
    let mut rest: Vec<Vector> = vs.to_vec();
    let mut pairs = Vec::new();
    let mut radical = Vec::new();
    while !rest.is_empty() {
        let u = rest.remove(0);
        let mut partner = None;
        for (j, w) in rest.iter().enumerate() {
            let c = phi(&u, w)?;
            if !c.is_zero() {
                partner = Some((j, c));
                break;
            }
        }
        let Some((j, c)) = partner else {
            radical.push(u);
            continue;
        };
        let v = rest.remove(j).scale(&c.inv()?);
        rest = rest
            .iter()
            .map(|w| Ok(w.axpy(&-phi(w, &v)?, &u).axpy(&phi(w, &u)?, &v)))
            .collect::<Result<_>>()?;
        pairs.push((u, v));
    }
    Ok((pairs, radical))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn symplectic_pairs_on_heisenberg5() {
        let h = build(&FamilyTag::HeisenbergCentral { k: 2, m: 1 }, Q).unwrap();
        let z = Vector::unit(Q, 5, 4);
        // mixed generators so that the pairing is nontrivial
        let vs: Vec<Vector> = (0..4)
            .map(|i| match i {
                3 => Vector::unit(Q, 5, 3),
                _ => Vector::unit(Q, 5, i).add(&Vector::unit(Q, 5, i + 1)),
            })
            .collect();
        let (pairs, radical) = symplectic(&h, &vs, &z).unwrap();
        assert_eq!(pairs.len(), 2);
        assert!(radical.is_empty());
        for (u, v) in &pairs {
            assert_eq!(h.bracket(u, v).unwrap(), z);
        }
        let (a, b) = (&pairs[0], &pairs[1]);
        for (p, q) in [(&a.0, &b.0), (&a.0, &b.1), (&a.1, &b.0), (&a.1, &b.1)] {
            assert!(h.bracket(p, q).unwrap().is_zero());
        }
    }

    fn conjugator(n: usize) -> Matrix {
        // unipotent upper triangle with a few sign changes
        let mut p = Matrix::identity(Q, n);
        for i in 0..n {
            for j in i + 1..n {
                p.set(i, j, Q.from_i64(((i + 2 * j) % 5) as i64 - 2));
            }
        }
        p.mul(&p.transpose()).unwrap()
    }

    fn round_trip(tag: FamilyTag) -> ClassificationReport {
        let l = build(&tag, Q).unwrap();
        let p = conjugator(l.dim());
        let r = classify(&l.change_basis(&p).unwrap()).unwrap();
        assert!(r.verified, "{tag}");
        assert_eq!(r.family, crate::catalog::normalize(&tag).unwrap(), "{tag}");
        let direct = classify(&l).unwrap();
        assert!(direct.verified && direct.family == r.family, "{tag}");
        r
    }

    #[test]
    fn catalog_round_trips() {
        for tag in [
            FamilyTag::Abelian(0),
            FamilyTag::HeisenbergCentral { k: 1, m: 1 },
            FamilyTag::HeisenbergCentral { k: 2, m: 1 },
            FamilyTag::Breadth1Solvable(2),
            FamilyTag::L1,
            FamilyTag::L2(2),
            FamilyTag::L2(4),
            FamilyTag::L3(1),
            FamilyTag::L3(3),
            FamilyTag::L5,
            FamilyTag::L6,
            FamilyTag::L7,
            FamilyTag::L8(Scalar::ratio(2, 1)),
            FamilyTag::L8(Scalar::ratio(-1, 1)),
            FamilyTag::L8(Scalar::ratio(1, 3)),
            FamilyTag::L8(Scalar::ratio(1, 1)),
        ] {
            let r = round_trip(tag.clone());
            assert_eq!(r.field_used, Q, "{tag}");
        }
    }

    #[test]
    fn l8_orbit_is_reported() {
        let r = round_trip(FamilyTag::L8(Scalar::ratio(2, 1)));
        assert_eq!(r.parameter_orbit, Some((Scalar::ratio(1, 2), Scalar::ratio(2, 1))));
        assert_eq!(r.family, FamilyTag::L8(Scalar::ratio(1, 2)));
    }

    #[test]
    fn semidirect_examples() {
        let j = StructureTensor::semidirect(&[Matrix::from_i64(Q, &[&[1, 1], &[0, 1]])]).unwrap();
        assert_eq!(classify(&j).unwrap().family, FamilyTag::L7);
        let t = StructureTensor::semidirect(&[Matrix::from_i64(Q, &[&[1, 1], &[0, 3]])]).unwrap();
        let r = classify(&t).unwrap();
        assert_eq!(r.family, FamilyTag::L8(Scalar::ratio(1, 3)));
        assert_eq!(r.parameter_orbit, Some((Scalar::ratio(1, 3), Scalar::ratio(3, 1))));
    }

    #[test]
    fn irrational_weights_extend_the_field() {
        // T = [[0, 2], [1, 0]] has weights ±√2, so the ratio is −1.
        let t = StructureTensor::semidirect(&[Matrix::from_i64(Q, &[&[0, 2], &[1, 0]])]).unwrap();
        let r = classify(&t).unwrap();
        assert!(r.verified);
        assert_eq!(r.family, FamilyTag::L8(Scalar::ratio(-1, 1)));
        assert_eq!(r.field_used, Field::Quadratic(2));
        // T = [[1, 1], [1, 0]] has weights (1 ± √5)/2.
        let t = StructureTensor::semidirect(&[Matrix::from_i64(Q, &[&[1, 1], &[1, 0]])]).unwrap();
        let r = classify(&t).unwrap();
        assert!(r.verified);
        assert_eq!(r.field_used, Field::Quadratic(5));
        let FamilyTag::L8(g) = &r.family else { panic!("{}", r.family) };
        assert!(g.as_rational().is_none());
    }

    #[test]
    fn l1_form_needing_sqrt2() {
        // [w, x] = y, [w, y] = 2x, [x, y] = z: λ² = 2.
        let l = StructureTensor::from_int_brackets(
            Q,
            4,
            &[(0, 1, &[(2, 1)]), (0, 2, &[(1, 2)]), (1, 2, &[(3, 1)])],
        )
        .unwrap();
        assert!(l.is_lie());
        let r = classify(&l).unwrap();
        assert_eq!(r.family, FamilyTag::L1);
        assert!(r.verified);
        assert_eq!(r.field_used, Field::Quadratic(2));
    }

    #[test]
    fn l5_over_an_extension() {
        // A = span{I, S} with S = [[0, 3], [1, 0]].
        let i = Matrix::identity(Q, 2);
        let s = Matrix::from_i64(Q, &[&[0, 3], &[1, 0]]);
        let l = StructureTensor::semidirect(&[i, s]).unwrap();
        let r = classify(&l).unwrap();
        assert_eq!(r.family, FamilyTag::L5);
        assert!(r.verified);
        assert_eq!(r.field_used, Field::Quadratic(3));
    }

    #[test]
    fn preconditions() {
        let bad = |l: &StructureTensor| matches!(classify(l), Err(Error::PreconditionFailed(_)));
        assert!(bad(&build(&FamilyTag::L4, Q).unwrap()));
        assert!(bad(&build(&FamilyTag::Abelian(2), Q).unwrap()));
        let l7 = build(&FamilyTag::L7, Q).unwrap();
        assert!(bad(&l7.direct_sum(&StructureTensor::abelian(Q, 1)).unwrap()));
        let h = build(&FamilyTag::HeisenbergCentral { k: 1, m: 1 }, Q).unwrap();
        assert!(bad(&h.direct_sum(&h).unwrap()));
        let l1 = build(&FamilyTag::L1, Q).unwrap();
        // b(L1 ⊕ L8) = 4
        assert!(bad(&l1.direct_sum(&build(&FamilyTag::L7, Q).unwrap()).unwrap()));
        let g = build(&FamilyTag::L7, Field::prime(5).unwrap()).unwrap();
        assert!(bad(&g));
    }

    #[test]
    fn isomorphism_decisions() {
        let l8 = |p, q| build(&FamilyTag::L8(Scalar::ratio(p, q)), Q).unwrap();
        let (iso, w) = are_isomorphic(&l8(2, 1), &l8(1, 2)).unwrap();
        assert!(iso);
        assert!(verify_isomorphism(&l8(2, 1), &l8(1, 2), &w.unwrap()).unwrap());
        assert!(!are_isomorphic(&l8(2, 1), &l8(3, 1)).unwrap().0);
        let l7 = build(&FamilyTag::L7, Q).unwrap();
        assert!(!are_isomorphic(&l7, &l8(1, 1)).unwrap().0);
    }

    #[test]
    fn identity_is_an_automorphism() {
        let l = build(&FamilyTag::L1, Q).unwrap();
        assert!(verify_isomorphism(&l, &l, &Matrix::identity(Q, 4)).unwrap());
        let s = Matrix::identity(Q, 4).scale(&Q.from_i64(2));
        assert!(!verify_isomorphism(&l, &l, &s).unwrap());
        let m = build(&FamilyTag::L7, Q).unwrap();
        assert!(matches!(
            verify_isomorphism(&l, &m, &Matrix::identity(Q, 4)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn l8_inverse_parameter_map() {
        // x1 ↦ γx1′, x2 ↦ x3′, x3 ↦ x2′ carries L8(γ) onto L8(1/γ).
        let g = Scalar::ratio(2, 1);
        let l = build(&FamilyTag::L8(g.clone()), Q).unwrap();
        let m = build(&FamilyTag::L8(g.inv().unwrap()), Q).unwrap();
        let mut p = Matrix::zeros(Q, 3, 3);
        p.set(0, 0, g);
        p.set(2, 1, Q.one());
        p.set(1, 2, Q.one());
        assert!(verify_isomorphism(&l, &m, &p).unwrap());
    }
}
