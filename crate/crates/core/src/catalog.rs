//! The classified algebras and their expected invariants.
//!
//! Basis orderings follow the classification table: L2(n) is
//! `x1, x2, z1, …, zn, z`, the Heisenberg family is
//! `x1, y1, …, xk, yk, z1, …, zm`, and so on.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Signed;

use crate::algebra::StructureTensor;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Vector;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    Abelian(usize),
    HeisenbergCentral { k: usize, m: usize },
    Breadth1Solvable(usize),
    L1,
    L2(usize),
    L3(usize),
    L4,
    L5,
    L6,
    L7,
    L8(Scalar),
}

/// Invariant row for a catalog algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedInvariants {
    pub dim: usize,
    pub dim_derived: usize,
    pub dim_center: usize,
    pub breadth: usize,
    pub solvable: bool,
    pub nilpotent: bool,
    pub pure: bool,
    pub lcs_stable_dim: usize,
}

impl FamilyTag {
    /// Checks the parameter constraints of the family.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::BadParameter(format!("{self}: {m}")));
        match self {
            FamilyTag::HeisenbergCentral { k, m } if *k == 0 || *m == 0 => bad("needs k ≥ 1 and m ≥ 1"),
            FamilyTag::Breadth1Solvable(n) if *n < 2 => bad("needs n ≥ 2"),
            FamilyTag::L2(n) if *n < 2 || n % 2 == 1 => bad("needs n even and ≥ 2"),
            FamilyTag::L3(n) if n % 2 == 0 => bad("needs n odd"),
            FamilyTag::L8(g) if g.is_zero() => bad("γ must be nonzero"),
            FamilyTag::L8(g) if matches!(g, Scalar::Modular { .. }) => bad("γ must be in ℚ or ℚ(√d)"),
            _ => Ok(()),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            FamilyTag::Abelian(n) | FamilyTag::Breadth1Solvable(n) => *n,
            FamilyTag::HeisenbergCentral { k, m } => 2 * k + m,
            FamilyTag::L1 | FamilyTag::L5 | FamilyTag::L6 => 4,
            FamilyTag::L2(n) | FamilyTag::L3(n) => n + 3,
            FamilyTag::L4 => 5,
            FamilyTag::L7 | FamilyTag::L8(_) => 3,
        }
    }

    /// The family name without parameters.
    pub fn name(&self) -> &'static str {
        match self {
            FamilyTag::Abelian(_) => "Abelian",
            FamilyTag::HeisenbergCentral { .. } => "HeisenbergCentral",
            FamilyTag::Breadth1Solvable(_) => "Breadth1Solvable",
            FamilyTag::L1 => "L1",
            FamilyTag::L2(_) => "L2",
            FamilyTag::L3(_) => "L3",
            FamilyTag::L4 => "L4",
            FamilyTag::L5 => "L5",
            FamilyTag::L6 => "L6",
            FamilyTag::L7 => "L7",
            FamilyTag::L8(_) => "L8",
        }
    }

    /// One representative of every family, for listings.
    pub fn samples() -> Vec<FamilyTag> {
        vec![
            FamilyTag::Abelian(3),
            FamilyTag::HeisenbergCentral { k: 1, m: 1 },
            FamilyTag::Breadth1Solvable(2),
            FamilyTag::L1,
            FamilyTag::L2(2),
            FamilyTag::L3(1),
            FamilyTag::L4,
            FamilyTag::L5,
            FamilyTag::L6,
            FamilyTag::L7,
            FamilyTag::L8(Scalar::ratio(2, 1)),
        ]
    }

    /// Basis labels in catalog order.
    pub fn basis_labels(&self) -> Vec<String> {
        let xs = |n: usize| (1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>();
        match self {
            FamilyTag::Abelian(n) => xs(*n),
            FamilyTag::HeisenbergCentral { k, m } => {
                let mut v = Vec::new();
                for i in 1..=*k {
                    v.push(format!("x{i}"));
                    v.push(format!("y{i}"));
                }
                v.extend((1..=*m).map(|i| format!("z{i}")));
                v
            }
            FamilyTag::Breadth1Solvable(n) => {
                let mut v = vec!["x".to_string(), "y".to_string()];
                v.extend((1..=n - 2).map(|i| format!("z{i}")));
                v
            }
            FamilyTag::L1 => vec!["x1".into(), "x2".into(), "x3".into(), "z".into()],
            FamilyTag::L2(n) | FamilyTag::L3(n) => {
                let mut v = xs(2);
                v.extend((1..=*n).map(|i| format!("z{i}")));
                v.push("z".into());
                v
            }
            other => xs(other.dim()),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Abelian(n) => write!(f, "Abelian({n})"),
            FamilyTag::HeisenbergCentral { k, m } => write!(f, "HeisenbergCentral({k},{m})"),
            FamilyTag::Breadth1Solvable(n) => write!(f, "Breadth1Solvable({n})"),
            FamilyTag::L2(n) => write!(f, "L2({n})"),
            FamilyTag::L3(n) => write!(f, "L3({n})"),
            FamilyTag::L8(g) => write!(f, "L8({g})"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    /// Parses the `Display` form, e.g. `L2(4)`, `HeisenbergCentral(2,1)`,
    /// `L8(1/2)`, `L8(1+sqrt(2))`.
    fn from_str(s: &str) -> Result<FamilyTag> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unknown family tag {s:?}"));
        let (name, args) = match s.find('(') {
            Some(i) => {
                let inner = s[i + 1..].strip_suffix(')').ok_or_else(bad)?;
                (&s[..i], Some(inner))
            }
            None => (s, None),
        };
        let ints = |a: Option<&str>| -> Result<Vec<usize>> {
            a.ok_or_else(bad)?
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        let one = |a: Option<&str>| -> Result<usize> {
            match ints(a)?.as_slice() {
                [n] => Ok(*n),
                _ => Err(bad()),
            }
        };
        let tag = match name {
            "Abelian" => FamilyTag::Abelian(one(args)?),
            "HeisenbergCentral" => match ints(args)?.as_slice() {
                [k, m] => FamilyTag::HeisenbergCentral { k: *k, m: *m },
                _ => return Err(bad()),
            },
            "Breadth1Solvable" => FamilyTag::Breadth1Solvable(one(args)?),
            "L2" => FamilyTag::L2(one(args)?),
            "L3" => FamilyTag::L3(one(args)?),
            "L8" => FamilyTag::L8(Scalar::parse_any(args.ok_or_else(bad)?)?),
            "L1" | "L4" | "L5" | "L6" | "L7" if args.is_none() => match name {
                "L1" => FamilyTag::L1,
                "L4" => FamilyTag::L4,
                "L5" => FamilyTag::L5,
                "L6" => FamilyTag::L6,
                _ => FamilyTag::L7,
            },
            _ => return Err(bad()),
        };
        tag.validate()?;
        Ok(tag)
    }
}

type Bracket = (usize, usize, Vec<(usize, Scalar)>);

/// The catalog algebra over `field`.
pub fn build(tag: &FamilyTag, field: Field) -> Result<StructureTensor> {
    tag.validate()?;
    field.validate()?;
    let one = field.one();
    let unit = |i: usize, j: usize, k: usize| -> Bracket { (i, j, vec![(k, one.clone())]) };
    let n = tag.dim();
    let brackets: Vec<Bracket> = match tag {
        FamilyTag::Abelian(_) => vec![],
        FamilyTag::HeisenbergCentral { k, .. } => (0..*k).map(|i| unit(2 * i, 2 * i + 1, 2 * k)).collect(),
        FamilyTag::Breadth1Solvable(_) => vec![unit(0, 1, 0)],
        FamilyTag::L1 => vec![unit(0, 1, 1), (0, 2, vec![(2, -&one)]), unit(1, 2, 3)],
        FamilyTag::L2(m) => {
            let mut b = vec![unit(0, 1, 0)];
            b.extend((0..*m).step_by(2).map(|i| unit(2 + i, 3 + i, m + 2)));
            b
        }
        FamilyTag::L3(m) => {
            let mut b = vec![unit(0, 1, 0), unit(1, 2, m + 2)];
            b.extend((1..*m).step_by(2).map(|i| unit(2 + i, 3 + i, m + 2)));
            b
        }
        FamilyTag::L4 => vec![unit(0, 4, 3), unit(1, 3, 3), unit(2, 4, 4)],
        FamilyTag::L5 => vec![unit(0, 1, 1), unit(2, 3, 3)],
        FamilyTag::L6 => vec![unit(0, 3, 2), unit(1, 2, 2), unit(1, 3, 3)],
        FamilyTag::L7 => vec![unit(0, 1, 1), (0, 2, vec![(1, one.clone()), (2, one.clone())])],
        FamilyTag::L8(g) => {
            let g = g
                .lift(field)
                .map_err(|_| Error::BadParameter(format!("γ = {g} is not in {field}")))?;
            vec![unit(0, 1, 1), (0, 2, vec![(2, g)])]
        }
    };
    let mut t = StructureTensor::abelian(field, n);
    for (i, j, terms) in brackets {
        let mut v = Vector::zeros(field, n);
        for (k, c) in terms {
            v.set(k, c);
        }
        t.set_bracket(i, j, &v)?;
    }
    Ok(t)
}

/// The invariant row the classification predicts for `tag`.
pub fn expected_invariants(tag: &FamilyTag) -> ExpectedInvariants {
    let row = |dim, dim_derived, dim_center, breadth, nilpotent, pure, lcs_stable_dim| ExpectedInvariants {
        dim,
        dim_derived,
        dim_center,
        breadth,
        solvable: true,
        nilpotent,
        pure,
        lcs_stable_dim,
    };
    match tag {
        FamilyTag::Abelian(n) => row(*n, 0, *n, 0, true, *n == 0, 0),
        FamilyTag::HeisenbergCentral { k, m } => row(2 * k + m, 1, *m, 1, true, *m == 1, 0),
        FamilyTag::Breadth1Solvable(n) => row(*n, 1, n - 2, 1, false, *n == 2, 1),
        // [x1, span{x2, x3, z}] already recovers x2 and x3, and [x2, x3] = z.
        FamilyTag::L1 => row(4, 3, 1, 2, false, true, 3),
        FamilyTag::L2(n) | FamilyTag::L3(n) => row(n + 3, 2, 1, 2, false, true, 1),
        FamilyTag::L4 => row(5, 2, 0, 2, false, true, 2),
        FamilyTag::L5 | FamilyTag::L6 => row(4, 2, 0, 2, false, true, 2),
        FamilyTag::L7 | FamilyTag::L8(_) => row(3, 2, 0, 2, false, true, 2),
    }
}

/// The orbit {γ, γ⁻¹} as (canonical representative, the other element).
///
/// Rational γ (also when written in ℚ(√d)) picks the element whose reduced
/// fraction has the smaller (|num·den|, num); irrational γ picks the
/// smaller (a, b) in a + b√d.
pub fn gamma_orbit(gamma: &Scalar) -> Result<(Scalar, Scalar)> {
    if gamma.is_zero() {
        return Err(Error::BadParameter("γ must be nonzero".into()));
    }
    if let Some(q) = gamma.as_rational() {
        let g = q.clone();
        let h = g.recip();
        let key = |v: &BigRational| ((v.numer() * v.denom()).abs(), v.numer().clone());
        let (a, b) = if key(&h) < key(&g) { (h, g) } else { (g, h) };
        return Ok((Scalar::Rational(a), Scalar::Rational(b)));
    }
    let inv = gamma.inv()?;
    Ok(if inv.canonical_cmp(gamma).is_lt() {
        (inv, gamma.clone())
    } else {
        (gamma.clone(), inv)
    })
}

/// L8(γ) with γ replaced by the canonical representative of {γ, γ⁻¹};
/// other tags unchanged.
pub fn normalize(tag: &FamilyTag) -> Result<FamilyTag> {
    match tag {
        FamilyTag::L8(g) => Ok(FamilyTag::L8(gamma_orbit(g)?.0)),
        other => Ok(other.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::breadth::breadth;
    use crate::invariants::invariants;

    const Q: Field = Field::Rationals;

    fn computed(l: &StructureTensor) -> ExpectedInvariants {
        let r = invariants(l);
        ExpectedInvariants {
            dim: r.dim,
            dim_derived: r.dim_derived,
            dim_center: r.dim_center,
            breadth: breadth(l).value,
            solvable: r.solvable,
            nilpotent: r.nilpotent,
            pure: r.pure,
            lcs_stable_dim: r.lcs_stable_dim(),
        }
    }

    fn tags() -> Vec<FamilyTag> {
        vec![
            FamilyTag::Abelian(0),
            FamilyTag::Abelian(2),
            FamilyTag::HeisenbergCentral { k: 1, m: 1 },
            FamilyTag::HeisenbergCentral { k: 2, m: 3 },
            FamilyTag::Breadth1Solvable(2),
            FamilyTag::Breadth1Solvable(5),
            FamilyTag::L1,
            FamilyTag::L2(2),
            FamilyTag::L2(4),
            FamilyTag::L3(1),
            FamilyTag::L3(3),
            FamilyTag::L4,
            FamilyTag::L5,
            FamilyTag::L6,
            FamilyTag::L7,
            FamilyTag::L8(Scalar::ratio(-1, 3)),
        ]
    }

    #[test]
    fn computed_invariants_match_rows() {
        for tag in tags() {
            let l = build(&tag, Q).unwrap();
            assert_eq!(l.dim(), tag.dim());
            assert_eq!(computed(&l), expected_invariants(&tag), "{tag}");
            assert_eq!(l.is_lie(), tag != FamilyTag::L4, "{tag}");
        }
    }

    #[test]
    fn l4_jacobi_defect() {
        let v = build(&FamilyTag::L4, Q).unwrap().validate().violations;
        assert_eq!(v, vec![[0, 1, 4], [0, 2, 4]]);
    }

    #[test]
    fn l1_and_l2_tables() {
        let l1 = build(&FamilyTag::L1, Q).unwrap();
        assert_eq!(l1.nonzero_brackets().len(), 3);
        let l2 = build(&FamilyTag::L2(2), Q).unwrap();
        let want = StructureTensor::from_int_brackets(Q, 5, &[(0, 1, &[(0, 1)]), (2, 3, &[(4, 1)])]).unwrap();
        assert_eq!(l2, want);
        let l3 = build(&FamilyTag::L3(3), Q).unwrap();
        let want = StructureTensor::from_int_brackets(
            Q,
            6,
            &[(0, 1, &[(0, 1)]), (1, 2, &[(5, 1)]), (3, 4, &[(5, 1)])],
        )
        .unwrap();
        assert_eq!(l3, want);
    }

    #[test]
    fn l5_is_two_breadth_one_blocks() {
        let b = build(&FamilyTag::Breadth1Solvable(2), Q).unwrap();
        let l5 = build(&FamilyTag::L5, Q).unwrap();
        // x1 x2 x3 x4 = (y, x) ⊕ (y, x) up to the sign of the bracket.
        let sum = b.direct_sum(&b).unwrap();
        let p = crate::matrix::Matrix::from_i64(
            Q,
            &[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]],
        );
        assert_eq!(sum.change_basis(&p).unwrap(), l5);
    }

    #[test]
    fn bad_parameters() {
        for tag in [
            FamilyTag::L2(0),
            FamilyTag::L2(3),
            FamilyTag::L3(2),
            FamilyTag::HeisenbergCentral { k: 0, m: 1 },
            FamilyTag::Breadth1Solvable(1),
            FamilyTag::L8(Scalar::ratio(0, 1)),
        ] {
            assert!(matches!(build(&tag, Q), Err(Error::BadParameter(_))), "{tag}");
        }
        let g = Field::Quadratic(2).sqrt_generator().unwrap();
        assert!(matches!(build(&FamilyTag::L8(g.clone()), Q), Err(Error::BadParameter(_))));
        assert!(build(&FamilyTag::L8(g), Field::Quadratic(2)).unwrap().is_lie());
    }

    #[test]
    fn tags_round_trip_through_text() {
        let mut all = tags();
        all.push(FamilyTag::L8(Field::Quadratic(5).sqrt_generator().unwrap()));
        for tag in all {
            assert_eq!(tag.to_string().parse::<FamilyTag>().unwrap(), tag);
        }
        assert!("L9".parse::<FamilyTag>().is_err());
        assert!("L2(3)".parse::<FamilyTag>().is_err());
    }

    #[test]
    fn gamma_orbits() {
        let rep = |p, q| gamma_orbit(&Scalar::ratio(p, q)).unwrap().0;
        assert_eq!(rep(2, 1), Scalar::ratio(1, 2));
        assert_eq!(rep(1, 2), Scalar::ratio(1, 2));
        assert_eq!(rep(-2, 1), Scalar::ratio(-2, 1));
        assert_eq!(rep(-1, 2), Scalar::ratio(-2, 1));
        assert_eq!(rep(3, 2), Scalar::ratio(2, 3));
        let f = Field::Quadratic(2);
        let s = f.sqrt_generator().unwrap();
        // (1+√2)⁻¹ = −1+√2
        let g = &f.one() + &s;
        let (a, b) = gamma_orbit(&g).unwrap();
        assert_eq!(a, &s - &f.one());
        assert_eq!(b, g);
        assert_eq!(gamma_orbit(&f.from_i64(3)).unwrap().0, Scalar::ratio(1, 3));
    }
}
