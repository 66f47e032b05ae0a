//! Univariate polynomials over a [`Field`], characteristic polynomials, and
//! exact root finding in characteristic zero.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{sqrt_or_extend, Field, Scalar};
use crate::matrix::Matrix;

/// Coefficients from the constant term upward, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Poly {
        Poly::new(field, vec![])
    }

    /// t − a
    pub fn linear(a: &Scalar) -> Poly {
        let f = a.field();
        Poly::new(f, vec![-a, f.one()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&z);
                let b = other.coeffs.get(i).unwrap_or(&z);
                a + b
            })
            .collect();
        Poly::new(self.field, c)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut c = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, c)
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.lead().inv()?;
        let mut r = self.coeffs.clone();
        let mut q = vec![self.field.zero(); r.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = &r[r.len() - 1] * &inv;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] = &r[k + i] - &(&c * dc);
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(Scalar::is_zero) {
                r.pop();
            }
        }
        Ok((Poly::new(self.field, q), Poly::new(self.field, r)))
    }

    pub fn derivative(&self) -> Poly {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &self.field.from_i64(i as i64))
            .collect();
        Poly::new(self.field, c)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().inv().expect("nonzero lead"))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// f / gcd(f, f′): same roots, all simple.
    pub fn squarefree(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).expect("gcd divides").0.monic()
    }

    pub fn lift(&self, field: Field) -> Result<Poly> {
        Ok(Poly::new(
            field,
            self.coeffs.iter().map(|c| c.lift(field)).collect::<Result<_>>()?,
        ))
    }

    fn is_rational(&self) -> bool {
        self.coeffs.iter().all(|c| c.as_rational().is_some())
    }

    fn rational_coeffs(&self) -> Option<Vec<BigRational>> {
        self.coeffs.iter().map(|c| c.as_rational().cloned()).collect()
    }
}

/// det(tI − M) by Faddeev–LeVerrier; characteristic zero only.
pub fn charpoly(m: &Matrix) -> Result<Poly> {
    let field = m.field();
    if !field.is_char_zero() {
        return Err(Error::UnsupportedField {
            field,
            reason: "characteristic polynomials are computed in characteristic zero".into(),
        });
    }
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: m.cols(),
        });
    }
    let n = m.rows();
    let mut c = vec![field.zero(); n + 1];
    c[n] = field.one();
    let mut mk = Matrix::zeros(field, n, n);
    let id = Matrix::identity(field, n);
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1} I,  c_{n−k} = −tr(A M_k)/k
        mk = m.mul(&mk)?.add(&id.scale(&c[n - k + 1]))?;
        let tr = m.mul(&mk)?.trace();
        c[n - k] = -&(&tr * &field.from_i64(k as i64).inv()?);
    }
    Ok(Poly::new(field, c))
}

/// Distinct roots of `f` in its field or in one quadratic extension of ℚ.
///
/// Returns the roots and the field they live in. Rational roots are found
/// exactly by Sturm isolation; whatever is left must have degree ≤ 2.
pub fn roots(f: &Poly) -> Result<(Vec<Scalar>, Field)> {
    let field = f.field();
    if !field.is_char_zero() {
        return Err(Error::UnsupportedField {
            field,
            reason: "root finding is provided in characteristic zero".into(),
        });
    }
    if f.is_zero() {
        return Err(Error::BadParameter("roots of the zero polynomial".into()));
    }
    let h = f.squarefree();
    let candidates = if h.is_rational() {
        rational_roots(&h.rational_coeffs().expect("rational"))
    } else {
        // Roots of h in ℚ that lie in ℚ are roots of the norm h·h̄.
        let conj = conjugate(&h);
        let norm = h.mul(&conj).squarefree();
        rational_roots(&norm.rational_coeffs().expect("norm is rational"))
    };
    let mut found = Vec::new();
    let mut rest = h.clone();
    for r in candidates {
        let s = field.from_rational(&r)?;
        if rest.eval(&s).is_zero() {
            rest = rest.divrem(&Poly::linear(&s))?.0;
            found.push(s);
        }
    }
    match rest.degree() {
        Some(0) | None => Ok((found, field)),
        Some(1) => {
            let c = rest.monic();
            found.push(-&c.coeffs[0]);
            Ok((found, field))
        }
        Some(2) => {
            let c = rest.monic();
            // t² + bt + c: roots (−b ± √(b² − 4c)) / 2
            let (b, cc) = (&c.coeffs[1], &c.coeffs[0]);
            let disc = &(b * b) - &(&field.from_i64(4) * cc);
            let (sq, ext) = sqrt_or_extend(&disc).map_err(|e| match e {
                Error::AlreadyExtended(fl) => Error::FieldExtensionNeeded(format!(
                    "eigenvalues need a second quadratic extension over {fl}"
                )),
                other => other,
            })?;
            let half = ext.from_rational(&BigRational::new(1.into(), 2.into()))?;
            let b = b.lift(ext)?;
            let mut out: Vec<Scalar> = found
                .into_iter()
                .map(|s| s.lift(ext))
                .collect::<Result<_>>()?;
            out.push(&(&(-&b) + &sq) * &half);
            out.push(&(&(-&b) - &sq) * &half);
            Ok((out, ext))
        }
        Some(d) => Err(Error::FieldExtensionNeeded(format!(
            "a factor of degree {d} has no rational roots"
        ))),
    }
}

fn conjugate(p: &Poly) -> Poly {
    let c = p
        .coeffs
        .iter()
        .map(|c| match c {
            Scalar::Quadratic { a, b, d } => Scalar::Quadratic {
                a: a.clone(),
                b: -b,
                d: *d,
            },
            other => other.clone(),
        })
        .collect();
    Poly::new(p.field, c)
}

/// Rational roots of a squarefree rational polynomial, in increasing order.
pub fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    if coeffs.len() <= 1 {
        return vec![];
    }
    // Clear denominators, then substitute t = s / a_n to get a monic integer
    // polynomial whose rational roots are integers.
    let l = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let n = ints.len() - 1;
    let lead = ints[n].clone();
    let monic: Vec<BigInt> = (0..=n)
        .map(|i| {
            if i == n {
                BigInt::one()
            } else {
                &ints[i] * lead.pow((n - 1 - i) as u32)
            }
        })
        .collect();
    let bound: BigInt = monic.iter().map(|c| c.abs()).max().unwrap_or_default() + 1;
    let seq = sturm_sequence(&monic);
    let mut out = Vec::new();
    isolate_integer_roots(&monic, &seq, -bound.clone(), bound, &mut out);
    out.into_iter()
        .map(|s| BigRational::new(s, lead.clone()))
        .collect()
}

type IntPoly = Vec<BigRational>;

fn sturm_sequence(p: &[BigInt]) -> Vec<IntPoly> {
    let p0: IntPoly = p.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let p1: IntPoly = p0
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(i.into()))
        .collect();
    let mut seq = vec![trim(p0), trim(p1)];
    loop {
        let k = seq.len();
        if seq[k - 1].is_empty() {
            seq.pop();
            break;
        }
        let r = rat_rem(&seq[k - 2], &seq[k - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    seq
}

fn trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn rat_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / &lead;
        for (i, bc) in b.iter().enumerate() {
            r[k + i] -= &c * bc;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn sign_at(p: &IntPoly, x: &BigRational) -> i8 {
    let v = p
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(seq: &[IntPoly], x: &BigInt) -> usize {
    let x = BigRational::from_integer(x.clone());
    let signs: Vec<i8> = seq.iter().map(|p| sign_at(p, &x)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in (lo, hi].
fn count_roots(seq: &[IntPoly], lo: &BigInt, hi: &BigInt) -> usize {
    variations(seq, lo).saturating_sub(variations(seq, hi))
}

fn isolate_integer_roots(p: &[BigInt], seq: &[IntPoly], lo: BigInt, hi: BigInt, out: &mut Vec<BigInt>) {
    if count_roots(seq, &lo, &hi) == 0 {
        return;
    }
    if &hi - &lo == BigInt::one() {
        let v = p.iter().rev().fold(BigInt::zero(), |acc, c| acc * &hi + c);
        if v.is_zero() {
            out.push(hi);
        }
        return;
    }
    let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
    isolate_integer_roots(p, seq, lo, mid.clone(), out);
    isolate_integer_roots(p, seq, mid, hi, out);
}
