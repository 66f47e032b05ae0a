//! Exact scalars over ℚ, GF(p) for odd primes p, and a single quadratic
//! extension ℚ(√d).
//!
//! Every [`Scalar`] carries enough information to recover its [`Field`], so
//! mixing scalars from different fields is detected rather than silently
//! coerced. The arithmetic operators on `&Scalar` panic on a field mismatch;
//! the `checked_*` methods report it as [`Error::FieldMismatch`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Field descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    /// GF(p), p an odd prime below 2³².
    Prime(u64),
    /// ℚ(√d), d a squarefree integer other than 0 and 1.
    Quadratic(i64),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Quadratic(d) => write!(f, "Q(sqrt({d}))"),
        }
    }
}

impl Field {
    /// GF(p), rejecting p = 2, composites and anything ≥ 2³².
    pub fn prime(p: u64) -> Result<Field> {
        let field = Field::Prime(p);
        field.validate()?;
        Ok(field)
    }

    /// ℚ(√d), rejecting d that is zero, one, or not squarefree.
    pub fn quadratic(d: i64) -> Result<Field> {
        let field = Field::Quadratic(d);
        field.validate()?;
        Ok(field)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Field::Rationals => Ok(()),
            Field::Prime(p) => {
                if p == 2 {
                    Err(Error::InvalidField("characteristic 2 is excluded".into()))
                } else if p >= 1 << 32 {
                    Err(Error::InvalidField(format!("prime {p} is too large")))
                } else if !is_prime_u64(p) {
                    Err(Error::InvalidField(format!("{p} is not prime")))
                } else {
                    Ok(())
                }
            }
            Field::Quadratic(d) => {
                if d == 0 || d == 1 {
                    return Err(Error::InvalidField(format!("d = {d} does not extend Q")));
                }
                let (f, _) = squarefree_split(&BigInt::from(d))?;
                if !f.is_one() {
                    return Err(Error::InvalidField(format!("d = {d} is not squarefree")));
                }
                Ok(())
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            _ => 0,
        }
    }

    pub fn is_char_zero(&self) -> bool {
        !matches!(self, Field::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => Scalar::Modular {
                value: reduce_bigint(v, p),
                modulus: p,
            },
            Field::Quadratic(d) => Scalar::Quadratic {
                a: BigRational::from_integer(v.clone()),
                b: BigRational::zero(),
                d,
            },
        }
    }

    /// Embeds a rational number. Over GF(p) this fails with
    /// [`Error::BadPrime`] when p divides the denominator.
    pub fn from_rational(&self, v: &BigRational) -> Result<Scalar> {
        match *self {
            Field::Rationals => Ok(Scalar::Rational(v.clone())),
            Field::Prime(p) => {
                let den = reduce_bigint(v.denom(), p);
                if den == 0 {
                    return Err(Error::BadPrime { p });
                }
                let num = reduce_bigint(v.numer(), p);
                Ok(Scalar::Modular {
                    value: mul_mod(num, inv_mod(den, p), p),
                    modulus: p,
                })
            }
            Field::Quadratic(d) => Ok(Scalar::Quadratic {
                a: v.clone(),
                b: BigRational::zero(),
                d,
            }),
        }
    }

    /// The element √d of ℚ(√d).
    pub fn sqrt_generator(&self) -> Option<Scalar> {
        match *self {
            Field::Quadratic(d) => Some(Scalar::Quadratic {
                a: BigRational::zero(),
                b: BigRational::one(),
                d,
            }),
            _ => None,
        }
    }

    /// Whether scalars of `self` embed into `other` (identity, or ℚ into ℚ(√d)).
    pub fn embeds_into(&self, other: &Field) -> bool {
        self == other || (*self == Field::Rationals && matches!(other, Field::Quadratic(_)))
    }
}

/// An exact field element in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
    /// a + b√d.
    Quadratic { a: BigRational, b: BigRational, d: i64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
            Scalar::Quadratic { d, .. } => Field::Quadratic(*d),
        }
    }

    pub fn rational(v: BigRational) -> Scalar {
        Scalar::Rational(v)
    }

    /// Rational p/q; panics on q = 0.
    pub fn ratio(p: i64, q: i64) -> Scalar {
        Scalar::Rational(BigRational::new(p.into(), q.into()))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(v) => v.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
            Scalar::Quadratic { a, b, .. } => a.is_zero() && b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(v) => v.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
            Scalar::Quadratic { a, b, .. } => a.is_one() && b.is_zero(),
        }
    }

    /// The rational value, if this scalar lies in ℚ (including ℚ ⊂ ℚ(√d)).
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(v) => Some(v),
            Scalar::Quadratic { a, b, .. } if b.is_zero() => Some(a),
            _ => None,
        }
    }

    /// Re-expresses the scalar in `target`: the identity, ℚ → ℚ(√d), or
    /// ℚ → GF(p) by reduction. Elements of ℚ(√d) with b = 0 may also be
    /// brought back down to ℚ.
    pub fn lift(&self, target: Field) -> Result<Scalar> {
        if self.field() == target {
            return Ok(self.clone());
        }
        match self.as_rational() {
            Some(v) => target.from_rational(v),
            None => Err(Error::FieldMismatch {
                left: self.field(),
                right: target,
            }),
        }
    }

    fn check_same(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field(),
                right: other.field(),
            })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Scalar::Modular { value: x, modulus: p }, Scalar::Modular { value: y, .. }) => {
                Scalar::Modular {
                    value: (x + y) % p,
                    modulus: *p,
                }
            }
            (
                Scalar::Quadratic { a, b, d },
                Scalar::Quadratic {
                    a: a2, b: b2, ..
                },
            ) => Scalar::Quadratic {
                a: a + a2,
                b: b + b2,
                d: *d,
            },
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Scalar::Modular { value: x, modulus: p }, Scalar::Modular { value: y, .. }) => {
                Scalar::Modular {
                    value: mul_mod(*x, *y, *p),
                    modulus: *p,
                }
            }
            (
                Scalar::Quadratic { a, b, d },
                Scalar::Quadratic {
                    a: a2, b: b2, ..
                },
            ) => {
                let dd = BigRational::from_integer(BigInt::from(*d));
                Scalar::Quadratic {
                    a: a * a2 + dd * b * b2,
                    b: a * b2 + b * a2,
                    d: *d,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(x) => Scalar::Rational(x.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
            Scalar::Quadratic { a, b, d } => {
                let dd = BigRational::from_integer(BigInt::from(*d));
                let norm = a * a - dd * b * b;
                Scalar::Quadratic {
                    a: a / &norm,
                    b: -(b / &norm),
                    d: *d,
                }
            }
        })
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(x) => Scalar::Rational(-x),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
            Scalar::Quadratic { a, b, d } => Scalar::Quadratic {
                a: -a,
                b: -b,
                d: *d,
            },
        }
    }

    /// Integer power, negative exponents allowed for nonzero scalars.
    pub fn pow(&self, e: i32) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.field().one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Total order used for deterministic tie-breaking: rationals numerically,
    /// residues by representative, quadratic elements by (a, b).
    pub fn canonical_cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rational(x), Scalar::Rational(y)) => x.cmp(y),
            (Scalar::Modular { value: x, .. }, Scalar::Modular { value: y, .. }) => x.cmp(y),
            (Scalar::Quadratic { a, b, .. }, Scalar::Quadratic { a: a2, b: b2, .. }) => {
                a.cmp(a2).then_with(|| b.cmp(b2))
            }
            _ => self.field().cmp(&other.field()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(v) => write!(f, "{v}"),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
            Scalar::Quadratic { a, b, d } => {
                if b.is_zero() {
                    return write!(f, "{a}");
                }
                let mag = b.abs();
                let root = if mag.is_one() {
                    format!("sqrt({d})")
                } else {
                    format!("{mag}*sqrt({d})")
                };
                let sign = if b.is_negative() { "-" } else { "+" };
                if a.is_zero() {
                    write!(f, "{}{root}", sign.trim_start_matches('+'))
                } else {
                    write!(f, "{a}{sign}{root}")
                }
            }
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar field mismatch")
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar field mismatch")
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

impl Scalar {
    /// Parses `n`, `p/q`, or `a+b*sqrt(d)` (also `a-b*sqrt(d)`,
    /// `b*sqrt(d)`, `sqrt(d)`) and embeds the value in `field`.
    pub fn parse(s: &str, field: Field) -> Result<Scalar> {
        let v = Scalar::parse_any(s)?;
        match (&v, field) {
            (Scalar::Quadratic { d, .. }, Field::Quadratic(e)) if *d != e => Err(Error::FieldMismatch {
                left: field,
                right: v.field(),
            }),
            _ => v.lift(field),
        }
    }

    /// Parses a scalar, landing in ℚ(√d) only when the text mentions `sqrt(d)`.
    pub fn parse_any(s: &str) -> Result<Scalar> {
        let s = s.trim();
        let Some(i) = s.find("sqrt(") else {
            return Ok(Scalar::Rational(parse_rational(s)?));
        };
        let bad = || Error::Parse(format!("not a quadratic scalar: {s:?}"));
        let rest = s[i + 5..].strip_suffix(')').ok_or_else(bad)?;
        let d: i64 = rest.trim().parse().map_err(|_| bad())?;
        let field = Field::quadratic(d)?;
        let head = s[..i].trim_end();
        let head = head.strip_suffix('*').unwrap_or(head).trim_end();
        let split = head
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(j, _)| j)
            .last();
        let (a, b) = match split {
            Some(j) => (&head[..j], &head[j..]),
            None => ("0", head),
        };
        let b = b.strip_prefix('+').unwrap_or(b);
        let b = match b.trim() {
            "" => BigRational::one(),
            "-" => -BigRational::one(),
            t => parse_rational(t)?,
        };
        Ok(Scalar::Quadratic {
            a: parse_rational(a)?,
            b,
            d: field_d(field),
        })
    }
}

fn field_d(f: Field) -> i64 {
    match f {
        Field::Quadratic(d) => d,
        _ => unreachable!("quadratic field"),
    }
}

/// Square root of `c`, adjoining √d when `c` is a nonsquare rational.
///
/// Returns the root together with the field it lives in. Inputs already in
/// ℚ(√d) must have their root in that same field; otherwise
/// [`Error::AlreadyExtended`] is returned.
pub fn sqrt_or_extend(c: &Scalar) -> Result<(Scalar, Field)> {
    match c {
        Scalar::Rational(v) => {
            if v.is_zero() {
                return Ok((c.clone(), Field::Rationals));
            }
            if let Some(r) = rational_sqrt(v) {
                return Ok((Scalar::Rational(r), Field::Rationals));
            }
            // v = p/q = p·q / q²; split p·q = f²·d with d squarefree.
            let pq = v.numer() * v.denom();
            let (f, d) = squarefree_split(&pq)?;
            let d = d.to_i64().ok_or_else(|| {
                Error::FieldExtensionNeeded(format!("squarefree part {d} does not fit in i64"))
            })?;
            let field = Field::Quadratic(d);
            let root = Scalar::Quadratic {
                a: BigRational::zero(),
                b: BigRational::new(f, v.denom().clone()),
                d,
            };
            Ok((root, field))
        }
        Scalar::Quadratic { a, b, d } => {
            let field = Field::Quadratic(*d);
            let dd = BigRational::from_integer(BigInt::from(*d));
            if b.is_zero() {
                if let Some(r) = rational_sqrt(a) {
                    return Ok((field.from_rational(&r)?, field));
                }
                if let Some(r) = rational_sqrt(&(a / &dd)) {
                    let root = Scalar::Quadratic {
                        a: BigRational::zero(),
                        b: r,
                        d: *d,
                    };
                    return Ok((root, field));
                }
                return Err(Error::AlreadyExtended(field));
            }
            // (x + y√d)² = a + b√d  ⇔  x² + d y² = a, 2xy = b.
            let norm = a * a - &dd * b * b;
            let n = rational_sqrt(&norm).ok_or(Error::AlreadyExtended(field))?;
            let two = BigRational::from_integer(2.into());
            for x2 in [(a + &n) / &two, (a - &n) / &two] {
                if let Some(x) = rational_sqrt(&x2) {
                    if x.is_zero() {
                        continue;
                    }
                    let y = b / (&two * &x);
                    let root = Scalar::Quadratic { a: x, b: y, d: *d };
                    if &(&root * &root) == c {
                        return Ok((root, field));
                    }
                }
            }
            Err(Error::AlreadyExtended(field))
        }
        Scalar::Modular { modulus, .. } => Err(Error::UnsupportedField {
            field: Field::Prime(*modulus),
            reason: "square roots are only provided in characteristic zero".into(),
        }),
    }
}

/// Square root of a nonnegative rational, if it is rational.
pub fn rational_sqrt(v: &BigRational) -> Option<BigRational> {
    if v.is_negative() {
        return None;
    }
    let n = integer_sqrt_exact(v.numer())?;
    let d = integer_sqrt_exact(v.denom())?;
    Some(BigRational::new(n, d))
}

fn integer_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

const TRIAL_BOUND: u64 = 1 << 20;

/// Writes n = f²·d with d squarefree (carrying the sign of n) and f > 0.
///
/// Factors by trial division up to 2²⁰; a cofactor m that is a perfect
/// square, or smaller than 2⁶⁰ (hence prime or a product of two distinct
/// large primes, or caught by the square test), is settled exactly. Larger
/// unfactored cofactors are rejected rather than guessed.
pub fn squarefree_split(n: &BigInt) -> Result<(BigInt, BigInt)> {
    if n.is_zero() {
        return Err(Error::BadParameter("squarefree part of zero".into()));
    }
    let sign = if n.sign() == Sign::Minus { -1 } else { 1 };
    let mut m = n.abs();
    let mut f = BigInt::one();
    let mut d = BigInt::from(sign);
    let mut p: u64 = 2;
    while p <= TRIAL_BOUND {
        let bp = BigInt::from(p);
        if &bp * &bp > m {
            break;
        }
        let mut e = 0u32;
        while (&m % &bp).is_zero() {
            m /= &bp;
            e += 1;
        }
        if e > 0 {
            f *= bp.pow(e / 2);
            if e % 2 == 1 {
                d *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m.is_one() {
        return Ok((f, d));
    }
    if let Some(r) = integer_sqrt_exact(&m) {
        return Ok((f * r, d));
    }
    let bound = BigInt::from(TRIAL_BOUND);
    if m < &bound * &bound * &bound {
        // No prime factor ≤ bound and not a square: m is p or p·q, p ≠ q.
        return Ok((f, d * m));
    }
    Err(Error::FieldExtensionNeeded(format!(
        "cannot certify the squarefree part of {n}"
    )))
}

pub(crate) fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2).
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// Uniform integer in [−bound, bound] embedded in `field`; over GF(p) a
/// uniform residue.
pub fn random_scalar(field: Field, bound: u64, rng: &mut impl Rng) -> Scalar {
    match field {
        Field::Prime(p) => Scalar::Modular {
            value: rng.gen_range(0..p),
            modulus: p,
        },
        _ => {
            let b = bound as i128;
            let v: i128 = rng.gen_range(-b..=b);
            field.from_bigint(&BigInt::from(v))
        }
    }
}

/// Deterministic random stream for worker `index` under `seed`.
pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}
