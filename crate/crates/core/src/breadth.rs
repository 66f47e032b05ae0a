//! Breadth: b(x) = rank ad_x, b(L) = max b(x), and the relative versions
//! b_A(x) = rank(ad_x|_A).
//!
//! All maxima are generic ranks of a linear matrix pencil
//! M(t) = Σ t_i·A_i. Over GF(p) the maximum is taken exactly by walking one
//! representative per projective point. In characteristic zero small pencils
//! are decided symbolically (largest minor that is a nonzero polynomial);
//! larger ones are sampled at random integer points, and the sample is
//! promoted to an exact value either when it meets the trivial upper bound or
//! when every bordered minor around a nonsingular submatrix at the witness
//! vanishes identically.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::StructureTensor;
use crate::error::{Error, Result};
use crate::field::{random_scalar, stream, Field, Scalar};
use crate::invariants::{center, centralizer};
use crate::matrix::{gauss_jordan_mod, Matrix, Vector};
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Symbolic up to `symbolic_max_dim`, sampling plus certificate beyond.
    Auto,
    /// Largest nonzero minor of the pencil, by exact expansion.
    Symbolic,
    /// Random evaluation only; exact only when the sandwich closes.
    MonteCarlo,
}

#[derive(Clone, Debug)]
pub struct BreadthOptions {
    pub trials: usize,
    pub entry_bound: u64,
    pub seed: u64,
    /// Largest number of pencil variables handled by full minor expansion.
    pub symbolic_max_dim: usize,
    /// Largest dimension for which a sampled value is certified by
    /// bordered minors.
    pub certify_max_dim: usize,
    pub method: Method,
}

impl Default for BreadthOptions {
    fn default() -> Self {
        BreadthOptions {
            trials: 24,
            entry_bound: 1 << 31,
            seed: 0,
            symbolic_max_dim: 5,
            certify_max_dim: 10,
            method: Method::Auto,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certainty {
    Exact,
    MonteCarlo { trials: usize, entry_bound: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BreadthResult {
    pub value: usize,
    /// An element attaining `value`.
    pub witness: Vector,
    pub certainty: Certainty,
    /// The a priori upper bound used for the sandwich.
    pub upper_bound: usize,
}

impl BreadthResult {
    pub fn is_exact(&self) -> bool {
        self.certainty == Certainty::Exact
    }
}

/// b(x) = rank ad_x.
pub fn breadth_of(l: &StructureTensor, x: &Vector) -> Result<usize> {
    Ok(l.ad_matrix(x)?.rank())
}

/// b_A(x) = rank(ad_x|_A) for an ideal A.
pub fn breadth_rel(l: &StructureTensor, a: &Subspace, x: &Vector) -> Result<usize> {
    if !l.is_ideal(a)? {
        return Err(Error::NotAnIdeal);
    }
    Ok(l.ad_restricted(x, a)?.rank())
}

/// b(L) with default options.
pub fn breadth(l: &StructureTensor) -> BreadthResult {
    breadth_with(l, &BreadthOptions::default())
}

pub fn breadth_with(l: &StructureTensor, opts: &BreadthOptions) -> BreadthResult {
    let z = center(l);
    let derived = l.derived_algebra();
    let n = l.dim();
    let upper = if derived.is_zero() {
        0
    } else {
        derived.dim().min(n - z.dim() - 1)
    };
    let cols: Vec<Vector> = (0..n).map(|j| l.basis_vector(j)).collect();
    let pencil = Pencil::new(l, &z, &cols, upper);
    pencil.max_rank(opts)
}

/// b_A(L) = max_x b_A(x) for an ideal A.
pub fn breadth_rel_max(l: &StructureTensor, a: &Subspace, opts: &BreadthOptions) -> Result<BreadthResult> {
    if !l.is_ideal(a)? {
        return Err(Error::NotAnIdeal);
    }
    let image = l.bracket_space(a, &l.full())?;
    let kernel = centralizer(l, a)?;
    let upper = image.dim();
    let pencil = Pencil::new(l, &kernel, a.basis(), upper);
    Ok(pencil.max_rank(opts))
}

/// Whether b(L) = 1 ⟺ dim[L, L] = 1 holds for L.
pub fn char_breadth1(l: &StructureTensor) -> bool {
    (breadth(l).value == 1) == (l.derived_algebra().dim() == 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Breadth2Case {
    /// dim[L, L] = 2.
    S1,
    /// dim[L, L] = 3 and dim L/Z(L) = 3.
    S2,
    None,
}

/// Whether b(L) = 2 ⟺ (S1 or S2) holds for a solvable L, and which case
/// applies.
pub fn char_breadth2(l: &StructureTensor) -> Result<(bool, Breadth2Case)> {
    if !crate::invariants::is_solvable(l) {
        return Err(Error::NotSolvable);
    }
    let d = l.derived_algebra().dim();
    let case = if d == 2 {
        Breadth2Case::S1
    } else if d == 3 && l.dim() - center(l).dim() == 3 {
        Breadth2Case::S2
    } else {
        Breadth2Case::None
    };
    let b = breadth(l).value;
    Ok(((b == 2) == (case != Breadth2Case::None), case))
}

/// M(t) = Σ t_i A_i where A_i is ad_{w_i} restricted to `cols` and the w_i
/// are standard basis vectors spanning a complement of the kernel of
/// x ↦ ad_x|cols.
struct Pencil {
    field: Field,
    dim: usize,
    rows: usize,
    cols: usize,
    /// Ambient indices of the variables w_i.
    vars: Vec<usize>,
    mats: Vec<Matrix>,
    upper: usize,
}

impl Pencil {
    fn new(l: &StructureTensor, kernel: &Subspace, cols: &[Vector], upper: usize) -> Pencil {
        let vars = kernel.complement_indices();
        let mats = vars
            .iter()
            .map(|&i| {
                let e = l.basis_vector(i);
                let c: Vec<Vector> = cols.iter().map(|v| l.bracket(&e, v).expect("same algebra")).collect();
                Matrix::from_columns(l.field(), l.dim(), &c).expect("consistent")
            })
            .collect();
        Pencil {
            field: l.field(),
            dim: l.dim(),
            rows: l.dim(),
            cols: cols.len(),
            vars,
            mats,
            upper,
        }
    }

    fn eval(&self, t: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows, self.cols);
        for (ti, a) in t.iter().zip(&self.mats) {
            if !ti.is_zero() {
                m = m.add(&a.scale(ti)).expect("same shape");
            }
        }
        m
    }

    fn point(&self, t: &[Scalar]) -> Vector {
        let mut x = Vector::zeros(self.field, self.dim);
        for (ti, &i) in t.iter().zip(&self.vars) {
            x.set(i, ti.clone());
        }
        x
    }

    fn trivial(&self, value: usize) -> BreadthResult {
        BreadthResult {
            value,
            witness: Vector::zeros(self.field, self.dim),
            certainty: Certainty::Exact,
            upper_bound: self.upper,
        }
    }

    fn max_rank(&self, opts: &BreadthOptions) -> BreadthResult {
        if self.upper == 0 || self.vars.is_empty() {
            return self.trivial(0);
        }
        match self.field {
            Field::Prime(p) => self.enumerate_gfp(p),
            _ => self.max_rank_char0(opts),
        }
    }

    fn max_rank_char0(&self, opts: &BreadthOptions) -> BreadthResult {
        let symbolic = match opts.method {
            Method::Symbolic => true,
            Method::MonteCarlo => false,
            Method::Auto => self.vars.len() <= opts.symbolic_max_dim,
        };
        if symbolic {
            return self.symbolic(opts);
        }
        let (mut value, mut witness) = self.sample(opts, 0, opts.trials);
        if value == self.upper {
            return self.exact(value, witness);
        }
        if opts.method == Method::Auto && self.dim <= opts.certify_max_dim {
            // A sampled value below the true generic rank is astronomically
            // unlikely, so a failed certificate just triggers more sampling.
            for round in 1..=8 {
                let t = self.coords_of(&witness);
                if self.certify(&t) {
                    return self.exact(value, witness);
                }
                let (v, w) = self.sample(opts, round * opts.trials, opts.trials);
                if v > value {
                    value = v;
                    witness = w;
                    if value == self.upper {
                        return self.exact(value, witness);
                    }
                }
            }
        }
        BreadthResult {
            value,
            witness,
            certainty: Certainty::MonteCarlo {
                trials: opts.trials,
                entry_bound: opts.entry_bound,
            },
            upper_bound: self.upper,
        }
    }

    fn exact(&self, value: usize, witness: Vector) -> BreadthResult {
        BreadthResult {
            value,
            witness,
            certainty: Certainty::Exact,
            upper_bound: self.upper,
        }
    }

    fn coords_of(&self, x: &Vector) -> Vec<Scalar> {
        self.vars.iter().map(|&i| x[i].clone()).collect()
    }

    /// Max rank over `count` random points from streams `first..`; ties go
    /// to the lowest stream index.
    fn sample(&self, opts: &BreadthOptions, first: usize, count: usize) -> (usize, Vector) {
        let best = (first..first + count)
            .into_par_iter()
            .map(|idx| {
                let mut rng = stream(opts.seed, idx as u64);
                let t: Vec<Scalar> = self
                    .vars
                    .iter()
                    .map(|_| random_scalar(self.field, opts.entry_bound, &mut rng))
                    .collect();
                (self.eval(&t).rank(), idx, t)
            })
            .reduce_with(|a, b| if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a });
        match best {
            Some((r, _, t)) => (r, self.point(&t)),
            None => (0, Vector::zeros(self.field, self.dim)),
        }
    }

    /// Every (r+1)-minor bordering a nonsingular r×r submatrix at t vanishes
    /// identically, so rank r holds on a dense open set containing t.
    fn certify(&self, t: &[Scalar]) -> bool {
        let m = self.eval(t);
        let col_piv = m.rref().pivots;
        let row_piv = m.transpose().rref().pivots;
        let forms = self.linear_forms();
        for i in (0..self.rows).filter(|i| !row_piv.contains(i)) {
            for j in (0..self.cols).filter(|j| !col_piv.contains(j)) {
                let mut rs = row_piv.clone();
                rs.push(i);
                let mut cs = col_piv.clone();
                cs.push(j);
                if !forms.minor_is_zero(&rs, &cs) {
                    return false;
                }
            }
        }
        true
    }

    fn linear_forms(&self) -> Forms {
        Forms::new(self)
    }

    /// Largest r with a nonzero r×r minor polynomial, searched downward from
    /// the upper bound.
    fn symbolic(&self, opts: &BreadthOptions) -> BreadthResult {
        let forms = self.linear_forms();
        let top = self.upper.min(self.rows).min(self.cols);
        for r in (1..=top).rev() {
            for rs in subsets(self.rows, r) {
                for cs in subsets(self.cols, r) {
                    if let Some(t) = forms.nonzero_point(&rs, &cs, opts) {
                        let witness = self.point(&t);
                        debug_assert_eq!(self.eval(&t).rank(), r);
                        return self.exact(r, witness);
                    }
                }
            }
        }
        self.trivial(0)
    }

    fn enumerate_gfp(&self, p: u64) -> BreadthResult {
        let k = self.vars.len() as u32;
        let flat: Vec<Vec<u64>> = self
            .mats
            .iter()
            .map(|m| {
                let mut v = Vec::with_capacity(self.rows * self.cols);
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        match m.get(i, j) {
                            Scalar::Modular { value, .. } => v.push(*value),
                            _ => unreachable!("modular pencil"),
                        }
                    }
                }
                v
            })
            .collect();
        let total: u64 = (0..k).map(|e| p.pow(e)).sum();
        let rank_at = |idx: u64| -> (usize, Vec<u64>) {
            let t = projective_point(p, k, idx);
            let mut m = vec![vec![0u64; self.cols]; self.rows];
            for (ti, a) in t.iter().zip(&flat) {
                if *ti == 0 {
                    continue;
                }
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        let x = a[i * self.cols + j];
                        if x != 0 {
                            m[i][j] = (m[i][j] + crate::field::mul_mod(*ti, x, p)) % p;
                        }
                    }
                }
            }
            (gauss_jordan_mod(&mut m, p, false).len(), t)
        };
        const SHARD: u64 = 4096;
        let hit = AtomicU64::new(u64::MAX);
        let shards = total.div_ceil(SHARD);
        let best = (0..shards)
            .into_par_iter()
            .filter_map(|s| {
                let start = s * SHARD;
                if start > hit.load(Ordering::Relaxed) {
                    return None;
                }
                let mut best: Option<(usize, u64)> = None;
                for idx in start..(start + SHARD).min(total) {
                    let (r, _) = rank_at(idx);
                    if best.is_none_or(|(b, _)| r > b) {
                        best = Some((r, idx));
                        if r >= self.upper {
                            hit.fetch_min(idx, Ordering::Relaxed);
                            break;
                        }
                    }
                }
                best
            })
            .reduce_with(|a, b| if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a });
        let (value, idx) = best.unwrap_or((0, 0));
        let (_, t) = rank_at(idx);
        let t: Vec<Scalar> = t.into_iter().map(|value| Scalar::Modular { value, modulus: p }).collect();
        self.exact(value, self.point(&t))
    }
}

/// The idx-th normalized vector of GF(p)^k: blocks by position of the
/// leading 1, remaining coordinates as base-p digits.
fn projective_point(p: u64, k: u32, mut idx: u64) -> Vec<u64> {
    let mut t = vec![0u64; k as usize];
    for lead in 0..k {
        let block = p.pow(k - 1 - lead);
        if idx < block {
            t[lead as usize] = 1;
            let mut rest = idx;
            for pos in (lead + 1..k).rev() {
                t[pos as usize] = rest % p;
                rest /= p;
            }
            return t;
        }
        idx -= block;
    }
    unreachable!("index within (p^k − 1)/(p − 1)")
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// Coefficient ring for minor expansion.
trait Coeff: Clone + PartialEq + Send + Sync {
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Coeff for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coeff for Scalar {
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Sparse multivariate polynomial: exponent vector → coefficient.
type MPoly<C> = HashMap<Vec<u8>, C>;

/// Determinant of a square matrix of sparse linear forms, by Laplace
/// expansion over column subsets.
fn det_of_forms<C: Coeff>(entries: &[Vec<&[(usize, C)]>], nvars: usize, one: &C) -> MPoly<C> {
    let s = entries.len();
    let mut dp: HashMap<u32, MPoly<C>> = HashMap::new();
    dp.insert(0, HashMap::from([(vec![0u8; nvars], one.clone())]));
    for row in entries {
        let mut next: HashMap<u32, MPoly<C>> = HashMap::new();
        for (mask, poly) in &dp {
            for (c, form) in row.iter().enumerate() {
                if mask & (1 << c) != 0 || form.is_empty() {
                    continue;
                }
                let negate = (mask >> (c + 1)).count_ones() % 2 == 1;
                let target = next.entry(mask | (1 << c)).or_default();
                for (mono, coef) in poly {
                    for (v, a) in form.iter() {
                        let mut m = mono.clone();
                        m[*v] += 1;
                        let mut term = coef.mul(a);
                        if negate {
                            term = term.neg();
                        }
                        match target.get_mut(&m) {
                            Some(x) => {
                                *x = x.add(&term);
                                if x.is_zero() {
                                    target.remove(&m);
                                }
                            }
                            None => {
                                target.insert(m, term);
                            }
                        }
                    }
                }
            }
        }
        next.retain(|_, p| !p.is_empty());
        dp = next;
    }
    dp.remove(&((1u32 << s) - 1)).unwrap_or_default()
}

/// Entries of the pencil as sparse linear forms, over ℤ for rational
/// pencils (each A_i scaled by the lcm of its denominators) and over the
/// field otherwise.
enum Forms {
    Int {
        nvars: usize,
        entries: Vec<Vec<Vec<(usize, BigInt)>>>,
    },
    Field {
        nvars: usize,
        field: Field,
        entries: Vec<Vec<Vec<(usize, Scalar)>>>,
    },
}

impl Forms {
    fn new(p: &Pencil) -> Forms {
        let nvars = p.mats.len();
        if p.field == Field::Rationals {
            let scales: Vec<BigInt> = p
                .mats
                .iter()
                .map(|m| {
                    let mut l = BigInt::one();
                    for i in 0..m.rows() {
                        for j in 0..m.cols() {
                            l = l.lcm(m.get(i, j).as_rational().expect("rational").denom());
                        }
                    }
                    l
                })
                .collect();
            let mut entries = vec![vec![Vec::new(); p.cols]; p.rows];
            for (v, m) in p.mats.iter().enumerate() {
                for i in 0..p.rows {
                    for j in 0..p.cols {
                        let q = m.get(i, j).as_rational().expect("rational");
                        if !Zero::is_zero(q) {
                            entries[i][j].push((v, q.numer() * (&scales[v] / q.denom())));
                        }
                    }
                }
            }
            Forms::Int { nvars, entries }
        } else {
            let mut entries = vec![vec![Vec::new(); p.cols]; p.rows];
            for (v, m) in p.mats.iter().enumerate() {
                for i in 0..p.rows {
                    for j in 0..p.cols {
                        let q = m.get(i, j);
                        if !q.is_zero() {
                            entries[i][j].push((v, q.clone()));
                        }
                    }
                }
            }
            Forms::Field {
                nvars,
                field: p.field,
                entries,
            }
        }
    }

    fn minor_is_zero(&self, rs: &[usize], cs: &[usize]) -> bool {
        match self {
            Forms::Int { nvars, entries } => {
                let sub: Vec<Vec<&[(usize, BigInt)]>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| entries[i][j].as_slice()).collect())
                    .collect();
                det_of_forms(&sub, *nvars, &BigInt::one()).is_empty()
            }
            Forms::Field { nvars, field, entries } => {
                let sub: Vec<Vec<&[(usize, Scalar)]>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| entries[i][j].as_slice()).collect())
                    .collect();
                det_of_forms(&sub, *nvars, &field.one()).is_empty()
            }
        }
    }

    /// A point where the (rs, cs) minor is nonzero, if the minor is a
    /// nonzero polynomial.
    fn nonzero_point(&self, rs: &[usize], cs: &[usize], opts: &BreadthOptions) -> Option<Vec<Scalar>> {
        let (poly, nvars, field): (MPoly<Scalar>, usize, Field) = match self {
            Forms::Int { nvars, entries } => {
                let sub: Vec<Vec<&[(usize, BigInt)]>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| entries[i][j].as_slice()).collect())
                    .collect();
                let d = det_of_forms(&sub, *nvars, &BigInt::one());
                let q = Field::Rationals;
                (d.into_iter().map(|(m, c)| (m, q.from_bigint(&c))).collect(), *nvars, q)
            }
            Forms::Field { nvars, field, entries } => {
                let sub: Vec<Vec<&[(usize, Scalar)]>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| entries[i][j].as_slice()).collect())
                    .collect();
                (det_of_forms(&sub, *nvars, &field.one()), *nvars, *field)
            }
        };
        if poly.is_empty() {
            return None;
        }
        // The minor is homogeneous of degree |rs| in each variable at most,
        // so it is nonzero somewhere on the grid {0..|rs|}^nvars; random
        // points almost always succeed first.
        let eval = |t: &[Scalar]| -> Scalar {
            poly.iter().fold(field.zero(), |acc, (mono, c)| {
                let term = mono.iter().zip(t).fold(c.clone(), |acc, (&e, x)| {
                    (0..e).fold(acc, |a, _| &a * x)
                });
                &acc + &term
            })
        };
        for idx in 0..64u64 {
            let mut rng = stream(opts.seed ^ 0x5eed, idx);
            let t: Vec<Scalar> = (0..nvars)
                .map(|_| random_scalar(field, opts.entry_bound, &mut rng))
                .collect();
            if !eval(&t).is_zero() {
                return Some(t);
            }
        }
        let base = rs.len() as u64 + 1;
        let total = base.checked_pow(nvars as u32)?;
        (0..total).find_map(|mut code| {
            let t: Vec<Scalar> = (0..nvars)
                .map(|_| {
                    let d = code % base;
                    code /= base;
                    field.from_i64(d as i64)
                })
                .collect();
            (!eval(&t).is_zero()).then_some(t)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn l1() -> StructureTensor {
        StructureTensor::from_int_brackets(
            Q,
            4,
            &[(0, 1, &[(1, 1)]), (0, 2, &[(2, -1)]), (1, 2, &[(3, 1)])],
        )
        .unwrap()
    }

    fn heis(k: usize) -> StructureTensor {
        let n = 2 * k + 1;
        let mut t = StructureTensor::abelian(Q, n);
        for i in 0..k {
            t.set_bracket(2 * i, 2 * i + 1, &Vector::unit(Q, n, n - 1)).unwrap();
        }
        t
    }

    #[test]
    fn breadth_of_elements() {
        let l = l1();
        assert_eq!(breadth_of(&l, &l.basis_vector(0)).unwrap(), 2);
        assert_eq!(breadth_of(&l, &Vector::zeros(Q, 4)).unwrap(), 0);
        let h = heis(1);
        assert_eq!(breadth_of(&h, &h.basis_vector(0)).unwrap(), 1);
    }

    #[test]
    fn breadth_examples() {
        let r = breadth(&StructureTensor::abelian(Q, 4));
        assert_eq!((r.value, r.is_exact()), (0, true));
        let r = breadth(&heis(2));
        assert_eq!((r.value, r.is_exact()), (1, true));
        let r = breadth(&l1());
        assert_eq!((r.value, r.is_exact()), (2, true));
        assert_eq!(breadth_of(&l1(), &r.witness).unwrap(), 2);
    }

    #[test]
    fn methods_agree_on_l1() {
        let l = l1();
        for method in [Method::Symbolic, Method::MonteCarlo, Method::Auto] {
            let opts = BreadthOptions {
                method,
                ..Default::default()
            };
            assert_eq!(breadth_with(&l, &opts).value, 2, "{method:?}");
        }
    }

    #[test]
    fn two_heisenbergs_need_certificate() {
        // h3 ⊕ h3: b = 2 but dim[L,L] = 2, n − dim Z − 1 = 3.
        let l = heis(1).direct_sum(&heis(1)).unwrap();
        let opts = BreadthOptions {
            symbolic_max_dim: 0,
            ..Default::default()
        };
        let r = breadth_with(&l, &opts);
        assert_eq!((r.value, r.is_exact()), (2, true));
    }

    #[test]
    fn certificate_closes_gap() {
        // L1 ⊕ h3: dim[L,L] = 4, n − dim Z − 1 = 5, b = 3.
        let l = l1().direct_sum(&heis(1)).unwrap();
        let opts = BreadthOptions {
            symbolic_max_dim: 0,
            ..Default::default()
        };
        let r = breadth_with(&l, &opts);
        assert_eq!((r.value, r.is_exact()), (3, true));
        let sym = breadth_with(
            &l,
            &BreadthOptions {
                method: Method::Symbolic,
                ..Default::default()
            },
        );
        assert_eq!(sym.value, 3);
    }

    #[test]
    fn relative_breadth() {
        let l = l1();
        let d = l.derived_algebra();
        let r = breadth_rel_max(&l, &d, &BreadthOptions::default()).unwrap();
        assert_eq!(r.value, 2);
        let zero = Subspace::zero(Q, 4);
        assert_eq!(breadth_rel_max(&l, &zero, &BreadthOptions::default()).unwrap().value, 0);
        let full = breadth_rel_max(&l, &l.full(), &BreadthOptions::default()).unwrap();
        assert_eq!(full.value, 2);
        let not_ideal = Subspace::coordinate(Q, 4, &[0]);
        assert_eq!(
            breadth_rel(&l, &not_ideal, &l.basis_vector(0)),
            Err(Error::NotAnIdeal)
        );
    }

    #[test]
    fn gfp_enumeration_matches_rational_value() {
        let l = l1().reduce_mod_p(5).unwrap();
        let r = breadth(&l);
        assert_eq!((r.value, r.is_exact()), (2, true));
        assert_eq!(breadth_of(&l, &r.witness).unwrap(), 2);
    }

    #[test]
    fn projective_points_are_distinct_and_normalized() {
        let (p, k) = (3u64, 3u32);
        let total = (0..k).map(|e| p.pow(e)).sum::<u64>();
        assert_eq!(total, 13);
        let pts: Vec<Vec<u64>> = (0..total).map(|i| projective_point(p, k, i)).collect();
        for (i, a) in pts.iter().enumerate() {
            assert_eq!(a.iter().find(|&&x| x != 0), Some(&1));
            for b in &pts[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn breadth2_characterization() {
        assert_eq!(char_breadth2(&l1()).unwrap(), (true, Breadth2Case::S2));
        assert_eq!(
            char_breadth2(&StructureTensor::abelian(Q, 4)).unwrap(),
            (true, Breadth2Case::None)
        );
        assert!(char_breadth1(&heis(1)));
        assert!(char_breadth1(&l1()));
    }
}
