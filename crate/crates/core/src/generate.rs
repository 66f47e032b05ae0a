//! Random and exhaustive instance generation.
//!
//! Every generator is a pure function of its seed.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::StructureTensor;
use crate::breadth::breadth;
use crate::catalog::{build, FamilyTag};
use crate::error::{Error, Result};
use crate::field::{random_scalar, stream, Field, Scalar};
use crate::matrix::{LinearMap, Matrix, Vector};

const MAX_TRIES: usize = 1000;

/// Default cap on the number of tensors `enumerate_gfp` may scan.
pub const DEFAULT_BUDGET: u128 = 20_000_000;

fn random_matrix(n: usize, field: Field, bound: u64, rng: &mut ChaCha8Rng) -> Matrix {
    let rows = (0..n)
        .map(|_| (0..n).map(|_| random_scalar(field, bound, rng)).collect())
        .collect();
    Matrix::from_rows(field, rows).expect("square")
}

fn invertible_from(n: usize, field: Field, bound: u64, rng: &mut ChaCha8Rng) -> Result<LinearMap> {
    for _ in 0..MAX_TRIES {
        let m = random_matrix(n, field, bound, rng);
        if m.is_invertible() {
            return Ok(m);
        }
    }
    Err(Error::GeneratorStuck(MAX_TRIES))
}

/// Invertible n×n matrix with entries in [−bound, bound] (uniform residues
/// over GF(p)).
pub fn random_invertible(n: usize, field: Field, bound: u64, seed: u64) -> Result<LinearMap> {
    if n == 0 {
        return Err(Error::BadParameter("n must be at least 1".into()));
    }
    invertible_from(n, field, bound.max(1), &mut stream(seed, 0))
}

/// A random conjugate of `l`.
pub fn conjugate(l: &StructureTensor, bound: u64, seed: u64) -> Result<StructureTensor> {
    if l.dim() == 0 {
        return Ok(l.clone());
    }
    l.change_basis(&random_invertible(l.dim(), l.field(), bound, seed)?)
}

/// A ⋉ V with dim A = m, dim V = k, the actions being random polynomials
/// in one random upper-triangular matrix, followed by a random change of
/// basis.
pub fn random_solvable(dims: (usize, usize), field: Field, bound: u64, seed: u64) -> Result<StructureTensor> {
    let (m, k) = dims;
    if m == 0 || k == 0 {
        return Err(Error::BadParameter("m and k must be at least 1".into()));
    }
    let bound = bound.max(1);
    let mut rng = stream(seed, 1);
    let mut u = Matrix::zeros(field, k, k);
    for i in 0..k {
        for j in i..k {
            u.set(i, j, random_scalar(field, bound, &mut rng));
        }
    }
    let mut powers = vec![Matrix::identity(field, k)];
    for e in 1..k {
        powers.push(powers[e - 1].mul(&u)?);
    }
    let actions: Vec<Matrix> = (0..m)
        .map(|_| {
            powers.iter().fold(Matrix::zeros(field, k, k), |acc, p| {
                acc.add(&p.scale(&random_scalar(field, bound, &mut rng))).expect("same shape")
            })
        })
        .collect();
    let l = StructureTensor::semidirect(&actions)?;
    l.change_basis(&invertible_from(m + k, field, bound, &mut rng)?)
}

/// A random conjugate of a direct sum of Heisenberg blocks and an abelian
/// part, over ℚ.
pub fn random_nilpotent(seed: u64) -> Result<StructureTensor> {
    let q = Field::Rationals;
    let mut rng = stream(seed, 2);
    let mut l = StructureTensor::abelian(q, 0);
    for _ in 0..rng.gen_range(0..=2) {
        let k = rng.gen_range(1..=2);
        l = l.direct_sum(&build(&FamilyTag::HeisenbergCentral { k, m: 1 }, q)?)?;
    }
    l = l.direct_sum(&StructureTensor::abelian(q, rng.gen_range(0..=2)))?;
    if l.dim() == 0 {
        l = StructureTensor::abelian(q, 1);
    }
    let n = l.dim();
    l.change_basis(&invertible_from(n, q, 2, &mut rng)?)
}

/// Random solvable algebra over ℚ of dimension 3 to 7 from a mix of
/// constructions: semidirect products, conjugated catalog algebras, direct
/// sums, abelian padding and nilpotent algebras.
pub fn random_mixed_solvable(seed: u64) -> Result<StructureTensor> {
    let q = Field::Rationals;
    let mut rng = stream(seed, 3);
    let sub = rng.gen::<u64>();
    let l = match rng.gen_range(0..6) {
        0 | 1 => {
            let m = rng.gen_range(1..=3);
            let k = rng.gen_range(2..=7 - m);
            return random_solvable((m, k), q, 2, sub);
        }
        2 => {
            let tags = [
                FamilyTag::L1,
                FamilyTag::L2(2),
                FamilyTag::L2(4),
                FamilyTag::L3(1),
                FamilyTag::L3(3),
                FamilyTag::L5,
                FamilyTag::L6,
                FamilyTag::L7,
                FamilyTag::L8([(2, 1), (-1, 1), (1, 3), (3, 2), (-2, 1)].map(|(a, b)| Scalar::ratio(a, b))
                    [rng.gen_range(0..5)]
                    .clone()),
                FamilyTag::Breadth1Solvable(rng.gen_range(3..=5)),
                FamilyTag::HeisenbergCentral { k: rng.gen_range(1..=2), m: 1 },
            ];
            build(&tags[rng.gen_range(0..tags.len())], q)?
        }
        3 => {
            let small = [
                FamilyTag::Breadth1Solvable(2),
                FamilyTag::HeisenbergCentral { k: 1, m: 1 },
                FamilyTag::L7,
                FamilyTag::L8(Scalar::ratio(2, 1)),
            ];
            let a = build(&small[rng.gen_range(0..2)], q)?;
            let b = build(&small[rng.gen_range(0..small.len())], q)?;
            a.direct_sum(&b)?
        }
        4 => {
            let base = random_solvable((1, rng.gen_range(2..=4)), q, 2, sub)?;
            add_abelian_summand(&base, rng.gen_range(1..=2))?
        }
        _ => {
            let mut l = random_nilpotent(sub)?;
            while l.dim() < 3 {
                l = add_abelian_summand(&l, 1)?;
            }
            if l.dim() > 7 {
                l = build(&FamilyTag::HeisenbergCentral { k: 2, m: 1 }, q)?;
            }
            l
        }
    };
    conjugate(&l, 2, sub)
}

/// L ⊕ abelian(m).
pub fn add_abelian_summand(l: &StructureTensor, m: usize) -> Result<StructureTensor> {
    if m == 0 {
        return Err(Error::BadParameter("m must be at least 1".into()));
    }
    l.direct_sum(&StructureTensor::abelian(l.field(), m))
}

/// Counts from an exhaustive scan.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    pub total: u64,
    pub jacobi_ok: u64,
    /// Breadth → number of Lie algebras with that breadth.
    pub breadth_histogram: BTreeMap<usize, u64>,
    /// Lie algebras for which the visitor returned false.
    pub flagged: u64,
}

impl EnumStats {
    fn merge(mut self, other: EnumStats) -> EnumStats {
        self.total += other.total;
        self.jacobi_ok += other.jacobi_ok;
        self.flagged += other.flagged;
        for (b, c) in other.breadth_histogram {
            *self.breadth_histogram.entry(b).or_default() += c;
        }
        self
    }
}

#[derive(Clone, Debug)]
pub struct EnumOptions {
    pub budget: u128,
    /// Number of contiguous shards; by default one per value of the first
    /// pair's coefficients.
    pub shards: Option<usize>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            budget: DEFAULT_BUDGET,
            shards: None,
        }
    }
}

/// Scans every antisymmetric tensor over GF(p) in dimension n and calls
/// `visitor(L, b(L))` on those satisfying Jacobi.
pub fn enumerate_gfp<F>(p: u64, n: usize, visitor: F) -> Result<EnumStats>
where
    F: Fn(&StructureTensor, usize) -> bool + Sync,
{
    enumerate_gfp_with(p, n, &EnumOptions::default(), visitor)
}

pub fn enumerate_gfp_with<F>(p: u64, n: usize, opts: &EnumOptions, visitor: F) -> Result<EnumStats>
where
    F: Fn(&StructureTensor, usize) -> bool + Sync,
{
    if p == 2 {
        return Err(Error::BadPrime { p });
    }
    let field = Field::prime(p)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let digits = pairs.len() * n;
    let total = (p as u128).checked_pow(digits as u32).unwrap_or(u128::MAX);
    if total > opts.budget {
        return Err(Error::BudgetExceeded {
            candidates: total,
            budget: opts.budget,
        });
    }
    let total = total as u64;
    let shards = opts
        .shards
        .unwrap_or(if digits == 0 { 1 } else { p.pow(n as u32) as usize })
        .clamp(1, total.max(1) as usize);
    let per = total.div_ceil(shards as u64);
    let stats = (0..shards as u64)
        .into_par_iter()
        .map(|s| {
            let mut st = EnumStats::default();
            let hi = ((s + 1) * per).min(total);
            let mut digs = vec![0u64; digits];
            for idx in s * per..hi {
                // Most significant digits belong to the first pair.
                let mut r = idx;
                for d in digs.iter_mut().rev() {
                    *d = r % p;
                    r /= p;
                }
                let mut l = StructureTensor::abelian(field, n);
                for (pi, &(i, j)) in pairs.iter().enumerate() {
                    let coords = digs[pi * n..(pi + 1) * n]
                        .iter()
                        .map(|&v| Scalar::Modular { value: v, modulus: p })
                        .collect();
                    l.set_bracket(i, j, &Vector::new(field, coords).expect("field"))
                        .expect("indices");
                }
                st.total += 1;
                if !l.is_lie() {
                    continue;
                }
                st.jacobi_ok += 1;
                let b = breadth(&l).value;
                *st.breadth_histogram.entry(b).or_default() += 1;
                if !visitor(&l, b) {
                    st.flagged += 1;
                }
            }
            st
        })
        .reduce(EnumStats::default, EnumStats::merge);
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{is_nilpotent, is_solvable};

    const Q: Field = Field::Rationals;

    #[test]
    fn invertible_is_deterministic() {
        let a = random_invertible(3, Q, 1, 7).unwrap();
        assert!(a.is_invertible());
        assert_eq!(a, random_invertible(3, Q, 1, 7).unwrap());
        let g = random_invertible(1, Field::prime(3).unwrap(), 1, 9).unwrap();
        assert!(!g.get(0, 0).is_zero());
    }

    #[test]
    fn generated_algebras_have_their_shape() {
        for seed in 0..20 {
            let s = random_solvable((2, 3), Q, 2, seed).unwrap();
            assert!(s.is_lie() && is_solvable(&s));
            let nl = random_nilpotent(seed).unwrap();
            assert!(nl.is_lie() && is_nilpotent(&nl));
            let m = random_mixed_solvable(seed).unwrap();
            assert!(m.is_lie() && is_solvable(&m) && (3..=7).contains(&m.dim()), "{seed}");
        }
    }

    #[test]
    fn abelian_padding() {
        let a = add_abelian_summand(&StructureTensor::abelian(Q, 0), 3).unwrap();
        assert_eq!(a, StructureTensor::abelian(Q, 3));
    }

    #[test]
    fn enumerate_dimension_two() {
        let st = enumerate_gfp(3, 2, |_, _| true).unwrap();
        assert_eq!((st.total, st.jacobi_ok), (9, 9));
        assert_eq!(st.breadth_histogram, BTreeMap::from([(0, 1), (1, 8)]));
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            enumerate_gfp(5, 4, |_, _| true),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
