//! Test-only oracles written against raw residues, independent of the
//! library's linear algebra.

#![allow(dead_code)]

use liebreadth::algebra::StructureTensor;
use liebreadth::field::Scalar;

/// Rank of a matrix over GF(p) by plain row reduction.
pub fn rank_mod(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..m.len()).find(|&r| !m[r][c].is_multiple_of(p)) else {
            continue;
        };
        m.swap(rank, r);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in 0..cols {
                    m[r][k] = (m[r][k] + p * p - f * m[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// c[i][j][k] as residues; the algebra must live over GF(p).
pub fn residues(l: &StructureTensor) -> Vec<Vec<Vec<u64>>> {
    let n = l.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| match l.constant(i, j, k) {
                            Scalar::Modular { value, .. } => value,
                            other => panic!("not a residue: {other:?}"),
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// max over all x ∈ GF(p)^n of rank ad_x.
pub fn brute_breadth(c: &[Vec<Vec<u64>>], p: u64) -> usize {
    let n = c.len();
    let mut best = 0;
    let mut x = vec![0u64; n];
    loop {
        // Row k, column j of ad_x: Σ_i x_i c[i][j][k].
        let ad: Vec<Vec<u64>> = (0..n)
            .map(|k| (0..n).map(|j| (0..n).map(|i| x[i] * c[i][j][k]).sum::<u64>() % p).collect())
            .collect();
        best = best.max(rank_mod(ad, p));
        let mut i = 0;
        while i < n {
            x[i] += 1;
            if x[i] < p {
                break;
            }
            x[i] = 0;
            i += 1;
        }
        if i == n {
            return best;
        }
    }
}

/// dim span{[e_i, e_j]} over GF(p).
pub fn derived_dim(c: &[Vec<Vec<u64>>], p: u64) -> usize {
    let n = c.len();
    let rows: Vec<Vec<u64>> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| c[i][j].clone())
        .collect();
    if rows.is_empty() {
        0
    } else {
        rank_mod(rows, p)
    }
}

#[test]
fn oracle_sanity() {
    assert_eq!(rank_mod(vec![vec![1, 2], vec![2, 4]], 5), 1);
    assert_eq!(rank_mod(vec![vec![1, 2], vec![2, 1]], 3), 1);
    assert_eq!(rank_mod(vec![vec![1, 2], vec![2, 1]], 5), 2);
}
