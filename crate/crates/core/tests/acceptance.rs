//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Built with `harness = false` so the report lines reach stdout; the
//! process exits nonzero when any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use liebreadth::algebra::StructureTensor;
use liebreadth::breadth::{breadth, breadth_rel, breadth_rel_max, breadth_with, char_breadth2, BreadthOptions, Method};
use liebreadth::catalog::{build, expected_invariants, normalize, FamilyTag};
use liebreadth::error::Error;
use liebreadth::field::{random_scalar, stream, Field, Scalar};
use liebreadth::generate::{add_abelian_summand, enumerate_gfp, random_invertible, random_mixed_solvable};
use liebreadth::invariants::{center, centralizer, invariants, is_solvable, maximal_abelian_ideal};
use liebreadth::matrix::{Matrix, Vector};
use liebreadth::recognize::{are_isomorphic, classify};
use liebreadth::subspace::Subspace;
use rand::Rng;

const Q: Field = Field::Rationals;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn q(a: i64, b: i64) -> Scalar {
    Scalar::ratio(a, b)
}

fn catalog_tags() -> Vec<FamilyTag> {
    vec![
        FamilyTag::Abelian(0),
        FamilyTag::Abelian(3),
        FamilyTag::HeisenbergCentral { k: 1, m: 1 },
        FamilyTag::HeisenbergCentral { k: 2, m: 1 },
        FamilyTag::HeisenbergCentral { k: 1, m: 2 },
        FamilyTag::Breadth1Solvable(2),
        FamilyTag::Breadth1Solvable(4),
        FamilyTag::L1,
        FamilyTag::L2(2),
        FamilyTag::L2(4),
        FamilyTag::L2(6),
        FamilyTag::L3(1),
        FamilyTag::L3(3),
        FamilyTag::L3(5),
        FamilyTag::L4,
        FamilyTag::L5,
        FamilyTag::L6,
        FamilyTag::L7,
        FamilyTag::L8(q(2, 1)),
        FamilyTag::L8(q(-1, 1)),
        FamilyTag::L8(q(1, 3)),
        FamilyTag::L8(q(1, 1)),
    ]
}

/// Every catalog constructor is a Lie algebra with the tabled invariants.
fn criterion1() -> Outcome {
    let mut bad = Vec::new();
    for tag in catalog_tags() {
        let l = build(&tag, Q).expect("catalog tag builds");
        let inv = invariants(&l);
        let b = breadth(&l);
        let got = (
            inv.dim,
            inv.dim_derived,
            inv.dim_center,
            b.value,
            inv.solvable,
            inv.nilpotent,
            inv.pure,
            inv.lcs_stable_dim(),
        );
        let e = expected_invariants(&tag);
        let want = (
            e.dim,
            e.dim_derived,
            e.dim_center,
            e.breadth,
            e.solvable,
            e.nilpotent,
            e.pure,
            e.lcs_stable_dim,
        );
        let jacobi = l.validate();
        if !jacobi.is_lie() {
            let triples: Vec<String> = jacobi
                .violations
                .iter()
                .map(|[i, j, k]| format!("({},{},{})", i + 1, j + 1, k + 1))
                .collect();
            bad.push(format!("{tag}: Jacobi fails at {}", triples.join(" ")));
        } else if got != want || !b.is_exact() {
            bad.push(format!("{tag}: computed {got:?}, table {want:?}"));
        }
    }
    let total = catalog_tags().len();
    outcome(
        bad.is_empty(),
        format!("{}/{} constructors sound{}", total - bad.len(), total, failures(&bad)),
    )
}

/// b(L) = 1 ⟺ dim[L,L] = 1 over every Jacobi tensor of GF(3)^3.
fn criterion2() -> Outcome {
    let stats = enumerate_gfp(3, 3, |l, b| {
        let c = common::residues(l);
        let oracle_b = common::brute_breadth(&c, 3);
        let oracle_d = common::derived_dim(&c, 3);
        b == oracle_b && (b == 1) == (oracle_d == 1) && l.derived_algebra().dim() == oracle_d
    })
    .expect("enumeration fits the budget");
    outcome(
        stats.total == 19_683 && stats.flagged == 0,
        format!(
            "{} tensors, {} Lie, histogram {:?}, exceptions {}",
            stats.total, stats.jacobi_ok, stats.breadth_histogram, stats.flagged
        ),
    )
}

fn population() -> Vec<StructureTensor> {
    (0..500u64)
        .map(|s| random_mixed_solvable(s).expect("generator succeeds"))
        .collect()
}

/// b(L) = 2 ⟺ (S1 or S2) on the mixed random population.
fn criterion3(pop: &[StructureTensor]) -> Outcome {
    let mut bad = Vec::new();
    let mut by_dim = BTreeMap::new();
    let mut twos = 0;
    for (s, l) in pop.iter().enumerate() {
        *by_dim.entry(l.dim()).or_insert(0) += 1;
        let r = breadth(l);
        let d = l.derived_algebra().dim();
        let s1 = d == 2;
        let s2 = d == 3 && l.dim() - center(l).dim() == 3;
        let (agree, _) = char_breadth2(l).expect("solvable");
        if r.value == 2 {
            twos += 1;
        }
        if !r.is_exact() || (r.value == 2) != (s1 || s2) || !agree {
            bad.push(format!("seed {s}: b = {} ({:?}), dim D = {d}", r.value, r.certainty));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} algebras (dims {:?}), {} of breadth 2, {} mismatches{}",
            pop.len(),
            by_dim,
            twos,
            bad.len(),
            failures(&bad)
        ),
    )
}

/// classify recovers family, orbit and an exact witness for random conjugates.
fn criterion4() -> Outcome {
    let tags = [
        FamilyTag::HeisenbergCentral { k: 1, m: 1 },
        FamilyTag::HeisenbergCentral { k: 2, m: 1 },
        FamilyTag::Breadth1Solvable(2),
        FamilyTag::L1,
        FamilyTag::L2(2),
        FamilyTag::L2(4),
        FamilyTag::L3(1),
        FamilyTag::L3(3),
        FamilyTag::L4,
        FamilyTag::L5,
        FamilyTag::L6,
        FamilyTag::L7,
        FamilyTag::L8(q(2, 1)),
        FamilyTag::L8(q(-1, 1)),
        FamilyTag::L8(q(1, 3)),
    ];
    let mut failed: BTreeMap<String, (usize, String)> = BTreeMap::new();
    let mut ok = 0;
    for (t, tag) in tags.iter().enumerate() {
        let base = build(tag, Q).expect("builds");
        let want = normalize(tag).expect("valid tag");
        for trial in 0..50u64 {
            let p = random_invertible(base.dim(), Q, 5, 1000 * t as u64 + trial).expect("invertible");
            // Columns of p are the catalog basis written in the new coordinates.
            let l = base.change_basis(&p.inverse().expect("invertible")).expect("conjugate");
            let verdict = match classify(&l) {
                Err(e) => Err(e.to_string()),
                Ok(r) => {
                    let exact = l
                        .lift(r.field_used)
                        .and_then(|m| m.change_basis(&r.witness))
                        .ok()
                        .zip(build(&r.family, r.field_used).ok())
                        .is_some_and(|(a, b)| a == b);
                    let orbit_ok = match (tag, &r.parameter_orbit) {
                        (FamilyTag::L8(g), Some((a, b))) => a == g || b == g,
                        (FamilyTag::L8(_), None) => false,
                        _ => true,
                    };
                    if r.family != want {
                        Err(format!("got {}", r.family))
                    } else if !r.verified || !exact || !r.witness.is_invertible() {
                        Err("witness check failed".into())
                    } else if !orbit_ok {
                        Err("orbit misses γ".into())
                    } else {
                        Ok(())
                    }
                }
            };
            match verdict {
                Ok(()) => ok += 1,
                Err(msg) => {
                    let e = failed.entry(tag.to_string()).or_insert((0, msg));
                    e.0 += 1;
                }
            }
        }
    }
    let bad: Vec<String> = failed
        .iter()
        .map(|(t, (c, m))| format!("{t}: {c}/50 failed, first: {m}"))
        .collect();
    outcome(
        bad.is_empty(),
        format!("{ok}/{} round trips{}", tags.len() * 50, failures(&bad)),
    )
}

/// L8(γ) ≅ L8(δ) ⟺ γ = δ or γδ = 1; L7 is never an L8.
fn criterion5() -> Outcome {
    let grid = [q(1, 1), q(-1, 1), q(2, 1), q(-2, 1), q(1, 2), q(-1, 2), q(3, 1), q(1, 3)];
    let l7 = build(&FamilyTag::L7, Q).expect("builds");
    let mut bad = Vec::new();
    let mut checked = 0;
    for g in &grid {
        let lg = build(&FamilyTag::L8(g.clone()), Q).expect("builds");
        for d in &grid {
            let ld = build(&FamilyTag::L8(d.clone()), Q).expect("builds");
            let want = g == d || g.checked_mul(d).is_ok_and(|p| p.is_one());
            match are_isomorphic(&lg, &ld) {
                Ok((got, w)) if got == want && got == w.is_some() => {}
                other => bad.push(format!("L8({g}) vs L8({d}): {:?}", other.map(|x| x.0))),
            }
            checked += 1;
        }
        match are_isomorphic(&l7, &lg) {
            Ok((false, None)) => {}
            other => bad.push(format!("L7 vs L8({g}): {:?}", other.map(|x| x.0))),
        }
        checked += 1;
    }
    outcome(bad.is_empty(), format!("{checked} pairs decided{}", failures(&bad)))
}

/// maximal_abelian_ideal certifies C_L(A) = A.
fn criterion6() -> Outcome {
    let mut bad = Vec::new();
    let mut seen = 0;
    let mut seed = 10_000u64;
    while seen < 200 {
        let l = random_mixed_solvable(seed).expect("generator succeeds");
        seed += 1;
        if l.dim() > 6 || l.is_abelian() {
            continue;
        }
        seen += 1;
        let check = || -> liebreadth::error::Result<bool> {
            let a = maximal_abelian_ideal(&l)?;
            let l = l.lift(a.field())?;
            let abelian = l.bracket_space(&a, &a)?.is_zero();
            let ideal = a.contains_subspace(&l.bracket_space(&l.full(), &a)?)?;
            let selfcentral = centralizer(&l, &a)? == a;
            Ok(abelian && ideal && selfcentral)
        };
        match check() {
            Ok(true) => {}
            Ok(false) => bad.push(format!("seed {}: certificate fails", seed - 1)),
            Err(e) => bad.push(format!("seed {}: {e}", seed - 1)),
        }
    }
    outcome(bad.is_empty(), format!("{seen} algebras, {} failures{}", bad.len(), failures(&bad)))
}

#[derive(Default)]
struct LemmaHits {
    l33: usize,
    l34: usize,
    l35: usize,
    l36: usize,
}

/// Targeted breadth-2 instances on top of the random population.
fn targeted() -> Vec<StructureTensor> {
    let mut out = Vec::new();
    let tags = [
        FamilyTag::L1,
        FamilyTag::L2(2),
        FamilyTag::L2(4),
        FamilyTag::L3(1),
        FamilyTag::L3(3),
        FamilyTag::L5,
        FamilyTag::L6,
        FamilyTag::L7,
        FamilyTag::L8(q(2, 1)),
        FamilyTag::L8(q(-1, 1)),
        FamilyTag::HeisenbergCentral { k: 2, m: 1 },
        FamilyTag::HeisenbergCentral { k: 1, m: 2 },
    ];
    let h3 = build(&FamilyTag::HeisenbergCentral { k: 1, m: 1 }, Q).expect("builds");
    let b1 = build(&FamilyTag::Breadth1Solvable(2), Q).expect("builds");
    for (t, tag) in tags.iter().enumerate() {
        let base = build(tag, Q).expect("builds");
        for s in 0..4u64 {
            let p = random_invertible(base.dim(), Q, 3, 77 * t as u64 + s).expect("invertible");
            out.push(base.change_basis(&p).expect("conjugate"));
        }
    }
    // L1 is the catalog family whose maximal abelian ideal has b_A(L) = 1.
    let l1 = build(&FamilyTag::L1, Q).expect("builds");
    for m in 1..=2 {
        let l = add_abelian_summand(&l1, m).expect("m ≥ 1");
        for s in 0..8u64 {
            let p = random_invertible(l.dim(), Q, 3, 500 * m as u64 + s).expect("invertible");
            out.push(l.change_basis(&p).expect("conjugate"));
        }
    }
    for pair in [(&h3, &h3), (&h3, &b1), (&b1, &b1)] {
        let l = pair.0.direct_sum(pair.1).expect("sum");
        for s in 0..4u64 {
            let p = random_invertible(l.dim(), Q, 3, 991 + s).expect("invertible");
            out.push(l.change_basis(&p).expect("conjugate"));
        }
    }
    out
}

/// Hypotheses and conclusions of the three structural lemmas on b = 2
/// algebras, with A a maximal abelian ideal.
fn criterion7(pop: &[StructureTensor]) -> Outcome {
    let mut hits = LemmaHits::default();
    let mut bad = Vec::new();
    let extra = targeted();
    let opts = BreadthOptions {
        certify_max_dim: usize::MAX,
        ..BreadthOptions::default()
    };
    for (idx, l0) in pop.iter().chain(extra.iter()).enumerate() {
        if !is_solvable(l0) || breadth(l0).value != 2 {
            continue;
        }
        let mut run = || -> liebreadth::error::Result<Vec<String>> {
            let mut errs = Vec::new();
            let a = maximal_abelian_ideal(l0)?;
            let l = l0.lift(a.field())?;
            let full = l.full();
            let al = l.bracket_space(&a, &full)?;
            let ba = breadth_rel_max(&l, &a, &opts)?;
            if !ba.is_exact() {
                errs.push("b_A(L) not exact".into());
            }
            if ba.value == 2 {
                hits.l34 += 1;
                if al.dim() != 2 {
                    errs.push(format!("3.4: dim[A,L] = {}", al.dim()));
                }
                // The x with b_A(x) = 2 are Zariski dense and [x,L] ⊆ [A,L]
                // is linear in x, so the hypothesis is [L,L] ⊆ [A,L].
                let d = l.derived_algebra();
                if al.contains_subspace(&d)? {
                    hits.l35 += 1;
                    if d != al || d.dim() != 2 {
                        errs.push("3.5: [L,L] ≠ [A,L] or dim ≠ 2".into());
                    }
                }
                hits.l33 += lemma33(&l, &a, &ba.witness, idx as u64, &mut errs)?;
            } else if ba.value == 1 {
                hits.l36 += 1;
                let z = center(&l);
                let case1 = al.dim() == 1 && {
                    let (quo, _) = l.quotient(&al)?;
                    breadth_with(&quo, &opts).value < 2
                };
                let case2 = a.dim() - z.dim() == 1 && l.dim() - z.dim() <= 3;
                if !case1 && !case2 {
                    errs.push("3.6: neither case holds".into());
                }
            }
            Ok(errs)
        };
        match run() {
            Ok(errs) => bad.extend(errs.into_iter().map(|e| format!("#{idx}: {e}"))),
            Err(e) => bad.push(format!("#{idx}: {e}")),
        }
    }
    let enough = hits.l34 >= 20 && hits.l35 >= 20 && hits.l36 >= 20;
    outcome(
        bad.is_empty() && enough,
        format!(
            "hits 3.3 {} / 3.4 {} / 3.5 {} / 3.6 {}, violations {}{}",
            hits.l33,
            hits.l34,
            hits.l35,
            hits.l36,
            bad.len(),
            failures(&bad)
        ),
    )
}

/// Six-element test with x of relative breadth 2 and random y, z with
/// y − z ∉ A. Returns the number of sampled triples.
fn lemma33(l: &StructureTensor, a: &Subspace, x: &Vector, seed: u64, errs: &mut Vec<String>) -> liebreadth::error::Result<usize> {
    let field = l.field();
    let n = l.dim();
    let mut rng = stream(seed, 33);
    let mut count = 0;
    for _ in 0..3 {
        let rand_vec = |rng: &mut rand_chacha::ChaCha8Rng| {
            Vector::new(field, (0..n).map(|_| random_scalar(field, 3, rng)).collect()).expect("length n")
        };
        let y = rand_vec(&mut rng);
        let z = rand_vec(&mut rng);
        if a.contains(&y.sub(&z))? {
            continue;
        }
        count += 1;
        let six = [y.clone(), z.clone(), y.add(&z), x.add(&y), x.add(&z), x.add(&y).add(&z)];
        let mut any = false;
        for v in &six {
            if breadth_rel(l, a, v)? != 1 {
                any = true;
                break;
            }
        }
        if !any {
            errs.push("3.3: all six elements have b_A = 1".into());
        }
    }
    Ok(count)
}

/// Symbolic, Monte Carlo and mod-5 breadth agree; breadth is additive.
fn criterion8() -> Outcome {
    let mut bad = Vec::new();
    let algebras = integer_algebras(100);
    let symbolic = BreadthOptions {
        method: Method::Symbolic,
        ..BreadthOptions::default()
    };
    let mc = BreadthOptions {
        method: Method::MonteCarlo,
        trials: 24,
        ..BreadthOptions::default()
    };
    let mut drops = 0;
    for (i, l) in algebras.iter().enumerate() {
        let s = breadth_with(l, &symbolic);
        let m = breadth_with(l, &mc);
        let reduced = l.reduce_mod_p(5).expect("integer constants");
        let g = breadth(&reduced);
        let oracle = common::brute_breadth(&common::residues(&reduced), 5);
        if s.value > g.value {
            drops += 1;
        }
        if s.value != m.value || s.value < g.value || g.value != oracle || !s.is_exact() || !g.is_exact() {
            bad.push(format!(
                "#{i} (dim {}): symbolic {}, sampled {}, mod 5 {}, oracle {oracle}",
                l.dim(),
                s.value,
                m.value,
                g.value
            ));
        }
    }
    let tags = FamilyTag::samples();
    let mut pairs = 0;
    let mut rng = stream(8, 8);
    while pairs < 50 {
        let a = &tags[rng.gen_range(0..tags.len())];
        let b = &tags[rng.gen_range(0..tags.len())];
        let (la, lb) = (build(a, Q).expect("builds"), build(b, Q).expect("builds"));
        if la.dim() + lb.dim() > 9 {
            continue;
        }
        pairs += 1;
        let sum = la.direct_sum(&lb).expect("sum");
        let (bs, ba, bb) = (breadth(&sum), breadth(&la), breadth(&lb));
        if bs.value != ba.value + bb.value || !bs.is_exact() {
            bad.push(format!("b({a} ⊕ {b}) = {} ≠ {} + {}", bs.value, ba.value, bb.value));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} integer algebras ({drops} drop mod 5), {pairs} direct sums{}",
            algebras.len(),
            failures(&bad)
        ),
    )
}

/// Integer unimodular P: unipotent upper triangular times a permutation.
fn unimodular(n: usize, rng: &mut rand_chacha::ChaCha8Rng) -> Matrix {
    let mut rows = vec![vec![0i64; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = 1;
        for x in row.iter_mut().skip(i + 1) {
            *x = rng.gen_range(-2..=2);
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let permuted: Vec<Vec<Scalar>> = perm
        .iter()
        .map(|&r| rows[r].iter().map(|&x| Q.from_i64(x)).collect())
        .collect();
    Matrix::from_rows(Q, permuted).expect("square")
}

/// Lie algebras of dimension ≤ 5 with integer structure constants.
fn integer_algebras(count: usize) -> Vec<StructureTensor> {
    let mut rng = stream(80, 0);
    let bases: Vec<StructureTensor> = [
        FamilyTag::HeisenbergCentral { k: 1, m: 1 },
        FamilyTag::HeisenbergCentral { k: 2, m: 1 },
        FamilyTag::HeisenbergCentral { k: 1, m: 2 },
        FamilyTag::Breadth1Solvable(2),
        FamilyTag::Breadth1Solvable(4),
        FamilyTag::L1,
        FamilyTag::L2(2),
        FamilyTag::L3(1),
        FamilyTag::L3(3),
        FamilyTag::L5,
        FamilyTag::L6,
        FamilyTag::L7,
        FamilyTag::L8(q(2, 1)),
        FamilyTag::L8(q(-1, 1)),
        FamilyTag::L8(q(5, 1)),
        FamilyTag::Abelian(3),
    ]
    .iter()
    .map(|t| build(t, Q).expect("builds"))
    .chain(std::iter::once(
        StructureTensor::from_int_brackets(Q, 3, &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])])
            .expect("sl2"),
    ))
    .collect();
    let mut out = Vec::new();
    while out.len() < count {
        let l = if rng.gen_bool(0.5) {
            bases[rng.gen_range(0..bases.len())].clone()
        } else {
            // A ⋉ V with integer actions polynomial in one upper triangular matrix.
            let m = rng.gen_range(1..=2);
            let k = rng.gen_range(2..=5 - m);
            let mut u = vec![vec![0i64; k]; k];
            for (i, row) in u.iter_mut().enumerate() {
                for x in row.iter_mut().skip(i) {
                    *x = rng.gen_range(-2..=2);
                }
            }
            let rows: Vec<&[i64]> = u.iter().map(Vec::as_slice).collect();
            let u = Matrix::from_i64(Q, &rows);
            let id = Matrix::identity(Q, k);
            let u2 = u.mul(&u).expect("square");
            let acts: Vec<Matrix> = (0..m)
                .map(|_| {
                    let c: Vec<Scalar> = (0..3).map(|_| Q.from_i64(rng.gen_range(-2..=2))).collect();
                    id.scale(&c[0]).add(&u.scale(&c[1])).and_then(|s| s.add(&u2.scale(&c[2]))).expect("k×k")
                })
                .collect();
            StructureTensor::semidirect(&acts).expect("commuting")
        };
        let p = unimodular(l.dim(), &mut rng);
        out.push(l.change_basis(&p).expect("conjugate"));
    }
    out
}

/// An abelian summand makes an algebra impure without changing b.
fn criterion9() -> Outcome {
    let mut bad = Vec::new();
    let tags = catalog_tags();
    for tag in &tags {
        let l = build(tag, Q).expect("builds");
        let padded = add_abelian_summand(&l, 1).expect("m = 1");
        match classify(&padded) {
            Err(Error::PreconditionFailed(_)) => {}
            Err(e) => bad.push(format!("{tag}: {e}")),
            Ok(r) => bad.push(format!("{tag}: accepted as {}", r.family)),
        }
        let (b0, b1) = (breadth(&l), breadth(&padded));
        if b0.value != b1.value {
            bad.push(format!("{tag}: b changed {} → {}", b0.value, b1.value));
        }
    }
    outcome(bad.is_empty(), format!("{} padded algebras{}", tags.len(), failures(&bad)))
}

fn failures(bad: &[String]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        let shown: Vec<&str> = bad.iter().take(4).map(String::as_str).collect();
        let more = if bad.len() > 4 { format!(" (+{} more)", bad.len() - 4) } else { String::new() };
        format!("; {}{more}", shown.join("; "))
    }
}

fn main() -> ExitCode {
    let pop = population();
    let runs: Vec<(u32, Duration, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, Duration::from_secs(1), Box::new(criterion1)),
        (2, Duration::from_secs(10), Box::new(criterion2)),
        (3, Duration::from_secs(60), Box::new(|| criterion3(&pop))),
        (4, Duration::from_secs(120), Box::new(criterion4)),
        (5, Duration::from_secs(5), Box::new(criterion5)),
        (6, Duration::from_secs(60), Box::new(criterion6)),
        (7, Duration::from_secs(120), Box::new(|| criterion7(&pop))),
        (8, Duration::from_secs(60), Box::new(criterion8)),
        (9, Duration::from_secs(10), Box::new(criterion9)),
    ];
    let mut all = true;
    for (id, target, run) in runs {
        let start = Instant::now();
        let o = run();
        let took = start.elapsed();
        all &= o.pass;
        println!(
            "criterion {id}: {} [{:.2}s, target {}s] {}",
            if o.pass { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            target.as_secs(),
            o.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
