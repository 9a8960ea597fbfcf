//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

use std::time::Instant;

use lgr_core::combinat::{binomial, partitions_up_to, Partition};
use lgr_core::extalg::{basis_elements, dim_p, ladder_residuals};
use lgr_core::fock::{bosonize, ckp_null_residuals, current, FockVector};
use lgr_core::grassmann::{
    check_reductions, lagrange_map, linear_relation_residuals, plucker, plucker_residuals, two_term_residuals,
    PluckerVector, RelationMode, ReductionStatus, Subspace,
};
use lgr_core::hyperdet::{cayley222, core_instances, core_residuals, gr36_coords, identity_chain_residuals, Gr36Coords, MinorCube};
use lgr_core::kernel::{Rat, RatMatrix, SymPoly};
use lgr_core::residual::all_zero;
use lgr_core::sample::{self, SampleRng};
use lgr_core::symfunc::{restrict_odd, SchurTable};
use lgr_core::tau::{ckp_residual, fay_residual, hirota_residual, tau_from_affine, tau_from_symmetric, FamilyEvaluator, TauPoly};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn minor_cube(a: &RatMatrix) -> MinorCube {
    let mut values: [Rat; 8] = Default::default();
    for (mask, v) in values.iter_mut().enumerate() {
        let idx: Vec<usize> = (0..3).filter(|b| mask & (1 << b) != 0).collect();
        *v = if idx.is_empty() { Rat::one() } else { a.minor(&idx, &idx).unwrap() };
    }
    MinorCube { values }
}

fn c1_principal_minor_hyperdet() -> Outcome {
    let mut mats = vec![
        RatMatrix::identity(3),
        RatMatrix::from_i64(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]).unwrap(),
    ];
    let mut rng = sample::rng(1);
    mats.extend((0..10_000).map(|_| sample::symmetric(&mut rng, 3, 99)));
    for (i, a) in mats.iter().enumerate() {
        let r = cayley222(&minor_cube(a));
        ensure(r.is_zero(), || format!("matrix {i}: residual {r}"))?;
    }
    Ok(format!("{} matrices", mats.len()))
}

fn c2_core_relations() -> Outcome {
    let mut rng = sample::rng(2);
    let mut count = 0;
    for n in [4, 5] {
        for s in 0..100 {
            let a = sample::symmetric(&mut rng, n, 9);
            let l = lagrange_map(&Subspace::from_affine(&a).unwrap()).unwrap();
            let rs = core_residuals(&l);
            ensure(rs.len() == core_instances(n).len(), || format!("N={n}: instance count"))?;
            if let Some(bad) = rs.iter().find(|r| !r.is_zero()) {
                return Err(format!("N={n} sample {s}: {} = {}", bad.relation, bad.residual));
            }
            count += rs.len();
        }
    }
    Ok(format!("{count} instances over 200 matrices"))
}

fn c3_sp_decomposition() -> Outcome {
    let mut elements = 0;
    for n in 1..=4usize {
        for k in 0..=2 * n {
            let mut total = 0u64;
            for j in (0..=k / 2).filter(|&j| k <= n + j) {
                let d = (k - 2 * j) as i64;
                let expect = binomial(2 * n as i64, d) - binomial(2 * n as i64, d - 2);
                let elems = basis_elements(n, k, j).map_err(|e| e.to_string())?;
                ensure(elems.len() as u64 == expect && dim_p(n, k, j) == expect, || {
                    format!("N={n} k={k} j={j}: {} elements, expected {expect}", elems.len())
                })?;
                total += expect;
                for b in &elems {
                    let (up, down) = ladder_residuals(b).map_err(|e| e.to_string())?;
                    ensure(up.is_zero() && down.is_zero(), || format!("ladder fails at N={n} k={k} j={j}"))?;
                }
                elements += elems.len();
            }
            let c = binomial(2 * n as i64, k as i64);
            ensure(total == c, || format!("N={n} k={k}: total {total} != {c}"))?;
        }
    }
    Ok(format!("N<=4, {elements} basis elements"))
}

fn c4_lagrangian_linear() -> Outcome {
    let mut rng = sample::rng(4);
    let mut checked = 0;
    for n in 1..=4usize {
        for s in 0..100 {
            let pi = plucker(&Subspace::from_affine(&sample::symmetric(&mut rng, n, 9)).unwrap()).unwrap();
            let full = plucker_residuals(&pi, RelationMode::Full);
            let lin = linear_relation_residuals(&pi);
            let two = two_term_residuals(&pi);
            let expect = (binomial(2 * n as i64, n as i64) - (1 << n)) / 2;
            ensure(two.len() as u64 == expect, || format!("N={n}: {} two-term relations, expected {expect}", two.len()))?;
            for rs in [&full, &lin, &two] {
                if let Some(bad) = rs.iter().find(|r| !r.is_zero()) {
                    return Err(format!("N={n} sample {s}: {} = {}", bad.relation, bad.residual));
                }
            }
            checked += full.len() + lin.len() + two.len();
        }
    }
    let c3 = (binomial(6, 3) - 8) / 2;
    let c4 = (binomial(8, 4) - 16) / 2;
    ensure(c3 == 6 && c4 == 27, || format!("two-term counts {c3}, {c4}"))?;
    Ok(format!("{checked} residuals, two-term counts 6 and 27"))
}

fn c5_identity_chain() -> Outcome {
    let mut rng = sample::rng(5);
    for s in 0..100 {
        let phi = Subspace::from_affine(&sample::symmetric(&mut rng, 3, 9)).unwrap().wedge();
        let g = gr36_coords(&phi).map_err(|e| e.to_string())?;
        let rs = identity_chain_residuals(&g.coords);
        ensure(rs.len() == 16, || format!("{} chain residuals", rs.len()))?;
        ensure(all_zero(&g.consistency) && all_zero(&rs), || format!("Lagrangian sample {s} violates the chain"))?;
    }
    let mut failures = 0;
    for _ in 0..100 {
        let mut v = || sample::rat(&mut rng, 9);
        let g = Gr36Coords {
            s: [v(), v(), v(), v()],
            ss: [v(), v(), v(), v()],
            t: [v(), v(), v()],
            ts: [v(), v(), v()],
        };
        if !all_zero(&identity_chain_residuals(&g)) {
            failures += 1;
        }
    }
    ensure(failures >= 95, || format!("only {failures}/100 random tuples fail"))?;
    Ok(format!("100 Lagrangian pass, {failures}/100 random fail"))
}

fn c6_reductions() -> Outcome {
    let mut rng = sample::rng(6);
    for (n, count) in [(4usize, 8usize), (5, 40)] {
        for s in 0..50 {
            let phi = Subspace::from_affine(&sample::symmetric(&mut rng, n, 9)).unwrap().wedge();
            let reps = check_reductions(&phi).map_err(|e| e.to_string())?;
            ensure(reps.len() == count, || format!("N={n}: {} reductions, expected {count}", reps.len()))?;
            if let Some(r) = reps.iter().find(|r| r.status != ReductionStatus::Pass) {
                return Err(format!("N={n} Lagrangian sample {s}: marking {} is {:?}", r.marking, r.status));
            }
        }
        for s in 0..50 {
            let a = sample::non_symmetric(&mut rng, n, 9);
            let phi = Subspace::from_affine_unchecked(&a).unwrap().wedge();
            let reps = check_reductions(&phi).map_err(|e| e.to_string())?;
            ensure(reps.iter().any(|r| r.status == ReductionStatus::Fail), || {
                format!("N={n} non-Lagrangian sample {s}: no reduction fails")
            })?;
        }
    }
    Ok("N=4,5: 50 Lagrangian pass, 50 non-Lagrangian caught".into())
}

fn c7_murnaghan_nakayama() -> Outcome {
    let m = 16;
    let table = SchurTable::shared(m);
    let mut checked = 0;
    for lam in partitions_up_to(8) {
        let v = FockVector::state(lam.clone(), 0);
        let s = table.schur(&lam).map_err(|e| e.to_string())?;
        for r in 1..=8usize {
            let pr = SymPoly::var(m, r).unwrap().scale(&Rat::from_int(r as i64));
            let raised = bosonize(&current(-(r as i64), &v).unwrap(), m).map_err(|e| e.to_string())?;
            ensure(raised == &pr * &s, || format!("J_-{r} on {lam}"))?;
            let lowered = bosonize(&current(r as i64, &v).unwrap(), m).map_err(|e| e.to_string())?;
            ensure(lowered == s.derivative(r).unwrap(), || format!("J_{r} on {lam}"))?;
            checked += 2;
        }
    }
    Ok(format!("{checked} identities"))
}

fn c8_ckp_null() -> Outcome {
    let mut rng = sample::rng(8);
    for s in 0..100 {
        let n = 1 + s % 3;
        let tau = tau_from_symmetric(&sample::symmetric(&mut rng, n, 9)).unwrap();
        ensure(ckp_residual(&tau).is_zero(), || format!("symmetric sample {s}: ckp residual nonzero"))?;
        let v = FockVector::from_plucker(&tau.source);
        for (name, r) in ckp_null_residuals(&v, 8).map_err(|e| e.to_string())? {
            ensure(r.is_zero(), || format!("symmetric sample {s}: {name} nonzero"))?;
        }
    }
    for s in 0..100 {
        let n = 2 + s % 2;
        let tau = tau_from_affine(&sample::non_symmetric(&mut rng, n, 9)).unwrap();
        ensure(!ckp_residual(&tau).is_zero(), || format!("non-symmetric sample {s}: ckp residual vanishes"))?;
    }
    Ok("100 symmetric null, 100 non-symmetric detected".into())
}

fn distinct_nonzero(rng: &mut SampleRng, k: usize, avoid: &[Rat]) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::new();
    while out.len() < k {
        let x = sample::nonzero_rat(rng, 9);
        if !out.contains(&x) && !avoid.contains(&x) {
            out.push(x);
        }
    }
    out
}

fn c9_fay() -> Outcome {
    let mut rng = sample::rng(9);
    let mut checked = 0;
    for s in 0..25 {
        let n = 1 + s % 3;
        let tau = if s % 2 == 0 || n == 1 {
            tau_from_symmetric(&sample::symmetric(&mut rng, n, 9)).unwrap()
        } else {
            tau_from_affine(&sample::non_symmetric(&mut rng, n, 9)).unwrap()
        };
        let mut points = 0;
        while points < 25 {
            let t: Vec<Rat> = (0..2 * n).map(|_| sample::rat(&mut rng, 9)).collect();
            if tau.eval(&t).is_zero() {
                continue;
            }
            let xs = distinct_nonzero(&mut rng, 3, &[]);
            let ys = distinct_nonzero(&mut rng, 3, &xs);
            for k in 1..=3 {
                let r = fay_residual(&tau, &t, &xs[..k], &ys[..k]).map_err(|e| e.to_string())?;
                ensure(r.is_zero(), || format!("A {s} point {points} k={k}: residual {r}"))?;
                checked += 1;
            }
            points += 1;
        }
    }
    Ok(format!("{checked} residuals"))
}

fn odd_point(rng: &mut SampleRng, tau: &TauPoly) -> Vec<Rat> {
    loop {
        let t: Vec<Rat> =
            (1..=2 * tau.n).map(|j| if j % 2 == 1 { sample::rat(rng, 9) } else { Rat::zero() }).collect();
        if !tau.eval(&t).is_zero() {
            return t;
        }
    }
}

fn lattice(k: usize, radius: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out.into_iter().flat_map(|v| (-radius..=radius).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

fn c10_families() -> Outcome {
    let mut rng = sample::rng(10);
    let x: Vec<Rat> = [2, 3, 5, 7].iter().map(|&d| Rat::new(1, d)).collect();
    let triples = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]];
    let points = lattice(4, 2);
    let (mut checked, mut skipped) = (0usize, 0usize);
    for n in [3usize, 4] {
        for s in 0..25 {
            let tau = tau_from_symmetric(&sample::symmetric(&mut rng, n, 9)).unwrap();
            for sample_t in 0..10 {
                let t = odd_point(&mut rng, &tau);
                let mut ev = FamilyEvaluator::new(&tau, &t, &x).map_err(|e| e.to_string())?;
                for &triple in &triples {
                    for p in &points {
                        if ev.tau_at(p).is_zero() {
                            skipped += 1;
                            continue;
                        }
                        let r = ev.residual(p, triple).map_err(|e| e.to_string())?;
                        ensure(r.is_zero(), || format!("N={n} A {s} t' {sample_t} triple {triple:?} n {p:?}: {r}"))?;
                        checked += 1;
                    }
                }
                if sample_t == 0 {
                    let cube = ev.sigma_cube(&[0, 0, 0, 0], [1, 2, 3]).map_err(|e| e.to_string())?;
                    for i in 0..8 {
                        let mut bad = cube.clone();
                        bad.values[i] += Rat::one();
                        ensure(!cayley222(&bad).is_zero(), || format!("perturbing σ entry {i} went unnoticed"))?;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} residuals, {skipped} translates with τ = 0 skipped, perturbations detected"))
}

fn random_subspace(rng: &mut SampleRng, n: usize) -> Subspace {
    loop {
        if let Ok(w) = Subspace::from_matrix(n, sample::matrix(rng, 2 * n, n, 9)) {
            return w;
        }
    }
}

fn c11_hirota_cross() -> Outcome {
    let mut rng = sample::rng(11);
    let (mut genuine, mut corrupted) = (0, 0);
    for s in 0..50 {
        let n = 2 + s % 2;
        let w = random_subspace(&mut rng, n);
        let tau = if s % 4 < 2 {
            TauPoly::from_subspace(&w).unwrap()
        } else {
            // bump one coordinate to leave the Grassmannian
            let pi = plucker(&w).unwrap();
            let coords: Vec<(Partition, Rat)> = pi.iter().map(|(l, c)| (l.clone(), c.clone())).collect();
            let k = s % coords.len();
            let bumped = coords.into_iter().enumerate().map(|(i, (l, c))| (l, if i == k { c + Rat::one() } else { c }));
            TauPoly::from_plucker(&PluckerVector::new(n, bumped).unwrap(), n * n).unwrap()
        };
        let plucker_ok = all_zero(&plucker_residuals(&tau.source, RelationMode::Full));
        let mut hirota_ok = true;
        for _ in 0..10 {
            let t: Vec<Rat> = (0..2 * n).map(|_| sample::rat(&mut rng, 9)).collect();
            let dt: Vec<Rat> = (0..2 * n).map(|_| sample::rat(&mut rng, 9)).collect();
            let r = hirota_residual(&tau, &t, &dt, n * n + n).map_err(|e| e.to_string())?;
            hirota_ok &= r.is_zero();
        }
        ensure(plucker_ok == hirota_ok, || format!("sample {s}: plucker {plucker_ok} but hirota {hirota_ok}"))?;
        if plucker_ok {
            genuine += 1;
        } else {
            corrupted += 1;
        }
    }
    Ok(format!("{genuine} on the Grassmannian, {corrupted} off it, verdicts agree"))
}

fn c12_schur_transpose() -> Outcome {
    let table = SchurTable::shared(10);
    let mut checked = 0;
    for lam in partitions_up_to(10) {
        let d = table.schur(&lam).unwrap() - table.schur(&lam.transpose()).unwrap();
        ensure(restrict_odd(&d).is_zero(), || format!("{lam}"))?;
        checked += 1;
    }
    Ok(format!("{checked} partitions"))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("principal-minor hyperdeterminant", c1_principal_minor_hyperdet),
        ("core relations N=4,5", c2_core_relations),
        ("Sp-module decomposition", c3_sp_decomposition),
        ("Lagrangian linear constraints", c4_lagrangian_linear),
        ("Gr(3,6) identity chain", c5_identity_chain),
        ("reduction to Gr(3,6)", c6_reductions),
        ("Murnaghan-Nakayama bosonization", c7_murnaghan_nakayama),
        ("CKP null condition", c8_ckp_null),
        ("Fay addition formula", c9_fay),
        ("hyperdeterminantal families", c10_families),
        ("Hirota/Plucker cross-oracle", c11_hirota_cross),
        ("Schur transpose at odd times", c12_schur_transpose),
    ];
    let filter: Vec<usize> = std::env::args().filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        if !filter.is_empty() && !filter.contains(&(i + 1)) {
            continue;
        }
        let start = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("criterion {:>2}: PASS {name} ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL {name} ({why}; {secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
