use proptest::prelude::*;

use super::*;
use crate::combinat::partitions_in_box;
use crate::grassmann::{plucker_residuals, RelationMode};
use crate::hyperdet::cayley222;
use crate::residual::all_zero;
use crate::sample;

fn r(n: i64) -> Rat {
    Rat::from_int(n)
}

fn q(a: i64, b: i64) -> Rat {
    Rat::new(a, b)
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn pv(n: usize, coords: &[(&[usize], i64)]) -> PluckerVector {
    PluckerVector::new(n, coords.iter().map(|(l, c)| (p(l), r(*c)))).unwrap()
}

fn odd_point(rng: &mut sample::SampleRng, len: usize) -> Vec<Rat> {
    (1..=len).map(|j| if j % 2 == 1 { sample::rat(rng, 9) } else { Rat::zero() }).collect()
}

#[test]
fn construction_fixtures() {
    let t = tau_from_symmetric(&RatMatrix::from_i64(&[vec![0]]).unwrap()).unwrap();
    assert_eq!(t.poly, SymPoly::one(1));
    let t = tau_from_symmetric(&RatMatrix::from_i64(&[vec![5]]).unwrap()).unwrap();
    assert_eq!(t.poly, SymPoly::one(1) + &SymPoly::var(1, 1).unwrap().scale(&r(5)));
    let t = tau_from_symmetric(&RatMatrix::identity(2)).unwrap();
    let table = SchurTable::new(4);
    let want = [&[][..], &[1], &[2, 1], &[2, 2]].iter().fold(SymPoly::zero(4), |acc, l| acc + &table.schur(&p(l)).unwrap());
    assert_eq!(t.poly, want);
    let bad = RatMatrix::from_i64(&[vec![1, 2], vec![3, 4]]).unwrap();
    assert!(matches!(tau_from_symmetric(&bad), Err(Error::NotSymmetric)));
    assert!(matches!(
        tau_from_plucker(&pv(2, &[(&[2, 2], 1)]), 3),
        Err(Error::TruncationTooSmall { need: 4, have: 3 })
    ));
}

#[test]
fn frame_evaluation_matches_schur_sum() {
    let mut rng = sample::rng(2);
    for n in 1..=4usize {
        let a = sample::matrix(&mut rng, n, n, 7);
        let with_frame = tau_from_affine(&a).unwrap();
        let mut bare = with_frame.clone();
        bare.frame = None;
        for _ in 0..3 {
            let t: Vec<Rat> = (0..n * n).map(|_| sample::rat(&mut rng, 5)).collect();
            let direct = with_frame.poly.eval(&t).unwrap();
            assert_eq!(with_frame.eval(&t), direct, "frame, N={n}");
            assert_eq!(bare.eval(&t), direct, "Schur sum, N={n}");
        }
    }
}

#[test]
fn series_evaluations_match_polynomial_shifts() {
    let mut rng = sample::rng(3);
    let tau = tau_from_affine(&sample::matrix(&mut rng, 2, 2, 5)).unwrap();
    let t: Vec<Rat> = (0..4).map(|_| sample::rat(&mut rng, 5)).collect();
    let u = q(2, 7);
    let minus = tau.minus_series(&t, 32).eval(&u);
    assert_eq!(minus, tau.eval_shifted(&t, &[(u.clone(), -1)]));
    let plus = tau.plus_series(&t, 32).eval(&u);
    assert_eq!(plus, tau.eval_shifted(&t, &[(u.clone(), 1)]));
}

#[test]
fn ckp_fixtures() {
    assert!(ckp_residual(&tau_from_plucker(&pv(1, &[(&[], 1)]), 1).unwrap()).is_zero());
    let rep = ckp_residual(&tau_from_plucker(&pv(2, &[(&[], 1), (&[2], 1)]), 4).unwrap());
    assert_eq!(rep.symmetry, SymPoly::var(4, 2).unwrap().scale(&r(2)));
    let mut rng = sample::rng(4);
    for n in 1..=3 {
        let tau = tau_from_symmetric(&sample::symmetric(&mut rng, n, 9)).unwrap();
        let rep = ckp_residual(&tau);
        assert!(rep.is_zero(), "N={n}");
        assert!(tau.is_ckp());
    }
    let tau = tau_from_affine(&sample::non_symmetric(&mut rng, 3, 9)).unwrap();
    assert!(!tau.is_ckp());
}

#[test]
fn baker_fixtures() {
    let one = tau_from_plucker(&pv(1, &[(&[], 1)]), 1).unwrap();
    let a = baker_series(&one, 3, 6).unwrap();
    assert_eq!(a[0], SymPoly::one(1));
    assert!(a[1..].iter().all(SymPoly::is_zero));

    let tau = tau_from_plucker(&pv(1, &[(&[], 1), (&[1], 1)]), 1).unwrap();
    let a = baker_series(&tau, 2, 5).unwrap();
    // a_1 = -1/(1 + t_1) = -1 + t_1 - t_1^2 + ...
    let want = SymPoly::from_terms(1, (0..=5u32).map(|k| (vec![k], Rat::sign(k as i64 + 1)))).unwrap();
    assert_eq!(a[1], want);
    assert_eq!(a[1].eval(&[r(0)]).unwrap(), r(-1));
    assert!(a[2].is_zero());

    let zero_const = tau_from_plucker(&pv(1, &[(&[1], 1)]), 1).unwrap();
    assert!(matches!(baker_series(&zero_const, 2, 4), Err(Error::SeriesUndefined)));
}

#[test]
fn baker_a1_is_log_derivative() {
    let mut rng = sample::rng(6);
    let w = 6;
    let tau = tau_from_symmetric(&sample::symmetric(&mut rng, 2, 5)).unwrap();
    let a = baker_series(&tau, 2, w).unwrap();
    let dlog = tau.poly.derivative(1).unwrap().mul_truncated(&tau.poly.series_inverse(w).unwrap(), w);
    assert_eq!(a[1], -dlog);
}

#[test]
fn hirota_fixtures() {
    let mut rng = sample::rng(7);
    let one = tau_from_plucker(&pv(1, &[(&[], 1)]), 1).unwrap();
    assert_eq!(hirota_residual(&one, &[q(1, 2)], &[q(1, 3), q(2, 5)], 12).unwrap(), r(0));
    let t1 = tau_from_plucker(&pv(1, &[(&[], 1), (&[1], 1)]), 1).unwrap();
    assert_eq!(hirota_residual(&t1, &[q(1, 2)], &[q(1, 3)], 12).unwrap(), r(0));
    for _ in 0..5 {
        let tau = tau_from_symmetric(&sample::symmetric(&mut rng, 2, 9)).unwrap();
        let t: Vec<Rat> = (0..4).map(|_| sample::rat(&mut rng, 9)).collect();
        let dt: Vec<Rat> = (0..3).map(|_| sample::rat(&mut rng, 9)).collect();
        assert_eq!(hirota_residual(&tau, &t, &dt, 12).unwrap(), r(0));
    }
    let fake = tau_from_plucker(&pv(2, &[(&[], 1), (&[2], 1), (&[1, 1], 1)]), 4).unwrap();
    assert!(!plucker_residuals(&fake.source, RelationMode::Full).iter().all(|x| x.is_zero()));
    let t = [q(1, 2), q(1, 3), q(-1, 5), q(2, 7)];
    assert_ne!(hirota_residual(&fake, &t, &[q(1, 3), q(1, 4)], 12).unwrap(), r(0));
    let big = tau_from_symmetric(&RatMatrix::identity(3)).unwrap();
    assert!(matches!(hirota_residual(&big, &t, &[q(1, 3)], 8), Err(Error::TruncationTooSmall { .. })));
}

#[test]
fn hirota_agrees_with_plucker() {
    let mut rng = sample::rng(8);
    for i in 0..12 {
        let n = 2 + i % 2;
        let coords: Vec<(Partition, Rat)> =
            partitions_in_box(n).into_iter().map(|l| (l, sample::rat(&mut rng, 4))).collect();
        let pi = if i % 3 == 0 {
            PluckerVector::new(n, coords).unwrap()
        } else {
            plucker(&Subspace::from_matrix(n, sample::matrix(&mut rng, 2 * n, n, 5)).unwrap()).unwrap()
        };
        let tau = tau_from_plucker(&pi, n * n).unwrap();
        let ok = all_zero(&plucker_residuals(&pi, RelationMode::Full));
        let t: Vec<Rat> = (0..2 * n).map(|_| sample::rat(&mut rng, 5)).collect();
        let dt: Vec<Rat> = (0..3).map(|_| sample::rat(&mut rng, 5)).collect();
        assert_eq!(hirota_residual(&tau, &t, &dt, 12).unwrap().is_zero(), ok, "sample {i}");
    }
}

#[test]
fn a_matrix_fixtures() {
    let one = tau_from_plucker(&pv(1, &[(&[], 1)]), 1).unwrap();
    let x = [q(1, 2), q(1, 3), q(1, 5)];
    let a = a_matrix(&one, &[], &x).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(a[(i, j)], (&x[i] + &x[j]).recip().unwrap());
        }
    }
    let mut rng = sample::rng(10);
    let tau = tau_from_symmetric(&sample::symmetric(&mut rng, 3, 9)).unwrap();
    let tp = [q(1, 7), r(0), q(1, 11), r(0), r(0), r(0)];
    assert!(a_matrix(&tau, &tp, &x).unwrap().is_symmetric());
    let bad = tau_from_affine(&sample::non_symmetric(&mut rng, 3, 9)).unwrap();
    assert!(!a_matrix(&bad, &tp, &x).unwrap().is_symmetric());
    assert!(matches!(a_matrix(&tau, &[r(0), r(1)], &x), Err(Error::Precondition(_))));
    assert!(matches!(a_matrix(&tau, &tp, &[q(1, 2), q(-1, 2)]), Err(Error::Precondition(_))));
    assert!(matches!(a_matrix(&tau, &tp, &[r(0)]), Err(Error::Precondition(_))));
}

#[test]
fn fay_fixtures() {
    let mut rng = sample::rng(11);
    let tau = tau_from_symmetric(&RatMatrix::identity(2)).unwrap();
    let t: Vec<Rat> = (0..4).map(|_| sample::rat(&mut rng, 5)).collect();
    assert_eq!(fay_residual(&tau, &t, &[q(1, 2)], &[q(-1, 5)]).unwrap(), r(0));
    assert_eq!(fay_residual(&tau, &t, &[q(1, 2), q(1, 3)], &[q(-1, 5), q(-1, 7)]).unwrap(), r(0));
    let fake = tau_from_plucker(&pv(2, &[(&[], 1), (&[2], 1), (&[1, 1], 1)]), 4).unwrap();
    assert_ne!(fay_residual(&fake, &t, &[q(1, 2), q(1, 3)], &[q(-1, 5), q(-1, 7)]).unwrap(), r(0));
    assert!(fay_residual(&tau, &t, &[q(1, 2)], &[q(1, 2)]).is_err());
    assert!(fay_residual(&tau, &t, &[], &[]).is_err());
    for _ in 0..4 {
        let tau = tau_from_affine(&sample::matrix(&mut rng, 3, 3, 5)).unwrap();
        let t: Vec<Rat> = (0..6).map(|_| sample::rat(&mut rng, 5)).collect();
        let x = [q(1, 2), q(1, 3), q(2, 7)];
        let y = [q(-1, 5), q(1, 9), q(-3, 11)];
        for k in 1..=3 {
            assert_eq!(fay_residual(&tau, &t, &x[..k], &y[..k]).unwrap(), r(0), "k={k}");
        }
    }
}

#[test]
fn sigma_cube_is_scaled_minor_cube() {
    let mut rng = sample::rng(12);
    let tau = tau_from_symmetric(&sample::symmetric(&mut rng, 3, 9)).unwrap();
    let tp = odd_point(&mut rng, 6);
    let x = [q(1, 2), q(1, 3), q(1, 5)];
    let a = a_matrix(&tau, &tp, &x).unwrap();
    let base = tau.eval(&tp);
    let mut ev = FamilyEvaluator::new(&tau, &tp, &x).unwrap();
    let cube = ev.sigma_cube(&[0, 0, 0], [1, 2, 3]).unwrap();
    for mask in 0..8usize {
        let set: Vec<usize> = (0..3).filter(|b| mask & (1 << b) != 0).collect();
        assert_eq!(cube.values[mask], &base * &a.minor(&set, &set).unwrap(), "mask {mask}");
    }
}

#[test]
fn family_fixtures() {
    let one = tau_from_plucker(&pv(1, &[(&[], 1)]), 1).unwrap();
    let x = vec![q(1, 2), q(1, 3), q(1, 5), q(1, 7)];
    let spec = ShiftSpec::new(x.clone(), vec![0; 4]).unwrap();
    assert_eq!(family_residual(&one, &[], &spec, [1, 2, 3]).unwrap(), r(0));

    let mut rng = sample::rng(13);
    let tau = tau_from_symmetric(&sample::symmetric(&mut rng, 4, 5)).unwrap();
    let tp = odd_point(&mut rng, 8);
    assert_eq!(family_residual(&tau, &tp, &spec, [1, 2, 3]).unwrap(), r(0));
    let spec2 = ShiftSpec::new(x.clone(), vec![1, 0, 2, 0]).unwrap();
    assert_eq!(family_residual(&tau, &tp, &spec2, [1, 2, 3]).unwrap(), r(0));
    assert_eq!(family_residual(&tau, &tp, &spec2, [2, 3, 4]).unwrap(), r(0));

    let mut ev = FamilyEvaluator::new(&tau, &tp, &x).unwrap();
    let cube = ev.sigma_cube(&[1, -1, 0, 2], [1, 3, 4]).unwrap();
    assert_eq!(cayley222(&cube), r(0));
    for k in 0..8 {
        let mut c = cube.clone();
        c.values[k] += r(1);
        assert_ne!(cayley222(&c), r(0));
    }

    let bad = tau_from_affine(&sample::non_symmetric(&mut rng, 3, 5)).unwrap();
    assert!(matches!(family_residual(&bad, &tp, &spec, [1, 2, 3]), Err(Error::Precondition(_))));
    assert!(ShiftSpec::new(vec![q(1, 2), q(-1, 2)], vec![0, 0]).is_err());
    assert!(ShiftSpec::new(vec![q(1, 2)], vec![0, 0]).is_err());
    assert!(ev.sigma_cube(&[0, 0, 0, 0], [1, 1, 2]).is_err());
}

#[test]
fn tau_json_roundtrip() {
    let tau = tau_from_symmetric(&RatMatrix::from_i64(&[vec![1, 2], vec![2, 3]]).unwrap()).unwrap();
    let s = serde_json::to_string(&tau).unwrap();
    assert!(s.starts_with(r#"{"n":2,"m":4,"plucker":[{"lambda":[],"c":"1"}"#), "{s}");
    let back: TauPoly = serde_json::from_str(&s).unwrap();
    assert_eq!(back.poly, tau.poly);
    assert_eq!(back.source, tau.source);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]
    #[test]
    fn symmetric_tau_is_ckp(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let n = 1 + (seed % 3) as usize;
        let tau = tau_from_symmetric(&sample::symmetric(&mut rng, n, 20)).unwrap();
        prop_assert!(ckp_residual(&tau).is_zero());
    }

    #[test]
    fn family_vanishes_on_lagrangian(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let tau = tau_from_symmetric(&sample::symmetric(&mut rng, 3, 9)).unwrap();
        let tp = odd_point(&mut rng, 6);
        let x = [q(1, 2), q(1, 3), q(1, 5), q(1, 7)];
        let mut ev = FamilyEvaluator::new(&tau, &tp, &x).unwrap();
        let n: Vec<i64> = (0..4).map(|i| ((seed >> (8 * i)) % 5) as i64 - 2).collect();
        prop_assert_eq!(ev.residual(&n, [1, 2, 4]).unwrap(), r(0));
    }
}
