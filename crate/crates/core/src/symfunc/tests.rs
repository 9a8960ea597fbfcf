use proptest::prelude::*;

use super::*;
use crate::combinat::partitions_up_to;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn poly(m: usize, terms: &[(&[u32], Rat)]) -> SymPoly {
    SymPoly::from_terms(m, terms.iter().map(|(e, c)| (e.to_vec(), c.clone()))).unwrap()
}

fn t(m: usize, k: usize) -> SymPoly {
    SymPoly::var(m, k).unwrap()
}

#[test]
fn schur_fixtures() {
    assert_eq!(schur(&p(&[1]), 1).unwrap(), t(1, 1));
    assert_eq!(schur(&p(&[2]), 2).unwrap(), poly(2, &[(&[2, 0], Rat::new(1, 2)), (&[0, 1], Rat::one())]));
    assert_eq!(schur(&p(&[1, 1]), 2).unwrap(), poly(2, &[(&[2, 0], Rat::new(1, 2)), (&[0, 1], Rat::from_int(-1))]));
    assert_eq!(
        schur(&p(&[2, 1]), 3).unwrap(),
        poly(3, &[(&[3, 0, 0], Rat::new(1, 3)), (&[0, 0, 1], Rat::from_int(-1))])
    );
    assert_eq!(schur(&Partition::empty(), 0).unwrap(), SymPoly::one(0));
    assert!(matches!(schur(&p(&[2, 1]), 2), Err(Error::TruncationTooSmall { need: 3, have: 2 })));
}

#[test]
fn e_and_h_jacobi_trudi_agree() {
    // the h-form on λ and the e-form on λᵀ must coincide
    let tab = SchurTable::new(8);
    for lam in partitions_up_to(8) {
        let l = lam.len();
        let mat: Vec<Vec<SymPoly>> = (0..l)
            .map(|i| (0..l).map(|j| tab.h(lam.part(i) as i64 - i as i64 + j as i64)).collect())
            .collect();
        let h_form = det_laplace(&mat, &SymPoly::one(8));
        assert_eq!(tab.schur(&lam).unwrap(), h_form, "{lam}");
        assert!(h_form.is_homogeneous(lam.weight() as u64), "{lam}");
    }
}

#[test]
fn mn_fixtures() {
    assert_eq!(mn_apply(1, &SchurCombo::single(Partition::empty())), SchurCombo::single(p(&[1])));
    let got = mn_apply(2, &SchurCombo::single(p(&[1])));
    let want: SchurCombo = [(p(&[3]), Rat::one()), (p(&[1, 1, 1]), Rat::from_int(-1))].into_iter().collect();
    assert_eq!(got, want);
    assert_eq!(mn_dual(2, &SchurCombo::single(p(&[2]))), SchurCombo::single(Partition::empty()));
}

#[test]
fn mn_matches_polynomial_operators() {
    let m = 8;
    let tab = SchurTable::new(m);
    for lam in partitions_up_to(m) {
        let s = tab.schur(&lam).unwrap();
        let c = SchurCombo::single(lam.clone());
        for r in 1..=m {
            if lam.weight() + r <= m {
                let pr = t(m, r).scale(&Rat::from_int(r as i64));
                assert_eq!(mn_apply(r, &c).to_poly(&tab).unwrap(), &pr * &s, "M_{r} on {lam}");
            }
            assert_eq!(mn_dual(r, &c).to_poly(&tab).unwrap(), s.derivative(r).unwrap(), "M*_{r} on {lam}");
        }
    }
}

#[test]
fn mn_adjoint() {
    let parts = partitions_up_to(8);
    for r in 1..=4 {
        for lam in &parts {
            let up = mn_apply(r, &SchurCombo::single(lam.clone()));
            for (mu, v) in up.iter() {
                assert_eq!(mn_dual(r, &SchurCombo::single(mu.clone())).get(lam), v.clone());
            }
            for mu in parts.iter().filter(|m| m.weight() == lam.weight() + r) {
                assert_eq!(up.get(mu), mn_dual(r, &SchurCombo::single(mu.clone())).get(lam));
            }
        }
    }
}

#[test]
fn odd_restriction_transpose_invariant() {
    let tab = SchurTable::new(8);
    for lam in partitions_up_to(8) {
        let a = restrict_odd(&tab.schur(&lam).unwrap());
        let b = restrict_odd(&tab.schur(&lam.transpose()).unwrap());
        assert_eq!(a, b, "{lam}");
    }
    assert_eq!(restrict_odd(&schur(&p(&[2]), 2).unwrap()), poly(2, &[(&[2, 0], Rat::new(1, 2))]));
    assert_eq!(restrict_odd(&t(3, 3)), t(3, 3));
}

#[test]
fn miwa_fixtures() {
    let half = Rat::new(1, 2);
    let got = miwa_shift(&t(1, 1), &half, 1).unwrap();
    assert_eq!(got, t(1, 1) + &SymPoly::constant(1, half.clone()));
    assert!(miwa_shift(&t(1, 1), &half, 0).is_err());
    let x = Rat::new(3, 5);
    assert_eq!(miwa_pm_shift(&t(3, 2), &x).unwrap(), t(3, 2));
    let want = t(3, 3) + &SymPoly::constant(3, x.pow(3).unwrap() * Rat::new(2, 3));
    assert_eq!(miwa_pm_shift(&t(3, 3), &x).unwrap(), want);
    // [x] - [-x] agrees with the two separate shifts
    let s = schur(&p(&[2, 1]), 3).unwrap();
    let twice = miwa_shift(&miwa_shift(&s, &x, 1).unwrap(), &(-&x), -1).unwrap();
    assert_eq!(miwa_pm_shift(&s, &x).unwrap(), twice);
}

#[test]
fn combo_json() {
    let c: SchurCombo = [(p(&[2, 1]), Rat::new(1, 3)), (Partition::empty(), Rat::one())].into_iter().collect();
    let s = serde_json::to_string(&c).unwrap();
    assert_eq!(s, r#"[{"lambda":[],"c":"1"},{"lambda":[2,1],"c":"1/3"}]"#);
    assert_eq!(serde_json::from_str::<SchurCombo>(&s).unwrap(), c);
    let mut z = c.clone();
    z.add_term(Partition::empty(), Rat::from_int(-1));
    assert_eq!(z.len(), 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn schur_homogeneous(idx in 0usize..45) {
        let parts = partitions_up_to(7);
        let lam = &parts[idx % parts.len()];
        let s = schur(lam, 7).unwrap();
        prop_assert!(s.is_homogeneous(lam.weight() as u64));
    }

    #[test]
    fn shift_roundtrip(num in -9i64..9, den in 1i64..9) {
        let x = Rat::new(num, den);
        let s = schur(&p(&[3, 1]), 4).unwrap();
        let back = miwa_shift(&miwa_shift(&s, &x, 1).unwrap(), &x, -1).unwrap();
        prop_assert_eq!(back, s);
    }
}
