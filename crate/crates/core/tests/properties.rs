use hirano_core::inverse::{
    classify, drazin_finite, has_hirano, has_strongly_drazin, hirano, strongly_drazin,
    HiranoCertificate,
};
use hirano_core::lifting::lift_idempotent;
use hirano_core::ring::{char_poly, parse_element};
use hirano_core::{Element, RingSpec};
use proptest::prelude::*;

fn matrix_element() -> impl Strategy<Value = Element> {
    (2u64..=50, 1usize..=3).prop_flat_map(|(n, k)| {
        let ring = RingSpec::matrix(RingSpec::modular(n).unwrap(), k).unwrap();
        prop::collection::vec(0i64..n as i64, k * k).prop_map(move |v| ring.elem(&v).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn hirano_agrees_with_drazin(a in matrix_element()) {
        let d = drazin_finite(&a).unwrap();
        prop_assert_eq!(d.inverse.clone(), &(&d.inverse * &a) * &d.inverse);
        if has_hirano(&a) {
            let h = hirano(&a).unwrap();
            prop_assert!(h.is_valid());
            prop_assert_eq!(&h.inverse, &d.inverse);
        } else {
            prop_assert!(HiranoCertificate::certify(&a, &d.inverse).is_none());
        }
    }

    #[test]
    fn strongly_drazin_implies_hirano(a in matrix_element()) {
        if has_strongly_drazin(&a) {
            let s = strongly_drazin(&a).unwrap();
            prop_assert!(has_hirano(&a));
            prop_assert_eq!(s.inverse, hirano(&a).unwrap().inverse);
        }
    }

    #[test]
    fn lifted_idempotent_is_a_certified_polynomial(a in matrix_element()) {
        if has_hirano(&a) {
            let l = lift_idempotent(&(&a * &a)).unwrap();
            prop_assert!(l.idempotent.is_idempotent());
            prop_assert!(l.certificate.certifies(&l.idempotent));
            prop_assert!(l.idempotent.commutes_with(&a));
        }
    }

    #[test]
    fn cayley_hamilton(a in matrix_element()) {
        let p = char_poly(&a).unwrap();
        prop_assert!(p.eval(&a).is_zero());
    }

    #[test]
    fn reports_round_trip_through_text(a in matrix_element()) {
        let back = parse_element(&a.ring(), &a.to_string()).unwrap();
        prop_assert_eq!(&back, &a);
        let r = classify(&a).unwrap();
        prop_assert_eq!(r.has_drazin, Some(true));
        prop_assert!(!r.has_strongly_drazin || r.has_hirano);
    }
}
