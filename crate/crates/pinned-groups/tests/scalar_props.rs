use pinned_groups::{Level, Scalar};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Scalar> {
    (-200i64..200, 1i64..200).prop_map(|(n, d)| Scalar::from_ratio(n, d))
}

fn quad() -> impl Strategy<Value = Scalar> {
    (rat(), rat(), 0usize..3).prop_map(|(p, q, k)| {
        let d = [2, 3, 5][k];
        p.add(&q.mul(&Scalar::from_i64(d).sqrt().unwrap()))
    })
}

proptest! {
    #[test]
    fn field_laws_in_one_extension(a in quad(), b in quad(), c in quad()) {
        let l = a.mul(&b.add(&c));
        let r = a.mul(&b).add(&a.mul(&c));
        prop_assert!(l.equals(&r).unwrap());
        if !b.is_exact_zero() {
            let q = a.div(&b).unwrap();
            prop_assert!(q.mul(&b).equals(&a).unwrap());
        }
    }

    #[test]
    fn sqrt_squares_back(n in 1i64..10_000, d in 1i64..10_000) {
        let x = Scalar::from_ratio(n, d);
        let r = x.sqrt().unwrap();
        prop_assert!(r.level() <= Level::Quadratic);
        prop_assert_eq!(r.mul(&r), x);
        prop_assert!(r.is_positive().unwrap());
    }

    #[test]
    fn comparisons_match_floats(a in quad(), b in quad()) {
        let (fa, fb) = (a.to_f64(), b.to_f64());
        if (fa - fb).abs() > 1e-9 {
            let o = a.compare(&b).unwrap();
            prop_assert_eq!(o, fa.partial_cmp(&fb).unwrap());
        }
    }
}
