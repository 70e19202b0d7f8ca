use proptest::prelude::*;
use weylpoly::exactpoly::{int, rat, QPoly, QXPoly, Rational, XPoly};

fn xpoly() -> impl Strategy<Value = XPoly> {
    prop::collection::vec((-20i64..=20, 1i64..=6), 0..6)
        .prop_map(|c| XPoly::new(c.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

fn qxpoly() -> impl Strategy<Value = QXPoly> {
    prop::collection::vec(prop::collection::vec(-9i64..=9, 0..4), 0..5).prop_map(|rows| {
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        QXPoly::from_rows(&refs)
    })
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-7i64..=7, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #[test]
    fn ring_laws_x(a in xpoly(), b in xpoly(), c in xpoly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn ring_laws_qx(a in qxpoly(), b in qxpoly(), c in qxpoly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in xpoly(), b in xpoly()) {
        prop_assume!(!b.is_zero());
        let p = &a * &b;
        prop_assert_eq!(p.exact_div(&b).unwrap(), a.clone());
        let (quot, rem) = (&p + &XPoly::one()).div_rem(&b).unwrap();
        prop_assert_eq!(&(&quot * &b) + &rem, &p + &XPoly::one());
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
    }

    #[test]
    fn qx_exact_division(a in qxpoly(), b in qxpoly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn gcd_divides_both(a in xpoly(), b in xpoly(), c in xpoly()) {
        prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
        let f = &a * &c;
        let g = &b * &c;
        prop_assume!(!f.is_zero() || !g.is_zero());
        let d = f.gcd(&g).unwrap();
        prop_assert!(d.divides(&f) && d.divides(&g));
        prop_assert!(c.divides(&d));
    }

    #[test]
    fn eval_q_is_a_ring_map(a in qxpoly(), b in qxpoly(), q in small_rational(), x in small_rational()) {
        let lhs = (&a * &b).eval_q(&q);
        let rhs = &a.eval_q(&q) * &b.eval_q(&q);
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!((&a + &b).eval_q(&q).eval(&x), &a.eval_q(&q).eval(&x) + &b.eval_q(&q).eval(&x));
    }

    #[test]
    fn json_round_trip(a in xpoly(), b in qxpoly()) {
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<XPoly>(&text).unwrap(), a);
        let text = serde_json::to_string(&b).unwrap();
        prop_assert_eq!(serde_json::from_str::<QXPoly>(&text).unwrap(), b);
    }

    #[test]
    fn substitution_and_shift(a in xpoly(), k in 1usize..4, x in small_rational()) {
        let s = a.substitute_power(k);
        let xk = (0..k).fold(int(1), |acc, _| acc * &x);
        prop_assert_eq!(s.eval(&x), a.eval(&xk));
        prop_assert_eq!(a.mul_x_pow(k).div_x_pow(k).unwrap(), a);
    }
}

#[test]
fn one_plus_q_divides_seed_product() {
    let p = QPoly::product(&[(&[1, 1], 2), (&[0, 1], 1)]);
    assert_eq!(p.exact_div(&QPoly::one_plus_q()).unwrap(), QPoly::from_ints(&[0, 1, 1]));
    assert!(QPoly::from_ints(&[1, 0, 1]).exact_div(&QPoly::one_plus_q()).is_err());
}
