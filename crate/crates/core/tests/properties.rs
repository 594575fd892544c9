use hurwitz_ga::canonical::{build_table, conjugate, norm, table_product, HurwitzClass};
use hurwitz_ga::ga::{Signature, COEFF_ORDER};
use hurwitz_ga::isomorphism::{biquaternion_decompose, biquaternion_recompose};
use hurwitz_ga::octonify::{bullet_product, octonion_conjugate, octonion_norm, BulletVariant};
use hurwitz_ga::{Multivector, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn signature() -> impl Strategy<Value = Signature> {
    prop::sample::select(Signature::all())
}

fn multivector(sig: Signature) -> impl Strategy<Value = Multivector> {
    prop::array::uniform8(rational()).prop_map(move |c| Multivector::from_even_first(sig, c))
}

fn pair() -> impl Strategy<Value = (Multivector, Multivector)> {
    signature().prop_flat_map(|s| (multivector(s), multivector(s)))
}

fn triple() -> impl Strategy<Value = (Multivector, Multivector, Multivector)> {
    signature().prop_flat_map(|s| (multivector(s), multivector(s), multivector(s)))
}

fn variant() -> impl Strategy<Value = BulletVariant> {
    prop::sample::select(BulletVariant::ALL.to_vec())
}

proptest! {
    #[test]
    fn geometric_product_is_associative((x, y, z) in triple()) {
        prop_assert_eq!(x.gp(&y).unwrap().gp(&z).unwrap(), x.gp(&y.gp(&z).unwrap()).unwrap());
    }

    #[test]
    fn reversion_reverses_products((x, y) in pair()) {
        prop_assert_eq!(x.gp(&y).unwrap().reversion(), y.reversion().gp(&x.reversion()).unwrap());
        prop_assert_eq!(x.gp(&y).unwrap().inversion(), x.inversion().gp(&y.inversion()).unwrap());
    }

    #[test]
    fn bullet_composition((x, y) in pair(), v in variant()) {
        let p = bullet_product(&x, &y, v).unwrap();
        prop_assert_eq!(octonion_norm(&p, v), octonion_norm(&x, v) * octonion_norm(&y, v));
    }

    #[test]
    fn bullet_alternative_and_flexible((x, y) in pair(), v in variant()) {
        let m = |a: &Multivector, b: &Multivector| bullet_product(a, b, v).unwrap();
        let xx = m(&x, &x);
        prop_assert_eq!(m(&x, &m(&x, &y)), m(&xx, &y));
        prop_assert_eq!(m(&m(&y, &x), &x), m(&y, &xx));
        prop_assert_eq!(m(&x, &m(&y, &x)), m(&m(&x, &y), &x));
    }

    #[test]
    fn bullet_conjugate_gives_norm(x in signature().prop_flat_map(multivector), v in variant()) {
        let p = bullet_product(&x, &octonion_conjugate(&x), v).unwrap();
        prop_assert_eq!(p, Multivector::scalar(x.signature(), octonion_norm(&x, v)));
        prop_assert_eq!(octonion_conjugate(&x), x.full_grade_inversion());
    }

    #[test]
    fn text_round_trip(x in signature().prop_flat_map(multivector)) {
        prop_assert_eq!(Multivector::parse(x.signature(), &x.to_string()).unwrap(), x);
    }

    #[test]
    fn json_round_trip(x in signature().prop_flat_map(multivector)) {
        let text = serde_json::to_string(&x).unwrap();
        let back: Multivector = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn coefficient_order_round_trip(x in signature().prop_flat_map(multivector)) {
        let xs = x.even_first_coeffs();
        for (c, b) in xs.iter().zip(COEFF_ORDER) {
            prop_assert_eq!(c, x.coeff(b));
        }
        prop_assert_eq!(Multivector::from_even_first(x.signature(), xs), x);
    }

    #[test]
    fn biquaternion_round_trip(x in signature().prop_flat_map(multivector)) {
        prop_assert_eq!(biquaternion_recompose(x.signature(), &biquaternion_decompose(&x)), x);
    }

    #[test]
    fn hurwitz_tables_compose(
        class in prop::sample::select(HurwitzClass::ALL.to_vec()),
        seed in prop::collection::vec(rational(), 16),
    ) {
        let t = build_table(class);
        let n = t.dim();
        let x = t.element(seed[..n].to_vec()).unwrap();
        let y = t.element(seed[8..8 + n].to_vec()).unwrap();
        let p = table_product(&x, &y).unwrap();
        prop_assert_eq!(norm(&p).unwrap(), norm(&x).unwrap() * norm(&y).unwrap());
        let lhs = conjugate(&p);
        let rhs = table_product(&conjugate(&y), &conjugate(&x)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }
}
