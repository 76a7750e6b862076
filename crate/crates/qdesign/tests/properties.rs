//! Property-based invariants of the polynomial layer.

use proptest::prelude::*;

use qdesign::qpoly::{cyclotomic, factor_cyclotomic, QPolynomial};

fn small_poly() -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(-9i64..=9, 0..8).prop_map(QPolynomial::from_coeffs)
}

/// A random product of a q-power and cyclotomic polynomials.
fn cyclotomic_product() -> impl Strategy<Value = QPolynomial> {
    (
        0usize..6,
        prop::collection::vec((1u32..=12, 1u32..=2), 0..4),
    )
        .prop_map(|(qpow, phis)| {
            let mut acc = QPolynomial::q_power(qpow);
            for (d, mult) in phis {
                for _ in 0..mult {
                    acc = &acc * &cyclotomic(d);
                }
            }
            acc
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn factorization_round_trips(p in cyclotomic_product()) {
        let f = factor_cyclotomic(&p).unwrap();
        prop_assert_eq!(f.expand(), p);
        // pure cyclotomic products leave no cofactor
        prop_assert!(f.cofactor.is_one());
    }
}

proptest! {
    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        let product = &a * &b;
        prop_assert_eq!(product.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn rendering_parses_back(a in small_poly()) {
        let text = a.render_expanded();
        prop_assert_eq!(QPolynomial::parse(&text).unwrap(), a);
    }

    #[test]
    fn factor_round_trips_on_arbitrary_polynomials(a in small_poly()) {
        prop_assume!(!a.is_zero());
        let f = factor_cyclotomic(&a).unwrap();
        prop_assert_eq!(f.expand(), a);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in small_poly(), b in small_poly(), q0 in 1u64..6) {
        let q = num_bigint::BigInt::from(q0);
        prop_assert_eq!((&a + &b).eval(&q), a.eval(&q) + b.eval(&q));
        prop_assert_eq!((&a * &b).eval(&q), a.eval(&q) * b.eval(&q));
    }
}
