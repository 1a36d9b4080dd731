mod common;

use std::cmp::Ordering;

use common::random::{build, raw_poly, RawPoly};
use fsplit::{Monomial, MonomialOrder, Polynomial, RingContext};
use proptest::prelude::*;

fn ring_and_pair() -> impl Strategy<Value = (u64, usize, RawPoly, RawPoly)> {
    (prop::sample::select(vec![2u64, 3, 5, 7]), 1usize..=5).prop_flat_map(|(p, n)| {
        (Just(p), Just(n), raw_poly(n, 8, 4), raw_poly(n, 8, 4))
    })
}

fn orders(n: usize) -> Vec<MonomialOrder> {
    let mut v = vec![MonomialOrder::DegRevLex, MonomialOrder::Lex];
    v.extend((1..n).map(MonomialOrder::Elimination));
    v
}

fn monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..5, n).prop_map(|e| Monomial::from_exponents(&e))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn q_power_is_additive((p, n, a, b) in ring_and_pair()) {
        let ring = RingContext::standard(p, n).unwrap();
        let (f, g) = (build(&ring, &a), build(&ring, &b));
        for q in [p, p * p] {
            let lhs = (&f + &g).frobenius_power(q).unwrap();
            let rhs = &f.frobenius_power(q).unwrap() + &g.frobenius_power(q).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn q_power_is_iterated_multiplication((p, n, a, _b) in ring_and_pair()) {
        let ring = RingContext::standard(p, n).unwrap();
        let f = build(&ring, &a);
        let mut q = p;
        while q <= 9 {
            let mut acc = f.clone();
            for _ in 1..q {
                acc = acc.mul(&f).unwrap();
            }
            prop_assert_eq!(f.frobenius_power(q).unwrap(), acc);
            q *= p;
        }
    }

    #[test]
    fn canonical_form_is_idempotent((p, n, a, b) in ring_and_pair()) {
        let ring = RingContext::standard(p, n).unwrap();
        let (f, g) = (build(&ring, &a), build(&ring, &b));
        for h in [&f + &g, f.mul(&g).unwrap(), &f - &g, f.monic()] {
            let again = Polynomial::from_terms(&ring, h.terms().iter().cloned());
            prop_assert_eq!(&again, &h);
            prop_assert_eq!(Polynomial::parse(&ring, &h.to_string()).unwrap(), h);
        }
    }

    #[test]
    fn orders_are_monomial_orders(
        (n, a, b, c) in (1usize..=5).prop_flat_map(|n| (Just(n), monomial(n), monomial(n), monomial(n)))
    ) {
        let one = Monomial::one(n);
        for order in orders(n) {
            let ab = order.compare(&a, &b);
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(ab.reverse(), order.compare(&b, &a));
            let ac = a.mul(&c).unwrap();
            let bc = b.mul(&c).unwrap();
            prop_assert_eq!(order.compare(&ac, &bc), ab);
            prop_assert!(order.compare(&one, &a) != Ordering::Greater);
            // transitivity against the third monomial
            if ab != Ordering::Greater && order.compare(&b, &c) != Ordering::Greater {
                prop_assert!(order.compare(&a, &c) != Ordering::Greater);
            }
        }
    }
}
