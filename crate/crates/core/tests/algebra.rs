mod common;

use homorder::algebra::{injections, product, projections, sum, top};
use homorder::hom::exists;
use homorder::{Signature, Structure};
use proptest::prelude::*;

fn le(a: &Structure, b: &Structure) -> bool {
    exists(a, b).unwrap()
}

proptest! {
    #[test]
    fn sum_is_a_join(a in common::digraph(3), b in common::digraph(3), c in common::digraph(3)) {
        let s = sum(&a, &b).unwrap();
        let (ia, ib) = injections(&a, &b);
        prop_assert!(ia.is_homomorphism(&a, &s) && ib.is_homomorphism(&b, &s));
        prop_assert_eq!(le(&s, &c), le(&a, &c) && le(&b, &c));
    }

    #[test]
    fn product_is_a_meet(a in common::digraph(3), b in common::digraph(3), c in common::digraph(3)) {
        let p = product(&a, &b).unwrap();
        let (pa, pb) = projections(&a, &b);
        prop_assert!(pa.is_homomorphism(&p, &a) && pb.is_homomorphism(&p, &b));
        prop_assert_eq!(le(&c, &p), le(&c, &a) && le(&c, &b));
    }

    #[test]
    fn top_is_the_maximum(a in common::digraph(4)) {
        prop_assert!(le(&a, &top(&Signature::digraph())));
    }
}
