//! Property tests for the algebraic laws of the engine.

use proptest::prelude::*;
use sigma_core::algebra::{fuse_singletons, generated_space};
use sigma_core::pairs::{cartesian_product, pair, unpair};
use sigma_core::{Element, SigmaSet, StarResult};

/// Arbitrary elements over a small atom pool, nested up to two levels deep.
/// Built through the canonical constructor, so every generated value is a
/// legal σ-set.
fn arb_element() -> impl Strategy<Value = Element> {
    let atom = prop_oneof![
        prop::sample::select(vec!["1", "2", "3"]).prop_map(Element::plain),
        prop::sample::select(vec!["1", "2", "3"]).prop_map(Element::starred),
        Just(Element::theta("t")),
    ];
    atom.prop_recursive(2, 12, 4, |inner| {
        prop::collection::vec(inner, 0..4).prop_filter_map("exclusion violation", |members| {
            SigmaSet::new(members).ok().map(Element::Set)
        })
    })
}

fn arb_set() -> impl Strategy<Value = SigmaSet> {
    prop::collection::vec(arb_element(), 0..5)
        .prop_filter_map("exclusion violation", |members| SigmaSet::new(members).ok())
}

proptest! {
    #[test]
    fn make_set_is_permutation_invariant(mut members in prop::collection::vec(arb_element(), 0..5)) {
        let forward = SigmaSet::new(members.clone());
        members.reverse();
        let backward = SigmaSet::new(members);
        match (forward, backward) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "permutation changed constructibility"),
        }
    }

    #[test]
    fn fusion_commutes(a in arb_set(), b in arb_set()) {
        prop_assert_eq!(a.fuse(&b), b.fuse(&a));
    }

    #[test]
    fn fusion_identity_and_idempotence(a in arb_set()) {
        prop_assert_eq!(a.fuse(&SigmaSet::empty()), a.clone());
        prop_assert_eq!(a.fuse(&a), a.clone());
    }

    #[test]
    fn fusion_preserves_exclusion(a in arb_set(), b in arb_set()) {
        prop_assert!(a.fuse(&b).is_exclusion_clean());
    }

    #[test]
    fn fusion_of_singletons_matches_singleton_fusion(x in arb_element(), y in arb_element()) {
        let lhs = fuse_singletons(&x, &y);
        let rhs = SigmaSet::singleton(x).fuse(&SigmaSet::singleton(y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn star_is_an_involution(e in arb_element()) {
        if let StarResult::Defined(starred) = e.star() {
            prop_assert_eq!(starred.depth(), e.depth());
            prop_assert_eq!(starred.star(), StarResult::Defined(e));
        }
    }

    #[test]
    fn star_blocks_exactly_on_theta(e in arb_element()) {
        fn has_theta(e: &Element) -> bool {
            match e {
                Element::Atom(_) => sigma_core::is_theta_atom(e),
                Element::Set(s) => s.iter().any(has_theta),
            }
        }
        prop_assert_eq!(e.star().is_defined(), !has_theta(&e));
    }

    #[test]
    fn antiset_annihilates_when_defined(a in arb_set()) {
        if let Ok(anti) = a.antiset() {
            prop_assert_eq!(a.fuse(&anti), SigmaSet::empty());
            prop_assert_eq!(anti.antiset().unwrap(), a);
        }
    }

    #[test]
    fn pair_round_trip(x in arb_element(), y in arb_element()) {
        let p = pair(&x, &y);
        let decoded = unpair(p.encoding()).unwrap();
        prop_assert_eq!(decoded.components(), (&x, &y));
    }

    #[test]
    fn power_set_counts_and_contains_subsets(a in arb_set()) {
        let power = a.power_set();
        prop_assert_eq!(power.cardinality(), 1 << a.cardinality());
        for s in power.iter() {
            prop_assert!(s.as_set().unwrap().subset_of(&a));
        }
    }

    #[test]
    fn power_set_members_never_annihilate(a in arb_set()) {
        for s in a.power_set().iter() {
            for t in a.power_set().iter() {
                prop_assert!(!fuse_singletons(s, t).is_empty());
            }
        }
    }

    #[test]
    fn product_cardinality_and_containment(
        a in prop::collection::vec(arb_element(), 0..4),
        b in prop::collection::vec(arb_element(), 0..4),
    ) {
        let (Ok(a), Ok(b)) = (SigmaSet::new(a), SigmaSet::new(b)) else { return Ok(()) };
        let product = cartesian_product(&a, &b);
        prop_assert_eq!(product.cardinality(), a.cardinality() * b.cardinality());
        let space = generated_space(&a, &b);
        for enc in product.iter() {
            prop_assert!(enc.as_set().unwrap().subset_of(&space));
        }
    }
}
