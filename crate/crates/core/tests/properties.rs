use brauer_core::complexes::{build_cn, phi, phi_inverse};
use brauer_core::diagram::{double_factorial_odd, enumerate_diagrams, DEFAULT_ENUMERATION_BOUND as B};
use brauer_core::representations::{act_diagram, induced_basis};
use brauer_core::{AlgebraElement, BrauerDiagram, Ring};
use proptest::prelude::*;

fn diagram(n: usize, i: usize) -> BrauerDiagram {
    enumerate_diagrams(n, B).unwrap()[i].clone()
}

/// `n` together with `k` indices into the diagrams on `n` strands.
fn diagrams(k: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (1..=5usize).prop_flat_map(move |n| {
        let count = double_factorial_odd(n) as usize;
        (Just(n), proptest::collection::vec(0..count, k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn composition_associates_with_loops((n, ix) in diagrams(3)) {
        let (a, b, c) = (diagram(n, ix[0]), diagram(n, ix[1]), diagram(n, ix[2]));
        let ab = a.compose(&b).unwrap();
        let left = ab.diagram.compose(&c).unwrap();
        let bc = b.compose(&c).unwrap();
        let right = a.compose(&bc.diagram).unwrap();
        prop_assert_eq!(&left.diagram, &right.diagram);
        prop_assert_eq!(ab.loops + left.loops, bc.loops + right.loops);
    }

    #[test]
    fn flip_reverses_products((n, ix) in diagrams(2)) {
        let (a, b) = (diagram(n, ix[0]), diagram(n, ix[1]));
        let ab = a.compose(&b).unwrap();
        let ba = b.flip().compose(&a.flip()).unwrap();
        prop_assert_eq!(ab.diagram.flip(), ba.diagram);
        prop_assert_eq!(ab.loops, ba.loops);
        prop_assert_eq!(a.flip().flip(), a);
    }

    #[test]
    fn augmentation_is_multiplicative((n, ix) in diagrams(4), delta in -3i64..4, c in -5i64..6) {
        let ring = Ring::integers(delta);
        let x = AlgebraElement::basis(diagram(n, ix[0]), &ring)
            .add(&AlgebraElement::monomial(diagram(n, ix[1]), ring.from_int(c), &ring)).unwrap();
        let y = AlgebraElement::basis(diagram(n, ix[2]), &ring)
            .sub(&AlgebraElement::basis(diagram(n, ix[3]), &ring)).unwrap();
        let xy = x.mul(&y).unwrap();
        prop_assert_eq!(xy.augmentation(), ring.mul(&x.augmentation(), &y.augmentation()));
    }

    #[test]
    fn projection_splits_inclusion((n, ix) in diagrams(2)) {
        let ring = Ring::integers(2);
        let a = AlgebraElement::basis(diagram(n, ix[0]), &ring)
            .add(&AlgebraElement::basis(diagram(n, ix[1]), &ring)).unwrap();
        let p = a.pi();
        prop_assert!(p.is_symmetric());
        prop_assert_eq!(p.iota().unwrap().pi(), p.clone());
        prop_assert_eq!(p.augmentation(), a.augmentation());
    }

    #[test]
    fn embedding_respects_products((n, ix) in diagrams(2), extra in 0..2usize) {
        let (a, b) = (diagram(n, ix[0]), diagram(n, ix[1]));
        let big = n + extra;
        let small = a.compose(&b).unwrap();
        let large = a.embed(big).unwrap().compose(&b.embed(big).unwrap()).unwrap();
        prop_assert_eq!(small.diagram.embed(big).unwrap(), large.diagram);
        prop_assert_eq!(small.loops, large.loops);
    }

    #[test]
    fn module_action_is_associative((n, ix) in diagrams(2), m_seed in 0..6usize, v_seed in 0..10_000usize) {
        let m = m_seed % (n + 1);
        let basis = induced_basis(n, m, B).unwrap();
        let v = &basis[v_seed % basis.len()];
        let (a, b) = (diagram(n, ix[0]), diagram(n, ix[1]));
        let ab = a.compose(&b).unwrap();
        let direct = act_diagram(&ab.diagram, v).map(|(w, l)| (w, l + ab.loops));
        let staged = act_diagram(&b, v).and_then(|(w, l)| act_diagram(&a, &w).map(|(u, k)| (u, k + l)));
        prop_assert_eq!(direct, staged);
    }

    #[test]
    fn word_tuples_round_trip(n in 1..=5usize, p_seed in 0..100usize, seed in 0..100_000usize) {
        let c = build_cn(n, &Ring::integers(0), B).unwrap();
        let p = (p_seed % (n + 1)) as i64 - 1;
        let basis = c.basis(p);
        prop_assume!(!basis.is_empty());
        let b = &basis[seed % basis.len()];
        let t = phi(b);
        prop_assert_eq!(t.k(), b.left_pairs());
        prop_assert_eq!(&phi_inverse(n, &t).unwrap(), b);
    }
}
