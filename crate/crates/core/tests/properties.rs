//! Randomized properties driven by proptest seeds.

use proptest::prelude::*;

use ifas::factor::{factorize, HyperoctahedralGroup};
use ifas::morphism::compose;
use ifas::random::{self, case_rng};
use ifas::spans::{compose_spans, QFlavor};

fn flavor() -> impl Strategy<Value = QFlavor> {
    prop::sample::select(QFlavor::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn factorisation_recomposes(seed in any::<u64>(), n in 0usize..7, m in 1usize..6) {
        let f = random::ifas(&mut case_rng(seed, 0), n, m);
        let (phi, g) = factorize(&f);
        prop_assert_eq!(compose(phi.as_mor(), g.as_mor()).unwrap(), f);
    }

    #[test]
    fn composition_is_associative(seed in any::<u64>(), a in 0usize..5, b in 1usize..5, c in 1usize..5, d in 1usize..5) {
        let mut rng = case_rng(seed, 1);
        let f = random::ifas(&mut rng, a, b);
        let g = random::ifas(&mut rng, b, c);
        let h = random::ifas(&mut rng, c, d);
        prop_assert_eq!(
            compose(&h, &compose(&g, &f).unwrap()).unwrap(),
            compose(&compose(&h, &g).unwrap(), &f).unwrap()
        );
    }

    #[test]
    fn canonical_form_ignores_relabeling(seed in any::<u64>(), flavor in flavor(), src in 1usize..3, tgt in 1usize..3) {
        let mut rng = case_rng(seed, 2);
        let s = random::span(&mut rng, flavor, src, tgt, 4);
        let h = random::signed_permutation(&mut rng, s.apex());
        let moved = s.relabel(&h).unwrap();
        prop_assert_eq!(moved.canonicalize(), s.clone());
        prop_assert!(s.is_canonical());
    }

    #[test]
    fn span_composition_is_associative(seed in any::<u64>(), flavor in flavor()) {
        let mut rng = case_rng(seed, 3);
        let o: Vec<usize> = (0..4).map(|_| random::size(&mut rng, 3)).collect();
        let a = random::span(&mut rng, flavor, o[0], o[1], 3);
        let b = random::span(&mut rng, flavor, o[1], o[2], 3);
        let c = random::span(&mut rng, flavor, o[2], o[3], 3);
        prop_assert_eq!(
            compose_spans(&c, &compose_spans(&b, &a).unwrap()).unwrap(),
            compose_spans(&compose_spans(&c, &b).unwrap(), &a).unwrap()
        );
    }

    #[test]
    fn text_round_trip(seed in any::<u64>(), n in 0usize..6, m in 1usize..5) {
        let f: ifas::Morphism = random::ifas(&mut case_rng(seed, 4), n, m).into();
        prop_assert_eq!(ifas::dsl::parse_morphism(&f.to_string()).unwrap(), f);
    }
}

#[test]
fn hyperoctahedral_orders() {
    for (n, order) in [(0, 1), (1, 2), (2, 8), (3, 48), (4, 384)] {
        let h = HyperoctahedralGroup::new(n).unwrap();
        assert_eq!(h.order(), order);
        assert_eq!(h.elements().len() as u128, order);
    }
}
