//! Independent oracles for composition, factorisation and span composition.

use ifas::check::{all_spans, brute_equivalent};
use ifas::enumerate::enumerate_hom;
use ifas::factor::{distribute, factorize, OrderPreserving, SignedPermutation};
use ifas::models::{eval_monoid, GroupAlgebra, GroupModel, InvWord, Ring};
use ifas::morphism::{compose, inv, mult, to_if, IfasMor};
use ifas::spans::{compose_spans, QFlavor, Span};
use ifas::{Entry, Fiber, Kind, Label, Morphism};

/// Reads a morphism back from its values on the generators: fiber `i` lists
/// the letters of output word `i`, a starred letter carrying label t.
fn decode(dom: usize, words: &[InvWord]) -> IfasMor {
    let fibers = words
        .iter()
        .map(|w| {
            Fiber(
                w.letters()
                    .iter()
                    .map(|l| Entry::new(l.gen as usize, if l.starred { Label::T } else { Label::One }))
                    .collect(),
            )
        })
        .collect();
    IfasMor::new(dom, fibers).unwrap()
}

fn generators(n: usize) -> Vec<InvWord> {
    (0..n as u32).map(InvWord::generator).collect()
}

fn ifas_homs(n: usize, m: usize) -> Vec<IfasMor> {
    enumerate_hom(n, m, Kind::Ifas)
        .unwrap()
        .into_iter()
        .map(|f| f.as_ifas().unwrap().clone())
        .collect()
}

#[test]
fn generic_words_determine_morphisms() {
    for n in 0..=3 {
        for m in 0..=3 {
            for f in ifas_homs(n, m) {
                assert_eq!(decode(n, &eval_monoid(&f, &generators(n)).unwrap()), f);
            }
        }
    }
}

#[test]
fn composition_matches_the_free_model() {
    for a in 0..=2 {
        for b in 0..=2 {
            for c in 0..=2 {
                for f in ifas_homs(a, b) {
                    let fw = eval_monoid(&f, &generators(a)).unwrap();
                    for g in ifas_homs(b, c) {
                        let want = decode(a, &eval_monoid(&g, &fw).unwrap());
                        assert_eq!(compose(&g, &f).unwrap(), want, "{g} after {f}");
                    }
                }
            }
        }
    }
}

#[test]
fn composition_examples() {
    let p = |s: &str| ifas::dsl::parse_morphism(s).unwrap();
    // constant 2 -> 1 after 1 -> 2 with image 2: image (2, 2)
    let f = IfasMor::from_lists(2, &[&[(0, Label::One), (1, Label::One)]]).unwrap();
    let g = IfasMor::from_lists(1, &[&[], &[(0, Label::One)]]).unwrap();
    assert_eq!(compose(&g, &f).unwrap().image(), vec![1, 1]);
    assert_eq!(compose(&inv(), &inv()).unwrap(), IfasMor::identity(1));
    assert_eq!(Morphism::from(compose(&inv(), &mult()).unwrap()), p("ifas 2 -> 1 { 1:[2- 1-] }"));
    assert_eq!(IfasMor::symmetry(2, 1).after(&IfasMor::symmetry(1, 2)).unwrap(), IfasMor::identity(3));
}

#[test]
fn forgetting_order_is_functorial() {
    for a in 0..=2 {
        for b in 0..=2 {
            for c in 0..=2 {
                for f in ifas_homs(a, b) {
                    for g in ifas_homs(b, c) {
                        let lhs = to_if(&compose(&g, &f).unwrap());
                        assert_eq!(lhs, to_if(&g).after(&to_if(&f)).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn factorisation_by_search() {
    // the factorisation is the only (order-preserving, signed permutation) pair
    for n in 0..=2 {
        for m in 0..=2 {
            let homs = ifas_homs(n, m);
            let phis: Vec<_> = homs.iter().filter(|f| f.is_order_preserving()).collect();
            let gs: Vec<_> = ifas_homs(n, n).into_iter().filter(|g| g.is_bijection()).collect();
            for f in &homs {
                let found: Vec<_> = phis
                    .iter()
                    .flat_map(|phi| gs.iter().map(move |g| (*phi, g)))
                    .filter(|(phi, g)| compose(phi, g).unwrap() == *f)
                    .collect();
                assert_eq!(found.len(), 1, "{f}");
                let (phi, g) = factorize(f);
                assert_eq!((phi.as_mor(), g.as_mor()), (found[0].0, found[0].1));
            }
        }
    }
}

#[test]
fn distributing_the_involution_over_multiplication() {
    let g = SignedPermutation::new(inv()).unwrap();
    let phi = OrderPreserving::new(mult()).unwrap();
    let (phi2, g2) = distribute(&g, &phi).unwrap();
    assert_eq!(phi2.as_mor(), &mult());
    let swap = IfasMor::from_lists(2, &[&[(1, Label::T)], &[(0, Label::T)]]).unwrap();
    assert_eq!(g2.as_mor(), &swap);
}

#[test]
fn span_composition_against_the_group_model() {
    // composition is what the group bialgebra sees, on every composable pair
    // of small Q spans
    let alg = GroupAlgebra::new(GroupModel::s3(), Ring::default());
    let spans = all_spans(QFlavor::Q, 2, 2).unwrap();
    for a in &spans {
        let ea = alg.eval_span(a).unwrap();
        for b in spans.iter().filter(|b| b.src() == a.tgt()) {
            let lhs = alg.eval_span(&compose_spans(b, a).unwrap()).unwrap();
            assert_eq!(lhs, alg.eval_span(b).unwrap().after(&ea).unwrap(), "{b} after {a}");
        }
    }
}

#[test]
fn labels_on_the_apex_are_not_invariants() {
    // j on the comonoid side and on the monoid side are the same span
    let i: Morphism = inv().into();
    let id: Morphism = IfasMor::identity(1).into();
    let a = Span::new(QFlavor::Q, id.clone(), i.clone()).unwrap();
    let b = Span::new(QFlavor::Q, i, id).unwrap();
    assert_eq!(a, b);
    assert!(brute_equivalent(&a, &b));
}

#[test]
fn canonical_forms_against_brute_force() {
    for flavor in QFlavor::ALL {
        let spans = all_spans(flavor, 1, 3).unwrap();
        for (k, a) in spans.iter().enumerate() {
            for b in &spans[k + 1..] {
                assert!(!brute_equivalent(a, b), "{a} ~ {b}");
            }
        }
    }
}
