//! Text and JSON round trips.

use ifas::dsl::{parse, Expr};
use ifas::enumerate::enumerate_hom;
use ifas::json::{morphism_from_json, span_from_json, to_json};
use ifas::spans::{QFlavor, Span};
use ifas::Kind;

#[test]
fn every_small_morphism_round_trips() {
    for kind in [Kind::Ifas, Kind::If] {
        for n in 0..=3 {
            for m in 0..=3 {
                for f in enumerate_hom(n, m, kind).unwrap() {
                    let text = f.to_string();
                    assert_eq!(parse(&text).unwrap(), Expr::Morphism(f.clone()));
                    assert_eq!(parse(&text).unwrap().to_string(), text);
                    assert_eq!(morphism_from_json(&to_json(&f)).unwrap(), f);
                }
            }
        }
    }
}

#[test]
fn every_small_span_round_trips() {
    for flavor in QFlavor::ALL {
        for apex in 0..=3 {
            for src in 0..=2 {
                for tgt in 0..=2 {
                    let lefts = enumerate_hom(apex, src, flavor.comonoid()).unwrap();
                    let rights = enumerate_hom(apex, tgt, flavor.monoid()).unwrap();
                    // every left leg against a spread of right legs keeps this quick
                    for (k, l) in lefts.iter().enumerate() {
                        for r in rights.iter().skip(k % 7).step_by(7) {
                            let s = Span::representative(flavor, l.clone(), r.clone()).unwrap();
                            let text = s.to_string();
                            assert_eq!(parse(&text).unwrap(), Expr::Span(s.clone()));
                            assert_eq!(parse(&text).unwrap().to_string(), text);
                            assert_eq!(span_from_json(&to_json(&s)).unwrap(), s);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn whitespace_is_insignificant() {
    let a = parse("ifas 5 -> 4 { 1:[2+], 2:[1-], 3:[4- 5+], 4:[3-] }").unwrap();
    let b = parse("ifas 5->4{1:[2+],2:[1-],3:[4-5+],4:[3-]}").unwrap();
    let c = parse("  ifas 5\n->\t4 {1 : [ 2 + ] ,2:[1 -],3:[4- 5+],4:[3-]}  ").unwrap();
    assert_eq!(a, b);
    assert_eq!(a, c);
}
