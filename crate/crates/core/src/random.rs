//! Seeded generators for morphisms, spans and group elements.
//!
//! Every randomized suite draws case `k` from `case_rng(seed, k)`, a ChaCha
//! stream of its own, so results do not depend on how cases are scheduled.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::factor::{OrderPreserving, SignedPermutation};
use crate::morphism::{Entry, Fiber, IfMor, IfasMor, Kind, Morphism};
use crate::spans::{QFlavor, Span};
use crate::Label;

pub type CaseRng = ChaCha8Rng;

pub fn case_rng(seed: u64, case: u64) -> CaseRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case);
    rng
}

pub fn label(rng: &mut impl Rng) -> Label {
    if rng.gen() {
        Label::T
    } else {
        Label::One
    }
}

/// A size in `0..=max`.
pub fn size(rng: &mut impl Rng, max: usize) -> usize {
    rng.gen_range(0..=max)
}

/// A source size for a map into `m`: anything up to `max`, or 0 when `m = 0`.
pub fn dom_for(rng: &mut impl Rng, m: usize, max: usize) -> usize {
    if m == 0 {
        0
    } else {
        size(rng, max)
    }
}

/// Uniform on `Hom_IFas(n, m)`: element `x` is inserted at one of the
/// `m + x` slots left by its predecessors, with a random label.
///
/// Panics if `m = 0 < n`.
pub fn ifas(rng: &mut impl Rng, n: usize, m: usize) -> IfasMor {
    assert!(m > 0 || n == 0, "no morphism {n} -> 0");
    let mut fibers = vec![Vec::new(); m];
    for x in 0..n {
        let mut slot = rng.gen_range(0..m + x);
        for fib in fibers.iter_mut() {
            if slot <= fib.len() {
                fib.insert(slot, Entry::new(x, label(rng)));
                break;
            }
            slot -= fib.len() + 1;
        }
    }
    IfasMor::new(n, fibers.into_iter().map(Fiber).collect()).expect("valid partition")
}

/// Uniform on `Hom_IF(n, m)`.
pub fn if_mor(rng: &mut impl Rng, n: usize, m: usize) -> IfMor {
    assert!(m > 0 || n == 0, "no morphism {n} -> 0");
    let assign = (0..n).map(|_| (rng.gen_range(0..m), label(rng))).collect();
    IfMor::new(m, assign).expect("targets in range")
}

pub fn morphism(rng: &mut impl Rng, kind: Kind, n: usize, m: usize) -> Morphism {
    match kind {
        Kind::Ifas => ifas(rng, n, m).into(),
        Kind::If => if_mor(rng, n, m).into(),
    }
}

pub fn signed_permutation(rng: &mut impl Rng, n: usize) -> SignedPermutation {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let signs: Vec<Label> = (0..n).map(|_| label(rng)).collect();
    SignedPermutation::from_parts(&perm, &signs).expect("a permutation")
}

/// A uniformly random order-preserving map `n -> m` (a weak composition).
pub fn order_preserving(rng: &mut impl Rng, n: usize, m: usize) -> OrderPreserving {
    assert!(m > 0 || n == 0, "no morphism {n} -> 0");
    let mut sizes = vec![0; m];
    // stars and bars: choose the positions of m - 1 bars among n + m - 1 slots
    let mut slots: Vec<bool> = vec![false; n + m.saturating_sub(1)];
    for i in rand::seq::index::sample(rng, slots.len(), m.saturating_sub(1)) {
        slots[i] = true;
    }
    let mut k = 0;
    for bar in slots {
        if bar {
            k += 1;
        } else {
            sizes[k] += 1;
        }
    }
    OrderPreserving::from_sizes(&sizes)
}

/// A random canonical span `src <- apex -> tgt` with `apex <= max_apex`.
pub fn span(rng: &mut impl Rng, flavor: QFlavor, src: usize, tgt: usize, max_apex: usize) -> Span {
    let apex = if src == 0 || tgt == 0 { 0 } else { size(rng, max_apex) };
    let left = morphism(rng, flavor.comonoid(), apex, src);
    let right = morphism(rng, flavor.monoid(), apex, tgt);
    Span::new(flavor, left, right).expect("legs share the apex")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::hom_count;
    use std::collections::HashMap;

    #[test]
    fn reproducible_streams() {
        let a: Vec<u32> = (0..4).map(|k| case_rng(9, k).gen()).collect();
        let b: Vec<u32> = (0..4).map(|k| case_rng(9, k).gen()).collect();
        assert_eq!(a, b);
        assert_ne!(a[0], a[1]);
    }

    #[test]
    fn ifas_is_uniform_on_a_small_hom_set() {
        let mut rng = case_rng(1, 0);
        let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
        let draws = 24_000;
        for _ in 0..draws {
            *seen.entry(ifas(&mut rng, 2, 2).encode()).or_default() += 1;
        }
        assert_eq!(seen.len() as u128, hom_count(2, 2, Kind::Ifas));
        assert!(seen.values().all(|&c| (800..1200).contains(&c)));
    }

    #[test]
    fn generators_respect_shapes() {
        let mut rng = case_rng(2, 0);
        for _ in 0..200 {
            let n = size(&mut rng, 4);
            let m = 1 + size(&mut rng, 3);
            assert_eq!(order_preserving(&mut rng, n, m).sizes().iter().sum::<usize>(), n);
            assert!(signed_permutation(&mut rng, n).as_mor().is_bijection());
            let f = if_mor(&mut rng, n, m);
            assert_eq!((f.dom(), f.cod()), (n, m));
        }
        assert_eq!(ifas(&mut rng, 0, 0), IfasMor::identity(0));
        let s = span(&mut rng, QFlavor::Q, 0, 2, 3);
        assert_eq!(s.apex(), 0);
    }
}
