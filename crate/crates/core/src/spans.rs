//! Morphisms of the composite PROPs Q, QV, QH and QIF as spans
//! `src <-left- apex -right-> tgt`.
//!
//! The left leg carries the comonoid side, the right leg the monoid side. Two
//! spans are equivalent when they differ by a bijection `h` of the apex in the
//! leg category (a signed permutation): `(left • h, right • h)`. Because `h` can
//! flip the label of any apex element on both legs at once, only the product of
//! the two labels at each apex element is an invariant.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::doublecat::{complete_star, Flavor};
use crate::factor::SignedPermutation;
use crate::morphism::{Kind, Morphism};
use crate::{Error, Label, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QFlavor {
    Q,
    #[serde(rename = "QV")]
    Qv,
    #[serde(rename = "QH")]
    Qh,
    #[serde(rename = "QIF")]
    Qif,
}

impl QFlavor {
    pub const ALL: [QFlavor; 4] = [QFlavor::Q, QFlavor::Qv, QFlavor::Qh, QFlavor::Qif];

    /// Kind of the right (monoid) leg.
    pub fn monoid(self) -> Kind {
        match self {
            QFlavor::Q | QFlavor::Qh => Kind::Ifas,
            QFlavor::Qv | QFlavor::Qif => Kind::If,
        }
    }

    /// Kind of the left (comonoid) leg.
    pub fn comonoid(self) -> Kind {
        match self {
            QFlavor::Q | QFlavor::Qv => Kind::Ifas,
            QFlavor::Qh | QFlavor::Qif => Kind::If,
        }
    }

    /// The double category whose star completions compose these spans.
    pub fn double(self) -> Flavor {
        Flavor::from_kinds(self.monoid(), self.comonoid())
    }

    pub fn from_kinds(comonoid: Kind, monoid: Kind) -> QFlavor {
        match (comonoid, monoid) {
            (Kind::Ifas, Kind::Ifas) => QFlavor::Q,
            (Kind::Ifas, Kind::If) => QFlavor::Qv,
            (Kind::If, Kind::Ifas) => QFlavor::Qh,
            (Kind::If, Kind::If) => QFlavor::Qif,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            QFlavor::Q => "Q",
            QFlavor::Qv => "QV",
            QFlavor::Qh => "QH",
            QFlavor::Qif => "QIF",
        }
    }
}

impl fmt::Display for QFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for QFlavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<QFlavor> {
        QFlavor::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::FlavorMismatch(format!("unknown span flavor {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Span {
    flavor: QFlavor,
    left: Morphism,
    right: Morphism,
}

impl Span {
    /// Builds the canonical representative of the class of `(left, right)`.
    pub fn new(flavor: QFlavor, left: Morphism, right: Morphism) -> Result<Span> {
        Ok(Span::representative(flavor, left, right)?.canonicalize())
    }

    /// Builds the span as given, without canonicalising.
    pub fn representative(flavor: QFlavor, left: Morphism, right: Morphism) -> Result<Span> {
        if left.kind() != flavor.comonoid() || right.kind() != flavor.monoid() {
            return Err(Error::FlavorMismatch(format!(
                "{flavor} spans need a {} left leg and a {} right leg, found {} and {}",
                flavor.comonoid(),
                flavor.monoid(),
                left.kind(),
                right.kind()
            )));
        }
        if left.dom() != right.dom() {
            return Err(Error::ObjectMismatch {
                expected: left.dom(),
                found: right.dom(),
            });
        }
        Ok(Span {
            flavor,
            left,
            right,
        })
    }

    pub fn identity(flavor: QFlavor, n: usize) -> Span {
        Span {
            flavor,
            left: Morphism::identity(flavor.comonoid(), n),
            right: Morphism::identity(flavor.monoid(), n),
        }
    }

    pub fn flavor(&self) -> QFlavor {
        self.flavor
    }

    pub fn src(&self) -> usize {
        self.left.cod()
    }

    pub fn tgt(&self) -> usize {
        self.right.cod()
    }

    pub fn apex(&self) -> usize {
        self.left.dom()
    }

    pub fn left(&self) -> &Morphism {
        &self.left
    }

    pub fn right(&self) -> &Morphism {
        &self.right
    }

    /// `(left • h, right • h)`.
    pub fn relabel(&self, h: &SignedPermutation) -> Result<Span> {
        let hl = Morphism::from(h.as_mor().clone()).coerce(self.flavor.comonoid())?;
        let hr = Morphism::from(h.as_mor().clone()).coerce(self.flavor.monoid())?;
        Span::representative(self.flavor, self.left.after(&hl)?, self.right.after(&hr)?)
    }

    /// The canonical representative of this span's class.
    ///
    /// Labels are first moved off the left leg, which leaves one label per apex
    /// element (the product). The apex is then renumbered in increasing order of
    /// a key that separates apex elements unless they are interchangeable.
    pub fn canonicalize(&self) -> Span {
        let signs = self.left.labels();
        let left = self.left.twist_domain(&signs);
        let right = self.right.twist_domain(&signs);

        let ll = left.locate();
        let rl = right.locate();
        let key = |z: usize| -> (usize, usize, usize, Label) {
            match (self.flavor.comonoid(), self.flavor.monoid()) {
                (Kind::Ifas, _) => (ll[z].target, ll[z].pos, 0, Label::One),
                (Kind::If, Kind::Ifas) => (rl[z].target, rl[z].pos, 0, Label::One),
                (Kind::If, Kind::If) => (ll[z].target, rl[z].target, 0, rl[z].label),
            }
        };
        let mut order: Vec<usize> = (0..self.apex()).collect();
        order.sort_by_key(|&z| key(z));
        let mut new_of_old = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_of_old[old] = new;
        }
        Span {
            flavor: self.flavor,
            left: left.rename_domain(&new_of_old),
            right: right.rename_domain(&new_of_old),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.canonicalize() == *self
    }
}

/// `canonicalize(s)`.
pub fn canonicalize(s: &Span) -> Span {
    s.canonicalize()
}

pub fn spans_equivalent(s1: &Span, s2: &Span) -> bool {
    s1.flavor == s2.flavor
        && s1.src() == s2.src()
        && s1.tgt() == s2.tgt()
        && s1.apex() == s2.apex()
        && s1.canonicalize() == s2.canonicalize()
}

/// `s2 ∘ s1` via the star completion of `s1.right` against `s2.left`.
pub fn compose_spans(s2: &Span, s1: &Span) -> Result<Span> {
    if s1.flavor != s2.flavor {
        return Err(Error::FlavorMismatch(format!(
            "cannot compose {} with {}",
            s2.flavor, s1.flavor
        )));
    }
    if s1.tgt() != s2.src() {
        return Err(Error::ObjectMismatch {
            expected: s2.src(),
            found: s1.tgt(),
        });
    }
    let b = complete_star(&s1.right, &s2.left, s1.flavor.double())?;
    let left = s1.left.after(&b.left)?;
    let right = s2.right.after(&b.top)?;
    Ok(Span {
        flavor: s1.flavor,
        left,
        right,
    }
    .canonicalize())
}

/// `(n <-id- n -f-> m)`.
pub fn inject_monoid(flavor: QFlavor, f: &Morphism) -> Result<Span> {
    let f = f.coerce(flavor.monoid())?;
    Span::new(flavor, Morphism::identity(flavor.comonoid(), f.dom()), f)
}

/// `(n <-phi- m -id-> m)` for `phi: m -> n`.
pub fn inject_comonoid(flavor: QFlavor, phi: &Morphism) -> Result<Span> {
    let phi = phi.coerce(flavor.comonoid())?;
    let n = phi.dom();
    Span::new(flavor, phi, Morphism::identity(flavor.monoid(), n))
}

pub fn tensor_spans(a: &Span, b: &Span) -> Result<Span> {
    if a.flavor != b.flavor {
        return Err(Error::FlavorMismatch("tensor of different flavors".into()));
    }
    Span::new(a.flavor, a.left.tensor(&b.left)?, a.right.tensor(&b.right)?)
}

/// The block swap `n + m -> m + n` on the monoid side.
pub fn symmetry_span(flavor: QFlavor, n: usize, m: usize) -> Span {
    inject_monoid(flavor, &Morphism::symmetry(flavor.monoid(), n, m)).expect("kinds match")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::HyperoctahedralGroup;
    use crate::morphism::{inv, mult, IfasMor};
    use Label::{One, T};

    fn q(left: IfasMor, right: IfasMor) -> Span {
        Span::new(QFlavor::Q, left.into(), right.into()).unwrap()
    }

    #[test]
    fn identity_is_canonical() {
        for flavor in QFlavor::ALL {
            for n in 0..=3 {
                let id = Span::identity(flavor, n);
                assert_eq!(id.canonicalize(), id);
            }
        }
    }

    #[test]
    fn involution_on_either_leg_is_the_same_class() {
        // relabelling the apex by i itself carries one onto the other
        let a = q(IfasMor::identity(1), inv());
        let b = q(inv(), IfasMor::identity(1));
        assert!(spans_equivalent(&a, &b));
        assert_eq!(a, b);
    }

    #[test]
    fn relabelling_is_invisible() {
        let s = Span::representative(
            QFlavor::Q,
            IfasMor::from_lists(3, &[&[(2, T), (0, One)], &[(1, T)]])
                .unwrap()
                .into(),
            IfasMor::from_lists(3, &[&[(1, One), (2, T), (0, T)]])
                .unwrap()
                .into(),
        )
        .unwrap();
        for h in HyperoctahedralGroup::new(3).unwrap().elements() {
            let t = s.relabel(&h).unwrap();
            assert!(spans_equivalent(&s, &t));
            assert_eq!(t.canonicalize(), s.canonicalize());
        }
    }

    #[test]
    fn different_apex_never_equivalent() {
        let a = Span::identity(QFlavor::Q, 1);
        let b = q(mult(), mult());
        let c = compose_spans(&inject_monoid(QFlavor::Q, &mult().into()).unwrap(), &a);
        assert!(!spans_equivalent(&a, &b));
        assert!(c.is_err());
    }

    #[test]
    fn composition_examples() {
        let delta = inject_comonoid(QFlavor::Q, &mult().into()).unwrap();
        let j = inject_monoid(QFlavor::Q, &inv().into()).unwrap();
        let got = compose_spans(&delta, &j).unwrap();
        let want = q(
            IfasMor::from_lists(2, &[&[(1, One), (0, One)]]).unwrap(),
            inv().tensor(&inv()),
        );
        assert_eq!(got, want);

        assert_eq!(compose_spans(&j, &j).unwrap(), Span::identity(QFlavor::Q, 1));
        let id = Span::identity(QFlavor::Q, 1);
        assert_eq!(compose_spans(&id, &j).unwrap(), j);
        assert_eq!(compose_spans(&j, &id).unwrap(), j);
    }

    #[test]
    fn injections() {
        let id = inject_monoid(QFlavor::Q, &IfasMor::identity(2).into()).unwrap();
        assert_eq!(id, Span::identity(QFlavor::Q, 2));
        let m: Morphism = mult().into();
        let i: Morphism = inv().into();
        let im = i.after(&m).unwrap();
        assert_eq!(
            compose_spans(
                &inject_monoid(QFlavor::Q, &i).unwrap(),
                &inject_monoid(QFlavor::Q, &m).unwrap()
            )
            .unwrap(),
            inject_monoid(QFlavor::Q, &im).unwrap()
        );
        // (n <-phi- p -f-> m) = monoid(f) ∘ comonoid(phi)
        let direct = Span::new(QFlavor::Q, m.clone(), m.clone()).unwrap();
        assert_eq!(
            compose_spans(
                &inject_monoid(QFlavor::Q, &m).unwrap(),
                &inject_comonoid(QFlavor::Q, &m).unwrap()
            )
            .unwrap(),
            direct
        );
    }

    #[test]
    fn kind_errors() {
        let m: Morphism = mult().into();
        assert!(Span::new(QFlavor::Qif, m.clone(), m.clone()).is_err());
        assert!(inject_comonoid(QFlavor::Qh, &m).is_ok());
        let mi: Morphism = mult().to_if().into();
        assert!(inject_monoid(QFlavor::Q, &mi).is_err());
        assert!(
            compose_spans(&Span::identity(QFlavor::Q, 1), &Span::identity(QFlavor::Qv, 1))
                .is_err()
        );
    }

    #[test]
    fn flavor_tables() {
        assert_eq!(QFlavor::Q.double(), Flavor::Ifas2);
        assert_eq!(QFlavor::Qv.double(), Flavor::V);
        assert_eq!(QFlavor::Qh.double(), Flavor::H);
        assert_eq!(QFlavor::Qif.double(), Flavor::If2);
        for f in QFlavor::ALL {
            assert_eq!(QFlavor::from_kinds(f.comonoid(), f.monoid()), f);
            assert_eq!(f.name().parse::<QFlavor>().unwrap(), f);
        }
    }
}
