//! Morphisms of IF(as) and IF.
//!
//! An [`IfasMor`] is a set map together with a totally ordered, `C2`-labelled
//! fiber over each codomain element. An [`IfMor`] keeps only the labels.
//! [`Morphism`] wraps either kind so that double categories and spans can mix
//! them.

use std::fmt;

use crate::finset::SetMap;
use crate::{Error, Label, Result};

/// A labelled domain element inside a fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Entry {
    pub elem: usize,
    pub label: Label,
}

impl Entry {
    pub fn new(elem: usize, label: Label) -> Self {
        Entry { elem, label }
    }
}

/// A labelled, totally ordered set of domain elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fiber(pub Vec<Entry>);

impl Fiber {
    pub fn new(entries: Vec<Entry>) -> Self {
        Fiber(entries)
    }

    pub fn entries(&self) -> &[Entry] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `C2` action: `t` reverses the order and multiplies every label by `t`.
    pub fn act(&self, a: Label) -> Fiber {
        match a {
            Label::One => self.clone(),
            Label::T => Fiber(
                self.0
                    .iter()
                    .rev()
                    .map(|e| Entry::new(e.elem, e.label * Label::T))
                    .collect(),
            ),
        }
    }
}

/// `act_c2(F, a)`.
pub fn act_c2(fiber: &Fiber, a: Label) -> Fiber {
    fiber.act(a)
}

/// Which of the two leg categories a morphism lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// Ordered, labelled fibers.
    Ifas,
    /// Labels only.
    If,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Ifas => "ifas",
            Kind::If => "if",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where a domain element sits: its target, position in the target's fiber
/// and label.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Location {
    pub target: usize,
    pub pos: usize,
    pub label: Label,
}

/// A morphism of IF(as).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IfasMor {
    dom: usize,
    fibers: Vec<Fiber>,
}

impl IfasMor {
    /// Checks that the fibers partition `{0..dom}`.
    pub fn new(dom: usize, fibers: Vec<Fiber>) -> Result<Self> {
        let mut seen = vec![false; dom];
        for e in fibers.iter().flat_map(|f| f.0.iter()) {
            if e.elem >= dom {
                return Err(Error::InvalidMorphism(format!(
                    "element {} outside domain of size {dom}",
                    e.elem + 1
                )));
            }
            if std::mem::replace(&mut seen[e.elem], true) {
                return Err(Error::InvalidMorphism(format!(
                    "element {} appears twice",
                    e.elem + 1
                )));
            }
        }
        if let Some(x) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidMorphism(format!(
                "element {} lies in no fiber",
                x + 1
            )));
        }
        Ok(IfasMor { dom, fibers })
    }

    pub(crate) fn from_fibers_unchecked(dom: usize, fibers: Vec<Fiber>) -> Self {
        debug_assert!(IfasMor::new(dom, fibers.clone()).is_ok());
        IfasMor { dom, fibers }
    }

    /// Builds a morphism from `(elem, label)` lists, one per codomain element.
    pub fn from_lists(dom: usize, lists: &[&[(usize, Label)]]) -> Result<Self> {
        let fibers = lists
            .iter()
            .map(|l| Fiber(l.iter().map(|&(x, a)| Entry::new(x, a)).collect()))
            .collect();
        IfasMor::new(dom, fibers)
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.fibers.len()
    }

    pub fn fibers(&self) -> &[Fiber] {
        &self.fibers
    }

    pub fn fiber(&self, i: usize) -> &Fiber {
        &self.fibers[i]
    }

    pub fn identity(n: usize) -> Self {
        IfasMor {
            dom: n,
            fibers: (0..n).map(|i| Fiber(vec![Entry::new(i, Label::One)])).collect(),
        }
    }

    /// The block swap `n + m -> m + n`, all labels trivial.
    pub fn symmetry(n: usize, m: usize) -> Self {
        let fibers = (0..n + m)
            .map(|c| {
                let x = if c < m { n + c } else { c - m };
                Fiber(vec![Entry::new(x, Label::One)])
            })
            .collect();
        IfasMor { dom: n + m, fibers }
    }

    /// Disjoint union; `g`'s elements are shifted past `self`'s.
    pub fn tensor(&self, g: &IfasMor) -> IfasMor {
        let mut fibers = self.fibers.clone();
        fibers.extend(g.fibers.iter().map(|f| {
            Fiber(
                f.0.iter()
                    .map(|e| Entry::new(e.elem + self.dom, e.label))
                    .collect(),
            )
        }));
        IfasMor {
            dom: self.dom + g.dom,
            fibers,
        }
    }

    /// `self • first`: apply `first`, then `self`.
    pub fn after(&self, first: &IfasMor) -> Result<IfasMor> {
        if first.cod() != self.dom {
            return Err(Error::ObjectMismatch {
                expected: self.dom,
                found: first.cod(),
            });
        }
        let fibers = self
            .fibers
            .iter()
            .map(|fib| {
                let mut out = Vec::new();
                for e in &fib.0 {
                    let inner = &first.fibers[e.elem].0;
                    match e.label {
                        Label::One => out.extend_from_slice(inner),
                        Label::T => out.extend(
                            inner
                                .iter()
                                .rev()
                                .map(|x| Entry::new(x.elem, x.label * Label::T)),
                        ),
                    }
                }
                Fiber(out)
            })
            .collect();
        Ok(IfasMor {
            dom: first.dom,
            fibers,
        })
    }

    pub fn image(&self) -> Vec<usize> {
        let mut image = vec![0; self.dom];
        for (i, f) in self.fibers.iter().enumerate() {
            for e in &f.0 {
                image[e.elem] = i;
            }
        }
        image
    }

    pub fn underlying(&self) -> SetMap {
        SetMap::new(self.cod(), self.image()).expect("fibers partition the domain")
    }

    /// Per domain element: target, position and label.
    pub fn locate(&self) -> Vec<Location> {
        let mut loc = vec![
            Location {
                target: 0,
                pos: 0,
                label: Label::One
            };
            self.dom
        ];
        for (i, f) in self.fibers.iter().enumerate() {
            for (pos, e) in f.0.iter().enumerate() {
                loc[e.elem] = Location {
                    target: i,
                    pos,
                    label: e.label,
                };
            }
        }
        loc
    }

    pub fn labels(&self) -> Vec<Label> {
        self.locate().into_iter().map(|l| l.label).collect()
    }

    /// Every label is `1` (the F(as) subcategory).
    pub fn is_fas(&self) -> bool {
        self.fibers
            .iter()
            .all(|f| f.0.iter().all(|e| e.label == Label::One))
    }

    /// Order-preserving map with canonical fiber order and trivial labels.
    pub fn is_order_preserving(&self) -> bool {
        self.fibers
            .iter()
            .flat_map(|f| f.0.iter())
            .enumerate()
            .all(|(k, e)| e.elem == k && e.label == Label::One)
    }

    pub fn is_bijection(&self) -> bool {
        self.dom == self.cod() && self.fibers.iter().all(|f| f.len() == 1)
    }

    pub fn is_plain_bijection(&self) -> bool {
        self.is_bijection() && self.is_fas()
    }

    /// Forgets the fiber order.
    pub fn to_if(&self) -> IfMor {
        let assign = self
            .locate()
            .into_iter()
            .map(|l| (l.target, l.label))
            .collect();
        IfMor {
            cod: self.cod(),
            assign,
        }
    }

    /// Canonical encoding: per fiber, its length then `(elem, label bit)` pairs.
    pub fn encode(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.cod() + 2 * self.dom);
        for f in &self.fibers {
            out.push(f.len() as u32);
            for e in &f.0 {
                out.push(e.elem as u32);
                out.push(e.label.bit());
            }
        }
        out
    }
}

/// `f2 • f1` in IF(as).
pub fn compose(f2: &IfasMor, f1: &IfasMor) -> Result<IfasMor> {
    f2.after(f1)
}

/// A morphism of IF: each domain element carries a target and a label.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IfMor {
    cod: usize,
    assign: Vec<(usize, Label)>,
}

impl IfMor {
    pub fn new(cod: usize, assign: Vec<(usize, Label)>) -> Result<Self> {
        if let Some(&(y, _)) = assign.iter().find(|(y, _)| *y >= cod) {
            return Err(Error::InvalidMorphism(format!(
                "target {} outside codomain of size {cod}",
                y + 1
            )));
        }
        Ok(IfMor { cod, assign })
    }

    pub fn dom(&self) -> usize {
        self.assign.len()
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn assignments(&self) -> &[(usize, Label)] {
        &self.assign
    }

    pub fn identity(n: usize) -> Self {
        IfMor {
            cod: n,
            assign: (0..n).map(|i| (i, Label::One)).collect(),
        }
    }

    pub fn symmetry(n: usize, m: usize) -> Self {
        IfasMor::symmetry(n, m).to_if()
    }

    pub fn tensor(&self, g: &IfMor) -> IfMor {
        let mut assign = self.assign.clone();
        assign.extend(g.assign.iter().map(|&(y, a)| (y + self.cod, a)));
        IfMor {
            cod: self.cod + g.cod,
            assign,
        }
    }

    /// `self ∘ first` with labels multiplied along the path.
    pub fn after(&self, first: &IfMor) -> Result<IfMor> {
        if first.cod != self.dom() {
            return Err(Error::ObjectMismatch {
                expected: self.dom(),
                found: first.cod,
            });
        }
        Ok(IfMor {
            cod: self.cod,
            assign: first
                .assign
                .iter()
                .map(|&(y, a)| {
                    let (z, b) = self.assign[y];
                    (z, a * b)
                })
                .collect(),
        })
    }

    /// Fiber over `i`, elements in increasing order.
    pub fn fiber(&self, i: usize) -> Fiber {
        Fiber(
            self.assign
                .iter()
                .enumerate()
                .filter(|(_, (y, _))| *y == i)
                .map(|(x, &(_, a))| Entry::new(x, a))
                .collect(),
        )
    }

    pub fn underlying(&self) -> SetMap {
        SetMap::new(self.cod, self.assign.iter().map(|a| a.0).collect())
            .expect("targets validated")
    }

    pub fn is_bijection(&self) -> bool {
        self.underlying().is_bijection()
    }

    pub fn is_label_trivial(&self) -> bool {
        self.assign.iter().all(|a| a.1 == Label::One)
    }

    /// Per domain element: `(target, label bit)`.
    pub fn encode(&self) -> Vec<u32> {
        self.assign
            .iter()
            .flat_map(|&(y, a)| [y as u32, a.bit()])
            .collect()
    }
}

/// `g ∘ f` in IF.
pub fn compose_if(g: &IfMor, f: &IfMor) -> Result<IfMor> {
    g.after(f)
}

/// `to_if(f)`.
pub fn to_if(f: &IfasMor) -> IfMor {
    f.to_if()
}

/// The fundamental morphisms `(m, u, i)`.
pub fn fundamental() -> (IfasMor, IfasMor, IfasMor) {
    (mult(), unit(), inv())
}

/// `m: 2 -> 1` with fiber `{1^1 < 2^1}`.
pub fn mult() -> IfasMor {
    IfasMor::from_fibers_unchecked(
        2,
        vec![Fiber(vec![
            Entry::new(0, Label::One),
            Entry::new(1, Label::One),
        ])],
    )
}

/// The unique `u: 0 -> 1`.
pub fn unit() -> IfasMor {
    IfasMor::from_fibers_unchecked(0, vec![Fiber::default()])
}

/// `i: 1 -> 1` with fiber `{1^t}`.
pub fn inv() -> IfasMor {
    IfasMor::from_fibers_unchecked(1, vec![Fiber(vec![Entry::new(0, Label::T)])])
}

/// A morphism of either leg category.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Morphism {
    Ifas(IfasMor),
    If(IfMor),
}

impl From<IfasMor> for Morphism {
    fn from(f: IfasMor) -> Self {
        Morphism::Ifas(f)
    }
}

impl From<IfMor> for Morphism {
    fn from(f: IfMor) -> Self {
        Morphism::If(f)
    }
}

impl Morphism {
    pub fn kind(&self) -> Kind {
        match self {
            Morphism::Ifas(_) => Kind::Ifas,
            Morphism::If(_) => Kind::If,
        }
    }

    pub fn dom(&self) -> usize {
        match self {
            Morphism::Ifas(f) => f.dom(),
            Morphism::If(f) => f.dom(),
        }
    }

    pub fn cod(&self) -> usize {
        match self {
            Morphism::Ifas(f) => f.cod(),
            Morphism::If(f) => f.cod(),
        }
    }

    pub fn identity(kind: Kind, n: usize) -> Self {
        match kind {
            Kind::Ifas => IfasMor::identity(n).into(),
            Kind::If => IfMor::identity(n).into(),
        }
    }

    pub fn symmetry(kind: Kind, n: usize, m: usize) -> Self {
        match kind {
            Kind::Ifas => IfasMor::symmetry(n, m).into(),
            Kind::If => IfMor::symmetry(n, m).into(),
        }
    }

    pub fn as_ifas(&self) -> Option<&IfasMor> {
        match self {
            Morphism::Ifas(f) => Some(f),
            Morphism::If(_) => None,
        }
    }

    pub fn as_if(&self) -> Option<&IfMor> {
        match self {
            Morphism::If(f) => Some(f),
            Morphism::Ifas(_) => None,
        }
    }

    /// Converts into the given kind; IF(as) -> IF forgets order, the converse
    /// is rejected.
    pub fn coerce(&self, kind: Kind) -> Result<Morphism> {
        match (self, kind) {
            (Morphism::Ifas(f), Kind::If) => Ok(f.to_if().into()),
            (m, k) if m.kind() == k => Ok(m.clone()),
            (m, k) => Err(Error::KindMismatch {
                expected: k.name(),
                found: m.kind().name(),
            }),
        }
    }

    fn expect_same(&self, other: &Morphism) -> Result<()> {
        if self.kind() != other.kind() {
            return Err(Error::KindMismatch {
                expected: self.kind().name(),
                found: other.kind().name(),
            });
        }
        Ok(())
    }

    /// `self • first`.
    pub fn after(&self, first: &Morphism) -> Result<Morphism> {
        self.expect_same(first)?;
        match (self, first) {
            (Morphism::Ifas(g), Morphism::Ifas(f)) => Ok(g.after(f)?.into()),
            (Morphism::If(g), Morphism::If(f)) => Ok(g.after(f)?.into()),
            _ => unreachable!(),
        }
    }

    pub fn tensor(&self, other: &Morphism) -> Result<Morphism> {
        self.expect_same(other)?;
        match (self, other) {
            (Morphism::Ifas(f), Morphism::Ifas(g)) => Ok(f.tensor(g).into()),
            (Morphism::If(f), Morphism::If(g)) => Ok(f.tensor(g).into()),
            _ => unreachable!(),
        }
    }

    pub fn underlying(&self) -> SetMap {
        match self {
            Morphism::Ifas(f) => f.underlying(),
            Morphism::If(f) => f.underlying(),
        }
    }

    /// Fiber over `i`; for IF the elements are listed in increasing order.
    pub fn fiber(&self, i: usize) -> Fiber {
        match self {
            Morphism::Ifas(f) => f.fiber(i).clone(),
            Morphism::If(f) => f.fiber(i),
        }
    }

    pub fn fibers(&self) -> Vec<Fiber> {
        (0..self.cod()).map(|i| self.fiber(i)).collect()
    }

    /// Per domain element: target, position and label. IF fibers count positions
    /// in increasing element order.
    pub fn locate(&self) -> Vec<Location> {
        match self {
            Morphism::Ifas(f) => f.locate(),
            Morphism::If(f) => {
                let mut count = vec![0; f.cod()];
                f.assign
                    .iter()
                    .map(|&(y, a)| {
                        let pos = count[y];
                        count[y] += 1;
                        Location {
                            target: y,
                            pos,
                            label: a,
                        }
                    })
                    .collect()
            }
        }
    }

    pub fn labels(&self) -> Vec<Label> {
        match self {
            Morphism::Ifas(f) => f.labels(),
            Morphism::If(f) => f.assign.iter().map(|a| a.1).collect(),
        }
    }

    /// Builds a morphism of `kind` from per-codomain entry lists. The order of
    /// each list is kept for IF(as) and dropped for IF.
    pub fn from_fibers(kind: Kind, dom: usize, fibers: Vec<Fiber>) -> Result<Morphism> {
        let f = IfasMor::new(dom, fibers)?;
        Ok(match kind {
            Kind::Ifas => f.into(),
            Kind::If => f.to_if().into(),
        })
    }

    /// Renames domain elements: element `x` becomes `new_of_old[x]`. This is
    /// precomposition with a plain bijection.
    pub fn rename_domain(&self, new_of_old: &[usize]) -> Morphism {
        match self {
            Morphism::Ifas(f) => IfasMor {
                dom: f.dom,
                fibers: f
                    .fibers
                    .iter()
                    .map(|fib| {
                        Fiber(
                            fib.0
                                .iter()
                                .map(|e| Entry::new(new_of_old[e.elem], e.label))
                                .collect(),
                        )
                    })
                    .collect(),
            }
            .into(),
            Morphism::If(f) => {
                let mut assign = vec![(0, Label::One); f.dom()];
                for (x, &a) in f.assign.iter().enumerate() {
                    assign[new_of_old[x]] = a;
                }
                IfMor { cod: f.cod, assign }.into()
            }
        }
    }

    /// Multiplies the label of every domain element `x` by `signs[x]`, keeping
    /// fiber order. This is precomposition with a diagonal signed bijection.
    pub fn twist_domain(&self, signs: &[Label]) -> Morphism {
        match self {
            Morphism::Ifas(f) => IfasMor {
                dom: f.dom,
                fibers: f
                    .fibers
                    .iter()
                    .map(|fib| {
                        Fiber(
                            fib.0
                                .iter()
                                .map(|e| Entry::new(e.elem, e.label * signs[e.elem]))
                                .collect(),
                        )
                    })
                    .collect(),
            }
            .into(),
            Morphism::If(f) => IfMor {
                cod: f.cod,
                assign: f
                    .assign
                    .iter()
                    .zip(signs)
                    .map(|(&(y, a), &s)| (y, a * s))
                    .collect(),
            }
            .into(),
        }
    }

    pub fn is_bijection(&self) -> bool {
        match self {
            Morphism::Ifas(f) => f.is_bijection(),
            Morphism::If(f) => f.is_bijection(),
        }
    }

    pub fn encode(&self) -> Vec<u32> {
        match self {
            Morphism::Ifas(f) => f.encode(),
            Morphism::If(f) => f.encode(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_hom;
    use crate::finset::compose_set;
    use Label::{One, T};

    /// `5→4 ; 1:{2^1}, 2:{1^t}, 3:{4^t<5^1}, 4:{3^t}` (0-based here).
    fn worked_example() -> IfasMor {
        IfasMor::from_lists(
            5,
            &[&[(1, One)], &[(0, T)], &[(3, T), (4, One)], &[(2, T)]],
        )
        .unwrap()
    }

    fn all(n: usize, m: usize) -> Vec<IfasMor> {
        enumerate_hom(n, m, Kind::Ifas)
            .unwrap()
            .into_iter()
            .map(|f| f.as_ifas().unwrap().clone())
            .collect()
    }

    #[test]
    fn act_examples() {
        let f = Fiber::new(vec![Entry::new(0, One), Entry::new(1, One)]);
        assert_eq!(
            act_c2(&f, T),
            Fiber::new(vec![Entry::new(1, T), Entry::new(0, T)])
        );
        assert_eq!(act_c2(&f, One), f);
        let g = Fiber::new(vec![Entry::new(3, T), Entry::new(0, One), Entry::new(2, T)]);
        assert_eq!(act_c2(&act_c2(&g, T), T), g);
    }

    #[test]
    fn partition_invariant() {
        assert!(IfasMor::from_lists(1, &[&[(0, One), (0, T)]]).is_err());
        assert!(IfasMor::from_lists(2, &[&[(0, One)]]).is_err());
        assert!(IfasMor::from_lists(1, &[&[(1, One)]]).is_err());
    }

    #[test]
    fn compose_examples() {
        let (m, _, i) = fundamental();
        assert_eq!(compose(&i, &i).unwrap(), IfasMor::identity(1));
        let im = compose(&i, &m).unwrap();
        assert_eq!(
            im.fiber(0).entries(),
            &[Entry::new(1, T), Entry::new(0, T)]
        );
        let f = worked_example();
        assert_eq!(compose(&f, &IfasMor::identity(5)).unwrap(), f);
        assert_eq!(compose(&IfasMor::identity(4), &f).unwrap(), f);
        assert!(compose(&m, &m).is_err());
    }

    #[test]
    fn tensor_and_symmetry() {
        let (_, _, i) = fundamental();
        assert_eq!(
            i.tensor(&i),
            IfasMor::from_lists(2, &[&[(0, T)], &[(1, T)]]).unwrap()
        );
        assert_eq!(
            IfasMor::symmetry(1, 1),
            IfasMor::from_lists(2, &[&[(1, One)], &[(0, One)]]).unwrap()
        );
        for n in 0..=3 {
            for m in 0..=3 {
                let s = compose(&IfasMor::symmetry(m, n), &IfasMor::symmetry(n, m)).unwrap();
                assert_eq!(s, IfasMor::identity(n + m));
            }
        }
        let f = worked_example();
        assert_eq!(f.tensor(&IfasMor::identity(0)), f);
        assert_eq!(IfasMor::identity(0).tensor(&f), f);
    }

    #[test]
    fn fundamental_shapes() {
        let (m, u, i) = fundamental();
        assert_eq!(m.fiber(0).entries(), &[Entry::new(0, One), Entry::new(1, One)]);
        assert_eq!(all(0, 1), vec![u]);
        assert_eq!(i.fiber(0).entries(), &[Entry::new(0, T)]);
    }

    #[test]
    fn antihomomorphism_identity() {
        let (m, _, i) = fundamental();
        let lhs = compose(&i, &m).unwrap();
        let rhs = compose(
            &m,
            &compose(&i.tensor(&i), &IfasMor::symmetry(1, 1)).unwrap(),
        )
        .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn to_if_examples() {
        let (_, _, i) = fundamental();
        let ii = i.to_if();
        assert_eq!(compose_if(&ii, &ii).unwrap(), IfMor::identity(1));
        let f = worked_example().to_if();
        assert_eq!(
            f.assignments(),
            &[(1, T), (0, One), (3, T), (2, T), (2, One)]
        );
    }

    #[test]
    fn predicates() {
        let (m, u, i) = fundamental();
        assert!(m.is_fas() && !i.is_fas());
        assert!(m.is_order_preserving() && u.is_order_preserving());
        assert!(!i.is_order_preserving());
        assert!(i.is_bijection() && !i.is_plain_bijection());
        assert!(IfasMor::symmetry(2, 1).is_plain_bijection());
        assert!(!IfasMor::symmetry(1, 1).is_order_preserving());
        assert!(!worked_example().is_bijection());
    }

    #[test]
    fn forgetful_functor_and_fas_closure() {
        for a in 0..=2 {
            for b in 0..=2 {
                for c in 0..=2 {
                    let fs = all(a, b);
                    let gs = all(b, c);
                    for f in &fs {
                        for g in &gs {
                            let gf = compose(g, f).unwrap();
                            assert_eq!(
                                gf.to_if(),
                                compose_if(&g.to_if(), &f.to_if()).unwrap()
                            );
                            assert_eq!(
                                gf.underlying(),
                                compose_set(&g.underlying(), &f.underlying()).unwrap()
                            );
                            if f.is_fas() && g.is_fas() {
                                assert!(gf.is_fas());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rename_and_twist_are_precomposition() {
        let f: Morphism = worked_example().into();
        let perm = [2, 0, 4, 1, 3];
        // h: new -> old, h(new_of_old[x]) = x
        let mut fib = vec![Fiber::default(); 5];
        for (x, &nx) in perm.iter().enumerate() {
            fib[x] = Fiber(vec![Entry::new(nx, One)]);
        }
        let h: Morphism = IfasMor::new(5, fib).unwrap().into();
        assert_eq!(f.rename_domain(&perm), f.after(&h).unwrap());

        let signs = [T, One, T, T, One];
        let d: Morphism = IfasMor::new(
            5,
            signs
                .iter()
                .enumerate()
                .map(|(x, &s)| Fiber(vec![Entry::new(x, s)]))
                .collect(),
        )
        .unwrap()
        .into();
        assert_eq!(f.twist_domain(&signs), f.after(&d).unwrap());
        let fi = f.coerce(Kind::If).unwrap();
        assert_eq!(
            fi.twist_domain(&signs),
            fi.after(&d.coerce(Kind::If).unwrap()).unwrap()
        );
    }
}
