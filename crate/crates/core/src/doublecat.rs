//! Bimorphisms of the double categories IF(as)_2, IF_2, V and H, and the star
//! completion of a cospan.
//!
//! A square is drawn
//!
//! ```text
//!   n --top--> p
//!   |          |
//! left       right
//!   v          v
//!   m -bottom-> q
//! ```
//!
//! with `top`/`bottom` horizontal and `left`/`right` vertical. Fiber data on the
//! completed edges is twisted: the top fiber over `y` is the bottom fiber over
//! `right(y)` acted on by the label of `y`, and the left fiber over `x` is the
//! right fiber over `bottom(x)` acted on by the label of `x`, with trivial
//! labels. For label-trivial cospans this is plain copying of fiber data.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::finset::pullback;
use crate::morphism::{inv, mult, unit, Entry, Fiber, IfasMor, Kind, Morphism};
use crate::{Error, Label, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    #[serde(rename = "IFAS2")]
    Ifas2,
    #[serde(rename = "IF2")]
    If2,
    V,
    H,
}

impl Flavor {
    pub const ALL: [Flavor; 4] = [Flavor::Ifas2, Flavor::If2, Flavor::V, Flavor::H];

    pub fn horizontal(self) -> Kind {
        match self {
            Flavor::Ifas2 | Flavor::H => Kind::Ifas,
            Flavor::If2 | Flavor::V => Kind::If,
        }
    }

    pub fn vertical(self) -> Kind {
        match self {
            Flavor::Ifas2 | Flavor::V => Kind::Ifas,
            Flavor::If2 | Flavor::H => Kind::If,
        }
    }

    /// The flavor whose horizontal and vertical categories are the given ones.
    pub fn from_kinds(horizontal: Kind, vertical: Kind) -> Flavor {
        match (horizontal, vertical) {
            (Kind::Ifas, Kind::Ifas) => Flavor::Ifas2,
            (Kind::If, Kind::If) => Flavor::If2,
            (Kind::If, Kind::Ifas) => Flavor::V,
            (Kind::Ifas, Kind::If) => Flavor::H,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Ifas2 => "IFAS2",
            Flavor::If2 => "IF2",
            Flavor::V => "V",
            Flavor::H => "H",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Flavor> {
        Flavor::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::FlavorMismatch(format!("unknown double category {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bimorphism {
    pub flavor: Flavor,
    pub top: Morphism,
    pub left: Morphism,
    pub right: Morphism,
    pub bottom: Morphism,
}

fn check_kind(m: &Morphism, kind: Kind) -> Result<()> {
    if m.kind() != kind {
        return Err(Error::FlavorMismatch(format!(
            "expected an {kind} morphism, found {}",
            m.kind()
        )));
    }
    Ok(())
}

impl Bimorphism {
    /// Validates the square; see [`is_bimorphism`].
    pub fn new(
        flavor: Flavor,
        top: Morphism,
        left: Morphism,
        right: Morphism,
        bottom: Morphism,
    ) -> Result<Self> {
        let b = Bimorphism {
            flavor,
            top,
            left,
            right,
            bottom,
        };
        b.validate()?;
        Ok(b)
    }

    /// The identity square on a horizontal morphism `f`.
    pub fn identity_on(flavor: Flavor, f: &Morphism) -> Result<Self> {
        check_kind(f, flavor.horizontal())?;
        Bimorphism::new(
            flavor,
            f.clone(),
            Morphism::identity(flavor.vertical(), f.dom()),
            Morphism::identity(flavor.vertical(), f.cod()),
            f.clone(),
        )
    }

    /// The completion of `phi` against an identity bottom edge. Labels on the
    /// vertical side cannot sit on the left edge, so they move to the top,
    /// which is the signed diagonal of `phi`'s labels; for label-trivial `phi`
    /// this is the identity square.
    pub fn identity_on_vertical(flavor: Flavor, phi: &Morphism) -> Result<Self> {
        check_kind(phi, flavor.vertical())?;
        complete_star(&Morphism::identity(flavor.horizontal(), phi.cod()), phi, flavor)
    }

    pub fn apex(&self) -> usize {
        self.top.dom()
    }

    pub fn validate(&self) -> Result<()> {
        square_defect(self).map_or(Ok(()), |d| Err(Error::NotBimorphism(d)))
    }
}

/// The unique bimorphism over the canonical pullback of `bottom` and `right`.
pub fn complete_star(bottom: &Morphism, right: &Morphism, flavor: Flavor) -> Result<Bimorphism> {
    check_kind(bottom, flavor.horizontal())?;
    check_kind(right, flavor.vertical())?;
    let pb = pullback(&bottom.underlying(), &right.underlying())?;
    let (m, p) = (bottom.dom(), right.dom());
    let bottom_loc = bottom.locate();
    let right_loc = right.locate();

    let top_fibers = (0..p)
        .map(|y| {
            let over = bottom.fiber(right_loc[y].target).act(right_loc[y].label);
            Fiber(
                over.entries()
                    .iter()
                    .map(|e| Entry::new(pb.index_of(e.elem, y).expect("in pullback"), e.label))
                    .collect(),
            )
        })
        .collect();
    let left_fibers = (0..m)
        .map(|x| {
            let over = right.fiber(bottom_loc[x].target).act(bottom_loc[x].label);
            Fiber(
                over.entries()
                    .iter()
                    .map(|e| Entry::new(pb.index_of(x, e.elem).expect("in pullback"), Label::One))
                    .collect(),
            )
        })
        .collect();

    let top = Morphism::from_fibers(flavor.horizontal(), pb.apex(), top_fibers)?;
    let left = Morphism::from_fibers(flavor.vertical(), pb.apex(), left_fibers)?;
    Ok(Bimorphism {
        flavor,
        top,
        left,
        right: right.clone(),
        bottom: bottom.clone(),
    })
}

/// True iff the square is a pullback of underlying maps whose top and left
/// fiber data is the twisted copy of the opposite edges.
pub fn is_bimorphism(square: &Bimorphism) -> bool {
    square_defect(square).is_none()
}

/// Compares fiber data as ordered lists (IF(as)) or as sets (IF).
fn same_fiber(kind: Kind, a: &[(usize, Label)], b: &[(usize, Label)]) -> bool {
    match kind {
        Kind::Ifas => a == b,
        Kind::If => {
            let (mut a, mut b) = (a.to_vec(), b.to_vec());
            a.sort_unstable();
            b.sort_unstable();
            a == b
        }
    }
}

/// Describes the first violated condition, if any.
fn square_defect(b: &Bimorphism) -> Option<String> {
    let kinds = [
        (&b.top, b.flavor.horizontal(), "top"),
        (&b.bottom, b.flavor.horizontal(), "bottom"),
        (&b.left, b.flavor.vertical(), "left"),
        (&b.right, b.flavor.vertical(), "right"),
    ];
    for (m, k, name) in kinds {
        if m.kind() != k {
            return Some(format!("{name} edge is {} but {} needs {k}", m.kind(), b.flavor));
        }
    }
    let (n, mm, p, q) = (b.top.dom(), b.bottom.dom(), b.right.dom(), b.right.cod());
    if b.left.dom() != n || b.left.cod() != mm || b.top.cod() != p || b.bottom.cod() != q {
        return Some("edges do not form a square".into());
    }

    let top = b.top.locate();
    let left = b.left.locate();
    let bottom = b.bottom.locate();
    let right = b.right.locate();

    // the underlying square is a pullback: z -> (left z, top z) is a bijection
    // onto the pairs with bottom(x) = right(y)
    let mut hit = vec![false; mm * p];
    for z in 0..n {
        let (x, y) = (left[z].target, top[z].target);
        if bottom[x].target != right[y].target {
            return Some("underlying square does not commute".into());
        }
        if std::mem::replace(&mut hit[y * mm + x], true) {
            return Some("underlying square is not a pullback".into());
        }
    }
    let pairs: usize = (0..q)
        .map(|i| {
            bottom.iter().filter(|l| l.target == i).count()
                * right.iter().filter(|l| l.target == i).count()
        })
        .sum();
    if pairs != n {
        return Some("underlying square is not a pullback".into());
    }

    // left fiber over x, carried along top, is right's fiber over bottom(x)
    // twisted by the label of x; left labels are trivial
    for x in 0..mm {
        let fib = b.left.fiber(x);
        if fib.entries().iter().any(|e| e.label != Label::One) {
            return Some(format!("left fiber over {} has a nontrivial label", x + 1));
        }
        let carried: Vec<_> = fib
            .entries()
            .iter()
            .map(|e| (top[e.elem].target, Label::One))
            .collect();
        let expected: Vec<_> = b
            .right
            .fiber(bottom[x].target)
            .act(bottom[x].label)
            .entries()
            .iter()
            .map(|e| (e.elem, Label::One))
            .collect();
        if !same_fiber(b.flavor.vertical(), &carried, &expected) {
            return Some(format!("left fiber over {} is not the twisted right fiber", x + 1));
        }
    }

    // top fiber over y, carried along left, is bottom's fiber over right(y)
    // twisted by the label of y, labels included
    for y in 0..p {
        let carried: Vec<_> = b
            .top
            .fiber(y)
            .entries()
            .iter()
            .map(|e| (left[e.elem].target, e.label))
            .collect();
        let expected: Vec<_> = b
            .bottom
            .fiber(right[y].target)
            .act(right[y].label)
            .entries()
            .iter()
            .map(|e| (e.elem, e.label))
            .collect();
        if !same_fiber(b.flavor.horizontal(), &carried, &expected) {
            return Some(format!("top fiber over {} is not the twisted bottom fiber", y + 1));
        }
    }
    None
}

/// Pastes `west` to the left of `east` along `west.right == east.left`.
pub fn paste_h(west: &Bimorphism, east: &Bimorphism) -> Result<Bimorphism> {
    if west.flavor != east.flavor {
        return Err(Error::FlavorMismatch("pasting squares of different flavors".into()));
    }
    if west.right != east.left {
        return Err(Error::NotBimorphism("shared vertical edge differs".into()));
    }
    Ok(Bimorphism {
        flavor: west.flavor,
        top: east.top.after(&west.top)?,
        left: west.left.clone(),
        right: east.right.clone(),
        bottom: east.bottom.after(&west.bottom)?,
    })
}

/// Pastes `north` on top of `south` along `north.bottom == south.top`.
pub fn paste_v(north: &Bimorphism, south: &Bimorphism) -> Result<Bimorphism> {
    if north.flavor != south.flavor {
        return Err(Error::FlavorMismatch("pasting squares of different flavors".into()));
    }
    if north.bottom != south.top {
        return Err(Error::NotBimorphism("shared horizontal edge differs".into()));
    }
    Ok(Bimorphism {
        flavor: north.flavor,
        top: north.top.clone(),
        left: south.left.after(&north.left)?,
        right: south.right.after(&north.right)?,
        bottom: south.bottom.clone(),
    })
}

/// `(B1, B2, B3, B4, J)` of IF(as)_2, built edge by edge.
pub fn fundamental_bimorphisms() -> [Bimorphism; 5] {
    let (m, u, i) = (mult(), unit(), inv());
    let id0 = IfasMor::identity(0);
    let uu = u.tensor(&u);
    let mm = m.tensor(&m);
    // (2 3) with trivial labels
    let tau23 = IfasMor::from_lists(
        4,
        &[
            &[(0, Label::One)],
            &[(2, Label::One)],
            &[(1, Label::One)],
            &[(3, Label::One)],
        ],
    )
    .expect("transposition");
    let sq = |top: &IfasMor, left: &IfasMor, right: &IfasMor, bottom: &IfasMor| Bimorphism {
        flavor: Flavor::Ifas2,
        top: top.clone().into(),
        left: left.clone().into(),
        right: right.clone().into(),
        bottom: bottom.clone().into(),
    };
    [
        sq(&mm, &mm.after(&tau23).expect("composable"), &m, &m),
        sq(&id0, &id0, &u, &u),
        sq(&id0, &uu, &u, &m),
        sq(&uu, &id0, &m, &u),
        sq(&IfasMor::identity(1), &IfasMor::identity(1), &i, &i),
    ]
}
