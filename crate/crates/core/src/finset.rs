//! Plain maps of finite ordinals and pullbacks of cospans.

use crate::{Error, Result};

/// A map of finite sets `dom -> cod`, stored as its image sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetMap {
    cod: usize,
    image: Vec<usize>,
}

impl SetMap {
    pub fn new(cod: usize, image: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = image.iter().find(|&&y| y >= cod) {
            return Err(Error::InvalidMorphism(format!(
                "image entry {} outside codomain of size {cod}",
                bad + 1
            )));
        }
        Ok(SetMap { cod, image })
    }

    pub fn identity(n: usize) -> Self {
        SetMap {
            cod: n,
            image: (0..n).collect(),
        }
    }

    /// The unique map `0 -> cod`.
    pub fn empty(cod: usize) -> Self {
        SetMap {
            cod,
            image: Vec::new(),
        }
    }

    pub fn dom(&self) -> usize {
        self.image.len()
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// Preimage of a single codomain element, in increasing order.
    pub fn preimage(&self, i: usize) -> Vec<usize> {
        (0..self.dom()).filter(|&x| self.image[x] == i).collect()
    }

    pub fn is_bijection(&self) -> bool {
        if self.dom() != self.cod {
            return false;
        }
        let mut seen = vec![false; self.cod];
        self.image.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }
}

/// `g ∘ f`.
pub fn compose_set(g: &SetMap, f: &SetMap) -> Result<SetMap> {
    if f.cod != g.dom() {
        return Err(Error::ObjectMismatch {
            expected: g.dom(),
            found: f.cod,
        });
    }
    Ok(SetMap {
        cod: g.cod,
        image: f.image.iter().map(|&x| g.image[x]).collect(),
    })
}

/// The pullback of a cospan `m -f-> q <-phi- p`.
///
/// Apex elements are the pairs `(x, y)` with `f(x) = phi(y)`, numbered
/// lexicographically by `(y, x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pullback {
    pairs: Vec<(usize, usize)>,
    index: Vec<Option<usize>>,
    left_size: usize,
    pub proj_m: SetMap,
    pub proj_p: SetMap,
}

impl Pullback {
    pub fn apex(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Apex position of the pair `(x, y)`, if it lies in the pullback.
    pub fn index_of(&self, x: usize, y: usize) -> Option<usize> {
        self.index[y * self.left_size + x]
    }
}

pub fn pullback(f: &SetMap, phi: &SetMap) -> Result<Pullback> {
    if f.cod != phi.cod {
        return Err(Error::ObjectMismatch {
            expected: f.cod,
            found: phi.cod,
        });
    }
    let (m, p) = (f.dom(), phi.dom());
    let mut pairs = Vec::new();
    let mut index = vec![None; m * p];
    for y in 0..p {
        for x in 0..m {
            if f.image[x] == phi.image[y] {
                index[y * m + x] = Some(pairs.len());
                pairs.push((x, y));
            }
        }
    }
    let proj_m = SetMap {
        cod: m,
        image: pairs.iter().map(|&(x, _)| x).collect(),
    };
    let proj_p = SetMap {
        cod: p,
        image: pairs.iter().map(|&(_, y)| y).collect(),
    };
    Ok(Pullback {
        pairs,
        index,
        left_size: m,
        proj_m,
        proj_p,
    })
}
