//! Finite groups given by multiplication tables, and the group bialgebra they
//! span: grouplike basis, `Δ(g) = g ⊗ g`, `ε(g) = 1`, `j(g) = g⁻¹`.

use serde::Deserialize;

use crate::morphism::{Fiber, Kind, Location, Morphism};
use crate::spans::{QFlavor, Span};
use crate::{Error, Label, Result};

use super::tensor::{Ring, TensorMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupModel {
    name: String,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    identity: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    order: usize,
    mul: Vec<Vec<usize>>,
}

impl GroupModel {
    /// Validates a multiplication table (`mul[a][b] = ab`, elements `0..k`).
    pub fn from_table(name: impl Into<String>, mul: Vec<Vec<usize>>) -> Result<GroupModel> {
        let k = mul.len();
        let bad = |msg: String| Err(Error::Model(msg));
        if k == 0 {
            return bad("a group has at least one element".into());
        }
        if mul.iter().any(|row| row.len() != k || row.iter().any(|&c| c >= k)) {
            return bad(format!("table must be {k} x {k} with entries below {k}"));
        }
        let Some(e) = (0..k).find(|&e| (0..k).all(|a| mul[e][a] == a && mul[a][e] == a)) else {
            return bad("no identity element".into());
        };
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return bad(format!("not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let mut inv = Vec::with_capacity(k);
        for a in 0..k {
            match (0..k).find(|&b| mul[a][b] == e) {
                Some(b) if mul[b][a] == e => inv.push(b),
                _ => return bad(format!("element {a} has no inverse")),
            }
        }
        Ok(GroupModel {
            name: name.into(),
            mul,
            inv,
            identity: e,
        })
    }

    /// Reads `{"order": k, "mul": [[...], ...]}` with 0-based elements.
    pub fn from_json(name: impl Into<String>, text: &str) -> Result<GroupModel> {
        let file: TableFile = serde_json::from_str(text)?;
        if file.mul.len() != file.order {
            return Err(Error::Model(format!(
                "order is {} but the table has {} rows",
                file.order,
                file.mul.len()
            )));
        }
        GroupModel::from_table(name, file.mul)
    }

    pub fn cyclic(k: usize) -> Result<GroupModel> {
        GroupModel::from_table(
            format!("C{k}"),
            (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect(),
        )
    }

    pub fn c2() -> GroupModel {
        GroupModel::cyclic(2).expect("cyclic group")
    }

    pub fn c3() -> GroupModel {
        GroupModel::cyclic(3).expect("cyclic group")
    }

    /// Permutations of three letters in lexicographic order of their one-line
    /// form, composed right to left: `(ab)(x) = a(b(x))`.
    pub fn s3() -> GroupModel {
        let perms = crate::factor::permutations(3);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("a permutation");
        let mul = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index(&[a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        GroupModel::from_table("S3", mul).expect("S3 is a group")
    }

    /// `c2`, `c3` or `s3` (case-insensitive).
    pub fn builtin(name: &str) -> Option<GroupModel> {
        match name.to_ascii_lowercase().as_str() {
            "c2" => Some(GroupModel::c2()),
            "c3" => Some(GroupModel::c3()),
            "s3" => Some(GroupModel::s3()),
            _ => None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn is_abelian(&self) -> bool {
        let k = self.order();
        (0..k).all(|a| (0..k).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    fn act(&self, g: usize, a: Label) -> usize {
        match a {
            Label::One => g,
            Label::T => self.inv[g],
        }
    }
}

/// The group bialgebra of a [`GroupModel`] over a coefficient [`Ring`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebra {
    pub group: GroupModel,
    pub ring: Ring,
}

impl GroupAlgebra {
    pub fn new(group: GroupModel, ring: Ring) -> GroupAlgebra {
        GroupAlgebra { group, ring }
    }

    pub fn rank(&self) -> usize {
        self.group.order()
    }

    /// Monoid-side action on one basis tuple: output `i` is the product, in
    /// fiber order, of `g_x` or `g_x⁻¹`.
    pub fn push_f(&self, fibers: &[Fiber], input: &[usize], out: &mut Vec<usize>) {
        let g = &self.group;
        for fib in fibers {
            let h = fib
                .entries()
                .iter()
                .fold(g.identity, |acc, e| g.mul(acc, g.act(input[e.elem], e.label)));
            out.push(h);
        }
    }

    /// Comonoid-side action of `phi: p -> n` read contravariantly: output `y`
    /// is `g_{phi(y)}` or its inverse.
    pub fn push_g(&self, locations: &[Location], input: &[usize], out: &mut Vec<usize>) {
        for loc in locations {
            out.push(self.group.act(input[loc.target], loc.label));
        }
    }

    fn check_monoid_side(&self, f: &Morphism) -> Result<()> {
        if f.kind() == Kind::If && !self.group.is_abelian() {
            return Err(Error::Model(format!(
                "IF morphisms forget fiber order, which needs a commutative group; {} is not",
                self.group.name
            )));
        }
        Ok(())
    }

    pub fn eval_f(&self, f: &Morphism) -> Result<TensorMap> {
        self.check_monoid_side(f)?;
        let fibers = f.fibers();
        TensorMap::from_basis_fn(self.ring, self.rank(), f.dom(), f.cod(), |x, out| {
            self.push_f(&fibers, x, out)
        })
    }

    pub fn eval_g(&self, phi: &Morphism) -> Result<TensorMap> {
        let locations = phi.locate();
        TensorMap::from_basis_fn(self.ring, self.rank(), phi.cod(), phi.dom(), |x, out| {
            self.push_g(&locations, x, out)
        })
    }

    /// `eval_f(right) ∘ eval_g(left)`, computed tuple by tuple so the apex
    /// power is never tabulated.
    pub fn eval_span(&self, s: &Span) -> Result<TensorMap> {
        if matches!(s.flavor(), QFlavor::Qv | QFlavor::Qif) && !self.group.is_abelian() {
            return Err(Error::Model(format!(
                "{} spans need a commutative group; {} is not",
                s.flavor(),
                self.group.name
            )));
        }
        let (locations, fibers) = (s.left().locate(), s.right().fibers());
        let mut apex = Vec::with_capacity(s.apex());
        TensorMap::from_basis_fn(self.ring, self.rank(), s.src(), s.tgt(), |x, out| {
            apex.clear();
            self.push_g(&locations, x, &mut apex);
            self.push_f(&fibers, &apex, out);
        })
    }
}
