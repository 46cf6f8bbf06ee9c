//! Factorisation `f = phi • g` of IF(as) morphisms into a signed permutation
//! followed by an order-preserving map, the distributive law it induces, and the
//! hyperoctahedral groups.

use crate::morphism::{Entry, Fiber, IfMor, IfasMor};
use crate::{Error, Label, Result};

/// An element of the hyperoctahedral group `H_n`: a bijection of IF(as).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation(IfasMor);

impl SignedPermutation {
    pub fn new(f: IfasMor) -> Result<Self> {
        if f.is_bijection() {
            Ok(SignedPermutation(f))
        } else {
            Err(Error::NotSignedPermutation)
        }
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation(IfasMor::identity(n))
    }

    /// `x -> perm[x]` with label `signs[x]`.
    pub fn from_parts(perm: &[usize], signs: &[Label]) -> Result<Self> {
        let n = perm.len();
        let mut fibers = vec![Fiber::default(); n];
        for (x, (&y, &a)) in perm.iter().zip(signs).enumerate() {
            if y >= n {
                return Err(Error::NotSignedPermutation);
            }
            fibers[y].0.push(Entry::new(x, a));
        }
        SignedPermutation::new(IfasMor::new(n, fibers).map_err(|_| Error::NotSignedPermutation)?)
    }

    pub fn size(&self) -> usize {
        self.0.dom()
    }

    pub fn as_mor(&self) -> &IfasMor {
        &self.0
    }

    pub fn into_mor(self) -> IfasMor {
        self.0
    }

    /// `self • other`.
    pub fn multiply(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        Ok(SignedPermutation(self.0.after(&other.0)?))
    }

    /// Sends `y = g(x)` back to `x` with the same label.
    pub fn inverse(&self) -> SignedPermutation {
        let fibers = self
            .0
            .locate()
            .into_iter()
            .map(|loc| Fiber(vec![Entry::new(loc.target, loc.label)]))
            .collect();
        SignedPermutation(IfasMor::from_fibers_unchecked(self.size(), fibers))
    }
}

/// A morphism of the PRO of finite ordinals inside IF(as): order-preserving,
/// canonical fiber order, trivial labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderPreserving(IfasMor);

impl OrderPreserving {
    pub fn new(f: IfasMor) -> Result<Self> {
        if f.is_order_preserving() {
            Ok(OrderPreserving(f))
        } else {
            Err(Error::NotOrderPreserving)
        }
    }

    /// The order-preserving map with the given fiber sizes.
    pub fn from_sizes(sizes: &[usize]) -> Self {
        let mut next = 0;
        let fibers = sizes
            .iter()
            .map(|&k| {
                let fib = Fiber((next..next + k).map(|x| Entry::new(x, Label::One)).collect());
                next += k;
                fib
            })
            .collect();
        OrderPreserving(IfasMor::from_fibers_unchecked(next, fibers))
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.0.fibers().iter().map(Fiber::len).collect()
    }

    pub fn as_mor(&self) -> &IfasMor {
        &self.0
    }

    pub fn into_mor(self) -> IfasMor {
        self.0
    }
}

/// The unique `(phi, g)` with `f = phi • g`.
pub fn factorize(f: &IfasMor) -> (OrderPreserving, SignedPermutation) {
    let phi = OrderPreserving::from_sizes(&f.fibers().iter().map(Fiber::len).collect::<Vec<_>>());
    // the r-th entry of fiber i, x^β, is sent to the r-th slot of block i with label β
    let mut g = Vec::with_capacity(f.dom());
    for e in f.fibers().iter().flat_map(|fib| fib.entries()) {
        g.push(Fiber(vec![*e]));
    }
    (phi, SignedPermutation(IfasMor::from_fibers_unchecked(f.dom(), g)))
}

/// Rewrites `g • phi` as `phi' • g'`.
pub fn distribute(
    g: &SignedPermutation,
    phi: &OrderPreserving,
) -> Result<(OrderPreserving, SignedPermutation)> {
    Ok(factorize(&g.0.after(&phi.0)?))
}

/// Splits an IF morphism into its label-trivial part after a diagonal of labels:
/// `f = plain ∘ x`.
pub fn factorize_if(f: &IfMor) -> (IfMor, IfMor) {
    let plain = IfMor::new(
        f.cod(),
        f.assignments().iter().map(|&(y, _)| (y, Label::One)).collect(),
    )
    .expect("targets in range");
    let x = IfMor::new(
        f.dom(),
        f.assignments()
            .iter()
            .enumerate()
            .map(|(i, &(_, a))| (i, a))
            .collect(),
    )
    .expect("identity targets");
    (plain, x)
}

/// Largest `n` for which [`HyperoctahedralGroup::elements`] enumerates.
pub const MAX_GROUP_RANK: usize = 8;

/// `H_n = C2^n ⋊ Σ_n` under IF(as) composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HyperoctahedralGroup {
    n: usize,
}

impl HyperoctahedralGroup {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_GROUP_RANK {
            return Err(Error::SizeGuard {
                what: "hyperoctahedral rank",
                value: n as u128,
                limit: MAX_GROUP_RANK as u128,
            });
        }
        Ok(HyperoctahedralGroup { n })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u128 {
        (1..=self.n as u128).product::<u128>() << self.n
    }

    pub fn identity(&self) -> SignedPermutation {
        SignedPermutation::identity(self.n)
    }

    pub fn multiply(&self, a: &SignedPermutation, b: &SignedPermutation) -> Result<SignedPermutation> {
        a.multiply(b)
    }

    pub fn inverse(&self, a: &SignedPermutation) -> SignedPermutation {
        a.inverse()
    }

    /// All elements: permutations in lexicographic order, then sign vectors.
    pub fn elements(&self) -> Vec<SignedPermutation> {
        let mut out = Vec::with_capacity(self.order() as usize);
        for perm in permutations(self.n) {
            for mask in 0..1u32 << self.n {
                let signs: Vec<Label> = (0..self.n)
                    .map(|k| if mask >> k & 1 == 1 { Label::T } else { Label::One })
                    .collect();
                out.push(SignedPermutation::from_parts(&perm, &signs).expect("valid permutation"));
            }
        }
        out
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}
