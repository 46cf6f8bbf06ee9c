//! Exact linear maps between tensor powers of a group algebra.

use std::fmt;

use crate::{Error, Result};

/// Largest basis size of a tensor power a [`TensorMap`] will tabulate.
pub const MAX_BASIS: usize = 4096;

/// Coefficient ring: integers modulo a prime, or the integers themselves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Mod(u32),
    Integers,
}

impl Default for Ring {
    fn default() -> Self {
        Ring::Mod(7)
    }
}

impl Ring {
    pub fn modulo(p: u32) -> Result<Ring> {
        let prime = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if prime {
            Ok(Ring::Mod(p))
        } else {
            Err(Error::Model(format!("modulus {p} is not a prime")))
        }
    }

    pub fn reduce(self, c: i64) -> i64 {
        match self {
            Ring::Mod(p) => c.rem_euclid(p as i64),
            Ring::Integers => c,
        }
    }

    pub fn add(self, a: i64, b: i64) -> i64 {
        self.reduce(a.checked_add(b).expect("coefficient overflow"))
    }

    pub fn mul(self, a: i64, b: i64) -> i64 {
        self.reduce(a.checked_mul(b).expect("coefficient overflow"))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Mod(p) => write!(f, "Z/{p}"),
            Ring::Integers => f.write_str("Z"),
        }
    }
}

/// `rank^arity`, or a size-guard error.
pub fn basis_size(rank: usize, arity: usize) -> Result<usize> {
    let mut n: usize = 1;
    for _ in 0..arity {
        n = n.saturating_mul(rank);
        if n > MAX_BASIS {
            return Err(Error::SizeGuard {
                what: "tensor basis",
                value: (rank as u128).saturating_pow(arity as u32),
                limit: MAX_BASIS as u128,
            });
        }
    }
    Ok(n)
}

/// Mixed-radix index of a basis tuple, first coordinate most significant.
pub fn encode_tuple(rank: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &g| acc * rank + g)
}

pub fn decode_tuple(rank: usize, arity: usize, mut index: usize, out: &mut Vec<usize>) {
    out.clear();
    out.resize(arity, 0);
    for slot in out.iter_mut().rev() {
        *slot = index % rank;
        index /= rank;
    }
}

/// A linear map `A^{⊗dom} -> A^{⊗cod}` for a group algebra `A` with basis of
/// size `rank`, stored column by column. Columns are sorted by basis index and
/// hold only non-zero reduced coefficients, so derived equality is equality of
/// linear maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorMap {
    ring: Ring,
    rank: usize,
    dom: usize,
    cod: usize,
    cols: Vec<Vec<(usize, i64)>>,
}

impl TensorMap {
    /// The map sending each basis tuple to the basis tuple `f(tuple)`.
    pub fn from_basis_fn(
        ring: Ring,
        rank: usize,
        dom: usize,
        cod: usize,
        mut f: impl FnMut(&[usize], &mut Vec<usize>),
    ) -> Result<TensorMap> {
        let rows = basis_size(rank, dom)?;
        basis_size(rank, cod)?;
        let mut input = Vec::with_capacity(dom);
        let mut output = Vec::with_capacity(cod);
        let cols = (0..rows)
            .map(|j| {
                decode_tuple(rank, dom, j, &mut input);
                output.clear();
                f(&input, &mut output);
                debug_assert_eq!(output.len(), cod);
                vec![(encode_tuple(rank, &output), ring.reduce(1))]
            })
            .collect();
        Ok(TensorMap {
            ring,
            rank,
            dom,
            cod,
            cols,
        })
    }

    pub fn identity(ring: Ring, rank: usize, n: usize) -> Result<TensorMap> {
        TensorMap::from_basis_fn(ring, rank, n, n, |x, out| out.extend_from_slice(x))
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    /// Image of the `j`-th basis tuple as `(index, coefficient)` pairs.
    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.cols[j]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &TensorMap) -> Result<TensorMap> {
        if self.ring != first.ring || self.rank != first.rank {
            return Err(Error::Model("maps over different algebras".into()));
        }
        if first.cod != self.dom {
            return Err(Error::ObjectMismatch {
                expected: self.dom,
                found: first.cod,
            });
        }
        let ring = self.ring;
        let cols = first
            .cols
            .iter()
            .map(|col| {
                let mut acc: Vec<(usize, i64)> = Vec::new();
                for &(k, c) in col {
                    for &(i, d) in &self.cols[k] {
                        acc.push((i, ring.mul(c, d)));
                    }
                }
                normalize(ring, acc)
            })
            .collect();
        Ok(TensorMap {
            ring,
            rank: self.rank,
            dom: first.dom,
            cod: self.cod,
            cols,
        })
    }

    /// `self ⊗ other`, acting on the first `self.dom` and last `other.dom` factors.
    pub fn tensor(&self, other: &TensorMap) -> Result<TensorMap> {
        if self.ring != other.ring || self.rank != other.rank {
            return Err(Error::Model("maps over different algebras".into()));
        }
        let (rows, cod) = (
            basis_size(self.rank, self.dom + other.dom)?,
            basis_size(self.rank, self.cod + other.cod)?,
        );
        let ring = self.ring;
        let (other_rows, other_cod) = (other.cols.len(), cod / basis_size(self.rank, self.cod)?);
        let cols = (0..rows)
            .map(|j| {
                let (a, b) = (j / other_rows, j % other_rows);
                let mut acc = Vec::new();
                for &(i, c) in &self.cols[a] {
                    for &(k, d) in &other.cols[b] {
                        acc.push((i * other_cod + k, ring.mul(c, d)));
                    }
                }
                normalize(ring, acc)
            })
            .collect();
        Ok(TensorMap {
            ring,
            rank: self.rank,
            dom: self.dom + other.dom,
            cod: self.cod + other.cod,
            cols,
        })
    }

    /// First basis tuple (in index order) on which the maps differ.
    pub fn first_difference(&self, other: &TensorMap) -> Option<usize> {
        if (self.dom, self.cod, self.rank) != (other.dom, other.cod, other.rank) {
            return Some(0);
        }
        (0..self.cols.len()).find(|&j| self.cols[j] != other.cols[j])
    }
}

fn normalize(ring: Ring, mut acc: Vec<(usize, i64)>) -> Vec<(usize, i64)> {
    acc.sort_unstable_by_key(|&(i, _)| i);
    let mut out: Vec<(usize, i64)> = Vec::with_capacity(acc.len());
    for (i, c) in acc {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = ring.add(last.1, c),
            _ => out.push((i, c)),
        }
    }
    out.retain(|&(_, c)| c != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swap(ring: Ring, rank: usize) -> TensorMap {
        TensorMap::from_basis_fn(ring, rank, 2, 2, |x, out| out.extend([x[1], x[0]])).unwrap()
    }

    #[test]
    fn tuples_round_trip() {
        let mut t = Vec::new();
        for j in 0..216 {
            decode_tuple(6, 3, j, &mut t);
            assert_eq!(encode_tuple(6, &t), j);
        }
        decode_tuple(6, 0, 0, &mut t);
        assert!(t.is_empty());
    }

    #[test]
    fn composition_and_tensor() {
        let ring = Ring::default();
        let s = swap(ring, 3);
        let id2 = TensorMap::identity(ring, 3, 2).unwrap();
        assert_eq!(s.after(&s).unwrap(), id2);
        let id1 = TensorMap::identity(ring, 3, 1).unwrap();
        assert_eq!(id1.tensor(&id1).unwrap(), id2);
        let scalar = TensorMap::identity(ring, 3, 0).unwrap();
        assert_eq!(s.tensor(&scalar).unwrap(), s);
        assert_eq!(scalar.tensor(&s).unwrap(), s);
        assert!(s.after(&id1).is_err());
    }

    #[test]
    fn coefficients_cancel_modulo_p() {
        // x -> e0 + e1 for both basis elements; its square is 2(e0 + e1)
        let total = |ring| TensorMap {
            ring,
            rank: 2,
            dom: 1,
            cod: 1,
            cols: vec![vec![(0, 1), (1, 1)]; 2],
        };
        let z2 = total(Ring::modulo(2).unwrap());
        let sq = z2.after(&z2).unwrap();
        assert!(sq.column(0).is_empty() && sq.column(1).is_empty());
        let z = total(Ring::Integers);
        assert_eq!(z.after(&z).unwrap().column(1), &[(0, 2), (1, 2)]);
        assert!(Ring::modulo(9).is_err());
        assert_eq!(Ring::Integers.reduce(-3), -3);
        assert_eq!(Ring::default().reduce(-3), 4);
    }

    #[test]
    fn size_guard() {
        assert!(basis_size(6, 4).is_ok());
        assert!(matches!(basis_size(6, 5), Err(Error::SizeGuard { .. })));
    }
}
