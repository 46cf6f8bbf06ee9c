//! The free involutive monoid on a set of generators: words in letters `x_k`
//! and `x_k*`, with `star` reversing a word and flipping every letter.

use std::fmt;

use rand::Rng;

use crate::morphism::IfasMor;
use crate::{Error, Label, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: u32,
    pub starred: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvWord(pub Vec<Letter>);

impl InvWord {
    pub fn empty() -> InvWord {
        InvWord(Vec::new())
    }

    pub fn generator(gen: u32) -> InvWord {
        InvWord(vec![Letter { gen, starred: false }])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn star(&self) -> InvWord {
        InvWord(
            self.0
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen,
                    starred: !l.starred,
                })
                .collect(),
        )
    }

    pub fn concat(&self, other: &InvWord) -> InvWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        InvWord(letters)
    }

    fn act(&self, a: Label) -> InvWord {
        match a {
            Label::One => self.clone(),
            Label::T => self.star(),
        }
    }

    /// A random word of length `0..=max_len` over `gens` generators.
    pub fn random(rng: &mut impl Rng, gens: u32, max_len: usize) -> InvWord {
        let len = rng.gen_range(0..=max_len);
        InvWord(
            (0..len)
                .map(|_| Letter {
                    gen: rng.gen_range(0..gens),
                    starred: rng.gen(),
                })
                .collect(),
        )
    }
}

impl fmt::Display for InvWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}{}", l.gen + 1, if l.starred { "*" } else { "" })?;
        }
        Ok(())
    }
}

/// Output `i` is the concatenation, in fiber order, of `w_x` (label 1) or
/// `star(w_x)` (label t) over the fiber of `i`.
pub fn eval_monoid(f: &IfasMor, words: &[InvWord]) -> Result<Vec<InvWord>> {
    if words.len() != f.dom() {
        return Err(Error::ObjectMismatch {
            expected: f.dom(),
            found: words.len(),
        });
    }
    Ok(f.fibers()
        .iter()
        .map(|fib| {
            InvWord(
                fib.entries()
                    .iter()
                    .flat_map(|e| words[e.elem].act(e.label).0)
                    .collect(),
            )
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::{inv, mult, unit};

    fn x(k: u32) -> InvWord {
        InvWord::generator(k)
    }

    #[test]
    fn fundamental_morphisms() {
        let (x1, x2) = (x(0), x(1));
        assert_eq!(
            eval_monoid(&mult(), &[x1.clone(), x2.clone()]).unwrap(),
            vec![x1.concat(&x2)]
        );
        let out = eval_monoid(&inv(), &[x1.concat(&x2)]).unwrap();
        assert_eq!(out[0].to_string(), "x2* x1*");
        assert_eq!(eval_monoid(&unit(), &[]).unwrap(), vec![InvWord::empty()]);
        assert!(eval_monoid(&mult(), &[x1]).is_err());
    }

    #[test]
    fn star_laws() {
        let w = x(0).concat(&x(1).star()).concat(&x(2));
        assert_eq!(w.star().star(), w);
        assert_eq!(w.star().to_string(), "x3* x2 x1*");
        assert_eq!(InvWord::empty().star(), InvWord::empty());
        assert_eq!(InvWord::empty().to_string(), "1");
    }
}
