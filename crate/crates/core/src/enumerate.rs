//! Canonical enumeration of hom-sets.

use crate::morphism::{Entry, Fiber, IfMor, IfasMor, Kind, Morphism};
use crate::{par, Error, Label, Result};

/// Largest hom-set [`enumerate_hom`] will materialise.
pub const MAX_HOM: u128 = 10_000_000;

/// `|Hom(n, m)|` by the closed formulas: `2^n n! C(n+m-1, n)` for IF(as),
/// `(2m)^n` for IF.
pub fn hom_count(n: usize, m: usize, kind: Kind) -> u128 {
    if m == 0 {
        return u128::from(n == 0);
    }
    match kind {
        Kind::Ifas => {
            // 2^n * m (m+1) ... (m+n-1)
            let rising: u128 = (0..n as u128).map(|k| m as u128 + k).product();
            (1u128 << n) * rising
        }
        Kind::If => (2 * m as u128).pow(n as u32),
    }
}

/// Every morphism `n -> m` exactly once, sorted by [`Morphism::encode`].
pub fn enumerate_hom(n: usize, m: usize, kind: Kind) -> Result<Vec<Morphism>> {
    let count = hom_count(n, m, kind);
    if count > MAX_HOM {
        return Err(Error::SizeGuard {
            what: "hom-set",
            value: count,
            limit: MAX_HOM,
        });
    }
    let mut out: Vec<(Vec<u32>, Morphism)> = match kind {
        Kind::Ifas => enumerate_ifas(n, m)
            .into_iter()
            .map(|f| (f.encode(), f.into()))
            .collect(),
        Kind::If => enumerate_if(n, m)
            .into_iter()
            .map(|f| (f.encode(), f.into()))
            .collect(),
    };
    par::sort_by_key(&mut out);
    Ok(out.into_iter().map(|(_, f)| f).collect())
}

/// Inserts elements `0..n` one at a time into any fiber position with any label;
/// each morphism arises from exactly one insertion history.
fn enumerate_ifas(n: usize, m: usize) -> Vec<IfasMor> {
    if m == 0 {
        return if n == 0 {
            vec![IfasMor::identity(0)]
        } else {
            Vec::new()
        };
    }
    let mut partial: Vec<Vec<Vec<Entry>>> = vec![vec![Vec::new(); m]];
    for x in 0..n {
        let mut next = Vec::with_capacity(partial.len() * 2 * (m + x));
        for fibers in &partial {
            for (i, fiber) in fibers.iter().enumerate() {
                for pos in 0..=fiber.len() {
                    for label in Label::ALL {
                        let mut f = fibers.clone();
                        f[i].insert(pos, Entry::new(x, label));
                        next.push(f);
                    }
                }
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|fibers| IfasMor::from_fibers_unchecked(n, fibers.into_iter().map(Fiber).collect()))
        .collect()
}

fn enumerate_if(n: usize, m: usize) -> Vec<IfMor> {
    let mut partial: Vec<Vec<(usize, Label)>> = vec![Vec::new()];
    for _ in 0..n {
        partial = partial
            .into_iter()
            .flat_map(|a| {
                (0..m).flat_map(move |y| {
                    let a = a.clone();
                    Label::ALL.into_iter().map(move |l| {
                        let mut b = a.clone();
                        b.push((y, l));
                        b
                    })
                })
            })
            .collect();
    }
    partial
        .into_iter()
        .map(|a| IfMor::new(m, a).expect("targets in range"))
        .collect()
}
