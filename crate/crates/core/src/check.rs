//! Law suites.
//!
//! Every suite has an exhaustive tier, bounded by [`Config::max_size`], and a
//! randomized tier of [`Config::trials`] seeded cases. Each failure carries the
//! offending inputs in the text DSL. Cases are evaluated through [`crate::par`]
//! and collected in case order, so a report depends only on its configuration.

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand::Rng;
use serde::Serialize;

use crate::doublecat::{
    complete_star, fundamental_bimorphisms, is_bimorphism, paste_h, paste_v, Bimorphism, Flavor,
};
use crate::enumerate::{enumerate_hom, hom_count};
use crate::factor::{
    distribute, factorize, factorize_if, permutations, HyperoctahedralGroup, OrderPreserving,
    SignedPermutation,
};
use crate::finset::{pullback, SetMap};
use crate::models::{eval_monoid, GroupAlgebra, InvWord, TensorMap};
use crate::morphism::{compose, inv, mult, unit, Entry, Fiber, IfasMor, Kind, Morphism};
use crate::par::{self, Exec};
use crate::random::{self, case_rng, CaseRng};
use crate::spans::{
    compose_spans, inject_comonoid, inject_monoid, symmetry_span, tensor_spans, QFlavor, Span,
};
use crate::{Label, Result};

pub const SUITES: [&str; 8] = [
    "homcount",
    "category",
    "factor",
    "distributive",
    "star",
    "prop",
    "bimonoid",
    "free",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub exec: Exec,
    pub seed: u64,
    pub trials: usize,
    pub max_size: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            exec: Exec::Parallel,
            seed: 0,
            trials: 1000,
            max_size: 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub law: String,
    pub input: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub wall: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Suites plus cases and failures, ignoring wall time.
    pub fn same_outcome(&self, other: &Report) -> bool {
        (&self.suite, self.cases, &self.failures) == (&other.suite, other.cases, &other.failures)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite {}: {} cases, {} failures",
            self.suite,
            self.cases,
            self.failures.len()
        )?;
        for fail in &self.failures {
            write!(f, "\n  {}: {}", fail.law, fail.input)?;
        }
        Ok(())
    }
}

struct Suite {
    name: String,
    cfg: Config,
    cases: u64,
    failures: Vec<Failure>,
    laws: u64,
    started: Instant,
}

impl Suite {
    fn new(name: impl Into<String>, cfg: &Config) -> Suite {
        Suite {
            name: name.into(),
            cfg: *cfg,
            cases: 0,
            failures: Vec::new(),
            laws: 0,
            started: Instant::now(),
        }
    }

    fn record(&mut self, law: &str, cases: usize, bad: Vec<String>) {
        self.cases += cases as u64;
        self.failures.extend(bad.into_iter().map(|input| Failure {
            law: law.to_string(),
            input,
        }));
    }

    /// Checks `law` on every item. `f` returns the reproducer of a failure.
    fn over<T, F>(&mut self, law: &str, items: &[T], f: F)
    where
        T: Sync,
        F: Fn(&T) -> Option<String> + Sync + Send,
    {
        self.laws += 1;
        let bad = par::filter_map_range(self.cfg.exec, items.len(), |k| f(&items[k]));
        self.record(law, items.len(), bad);
    }

    /// Checks `law` on `trials` cases, case `k` drawing from its own stream.
    fn random<F>(&mut self, law: &str, trials: usize, f: F)
    where
        F: Fn(&mut CaseRng) -> Option<String> + Sync + Send,
    {
        self.laws += 1;
        let (seed, salt) = (self.cfg.seed, self.laws << 40);
        let bad = par::filter_map_range(self.cfg.exec, trials, |k| {
            f(&mut case_rng(seed, salt | k as u64))
        });
        self.record(law, trials, bad);
    }

    fn single(&mut self, law: &str, ok: bool, input: impl FnOnce() -> String) {
        self.laws += 1;
        let bad = if ok { vec![] } else { vec![input()] };
        self.record(law, 1, bad);
    }

    fn finish(self) -> Report {
        Report {
            suite: self.name,
            cases: self.cases,
            failures: self.failures,
            wall: self.started.elapsed(),
        }
    }
}

fn fail_unless(ok: bool, input: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(input)
}

fn show(ms: &[&dyn fmt::Display]) -> String {
    ms.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ; ")
}

/// `homs[a][b]` = every morphism `a -> b`, for `a, b <= max`.
fn all_homs(kind: Kind, max: usize) -> Result<Vec<Vec<Vec<Morphism>>>> {
    (0..=max)
        .map(|a| (0..=max).map(|b| enumerate_hom(a, b, kind)).collect())
        .collect()
}

fn flat(homs: &[Vec<Vec<Morphism>>]) -> Vec<Morphism> {
    homs.iter().flatten().flatten().cloned().collect()
}

/// Composable pairs `(f, g)` with `f: a -> b`, `g: b -> c`.
fn composable_pairs(homs: &[Vec<Vec<Morphism>>]) -> Vec<(Morphism, Morphism)> {
    let n = homs.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for f in &homs[a][b] {
                    for g in &homs[b][c] {
                        out.push((f.clone(), g.clone()));
                    }
                }
            }
        }
    }
    out
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

/// Enumerated hom-set sizes against the closed formulas, and distinctness.
pub fn homcount(cfg: &Config) -> Result<Report> {
    let mut s = Suite::new("homcount", cfg);
    let max = cfg.max_size.min(4);
    let mut shapes = Vec::new();
    for kind in [Kind::Ifas, Kind::If] {
        for n in 0..=max {
            for m in 0..=max {
                shapes.push((kind, n, m));
            }
        }
    }
    s.over("hom-set size", &shapes, |&(kind, n, m)| {
        let (n128, m128) = (n as u128, m as u128);
        let want = match (kind, m) {
            (_, 0) => u128::from(n == 0),
            (Kind::Ifas, _) => (1u128 << n) * factorial(n128) * binomial(n128 + m128 - 1, n128),
            (Kind::If, _) => (2 * m128).pow(n as u32),
        };
        let homs = match enumerate_hom(n, m, kind) {
            Ok(h) => h,
            Err(e) => return Some(format!("{kind} {n} -> {m}: {e}")),
        };
        let distinct: HashSet<_> = homs.iter().collect();
        let ok = homs.len() as u128 == want
            && hom_count(n, m, kind) == want
            && distinct.len() == homs.len()
            && homs.iter().all(|f| f.dom() == n && f.cod() == m);
        fail_unless(ok, || {
            format!("{kind} {n} -> {m}: enumerated {}, expected {want}", homs.len())
        })
    });
    Ok(s.finish())
}

fn is_partition(m: &Morphism) -> bool {
    match m {
        Morphism::Ifas(f) => IfasMor::new(f.dom(), f.fibers().to_vec()).is_ok(),
        Morphism::If(f) => f.assignments().iter().all(|&(y, _)| y < f.cod()),
    }
}

fn rand_mor(rng: &mut CaseRng, kind: Kind, n: usize, m: usize) -> Morphism {
    random::morphism(rng, kind, n, m)
}

/// Random objects `a, b, c, ...` with maps between consecutive ones possible.
fn chain(rng: &mut CaseRng, len: usize, max: usize) -> Vec<usize> {
    let mut objs = vec![random::size(rng, max)];
    for _ in 1..len {
        let prev = *objs.last().unwrap();
        // a map prev -> next needs next > 0 unless prev = 0
        let next = if prev > 0 {
            1 + random::size(rng, max - 1)
        } else {
            random::size(rng, max)
        };
        objs.push(next);
    }
    objs
}

/// Category and symmetric monoidal laws for IF(as) or IF.
pub fn category(cfg: &Config, kind: Kind) -> Result<Report> {
    let mut s = Suite::new(format!("category[{}]", kind.name()), cfg);
    let max = cfg.max_size.min(2);
    let homs = all_homs(kind, max)?;
    let every = flat(&homs);
    let pairs = composable_pairs(&homs);

    s.over("left and right units", &every, |f| {
        let l = Morphism::identity(kind, f.cod()).after(f).ok();
        let r = f.after(&Morphism::identity(kind, f.dom())).ok();
        fail_unless(l.as_ref() == Some(f) && r.as_ref() == Some(f), || show(&[f]))
    });
    s.over("associativity", &pairs, |(f, g)| {
        let gf = g.after(f).ok()?;
        homs[g.cod()].iter().flatten().find_map(|h| {
            let left = h.after(&gf).ok();
            let right = h.after(g).and_then(|hg| hg.after(f)).ok();
            fail_unless(left.is_some() && left == right, || show(&[f, g, h]))
        })
    });
    s.over("partition invariant", &pairs, |(f, g)| {
        let ok = g.after(f).is_ok_and(|c| is_partition(&c))
            && f.tensor(g).is_ok_and(|t| is_partition(&t));
        fail_unless(ok, || show(&[f, g]))
    });
    s.over("interchange", &pairs, |(f1, f2)| {
        let f21 = f2.after(f1).ok()?;
        pairs.iter().find_map(|(g1, g2)| {
            let lhs = f2.tensor(g2).and_then(|t| t.after(&f1.tensor(g1)?)).ok();
            let rhs = g2.after(g1).and_then(|g21| f21.tensor(&g21)).ok();
            fail_unless(lhs.is_some() && lhs == rhs, || show(&[f1, f2, g1, g2]))
        })
    });
    let naturality = |f: &Morphism, g: &Morphism| {
        let lhs = Morphism::symmetry(kind, f.cod(), g.cod()).after(&f.tensor(g).ok()?).ok();
        let rhs = g.tensor(f).and_then(|t| t.after(&Morphism::symmetry(kind, f.dom(), g.dom()))).ok();
        fail_unless(lhs.is_some() && lhs == rhs, || show(&[f, g]))
    };
    s.over("symmetry naturality", &every, |f| {
        every.iter().find_map(|g| naturality(f, g))
    });
    let sizes: Vec<(usize, usize)> = (0..=3).flat_map(|n| (0..=3).map(move |m| (n, m))).collect();
    s.over("symmetry involutive", &sizes, |&(n, m)| {
        let c = Morphism::symmetry(kind, m, n).after(&Morphism::symmetry(kind, n, m)).ok();
        fail_unless(c == Some(Morphism::identity(kind, n + m)), || format!("{n} {m}"))
    });
    s.over("tensor unit", &every, |f| {
        let e = Morphism::identity(kind, 0);
        let ok = f.tensor(&e).ok().as_ref() == Some(f) && e.tensor(f).ok().as_ref() == Some(f);
        fail_unless(ok, || show(&[f]))
    });

    if kind == Kind::Ifas {
        let (m, i) = (mult(), inv());
        let lhs = compose(&i, &m)?;
        let rhs = compose(&m, &compose(&i.tensor(&i), &IfasMor::symmetry(1, 1))?)?;
        let want = IfasMor::from_lists(2, &[&[(1, Label::T), (0, Label::T)]])?;
        s.single("antihomomorphism identity", lhs == rhs && lhs == want, || {
            show(&[&lhs, &rhs])
        });
        s.over("forgetful functor", &pairs, |(f, g)| {
            let (Some(f), Some(g)) = (f.as_ifas(), g.as_ifas()) else {
                return Some(show(&[f, g]));
            };
            let composite = compose(g, f).ok()?.to_if();
            let ok = g.to_if().after(&f.to_if()).ok() == Some(composite)
                && f.tensor(g).to_if() == f.to_if().tensor(&g.to_if());
            fail_unless(ok, || show(&[f, g]))
        });
        s.over("fas closure", &pairs, |(f, g)| {
            let (f, g) = (f.as_ifas()?, g.as_ifas()?);
            if !(f.is_fas() && g.is_fas()) {
                return None;
            }
            let ok = compose(g, f).is_ok_and(|c| c.is_fas()) && f.tensor(g).is_fas();
            fail_unless(ok, || show(&[f, g]))
        });
    }

    s.random("random associativity", cfg.trials, |rng| {
        let o = chain(rng, 4, 5);
        let f = rand_mor(rng, kind, o[0], o[1]);
        let g = rand_mor(rng, kind, o[1], o[2]);
        let h = rand_mor(rng, kind, o[2], o[3]);
        let lhs = h.after(&g.after(&f).ok()?).ok();
        let rhs = h.after(&g).and_then(|hg| hg.after(&f)).ok();
        fail_unless(lhs.is_some() && lhs == rhs, || show(&[&f, &g, &h]))
    });
    s.random("random units", cfg.trials, |rng| {
        let o = chain(rng, 2, 5);
        let f = rand_mor(rng, kind, o[0], o[1]);
        let ok = Morphism::identity(kind, f.cod()).after(&f).ok().as_ref() == Some(&f)
            && f.after(&Morphism::identity(kind, f.dom())).ok().as_ref() == Some(&f);
        fail_unless(ok, || show(&[&f]))
    });
    s.random("random interchange", cfg.trials, |rng| {
        let (o, p) = (chain(rng, 3, 4), chain(rng, 3, 4));
        let f1 = rand_mor(rng, kind, o[0], o[1]);
        let f2 = rand_mor(rng, kind, o[1], o[2]);
        let g1 = rand_mor(rng, kind, p[0], p[1]);
        let g2 = rand_mor(rng, kind, p[1], p[2]);
        let lhs = f2.tensor(&g2).and_then(|t| t.after(&f1.tensor(&g1)?)).ok();
        let rhs = f2.after(&f1).and_then(|a| a.tensor(&g2.after(&g1)?)).ok();
        fail_unless(lhs.is_some() && lhs == rhs, || show(&[&f1, &f2, &g1, &g2]))
    });
    s.random("random symmetry naturality", cfg.trials, |rng| {
        let (o, p) = (chain(rng, 2, 3), chain(rng, 2, 3));
        let f = rand_mor(rng, kind, o[0], o[1]);
        let g = rand_mor(rng, kind, p[0], p[1]);
        naturality(&f, &g)
    });
    s.random("random tensor associativity", cfg.trials, |rng| {
        let ms: Vec<Morphism> = (0..3)
            .map(|_| {
                let o = chain(rng, 2, 3);
                rand_mor(rng, kind, o[0], o[1])
            })
            .collect();
        let lhs = ms[0].tensor(&ms[1]).and_then(|t| t.tensor(&ms[2])).ok();
        let rhs = ms[1].tensor(&ms[2]).and_then(|t| ms[0].tensor(&t)).ok();
        fail_unless(lhs.is_some() && lhs == rhs, || show(&[&ms[0], &ms[1], &ms[2]]))
    });
    Ok(s.finish())
}

/// Unique factorisation through signed permutations and order-preserving maps.
pub fn factor(cfg: &Config) -> Result<Report> {
    let mut s = Suite::new("factor", cfg);
    let max = cfg.max_size.min(3);
    let homs = flat(&all_homs(Kind::Ifas, max)?);
    let roundtrip = |f: &IfasMor| {
        let (phi, g) = factorize(f);
        let ok = SignedPermutation::new(g.as_mor().clone()).is_ok()
            && OrderPreserving::new(phi.as_mor().clone()).is_ok()
            && compose(phi.as_mor(), g.as_mor()).ok().as_ref() == Some(f);
        fail_unless(ok, || show(&[f]))
    };
    s.over("recomposition", &homs, |f| roundtrip(f.as_ifas()?));

    // the composites phi • g over all pairs hit every morphism exactly once
    let umax = cfg.max_size.min(2);
    let shapes: Vec<(usize, usize)> =
        (0..=umax).flat_map(|n| (0..=umax).map(move |m| (n, m))).collect();
    s.over("uniqueness", &shapes, |&(n, m)| {
        let group = HyperoctahedralGroup::new(n).ok()?.elements();
        let phis = enumerate_hom(n, m, Kind::Ifas).ok()?;
        let mut seen = HashSet::new();
        let mut count = 0u128;
        for phi in phis.iter().filter_map(|p| p.as_ifas()).filter(|p| p.is_order_preserving()) {
            for g in &group {
                count += 1;
                let f = compose(phi, g.as_mor()).ok()?;
                if !seen.insert(f) {
                    return Some(format!("{n} -> {m}: two factorisations of one morphism"));
                }
            }
        }
        fail_unless(count == hom_count(n, m, Kind::Ifas), || {
            format!("{n} -> {m}: {count} factorisations for {} morphisms", hom_count(n, m, Kind::Ifas))
        })
    });
    let if_homs = flat(&all_homs(Kind::If, max)?);
    s.over("IF label splitting", &if_homs, |f| {
        let f = f.as_if()?;
        let (plain, x) = factorize_if(f);
        let ok = plain.is_label_trivial()
            && x.underlying() == SetMap::identity(f.dom())
            && plain.after(&x).ok().as_ref() == Some(f);
        fail_unless(ok, || show(&[f]))
    });
    let ranks: Vec<usize> = (0..=cfg.max_size.clamp(3, 4)).collect();
    s.over("hyperoctahedral group", &ranks, |&n| {
        let h = HyperoctahedralGroup::new(n).ok()?;
        let elems = h.elements();
        let want = (1u128 << n) * factorial(n as u128);
        let distinct: HashSet<_> = elems.iter().collect();
        let ok = elems.len() as u128 == want
            && h.order() == want
            && distinct.len() == elems.len()
            && elems.iter().all(|g| {
                h.multiply(g, &h.inverse(g)).ok() == Some(h.identity())
                    && h.multiply(&h.inverse(g), g).ok() == Some(h.identity())
            });
        fail_unless(ok, || format!("H_{n}"))
    });
    s.random("random recomposition", cfg.trials, |rng| {
        let (n, m) = (random::size(rng, 6), 1 + random::size(rng, 5));
        roundtrip(&random::ifas(rng, n, m))
    });
    Ok(s.finish())
}

/// Compatibility of [`distribute`] with identities and both compositions.
pub fn distributive(cfg: &Config) -> Result<Report> {
    let mut s = Suite::new("distributive", cfg);
    let max = cfg.max_size.min(2);
    let mut phis: Vec<OrderPreserving> = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            for f in enumerate_hom(a, b, Kind::Ifas)? {
                if let Ok(p) = OrderPreserving::new(f.as_ifas().expect("ifas").clone()) {
                    phis.push(p);
                }
            }
        }
    }
    let groups: Vec<Vec<SignedPermutation>> = (0..=max)
        .map(|n| HyperoctahedralGroup::new(n).map(|h| h.elements()))
        .collect::<Result<_>>()?;

    let law_g = |g1: &SignedPermutation, g2: &SignedPermutation, phi: &OrderPreserving| {
        let (p1, h1) = distribute(g1, phi).ok()?;
        let (p2, h2) = distribute(g2, &p1).ok()?;
        let direct = distribute(&g2.multiply(g1).ok()?, phi).ok()?;
        let ok = direct.0 == p2 && Some(direct.1) == h2.multiply(&h1).ok();
        fail_unless(ok, || show(&[g1.as_mor(), g2.as_mor(), phi.as_mor()]))
    };
    let law_phi = |g: &SignedPermutation, phi2: &OrderPreserving, phi1: &OrderPreserving| {
        let (q2, h) = distribute(g, phi2).ok()?;
        let (q1, k) = distribute(&h, phi1).ok()?;
        let phi21 = OrderPreserving::new(compose(phi2.as_mor(), phi1.as_mor()).ok()?).ok()?;
        let direct = distribute(g, &phi21).ok()?;
        let q21 = compose(q2.as_mor(), q1.as_mor()).ok()?;
        let ok = direct.0.as_mor() == &q21 && direct.1 == k;
        fail_unless(ok, || show(&[g.as_mor(), phi2.as_mor(), phi1.as_mor()]))
    };
    let law_id = |g: &SignedPermutation, phi: &OrderPreserving| {
        let (n, m) = (phi.as_mor().dom(), phi.as_mor().cod());
        let a = distribute(&SignedPermutation::identity(m), phi).ok()?;
        let idn = OrderPreserving::from_sizes(&vec![1; g.size()]);
        let b = distribute(g, &idn).ok()?;
        let ok = a == (phi.clone(), SignedPermutation::identity(n)) && b == (idn, g.clone());
        fail_unless(ok, || show(&[g.as_mor(), phi.as_mor()]))
    };

    s.over("identities", &phis, |phi| {
        let m = phi.as_mor().cod();
        groups[m].iter().find_map(|g| law_id(g, phi))
    });
    s.over("composition of permutations", &phis, |phi| {
        let grp = &groups[phi.as_mor().cod()];
        grp.iter().find_map(|g1| grp.iter().find_map(|g2| law_g(g1, g2, phi)))
    });
    s.over("composition of order-preserving maps", &phis, |phi1| {
        phis.iter()
            .filter(|phi2| phi2.as_mor().dom() == phi1.as_mor().cod())
            .find_map(|phi2| groups[phi2.as_mor().cod()].iter().find_map(|g| law_phi(g, phi2, phi1)))
    });

    let rand_op = |rng: &mut CaseRng, n: usize, m: usize| random::order_preserving(rng, n, m);
    s.random("random composition of permutations", cfg.trials, |rng| {
        let o = chain(rng, 2, 4);
        let phi = rand_op(rng, o[0], o[1]);
        let (g1, g2) = (random::signed_permutation(rng, o[1]), random::signed_permutation(rng, o[1]));
        law_g(&g1, &g2, &phi)
    });
    s.random("random composition of order-preserving maps", cfg.trials, |rng| {
        let o = chain(rng, 3, 4);
        let phi1 = rand_op(rng, o[0], o[1]);
        let phi2 = rand_op(rng, o[1], o[2]);
        law_phi(&random::signed_permutation(rng, o[2]), &phi2, &phi1)
    });
    s.random("random identities", cfg.trials, |rng| {
        let o = chain(rng, 2, 4);
        law_id(&random::signed_permutation(rng, o[1]), &rand_op(rng, o[0], o[1]))
    });
    Ok(s.finish())
}

/// Every morphism of `kind` over the set map `map`: all fiber orders (IF(as)
/// only) and all labels.
pub fn lifts(kind: Kind, map: &SetMap) -> Vec<Morphism> {
    let n = map.dom();
    let orders: Vec<Vec<Vec<usize>>> = match kind {
        Kind::If => vec![(0..map.cod()).map(|i| map.preimage(i)).collect()],
        Kind::Ifas => {
            let mut acc: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
            for i in 0..map.cod() {
                let pre = map.preimage(i);
                let mut next = Vec::new();
                for partial in &acc {
                    for p in permutations(pre.len()) {
                        let mut v = partial.clone();
                        v.push(p.iter().map(|&k| pre[k]).collect());
                        next.push(v);
                    }
                }
                acc = next;
            }
            acc
        }
    };
    let mut out = Vec::new();
    for order in &orders {
        for bits in 0..1u32 << n {
            let label = |x: usize| if bits >> x & 1 == 1 { Label::T } else { Label::One };
            let fibers = order
                .iter()
                .map(|fib| Fiber(fib.iter().map(|&x| Entry::new(x, label(x))).collect()))
                .collect();
            out.push(Morphism::from_fibers(kind, n, fibers).expect("a partition"));
        }
    }
    out
}

/// Star completion from first principles for label-trivial IF(as) input: the
/// set pullback with fibers copied in order.
fn plain_star(bottom: &IfasMor, right: &IfasMor) -> (IfasMor, IfasMor) {
    let (bu, ru) = (bottom.underlying(), right.underlying());
    let mut pairs = Vec::new();
    for y in 0..right.dom() {
        for x in 0..bottom.dom() {
            if bu.apply(x) == ru.apply(y) {
                pairs.push((y, x));
            }
        }
    }
    let at = |x: usize, y: usize| pairs.iter().position(|&p| p == (y, x)).expect("a pair");
    let loc_b = bottom.locate();
    let loc_r = right.locate();
    let top = (0..right.dom())
        .map(|y| {
            let fib = bottom.fiber(loc_r[y].target);
            Fiber(fib.entries().iter().map(|e| Entry::new(at(e.elem, y), Label::One)).collect())
        })
        .collect();
    let left = (0..bottom.dom())
        .map(|x| {
            let fib = right.fiber(loc_b[x].target);
            Fiber(fib.entries().iter().map(|e| Entry::new(at(x, e.elem), Label::One)).collect())
        })
        .collect();
    (
        IfasMor::new(pairs.len(), top).expect("partition"),
        IfasMor::new(pairs.len(), left).expect("partition"),
    )
}

/// Whether `F(top) ∘ G(left) = G(right) ∘ F(bottom)` on every basis tuple of
/// the algebra; returns a failing tuple otherwise.
pub fn square_commutes(alg: &GroupAlgebra, b: &Bimorphism) -> Option<Vec<usize>> {
    let k = alg.rank();
    let (tf, bf) = (b.top.fibers(), b.bottom.fibers());
    let (ll, rl) = (b.left.locate(), b.right.locate());
    let n = b.bottom.dom();
    let total = k.checked_pow(n as u32)?;
    let (mut x, mut z, mut lhs, mut m, mut rhs) = (vec![], vec![], vec![], vec![], vec![]);
    for j in 0..total {
        crate::models::tensor::decode_tuple(k, n, j, &mut x);
        z.clear();
        lhs.clear();
        m.clear();
        rhs.clear();
        alg.push_g(&ll, &x, &mut z);
        alg.push_f(&tf, &z, &mut lhs);
        alg.push_f(&bf, &x, &mut m);
        alg.push_g(&rl, &m, &mut rhs);
        if lhs != rhs {
            return Some(x);
        }
    }
    None
}

fn algebra_for(flavor: Flavor) -> GroupAlgebra {
    use crate::models::{GroupModel, Ring};
    let group = match flavor.horizontal() {
        Kind::Ifas => GroupModel::s3(),
        Kind::If => GroupModel::c3(),
    };
    GroupAlgebra::new(group, Ring::default())
}

/// Every (bottom, right) pair with a common codomain, objects `<= max`, in
/// every flavor.
fn cospans(max: usize) -> Result<Vec<(Flavor, Morphism, Morphism)>> {
    let mut out = Vec::new();
    for flavor in Flavor::ALL {
        let h = all_homs(flavor.horizontal(), max)?;
        let v = all_homs(flavor.vertical(), max)?;
        for q in 0..=max {
            for bottom in h.iter().flat_map(|row| &row[q]) {
                for right in v.iter().flat_map(|row| &row[q]) {
                    out.push((flavor, bottom.clone(), right.clone()));
                }
            }
        }
    }
    Ok(out)
}

/// Star completions: goldens, uniqueness, degenerate cases, pasting, and
/// semantic soundness in the group bialgebra.
pub fn star(cfg: &Config) -> Result<Report> {
    let mut s = Suite::new("star", cfg);
    let (m, u, i): (Morphism, Morphism, Morphism) = (mult().into(), unit().into(), inv().into());
    let names = ["B1", "B2", "B3", "B4", "J"];
    let inputs = [(&m, &m), (&u, &u), (&m, &u), (&u, &m), (&i, &i)];
    for ((name, (bottom, right)), want) in names.iter().zip(inputs).zip(fundamental_bimorphisms()) {
        let got = complete_star(bottom, right, Flavor::Ifas2)?;
        s.single(&format!("golden {name}"), got == want && is_bimorphism(&got), || {
            show(&[bottom, right])
        });
    }

    let cases = cospans(cfg.max_size.min(2))?;
    s.over("uniqueness over the canonical apex", &cases, |(flavor, bottom, right)| {
        let star = complete_star(bottom, right, *flavor).ok()?;
        let pb = pullback(&bottom.underlying(), &right.underlying()).ok()?;
        let mut found = Vec::new();
        for top in lifts(flavor.horizontal(), &pb.proj_p) {
            for left in lifts(flavor.vertical(), &pb.proj_m) {
                let sq = Bimorphism {
                    flavor: *flavor,
                    top: top.clone(),
                    left,
                    right: right.clone(),
                    bottom: bottom.clone(),
                };
                if is_bimorphism(&sq) {
                    found.push(sq);
                }
            }
        }
        fail_unless(found.len() == 1 && found[0] == star, || {
            format!("{flavor}: {} ({} completions)", show(&[bottom, right]), found.len())
        })
    });
    s.over("label-trivial completion copies fibers", &cases, |(flavor, bottom, right)| {
        let (Some(b), Some(r)) = (bottom.as_ifas(), right.as_ifas()) else {
            return None;
        };
        if *flavor != Flavor::Ifas2 || b.labels().iter().chain(&r.labels()).any(|a| a.is_twist()) {
            return None;
        }
        let star = complete_star(bottom, right, *flavor).ok()?;
        let (top, left) = plain_star(b, r);
        fail_unless(star.top == top.into() && star.left == left.into(), || show(&[b, r]))
    });
    let sound_cases = cospans(cfg.max_size.min(3))?;
    s.over("soundness in the group bialgebra", &sound_cases, |(flavor, bottom, right)| {
        let sq = complete_star(bottom, right, *flavor).ok()?;
        let alg = algebra_for(*flavor);
        square_commutes(&alg, &sq).map(|x| format!("{flavor}: {} at {x:?}", show(&[bottom, right])))
    });

    s.random("random pasting", cfg.trials, |rng| {
        let flavor = Flavor::ALL[rng.gen_range(0..4)];
        let (h, v) = (flavor.horizontal(), flavor.vertical());
        let o = chain(rng, 3, 3);
        let (f1, f2) = (rand_mor(rng, h, o[0], o[1]), rand_mor(rng, h, o[1], o[2]));
        let p = random::dom_for(rng, o[2], 3);
        let phi = rand_mor(rng, v, p, o[2]);
        let east = complete_star(&f2, &phi, flavor).ok()?;
        let west = complete_star(&f1, &east.left, flavor).ok()?;
        let horizontal = paste_h(&west, &east).ok();
        let q = random::dom_for(rng, p, 3);
        let psi = rand_mor(rng, v, q, p);
        let north = complete_star(&east.top, &psi, flavor).ok()?;
        let vertical = paste_v(&north, &east).ok();
        let ok = horizontal.is_some_and(|b| is_bimorphism(&b)) && vertical.is_some_and(|b| is_bimorphism(&b));
        fail_unless(ok, || format!("{flavor}: {}", show(&[&f1, &f2, &phi, &psi])))
    });
    s.random("random soundness", cfg.trials, |rng| {
        let flavor = Flavor::ALL[rng.gen_range(0..4)];
        let (mm, q) = (random::size(rng, 3), 1 + random::size(rng, 2));
        let p = random::size(rng, 3);
        let bottom = rand_mor(rng, flavor.horizontal(), mm, q);
        let right = rand_mor(rng, flavor.vertical(), p, q);
        let sq = complete_star(&bottom, &right, flavor).ok()?;
        square_commutes(&algebra_for(flavor), &sq)
            .map(|x| format!("{flavor}: {} at {x:?}", show(&[&bottom, &right])))
    });
    Ok(s.finish())
}

/// Every canonical span with `src, tgt <= max_obj` and apex `<= max_apex`.
pub fn all_spans(flavor: QFlavor, max_obj: usize, max_apex: usize) -> Result<Vec<Span>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for src in 0..=max_obj {
        for tgt in 0..=max_obj {
            for apex in 0..=max_apex {
                let lefts = enumerate_hom(apex, src, flavor.comonoid())?;
                let rights = enumerate_hom(apex, tgt, flavor.monoid())?;
                for l in &lefts {
                    for r in &rights {
                        let sp = Span::new(flavor, l.clone(), r.clone())?;
                        if seen.insert(sp.clone()) {
                            out.push(sp);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Equivalence by search over every relabeling of the apex.
pub fn brute_equivalent(a: &Span, b: &Span) -> bool {
    if (a.flavor(), a.src(), a.tgt(), a.apex()) != (b.flavor(), b.src(), b.tgt(), b.apex()) {
        return false;
    }
    let Ok(h) = HyperoctahedralGroup::new(a.apex()) else {
        return false;
    };
    h.elements().iter().any(|g| {
        a.relabel(g)
            .is_ok_and(|r| r.left() == b.left() && r.right() == b.right())
    })
}

fn rand_span(rng: &mut CaseRng, flavor: QFlavor, src: usize, tgt: usize, apex: usize) -> Span {
    random::span(rng, flavor, src, tgt, apex)
}

/// PROP laws for spans of one flavor.
pub fn prop(cfg: &Config, flavor: QFlavor) -> Result<Report> {
    let mut s = Suite::new(format!("prop[{flavor}]"), cfg);
    let max = cfg.max_size.min(2);
    let spans = all_spans(flavor, max, max.max(2))?;
    let small: Vec<Span> = spans.iter().filter(|sp| sp.src() <= 1 && sp.tgt() <= 1).cloned().collect();

    s.over("canonical forms", &spans, |sp| fail_unless(sp.is_canonical(), || sp.to_string()));
    s.over("units", &spans, |sp| {
        let l = compose_spans(&Span::identity(flavor, sp.tgt()), sp).ok();
        let r = compose_spans(sp, &Span::identity(flavor, sp.src())).ok();
        fail_unless(l.as_ref() == Some(sp) && r.as_ref() == Some(sp), || sp.to_string())
    });
    let assoc = |a: &Span, b: &Span, c: &Span| {
        let lhs = compose_spans(c, &compose_spans(b, a).ok()?).ok();
        let rhs = compose_spans(&compose_spans(c, b).ok()?, a).ok();
        fail_unless(lhs.is_some() && lhs == rhs, || show(&[a, b, c]))
    };
    let triples_from = if max >= 2 { &small } else { &spans };
    s.over("associativity", triples_from, |a| {
        triples_from.iter().filter(|b| b.src() == a.tgt()).find_map(|b| {
            triples_from.iter().filter(|c| c.src() == b.tgt()).find_map(|c| assoc(a, b, c))
        })
    });

    s.random("random associativity", cfg.trials, |rng| {
        let o: Vec<usize> = (0..4).map(|_| random::size(rng, 3)).collect();
        let a = rand_span(rng, flavor, o[0], o[1], 3);
        let b = rand_span(rng, flavor, o[1], o[2], 3);
        let c = rand_span(rng, flavor, o[2], o[3], 3);
        assoc(&a, &b, &c)
    });
    s.random("random units", cfg.trials, |rng| {
        let (a, b) = (random::size(rng, 3), random::size(rng, 3));
        let sp = rand_span(rng, flavor, a, b, 4);
        let l = compose_spans(&Span::identity(flavor, b), &sp).ok();
        let r = compose_spans(&sp, &Span::identity(flavor, a)).ok();
        fail_unless(l.as_ref() == Some(&sp) && r.as_ref() == Some(&sp), || sp.to_string())
    });
    s.random("random interchange", cfg.trials, |rng| {
        let o: Vec<usize> = (0..6).map(|_| random::size(rng, 2)).collect();
        let s3 = rand_span(rng, flavor, o[0], o[1], 2);
        let s1 = rand_span(rng, flavor, o[1], o[2], 2);
        let s4 = rand_span(rng, flavor, o[3], o[4], 2);
        let s2 = rand_span(rng, flavor, o[4], o[5], 2);
        let lhs = compose_spans(&tensor_spans(&s1, &s2).ok()?, &tensor_spans(&s3, &s4).ok()?).ok();
        let rhs = tensor_spans(&compose_spans(&s1, &s3).ok()?, &compose_spans(&s2, &s4).ok()?).ok();
        fail_unless(lhs.is_some() && lhs == rhs, || show(&[&s1, &s2, &s3, &s4]))
    });
    s.random("random symmetry naturality", cfg.trials, |rng| {
        let o: Vec<usize> = (0..4).map(|_| random::size(rng, 2)).collect();
        let a = rand_span(rng, flavor, o[0], o[1], 2);
        let b = rand_span(rng, flavor, o[2], o[3], 2);
        let lhs = compose_spans(&symmetry_span(flavor, o[1], o[3]), &tensor_spans(&a, &b).ok()?).ok();
        let rhs = compose_spans(&tensor_spans(&b, &a).ok()?, &symmetry_span(flavor, o[0], o[2])).ok();
        fail_unless(lhs.is_some() && lhs == rhs, || show(&[&a, &b]))
    });
    s.random("random injections are strict monoidal functors", cfg.trials, |rng| {
        let (mk, ck) = (flavor.monoid(), flavor.comonoid());
        let o = chain(rng, 3, 3);
        let (f1, f2) = (rand_mor(rng, mk, o[0], o[1]), rand_mor(rng, mk, o[1], o[2]));
        let mono = compose_spans(&inject_monoid(flavor, &f2).ok()?, &inject_monoid(flavor, &f1).ok()?).ok()
            == inject_monoid(flavor, &f2.after(&f1).ok()?).ok();
        let (p1, p2) = (rand_mor(rng, ck, o[0], o[1]), rand_mor(rng, ck, o[1], o[2]));
        // p2: o1 -> o2 gives a span o2 -> o1; it composes before p1's span
        let co = compose_spans(&inject_comonoid(flavor, &p1).ok()?, &inject_comonoid(flavor, &p2).ok()?).ok()
            == inject_comonoid(flavor, &p2.after(&p1).ok()?).ok();
        let tens = tensor_spans(&inject_monoid(flavor, &f1).ok()?, &inject_monoid(flavor, &f2).ok()?).ok()
            == inject_monoid(flavor, &f1.tensor(&f2).ok()?).ok()
            && tensor_spans(&inject_comonoid(flavor, &p1).ok()?, &inject_comonoid(flavor, &p2).ok()?).ok()
                == inject_comonoid(flavor, &p1.tensor(&p2).ok()?).ok();
        fail_unless(mono && co && tens, || show(&[&f1, &f2, &p1, &p2]))
    });
    s.random("well-defined under apex relabeling", cfg.trials.div_ceil(10), |rng| {
        let o: Vec<usize> = (0..3).map(|_| 1 + random::size(rng, 2)).collect();
        let a = rand_span(rng, flavor, o[0], o[1], 4);
        let b = rand_span(rng, flavor, o[1], o[2], 4);
        let want = compose_spans(&b, &a).ok()?;
        let ha = HyperoctahedralGroup::new(a.apex()).ok()?.elements();
        let hb = HyperoctahedralGroup::new(b.apex()).ok()?.elements();
        let bad = ha.iter().any(|h| {
            a.relabel(h).and_then(|r| compose_spans(&b, &r)).ok().as_ref() != Some(&want)
        }) || hb.iter().any(|h| {
            b.relabel(h).and_then(|r| compose_spans(&r, &a)).ok().as_ref() != Some(&want)
        });
        fail_unless(!bad, || show(&[&a, &b]))
    });
    s.random("canonical form against brute-force equivalence", cfg.trials, |rng| {
        let (a, b) = (1 + random::size(rng, 2), 1 + random::size(rng, 2));
        let apex = random::size(rng, 4);
        let left = rand_mor(rng, flavor.comonoid(), apex, a);
        let right = rand_mor(rng, flavor.monoid(), apex, b);
        let sp = Span::representative(flavor, left, right).ok()?;
        let other = if rng.gen() {
            sp.relabel(&random::signed_permutation(rng, apex)).ok()?
        } else {
            let l = rand_mor(rng, flavor.comonoid(), apex, a);
            let r = rand_mor(rng, flavor.monoid(), apex, b);
            Span::representative(flavor, l, r).ok()?
        };
        let canon = sp.canonicalize();
        let sound = brute_equivalent(&sp, &canon);
        let complete = (canon == other.canonicalize()) == brute_equivalent(&sp, &other);
        fail_unless(sound && complete, || show(&[&sp, &other]))
    });
    // Exhaustive tier: every class with objects <= 1 and apex <= 4. The orbit of
    // a canonical span under H_p must canonicalize back to it, and the orbits
    // together must account for every representative of the signature.
    let classes = all_spans(flavor, 1, 4)?;
    let partners: Vec<Span> = all_spans(flavor, 1, 1)?;
    let orbit = |c: &Span| -> Option<HashSet<Span>> {
        let h = HyperoctahedralGroup::new(c.apex()).ok()?.elements();
        h.iter().map(|g| c.relabel(g).ok()).collect()
    };
    s.over("relabeled classes canonicalize back", &classes, |c| {
        let ok = orbit(c).is_some_and(|o| o.iter().all(|r| r.canonicalize() == *c));
        fail_unless(ok, || c.to_string())
    });
    s.over("composition ignores apex relabeling", &classes, |c| {
        let Some(o) = orbit(c) else {
            return Some(c.to_string());
        };
        partners.iter().find_map(|p| {
            let after = (p.src() == c.tgt()).then(|| compose_spans(p, c).ok());
            let before = (p.tgt() == c.src()).then(|| compose_spans(c, p).ok());
            let bad = o.iter().any(|r| {
                after.as_ref().is_some_and(|w| compose_spans(p, r).ok() != *w)
                    || before.as_ref().is_some_and(|w| compose_spans(r, p).ok() != *w)
            });
            fail_unless(!bad, || show(&[c, p]))
        })
    });
    let sizes = par::flat_map_slice(cfg.exec, &classes, |c| {
        vec![((c.src(), c.tgt(), c.apex()), orbit(c).map_or(0, |o| o.len() as u128))]
    });
    let mut covered = std::collections::BTreeMap::new();
    for (sig, n) in sizes {
        *covered.entry(sig).or_insert(0u128) += n;
    }
    let mut missing = Vec::new();
    for src in 0..=1 {
        for tgt in 0..=1 {
            for apex in 0..=4 {
                let total = hom_count(apex, src, flavor.comonoid()) * hom_count(apex, tgt, flavor.monoid());
                let got = covered.get(&(src, tgt, apex)).copied().unwrap_or(0);
                if got != total {
                    missing.push(format!("{src} -> {tgt} over {apex}: {got} of {total}"));
                }
            }
        }
    }
    s.single("orbits cover every representative", missing.is_empty(), || missing.join("; "));
    Ok(s.finish())
}

fn eval_chain(alg: &GroupAlgebra, spans: &[&Span]) -> Option<TensorMap> {
    // spans[0] applied first
    let mut acc = alg.eval_span(spans[0]).ok()?;
    for sp in &spans[1..] {
        acc = alg.eval_span(sp).ok()?.after(&acc).ok()?;
    }
    Some(acc)
}

fn compose_chain(spans: &[&Span]) -> Option<Span> {
    let mut acc = spans[0].clone();
    for sp in &spans[1..] {
        acc = compose_spans(sp, &acc).ok()?;
    }
    Some(acc)
}

/// Functor laws of span evaluation in a group bialgebra, the fundamental
/// squares, and the derived bimonoid identities.
pub fn bimonoid(cfg: &Config, flavor: QFlavor, alg: &GroupAlgebra) -> Result<Report> {
    let mut s = Suite::new(format!("bimonoid[{flavor}, {}, {}]", alg.group.name(), alg.ring), cfg);
    alg.eval_span(&Span::identity(flavor, 0))?;

    let double = flavor.double();
    for (name, b) in ["B1", "B2", "B3", "B4", "J"].iter().zip(fundamental_bimorphisms()) {
        let b = Bimorphism {
            flavor: double,
            top: b.top.coerce(double.horizontal())?,
            left: b.left.coerce(double.vertical())?,
            right: b.right.coerce(double.vertical())?,
            bottom: b.bottom.coerce(double.horizontal())?,
        };
        let lhs = alg.eval_f(&b.top)?.after(&alg.eval_g(&b.left)?)?;
        let rhs = alg.eval_g(&b.right)?.after(&alg.eval_f(&b.bottom)?)?;
        s.single(&format!("square {name}"), lhs == rhs, || b.to_string().replace('\n', "; "));
    }

    let (mk, ck) = (flavor.monoid(), flavor.comonoid());
    let (m, u, i): (Morphism, Morphism, Morphism) = (mult().into(), unit().into(), inv().into());
    let mu = inject_monoid(flavor, &m)?;
    let eta = inject_monoid(flavor, &u)?;
    let j = inject_monoid(flavor, &i)?;
    let delta = inject_comonoid(flavor, &m.coerce(ck)?)?;
    let eps = inject_comonoid(flavor, &u.coerce(ck)?)?;
    let jg = inject_comonoid(flavor, &i.coerce(ck)?)?;
    let tau = symmetry_span(flavor, 1, 1);
    let id = |n| Span::identity(flavor, n);
    let t = |a: &Span, b: &Span| tensor_spans(a, b).expect("same flavor");
    let jj = t(&j, &j);
    let identities: Vec<(&str, Vec<Span>, Vec<Span>)> = vec![
        ("j antihomomorphism", vec![mu.clone(), j.clone()], vec![tau.clone(), jj.clone(), mu.clone()]),
        ("comultiplication commutes with j", vec![j.clone(), delta.clone()], vec![delta.clone(), jj.clone(), tau.clone()]),
        ("j involutive", vec![j.clone(), j.clone()], vec![id(1)]),
        ("comonoid j equals monoid j", vec![jg.clone()], vec![j.clone()]),
        (
            "comultiplication multiplicative",
            vec![mu.clone(), delta.clone()],
            vec![t(&delta, &delta), t(&t(&id(1), &tau), &id(1)), t(&mu, &mu)],
        ),
        ("counit multiplicative", vec![mu.clone(), eps.clone()], vec![t(&eps, &eps)]),
        ("unit comultiplicative", vec![eta.clone(), delta.clone()], vec![t(&eta, &eta)]),
        ("counit of unit", vec![eta.clone(), eps.clone()], vec![id(0)]),
        ("associativity", vec![t(&mu, &id(1)), mu.clone()], vec![t(&id(1), &mu), mu.clone()]),
        ("coassociativity", vec![delta.clone(), t(&delta, &id(1))], vec![delta.clone(), t(&id(1), &delta)]),
        ("unitality", vec![t(&eta, &id(1)), mu.clone()], vec![id(1)]),
        ("counitality", vec![delta.clone(), t(&eps, &id(1))], vec![id(1)]),
    ];
    s.over("bimonoid identities", &identities, |(name, lhs, rhs)| {
        let l: Vec<&Span> = lhs.iter().collect();
        let r: Vec<&Span> = rhs.iter().collect();
        let (el, er) = (eval_chain(alg, &l), eval_chain(alg, &r));
        let (cl, cr) = (compose_chain(&l), compose_chain(&r));
        let routes = cl.zip(cr).and_then(|(a, b)| Some((alg.eval_span(&a).ok()?, alg.eval_span(&b).ok()?)));
        let ok = el.is_some() && el == er && routes.is_some_and(|(a, b)| Some(&a) == el.as_ref() && a == b);
        fail_unless(ok, || name.to_string())
    });

    s.random("functor law", cfg.trials, |rng| {
        let o: Vec<usize> = (0..3).map(|_| random::size(rng, 3)).collect();
        let a = rand_span(rng, flavor, o[0], o[1], 3);
        let b = rand_span(rng, flavor, o[1], o[2], 3);
        let lhs = alg.eval_span(&compose_spans(&b, &a).ok()?).ok();
        let rhs = alg.eval_span(&b).ok()?.after(&alg.eval_span(&a).ok()?).ok();
        fail_unless(lhs.is_some() && lhs == rhs, || show(&[&a, &b]))
    });
    s.random("tensor law", cfg.trials, |rng| {
        let o: Vec<usize> = (0..4).map(|_| random::size(rng, 1)).collect();
        let a = rand_span(rng, flavor, o[0], o[1], 3);
        let b = rand_span(rng, flavor, o[2], o[3], 3);
        let lhs = alg.eval_span(&tensor_spans(&a, &b).ok()?).ok();
        let rhs = alg.eval_span(&a).ok()?.tensor(&alg.eval_span(&b).ok()?).ok();
        fail_unless(lhs.is_some() && lhs == rhs, || show(&[&a, &b]))
    });
    s.random("monoid side is a strict monoidal functor", cfg.trials, |rng| {
        let o = chain(rng, 3, 3);
        let (f1, f2) = (rand_mor(rng, mk, o[0], o[1]), rand_mor(rng, mk, o[1], o[2]));
        let comp = alg.eval_f(&f2.after(&f1).ok()?).ok() == alg.eval_f(&f2).ok()?.after(&alg.eval_f(&f1).ok()?).ok();
        let (a, b) = (chain(rng, 2, 1), chain(rng, 2, 2));
        let (g, h) = (rand_mor(rng, mk, a[0], a[1]), rand_mor(rng, mk, b[0], b[1]));
        let tens = alg.eval_f(&g.tensor(&h).ok()?).ok() == alg.eval_f(&g).ok()?.tensor(&alg.eval_f(&h).ok()?).ok();
        fail_unless(comp && tens, || show(&[&f1, &f2, &g, &h]))
    });
    s.random("comonoid side is a strict monoidal functor", cfg.trials, |rng| {
        let o = chain(rng, 3, 3);
        let (p1, p2) = (rand_mor(rng, ck, o[0], o[1]), rand_mor(rng, ck, o[1], o[2]));
        // contravariant: G(p2 • p1) = G(p1) ∘ G(p2)
        let comp = alg.eval_g(&p2.after(&p1).ok()?).ok() == alg.eval_g(&p1).ok()?.after(&alg.eval_g(&p2).ok()?).ok();
        let (a, b) = (chain(rng, 2, 1), chain(rng, 2, 2));
        let (g, h) = (rand_mor(rng, ck, a[0], a[1]), rand_mor(rng, ck, b[0], b[1]));
        let tens = alg.eval_g(&g.tensor(&h).ok()?).ok() == alg.eval_g(&g).ok()?.tensor(&alg.eval_g(&h).ok()?).ok();
        fail_unless(comp && tens, || show(&[&p1, &p2, &g, &h]))
    });
    Ok(s.finish())
}

/// Functoriality of the free involutive monoid and the laws of `star`.
pub fn free(cfg: &Config) -> Result<Report> {
    let mut s = Suite::new("free", cfg);
    let words = |rng: &mut CaseRng, n: usize| -> Vec<InvWord> {
        (0..n).map(|_| InvWord::random(rng, 4, 5)).collect()
    };
    let show_words = |w: &[InvWord]| {
        let parts: Vec<String> = w.iter().map(|x| format!("({x})")).collect();
        parts.join(" ")
    };
    s.random("composition", cfg.trials, |rng| {
        let o = chain(rng, 3, 4);
        let (f1, f2) = (random::ifas(rng, o[0], o[1]), random::ifas(rng, o[1], o[2]));
        let w = words(rng, o[0]);
        let lhs = eval_monoid(&compose(&f2, &f1).ok()?, &w).ok();
        let rhs = eval_monoid(&f2, &eval_monoid(&f1, &w).ok()?).ok();
        fail_unless(lhs.is_some() && lhs == rhs, || format!("{} ; {}", show(&[&f1, &f2]), show_words(&w)))
    });
    s.random("tensor", cfg.trials, |rng| {
        let (a, b) = (chain(rng, 2, 3), chain(rng, 2, 3));
        let (f, g) = (random::ifas(rng, a[0], a[1]), random::ifas(rng, b[0], b[1]));
        let w = words(rng, a[0] + b[0]);
        let lhs = eval_monoid(&f.tensor(&g), &w).ok();
        let mut rhs = eval_monoid(&f, &w[..a[0]]).ok()?;
        rhs.extend(eval_monoid(&g, &w[a[0]..]).ok()?);
        fail_unless(lhs == Some(rhs), || format!("{} ; {}", show(&[&f, &g]), show_words(&w)))
    });
    s.random("star involutive", cfg.trials, |rng| {
        let w = InvWord::random(rng, 4, 8);
        fail_unless(w.star().star() == w, || w.to_string())
    });
    s.random("star reverses products", cfg.trials, |rng| {
        let (u, v) = (InvWord::random(rng, 4, 6), InvWord::random(rng, 4, 6));
        fail_unless(u.concat(&v).star() == v.star().concat(&u.star()), || show_words(&[u, v]))
    });
    Ok(s.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> Config {
        Config {
            trials: 50,
            max_size: 1,
            ..Config::default()
        }
    }

    #[test]
    fn suites_pass_at_small_sizes() {
        let cfg = quick();
        let mut reports = vec![homcount(&cfg).unwrap(), factor(&cfg).unwrap(), distributive(&cfg).unwrap()];
        reports.push(category(&cfg, Kind::Ifas).unwrap());
        reports.push(category(&cfg, Kind::If).unwrap());
        reports.push(star(&cfg).unwrap());
        reports.push(free(&cfg).unwrap());
        for flavor in QFlavor::ALL {
            reports.push(prop(&cfg, flavor).unwrap());
        }
        for r in &reports {
            assert!(r.passed(), "{r}");
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn lifts_count() {
        let map = SetMap::new(2, vec![0, 0, 1]).unwrap();
        assert_eq!(lifts(Kind::Ifas, &map).len(), 2 * 8);
        assert_eq!(lifts(Kind::If, &map).len(), 8);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let cfg = quick();
        let seq = Config {
            exec: Exec::Sequential,
            ..cfg
        };
        let a = category(&cfg, Kind::Ifas).unwrap();
        let b = category(&seq, Kind::Ifas).unwrap();
        assert!(a.same_outcome(&b));
    }

    #[test]
    fn failures_are_reported() {
        let mut s = Suite::new("demo", &quick());
        s.random("never", 5, |rng| Some(rng.gen::<u8>().to_string()));
        s.single("fine", true, String::new);
        let r = s.finish();
        assert_eq!((r.cases, r.failures.len()), (6, 5));
        assert!(!r.passed());
        assert!(r.to_string().starts_with("suite demo: 6 cases, 5 failures\n  never: "));
    }
}
