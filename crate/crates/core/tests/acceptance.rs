//! The acceptance criteria, each with its time budget. Prints one line per
//! criterion and exits non-zero if any criterion fails or runs over budget.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ifas::check::{self, Config, Report};
use ifas::doublecat::{complete_star, Flavor};
use ifas::dsl::parse_morphism;
use ifas::enumerate::enumerate_hom;
use ifas::models::{GroupAlgebra, GroupModel, Ring};
use ifas::par::Exec;
use ifas::spans::QFlavor;
use ifas::Kind;

/// Cases checked, or a description of the first failure.
type Outcome = Result<u64, String>;

fn reports(rs: Vec<ifas::Result<Report>>) -> Outcome {
    let mut cases = 0;
    for r in rs {
        let r = r.map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(r.to_string());
        }
        cases += r.cases;
    }
    Ok(cases)
}

fn cfg(max_size: usize, trials: usize) -> Config {
    Config {
        exec: Exec::Parallel,
        seed: 20_240_601,
        trials,
        max_size,
    }
}

/// Hom-set sizes by brute force: every set map, times the orderings of each
/// fiber, times the labels.
fn brute_count(n: usize, m: usize, kind: Kind) -> u128 {
    if m == 0 {
        return u128::from(n == 0);
    }
    let mut total = 0u128;
    let mut map = vec![0usize; n];
    loop {
        let per_map = match kind {
            Kind::If => 1,
            Kind::Ifas => (0..m)
                .map(|i| {
                    let k = map.iter().filter(|&&t| t == i).count() as u128;
                    (1..=k).product::<u128>()
                })
                .product(),
        };
        total += per_map << n;
        // next map in base m
        let mut k = 0;
        while k < n && map[k] == m - 1 {
            map[k] = 0;
            k += 1;
        }
        if k == n {
            return total;
        }
        map[k] += 1;
    }
}

fn hom_counts() -> Outcome {
    for kind in [Kind::Ifas, Kind::If] {
        for n in 0..=4 {
            for m in 0..=4 {
                let homs = enumerate_hom(n, m, kind).map_err(|e| e.to_string())?;
                let distinct: HashSet<_> = homs.iter().collect();
                let want = brute_count(n, m, kind);
                if homs.len() as u128 != want || distinct.len() != homs.len() {
                    return Err(format!("{kind} {n} -> {m}: {} != {want}", homs.len()));
                }
            }
        }
    }
    Ok(50 + reports(vec![check::homcount(&cfg(4, 0))])?)
}

fn goldens() -> Outcome {
    let p = |s: &str| parse_morphism(s).unwrap();
    let m = "ifas 2 -> 1 { 1:[1+ 2+] }";
    let u = "ifas 0 -> 1 { 1:[] }";
    let i = "ifas 1 -> 1 { 1:[1-] }";
    let id0 = "ifas 0 -> 0 { }";
    let id1 = "ifas 1 -> 1 { 1:[1+] }";
    let uu = "ifas 0 -> 2 { 1:[], 2:[] }";
    // (bottom, right) and the expected (top, left)
    let cases = [
        ("B1", m, m, "ifas 4 -> 2 { 1:[1+ 2+], 2:[3+ 4+] }", "ifas 4 -> 2 { 1:[1+ 3+], 2:[2+ 4+] }"),
        ("B2", u, u, id0, id0),
        ("B3", m, u, id0, uu),
        ("B4", u, m, uu, id0),
        ("J", i, i, id1, id1),
    ];
    for (name, bottom, right, top, left) in cases {
        let b = complete_star(&p(bottom), &p(right), Flavor::Ifas2).map_err(|e| e.to_string())?;
        let got = (b.top.to_string(), b.left.to_string(), b.right.to_string(), b.bottom.to_string());
        let want = (top.to_string(), left.to_string(), right.to_string(), bottom.to_string());
        if got != want {
            return Err(format!("{name}: got {got:?}"));
        }
    }
    Ok(5 + reports(vec![check::star(&cfg(3, 1000))])?)
}

fn s3() -> GroupAlgebra {
    GroupAlgebra::new(GroupModel::s3(), Ring::modulo(7).unwrap())
}

fn c3() -> GroupAlgebra {
    GroupAlgebra::new(GroupModel::c3(), Ring::modulo(7).unwrap())
}

type Criterion = (&'static str, u64, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("hom-set sizes", 10, Box::new(hom_counts)),
        (
            "category and PROP laws",
            60,
            Box::new(|| {
                reports(vec![
                    check::category(&cfg(2, 10_000), Kind::Ifas),
                    check::category(&cfg(2, 10_000), Kind::If),
                ])
            }),
        ),
        ("unique factorisation", 60, Box::new(|| reports(vec![check::factor(&cfg(3, 10_000))]))),
        ("distributive law", 60, Box::new(|| reports(vec![check::distributive(&cfg(2, 10_000))]))),
        ("star condition", 30, Box::new(goldens)),
        (
            "span layer",
            120,
            Box::new(|| reports(vec![check::prop(&cfg(1, 10_000), QFlavor::Q)])),
        ),
        (
            "bimonoid functor laws on S3 mod 7",
            120,
            Box::new(|| reports(vec![check::bimonoid(&cfg(3, 1000), QFlavor::Q, &s3())])),
        ),
        (
            "variant flavors",
            60,
            Box::new(|| {
                reports(vec![
                    check::bimonoid(&cfg(3, 1000), QFlavor::Qh, &s3()),
                    check::bimonoid(&cfg(3, 1000), QFlavor::Qv, &c3()),
                    check::bimonoid(&cfg(3, 1000), QFlavor::Qif, &c3()),
                ])
            }),
        ),
        ("free-model functoriality", 10, Box::new(|| reports(vec![check::free(&cfg(0, 10_000))]))),
    ];

    let mut all = true;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let wall = start.elapsed();
        let over = wall > Duration::from_secs(*budget);
        let ok = outcome.is_ok() && !over;
        all &= ok;
        let cases = outcome.as_ref().map_or(0, |&c| c);
        println!(
            "criterion {}: {} [{name}] {cases} cases, {:.2}s (budget {budget}s)",
            k + 1,
            if ok { "PASS" } else { "FAIL" },
            wall.as_secs_f64()
        );
        if let Err(e) = outcome {
            println!("  {e}");
        } else if over {
            println!("  over the time budget");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
