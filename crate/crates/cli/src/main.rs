//! Command-line front end for the `ifas` library.
//!
//! Morphisms and spans are read in the text DSL or, when the argument starts
//! with `{`, as JSON. Output is deterministic for fixed flags; timings go to
//! stderr. Exit codes: 0 success, 1 a check failed, 2 usage or input error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ifas::check::{self, Config, Report};
use ifas::doublecat::{complete_star, Flavor};
use ifas::dsl::{self, Expr};
use ifas::enumerate::{enumerate_hom, hom_count};
use ifas::factor::{distribute, factorize, factorize_if, OrderPreserving, SignedPermutation};
use ifas::json::to_json;
use ifas::models::free::Letter;
use ifas::models::{eval_monoid, GroupAlgebra, GroupModel, InvWord, Ring, TensorMap};
use ifas::par::{self, Exec};
use ifas::spans::{compose_spans, QFlavor, Span};
use ifas::{Error, Kind, Morphism};

#[derive(Parser)]
#[command(name = "ifas", version, about = "Exact computations with involutive non-commutative sets")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Emit JSON instead of the text DSL.
    #[arg(long, global = true)]
    json: bool,

    /// Flavor: ifas | if (morphisms), IFAS2 | IF2 | V | H (squares), Q | QV | QH | QIF (spans).
    #[arg(long, global = true)]
    flavor: Option<String>,

    /// Seed of the randomized tiers.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Number of cases per randomized law.
    #[arg(long, global = true, default_value_t = 1000)]
    trials: usize,

    /// Largest object size of the exhaustive tiers.
    #[arg(long, global = true, default_value_t = 2)]
    max_size: usize,

    /// Worker threads (0 = one per core, 1 = sequential).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Evaluation model.
    #[arg(long, global = true, value_enum, default_value_t = ModelArg::Group)]
    model: ModelArg,

    /// Group of the group bialgebra: c2 | c3 | s3 | file:PATH.
    #[arg(long, global = true)]
    group: Option<String>,

    /// Coefficient modulus (a prime), or 0 for exact integers.
    #[arg(long = "mod", global = true, default_value_t = 7)]
    modulus: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Free,
    Group,
}

#[derive(Subcommand)]
enum Cmd {
    /// Composite `second • first` (first is applied first).
    Compose { second: String, first: String },
    /// Factor a morphism as an order-preserving map after a signed permutation.
    Factor { morphism: String },
    /// Rewrite `g • phi` (g a signed permutation, phi order-preserving) as `phi' • g'`.
    Distribute { g: String, phi: String },
    /// Complete a bottom (horizontal) and right (vertical) edge to a bimorphism.
    Star { bottom: String, right: String },
    /// Compose spans `second ∘ first`.
    SpanCompose { second: String, first: String },
    /// Canonical representative of a span.
    Canon { span: String },
    /// List, or count, the morphisms `n -> m`.
    Enum {
        n: usize,
        m: usize,
        #[arg(long)]
        count: bool,
    },
    /// Run a law suite.
    Check {
        /// One of homcount, category, factor, distributive, star, prop, bimonoid, free, all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Evaluate a morphism or span in a model.
    Eval {
        input: String,
        /// Read the morphism on the comonoid side (group model only).
        #[arg(long)]
        comonoid: bool,
        /// Input words for the free model, `;`-separated (default: x1; x2; ...).
        #[arg(long)]
        words: Option<String>,
    },
}

enum Fail {
    Usage(String),
    Check,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail::Usage(e.to_string())
    }
}

type Out = Result<(), Fail>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Fail> {
    Err(Fail::Usage(msg.into()))
}

fn read(text: &str) -> Result<Expr, Fail> {
    let text = text.trim();
    if text.starts_with('{') {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Fail::Usage(format!("invalid JSON: {e}")))?;
        if value.get("flavor").is_some() {
            return Ok(Expr::Span(ifas::json::span_from_json(text)?));
        }
        return Ok(Expr::Morphism(ifas::json::morphism_from_json(text)?));
    }
    Ok(dsl::parse(text)?)
}

fn read_morphism(text: &str) -> Result<Morphism, Fail> {
    match read(text)? {
        Expr::Morphism(m) => Ok(m),
        Expr::Span(_) => usage("expected a morphism, found a span"),
    }
}

fn read_span(text: &str) -> Result<Span, Fail> {
    match read(text)? {
        Expr::Span(s) => Ok(s),
        Expr::Morphism(_) => usage("expected a span, found a morphism"),
    }
}

fn kind_flag(flavor: &Option<String>) -> Result<Option<Kind>, Fail> {
    match flavor.as_deref().map(str::to_ascii_lowercase).as_deref() {
        None => Ok(None),
        Some("ifas") => Ok(Some(Kind::Ifas)),
        Some("if") => Ok(Some(Kind::If)),
        Some(other) => usage(format!("expected --flavor ifas or if, found {other:?}")),
    }
}

fn emit_morphism(cli: &Cli, m: &Morphism) {
    if cli.json {
        println!("{}", to_json(m));
    } else {
        println!("{m}");
    }
}

fn emit_span(cli: &Cli, s: &Span) {
    if cli.json {
        println!("{}", to_json(s));
    } else {
        println!("{s}");
    }
}

fn algebra(cli: &Cli, default: GroupModel) -> Result<GroupAlgebra, Fail> {
    let group = match cli.group.as_deref() {
        None => default,
        Some(spec) => match spec.strip_prefix("file:") {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Fail::Usage(format!("cannot read {path}: {e}")))?;
                GroupModel::from_json(path, &text)?
            }
            None => match GroupModel::builtin(spec) {
                Some(g) => g,
                None => return usage(format!("unknown group {spec:?}")),
            },
        },
    };
    let ring = if cli.modulus == 0 {
        Ring::Integers
    } else {
        Ring::modulo(cli.modulus)?
    };
    Ok(GroupAlgebra::new(group, ring))
}

fn compose_cmd(cli: &Cli, second: &str, first: &str) -> Out {
    let (g, f) = (read_morphism(second)?, read_morphism(first)?);
    emit_morphism(cli, &g.after(&f)?);
    Ok(())
}

fn factor_cmd(cli: &Cli, text: &str) -> Out {
    let f = read_morphism(text)?;
    let (names, parts): ([&str; 2], [Morphism; 2]) = match &f {
        Morphism::Ifas(f) => {
            let (phi, g) = factorize(f);
            (["phi", "g"], [phi.into_mor().into(), g.into_mor().into()])
        }
        Morphism::If(f) => {
            let (plain, labels) = factorize_if(f);
            (["plain", "labels"], [plain.into(), labels.into()])
        }
    };
    if cli.json {
        println!("{}", json!({ names[0]: parts[0], names[1]: parts[1] }));
    } else {
        println!("{}: {}\n{}: {}", names[0], parts[0], names[1], parts[1]);
    }
    Ok(())
}

fn distribute_cmd(cli: &Cli, g: &str, phi: &str) -> Out {
    let ifas = |m: Morphism| match m {
        Morphism::Ifas(f) => Ok(f),
        Morphism::If(_) => usage("distribute works on IF(as) morphisms"),
    };
    let g = SignedPermutation::new(ifas(read_morphism(g)?)?)?;
    let phi = OrderPreserving::new(ifas(read_morphism(phi)?)?)?;
    let (phi2, g2) = distribute(&g, &phi)?;
    let (phi2, g2): (Morphism, Morphism) = (phi2.into_mor().into(), g2.into_mor().into());
    if cli.json {
        println!("{}", json!({ "phi": phi2, "g": g2 }));
    } else {
        println!("phi: {phi2}\ng: {g2}");
    }
    Ok(())
}

fn star_cmd(cli: &Cli, bottom: &str, right: &str) -> Out {
    let (bottom, right) = (read_morphism(bottom)?, read_morphism(right)?);
    let flavor = match &cli.flavor {
        Some(f) => f.parse::<Flavor>()?,
        None => Flavor::from_kinds(bottom.kind(), right.kind()),
    };
    let b = complete_star(&bottom, &right, flavor)?;
    if cli.json {
        println!("{}", to_json(&b));
    } else {
        println!("{b}");
    }
    Ok(())
}

fn check_flavor(cli: &Cli, s: &Span) -> Out {
    if let Some(f) = &cli.flavor {
        let want: QFlavor = f.parse()?;
        if want != s.flavor() {
            return usage(format!("span is {} but --flavor is {want}", s.flavor()));
        }
    }
    Ok(())
}

fn span_compose_cmd(cli: &Cli, second: &str, first: &str) -> Out {
    let (b, a) = (read_span(second)?, read_span(first)?);
    check_flavor(cli, &a)?;
    emit_span(cli, &compose_spans(&b, &a)?);
    Ok(())
}

fn canon_cmd(cli: &Cli, text: &str) -> Out {
    let s = read_span(text)?;
    check_flavor(cli, &s)?;
    emit_span(cli, &s.canonicalize());
    Ok(())
}

fn enum_cmd(cli: &Cli, n: usize, m: usize, count: bool) -> Out {
    let kind = kind_flag(&cli.flavor)?.unwrap_or(Kind::Ifas);
    if count {
        // counting does not need the guard-limited enumeration
        let c = hom_count(n, m, kind);
        if cli.json {
            println!("{}", json!({ "kind": kind.name(), "dom": n, "cod": m, "count": c.to_string() }));
        } else {
            println!("{c}");
        }
        return Ok(());
    }
    for f in enumerate_hom(n, m, kind)? {
        emit_morphism(cli, &f);
    }
    Ok(())
}

fn run_suites(cli: &Cli, suite: &str) -> Result<Vec<Report>, Fail> {
    let cfg = Config {
        exec: if cli.jobs == 1 {
            Exec::Sequential
        } else {
            Exec::Parallel
        },
        seed: cli.seed,
        trials: cli.trials,
        max_size: cli.max_size,
    };
    let names: Vec<&str> = match suite {
        "all" => check::SUITES.to_vec(),
        s if check::SUITES.contains(&s) => vec![s],
        s => return usage(format!("unknown suite {s:?}; expected one of {} or all", check::SUITES.join(", "))),
    };
    let span_flavors = |cli: &Cli| -> Result<Vec<QFlavor>, Fail> {
        match &cli.flavor {
            Some(f) if suite != "all" => Ok(vec![f.parse()?]),
            _ => Ok(QFlavor::ALL.to_vec()),
        }
    };
    let mut out = Vec::new();
    for name in names {
        match name {
            "homcount" => out.push(check::homcount(&cfg)?),
            "category" => {
                let kinds = match kind_flag(if suite == "all" { &None } else { &cli.flavor })? {
                    Some(k) => vec![k],
                    None => vec![Kind::Ifas, Kind::If],
                };
                for k in kinds {
                    out.push(check::category(&cfg, k)?);
                }
            }
            "factor" => out.push(check::factor(&cfg)?),
            "distributive" => out.push(check::distributive(&cfg)?),
            "star" => out.push(check::star(&cfg)?),
            "prop" => {
                for f in span_flavors(cli)? {
                    out.push(check::prop(&cfg, f)?);
                }
            }
            "bimonoid" => {
                for f in span_flavors(cli)? {
                    // commutative monoid sides need a commutative group
                    let default = match f {
                        QFlavor::Q | QFlavor::Qh => GroupModel::s3(),
                        QFlavor::Qv | QFlavor::Qif => GroupModel::c3(),
                    };
                    out.push(check::bimonoid(&cfg, f, &algebra(cli, default)?)?);
                }
            }
            "free" => out.push(check::free(&cfg)?),
            _ => unreachable!("suite names are validated"),
        }
    }
    Ok(out)
}

fn check_cmd(cli: &Cli, suite: &str) -> Out {
    let reports = par::with_jobs(cli.jobs, || run_suites(cli, suite))?;
    for r in &reports {
        eprintln!("{}: {:.3}s", r.suite, r.wall.as_secs_f64());
    }
    if cli.json {
        println!("{}", serde_json::to_string(&reports).expect("plain data"));
    } else {
        for r in &reports {
            println!("{r}");
        }
    }
    if reports.iter().all(Report::passed) {
        Ok(())
    } else {
        Err(Fail::Check)
    }
}

fn parse_words(text: &str) -> Result<Vec<InvWord>, Fail> {
    text.split(';')
        .map(|w| {
            let w = w.trim();
            if w == "1" || w.is_empty() {
                return Ok(InvWord::empty());
            }
            w.split_whitespace()
                .map(|tok| {
                    let (body, starred) = match tok.strip_suffix('*') {
                        Some(b) => (b, true),
                        None => (tok, false),
                    };
                    match body.strip_prefix('x').and_then(|k| k.parse::<u32>().ok()) {
                        Some(k) if k >= 1 => Ok(Letter { gen: k - 1, starred }),
                        _ => usage(format!("bad letter {tok:?}; expected x<k> or x<k>*")),
                    }
                })
                .collect::<Result<Vec<_>, _>>()
                .map(InvWord)
        })
        .collect()
}

fn print_map(cli: &Cli, alg: &GroupAlgebra, map: &TensorMap) {
    use ifas::models::tensor::decode_tuple;
    let k = alg.rank();
    let rows = k.pow(map.dom() as u32);
    let mut tuple = Vec::new();
    let show = |t: &[usize]| {
        let parts: Vec<String> = t.iter().map(usize::to_string).collect();
        format!("({})", parts.join(","))
    };
    if cli.json {
        let columns: Vec<_> = (0..rows).map(|j| map.column(j).to_vec()).collect();
        println!(
            "{}",
            json!({
                "group": alg.group.name(),
                "ring": alg.ring.to_string(),
                "dom": map.dom(),
                "cod": map.cod(),
                "columns": columns,
            })
        );
        return;
    }
    println!("{} over {}: arity {} -> {}", alg.group.name(), alg.ring, map.dom(), map.cod());
    for j in 0..rows {
        decode_tuple(k, map.dom(), j, &mut tuple);
        let lhs = show(&tuple);
        let terms: Vec<String> = map
            .column(j)
            .iter()
            .map(|&(i, c)| {
                let mut out = Vec::new();
                decode_tuple(k, map.cod(), i, &mut out);
                if c == 1 {
                    show(&out)
                } else {
                    format!("{c}{}", show(&out))
                }
            })
            .collect();
        let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        println!("{lhs} -> {rhs}");
    }
}

fn eval_cmd(cli: &Cli, input: &str, comonoid: bool, words: &Option<String>) -> Out {
    let expr = read(input)?;
    match cli.model {
        ModelArg::Free => {
            let f = match &expr {
                Expr::Morphism(Morphism::Ifas(f)) => f,
                _ => return usage("the free model evaluates IF(as) morphisms"),
            };
            let words = match words {
                Some(w) => parse_words(w)?,
                None => (0..f.dom() as u32).map(InvWord::generator).collect(),
            };
            let out = eval_monoid(f, &words)?;
            if cli.json {
                let strs: Vec<String> = out.iter().map(InvWord::to_string).collect();
                println!("{}", json!(strs));
            } else {
                let strs: Vec<String> = out.iter().map(InvWord::to_string).collect();
                println!("{}", strs.join("; "));
            }
        }
        ModelArg::Group => {
            let map = match &expr {
                Expr::Morphism(m) => {
                    let alg = algebra(cli, GroupModel::s3())?;
                    let map = if comonoid { alg.eval_g(m)? } else { alg.eval_f(m)? };
                    (alg, map)
                }
                Expr::Span(s) => {
                    let default = if matches!(s.flavor(), QFlavor::Qv | QFlavor::Qif) {
                        GroupModel::c3()
                    } else {
                        GroupModel::s3()
                    };
                    let alg = algebra(cli, default)?;
                    let map = alg.eval_span(s)?;
                    (alg, map)
                }
            };
            print_map(cli, &map.0, &map.1);
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Out {
    match &cli.cmd {
        Cmd::Compose { second, first } => compose_cmd(cli, second, first),
        Cmd::Factor { morphism } => factor_cmd(cli, morphism),
        Cmd::Distribute { g, phi } => distribute_cmd(cli, g, phi),
        Cmd::Star { bottom, right } => star_cmd(cli, bottom, right),
        Cmd::SpanCompose { second, first } => span_compose_cmd(cli, second, first),
        Cmd::Canon { span } => canon_cmd(cli, span),
        Cmd::Enum { n, m, count } => enum_cmd(cli, *n, *m, *count),
        Cmd::Check { suite } => check_cmd(cli, suite),
        Cmd::Eval {
            input,
            comonoid,
            words,
        } => eval_cmd(cli, input, *comonoid, words),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Check) => ExitCode::from(1),
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
