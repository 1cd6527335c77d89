//! Command-line front end for the intersection-theory toolkit.
//!
//! Subcommands run individual computations (Schubert products, the
//! fourfold ring, Todd classes, Euler characteristics), the monad
//! verification pipeline, chain feasibility checks, and the golden
//! self-test corpus. Output is deterministic; `--json` switches every
//! subcommand to a canonical JSON form with rationals as `p/q` strings
//! and polynomials as lowest-degree-first coefficient arrays.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use chowkit::chain::{c1_forcing, eigen_check, feasible_c2, product_matrix, ChainSpec};
use chowkit::chern::{q_ring, tangent_p2};
use chowkit::monad::{alpha_beta_classes, evaluate_at, run_symbolic, verify_nonexistence};
use chowkit::presented::{pushforward, PresentedElement};
use chowkit::riemann_roch::tangent_class_q;
use chowkit::scalar::{rat_int, rat_string, Rat, Scalar};
use chowkit::schubert::{lr_multiply, GrassmannianShape, Partition, SchubertElement};
use chowkit::selftest;

#[derive(Parser)]
#[command(
    name = "chowkit",
    about = "Exact intersection theory: Schubert calculus, Chow rings, characteristic classes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two Schubert classes on G(k;n).
    SchubertMult(SchubertMultArgs),
    /// Print the presentation and multiplication table of the fourfold ring.
    QRing(JsonOnly),
    /// Todd class of the tangent bundle of the fourfold or the plane.
    Todd(ToddArgs),
    /// The three Euler characteristics of the monad pipeline.
    Chi(ChiArgs),
    /// Run the monad pipeline: symbolic report or verdicts at integers.
    MonadVerify(MonadArgs),
    /// Chain feasibility: divisor forcing and second-Chern enumeration.
    ChainCheck(ChainArgs),
    /// Run the golden-value corpus.
    Selftest(JsonOnly),
}

#[derive(Args)]
struct JsonOnly {
    /// Emit canonical JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SchubertMultArgs {
    /// Subspace dimension k of G(k;n).
    #[arg(long)]
    k: usize,
    /// Ambient dimension n of G(k;n).
    #[arg(long)]
    n: usize,
    /// Left partition, comma separated (empty for the identity class).
    #[arg(long, default_value = "")]
    lhs: String,
    /// Right partition, comma separated.
    #[arg(long, default_value = "")]
    rhs: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ToddArgs {
    /// Which variety: `q` (the fourfold) or `p2` (the plane).
    #[arg(long, default_value = "q")]
    variety: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ChiArgs {
    /// Evaluate at an integer instead of reporting polynomials.
    #[arg(long)]
    a: Option<i64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MonadArgs {
    /// Verdict at a single integer value.
    #[arg(long)]
    a: Option<i64>,
    /// Verdicts for every integer in [1, a-max].
    #[arg(long)]
    a_max: Option<i64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ChainArgs {
    /// Path to a chain spec: {"degrees":[...], "matrices":[...]} with
    /// matrices optional.
    #[arg(long)]
    spec: std::path::PathBuf,
    /// Tail bound for the enumerations.
    #[arg(long, default_value_t = 3)]
    bound: i64,
    /// Use only the first N steps of the chain.
    #[arg(long)]
    horizon: Option<usize>,
    #[arg(long)]
    json: bool,
}

enum CliError {
    Input(String),
    Verification(String),
}

impl CliError {
    fn input(e: impl std::fmt::Display) -> Self {
        CliError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    // Die quietly when output is piped into a closed reader, like other
    // stream-friendly tools.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Verification(msg)) => {
            eprintln!("verification failure: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::SchubertMult(args) => schubert_mult(args),
        Command::QRing(args) => q_ring_report(args.json),
        Command::Todd(args) => todd_report(args),
        Command::Chi(args) => chi_report(args),
        Command::MonadVerify(args) => monad_verify(args),
        Command::ChainCheck(args) => chain_check(args),
        Command::Selftest(args) => run_selftest(args.json),
    }
}

fn emit_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn parse_partition(text: &str) -> Result<Partition, CliError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<u32>, _> = trimmed.split(',').map(|p| p.trim().parse()).collect();
    let parts = parts.map_err(|_| CliError::Input(format!("partition `{text}` is malformed")))?;
    Partition::new(parts).map_err(CliError::input)
}

fn schubert_mult(args: SchubertMultArgs) -> Result<(), CliError> {
    let shape = GrassmannianShape::new(args.k, args.n).map_err(CliError::input)?;
    let lhs = parse_partition(&args.lhs)?;
    let rhs = parse_partition(&args.rhs)?;
    let e1 = SchubertElement::class(shape, lhs).map_err(CliError::input)?;
    let e2 = SchubertElement::class(shape, rhs).map_err(CliError::input)?;
    let product = lr_multiply(&e1, &e2).map_err(CliError::input)?;
    if args.json {
        emit_json(&serde_json::json!({
            "k": args.k,
            "n": args.n,
            "lhs": e1.to_json(),
            "rhs": e2.to_json(),
            "product": product.to_json(),
        }));
    } else {
        println!("G({};{}): {} * {} = {}", args.k, args.n, e1, e2, product);
    }
    Ok(())
}

fn q_ring_report(json: bool) -> Result<(), CliError> {
    let ring = q_ring();
    let (alpha, beta) =
        alpha_beta_classes(&ring).map_err(|e| CliError::Verification(e.to_string()))?;
    let elem = |t: &str| {
        PresentedElement::<Rat>::parse(&ring, &[(t, rat_int(1))]).expect("ring element")
    };
    let table: Vec<(&str, PresentedElement<Rat>)> = vec![
        ("H^4", elem("H^4")),
        ("R*H^3", elem("R*H^3")),
        ("R^2*H^2", elem("R^2*H^2")),
        ("R^2*alpha", elem("R^2").multiply(&alpha)),
        ("R*H*alpha", elem("R*H").multiply(&alpha)),
        ("H^2*alpha", elem("H^2").multiply(&alpha)),
        ("R*H*beta", elem("R*H").multiply(&beta)),
        ("H^2*beta", elem("H^2").multiply(&beta)),
        ("alpha*beta", alpha.multiply(&beta)),
        ("R^2*beta", elem("R^2").multiply(&beta)),
        ("R^4", elem("R^4")),
        ("R^3*H", elem("R^3*H")),
    ];
    let dims: Vec<usize> = (0..=4).map(|d| ring.basis(d).len()).collect();
    let segre: Vec<(String, PresentedElement<Rat>)> = (2..=4)
        .map(|j| {
            let power = elem("H").pow(j);
            (
                format!("p_*(H^{j})"),
                pushforward(&power).expect("bundle structure"),
            )
        })
        .collect();

    if json {
        emit_json(&serde_json::json!({
            "generators": ring.generators().iter().map(|(g, d)| {
                serde_json::json!({"name": g, "degree": d})
            }).collect::<Vec<_>>(),
            "relation_h3": elem("H^3").to_json(),
            "graded_dimensions": dims,
            "alpha": alpha.to_json(),
            "beta": beta.to_json(),
            "integrals": table.iter().map(|(name, e)| {
                serde_json::json!({"product": name, "integral": rat_string(&e.integrate())})
            }).collect::<Vec<_>>(),
            "segre_pushforwards": segre.iter().map(|(name, e)| {
                serde_json::json!({"power": name, "value": e.to_json()})
            }).collect::<Vec<_>>(),
        }));
    } else {
        println!("ring: {}", ring.name());
        println!("generators: R (degree 1, pulled back), H (degree 1, relative)");
        println!("relation: H^3 = {}", elem("H^3"));
        println!("graded dimensions: {dims:?}");
        println!("alpha = {alpha}");
        println!("beta  = {beta}");
        println!("integral table:");
        for (name, e) in &table {
            println!("  {name} -> {}", rat_string(&e.integrate()));
        }
        println!("pushforwards to the base:");
        for (name, e) in &segre {
            println!("  {name} = {e}");
        }
    }
    Ok(())
}

fn todd_report(args: ToddArgs) -> Result<(), CliError> {
    let td = match args.variety.as_str() {
        "q" => tangent_class_q().todd_class(),
        "p2" => tangent_p2().todd_class(),
        other => {
            return Err(CliError::Input(format!(
                "variety must be `q` or `p2`, got `{other}`"
            )))
        }
    };
    if args.json {
        emit_json(&serde_json::json!({
            "variety": args.variety,
            "todd": td.to_json(),
        }));
    } else {
        println!("td(T) = {td}");
    }
    Ok(())
}

fn chi_report(args: ChiArgs) -> Result<(), CliError> {
    let sym = run_symbolic().map_err(|e| CliError::Verification(e.to_string()))?;
    match args.a {
        None => {
            if args.json {
                emit_json(&serde_json::json!({
                    "chi_e": sym.chi_e.to_json(),
                    "chi_sum": sym.chi_sum.to_json(),
                    "chi_e0": sym.chi_e0.to_json(),
                    "phi": sym.phi.to_json(),
                }));
            } else {
                println!("chi_E   = {}", sym.chi_e);
                println!("chi_sum = {}", sym.chi_sum);
                println!("chi_E0  = {}", sym.chi_e0);
                println!("phi     = {}", sym.phi);
            }
        }
        Some(a) => {
            if a < 0 {
                return Err(CliError::Input(format!("--a must be >= 0, got {a}")));
            }
            let v = evaluate_at(&sym, a).map_err(|e| CliError::Input(e.to_string()))?;
            if args.json {
                emit_json(&serde_json::json!({
                    "a": a,
                    "chi_e": rat_string(&v.chi_e),
                    "chi_sum": rat_string(&v.chi_sum),
                    "chi_e0": rat_string(&v.chi_e0),
                    "phi": rat_string(&v.phi),
                }));
            } else {
                println!("a = {a}");
                println!("chi_E   = {}", rat_string(&v.chi_e));
                println!("chi_sum = {}", rat_string(&v.chi_sum));
                println!("chi_E0  = {}", rat_string(&v.chi_e0));
                println!("phi     = {}", rat_string(&v.phi));
            }
        }
    }
    Ok(())
}

fn monad_verify(args: MonadArgs) -> Result<(), CliError> {
    if args.a.is_some() && args.a_max.is_some() {
        return Err(CliError::Input(
            "use either --a or --a-max, not both".to_string(),
        ));
    }
    let sym = run_symbolic().map_err(|e| CliError::Verification(e.to_string()))?;

    if let Some(a) = args.a {
        if a < 0 {
            return Err(CliError::Input(format!("--a must be >= 0, got {a}")));
        }
        let v = evaluate_at(&sym, a).map_err(|e| CliError::Input(e.to_string()))?;
        if args.json {
            emit_json(&v.to_json());
        } else {
            println!("a = {}", v.a);
            println!("conclusion: {}", v.conclusion.as_str());
            println!(
                "d = {}, c = {}, b = {}",
                rat_string(&v.d),
                rat_string(&v.c),
                rat_string(&v.b)
            );
            println!("chi_E = {}", rat_string(&v.chi_e));
            println!("chi_sum = {}", rat_string(&v.chi_sum));
            println!("chi_E0 = {}", rat_string(&v.chi_e0));
            println!("phi = {}", rat_string(&v.phi));
            for f in &v.integrality_failures {
                println!("not an integer: {} = {}", f.quantity, rat_string(&f.value));
            }
        }
        return Ok(());
    }

    if let Some(a_max) = args.a_max {
        let verdicts =
            verify_nonexistence(a_max).map_err(|e| CliError::Input(e.to_string()))?;
        if args.json {
            emit_json(&serde_json::Value::Array(
                verdicts.iter().map(|v| v.to_json()).collect(),
            ));
        } else {
            for v in &verdicts {
                let mut line = String::new();
                write!(
                    line,
                    "a = {:>3}: {:<24} chi_E = {}, chi_E0 = {}, phi = {}",
                    v.a,
                    v.conclusion.as_str(),
                    rat_string(&v.chi_e),
                    rat_string(&v.chi_e0),
                    rat_string(&v.phi),
                )
                .expect("write to string");
                println!("{line}");
            }
            let excluded = verdicts
                .iter()
                .filter(|v| {
                    v.conclusion != chowkit::monad::Conclusion::NotExcluded
                        && v.conclusion != chowkit::monad::Conclusion::NotApplicable
                })
                .count();
            println!("excluded: {excluded} of {}", verdicts.len());
        }
        return Ok(());
    }

    // Symbolic report.
    if args.json {
        emit_json(&sym.to_json());
    } else {
        println!("constants forced by the monad:");
        println!("  d = {}", sym.constants.d);
        println!("  c = {}", sym.constants.c);
        println!("  b = {}", sym.constants.b);
        println!("  c1(E1) = {}", sym.constants.c1_e1);
        println!("  c2(E1) = {}", sym.constants.c2_e1);
        println!("twisted side classes:");
        for (k, e) in sym.twist_e.iter().enumerate() {
            println!("  e{} = {}", k + 1, e);
        }
        println!("matched top coefficient: {}", sym.monad_e);
        println!("chi_E   = {}", sym.chi_e);
        println!("chi_sum = {}", sym.chi_sum);
        println!("chi_E0  = {}", sym.chi_e0);
        println!("phi     = {}", sym.phi);
        if sym.phi_is_zero {
            println!("phi is identically zero; exclusion relies on integrality alone");
        } else {
            for (root, mult) in &sym.phi_rational_roots {
                println!("phi root: {} (multiplicity {mult})", rat_string(root));
            }
        }
    }
    Ok(())
}

fn chain_check(args: ChainArgs) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.spec)
        .map_err(|e| CliError::Input(format!("spec {}: {e}", args.spec.display())))?;
    let mut chain = ChainSpec::from_json_str(&text).map_err(CliError::input)?;
    if let Some(h) = args.horizon {
        if h == 0 {
            return Err(CliError::Input("--horizon must be >= 1".to_string()));
        }
        chain = chain.truncate(h).map_err(CliError::input)?;
    }
    if args.bound < 1 {
        return Err(CliError::Input(format!(
            "--bound must be >= 1, got {}",
            args.bound
        )));
    }

    let delta = chain.degree_product().map_err(CliError::input)?;
    let c1 = c1_forcing(&chain, args.bound).map_err(CliError::input)?;
    let mut eigen_ok = None;
    let mut product = None;
    let mut c2 = None;
    if chain.matrices().is_some() {
        let all_eigen = (0..chain.len()).all(|m| {
            let step = product_matrix(&chain, m, 0).expect("index in range");
            eigen_check(&step, chain.degrees()[m])
        });
        eigen_ok = Some(all_eigen);
        product = Some(product_matrix(&chain, 0, chain.len() - 1).map_err(CliError::input)?);
        c2 = Some(feasible_c2(&chain, args.bound).map_err(CliError::input)?);
    }

    if args.json {
        emit_json(&serde_json::json!({
            "degrees": chain.degrees(),
            "degree_product": delta,
            "bound": args.bound,
            "c1_feasible": c1.iter().collect::<Vec<_>>(),
            "eigen_valid": eigen_ok,
            "product_matrix": product.map(|p| p.entries()),
            "c2_roots": c2.as_ref().map(|set| {
                set.iter().map(|&(x, y)| vec![x, y]).collect::<Vec<_>>()
            }),
        }));
    } else {
        println!("degrees: {:?} (product {delta})", chain.degrees());
        let values: Vec<i64> = c1.iter().copied().collect();
        println!("feasible divisor values (bound {}): {values:?}", args.bound);
        match (eigen_ok, product, c2) {
            (Some(ok), Some(p), Some(roots)) => {
                println!("eigen identity per step: {ok}");
                println!("product matrix: {p}");
                println!("second-Chern roots ({}):", roots.len());
                for (x, y) in roots {
                    println!("  ({x}, {y})");
                }
            }
            _ => println!("no transition matrices supplied; skipped second-Chern analysis"),
        }
    }
    Ok(())
}

fn run_selftest(json: bool) -> Result<(), CliError> {
    let results = selftest::run_all();
    let failed: Vec<&selftest::CheckResult> = results.iter().filter(|r| !r.passed).collect();
    if json {
        emit_json(&selftest::results_to_json(&results));
    } else {
        for r in &results {
            let mark = if r.passed { "ok  " } else { "FAIL" };
            println!("{mark} {} - {}", r.name, r.details);
        }
        println!("{} checks, {} failed", results.len(), failed.len());
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "{} golden check(s) diverge: {}",
            failed.len(),
            failed
                .iter()
                .map(|r| r.name.as_str())
                .collect::<Vec<_>>()
                .join(", ")
        )))
    }
}
