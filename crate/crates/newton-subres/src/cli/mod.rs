//! The `newton-subres` command-line front end.
//!
//! Subcommands: `sres`, `gcd`, `icdeg`, `companion`, `convert`, `selftest`,
//! `bench`. Exit codes: 0 on success, 1 on an internal invariant failure
//! (a selftest mismatch), 2 on usage or parse errors.

mod expr;
mod render;

pub use expr::{parse_poly, ParseError, PolyExpr};

use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{ratio, Rational};
use crate::companion::companion_matrix;
use crate::gcdsolve::{gcd_via_sres, glex_enumerate, icdeg_direct};
use crate::oracle::{equivalence_suite, make_planted_instance, RootMode};
use crate::poly::{rational_roots, KnotVector, PowerPoly};
use crate::subres::{sres, PolySystem};

#[derive(Parser)]
#[command(
    name = "newton-subres",
    version,
    about = "Exact subresultants, gcds and cofactor degrees for several univariate polynomials in a Newton basis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the subresultant S_delta of F0, F1, ..., Ft
    Sres {
        /// Multi-index, comma-separated, one entry per trailing polynomial
        #[arg(long, value_delimiter = ',', required = true)]
        delta: Vec<usize>,
        /// Knot vector: `zeros`, `roots`, or comma-separated rationals
        #[arg(long, default_value = "zeros", allow_hyphen_values = true)]
        knots: KnotSpec,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
        /// Input polynomials F0 F1 ... (highest degree first; reordered if not)
        #[arg(required = true, num_args = 2.., allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Recover gcd(F) and the incremental cofactor degrees
    Gcd {
        #[arg(long, default_value = "zeros", allow_hyphen_values = true)]
        knots: KnotSpec,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
        /// Also print the scan log of principal coefficients
        #[arg(long)]
        verbose: bool,
        #[arg(required = true, num_args = 2.., allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Incremental cofactor degrees by successive Euclidean gcds
    Icdeg {
        #[arg(required = true, num_args = 2.., allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Print the generalized companion matrix of a polynomial
    Companion {
        #[arg(long, default_value = "zeros", allow_hyphen_values = true)]
        knots: KnotSpec,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Convert a polynomial between the power and Newton bases
    Convert {
        #[arg(long, default_value = "zeros", allow_hyphen_values = true)]
        knots: KnotSpec,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Run the seeded oracle-equivalence suite
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        instances: usize,
    },
    /// Sweep knot strategies over generated systems; CSV on stdout
    Bench {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instances per size profile
        #[arg(long, default_value_t = 2)]
        count: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Plain,
    Newton,
    Json,
    Latex,
}

/// Knot vector request: resolved against `F0` once its degree is known.
#[derive(Clone, Debug)]
enum KnotSpec {
    Zeros,
    Roots,
    Explicit(Vec<Rational>),
}

impl FromStr for KnotSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "zeros" => Ok(KnotSpec::Zeros),
            "roots" => Ok(KnotSpec::Roots),
            _ => {
                let mut vals = Vec::new();
                for part in s.split(',') {
                    let r = Rational::from_str(part.trim())
                        .map_err(|e| format!("bad knot `{}`: {}", part.trim(), e))?;
                    vals.push(r);
                }
                Ok(KnotSpec::Explicit(vals))
            }
        }
    }
}

impl KnotSpec {
    /// Resolve to a concrete knot vector for a basis of size `d0`.
    fn resolve(&self, f0: &PowerPoly, d0: usize) -> Result<KnotVector, Failure> {
        match self {
            KnotSpec::Zeros => Ok(KnotVector::zeros(d0)),
            KnotSpec::Roots => match rational_roots(f0) {
                Some(mut roots) => {
                    roots.truncate(d0);
                    Ok(KnotVector::new(roots))
                }
                None => Err(usage(
                    "F0 does not factor into rational linear factors; `--knots roots` unavailable",
                )),
            },
            KnotSpec::Explicit(vals) => {
                if vals.len() != d0 {
                    return Err(usage(format!(
                        "knot vector has {} entries but deg F0 = {}",
                        vals.len(),
                        d0
                    )));
                }
                Ok(KnotVector::new(vals.clone()))
            }
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Sres {
            delta,
            knots,
            format,
            polys,
        } => cmd_sres(&delta, &knots, format, &polys),
        Command::Gcd {
            knots,
            format,
            verbose,
            polys,
        } => cmd_gcd(&knots, format, verbose, &polys),
        Command::Icdeg { polys } => cmd_icdeg(&polys),
        Command::Companion {
            knots,
            format,
            poly,
        } => cmd_companion(&knots, format, &poly),
        Command::Convert {
            knots,
            format,
            poly,
        } => cmd_convert(&knots, format, &poly),
        Command::Selftest { seed, instances } => Ok(cmd_selftest(seed, instances)),
        Command::Bench { seed, count } => Ok(cmd_bench(seed, count)),
    }
}

fn parse_inputs(texts: &[String]) -> Result<Vec<PolyExpr>, Failure> {
    let mut out = Vec::with_capacity(texts.len());
    for (i, t) in texts.iter().enumerate() {
        let e = PolyExpr::parse(t)
            .map_err(|e| usage(format!("in polynomial {} `{}`: {}", i + 1, t, e)))?;
        if e.poly.is_zero() {
            return Err(usage(format!("polynomial {} is zero", i + 1)));
        }
        out.push(e);
    }
    Ok(out)
}

/// Move the first polynomial of maximal degree to the front (ties keep the
/// input order). Returns the new order as 1-based input positions when a
/// move happened.
fn reorder_for_f0(exprs: Vec<PolyExpr>) -> (Vec<PolyExpr>, Option<Vec<usize>>) {
    let max_deg = exprs
        .iter()
        .map(|e| e.poly.degree().expect("nonzero"))
        .max()
        .expect("nonempty");
    let lead = exprs
        .iter()
        .position(|e| e.poly.degree() == Some(max_deg))
        .expect("max exists");
    if lead == 0 {
        return (exprs, None);
    }
    let mut order: Vec<usize> = Vec::with_capacity(exprs.len());
    order.push(lead + 1);
    order.extend((1..=exprs.len()).filter(|&i| i != lead + 1));
    let mut reordered = Vec::with_capacity(exprs.len());
    let mut exprs: Vec<Option<PolyExpr>> = exprs.into_iter().map(Some).collect();
    for &i in &order {
        reordered.push(exprs[i - 1].take().expect("each index once"));
    }
    (reordered, Some(order))
}

fn build_system(exprs: &[PolyExpr], knots: &KnotSpec) -> Result<(PolySystem, KnotVector), Failure> {
    let f0 = &exprs[0].poly;
    let d0 = f0.degree().expect("nonzero");
    let kv = knots.resolve(f0, d0)?;
    let others: Vec<PowerPoly> = exprs[1..].iter().map(|e| e.poly.clone()).collect();
    let sys =
        PolySystem::from_power(f0.clone(), others, kv.clone()).map_err(|e| usage(e.to_string()))?;
    Ok((sys, kv))
}

fn print_reorder_note(order: &Option<Vec<usize>>) {
    if let Some(order) = order {
        println!(
            "note: reordered inputs so F0 has maximal degree; order = {}",
            render::index_tuple(order)
        );
    }
}

fn cmd_sres(
    delta: &[usize],
    knots: &KnotSpec,
    format: OutputFormat,
    polys: &[String],
) -> Result<i32, Failure> {
    let (exprs, order) = reorder_for_f0(parse_inputs(polys)?);
    let (sys, kv) = build_system(&exprs, knots)?;
    if delta.len() != sys.arity() {
        return Err(usage(format!(
            "--delta has {} entries but the system has {} trailing polynomials",
            delta.len(),
            sys.arity()
        )));
    }
    let di = sys.delta(delta).map_err(|e| usage(e.to_string()))?;
    let result = sres(&sys, &di).map_err(|e| usage(e.to_string()))?;
    print_reorder_note(&order);
    match format {
        OutputFormat::Json => {
            println!("{}", render::sres_json(&kv, &result));
        }
        _ => {
            match format {
                OutputFormat::Newton => {
                    println!("knots = {}", render::rational_list(kv.as_slice()));
                    println!("S = {}", render::newton_string(&result.poly));
                }
                OutputFormat::Latex => {
                    println!("S = {}", render::latex_string(&result.poly.to_power()));
                }
                _ => println!("S = {}", result.poly.to_power()),
            }
            println!("delta = {}", render::index_tuple(result.delta.delta()));
            println!("delta0 = {}", result.delta.delta0());
            println!("eps = {}", result.delta.eps());
            println!("sign = {}", result.sign);
            println!("leading = {}", result.leading);
        }
    }
    Ok(0)
}

fn cmd_gcd(
    knots: &KnotSpec,
    format: OutputFormat,
    verbose: bool,
    polys: &[String],
) -> Result<i32, Failure> {
    let (exprs, order) = reorder_for_f0(parse_inputs(polys)?);
    let (sys, kv) = build_system(&exprs, knots)?;
    let report = gcd_via_sres(&sys);
    print_reorder_note(&order);
    if verbose {
        for (gamma, s) in &report.scan_log {
            println!("scan: s({}) = {}", render::index_tuple(gamma), s);
        }
    }
    match format {
        OutputFormat::Json => {
            let value = serde_json::json!({
                "delta_star": report.delta_star.delta(),
                "icdeg": report.icdeg,
                "knots": render::json_rationals(kv.as_slice()),
                "gcd_newton": render::json_rationals(report.gcd_poly.coeffs()),
                "gcd_power": render::json_rationals(report.gcd_poly.to_power().coeffs()),
            });
            println!("{}", value);
        }
        _ => {
            println!(
                "delta_star = {}",
                render::index_tuple(report.delta_star.delta())
            );
            match format {
                OutputFormat::Newton => {
                    println!("knots = {}", render::rational_list(kv.as_slice()));
                    println!("gcd = {}", render::newton_string(&report.gcd_poly));
                }
                OutputFormat::Latex => {
                    println!(
                        "gcd = {}",
                        render::latex_string(&report.gcd_poly.to_power())
                    );
                }
                _ => println!("gcd = {}", report.gcd_poly.to_power()),
            }
            println!("icdeg = {}", render::index_tuple(&report.icdeg));
        }
    }
    Ok(0)
}

fn cmd_icdeg(polys: &[String]) -> Result<i32, Failure> {
    let (exprs, order) = reorder_for_f0(parse_inputs(polys)?);
    let (sys, _) = build_system(&exprs, &KnotSpec::Zeros)?;
    print_reorder_note(&order);
    println!("icdeg = {}", render::index_tuple(&icdeg_direct(&sys)));
    Ok(0)
}

fn cmd_companion(knots: &KnotSpec, format: OutputFormat, poly: &str) -> Result<i32, Failure> {
    let expr = PolyExpr::parse(poly).map_err(|e| usage(format!("in `{}`: {}", poly, e)))?;
    let d0 = match expr.poly.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(usage("the polynomial must have degree at least 1")),
    };
    let kv = knots.resolve(&expr.poly, d0)?;
    let np = expr.poly.to_newton(&kv).expect("knot count equals degree");
    let comp = companion_matrix(&np).map_err(|e| usage(e.to_string()))?;
    match format {
        OutputFormat::Json => {
            let m = comp.reduced();
            let rows: Vec<Vec<String>> = (0..m.rows())
                .map(|i| m.row(i).iter().map(ToString::to_string).collect())
                .collect();
            let value = serde_json::json!({
                "scale": comp.scale().to_string(),
                "knots": render::json_rationals(kv.as_slice()),
                "matrix": rows,
            });
            println!("{}", value);
        }
        _ => {
            println!("scale = {}", comp.scale());
            println!("matrix = {}", render::matrix_string(comp.reduced()));
        }
    }
    Ok(0)
}

fn cmd_convert(knots: &KnotSpec, format: OutputFormat, poly: &str) -> Result<i32, Failure> {
    let expr = PolyExpr::parse(poly).map_err(|e| usage(format!("in `{}`: {}", poly, e)))?;
    let deg = expr.poly.degree().unwrap_or(0);
    let kv = match knots {
        // Explicit knot vectors may be longer than the degree here; the
        // extra basis elements just carry zero coefficients.
        KnotSpec::Explicit(vals) => {
            if vals.len() < deg {
                return Err(usage(format!(
                    "need at least {} knots for a degree-{} polynomial",
                    deg, deg
                )));
            }
            KnotVector::new(vals.clone())
        }
        _ => knots.resolve(&expr.poly, deg)?,
    };
    let np = expr.poly.to_newton(&kv).expect("enough knots");
    match format {
        OutputFormat::Json => {
            let value = serde_json::json!({
                "knots": render::json_rationals(kv.as_slice()),
                "newton_coeffs": render::json_rationals(np.coeffs()),
                "power_coeffs": render::json_rationals(expr.poly.coeffs()),
            });
            println!("{}", value);
        }
        OutputFormat::Latex => {
            println!("knots = {}", render::rational_list(kv.as_slice()));
            println!("newton = {}", render::newton_string(&np));
            println!("power = {}", render::latex_string(&expr.poly));
        }
        _ => {
            println!("knots = {}", render::rational_list(kv.as_slice()));
            println!("newton = {}", render::newton_string(&np));
            println!("power = {}", expr.poly);
        }
    }
    Ok(0)
}

fn cmd_selftest(seed: u64, instances: usize) -> i32 {
    println!("selftest: seed = {}, instances = {}", seed, instances);
    let report = equivalence_suite(seed, instances);
    println!("checks passed = {}", report.passed);
    println!("checks failed = {}", report.failed);
    for f in &report.failures {
        println!("failure: {}", f);
    }
    if report.all_passed() {
        println!("result: PASS");
        0
    } else {
        println!("result: FAIL");
        1
    }
}

fn cmd_bench(seed: u64, count: usize) -> i32 {
    match bench_csv(seed, count, &mut std::io::stdout().lock()) {
        Ok(()) => 0,
        // A closed downstream pipe (e.g. `bench | head`) is a normal exit.
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("error: {}", e);
            1
        }
    }
}

fn bench_csv(seed: u64, count: usize, out: &mut impl std::io::Write) -> std::io::Result<()> {
    writeln!(out, "strategy,d0,t,delta,wall_ns,max_coeff_bits")?;
    let profiles: [(usize, usize); 5] = [(3, 1), (4, 1), (4, 2), (5, 2), (6, 3)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (d0, t) in profiles {
        for _ in 0..count {
            let deg_gcd = rng.random_range(0..=d0.min(2));
            let c0 = d0 - deg_gcd;
            let mut cofs = vec![c0];
            for _ in 0..t {
                cofs.push(rng.random_range(0..=c0));
            }
            let inst = make_planted_instance(rng.random(), t, deg_gcd, &cofs, RootMode::Distinct)
                .expect("valid profile");
            for strategy in ["zeros", "roots", "random"] {
                let kv = match strategy {
                    "zeros" => KnotVector::zeros(d0),
                    "roots" => KnotVector::new(inst.roots.clone()),
                    _ => KnotVector::new(
                        (0..d0)
                            .map(|_| {
                                let den = rng.random_range(1i64..=3);
                                ratio(rng.random_range(-5 * den..=5 * den), den)
                            })
                            .collect(),
                    ),
                };
                let sys = inst.system(kv).expect("well-formed instance");
                for gamma in glex_enumerate(t, d0) {
                    let di = sys.delta(&gamma).expect("|gamma| <= d0");
                    let t0 = Instant::now();
                    let result = sres(&sys, &di).expect("valid index");
                    let wall_ns = t0.elapsed().as_nanos();
                    let bits = result
                        .poly
                        .coeffs()
                        .iter()
                        .map(|c| c.numer().bits().max(c.denom().bits()))
                        .max()
                        .unwrap_or(0);
                    writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        strategy,
                        d0,
                        t,
                        gamma
                            .iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join("|"),
                        wall_ns,
                        bits
                    )?;
                }
            }
        }
    }
    Ok(())
}
