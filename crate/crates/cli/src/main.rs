//! `icl` — command-line surface for the integral-closure toolkit.
//!
//! Grammar: `icl <group> <op> [flags]` with groups poly | ideal | module |
//! verify, plus `icl run <problem.json>`. Exit codes: 0 success/PASS,
//! 1 any FAIL, 2 INCONCLUSIVE present without FAIL, 3 usage or I/O error.

mod cache;
mod problem;

use clap::{Args, Parser, Subcommand};
use icl_core::bourbaki::{
    fitting_ideal, generic_bourbaki_ideal, is_contracted_module, is_integrally_closed_module,
    module_transform, nu_module, order_module, FModule,
};
use icl_core::groebner::{
    colength_0dim, eliminate, ideal_intersect, ideal_quotient, krull_dim, Ideal,
};
use icl_core::monomial_ideal::{monomial_closure_power, MonomialIdeal};
use icl_core::rees::{
    is_integral_element, is_reduction, multiplicity_2d, rees_presentation, GenericMode,
    IntegralityResult, ReductionResult,
};
use icl_core::rlr2::{
    base_point_tree, base_points, integral_closure_2d, is_contracted, is_integrally_closed_2d,
    nu_local, order_local, quadratic_transform, Chart, LocalIdeal2D, DEFAULT_DEPTH,
};
use icl_core::verify::{
    verify_itoh, verify_product_closure, verify_radical, verify_specialization, VerificationReport,
    Verdict, DEFAULT_CAP,
};
use icl_core::{parse_polynomial, CoeffField, Monomial, MonomialOrder, Ring, RingContext};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "icl", version, about = "Exact integral-closure computations over polynomial rings")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    group: Group,
}

#[derive(Args, Clone)]
pub struct Global {
    /// Ring spec: "x,y/Q" or "x,y/Fp:65537"
    #[arg(long, global = true, default_value = "x,y/Q")]
    pub ring: String,
    /// Emit JSON instead of human-readable text
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for all randomized constructions
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Reduction-power cap for integrality certificates
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: u32,
    /// Degree bound for candidate sweeps
    #[arg(long, global = true)]
    pub degree_bound: Option<u32>,
    /// Emit the base-point tree alongside closedness results
    #[arg(long, global = true)]
    pub trace: bool,
    /// Groebner-basis cache directory
    #[arg(long, global = true)]
    pub cache: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Group {
    /// Polynomial-level operations
    Poly {
        #[command(subcommand)]
        op: PolyOp,
    },
    /// Ideal-level operations
    Ideal {
        #[command(subcommand)]
        op: IdealOp,
    },
    /// Module-level operations
    Module {
        #[command(subcommand)]
        op: ModuleOp,
    },
    /// Theorem verification harness
    Verify {
        #[command(subcommand)]
        op: VerifyOp,
    },
    /// Run a JSON problem file
    Run { path: std::path::PathBuf },
}

#[derive(Subcommand)]
enum PolyOp {
    /// Parse and reprint in canonical form
    Parse {
        #[arg(long)]
        f: String,
    },
    /// Order (degree of the lowest-degree form)
    Order {
        #[arg(long)]
        f: String,
    },
}

#[derive(Subcommand)]
enum IdealOp {
    /// Reduced Groebner basis
    Gb {
        #[arg(long)]
        ideal: String,
        /// Monomial order: grevlex | lex
        #[arg(long, default_value = "grevlex")]
        order: String,
    },
    /// Ideal membership of a polynomial
    Member {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        f: String,
    },
    Intersect {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        other: String,
    },
    Quotient {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        other: String,
    },
    /// Eliminate variables (comma-separated names)
    Eliminate {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        vars: String,
    },
    /// Krull dimension of R/I
    Dim {
        #[arg(long)]
        ideal: String,
    },
    /// Colength of a zero-dimensional ideal
    Colength {
        #[arg(long)]
        ideal: String,
    },
    /// Integral closure (Newton polyhedron for monomial ideals; quadratic
    /// transforms for 2-variable m-primary ideals)
    Closure {
        #[arg(long)]
        ideal: Option<String>,
        /// Monomial generators as a JSON exponent matrix, e.g. [[2,0],[0,2]]
        #[arg(long)]
        monomial: Option<String>,
        /// Close the n-th power (monomial path only)
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Reduction test: is `sub` a reduction of `ideal`?
    Reduction {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        sub: String,
    },
    /// Integral-dependence certificate for a polynomial
    IntegralTest {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        f: String,
    },
    /// Hilbert-Samuel multiplicity (2 variables)
    Multiplicity {
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 4)]
        trials: u32,
    },
    /// Rees-algebra presentation ideal
    Rees {
        #[arg(long)]
        ideal: String,
    },
    /// Order o(I) at the origin
    Order {
        #[arg(long)]
        ideal: String,
    },
    /// Minimal number of generators at the origin
    Nu {
        #[arg(long)]
        ideal: String,
    },
    /// Contractedness test (nu = o + 1)
    Contracted {
        #[arg(long)]
        ideal: String,
    },
    /// Quadratic transform on a blow-up chart
    Transform {
        #[arg(long)]
        ideal: String,
        /// x or y
        #[arg(long, default_value = "x")]
        chart: String,
    },
    /// Base points in the first infinitesimal neighborhood
    BasePoints {
        #[arg(long)]
        ideal: String,
    },
    /// Integral closedness via the base-point recursion
    IsClosed {
        #[arg(long)]
        ideal: String,
    },
}

#[derive(Subcommand)]
enum ModuleOp {
    /// Fitting ideal Fitt_i
    Fitting {
        #[arg(long)]
        module: String,
        #[arg(long)]
        index: usize,
    },
    Order {
        #[arg(long)]
        module: String,
    },
    Nu {
        #[arg(long)]
        module: String,
    },
    Contracted {
        #[arg(long)]
        module: String,
    },
    /// Generic Bourbaki ideal
    Bourbaki {
        #[arg(long)]
        module: String,
    },
    IsClosed {
        #[arg(long)]
        module: String,
    },
    Transform {
        #[arg(long)]
        module: String,
        #[arg(long, default_value = "x")]
        chart: String,
    },
}

#[derive(Subcommand)]
enum VerifyOp {
    /// Itoh-Huneke intersection theorem on a monomial complete intersection
    Itoh {
        /// Comma-separated exponents, e.g. 2,3
        #[arg(long)]
        exponents: String,
        #[arg(long, default_value_t = 2)]
        nmax: u32,
    },
    /// Specialization by a generic element
    Specialize {
        #[arg(long)]
        ideal: String,
    },
    /// Radical-of-generic-element corollary
    Radical {
        #[arg(long)]
        ideal: String,
    },
    /// Products of closed ideals stay closed
    Product {
        #[arg(long, default_value_t = 10)]
        count: u32,
    },
}

/// Aggregate status for exit-code purposes.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Inconclusive,
    Fail,
}

pub struct Outcome {
    pub json: Value,
    pub human: String,
    pub status: Status,
}

fn main() {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            if cli.global.json {
                println!("{}", serde_json::to_string(&out.json).unwrap());
            } else {
                println!("{}", out.human);
            }
            std::process::exit(match out.status {
                Status::Ok => 0,
                Status::Fail => 1,
                Status::Inconclusive => 2,
            });
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(3);
        }
    }
}

fn dispatch(cli: &Cli) -> icl_core::Result<Outcome> {
    let g = &cli.global;
    match &cli.group {
        Group::Poly { op } => poly_op(g, op),
        Group::Ideal { op } => ideal_op(g, op),
        Group::Module { op } => module_op(g, op),
        Group::Verify { op } => verify_op(g, op),
        Group::Run { path } => problem::run_file(g, path),
    }
}

pub fn parse_ring(spec: &str) -> icl_core::Result<Ring> {
    let (vars, field) = spec
        .rsplit_once('/')
        .ok_or_else(|| icl_core::Error::Invalid(format!("ring spec needs vars/field: {spec}")))?;
    let vars: Vec<String> = vars.split(',').map(|v| v.trim().to_string()).collect();
    let field = match field.trim() {
        "Q" => CoeffField::Q,
        f => match f.strip_prefix("Fp:") {
            Some(p) => CoeffField::Fp(p.parse().map_err(|_| {
                icl_core::Error::Invalid(format!("bad prime in field spec: {f}"))
            })?),
            None => return Err(icl_core::Error::Invalid(format!("unknown field: {f}"))),
        },
    };
    RingContext::new(vars, field, MonomialOrder::GrevLex)
}

pub fn parse_ideal(ring: &Ring, gens: &str) -> icl_core::Result<Ideal> {
    let polys = gens
        .split(',')
        .map(|s| parse_polynomial(s.trim(), ring))
        .collect::<icl_core::Result<Vec<_>>>()?;
    Ok(Ideal::new(ring, polys))
}

pub fn parse_module(ring: &Ring, text: &str) -> icl_core::Result<FModule> {
    let cols: Vec<Vec<String>> = serde_json::from_str(text)
        .map_err(|e| icl_core::Error::Invalid(format!("module JSON: {e}")))?;
    let e = cols
        .first()
        .map(|c| c.len())
        .ok_or_else(|| icl_core::Error::Invalid("empty module".into()))?;
    let parsed = cols
        .iter()
        .map(|c| c.iter().map(|s| parse_polynomial(s, ring)).collect::<icl_core::Result<Vec<_>>>())
        .collect::<icl_core::Result<Vec<_>>>()?;
    FModule::new(ring, e, parsed)
}

fn parse_chart(s: &str) -> icl_core::Result<Chart> {
    match s {
        "x" => Ok(Chart::X),
        "y" => Ok(Chart::Y),
        _ => Err(icl_core::Error::Invalid(format!("chart must be x or y: {s}"))),
    }
}

fn gens_json(i: &Ideal) -> Value {
    json!(i.gens.iter().map(|p| p.to_string()).collect::<Vec<_>>())
}

fn gens_human(i: &Ideal) -> String {
    if i.is_zero() {
        "0".to_string()
    } else {
        i.gens
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn ok(json: Value, human: String) -> icl_core::Result<Outcome> {
    Ok(Outcome {
        json,
        human,
        status: Status::Ok,
    })
}

fn poly_op(g: &Global, op: &PolyOp) -> icl_core::Result<Outcome> {
    let ring = parse_ring(&g.ring)?;
    match op {
        PolyOp::Parse { f } => {
            let p = parse_polynomial(f, &ring)?;
            ok(json!({ "poly": p.to_string() }), p.to_string())
        }
        PolyOp::Order { f } => {
            let p = parse_polynomial(f, &ring)?;
            let (d, form) = p.lowest_degree_form()?;
            ok(
                json!({ "order": d, "lowest_form": form.to_string() }),
                format!("order {d}, lowest form {form}"),
            )
        }
    }
}

fn local_ideal(ring: &Ring, gens: &str) -> icl_core::Result<LocalIdeal2D> {
    LocalIdeal2D::new(parse_ideal(ring, gens)?)
}

fn ideal_op(g: &Global, op: &IdealOp) -> icl_core::Result<Outcome> {
    let ring = parse_ring(&g.ring)?;
    match op {
        IdealOp::Gb { ideal, order } => {
            let i = parse_ideal(&ring, ideal)?;
            let ord = match order.as_str() {
                "grevlex" => MonomialOrder::GrevLex,
                "lex" => MonomialOrder::Lex,
                o => return Err(icl_core::Error::Invalid(format!("unknown order: {o}"))),
            };
            let basis = cache::gb_cached(g.cache.as_deref(), &i, ord)?;
            let strs: Vec<String> = basis.iter().map(|p| p.to_string()).collect();
            ok(json!({ "basis": strs }), strs.join(", "))
        }
        IdealOp::Member { ideal, f } => {
            let i = parse_ideal(&ring, ideal)?;
            let p = parse_polynomial(f, &ring)?;
            let m = i.contains_poly(&p)?;
            ok(json!({ "member": m }), m.to_string())
        }
        IdealOp::Intersect { ideal, other } => {
            let r = ideal_intersect(&parse_ideal(&ring, ideal)?, &parse_ideal(&ring, other)?)?;
            ok(json!({ "generators": gens_json(&r) }), gens_human(&r))
        }
        IdealOp::Quotient { ideal, other } => {
            let r = ideal_quotient(&parse_ideal(&ring, ideal)?, &parse_ideal(&ring, other)?)?;
            ok(json!({ "generators": gens_json(&r) }), gens_human(&r))
        }
        IdealOp::Eliminate { ideal, vars } => {
            let names: Vec<String> = vars.split(',').map(|v| v.trim().to_string()).collect();
            let r = eliminate(&parse_ideal(&ring, ideal)?, &names)?;
            ok(json!({ "generators": gens_json(&r) }), gens_human(&r))
        }
        IdealOp::Dim { ideal } => {
            let d = krull_dim(&parse_ideal(&ring, ideal)?)?;
            ok(json!({ "dim": d }), d.to_string())
        }
        IdealOp::Colength { ideal } => {
            let c = colength_0dim(&parse_ideal(&ring, ideal)?)?;
            ok(json!({ "colength": c }), c.to_string())
        }
        IdealOp::Closure {
            ideal,
            monomial,
            power,
        } => {
            let (mi, from_monomial) = match (ideal, monomial) {
                (_, Some(m)) => {
                    let exps: Vec<Vec<u32>> = serde_json::from_str(m).map_err(|e| {
                        icl_core::Error::Invalid(format!("monomial exponent JSON: {e}"))
                    })?;
                    let gens = exps.into_iter().map(Monomial).collect();
                    (Some(MonomialIdeal::new(&ring, gens)), true)
                }
                (Some(i), None) => {
                    let i = parse_ideal(&ring, i)?;
                    if i.is_monomial() {
                        (Some(MonomialIdeal::from_ideal(&i)?), true)
                    } else {
                        let c = integral_closure_2d(
                            &LocalIdeal2D::new(i)?,
                            g.seed,
                            DEFAULT_DEPTH,
                        )?;
                        return ok(json!({ "generators": gens_json(&c) }), gens_human(&c));
                    }
                }
                (None, None) => {
                    return Err(icl_core::Error::Invalid(
                        "closure needs --ideal or --monomial".into(),
                    ))
                }
            };
            debug_assert!(from_monomial);
            let c = monomial_closure_power(&mi.unwrap(), *power)?.to_ideal();
            ok(json!({ "generators": gens_json(&c) }), gens_human(&c))
        }
        IdealOp::Reduction { ideal, sub } => {
            let i = parse_ideal(&ring, ideal)?;
            let u = parse_ideal(&ring, sub)?;
            match is_reduction(&u, &i, g.cap)? {
                ReductionResult::Yes(n) => ok(
                    json!({ "reduction": true, "power": n }),
                    format!("yes, reduction number {n}"),
                ),
                ReductionResult::NoUpTo(c) => Ok(Outcome {
                    json: json!({ "reduction": false, "cap": c }),
                    human: format!("no certificate up to cap {c}"),
                    status: Status::Inconclusive,
                }),
            }
        }
        IdealOp::IntegralTest { ideal, f } => {
            let i = parse_ideal(&ring, ideal)?;
            let p = parse_polynomial(f, &ring)?;
            match is_integral_element(&p, &i, g.cap)? {
                IntegralityResult::Integral(n) => ok(
                    json!({ "integral": true, "power": n }),
                    format!("integral, certified at power {n}"),
                ),
                IntegralityResult::UnknownUpTo(c) => Ok(Outcome {
                    json: json!({ "integral": null, "cap": c }),
                    human: format!("no certificate up to cap {c}"),
                    status: Status::Inconclusive,
                }),
            }
        }
        IdealOp::Multiplicity { ideal, trials } => {
            let e = multiplicity_2d(&parse_ideal(&ring, ideal)?, *trials, g.seed)?;
            ok(json!({ "multiplicity": e, "seed": g.seed }), e.to_string())
        }
        IdealOp::Rees { ideal } => {
            let r = rees_presentation(&parse_ideal(&ring, ideal)?)?;
            ok(json!({ "relations": gens_json(&r) }), gens_human(&r))
        }
        IdealOp::Order { ideal } => {
            let o = order_local(&parse_ideal(&ring, ideal)?)?;
            ok(json!({ "order": o }), o.to_string())
        }
        IdealOp::Nu { ideal } => {
            let n = nu_local(&parse_ideal(&ring, ideal)?)?;
            ok(json!({ "nu": n }), n.to_string())
        }
        IdealOp::Contracted { ideal } => {
            let c = is_contracted(&local_ideal(&ring, ideal)?)?;
            ok(json!({ "contracted": c }), c.to_string())
        }
        IdealOp::Transform { ideal, chart } => {
            let t = quadratic_transform(&local_ideal(&ring, ideal)?, parse_chart(chart)?)?;
            ok(json!({ "generators": gens_json(&t) }), gens_human(&t))
        }
        IdealOp::BasePoints { ideal } => {
            let bp = base_points(&local_ideal(&ring, ideal)?)?;
            let finite: Vec<String> = bp.finite.iter().map(|c| c.to_string()).collect();
            ok(
                json!({ "finite": finite, "infinity": bp.infinity }),
                format!(
                    "finite: [{}], infinity: {}",
                    finite.join(", "),
                    bp.infinity
                ),
            )
        }
        IdealOp::IsClosed { ideal } => {
            let li = local_ideal(&ring, ideal)?;
            let c = is_integrally_closed_2d(&li, DEFAULT_DEPTH)?;
            let mut body = json!({ "closed": c });
            let mut human = c.to_string();
            if g.trace {
                let tree = base_point_tree(&li, "origin".to_string(), DEFAULT_DEPTH)?;
                body["trace"] = serde_json::to_value(&tree).unwrap();
                human = format!("{c}\n{}", serde_json::to_string_pretty(&tree).unwrap());
            }
            ok(body, human)
        }
    }
}

fn module_op(g: &Global, op: &ModuleOp) -> icl_core::Result<Outcome> {
    let ring = parse_ring(&g.ring)?;
    match op {
        ModuleOp::Fitting { module, index } => {
            let m = parse_module(&ring, module)?;
            let f = fitting_ideal(&m, *index)?;
            ok(json!({ "generators": gens_json(&f) }), gens_human(&f))
        }
        ModuleOp::Order { module } => {
            let o = order_module(&parse_module(&ring, module)?)?;
            ok(json!({ "order": o }), o.to_string())
        }
        ModuleOp::Nu { module } => {
            let n = nu_module(&parse_module(&ring, module)?)?;
            ok(json!({ "nu": n }), n.to_string())
        }
        ModuleOp::Contracted { module } => {
            let c = is_contracted_module(&parse_module(&ring, module)?)?;
            ok(json!({ "contracted": c }), c.to_string())
        }
        ModuleOp::Bourbaki { module } => {
            let m = parse_module(&ring, module)?;
            let b = generic_bourbaki_ideal(&m, None, GenericMode::Random, g.seed)?;
            ok(
                json!({
                    "generators": gens_json(&b.ideal),
                    "path": serde_json::to_value(b.path).unwrap(),
                    "seed": g.seed,
                }),
                gens_human(&b.ideal),
            )
        }
        ModuleOp::IsClosed { module } => {
            let c = is_integrally_closed_module(&parse_module(&ring, module)?, g.seed)?;
            ok(json!({ "closed": c, "seed": g.seed }), c.to_string())
        }
        ModuleOp::Transform { module, chart } => {
            let t = module_transform(&parse_module(&ring, module)?, parse_chart(chart)?)?;
            let cols: Vec<Vec<String>> = t
                .cols
                .iter()
                .map(|c| c.iter().map(|p| p.to_string()).collect())
                .collect();
            ok(
                json!({ "ambient_rank": t.ambient_rank, "columns": cols }),
                format!("{cols:?}"),
            )
        }
    }
}

pub fn report_outcome(rep: &VerificationReport) -> Outcome {
    let status = match &rep.verdict {
        Verdict::Pass { .. } => Status::Ok,
        Verdict::Fail { .. } => Status::Fail,
        Verdict::Inconclusive { .. } => Status::Inconclusive,
    };
    let human = match &rep.verdict {
        Verdict::Pass { trivial: true } => format!("{}: PASS (trivial) — {}", rep.theorem, rep.instance),
        Verdict::Pass { trivial: false } => format!("{}: PASS — {}", rep.theorem, rep.instance),
        Verdict::Fail { witness } => format!("{}: FAIL — {witness}", rep.theorem),
        Verdict::Inconclusive { reason } => format!("{}: INCONCLUSIVE — {reason}", rep.theorem),
    };
    Outcome {
        json: serde_json::to_value(rep).unwrap(),
        human,
        status,
    }
}

fn verify_op(g: &Global, op: &VerifyOp) -> icl_core::Result<Outcome> {
    let rep = match op {
        VerifyOp::Itoh { exponents, nmax } => {
            let exps: Vec<u32> = exponents
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| icl_core::Error::Invalid(format!("bad exponent: {s}")))
                })
                .collect::<icl_core::Result<_>>()?;
            verify_itoh(&exps, *nmax)?
        }
        VerifyOp::Specialize { ideal } => {
            let ring = parse_ring(&g.ring)?;
            let i = parse_ideal(&ring, ideal)?;
            verify_specialization(&i, &[g.seed, g.seed.wrapping_add(1)], g.cap, g.degree_bound)?
        }
        VerifyOp::Radical { ideal } => {
            let ring = parse_ring(&g.ring)?;
            let i = parse_ideal(&ring, ideal)?;
            verify_radical(&i, g.seed, None, g.cap)?
        }
        VerifyOp::Product { count } => verify_product_closure(*count, g.seed)?,
    };
    Ok(report_outcome(&rep))
}
