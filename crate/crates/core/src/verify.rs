//! Executable statements of the closure theorems over desk-scale instances,
//! emitting structured, deterministic reports.
//!
//! The specialization and radical checks use random integer values for the
//! generic coefficients z; closure of the extended ideal equals the extended
//! closure because the extension is flat with integrally closed fibers, so
//! all arithmetic stays in the original polynomial ring.

use crate::bourbaki::poly_gcd;
use crate::error::{Error, Result};
use crate::groebner::{height, ideal_intersect, Ideal};
use crate::monomial::Monomial;
use crate::monomial_ideal::{monomial_closure_power, MonomialIdeal};
use crate::poly::Polynomial;
use crate::rees::{generic_element, is_integral_element_mod, GenericMode, IntegralityResult};
use crate::ring::{Ring, RingContext};
use crate::rlr2::{integral_closure_2d, is_integrally_closed_2d, order_local, LocalIdeal2D, DEFAULT_DEPTH};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "detail")]
pub enum Verdict {
    Pass { trivial: bool },
    Fail { witness: String },
    Inconclusive { reason: String },
}

/// A structured report. Timing is carried in memory but excluded from the
/// serialized form so fixed-seed runs emit byte-identical JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub instance: String,
    pub verdict: Verdict,
    pub reduction_cap: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree_bound: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n_max: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub count: Option<u32>,
    pub seeds: Vec<u64>,
    #[serde(skip, default)]
    pub timing_ms: u64,
}

pub const DEFAULT_CAP: u32 = 6;
pub const DEFAULT_DEGREE_SLACK: u32 = 6;

fn var_names(g: usize) -> Vec<String> {
    match g {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        _ => (1..=g).map(|i| format!("x{i}")).collect(),
    }
}

/// Theorem (Itoh-Huneke): for a monomial complete intersection
/// I = (x1^a1, ..., xg^ag), closure(I^{n+1}) ∩ I^n = closure(I) I^n.
pub fn verify_itoh(exponents: &[u32], n_max: u32) -> Result<VerificationReport> {
    let start = std::time::Instant::now();
    assert!(!exponents.is_empty() && exponents.iter().all(|&a| a >= 1));
    let g = exponents.len();
    let ring = RingContext::new(var_names(g), crate::coeff::CoeffField::Q, crate::ring::MonomialOrder::GrevLex)?;
    let gens: Vec<Monomial> = exponents
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let mut e = vec![0u32; g];
            e[i] = a;
            Monomial(e)
        })
        .collect();
    let mi = MonomialIdeal::new(&ring, gens);
    let i = mi.to_ideal();
    let mut verdict = Verdict::Pass { trivial: false };
    for n in 0..=n_max {
        let lhs = ideal_intersect(&monomial_closure_power(&mi, n + 1)?.to_ideal(), &i.power(n))?;
        let rhs = monomial_closure_power(&mi, 1)?.to_ideal().product(&i.power(n));
        if !lhs.equals(&rhs)? {
            let witness = lhs
                .gb(crate::ring::MonomialOrder::GrevLex)?
                .iter()
                .find(|h| !rhs.contains_poly(h).unwrap_or(false))
                .map(|h| h.to_string())
                .unwrap_or_else(|| "generator of the right side missing on the left".into());
            verdict = Verdict::Fail {
                witness: format!("n = {n}: {witness}"),
            };
            break;
        }
    }
    Ok(VerificationReport {
        theorem: "itoh-huneke".into(),
        instance: format!("complete intersection exponents {exponents:?}"),
        verdict,
        reduction_cap: DEFAULT_CAP,
        degree_bound: None,
        n_max: Some(n_max),
        count: None,
        seeds: vec![],
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

/// The closure of I by whichever exact oracle applies: the Newton
/// polyhedron for monomial ideals, the quadratic-transform recursion for
/// 2-variable m-primary ideals.
pub fn closure_oracle(i: &Ideal, seed: u64) -> Result<Ideal> {
    if i.is_monomial() {
        let mi = MonomialIdeal::from_ideal(i)?;
        return Ok(monomial_closure_power(&mi, 1)?.to_ideal());
    }
    if i.ring.nvars() == 2 {
        return integral_closure_2d(&LocalIdeal2D::new(i.clone())?, seed, DEFAULT_DEPTH);
    }
    Err(Error::Invalid(
        "closure oracle needs a monomial or 2-variable m-primary ideal".into(),
    ))
}

/// Theorem (specialization): for ht I >= 2 and a generic element x of I,
/// closure(I'/(x)) = closure(I')/(x). The easy inclusion is certified
/// generator by generator; the hard inclusion is probed by sweeping all
/// monomials of degree <= D outside closure(I) + (x) for an integrality
/// certificate mod (x) — any certificate is a failure witness.
pub fn verify_specialization(
    i: &Ideal,
    seeds: &[u64],
    reduction_cap: u32,
    degree_bound: Option<u32>,
) -> Result<VerificationReport> {
    let start = std::time::Instant::now();
    if height(i)? < 2 {
        return Err(Error::HeightTooSmall);
    }
    let closure = closure_oracle(i, seeds.first().copied().unwrap_or(0))?;
    let d = degree_bound.unwrap_or(order_local(&closure)? + DEFAULT_DEGREE_SLACK);
    let mut verdict = Verdict::Pass { trivial: false };
    'seeds: for &seed in seeds {
        let gx = generic_element(i, GenericMode::Random, seed)?;
        let modulus = Ideal::new(&i.ring, vec![gx.element.clone()]);
        // easy inclusion: closure(I)/(x) inside closure(I/(x))
        for g in &closure.gens {
            match is_integral_element_mod(g, i, Some(&modulus), reduction_cap)? {
                IntegralityResult::Integral(_) => {}
                IntegralityResult::UnknownUpTo(c) => {
                    verdict = Verdict::Inconclusive {
                        reason: format!(
                            "seed {seed}: closure generator {g} not certified within cap {c}"
                        ),
                    };
                    break 'seeds;
                }
            }
        }
        // hard inclusion: nothing outside closure(I) + (x) may certify
        let outside = closure.sum(&modulus);
        for f in monomials_up_to(&i.ring, d) {
            if outside.contains_poly(&f)? {
                continue;
            }
            if let IntegralityResult::Integral(n) =
                is_integral_element_mod(&f, i, Some(&modulus), reduction_cap)?
            {
                verdict = Verdict::Fail {
                    witness: format!(
                        "seed {seed}: {f} integral over I mod (x) at power {n} but outside closure(I) + (x)"
                    ),
                };
                break 'seeds;
            }
        }
    }
    Ok(VerificationReport {
        theorem: "specialization".into(),
        instance: format!("I = ({})", join_gens(i)),
        verdict,
        reduction_cap,
        degree_bound: Some(d),
        n_max: None,
        count: None,
        seeds: seeds.to_vec(),
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

/// Corollary (radical): sqrt((x)) lies in closure(I') for a generic
/// element x of I (ht I >= 2). Squarefree x makes this trivial; otherwise
/// each factor from the gcd cascade must certify integral over I.
pub fn verify_radical(
    i: &Ideal,
    seed: u64,
    z_override: Option<&[i64]>,
    reduction_cap: u32,
) -> Result<VerificationReport> {
    let start = std::time::Instant::now();
    if height(i)? < 2 {
        return Err(Error::HeightTooSmall);
    }
    let x = match z_override {
        None => generic_element(i, GenericMode::Random, seed)?.element,
        Some(z) => {
            assert_eq!(z.len(), i.gens.len());
            let mut acc = Polynomial::zero(&i.ring);
            for (g, &c) in i.gens.iter().zip(z) {
                acc = acc.add(&g.scale(&i.ring.field.from_i64(c)));
            }
            acc
        }
    };
    let mut g = x.clone();
    for v in 0..i.ring.nvars() {
        g = poly_gcd(&g, &x.partial_derivative(v))?;
    }
    let verdict = if g.is_constant() {
        Verdict::Pass { trivial: true }
    } else {
        // factors: the repeated part g and the squarefree cofactor x / g
        let cofactor = x
            .exact_divide(&g)?
            .ok_or_else(|| Error::Invalid("gcd must divide".into()))?;
        let mut verdict = Verdict::Pass { trivial: false };
        for f in [g, cofactor] {
            if f.is_constant() {
                continue;
            }
            match crate::rees::is_integral_element(&f, i, reduction_cap)? {
                IntegralityResult::Integral(_) => {}
                IntegralityResult::UnknownUpTo(c) => {
                    verdict = Verdict::Inconclusive {
                        reason: format!(
                            "factor {f} of the non-squarefree generic element earned no \
                             certificate within cap {c}; the chosen z is not generic"
                        ),
                    };
                    break;
                }
            }
        }
        verdict
    };
    Ok(VerificationReport {
        theorem: "radical".into(),
        instance: format!("I = ({})", join_gens(i)),
        verdict,
        reduction_cap,
        degree_bound: None,
        n_max: None,
        count: None,
        seeds: vec![seed],
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

/// Products of integrally closed m-primary ideals of k[x,y] are integrally
/// closed: sampled over random monomial and deformed ideals.
pub fn verify_product_closure(count: u32, seed: u64) -> Result<VerificationReport> {
    let start = std::time::Instant::now();
    let ring = RingContext::q(&["x", "y"]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut verdict = Verdict::Pass { trivial: false };
    for k in 0..count {
        let a = random_mprimary(&ring, &mut rng, 4)?;
        let b = random_mprimary(&ring, &mut rng, 4)?;
        let ca = integral_closure_2d(&LocalIdeal2D::new(a.clone())?, seed ^ (k as u64), DEFAULT_DEPTH)?;
        let cb = integral_closure_2d(&LocalIdeal2D::new(b.clone())?, seed ^ (k as u64 + 1), DEFAULT_DEPTH)?;
        let prod = ca.product(&cb);
        if !is_integrally_closed_2d(&LocalIdeal2D::new(prod)?, DEFAULT_DEPTH)? {
            verdict = Verdict::Fail {
                witness: format!(
                    "pair {k}: closure({}) * closure({}) not integrally closed",
                    join_gens(&a),
                    join_gens(&b)
                ),
            };
            break;
        }
    }
    Ok(VerificationReport {
        theorem: "product-closure".into(),
        instance: format!("{count} random m-primary pairs in k[x,y]"),
        verdict,
        reduction_cap: DEFAULT_CAP,
        degree_bound: None,
        n_max: None,
        count: Some(count),
        seeds: vec![seed],
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

/// A random m-primary ideal of k[x,y]: pure powers x^a, y^b, sometimes an
/// interior monomial, sometimes a higher-order binomial deformation.
pub fn random_mprimary(ring: &Ring, rng: &mut ChaCha8Rng, max_exp: u32) -> Result<Ideal> {
    loop {
        let a = rng.gen_range(1..=max_exp);
        let b = rng.gen_range(1..=max_exp);
        let x = Polynomial::var(ring, 0);
        let y = Polynomial::var(ring, 1);
        let mut gens = vec![x.pow(a), y.pow(b)];
        if a > 1 && b > 1 && rng.gen_bool(0.5) {
            let c = rng.gen_range(1..a);
            let d = rng.gen_range(1..b);
            gens.push(x.pow(c).mul(&y.pow(d)));
        }
        if rng.gen_bool(0.3) {
            // deform x^a by a term of total degree >= a
            let coef = ring.field.from_i64(rng.gen_range(1..=5));
            gens[0] = gens[0].add(&x.pow(a.saturating_sub(1)).mul(&y.pow(b)).scale(&coef));
        }
        let i = Ideal::new(ring, gens);
        if LocalIdeal2D::new(i.clone()).is_ok() {
            return Ok(i);
        }
    }
}

fn monomials_up_to(ring: &Ring, d: u32) -> Vec<Polynomial> {
    let nv = ring.nvars();
    let mut out = Vec::new();
    let mut cur = vec![0u32; nv];
    fn rec(ring: &Ring, d: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Polynomial>) {
        if pos == cur.len() {
            out.push(Polynomial::term(
                ring,
                Monomial(cur.clone()),
                ring.field.one(),
            ));
            return;
        }
        let used: u32 = cur[..pos].iter().sum();
        for e in 0..=(d - used) {
            cur[pos] = e;
            rec(ring, d, pos + 1, cur, out);
        }
        cur[pos] = 0;
    }
    rec(ring, d, 0, &mut cur, &mut out);
    out
}

fn join_gens(i: &Ideal) -> String {
    i.gens
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
