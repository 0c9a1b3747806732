//! m-primary ideals of k[x,y] localized at the origin: orders, minimal
//! generator counts, quadratic transforms, base points on the exceptional
//! line, and the recursive integral closure through the blow-up.
//!
//! The closure algorithm is exact once coordinates are sheared so that no
//! base point sits at infinity of the x-chart: for I of order r,
//! I O = x^r . (transform) on the blow-up, conditions at non-base points
//! amount to divisibility by x^r, and conditions at base points are the
//! recursively computed closures of the localized transforms.

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::groebner::{colength_0dim, eliminate, fresh_var_name, ideal_intersect, Ideal};
use crate::poly::Polynomial;
use crate::rees::certify_mprimary;
use crate::ring::{Ring, RingContext};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Hard cap on the depth of the infinitely-near base point recursion.
pub const DEFAULT_DEPTH: u32 = 64;

/// An m-primary ideal of the local ring at the origin of a 2-variable
/// polynomial ring, with its order and colength certified on construction.
#[derive(Debug, Clone)]
pub struct LocalIdeal2D {
    pub ideal: Ideal,
    pub order: u32,
    pub colength: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    /// (x, y) -> (x, x t); exceptional divisor x = 0, parameter t.
    X,
    /// (x, y) -> (s y, y); exceptional divisor y = 0, parameter s.
    Y,
}

/// Base points of I in the first infinitesimal neighborhood: finite points
/// are x-chart parameter values, `infinity` marks the y-chart origin.
#[derive(Debug, Clone)]
pub struct BasePoints {
    pub finite: Vec<Coeff>,
    pub infinity: bool,
}

/// One node per infinitely-near base point, for tracing the recursion.
#[derive(Debug, Clone, serde::Serialize)]
pub struct BasePointTree {
    pub point: String,
    pub order: u32,
    pub colength: u64,
    pub nu: u64,
    pub multiplicity: u64,
    pub contracted: bool,
    pub children: Vec<BasePointTree>,
}

impl LocalIdeal2D {
    pub fn new(ideal: Ideal) -> Result<LocalIdeal2D> {
        if ideal.ring.nvars() != 2 {
            return Err(Error::Invalid("local 2d theory needs a 2-variable ring".into()));
        }
        certify_mprimary(&ideal)?;
        let colength = colength_0dim(&ideal)?;
        let order = order_local(&ideal)?;
        Ok(LocalIdeal2D { ideal, order, colength })
    }
}

/// o(I) = max n with I in m^n; equals the minimum order of a generator.
pub fn order_local(i: &Ideal) -> Result<u32> {
    if i.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut o = u64::MAX;
    for g in &i.gens {
        o = o.min(g.lowest_degree_form()?.0);
    }
    Ok(o as u32)
}

fn maximal_ideal(ring: &Ring) -> Ideal {
    Ideal::new(
        ring,
        (0..ring.nvars()).map(|v| Polynomial::var(ring, v)).collect(),
    )
}

/// Minimal number of generators at the origin: length of I / mI.
pub fn nu_local(i: &Ideal) -> Result<u64> {
    let m = maximal_ideal(&i.ring);
    Ok(colength_0dim(&m.product(i))? - colength_0dim(i)?)
}

/// I is contracted from its blow-up exactly when nu(I) = o(I) + 1.
pub fn is_contracted(li: &LocalIdeal2D) -> Result<bool> {
    Ok(nu_local(&li.ideal)? == li.order as u64 + 1)
}

/// The transform of I on a chart of the blow-up of the origin: substitute,
/// then divide out the o(I)-th power of the exceptional coordinate. The
/// division is exact because a generator g of order d >= o(I) pulls back
/// with exceptional valuation exactly d. The result lives in a fresh copy
/// of the 2-variable ring ("x", "y"): on chart X the new y is the
/// parameter t, on chart Y the new x is the parameter s.
pub fn quadratic_transform(li: &LocalIdeal2D, chart: Chart) -> Result<Ideal> {
    let src = &li.ideal.ring;
    let dst = RingContext::new(
        vec!["x".to_string(), "y".to_string()],
        src.field,
        src.order,
    )?;
    let x = Polynomial::var(&dst, 0);
    let y = Polynomial::var(&dst, 1);
    let (images, exc) = match chart {
        Chart::X => (vec![x.clone(), x.mul(&y)], x.clone()),
        Chart::Y => (vec![x.mul(&y), y.clone()], y.clone()),
    };
    let exc_pow = exc.pow(li.order);
    let mut gens = Vec::new();
    for g in &li.ideal.gens {
        let h = g.ring_map_apply(&images, &dst)?;
        let q = h
            .exact_divide(&exc_pow)?
            .expect("transform divisible by exceptional power");
        gens.push(q);
    }
    Ok(Ideal::new(&dst, gens))
}

/// Localize a zero-dimensional ideal at the origin by adding m^{N+1} for
/// N = total colength: components away from the origin become units while
/// the local component is untouched (m^N is already inside I locally).
pub fn localize_at_origin(j: &Ideal) -> Result<Ideal> {
    if j.is_unit()? {
        return Ok(Ideal::unit(&j.ring));
    }
    let n = colength_0dim(j)? as u32;
    Ok(j.sum(&maximal_ideal(&j.ring).power(n + 1)))
}

/// Translate the chart parameter (second variable) by c: y -> y + c.
fn translate_param(j: &Ideal, c: &Coeff) -> Result<Ideal> {
    let r = &j.ring;
    let images = vec![
        Polynomial::var(r, 0),
        Polynomial::var(r, 1).add(&Polynomial::constant(r, c.clone())),
    ];
    apply_to_ideal(j, &images, r)
}

fn apply_to_ideal(j: &Ideal, images: &[Polynomial], target: &Ring) -> Result<Ideal> {
    let gens = j
        .gens
        .iter()
        .map(|g| g.ring_map_apply(images, target))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(target, gens))
}

/// Base points: common zeros on the exceptional line of the x-chart
/// transform (the gcd of the generators restricted to x = 0), plus the
/// y-chart origin when every y-chart transform generator vanishes there.
pub fn base_points(li: &LocalIdeal2D) -> Result<BasePoints> {
    let tx = quadratic_transform(li, Chart::X)?;
    let field = tx.ring.field;
    let mut u: Vec<Coeff> = vec![];
    for g in &tx.gens {
        let restricted = restrict_to_exceptional(g)?;
        u = uni_gcd(&u, &restricted);
    }
    let finite = rational_roots(&u, field)?;
    let ty = quadratic_transform(li, Chart::Y)?;
    let one = crate::monomial::Monomial::one(2);
    let infinity = ty.gens.iter().all(|g| g.coeff_of(&one).is_zero());
    Ok(BasePoints { finite, infinity })
}

/// Coefficient vector in the parameter of g restricted to the exceptional
/// line x = 0 of the x-chart.
fn restrict_to_exceptional(g: &Polynomial) -> Result<Vec<Coeff>> {
    let r = &g.ring;
    let images = vec![Polynomial::zero(r), Polynomial::var(r, 1)];
    let h = g.ring_map_apply(&images, r)?;
    let mut coeffs = vec![];
    for (m, c) in &h.terms {
        let d = m.0[1] as usize;
        if coeffs.len() <= d {
            coeffs.resize(d + 1, r.field.zero());
        }
        coeffs[d] = c.clone();
    }
    uni_trim(&mut coeffs);
    Ok(coeffs)
}

// --- dense univariate arithmetic over the coefficient field ---

fn uni_trim(p: &mut Vec<Coeff>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn uni_monic(p: &[Coeff]) -> Vec<Coeff> {
    match p.last() {
        None => vec![],
        Some(lead) => {
            let inv = lead.inv();
            p.iter().map(|c| c.mul(&inv)).collect()
        }
    }
}

fn uni_rem(a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
    assert!(!b.is_empty());
    let mut r = a.to_vec();
    let lead = b.last().unwrap();
    while r.len() >= b.len() {
        let q = r.last().unwrap().div(lead);
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            let t = r[shift + i].sub(&q.mul(c));
            r[shift + i] = t;
        }
        r.pop(); // leading term cancels exactly
        uni_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn uni_gcd(a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
    let (mut f, mut g) = (a.to_vec(), b.to_vec());
    uni_trim(&mut f);
    uni_trim(&mut g);
    while !g.is_empty() {
        let r = uni_rem(&f, &g);
        f = g;
        g = r;
    }
    uni_monic(&f)
}

fn uni_eval(p: &[Coeff], c: &Coeff, field: crate::coeff::CoeffField) -> Coeff {
    let mut acc = field.zero();
    for coeff in p.iter().rev() {
        acc = acc.mul(c).add(coeff);
    }
    acc
}

/// Divide p by (t - c); the division is exact when c is a root.
fn uni_deflate(p: &[Coeff], c: &Coeff, field: crate::coeff::CoeffField) -> Vec<Coeff> {
    let mut q = vec![field.zero(); p.len().saturating_sub(1)];
    let mut carry = field.zero();
    for i in (0..p.len()).rev() {
        if i == 0 {
            break;
        }
        let qi = p[i].add(&carry);
        carry = qi.mul(c);
        q[i - 1] = qi;
    }
    debug_assert!(p[0].add(&carry).is_zero());
    q
}

fn uni_display(p: &[Coeff]) -> String {
    let parts: Vec<String> = p
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| format!("({c})*t^{i}"))
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// All roots of u in the base field, each listed once. Errors with
/// `NonRationalBasePoint` when a nonconstant factor without roots in the
/// field remains after deflating every root.
fn rational_roots(u: &[Coeff], field: crate::coeff::CoeffField) -> Result<Vec<Coeff>> {
    let mut u = u.to_vec();
    uni_trim(&mut u);
    if u.len() <= 1 {
        return Ok(vec![]);
    }
    let mut roots = Vec::new();
    for cand in root_candidates(&u, field)? {
        if uni_eval(&u, &cand, field).is_zero() {
            while u.len() > 1 && uni_eval(&u, &cand, field).is_zero() {
                u = uni_deflate(&u, &cand, field);
            }
            roots.push(cand);
        }
    }
    if u.len() > 1 {
        return Err(Error::NonRationalBasePoint(uni_display(&u)));
    }
    Ok(roots)
}

fn root_candidates(u: &[Coeff], field: crate::coeff::CoeffField) -> Result<Vec<Coeff>> {
    match field {
        crate::coeff::CoeffField::Fp(p) => {
            if p > 1_000_003 {
                return Err(Error::Invalid(format!(
                    "base-point search over F_{p} exceeds the exhaustive-root bound"
                )));
            }
            Ok((0..p as i64).map(|v| field.from_i64(v)).collect())
        }
        crate::coeff::CoeffField::Q => {
            // clear denominators and take the primitive part
            let rats: Vec<BigRational> = u
                .iter()
                .map(|c| c.as_rational().expect("rational coefficient").clone())
                .collect();
            let mut den = BigInt::one();
            for r in &rats {
                den = den.lcm(r.denom());
            }
            let ints: Vec<BigInt> = rats.iter().map(|r| (r * &den).to_integer()).collect();
            let mut content = BigInt::zero();
            for v in &ints {
                content = content.gcd(v);
            }
            let ints: Vec<BigInt> = ints.iter().map(|v| v / &content).collect();
            let lead = ints.last().unwrap().abs();
            let mut lowest = BigInt::zero();
            for v in &ints {
                if !v.is_zero() {
                    lowest = v.abs();
                    break;
                }
            }
            let to_u64 = |b: &BigInt| -> Result<u64> {
                u64::try_from(b.clone()).map_err(|_| {
                    Error::Invalid("base-point coefficients exceed the root-search bound".into())
                })
            };
            let ps = divisors(to_u64(&lowest)?);
            let qs = divisors(to_u64(&lead)?);
            let mut cands = vec![field.zero()];
            for p in &ps {
                for q in &qs {
                    let r = BigRational::new(BigInt::from(*p), BigInt::from(*q));
                    cands.push(Coeff::Q(r.clone()));
                    cands.push(Coeff::Q(-r));
                }
            }
            cands.dedup_by(|a, b| a == b);
            Ok(cands)
        }
    }
}

fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

/// I is integrally closed iff it is contracted and the localized transform
/// at every base point (both charts) is integrally closed.
pub fn is_integrally_closed_2d(li: &LocalIdeal2D, depth: u32) -> Result<bool> {
    if depth == 0 {
        return Err(Error::Invalid("base-point recursion exceeded depth cap".into()));
    }
    if !is_contracted(li)? {
        return Ok(false);
    }
    let bp = base_points(li)?;
    let tx = quadratic_transform(li, Chart::X)?;
    for c in &bp.finite {
        let j = localize_at_origin(&translate_param(&tx, c)?)?;
        if j.is_unit()? {
            continue;
        }
        if !is_integrally_closed_2d(&LocalIdeal2D::new(j)?, depth - 1)? {
            return Ok(false);
        }
    }
    if bp.infinity {
        let ty = quadratic_transform(li, Chart::Y)?;
        let j = localize_at_origin(&ty)?;
        if !j.is_unit()? && !is_integrally_closed_2d(&LocalIdeal2D::new(j)?, depth - 1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Trace of the base-point recursion, recording the classical invariants
/// at each infinitely near point.
pub fn base_point_tree(li: &LocalIdeal2D, point: String, depth: u32) -> Result<BasePointTree> {
    if depth == 0 {
        return Err(Error::Invalid("base-point recursion exceeded depth cap".into()));
    }
    let multiplicity = crate::rees::multiplicity_2d(&li.ideal, 4, 0xB45E)?;
    let mut children = Vec::new();
    let bp = base_points(li)?;
    let tx = quadratic_transform(li, Chart::X)?;
    for c in &bp.finite {
        let j = localize_at_origin(&translate_param(&tx, c)?)?;
        if j.is_unit()? {
            continue;
        }
        children.push(base_point_tree(
            &LocalIdeal2D::new(j)?,
            format!("t = {c}"),
            depth - 1,
        )?);
    }
    if bp.infinity {
        let ty = quadratic_transform(li, Chart::Y)?;
        let j = localize_at_origin(&ty)?;
        if !j.is_unit()? {
            children.push(base_point_tree(
                &LocalIdeal2D::new(j)?,
                "t = infinity".to_string(),
                depth - 1,
            )?);
        }
    }
    // classical invariant: multiplicity strictly drops at each transform
    for c in &children {
        if c.multiplicity >= multiplicity {
            return Err(Error::Invalid(format!(
                "multiplicity failed to drop at base point {}: {} -> {}",
                c.point, multiplicity, c.multiplicity
            )));
        }
    }
    Ok(BasePointTree {
        point,
        order: li.order,
        colength: li.colength,
        nu: nu_local(&li.ideal)?,
        multiplicity,
        contracted: is_contracted(li)?,
        children,
    })
}

/// { f in k[x,y] : f(x, x t) in x^r . A }, for A an ideal of the x-chart
/// k[x, t]: adjoin y - x t, multiply A by x^r, and eliminate t.
pub fn contract_back(a: &Ideal, r: u32, target: &Ring) -> Result<Ideal> {
    let tvar = fresh_var_name(target, "t");
    let big = RingContext::new(
        vec![target.vars[0].clone(), target.vars[1].clone(), tvar.clone()],
        target.field,
        crate::ring::MonomialOrder::GrevLex,
    )?;
    let x = Polynomial::var(&big, 0);
    let y = Polynomial::var(&big, 1);
    let t = Polynomial::var(&big, 2);
    let images = vec![x.clone(), t.clone()]; // chart coords (x, t)
    let xr = x.pow(r);
    let mut gens: Vec<Polynomial> = a
        .gens
        .iter()
        .map(|g| Ok(g.ring_map_apply(&images, &big)?.mul(&xr)))
        .collect::<Result<_>>()?;
    if a.gens.is_empty() {
        // A = (0): the contraction is (0) as well
        return Ok(Ideal::zero(target));
    }
    gens.push(y.sub(&x.mul(&t)));
    let contracted = eliminate(&Ideal::new(&big, gens), &[tvar])?;
    apply_to_ideal(
        &contracted,
        &[Polynomial::var(target, 0), Polynomial::var(target, 1)],
        target,
    )
}

/// Integral closure through the blow-up. Runs the exact chart computation
/// twice under independent random shears and demands agreement, retrying a
/// few times before reporting a genericity failure.
pub fn integral_closure_2d(li: &LocalIdeal2D, seed: u64, depth: u32) -> Result<Ideal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..3 {
        let a = closure_sheared(li, &mut rng, depth, true)?;
        let b = closure_sheared(li, &mut rng, depth, false)?;
        if a.equals(&b)? {
            return Ok(a);
        }
    }
    Err(Error::GenericityFailure)
}

/// Closure after a shear x -> x + c y chosen so that no base point lies at
/// infinity of the x-chart; any such c gives the exact answer. With
/// `prefer_identity` the unsheared coordinates are tried first.
fn closure_sheared(
    li: &LocalIdeal2D,
    rng: &mut ChaCha8Rng,
    depth: u32,
    prefer_identity: bool,
) -> Result<Ideal> {
    if depth == 0 {
        return Err(Error::Invalid("base-point recursion exceeded depth cap".into()));
    }
    let ring = &li.ideal.ring;
    for attempt in 0..12 {
        let c: i64 = if attempt == 0 && prefer_identity {
            0
        } else {
            rng.gen_range(-50..=50)
        };
        let cc = ring.field.from_i64(c);
        let x = Polynomial::var(ring, 0);
        let y = Polynomial::var(ring, 1);
        let sheared = apply_to_ideal(&li.ideal, &[x.add(&y.scale(&cc)), y.clone()], ring)?;
        let sli = LocalIdeal2D::new(sheared)?;
        let bp = base_points(&sli)?;
        if bp.infinity {
            continue;
        }
        let closed = closure_core(&sli, &bp, rng, depth)?;
        // undo the shear
        return apply_to_ideal(&closed, &[x.sub(&y.scale(&cc)), y], ring);
    }
    Err(Error::GenericityFailure)
}

/// All base points are at finite x-chart parameters: intersect the
/// recursive closures of the localized transforms, scale by x^r, and
/// contract along y = x t.
fn closure_core(
    li: &LocalIdeal2D,
    bp: &BasePoints,
    rng: &mut ChaCha8Rng,
    depth: u32,
) -> Result<Ideal> {
    let ring = &li.ideal.ring;
    let r = li.order;
    if bp.finite.is_empty() {
        return Ok(maximal_ideal(ring).power(r));
    }
    let tx = quadratic_transform(li, Chart::X)?;
    let mut inter: Option<Ideal> = None;
    for c in &bp.finite {
        let j = localize_at_origin(&translate_param(&tx, c)?)?;
        if j.is_unit()? {
            continue;
        }
        let cj = closure_sheared(&LocalIdeal2D::new(j)?, rng, depth - 1, true)?;
        let back = translate_param(&cj, &c.neg())?;
        inter = Some(match inter {
            None => back,
            Some(acc) => ideal_intersect(&acc, &back)?,
        });
    }
    match inter {
        None => Ok(maximal_ideal(ring).power(r)),
        Some(a) => contract_back(&a, r, ring),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::RingContext;

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| parse_polynomial(s, r).unwrap()).collect())
    }

    fn li(r: &Ring, gens: &[&str]) -> LocalIdeal2D {
        LocalIdeal2D::new(ideal(r, gens)).unwrap()
    }

    #[test]
    fn order_and_nu() {
        let r = RingContext::q(&["x", "y"]);
        let i = li(&r, &["x^2", "x*y", "y^2"]);
        assert_eq!(i.order, 2);
        assert_eq!(i.colength, 3);
        assert_eq!(nu_local(&i.ideal).unwrap(), 3);
        assert!(is_contracted(&i).unwrap());

        let j = li(&r, &["x^2", "y^2"]);
        assert_eq!(j.order, 2);
        assert_eq!(nu_local(&j.ideal).unwrap(), 2);
        assert!(!is_contracted(&j).unwrap());

        let k = li(&r, &["x^2 + y^3", "y^2"]);
        assert_eq!(k.order, 2);
        assert!(matches!(
            LocalIdeal2D::new(ideal(&r, &["x"])),
            Err(Error::NotMPrimary)
        ));
    }

    #[test]
    fn transform_examples() {
        let r = RingContext::q(&["x", "y"]);
        // m^2 transforms to the unit ideal on the x-chart
        let t = quadratic_transform(&li(&r, &["x^2", "x*y", "y^2"]), Chart::X).unwrap();
        assert!(t.is_unit().unwrap());
        // (x^3, y^2): x-chart transform is (x, y^2) with a base point at t = 0
        let t = quadratic_transform(&li(&r, &["x^3", "y^2"]), Chart::X).unwrap();
        let tr = t.ring.clone();
        assert!(t.equals(&ideal(&tr, &["x", "y^2"])).unwrap());
        // (x^2, y^3): y-chart transform is (x^2, y)
        let t = quadratic_transform(&li(&r, &["x^2", "y^3"]), Chart::Y).unwrap();
        let tr = t.ring.clone();
        assert!(t.equals(&ideal(&tr, &["x^2", "y"])).unwrap());
    }

    #[test]
    fn base_point_examples() {
        let r = RingContext::q(&["x", "y"]);
        let bp = base_points(&li(&r, &["x^2", "x*y", "y^2"])).unwrap();
        assert!(bp.finite.is_empty() && !bp.infinity);

        let bp = base_points(&li(&r, &["x^3", "y^2"])).unwrap();
        assert_eq!(bp.finite, vec![Coeff::Q(num_rational::BigRational::from_integer(0.into()))]);
        assert!(!bp.infinity);

        // (x^2, y^3): tangent direction x = 0, so the base point is at infinity
        let bp = base_points(&li(&r, &["x^2", "y^3"])).unwrap();
        assert!(bp.finite.is_empty());
        assert!(bp.infinity);

        // ((x - y)^2, (x + y)^3): base point at t = 1
        let bp = base_points(&li(&r, &["x^2 - 2*x*y + y^2", "x^3 + 3*x^2*y + 3*x*y^2 + y^3"]))
            .unwrap();
        assert_eq!(bp.finite.len(), 1);
        assert!(uni_eval(&[r.field.from_i64(-1), r.field.one()], &bp.finite[0], r.field).is_zero());
    }

    #[test]
    fn closedness_examples() {
        let r = RingContext::q(&["x", "y"]);
        assert!(is_integrally_closed_2d(&li(&r, &["x", "y"]), 64).unwrap());
        assert!(is_integrally_closed_2d(&li(&r, &["x^2", "x*y", "y^2"]), 64).unwrap());
        assert!(!is_integrally_closed_2d(&li(&r, &["x^2", "y^2"]), 64).unwrap());
        assert!(!is_integrally_closed_2d(&li(&r, &["x^3", "y^2"]), 64).unwrap());
        assert!(is_integrally_closed_2d(&li(&r, &["x^3", "x^2*y", "y^2"]), 64).unwrap());
        // (x^2, y^3) has its base point at infinity and is not closed
        assert!(!is_integrally_closed_2d(&li(&r, &["x^2", "y^3"]), 64).unwrap());
        assert!(is_integrally_closed_2d(&li(&r, &["x^2", "x*y", "y^3"]), 64).unwrap());
    }

    #[test]
    fn contract_back_examples() {
        let r = RingContext::q(&["x", "y"]);
        let chart = RingContext::q(&["x", "y"]);
        // A = (1): contraction of x^r is m^r
        let unit = Ideal::unit(&chart);
        assert!(contract_back(&unit, 1, &r)
            .unwrap()
            .equals(&ideal(&r, &["x", "y"]))
            .unwrap());
        assert!(contract_back(&unit, 2, &r)
            .unwrap()
            .equals(&ideal(&r, &["x^2", "x*y", "y^2"]))
            .unwrap());
        // A = (x, t): f(x, xt) in x(x, t) means f in (x^2, y)
        let a = ideal(&chart, &["x", "y"]);
        assert!(contract_back(&a, 1, &r)
            .unwrap()
            .equals(&ideal(&r, &["x^2", "y"]))
            .unwrap());
    }

    #[test]
    fn closure_examples() {
        let r = RingContext::q(&["x", "y"]);
        let c = integral_closure_2d(&li(&r, &["x^2", "y^2"]), 7, 64).unwrap();
        assert!(c.equals(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap());
        let c = integral_closure_2d(&li(&r, &["x^3", "y^2"]), 7, 64).unwrap();
        assert!(c.equals(&ideal(&r, &["x^3", "x^2*y", "y^2"])).unwrap());
        // powers of the maximal ideal are fixed
        for k in 1..=3u32 {
            let m = maximal_ideal(&r).power(k);
            let c = integral_closure_2d(&LocalIdeal2D::new(m.clone()).unwrap(), 7, 64).unwrap();
            assert!(c.equals(&m).unwrap());
        }
        // base point at infinity forces a shear; still exact
        let c = integral_closure_2d(&li(&r, &["x^2", "y^3"]), 7, 64).unwrap();
        assert!(c.equals(&ideal(&r, &["x^2", "x*y^2", "y^3"])).unwrap());
    }

    #[test]
    fn closure_is_idempotent_and_contains() {
        let r = RingContext::q(&["x", "y"]);
        let i = li(&r, &["x^4", "y^3"]);
        let c = integral_closure_2d(&i, 5, 64).unwrap();
        assert!(c.contains_ideal(&i.ideal).unwrap());
        let cli = LocalIdeal2D::new(c.clone()).unwrap();
        assert!(is_integrally_closed_2d(&cli, 64).unwrap());
        let c2 = integral_closure_2d(&cli, 11, 64).unwrap();
        assert!(c2.equals(&c).unwrap());
    }

    #[test]
    fn tree_trace() {
        let r = RingContext::q(&["x", "y"]);
        let t = base_point_tree(&li(&r, &["x^3", "y^2"]), "origin".to_string(), 64).unwrap();
        assert_eq!(t.order, 2);
        assert_eq!(t.children.len(), 1);
        // child (x, t^2) has tangent direction x = 0, so its own base point
        // sits at infinity and contributes one more (terminal) node
        assert_eq!(t.children[0].order, 1);
        assert_eq!(t.children[0].children.len(), 1);
        assert_eq!(t.children[0].children[0].order, 1);
        assert!(t.children[0].children[0].children.is_empty());
    }

    #[test]
    fn univariate_helpers() {
        let f = crate::coeff::CoeffField::Q;
        let p = |v: &[i64]| -> Vec<Coeff> { v.iter().map(|&n| f.from_i64(n)).collect() };
        // gcd(t^2 - 1, t^2 - 2t + 1) = t - 1
        let g = uni_gcd(&p(&[-1, 0, 1]), &p(&[1, -2, 1]));
        assert_eq!(g, p(&[-1, 1]));
        // roots of 2t^2 - 3t + 1: 1 and 1/2
        let roots = rational_roots(&p(&[1, -3, 2]), f).unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert!(uni_eval(&p(&[1, -3, 2]), r, f).is_zero());
        }
        // t^2 + 1 has no rational roots
        assert!(matches!(
            rational_roots(&p(&[1, 0, 1]), f),
            Err(Error::NonRationalBasePoint(_))
        ));
    }
}
