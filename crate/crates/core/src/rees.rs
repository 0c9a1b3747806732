//! Rees-algebra presentations, the reduction criterion, the integral
//! dependence membership oracle, multiplicity, and generic elements.

use crate::error::{Error, Result};
use crate::groebner::{colength_0dim, eliminate, fresh_var_name, krull_dim, Ideal};
use crate::poly::Polynomial;
use crate::ring::{MonomialOrder, Ring, RingContext};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Default bound on the power checked by the reduction criterion.
pub const DEFAULT_REDUCTION_CAP: u32 = 6;

/// Range for random integer specializations of generic coefficients.
pub const RANDOM_COEFF_BOUND: i64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionResult {
    /// Least n with I^{n+1} = U I^n.
    Yes(u32),
    /// No such n was found up to the cap; not a disproof.
    NoUpTo(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntegralityResult {
    /// Certificate: I is a reduction of (I, f) at power n. Sound.
    Integral(u32),
    /// Search exhausted the cap; callers needing completeness use the
    /// monomial or two-variable closure routes.
    UnknownUpTo(u32),
}

/// How generic coefficients are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum GenericMode {
    Symbolic,
    Random,
}

/// The generic-element extension data: ring, mode, seed, and the element
/// x = sum z_i a_i (z symbolic or specialized to recorded integers).
#[derive(Debug, Clone)]
pub struct GenericExtension {
    pub base_ring: Ring,
    pub ring: Ring,
    pub mode: GenericMode,
    pub seed: u64,
    /// Specialized z-values in random mode, empty in symbolic mode.
    pub z_values: Vec<i64>,
    pub element: Polynomial,
    /// Ideal generators lifted into `ring`.
    pub lifted_gens: Vec<Polynomial>,
}

/// Defining ideal of the Rees algebra R[It]: the kernel of
/// k[x.., T1..Tn] -> R[t], T_i -> a_i t, computed by eliminating t
/// from (T_i - a_i t).
pub fn rees_presentation(ideal: &Ideal) -> Result<Ideal> {
    let ring = &ideal.ring;
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.gens.len();
    let tvar = fresh_var_name(ring, "t");
    let mut vars = vec![tvar.clone()];
    vars.extend(ring.vars.iter().cloned());
    for i in 1..=n {
        vars.push(format!("T{i}"));
    }
    let big = RingContext::new(vars, ring.field, MonomialOrder::Block { k: 1 })?;
    let t = Polynomial::var(&big, 0);
    let lift_images: Vec<Polynomial> = (0..ring.nvars()).map(|i| Polynomial::var(&big, 1 + i)).collect();
    let mut gens = Vec::new();
    for (i, a) in ideal.gens.iter().enumerate() {
        let a_big = a.ring_map_apply(&lift_images, &big)?;
        let t_i = Polynomial::var(&big, 1 + ring.nvars() + i);
        gens.push(t_i.sub(&a_big.mul(&t)));
    }
    let graph = Ideal::new(&big, gens);
    eliminate(&graph, &[tvar])
}

/// Substituting T_i -> a_i t must annihilate every presentation relation.
pub fn rees_relation_check(ideal: &Ideal, presentation: &Ideal) -> Result<bool> {
    let ring = &ideal.ring;
    let n = ideal.gens.len();
    let tvar = fresh_var_name(ring, "t");
    let mut vars = ring.vars.clone();
    vars.push(tvar);
    let rt = RingContext::new(vars, ring.field, MonomialOrder::GrevLex)?;
    let t = Polynomial::var(&rt, ring.nvars());
    let base_images: Vec<Polynomial> = (0..ring.nvars()).map(|i| Polynomial::var(&rt, i)).collect();
    let mut images = base_images.clone();
    for i in 0..n {
        let a = ideal.gens[i].ring_map_apply(&base_images, &rt)?;
        images.push(a.mul(&t));
    }
    for rel in &presentation.gens {
        if !rel.ring_map_apply(&images, &rt)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Ideal-case reduction criterion: U ⊆ I is a reduction iff
/// I^{n+1} = U I^n for some n (checked up to `cap`).
pub fn is_reduction(u: &Ideal, i: &Ideal, cap: u32) -> Result<ReductionResult> {
    is_reduction_mod(u, i, None, cap)
}

/// The same criterion computed modulo an ideal (arithmetic in R/M realized
/// by adjoining M's generators to both sides).
pub fn is_reduction_mod(
    u: &Ideal,
    i: &Ideal,
    modulus: Option<&Ideal>,
    cap: u32,
) -> Result<ReductionResult> {
    let with_mod = |j: Ideal| match modulus {
        Some(m) => j.sum(m),
        None => j,
    };
    let i_in = with_mod(i.clone());
    for g in &u.gens {
        if !i_in.contains_poly(g)? {
            return Err(Error::NotSubideal);
        }
    }
    for n in 0..=cap {
        let lhs = with_mod(i.power(n + 1));
        let rhs = with_mod(u.product(&i.power(n)));
        if lhs.equals(&rhs)? {
            return Ok(ReductionResult::Yes(n));
        }
    }
    Ok(ReductionResult::NoUpTo(cap))
}

/// f is integral over I iff I is a reduction of (I, f).
pub fn is_integral_element(f: &Polynomial, i: &Ideal, cap: u32) -> Result<IntegralityResult> {
    is_integral_element_mod(f, i, None, cap)
}

pub fn is_integral_element_mod(
    f: &Polynomial,
    i: &Ideal,
    modulus: Option<&Ideal>,
    cap: u32,
) -> Result<IntegralityResult> {
    let enlarged = i.sum(&Ideal::new(&i.ring, vec![f.clone()]));
    match is_reduction_mod(i, &enlarged, modulus, cap)? {
        ReductionResult::Yes(n) => Ok(IntegralityResult::Integral(n)),
        ReductionResult::NoUpTo(c) => Ok(IntegralityResult::UnknownUpTo(c)),
    }
}

/// Certify that I is m-primary in a polynomial ring: dim R/I = 0, with the
/// least N such that every variable to the N-th power lies in I.
pub fn certify_mprimary(i: &Ideal) -> Result<u32> {
    if i.is_zero() || krull_dim(i).map_or(true, |d| d != 0) {
        return Err(Error::NotMPrimary);
    }
    let bound = colength_0dim(i)? as u32 + 1;
    'n: for n in 1..=bound {
        for v in 0..i.ring.nvars() {
            let pv = Polynomial::var(&i.ring, v).pow(n);
            if !i.contains_poly(&pv)? {
                continue 'n;
            }
        }
        return Ok(n);
    }
    Err(Error::NotMPrimary)
}

/// Length of (R/J) localized at the origin for a 0-dimensional J: adding
/// m^N for N = total colength kills the components away from the origin
/// without changing the local one.
pub fn local_colength_origin(j: &Ideal) -> Result<u64> {
    let n = colength_0dim(j)? as u32;
    let ring = &j.ring;
    let m = Ideal::new(
        ring,
        (0..ring.nvars()).map(|v| Polynomial::var(ring, v)).collect(),
    );
    colength_0dim(&j.sum(&m.power(n + 1)))
}

/// Hilbert-Samuel multiplicity of an m-primary ideal of k[x,y]: the minimum
/// over random trials of the local colength at the origin of two general
/// combinations of the generators. Deterministic for a fixed seed.
pub fn multiplicity_2d(i: &Ideal, trials: u32, seed: u64) -> Result<u64> {
    if i.ring.nvars() != 2 {
        return Err(Error::Invalid("multiplicity_2d needs a 2-variable ring".into()));
    }
    certify_mprimary(i)?;
    if i.gens.len() == 1 {
        // principal m-primary is impossible in 2 vars; certify_mprimary catches it
        unreachable!();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<u64> = None;
    let mut done = 0u32;
    let mut attempts = 0u32;
    while done < trials && attempts < trials * 10 {
        attempts += 1;
        let g1 = random_combination(i, &mut rng, 50);
        let g2 = random_combination(i, &mut rng, 50);
        let pair = Ideal::new(&i.ring, vec![g1, g2]);
        match local_colength_origin(&pair) {
            Ok(len) => {
                best = Some(best.map_or(len, |b| b.min(len)));
                done += 1;
            }
            Err(Error::NotZeroDimensional) => continue, // degenerate pair, redraw
            Err(e) => return Err(e),
        }
    }
    best.ok_or(Error::GenericityFailure)
}

fn random_combination(i: &Ideal, rng: &mut ChaCha8Rng, bound: i64) -> Polynomial {
    loop {
        let mut g = Polynomial::zero(&i.ring);
        for a in &i.gens {
            let c = rng.gen_range(-bound..=bound);
            g = g.add(&a.scale(&i.ring.field.from_i64(c)));
        }
        if !g.is_zero() {
            return g;
        }
    }
}

/// Build the generic element x = sum z_i a_i for I = (a_1..a_n).
pub fn generic_element(i: &Ideal, mode: GenericMode, seed: u64) -> Result<GenericExtension> {
    if i.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let ring = &i.ring;
    let n = i.gens.len();
    match mode {
        GenericMode::Symbolic => {
            let mut vars = ring.vars.clone();
            for k in 1..=n {
                vars.push(fresh_var_name(ring, &format!("z{k}")));
            }
            let ext = RingContext::new(vars, ring.field, ring.order)?;
            let images: Vec<Polynomial> =
                (0..ring.nvars()).map(|k| Polynomial::var(&ext, k)).collect();
            let lifted: Vec<Polynomial> = i
                .gens
                .iter()
                .map(|a| a.ring_map_apply(&images, &ext))
                .collect::<Result<_>>()?;
            let mut x = Polynomial::zero(&ext);
            for (k, a) in lifted.iter().enumerate() {
                x = x.add(&Polynomial::var(&ext, ring.nvars() + k).mul(a));
            }
            Ok(GenericExtension {
                base_ring: ring.clone(),
                ring: ext,
                mode,
                seed,
                z_values: vec![],
                element: x,
                lifted_gens: lifted,
            })
        }
        GenericMode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            loop {
                let z: Vec<i64> = (0..n)
                    .map(|_| rng.gen_range(-RANDOM_COEFF_BOUND..=RANDOM_COEFF_BOUND))
                    .collect();
                let mut x = Polynomial::zero(ring);
                for (k, a) in i.gens.iter().enumerate() {
                    x = x.add(&a.scale(&ring.field.from_i64(z[k])));
                }
                if x.is_zero() {
                    continue; // re-draw
                }
                return Ok(GenericExtension {
                    base_ring: ring.clone(),
                    ring: ring.clone(),
                    mode,
                    seed,
                    z_values: z,
                    element: x,
                    lifted_gens: i.gens.clone(),
                });
            }
        }
    }
}
