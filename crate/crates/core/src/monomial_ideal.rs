//! Newton-polyhedron integral closure for monomial ideals.
//!
//! For a monomial ideal I, x^v lies in the integral closure of I^n exactly
//! when v is in n.NP(I), where NP(I) is the convex hull of the generator
//! exponents plus the positive orthant. Membership is decided by exact
//! rational linear feasibility, so closures of all powers are computable.

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::lp::{feasible, from_u32, Constraint};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;
use num_rational::BigRational;
use num_traits::Zero;

/// A monomial ideal stored as the minimal antichain of generator exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    pub ring: Ring,
    pub gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimizes the generating set under componentwise divisibility and
    /// sorts it lexicographically, so equal ideals compare equal.
    pub fn new(ring: &Ring, gens: Vec<Monomial>) -> MonomialIdeal {
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in &gens {
            assert_eq!(g.0.len(), ring.nvars(), "exponent vector length");
            if gens.iter().any(|h| h != g && h.divides(g)) {
                continue;
            }
            if !minimal.contains(g) {
                minimal.push(g.clone());
            }
        }
        minimal.sort();
        MonomialIdeal {
            ring: ring.clone(),
            gens: minimal,
        }
    }

    pub fn from_ideal(ideal: &Ideal) -> Result<MonomialIdeal> {
        let mut gens = Vec::new();
        for g in &ideal.gens {
            if !g.is_term() {
                return Err(Error::Invalid(format!("not a monomial generator: {g}")));
            }
            gens.push(g.terms.keys().next().unwrap().clone());
        }
        Ok(MonomialIdeal::new(&ideal.ring, gens))
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(
            &self.ring,
            self.gens
                .iter()
                .map(|m| Polynomial::term(&self.ring, m.clone(), self.ring.field.one()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|m| m.is_one())
    }

    /// Plain monomial-ideal membership of x^v (no closure).
    pub fn contains_exponent(&self, v: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(v))
    }
}

/// x^v in the integral closure of I^n, decided by rational LP feasibility:
/// lambda >= 0, sum lambda_i = n, sum lambda_i g_i <= v componentwise.
pub fn np_membership(v: &Monomial, ideal: &MonomialIdeal, n: u32) -> bool {
    assert!(n >= 1);
    assert_eq!(v.0.len(), ideal.ring.nvars());
    if ideal.is_zero() {
        return false;
    }
    let m = ideal.gens.len();
    let d = ideal.ring.nvars();
    let mut cs: Vec<Constraint> = Vec::new();
    // sum lambda = n
    cs.push(Constraint::le(vec![from_u32(1); m], from_u32(n)));
    cs.push(Constraint::le(vec![-from_u32(1); m], -from_u32(n)));
    // lambda_i >= 0
    for i in 0..m {
        let mut row = vec![BigRational::zero(); m];
        row[i] = -from_u32(1);
        cs.push(Constraint::le(row, BigRational::zero()));
    }
    // sum lambda_i g_i[k] <= v[k]
    for k in 0..d {
        let row: Vec<BigRational> = ideal.gens.iter().map(|g| from_u32(g.0[k])).collect();
        cs.push(Constraint::le(row, from_u32(v.0[k])));
    }
    feasible(&cs, m)
}

/// Minimal monomial generators of the integral closure of I^n.
///
/// Every minimal generator lies in the box [0, n * max coordinate]^d: a
/// lattice point of n.NP(I) with some coordinate above n * max coordinate
/// dominates the point with that coordinate clamped, which is still in the
/// region.
pub fn monomial_closure_power(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    assert!(n >= 1);
    let d = ideal.ring.nvars();
    let maxc = ideal
        .gens
        .iter()
        .flat_map(|g| g.0.iter())
        .copied()
        .max()
        .unwrap();
    let bound = n * maxc;
    let power = ideal.to_ideal().power(n);
    let power = MonomialIdeal::from_ideal(&power)?;
    let mut minimal: Vec<Monomial> = Vec::new();
    // graded enumeration so earlier finds dominate later candidates
    let mut points: Vec<Monomial> = Vec::new();
    enumerate_box(d, bound, &mut vec![0; d], 0, &mut points);
    points.sort_by_key(|m| (m.total_degree(), m.0.clone()));
    for v in points {
        if minimal.iter().any(|g| g.divides(&v)) {
            continue;
        }
        // membership in I^n as a monomial ideal is a cheap sufficient check
        let member = power.contains_exponent(&v) || np_membership(&v, ideal, n);
        if member {
            minimal.push(v);
        }
    }
    Ok(MonomialIdeal::new(&ideal.ring, minimal))
}

fn enumerate_box(d: usize, bound: u32, cur: &mut Vec<u32>, pos: usize, out: &mut Vec<Monomial>) {
    if pos == d {
        out.push(Monomial(cur.clone()));
        return;
    }
    for e in 0..=bound {
        cur[pos] = e;
        enumerate_box(d, bound, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

pub fn is_monomial_closed(ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.is_unit() {
        return Ok(true);
    }
    Ok(monomial_closure_power(ideal, 1)? == *ideal)
}
