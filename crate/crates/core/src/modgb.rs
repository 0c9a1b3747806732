//! Groebner bases for submodules of free modules R^e, with terms ordered
//! position-over-term (smaller component wins), plus syzygy computation via
//! the augmented-module elimination trick.

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::groebner::DEFAULT_STEP_BUDGET;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{MonomialOrder, Ring};
use std::cmp::Ordering;

/// An element of R^e, one polynomial per component.
pub type ModElem = Vec<Polynomial>;

pub fn mod_zero(ring: &Ring, e: usize) -> ModElem {
    vec![Polynomial::zero(ring); e]
}

pub fn mod_is_zero(v: &ModElem) -> bool {
    v.iter().all(|p| p.is_zero())
}

pub fn mod_add(a: &ModElem, b: &ModElem) -> ModElem {
    a.iter().zip(b).map(|(p, q)| p.add(q)).collect()
}

pub fn mod_sub(a: &ModElem, b: &ModElem) -> ModElem {
    a.iter().zip(b).map(|(p, q)| p.sub(q)).collect()
}

/// Multiply by the term c x^m.
pub fn mod_mul_term(v: &ModElem, m: &Monomial, c: &Coeff) -> ModElem {
    v.iter().map(|p| p.mul_term(m, c)).collect()
}

/// Leading term under position-over-term: the greatest (component, monomial)
/// with smaller component index ranked higher.
pub fn mod_leading(v: &ModElem, order: MonomialOrder) -> Option<(usize, Monomial, Coeff)> {
    for (i, p) in v.iter().enumerate() {
        if let Some((m, c)) = p.leading(order) {
            return Some((i, m.clone(), c.clone()));
        }
    }
    None
}

fn term_cmp(
    ring: &Ring,
    order: MonomialOrder,
    a: &(usize, Monomial),
    b: &(usize, Monomial),
) -> Ordering {
    // smaller component = greater term
    b.0.cmp(&a.0).then_with(|| ring.cmp_order(order, &a.1, &b.1))
}

/// Full normal form of v against a list of module elements: every term of
/// the remainder is outside the leading-term module of the basis.
pub fn mod_normal_form(
    v: &ModElem,
    basis: &[ModElem],
    order: MonomialOrder,
    budget: &mut u64,
) -> Result<ModElem> {
    let ring = match v.iter().find(|p| !p.is_zero()) {
        Some(p) => p.ring.clone(),
        None => return Ok(v.clone()),
    };
    let leads: Vec<(usize, Monomial, Coeff)> = basis
        .iter()
        .filter_map(|b| mod_leading(b, order))
        .collect();
    let live: Vec<&ModElem> = basis
        .iter()
        .filter(|b| !mod_is_zero(b))
        .collect();
    let mut rem = mod_zero(&ring, v.len());
    let mut work = v.clone();
    'outer: while let Some((comp, m, c)) = mod_leading(&work, order) {
        if *budget == 0 {
            return Err(Error::BudgetExceeded(DEFAULT_STEP_BUDGET));
        }
        *budget -= 1;
        for (b, (bc, bm, bcf)) in live.iter().zip(&leads) {
            if *bc == comp && bm.divides(&m) {
                let q = bm.div_into(&m);
                let coef = c.div(bcf);
                work = mod_sub(&work, &mod_mul_term(b, &q, &coef));
                continue 'outer;
            }
        }
        // move the irreducible leading term to the remainder
        let t: ModElem = (0..v.len())
            .map(|i| {
                if i == comp {
                    Polynomial::term(&ring, m.clone(), c.clone())
                } else {
                    Polynomial::zero(&ring)
                }
            })
            .collect();
        rem = mod_add(&rem, &t);
        work = mod_sub(&work, &t);
    }
    Ok(rem)
}

/// Buchberger for submodules of R^e. S-pairs only form within a component.
pub fn mod_buchberger(
    ring: &Ring,
    gens: &[ModElem],
    order: MonomialOrder,
    budget: &mut u64,
) -> Result<Vec<ModElem>> {
    let mut basis: Vec<ModElem> = gens.iter().filter(|g| !mod_is_zero(g)).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let (ci, mi, cfi) = mod_leading(&basis[i], order).unwrap();
        let (cj, mj, cfj) = mod_leading(&basis[j], order).unwrap();
        if ci != cj {
            continue;
        }
        let l = mi.lcm(&mj);
        let a = mod_mul_term(&basis[i], &mi.div_into(&l), &cfi.inv());
        let b = mod_mul_term(&basis[j], &mj.div_into(&l), &cfj.inv());
        let s = mod_sub(&a, &b);
        let r = mod_normal_form(&s, &basis, order, budget)?;
        if !mod_is_zero(&r) {
            let k = basis.len();
            for t in 0..k {
                pairs.push((t, k));
            }
            basis.push(r);
        }
    }
    // inter-reduce and normalize to monic leading coefficients
    let mut reduced: Vec<ModElem> = Vec::new();
    for i in 0..basis.len() {
        let mut others: Vec<ModElem> = basis[..i].to_vec();
        others.extend_from_slice(&basis[i + 1..]);
        let r = mod_normal_form(&basis[i], &others, order, budget)?;
        if !mod_is_zero(&r) {
            let (_, _, c) = mod_leading(&r, order).unwrap();
            let inv = c.inv();
            reduced.push(r.iter().map(|p| p.scale(&inv)).collect());
            // keep the original (not reduced) in basis for remaining rounds
        } else {
            basis[i] = mod_zero(ring, basis[i].len().max(1));
        }
    }
    reduced.sort_by(|a, b| {
        let la = mod_leading(a, order).unwrap();
        let lb = mod_leading(b, order).unwrap();
        term_cmp(ring, order, &(lb.0, lb.1), &(la.0, la.1))
    });
    Ok(reduced)
}

/// Membership of v in the submodule generated by `gens`.
pub fn mod_membership(ring: &Ring, v: &ModElem, gens: &[ModElem], order: MonomialOrder) -> Result<bool> {
    let mut budget = DEFAULT_STEP_BUDGET;
    let gb = mod_buchberger(ring, gens, order, &mut budget)?;
    let r = mod_normal_form(v, &gb, order, &mut budget)?;
    Ok(mod_is_zero(&r))
}

/// Generators of the syzygy module of g_1..g_n in R^e: the kernel of
/// R^n -> R^e, e_i -> g_i. Computed as the second blocks of Groebner
/// elements of (g_i ; e_i) in R^{e+n} whose first block vanishes; the
/// position-over-term order makes the first block dominant, so this is an
/// elimination.
pub fn syzygies(ring: &Ring, gens: &[ModElem], e: usize, order: MonomialOrder) -> Result<Vec<ModElem>> {
    let n = gens.len();
    let mut aug: Vec<ModElem> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        assert_eq!(g.len(), e, "ambient rank mismatch");
        let mut v = g.clone();
        v.extend(mod_zero(ring, n));
        v[e + i] = Polynomial::one(ring);
        aug.push(v);
    }
    let mut budget = DEFAULT_STEP_BUDGET;
    let gb = mod_buchberger(ring, &aug, order, &mut budget)?;
    let mut syz = Vec::new();
    for v in &gb {
        if v[..e].iter().all(|p| p.is_zero()) {
            syz.push(v[e..].to_vec());
        }
    }
    Ok(syz)
}

/// Coordinates of v in the span of `cols` (length e each): `Some(c)` with
/// v = sum c_i cols_i, or `None` when v is outside the span. Uses the same
/// augmentation as `syzygies`: reducing (v; 0) against the augmented basis
/// leaves (0; -c) exactly when v is in the span.
pub fn express_in_span(
    ring: &Ring,
    v: &ModElem,
    cols: &[ModElem],
    e: usize,
    order: MonomialOrder,
) -> Result<Option<Vec<Polynomial>>> {
    let n = cols.len();
    let mut aug: Vec<ModElem> = Vec::new();
    for (i, g) in cols.iter().enumerate() {
        let mut w = g.clone();
        w.extend(mod_zero(ring, n));
        w[e + i] = Polynomial::one(ring);
        aug.push(w);
    }
    let mut budget = DEFAULT_STEP_BUDGET;
    let gb = mod_buchberger(ring, &aug, order, &mut budget)?;
    let mut w = v.clone();
    w.extend(mod_zero(ring, n));
    let r = mod_normal_form(&w, &gb, order, &mut budget)?;
    if r[..e].iter().all(|p| p.is_zero()) {
        Ok(Some(r[e..].iter().map(|p| p.neg()).collect()))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::RingContext;

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    fn v(r: &Ring, comps: &[&str]) -> ModElem {
        comps.iter().map(|s| p(r, s)).collect()
    }

    #[test]
    fn leading_is_position_over_term() {
        let r = RingContext::q(&["x", "y"]);
        let e = v(&r, &["x", "y^5"]);
        let (c, m, _) = mod_leading(&e, MonomialOrder::GrevLex).unwrap();
        assert_eq!(c, 0); // component 0 beats any monomial in component 1
        assert_eq!(m, Monomial(vec![1, 0]));
    }

    #[test]
    fn membership_in_column_span() {
        let r = RingContext::q(&["x", "y"]);
        let cols = vec![v(&r, &["x", "0"]), v(&r, &["0", "y"]), v(&r, &["y", "x"])];
        assert!(mod_membership(&r, &v(&r, &["x + y", "x + y"]), &cols, MonomialOrder::GrevLex).unwrap());
        assert!(!mod_membership(&r, &v(&r, &["1", "0"]), &cols, MonomialOrder::GrevLex).unwrap());
        assert!(!mod_membership(&r, &v(&r, &["y", "0"]), &cols, MonomialOrder::GrevLex).unwrap());
        assert!(mod_membership(&r, &v(&r, &["x*y", "0"]), &cols, MonomialOrder::GrevLex).unwrap());
    }

    #[test]
    fn syzygies_of_regular_sequence() {
        let r = RingContext::q(&["x", "y"]);
        // syzygies of (x, y) as a submodule of R^1: generated by (y, -x)
        let gens = vec![v(&r, &["x"]), v(&r, &["y"])];
        let syz = syzygies(&r, &gens, 1, MonomialOrder::GrevLex).unwrap();
        assert_eq!(syz.len(), 1);
        let s = &syz[0];
        // s = (a, b) with a x + b y = 0 and (a, b) a scalar of (y, -x)
        assert!(s[0].mul(&p(&r, "x")).add(&s[1].mul(&p(&r, "y"))).is_zero());
        assert!(!s[0].is_zero());
    }

    #[test]
    fn syzygies_of_monomial_triple() {
        let r = RingContext::q(&["x", "y"]);
        // (x^2, xy, y^2): Koszul-like syzygies, rank of the syzygy module is 2
        let gens = vec![v(&r, &["x^2"]), v(&r, &["x*y"]), v(&r, &["y^2"])];
        let syz = syzygies(&r, &gens, 1, MonomialOrder::GrevLex).unwrap();
        assert_eq!(syz.len(), 2);
        for s in &syz {
            let combo = s[0]
                .mul(&p(&r, "x^2"))
                .add(&s[1].mul(&p(&r, "x*y")))
                .add(&s[2].mul(&p(&r, "y^2")));
            assert!(combo.is_zero());
        }
    }

    #[test]
    fn syzygies_in_rank_two() {
        let r = RingContext::q(&["x", "y"]);
        // columns (x; y) and (x^2; xy) = x (x; y): syzygy (x, -1)
        let gens = vec![v(&r, &["x", "y"]), v(&r, &["x^2", "x*y"])];
        let syz = syzygies(&r, &gens, 2, MonomialOrder::GrevLex).unwrap();
        assert_eq!(syz.len(), 1);
        let s = &syz[0];
        assert!(s[0].mul(&p(&r, "x")).add(&s[1].mul(&p(&r, "x^2"))).is_zero());
        assert!(s[0].mul(&p(&r, "y")).add(&s[1].mul(&p(&r, "x*y"))).is_zero());
    }

    #[test]
    fn express_in_span_examples() {
        let r = RingContext::q(&["x", "y"]);
        let cols = vec![v(&r, &["x", "0"]), v(&r, &["0", "y"])];
        let c = express_in_span(&r, &v(&r, &["x*y", "y^2"]), &cols, 2, MonomialOrder::GrevLex)
            .unwrap()
            .unwrap();
        assert_eq!(c[0], p(&r, "y"));
        assert_eq!(c[1], p(&r, "y"));
        assert!(
            express_in_span(&r, &v(&r, &["y", "0"]), &cols, 2, MonomialOrder::GrevLex)
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn free_columns_have_no_syzygies() {
        let r = RingContext::q(&["x", "y"]);
        let gens = vec![v(&r, &["1", "0"]), v(&r, &["0", "1"])];
        let syz = syzygies(&r, &gens, 2, MonomialOrder::GrevLex).unwrap();
        assert!(syz.is_empty());
    }
}
