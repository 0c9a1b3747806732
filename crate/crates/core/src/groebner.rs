//! Buchberger-based ideal arithmetic: Groebner bases, membership,
//! intersection, quotient, elimination, dimension, colength.

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{MonomialOrder, Ring, RingContext};
use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

/// Default global reduction-step budget for a single basis computation.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

/// An ideal given by generators, with cached reduced Groebner bases per order.
#[derive(Debug)]
pub struct Ideal {
    pub ring: Ring,
    pub gens: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Ideal {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ring: ring.clone(),
            gens,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![])
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)])
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_term())
    }

    /// Reduced Groebner basis under `order` (cached).
    pub fn gb(&self, order: MonomialOrder) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(b) = self.cache.lock().unwrap().get(&order) {
            return Ok(b.clone());
        }
        let basis = Arc::new(buchberger(&self.ring, &self.gens, order, DEFAULT_STEP_BUDGET)?);
        self.cache
            .lock()
            .unwrap()
            .entry(order)
            .or_insert_with(|| basis.clone());
        Ok(basis)
    }

    pub fn gb_default(&self) -> Result<Arc<Vec<Polynomial>>> {
        self.gb(self.ring.order)
    }

    /// Remainder of `f` on division by the cached basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let gb = self.gb_default()?;
        let mut budget = DEFAULT_STEP_BUDGET;
        normal_form(f, &gb, self.ring.order, &mut budget)
    }

    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains_poly(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        self.contains_poly(&Polynomial::one(&self.ring))
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        // dedup pairwise products so that iterated powers stay polynomial
        // in size instead of exponential
        let mut seen = std::collections::BTreeSet::new();
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                let p = f.mul(g);
                if seen.insert(p.to_string()) {
                    gens.push(p);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn power(&self, n: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..n {
            acc = acc.product(self);
        }
        acc
    }

    /// Minimal generators as given by the reduced default-order basis.
    pub fn reduced_gens(&self) -> Result<Vec<Polynomial>> {
        Ok(self.gb_default()?.as_ref().clone())
    }
}

/// Full remainder of multivariate division, counting steps against `budget`.
pub fn normal_form(
    f: &Polynomial,
    basis: &[Polynomial],
    order: MonomialOrder,
    budget: &mut u64,
) -> Result<Polynomial> {
    let ring = f.ring.clone();
    let leads: Vec<(Monomial, Coeff)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading(order).expect("nonzero basis element");
            (m.clone(), c.clone())
        })
        .collect();
    let mut rem = Polynomial::zero(&ring);
    let mut work = f.clone();
    'outer: while !work.is_zero() {
        let (wm, wc) = {
            let (m, c) = work.leading(order).unwrap();
            (m.clone(), c.clone())
        };
        for (i, (lm, lc)) in leads.iter().enumerate() {
            if lm.divides(&wm) {
                if *budget == 0 {
                    return Err(Error::BudgetExceeded(DEFAULT_STEP_BUDGET));
                }
                *budget -= 1;
                let qm = lm.div_into(&wm);
                let qc = wc.div(lc);
                work = work.sub(&basis[i].mul_term(&qm, &qc));
                continue 'outer;
            }
        }
        // leading term irreducible; move it to the remainder
        rem = rem.add(&Polynomial::term(&ring, wm.clone(), wc.clone()));
        work = work.sub(&Polynomial::term(&ring, wm, wc));
    }
    Ok(rem)
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    sugar: u64,
    lcm_deg: u64,
    i: usize,
    j: usize,
}

/// Buchberger's algorithm with the two standard criteria and sugar-strategy
/// pair selection; ties broken by pair index. Returns the reduced basis.
pub fn buchberger(
    ring: &Ring,
    gens: &[Polynomial],
    order: MonomialOrder,
    mut budget: u64,
) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut sugars: Vec<u64> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.monic(order));
            sugars.push(g.total_degree().unwrap());
        }
    }
    if basis.is_empty() {
        return Ok(vec![]);
    }

    let lead = |basis: &[Polynomial], i: usize| -> Monomial {
        basis[i].leading(order).unwrap().0.clone()
    };

    let mut pairs: BTreeSet<PairKey> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let add_pairs = |pairs: &mut BTreeSet<PairKey>, basis: &[Polynomial], sugars: &[u64], j: usize| {
        let ltj = basis[j].leading(order).unwrap().0.clone();
        for i in 0..j {
            let lti = basis[i].leading(order).unwrap().0.clone();
            let lcm = lti.lcm(&ltj);
            let lcm_deg = lcm.total_degree();
            let si = sugars[i] - lti.total_degree();
            let sj = sugars[j] - ltj.total_degree();
            pairs.insert(PairKey {
                sugar: lcm_deg + si.max(sj),
                lcm_deg,
                i,
                j,
            });
        }
    };
    for j in 0..basis.len() {
        add_pairs(&mut pairs, &basis, &sugars, j);
    }

    while let Some(pk) = pairs.iter().next().cloned() {
        pairs.remove(&pk);
        let (i, j) = (pk.i, pk.j);
        done.insert((i, j));
        let lti = lead(&basis, i);
        let ltj = lead(&basis, j);
        // first Buchberger criterion: coprime leading terms
        if lti.coprime(&ltj) {
            continue;
        }
        // chain criterion: some k with lt_k | lcm and both side pairs done
        let lcm = lti.lcm(&ltj);
        let mut skip = false;
        for k in 0..basis.len() {
            if k == i || k == j {
                continue;
            }
            if lead(&basis, k).divides(&lcm) {
                let a = (i.min(k), i.max(k));
                let b = (j.min(k), j.max(k));
                if done.contains(&a) && done.contains(&b) {
                    skip = true;
                    break;
                }
            }
        }
        if skip {
            continue;
        }
        // s-polynomial
        let (ci, cj) = (
            basis[i].leading(order).unwrap().1.clone(),
            basis[j].leading(order).unwrap().1.clone(),
        );
        let s = basis[i]
            .mul_term(&lti.div_into(&lcm), &ci.inv())
            .sub(&basis[j].mul_term(&ltj.div_into(&lcm), &cj.inv()));
        let rem = normal_form(&s, &basis, order, &mut budget)?;
        if !rem.is_zero() {
            let sugar = pk.sugar.max(rem.total_degree().unwrap());
            basis.push(rem.monic(order));
            sugars.push(sugar);
            add_pairs(&mut pairs, &basis, &sugars, basis.len() - 1);
        }
    }

    // minimalize: drop elements whose lead is divisible by another lead
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lti = lead(&basis, i);
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let ltj = lead(&basis, j);
            if ltj.divides(&lti) && (ltj != lti || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .iter()
        .zip(&keep)
        .filter(|(_, k)| **k)
        .map(|(g, _)| g.clone())
        .collect();

    // inter-reduce tails
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = normal_form(&minimal[i], &others, order, &mut budget)?;
        if !r.is_zero() {
            reduced.push(r.monic(order));
        }
    }
    // deterministic output order: descending leading monomial
    reduced.sort_by(|a, b| {
        ring.cmp_order(
            order,
            b.leading(order).unwrap().0,
            a.leading(order).unwrap().0,
        )
    });
    Ok(reduced)
}

/// Generator-level combination of ideals.
pub enum CombineOp {
    Sum,
    Product,
    Power(u32),
}

pub fn ideal_combine(i: &Ideal, j: Option<&Ideal>, op: CombineOp) -> Ideal {
    match op {
        CombineOp::Sum => i.sum(j.expect("sum needs two ideals")),
        CombineOp::Product => i.product(j.expect("product needs two ideals")),
        CombineOp::Power(n) => i.power(n),
    }
}

/// I ∩ J by the auxiliary-variable elimination method, with a fast path for
/// monomial ideals (pairwise lcm).
pub fn ideal_intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if !i.ring.compatible(&j.ring) {
        return Err(Error::RingMismatch);
    }
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(&i.ring));
    }
    if i.is_monomial() && j.is_monomial() {
        let mut gens = Vec::new();
        for f in &i.gens {
            let (mf, _) = f.leading(MonomialOrder::Lex).unwrap();
            for g in &j.gens {
                let (mg, _) = g.leading(MonomialOrder::Lex).unwrap();
                gens.push(Polynomial::term(
                    &i.ring,
                    mf.lcm(mg),
                    i.ring.field.one(),
                ));
            }
        }
        let out = Ideal::new(&i.ring, gens);
        return Ok(Ideal::new(&i.ring, out.reduced_gens()?));
    }
    // aux ring k[w, vars] with w eliminated
    let mut vars = vec![fresh_var_name(&i.ring, "w")];
    vars.extend(i.ring.vars.iter().cloned());
    let aux = RingContext::new(vars, i.ring.field, MonomialOrder::Block { k: 1 })?;
    let lift = |f: &Polynomial| lift_append_front(f, &aux);
    let w = Polynomial::var(&aux, 0);
    let one_minus_w = Polynomial::one(&aux).sub(&w);
    let mut gens = Vec::new();
    for f in &i.gens {
        gens.push(w.mul(&lift(f)));
    }
    for g in &j.gens {
        gens.push(one_minus_w.mul(&lift(g)));
    }
    let aux_ideal = Ideal::new(&aux, gens);
    let gb = aux_ideal.gb(MonomialOrder::Block { k: 1 })?;
    let mut out = Vec::new();
    for g in gb.iter() {
        if g.terms.keys().all(|m| m.0[0] == 0) {
            out.push(drop_front_var(g, &i.ring));
        }
    }
    Ok(Ideal::new(&i.ring, out))
}

/// (I : J) = { f | f·J ⊆ I }.
pub fn ideal_quotient(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if !i.ring.compatible(&j.ring) {
        return Err(Error::RingMismatch);
    }
    if j.is_zero() {
        return Ok(Ideal::unit(&i.ring));
    }
    let mut acc: Option<Ideal> = None;
    for f in &j.gens {
        let inter = ideal_intersect(i, &Ideal::new(&i.ring, vec![f.clone()]))?;
        let mut gens = Vec::new();
        for g in &inter.gens {
            let q = g
                .exact_divide(f)?
                .expect("element of I ∩ (f) must be divisible by f");
            gens.push(q);
        }
        let colon = Ideal::new(&i.ring, gens);
        acc = Some(match acc {
            None => colon,
            Some(a) => ideal_intersect(&a, &colon)?,
        });
    }
    Ok(acc.unwrap())
}

/// I ∩ k[remaining vars], as an ideal of the subring context.
pub fn eliminate(i: &Ideal, drop_vars: &[String]) -> Result<Ideal> {
    let ring = &i.ring;
    let mut drop_idx = Vec::new();
    for v in drop_vars {
        match ring.var_index(v) {
            Some(ix) => drop_idx.push(ix),
            None => return Err(Error::UnknownVariable(v.clone())),
        }
    }
    drop_idx.sort_unstable();
    drop_idx.dedup();
    if drop_idx.is_empty() {
        return Ok(i.clone());
    }
    if drop_idx.len() == ring.nvars() {
        return Err(Error::OrderMismatch);
    }
    let keep_idx: Vec<usize> = (0..ring.nvars()).filter(|k| !drop_idx.contains(k)).collect();
    // permuted ring [dropped | kept] with a block order
    let mut vars: Vec<String> = drop_idx.iter().map(|&k| ring.vars[k].clone()).collect();
    vars.extend(keep_idx.iter().map(|&k| ring.vars[k].clone()));
    let perm_ring = RingContext::new(vars, ring.field, MonomialOrder::Block { k: drop_idx.len() })?;
    let perm: Vec<usize> = drop_idx.iter().chain(keep_idx.iter()).copied().collect();
    let permuted = Ideal::new(
        &perm_ring,
        i.gens.iter().map(|g| permute_vars(g, &perm, &perm_ring)).collect(),
    );
    let gb = permuted.gb(MonomialOrder::Block { k: drop_idx.len() })?;
    // target subring keeps original relative order of remaining vars
    let sub_order = match ring.order {
        MonomialOrder::Block { .. } => MonomialOrder::GrevLex,
        o => o,
    };
    let sub = RingContext::new(
        keep_idx.iter().map(|&k| ring.vars[k].clone()).collect(),
        ring.field,
        sub_order,
    )?;
    let nd = drop_idx.len();
    let mut out = Vec::new();
    for g in gb.iter() {
        if g.terms.keys().all(|m| m.0[..nd].iter().all(|&e| e == 0)) {
            let mut terms = std::collections::BTreeMap::new();
            for (m, c) in &g.terms {
                terms.insert(Monomial(m.0[nd..].to_vec()), c.clone());
            }
            out.push(Polynomial { ring: sub.clone(), terms });
        }
    }
    Ok(Ideal::new(&sub, out))
}

/// Krull dimension of R/I via maximal variable sets independent modulo the
/// leading-term ideal.
pub fn krull_dim(i: &Ideal) -> Result<usize> {
    if i.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    if i.is_zero() {
        return Ok(i.ring.nvars());
    }
    let gb = i.gb(MonomialOrder::GrevLex)?;
    let leads: Vec<Monomial> = gb
        .iter()
        .map(|g| g.leading(MonomialOrder::GrevLex).unwrap().0.clone())
        .collect();
    let d = i.ring.nvars();
    assert!(d <= 24, "dimension computation limited to 24 variables");
    let mut best = 0usize;
    for mask in 0u32..(1 << d) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        // S independent iff no leading monomial is supported inside S
        let independent = leads.iter().all(|m| {
            !m.0.iter()
                .enumerate()
                .all(|(k, &e)| e == 0 || mask & (1 << k) != 0)
        });
        if independent {
            best = size;
        }
    }
    Ok(best)
}

/// Height of a proper ideal over the polynomial ring.
pub fn height(i: &Ideal) -> Result<usize> {
    Ok(i.ring.nvars() - krull_dim(i)?)
}

/// λ(R/I) for a zero-dimensional ideal: the number of standard monomials.
pub fn colength_0dim(i: &Ideal) -> Result<u64> {
    let gb = i.gb(MonomialOrder::GrevLex)?;
    let leads: Vec<Monomial> = gb
        .iter()
        .map(|g| g.leading(MonomialOrder::GrevLex).unwrap().0.clone())
        .collect();
    let d = i.ring.nvars();
    // zero-dimensional iff each variable has a pure power among the leads
    let mut bounds = vec![None::<u32>; d];
    for m in &leads {
        if let Some(k) = pure_power_var(m) {
            let e = m.0[k];
            bounds[k] = Some(bounds[k].map_or(e, |b: u32| b.min(e)));
        }
    }
    let bounds: Vec<u32> = bounds
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::NotZeroDimensional)?;
    let mut count = 0u64;
    let mut cur = Monomial::one(d);
    count_standard(&leads, &bounds, &mut cur, 0, &mut count);
    Ok(count)
}

fn pure_power_var(m: &Monomial) -> Option<usize> {
    let mut var = None;
    for (k, &e) in m.0.iter().enumerate() {
        if e > 0 {
            if var.is_some() {
                return None;
            }
            var = Some(k);
        }
    }
    var
}

fn count_standard(leads: &[Monomial], bounds: &[u32], cur: &mut Monomial, pos: usize, count: &mut u64) {
    if pos == bounds.len() {
        if !leads.iter().any(|m| m.divides(cur)) {
            *count += 1;
        }
        return;
    }
    for e in 0..bounds[pos] {
        cur.0[pos] = e;
        count_standard(leads, bounds, cur, pos + 1, count);
    }
    cur.0[pos] = 0;
}

/// A variable name not already used by the ring.
pub fn fresh_var_name(ring: &Ring, base: &str) -> String {
    if ring.var_index(base).is_none() {
        return base.to_string();
    }
    let mut k = 0usize;
    loop {
        let name = format!("{base}{k}");
        if ring.var_index(&name).is_none() {
            return name;
        }
        k += 1;
    }
}

/// Reinterpret `f` in a ring with one extra variable prepended.
pub fn lift_append_front(f: &Polynomial, target: &Ring) -> Polynomial {
    let mut terms = std::collections::BTreeMap::new();
    for (m, c) in &f.terms {
        let mut e = vec![0u32];
        e.extend_from_slice(&m.0);
        terms.insert(Monomial(e), c.clone());
    }
    Polynomial {
        ring: target.clone(),
        terms,
    }
}

fn drop_front_var(f: &Polynomial, target: &Ring) -> Polynomial {
    let mut terms = std::collections::BTreeMap::new();
    for (m, c) in &f.terms {
        debug_assert_eq!(m.0[0], 0);
        terms.insert(Monomial(m.0[1..].to_vec()), c.clone());
    }
    Polynomial {
        ring: target.clone(),
        terms,
    }
}

/// Map `f` into `target` whose i-th variable is `f.ring`'s `perm[i]`-th.
pub fn permute_vars(f: &Polynomial, perm: &[usize], target: &Ring) -> Polynomial {
    let mut terms = std::collections::BTreeMap::new();
    for (m, c) in &f.terms {
        let e: Vec<u32> = perm.iter().map(|&k| m.0[k]).collect();
        terms.insert(Monomial(e), c.clone());
    }
    Polynomial {
        ring: target.clone(),
        terms,
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

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn gb_examples() {
        let r = RingContext::new(
            vec!["x".into(), "y".into()],
            crate::coeff::CoeffField::Q,
            MonomialOrder::Lex,
        )
        .unwrap();
        // (x^2 - y, y^2) under lex x > y: reduced basis {x^2 - y, y^2}... check by hand:
        // S(x^2-y, y^2) = y^3 -> reduces to 0 via y^2. Actually y*  (x^2-y) - x^2*...:
        // lcm(x^2, y^2) = x^2y^2; S = y^2(x^2-y) - x^2*y^2 = -y^3 -> 0 mod y^2.
        let i = ideal(&r, &["x^2 - y", "y^2"]);
        let gb = i.gb(MonomialOrder::Lex).unwrap();
        let expect = ideal(&r, &["x^2 - y", "y^2"]);
        let got = Ideal::new(&r, gb.as_ref().clone());
        assert!(got.equals(&expect).unwrap());
        // x^4 = (x^2)^2 = (x^2 - y + y)^2 ∈ I + ... membership check instead
        assert!(i.contains_poly(&p(&r, "x^4")).unwrap());

        // unit ideal
        let u = ideal(&r, &["1", "x"]);
        let gb = u.gb(MonomialOrder::Lex).unwrap();
        assert_eq!(gb.as_ref(), &vec![p(&r, "1")]);

        // already reduced
        let m = ideal(&r, &["x", "y"]);
        let gb = m.gb(MonomialOrder::Lex).unwrap();
        assert_eq!(gb.len(), 2);
        assert!(gb.contains(&p(&r, "x")) && gb.contains(&p(&r, "y")));
    }

    #[test]
    fn normal_form_examples() {
        let r = RingContext::new(
            vec!["x".into(), "y".into()],
            crate::coeff::CoeffField::Q,
            MonomialOrder::Lex,
        )
        .unwrap();
        assert!(ideal(&r, &["x"]).normal_form(&p(&r, "x^2")).unwrap().is_zero());
        assert_eq!(
            ideal(&r, &["x - y"]).normal_form(&p(&r, "x + y")).unwrap(),
            p(&r, "2*y")
        );
        assert_eq!(
            ideal(&r, &["x", "y"]).normal_form(&p(&r, "1")).unwrap(),
            p(&r, "1")
        );
    }

    #[test]
    fn membership_examples() {
        let r = RingContext::q(&["x", "y"]);
        assert!(ideal(&r, &["x^2", "x*y", "y^2"])
            .contains_poly(&p(&r, "x*y"))
            .unwrap());
        assert!(!ideal(&r, &["x^2", "y^2"]).contains_poly(&p(&r, "x*y")).unwrap());
        assert!(ideal(&r, &["x"]).contains_poly(&p(&r, "0")).unwrap());
    }

    #[test]
    fn intersect_examples() {
        let r = RingContext::q(&["x", "y"]);
        let xy = ideal_intersect(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap();
        assert!(xy.equals(&ideal(&r, &["x*y"])).unwrap());

        let i = ideal(&r, &["x^2", "y"]);
        let j = ideal(&r, &["x"]);
        let inter = ideal_intersect(&i, &j).unwrap();
        assert!(inter.equals(&ideal(&r, &["x^2", "x*y"])).unwrap());

        let i2 = ideal(&r, &["x^2 - y", "x*y"]);
        let self_inter = ideal_intersect(&i2, &i2).unwrap();
        assert!(self_inter.equals(&i2).unwrap());

        // double inclusion on a non-monomial pair
        let a = ideal(&r, &["x^2 + y", "y^3"]);
        let b = ideal(&r, &["x + y"]);
        let inter = ideal_intersect(&a, &b).unwrap();
        for g in &inter.gens {
            assert!(a.contains_poly(g).unwrap());
            assert!(b.contains_poly(g).unwrap());
        }
    }

    #[test]
    fn quotient_examples() {
        let r = RingContext::q(&["x", "y"]);
        assert!(ideal_quotient(&ideal(&r, &["x^2"]), &ideal(&r, &["x"]))
            .unwrap()
            .equals(&ideal(&r, &["x"]))
            .unwrap());
        let rt = RingContext::q(&["x", "t"]);
        let i = Ideal::new(&rt, vec![p(&rt, "x^2*t^2"), p(&rt, "x^2")]);
        assert!(ideal_quotient(&i, &ideal(&rt, &["x^2"]))
            .unwrap()
            .is_unit()
            .unwrap());
        assert!(ideal_quotient(&ideal(&r, &["x*y", "y^2"]), &ideal(&r, &["y"]))
            .unwrap()
            .equals(&ideal(&r, &["x", "y"]))
            .unwrap());
    }

    #[test]
    fn eliminate_examples() {
        let r = RingContext::q(&["x", "y", "t"]);
        // graph ideal: (y - x t) ∩ k[x,y] = 0
        let g = ideal(&r, &["y - x*t"]);
        let e = eliminate(&g, &["t".to_string()]).unwrap();
        assert!(e.is_zero());

        // (y - x t, t^2) ∩ k[x,y] = (y^2)
        let i = ideal(&r, &["y - x*t", "t^2"]);
        let e = eliminate(&i, &["t".to_string()]).unwrap();
        let sub = e.ring.clone();
        assert!(e.equals(&ideal(&sub, &["y^2"])).unwrap());

        // unit ideal stays unit
        let u = ideal(&r, &["1"]);
        assert!(eliminate(&u, &["t".to_string()]).unwrap().is_unit().unwrap());
    }

    #[test]
    fn dim_and_colength_examples() {
        let r = RingContext::q(&["x", "y"]);
        assert_eq!(krull_dim(&ideal(&r, &["x", "y"])).unwrap(), 0);
        assert_eq!(krull_dim(&ideal(&r, &["x"])).unwrap(), 1);
        assert_eq!(krull_dim(&ideal(&r, &["x^2", "x*y"])).unwrap(), 1);
        assert_eq!(krull_dim(&Ideal::zero(&r)).unwrap(), 2);
        assert!(matches!(krull_dim(&ideal(&r, &["1"])), Err(Error::UnitIdeal)));

        assert_eq!(colength_0dim(&ideal(&r, &["x", "y"])).unwrap(), 1);
        assert_eq!(colength_0dim(&ideal(&r, &["x^2", "y^2"])).unwrap(), 4);
        assert_eq!(colength_0dim(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap(), 3);
        assert!(matches!(
            colength_0dim(&ideal(&r, &["x"])),
            Err(Error::NotZeroDimensional)
        ));
    }

    #[test]
    fn combine_examples() {
        let r = RingContext::q(&["x", "y"]);
        assert!(ideal(&r, &["x"])
            .product(&ideal(&r, &["y"]))
            .equals(&ideal(&r, &["x*y"]))
            .unwrap());
        assert!(ideal(&r, &["x", "y"])
            .power(2)
            .equals(&ideal(&r, &["x^2", "x*y", "y^2"]))
            .unwrap());
        let i = ideal(&r, &["x^2"]);
        let z = Ideal::new(&r, vec![Polynomial::zero(&r)]);
        assert!(i.sum(&z).equals(&i).unwrap());
        assert!(i.power(0).is_unit().unwrap());
    }

    #[test]
    fn gb_deterministic_and_reduced() {
        let r = RingContext::q(&["x", "y"]);
        let i = ideal(&r, &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]);
        let gb1 = i.gb(MonomialOrder::GrevLex).unwrap();
        let i2 = ideal(&r, &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]);
        let gb2 = i2.gb(MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb1.as_ref(), gb2.as_ref());
        // auto-reduced: every basis element reduces to zero against the rest
        for (k, g) in gb1.iter().enumerate() {
            let others: Vec<Polynomial> = gb1
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, h)| h.clone())
                .collect();
            let mut b = DEFAULT_STEP_BUDGET;
            let r0 = normal_form(g, &others, MonomialOrder::GrevLex, &mut b).unwrap();
            assert_eq!(&r0, g, "tails are fully reduced");
        }
    }
}
