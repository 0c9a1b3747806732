//! Sparse multivariate polynomials with exact coefficients.

use crate::coeff::{coeff_is_negative, Coeff};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::{MonomialOrder, Ring};
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in a fixed ring context. No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    pub ring: Ring,
    pub terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.nvars()), c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Ring, i: usize) -> Polynomial {
        Polynomial::term(ring, Monomial::var(i, ring.nvars()), ring.field.one())
    }

    pub fn term(ring: &Ring, m: Monomial, c: Coeff) -> Polynomial {
        assert_eq!(m.0.len(), ring.nvars());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_i64(ring: &Ring, n: i64) -> Polynomial {
        Polynomial::constant(ring, ring.field.from_i64(n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.is_one())
    }

    /// Single-term check (monomial times a coefficient).
    pub fn is_term(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    fn insert_add(terms: &mut BTreeMap<Monomial, Coeff>, m: Monomial, c: Coeff) {
        match terms.get_mut(&m) {
            Some(old) => {
                let sum = old.add(&c);
                if sum.is_zero() {
                    terms.remove(&m);
                } else {
                    *old = sum;
                }
            }
            None => {
                if !c.is_zero() {
                    terms.insert(m, c);
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert!(self.ring.compatible(&other.ring), "ring mismatch");
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_add(&mut terms, m.clone(), c.clone());
        }
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert!(self.ring.compatible(&other.ring), "ring mismatch");
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                Self::insert_add(&mut terms, m1.mul(m2), c1.mul(c2));
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            let p = c1.mul(c);
            if !p.is_zero() {
                terms.insert(m1.mul(m), p);
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Leading term under `order`.
    pub fn leading(&self, order: MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| self.ring.cmp_order(order, a, b))
    }

    /// Scale so the leading coefficient under the ring's default order is 1.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading(order) {
            Some((_, c)) => self.scale(&c.inv()),
            None => self.clone(),
        }
    }

    /// Minimal total degree among terms, together with the sum of those terms.
    pub fn lowest_degree_form(&self) -> Result<(u64, Polynomial)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let ord = self.terms.keys().map(|m| m.total_degree()).min().unwrap();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.total_degree() == ord)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Ok((
            ord,
            Polynomial {
                ring: self.ring.clone(),
                terms,
            },
        ))
    }

    /// Ring homomorphism determined by images of every variable.
    ///
    /// `images[i]` is the image of the i-th variable of `self.ring` in the
    /// target ring; constants map through the identity on the field.
    pub fn ring_map_apply(&self, images: &[Polynomial], target: &Ring) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::ArityMismatch);
        }
        for im in images {
            if !im.ring.compatible(target) {
                return Err(Error::RingMismatch);
            }
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e));
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Exact division: `Some(q)` with `self = q * g`, or `None`.
    pub fn exact_divide(&self, g: &Polynomial) -> Result<Option<Polynomial>> {
        if g.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let order = MonomialOrder::GrevLex;
        let (gm, gc) = g.leading(order).map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut q = Polynomial::zero(&self.ring);
        while !rem.is_zero() {
            let (rm, rc) = rem
                .leading(order)
                .map(|(m, c)| (m.clone(), c.clone()))
                .unwrap();
            if !gm.divides(&rm) {
                return Ok(None);
            }
            let qm = gm.div_into(&rm);
            let qc = rc.div(&gc);
            let qt = Polynomial::term(&self.ring, qm, qc);
            rem = rem.sub(&qt.mul(g));
            q = q.add(&qt);
        }
        Ok(Some(q))
    }

    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut m2 = m.clone();
                m2.0[i] -= 1;
                let c2 = c.mul(&self.ring.field.from_i64(e as i64));
                Self::insert_add(&mut terms, m2, c2);
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.ring.field.zero())
    }

    /// Evaluate at a full point given as field elements.
    pub fn evaluate(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = self.ring.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&point[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Terms sorted descending under the ring's default order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| self.ring.cmp(b, a));
        v
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.sorted_terms() {
            let neg = coeff_is_negative(c);
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let cabs = if neg { c.neg() } else { c.clone() };
            let show_coeff = !cabs.is_one() || m.is_one();
            if show_coeff {
                write!(f, "{cabs}")?;
            }
            let mut wrote_var = false;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if show_coeff || wrote_var {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.ring.vars[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote_var = true;
            }
        }
        Ok(())
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

    #[test]
    fn lowest_degree_form_examples() {
        let r = RingContext::q(&["x", "y"]);
        let (o, form) = p(&r, "x^2 + y^3").lowest_degree_form().unwrap();
        assert_eq!(o, 2);
        assert_eq!(form, p(&r, "x^2"));

        let (o, form) = p(&r, "x + y + x^2*y").lowest_degree_form().unwrap();
        assert_eq!(o, 1);
        assert_eq!(form, p(&r, "x + y"));

        let sq = p(&r, "x + y").pow(2);
        let (o, form) = sq.lowest_degree_form().unwrap();
        assert_eq!(o, 2);
        assert_eq!(form, p(&r, "x^2 + 2*x*y + y^2"));

        assert_eq!(
            Polynomial::zero(&r).lowest_degree_form(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn ring_map_examples() {
        let r = RingContext::q(&["x", "y"]);
        let s = RingContext::q(&["x", "t"]);
        // y -> x*t, x -> x
        let images = vec![p(&s, "x"), p(&s, "x*t")];
        assert_eq!(p(&r, "y^2").ring_map_apply(&images, &s).unwrap(), p(&s, "x^2*t^2"));
        // identity
        let id = vec![p(&r, "x"), p(&r, "y")];
        assert_eq!(
            p(&r, "x^2+y^2").ring_map_apply(&id, &r).unwrap(),
            p(&r, "x^2+y^2")
        );
        // specialization of z-coefficients
        let rz = RingContext::q(&["x", "y", "z1", "z2"]);
        let f = p(&rz, "z1*x^2 + z2*y^2");
        let images = vec![p(&r, "x"), p(&r, "y"), p(&r, "1"), p(&r, "-1")];
        assert_eq!(f.ring_map_apply(&images, &r).unwrap(), p(&r, "x^2 - y^2"));
        // arity is checked
        assert_eq!(
            p(&r, "x").ring_map_apply(&[p(&r, "x")], &r),
            Err(Error::ArityMismatch)
        );
    }

    #[test]
    fn map_is_homomorphism() {
        let r = RingContext::q(&["x", "y"]);
        let s = RingContext::q(&["x", "t"]);
        let images = vec![p(&s, "x + t"), p(&s, "x*t - 1")];
        let f = p(&r, "x^2*y - 3*y + 1/2");
        let g = p(&r, "x + y^2");
        let fg = f.mul(&g).ring_map_apply(&images, &s).unwrap();
        let f2 = f.ring_map_apply(&images, &s).unwrap();
        let g2 = g.ring_map_apply(&images, &s).unwrap();
        assert_eq!(fg, f2.mul(&g2));
        let sum = f.add(&g).ring_map_apply(&images, &s).unwrap();
        assert_eq!(sum, f2.add(&g2));
    }

    #[test]
    fn exact_divide_examples() {
        let s = RingContext::q(&["x", "t"]);
        assert_eq!(
            p(&s, "x^2*t^2").exact_divide(&p(&s, "x^2")).unwrap(),
            Some(p(&s, "t^2"))
        );
        assert_eq!(p(&s, "x^2 + t^2").exact_divide(&p(&s, "x")).unwrap(), None);
        assert_eq!(
            Polynomial::zero(&s).exact_divide(&p(&s, "x")).unwrap(),
            Some(Polynomial::zero(&s))
        );
        assert_eq!(
            p(&s, "x").exact_divide(&Polynomial::zero(&s)),
            Err(Error::ZeroDivisor)
        );
        // non-monomial divisor
        let f = p(&s, "x^2 - t^2");
        assert_eq!(f.exact_divide(&p(&s, "x - t")).unwrap(), Some(p(&s, "x + t")));
    }

    #[test]
    fn display_is_canonical() {
        let r = RingContext::q(&["x", "y"]);
        assert_eq!(p(&r, "y^2 + x^2 - 2*x*y").to_string(), "x^2 - 2*x*y + y^2");
        assert_eq!(p(&r, "0").to_string(), "0");
        assert_eq!(p(&r, "-x + 3/2").to_string(), "-x + 3/2");
    }
}
