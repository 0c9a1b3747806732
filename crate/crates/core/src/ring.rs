//! Ring contexts: variable lists, coefficient fields, and monomial orders.

use crate::coeff::CoeffField;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

/// Monomial orders supported by the toolkit.
///
/// `Block { k }` is an elimination order: the first `k` variables form the
/// leading block (compared graded-reverse-lex), ties broken by
/// graded-reverse-lex on the remaining variables. Any polynomial whose
/// leading term avoids the first block lies in the subring of the trailing
/// variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block { k: usize },
}

/// A named polynomial ring k[x1..xd] with a default monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    pub vars: Vec<String>,
    pub field: CoeffField,
    pub order: MonomialOrder,
}

pub type Ring = Arc<RingContext>;

impl RingContext {
    pub fn new(vars: Vec<String>, field: CoeffField, order: MonomialOrder) -> Result<Ring> {
        field.validate()?;
        let mut seen = HashSet::new();
        for v in &vars {
            if v.is_empty() {
                return Err(Error::Invalid("empty variable name".into()));
            }
            if !seen.insert(v.clone()) {
                return Err(Error::Invalid(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::Block { k } = order {
            if k == 0 || k >= vars.len() {
                return Err(Error::Invalid("block split out of range".into()));
            }
        }
        Ok(Arc::new(RingContext { vars, field, order }))
    }

    /// Convenience constructor over Q with grevlex.
    pub fn q(vars: &[&str]) -> Ring {
        RingContext::new(
            vars.iter().map(|s| s.to_string()).collect(),
            CoeffField::Q,
            MonomialOrder::GrevLex,
        )
        .expect("valid ring")
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Compare monomials under a given order; `a > b` means `a` is leading.
    pub fn cmp_order(&self, order: MonomialOrder, a: &Monomial, b: &Monomial) -> Ordering {
        match order {
            MonomialOrder::Lex => cmp_lex(&a.0, &b.0),
            MonomialOrder::GrevLex => cmp_grevlex(&a.0, &b.0),
            MonomialOrder::Block { k } => cmp_grevlex(&a.0[..k], &b.0[..k])
                .then_with(|| cmp_grevlex(&a.0[k..], &b.0[k..])),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_order(self.order, a, b)
    }

    /// Same variables and field; the default order may differ.
    pub fn compatible(&self, other: &RingContext) -> bool {
        self.vars == other.vars && self.field == other.field
    }
}

fn cmp_lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn cmp_grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // smaller exponent in the last differing variable wins
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[u32]) -> Monomial {
        Monomial(v.to_vec())
    }

    #[test]
    fn rejects_bad_contexts() {
        assert!(RingContext::new(vec!["x".into(), "x".into()], CoeffField::Q, MonomialOrder::Lex)
            .is_err());
        assert!(RingContext::new(vec!["".into()], CoeffField::Q, MonomialOrder::Lex).is_err());
        assert!(
            RingContext::new(vec!["x".into()], CoeffField::Fp(4), MonomialOrder::Lex).is_err()
        );
    }

    #[test]
    fn lex_and_grevlex() {
        let r = RingContext::q(&["x", "y"]);
        // lex: x > y^5
        assert_eq!(
            r.cmp_order(MonomialOrder::Lex, &m(&[1, 0]), &m(&[0, 5])),
            Ordering::Greater
        );
        // grevlex: y^5 > x
        assert_eq!(
            r.cmp_order(MonomialOrder::GrevLex, &m(&[1, 0]), &m(&[0, 5])),
            Ordering::Less
        );
        // grevlex same degree: x^2y > xy^2
        assert_eq!(
            r.cmp_order(MonomialOrder::GrevLex, &m(&[2, 1]), &m(&[1, 2])),
            Ordering::Greater
        );
    }

    #[test]
    fn block_order_eliminates() {
        let r = RingContext::new(
            vec!["t".into(), "x".into(), "y".into()],
            CoeffField::Q,
            MonomialOrder::Block { k: 1 },
        )
        .unwrap();
        // any positive power of t beats any t-free monomial
        assert_eq!(r.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
    }
}
