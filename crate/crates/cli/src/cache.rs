//! Content-addressed Groebner-basis cache.
//!
//! Entries are keyed by a SHA-256 hash of the ring, monomial order, and
//! generator list. A loaded basis is never trusted blindly: every original
//! generator must reduce to zero against it and all of its S-pairs must
//! reduce to zero (the Buchberger criterion), otherwise the entry is
//! recomputed and overwritten.

use icl_core::groebner::{normal_form, Ideal, DEFAULT_STEP_BUDGET};
use icl_core::{parse_polynomial, CoeffField, MonomialOrder, Polynomial, Result};
use sha2::{Digest, Sha256};
use std::path::Path;

fn cache_key(i: &Ideal, order: MonomialOrder) -> String {
    let mut h = Sha256::new();
    h.update(i.ring.vars.join(",").as_bytes());
    h.update(b"|");
    match i.ring.field {
        CoeffField::Q => h.update(b"Q"),
        CoeffField::Fp(p) => h.update(format!("Fp:{p}").as_bytes()),
    }
    h.update(format!("|{order:?}|").as_bytes());
    for g in &i.gens {
        h.update(g.to_string().as_bytes());
        h.update(b";");
    }
    format!("{:x}", h.finalize())
}

/// A loaded basis is valid when the original generators lie in it and it
/// satisfies the Buchberger S-pair criterion.
fn verify_basis(i: &Ideal, basis: &[Polynomial], order: MonomialOrder) -> bool {
    if basis.is_empty() {
        return i.gens.is_empty();
    }
    let mut budget = DEFAULT_STEP_BUDGET;
    for g in &i.gens {
        match normal_form(g, basis, order, &mut budget) {
            Ok(r) if r.is_zero() => {}
            _ => return false,
        }
    }
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            let (la, ca) = basis[a].leading(order).unwrap();
            let (lb, cb) = basis[b].leading(order).unwrap();
            let lcm = la.lcm(lb);
            let spair = basis[a]
                .mul_term(&la.div_into(&lcm), &ca.inv())
                .sub(&basis[b].mul_term(&lb.div_into(&lcm), &cb.inv()));
            match normal_form(&spair, basis, order, &mut budget) {
                Ok(r) if r.is_zero() => {}
                _ => return false,
            }
        }
    }
    true
}

/// Reduced Groebner basis of `i`, consulting and maintaining a disk cache
/// when `dir` is given.
pub fn gb_cached(
    dir: Option<&Path>,
    i: &Ideal,
    order: MonomialOrder,
) -> Result<Vec<Polynomial>> {
    let Some(dir) = dir else {
        return Ok(i.gb(order)?.as_ref().clone());
    };
    std::fs::create_dir_all(dir)
        .map_err(|e| icl_core::Error::Invalid(format!("cache dir: {e}")))?;
    let path = dir.join(format!("{}.json", cache_key(i, order)));
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(strs) = serde_json::from_str::<Vec<String>>(&text) {
            if let Ok(basis) = strs
                .iter()
                .map(|s| parse_polynomial(s, &i.ring))
                .collect::<Result<Vec<_>>>()
            {
                if verify_basis(i, &basis, order) {
                    return Ok(basis);
                }
            }
        }
    }
    let basis = i.gb(order)?.as_ref().clone();
    let strs: Vec<String> = basis.iter().map(|p| p.to_string()).collect();
    std::fs::write(&path, serde_json::to_string(&strs).unwrap())
        .map_err(|e| icl_core::Error::Invalid(format!("cache write: {e}")))?;
    Ok(basis)
}
