//! Exact-rational linear feasibility by Fourier-Motzkin elimination.
//!
//! A system is a list of constraints `a . x <= b` over `nvars` variables with
//! `BigRational` data. Equalities are encoded as two inequalities by the
//! caller. Auditable at desk scale; rows are normalized and deduplicated to
//! keep the elimination from ballooning.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub bound: BigRational,
}

impl Constraint {
    pub fn le(coeffs: Vec<BigRational>, bound: BigRational) -> Constraint {
        Constraint { coeffs, bound }
    }

    /// Scale so the first nonzero coefficient has absolute value 1.
    fn normalized(mut self) -> Constraint {
        if let Some(pivot) = self.coeffs.iter().find(|c| !c.is_zero()).cloned() {
            let scale = pivot.abs();
            for c in &mut self.coeffs {
                *c /= &scale;
            }
            self.bound /= &scale;
        }
        self
    }
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_u32(n: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// True iff some rational point satisfies every constraint.
pub fn feasible(constraints: &[Constraint], nvars: usize) -> bool {
    let mut rows: Vec<Constraint> = constraints.to_vec();
    for var in 0..nvars {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut rest = Vec::new();
        for r in rows {
            let c = &r.coeffs[var];
            if c.is_zero() {
                rest.push(r);
            } else if c.is_positive() {
                pos.push(r);
            } else {
                neg.push(r);
            }
        }
        // combine each upper bound with each lower bound on x_var
        for p in &pos {
            for n in &neg {
                let cp = p.coeffs[var].clone();
                let cn = -n.coeffs[var].clone();
                let coeffs: Vec<BigRational> = p
                    .coeffs
                    .iter()
                    .zip(&n.coeffs)
                    .map(|(a, b)| a * &cn + b * &cp)
                    .collect();
                let bound = &p.bound * &cn + &n.bound * &cp;
                debug_assert!(coeffs[var].is_zero());
                let row = Constraint { coeffs, bound }.normalized();
                if !rest.contains(&row) {
                    rest.push(row);
                }
            }
        }
        rows = rest;
    }
    // only constant rows remain: 0 <= bound must hold
    rows.iter().all(|r| !r.bound.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn r(n: i64) -> BigRational {
        rational(n, 1)
    }

    #[test]
    fn simple_feasible() {
        // x >= 1, x <= 2
        let cs = vec![
            Constraint::le(vec![-BigRational::one()], r(-1)),
            Constraint::le(vec![BigRational::one()], r(2)),
        ];
        assert!(feasible(&cs, 1));
    }

    #[test]
    fn simple_infeasible() {
        // x >= 2, x <= 1
        let cs = vec![
            Constraint::le(vec![-BigRational::one()], r(-2)),
            Constraint::le(vec![BigRational::one()], r(1)),
        ];
        assert!(!feasible(&cs, 1));
    }

    #[test]
    fn two_vars_polytope() {
        // x + y = 1 (two inequalities), x >= 0, y >= 0, 2x + 3y <= 5/2
        let cs = vec![
            Constraint::le(vec![r(1), r(1)], r(1)),
            Constraint::le(vec![r(-1), r(-1)], r(-1)),
            Constraint::le(vec![r(-1), r(0)], r(0)),
            Constraint::le(vec![r(0), r(-1)], r(0)),
            Constraint::le(vec![r(2), r(3)], rational(5, 2)),
        ];
        assert!(feasible(&cs, 2));
        // tighten to 2x + 3y <= 3/2: impossible since min on the segment is 2
        let mut cs2 = cs.clone();
        cs2[4] = Constraint::le(vec![r(2), r(3)], rational(3, 2));
        assert!(!feasible(&cs2, 2));
    }
}
