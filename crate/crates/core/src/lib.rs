//! Exact computational commutative algebra over polynomial rings:
//! Groebner-based ideal arithmetic, Newton-polyhedron integral closures of
//! monomial ideals, Rees algebras and reductions, the quadratic-transform
//! theory of m-primary ideals in two variables, Bourbaki ideals of modules,
//! and a verification harness for the associated closure theorems.

pub mod bourbaki;
pub mod coeff;
pub mod error;
pub mod groebner;
pub mod lp;
pub mod modgb;
pub mod monomial;
pub mod monomial_ideal;
pub mod parse;
pub mod poly;
pub mod rees;
pub mod rlr2;
pub mod ring;
pub mod verify;

pub use coeff::{Coeff, CoeffField};
pub use error::{Error, Result};
pub use groebner::Ideal;
pub use monomial::Monomial;
pub use parse::parse_polynomial;
pub use poly::Polynomial;
pub use ring::{MonomialOrder, Ring, RingContext};
