//! Exact computations with the first-order neighbour relation between maps of
//! finitely presented commutative algebras.

pub mod arith;
pub mod cli;
pub mod error;
pub mod algebra;
pub mod ideal;
pub mod neighbour;
pub mod poly;
pub mod verify;

pub use arith::{Coefficient, RingSpec};
pub use error::{Error, Result};
pub use ideal::{buchberger, monomial_reduce, normal_form, GroebnerBasis, Ideal};
pub use poly::{parse_poly, Monomial, MonomialOrder, Polynomial, VarSet};
