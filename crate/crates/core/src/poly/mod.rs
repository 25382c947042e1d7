//! Coefficients, monomials, orders and sparse polynomial/module arithmetic.

pub mod field;
pub mod monomial;
pub mod order;
mod ring;

pub use field::{Coeff, Fp, PrimeField, DEFAULT_CHARACTERISTIC};
pub use monomial::{monomials_of_degree, Exponents, Monomial};
pub use order::{Flavor, ModuleRule, OrderSpec};
pub use ring::{ModuleElement, PolyRing, Polynomial, Term};
