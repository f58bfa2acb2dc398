//! Coefficients, monomials, term orders and sparse polynomials.

mod field;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

use std::cmp::Ordering;

pub use field::{Coefficient, Field};
pub use monomial::{monomials_of_degree, Exponents, Monomial};
pub use order::TermOrder;
pub use parse::{parse_polynomial, parse_polynomial_list};
pub use polynomial::{Polynomial, Term};
pub(crate) use polynomial::sub_scaled;
pub use ring::{same_ring, Ring, RingSpec};

use crate::error::{Error, Result};

/// Compares two monomials under `order`.
pub fn compare(order: &TermOrder, m1: &Monomial, m2: &Monomial) -> Result<Ordering> {
    if m1.arity() != m2.arity() {
        return Err(Error::ArityMismatch(m1.arity(), m2.arity()));
    }
    Ok(order.cmp(m1, m2))
}

pub fn poly_add(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    p.try_add(q)
}

pub fn poly_mul(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    p.try_mul(q)
}

/// `p^(char^e)`; fails in characteristic 0.
pub fn frobenius_power(p: &Polynomial, e: u32) -> Result<Polynomial> {
    p.frobenius_power(e)
}
