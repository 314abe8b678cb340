//! Exact arbitrary-precision arithmetic.
//!
//! Every probability, moment, and fitted coefficient in this crate is an
//! [`Rational`] in canonical form (reduced, positive denominator), so equality
//! is structural and nothing is ever rounded. The text form is `p/q` with the
//! denominator omitted when it is 1 (`"46"`, `"1/120"`, `"-1/6"`), which is
//! what [`num_rational::BigRational`] prints natively.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub type Integer = BigInt;
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("division by zero")]
pub struct DivisionByZero;

/// Exact division that reports a zero divisor instead of panicking.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational, DivisionByZero> {
    if b.is_zero() {
        Err(DivisionByZero)
    } else {
        Ok(a / b)
    }
}

/// n! as an exact integer; `factorial(0) = 1`.
pub fn factorial(n: usize) -> Integer {
    (1..=n).map(Integer::from).product()
}

/// The odd double factorial `(2n+1)!! = 1 * 3 * 5 * ... * (2n+1)`.
///
/// Equivalently `(2n+1)!/(2^n n!)`.
pub fn double_factorial_odd(n: usize) -> Integer {
    (0..=n).map(|k| Integer::from(2 * k + 1)).product()
}

/// Binomial coefficient C(n, k) as an exact integer; 0 when k > n.
pub fn binomial(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::zero();
    }
    num_integer::binomial(Integer::from(n), Integer::from(k))
}

/// Shorthand for the exact rational p/q. Panics if q = 0.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(Integer::from(p), Integer::from(q))
}

/// Shorthand for an integer-valued rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

/// The reciprocal 1/v for positive v.
pub fn recip(v: usize) -> Rational {
    Rational::new(Integer::one(), Integer::from(v))
}
