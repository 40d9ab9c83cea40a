//! Exact arithmetic substrate.
//!
//! Integers and rationals come from `num-bigint` / `num-rational`; this module
//! adds elements of real quadratic fields ([`QuadSurd`]), sector slopes, exact
//! slope comparison and exact root isolation for rational quadratics.

mod roots;
pub(crate) mod slope;
mod surd;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use roots::{rat_quadratic_roots, QuadraticRoots};
pub use slope::{slope_compare, LatticePoint, SectorSlope};
pub use surd::QuadSurd;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

/// Shorthand for an integer rational.
pub fn rat_int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Shorthand for `n / d`, reduced. Panics on `d == 0`.
pub fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `floor(q)` as an integer.
pub fn rat_floor(q: &BigRational) -> BigInt {
    q.numer().div_floor(q.denom())
}

/// `ceil(q)` as an integer.
pub fn rat_ceil(q: &BigRational) -> BigInt {
    -((-q.numer()).div_floor(q.denom()))
}

/// Floor of the square root of a non-negative rational.
pub fn rat_sqrt_floor(q: &BigRational) -> BigRational {
    debug_assert!(!q.is_negative());
    // sqrt(n/d) = sqrt(n d) / d
    let nd = q.numer() * q.denom();
    BigRational::new(nd.sqrt(), q.denom().clone())
}

/// A rational upper bound for the square root of a non-negative rational.
pub fn rat_sqrt_ceil(q: &BigRational) -> BigRational {
    debug_assert!(!q.is_negative());
    let nd = q.numer() * q.denom();
    let s = nd.sqrt();
    let s = if &s * &s == nd { s } else { s + 1 };
    BigRational::new(s, q.denom().clone())
}

/// Exact square root when `q` is the square of a rational.
pub fn rat_exact_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &n * &n == *q.numer() && &d * &d == *q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// True when `n` is a perfect square (negative numbers are not).
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let s = n.sqrt();
    &s * &s == *n
}

pub fn rat_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // to_f64 gives up on huge operands; fall back to a scaled quotient
        let n = q.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = q.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

pub fn big_to_f64(n: &BigInt) -> f64 {
    n.to_f64().unwrap_or(if n.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub(crate) fn is_integer(q: &BigRational) -> bool {
    q.denom().is_one()
}

pub(crate) fn half() -> BigRational {
    rat(1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_ceil_negative() {
        assert_eq!(rat_floor(&rat(-3, 2)), BigInt::from(-2));
        assert_eq!(rat_ceil(&rat(-3, 2)), BigInt::from(-1));
        assert_eq!(rat_floor(&rat(7, 7)), BigInt::from(1));
        assert_eq!(rat_ceil(&rat(7, 2)), BigInt::from(4));
    }

    #[test]
    fn sqrt_bounds_bracket() {
        for (n, d) in [(2, 1), (9, 4), (1, 3), (0, 1), (1000001, 7)] {
            let q = rat(n, d);
            let lo = rat_sqrt_floor(&q);
            let hi = rat_sqrt_ceil(&q);
            assert!(&lo * &lo <= q);
            assert!(&hi * &hi >= q);
        }
        assert_eq!(rat_exact_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_exact_sqrt(&rat(2, 1)), None);
    }
}
