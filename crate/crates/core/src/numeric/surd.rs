use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{is_perfect_square, rat_to_f64, BigInt, BigRational};
use crate::{Error, Result};

/// An element `a + b·√d` of a real quadratic field, with `a, b` rational and
/// `d` a positive non-square integer.
///
/// Rationals are represented with `b = 0` and `d = 0`. Binary operations mix
/// freely with rationals; mixing two genuinely irrational values requires the
/// same radicand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    a: BigRational,
    b: BigRational,
    d: BigInt,
}

impl QuadSurd {
    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> Result<Self> {
        if b.is_zero() {
            return Ok(Self::rational(a));
        }
        if !d.is_positive() {
            return Err(Error::InvalidSlope(format!("radicand {d} must be positive")));
        }
        if is_perfect_square(&d) {
            return Err(Error::InvalidSlope(format!("radicand {d} is a perfect square")));
        }
        Ok(Self { a, b, d })
    }

    pub fn rational(a: BigRational) -> Self {
        Self {
            a,
            b: BigRational::zero(),
            d: BigInt::zero(),
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_coefficient(&self) -> &BigRational {
        &self.b
    }

    /// The radicand; zero for rational values.
    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    fn common_radicand(&self, other: &Self) -> BigInt {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => other.d.clone(),
            (_, true) => self.d.clone(),
            _ => {
                assert_eq!(
                    self.d, other.d,
                    "arithmetic between different quadratic fields"
                );
                self.d.clone()
            }
        }
    }

    fn build(a: BigRational, b: BigRational, d: BigInt) -> Self {
        if b.is_zero() {
            Self::rational(a)
        } else {
            Self { a, b, d }
        }
    }

    /// Exact sign, by comparing `a²` with `b²d` when the parts disagree.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        match (sa, sb) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (x, y) if x == y => x,
            _ => {
                let a2 = &self.a * &self.a;
                let b2d = &self.b * &self.b * BigRational::from_integer(self.d.clone());
                // a² == b²d is impossible for non-square d and b ≠ 0
                if a2 > b2d {
                    sa
                } else {
                    sb
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    /// The Galois conjugate `a − b√d`.
    pub fn conjugate(&self) -> Self {
        Self::build(self.a.clone(), -&self.b, self.d.clone())
    }

    /// Field norm `a² − b²d`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.d.clone())
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conjugate();
        Some(Self::build(&c.a / &n, &c.b / &n, c.d))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        other.recip().map(|r| self * &r)
    }

    /// Scale by a rational.
    pub fn scale(&self, k: &BigRational) -> Self {
        Self::build(&self.a * k, &self.b * k, self.d.clone())
    }

    /// Writes the value as `(u + v√d) / m` with integers and `m > 0`.
    fn integer_form(&self) -> (BigInt, BigInt, BigInt) {
        let m = self.a.denom().lcm(self.b.denom());
        let u = self.a.numer() * (&m / self.a.denom());
        let v = self.b.numer() * (&m / self.b.denom());
        (u, v, m)
    }

    pub fn floor(&self) -> BigInt {
        let (u, v, m) = self.integer_form();
        if v.is_zero() {
            return u.div_floor(&m);
        }
        // v√d lies strictly between two consecutive integers k and k+1
        let t = (&v * &v * &self.d).sqrt();
        let k = if v.is_positive() { u + t } else { u - t - 1 };
        k.div_floor(&m)
    }

    pub fn ceil(&self) -> BigInt {
        if self.is_rational() {
            let q = &self.a;
            return -((-q.numer()).div_floor(q.denom()));
        }
        self.floor() + 1
    }

    /// Rational `lo ≤ self ≤ hi` with `hi − lo ≤ 2^-bits`.
    pub fn rational_bounds(&self, bits: u32) -> (BigRational, BigRational) {
        if let Some(q) = self.as_rational() {
            return (q.clone(), q.clone());
        }
        let scale = BigInt::one() << bits;
        let scaled = self.scale(&BigRational::from_integer(scale.clone()));
        let f = scaled.floor();
        (
            BigRational::new(f.clone(), scale.clone()),
            BigRational::new(f + 1, scale),
        )
    }

    /// Compares values that may live in different quadratic fields.
    pub fn compare_across(&self, other: &Self) -> Ordering {
        if self.is_rational() || other.is_rational() || self.d == other.d {
            return self.cmp(other);
        }
        let prod = &self.d * &other.d;
        let root = prod.sqrt();
        if &root * &root == prod {
            // √d₂ = (√(d₁d₂)/d₁)·√d₁
            let k = BigRational::new(root, self.d.clone());
            let moved = Self::build(other.a.clone(), &other.b * k, self.d.clone());
            return self.cmp(&moved);
        }
        // linearly independent surds: the values differ, so bounds separate
        let mut bits = 32;
        loop {
            let (lx, hx) = self.rational_bounds(bits);
            let (ly, hy) = other.rational_bounds(bits);
            if hx < ly {
                return Ordering::Less;
            }
            if hy < lx {
                return Ordering::Greater;
            }
            bits *= 2;
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_rational() {
            return rat_to_f64(&self.a);
        }
        let d = rat_to_f64(&BigRational::from_integer(self.d.clone()));
        rat_to_f64(&self.a) + rat_to_f64(&self.b) * d.sqrt()
    }
}

impl PartialOrd for QuadSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl From<BigRational> for QuadSurd {
    fn from(q: BigRational) -> Self {
        Self::rational(q)
    }
}

impl<'a> Add<&'a QuadSurd> for &'a QuadSurd {
    type Output = QuadSurd;
    fn add(self, o: &QuadSurd) -> QuadSurd {
        let d = self.common_radicand(o);
        QuadSurd::build(&self.a + &o.a, &self.b + &o.b, d)
    }
}

impl<'a> Sub<&'a QuadSurd> for &'a QuadSurd {
    type Output = QuadSurd;
    fn sub(self, o: &QuadSurd) -> QuadSurd {
        let d = self.common_radicand(o);
        QuadSurd::build(&self.a - &o.a, &self.b - &o.b, d)
    }
}

impl<'a> Mul<&'a QuadSurd> for &'a QuadSurd {
    type Output = QuadSurd;
    fn mul(self, o: &QuadSurd) -> QuadSurd {
        let d = self.common_radicand(o);
        let dq = BigRational::from_integer(d.clone());
        let a = &self.a * &o.a + &self.b * &o.b * dq;
        let b = &self.a * &o.b + &self.b * &o.a;
        QuadSurd::build(a, b, d)
    }
}

impl Neg for &QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        QuadSurd::build(-&self.a, -&self.b, self.d.clone())
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.a)
        } else if self.b.is_negative() {
            write!(f, "{}-{}*sqrt({})", self.a, -&self.b, self.d)
        } else {
            write!(f, "{}+{}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, rat_int};

    fn s(a: (i64, i64), b: (i64, i64), d: i64) -> QuadSurd {
        QuadSurd::new(rat(a.0, a.1), rat(b.0, b.1), BigInt::from(d)).unwrap()
    }

    #[test]
    fn rejects_square_radicand() {
        assert!(QuadSurd::new(rat_int(0), rat_int(1), BigInt::from(4)).is_err());
        assert!(QuadSurd::new(rat_int(0), rat_int(1), BigInt::from(-2)).is_err());
    }

    #[test]
    fn sign_of_mixed_parts() {
        // 1 - √2 < 0, 3 - 2√2 > 0, -3 + 2√2 < 0
        assert_eq!(s((1, 1), (-1, 1), 2).signum(), Ordering::Less);
        assert_eq!(s((3, 1), (-2, 1), 2).signum(), Ordering::Greater);
        assert_eq!(s((-3, 1), (2, 1), 2).signum(), Ordering::Less);
        assert_eq!(s((0, 1), (1, 5), 7).signum(), Ordering::Greater);
    }

    #[test]
    fn floor_of_surds() {
        assert_eq!(s((0, 1), (1, 1), 2).floor(), BigInt::from(1));
        assert_eq!(s((0, 1), (2, 1), 2).floor(), BigInt::from(2));
        assert_eq!(s((0, 1), (-1, 1), 2).floor(), BigInt::from(-2));
        assert_eq!(s((1, 2), (1, 3), 10).floor(), BigInt::from(1)); // 0.5 + 1.054
        assert_eq!(s((0, 1), (-1, 1), 2).ceil(), BigInt::from(-1));
    }

    #[test]
    fn reciprocal_in_field() {
        let x = s((1, 1), (1, 1), 2);
        let r = x.recip().unwrap();
        assert_eq!(&x * &r, QuadSurd::from_int(1));
        assert_eq!(r, s((-1, 1), (1, 1), 2));
    }

    #[test]
    fn compare_across_fields() {
        assert_eq!(s((0, 1), (1, 1), 2).compare_across(&s((0, 1), (1, 1), 3)), Ordering::Less);
        // √8 = 2√2
        assert_eq!(s((0, 1), (1, 1), 8).compare_across(&s((0, 1), (2, 1), 2)), Ordering::Equal);
        assert_eq!(s((1, 1), (1, 1), 8).compare_across(&s((0, 1), (2, 1), 2)), Ordering::Greater);
        assert_eq!(s((0, 1), (1, 1), 5).compare_across(&QuadSurd::from_int(2)), Ordering::Greater);
    }

    #[test]
    fn rational_bounds_bracket() {
        let x = s((1, 3), (2, 7), 11);
        let (lo, hi) = x.rational_bounds(40);
        assert!(QuadSurd::rational(lo) < x);
        assert!(QuadSurd::rational(hi) > x);
    }
}
