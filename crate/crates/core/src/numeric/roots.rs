use num_traits::{Signed, Zero};

use super::{rat_exact_sqrt, BigRational, QuadSurd};
use crate::{Error, Result};

/// Real roots of `a t² + b t + c`, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadraticRoots {
    None,
    One(QuadSurd),
    Two(QuadSurd, QuadSurd),
}

impl QuadraticRoots {
    pub fn to_vec(&self) -> Vec<QuadSurd> {
        match self {
            Self::None => vec![],
            Self::One(r) => vec![r.clone()],
            Self::Two(r, s) => vec![r.clone(), s.clone()],
        }
    }
}

/// Solves `a t² + b t + c = 0` exactly.
///
/// Irrational roots come back as `−b/2a ± √(disc)/2a` in the field
/// `ℚ(√(num·den))` of the discriminant `num/den`.
pub fn rat_quadratic_roots(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
) -> Result<QuadraticRoots> {
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err(Error::DegenerateEquation);
    }
    if a.is_zero() {
        if b.is_zero() {
            return Ok(QuadraticRoots::None);
        }
        return Ok(QuadraticRoots::One(QuadSurd::rational(-c / b)));
    }
    let two_a = a * BigRational::from_integer(2.into());
    let disc = b * b - a * c * BigRational::from_integer(4.into());
    if disc.is_negative() {
        return Ok(QuadraticRoots::None);
    }
    let center = -b / &two_a;
    if disc.is_zero() {
        return Ok(QuadraticRoots::One(QuadSurd::rational(center)));
    }
    let (lo, hi) = match rat_exact_sqrt(&disc) {
        Some(s) => {
            let off = s / &two_a;
            (
                QuadSurd::rational(&center - &off),
                QuadSurd::rational(&center + &off),
            )
        }
        None => {
            // √(n/d) = √(n·d)/d
            let radicand = disc.numer() * disc.denom();
            let coeff = BigRational::new(1.into(), disc.denom().clone()) / &two_a;
            let p = QuadSurd::new(center.clone(), coeff.clone(), radicand.clone())?;
            let m = QuadSurd::new(center, -coeff, radicand)?;
            (p, m)
        }
    };
    Ok(if lo <= hi {
        QuadraticRoots::Two(lo, hi)
    } else {
        QuadraticRoots::Two(hi, lo)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, rat_int};

    #[test]
    fn factorable() {
        let r = rat_quadratic_roots(&rat_int(1), &rat_int(-3), &rat_int(2)).unwrap();
        assert_eq!(
            r,
            QuadraticRoots::Two(QuadSurd::from_int(1), QuadSurd::from_int(2))
        );
    }

    #[test]
    fn irrational_pair() {
        let r = rat_quadratic_roots(&rat_int(1), &rat_int(0), &rat_int(-2)).unwrap();
        let v = r.to_vec();
        assert_eq!(v.len(), 2);
        assert!(v.iter().all(|x| !x.is_rational()));
        assert!((v[0].to_f64() + 2f64.sqrt()).abs() < 1e-12);
        assert!((v[1].to_f64() - 2f64.sqrt()).abs() < 1e-12);
        // each root satisfies t² = 2 exactly
        for x in &v {
            assert_eq!(x * x, QuadSurd::from_int(2));
        }
    }

    #[test]
    fn negative_leading_coefficient_sorted() {
        let r = rat_quadratic_roots(&rat_int(-1), &rat_int(0), &rat(1, 3)).unwrap();
        let v = r.to_vec();
        assert!(v[0] < v[1]);
    }

    #[test]
    fn linear_and_degenerate() {
        let r = rat_quadratic_roots(&rat_int(0), &rat_int(2), &rat_int(-3)).unwrap();
        assert_eq!(r, QuadraticRoots::One(QuadSurd::rational(rat(3, 2))));
        assert_eq!(
            rat_quadratic_roots(&rat_int(0), &rat_int(0), &rat_int(0)),
            Err(Error::DegenerateEquation)
        );
        assert_eq!(
            rat_quadratic_roots(&rat_int(0), &rat_int(0), &rat_int(5)).unwrap(),
            QuadraticRoots::None
        );
        assert_eq!(
            rat_quadratic_roots(&rat_int(1), &rat_int(0), &rat_int(1)).unwrap(),
            QuadraticRoots::None
        );
    }
}
