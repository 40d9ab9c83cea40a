//! Certified radius bounds for sublevel regions `0 ≤ P ≤ n` inside a sector.
//!
//! The closed sector is covered by at most two direction families, each
//! parametrised by `τ ∈ [0, 1]`-sized intervals: `(1, τ)` where `x` is the
//! ∞-norm and `(τ, 1)` where `y` is. Along a family `P = ρ²·G(τ)/2 + ρ·Λ(τ) + F`
//! with `G` quadratic and `Λ` linear in `τ`. On each interval exact bounds on
//! `G` (endpoints and vertex) and `Λ` (endpoints) give a radius past which `P`
//! leaves `[0, n]`; intervals that cannot be certified are bisected.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::numeric::{rat_floor, rat_int, rat_sqrt_ceil, BigInt, BigRational, QuadSurd, SectorSlope};
use crate::poly::IVQuadratic;
use crate::{Error, Result};

const MAX_DEPTH: u32 = 48;
const MAX_NODES: usize = 4096;

/// Outcome of a successful boundedness analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundednessCertificate {
    /// Every lattice point of the closed sector with `0 ≤ P ≤ n` satisfies
    /// `max(|x|, |y|) ≤ radius`.
    pub radius: BigInt,
    /// Smallest exact rational lower bound used for `P₂` on ∞-norm unit
    /// directions, when `P₂` is positive on the whole closed sector.
    pub mu: Option<BigRational>,
    /// Some direction interval was certified by linear growth along a ray
    /// where `P₂` vanishes.
    pub linear_tail: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Family {
    /// `(1, τ)`
    XMain,
    /// `(τ, 1)`
    YMain,
}

struct Piece<'a> {
    family: Family,
    p: &'a IVQuadratic,
    d_prime: BigRational,
    e_prime: BigRational,
}

impl Piece<'_> {
    /// `G(τ) = 2·P₂(direction)` as `(k2, k1, k0)`.
    fn g_coeffs(&self) -> (BigRational, BigRational, BigRational) {
        let (a, b, c) = (
            BigRational::from_integer(self.p.a.clone()),
            BigRational::from_integer(self.p.b.clone()),
            BigRational::from_integer(self.p.c.clone()),
        );
        let two_b = &b * rat_int(2);
        match self.family {
            Family::XMain => (c, two_b, a),
            Family::YMain => (a, two_b, c),
        }
    }

    fn g(&self, t: &QuadSurd) -> QuadSurd {
        let (k2, k1, k0) = self.g_coeffs();
        let lin = &t.scale(&k2) + &QuadSurd::rational(k1);
        &(&lin * t) + &QuadSurd::rational(k0)
    }

    fn lambda(&self, t: &QuadSurd) -> QuadSurd {
        match self.family {
            Family::XMain => &t.scale(&self.e_prime) + &QuadSurd::rational(self.d_prime.clone()),
            Family::YMain => &t.scale(&self.d_prime) + &QuadSurd::rational(self.e_prime.clone()),
        }
    }

    /// Exact (min, max) of `G` on `[lo, hi]`.
    fn g_range(&self, lo: &QuadSurd, hi: &QuadSurd) -> (QuadSurd, QuadSurd) {
        let mut vals = vec![self.g(lo), self.g(hi)];
        let (k2, k1, _) = self.g_coeffs();
        if !k2.is_zero() {
            let v = QuadSurd::rational(-k1 / (rat_int(2) * k2));
            if *lo < v && v < *hi {
                vals.push(self.g(&v));
            }
        }
        let min = vals.iter().min().unwrap().clone();
        let max = vals.iter().max().unwrap().clone();
        (min, max)
    }

    fn lambda_range(&self, lo: &QuadSurd, hi: &QuadSurd) -> (QuadSurd, QuadSurd) {
        let (a, b) = (self.lambda(lo), self.lambda(hi));
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    fn is_identically_flat(&self) -> bool {
        let (k2, k1, k0) = self.g_coeffs();
        k2.is_zero()
            && k1.is_zero()
            && k0.is_zero()
            && self.d_prime.is_zero()
            && self.e_prime.is_zero()
    }
}

/// A rational `q ≤ v` with the same sign as `v` (zero stays zero).
fn lower_bound(v: &QuadSurd) -> BigRational {
    if let Some(q) = v.as_rational() {
        return q.clone();
    }
    let positive = v.is_positive();
    let mut bits = 16;
    loop {
        let (lo, _) = v.rational_bounds(bits);
        if !positive || lo.is_positive() {
            return lo;
        }
        bits *= 2;
    }
}

/// A rational `q ≥ v` with the same sign as `v`.
fn upper_bound(v: &QuadSurd) -> BigRational {
    -lower_bound(&-v)
}

/// Smallest `ρ* ≥ 0` such that `q2·ρ² + q1·ρ + q0 > 0` for all `ρ > ρ*`,
/// given that the polynomial is eventually positive.
fn eventual_positivity(q2: &BigRational, q1: &BigRational, q0: &BigRational) -> BigRational {
    let zero = BigRational::zero();
    if q2.is_positive() {
        let disc = q1 * q1 - rat_int(4) * q2 * q0;
        if disc.is_negative() {
            return zero;
        }
        let root = (-q1 + rat_sqrt_ceil(&disc)) / (rat_int(2) * q2);
        root.max(zero)
    } else if q1.is_positive() {
        (-q0 / q1).max(zero)
    } else {
        debug_assert!(q0.is_positive());
        zero
    }
}

struct Search<'a> {
    piece: &'a Piece<'a>,
    level: BigRational,
    f: BigRational,
    nodes: usize,
    mu: Option<BigRational>,
    linear_tail: bool,
}

impl Search<'_> {
    /// Certified radius for directions in `[lo, hi]`, or `None`.
    fn certify(&mut self, lo: &QuadSurd, hi: &QuadSurd, depth: u32) -> Option<BigRational> {
        self.nodes += 1;
        if self.nodes > MAX_NODES {
            return None;
        }
        let (gmin, gmax) = self.piece.g_range(lo, hi);
        let (lmin, lmax) = self.piece.lambda_range(lo, hi);
        let half = BigRational::new(1.into(), 2.into());

        // P eventually exceeds the level: ρ²·g/2 + ρ·l + F > n
        if gmin.signum() != Ordering::Less {
            let g = lower_bound(&gmin);
            let l = lower_bound(&lmin);
            let c0 = &self.f - &self.level;
            if g.is_positive() || l.is_positive() || (l.is_zero() && c0.is_positive()) {
                if g.is_positive() {
                    let m = &g * &half;
                    self.mu = Some(match self.mu.take() {
                        Some(old) => old.min(m),
                        None => m,
                    });
                } else {
                    self.linear_tail = true;
                }
                return Some(eventual_positivity(&(&g * &half), &l, &c0));
            }
        }
        // P eventually drops below zero: ρ²·g/2 + ρ·l + F < 0
        if gmax.signum() != Ordering::Greater {
            let g = upper_bound(&gmax);
            let l = upper_bound(&lmax);
            if g.is_negative() || l.is_negative() || (l.is_zero() && self.f.is_negative()) {
                return Some(eventual_positivity(&(-&g * &half), &-l, &-&self.f));
            }
        }
        if depth >= MAX_DEPTH || self.piece.is_identically_flat() {
            return None;
        }
        let mid = midpoint(lo, hi, depth);
        let left = self.certify(lo, &mid, depth + 1)?;
        let right = self.certify(&mid, hi, depth + 1)?;
        Some(left.max(right))
    }
}

/// A rational strictly between `lo < hi`.
fn midpoint(lo: &QuadSurd, hi: &QuadSurd, depth: u32) -> QuadSurd {
    let m = (lo + hi).scale(&BigRational::new(1.into(), 2.into()));
    if m.is_rational() {
        return m;
    }
    let (q, _) = m.rational_bounds(depth + 80);
    QuadSurd::rational(q)
}

/// Certifies that `{(x, y) ∈ S(α) : 0 ≤ P ≤ n}` is bounded.
///
/// Returns [`Error::UnboundedRegion`] when some sector direction cannot be
/// certified: `P₂` changes sign inside the sector, or vanishes on a ray along
/// which `P` does not grow.
pub fn boundedness_certificate(
    p: &IVQuadratic,
    alpha: &SectorSlope,
    level: &BigInt,
) -> Result<BoundednessCertificate> {
    let der = p.derived();
    let zero = QuadSurd::from_int(0);
    let one = QuadSurd::from_int(1);
    let mut families: Vec<(Family, QuadSurd, QuadSurd)> = Vec::new();
    match alpha {
        SectorSlope::Infinity => {
            families.push((Family::XMain, zero.clone(), one.clone()));
            families.push((Family::YMain, zero, one));
        }
        _ => {
            let a = alpha.as_surd().unwrap();
            if a <= one {
                families.push((Family::XMain, zero, a));
            } else {
                let inv = a.recip().expect("slope is positive");
                families.push((Family::XMain, zero, one.clone()));
                families.push((Family::YMain, inv, one));
            }
        }
    }

    let mut radius = BigRational::zero();
    let mut mu: Option<BigRational> = None;
    let mut linear_tail = false;
    for (family, lo, hi) in families {
        let piece = Piece {
            family,
            p,
            d_prime: der.d_prime.clone(),
            e_prime: der.e_prime.clone(),
        };
        let mut search = Search {
            piece: &piece,
            level: BigRational::from_integer(level.clone()),
            f: BigRational::from_integer(p.f.clone()),
            nodes: 0,
            mu: None,
            linear_tail: false,
        };
        let r = search.certify(&lo, &hi, 0).ok_or_else(|| {
            Error::UnboundedRegion(format!(
                "no radius bound for P = {p} on S({alpha}) at level {level}"
            ))
        })?;
        radius = radius.max(r);
        linear_tail |= search.linear_tail;
        mu = match (mu, search.mu) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
    Ok(BoundednessCertificate {
        radius: rat_floor(&radius),
        mu: if linear_tail { None } else { mu },
        linear_tail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cert(s: [i64; 6], alpha: &str, n: i64) -> Result<BoundednessCertificate> {
        boundedness_certificate(
            &IVQuadratic::from_sextuple(s),
            &alpha.parse().unwrap(),
            &BigInt::from(n),
        )
    }

    #[test]
    fn cantor_is_bounded() {
        for n in [0, 1, 10, 1000, 100000] {
            let c = cert([1, 1, 1, 2, 1, 0], "inf", n).unwrap();
            // x + y ≤ √(2n) roughly
            assert!(c.radius >= BigInt::from(((2 * n) as f64).sqrt() as i64 - 1));
            assert!(c.radius <= BigInt::from(4 * ((n as f64).sqrt() as i64) + 4));
        }
    }

    #[test]
    fn x_squared_on_quadrant_is_unbounded() {
        assert!(matches!(
            cert([2, 0, 0, 1, 0, 0], "inf", 5),
            Err(Error::UnboundedRegion(_))
        ));
    }

    #[test]
    fn vanishing_line_outside_sector() {
        // P₂ = (2x − y)²/2 vanishes on y = 2x, outside S(4/3)
        let c = cert([4, -2, 1, 0, 0, 0], "4/3", 50).unwrap();
        assert!(c.mu.is_some());
    }

    #[test]
    fn vanishing_boundary_with_growth() {
        // P₂ = x²/2·3 vanishes on the y axis; P grows like y there
        let c = cert([3, 0, 0, 1, 1, 0], "inf", 20).unwrap();
        assert!(c.linear_tail);
        assert!(c.radius >= BigInt::from(20));
        // decreasing along the y axis: unbounded
        assert!(cert([3, 0, 0, 1, -1, 0], "inf", 20).is_err());
    }

    #[test]
    fn hyperbolic_inside_sector_unbounded() {
        // x² − y²: asymptote y = x lies inside S(∞)
        assert!(cert([2, 0, -2, 1, -1, 0], "inf", 10).is_err());
        // but on S(1/2) the form is positive
        assert!(cert([2, 0, -2, 1, -1, 0], "1/2", 10).is_ok());
    }

    #[test]
    fn irrational_boundary_zero() {
        // P₂ = (2x² − y²)/2 vanishes on y = √2·x
        let c = boundedness_certificate(
            &IVQuadratic::from_sextuple([2, 0, -1, 5, 3, 0]),
            &"sqrt(2)".parse().unwrap(),
            &BigInt::from(30),
        )
        .unwrap();
        assert!(c.linear_tail);
    }

    #[test]
    fn negative_definite_bounded_by_zero_level() {
        let c = cert([-2, 0, -2, -1, -1, 25], "inf", 1000).unwrap();
        assert!(c.radius >= BigInt::from(5));
    }
}
