//! Density of sublevel regions: the exact value of `∫₀^α dt/(A + 2Bt + Ct²)`
//! for parabolic forms, the slope forced by density one, and empirical
//! lattice counts against areas.

use std::fmt;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::numeric::{big_to_f64, BigInt, BigRational, QuadSurd, SectorSlope};
use crate::poly::IVQuadratic;
use crate::quadrature;
use crate::sector::{region_area, Region, Sector};
use crate::{Error, Result};

/// Relative tolerance for region areas.
const AREA_RTOL: f64 = 1e-10;

/// `∫₀^α dt/(A + 2Bt + Ct²)` for `B² = AC`, exactly.
///
/// With `C = B²/A` the form is `(A + Bt)²/A`, so the integral is `α/A` for
/// `B = 0` and `1/B − 1/(αC + B)` otherwise (`1/B` at `α = ∞`).
pub fn closed_form_density(a: &BigInt, b: &BigInt, c: &BigInt, alpha: &SectorSlope) -> Result<QuadSurd> {
    if b * b != a * c {
        return Err(Error::NonzeroDiscriminant);
    }
    if !a.is_positive() {
        return Err(Error::InvalidArgument(format!("A = {a} must be positive")));
    }
    let q = |n: &BigInt| BigRational::from_integer(n.clone());
    if b.is_zero() {
        return match alpha {
            SectorSlope::Infinity => Err(Error::DivergentIntegral),
            SectorSlope::Rational(r) => Ok(QuadSurd::rational(r / q(a))),
            SectorSlope::QuadIrr(s) => Ok(s.scale(&(q(a).recip()))),
        };
    }
    // the form vanishes at t = −A/B
    if b.is_negative() {
        let root = QuadSurd::rational(-q(a) / q(b));
        let inside = match alpha {
            SectorSlope::Infinity => true,
            SectorSlope::Rational(r) => root <= QuadSurd::rational(r.clone()),
            SectorSlope::QuadIrr(s) => &root <= s,
        };
        if inside {
            return Err(Error::DivergentIntegral);
        }
    }
    let inv_b = QuadSurd::rational(q(b).recip());
    let alpha = match alpha {
        SectorSlope::Infinity => return Ok(inv_b),
        SectorSlope::Rational(r) => QuadSurd::rational(r.clone()),
        SectorSlope::QuadIrr(s) => s.clone(),
    };
    let tail = (&alpha.scale(&q(c)) + &QuadSurd::rational(q(b)))
        .recip()
        .ok_or(Error::DivergentIntegral)?;
    Ok(&inv_b - &tail)
}

/// `∫₀^{arctan α} dθ / (2 p₂(θ))` by adaptive quadrature, with
/// `2p₂ = A cos²θ + 2B cosθ sinθ + C sin²θ`; the polar form of the integral
/// in [`closed_form_density`].
pub fn quadrature_density(a: &BigInt, b: &BigInt, c: &BigInt, alpha: &SectorSlope, tol: f64) -> f64 {
    let (a, b, c) = (big_to_f64(a), big_to_f64(b), big_to_f64(c));
    let theta_max = match alpha {
        SectorSlope::Infinity => std::f64::consts::FRAC_PI_2,
        s => s.to_f64().atan(),
    };
    let f = |t: f64| {
        let (s, co) = t.sin_cos();
        1.0 / (a * co * co + 2.0 * b * co * s + c * s * s)
    };
    quadrature::integrate(f, 0.0, theta_max, tol, 10_000).value
}

/// The sector slope that density one forces on the leading coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaConstraint {
    Slope(SectorSlope),
    Invalid,
}

/// `α = A/(1 − B)`; the first quadrant when `B = 1` and `A = C`.
pub fn alpha_from_coefficients(p: &IVQuadratic) -> AlphaConstraint {
    let one_minus_b = BigInt::from(1) - &p.b;
    if one_minus_b.is_zero() {
        return if p.a == p.c {
            AlphaConstraint::Slope(SectorSlope::Infinity)
        } else {
            AlphaConstraint::Invalid
        };
    }
    match SectorSlope::rational(BigRational::new(p.a.clone(), one_minus_b)) {
        Ok(s) => AlphaConstraint::Slope(s),
        Err(_) => AlphaConstraint::Invalid,
    }
}

impl fmt::Display for AlphaConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaConstraint::Slope(s) => write!(f, "{s}"),
            AlphaConstraint::Invalid => f.write_str("invalid"),
        }
    }
}

/// Value of the density integral: exact, or divergent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DensityValue {
    Exact(QuadSurd),
    Divergent,
}

impl DensityValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            DensityValue::Exact(v) => v.to_f64(),
            DensityValue::Divergent => f64::INFINITY,
        }
    }
}

impl fmt::Display for DensityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DensityValue::Exact(v) => write!(f, "{v}"),
            DensityValue::Divergent => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for DensityValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "inf" {
            Ok(DensityValue::Divergent)
        } else {
            s.parse().map(DensityValue::Exact)
        }
    }
}

impl Serialize for DensityValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DensityValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityRow {
    pub n: u64,
    pub count: u64,
    pub ratio: f64,
    pub area: f64,
    /// `|area − count| / √n`.
    pub gap: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    /// Present only for parabolic leading forms.
    pub closed_form: Option<DensityValue>,
    pub rows: Vec<DensityRow>,
}

/// Lattice counts and areas of `R_n` for each level, in input order.
pub fn empirical_density(p: &IVQuadratic, sector: &Sector, levels: &[u64]) -> Result<DensityReport> {
    if levels.contains(&0) {
        return Err(Error::InvalidArgument("levels must be positive".into()));
    }
    let closed_form = if p.discriminant().is_zero() {
        match closed_form_density(&p.a, &p.b, &p.c, &sector.alpha) {
            Ok(v) => Some(DensityValue::Exact(v)),
            Err(Error::DivergentIntegral) => Some(DensityValue::Divergent),
            Err(_) => None,
        }
    } else {
        None
    };
    let rows = levels
        .par_iter()
        .map(|&n| {
            let region = Region::new(p.clone(), sector.clone(), n);
            let count = region.points()?.len() as u64;
            let area = region_area(&region, AREA_RTOL * (n.max(1) as f64))?;
            let nf = n as f64;
            Ok(DensityRow {
                n,
                count,
                ratio: count as f64 / nf,
                area,
                gap: (area - count as f64).abs() / nf.sqrt(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DensityReport { closed_form, rows })
}
