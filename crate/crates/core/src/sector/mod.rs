//! Sectors `S(α)`, affine cones, and exact enumeration of lattice points in
//! sublevel regions `R_n = {(x, y) ∈ S(α) : 0 ≤ P(x, y) ≤ n}`.

mod area;
mod certificate;
mod columns;
pub(crate) mod cone;

pub use area::region_area;
pub use certificate::{boundedness_certificate, BoundednessCertificate};
pub use cone::{anchor_scan, AffineCone, RatPoint};

use std::cmp::Ordering;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::numeric::{slope_compare, BigInt, LatticePoint, SectorSlope};
use crate::poly::IVQuadratic;
use crate::{Error, Result};

/// `S(α) = {(x, y) : 0 ≤ y ≤ αx}`; the first quadrant for `α = ∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Sector {
    pub alpha: SectorSlope,
}

impl Sector {
    pub fn new(alpha: SectorSlope) -> Self {
        Self { alpha }
    }

    pub fn first_quadrant() -> Self {
        Self::new(SectorSlope::Infinity)
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        match self.alpha {
            SectorSlope::Infinity => p.x >= 0 && p.y >= 0,
            _ => p.y >= 0 && slope_compare(p, &self.alpha) != Ordering::Greater,
        }
    }

    /// Largest `y` in column `x` (`None` when unbounded).
    pub fn column_top(&self, x: i64) -> Option<i64> {
        self.alpha
            .floor_times(x)
            .map(|t| t.to_i64().unwrap_or(i64::MAX))
    }

    /// Lattice points with `0 ≤ x ≤ x_max` in the sector (requires a finite slope
    /// for the column bound; the first quadrant is cut at `y ≤ x_max`).
    pub fn enumerate_truncated(&self, x_max: i64) -> Vec<LatticePoint> {
        let mut out = Vec::new();
        for x in 0..=x_max {
            let top = self.column_top(x).unwrap_or(x_max);
            out.extend((0..=top).map(|y| LatticePoint::new(x, y)));
        }
        out
    }
}

impl std::fmt::Display for Sector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "S({})", self.alpha)
    }
}

/// `R_n = {(x, y) ∈ S(α) : 0 ≤ P(x, y) ≤ n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub poly: IVQuadratic,
    pub sector: Sector,
    pub level: BigInt,
}

impl Region {
    pub fn new(poly: IVQuadratic, sector: Sector, level: impl Into<BigInt>) -> Self {
        Self {
            poly,
            sector,
            level: level.into(),
        }
    }

    pub fn certificate(&self) -> Result<BoundednessCertificate> {
        boundedness_certificate(&self.poly, &self.sector.alpha, &self.level)
    }

    /// Lattice points of the region, ordered by `(x, y)`.
    pub fn points(&self) -> Result<Vec<LatticePoint>> {
        Ok(self.valued_points()?.into_iter().map(|(p, _)| p).collect())
    }

    /// Lattice points of the region with their values, ordered by `(x, y)`.
    pub fn valued_points(&self) -> Result<Vec<(LatticePoint, BigInt)>> {
        let cert = self.certificate()?;
        let radius = cert
            .radius
            .to_i64()
            .ok_or_else(|| Error::Overflow(format!("radius {}", cert.radius)))?;
        let zero = BigInt::from(0);
        scan_band(&self.poly, &self.sector, radius, &zero, &self.level)
    }
}

/// Lattice points of `S(α) ∩ [0, radius]²` with `lower ≤ P ≤ upper`, by exact
/// per-column solving.
pub(crate) fn scan_band(
    p: &IVQuadratic,
    sector: &Sector,
    radius: i64,
    lower: &BigInt,
    upper: &BigInt,
) -> Result<Vec<(LatticePoint, BigInt)>> {
    let mut out = Vec::new();
    let two = BigInt::from(2);
    let (lo2, hi2) = (lower * &two, upper * &two);
    for x in 0..=radius {
        let top = sector.column_top(x).map_or(radius, |t| t.min(radius));
        if top < 0 {
            continue;
        }
        let xb = BigInt::from(x);
        // 2P(x, y) = C y² + (2Bx + 2E − C) y + (A x(x−1) + 2Dx + 2F)
        let a2 = p.c.clone();
        let b2 = &p.b * &xb * &two + &p.e * &two - &p.c;
        let c2 = &p.a * &xb * (&xb - 1) + &p.d * &xb * &two + &p.f * &two;
        for (y0, y1) in columns::solve_band(&a2, &b2, &c2, &lo2, &hi2, 0, top) {
            for y in y0..=y1 {
                let pt = LatticePoint::new(x, y);
                out.push((pt, p.eval(pt)));
            }
        }
    }
    Ok(out)
}

/// First sector point (in `(x, y)` order) of `[0, radius]²` with `P < 0`.
pub(crate) fn first_negative_point(
    p: &IVQuadratic,
    sector: &Sector,
    radius: i64,
) -> Option<(LatticePoint, BigInt)> {
    let two = BigInt::from(2);
    for x in 0..=radius {
        let top = sector.column_top(x).map_or(radius, |t| t.min(radius));
        let xb = BigInt::from(x);
        let a2 = p.c.clone();
        let b2 = &p.b * &xb * &two + &p.e * &two - &p.c;
        let c2 = &p.a * &xb * (&xb - 1) + &p.d * &xb * &two + &p.f * &two;
        // 2P ≤ −2
        let neg = columns::solve_at_most(&a2, &b2, &(c2 + 2), 0, top);
        if let Some(&(y, _)) = neg.first() {
            let pt = LatticePoint::new(x, y);
            return Some((pt, p.eval(pt)));
        }
    }
    None
}

/// `sector_contains` for a lattice point.
pub fn sector_contains(sector: &Sector, p: LatticePoint) -> bool {
    sector.contains(p)
}

/// All lattice points of `R_n`, certified complete.
pub fn region_points(region: &Region) -> Result<Vec<LatticePoint>> {
    region.points()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sector(s: &str) -> Sector {
        Sector::new(s.parse().unwrap())
    }

    fn pts(v: &[(i64, i64)]) -> Vec<LatticePoint> {
        v.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn membership() {
        let s = sector("1/2");
        assert!(s.contains(LatticePoint::new(2, 1)));
        assert!(!s.contains(LatticePoint::new(1, 1)));
        let s = sector("sqrt(2)");
        assert!(s.contains(LatticePoint::new(1, 1)));
        assert!(!s.contains(LatticePoint::new(1, 2)));
        for a in ["inf", "1/3", "sqrt(5)"] {
            assert!(sector(a).contains(LatticePoint::ORIGIN));
            assert!(!sector(a).contains(LatticePoint::new(-1, 0)));
            assert!(!sector(a).contains(LatticePoint::new(1, -1)));
        }
        assert!(sector("inf").contains(LatticePoint::new(0, 7)));
    }

    #[test]
    fn truncated_enumeration() {
        let six = pts(&[(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]);
        assert_eq!(sector("1/1").enumerate_truncated(2), six);
        assert_eq!(sector("sqrt(2)").enumerate_truncated(2), six);
        assert_eq!(sector("7/3").enumerate_truncated(0), pts(&[(0, 0)]));
    }

    #[test]
    fn cantor_small_regions() {
        let f = IVQuadratic::cantor_f();
        let r = Region::new(f.clone(), Sector::first_quadrant(), 2);
        assert_eq!(r.points().unwrap(), pts(&[(0, 0), (0, 1), (1, 0)]));
        let r = Region::new(f, Sector::first_quadrant(), 0);
        assert_eq!(r.points().unwrap(), pts(&[(0, 0)]));
    }

    #[test]
    fn disk_region_count() {
        // x² + y² ≤ 25 in the closed first quadrant, against the 6×6 box
        let p = IVQuadratic::from_sextuple([2, 0, 2, 1, 1, 0]);
        let brute: Vec<LatticePoint> = (0..6i64)
            .flat_map(|x| (0..6i64).map(move |y| LatticePoint::new(x, y)))
            .filter(|q| q.x * q.x + q.y * q.y <= 25)
            .collect();
        let r = Region::new(p, Sector::first_quadrant(), 25);
        assert_eq!(r.points().unwrap(), brute);
        assert_eq!(brute.len(), 26);
    }

    #[test]
    fn negative_point_search() {
        let p = IVQuadratic::from_sextuple([2, 0, 2, 1, 1, -3]);
        let (pt, v) = first_negative_point(&p, &Sector::first_quadrant(), 10).unwrap();
        assert_eq!(pt, LatticePoint::new(0, 0));
        assert_eq!(v, BigInt::from(-3));
        assert!(first_negative_point(&IVQuadratic::cantor_f(), &Sector::first_quadrant(), 50).is_none());
    }
}
