use num_traits::{Signed, Zero};

use serde::{Deserialize, Serialize};

use crate::numeric::slope::parse_rational;
use crate::numeric::{rat_ceil, rat_floor, BigRational, LatticePoint, SectorSlope};
use crate::{Error, Result};

pub type RatPoint = (BigRational, BigRational);

/// The closed affine cone `apex + {u·g1 + v·g2 : u, v ≥ 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineCone {
    apex: RatPoint,
    g1: RatPoint,
    g2: RatPoint,
}

impl AffineCone {
    pub fn new(apex: RatPoint, g1: RatPoint, g2: RatPoint) -> Result<Self> {
        if (g1.0.is_zero() && g1.1.is_zero()) || (g2.0.is_zero() && g2.1.is_zero()) {
            return Err(Error::DegenerateCone("zero generator".into()));
        }
        let det = &g1.0 * &g2.1 - &g1.1 * &g2.0;
        if det.is_zero() {
            return Err(Error::DegenerateCone("parallel generators".into()));
        }
        Ok(Self { apex, g1, g2 })
    }

    /// Cone with integer apex and generators.
    pub fn from_ints(apex: (i64, i64), g1: (i64, i64), g2: (i64, i64)) -> Result<Self> {
        let q = |p: (i64, i64)| {
            (
                BigRational::from_integer(p.0.into()),
                BigRational::from_integer(p.1.into()),
            )
        };
        Self::new(q(apex), q(g1), q(g2))
    }

    /// The first quadrant at the origin.
    pub fn first_quadrant() -> Self {
        Self::from_ints((0, 0), (1, 0), (0, 1)).unwrap()
    }

    /// The sector `S(α)` as a cone; `None` for irrational slopes.
    pub fn from_sector(alpha: &SectorSlope) -> Option<Self> {
        match alpha {
            SectorSlope::Infinity => Some(Self::first_quadrant()),
            SectorSlope::Rational(q) => {
                let zero = BigRational::zero();
                let one = BigRational::from_integer(1.into());
                Some(
                    Self::new(
                        (zero.clone(), zero),
                        (one, BigRational::zero()),
                        (
                            BigRational::from_integer(q.denom().clone()),
                            BigRational::from_integer(q.numer().clone()),
                        ),
                    )
                    .unwrap(),
                )
            }
            SectorSlope::QuadIrr(_) => None,
        }
    }

    pub fn apex(&self) -> &RatPoint {
        &self.apex
    }

    pub fn generators(&self) -> (&RatPoint, &RatPoint) {
        (&self.g1, &self.g2)
    }

    /// The same cone translated to a new apex.
    pub fn with_apex(&self, apex: RatPoint) -> Self {
        Self {
            apex,
            g1: self.g1.clone(),
            g2: self.g2.clone(),
        }
    }

    /// Coordinates `(u, v)` of `p − apex` in the generator basis.
    pub fn coordinates(&self, p: &RatPoint) -> (BigRational, BigRational) {
        let dx = &p.0 - &self.apex.0;
        let dy = &p.1 - &self.apex.1;
        let det = &self.g1.0 * &self.g2.1 - &self.g1.1 * &self.g2.0;
        let u = (&dx * &self.g2.1 - &dy * &self.g2.0) / &det;
        let v = (&self.g1.0 * &dy - &self.g1.1 * &dx) / &det;
        (u, v)
    }

    pub fn contains(&self, p: &RatPoint) -> bool {
        let (u, v) = self.coordinates(p);
        !u.is_negative() && !v.is_negative()
    }

    pub fn contains_lattice(&self, p: LatticePoint) -> bool {
        self.contains(&p.to_rational())
    }
}

#[derive(Serialize, Deserialize)]
struct ConeWire {
    apex: [String; 2],
    g1: [String; 2],
    g2: [String; 2],
}

fn wire_point(p: &RatPoint) -> [String; 2] {
    [p.0.to_string(), p.1.to_string()]
}

fn unwire_point(p: &[String; 2]) -> Result<RatPoint> {
    Ok((parse_rational(&p[0])?, parse_rational(&p[1])?))
}

impl Serialize for AffineCone {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ConeWire {
            apex: wire_point(&self.apex),
            g1: wire_point(&self.g1),
            g2: wire_point(&self.g2),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AffineCone {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = ConeWire::deserialize(d)?;
        let cone = (|| AffineCone::new(unwire_point(&w.apex)?, unwire_point(&w.g1)?, unwire_point(&w.g2)?))();
        cone.map_err(serde::de::Error::custom)
    }
}

/// Lattice points at ∞-distance `d` from `center` with `k − 1 < d ≤ k`,
/// sorted by `(d, x, y)`, restricted to `keep`.
pub(crate) fn ring(
    center: &RatPoint,
    k: i64,
    mut keep: impl FnMut(LatticePoint) -> bool,
) -> Vec<(BigRational, LatticePoint)> {
    let (ax, ay) = center;
    let span = |c: &BigRational, k: i64| -> (i64, i64) {
        let kq = BigRational::from_integer(k.into());
        let lo = rat_ceil(&(c - &kq)).try_into().unwrap_or(i64::MIN / 4);
        let hi = rat_floor(&(c + &kq)).try_into().unwrap_or(i64::MAX / 4);
        (lo, hi)
    };
    let (x0, x1) = span(ax, k);
    let (y0, y1) = span(ay, k);
    // the closed box of radius k − 1 is excluded
    let inner = (k > 0).then(|| (span(ax, k - 1), span(ay, k - 1)));
    let mut out = Vec::new();
    for x in x0..=x1 {
        let dx = (BigRational::from_integer(x.into()) - ax).abs();
        let mut visit = |y: i64, out: &mut Vec<(BigRational, LatticePoint)>| {
            let p = LatticePoint::new(x, y);
            if keep(p) {
                let dy = (BigRational::from_integer(y.into()) - ay).abs();
                out.push((dx.clone().max(dy), p));
            }
        };
        match inner {
            Some(((ix0, ix1), (iy0, iy1))) if ix0 <= x && x <= ix1 => {
                for y in (y0..iy0).chain((iy1 + 1).max(y0)..=y1) {
                    visit(y, &mut out);
                }
            }
            _ => {
                for y in y0..=y1 {
                    visit(y, &mut out);
                }
            }
        }
    }
    out.sort();
    out
}

/// Lattice points of `C ∩ C0` in nondecreasing ∞-norm distance from the apex
/// of `C0` (ties in `(x, y)` order), up to distance `max_radius`.
pub fn anchor_scan<'a>(
    cone0: &'a AffineCone,
    cone: &'a AffineCone,
    max_radius: i64,
) -> impl Iterator<Item = LatticePoint> + 'a {
    (0..=max_radius).flat_map(move |k| {
        ring(cone0.apex(), k, |p| {
            let pr = p.to_rational();
            cone0.contains(&pr) && cone.contains(&pr)
        })
        .into_iter()
        .map(|(_, p)| p)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn rp(x: (i64, i64), y: (i64, i64)) -> RatPoint {
        (rat(x.0, x.1), rat(y.0, y.1))
    }

    #[test]
    fn membership() {
        let q = AffineCone::first_quadrant();
        assert!(q.contains(&rp((3, 1), (4, 1))));
        assert!(!q.contains(&rp((-1, 1), (2, 1))));

        let c = AffineCone::from_ints((1, 1), (1, 0), (1, 1)).unwrap();
        assert!(c.contains(&rp((1, 1), (1, 1))));

        let c = AffineCone::from_ints((0, 0), (2, 1), (1, 2)).unwrap();
        assert!(c.contains(&rp((1, 1), (1, 1))));
        assert_eq!(c.coordinates(&rp((1, 1), (1, 1))), (rat(1, 3), rat(1, 3)));
        assert!(!c.contains(&rp((1, 1), (0, 1))));
    }

    #[test]
    fn degenerate_rejected() {
        assert!(AffineCone::from_ints((0, 0), (1, 2), (2, 4)).is_err());
        assert!(AffineCone::from_ints((0, 0), (0, 0), (2, 4)).is_err());
    }

    #[test]
    fn anchor_scan_first_points() {
        let q = AffineCone::first_quadrant();
        assert_eq!(anchor_scan(&q, &q, 5).next(), Some(LatticePoint::new(0, 0)));

        let c0 = q.with_apex(rp((1, 2), (1, 2)));
        assert_eq!(anchor_scan(&c0, &q, 5).next(), Some(LatticePoint::new(1, 1)));
    }

    #[test]
    fn rings_partition_the_plane() {
        // brute-force oracle: every point of a box appears in exactly one ring
        let center = rp((1, 3), (-5, 2));
        let mut seen = std::collections::BTreeSet::new();
        for k in 0..=6 {
            for (d, p) in ring(&center, k, |_| true) {
                assert!(d <= rat(k, 1) && (k == 0 || d > rat(k - 1, 1)));
                assert!(seen.insert(p), "{p} repeated");
            }
        }
        for x in -4i64..=4 {
            for y in -7i64..=2 {
                let dx = (rat(x, 1) - &center.0).abs();
                let dy = (rat(y, 1) - &center.1).abs();
                if dx.max(dy) <= rat(6, 1) {
                    assert!(seen.contains(&LatticePoint::new(x, y)));
                }
            }
        }
    }

    #[test]
    fn scan_distances_nondecreasing() {
        let c = AffineCone::from_ints((0, 0), (2, 1), (-1, 3)).unwrap();
        let c0 = c.with_apex(rp((7, 2), (-3, 4)));
        let pts: Vec<_> = anchor_scan(&c0, &c, 12).collect();
        assert!(!pts.is_empty());
        let dist = |p: &LatticePoint| {
            let dx = (rat(p.x, 1) - &c0.apex().0).abs();
            let dy = (rat(p.y, 1) - &c0.apex().1).abs();
            dx.max(dy)
        };
        for w in pts.windows(2) {
            assert!(dist(&w[0]) <= dist(&w[1]));
        }
        assert!(pts.iter().all(|p| c.contains_lattice(*p) && c0.contains_lattice(*p)));
    }
}
