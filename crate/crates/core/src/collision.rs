//! Constructive non-injectivity: for `Δ ≠ 0`, every affine cone contains two
//! distinct lattice points on which `P` agrees.
//!
//! Around the center `(x₀, y₀)` the symmetry points of the parallel families
//! `r·y − s·x = i` all lie on one rational line `L`. Anchored at a lattice
//! point `(m, n)` of `C ∩ C₀` (with `C₀` the cone moved to the center), the
//! direction `(r, s)` is chosen so that `L` passes through the anchor; every
//! lattice point `m′` on `L` then satisfies `P(m′ + (r,s)) = P(m′ − (r,s))`,
//! and we walk `L` until both reflected points are inside the cone.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::numeric::{rat_ceil, rat_floor, BigInt, BigRational, LatticePoint};
use crate::poly::IVQuadratic;
use crate::sector::{cone, AffineCone, RatPoint};
use crate::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Steps examined along one symmetry line before moving to the next anchor.
const WALK_CAP: i64 = 4096;

/// Two distinct cone points with equal value, and the line certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollisionWitness {
    pub p: LatticePoint,
    pub q: LatticePoint,
    #[serde(with = "crate::report::big")]
    pub value: BigInt,
    pub r: i64,
    pub s: i64,
    #[serde(with = "crate::report::big")]
    pub i: BigInt,
    pub anchor: LatticePoint,
}

impl CollisionWitness {
    /// Checks every invariant by direct evaluation; `Err` names the first
    /// violated one.
    pub fn check(&self, poly: &IVQuadratic, cone: &AffineCone) -> std::result::Result<(), String> {
        let m = self.anchor;
        if self.p == self.q {
            return Err("points coincide".into());
        }
        if self.p != LatticePoint::new(m.x + self.r, m.y + self.s)
            || self.q != LatticePoint::new(m.x - self.r, m.y - self.s)
        {
            return Err("points are not the reflections of the anchor".into());
        }
        if BigInt::from(self.r) * m.y - BigInt::from(self.s) * m.x != self.i {
            return Err("index does not match the anchor".into());
        }
        if !cone.contains_lattice(self.p) || !cone.contains_lattice(self.q) {
            return Err("point outside the cone".into());
        }
        let (vp, vq) = (poly.eval(self.p), poly.eval(self.q));
        if vp != vq || vp != self.value {
            return Err(format!("values differ: {vp} vs {vq} (claimed {})", self.value));
        }
        let sym = poly
            .symmetry_point(self.r, self.s, self.i.clone())
            .map_err(|e| e.to_string())?;
        if sym != m.to_rational() {
            return Err("anchor is not the symmetry point of its line".into());
        }
        Ok(())
    }
}

/// `(r, s)` for the anchor: `s/r = −(A·dx + B·dy)/(B·dx + C·dy)` in lowest
/// terms with `r > 0`, or `(0, 1)` when vertical. `None` when degenerate.
fn anchor_direction(poly: &IVQuadratic, center: &RatPoint, m: LatticePoint) -> Option<(i64, i64)> {
    let (mx, my) = m.to_rational();
    let dx = mx - &center.0;
    let dy = my - &center.1;
    if dx.is_zero() && dy.is_zero() {
        return None;
    }
    let q = |v: &BigInt| BigRational::from_integer(v.clone());
    let num = q(&poly.a) * &dx + q(&poly.b) * &dy;
    let den = q(&poly.b) * &dx + q(&poly.c) * &dy;
    let (r, s) = if den.is_zero() {
        if num.is_zero() {
            return None;
        }
        (0, 1)
    } else {
        let t = -num / den;
        (t.denom().to_i64()?, t.numer().to_i64()?)
    };
    (!poly.direction_denominator(r, s).is_zero()).then_some((r, s))
}

/// Integers `k` with `a + k·b ≥ 0`, as `(lower, upper)` bounds (`None` means
/// unbounded); `Err` when empty.
fn half_line(a: &BigRational, b: &BigRational) -> std::result::Result<(Option<BigInt>, Option<BigInt>), ()> {
    if b.is_zero() {
        return if a.is_negative() { Err(()) } else { Ok((None, None)) };
    }
    let root = -a / b;
    if b.is_positive() {
        Ok((Some(rat_ceil(&root)), None))
    } else {
        Ok((None, Some(rat_floor(&root))))
    }
}

/// First step of the alternating walk `0, 1, −1, 2, −2, …` that lies in
/// `[lo, hi]`, as `(k, position in the walk)`.
fn first_in_walk(lo: Option<BigInt>, hi: Option<BigInt>) -> Option<(i64, i64)> {
    let cap = BigInt::from(WALK_CAP);
    let lo = lo.unwrap_or_else(|| -&cap).max(-&cap);
    let hi = hi.unwrap_or_else(|| cap.clone()).min(cap);
    if lo > hi {
        return None;
    }
    let (lo, hi) = (lo.to_i64()?, hi.to_i64()?);
    let k = if lo <= 0 && 0 <= hi {
        0
    } else if lo > 0 {
        lo
    } else {
        hi
    };
    let pos = if k > 0 { 2 * k - 1 } else { -2 * k };
    Some((k, pos))
}

/// Walks the symmetry line through `m` with direction `(r, s)` and returns the
/// first admissible step, charging visited points to `spent`.
fn walk(
    poly: &IVQuadratic,
    cone: &AffineCone,
    m: LatticePoint,
    (r, s): (i64, i64),
    spent: &mut u64,
) -> Option<LatticePoint> {
    let rb = BigInt::from(r);
    let sb = BigInt::from(s);
    let ux = -(&poly.b * &rb + &poly.c * &sb);
    let uy = &poly.a * &rb + &poly.b * &sb;
    let g = ux.gcd(&uy);
    let (ux, uy) = ((ux / &g).to_i64()?, (uy / &g).to_i64()?);

    // cone coordinates of m ± (r, s) + k·(ux, uy) are affine in k
    let apex = cone.apex().clone();
    let step = cone.coordinates(&(
        &apex.0 + BigRational::from_integer(ux.into()),
        &apex.1 + BigRational::from_integer(uy.into()),
    ));
    let mut lo: Option<BigInt> = None;
    let mut hi: Option<BigInt> = None;
    for sign in [1i64, -1] {
        let base = LatticePoint::new(m.x + sign * r, m.y + sign * s);
        let (u0, v0) = cone.coordinates(&base.to_rational());
        for (a, b) in [(&u0, &step.0), (&v0, &step.1)] {
            let Ok((l, h)) = half_line(a, b) else {
                *spent += 2 * WALK_CAP as u64 + 1;
                return None;
            };
            if let Some(l) = l {
                lo = Some(lo.map_or(l.clone(), |x| x.max(l)));
            }
            if let Some(h) = h {
                hi = Some(hi.map_or(h.clone(), |x| x.min(h)));
            }
        }
    }
    match first_in_walk(lo, hi) {
        Some((k, pos)) => {
            *spent += pos as u64 + 1;
            Some(LatticePoint::new(m.x + k * ux, m.y + k * uy))
        }
        None => {
            *spent += 2 * WALK_CAP as u64 + 1;
            None
        }
    }
}

/// Finds two distinct lattice points of `cone` with equal `P`-value.
///
/// `budget` bounds the number of lattice points examined, counting both the
/// anchor scan and the walks along symmetry lines.
pub fn find_collision(poly: &IVQuadratic, cone: &AffineCone, budget: u64) -> Result<CollisionWitness> {
    if poly.discriminant().is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    let center = poly.center()?;
    let cone0 = cone.with_apex(center.clone());
    let mut spent: u64 = 0;
    let mut anchors = 0u64;
    let mut degenerate = 0u64;
    let mut k = 0i64;
    while spent < budget {
        let ring = cone::ring(&center, k, |p| {
            spent += 1;
            let pr = p.to_rational();
            cone0.contains(&pr) && cone.contains(&pr)
        });
        for (_, m) in ring {
            if spent >= budget {
                break;
            }
            anchors += 1;
            let Some(dir) = anchor_direction(poly, &center, m) else {
                degenerate += 1;
                continue;
            };
            let Some(mp) = walk(poly, cone, m, dir, &mut spent) else {
                continue;
            };
            let (r, s) = dir;
            let p = LatticePoint::new(mp.x + r, mp.y + s);
            let q = LatticePoint::new(mp.x - r, mp.y - s);
            let w = CollisionWitness {
                value: poly.eval(p),
                i: BigInt::from(r) * mp.y - BigInt::from(s) * mp.x,
                p,
                q,
                r,
                s,
                anchor: mp,
            };
            if w.check(poly, cone).is_ok() {
                return Ok(w);
            }
        }
        k += 1;
    }
    if anchors > 0 && anchors == degenerate {
        return Err(Error::DegenerateAnchor);
    }
    Err(Error::BudgetExhausted {
        budget,
        diagnostic: format!(
            "scanned to distance {k} from center ({}, {}); {anchors} anchors, {degenerate} degenerate",
            center.0, center.1
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quadrant_at(x: i64, y: i64) -> AffineCone {
        AffineCone::from_ints((x, y), (1, 0), (0, 1)).unwrap()
    }

    /// Smallest collided value over a box, by brute force.
    fn min_collision(p: &IVQuadratic, cone: &AffineCone, lo: i64, hi: i64) -> Option<BigInt> {
        let mut seen = std::collections::BTreeMap::new();
        let mut best: Option<BigInt> = None;
        for x in lo..=hi {
            for y in lo..=hi {
                let pt = LatticePoint::new(x, y);
                if !cone.contains_lattice(pt) {
                    continue;
                }
                let v = p.eval(pt);
                if seen.insert(v.clone(), pt).is_some() && best.as_ref().is_none_or(|b| &v < b) {
                    best = Some(v);
                }
            }
        }
        best
    }

    #[test]
    fn disk_on_quadrant() {
        let p = IVQuadratic::from_sextuple([2, 0, 2, 1, 1, 0]);
        let c = AffineCone::first_quadrant();
        let w = find_collision(&p, &c, DEFAULT_BUDGET).unwrap();
        w.check(&p, &c).unwrap();
        // x² + y² already collides at 1 = P(1,0) = P(0,1)
        let min = min_collision(&p, &c, 0, 50).unwrap();
        assert_eq!(min, BigInt::from(1));
        assert!(w.value >= min);
    }

    #[test]
    fn hyperbola_on_quadrant() {
        let p = IVQuadratic::from_sextuple([2, 0, -2, 1, -1, 0]);
        assert_eq!(p.eval(LatticePoint::new(5, 3)), p.eval(LatticePoint::new(4, 0)));
        let c = AffineCone::first_quadrant();
        let w = find_collision(&p, &c, DEFAULT_BUDGET).unwrap();
        w.check(&p, &c).unwrap();
    }

    #[test]
    fn shifted_cone() {
        let p = IVQuadratic::from_sextuple([2, 0, 2, 1, 1, 0]);
        let c = quadrant_at(10, 10);
        let w = find_collision(&p, &c, DEFAULT_BUDGET).unwrap();
        w.check(&p, &c).unwrap();
        assert!(w.p.x >= 10 && w.p.y >= 10 && w.q.x >= 10 && w.q.y >= 10);
        let min = min_collision(&p, &c, 10, 60).unwrap();
        assert!(w.value >= min);
    }

    #[test]
    fn zero_discriminant_rejected() {
        assert_eq!(
            find_collision(&IVQuadratic::cantor_f(), &AffineCone::first_quadrant(), 100),
            Err(Error::ZeroDiscriminant)
        );
    }

    #[test]
    fn tiny_budget_exhausts() {
        let p = IVQuadratic::from_sextuple([2, 0, 2, 1, 1, 0]);
        let c = quadrant_at(1000, -1000);
        assert!(matches!(find_collision(&p, &c, 10), Err(Error::BudgetExhausted { .. })));
    }

    #[test]
    fn thin_and_far_cones() {
        let p = IVQuadratic::from_sextuple([3, 1, -2, 4, 0, 7]);
        for (apex, g1, g2) in [
            ((0, 0), (5, 1), (4, 1)),
            ((-7, 13), (1, 0), (-1, 1)),
            ((25, -30), (0, 1), (1, 3)),
        ] {
            let c = AffineCone::from_ints(apex, g1, g2).unwrap();
            let w = find_collision(&p, &c, DEFAULT_BUDGET).unwrap();
            w.check(&p, &c).unwrap();
        }
    }

    #[test]
    fn walk_order() {
        assert_eq!(first_in_walk(None, None), Some((0, 0)));
        assert_eq!(first_in_walk(Some(3.into()), None), Some((3, 5)));
        assert_eq!(first_in_walk(None, Some((-2).into())), Some((-2, 4)));
        assert_eq!(first_in_walk(Some(5.into()), Some(4.into())), None);
    }
}
