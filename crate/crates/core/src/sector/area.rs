//! Area of sublevel regions by quadrature in polar coordinates.
//!
//! Along the ray of angle θ, `P = p₂(θ)·r² + p₁(θ)·r + F` with
//! `p₂ = (A/2)cos²θ + B cosθ sinθ + (C/2)sin²θ` and `p₁ = D′cosθ + E′sinθ`.
//! The region meets the ray in the set of `r ≥ 0` with `0 ≤ P ≤ n`, and the
//! area is `½∫ Σ (r_hi² − r_lo²) dθ` over `θ ∈ [0, arctan α]`. Subtracting the
//! `P < 0` part per ray is the `A₀` correction of the level-0 curve.

use crate::numeric::{big_to_f64, rat_to_f64, SectorSlope};
use crate::quadrature;
use crate::sector::Region;
use crate::Result;

const MAX_INTERVALS: usize = 20_000;

/// `r ≥ 0` with `q2·r² + q1·r + q0 ≤ 0`, clipped to `[0, r_max]`.
fn nonpositive_set(q2: f64, q1: f64, q0: f64, r_max: f64) -> Vec<(f64, f64)> {
    let clip = |lo: f64, hi: f64| -> Option<(f64, f64)> {
        let lo = lo.max(0.0);
        let hi = hi.min(r_max);
        (lo <= hi).then_some((lo, hi))
    };
    if q2 == 0.0 {
        if q1 == 0.0 {
            return if q0 <= 0.0 { vec![(0.0, r_max)] } else { vec![] };
        }
        let root = -q0 / q1;
        return if q1 > 0.0 {
            clip(f64::NEG_INFINITY, root).into_iter().collect()
        } else {
            clip(root, f64::INFINITY).into_iter().collect()
        };
    }
    let disc = q1 * q1 - 4.0 * q2 * q0;
    if disc < 0.0 {
        return if q2 > 0.0 { vec![] } else { vec![(0.0, r_max)] };
    }
    // cancellation-free pair of roots; degrades to the linear root as q2 → 0
    let sq = disc.sqrt();
    let sign = if q1 >= 0.0 { 1.0 } else { -1.0 };
    let q = -0.5 * (q1 + sign * sq);
    let (mut r1, mut r2) = if q != 0.0 {
        (q / q2, q0 / q)
    } else {
        (0.0, 0.0)
    };
    if r1 > r2 {
        std::mem::swap(&mut r1, &mut r2);
    }
    if q2 > 0.0 {
        clip(r1, r2).into_iter().collect()
    } else {
        clip(f64::NEG_INFINITY, r1)
            .into_iter()
            .chain(clip(r2, f64::INFINITY))
            .collect()
    }
}

fn intersect(a: &[(f64, f64)], b: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for &(a0, a1) in a {
        for &(b0, b1) in b {
            let lo = a0.max(b0);
            let hi = a1.min(b1);
            if lo < hi {
                out.push((lo, hi));
            }
        }
    }
    out
}

/// Area of `R_n` with quadrature error estimate below `tol` (relative floor of
/// a few ulps of the result).
pub fn region_area(region: &Region, tol: f64) -> Result<f64> {
    let cert = region.certificate()?;
    let r_max = (big_to_f64(&cert.radius) + 1.0) * std::f64::consts::SQRT_2;
    let p = &region.poly;
    let der = p.derived();
    let (a, b, c) = (big_to_f64(&p.a), big_to_f64(&p.b), big_to_f64(&p.c));
    let (dp, ep) = (rat_to_f64(&der.d_prime), rat_to_f64(&der.e_prime));
    let f = big_to_f64(&p.f);
    let n = big_to_f64(&region.level);
    let theta_max = match &region.sector.alpha {
        SectorSlope::Infinity => std::f64::consts::FRAC_PI_2,
        alpha => alpha.to_f64().atan(),
    };

    let integrand = |theta: f64| {
        let (s, co) = theta.sin_cos();
        let p2 = 0.5 * a * co * co + b * co * s + 0.5 * c * s * s;
        let p1 = dp * co + ep * s;
        let below_n = nonpositive_set(p2, p1, f - n, r_max);
        let above_0 = nonpositive_set(-p2, -p1, -f, r_max);
        intersect(&below_n, &above_0)
            .iter()
            .map(|&(lo, hi)| 0.5 * (hi * hi - lo * lo))
            .sum::<f64>()
    };
    let res = quadrature::integrate(integrand, 0.0, theta_max, tol, MAX_INTERVALS);
    Ok(res.value)
}
