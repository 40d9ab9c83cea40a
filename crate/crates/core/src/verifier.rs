//! Necessary conditions for packing polynomials and exhaustive verification
//! of finite prefixes `0, 1, …, N`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::density::{alpha_from_coefficients, AlphaConstraint};
use crate::numeric::{rat_ceil, rat_quadratic_roots, BigInt, BigRational, LatticePoint, QuadSurd, SectorSlope};
use crate::poly::IVQuadratic;
use crate::sector::{boundedness_certificate, first_negative_point, scan_band, Sector};
use crate::{Error, Result};

/// Outcome of one necessary condition; `detail` explains a failure and names
/// its witness where there is one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(detail: impl Into<String>) -> Self {
        Self { passed: true, detail: detail.into() }
    }

    fn fail(detail: impl Into<String>) -> Self {
        Self { passed: false, detail: detail.into() }
    }

    fn from_bool(ok: bool, pass: impl Into<String>, fail: impl Into<String>) -> Self {
        if ok {
            Self::pass(pass)
        } else {
            Self::fail(fail)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionChecklist {
    pub integer_valued: Check,
    pub leading_positive: Check,
    /// `P₂ > 0` along every lattice ray of the sector.
    pub ray_positivity: Check,
    pub zero_discriminant: Check,
    /// The sector slope equals `A/(1 − B)`.
    pub density_slope: Check,
    pub c_integral: Check,
    pub bounded: Check,
}

impl ConditionChecklist {
    pub fn entries(&self) -> [(&'static str, &Check); 7] {
        [
            ("integer-valued", &self.integer_valued),
            ("A > 0", &self.leading_positive),
            ("ray positivity", &self.ray_positivity),
            ("zero discriminant", &self.zero_discriminant),
            ("alpha = A/(1-B)", &self.density_slope),
            ("C = B^2/A integral", &self.c_integral),
            ("bounded regions", &self.bounded),
        ]
    }

    pub fn all_passed(&self) -> bool {
        self.entries().iter().all(|(_, c)| c.passed)
    }
}

/// `A + 2Bt + Ct²`, twice `P₂(1, t)`.
fn leading_form(p: &IVQuadratic, t: &BigRational) -> BigRational {
    let q = |n: &BigInt| BigRational::from_integer(n.clone());
    q(&p.a) + q(&p.b) * t * BigRational::from_integer(2.into()) + q(&p.c) * t * t
}

/// The lattice direction of slope `t ≥ 0`.
fn ray_of(t: &BigRational) -> Option<LatticePoint> {
    Some(LatticePoint::new(t.denom().to_i64()?, t.numer().to_i64()?))
}

/// A rational strictly between `u < v`.
fn rational_between(u: &QuadSurd, v: &QuadSurd) -> BigRational {
    let mut bits = 8;
    loop {
        let hu = u.rational_bounds(bits).1;
        let lv = v.rational_bounds(bits).0;
        if hu < lv {
            return (hu + lv) / BigRational::from_integer(2.into());
        }
        bits *= 2;
    }
}

/// First lattice ray of the sector on which `P₂ ≤ 0`, if any.
pub fn ray_positivity_violation(p: &IVQuadratic, alpha: &SectorSlope) -> Option<LatticePoint> {
    let zero = BigRational::zero();
    if !p.a.is_positive() {
        return Some(LatticePoint::new(1, 0));
    }
    let top = match alpha {
        SectorSlope::Infinity => {
            if !p.c.is_positive() {
                return Some(LatticePoint::new(0, 1));
            }
            None
        }
        SectorSlope::Rational(r) => {
            if !leading_form(p, r).is_positive() {
                return ray_of(r);
            }
            Some(QuadSurd::rational(r.clone()))
        }
        SectorSlope::QuadIrr(s) => Some(s.clone()),
    };
    let q = |n: &BigInt| BigRational::from_integer(n.clone());
    let roots = rat_quadratic_roots(&q(&p.c), &(q(&p.b) * BigRational::from_integer(2.into())), &q(&p.a))
        .map(|r| r.to_vec())
        .unwrap_or_default();
    let origin = QuadSurd::rational(zero.clone());
    let inside: Vec<QuadSurd> = roots
        .into_iter()
        .filter(|r| {
            r.is_positive() && top.as_ref().is_none_or(|t| r.compare_across(t) == Ordering::Less)
        })
        .collect();
    // a rational zero of the form inside the sector is a ray where P₂ = 0
    if let Some(r) = inside.iter().find_map(|r| r.as_rational()) {
        return ray_of(r);
    }
    // the sign is constant between consecutive breakpoints
    let mut cuts = vec![origin];
    cuts.extend(inside);
    for w in cuts.windows(2) {
        let t = rational_between(&w[0], &w[1]);
        if !leading_form(p, &t).is_positive() {
            return ray_of(&t);
        }
    }
    let last = cuts.last().unwrap();
    let t = match &top {
        Some(top) => rational_between(last, top),
        None => BigRational::from_integer(rat_ceil(&last.rational_bounds(8).1) + 1),
    };
    (!leading_form(p, &t).is_positive()).then(|| ray_of(&t)).flatten()
}

/// Screens `P` against the necessary conditions for packing `S(α)`.
pub fn necessary_conditions(p: &IVQuadratic, sector: &Sector) -> ConditionChecklist {
    let alpha = &sector.alpha;
    let integer_valued = Check::pass("integer coefficients in the binomial basis");
    let leading_positive = Check::from_bool(p.a.is_positive(), "A > 0", format!("A = {} is not positive", p.a));
    let ray_positivity = match ray_positivity_violation(p, alpha) {
        None => Check::pass("P2 positive on every lattice ray"),
        Some(ray) => Check::fail(format!("P2 <= 0 on the ray through {ray}")),
    };
    let delta = p.discriminant();
    let zero_discriminant = Check::from_bool(
        delta.is_zero(),
        "B^2 - AC = 0",
        format!("B^2 - AC = {delta}: two equal values exist in every cone"),
    );
    let density_slope = match (alpha_from_coefficients(p), alpha) {
        (_, SectorSlope::QuadIrr(_)) => Check::fail("A/(1-B) rational, alpha irrational"),
        (AlphaConstraint::Invalid, _) => Check::fail(if p.b == BigInt::from(1) {
            format!("B = 1 forces alpha = inf with A = C, but A = {}, C = {}", p.a, p.c)
        } else {
            format!("A/(1-B) = {}/{} is not a positive slope", p.a, BigInt::from(1) - &p.b)
        }),
        (AlphaConstraint::Slope(s), a) => Check::from_bool(
            &s == a,
            format!("A/(1-B) = {s}"),
            format!("A/(1-B) = {s} but alpha = {a}"),
        ),
    };
    let c_integral = if p.a.is_zero() {
        Check::fail("A = 0")
    } else {
        let b2 = &p.b * &p.b;
        Check::from_bool(
            (&b2 % &p.a).is_zero(),
            format!("B^2/A = {}", &b2 / &p.a),
            format!("B^2/A = {b2}/{} is not an integer", p.a),
        )
    };
    let bounded = match boundedness_certificate(p, alpha, &BigInt::from(1)) {
        Ok(c) => Check::pass(format!("R_1 within radius {}", c.radius)),
        Err(e) => Check::fail(e.to_string()),
    };
    ConditionChecklist {
        integer_valued,
        leading_positive,
        ray_positivity,
        zero_discriminant,
        density_slope,
        c_integral,
        bounded,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    /// The smallest value attained twice, with the two smallest points.
    Collision {
        p: LatticePoint,
        q: LatticePoint,
        #[serde(with = "crate::report::big")]
        value: BigInt,
    },
    /// The smallest value in `0..=N` attained nowhere.
    Gap {
        #[serde(with = "crate::report::big")]
        value: BigInt,
    },
    /// A sector point with a negative value.
    OutOfRange {
        point: LatticePoint,
        #[serde(with = "crate::report::big")]
        value: BigInt,
    },
    /// Some `R_n` is unbounded.
    Unbounded { reason: String },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Collision { p, q, value } => write!(f, "collision: P{p} = P{q} = {value}"),
            Counterexample::Gap { value } => write!(f, "gap: no point has value {value}"),
            Counterexample::OutOfRange { point, value } => write!(f, "negative value: P{point} = {value}"),
            Counterexample::Unbounded { reason } => write!(f, "unbounded: {reason}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum VerificationReport {
    VerifiedUpTo { n: u64 },
    Failed { counterexample: Counterexample },
}

impl VerificationReport {
    pub fn is_verified(&self) -> bool {
        matches!(self, VerificationReport::VerifiedUpTo { .. })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerificationReport::VerifiedUpTo { n } => write!(f, "verified up to {n}"),
            VerificationReport::Failed { counterexample } => write!(f, "failed: {counterexample}"),
        }
    }
}

fn failed(c: Counterexample) -> VerificationReport {
    VerificationReport::Failed { counterexample: c }
}

/// Checks that `P` maps the sector's lattice points with values in `[0, N]`
/// bijectively onto `{0, …, N}`.
pub fn verify_prefix(p: &IVQuadratic, sector: &Sector, n: u64) -> Result<VerificationReport> {
    let level = BigInt::from(n);
    let cert = match boundedness_certificate(p, &sector.alpha, &level) {
        Ok(c) => c,
        Err(Error::UnboundedRegion(reason)) => return Ok(failed(Counterexample::Unbounded { reason })),
        Err(e) => return Err(e),
    };
    let radius = cert
        .radius
        .to_i64()
        .ok_or_else(|| Error::Overflow(format!("radius {}", cert.radius)))?;
    if let Some((point, value)) = first_negative_point(p, sector, radius) {
        return Ok(failed(Counterexample::OutOfRange { point, value }));
    }
    let mut pts = scan_band(p, sector, radius, &BigInt::zero(), &level)?;
    let mut vals: Vec<(u64, LatticePoint)> = pts
        .drain(..)
        .map(|(pt, v)| (v.to_u64().expect("value within [0, N]"), pt))
        .collect();
    vals.sort_unstable();
    let mut expected = 0u64;
    let mut i = 0;
    while i < vals.len() {
        let (v, pt) = vals[i];
        if v > expected {
            return Ok(failed(Counterexample::Gap { value: expected.into() }));
        }
        if let Some(&(w, other)) = vals.get(i + 1) {
            if w == v {
                return Ok(failed(Counterexample::Collision { p: pt, q: other, value: v.into() }));
            }
        }
        expected = v + 1;
        i += 1;
    }
    if expected <= n {
        return Ok(failed(Counterexample::Gap { value: expected.into() }));
    }
    Ok(VerificationReport::VerifiedUpTo { n })
}
