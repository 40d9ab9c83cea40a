use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{BigInt, BigRational, QuadSurd};
use crate::{Error, Result};

/// An integer lattice point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn to_rational(self) -> (BigRational, BigRational) {
        (
            BigRational::from_integer(self.x.into()),
            BigRational::from_integer(self.y.into()),
        )
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The slope `α` of a sector `S(α) = {0 ≤ y ≤ αx}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SectorSlope {
    Rational(BigRational),
    /// `a + b√d` with `b ≠ 0`; always irrational.
    QuadIrr(QuadSurd),
    /// The first quadrant.
    Infinity,
}

impl SectorSlope {
    pub fn rational(q: BigRational) -> Result<Self> {
        if !q.is_positive() {
            return Err(Error::InvalidSlope(format!("slope {q} must be positive")));
        }
        Ok(Self::Rational(q))
    }

    pub fn from_ratio(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidSlope("zero denominator".into()));
        }
        Self::rational(BigRational::new(p.into(), q.into()))
    }

    pub fn quad_irr(a: BigRational, b: BigRational, d: BigInt) -> Result<Self> {
        if b.is_zero() {
            return Err(Error::InvalidSlope("surd coefficient must be nonzero".into()));
        }
        let s = QuadSurd::new(a, b, d)?;
        if !s.is_positive() {
            return Err(Error::InvalidSlope(format!("slope {s} must be positive")));
        }
        Ok(Self::QuadIrr(s))
    }

    /// The slope as a field element; `None` for the first quadrant.
    pub fn as_surd(&self) -> Option<QuadSurd> {
        match self {
            Self::Rational(q) => Some(QuadSurd::rational(q.clone())),
            Self::QuadIrr(s) => Some(s.clone()),
            Self::Infinity => None,
        }
    }

    pub fn is_irrational(&self) -> bool {
        matches!(self, Self::QuadIrr(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Self::Infinity => f64::INFINITY,
            _ => self.as_surd().unwrap().to_f64(),
        }
    }

    /// `⌊α·x⌋` for `x ≥ 0`, `None` for the first quadrant.
    pub fn floor_times(&self, x: i64) -> Option<BigInt> {
        let xq = BigRational::from_integer(x.into());
        self.as_surd().map(|s| s.scale(&xq).floor())
    }
}

/// Compares `y` with `α·x` exactly.
///
/// For the first quadrant `α·x` is read as `+∞` for `x > 0`, `0` for `x = 0`
/// and `−∞` for `x < 0`.
pub fn slope_compare(p: LatticePoint, alpha: &SectorSlope) -> Ordering {
    match alpha {
        SectorSlope::Infinity => match p.x.cmp(&0) {
            Ordering::Greater => Ordering::Less,
            Ordering::Equal => p.y.cmp(&0),
            Ordering::Less => Ordering::Greater,
        },
        SectorSlope::Rational(q) => {
            // y·den vs num·x
            let lhs = BigInt::from(p.y) * q.denom();
            let rhs = q.numer() * BigInt::from(p.x);
            lhs.cmp(&rhs)
        }
        SectorSlope::QuadIrr(s) => {
            let xq = BigRational::from_integer(p.x.into());
            let diff = &QuadSurd::rational(BigRational::from_integer(p.y.into())) - &s.scale(&xq);
            diff.signum()
        }
    }
}

impl FromStr for SectorSlope {
    type Err = Error;

    /// Grammar: `inf` | `p/q` | `p` | `a+b*sqrt(d)` (also `sqrt(d)`, `b*sqrt(d)`,
    /// `a-b*sqrt(d)`).
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let lower = t.to_ascii_lowercase();
        if lower == "inf" || lower == "infinity" || lower == "∞" {
            return Ok(Self::Infinity);
        }
        if let Some(pos) = lower.find("sqrt(") {
            return parse_quad_irr(&lower, pos);
        }
        let q = parse_rational(&t)?;
        Self::rational(q)
    }
}

fn parse_quad_irr(t: &str, pos: usize) -> Result<SectorSlope> {
    let (a, b, d) = parse_surd_parts(t, pos)?;
    SectorSlope::quad_irr(a, b, d)
}

fn parse_surd_parts(t: &str, pos: usize) -> Result<(BigRational, BigRational, BigInt)> {
    let bad = || Error::Parse(format!("malformed quadratic irrational slope {t:?}"));
    let rest = &t[pos + 5..];
    let close = rest.find(')').ok_or_else(bad)?;
    if close + 1 != rest.len() {
        return Err(bad());
    }
    let d: BigInt = rest[..close].parse().map_err(|_| bad())?;
    let head = &t[..pos];
    // head is "", "b*", "a+", "a-", "a+b*", "a-b*", "-", "-b*"
    let head = head.strip_suffix('*').map(|h| (h, true)).unwrap_or((head, false));
    let (a, b) = split_surd_head(head.0, head.1).ok_or_else(bad)?;
    Ok((a, b, d))
}

impl FromStr for QuadSurd {
    type Err = Error;

    /// `a+b*sqrt(d)` (and the shorter forms accepted for slopes) or a rational.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let lower = t.to_ascii_lowercase();
        match lower.find("sqrt(") {
            Some(pos) => {
                let (a, b, d) = parse_surd_parts(&lower, pos)?;
                QuadSurd::new(a, b, d)
            }
            None => parse_rational(&t).map(QuadSurd::rational),
        }
    }
}

fn split_surd_head(head: &str, has_coeff: bool) -> Option<(BigRational, BigRational)> {
    let one = BigRational::from_integer(1.into());
    let zero = BigRational::zero();
    if !has_coeff {
        return match head {
            "" | "+" => Some((zero, one)),
            "-" => Some((zero, -one)),
            h => {
                let (a, sign) = if let Some(a) = h.strip_suffix('+') {
                    (a, 1)
                } else {
                    (h.strip_suffix('-')?, -1)
                };
                Some((parse_rational(a).ok()?, one * BigRational::from_integer(sign.into())))
            }
        };
    }
    // the coefficient b is the last signed rational in head
    let split = head
        .char_indices()
        .skip(1)
        .filter(|&(i, c)| (c == '+' || c == '-') && !head[..i].ends_with(['e', 'E']))
        .map(|(i, _)| i)
        .last();
    match split {
        None => Some((zero, parse_rational(head).ok()?)),
        Some(i) => {
            let a = parse_rational(&head[..i]).ok()?;
            let b = parse_rational(head[i..].trim_start_matches('+')).ok()?;
            Some((a, b))
        }
    }
}

/// Parses `p/q` or an integer.
pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("malformed rational {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

impl fmt::Display for SectorSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Infinity => write!(f, "inf"),
            Self::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Self::QuadIrr(s) => write!(f, "{s}"),
        }
    }
}

impl Serialize for SectorSlope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SectorSlope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
