//! Integer-valued quadratics in the binomial basis
//! `P(x,y) = A·x(x−1)/2 + B·xy + C·y(y−1)/2 + D·x + E·y + F`
//! and the algebra around their line restrictions and symmetry points.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::numeric::{half, is_integer, rat_int, BigInt, BigRational, LatticePoint};
use crate::{Error, Result};

/// An integer-valued quadratic, stored as its six integral coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IVQuadratic {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
    pub e: BigInt,
    pub f: BigInt,
}

/// `D′ = D − A/2`, `E′ = E − C/2` and `Δ = B² − AC`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedCoefficients {
    pub d_prime: BigRational,
    pub e_prime: BigRational,
    pub delta: BigInt,
}

/// `P` restricted to the lattice line `r·y − s·x = i`.
///
/// For `r ≠ 0` the line is parametrised by `x` and `y = (s·x + i)/r`; for
/// `r = 0` (so `s = ±1`) it is the vertical line `x = −i/s`, parametrised by
/// `y`, and `transposed` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineRestriction {
    pub r: i64,
    pub s: i64,
    pub i: BigInt,
    pub transposed: bool,
    pub q2: BigRational,
    pub q1: BigRational,
    pub q0: BigRational,
}

impl LineRestriction {
    /// `q2·t² + q1·t + q0`.
    pub fn eval(&self, t: &BigRational) -> BigRational {
        (&self.q2 * t + &self.q1) * t + &self.q0
    }

    /// The point of the line with parameter `t`.
    pub fn point_at(&self, t: &BigRational) -> (BigRational, BigRational) {
        let i = BigRational::from_integer(self.i.clone());
        if self.transposed {
            (-i / rat_int(self.s), t.clone())
        } else {
            (t.clone(), (rat_int(self.s) * t + i) / rat_int(self.r))
        }
    }
}

/// Data attached to a lattice direction `(r, s)`: the denominator
/// `A r² + 2B r s + C s²`, the slope of the symmetry line and the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryData {
    pub r: i64,
    pub s: i64,
    pub denom: BigInt,
    pub center: Option<(BigRational, BigRational)>,
    /// `−(Ar + Bs)/(Br + Cs)`, `None` when the line is vertical.
    pub slope: Option<BigRational>,
    /// Direction vector `(−(Br + Cs), Ar + Bs)` of the symmetry line.
    pub direction: (BigInt, BigInt),
}

/// `P` written around its center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenteredForm {
    pub x0: BigRational,
    pub y0: BigRational,
    /// `P(x0, y0)`, the constant of the re-expanded form.
    pub constant: BigRational,
    /// `(D′/2)·x0 + (E′/2)·y0 + F`.
    pub shortcut_constant: BigRational,
    /// Whether the two constants agree.
    pub constants_match: bool,
    /// Whether the re-expanded centered form equals `P` coefficient by coefficient.
    pub identity_holds: bool,
}

fn r(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

impl IVQuadratic {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
        e: impl Into<BigInt>,
        f: impl Into<BigInt>,
    ) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
            e: e.into(),
            f: f.into(),
        }
    }

    pub fn from_sextuple(s: [i64; 6]) -> Self {
        Self::new(s[0], s[1], s[2], s[3], s[4], s[5])
    }

    /// `½(x+y)(x+y+1) + x`.
    pub fn cantor_f() -> Self {
        Self::from_sextuple([1, 1, 1, 2, 1, 0])
    }

    /// `½(x+y)(x+y+1) + y`.
    pub fn cantor_g() -> Self {
        Self::from_sextuple([1, 1, 1, 1, 2, 0])
    }

    pub fn coefficients(&self) -> [&BigInt; 6] {
        [&self.a, &self.b, &self.c, &self.d, &self.e, &self.f]
    }

    pub fn to_i64s(&self) -> Option<[i64; 6]> {
        let mut out = [0i64; 6];
        for (o, c) in out.iter_mut().zip(self.coefficients()) {
            *o = c.to_i64()?;
        }
        Some(out)
    }

    pub fn eval(&self, p: LatticePoint) -> BigInt {
        let x = BigInt::from(p.x);
        let y = BigInt::from(p.y);
        // x(x−1) and y(y−1) are even, so the halving is exact
        let xx: BigInt = (&x * (&x - 1u8)) >> 1u8;
        let yy: BigInt = (&y * (&y - 1u8)) >> 1u8;
        &self.a * xx + &self.b * &x * &y + &self.c * yy + &self.d * x + &self.e * y + &self.f
    }

    /// Evaluation at a rational point with the same formula.
    pub fn eval_rational(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let one = rat_int(1);
        let h = half();
        r(&self.a) * x * (x - &one) * &h
            + r(&self.b) * x * y
            + r(&self.c) * y * (y - &one) * &h
            + r(&self.d) * x
            + r(&self.e) * y
            + r(&self.f)
    }

    /// Converts `a x² + b xy + c y² + d x + e y + f` into the integral basis.
    pub fn from_closed_form(coeffs: [&BigRational; 6]) -> Result<Self> {
        let [a, b, c, d, e, f] = coeffs;
        let two = rat_int(2);
        let cands = [
            ("A = 2a", &two * a),
            ("B = b", b.clone()),
            ("C = 2c", &two * c),
            ("D = d + a", d + a),
            ("E = e + c", e + c),
            ("F = f", f.clone()),
        ];
        for (name, v) in &cands {
            if !is_integer(v) {
                return Err(Error::NotIntegerValued(format!("{name} = {v} is not an integer")));
            }
        }
        let [a, b, c, d, e, f] = cands.map(|(_, v)| v.to_integer());
        Ok(Self { a, b, c, d, e, f })
    }

    /// Coefficients `[a, b, c, d, e, f]` of `a x² + b xy + c y² + d x + e y + f`.
    pub fn closed_form(&self) -> [BigRational; 6] {
        let h = half();
        [
            r(&self.a) * &h,
            r(&self.b),
            r(&self.c) * &h,
            r(&self.d) - r(&self.a) * &h,
            r(&self.e) - r(&self.c) * &h,
            r(&self.f),
        ]
    }

    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - &self.a * &self.c
    }

    pub fn derived(&self) -> DerivedCoefficients {
        let h = half();
        DerivedCoefficients {
            d_prime: r(&self.d) - r(&self.a) * &h,
            e_prime: r(&self.e) - r(&self.c) * &h,
            delta: self.discriminant(),
        }
    }

    /// `P₂(u, v) = (A/2)u² + Buv + (C/2)v²`.
    pub fn homogeneous_value(&self, u: &BigInt, v: &BigInt) -> Result<BigRational> {
        if u.is_zero() && v.is_zero() {
            return Err(Error::ZeroDirection);
        }
        let twice = &self.a * u * u + (&self.b * u * v << 1u8) + &self.c * v * v;
        Ok(BigRational::new(twice, 2.into()))
    }

    /// The center `((CD′ − BE′)/Δ, (AE′ − BD′)/Δ)` of the level curves.
    pub fn center(&self) -> Result<(BigRational, BigRational)> {
        let DerivedCoefficients {
            d_prime,
            e_prime,
            delta,
        } = self.derived();
        if delta.is_zero() {
            return Err(Error::ZeroDiscriminant);
        }
        let delta = r(&delta);
        let x0 = (r(&self.c) * &d_prime - r(&self.b) * &e_prime) / &delta;
        let y0 = (r(&self.a) * &e_prime - r(&self.b) * &d_prime) / &delta;
        Ok((x0, y0))
    }

    pub fn centered_form(&self) -> Result<CenteredForm> {
        let (x0, y0) = self.center()?;
        let der = self.derived();
        let h = half();
        let constant = self.eval_rational(&x0, &y0);
        let shortcut_constant = &der.d_prime * &h * &x0 + &der.e_prime * &h * &y0 + r(&self.f);

        // expand (A/2)(x−x0)² + B(x−x0)(y−y0) + (C/2)(y−y0)² + constant
        let (a, b, c) = (r(&self.a), r(&self.b), r(&self.c));
        let expanded = [
            &a * &h,
            b.clone(),
            &c * &h,
            -(&a * &x0) - &b * &y0,
            -(&b * &x0) - &c * &y0,
            &a * &h * &x0 * &x0 + &b * &x0 * &y0 + &c * &h * &y0 * &y0 + &constant,
        ];
        let identity_holds = expanded == self.closed_form();
        Ok(CenteredForm {
            constants_match: constant == shortcut_constant,
            x0,
            y0,
            constant,
            shortcut_constant,
            identity_holds,
        })
    }

    /// `A r² + 2B r s + C s²`.
    pub fn direction_denominator(&self, r_: i64, s: i64) -> BigInt {
        let (r_, s) = (BigInt::from(r_), BigInt::from(s));
        &self.a * &r_ * &r_ + ((&self.b * &r_ * &s) << 1u8) + &self.c * &s * &s
    }

    fn check_primitive(r_: i64, s: i64) -> Result<()> {
        if r_ == 0 && s == 0 {
            return Err(Error::ZeroDirection);
        }
        if r_.gcd(&s) != 1 {
            return Err(Error::NotCoprime { r: r_, s });
        }
        Ok(())
    }

    /// `D′r + E′s`.
    fn linear_along(&self, r_: i64, s: i64) -> BigRational {
        let der = self.derived();
        der.d_prime * rat_int(r_) + der.e_prime * rat_int(s)
    }

    /// Restriction of `P` to `r·y − s·x = i`.
    pub fn restrict(&self, r_: i64, s: i64, i: impl Into<BigInt>) -> Result<LineRestriction> {
        Self::check_primitive(r_, s)?;
        let i: BigInt = i.into();
        let iq = r(&i);
        let den = r(&self.direction_denominator(r_, s));
        let (rq, sq) = (rat_int(r_), rat_int(s));
        let (b, c) = (r(&self.b), r(&self.c));
        let lin = self.linear_along(r_, s);
        if r_ != 0 {
            let r2 = &rq * &rq;
            let q2 = &den / (rat_int(2) * &r2);
            let q1 = ((&b * &rq + &c * &sq) * &iq + &rq * &lin) / &r2;
            let q0 = self.eval_rational(&rat_int(0), &(&iq / &rq));
            Ok(LineRestriction {
                r: r_,
                s,
                i,
                transposed: false,
                q2,
                q1,
                q0,
            })
        } else {
            // s = ±1: the vertical line x = −i/s
            let xf = -&iq / &sq;
            let der = self.derived();
            let q2 = &c * half();
            let q1 = &b * &xf + &der.e_prime;
            let q0 = self.eval_rational(&xf, &rat_int(0));
            Ok(LineRestriction {
                r: r_,
                s,
                i,
                transposed: true,
                q2,
                q1,
                q0,
            })
        }
    }

    /// The symmetry point `(x_i, y_i)` of the restriction to `r·y − s·x = i`.
    pub fn symmetry_point(
        &self,
        r_: i64,
        s: i64,
        i: impl Into<BigInt>,
    ) -> Result<(BigRational, BigRational)> {
        let den = self.direction_denominator(r_, s);
        if den.is_zero() {
            return Err(Error::DegenerateDirection { r: r_, s });
        }
        let den = r(&den);
        let iq = BigRational::from_integer(i.into());
        let (rq, sq) = (rat_int(r_), rat_int(s));
        let (a, b, c) = (r(&self.a), r(&self.b), r(&self.c));
        let lin = self.linear_along(r_, s);
        let xi = -((&b * &rq + &c * &sq) * &iq + &rq * &lin) / &den;
        let yi = ((&a * &rq + &b * &sq) * &iq - &sq * &lin) / &den;
        Ok((xi, yi))
    }

    pub fn symmetry_data(&self, r_: i64, s: i64) -> Result<SymmetryData> {
        let denom = self.direction_denominator(r_, s);
        if denom.is_zero() {
            return Err(Error::DegenerateDirection { r: r_, s });
        }
        let (rb, sb) = (BigInt::from(r_), BigInt::from(s));
        let num = &self.a * &rb + &self.b * &sb;
        let den = &self.b * &rb + &self.c * &sb;
        let slope = (!den.is_zero()).then(|| BigRational::new(-&num, den.clone()));
        let center = if self.discriminant().is_zero() {
            None
        } else {
            Some(self.center()?)
        };
        Ok(SymmetryData {
            r: r_,
            s,
            denom,
            center,
            slope,
            direction: (-den, num),
        })
    }

    /// The index `i` whose symmetry point is the center, for `Δ ≠ 0`.
    pub fn center_index(&self, r_: i64, s: i64) -> Result<BigRational> {
        let der = self.derived();
        if der.delta.is_zero() {
            return Err(Error::ZeroDiscriminant);
        }
        let (a, b, c) = (r(&self.a), r(&self.b), r(&self.c));
        let t1 = &a * &der.e_prime - &b * &der.d_prime;
        let t2 = &c * &der.d_prime - &b * &der.e_prime;
        Ok((t1 * rat_int(r_) - t2 * rat_int(s)) / r(&der.delta))
    }

    /// Symmetry point for a rational index (used for the center check).
    pub fn symmetry_point_rational(
        &self,
        r_: i64,
        s: i64,
        i: &BigRational,
    ) -> Result<(BigRational, BigRational)> {
        let den = self.direction_denominator(r_, s);
        if den.is_zero() {
            return Err(Error::DegenerateDirection { r: r_, s });
        }
        let den = r(&den);
        let (rq, sq) = (rat_int(r_), rat_int(s));
        let (a, b, c) = (r(&self.a), r(&self.b), r(&self.c));
        let lin = self.linear_along(r_, s);
        let xi = -((&b * &rq + &c * &sq) * i + &rq * &lin) / &den;
        let yi = ((&a * &rq + &b * &sq) * i - &sq * &lin) / &den;
        Ok((xi, yi))
    }

    /// `A > 0` together with `B² = AC`.
    pub fn is_parabolic(&self) -> bool {
        self.discriminant().is_zero() && self.a.is_positive()
    }
}

impl fmt::Display for IVQuadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {} {}",
            self.a, self.b, self.c, self.d, self.e, self.f
        )
    }
}

impl FromStr for IVQuadratic {
    type Err = Error;

    /// Six whitespace- or comma-separated integers `A B C D E F`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        if parts.len() != 6 {
            return Err(Error::Parse(format!(
                "expected six integers \"A B C D E F\", got {s:?}"
            )));
        }
        let mut v = Vec::with_capacity(6);
        for p in parts {
            v.push(
                p.parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("not an integer: {p:?}")))?,
            );
        }
        let mut it = v.into_iter();
        let mut next = || it.next().unwrap();
        Ok(Self {
            a: next(),
            b: next(),
            c: next(),
            d: next(),
            e: next(),
            f: next(),
        })
    }
}

impl Serialize for IVQuadratic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(6))?;
        for c in self.coefficients() {
            seq.serialize_element(&crate::report::JsonInt(c.clone()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IVQuadratic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<crate::report::JsonInt> = Vec::deserialize(d)?;
        if v.len() != 6 {
            return Err(serde::de::Error::custom("expected six coefficients"));
        }
        let mut it = v.into_iter().map(|j| j.0);
        let mut next = || it.next().unwrap();
        Ok(Self {
            a: next(),
            b: next(),
            c: next(),
            d: next(),
            e: next(),
            f: next(),
        })
    }
}
