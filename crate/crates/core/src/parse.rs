//! Text grammars for polynomials, points and cones.
//!
//! A polynomial is either the sextuple `"A B C D E F"` of the integral basis
//! or a closed form such as `"1/2*x^2 + x*y + 1/2*y^2 + 3/2*x + 1/2*y"`.

use num_traits::{One, Zero};

use crate::numeric::slope::parse_rational;
use crate::numeric::BigRational;
use crate::poly::IVQuadratic;
use crate::sector::{AffineCone, RatPoint};
use crate::{Error, Result};

/// Parses a sextuple or a closed-form quadratic in `x` and `y`.
pub fn parse_polynomial(s: &str) -> Result<IVQuadratic> {
    if s.chars().any(|c| c.is_ascii_alphabetic()) {
        parse_closed_form(s)
    } else {
        s.parse()
    }
}

/// Closed form to the integral basis; fails when the polynomial is not
/// integer-valued on the lattice.
pub fn parse_closed_form(s: &str) -> Result<IVQuadratic> {
    let coeffs = closed_form_coefficients(s)?;
    let [a, b, c, d, e, f] = &coeffs;
    IVQuadratic::from_closed_form([a, b, c, d, e, f])
}

/// Monomial index in `[x², xy, y², x, y, 1]`.
fn monomial(px: u32, py: u32) -> Option<usize> {
    match (px, py) {
        (2, 0) => Some(0),
        (1, 1) => Some(1),
        (0, 2) => Some(2),
        (1, 0) => Some(3),
        (0, 1) => Some(4),
        (0, 0) => Some(5),
        _ => None,
    }
}

/// Coefficients `[a, b, c, d, e, f]` of `a x² + b xy + c y² + d x + e y + f`.
pub fn closed_form_coefficients(s: &str) -> Result<[BigRational; 6]> {
    let text: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().replace("**", "^");
    if text.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut out: [BigRational; 6] = std::array::from_fn(|_| BigRational::zero());
    // split into signed terms; a sign directly after '^', '*' or '/' belongs to a factor
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = text.as_bytes();
    for (i, &ch) in bytes.iter().enumerate() {
        if (ch == b'+' || ch == b'-') && i > 0 && !matches!(bytes[i - 1], b'^' | b'*' | b'/') {
            terms.push(&text[start..i]);
            start = i;
        }
    }
    terms.push(&text[start..]);
    for term in terms {
        let (neg, body) = match term.as_bytes().first() {
            Some(b'-') => (true, &term[1..]),
            Some(b'+') => (false, &term[1..]),
            _ => (false, term),
        };
        if body.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        let mut coef = BigRational::one();
        let (mut px, mut py) = (0u32, 0u32);
        for chunk in body.split('*') {
            // trailing "/k" divisors, as in "x^2/2" or "3/2"
            let mut parts = chunk.split('/');
            let factor = parts.next().unwrap_or_default();
            for div in parts {
                let q = parse_rational(div)?;
                if q.is_zero() {
                    return Err(Error::Parse(format!("division by zero in {term:?}")));
                }
                coef /= q;
            }
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (
                    b,
                    e.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor, 1),
            };
            match base {
                "x" => px += exp,
                "y" => py += exp,
                "" => return Err(Error::Parse(format!("empty factor in {term:?}"))),
                num => {
                    let q = parse_rational(num)?;
                    for _ in 0..exp {
                        coef *= &q;
                    }
                }
            }
        }
        let idx = monomial(px, py)
            .ok_or_else(|| Error::Parse(format!("term {term:?} has degree above 2")))?;
        if neg {
            coef = -coef;
        }
        out[idx] += coef;
    }
    Ok(out)
}

/// `"x,y"` with rational components.
pub fn parse_point(s: &str) -> Result<RatPoint> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (x, y) = t
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected \"x,y\", got {s:?}")))?;
    Ok((parse_rational(x)?, parse_rational(y)?))
}

pub fn parse_cone(apex: &str, g1: &str, g2: &str) -> Result<AffineCone> {
    AffineCone::new(parse_point(apex)?, parse_point(g1)?, parse_point(g2)?)
}

/// Comma-separated non-negative integers.
pub fn parse_levels(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("not a level: {t:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use crate::LatticePoint;

    #[test]
    fn sextuple_and_closed_form_agree() {
        let f = parse_polynomial("1 1 1 2 1 0").unwrap();
        assert_eq!(f, IVQuadratic::cantor_f());
        // (x + y)(x + y + 1)/2 + x
        let g = parse_polynomial("1/2*x^2 + x*y + 1/2*y^2 + 3/2*x + 1/2*y").unwrap();
        assert_eq!(g, f);
        assert_eq!(parse_polynomial("x^2/2 + x*y + y^2/2 + 3*x/2 + y/2").unwrap(), f);
        assert!(parse_polynomial("x/0").is_err());
        let h = parse_polynomial("x^2+y^2").unwrap();
        assert_eq!(h, IVQuadratic::from_sextuple([2, 0, 2, 1, 1, 0]));
        assert_eq!(parse_polynomial("x**2 - y*y + 3").unwrap(), IVQuadratic::from_sextuple([2, 0, -2, 1, -1, 3]));
    }

    #[test]
    fn closed_form_evaluates_like_input() {
        // oracle: evaluate the text's coefficients directly
        let src = "3/2*x^2 - 2*x*y + 5/2*y^2 - 1/2*x + 7/2*y - 4";
        let c = closed_form_coefficients(src).unwrap();
        let p = parse_polynomial(src).unwrap();
        for x in -4i64..=4 {
            for y in -4i64..=4 {
                let (xq, yq) = (rat(x, 1), rat(y, 1));
                let direct = &c[0] * &xq * &xq + &c[1] * &xq * &yq + &c[2] * &yq * &yq + &c[3] * &xq + &c[4] * &yq + &c[5];
                assert_eq!(rat(p.eval(LatticePoint::new(x, y)), 1), direct);
            }
        }
    }

    #[test]
    fn rejections() {
        assert!(matches!(parse_polynomial("x^3"), Err(Error::Parse(_))));
        assert!(matches!(parse_polynomial("1/3*x^2"), Err(Error::NotIntegerValued(_))));
        assert!(matches!(parse_polynomial("1 2 3"), Err(Error::Parse(_))));
        assert!(matches!(parse_polynomial("x +"), Err(Error::Parse(_))));
    }

    #[test]
    fn points_and_levels() {
        assert_eq!(parse_point("(1/2, -3)").unwrap(), (rat(1, 2), rat(-3, 1)));
        assert_eq!(parse_levels("100,1000, 10000").unwrap(), vec![100, 1000, 10000]);
        assert!(parse_cone("0,0", "1,0", "2,0").is_err());
    }
}
