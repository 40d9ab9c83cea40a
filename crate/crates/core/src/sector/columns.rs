//! Exact integer solution sets of univariate quadratic inequalities.

use num_traits::{Signed, Zero};

use crate::numeric::{rat_ceil, rat_floor, rat_quadratic_roots, BigInt, BigRational, QuadraticRoots};

/// A closed integer interval; `None` ends are unbounded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntInterval {
    pub lo: Option<BigInt>,
    pub hi: Option<BigInt>,
}

impl IntInterval {
    fn new(lo: Option<BigInt>, hi: Option<BigInt>) -> Option<Self> {
        match (&lo, &hi) {
            (Some(l), Some(h)) if l > h => None,
            _ => Some(Self { lo, hi }),
        }
    }

    fn all() -> Self {
        Self { lo: None, hi: None }
    }

    fn intersect(&self, o: &Self) -> Option<Self> {
        let lo = match (&self.lo, &o.lo) {
            (Some(a), Some(b)) => Some(a.max(b).clone()),
            (a, b) => a.clone().or_else(|| b.clone()),
        };
        let hi = match (&self.hi, &o.hi) {
            (Some(a), Some(b)) => Some(a.min(b).clone()),
            (a, b) => a.clone().or_else(|| b.clone()),
        };
        Self::new(lo, hi)
    }
}

/// Integers `t` with `a t² + b t + c ≤ 0`, as at most two disjoint intervals.
pub(crate) fn solve_le_zero(a: &BigInt, b: &BigInt, c: &BigInt) -> Vec<IntInterval> {
    if a.is_zero() {
        if b.is_zero() {
            return if c.is_positive() { vec![] } else { vec![IntInterval::all()] };
        }
        let root = BigRational::new(-c, b.clone());
        return if b.is_positive() {
            vec![IntInterval { lo: None, hi: Some(rat_floor(&root)) }]
        } else {
            vec![IntInterval { lo: Some(rat_ceil(&root)), hi: None }]
        };
    }
    let (qa, qb, qc) = (
        BigRational::from_integer(a.clone()),
        BigRational::from_integer(b.clone()),
        BigRational::from_integer(c.clone()),
    );
    let roots = rat_quadratic_roots(&qa, &qb, &qc).expect("leading coefficient is nonzero");
    let (r1, r2) = match roots {
        QuadraticRoots::None => {
            return if a.is_positive() { vec![] } else { vec![IntInterval::all()] };
        }
        QuadraticRoots::One(r) => (r.clone(), r),
        QuadraticRoots::Two(r, s) => (r, s),
    };
    if a.is_positive() {
        IntInterval::new(Some(r1.ceil()), Some(r2.floor()))
            .into_iter()
            .collect()
    } else {
        let left = IntInterval { lo: None, hi: Some(r1.floor()) };
        let right = IntInterval { lo: Some(r2.ceil()), hi: None };
        if left.hi.as_ref().unwrap() >= right.lo.as_ref().unwrap() {
            vec![IntInterval::all()]
        } else {
            vec![left, right]
        }
    }
}

/// Integers `t` in `[lo, hi]` with `lower ≤ a t² + b t + c ≤ upper`.
pub(crate) fn solve_band(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    lower: &BigInt,
    upper: &BigInt,
    lo: i64,
    hi: i64,
) -> Vec<(i64, i64)> {
    let le_upper = solve_le_zero(a, b, &(c - upper));
    let ge_lower = solve_le_zero(&-a, &-b, &(lower - c));
    let window = IntInterval {
        lo: Some(lo.into()),
        hi: Some(hi.into()),
    };
    let mut out = Vec::new();
    for u in &le_upper {
        for l in &ge_lower {
            if let Some(iv) = u.intersect(l).and_then(|iv| iv.intersect(&window)) {
                // the window bounds both ends, so they fit in i64
                let lo: i64 = iv.lo.unwrap().try_into().unwrap();
                let hi: i64 = iv.hi.unwrap().try_into().unwrap();
                out.push((lo, hi));
            }
        }
    }
    out.sort();
    out
}

/// Integers `t` in `[lo, hi]` with `a t² + b t + c ≤ 0`.
pub(crate) fn solve_at_most(a: &BigInt, b: &BigInt, c: &BigInt, lo: i64, hi: i64) -> Vec<(i64, i64)> {
    let window = IntInterval {
        lo: Some(lo.into()),
        hi: Some(hi.into()),
    };
    let mut out: Vec<(i64, i64)> = solve_le_zero(a, b, c)
        .iter()
        .filter_map(|iv| iv.intersect(&window))
        .map(|iv| {
            (
                iv.lo.unwrap().try_into().unwrap(),
                iv.hi.unwrap().try_into().unwrap(),
            )
        })
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(a: i64, b: i64, c: i64, lower: i64, upper: i64, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi)
            .filter(|&t| {
                let v = a * t * t + b * t + c;
                lower <= v && v <= upper
            })
            .collect()
    }

    fn flatten(iv: &[(i64, i64)]) -> Vec<i64> {
        iv.iter().flat_map(|&(l, h)| l..=h).collect()
    }

    #[test]
    fn band_matches_brute_force() {
        for a in -3i64..=3 {
            for b in -5i64..=5 {
                for c in -6i64..=6 {
                    for (lower, upper) in [(0, 0), (0, 5), (-3, 2), (1, 30)] {
                        let got = solve_band(
                            &a.into(),
                            &b.into(),
                            &c.into(),
                            &lower.into(),
                            &upper.into(),
                            -12,
                            12,
                        );
                        assert_eq!(
                            flatten(&got),
                            brute(a, b, c, lower, upper, -12, 12),
                            "a={a} b={b} c={c} band=[{lower},{upper}]"
                        );
                    }
                }
            }
        }
    }
}
