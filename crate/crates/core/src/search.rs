//! Exhaustive coefficient search for packing polynomials of a sector.
//!
//! Density one forces `α = A/(1 − B)`: for `α = p/q` this is `B = 1 − Aq/p`,
//! which needs `p | A`; for the first quadrant it forces `A = B = C = 1`; no
//! irrational slope admits any leading triple. Together with `C = B²/A` this
//! cuts the scan to `(D, E, F)` over a handful of leading triples.

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::numeric::{BigInt, LatticePoint, SectorSlope};
use crate::poly::IVQuadratic;
use crate::sector::Sector;
use crate::verifier::{necessary_conditions, verify_prefix, VerificationReport};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survivor {
    pub poly: IVQuadratic,
    pub report: VerificationReport,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    /// Survivors in sextuple order.
    pub survivors: Vec<Survivor>,
    /// `(A, B)` pairs rejected by the slope constraint.
    pub pruned_slope: u64,
    /// `(A, B)` pairs whose `B²/A` is not an integer.
    pub pruned_c: u64,
    /// Sextuples screened and verified.
    pub examined: u64,
}

/// Leading triples `(A, B, C)` with `A ∈ [1, bound]`, `|B| ≤ bound` that pass
/// the slope and integrality constraints, plus the pruning counts.
pub fn leading_triples(alpha: &SectorSlope, bound: i64) -> (Vec<(i64, i64, i64)>, u64, u64) {
    let mut kept = Vec::new();
    let (mut slope, mut c_frac) = (0u64, 0u64);
    for a in 1..=bound {
        for b in -bound..=bound {
            let ok = match alpha {
                SectorSlope::Infinity => b == 1,
                SectorSlope::Rational(r) => {
                    // A/(1 − B) = p/q  ⇔  q·A = p·(1 − B)
                    b != 1 && BigInt::from(a) * r.denom() == r.numer() * BigInt::from(1 - b)
                }
                SectorSlope::QuadIrr(_) => false,
            };
            if !ok {
                slope += 1;
                continue;
            }
            if (b * b) % a != 0 {
                c_frac += 1;
                continue;
            }
            let c = b * b / a;
            // at α = ∞ the constraint also needs A = C
            if matches!(alpha, SectorSlope::Infinity) && c != a {
                slope += 1;
                continue;
            }
            kept.push((a, b, c));
        }
    }
    (kept, slope, c_frac)
}

fn survives(p: &IVQuadratic, sector: &Sector, n: u64) -> Result<Option<VerificationReport>> {
    if !necessary_conditions(p, sector).all_passed() {
        return Ok(None);
    }
    let report = verify_prefix(p, sector, n)?;
    Ok(report.is_verified().then_some(report))
}

fn box_range(bound: i64) -> impl Iterator<Item = (i64, i64, i64)> + Clone {
    (-bound..=bound)
        .flat_map(move |d| (-bound..=bound).flat_map(move |e| (-bound..=bound).map(move |f| (d, e, f))))
}

/// Packing-polynomial candidates for `sector` with coefficients bounded by
/// `bound`, verified up to `n`.
pub fn search_quadratics(sector: &Sector, bound: i64, n: u64) -> Result<SearchOutcome> {
    let (triples, pruned_slope, pruned_c) = leading_triples(&sector.alpha, bound);
    let candidates: Vec<IVQuadratic> = triples
        .iter()
        .flat_map(|&(a, b, c)| box_range(bound).map(move |(d, e, f)| IVQuadratic::from_sextuple([a, b, c, d, e, f])))
        .collect();
    let examined = candidates.len() as u64;
    let mut survivors = run(candidates, sector, n)?;
    survivors.sort_by(|x, y| x.poly.cmp(&y.poly));
    Ok(SearchOutcome {
        survivors,
        pruned_slope,
        pruned_c,
        examined,
    })
}

fn run(candidates: Vec<IVQuadratic>, sector: &Sector, n: u64) -> Result<Vec<Survivor>> {
    let found: Vec<Option<Survivor>> = candidates
        .into_par_iter()
        .map(|poly| {
            Ok(survives(&poly, sector, n)?.map(|report| Survivor { poly, report }))
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

/// A value in `[0, n]` attained twice among small sector points rules out a
/// verified prefix without running the verifier.
fn repeats_small_value(p: &IVQuadratic, sector: &Sector, n: u64) -> bool {
    let mut seen = std::collections::HashSet::new();
    for x in 0..=4 {
        for y in 0..=4 {
            let pt = LatticePoint::new(x, y);
            if !sector.contains(pt) {
                continue;
            }
            let v = p.eval(pt);
            if v >= BigInt::zero() && v <= BigInt::from(n) && !seen.insert(v) {
                return true;
            }
        }
    }
    false
}

/// The same search without any coefficient pruning: every sextuple in
/// `[−bound, bound]⁶` is verified directly. Only for small bounds.
pub fn search_unpruned(sector: &Sector, bound: i64, n: u64) -> Result<Vec<Survivor>> {
    let lead: Vec<(i64, i64, i64)> = box_range(bound).collect();
    let candidates: Vec<IVQuadratic> = lead
        .iter()
        .flat_map(|&(a, b, c)| box_range(bound).map(move |(d, e, f)| IVQuadratic::from_sextuple([a, b, c, d, e, f])))
        .collect();
    let found: Vec<Option<Survivor>> = candidates
        .into_par_iter()
        .map(|poly| {
            if repeats_small_value(&poly, sector, n) {
                return None;
            }
            // anything the verifier cannot process is not a survivor
            match verify_prefix(&poly, sector, n) {
                Ok(report) if report.is_verified() => Some(Survivor { poly, report }),
                _ => None,
            }
        })
        .collect();
    let mut out: Vec<Survivor> = found.into_iter().flatten().collect();
    out.sort_by(|x, y| x.poly.cmp(&y.poly));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sector(s: &str) -> Sector {
        Sector::new(s.parse().unwrap())
    }

    #[test]
    fn leading_triples_per_sector() {
        assert_eq!(leading_triples(&SectorSlope::Infinity, 3).0, vec![(1, 1, 1)]);
        assert!(leading_triples(&"sqrt(2)".parse().unwrap(), 10).0.is_empty());
        // α = 4/3: A = 4k, B = 1 − 3k, C = B²/A → (4, −2, 1)
        assert_eq!(leading_triples(&"4/3".parse().unwrap(), 4).0, vec![(4, -2, 1)]);
        // α = 1: B = 1 − A, C = (1 − A)²/A integral only for A = 1
        assert_eq!(leading_triples(&"1".parse().unwrap(), 6).0, vec![(1, 0, 0)]);
    }

    #[test]
    fn fueter_polya_small() {
        let out = search_quadratics(&Sector::first_quadrant(), 2, 200).unwrap();
        let polys: Vec<_> = out.survivors.iter().map(|s| s.poly.clone()).collect();
        assert_eq!(polys, vec![IVQuadratic::cantor_g(), IVQuadratic::cantor_f()]);
    }

    #[test]
    fn irrational_sector_is_empty() {
        let out = search_quadratics(&sector("sqrt(2)"), 4, 100).unwrap();
        assert!(out.survivors.is_empty());
        assert_eq!(out.examined, 0);
        assert_eq!(out.pruned_slope, 4 * 9);
    }
}
