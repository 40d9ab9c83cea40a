use num_traits::Zero;
use proptest::prelude::*;

use sectorpack::{BigRational, IVQuadratic, LatticePoint};

fn sextuple() -> impl Strategy<Value = [i64; 6]> {
    prop::array::uniform6(-50i64..=50)
}

proptest! {
    #[test]
    fn integer_valued_everywhere(c in sextuple(), x in -1000i64..=1000, y in -1000i64..=1000) {
        let p = IVQuadratic::from_sextuple(c);
        let (xr, yr) = (BigRational::from_integer(x.into()), BigRational::from_integer(y.into()));
        let v = p.eval_rational(&xr, &yr);
        prop_assert!(v.is_integer());
        prop_assert_eq!(v.to_integer(), p.eval(LatticePoint::new(x, y)));
    }

    #[test]
    fn closed_form_round_trip(c in sextuple()) {
        let p = IVQuadratic::from_sextuple(c);
        let cf = p.closed_form();
        let back = IVQuadratic::from_closed_form([&cf[0], &cf[1], &cf[2], &cf[3], &cf[4], &cf[5]]).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn reflection_identity(c in sextuple(), r in -9i64..=9, s in -9i64..=9, i in -100i64..=100) {
        let p = IVQuadratic::from_sextuple(c);
        prop_assume!(num_integer::gcd(r, s) == 1 && !p.discriminant().is_zero());
        prop_assume!(!p.direction_denominator(r, s).is_zero());
        let (x, y) = p.symmetry_point(r, s, i).unwrap();
        let (rr, ss) = (BigRational::from_integer(r.into()), BigRational::from_integer(s.into()));
        prop_assert_eq!(
            p.eval_rational(&(&x + &rr), &(&y + &ss)),
            p.eval_rational(&(&x - &rr), &(&y - &ss))
        );
    }
}
