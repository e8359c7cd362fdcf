mod common;

use common::{integral, nonzero_poly, nonzero_rational, poly, rational};
use proptest::prelude::*;
use q8deform::scalar::{parse_rational, Gf2Poly, PowerSeries, RationalFunction, Valuation};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn polynomial_ring_axioms(a in poly(40), b in poly(40), c in poly(40)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Gf2Poly::one(), a.clone());
        prop_assert!((&a + &a).is_zero());
        prop_assert_eq!(a.square(), &a * &a);
    }

    #[test]
    fn polynomial_division(a in poly(60), b in nonzero_poly(20)) {
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree() < b.degree() || r.is_zero());
    }

    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &RationalFunction::zero(), a.clone());
        prop_assert_eq!(&a * &RationalFunction::one(), a.clone());
        prop_assert!((&a + &a).is_zero());
    }

    #[test]
    fn inverses(a in nonzero_rational()) {
        prop_assert_eq!(&a * &a.inv().unwrap(), RationalFunction::one());
        prop_assert_eq!(a.inv().unwrap().inv().unwrap(), a);
    }

    #[test]
    fn normal_form_is_reduced(a in rational()) {
        prop_assert!(a.numerator().gcd(a.denominator()).is_one() || a.is_zero());
        if a.is_zero() {
            prop_assert!(a.denominator().is_one());
        }
    }

    #[test]
    fn valuation_is_additive(a in nonzero_rational(), b in nonzero_rational()) {
        let (Valuation::Finite(va), Valuation::Finite(vb)) = (a.valuation(), b.valuation()) else {
            unreachable!("nonzero");
        };
        prop_assert_eq!((&a * &b).valuation(), Valuation::Finite(va + vb));
        prop_assert!((&a + &b).valuation() >= Valuation::Finite(va.min(vb)));
    }

    #[test]
    fn expansion_truncates_consistently(a in integral(), n in 1usize..40, m in 1usize..40) {
        let (lo, hi) = (n.min(m), n.max(m));
        prop_assert_eq!(a.expand(hi).unwrap().truncate(lo), a.expand(lo).unwrap());
    }

    #[test]
    fn expansion_is_a_ring_map(a in integral(), b in integral(), n in 1usize..40) {
        let (x, y) = (a.expand(n).unwrap(), b.expand(n).unwrap());
        prop_assert_eq!((&a * &b).expand(n).unwrap(), &x * &y);
        prop_assert_eq!((&a + &b).expand(n).unwrap(), &x + &y);
    }

    #[test]
    fn expansion_recovers_the_fraction(a in integral(), n in 1usize..30) {
        // num = den * expansion mod t^n
        let lhs = PowerSeries::from_poly(a.numerator().clone(), n).unwrap();
        let den = PowerSeries::from_poly(a.denominator().clone(), n).unwrap();
        prop_assert_eq!(lhs, &den * &a.expand(n).unwrap());
    }

    #[test]
    fn evaluation_at_zero_is_a_ring_map(a in integral(), b in integral()) {
        let (x, y) = (a.at_zero().unwrap(), b.at_zero().unwrap());
        prop_assert_eq!((&a + &b).at_zero().unwrap(), x ^ y);
        prop_assert_eq!((&a * &b).at_zero().unwrap(), x & y);
    }

    #[test]
    fn display_parses_back(a in rational()) {
        prop_assert_eq!(parse_rational(&a.to_string()).unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<RationalFunction>(&json).unwrap(), a);
    }

    #[test]
    fn series_inverse(bits in 0u64..(1 << 20), n in 1usize..50) {
        let s = PowerSeries::from_bits(2 * bits + 1, n).unwrap();
        let one = PowerSeries::from_bits(1, n).unwrap();
        prop_assert_eq!(&s * &s.inverse().unwrap(), one);
    }
}
