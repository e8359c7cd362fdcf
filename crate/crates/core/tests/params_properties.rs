mod common;

use common::{nonzero_poly, poly, rational};
use proptest::prelude::*;
use q8deform::scalar::{Gf2Poly, RationalFunction};
use q8deform::DeformationParams;

/// `(w, c, d, a, b)`; `c` solves the constant-term relation when `solve_c`,
/// and `a, b` are derived when `derive`.
fn tuple() -> impl Strategy<Value = DeformationParams> {
    (poly(4), nonzero_poly(4), rational(), any::<bool>(), any::<bool>(), rational(), rational()).prop_map(
        |(w, d, c_free, solve_c, derive, a_free, b_free)| {
            let (w, d) = (RationalFunction::from_poly(w), RationalFunction::from_poly(Gf2Poly::from_word(1) + d));
            let den = &RationalFunction::one() + &(&w * &d);
            let c = match (solve_c, den.inv()) {
                (true, Ok(inv)) => &(&w + &d) * &inv,
                _ => c_free,
            };
            let mut p = DeformationParams::from_wcd(w, c, d, RationalFunction::t(), 16);
            if !derive {
                p.a = a_free;
                p.b = b_free;
            }
            p
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cubic_identity_matches_coefficient_system(p in tuple()) {
        let report = p.validate();
        let passed = |name: &str| report.get(name).unwrap().passed;
        let system = passed("coefficient-a") && passed("coefficient-b") && passed("coefficient-constant");
        prop_assert_eq!(passed("cubic-identity"), system);
    }

    #[test]
    fn params_file_round_trip(p in tuple()) {
        let back = DeformationParams::parse_file(&p.to_file_string()).unwrap();
        prop_assert_eq!(back, p);
    }
}
