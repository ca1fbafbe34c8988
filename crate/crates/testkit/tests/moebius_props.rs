use lti_bounded::moebius_transform;
use lti_bounded_testkit::gen::{discrete_factor, random_root_spec, rng};
use lti_bounded_testkit::{Factor, RatPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn delta_is_multiplicity_of_one(seed in any::<u64>()) {
        let spec = random_root_spec(&mut rng(seed), 8, discrete_factor);
        let m = moebius_transform(&spec.expand()).unwrap();
        prop_assert_eq!(m.delta as u32, spec.multiplicity_of_one());
        prop_assert_eq!(m.transformed.degree().unwrap() + m.delta, spec.degree());
    }

    #[test]
    fn real_roots_map_through_the_involution(seed in any::<u64>()) {
        let spec = random_root_spec(&mut rng(seed), 8, discrete_factor);
        let m = moebius_transform(&spec.expand()).unwrap();
        let p = RatPoly::from_int(&m.transformed);
        for (f, _) in &spec.factors {
            if let Factor::Linear { num, den } = *f {
                if num == den {
                    continue;
                }
                // r = num/den maps to (r + 1) / (r - 1).
                let image = BigRational::new(BigInt::from(num + den), BigInt::from(num - den));
                prop_assert!(p.eval(&image).is_zero(), "{} {}", spec, m.transformed);
            }
        }
    }

    #[test]
    fn transform_is_an_involution_up_to_scale(seed in any::<u64>()) {
        let spec = random_root_spec(&mut rng(seed), 6, discrete_factor);
        if spec.multiplicity_of_one() == 0 {
            let p = spec.expand();
            let once = moebius_transform(&p).unwrap();
            // P has no root at 1 iff p had full degree, so the map reverses.
            if once.transformed.degree() == p.degree() {
                let twice = moebius_transform(&once.transformed).unwrap();
                prop_assert_eq!(
                    RatPoly::from_int(&twice.transformed).monic(),
                    RatPoly::from_int(&p).monic()
                );
            }
        }
    }
}
