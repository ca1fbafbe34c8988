use lti_bounded::{decide_continuous, decide_discrete, IntMatrix, RatMatrix};
use lti_bounded_testkit::gen::{continuous_factor, discrete_factor, random_root_spec, rng};
use lti_bounded_testkit::manifest::parse_manifest;
use lti_bounded_testkit::{conjugate, RootSpec};
use num_bigint::BigInt;
use proptest::prelude::*;

fn scalar(a: i64, q: i64) -> RatMatrix {
    RatMatrix::new(IntMatrix::from_rows([[a]]), BigInt::from(q)).unwrap()
}

#[test]
fn scalar_systems_exhaustive() {
    for q in 1..=10 {
        for a in -10..=10 {
            let m = scalar(a, q);
            assert_eq!(decide_continuous(&m).unwrap().verdict.is_bounded(), a <= 0);
            assert_eq!(decide_discrete(&m).unwrap().verdict.is_bounded(), a.abs() <= q, "{a}/{q}");
        }
    }
}

#[test]
fn discrete_corpus_through_matrices() {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus/discrete_corpus.txt");
    let entries = parse_manifest(&std::fs::read_to_string(path).unwrap()).unwrap();
    for e in &entries {
        let a = e.spec.matrix();
        let report = decide_discrete(&a).unwrap();
        assert_eq!(report.verdict.is_bounded(), e.discrete, "{}: {}", e.spec, report.explanation());
    }
}

#[test]
fn unit_circle_and_reciprocal_cases() {
    let cases = [
        ("one lin(-1/1)", true),
        ("quad(3,16,5) lin(1/2)", true),
        ("quad(3,16,5)^2", false),
        ("lin(2/1) lin(1/2)", false),
        ("one^2 lin(-1/3)", false),
    ];
    for (text, expected) in cases {
        let spec: RootSpec = text.parse().unwrap();
        assert_eq!(decide_discrete(&spec.matrix()).unwrap().verdict.is_bounded(), expected, "{text}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn continuous_matches_construction(seed in any::<u64>()) {
        let spec = random_root_spec(&mut rng(seed), 6, continuous_factor);
        let report = decide_continuous(&spec.matrix()).unwrap();
        prop_assert_eq!(report.verdict.is_bounded(), spec.continuous_truth(), "{}", spec);
    }

    #[test]
    fn discrete_matches_construction(seed in any::<u64>()) {
        let spec = random_root_spec(&mut rng(seed), 6, discrete_factor);
        let report = decide_discrete(&spec.matrix()).unwrap();
        prop_assert_eq!(report.verdict.is_bounded(), spec.discrete_truth(), "{}", spec);
    }

    #[test]
    fn verdict_survives_similarity(seed in any::<u64>()) {
        let spec = random_root_spec(&mut rng(seed), 5, discrete_factor);
        let a = spec.matrix();
        let c = RatMatrix::new(conjugate(a.numerator(), seed, 8), a.denominator().clone()).unwrap();
        prop_assert_eq!(decide_discrete(&a).unwrap().verdict, decide_discrete(&c).unwrap().verdict);
        prop_assert_eq!(decide_continuous(&a).unwrap().verdict, decide_continuous(&c).unwrap().verdict);
    }

    #[test]
    fn continuous_ignores_denominator(seed in any::<u64>(), q in 1i64..50) {
        let spec = random_root_spec(&mut rng(seed), 5, continuous_factor);
        let a = spec.matrix();
        let b = RatMatrix::new(a.numerator().clone(), BigInt::from(q)).unwrap();
        let ra = decide_continuous(&a).unwrap();
        let rb = decide_continuous(&b).unwrap();
        prop_assert!(rb.denominator_ignored);
        prop_assert_eq!(ra.verdict, rb.verdict);
        prop_assert_eq!(ra.kernel_input, rb.kernel_input);
    }

    #[test]
    fn reports_are_deterministic(seed in any::<u64>()) {
        let a = random_root_spec(&mut rng(seed), 5, discrete_factor).matrix();
        prop_assert!(decide_discrete(&a).unwrap().same_evidence(&decide_discrete(&a).unwrap()));
    }
}
