use gldist::factors::*;
use gldist::*;
use num_complex::Complex64;
use proptest::prelude::*;

fn character() -> impl Strategy<Value = CharacterCx> {
    (-3i64..=3, -4i64..=4, -2i64..=2)
        .prop_map(|(m, a, b)| CharacterCx::new(m, GaussianRational::new(Rational::frac(a, 2), Rational::frac(b, 3))))
}

fn parameter() -> impl Strategy<Value = LanglandsParameter> {
    prop::collection::vec(character(), 1..4).prop_map(LanglandsParameter::new)
}

fn psi() -> impl Strategy<Value = AdditiveCharacterSpec> {
    (-3i64..=3, 1i64..=3, 1i64..=2).prop_filter_map("b = 0", |(re, im, d)| {
        AdditiveCharacterSpec::new(GaussianRational::new(Rational::frac(re, d), Rational::frac(im, d))).ok()
    })
}

fn imaginary_psi() -> impl Strategy<Value = AdditiveCharacterSpec> {
    prop::sample::select(vec![(1i64, 1i64), (2, 1), (-1, 1), (-3, 2), (1, 2)])
        .prop_map(|(n, d)| AdditiveCharacterSpec::imaginary(Rational::frac(n, d)).unwrap())
}

fn half() -> GaussianRational {
    GaussianRational::real(Rational::frac(1, 2))
}

/// `i^{|m|} b^m |b|^{2s - m + s0 - 1/2}` in floating point.
fn eps_float(c: &CharacterCx, b: Complex64, s0: Complex64) -> Complex64 {
    let e = 2.0 * c.s.to_complex() - c.m as f64 + s0 - 0.5;
    Complex64::i().powi(c.m.abs() as i32) * b.powi(c.m as i32) * Complex64::new(b.norm(), 0.0).powc(e)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn character_factor_matches_float(c in character(), psi in psi(), s0 in -2i64..=2) {
        let s0 = GaussianRational::real(Rational::frac(s0, 2));
        let exact = eps_character(&c, &psi, &s0).to_complex();
        let float = eps_float(&c, psi.b().to_complex(), s0.to_complex());
        prop_assert!((exact - float).norm() <= 1e-12 * float.norm().max(1.0), "{} vs {}", exact, float);
    }

    #[test]
    fn piecewise_form_agrees(c in character(), psi in imaginary_psi()) {
        prop_assert_eq!(eps_half_trivial_psi(&c, &psi).unwrap(), eps_character(&c, &psi, &half()));
    }

    #[test]
    fn multiplicative_in_the_parameter(p in parameter(), q in parameter(), psi in psi()) {
        let joint = eps_rep(&p.union(&q), &psi, &half());
        prop_assert_eq!(joint, eps_rep(&p, &psi, &half()).mul(&eps_rep(&q, &psi, &half())).unwrap());
    }

    #[test]
    fn pair_factor_is_symmetric(p in parameter(), q in parameter(), psi in psi()) {
        prop_assert_eq!(eps_pair(&p, &q, &psi), eps_pair(&q, &p, &psi));
    }

    #[test]
    fn modulus_is_unit_for_unitary_characters(m in -3i64..=3, im in -3i64..=3, psi in imaginary_psi()) {
        let c = CharacterCx::new(m, GaussianRational::imag(Rational::frac(im, 2)));
        let e = eps_character(&c, &psi, &half()).to_complex();
        // |b|^{2s} has modulus one for imaginary s; |i^{|m|} b^m| |b|^{-m} = 1.
        prop_assert!((e.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn serde_round_trip(c in character(), psi in psi()) {
        let e = eps_character(&c, &psi, &half());
        let json = serde_json::to_string(&e).unwrap();
        prop_assert_eq!(serde_json::from_str::<ExactEps>(&json).unwrap(), e);
    }
}

#[test]
fn piecewise_form_needs_imaginary_b() {
    let psi = AdditiveCharacterSpec::new(GaussianRational::from_int(1)).unwrap();
    assert!(eps_half_trivial_psi(&CharacterCx::trivial(), &psi).is_err());
    assert!(AdditiveCharacterSpec::new(GaussianRational::zero()).is_err());
}
