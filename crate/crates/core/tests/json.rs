use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use supersphere::json::{
    coeff_from_json, coeff_to_json, element_from_json, element_to_json, form_from_json, form_to_json,
    matrix_from_json, matrix_to_json, trig_from_json, trig_to_json,
};
use supersphere::sample::{trig_poly, Sampler};
use supersphere::{BlockShape, Coeff, Element, Parity, Scalar, Sign, SuperForm, SuperMatrix, Supersphere};

const NAMES: [&str; 6] = ["a", "a♦", "b", "b♦", "η", "η♦"];

fn ss() -> &'static Supersphere {
    Supersphere::shared()
}

#[test]
fn surd_coefficients_round_trip() {
    let c = &Coeff::from(Scalar::sqrt(2)) + &Coeff::from(Scalar::sqrt(3) * Scalar::pi_pow(-1));
    assert_eq!(coeff_from_json(&coeff_to_json(&c)).unwrap(), c);
    let x = ss().gen("a").scale_coeff(&c);
    assert_eq!(element_from_json(ss().table(), &element_to_json(&x)).unwrap(), x);
}

#[test]
fn projectors_round_trip() {
    for sign in Sign::BOTH {
        for n in 1..=2 {
            let p = ss().projector_for(sign, n).unwrap();
            let back: SuperMatrix<Element> = matrix_from_json(ss().table(), &matrix_to_json(&p)).unwrap();
            assert_eq!(back, p);
        }
    }
}

#[test]
fn chern_forms_round_trip() {
    for sign in Sign::BOTH {
        let c = ss().chern_form(sign, 1).unwrap();
        assert_eq!(form_from_json(ss().table(), &form_to_json(&c)).unwrap(), c);
    }
    let c = ss().coordinate_chern_form(2);
    assert_eq!(form_from_json(ss().table(), &form_to_json(&c)).unwrap(), c);
}

#[test]
fn form_valued_matrices_round_trip() {
    let p = ss().projector_for(Sign::Minus, 1).unwrap();
    let dp: SuperMatrix<SuperForm> = p.map(Element::d);
    let back: SuperMatrix<SuperForm> = matrix_from_json(ss().table(), &matrix_to_json(&dp)).unwrap();
    assert_eq!(back, dp);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn elements_and_forms_round_trip(seed: u64) {
        let s = Sampler::new(ss().table(), &NAMES);
        let mut rng = StdRng::seed_from_u64(seed);
        let x = s.element(&mut rng, None);
        prop_assert_eq!(element_from_json(ss().table(), &element_to_json(&x)).unwrap(), x);
        let f = s.form(&mut rng, 2);
        prop_assert_eq!(form_from_json(ss().table(), &form_to_json(&f)).unwrap(), f);
    }

    #[test]
    fn matrices_round_trip(seed: u64) {
        let s = Sampler::new(ss().table(), &NAMES);
        let mut rng = StdRng::seed_from_u64(seed);
        for shape in [BlockShape::even_first(2, 1), BlockShape::odd_first(1, 2)] {
            for p in [Parity::Even, Parity::Odd] {
                let m = s.supermatrix(&mut rng, shape, shape, p);
                let back: SuperMatrix<Element> = matrix_from_json(ss().table(), &matrix_to_json(&m)).unwrap();
                prop_assert_eq!(back, m);
            }
        }
    }

    #[test]
    fn trig_polys_round_trip(seed: u64) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = trig_poly(&mut rng, 5, 5);
        prop_assert_eq!(trig_from_json(&trig_to_json(&f)).unwrap(), f);
    }
}
