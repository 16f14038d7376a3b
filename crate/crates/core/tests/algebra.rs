use std::sync::Arc;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use supersphere::sample::Sampler;
use supersphere::{Coeff, Element, Error, GeneratorTable, Parity, ParityClass, RewriteSystem, Scalar, Supersphere};

fn table() -> Arc<GeneratorTable> {
    GeneratorTable::builder()
        .even_pair("a", "a♦")
        .even_pair("b", "b♦")
        .odd_pair("η", "η♦")
        .build()
        .unwrap()
}

fn g(t: &Arc<GeneratorTable>, name: &str) -> Element {
    Element::generator(t, name).unwrap()
}

fn sampler(t: &Arc<GeneratorTable>) -> Sampler {
    Sampler::new(t, &["a", "a♦", "b", "b♦", "η", "η♦"])
}

fn sign(p: Parity, q: Parity) -> Coeff {
    if p == Parity::Odd && q == Parity::Odd {
        Coeff::int(-1)
    } else {
        Coeff::one()
    }
}

#[test]
fn normalize_examples() {
    let t = table();
    let one = Scalar::one();
    assert!(Element::normalize(&t, &[(one, &["η", "η"])]).unwrap().is_zero());
    let swapped = Element::normalize(&t, &[(one, &["η♦", "η"])]).unwrap();
    assert_eq!(swapped, -(&g(&t, "η") * &g(&t, "η♦")));
    let ab = Element::normalize(&t, &[(one, &["b", "a"])]).unwrap();
    assert_eq!(ab, &g(&t, "a") * &g(&t, "b"));
    assert!(matches!(
        Element::normalize(&t, &[(one, &["q"])]),
        Err(Error::UnknownGenerator(_))
    ));
}

#[test]
fn mul_examples() {
    let t = table();
    let (a, b, e, ed) = (g(&t, "a"), g(&t, "b"), g(&t, "η"), g(&t, "η♦"));
    assert_eq!(&ed * &e, -(&e * &ed));
    assert_eq!(&(&a + &b) * &(&a - &b), &a.pow(2) - &b.pow(2));
    let half = Scalar::ratio(1, 2);
    assert_eq!(&e.scale(half) * &ed.scale(half), (&e * &ed).scale(Scalar::ratio(1, 4)));
}

#[test]
fn quarter_eta_eta_dagger_is_xi_minus_xi_plus() {
    let ss = Supersphere::shared();
    let c = ss.orbit_coordinates();
    let q = (&ss.gen("η") * &ss.gen("η♦")).scale(Scalar::ratio(1, 4));
    assert!(ss.equal_mod(&(&c.xi_minus * &c.xi_plus), &q));
}

#[test]
fn diamond_examples() {
    let t = table();
    assert_eq!(g(&t, "η♦").diamond(), -g(&t, "η"));
    assert_eq!(g(&t, "a").scale(Scalar::i()).diamond(), g(&t, "a♦").scale(-Scalar::i()));
    let sdet = &(&g(&t, "a") * &g(&t, "a♦")) + &(&g(&t, "b") * &g(&t, "b♦"));
    assert_eq!(sdet.diamond(), sdet);
}

#[test]
fn parity_examples() {
    let t = table();
    assert_eq!((&g(&t, "η") * &g(&t, "η♦")).parity_of(), ParityClass::Even);
    assert_eq!((&g(&t, "a") * &g(&t, "η")).parity_of(), ParityClass::Odd);
    assert_eq!((&g(&t, "a") + &g(&t, "η")).parity_of(), ParityClass::Mixed);
    assert_eq!(Element::zero(&t).parity_of(), ParityClass::Zero);
}

#[test]
fn body_and_soul_examples() {
    let t = table();
    let ee = &g(&t, "η") * &g(&t, "η♦");
    let one = Element::one(&t);
    assert_eq!((&one - &ee.scale(Scalar::ratio(1, 4))).body(), one);
    let x = &g(&t, "a") + &(&g(&t, "a") * &ee);
    assert_eq!(x.soul(), &g(&t, "a") * &ee);
    assert!(Supersphere::shared().gen("ξ-").body().is_zero());
}

#[test]
fn reduce_examples() {
    let ss = Supersphere::shared();
    let r = ss.group_rules();
    let (a, ad, b, bd) = (ss.gen("a"), ss.gen("a♦"), ss.gen("b"), ss.gen("b♦"));
    assert_eq!(r.reduce(&(&b * &bd)), &ss.one() - &(&a * &ad));
    let sdet = &(&a * &ad) + &(&b * &bd);
    assert_eq!(r.reduce(&sdet.pow(3)), ss.one());
    assert_eq!(r.reduce(&ss.gen("η")), ss.gen("η"));
}

#[test]
fn reduce_matches_single_step_fixpoint() {
    let ss = Supersphere::shared();
    let r = ss.group_rules();
    let sdet = &(&ss.gen("a") * &ss.gen("a♦")) + &(&ss.gen("b") * &ss.gen("b♦"));
    let mut x = sdet.pow(3);
    while let Some(y) = r.rewrite_once(&x) {
        x = y;
    }
    assert_eq!(x, ss.one());
}

#[test]
fn substitute_examples() {
    let ss = Supersphere::shared();
    let (a, b) = (ss.gen("a"), ss.gen("b"));
    let sdet = &(&a * &ss.gen("a♦")) + &(&b * &ss.gen("b♦"));
    let w = sdet.substitute(&[]).unwrap();
    assert_eq!(w, sdet);
    assert_eq!(ss.u1_act(&sdet), ss.one());
    // ξ₋ written out by hand, not taken from the coordinate module
    let (e, ed) = (ss.gen("η"), ss.gen("η♦"));
    let xi_minus = (&(&a * &ed) + &(&e * &ss.gen("b♦"))).scale(Scalar::ratio(-1, 2));
    let xi_plus = (&(&e * &ss.gen("a♦")) - &(&b * &ed)).scale(Scalar::ratio(1, 2));
    let target = &(&e * &ed).scale(Scalar::ratio(1, 4)) - &(&ss.gen("ξ-") * &ss.gen("ξ+"));
    let pulled = target
        .substitute(&[("ξ-", xi_minus), ("ξ+", xi_plus)])
        .unwrap();
    assert!(ss.reduce(&pulled).is_zero());
    assert!(matches!(
        sdet.substitute(&[("a", e.clone())]),
        Err(Error::Contract(_))
    ));
}

#[test]
fn surd_arithmetic() {
    assert_eq!(Scalar::sqrt(2) * Scalar::sqrt(2), Scalar::int(2));
    assert_eq!(Scalar::sqrt(2) * Scalar::sqrt(3), Scalar::sqrt(6));
    assert_eq!(Scalar::pi_pow(2) * Scalar::pi_pow(-3), Scalar::pi_pow(-1));
    assert_eq!(Scalar::sqrt(12), Scalar::int(2) * Scalar::sqrt(3));
}

#[test]
fn mismatched_tables_are_rejected() {
    let x = g(&table(), "a");
    let other = GeneratorTable::builder().real("a").build().unwrap();
    let y = g(&other, "a");
    assert!(matches!(x.try_mul(&y), Err(Error::TableMismatch)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn graded_commutativity(seed: u64) {
        let t = table();
        let s = sampler(&t);
        let mut rng = StdRng::seed_from_u64(seed);
        for p in [Parity::Even, Parity::Odd] {
            for q in [Parity::Even, Parity::Odd] {
                let x = s.element(&mut rng, Some(p));
                let y = s.element(&mut rng, Some(q));
                prop_assert_eq!(&x * &y, (&y * &x).scale_coeff(&sign(p, q)));
            }
        }
    }

    #[test]
    fn diamond_squared_is_parity_sign(seed: u64) {
        let t = table();
        let s = sampler(&t);
        let mut rng = StdRng::seed_from_u64(seed);
        let x = s.element(&mut rng, Some(Parity::Even));
        let y = s.element(&mut rng, Some(Parity::Odd));
        prop_assert_eq!(x.diamond().diamond(), x.clone());
        prop_assert_eq!(y.diamond().diamond(), -y.clone());
        prop_assert_eq!((&x * &y).diamond(), &x.diamond() * &y.diamond());
    }

    #[test]
    fn diamond_is_antilinear(seed: u64) {
        let t = table();
        let s = sampler(&t);
        let mut rng = StdRng::seed_from_u64(seed);
        let x = s.element(&mut rng, None);
        let c = s.scalar(&mut rng);
        prop_assert_eq!(x.scale(c).diamond(), x.diamond().scale(c.conj()));
    }

    #[test]
    fn reduce_is_idempotent_homomorphism(seed: u64) {
        let ss = Supersphere::shared();
        let s = Sampler::new(ss.table(), &["a", "a♦", "b", "b♦", "η", "η♦"]);
        let r: &RewriteSystem = ss.group_rules();
        let mut rng = StdRng::seed_from_u64(seed);
        let x = s.element(&mut rng, None);
        let y = s.element(&mut rng, None);
        let rx = r.reduce(&x);
        prop_assert_eq!(r.reduce(&rx), rx.clone());
        prop_assert_eq!(r.reduce(&(&x * &y)), r.reduce(&(&rx * &r.reduce(&y))));
        prop_assert_eq!(r.reduce(&(&x + &y)), &rx + &r.reduce(&y));
    }

    #[test]
    fn body_is_an_algebra_map(seed: u64) {
        let t = table();
        let s = sampler(&t);
        let mut rng = StdRng::seed_from_u64(seed);
        let x = s.element(&mut rng, None);
        let y = s.element(&mut rng, None);
        prop_assert_eq!(x.body().body(), x.body());
        prop_assert_eq!((&x * &y).body(), &x.body() * &y.body());
        prop_assert_eq!(&x.body() + &x.soul(), x.clone());
        let odd = &x * &g(&t, "η");
        prop_assert_eq!(odd.soul(), odd);
    }

    #[test]
    fn multiplication_is_associative_and_preserves_parity(seed: u64) {
        let t = table();
        let s = sampler(&t);
        let mut rng = StdRng::seed_from_u64(seed);
        let x = s.element(&mut rng, Some(Parity::Odd));
        let y = s.element(&mut rng, Some(Parity::Odd));
        let z = s.element(&mut rng, None);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        let xy = &x * &y;
        prop_assert!(xy.is_zero() || xy.parity() == Some(Parity::Even));
    }
}
