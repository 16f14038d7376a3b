use std::sync::Arc;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use supersphere::matrix::graded_inverse;
use supersphere::sample::{Bounds, Sampler};
use supersphere::{
    BlockShape, Coeff, Element, Error, GeneratorTable, Parity, RewriteSystem, Scalar, Sign, SuperMatrix, Supersphere,
};

fn ss() -> &'static Supersphere {
    Supersphere::shared()
}

fn small_sampler(t: &Arc<GeneratorTable>, names: &[&str]) -> Sampler {
    Sampler::new(t, names).with_bounds(Bounds {
        max_terms: 2,
        max_exp: 1,
        max_coeff: 3,
    })
}

fn shapes() -> [BlockShape; 3] {
    [BlockShape::even_first(2, 1), BlockShape::odd_first(2, 1), BlockShape::even_first(1, 2)]
}

fn sign(p: Parity, q: Parity) -> Coeff {
    if p == Parity::Odd && q == Parity::Odd {
        Coeff::int(-1)
    } else {
        Coeff::one()
    }
}

fn diag(t: &Arc<GeneratorTable>, shape: BlockShape, d: &[Element]) -> SuperMatrix<Element> {
    SuperMatrix::from_fn(t, shape, shape, Some(Parity::Even), |i, j| {
        if i == j {
            d[i].clone()
        } else {
            Element::zero(t)
        }
    })
    .unwrap()
}

fn assert_reduces_to_zero(m: &SuperMatrix<Element>) {
    let r = ss().group_rules();
    assert!(m.reduce(r).is_zero(), "not zero modulo the group relation:\n{m}");
}

#[test]
fn identity_is_neutral() {
    let t = ss().table();
    let s = small_sampler(t, &["a", "b♦", "η", "η♦"]);
    let mut rng = StdRng::seed_from_u64(1);
    for shape in shapes() {
        for p in [Parity::Even, Parity::Odd] {
            let x = s.supermatrix(&mut rng, shape, shape, p);
            let id = SuperMatrix::identity(t, shape);
            assert_eq!(x.matmul(&id).unwrap(), x);
            assert_eq!(id.matmul(&x).unwrap(), x);
        }
    }
}

#[test]
fn group_element_is_unitary() {
    let s = ss().group_element();
    let adj = s.dagger().unwrap();
    let id = SuperMatrix::identity(ss().table(), s.rows());
    assert_reduces_to_zero(&s.matmul(&adj).unwrap().sub(&id).unwrap());
    assert_reduces_to_zero(&adj.matmul(&s).unwrap().sub(&id).unwrap());
}

#[test]
fn dagger_of_group_element_matches_explicit_adjoint() {
    assert_eq!(ss().group_element().dagger().unwrap(), ss().group_adjoint());
}

#[test]
fn supertranspose_of_block_diagonal_is_entrywise() {
    let t = ss().table();
    let d = [ss().gen("a"), ss().gen("b"), ss().gen("a♦")];
    let m = diag(t, BlockShape::odd_first(2, 1), &d);
    assert_eq!(m.supertranspose().unwrap(), m);
}

#[test]
fn supertranspose_maps_minus_projector_to_plus() {
    let r = ss().group_rules();
    for n in 1..=2 {
        let pm = ss().projector_for(Sign::Minus, n).unwrap();
        let pp = ss().projector_for(Sign::Plus, n).unwrap();
        assert_eq!(pm.supertranspose().unwrap().reduce(r), pp.reduce(r), "n = {n}");
    }
}

#[test]
fn supertranspose_twice_negates_off_diagonal_blocks() {
    let t = ss().table();
    let s = small_sampler(t, &["a", "b", "η", "η♦"]);
    let mut rng = StdRng::seed_from_u64(2);
    for shape in shapes() {
        for p in [Parity::Even, Parity::Odd] {
            let x = s.supermatrix(&mut rng, shape, shape, p);
            let twice = x.supertranspose().unwrap().supertranspose().unwrap();
            for i in 0..x.nrows() {
                for j in 0..x.ncols() {
                    let expected = if shape.parity(i) == shape.parity(j) {
                        x.get(i, j).clone()
                    } else {
                        -x.get(i, j).clone()
                    };
                    assert_eq!(twice.get(i, j), &expected, "({i}, {j}) in {shape:?}, parity {p:?}");
                }
            }
        }
    }
}

#[test]
fn supertrace_of_identity_counts_dimensions() {
    let t = ss().table();
    for (m, n) in [(2, 1), (1, 2), (3, 0), (0, 2)] {
        for shape in [BlockShape::even_first(m, n), BlockShape::odd_first(m, n)] {
            let str_ = SuperMatrix::<Element>::identity(t, shape).supertrace().unwrap();
            assert_eq!(str_, Element::constant(t, Coeff::int(m as i128 - n as i128)));
        }
    }
}

#[test]
fn projector_has_unit_supertrace() {
    for sign in [Sign::Minus, Sign::Plus] {
        for n in 1..=3 {
            let p = ss().projector_for(sign, n).unwrap();
            assert!(ss().equal_mod(&p.supertrace().unwrap(), &ss().one()), "{sign:?} n = {n}");
        }
    }
}

#[test]
fn osp12_brackets() {
    let o = ss().osp12();
    let [a0, a1, a2] = &o.a;
    assert_eq!(a1.graded_bracket(a2).unwrap(), a0.neg());
    let rr = o.r_plus.graded_bracket(&o.r_minus).unwrap();
    let (c, residual) = SuperMatrix::decompose(std::slice::from_ref(a0), &rr).unwrap();
    assert!(residual.is_zero(), "{{R₊, R₋}} is not a multiple of A₀:\n{rr}");
    assert!(!c[0].is_zero());
    for x in [a0, a1, a2] {
        assert!(x.graded_bracket(x).unwrap().is_zero());
    }
}

#[test]
fn osp12_closes_under_bracket() {
    let o = ss().osp12();
    let basis: Vec<SuperMatrix<Element>> = o.all().into_iter().cloned().collect();
    for x in &basis {
        for y in &basis {
            let br = x.graded_bracket(y).unwrap();
            let (_, residual) = SuperMatrix::decompose(&basis, &br).unwrap();
            assert!(residual.is_zero(), "bracket leaves the span:\n{br}");
        }
    }
}

#[test]
fn osp12_adjoints() {
    let o = ss().osp12();
    assert_eq!(o.a[0].dagger().unwrap(), o.a[0].neg());
    assert_eq!(o.r_plus.dagger().unwrap(), o.r_minus);
}

#[test]
fn graded_inverse_examples() {
    let r = ss().group_rules();
    let ee = (&ss().gen("η") * &ss().gen("η♦")).scale(Scalar::ratio(1, 4));
    let u = &ss().one() + &ee;
    assert_eq!(graded_inverse(&u, r).unwrap(), &ss().one() - &ee);
    let three = ss().constant(Coeff::int(3));
    assert_eq!(graded_inverse(&three, r).unwrap(), ss().constant(Coeff::ratio(1, 3)));
    let aad = &ss().gen("a") * &ss().gen("a♦");
    assert!(matches!(graded_inverse(&aad, r), Err(Error::NotInvertible(_))));
    // b b♦ = 1 − a a♦, so a a♦ + b b♦ is the unit
    let unit = &aad + &(&ss().gen("b") * &ss().gen("b♦"));
    assert_eq!(graded_inverse(&unit, r).unwrap(), ss().one());
}

#[test]
fn sdet_examples() {
    let t = ss().table();
    let empty = RewriteSystem::new(t);
    for shape in shapes() {
        assert_eq!(SuperMatrix::<Element>::identity(t, shape).sdet(&empty).unwrap(), ss().one());
    }
    let shape = BlockShape::even_first(2, 1);
    let two = ss().constant(Coeff::int(2));
    let m = diag(t, shape, &[ss().gen("a"), ss().gen("b"), two]);
    let expected = (&ss().gen("a") * &ss().gen("b")).scale(Scalar::ratio(1, 2));
    assert_eq!(m.sdet(&empty).unwrap(), expected);
    assert!(ss().equal_mod(&ss().group_element().sdet(ss().group_rules()).unwrap(), &ss().one()));
    let singular = diag(t, shape, &[ss().one(), ss().one(), ss().gen("η") * ss().gen("η♦")]);
    assert!(matches!(singular.sdet(&empty), Err(Error::NotInvertible(_))));
    let odd = SuperMatrix::from_fn(t, shape, shape, Some(Parity::Odd), |_, _| Element::zero(t)).unwrap();
    assert!(matches!(odd.sdet(&empty), Err(Error::Contract(_))));
}

#[test]
fn inverse_of_purely_even_matrix() {
    let t = ss().table();
    let empty = RewriteSystem::new(t);
    let shape = BlockShape::even_first(2, 0);
    let one = ss().one();
    let a = ss().gen("a");
    let m = SuperMatrix::from_rows(
        t,
        shape,
        shape,
        Some(Parity::Even),
        vec![vec![one.clone(), a.clone()], vec![Element::zero(t), one.clone()]],
    )
    .unwrap();
    let inv = m.inverse_even(&empty).unwrap();
    assert_eq!(inv.get(0, 1), &-a);
    assert_eq!(m.matmul(&inv).unwrap(), SuperMatrix::identity(t, shape));
    let odd_shape = SuperMatrix::<Element>::identity(t, BlockShape::even_first(1, 1));
    assert!(odd_shape.inverse_even(&empty).is_err());
}

#[test]
fn operations_require_declared_parity() {
    let t = ss().table();
    let shape = BlockShape::even_first(1, 1);
    let mixed = SuperMatrix::from_rows(
        t,
        shape,
        shape,
        None,
        vec![vec![ss().one(), ss().one()], vec![ss().one(), ss().one()]],
    )
    .unwrap();
    assert!(mixed.supertrace().is_err());
    assert!(mixed.supertranspose().is_err());
    assert!(mixed.clone().with_parity(Some(Parity::Even)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn supertranspose_reverses_products(seed: u64) {
        let t = ss().table();
        let s = small_sampler(t, &["a", "b", "η", "η♦"]);
        let mut rng = StdRng::seed_from_u64(seed);
        for shape in shapes() {
            for p in [Parity::Even, Parity::Odd] {
                for q in [Parity::Even, Parity::Odd] {
                    let x = s.supermatrix(&mut rng, shape, shape, p);
                    let y = s.supermatrix(&mut rng, shape, shape, q);
                    let lhs = x.matmul(&y).unwrap().supertranspose().unwrap();
                    let rhs = y
                        .supertranspose()
                        .unwrap()
                        .matmul(&x.supertranspose().unwrap())
                        .unwrap()
                        .scale(&sign(p, q));
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn supertrace_is_transpose_invariant(seed: u64) {
        let t = ss().table();
        let s = small_sampler(t, &["a", "b", "η", "η♦"]);
        let mut rng = StdRng::seed_from_u64(seed);
        for shape in shapes() {
            for p in [Parity::Even, Parity::Odd] {
                let x = s.supermatrix(&mut rng, shape, shape, p);
                prop_assert_eq!(x.supertranspose().unwrap().supertrace().unwrap(), x.supertrace().unwrap());
            }
        }
    }

    #[test]
    fn supertrace_is_graded_cyclic(seed: u64) {
        let t = ss().table();
        let s = small_sampler(t, &["a", "b", "η", "η♦"]);
        let mut rng = StdRng::seed_from_u64(seed);
        for shape in shapes() {
            for p in [Parity::Even, Parity::Odd] {
                for q in [Parity::Even, Parity::Odd] {
                    let x = s.supermatrix(&mut rng, shape, shape, p);
                    let y = s.supermatrix(&mut rng, shape, shape, q);
                    let xy = x.supertrace_of_product(&y).unwrap();
                    prop_assert_eq!(&xy, &x.matmul(&y).unwrap().supertrace().unwrap());
                    let yx = y.supertrace_of_product(&x).unwrap();
                    prop_assert_eq!(xy, yx.scale_coeff(&sign(p, q)));
                }
            }
        }
    }

    #[test]
    fn supertrace_is_conjugation_invariant(seed: u64) {
        let s_ = ss();
        let sampler = small_sampler(s_.table(), &["a", "b♦", "η", "η♦"]);
        let mut rng = StdRng::seed_from_u64(seed);
        let h = s_.group_element();
        let h_inv = h.dagger().unwrap();
        let x = sampler.supermatrix(&mut rng, h.rows(), h.cols(), Parity::Even);
        let conj = h.matmul(&x).unwrap().matmul(&h_inv).unwrap();
        prop_assert!(s_.equal_mod(&conj.supertrace().unwrap(), &x.supertrace().unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn sdet_is_multiplicative(seed: u64) {
        let t = ss().table();
        let s = small_sampler(t, &["a", "b", "η", "η♦"]);
        let empty = RewriteSystem::new(t);
        let mut rng = StdRng::seed_from_u64(seed);
        for shape in [BlockShape::even_first(2, 1), BlockShape::odd_first(1, 2)] {
            let x = s.invertible_even(&mut rng, shape);
            let y = s.invertible_even(&mut rng, shape);
            let xy = x.matmul(&y).unwrap();
            prop_assert_eq!(
                xy.sdet(&empty).unwrap(),
                &x.sdet(&empty).unwrap() * &y.sdet(&empty).unwrap()
            );
        }
    }

    #[test]
    fn sdet_is_transpose_invariant(seed: u64) {
        let t = ss().table();
        let s = small_sampler(t, &["a", "b", "η", "η♦"]);
        let empty = RewriteSystem::new(t);
        let mut rng = StdRng::seed_from_u64(seed);
        for shape in [BlockShape::even_first(2, 1), BlockShape::odd_first(1, 2)] {
            let x = s.invertible_even(&mut rng, shape);
            prop_assert_eq!(x.supertranspose().unwrap().sdet(&empty).unwrap(), x.sdet(&empty).unwrap());
        }
    }
}
