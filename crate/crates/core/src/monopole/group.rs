use num_rational::Ratio;

use crate::algebra::{Element, Parity};
use crate::matrix::{BlockShape, SuperMatrix};
use crate::scalar::{Coeff, Scalar};

use super::Supersphere;

/// The five generators of `osp(1,2)` as constant 3×3 supermatrices, index 0
/// odd.
#[derive(Clone, Debug)]
pub struct Osp12 {
    /// `A₀, A₁, A₂`, even.
    pub a: [SuperMatrix<Element>; 3],
    /// `R₊`, odd.
    pub r_plus: SuperMatrix<Element>,
    /// `R₋`, odd.
    pub r_minus: SuperMatrix<Element>,
}

impl Osp12 {
    pub fn all(&self) -> Vec<&SuperMatrix<Element>> {
        vec![&self.a[0], &self.a[1], &self.a[2], &self.r_plus, &self.r_minus]
    }
}

/// Outcome of comparing `exp(ηR₊)·exp(η♦R₋)` with `exp(ηR₊ + η♦R₋)`.
#[derive(Clone, Debug)]
pub struct NilpotentExpReport {
    pub product: SuperMatrix<Element>,
    pub combined: SuperMatrix<Element>,
    /// `product − combined`; zero exactly when the identity holds.
    pub difference: SuperMatrix<Element>,
    pub equal: bool,
    /// Highest power with a nonzero term in the series of `exp(ηR₊ + η♦R₋)`.
    pub series_order: usize,
}

pub(crate) fn shape3() -> BlockShape {
    BlockShape::odd_first(2, 1)
}

fn q(n: i128, d: i128) -> Coeff {
    Coeff::ratio(n, d)
}

fn qi(n: i128, d: i128) -> Coeff {
    Coeff::from(Scalar::gaussian(Ratio::from_integer(0), Ratio::new(n, d)))
}

impl Supersphere {
    fn constant_matrix(&self, parity: Parity, rows: [[Coeff; 3]; 3]) -> SuperMatrix<Element> {
        let entries = rows
            .into_iter()
            .map(|r| r.into_iter().map(|c| self.constant(c)).collect())
            .collect();
        SuperMatrix::from_rows(self.table(), shape3(), shape3(), Some(parity), entries)
            .expect("constant generator matrix")
    }

    /// The basis of `osp(1,2)`:
    /// `A₀ = (i/2)diag(0,1,−1)`, `A₁`, `A₂` spanning the even part and the
    /// odd generators `R₊ = ½[[0,−1,0],[0,0,0],[−1,0,0]]`,
    /// `R₋ = ½[[0,0,1],[−1,0,0],[0,0,0]]`.
    pub fn osp12(&self) -> Osp12 {
        let z = Coeff::zero;
        let a0 = self.constant_matrix(
            Parity::Even,
            [[z(), z(), z()], [z(), qi(1, 2), z()], [z(), z(), qi(-1, 2)]],
        );
        let a1 = self.constant_matrix(
            Parity::Even,
            [[z(), z(), z()], [z(), z(), qi(1, 2)], [z(), qi(1, 2), z()]],
        );
        let a2 = self.constant_matrix(
            Parity::Even,
            [[z(), z(), z()], [z(), z(), q(1, 2)], [z(), q(-1, 2), z()]],
        );
        let r_plus = self.constant_matrix(
            Parity::Odd,
            [[z(), q(-1, 2), z()], [z(), z(), z()], [q(-1, 2), z(), z()]],
        );
        let r_minus = self.constant_matrix(
            Parity::Odd,
            [[z(), z(), q(1, 2)], [q(-1, 2), z(), z()], [z(), z(), z()]],
        );
        Osp12 {
            a: [a0, a1, a2],
            r_plus,
            r_minus,
        }
    }

    fn matrix3(&self, rows: [[Element; 3]; 3]) -> SuperMatrix<Element> {
        let entries = rows.into_iter().map(|r| r.into_iter().collect()).collect();
        SuperMatrix::from_rows(self.table(), shape3(), shape3(), Some(Parity::Even), entries)
            .expect("even group matrix")
    }

    /// The generic group element `s(a, b, η)` of `UOSP(1,2)`.
    pub fn group_element(&self) -> SuperMatrix<Element> {
        let g = |n| self.gen(n);
        let (a, ad, b, bd, e, ed) = (g("a"), g("a♦"), g("b"), g("b♦"), g("η"), g("η♦"));
        let h = |x: Element| x.scale(Scalar::ratio(1, 2));
        let ee = &e * &ed;
        let top = &self.one() + &ee.scale(Scalar::ratio(1, 4));
        let damp = &self.one() - &ee.scale(Scalar::ratio(1, 8));
        self.matrix3([
            [top, h(-e.clone()), h(ed.clone())],
            [h(-(&(&a * &ed) - &(&bd * &e))), &a * &damp, -(&bd * &damp)],
            [h(-(&(&b * &ed) + &(&ad * &e))), &b * &damp, &ad * &damp],
        ])
    }

    /// The adjoint `s†` written out explicitly, for comparison with
    /// `dagger(s)`.
    pub fn group_adjoint(&self) -> SuperMatrix<Element> {
        let g = |n| self.gen(n);
        let (a, ad, b, bd, e, ed) = (g("a"), g("a♦"), g("b"), g("b♦"), g("η"), g("η♦"));
        let h = |x: Element| x.scale(Scalar::ratio(1, 2));
        let ee = &e * &ed;
        let top = &self.one() + &ee.scale(Scalar::ratio(1, 4));
        let damp = &self.one() - &ee.scale(Scalar::ratio(1, 8));
        self.matrix3([
            [top, h(&(&ad * &e) + &(&b * &ed)), h(&(&bd * &e) - &(&a * &ed))],
            [h(ed.clone()), &ad * &damp, &bd * &damp],
            [h(e.clone()), -(&b * &damp), &a * &damp],
        ])
    }

    /// The finite exponential series of a matrix with nilpotent entries,
    /// with the index of its last nonzero term.
    pub fn nilpotent_exp(&self, x: &SuperMatrix<Element>) -> (SuperMatrix<Element>, usize) {
        let mut acc = SuperMatrix::identity(self.table(), x.rows());
        let mut term = acc.clone();
        let mut order = 0;
        for k in 1.. {
            term = term
                .matmul(x)
                .expect("square")
                .scale(&Coeff::ratio(1, k as i128))
                .reduce(self.group_rules());
            if term.is_zero() {
                break;
            }
            order = k;
            acc = acc.add(&term).expect("same shape");
        }
        (acc, order)
    }

    /// Compares `exp(ηR₊)·exp(η♦R₋)` with `exp(ηR₊ + η♦R₋)`.
    ///
    /// The two differ: the factors do not commute, and the product picks up
    /// `½ηη♦{R₊, R₋}`. The report carries both sides and the difference.
    pub fn nilpotent_exp_check(&self) -> NilpotentExpReport {
        let osp = self.osp12();
        let x = osp.r_plus.left_mul(&self.gen("η"));
        let y = osp.r_minus.left_mul(&self.gen("η♦"));
        let (ex, _) = self.nilpotent_exp(&x);
        let (ey, _) = self.nilpotent_exp(&y);
        let product = ex.matmul(&ey).expect("square").reduce(self.group_rules());
        let (combined, series_order) = self.nilpotent_exp(&x.add(&y).expect("same shape"));
        let difference = product.sub(&combined).expect("same shape");
        NilpotentExpReport {
            equal: difference.is_zero(),
            product,
            combined,
            difference,
            series_order,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_at_the_base_point() {
        let ss = Supersphere::shared();
        let s = ss.group_element();
        let zero = Element::zero(ss.table());
        let at = s.map(|x| {
            x.substitute(&[
                ("a", ss.one()),
                ("a♦", ss.one()),
                ("b", zero.clone()),
                ("b♦", zero.clone()),
                ("η", zero.clone()),
                ("η♦", zero.clone()),
            ])
            .unwrap()
        });
        assert_eq!(at, SuperMatrix::identity(ss.table(), shape3()));
    }

    #[test]
    fn exponential_of_zero_is_identity() {
        let ss = Supersphere::shared();
        let zero = ss.osp12().r_plus.scale(&Coeff::zero());
        let (e, order) = ss.nilpotent_exp(&zero);
        assert_eq!(order, 0);
        assert_eq!(e, SuperMatrix::identity(ss.table(), shape3()));
    }
}
