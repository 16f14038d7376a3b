use num_rational::Ratio;

use crate::algebra::Element;
use crate::error::{Error, Result};
use crate::forms::SuperForm;
use crate::matrix::SuperMatrix;
use crate::scalar::{Coeff, Scalar};

use super::Supersphere;

/// Base coordinates `x₀, x₁, x₂` (even, real) and `ξ₋, ξ₊` (odd) as
/// elements of the group algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct CoordinateSet {
    pub x: [Element; 3],
    pub xi_minus: Element,
    pub xi_plus: Element,
}

impl CoordinateSet {
    /// `(name, value)` pairs keyed by the coordinate generator names.
    pub fn as_map(&self) -> Vec<(&'static str, Element)> {
        vec![
            ("x0", self.x[0].clone()),
            ("x1", self.x[1].clone()),
            ("x2", self.x[2].clone()),
            ("ξ-", self.xi_minus.clone()),
            ("ξ+", self.xi_plus.clone()),
        ]
    }
}

/// One identity checked by substitution: `lhs` in the group generators,
/// `rhs` in the coordinate generators.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: Element,
    pub rhs: Element,
    /// `lhs − rhs(coordinates)` reduced by the group relation.
    pub residual: Element,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

const COORDS: [&str; 5] = ["x0", "x1", "x2", "ξ-", "ξ+"];

fn i_unit() -> Scalar {
    Scalar::i()
}

impl Supersphere {
    /// The coordinates of the adjoint orbit written in `a, b, η`:
    /// `x₀ = (aa♦ − bb♦)(1 − ¼ηη♦)`, `x₁ = (ab♦ + ba♦)(1 − ¼ηη♦)`,
    /// `x₂ = i(ab♦ − ba♦)(1 − ¼ηη♦)`, `ξ₋ = −½(aη♦ + ηb♦)`,
    /// `ξ₊ = ½(ηa♦ − bη♦)`.
    pub fn orbit_coordinates(&self) -> CoordinateSet {
        let g = |n| self.gen(n);
        let (a, ad, b, bd, e, ed) = (g("a"), g("a♦"), g("b"), g("b♦"), g("η"), g("η♦"));
        let damp = &self.one() - &(&e * &ed).scale(Scalar::ratio(1, 4));
        let x0 = &(&(&a * &ad) - &(&b * &bd)) * &damp;
        let x1 = &(&(&a * &bd) + &(&b * &ad)) * &damp;
        let x2 = (&(&(&a * &bd) - &(&b * &ad)) * &damp).scale(i_unit());
        let xi_minus = (&(&a * &ed) + &(&e * &bd)).scale(Scalar::ratio(-1, 2));
        let xi_plus = (&(&e * &ad) - &(&b * &ed)).scale(Scalar::ratio(1, 2));
        CoordinateSet {
            x: [x0, x1, x2],
            xi_minus,
            xi_plus,
        }
    }

    /// The projection `π(s) = s·(2/i)A₀·s†`.
    pub fn orbit_projection(&self) -> SuperMatrix<Element> {
        let s = self.group_element();
        let sd = s.dagger().expect("even matrix");
        let a0 = self.osp12().a[0].scale(&Coeff::from(Scalar::gaussian(
            Ratio::from_integer(0),
            Ratio::from_integer(-2),
        )));
        s.matmul(&a0)
            .and_then(|m| m.matmul(&sd))
            .expect("3×3 product")
            .reduce(self.group_rules())
    }

    /// Reads the coordinates off `π(s)` in the basis `(2/i)Aₖ`, `2R₊`,
    /// `2R₋`, whose coefficients are `xₖ`, `ξ₊`, `ξ₋`.
    pub fn base_coordinates(&self) -> Result<CoordinateSet> {
        let osp = self.osp12();
        let m2i = Coeff::from(Scalar::gaussian(Ratio::from_integer(0), Ratio::from_integer(-2)));
        let two = Coeff::int(2);
        let basis = [
            osp.a[0].scale(&m2i),
            osp.a[1].scale(&m2i),
            osp.a[2].scale(&m2i),
            osp.r_plus.scale(&two),
            osp.r_minus.scale(&two),
        ];
        let target = self.orbit_projection();
        let (c, residual) = SuperMatrix::decompose(&basis, &target)?;
        if !residual.reduce(self.group_rules()).is_zero() {
            return Err(Error::Consistency(format!(
                "s(2/i)A₀s† leaves the osp(1,2) span: residual {residual}"
            )));
        }
        let r = |x: &Element| self.reduce(x);
        Ok(CoordinateSet {
            x: [r(&c[0]), r(&c[1]), r(&c[2])],
            xi_plus: r(&c[3]),
            xi_minus: r(&c[4]),
        })
    }

    /// Pulls a coordinate expression back to the group generators.
    pub fn coordinates_to_group(&self, x: &Element) -> Element {
        let map = self.orbit_coordinates().as_map();
        self.reduce(&x.substitute(&map).expect("parity-preserving coordinates"))
    }

    pub fn coordinate_form_to_group(&self, x: &SuperForm) -> SuperForm {
        let map = self.orbit_coordinates().as_map();
        x.substitute(&map).expect("parity-preserving coordinates")
    }

    /// `Σxₖ² + 2ξ₋ξ₊` in the group generators, reduced.
    pub fn sphere_relation(&self) -> Element {
        let c = self.orbit_coordinates();
        let sq = c.x.iter().fold(Element::zero(self.table()), |acc, x| &acc + &(x * x));
        self.reduce(&(&sq + &(&c.xi_minus * &c.xi_plus).scale(Scalar::int(2))))
    }

    fn coord(&self) -> [Element; 5] {
        COORDS.map(|n| self.gen(n))
    }

    /// Coordinate images of the U(1)-invariant quadratics in `a, b, η`.
    /// Each pair `(u, v♦)` maps to a polynomial in `x, ξ`.
    fn pair_image(&self, u: &str, v: &str) -> Option<Element> {
        let [x0, x1, x2, xm, xp] = self.coord();
        let one = self.one();
        let h = Scalar::ratio(1, 2);
        let lift = &one + &(&xm * &xp);
        let zp = &x1 + &x2.scale(i_unit());
        let zm = &x1 - &x2.scale(i_unit());
        let img = match (u, v) {
            ("η", "η♦") => (&xm * &xp).scale(Scalar::int(4)),
            ("a", "a♦") => (&one + &(&x0 * &lift)).scale(h),
            ("b", "b♦") => (&one - &(&x0 * &lift)).scale(h),
            ("a", "b♦") => (&zm * &lift).scale(h),
            ("b", "a♦") => (&zp * &lift).scale(h),
            ("η", "a♦") => &(&(&one + &x0) * &xp) - &(&zp * &xm),
            ("η", "b♦") => &(&zm * &xp) - &(&(&one - &x0) * &xm),
            ("a", "η♦") => -(&(&zm * &xp) + &(&(&one + &x0) * &xm)),
            ("b", "η♦") => -(&(&zp * &xm) + &(&(&one - &x0) * &xp)),
            _ => return None,
        };
        Some(img)
    }

    /// The inversion identities expressing U(1)-invariant quadratics through
    /// the coordinates: `¼ηη♦ = ξ₋ξ₊`, `aa♦ = ½[1 + x₀(1 + ξ₋ξ₊)]`,
    /// `bb♦ = ½[1 − x₀(1 + ξ₋ξ₊)]`, `ab♦ = ½(x₁ − ix₂)(1 + ξ₋ξ₊)`,
    /// `ηa♦ = −(x₁ + ix₂)ξ₋ + (1 + x₀)ξ₊`,
    /// `ηb♦ = (x₁ − ix₂)ξ₊ − (1 − x₀)ξ₋`.
    pub fn inversion_identities(&self) -> Vec<IdentityCheck> {
        let [_, _, _, xm, xp] = self.coord();
        let mut out = vec![{
            let lhs = (&self.gen("η") * &self.gen("η♦")).scale(Scalar::ratio(1, 4));
            self.identity("¼ηη♦ = ξ₋ξ₊", lhs, &xm * &xp)
        }];
        for (name, u, v) in [
            ("aa♦", "a", "a♦"),
            ("bb♦", "b", "b♦"),
            ("ab♦", "a", "b♦"),
            ("ηa♦", "η", "a♦"),
            ("ηb♦", "η", "b♦"),
        ] {
            let lhs = &self.gen(u) * &self.gen(v);
            let rhs = self.pair_image(u, v).expect("listed pair");
            out.push(self.identity(name, lhs, rhs));
        }
        out
    }

    /// The conjugate identities used by [`Supersphere::to_base`] beyond the
    /// ones listed in [`Supersphere::inversion_identities`].
    pub fn conjugate_inversion_identities(&self) -> Vec<IdentityCheck> {
        [
            ("ηη♦", "η", "η♦"),
            ("ba♦", "b", "a♦"),
            ("aη♦", "a", "η♦"),
            ("bη♦", "b", "η♦"),
        ]
        .into_iter()
        .map(|(name, u, v)| {
            let lhs = &self.gen(u) * &self.gen(v);
            let rhs = self.pair_image(u, v).expect("listed pair");
            self.identity(name, lhs, rhs)
        })
        .collect()
    }

    fn identity(&self, name: &'static str, lhs: Element, rhs: Element) -> IdentityCheck {
        let residual = self.reduce(&(&lhs - &self.coordinates_to_group(&rhs)));
        IdentityCheck {
            name,
            lhs,
            rhs,
            residual,
        }
    }

    /// Rewrites a U(1)-invariant element of `a, a♦, b, b♦, η, η♦` in the
    /// base coordinates by splitting every monomial into charged pairs and
    /// replacing each pair by its coordinate image.
    ///
    /// The result is one representative modulo the sphere relation; callers
    /// compare by pulling back with [`Supersphere::coordinates_to_group`].
    pub fn to_base(&self, x: &Element) -> Result<Element> {
        let mut out = Element::zero(self.table());
        for t in x.terms() {
            let mut up: Vec<&str> = Vec::new();
            let mut down: Vec<&str> = Vec::new();
            let mut word: Vec<String> = Vec::new();
            for (name, e) in &t.even {
                let side = match name.as_str() {
                    "a" | "b" => &mut up,
                    "a♦" | "b♦" => &mut down,
                    other => {
                        return Err(Error::Contract(format!(
                            "`{other}` is not a group generator"
                        )))
                    }
                };
                for _ in 0..*e {
                    side.push(name.as_str());
                    word.push(name.clone());
                }
            }
            for name in &t.odd {
                match name.as_str() {
                    "η" => up.push("η"),
                    "η♦" => down.push("η♦"),
                    other => {
                        return Err(Error::Contract(format!(
                            "`{other}` is not a group generator"
                        )))
                    }
                }
                word.push(name.clone());
            }
            if up.len() != down.len() {
                return Err(Error::Contract(format!(
                    "term of U(1) charge {} has no coordinate expression",
                    up.len() as i64 - down.len() as i64
                )));
            }
            let pairs = pair_up(up, down);
            // sign of the paired product relative to the canonical monomial
            let mut paired = self.one();
            let mut image = self.constant(t.coeff.clone());
            for (u, v) in &pairs {
                paired = &paired * &(&self.gen(u) * &self.gen(v));
                image = &image * &self.pair_image(u, v).expect("charged pair");
            }
            let refs: Vec<&str> = word.iter().map(String::as_str).collect();
            let canonical = Element::normalize(self.table(), &[(Scalar::one(), &refs)])?;
            let sign = if paired == canonical {
                1
            } else if paired == -canonical {
                -1
            } else {
                unreachable!("pairing permutes the factors of one monomial")
            };
            out = &out + &image.scale(Scalar::int(sign));
        }
        Ok(out)
    }
}

/// Splits positive-charge factors `up` and negative-charge factors `down`
/// into pairs, preferring `ηη♦`, then same-letter pairs, then mixed pairs.
fn pair_up<'a>(mut up: Vec<&'a str>, mut down: Vec<&'a str>) -> Vec<(&'a str, &'a str)> {
    let mut pairs = Vec::new();
    let mut take = |u: &'a str, v: &'a str, up: &mut Vec<&'a str>, down: &mut Vec<&'a str>| -> bool {
        match (up.iter().position(|x| *x == u), down.iter().position(|x| *x == v)) {
            (Some(i), Some(j)) => {
                up.remove(i);
                down.remove(j);
                pairs.push((u, v));
                true
            }
            _ => false,
        }
    };
    for (u, v) in [
        ("η", "η♦"),
        ("a", "a♦"),
        ("b", "b♦"),
        ("a", "b♦"),
        ("b", "a♦"),
        ("η", "a♦"),
        ("η", "b♦"),
        ("a", "η♦"),
        ("b", "η♦"),
    ] {
        while take(u, v, &mut up, &mut down) {}
    }
    debug_assert!(up.is_empty() && down.is_empty());
    pairs
}

impl Supersphere {
    /// True for `x0, x1, x2, ξ-, ξ+`.
    pub fn is_coordinate_generator(&self, name: &str) -> bool {
        COORDS.contains(&name)
    }
}

impl Supersphere {
    /// The projector of `ψ_{∓n}` with every entry rewritten in base
    /// coordinates by [`Supersphere::to_base`].
    pub fn base_projector(&self, sign: super::Sign, n: u32) -> Result<SuperMatrix<Element>> {
        let p = self.projector_for(sign, n)?;
        let rows: Vec<Vec<Element>> = (0..p.nrows())
            .map(|i| p.row(i).iter().map(|x| self.to_base(x)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        SuperMatrix::from_rows(self.table(), p.rows(), p.cols(), p.declared_parity(), rows)
    }
}
