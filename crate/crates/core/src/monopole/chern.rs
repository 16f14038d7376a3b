use num_rational::Ratio;

use crate::algebra::Element;
use crate::error::Result;
use crate::forms::SuperForm;
use crate::matrix::SuperMatrix;
use crate::scalar::{Coeff, Scalar};

use super::psi::pairing;
use super::{PsiVector, Sign, Supersphere};

/// `−1/(2πi) = i/(2π)`, the normalization of the first Chern form.
pub fn chern_prefactor() -> Scalar {
    Scalar::gaussian(Ratio::from_integer(0), Ratio::new(1, 2)) * Scalar::pi_pow(-1)
}

/// The three expressions for the first Chern form of one projector, each
/// already multiplied by `−1/(2πi)`.
#[derive(Clone, Debug)]
pub struct ChernChain {
    pub sign: Sign,
    pub n: u32,
    /// `−(1/2πi) Str(p(dp)²)`.
    pub supertrace: SuperForm,
    /// `−(1/2πi) ⟨dψ|dψ⟩`.
    pub bracket: SuperForm,
    /// The first closed form, in `(da da♦ + db db♦)`, `(a da♦ + b db♦)` and
    /// `dη dη♦`.
    pub closed: SuperForm,
    /// The second closed form, in `d(aη♦)d(ηa♦)` and `d(bη♦)d(ηb♦)`.
    pub closed_alt: SuperForm,
}

impl Supersphere {
    fn form(&self, x: &Element) -> SuperForm {
        SuperForm::from(x)
    }

    fn dgen(&self, name: &str) -> SuperForm {
        self.gen(name).d()
    }

    /// `A = ⟨ψ|dψ⟩`.
    pub fn connection_form(&self, psi: &PsiVector) -> SuperForm {
        let psi_f: Vec<SuperForm> = psi.components.iter().map(|x| self.form(x)).collect();
        pairing(&psi_f, &psi.d()).expect("same length")
    }

    /// `A₋ₙ = (n − ¼ηη♦)(a da♦ + b db♦) + ⅛(η dη♦ + η♦ dη)`; `A₊ₙ = −A₋ₙ`.
    pub fn connection_closed_form(&self, sign: Sign, n: u32) -> SuperForm {
        let g = |x| self.gen(x);
        let f = |x: &Element| self.form(x);
        let (e, ed) = (g("η"), g("η♦"));
        let weight = &self.constant(Coeff::int(n as i128)) - &(&e * &ed).scale(Scalar::ratio(1, 4));
        let radial = &(&f(&g("a")) * &self.dgen("a♦")) + &(&f(&g("b")) * &self.dgen("b♦"));
        let odd = (&(&f(&e) * &self.dgen("η♦")) + &(&f(&ed) * &self.dgen("η"))).scale(Scalar::ratio(1, 8));
        let a = &(&f(&weight) * &radial) + &odd;
        match sign {
            Sign::Minus => a,
            Sign::Plus => -a,
        }
    }

    /// `p·dp·dp` with entrywise `d`.
    pub fn curvature(&self, p: &SuperMatrix<Element>) -> SuperMatrix<SuperForm> {
        let pf = p.map(|x| self.form(x));
        let dp = p.map(Element::d);
        pf.matmul(&dp)
            .and_then(|m| m.matmul(&dp))
            .expect("square projector")
    }

    /// `p_{αβ}·⟨dψ|dψ⟩`. The curvature [`Self::curvature`] is congruent to its
    /// negative.
    pub fn curvature_through_psi(&self, psi: &PsiVector) -> SuperMatrix<SuperForm> {
        let dpsi = psi.d();
        let f = pairing(&dpsi, &dpsi).expect("same length");
        self.projector(psi).map(|x| &self.form(x) * &f)
    }

    /// `Str(p(dp)²)`, forming only the diagonal of the last product.
    pub fn supertrace_curvature(&self, p: &SuperMatrix<Element>) -> SuperForm {
        let pf = p.map(|x| self.form(x));
        let dp = p.map(Element::d);
        let m = pf
            .matmul(&dp)
            .expect("square projector")
            .map(|x| self.reduce_form(x));
        self.reduce_form(&m.supertrace_of_product(&dp).expect("even square"))
    }

    /// `C₁ = −(1/2πi) Str(p(dp)²)` for the projector of `ψ_{∓n}`.
    ///
    /// With the projector convention of [`Supersphere::projector`] this is
    /// the negative of `−(1/2πi)⟨dψ|dψ⟩` modulo the differential ideal, so
    /// the Chern number of `p₋ₙ` comes out as `−n`.
    pub fn chern_form(&self, sign: Sign, n: u32) -> Result<SuperForm> {
        let p = self.projector_for(sign, n)?;
        Ok(self.supertrace_curvature(&p).scale(chern_prefactor()))
    }

    /// `−(1/2πi)[(da da♦ + db db♦)(n − ¼ηη♦) + ¼(a da♦ + b db♦)(η dη♦ − η♦ dη)
    /// + ¼ dη dη♦]`, negated for sign `+`.
    pub fn chern_closed_form(&self, sign: Sign, n: u32) -> SuperForm {
        let g = |x| self.gen(x);
        let f = |x: &Element| self.form(x);
        let (e, ed) = (g("η"), g("η♦"));
        let area = &(&self.dgen("a") * &self.dgen("a♦")) + &(&self.dgen("b") * &self.dgen("b♦"));
        let weight = &self.constant(Coeff::int(n as i128)) - &(&e * &ed).scale(Scalar::ratio(1, 4));
        let radial = &(&f(&g("a")) * &self.dgen("a♦")) + &(&f(&g("b")) * &self.dgen("b♦"));
        let odd = &(&f(&e) * &self.dgen("η♦")) - &(&f(&ed) * &self.dgen("η"));
        let c = &(&(&area * &f(&weight)) + &(&radial * &odd).scale(Scalar::ratio(1, 4)))
            + &(&self.dgen("η") * &self.dgen("η♦")).scale(Scalar::ratio(1, 4));
        self.signed(sign, c.scale(chern_prefactor()))
    }

    /// `−(1/2πi)[n(da da♦ + db db♦) + ¼d(aη♦)d(ηa♦) + ¼d(bη♦)d(ηb♦)]`,
    /// negated for sign `+`.
    pub fn chern_closed_form_alt(&self, sign: Sign, n: u32) -> SuperForm {
        let area = &(&self.dgen("a") * &self.dgen("a♦")) + &(&self.dgen("b") * &self.dgen("b♦"));
        let pair = |u: &str, v: &str, x: &str, y: &str| {
            (&self.gen(u) * &self.gen(v)).d() * (&self.gen(x) * &self.gen(y)).d()
        };
        let c = &(&area.scale(Scalar::int(n as i128))
            + &pair("a", "η♦", "η", "a♦").scale(Scalar::ratio(1, 4)))
            + &pair("b", "η♦", "η", "b♦").scale(Scalar::ratio(1, 4));
        self.signed(sign, c.scale(chern_prefactor()))
    }

    fn signed(&self, sign: Sign, c: SuperForm) -> SuperForm {
        match sign {
            Sign::Minus => c,
            Sign::Plus => -c,
        }
    }

    /// All routes to `C₁` for one projector.
    pub fn chern_chain(&self, sign: Sign, n: u32) -> Result<ChernChain> {
        let psi = self.psi(sign, n)?;
        let dpsi = psi.d();
        let bracket = self
            .reduce_form(&pairing(&dpsi, &dpsi).expect("same length"))
            .scale(chern_prefactor());
        Ok(ChernChain {
            sign,
            n,
            supertrace: self.chern_form(sign, n)?,
            bracket,
            closed: self.chern_closed_form(sign, n),
            closed_alt: self.chern_closed_form_alt(sign, n),
        })
    }

    /// The closed form [`Self::chern_closed_form`] for sign `−`, written in
    /// the base coordinates:
    /// `(n/4π)(x₀dx₁dx₂ + x₁dx₂dx₀ + x₂dx₀dx₁)(1 + 3ξ₋ξ₊)
    /// + (1/4πi)[(dx₁ − idx₂)ξ₊dξ₊ − (dx₁ + idx₂)ξ₋dξ₋ + dx₀(ξ₋dξ₊ + ξ₊dξ₋)
    /// + (x₁ − ix₂)dξ₊dξ₊ − (x₁ + ix₂)dξ₋dξ₋ + 2x₀dξ₋dξ₊]`.
    pub fn coordinate_chern_form(&self, n: u32) -> SuperForm {
        let g = |x| self.gen(x);
        let f = |x: &Element| self.form(x);
        let d = |x| self.dgen(x);
        let (x0, x1, x2, xm, xp) = (g("x0"), g("x1"), g("x2"), g("ξ-"), g("ξ+"));
        let i = Scalar::i();
        let vol = &(&(&f(&x0) * &d("x1")) * &d("x2"))
            + &(&(&(&f(&x1) * &d("x2")) * &d("x0")) + &(&(&f(&x2) * &d("x0")) * &d("x1")));
        let lift = &self.one() + &(&xm * &xp).scale(Scalar::int(3));
        let body = (&vol * &f(&lift)).scale(Scalar::int(n as i128) * Scalar::ratio(1, 4) * Scalar::pi_pow(-1));
        let dz_minus = &d("x1") - &d("x2").scale(i);
        let dz_plus = &d("x1") + &d("x2").scale(i);
        let z_minus = &x1 - &x2.scale(i);
        let z_plus = &x1 + &x2.scale(i);
        let terms = [
            &(&dz_minus * &f(&xp)) * &d("ξ+"),
            -(&(&dz_plus * &f(&xm)) * &d("ξ-")),
            &d("x0") * &(&(&f(&xm) * &d("ξ+")) + &(&f(&xp) * &d("ξ-"))),
            &(&f(&z_minus) * &d("ξ+")) * &d("ξ+"),
            -(&(&f(&z_plus) * &d("ξ-")) * &d("ξ-")),
            (&(&f(&x0) * &d("ξ-")) * &d("ξ+")).scale(Scalar::int(2)),
        ];
        let odd = terms
            .iter()
            .fold(SuperForm::zero(self.table()), |acc, t| &acc + t);
        // 1/(4πi) = −i/(4π)
        let k = Scalar::gaussian(Ratio::from_integer(0), Ratio::new(-1, 4)) * Scalar::pi_pow(-1);
        &body + &odd.scale(k)
    }
}
