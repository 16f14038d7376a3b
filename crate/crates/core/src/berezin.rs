//! Berezin integration over `S^{2,2}` and the first Chern number.
//!
//! The Berezin integral of a basic superform is the ordinary integral of its
//! body over `S²`. Forms are body-projected, pulled back along an explicit
//! chart in `(θ, φ)`, and integrated exactly with the Wallis formulas; a
//! Gauss–Legendre product rule serves as an independent numeric oracle.

use std::collections::HashMap;
use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use num_complex::Complex64;
use num_rational::Ratio;

use crate::algebra::{Element, Parity};
use crate::error::{Error, Result};
use crate::forms::SuperForm;
use crate::monopole::{Sign, Supersphere};
use crate::scalar::{Coeff, Rational, Scalar};
use crate::trig::{ChartFunction, HalfAngle, TrigPoly};

/// Gauss points per variable in [`quad_oracle`] unless overridden.
pub const DEFAULT_QUAD_ORDER: usize = 64;

/// `∏_{k=1}^{m} (2k−1)/(2k)`, i.e. `(2m−1)!!/(2m)!!`.
fn wallis_ratio(m: u32) -> Rational {
    (1..=m as i128).fold(Ratio::from_integer(1), |acc, k| acc * Ratio::new(2 * k - 1, 2 * k))
}

/// `∫₀^π cosᵖθ sin^qθ dθ` for `q ∈ {0, 1}`.
pub fn wallis_theta(p: u32, q: u8) -> Coeff {
    if p % 2 == 1 {
        return Coeff::zero();
    }
    match q {
        0 => Coeff::from(Scalar::gaussian(wallis_ratio(p / 2), Ratio::from_integer(0)) * Scalar::pi_pow(1)),
        _ => Coeff::ratio(2, p as i128 + 1),
    }
}

/// `∫₀^{2π} cosʳφ sinˢφ dφ` for `s ∈ {0, 1}`.
pub fn wallis_phi(r: u32, s: u8) -> Coeff {
    if s == 1 || r % 2 == 1 {
        return Coeff::zero();
    }
    Coeff::from(Scalar::gaussian(wallis_ratio(r / 2) * Ratio::from_integer(2), Ratio::from_integer(0)) * Scalar::pi_pow(1))
}

/// Exact `∫₀^π ∫₀^{2π} f dφ dθ`.
pub fn wallis_integrate(f: &TrigPoly) -> Coeff {
    let mut acc = Coeff::zero();
    for (&(p, q, r, s), c) in f.terms() {
        let t = wallis_theta(p, q);
        if t.is_zero() {
            continue;
        }
        acc += &(&(c * &t) * &wallis_phi(r, s));
    }
    acc
}

/// Product Gauss–Legendre approximation of the same integral.
pub fn quad_oracle(f: &TrigPoly, order: NonZeroUsize) -> Complex64 {
    let rule = GaussLegendre::new(order);
    let pi = std::f64::consts::PI;
    let part = |g: &dyn Fn(Complex64) -> f64| {
        rule.integrate(0.0, pi, |t| rule.integrate(0.0, 2.0 * pi, |p| g(f.eval(t, p))))
    };
    Complex64::new(part(&|z| z.re), part(&|z| z.im))
}

/// [`quad_oracle`] at [`DEFAULT_QUAD_ORDER`].
pub fn quad_oracle_default(f: &TrigPoly) -> Complex64 {
    quad_oracle(f, NonZeroUsize::new(DEFAULT_QUAD_ORDER).expect("positive"))
}

/// Which of the two chart variables comes first in the orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    ThetaPhi,
    PhiTheta,
}

/// A 2-form on the chart: `f + g dθ + h dφ + k dθ∧dφ`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChartForm<F> {
    pub function: F,
    pub d_theta: F,
    pub d_phi: F,
    pub area: F,
}

impl<F: ChartFunction> ChartForm<F> {
    fn function(f: F) -> Self {
        ChartForm {
            function: f,
            d_theta: F::zero(),
            d_phi: F::zero(),
            area: F::zero(),
        }
    }

    fn exact(f: &F) -> Self {
        ChartForm {
            function: F::zero(),
            d_theta: f.d_theta(),
            d_phi: f.d_phi(),
            area: F::zero(),
        }
    }

    fn wedge(&self, o: &Self) -> Self {
        ChartForm {
            function: self.function.mul(&o.function),
            d_theta: self.function.mul(&o.d_theta).add(&self.d_theta.mul(&o.function)),
            d_phi: self.function.mul(&o.d_phi).add(&self.d_phi.mul(&o.function)),
            area: self
                .function
                .mul(&o.area)
                .add(&self.area.mul(&o.function))
                .add(&self.d_theta.mul(&o.d_phi))
                .sub(&self.d_phi.mul(&o.d_theta)),
        }
    }

    fn add(&self, o: &Self) -> Self {
        ChartForm {
            function: self.function.add(&o.function),
            d_theta: self.d_theta.add(&o.d_theta),
            d_phi: self.d_phi.add(&o.d_phi),
            area: self.area.add(&o.area),
        }
    }
}

/// An assignment of chart functions to generators.
#[derive(Clone, Debug)]
pub struct Chart<F> {
    images: HashMap<usize, F>,
}

impl<F: ChartFunction> Chart<F> {
    pub fn new(ss: &Supersphere, images: Vec<(&str, F)>) -> Result<Self> {
        let mut out = HashMap::new();
        for (name, f) in images {
            out.insert(ss.table().lookup(name)?, f);
        }
        Ok(Chart { images: out })
    }

    /// Pulls back a form without odd content.
    pub fn pullback(&self, omega: &SuperForm) -> Result<ChartForm<F>> {
        let table = omega.table();
        let n = table.len();
        let mut cache: HashMap<usize, ChartForm<F>> = HashMap::new();
        let mut acc = ChartForm::function(F::zero());
        for (m, c) in &omega.0.terms {
            let mut term = ChartForm::function(F::constant(c.clone()));
            for &(s, e) in m.items() {
                let s = s as usize;
                let k = s % n;
                if table.generator(k).parity == Parity::Odd {
                    return Err(Error::Contract(format!(
                        "pullback needs a body-projected form; found `{}`",
                        table.symbol_name(s)
                    )));
                }
                let factor = match cache.get(&s) {
                    Some(f) => f.clone(),
                    None => {
                        let img = self.images.get(&k).ok_or_else(|| {
                            Error::Contract(format!(
                                "chart has no image for `{}`",
                                table.generator(k).name
                            ))
                        })?;
                        let f = if s < n {
                            ChartForm::function(img.clone())
                        } else {
                            ChartForm::exact(img)
                        };
                        cache.insert(s, f.clone());
                        f
                    }
                };
                for _ in 0..e {
                    term = term.wedge(&factor);
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

/// Group-section chart `a = cos(θ/2)e^{iφ}`, `b = sin(θ/2)`, `η = 0`.
pub fn group_chart(ss: &Supersphere) -> Chart<HalfAngle> {
    let (c, s) = (HalfAngle::c(), HalfAngle::s());
    Chart::new(
        ss,
        vec![
            ("a", c.mul(&HalfAngle::e(1))),
            ("a♦", c.mul(&HalfAngle::e(-1))),
            ("b", s.clone()),
            ("b♦", s),
        ],
    )
    .expect("group generators")
}

/// Base chart `x₀ = cos θ`, `x₁ = sin θ cos φ`, `x₂ = sin θ sin φ`.
pub fn base_chart(ss: &Supersphere) -> Chart<TrigPoly> {
    Chart::new(
        ss,
        vec![
            ("x0", TrigPoly::cos_theta()),
            ("x1", TrigPoly::sin_theta().mul(&TrigPoly::cos_phi())),
            ("x2", TrigPoly::sin_theta().mul(&TrigPoly::sin_phi())),
        ],
    )
    .expect("coordinate generators")
}

/// `σ₀dσ₁dσ₂ + σ₁dσ₂dσ₀ + σ₂dσ₀dσ₁` for three functions `σ`.
pub fn volume_form(sigma: &[Element; 3]) -> SuperForm {
    let [s0, s1, s2] = sigma;
    let t = |x: &Element, y: &Element, z: &Element| &(&SuperForm::from(x) * &y.d()) * &z.d();
    &(&t(s0, s1, s2) + &t(s1, s2, s0)) + &t(s2, s0, s1)
}

fn integrate_area(area: &TrigPoly, orientation: Orientation) -> Coeff {
    let v = wallis_integrate(area);
    match orientation {
        Orientation::ThetaPhi => v,
        Orientation::PhiTheta => -&v,
    }
}

fn area_density<F: ChartFunction>(form: &ChartForm<F>) -> Result<TrigPoly> {
    if !form.function.is_zero() || !form.d_theta.is_zero() || !form.d_phi.is_zero() {
        return Err(Error::Contract("integrand is not a pure 2-form".into()));
    }
    form.area
        .to_trig()
        .ok_or_else(|| Error::Consistency("pulled-back density is not a function of (θ, φ)".into()))
}

/// `(1/4π)∫` of the reference volume `σ₀dσ₁dσ₂ + cyc.` with `σ` the body
/// of the orbit coordinates, pulled back along the group-section chart.
pub fn group_normalizer(ss: &Supersphere, orientation: Orientation) -> Result<Coeff> {
    let c = ss.orbit_coordinates();
    let sigma = [c.x[0].body(), c.x[1].body(), c.x[2].body()];
    let pulled = group_chart(ss).pullback(&volume_form(&sigma))?;
    let v = integrate_area(&area_density(&pulled)?, orientation);
    Ok(v.scale(&(Scalar::ratio(1, 4) * Scalar::pi_pow(-1))))
}

/// Every intermediate of the Chern number computation.
#[derive(Clone, Debug)]
pub struct ChernComputation {
    pub sign: Sign,
    pub n: u32,
    /// Body of `C₁` pulled back along the group chart, as `f dθ∧dφ`.
    pub density: TrigPoly,
    pub integral: Coeff,
    pub normalizer: Coeff,
    pub charge: i64,
}

/// The Chern number pipeline: `C₁` → body → group chart → Wallis →
/// divide by the normalizer.
pub fn chern_computation(
    ss: &Supersphere,
    sign: Sign,
    n: u32,
    orientation: Orientation,
) -> Result<ChernComputation> {
    let c1 = ss.chern_form(sign, n)?.body_project();
    let pulled = group_chart(ss).pullback(&c1)?;
    let density = area_density(&pulled)?;
    let integral = integrate_area(&density, orientation);
    let normalizer = group_normalizer(ss, orientation)?;
    let charge = exact_integer(&integral, &normalizer)?;
    Ok(ChernComputation {
        sign,
        n,
        density,
        integral,
        normalizer,
        charge,
    })
}

fn exact_integer(integral: &Coeff, normalizer: &Coeff) -> Result<i64> {
    let inv = normalizer
        .inv()
        .ok_or_else(|| Error::Consistency(format!("normalizer {normalizer} is not invertible")))?;
    let q = integral * &inv;
    q.as_integer()
        .and_then(|k| i64::try_from(k).ok())
        .ok_or_else(|| Error::Consistency(format!("Chern number {q} is not an integer")))
}

/// First Chern number of the projector of `ψ_{∓n}`.
pub fn chern_number(sign: Sign, n: u32) -> Result<i64> {
    Ok(chern_computation(Supersphere::shared(), sign, n, Orientation::ThetaPhi)?.charge)
}

/// Berezin integral of a 2-superform in the coordinate generators
/// `x0, x1, x2, ξ-, ξ+`: body projection, then the base chart.
pub fn berezin_integral(ss: &Supersphere, omega: &SuperForm) -> Result<Coeff> {
    for t in omega.terms() {
        for name in t
            .wedge
            .iter()
            .map(|w| w.trim_start_matches('d').to_string())
            .chain(t.coeff.terms().into_iter().flat_map(|v| {
                v.even
                    .into_iter()
                    .map(|(g, _)| g)
                    .chain(v.odd)
                    .collect::<Vec<_>>()
            }))
        {
            if !ss.is_coordinate_generator(&name) {
                return Err(Error::Contract(format!(
                    "`{name}` is not a base coordinate"
                )));
            }
        }
    }
    let pulled = base_chart(ss).pullback(&omega.body_project())?;
    Ok(integrate_area(&area_density(&pulled)?, Orientation::ThetaPhi))
}

/// The Chern number computed in base coordinates from the pair-inverted
/// projector: `−(1/2πi)∫ Str(p(dp)²)` with `p` written in `x, ξ` and
/// body-projected before differentiating.
pub fn base_chern_number(ss: &Supersphere, sign: Sign, n: u32) -> Result<i64> {
    let p = ss.base_projector(sign, n)?.map(Element::body);
    let c1 = ss.supertrace_curvature(&p).scale(crate::monopole::chern_prefactor());
    let v = berezin_integral(ss, &c1)?;
    exact_integer(&v, &Coeff::one())
}
