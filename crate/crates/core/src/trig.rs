//! Exact trigonometric polynomials on the sphere chart `(θ, φ)`.
//!
//! [`TrigPoly`] holds `cosᵖθ sin^qθ cosʳφ sinˢφ` terms with `q, s ∈ {0, 1}`
//! after rewriting `sin² = 1 − cos²`, which makes the representation unique.
//! [`HalfAngle`] holds polynomials in `C = cos(θ/2)`, `S = sin(θ/2)` and
//! `e^{ikφ}`, the natural coordinates of the group section; terms of even
//! half-angle degree convert back to a [`TrigPoly`].

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::Ratio;

use crate::scalar::{Coeff, Gaussian, Scalar};

/// Ring operations and chart derivatives shared by both function types.
pub trait ChartFunction: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn constant(c: Coeff) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn scale(&self, c: &Coeff) -> Self;
    fn d_theta(&self) -> Self;
    fn d_phi(&self) -> Self;
    /// The same function as a [`TrigPoly`], when it is one.
    fn to_trig(&self) -> Option<TrigPoly>;
    fn eval(&self, theta: f64, phi: f64) -> Complex64;

    fn one() -> Self {
        Self::constant(Coeff::one())
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Coeff::int(-1)))
    }
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, Coeff>, k: K, c: &Coeff) {
    if c.is_zero() {
        return;
    }
    *map.entry(k).or_default() += c;
}

fn prune<K: Ord + Clone>(map: &mut BTreeMap<K, Coeff>) {
    map.retain(|_, c| !c.is_zero());
}

fn binomial(n: u32, k: u32) -> i128 {
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r
}

/// Key `(p, q, r, s)` of `cosᵖθ sin^qθ cosʳφ sinˢφ`.
pub type TrigKey = (u32, u8, u32, u8);

#[derive(Clone, PartialEq, Eq, Default)]
pub struct TrigPoly {
    terms: BTreeMap<TrigKey, Coeff>,
}

impl TrigPoly {
    pub fn cos_theta() -> Self {
        TrigPoly::monomial(1, 0, 0, 0, Coeff::one())
    }

    pub fn sin_theta() -> Self {
        TrigPoly::monomial(0, 1, 0, 0, Coeff::one())
    }

    pub fn cos_phi() -> Self {
        TrigPoly::monomial(0, 0, 1, 0, Coeff::one())
    }

    pub fn sin_phi() -> Self {
        TrigPoly::monomial(0, 0, 0, 1, Coeff::one())
    }

    /// `c · cosᵖθ sin^qθ cosʳφ sinˢφ` for any exponents; normalizes.
    pub fn monomial(p: u32, q: u32, r: u32, s: u32, c: Coeff) -> Self {
        let mut t = TrigPoly::default();
        t.add_raw(p, q, r, s, &c);
        prune(&mut t.terms);
        t
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TrigKey, &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest `cos θ` and `cos φ` exponents, counting a sine as degree one.
    pub fn degrees(&self) -> (u32, u32) {
        self.terms
            .keys()
            .fold((0, 0), |(a, b), &(p, q, r, s)| (a.max(p + q as u32), b.max(r + s as u32)))
    }

    /// Adds `c·cosᵖθ sin^qθ cosʳφ sinˢφ` using `sin^{2m} = (1 − cos²)^m`.
    fn add_raw(&mut self, p: u32, q: u32, r: u32, s: u32, c: &Coeff) {
        let (mq, q0) = (q / 2, (q % 2) as u8);
        let (ms, s0) = (s / 2, (s % 2) as u8);
        for i in 0..=mq {
            let ci = binomial(mq, i) * if i % 2 == 1 { -1 } else { 1 };
            for j in 0..=ms {
                let cj = binomial(ms, j) * if j % 2 == 1 { -1 } else { 1 };
                let k = c.scale(&Scalar::int(ci * cj));
                add_into(&mut self.terms, (p + 2 * i, q0, r + 2 * j, s0), &k);
            }
        }
    }

    /// `e^{ikφ}` expanded in `cos φ`, `sin φ`.
    pub fn exp_i_phi(k: i32) -> Self {
        let unit = TrigPoly::cos_phi().add(&TrigPoly::sin_phi().scale(&Coeff::from(Scalar::i())));
        let mut out = TrigPoly::one();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&unit);
        }
        if k < 0 {
            out.conj()
        } else {
            out
        }
    }

    pub fn conj(&self) -> Self {
        TrigPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, c.conj())).collect(),
        }
    }
}

impl ChartFunction for TrigPoly {
    fn zero() -> Self {
        TrigPoly::default()
    }

    fn constant(c: Coeff) -> Self {
        TrigPoly::monomial(0, 0, 0, 0, c)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            add_into(&mut out.terms, *k, c);
        }
        prune(&mut out.terms);
        out
    }

    fn mul(&self, o: &Self) -> Self {
        let mut out = TrigPoly::default();
        for (&(p1, q1, r1, s1), c1) in &self.terms {
            for (&(p2, q2, r2, s2), c2) in &o.terms {
                out.add_raw(
                    p1 + p2,
                    (q1 + q2) as u32,
                    r1 + r2,
                    (s1 + s2) as u32,
                    &(c1 * c2),
                );
            }
        }
        prune(&mut out.terms);
        out
    }

    fn scale(&self, c: &Coeff) -> Self {
        let mut out = TrigPoly::default();
        for (k, x) in &self.terms {
            add_into(&mut out.terms, *k, &(x * c));
        }
        prune(&mut out.terms);
        out
    }

    fn d_theta(&self) -> Self {
        // d(cosᵖ sin^q) = −p cos^{p−1} sin^{q+1} + q cos^{p+1} sin^{q−1}
        let mut out = TrigPoly::default();
        for (&(p, q, r, s), c) in &self.terms {
            if p > 0 {
                out.add_raw(p - 1, q as u32 + 1, r, s as u32, &c.scale(&Scalar::int(-(p as i128))));
            }
            if q == 1 {
                out.add_raw(p + 1, 0, r, s as u32, c);
            }
        }
        prune(&mut out.terms);
        out
    }

    fn d_phi(&self) -> Self {
        let mut out = TrigPoly::default();
        for (&(p, q, r, s), c) in &self.terms {
            if r > 0 {
                out.add_raw(p, q as u32, r - 1, s as u32 + 1, &c.scale(&Scalar::int(-(r as i128))));
            }
            if s == 1 {
                out.add_raw(p, q as u32, r + 1, 0, c);
            }
        }
        prune(&mut out.terms);
        out
    }

    fn to_trig(&self) -> Option<TrigPoly> {
        Some(self.clone())
    }

    fn eval(&self, theta: f64, phi: f64) -> Complex64 {
        let (ct, st, cp, sp) = (theta.cos(), theta.sin(), phi.cos(), phi.sin());
        self.terms
            .iter()
            .map(|(&(p, q, r, s), c)| {
                c.to_c64()
                    * ct.powi(p as i32)
                    * st.powi(q as i32)
                    * cp.powi(r as i32)
                    * sp.powi(s as i32)
            })
            .sum()
    }
}

impl fmt::Debug for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(p, q, r, s), c)| {
                let mut factors = vec![format!("({c})")];
                for (e, name) in [(p, "cosθ"), (q as u32, "sinθ"), (r, "cosφ"), (s as u32, "sinφ")] {
                    match e {
                        0 => {}
                        1 => factors.push(name.to_string()),
                        _ => factors.push(format!("{name}^{e}")),
                    }
                }
                factors.join("·")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Key `(i, j, k)` of `Cⁱ S^j e^{ikφ}` with `j ∈ {0, 1}` after `S² = 1 − C²`.
type HalfKey = (u32, u8, i32);

/// Polynomial in `C = cos(θ/2)`, `S = sin(θ/2)` and `e^{±iφ}`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HalfAngle {
    terms: BTreeMap<HalfKey, Coeff>,
}

impl HalfAngle {
    pub fn c() -> Self {
        HalfAngle::monomial(1, 0, 0, Coeff::one())
    }

    pub fn s() -> Self {
        HalfAngle::monomial(0, 1, 0, Coeff::one())
    }

    /// `e^{ikφ}`.
    pub fn e(k: i32) -> Self {
        HalfAngle::monomial(0, 0, k, Coeff::one())
    }

    pub fn monomial(i: u32, j: u32, k: i32, c: Coeff) -> Self {
        let mut h = HalfAngle::default();
        h.add_raw(i, j, k, &c);
        prune(&mut h.terms);
        h
    }

    fn add_raw(&mut self, i: u32, j: u32, k: i32, c: &Coeff) {
        let (m, j0) = (j / 2, (j % 2) as u8);
        for t in 0..=m {
            let ct = binomial(m, t) * if t % 2 == 1 { -1 } else { 1 };
            add_into(&mut self.terms, (i + 2 * t, j0, k), &c.scale(&Scalar::int(ct)));
        }
    }
}

impl ChartFunction for HalfAngle {
    fn zero() -> Self {
        HalfAngle::default()
    }

    fn constant(c: Coeff) -> Self {
        HalfAngle::monomial(0, 0, 0, c)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            add_into(&mut out.terms, *k, c);
        }
        prune(&mut out.terms);
        out
    }

    fn mul(&self, o: &Self) -> Self {
        let mut out = HalfAngle::default();
        for (&(i1, j1, k1), c1) in &self.terms {
            for (&(i2, j2, k2), c2) in &o.terms {
                out.add_raw(i1 + i2, (j1 + j2) as u32, k1 + k2, &(c1 * c2));
            }
        }
        prune(&mut out.terms);
        out
    }

    fn scale(&self, c: &Coeff) -> Self {
        let mut out = HalfAngle::default();
        for (k, x) in &self.terms {
            add_into(&mut out.terms, *k, &(x * c));
        }
        prune(&mut out.terms);
        out
    }

    fn d_theta(&self) -> Self {
        // dC/dθ = −S/2, dS/dθ = C/2
        let half = Scalar::ratio(1, 2);
        let mut out = HalfAngle::default();
        for (&(i, j, k), c) in &self.terms {
            if i > 0 {
                out.add_raw(i - 1, j as u32 + 1, k, &c.scale(&(Scalar::int(-(i as i128)) * half)));
            }
            if j == 1 {
                out.add_raw(i + 1, 0, k, &c.scale(&half));
            }
        }
        prune(&mut out.terms);
        out
    }

    fn d_phi(&self) -> Self {
        let mut out = HalfAngle::default();
        for (&(i, j, k), c) in &self.terms {
            let f = Scalar::gaussian(Ratio::from_integer(0), Ratio::from_integer(k as i128));
            add_into(&mut out.terms, (i, j, k), &c.scale(&f));
        }
        prune(&mut out.terms);
        out
    }

    /// `C² = (1 + cos θ)/2`, `CS = sin θ / 2`; fails on odd half-angle degree.
    fn to_trig(&self) -> Option<TrigPoly> {
        let half = Coeff::ratio(1, 2);
        let c2 = TrigPoly::one().add(&TrigPoly::cos_theta()).scale(&half);
        let cs = TrigPoly::sin_theta().scale(&half);
        let mut c2_pows: HashMap<u32, TrigPoly> = HashMap::new();
        let mut e_pows: HashMap<i32, TrigPoly> = HashMap::new();
        let mut out = TrigPoly::zero();
        for (&(i, j, k), c) in &self.terms {
            if (i + j as u32) % 2 == 1 {
                return None;
            }
            let m = (i - j as u32) / 2;
            let mut t = c2_pows
                .entry(m)
                .or_insert_with(|| {
                    let mut x = TrigPoly::one();
                    for _ in 0..m {
                        x = x.mul(&c2);
                    }
                    x
                })
                .clone();
            if j == 1 {
                t = t.mul(&cs);
            }
            let e = e_pows.entry(k).or_insert_with(|| TrigPoly::exp_i_phi(k));
            out = out.add(&t.mul(e).scale(c));
        }
        Some(out)
    }

    fn eval(&self, theta: f64, phi: f64) -> Complex64 {
        let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
        self.terms
            .iter()
            .map(|(&(i, j, k), x)| {
                x.to_c64() * c.powi(i as i32) * s.powi(j as i32) * Complex64::from_polar(1.0, k as f64 * phi)
            })
            .sum()
    }
}

impl fmt::Debug for HalfAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(i, j, k), c)| format!("({c})·C^{i}·S^{j}·e^{{{k}iφ}}"))
            .collect();
        write!(f, "{}", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

impl From<Gaussian> for TrigPoly {
    fn from(g: Gaussian) -> Self {
        TrigPoly::constant(Coeff::from(g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sine_squared_normalizes() {
        let s2 = TrigPoly::sin_theta().mul(&TrigPoly::sin_theta());
        let c2 = TrigPoly::cos_theta().mul(&TrigPoly::cos_theta());
        assert_eq!(s2.add(&c2), TrigPoly::one());
    }

    #[test]
    fn half_angle_squares() {
        let c = HalfAngle::c();
        let s = HalfAngle::s();
        let cos = c.mul(&c).sub(&s.mul(&s)).to_trig().unwrap();
        assert_eq!(cos, TrigPoly::cos_theta());
        let sin = c.mul(&s).scale(&Coeff::int(2)).to_trig().unwrap();
        assert_eq!(sin, TrigPoly::sin_theta());
        assert!(c.to_trig().is_none());
    }

    #[test]
    fn exp_i_phi_is_multiple_angle() {
        let e2 = TrigPoly::exp_i_phi(2);
        let (t, p) = (0.3, 1.1);
        let want = Complex64::from_polar(1.0, 2.0 * p);
        assert!((e2.eval(t, p) - want).norm() < 1e-14);
        let back = TrigPoly::exp_i_phi(2).mul(&TrigPoly::exp_i_phi(-2));
        assert_eq!(back, TrigPoly::one());
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let f = TrigPoly::monomial(3, 1, 2, 1, Coeff::ratio(2, 3));
        let (t, p, h) = (0.7, 2.1, 1e-6);
        let num_t = (f.eval(t + h, p) - f.eval(t - h, p)) / (2.0 * h);
        let num_p = (f.eval(t, p + h) - f.eval(t, p - h)) / (2.0 * h);
        assert!((f.d_theta().eval(t, p) - num_t).norm() < 1e-8);
        assert!((f.d_phi().eval(t, p) - num_p).norm() < 1e-8);
    }
}
