//! Exact coefficients: Gaussian rationals times a square-free radical times a
//! power of π.
//!
//! A [`Scalar`] is a single such product. Sums of scalars whose radical or
//! π-exponent differ cannot be collapsed, so every coefficient stored in an
//! expression is a [`Coeff`]: a short sorted list of scalars keyed by their
//! [`Surd`] part. In practice almost every coefficient has exactly one entry.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;

/// Exact rational number. Arithmetic is checked; an overflow aborts rather
/// than silently producing a wrong value.
pub type Rational = Ratio<i128>;

fn q_add(x: &Rational, y: &Rational) -> Rational {
    x.checked_add(y).expect("exact rational overflow in addition")
}

fn q_sub(x: &Rational, y: &Rational) -> Rational {
    x.checked_sub(y).expect("exact rational overflow in subtraction")
}

fn q_mul(x: &Rational, y: &Rational) -> Rational {
    x.checked_mul(y).expect("exact rational overflow in multiplication")
}

fn q_to_f64(x: &Rational) -> f64 {
    x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN)
}

/// Complex rational `re + i·im`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub const fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn zero() -> Self {
        Gaussian::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Gaussian::new(Rational::one(), Rational::zero())
    }

    pub fn i() -> Self {
        Gaussian::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i128) -> Self {
        Gaussian::new(Rational::from_integer(n), Rational::zero())
    }

    pub fn from_ratio(num: i128, den: i128) -> Self {
        Gaussian::new(Rational::new(num, den), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gaussian::new(self.re, -self.im)
    }

    pub fn norm_sqr(&self) -> Rational {
        q_add(&q_mul(&self.re, &self.re), &q_mul(&self.im, &self.im))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Gaussian::new(self.re / n, -self.im / n))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Gaussian::new(q_mul(&self.re, k), q_mul(&self.im, k))
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(q_to_f64(&self.re), q_to_f64(&self.im))
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, o: Gaussian) -> Gaussian {
        Gaussian::new(q_add(&self.re, &o.re), q_add(&self.im, &o.im))
    }
}

impl Sub for Gaussian {
    type Output = Gaussian;
    fn sub(self, o: Gaussian) -> Gaussian {
        Gaussian::new(q_sub(&self.re, &o.re), q_sub(&self.im, &o.im))
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, o: Gaussian) -> Gaussian {
        Gaussian::new(
            q_sub(&q_mul(&self.re, &o.re), &q_mul(&self.im, &o.im)),
            q_add(&q_mul(&self.re, &o.im), &q_mul(&self.im, &o.re)),
        )
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => {
                if self.im == Rational::one() {
                    write!(f, "i")
                } else if self.im == -Rational::one() {
                    write!(f, "-i")
                } else {
                    write!(f, "{}i", self.im)
                }
            }
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "({} {} {}i)", self.re, sign, self.im.abs())
            }
        }
    }
}

/// The irrational part of a [`Scalar`]: `√radical · π^pi_exp`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Surd {
    radical: u64,
    pi_exp: i32,
}

impl Surd {
    pub const ONE: Surd = Surd { radical: 1, pi_exp: 0 };

    /// `radical` must be square-free and positive.
    pub fn new(radical: u64, pi_exp: i32) -> Option<Self> {
        if radical == 0 || square_part(radical).0 != 1 {
            return None;
        }
        Some(Surd { radical, pi_exp })
    }

    pub fn radical(&self) -> u64 {
        self.radical
    }

    pub fn pi_exp(&self) -> i32 {
        self.pi_exp
    }

    pub fn is_one(&self) -> bool {
        *self == Surd::ONE
    }

    /// `√m·√m' = g·√(mm'/g²)` with `g = gcd(m, m')` for square-free `m, m'`.
    pub fn mul(&self, o: &Surd) -> (u64, Surd) {
        let g = self.radical.gcd(&o.radical);
        let radical = (self.radical / g)
            .checked_mul(o.radical / g)
            .expect("radical overflow");
        (
            g,
            Surd {
                radical,
                pi_exp: self.pi_exp + o.pi_exp,
            },
        )
    }

    pub fn to_f64(&self) -> f64 {
        (self.radical as f64).sqrt() * std::f64::consts::PI.powi(self.pi_exp)
    }
}

/// Splits `n = s²·m` with `m` square-free; returns `(s, m)`.
pub fn square_part(mut n: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut m = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        let mut k = 0;
        while n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        s *= p.pow(k / 2);
        if k % 2 == 1 {
            m *= p;
        }
        p += 1;
    }
    (s, m * n)
}

/// A single exact number `value · √radical · π^pi_exp`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    pub value: Gaussian,
    pub surd: Surd,
}

impl Scalar {
    pub fn new(value: Gaussian, surd: Surd) -> Self {
        if value.is_zero() {
            return Scalar::zero();
        }
        Scalar { value, surd }
    }

    /// Canonical zero: `(0, 0, radical 1, pi_exp 0)`.
    pub fn zero() -> Self {
        Scalar {
            value: Gaussian::zero(),
            surd: Surd::ONE,
        }
    }

    pub fn one() -> Self {
        Scalar::int(1)
    }

    pub fn int(n: i128) -> Self {
        Scalar::new(Gaussian::from_int(n), Surd::ONE)
    }

    pub fn ratio(num: i128, den: i128) -> Self {
        Scalar::new(Gaussian::from_ratio(num, den), Surd::ONE)
    }

    pub fn gaussian(re: Rational, im: Rational) -> Self {
        Scalar::new(Gaussian::new(re, im), Surd::ONE)
    }

    pub fn i() -> Self {
        Scalar::new(Gaussian::i(), Surd::ONE)
    }

    /// `√n` with its square factors pulled out.
    pub fn sqrt(n: u64) -> Self {
        if n == 0 {
            return Scalar::zero();
        }
        let (s, m) = square_part(n);
        Scalar::new(
            Gaussian::from_int(s as i128),
            Surd {
                radical: m,
                pi_exp: 0,
            },
        )
    }

    pub fn pi_pow(k: i32) -> Self {
        Scalar::new(Gaussian::one(), Surd { radical: 1, pi_exp: k })
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.value.conj(), self.surd)
    }

    pub fn inv(&self) -> Option<Self> {
        let v = self.value.inv()?;
        // 1/√m = √m / m
        let v = v.scale(&Rational::new(1, self.surd.radical as i128));
        Some(Scalar::new(
            v,
            Surd {
                radical: self.surd.radical,
                pi_exp: -self.surd.pi_exp,
            },
        ))
    }

    pub fn to_c64(&self) -> Complex64 {
        self.value.to_c64() * self.surd.to_f64()
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        let (g, surd) = self.surd.mul(&o.surd);
        Scalar::new(
            (self.value * o.value).scale(&Rational::from_integer(g as i128)),
            surd,
        )
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.value, self.surd)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        if self.surd.radical != 1 {
            write!(f, "·√{}", self.surd.radical)?;
        }
        match self.surd.pi_exp {
            0 => Ok(()),
            1 => write!(f, "·π"),
            k => write!(f, "·π^{}", k),
        }
    }
}

/// A finite sum of [`Scalar`]s with pairwise distinct [`Surd`]s, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Coeff(SmallVec<[(Surd, Gaussian); 1]>);

impl Coeff {
    pub fn zero() -> Self {
        Coeff(SmallVec::new())
    }

    pub fn one() -> Self {
        Coeff::from(Scalar::one())
    }

    pub fn int(n: i128) -> Self {
        Coeff::from(Scalar::int(n))
    }

    pub fn ratio(num: i128, den: i128) -> Self {
        Coeff::from(Scalar::ratio(num, den))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].0.is_one() && self.0[0].1 == Gaussian::one()
    }

    pub fn scalars(&self) -> impl Iterator<Item = Scalar> + '_ {
        self.0.iter().map(|&(surd, value)| Scalar { value, surd })
    }

    /// The coefficient as a single scalar, if it is one.
    pub fn single(&self) -> Option<Scalar> {
        match self.0.len() {
            0 => Some(Scalar::zero()),
            1 => Some(Scalar {
                value: self.0[0].1,
                surd: self.0[0].0,
            }),
            _ => None,
        }
    }

    pub fn add_scalar(&mut self, s: Scalar) {
        if s.is_zero() {
            return;
        }
        match self.0.binary_search_by(|(k, _)| k.cmp(&s.surd)) {
            Ok(pos) => {
                let v = self.0[pos].1 + s.value;
                if v.is_zero() {
                    self.0.remove(pos);
                } else {
                    self.0[pos].1 = v;
                }
            }
            Err(pos) => self.0.insert(pos, (s.surd, s.value)),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Coeff {
        let mut out = Coeff::zero();
        for x in self.scalars() {
            out.add_scalar(x * *s);
        }
        out
    }

    pub fn conj(&self) -> Coeff {
        Coeff(self.0.iter().map(|&(k, v)| (k, v.conj())).collect())
    }

    /// Inverse of a single-scalar coefficient.
    pub fn inv(&self) -> Option<Coeff> {
        match self.0.len() {
            1 => self.single()?.inv().map(Coeff::from),
            _ => None,
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        self.scalars().map(|s| s.to_c64()).sum()
    }

    /// The coefficient as a plain integer, if it is exactly one.
    pub fn as_integer(&self) -> Option<i128> {
        match self.0.len() {
            0 => Some(0),
            1 if self.0[0].0.is_one() && self.0[0].1.is_real() && self.0[0].1.re.is_integer() => {
                Some(self.0[0].1.re.to_integer())
            }
            _ => None,
        }
    }

    /// The coefficient as a Gaussian rational, if it carries no radical or π.
    pub fn as_gaussian(&self) -> Option<Gaussian> {
        match self.0.len() {
            0 => Some(Gaussian::zero()),
            1 if self.0[0].0.is_one() => Some(self.0[0].1),
            _ => None,
        }
    }
}

impl From<Scalar> for Coeff {
    fn from(s: Scalar) -> Coeff {
        let mut c = Coeff::zero();
        c.add_scalar(s);
        c
    }
}

impl From<Gaussian> for Coeff {
    fn from(g: Gaussian) -> Coeff {
        Coeff::from(Scalar::new(g, Surd::ONE))
    }
}

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, o: &Coeff) {
        for s in o.scalars() {
            self.add_scalar(s);
        }
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, o: &Coeff) -> Coeff {
        let mut out = self.clone();
        out += o;
        out
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, o: &Coeff) -> Coeff {
        let mut out = self.clone();
        out += &-o;
        out
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff(self.0.iter().map(|&(k, v)| (k, -v)).collect())
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, o: &Coeff) -> Coeff {
        if self.0.len() == 1 && o.0.len() == 1 {
            return Coeff::from(self.single().unwrap() * o.single().unwrap());
        }
        let mut out = Coeff::zero();
        for x in self.scalars() {
            for y in o.scalars() {
                out.add_scalar(x * y);
            }
        }
        out
    }
}

impl PartialOrd for Coeff {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coeff {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |c: &Coeff| -> Vec<(Surd, Rational, Rational)> {
            c.0.iter().map(|(k, v)| (*k, v.re, v.im)).collect()
        };
        key(self).cmp(&key(other))
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, s) in self.scalars().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", s)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radicals_multiply_and_collapse() {
        assert_eq!(Scalar::sqrt(2) * Scalar::sqrt(2), Scalar::int(2));
        assert_eq!(Scalar::sqrt(2) * Scalar::sqrt(3), Scalar::sqrt(6));
        assert_eq!(Scalar::sqrt(6) * Scalar::sqrt(10), Scalar::int(2) * Scalar::sqrt(15));
        assert_eq!(Scalar::sqrt(12), Scalar::int(2) * Scalar::sqrt(3));
    }

    #[test]
    fn pi_exponents_add() {
        let x = Scalar::pi_pow(2) * Scalar::pi_pow(-3);
        assert_eq!(x, Scalar::pi_pow(-1));
        assert_eq!((Scalar::pi_pow(-1) * Scalar::pi_pow(1)), Scalar::one());
    }

    #[test]
    fn canonical_zero() {
        let z = Scalar::new(Gaussian::zero(), Surd::new(7, 3).unwrap());
        assert_eq!(z, Scalar::zero());
        assert_eq!(z.surd, Surd::ONE);
    }

    #[test]
    fn inverse_of_surd() {
        let x = Scalar::new(Gaussian::new(Rational::new(1, 2), Rational::one()), Surd::new(3, -1).unwrap());
        assert_eq!(x * x.inv().unwrap(), Scalar::one());
    }

    #[test]
    fn square_free_validation() {
        assert!(Surd::new(12, 0).is_none());
        assert!(Surd::new(0, 0).is_none());
        assert!(Surd::new(30, 0).is_some());
    }

    #[test]
    fn distinct_surds_stay_apart() {
        let mut c = Coeff::from(Scalar::sqrt(2));
        c.add_scalar(Scalar::sqrt(3));
        c.add_scalar(-Scalar::sqrt(2));
        assert_eq!(c, Coeff::from(Scalar::sqrt(3)));
        assert!((&c * &c).as_integer() == Some(3));
    }
}
