use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{Coeff, Scalar};

use super::monomial::Monomial;
use super::poly::Poly;
use super::table::{GeneratorTable, Parity, ParityClass};

/// An exact element of the free graded-commutative algebra on a
/// [`GeneratorTable`]: a finite sum of coefficient-weighted monomials in
/// canonical form, so equal elements compare equal structurally.
///
/// ```
/// use supersphere::{Element, GeneratorTable};
///
/// let t = GeneratorTable::builder().odd_pair("η", "η♦").build().unwrap();
/// let eta = Element::generator(&t, "η").unwrap();
/// let eta_d = Element::generator(&t, "η♦").unwrap();
/// assert_eq!(&eta_d * &eta, -(&eta * &eta_d));
/// assert!((&eta * &eta).is_zero());
/// ```
#[derive(Clone, PartialEq, Eq)]
pub struct Element(pub(crate) Poly);

/// One term of an element, in the vocabulary of the serialization format.
#[derive(Clone, Debug, PartialEq)]
pub struct TermView {
    pub coeff: Coeff,
    /// Even generators with positive exponents, in declaration order.
    pub even: Vec<(String, u32)>,
    /// Odd generators in canonical order.
    pub odd: Vec<String>,
}

impl Element {
    pub fn zero(table: &Arc<GeneratorTable>) -> Self {
        Element(Poly::zero(table))
    }

    pub fn one(table: &Arc<GeneratorTable>) -> Self {
        Element::constant(table, Coeff::one())
    }

    pub fn constant(table: &Arc<GeneratorTable>, c: impl Into<Coeff>) -> Self {
        Element(Poly::constant(table, c.into()))
    }

    pub fn generator(table: &Arc<GeneratorTable>, name: &str) -> Result<Self> {
        Ok(Element(Poly::symbol(table, table.lookup(name)?)))
    }

    /// Canonical element of a list of scalar-weighted generator words.
    ///
    /// Each word is read as an ordered product, so reordering adjacent
    /// generators costs the graded-commutativity sign and a repeated odd
    /// generator kills the word.
    pub fn normalize(table: &Arc<GeneratorTable>, raw: &[(Scalar, &[&str])]) -> Result<Self> {
        let mut out = Poly::zero(table);
        for (c, word) in raw {
            let mut term = Poly::constant(table, Coeff::from(*c));
            for name in word.iter() {
                term = term.mul(&Poly::symbol(table, table.lookup(name)?));
            }
            out.add_assign(&term);
        }
        Ok(Element(out))
    }

    pub(crate) fn from_poly(p: Poly) -> Self {
        debug_assert!(!p.has_differentials());
        Element(p)
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.0.table
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Number of stored monomials.
    pub fn len(&self) -> usize {
        self.0.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_zero()
    }

    pub fn try_add(&self, o: &Element) -> Result<Element> {
        self.0.check_table(&o.0)?;
        Ok(Element(self.0.add(&o.0)))
    }

    pub fn try_mul(&self, o: &Element) -> Result<Element> {
        self.0.check_table(&o.0)?;
        Ok(Element(self.0.mul(&o.0)))
    }

    pub fn pow(&self, k: u32) -> Element {
        Element(self.0.pow(k))
    }

    pub fn scale(&self, s: Scalar) -> Element {
        Element(self.0.scale_scalar(s))
    }

    pub fn scale_coeff(&self, c: &Coeff) -> Element {
        Element(self.0.scale(c))
    }

    pub fn diamond(&self) -> Element {
        Element(self.0.diamond())
    }

    pub fn parity_of(&self) -> ParityClass {
        match self.0.parity_bits() {
            (false, false) => ParityClass::Zero,
            (true, false) => ParityClass::Even,
            (false, true) => ParityClass::Odd,
            (true, true) => ParityClass::Mixed,
        }
    }

    /// The parity of a homogeneous element; zero counts as even here.
    pub fn parity(&self) -> Option<Parity> {
        match self.parity_of() {
            ParityClass::Even | ParityClass::Zero => Some(Parity::Even),
            ParityClass::Odd => Some(Parity::Odd),
            ParityClass::Mixed => None,
        }
    }

    pub fn body(&self) -> Element {
        Element(self.0.body())
    }

    pub fn soul(&self) -> Element {
        Element(self.0.sub(&self.0.body()))
    }

    /// The coefficient of the empty monomial.
    pub fn constant_term(&self) -> Coeff {
        self.0
            .terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    /// The element as a constant, if it has no generator content.
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.0.terms.len() {
            0 => Some(Coeff::zero()),
            1 => self.0.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// The algebra homomorphism extending `map` (generator name → image).
    /// Generators not in the map are fixed.
    pub fn substitute(&self, map: &[(&str, Element)]) -> Result<Element> {
        let image = resolve_map(self.table(), map)?;
        Ok(Element(self.0.substitute_generators(&image)))
    }

    pub fn terms(&self) -> Vec<TermView> {
        let t = self.table();
        self.0
            .terms
            .iter()
            .map(|(m, c)| {
                let mut even = Vec::new();
                let mut odd = Vec::new();
                for &(s, e) in m.items() {
                    let g = t.generator(s as usize);
                    match g.parity {
                        Parity::Even => even.push((g.name.clone(), e as u32)),
                        Parity::Odd => odd.push(g.name.clone()),
                    }
                }
                TermView {
                    coeff: c.clone(),
                    even,
                    odd,
                }
            })
            .collect()
    }
}

/// Resolves a name-keyed substitution, checking that it preserves parity.
pub(crate) fn resolve_map(
    table: &Arc<GeneratorTable>,
    map: &[(&str, Element)],
) -> Result<HashMap<usize, Poly>> {
    let mut image = HashMap::new();
    for (name, img) in map {
        let k = table.lookup(name)?;
        if img.table() != table {
            return Err(Error::TableMismatch);
        }
        let want = table.generator(k).parity;
        match img.parity() {
            Some(p) if p == want => {}
            _ if img.is_zero() => {}
            _ => {
                return Err(Error::Contract(format!(
                    "image of `{name}` must be {} but is {}",
                    parity_word(want),
                    match img.parity_of() {
                        ParityClass::Mixed => "mixed",
                        ParityClass::Odd => "odd",
                        _ => "even",
                    }
                )))
            }
        }
        image.insert(k, img.0.clone());
    }
    Ok(image)
}

fn parity_word(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(f)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(f)
    }
}

macro_rules! impl_ring_ops {
    ($ty:ident) => {
        impl std::ops::Add for &$ty {
            type Output = $ty;
            fn add(self, o: &$ty) -> $ty {
                self.0.check_table(&o.0).expect("operands over different generator tables");
                $ty(self.0.add(&o.0))
            }
        }
        impl std::ops::Sub for &$ty {
            type Output = $ty;
            fn sub(self, o: &$ty) -> $ty {
                self.0.check_table(&o.0).expect("operands over different generator tables");
                $ty(self.0.sub(&o.0))
            }
        }
        impl std::ops::Mul for &$ty {
            type Output = $ty;
            fn mul(self, o: &$ty) -> $ty {
                self.0.check_table(&o.0).expect("operands over different generator tables");
                $ty(self.0.mul(&o.0))
            }
        }
        impl std::ops::Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty(self.0.neg())
            }
        }
        impl std::ops::Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty(self.0.neg())
            }
        }
        impl std::ops::Add for $ty {
            type Output = $ty;
            fn add(self, o: $ty) -> $ty {
                &self + &o
            }
        }
        impl std::ops::Sub for $ty {
            type Output = $ty;
            fn sub(self, o: $ty) -> $ty {
                &self - &o
            }
        }
        impl std::ops::Mul for $ty {
            type Output = $ty;
            fn mul(self, o: $ty) -> $ty {
                &self * &o
            }
        }
    };
}

pub(crate) use impl_ring_ops;

impl_ring_ops!(Element);
