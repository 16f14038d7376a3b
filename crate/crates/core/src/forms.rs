//! Superforms: polynomials in the generators and their differentials.
//!
//! Signs follow the bigraded rule: swapping bihomogeneous `ω` (form degree
//! `p`, parity `|ω|`) past `τ` (`q`, `|τ|`) costs `(−1)^{pq + |ω||τ|}`. The
//! differential `d` has form degree 1 and parity 0, so `da` anticommutes
//! with itself while `dη` commutes with itself and may repeat.

use std::fmt;
use std::sync::Arc;

use crate::algebra::poly::Poly;
use crate::algebra::{impl_ring_ops, resolve_map, Element, GeneratorTable, Parity};
use crate::error::Result;
use crate::scalar::{Coeff, Scalar};

/// A graded differential form with element coefficients.
///
/// ```
/// use supersphere::{Element, GeneratorTable, SuperForm};
///
/// let t = GeneratorTable::builder().even_pair("a", "a♦").build().unwrap();
/// let a = Element::generator(&t, "a").unwrap();
/// let b = Element::generator(&t, "a♦").unwrap();
/// assert!((&a * &b).d().d().is_zero());
/// assert_eq!(a.d().wedge(&b.d()), -b.d().wedge(&a.d()));
/// ```
#[derive(Clone, PartialEq, Eq)]
pub struct SuperForm(pub(crate) Poly);

/// One term of a superform: a coefficient element times a canonical wedge
/// of differentials.
#[derive(Clone, Debug, PartialEq)]
pub struct FormTermView {
    pub coeff: Element,
    pub wedge: Vec<String>,
}

impl SuperForm {
    pub fn zero(table: &Arc<GeneratorTable>) -> Self {
        SuperForm(Poly::zero(table))
    }

    /// The 1-form `dg` of a generator.
    pub fn differential(table: &Arc<GeneratorTable>, name: &str) -> Result<Self> {
        let k = table.lookup(name)?;
        Ok(SuperForm(Poly::symbol(table, table.len() + k)))
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.0.table
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn len(&self) -> usize {
        self.0.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_zero()
    }

    pub fn d(&self) -> SuperForm {
        SuperForm(self.0.d())
    }

    pub fn wedge(&self, o: &SuperForm) -> SuperForm {
        self * o
    }

    pub fn scale(&self, s: Scalar) -> SuperForm {
        SuperForm(self.0.scale_scalar(s))
    }

    pub fn scale_coeff(&self, c: &Coeff) -> SuperForm {
        SuperForm(self.0.scale(c))
    }

    /// Left multiplication by a function.
    pub fn times(&self, f: &Element) -> SuperForm {
        SuperForm(f.0.mul(&self.0))
    }

    pub fn diamond(&self) -> SuperForm {
        SuperForm(self.0.diamond())
    }

    /// Sets odd generators and their differentials to zero.
    pub fn body_project(&self) -> SuperForm {
        SuperForm(self.0.body())
    }

    /// Pulls the form back along a generator substitution; differentials
    /// follow as `dg ↦ d(image(g))`.
    pub fn substitute(&self, map: &[(&str, Element)]) -> Result<SuperForm> {
        let image = resolve_map(self.table(), map)?;
        Ok(SuperForm(self.0.substitute_generators(&image)))
    }

    /// `(form degree, parity)` when every term agrees.
    pub fn bidegree(&self) -> Option<(u32, Parity)> {
        let degrees = self.0.form_degrees();
        let parity = match self.0.parity_bits() {
            (true, true) => return None,
            (_, true) => Parity::Odd,
            _ => Parity::Even,
        };
        match degrees.as_slice() {
            [] => Some((0, parity)),
            [p] => Some((*p, parity)),
            _ => None,
        }
    }

    /// The function part, if the form has degree zero.
    pub fn as_function(&self) -> Option<Element> {
        if self.0.has_differentials() {
            None
        } else {
            Some(Element::from_poly(self.0.clone()))
        }
    }

    pub fn terms(&self) -> Vec<FormTermView> {
        let n = self.table().len();
        let mut grouped: Vec<(Vec<String>, Poly)> = Vec::new();
        for (m, c) in &self.0.terms {
            let (func, diff) = m.split_at_symbol(n);
            let wedge: Vec<String> = diff
                .items()
                .iter()
                .flat_map(|&(s, e)| {
                    std::iter::repeat_n(self.table().symbol_name(s as usize), e as usize)
                })
                .collect();
            let pos = match grouped.iter().position(|(w, _)| *w == wedge) {
                Some(p) => p,
                None => {
                    grouped.push((wedge, Poly::zero(self.table())));
                    grouped.len() - 1
                }
            };
            grouped[pos].1.add_term(func, c);
        }
        grouped
            .into_iter()
            .map(|(wedge, p)| FormTermView {
                coeff: Element::from_poly(p),
                wedge,
            })
            .collect()
    }
}

impl Element {
    /// Exterior derivative of a function.
    pub fn d(&self) -> SuperForm {
        SuperForm(self.0.d())
    }
}

impl From<Element> for SuperForm {
    fn from(e: Element) -> SuperForm {
        SuperForm(e.0)
    }
}

impl From<&Element> for SuperForm {
    fn from(e: &Element) -> SuperForm {
        SuperForm(e.0.clone())
    }
}

impl fmt::Display for SuperForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(f)
    }
}

impl fmt::Debug for SuperForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(f)
    }
}

impl_ring_ops!(SuperForm);
