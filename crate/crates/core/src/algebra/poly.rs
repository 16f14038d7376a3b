use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{Coeff, Scalar};

use super::monomial::{mul_monomials, Monomial};
use super::table::GeneratorTable;

/// Sum of coefficient-weighted monomials over a generator table, with
/// differentials allowed. `Element` and `SuperForm` are views of this type.
#[derive(Clone)]
pub(crate) struct Poly {
    pub table: Arc<GeneratorTable>,
    pub terms: BTreeMap<Monomial, Coeff>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.table == other.table
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(table: &Arc<GeneratorTable>) -> Self {
        Poly {
            table: table.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(table: &Arc<GeneratorTable>, c: Coeff) -> Self {
        let mut p = Poly::zero(table);
        p.add_term(Monomial::one(), &c);
        p
    }

    pub fn symbol(table: &Arc<GeneratorTable>, s: usize) -> Self {
        let mut p = Poly::zero(table);
        p.add_term(Monomial::symbol(s), &Coeff::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn check_table(&self, other: &Poly) -> Result<()> {
        if self.table == other.table {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }

    pub fn add_assign(&mut self, o: &Poly) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Coeff) -> Poly {
        let mut out = Poly::zero(&self.table);
        if s.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &(c * s));
        }
        out
    }

    pub fn scale_scalar(&self, s: Scalar) -> Poly {
        self.scale(&Coeff::from(s))
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let info = self.table.symbols();
        let mut out = Poly::zero(&self.table);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                if let Some((neg, m)) = mul_monomials(info, m1, m2) {
                    let c = c1 * c2;
                    out.add_term(m, &if neg { -&c } else { c });
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::constant(&self.table, Coeff::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Keeps the terms for which `keep` holds.
    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Poly {
        Poly {
            table: self.table.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every term containing an odd generator or an odd differential.
    pub fn body(&self) -> Poly {
        let info = self.table.symbols();
        self.filter(|m| !m.contains_any(|s| info[s].parity == 1))
    }

    pub fn has_differentials(&self) -> bool {
        let n = self.table.len();
        self.terms.keys().any(|m| m.contains_any(|s| s >= n))
    }

    /// Returns the single parity bit if every term agrees.
    pub fn parity_bits(&self) -> (bool, bool) {
        let info = self.table.symbols();
        let mut even = false;
        let mut odd = false;
        for m in self.terms.keys() {
            if m.parity(info) == 0 {
                even = true;
            } else {
                odd = true;
            }
        }
        (even, odd)
    }

    pub fn form_degrees(&self) -> Vec<u32> {
        let info = self.table.symbols();
        let mut out: Vec<u32> = self.terms.keys().map(|m| m.form_degree(info)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The algebra homomorphism sending symbol `s` to `image(s)`.
    ///
    /// Symbols without an image are kept. Images must have the bidegree of
    /// the symbol they replace.
    pub fn substitute_symbols(&self, image: &HashMap<usize, Poly>) -> Poly {
        let mut cache: HashMap<(usize, u16), Poly> = HashMap::new();
        let mut out = Poly::zero(&self.table);
        for (m, c) in &self.terms {
            let mut acc = Poly::constant(&self.table, c.clone());
            for &(s, e) in m.items() {
                let s = s as usize;
                let factor = match image.get(&s) {
                    None => {
                        let mut p = Poly::zero(&self.table);
                        p.add_term(
                            Monomial::from_sorted(smallvec::smallvec![(s as u8, e)]),
                            &Coeff::one(),
                        );
                        p
                    }
                    Some(img) => cache
                        .entry((s, e))
                        .or_insert_with(|| img.pow(e as u32))
                        .clone(),
                };
                acc = acc.mul(&factor);
                if acc.is_zero() {
                    break;
                }
            }
            for (m2, c2) in acc.terms {
                out.add_term(m2, &c2);
            }
        }
        out
    }

    /// Multiplicative, antilinear diamond with `(dx)♦ = d(x♦)`.
    pub fn diamond(&self) -> Poly {
        let n = self.table.len();
        let mut image = HashMap::new();
        for (k, g) in self.table.generators().iter().enumerate() {
            let sign = Coeff::int(g.sign as i128);
            image.insert(k, Poly::symbol(&self.table, g.partner).scale(&sign));
            image.insert(n + k, Poly::symbol(&self.table, n + g.partner).scale(&sign));
        }
        let conj = Poly {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect(),
        };
        conj.substitute_symbols(&image)
    }

    /// Exterior derivative: a graded derivation of form degree 1 and parity 0.
    pub fn d(&self) -> Poly {
        let n = self.table.len();
        let info = self.table.symbols();
        let mut out = Poly::zero(&self.table);
        for (m, c) in &self.terms {
            // Functions sort before differentials, so the Leibniz sign of
            // every function prefix is +; d(dx) = 0 ends the scan.
            let items = m.items();
            for (pos, &(s, e)) in items.iter().enumerate() {
                let s = s as usize;
                if s >= n {
                    break;
                }
                // d(s^e) = e·s^{e−1}·ds (odd s only ever has e = 1)
                let mut left: smallvec::SmallVec<[(u8, u16); 8]> = items[..pos].into();
                if e > 1 {
                    left.push((s as u8, e - 1));
                }
                let left = Monomial::from_sorted(left);
                let right = Monomial::from_sorted(items[pos + 1..].into());
                let ds = Monomial::symbol(n + s);
                if let Some((n1, lm)) = mul_monomials(info, &left, &ds) {
                    if let Some((n2, full)) = mul_monomials(info, &lm, &right) {
                        let mut coeff = c.scale(&Scalar::int(e as i128));
                        if n1 ^ n2 {
                            coeff = -&coeff;
                        }
                        out.add_term(full, &coeff);
                    }
                }
            }
        }
        out
    }

    pub fn fmt_with(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let monomial = self.fmt_monomial(m);
            if monomial.is_empty() {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "{}", monomial)?;
            } else if c.scalars().count() > 1 {
                write!(f, "({})·{}", c, monomial)?;
            } else {
                write!(f, "{}·{}", c, monomial)?;
            }
        }
        Ok(())
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for &(s, e) in m.items() {
            let name = self.table.symbol_name(s as usize);
            if e == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{}^{}", name, e));
            }
        }
        parts.join(" ")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f)
    }
}

impl Poly {
    /// Extends a generator map to differentials by `dg ↦ d(image(g))`.
    pub fn substitute_generators(&self, image: &HashMap<usize, Poly>) -> Poly {
        let n = self.table.len();
        let mut full: HashMap<usize, Poly> = HashMap::with_capacity(2 * image.len());
        for (&k, img) in image {
            full.insert(k, img.clone());
            if self.has_differentials() {
                full.insert(n + k, img.d());
            }
        }
        self.substitute_symbols(&full)
    }
}
