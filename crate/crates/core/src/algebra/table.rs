use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Grassmann parity of a generator or a homogeneous element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(b: u8) -> Parity {
        if b.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        Parity::from_bit(self.bit() + 1)
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;
    fn add(self, o: Parity) -> Parity {
        Parity::from_bit(self.bit() + o.bit())
    }
}

/// What `parity_of` reports for a possibly inhomogeneous element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParityClass {
    Even,
    Odd,
    Mixed,
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub parity: Parity,
    /// Index of the diamond partner in the table.
    pub partner: usize,
    /// `g♦ = sign · partner`.
    pub sign: i8,
}

/// Internal view of a symbol: a generator (form degree 0) or the
/// differential of one (form degree 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct SymbolInfo {
    pub degree: u8,
    pub parity: u8,
}

impl SymbolInfo {
    /// `s·s = 0` exactly when swapping `s` past itself costs a sign.
    pub fn nilpotent(self) -> bool {
        (self.degree + self.parity) % 2 == 1
    }
}

/// The ordered list of generators of a free graded-commutative *-algebra.
///
/// Declaration order is the variable order used by the monomial order. Each
/// generator `g` also has a differential `dg`; internally generator `k` is
/// symbol `k` and `dg_k` is symbol `len + k`, so functions sort before
/// differentials.
#[derive(Debug)]
pub struct GeneratorTable {
    gens: Vec<Generator>,
    index: HashMap<String, usize>,
    symbols: Vec<SymbolInfo>,
}

impl PartialEq for GeneratorTable {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || self.gens == other.gens
    }
}

impl GeneratorTable {
    pub fn builder() -> TableBuilder {
        TableBuilder::default()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn generator(&self, k: usize) -> &Generator {
        &self.gens[k]
    }

    pub fn lookup(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub(crate) fn symbols(&self) -> &[SymbolInfo] {
        &self.symbols
    }

    /// Display name of a symbol: the generator name or `d` + name.
    pub(crate) fn symbol_name(&self, s: usize) -> String {
        let n = self.gens.len();
        if s < n {
            self.gens[s].name.clone()
        } else {
            format!("d{}", self.gens[s - n].name)
        }
    }

    pub(crate) fn lookup_symbol(&self, name: &str) -> Result<usize> {
        if let Some(&k) = self.index.get(name) {
            return Ok(k);
        }
        if let Some(rest) = name.strip_prefix('d') {
            if let Some(&k) = self.index.get(rest) {
                return Ok(self.gens.len() + k);
            }
        }
        Err(Error::UnknownGenerator(name.to_string()))
    }
}

impl fmt::Display for GeneratorTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.gens.iter().map(|g| g.name.as_str()).collect();
        write!(f, "[{}]", names.join(", "))
    }
}

#[derive(Default)]
pub struct TableBuilder {
    entries: Vec<(String, Parity, String, i8)>,
}

impl TableBuilder {
    /// Declares a generator with an explicit diamond partner and sign.
    pub fn generator(mut self, name: &str, parity: Parity, partner: &str, sign: i8) -> Self {
        self.entries
            .push((name.to_string(), parity, partner.to_string(), sign));
        self
    }

    /// A self-conjugate even generator, `x♦ = x`.
    pub fn real(self, name: &str) -> Self {
        self.generator(name, Parity::Even, name, 1)
    }

    /// Even pair with `x♦ = y`, `y♦ = x`.
    pub fn even_pair(self, x: &str, y: &str) -> Self {
        self.generator(x, Parity::Even, y, 1)
            .generator(y, Parity::Even, x, 1)
    }

    /// Odd pair with `x♦ = y`, `y♦ = −x`.
    pub fn odd_pair(self, x: &str, y: &str) -> Self {
        self.generator(x, Parity::Odd, y, 1)
            .generator(y, Parity::Odd, x, -1)
    }

    pub fn build(self) -> Result<Arc<GeneratorTable>> {
        let mut index = HashMap::new();
        for (k, (name, ..)) in self.entries.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::Declaration("empty generator name".into()));
            }
            if index.insert(name.clone(), k).is_some() {
                return Err(Error::Declaration(format!("`{name}` declared twice")));
            }
        }
        if self.entries.len() > 127 {
            return Err(Error::Declaration("at most 127 generators".into()));
        }
        let mut gens = Vec::with_capacity(self.entries.len());
        for (name, parity, partner, sign) in &self.entries {
            let p = *index
                .get(partner)
                .ok_or_else(|| Error::UnknownGenerator(partner.clone()))?;
            if sign.abs() != 1 {
                return Err(Error::Declaration(format!("diamond sign of `{name}` must be ±1")));
            }
            gens.push(Generator {
                name: name.clone(),
                parity: *parity,
                partner: p,
                sign: *sign,
            });
        }
        // g♦♦ = sign(g)·sign(partner)·g must equal (−1)^{|g|} g.
        for (k, g) in gens.iter().enumerate() {
            let h = &gens[g.partner];
            if h.partner != k || h.parity != g.parity {
                return Err(Error::Declaration(format!(
                    "diamond of `{}` is not an involution on names",
                    g.name
                )));
            }
            let expected = if g.parity == Parity::Odd { -1 } else { 1 };
            if g.sign * h.sign != expected {
                return Err(Error::Declaration(format!(
                    "`{}`♦♦ must equal {}`{}`",
                    g.name,
                    if expected < 0 { "−" } else { "" },
                    g.name
                )));
            }
        }
        let mut symbols: Vec<SymbolInfo> = gens
            .iter()
            .map(|g| SymbolInfo {
                degree: 0,
                parity: g.parity.bit(),
            })
            .collect();
        symbols.extend(gens.iter().map(|g| SymbolInfo {
            degree: 1,
            parity: g.parity.bit(),
        }));
        Ok(Arc::new(GeneratorTable {
            gens,
            index,
            symbols,
        }))
    }
}
