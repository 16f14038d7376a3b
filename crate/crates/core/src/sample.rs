//! Seeded random elements, supermatrices, forms and trig polynomials for the
//! property suites.

use std::sync::Arc;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{Element, GeneratorTable, Parity};
use crate::forms::SuperForm;
use crate::matrix::{BlockShape, SuperMatrix};
use crate::scalar::{Coeff, Scalar};
use crate::trig::{ChartFunction, TrigPoly};

/// Size limits for random expressions.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub max_terms: usize,
    /// Largest exponent of any even generator in one term.
    pub max_exp: u32,
    /// Coefficient numerators lie in `−max_coeff..=max_coeff`.
    pub max_coeff: i128,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_terms: 4,
            max_exp: 2,
            max_coeff: 5,
        }
    }
}

/// Draws expressions over a fixed set of generators of one table.
#[derive(Clone, Debug)]
pub struct Sampler {
    table: Arc<GeneratorTable>,
    even: Vec<String>,
    odd: Vec<String>,
    pub bounds: Bounds,
}

impl Sampler {
    /// Uses the named generators; unknown names are a caller bug and panic.
    pub fn new(table: &Arc<GeneratorTable>, names: &[&str]) -> Self {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for &name in names {
            let k = table.lookup(name).expect("sampler generator not in table");
            match table.generator(k).parity {
                Parity::Even => even.push(name.to_string()),
                Parity::Odd => odd.push(name.to_string()),
            }
        }
        Sampler {
            table: table.clone(),
            even,
            odd,
            bounds: Bounds::default(),
        }
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    pub fn with_bounds(mut self, bounds: Bounds) -> Self {
        self.bounds = bounds;
        self
    }

    /// A nonzero Gaussian rational with small numerators and denominators.
    pub fn scalar<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        let m = self.bounds.max_coeff;
        loop {
            let re = Ratio::new(rng.gen_range(-m..=m), rng.gen_range(1..=4));
            let im = if rng.gen_bool(0.3) {
                Ratio::new(rng.gen_range(-m..=m), rng.gen_range(1..=4))
            } else {
                Ratio::from_integer(0)
            };
            let s = Scalar::gaussian(re, im);
            if !s.is_zero() {
                return s;
            }
        }
    }

    fn word<R: Rng + ?Sized>(&self, rng: &mut R, parity: Option<Parity>) -> Vec<String> {
        let mut w = Vec::new();
        for g in &self.even {
            let e = rng.gen_range(0..=self.bounds.max_exp);
            w.extend(std::iter::repeat_n(g.clone(), e as usize));
        }
        let mut odd: Vec<String> = self
            .odd
            .iter()
            .filter(|_| rng.gen_bool(0.4))
            .cloned()
            .collect();
        if let Some(p) = parity {
            if (odd.len() % 2 == 1) != (p == Parity::Odd) {
                let missing: Vec<&String> = self.odd.iter().filter(|g| !odd.contains(g)).collect();
                match missing.choose(rng) {
                    Some(g) if rng.gen_bool(0.5) || odd.is_empty() => odd.push((*g).clone()),
                    _ => {
                        odd.pop();
                    }
                }
            }
        }
        odd.shuffle(rng);
        w.extend(odd);
        w
    }

    /// A random element; homogeneous of the given parity when one is asked
    /// for. An odd request with no odd generators yields zero.
    pub fn element<R: Rng + ?Sized>(&self, rng: &mut R, parity: Option<Parity>) -> Element {
        if parity == Some(Parity::Odd) && self.odd.is_empty() {
            return Element::zero(&self.table);
        }
        let terms = rng.gen_range(1..=self.bounds.max_terms);
        let raw: Vec<(Scalar, Vec<String>)> = (0..terms)
            .map(|_| (self.scalar(rng), self.word(rng, parity)))
            .collect();
        let words: Vec<Vec<&str>> = raw
            .iter()
            .map(|(_, w)| w.iter().map(String::as_str).collect())
            .collect();
        let pairs: Vec<(Scalar, &[&str])> = raw
            .iter()
            .zip(&words)
            .map(|((c, _), w)| (*c, w.as_slice()))
            .collect();
        Element::normalize(&self.table, &pairs).expect("sampler words use table generators")
    }

    /// A homogeneous element of the given parity that is nilpotent: every term
    /// carries at least one odd generator.
    pub fn nilpotent<R: Rng + ?Sized>(&self, rng: &mut R, parity: Parity) -> Element {
        if self.odd.len() < 2 {
            return Element::zero(&self.table);
        }
        let x = self.element(rng, Some(parity.flip()));
        let g = self.odd.choose(rng).expect("odd generators present");
        &x * &Element::generator(&self.table, g).expect("table generator")
    }

    /// A homogeneous supermatrix: entry `(i, j)` has parity
    /// `|i| + |j| + parity`.
    pub fn supermatrix<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        rows: BlockShape,
        cols: BlockShape,
        parity: Parity,
    ) -> SuperMatrix<Element> {
        SuperMatrix::from_fn(&self.table, rows, cols, Some(parity), |i, j| {
            let p = Parity::from_bit(rows.parity(i).bit() ^ cols.parity(j).bit() ^ parity.bit());
            self.element(rng, Some(p))
        })
        .expect("entries drawn with positional parity")
    }

    /// An even square supermatrix whose odd-odd block is a nonzero constant
    /// diagonal plus nilpotent entries, so its superdeterminant exists. The
    /// even-even block is unrestricted.
    pub fn invertible_even<R: Rng + ?Sized>(&self, rng: &mut R, shape: BlockShape) -> SuperMatrix<Element> {
        SuperMatrix::from_fn(&self.table, shape, shape, Some(Parity::Even), |i, j| {
            match (shape.parity(i), shape.parity(j)) {
                (Parity::Odd, Parity::Odd) => {
                    let soul = self.nilpotent(rng, Parity::Even);
                    if i == j {
                        &Element::constant(&self.table, Coeff::from(self.scalar(rng))) + &soul
                    } else {
                        soul
                    }
                }
                (Parity::Even, Parity::Even) => self.element(rng, Some(Parity::Even)),
                _ => self.element(rng, Some(Parity::Odd)),
            }
        })
        .expect("entries drawn with positional parity")
    }

    /// A random form of degree at most `max_degree`: sums of elements times
    /// wedges of differentials of the sampler's generators.
    pub fn form<R: Rng + ?Sized>(&self, rng: &mut R, max_degree: usize) -> SuperForm {
        let names: Vec<&String> = self.even.iter().chain(&self.odd).collect();
        let terms = rng.gen_range(1..=self.bounds.max_terms);
        let mut out = SuperForm::zero(&self.table);
        for _ in 0..terms {
            let mut t = SuperForm::from(self.element(rng, None));
            for _ in 0..rng.gen_range(0..=max_degree) {
                let g = names.choose(rng).expect("sampler has generators");
                t = &t * &SuperForm::differential(&self.table, g).expect("table generator");
            }
            out = &out + &t;
        }
        out
    }
}

/// A random trig polynomial with exponents at most `max_degree` in each of
/// `cos θ, cos φ` and sine exponents in `0..=1` after normalization.
pub fn trig_poly<R: Rng + ?Sized>(rng: &mut R, max_degree: u32, max_terms: usize) -> TrigPoly {
    let mut out = TrigPoly::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let c = Scalar::gaussian(
            Ratio::new(rng.gen_range(-6..=6), rng.gen_range(1..=3)),
            Ratio::new(rng.gen_range(-6..=6), rng.gen_range(1..=3)),
        );
        out = out.add(&TrigPoly::monomial(
            rng.gen_range(0..=max_degree),
            rng.gen_range(0..=max_degree),
            rng.gen_range(0..=max_degree),
            rng.gen_range(0..=max_degree),
            Coeff::from(c),
        ));
    }
    out
}
