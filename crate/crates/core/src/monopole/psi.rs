use crate::algebra::{Element, Parity};
use crate::error::{Error, Result};
use crate::forms::SuperForm;
use crate::matrix::{BlockShape, Graded, SuperMatrix};
use crate::scalar::Scalar;

use super::{KLabel, Sign, Supersphere};

/// The normalized supervector `ψ_{∓n}`: `2n + 1` components, the first `n`
/// odd and the last `n + 1` even.
#[derive(Clone, Debug, PartialEq)]
pub struct PsiVector {
    pub sign: Sign,
    pub n: u32,
    pub components: Vec<Element>,
}

impl PsiVector {
    /// Index shape: `n` odd indices listed first, then `n + 1` even ones.
    pub fn shape(&self) -> BlockShape {
        BlockShape::odd_first(self.n as usize + 1, self.n as usize)
    }

    pub fn index_parity(&self, alpha: usize) -> Parity {
        self.shape().parity(alpha)
    }

    pub fn d(&self) -> Vec<SuperForm> {
        self.components.iter().map(Element::d).collect()
    }
}

/// Result of the U(1) substitution `a → aw, b → bw, η → ηw`.
#[derive(Clone, Debug)]
pub struct EquivarianceReport {
    pub sign: Sign,
    pub n: u32,
    /// Components `α` of ψ that do not pick up `w^{±n}`.
    pub psi_failures: Vec<usize>,
    /// Entries of `p` that change.
    pub projector_failures: Vec<(usize, usize)>,
}

impl EquivarianceReport {
    pub fn holds(&self) -> bool {
        self.psi_failures.is_empty() && self.projector_failures.is_empty()
    }
}

fn binomial(n: u32, k: u32) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// `⟨φ|χ⟩ = Σ φ_α (χ_α)♦`.
pub fn pairing<T: Graded>(phi: &[T], chi: &[T]) -> Result<T> {
    if phi.len() != chi.len() {
        return Err(Error::Shape(format!(
            "pairing vectors of length {} and {}",
            phi.len(),
            chi.len()
        )));
    }
    let Some(first) = phi.first().or(chi.first()) else {
        return Err(Error::Shape("pairing of empty vectors".into()));
    };
    let table = first.table().clone();
    Ok(phi
        .iter()
        .zip(chi)
        .fold(T::zero(&table), |acc, (x, y)| acc.add(&x.mul(&y.diamond()))))
}

impl Supersphere {
    /// `ψ₋ₙ = (½η√C(n−1,k) a^{n−1−k} b^k ; (1 − ⅛ηη♦)√C(n,k) a^{n−k} b^k)`,
    /// and `ψ₊ₙ` its image under `a ↔ a♦, b ↔ b♦, η → −η♦, η♦ → η`.
    pub fn psi(&self, sign: Sign, n: u32) -> Result<PsiVector> {
        if n < 1 {
            return Err(Error::Contract("monopole charge n must be at least 1".into()));
        }
        let (a, b, e, ed) = (self.gen("a"), self.gen("b"), self.gen("η"), self.gen("η♦"));
        let damp = &self.one() - &(&e * &ed).scale(Scalar::ratio(1, 8));
        let mut components = Vec::with_capacity(2 * n as usize + 1);
        for k in 0..n {
            let w = Scalar::sqrt(binomial(n - 1, k)) * Scalar::ratio(1, 2);
            components.push((&e * &(&a.pow(n - 1 - k) * &b.pow(k))).scale(w));
        }
        for k in 0..=n {
            let w = Scalar::sqrt(binomial(n, k));
            components.push((&damp * &(&a.pow(n - k) * &b.pow(k))).scale(w));
        }
        if sign == Sign::Plus {
            let sigma = [
                ("a", self.gen("a♦")),
                ("a♦", a.clone()),
                ("b", self.gen("b♦")),
                ("b♦", b.clone()),
                ("η", -ed.clone()),
                ("η♦", e.clone()),
            ];
            components = components
                .iter()
                .map(|c| c.substitute(&sigma))
                .collect::<Result<_>>()?;
        }
        Ok(PsiVector {
            sign,
            n,
            components,
        })
    }

    /// `⟨ψ|ψ⟩` reduced by the group relation.
    pub fn normalization(&self, psi: &PsiVector) -> Element {
        self.reduce(&pairing(&psi.components, &psi.components).expect("same vector"))
    }

    /// `p_{αβ} = (−1)^{|α|} ψ_α (ψ_β)♦`, reduced by the group relation.
    pub fn projector(&self, psi: &PsiVector) -> SuperMatrix<Element> {
        let shape = psi.shape();
        let conj: Vec<Element> = psi.components.iter().map(Element::diamond).collect();
        SuperMatrix::from_fn(self.table(), shape, shape, Some(Parity::Even), |i, j| {
            let x = self.reduce(&(&psi.components[i] * &conj[j]));
            if shape.parity(i) == Parity::Odd {
                -x
            } else {
                x
            }
        })
        .expect("projector entries have the parity of their position")
    }

    pub fn projector_for(&self, sign: Sign, n: u32) -> Result<SuperMatrix<Element>> {
        Ok(self.projector(&self.psi(sign, n)?))
    }

    /// Charge and rank parity of the projector of `ψ_{∓n}`.
    pub fn k_label(&self, sign: Sign, n: u32) -> KLabel {
        KLabel {
            charge: sign.charge(n),
            parity: Parity::Even,
        }
    }

    fn u1_map(&self) -> Vec<(&'static str, Element)> {
        let (w, wd) = (self.gen("w"), self.gen("w♦"));
        ["a", "b", "η"]
            .into_iter()
            .zip(["a♦", "b♦", "η♦"])
            .flat_map(|(x, y)| [(x, &self.gen(x) * &w), (y, &self.gen(y) * &wd)])
            .collect()
    }

    /// Applies the right U(1) action to an element of the group algebra.
    pub fn u1_act(&self, x: &Element) -> Element {
        self.reduce(&x.substitute(&self.u1_map()).expect("parity-preserving action"))
    }

    /// Checks `ψ ↦ w^{n}ψ` (sign −) or `(w♦)^{n}ψ` (sign +) and the
    /// invariance of every projector entry under the U(1) action.
    pub fn check_equivariance(&self, sign: Sign, n: u32) -> Result<EquivarianceReport> {
        let psi = self.psi(sign, n)?;
        let weight = match sign {
            Sign::Minus => self.gen("w"),
            Sign::Plus => self.gen("w♦"),
        }
        .pow(n);
        let psi_failures = psi
            .components
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.equal_mod(&self.u1_act(c), &(&weight * c)))
            .map(|(k, _)| k)
            .collect();
        let p = self.projector(&psi);
        let mut projector_failures = Vec::new();
        for i in 0..p.nrows() {
            for j in 0..p.ncols() {
                if !self.equal_mod(&self.u1_act(p.get(i, j)), p.get(i, j)) {
                    projector_failures.push((i, j));
                }
            }
        }
        Ok(EquivarianceReport {
            sign,
            n,
            psi_failures,
            projector_failures,
        })
    }

    /// The equivariant function `Σ_α ψ_α f_α` attached to a column of base
    /// functions `f`.
    pub fn section_to_equivariant(&self, sign: Sign, n: u32, f: &[Element]) -> Result<Element> {
        let psi = self.psi(sign, n)?;
        if f.len() != psi.components.len() {
            return Err(Error::Shape(format!(
                "section has {} entries, ψ has {}",
                f.len(),
                psi.components.len()
            )));
        }
        let sum = psi
            .components
            .iter()
            .zip(f)
            .fold(Element::zero(self.table()), |acc, (x, y)| &acc + &(x * y));
        Ok(self.reduce(&sum))
    }
}
