//! Monopole projectors over the supersphere `S^{2,2}`.
//!
//! [`Supersphere`] owns the generator table and the relations of the group
//! `UOSP(1,2)`; the submodules build group elements, coordinates, the
//! ψ-vectors, projectors, connections and Chern forms from it.

mod chern;
mod coords;
mod group;
mod psi;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::poly::Poly;
use crate::algebra::{Element, GeneratorTable, RewriteSystem};
use crate::forms::SuperForm;
use crate::scalar::{Coeff, Scalar};

pub use chern::{chern_prefactor, ChernChain};
pub use coords::{CoordinateSet, IdentityCheck};
pub use group::{NilpotentExpReport, Osp12};
pub use psi::{pairing, EquivarianceReport, PsiVector};

/// Which of the two ψ-vectors of a given `n`.
///
/// `Minus` builds `ψ₋ₙ` in `a, b, η`, whose connection is the graded
/// monopole labelled with charge `+n`. `Plus` builds `ψ₊ₙ` in the conjugate
/// generators, labelled `−n`. The supertrace route to the Chern number
/// returns the opposite of these labels; see [`Supersphere::chern_form`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Minus, Sign::Plus];

    /// Charge label of the monopole built from `ψ_{∓n}`.
    pub fn charge(self, n: u32) -> i64 {
        match self {
            Sign::Minus => n as i64,
            Sign::Plus => -(n as i64),
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Sign::Minus => "minus",
            Sign::Plus => "plus",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// K-theory label of a monopole projector: its charge and the parity of its
/// rank, which is `(1|0)` for every `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KLabel {
    pub charge: i64,
    pub parity: crate::algebra::Parity,
}

/// Generator table and relations for the supersphere computations.
///
/// The table declares, in order, `a, a♦, b, b♦` (even), `η, η♦` (odd), the
/// circle variable `w, w♦`, the base coordinates `x0, x1, x2` (real, even)
/// and `ξ-, ξ+` (odd, with `ξ-♦ = ξ+`), and the auxiliary inverse `b⁻¹`
/// used to decide equality of forms.
pub struct Supersphere {
    table: Arc<GeneratorTable>,
    group: RewriteSystem,
    forms: RewriteSystem,
    sphere: RewriteSystem,
    local: RewriteSystem,
    local_map: HashMap<usize, Poly>,
}

static SHARED: OnceLock<Supersphere> = OnceLock::new();

impl Supersphere {
    /// A process-wide instance; construction is cheap but tables compare by
    /// pointer first, so sharing one keeps comparisons fast.
    pub fn shared() -> &'static Supersphere {
        SHARED.get_or_init(Supersphere::new)
    }

    pub fn new() -> Self {
        let table = GeneratorTable::builder()
            .even_pair("a", "a♦")
            .even_pair("b", "b♦")
            .odd_pair("η", "η♦")
            .even_pair("w", "w♦")
            .real("x0")
            .real("x1")
            .real("x2")
            .odd_pair("ξ-", "ξ+")
            .even_pair("b⁻¹", "b♦⁻¹")
            .build()
            .expect("supersphere generator table");
        let g = |n: &str| Element::generator(&table, n).expect("declared generator");
        let one = Element::one(&table);
        let (a, ad, b, bd) = (g("a"), g("a♦"), g("b"), g("b♦"));

        let group = RewriteSystem::new(&table)
            .with_rule(&["b", "b♦"], &one - &(&a * &ad))
            .and_then(|r| r.with_rule(&["w", "w♦"], one.clone()))
            .expect("group relations");
        let form = |x: &Element| SuperForm::from(x);
        let dgroup = -(&(&form(&ad) * &a.d()) + &(&form(&a) * &ad.d())) - &form(&bd) * &b.d();
        let forms = group
            .clone()
            .with_rule(&["b", "db♦"], dgroup)
            .expect("differential relation");

        let (x0, x1, x2) = (g("x0"), g("x1"), g("x2"));
        let half = Scalar::ratio(1, 2);
        let sphere = RewriteSystem::new(&table)
            .with_rule(
                &["ξ-", "ξ+"],
                (&one - &(&(&x0 * &x0) + &(&(&x1 * &x1) + &(&x2 * &x2)))).scale(half),
            )
            .expect("sphere relation");

        // Localizing at b: b♦ = (1 − aa♦)/b, so both relations and their
        // differentials become substitutions, and equality of forms is
        // decided by the confluent system {b·b⁻¹ → 1, w·w♦ → 1}.
        let binv = g("b⁻¹");
        let local = RewriteSystem::new(&table)
            .with_rule(&["b", "b⁻¹"], one.clone())
            .and_then(|r| r.with_rule(&["w", "w♦"], one.clone()))
            .expect("localized relations");
        let n = table.len();
        let kb = table.lookup("b").expect("b");
        let kbd = table.lookup("b♦").expect("b♦");
        let kbinv = table.lookup("b⁻¹").expect("b⁻¹");
        let img = (&one - &(&a * &ad)) * binv.clone();
        let mut dbinv = HashMap::new();
        // d(b⁻¹) = −b⁻²·db
        dbinv.insert(
            n + kbinv,
            (&binv * &binv).0.mul(&Poly::symbol(&table, n + kb)).neg(),
        );
        let dimg = img.0.d().substitute_symbols(&dbinv);
        let mut local_map = HashMap::new();
        local_map.insert(kbd, img.0);
        local_map.insert(n + kbd, dimg);

        Supersphere {
            table,
            group,
            forms,
            sphere,
            local,
            local_map,
        }
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    /// The generator called `name`; panics on names outside the table.
    pub fn gen(&self, name: &str) -> Element {
        Element::generator(&self.table, name)
            .unwrap_or_else(|_| panic!("`{name}` is not a supersphere generator"))
    }

    pub fn constant(&self, c: impl Into<Coeff>) -> Element {
        Element::constant(&self.table, c)
    }

    pub fn one(&self) -> Element {
        Element::one(&self.table)
    }

    /// `{bb♦ → 1 − aa♦, ww♦ → 1}`: confluent, so reduction decides equality
    /// of elements modulo the group relation.
    pub fn group_rules(&self) -> &RewriteSystem {
        &self.group
    }

    /// The group rules plus `b·db♦ → −(a♦da + a·da♦ + b♦db)`. Useful for
    /// shrinking forms; not confluent, so equality goes through
    /// [`Supersphere::congruent`].
    pub fn form_rules(&self) -> &RewriteSystem {
        &self.forms
    }

    /// `ξ-ξ+ → ½(1 − x0² − x1² − x2²)` on the coordinate generators.
    pub fn sphere_rules(&self) -> &RewriteSystem {
        &self.sphere
    }

    pub fn reduce(&self, x: &Element) -> Element {
        self.group.reduce(x)
    }

    pub fn reduce_form(&self, x: &SuperForm) -> SuperForm {
        self.forms.reduce_form(x)
    }

    /// Canonical image of a form in the localization at `b`, where the
    /// relation `aa♦ + bb♦ = 1` and its differential are solved for `b♦`
    /// and `db♦`. The quotient ring is a domain and `b` is not a zero
    /// divisor, so two forms agree modulo the differential ideal exactly
    /// when their images agree.
    pub fn local_normal_form(&self, x: &SuperForm) -> SuperForm {
        let sub = x.0.substitute_symbols(&self.local_map);
        SuperForm(self.local.reduce_poly(&sub))
    }

    /// Equality of forms modulo the group relation and its differential.
    pub fn congruent(&self, x: &SuperForm, y: &SuperForm) -> bool {
        self.local_normal_form(&(x - y)).is_zero()
    }

    /// Equality of elements modulo the group relation.
    pub fn equal_mod(&self, x: &Element, y: &Element) -> bool {
        self.group.reduce(&(x - y)).is_zero()
    }
}

impl Default for Supersphere {
    fn default() -> Self {
        Supersphere::new()
    }
}

impl fmt::Debug for Supersphere {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Supersphere")
            .field("table", &self.table.to_string())
            .field("group", &self.group)
            .field("forms", &self.forms)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn differential_rule_kills_d_of_the_relation() {
        let ss = Supersphere::shared();
        let f = &(&ss.gen("a") * &ss.gen("a♦")) + &(&ss.gen("b") * &ss.gen("b♦"));
        let df = f.d();
        assert!(ss.reduce_form(&df).is_zero());
        assert!(ss.local_normal_form(&df).is_zero());
    }

    #[test]
    fn localization_respects_the_group_relation() {
        let ss = Supersphere::shared();
        let f = &(&ss.gen("a") * &ss.gen("a♦")) + &(&ss.gen("b") * &ss.gen("b♦"));
        let cube = f.pow(3);
        assert_eq!(ss.reduce(&cube), ss.one());
        assert!(ss.congruent(&cube.into(), &ss.one().into()));
    }

    #[test]
    fn charge_bookkeeping() {
        assert_eq!(Sign::Minus.charge(3), 3);
        assert_eq!(Sign::Plus.charge(3), -3);
    }
}
