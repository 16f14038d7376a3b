use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::forms::SuperForm;
use crate::scalar::Coeff;

use super::element::Element;
use super::monomial::{mul_monomials, Monomial};
use super::poly::Poly;
use super::table::GeneratorTable;

#[derive(Clone)]
struct Rule {
    lead: Monomial,
    replacement: Poly,
}

/// An ordered list of rules `lead → replacement`, each strictly decreasing
/// the monomial order, applied exhaustively.
///
/// Rules may mention differentials, so the same system reduces elements and
/// superforms.
#[derive(Clone)]
pub struct RewriteSystem {
    table: Arc<GeneratorTable>,
    rules: Vec<Rule>,
}

impl RewriteSystem {
    pub fn new(table: &Arc<GeneratorTable>) -> Self {
        RewriteSystem {
            table: table.clone(),
            rules: Vec::new(),
        }
    }

    /// Adds `word → replacement`. The word is a product of generator or
    /// differential names (`"db♦"`); any reordering sign is moved onto the
    /// replacement.
    pub fn with_rule(mut self, word: &[&str], replacement: impl Into<SuperForm>) -> Result<Self> {
        let replacement: SuperForm = replacement.into();
        if replacement.table() != &self.table {
            return Err(Error::TableMismatch);
        }
        let mut lead = Poly::constant(&self.table, Coeff::one());
        for name in word {
            lead = lead.mul(&Poly::symbol(&self.table, self.table.lookup_symbol(name)?));
        }
        let (m, c) = match lead.terms.iter().next() {
            Some((m, c)) if lead.terms.len() == 1 => (m.clone(), c.clone()),
            _ => {
                return Err(Error::Contract(format!(
                    "rule lead {} vanishes",
                    word.join("·")
                )))
            }
        };
        let replacement = replacement.0.scale(&c);
        if let Some(top) = replacement.terms.keys().next_back() {
            if *top >= m {
                return Err(Error::Contract(format!(
                    "rule {} → … does not decrease the monomial order",
                    word.join("·")
                )));
            }
        }
        self.rules.push(Rule {
            lead: m,
            replacement,
        });
        Ok(self)
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    fn find(&self, m: &Monomial) -> Option<(&Rule, Monomial)> {
        self.rules
            .iter()
            .find_map(|r| m.cofactor(&r.lead).map(|cof| (r, cof)))
    }

    /// `c·m` rewritten once by `rule`, where `m = lead·cofactor` up to sign.
    fn apply(&self, rule: &Rule, cofactor: &Monomial, c: &Coeff) -> Poly {
        let info = self.table.symbols();
        let (neg, _) = mul_monomials(info, &rule.lead, cofactor)
            .expect("cofactor of a surviving monomial");
        let mut cof = Poly::zero(&self.table);
        cof.add_term(cofactor.clone(), &if neg { -c } else { c.clone() });
        rule.replacement.mul(&cof)
    }

    pub(crate) fn reduce_poly(&self, x: &Poly) -> Poly {
        if self.rules.is_empty() {
            return x.clone();
        }
        let mut pending: BTreeMap<Monomial, Coeff> = x.terms.clone();
        let mut done = Poly::zero(&self.table);
        // Every rewrite replaces the largest pending monomial by strictly
        // smaller ones, so popping from the top terminates.
        while let Some((m, c)) = pending.pop_last() {
            match self.find(&m) {
                None => {
                    done.terms.insert(m, c);
                }
                Some((rule, cof)) => {
                    for (m2, c2) in self.apply(rule, &cof, &c).terms {
                        match pending.entry(m2) {
                            Entry::Vacant(v) => {
                                v.insert(c2);
                            }
                            Entry::Occupied(mut o) => {
                                *o.get_mut() += &c2;
                                if o.get().is_zero() {
                                    o.remove();
                                }
                            }
                        }
                    }
                }
            }
        }
        done
    }

    /// Exhaustive rewriting to a normal form.
    pub fn reduce(&self, x: &Element) -> Element {
        Element::from_poly(self.reduce_poly(&x.0))
    }

    pub fn reduce_form(&self, x: &SuperForm) -> SuperForm {
        SuperForm(self.reduce_poly(&x.0))
    }

    /// Rewrites the largest reducible term once; `None` at a normal form.
    pub fn rewrite_once(&self, x: &Element) -> Option<Element> {
        for (m, c) in x.0.terms.iter().rev() {
            if let Some((rule, cof)) = self.find(m) {
                let mut rest = x.0.clone();
                rest.terms.remove(m);
                return Some(Element::from_poly(rest.add(&self.apply(rule, &cof, c))));
            }
        }
        None
    }
}

impl fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut l = f.debug_list();
        for r in &self.rules {
            l.entry(&format_args!(
                "{} → {:?}",
                r.replacement.fmt_monomial(&r.lead),
                r.replacement
            ));
        }
        l.finish()
    }
}
