use std::cmp::Ordering;

use smallvec::SmallVec;

use super::table::SymbolInfo;

/// A sign-free product of symbols in canonical (increasing index) order.
///
/// Nilpotent symbols appear with exponent at most one. The order is graded:
/// total degree first, ties broken lexicographically with later-declared
/// symbols more significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    degree: u32,
    items: SmallVec<[(u8, u16); 8]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub(crate) fn from_sorted(items: SmallVec<[(u8, u16); 8]>) -> Self {
        debug_assert!(items.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(items.iter().all(|&(_, e)| e > 0));
        let degree = items.iter().map(|&(_, e)| e as u32).sum();
        Monomial { degree, items }
    }

    pub(crate) fn symbol(s: usize) -> Self {
        Monomial::from_sorted(smallvec::smallvec![(s as u8, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.items.is_empty()
    }

    /// `(symbol, exponent)` pairs in canonical order.
    pub(crate) fn items(&self) -> &[(u8, u16)] {
        &self.items
    }

    pub(crate) fn parity(&self, info: &[SymbolInfo]) -> u8 {
        self.items
            .iter()
            .map(|&(s, e)| info[s as usize].parity as u32 * e as u32)
            .sum::<u32>() as u8
            % 2
    }

    pub(crate) fn form_degree(&self, info: &[SymbolInfo]) -> u32 {
        self.items
            .iter()
            .map(|&(s, e)| info[s as usize].degree as u32 * e as u32)
            .sum()
    }

    pub(crate) fn contains_any(&self, pred: impl Fn(usize) -> bool) -> bool {
        self.items.iter().any(|&(s, _)| pred(s as usize))
    }

    /// Splits into the part with symbols `< cut` and the rest; the product
    /// of the two in this order is the original monomial with sign `+`.
    pub(crate) fn split_at_symbol(&self, cut: usize) -> (Monomial, Monomial) {
        let pos = self.items.partition_point(|&(s, _)| (s as usize) < cut);
        (
            Monomial::from_sorted(self.items[..pos].into()),
            Monomial::from_sorted(self.items[pos..].into()),
        )
    }

    /// `self = lead · cofactor` exponent-wise, if `lead` divides `self`.
    pub(crate) fn cofactor(&self, lead: &Monomial) -> Option<Monomial> {
        if lead.degree > self.degree {
            return None;
        }
        let mut out: SmallVec<[(u8, u16); 8]> = SmallVec::new();
        let mut j = 0;
        for &(s, e) in &self.items {
            let mut e = e;
            if j < lead.items.len() && lead.items[j].0 == s {
                if lead.items[j].1 > e {
                    return None;
                }
                e -= lead.items[j].1;
                j += 1;
            } else if j < lead.items.len() && lead.items[j].0 < s {
                return None;
            }
            if e > 0 {
                out.push((s, e));
            }
        }
        if j < lead.items.len() {
            return None;
        }
        Some(Monomial::from_sorted(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let mut x = self.items.iter().rev();
            let mut y = other.items.iter().rev();
            loop {
                match (x.next(), y.next()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(s, e)), Some(&(t, f))) => {
                        if s != t {
                            return s.cmp(&t);
                        }
                        if e != f {
                            return e.cmp(&f);
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Product `x · y` brought to canonical order.
///
/// Returns `None` when a nilpotent symbol would repeat, otherwise whether the
/// reordering produced a minus sign. Moving `t` left past `s` costs
/// `(−1)^{deg s·deg t + par s·par t}`.
pub(crate) fn mul_monomials(
    info: &[SymbolInfo],
    x: &Monomial,
    y: &Monomial,
) -> Option<(bool, Monomial)> {
    if x.is_one() {
        return Some((false, y.clone()));
    }
    if y.is_one() {
        return Some((false, x.clone()));
    }
    // Suffix counts of x-symbols strictly greater than the current y symbol.
    let xs = &x.items;
    let mut suffix_deg = vec![0u32; xs.len() + 1];
    let mut suffix_par = vec![0u32; xs.len() + 1];
    for i in (0..xs.len()).rev() {
        let (s, e) = xs[i];
        let si = info[s as usize];
        suffix_deg[i] = suffix_deg[i + 1] + si.degree as u32 * e as u32;
        suffix_par[i] = suffix_par[i + 1] + si.parity as u32 * e as u32;
    }
    let mut sign = 0u32;
    let mut out: SmallVec<[(u8, u16); 8]> = SmallVec::with_capacity(xs.len() + y.items.len());
    let mut i = 0;
    for &(t, f) in &y.items {
        while i < xs.len() && xs[i].0 < t {
            out.push(xs[i]);
            i += 1;
        }
        let ti = info[t as usize];
        if i < xs.len() && xs[i].0 == t {
            if ti.nilpotent() {
                return None;
            }
            // t passes every x-symbol after position i.
            sign += f as u32
                * (ti.degree as u32 * suffix_deg[i + 1] + ti.parity as u32 * suffix_par[i + 1]);
            out.push((t, xs[i].1 + f));
            i += 1;
        } else {
            sign += f as u32 * (ti.degree as u32 * suffix_deg[i] + ti.parity as u32 * suffix_par[i]);
            out.push((t, f));
        }
    }
    out.extend_from_slice(&xs[i..]);
    Some((sign % 2 == 1, Monomial::from_sorted(out)))
}
