//! Sparse linear combinations of basis monomials.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;

use crate::scalar::CycScalar;

/// A finite linear combination `Σ c_m · m` with no zero coefficients stored,
/// so equality of elements is equality of maps.
#[derive(Clone, PartialEq, Eq)]
pub struct Element<M: Ord> {
    terms: BTreeMap<M, CycScalar>,
}

impl<M: Ord> Default for Element<M> {
    fn default() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }
}

impl<M: Ord + Clone> Element<M> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: M, c: CycScalar) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn add_term(&mut self, m: M, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c · other` into `self`.
    pub fn add_scaled(&mut self, other: &Element<M>, c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn add_assign(&mut self, other: &Element<M>) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Element<M>) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), -x);
        }
    }

    pub fn scaled(&self, c: &CycScalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn coeff(&self, m: &M) -> Option<&CycScalar> {
        self.terms.get(m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, M, CycScalar> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &M> {
        self.terms.keys()
    }

    /// Applies a linear map given on monomials.
    pub fn map_linear<N: Ord + Clone>(&self, mut f: impl FnMut(&M) -> Element<N>) -> Element<N> {
        let mut out = Element::zero();
        for (m, c) in &self.terms {
            out.add_scaled(&f(m), c);
        }
        out
    }

    pub fn try_map_linear<N: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&M) -> Result<Element<N>, E>,
    ) -> Result<Element<N>, E> {
        let mut out = Element::zero();
        for (m, c) in &self.terms {
            out.add_scaled(&f(m)?, c);
        }
        Ok(out)
    }
}

impl<M: Ord + Clone> FromIterator<(M, CycScalar)> for Element<M> {
    fn from_iter<I: IntoIterator<Item = (M, CycScalar)>>(iter: I) -> Self {
        let mut e = Self::zero();
        for (m, c) in iter {
            e.add_term(m, c);
        }
        e
    }
}

impl<'a, M: Ord> IntoIterator for &'a Element<M> {
    type Item = (&'a M, &'a CycScalar);
    type IntoIter = btree_map::Iter<'a, M, CycScalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<M: Ord + fmt::Debug> fmt::Debug for Element<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({c})·{m:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
