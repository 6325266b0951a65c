//! Degenerate affine and cyclotomic Hecke algebras of type A, their tensor
//! products `H^μ = H_{μ_1} ⊗ ⋯ ⊗ H_{μ_r}`, and matrices over `H^μ`.
//!
//! `H^μ` lives on `n = Σ μ_a` global strands; the permutation part of a
//! monomial must preserve every block. Multiplication uses the same
//! straightening as the Yokonuma algebra with `e_i` replaced by `1`, and the
//! cyclotomic relation is imposed on the first strand of each block.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{self, Character, Composition, Permutation};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::rewrite::{divided_difference, Variant};
use crate::scalar::{CycScalar, CyclotomicField};
use crate::yokonuma::exponent_box;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HParams {
    pub blocks: Composition,
    pub variant: Variant,
}

/// `x̄^α w̄`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HMonomial {
    pub x: Vec<u32>,
    pub w: Permutation,
}

impl HMonomial {
    pub fn new(x: Vec<u32>, w: Permutation) -> Self {
        HMonomial { x, w }
    }

    pub fn one(n: usize) -> Self {
        HMonomial {
            x: vec![0; n],
            w: Permutation::identity(n),
        }
    }
}

pub type HElement = Element<HMonomial>;

#[derive(Clone, Debug)]
pub struct HAlgebra {
    params: HParams,
    field: Arc<CyclotomicField>,
    reduction: Option<Vec<CycScalar>>,
    block_of: Vec<usize>,
    is_block_start: Vec<bool>,
}

impl HAlgebra {
    /// `H^μ` with scalars extended to `Q(ζ_r)` for the given field.
    pub fn new(params: HParams, field: &Arc<CyclotomicField>) -> Result<Self> {
        if params.blocks.total() == 0 {
            return Err(Error::ParameterMismatch("H^μ needs at least one strand".into()));
        }
        if params.variant.level() == Some(0) {
            return Err(Error::ParameterMismatch("cyclotomic level must be at least 1".into()));
        }
        let block_of = params.blocks.block_of_strands();
        let mut is_block_start = vec![false; block_of.len()];
        for s in params.blocks.block_starts() {
            is_block_start[s] = true;
        }
        let reduction = params.variant.reduction_rule(field);
        Ok(HAlgebra {
            params,
            field: field.clone(),
            reduction,
            block_of,
            is_block_start,
        })
    }

    /// `H_n^d` (or the affine `Ĥ_n`) over `Q`.
    pub fn single(n: usize, variant: Variant) -> Result<Self> {
        let params = HParams {
            blocks: Composition::new(vec![n]),
            variant,
        };
        Self::new(params, &CyclotomicField::new(1))
    }

    pub fn params(&self) -> &HParams {
        &self.params
    }

    pub fn blocks(&self) -> &Composition {
        &self.params.blocks
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.block_of.len()
    }

    pub fn level(&self) -> Option<usize> {
        self.params.variant.level()
    }

    pub fn block_of(&self) -> &[usize] {
        &self.block_of
    }

    pub fn scalar(&self, k: i64) -> CycScalar {
        CycScalar::from_integer(&self.field, k)
    }

    pub fn one(&self) -> HElement {
        HElement::monomial(HMonomial::one(self.n()), self.scalar(1))
    }

    pub fn check_monomial(&self, m: &HMonomial, allow_overflow: bool) -> Result<()> {
        let n = self.n();
        for got in [m.x.len(), m.w.degree()] {
            if got != n {
                return Err(Error::SizeMismatch { expected: n, got });
            }
        }
        if !combinatorics::in_young_subgroup(&m.w, &self.block_of) {
            return Err(Error::OutsideYoungSubgroup(format!(
                "{} for blocks {:?}",
                m.w, self.params.blocks
            )));
        }
        if let (Some(d), false) = (self.level(), allow_overflow) {
            if m.x.iter().any(|&a| a as usize >= d) {
                return Err(Error::ParameterMismatch(format!(
                    "exponent vector {:?} not reduced for level {d}",
                    m.x
                )));
            }
        }
        Ok(())
    }

    pub fn validate(&self, e: &HElement) -> Result<()> {
        for (m, c) in e {
            if c.field().order() != self.field.order() {
                return Err(Error::ParameterMismatch("coefficient field differs from the algebra's".into()));
            }
            self.check_monomial(m, false)?;
        }
        Ok(())
    }

    fn crossing_allowed(&self, i: usize) -> bool {
        self.block_of[i] == self.block_of[i + 1]
    }

    /// `x̄_{j+1}`.
    pub fn x(&self, j: usize) -> HElement {
        let mut x = vec![0; self.n()];
        x[j] = 1;
        self.basis_element(&HMonomial::new(x, Permutation::identity(self.n())))
            .expect("generator is valid")
    }

    /// `s̄_{i+1}`; both strands must lie in one block.
    pub fn s(&self, i: usize) -> Result<HElement> {
        let m = HMonomial::new(vec![0; self.n()], Permutation::simple(self.n(), i));
        self.check_monomial(&m, false)?;
        Ok(HElement::monomial(m, self.scalar(1)))
    }

    /// The monomial in normal form, reducing exponents when needed.
    pub fn basis_element(&self, m: &HMonomial) -> Result<HElement> {
        self.check_monomial(m, true)?;
        let start = HMonomial::new(vec![0; self.n()], m.w.clone());
        let mut cur = HElement::monomial(start, self.scalar(1));
        for (j, &a) in m.x.iter().enumerate() {
            for _ in 0..a {
                cur = self.lmul_x(j, &cur);
            }
        }
        Ok(cur)
    }

    pub fn normalize(&self, e: &HElement) -> Result<HElement> {
        e.try_map_linear(|m| self.basis_element(m))
    }

    fn lmul_s(&self, i: usize, e: &HElement) -> HElement {
        let mut out = HElement::zero();
        for (m, c) in e {
            self.ls_into(i, m, c, &mut out);
        }
        out
    }

    fn ls_into(&self, i: usize, m: &HMonomial, c: &CycScalar, out: &mut HElement) {
        debug_assert!(self.crossing_allowed(i));
        let mut x = m.x.clone();
        x.swap(i, i + 1);
        out.add_term(HMonomial::new(x, m.w.left_mul_simple(i)), c.clone());
        for (sign, g) in divided_difference(&m.x, i) {
            let coeff = if sign > 0 { c.clone() } else { -c };
            out.add_term(HMonomial::new(g, m.w.clone()), coeff);
        }
    }

    fn lmul_x(&self, j: usize, e: &HElement) -> HElement {
        let mut out = HElement::zero();
        for (m, c) in e {
            self.lx_into(j, m, c, &mut out);
        }
        out
    }

    fn lx_into(&self, j: usize, m: &HMonomial, c: &CycScalar, out: &mut HElement) {
        let overflow = self.level().is_some_and(|d| m.x[j] as usize + 1 >= d);
        if !overflow {
            let mut x = m.x.clone();
            x[j] += 1;
            out.add_term(HMonomial::new(x, m.w.clone()), c.clone());
            return;
        }
        if self.is_block_start[j] {
            let rule = self.reduction.as_ref().expect("cyclotomic rule");
            for (k, rk) in rule.iter().enumerate() {
                let mut x = m.x.clone();
                x[j] = k as u32;
                out.add_term(HMonomial::new(x, m.w.clone()), c * rk);
            }
            return;
        }
        // x̄_{j+1} = s̄_j x̄_j s̄_j + s̄_j
        let mut sm = HElement::zero();
        self.ls_into(j - 1, m, c, &mut sm);
        let xsm = self.lmul_x(j - 1, &sm);
        for (m2, c2) in &xsm {
            self.ls_into(j - 1, m2, c2, out);
        }
        out.add_assign(&sm);
    }

    fn mul_monomial_left(&self, a: &HMonomial, b: &HElement) -> HElement {
        let mut cur = b.clone();
        for &i in a.w.reduced_word().iter().rev() {
            cur = self.lmul_s(i, &cur);
        }
        for (j, &k) in a.x.iter().enumerate() {
            for _ in 0..k {
                cur = self.lmul_x(j, &cur);
            }
        }
        cur
    }

    /// Product of two basis monomials, without validation.
    pub fn mul_basis(&self, a: &HMonomial, b: &HMonomial) -> HElement {
        self.mul_monomial_left(a, &HElement::monomial(b.clone(), self.scalar(1)))
    }

    pub fn multiply(&self, a: &HElement, b: &HElement) -> Result<HElement> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(self.multiply_unchecked(a, b))
    }

    pub(crate) fn multiply_unchecked(&self, a: &HElement, b: &HElement) -> HElement {
        let mut out = HElement::zero();
        for (m, c) in a {
            out.add_scaled(&self.mul_monomial_left(m, b), c);
        }
        out
    }

    /// `x̄^β w̄` for `w ∈ S^μ`, sorted.
    pub fn enumerate_basis(&self, degree_bound: Option<u32>) -> Result<Vec<HMonomial>> {
        let n = self.n();
        let exps: Vec<Vec<u32>> = match (self.level(), degree_bound) {
            (Some(d), _) => exponent_box(n, d as u32),
            (None, Some(b)) => exponent_box(n, b + 1)
                .into_iter()
                .filter(|e| e.iter().sum::<u32>() <= b)
                .collect(),
            (None, None) => return Err(Error::MissingDegreeBound),
        };
        let perms = combinatorics::young_subgroup(&self.params.blocks);
        let mut out = Vec::with_capacity(exps.len() * perms.len());
        for x in &exps {
            for w in &perms {
                out.push(HMonomial::new(x.clone(), w.clone()));
            }
        }
        Ok(out)
    }

    pub fn dimension(&self) -> Result<usize> {
        let d = self.level().ok_or(Error::AffineVariant)?;
        let young: u128 = self.params.blocks.parts.iter().map(|&m| combinatorics::factorial(m)).product();
        Ok(d.pow(self.n() as u32) * young as usize)
    }

    /// The trace `τ` on `H_n^d`: coefficient of `x̄^{(d-1,…,d-1)}`.
    pub fn form_tau_n(&self, e: &HElement) -> Result<CycScalar> {
        let nonempty = self.params.blocks.parts.iter().filter(|&&m| m > 0).count();
        if nonempty != 1 {
            return Err(Error::ParameterMismatch(format!(
                "τ_n needs a single block, got {:?}",
                self.params.blocks
            )));
        }
        self.form_tau_mu(e)
    }

    /// `τ^μ = τ_{μ_1} ⊗ ⋯ ⊗ τ_{μ_r}`.
    pub fn form_tau_mu(&self, e: &HElement) -> Result<CycScalar> {
        let d = self.level().ok_or(Error::AffineVariant)?;
        self.validate(e)?;
        let top = HMonomial::new(vec![d as u32 - 1; self.n()], Permutation::identity(self.n()));
        Ok(e.coeff(&top).cloned().unwrap_or_else(|| CycScalar::zero(&self.field)))
    }
}

/// A square matrix over `H^μ` indexed by the characters of composition `μ`
/// in canonical order. Only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixOverH {
    pub mu: Composition,
    chars: Vec<Character>,
    entries: Vec<HElement>,
}

impl MatrixOverH {
    pub fn zero(mu: &Composition) -> Self {
        let chars = combinatorics::characters_with_composition(mu);
        let m = chars.len();
        MatrixOverH {
            mu: mu.clone(),
            chars,
            entries: vec![HElement::zero(); m * m],
        }
    }

    pub fn identity(h: &HAlgebra) -> Self {
        let mut out = Self::zero(h.blocks());
        let m = out.size();
        for k in 0..m {
            out.entries[k * m + k] = h.one();
        }
        out
    }

    /// `𝟙_{χ,χ'} · h`.
    pub fn unit(mu: &Composition, row: &Character, col: &Character, h: HElement) -> Result<Self> {
        let mut out = Self::zero(mu);
        *out.entry_mut(row, col)? = h;
        Ok(out)
    }

    pub fn size(&self) -> usize {
        self.chars.len()
    }

    pub fn characters(&self) -> &[Character] {
        &self.chars
    }

    pub fn index_of(&self, chi: &Character) -> Result<usize> {
        self.chars
            .binary_search(chi)
            .map_err(|_| Error::OutsideBlock(format!("{chi:?} has composition other than {:?}", self.mu)))
    }

    pub fn get(&self, row: &Character, col: &Character) -> Result<&HElement> {
        let (i, j) = (self.index_of(row)?, self.index_of(col)?);
        Ok(&self.entries[i * self.size() + j])
    }

    pub fn get_index(&self, i: usize, j: usize) -> &HElement {
        &self.entries[i * self.size() + j]
    }

    pub fn entry_mut(&mut self, row: &Character, col: &Character) -> Result<&mut HElement> {
        let (i, j) = (self.index_of(row)?, self.index_of(col)?);
        let m = self.size();
        Ok(&mut self.entries[i * m + j])
    }

    /// Nonzero entries in row-major order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (&Character, &Character, &HElement)> {
        let m = self.size();
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(move |(k, e)| (&self.chars[k / m], &self.chars[k % m], e))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(HElement::is_zero)
    }

    pub fn add_assign(&mut self, other: &MatrixOverH) -> Result<()> {
        self.check_same(other)?;
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            a.add_assign(b);
        }
        Ok(())
    }

    pub fn scaled(&self, c: &CycScalar) -> MatrixOverH {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.scaled(c);
        }
        out
    }

    fn check_same(&self, other: &MatrixOverH) -> Result<()> {
        if self.mu != other.mu {
            return Err(Error::SizeMismatch {
                expected: self.size(),
                got: other.size(),
            });
        }
        Ok(())
    }

    pub fn trace(&self) -> HElement {
        let mut t = HElement::zero();
        for k in 0..self.size() {
            t.add_assign(self.get_index(k, k));
        }
        t
    }
}

impl HAlgebra {
    pub fn mat_multiply(&self, a: &MatrixOverH, b: &MatrixOverH) -> Result<MatrixOverH> {
        a.check_same(b)?;
        if a.mu != self.params.blocks {
            return Err(Error::ParameterMismatch(format!(
                "matrix for {:?} over H^{:?}",
                a.mu, self.params.blocks
            )));
        }
        let m = a.size();
        let mut out = MatrixOverH::zero(&a.mu);
        for i in 0..m {
            for k in 0..m {
                let x = a.get_index(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..m {
                    let y = b.get_index(k, j);
                    if !y.is_zero() {
                        let p = self.multiply(x, y)?;
                        out.entries[i * m + j].add_assign(&p);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `τ^μ ∘ Tr`.
    pub fn mat_trace_form(&self, a: &MatrixOverH) -> Result<CycScalar> {
        self.form_tau_mu(&a.trace())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(k: i64) -> Rational {
        Rational::from_integer(k.into())
    }

    fn h(blocks: &[usize], v: &[i64]) -> HAlgebra {
        let params = HParams {
            blocks: Composition::new(blocks.to_vec()),
            variant: Variant::cyclotomic(v.iter().map(|&k| q(k)).collect()).unwrap(),
        };
        HAlgebra::new(params, &CyclotomicField::new(1)).unwrap()
    }

    fn mul(a: &HAlgebra, x: &HElement, y: &HElement) -> HElement {
        a.multiply(x, y).unwrap()
    }

    #[test]
    fn defining_relations() {
        let a = h(&[3], &[0, 2]);
        let one = a.one();
        for i in 0..2 {
            let s = a.s(i).unwrap();
            assert_eq!(mul(&a, &s, &s), one);
            let mut rhs = mul(&a, &a.x(i), &s);
            rhs.add_assign(&one);
            assert_eq!(mul(&a, &s, &a.x(i + 1)), rhs);
        }
        let (s1, s2) = (a.s(0).unwrap(), a.s(1).unwrap());
        assert_eq!(mul(&a, &mul(&a, &s1, &s2), &s1), mul(&a, &mul(&a, &s2, &s1), &s2));
        assert_eq!(mul(&a, &s1, &a.x(2)), mul(&a, &a.x(2), &s1));
        // x_1^2 = 2 x_1 for v = (0, 2)
        assert_eq!(mul(&a, &a.x(0), &a.x(0)), a.x(0).scaled(&a.scalar(2)));
        for j in 0..3 {
            for k in 0..3 {
                assert_eq!(mul(&a, &a.x(j), &a.x(k)), mul(&a, &a.x(k), &a.x(j)));
            }
        }
    }

    #[test]
    fn level_one_is_group_algebra() {
        let a = h(&[2], &[5]);
        assert_eq!(a.x(0), a.one().scaled(&a.scalar(5)));
        // x_2 = s x_1 s + s = 5 + s
        let mut expect = a.one().scaled(&a.scalar(5));
        expect.add_assign(&a.s(0).unwrap());
        assert_eq!(a.x(1), expect);
        assert_eq!(a.enumerate_basis(None).unwrap().len(), 2);
    }

    #[test]
    fn blocks_are_independent() {
        let a = h(&[1, 2], &[0, 1]);
        assert!(matches!(a.s(0), Err(Error::OutsideYoungSubgroup(_))));
        assert!(a.s(1).is_ok());
        // x_1 x_1 = x_1 on the first block start, x_2 x_2 = x_2 on the second
        assert_eq!(mul(&a, &a.x(0), &a.x(0)), a.x(0));
        assert_eq!(mul(&a, &a.x(1), &a.x(1)), a.x(1));
        assert_eq!(a.enumerate_basis(None).unwrap().len(), 8 * 2);
        assert_eq!(a.dimension().unwrap(), 16);
    }

    #[test]
    fn tau_gram_small() {
        let a = h(&[1], &[0, 3]);
        let basis = a.enumerate_basis(None).unwrap();
        let vals: Vec<Vec<CycScalar>> = basis
            .iter()
            .map(|b1| {
                basis
                    .iter()
                    .map(|b2| a.form_tau_n(&a.mul_basis(b1, b2)).unwrap())
                    .collect()
            })
            .collect();
        let ints: Vec<Vec<i64>> = vals
            .iter()
            .map(|row| row.iter().map(|c| c.to_rational().unwrap().to_integer().try_into().unwrap()).collect())
            .collect();
        assert_eq!(ints, vec![vec![0, 1], vec![1, 3]]);
        assert!(h(&[1, 1], &[0]).form_tau_n(&h(&[1, 1], &[0]).one()).is_err());
    }

    #[test]
    fn matrix_units_multiply() {
        let mu = Composition::new(vec![1, 1]);
        let a = h(&[1, 1], &[0]);
        let c12 = Character::new(vec![1, 2]);
        let c21 = Character::new(vec![2, 1]);
        let u = |r: &Character, c: &Character| MatrixOverH::unit(&mu, r, c, a.one()).unwrap();
        assert_eq!(a.mat_multiply(&u(&c12, &c21), &u(&c21, &c12)).unwrap(), u(&c12, &c12));
        assert!(a.mat_multiply(&u(&c12, &c21), &u(&c12, &c12)).unwrap().is_zero());
        assert!(a.mat_trace_form(&u(&c12, &c21)).unwrap().is_zero());
        assert!(a.mat_trace_form(&u(&c21, &c21)).unwrap().is_one());
        assert!(MatrixOverH::unit(&mu, &Character::new(vec![1, 1]), &c12, a.one()).is_err());
    }
}
