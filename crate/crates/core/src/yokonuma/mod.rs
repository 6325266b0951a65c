//! Degenerate affine Yokonuma-Hecke algebras and their cyclotomic quotients.
//!
//! Elements are stored in the idempotent basis `E_χ x^α f_w`. Products are
//! computed by letting the generators of the left factor act on the right
//! factor one at a time:
//!
//! - `f_w E_ψ = E_{w(ψ)} f_w` and `E_χ E_ψ = δ_{χψ} E_χ`;
//! - `f_i x^γ = x^{s_i γ} f_i + e_i ∂_i(x^γ)` where `∂_i` is the divided
//!   difference, which encodes `f_i x_{i+1} = x_i f_i + e_i` and
//!   `f_i x_i = x_{i+1} f_i - e_i`;
//! - `E_χ e_i` is `E_χ` when `χ` agrees on strands `i, i+1`, else `0`;
//! - `f_u f_v = f_{uv}`;
//! - in the cyclotomic quotient an exponent reaching `d` on strand 1 is
//!   rewritten with `(x_1 - v_1)⋯(x_1 - v_d) = 0`, and on strand `j > 1`
//!   with `x_j = f_{j-1} x_{j-1} f_{j-1} + e_{j-1} f_{j-1}`, which recurses
//!   on a strictly lower strand.
//!
//! Strand indices in this API are 0-based: `x(0)` is `x_1`, `f(0)` is `f_1`.

mod tbasis;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{self, all_characters, chi0, comp_of, Character, Composition, Permutation};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::rewrite::{divided_difference, Variant};
use crate::scalar::{CycScalar, CyclotomicField};

pub use tbasis::{TElement, TMonomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YParams {
    pub r: usize,
    pub n: usize,
    pub variant: Variant,
}

impl YParams {
    pub fn affine(r: usize, n: usize) -> Self {
        YParams {
            r,
            n,
            variant: Variant::Affine,
        }
    }

    pub fn cyclotomic(r: usize, n: usize, v: Vec<crate::scalar::Rational>) -> Self {
        YParams {
            r,
            n,
            variant: Variant::Cyclotomic { v },
        }
    }

    pub fn level(&self) -> Option<usize> {
        self.variant.level()
    }

    fn validate(&self) -> Result<()> {
        if self.r == 0 || self.n == 0 {
            return Err(Error::ParameterMismatch("r and n must be positive".into()));
        }
        if self.level() == Some(0) {
            return Err(Error::ParameterMismatch("cyclotomic level must be at least 1".into()));
        }
        Ok(())
    }
}

/// The basis monomial `E_χ x^α f_w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct YMonomial {
    pub chi: Character,
    pub x: Vec<u32>,
    pub w: Permutation,
}

impl YMonomial {
    pub fn new(chi: Character, x: Vec<u32>, w: Permutation) -> Self {
        YMonomial { chi, x, w }
    }

    /// `E_χ` itself.
    pub fn idempotent(chi: Character) -> Self {
        let n = chi.len();
        YMonomial {
            chi,
            x: vec![0; n],
            w: Permutation::identity(n),
        }
    }
}

pub type YElement = Element<YMonomial>;

/// An algebra context: parameters, coefficient field and the cached
/// cyclotomic reduction rule. Immutable once built.
#[derive(Clone, Debug)]
pub struct YAlgebra {
    params: YParams,
    field: Arc<CyclotomicField>,
    reduction: Option<Vec<CycScalar>>,
}

impl YAlgebra {
    pub fn new(params: YParams) -> Result<Self> {
        params.validate()?;
        let field = CyclotomicField::new(params.r);
        let reduction = params.variant.reduction_rule(&field);
        Ok(YAlgebra {
            params,
            field,
            reduction,
        })
    }

    pub fn params(&self) -> &YParams {
        &self.params
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn r(&self) -> usize {
        self.params.r
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn level(&self) -> Option<usize> {
        self.params.level()
    }

    fn require_level(&self) -> Result<usize> {
        self.level().ok_or(Error::AffineVariant)
    }

    /// `(r·d)^n · n!` for the cyclotomic quotient.
    pub fn dimension(&self) -> Result<usize> {
        let d = self.require_level()?;
        Ok((self.r() * d).pow(self.n() as u32) * combinatorics::factorial(self.n()) as usize)
    }

    pub fn scalar(&self, k: i64) -> CycScalar {
        CycScalar::from_integer(&self.field, k)
    }

    /// Checks shape and ranges; `allow_overflow` admits exponents `>= d`.
    pub fn check_monomial(&self, m: &YMonomial, allow_overflow: bool) -> Result<()> {
        let n = self.n();
        for got in [m.chi.len(), m.x.len(), m.w.degree()] {
            if got != n {
                return Err(Error::SizeMismatch { expected: n, got });
            }
        }
        m.chi.check_range(self.r())?;
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

    /// Checks that `e` is a normal-form element of this algebra.
    pub fn validate(&self, e: &YElement) -> Result<()> {
        for (m, c) in e {
            if c.field().order() != self.r() {
                return Err(Error::ParameterMismatch(format!(
                    "coefficient in Q(ζ_{}) for an algebra over Q(ζ_{})",
                    c.field().order(),
                    self.r()
                )));
            }
            self.check_monomial(m, false)?;
        }
        Ok(())
    }

    pub fn one(&self) -> YElement {
        all_characters(self.r(), self.n())
            .into_iter()
            .map(|chi| (YMonomial::idempotent(chi), self.scalar(1)))
            .collect()
    }

    pub fn idempotent(&self, chi: &Character) -> Result<YElement> {
        let m = YMonomial::idempotent(chi.clone());
        self.check_monomial(&m, false)?;
        Ok(YElement::monomial(m, self.scalar(1)))
    }

    /// `E_μ = Σ_{Comp(χ) = μ} E_χ`.
    pub fn block_idempotent(&self, mu: &Composition) -> Result<YElement> {
        if mu.num_parts() != self.r() || mu.total() != self.n() {
            return Err(Error::ParameterMismatch(format!(
                "{mu:?} is not an {}-composition of {}",
                self.r(),
                self.n()
            )));
        }
        Ok(combinatorics::characters_with_composition(mu)
            .into_iter()
            .map(|chi| (YMonomial::idempotent(chi), self.scalar(1)))
            .collect())
    }

    /// The monomial `E_χ x^α f_w` in normal form, reducing exponents when needed.
    pub fn basis_element(&self, m: &YMonomial) -> Result<YElement> {
        self.check_monomial(m, true)?;
        match self.level() {
            Some(d) if m.x.iter().any(|&a| a as usize >= d) => self.cyclotomic_reduce(m),
            _ => Ok(YElement::monomial(m.clone(), self.scalar(1))),
        }
    }

    fn spread(&self, mut build: impl FnMut(Character) -> YMonomial) -> YElement {
        let mut out = YElement::zero();
        for chi in all_characters(self.r(), self.n()) {
            let m = build(chi);
            out.add_scaled(&self.basis_element(&m).expect("generator monomials are valid"), &self.scalar(1));
        }
        out
    }

    /// `x_{j+1} = Σ_χ E_χ x_{j+1}`.
    pub fn x(&self, j: usize) -> YElement {
        let n = self.n();
        self.spread(|chi| {
            let mut x = vec![0; n];
            x[j] = 1;
            YMonomial::new(chi, x, Permutation::identity(n))
        })
    }

    /// `x^α` in normal form.
    pub fn x_power(&self, alpha: &[u32]) -> Result<YElement> {
        if alpha.len() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                got: alpha.len(),
            });
        }
        let n = self.n();
        let mut out = YElement::zero();
        for chi in all_characters(self.r(), n) {
            let m = YMonomial::new(chi, alpha.to_vec(), Permutation::identity(n));
            out.add_assign(&self.basis_element(&m)?);
        }
        Ok(out)
    }

    /// `f_w = Σ_χ E_χ f_w`.
    pub fn f_perm(&self, w: &Permutation) -> YElement {
        let n = self.n();
        self.spread(|chi| YMonomial::new(chi, vec![0; n], w.clone()))
    }

    /// `f_{i+1}`.
    pub fn f(&self, i: usize) -> YElement {
        self.f_perm(&Permutation::simple(self.n(), i))
    }

    /// `t_{j+1} = Σ_χ χ(t_{j+1}) E_χ`.
    pub fn t(&self, j: usize) -> YElement {
        all_characters(self.r(), self.n())
            .into_iter()
            .map(|chi| {
                let c = CycScalar::zeta(&self.field, chi.values[j]).expect("character in range");
                (YMonomial::idempotent(chi), c)
            })
            .collect()
    }

    /// `e_{i+1} = Σ_{χ_i = χ_{i+1}} E_χ`.
    pub fn e(&self, i: usize) -> YElement {
        all_characters(self.r(), self.n())
            .into_iter()
            .filter(|chi| chi.values[i] == chi.values[i + 1])
            .map(|chi| (YMonomial::idempotent(chi), self.scalar(1)))
            .collect()
    }

    /// Rewrites a monomial whose exponents may reach `d` into normal form.
    pub fn cyclotomic_reduce(&self, m: &YMonomial) -> Result<YElement> {
        self.require_level()?;
        self.check_monomial(m, true)?;
        let start = YMonomial::new(m.chi.clone(), vec![0; self.n()], m.w.clone());
        let mut cur = YElement::monomial(start, self.scalar(1));
        for (j, &a) in m.x.iter().enumerate() {
            for _ in 0..a {
                cur = self.lmul_x(j, &cur);
            }
        }
        Ok(cur)
    }

    /// Normal form of an element whose monomials may carry unreduced exponents.
    pub fn normalize(&self, e: &YElement) -> Result<YElement> {
        e.try_map_linear(|m| self.basis_element(m))
    }

    /// Left multiplication by `x_{j+1}`.
    pub fn lmul_x(&self, j: usize, e: &YElement) -> YElement {
        let mut out = YElement::zero();
        for (m, c) in e {
            self.lx_into(j, m, c, &mut out);
        }
        out
    }

    /// Left multiplication by `f_{i+1}`.
    pub fn lmul_f(&self, i: usize, e: &YElement) -> YElement {
        let mut out = YElement::zero();
        for (m, c) in e {
            self.lf_into(i, m, c, &mut out);
        }
        out
    }

    fn lf_into(&self, i: usize, m: &YMonomial, c: &CycScalar, out: &mut YElement) {
        let chi = m.chi.swapped(i);
        let mut x = m.x.clone();
        x.swap(i, i + 1);
        out.add_term(YMonomial::new(chi.clone(), x, m.w.left_mul_simple(i)), c.clone());
        if chi.values[i] == chi.values[i + 1] {
            for (sign, g) in divided_difference(&m.x, i) {
                let coeff = if sign > 0 { c.clone() } else { -c };
                out.add_term(YMonomial::new(chi.clone(), g, m.w.clone()), coeff);
            }
        }
    }

    fn lx_into(&self, j: usize, m: &YMonomial, c: &CycScalar, out: &mut YElement) {
        let overflow = match self.level() {
            Some(d) => m.x[j] as usize + 1 >= d,
            None => false,
        };
        if !overflow {
            let mut x = m.x.clone();
            x[j] += 1;
            out.add_term(YMonomial::new(m.chi.clone(), x, m.w.clone()), c.clone());
            return;
        }
        let d = self.level().expect("overflow only in the cyclotomic variant");
        if j == 0 {
            let rule = self.reduction.as_ref().expect("cyclotomic rule");
            for (k, rk) in rule.iter().enumerate() {
                let mut x = m.x.clone();
                x[0] = k as u32;
                out.add_term(YMonomial::new(m.chi.clone(), x, m.w.clone()), c * rk);
            }
            return;
        }
        // x_{j} = f x_{j-1} f + e f  (1-based: x_{j+1} = f_j x_j f_j + e_j f_j)
        debug_assert_eq!(m.x[j] as usize, d - 1);
        let mut fm = YElement::zero();
        self.lf_into(j - 1, m, c, &mut fm);
        let xfm = self.lmul_x(j - 1, &fm);
        for (m2, c2) in &xfm {
            self.lf_into(j - 1, m2, c2, out);
        }
        for (m2, c2) in &fm {
            if m2.chi.values[j - 1] == m2.chi.values[j] {
                out.add_term(m2.clone(), c2.clone());
            }
        }
    }

    /// `(E_χ x^α f_w) · b` for a single left monomial.
    pub(crate) fn mul_monomial_left(&self, a: &YMonomial, b: &YElement) -> YElement {
        // E_χ x^α f_w = x^α f_w E_{w^{-1}(χ)}: only terms of b with that character survive.
        let target = combinatorics::act(&a.w.inverse(), &a.chi).expect("sizes match");
        let mut cur: YElement = b
            .iter()
            .filter(|(m, _)| m.chi == target)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        for &i in a.w.reduced_word().iter().rev() {
            cur = self.lmul_f(i, &cur);
        }
        for (j, &k) in a.x.iter().enumerate() {
            for _ in 0..k {
                cur = self.lmul_x(j, &cur);
            }
        }
        debug_assert!(cur.monomials().all(|m| m.chi == a.chi));
        cur
    }

    /// Product of two basis monomials, without validation.
    pub fn mul_basis(&self, a: &YMonomial, b: &YMonomial) -> YElement {
        self.mul_monomial_left(a, &YElement::monomial(b.clone(), self.scalar(1)))
    }

    /// Product in normal form. Both operands must be normal-form elements of
    /// this algebra.
    pub fn multiply(&self, a: &YElement, b: &YElement) -> Result<YElement> {
        self.validate(a)?;
        self.validate(b)?;
        let mut out = YElement::zero();
        for (m, c) in a {
            out.add_scaled(&self.mul_monomial_left(m, b), c);
        }
        Ok(out)
    }

    /// The basis `E_χ x^β f_w`, sorted. The affine variant needs a bound on
    /// the total `x`-degree.
    pub fn enumerate_basis(&self, degree_bound: Option<u32>) -> Result<Vec<YMonomial>> {
        let n = self.n();
        let exps: Vec<Vec<u32>> = match (self.level(), degree_bound) {
            (Some(d), _) => exponent_box(n, d as u32),
            (None, Some(b)) => exponent_box(n, b + 1)
                .into_iter()
                .filter(|e| e.iter().sum::<u32>() <= b)
                .collect(),
            (None, None) => return Err(Error::MissingDegreeBound),
        };
        let perms = Permutation::all(n);
        let mut out = Vec::new();
        for chi in all_characters(self.r(), n) {
            for x in &exps {
                for w in &perms {
                    out.push(YMonomial::new(chi.clone(), x.clone(), w.clone()));
                }
            }
        }
        Ok(out)
    }

    fn is_top(&self, m: &YMonomial, d: usize) -> bool {
        m.w.is_identity() && m.x.iter().all(|&a| a as usize == d - 1)
    }

    /// The form taking value `1` on `E_χ x^{(d-1,…,d-1)}` for every `χ` and
    /// `0` on every other basis monomial; equals `r^n` times
    /// [`form_tau_hat`](Self::form_tau_hat).
    pub fn form_rho_hat_n(&self, e: &YElement) -> Result<CycScalar> {
        let d = self.require_level()?;
        self.validate(e)?;
        let mut acc = CycScalar::zero(&self.field);
        for (m, c) in e {
            if self.is_top(m, d) {
                acc += c;
            }
        }
        Ok(acc)
    }

    /// The form taking value `1` on `t^s x^{(d-1,…,d-1)}` with every
    /// `s_i ≡ 0 (mod r)` and `w = 1`, and `0` on every other monomial of the
    /// `t`-basis.
    pub fn form_tau_hat(&self, e: &YElement) -> Result<CycScalar> {
        let d = self.require_level()?;
        self.validate(e)?;
        let top = TMonomial {
            t: vec![0; self.n()],
            x: vec![d as u32 - 1; self.n()],
            w: Permutation::identity(self.n()),
        };
        Ok(self
            .to_t(e)
            .coeff(&top)
            .cloned()
            .unwrap_or_else(|| CycScalar::zero(&self.field)))
    }

    /// The composition of the block containing `E_χ`.
    pub fn block_of(&self, chi: &Character) -> Result<Composition> {
        comp_of(chi, self.r())
    }

    pub fn base_character(&self, mu: &Composition) -> Character {
        chi0(mu)
    }
}

pub(crate) fn exponent_box(n: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..bound).map(move |a| {
                    let mut v = prefix.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests;
