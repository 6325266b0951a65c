//! Gram matrices of trace forms, dual bases, semisimplicity and Schur
//! elements.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{self, enumerate_compositions, factorial, m_mu};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::hecke::{HAlgebra, HMonomial};
use crate::iso::Isomorphism;
use crate::linalg::Mat;
use crate::representation::{builtin_simple_modules, transport_module, Representation};
use crate::scalar::{CycScalar, CyclotomicField};
use crate::yokonuma::{YAlgebra, YElement, YMonomial, YParams};

/// A finite-dimensional algebra given by a basis of monomials and their
/// products.
pub trait FiniteAlgebra: Sync {
    type Mono: Ord + Clone + Send + Sync;

    fn field(&self) -> &Arc<CyclotomicField>;
    fn basis(&self) -> Result<Vec<Self::Mono>>;
    fn mul_basis(&self, a: &Self::Mono, b: &Self::Mono) -> Element<Self::Mono>;
    fn one_element(&self) -> Element<Self::Mono>;
}

impl FiniteAlgebra for YAlgebra {
    type Mono = YMonomial;

    fn field(&self) -> &Arc<CyclotomicField> {
        YAlgebra::field(self)
    }

    fn basis(&self) -> Result<Vec<YMonomial>> {
        self.enumerate_basis(None)
    }

    fn mul_basis(&self, a: &YMonomial, b: &YMonomial) -> YElement {
        YAlgebra::mul_basis(self, a, b)
    }

    fn one_element(&self) -> YElement {
        self.one()
    }
}

impl FiniteAlgebra for HAlgebra {
    type Mono = HMonomial;

    fn field(&self) -> &Arc<CyclotomicField> {
        HAlgebra::field(self)
    }

    fn basis(&self) -> Result<Vec<HMonomial>> {
        self.enumerate_basis(None)
    }

    fn mul_basis(&self, a: &HMonomial, b: &HMonomial) -> Element<HMonomial> {
        HAlgebra::mul_basis(self, a, b)
    }

    fn one_element(&self) -> Element<HMonomial> {
        self.one()
    }
}

/// A linear form on an algebra, evaluated on normal-form elements.
pub type Form<'a, M> = dyn Fn(&Element<M>) -> Result<CycScalar> + Sync + 'a;

#[derive(Clone, Debug)]
pub struct GramData<M: Ord> {
    pub basis: Vec<M>,
    pub gram: Mat,
    pub form_name: String,
}

/// `G_{ij} = form(b_i b_j)`.
pub fn gram_matrix<A: FiniteAlgebra>(
    alg: &A,
    basis: Vec<A::Mono>,
    form: &Form<'_, A::Mono>,
    form_name: &str,
) -> Result<GramData<A::Mono>> {
    let k = basis.len();
    let rows: Vec<Vec<CycScalar>> = (0..k)
        .into_par_iter()
        .map(|i| {
            (0..k)
                .map(|j| form(&alg.mul_basis(&basis[i], &basis[j])))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let gram = Mat::from_fn(alg.field(), k, k, |i, j| rows[i][j].clone());
    Ok(GramData {
        basis,
        gram,
        form_name: form_name.to_string(),
    })
}

impl<M: Ord + Clone> GramData<M> {
    /// `b_j^∨ = Σ_k (G^{-1})_{kj} b_k`, so that `form(b_i b_j^∨) = δ_{ij}`.
    pub fn dual_basis(&self) -> Result<Vec<Element<M>>> {
        let inv = self.gram.inverse().map_err(|_| {
            Error::Singular(format!("Gram matrix of {} is degenerate", self.form_name))
        })?;
        let k = self.basis.len();
        Ok((0..k)
            .map(|j| {
                (0..k)
                    .map(|i| (self.basis[i].clone(), inv.get(i, j).clone()))
                    .collect()
            })
            .collect())
    }

    pub fn determinant(&self) -> Result<CycScalar> {
        self.gram.determinant()
    }

    pub fn is_symmetric(&self) -> bool {
        let k = self.basis.len();
        (0..k).all(|i| (0..i).all(|j| self.gram.get(i, j) == self.gram.get(j, i)))
    }
}

/// `ρ_n = Σ_μ τ^μ ∘ Tr ∘ Φ_μ`.
pub fn form_rho_n(iso: &Isomorphism, e: &YElement) -> Result<CycScalar> {
    let mut acc = CycScalar::zero(iso.yokonuma().field());
    for (mu, a) in iso.phi_full(e)? {
        acc += &iso.hecke(&mu)?.mat_trace_form(&a)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, Serialize)]
pub struct Prop41Witness {
    pub monomial: YMonomial,
    pub rho_hat_n: CycScalar,
    pub rho_n: CycScalar,
}

/// Basis monomials on which `ρ̂_n` and `ρ_n` differ; expected empty.
pub fn verify_prop41(iso: &Isomorphism) -> Result<Vec<Prop41Witness>> {
    let y = iso.yokonuma();
    let basis = y.enumerate_basis(None)?;
    let results: Vec<Option<Prop41Witness>> = basis
        .par_iter()
        .map(|b| {
            let e = YElement::monomial(b.clone(), y.scalar(1));
            let hat = y.form_rho_hat_n(&e)?;
            let rho = form_rho_n(iso, &e)?;
            Ok((hat != rho).then(|| Prop41Witness {
                monomial: b.clone(),
                rho_hat_n: hat,
                rho_n: rho,
            }))
        })
        .collect::<Result<_>>()?;
    Ok(results.into_iter().flatten().collect())
}

/// Split semisimplicity: `Π_{i<j} Π_{-n<l<n} (l + v_i - v_j) ≠ 0`. The `n!`
/// factor never vanishes in characteristic zero.
pub fn semisimplicity_criterion(params: &YParams) -> Result<bool> {
    let v = params.variant.parameters();
    if params.level().is_none() {
        return Err(Error::AffineVariant);
    }
    let n = params.n as i64;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let diff = &v[i] - &v[j];
            for l in -n + 1..n {
                if (&diff + crate::scalar::Rational::from_integer(l.into())) == num_traits::Zero::zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The trace form `(a, b) ↦ tr(L_{ab})` of the regular representation; the
/// algebra is semisimple iff it is non-degenerate (characteristic zero).
pub fn regular_trace_gram<A: FiniteAlgebra>(alg: &A, bound: usize) -> Result<Mat> {
    let basis = alg.basis()?;
    let k = basis.len();
    if k > bound {
        return Err(Error::DimensionBound { dim: k, bound });
    }
    let index = |m: &A::Mono| basis.binary_search(m).expect("products stay in the span of the basis");
    // products[i][j] = b_i b_j as (index, coefficient) pairs
    let products: Vec<Vec<Vec<(usize, CycScalar)>>> = (0..k)
        .into_par_iter()
        .map(|i| {
            (0..k)
                .map(|j| {
                    alg.mul_basis(&basis[i], &basis[j])
                        .iter()
                        .map(|(m, c)| (index(m), c.clone()))
                        .collect()
                })
                .collect()
        })
        .collect();
    // tr(L_{b_m}) = Σ_k [b_k](b_m b_k)
    let traces: Vec<CycScalar> = (0..k)
        .map(|m| {
            let mut t = CycScalar::zero(alg.field());
            for (col, prod) in products[m].iter().enumerate() {
                for (p, c) in prod {
                    if *p == col {
                        t += c;
                    }
                }
            }
            t
        })
        .collect();
    Ok(Mat::from_fn(alg.field(), k, k, |i, j| {
        let mut t = CycScalar::zero(alg.field());
        for (m, c) in &products[i][j] {
            t += &(c * &traces[*m]);
        }
        t
    }))
}

pub fn radical_oracle<A: FiniteAlgebra>(alg: &A, bound: usize) -> Result<bool> {
    let t = regular_trace_gram(alg, bound)?;
    Ok(t.rank() == t.rows())
}

/// `z = Σ_k tr ρ(b_k) · ρ(b_k^∨)`; it must be scalar, and the scalar is
/// the Schur element of `ρ` with respect to the form behind `gram`.
pub fn schur_element<M: Ord + Clone>(gram: &GramData<M>, rep: &Representation<M>) -> Result<CycScalar> {
    let dual = gram.dual_basis()?;
    let mut z = Mat::zeros(rep.field(), rep.dimension, rep.dimension);
    for (b, bd) in gram.basis.iter().zip(&dual) {
        let chi = rep.character(b)?;
        if chi.is_zero() {
            continue;
        }
        z.add_scaled_assign(&rep.act(bd)?, &chi);
    }
    z.as_scalar()
        .ok_or_else(|| Error::NotScalar(format!("Casimir element acts as {z:?}")))
}

/// One row of the Schur-element product table.
#[derive(Clone, Debug, Serialize)]
pub struct SchurRow {
    pub mu: combinatorics::Composition,
    pub label: Vec<combinatorics::MultiPartition>,
    pub dimension: usize,
    pub components: Vec<CycScalar>,
    pub product: CycScalar,
    pub transported: CycScalar,
    pub agrees: bool,
}

fn component_algebra(h: &HAlgebra, size: usize) -> Result<Option<HAlgebra>> {
    if size == 0 {
        return Ok(None);
    }
    let params = crate::hecke::HParams {
        blocks: combinatorics::Composition::new(vec![size]),
        variant: h.params().variant.clone(),
    };
    Ok(Some(HAlgebra::new(params, h.field())?))
}

/// Schur elements of every built-in simple module: per block with respect
/// to `τ_{μ_a}`, and of the transported `Y`-module with respect to `ρ_n`.
pub fn schur_table(iso: &Isomorphism) -> Result<Vec<SchurRow>> {
    let y = iso.yokonuma();
    let rho = |e: &YElement| form_rho_n(iso, e);
    let y_gram = gram_matrix(y, y.enumerate_basis(None)?, &rho, "rho-n")?;
    let mut rows = Vec::new();
    for mu in iso.compositions() {
        let h = iso.hecke(mu)?;
        let comps: Vec<Option<(HAlgebra, GramData<HMonomial>)>> = mu
            .parts
            .iter()
            .map(|&m| {
                component_algebra(h, m)?
                    .map(|a| {
                        let tau = |e: &Element<HMonomial>| a.form_tau_n(e);
                        let g = gram_matrix(&a, a.enumerate_basis(None)?, &tau, "tau")?;
                        Ok((a.clone(), g))
                    })
                    .transpose()
            })
            .collect::<Result<_>>()?;
        // Component modules from the single-block algebras, matched by label.
        let comp_modules: Vec<Vec<_>> = comps
            .iter()
            .map(|c| match c {
                Some((a, _)) => builtin_simple_modules(a),
                None => Ok(Vec::new()),
            })
            .collect::<Result<_>>()?;
        for module in builtin_simple_modules(h)? {
            let mut components = Vec::new();
            let mut product = CycScalar::one(y.field());
            for (a, label) in module.label.iter().enumerate() {
                let s = match &comps[a] {
                    None => CycScalar::one(y.field()),
                    Some((_, g)) => {
                        let rep = comp_modules[a]
                            .iter()
                            .find(|m| &m.label[0] == label)
                            .expect("component module with the same label");
                        schur_element(g, &rep.rep)?
                    }
                };
                product = &product * &s;
                components.push(s);
            }
            let transported = transport_module(iso, mu, &module.rep)?;
            let s_y = schur_element(&y_gram, &transported)?;
            rows.push(SchurRow {
                mu: mu.clone(),
                label: module.label.clone(),
                dimension: transported.dimension,
                agrees: s_y == product,
                components,
                product,
                transported: s_y,
            });
        }
    }
    Ok(rows)
}

/// `(r d)^n n! = Σ_μ m_μ² d^n Π μ_a!`.
pub fn dimension_identity_check(r: usize, n: usize, d: usize) -> bool {
    let (lhs, rhs) = dimension_identity_sides(r, n, d);
    lhs == rhs
}

pub fn dimension_identity_sides(r: usize, n: usize, d: usize) -> (u128, u128) {
    let lhs = ((r * d) as u128).pow(n as u32) * factorial(n);
    let rhs = enumerate_compositions(r, n)
        .iter()
        .map(|mu| {
            let young: u128 = mu.parts.iter().map(|&m| factorial(m)).product();
            m_mu(mu).pow(2) * (d as u128).pow(n as u32) * young
        })
        .sum();
    (lhs, rhs)
}
