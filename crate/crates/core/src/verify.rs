//! Verification sweeps over bases: the isomorphism's homomorphism and
//! bijection properties, the exponent-exchange identity behind it, and the
//! trace property of forms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::combinatorics::{all_characters, pi_chi};
use crate::element::Element;
use crate::error::Result;
use crate::hecke::{HElement, MatrixOverH};
use crate::io::{full_image_to_json, matrix_to_json, y_element_to_json};
use crate::iso::{FullImage, Isomorphism};
use crate::structure::{FiniteAlgebra, Form};
use crate::yokonuma::{exponent_box, YAlgebra, YElement, YMonomial};

/// Which basis pairs a sweep visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Exhaustive,
    /// `count` pairs drawn uniformly with replacement from a ChaCha8 stream.
    Sampled { count: usize, seed: u64 },
}

/// Outcome of one sweep; `failures` holds serialized witnesses in visiting
/// order.
#[derive(Clone, Debug)]
pub struct Sweep {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<Value>,
}

impl Sweep {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> Value {
        json!({"name": self.name, "checked": self.checked, "failed": self.failures.len()})
    }
}

pub fn pairs(k: usize, scope: Scope) -> Vec<(usize, usize)> {
    match scope {
        Scope::Exhaustive => (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect(),
        Scope::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count).map(|_| (rng.gen_range(0..k), rng.gen_range(0..k))).collect()
        }
    }
}

fn collect_failures(results: Vec<Result<Option<Value>>>) -> Result<Vec<Value>> {
    let mut out = Vec::new();
    for r in results {
        if let Some(v) = r? {
            out.push(v);
        }
    }
    Ok(out)
}

/// `Φ(ab) = Φ(a)Φ(b)` on basis pairs.
pub fn homomorphism(iso: &Isomorphism, scope: Scope) -> Result<Sweep> {
    let y = iso.yokonuma();
    let basis = y.enumerate_basis(None)?;
    let images: Vec<FullImage> = basis
        .par_iter()
        .map(|b| iso.phi_full(&YElement::monomial(b.clone(), y.scalar(1))))
        .collect::<Result<_>>()?;
    let todo = pairs(basis.len(), scope);
    let results: Vec<Result<Option<Value>>> = todo
        .par_iter()
        .map(|&(i, j)| {
            let prod = y.mul_basis(&basis[i], &basis[j]);
            let lhs = iso.phi_full(&prod)?;
            let rhs = iso.full_multiply(&images[i], &images[j])?;
            Ok((lhs != rhs).then(|| {
                json!({
                    "a": basis[i], "b": basis[j],
                    "phi_of_product": full_image_to_json(y.params(), &lhs),
                    "product_of_phis": full_image_to_json(y.params(), &rhs),
                })
            }))
        })
        .collect();
    Ok(Sweep {
        name: "homomorphism".into(),
        checked: todo.len(),
        failures: collect_failures(results)?,
    })
}

/// `Ψ∘Φ = id` on the basis of `Y`, `Φ∘Ψ = id` on the basis
/// `𝟙_{χ,χ'} x̄^α w̄` of every block, and agreement of the two ways of
/// splitting into blocks.
pub fn bijection(iso: &Isomorphism) -> Result<Sweep> {
    let y = iso.yokonuma();
    let basis = y.enumerate_basis(None)?;
    let mut results: Vec<Result<Option<Value>>> = basis
        .par_iter()
        .map(|b| {
            let e = YElement::monomial(b.clone(), y.scalar(1));
            let img = iso.phi_full(&e)?;
            let filtered = iso.phi_full_by_filter(&e)?;
            let back = iso.psi_full(&img)?;
            Ok((back != e || filtered != img).then(|| {
                json!({
                    "monomial": b,
                    "psi_phi": y_element_to_json(y.params(), &back),
                    "split_methods_agree": filtered == img,
                })
            }))
        })
        .collect();
    let mut checked = basis.len();
    for mu in iso.compositions() {
        let h = iso.hecke(mu)?;
        let chars = crate::combinatorics::characters_with_composition(mu);
        let hbasis = h.enumerate_basis(None)?;
        let units: Vec<MatrixOverH> = chars
            .iter()
            .flat_map(|row| chars.iter().map(move |col| (row, col)))
            .flat_map(|(row, col)| {
                hbasis.iter().map(move |hm| {
                    MatrixOverH::unit(mu, row, col, HElement::monomial(hm.clone(), h.scalar(1)))
                        .expect("characters of μ index the matrix")
                })
            })
            .collect();
        checked += units.len();
        results.extend(units.par_iter().map(|a| {
            let back = iso.phi_mu(&iso.psi_mu(a)?, mu)?;
            Ok((&back != a).then(|| json!({"unit": matrix_to_json(a), "phi_psi": matrix_to_json(&back)})))
        }).collect::<Vec<_>>());
    }
    Ok(Sweep {
        name: "bijection".into(),
        checked,
        failures: collect_failures(results)?,
    })
}

/// `E_χ x^{π_χ·α} f_{π_χ} = E_χ f_{π_χ} x^α` for every `χ` and `α < d`.
pub fn crucial_equality(y: &YAlgebra) -> Result<Sweep> {
    let d = y.level().ok_or(crate::error::Error::AffineVariant)?;
    let n = y.n();
    let mut cases = Vec::new();
    for chi in all_characters(y.r(), n) {
        for alpha in exponent_box(n, d as u32) {
            cases.push((chi.clone(), alpha));
        }
    }
    let results: Vec<Result<Option<Value>>> = cases
        .par_iter()
        .map(|(chi, alpha)| {
            let pi = pi_chi(chi, y.r())?;
            let lhs = YElement::monomial(YMonomial::new(chi.clone(), pi.permute(alpha), pi.clone()), y.scalar(1));
            let ef = y.multiply(&y.idempotent(chi)?, &y.f_perm(&pi))?;
            let rhs = y.multiply(&ef, &y.x_power(alpha)?)?;
            Ok((lhs != rhs).then(|| {
                json!({
                    "chi": chi, "alpha": alpha,
                    "lhs": y_element_to_json(y.params(), &lhs),
                    "rhs": y_element_to_json(y.params(), &rhs),
                })
            }))
        })
        .collect();
    Ok(Sweep {
        name: "crucial-equality".into(),
        checked: cases.len(),
        failures: collect_failures(results)?,
    })
}

/// `form(ab) = form(ba)` on basis pairs.
pub fn trace_property<A>(alg: &A, form: &Form<'_, A::Mono>, name: &str, scope: Scope) -> Result<Sweep>
where
    A: FiniteAlgebra,
    A::Mono: serde::Serialize,
{
    let basis = alg.basis()?;
    let todo = pairs(basis.len(), scope);
    let results: Vec<Result<Option<Value>>> = todo
        .par_iter()
        .map(|&(i, j)| {
            let ab: Element<A::Mono> = alg.mul_basis(&basis[i], &basis[j]);
            let ba = alg.mul_basis(&basis[j], &basis[i]);
            let (x, y) = (form(&ab)?, form(&ba)?);
            Ok((x != y).then(|| {
                json!({"a": basis[i], "b": basis[j], "form_ab": crate::io::scalar_to_json(&x), "form_ba": crate::io::scalar_to_json(&y)})
            }))
        })
        .collect();
    Ok(Sweep {
        name: format!("trace-property:{name}"),
        checked: todo.len(),
        failures: collect_failures(results)?,
    })
}
