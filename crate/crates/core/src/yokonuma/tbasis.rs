//! The basis `t^β x^α f_w` (`0 <= β_j < r`) and conversion to and from the
//! idempotent basis.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{all_characters, Character, Permutation};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::scalar::{CycScalar, Rational};

use super::{exponent_box, YAlgebra, YElement, YMonomial};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TMonomial {
    pub t: Vec<u32>,
    pub x: Vec<u32>,
    pub w: Permutation,
}

pub type TElement = Element<TMonomial>;

impl YAlgebra {
    fn root_power(&self, k: i64) -> CycScalar {
        CycScalar::zeta_power(&self.field, k)
    }

    /// `E_χ = r^{-n} Σ_β ζ^{-Σ_j (χ_j - 1) β_j} t^β`.
    pub fn to_t(&self, e: &YElement) -> TElement {
        let r = self.r();
        let n = self.n();
        let norm = Rational::new(1.into(), num_bigint::BigInt::from(r).pow(n as u32));
        let betas = exponent_box(n, r as u32);
        e.map_linear(|m| {
            betas
                .iter()
                .map(|beta| {
                    let k: i64 = m
                        .chi
                        .values
                        .iter()
                        .zip(beta)
                        .map(|(&a, &b)| (a as i64 - 1) * b as i64)
                        .sum();
                    let c = self.root_power(-k).scale_rational(&norm);
                    let tm = TMonomial {
                        t: beta.clone(),
                        x: m.x.clone(),
                        w: m.w.clone(),
                    };
                    (tm, c)
                })
                .collect()
        })
    }

    /// `E_χ` written in the generators `t_j`.
    pub fn idempotent_t(&self, chi: &Character) -> Result<TElement> {
        Ok(self.to_t(&self.idempotent(chi)?))
    }

    /// `t^β = Σ_χ ζ^{Σ_j (χ_j - 1) β_j} E_χ`.
    pub fn from_t(&self, e: &TElement) -> Result<YElement> {
        let chars = all_characters(self.r(), self.n());
        e.try_map_linear(|m| {
            if m.t.len() != self.n() {
                return Err(Error::SizeMismatch {
                    expected: self.n(),
                    got: m.t.len(),
                });
            }
            let mut out = YElement::zero();
            for chi in &chars {
                let k: i64 = chi
                    .values
                    .iter()
                    .zip(&m.t)
                    .map(|(&a, &b)| (a as i64 - 1) * b as i64)
                    .sum();
                let ym = YMonomial::new(chi.clone(), m.x.clone(), m.w.clone());
                out.add_scaled(&self.basis_element(&ym)?, &self.root_power(k));
            }
            Ok(out)
        })
    }
}
