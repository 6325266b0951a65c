//! Pieces of the straightening procedure shared by the Yokonuma and Hecke
//! multipliers.

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{CycScalar, CyclotomicField, Rational};

/// Affine algebra, or its cyclotomic quotient by `(x_1 - v_1)⋯(x_1 - v_d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Variant {
    Affine,
    Cyclotomic { v: Vec<Rational> },
}

impl Variant {
    pub fn cyclotomic(v: Vec<Rational>) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::ParameterMismatch("cyclotomic level must be at least 1".into()));
        }
        Ok(Variant::Cyclotomic { v })
    }

    /// The level `d`, or `None` for the affine variant.
    pub fn level(&self) -> Option<usize> {
        match self {
            Variant::Affine => None,
            Variant::Cyclotomic { v } => Some(v.len()),
        }
    }

    pub fn parameters(&self) -> &[Rational] {
        match self {
            Variant::Affine => &[],
            Variant::Cyclotomic { v } => v,
        }
    }

    pub(crate) fn reduction_rule(&self, field: &Arc<CyclotomicField>) -> Option<Vec<CycScalar>> {
        match self {
            Variant::Affine => None,
            Variant::Cyclotomic { v } => Some(reduction_rule(field, v)),
        }
    }
}

/// Coefficients `c_0, …, c_{d-1}` with `x^d = Σ c_k x^k` modulo `Π_j (x - v_j)`.
pub(crate) fn reduction_rule(field: &Arc<CyclotomicField>, v: &[Rational]) -> Vec<CycScalar> {
    // Expand Π (x - v_j), low degree first.
    let mut poly = vec![Rational::from_integer(1.into())];
    for vj in v {
        let mut next = vec![Rational::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * vj;
        }
        poly = next;
    }
    poly.pop();
    poly.into_iter()
        .map(|c| CycScalar::from_rational(field, -c))
        .collect()
}

/// The divided difference `(x^γ - x^{s_i γ}) / (x_{i+1} - x_i)` as signed
/// exponent vectors.
///
/// This is the correction term in `f_i x^γ = x^{s_i γ} f_i + e_i ∂_i(x^γ)`;
/// every exponent in the output is below `max(γ_i, γ_{i+1})`.
pub(crate) fn divided_difference(gamma: &[u32], i: usize) -> Vec<(i64, Vec<u32>)> {
    let (a, b) = (gamma[i], gamma[i + 1]);
    let mut out = Vec::new();
    if a > b {
        for k in 0..a - b {
            let mut g = gamma.to_vec();
            g[i] = a - 1 - k;
            g[i + 1] = b + k;
            out.push((-1, g));
        }
    } else if b > a {
        for k in 0..b - a {
            let mut g = gamma.to_vec();
            g[i] = a + k;
            g[i + 1] = b - 1 - k;
            out.push((1, g));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(k: i64) -> Rational {
        Rational::from_integer(BigInt::from(k))
    }

    #[test]
    fn reduction_rule_expands_product() {
        let f = CyclotomicField::new(1);
        // (x - 0)(x - 1) = x^2 - x  =>  x^2 = x
        let rule = reduction_rule(&f, &[q(0), q(1)]);
        assert_eq!(rule, vec![CycScalar::zero(&f), CycScalar::one(&f)]);
        // (x - 2) => x = 2
        assert_eq!(reduction_rule(&f, &[q(2)]), vec![CycScalar::from_integer(&f, 2)]);
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        let rule = reduction_rule(&f, &[q(1), q(2), q(3)]);
        let expect: Vec<_> = [6, -11, 6].iter().map(|&k| CycScalar::from_integer(&f, k)).collect();
        assert_eq!(rule, expect);
    }

    #[test]
    fn divided_difference_small_cases() {
        // f x_2 = x_1 f + e
        assert_eq!(divided_difference(&[0, 1], 0), vec![(1, vec![0, 0])]);
        // f x_1 = x_2 f - e
        assert_eq!(divided_difference(&[1, 0], 0), vec![(-1, vec![0, 0])]);
        // f x_2^2 = x_1^2 f + e (x_1 + x_2)
        let mut dd = divided_difference(&[0, 2], 0);
        dd.sort();
        assert_eq!(dd, vec![(1, vec![0, 1]), (1, vec![1, 0])]);
        assert!(divided_difference(&[3, 3, 1], 0).is_empty());
        assert_eq!(divided_difference(&[3, 1, 0], 1), vec![(-1, vec![3, 0, 0])]);
    }
}
