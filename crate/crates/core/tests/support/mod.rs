#![allow(dead_code)]

pub mod t_oracle;

use dyh::scalar::Rational;
use dyh::yokonuma::{YAlgebra, YParams};

pub fn q(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

pub fn qs(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&k| q(k)).collect()
}

pub fn cyc(r: usize, n: usize, v: &[i64]) -> YAlgebra {
    YAlgebra::new(YParams::cyclotomic(r, n, qs(v))).unwrap()
}

use dyh::element::Element;
use dyh::scalar::{CycScalar, CyclotomicField};
use rand::Rng;
use std::sync::Arc;

/// A random combination of `terms` basis monomials with small coefficients
/// in `Z[ζ_r]`.
pub fn random_element<M: Ord + Clone, R: Rng>(
    field: &Arc<CyclotomicField>,
    basis: &[M],
    terms: usize,
    rng: &mut R,
) -> Element<M> {
    let mut e = Element::zero();
    for _ in 0..terms {
        let m = basis[rng.gen_range(0..basis.len())].clone();
        e.add_term(m, random_scalar(field, rng));
    }
    e
}

pub fn random_scalar<R: Rng>(field: &Arc<CyclotomicField>, rng: &mut R) -> CycScalar {
    let k: i64 = rng.gen_range(-3..=3);
    let c = CycScalar::from_integer(field, k);
    if field.order() > 1 && rng.gen_bool(0.5) {
        let z = CycScalar::zeta_power(field, rng.gen_range(0..field.order() as i64));
        &c * &z
    } else {
        c
    }
}
