//! A second multiplier for the Yokonuma algebra that works directly with
//! the generators `t_j, x_j, f_i` and the raw defining relations, on
//! monomials `t^β x^α f_w`. It shares no rewriting code with the library.
//!
//! Relations used:
//! - `t_j^r = 1`, the `t_j` commute with each other and with every `x_k`;
//! - `f_i t_j = t_{s_i(j)} f_i`;
//! - `f_i x_k = x_k f_i` for `k ≠ i, i+1`, `f_i x_{i+1} = x_i f_i + e_i`,
//!   and `f_i x_i = x_{i+1} f_i - e_i`;
//! - `e_i = (1/r) Σ_s t_i^s t_{i+1}^{-s}`;
//! - `(x_1 - v_1)⋯(x_1 - v_d) = 0`, and for higher strands
//!   `x_{j+1} = f_j x_j f_j + e_j f_j`.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use dyh::combinatorics::Permutation;
use dyh::scalar::{CycScalar, CyclotomicField, Rational};

type Key = (Vec<u32>, Vec<u32>, Vec<usize>);
pub type TVec = BTreeMap<Key, CycScalar>;

pub struct TOracle {
    r: usize,
    n: usize,
    field: Arc<CyclotomicField>,
    /// `x^d = Σ_k rule[k] x^k`, if cyclotomic.
    rule: Option<Vec<CycScalar>>,
}

fn add(out: &mut TVec, k: Key, c: CycScalar) {
    if c.is_zero() {
        return;
    }
    let slot = out.entry(k.clone()).or_insert_with(|| CycScalar::zero(c.field()));
    *slot += &c;
    if slot.is_zero() {
        out.remove(&k);
    }
}

fn add_vec(out: &mut TVec, v: &TVec, c: &CycScalar) {
    for (k, x) in v {
        add(out, k.clone(), x * c);
    }
}

impl TOracle {
    pub fn new(r: usize, n: usize, v: Option<&[Rational]>) -> Self {
        let field = CyclotomicField::new(r);
        // Expand Π (x - v_j) independently of the library.
        let rule = v.map(|v| {
            let mut poly: Vec<Rational> = vec![Rational::from_integer(1.into())];
            for vj in v {
                let mut next = vec![Rational::from_integer(0.into()); poly.len() + 1];
                for (k, c) in poly.iter().enumerate() {
                    next[k + 1] = &next[k + 1] + c;
                    next[k] = &next[k] - c * vj;
                }
                poly = next;
            }
            poly.pop();
            poly.into_iter().map(|c| CycScalar::from_rational(&field, -c)).collect()
        });
        TOracle { r, n, field, rule }
    }

    fn one_scalar(&self) -> CycScalar {
        CycScalar::one(&self.field)
    }

    fn level(&self) -> Option<usize> {
        self.rule.as_ref().map(Vec::len)
    }

    /// Left multiplication by `t_j`.
    pub fn lt(&self, j: usize, v: &TVec) -> TVec {
        let mut out = TVec::new();
        for ((t, x, w), c) in v {
            let mut t = t.clone();
            t[j] = (t[j] + 1) % self.r as u32;
            add(&mut out, (t, x.clone(), w.clone()), c.clone());
        }
        out
    }

    /// Left multiplication by `e_i`.
    pub fn le(&self, i: usize, v: &TVec) -> TVec {
        let r = self.r as u32;
        let inv_r = CycScalar::from_rational(&self.field, Rational::new(1.into(), (self.r as i64).into()));
        let mut out = TVec::new();
        for ((t, x, w), c) in v {
            for s in 0..r {
                let mut t2 = t.clone();
                t2[i] = (t2[i] + s) % r;
                t2[i + 1] = (t2[i + 1] + r - s) % r;
                add(&mut out, (t2, x.clone(), w.clone()), c * &inv_r);
            }
        }
        out
    }

    /// Left multiplication by `x_j`.
    pub fn lx(&self, j: usize, v: &TVec) -> TVec {
        let mut out = TVec::new();
        for (key, c) in v {
            let (t, x, w) = key;
            let over = self.level().is_some_and(|d| x[j] as usize + 1 >= d);
            if !over {
                let mut x = x.clone();
                x[j] += 1;
                add(&mut out, (t.clone(), x, w.clone()), c.clone());
            } else if j == 0 {
                for (k, rk) in self.rule.as_ref().unwrap().iter().enumerate() {
                    let mut x = x.clone();
                    x[0] = k as u32;
                    add(&mut out, (t.clone(), x, w.clone()), c * rk);
                }
            } else {
                let single: TVec = [(key.clone(), c.clone())].into_iter().collect();
                let f = self.lf(j - 1, &single);
                let fxf = self.lf(j - 1, &self.lx(j - 1, &f));
                add_vec(&mut out, &fxf, &self.one_scalar());
                add_vec(&mut out, &self.le(j - 1, &f), &self.one_scalar());
            }
        }
        out
    }

    /// `f_i x^α` as an element, by peeling one `x` at a time.
    fn f_times_x(&self, i: usize, alpha: &[u32]) -> TVec {
        let n = self.n;
        let Some(k) = alpha.iter().position(|&a| a > 0) else {
            let mut w: Vec<usize> = (0..n).collect();
            w.swap(i, i + 1);
            return [((vec![0; n], vec![0; n], w), self.one_scalar())].into_iter().collect();
        };
        let mut rest = alpha.to_vec();
        rest[k] -= 1;
        let tail = self.f_times_x(i, &rest);
        let moved = if k == i { i + 1 } else if k == i + 1 { i } else { k };
        let mut out = self.lx(moved, &tail);
        if k == i || k == i + 1 {
            let mut xr: TVec = TVec::new();
            xr.insert((vec![0; n], vec![0; n], (0..n).collect()), self.one_scalar());
            for (j, &a) in rest.iter().enumerate() {
                for _ in 0..a {
                    xr = self.lx(j, &xr);
                }
            }
            let sign = if k == i + 1 { self.one_scalar() } else { -self.one_scalar() };
            add_vec(&mut out, &self.le(i, &xr), &sign);
        }
        out
    }

    /// Left multiplication by `f_i`.
    pub fn lf(&self, i: usize, v: &TVec) -> TVec {
        let mut out = TVec::new();
        for ((t, x, w), c) in v {
            let mut t2 = t.clone();
            t2.swap(i, i + 1);
            for ((ft, fx, fw), fc) in self.f_times_x(i, x) {
                let tt: Vec<u32> = t2.iter().zip(&ft).map(|(a, b)| (a + b) % self.r as u32).collect();
                let ww: Vec<usize> = w.iter().map(|&p| fw[p]).collect();
                add(&mut out, (tt, fx, ww), &fc * c);
            }
        }
        out
    }

    pub fn multiply(&self, a: &TVec, b: &TVec) -> TVec {
        let mut out = TVec::new();
        for ((t, x, w), c) in a {
            let word = Permutation::from_images(w.clone()).unwrap().reduced_word();
            let mut cur = b.clone();
            for &i in word.iter().rev() {
                cur = self.lf(i, &cur);
            }
            for (j, &k) in x.iter().enumerate() {
                for _ in 0..k {
                    cur = self.lx(j, &cur);
                }
            }
            for (j, &k) in t.iter().enumerate() {
                for _ in 0..k {
                    cur = self.lt(j, &cur);
                }
            }
            add_vec(&mut out, &cur, c);
        }
        out
    }
}

pub fn from_t_element(e: &dyh::yokonuma::TElement) -> TVec {
    e.iter()
        .map(|(m, c)| ((m.t.clone(), m.x.clone(), m.w.images().to_vec()), c.clone()))
        .collect()
}
