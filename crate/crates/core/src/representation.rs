//! Finite-dimensional representations given by their matrices on a basis,
//! the built-in simple modules of `H^μ` for blocks of size at most two, and
//! transport of `H^μ`-modules to `Y_{r,n}^d` through `Φ_μ`.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{Composition, MultiPartition, Partition};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::hecke::{HAlgebra, HMonomial};
use crate::iso::Isomorphism;
use crate::linalg::Mat;
use crate::scalar::{CycScalar, CyclotomicField};
use crate::structure::FiniteAlgebra;
use crate::yokonuma::YMonomial;

/// Pairs checked by [`Representation::check_module`] before it switches to
/// sampling.
pub const EXHAUSTIVE_PAIR_LIMIT: usize = 4096;

#[derive(Clone, Debug)]
pub struct Representation<M: Ord> {
    pub dimension: usize,
    pub action: BTreeMap<M, Mat>,
    field: Arc<CyclotomicField>,
}

impl<M: Ord + Clone> Representation<M> {
    pub fn new(field: &Arc<CyclotomicField>, dimension: usize, action: BTreeMap<M, Mat>) -> Self {
        Representation {
            dimension,
            action,
            field: field.clone(),
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn matrix(&self, m: &M) -> Result<&Mat> {
        self.action
            .get(m)
            .ok_or_else(|| Error::ModuleAxiom("no action given for a basis monomial".into()))
    }

    /// The matrix of a linear combination of basis monomials.
    pub fn act(&self, e: &Element<M>) -> Result<Mat> {
        let mut out = Mat::zeros(&self.field, self.dimension, self.dimension);
        for (m, c) in e {
            out.add_scaled_assign(self.matrix(m)?, c);
        }
        Ok(out)
    }

    pub fn character(&self, m: &M) -> Result<CycScalar> {
        Ok(self.matrix(m)?.trace())
    }

    /// Checks `ρ(a)ρ(b) = ρ(ab)` on every basis pair, or on `sample` seeded
    /// random pairs when there are more than [`EXHAUSTIVE_PAIR_LIMIT`].
    pub fn check_module<A>(&self, alg: &A, seed: u64, sample: usize) -> Result<()>
    where
        A: FiniteAlgebra<Mono = M>,
    {
        let basis = alg.basis()?;
        let mut pairs: Vec<(usize, usize)> = (0..basis.len())
            .flat_map(|i| (0..basis.len()).map(move |j| (i, j)))
            .collect();
        if pairs.len() > EXHAUSTIVE_PAIR_LIMIT {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            pairs.shuffle(&mut rng);
            pairs.truncate(sample);
        }
        for (i, j) in pairs {
            let lhs = self.matrix(&basis[i])?.mul(self.matrix(&basis[j])?)?;
            let rhs = self.act(&alg.mul_basis(&basis[i], &basis[j]))?;
            if lhs != rhs {
                return Err(Error::ModuleAxiom(format!("ρ(b_{i})ρ(b_{j}) ≠ ρ(b_{i} b_{j})")));
            }
        }
        let one = alg.one_element();
        if self.act(&one)? != Mat::identity(&self.field, self.dimension) {
            return Err(Error::ModuleAxiom("the unit does not act as the identity".into()));
        }
        Ok(())
    }

    /// Absolute irreducibility: the action spans all `k × k` matrices.
    pub fn is_irreducible(&self) -> bool {
        let k = self.dimension;
        let rows: Vec<&Mat> = self.action.values().collect();
        let span = Mat::from_fn(&self.field, rows.len(), k * k, |i, j| rows[i].get(j / k, j % k).clone());
        span.rank() == k * k
    }

    /// Character values on the basis, in basis order.
    pub fn character_vector(&self) -> Vec<CycScalar> {
        self.action.values().map(Mat::trace).collect()
    }
}

/// The representation of `H^μ` determined by images of `x̄_j` and `s̄_i`;
/// `s[i]` must be given for every `i` with strands `i, i+1` in one block.
pub fn hecke_rep_from_generators(h: &HAlgebra, x: &[Mat], s: &[Option<Mat>]) -> Result<Representation<HMonomial>> {
    let n = h.n();
    if x.len() != n || s.len() + 1 != n.max(1) {
        return Err(Error::SizeMismatch { expected: n, got: x.len() });
    }
    let dim = x.first().map_or(1, Mat::rows);
    let field = h.field();
    let mut action = BTreeMap::new();
    for m in h.enumerate_basis(None)? {
        let mut mat = Mat::identity(field, dim);
        for (j, &a) in m.x.iter().enumerate() {
            for _ in 0..a {
                mat = mat.mul(&x[j])?;
            }
        }
        for i in m.w.reduced_word() {
            let si = s[i]
                .as_ref()
                .ok_or_else(|| Error::ModuleAxiom(format!("no image for s̄_{}", i + 1)))?;
            mat = mat.mul(si)?;
        }
        action.insert(m, mat);
    }
    let rep = Representation::new(field, dim, action);
    rep.check_module(h, 0, EXHAUSTIVE_PAIR_LIMIT)?;
    // With small d the x̄_j are not basis monomials; their images must agree
    // with their normal forms.
    for (j, xj) in x.iter().enumerate() {
        if &rep.act(&h.x(j))? != xj {
            return Err(Error::ModuleAxiom(format!("image of x̄_{} disagrees with its normal form", j + 1)));
        }
    }
    Ok(rep)
}

/// A simple module of `H_m^d` for one block: its label and the images of
/// the block's `x̄` and `s̄` generators (local indexing).
#[derive(Clone, Debug)]
struct BlockModule {
    label: MultiPartition,
    x: Vec<Mat>,
    s: Vec<Mat>,
}

fn single_part(d: usize, k: usize, part: Partition) -> MultiPartition {
    let mut components = vec![Vec::new(); d];
    components[k] = part;
    MultiPartition { components }
}

fn block_modules(field: &Arc<CyclotomicField>, size: usize, v: &[CycScalar]) -> Result<Vec<BlockModule>> {
    let d = v.len();
    let one = CycScalar::one(field);
    let scalar = |c: &CycScalar| Mat::scalar(field, 1, c);
    let mut out: Vec<BlockModule> = Vec::new();
    let push = |m: BlockModule, out: &mut Vec<BlockModule>| {
        if !out.iter().any(|o| o.x == m.x && o.s == m.s) {
            out.push(m);
        }
    };
    match size {
        0 => out.push(BlockModule {
            label: MultiPartition {
                components: vec![Vec::new(); d],
            },
            x: Vec::new(),
            s: Vec::new(),
        }),
        1 => {
            for (k, vk) in v.iter().enumerate() {
                let m = BlockModule {
                    label: single_part(d, k, vec![1]),
                    x: vec![scalar(vk)],
                    s: Vec::new(),
                };
                push(m, &mut out);
            }
        }
        2 => {
            for (k, vk) in v.iter().enumerate() {
                for (eps, part) in [(one.clone(), vec![2]), (-&one, vec![1, 1])] {
                    let m = BlockModule {
                        label: single_part(d, k, part),
                        x: vec![scalar(vk), scalar(&(vk + &eps))],
                        s: vec![scalar(&eps)],
                    };
                    push(m, &mut out);
                }
            }
            for i in 0..d {
                for j in i + 1..d {
                    let (p, q) = (&v[i], &v[j]);
                    let gap = q - p;
                    if gap.is_zero() || gap.is_one() || (-&gap).is_one() {
                        continue;
                    }
                    let alpha = gap.inverse()?;
                    let diag = |a: &CycScalar, b: &CycScalar| {
                        Mat::from_fn(field, 2, 2, |r, c| match (r, c) {
                            (0, 0) => a.clone(),
                            (1, 1) => b.clone(),
                            _ => CycScalar::zero(field),
                        })
                    };
                    let s = Mat::from_fn(field, 2, 2, |r, c| match (r, c) {
                        (0, 0) => alpha.clone(),
                        (0, 1) => one.clone(),
                        (1, 0) => &one - &(&alpha * &alpha),
                        _ => -&alpha,
                    });
                    let mut components = vec![Vec::new(); d];
                    components[i] = vec![1];
                    components[j] = vec![1];
                    let m = BlockModule {
                        label: MultiPartition { components },
                        x: vec![diag(p, q), diag(q, p)],
                        s: vec![s],
                    };
                    push(m, &mut out);
                }
            }
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "built-in simple modules cover blocks of size at most 2, got {size}"
            )))
        }
    }
    Ok(out)
}

/// A simple `H^μ`-module with its label, one `d`-partition per block.
#[derive(Clone, Debug)]
pub struct LabelledModule {
    pub label: Vec<MultiPartition>,
    pub rep: Representation<HMonomial>,
}

/// Tensor products of the built-in block modules over all blocks of `μ`.
///
/// For blocks of size one every root `v_k` gives a module; for blocks of
/// size two there are the two one-dimensional modules at each `v_k` and a
/// two-dimensional module for each pair `v_i, v_j` with `v_j - v_i ∉ {0, ±1}`.
/// Modules with identical generator images are listed once.
pub fn builtin_simple_modules(h: &HAlgebra) -> Result<Vec<LabelledModule>> {
    let field = h.field();
    let v: Vec<CycScalar> = h
        .params()
        .variant
        .parameters()
        .iter()
        .map(|q| CycScalar::from_rational(field, q.clone()))
        .collect();
    if v.is_empty() {
        return Err(Error::AffineVariant);
    }
    let mu: &Composition = h.blocks();
    let per_block: Vec<Vec<BlockModule>> = mu
        .parts
        .iter()
        .map(|&m| block_modules(field, m, &v))
        .collect::<Result<_>>()?;
    let mut combos: Vec<Vec<&BlockModule>> = vec![Vec::new()];
    for mods in &per_block {
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                mods.iter().map(move |m| {
                    let mut p = prefix.clone();
                    p.push(m);
                    p
                })
            })
            .collect();
    }
    let n = h.n();
    let mut out = Vec::new();
    for combo in combos {
        let dims: Vec<usize> = combo.iter().map(|m| m.x.first().map_or(1, Mat::rows)).collect();
        // Embeds a block-local matrix into the tensor product.
        let embed = |a: usize, local: &Mat| {
            let mut acc = Mat::identity(field, 1);
            for (b, &db) in dims.iter().enumerate() {
                let factor = if a == b { local.clone() } else { Mat::identity(field, db) };
                acc = acc.kron(&factor);
            }
            acc
        };
        let mut x = Vec::with_capacity(n);
        let mut s: Vec<Option<Mat>> = vec![None; n.saturating_sub(1)];
        let mut strand = 0;
        for (a, m) in combo.iter().enumerate() {
            for (local, xm) in m.x.iter().enumerate() {
                x.push(embed(a, xm));
                if let Some(sm) = m.s.get(local) {
                    s[strand + local] = Some(embed(a, sm));
                }
            }
            strand += mu.parts[a];
        }
        let rep = hecke_rep_from_generators(h, &x, &s)?;
        out.push(LabelledModule {
            label: combo.iter().map(|m| m.label.clone()).collect(),
            rep,
        });
    }
    Ok(out)
}

/// The `Y_{r,n}^d`-module `M^{(m_μ)}` obtained from an `H^μ`-module `M`:
/// a basis monomial `b` acts by the block matrix whose `(χ, χ')` block is
/// `ρ(Φ_μ(E_μ b)_{χ,χ'})`.
pub fn transport_module(
    iso: &Isomorphism,
    mu: &Composition,
    rep: &Representation<HMonomial>,
) -> Result<Representation<YMonomial>> {
    let h = iso.hecke(mu)?;
    let y = iso.yokonuma();
    let k = rep.dimension;
    let m = crate::combinatorics::characters_with_composition(mu).len();
    let field = y.field();
    let mut action = BTreeMap::new();
    for b in y.enumerate_basis(None)? {
        let mut mat = Mat::zeros(field, k * m, k * m);
        for (i, j, entry) in iso.block_entries(&b, mu)? {
            h.validate(&entry)?;
            let block = rep.act(&entry)?;
            for p in 0..k {
                for q in 0..k {
                    mat.set(i * k + p, j * k + q, block.get(p, q).clone());
                }
            }
        }
        action.insert(b, mat);
    }
    let out = Representation::new(field, k * m, action);
    out.check_module(y, 7, 2000)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::HParams;
    use crate::rewrite::Variant;
    use crate::scalar::Rational;

    fn h(blocks: &[usize], v: &[i64]) -> HAlgebra {
        let params = HParams {
            blocks: Composition::new(blocks.to_vec()),
            variant: Variant::cyclotomic(v.iter().map(|&k| Rational::from_integer(k.into())).collect()).unwrap(),
        };
        HAlgebra::new(params, &CyclotomicField::new(1)).unwrap()
    }

    #[test]
    fn block_of_two_semisimple_parameters() {
        let a = h(&[2], &[0, 2]);
        let mods = builtin_simple_modules(&a).unwrap();
        assert_eq!(mods.len(), 5);
        let total: usize = mods.iter().map(|m| m.rep.dimension.pow(2)).sum();
        assert_eq!(total, a.dimension().unwrap());
        assert!(mods.iter().all(|m| m.rep.is_irreducible()));
    }

    #[test]
    fn adjacent_parameters_drop_the_two_dimensional_module() {
        let a = h(&[2], &[0, 1]);
        let mods = builtin_simple_modules(&a).unwrap();
        assert!(mods.iter().all(|m| m.rep.dimension == 1));
        assert_eq!(mods.len(), 4);
    }

    #[test]
    fn repeated_parameters_deduplicate() {
        let a = h(&[1], &[3, 3]);
        assert_eq!(builtin_simple_modules(&a).unwrap().len(), 1);
    }

    #[test]
    fn rejects_non_module() {
        let a = h(&[2], &[0]);
        let f = a.field().clone();
        let x = vec![Mat::scalar(&f, 1, &CycScalar::zero(&f)); 2];
        let s = vec![Some(Mat::scalar(&f, 1, &CycScalar::one(&f)))];
        // x_2 must act as 0 + 1 = 1, not 0
        assert!(matches!(hecke_rep_from_generators(&a, &x, &s), Err(Error::ModuleAxiom(_))));
    }

    #[test]
    fn large_blocks_unsupported() {
        assert!(matches!(builtin_simple_modules(&h(&[3], &[0])), Err(Error::Unsupported(_))));
    }
}
