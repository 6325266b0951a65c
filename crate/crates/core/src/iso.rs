//! The block decomposition `Y_{r,n}^d ≅ ⊕_μ Mat_{m_μ}(H^μ)` and its inverse.
//!
//! On a basis monomial of block `μ`,
//!
//! `Φ_μ(E_χ x^α f_w) = 𝟙_{χ, w^{-1}(χ)} · x̄^{π_χ^{-1}·α} · (π_χ^{-1} w π_{w^{-1}(χ)})`
//!
//! `Ψ_μ(𝟙_{χ,χ'} x̄^α w̄) = E_χ x^{π_χ·α} f_{π_χ w π_{χ'}^{-1}}`.

use std::collections::BTreeMap;

use crate::combinatorics::{self, act, comp_of, pi_chi, Composition, Permutation};
use crate::error::{Error, Result};
use crate::hecke::{HAlgebra, HElement, HMonomial, HParams, MatrixOverH};
use crate::yokonuma::{YAlgebra, YElement, YMonomial};

/// One summand of the image: the block `μ` and its matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockImage {
    pub mu: Composition,
    pub matrix: MatrixOverH,
}

/// `Φ(e)` as a map from every `r`-composition of `n` to its matrix; blocks
/// where `e` vanishes hold the zero matrix.
pub type FullImage = BTreeMap<Composition, MatrixOverH>;

/// The pair of algebras together with every `H^μ`.
#[derive(Clone, Debug)]
pub struct Isomorphism {
    y: YAlgebra,
    hecke: BTreeMap<Composition, HAlgebra>,
}

impl Isomorphism {
    pub fn new(y: YAlgebra) -> Result<Self> {
        let mut hecke = BTreeMap::new();
        for mu in combinatorics::enumerate_compositions(y.r(), y.n()) {
            let params = HParams {
                blocks: mu.clone(),
                variant: y.params().variant.clone(),
            };
            hecke.insert(mu, HAlgebra::new(params, y.field())?);
        }
        Ok(Isomorphism { y, hecke })
    }

    pub fn yokonuma(&self) -> &YAlgebra {
        &self.y
    }

    pub fn compositions(&self) -> impl Iterator<Item = &Composition> {
        self.hecke.keys()
    }

    pub fn hecke(&self, mu: &Composition) -> Result<&HAlgebra> {
        self.hecke
            .get(mu)
            .ok_or_else(|| Error::ParameterMismatch(format!("{mu:?} is not an {}-composition of {}", self.y.r(), self.y.n())))
    }

    /// The image of one basis monomial: `(μ, row χ, column χ', x̄^β w̄)`.
    pub fn phi_monomial(&self, m: &YMonomial) -> Result<(Composition, HMonomial, combinatorics::Character)> {
        let r = self.y.r();
        let mu = comp_of(&m.chi, r)?;
        let col = act(&m.w.inverse(), &m.chi)?;
        let pi = pi_chi(&m.chi, r)?;
        let pi_col = pi_chi(&col, r)?;
        let pi_inv = pi.inverse();
        let x = pi_inv.permute(&m.x);
        let w = pi_inv.compose(&m.w).compose(&pi_col);
        if !combinatorics::in_young_subgroup(&w, &mu.block_of_strands()) {
            return Err(Error::OutsideYoungSubgroup(format!(
                "π_χ^-1 w π_χ' = {w} for χ = {:?}, w = {}",
                m.chi, m.w
            )));
        }
        Ok((mu, HMonomial::new(x, w), col))
    }

    /// `Φ_μ` on an element supported on block `μ`.
    pub fn phi_mu(&self, e: &YElement, mu: &Composition) -> Result<MatrixOverH> {
        self.y.validate(e)?;
        let h = self.hecke(mu)?;
        let mut out = MatrixOverH::zero(mu);
        for (m, c) in e {
            let (block, hm, col) = self.phi_monomial(m)?;
            if &block != mu {
                return Err(Error::OutsideBlock(format!("{:?} lies in block {block:?}, not {mu:?}", m.chi)));
            }
            h.check_monomial(&hm, false)?;
            out.entry_mut(&m.chi, &col)?.add_term(hm, c.clone());
        }
        Ok(out)
    }

    /// `Ψ_μ`.
    pub fn psi_mu(&self, a: &MatrixOverH) -> Result<YElement> {
        let r = self.y.r();
        let h = self.hecke(&a.mu)?;
        let mut out = YElement::zero();
        for (row, col, entry) in a.nonzero_entries() {
            h.validate(entry)?;
            let pi = pi_chi(row, r)?;
            let pi_col_inv = pi_chi(col, r)?.inverse();
            for (hm, c) in entry {
                let x = pi.permute(&hm.x);
                let w: Permutation = pi.compose(&hm.w).compose(&pi_col_inv);
                out.add_term(YMonomial::new(row.clone(), x, w), c.clone());
            }
        }
        Ok(out)
    }

    /// Splits `e` with the central idempotents `E_μ` and applies each `Φ_μ`.
    pub fn phi_full(&self, e: &YElement) -> Result<FullImage> {
        let mut out = FullImage::new();
        for mu in self.hecke.keys() {
            let part = self.y.multiply(&self.y.block_idempotent(mu)?, e)?;
            out.insert(mu.clone(), self.phi_mu(&part, mu)?);
        }
        Ok(out)
    }

    /// Same as [`phi_full`](Self::phi_full), splitting by the composition of
    /// each term's character instead of multiplying.
    pub fn phi_full_by_filter(&self, e: &YElement) -> Result<FullImage> {
        self.y.validate(e)?;
        let mut parts: BTreeMap<Composition, YElement> =
            self.hecke.keys().map(|mu| (mu.clone(), YElement::zero())).collect();
        for (m, c) in e {
            let mu = comp_of(&m.chi, self.y.r())?;
            parts
                .get_mut(&mu)
                .expect("every composition is present")
                .add_term(m.clone(), c.clone());
        }
        parts.iter().map(|(mu, part)| Ok((mu.clone(), self.phi_mu(part, mu)?))).collect()
    }

    pub fn psi_full(&self, image: &FullImage) -> Result<YElement> {
        let mut out = YElement::zero();
        for (mu, a) in image {
            if &a.mu != mu {
                return Err(Error::ParameterMismatch(format!("matrix for {:?} stored under {mu:?}", a.mu)));
            }
            out.add_assign(&self.psi_mu(a)?);
        }
        Ok(out)
    }

    /// Blockwise product in `⊕_μ Mat_{m_μ}(H^μ)`.
    pub fn full_multiply(&self, a: &FullImage, b: &FullImage) -> Result<FullImage> {
        let mut out = FullImage::new();
        for (mu, h) in &self.hecke {
            let (Some(x), Some(y)) = (a.get(mu), b.get(mu)) else {
                return Err(Error::ParameterMismatch(format!("image lacks block {mu:?}")));
            };
            out.insert(mu.clone(), h.mat_multiply(x, y)?);
        }
        Ok(out)
    }

    /// The identity matrix in every block.
    pub fn full_identity(&self) -> FullImage {
        self.hecke
            .iter()
            .map(|(mu, h)| (mu.clone(), MatrixOverH::identity(h)))
            .collect()
    }

    /// Splits an `H^μ` element into entries `Φ_μ(E_μ b)_{χ,χ'}` for a basis
    /// monomial `b`; used to transport modules.
    pub fn block_entries(&self, b: &YMonomial, mu: &Composition) -> Result<Vec<(usize, usize, HElement)>> {
        let part = self.y.multiply(
            &self.y.block_idempotent(mu)?,
            &YElement::monomial(b.clone(), self.y.scalar(1)),
        )?;
        let mat = self.phi_mu(&part, mu)?;
        let mut out = Vec::new();
        for (row, col, h) in mat.nonzero_entries() {
            out.push((mat.index_of(row)?, mat.index_of(col)?, h.clone()));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Character;
    use crate::scalar::Rational;
    use crate::yokonuma::YParams;

    fn iso(r: usize, n: usize, v: &[i64]) -> Isomorphism {
        let v = v.iter().map(|&k| Rational::from_integer(k.into())).collect();
        Isomorphism::new(YAlgebra::new(YParams::cyclotomic(r, n, v)).unwrap()).unwrap()
    }

    #[test]
    fn off_diagonal_example() {
        let iso = iso(2, 2, &[0]);
        let m = YMonomial::new(Character::new(vec![1, 2]), vec![0, 0], Permutation::simple(2, 0));
        let (mu, hm, col) = iso.phi_monomial(&m).unwrap();
        assert_eq!(mu, Composition::new(vec![1, 1]));
        assert_eq!(col, Character::new(vec![2, 1]));
        assert_eq!(hm, HMonomial::one(2));
    }

    #[test]
    fn identity_and_block_idempotents() {
        let iso = iso(2, 2, &[0, 1]);
        let y = iso.yokonuma();
        assert_eq!(iso.phi_full(&y.one()).unwrap(), iso.full_identity());
        for mu in iso.compositions() {
            let img = iso.phi_full(&y.block_idempotent(mu).unwrap()).unwrap();
            for (nu, a) in &img {
                if nu == mu {
                    assert_eq!(a, &MatrixOverH::identity(iso.hecke(mu).unwrap()));
                } else {
                    assert!(a.is_zero());
                }
            }
        }
    }

    #[test]
    fn base_character_is_identity_coset() {
        let iso = iso(2, 3, &[0, 1]);
        let chi = Character::new(vec![1, 1, 2]);
        let w = Permutation::simple(3, 0);
        let m = YMonomial::new(chi.clone(), vec![1, 0, 1], w.clone());
        let (_, hm, col) = iso.phi_monomial(&m).unwrap();
        assert_eq!(col, chi);
        assert_eq!(hm, HMonomial::new(vec![1, 0, 1], w));
    }

    #[test]
    fn rejects_wrong_block() {
        let iso = iso(2, 2, &[0]);
        let e = iso.yokonuma().idempotent(&Character::new(vec![1, 1])).unwrap();
        assert!(matches!(
            iso.phi_mu(&e, &Composition::new(vec![1, 1])),
            Err(Error::OutsideBlock(_))
        ));
    }
}
