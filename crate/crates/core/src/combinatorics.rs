//! Permutations, torus characters, compositions and multipartitions.
//!
//! Conventions used throughout the crate:
//! - permutations compose as functions, `(w∘v)(i) = w(v(i))`;
//! - `S_n` acts on characters and exponent vectors by
//!   `(w·a)_i = a_{w^{-1}(i)}`;
//! - characters sharing a composition are ordered lexicographically on
//!   their value vectors.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{0, …, n-1}` stored by its images.
///
/// JSON and [`Permutation::one_line`] use 1-based one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        if one_line.contains(&0) {
            return Err(Error::InvalidPermutation(format!(
                "{one_line:?} uses 0 in 1-based notation"
            )));
        }
        Self::from_images(one_line.iter().map(|&i| i - 1).collect())
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// The simple transposition swapping `i` and `i+1` (0-based), i.e. `s_{i+1}`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, i + 1);
        p
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    /// `s_i ∘ self` where `s_i` swaps `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        let images = self
            .images
            .iter()
            .map(|&j| {
                if j == i {
                    i + 1
                } else if j == i + 1 {
                    i
                } else {
                    j
                }
            })
            .collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Coxeter length (number of inversions).
    pub fn length(&self) -> usize {
        let n = self.degree();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count()
    }

    /// A reduced word `[i_1, …, i_k]` (0-based) with `self = s_{i_1} ∘ ⋯ ∘ s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        loop {
            let inv = w.inverse();
            let descent = (0..w.degree().saturating_sub(1)).find(|&i| inv.images[i] > inv.images[i + 1]);
            match descent {
                Some(i) => {
                    word.push(i);
                    w = w.left_mul_simple(i);
                }
                None => return word,
            }
        }
    }

    /// `w·v` with `(w·v)_i = v_{w^{-1}(i)}`.
    pub fn permute<T: Clone>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.degree());
        let mut out = v.to_vec();
        for (j, x) in v.iter().enumerate() {
            out[self.images[j]] = x.clone();
        }
        out
    }

    /// All of `S_n` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            if !next_permutation(&mut cur) {
                return out;
            }
        }
    }
}

/// Advances to the next lexicographic arrangement, treating repeated values
/// as indistinguishable. Returns `false` after the last one.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(&v).map_err(D::Error::custom)
    }
}

/// A character of the torus subalgebra: `values[j] = a` means `χ(t_{j+1}) = ζ_a`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Character {
    pub values: Vec<usize>,
}

impl Character {
    pub fn new(values: Vec<usize>) -> Self {
        Character { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn check_range(&self, r: usize) -> Result<()> {
        match self.values.iter().find(|&&a| a == 0 || a > r) {
            Some(&a) => Err(Error::RootIndexOutOfRange { index: a, order: r }),
            None => Ok(()),
        }
    }

    /// Swaps the values on strands `i` and `i+1`, i.e. `s_{i+1}(χ)`.
    pub fn swapped(&self, i: usize) -> Character {
        let mut values = self.values.clone();
        values.swap(i, i + 1);
        Character { values }
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "χ{:?}", self.values)
    }
}

/// An `r`-composition `(μ_1, …, μ_r)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    pub parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// For each strand, the (0-based) part it belongs to.
    pub fn block_of_strands(&self) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(a, &m)| std::iter::repeat_n(a, m))
            .collect()
    }

    /// First strand of each nonempty part.
    pub fn block_starts(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut pos = 0;
        for &m in &self.parts {
            if m > 0 {
                out.push(pos);
            }
            pos += m;
        }
        out
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

pub type Partition = Vec<usize>;

/// An ordered tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiPartition {
    pub components: Vec<Partition>,
}

impl MultiPartition {
    pub fn size(&self) -> usize {
        self.components.iter().flatten().sum()
    }

    pub fn is_valid(&self) -> bool {
        self.components
            .iter()
            .all(|p| p.iter().all(|&x| x > 0) && p.windows(2).all(|w| w[0] >= w[1]))
    }
}

/// `w(χ)` with `w(χ)(t_i) = χ(t_{w^{-1}(i)})`.
pub fn act(w: &Permutation, chi: &Character) -> Result<Character> {
    if w.degree() != chi.len() {
        return Err(Error::SizeMismatch {
            expected: w.degree(),
            got: chi.len(),
        });
    }
    Ok(Character::new(w.permute(&chi.values)))
}

/// `Comp(χ)`: how many strands carry each root of unity.
pub fn comp_of(chi: &Character, r: usize) -> Result<Composition> {
    chi.check_range(r)?;
    let mut parts = vec![0; r];
    for &a in &chi.values {
        parts[a - 1] += 1;
    }
    Ok(Composition::new(parts))
}

/// The base character `χ_0^μ`: `μ_1` strands with `ζ_1`, then `μ_2` with `ζ_2`, …
pub fn chi0(mu: &Composition) -> Character {
    Character::new(mu.block_of_strands().into_iter().map(|a| a + 1).collect())
}

/// Minimal-length `π_χ` with `π_χ(χ_0^μ) = χ`, `μ = Comp(χ)`.
///
/// Block `a` of `χ_0^μ` is sent, in increasing order, onto the strands
/// of `χ` carrying `ζ_a`.
pub fn pi_chi(chi: &Character, r: usize) -> Result<Permutation> {
    chi.check_range(r)?;
    let mut images = Vec::with_capacity(chi.len());
    for a in 1..=r {
        images.extend(
            chi.values
                .iter()
                .enumerate()
                .filter(|&(_, &v)| v == a)
                .map(|(j, _)| j),
        );
    }
    Permutation::from_images(images)
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Index of the Young subgroup: `n! / (μ_1! ⋯ μ_r!)`.
pub fn m_mu(mu: &Composition) -> u128 {
    factorial(mu.total()) / mu.parts.iter().map(|&m| factorial(m)).product::<u128>()
}

pub fn young_subgroup(mu: &Composition) -> Vec<Permutation> {
    let base = chi0(mu);
    Permutation::all(mu.total())
        .into_iter()
        .filter(|w| w.permute(&base.values) == base.values)
        .collect()
}

pub fn in_young_subgroup(w: &Permutation, block_of: &[usize]) -> bool {
    w.images().iter().enumerate().all(|(i, &j)| block_of[i] == block_of[j])
}

/// All characters with composition `μ`, in canonical (lexicographic) order.
pub fn characters_with_composition(mu: &Composition) -> Vec<Character> {
    let mut cur = chi0(mu).values;
    let mut out = Vec::new();
    loop {
        out.push(Character::new(cur.clone()));
        if !next_permutation(&mut cur) {
            return out;
        }
    }
}

/// Distinguished left coset representatives of `S^μ`, one per character
/// of composition `μ`, in canonical character order.
pub fn cosets(mu: &Composition) -> Vec<Permutation> {
    let r = mu.num_parts();
    characters_with_composition(mu)
        .iter()
        .map(|chi| pi_chi(chi, r).expect("characters of μ are in range"))
        .collect()
}

/// Every character of `T_{r,n}`, lexicographically.
pub fn all_characters(r: usize, n: usize) -> Vec<Character> {
    let mut out = Vec::with_capacity(r.pow(n as u32));
    let mut cur = vec![1; n];
    loop {
        out.push(Character::new(cur.clone()));
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < r {
                cur[k] += 1;
                break;
            }
            cur[k] = 1;
        }
    }
}

/// `r`-compositions of `n`, ordered by decreasing first part, then
/// recursively: `(2,0), (1,1), (0,2)`.
pub fn enumerate_compositions(r: usize, n: usize) -> Vec<Composition> {
    fn go(r: usize, n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if r == 1 {
            prefix.push(n);
            out.push(Composition::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=n).rev() {
            prefix.push(first);
            go(r - 1, n - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        if n == 0 {
            out.push(Composition::new(Vec::new()));
        }
        return out;
    }
    go(r, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` in reverse lexicographic order: `(2), (1,1)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            go(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    lists.iter().fold(vec![Vec::new()], |acc, list| {
        acc.iter()
            .flat_map(|prefix| {
                list.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect()
    })
}

/// `d`-partitions of `n`: sizes follow [`enumerate_compositions`] order,
/// components within a size pattern follow [`enumerate_partitions`].
pub fn enumerate_multipartitions(d: usize, n: usize) -> Vec<MultiPartition> {
    enumerate_compositions(d, n)
        .into_iter()
        .flat_map(|sizes| {
            let lists: Vec<Vec<Partition>> =
                sizes.parts.iter().map(|&k| enumerate_partitions(k)).collect();
            cartesian(&lists)
                .into_iter()
                .map(|components| MultiPartition { components })
        })
        .collect()
}

/// `r`-tuples of `d`-partitions with total size `n`.
pub fn enumerate_r_tuples_of_d_partitions(r: usize, d: usize, n: usize) -> Vec<Vec<MultiPartition>> {
    enumerate_compositions(r, n)
        .into_iter()
        .flat_map(|sizes| {
            let lists: Vec<Vec<MultiPartition>> = sizes
                .parts
                .iter()
                .map(|&k| enumerate_multipartitions(d, k))
                .collect();
            cartesian(&lists)
        })
        .collect()
}
