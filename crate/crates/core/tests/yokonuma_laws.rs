mod support;

use dyh::combinatorics::{act, all_characters, enumerate_compositions, Permutation};
use dyh::yokonuma::{YAlgebra, YElement, YMonomial, YParams};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use support::{cyc, random_element};

fn unit(y: &YAlgebra, m: &YMonomial) -> YElement {
    YElement::monomial(m.clone(), y.scalar(1))
}

#[test]
fn associative_on_all_basis_triples_at_level_one() {
    let y = cyc(2, 2, &[0]);
    let basis = y.enumerate_basis(None).unwrap();
    assert_eq!(basis.len(), 8);
    let basis = &basis;
    let bad: Vec<_> = basis
        .par_iter()
        .flat_map_iter(|a| basis.iter().flat_map(move |b| basis.iter().map(move |c| (a, b, c))))
        .filter(|(a, b, c)| {
            let left = y.multiply(&y.mul_basis(a, b), &unit(&y, c)).unwrap();
            let right = y.multiply(&unit(&y, a), &y.mul_basis(b, c)).unwrap();
            left != right
        })
        .map(|(a, b, c)| (a.clone(), b.clone(), c.clone()))
        .collect();
    assert!(bad.is_empty(), "{:?}", bad.first());
}

#[test]
fn associative_on_random_triples_at_level_two() {
    let y = cyc(2, 2, &[0, 1]);
    let basis = y.enumerate_basis(None).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    use rand::Rng;
    let triples: Vec<(usize, usize, usize)> = (0..10_000)
        .map(|_| (rng.gen_range(0..32), rng.gen_range(0..32), rng.gen_range(0..32)))
        .collect();
    let failures = triples
        .par_iter()
        .filter(|&&(i, j, k)| {
            let (a, b, c) = (&basis[i], &basis[j], &basis[k]);
            y.multiply(&y.mul_basis(a, b), &unit(&y, c)).unwrap() != y.multiply(&unit(&y, a), &y.mul_basis(b, c)).unwrap()
        })
        .count();
    assert_eq!(failures, 0);
}

#[test]
fn identity_is_two_sided_unit() {
    for (r, n, v) in [(2, 2, &[0][..]), (3, 2, &[0, 1][..]), (2, 3, &[1, -1][..])] {
        let y = cyc(r, n, v);
        let one = y.one();
        for b in y.enumerate_basis(None).unwrap() {
            let e = unit(&y, &b);
            assert_eq!(y.multiply(&one, &e).unwrap(), e);
            assert_eq!(y.multiply(&e, &one).unwrap(), e);
        }
    }
}

#[test]
fn conjugating_idempotents_by_permutations() {
    for (r, n, v) in [(2, 2, &[0][..]), (3, 2, &[0, 2][..]), (2, 3, &[0][..]), (3, 3, &[0][..]), (2, 3, &[0, 1][..])] {
        let y = cyc(r, n, v);
        for w in Permutation::all(n) {
            let fw = y.f_perm(&w);
            let fwinv = y.f_perm(&w.inverse());
            for chi in all_characters(r, n) {
                let lhs = y.multiply(&y.multiply(&fw, &y.idempotent(&chi).unwrap()).unwrap(), &fwinv).unwrap();
                assert_eq!(lhs, y.idempotent(&act(&w, &chi).unwrap()).unwrap(), "w={w:?} chi={chi:?}");
            }
            assert_eq!(y.multiply(&fw, &fwinv).unwrap(), y.one());
        }
    }
}

#[test]
fn idempotents_are_orthogonal_and_sum_to_one() {
    let y = cyc(3, 2, &[0]);
    let mut total = YElement::zero();
    let chars = all_characters(3, 2);
    for a in &chars {
        let ea = y.idempotent(a).unwrap();
        total.add_assign(&ea);
        for b in &chars {
            let p = y.multiply(&ea, &y.idempotent(b).unwrap()).unwrap();
            assert_eq!(p, if a == b { ea.clone() } else { YElement::zero() });
        }
    }
    assert_eq!(total, y.one());
}

#[test]
fn block_idempotents_are_central() {
    for (r, n, v) in [(2, 2, &[0, 1][..]), (3, 2, &[0][..]), (2, 3, &[0][..])] {
        let y = cyc(r, n, v);
        let basis = y.enumerate_basis(None).unwrap();
        let mut sum = YElement::zero();
        for mu in enumerate_compositions(r, n) {
            let e = y.block_idempotent(&mu).unwrap();
            sum.add_assign(&e);
            for b in &basis {
                let b = unit(&y, b);
                assert_eq!(y.multiply(&e, &b).unwrap(), y.multiply(&b, &e).unwrap());
            }
        }
        assert_eq!(sum, y.one());
    }
}

#[test]
fn affine_products_respect_the_degree_filtration() {
    let y = YAlgebra::new(YParams::affine(2, 2)).unwrap();
    let basis = y.enumerate_basis(Some(1)).unwrap();
    for a in &basis {
        for b in &basis {
            let deg = a.x.iter().sum::<u32>() + b.x.iter().sum::<u32>();
            for (m, _) in &y.mul_basis(a, b) {
                assert!(m.x.iter().sum::<u32>() <= deg);
            }
        }
    }
}

fn small_algebra() -> YAlgebra {
    cyc(3, 2, &[0, 2])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_bilinear_and_associative(seed in any::<u64>()) {
        let y = small_algebra();
        let basis = y.enumerate_basis(None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(y.field(), &basis, 3, &mut rng);
        let b = random_element(y.field(), &basis, 3, &mut rng);
        let c = random_element(y.field(), &basis, 3, &mut rng);
        let mut bc = b.clone();
        bc.add_assign(&c);
        let mut sum = y.multiply(&a, &b).unwrap();
        sum.add_assign(&y.multiply(&a, &c).unwrap());
        prop_assert_eq!(y.multiply(&a, &bc).unwrap(), sum);
        let left = y.multiply(&y.multiply(&a, &b).unwrap(), &c).unwrap();
        let right = y.multiply(&a, &y.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn t_presentation_round_trip(seed in any::<u64>()) {
        let y = small_algebra();
        let basis = y.enumerate_basis(None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(y.field(), &basis, 4, &mut rng);
        prop_assert_eq!(y.from_t(&y.to_t(&a)).unwrap(), a);
    }

    #[test]
    fn normal_form_is_idempotent(seed in any::<u64>()) {
        let y = small_algebra();
        let basis = y.enumerate_basis(None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(y.field(), &basis, 4, &mut rng);
        let na = y.normalize(&a).unwrap();
        prop_assert_eq!(&na, &a);
        prop_assert_eq!(y.normalize(&na).unwrap(), na);
    }
}
