mod support;

use dyh::iso::{FullImage, Isomorphism};
use dyh::yokonuma::{YAlgebra, YElement};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::{cyc, random_element, random_scalar};

fn add_images(iso: &Isomorphism, a: &FullImage, b: &FullImage) -> FullImage {
    let mut out = a.clone();
    for mu in iso.compositions() {
        out.get_mut(mu).unwrap().add_assign(&b[mu]).unwrap();
    }
    out
}

fn random_pair(y: &YAlgebra, seed: u64) -> (YElement, YElement) {
    let basis = y.enumerate_basis(None).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (
        random_element(y.field(), &basis, 4, &mut rng),
        random_element(y.field(), &basis, 4, &mut rng),
    )
}

#[test]
fn identity_maps_to_identity() {
    for (r, n, v) in [(2, 2, &[0][..]), (3, 2, &[0, 1][..]), (2, 3, &[0][..])] {
        let iso = Isomorphism::new(cyc(r, n, v)).unwrap();
        let y = iso.yokonuma();
        assert_eq!(iso.phi_full(&y.one()).unwrap(), iso.full_identity());
        assert_eq!(iso.psi_full(&iso.full_identity()).unwrap(), y.one());
    }
}

#[test]
fn inverse_on_every_basis_element_for_three_strands() {
    let iso = Isomorphism::new(cyc(2, 3, &[0])).unwrap();
    let y = iso.yokonuma();
    for b in y.enumerate_basis(None).unwrap() {
        let e = YElement::monomial(b, y.scalar(1));
        assert_eq!(iso.psi_full(&iso.phi_full(&e).unwrap()).unwrap(), e);
    }
}

#[test]
fn block_idempotent_maps_to_its_block_identity() {
    let iso = Isomorphism::new(cyc(3, 2, &[0, 1])).unwrap();
    let y = iso.yokonuma();
    for mu in iso.compositions() {
        let img = iso.phi_full(&y.block_idempotent(mu).unwrap()).unwrap();
        for (nu, m) in &img {
            if nu == mu {
                assert_eq!(m, &iso.full_identity()[mu]);
            } else {
                assert!(m.is_zero());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn phi_and_psi_are_linear(seed in any::<u64>()) {
        let iso = Isomorphism::new(cyc(3, 2, &[0, 2])).unwrap();
        let y = iso.yokonuma();
        let (a, b) = random_pair(y, seed);
        let c = random_scalar(y.field(), &mut ChaCha8Rng::seed_from_u64(seed ^ 1));
        let mut comb = a.scaled(&c);
        comb.add_assign(&b);
        let (pa, pb) = (iso.phi_full(&a).unwrap(), iso.phi_full(&b).unwrap());
        let scaled: FullImage = pa.iter().map(|(mu, m)| (mu.clone(), m.scaled(&c))).collect();
        let expect = add_images(&iso, &scaled, &pb);
        prop_assert_eq!(&iso.phi_full(&comb).unwrap(), &expect);
        prop_assert_eq!(iso.psi_full(&expect).unwrap(), comb);
    }

    #[test]
    fn phi_is_multiplicative_on_random_elements(seed in any::<u64>()) {
        let iso = Isomorphism::new(cyc(2, 3, &[0, 1])).unwrap();
        let y = iso.yokonuma();
        let (a, b) = random_pair(y, seed);
        let lhs = iso.phi_full(&y.multiply(&a, &b).unwrap()).unwrap();
        let rhs = iso.full_multiply(&iso.phi_full(&a).unwrap(), &iso.phi_full(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn both_block_splittings_agree(seed in any::<u64>()) {
        let iso = Isomorphism::new(cyc(3, 2, &[1, -1])).unwrap();
        let (a, _) = random_pair(iso.yokonuma(), seed);
        prop_assert_eq!(iso.phi_full(&a).unwrap(), iso.phi_full_by_filter(&a).unwrap());
    }
}
