mod support;

use dyh::yokonuma::{YAlgebra, YElement, YParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::t_oracle::{from_t_element, TOracle};
use support::{cyc, qs};

fn check(y: &YAlgebra, oracle: &TOracle, basis_bound: Option<u32>, samples: Option<(usize, u64)>) {
    let basis = y.enumerate_basis(basis_bound).unwrap();
    let k = basis.len();
    let pairs: Vec<(usize, usize)> = match samples {
        None => (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect(),
        Some((count, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count).map(|_| (rng.gen_range(0..k), rng.gen_range(0..k))).collect()
        }
    };
    let as_t = |m: &dyh::yokonuma::YMonomial| from_t_element(&y.to_t(&YElement::monomial(m.clone(), y.scalar(1))));
    for (i, j) in pairs {
        let lhs = from_t_element(&y.to_t(&y.mul_basis(&basis[i], &basis[j])));
        let rhs = oracle.multiply(&as_t(&basis[i]), &as_t(&basis[j]));
        assert_eq!(lhs, rhs, "{:?} * {:?}", basis[i], basis[j]);
    }
}

#[test]
fn three_colours_two_strands() {
    check(&cyc(3, 2, &[0]), &TOracle::new(3, 2, Some(&qs(&[0]))), None, None);
    check(&cyc(3, 2, &[0, 1]), &TOracle::new(3, 2, Some(&qs(&[0, 1]))), None, Some((1500, 1)));
}

#[test]
fn three_strands() {
    check(&cyc(2, 3, &[0]), &TOracle::new(2, 3, Some(&qs(&[0]))), None, None);
    check(&cyc(2, 3, &[1, -2]), &TOracle::new(2, 3, Some(&qs(&[1, -2]))), None, Some((800, 2)));
}

#[test]
fn level_three() {
    check(&cyc(2, 2, &[0, 1, 3]), &TOracle::new(2, 2, Some(&qs(&[0, 1, 3]))), None, Some((1500, 3)));
}

#[test]
fn affine_low_degree() {
    let y = YAlgebra::new(YParams::affine(2, 2)).unwrap();
    check(&y, &TOracle::new(2, 2, None), Some(2), Some((1500, 4)));
    let y = YAlgebra::new(YParams::affine(3, 3)).unwrap();
    check(&y, &TOracle::new(3, 3, None), Some(1), Some((400, 5)));
}
