use super::*;
use crate::scalar::Rational;

fn q(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

fn cyc(r: usize, n: usize, v: &[i64]) -> YAlgebra {
    YAlgebra::new(YParams::cyclotomic(r, n, v.iter().map(|&k| q(k)).collect())).unwrap()
}

fn mul(a: &YAlgebra, x: &YElement, y: &YElement) -> YElement {
    a.multiply(x, y).unwrap()
}

fn sum(a: &YElement, b: &YElement) -> YElement {
    let mut s = a.clone();
    s.add_assign(b);
    s
}

fn diff(a: &YElement, b: &YElement) -> YElement {
    let mut s = a.clone();
    s.sub_assign(b);
    s
}

fn algebras() -> Vec<YAlgebra> {
    vec![
        cyc(2, 2, &[0]),
        cyc(2, 2, &[0, 1]),
        cyc(3, 2, &[0, 1]),
        cyc(2, 3, &[0, 2]),
        cyc(1, 3, &[1, 2]),
        YAlgebra::new(YParams::affine(2, 3)).unwrap(),
    ]
}

#[test]
fn defining_relations_hold() {
    for a in algebras() {
        let n = a.n();
        let one = a.one();
        for i in 0..n - 1 {
            let f = a.f(i);
            let e = a.e(i);
            assert_eq!(mul(&a, &f, &f), one, "f^2 = 1");
            // f_i x_{i+1} = x_i f_i + e_i and f_i x_i = x_{i+1} f_i - e_i
            let lhs = mul(&a, &f, &a.x(i + 1));
            assert_eq!(lhs, sum(&mul(&a, &a.x(i), &f), &e));
            let lhs = mul(&a, &f, &a.x(i));
            assert_eq!(lhs, diff(&mul(&a, &a.x(i + 1), &f), &e));
            for j in 0..n {
                let tj = a.t(j);
                let sj = Permutation::simple(n, i).apply(j);
                assert_eq!(mul(&a, &f, &tj), mul(&a, &a.t(sj), &f));
                if j != i && j != i + 1 {
                    assert_eq!(mul(&a, &f, &a.x(j)), mul(&a, &a.x(j), &f));
                }
            }
            if i + 2 < n {
                let g = a.f(i + 1);
                let l = mul(&a, &mul(&a, &f, &g), &f);
                let r = mul(&a, &mul(&a, &g, &f), &g);
                assert_eq!(l, r, "braid relation");
            }
            assert_eq!(mul(&a, &e, &e), e);
        }
        for j in 0..n {
            for k in 0..n {
                assert_eq!(mul(&a, &a.x(j), &a.x(k)), mul(&a, &a.x(k), &a.x(j)));
                assert_eq!(mul(&a, &a.x(j), &a.t(k)), mul(&a, &a.t(k), &a.x(j)));
            }
            let mut p = one.clone();
            for _ in 0..a.r() {
                p = mul(&a, &p, &a.t(j));
            }
            assert_eq!(p, one, "t^r = 1");
        }
    }
}

#[test]
fn cyclotomic_relation_holds_on_first_strand() {
    for a in algebras() {
        let Variant::Cyclotomic { v } = a.params().variant.clone() else {
            continue;
        };
        let mut p = a.one();
        for vj in &v {
            let mut factor = a.x(0);
            factor.sub_assign(&a.one().scaled(&CycScalar::from_rational(a.field(), vj.clone())));
            p = mul(&a, &p, &factor);
        }
        assert!(p.is_zero());
    }
}

#[test]
fn idempotents_are_orthogonal_and_complete() {
    let a = cyc(3, 2, &[0, 1]);
    let chars = all_characters(3, 2);
    let mut total = YElement::zero();
    for c1 in &chars {
        let e1 = a.idempotent(c1).unwrap();
        total.add_assign(&e1);
        for c2 in &chars {
            let p = mul(&a, &e1, &a.idempotent(c2).unwrap());
            if c1 == c2 {
                assert_eq!(p, e1);
            } else {
                assert!(p.is_zero());
            }
        }
    }
    assert_eq!(total, a.one());
}

#[test]
fn monomials_are_products_of_generators() {
    let a = cyc(2, 3, &[0, 1]);
    let m = YMonomial::new(
        Character::new(vec![1, 2, 1]),
        vec![1, 0, 1],
        Permutation::from_one_line(&[2, 3, 1]).unwrap(),
    );
    let built = mul(
        &a,
        &mul(&a, &a.idempotent(&m.chi).unwrap(), &a.x_power(&m.x).unwrap()),
        &a.f_perm(&m.w),
    );
    assert_eq!(built, YElement::monomial(m, a.scalar(1)));
}

#[test]
fn overflow_on_higher_strand_reduces() {
    // d = 1, v = (c): x_1 = c, and x_2 = f x_1 f + e f = c + e f.
    let a = cyc(2, 2, &[3]);
    let chi = Character::new(vec![1, 1]);
    let red = a.cyclotomic_reduce(&YMonomial::new(chi.clone(), vec![0, 1], Permutation::identity(2))).unwrap();
    let mut expect = YElement::monomial(YMonomial::idempotent(chi.clone()), a.scalar(3));
    expect.add_term(YMonomial::new(chi, vec![0, 0], Permutation::simple(2, 0)), a.scalar(1));
    assert_eq!(red, expect);

    let chi = Character::new(vec![1, 2]);
    let red = a.cyclotomic_reduce(&YMonomial::new(chi.clone(), vec![0, 1], Permutation::identity(2))).unwrap();
    assert_eq!(red, YElement::monomial(YMonomial::idempotent(chi), a.scalar(3)));
}

#[test]
fn basis_sizes() {
    let a = cyc(2, 2, &[0, 1]);
    assert_eq!(a.enumerate_basis(None).unwrap().len(), 32);
    assert_eq!(a.dimension().unwrap(), 32);
    let aff = YAlgebra::new(YParams::affine(2, 2)).unwrap();
    assert!(matches!(aff.enumerate_basis(None), Err(Error::MissingDegreeBound)));
    // exponents with total degree <= 1: (0,0), (0,1), (1,0)
    assert_eq!(aff.enumerate_basis(Some(1)).unwrap().len(), 4 * 3 * 2);
    assert!(matches!(aff.form_rho_hat_n(&aff.one()), Err(Error::AffineVariant)));
}

#[test]
fn t_basis_round_trip() {
    let a = cyc(3, 2, &[0, 1]);
    for m in a.enumerate_basis(None).unwrap().into_iter().step_by(7) {
        let e = YElement::monomial(m, a.scalar(1));
        assert_eq!(a.from_t(&a.to_t(&e)).unwrap(), e);
    }
    let t0 = a.t(0);
    let te = a.to_t(&t0);
    assert_eq!(te.len(), 1);
    let (m, c) = te.iter().next().unwrap();
    assert_eq!(m.t, vec![1, 0]);
    assert!(c.is_one());
}

#[test]
fn forms_agree_up_to_normalisation() {
    let a = cyc(2, 2, &[0, 1]);
    let scale = CycScalar::from_integer(a.field(), 4);
    for m in a.enumerate_basis(None).unwrap() {
        let e = YElement::monomial(m, a.scalar(1));
        let hat = a.form_tau_hat(&e).unwrap();
        assert_eq!(&hat * &scale, a.form_rho_hat_n(&e).unwrap());
    }
}

#[test]
fn rejects_bad_input() {
    let a = cyc(2, 2, &[0, 1]);
    let bad = YElement::monomial(
        YMonomial::new(Character::new(vec![1, 3]), vec![0, 0], Permutation::identity(2)),
        a.scalar(1),
    );
    assert!(matches!(a.multiply(&bad, &a.one()), Err(Error::RootIndexOutOfRange { .. })));
    let unreduced = YElement::monomial(
        YMonomial::new(Character::new(vec![1, 1]), vec![2, 0], Permutation::identity(2)),
        a.scalar(1),
    );
    assert!(a.validate(&unreduced).is_err());
    assert!(a.normalize(&unreduced).is_ok());
    let other = cyc(3, 2, &[0, 1]);
    assert!(matches!(a.multiply(&other.one(), &a.one()), Err(Error::ParameterMismatch(_))));
}
