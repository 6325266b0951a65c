//! Exact arithmetic in `Q` and in the cyclotomic field `Q(ζ_r)`.
//!
//! A [`CycScalar`] is a polynomial in `ζ` of degree `< φ(r)` with rational
//! coefficients, kept reduced modulo the `r`-th cyclotomic polynomial. The
//! root `ζ_a` of the enumeration `ζ_1, …, ζ_r` is `ζ^(a-1)`, so multiplying
//! roots adds indices modulo `r`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator in {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn euler_phi(r: usize) -> usize {
    (1..=r).filter(|k| k.gcd(&r) == 1).count()
}

/// The `r`-th cyclotomic polynomial, coefficients from the constant term up.
///
/// Computed as `(z^r - 1) / Π_{s | r, s < r} Φ_s` by exact division.
pub fn cyclotomic_polynomial(r: usize) -> Vec<BigInt> {
    assert!(r >= 1, "cyclotomic polynomial needs r >= 1");
    let mut num = vec![BigInt::zero(); r + 1];
    num[0] = -BigInt::one();
    num[r] = BigInt::one();
    for s in (1..r).filter(|s| r.is_multiple_of(*s)) {
        num = exact_div_monic(&num, &cyclotomic_polynomial(s));
    }
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

/// The field `Q(ζ_r)` presented as `Q[z] / Φ_r(z)`.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    order: usize,
    modulus: Vec<BigInt>,
}

impl CyclotomicField {
    /// Shared handle for `Q(ζ_r)`; repeated calls with the same `r` return the
    /// same allocation.
    pub fn new(r: usize) -> Arc<Self> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("field cache poisoned");
        guard
            .entry(r)
            .or_insert_with(|| {
                Arc::new(CyclotomicField {
                    order: r,
                    modulus: cyclotomic_polynomial(r),
                })
            })
            .clone()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `φ(r)`, the length of every coefficient vector.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }
}

#[derive(Clone)]
pub struct CycScalar {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycScalar {}

impl std::hash::Hash for CycScalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl CycScalar {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        CycScalar {
            field: field.clone(),
            coeffs: vec![Rational::zero(); field.degree()],
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, q: Rational) -> Self {
        let mut s = Self::zero(field);
        s.coeffs[0] = q;
        s
    }

    pub fn from_integer(field: &Arc<CyclotomicField>, k: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(BigInt::from(k)))
    }

    /// Builds a scalar from an arbitrary polynomial in `ζ`, reducing it.
    pub fn from_poly(field: &Arc<CyclotomicField>, poly: Vec<Rational>) -> Self {
        CycScalar {
            field: field.clone(),
            coeffs: reduce(poly, &field.modulus),
        }
    }

    /// Builds a scalar from its reduced coefficient vector.
    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != field.degree() {
            return Err(Error::SizeMismatch {
                expected: field.degree(),
                got: coeffs.len(),
            });
        }
        Ok(CycScalar {
            field: field.clone(),
            coeffs,
        })
    }

    /// `ζ_a = ζ^(a-1)` for `1 <= a <= r`.
    pub fn zeta(field: &Arc<CyclotomicField>, a: usize) -> Result<Self> {
        let r = field.order;
        if a == 0 || a > r {
            return Err(Error::RootIndexOutOfRange { index: a, order: r });
        }
        Ok(Self::zeta_power(field, (a - 1) as i64))
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_power(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let r = field.order as i64;
        let e = k.rem_euclid(r) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        Self::from_poly(field, poly)
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        CycScalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Φ_r`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(&self.field, self.coeffs[0].recip()));
        }
        let modulus: Vec<Rational> = self
            .field
            .modulus
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let (mut r0, mut r1) = (modulus, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (Vec::<Rational>::new(), vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, rem) = poly_divrem(&r0, &r1);
            let next_s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, next_s);
        }
        // r0 is a nonzero constant since Φ_r is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        let inv: Vec<Rational> = s0.into_iter().map(|x| x * &c).collect();
        Ok(Self::from_poly(&self.field, inv))
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(
            self.field.order, other.field.order,
            "mixing scalars from Q(ζ_{}) and Q(ζ_{})",
            self.field.order, other.field.order
        );
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(out)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    if a.len() < b.len() {
        return (Vec::new(), trim(rem));
    }
    let db = b.len() - 1;
    let lead = b[db].recip();
    let mut quot = vec![Rational::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        quot[k] = c;
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

/// Reduces a polynomial modulo the monic integer polynomial `modulus`,
/// returning exactly `deg(modulus)` coefficients.
fn reduce(mut poly: Vec<Rational>, modulus: &[BigInt]) -> Vec<Rational> {
    let deg = modulus.len() - 1;
    for k in (deg..poly.len()).rev() {
        let c = std::mem::take(&mut poly[k]);
        if c.is_zero() {
            continue;
        }
        for (j, mj) in modulus[..deg].iter().enumerate() {
            if !mj.is_zero() {
                poly[k - deg + j] -= &c * mj;
            }
        }
    }
    poly.resize(deg, Rational::zero());
    poly
}

impl Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        self.check_field(rhs);
        CycScalar {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        self.check_field(rhs);
        CycScalar {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        self.check_field(rhs);
        if rhs.is_rational() {
            return self.scale_rational(&rhs.coeffs[0]);
        }
        if self.is_rational() {
            return rhs.scale_rational(&self.coeffs[0]);
        }
        let deg = self.coeffs.len();
        let mut prod = vec![Rational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        CycScalar {
            field: self.field.clone(),
            coeffs: reduce(prod, &self.field.modulus),
        }
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(mut self) -> CycScalar {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: &CycScalar) -> CycScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        self.check_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        self.check_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = match k {
                0 => format_rational(c),
                1 if c.is_one() => "z".to_string(),
                1 => format!("{}*z", paren(c)),
                _ if c.is_one() => format!("z^{k}"),
                _ => format!("{}*z^{k}", paren(c)),
            };
            parts.push(body);
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn paren(c: &Rational) -> String {
    if c.is_negative() || !c.denom().is_one() {
        format!("({})", format_rational(c))
    } else {
        format_rational(c)
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycScalar[r={}]({})", self.field.order, self)
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    r: usize,
    coeffs: Vec<[String; 2]>,
}

impl Serialize for CycScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarRepr {
            r: self.field.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| [c.numer().to_string(), c.denom().to_string()])
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(d)?;
        if repr.r == 0 {
            return Err(D::Error::custom("root-of-unity order must be positive"));
        }
        let field = CyclotomicField::new(repr.r);
        let coeffs = repr
            .coeffs
            .iter()
            .map(|[n, q]| parse_rational(&format!("{n}/{q}")).map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        CycScalar::from_coeffs(&field, coeffs).map_err(D::Error::custom)
    }
}

/// `ζ_a` in `Q(ζ_r)`.
pub fn zeta(r: usize, a: usize) -> Result<CycScalar> {
    if r == 0 {
        return Err(Error::RootIndexOutOfRange { index: a, order: r });
    }
    CycScalar::zeta(&CyclotomicField::new(r), a)
}
