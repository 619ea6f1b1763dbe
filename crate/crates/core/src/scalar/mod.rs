//! Exact scalars: ℚ, prime fields 𝔽ₚ and cyclotomic fields ℚ(ζₙ) = ℚ[X]/Φₙ.
//!
//! A [`Field`] is built once from a [`FieldDescriptor`] and hands out
//! [`Scalar`]s. Scalars are immutable values in canonical form, so equality is
//! structural. Mixing scalars from different fields is a programming error and
//! panics.

mod cyclotomic;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use cyclotomic::{cyclotomic_polynomial, IntPolynomial};
pub(crate) use cyclotomic::write_poly;
use cyclotomic::RatPoly;

use crate::error::{Error, Result};

/// Which field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldDescriptor {
    Rationals,
    PrimeField(u64),
    Cyclotomic(u32),
}

impl FieldDescriptor {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::PrimeField(p) => *p,
            _ => 0,
        }
    }

    pub fn contains_rationals(&self) -> bool {
        self.characteristic() == 0
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "q"),
            FieldDescriptor::PrimeField(p) => write!(f, "fp:{p}"),
            FieldDescriptor::Cyclotomic(n) => write!(f, "cyc:{n}"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    /// Accepts `q`, `fp:<p>` and `cyc:<n>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldDescriptor::Rationals);
        }
        let bad = || Error::Parse(format!("unrecognized field '{s}' (expected q, fp:<p> or cyc:<n>)"));
        if let Some(p) = s.strip_prefix("fp:") {
            let p: u64 = p.parse().map_err(|_| bad())?;
            return Ok(FieldDescriptor::PrimeField(p));
        }
        if let Some(n) = s.strip_prefix("cyc:") {
            let n: u32 = n.parse().map_err(|_| bad())?;
            return Ok(FieldDescriptor::Cyclotomic(n));
        }
        Err(bad())
    }
}

impl Serialize for FieldDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldDescriptor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// `Φₙ` with rational coefficients, shared by every element of ℚ(ζₙ).
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicModulus {
    n: u32,
    phi: Vec<BigInt>,
}

impl CyclotomicModulus {
    fn new(n: u32) -> Self {
        let phi = cyclotomic_polynomial(n as usize).coeffs().to_vec();
        CyclotomicModulus { n, phi }
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Reduce an arbitrary-length coefficient vector modulo the monic `Φₙ`.
    fn reduce(&self, mut c: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        if c.len() > d {
            for k in (d..c.len()).rev() {
                if c[k].is_zero() {
                    continue;
                }
                let lead = std::mem::take(&mut c[k]);
                for (j, pj) in self.phi.iter().enumerate().take(d) {
                    if !pj.is_zero() {
                        c[k - d + j] -= &lead * BigRational::from_integer(pj.clone());
                    }
                }
            }
        }
        c.resize(d, BigRational::zero());
        c
    }
}

/// Element of ℚ(ζₙ): coefficients of `1, ζ, …, ζ^{d−1}`, `d = φ(n)`.
#[derive(Clone, Debug)]
pub struct CyclotomicElement {
    modulus: Arc<CyclotomicModulus>,
    coeffs: Vec<BigRational>,
}

impl CyclotomicElement {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn order(&self) -> u32 {
        self.modulus.n
    }
}

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        self.modulus.n == other.modulus.n && self.coeffs == other.coeffs
    }
}

/// An exact field element in canonical form.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
    Cyclotomic(CyclotomicElement),
}

/// A field, ready to produce scalars.
#[derive(Clone, Debug)]
pub struct Field {
    descriptor: FieldDescriptor,
    cyclo: Option<Arc<CyclotomicModulus>>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.descriptor == other.descriptor
    }
}

impl Field {
    pub fn new(descriptor: FieldDescriptor) -> Result<Self> {
        let cyclo = match descriptor {
            FieldDescriptor::Rationals => None,
            FieldDescriptor::PrimeField(p) => {
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                None
            }
            FieldDescriptor::Cyclotomic(n) => {
                if n == 0 {
                    return Err(Error::InvalidArgument("cyclotomic order must be ≥ 1".into()));
                }
                Some(Arc::new(CyclotomicModulus::new(n)))
            }
        };
        Ok(Field { descriptor, cyclo })
    }

    pub fn rationals() -> Self {
        Field { descriptor: FieldDescriptor::Rationals, cyclo: None }
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        self.descriptor
    }

    pub fn characteristic(&self) -> u64 {
        self.descriptor.characteristic()
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        self.from_rational(&BigRational::from_integer(v.clone()))
            .expect("integers embed in every field")
    }

    /// Image of a rational number; fails in 𝔽ₚ when `p` divides the denominator.
    pub fn from_rational(&self, r: &BigRational) -> Result<Scalar> {
        match &self.descriptor {
            FieldDescriptor::Rationals => Ok(Scalar::Rational(r.clone())),
            FieldDescriptor::PrimeField(p) => {
                let p = *p;
                let num = reduce_bigint(r.numer(), p);
                let den = reduce_bigint(r.denom(), p);
                if den == 0 {
                    return Err(Error::InvalidArgument(format!("{r} has no image in 𝔽_{p}")));
                }
                Ok(Scalar::Modular { value: mul_mod(num, pow_mod(den, p - 2, p), p), modulus: p })
            }
            FieldDescriptor::Cyclotomic(_) => {
                let m = self.cyclo.clone().unwrap();
                let mut coeffs = vec![BigRational::zero(); m.degree()];
                coeffs[0] = r.clone();
                Ok(Scalar::Cyclotomic(CyclotomicElement { modulus: m, coeffs }))
            }
        }
    }

    /// The primitive root `ζ = X mod Φₙ`.
    pub fn zeta(&self) -> Result<Scalar> {
        let m = self.cyclo.clone().ok_or_else(|| {
            Error::UnsupportedField(self.descriptor, "no primitive root of unity available".into())
        })?;
        let mut c = vec![BigRational::zero(); 2];
        c[1] = BigRational::one();
        let coeffs = m.reduce(c);
        Ok(Scalar::Cyclotomic(CyclotomicElement { modulus: m, coeffs }))
    }

    /// `ζᵏ` for any integer `k` (negative exponents allowed).
    pub fn zeta_pow(&self, k: i64) -> Result<Scalar> {
        let z = self.zeta()?;
        let n = self.cyclo.as_ref().unwrap().n as i64;
        Ok(z.pow(k.rem_euclid(n) as u64))
    }

    pub fn cyclotomic_element(&self, coeffs: Vec<BigRational>) -> Result<Scalar> {
        let m = self.cyclo.clone().ok_or_else(|| {
            Error::UnsupportedField(self.descriptor, "not a cyclotomic field".into())
        })?;
        let coeffs = m.reduce(coeffs);
        Ok(Scalar::Cyclotomic(CyclotomicElement { modulus: m, coeffs }))
    }

    /// Parse a scalar in the JSON string format of this field.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let v: Scalar = s.parse()?;
        if v.descriptor() == self.descriptor {
            return Ok(v);
        }
        // Plain integers and fractions are accepted in every field.
        match v {
            Scalar::Rational(r) => self.from_rational(&r),
            other => Err(Error::Parse(format!(
                "{other} is not an element of {}",
                self.descriptor
            ))),
        }
    }
}

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let r = ((v % &pb) + &pb) % &pb;
    r.to_u64().unwrap()
}

impl Scalar {
    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            Scalar::Rational(_) => FieldDescriptor::Rationals,
            Scalar::Modular { modulus, .. } => FieldDescriptor::PrimeField(*modulus),
            Scalar::Cyclotomic(c) => FieldDescriptor::Cyclotomic(c.modulus.n),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
            Scalar::Cyclotomic(c) => c.coeffs.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
            Scalar::Cyclotomic(c) => {
                c.coeffs[0].is_one() && c.coeffs[1..].iter().all(Zero::is_zero)
            }
        }
    }

    pub fn zero_like(&self) -> Scalar {
        match self {
            Scalar::Rational(_) => Scalar::Rational(BigRational::zero()),
            Scalar::Modular { modulus, .. } => Scalar::Modular { value: 0, modulus: *modulus },
            Scalar::Cyclotomic(c) => Scalar::Cyclotomic(CyclotomicElement {
                modulus: c.modulus.clone(),
                coeffs: vec![BigRational::zero(); c.coeffs.len()],
            }),
        }
    }

    pub fn one_like(&self) -> Scalar {
        match self {
            Scalar::Rational(_) => Scalar::Rational(BigRational::one()),
            Scalar::Modular { modulus, .. } => Scalar::Modular { value: 1 % modulus, modulus: *modulus },
            Scalar::Cyclotomic(c) => {
                let mut coeffs = vec![BigRational::zero(); c.coeffs.len()];
                coeffs[0] = BigRational::one();
                Scalar::Cyclotomic(CyclotomicElement { modulus: c.modulus.clone(), coeffs })
            }
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
            Scalar::Cyclotomic(c) => {
                // Extended Euclid in ℚ[X]: find s with s·a ≡ 1 mod Φₙ.
                let phi = RatPoly::trimmed(
                    c.modulus.phi.iter().map(|v| BigRational::from_integer(v.clone())).collect(),
                );
                let (mut r0, mut r1) = (phi, RatPoly::trimmed(c.coeffs.clone()));
                let (mut s0, mut s1) = (RatPoly(Vec::new()), RatPoly(vec![BigRational::one()]));
                while !r1.is_zero() {
                    let (q, r) = r0.divrem(&r1);
                    let s = s0.sub(&q.mul(&s1));
                    r0 = std::mem::replace(&mut r1, r);
                    s0 = std::mem::replace(&mut s1, s);
                }
                // r0 is a nonzero constant since Φₙ is irreducible.
                let k = r0.0[0].clone();
                let coeffs: Vec<BigRational> = s0.0.into_iter().map(|v| v / &k).collect();
                Scalar::Cyclotomic(CyclotomicElement {
                    modulus: c.modulus.clone(),
                    coeffs: c.modulus.reduce(coeffs),
                })
            }
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer value when the scalar is (the image of) an integer in ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    fn check_same(&self, other: &Scalar) {
        assert_eq!(
            self.descriptor(),
            other.descriptor(),
            "arithmetic between scalars of different fields"
        );
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular { value: ((*a as u128 + *b as u128) % *modulus as u128) as u64, modulus: *modulus }
            }
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(CyclotomicElement {
                modulus: a.modulus.clone(),
                coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
            }),
            _ => unreachable!(),
        }
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
            Scalar::Cyclotomic(a) => Scalar::Cyclotomic(CyclotomicElement {
                modulus: a.modulus.clone(),
                coeffs: a.coeffs.iter().map(|x| -x).collect(),
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular { value: mul_mod(*a, *b, *modulus), modulus: *modulus }
            }
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => {
                let d = a.coeffs.len();
                let mut out = vec![BigRational::zero(); 2 * d - 1];
                for (i, x) in a.coeffs.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.coeffs.iter().enumerate() {
                        if !y.is_zero() {
                            out[i + j] += x * y;
                        }
                    }
                }
                Scalar::Cyclotomic(CyclotomicElement {
                    modulus: a.modulus.clone(),
                    coeffs: a.modulus.reduce(out),
                })
            }
            _ => unreachable!(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Modular { value, modulus } => write!(f, "{value} mod {modulus}"),
            Scalar::Cyclotomic(c) => {
                write_poly(f, c.coeffs.iter().cloned().collect::<Vec<_>>().into_iter(), "z")?;
                write!(f, " (zeta_{})", c.modulus.n)
            }
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let err = || Error::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| err())?;
            let b: BigInt = b.trim().parse().map_err(|_| err())?;
            if b.is_zero() {
                return Err(err());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| err())?)),
    }
}

/// Parses `c*z^k` style terms separated by `+`/`-`.
fn parse_cyclotomic_terms(s: &str) -> Result<Vec<BigRational>> {
    let mut coeffs: Vec<BigRational> = Vec::new();
    let normalized = s.replace(' ', "");
    if normalized.is_empty() {
        return Err(Error::Parse("empty cyclotomic element".into()));
    }
    let mut terms = Vec::new();
    let mut cur = String::new();
    for (i, ch) in normalized.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') && !cur.ends_with('/') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    for t in terms {
        let (sign, body) = match t.strip_prefix('-') {
            Some(b) => (-BigRational::one(), b),
            None => (BigRational::one(), t.strip_prefix('+').unwrap_or(&t)),
        };
        let (coef, deg) = match body.find('z') {
            None => (parse_rational(body)?, 0usize),
            Some(pos) => {
                let c = body[..pos].trim_end_matches('*');
                let c = if c.is_empty() { BigRational::one() } else { parse_rational(c)? };
                let rest = &body[pos + 1..];
                let d = match rest.strip_prefix('^') {
                    Some(d) => d.parse().map_err(|_| Error::Parse(format!("bad exponent in '{body}'")))?,
                    None if rest.is_empty() => 1,
                    None => return Err(Error::Parse(format!("bad term '{body}'"))),
                };
                (c, d)
            }
        };
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, BigRational::zero());
        }
        coeffs[deg] += sign * coef;
    }
    Ok(coeffs)
}

impl FromStr for Scalar {
    type Err = Error;

    /// Formats: `3/4`, `2 mod 5`, `1 - z + z^2 (zeta_6)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((v, p)) = s.split_once(" mod ") {
            let p: u64 = p.trim().parse().map_err(|_| Error::Parse(format!("bad modulus in '{s}'")))?;
            let field = Field::new(FieldDescriptor::PrimeField(p))?;
            let v: BigInt = v.trim().parse().map_err(|_| Error::Parse(format!("bad residue in '{s}'")))?;
            return Ok(field.from_bigint(&v));
        }
        if let Some(open) = s.rfind("(zeta_") {
            let n: u32 = s[open + 6..]
                .trim_end_matches(')')
                .parse()
                .map_err(|_| Error::Parse(format!("bad cyclotomic order in '{s}'")))?;
            let field = Field::new(FieldDescriptor::Cyclotomic(n))?;
            let coeffs = parse_cyclotomic_terms(&s[..open])?;
            return field.cyclotomic_element(coeffs);
        }
        Ok(Scalar::Rational(parse_rational(s)?))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `(dim Ker, dim Coker)` of multiplication by `m` on the one-dimensional space `k`.
pub fn ker_coker_dim_of_mult(field: FieldDescriptor, m: u64) -> (usize, usize) {
    match field {
        FieldDescriptor::PrimeField(p) if m % p == 0 => (1, 1),
        _ => (0, 0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fields() -> Vec<Field> {
        vec![
            Field::rationals(),
            Field::new(FieldDescriptor::PrimeField(7)).unwrap(),
            Field::new(FieldDescriptor::Cyclotomic(5)).unwrap(),
            Field::new(FieldDescriptor::Cyclotomic(12)).unwrap(),
        ]
    }

    fn arb_scalar(field: &Field, seed: &[i64]) -> Scalar {
        match field.descriptor() {
            FieldDescriptor::Cyclotomic(_) => field
                .cyclotomic_element(
                    seed.chunks(2)
                        .map(|c| BigRational::new(c[0].into(), (c[1].abs() + 1).into()))
                        .collect(),
                )
                .unwrap(),
            _ => field
                .from_rational(&BigRational::new(seed[0].into(), (seed[1].abs() % 6 * 7 + 1).into()))
                .unwrap(),
        }
    }

    #[test]
    fn ker_coker_examples() {
        assert_eq!(ker_coker_dim_of_mult(FieldDescriptor::Rationals, 3), (0, 0));
        assert_eq!(ker_coker_dim_of_mult(FieldDescriptor::PrimeField(2), 2), (1, 1));
        assert_eq!(ker_coker_dim_of_mult(FieldDescriptor::PrimeField(3), 2), (0, 0));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(Field::new(FieldDescriptor::PrimeField(9)).err(), Some(Error::NotPrime(9)));
        assert!(is_prime(2) && is_prime(1_000_000_007) && !is_prime(1));
    }

    #[test]
    fn zeta_is_primitive() {
        for n in 1..=12u32 {
            let f = Field::new(FieldDescriptor::Cyclotomic(n)).unwrap();
            let z = f.zeta().unwrap();
            assert!(z.pow(n as u64).is_one(), "ζ^{n} = 1");
            for d in cyclotomic::divisors(n as usize) {
                if d < n as usize {
                    assert!(!z.pow(d as u64).is_one(), "ζ^{d} ≠ 1 for n = {n}");
                }
            }
        }
    }

    #[test]
    fn display_and_parse() {
        let f6 = Field::new(FieldDescriptor::Cyclotomic(6)).unwrap();
        let z = f6.zeta().unwrap();
        // ζ₆² = ζ₆ − 1
        assert_eq!(z.pow(2).to_string(), "z - 1 (zeta_6)");
        let v: Scalar = "1 - z + z^2 (zeta_6)".parse().unwrap();
        assert!(v.is_zero());
        let x: Scalar = "3/4".parse().unwrap();
        assert_eq!(x.to_string(), "3/4");
        let y: Scalar = "2 mod 5".parse().unwrap();
        assert_eq!(y.to_string(), "2 mod 5");
        assert_eq!(serde_json::to_string(&y).unwrap(), "\"2 mod 5\"");
        let back: Scalar = serde_json::from_str("\"-1/2*z^3 + 2 (zeta_5)\"").unwrap();
        assert_eq!(back.to_string(), "-1/2*z^3 + 2 (zeta_5)");
    }

    #[test]
    fn from_rational_rejects_bad_denominator() {
        let f = Field::new(FieldDescriptor::PrimeField(3)).unwrap();
        assert!(f.from_rational(&BigRational::new(1.into(), 3.into())).is_err());
        assert_eq!(f.from_rational(&BigRational::new(1.into(), 2.into())).unwrap(), f.from_i64(2));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(250))]

        #[test]
        fn field_axioms(a in proptest::collection::vec(-20i64..20, 8),
                        b in proptest::collection::vec(-20i64..20, 8),
                        c in proptest::collection::vec(-20i64..20, 8)) {
            for f in fields() {
                let (x, y, w) = (arb_scalar(&f, &a), arb_scalar(&f, &b), arb_scalar(&f, &c));
                prop_assert_eq!(&(&x + &y) + &w, &x + &(&y + &w));
                prop_assert_eq!(&x * &(&y + &w), &(&x * &y) + &(&x * &w));
                prop_assert_eq!(&(&x * &y) * &w, &x * &(&y * &w));
                prop_assert_eq!(&x * &y, &y * &x);
                prop_assert!((&x - &x).is_zero());
                if let Some(inv) = x.inv() {
                    prop_assert!((&x * &inv).is_one());
                } else {
                    prop_assert!(x.is_zero());
                }
            }
        }

        #[test]
        fn display_roundtrip(a in proptest::collection::vec(-20i64..20, 8)) {
            for f in fields() {
                let x = arb_scalar(&f, &a);
                let back: Scalar = x.to_string().parse().unwrap();
                prop_assert_eq!(back, x);
            }
        }
    }
}
