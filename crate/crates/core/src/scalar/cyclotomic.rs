//! Cyclotomic polynomials and dense polynomial helpers over ℚ.
//!
//! `Φₙ` is obtained by exact division of `Xⁿ − 1` by `Φ_d` for every proper
//! divisor `d` of `n`. Coefficients are stored in ascending degree order.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial with integer coefficients, ascending degree order, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `Xⁿ − 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::from(-1);
        c[n] = BigInt::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Exact division by a monic divisor. Returns `None` if the remainder is nonzero.
    pub fn div_exact_monic(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        assert!(divisor.is_monic(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if rem.iter().all(Zero::is_zero) { Some(Self::new(Vec::new())) } else { None };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k].clone();
            if c.is_zero() {
                continue;
            }
            quot[k - dd] = c.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] -= &c * d;
            }
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(quot))
        } else {
            None
        }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())), "X")
    }
}

/// Writes `c₀ + c₁·v + …` highest degree first, e.g. `X^2 - X + 1`.
pub(crate) fn write_poly<I>(f: &mut fmt::Formatter<'_>, coeffs: I, var: &str) -> fmt::Result
where
    I: DoubleEndedIterator<Item = BigRational> + ExactSizeIterator,
{
    let terms: Vec<(usize, BigRational)> = coeffs
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (k, (deg, c)) in terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        let mono = match deg {
            0 => String::new(),
            1 => var.to_string(),
            d => format!("{var}^{d}"),
        };
        if mono.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{abs}*{mono}")?;
        }
    }
    Ok(())
}

pub(crate) fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

#[cfg(test)]
fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count()
}

/// The `n`-th cyclotomic polynomial `Φₙ`.
///
/// # Panics
/// Panics if `n == 0`.
pub fn cyclotomic_polynomial(n: usize) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic_polynomial: n must be at least 1");
    let mut result = IntPolynomial::x_pow_minus_one(n);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d);
        result = result
            .div_exact_monic(&phi_d)
            .expect("Φ_d divides Xⁿ − 1 for d | n");
    }
    result
}

/// Dense polynomial over ℚ used for inversion in ℚ[X]/Φₙ.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct RatPoly(pub Vec<BigRational>);

impl RatPoly {
    pub fn trimmed(mut v: Vec<BigRational>) -> Self {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        RatPoly(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg(&self) -> usize {
        self.0.len() - 1
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let z = BigRational::zero();
        Self::trimmed(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) - other.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatPoly(Vec::new());
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::trimmed(out)
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        let dd = d.deg();
        let lead = d.0[dd].clone();
        if rem.len() <= dd {
            return (RatPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let c = &rem[k] / &lead;
            for (j, dc) in d.0.iter().enumerate() {
                let t = &c * dc;
                rem[k - dd + j] -= t;
            }
            quot[k - dd] = c;
        }
        (Self::trimmed(quot), Self::trimmed(rem))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), IntPolynomial::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), IntPolynomial::from_i64(&[1, 1]));
        // X⁶−1 = Φ₁Φ₂Φ₃Φ₆ and Φ₁Φ₂Φ₃ = (X³−1)(X+1)
        let x6 = IntPolynomial::x_pow_minus_one(6);
        let partial = IntPolynomial::x_pow_minus_one(3).mul(&IntPolynomial::from_i64(&[1, 1]));
        let oracle = x6.div_exact_monic(&partial).unwrap();
        assert_eq!(oracle, IntPolynomial::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(6), oracle);
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        for n in 1..=30 {
            let prod = divisors(n)
                .into_iter()
                .fold(IntPolynomial::one(), |acc, d| acc.mul(&cyclotomic_polynomial(d)));
            assert_eq!(prod, IntPolynomial::x_pow_minus_one(n), "n = {n}");
            assert_eq!(cyclotomic_polynomial(n).degree(), Some(euler_phi(n)));
        }
    }

    #[test]
    fn display() {
        assert_eq!(cyclotomic_polynomial(6).to_string(), "X^2 - X + 1");
        assert_eq!(cyclotomic_polynomial(1).to_string(), "X - 1");
    }
}
