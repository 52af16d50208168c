//! Exact integer polynomials and the two hypergraph invariants.

mod bivariate;
mod invariants;
pub mod tutte;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use bivariate::IntPoly2;
pub use invariants::{
    exterior_from_set, exterior_polynomial, interior_from_set, interior_polynomial, Invariants,
};

/// A univariate polynomial with exact integer coefficients, stored densely
/// by exponent. Canonical form has no trailing zeros; zero is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::monomial(1, 0)
    }

    pub fn monomial<C: Into<BigInt>>(c: C, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c.into();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs<C: Into<BigInt>>(coeffs: Vec<C>) -> Self {
        let mut p = IntPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero above the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Result<usize> {
        self.coeffs.len().checked_sub(1).ok_or(Error::ZeroPolynomial)
    }

    /// Exponents with non-zero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Support is a gap-free integer interval. The zero polynomial is not
    /// interpolating.
    pub fn is_interpolating(&self) -> bool {
        first_gap(self).is_none() && !self.is_zero()
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        (0..k).fold(IntPoly::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// ASCII rendering in ascending exponents, e.g. `1 + 2x + x^2`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&k.to_string());
                }
            }
        }
        out
    }
}

/// Smallest exponent strictly inside the support's span that has a zero
/// coefficient.
pub fn first_gap(p: &IntPoly) -> Option<usize> {
    let support = p.support();
    let (&lo, &hi) = (support.first()?, support.last()?);
    (lo..=hi).find(|&k| p.coeffs[k].is_zero())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Add for IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let numbers: Vec<serde_json::Number> = self
            .coeffs
            .iter()
            .map(|c| serde_json::Number::from_str(&c.to_string()).expect("integers are JSON numbers"))
            .collect();
        numbers.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let numbers = Vec::<serde_json::Number>::deserialize(d)?;
        let coeffs = numbers
            .iter()
            .map(|n| {
                BigInt::from_str(&n.to_string())
                    .map_err(|_| serde::de::Error::custom(format!("coefficient {n} is not an integer")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

/// Exact binomial coefficient `C(n, k)` for `n ≥ 0`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(cs.to_vec())
    }

    #[test]
    fn canonical_form_trims() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert!(matches!(IntPoly::zero().degree(), Err(Error::ZeroPolynomial)));
        assert_eq!(p(&[1, 2, 0]).degree().unwrap(), 1);
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[1, 1, 1]).to_string(), "1 + x + x^2");
        assert_eq!(p(&[1, 2]).render("y"), "1 + 2y");
        assert_eq!(p(&[0, -1, 0, 3]).to_string(), "-x + 3x^3");
        assert_eq!(p(&[1, -2]).to_string(), "1 - 2x");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[-1]).to_string(), "-1");
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        assert_eq!(a.pow(2), p(&[1, 2, 1]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(a.shift(2), p(&[0, 0, 1, 1]));
        assert_eq!(a.scale(&BigInt::from(-3)), p(&[-3, -3]));
        assert_eq!(p(&[1, 2, 1]).eval(&BigInt::from(2)), BigInt::from(9));
    }

    #[test]
    fn interpolation() {
        assert!(p(&[1, 1, 1]).is_interpolating());
        assert!(!p(&[1, 0, 1]).is_interpolating());
        assert_eq!(first_gap(&p(&[1, 0, 1])), Some(1));
        assert!(p(&[0, 2, 3]).is_interpolating());
        assert!(!IntPoly::zero().is_interpolating());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn json_handles_big_coefficients() {
        let big = BigInt::from_str("123456789012345678901234567890").unwrap();
        let q = IntPoly::from_coeffs(vec![BigInt::one(), big]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, "[1,123456789012345678901234567890]");
        assert_eq!(serde_json::from_str::<IntPoly>(&s).unwrap(), q);
        assert!(serde_json::from_str::<IntPoly>("[1.5]").is_err());
    }

    proptest! {
        #[test]
        fn json_round_trip(cs in prop::collection::vec(-1000i64..1000, 0..8)) {
            let q = p(&cs);
            let back: IntPoly = serde_json::from_str(&serde_json::to_string(&q).unwrap()).unwrap();
            prop_assert_eq!(back, q);
        }

        #[test]
        fn multiplication_matches_evaluation(
            a in prop::collection::vec(-20i64..20, 0..5),
            b in prop::collection::vec(-20i64..20, 0..5),
            x in -5i64..5,
        ) {
            let (pa, pb) = (p(&a), p(&b));
            let x = BigInt::from(x);
            prop_assert_eq!((&pa * &pb).eval(&x), pa.eval(&x) * pb.eval(&x));
            prop_assert_eq!((&pa + &pb).eval(&x), pa.eval(&x) + pb.eval(&x));
        }
    }
}
