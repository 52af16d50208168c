use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A sparse bivariate polynomial `Σ c_{ij} x^i y^j` with exact integer
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly2 {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl IntPoly2 {
    pub fn zero() -> Self {
        IntPoly2::default()
    }

    pub fn one() -> Self {
        IntPoly2::monomial(1, 0, 0)
    }

    pub fn x() -> Self {
        IntPoly2::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        IntPoly2::monomial(1, 0, 1)
    }

    pub fn monomial<C: Into<BigInt>>(c: C, i: usize, j: usize) -> Self {
        let mut p = IntPoly2::zero();
        p.add_term(i, j, c.into());
        p
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Non-zero terms in ascending `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    /// Multiplication by `x^a y^b`.
    pub fn shift(&self, a: usize, b: usize) -> IntPoly2 {
        IntPoly2 {
            terms: self.terms.iter().map(|(&(i, j), c)| ((i + a, j + b), c.clone())).collect(),
        }
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * num_traits::pow(x.clone(), i) * num_traits::pow(y.clone(), j))
            .sum()
    }
}

impl AddAssign<&IntPoly2> for IntPoly2 {
    fn add_assign(&mut self, rhs: &IntPoly2) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, c.clone());
        }
    }
}

impl Add for &IntPoly2 {
    type Output = IntPoly2;

    fn add(self, rhs: &IntPoly2) -> IntPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul for &IntPoly2 {
    type Output = IntPoly2;

    fn mul(self, rhs: &IntPoly2) -> IntPoly2 {
        let mut out = IntPoly2::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
}

impl fmt::Display for IntPoly2 {
    /// Ascending in `(i, j)`, e.g. `y + x + x^2` for a triangle.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            let negative = c.is_negative();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            if (i == 0 && j == 0) || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => f.write_str(var)?,
                    _ => write!(f, "{var}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let p = &(&IntPoly2::x() * &IntPoly2::x()) + &(&IntPoly2::x() + &IntPoly2::y());
        assert_eq!(p.to_string(), "y + x + x^2");
        assert_eq!(p.coeff(2, 0), BigInt::from(2) - 1);
        let q = p.shift(0, 1);
        assert_eq!(q.to_string(), "y^2 + xy + x^2y");
        let mut r = p.clone();
        r += &IntPoly2::monomial(-1, 0, 1);
        assert_eq!(r.to_string(), "x + x^2");
        assert_eq!(p.eval(&BigInt::from(1), &BigInt::from(1)), BigInt::from(3));
    }
}
