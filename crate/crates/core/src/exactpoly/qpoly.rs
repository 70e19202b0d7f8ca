use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::xpoly::{forward_owned, write_terms, XPoly};
use crate::error::{Error, Result};

/// Integer polynomial in `q`; `coeffs[m]` is the coefficient of `q^m`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    pub fn q_pow(power: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = BigInt::one();
        QPoly { coeffs }
    }

    /// `1 + q`.
    pub fn one_plus_q() -> Self {
        Self::from_ints(&[1, 1])
    }

    /// Product of integer polynomials given by coefficient lists, each raised to a power.
    pub fn product(factors: &[(&[i64], usize)]) -> Self {
        let mut acc = QPoly::one();
        for (coeffs, power) in factors {
            let f = QPoly::from_ints(coeffs);
            for _ in 0..*power {
                acc = &acc * &f;
            }
        }
        acc
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> BigInt {
        self.coeffs.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn mul_q_pow(&self, power: usize) -> Self {
        if self.is_zero() || power == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); power];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Exact division in `Z[q]`; fails when the quotient is not an integer polynomial.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly> {
        let lead = divisor
            .leading()
            .ok_or_else(|| Error::Usage("division by the zero q-polynomial".into()))?;
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Err(Error::NotDivisible { remainder: self.to_string() });
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let (c, r) = rem[k + dd].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible { remainder: QPoly::new(rem).to_string() });
            }
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible { remainder: QPoly::new(rem).to_string() });
        }
        Ok(QPoly::new(quot))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// The same polynomial viewed over the rationals.
    pub fn to_xpoly(&self) -> XPoly {
        XPoly::from_bigints(self.coeffs.iter().cloned())
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl Zero for QPoly {
    fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for QPoly {
    fn one() -> Self {
        QPoly::constant(1)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().enumerate(), "q", |c| c.to_string())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

forward_owned!(QPoly, Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::rat;

    #[test]
    fn exact_division_over_integers() {
        let t = QPoly::from_ints(&[0, 1, 1]); // q + q^2
        assert_eq!(t.exact_div(&QPoly::one_plus_q()).unwrap(), QPoly::q_pow(1));
        assert!(QPoly::from_ints(&[1, 2]).exact_div(&QPoly::from_ints(&[0, 2])).is_err());
        assert!(QPoly::from_ints(&[1, 0, 1]).exact_div(&QPoly::one_plus_q()).is_err());
        assert!(QPoly::from_ints(&[3]).exact_div(&QPoly::from_ints(&[2])).is_err());
    }

    #[test]
    fn product_of_factors() {
        // (q+1)^2 (q^2-1)
        let p = QPoly::product(&[(&[1, 1], 2), (&[-1, 0, 1], 1)]);
        assert_eq!(p, QPoly::from_ints(&[-1, -2, 0, 2, 1]));
        assert_eq!(p.eval(&rat(1, 1)), rat(0, 1));
    }

    #[test]
    fn display() {
        assert_eq!(QPoly::from_ints(&[1, 1]).to_string(), "1 + q");
        assert_eq!(QPoly::from_ints(&[0, -1, 3]).to_string(), "-q + 3q^2");
    }
}
