use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::qpoly::QPoly;
use super::rational::Rational;
use super::xpoly::{forward_owned, write_terms, XPoly};
use crate::error::{Error, Result};

/// Polynomial in `x` with coefficients in `Z[q]`; `coeffs[k]` multiplies `x^k`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QXPoly {
    coeffs: Vec<QPoly>,
}

impl QXPoly {
    pub fn new(mut coeffs: Vec<QPoly>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QXPoly { coeffs }
    }

    /// Builds from nested integer lists: outer index is the power of `x`, inner the power of `q`.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        Self::new(rows.iter().map(|r| QPoly::from_ints(r)).collect())
    }

    pub fn zero() -> Self {
        QXPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(QPoly::one())
    }

    pub fn x() -> Self {
        Self::monomial(QPoly::one(), 1)
    }

    pub fn constant(c: QPoly) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: QPoly, power: usize) -> Self {
        let mut coeffs = vec![QPoly::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&QPoly> {
        self.coeffs.last()
    }

    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Specializes `q := q0` in every coefficient.
    pub fn eval_q(&self, q0: &Rational) -> XPoly {
        XPoly::new(self.coeffs.iter().map(|c| c.eval(q0)).collect())
    }

    pub fn scale_q(&self, factor: &QPoly) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn mul_x_pow(&self, power: usize) -> Self {
        if self.is_zero() || power == 0 {
            return self.clone();
        }
        let mut coeffs = vec![QPoly::zero(); power];
        coeffs.extend(self.coeffs.iter().cloned());
        QXPoly { coeffs }
    }

    pub fn div_x_pow(&self, power: usize) -> Result<Self> {
        if self.coeffs.iter().take(power).any(|c| !c.is_zero()) && !self.is_zero() {
            return Err(Error::NotDivisible { remainder: self.to_string() });
        }
        Ok(QXPoly { coeffs: self.coeffs.iter().skip(power).cloned().collect() })
    }

    /// `p(x^k; q)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![QPoly::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        QXPoly { coeffs }
    }

    /// Exact division in `Z[q][x]`. The error carries the remainder reached when the
    /// long division got stuck.
    pub fn exact_div(&self, divisor: &QXPoly) -> Result<QXPoly> {
        let lead = divisor
            .leading()
            .ok_or_else(|| Error::Usage("division by the zero polynomial".into()))?;
        if self.is_zero() {
            return Ok(QXPoly::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Err(Error::NotDivisible { remainder: self.to_string() });
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![QPoly::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            if rem[k + dd].is_zero() {
                continue;
            }
            let c = rem[k + dd].exact_div(lead).map_err(|_| Error::NotDivisible {
                remainder: QXPoly::new(rem.clone()).to_string(),
            })?;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * d);
            }
            quot[k] = c;
        }
        let rem = QXPoly::new(rem);
        if !rem.is_zero() {
            return Err(Error::NotDivisible { remainder: rem.to_string() });
        }
        Ok(QXPoly::new(quot))
    }

    /// Divides every coefficient by the same q-polynomial.
    pub fn exact_div_q(&self, divisor: &QPoly) -> Result<QXPoly> {
        self.exact_div(&QXPoly::constant(divisor.clone()))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(QPoly::is_nonnegative)
    }
}

impl fmt::Display for QXPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().enumerate(), "x", |c| {
            let text = c.to_string();
            if c.coeffs().iter().filter(|v| !v.is_zero()).count() > 1 {
                format!("({text})")
            } else {
                text
            }
        })
    }
}

impl fmt::Debug for QXPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QXPoly({self})")
    }
}

impl Add<&QXPoly> for &QXPoly {
    type Output = QXPoly;
    fn add(self, rhs: &QXPoly) -> QXPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QXPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub<&QXPoly> for &QXPoly {
    type Output = QXPoly;
    fn sub(self, rhs: &QXPoly) -> QXPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QXPoly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul<&QXPoly> for &QXPoly {
    type Output = QXPoly;
    fn mul(self, rhs: &QXPoly) -> QXPoly {
        if self.is_zero() || rhs.is_zero() {
            return QXPoly::zero();
        }
        let mut out = vec![QPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        QXPoly::new(out)
    }
}

impl Neg for &QXPoly {
    type Output = QXPoly;
    fn neg(self) -> QXPoly {
        QXPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

forward_owned!(QXPoly, Add add, Sub sub, Mul mul);

impl std::iter::Sum for QXPoly {
    fn sum<I: Iterator<Item = QXPoly>>(iter: I) -> QXPoly {
        iter.fold(QXPoly::zero(), |acc, p| &acc + &p)
    }
}

impl<'a> std::iter::Sum<&'a QXPoly> for QXPoly {
    fn sum<I: Iterator<Item = &'a QXPoly>>(iter: I) -> QXPoly {
        iter.fold(QXPoly::zero(), |acc, p| &acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::{int, rat};

    #[test]
    fn mul_hand_expansion() {
        // (1 + x)(1 + qx) = 1 + (1+q)x + qx^2
        let a = QXPoly::from_rows(&[&[1], &[1]]);
        let b = QXPoly::from_rows(&[&[1], &[0, 1]]);
        assert_eq!(&a * &b, QXPoly::from_rows(&[&[1], &[1, 1], &[0, 1]]));
    }

    #[test]
    fn divide_by_one_plus_q() {
        // T_2(x;q) = (1+q)(1+x)(1+qx)
        let core = QXPoly::from_rows(&[&[1], &[1, 1], &[0, 1]]);
        let t2 = core.scale_q(&QPoly::one_plus_q());
        assert_eq!(t2.exact_div_q(&QPoly::one_plus_q()).unwrap(), core);
        assert!(core.exact_div_q(&QPoly::one_plus_q()).is_err());
    }

    #[test]
    fn true_polynomial_division() {
        let a = QXPoly::from_rows(&[&[1], &[1, 1], &[0, 1]]);
        let b = QXPoly::from_rows(&[&[1], &[0, 1]]);
        assert_eq!(a.exact_div(&b).unwrap(), QXPoly::from_rows(&[&[1], &[1]]));
    }

    #[test]
    fn specialization() {
        let t20 = QXPoly::from_rows(&[&[1, 1]]);
        assert_eq!(t20.eval_q(&int(1)), XPoly::from_ints(&[2]));
        let p = QXPoly::from_rows(&[&[1], &[1, 1], &[0, 1]]);
        assert_eq!(p.eval_q(&rat(1, 2)), XPoly::new(vec![int(1), rat(3, 2), rat(1, 2)]));
    }

    #[test]
    fn display() {
        let p = QXPoly::from_rows(&[&[1, 1], &[1, 2, 1], &[0, 1, 1]]);
        assert_eq!(p.to_string(), "(1 + q) + (1 + 2q + q^2)x + (q + q^2)x^2");
        assert_eq!(QXPoly::from_rows(&[&[], &[0, 1]]).to_string(), "qx");
    }
}
