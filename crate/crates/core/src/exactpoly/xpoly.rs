use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over the rationals; `coeffs[k]` is the coefficient of `x^k`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the empty vector
/// and [`XPoly::degree`] reports `None` for it.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct XPoly {
    coeffs: Vec<Rational>,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_bigints(coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    /// `(x - r_1)(x - r_2)...`, handy for building polynomials with known roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            acc * XPoly::new(vec![-r.clone(), Rational::one()])
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` encodes the degree of the zero polynomial (minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Multiplicity of the root at the origin; `None` for the zero polynomial.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        XPoly { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    pub fn mul_x_pow(&self, power: usize) -> Self {
        if self.is_zero() || power == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); power];
        coeffs.extend(self.coeffs.iter().cloned());
        XPoly { coeffs }
    }

    /// Divides by `x^power`; the low coefficients must vanish.
    pub fn div_x_pow(&self, power: usize) -> Result<Self> {
        if self.coeffs.iter().take(power).any(|c| !c.is_zero()) && !self.is_zero() {
            return Err(Error::NotDivisible { remainder: format!("{self}") });
        }
        Ok(XPoly { coeffs: self.coeffs.iter().skip(power).cloned().collect() })
    }

    /// `p(x^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        XPoly { coeffs }
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        XPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Euclidean division `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &XPoly) -> Result<(XPoly, XPoly)> {
        let lead = divisor
            .leading()
            .ok_or_else(|| Error::Usage("division by the zero polynomial".into()))?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((XPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        Ok((XPoly::new(quot), XPoly::new(rem)))
    }

    /// Quotient of an exact division; a nonzero remainder is reported as an error.
    pub fn exact_div(&self, divisor: &XPoly) -> Result<XPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible { remainder: r.to_string() })
        }
    }

    pub fn divides(&self, other: &XPoly) -> bool {
        !self.is_zero() && other.div_rem(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) => self.scale(&lead.recip()),
            None => Self::zero(),
        }
    }

    /// Positive rational multiple with coprime integer coefficients and positive leading term.
    pub fn primitive(&self) -> Self {
        let Some(lead) = self.leading() else {
            return Self::zero();
        };
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * &den_lcm).to_integer()).collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if lead.is_negative() {
            content = -content;
        }
        XPoly::from_bigints(ints.into_iter().map(|c| c / &content))
    }

    /// Same as [`XPoly::primitive`] but keeps the sign of the leading coefficient.
    pub(crate) fn positive_primitive(&self) -> Self {
        match self.leading() {
            Some(lead) if lead.is_negative() => -self.primitive(),
            _ => self.primitive(),
        }
    }

    /// Monic greatest common divisor. Both arguments zero is a usage error.
    pub fn gcd(&self, other: &XPoly) -> Result<XPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::Usage("gcd of two zero polynomials".into()));
        }
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r.primitive();
        }
        Ok(a.monic())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().enumerate(), "x", |c| {
            let text = format_rational(c);
            if c.is_integer() {
                text
            } else if let Some(magnitude) = text.strip_prefix('-') {
                format!("-({magnitude})")
            } else {
                format!("({text})")
            }
        })
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({self})")
    }
}

/// Shared ascending-order term printer. `render` returns the magnitude of a coefficient;
/// a leading `-` is turned into a subtraction sign.
pub(crate) fn write_terms<'a, C: Zero + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (usize, &'a C)>,
    var: &str,
    render: impl Fn(&C) -> String,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        if c.is_zero() {
            continue;
        }
        let mut text = render(c);
        let negative = text.starts_with('-');
        if negative {
            text.remove(0);
        }
        let body = match (k, text.as_str()) {
            (0, _) => text.clone(),
            (_, "1") => String::new(),
            _ => text.clone(),
        };
        let power = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let sep = match (first, negative) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        write!(f, "{sep}{body}{power}")?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl Add<&XPoly> for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&XPoly> for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&XPoly> for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        XPoly::new(out)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $method:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty { (&self).$method(&rhs) }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty { (&self).$method(rhs) }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty { self.$method(&rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(XPoly, Add add, Sub sub, Mul mul);

impl std::iter::Sum for XPoly {
    fn sum<I: Iterator<Item = XPoly>>(iter: I) -> XPoly {
        iter.fold(XPoly::zero(), |acc, p| &acc + &p)
    }
}

impl<'a> std::iter::Sum<&'a XPoly> for XPoly {
    fn sum<I: Iterator<Item = &'a XPoly>>(iter: I) -> XPoly {
        iter.fold(XPoly::zero(), |acc, p| &acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::{int, rat};

    fn p(c: &[i64]) -> XPoly {
        XPoly::from_ints(c)
    }

    #[test]
    fn add_scale_and_degree() {
        assert_eq!(&p(&[1, 1]) + &p(&[0, 1]), p(&[1, 2]));
        assert_eq!(p(&[0, 2]).scale(&rat(1, 2)), XPoly::x());
        assert_eq!(XPoly::zero().degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), XPoly::zero());
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[-1, 0, 1]).exact_div(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        let err = p(&[1, 0, 1]).exact_div(&p(&[1, 1])).unwrap_err();
        assert_eq!(err, Error::NotDivisible { remainder: "2".into() });
        assert!(p(&[1]).exact_div(&XPoly::zero()).is_err());
    }

    #[test]
    fn derivative_power_rule() {
        assert_eq!(p(&[2, 3, 1]).derivative(), p(&[3, 2]));
        assert_eq!(p(&[5]).derivative(), XPoly::zero());
        // K_{4,0}
        assert_eq!(p(&[2, 32, 50, 12]).derivative(), p(&[32, 100, 36]));
    }

    #[test]
    fn gcd_cases() {
        let a = p(&[1, 2, 1]);
        let b = p(&[2, 3, 1]);
        assert_eq!(a.gcd(&b).unwrap(), p(&[1, 1]));
        assert_eq!(p(&[1, 1]).gcd(&p(&[2, 1])).unwrap(), XPoly::one());
        let k43 = p(&[0, 12, 50, 32, 2]);
        assert_eq!(k43.gcd(&k43).unwrap(), k43.monic());
        assert_eq!(XPoly::zero().gcd(&p(&[0, 2])).unwrap(), XPoly::x());
        assert!(XPoly::zero().gcd(&XPoly::zero()).is_err());
    }

    #[test]
    fn display_ascending() {
        assert_eq!(p(&[0, 4, 16, 4]).to_string(), "4x + 16x^2 + 4x^3");
        assert_eq!(p(&[1, -1]).to_string(), "1 - x");
        assert_eq!(p(&[-2, 0, 1]).to_string(), "-2 + x^2");
        assert_eq!(XPoly::zero().to_string(), "0");
        assert_eq!(XPoly::new(vec![rat(1, 2), int(0), rat(-3, 4)]).to_string(), "(1/2) - (3/4)x^2");
    }

    #[test]
    fn substitution_and_reflection() {
        assert_eq!(p(&[1, 2, 3]).substitute_power(2), p(&[1, 0, 2, 0, 3]));
        assert_eq!(p(&[1, 2, 3]).reflect(), p(&[1, -2, 3]));
        assert_eq!(p(&[0, 0, 3, 1]).lowest_degree(), Some(2));
        assert_eq!(p(&[0, 0, 3, 1]).div_x_pow(2).unwrap(), p(&[3, 1]));
        assert!(p(&[1, 0, 3]).div_x_pow(1).is_err());
    }

    #[test]
    fn primitive_part() {
        let q = XPoly::new(vec![rat(1, 2), rat(3, 4), rat(-1, 4)]);
        assert_eq!(q.primitive(), p(&[-2, -3, 1]));
        assert_eq!(q.positive_primitive(), p(&[2, 3, -1]));
    }
}
