use std::fmt;

use super::qxpoly::QXPoly;
use super::rational::Rational;
use super::xpoly::XPoly;
use crate::error::{Error, Result};

/// Either kind of polynomial, as produced by family lookups keyed by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyPoly {
    X(XPoly),
    QX(QXPoly),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Right-hand operand of [`arith`]: another polynomial or a rational scalar.
#[derive(Debug, Clone)]
pub enum Operand {
    Poly(AnyPoly),
    Scalar(Rational),
}

/// Ring operation on dynamically typed operands. Mixing kinds, or scaling a
/// `QXPoly` by a non-integer, is a usage error.
pub fn arith(op: ArithOp, a: &AnyPoly, b: &Operand) -> Result<AnyPoly> {
    match (a, b) {
        (AnyPoly::X(a), Operand::Poly(AnyPoly::X(b))) => Ok(AnyPoly::X(match op {
            ArithOp::Add => a + b,
            ArithOp::Sub => a - b,
            ArithOp::Mul => a * b,
        })),
        (AnyPoly::QX(a), Operand::Poly(AnyPoly::QX(b))) => Ok(AnyPoly::QX(match op {
            ArithOp::Add => a + b,
            ArithOp::Sub => a - b,
            ArithOp::Mul => a * b,
        })),
        (AnyPoly::X(a), Operand::Scalar(c)) if op == ArithOp::Mul => Ok(AnyPoly::X(a.scale(c))),
        (AnyPoly::QX(a), Operand::Scalar(c)) if op == ArithOp::Mul => {
            if !c.is_integer() {
                return Err(Error::Usage("QXPoly coefficients are integral".into()));
            }
            Ok(AnyPoly::QX(a.scale_q(&super::QPoly::constant(c.to_integer()))))
        }
        (_, Operand::Scalar(_)) => Err(Error::Usage("scalars only support scaling".into())),
        _ => Err(Error::Usage("operands are of different polynomial kinds".into())),
    }
}

impl AnyPoly {
    pub fn exact_div(&self, divisor: &AnyPoly) -> Result<AnyPoly> {
        match (self, divisor) {
            (AnyPoly::X(a), AnyPoly::X(b)) => a.exact_div(b).map(AnyPoly::X),
            (AnyPoly::QX(a), AnyPoly::QX(b)) => a.exact_div(b).map(AnyPoly::QX),
            _ => Err(Error::Usage("operands are of different polynomial kinds".into())),
        }
    }

    pub fn as_x(&self) -> Option<&XPoly> {
        match self {
            AnyPoly::X(p) => Some(p),
            AnyPoly::QX(_) => None,
        }
    }

    pub fn as_qx(&self) -> Option<&QXPoly> {
        match self {
            AnyPoly::QX(p) => Some(p),
            AnyPoly::X(_) => None,
        }
    }

    /// Specializes `q`; single-variable polynomials pass through unchanged.
    pub fn eval_q(&self, q0: &Rational) -> XPoly {
        match self {
            AnyPoly::X(p) => p.clone(),
            AnyPoly::QX(p) => p.eval_q(q0),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            AnyPoly::X(p) => serde_json::to_value(p),
            AnyPoly::QX(p) => serde_json::to_value(p),
        }
        .expect("polynomial serialization is infallible")
    }
}

impl fmt::Display for AnyPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyPoly::X(p) => p.fmt(f),
            AnyPoly::QX(p) => p.fmt(f),
        }
    }
}

impl From<XPoly> for AnyPoly {
    fn from(p: XPoly) -> Self {
        AnyPoly::X(p)
    }
}

impl From<QXPoly> for AnyPoly {
    fn from(p: QXPoly) -> Self {
        AnyPoly::QX(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::rat;

    #[test]
    fn kind_mismatch_is_usage_error() {
        let a = AnyPoly::X(XPoly::x());
        let b = Operand::Poly(AnyPoly::QX(QXPoly::x()));
        assert!(matches!(arith(ArithOp::Add, &a, &b), Err(Error::Usage(_))));
    }

    #[test]
    fn add_and_scale() {
        let a = AnyPoly::X(XPoly::from_ints(&[1, 1]));
        let b = Operand::Poly(AnyPoly::X(XPoly::x()));
        assert_eq!(arith(ArithOp::Add, &a, &b).unwrap(), AnyPoly::X(XPoly::from_ints(&[1, 2])));
        let two_x = AnyPoly::X(XPoly::from_ints(&[0, 2]));
        let half = Operand::Scalar(rat(1, 2));
        assert_eq!(arith(ArithOp::Mul, &two_x, &half).unwrap(), AnyPoly::X(XPoly::x()));
    }
}
