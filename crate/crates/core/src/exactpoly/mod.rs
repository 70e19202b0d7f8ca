//! Exact polynomial arithmetic: `XPoly` over the rationals and `QXPoly` over `Z[q]`.

mod any;
mod json;
mod props;
mod qpoly;
mod qxpoly;
mod rational;
mod xpoly;

pub use any::{arith, AnyPoly, ArithOp, Operand};
pub use props::{coeff_props, coefficient_sign_changes, CoeffProps};
pub use qpoly::QPoly;
pub use qxpoly::QXPoly;
pub use rational::{format_rational, int, parse_rational, rat, to_f64, Rational};
pub use xpoly::XPoly;

pub(crate) use json::{pair_to_rational, qpoly_to_strings, rational_to_pair};
pub(crate) use rational::sign;
