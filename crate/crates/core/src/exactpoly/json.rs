//! Wire formats. Big integers travel as decimal strings so no precision is lost.
//!
//! * `XPoly`: `{"var":"x","coeffs":[["num","den"], ...]}`
//! * `QXPoly`: `{"vars":["x","q"],"coeffs":[["c_q0","c_q1", ...], ...]}`

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::qpoly::QPoly;
use super::qxpoly::QXPoly;
use super::rational::Rational;
use super::xpoly::XPoly;

pub(crate) fn rational_to_pair(r: &Rational) -> [String; 2] {
    [r.numer().to_string(), r.denom().to_string()]
}

pub(crate) fn pair_to_rational(pair: &[String; 2]) -> Result<Rational, String> {
    let num: BigInt = pair[0].parse().map_err(|_| format!("bad integer {:?}", pair[0]))?;
    let den: BigInt = pair[1].parse().map_err(|_| format!("bad integer {:?}", pair[1]))?;
    if den.is_zero() {
        return Err("zero denominator".into());
    }
    let value = Rational::new(num, den);
    // only canonical pairs round-trip bit-exactly
    if rational_to_pair(&value) != *pair {
        return Err(format!("rational {}/{} is not in lowest terms", pair[0], pair[1]));
    }
    Ok(value)
}

pub(crate) fn qpoly_to_strings(p: &QPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

pub(crate) fn strings_to_qpoly(items: &[String]) -> Result<QPoly, String> {
    let coeffs = items
        .iter()
        .map(|s| s.parse::<BigInt>().map_err(|_| format!("bad integer {s:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.last().is_some_and(Zero::is_zero) {
        return Err("q-polynomial has trailing zero coefficients".into());
    }
    Ok(QPoly::new(coeffs))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct XPolyWire {
    var: String,
    coeffs: Vec<[String; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QXPolyWire {
    vars: [String; 2],
    coeffs: Vec<Vec<String>>,
}

impl Serialize for XPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        XPolyWire { var: "x".into(), coeffs: self.coeffs().iter().map(rational_to_pair).collect() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for XPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = XPolyWire::deserialize(deserializer)?;
        if wire.var != "x" {
            return Err(D::Error::custom(format!("expected var \"x\", got {:?}", wire.var)));
        }
        let coeffs = wire
            .coeffs
            .iter()
            .map(pair_to_rational)
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        if coeffs.last().is_some_and(Zero::is_zero) {
            return Err(D::Error::custom("polynomial has trailing zero coefficients"));
        }
        Ok(XPoly::new(coeffs))
    }
}

impl Serialize for QXPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        QXPolyWire {
            vars: ["x".into(), "q".into()],
            coeffs: self.coeffs().iter().map(qpoly_to_strings).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QXPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = QXPolyWire::deserialize(deserializer)?;
        if wire.vars != ["x", "q"] {
            return Err(D::Error::custom("expected vars [\"x\",\"q\"]"));
        }
        let coeffs = wire
            .coeffs
            .iter()
            .map(|row| strings_to_qpoly(row))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        if coeffs.last().is_some_and(Zero::is_zero) {
            return Err(D::Error::custom("polynomial has trailing zero coefficients"));
        }
        Ok(QXPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::rat;

    #[test]
    fn xpoly_wire_format() {
        let p = XPoly::new(vec![rat(-1, 2), Rational::zero(), rat(3, 1)]);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"var":"x","coeffs":[["-1","2"],["0","1"],["3","1"]]}"#);
        let back: XPoly = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn qxpoly_wire_format() {
        let p = QXPoly::from_rows(&[&[1, 1], &[], &[0, 1, 1]]);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"vars":["x","q"],"coeffs":[["1","1"],[],["0","1","1"]]}"#);
        let back: QXPoly = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rejects_non_canonical_input() {
        assert!(serde_json::from_str::<XPoly>(r#"{"var":"x","coeffs":[["2","4"]]}"#).is_err());
        assert!(serde_json::from_str::<XPoly>(r#"{"var":"x","coeffs":[["1","1"],["0","1"]]}"#).is_err());
        assert!(serde_json::from_str::<XPoly>(r#"{"var":"y","coeffs":[]}"#).is_err());
        assert!(serde_json::from_str::<QXPoly>(r#"{"vars":["x","q"],"coeffs":[["1","0"]]}"#).is_err());
    }
}
