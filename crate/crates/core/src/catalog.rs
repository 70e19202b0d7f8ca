//! Named families reachable from the command line.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactpoly::AnyPoly;
use crate::recurrences::{
    assemble, refined_affine_t, refined_k, refined_t, refined_tq, Assembled, AssembledPoly, KMethod,
};
use crate::weylcomb::{brute_polynomial, parse_indexed, BruteFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Refined {
    Tq,
    T,
    AffineT,
    K,
}

impl Refined {
    const ALL: [Refined; 4] = [Refined::Tq, Refined::T, Refined::AffineT, Refined::K];

    fn name(self) -> &'static str {
        match self {
            Refined::Tq => "refined_Tq",
            Refined::T => "refined_T",
            Refined::AffineT => "refined_affine_T",
            Refined::K => "refined_K",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyId {
    Assembled(Assembled),
    /// Whole refined family, or one member when an index is given.
    Refined(Refined, Option<usize>),
    /// Exhaustive enumeration; `B` and `Bq` have no recurrence and always land here.
    Brute(BruteFamily),
}

impl FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if let Some(rest) = s.strip_prefix("brute:") {
            return Ok(FamilyId::Brute(rest.parse()?));
        }
        match s {
            "B" => return Ok(FamilyId::Brute(BruteFamily::B)),
            "Bq" => return Ok(FamilyId::Brute(BruteFamily::Bq)),
            _ => {}
        }
        for r in Refined::ALL {
            if s == r.name() {
                return Ok(FamilyId::Refined(r, None));
            }
            if let Some(i) = parse_indexed(s, r.name()) {
                return Ok(FamilyId::Refined(r, Some(i?)));
            }
        }
        s.parse().map(FamilyId::Assembled).map_err(|_| Error::Usage(format!("unknown family {s:?}")))
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Assembled(a) => write!(f, "{a}"),
            FamilyId::Refined(r, None) => f.write_str(r.name()),
            FamilyId::Refined(r, Some(i)) => write!(f, "{}({i})", r.name()),
            FamilyId::Brute(b @ (BruteFamily::B | BruteFamily::Bq)) => write!(f, "{b}"),
            FamilyId::Brute(b) => write!(f, "brute:{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Computed {
    Single(AnyPoly),
    Family(Vec<AnyPoly>),
}

fn refined_members(r: Refined, n: usize) -> Result<Vec<AnyPoly>> {
    Ok(match r {
        Refined::Tq => refined_tq(n)?.polys.into_iter().map(AnyPoly::QX).collect(),
        Refined::T => refined_t(n)?.polys.into_iter().map(AnyPoly::X).collect(),
        Refined::AffineT => refined_affine_t(n)?.polys.into_iter().map(AnyPoly::X).collect(),
        Refined::K => refined_k(n, KMethod::Direct)?.polys.into_iter().map(AnyPoly::X).collect(),
    })
}

/// Evaluates `family` at rank `n`; `cap` bounds exhaustive enumerations.
pub fn compute(family: FamilyId, n: usize, cap: usize) -> Result<Computed> {
    Ok(match family {
        FamilyId::Assembled(a) => Computed::Single(match assemble(a, n)? {
            AssembledPoly::X(p) => AnyPoly::X(p),
            AssembledPoly::QX(p) => AnyPoly::QX(p),
        }),
        FamilyId::Refined(r, None) => Computed::Family(refined_members(r, n)?),
        FamilyId::Refined(r, Some(i)) => {
            let mut all = refined_members(r, n)?;
            if i >= all.len() {
                return Err(Error::Range(format!(
                    "index {i} outside 0..{} for {}",
                    all.len(),
                    r.name()
                )));
            }
            Computed::Single(all.swap_remove(i))
        }
        FamilyId::Brute(b) => Computed::Single(brute_polynomial(b, n, cap)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::XPoly;

    #[test]
    fn parse_round_trip() {
        for s in ["Tq", "tildeD", "B", "refined_K", "refined_Tq(3)", "brute:Dq", "brute:refined_tildeT(2)"] {
            let id: FamilyId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
        }
        assert!("nonsense".parse::<FamilyId>().is_err());
        assert!("refined_Tq(x)".parse::<FamilyId>().is_err());
    }

    #[test]
    fn tilde_d_three() {
        let Computed::Single(AnyPoly::X(p)) = compute("tildeD".parse().unwrap(), 3, 8).unwrap() else {
            panic!("expected a single univariate polynomial");
        };
        assert_eq!(p, XPoly::from_ints(&[0, 4, 16, 4]));
    }

    #[test]
    fn index_out_of_range() {
        let err = compute("refined_T(8)".parse().unwrap(), 4, 8).unwrap_err();
        assert!(err.is_usage());
        let Computed::Family(all) = compute("refined_K".parse().unwrap(), 4, 8).unwrap() else {
            panic!("expected a family");
        };
        assert_eq!(all.len(), 8);
    }
}
