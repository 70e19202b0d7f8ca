//! Even/odd splitting, Hurwitz determinants over exact rings, the `C_{i,j}(z)` stability
//! certificates for the rank-4 q-family, and exact positivity of q-polynomials on `q > 0`.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactpoly::{qpoly_to_strings, rational_to_pair, sign, QPoly, QXPoly, Rational, XPoly};
use crate::realroots::{
    cauchy_bound, check_interlacing_input, degree_pattern, radical, InterlacingVerdict, Relation,
    SturmChain,
};
use crate::recurrences::refined_tq;

/// `p(z) = even(z^2) + z * odd(z^2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HBSplit {
    pub even_part: XPoly,
    pub odd_part: XPoly,
}

impl HBSplit {
    pub fn reconstruct(&self) -> XPoly {
        &self.even_part.substitute_power(2) + &self.odd_part.substitute_power(2).mul_x_pow(1)
    }
}

pub fn hb_split(p: &XPoly) -> Result<HBSplit> {
    if p.is_zero() {
        return Err(Error::Usage("even/odd split of the zero polynomial".into()));
    }
    let pick = |parity: usize| {
        XPoly::new(p.coeffs().iter().skip(parity).step_by(2).cloned().collect())
    };
    Ok(HBSplit { even_part: pick(0), odd_part: pick(1) })
}

/// An integral domain with exact division, enough for fraction-free elimination.
pub trait ExactRing: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Quotient when `other` divides `self` exactly.
    fn exact_div(&self, other: &Self) -> Result<Self>;
}

impl ExactRing for Rational {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn exact_div(&self, other: &Self) -> Result<Self> {
        if Zero::is_zero(other) {
            return Err(Error::Usage("division by zero".into()));
        }
        Ok(self / other)
    }
}

impl ExactRing for QPoly {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn exact_div(&self, other: &Self) -> Result<Self> {
        QPoly::exact_div(self, other)
    }
}

pub type Matrix<R> = Vec<Vec<R>>;

/// Determinant by Bareiss elimination with row pivoting on zero pivots.
pub fn det_bareiss<R: ExactRing>(m: &Matrix<R>) -> Result<R> {
    let n = m.len();
    if n == 0 {
        return Ok(R::one_elem());
    }
    let mut a = m.clone();
    let mut prev = R::one_elem();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero_elem() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero_elem()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(R::zero_elem()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.exact_div(&prev)?;
            }
            a[i][k] = R::zero_elem();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { R::zero_elem().sub(&d) } else { d })
}

/// Determinant by Laplace expansion along the first row.
pub fn det_cofactor<R: ExactRing>(m: &Matrix<R>) -> R {
    let n = m.len();
    match n {
        0 => R::one_elem(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = R::zero_elem();
            for c in 0..n {
                if m[0][c].is_zero_elem() {
                    continue;
                }
                let minor: Matrix<R> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = m[0][c].mul(&det_cofactor(&minor));
                acc = if c % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

/// The `n x n` Hurwitz matrix `H[r][c] = a_{2c+1-r}` where `a_j` is the coefficient of
/// `z^{n-j}` and out-of-range `a_j` are zero. Input coefficients are in ascending order.
pub fn hurwitz_matrix<R: ExactRing>(ascending: &[R]) -> Matrix<R> {
    let n = ascending.len() - 1;
    let a = |j: isize| {
        if j < 0 || j as usize > n {
            R::zero_elem()
        } else {
            ascending[n - j as usize].clone()
        }
    };
    (0..n)
        .map(|r| (0..n).map(|c| a(2 * c as isize + 1 - r as isize)).collect())
        .collect()
}

fn leading_minor<R: ExactRing>(m: &Matrix<R>, k: usize) -> Matrix<R> {
    m[..k].iter().map(|row| row[..k].to_vec()).collect()
}

/// `Delta_1 .. Delta_n`, the leading principal minors of the Hurwitz matrix.
///
/// A single fraction-free pass yields every minor as a pivot while the pivots stay
/// nonzero; any later minor is then computed on its own.
pub fn hurwitz_determinants_of<R: ExactRing>(ascending: &[R]) -> Result<Vec<R>> {
    let trimmed_len = ascending.iter().rposition(|c| !c.is_zero_elem()).map_or(0, |i| i + 1);
    if trimmed_len == 0 {
        return Err(Error::Usage("Hurwitz determinants of the zero polynomial".into()));
    }
    if trimmed_len == 1 {
        return Err(Error::Usage("Hurwitz determinants need degree at least 1".into()));
    }
    let h = hurwitz_matrix(&ascending[..trimmed_len]);
    let n = h.len();
    let mut out = Vec::with_capacity(n);
    let mut a = h.clone();
    let mut prev = R::one_elem();
    let mut k = 0;
    while k < n && !a[k][k].is_zero_elem() {
        out.push(a[k][k].clone());
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = a[k][k].clone();
        k += 1;
    }
    if k < n {
        // a vanishing minor: the pivot chain breaks, so finish minor by minor
        out.push(R::zero_elem());
        for size in k + 2..=n {
            out.push(det_bareiss(&leading_minor(&h, size))?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StabilityVerdict {
    HurwitzStable,
    NotStable,
    Boundary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport<R> {
    pub determinants: Vec<R>,
    /// Only set when the coefficients are numbers.
    pub verdict: Option<StabilityVerdict>,
}

/// Numeric Hurwitz test of a real polynomial with positive leading coefficient.
pub fn hurwitz_determinants(p: &XPoly) -> Result<StabilityReport<Rational>> {
    let lead = p
        .leading()
        .ok_or_else(|| Error::Usage("Hurwitz determinants of the zero polynomial".into()))?;
    if !lead.is_positive() {
        return Err(Error::Precondition(format!("{p} needs a positive leading coefficient")));
    }
    let determinants = hurwitz_determinants_of(p.coeffs())?;
    let verdict = if determinants.iter().all(Signed::is_positive) {
        StabilityVerdict::HurwitzStable
    } else if determinants.iter().all(|d| !d.is_negative()) {
        StabilityVerdict::Boundary
    } else {
        StabilityVerdict::NotStable
    };
    Ok(StabilityReport { determinants, verdict: Some(verdict) })
}

/// Symbolic Hurwitz determinants in `Z[q]` of a polynomial in `z`.
pub fn hurwitz_determinants_symbolic(p: &QXPoly) -> Result<StabilityReport<QPoly>> {
    if p.is_zero() {
        return Err(Error::Usage("Hurwitz determinants of the zero polynomial".into()));
    }
    Ok(StabilityReport { determinants: hurwitz_determinants_of(p.coeffs())?, verdict: None })
}

impl Serialize for StabilityReport<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let dets: Vec<[String; 2]> = self.determinants.iter().map(rational_to_pair).collect();
        let mut st = s.serialize_struct("StabilityReport", 2)?;
        st.serialize_field("determinants", &dets)?;
        st.serialize_field("verdict", &self.verdict)?;
        st.end()
    }
}

impl Serialize for StabilityReport<QPoly> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let dets: Vec<Vec<String>> = self.determinants.iter().map(qpoly_to_strings).collect();
        let mut st = s.serialize_struct("StabilityReport", 2)?;
        st.serialize_field("determinants", &dets)?;
        st.serialize_field("verdict", &self.verdict)?;
        st.end()
    }
}

/// `C_{i,j}(z) = (T_{4,j}(z^2;q) + z T_{4,i}(z^2;q)) / (z^m (q+1))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CPairResult {
    pub i: usize,
    pub j: usize,
    pub m: usize,
    pub poly: QXPoly,
}

pub fn build_c(i: usize, j: usize) -> Result<CPairResult> {
    if !(i < j && j <= 7) {
        return Err(Error::Range(format!("build_C needs 0 <= i < j <= 7, got ({i}, {j})")));
    }
    let t4 = refined_tq(4)?;
    let p = &t4.polys[j].substitute_power(2) + &t4.polys[i].substitute_power(2).mul_x_pow(1);
    let m = p.lowest_degree().expect("nonzero");
    let poly = p.div_x_pow(m)?.exact_div_q(&QPoly::one_plus_q())?;
    Ok(CPairResult { i, j, m, poly })
}

/// Index pairs of the rank-4 family whose stability certificates are checked; 4 and 7
/// are excluded since `T_{4,4} = q T_{4,3}` and `T_{4,7} = q x T_{4,0}`.
pub const C_PAIR_INDICES: [usize; 6] = [0, 1, 2, 3, 5, 6];

pub fn c_pairs() -> Vec<(usize, usize)> {
    let idx = C_PAIR_INDICES;
    idx.iter().flat_map(|&i| idx.iter().filter(move |&&j| j > i).map(move |&j| (i, j))).collect()
}

/// Symbolic determinants for every certificate pair, evaluated in parallel.
pub fn all_c_determinants() -> Result<Vec<(CPairResult, Vec<QPoly>)>> {
    c_pairs()
        .into_par_iter()
        .map(|(i, j)| {
            let c = build_c(i, j)?;
            let dets = hurwitz_determinants_symbolic(&c.poly)?.determinants;
            Ok((c, dets))
        })
        .collect()
}

/// Whether `p(q) > 0` for every real `q > 0`.
pub fn q_positive_on_positive_reals(p: &QPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::Usage("positivity of the zero polynomial".into()));
    }
    if p.is_nonnegative() {
        return Ok(true);
    }
    let x = p.to_xpoly();
    let r = radical(&x)?;
    let positive_roots = if r.is_constant() {
        0
    } else {
        SturmChain::new(&r)?.count_in(&Rational::zero(), &cauchy_bound(&r))
    };
    Ok(positive_roots == 0 && sign(&x.eval(&Rational::one())) > 0)
}

/// Positivity on `q > 0` allowing a zero at `q = 1` of even multiplicity, as produced by
/// `(q^2 - 1)^2` factors.
pub fn q_positive_on_positive_reals_except_one(p: &QPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::Usage("positivity of the zero polynomial".into()));
    }
    let q_minus_one = QPoly::from_ints(&[-1, 1]);
    let mut rest = p.clone();
    let mut multiplicity = 0;
    while rest.eval(&Rational::one()).is_zero() {
        rest = rest.exact_div(&q_minus_one)?;
        multiplicity += 1;
    }
    Ok(multiplicity % 2 == 0 && q_positive_on_positive_reals(&rest)?)
}

fn check_stability_input(p: &XPoly, role: &str) -> Result<()> {
    check_interlacing_input(p, role)?;
    if !p.is_nonnegative() {
        return Err(Error::Precondition(format!("{role} = {p} has negative coefficients")));
    }
    Ok(())
}

/// Decides `f ⪯ g` through Hurwitz stability of `g'(z^2) + z f'(z^2)`, where `f'` and
/// `g'` are the cofactors after removing `gcd(f, g)`; a nontrivial gcd makes the
/// relation weak.
pub fn interlace_via_stability(f: &XPoly, g: &XPoly) -> Result<InterlacingVerdict> {
    check_stability_input(f, "f")?;
    check_stability_input(g, "g")?;
    if let Err(relation) = degree_pattern(f, g) {
        return Ok(InterlacingVerdict { relation, witness: None });
    }
    let common = f.gcd(g)?;
    let fc = f.exact_div(&common)?;
    let gc = g.exact_div(&common)?;
    let p = &gc.substitute_power(2) + &fc.substitute_power(2).mul_x_pow(1);
    let p = p.div_x_pow(p.lowest_degree().expect("nonzero"))?;
    if p.is_constant() {
        return Ok(InterlacingVerdict { relation: Relation::Weak, witness: None });
    }
    let split = hb_split(&p)?;
    if split.even_part.is_zero() || split.odd_part.is_zero() {
        return Err(Error::TheoremInapplicable(format!(
            "{p} has a vanishing even or odd part"
        )));
    }
    let stable = hurwitz_determinants(&p)?.verdict == Some(StabilityVerdict::HurwitzStable);
    let relation = match (stable, common.is_constant()) {
        (true, true) => Relation::Strict,
        (true, false) => Relation::Weak,
        (false, _) => Relation::None,
    };
    Ok(InterlacingVerdict { relation, witness: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::int;
    use crate::realroots::interlaces;

    fn p(c: &[i64]) -> XPoly {
        XPoly::from_ints(c)
    }

    fn q(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn split_examples() {
        let s = hb_split(&p(&[4, 3, 2, 1])).unwrap();
        assert_eq!((s.even_part.clone(), s.odd_part.clone()), (p(&[4, 2]), p(&[3, 1])));
        let t = p(&[1, 2, 3, 1, 1]);
        let s = hb_split(&t).unwrap();
        assert_eq!((s.even_part.clone(), s.odd_part.clone()), (p(&[1, 3, 1]), p(&[2, 1])));
        assert_eq!(s.reconstruct(), t);
        assert!(hb_split(&XPoly::zero()).is_err());
    }

    #[test]
    fn numeric_determinants() {
        let r = hurwitz_determinants(&p(&[2, 3, 1])).unwrap();
        assert_eq!(r.determinants, vec![int(3), int(6)]);
        assert_eq!(r.verdict, Some(StabilityVerdict::HurwitzStable));
        let r = hurwitz_determinants(&p(&[1, 0, 1])).unwrap();
        assert_eq!(r.determinants[0], int(0));
        assert_eq!(r.verdict, Some(StabilityVerdict::Boundary));
        let r = hurwitz_determinants(&p(&[2, 0, 1, 1])).unwrap();
        assert_eq!(r.verdict, Some(StabilityVerdict::NotStable));
        assert!(hurwitz_determinants(&XPoly::zero()).is_err());
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m: Matrix<Rational> = vec![
            vec![int(0), int(2), int(1)],
            vec![int(3), int(0), int(4)],
            vec![int(1), int(5), int(0)],
        ];
        assert_eq!(det_bareiss(&m).unwrap(), det_cofactor(&m));
        let sym: Matrix<QPoly> = vec![vec![q(&[1, 1]), q(&[0, 1])], vec![q(&[2]), q(&[1, 0, 1])]];
        assert_eq!(det_bareiss(&sym).unwrap(), det_cofactor(&sym));
    }

    #[test]
    fn c01_shape() {
        let c = build_c(0, 1).unwrap();
        assert_eq!(c.m, 1);
        let expected = QXPoly::from_rows(&[
            &[1],
            &[4, 5, 1],
            &[4, 6, 1],
            &[2, 6, 4],
            &[1, 6, 4],
            &[0, 1, 1],
            &[0, 0, 1],
        ]);
        assert_eq!(c.poly, expected);
        assert!(build_c(3, 3).is_err());
    }

    #[test]
    fn c01_determinants() {
        let dets = hurwitz_determinants_symbolic(&build_c(0, 1).unwrap().poly).unwrap().determinants;
        let d56 = QPoly::product(&[(&[0, 12], 1), (&[1, 1], 3), (&[-1, 0, 1], 2)]);
        let expected = vec![
            QPoly::product(&[(&[0, 1], 1), (&[1, 1], 1)]),
            QPoly::product(&[(&[0, 1], 1), (&[1, 5, 4], 1)]),
            QPoly::product(&[(&[0, 2], 1), (&[1, 1], 2), (&[1, 4, 7], 1)]),
            QPoly::product(&[(&[0, 4], 1), (&[1, 1], 2), (&[1, 1, 1, 3], 1)]),
            d56.clone(),
            d56,
        ];
        assert_eq!(dets, expected);
    }

    #[test]
    fn positivity() {
        assert!(q_positive_on_positive_reals(&q(&[7, 10, -11, -12, 12, 6])).unwrap());
        assert!(q_positive_on_positive_reals(&q(&[1, 1])).unwrap());
        assert!(!q_positive_on_positive_reals(&q(&[-1, 0, 1])).unwrap());
        assert!(!q_positive_on_positive_reals(&q(&[1, -3, 1])).unwrap());
        assert!(q_positive_on_positive_reals(&q(&[1, -1, 1])).unwrap());
        assert!(q_positive_on_positive_reals(&QPoly::zero()).is_err());
        let sq = QPoly::product(&[(&[-1, 0, 1], 2), (&[0, 1], 1)]);
        assert!(!q_positive_on_positive_reals(&sq).unwrap());
        assert!(q_positive_on_positive_reals_except_one(&sq).unwrap());
        assert!(!q_positive_on_positive_reals_except_one(&q(&[-1, 1])).unwrap());
    }

    #[test]
    fn stability_interlacing_examples() {
        let v = interlace_via_stability(&p(&[2, 1]), &p(&[1, 3, 1])).unwrap();
        assert_eq!(v.relation, Relation::Strict);
        let v = interlace_via_stability(&p(&[1, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(v.relation, Relation::Weak);
        let t4 = crate::recurrences::refined_t(4).unwrap().polys;
        let v = interlace_via_stability(&t4[0], &t4[1]).unwrap();
        assert_eq!(v.relation, interlaces(&t4[0], &t4[1]).unwrap().relation);
        assert!(v.relation.holds_weakly());
        let v = interlace_via_stability(&p(&[1, 1]), &p(&[2, 1])).unwrap();
        assert_eq!(v.relation, Relation::None);
        assert!(interlace_via_stability(&p(&[-1, 1]), &p(&[1, 1])).is_err());
    }

    #[test]
    fn report_json() {
        let r = hurwitz_determinants(&p(&[2, 3, 1])).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(text, r#"{"determinants":[["3","1"],["6","1"]],"verdict":"hurwitz_stable"}"#);
    }
}
