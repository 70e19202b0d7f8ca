//! Sturm-sequence root counting and isolation over exact rationals, real-rootedness
//! tests, and decisions of the interlacing relation between real-rooted polynomials.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{pair_to_rational, rational_to_pair, Rational, XPoly};

/// Dense integer polynomial used for sign evaluation without rational arithmetic.
#[derive(Debug, Clone)]
struct IntPoly(Vec<BigInt>);

impl IntPoly {
    fn from_xpoly(p: &XPoly) -> Self {
        IntPoly(p.positive_primitive().coeffs().iter().map(|c| c.to_integer()).collect())
    }

    /// Sign of `p(a/b)`, computed as the sign of `b^d p(a/b)` with `b > 0`.
    fn sign_at(&self, at: &Rational) -> i8 {
        let Some((lead, rest)) = self.0.split_last() else {
            return 0;
        };
        let (a, b) = (at.numer(), at.denom());
        let mut acc = lead.clone();
        let mut bpow = BigInt::one();
        for c in rest.iter().rev() {
            bpow *= b;
            acc = acc * a + c * &bpow;
        }
        if acc.is_zero() {
            0
        } else if acc.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Sign as `x -> +inf` (`positive = true`) or `x -> -inf`.
    fn sign_at_infinity(&self, positive: bool) -> i8 {
        let Some(lead) = self.0.last() else {
            return 0;
        };
        let s = if lead.is_positive() { 1 } else { -1 };
        if positive || (self.0.len() - 1) % 2 == 0 {
            s
        } else {
            -s
        }
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Sturm chain of a square-free polynomial. Members are stored as primitive integer
/// polynomials; positive rescaling leaves every sign count unchanged.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &XPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::Usage("Sturm chain of the zero polynomial".into()));
        }
        if !is_square_free(p)? {
            return Err(Error::Usage(format!("{p} is not square-free")));
        }
        let mut polys = vec![p.positive_primitive(), p.derivative().positive_primitive()];
        loop {
            let n = polys.len();
            if polys[n - 1].is_zero() {
                polys.pop();
                break;
            }
            let (_, r) = polys[n - 2].div_rem(&polys[n - 1])?;
            if r.is_zero() {
                break;
            }
            polys.push((-r).positive_primitive());
        }
        Ok(SturmChain { chain: polys.iter().map(IntPoly::from_xpoly).collect() })
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn sign_changes_at(&self, at: &Rational) -> usize {
        variations(self.chain.iter().map(|p| p.sign_at(at)))
    }

    fn sign_changes_at_infinity(&self, positive: bool) -> usize {
        variations(self.chain.iter().map(|p| p.sign_at_infinity(positive)))
    }

    /// Distinct roots in the half-open interval `(lo, hi]`.
    pub fn count_in(&self, lo: &Rational, hi: &Rational) -> usize {
        self.sign_changes_at(lo) - self.sign_changes_at(hi)
    }

    pub fn count_real(&self) -> usize {
        self.sign_changes_at_infinity(false) - self.sign_changes_at_infinity(true)
    }
}

fn is_square_free(p: &XPoly) -> Result<bool> {
    Ok(p.gcd(&p.derivative())?.is_constant())
}

/// `p / gcd(p, p')`, made monic.
pub fn radical(p: &XPoly) -> Result<XPoly> {
    if p.is_zero() {
        return Err(Error::Usage("radical of the zero polynomial".into()));
    }
    let g = p.gcd(&p.derivative())?;
    Ok(p.exact_div(&g)?.monic())
}

/// Yun's square-free factorization: pairs `(f_k, k)` with `p = c * prod f_k^k`, each
/// `f_k` monic, square-free and non-constant, pairwise coprime.
pub fn square_free_factors(p: &XPoly) -> Result<Vec<(XPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::Usage("factorization of the zero polynomial".into()));
    }
    let mut out = Vec::new();
    let dp = p.derivative();
    let a0 = p.gcd(&dp)?;
    let mut b = p.exact_div(&a0)?;
    let mut c = dp.exact_div(&a0)?;
    let mut d = &c - &b.derivative();
    let mut k = 1;
    while !b.is_constant() {
        let a = b.gcd(&d)?;
        if !a.is_constant() {
            out.push((a.monic(), k));
        }
        b = b.exact_div(&a)?;
        c = d.exact_div(&a)?;
        d = &c - &b.derivative();
        k += 1;
    }
    Ok(out)
}

/// An isolating interval with the multiplicity of the root it contains. `lo == hi`
/// means the root is exactly `lo`; otherwise the root lies strictly inside `(lo, hi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub multiplicity: usize,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, value: &Rational) -> bool {
        if self.is_exact() {
            *value == self.lo
        } else {
            self.lo < *value && *value < self.hi
        }
    }
}

/// Certified isolation of every distinct real root, sorted increasingly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootIsolation {
    pub intervals: Vec<RootInterval>,
    pub degree_covered: usize,
}

impl RootIsolation {
    pub fn real_root_count(&self) -> usize {
        self.intervals.iter().map(|i| i.multiplicity).sum()
    }
}

/// Default refinement width for isolating intervals: `2^-30`.
pub fn default_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << 30)
}

/// Strict bound on the absolute value of every root: `1 + max |a_i / a_n|`.
pub fn cauchy_bound(p: &XPoly) -> Rational {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    Rational::one() + max
}

/// Exact number of distinct real roots of a square-free `p` in `(lo, hi]`.
pub fn count_roots_in(p: &XPoly, lo: &Rational, hi: &Rational) -> Result<usize> {
    if lo >= hi {
        return Err(Error::Usage("count_roots_in requires lo < hi".into()));
    }
    Ok(SturmChain::new(p)?.count_in(lo, hi))
}

struct Isolator<'a> {
    sturm: &'a SturmChain,
    poly: &'a IntPoly,
    width: &'a Rational,
}

impl Isolator<'_> {
    fn half(a: &Rational, b: &Rational) -> Rational {
        (a + b) / Rational::from_integer(2.into())
    }

    /// Narrows a single-root interval with non-root endpoints by sign bisection.
    fn refine(&self, mut lo: Rational, mut hi: Rational) -> (Rational, Rational) {
        let lo_sign = self.poly.sign_at(&lo);
        while &(&hi - &lo) > self.width {
            let mid = Self::half(&lo, &hi);
            match self.poly.sign_at(&mid) {
                0 => return (mid.clone(), mid),
                s if s == lo_sign => lo = mid,
                _ => hi = mid,
            }
        }
        (lo, hi)
    }

    fn run(&self, lo: Rational, hi: Rational) -> Vec<(Rational, Rational)> {
        let mut out = Vec::new();
        let count = self.sturm.count_in(&lo, &hi);
        let mut stack = vec![(lo, hi, count)];
        while let Some((lo, hi, count)) = stack.pop() {
            match count {
                0 => {}
                1 => out.push(self.refine(lo, hi)),
                _ => {
                    let mid = Self::half(&lo, &hi);
                    if self.poly.sign_at(&mid) == 0 {
                        out.push((mid.clone(), mid.clone()));
                        let mut delta = (&hi - &lo) / Rational::from_integer(4.into());
                        loop {
                            let a = &mid - &delta;
                            let b = &mid + &delta;
                            if self.poly.sign_at(&a) != 0
                                && self.poly.sign_at(&b) != 0
                                && self.sturm.count_in(&a, &b) == 1
                            {
                                let left = self.sturm.count_in(&lo, &a);
                                let right = self.sturm.count_in(&b, &hi);
                                stack.push((lo, a, left));
                                stack.push((b, hi, right));
                                break;
                            }
                            delta /= Rational::from_integer(2.into());
                        }
                    } else {
                        let left = self.sturm.count_in(&lo, &mid);
                        stack.push((lo, mid.clone(), left));
                        stack.push((mid, hi, count - left));
                    }
                }
            }
        }
        out.sort();
        out
    }
}

fn isolate_square_free(r: &XPoly, width: &Rational) -> Result<Vec<(Rational, Rational)>> {
    if r.is_constant() {
        return Ok(Vec::new());
    }
    let sturm = SturmChain::new(r)?;
    let poly = IntPoly::from_xpoly(r);
    let bound = cauchy_bound(r);
    let isolator = Isolator { sturm: &sturm, poly: &poly, width };
    Ok(isolator.run(-bound.clone(), bound))
}

/// Square-free part together with every real root's isolating interval and multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareFree {
    pub radical: XPoly,
    pub multiplicities: Vec<RootInterval>,
}

pub fn square_free(p: &XPoly) -> Result<SquareFree> {
    square_free_with_width(p, &default_width())
}

pub fn square_free_with_width(p: &XPoly, width: &Rational) -> Result<SquareFree> {
    let radical = radical(p)?;
    let factors = square_free_factors(p)?;
    let raw = isolate_square_free(&radical, width)?;
    let factor_polys: Vec<(IntPoly, usize)> =
        factors.iter().map(|(f, k)| (IntPoly::from_xpoly(f), *k)).collect();
    let multiplicities = raw
        .into_iter()
        .map(|(lo, hi)| {
            let multiplicity = factor_polys
                .iter()
                .find(|(f, _)| {
                    if lo == hi {
                        f.sign_at(&lo) == 0
                    } else {
                        f.sign_at(&lo) * f.sign_at(&hi) < 0
                    }
                })
                .map(|(_, k)| *k)
                .expect("every root of the radical belongs to one square-free factor");
            RootInterval { lo, hi, multiplicity }
        })
        .collect();
    Ok(SquareFree { radical, multiplicities })
}

/// Isolates all distinct real roots, refined to width at most `2^-30`.
pub fn isolate_roots(p: &XPoly) -> Result<RootIsolation> {
    isolate_roots_with_width(p, &default_width())
}

pub fn isolate_roots_with_width(p: &XPoly, width: &Rational) -> Result<RootIsolation> {
    if p.is_zero() {
        return Err(Error::Usage("cannot isolate roots of the zero polynomial".into()));
    }
    if !width.is_positive() {
        return Err(Error::Usage("refinement width must be positive".into()));
    }
    let sf = square_free_with_width(p, width)?;
    Ok(RootIsolation { intervals: sf.multiplicities, degree_covered: p.degree().unwrap_or(0) })
}

/// Number of real roots counted with multiplicity.
pub fn real_root_count(p: &XPoly) -> Result<usize> {
    let mut total = 0;
    for (f, k) in square_free_factors(p)? {
        total += k * SturmChain::new(&f)?.count_real();
    }
    Ok(total)
}

pub fn is_real_rooted(p: &XPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::Usage("real-rootedness of the zero polynomial".into()));
    }
    Ok(real_root_count(p)? == p.degree().unwrap_or(0))
}

/// Strongest form of `g ⪯ f` that holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Strict,
    Weak,
    None,
    Incomparable,
}

impl Relation {
    /// Strict interlacing implies weak interlacing.
    pub fn holds_weakly(self) -> bool {
        matches!(self, Relation::Strict | Relation::Weak)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterlacingVerdict {
    pub relation: Relation,
    pub witness: Option<(RootInterval, RootInterval)>,
}

impl InterlacingVerdict {
    fn bare(relation: Relation) -> Self {
        InterlacingVerdict { relation, witness: None }
    }
}

/// Shared degree bookkeeping for `g ⪯ f`: `Ok(gap)` when the pattern is admissible,
/// otherwise the relation implied by the degrees alone.
pub(crate) fn degree_pattern(g: &XPoly, f: &XPoly) -> std::result::Result<usize, Relation> {
    let dg = g.degree().expect("nonzero") as i64;
    let df = f.degree().expect("nonzero") as i64;
    if dg == 0 && df == 0 {
        return Err(Relation::Incomparable);
    }
    match df - dg {
        0 => Ok(0),
        1 => Ok(1),
        -1 => Err(Relation::None),
        _ => Err(Relation::Incomparable),
    }
}

pub(crate) fn check_interlacing_input(p: &XPoly, role: &str) -> Result<()> {
    let lead = p
        .leading()
        .ok_or_else(|| Error::Precondition(format!("{role} is the zero polynomial")))?;
    if !lead.is_positive() {
        return Err(Error::Precondition(format!("{role} = {p} has a non-positive leading coefficient")));
    }
    if !is_real_rooted(p)? {
        return Err(Error::Precondition(format!("{role} = {p} is not real-rooted")));
    }
    Ok(())
}

/// Decides `g ⪯ f`: with `u` the roots of `f` and `v` those of `g`, either
/// `deg f = deg g` and `v_n <= u_n <= ... <= v_1 <= u_1`, or `deg f = deg g + 1` and
/// `u_n <= v_{n-1} <= ... <= v_1 <= u_1`.
///
/// Common roots are divided out first; the cofactors must then interleave strictly,
/// and the relation is weak whenever a common root exists.
pub fn interlaces(g: &XPoly, f: &XPoly) -> Result<InterlacingVerdict> {
    check_interlacing_input(g, "g")?;
    check_interlacing_input(f, "f")?;
    interlaces_unchecked(g, f)
}

fn interlaces_unchecked(g: &XPoly, f: &XPoly) -> Result<InterlacingVerdict> {
    if let Err(relation) = degree_pattern(g, f) {
        return Ok(InterlacingVerdict::bare(relation));
    }
    let common = f.gcd(g)?;
    let fc = f.exact_div(&common)?;
    let gc = g.exact_div(&common)?;
    let shared = !common.is_constant();

    for cof in [&fc, &gc] {
        if !cof.is_constant() && !is_square_free(cof)? {
            let iso = isolate_roots_with_width(cof, &Rational::one())?;
            let repeated = iso.intervals.into_iter().find(|i| i.multiplicity > 1);
            return Ok(InterlacingVerdict {
                relation: Relation::None,
                witness: repeated.map(|i| (i.clone(), i)),
            });
        }
    }

    let merged = &fc * &gc;
    let intervals: Vec<RootInterval> = isolate_square_free(&merged, &Rational::one())?
        .into_iter()
        .map(|(lo, hi)| RootInterval { lo, hi, multiplicity: 1 })
        .collect();
    let f_sign = IntPoly::from_xpoly(&fc);
    let from_f = |i: &RootInterval| {
        if i.is_exact() {
            f_sign.sign_at(&i.lo) == 0
        } else {
            f_sign.sign_at(&i.lo) * f_sign.sign_at(&i.hi) < 0
        }
    };

    // descending order must read u, v, u, v, ...
    let descending: Vec<&RootInterval> = intervals.iter().rev().collect();
    for (k, interval) in descending.iter().enumerate() {
        if from_f(interval) != (k % 2 == 0) {
            let other = if k > 0 { descending[k - 1] } else { descending.get(1).copied().unwrap_or(interval) };
            let (a, b) = if k > 0 { (*interval, other) } else { (other, *interval) };
            return Ok(InterlacingVerdict {
                relation: Relation::None,
                witness: Some((a.clone(), b.clone())),
            });
        }
    }
    Ok(InterlacingVerdict::bare(if shared { Relation::Weak } else { Relation::Strict }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutualInterlacing {
    pub holds: bool,
    /// First pair `(i, j)` in lexicographic order with `f_i ⪯ f_j` failing.
    pub first_failure: Option<(usize, usize)>,
}

/// Checks `f_i ⪯ f_j` for every `i < j`. Pairs are evaluated in parallel; the reported
/// failure is always the lexicographically first one.
pub fn mutually_interlacing(fs: &[XPoly]) -> Result<MutualInterlacing> {
    if fs.is_empty() {
        return Err(Error::Usage("mutual interlacing of an empty sequence".into()));
    }
    fs.par_iter().enumerate().try_for_each(|(i, f)| {
        if f.is_constant() {
            if f.leading().is_some_and(|c| c.is_positive()) {
                Ok(())
            } else {
                Err(Error::Precondition(format!("entry {i} is not a positive constant")))
            }
        } else if !f.is_nonnegative() {
            Err(Error::Precondition(format!("entry {i} = {f} has negative coefficients")))
        } else {
            check_interlacing_input(f, &format!("entry {i}"))
        }
    })?;
    let pairs: Vec<(usize, usize)> =
        (0..fs.len()).flat_map(|i| (i + 1..fs.len()).map(move |j| (i, j))).collect();
    let width = Rational::new(BigInt::one(), BigInt::one() << 20);
    let isolations = fs
        .par_iter()
        .map(|f| if f.is_constant() { Ok(Vec::new()) } else { Ok(isolate_roots_with_width(f, &width)?.intervals) })
        .collect::<Result<Vec<_>>>()?;
    let verdicts = pairs
        .par_iter()
        .map(|&(i, j)| {
            if let Err(relation) = degree_pattern(&fs[i], &fs[j]) {
                return Ok(relation.holds_weakly());
            }
            match alternation_from_intervals(&isolations[i], &isolations[j]) {
                Some(ok) => Ok(ok),
                None => interlaces_unchecked(&fs[i], &fs[j]).map(|v| v.relation.holds_weakly()),
            }
        })
        .collect::<Result<Vec<bool>>>()?;
    let first_failure = pairs.iter().zip(&verdicts).find(|(_, ok)| !**ok).map(|(p, _)| *p);
    Ok(MutualInterlacing { holds: first_failure.is_none(), first_failure })
}

/// Decides `g ⪯ f` from precomputed isolations when that is unambiguous: simple roots
/// only, and every pair of intervals either disjoint or the same exact point (a common
/// root). Returns `None` when the exact pairwise check is needed.
fn alternation_from_intervals(g: &[RootInterval], f: &[RootInterval]) -> Option<bool> {
    if g.iter().chain(f).any(|iv| iv.multiplicity != 1) {
        return None;
    }
    let mut shared_g = vec![false; g.len()];
    let mut shared_f = vec![false; f.len()];
    for (a, u) in f.iter().enumerate() {
        for (b, v) in g.iter().enumerate() {
            if u.is_exact() && v.is_exact() {
                if u.lo == v.lo {
                    shared_f[a] = true;
                    shared_g[b] = true;
                }
            } else if u.lo < v.hi && v.lo < u.hi {
                return None;
            }
        }
    }
    let mut merged: Vec<(&RootInterval, bool)> = f
        .iter()
        .zip(&shared_f)
        .filter(|(_, s)| !**s)
        .map(|(iv, _)| (iv, true))
        .chain(g.iter().zip(&shared_g).filter(|(_, s)| !**s).map(|(iv, _)| (iv, false)))
        .collect();
    // an exact point sorts below an open interval starting at it
    merged.sort_by(|x, y| (&y.0.lo, &y.0.hi).cmp(&(&x.0.lo, &x.0.hi)));
    Some(merged.iter().enumerate().all(|(k, &(_, from_f))| from_f == (k % 2 == 0)))
}

#[derive(Serialize, Deserialize)]
struct IntervalWire {
    lo: [String; 2],
    hi: [String; 2],
    multiplicity: usize,
}

impl Serialize for RootInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IntervalWire {
            lo: rational_to_pair(&self.lo),
            hi: rational_to_pair(&self.hi),
            multiplicity: self.multiplicity,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RootInterval {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = IntervalWire::deserialize(d)?;
        Ok(RootInterval {
            lo: pair_to_rational(&w.lo).map_err(D::Error::custom)?,
            hi: pair_to_rational(&w.hi).map_err(D::Error::custom)?,
            multiplicity: w.multiplicity,
        })
    }
}

impl Serialize for RootIsolation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            intervals: &'a [RootInterval],
            degree_covered: usize,
        }
        Out { intervals: &self.intervals, degree_covered: self.degree_covered }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RootIsolation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct In {
            intervals: Vec<RootInterval>,
            degree_covered: usize,
        }
        let w = In::deserialize(d)?;
        Ok(RootIsolation { intervals: w.intervals, degree_covered: w.degree_covered })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{int, rat, to_f64};

    fn p(c: &[i64]) -> XPoly {
        XPoly::from_ints(c)
    }

    #[test]
    fn square_free_examples() {
        assert_eq!(square_free(&p(&[1, 2, 1])).unwrap().radical, p(&[1, 1]));
        assert_eq!(square_free(&p(&[2, 3, 1])).unwrap().radical, p(&[2, 3, 1]));
        let k47 = p(&[0, 2, 32, 50, 12]);
        assert_eq!(square_free(&k47).unwrap().radical, k47.monic());
        assert!(square_free(&XPoly::zero()).is_err());
    }

    #[test]
    fn yun_factorization() {
        // (x+1)^2 (x+2) x^3
        let f = &(&p(&[1, 2, 1]) * &p(&[2, 1])) * &p(&[0, 0, 0, 1]);
        let factors = square_free_factors(&f).unwrap();
        assert_eq!(factors, vec![(p(&[2, 1]), 1), (p(&[1, 1]), 2), (p(&[0, 1]), 3)]);
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_roots_in(&p(&[-2, 0, 1]), &int(0), &int(2)).unwrap(), 1);
        assert_eq!(count_roots_in(&p(&[1, 0, 1]), &int(-10), &int(10)).unwrap(), 0);
        assert_eq!(count_roots_in(&p(&[-2, 0, 1]), &int(-2), &int(2)).unwrap(), 2);
        // half-open: root at the right endpoint counts, at the left does not
        assert_eq!(count_roots_in(&p(&[-1, 1]), &int(0), &int(1)).unwrap(), 1);
        assert_eq!(count_roots_in(&p(&[-1, 1]), &int(1), &int(2)).unwrap(), 0);
        assert!(count_roots_in(&p(&[1, 2, 1]), &int(-3), &int(3)).is_err());
        assert!(count_roots_in(&p(&[-2, 0, 1]), &int(2), &int(0)).is_err());
    }

    #[test]
    fn isolate_k40() {
        let iso = isolate_roots(&p(&[2, 32, 50, 12])).unwrap();
        let mids: Vec<f64> = iso.intervals.iter().map(|i| to_f64(&i.midpoint())).collect();
        let expected = [-3.396, -0.7008, -0.07004];
        assert_eq!(mids.len(), 3);
        for (m, e) in mids.iter().zip(expected) {
            assert!((m - e).abs() < 5e-4 * e.abs().max(1.0), "{m} vs {e}");
        }
        for i in &iso.intervals {
            assert!(i.width() <= default_width());
            assert_eq!(i.multiplicity, 1);
        }
    }

    #[test]
    fn isolate_origin_and_repeated() {
        let iso = isolate_roots(&XPoly::x()).unwrap();
        assert_eq!(iso.intervals, vec![RootInterval { lo: int(0), hi: int(0), multiplicity: 1 }]);

        let f = &p(&[1, 2, 1]) * &p(&[2, 1]);
        let iso = isolate_roots(&f).unwrap();
        assert_eq!(iso.intervals.len(), 2);
        assert!(iso.intervals[0].contains(&int(-2)) && iso.intervals[0].multiplicity == 1);
        assert!(iso.intervals[1].contains(&int(-1)) && iso.intervals[1].multiplicity == 2);
        assert_eq!(iso.real_root_count(), 3);
    }

    #[test]
    fn real_rootedness() {
        assert!(!is_real_rooted(&p(&[1, 0, 1])).unwrap());
        assert!(is_real_rooted(&p(&[0, 6, 48, 38, 4])).unwrap());
        assert!(is_real_rooted(&(&p(&[1, 1]) * &p(&[1, 2]))).unwrap());
        assert!(is_real_rooted(&p(&[7])).unwrap());
        assert!(is_real_rooted(&XPoly::zero()).is_err());
    }

    #[test]
    fn interlacing_examples() {
        let v = interlaces(&p(&[2, 1]), &(&p(&[1, 1]) * &p(&[3, 1]))).unwrap();
        assert_eq!(v.relation, Relation::Strict);
        assert_eq!(interlaces(&p(&[1, 1]), &p(&[1, 1])).unwrap().relation, Relation::Weak);
        assert_eq!(interlaces(&p(&[1, 1]), &p(&[2, 3, 1])).unwrap().relation, Relation::Weak);
        let bad = interlaces(&p(&[1, 1]), &p(&[2, 1])).unwrap();
        assert_eq!(bad.relation, Relation::None);
        assert!(bad.witness.is_some());
        assert!(interlaces(&p(&[1, 0, 1]), &p(&[1, 1])).is_err());
    }

    #[test]
    fn degree_rules() {
        let c = p(&[3]);
        assert_eq!(interlaces(&c, &p(&[1, 1])).unwrap().relation, Relation::Strict);
        assert_eq!(interlaces(&c, &XPoly::x()).unwrap().relation, Relation::Strict);
        assert_eq!(interlaces(&c, &p(&[2, 3, 1])).unwrap().relation, Relation::Incomparable);
        assert_eq!(interlaces(&c, &c).unwrap().relation, Relation::Incomparable);
        assert_eq!(interlaces(&p(&[1, 1]), &c).unwrap().relation, Relation::None);
        let cubic = XPoly::from_roots(&[int(-1), int(-2), int(-3)]);
        assert_eq!(interlaces(&p(&[1, 1]), &cubic).unwrap().relation, Relation::Incomparable);
    }

    #[test]
    fn repeated_cofactor_root_breaks_interlacing() {
        let g = XPoly::from_roots(&[int(-1), int(-1)]);
        let f = XPoly::from_roots(&[int(-2), int(-3)]);
        assert_eq!(interlaces(&g, &f).unwrap().relation, Relation::None);
    }

    #[test]
    fn mutual_examples() {
        let res = mutually_interlacing(&[p(&[1, 1]), p(&[2, 1])]).unwrap();
        assert_eq!(res, MutualInterlacing { holds: false, first_failure: Some((0, 1)) });
        let res = mutually_interlacing(&[p(&[2, 1]), p(&[1, 1])]).unwrap();
        assert!(res.holds);
        assert!(mutually_interlacing(&[]).is_err());
        assert!(mutually_interlacing(&[p(&[1, 0, 1])]).is_err());
        assert!(mutually_interlacing(&[p(&[-1, 1])]).is_err());
    }

    #[test]
    fn isolation_json_round_trip() {
        let iso = isolate_roots(&XPoly::from_roots(&[rat(-1, 3), int(0)])).unwrap();
        assert!(iso.intervals[0].contains(&rat(-1, 3)));
        let text = serde_json::to_string(&iso).unwrap();
        let back: RootIsolation = serde_json::from_str(&text).unwrap();
        assert_eq!(back, iso);
        assert!(text.contains(r#""lo":["0","1"],"hi":["0","1"]"#), "{text}");
    }
}
