//! Signed permutations, `(2,4,6,...)`-inversion sequences, their descent and ascent
//! statistics, the bijection between them, and exhaustive generating-polynomial oracles.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{AnyPoly, QPoly, QXPoly, XPoly};

/// Default largest `n` accepted by exhaustive enumeration.
pub const DEFAULT_CAP: usize = 8;

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Range("n must be positive".into()));
    }
    if n > cap {
        return Err(Error::Resource { n, cap });
    }
    Ok(())
}

/// A signed permutation in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignedPerm(Vec<i32>);

impl SignedPerm {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::Domain(format!("{entries:?} is not a signed permutation")));
            }
            seen[a] = true;
        }
        Ok(SignedPerm(entries))
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm((1..=n as i32).collect())
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn neg(&self) -> usize {
        self.0.iter().filter(|&&v| v < 0).count()
    }

    pub fn is_even(&self) -> bool {
        self.neg() % 2 == 0
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An inversion sequence with `0 <= e_i <= 2i - 1` (1-based `i`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InvSeq(Vec<u32>);

impl InvSeq {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        for (k, &e) in entries.iter().enumerate() {
            if e as usize > 2 * k + 1 {
                return Err(Error::Domain(format!(
                    "entry e_{} = {e} exceeds the bound {}",
                    k + 1,
                    2 * k + 1
                )));
            }
        }
        Ok(InvSeq(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }
}

impl fmt::Display for InvSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Lexicographic successor in place; `false` once the last permutation is reached.
fn next_permutation(p: &mut [u8]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|&v| v > p[i]).expect("a larger element exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Applies `mask` to the absolute values in `perm`; position 0 is the most significant bit.
fn apply_signs(perm: &[u8], mask: u32, out: &mut [i32]) {
    let n = perm.len();
    for (k, (&v, slot)) in perm.iter().zip(out.iter_mut()).enumerate() {
        let negative = (mask >> (n - 1 - k)) & 1 == 1;
        *slot = if negative { -(v as i32) } else { v as i32 };
    }
}

/// Streaming enumeration of `B_n` (or `D_n`), ordered by sign pattern with `+` before `-`
/// and position 1 most significant, then lexicographically by underlying permutation.
#[derive(Debug, Clone)]
pub struct SignedPerms {
    n: usize,
    even_only: bool,
    mask: u32,
    perm: Vec<u8>,
    done: bool,
}

impl SignedPerms {
    fn new(n: usize, even_only: bool) -> Self {
        SignedPerms { n, even_only, mask: 0, perm: (1..=n as u8).collect(), done: false }
    }

    fn advance_mask(&mut self) {
        loop {
            self.mask += 1;
            if self.mask >= 1 << self.n {
                self.done = true;
                return;
            }
            if !self.even_only || self.mask.count_ones() % 2 == 0 {
                return;
            }
        }
    }
}

impl Iterator for SignedPerms {
    type Item = SignedPerm;

    fn next(&mut self) -> Option<SignedPerm> {
        if self.done {
            return None;
        }
        let mut out = vec![0; self.n];
        apply_signs(&self.perm, self.mask, &mut out);
        if !next_permutation(&mut self.perm) {
            self.perm.sort_unstable();
            self.advance_mask();
        }
        Some(SignedPerm(out))
    }
}

pub fn signed_perms(n: usize, cap: usize) -> Result<SignedPerms> {
    check_cap(n, cap)?;
    Ok(SignedPerms::new(n, false))
}

pub fn even_signed_perms(n: usize, cap: usize) -> Result<SignedPerms> {
    check_cap(n, cap)?;
    Ok(SignedPerms::new(n, true))
}

/// Streaming lexicographic enumeration of inversion sequences.
#[derive(Debug, Clone)]
pub struct InversionSequences {
    current: Option<Vec<u32>>,
}

impl Iterator for InversionSequences {
    type Item = InvSeq;

    fn next(&mut self) -> Option<InvSeq> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().expect("checked above");
        let mut k = cur.len();
        loop {
            if k == 0 {
                self.current = None;
                break;
            }
            k -= 1;
            if (cur[k] as usize) < 2 * k + 1 {
                cur[k] += 1;
                break;
            }
            cur[k] = 0;
        }
        Some(InvSeq(out))
    }
}

pub fn inversion_sequences(n: usize, cap: usize) -> Result<InversionSequences> {
    check_cap(n, cap)?;
    Ok(InversionSequences { current: Some(vec![0; n]) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumKind {
    SignedPerms,
    EvenSignedPerms,
    InversionSequences,
}

impl FromStr for EnumKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "signed_perms" => Ok(EnumKind::SignedPerms),
            "even_signed_perms" => Ok(EnumKind::EvenSignedPerms),
            "inversion_sequences" => Ok(EnumKind::InversionSequences),
            other => Err(Error::Usage(format!("unknown enumeration kind {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Combinatorial {
    Perm(SignedPerm),
    Seq(InvSeq),
}

/// Kind-dispatched enumeration; prefer the typed constructors when the kind is static.
pub fn enumerate(
    kind: EnumKind,
    n: usize,
    cap: usize,
) -> Result<Box<dyn Iterator<Item = Combinatorial> + Send>> {
    Ok(match kind {
        EnumKind::SignedPerms => Box::new(signed_perms(n, cap)?.map(Combinatorial::Perm)),
        EnumKind::EvenSignedPerms => Box::new(even_signed_perms(n, cap)?.map(Combinatorial::Perm)),
        EnumKind::InversionSequences => {
            Box::new(inversion_sequences(n, cap)?.map(Combinatorial::Seq))
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatRecord {
    pub neg: u32,
    pub neg_d: u32,
    pub des_b: u32,
    pub des_d: u32,
    pub affine_des_b: u32,
    pub affine_des_d: u32,
    pub parity_even: bool,
}

fn plain_descents(s: &[i32]) -> u32 {
    s.windows(2).filter(|w| w[0] > w[1]).count() as u32
}

fn stats_of(s: &[i32]) -> StatRecord {
    let n = s.len();
    let neg = s.iter().filter(|&&v| v < 0).count() as u32;
    let neg_d = s[1..].iter().filter(|&&v| v < 0).count() as u32;
    let inner = plain_descents(s);
    let des_b = inner + u32::from(s[0] < 0);
    let des_d = inner + u32::from(s[0] + s[1] < 0);
    let tail = u32::from(s[n - 2] + s[n - 1] > 0);
    StatRecord {
        neg,
        neg_d,
        des_b,
        des_d,
        affine_des_b: des_b + tail,
        affine_des_d: des_d + tail,
        parity_even: neg % 2 == 0,
    }
}

pub fn stats(sigma: &SignedPerm) -> Result<StatRecord> {
    if sigma.len() < 2 {
        return Err(Error::Domain("type D and affine statistics need n >= 2".into()));
    }
    Ok(stats_of(sigma.entries()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvStats {
    pub exc: u32,
    pub asc_d: u32,
    pub affine_asc_d: u32,
}

/// `e_{n-1}/(n-1) + e_n/n < (2n-1)/n`, cross-multiplied.
pub fn affine_tail_holds(e_prev: u64, e_last: u64, n: u64) -> bool {
    n * e_prev + (n - 1) * e_last < (2 * n - 1) * (n - 1)
}

/// The same indicator with the alternative right-hand side `(n-1)/n`.
pub fn affine_tail_holds_alt(e_prev: u64, e_last: u64, n: u64) -> bool {
    n * e_prev + (n - 1) * e_last < (n - 1) * (n - 1)
}

pub fn inv_stats(e: &InvSeq) -> Result<InvStats> {
    let v = e.entries();
    let n = v.len();
    if n < 2 {
        return Err(Error::Domain("type D ascents need n >= 2".into()));
    }
    let exc = v.iter().enumerate().filter(|&(k, &x)| x as usize > k).count() as u32;
    let mut asc_d = u32::from(2 * v[0] + v[1] >= 3);
    for k in 0..n - 1 {
        // e_i / i < e_{i+1} / (i+1) with i = k + 1
        if (v[k] as u64) * (k as u64 + 2) < (v[k + 1] as u64) * (k as u64 + 1) {
            asc_d += 1;
        }
    }
    let tail = affine_tail_holds(v[n - 2] as u64, v[n - 1] as u64, n as u64);
    Ok(InvStats { exc, asc_d, affine_asc_d: asc_d + u32::from(tail) })
}

/// `t_i` counts earlier entries of larger absolute value; positives map to `t_i`,
/// negatives to `2i - 1 - t_i`.
pub fn psi(sigma: &SignedPerm) -> InvSeq {
    let s = sigma.entries();
    let e = s
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            let t = s[..k].iter().filter(|w| w.abs() > v.abs()).count() as u32;
            if v > 0 {
                t
            } else {
                2 * k as u32 + 1 - t
            }
        })
        .collect();
    InvSeq(e)
}

/// Inverse of [`psi`]: signs come from `e_i >= i`, absolute values are placed from the
/// right, each being the `(t_i + 1)`-th largest value not yet used.
pub fn psi_inverse(e: &InvSeq) -> SignedPerm {
    let v = e.entries();
    let n = v.len();
    let mut remaining: Vec<i32> = (1..=n as i32).collect();
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        let i = k as u32 + 1;
        let negative = v[k] >= i;
        let t = if negative { 2 * i - 1 - v[k] } else { v[k] } as usize;
        let value = remaining.remove(remaining.len() - 1 - t);
        out[k] = if negative { -value } else { value };
    }
    SignedPerm(out)
}

/// `e_n` of `psi(sigma)` from the last entry alone.
fn last_psi_entry(s: &[i32]) -> usize {
    let n = s.len();
    let a = s[n - 1].unsigned_abs() as usize;
    if s[n - 1] > 0 {
        n - a
    } else {
        n + a - 1
    }
}

/// Families with an exhaustive enumeration oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BruteFamily {
    /// Eulerian polynomial over `S_{n+1}`.
    A,
    B,
    Bq,
    Dq,
    Tq,
    TildeB,
    TildeD,
    TildeTViaB,
    RefinedTq(usize),
    RefinedTildeT(usize),
}

/// Parses `name(i)` with a nonnegative integer argument.
pub(crate) fn parse_indexed(s: &str, name: &str) -> Option<Result<usize>> {
    let inner = s.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')?;
    Some(inner.trim().parse().map_err(|_| Error::Usage(format!("bad index in {s:?}"))))
}

impl FromStr for BruteFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if let Some(i) = parse_indexed(s, "refined_Tq") {
            return Ok(BruteFamily::RefinedTq(i?));
        }
        if let Some(i) = parse_indexed(s, "refined_tildeT") {
            return Ok(BruteFamily::RefinedTildeT(i?));
        }
        Ok(match s {
            "A" => BruteFamily::A,
            "B" => BruteFamily::B,
            "Bq" => BruteFamily::Bq,
            "Dq" => BruteFamily::Dq,
            "Tq" => BruteFamily::Tq,
            "tildeB" => BruteFamily::TildeB,
            "tildeD" => BruteFamily::TildeD,
            "tildeT_via_B" => BruteFamily::TildeTViaB,
            other => return Err(Error::Usage(format!("unknown brute-force family {other:?}"))),
        })
    }
}

impl fmt::Display for BruteFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BruteFamily::A => write!(f, "A"),
            BruteFamily::B => write!(f, "B"),
            BruteFamily::Bq => write!(f, "Bq"),
            BruteFamily::Dq => write!(f, "Dq"),
            BruteFamily::Tq => write!(f, "Tq"),
            BruteFamily::TildeB => write!(f, "tildeB"),
            BruteFamily::TildeD => write!(f, "tildeD"),
            BruteFamily::TildeTViaB => write!(f, "tildeT_via_B"),
            BruteFamily::RefinedTq(i) => write!(f, "refined_Tq({i})"),
            BruteFamily::RefinedTildeT(i) => write!(f, "refined_tildeT({i})"),
        }
    }
}

/// `grid[x_power][q_power]` occurrence counts.
type Grid = Vec<Vec<u64>>;

fn add_grids(mut a: Grid, b: Grid) -> Grid {
    for (ra, rb) in a.iter_mut().zip(b) {
        for (ca, cb) in ra.iter_mut().zip(rb) {
            *ca += cb;
        }
    }
    a
}

/// Sums `q^{qexp} x^{xexp}` over signed permutations, split across sign masks in parallel.
fn signed_grid(
    n: usize,
    even_only: bool,
    weight: impl Fn(&[i32]) -> Option<(usize, usize)> + Sync,
) -> Grid {
    let empty = vec![vec![0u64; n + 2]; n + 2];
    (0u32..1 << n)
        .into_par_iter()
        .filter(|m| !even_only || m.count_ones() % 2 == 0)
        .map(|mask| {
            let mut grid = empty.clone();
            let mut perm: Vec<u8> = (1..=n as u8).collect();
            let mut buf = vec![0i32; n];
            loop {
                apply_signs(&perm, mask, &mut buf);
                if let Some((xe, qe)) = weight(&buf) {
                    grid[xe][qe] += 1;
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
            grid
        })
        .reduce(|| empty.clone(), add_grids)
}

fn grid_to_qx(grid: &Grid) -> QXPoly {
    QXPoly::new(
        grid.iter()
            .map(|row| QPoly::new(row.iter().map(|&c| BigInt::from(c)).collect()))
            .collect(),
    )
}

fn grid_to_x(grid: &Grid) -> XPoly {
    XPoly::from_bigints(grid.iter().map(|row| BigInt::from(row.iter().sum::<u64>())))
}

fn eulerian_brute(m: usize) -> XPoly {
    let mut counts = vec![0u64; m.max(1)];
    let mut perm: Vec<u8> = (1..=m as u8).collect();
    loop {
        counts[perm.windows(2).filter(|w| w[0] > w[1]).count()] += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    XPoly::from_bigints(counts.into_iter().map(BigInt::from))
}

/// Exhaustive generating polynomial of `family` at rank `n`.
///
/// `A` sums over `S_{n+1}`; `Dq` and `tildeD` over even signed permutations; everything
/// else over all of `B_n`, with the refined variants selecting `e_n = i` after `psi`.
pub fn brute_polynomial(family: BruteFamily, n: usize, cap: usize) -> Result<AnyPoly> {
    check_cap(n, cap)?;
    let needs_pair = !matches!(family, BruteFamily::A | BruteFamily::B | BruteFamily::Bq);
    if needs_pair && n < 2 {
        return Err(Error::Range(format!("{family} needs n >= 2")));
    }
    if let BruteFamily::RefinedTq(i) | BruteFamily::RefinedTildeT(i) = family {
        if i >= 2 * n {
            return Err(Error::Range(format!("index {i} outside 0..{}", 2 * n)));
        }
    }
    let full_stats = |s: &[i32]| {
        if s.len() >= 2 {
            stats_of(s)
        } else {
            let des_b = u32::from(s[0] < 0);
            let neg = u32::from(s[0] < 0);
            StatRecord {
                neg,
                neg_d: 0,
                des_b,
                des_d: des_b,
                affine_des_b: des_b,
                affine_des_d: des_b,
                parity_even: neg == 0,
            }
        }
    };
    let poly: AnyPoly = match family {
        BruteFamily::A => eulerian_brute(n + 1).into(),
        BruteFamily::B => grid_to_x(&signed_grid(n, false, |s| {
            Some((full_stats(s).des_b as usize, 0))
        }))
        .into(),
        BruteFamily::Bq => grid_to_qx(&signed_grid(n, false, |s| {
            let st = full_stats(s);
            Some((st.des_b as usize, st.neg as usize))
        }))
        .into(),
        BruteFamily::Dq => grid_to_qx(&signed_grid(n, true, |s| {
            let st = stats_of(s);
            Some((st.des_d as usize, st.neg_d as usize))
        }))
        .into(),
        BruteFamily::Tq => grid_to_qx(&signed_grid(n, false, |s| {
            let st = stats_of(s);
            Some((st.des_d as usize, st.neg as usize))
        }))
        .into(),
        BruteFamily::TildeB => {
            grid_to_x(&signed_grid(n, false, |s| Some((stats_of(s).affine_des_b as usize, 0))))
                .into()
        }
        BruteFamily::TildeD => {
            grid_to_x(&signed_grid(n, true, |s| Some((stats_of(s).affine_des_d as usize, 0))))
                .into()
        }
        BruteFamily::TildeTViaB => {
            grid_to_x(&signed_grid(n, false, |s| Some((stats_of(s).affine_des_d as usize, 0))))
                .into()
        }
        BruteFamily::RefinedTq(i) => grid_to_qx(&signed_grid(n, false, |s| {
            (last_psi_entry(s) == i).then(|| {
                let st = stats_of(s);
                (st.des_d as usize, st.neg as usize)
            })
        }))
        .into(),
        BruteFamily::RefinedTildeT(i) => grid_to_x(&signed_grid(n, false, |s| {
            (last_psi_entry(s) == i).then(|| (stats_of(s).affine_des_d as usize, 0))
        }))
        .into(),
    };
    Ok(poly)
}
