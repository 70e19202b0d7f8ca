//! Recurrence outputs against enumerations written from the definitions, independent of
//! the library's own enumerators.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use weylpoly::exactpoly::{QPoly, QXPoly, XPoly};
use weylpoly::recurrences::{
    assemble_a, assemble_d, assemble_dq, assemble_tilde_b, assemble_tilde_d, assemble_tq, refined_affine_t,
    refined_tq,
};

fn permutations(n: usize) -> Vec<Vec<i32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n as i32);
            out.push(q);
        }
    }
    out
}

fn signed(n: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for p in permutations(n) {
        for mask in 0..1u32 << n {
            out.push(p.iter().enumerate().map(|(k, &v)| if mask >> k & 1 == 1 { -v } else { v }).collect());
        }
    }
    out
}

fn inversion_sequences(n: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for i in 1..=n as u64 {
        out = out
            .into_iter()
            .flat_map(|e: Vec<u64>| {
                (0..2 * i).map(move |v| {
                    let mut f = e.clone();
                    f.push(v);
                    f
                })
            })
            .collect();
    }
    out
}

fn negs(s: &[i32]) -> usize {
    s.iter().filter(|v| **v < 0).count()
}

fn des_d(s: &[i32]) -> usize {
    usize::from(s[0] + s[1] < 0) + s.windows(2).filter(|w| w[0] > w[1]).count()
}

fn des_b(s: &[i32]) -> usize {
    usize::from(s[0] < 0) + s.windows(2).filter(|w| w[0] > w[1]).count()
}

fn tail(s: &[i32]) -> usize {
    let n = s.len();
    usize::from(s[n - 2] + s[n - 1] > 0)
}

/// Type D ascents, with `e_i / i < e_{i+1} / (i+1)` and `e_1 + e_2 / 2 >= 3/2`.
fn asc_d(e: &[u64]) -> usize {
    let mut c = usize::from(2 * e[0] + e[1] >= 3);
    for i in 1..e.len() as u64 {
        let (a, b) = (e[i as usize - 1], e[i as usize]);
        if a * (i + 1) < b * i {
            c += 1;
        }
    }
    c
}

fn affine_asc_d(e: &[u64]) -> usize {
    let n = e.len() as u64;
    // e_{n-1}/(n-1) + e_n/n < (2n-1)/n
    asc_d(e) + usize::from(n * e[e.len() - 2] + (n - 1) * e[e.len() - 1] < (2 * n - 1) * (n - 1))
}

fn exc(e: &[u64]) -> usize {
    e.iter().enumerate().filter(|(k, v)| **v > *k as u64).count()
}

fn qx(terms: impl Iterator<Item = (usize, usize)>) -> QXPoly {
    let mut grid: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for t in terms {
        *grid.entry(t).or_default() += 1;
    }
    let xdeg = grid.keys().map(|k| k.0).max().unwrap_or(0);
    let qdeg = grid.keys().map(|k| k.1).max().unwrap_or(0);
    QXPoly::new(
        (0..=xdeg)
            .map(|a| QPoly::new((0..=qdeg).map(|b| BigInt::from(*grid.get(&(a, b)).unwrap_or(&0))).collect()))
            .collect(),
    )
}

fn x(terms: impl Iterator<Item = usize>) -> XPoly {
    let mut counts = vec![0i64; 16];
    for t in terms {
        counts[t] += 1;
    }
    XPoly::from_ints(&counts)
}

#[test]
fn bivariate_families() {
    for n in 2..=5 {
        let bn = signed(n);
        let from_perms = qx(bn.iter().map(|s| (des_d(s), negs(s))));
        let seqs = inversion_sequences(n);
        let from_seqs = qx(seqs.iter().map(|e| (asc_d(e), exc(e))));
        assert_eq!(assemble_tq(n).unwrap(), from_perms, "n = {n}");
        assert_eq!(from_perms, from_seqs, "n = {n}");

        let even: Vec<&Vec<i32>> = bn.iter().filter(|s| negs(s) % 2 == 0).collect();
        let dq = qx(even.iter().map(|s| (des_d(s), negs(&s[1..]))));
        assert_eq!(assemble_dq(n).unwrap(), dq, "n = {n}");
        assert_eq!(assemble_d(n).unwrap(), x(even.iter().map(|s| des_d(s))), "n = {n}");

        let refined = refined_tq(n).unwrap().polys;
        for (i, p) in refined.iter().enumerate() {
            let want = qx(seqs.iter().filter(|e| e[n - 1] == i as u64).map(|e| (asc_d(e), exc(e))));
            assert_eq!(*p, want, "n = {n}, i = {i}");
        }
    }
}

#[test]
fn affine_families() {
    for n in 2..=5 {
        let bn = signed(n);
        let even = bn.iter().filter(|s| negs(s) % 2 == 0);
        assert_eq!(assemble_tilde_d(n).unwrap(), x(even.map(|s| des_d(s) + tail(s))), "n = {n}");
        assert_eq!(assemble_tilde_b(n).unwrap(), x(bn.iter().map(|s| des_b(s) + tail(s))), "n = {n}");
        if n >= 3 {
            let seqs = inversion_sequences(n);
            for (i, p) in refined_affine_t(n).unwrap().polys.iter().enumerate() {
                let want = x(seqs.iter().filter(|e| e[n - 1] == i as u64).map(|e| affine_asc_d(e)));
                assert_eq!(*p, want, "n = {n}, i = {i}");
            }
        }
    }
}

#[test]
fn eulerian_at_q_zero() {
    for n in 1..=5 {
        let want = x(permutations(n + 1).iter().map(|p| p.windows(2).filter(|w| w[0] > w[1]).count()));
        assert_eq!(assemble_a(n).unwrap(), want, "n = {n}");
    }
}

#[test]
fn worked_values() {
    assert_eq!(assemble_tilde_d(3).unwrap(), XPoly::from_ints(&[0, 4, 16, 4]));
    assert_eq!(assemble_tilde_b(3).unwrap(), XPoly::from_ints(&[0, 10, 28, 10]));
    assert_eq!(assemble_d(2).unwrap(), XPoly::from_ints(&[1, 2, 1]));
    assert_eq!(assemble_a(2).unwrap(), XPoly::from_ints(&[1, 4, 1]));
    let seed = QXPoly::from_rows(&[&[1, 1], &[1, 2, 1], &[0, 1, 1]]);
    assert_eq!(assemble_tq(2).unwrap(), seed);
}
