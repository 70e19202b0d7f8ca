//! Published reference values at rank 4, transcribed coefficient by coefficient.

use crate::exactpoly::{QPoly, QXPoly, XPoly};

/// `T_{4,i}(x;q) / (1+q)`, rows indexed by the power of `x`, entries by the power of `q`.
const T4_OVER_ONE_PLUS_Q: [&[&[i64]]; 8] = [
    &[&[1], &[4, 6, 1], &[1, 6, 4], &[0, 0, 1]],
    &[&[], &[4, 5, 1], &[2, 6, 4], &[0, 1, 1]],
    &[&[], &[2, 4, 1], &[4, 6, 4], &[0, 2, 1]],
    &[&[], &[1, 3, 1], &[4, 6, 4], &[1, 3, 1]],
    &[&[], &[0, 1, 3, 1], &[0, 4, 6, 4], &[0, 1, 3, 1]],
    &[&[], &[0, 1, 2], &[0, 4, 6, 4], &[0, 1, 4, 2]],
    &[&[], &[0, 1, 1], &[0, 4, 6, 2], &[0, 1, 5, 4]],
    &[&[], &[0, 1], &[0, 4, 6, 1], &[0, 1, 6, 4], &[0, 0, 0, 1]],
];

pub fn t4() -> Vec<QXPoly> {
    T4_OVER_ONE_PLUS_Q
        .iter()
        .map(|rows| QXPoly::from_rows(rows).scale_q(&QPoly::one_plus_q()))
        .collect()
}

/// `K_{4,i}(x)` in ascending coefficients, with the zeros as printed (4 significant figures).
const K4: [(&[i64], &[f64]); 8] = [
    (&[2, 32, 50, 12], &[-3.396, -0.7008, -0.07004]),
    (&[0, 26, 52, 18], &[-2.246, -0.6432, 0.0]),
    (&[0, 18, 52, 26], &[-1.555, -0.4453, 0.0]),
    (&[0, 12, 50, 32, 2], &[-14.28, -1.427, -0.2945, 0.0]),
    (&[0, 12, 50, 32, 2], &[-14.28, -1.427, -0.2945, 0.0]),
    (&[0, 6, 48, 38, 4], &[-8.029, -1.331, -0.1404, 0.0]),
    (&[0, 4, 38, 48, 6], &[-7.124, -0.7513, -0.1246, 0.0]),
    (&[0, 2, 32, 50, 12], &[-3.396, -0.7008, -0.07004, 0.0]),
];

pub fn k4() -> Vec<(XPoly, Vec<f64>)> {
    K4.iter().map(|(c, r)| (XPoly::from_ints(c), r.to_vec())).collect()
}

/// Relative error allowed between an isolated zero and its 4-significant-figure print.
pub const ROOT_RELATIVE_TOLERANCE: f64 = 5e-4;

pub struct CTable {
    pub i: usize,
    pub j: usize,
    pub m: usize,
    pub poly: QXPoly,
    pub determinants: Vec<QPoly>,
}

/// `c * q^k * prod f^e`.
fn factored(c: i64, q_power: usize, factors: &[(&[i64], usize)]) -> QPoly {
    &QPoly::constant(c).mul_q_pow(q_power) * &QPoly::product(factors)
}

const Q1: &[i64] = &[1, 1];
const Q2M1: &[i64] = &[-1, 0, 1];

pub fn c_tables() -> Vec<CTable> {
    let c01 = CTable {
        i: 0,
        j: 1,
        m: 1,
        poly: QXPoly::from_rows(&[
            &[1],
            &[4, 5, 1],
            &[4, 6, 1],
            &[2, 6, 4],
            &[1, 6, 4],
            &[0, 1, 1],
            &[0, 0, 1],
        ]),
        determinants: vec![
            factored(1, 1, &[(Q1, 1)]),
            factored(1, 1, &[(&[1, 5, 4], 1)]),
            factored(2, 1, &[(Q1, 2), (&[1, 4, 7], 1)]),
            factored(4, 1, &[(Q1, 2), (&[1, 1, 1, 3], 1)]),
            factored(12, 1, &[(Q1, 3), (Q2M1, 2)]),
            factored(12, 1, &[(Q1, 3), (Q2M1, 2)]),
        ],
    };
    let c06 = CTable {
        i: 0,
        j: 6,
        m: 1,
        poly: QXPoly::from_rows(&[
            &[1],
            &[0, 1, 1],
            &[4, 6, 1],
            &[0, 4, 6, 2],
            &[1, 6, 4],
            &[0, 1, 5, 4],
            &[0, 0, 1],
        ]),
        determinants: vec![
            factored(1, 1, &[(&[1, 5, 4], 1)]),
            factored(1, 1, &[(&[1, 11, 34, 38, 14], 1)]),
            factored(4, 3, &[(Q1, 2), (&[1, 1, 1, 3], 1)]),
            factored(2, 3, &[(Q1, 2), (C06_QUINTIC, 1)]),
            factored(12, 5, &[(Q1, 3), (Q2M1, 2)]),
            factored(12, 5, &[(Q1, 3), (Q2M1, 2)]),
        ],
    };
    let c16_inner: [&[i64]; 6] = [&[0, 1], &[4, 1], &[0, 4, 2], &[2, 4], &[0, 1, 4], &[0, 1]];
    let c16 = CTable {
        i: 1,
        j: 6,
        m: 2,
        poly: QXPoly::from_rows(&c16_inner).scale_q(&QPoly::one_plus_q()),
        determinants: vec![
            factored(1, 1, &[(&[1, 5, 4], 1)]),
            factored(2, 1, &[(Q1, 2), (&[1, 4, 7], 1)]),
            factored(4, 2, &[(Q1, 3), (&[1, 1, 1, 3], 1)]),
            factored(12, 2, &[(Q1, 4), (Q2M1, 2)]),
            factored(12, 3, &[(Q1, 5), (Q2M1, 2)]),
        ],
    };
    vec![c01, c06, c16]
}

/// The quintic factor `6q^5 + 12q^4 - 12q^3 - 11q^2 + 10q + 7` of the fourth determinant
/// of `C_{0,6}`; it has mixed signs, so positivity needs a real argument.
pub const C06_QUINTIC: &[i64] = &[7, 10, -11, -12, 12, 6];
