use std::collections::HashSet;

use proptest::prelude::*;
use weylpoly::exactpoly::{AnyPoly, QPoly};
use weylpoly::weylcomb::{
    brute_polynomial, enumerate, even_signed_perms, inv_stats, inversion_sequences, psi, psi_inverse, signed_perms,
    stats, BruteFamily, EnumKind, InvSeq, SignedPerm,
};
use weylpoly::Error;

#[test]
fn enumeration_sizes_and_uniqueness() {
    for n in 1..=5usize {
        let fact: usize = (1..=n).product();
        let all: HashSet<SignedPerm> = signed_perms(n, 8).unwrap().collect();
        assert_eq!(all.len(), (1 << n) * fact);
        assert_eq!(even_signed_perms(n, 8).unwrap().count(), (1 << (n - 1)) * fact);
        let seqs: HashSet<InvSeq> = inversion_sequences(n, 8).unwrap().collect();
        assert_eq!(seqs.len(), (1 << n) * fact);
    }
    assert_eq!(enumerate(EnumKind::SignedPerms, 2, 8).unwrap().count(), 8);
    assert_eq!(enumerate(EnumKind::EvenSignedPerms, 3, 8).unwrap().count(), 24);
    assert_eq!(enumerate(EnumKind::InversionSequences, 3, 8).unwrap().count(), 48);
    assert!(matches!(signed_perms(9, 8), Err(Error::Resource { n: 9, cap: 8 })));
    assert!(signed_perms(9, 9).is_ok());
}

#[test]
fn statistic_examples() {
    let s = stats(&SignedPerm::new(vec![-2, 1, -3]).unwrap()).unwrap();
    assert_eq!((s.neg, s.neg_d, s.des_b, s.des_d, s.affine_des_d), (2, 1, 2, 2, 2));
    let s = stats(&SignedPerm::new(vec![2, -1]).unwrap()).unwrap();
    assert_eq!((s.des_d, s.affine_des_d), (1, 2));
    let id = stats(&SignedPerm::identity(4)).unwrap();
    assert_eq!((id.des_b, id.des_d, id.affine_des_b, id.neg), (0, 0, 1, 0));
    assert!(stats(&SignedPerm::new(vec![-1]).unwrap()).is_err());

    let e = inv_stats(&InvSeq::new(vec![1, 1, 5]).unwrap()).unwrap();
    assert_eq!((e.exc, e.asc_d, e.affine_asc_d), (2, 2, 2));
    let e = inv_stats(&InvSeq::new(vec![0, 2]).unwrap()).unwrap();
    assert_eq!((e.exc, e.asc_d, e.affine_asc_d), (1, 1, 2));
    let e = inv_stats(&InvSeq::new(vec![0, 0, 0, 0]).unwrap()).unwrap();
    assert_eq!((e.exc, e.asc_d, e.affine_asc_d), (0, 0, 1));
    assert!(InvSeq::new(vec![2, 0]).is_err());
}

#[test]
fn psi_examples() {
    assert_eq!(psi(&SignedPerm::new(vec![-2, 1, -3]).unwrap()).entries(), &[1, 1, 5]);
    assert_eq!(psi(&SignedPerm::new(vec![2, -1]).unwrap()).entries(), &[0, 2]);
    assert_eq!(psi(&SignedPerm::identity(5)).entries(), &[0; 5]);
}

#[test]
fn psi_properties_exhaustive() {
    for n in 2..=6usize {
        let mut image = HashSet::new();
        for sigma in signed_perms(n, 8).unwrap() {
            let e = psi(&sigma);
            assert_eq!(psi_inverse(&e), sigma);
            let s = sigma.entries();
            let v = e.entries();
            for k in 0..n {
                assert_eq!(s[k] < 0, v[k] as usize > k, "{sigma}");
            }
            let st = stats(&sigma).unwrap();
            let it = inv_stats(&e).unwrap();
            assert_eq!(st.neg, it.exc);
            assert_eq!(st.des_d, it.asc_d);
            assert_eq!(s[0] + s[1] < 0, 2 * v[0] + v[1] >= 3);
            assert_eq!(st.affine_des_d, it.affine_asc_d, "{sigma}");
            image.insert(e);
        }
        assert_eq!(image.len(), inversion_sequences(n, 8).unwrap().count());
    }
}

#[test]
fn brute_force_consistency() {
    for n in 2..=6 {
        let tq = brute_polynomial(BruteFamily::Tq, n, 8).unwrap();
        let dq = brute_polynomial(BruteFamily::Dq, n, 8).unwrap();
        let (AnyPoly::QX(tq), AnyPoly::QX(dq)) = (tq, dq) else { panic!("bivariate families") };
        assert_eq!(tq, dq.scale_q(&QPoly::one_plus_q()));
        let refined: weylpoly::exactpoly::QXPoly = (0..2 * n)
            .map(|i| brute_polynomial(BruteFamily::RefinedTq(i), n, 8).unwrap().as_qx().unwrap().clone())
            .sum();
        assert_eq!(refined, tq);
    }
}

fn arb_signed(n: usize) -> impl Strategy<Value = SignedPerm> {
    (Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n))
        .prop_map(|(p, signs)| {
            SignedPerm::new(p.into_iter().zip(signs).map(|(v, neg)| if neg { -v } else { v }).collect()).unwrap()
        })
}

proptest! {
    #[test]
    fn psi_round_trip_rank_eight(sigma in arb_signed(8)) {
        prop_assert_eq!(psi_inverse(&psi(&sigma)), sigma);
    }
}
