use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::xpoly::XPoly;

/// Shape properties of a coefficient sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffProps {
    pub nonnegative: bool,
    pub symmetric: bool,
    pub unimodal: bool,
    pub log_concave: bool,
}

/// Symmetry, unimodality and log-concavity are judged on the coefficients between the
/// lowest and highest nonzero terms, so `4x + 16x^2 + 4x^3` counts as symmetric.
pub fn coeff_props(p: &XPoly) -> CoeffProps {
    let nonnegative = p.is_nonnegative();
    let (Some(lo), Some(hi)) = (p.lowest_degree(), p.degree()) else {
        return CoeffProps { nonnegative, symmetric: true, unimodal: true, log_concave: true };
    };
    let seg = &p.coeffs()[lo..=hi];

    let symmetric = seg.iter().eq(seg.iter().rev());

    // rises weakly, then falls weakly
    let mut k = 0;
    while k + 1 < seg.len() && seg[k] <= seg[k + 1] {
        k += 1;
    }
    while k + 1 < seg.len() && seg[k] >= seg[k + 1] {
        k += 1;
    }
    let unimodal = k + 1 == seg.len();

    let log_concave = seg
        .windows(3)
        .all(|w| &w[1] * &w[1] >= &w[0] * &w[2]);

    CoeffProps { nonnegative, symmetric, unimodal, log_concave }
}

/// Number of sign changes in the coefficient sequence, ignoring zeros.
pub fn coefficient_sign_changes(p: &XPoly) -> usize {
    let signs: Vec<bool> =
        p.coeffs().iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_d3_has_all_properties() {
        let props = coeff_props(&XPoly::from_ints(&[0, 4, 16, 4]));
        assert_eq!(
            props,
            CoeffProps { nonnegative: true, symmetric: true, unimodal: true, log_concave: true }
        );
    }

    #[test]
    fn eulerian_a2() {
        let props = coeff_props(&XPoly::from_ints(&[1, 4, 1]));
        assert!(props.nonnegative && props.symmetric && props.unimodal && props.log_concave);
    }

    #[test]
    fn gap_sequence_fails_log_concavity() {
        let props = coeff_props(&XPoly::from_ints(&[1, 0, 1]));
        assert!(!props.log_concave);
        assert!(!props.unimodal);
        assert!(props.symmetric);
    }

    #[test]
    fn asymmetric_and_negative() {
        let props = coeff_props(&XPoly::from_ints(&[1, -3, 2]));
        assert!(!props.nonnegative);
        assert!(!props.symmetric);
        assert_eq!(coefficient_sign_changes(&XPoly::from_ints(&[1, -3, 2])), 2);
    }
}
