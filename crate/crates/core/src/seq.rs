//! Sequence properties: unimodality, log-concavity, LC+, the real-roots
//! property, and the final-third check.

use crate::engines::{indpoly_auto, IndPolyResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{sturm, IntPoly};
use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

/// Which kind of constraint broke first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    Unimodality,
    LogConcavity,
    Positivity,
}

/// Verdicts for one finite sequence per the basic definitions: position
/// `first_violation` is the earliest index witnessing the failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceVerdict {
    pub unimodal: bool,
    pub mode_index: Option<usize>,
    pub log_concave: bool,
    pub lc_plus: bool,
    /// `None` when not requested (Sturm chains on huge polynomials are costly).
    pub real_roots: Option<bool>,
    pub first_violation: Option<(usize, ViolationKind)>,
    pub sequence_length: usize,
}

/// Analyze a nonempty integer sequence.
///
/// Unimodality and log-concavity follow the definitions verbatim (zeros are
/// allowed); LC+ additionally requires every entry strictly positive, which
/// is what makes the chain LC+ => log-concave => unimodal valid.
pub fn analyze(seq: &[BigInt]) -> Result<SequenceVerdict> {
    if seq.is_empty() {
        return Err(Error::BadInput("empty sequence".into()));
    }
    let n = seq.len();

    // unimodality: rise weakly, then fall weakly
    let mut unimodal = true;
    let mut uni_violation = None;
    let mut descended = false;
    for k in 0..n - 1 {
        if seq[k] > seq[k + 1] {
            descended = true;
        } else if seq[k] < seq[k + 1] && descended {
            unimodal = false;
            uni_violation = Some(k);
            break;
        }
    }
    // smallest valid mode: the first index attaining the maximum
    let mode_index = if unimodal {
        let max = seq.iter().max().unwrap();
        seq.iter().position(|a| a == max)
    } else {
        None
    };

    let mut log_concave = true;
    let mut lc_violation = None;
    for k in 1..n.saturating_sub(1) {
        if &seq[k] * &seq[k] < &seq[k - 1] * &seq[k + 1] {
            log_concave = false;
            lc_violation = Some(k);
            break;
        }
    }

    let all_positive = seq.iter().all(|a| a.is_positive());
    let pos_violation = seq.iter().position(|a| !a.is_positive());
    let lc_plus = log_concave && all_positive;

    let first_violation = if !unimodal {
        uni_violation.map(|k| (k, ViolationKind::Unimodality))
    } else if !log_concave {
        lc_violation.map(|k| (k, ViolationKind::LogConcavity))
    } else if !all_positive {
        pos_violation.map(|k| (k, ViolationKind::Positivity))
    } else {
        None
    };

    Ok(SequenceVerdict {
        unimodal,
        mode_index,
        log_concave,
        lc_plus,
        real_roots: None,
        first_violation,
        sequence_length: n,
    })
}

/// Analyze the coefficient sequence of a polynomial.
pub fn analyze_poly(p: &IntPoly) -> Result<SequenceVerdict> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    analyze(p.coeffs())
}

/// Analyze and also decide the real-roots property exactly.
pub fn analyze_poly_with_roots(p: &IntPoly) -> Result<SequenceVerdict> {
    let mut v = analyze_poly(p)?;
    v.real_roots = Some(sturm::real_roots_property(p)?);
    Ok(v)
}

/// True iff the polynomial factors into `deg` linear terms over the reals.
pub fn check_real_roots(p: &IntPoly) -> Result<bool> {
    sturm::real_roots_property(p)
}

/// Result of the final-third suffix check.
#[derive(Clone, Debug, Serialize)]
pub struct FinalThirdReport {
    pub holds: bool,
    /// First index of the checked suffix, `ceil((2 alpha - 1)/3)`.
    pub start_index: usize,
    pub alpha: usize,
    /// First offending index when the suffix is not non-increasing.
    pub violation_index: Option<usize>,
}

/// Check that `i_t(G)` is non-increasing for
/// `t = ceil((2 alpha - 1)/3), ..., alpha`.
pub fn final_third_decreasing(g: &Graph) -> Result<FinalThirdReport> {
    let IndPolyResult { poly, alpha, .. } = indpoly_auto(g)?;
    Ok(final_third_of_poly(&poly, alpha))
}

pub fn final_third_of_poly(poly: &IntPoly, alpha: usize) -> FinalThirdReport {
    let start = if alpha == 0 { 0 } else { (2 * alpha - 1).div_ceil(3) };
    let mut violation_index = None;
    for t in start..alpha {
        if poly.coeff(t) < poly.coeff(t + 1) {
            violation_index = Some(t);
            break;
        }
    }
    FinalThirdReport { holds: violation_index.is_none(), start_index: start, alpha, violation_index }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, star};

    fn seq(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn p4_coefficients_are_lc_plus() {
        let v = analyze(&seq(&[1, 4, 3])).unwrap();
        assert!(v.unimodal && v.log_concave && v.lc_plus);
        assert_eq!(v.mode_index, Some(1));
    }

    #[test]
    fn zigzag_fails_unimodality_at_the_valley() {
        let v = analyze(&seq(&[1, 2, 1, 2])).unwrap();
        assert!(!v.unimodal);
        assert_eq!(v.first_violation, Some((2, ViolationKind::Unimodality)));
        assert!(!v.lc_plus);
    }

    #[test]
    fn constant_sequence_is_everything() {
        let v = analyze(&seq(&[1, 1, 1])).unwrap();
        assert!(v.unimodal && v.log_concave && v.lc_plus);
        assert_eq!(v.mode_index, Some(0));
    }

    #[test]
    fn empty_sequence_is_an_error() {
        assert!(analyze(&[]).is_err());
    }

    #[test]
    fn real_roots_small_cases() {
        assert!(check_real_roots(&IntPoly::from_i64(&[1, 2])).unwrap());
        assert!(check_real_roots(&IntPoly::from_i64(&[1, 3, 1])).unwrap());
        assert!(!check_real_roots(&IntPoly::from_i64(&[1, 1, 1])).unwrap());
    }

    #[test]
    fn final_third_on_named_trees() {
        // star K_{1,3}: alpha = 3, start = ceil(5/3) = 2, i2 = 3 >= i3 = 1
        let r = final_third_decreasing(&star(3)).unwrap();
        assert!(r.holds);
        assert_eq!(r.start_index, 2);
        // P4: alpha = 2, start = 1, 4 >= 3
        let r = final_third_decreasing(&path(4)).unwrap();
        assert!(r.holds);
        assert_eq!(r.start_index, 1);
    }

    #[test]
    fn reversal_preserves_unimodality_flag() {
        for s in [vec![1i64, 2, 3, 1], vec![3, 1, 2], vec![5, 5, 2, 2], vec![1, 0, 1]] {
            let fwd = analyze(&seq(&s)).unwrap().unimodal;
            let mut rev = s.clone();
            rev.reverse();
            let bwd = analyze(&seq(&rev)).unwrap().unimodal;
            assert_eq!(fwd, bwd, "sequence {s:?}");
        }
    }
}
