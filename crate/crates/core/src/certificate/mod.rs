//! Separating functionals `l_a(f) = Σ a_j f(v_j)` on a Cayley–Bacharach
//! configuration: the sufficient separation inequality, the explicit weight
//! vector, the moment matrix, verification, and positive perturbations.
//!
//! Point positions are 0-based in this API; text output and files use 1-based
//! positions.

mod format;
mod moment;
mod perturb;
mod verify;

use std::fmt;

use num_traits::{One, Signed, Zero};

pub use format::{CertificateMeta, TRUST_NOTE};
pub use moment::{moment_matrix, MomentMatrix};
pub use perturb::{functional, perturb, Perturbation};
pub use verify::{verify, CbCheck, VerificationReport};

use crate::configuration::{
    check_points, pencil_degree, residual_point, CBSystem, Point, PointConfig, ResidualOptions,
};
use crate::error::{Error, Result};
use crate::exactq::{fmt_rat, Rat};
use crate::forms::Form;

/// Both sides of the separation inequality `lhs < rhs` for one choice of the
/// point carrying the negative weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub neg_index: usize,
    pub lhs: Rat,
    pub rhs: Rat,
    pub holds: bool,
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "negative at point {}: lhs = {} {} rhs = {} ({})",
            self.neg_index + 1,
            fmt_rat(&self.lhs),
            if self.holds { "<" } else { ">=" },
            fmt_rat(&self.rhs),
            if self.holds { "holds" } else { "fails" }
        )
    }
}

/// A separating functional on a full configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub config: PointConfig,
    pub u: Vec<Rat>,
    pub a: Vec<Rat>,
    pub neg_index: usize,
    pub l_value: Rat,
    pub meta: CertificateMeta,
}

impl Certificate {
    /// `Σ_j u_j² / a_j`; zero exactly when the negative weight sits on the PSD boundary.
    pub fn cb_identity_sum(&self) -> Option<Rat> {
        cb_identity_sum(&self.u, &self.a)
    }

    pub fn nvars(&self) -> usize {
        self.config.nvars()
    }
}

pub(crate) fn cb_identity_sum(u: &[Rat], a: &[Rat]) -> Option<Rat> {
    if u.len() != a.len() || a.iter().any(Zero::is_zero) {
        return None;
    }
    Some(u.iter().zip(a).map(|(u, a)| u * u / a).sum())
}

fn check_target(p: &Form, nvars: usize) -> Result<()> {
    if p.nvars() != nvars {
        return Err(Error::DimensionMismatch {
            expected: nvars,
            found: p.nvars(),
        });
    }
    let degree = 2 * pencil_degree(nvars);
    if p.degree() != degree {
        return Err(Error::DimensionMismatch {
            expected: degree as usize,
            found: p.degree() as usize,
        });
    }
    Ok(())
}

/// Values of `p` at the configuration, after checking that `p` vanishes at the
/// declared zeros and is positive at every other point.
pub fn zero_set_values(p: &Form, cfg: &PointConfig) -> Result<Vec<Rat>> {
    let values = cfg
        .points()
        .iter()
        .map(|v| p.evaluate(v))
        .collect::<Result<Vec<_>>>()?;
    for (j, value) in values.iter().enumerate() {
        if j < cfg.zero_count() {
            if !value.is_zero() {
                return Err(Error::ZeroSetMismatch {
                    index: j + 1,
                    message: format!("declared zero but p = {}", fmt_rat(value)),
                });
            }
        } else if !value.is_positive() {
            return Err(Error::ZeroSetMismatch {
                index: j + 1,
                message: format!("expected p > 0 but p = {}", fmt_rat(value)),
            });
        }
    }
    Ok(values)
}

fn check_neg_index(sys: &CBSystem, neg_index: usize) -> Result<()> {
    let k = sys.config.zero_count();
    if neg_index < k || neg_index >= sys.config.len() {
        return Err(Error::Usage(format!(
            "negative index {} must name a non-zero point ({}..={})",
            neg_index + 1,
            k + 1,
            sys.config.len()
        )));
    }
    Ok(())
}

/// Evaluates `(Σ u_j²)(Σ p(v_j)) < u_neg² p(v_neg)`, both sums over the
/// non-zero points other than `neg_index`.
pub fn separation_condition(p: &Form, sys: &CBSystem, neg_index: usize) -> Result<ConditionReport> {
    check_target(p, sys.config.nvars())?;
    check_neg_index(sys, neg_index)?;
    let values = zero_set_values(p, &sys.config)?;
    let k = sys.config.zero_count();
    let rest: Vec<usize> = (k..sys.config.len()).filter(|&j| j != neg_index).collect();
    let u_sq: Rat = rest.iter().map(|&j| &sys.u[j] * &sys.u[j]).sum();
    let p_sum: Rat = rest.iter().map(|&j| values[j].clone()).sum();
    let lhs = u_sq * p_sum;
    let rhs = &sys.u[neg_index] * &sys.u[neg_index] * &values[neg_index];
    let holds = lhs < rhs;
    Ok(ConditionReport {
        neg_index,
        lhs,
        rhs,
        holds,
    })
}

/// Exact lower bound `N*` on the common weight of the zeros; every `N > N*`
/// yields `l_a(p) < 0`.
pub fn weight_threshold(p: &Form, sys: &CBSystem, neg_index: usize) -> Result<Rat> {
    let report = separation_condition(p, sys, neg_index)?;
    if !report.holds {
        return Err(Error::ConditionNotSatisfied {
            neg_index: neg_index + 1,
        });
    }
    let values = zero_set_values(p, &sys.config)?;
    let k = sys.config.zero_count();
    let zeros_u_sq: Rat = sys.u[..k].iter().map(|u| u * u).sum();
    let rest: Vec<usize> = (k..sys.config.len()).filter(|&j| j != neg_index).collect();
    let p_sum: Rat = rest.iter().map(|&j| values[j].clone()).sum();
    Ok(zeros_u_sq * p_sum / (report.rhs - report.lhs))
}

/// Weights `N` on the zeros, 1 on the other positive points, and the negative
/// weight on `neg_index` fixed by `Σ_j u_j²/a_j = 0`.
///
/// Without an explicit `n`, uses `N = 2·N*` (or 1 when `N* = 0`).
pub fn build_a(p: &Form, sys: &CBSystem, neg_index: usize, n: Option<Rat>) -> Result<Certificate> {
    let threshold = weight_threshold(p, sys, neg_index)?;
    let n = match n {
        Some(n) => {
            if n <= threshold || !n.is_positive() {
                return Err(Error::ThresholdNotExceeded {
                    given: Box::new(n),
                    threshold: Box::new(threshold),
                });
            }
            n
        }
        None if threshold.is_zero() => Rat::one(),
        None => &threshold * Rat::from_integer(2.into()),
    };
    let k = sys.config.zero_count();
    let count = sys.config.len();
    let mut a: Vec<Rat> = (0..count)
        .map(|j| if j < k { n.clone() } else { Rat::one() })
        .collect();
    let denom: Rat = (0..count)
        .filter(|&j| j != neg_index)
        .map(|j| &sys.u[j] * &sys.u[j] / &a[j])
        .sum();
    a[neg_index] = -(&sys.u[neg_index] * &sys.u[neg_index]) / denom;
    let values = zero_set_values(p, &sys.config)?;
    let l_value: Rat = a.iter().zip(&values).map(|(a, v)| a * v).sum();
    debug_assert!(l_value.is_negative());
    Ok(Certificate {
        config: sys.config.clone(),
        u: sys.u.clone(),
        a,
        neg_index,
        l_value,
        meta: CertificateMeta {
            n: Some(n),
            threshold: Some(threshold),
            ..CertificateMeta::default()
        },
    })
}

/// Result of the seven-zero shortcut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FastCheck {
    /// `h(v₉)² p(v₈) ≠ h(v₈)² p(v₉)`: some choice of negative point separates.
    pub separates: bool,
    pub residual: Point,
    /// Position (0-based, 7 or 8) that should carry the negative weight.
    pub neg_index: Option<usize>,
}

/// Decides whether seven zeros plus `v8` lead to a certificate, using one cubic
/// `h` through the zeros instead of the Cayley–Bacharach coefficients.
///
/// Since `u₈ h(v₈) + u₉ h(v₉) = 0`, comparing `u₈² p(v₈)` with `u₉² p(v₉)` is
/// the same as comparing `h(v₉)² p(v₈)` with `h(v₈)² p(v₉)`.
pub fn seven_point_fast_check(
    p: &Form,
    zeros: &[Point],
    v8: &Point,
    h: &Form,
    options: &ResidualOptions,
) -> Result<FastCheck> {
    check_target(p, 3)?;
    if zeros.len() != 7 {
        return Err(Error::DimensionMismatch {
            expected: 7,
            found: zeros.len(),
        });
    }
    if h.nvars() != 3 || h.degree() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: h.degree() as usize,
        });
    }
    for (j, z) in zeros.iter().enumerate() {
        if !h.evaluate(z)?.is_zero() {
            return Err(Error::NonGeneric(format!("h does not vanish at zero {}", j + 1)));
        }
    }
    let mut points = zeros.to_vec();
    points.push(v8.clone());
    check_points(3, &points).map_err(Error::Genericity)?;
    let v9 = residual_point(3, &points, options)?;
    let (h8, h9) = (h.evaluate(v8)?, h.evaluate(&v9)?);
    if h8.is_zero() && h9.is_zero() {
        return Err(Error::ChooseDifferentH);
    }
    let (p8, p9) = (p.evaluate(v8)?, p.evaluate(&v9)?);
    let side8 = &h9 * &h9 * &p8;
    let side9 = &h8 * &h8 * &p9;
    let separates = side8 != side9;
    let neg_index = separates.then(|| if side9 > side8 { 8 } else { 7 });
    Ok(FastCheck {
        separates,
        residual: v9,
        neg_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configuration::{vanishing_space, PointConfig};
    use crate::exactq::{rat, ratio};
    use crate::fixtures;

    fn reznick_system() -> CBSystem {
        let mut pts = fixtures::reznick_zeros();
        pts.push(fixtures::reznick_extra());
        let partial = PointConfig::new(3, pts, 7).unwrap();
        CBSystem::complete(&partial, &ResidualOptions::default()).unwrap()
    }

    fn motzkin_system(extras: Vec<Point>) -> CBSystem {
        let mut pts = fixtures::motzkin_zeros();
        pts.extend(extras);
        let partial = PointConfig::new(3, pts, 6).unwrap();
        CBSystem::complete(&partial, &ResidualOptions::default()).unwrap()
    }

    #[test]
    fn reznick_condition_values() {
        let sys = reznick_system();
        let r = separation_condition(&fixtures::reznick_seven_zero(), &sys, 8).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (rat(48456), rat(56016)));
        assert!(r.holds);
        let swapped = separation_condition(&fixtures::reznick_seven_zero(), &sys, 7).unwrap();
        assert!(!swapped.holds);
    }

    #[test]
    fn reznick_weights_with_large_n() {
        let sys = reznick_system();
        let cert = build_a(&fixtures::reznick_seven_zero(), &sys, 8, Some(rat(1_000_000_000))).unwrap();
        assert_eq!(cert.a[8], ratio(-500_000_000, 4_500_806_423));
        assert_eq!(cert.cb_identity_sum(), Some(rat(0)));
        assert!(cert.l_value.is_negative());
    }

    #[test]
    fn threshold_is_sharp() {
        let p = fixtures::reznick_seven_zero();
        let sys = reznick_system();
        let t = weight_threshold(&p, &sys, 8).unwrap();
        // 1612846 * 5384 / (56016 - 48456)
        assert_eq!(t, Rat::new(1_612_846i64.into(), 1.into()) * rat(5384) / rat(7560));
        assert!(matches!(
            build_a(&p, &sys, 8, Some(t.clone())),
            Err(Error::ThresholdNotExceeded { .. })
        ));
        for factor in [3, 10, 1000] {
            let cert = build_a(&p, &sys, 8, Some(&t * rat(factor))).unwrap();
            assert!(verify(&p, &cert).valid());
        }
        let default = build_a(&p, &sys, 8, None).unwrap();
        assert_eq!(default.meta.n, Some(&t * rat(2)));
    }

    #[test]
    fn failing_configuration_refuses() {
        let sys = motzkin_system(fixtures::motzkin_failing_extras());
        let m = fixtures::motzkin();
        for neg in 6..9 {
            assert!(!separation_condition(&m, &sys, neg).unwrap().holds);
            assert!(matches!(build_a(&m, &sys, neg, None), Err(Error::ConditionNotSatisfied { .. })));
        }
    }

    #[test]
    fn zero_set_mismatch_and_bad_index() {
        let sys = reznick_system();
        let m = fixtures::motzkin();
        assert!(matches!(separation_condition(&m, &sys, 8), Err(Error::ZeroSetMismatch { .. })));
        let p = fixtures::reznick_seven_zero();
        assert!(matches!(separation_condition(&p, &sys, 3), Err(Error::Usage(_))));
    }

    #[test]
    fn fast_check_reznick() {
        let p = fixtures::reznick_seven_zero();
        let zeros = fixtures::reznick_zeros();
        let space = vanishing_space(3, &zeros, 3);
        let fc = seven_point_fast_check(&p, &zeros, &fixtures::reznick_extra(), &space[0], &ResidualOptions::default())
            .unwrap();
        assert!(fc.separates);
        assert_eq!(fc.neg_index, Some(8));
        assert_eq!(fc.residual, vec![rat(3), rat(10), rat(1)]);
    }

    #[test]
    fn fast_check_on_square_of_h_is_false() {
        let zeros = fixtures::reznick_zeros();
        let space = vanishing_space(3, &zeros, 3);
        let h = space[1].add(&space[2].scale(&rat(2))).unwrap();
        let v8 = fixtures::reznick_extra();
        let fc = seven_point_fast_check(&h.square(), &zeros, &v8, &h, &ResidualOptions::default()).unwrap();
        assert!(!fc.separates);
    }
}
