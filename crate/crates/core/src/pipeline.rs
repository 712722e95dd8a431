//! End-to-end construction: genericity, residual point, Cayley–Bacharach
//! coefficients, the separation condition over candidate negative points,
//! weights and verification.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certificate::{build_a, separation_condition, verify, Certificate, ConditionReport, VerificationReport};
use crate::configuration::{check_points, full_size, CBSystem, Point, PointConfig, ResidualOptions};
use crate::error::{Error, Result};
use crate::exactq::{rat, Rat};
use crate::forms::Form;

pub const AUTO_EXTRA_BUDGET: usize = 256;
pub const AUTO_EXTRA_RANGE: i64 = 5;

#[derive(Clone, Debug)]
pub enum Extras {
    Given(Vec<Point>),
    /// Seeded small-integer points drawn until a certificate is found.
    Auto,
}

#[derive(Clone, Debug)]
pub struct CertifyRequest {
    pub target: Form,
    pub zeros: Vec<Point>,
    pub extras: Extras,
    /// Forced negative point (0-based); otherwise every candidate is tried.
    pub neg_index: Option<usize>,
    pub n: Option<Rat>,
    pub seed: u64,
}

impl CertifyRequest {
    pub fn new(target: Form, zeros: Vec<Point>, extras: Vec<Point>) -> Self {
        CertifyRequest {
            target,
            zeros,
            extras: Extras::Given(extras),
            neg_index: None,
            n: None,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Certified {
    pub system: CBSystem,
    pub reports: Vec<ConditionReport>,
    pub certificate: Certificate,
    pub verification: VerificationReport,
}

#[derive(Clone, Debug)]
pub enum CertifyOutcome {
    Certified(Box<Certified>),
    /// The condition fails for every candidate negative point.
    ConditionFailed { system: CBSystem, reports: Vec<ConditionReport> },
}

impl CertifyOutcome {
    pub fn reports(&self) -> &[ConditionReport] {
        match self {
            CertifyOutcome::Certified(c) => &c.reports,
            CertifyOutcome::ConditionFailed { reports, .. } => reports,
        }
    }

    pub fn system(&self) -> &CBSystem {
        match self {
            CertifyOutcome::Certified(c) => &c.system,
            CertifyOutcome::ConditionFailed { system, .. } => system,
        }
    }

    pub fn certified(&self) -> Option<&Certified> {
        match self {
            CertifyOutcome::Certified(c) => Some(c),
            CertifyOutcome::ConditionFailed { .. } => None,
        }
    }
}

/// Residual point first, then the other non-zero points in order.
pub fn neg_candidates(sys: &CBSystem) -> Vec<usize> {
    let mut out = vec![sys.residual_index];
    out.extend((sys.config.zero_count()..sys.config.len()).filter(|&j| j != sys.residual_index));
    out
}

pub fn certify(req: &CertifyRequest) -> Result<CertifyOutcome> {
    match &req.extras {
        Extras::Given(extras) => certify_points(req, extras),
        Extras::Auto => certify_auto(req),
    }
}

fn certify_points(req: &CertifyRequest, extras: &[Point]) -> Result<CertifyOutcome> {
    let nvars = req.target.nvars();
    let mut points = req.zeros.clone();
    points.extend(extras.iter().cloned());
    let expected = full_size(nvars) - 1;
    if points.len() != expected {
        return Err(Error::Usage(format!(
            "zeros plus extra points must number {expected}, found {}",
            points.len()
        )));
    }
    let partial = PointConfig::new(nvars, points, req.zeros.len())?;
    let system = CBSystem::complete(&partial, &ResidualOptions::with_seed(req.seed))?;
    let candidates = match req.neg_index {
        Some(i) => vec![i],
        None => neg_candidates(&system),
    };
    let mut reports = Vec::new();
    for neg in candidates {
        let report = separation_condition(&req.target, &system, neg)?;
        let holds = report.holds;
        reports.push(report);
        if holds {
            let mut certificate = build_a(&req.target, &system, neg, req.n.clone())?;
            certificate.meta.seed = Some(req.seed);
            let verification = verify(&req.target, &certificate);
            if !verification.valid() {
                return Err(Error::InvalidCertificate);
            }
            return Ok(CertifyOutcome::Certified(Box::new(Certified {
                system,
                reports,
                certificate,
                verification,
            })));
        }
    }
    Ok(CertifyOutcome::ConditionFailed { system, reports })
}

/// Draws extras until one configuration certifies. Draws that break
/// genericity, degenerate, hit a zero of the target, or fail the condition are
/// skipped.
fn certify_auto(req: &CertifyRequest) -> Result<CertifyOutcome> {
    let nvars = req.target.nvars();
    let needed = (full_size(nvars) - 1)
        .checked_sub(req.zeros.len())
        .ok_or_else(|| Error::Usage("too many zeros".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(req.seed);
    let mut last_failure = None;
    for _ in 0..AUTO_EXTRA_BUDGET {
        let extras: Vec<Point> = (0..needed).map(|_| random_point(&mut rng, nvars)).collect();
        let mut all = req.zeros.clone();
        all.extend(extras.iter().cloned());
        if check_points(nvars, &all).is_err() {
            continue;
        }
        match certify_points(req, &extras) {
            Ok(outcome @ CertifyOutcome::Certified(_)) => return Ok(outcome),
            Ok(failed) => last_failure = Some(failed),
            Err(Error::Usage(m)) => return Err(Error::Usage(m)),
            Err(_) => {}
        }
    }
    last_failure.ok_or_else(|| {
        Error::DegenerateIntersection(format!(
            "no usable extra points within {AUTO_EXTRA_BUDGET} draws"
        ))
    })
}

fn random_point(rng: &mut ChaCha8Rng, nvars: usize) -> Point {
    loop {
        let p: Point = (0..nvars)
            .map(|_| rat(rng.gen_range(-AUTO_EXTRA_RANGE..=AUTO_EXTRA_RANGE)))
            .collect();
        if p.iter().any(|x| !x.is_zero()) {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn candidate_order_starts_with_residual() {
        let mut pts = fixtures::motzkin_zeros();
        pts.extend(fixtures::motzkin_good_extras());
        let partial = PointConfig::new(3, pts, 6).unwrap();
        let sys = CBSystem::complete(&partial, &ResidualOptions::default()).unwrap();
        assert_eq!(neg_candidates(&sys), vec![8, 6, 7]);
    }

    #[test]
    fn reznick_certifies_at_residual() {
        let req = CertifyRequest::new(
            fixtures::reznick_seven_zero(),
            fixtures::reznick_zeros(),
            vec![fixtures::reznick_extra()],
        );
        let out = certify(&req).unwrap();
        let c = out.certified().expect("certified");
        assert_eq!(c.certificate.neg_index, 8);
        assert_eq!(c.reports.len(), 1);
        assert_eq!(c.verification.rank, 7);
    }

    #[test]
    fn motzkin_failing_reports_all_three() {
        let req = CertifyRequest::new(
            fixtures::motzkin(),
            fixtures::motzkin_zeros(),
            fixtures::motzkin_failing_extras(),
        );
        let out = certify(&req).unwrap();
        assert!(out.certified().is_none());
        let idx: Vec<usize> = out.reports().iter().map(|r| r.neg_index).collect();
        assert_eq!(idx, vec![8, 6, 7]);
    }

    #[test]
    fn auto_extra_certifies_reznick() {
        let mut req = CertifyRequest::new(fixtures::reznick_seven_zero(), fixtures::reznick_zeros(), vec![]);
        req.extras = Extras::Auto;
        req.seed = 7;
        let out = certify(&req).unwrap();
        assert!(out.certified().unwrap().verification.valid());
    }

    #[test]
    fn wrong_point_count_is_usage() {
        let req = CertifyRequest::new(fixtures::motzkin(), fixtures::motzkin_zeros(), vec![]);
        assert!(matches!(certify(&req), Err(Error::Usage(_))));
    }
}
