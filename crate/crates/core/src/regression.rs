//! Built-in reference instances with their expected exact outcomes.

use num_traits::{Signed, Zero};

use crate::certificate::{build_a, perturb, separation_condition, verify};
use crate::configuration::{
    cb_coefficients, projectively_equal, residual_point, CBSystem, Point, PointConfig, ResidualOptions,
};
use crate::exactq::{fmt_rat, proportional, rat, ratio, Rat};
use crate::fixtures;
use crate::forms::veronese;
use crate::pipeline::{certify, CertifyRequest};

pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    run: fn() -> Outcome,
}

/// `Ok(summary)` on success, `Err(reason)` on the first failed expectation.
pub type Outcome = std::result::Result<String, String>;

impl Fixture {
    pub fn run(&self) -> Outcome {
        (self.run)()
    }
}

pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "motzkin",
            description: "Motzkin form, extras (0,4,1) and (4,0,1)",
            run: motzkin,
        },
        Fixture {
            name: "motzkin-failing",
            description: "Motzkin form, extras (2/7,2/3,1) and (2/3,2/7,1)",
            run: motzkin_failing,
        },
        Fixture {
            name: "reznick-seven",
            description: "seven-zero sextic with extra point (-2,5,-1)",
            run: reznick_seven,
        },
        Fixture {
            name: "drop-one",
            description: "each point of three 9-point configurations is the residual of the others",
            run: drop_one,
        },
        Fixture {
            name: "cube-cb",
            description: "cube vertices in projective 3-space carry parity coefficients",
            run: cube_cb,
        },
        Fixture {
            name: "choi-lam",
            description: "Choi-Lam quartic with its seven zeros",
            run: choi_lam,
        },
        Fixture {
            name: "motzkin-perturb",
            description: "strictly positive perturbation of the Motzkin form",
            run: motzkin_perturb,
        },
    ]
}

pub fn find(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}

fn ensure(cond: bool, what: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn pt(v: &[i64]) -> Point {
    v.iter().map(|&x| rat(x)).collect()
}

fn system(zeros: Vec<Point>, extras: Vec<Point>) -> std::result::Result<CBSystem, String> {
    let k = zeros.len();
    let mut pts = zeros;
    pts.extend(extras);
    let partial = PointConfig::new(3, pts, k).map_err(|e| e.to_string())?;
    CBSystem::complete(&partial, &ResidualOptions::default()).map_err(|e| e.to_string())
}

fn motzkin() -> Outcome {
    let sys = system(fixtures::motzkin_zeros(), fixtures::motzkin_good_extras())?;
    let v9 = vec![rat(1), rat(1), ratio(-7, 2)];
    ensure(projectively_equal(sys.residual(), &v9), "residual is not (1,1,-7/2)")?;
    let m = fixtures::motzkin();
    let report = separation_condition(&m, &sys, 8).map_err(|e| e.to_string())?;
    ensure(report.holds, "condition fails at the residual point")?;
    let cert = build_a(&m, &sys, 8, Some(rat(100))).map_err(|e| e.to_string())?;
    let v = verify(&m, &cert);
    ensure(v.valid(), "certificate does not verify")?;
    ensure(v.rank == 7, format!("moment rank {} != 7", v.rank))?;
    ensure(
        cert.l_value == ratio(-1_484_936, 2_143_157),
        format!("l_a(m) = {} with N = 100", fmt_rat(&cert.l_value)),
    )?;
    Ok(format!("l_a(m) = {} (N = 100)", fmt_rat(&cert.l_value)))
}

fn motzkin_failing() -> Outcome {
    let req = CertifyRequest::new(
        fixtures::motzkin(),
        fixtures::motzkin_zeros(),
        fixtures::motzkin_failing_extras(),
    );
    let out = certify(&req).map_err(|e| e.to_string())?;
    ensure(
        projectively_equal(out.system().residual(), &[rat(1), rat(1), ratio(65, 34)]),
        "residual is not (1,1,65/34)",
    )?;
    ensure(out.certified().is_none(), "unexpectedly certified")?;
    ensure(out.reports().len() == 3, "expected three condition reports")?;
    Ok("condition fails for points 7, 8 and 9".into())
}

fn reznick_seven() -> Outcome {
    let sys = system(fixtures::reznick_zeros(), vec![fixtures::reznick_extra()])?;
    ensure(sys.residual() == &pt(&[3, 10, 1]), "residual is not (3,10,1)")?;
    let expected = pt(&[84, -1260, -36, -90, 63, 35, -60, 3, 1]);
    ensure(proportional(&sys.u, &expected), "u differs")?;
    let p = fixtures::reznick_seven_zero();
    let r = separation_condition(&p, &sys, 8).map_err(|e| e.to_string())?;
    ensure(r.lhs == rat(48456) && r.rhs == rat(56016), "u^2 p values differ")?;
    let cert = build_a(&p, &sys, 8, Some(rat(1_000_000_000))).map_err(|e| e.to_string())?;
    ensure(cert.a[8] == ratio(-500_000_000, 4_500_806_423), "a_9 differs")?;
    let v = verify(&p, &cert);
    ensure(v.valid() && v.rank == 7, "certificate does not verify with rank 7")?;
    ensure(cert.cb_identity_sum() == Some(Rat::zero()), "sum u^2/a is not zero")?;
    Ok(format!("a_9 = {}, l_a(p) = {}", fmt_rat(&cert.a[8]), fmt_rat(&cert.l_value)))
}

/// The three 9-point configurations used by the drop-one check.
pub fn nine_point_configurations() -> Vec<Vec<Point>> {
    let mut motzkin = fixtures::motzkin_zeros();
    motzkin.extend(fixtures::motzkin_good_extras());
    motzkin.push(pt(&[2, 2, -7]));
    let mut failing = fixtures::motzkin_zeros();
    failing.extend(fixtures::motzkin_failing_extras());
    failing.push(pt(&[34, 34, 65]));
    let mut reznick = fixtures::reznick_zeros();
    reznick.push(fixtures::reznick_extra());
    reznick.push(pt(&[3, 10, 1]));
    vec![motzkin, failing, reznick]
}

fn drop_one() -> Outcome {
    let mut checks = 0;
    for (c, points) in nine_point_configurations().iter().enumerate() {
        for i in 0..points.len() {
            let mut rest = points.clone();
            let removed = rest.remove(i);
            let v = residual_point(3, &rest, &ResidualOptions::default())
                .map_err(|e| format!("configuration {}, point {}: {e}", c + 1, i + 1))?;
            ensure(
                projectively_equal(&v, &removed),
                format!("configuration {}, point {} not recovered", c + 1, i + 1),
            )?;
            checks += 1;
        }
    }
    Ok(format!("{checks} points recovered"))
}

fn cube_cb() -> Outcome {
    let pts = fixtures::cube_vertices();
    let cfg = PointConfig::new(4, pts.clone(), 0).map_err(|e| e.to_string())?;
    let u = cb_coefficients(&cfg).map_err(|e| e.to_string())?;
    let parity: Vec<Rat> = pts
        .iter()
        .map(|p| p[0].clone() * &p[1] * &p[2])
        .collect();
    ensure(proportional(&u, &parity), "u is not proportional to vertex parity")?;
    let vs: Vec<Vec<Rat>> = pts.iter().map(|p| veronese(p, 2)).collect();
    for m in 0..10 {
        let s: Rat = u.iter().zip(&vs).map(|(u, w)| u * &w[m]).sum();
        ensure(s.is_zero(), format!("relation fails for quadric monomial {}", m + 1))?;
    }
    Ok("10 quadric relations hold".into())
}

fn choi_lam() -> Outcome {
    let req = CertifyRequest::new(fixtures::choi_lam(), fixtures::choi_lam_zeros(), vec![]);
    let out = certify(&req).map_err(|e| e.to_string())?;
    let c = out.certified().ok_or("condition fails")?;
    ensure(c.verification.valid(), "certificate does not verify")?;
    ensure(
        c.verification.rank == c.verification.expected_rank,
        format!("moment rank {}", c.verification.rank),
    )?;
    Ok(format!(
        "residual {:?}, l_a(p) = {}",
        c.system.residual().iter().map(fmt_rat).collect::<Vec<_>>(),
        fmt_rat(&c.certificate.l_value)
    ))
}

fn motzkin_perturb() -> Outcome {
    let sys = system(fixtures::motzkin_zeros(), fixtures::motzkin_good_extras())?;
    let m = fixtures::motzkin();
    let cert = build_a(&m, &sys, 8, None).map_err(|e| e.to_string())?;
    let p = perturb(&m, &cert, &fixtures::sphere_sextic()).map_err(|e| e.to_string())?;
    ensure(p.lambda.is_positive(), "lambda is not positive")?;
    ensure(p.l_n == &cert.l_value / rat(2), "l_a(n) != l_a(m)/2")?;
    for z in fixtures::motzkin_zeros() {
        let value = p.form.evaluate(&z).map_err(|e| e.to_string())?;
        ensure(value.is_positive(), "perturbed form vanishes at a former zero")?;
    }
    Ok(format!("lambda = {}", fmt_rat(&p.lambda)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let names: Vec<&str> = fixtures().iter().map(|f| f.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        assert!(find("motzkin").is_some());
        assert!(find("nope").is_none());
    }

    #[test]
    fn all_fixtures_pass() {
        for f in fixtures() {
            if let Err(e) = f.run() {
                panic!("{}: {e}", f.name);
            }
        }
    }
}
