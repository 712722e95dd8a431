macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(motzkin_certificate, "motzkin_certificate.rs");
example!(seven_zero_sextic, "seven_zero_sextic.rs");
example!(failing_configuration, "failing_configuration.rs");
example!(residual_point, "residual_point.rs");
example!(cube_relation, "cube_relation.rs");
example!(symmetric_scan, "symmetric_scan.rs");
example!(perturbation, "perturbation.rs");
example!(verify_certificate, "verify_certificate.rs");
example!(quaternary_quartic, "quaternary_quartic.rs");

#[test]
fn motzkin_certificate_runs() {
    motzkin_certificate::run_example().expect("motzkin example should run");
}

#[test]
fn seven_zero_sextic_runs() {
    seven_zero_sextic::run_example().expect("seven-zero example should run");
}

#[test]
fn failing_configuration_runs() {
    failing_configuration::run_example().expect("failing example should run");
}

#[test]
fn residual_point_runs() {
    residual_point::run_example().expect("residual example should run");
}

#[test]
fn cube_relation_runs() {
    cube_relation::run_example().expect("cube example should run");
}

#[test]
fn symmetric_scan_runs() {
    symmetric_scan::run_example().expect("scan example should run");
}

#[test]
fn perturbation_runs() {
    perturbation::run_example().expect("perturbation example should run");
}

#[test]
fn verify_certificate_runs() {
    verify_certificate::run_example().expect("verify example should run");
}

#[test]
fn quaternary_quartic_runs() {
    quaternary_quartic::run_example().expect("quaternary example should run");
}
