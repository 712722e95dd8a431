// A strictly positive form that is still not a sum of squares: add a small
// multiple of `(x² + y² + z²)³` to the Motzkin form.

use nonsos::certificate::{build_a, perturb};
use nonsos::configuration::{format_point, CBSystem, PointConfig, ResidualOptions};
use nonsos::exactq::fmt_rat;
use nonsos::fixtures;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = fixtures::motzkin();
    let mut points = fixtures::motzkin_zeros();
    points.extend(fixtures::motzkin_good_extras());
    let sys = CBSystem::complete(&PointConfig::new(3, points, 6)?, &ResidualOptions::default())?;
    let cert = build_a(&m, &sys, sys.residual_index, None)?;

    let p = perturb(&m, &cert, &fixtures::sphere_sextic())?;
    println!("lambda = {}", fmt_rat(&p.lambda));
    println!("l_a(m) = {}  l_a(n) = {}", fmt_rat(&p.l_p), fmt_rat(&p.l_n));
    for z in fixtures::motzkin_zeros() {
        println!("n({}) = {}", format_point(&z), fmt_rat(&p.form.evaluate(&z)?));
    }
    print!("{}", p.form.to_text());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
