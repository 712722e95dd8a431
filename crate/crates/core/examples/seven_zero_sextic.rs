// A sextic with seven zeros: one extra point is enough, and a single cubic
// through the zeros decides the outcome before any coefficients are computed.

use nonsos::certificate::{build_a, seven_point_fast_check, verify};
use nonsos::configuration::{vanishing_space, CBSystem, PointConfig, ResidualOptions};
use nonsos::exactq::fmt_rat;
use nonsos::fixtures;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = fixtures::reznick_seven_zero();
    let zeros = fixtures::reznick_zeros();
    let v8 = fixtures::reznick_extra();
    let options = ResidualOptions::default();

    let h = vanishing_space(3, &zeros, 3).remove(0);
    let fast = seven_point_fast_check(&p, &zeros, &v8, &h, &options)?;
    println!("h = {h}");
    if let Some(neg) = fast.neg_index {
        println!("fast check separates, negative weight at point {}", neg + 1);
    } else {
        println!("fast check: no separation");
    }

    let mut points = zeros;
    points.push(v8);
    let sys = CBSystem::complete(&PointConfig::new(3, points, 7)?, &options)?;
    println!("u = {}", sys.u.iter().map(fmt_rat).collect::<Vec<_>>().join(" "));

    let cert = build_a(&p, &sys, 8, Some(nonsos::Rat::from_integer(1_000_000_000.into())))?;
    println!("a_9 = {}", fmt_rat(&cert.a[8]));
    let report = verify(&p, &cert);
    println!("{report}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
