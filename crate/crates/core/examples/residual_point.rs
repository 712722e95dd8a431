// The ninth intersection point of the cubics through eight points, and the
// drop-one check: every point of a complete configuration is determined by
// the other eight.

use nonsos::configuration::{format_point, projectively_equal, residual_point, ResidualOptions};
use nonsos::fixtures;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let options = ResidualOptions::default();
    let mut points = fixtures::motzkin_zeros();
    points.extend(fixtures::motzkin_good_extras());
    let v9 = residual_point(3, &points, &options)?;
    println!("residual of the Motzkin configuration: {}", format_point(&v9));

    points.push(v9);
    for i in 0..points.len() {
        let mut rest = points.clone();
        let removed = rest.remove(i);
        let back = residual_point(3, &rest, &options)?;
        println!(
            "drop point {}: {:<12} recovered {}",
            i + 1,
            format_point(&removed),
            projectively_equal(&back, &removed)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
