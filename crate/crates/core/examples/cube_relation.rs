// The eight vertices of a cube are the base locus of a net of quadrics; their
// Cayley–Bacharach coefficients are the vertex parities.

use nonsos::configuration::{cb_coefficients, format_point, PointConfig};
use nonsos::exactq::fmt_rat;
use nonsos::fixtures;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let vertices = fixtures::cube_vertices();
    let u = cb_coefficients(&PointConfig::new(4, vertices.clone(), 0)?)?;
    for (v, c) in vertices.iter().zip(&u) {
        println!("{:<14} u = {}", format_point(v), fmt_rat(c));
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
