// Certifies that the Motzkin form is not a sum of squares.
//
// ```text
// cargo run --example motzkin_certificate
// ```

use nonsos::fixtures;
use nonsos::pipeline::{certify, CertifyRequest};
use nonsos::Rat;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut req = CertifyRequest::new(
        fixtures::motzkin(),
        fixtures::motzkin_zeros(),
        fixtures::motzkin_good_extras(),
    );
    req.n = Some(Rat::from_integer(100.into()));
    let outcome = certify(&req)?;
    let certified = outcome.certified().ok_or("condition fails")?;

    println!("target: {}", req.target);
    for r in &certified.reports {
        println!("{r}");
    }
    println!("{}", certified.verification);
    println!();
    print!("{}", certified.certificate.to_text());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
