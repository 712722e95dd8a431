// Writes a certificate as text, reads it back, verifies it, then shows that a
// flipped weight is rejected.

use nonsos::certificate::{verify, Certificate};
use nonsos::fixtures;
use nonsos::pipeline::{certify, CertifyRequest};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = fixtures::reznick_seven_zero();
    let req = CertifyRequest::new(p.clone(), fixtures::reznick_zeros(), vec![fixtures::reznick_extra()]);
    let text = certify(&req)?
        .certified()
        .ok_or("condition fails")?
        .certificate
        .to_text();

    let cert = Certificate::parse(&text)?;
    println!("{}\n", verify(&p, &cert));

    let mut tampered = cert.clone();
    let neg = tampered.neg_index;
    tampered.a[neg] = -tampered.a[neg].clone();
    println!("{}", verify(&p, &tampered));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
