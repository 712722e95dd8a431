// The Choi–Lam quartic in four variables: seven zeros, the eighth base point
// of the net of quadrics through them, and a certificate with `N = 1`.

use nonsos::exactq::fmt_rat;
use nonsos::fixtures;
use nonsos::pipeline::{certify, CertifyRequest};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let req = CertifyRequest::new(fixtures::choi_lam(), fixtures::choi_lam_zeros(), vec![]);
    let outcome = certify(&req)?;
    let c = outcome.certified().ok_or("condition fails")?;
    println!("target: {}", req.target);
    println!(
        "eighth point: ({})",
        c.system.residual().iter().map(fmt_rat).collect::<Vec<_>>().join(", ")
    );
    for r in &c.reports {
        println!("{r}");
    }
    println!("{}", c.verification);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
