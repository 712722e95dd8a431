// Extra points for which no negative point passes the separation test.

use nonsos::exactq::fmt_rat;
use nonsos::fixtures;
use nonsos::pipeline::{certify, CertifyRequest};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let req = CertifyRequest::new(
        fixtures::motzkin(),
        fixtures::motzkin_zeros(),
        fixtures::motzkin_failing_extras(),
    );
    let outcome = certify(&req)?;
    let residual: Vec<String> = outcome.system().residual().iter().map(fmt_rat).collect();
    println!("residual point: ({})", residual.join(", "));
    for r in outcome.reports() {
        println!("{r}");
    }
    println!("certified: {}", outcome.certified().is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
