// Scans symmetric extra points `(q, s, 1)`, `(s, q, 1)` for the Motzkin form
// and compares each verdict with the closed-form sign.

use num_traits::Signed;

use nonsos::exactq::ratio;
use nonsos::scan::{closed_form, rows_to_csv, scan_motzkin_symmetric, Grid};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let grid = Grid {
        qmin: ratio(-2, 1),
        qmax: ratio(2, 1),
        smin: ratio(-2, 1),
        smax: ratio(2, 1),
        step: ratio(1, 2),
    };
    let rows = scan_motzkin_symmetric(&grid, 0)?;
    print!("{}", rows_to_csv(&rows));

    let evaluated: Vec<_> = rows.iter().filter(|r| r.excluded_reason.is_none()).collect();
    let agree = evaluated
        .iter()
        .filter(|r| {
            let diff = r.lhs.clone().unwrap() - r.rhs.clone().unwrap();
            diff.signum() == closed_form(&r.q, &r.s).signum()
        })
        .count();
    println!("# closed form agrees on {agree} of {} cells", evaluated.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
