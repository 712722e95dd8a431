use num_traits::Signed;

use super::{verify, Certificate};
use crate::error::{Error, Result};
use crate::exactq::Rat;
use crate::forms::Form;

/// A form `n = p + λ r` that is still separated by the same functional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perturbation {
    pub lambda: Rat,
    pub form: Form,
    pub l_p: Rat,
    pub l_r: Rat,
    pub l_n: Rat,
}

/// Adds `λ r` with `λ = −l_a(p) / (2 l_a(r))`, so that `l_a(n) = l_a(p)/2 < 0`.
/// Requires a valid certificate for `p` and `l_a(r) > 0`.
pub fn perturb(p: &Form, cert: &Certificate, r: &Form) -> Result<Perturbation> {
    if r.nvars() != p.nvars() || r.degree() != p.degree() {
        return Err(Error::DimensionMismatch {
            expected: p.degree() as usize,
            found: r.degree() as usize,
        });
    }
    let report = verify(p, cert);
    if !report.valid() {
        return Err(Error::InvalidCertificate);
    }
    let l_p = report.l_value;
    let l_r = functional(cert, r)?;
    if !l_r.is_positive() {
        return Err(Error::RNotSuitable { value: l_r });
    }
    let lambda = -(&l_p) / (Rat::from_integer(2.into()) * &l_r);
    let form = p.add(&r.scale(&lambda))?;
    let l_n = functional(cert, &form)?;
    Ok(Perturbation {
        lambda,
        form,
        l_p,
        l_r,
        l_n,
    })
}

/// `l_a(f) = Σ a_j f(v_j)`.
pub fn functional(cert: &Certificate, f: &Form) -> Result<Rat> {
    cert.config
        .points()
        .iter()
        .zip(&cert.a)
        .map(|(v, a)| f.evaluate(v).map(|fv| a * fv))
        .sum()
}
