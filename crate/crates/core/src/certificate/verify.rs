use std::fmt;

use num_traits::{Signed, Zero};

use super::{cb_identity_sum, moment_matrix, zero_set_values, Certificate};
use crate::configuration::{cb_coefficients, full_size};
use crate::exactq::{fmt_rat, proportional, Rat};
use crate::forms::Form;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CbCheck {
    /// The recomputed coefficients agree with the recorded ones and `Σ u_j²/a_j = 0`.
    Holds,
    /// `Σ u_j²/a_j` with the recorded weights.
    Fails { sum: Option<Rat> },
    /// Coefficients could not be recomputed from the points.
    Unavailable(String),
}

/// Outcome of checking a certificate against a target form.
///
/// The verdict depends only on `psd` and the sign of `l_value`; the remaining
/// fields are diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub psd: bool,
    pub rank: usize,
    pub expected_rank: usize,
    pub l_value: Rat,
    pub l_matches_recorded: bool,
    pub cb: CbCheck,
    pub zero_set: Result<(), String>,
    pub single_negative: bool,
}

impl VerificationReport {
    pub fn valid(&self) -> bool {
        self.psd && self.l_value.is_negative()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {}", if self.valid() { "VALID" } else { "INVALID" })?;
        writeln!(f, "moment matrix PSD: {}", self.psd)?;
        writeln!(f, "moment matrix rank: {} (expected {})", self.rank, self.expected_rank)?;
        writeln!(
            f,
            "l_a(p) = {}{}",
            fmt_rat(&self.l_value),
            if self.l_matches_recorded { "" } else { " (differs from recorded value)" }
        )?;
        match &self.cb {
            CbCheck::Holds => writeln!(f, "cayley-bacharach identity: holds")?,
            CbCheck::Fails { sum: Some(s) } => {
                writeln!(f, "cayley-bacharach identity: fails (sum u^2/a = {})", fmt_rat(s))?
            }
            CbCheck::Fails { sum: None } => writeln!(f, "cayley-bacharach identity: fails")?,
            CbCheck::Unavailable(why) => writeln!(f, "cayley-bacharach identity: unavailable ({why})")?,
        }
        match &self.zero_set {
            Ok(()) => writeln!(f, "zero set: consistent")?,
            Err(why) => writeln!(f, "zero set: {why}")?,
        }
        write!(f, "single negative weight: {}", self.single_negative)
    }
}

/// Checks `l_a` against `p`: the moment matrix must be PSD and `l_a(p) < 0`.
pub fn verify(p: &Form, cert: &Certificate) -> VerificationReport {
    let nvars = cert.config.nvars();
    let expected_rank = full_size(nvars) - 2;
    let (psd, rank) = match moment_matrix(nvars, cert.config.points(), &cert.a) {
        Ok(g) => g.psd_rank(),
        Err(_) => (false, 0),
    };
    let l_value: Rat = cert
        .config
        .points()
        .iter()
        .zip(&cert.a)
        .map(|(v, a)| p.evaluate(v).map(|pv| a * pv).unwrap_or_else(|_| Rat::zero()))
        .sum();
    let cb = match cb_coefficients(&cert.config) {
        Ok(u) if proportional(&u, &cert.u) => match cb_identity_sum(&u, &cert.a) {
            Some(s) if s.is_zero() => CbCheck::Holds,
            sum => CbCheck::Fails { sum },
        },
        Ok(_) => CbCheck::Fails {
            sum: cb_identity_sum(&cert.u, &cert.a),
        },
        Err(e) => CbCheck::Unavailable(e.to_string()),
    };
    let zero_set = zero_set_values(p, &cert.config)
        .map(|_| ())
        .map_err(|e| e.to_string());
    let negatives: Vec<usize> = (0..cert.a.len()).filter(|&j| cert.a[j].is_negative()).collect();
    VerificationReport {
        psd,
        rank,
        expected_rank,
        l_matches_recorded: l_value == cert.l_value,
        l_value,
        cb,
        zero_set,
        single_negative: negatives == [cert.neg_index],
    }
}
