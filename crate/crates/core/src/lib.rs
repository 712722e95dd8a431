//! Exact rational certificates showing that a nonnegative ternary sextic or
//! quaternary quartic is not a sum of squares.
//!
//! A certificate is a linear functional `l_a(f) = Σ a_j f(v_j)` on a set of
//! points in Cayley–Bacharach position: its moment matrix is positive
//! semidefinite, so `l_a` is nonnegative on every sum of squares, while
//! `l_a(p) < 0` for the target form `p`.

pub mod certificate;
pub mod cli;
pub mod configuration;
mod error;
pub mod exactq;
pub mod fixtures;
pub mod forms;
pub mod pipeline;
pub mod regression;
pub mod scan;

pub use certificate::{build_a, separation_condition, verify, Certificate, ConditionReport};
pub use configuration::{cb_coefficients, residual_point, CBSystem, Point, PointConfig, ResidualOptions};
pub use error::{exit, Error, Result};
pub use exactq::{Rat, RatMatrix};
pub use forms::Form;
pub use pipeline::{certify, CertifyOutcome, CertifyRequest, Extras};
