//! Two-parameter scan of the Motzkin form with symmetric extras
//! `v7 = (q, s, 1)`, `v8 = (s, q, 1)` and the residual point carrying the
//! negative weight.

use std::fmt;

use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::certificate::separation_condition;
use crate::configuration::{CBSystem, PointConfig, ResidualOptions};
use crate::error::{Error, Result};
use crate::exactq::{fmt_rat_full, rat, Rat};
use crate::fixtures;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exclusion {
    QEqualsS,
    QEqualsMinusS,
    QPlusMinusOne,
    SPlusMinusOne,
    QEqualsTwoMinusS,
    QEqualsMinusTwoMinusS,
    GenericityFailure,
}

impl fmt::Display for Exclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exclusion::QEqualsS => "q=s",
            Exclusion::QEqualsMinusS => "q=-s",
            Exclusion::QPlusMinusOne => "q=+-1",
            Exclusion::SPlusMinusOne => "s=+-1",
            Exclusion::QEqualsTwoMinusS => "q=2-s",
            Exclusion::QEqualsMinusTwoMinusS => "q=-2-s",
            Exclusion::GenericityFailure => "genericity-failure",
        })
    }
}

/// The a-priori exclusion for `(q, s)`, if any.
pub fn exclusion(q: &Rat, s: &Rat) -> Option<Exclusion> {
    let one = Rat::one();
    let two = rat(2);
    if q == s {
        Some(Exclusion::QEqualsS)
    } else if q == &-s {
        Some(Exclusion::QEqualsMinusS)
    } else if q.abs() == one {
        Some(Exclusion::QPlusMinusOne)
    } else if s.abs() == one {
        Some(Exclusion::SPlusMinusOne)
    } else if q == &(&two - s) {
        Some(Exclusion::QEqualsTwoMinusS)
    } else if q == &(-&two - s) {
        Some(Exclusion::QEqualsMinusTwoMinusS)
    } else {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub q: Rat,
    pub s: Rat,
    pub lhs: Option<Rat>,
    pub rhs: Option<Rat>,
    pub satisfied: bool,
    pub excluded_reason: Option<Exclusion>,
}

pub const CSV_HEADER: &str = "q,s,lhs,rhs,satisfied,excluded_reason";

impl ScanRow {
    pub fn to_csv(&self) -> String {
        let opt = |r: &Option<Rat>| r.as_ref().map(fmt_rat_full).unwrap_or_default();
        format!(
            "{},{},{},{},{},{}",
            fmt_rat_full(&self.q),
            fmt_rat_full(&self.s),
            opt(&self.lhs),
            opt(&self.rhs),
            self.satisfied,
            self.excluded_reason.map(|e| e.to_string()).unwrap_or_default()
        )
    }
}

/// Closed-form sign of `lhs − rhs`: `2q²s² − q² + 2qs − s² + 2`.
pub fn closed_form(q: &Rat, s: &Rat) -> Rat {
    rat(2) * q * q * s * s - q * q + rat(2) * q * s - s * s + rat(2)
}

/// Evaluates one grid cell.
pub fn scan_cell(q: &Rat, s: &Rat, seed: u64) -> ScanRow {
    let mut row = ScanRow {
        q: q.clone(),
        s: s.clone(),
        lhs: None,
        rhs: None,
        satisfied: false,
        excluded_reason: exclusion(q, s),
    };
    if row.excluded_reason.is_some() {
        return row;
    }
    let mut points = fixtures::motzkin_zeros();
    points.extend(fixtures::motzkin_symmetric_extras(q, s));
    let report = PointConfig::new(3, points, 6)
        .and_then(|partial| CBSystem::complete(&partial, &ResidualOptions::with_seed(seed)))
        .and_then(|sys| separation_condition(&fixtures::motzkin(), &sys, sys.residual_index));
    match report {
        Ok(r) => {
            row.satisfied = r.holds;
            row.lhs = Some(r.lhs);
            row.rhs = Some(r.rhs);
        }
        Err(_) => row.excluded_reason = Some(Exclusion::GenericityFailure),
    }
    row
}

/// `min, min + step, …` up to and including `max`.
pub fn grid_values(min: &Rat, max: &Rat, step: &Rat) -> Result<Vec<Rat>> {
    if !step.is_positive() {
        return Err(Error::Usage("grid step must be positive".into()));
    }
    if min > max {
        return Err(Error::Usage("grid minimum exceeds maximum".into()));
    }
    let mut out = Vec::new();
    let mut x = min.clone();
    while &x <= max {
        out.push(x.clone());
        x += step;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub qmin: Rat,
    pub qmax: Rat,
    pub smin: Rat,
    pub smax: Rat,
    pub step: Rat,
}

/// Scans the grid in parallel; rows come back in row-major order (q outer).
pub fn scan_motzkin_symmetric(grid: &Grid, seed: u64) -> Result<Vec<ScanRow>> {
    let qs = grid_values(&grid.qmin, &grid.qmax, &grid.step)?;
    let ss = grid_values(&grid.smin, &grid.smax, &grid.step)?;
    let cells: Vec<(Rat, Rat)> = qs
        .iter()
        .flat_map(|q| ss.iter().map(move |s| (q.clone(), s.clone())))
        .collect();
    Ok(cells.par_iter().map(|(q, s)| scan_cell(q, s, seed)).collect())
}

pub fn rows_to_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.to_csv());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::ratio;

    #[test]
    fn reference_cells() {
        assert!(scan_cell(&rat(0), &rat(4), 0).satisfied);
        let b = scan_cell(&ratio(2, 7), &ratio(2, 3), 0);
        assert!(b.excluded_reason.is_none());
        assert!(!b.satisfied);
    }

    #[test]
    fn exclusions_take_precedence() {
        assert_eq!(exclusion(&rat(1), &rat(1)), Some(Exclusion::QEqualsS));
        assert_eq!(exclusion(&rat(-1), &rat(3)), Some(Exclusion::QPlusMinusOne));
        assert_eq!(exclusion(&rat(3), &rat(-1)), Some(Exclusion::SPlusMinusOne));
        assert_eq!(exclusion(&rat(3), &rat(-5)), Some(Exclusion::QEqualsMinusTwoMinusS));
        assert_eq!(exclusion(&rat(0), &rat(2)), Some(Exclusion::QEqualsTwoMinusS));
        assert_eq!(exclusion(&rat(0), &rat(3)), None);
    }

    #[test]
    fn grid_and_csv() {
        let grid = Grid {
            qmin: rat(0),
            qmax: rat(1),
            smin: rat(3),
            smax: rat(4),
            step: ratio(1, 2),
        };
        let rows = scan_motzkin_symmetric(&grid, 0).unwrap();
        assert_eq!(rows.len(), 9);
        assert_eq!((rows[1].q.clone(), rows[1].s.clone()), (rat(0), ratio(7, 2)));
        let csv = rows_to_csv(&rows);
        assert!(csv.starts_with("q,s,lhs,rhs,satisfied,excluded_reason\n0/1,3/1,"));
        assert!(csv.contains(",false,q=+-1\n"));
        assert!(grid_values(&rat(0), &rat(1), &rat(0)).is_err());
    }
}
