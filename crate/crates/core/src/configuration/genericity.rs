use std::fmt;

use itertools::Itertools;

use super::{projectively_equal, Point};
use crate::exactq::RatMatrix;
use crate::forms::veronese;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// Two points are the same projective point.
    Duplicate,
    /// Four points on a line (ternary case).
    Line,
    /// Seven points on a conic (ternary case).
    Quadric,
    /// Five points on a plane (quaternary case).
    Plane,
}

/// A failed genericity test with the offending points (0-based positions).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityViolation {
    pub kind: ViolationKind,
    pub subset: Vec<usize>,
}

impl fmt::Display for GenericityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::Duplicate => "projectively equal points",
            ViolationKind::Line => "four points on a line",
            ViolationKind::Quadric => "seven points on a conic",
            ViolationKind::Plane => "five points on a plane",
        };
        let idx = self.subset.iter().map(|i| (i + 1).to_string()).join(", ");
        write!(f, "{what} (points {idx})")
    }
}

impl std::error::Error for GenericityViolation {}

/// Checks distinctness and, for three variables, that no four points are
/// collinear and no seven lie on a conic; for four variables, that no five lie
/// on a plane. All tests are exact rank computations over row subsets.
pub fn check_points(nvars: usize, points: &[Point]) -> Result<(), GenericityViolation> {
    for (i, j) in (0..points.len()).tuple_combinations() {
        if projectively_equal(&points[i], &points[j]) {
            return Err(GenericityViolation {
                kind: ViolationKind::Duplicate,
                subset: vec![i, j],
            });
        }
    }
    let coords = RatMatrix::from_rows(points.to_vec());
    let (kind, size, full) = match nvars {
        3 => (ViolationKind::Line, 4, 3),
        _ => (ViolationKind::Plane, 5, 4),
    };
    if points.len() >= size {
        let ranks = coords.rank_of_submatrices(size).expect("subset fits");
        if ranks.min < full {
            return Err(GenericityViolation {
                kind,
                subset: ranks.min_witness,
            });
        }
    }
    if nvars == 3 && points.len() >= 7 {
        let conic = RatMatrix::from_rows(points.iter().map(|p| veronese(p, 2)).collect());
        let ranks = conic.rank_of_submatrices(7).expect("subset fits");
        if ranks.min < 6 {
            return Err(GenericityViolation {
                kind: ViolationKind::Quadric,
                subset: ranks.min_witness,
            });
        }
    }
    Ok(())
}
