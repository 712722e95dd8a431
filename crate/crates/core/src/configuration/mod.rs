//! Point configurations: genericity, forms through points, the residual
//! intersection point, and Cayley–Bacharach coefficients.
//!
//! Ternary configurations live in the space of cubics (nine points, pencils of
//! two cubics); quaternary ones in the space of quadrics (eight points, nets of
//! three quadrics). Everything here works with fixed affine representatives,
//! since the coefficients `u_j` scale with them.

mod genericity;
mod residual;

use itertools::Itertools;
use num_traits::{Signed, Zero};

pub use genericity::{check_points, GenericityViolation, ViolationKind};
pub use residual::{residual_point, ResidualOptions, DEFAULT_RETRY_BUDGET};

use crate::error::{Error, Result};
use crate::exactq::{fmt_rat, parse_rat, primitive_integer_vector, proportional, Rat, RatMatrix};
use crate::forms::{veronese, Form, MonomialBasis};

/// Affine representative of a projective point.
pub type Point = Vec<Rat>;

/// Number of points in a complete configuration: 9 for ternary cubics, 8 for
/// quaternary quadrics.
pub fn full_size(nvars: usize) -> usize {
    if nvars == 3 {
        9
    } else {
        8
    }
}

/// Degree of the forms vanishing on a configuration: 3 (ternary) or 2 (quaternary).
pub fn pencil_degree(nvars: usize) -> u32 {
    if nvars == 3 {
        3
    } else {
        2
    }
}

pub fn projectively_equal(a: &[Rat], b: &[Rat]) -> bool {
    proportional(a, b)
}

/// Coprime integer coordinates with the first nonzero coordinate positive.
pub fn canonical_representative(p: &[Rat]) -> Point {
    let mut v = primitive_integer_vector(p);
    if v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
        v.iter_mut().for_each(|x| *x = -x.clone());
    }
    v
}

fn check_nvars(nvars: usize) -> Result<()> {
    if nvars == 3 || nvars == 4 {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: 3,
            found: nvars,
        })
    }
}

/// Ordered points; the first `zero_count` are zeros of the target form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    nvars: usize,
    points: Vec<Point>,
    zero_count: usize,
}

impl PointConfig {
    /// Validates dimensions, nonzero representatives, projective distinctness and
    /// `zero_count <= points.len()`.
    pub fn new(nvars: usize, points: Vec<Point>, zero_count: usize) -> Result<Self> {
        check_nvars(nvars)?;
        for p in &points {
            if p.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: p.len(),
                });
            }
            if p.iter().all(Zero::is_zero) {
                return Err(Error::NonGeneric("zero vector is not a projective point".into()));
            }
        }
        if zero_count > points.len() {
            return Err(Error::DimensionMismatch {
                expected: points.len(),
                found: zero_count,
            });
        }
        for (i, j) in (0..points.len()).tuple_combinations() {
            if projectively_equal(&points[i], &points[j]) {
                return Err(Error::Genericity(GenericityViolation {
                    kind: ViolationKind::Duplicate,
                    subset: vec![i, j],
                }));
            }
        }
        Ok(PointConfig {
            nvars,
            points,
            zero_count,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn zero_count(&self) -> usize {
        self.zero_count
    }

    pub fn is_full(&self) -> bool {
        self.len() == full_size(self.nvars)
    }

    pub fn with_point(&self, p: Point) -> Result<Self> {
        let mut points = self.points.clone();
        points.push(p);
        Self::new(self.nvars, points, self.zero_count)
    }

    pub fn without_point(&self, index: usize) -> Result<Self> {
        let mut points = self.points.clone();
        points.remove(index);
        let zero_count = if index < self.zero_count {
            self.zero_count - 1
        } else {
            self.zero_count
        };
        Self::new(self.nvars, points, zero_count)
    }

    /// Same points with `a` and `b` exchanged.
    pub fn swapped(&self, a: usize, b: usize) -> Self {
        let mut out = self.clone();
        out.points.swap(a, b);
        out
    }
}

pub fn genericity_check(cfg: &PointConfig) -> std::result::Result<(), GenericityViolation> {
    check_points(cfg.nvars, &cfg.points)
}

/// Canonical (echelon) basis of all forms of degree `d` vanishing on `points`.
pub fn vanishing_space(nvars: usize, points: &[Point], d: u32) -> Vec<Form> {
    let basis = MonomialBasis::new(nvars, d);
    if points.is_empty() {
        return (0..basis.len())
            .map(|i| {
                let mut c = vec![Rat::zero(); basis.len()];
                c[i] = Rat::from_integer(1.into());
                Form::from_coefficients(&basis, &c).expect("sizes agree")
            })
            .collect();
    }
    let eval = RatMatrix::from_rows(points.iter().map(|p| veronese(p, d)).collect());
    let (_, kernel) = eval.nullspace();
    kernel
        .into_iter()
        .map(|c| Form::from_coefficients(&basis, &c).expect("sizes agree"))
        .collect()
}

/// Whether `f` lies in the span of `basis` (all of the same degree and nvars).
pub fn span_contains(basis: &[Form], f: &Form) -> bool {
    let mb = f.basis();
    let mut rows: Vec<Vec<Rat>> = basis.iter().map(|b| b.coefficients(&mb)).collect();
    let before = RatMatrix::from_rows(rows.clone()).rank();
    rows.push(f.coefficients(&mb));
    RatMatrix::from_rows(rows).rank() == before
}

/// The Cayley–Bacharach relation of a full configuration.
///
/// Returns the generator of the one-dimensional space of `u` with
/// `Σ u_j f(v_j) = 0` for every form of the pencil degree, scaled to coprime
/// integers with the last entry positive.
pub fn cb_coefficients(cfg: &PointConfig) -> Result<Vec<Rat>> {
    if !cfg.is_full() {
        return Err(Error::DimensionMismatch {
            expected: full_size(cfg.nvars),
            found: cfg.len(),
        });
    }
    genericity_check(cfg).map_err(Error::Genericity)?;
    let d = pencil_degree(cfg.nvars);
    let by_point = RatMatrix::from_rows(cfg.points.iter().map(|p| veronese(p, d)).collect());
    let (_, kernel) = by_point.transpose().nullspace();
    if kernel.len() != 1 {
        return Err(Error::NotCayleyBacharach {
            dimension: kernel.len(),
        });
    }
    let mut u = primitive_integer_vector(&kernel[0]);
    if let Some(j) = u.iter().position(Zero::is_zero) {
        return Err(Error::TransversalityViolated { index: j + 1 });
    }
    if u.last().expect("nonempty").is_negative() {
        u.iter_mut().for_each(|x| *x = -x.clone());
    }
    Ok(u)
}

/// Full configuration with its vanishing pencil (or net) and CB coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CBSystem {
    pub config: PointConfig,
    pub pencil: Vec<Form>,
    pub residual_index: usize,
    pub u: Vec<Rat>,
}

impl CBSystem {
    /// Completes 8 (ternary) or 7 (quaternary) points by their residual
    /// intersection point and computes the relation.
    pub fn complete(partial: &PointConfig, options: &ResidualOptions) -> Result<CBSystem> {
        let expected = full_size(partial.nvars) - 1;
        if partial.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: partial.len(),
            });
        }
        let residual = residual_point(partial.nvars, &partial.points, options)?;
        let config = partial.with_point(residual)?;
        Self::from_full(config)
    }

    /// Uses a full configuration as given; the last point is the residual one.
    pub fn from_full(config: PointConfig) -> Result<CBSystem> {
        let u = cb_coefficients(&config)?;
        let pencil = vanishing_space(config.nvars, &config.points, pencil_degree(config.nvars));
        let expected = if config.nvars == 3 { 2 } else { 3 };
        if pencil.len() != expected {
            return Err(Error::NonGeneric(format!(
                "forms through the configuration span dimension {}, expected {expected}",
                pencil.len()
            )));
        }
        let residual_index = config.len() - 1;
        Ok(CBSystem {
            config,
            pencil,
            residual_index,
            u,
        })
    }

    pub fn points(&self) -> &[Point] {
        self.config.points()
    }

    pub fn residual(&self) -> &Point {
        &self.config.points()[self.residual_index]
    }
}

/// Parses the points format: header `points nvars=<n>` then one point per line.
pub fn parse_points(text: &str) -> Result<(usize, Vec<Point>)> {
    let mut nvars = None;
    let mut points = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some(n) = nvars else {
            let n = line
                .strip_prefix("points")
                .and_then(|rest| rest.trim().strip_prefix("nvars="))
                .and_then(|v| v.trim().parse::<usize>().ok())
                .filter(|n| *n == 3 || *n == 4)
                .ok_or_else(|| Error::parse(line_no, "expected header `points nvars=<3|4>`"))?;
            nvars = Some(n);
            continue;
        };
        let p: Point = line
            .split_whitespace()
            .map(parse_rat)
            .collect::<Option<_>>()
            .ok_or_else(|| Error::parse(line_no, "bad rational coordinate"))?;
        if p.len() != n {
            return Err(Error::parse(
                line_no,
                format!("expected {n} coordinates, found {}", p.len()),
            ));
        }
        points.push(p);
    }
    let nvars = nvars.ok_or_else(|| Error::parse(0, "missing points header"))?;
    Ok((nvars, points))
}

pub fn points_to_text(nvars: usize, points: &[Point]) -> String {
    let mut out = format!("points nvars={nvars}\n");
    for p in points {
        out.push_str(&format_point(p));
        out.push('\n');
    }
    out
}

pub fn format_point(p: &[Rat]) -> String {
    p.iter().map(fmt_rat).join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{rat, ratio};
    use crate::fixtures;

    fn pt(v: &[i64]) -> Point {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn motzkin_eight() -> Vec<Point> {
        let mut p = fixtures::motzkin_zeros();
        p.extend(fixtures::motzkin_good_extras());
        p
    }

    #[test]
    fn genericity_examples() {
        assert_eq!(check_points(3, &motzkin_eight()), Ok(()));
        let line = vec![pt(&[1, 0, 0]), pt(&[1, 1, 0]), pt(&[1, 2, 0]), pt(&[1, 3, 0])];
        let v = check_points(3, &line).unwrap_err();
        assert_eq!(v.kind, ViolationKind::Line);
        assert_eq!(v.subset, vec![0, 1, 2, 3]);
        let conic: Vec<Point> = (0..7).map(|t| pt(&[t * t, t, 1])).collect();
        let v = check_points(3, &conic).unwrap_err();
        assert_eq!(v.kind, ViolationKind::Quadric);
        assert_eq!(v.subset, (0..7).collect::<Vec<_>>());
        let dup = vec![pt(&[1, 0, 0]), pt(&[2, 0, 0])];
        assert_eq!(check_points(3, &dup).unwrap_err().kind, ViolationKind::Duplicate);
        let mut plane: Vec<Point> = fixtures::cube_vertices().into_iter().take(4).collect();
        plane.push(pt(&[1, 0, 0, 1]));
        assert_eq!(check_points(4, &plane).unwrap_err().kind, ViolationKind::Plane);
        assert_eq!(check_points(4, &fixtures::cube_vertices()), Ok(()));
    }

    #[test]
    fn config_rejects_duplicates_and_zero() {
        assert!(PointConfig::new(3, vec![pt(&[1, 2, 3]), pt(&[-2, -4, -6])], 0).is_err());
        assert!(PointConfig::new(3, vec![pt(&[0, 0, 0])], 0).is_err());
        assert!(PointConfig::new(3, vec![pt(&[1, 2])], 0).is_err());
    }

    #[test]
    fn motzkin_vanishing_pencil_contains_known_cubics() {
        let space = vanishing_space(3, &motzkin_eight(), 3);
        assert_eq!(space.len(), 2);
        let q1 = fixtures::cubic(&[
            ([0, 0, 3], -16),
            ([2, 0, 1], 15),
            ([0, 2, 1], 1),
            ([1, 2, 0], 56),
            ([1, 0, 2], -56),
        ]);
        let q2 = fixtures::cubic(&[
            ([0, 0, 3], -4),
            ([2, 1, 0], -1),
            ([2, 0, 1], 4),
            ([1, 2, 0], 15),
            ([1, 0, 2], -15),
            ([0, 1, 2], 1),
        ]);
        assert!(span_contains(&space, &q1));
        assert!(span_contains(&space, &q2));
        assert!(!span_contains(&space, &fixtures::cubic(&[([3, 0, 0], 1)])));
    }

    #[test]
    fn reznick_vanishing_spaces() {
        let mut eight = fixtures::reznick_zeros();
        assert_eq!(vanishing_space(3, &eight, 3).len(), 3);
        eight.push(fixtures::reznick_extra());
        let space = vanishing_space(3, &eight, 3);
        assert_eq!(space.len(), 2);
        let q1 = fixtures::cubic(&[([2, 1, 0], -1), ([2, 0, 1], -35), ([1, 2, 0], 1), ([1, 0, 2], 35)]);
        let q2 = fixtures::cubic(&[([2, 0, 1], 15), ([0, 2, 1], -1), ([1, 0, 2], -15), ([0, 1, 2], 1)]);
        assert!(span_contains(&space, &q1));
        assert!(span_contains(&space, &q2));
    }

    #[test]
    fn cb_of_reznick_configuration() {
        let mut points = fixtures::reznick_zeros();
        points.push(fixtures::reznick_extra());
        points.push(pt(&[3, 10, 1]));
        let cfg = PointConfig::new(3, points, 7).unwrap();
        let u = cb_coefficients(&cfg).unwrap();
        let expected: Vec<Rat> = [84, -1260, -36, -90, 63, 35, -60, 3, 1].iter().map(|&x| rat(x)).collect();
        assert_eq!(u, expected);
    }

    #[test]
    fn cb_of_cube_vertices_is_parity() {
        let cube = fixtures::cube_vertices();
        let cfg = PointConfig::new(4, cube.clone(), 0).unwrap();
        let u = cb_coefficients(&cfg).unwrap();
        let parity: Vec<Rat> = cube.iter().map(|v| &v[0] * &v[1] * &v[2]).collect();
        assert!(proportional(&u, &parity));
    }

    #[test]
    fn cb_errors() {
        let cfg = PointConfig::new(3, motzkin_eight(), 6).unwrap();
        assert!(matches!(cb_coefficients(&cfg), Err(Error::DimensionMismatch { .. })));
        // Nine points on no common pair of cubics: relation space is trivial.
        let mut nine = motzkin_eight();
        nine.push(pt(&[2, 3, 5]));
        let cfg = PointConfig::new(3, nine, 6).unwrap();
        assert!(matches!(cb_coefficients(&cfg), Err(Error::NotCayleyBacharach { dimension: 0 })));
    }

    #[test]
    fn canonical_representatives() {
        assert_eq!(canonical_representative(&[rat(1), rat(1), ratio(-7, 2)]), pt(&[2, 2, -7]));
        assert_eq!(canonical_representative(&[rat(0), ratio(-2, 3), rat(4)]), pt(&[0, 1, -6]));
    }

    #[test]
    fn points_text_round_trip() {
        let pts = fixtures::motzkin_failing_extras();
        let text = points_to_text(3, &pts);
        assert_eq!(parse_points(&text).unwrap(), (3, pts));
        assert!(matches!(parse_points("points nvars=3\n1 2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_points("1 2 3"), Err(Error::Parse { line: 1, .. })));
    }
}
