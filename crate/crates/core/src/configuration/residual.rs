//! The residual intersection point of the cubics through eight points (or the
//! quadrics through seven points in projective 3-space).
//!
//! The forms are moved by a random invertible coordinate change into a chart
//! where every known point is affine with distinct first coordinates. Resultants
//! then eliminate the remaining variables; the known first coordinates are
//! divided out and the leftover rational root gives the residual point, which is
//! finally mapped back. Unlucky charts are retried with a fresh change.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{canonical_representative, check_points, projectively_equal, vanishing_space, Point};
use crate::error::{Error, Result};
use crate::exactq::{rat, Rat, RatMatrix};
use crate::forms::{resultant, Form, Poly, UniPoly};

pub const DEFAULT_RETRY_BUDGET: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualOptions {
    pub seed: u64,
    pub budget: usize,
}

impl Default for ResidualOptions {
    fn default() -> Self {
        ResidualOptions {
            seed: 0,
            budget: DEFAULT_RETRY_BUDGET,
        }
    }
}

impl ResidualOptions {
    pub fn with_seed(seed: u64) -> Self {
        ResidualOptions {
            seed,
            ..Self::default()
        }
    }
}

/// Outcome of one chart attempt.
enum Attempt {
    Found(Point),
    Retry,
}

/// The remaining common zero of the forms through `points`, as a canonical
/// integer representative.
pub fn residual_point(nvars: usize, points: &[Point], options: &ResidualOptions) -> Result<Point> {
    let expected = if nvars == 3 { 8 } else { 7 };
    if points.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: points.len(),
        });
    }
    check_points(nvars, points).map_err(Error::Genericity)?;
    let (degree, dimension) = if nvars == 3 { (3, 2) } else { (2, 3) };
    let forms = vanishing_space(nvars, points, degree);
    if forms.len() != dimension {
        return Err(Error::NonGeneric(format!(
            "forms through the points span dimension {}, expected {dimension}",
            forms.len()
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    for attempt in 0..options.budget {
        let change = random_invertible(&mut rng, nvars, 3 + attempt as i64);
        let Some(chart) = Chart::new(&change, points)? else {
            continue;
        };
        let attempt = if nvars == 3 {
            ternary_attempt(&forms, &chart)?
        } else {
            quaternary_attempt(&forms, &chart)?
        };
        if let Attempt::Found(w) = attempt {
            let v = change.mul_vec(&w)?;
            let v = canonical_representative(&v);
            for f in &forms {
                if !f.evaluate(&v)?.is_zero() {
                    return Err(Error::DegenerateIntersection(
                        "candidate does not lie on every form".into(),
                    ));
                }
            }
            if points.iter().any(|p| projectively_equal(p, &v)) {
                return Err(Error::DegenerateIntersection(
                    "residual point coincides with an input point".into(),
                ));
            }
            return Ok(v);
        }
    }
    Err(Error::DegenerateIntersection(format!(
        "no rational simple residual point found within {} coordinate changes",
        options.budget
    )))
}

/// Entries in `[-bound, bound]`.
fn random_invertible(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> RatMatrix {
    loop {
        let m = RatMatrix::from_rows(
            (0..n)
                .map(|_| (0..n).map(|_| rat(rng.gen_range(-bound..=bound))).collect())
                .collect(),
        );
        if !m.determinant().expect("square").is_zero() {
            return m;
        }
    }
}

/// Known points in new coordinates, normalized to last coordinate 1.
struct Chart {
    change: RatMatrix,
    affine: Vec<Point>,
}

impl Chart {
    /// `None` when a known point sits at infinity or two share a first coordinate.
    fn new(change: &RatMatrix, points: &[Point]) -> Result<Option<Chart>> {
        let inverse = change.inverse()?;
        let n = change.rows();
        let mut affine = Vec::with_capacity(points.len());
        for p in points {
            let w = inverse.mul_vec(p)?;
            let last = w[n - 1].clone();
            if last.is_zero() {
                return Ok(None);
            }
            affine.push(w.iter().take(n - 1).map(|x| x / &last).collect::<Point>());
        }
        for i in 0..affine.len() {
            for j in 0..i {
                if affine[i][0] == affine[j][0] {
                    return Ok(None);
                }
            }
        }
        Ok(Some(Chart {
            change: change.clone(),
            affine,
        }))
    }

    /// The forms in new coordinates restricted to last coordinate 1, with that
    /// variable dropped.
    fn transform(&self, forms: &[Form]) -> Result<Vec<Poly>> {
        forms
            .iter()
            .map(|f| {
                let g = f.linear_change(&self.change)?;
                let last = g.nvars() - 1;
                Ok(drop_variable(&g.dehomogenize(last), last))
            })
            .collect()
    }
}

/// Removes a variable that no longer occurs.
fn drop_variable(p: &Poly, var: usize) -> Poly {
    let mut out = Poly::zero(p.nvars() - 1);
    for (e, c) in p.terms() {
        debug_assert_eq!(e[var], 0);
        let mut e = e.clone();
        e.remove(var);
        out = &out + &Poly::monomial(e, c.clone());
    }
    out
}

/// Univariate polynomial in the last remaining variable after fixing the
/// leading ones to `values`.
fn specialize(p: &Poly, values: &[Rat]) -> Result<UniPoly> {
    let mut q = p.clone();
    for (i, v) in values.iter().enumerate() {
        q = q.substitute(i, v);
    }
    q.to_univariate(values.len())
}

fn distinct_rational_roots(f: &UniPoly) -> Result<Vec<Rat>> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let mut roots = f.rational_roots()?;
    roots.dedup();
    Ok(roots)
}

fn ternary_attempt(forms: &[Form], chart: &Chart) -> Result<Attempt> {
    let g = chart.transform(forms)?;
    let r = resultant(&g[0], &g[1], 1)?;
    if r.is_zero() {
        return Ok(Attempt::Retry);
    }
    let mut r = r.to_univariate(0)?;
    // Degree 9 means no intersection at infinity in this chart.
    if r.degree() != Some(9) {
        return Ok(Attempt::Retry);
    }
    for p in &chart.affine {
        match r.deflate(&p[0]) {
            Ok(q) => r = q,
            Err(_) => return Ok(Attempt::Retry),
        }
    }
    let c = r.coeffs();
    let x = -&c[0] / &c[1];
    if chart.affine.iter().any(|p| p[0] == x) {
        return Ok(Attempt::Retry);
    }
    let h0 = specialize(&g[0], std::slice::from_ref(&x))?;
    let h1 = specialize(&g[1], std::slice::from_ref(&x))?;
    let common = h0.gcd(&h1);
    if common.degree() != Some(1) {
        return Ok(Attempt::Retry);
    }
    let y = -common.coeffs()[0].clone();
    Ok(Attempt::Found(vec![x, y, Rat::one()]))
}

fn quaternary_attempt(forms: &[Form], chart: &Chart) -> Result<Attempt> {
    let g = chart.transform(forms)?;
    let r12 = resultant(&g[0], &g[1], 2)?;
    let r13 = resultant(&g[0], &g[2], 2)?;
    if r12.is_zero() || r13.is_zero() {
        return Ok(Attempt::Retry);
    }
    let (r12, r13) = (drop_variable(&r12, 2), drop_variable(&r13, 2));
    if r12.degree_in(1).unwrap_or(0) == 0 || r13.degree_in(1).unwrap_or(0) == 0 {
        return Ok(Attempt::Retry);
    }
    let f = resultant(&r12, &r13, 1)?;
    if f.is_zero() {
        return Ok(Attempt::Retry);
    }
    let mut f = f.to_univariate(0)?;
    for p in &chart.affine {
        while f.degree().unwrap_or(0) > 0 && f.eval(&p[0]).is_zero() {
            f = f.deflate(&p[0])?;
        }
    }

    // Candidates as (chart point, original point).
    let mut found: Vec<(Point, Point)> = Vec::new();
    for x in distinct_rational_roots(&f)? {
        let ys = specialize(&r12, std::slice::from_ref(&x))?.gcd(&specialize(&r13, std::slice::from_ref(&x))?);
        if ys.is_zero() {
            return Ok(Attempt::Retry);
        }
        for y in distinct_rational_roots(&ys)? {
            let xy = [x.clone(), y];
            let zs = g
                .iter()
                .map(|p| specialize(p, &xy))
                .collect::<Result<Vec<_>>>()?
                .iter()
                .fold(UniPoly::zero(), |acc, h| acc.gcd(h));
            if zs.is_zero() {
                return Ok(Attempt::Retry);
            }
            for z in distinct_rational_roots(&zs)? {
                let w = vec![xy[0].clone(), xy[1].clone(), z, Rat::one()];
                let v = chart.change.mul_vec(&w)?;
                if chart.affine.iter().any(|p| p[0] == w[0] && p[1] == w[1] && p[2] == w[2]) {
                    continue;
                }
                if !found.iter().any(|(_, q)| projectively_equal(q, &v)) {
                    found.push((w, v));
                }
            }
        }
    }
    if found.len() == 1 {
        Ok(Attempt::Found(found.remove(0).0))
    } else {
        Ok(Attempt::Retry)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::ratio;
    use crate::fixtures;

    fn pt(v: &[i64]) -> Point {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn with(mut base: Vec<Point>, extra: Vec<Point>) -> Vec<Point> {
        base.extend(extra);
        base
    }

    #[test]
    fn motzkin_residual() {
        let pts = with(fixtures::motzkin_zeros(), fixtures::motzkin_good_extras());
        let v = residual_point(3, &pts, &ResidualOptions::default()).unwrap();
        assert_eq!(v, pt(&[2, 2, -7]));
        assert!(projectively_equal(&v, &[rat(1), rat(1), ratio(-7, 2)]));
    }

    #[test]
    fn reznick_residual() {
        let pts = with(fixtures::reznick_zeros(), vec![fixtures::reznick_extra()]);
        let v = residual_point(3, &pts, &ResidualOptions::default()).unwrap();
        assert_eq!(v, pt(&[3, 10, 1]));
    }

    #[test]
    fn failing_motzkin_residual() {
        let pts = with(fixtures::motzkin_zeros(), fixtures::motzkin_failing_extras());
        let v = residual_point(3, &pts, &ResidualOptions::default()).unwrap();
        assert_eq!(v, pt(&[34, 34, 65]));
    }

    #[test]
    fn residual_independent_of_seed() {
        let pts = with(fixtures::motzkin_zeros(), fixtures::motzkin_good_extras());
        for seed in 0..10 {
            let v = residual_point(3, &pts, &ResidualOptions::with_seed(seed)).unwrap();
            assert_eq!(v, pt(&[2, 2, -7]), "seed {seed}");
        }
    }

    #[test]
    fn cube_drop_one() {
        let cube = fixtures::cube_vertices();
        for i in 0..cube.len() {
            let mut rest = cube.clone();
            let removed = rest.remove(i);
            let v = residual_point(4, &rest, &ResidualOptions::with_seed(i as u64)).unwrap();
            assert!(projectively_equal(&v, &removed), "dropped {i}, got {v:?}");
        }
    }

    #[test]
    fn wrong_count_and_nongeneric() {
        let pts = fixtures::motzkin_zeros();
        assert!(matches!(
            residual_point(3, &pts, &ResidualOptions::default()),
            Err(Error::DimensionMismatch { .. })
        ));
        let line: Vec<Point> = (0..8).map(|t| pt(&[1, t, 0])).collect();
        assert!(matches!(
            residual_point(3, &line, &ResidualOptions::default()),
            Err(Error::Genericity(_))
        ));
    }

    #[test]
    fn zero_budget_is_degenerate() {
        let pts = with(fixtures::motzkin_zeros(), fixtures::motzkin_good_extras());
        let options = ResidualOptions { seed: 0, budget: 0 };
        assert!(matches!(residual_point(3, &pts, &options), Err(Error::DegenerateIntersection(_))));
    }
}
