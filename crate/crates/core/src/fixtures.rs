//! Reference polynomials and point sets used by the regression runner, the
//! examples and the tests.

use crate::configuration::Point;
use crate::exactq::{rat, ratio, Rat};
use crate::forms::{Form, Poly};

fn var(nvars: usize, i: usize) -> Poly {
    Poly::var(nvars, i)
}

fn point(v: &[i64]) -> Point {
    v.iter().map(|&x| rat(x)).collect()
}

/// Ternary form from `(exponent, integer coefficient)` pairs.
pub fn cubic(terms: &[([u32; 3], i64)]) -> Form {
    let poly = terms.iter().fold(Poly::zero(3), |acc, (e, c)| {
        &acc + &Poly::monomial(e.to_vec(), rat(*c))
    });
    Form::from_poly(poly)
}

/// `x⁴y² + x²y⁴ − 3x²y²z² + z⁶`
pub fn motzkin() -> Form {
    let (x, y, z) = (var(3, 0), var(3, 1), var(3, 2));
    let x2 = x.pow(2);
    let y2 = y.pow(2);
    let p = &(&(&x2.pow(2) * &y2) + &(&x2 * &y2.pow(2)))
        + &(&(&(&x2 * &y2) * &z.pow(2)).scale(&rat(-3)) + &z.pow(6));
    Form::from_poly(p)
}

pub fn motzkin_zeros() -> Vec<Point> {
    vec![
        point(&[1, 0, 0]),
        point(&[0, 1, 0]),
        point(&[1, 1, 1]),
        point(&[-1, 1, 1]),
        point(&[1, -1, 1]),
        point(&[1, 1, -1]),
    ]
}

/// Extra points completing the Motzkin zeros to a certifying configuration.
pub fn motzkin_good_extras() -> Vec<Point> {
    vec![point(&[0, 4, 1]), point(&[4, 0, 1])]
}

/// Extra points for which the separation condition fails.
pub fn motzkin_failing_extras() -> Vec<Point> {
    vec![
        vec![ratio(2, 7), ratio(2, 3), rat(1)],
        vec![ratio(2, 3), ratio(2, 7), rat(1)],
    ]
}

/// Symmetric extras `(q, s, 1)` and `(s, q, 1)`.
pub fn motzkin_symmetric_extras(q: &Rat, s: &Rat) -> Vec<Point> {
    vec![
        vec![q.clone(), s.clone(), rat(1)],
        vec![s.clone(), q.clone(), rat(1)],
    ]
}

/// Reznick's sextic with seven zeros:
/// `x²y²(x−y)² + y²z²(y−z)² + z²x²(z−x)² + xyz(x−y)(y−z)(z−x)`.
pub fn reznick_seven_zero() -> Form {
    let (x, y, z) = (var(3, 0), var(3, 1), var(3, 2));
    let xy = &x - &y;
    let yz = &y - &z;
    let zx = &z - &x;
    let sq = |a: &Poly, b: &Poly, d: &Poly| &(&a.pow(2) * &b.pow(2)) * &d.pow(2);
    let p = &(&(&sq(&x, &y, &xy) + &sq(&y, &z, &yz)) + &sq(&z, &x, &zx))
        + &(&(&(&(&x * &y) * &z) * &xy) * &(&yz * &zx));
    Form::from_poly(p)
}

pub fn reznick_zeros() -> Vec<Point> {
    vec![
        point(&[1, 0, 0]),
        point(&[0, 1, 0]),
        point(&[0, 0, 1]),
        point(&[1, 1, 0]),
        point(&[1, 0, 1]),
        point(&[0, 1, 1]),
        point(&[1, 1, 1]),
    ]
}

pub fn reznick_extra() -> Point {
    point(&[-2, 5, -1])
}

/// Vertices `(±1, ±1, ±1, 1)` of the cube, in binary counting order.
pub fn cube_vertices() -> Vec<Point> {
    let mut out = Vec::new();
    for sx in [1, -1] {
        for sy in [1, -1] {
            for sz in [1, -1] {
                out.push(point(&[sx, sy, sz, 1]));
            }
        }
    }
    out
}

/// Choi–Lam quartic `x²y² + y²z² + z²x² + w⁴ − 4xyzw`.
pub fn choi_lam() -> Form {
    let (x, y, z, w) = (var(4, 0), var(4, 1), var(4, 2), var(4, 3));
    let p = &(&(&(&x.pow(2) * &y.pow(2)) + &(&y.pow(2) * &z.pow(2)))
        + &(&(&z.pow(2) * &x.pow(2)) + &w.pow(4)))
        - &(&(&(&x * &y) * &z) * &w).scale(&rat(4));
    Form::from_poly(p)
}

pub fn choi_lam_zeros() -> Vec<Point> {
    vec![
        point(&[1, 0, 0, 0]),
        point(&[0, 1, 0, 0]),
        point(&[0, 0, 1, 0]),
        point(&[1, 1, 1, 1]),
        point(&[1, -1, -1, 1]),
        point(&[-1, 1, -1, 1]),
        point(&[-1, -1, 1, 1]),
    ]
}

/// `(x² + y² + z²)³`, an interior point of the ternary sextic SOS cone.
pub fn sphere_sextic() -> Form {
    let s = &(&var(3, 0).pow(2) + &var(3, 1).pow(2)) + &var(3, 2).pow(2);
    Form::from_poly(s.pow(3))
}

/// `(x² + y² + z² + w²)²`, interior for quaternary quartics.
pub fn sphere_quartic() -> Form {
    let s = &(&(&var(4, 0).pow(2) + &var(4, 1).pow(2)) + &var(4, 2).pow(2)) + &var(4, 3).pow(2);
    Form::from_poly(s.pow(2))
}
