//! Homogeneous forms over `Rat`, their coordinates in a fixed monomial basis, and
//! the elimination tools (univariate arithmetic, resultants) built on them.
//!
//! Text format, one term per line after a header:
//!
//! ```text
//! form nvars=3 degree=6
//! # comment
//! 4 2 0 : 1
//! 2 2 2 : -3
//! ```

mod poly;
mod univariate;

use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};

pub use poly::{determinant, resultant, resultant_y, Exponent, Poly};
pub use univariate::{simplest_between, UniPoly};

use crate::error::{Error, Result};
use crate::exactq::{fmt_rat, parse_rat, Rat, RatMatrix};

const VAR_NAMES: [&str; 4] = ["x", "y", "z", "w"];

/// Exponent tuples of all monomials of one degree, in graded lexicographic
/// order (`x > y > z > w`, so `x^d` comes first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    nvars: usize,
    degree: u32,
    monomials: Vec<Exponent>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, degree: u32) -> Self {
        let mut monomials = Vec::new();
        let mut current = vec![0; nvars];
        fill_exponents(&mut current, 0, degree, &mut monomials);
        MonomialBasis {
            nvars,
            degree,
            monomials,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Exponent] {
        &self.monomials
    }

    pub fn index_of(&self, exp: &[u32]) -> Option<usize> {
        self.monomials.iter().position(|e| e == exp)
    }
}

fn fill_exponents(current: &mut Vec<u32>, var: usize, remaining: u32, out: &mut Vec<Exponent>) {
    if var + 1 == current.len() {
        current[var] = remaining;
        out.push(current.clone());
        return;
    }
    for e in (0..=remaining).rev() {
        current[var] = e;
        fill_exponents(current, var + 1, remaining - e, out);
    }
}

/// Values of every monomial of degree `d` at `v`, ordered as `MonomialBasis::new(v.len(), d)`.
///
/// For any form `f` of degree `d`, `f(v)` is the dot product of its coefficient
/// vector with this vector.
pub fn veronese(v: &[Rat], d: u32) -> Vec<Rat> {
    MonomialBasis::new(v.len(), d)
        .monomials()
        .iter()
        .map(|exp| monomial_value(exp, v))
        .collect()
}

fn monomial_value(exp: &[u32], v: &[Rat]) -> Rat {
    let mut t = Rat::one();
    for (x, &e) in v.iter().zip(exp) {
        for _ in 0..e {
            t *= x;
        }
    }
    t
}

/// Homogeneous polynomial in 3 or 4 variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Form {
    degree: u32,
    poly: Poly,
}

impl Form {
    pub fn new(poly: Poly, degree: u32) -> Result<Self> {
        if !poly.is_homogeneous(degree) {
            return Err(Error::NonGeneric(format!(
                "polynomial is not homogeneous of degree {degree}"
            )));
        }
        Ok(Form { degree, poly })
    }

    /// Form of the polynomial's own degree. Panics on the zero polynomial or
    /// inhomogeneous input; meant for literals built in code.
    pub fn from_poly(poly: Poly) -> Self {
        let degree = poly.total_degree().expect("nonzero polynomial");
        Self::new(poly, degree).expect("homogeneous polynomial")
    }

    pub fn zero(nvars: usize, degree: u32) -> Self {
        Form {
            degree,
            poly: Poly::zero(nvars),
        }
    }

    pub fn from_coefficients(basis: &MonomialBasis, coeffs: &[Rat]) -> Result<Self> {
        if coeffs.len() != basis.len() {
            return Err(Error::DimensionMismatch {
                expected: basis.len(),
                found: coeffs.len(),
            });
        }
        let mut poly = Poly::zero(basis.nvars());
        for (exp, c) in basis.monomials().iter().zip(coeffs) {
            poly.add_term(exp.clone(), c.clone());
        }
        Ok(Form {
            degree: basis.degree(),
            poly,
        })
    }

    pub fn coefficients(&self, basis: &MonomialBasis) -> Vec<Rat> {
        basis
            .monomials()
            .iter()
            .map(|e| self.poly.coefficient(e))
            .collect()
    }

    pub fn basis(&self) -> MonomialBasis {
        MonomialBasis::new(self.nvars(), self.degree)
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn evaluate(&self, v: &[Rat]) -> Result<Rat> {
        self.poly.eval(v)
    }

    pub fn scale(&self, c: &Rat) -> Form {
        Form {
            degree: self.degree,
            poly: self.poly.scale(c),
        }
    }

    pub fn add(&self, other: &Form) -> Result<Form> {
        self.check_compatible(other)?;
        Ok(Form {
            degree: self.degree,
            poly: &self.poly + &other.poly,
        })
    }

    pub fn mul(&self, other: &Form) -> Form {
        Form {
            degree: self.degree + other.degree,
            poly: &self.poly * &other.poly,
        }
    }

    pub fn square(&self) -> Form {
        self.mul(self)
    }

    fn check_compatible(&self, other: &Form) -> Result<()> {
        if self.nvars() != other.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: other.nvars(),
            });
        }
        if self.degree != other.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree as usize,
                found: other.degree as usize,
            });
        }
        Ok(())
    }

    /// The form `x ↦ f(A·x)` for an invertible square `A`.
    pub fn linear_change(&self, a: &RatMatrix) -> Result<Form> {
        let n = self.nvars();
        if a.rows() != n || a.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: a.rows(),
            });
        }
        if a.determinant()?.is_zero() {
            return Err(Error::Singular);
        }
        let images: Vec<Poly> = (0..n).map(|i| Poly::linear(a.row(i))).collect();
        Ok(Form {
            degree: self.degree,
            poly: self.poly.compose(&images)?,
        })
    }

    /// Sets variable `var` to 1. The result keeps all variables (with `var` absent).
    pub fn dehomogenize(&self, var: usize) -> Poly {
        self.poly.substitute(var, &Rat::one())
    }

    pub fn parse(text: &str) -> Result<Form> {
        let mut header: Option<(usize, u32)> = None;
        let mut poly = Poly::zero(0);
        let mut seen = std::collections::HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((nvars, degree)) = header else {
                let (nvars, degree) = parse_form_header(line).ok_or_else(|| {
                    Error::parse(line_no, "expected header `form nvars=<n> degree=<d>`")
                })?;
                header = Some((nvars, degree));
                poly = Poly::zero(nvars);
                continue;
            };
            let (exps, coeff) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(line_no, "expected `e1 e2 ... : coefficient`"))?;
            let exp: Exponent = exps
                .split_whitespace()
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::parse(line_no, "bad exponent"))?;
            if exp.len() != nvars {
                return Err(Error::parse(
                    line_no,
                    format!("expected {nvars} exponents, found {}", exp.len()),
                ));
            }
            if exp.iter().sum::<u32>() != degree {
                return Err(Error::parse(line_no, format!("exponents do not sum to {degree}")));
            }
            if !seen.insert(exp.clone()) {
                return Err(Error::parse(line_no, "duplicate monomial"));
            }
            let c = parse_rat(coeff).ok_or_else(|| Error::parse(line_no, "bad rational coefficient"))?;
            poly.add_term(exp, c);
        }
        let (_, degree) = header.ok_or_else(|| Error::parse(0, "missing form header"))?;
        Ok(Form { degree, poly })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("form nvars={} degree={}\n", self.nvars(), self.degree);
        for exp in self.basis().monomials() {
            let c = self.poly.coefficient(exp);
            if !c.is_zero() {
                out.push_str(&format!("{} : {}\n", exp.iter().join(" "), fmt_rat(&c)));
            }
        }
        out
    }
}

fn parse_form_header(line: &str) -> Option<(usize, u32)> {
    let mut parts = line.split_whitespace();
    if parts.next()? != "form" {
        return None;
    }
    let mut nvars = None;
    let mut degree = None;
    for p in parts {
        let (k, v) = p.split_once('=')?;
        match k {
            "nvars" => nvars = v.parse().ok(),
            "degree" => degree = v.parse().ok(),
            _ => return None,
        }
    }
    let nvars = nvars?;
    (nvars == 3 || nvars == 4).then_some((nvars, degree?))
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let basis = self.basis();
        let terms: Vec<String> = basis.monomials().iter().filter_map(|exp| {
            let c = self.poly.coefficient(exp);
            if c.is_zero() {
                return None;
            }
            let mono = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| match e {
                    1 => VAR_NAMES[i].to_string(),
                    _ => format!("{}^{e}", VAR_NAMES[i]),
                })
                .join("*");
            Some(if mono.is_empty() {
                fmt_rat(&c)
            } else if c.is_one() {
                mono
            } else if c == -Rat::one() {
                format!("-{mono}")
            } else {
                format!("{}*{mono}", fmt_rat(&c))
            })
        }).collect();
        write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{rat, ratio};
    use crate::fixtures;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pt(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn basis_sizes_and_order() {
        assert_eq!(MonomialBasis::new(3, 3).len(), 10);
        assert_eq!(MonomialBasis::new(4, 2).len(), 10);
        assert_eq!(MonomialBasis::new(3, 6).len(), 28);
        assert_eq!(MonomialBasis::new(4, 4).len(), 35);
        let b = MonomialBasis::new(3, 3);
        assert_eq!(b.monomials()[0], vec![3, 0, 0]);
        assert_eq!(b.monomials()[1], vec![2, 1, 0]);
        assert_eq!(b.monomials()[9], vec![0, 0, 3]);
    }

    #[test]
    fn motzkin_values() {
        let m = fixtures::motzkin();
        assert_eq!(m.evaluate(&pt(&[1, 1, 1])).unwrap(), rat(0));
        assert_eq!(m.evaluate(&pt(&[4, 0, 1])).unwrap(), rat(1));
        assert!(matches!(m.evaluate(&pt(&[1, 1])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn reznick_value() {
        let p = fixtures::reznick_seven_zero();
        assert_eq!(p.evaluate(&pt(&[-2, 5, -1])).unwrap(), rat(5384));
    }

    #[test]
    fn veronese_examples() {
        let e = veronese(&pt(&[1, 0, 0]), 3);
        assert_eq!(e[0], rat(1));
        assert!(e[1..].iter().all(Zero::is_zero));
        assert!(veronese(&pt(&[1, 1, 1]), 5).iter().all(One::is_one));
        // Hand expansion: 1 + 1 - 3*(49/4) + (7/2)^6
        let v = vec![rat(1), rat(1), ratio(-7, 2)];
        let m = fixtures::motzkin();
        let by_hand = rat(2) - rat(3) * ratio(49, 4) + ratio(117649, 64);
        assert_eq!(by_hand, ratio(115425, 64));
        let dot: Rat = m
            .coefficients(&m.basis())
            .iter()
            .zip(veronese(&v, 6))
            .map(|(a, b)| a * b)
            .sum();
        assert_eq!(dot, by_hand);
    }

    #[test]
    fn linear_change_examples() {
        let x3 = Form::from_poly(Poly::var(3, 0).pow(3));
        assert_eq!(x3.linear_change(&RatMatrix::identity(3)).unwrap(), x3);
        let swap = RatMatrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(
            x3.linear_change(&swap).unwrap(),
            Form::from_poly(Poly::var(3, 1).pow(3))
        );
        let singular = RatMatrix::from_i64(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 1]]);
        assert!(matches!(x3.linear_change(&singular), Err(Error::Singular)));
    }

    fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
        ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))
    }

    fn random_form(rng: &mut ChaCha8Rng, nvars: usize, degree: u32) -> Form {
        let basis = MonomialBasis::new(nvars, degree);
        let coeffs: Vec<Rat> = (0..basis.len()).map(|_| random_rat(rng)).collect();
        Form::from_coefficients(&basis, &coeffs).unwrap()
    }

    #[test]
    fn linear_change_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut done = 0;
        while done < 100 {
            let nvars = if done % 2 == 0 { 3 } else { 4 };
            let a = RatMatrix::from_rows(
                (0..nvars)
                    .map(|_| (0..nvars).map(|_| random_rat(&mut rng)).collect())
                    .collect(),
            );
            let Ok(inv) = a.inverse() else { continue };
            let f = random_form(&mut rng, nvars, 3);
            let g = f.linear_change(&a).unwrap();
            assert_eq!(g.linear_change(&inv).unwrap(), f);
            done += 1;
        }
    }

    #[test]
    fn veronese_matches_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for i in 0..1000 {
            let nvars = 3 + i % 2;
            let degree = 1 + (i % 6) as u32;
            let f = random_form(&mut rng, nvars, degree);
            let v: Vec<Rat> = (0..nvars).map(|_| random_rat(&mut rng)).collect();
            let dot: Rat = f
                .coefficients(&f.basis())
                .iter()
                .zip(veronese(&v, degree))
                .map(|(a, b)| a * b)
                .sum();
            assert_eq!(dot, f.evaluate(&v).unwrap());
            // Homogeneity: f(t v) = t^d f(v).
            let t = random_rat(&mut rng);
            if !t.is_zero() {
                let tv: Vec<Rat> = v.iter().map(|x| x * &t).collect();
                let td = (0..degree).fold(Rat::one(), |acc, _| acc * &t);
                assert_eq!(f.evaluate(&tv).unwrap(), td * f.evaluate(&v).unwrap());
            }
        }
    }

    #[test]
    fn text_round_trip_and_errors() {
        let m = fixtures::motzkin();
        assert_eq!(Form::parse(&m.to_text()).unwrap(), m);
        let text = "# motzkin fragment\nform nvars=3 degree=6\n4 2 0 : 1\n2 2 2 : -3/1\n";
        let f = Form::parse(text).unwrap();
        assert_eq!(f.poly().coefficient(&[2, 2, 2]), rat(-3));
        assert!(matches!(Form::parse("form nvars=3 degree=6\n4 2 1 : 1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Form::parse("form nvars=5 degree=6\n"), Err(Error::Parse { .. })));
        assert!(matches!(Form::parse("form nvars=3 degree=2\n2 0 0 : 1\n2 0 0 : 1"), Err(Error::Parse { .. })));
        assert!(matches!(Form::parse("form nvars=3 degree=2\n2 0 0 : 1/0"), Err(Error::Parse { .. })));
    }

    #[test]
    fn resultant_of_motzkin_pencil_vanishes_at_chart_points() {
        // q1, q2 through the first configuration, in the chart z = 1.
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
        let to_xy = |f: &Form| {
            let p = f.dehomogenize(2);
            let mut out = Poly::zero(2);
            for (e, c) in p.terms() {
                out.add_term(vec![e[0], e[1]], c.clone());
            }
            out
        };
        let r = resultant_y(&to_xy(&q1), &to_xy(&q2)).unwrap();
        assert!(r.degree().unwrap() <= 9);
        let mut points = fixtures::motzkin_zeros();
        points.extend(fixtures::motzkin_good_extras());
        points.push(vec![rat(1), rat(1), ratio(-7, 2)]);
        let mut checked = 0;
        for p in points.iter().filter(|p| !p[2].is_zero()) {
            let x = &p[0] / &p[2];
            assert!(r.eval(&x).is_zero(), "resultant must vanish at x = {x}");
            checked += 1;
        }
        assert_eq!(checked, 7);
    }
}
