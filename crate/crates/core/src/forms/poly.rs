//! Sparse multivariate polynomials over `Rat` and Sylvester resultants.

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::UniPoly;
use crate::error::{Error, Result};
use crate::exactq::Rat;

pub type Exponent = Vec<u32>;

/// Polynomial in a fixed number of variables; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponent, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exp: Exponent, c: Rat) -> Self {
        let mut p = Self::zero(exp.len());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// The coordinate function `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        Self::monomial(exp, Rat::one())
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear(coeffs: &[Rat]) -> Self {
        let n = coeffs.len();
        coeffs
            .iter()
            .enumerate()
            .fold(Self::zero(n), |acc, (i, c)| &acc + &Self::var(n, i).scale(c))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Rat> {
        &self.terms
    }

    pub fn coefficient(&self, exp: &[u32]) -> Rat {
        self.terms.get(exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub(crate) fn add_term(&mut self, exp: Exponent, c: Rat) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.nvars, Rat::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == degree)
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let mut total = Rat::zero();
        for (exp, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(exp) {
                for _ in 0..e {
                    t *= x;
                }
            }
            total += t;
        }
        Ok(total)
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Coefficients with respect to `var`, lowest power first. The returned
    /// polynomials keep all variables with `var` set to exponent zero.
    pub fn coefficients_in(&self, var: usize) -> Vec<Poly> {
        let Some(deg) = self.degree_in(var) else {
            return Vec::new();
        };
        let mut out = vec![Self::zero(self.nvars); deg as usize + 1];
        for (exp, c) in &self.terms {
            let mut e = exp.clone();
            let k = std::mem::replace(&mut e[var], 0) as usize;
            out[k].add_term(e, c.clone());
        }
        out
    }

    /// Replaces `var` by a rational value.
    pub fn substitute(&self, var: usize, value: &Rat) -> Self {
        let mut out = Self::zero(self.nvars);
        for (exp, c) in &self.terms {
            let mut e = exp.clone();
            let k = std::mem::replace(&mut e[var], 0);
            let mut t = c.clone();
            for _ in 0..k {
                t *= value;
            }
            out.add_term(e, t);
        }
        out
    }

    /// Replaces each variable `x_i` by the polynomial `images[i]`.
    pub fn compose(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: images.len(),
            });
        }
        let target = images.first().map_or(0, Poly::nvars);
        let mut powers: HashMap<(usize, u32), Poly> = HashMap::new();
        let mut out = Self::zero(target);
        for (exp, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e))
                    .clone();
                t = &t * &p;
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Interprets a polynomial that only involves `var` as univariate.
    pub fn to_univariate(&self, var: usize) -> Result<UniPoly> {
        let mut coeffs = vec![Rat::zero(); self.degree_in(var).unwrap_or(0) as usize + 1];
        for (exp, c) in &self.terms {
            if exp.iter().enumerate().any(|(i, &e)| i != var && e != 0) {
                return Err(Error::DimensionMismatch {
                    expected: 1,
                    found: self.nvars,
                });
            }
            coeffs[exp[var] as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars.max(rhs.nvars));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

/// Determinant of a square matrix over `Poly` by Laplace expansion along rows,
/// memoized on the set of columns already used. Fine for the small Sylvester
/// matrices that appear here (at most 8×8).
pub fn determinant(m: &[Vec<Poly>], nvars: usize) -> Poly {
    let n = m.len();
    assert!(n <= 20, "Laplace determinant limited to small matrices");
    let mut memo: HashMap<u32, Poly> = HashMap::new();
    minor(m, 0, 0, nvars, &mut memo)
}

fn minor(m: &[Vec<Poly>], row: usize, used: u32, nvars: usize, memo: &mut HashMap<u32, Poly>) -> Poly {
    let n = m.len();
    if row == n {
        return Poly::constant(nvars, Rat::one());
    }
    if let Some(v) = memo.get(&used) {
        return v.clone();
    }
    let mut acc = Poly::zero(nvars);
    let mut position = 0;
    for c in 0..n {
        if used & (1 << c) != 0 {
            continue;
        }
        let entry = &m[row][c];
        if !entry.is_zero() {
            let sub = minor(m, row + 1, used | (1 << c), nvars, memo);
            if !sub.is_zero() {
                let term = entry * &sub;
                acc = if position % 2 == 0 { &acc + &term } else { &acc - &term };
            }
        }
        position += 1;
    }
    memo.insert(used, acc.clone());
    acc
}

/// Sylvester resultant of `f` and `g` with respect to `var`.
///
/// The result no longer involves `var`. It vanishes at a point of the remaining
/// variables iff the specializations share a root in `var` or both leading
/// coefficients vanish there.
pub fn resultant(f: &Poly, g: &Poly, var: usize) -> Result<Poly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let nvars = f.nvars;
    let fc = f.coefficients_in(var);
    let gc = g.coefficients_in(var);
    let m = fc.len() - 1;
    let n = gc.len() - 1;
    if m == 0 {
        return Ok(f.pow(n as u32));
    }
    if n == 0 {
        return Ok(g.pow(m as u32));
    }
    let size = m + n;
    let mut syl = vec![vec![Poly::zero(nvars); size]; size];
    for r in 0..n {
        for (k, c) in fc.iter().rev().enumerate() {
            syl[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in gc.iter().rev().enumerate() {
            syl[n + r][r + k] = c.clone();
        }
    }
    Ok(determinant(&syl, nvars))
}

/// Resultant of two polynomials in `(x, y)` with respect to `y`, as a polynomial in `x`.
pub fn resultant_y(f: &Poly, g: &Poly) -> Result<UniPoly> {
    if f.nvars() != 2 || g.nvars() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: f.nvars().max(g.nvars()),
        });
    }
    if f.degree_in(1).unwrap_or(0) == 0 || g.degree_in(1).unwrap_or(0) == 0 {
        return Err(Error::ZeroPolynomial);
    }
    resultant(f, g, 1)?.to_univariate(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::rat;

    fn xy(terms: &[(u32, u32, i64)]) -> Poly {
        let mut p = Poly::zero(2);
        for &(a, b, c) in terms {
            p.add_term(vec![a, b], rat(c));
        }
        p
    }

    #[test]
    fn resultant_of_lines() {
        // y - x and y - 2x meet only at x = 0.
        let r = resultant_y(&xy(&[(0, 1, 1), (1, 0, -1)]), &xy(&[(0, 1, 1), (1, 0, -2)])).unwrap();
        let x = UniPoly::new(vec![rat(0), rat(1)]);
        assert!(r == x || r == -&x, "got {r}");
    }

    #[test]
    fn resultant_parabola_line() {
        // y^2 - x and y - 1: substitute y = 1.
        let r = resultant_y(&xy(&[(0, 2, 1), (1, 0, -1)]), &xy(&[(0, 1, 1), (0, 0, -1)])).unwrap();
        let expected = UniPoly::new(vec![rat(1), rat(-1)]);
        assert!(r == expected || r == -&expected, "got {r}");
    }

    #[test]
    fn resultant_antisymmetry_and_shared_factor() {
        let f = xy(&[(0, 2, 1), (1, 1, 3), (2, 0, -1), (0, 0, 2)]);
        let g = xy(&[(0, 3, 1), (1, 0, 1), (0, 1, -4)]);
        let fg = resultant_y(&f, &g).unwrap();
        let gf = resultant_y(&g, &f).unwrap();
        assert!(fg == gf || fg == -&gf);
        let h = xy(&[(0, 1, 1), (1, 0, 1)]);
        let r = resultant_y(&(&f * &h), &(&g * &h)).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn resultant_rejects_zero() {
        assert!(matches!(resultant(&Poly::zero(2), &xy(&[(0, 1, 1)]), 1), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn compose_with_linear_images() {
        // (x + y)^2 under x -> x + y, y -> x - y gives (2x)^2.
        let f = xy(&[(2, 0, 1), (1, 1, 2), (0, 2, 1)]);
        let images = vec![Poly::linear(&[rat(1), rat(1)]), Poly::linear(&[rat(1), rat(-1)])];
        assert_eq!(f.compose(&images).unwrap(), xy(&[(2, 0, 4)]));
    }
}
