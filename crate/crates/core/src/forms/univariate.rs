//! Dense univariate polynomials over `Rat` and exact rational root extraction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactq::{common_denominator, fmt_rat, Rat};

/// Coefficients lowest degree first; the leading coefficient is nonzero unless
/// the polynomial is zero (empty coefficient list).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", fmt_rat(c))?,
                1 => write!(f, "({})x", fmt_rat(c))?,
                _ => write!(f, "({})x^{k}", fmt_rat(c))?,
            }
        }
        Ok(())
    }
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// `x - root`
    pub fn linear_factor(root: &Rat) -> Self {
        Self::new(vec![-root.clone(), Rat::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::ZeroPolynomial);
        };
        let lead = divisor.leading().expect("nonzero").clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_part();
        }
        a.monic()
    }

    /// Exact quotient by `x - root`.
    pub fn deflate(&self, root: &Rat) -> Result<UniPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (q, r) = self.div_rem(&Self::linear_factor(root))?;
        if !r.is_zero() {
            return Err(Error::NotARoot { root: root.clone() });
        }
        Ok(q)
    }

    /// Multiplicity of `root` as a zero (0 when it is not a root).
    pub fn multiplicity(&self, root: &Rat) -> usize {
        let mut f = self.clone();
        let mut k = 0;
        while !f.is_zero() && f.eval(root).is_zero() {
            f = f.deflate(root).expect("checked root");
            k += 1;
        }
        k
    }

    /// Scalar multiple with coprime integer coefficients and positive leading coefficient.
    pub fn primitive_part(&self) -> UniPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let den = Rat::from_integer(common_denominator(&self.coeffs));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &den).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if ints.last().expect("nonzero").is_negative() {
            g = -g;
        }
        Self::new(ints.into_iter().map(|c| Rat::from_integer(c / &g)).collect())
    }

    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).expect("nonzero gcd").0.primitive_part()
    }

    /// All rational roots, repeated by multiplicity, in ascending order.
    ///
    /// After stripping zero roots the square-free part is made primitive over the
    /// integers, so any rational root `a/b` has `b` dividing its leading
    /// coefficient `L`. Real roots are isolated with Sturm sequences and refined to
    /// intervals narrower than `1/L²`; such an interval holds at most one rational
    /// with denominator at most `L`, namely its simplest rational, which is then
    /// tested exactly. Candidate divisors are never enumerated, so large
    /// coefficients do not require integer factorization.
    pub fn rational_roots(&self) -> Result<Vec<Rat>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut found: Vec<Rat> = Vec::new();
        let mut g = self.squarefree_part();
        if g.eval(&Rat::zero()).is_zero() {
            found.push(Rat::zero());
            g = g.deflate(&Rat::zero())?;
        }
        'restart: loop {
            if g.degree().unwrap_or(0) == 0 {
                break;
            }
            let sturm = SturmChain::new(&g);
            let bound = g.cauchy_bound();
            let mut stack = vec![(-bound.clone(), bound)];
            let mut isolated = Vec::new();
            while let Some((a, b)) = stack.pop() {
                let count = sturm.variations(&a) - sturm.variations(&b);
                if count == 0 {
                    continue;
                }
                if count == 1 {
                    isolated.push((a, b));
                    continue;
                }
                let mid = (&a + &b) / Rat::from_integer(2.into());
                if g.eval(&mid).is_zero() {
                    found.push(mid.clone());
                    g = g.deflate(&mid)?.primitive_part();
                    continue 'restart;
                }
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
            let lead = g.leading().expect("nonzero").clone();
            let width = (&lead * &lead * Rat::from_integer(2.into())).recip();
            let mut exact = Vec::new();
            for (a, b) in isolated {
                if let Some(r) = g.rational_root_in(a, b, &width) {
                    exact.push(r);
                }
            }
            found.extend(exact);
            break;
        }
        let mut out = Vec::new();
        for r in found {
            let k = self.multiplicity(&r);
            out.extend(std::iter::repeat_n(r, k));
        }
        out.sort();
        Ok(out)
    }

    /// Strict bound on the absolute value of every real root.
    fn cauchy_bound(&self) -> Rat {
        let lead = self.leading().expect("nonzero").abs();
        let max = self
            .coeffs
            .iter()
            .rev()
            .skip(1)
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(Rat::zero);
        max + Rat::one()
    }

    /// Refines an interval containing exactly one simple root (endpoints not roots)
    /// and returns that root if it is rational.
    fn rational_root_in(&self, mut a: Rat, mut b: Rat, width: &Rat) -> Option<Rat> {
        let two = Rat::from_integer(2.into());
        let mut sa = self.eval(&a).signum();
        while &b - &a >= *width {
            let mid = (&a + &b) / &two;
            let sm = self.eval(&mid).signum();
            if sm.is_zero() {
                return Some(mid);
            }
            if sm == sa {
                a = mid;
                sa = sm;
            } else {
                b = mid;
            }
        }
        let candidate = simplest_between(&a, &b);
        self.eval(&candidate).is_zero().then_some(candidate)
    }
}

/// Rational with the smallest denominator in the open interval `(a, b)`, `a < b`.
pub fn simplest_between(a: &Rat, b: &Rat) -> Rat {
    debug_assert!(a < b);
    if a.is_negative() && b.is_positive() {
        return Rat::zero();
    }
    if !a.is_positive() && !b.is_positive() {
        return -simplest_between(&-b.clone(), &-a.clone());
    }
    simplest_positive(a, Some(b))
}

/// Simplest rational in `(a, b)` for `a >= 0`; `b = None` means unbounded.
fn simplest_positive(a: &Rat, b: Option<&Rat>) -> Rat {
    let next = Rat::from_integer(a.floor().to_integer() + 1);
    match b {
        None => next,
        Some(b) if &next < b => next,
        Some(b) => {
            let fl = a.floor();
            let lo = b - &fl;
            let hi = a - &fl;
            // fl < a < b <= fl + 1, so 1/(b - fl) >= 1 and 1/(a - fl) may be infinite.
            let upper = if hi.is_zero() { None } else { Some(hi.recip()) };
            let inner = simplest_positive(&lo.recip(), upper.as_ref());
            fl + inner.recip()
        }
    }
}

struct SturmChain {
    chain: Vec<UniPoly>,
}

impl SturmChain {
    fn new(p: &UniPoly) -> Self {
        let mut chain = vec![p.clone(), positive_rescale(&p.derivative())];
        loop {
            let n = chain.len();
            if chain[n - 1].degree().unwrap_or(0) == 0 {
                break;
            }
            let r = remainder_with_sign(&chain[n - 2], &chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-&r);
        }
        SturmChain { chain }
    }

    fn variations(&self, x: &Rat) -> usize {
        let signs: Vec<Rat> = self
            .chain
            .iter()
            .map(|p| p.eval(x).signum())
            .filter(|s| !s.is_zero())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

/// Remainder of `a` by `b`, rescaled by a positive constant.
fn remainder_with_sign(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let (_, r) = a.div_rem(b).expect("nonzero");
    positive_rescale(&r)
}

/// Integer content 1 while keeping the sign of every value.
fn positive_rescale(r: &UniPoly) -> UniPoly {
    if r.is_zero() {
        return r.clone();
    }
    let prim = r.primitive_part();
    // primitive_part forces a positive leading coefficient.
    if r.leading().expect("nonzero").is_negative() {
        -&prim
    } else {
        prim
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = Rat::zero();
        UniPoly::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&z) + rhs.coeffs.get(k).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{rat, ratio};
    use proptest::prelude::*;

    fn product_of_roots(roots: &[Rat]) -> UniPoly {
        roots
            .iter()
            .fold(UniPoly::constant(rat(1)), |acc, r| &acc * &UniPoly::linear_factor(r))
    }

    #[test]
    fn gcd_and_deflate() {
        let f = UniPoly::from_i64(&[-1, 0, 1]);
        let g = UniPoly::from_i64(&[-1, 1]);
        assert_eq!(f.gcd(&g), g);
        assert_eq!(f.deflate(&rat(1)).unwrap(), UniPoly::from_i64(&[1, 1]));
        assert!(matches!(f.deflate(&rat(2)), Err(Error::NotARoot { .. })));
    }

    #[test]
    fn rational_roots_of_chart_polynomial() {
        // z (z^2 - 1)(4z - 1)(2z + 7) = 8z^5 + 26z^4 - 15z^3 - 26z^2 + 7z
        let f = UniPoly::from_i64(&[0, 7, -26, -15, 26, 8]);
        let roots = f.rational_roots().unwrap();
        assert_eq!(roots, vec![ratio(-7, 2), rat(-1), rat(0), ratio(1, 4), rat(1)]);
    }

    #[test]
    fn rational_roots_with_multiplicity_and_irrational_factor() {
        let base = product_of_roots(&[ratio(2, 3), ratio(2, 3), rat(-5)]);
        let f = &base * &UniPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(f.rational_roots().unwrap(), vec![rat(-5), ratio(2, 3), ratio(2, 3)]);
        assert!(UniPoly::from_i64(&[1, 0, 1]).rational_roots().unwrap().is_empty());
    }

    #[test]
    fn rational_roots_large_coefficients() {
        let big = Rat::new(BigInt::from(10).pow(40) + 7, BigInt::from(3).pow(30));
        let roots = [big.clone(), ratio(-1, 1_000_003), ratio(22, 7)];
        let f = &product_of_roots(&roots) * &UniPoly::from_i64(&[3, 0, 0, 1]);
        let mut expected = roots.to_vec();
        expected.sort();
        assert_eq!(f.rational_roots().unwrap(), expected);
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_between(&ratio(1, 3), &ratio(1, 2)), ratio(2, 5));
        assert_eq!(simplest_between(&ratio(-7, 2), &ratio(-3, 1)), ratio(-10, 3));
        assert_eq!(simplest_between(&rat(2), &ratio(5, 2)), ratio(7, 3));
        assert_eq!(simplest_between(&ratio(-1, 2), &ratio(1, 2)), rat(0));
    }

    proptest! {
        #[test]
        fn recovers_planted_roots(
            roots in proptest::collection::vec((-30i64..30, 1i64..12), 1..6),
            extra in proptest::collection::vec(-5i64..6, 0..3),
        ) {
            let roots: Vec<Rat> = roots.into_iter().map(|(n, d)| ratio(n, d)).collect();
            // Multiply by x^2 + c (c > 0) style factors which have no real roots.
            let mut f = product_of_roots(&roots);
            for c in extra {
                f = &f * &UniPoly::from_i64(&[c * c + 1, 0, 1]);
            }
            let mut expected = roots.clone();
            expected.sort();
            prop_assert_eq!(f.rational_roots().unwrap(), expected);
        }
    }
}
