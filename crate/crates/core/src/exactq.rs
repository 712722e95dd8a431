//! Exact rational scalars and dense linear algebra over them.
//!
//! Elimination is fraction-free: rows are cleared to integers and reduced with
//! Bareiss' exact-division recurrence, so intermediate entries are minors of the
//! input rather than ever-growing fractions.

use std::fmt;
use std::ops::{Index, IndexMut};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `num` or `num/den` with optional sign.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.strip_prefix('+').unwrap_or(num).parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rat::new(num, den))
}

/// `num/den`, always with an explicit denominator.
pub fn fmt_rat_full(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `num` for integers, `num/den` otherwise.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        fmt_rat_full(r)
    }
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Rescales a nonzero vector to coprime integers. The sign is left unchanged.
pub fn primitive_integer_vector(v: &[Rat]) -> Vec<Rat> {
    let den = common_denominator(v);
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rat::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter().map(|x| Rat::from_integer(x / &g)).collect()
}

/// Whether `a` and `b` are nonzero rational multiples of each other.
pub fn proportional(a: &[Rat], b: &[Rat]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some(i) = a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if b[i].is_zero() {
        return false;
    }
    let scale = &b[i] / &a[i];
    a.iter().zip(b).all(|(x, y)| &(x * &scale) == y)
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rat;

    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row = self.row(i).iter().map(fmt_rat).join(" ");
            writeln!(f, "[{row}]")?;
        }
        Ok(())
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Builds a matrix from equally long rows. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        RatMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_rows(idx.iter().map(|&i| self.row(i).to_vec()).collect())
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Rows cleared to integers (each row scaled by the lcm of its denominators).
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let den = Rat::from_integer(common_denominator(row));
                row.iter().map(|x| (x * &den).to_integer()).collect()
            })
            .collect()
    }

    /// Fraction-free row echelon form; returns the echelon rows and pivot columns.
    fn echelon(&self) -> (Vec<Vec<BigInt>>, Vec<usize>) {
        let (a, pivots, _) = bareiss(self.integer_rows(), self.cols);
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn determinant(&self) -> Result<Rat> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rat::one());
        }
        // Row scaling by integer denominators must be undone afterwards.
        let mut scale = BigInt::one();
        for i in 0..n {
            scale *= common_denominator(self.row(i));
        }
        let (a, pivots, sign) = bareiss(self.integer_rows(), n);
        if pivots.len() < n {
            return Ok(Rat::zero());
        }
        let det = Rat::new(a[n - 1][n - 1].clone() * sign, scale);
        Ok(det)
    }

    pub fn inverse(&self) -> Result<RatMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rat::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// Reduced row echelon form (pivots 1, zeros above and below) with pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let (ech, pivots) = self.echelon();
        let mut r = RatMatrix::zeros(self.rows, self.cols);
        for (i, row) in ech.iter().take(pivots.len()).enumerate() {
            for (j, x) in row.iter().enumerate() {
                r[(i, j)] = Rat::from_integer(x.clone());
            }
        }
        for (i, &pc) in pivots.iter().enumerate().rev() {
            let p = r[(i, pc)].clone();
            for j in pc..self.cols {
                r[(i, j)] = &r[(i, j)] / &p;
            }
            for k in 0..i {
                let f = r[(k, pc)].clone();
                if f.is_zero() {
                    continue;
                }
                for j in pc..self.cols {
                    let d = &f * &r[(i, j)];
                    r[(k, j)] -= d;
                }
            }
        }
        (r, pivots)
    }

    /// Rank and canonical nullspace basis.
    ///
    /// The basis has one vector per free column in ascending order: a 1 in that
    /// column, zeros in the other free columns, and the negated reduced entries in
    /// the pivot columns.
    pub fn nullspace(&self) -> (usize, Vec<Vec<Rat>>) {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r[(i, f)].clone();
                }
                v
            })
            .collect();
        (pivots.len(), basis)
    }

    /// Exact PSD test by symmetric LDLᵀ elimination with positive diagonal pivots.
    ///
    /// Returns `(is_psd, rank)`. A PSD matrix with a zero diagonal entry has a zero
    /// row and column, so only diagonal pivots are ever needed.
    pub fn psd_rank(&self) -> Result<(bool, usize)> {
        if !self.is_symmetric() {
            return Err(Error::NonSymmetric);
        }
        let n = self.rows;
        let mut g = self.clone();
        let mut active: Vec<usize> = (0..n).collect();
        let mut pivots = 0;
        while let Some(pos) = active.iter().position(|&i| g[(i, i)].is_positive()) {
            let p = active.remove(pos);
            let d = g[(p, p)].clone();
            for &i in &active {
                let gip = g[(i, p)].clone();
                if gip.is_zero() {
                    continue;
                }
                let f = &gip / &d;
                for &j in &active {
                    let delta = &f * &g[(p, j)];
                    g[(i, j)] -= delta;
                }
            }
            pivots += 1;
        }
        let psd = active
            .iter()
            .all(|&i| active.iter().all(|&j| g[(i, j)].is_zero()));
        if psd {
            Ok((true, pivots))
        } else {
            Ok((false, self.rank()))
        }
    }

    /// Minimum and maximum rank over all row subsets of the given size, with the
    /// first subset (lexicographic) attaining the minimum.
    pub fn rank_of_submatrices(&self, subset_size: usize) -> Result<SubsetRanks> {
        if subset_size > self.rows || subset_size == 0 {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: subset_size,
            });
        }
        let mut out: Option<SubsetRanks> = None;
        for subset in (0..self.rows).combinations(subset_size) {
            let rank = self.select_rows(&subset).rank();
            match &mut out {
                None => {
                    out = Some(SubsetRanks {
                        min: rank,
                        max: rank,
                        min_witness: subset,
                    })
                }
                Some(s) => {
                    if rank < s.min {
                        s.min = rank;
                        s.min_witness = subset;
                    }
                    s.max = s.max.max(rank);
                }
            }
        }
        Ok(out.expect("at least one subset"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetRanks {
    pub min: usize,
    pub max: usize,
    pub min_witness: Vec<usize>,
}

/// Bareiss fraction-free elimination to row echelon form.
///
/// Returns the reduced rows, pivot columns, and the sign of the row permutation.
fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>, i32) {
    let m = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut sign = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..m {
            for j in c + 1..cols {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                a[i][j] = num / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        // Columns skipped before this pivot stay zero in rows below; entries left of
        // `c` in pivot rows are already zero.
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (a, pivots, sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_i64(rows)
    }

    #[test]
    fn nullspace_identity_is_empty() {
        let (rank, basis) = RatMatrix::identity(3).nullspace();
        assert_eq!(rank, 3);
        assert!(basis.is_empty());
    }

    #[test]
    fn nullspace_proportional_rows() {
        let (rank, basis) = m(&[&[1, 2], &[2, 4]]).nullspace();
        assert_eq!(rank, 1);
        assert_eq!(basis, vec![vec![rat(-2), rat(1)]]);
    }

    #[test]
    fn nullspace_free_columns_ascending() {
        let a = m(&[&[0, 1, 0, 2]]);
        let (rank, basis) = a.nullspace();
        assert_eq!(rank, 1);
        assert_eq!(basis.len(), 3);
        assert_eq!(basis[0], vec![rat(1), rat(0), rat(0), rat(0)]);
        assert_eq!(basis[1], vec![rat(0), rat(0), rat(1), rat(0)]);
        assert_eq!(basis[2], vec![rat(0), rat(-2), rat(0), rat(1)]);
    }

    #[test]
    fn psd_rank_examples() {
        assert_eq!(RatMatrix::zeros(3, 3).psd_rank().unwrap(), (true, 0));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).psd_rank().unwrap(), (true, 1));
        assert_eq!(m(&[&[1, 0], &[0, -1]]).psd_rank().unwrap(), (false, 2));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).psd_rank().unwrap(), (false, 2));
        assert!(matches!(m(&[&[1, 2], &[3, 4]]).psd_rank(), Err(Error::NonSymmetric)));
    }

    #[test]
    fn submatrix_ranks() {
        let rows = m(&[&[1, 2, 3], &[1, 2, 3], &[1, 2, 3], &[1, 2, 3]]);
        assert_eq!(rows.rank_of_submatrices(4).unwrap().min, 1);
        let id = RatMatrix::identity(3);
        let r = id.rank_of_submatrices(3).unwrap();
        assert_eq!((r.min, r.max), (3, 3));
    }

    #[test]
    fn determinant_and_inverse() {
        let a = RatMatrix::from_rows(vec![
            vec![ratio(1, 2), rat(3), rat(0)],
            vec![rat(2), ratio(-1, 3), rat(5)],
            vec![rat(0), rat(1), rat(4)],
        ]);
        // Cofactor expansion along the first row.
        let expected = ratio(1, 2) * (ratio(-4, 3) - rat(5)) - rat(3) * (rat(8) - rat(0));
        assert_eq!(a.determinant().unwrap(), expected);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), RatMatrix::identity(3));
        assert!(matches!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular)));
    }

    #[test]
    fn rat_text_round_trip() {
        for s in ["0/1", "-7/2", "115425/64", "3/1"] {
            assert_eq!(fmt_rat_full(&parse_rat(s).unwrap()), s);
        }
        assert_eq!(parse_rat("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rat("+5").unwrap(), rat(5));
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("x").is_none());
    }

    fn small_matrix() -> impl Strategy<Value = RatMatrix> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-4i64..5, 1i64..4), r * c).prop_map(move |v| {
                RatMatrix::from_rows(
                    v.chunks(c)
                        .map(|row| row.iter().map(|&(n, d)| ratio(n, d)).collect())
                        .collect(),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn nullspace_vectors_annihilate(a in small_matrix()) {
            let (rank, basis) = a.nullspace();
            prop_assert_eq!(rank + basis.len(), a.cols());
            for v in &basis {
                prop_assert!(a.mul_vec(v).unwrap().iter().all(Zero::is_zero));
            }
            let stacked = RatMatrix::from_rows(basis.clone());
            if !basis.is_empty() {
                prop_assert_eq!(stacked.rank(), basis.len());
            }
            prop_assert_eq!(a.transpose().rank(), rank);
        }
    }
}
