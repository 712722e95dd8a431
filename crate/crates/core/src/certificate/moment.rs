use crate::configuration::{pencil_degree, Point};
use crate::error::{Error, Result};
use crate::exactq::{Rat, RatMatrix};
use crate::forms::{veronese, Form, MonomialBasis};

/// Gram matrix of the quadratic form `g ↦ l_a(g²)` on forms of half degree,
/// in the graded-lex monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentMatrix {
    pub basis: MonomialBasis,
    pub matrix: RatMatrix,
}

impl MomentMatrix {
    pub fn psd_rank(&self) -> (bool, usize) {
        self.matrix.psd_rank().expect("moment matrix is symmetric")
    }

    /// `l_a(g²) = cᵀ G c` for the coefficient vector `c` of `g`.
    pub fn quadratic_value(&self, g: &Form) -> Result<Rat> {
        if g.nvars() != self.basis.nvars() || g.degree() != self.basis.degree() {
            return Err(Error::DimensionMismatch {
                expected: self.basis.degree() as usize,
                found: g.degree() as usize,
            });
        }
        let c = g.coefficients(&self.basis);
        let gc = self.matrix.mul_vec(&c)?;
        Ok(c.iter().zip(&gc).map(|(x, y)| x * y).sum())
    }
}

/// `G = Σ_j a_j w_j w_jᵀ` with `w_j` the Veronese vector of `v_j` in degree 3
/// (three variables) or 2 (four variables).
pub fn moment_matrix(nvars: usize, points: &[Point], a: &[Rat]) -> Result<MomentMatrix> {
    if points.len() != a.len() {
        return Err(Error::DimensionMismatch {
            expected: points.len(),
            found: a.len(),
        });
    }
    let degree = pencil_degree(nvars);
    let basis = MonomialBasis::new(nvars, degree);
    let size = basis.len();
    let mut matrix = RatMatrix::zeros(size, size);
    for (v, weight) in points.iter().zip(a) {
        if v.len() != nvars {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: v.len(),
            });
        }
        let w = veronese(v, degree);
        for i in 0..size {
            let wi = weight * &w[i];
            for j in i..size {
                let entry = &wi * &w[j];
                matrix[(i, j)] += &entry;
                if i != j {
                    matrix[(j, i)] += entry;
                }
            }
        }
    }
    Ok(MomentMatrix { basis, matrix })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::rat;
    use crate::fixtures;

    #[test]
    fn single_point_has_rank_one() {
        let g = moment_matrix(3, &[vec![rat(1), rat(2), rat(3)]], &[rat(5)]).unwrap();
        assert_eq!(g.psd_rank(), (true, 1));
        assert!(g.matrix.is_symmetric());
    }

    #[test]
    fn quadratic_value_is_functional_of_square() {
        let pts = fixtures::reznick_zeros();
        let a: Vec<Rat> = (1..=7).map(rat).collect();
        let g = moment_matrix(3, &pts, &a).unwrap();
        let h = fixtures::cubic(&[([1, 1, 1], 2), ([3, 0, 0], -1), ([0, 1, 2], 3)]);
        let direct: Rat = pts
            .iter()
            .zip(&a)
            .map(|(v, a)| a * h.square().evaluate(v).unwrap())
            .sum();
        assert_eq!(g.quadratic_value(&h).unwrap(), direct);
    }
}
