use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::normal_form::{hermite_rows, inverse_unimodular, smith_normal_form};
use super::{IntMatrix, Subgroup};
use crate::error::{Error, Result};

/// `Z^n / rel` as `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_t`.
///
/// Quotient coordinates list the free part first, then one coordinate per
/// torsion factor (reduced into `[0, d_i)`). The free coordinate functionals
/// are put in Hermite form so they do not depend on the reduction path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    ambient_rank: usize,
    free_rank: usize,
    torsion: Vec<BigInt>,
    /// `(free_rank + torsion) x ambient_rank`
    project: IntMatrix,
    /// `ambient_rank x (free_rank + torsion)`
    lift: IntMatrix,
}

/// Presents `Z^ambient_rank / rel`.
pub fn quotient(ambient_rank: usize, rel: &Subgroup) -> Result<QuotientPresentation> {
    if rel.ambient_rank() != ambient_rank {
        return Err(Error::DimensionMismatch { expected: ambient_rank, found: rel.ambient_rank() });
    }
    let snf = smith_normal_form(&rel.basis_matrix());
    let r = snf.rank;
    let n = ambient_rank;

    let free_rows = snf.left.submatrix(r..n, 0..n);
    let canonical_free = hermite_rows(&free_rows).form;
    let left = snf.left.submatrix(0..r, 0..n).vstack(&canonical_free);
    let left_inv = inverse_unimodular(&left).expect("row changes preserve unimodularity");

    let torsion_idx: Vec<usize> = (0..r).filter(|&i| snf.diagonal[(i, i)] > BigInt::one()).collect();
    let coord_rows: Vec<usize> = (r..n).chain(torsion_idx.iter().copied()).collect();
    let project = IntMatrix::from_rows(n, &coord_rows.iter().map(|&i| left.row(i).to_vec()).collect::<Vec<_>>());
    let lift = IntMatrix::from_columns(n, &coord_rows.iter().map(|&i| left_inv.column(i)).collect::<Vec<_>>());
    let torsion = torsion_idx.iter().map(|&i| snf.diagonal[(i, i)].clone()).collect();
    Ok(QuotientPresentation { ambient_rank, free_rank: n - r, torsion, project, lift })
}

impl QuotientPresentation {
    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Number of quotient coordinates.
    pub fn dimension(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Coordinates of the class of `x`.
    pub fn project(&self, x: &[BigInt]) -> Vec<BigInt> {
        let mut c = self.project.mul_vec(x);
        for (k, d) in self.torsion.iter().enumerate() {
            let idx = self.free_rank + k;
            c[idx] = c[idx].mod_floor(d);
        }
        c
    }

    /// An ambient vector representing the given quotient coordinates.
    pub fn lift(&self, coords: &[BigInt]) -> Vec<BigInt> {
        self.lift.mul_vec(coords)
    }

    pub fn is_zero_class(&self, x: &[BigInt]) -> bool {
        self.project(x).iter().all(Zero::is_zero)
    }

    /// Free-coordinate functionals, one row per free generator.
    pub fn free_projection(&self) -> IntMatrix {
        self.project.submatrix(0..self.free_rank, 0..self.ambient_rank)
    }

    /// Ambient lifts of the free generators.
    pub fn free_lifts(&self) -> Vec<Vec<BigInt>> {
        (0..self.free_rank).map(|j| self.lift.column(j)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ints;

    fn span(n: usize, vs: &[&[i64]]) -> Subgroup {
        Subgroup::from_generators(n, vs.iter().map(|v| ints(v)))
    }

    #[test]
    fn cyclic_torsion() {
        let q = quotient(2, &span(2, &[&[2, 0]])).unwrap();
        assert_eq!(q.free_rank(), 1);
        assert_eq!(q.torsion(), &ints(&[2])[..]);
    }

    #[test]
    fn whole_lattice_is_trivial() {
        let q = quotient(2, &Subgroup::full(2)).unwrap();
        assert_eq!((q.free_rank(), q.torsion().len()), (0, 0));
        assert_eq!(q.dimension(), 0);
    }

    #[test]
    fn axis_quotient() {
        let q = quotient(2, &span(2, &[&[1, 0]])).unwrap();
        assert_eq!(q.free_rank(), 1);
        assert!(q.is_torsion_free());
        // canonical free coordinate is the second coordinate itself
        assert_eq!(q.project(&ints(&[5, 1])), ints(&[1]));
    }

    #[test]
    fn project_after_lift_is_identity() {
        let q = quotient(3, &span(3, &[&[2, 4, 0], &[0, 6, 3]])).unwrap();
        for coords in [ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[3, 1, 2]), ints(&[-2, 5, 1])] {
            let mut expected = coords.clone();
            for (k, d) in q.torsion().iter().enumerate() {
                let idx = q.free_rank() + k;
                expected[idx] = expected[idx].mod_floor(d);
            }
            assert_eq!(q.project(&q.lift(&coords[..q.dimension()])), expected[..q.dimension()]);
        }
    }

    #[test]
    fn relations_project_to_zero() {
        let rel = span(3, &[&[2, 4, 0], &[0, 6, 3]]);
        let q = quotient(3, &rel).unwrap();
        for b in rel.basis() {
            assert!(q.is_zero_class(b));
        }
        assert!(!q.is_zero_class(&ints(&[1, 0, 0])));
    }
}
