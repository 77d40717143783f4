use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::normal_form::{hermite_rows, smith_normal_form};
use super::IntMatrix;
use crate::error::{Error, Result};

/// A subgroup of `Z^n`, stored by the nonzero rows of the Hermite normal
/// form of any generating set. Equal subgroups compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    ambient_rank: usize,
    basis: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Subgroup {
    pub fn from_generators<I>(ambient_rank: usize, generators: I) -> Self
    where
        I: IntoIterator<Item = Vec<BigInt>>,
    {
        let rows: Vec<Vec<BigInt>> = generators.into_iter().collect();
        for r in &rows {
            assert_eq!(r.len(), ambient_rank, "generator outside the ambient lattice");
        }
        let h = hermite_rows(&IntMatrix::from_rows(ambient_rank, &rows));
        Subgroup { ambient_rank, basis: h.nonzero_rows(), pivots: h.pivots }
    }

    pub fn trivial(ambient_rank: usize) -> Self {
        Subgroup { ambient_rank, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_rank: usize) -> Self {
        Self::from_generators(ambient_rank, IntMatrix::identity(ambient_rank).row_vectors())
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty()
    }

    /// Canonical basis vectors.
    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    /// Basis as the columns of an `ambient_rank x rank` matrix.
    pub fn basis_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.ambient_rank, &self.basis)
    }

    /// Coefficients of `v` in the canonical basis, if `v` lies in the subgroup.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient_rank);
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let (q, r) = rest[p].div_rem(&b[p]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (x, y) in rest.iter_mut().zip(b) {
                    *x -= &q * y;
                }
            }
            coords.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subgroup(&self, other: &Subgroup) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// The vector with the given coordinates.
    pub fn combination(&self, coords: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(coords.len(), self.rank());
        let mut out = vec![BigInt::zero(); self.ambient_rank];
        for (c, b) in coords.iter().zip(&self.basis) {
            for (o, x) in out.iter_mut().zip(b) {
                *o += c * x;
            }
        }
        out
    }

    /// True when `Z^n / self` is torsion-free.
    pub fn is_saturated(&self) -> bool {
        smith_normal_form(&self.basis_matrix()).invariant_factors().iter().all(|d| d == &BigInt::from(1))
    }

    fn check_ambient(&self, other: &Subgroup) -> Result<()> {
        if self.ambient_rank != other.ambient_rank {
            return Err(Error::DimensionMismatch { expected: self.ambient_rank, found: other.ambient_rank });
        }
        Ok(())
    }
}

/// Integer kernel `{x : m x = 0}`; always a direct summand of `Z^cols`.
pub fn kernel_basis(m: &IntMatrix) -> Subgroup {
    let snf = smith_normal_form(m);
    let gens = (snf.rank..m.cols()).map(|j| snf.right.column(j));
    Subgroup::from_generators(m.cols(), gens)
}

/// `a ∩ b`, computed from the kernel of `[A | -B]`.
pub fn subgroup_intersection(a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    a.check_ambient(b)?;
    let n = a.ambient_rank;
    let stacked = a.basis_matrix().hstack(&b.basis_matrix().scale(&BigInt::from(-1)));
    let kernel = kernel_basis(&stacked);
    let gens = kernel.basis().iter().map(|k| {
        let coeffs = &k[..a.rank()];
        a.combination(coeffs)
    });
    let out = Subgroup::from_generators(n, gens.collect::<Vec<_>>());
    Ok(out)
}

/// `a + b`; not saturated in general.
pub fn subgroup_sum(a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    a.check_ambient(b)?;
    Ok(Subgroup::from_generators(a.ambient_rank, a.basis.iter().chain(&b.basis).cloned()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ints;

    fn span(n: usize, vs: &[&[i64]]) -> Subgroup {
        Subgroup::from_generators(n, vs.iter().map(|v| ints(v)))
    }

    #[test]
    fn kernel_of_row_vector() {
        let k = kernel_basis(&IntMatrix::from_i64(1, 2, &[1, 1]));
        assert_eq!(k, span(2, &[&[1, -1]]));
        assert_eq!(k.basis(), &[ints(&[1, -1])]);
    }

    #[test]
    fn kernel_extremes() {
        assert!(kernel_basis(&IntMatrix::identity(3)).is_trivial());
        assert_eq!(kernel_basis(&IntMatrix::zeros(2, 2)), Subgroup::full(2));
        assert_eq!(kernel_basis(&IntMatrix::zeros(0, 2)), Subgroup::full(2));
    }

    #[test]
    fn kernel_is_saturated() {
        let m = IntMatrix::from_i64(1, 3, &[2, 4, 6]);
        let k = kernel_basis(&m);
        assert_eq!(k.rank(), 2);
        assert!(k.is_saturated());
        assert!(k.contains(&ints(&[1, 1, -1])));
    }

    #[test]
    fn intersections() {
        let e1 = span(2, &[&[1, 0]]);
        let e2 = span(2, &[&[0, 1]]);
        let d = span(2, &[&[1, 1]]);
        assert!(subgroup_intersection(&e1, &e2).unwrap().is_trivial());
        assert!(subgroup_intersection(&e1, &d).unwrap().is_trivial());
        assert_eq!(subgroup_intersection(&e1, &e1).unwrap(), e1);
        let a = span(2, &[&[2, 0], &[0, 3]]);
        let b = span(2, &[&[4, 0], &[0, 1]]);
        assert_eq!(subgroup_intersection(&a, &b).unwrap(), span(2, &[&[4, 0], &[0, 3]]));
    }

    #[test]
    fn sums() {
        let e1 = span(2, &[&[1, 0]]);
        let e2 = span(2, &[&[0, 1]]);
        assert_eq!(subgroup_sum(&e1, &e2).unwrap(), Subgroup::full(2));
        assert_eq!(subgroup_sum(&e1, &Subgroup::trivial(2)).unwrap(), e1);
        let s = subgroup_sum(&e2, &span(2, &[&[2, 1]])).unwrap();
        assert!(!s.is_saturated());
        assert_eq!(s, span(2, &[&[2, 0], &[0, 1]]));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subgroup::full(2);
        let b = Subgroup::full(3);
        assert!(subgroup_sum(&a, &b).is_err());
        assert!(subgroup_intersection(&a, &b).is_err());
    }

    #[test]
    fn coordinates_round_trip() {
        let s = span(3, &[&[1, 2, 3], &[0, 2, 4]]);
        let v = ints(&[3, 8, 13]);
        let c = s.coordinates(&v).unwrap();
        assert_eq!(s.combination(&c), v);
        assert!(s.coordinates(&ints(&[0, 1, 2])).is_none());
    }
}
