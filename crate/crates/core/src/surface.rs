//! `H_1(Σ_g; Z)` with its intersection pairing, in the symplectic basis
//! `a_1, b_1, ..., a_g, b_g` with `<a_i, b_i> = +1`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{ints, IntMatrix, Subgroup};

/// A homology class on the central surface, in symplectic coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceClass(pub Vec<BigInt>);

impl SurfaceClass {
    pub fn zero(genus: usize) -> Self {
        SurfaceClass(vec![BigInt::zero(); 2 * genus])
    }

    pub fn from_i64(values: &[i64]) -> Self {
        SurfaceClass(ints(values))
    }

    /// The basis class `a_i` (0-based handle index).
    pub fn a(genus: usize, i: usize) -> Self {
        let mut v = Self::zero(genus);
        v.0[2 * i] = BigInt::one();
        v
    }

    /// The basis class `b_i` (0-based handle index).
    pub fn b(genus: usize, i: usize) -> Self {
        let mut v = Self::zero(genus);
        v.0[2 * i + 1] = BigInt::one();
        v
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        SurfaceClass(self.0.iter().map(|x| x * k).collect())
    }

    /// Reduction mod 2.
    pub fn mod2(&self) -> Vec<bool> {
        self.0.iter().map(|x| x.bit(0)).collect()
    }

    /// Embeds into a larger surface, shifting by `offset` handles.
    pub fn embed(&self, genus: usize, offset: usize) -> Self {
        let mut v = Self::zero(genus);
        v.0[2 * offset..2 * offset + self.len()].clone_from_slice(&self.0);
        v
    }
}

impl Add for &SurfaceClass {
    type Output = SurfaceClass;

    fn add(self, rhs: &SurfaceClass) -> SurfaceClass {
        assert_eq!(self.len(), rhs.len());
        SurfaceClass(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &SurfaceClass {
    type Output = SurfaceClass;

    fn sub(self, rhs: &SurfaceClass) -> SurfaceClass {
        assert_eq!(self.len(), rhs.len());
        SurfaceClass(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &SurfaceClass {
    type Output = SurfaceClass;

    fn neg(self) -> SurfaceClass {
        SurfaceClass(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `Z^{2g}` with the block-diagonal form `J = ⊕ [[0, 1], [-1, 0]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticLattice {
    genus: usize,
}

impl SymplecticLattice {
    pub fn new(genus: usize) -> Self {
        SymplecticLattice { genus }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn rank(&self) -> usize {
        2 * self.genus
    }

    /// The Gram matrix `J` of the pairing.
    pub fn form_matrix(&self) -> IntMatrix {
        let mut j = IntMatrix::zeros(self.rank(), self.rank());
        for i in 0..self.genus {
            j[(2 * i, 2 * i + 1)] = BigInt::one();
            j[(2 * i + 1, 2 * i)] = -BigInt::one();
        }
        j
    }

    fn check(&self, v: &[BigInt]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: v.len() });
        }
        Ok(())
    }

    /// `<x, y> = x^T J y = Σ (x_{a_i} y_{b_i} - x_{b_i} y_{a_i})`.
    pub fn intersection_number(&self, x: &SurfaceClass, y: &SurfaceClass) -> Result<BigInt> {
        self.check(&x.0)?;
        self.check(&y.0)?;
        Ok(pair(&x.0, &y.0))
    }

    /// The covector of `π(x) = <-, x>`, i.e. `J x`.
    pub fn pi_dual(&self, x: &SurfaceClass) -> Result<Vec<BigInt>> {
        self.check(&x.0)?;
        Ok(pi_vector(&x.0))
    }

    pub fn is_isotropic(&self, s: &Subgroup) -> bool {
        let b = s.basis();
        b.iter().enumerate().all(|(i, x)| b[i + 1..].iter().all(|y| pair(x, y).is_zero()))
    }

    /// `M = π(L)` for an isotropic subgroup `L`.
    pub fn m_subgroup(&self, lag: &Subgroup) -> Result<Subgroup> {
        if lag.ambient_rank() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: lag.ambient_rank() });
        }
        if !self.is_isotropic(lag) {
            return Err(Error::NotIsotropic);
        }
        Ok(Subgroup::from_generators(self.rank(), lag.basis().iter().map(|v| pi_vector(v)).collect::<Vec<_>>()))
    }
}

/// Intersection pairing on raw coordinate slices of equal even length.
pub(crate) fn pair(x: &[BigInt], y: &[BigInt]) -> BigInt {
    debug_assert_eq!(x.len(), y.len());
    x.chunks(2).zip(y.chunks(2)).map(|(p, q)| &p[0] * &q[1] - &p[1] * &q[0]).sum()
}

fn pi_vector(x: &[BigInt]) -> Vec<BigInt> {
    x.chunks(2).flat_map(|p| [p[1].clone(), -&p[0]]).collect()
}
