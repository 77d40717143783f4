//! Spin structures as quadratic enhancements vanishing on all three cut
//! systems.

use std::fmt;

use crate::cohomology::homology_table;
use crate::diagram::{validate, CutSystem, Trisection, TrisectionDiagram};
use crate::error::{Error, Result};

/// Largest genus [`enumerate_spin`] will search (`2^(2g)` candidates).
pub const DEFAULT_GENUS_BOUND: usize = 8;

/// `q: H_1(Σ; Z/2) -> Z/2` given by its values on `a_1, b_1, ..., a_g, b_g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadraticEnhancement {
    basis_values: Vec<bool>,
}

impl QuadraticEnhancement {
    pub fn new(basis_values: Vec<bool>) -> Result<Self> {
        if !basis_values.len().is_multiple_of(2) {
            return Err(Error::DimensionMismatch { expected: basis_values.len() + 1, found: basis_values.len() });
        }
        Ok(QuadraticEnhancement { basis_values })
    }

    /// Bit `i` of the value list is bit `2g - 1 - i` of `mask`.
    pub fn from_mask(genus: usize, mask: u64) -> Self {
        let n = 2 * genus;
        QuadraticEnhancement { basis_values: (0..n).map(|i| (mask >> (n - 1 - i)) & 1 == 1).collect() }
    }

    pub fn basis_values(&self) -> &[bool] {
        &self.basis_values
    }

    pub fn genus(&self) -> usize {
        self.basis_values.len() / 2
    }

    /// `q(x) = Σ x_i q(e_i) + Σ_k x_{a_k} x_{b_k}`.
    pub fn evaluate(&self, x: &[bool]) -> Result<bool> {
        if x.len() != self.basis_values.len() {
            return Err(Error::DimensionMismatch { expected: self.basis_values.len(), found: x.len() });
        }
        let linear = x.iter().zip(&self.basis_values).fold(false, |acc, (&xi, &qi)| acc ^ (xi & qi));
        let quadratic = x.chunks(2).fold(false, |acc, p| acc ^ (p[0] & p[1]));
        Ok(linear ^ quadratic)
    }

    pub fn vanishes_on(&self, cs: &CutSystem) -> bool {
        cs.curves().iter().all(|c| self.evaluate(&c.mod2()) == Ok(false))
    }
}

impl fmt::Display for QuadraticEnhancement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis_values.is_empty() {
            return f.write_str("()");
        }
        for &b in &self.basis_values {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub fn enumerate_spin(d: &TrisectionDiagram) -> Result<Vec<QuadraticEnhancement>> {
    enumerate_spin_bounded(d, DEFAULT_GENUS_BOUND)
}

/// All enhancements vanishing on `α`, `β` and `γ`, in lexicographic order of
/// their basis values.
pub fn enumerate_spin_bounded(d: &TrisectionDiagram, bound: usize) -> Result<Vec<QuadraticEnhancement>> {
    let g = d.genus();
    if g > bound || g > 31 {
        return Err(Error::GenusAboveBound { genus: g, bound: bound.min(31) });
    }
    let report = validate(d);
    if !report.is_valid() {
        return Err(Error::InvalidDiagram(report.failures()));
    }
    Ok((0..1u64 << (2 * g))
        .map(|m| QuadraticEnhancement::from_mask(g, m))
        .filter(|q| d.systems().iter().all(|cs| q.vanishes_on(cs)))
        .collect())
}

/// `|Hom(H_1(X), Z/2)| = 2^(b_1 + #even torsion factors)`, the size of the
/// spin set whenever it is nonempty.
pub fn spin_torsor_size(t: &Trisection) -> u128 {
    let h1 = &homology_table(t)[1];
    1u128 << (h1.rank + h1.even_torsion_count())
}
