//! Finite complexes of free abelian groups and their homology.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lattice::{kernel_basis, quotient, smith_normal_form, IntMatrix, QuotientPresentation, Subgroup};

/// How positions in the term list map to degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    /// Position `p` sits in degree `top - p`.
    Homological { top: i64 },
    /// Position `p` sits in degree `p`.
    Cohomological,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub name: String,
    pub rank: usize,
}

/// `terms[0] -> terms[1] -> ... -> terms[n-1]`; `differentials[p]` has
/// shape `rank[p+1] x rank[p]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeChainComplex {
    terms: Vec<Term>,
    differentials: Vec<IntMatrix>,
    grading: Grading,
}

impl FreeChainComplex {
    /// Checks shapes and `d ∘ d = 0`.
    pub fn new(terms: Vec<Term>, differentials: Vec<IntMatrix>, grading: Grading) -> Result<Self> {
        if differentials.len() + 1 != terms.len() {
            return Err(Error::DimensionMismatch { expected: terms.len().saturating_sub(1), found: differentials.len() });
        }
        for (p, d) in differentials.iter().enumerate() {
            if d.cols() != terms[p].rank {
                return Err(Error::DimensionMismatch { expected: terms[p].rank, found: d.cols() });
            }
            if d.rows() != terms[p + 1].rank {
                return Err(Error::DimensionMismatch { expected: terms[p + 1].rank, found: d.rows() });
            }
        }
        for p in 1..differentials.len() {
            if !differentials[p].mul(&differentials[p - 1]).is_zero() {
                return Err(Error::NotAComplex { position: p });
            }
        }
        Ok(FreeChainComplex { terms, differentials, grading })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.rank).collect()
    }

    pub fn differentials(&self) -> &[IntMatrix] {
        &self.differentials
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn degree_of(&self, position: usize) -> i64 {
        match self.grading {
            Grading::Homological { top } => top - position as i64,
            Grading::Cohomological => position as i64,
        }
    }

    pub fn position_of(&self, degree: i64) -> Result<usize> {
        let p = match self.grading {
            Grading::Homological { top } => top - degree,
            Grading::Cohomological => degree,
        };
        if p < 0 || p as usize >= self.terms.len() {
            return Err(Error::InvalidDegree(degree));
        }
        Ok(p as usize)
    }

    fn outgoing(&self, p: usize) -> IntMatrix {
        self.differentials.get(p).cloned().unwrap_or_else(|| IntMatrix::zeros(0, self.terms[p].rank))
    }

    fn incoming(&self, p: usize) -> IntMatrix {
        if p == 0 {
            IntMatrix::zeros(self.terms[0].rank, 0)
        } else {
            self.differentials[p - 1].clone()
        }
    }

    /// Homology in the given degree.
    pub fn homology(&self, degree: i64) -> Result<HomologyGroup> {
        let p = self.position_of(degree)?;
        let out_rank = smith_normal_form(&self.outgoing(p)).rank;
        let incoming = smith_normal_form(&self.incoming(p));
        let torsion = incoming.invariant_factors().into_iter().filter(|d| !d.is_one()).collect();
        Ok(HomologyGroup { rank: self.terms[p].rank - out_rank - incoming.rank, torsion })
    }

    /// Homology at every position, in term order.
    pub fn all_homology(&self) -> Vec<HomologyGroup> {
        (0..self.terms.len()).map(|p| self.homology(self.degree_of(p)).expect("valid position")).collect()
    }

    /// Homology with explicit cycles and quotient coordinates.
    pub fn presentation(&self, degree: i64) -> Result<HomologyPresentation> {
        let p = self.position_of(degree)?;
        let cycles = kernel_basis(&self.outgoing(p));
        let incoming = self.incoming(p);
        let boundaries: Vec<Vec<BigInt>> = incoming
            .column_vectors()
            .iter()
            .map(|b| cycles.coordinates(b).expect("boundaries are cycles"))
            .collect();
        let rel = Subgroup::from_generators(cycles.rank(), boundaries);
        let classes = quotient(cycles.rank(), &rel)?;
        Ok(HomologyPresentation { cycles, classes })
    }

    /// Alternating sum of term ranks, signed by degree parity.
    pub fn euler_characteristic(&self) -> i64 {
        (0..self.terms.len())
            .map(|p| if self.degree_of(p).rem_euclid(2) == 0 { 1 } else { -1 } * self.terms[p].rank as i64)
            .sum()
    }
}

/// `ker / im` at one position, with cycle representatives.
#[derive(Clone, Debug)]
pub struct HomologyPresentation {
    /// Saturated cycle subgroup of the term.
    pub cycles: Subgroup,
    /// `cycles / boundaries`, in cycle coordinates.
    pub classes: QuotientPresentation,
}

impl HomologyPresentation {
    pub fn group(&self) -> HomologyGroup {
        HomologyGroup { rank: self.classes.free_rank(), torsion: self.classes.torsion().to_vec() }
    }

    /// Cycles representing a basis of the free part.
    pub fn free_generators(&self) -> Vec<Vec<BigInt>> {
        self.classes.free_lifts().iter().map(|c| self.cycles.combination(c)).collect()
    }

    /// Quotient coordinates of a cycle, or `None` if it is not a cycle.
    pub fn class_of(&self, chain: &[BigInt]) -> Option<Vec<BigInt>> {
        self.cycles.coordinates(chain).map(|c| self.classes.project(&c))
    }

    /// Free-part coordinates of a cycle.
    pub fn free_class_of(&self, chain: &[BigInt]) -> Option<Vec<BigInt>> {
        self.class_of(chain).map(|mut c| {
            c.truncate(self.classes.free_rank());
            c
        })
    }
}

/// A finitely generated abelian group `Z^rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct HomologyGroup {
    pub rank: usize,
    /// Invariant factors, each `>= 2`, dividing successively.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup { rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Direct sum, renormalised to invariant-factor form.
    pub fn direct_sum(&self, other: &HomologyGroup) -> HomologyGroup {
        let factors: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        let snf = smith_normal_form(&IntMatrix::diagonal(&factors));
        HomologyGroup {
            rank: self.rank + other.rank,
            torsion: snf.invariant_factors().into_iter().filter(|d| !d.is_one()).collect(),
        }
    }

    /// Number of even invariant factors (the 2-rank of the torsion).
    pub fn even_torsion_count(&self) -> usize {
        self.torsion.iter().filter(|d| !d.bit(0)).count()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
