use crate::error::Result;
use crate::lattice::{quotient, subgroup_intersection, subgroup_sum, QuotientPresentation, Subgroup};
use crate::surface::SymplecticLattice;

use super::{next, require_valid, TrisectionDiagram};

/// A validated diagram together with the lattices every computation uses.
///
/// Index `λ` runs over `0..3`; pair `λ` is `(L_λ, L_{λ+1})` cyclically, so
/// `sector(λ)` is `H_1(Y_λ) = H_1(Z_λ)` for `Y_λ = H_λ ∪ H_{λ+1}`.
#[derive(Clone, Debug)]
pub struct Trisection {
    diagram: TrisectionDiagram,
    k_values: [usize; 3],
    lagrangians: [Subgroup; 3],
    caps: [Subgroup; 3],
    triple_cap: Subgroup,
    handlebodies: [QuotientPresentation; 3],
    sectors: [QuotientPresentation; 3],
    total: QuotientPresentation,
}

impl Trisection {
    pub fn new(diagram: TrisectionDiagram) -> Result<Self> {
        let k_values = require_valid(&diagram)?;
        let n = 2 * diagram.genus();
        let lagrangians = diagram.systems().clone().map(|cs| cs.span(diagram.genus()));
        let caps = [0, 1, 2].map(|l| subgroup_intersection(&lagrangians[l], &lagrangians[next(l)]).expect("ambient"));
        let triple_cap = subgroup_intersection(&caps[0], &lagrangians[2])?;
        let handlebodies = [0, 1, 2].map(|l| quotient(n, &lagrangians[l]).expect("ambient"));
        let sectors = [0, 1, 2].map(|l| {
            let sum = subgroup_sum(&lagrangians[l], &lagrangians[next(l)]).expect("ambient");
            quotient(n, &sum).expect("ambient")
        });
        let all = subgroup_sum(&subgroup_sum(&lagrangians[0], &lagrangians[1])?, &lagrangians[2])?;
        let total = quotient(n, &all)?;
        Ok(Trisection { diagram, k_values, lagrangians, caps, triple_cap, handlebodies, sectors, total })
    }

    pub fn diagram(&self) -> &TrisectionDiagram {
        &self.diagram
    }

    pub fn genus(&self) -> usize {
        self.diagram.genus()
    }

    pub fn lattice(&self) -> SymplecticLattice {
        self.diagram.lattice()
    }

    pub fn k_values(&self) -> [usize; 3] {
        self.k_values
    }

    /// `L_λ`.
    pub fn lagrangian(&self, lambda: usize) -> &Subgroup {
        &self.lagrangians[lambda]
    }

    /// `L_λ ∩ L_{λ+1}`, identified with `H^1(Z_λ)`.
    pub fn cap(&self, lambda: usize) -> &Subgroup {
        &self.caps[lambda]
    }

    /// `L_1 ∩ L_2 ∩ L_3`, identified with `H^1(X)`.
    pub fn triple_cap(&self) -> &Subgroup {
        &self.triple_cap
    }

    /// `H_1(H_λ) = H_1(Σ)/L_λ`.
    pub fn handlebody(&self, lambda: usize) -> &QuotientPresentation {
        &self.handlebodies[lambda]
    }

    /// `H_1(Y_λ) = H_1(Σ)/(L_λ + L_{λ+1})`.
    pub fn sector(&self, lambda: usize) -> &QuotientPresentation {
        &self.sectors[lambda]
    }

    /// `H_1(X) = H_1(Σ)/(L_1 + L_2 + L_3)`.
    pub fn total(&self) -> &QuotientPresentation {
        &self.total
    }
}
