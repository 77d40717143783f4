//! Trisection diagrams at the level of homology: three cut systems on a
//! genus-`g` surface, each recorded by the classes of its curves.

mod catalog;
mod random;
mod trisection;

pub use catalog::{builtin, builtin_names};
pub use random::{
    apply_symplectic_word, random_composite_diagram, random_diagram, random_transvection_word,
    standard_triple, transvect,
};
pub use trisection::Trisection;

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lattice::{quotient, smith_normal_form, subgroup_intersection, subgroup_sum, IntMatrix, Subgroup};
use crate::surface::{pair, SurfaceClass, SymplecticLattice};

pub const SYSTEM_NAMES: [&str; 3] = ["alpha", "beta", "gamma"];

/// Index of the cyclic successor.
pub(crate) fn next(lambda: usize) -> usize {
    (lambda + 1) % 3
}

/// `g` curves on the surface, by homology class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CutSystem {
    curves: Vec<SurfaceClass>,
}

impl CutSystem {
    pub fn new(curves: Vec<SurfaceClass>) -> Self {
        CutSystem { curves }
    }

    pub fn curves(&self) -> &[SurfaceClass] {
        &self.curves
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn span(&self, genus: usize) -> Subgroup {
        Subgroup::from_generators(2 * genus, self.curves.iter().map(|c| c.0.clone()))
    }

    /// Pairwise intersection numbers all vanish.
    pub fn is_lagrangian(&self) -> bool {
        let c = &self.curves;
        (0..c.len()).all(|i| (i + 1..c.len()).all(|j| pair(&c[i].0, &c[j].0) == BigInt::from(0)))
    }

    /// The curves are independent and span a direct summand.
    pub fn is_primitive(&self, genus: usize) -> bool {
        let m = IntMatrix::from_columns(2 * genus, &self.curves.iter().map(|c| c.0.clone()).collect::<Vec<_>>());
        let snf = smith_normal_form(&m);
        snf.rank == self.curves.len() && snf.invariant_factors().iter().all(One::is_one)
    }

    /// Mod-2 reductions of the curves.
    pub fn mod2(&self) -> Vec<Vec<bool>> {
        self.curves.iter().map(SurfaceClass::mod2).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlideSign {
    Plus,
    Minus,
}

/// Slides curve `i` over curve `j` (0-based): `c_i <- c_i ± c_j`.
pub fn handleslide(cs: &CutSystem, i: usize, j: usize, sign: SlideSign) -> Result<CutSystem> {
    if i == j {
        return Err(Error::SelfSlide(i));
    }
    for idx in [i, j] {
        if idx >= cs.len() {
            return Err(Error::InvalidIndex { index: idx, range: "curve index below genus" });
        }
    }
    let mut curves = cs.curves.clone();
    curves[i] = match sign {
        SlideSign::Plus => &curves[i] + &curves[j],
        SlideSign::Minus => &curves[i] - &curves[j],
    };
    Ok(CutSystem { curves })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TrisectionDiagram {
    genus: usize,
    systems: [CutSystem; 3],
    label: Option<String>,
}

impl TrisectionDiagram {
    /// Checks only the shape: `g` curves of length `2g` per system.
    pub fn new(genus: usize, alpha: CutSystem, beta: CutSystem, gamma: CutSystem) -> Result<Self> {
        for cs in [&alpha, &beta, &gamma] {
            if cs.len() != genus {
                return Err(Error::DimensionMismatch { expected: genus, found: cs.len() });
            }
            for c in &cs.curves {
                if c.len() != 2 * genus {
                    return Err(Error::DimensionMismatch { expected: 2 * genus, found: c.len() });
                }
            }
        }
        Ok(TrisectionDiagram { genus, systems: [alpha, beta, gamma], label: None })
    }

    pub fn from_i64(genus: usize, systems: [&[&[i64]]; 3]) -> Result<Self> {
        let [a, b, c] = systems.map(|s| CutSystem::new(s.iter().map(|v| SurfaceClass::from_i64(v)).collect()));
        Self::new(genus, a, b, c)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn lattice(&self) -> SymplecticLattice {
        SymplecticLattice::new(self.genus)
    }

    pub fn alpha(&self) -> &CutSystem {
        &self.systems[0]
    }

    pub fn beta(&self) -> &CutSystem {
        &self.systems[1]
    }

    pub fn gamma(&self) -> &CutSystem {
        &self.systems[2]
    }

    /// Cut system by 0-based index (alpha, beta, gamma).
    pub fn system(&self, index: usize) -> &CutSystem {
        &self.systems[index]
    }

    pub fn systems(&self) -> &[CutSystem; 3] {
        &self.systems
    }

    /// Replaces one cut system (0-based index), keeping the label.
    pub fn with_system(&self, index: usize, cs: CutSystem) -> Result<Self> {
        let mut systems = self.systems.clone();
        systems[index] = cs;
        let [a, b, c] = systems;
        let mut d = Self::new(self.genus, a, b, c)?;
        d.label = self.label.clone();
        Ok(d)
    }
}

impl fmt::Display for TrisectionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "genus {}{}", self.genus, self.label.as_ref().map(|l| format!(" ({l})")).unwrap_or_default())?;
        for (name, cs) in SYSTEM_NAMES.iter().zip(&self.systems) {
            let curves: Vec<String> = cs.curves.iter().map(|c| c.to_string()).collect();
            writeln!(f, "  {name}: {}", curves.join(" "))?;
        }
        Ok(())
    }
}

/// Outcome of every homological validity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub lagrangian: [bool; 3],
    pub primitive: [bool; 3],
    /// Invariant factors of `H_1(Σ)/(L_λ + L_{λ+1})`; valid iff all empty.
    pub pair_torsion: [Vec<BigInt>; 3],
    pub k_values: Option<[usize; 3]>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.k_values.is_some()
    }

    /// Human-readable names of the failing checks, in a fixed order.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for l in 0..3 {
            if !self.lagrangian[l] {
                out.push(format!("{}: curves are not pairwise disjoint in homology (not Lagrangian)", SYSTEM_NAMES[l]));
            }
            if !self.primitive[l] {
                out.push(format!("{}: span is not a rank-g direct summand (not primitive)", SYSTEM_NAMES[l]));
            }
        }
        for l in 0..3 {
            if !self.pair_torsion[l].is_empty() {
                let t: Vec<String> = self.pair_torsion[l].iter().map(|d| format!("Z/{d}")).collect();
                out.push(format!(
                    "{}+{}: H1(Sigma)/(L{}+L{}) has torsion {}",
                    SYSTEM_NAMES[l],
                    SYSTEM_NAMES[next(l)],
                    l + 1,
                    next(l) + 1,
                    t.join(" + ")
                ));
            }
        }
        out
    }
}

pub fn validate(d: &TrisectionDiagram) -> ValidationReport {
    let g = d.genus;
    let lagrangian = d.systems.clone().map(|cs| cs.is_lagrangian());
    let primitive = d.systems.clone().map(|cs| cs.is_primitive(g));
    let spans = d.systems.clone().map(|cs| cs.span(g));
    let pair_torsion = [0, 1, 2].map(|l| {
        let sum = subgroup_sum(&spans[l], &spans[next(l)]).expect("same ambient rank");
        quotient(2 * g, &sum).expect("same ambient rank").torsion().to_vec()
    });
    let ok = lagrangian.iter().chain(&primitive).all(|&b| b) && pair_torsion.iter().all(Vec::is_empty);
    let k_values = ok.then(|| {
        [0, 1, 2].map(|l| subgroup_intersection(&spans[l], &spans[next(l)]).expect("same ambient rank").rank())
    });
    ValidationReport { lagrangian, primitive, pair_torsion, k_values }
}

fn require_valid(d: &TrisectionDiagram) -> Result<[usize; 3]> {
    let report = validate(d);
    report.k_values.ok_or_else(|| Error::InvalidDiagram(report.failures()))
}

/// `k_λ = rank(L_λ ∩ L_{λ+1})`.
pub fn k_values(d: &TrisectionDiagram) -> Result<[usize; 3]> {
    require_valid(d)
}

/// `L_λ` for `λ ∈ {1, 2, 3}`.
pub fn lagrangian_subgroup(d: &TrisectionDiagram, lambda: usize) -> Result<Subgroup> {
    if !(1..=3).contains(&lambda) {
        return Err(Error::InvalidIndex { index: lambda, range: "1..=3" });
    }
    Ok(d.systems[lambda - 1].span(d.genus))
}

/// Blockwise connected sum; genus and k-values add.
pub fn connected_sum(d1: &TrisectionDiagram, d2: &TrisectionDiagram) -> Result<TrisectionDiagram> {
    require_valid(d1)?;
    require_valid(d2)?;
    let g = d1.genus + d2.genus;
    let systems: Vec<CutSystem> = (0..3)
        .map(|l| {
            let first = d1.systems[l].curves.iter().map(|c| c.embed(g, 0));
            let second = d2.systems[l].curves.iter().map(|c| c.embed(g, d1.genus));
            CutSystem::new(first.chain(second).collect())
        })
        .collect();
    let [a, b, c]: [CutSystem; 3] = systems.try_into().expect("three systems");
    let mut out = TrisectionDiagram::new(g, a, b, c)?;
    out.label = match (d1.label(), d2.label()) {
        (Some(x), Some(y)) => Some(format!("{x}#{y}")),
        _ => None,
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ints;

    fn cp2() -> TrisectionDiagram {
        TrisectionDiagram::from_i64(1, [&[&[1, 0]], &[&[0, 1]], &[&[1, 1]]]).unwrap()
    }

    #[test]
    fn lagrangians_of_cp2() {
        let d = cp2();
        assert_eq!(lagrangian_subgroup(&d, 1).unwrap(), Subgroup::from_generators(2, vec![ints(&[1, 0])]));
        assert!(lagrangian_subgroup(&d, 0).is_err());
        assert!(lagrangian_subgroup(&d, 4).is_err());
    }

    #[test]
    fn validate_cp2() {
        let r = validate(&cp2());
        assert!(r.is_valid());
        assert_eq!(r.k_values, Some([0, 0, 0]));
        assert!(r.failures().is_empty());
    }

    #[test]
    fn torsion_in_pair_sum_is_reported() {
        let d = TrisectionDiagram::from_i64(1, [&[&[1, 0]], &[&[0, 1]], &[&[2, 1]]]).unwrap();
        let r = validate(&d);
        assert!(!r.is_valid());
        assert_eq!(r.pair_torsion[1], ints(&[2]));
        assert_eq!(r.failures(), vec!["beta+gamma: H1(Sigma)/(L2+L3) has torsion Z/2".to_string()]);
        assert!(matches!(k_values(&d), Err(Error::InvalidDiagram(_))));
    }

    #[test]
    fn non_lagrangian_system() {
        let d = TrisectionDiagram::from_i64(
            2,
            [&[&[1, 0, 0, 0], &[0, 1, 0, 0]], &[&[0, 1, 0, 0], &[0, 0, 0, 1]], &[&[1, 1, 0, 0], &[0, 0, 1, 1]]],
        )
        .unwrap();
        let r = validate(&d);
        assert!(!r.lagrangian[0]);
        assert!(r.failures()[0].starts_with("alpha: "));
    }

    #[test]
    fn non_primitive_system() {
        let d = TrisectionDiagram::from_i64(1, [&[&[2, 0]], &[&[0, 1]], &[&[1, 1]]]).unwrap();
        let r = validate(&d);
        assert!(!r.primitive[0]);
    }

    #[test]
    fn shape_errors() {
        let bad = TrisectionDiagram::from_i64(1, [&[&[1, 0]], &[&[0, 1], &[1, 0]], &[&[1, 1]]]);
        assert!(matches!(bad, Err(Error::DimensionMismatch { .. })));
        let bad = TrisectionDiagram::from_i64(1, [&[&[1, 0, 0]], &[&[0, 1]], &[&[1, 1]]]);
        assert!(matches!(bad, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn slides() {
        let cs = CutSystem::new(vec![SurfaceClass::a(2, 0), SurfaceClass::a(2, 1)]);
        let slid = handleslide(&cs, 0, 1, SlideSign::Plus).unwrap();
        assert_eq!(slid.curves()[0], SurfaceClass::from_i64(&[1, 0, 1, 0]));
        assert!(slid.is_lagrangian());
        assert_eq!(slid.span(2), cs.span(2));
        let back = handleslide(&slid, 0, 1, SlideSign::Minus).unwrap();
        assert_eq!(back, cs);
        assert_eq!(handleslide(&cs, 1, 1, SlideSign::Plus), Err(Error::SelfSlide(1)));
        assert!(handleslide(&cs, 0, 2, SlideSign::Plus).is_err());
    }

    #[test]
    fn connected_sum_is_blockwise() {
        let cp2bar = TrisectionDiagram::from_i64(1, [&[&[1, 0]], &[&[0, 1]], &[&[1, -1]]]).unwrap();
        let d = connected_sum(&cp2(), &cp2bar).unwrap();
        assert_eq!(d.genus(), 2);
        assert_eq!(d.gamma().curves()[1], SurfaceClass::from_i64(&[0, 0, 1, -1]));
        assert_eq!(k_values(&d).unwrap(), [0, 0, 0]);
        let invalid = TrisectionDiagram::from_i64(1, [&[&[1, 0]], &[&[0, 1]], &[&[2, 1]]]).unwrap();
        assert!(connected_sum(&cp2(), &invalid).is_err());
    }
}
