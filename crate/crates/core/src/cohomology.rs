//! The homology complex of a trisection, the Čech complexes of the
//! presheaves `C^j = H^j(-; Z)` over the trisection cover, the dual complex
//! used for Spin^C bookkeeping, and the resulting Hodge diamond.
//!
//! Conventions: `ζ(a, b, c) = (c - a, a - b, b - c)` with `a ∈ L1∩L2`,
//! `b ∈ L2∩L3`, `c ∈ L3∩L1`, and `ι(a, b, c) = a + b + c`. All maps are
//! written in the canonical (Hermite) bases of the subgroups involved.

use std::fmt;

use num_bigint::BigInt;

use crate::complex::{FreeChainComplex, Grading, HomologyGroup, Term};
use crate::diagram::{next, Trisection};
use crate::error::{Error, Result};
use crate::lattice::{IntMatrix, Subgroup};

fn term(name: &str, rank: usize) -> Term {
    Term { name: name.to_string(), rank }
}

fn cap_total(t: &Trisection) -> usize {
    (0..3).map(|l| t.cap(l).rank()).sum()
}

/// Writes a block of coordinates into column `col` starting at `row`.
fn put(m: &mut IntMatrix, row: usize, col: usize, values: &[BigInt], sign: i64) {
    for (i, v) in values.iter().enumerate() {
        m[(row + i, col)] += v * sign;
    }
}

/// The ζ map from `⊕ (L_λ ∩ L_{λ+1})` into `⊕ targets[λ]`, where each cap
/// vector is first sent through `image` and then expressed in the target basis.
fn zeta_matrix(t: &Trisection, targets: &[Subgroup; 3], image: impl Fn(&[BigInt]) -> Vec<BigInt>) -> IntMatrix {
    let offsets: Vec<usize> = (0..3).map(|l| targets[..l].iter().map(Subgroup::rank).sum()).collect();
    let rows: usize = targets.iter().map(Subgroup::rank).sum();
    let mut m = IntMatrix::zeros(rows, cap_total(t));
    let mut col = 0;
    for l in 0..3 {
        for w in t.cap(l).basis() {
            let v = image(w);
            let here = targets[l].coordinates(&v).expect("cap lies in L_λ");
            let there = targets[next(l)].coordinates(&v).expect("cap lies in L_{λ+1}");
            put(&mut m, offsets[l], col, &here, -1);
            put(&mut m, offsets[next(l)], col, &there, 1);
            col += 1;
        }
    }
    m
}

fn sum_matrix(rows: usize, targets: &[Subgroup; 3]) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = targets.iter().flat_map(|s| s.basis().iter().cloned()).collect();
    IntMatrix::from_columns(rows, &cols)
}

/// `Z -0-> ⊕(L_λ ∩ L_{λ+1}) -ζ-> ⊕L_λ -ι-> H_1(Σ) -0-> Z`, homologically
/// graded from 4 down to 0.
pub fn build_fm_complex(t: &Trisection) -> FreeChainComplex {
    let n = 2 * t.genus();
    let lags = [0, 1, 2].map(|l| t.lagrangian(l).clone());
    let caps = cap_total(t);
    let zeta = zeta_matrix(t, &lags, |w| w.to_vec());
    let iota = sum_matrix(n, &lags);
    let lag_rank = 3 * t.genus();
    FreeChainComplex::new(
        vec![
            term("Z", 1),
            term("L1^L2 + L2^L3 + L3^L1", caps),
            term("L1 + L2 + L3", lag_rank),
            term("H1(Sigma)", n),
            term("Z", 1),
        ],
        vec![IntMatrix::zeros(caps, 1), zeta, iota, IntMatrix::zeros(1, n)],
        Grading::Homological { top: 4 },
    )
    .expect("FM differentials compose to zero")
}

/// Which presheaf `C^j` a Čech complex is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Presheaf {
    H0,
    H1,
    H2,
}

impl Presheaf {
    pub fn from_index(j: usize) -> Result<Self> {
        match j {
            0 => Ok(Presheaf::H0),
            1 => Ok(Presheaf::H1),
            2 => Ok(Presheaf::H2),
            _ => Err(Error::InvalidIndex { index: j, range: "0..=2" }),
        }
    }
}

/// The three-term Čech complex `Č^0 -> Č^1 -> Č^2` of `C^j` over the cover.
///
/// For `j = 1` the groups are realised as `H^1(Z_λ) ≅ L_λ ∩ L_{λ+1}`,
/// `H^1(H_λ) ≅ M_λ = π(L_λ)` and `H^1(Σ)` as covectors.
pub fn build_cech_complex(t: &Trisection, presheaf: Presheaf) -> FreeChainComplex {
    match presheaf {
        Presheaf::H0 => FreeChainComplex::new(
            vec![term("H0(U1)+H0(U2)+H0(U3)", 3), term("H0(U12)+H0(U23)+H0(U31)", 3), term("H0(U123)", 1)],
            vec![
                // δ0{a, b, c} = {a - b, b - c, c - a}
                IntMatrix::from_i64(3, 3, &[1, -1, 0, 0, 1, -1, -1, 0, 1]),
                // δ1{a, b, c} = {a + b + c}
                IntMatrix::from_i64(1, 3, &[1, 1, 1]),
            ],
            Grading::Cohomological,
        ),
        Presheaf::H1 => {
            let lattice = t.lattice();
            let n = 2 * t.genus();
            let ms = [0, 1, 2].map(|l| lattice.m_subgroup(t.lagrangian(l)).expect("Lagrangian"));
            let pi = lattice.form_matrix();
            let delta1 = zeta_matrix(t, &ms, |w| pi.mul_vec(w));
            let delta2 = sum_matrix(n, &ms);
            FreeChainComplex::new(
                vec![
                    term("H1(Z1)+H1(Z2)+H1(Z3)", cap_total(t)),
                    term("H1(H1)+H1(H2)+H1(H3)", ms.iter().map(Subgroup::rank).sum()),
                    term("H1(Sigma)", n),
                ],
                vec![delta1, delta2],
                Grading::Cohomological,
            )
        }
        Presheaf::H2 => FreeChainComplex::new(
            vec![term("H2(U1)+H2(U2)+H2(U3)", 0), term("H2(U12)+H2(U23)+H2(U31)", 0), term("H2(U123)", 1)],
            vec![IntMatrix::zeros(0, 0), IntMatrix::zeros(1, 0)],
            Grading::Cohomological,
        ),
    }
    .expect("Čech differentials compose to zero")
}

/// `H^1(Σ) -> ⊕ H_1(H_λ) -> ⊕ H_1(Z_λ)`: `x ↦ ([x], [x], [x])`, then
/// `(a, b, c) ↦ (a - b, b - c, c - a)` in `H_1(Z_λ) = H_1(Σ)/(L_λ + L_{λ+1})`.
/// Graded so the middle term sits in degree 2.
pub fn build_dual_complex(t: &Trisection) -> FreeChainComplex {
    let n = 2 * t.genus();
    let h_dims: Vec<usize> = (0..3).map(|l| t.handlebody(l).free_rank()).collect();
    let y_dims: Vec<usize> = (0..3).map(|l| t.sector(l).free_rank()).collect();
    let h_off: Vec<usize> = (0..3).map(|l| h_dims[..l].iter().sum()).collect();
    let y_off: Vec<usize> = (0..3).map(|l| y_dims[..l].iter().sum()).collect();
    let (h_total, y_total) = (h_dims.iter().sum(), y_dims.iter().sum());

    let mut first = IntMatrix::zeros(h_total, n);
    for l in 0..3 {
        let p = t.handlebody(l).free_projection();
        for i in 0..p.rows() {
            for j in 0..n {
                first[(h_off[l] + i, j)] = p[(i, j)].clone();
            }
        }
    }

    let mut second = IntMatrix::zeros(y_total, h_total);
    for l in 0..3 {
        let proj = t.sector(l).free_projection();
        for (src, sign) in [(l, 1i64), (next(l), -1)] {
            let lifts = t.handlebody(src).free_lifts();
            for (c, lift) in lifts.iter().enumerate() {
                put(&mut second, y_off[l], h_off[src] + c, &proj.mul_vec(lift), sign);
            }
        }
    }

    FreeChainComplex::new(
        vec![
            term("H1(Sigma)", n),
            term("H1(H1)+H1(H2)+H1(H3)", h_total),
            term("H1(Z1)+H1(Z2)+H1(Z3)", y_total),
        ],
        vec![first, second],
        Grading::Homological { top: 3 },
    )
    .expect("dual differentials compose to zero")
}

/// `H_k(X; Z)` for `k = 0..=4` from the FM complex.
pub fn homology_table(t: &Trisection) -> Vec<HomologyGroup> {
    let fm = build_fm_complex(t);
    (0..=4).map(|k| fm.homology(k).expect("degrees 0..=4 exist")).collect()
}

/// Entry `(i, j)` is `Ȟ^i(T, C^j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeDiamond {
    pub entries: [[HomologyGroup; 3]; 3],
}

impl HodgeDiamond {
    pub fn entry(&self, i: usize, j: usize) -> &HomologyGroup {
        &self.entries[i][j]
    }

    /// `H^k(X) ≅ ⊕_{i+j=k} Ȟ^i(T, C^j)`.
    pub fn cohomology(&self, k: usize) -> HomologyGroup {
        (0..3)
            .filter(|&i| k >= i && k - i < 3)
            .fold(HomologyGroup::zero(), |acc, i| acc.direct_sum(&self.entries[i][k - i]))
    }

    /// Column `j` as `(Ȟ^0, Ȟ^1, Ȟ^2)`.
    pub fn column(&self, j: usize) -> [HomologyGroup; 3] {
        [0, 1, 2].map(|i| self.entries[i][j].clone())
    }
}

impl fmt::Display for HodgeDiamond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // rows i = 2, 1, 0 so the top degree is printed first
        for i in (0..3).rev() {
            let row: Vec<String> = (0..3).map(|j| format!("{:>8}", self.entries[i][j].to_string())).collect();
            writeln!(f, "i={i} |{}", row.join(" "))?;
        }
        write!(f, "      {:>8} {:>8} {:>8}", "j=0", "j=1", "j=2")
    }
}

pub fn hodge_diamond(t: &Trisection) -> HodgeDiamond {
    let columns = [Presheaf::H0, Presheaf::H1, Presheaf::H2].map(|p| build_cech_complex(t, p).all_homology());
    HodgeDiamond { entries: [0, 1, 2].map(|i| [0, 1, 2].map(|j| columns[j][i].clone())) }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerreCheck {
    /// Entries `(i, j)` whose rank differs from that of `(2-i, 2-j)`.
    pub mismatches: Vec<(usize, usize)>,
}

impl SerreCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Rank symmetry `(i, j) ↔ (2-i, 2-j)`; torsion is ignored.
pub fn check_serre_duality(h: &HodgeDiamond) -> SerreCheck {
    let mut mismatches = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if h.entries[i][j].rank != h.entries[2 - i][2 - j].rank {
                mismatches.push((i, j));
            }
        }
    }
    SerreCheck { mismatches }
}

/// `H_2(X)` computed three independent ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H2Routes {
    pub fm: HomologyGroup,
    pub dual: HomologyGroup,
    pub cech: HomologyGroup,
}

impl H2Routes {
    pub fn agree(&self) -> bool {
        self.fm == self.dual && self.dual == self.cech
    }
}

pub fn h2_routes(t: &Trisection) -> H2Routes {
    H2Routes {
        fm: build_fm_complex(t).homology(2).expect("degree 2"),
        dual: build_dual_complex(t).homology(2).expect("degree 2"),
        cech: build_cech_complex(t, Presheaf::H1).homology(1).expect("degree 1"),
    }
}
