//! Pairings on a trisected 4-manifold, realised on the central surface.
//!
//! A class in `H^2(X)` is a (1,1)-cocycle `(b_1, b_2, b_3)` with
//! `b_λ ∈ L_λ` and `b_1 + b_2 + b_3 = 0`; the same triple is the transition
//! data of a complex line bundle trivialised over the three sectors. The
//! intersection form is `Q(x, y) = <x.b_1, y.b_2>_Σ`, which agrees with
//! `<x.b_2, y.b_3>_Σ` and `<x.b_3, y.b_1>_Σ` on cocycles. With the basis and
//! orientation conventions of [`crate::surface`], `CP2` evaluates to `+1`.
//!
//! Torsion of `H^2` is not seen by any of the pairings here.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::cohomology::{build_dual_complex, build_fm_complex};
use crate::complex::HomologyPresentation;
use crate::diagram::{next, Trisection};
use crate::error::{Error, Result};
use crate::lattice::{solve_integral, IntMatrix};
use crate::surface::{pair, SurfaceClass};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OneOneCocycle {
    pub parts: [SurfaceClass; 3],
}

impl OneOneCocycle {
    pub fn new(parts: [SurfaceClass; 3]) -> Self {
        OneOneCocycle { parts }
    }

    pub fn zero(genus: usize) -> Self {
        OneOneCocycle { parts: [0, 1, 2].map(|_| SurfaceClass::zero(genus)) }
    }

    pub fn add(&self, other: &Self) -> Self {
        OneOneCocycle { parts: [0, 1, 2].map(|l| &self.parts[l] + &other.parts[l]) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        OneOneCocycle { parts: [0, 1, 2].map(|l| &self.parts[l] - &other.parts[l]) }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        OneOneCocycle { parts: [0, 1, 2].map(|l| self.parts[l].scale(k)) }
    }

    /// `b_λ ∈ L_λ` and `b_1 + b_2 + b_3 = 0`.
    pub fn check(&self, t: &Trisection) -> Result<()> {
        let n = 2 * t.genus();
        for (l, b) in self.parts.iter().enumerate() {
            if b.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: b.len() });
            }
            if !t.lagrangian(l).contains(&b.0) {
                return Err(Error::CocycleViolation(format!("b{} = {b} is not in L{}", l + 1, l + 1)));
            }
        }
        let total = &(&self.parts[0] + &self.parts[1]) + &self.parts[2];
        if !total.is_zero() {
            return Err(Error::CocycleViolation(format!("b1 + b2 + b3 = {total} is not zero")));
        }
        Ok(())
    }
}

impl fmt::Display for OneOneCocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.parts[0], self.parts[1], self.parts[2])
    }
}

/// A class of the dual complex: `a_λ ∈ H_1(H_λ)` given by ambient lifts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct H2DualRep {
    pub lifts: [SurfaceClass; 3],
}

impl H2DualRep {
    pub fn new(lifts: [SurfaceClass; 3]) -> Self {
        H2DualRep { lifts }
    }

    pub fn zero(genus: usize) -> Self {
        H2DualRep { lifts: [0, 1, 2].map(|_| SurfaceClass::zero(genus)) }
    }

    pub fn add(&self, other: &Self) -> Self {
        H2DualRep { lifts: [0, 1, 2].map(|l| &self.lifts[l] + &other.lifts[l]) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        H2DualRep { lifts: [0, 1, 2].map(|l| &self.lifts[l] - &other.lifts[l]) }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        H2DualRep { lifts: [0, 1, 2].map(|l| self.lifts[l].scale(k)) }
    }

    /// Builds a rep from quotient coordinates in each `H_1(H_λ)`.
    pub fn from_classes(t: &Trisection, classes: &[Vec<BigInt>; 3]) -> Self {
        H2DualRep { lifts: [0, 1, 2].map(|l| SurfaceClass(t.handlebody(l).lift(&classes[l]))) }
    }

    /// Quotient coordinates of `a_λ` in `H_1(H_λ)`.
    pub fn classes(&self, t: &Trisection) -> [Vec<BigInt>; 3] {
        [0, 1, 2].map(|l| t.handlebody(l).project(&self.lifts[l].0))
    }

    /// `a_λ - a_{λ+1} = 0` in `H_1(Z_λ)` for each cyclic pair.
    pub fn check(&self, t: &Trisection) -> Result<()> {
        let n = 2 * t.genus();
        for a in &self.lifts {
            if a.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: a.len() });
            }
        }
        for l in 0..3 {
            let diff = &self.lifts[l] - &self.lifts[next(l)];
            if !t.sector(l).is_zero_class(&diff.0) {
                return Err(Error::NotACycle(format!(
                    "a{} - a{} is nonzero in H1(Z{})",
                    l + 1,
                    next(l) + 1,
                    l + 1
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for H2DualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "([{}], [{}], [{}])", self.lifts[0], self.lifts[1], self.lifts[2])
    }
}

fn fm_h2(t: &Trisection) -> HomologyPresentation {
    build_fm_complex(t).presentation(2).expect("degree 2 exists")
}

fn cocycle_from_chain(t: &Trisection, chain: &[BigInt]) -> OneOneCocycle {
    let g = t.genus();
    OneOneCocycle { parts: [0, 1, 2].map(|l| SurfaceClass(t.lagrangian(l).combination(&chain[l * g..(l + 1) * g]))) }
}

fn chain_of_cocycle(t: &Trisection, x: &OneOneCocycle) -> Vec<BigInt> {
    (0..3).flat_map(|l| t.lagrangian(l).coordinates(&x.parts[l].0).expect("checked cocycle")).collect()
}

/// Cocycles representing a basis of `H^2(X)/torsion`.
pub fn h2_basis_cocycles(t: &Trisection) -> Vec<OneOneCocycle> {
    fm_h2(t).free_generators().iter().map(|c| cocycle_from_chain(t, c)).collect()
}

/// Coordinates of a cocycle's class in the basis of [`h2_basis_cocycles`].
pub fn cocycle_class(t: &Trisection, x: &OneOneCocycle) -> Result<Vec<BigInt>> {
    x.check(t)?;
    Ok(fm_h2(t).free_class_of(&chain_of_cocycle(t, x)).expect("cocycles lie in ker ι"))
}

/// `ζ(w)` for `w_λ ∈ L_λ ∩ L_{λ+1}` given in cap coordinates.
pub fn coboundary(t: &Trisection, caps: &[Vec<BigInt>; 3]) -> OneOneCocycle {
    let mut parts = [0, 1, 2].map(|_| SurfaceClass::zero(t.genus()));
    for l in 0..3 {
        let w = SurfaceClass(t.cap(l).combination(&caps[l]));
        parts[l] = &parts[l] - &w;
        parts[next(l)] = &parts[next(l)] + &w;
    }
    OneOneCocycle { parts }
}

/// `<x.b_1, y.b_2>`, `<x.b_2, y.b_3>`, `<x.b_3, y.b_1>`.
pub fn pairing_expressions(t: &Trisection, x: &OneOneCocycle, y: &OneOneCocycle) -> Result<[BigInt; 3]> {
    x.check(t)?;
    y.check(t)?;
    Ok([0, 1, 2].map(|l| pair(&x.parts[l].0, &y.parts[next(l)].0)))
}

pub fn intersection_pairing(t: &Trisection, x: &OneOneCocycle, y: &OneOneCocycle) -> Result<BigInt> {
    x.check(t)?;
    y.check(t)?;
    Ok(pair(&x.parts[0].0, &y.parts[1].0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionForm {
    pub gram: IntMatrix,
    pub determinant: BigInt,
    /// `(positive, negative)` inertia.
    pub signature: (usize, usize),
    pub parity: Parity,
    pub unimodular: bool,
}

impl IntersectionForm {
    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn from_gram(gram: IntMatrix) -> Self {
        let determinant = gram.determinant();
        let signature = signature(&gram);
        let parity = if characteristic_mod2(&gram).iter().any(|&b| b) { Parity::Odd } else { Parity::Even };
        let unimodular = determinant.abs() == BigInt::from(1);
        IntersectionForm { gram, determinant, signature, parity, unimodular }
    }
}

/// `Q(x, x) ≡ Q(x, w) mod 2` is solved by `w = diag(Q) mod 2`; the form is
/// even iff the zero vector is characteristic.
pub fn characteristic_mod2(gram: &IntMatrix) -> Vec<bool> {
    (0..gram.rows()).map(|i| gram[(i, i)].bit(0)).collect()
}

/// Inertia of a symmetric integer matrix by exact congruence
/// diagonalisation over the rationals.
pub fn signature(gram: &IntMatrix) -> (usize, usize) {
    let n = gram.rows();
    let mut a: Vec<Vec<BigRational>> =
        (0..n).map(|i| (0..n).map(|j| BigRational::from_integer(gram[(i, j)].clone())).collect()).collect();
    let (mut pos, mut neg) = (0, 0);
    for k in 0..n {
        if let Some(i) = (k..n).find(|&i| !a[i][i].is_zero()) {
            swap_sym(&mut a, k, i);
        } else {
            let Some((i, j)) = (k..n).flat_map(|i| (k..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
            else {
                break;
            };
            // row_i += row_j, col_i += col_j makes a_ii = 2 a_ij
            for c in 0..n {
                let v = a[j][c].clone();
                a[i][c] += v;
            }
            for r in 0..n {
                let v = a[r][j].clone();
                a[r][i] += v;
            }
            swap_sym(&mut a, k, i);
        }
        let p = a[k][k].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for r in k + 1..n {
            let f = &a[r][k] / &p;
            if f.is_zero() {
                continue;
            }
            for c in k..n {
                let v = &f * &a[k][c];
                a[r][c] -= v;
            }
        }
        for r in k + 1..n {
            a[k][r] = BigRational::zero();
        }
    }
    (pos, neg)
}

fn swap_sym(a: &mut [Vec<BigRational>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// The form on `H^2(X)/torsion` in the basis of [`h2_basis_cocycles`].
pub fn intersection_form(t: &Trisection) -> Result<IntersectionForm> {
    let basis = h2_basis_cocycles(t);
    let n = basis.len();
    let mut gram = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram[(i, j)] = intersection_pairing(t, &basis[i], &basis[j])?;
        }
    }
    Ok(IntersectionForm::from_gram(gram))
}

/// `<h3, h1>_Σ` for `h3 ∈ H_1(Σ)/(L_1+L_2+L_3)` and `h1 ∈ L_1 ∩ L_2 ∩ L_3`.
pub fn pairing_h3_h1(t: &Trisection, h3: &SurfaceClass, h1: &SurfaceClass) -> Result<BigInt> {
    let lattice = t.lattice();
    if !t.triple_cap().contains(&h1.0) {
        return Err(Error::NotInSubgroup("L1 ∩ L2 ∩ L3"));
    }
    lattice.intersection_number(h3, h1)
}

/// Lifts of a basis of `H^3(X)/torsion = (H_1(Σ)/ΣL)/torsion`.
pub fn h3_basis(t: &Trisection) -> Vec<SurfaceClass> {
    t.total().free_lifts().into_iter().map(SurfaceClass).collect()
}

/// A basis of `H^1(X) = L_1 ∩ L_2 ∩ L_3`.
pub fn h1_basis(t: &Trisection) -> Vec<SurfaceClass> {
    t.triple_cap().basis().iter().cloned().map(SurfaceClass).collect()
}

/// Matrix of the `H^3 x H^1` pairing on the bases above.
pub fn h3_h1_matrix(t: &Trisection) -> IntMatrix {
    let (h3, h1) = (h3_basis(t), h1_basis(t));
    IntMatrix::from_fn(h3.len(), h1.len(), |i, j| pair(&h3[i].0, &h1[j].0))
}

/// `Σ_λ <x.b_λ, a_λ>_Σ`.
pub fn evaluate_on_surface_class(t: &Trisection, x: &OneOneCocycle, k: &H2DualRep) -> Result<BigInt> {
    x.check(t)?;
    k.check(t)?;
    Ok((0..3).map(|l| pair(&x.parts[l].0, &k.lifts[l].0)).sum())
}

fn dual_h2(t: &Trisection) -> HomologyPresentation {
    build_dual_complex(t).presentation(2).expect("degree 2 exists")
}

fn dual_chain(t: &Trisection, k: &H2DualRep) -> Vec<BigInt> {
    k.classes(t).concat()
}

fn rep_from_dual_chain(t: &Trisection, chain: &[BigInt]) -> H2DualRep {
    let mut offset = 0;
    let classes = [0, 1, 2].map(|l| {
        let d = t.handlebody(l).dimension();
        let c = chain[offset..offset + d].to_vec();
        offset += d;
        c
    });
    H2DualRep::from_classes(t, &classes)
}

/// Dual reps whose classes form a basis of the free part of `H_2(X)`.
pub fn h2_dual_basis(t: &Trisection) -> Vec<H2DualRep> {
    dual_h2(t).free_generators().iter().map(|c| rep_from_dual_chain(t, c)).collect()
}

/// Coordinates of a dual rep's class in the basis of [`h2_dual_basis`].
pub fn dual_class(t: &Trisection, k: &H2DualRep) -> Result<Vec<BigInt>> {
    k.check(t)?;
    Ok(dual_h2(t).free_class_of(&dual_chain(t, k)).expect("checked cycle"))
}

/// `E[i][j] = evaluate(x_i, K_j)` on the two canonical bases.
pub fn evaluation_matrix(t: &Trisection) -> Result<IntMatrix> {
    let xs = h2_basis_cocycles(t);
    let ks = h2_dual_basis(t);
    let mut e = IntMatrix::zeros(xs.len(), ks.len());
    for (i, x) in xs.iter().enumerate() {
        for (j, k) in ks.iter().enumerate() {
            e[(i, j)] = evaluate_on_surface_class(t, x, k)?;
        }
    }
    Ok(e)
}

/// A dual rep `K` with `evaluate(x', K) = Q(x', x)` for every basis cocycle
/// `x'`, found by an exact solve against the evaluation matrix.
pub fn poincare_dual_rep(t: &Trisection, x: &OneOneCocycle) -> Result<H2DualRep> {
    x.check(t)?;
    let xs = h2_basis_cocycles(t);
    let ks = h2_dual_basis(t);
    let e = evaluation_matrix(t)?;
    let rhs = xs.iter().map(|b| intersection_pairing(t, b, x)).collect::<Result<Vec<_>>>()?;
    let coeffs = solve_integral(&e, &rhs).ok_or(Error::SingularSolve)?;
    Ok(coeffs.iter().zip(&ks).fold(H2DualRep::zero(t.genus()), |acc, (c, k)| acc.add(&k.scale(c))))
}

/// Inverse direction: a cocycle `x` with `Q(x', x) = evaluate(x', K)` for
/// every basis cocycle `x'`.
pub fn cocycle_from_dual_rep(t: &Trisection, k: &H2DualRep) -> Result<OneOneCocycle> {
    k.check(t)?;
    let xs = h2_basis_cocycles(t);
    let form = intersection_form(t)?;
    let rhs = xs.iter().map(|b| evaluate_on_surface_class(t, b, k)).collect::<Result<Vec<_>>>()?;
    let coeffs = solve_integral(&form.gram, &rhs).ok_or(Error::SingularSolve)?;
    Ok(coeffs.iter().zip(&xs).fold(OneOneCocycle::zero(t.genus()), |acc, (c, b)| acc.add(&b.scale(c))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::builtin;

    fn tri(name: &str) -> Trisection {
        Trisection::new(builtin(name).unwrap()).unwrap()
    }

    fn sc(v: &[i64]) -> SurfaceClass {
        SurfaceClass::from_i64(v)
    }

    #[test]
    fn cp2_generator() {
        let t = tri("CP2");
        let basis = h2_basis_cocycles(&t);
        assert_eq!(basis.len(), 1);
        // solve x(1,0) + y(0,1) + z(1,1) = 0: x = y = -z
        let x = &basis[0];
        let s = x.parts[0].0[0].clone();
        assert_eq!(x, &OneOneCocycle::new([sc(&[1, 0]), sc(&[0, 1]), sc(&[-1, -1])]).scale(&s));
        assert_eq!(intersection_pairing(&t, x, x).unwrap(), BigInt::from(1));
        let exprs = pairing_expressions(&t, x, x).unwrap();
        assert!(exprs.iter().all(|e| e == &BigInt::from(1)));
    }

    #[test]
    fn empty_second_cohomology() {
        assert!(h2_basis_cocycles(&tri("S1xS3")).is_empty());
        assert!(h2_basis_cocycles(&tri("S4")).is_empty());
        let f = intersection_form(&tri("S1xS3")).unwrap();
        assert_eq!(f.rank(), 0);
        assert_eq!(f.signature, (0, 0));
        assert!(f.unimodular);
    }

    #[test]
    fn forms_of_catalog() {
        let f = intersection_form(&tri("CP2")).unwrap();
        assert_eq!(f.gram, IntMatrix::from_i64(1, 1, &[1]));
        assert_eq!((f.signature, f.parity, f.unimodular), ((1, 0), Parity::Odd, true));
        let f = intersection_form(&tri("CP2bar")).unwrap();
        assert_eq!(f.gram, IntMatrix::from_i64(1, 1, &[-1]));
        let f = intersection_form(&tri("CP2#CP2bar")).unwrap();
        assert_eq!(f.gram, IntMatrix::from_i64(2, 2, &[1, 0, 0, -1]));
        let f = intersection_form(&tri("S2xS2")).unwrap();
        assert_eq!((f.signature, f.parity), ((1, 1), Parity::Even));
        assert_eq!(f.determinant, BigInt::from(-1));
        let f = intersection_form(&tri("S2xS2_candidate")).unwrap();
        assert_eq!((f.signature, f.parity, f.unimodular), ((2, 0), Parity::Odd, true));
    }

    #[test]
    fn signature_needs_off_diagonal_pivots() {
        assert_eq!(signature(&IntMatrix::from_i64(2, 2, &[0, 1, 1, 0])), (1, 1));
        assert_eq!(signature(&IntMatrix::from_i64(3, 3, &[0, 2, 0, 2, 0, 0, 0, 0, 0])), (1, 1));
        // E8-style positive definite block
        let a2 = IntMatrix::from_i64(2, 2, &[2, -1, -1, 2]);
        assert_eq!(signature(&a2), (2, 0));
        assert_eq!(signature(&a2.scale(&BigInt::from(-1))), (0, 2));
    }

    #[test]
    fn cocycle_checks() {
        let t = tri("CP2");
        let bad = OneOneCocycle::new([sc(&[0, 1]), sc(&[0, -1]), sc(&[0, 0])]);
        assert!(matches!(bad.check(&t), Err(Error::CocycleViolation(_))));
        let bad = OneOneCocycle::new([sc(&[1, 0]), sc(&[0, 1]), sc(&[0, 0])]);
        assert!(matches!(intersection_pairing(&t, &bad, &bad), Err(Error::CocycleViolation(_))));
        let zero = OneOneCocycle::zero(1);
        let x = &h2_basis_cocycles(&t)[0];
        assert_eq!(intersection_pairing(&t, x, &zero).unwrap(), BigInt::zero());
    }

    #[test]
    fn h3_h1_on_s1xs3() {
        let t = tri("S1xS3");
        let h1 = sc(&[0, 1]);
        assert_eq!(pairing_h3_h1(&t, &sc(&[1, 0]), &h1).unwrap(), BigInt::from(1));
        assert_eq!(pairing_h3_h1(&t, &sc(&[1, 1]), &h1).unwrap(), BigInt::from(1));
        assert_eq!(pairing_h3_h1(&t, &sc(&[1, 0]), &sc(&[1, 0])), Err(Error::NotInSubgroup("L1 ∩ L2 ∩ L3")));
        assert!(h3_h1_matrix(&t).is_unimodular());
        assert_eq!(h3_h1_matrix(&tri("CP2")).rows(), 0);
    }

    #[test]
    fn evaluation_on_cp2() {
        let t = tri("CP2");
        let x = &h2_basis_cocycles(&t)[0];
        let s = &x.parts[0].0[0];
        let k = H2DualRep::new([sc(&[0, 1]), sc(&[0, 0]), sc(&[0, 0])]);
        assert_eq!(&evaluate_on_surface_class(&t, x, &k).unwrap(), s);
        // lift ambiguity: add L1 to a1
        let k2 = H2DualRep::new([sc(&[5, 1]), sc(&[0, 0]), sc(&[0, 0])]);
        assert_eq!(evaluate_on_surface_class(&t, x, &k2).unwrap(), evaluate_on_surface_class(&t, x, &k).unwrap());
        assert_eq!(evaluate_on_surface_class(&t, &OneOneCocycle::zero(1), &k).unwrap(), BigInt::zero());
    }

    #[test]
    fn poincare_dual_of_cp2_generator() {
        let t = tri("CP2");
        let x = &h2_basis_cocycles(&t)[0];
        let k = poincare_dual_rep(&t, x).unwrap();
        assert_eq!(evaluate_on_surface_class(&t, x, &k).unwrap(), BigInt::from(1));
        // homologous to ([b2], 0, 0)
        let closed = H2DualRep::new([x.parts[1].clone(), SurfaceClass::zero(1), SurfaceClass::zero(1)]);
        assert_eq!(dual_class(&t, &k).unwrap(), dual_class(&t, &closed).unwrap());
        assert_eq!(poincare_dual_rep(&t, &OneOneCocycle::zero(1)).unwrap(), H2DualRep::zero(1));
    }

    #[test]
    fn dual_rep_cycle_conditions() {
        let t = tri("S1xS3");
        let ok = H2DualRep::new([sc(&[1, 0]), sc(&[1, 3]), sc(&[1, -2])]);
        assert!(ok.check(&t).is_ok());
        let bad = H2DualRep::new([sc(&[1, 0]), sc(&[0, 0]), sc(&[0, 0])]);
        assert_eq!(bad.check(&t), Err(Error::NotACycle("a1 - a2 is nonzero in H1(Z1)".into())));
    }

    #[test]
    fn round_trip_through_dual_reps() {
        let t = tri("CP2#CP2bar");
        for x in h2_basis_cocycles(&t) {
            let k = poincare_dual_rep(&t, &x).unwrap();
            let back = cocycle_from_dual_rep(&t, &k).unwrap();
            assert_eq!(cocycle_class(&t, &back).unwrap(), cocycle_class(&t, &x).unwrap());
        }
    }
}
