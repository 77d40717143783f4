#![allow(dead_code)]

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trisection_core::complex::HomologyGroup;
use trisection_core::diagram::{builtin, builtin_names, random_composite_diagram, random_diagram, Trisection};
use trisection_core::pairings::{coboundary, h2_basis_cocycles, h2_dual_basis, H2DualRep, OneOneCocycle};
use trisection_core::surface::SurfaceClass;

pub fn tri(name: &str) -> Trisection {
    Trisection::new(builtin(name).unwrap()).unwrap()
}

pub fn catalog() -> Vec<Trisection> {
    let mut names: Vec<String> = builtin_names().iter().map(|s| s.to_string()).collect();
    names.extend(["CP2#CP2bar", "S1xS3#S1xS3", "S1xS3#CP2", "S2xS2#S1xS3", "CP2#CP2#CP2bar"].map(String::from));
    names.iter().map(|n| tri(n)).collect()
}

/// 120 random diagrams of genus 1..=4 from both generators.
pub fn random_suite() -> Vec<Trisection> {
    let mut out = Vec::new();
    for seed in 0..60u64 {
        let g = 1 + (seed as usize % 4);
        out.push(Trisection::new(random_diagram(g, seed).unwrap()).unwrap());
        out.push(Trisection::new(random_composite_diagram(g, 1000 + seed).unwrap()).unwrap());
    }
    out
}

pub fn full_suite() -> Vec<Trisection> {
    let mut all = catalog();
    all.extend(random_suite());
    all
}

pub fn label(t: &Trisection) -> String {
    t.diagram().label().unwrap_or("?").to_string()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(rng: &mut ChaCha8Rng) -> BigInt {
    BigInt::from(rng.gen_range(-3i64..=3))
}

/// A random cocycle: basis combination plus a random coboundary.
pub fn random_cocycle(t: &Trisection, rng: &mut ChaCha8Rng) -> OneOneCocycle {
    let mut x = OneOneCocycle::zero(t.genus());
    for b in h2_basis_cocycles(t) {
        x = x.add(&b.scale(&small(rng)));
    }
    x.add(&random_coboundary(t, rng))
}

pub fn random_coboundary(t: &Trisection, rng: &mut ChaCha8Rng) -> OneOneCocycle {
    let caps = [0, 1, 2].map(|l| (0..t.cap(l).rank()).map(|_| small(rng)).collect::<Vec<_>>());
    coboundary(t, &caps)
}

/// A random cycle of the dual complex, with noisy lifts.
pub fn random_dual_cycle(t: &Trisection, rng: &mut ChaCha8Rng) -> H2DualRep {
    let g = t.genus();
    let mut k = H2DualRep::zero(g);
    for b in h2_dual_basis(t) {
        k = k.add(&b.scale(&small(rng)));
    }
    // the boundary of x ∈ H^1(Σ) is ([x], [x], [x])
    let x = SurfaceClass((0..2 * g).map(|_| small(rng)).collect());
    k = k.add(&H2DualRep::new([x.clone(), x.clone(), x]));
    let noise = [0, 1, 2].map(|l| {
        let lag = t.lagrangian(l);
        SurfaceClass(lag.combination(&(0..lag.rank()).map(|_| small(rng)).collect::<Vec<_>>()))
    });
    k.add(&H2DualRep::new(noise))
}

pub fn betti(groups: &[HomologyGroup]) -> Vec<usize> {
    groups.iter().map(|h| h.rank).collect()
}

/// `H^k = free(H_k) ⊕ tors(H_{k-1})`.
pub fn cohomology_from_homology(h: &[HomologyGroup], k: usize) -> HomologyGroup {
    let torsion = if k == 0 { vec![] } else { h[k - 1].torsion.clone() };
    HomologyGroup { rank: h[k].rank, torsion }
}
