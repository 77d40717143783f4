use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::surface::{pair, SurfaceClass};

use super::{builtin, connected_sum, handleslide, CutSystem, SlideSign, TrisectionDiagram};

/// The symplectic transvection `x ↦ x + <x, v> v`.
pub fn transvect(v: &SurfaceClass, x: &SurfaceClass) -> SurfaceClass {
    let k = pair(&x.0, &v.0);
    x + &v.scale(&k)
}

/// `α = {a_i}`, `β = {b_i}`, `γ = {a_i + b_i}`.
pub fn standard_triple(genus: usize) -> TrisectionDiagram {
    let alpha = CutSystem::new((0..genus).map(|i| SurfaceClass::a(genus, i)).collect());
    let beta = CutSystem::new((0..genus).map(|i| SurfaceClass::b(genus, i)).collect());
    let gamma = CutSystem::new((0..genus).map(|i| &SurfaceClass::a(genus, i) + &SurfaceClass::b(genus, i)).collect());
    TrisectionDiagram::new(genus, alpha, beta, gamma).expect("well-shaped")
}

/// Applies the transvections of `word` (first element first) to every curve.
pub fn apply_symplectic_word(d: &TrisectionDiagram, word: &[SurfaceClass]) -> TrisectionDiagram {
    let systems = d.systems().clone().map(|cs| {
        CutSystem::new(cs.curves().iter().map(|c| word.iter().fold(c.clone(), |acc, v| transvect(v, &acc))).collect())
    });
    let [a, b, c] = systems;
    let out = TrisectionDiagram::new(d.genus(), a, b, c).expect("shape preserved");
    match d.label() {
        Some(l) => out.with_label(l),
        None => out,
    }
}

/// Nonzero transvection vectors with entries in `{-1, 0, 1}`.
pub fn random_transvection_word<R: Rng>(genus: usize, len: usize, rng: &mut R) -> Vec<SurfaceClass> {
    (0..len)
        .map(|_| loop {
            let v: Vec<BigInt> = (0..2 * genus).map(|_| BigInt::from(rng.gen_range(-1i64..=1))).collect();
            let v = SurfaceClass(v);
            if !v.is_zero() {
                break v;
            }
        })
        .collect()
}

/// Deterministic in `seed`: a random transvection word applied to the
/// standard triple of the given genus.
pub fn random_diagram(genus: usize, seed: u64) -> Result<TrisectionDiagram> {
    if genus == 0 {
        return Err(Error::ZeroGenus);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = rng.gen_range(genus..=2 * genus + 3);
    let word = random_transvection_word(genus, len, &mut rng);
    Ok(apply_symplectic_word(&standard_triple(genus), &word).with_label(format!("random(g={genus},seed={seed})")))
}

/// A random connected sum of genus-1 and genus-2 catalog pieces, moved by
/// a random transvection word and random handleslides in each system.
/// Unlike [`random_diagram`] this reaches `b_1 > 0` and even forms.
pub fn random_composite_diagram(genus: usize, seed: u64) -> Result<TrisectionDiagram> {
    if genus == 0 {
        return Err(Error::ZeroGenus);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7269_7365_6374);
    let mut remaining = genus;
    let mut d = builtin("S4")?;
    while remaining > 0 {
        let choices: &[&str] = if remaining >= 2 {
            &["CP2", "CP2bar", "S1xS3", "S2xS2"]
        } else {
            &["CP2", "CP2bar", "S1xS3"]
        };
        let piece = builtin(choices.choose(&mut rng).expect("nonempty"))?;
        remaining -= piece.genus();
        d = connected_sum(&d, &piece)?;
    }
    let len = rng.gen_range(genus..=2 * genus + 2);
    let word = random_transvection_word(genus, len, &mut rng);
    let mut d = apply_symplectic_word(&d, &word);
    if genus >= 2 {
        for system in 0..3 {
            let mut cs = d.system(system).clone();
            for _ in 0..rng.gen_range(0..=3) {
                let i = rng.gen_range(0..genus);
                let j = (i + rng.gen_range(1..genus)) % genus;
                let sign = if rng.gen_bool(0.5) { SlideSign::Plus } else { SlideSign::Minus };
                cs = handleslide(&cs, i, j, sign)?;
            }
            d = d.with_system(system, cs)?;
        }
    }
    Ok(d.with_label(format!("composite(g={genus},seed={seed})")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{k_values, validate};

    #[test]
    fn transvection_preserves_pairing() {
        let v = SurfaceClass::from_i64(&[1, -1, 0, 1]);
        let x = SurfaceClass::from_i64(&[2, 0, 1, 3]);
        let y = SurfaceClass::from_i64(&[0, 1, -1, 1]);
        assert_eq!(pair(&transvect(&v, &x).0, &transvect(&v, &y).0), pair(&x.0, &y.0));
    }

    #[test]
    fn empty_word_is_identity() {
        let d = standard_triple(3);
        assert_eq!(apply_symplectic_word(&d, &[]), d);
    }

    #[test]
    fn seeds_are_deterministic() {
        assert_eq!(random_diagram(3, 42).unwrap(), random_diagram(3, 42).unwrap());
        assert_eq!(random_composite_diagram(3, 42).unwrap(), random_composite_diagram(3, 42).unwrap());
        assert_ne!(random_diagram(3, 1).unwrap(), random_diagram(3, 2).unwrap());
        assert_eq!(random_diagram(0, 1), Err(Error::ZeroGenus));
    }

    #[test]
    fn generated_diagrams_validate() {
        for g in 1..=4 {
            for seed in 0..40 {
                let d = random_diagram(g, seed).unwrap();
                assert!(validate(&d).is_valid(), "{d}");
                assert_eq!(k_values(&d).unwrap(), [0, 0, 0]);
                let c = random_composite_diagram(g, seed).unwrap();
                assert!(validate(&c).is_valid(), "{c}");
            }
        }
    }
}
