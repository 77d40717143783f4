mod common;

use common::{catalog, label, rng};
use proptest::prelude::*;
use rand::Rng;
use trisection_core::cohomology::homology_table;
use trisection_core::diagram::{handleslide, random_composite_diagram, SlideSign, Trisection, TrisectionDiagram};
use trisection_core::pairings::intersection_form;
use trisection_core::spin::enumerate_spin;

fn slide_randomly(d: &TrisectionDiagram, seed: u64, count: usize) -> TrisectionDiagram {
    let mut r = rng(seed);
    let g = d.genus();
    let mut d = d.clone();
    if g < 2 {
        return d;
    }
    for _ in 0..count {
        let system = r.gen_range(0..3);
        let i = r.gen_range(0..g);
        let j = (i + r.gen_range(1..g)) % g;
        let sign = if r.gen_bool(0.5) { SlideSign::Plus } else { SlideSign::Minus };
        let cs = handleslide(d.system(system), i, j, sign).unwrap();
        d = d.with_system(system, cs).unwrap();
    }
    d
}

fn invariants(d: &TrisectionDiagram) -> (Vec<trisection_core::complex::HomologyGroup>, (usize, usize), usize) {
    let t = Trisection::new(d.clone()).unwrap();
    let f = intersection_form(&t).unwrap();
    (homology_table(&t), f.signature, enumerate_spin(d).unwrap().len())
}

#[test]
fn catalog_invariants_survive_slides() {
    for (n, t) in catalog().iter().enumerate() {
        let d = t.diagram();
        let before = invariants(d);
        for seed in 0..5 {
            assert_eq!(invariants(&slide_randomly(d, seed + 100 * n as u64, 6)), before, "{}", label(t));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn random_invariants_survive_slides(g in 2usize..=4, seed in 0u64..10_000, slides in 1usize..8) {
        let d = random_composite_diagram(g, seed).unwrap();
        prop_assert_eq!(invariants(&slide_randomly(&d, seed, slides)), invariants(&d));
    }
}
