mod common;

use common::{betti, cohomology_from_homology, full_suite, label};
use num_bigint::BigInt;
use trisection_core::cohomology::{check_serre_duality, h2_routes, hodge_diamond, homology_table};
use trisection_core::complex::HomologyGroup;
use trisection_core::pairings::{h3_h1_matrix, intersection_form, Parity};
use trisection_core::spin::{enumerate_spin, spin_torsor_size};

#[test]
fn suite_is_large_enough() {
    let suite = full_suite();
    assert!(suite.len() >= 100);
    assert!(suite.iter().all(|t| t.genus() <= 4));
    assert!(suite.iter().any(|t| homology_table(t)[1].rank > 0));
    assert!(suite.iter().any(|t| intersection_form(t).unwrap().parity == Parity::Even));
}

#[test]
fn diamond_structure() {
    for t in full_suite() {
        let h = hodge_diamond(&t);
        let z = HomologyGroup::free(1);
        let o = HomologyGroup::zero();
        assert_eq!(h.column(0), [z.clone(), o.clone(), o.clone()], "{}", label(&t));
        assert_eq!(h.column(2), [o.clone(), o, z], "{}", label(&t));
        let table = homology_table(&t);
        for k in 0..=4 {
            assert_eq!(h.cohomology(k), cohomology_from_homology(&table, k), "{} k={k}", label(&t));
        }
    }
}

#[test]
fn serre_duality() {
    for t in full_suite() {
        assert!(check_serre_duality(&hodge_diamond(&t)).passed(), "{}", label(&t));
    }
}

#[test]
fn three_routes_to_h2() {
    for t in full_suite() {
        let r = h2_routes(&t);
        assert!(r.agree(), "{}: {r:?}", label(&t));
    }
}

#[test]
fn euler_characteristic() {
    for t in full_suite() {
        let b = betti(&homology_table(&t));
        let alternating = b[0] as i64 - b[1] as i64 + b[2] as i64 - b[3] as i64 + b[4] as i64;
        let k: usize = t.k_values().iter().sum();
        assert_eq!(alternating, 2 + t.genus() as i64 - k as i64, "{}", label(&t));
    }
}

#[test]
fn forms_are_unimodular() {
    for t in full_suite() {
        let f = intersection_form(&t).unwrap();
        assert_eq!(f.rank(), homology_table(&t)[2].rank, "{}", label(&t));
        assert!(f.unimodular, "{}: det {}", label(&t), f.determinant);
        assert_eq!(f.signature.0 + f.signature.1, f.rank());
        assert_eq!(f.gram, f.gram.transpose());
    }
}

#[test]
fn h3_h1_is_perfect() {
    for t in full_suite() {
        let m = h3_h1_matrix(&t);
        let b1 = homology_table(&t)[1].rank;
        assert_eq!((m.rows(), m.cols()), (b1, b1), "{}", label(&t));
        if b1 > 0 {
            assert_eq!(m.determinant().magnitude(), BigInt::from(1).magnitude(), "{}", label(&t));
        }
    }
}

#[test]
fn spin_count_law_and_parity() {
    for t in full_suite() {
        let spins = enumerate_spin(t.diagram()).unwrap();
        let n = spins.len() as u128;
        assert!(n == 0 || n == spin_torsor_size(&t), "{}: {n}", label(&t));
        if n > 0 {
            assert_eq!(intersection_form(&t).unwrap().parity, Parity::Even, "{}", label(&t));
        }
    }
}
