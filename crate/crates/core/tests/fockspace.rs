use std::collections::BTreeMap;

use minrep_core::bilocal::DivisionAlgebra;
use minrep_core::field::{qi64, Qi};
use minrep_core::fockspace::*;
use minrep_core::oscrep::{so_star_generators, sp2_generator_set, su22_generators};
use minrep_core::weylalg::{ModeId, WeylElement};
use proptest::prelude::*;

fn so8_fock(level: u32) -> TruncatedFock {
    let modes: Vec<ModeId> = (1..=4).map(ModeId::A).chain((1..=4).map(ModeId::B)).collect();
    TruncatedFock::new(modes, level)
}

#[test]
fn so8_levels_pair_with_gauge_irreps() {
    let g = so_star_generators(2).unwrap();
    let s = sp2_generator_set(2);
    let t = joint_weight_decomposition(&g, &s, &so8_fock(3), 3).unwrap();
    assert!(t.bookkeeping_holds());
    assert!(t.one_to_one());
    for level in 0..=3u32 {
        let rows: Vec<_> = t.rows_at(level).collect();
        assert_eq!(rows.len(), 1, "level {}", level);
        // one isospin-l/2 multiplet of lowest-weight vectors
        assert_eq!(rows[0].gauge_dim, level as usize + 1);
        assert_eq!(rows[0].multiplicity, 1);
        assert_eq!(t.lowest_weight_dims[&level], level as usize + 1);
        assert_eq!(rows[0].weight[..3], [0, 0, -(level as i64)]);
    }
}

#[test]
fn level_one_doublet() {
    let g = so_star_generators(2).unwrap();
    let f = so8_fock(2);
    let a4 = f.basis_vector(f.state_of(&[(ModeId::A(4), 1)]).unwrap());
    let b4 = f.basis_vector(f.state_of(&[(ModeId::B(4), 1)]).unwrap());
    for fi in &g.f {
        let m = operator_matrix(fi, &f).unwrap();
        assert!(m.apply(&a4).iter().all(|x| *x == Qi::int(0)));
        assert!(m.apply(&b4).iter().all(|x| *x == Qi::int(0)));
    }
    let e = operator_matrix(&sp2_generator_set(2).e[0], &f).unwrap();
    for j in 1..=4 {
        let bj = f.basis_vector(f.state_of(&[(ModeId::B(j), 1)]).unwrap());
        let aj = f.basis_vector(f.state_of(&[(ModeId::A(j), 1)]).unwrap());
        assert_eq!(e.apply(&bj), aj);
    }
}

#[test]
fn helicity_histograms() {
    assert_eq!(helicity_spectrum(0).unwrap(), BTreeMap::from([(0, 1)]));
    assert_eq!(helicity_spectrum(1).unwrap(), BTreeMap::from([(-1, 2), (1, 2)]));
    assert_eq!(helicity_spectrum(2).unwrap(), BTreeMap::from([(-2, 3), (0, 4), (2, 3)]));
}

#[test]
fn closure_over_division_rings() {
    for (f, k, n, cc) in [(DivisionAlgebra::R, 2, 1, 1), (DivisionAlgebra::R, 1, 2, 2), (DivisionAlgebra::C, 1, 2, 2), (DivisionAlgebra::H, 1, 1, 1)]
    {
        let o = truncated_closure_check(f, k, n, 2);
        assert!(o.report.all_ok(), "{} {:?}", f, o.report.failures().collect::<Vec<_>>());
        assert_eq!(o.central_charge, Some(qi64(cc)));
        assert_eq!(o.gauge_dim, f.gauge_dim(n as usize));
    }
}

#[test]
fn cap_rejects_large_spaces() {
    let modes: Vec<ModeId> = (1..=16).map(ModeId::C).collect();
    assert!(matches!(TruncatedFock::with_cap(modes, 10, 200_000), Err(FockError::TooLarge { .. })));
}

fn su22_element() -> impl Strategy<Value = WeylElement> {
    let g = su22_generators();
    let pool: Vec<WeylElement> = g.e.iter().chain(&g.f).chain(&g.h).cloned().collect();
    proptest::collection::vec((0..pool.len(), -2i64..=2), 1..3).prop_map(move |picks| picks.iter().map(|&(i, c)| pool[i].scale(&Qi::int(c))).sum())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn operator_matrices_are_homomorphic(x in su22_element(), y in su22_element()) {
        let modes = vec![ModeId::A(1), ModeId::A(2), ModeId::B(1), ModeId::B(2)];
        let f = TruncatedFock::new(modes, 4);
        prop_assert_eq!(homomorphism_defect(&x, &y, &f).unwrap(), None);
        prop_assert!(adjoint_defect(&x, &f).unwrap());
    }
}
