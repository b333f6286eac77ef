use minrep_core::rootsys::{Family, Reductive, RootSystem};
use proptest::prelude::*;

/// Dimension of the simple algebra by the classical formulas.
fn dim_formula(f: Family, r: usize) -> usize {
    match f {
        Family::A => (r + 1) * (r + 1) - 1,
        Family::B | Family::C => r * (2 * r + 1),
        Family::D => r * (2 * r - 1),
        _ => unreachable!(),
    }
}

fn classical() -> impl Strategy<Value = (Family, usize)> {
    prop_oneof![
        (1usize..=8).prop_map(|r| (Family::A, r)),
        (2usize..=7).prop_map(|r| (Family::B, r)),
        (2usize..=7).prop_map(|r| (Family::C, r)),
        (4usize..=7).prop_map(|r| (Family::D, r)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn root_counts_and_grading((f, r) in classical()) {
        let rs = RootSystem::build(f, r).unwrap();
        prop_assert_eq!(rs.num_roots(), dim_formula(f, r) - r);
        prop_assert_eq!(rs.dim(), dim_formula(f, r));
        for root in rs.roots() {
            let neg: Vec<i64> = root.iter().map(|x| -x).collect();
            prop_assert!(rs.is_root(&neg));
        }
        let g = rs.grade_by_highest_root();
        prop_assert!(g.is_symmetric());
        prop_assert_eq!(g.total(), rs.dim());
        prop_assert_eq!(g.dim(2), 1);
    }

    #[test]
    fn dimension_identity((f, r) in classical()) {
        let m = RootSystem::build(f, r).unwrap().minimal_orbit_report().unwrap();
        prop_assert!(m.dimension_identity_holds());
        prop_assert_eq!(m.dim_g, m.dim_h + 2 * m.dim_g1 + 3);
        prop_assert_eq!(m.min_orbit_dim, 2 * m.gk_dim);
        prop_assert_eq!(2 * (m.gk_dim - 1), m.dim_g1);
    }
}

#[test]
fn b4_centralizer_is_b2_plus_sl2() {
    let m = RootSystem::build(Family::B, 4).unwrap().minimal_orbit_report().unwrap();
    assert_eq!(m.centralizer_label, "B2+A1");
    assert!(m.centralizer.isomorphic(&Reductive::from_labels(&[(Family::B, 2), (Family::A, 1)], 0)));
}

#[test]
fn exceptional_dimensions() {
    for (f, dim) in [(Family::E6, 78), (Family::E7, 133), (Family::E8, 248), (Family::F4, 52), (Family::G2, 14)] {
        let rs = RootSystem::build(f, f.fixed_rank().unwrap()).unwrap();
        assert_eq!(rs.dim(), dim);
    }
}
