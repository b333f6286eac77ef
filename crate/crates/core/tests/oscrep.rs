use minrep_core::oscrep::*;
use minrep_core::weylalg::{a, ann, b, cre, pair};

#[test]
fn unn_and_so_star_suites() {
    for n in 1..=3 {
        for gens in [unn_generators(n).unwrap(), so_star_generators(n).unwrap()] {
            let r = relations_report(&gens);
            assert!(r.all_ok(), "{} {:?}", gens.label, r.failures().collect::<Vec<_>>());
        }
    }
}

#[test]
fn sp2_commutes_with_so_star() {
    for n in 1..=3 {
        let g = so_star_generators(n).unwrap();
        assert!(check_dual_pair(&so_star_full(&g), &sp2_named(n)).all_ok());
    }
    let hopping = vec![("a1*b1".to_string(), pair(cre(a(1)), ann(b(1))))];
    assert!(!check_dual_pair(&hopping, &sp2_named(1)).all_ok());
}

#[test]
fn charge_commutes_with_unn() {
    let h = vec![("h".to_string(), charge(2))];
    let basis = unn_basis(2);
    assert_eq!(basis.len(), 16);
    assert!(check_dual_pair(&basis, &h).all_ok());
    assert_eq!(named_span_dim(&basis), 16);
}

#[test]
fn cone_relation() {
    let r = nilpotent_cone_check();
    assert!(r.all_ok());
    assert!(nilpotent_cone_defect().is_zero());
    assert!(!nilpotent_cone_corrupted().is_zero());
}

#[test]
fn casimir_of_so_star_is_central() {
    let out = casimir_defect(1).unwrap();
    let central = out.report.checks.iter().filter(|c| c.id.starts_with("[C_so,"));
    assert!(central.clone().count() > 0);
    assert!(central.into_iter().all(|c| c.holds));
    assert!(out.fitted.is_some());
}
