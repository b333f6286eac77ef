use std::collections::BTreeMap;

use minrep::config::{CommandKind, RunConfig};
use minrep::suites::{classifier_report, helicity_oracle};
use minrep::trials::{random_matrix, trial_rng};
use minrep_core::bilocal::verify_commutator_formula;
use minrep_core::fockspace::helicity_spectrum;
use proptest::prelude::*;

#[test]
fn classifier_recognizes_division_rings() {
    let r = classifier_report();
    assert!(r.all_ok(), "{:?}", r.failures().collect::<Vec<_>>());
}

#[test]
fn helicity_oracle_small_levels() {
    assert_eq!(helicity_oracle(0), BTreeMap::from([(0, 1)]));
    assert_eq!(helicity_oracle(2), BTreeMap::from([(-2, 3), (0, 4), (2, 3)]));
}

#[test]
fn closure_rejects_oversized_spaces() {
    let cfg = RunConfig { command: Some(CommandKind::Closure), cap: 10, ..Default::default() };
    assert!(matches!(minrep::run(&cfg), Err(minrep::RunError::Usage(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn helicity_oracle_matches_fock_count(level in 0u32..=5) {
        prop_assert_eq!(helicity_spectrum(level).unwrap(), helicity_oracle(level));
    }

    #[test]
    fn seeded_pairs_satisfy_formula(seed in any::<u64>(), l in 1usize..=3) {
        let mut rng = trial_rng(seed, 0);
        let (m, mp) = (random_matrix(&mut rng, l), random_matrix(&mut rng, l));
        let r = verify_commutator_formula(&m, &mp).unwrap();
        prop_assert!(r.all_ok());
    }
}
