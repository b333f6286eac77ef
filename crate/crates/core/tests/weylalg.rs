use minrep_core::field::Qi;
use minrep_core::weylalg::{Ladder, ModeId, WeylElement};
use proptest::prelude::*;

fn ladder() -> impl Strategy<Value = Ladder> {
    (0usize..3, any::<bool>()).prop_map(|(m, d)| {
        let mode = [ModeId::A(1), ModeId::A(2), ModeId::B(1)][m];
        if d {
            Ladder::cre(mode)
        } else {
            Ladder::ann(mode)
        }
    })
}

/// Sums of words of length <= 3 with small complex coefficients.
fn element() -> impl Strategy<Value = WeylElement> {
    proptest::collection::vec((proptest::collection::vec(ladder(), 0..=3), -3i64..=3, -2i64..=2), 1..4)
        .prop_map(|terms| terms.into_iter().map(|(w, re, im)| WeylElement::word(&w).scale(&(Qi::int(re) + Qi::i() * Qi::int(im)))).sum())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jacobi(x in element(), y in element(), z in element()) {
        let j = x.commutator(&y.commutator(&z)) + y.commutator(&z.commutator(&x)) + z.commutator(&x.commutator(&y));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn product_is_associative(x in element(), y in element(), z in element()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn adjoint_reverses_products(x in element(), y in element()) {
        prop_assert_eq!(x.mul(&y).adjoint(), y.adjoint().mul(&x.adjoint()));
        prop_assert_eq!(x.adjoint().adjoint(), x);
    }

    #[test]
    fn words_reorder_by_ccr(l in ladder()) {
        // c c* - c* c = 1 for the chosen mode
        let (c, cs) = (Ladder::ann(l.mode), Ladder::cre(l.mode));
        let d = WeylElement::word(&[c, cs]) - WeylElement::word(&[cs, c]);
        prop_assert_eq!(d, WeylElement::one());
    }
}
