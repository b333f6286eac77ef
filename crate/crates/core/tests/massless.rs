use minrep_core::field::{qi64, Conjugate, Qi, QiS};
use minrep_core::massless::*;
use minrep_core::poly::Poly;
use minrep_core::weylalg::{Ladder, ModeId};
use proptest::prelude::*;

#[test]
fn ccr_to_degree_six() {
    let r = realize_schrodinger(6).ccr_report();
    assert!(r.all_ok(), "{:?}", r.failures().collect::<Vec<_>>());
    assert_eq!(r.checks.len(), 28);
}

#[test]
fn su22_is_realized_homomorphically() {
    let r = realize_schrodinger(4).functoriality_report();
    assert!(r.all_ok(), "{:?}", r.failures().collect::<Vec<_>>());
}

#[test]
fn vacuum_and_momentum() {
    assert!(vacuum_checks().all_ok());
    assert!(lightlike_identity().all_ok());
    let p = momentum();
    let p3 = Poly::var(0).mul(&Poly::var(2)).sub(&Poly::var(1).mul(&Poly::var(3)));
    assert_eq!(p[3], p3);
}

fn small_state() -> impl Strategy<Value = GaussianPolyState> {
    proptest::collection::vec((proptest::array::uniform4(0u32..=2), -2i64..=2, -2i64..=2), 1..4).prop_map(|terms| {
        let mut poly = Poly::zero();
        for (e, re, im) in terms {
            poly.add_term(e, QiS::from(Qi::new(qi64(re), qi64(im))));
        }
        GaussianPolyState { poly }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn creation_is_adjoint_to_annihilation(u in small_state(), v in small_state(), k in 0usize..4) {
        let mode = [ModeId::A(1), ModeId::A(2), ModeId::B(1), ModeId::B(2)][k];
        let real = realize_schrodinger(6);
        let lhs = inner_product(&real.apply_ladder(Ladder::cre(mode), &u).unwrap(), &v);
        let rhs = inner_product(&u, &real.apply_ladder(Ladder::ann(mode), &v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn momentum_is_null_at_points(x in proptest::array::uniform2((-5i64..=5, -5i64..=5))) {
        let z: Vec<Qi> = x.iter().map(|&(a, b)| Qi::new(qi64(a), qi64(b))).collect();
        let pt = [z[0].clone(), z[1].clone(), z[0].conj(), z[1].conj()];
        let p: Vec<Qi> = momentum().iter().map(|m| m.eval(&pt)).collect();
        prop_assert!(p.iter().all(Qi::is_real));
        let sq = p[0].clone() * p[0].clone() - p[1].clone() * p[1].clone() - p[2].clone() * p[2].clone() - p[3].clone() * p[3].clone();
        prop_assert_eq!(sq, Qi::int(0));
    }
}
