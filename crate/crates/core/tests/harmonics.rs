use minrep_core::field::{q, qi64, Qi, Q};
use minrep_core::harmonics::*;
use minrep_core::linalg::Matrix;
use minrep_core::poly::monomials_of_degree;
use proptest::prelude::*;

#[test]
fn all_modes_up_to_six() {
    for n in 1..=6u32 {
        for l in 0..n {
            for m in -(l as i32)..=(l as i32) {
                let h = build_harmonic(n, l, m).unwrap();
                assert!(h.poly.is_homogeneous(n - 1));
                let r = verify_mode(&h.poly, n, l, m);
                assert!(r.all_ok(), "({},{},{}) {:?}", n, l, m, r.failures().collect::<Vec<_>>());
                assert_eq!(h.poly.leading().unwrap().1, &Qi::int(1));
            }
        }
    }
}

#[test]
fn mode_count_is_n_squared() {
    for n in 1..=6u32 {
        let expected = (n * n) as usize;
        assert_eq!(mode_count(n), expected);
        // independent oracle: kernel of the Laplacian on degree n-1
        assert_eq!(harmonic_space_dim(n - 1), expected);
    }
}

#[test]
fn operator_identities() {
    assert!(operator_algebra_check(4).all_ok());
}

#[test]
fn rotation_invariant_quadratic_is_unique() {
    // kernel of (□, L1, L2, L3) on degree-2 polynomials
    let monos = monomials_of_degree(2);
    let mut rows: Vec<Vec<Qi>> = Vec::new();
    let ops: [fn(&QiPoly) -> QiPoly; 4] = [laplacian, |p| angular(1, p), |p| angular(2, p), |p| angular(3, p)];
    for op in ops {
        let images: Vec<QiPoly> = monos.iter().map(|e| op(&QiPoly::monomial(*e, Qi::int(1)))).collect();
        for target in monomials_of_degree(2).into_iter().chain(monomials_of_degree(0)) {
            rows.push(images.iter().map(|p| p.coefficient(&target)).collect());
        }
    }
    let kernel = Matrix::from_rows(rows).kernel();
    assert_eq!(kernel.len(), 1);
    let h = build_harmonic(3, 0, 0).unwrap().poly;
    let built: Vec<Qi> = monos.iter().map(|e| h.coefficient(e)).collect();
    assert_eq!(minrep_core::linalg::span_rank(&[kernel[0].clone(), built]), 1);
}

fn point() -> impl Strategy<Value = [Q; 4]> {
    proptest::array::uniform4((-9i64..=9, 1i64..=5)).prop_map(|v| v.map(|(a, b)| q(a, b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn compactified_square_is_phase(x in point()) {
        prop_assert!(compactify_identity_holds(&x).unwrap());
    }

    #[test]
    fn time_zero_lands_on_sphere(x in point()) {
        let x = [qi64(0), x[1].clone(), x[2].clone(), x[3].clone()];
        let z = compactify(&x).unwrap();
        prop_assert!(z.iter().all(Qi::is_real));
        let s = z.iter().fold(Qi::int(0), |acc, v| acc + v.clone() * v.clone());
        prop_assert_eq!(s, Qi::int(1));
    }
}
