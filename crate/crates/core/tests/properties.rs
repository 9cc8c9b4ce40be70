use std::collections::BTreeMap;

use malcev_testkit::*;
use malcev_core::reps::left_rep;
use malcev_core::scalar::LaurentPoly;
use malcev_core::ybe::{build_r_t, build_s_t, check_o_operator, o_residual, pre_malcev_from_t};
use malcev_core::{fixtures, parse_scalar, Bimodule, LinearMap, LinearRep, Matrix, Rational, Ring, Scalar, TwoTensor};
use proptest::prelude::*;
use rand::Rng;

fn ab() -> Ring {
    Ring::new(["a", "b"]).unwrap()
}

fn laurent() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-2i32..=2, -2i32..=2, -3i64..=3, 1i64..=3), 0..5).prop_map(|terms| {
        let ring = ab();
        let poly = LaurentPoly::from_terms(
            ring,
            terms.into_iter().map(|(x, y, n, d)| (vec![x, y], Rational::new(n.into(), d.into()))),
        );
        Scalar::from_poly(poly)
    })
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (prop_oneof![-5i64..=-1, 1i64..=5], 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(x in laurent(), y in laurent(), z in laurent()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x * &Scalar::one(), x.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(x in laurent(), y in laurent(), a in nonzero_rational(), b in nonzero_rational()) {
        let at = BTreeMap::from([("a".to_string(), a), ("b".to_string(), b)]);
        let (ex, ey) = (x.eval(&at).unwrap(), y.eval(&at).unwrap());
        prop_assert_eq!((&x + &y).eval(&at).unwrap(), &ex + &ey);
        prop_assert_eq!((&x * &y).eval(&at).unwrap(), &ex * &ey);
    }

    #[test]
    fn render_parse_round_trip(x in laurent()) {
        let text = x.to_string();
        let back = parse_scalar(&text, &ab()).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, x);
    }

    #[test]
    fn units_invert(c in nonzero_rational(), i in -3i32..=3, j in -3i32..=3) {
        let m = Scalar::from_poly(LaurentPoly::monomial(ab(), vec![i, j], c));
        prop_assert!(m.is_unit());
        prop_assert!((&m * &m.invert().unwrap()).is_one());
    }
}

#[test]
fn malcev_iff_sagle() {
    let mut rng = rng(100);
    let mut positives = 0;
    for case in 0..60 {
        let a = match case % 4 {
            0 => transport(&fixtures::example2_1(), &unimodular(&mut rng, 4)),
            1 => transport(&fixtures::sl2(), &unimodular(&mut rng, 3)),
            _ => {
                let n = rng.gen_range(2..=4);
                anticommutative(&mut rng, n, 0.25)
            }
        };
        let m = a.check_malcev().unwrap().holds();
        assert_eq!(m, a.check_sagle().unwrap().holds(), "{:?}", a.render_products());
        positives += m as usize;
    }
    assert!(positives >= 30);
}

#[test]
fn jacobi_implies_malcev() {
    let mut rng = rng(101);
    let mut lie = 0;
    for _ in 0..80 {
        let n = rng.gen_range(2..=4);
        let a = anticommutative(&mut rng, n, 0.15);
        if a.check_jacobi().unwrap().holds() {
            lie += 1;
            assert!(a.check_malcev().unwrap().holds());
        }
    }
    assert!(lie > 0);
    let a = fixtures::example2_1();
    assert!(a.check_malcev().unwrap().holds() && !a.check_jacobi().unwrap().holds());
}

#[test]
fn malcev_identity_is_homogeneous() {
    let a = rescale(&fixtures::example2_1(), -3);
    assert!(a.check_malcev().unwrap().holds());
    assert!(!a.check_jacobi().unwrap().holds());
}

#[test]
fn representation_iff_semidirect_malcev() {
    let mut rng = rng(102);
    let bases = [fixtures::example2_1(), fixtures::sl2()];
    let mut positives = vec![
        fixtures::sl2_v(),
        LinearRep::adjoint(&bases[0]).unwrap(),
        LinearRep::coadjoint(&bases[0]).unwrap(),
        LinearRep::coadjoint(&bases[1]).unwrap(),
        LinearRep::zero(&bases[0], vec!["u".into()]).unwrap(),
    ];
    for p in positives.iter() {
        assert!(p.check().holds());
    }
    for case in 0..30 {
        let a = bases[case % 2].clone();
        let m = rng.gen_range(1..=3);
        let action = (0..a.dim()).map(|_| sparse_matrix(&mut rng, m, m, 0.3)).collect();
        positives.push(LinearRep::new(a, malcev_core::algebra::default_basis("v", m), action).unwrap());
    }
    for r in &positives {
        assert_eq!(r.check().holds(), r.semidirect().check_malcev().unwrap().holds());
    }
}

#[test]
fn bimodule_iff_semidirect_pre_malcev() {
    let mut rng = rng(103);
    let pm = fixtures::example4_1();
    let mut cases = vec![Bimodule::regular(&pm), Bimodule::regular(&pm).dual(), Bimodule::left_only(&pm)];
    for b in &cases {
        assert!(b.check().holds());
    }
    for _ in 0..25 {
        let m = rng.gen_range(1..=2);
        let left = (0..4).map(|_| sparse_matrix(&mut rng, m, m, 0.2)).collect();
        let right = (0..4).map(|_| sparse_matrix(&mut rng, m, m, 0.2)).collect();
        cases.push(Bimodule::new(pm.clone(), malcev_core::algebra::default_basis("v", m), left, right).unwrap());
    }
    for b in &cases {
        assert_eq!(b.check().holds(), b.semidirect().check_pre_malcev().holds());
    }
}

#[test]
fn duals_are_involutions() {
    let mut rng = rng(104);
    for _ in 0..10 {
        let a = anticommutative(&mut rng, 3, 0.4);
        let r = LinearRep::new(a.clone(), vec!["u".into(), "w".into()], (0..3).map(|_| matrix(&mut rng, 2, 2)).collect())
            .unwrap();
        assert_eq!(r.dual().dual(), r);
        let g = general(&mut rng, 3, 0.4);
        let b = Bimodule::new(
            g,
            vec!["u".into(), "w".into()],
            (0..3).map(|_| matrix(&mut rng, 2, 2)).collect(),
            (0..3).map(|_| matrix(&mut rng, 2, 2)).collect(),
        )
        .unwrap();
        assert_eq!(b.dual().dual(), b);
    }
}

/// `ρ2(x) = φ^{-1} ρ1(x) φ`, isomorphic to `r1` through `φ: V2 → V1`.
fn conjugate(r1: &LinearRep, phi: &Matrix) -> LinearRep {
    let inv = phi.inverse().unwrap();
    let action = r1.action.iter().map(|m| &(&inv * m) * phi).collect();
    let names = malcev_core::algebra::default_basis("w", r1.space_dim());
    LinearRep::new(r1.algebra.clone(), names, action).unwrap()
}

#[test]
fn o_operators_transport_along_isomorphisms() {
    let mut rng = rng(105);
    let coad = LinearRep::coadjoint(&fixtures::example2_1()).unwrap();
    let t = fixtures::eq3_8();
    assert!(check_o_operator(&t, &coad).unwrap().holds());
    for _ in 0..10 {
        let phi = LinearMap::new(invertible(&mut rng, 4));
        let r2 = conjugate(&coad, &phi.matrix);
        assert!(LinearRep::check_iso(&phi, &coad, &r2).unwrap().holds());
        let composed = t.compose(&phi).unwrap();
        assert!(check_o_operator(&composed, &r2).unwrap().holds());
        let pm = pre_malcev_from_t(&composed, &r2).unwrap();
        assert!(pm.check_pre_malcev().holds());
        assert_eq!(pm.commutator_algebra(), fixtures::example2_1());
    }
}

#[test]
fn killing_form_gives_coadjoint_isomorphism() {
    let k = fixtures::sl2_killing();
    assert!(k.check_invariant().holds());
    let ad = LinearRep::adjoint(&k.algebra).unwrap();
    let coad = LinearRep::coadjoint(&k.algebra).unwrap();
    assert!(LinearRep::check_iso(&k.phi(), &coad, &ad).unwrap().holds());
}

#[test]
fn skew_tensor_iff_skew_map() {
    let mut rng = rng(106);
    let a = fixtures::example2_1();
    for case in 0..40 {
        let m = if case % 2 == 0 { skew_matrix(&mut rng, 4, 0.5) } else { matrix(&mut rng, 4, 4) };
        let r = TwoTensor::new(a.clone(), m).unwrap();
        assert_eq!(r.is_skew(), r.t_map().matrix.is_skew());
    }
}

#[test]
fn o_residual_is_quadratic() {
    let mut rng = rng(107);
    let rep = fixtures::sl2_v();
    let lambda = Scalar::from_ratio(-3, 2);
    let sq = &lambda * &lambda;
    for _ in 0..20 {
        let t = LinearMap::new(matrix(&mut rng, 3, 2));
        let base = o_residual(&t, &rep).unwrap();
        let scaled = o_residual(&t.scale(&lambda), &rep).unwrap();
        for (b, s) in base.iter().zip(&scaled) {
            assert_eq!(&malcev_core::vector::scale(&sq, b), s);
        }
    }
    assert!(check_o_operator(&LinearMap::zero(3, 2), &rep).unwrap().holds());
}

#[test]
fn built_tensors_have_fixed_symmetry() {
    let mut rng = rng(108);
    let coad = LinearRep::coadjoint(&fixtures::example2_1()).unwrap();
    let b = Bimodule::regular(&fixtures::example4_1());
    for _ in 0..10 {
        let t = LinearMap::new(matrix(&mut rng, 4, 4));
        assert!(build_r_t(&t, &coad).unwrap().is_skew());
        assert!(build_s_t(&t, &b).unwrap().is_symmetric());
    }
}

#[test]
fn left_multiplications_of_pre_malcev_form_a_representation() {
    let pm = fixtures::example4_1();
    let (l, ad) = Bimodule::regular(&pm).induced_reps();
    assert!(l.check().holds());
    assert!(ad.check().holds());
    assert_eq!(left_rep(&pm), l);
}
