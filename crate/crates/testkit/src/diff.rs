//! Corpora for the engine-versus-oracle comparisons.

use malcev_core::reps::left_rep;
use malcev_core::fixtures;
use malcev_core::{BilinearForm, Bimodule, LinearMap, LinearRep, StructureTable, TwoTensor};
use rand_chacha::ChaCha8Rng;
use rand::Rng;

pub use malcev_core::differential::*;

use crate::*;

fn dim(rng: &mut ChaCha8Rng) -> usize {
    rng.gen_range(1..=4)
}

fn malcev_like(rng: &mut ChaCha8Rng, case: usize) -> StructureTable {
    match case % 5 {
        0 => transport(&fixtures::example2_1(), &unimodular(rng, 4)),
        1 => transport(&fixtures::sl2(), &unimodular(rng, 3)),
        _ => {
            let n = dim(rng);
            anticommutative(rng, n, 0.35)
        }
    }
}

fn pre_malcev_like(rng: &mut ChaCha8Rng, case: usize) -> StructureTable {
    if case % 5 == 0 {
        transport(&fixtures::example4_1(), &unimodular(rng, 4))
    } else {
        let n = dim(rng);
        general(rng, n, 0.3)
    }
}

fn some_rep(rng: &mut ChaCha8Rng, case: usize) -> LinearRep {
    match case % 5 {
        0 => LinearRep::coadjoint(&malcev_like(rng, 0)).unwrap(),
        1 => fixtures::sl2_v(),
        2 => LinearRep::adjoint(&malcev_like(rng, 1)).unwrap(),
        _ => {
            let a = malcev_like(rng, 2);
            let m = dim(rng);
            let basis = malcev_core::algebra::default_basis("v", m);
            let action = (0..a.dim()).map(|_| sparse_matrix(rng, m, m, 0.4)).collect();
            LinearRep::new(a, basis, action).unwrap()
        }
    }
}

fn some_bimodule(rng: &mut ChaCha8Rng, case: usize) -> Bimodule {
    match case % 5 {
        0 => Bimodule::regular(&pre_malcev_like(rng, 0)).dual(),
        1 => Bimodule::left_only(&pre_malcev_like(rng, 0)),
        2 => Bimodule::regular(&pre_malcev_like(rng, 1)),
        _ => {
            let a = pre_malcev_like(rng, 1);
            let m = dim(rng);
            let basis = malcev_core::algebra::default_basis("v", m);
            let left = (0..a.dim()).map(|_| sparse_matrix(rng, m, m, 0.4)).collect();
            let right = (0..a.dim()).map(|_| sparse_matrix(rng, m, m, 0.4)).collect();
            Bimodule::new(a, basis, left, right).unwrap()
        }
    }
}

fn some_tensor(rng: &mut ChaCha8Rng, a: StructureTable) -> TwoTensor {
    let n = a.dim();
    let coeffs = match rng.gen_range(0..3) {
        0 => skew_matrix(rng, n, 0.5),
        1 => symmetric_matrix(rng, n, 0.5),
        _ => sparse_matrix(rng, n, n, 0.5),
    };
    TwoTensor::new(a, coeffs).unwrap()
}

fn some_form(rng: &mut ChaCha8Rng, a: StructureTable) -> BilinearForm {
    let n = a.dim();
    let m = if rng.gen_bool(0.5) { skew_matrix(rng, n, 0.6) } else { sparse_matrix(rng, n, n, 0.6) };
    BilinearForm::new(a, m).unwrap()
}

/// Runs `kind` on `count` random inputs seeded by `seed`.
pub fn random(kind: &str, seed: u64, count: usize) -> Result<(), String> {
    let mut rng = rng(seed);
    for case in 0..count {
        let r = &mut rng;
        let outcome = match kind {
            "anticommutativity" => {
                let a = if case % 2 == 0 { malcev_like(r, case) } else { pre_malcev_like(r, case) };
                anticommutativity(&a)
            }
            "malcev" => malcev(&malcev_like(r, case)),
            "sagle" => sagle(&malcev_like(r, case)),
            "jacobi" => jacobi(&malcev_like(r, case)),
            "pre-malcev" => pre_malcev(&pre_malcev_like(r, case)),
            "representation" => representation(&some_rep(r, case)),
            "bimodule" => bimodule(&some_bimodule(r, case)),
            "o-operator" => {
                let rep = some_rep(r, case);
                let t = LinearMap::new(sparse_matrix(r, rep.algebra.dim(), rep.space_dim(), 0.4));
                o_operator(&t, &rep)
            }
            "pm-o-operator" => {
                let b = some_bimodule(r, case);
                let t = LinearMap::new(sparse_matrix(r, b.algebra.dim(), b.space_dim(), 0.4));
                pm_o_operator(&t, &b)
            }
            "cybe" => {
                let a = malcev_like(r, case);
                cybe(&some_tensor(r, a))
            }
            "pm-cybe" => {
                let a = pre_malcev_like(r, case);
                pm_cybe(&some_tensor(r, a))
            }
            "invariance" => {
                let a = malcev_like(r, case);
                invariance(&some_form(r, a))
            }
            "cyclic" => {
                let a = malcev_like(r, case);
                cyclic(&some_form(r, a))
            }
            other => panic!("unknown kind {other}"),
        };
        outcome.map_err(|e| format!("random case {case}: {e}"))?;
    }
    Ok(())
}

/// Runs `kind` on every fixture it applies to.
pub fn on_fixtures(kind: &str) -> Result<(), String> {
    let algebras = [fixtures::example2_1(), fixtures::sl2(), fixtures::example3_6()];
    let pm = fixtures::example4_1();
    let coad = LinearRep::coadjoint(&fixtures::example2_1()).unwrap();
    let pm_bimodules = [Bimodule::regular(&pm), Bimodule::regular(&pm).dual(), Bimodule::left_only(&pm)];
    let maps = [
        (fixtures::eq3_8(), coad.clone()),
        (fixtures::example2_5_f1(), coad.clone()),
        (fixtures::example2_5_f2(), coad.clone()),
        (fixtures::example2_5_f3(), coad.clone()),
        (fixtures::example2_6_t1(), fixtures::sl2_v()),
        (fixtures::example2_6_t2(), fixtures::sl2_v()),
        (LinearMap::identity(4), left_rep(&pm)),
    ];
    let forms = [fixtures::sl2_killing(), fixtures::example3_5_form(), fixtures::example3_5_form_c1()];
    match kind {
        "anticommutativity" => algebras.iter().chain([&pm]).try_for_each(anticommutativity),
        "malcev" => algebras.iter().try_for_each(malcev),
        "sagle" => algebras.iter().try_for_each(sagle),
        "jacobi" => algebras.iter().try_for_each(jacobi),
        "pre-malcev" => [pm.clone(), pm.as_general(), fixtures::example2_1().as_general()].iter().try_for_each(pre_malcev),
        "representation" => [
            fixtures::sl2_v(),
            coad.clone(),
            LinearRep::adjoint(&fixtures::example2_1()).unwrap(),
            left_rep(&pm),
            left_rep(&pm).dual(),
        ]
        .iter()
        .try_for_each(representation),
        "bimodule" => pm_bimodules.iter().try_for_each(bimodule),
        "o-operator" => maps.iter().try_for_each(|(t, r)| o_operator(t, r)),
        "pm-o-operator" => {
            let id = LinearMap::identity(4);
            pm_bimodules.iter().try_for_each(|b| pm_o_operator(&id, b))
        }
        "cybe" => {
            let rt = malcev_core::ybe::build_r_t(&fixtures::eq3_8(), &coad).unwrap();
            let canon = malcev_core::ybe::canonical_r(&pm).unwrap();
            [fixtures::example3_5_r(), rt, canon].iter().try_for_each(cybe)
        }
        "pm-cybe" => {
            let canon = malcev_core::ybe::canonical_s(&pm).unwrap();
            let sym = TwoTensor::new(pm.clone(), fixtures::example3_5_r().coeffs).unwrap();
            [canon, sym].iter().try_for_each(pm_cybe)
        }
        "invariance" => forms.iter().try_for_each(invariance),
        "cyclic" => forms.iter().try_for_each(cyclic),
        other => panic!("unknown kind {other}"),
    }
}
