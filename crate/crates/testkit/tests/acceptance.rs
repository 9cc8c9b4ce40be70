//! Acceptance criteria 1-10, one PASS/FAIL line each. All comparisons are
//! exact: a residual passes only when every entry is the canonical zero.

use std::collections::BTreeMap;

use malcev_testkit::*;
use malcev_core::reps::left_rep;
use malcev_core::ybe::{
    b_from_r, build_r_t, build_s_t, canonical_r, canonical_s, check_cybe, check_o_operator, check_pm_cybe,
    check_pm_o_operator, cybe_residual, form_operator_check, o_operator_assembly, o_residual, pm_cybe_residual,
    pm_o_operator_assembly, pre_malcev_from_t, FormVariant, Verdict,
};
use malcev_core::{fixtures, oracle, vector};
use malcev_core::{Bimodule, LinearMap, LinearRep, Matrix, Rational, TwoTensor};

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn all_zero(family: &[Vec<malcev_core::Scalar>]) -> bool {
    family.iter().all(|v| vector::is_zero(v))
}

fn criterion_1() -> Outcome {
    let a = fixtures::example2_1();
    ensure(a.check_anticommutative().holds(), "anticommutativity fails")?;
    ensure(a.check_malcev().unwrap().holds(), "Malcev identity fails")?;
    ensure(a.check_sagle().unwrap().holds(), "Sagle identity fails")?;
    let jacobi = a.check_jacobi().unwrap();
    let w = jacobi.witness.ok_or("Jacobi identity unexpectedly holds")?;
    ensure(w.indices == [0, 1, 2], format!("first Jacobi failure at {:?}", w.indices))?;
    ensure(w.residual.to_string() == "-6*e4", format!("Jacobi residual {}", w.residual))?;
    let brute = &oracle::jacobi(&a)[6];
    let rendered = vector::render_combination(brute, a.basis());
    ensure(rendered == "-6*e4", format!("oracle Jacobi residual {rendered}"))?;
    Ok(format!("Jacobi witness {w}; oracle agrees"))
}

fn criterion_2() -> Outcome {
    let coad = LinearRep::coadjoint(&fixtures::example2_1()).unwrap();
    let families = [
        ("family 1 over Q[a,b,c,d]", fixtures::example2_5_f1()),
        ("family 2 over Q[a,b,c,d,e,f]", fixtures::example2_5_f2()),
        ("family 3 over Q[a,b,c,d,k,k^-1]", fixtures::example2_5_f3()),
    ];
    let mut failures = Vec::new();
    for (label, t) in &families {
        let engine = all_zero(&o_residual(t, &coad).unwrap());
        let brute = all_zero(&oracle::o_operator(t, &coad));
        ensure(engine == brute, format!("{label}: engine and oracle disagree"))?;
        if !engine {
            let w = check_o_operator(t, &coad).unwrap().witness.unwrap();
            failures.push(format!("{label} has residual {w}"));
        }
    }
    if failures.is_empty() {
        Ok("all three families vanish identically".into())
    } else {
        Err(failures.join("; "))
    }
}

fn criterion_3() -> Outcome {
    let v = fixtures::sl2_v();
    ensure(v.check().holds(), "V is not a representation")?;
    ensure(fixtures::sl2().check_jacobi().unwrap().holds(), "sl2 fails Jacobi")?;
    for (label, t) in [("T1", fixtures::example2_6_t1()), ("T2", fixtures::example2_6_t2())] {
        ensure(all_zero(&o_residual(&t, &v).unwrap()), format!("{label} is not an O-operator"))?;
        ensure(all_zero(&oracle::o_operator(&t, &v)), format!("oracle: {label} is not an O-operator"))?;
    }
    Ok("T1, T2 vanish over Q[a,b,c]; representation axiom and Jacobi hold".into())
}

fn criterion_4() -> Outcome {
    let form = fixtures::example3_5_form();
    ensure(form.check_skew().holds(), "parametric form is not skew")?;
    ensure(vector::is_zero(&form.cyclic_family()), "cyclic sum does not vanish")?;
    ensure(vector::is_zero(&oracle::cyclic(&form)), "oracle cyclic sum does not vanish")?;
    let generic = match form.check_symplectic().unwrap().verdict() {
        Verdict::Conditional { determinant } => determinant.to_string(),
        other => return Err(format!("parametric verdict {other:?}")),
    };
    let c1 = fixtures::example3_5_form_c1();
    ensure(c1.check_symplectic().unwrap().verdict() == Verdict::Holds, "c = 1 instance is not symplectic")?;
    let r = fixtures::example3_5_r();
    ensure(r.is_skew(), "r is not skew")?;
    ensure(check_cybe(&r).unwrap().holds(), "r does not solve the CYBE")?;
    ensure(vector::is_zero(&oracle::cybe(&r)), "oracle: r does not solve the CYBE")?;
    ensure(b_from_r(&r).unwrap() == c1, "B_r differs from the c = 1 form")?;
    Ok(format!("cyclic sum vanishes, determinant {generic}; c = 1 symplectic, r solves the CYBE, B_r recovers the form"))
}

fn criterion_5() -> Outcome {
    let a = fixtures::example2_1();
    let r = fixtures::example3_5_r();
    ensure(r.t_map() == fixtures::eq3_8(), "T_r differs from the displayed map")?;
    let semidirect = LinearRep::adjoint(&a).unwrap().semidirect();
    ensure(semidirect == fixtures::example3_6(), "A ⋉ ad A differs from the listed table")?;
    let coad = LinearRep::coadjoint(&a).unwrap();
    let rt = build_r_t(&fixtures::eq3_8(), &coad).unwrap();
    let expected = "e1⊗x4 - e2⊗x3 + e3⊗x2 - e4⊗x1 + x1⊗e4 - x2⊗e3 + x3⊗e2 - x4⊗e1";
    ensure(rt.render() == expected, format!("r_T = {}", rt.render()))?;
    ensure(rt.algebra == fixtures::example3_6(), "r_T lives on a different algebra")?;
    ensure(check_cybe(&rt).unwrap().holds(), "r_T does not solve the CYBE")?;
    ensure(vector::is_zero(&oracle::cybe(&rt)), "oracle: r_T does not solve the CYBE")?;
    Ok(format!("r_T = {expected} solves the CYBE"))
}

/// Checks that `lhs` and `rhs` agree on every instance; counts negatives.
struct Suite {
    name: &'static str,
    positives: usize,
    negatives: usize,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            name,
            positives: 0,
            negatives: 0,
        }
    }

    fn record(&mut self, lhs: bool, rhs: bool, instance: &str) -> Result<(), String> {
        ensure(lhs == rhs, format!("{}: predicates disagree on {instance} ({lhs} vs {rhs})", self.name))?;
        if lhs {
            self.positives += 1;
        } else {
            self.negatives += 1;
        }
        Ok(())
    }

    fn finish(&self) -> Result<String, String> {
        ensure(self.positives >= 1, format!("{}: no positive instance", self.name))?;
        ensure(self.negatives >= 20, format!("{}: only {} negatives", self.name, self.negatives))?;
        Ok(format!("{} {}+/{}-", self.name, self.positives, self.negatives))
    }
}

fn instantiate(t: &LinearMap, values: &[(&str, i64)]) -> LinearMap {
    let at: BTreeMap<String, Rational> = values.iter().map(|(k, v)| (k.to_string(), Rational::from_integer((*v).into()))).collect();
    LinearMap::new(Matrix::from_fn(t.target_dim(), t.source_dim(), |i, j| {
        t.matrix.get(i, j).substitute(&at).unwrap()
    }))
}

fn criterion_6() -> Outcome {
    let mut rng = rng(6);
    let a = fixtures::example2_1();
    let coad = LinearRep::coadjoint(&a).unwrap();
    let pm = fixtures::example4_1();
    let mut lines = Vec::new();

    let mut s = Suite::new("skew r: CYBE iff coadjoint O-operator");
    let mut skew = vec![fixtures::example3_5_r()];
    for _ in 0..30 {
        skew.push(TwoTensor::new(a.clone(), skew_matrix(&mut rng, 4, 0.5)).unwrap());
    }
    for (n, r) in skew.iter().enumerate() {
        let lhs = check_cybe(r).unwrap().holds();
        let rhs = check_o_operator(&r.t_map(), &coad).unwrap().holds();
        s.record(lhs, rhs, &format!("instance {n}: {}", r.render()))?;
    }
    lines.push(s.finish()?);

    let mut s = Suite::new("non-degenerate skew r: CYBE iff B_r symplectic");
    let mut nondegenerate: Vec<&TwoTensor> = skew.iter().filter(|r| !r.coeffs.determinant().unwrap().is_zero()).collect();
    let extra: Vec<TwoTensor> = (0..200)
        .map(|_| TwoTensor::new(a.clone(), skew_matrix(&mut rng, 4, 0.7)).unwrap())
        .filter(|r| !r.coeffs.determinant().unwrap().is_zero())
        .take(30)
        .collect();
    nondegenerate.extend(extra.iter());
    for (n, r) in nondegenerate.iter().enumerate() {
        let lhs = check_cybe(r).unwrap().holds();
        let rhs = b_from_r(r).unwrap().check_symplectic().unwrap().verdict() == Verdict::Holds;
        s.record(lhs, rhs, &format!("instance {n}: {}", r.render()))?;
    }
    lines.push(s.finish()?);

    let mut s = Suite::new("CYBE(r_T) iff O-operator");
    let sl2_t = instantiate(&fixtures::example2_6_t1(), &[("a", 1), ("b", -2), ("c", 3)]);
    let mut cases = vec![(fixtures::eq3_8(), coad.clone()), (sl2_t, fixtures::sl2_v())];
    for n in 0..30 {
        let rep = if n % 2 == 0 { coad.clone() } else { fixtures::sl2_v() };
        let t = LinearMap::new(sparse_matrix(&mut rng, rep.algebra.dim(), rep.space_dim(), 0.4));
        cases.push((t, rep));
    }
    for (n, (t, rep)) in cases.iter().enumerate() {
        let lhs = check_cybe(&build_r_t(t, rep).unwrap()).unwrap().holds();
        let rhs = check_o_operator(t, rep).unwrap().holds();
        s.record(lhs, rhs, &format!("instance {n}: T = {}", t.matrix.render()))?;
    }
    lines.push(s.finish()?);

    let mut s = Suite::new("symmetric r: pre-Malcev CYBE iff (L*-R*, -R*) O-operator");
    let mut sym = vec![canonical_s(&pm).unwrap()];
    for _ in 0..30 {
        sym.push(TwoTensor::new(pm.clone(), symmetric_matrix(&mut rng, 4, 0.4)).unwrap());
    }
    for (n, r) in sym.iter().enumerate() {
        let lhs = check_pm_cybe(r).holds();
        let rhs = check_pm_o_operator(&r.t_map(), &Bimodule::regular(&r.algebra).dual()).unwrap().holds();
        s.record(lhs, rhs, &format!("instance {n}: {}", r.render()))?;
    }
    lines.push(s.finish()?);

    let mut s = Suite::new("pre-Malcev CYBE(s_T) iff pre-Malcev O-operator");
    let bimodules = [Bimodule::left_only(&pm), Bimodule::regular(&pm), Bimodule::regular(&pm).dual()];
    let mut cases = vec![(LinearMap::identity(4), bimodules[0].clone())];
    for n in 0..30 {
        let t = LinearMap::new(sparse_matrix(&mut rng, 4, 4, 0.3));
        cases.push((t, bimodules[n % 3].clone()));
    }
    for (n, (t, b)) in cases.iter().enumerate() {
        let lhs = check_pm_cybe(&build_s_t(t, b).unwrap()).holds();
        let rhs = check_pm_o_operator(t, b).unwrap().holds();
        s.record(lhs, rhs, &format!("instance {n}: T = {}", t.matrix.render()))?;
    }
    lines.push(s.finish()?);

    Ok(lines.join("; "))
}

fn criterion_7() -> Outcome {
    let mut rng = rng(7);
    let reps = [LinearRep::coadjoint(&fixtures::example2_1()).unwrap(), fixtures::sl2_v()];
    let pm = fixtures::example4_1();
    let bimodules = [Bimodule::regular(&pm), Bimodule::regular(&pm).dual(), Bimodule::left_only(&pm)];
    for n in 0..50 {
        let rep = &reps[n % 2];
        let t = LinearMap::new(matrix(&mut rng, rep.algebra.dim(), rep.space_dim()));
        let generic = cybe_residual(&build_r_t(&t, rep).unwrap()).unwrap();
        ensure(generic == o_operator_assembly(&t, rep).unwrap(), format!("r_T expansion differs for T = {}", t.matrix.render()))?;

        let b = &bimodules[n % 3];
        let t = LinearMap::new(matrix(&mut rng, 4, 4));
        let generic = pm_cybe_residual(&build_s_t(&t, b).unwrap());
        ensure(generic == pm_o_operator_assembly(&t, b).unwrap(), format!("s_T expansion differs for T = {}", t.matrix.render()))?;
    }
    Ok("50 random maps: both expansions entry-exact".into())
}

fn criterion_8() -> Outcome {
    let a = fixtures::example2_1();
    let coad = LinearRep::coadjoint(&a).unwrap();
    let from_t = pre_malcev_from_t(&fixtures::eq3_8(), &coad).map_err(|e| e.to_string())?;
    ensure(from_t.check_pre_malcev().holds(), "table from T fails the pre-Malcev identity")?;
    ensure(all_zero(&oracle::pre_malcev(&from_t)), "oracle: table from T fails the pre-Malcev identity")?;
    ensure(from_t.commutator_algebra() == a, "commutator of the table from T differs from A")?;

    let pm = fixtures::example4_1();
    ensure(pm.check_pre_malcev().holds(), "the compatible table fails the pre-Malcev identity")?;
    ensure(pm.commutator_algebra() == a, "commutator of the compatible table differs from A")?;
    let recovered = pre_malcev_from_t(&LinearMap::identity(4), &left_rep(&pm)).map_err(|e| e.to_string())?;
    ensure(recovered == pm, "identity map does not recover the compatible table")?;

    for (label, table) in [("table from T", &from_t), ("compatible table", &pm)] {
        let r = canonical_r(table).map_err(|e| e.to_string())?;
        ensure(r.algebra.check_malcev().unwrap().holds(), format!("{label}: 8-dim algebra is not Malcev"))?;
        ensure(check_cybe(&r).unwrap().holds(), format!("{label}: canonical r fails the CYBE"))?;
        ensure(vector::is_zero(&oracle::cybe(&r)), format!("oracle: {label}: canonical r fails the CYBE"))?;
        let s = canonical_s(table).map_err(|e| e.to_string())?;
        ensure(s.algebra.check_pre_malcev().holds(), format!("{label}: 8-dim algebra is not pre-Malcev"))?;
        ensure(check_pm_cybe(&s).holds(), format!("{label}: canonical s fails the pre-Malcev CYBE"))?;
        ensure(vector::is_zero(&oracle::pm_cybe(&s)), format!("oracle: {label}: canonical s fails"))?;
    }
    Ok(format!("table from T: {}", from_t.render_products().join(", ")))
}

fn criterion_9() -> Outcome {
    let mut rng = rng(9);
    let pm = fixtures::example4_1();
    let mut maps = vec![LinearMap::identity(4)];
    while maps.len() < 21 {
        maps.push(invertible_map(&mut rng, 4));
    }
    let mut holds = [0usize; 3];
    for (n, t) in maps.iter().enumerate() {
        for variant in FormVariant::ALL {
            let report = form_operator_check(&pm, t, variant).map_err(|e| e.to_string())?;
            ensure(
                report.agree(),
                format!("variant {} disagrees on map {n}: T = {}", variant.index(), t.matrix.render()),
            )?;
            holds[variant.index() as usize - 1] += report.o_operator.holds() as usize;
        }
    }
    // No variant admits a non-degenerate solution on this table, so every map
    // above is a negative. The zero product supplies positives.
    let abelian = malcev_core::StructureTable::zero(pm.basis().to_vec(), malcev_core::AlgebraKind::General).unwrap();
    for variant in FormVariant::ALL {
        let report = form_operator_check(&abelian, &maps[1], variant).map_err(|e| e.to_string())?;
        ensure(report.agree() && report.o_operator.holds(), format!("variant {} fails on the zero product", variant.index()))?;
    }
    Ok(format!("21 maps agree on all variants (holding counts {holds:?}); all variants hold on the zero product"))
}

fn criterion_10() -> Outcome {
    let mut done = Vec::new();
    for (n, kind) in diff::KINDS.iter().enumerate() {
        diff::on_fixtures(kind).map_err(|e| format!("{kind} on fixtures: {e}"))?;
        diff::random(kind, 1000 + n as u64, 100).map_err(|e| format!("{kind}: {e}"))?;
        done.push(*kind);
    }
    Ok(format!("{} identity kinds, fixtures plus 100 random inputs each", done.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("example2_1 identities and Jacobi witness", criterion_1),
        ("example2_5 coadjoint O-operator families", criterion_2),
        ("example2_6 O-operators on sl2", criterion_3),
        ("example3_5 symplectic form and solution", criterion_4),
        ("example3_6 end to end", criterion_5),
        ("bidirectional equivalence suites", criterion_6),
        ("r_T and s_T three-block expansions", criterion_7),
        ("pre-Malcev constructions and canonical solutions", criterion_8),
        ("form identities versus O-operator membership", criterion_9),
        ("engine versus oracle", criterion_10),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS - {name}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL - {name}: {detail}", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
