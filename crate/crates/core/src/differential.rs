//! Engine-versus-oracle comparisons on rendered residuals. Each function
//! returns `Err` with the first differing residual.

use crate::reps::{Bimodule, LinearMap, LinearRep};
use crate::ybe::{cybe_residual, o_residual, pm_cybe_residual, pm_o_residual, BilinearForm, ThreeTensor, TwoTensor};
use crate::{oracle, vector, Matrix, Scalar, StructureTable};

pub const KINDS: [&str; 13] = [
    "anticommutativity",
    "malcev",
    "sagle",
    "jacobi",
    "pre-malcev",
    "representation",
    "bimodule",
    "o-operator",
    "pm-o-operator",
    "cybe",
    "pm-cybe",
    "invariance",
    "cyclic",
];

fn render(v: &[Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn flat(m: &Matrix) -> Vec<String> {
    m.entries().map(|(_, _, x)| x.to_string()).collect()
}

fn compare(label: &str, engine: Vec<Vec<String>>, oracle: Vec<Vec<String>>) -> Result<(), String> {
    if engine.len() != oracle.len() {
        return Err(format!("{label}: engine has {} residuals, oracle {}", engine.len(), oracle.len()));
    }
    for (n, (e, o)) in engine.iter().zip(&oracle).enumerate() {
        if e != o {
            return Err(format!("{label}: residual {n} differs: engine {e:?}, oracle {o:?}"));
        }
    }
    Ok(())
}

fn dense_cube(t: &ThreeTensor) -> Vec<String> {
    let n = t.dim();
    let mut out = Vec::with_capacity(n * n * n);
    for p in 0..n {
        for q in 0..n {
            for s in 0..n {
                out.push(t.get(p, q, s).to_string());
            }
        }
    }
    out
}

pub fn anticommutativity(a: &StructureTable) -> Result<(), String> {
    let engine = a.check_anticommutative().witness.map(|w| w.residual.to_string());
    let oracle = oracle::anticommutative(a)
        .into_iter()
        .find(|v| !vector::is_zero(v))
        .map(|v| vector::render_combination(&v, a.basis()));
    if engine == oracle {
        Ok(())
    } else {
        Err(format!("anticommutativity: engine {engine:?}, oracle {oracle:?}"))
    }
}

pub fn malcev(a: &StructureTable) -> Result<(), String> {
    let engine = a.malcev_family().map_err(|e| e.to_string())?;
    let oracle = oracle::malcev(a);
    let idx_e: Vec<_> = engine.iter().map(|(i, _)| i.clone()).collect();
    let idx_o: Vec<_> = oracle.iter().map(|(i, _)| i.clone()).collect();
    if idx_e != idx_o {
        return Err("malcev: argument order differs".into());
    }
    compare(
        "malcev",
        engine.iter().map(|(_, v)| render(v)).collect(),
        oracle.iter().map(|(_, v)| render(v)).collect(),
    )
}

pub fn sagle(a: &StructureTable) -> Result<(), String> {
    let engine = a.sagle_family().map_err(|e| e.to_string())?;
    compare("sagle", engine.iter().map(|v| render(v)).collect(), oracle::sagle(a).iter().map(|v| render(v)).collect())
}

pub fn jacobi(a: &StructureTable) -> Result<(), String> {
    let engine = a.jacobi_family().map_err(|e| e.to_string())?;
    compare("jacobi", engine.iter().map(|v| render(v)).collect(), oracle::jacobi(a).iter().map(|v| render(v)).collect())
}

pub fn pre_malcev(a: &StructureTable) -> Result<(), String> {
    compare(
        "pre-malcev",
        a.pre_malcev_family().iter().map(|v| render(v)).collect(),
        oracle::pre_malcev(a).iter().map(|v| render(v)).collect(),
    )
}

pub fn representation(r: &LinearRep) -> Result<(), String> {
    compare(
        "representation",
        r.residual_family().iter().map(flat).collect(),
        oracle::rep(r).iter().map(|v| render(v)).collect(),
    )
}

pub fn bimodule(b: &Bimodule) -> Result<(), String> {
    let oracle = oracle::bimodule(b);
    for (axiom, o) in oracle.iter().enumerate() {
        compare(
            &format!("bimodule axiom {}", axiom + 1),
            b.residual_family(axiom).iter().map(flat).collect(),
            o.iter().map(|v| render(v)).collect(),
        )?;
    }
    Ok(())
}

pub fn o_operator(t: &LinearMap, r: &LinearRep) -> Result<(), String> {
    let engine = o_residual(t, r).map_err(|e| e.to_string())?;
    compare(
        "o-operator",
        engine.iter().map(|v| render(v)).collect(),
        oracle::o_operator(t, r).iter().map(|v| render(v)).collect(),
    )
}

pub fn pm_o_operator(t: &LinearMap, b: &Bimodule) -> Result<(), String> {
    let engine = pm_o_residual(t, b).map_err(|e| e.to_string())?;
    compare(
        "pm-o-operator",
        engine.iter().map(|v| render(v)).collect(),
        oracle::pm_o_operator(t, b).iter().map(|v| render(v)).collect(),
    )
}

pub fn cybe(r: &TwoTensor) -> Result<(), String> {
    let engine = cybe_residual(r).map_err(|e| e.to_string())?;
    compare("cybe", vec![dense_cube(&engine)], vec![render(&oracle::cybe(r))])
}

pub fn pm_cybe(r: &TwoTensor) -> Result<(), String> {
    compare("pm-cybe", vec![dense_cube(&pm_cybe_residual(r))], vec![render(&oracle::pm_cybe(r))])
}

pub fn invariance(f: &BilinearForm) -> Result<(), String> {
    compare("invariance", vec![render(&f.invariance_family())], vec![render(&oracle::invariance(f))])
}

pub fn cyclic(f: &BilinearForm) -> Result<(), String> {
    compare("cyclic", vec![render(&f.cyclic_family())], vec![render(&oracle::cyclic(f))])
}
