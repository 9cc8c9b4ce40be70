//! Constructions and searches. Each construction writes its object and reports
//! the checks that decide whether the object has its intended property; the
//! object is written either way.

use clap::{Args, Subcommand};
use malcev_core::io;
use malcev_core::ybe::{
    b_from_r, build_r_t, build_s_t, canonical_r, canonical_s, check_cybe, check_o_operator, check_pm_o_operator,
    grid_search_o_operators, pre_malcev_from_symplectic, pre_malcev_from_t, star_product,
};
use malcev_core::{parse_scalar, LinearRep};
use serde_json::{json, Value};

use crate::report::{Check, Report};
use crate::verify::AlgebraArg;
use crate::{CliError, Ctx, Output};

#[derive(Args, Debug)]
pub struct WithAlgebra {
    #[arg(long, value_name = "ALG")]
    algebra: String,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
pub struct RepMap {
    /// Algebra of the representation.
    #[arg(long, value_name = "ALG")]
    algebra: Option<String>,
    /// Representation: a file, a built-in, `adjoint`, `coadjoint` or `left`.
    #[arg(long)]
    rep: String,
    #[arg(long)]
    map: String,
    #[command(flatten)]
    out: Output,
}

#[derive(Subcommand, Debug)]
pub enum Build {
    /// Adjoint representation.
    Adjoint(WithAlgebra),
    /// Coadjoint representation.
    Coadjoint(WithAlgebra),
    /// Dual representation.
    #[command(name = "dual-rep")]
    DualRep {
        #[arg(long)]
        rep: String,
        #[command(flatten)]
        over: AlgebraArg,
        #[command(flatten)]
        out: Output,
    },
    /// Dual bimodule.
    #[command(name = "dual-bimodule")]
    DualBimodule {
        #[arg(long)]
        bimodule: String,
        #[command(flatten)]
        over: AlgebraArg,
        #[command(flatten)]
        out: Output,
    },
    /// Semidirect product algebra of a representation.
    Semidirect {
        #[arg(long)]
        rep: String,
        #[command(flatten)]
        over: AlgebraArg,
        #[command(flatten)]
        out: Output,
    },
    /// Semidirect product algebra of a bimodule.
    #[command(name = "pre-semidirect")]
    PreSemidirect {
        #[arg(long)]
        bimodule: String,
        #[command(flatten)]
        over: AlgebraArg,
        #[command(flatten)]
        out: Output,
    },
    /// Skew tensor r_T on the semidirect product with the dual representation.
    #[command(name = "rT")]
    RT(RepMap),
    /// Symmetric tensor s_T on the semidirect product with the dual bimodule.
    #[command(name = "sT")]
    ST {
        #[arg(long, value_name = "ALG")]
        algebra: Option<String>,
        #[arg(long)]
        bimodule: String,
        #[arg(long)]
        map: String,
        #[command(flatten)]
        out: Output,
    },
    /// Canonical skew tensor of a pre-Malcev algebra.
    #[command(name = "canonical-r")]
    CanonicalR(WithAlgebra),
    /// Canonical symmetric tensor of a pre-Malcev algebra.
    #[command(name = "canonical-s")]
    CanonicalS(WithAlgebra),
    /// Pre-Malcev product x.y = T(rho(x) T^-1(y)) from an invertible O-operator.
    #[command(name = "pre-malcev-from-T")]
    PreMalcevFromT(RepMap),
    /// Product v * w = rho(T(v)) w on the representation space.
    #[command(name = "star-product")]
    StarProduct(RepMap),
    /// Compatible pre-Malcev algebra of a symplectic form.
    #[command(name = "pre-malcev-from-symplectic")]
    PreMalcevFromSymplectic {
        form: String,
        #[command(flatten)]
        over: AlgebraArg,
        #[command(flatten)]
        out: Output,
    },
    /// Bilinear form B_r(x, y) = <T_r^-1(x), y> of an invertible tensor.
    #[command(name = "Br")]
    Br {
        tensor: String,
        #[command(flatten)]
        over: AlgebraArg,
        #[command(flatten)]
        out: Output,
    },
    /// Map A -> A*, x -> B(x, .).
    #[command(name = "phiB")]
    PhiB {
        form: String,
        #[command(flatten)]
        over: AlgebraArg,
        #[command(flatten)]
        out: Output,
    },
    /// Commutator algebra [x, y] = x.y - y.x.
    Commutator(WithAlgebra),
}

#[derive(Subcommand, Debug)]
pub enum Search {
    /// All O-operators supported on a mask with entries from a finite set.
    #[command(name = "o-operators")]
    OOperators {
        #[arg(long, value_name = "ALG")]
        algebra: Option<String>,
        #[arg(long)]
        rep: String,
        /// Comma-separated scalars, e.g. `-1,0,1`.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        values: Vec<String>,
        /// Free positions as `row:col` pairs (0-based), comma-separated; every
        /// position when omitted.
        #[arg(long, value_delimiter = ',')]
        mask: Vec<String>,
        /// Largest number of candidates to enumerate.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u128,
        #[command(flatten)]
        out: Output,
    },
}

fn emit(report: &mut Report, out: &Output, value: Value) -> Result<(), CliError> {
    match &out.path {
        Some(p) => {
            io::write_json(p, &value)?;
            report.output = Some(p.display().to_string());
        }
        None => report.note(io::to_canonical_string(&value).trim_end().to_string()),
    }
    report.result = Some(value);
    Ok(())
}

pub fn run(ctx: &Ctx, cmd: Build) -> Result<Report, CliError> {
    let mut report = Report::default();
    let r = &mut report;
    let l = &ctx.load;
    match cmd {
        Build::Adjoint(w) => {
            let a = l.algebra(&w.algebra)?;
            r.push(&a.check_malcev()?);
            emit(r, &w.out, io::rep_to_json(&LinearRep::adjoint(&a)?))?;
        }
        Build::Coadjoint(w) => {
            let a = l.algebra(&w.algebra)?;
            r.push(&a.check_malcev()?);
            emit(r, &w.out, io::rep_to_json(&LinearRep::coadjoint(&a)?))?;
        }
        Build::DualRep { rep, over, out } => {
            let rep = l.rep(&rep, over.algebra.as_deref())?;
            r.push_axioms(&rep.check());
            emit(r, &out, io::rep_to_json(&rep.dual()))?;
        }
        Build::DualBimodule { bimodule, over, out } => {
            let b = l.bimodule(&bimodule, over.algebra.as_deref())?;
            r.push_axioms(&b.check());
            emit(r, &out, io::bimodule_to_json(&b.dual()))?;
        }
        Build::Semidirect { rep, over, out } => {
            let rep = l.rep(&rep, over.algebra.as_deref())?;
            r.push_axioms(&rep.check());
            let s = rep.semidirect();
            r.notes.extend(s.render_products());
            emit(r, &out, io::algebra_to_json(&s))?;
        }
        Build::PreSemidirect { bimodule, over, out } => {
            let b = l.bimodule(&bimodule, over.algebra.as_deref())?;
            r.push_axioms(&b.check());
            let s = b.semidirect();
            r.notes.extend(s.render_products());
            emit(r, &out, io::algebra_to_json(&s))?;
        }
        Build::RT(a) => {
            let t = l.map(&a.map)?;
            let rep = l.rep(&a.rep, a.algebra.as_deref())?;
            r.push(&check_o_operator(&t, &rep)?);
            let tensor = build_r_t(&t, &rep)?;
            r.note(format!("r = {}", tensor.render()));
            emit(r, &a.out, io::tensor_to_json(&tensor))?;
        }
        Build::ST { algebra, bimodule, map, out } => {
            let t = l.map(&map)?;
            let b = l.bimodule(&bimodule, algebra.as_deref())?;
            r.push(&check_pm_o_operator(&t, &b)?);
            let tensor = build_s_t(&t, &b)?;
            r.note(format!("s = {}", tensor.render()));
            emit(r, &out, io::tensor_to_json(&tensor))?;
        }
        Build::CanonicalR(w) => {
            let pm = l.algebra(&w.algebra)?;
            r.push(&pm.check_pre_malcev());
            let tensor = canonical_r(&pm)?;
            r.note(format!("r = {}", tensor.render()));
            emit(r, &w.out, io::tensor_to_json(&tensor))?;
        }
        Build::CanonicalS(w) => {
            let pm = l.algebra(&w.algebra)?;
            r.push(&pm.check_pre_malcev());
            let tensor = canonical_s(&pm)?;
            r.note(format!("s = {}", tensor.render()));
            emit(r, &w.out, io::tensor_to_json(&tensor))?;
        }
        Build::PreMalcevFromT(a) => {
            let t = l.map(&a.map)?;
            let rep = l.rep(&a.rep, a.algebra.as_deref())?;
            let pm = pre_malcev_from_t(&t, &rep)?;
            r.push(&pm.check_pre_malcev());
            r.notes.extend(pm.render_products());
            emit(r, &a.out, io::algebra_to_json(&pm))?;
        }
        Build::StarProduct(a) => {
            let t = l.map(&a.map)?;
            let rep = l.rep(&a.rep, a.algebra.as_deref())?;
            let (table, verdict) = star_product(&t, &rep)?;
            r.push(&verdict);
            r.notes.extend(table.render_products());
            emit(r, &a.out, io::algebra_to_json(&table))?;
        }
        Build::PreMalcevFromSymplectic { form, over, out } => {
            let f = l.form(&form, over.algebra.as_deref())?;
            let (pm, compat) = pre_malcev_from_symplectic(&f)?;
            r.push(&pm.check_pre_malcev());
            r.push(&compat);
            r.notes.extend(pm.render_products());
            emit(r, &out, io::algebra_to_json(&pm))?;
        }
        Build::Br { tensor, over, out } => {
            let t = l.tensor(&tensor, over.algebra.as_deref())?;
            r.push(Check::from_bool("skew-symmetry", t.is_skew(), "tensor is not skew-symmetric"));
            r.push(&check_cybe(&t)?);
            emit(r, &out, io::form_to_json(&b_from_r(&t)?))?;
        }
        Build::PhiB { form, over, out } => {
            let f = l.form(&form, over.algebra.as_deref())?;
            emit(r, &out, io::map_to_json(&f.phi()))?;
        }
        Build::Commutator(w) => {
            let pm = l.algebra(&w.algebra)?;
            r.push(&pm.check_pre_malcev());
            let c = pm.commutator_algebra();
            r.notes.extend(c.render_products());
            emit(r, &w.out, io::algebra_to_json(&c))?;
        }
    }
    Ok(report)
}

fn parse_position(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("mask entry `{s}` is not of the form row:col"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

pub fn search(ctx: &Ctx, cmd: Search) -> Result<Report, CliError> {
    let Search::OOperators { algebra, rep, values, mask, budget, out } = cmd;
    let rep = ctx.load.rep(&rep, algebra.as_deref())?;
    let ring = rep.ring()?;
    let values = values
        .iter()
        .map(|v| parse_scalar(v, &ring).map_err(|e| CliError::Usage(format!("value `{v}`: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let mask = if mask.is_empty() {
        (0..rep.algebra.dim()).flat_map(|i| (0..rep.space_dim()).map(move |j| (i, j))).collect()
    } else {
        mask.iter().map(|s| parse_position(s)).collect::<Result<Vec<_>, _>>()?
    };
    let found = grid_search_o_operators(&rep, &values, &mask, budget)?;
    let mut report = Report::default();
    report.note(format!("found {} O-operators", found.len()));
    for t in &found {
        report.note(t.matrix.render());
    }
    emit(&mut report, &out, json!({ "maps": found.iter().map(io::map_to_json).collect::<Vec<_>>() }))?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::parse_position;

    #[test]
    fn positions() {
        assert_eq!(parse_position("2:3").unwrap(), (2, 3));
        assert!(parse_position("2-3").is_err());
    }
}
