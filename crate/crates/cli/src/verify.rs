use clap::{Args, Subcommand};
use malcev_core::differential as diff;
use malcev_core::linalg::Nondegeneracy;
use malcev_core::ybe::{
    check_cybe, check_form_compatibility, check_o_operator, check_pm_cybe, check_pm_o_operator, form_operator_check,
    FormVariant,
};
use malcev_core::AlgebraKind;

use crate::report::{Check, Report, Status};
use crate::{CliError, Ctx};

#[derive(Args, Debug)]
pub struct AlgebraArg {
    /// Algebra the object lives over, when the file does not embed one.
    #[arg(long, value_name = "ALG")]
    pub algebra: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Identities of an algebra. Without flags: anticommutativity and the
    /// Malcev identity for anticommutative tables, the pre-Malcev identity
    /// otherwise.
    Algebra {
        algebra: String,
        #[arg(long)]
        anticommutative: bool,
        #[arg(long)]
        malcev: bool,
        #[arg(long)]
        sagle: bool,
        #[arg(long)]
        jacobi: bool,
        #[arg(long = "pre-malcev")]
        pre_malcev: bool,
        /// Require the Jacobi identity to fail.
        #[arg(long = "no-jacobi-expected", conflicts_with = "jacobi")]
        no_jacobi_expected: bool,
    },
    /// Representation axioms.
    Rep {
        rep: String,
        #[command(flatten)]
        over: AlgebraArg,
    },
    /// Bimodule axioms of a pre-Malcev algebra.
    Bimodule {
        bimodule: String,
        #[command(flatten)]
        over: AlgebraArg,
    },
    /// O-operator equation for a map T: V -> A and a representation on V.
    #[command(name = "o-operator")]
    OOperator {
        #[arg(long)]
        map: String,
        #[arg(long)]
        rep: String,
        #[command(flatten)]
        over: AlgebraArg,
    },
    /// O-operator equation for a map T: V -> A and a bimodule on V.
    #[command(name = "pm-o-operator")]
    PmOOperator {
        #[arg(long)]
        map: String,
        #[arg(long)]
        bimodule: String,
        #[command(flatten)]
        over: AlgebraArg,
    },
    /// Classical Yang-Baxter equation.
    Cybe {
        tensor: String,
        #[command(flatten)]
        over: AlgebraArg,
    },
    /// Pre-Malcev Yang-Baxter equation.
    #[command(name = "pm-cybe")]
    PmCybe {
        tensor: String,
        #[command(flatten)]
        over: AlgebraArg,
    },
    /// Properties of a bilinear form; symplectic when no flag is given.
    Form {
        form: String,
        #[command(flatten)]
        over: AlgebraArg,
        #[arg(long)]
        invariant: bool,
        #[arg(long)]
        symplectic: bool,
        #[arg(long)]
        skew: bool,
        /// Check B(x.y, z) = -B(y, xz) against this pre-Malcev algebra.
        #[arg(long = "compatible-with", value_name = "ALG")]
        compatible_with: Option<String>,
    },
    /// Isomorphism phi: V2 -> V1 of representations, rho1(x) phi = phi rho2(x).
    #[command(name = "rep-iso")]
    RepIso {
        #[arg(long)]
        map: String,
        #[arg(long)]
        rep1: String,
        #[arg(long)]
        rep2: String,
        #[command(flatten)]
        over: AlgebraArg,
    },
    /// For an invertible T: A* -> A on a pre-Malcev algebra, compare each
    /// bilinear identity of B(x, y) = <T^-1(x), y> with the matching
    /// O-operator equation.
    Prop48 {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        map: String,
        /// 1, 2 or 3; all three when omitted.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        variant: Option<u8>,
    },
}

fn oracle_check(report: &mut Report, kind: &str, outcome: Result<(), String>) {
    let name = format!("oracle agrees: {kind}");
    report.push(match outcome {
        Ok(()) => Check::pass(name),
        Err(e) => Check::fail(name, e),
    });
}

pub fn run(ctx: &Ctx, cmd: Verify) -> Result<Report, CliError> {
    let mut report = Report::default();
    let r = &mut report;
    match cmd {
        Verify::Algebra { algebra, anticommutative, malcev, sagle, jacobi, pre_malcev, no_jacobi_expected } => {
            let a = ctx.load.algebra(&algebra)?;
            let any = anticommutative || malcev || sagle || jacobi || pre_malcev || no_jacobi_expected;
            let lie_like = a.kind() == AlgebraKind::Anticommutative;
            if anticommutative || (!any && lie_like) {
                r.push(&a.check_anticommutative());
                if ctx.oracle {
                    oracle_check(r, "anticommutativity", diff::anticommutativity(&a));
                }
            }
            if malcev || (!any && lie_like) {
                r.push(&a.check_malcev()?);
                if ctx.oracle {
                    oracle_check(r, "malcev", diff::malcev(&a));
                }
            }
            if sagle {
                r.push(&a.check_sagle()?);
                if ctx.oracle {
                    oracle_check(r, "sagle", diff::sagle(&a));
                }
            }
            if jacobi || no_jacobi_expected {
                let j = a.check_jacobi()?;
                r.push(if jacobi { Check::from(&j) } else { Check::expect_failure(&j) });
                if ctx.oracle {
                    oracle_check(r, "jacobi", diff::jacobi(&a));
                }
            }
            if pre_malcev || (!any && !lie_like) {
                r.push(&a.check_pre_malcev());
                if ctx.oracle {
                    oracle_check(r, "pre-malcev", diff::pre_malcev(&a));
                }
            }
            r.notes.extend(a.render_products());
        }
        Verify::Rep { rep, over } => {
            let rep = ctx.load.rep(&rep, over.algebra.as_deref())?;
            r.push_axioms(&rep.check());
            if ctx.oracle {
                oracle_check(r, "representation", diff::representation(&rep));
            }
        }
        Verify::Bimodule { bimodule, over } => {
            let b = ctx.load.bimodule(&bimodule, over.algebra.as_deref())?;
            r.push_axioms(&b.check());
            if ctx.oracle {
                oracle_check(r, "bimodule", diff::bimodule(&b));
            }
        }
        Verify::OOperator { map, rep, over } => {
            let t = ctx.load.map(&map)?;
            let rep = ctx.load.rep(&rep, over.algebra.as_deref())?;
            r.push(&check_o_operator(&t, &rep)?);
            if ctx.oracle {
                oracle_check(r, "o-operator", diff::o_operator(&t, &rep));
            }
        }
        Verify::PmOOperator { map, bimodule, over } => {
            let t = ctx.load.map(&map)?;
            let b = ctx.load.bimodule(&bimodule, over.algebra.as_deref())?;
            r.push(&check_pm_o_operator(&t, &b)?);
            if ctx.oracle {
                oracle_check(r, "pm-o-operator", diff::pm_o_operator(&t, &b));
            }
        }
        Verify::Cybe { tensor, over } => {
            let t = ctx.load.tensor(&tensor, over.algebra.as_deref())?;
            r.push(&check_cybe(&t)?);
            r.note(format!("r = {}", t.render()));
            r.note(format!("skew-symmetric: {}", t.is_skew()));
            if ctx.oracle {
                oracle_check(r, "cybe", diff::cybe(&t));
            }
        }
        Verify::PmCybe { tensor, over } => {
            let t = ctx.load.tensor(&tensor, over.algebra.as_deref())?;
            r.push(&check_pm_cybe(&t));
            r.note(format!("r = {}", t.render()));
            r.note(format!("symmetric: {}", t.is_symmetric()));
            if ctx.oracle {
                oracle_check(r, "pm-cybe", diff::pm_cybe(&t));
            }
        }
        Verify::Form { form, over, invariant, symplectic, skew, compatible_with } => {
            let f = ctx.load.form(&form, over.algebra.as_deref())?;
            let symplectic = symplectic || !(invariant || skew || compatible_with.is_some());
            if skew && !symplectic {
                r.push(&f.check_skew());
            }
            if invariant {
                r.push(&f.check_invariant());
                if ctx.oracle {
                    oracle_check(r, "invariance", diff::invariance(&f));
                }
            }
            if symplectic {
                let s = f.check_symplectic()?;
                r.push(&s.skew);
                r.push(&s.identity);
                r.push(match s.nondegeneracy {
                    Nondegeneracy::Nondegenerate => Check::pass("non-degeneracy"),
                    Nondegeneracy::Degenerate => Check::fail("non-degeneracy", "determinant is 0"),
                    Nondegeneracy::Conditional { determinant } => Check {
                        status: Status::Conditional { condition: determinant.clone() },
                        detail: Some(format!("determinant {determinant} must not vanish")),
                        ..Check::pass("non-degeneracy")
                    },
                });
                if ctx.oracle {
                    oracle_check(r, "cyclic", diff::cyclic(&f));
                }
            }
            if let Some(pm) = compatible_with {
                let pm = ctx.load.algebra(&pm)?;
                r.push(&check_form_compatibility(&pm, &f)?);
            }
        }
        Verify::RepIso { map, rep1, rep2, over } => {
            let phi = ctx.load.map(&map)?;
            let r1 = ctx.load.rep(&rep1, over.algebra.as_deref())?;
            let r2 = ctx.load.rep(&rep2, over.algebra.as_deref())?;
            r.push_axioms(&malcev_core::LinearRep::check_iso(&phi, &r1, &r2)?);
        }
        Verify::Prop48 { algebra, map, variant } => {
            let pm = ctx.load.algebra(&algebra)?;
            let t = ctx.load.map(&map)?;
            let variants = match variant {
                Some(i) => vec![FormVariant::from_index(i).expect("range checked by the parser")],
                None => FormVariant::ALL.to_vec(),
            };
            for v in variants {
                let rep = form_operator_check(&pm, &t, v)?;
                let i = v.index();
                let verdict = |h: bool| if h { "holds" } else { "fails" };
                let detail = format!(
                    "bilinear identity {}, O-operator equation {}",
                    verdict(rep.form_identity.holds()),
                    verdict(rep.o_operator.holds())
                );
                r.push(Check::from_bool(format!("variant {i}: identity iff O-operator"), rep.agree(), detail.clone()).with_detail(detail));
                r.note(format!("variant {i}: {}", rep.form_identity));
                r.note(format!("variant {i}: {}", rep.o_operator));
            }
        }
    }
    Ok(report)
}
