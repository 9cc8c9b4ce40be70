//! Tensors and algebras built from O-operators and bilinear forms.

use crate::algebra::{AlgebraKind, StructureTable};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::reps::{left_rep, Bimodule, LinearMap, LinearRep};
use crate::report::{first_failing_tuple, names_of, IdentityReport, Residual, Witness};
use crate::scalar::Scalar;
use crate::vector;

use super::{
    check_o_operator, check_pm_o_operator, o_residual_at, pm_o_residual_at, BilinearForm, ThreeTensor,
    TwoTensor, Verdict,
};

fn check_shape(t: &LinearMap, algebra_dim: usize, space_dim: usize) -> Result<()> {
    if t.target_dim() != algebra_dim || t.source_dim() != space_dim {
        return Err(Error::Shape(format!(
            "map of shape {}x{}, expected {algebra_dim}x{space_dim}",
            t.target_dim(),
            t.source_dim()
        )));
    }
    Ok(())
}

/// `T̃ ± σ(T̃)` with `T̃ = Σ_j T(v_j) ⊗ ξ_j` on `A ⊕ V*`.
fn block_tensor(t: &LinearMap, n: usize, sign: i64) -> Matrix {
    let m = t.source_dim();
    let mut c = Matrix::zeros(n + m, n + m);
    for (i, j, x) in t.matrix.entries() {
        if x.is_zero() {
            continue;
        }
        c.set(i, n + j, x.clone());
        c.set(n + j, i, if sign > 0 { x.clone() } else { -x });
    }
    c
}

/// `r_T = T̃ - σ(T̃)` on `A ⋉_{ρ*} V*`.
pub fn build_r_t(t: &LinearMap, rep: &LinearRep) -> Result<TwoTensor> {
    check_shape(t, rep.algebra.dim(), rep.space_dim())?;
    let algebra = rep.dual().semidirect();
    TwoTensor::new(algebra, block_tensor(t, rep.algebra.dim(), -1))
}

/// `s_T = T̃ + σ(T̃)` on `A ⋉_{ℓ*-𝔯*, -𝔯*} V*`.
pub fn build_s_t(t: &LinearMap, b: &Bimodule) -> Result<TwoTensor> {
    check_shape(t, b.algebra.dim(), b.space_dim())?;
    let algebra = b.dual().semidirect();
    TwoTensor::new(algebra, block_tensor(t, b.algebra.dim(), 1))
}

/// The CYBE residual of `r_T` written through O-operator residuals
/// `O(i, j) = T(v_i)T(v_j) - T(ρ(T(v_i))v_j) + T(ρ(T(v_j))v_i)`:
///
/// ```text
/// Σ O(i,j) ⊗ ξ_i ⊗ ξ_j + Σ ξ_i ⊗ O(j,i) ⊗ ξ_j + Σ ξ_i ⊗ ξ_j ⊗ O(i,j)
/// ```
pub fn o_operator_assembly(t: &LinearMap, rep: &LinearRep) -> Result<ThreeTensor> {
    check_shape(t, rep.algebra.dim(), rep.space_dim())?;
    let n = rep.algebra.dim();
    let m = rep.space_dim();
    let mut out = ThreeTensor::zero(rep.dual().semidirect().basis().to_vec());
    for i in 0..m {
        for j in 0..m {
            let oij = o_residual_at(t, rep, i, j);
            let oji = o_residual_at(t, rep, j, i);
            for k in 0..n {
                out.add((k, n + i, n + j), &oij[k]);
                out.add((n + i, k, n + j), &oji[k]);
                out.add((n + i, n + j, k), &oij[k]);
            }
        }
    }
    Ok(out)
}

/// The pre-Malcev CYBE residual of `s_T` written through
/// `Q(i, j) = T(v_i)·T(v_j) - T(ℓ_{T(v_i)} v_j + 𝔯_{T(v_j)} v_i)`:
///
/// ```text
/// -Σ Q(i,j) ⊗ ξ_i ⊗ ξ_j + Σ ξ_i ⊗ Q(i,j) ⊗ ξ_j + Σ ξ_i ⊗ ξ_j ⊗ (Q(i,j) - Q(j,i))
/// ```
pub fn pm_o_operator_assembly(t: &LinearMap, b: &Bimodule) -> Result<ThreeTensor> {
    check_shape(t, b.algebra.dim(), b.space_dim())?;
    let n = b.algebra.dim();
    let m = b.space_dim();
    let mut out = ThreeTensor::zero(b.dual().semidirect().basis().to_vec());
    for i in 0..m {
        for j in 0..m {
            let qij = pm_o_residual_at(t, b, i, j);
            let qji = pm_o_residual_at(t, b, j, i);
            for k in 0..n {
                out.add((k, n + i, n + j), &-&qij[k]);
                out.add((n + i, k, n + j), &qij[k]);
                out.add((n + i, n + j, k), &(&qij[k] - &qji[k]));
            }
        }
    }
    Ok(out)
}

/// `Σ (e_i ⊗ ε_i - ε_i ⊗ e_i)` on `[A] ⋉_{L*} A*`.
pub fn canonical_r(pm: &StructureTable) -> Result<TwoTensor> {
    build_r_t(&LinearMap::identity(pm.dim()), &left_rep(pm))
}

/// `Σ (e_i ⊗ ε_i + ε_i ⊗ e_i)` on `A ⋉_{L*,0} A*`.
pub fn canonical_s(pm: &StructureTable) -> Result<TwoTensor> {
    build_s_t(&LinearMap::identity(pm.dim()), &Bimodule::left_only(pm))
}

fn refuse_unless_o_operator(t: &LinearMap, rep: &LinearRep) -> Result<()> {
    let report = check_o_operator(t, rep)?;
    match report.witness {
        None => Ok(()),
        Some(w) => Err(Error::Refused(format!("map is not an O-operator: residual {w}"))),
    }
}

/// Compatible pre-Malcev product `x·y = T(ρ(x) T^{-1}(y))` from an invertible
/// O-operator. Refused when `T` is not invertible or not an O-operator.
pub fn pre_malcev_from_t(t: &LinearMap, rep: &LinearRep) -> Result<StructureTable> {
    check_shape(t, rep.algebra.dim(), rep.space_dim())?;
    if !t.matrix.is_square() {
        return Err(Error::Refused(format!(
            "map of shape {}x{} is not invertible; structures induced on a quotient are not canonical",
            t.target_dim(),
            t.source_dim()
        )));
    }
    let inverse = t.inverse()?;
    refuse_unless_o_operator(t, rep)?;
    let a = &rep.algebra;
    let mut entries = Vec::new();
    for (i, rho) in rep.action.iter().enumerate() {
        let l = &(&t.matrix * rho) * &inverse.matrix;
        for (k, j, c) in l.entries() {
            if !c.is_zero() {
                entries.push((i, j, k, c.clone()));
            }
        }
    }
    let ring = a.ring().unify(&t.matrix.ring()?)?;
    StructureTable::from_entries(a.basis().to_vec(), ring, AlgebraKind::General, entries)
}

/// `v ∗ w = ρ(T(v)) w` on `V`, with the O-operator verdict for `T`; the product
/// is pre-Malcev when that verdict holds.
pub fn star_product(t: &LinearMap, rep: &LinearRep) -> Result<(StructureTable, IdentityReport)> {
    let report = check_o_operator(t, rep)?;
    let mut entries = Vec::new();
    for j in 0..rep.space_dim() {
        let op = rep.rho(&t.image(j));
        for (l, k, c) in op.entries() {
            if !c.is_zero() {
                entries.push((j, k, l, c.clone()));
            }
        }
    }
    let ring = rep.ring()?.unify(&t.matrix.ring()?)?;
    let table = StructureTable::from_entries(rep.space_basis.clone(), ring, AlgebraKind::General, entries)?;
    Ok((table, report))
}

/// `B(x·y, z) + B(y, xz)` over basis triples, with `x·y` from `pm` and `xz`
/// from the form's algebra.
pub fn check_form_compatibility(pm: &StructureTable, form: &BilinearForm) -> Result<IdentityReport> {
    let a = &form.algebra;
    if pm.dim() != a.dim() {
        return Err(Error::Shape("algebras of different dimensions".into()));
    }
    let n = a.dim();
    let hit = first_failing_tuple(n, 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let s = form.eval(&pm.basis_product(x, y), &vector::unit(n, z))
            + form.eval(&vector::unit(n, y), &a.basis_product(x, z));
        (!s.is_zero()).then_some(s)
    });
    Ok(IdentityReport::new(
        "B(x.y, z) = -B(y, xz)",
        hit.map(|(t, s)| Witness {
            arguments: names_of(&t, a.basis()),
            indices: t,
            residual: Residual::Scalar(s),
        }),
    ))
}

/// Compatible pre-Malcev structure from a symplectic form, through the
/// O-operator `T: A* → A` with `<T^{-1}(x), y> = B(x, y)`.
pub fn pre_malcev_from_symplectic(form: &BilinearForm) -> Result<(StructureTable, IdentityReport)> {
    match form.check_symplectic()?.verdict() {
        Verdict::Holds => {}
        Verdict::Fails => return Err(Error::Refused("form is not symplectic".into())),
        Verdict::Conditional { determinant } => return Err(Error::NotInvertibleOverRing { determinant }),
    }
    let t = LinearMap::new(form.matrix.transpose().inverse()?);
    let pm = pre_malcev_from_t(&t, &LinearRep::coadjoint(&form.algebra)?)?;
    let report = check_form_compatibility(&pm, form)?;
    Ok((pm, report))
}

/// The three correspondences between invertible maps `T: A* → A` on a
/// pre-Malcev algebra and bilinear identities of `B(x, y) = <T^{-1}(x), y>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormVariant {
    /// `T ∈ O(A*, L* - R*, 0)` iff `B(x·y, z) = -B(y, x·z - z·x)`.
    LeftMinusRight,
    /// `T ∈ O(A*, L* - R*, -R*)` iff
    /// `B(x·y, z) = -B(y, x·z) + B(y, z·x) + B(x, z·y)`.
    DualRegular,
    /// `T ∈ O_[A](A*, L*)` iff `B(xy, z) = B(x, y·z) - B(y, x·z)`.
    Subadjacent,
}

impl FormVariant {
    pub const ALL: [FormVariant; 3] = [Self::LeftMinusRight, Self::DualRegular, Self::Subadjacent];

    pub fn from_index(i: u8) -> Option<Self> {
        match i {
            1 => Some(Self::LeftMinusRight),
            2 => Some(Self::DualRegular),
            3 => Some(Self::Subadjacent),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Self::LeftMinusRight => 1,
            Self::DualRegular => 2,
            Self::Subadjacent => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormOperatorReport {
    pub variant: FormVariant,
    pub form_identity: IdentityReport,
    pub o_operator: IdentityReport,
}

impl FormOperatorReport {
    pub fn agree(&self) -> bool {
        self.form_identity.holds() == self.o_operator.holds()
    }
}

/// `(A*, L* - R*, 0)`.
pub fn left_minus_right_dual(pm: &StructureTable) -> Bimodule {
    let mut b = Bimodule::regular(pm).dual();
    let n = pm.dim();
    b.right = vec![Matrix::zeros(n, n); n];
    b
}

/// Evaluates both sides of a [`FormVariant`] independently.
pub fn form_operator_check(pm: &StructureTable, t: &LinearMap, variant: FormVariant) -> Result<FormOperatorReport> {
    let n = pm.dim();
    check_shape(t, n, n)?;
    let b = BilinearForm::new(pm.as_general(), t.inverse()?.matrix.transpose())?;
    let o_operator = match variant {
        FormVariant::LeftMinusRight => check_pm_o_operator(t, &left_minus_right_dual(pm))?,
        FormVariant::DualRegular => check_pm_o_operator(t, &Bimodule::regular(pm).dual())?,
        FormVariant::Subadjacent => check_o_operator(t, &left_rep(pm).dual())?,
    };
    let bracket = pm.commutator_algebra();
    let e = |i: usize| vector::unit(n, i);
    let dot = |i: usize, j: usize| pm.basis_product(i, j);
    let residual = |x: usize, y: usize, z: usize| -> Scalar {
        match variant {
            FormVariant::LeftMinusRight => {
                b.eval(&dot(x, y), &e(z)) + b.eval(&e(y), &vector::sub(&dot(x, z), &dot(z, x)))
            }
            FormVariant::DualRegular => {
                b.eval(&dot(x, y), &e(z)) + b.eval(&e(y), &dot(x, z))
                    - b.eval(&e(y), &dot(z, x))
                    - b.eval(&e(x), &dot(z, y))
            }
            FormVariant::Subadjacent => {
                b.eval(&bracket.basis_product(x, y), &e(z)) - b.eval(&e(x), &dot(y, z)) + b.eval(&e(y), &dot(x, z))
            }
        }
    };
    let hit = first_failing_tuple(n, 3, |t| {
        let s = residual(t[0], t[1], t[2]);
        (!s.is_zero()).then_some(s)
    });
    let form_identity = IdentityReport::new(
        "bilinear identity",
        hit.map(|(t, s)| Witness {
            arguments: names_of(&t, pm.basis()),
            indices: t,
            residual: Residual::Scalar(s),
        }),
    );
    Ok(FormOperatorReport {
        variant,
        form_identity,
        o_operator,
    })
}
