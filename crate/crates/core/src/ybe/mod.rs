//! Two-tensors, the classical Yang-Baxter equation, O-operators and bilinear
//! forms.

mod construct;
mod search;

pub use construct::*;
pub use search::*;

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{AlgebraKind, StructureTable};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Nondegeneracy};
use crate::reps::{Bimodule, LinearMap, LinearRep};
use crate::report::{all_tuples, first_failing_tuple, names_of, IdentityReport, Residual, Witness};
use crate::scalar::Scalar;
use crate::vector;

/// `r = Σ coeffs[i][j] e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTensor {
    pub algebra: StructureTable,
    pub coeffs: Matrix,
}

impl TwoTensor {
    pub fn new(algebra: StructureTable, coeffs: Matrix) -> Result<Self> {
        let n = algebra.dim();
        if coeffs.rows() != n || coeffs.cols() != n {
            return Err(Error::Shape(format!(
                "tensor of shape {}x{} on an algebra of dimension {n}",
                coeffs.rows(),
                coeffs.cols()
            )));
        }
        algebra.ring().unify(&coeffs.ring()?)?;
        Ok(TwoTensor { algebra, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `σ(r)`: swaps the tensor legs.
    pub fn twist(&self) -> Self {
        TwoTensor {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.transpose(),
        }
    }

    pub fn is_skew(&self) -> bool {
        self.coeffs.is_skew()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.is_symmetric()
    }

    /// `T_r: A* → A`, `T_r(ε_j) = Σ_i r^{ij} e_i`; its matrix is `coeffs`.
    pub fn t_map(&self) -> LinearMap {
        LinearMap::new(self.coeffs.clone())
    }

    /// Renders e.g. `e1⊗e4 - e4⊗e1`.
    pub fn render(&self) -> String {
        let names = self.algebra.basis();
        let mut coords = Vec::new();
        let mut labels = Vec::new();
        for (i, j, c) in self.coeffs.entries() {
            if !c.is_zero() {
                coords.push(c.clone());
                labels.push(format!("{}⊗{}", names[i], names[j]));
            }
        }
        vector::render_combination(&coords, &labels)
    }
}

/// Sparse element of `A ⊗ A ⊗ A`; zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeTensor {
    pub basis: Vec<String>,
    entries: BTreeMap<(usize, usize, usize), Scalar>,
}

impl ThreeTensor {
    pub fn zero(basis: Vec<String>) -> Self {
        ThreeTensor {
            basis,
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn add(&mut self, index: (usize, usize, usize), c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry(index).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.entries.remove(&index);
        }
    }

    pub fn get(&self, p: usize, q: usize, s: usize) -> Scalar {
        self.entries.get(&(p, q, s)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Scalar)> {
        self.entries.iter()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = ThreeTensor::zero(self.basis.clone());
        for (&k, v) in &self.entries {
            out.add(k, &(c * v));
        }
        out
    }

    /// First nonzero entry as a witness.
    pub fn witness(&self) -> Option<Witness> {
        self.entries.iter().next().map(|(&(p, q, s), c)| Witness {
            indices: vec![p, q, s],
            arguments: names_of(&[p, q, s], &self.basis),
            residual: Residual::Scalar(c.clone()),
        })
    }

    pub fn render(&self) -> String {
        let coords: Vec<Scalar> = self.entries.values().cloned().collect();
        let labels: Vec<String> = self
            .entries
            .keys()
            .map(|&(p, q, s)| format!("{}⊗{}⊗{}", self.basis[p], self.basis[q], self.basis[s]))
            .collect();
        vector::render_combination(&coords, &labels)
    }
}

impl fmt::Display for ThreeTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn require_anticommutative(a: &StructureTable) -> Result<()> {
    match a.kind() {
        AlgebraKind::Anticommutative => Ok(()),
        AlgebraKind::General => Err(Error::KindMismatch {
            expected: "anticommutative",
            found: "general",
        }),
    }
}

/// `r12 r13 + r13 r23 - r23 r12` for `r` over an anticommutative algebra.
///
/// With `col_q = Σ_a r^{aq} e_a` and `row_p = Σ_b r^{pb} e_b`, the entry at
/// `(p, q, s)` is `(col_q col_s)_p + (row_p row_q)_s - (col_s row_p)_q`.
pub fn cybe_residual(r: &TwoTensor) -> Result<ThreeTensor> {
    require_anticommutative(&r.algebra)?;
    let a = &r.algebra;
    let n = a.dim();
    let cols: Vec<Vec<Scalar>> = (0..n).map(|q| r.coeffs.column(q)).collect();
    let rows: Vec<Vec<Scalar>> = (0..n).map(|p| r.coeffs.row(p)).collect();
    let mut out = ThreeTensor::zero(a.basis().to_vec());
    for q in 0..n {
        for s in 0..n {
            let v = a.multiply(&cols[q], &cols[s]);
            for (p, c) in v.iter().enumerate() {
                out.add((p, q, s), c);
            }
        }
    }
    for p in 0..n {
        for q in 0..n {
            let v = a.multiply(&rows[p], &rows[q]);
            for (s, c) in v.iter().enumerate() {
                out.add((p, q, s), c);
            }
        }
    }
    for s in 0..n {
        for p in 0..n {
            let v = a.multiply(&cols[s], &rows[p]);
            for (q, c) in v.iter().enumerate() {
                out.add((p, q, s), &-c);
            }
        }
    }
    Ok(out)
}

pub fn check_cybe(r: &TwoTensor) -> Result<IdentityReport> {
    Ok(IdentityReport::new("classical Yang-Baxter equation", cybe_residual(r)?.witness()))
}

/// `-r12·r13 + r12·r23 + r13 r23` for `r` over a general algebra, where the
/// last term uses the commutator `y_i y_j = y_i·y_j - y_j·y_i`.
pub fn pm_cybe_residual(r: &TwoTensor) -> ThreeTensor {
    let a = &r.algebra;
    let n = a.dim();
    let cols: Vec<Vec<Scalar>> = (0..n).map(|q| r.coeffs.column(q)).collect();
    let rows: Vec<Vec<Scalar>> = (0..n).map(|p| r.coeffs.row(p)).collect();
    let mut out = ThreeTensor::zero(a.basis().to_vec());
    for q in 0..n {
        for s in 0..n {
            let v = a.multiply(&cols[q], &cols[s]);
            for (p, c) in v.iter().enumerate() {
                out.add((p, q, s), &-c);
            }
        }
    }
    for p in 0..n {
        for s in 0..n {
            let v = a.multiply(&rows[p], &cols[s]);
            for (q, c) in v.iter().enumerate() {
                out.add((p, q, s), c);
            }
        }
    }
    for p in 0..n {
        for q in 0..n {
            let v = vector::sub(&a.multiply(&rows[p], &rows[q]), &a.multiply(&rows[q], &rows[p]));
            for (s, c) in v.iter().enumerate() {
                out.add((p, q, s), c);
            }
        }
    }
    out
}

pub fn check_pm_cybe(r: &TwoTensor) -> IdentityReport {
    IdentityReport::new("pre-Malcev Yang-Baxter equation", pm_cybe_residual(r).witness())
}

fn check_map_shape(t: &LinearMap, algebra_dim: usize, space_dim: usize) -> Result<()> {
    if t.target_dim() != algebra_dim || t.source_dim() != space_dim {
        return Err(Error::Shape(format!(
            "map of shape {}x{}, expected {algebra_dim}x{space_dim}",
            t.target_dim(),
            t.source_dim()
        )));
    }
    Ok(())
}

fn pair_report(
    name: &str,
    n: usize,
    arg_basis: &[String],
    value_basis: &[String],
    f: impl Fn(usize, usize) -> Vec<Scalar> + Sync,
) -> IdentityReport {
    let hit = first_failing_tuple(n, 2, |t| {
        let v = f(t[0], t[1]);
        (!vector::is_zero(&v)).then_some(v)
    });
    IdentityReport::new(
        name,
        hit.map(|(t, coords)| Witness {
            arguments: names_of(&t, arg_basis),
            indices: t,
            residual: Residual::Vector {
                coords,
                basis: value_basis.to_vec(),
            },
        }),
    )
}

/// `T(v_j)T(v_k) - T(ρ(T(v_j))v_k - ρ(T(v_k))v_j)` for basis vectors.
pub fn o_residual_at(t: &LinearMap, rep: &LinearRep, j: usize, k: usize) -> Vec<Scalar> {
    let a = &rep.algebra;
    let (tj, tk) = (t.image(j), t.image(k));
    let lhs = a.multiply(&tj, &tk);
    let m = rep.space_dim();
    let inner = vector::sub(
        &rep.rho(&tj).mul_vec(&vector::unit(m, k)),
        &rep.rho(&tk).mul_vec(&vector::unit(m, j)),
    );
    vector::sub(&lhs, &t.apply(&inner))
}

/// All O-operator residuals, pairs `(j, k)` in lexicographic order.
pub fn o_residual(t: &LinearMap, rep: &LinearRep) -> Result<Vec<Vec<Scalar>>> {
    check_map_shape(t, rep.algebra.dim(), rep.space_dim())?;
    Ok(all_tuples(rep.space_dim(), 2, |p| o_residual_at(t, rep, p[0], p[1])))
}

pub fn check_o_operator(t: &LinearMap, rep: &LinearRep) -> Result<IdentityReport> {
    check_map_shape(t, rep.algebra.dim(), rep.space_dim())?;
    Ok(pair_report("O-operator equation", rep.space_dim(), &rep.space_basis, rep.algebra.basis(), |j, k| {
        o_residual_at(t, rep, j, k)
    }))
}

/// O-operator for the adjoint representation.
pub fn check_rota_baxter(t: &LinearMap, algebra: &StructureTable) -> Result<IdentityReport> {
    let mut report = check_o_operator(t, &LinearRep::adjoint(algebra)?)?;
    report.name = "Rota-Baxter equation".into();
    Ok(report)
}

/// `T(v_j)·T(v_k) - T(ℓ_{T(v_j)} v_k + 𝔯_{T(v_k)} v_j)` for basis vectors.
pub fn pm_o_residual_at(t: &LinearMap, b: &Bimodule, j: usize, k: usize) -> Vec<Scalar> {
    let a = &b.algebra;
    let (tj, tk) = (t.image(j), t.image(k));
    let lhs = a.multiply(&tj, &tk);
    let m = b.space_dim();
    let inner = vector::add(
        &b.l(&tj).mul_vec(&vector::unit(m, k)),
        &b.r(&tk).mul_vec(&vector::unit(m, j)),
    );
    vector::sub(&lhs, &t.apply(&inner))
}

pub fn pm_o_residual(t: &LinearMap, b: &Bimodule) -> Result<Vec<Vec<Scalar>>> {
    check_map_shape(t, b.algebra.dim(), b.space_dim())?;
    Ok(all_tuples(b.space_dim(), 2, |p| pm_o_residual_at(t, b, p[0], p[1])))
}

pub fn check_pm_o_operator(t: &LinearMap, b: &Bimodule) -> Result<IdentityReport> {
    check_map_shape(t, b.algebra.dim(), b.space_dim())?;
    Ok(pair_report(
        "pre-Malcev O-operator equation",
        b.space_dim(),
        &b.space_basis,
        b.algebra.basis(),
        |j, k| pm_o_residual_at(t, b, j, k),
    ))
}

/// `B(e_i, e_j) = matrix[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub algebra: StructureTable,
    pub matrix: Matrix,
}

/// Outcome of a test that may hold only where a determinant is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// Holds wherever `determinant` does not vanish.
    Conditional { determinant: Scalar },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormReport {
    pub skew: IdentityReport,
    pub identity: IdentityReport,
    pub nondegeneracy: Nondegeneracy,
}

impl FormReport {
    pub fn verdict(&self) -> Verdict {
        if !self.skew.holds() || !self.identity.holds() {
            return Verdict::Fails;
        }
        match &self.nondegeneracy {
            Nondegeneracy::Degenerate => Verdict::Fails,
            Nondegeneracy::Nondegenerate => Verdict::Holds,
            Nondegeneracy::Conditional { determinant } => Verdict::Conditional {
                determinant: determinant.clone(),
            },
        }
    }
}

impl BilinearForm {
    pub fn new(algebra: StructureTable, matrix: Matrix) -> Result<Self> {
        let n = algebra.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::Shape(format!(
                "form of shape {}x{} on an algebra of dimension {n}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        algebra.ring().unify(&matrix.ring()?)?;
        Ok(BilinearForm { algebra, matrix })
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let my = self.matrix.mul_vec(y);
        x.iter().zip(&my).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum()
    }

    fn scalar_report(&self, name: &str, f: impl Fn(&[usize]) -> Scalar + Sync) -> IdentityReport {
        let n = self.algebra.dim();
        let hit = first_failing_tuple(n, 3, |t| {
            let s = f(t);
            (!s.is_zero()).then_some(s)
        });
        IdentityReport::new(
            name,
            hit.map(|(t, s)| Witness {
                arguments: names_of(&t, self.algebra.basis()),
                indices: t,
                residual: Residual::Scalar(s),
            }),
        )
    }

    fn unit(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.algebra.dim(), i)
    }

    /// `B(xy, z) - B(x, yz)`.
    pub fn invariance_residual(&self, x: usize, y: usize, z: usize) -> Scalar {
        let a = &self.algebra;
        self.eval(&a.basis_product(x, y), &self.unit(z)) - self.eval(&self.unit(x), &a.basis_product(y, z))
    }

    /// `B(xy, z) + B(yz, x) + B(zx, y)`.
    pub fn cyclic_residual(&self, x: usize, y: usize, z: usize) -> Scalar {
        let a = &self.algebra;
        self.eval(&a.basis_product(x, y), &self.unit(z))
            + self.eval(&a.basis_product(y, z), &self.unit(x))
            + self.eval(&a.basis_product(z, x), &self.unit(y))
    }

    pub fn invariance_family(&self) -> Vec<Scalar> {
        all_tuples(self.algebra.dim(), 3, |t| self.invariance_residual(t[0], t[1], t[2]))
    }

    pub fn cyclic_family(&self) -> Vec<Scalar> {
        all_tuples(self.algebra.dim(), 3, |t| self.cyclic_residual(t[0], t[1], t[2]))
    }

    pub fn check_invariant(&self) -> IdentityReport {
        self.scalar_report("invariance", |t| self.invariance_residual(t[0], t[1], t[2]))
    }

    pub fn check_skew(&self) -> IdentityReport {
        let n = self.algebra.dim();
        let hit = first_failing_tuple(n, 2, |t| {
            let s = self.matrix.get(t[0], t[1]) + self.matrix.get(t[1], t[0]);
            (!s.is_zero()).then_some(s)
        });
        IdentityReport::new(
            "skew-symmetry",
            hit.map(|(t, s)| Witness {
                arguments: names_of(&t, self.algebra.basis()),
                indices: t,
                residual: Residual::Scalar(s),
            }),
        )
    }

    /// Skew-symmetry, vanishing cyclic sum and non-degeneracy.
    pub fn check_symplectic(&self) -> Result<FormReport> {
        require_anticommutative(&self.algebra)?;
        Ok(FormReport {
            skew: self.check_skew(),
            identity: self.scalar_report("cyclic sum", |t| self.cyclic_residual(t[0], t[1], t[2])),
            nondegeneracy: self.matrix.nondegeneracy()?,
        })
    }

    /// `φ_B: A → A*`, `x ↦ B(x, ·)`; its matrix is `B^T`.
    pub fn phi(&self) -> LinearMap {
        LinearMap::new(self.matrix.transpose())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        BilinearForm {
            algebra: self.algebra.clone(),
            matrix: self.matrix.scale(c),
        }
    }
}

/// `B_r(x, y) = <T_r^{-1}(x), y>`, whose matrix is `(T_r^{-1})^T`.
pub fn b_from_r(r: &TwoTensor) -> Result<BilinearForm> {
    BilinearForm::new(r.algebra.clone(), r.coeffs.inverse()?.transpose())
}

/// Inverse of [`b_from_r`]: `coeffs = (B^T)^{-1}`.
pub fn r_from_b(b: &BilinearForm) -> Result<TwoTensor> {
    TwoTensor::new(b.algebra.clone(), b.matrix.transpose().inverse()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn twist_and_symmetry() {
        let r = fixtures::example3_5_r();
        assert!(r.is_skew());
        assert!(!r.is_symmetric());
        assert_eq!(r.twist().twist(), r);
        let mut m = Matrix::zeros(4, 4);
        m.set(0, 0, Scalar::one());
        let s = TwoTensor::new(fixtures::example2_1(), m).unwrap();
        assert!(s.is_symmetric() && !s.is_skew());
    }

    #[test]
    fn t_map_matches_the_listed_operator() {
        let t = fixtures::example3_5_r().t_map();
        assert_eq!(t, fixtures::eq3_8());
    }

    #[test]
    fn cybe_on_fixtures() {
        assert!(check_cybe(&fixtures::example3_5_r()).unwrap().holds());
        let mut m = Matrix::zeros(4, 4);
        m.set(0, 1, Scalar::one());
        m.set(1, 0, Scalar::one());
        let r = TwoTensor::new(fixtures::example2_1(), m).unwrap();
        assert!(!check_cybe(&r).unwrap().holds());
        let z = TwoTensor::new(fixtures::example2_1(), Matrix::zeros(4, 4)).unwrap();
        assert!(cybe_residual(&z).unwrap().is_zero());
    }

    #[test]
    fn b_from_r_of_fixture() {
        let b = b_from_r(&fixtures::example3_5_r()).unwrap();
        let mut expected = Matrix::zeros(4, 4);
        expected.set(0, 3, Scalar::one());
        expected.set(3, 0, Scalar::from_int(-1));
        expected.set(1, 2, Scalar::from_int(-1));
        expected.set(2, 1, Scalar::one());
        assert_eq!(b.matrix, expected);
        assert_eq!(r_from_b(&b).unwrap(), fixtures::example3_5_r());
        assert_eq!(b.check_symplectic().unwrap().verdict(), Verdict::Holds);
    }

    #[test]
    fn zero_form_is_invariant_but_degenerate() {
        let b = BilinearForm::new(fixtures::example2_1(), Matrix::zeros(4, 4)).unwrap();
        assert!(b.check_invariant().holds());
        assert_eq!(b.check_symplectic().unwrap().verdict(), Verdict::Fails);
        assert_eq!(b.phi(), LinearMap::zero(4, 4));
    }

    #[test]
    fn o_operator_scaling_is_quadratic() {
        let rep = LinearRep::coadjoint(&fixtures::example2_1()).unwrap();
        let t = LinearMap::new(Matrix::from_ints(&[&[1, 0, 2, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[1, 1, 0, 0]]));
        let base = o_residual(&t, &rep).unwrap();
        let scaled = o_residual(&t.scale(&Scalar::from_int(3)), &rep).unwrap();
        for (a, b) in base.iter().zip(&scaled) {
            assert_eq!(vector::scale(&Scalar::from_int(9), a), *b);
        }
    }
}
