//! Representations of anticommutative algebras, bimodules of general ones,
//! their duals and semidirect products.
//!
//! Operators are matrices acting on column coordinate vectors: column `j` of
//! `ρ(e_i)` is the image of the `j`-th basis vector of the module.

use crate::algebra::{check_ring, default_basis, validate_basis, AlgebraKind, StructureTable};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::{all_tuples, first_failing_tuple, names_of, AxiomReport, IdentityReport, Residual, Witness};
use crate::scalar::{Ring, Scalar};
use crate::vector;

/// A linear map `V → W` given by its matrix (columns are images).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap::new(Matrix::identity(n))
    }

    pub fn zero(target_dim: usize, source_dim: usize) -> Self {
        LinearMap::new(Matrix::zeros(target_dim, source_dim))
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(v)
    }

    /// Image of the `j`-th source basis vector.
    pub fn image(&self, j: usize) -> Vec<Scalar> {
        self.matrix.column(j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if self.source_dim() != other.target_dim() {
            return Err(Error::Shape(format!(
                "cannot compose a map from dimension {} with a map into dimension {}",
                self.source_dim(),
                other.target_dim()
            )));
        }
        Ok(LinearMap::new(&self.matrix * &other.matrix))
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        Ok(LinearMap::new(self.matrix.inverse()?))
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap::new(self.matrix.scale(c))
    }
}

/// Dual basis names: `v1 ↦ v1*` and `v1* ↦ v1`.
pub fn dual_names(basis: &[String]) -> Vec<String> {
    basis
        .iter()
        .map(|b| match b.strip_suffix('*') {
            Some(stem) => stem.to_string(),
            None => format!("{b}*"),
        })
        .collect()
}

/// Module basis for a semidirect product: kept when disjoint from the algebra
/// basis, otherwise renamed `x1..xm` (or the first clash-free prefix).
pub fn semidirect_module_names(algebra: &[String], module: &[String]) -> Vec<String> {
    if module.iter().all(|m| !algebra.contains(m)) {
        return module.to_vec();
    }
    for prefix in ["x", "w", "u", "y", "z"] {
        let candidate = default_basis(prefix, module.len());
        if candidate.iter().all(|m| !algebra.contains(m)) {
            return candidate;
        }
    }
    default_basis("m_", module.len())
}

fn linear_combination(ops: &[Matrix], x: &[Scalar], dim: usize) -> Matrix {
    let mut acc = Matrix::zeros(dim, dim);
    for (c, op) in x.iter().zip(ops) {
        if !c.is_zero() {
            acc = &acc + &op.scale(c);
        }
    }
    acc
}

fn check_operators(ops: &[Matrix], algebra_dim: usize, space_dim: usize, what: &str) -> Result<()> {
    if ops.len() != algebra_dim {
        return Err(Error::Shape(format!(
            "{what}: expected {algebra_dim} operators, got {}",
            ops.len()
        )));
    }
    for op in ops {
        if op.rows() != space_dim || op.cols() != space_dim {
            return Err(Error::Shape(format!(
                "{what}: operator of shape {}x{} on a space of dimension {space_dim}",
                op.rows(),
                op.cols()
            )));
        }
    }
    Ok(())
}

fn matrix_report(
    name: &str,
    n: usize,
    basis: &[String],
    f: impl Fn(&[usize]) -> Matrix + Sync,
) -> IdentityReport {
    let hit = first_failing_tuple(n, 3, |t| {
        let m = f(t);
        (!m.is_zero()).then_some(m)
    });
    IdentityReport::new(
        name,
        hit.map(|(t, m)| Witness {
            arguments: names_of(&t, basis),
            indices: t,
            residual: Residual::Matrix(m),
        }),
    )
}

/// `(V, ρ)` with `action[i] = ρ(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRep {
    pub algebra: StructureTable,
    pub space_basis: Vec<String>,
    pub action: Vec<Matrix>,
}

impl LinearRep {
    pub fn new(algebra: StructureTable, space_basis: Vec<String>, action: Vec<Matrix>) -> Result<Self> {
        if algebra.kind() != AlgebraKind::Anticommutative {
            return Err(Error::KindMismatch {
                expected: "anticommutative",
                found: "general",
            });
        }
        validate_basis(&space_basis)?;
        check_operators(&action, algebra.dim(), space_basis.len(), "representation")?;
        check_ring(algebra.ring(), action.iter().flat_map(|m| m.entries().map(|(_, _, x)| x)))?;
        Ok(LinearRep {
            algebra,
            space_basis,
            action,
        })
    }

    pub fn space_dim(&self) -> usize {
        self.space_basis.len()
    }

    pub fn ring(&self) -> Result<Ring> {
        check_ring(self.algebra.ring(), self.action.iter().flat_map(|m| m.entries().map(|(_, _, x)| x)))
    }

    /// `ρ(x)` for a coordinate vector `x` of the algebra.
    pub fn rho(&self, x: &[Scalar]) -> Matrix {
        linear_combination(&self.action, x, self.space_dim())
    }

    /// `ρ((xy)z) - ρ(x)ρ(y)ρ(z) + ρ(z)ρ(x)ρ(y) - ρ(y)ρ(zx) + ρ(yz)ρ(x)` on
    /// basis elements.
    pub fn residual(&self, x: usize, y: usize, z: usize) -> Matrix {
        let a = &self.algebra;
        let (rx, ry, rz) = (&self.action[x], &self.action[y], &self.action[z]);
        let xy = a.basis_product(x, y);
        let lhs = self.rho(&a.multiply(&xy, &vector::unit(a.dim(), z)));
        let zx = self.rho(&a.basis_product(z, x));
        let yz = self.rho(&a.basis_product(y, z));
        let rhs = &(&(&(rx * ry) * rz) - &(&(rz * rx) * ry)) + &(&(ry * &zx) - &(&yz * rx));
        &lhs - &rhs
    }

    pub fn residual_family(&self) -> Vec<Matrix> {
        all_tuples(self.algebra.dim(), 3, |t| self.residual(t[0], t[1], t[2]))
    }

    pub fn check(&self) -> AxiomReport {
        AxiomReport::new(vec![matrix_report(
            "representation axiom",
            self.algebra.dim(),
            self.algebra.basis(),
            |t| self.residual(t[0], t[1], t[2]),
        )])
    }

    pub fn adjoint(algebra: &StructureTable) -> Result<Self> {
        let n = algebra.dim();
        let action = (0..n).map(|i| algebra.left_matrix(&vector::unit(n, i))).collect();
        Self::new(algebra.clone(), algebra.basis().to_vec(), action)
    }

    /// `ρ*(x) = -ρ(x)^T` on the dual basis.
    pub fn dual(&self) -> Self {
        LinearRep {
            algebra: self.algebra.clone(),
            space_basis: dual_names(&self.space_basis),
            action: self.action.iter().map(|m| -&m.transpose()).collect(),
        }
    }

    pub fn coadjoint(algebra: &StructureTable) -> Result<Self> {
        Ok(Self::adjoint(algebra)?.dual())
    }

    pub fn zero(algebra: &StructureTable, space_basis: Vec<String>) -> Result<Self> {
        let m = space_basis.len();
        Self::new(algebra.clone(), space_basis, vec![Matrix::zeros(m, m); algebra.dim()])
    }

    /// `A ⋉ V` with `(x, u)(y, v) = (xy, ρ(x)v - ρ(y)u)`, algebra basis first.
    pub fn semidirect(&self) -> StructureTable {
        let a = &self.algebra;
        let n = a.dim();
        let mut entries: Vec<(usize, usize, usize, Scalar)> =
            a.entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
        for (i, op) in self.action.iter().enumerate() {
            for (k, j, c) in op.entries() {
                if !c.is_zero() {
                    entries.push((i, n + j, n + k, c.clone()));
                    entries.push((n + j, i, n + k, -c));
                }
            }
        }
        let mut basis = a.basis().to_vec();
        basis.extend(semidirect_module_names(a.basis(), &self.space_basis));
        let ring = self.ring().expect("validated at construction");
        StructureTable::from_entries(basis, ring, AlgebraKind::Anticommutative, entries)
            .expect("semidirect table is anticommutative")
    }

    /// Checks `ρ1(e_i) φ = φ ρ2(e_i)` for all `i` and invertibility of `φ`,
    /// where `φ: V2 → V1`.
    pub fn check_iso(phi: &LinearMap, r1: &LinearRep, r2: &LinearRep) -> Result<AxiomReport> {
        if r1.algebra != r2.algebra {
            return Err(Error::Shape("representations of different algebras".into()));
        }
        if phi.target_dim() != r1.space_dim() || phi.source_dim() != r2.space_dim() {
            return Err(Error::Shape(format!(
                "map of shape {}x{} between spaces of dimension {} and {}",
                phi.target_dim(),
                phi.source_dim(),
                r2.space_dim(),
                r1.space_dim()
            )));
        }
        let invertible = if phi.matrix.is_square() {
            let det = phi.matrix.determinant()?;
            (!det.is_unit()).then(|| Witness {
                indices: vec![],
                arguments: vec![],
                residual: Residual::Scalar(det),
            })
        } else {
            Some(Witness {
                indices: vec![],
                arguments: vec![],
                residual: Residual::Scalar(Scalar::zero()),
            })
        };
        let n = r1.algebra.dim();
        let first = (0..n).find_map(|i| {
            let d = &(&r1.action[i] * &phi.matrix) - &(&phi.matrix * &r2.action[i]);
            (!d.is_zero()).then(|| Witness {
                indices: vec![i],
                arguments: vec![r1.algebra.basis()[i].clone()],
                residual: Residual::Matrix(d),
            })
        });
        Ok(AxiomReport::new(vec![
            IdentityReport::new("invertible (unit determinant)", invertible),
            IdentityReport::new("intertwining", first),
        ]))
    }
}

/// `(V, ℓ, 𝔯)` with `left[i] = ℓ(e_i)` and `right[i] = 𝔯(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    pub algebra: StructureTable,
    pub space_basis: Vec<String>,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

/// Names of the four bimodule axioms, in the order of [`Bimodule::residuals`].
pub const BIMODULE_AXIOMS: [&str; 4] = [
    "bimodule axiom rrr",
    "bimodule axiom rrl",
    "bimodule axiom rl(yz)",
    "bimodule axiom l((xy)z)",
];

impl Bimodule {
    pub fn new(
        algebra: StructureTable,
        space_basis: Vec<String>,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
    ) -> Result<Self> {
        validate_basis(&space_basis)?;
        check_operators(&left, algebra.dim(), space_basis.len(), "left action")?;
        check_operators(&right, algebra.dim(), space_basis.len(), "right action")?;
        let b = Bimodule {
            algebra,
            space_basis,
            left,
            right,
        };
        b.ring()?;
        Ok(b)
    }

    pub fn space_dim(&self) -> usize {
        self.space_basis.len()
    }

    pub fn ring(&self) -> Result<Ring> {
        check_ring(
            self.algebra.ring(),
            self.left.iter().chain(&self.right).flat_map(|m| m.entries().map(|(_, _, x)| x)),
        )
    }

    pub fn l(&self, x: &[Scalar]) -> Matrix {
        linear_combination(&self.left, x, self.space_dim())
    }

    pub fn r(&self, x: &[Scalar]) -> Matrix {
        linear_combination(&self.right, x, self.space_dim())
    }

    /// The four bimodule identities at basis elements `(x, y, z)`, each the
    /// left-hand side of an identity of the form `... = 0`.
    pub fn residuals(&self, x: usize, y: usize, z: usize) -> [Matrix; 4] {
        let a = &self.algebra;
        let n = a.dim();
        let m = |u: &[Scalar], v: &[Scalar]| a.multiply(u, v);
        let (ex, ey, ez) = (vector::unit(n, x), vector::unit(n, y), vector::unit(n, z));
        let (lx, ly, lz) = (&self.left[x], &self.left[y], &self.left[z]);
        let (rx, ry, rz) = (&self.right[x], &self.right[y], &self.right[z]);
        let (xy, yx) = (m(&ex, &ey), m(&ey, &ex));
        let (yz, zy) = (m(&ey, &ez), m(&ez, &ey));
        let (zx, xz) = (m(&ez, &ex), m(&ex, &ez));
        let p3 = |a: &Matrix, b: &Matrix, c: &Matrix| &(a * b) * c;
        let sum = |terms: Vec<(i64, Matrix)>| {
            let d = self.space_dim();
            terms
                .into_iter()
                .fold(Matrix::zeros(d, d), |acc, (s, t)| if s > 0 { &acc + &t } else { &acc - &t })
        };

        let rrr = sum(vec![
            (1, p3(rx, ry, rz)),
            (-1, p3(rx, ry, lz)),
            (-1, p3(rx, ly, rz)),
            (1, p3(rx, ly, lz)),
            (-1, self.r(&m(&ez, &yx))),
            (1, ly * &self.r(&zx)),
            (1, &self.l(&zy) * rx),
            (-1, &self.l(&yz) * rx),
            (-1, p3(lz, rx, ly)),
            (1, p3(lz, rx, ry)),
        ]);
        let rrl = sum(vec![
            (1, p3(rx, ry, lz)),
            (-1, p3(rx, ry, rz)),
            (-1, p3(rx, ly, lz)),
            (1, p3(rx, ly, rz)),
            (-1, lz * &self.r(&yx)),
            (1, p3(ly, lz, rx)),
            (1, &self.r(&zx) * ry),
            (-1, &self.r(&zx) * ly),
            (-1, self.r(&m(&yz, &ex))),
            (1, self.r(&m(&zy, &ex))),
        ]);
        let rlyz = sum(vec![
            (1, rx * &self.l(&yz)),
            (-1, rx * &self.l(&zy)),
            (-1, rx * &self.r(&yz)),
            (1, rx * &self.r(&zy)),
            (-1, p3(ly, lz, rx)),
            (1, self.r(&m(&ey, &zx))),
            (1, &self.r(&yx) * lz),
            (-1, &self.r(&yx) * rz),
            (-1, p3(lz, rx, ry)),
            (1, p3(lz, rx, ly)),
        ]);
        let lxyz = sum(vec![
            (1, self.l(&m(&xy, &ez))),
            (-1, self.l(&m(&yx, &ez))),
            (-1, self.l(&m(&ez, &xy))),
            (1, self.l(&m(&ez, &yx))),
            (-1, p3(lx, ly, lz)),
            (1, p3(lz, lx, ly)),
            (1, &self.l(&yz) * lx),
            (-1, &self.l(&zy) * lx),
            (-1, ly * &self.l(&zx)),
            (1, ly * &self.l(&xz)),
        ]);
        [rrr, rrl, rlyz, lxyz]
    }

    /// Flattened residuals of axiom `axiom` (0-based) over all basis triples.
    pub fn residual_family(&self, axiom: usize) -> Vec<Matrix> {
        all_tuples(self.algebra.dim(), 3, |t| {
            let [a, b, c, d] = self.residuals(t[0], t[1], t[2]);
            [a, b, c, d].into_iter().nth(axiom).expect("axiom index")
        })
    }

    pub fn check(&self) -> AxiomReport {
        let n = self.algebra.dim();
        let basis = self.algebra.basis();
        AxiomReport::new(
            (0..4)
                .map(|axiom| {
                    matrix_report(BIMODULE_AXIOMS[axiom], n, basis, |t| {
                        let all = self.residuals(t[0], t[1], t[2]);
                        all.into_iter().nth(axiom).expect("axiom index")
                    })
                })
                .collect(),
        )
    }

    /// `(A, L, R)` with `L_x y = x·y` and `R_x y = y·x`.
    pub fn regular(algebra: &StructureTable) -> Self {
        let n = algebra.dim();
        let left = (0..n).map(|i| algebra.left_matrix(&vector::unit(n, i))).collect();
        let right = (0..n).map(|i| algebra.right_matrix(&vector::unit(n, i))).collect();
        Bimodule {
            algebra: algebra.clone(),
            space_basis: algebra.basis().to_vec(),
            left,
            right,
        }
    }

    /// `(A, L, 0)`.
    pub fn left_only(algebra: &StructureTable) -> Self {
        let n = algebra.dim();
        let mut b = Self::regular(algebra);
        b.right = vec![Matrix::zeros(n, n); n];
        b
    }

    pub fn zero(algebra: &StructureTable, space_basis: Vec<String>) -> Result<Self> {
        let m = space_basis.len();
        let ops = vec![Matrix::zeros(m, m); algebra.dim()];
        Self::new(algebra.clone(), space_basis, ops.clone(), ops)
    }

    /// `(V*, ℓ* - 𝔯*, -𝔯*)` where `ℓ*_x = -ℓ_x^T` and `𝔯*_x = -𝔯_x^T`.
    pub fn dual(&self) -> Self {
        let left = self
            .left
            .iter()
            .zip(&self.right)
            .map(|(l, r)| &r.transpose() - &l.transpose())
            .collect();
        let right = self.right.iter().map(Matrix::transpose).collect();
        Bimodule {
            algebra: self.algebra.clone(),
            space_basis: dual_names(&self.space_basis),
            left,
            right,
        }
    }

    /// `A ⋉ V` with `(x, u)·(y, v) = (x·y, ℓ_x v + 𝔯_y u)`.
    pub fn semidirect(&self) -> StructureTable {
        let a = &self.algebra;
        let n = a.dim();
        let mut entries: Vec<(usize, usize, usize, Scalar)> =
            a.entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
        for i in 0..n {
            for (k, j, c) in self.left[i].entries() {
                if !c.is_zero() {
                    entries.push((i, n + j, n + k, c.clone()));
                }
            }
            for (k, j, c) in self.right[i].entries() {
                if !c.is_zero() {
                    entries.push((n + j, i, n + k, c.clone()));
                }
            }
        }
        let mut basis = a.basis().to_vec();
        basis.extend(semidirect_module_names(a.basis(), &self.space_basis));
        let ring = self.ring().expect("validated at construction");
        StructureTable::from_entries(basis, ring, AlgebraKind::General, entries).expect("valid table")
    }

    /// `(V, ℓ)` and `(V, ℓ - 𝔯)` as representations of the commutator algebra.
    pub fn induced_reps(&self) -> (LinearRep, LinearRep) {
        let c = self.algebra.commutator_algebra();
        let diff = self.left.iter().zip(&self.right).map(|(l, r)| l - r).collect();
        (
            LinearRep {
                algebra: c.clone(),
                space_basis: self.space_basis.clone(),
                action: self.left.clone(),
            },
            LinearRep {
                algebra: c,
                space_basis: self.space_basis.clone(),
                action: diff,
            },
        )
    }
}

/// `(A, L)` as a representation of the commutator algebra of `A`.
pub fn left_rep(algebra: &StructureTable) -> LinearRep {
    Bimodule::left_only(algebra).induced_reps().0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn adjoint_of_first_basis_vector() {
        let a = fixtures::example2_1();
        let ad = LinearRep::adjoint(&a).unwrap();
        let expected = Matrix::from_ints(&[&[0, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 1]]);
        assert_eq!(ad.action[0], expected);
        assert!(ad.check().holds());
        assert!(LinearRep::coadjoint(&a).unwrap().check().holds());
    }

    #[test]
    fn dual_is_an_involution() {
        let r = fixtures::sl2_v();
        assert_eq!(r.dual().dual(), r);
        assert_eq!(r.dual().space_basis, vec!["u*", "v*"]);
    }

    #[test]
    fn sl2_two_dimensional_rep() {
        assert!(fixtures::sl2_v().check().holds());
        assert!(LinearRep::zero(&fixtures::sl2(), default_basis("v", 3)).unwrap().check().holds());
    }

    #[test]
    fn semidirect_with_adjoint_relabels_module() {
        let a = fixtures::example2_1();
        let s = LinearRep::adjoint(&a).unwrap().semidirect();
        assert_eq!(s.basis()[4..], ["x1", "x2", "x3", "x4"]);
        assert!(s.check_malcev().unwrap().holds());
    }

    #[test]
    fn regular_bimodule_of_pre_malcev_example() {
        let pm = fixtures::example4_1();
        let b = Bimodule::regular(&pm);
        let l1 = Matrix::from_ints(&[&[0, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 1]]);
        assert_eq!(b.left[0], l1);
        assert!(b.right[0].column(1).iter().all(Scalar::is_zero));
        assert!(b.check().holds());
        assert!(b.dual().check().holds());
        assert!(Bimodule::left_only(&pm).check().holds());
        assert!(Bimodule::left_only(&pm).dual().check().holds());
    }

    #[test]
    fn induced_reps_are_reps() {
        let pm = fixtures::example4_1();
        let (l, ad) = Bimodule::regular(&pm).induced_reps();
        assert_eq!(l.algebra, fixtures::example2_1());
        assert!(l.check().holds());
        assert!(ad.check().holds());
        assert_eq!(ad.action, LinearRep::adjoint(&fixtures::example2_1()).unwrap().action);
    }

    #[test]
    fn rep_iso_identity_and_zero() {
        let ad = LinearRep::adjoint(&fixtures::example2_1()).unwrap();
        assert!(LinearRep::check_iso(&LinearMap::identity(4), &ad, &ad).unwrap().holds());
        assert!(!LinearRep::check_iso(&LinearMap::zero(4, 4), &ad, &ad).unwrap().holds());
        assert!(LinearRep::check_iso(&LinearMap::zero(3, 4), &ad, &ad).is_err());
    }
}
