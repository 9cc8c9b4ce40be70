//! Based algebras given by structure constants, and the polynomial identities
//! that single out Malcev, Lie and pre-Malcev algebras.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::{all_tuples, first_failing_tuple, names_of, IdentityReport, Residual, Witness};
use crate::scalar::{Ring, Scalar};
use crate::vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Anticommutative,
    General,
}

impl AlgebraKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraKind::Anticommutative => "anticommutative",
            AlgebraKind::General => "general",
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Products `e_i e_j = Σ_k c_ij^k e_k` on a named basis.
///
/// Only nonzero products are stored. For anticommutative tables both `(i, j)`
/// and `(j, i)` are present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    basis: Vec<String>,
    ring: Ring,
    kind: AlgebraKind,
    products: BTreeMap<(usize, usize), Vec<Scalar>>,
}

pub fn default_basis(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

pub(crate) fn validate_basis(basis: &[String]) -> Result<()> {
    for (i, name) in basis.iter().enumerate() {
        if name.is_empty() || name.chars().any(|c| c.is_whitespace() || "+-(),".contains(c)) {
            return Err(Error::Basis(format!("invalid basis name `{name}`")));
        }
        if basis[..i].contains(name) {
            return Err(Error::Basis(format!("duplicate basis name `{name}`")));
        }
    }
    Ok(())
}

/// Common ring of `ring` and every entry, so mixed inputs fail early.
pub(crate) fn check_ring<'a>(ring: &Ring, scalars: impl IntoIterator<Item = &'a Scalar>) -> Result<Ring> {
    let mut ring = ring.clone();
    for s in scalars {
        if let Some(r) = s.ring() {
            ring = ring.unify(r)?;
        }
    }
    Ok(ring)
}

impl StructureTable {
    /// Builds a table from `(i, j, k, c)` entries meaning `c_ij^k = c`.
    /// Repeated entries accumulate. Anticommutative tables are validated.
    pub fn from_entries(
        basis: Vec<String>,
        ring: Ring,
        kind: AlgebraKind,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        validate_basis(&basis)?;
        let n = basis.len();
        let mut products: BTreeMap<(usize, usize), Vec<Scalar>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            for index in [i, j, k] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, dim: n });
                }
            }
            let slot = products.entry((i, j)).or_insert_with(|| vector::zeros(n));
            slot[k] = slot[k].try_add(&c)?;
        }
        products.retain(|_, v| !vector::is_zero(v));
        let ring = check_ring(&ring, products.values().flatten())?;
        let table = StructureTable {
            basis,
            ring,
            kind,
            products,
        };
        if kind == AlgebraKind::Anticommutative {
            if let Some(((i, j), (k, residual))) = table.first_antisymmetry_defect() {
                return Err(Error::NotAnticommutative { i, j, k, residual });
            }
        }
        Ok(table)
    }

    /// Anticommutative table from entries with `i < j` only; the remaining
    /// products follow from `e_j e_i = -e_i e_j` and `e_i e_i = 0`.
    pub fn anticommutative(
        basis: Vec<String>,
        ring: Ring,
        upper: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, j, k, c) in upper {
            if i >= j {
                if c.is_zero() {
                    continue;
                }
                return Err(Error::Basis(format!(
                    "anticommutative tables list only pairs i < j, got ({i}, {j})"
                )));
            }
            entries.push((j, i, k, -&c));
            entries.push((i, j, k, c));
        }
        Self::from_entries(basis, ring, AlgebraKind::Anticommutative, entries)
    }

    pub fn zero(basis: Vec<String>, kind: AlgebraKind) -> Result<Self> {
        Self::from_entries(basis, Ring::rationals(), kind, std::iter::empty())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn with_basis(mut self, basis: Vec<String>) -> Result<Self> {
        if basis.len() != self.dim() {
            return Err(Error::Shape(format!("basis of length {} for dimension {}", basis.len(), self.dim())));
        }
        validate_basis(&basis)?;
        self.basis = basis;
        Ok(self)
    }

    /// Same constants tagged `general`; anticommutativity is still checkable.
    pub fn as_general(&self) -> Self {
        StructureTable {
            kind: AlgebraKind::General,
            ..self.clone()
        }
    }

    /// Coordinates of `e_i e_j`, or `None` when the product is zero.
    pub fn product(&self, i: usize, j: usize) -> Option<&[Scalar]> {
        self.products.get(&(i, j)).map(Vec::as_slice)
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.product(i, j).map_or_else(Scalar::zero, |v| v[k].clone())
    }

    /// Nonzero `(i, j, k, c_ij^k)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.products
            .iter()
            .flat_map(|(&(i, j), v)| v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (i, j, k, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.products.is_empty()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.product(i, j).map_or_else(|| vector::zeros(self.dim()), <[Scalar]>::to_vec)
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        assert_eq!(x.len(), n, "left factor has wrong dimension");
        assert_eq!(y.len(), n, "right factor has wrong dimension");
        let mut out = vector::zeros(n);
        for (&(i, j), v) in &self.products {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            vector::axpy(&mut out, &(&x[i] * &y[j]), v);
        }
        out
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.multiply(x, &vector::unit(n, j))).collect();
        Matrix::from_fn(n, n, |k, j| cols[j][k].clone())
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.multiply(&vector::unit(n, j), x)).collect();
        Matrix::from_fn(n, n, |k, j| cols[j][k].clone())
    }

    /// The algebra on the same space with product `x y - y x`.
    pub fn commutator_algebra(&self) -> StructureTable {
        let mut entries = Vec::new();
        for (i, j, k, c) in self.entries() {
            entries.push((i, j, k, c.clone()));
            entries.push((j, i, k, -c));
        }
        Self::from_entries(self.basis.clone(), self.ring.clone(), AlgebraKind::Anticommutative, entries)
            .expect("commutator table is anticommutative")
    }

    fn unit(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.dim(), i)
    }

    fn require_anticommutative(&self) -> Result<()> {
        match self.kind {
            AlgebraKind::Anticommutative => Ok(()),
            AlgebraKind::General => Err(Error::KindMismatch {
                expected: "anticommutative",
                found: "general",
            }),
        }
    }

    fn first_antisymmetry_defect(&self) -> Option<((usize, usize), (usize, Scalar))> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let s = vector::add(&self.basis_product(i, j), &self.basis_product(j, i));
                if let Some(k) = s.iter().position(|c| !c.is_zero()) {
                    return Some(((i, j), (k, s[k].clone())));
                }
            }
        }
        None
    }

    fn vector_residual(&self, coords: Vec<Scalar>) -> Residual {
        Residual::Vector {
            coords,
            basis: self.basis.clone(),
        }
    }

    fn report_tuples(&self, name: &str, arity: usize, f: impl Fn(&[usize]) -> Vec<Scalar> + Sync) -> IdentityReport {
        let hit = first_failing_tuple(self.dim(), arity, |t| {
            let r = f(t);
            (!vector::is_zero(&r)).then_some(r)
        });
        IdentityReport::new(
            name,
            hit.map(|(t, r)| Witness {
                arguments: names_of(&t, &self.basis),
                indices: t,
                residual: self.vector_residual(r),
            }),
        )
    }

    /// `e_i e_j + e_j e_i` over all pairs.
    pub fn check_anticommutative(&self) -> IdentityReport {
        self.report_tuples("anticommutativity", 2, |t| {
            vector::add(&self.basis_product(t[0], t[1]), &self.basis_product(t[1], t[0]))
        })
    }

    /// `(xy)(xz) - ((xy)z)x - ((yz)x)x - ((zx)x)y`.
    pub fn malcev_residual(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vec<Scalar>> {
        self.require_anticommutative()?;
        Ok(self.malcev_unchecked(x, y, z))
    }

    fn malcev_unchecked(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let m = |a: &[Scalar], b: &[Scalar]| self.multiply(a, b);
        let xy = m(x, y);
        let lhs = m(&xy, &m(x, z));
        let t1 = m(&m(&xy, z), x);
        let t2 = m(&m(&m(y, z), x), x);
        let t3 = m(&m(&m(z, x), x), y);
        vector::combine(self.dim(), [(1, &lhs[..]), (-1, &t1[..]), (-1, &t2[..]), (-1, &t3[..])])
    }

    /// Residuals at `(e_i, e_k, e_l)` for all triples, then at
    /// `(e_i + e_j, e_k, e_l)` for `i < j`, both in lexicographic order.
    ///
    /// The identity is quadratic in its first argument and linear in the
    /// others, so it holds on the whole algebra iff all of these vanish.
    pub fn malcev_family(&self) -> Result<Vec<(Vec<usize>, Vec<Scalar>)>> {
        self.require_anticommutative()?;
        let mut out: Vec<(Vec<usize>, Vec<Scalar>)> = all_tuples(self.dim(), 3, |t| {
            (t.to_vec(), self.malcev_unchecked(&self.unit(t[0]), &self.unit(t[1]), &self.unit(t[2])))
        });
        out.extend(
            all_tuples(self.dim(), 4, |t| {
                (t[0] < t[1]).then(|| (t.to_vec(), self.polarized_malcev(t)))
            })
            .into_iter()
            .flatten(),
        );
        Ok(out)
    }

    fn polarized_malcev(&self, t: &[usize]) -> Vec<Scalar> {
        let x = vector::add(&self.unit(t[0]), &self.unit(t[1]));
        self.malcev_unchecked(&x, &self.unit(t[2]), &self.unit(t[3]))
    }

    pub fn check_malcev(&self) -> Result<IdentityReport> {
        self.require_anticommutative()?;
        let name = "Malcev identity";
        let diagonal = self.report_tuples(name, 3, |t| {
            self.malcev_unchecked(&self.unit(t[0]), &self.unit(t[1]), &self.unit(t[2]))
        });
        if !diagonal.holds() {
            return Ok(diagonal);
        }
        let hit = first_failing_tuple(self.dim(), 4, |t| {
            if t[0] >= t[1] {
                return None;
            }
            let r = self.polarized_malcev(t);
            (!vector::is_zero(&r)).then_some(r)
        });
        Ok(IdentityReport::new(
            name,
            hit.map(|(t, r)| Witness {
                arguments: vec![
                    format!("{} + {}", self.basis[t[0]], self.basis[t[1]]),
                    self.basis[t[2]].clone(),
                    self.basis[t[3]].clone(),
                ],
                indices: t,
                residual: self.vector_residual(r),
            }),
        ))
    }

    /// `(xz)(yt) - ((xy)z)t - ((yz)t)x - ((zt)x)y - ((tx)y)z`.
    pub fn sagle_residual(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar], t: &[Scalar]) -> Result<Vec<Scalar>> {
        self.require_anticommutative()?;
        Ok(self.sagle_unchecked(x, y, z, t))
    }

    fn sagle_unchecked(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar], t: &[Scalar]) -> Vec<Scalar> {
        let m = |a: &[Scalar], b: &[Scalar]| self.multiply(a, b);
        let lhs = m(&m(x, z), &m(y, t));
        let t1 = m(&m(&m(x, y), z), t);
        let t2 = m(&m(&m(y, z), t), x);
        let t3 = m(&m(&m(z, t), x), y);
        let t4 = m(&m(&m(t, x), y), z);
        vector::combine(
            self.dim(),
            [(1, &lhs[..]), (-1, &t1[..]), (-1, &t2[..]), (-1, &t3[..]), (-1, &t4[..])],
        )
    }

    pub fn sagle_family(&self) -> Result<Vec<Vec<Scalar>>> {
        self.require_anticommutative()?;
        Ok(all_tuples(self.dim(), 4, |t| self.sagle_at(t)))
    }

    fn sagle_at(&self, t: &[usize]) -> Vec<Scalar> {
        self.sagle_unchecked(&self.unit(t[0]), &self.unit(t[1]), &self.unit(t[2]), &self.unit(t[3]))
    }

    pub fn check_sagle(&self) -> Result<IdentityReport> {
        self.require_anticommutative()?;
        Ok(self.report_tuples("Sagle identity", 4, |t| self.sagle_at(t)))
    }

    /// `(xy)z + (yz)x + (zx)y`.
    pub fn jacobi_residual(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vec<Scalar>> {
        self.require_anticommutative()?;
        Ok(self.jacobi_unchecked(x, y, z))
    }

    fn jacobi_unchecked(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let m = |a: &[Scalar], b: &[Scalar]| self.multiply(a, b);
        let t1 = m(&m(x, y), z);
        let t2 = m(&m(y, z), x);
        let t3 = m(&m(z, x), y);
        vector::combine(self.dim(), [(1, &t1[..]), (1, &t2[..]), (1, &t3[..])])
    }

    pub fn jacobi_family(&self) -> Result<Vec<Vec<Scalar>>> {
        self.require_anticommutative()?;
        Ok(all_tuples(self.dim(), 3, |t| self.jacobi_at(t)))
    }

    fn jacobi_at(&self, t: &[usize]) -> Vec<Scalar> {
        self.jacobi_unchecked(&self.unit(t[0]), &self.unit(t[1]), &self.unit(t[2]))
    }

    pub fn check_jacobi(&self) -> Result<IdentityReport> {
        self.require_anticommutative()?;
        Ok(self.report_tuples("Jacobi identity", 3, |t| self.jacobi_at(t)))
    }

    /// The ten-term pre-Malcev polynomial
    ///
    /// ```text
    /// (y.z).(x.t) - (z.y).(x.t) + ((x.y).z).t - ((y.x).z).t + (z.(y.x)).t
    ///   - (z.(x.y)).t + y.((x.z).t) - y.((z.x).t) + z.(x.(y.t)) - x.(y.(z.t))
    /// ```
    pub fn pre_malcev_residual(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar], t: &[Scalar]) -> Vec<Scalar> {
        let m = |a: &[Scalar], b: &[Scalar]| self.multiply(a, b);
        let (xy, yx) = (m(x, y), m(y, x));
        let (xz, zx) = (m(x, z), m(z, x));
        let (yz, zy) = (m(y, z), m(z, y));
        let xt = m(x, t);
        let terms = [
            (1, m(&yz, &xt)),
            (-1, m(&zy, &xt)),
            (1, m(&m(&xy, z), t)),
            (-1, m(&m(&yx, z), t)),
            (1, m(&m(z, &yx), t)),
            (-1, m(&m(z, &xy), t)),
            (1, m(y, &m(&xz, t))),
            (-1, m(y, &m(&zx, t))),
            (1, m(z, &m(x, &m(y, t)))),
            (-1, m(x, &m(y, &m(z, t)))),
        ];
        vector::combine(self.dim(), terms.iter().map(|(s, v)| (*s, &v[..])))
    }

    pub fn pre_malcev_family(&self) -> Vec<Vec<Scalar>> {
        all_tuples(self.dim(), 4, |t| self.pre_malcev_at(t))
    }

    fn pre_malcev_at(&self, t: &[usize]) -> Vec<Scalar> {
        self.pre_malcev_residual(&self.unit(t[0]), &self.unit(t[1]), &self.unit(t[2]), &self.unit(t[3]))
    }

    pub fn check_pre_malcev(&self) -> IdentityReport {
        self.report_tuples("pre-Malcev identity", 4, |t| self.pre_malcev_at(t))
    }

    /// Human-readable list of nonzero products, e.g. `e1e2 = -e2`.
    pub fn render_products(&self) -> Vec<String> {
        self.products
            .iter()
            .map(|(&(i, j), v)| {
                let sep = if self.kind == AlgebraKind::General { "." } else { "" };
                format!(
                    "{}{sep}{} = {}",
                    self.basis[i],
                    self.basis[j],
                    vector::render_combination(v, &self.basis)
                )
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn e(n: usize, i: usize) -> Vec<Scalar> {
        vector::unit(n, i)
    }

    #[test]
    fn products_of_the_four_dimensional_malcev_algebra() {
        let a = fixtures::example2_1();
        assert_eq!(a.multiply(&e(4, 0), &e(4, 1)), vector::neg(&e(4, 1)));
        assert_eq!(a.multiply(&e(4, 1), &e(4, 2)), vector::scale(&Scalar::from_int(2), &e(4, 3)));
        assert_eq!(a.multiply(&e(4, 2), &e(4, 1)), vector::scale(&Scalar::from_int(-2), &e(4, 3)));
        assert_eq!(a.multiply(&vector::zeros(4), &e(4, 1)), vector::zeros(4));
    }

    #[test]
    fn malcev_residual_at_first_triple_vanishes() {
        let a = fixtures::example2_1();
        assert!(vector::is_zero(&a.malcev_residual(&e(4, 0), &e(4, 1), &e(4, 2)).unwrap()));
    }

    #[test]
    fn jacobi_witness() {
        let a = fixtures::example2_1();
        let r = a.jacobi_residual(&e(4, 0), &e(4, 1), &e(4, 2)).unwrap();
        assert_eq!(vector::render_combination(&r, a.basis()), "-6*e4");
        let report = a.check_jacobi().unwrap();
        let w = report.witness.unwrap();
        assert_eq!(w.indices, vec![0, 1, 2]);
        assert_eq!(w.residual.to_string(), "-6*e4");
    }

    #[test]
    fn anticommutativity_witness() {
        let a = StructureTable::from_entries(
            default_basis("e", 2),
            Ring::rationals(),
            AlgebraKind::General,
            [(0, 0, 1, Scalar::one())],
        )
        .unwrap();
        let w = a.check_anticommutative().witness.unwrap();
        assert_eq!(w.indices, vec![0, 0]);
        assert_eq!(w.residual.to_string(), "2*e2");
        assert!(StructureTable::from_entries(
            default_basis("e", 2),
            Ring::rationals(),
            AlgebraKind::Anticommutative,
            [(0, 0, 1, Scalar::one())],
        )
        .is_err());
    }

    #[test]
    fn zero_and_empty_tables_pass_everything() {
        for n in [0, 3] {
            let z = StructureTable::zero(default_basis("e", n), AlgebraKind::Anticommutative).unwrap();
            assert!(z.check_anticommutative().holds());
            assert!(z.check_malcev().unwrap().holds());
            assert!(z.check_sagle().unwrap().holds());
            assert!(z.check_jacobi().unwrap().holds());
            assert!(z.check_pre_malcev().holds());
        }
    }

    #[test]
    fn kind_is_enforced() {
        let pm = fixtures::example4_1();
        assert!(matches!(pm.check_malcev(), Err(Error::KindMismatch { .. })));
        assert!(pm.check_pre_malcev().holds());
    }

    #[test]
    fn one_dimensional_idempotent_is_pre_malcev() {
        let a = StructureTable::from_entries(
            default_basis("e", 1),
            Ring::rationals(),
            AlgebraKind::General,
            [(0, 0, 0, Scalar::one())],
        )
        .unwrap();
        assert!(a.check_pre_malcev().holds());
        assert!(a.commutator_algebra().is_zero());
    }

    #[test]
    fn commutator_recovers_the_malcev_algebra() {
        assert_eq!(fixtures::example4_1().commutator_algebra(), fixtures::example2_1());
        let a = fixtures::example2_1();
        let doubled = a.commutator_algebra();
        for (i, j, k, c) in a.entries() {
            assert_eq!(doubled.constant(i, j, k), c * Scalar::from_int(2));
        }
    }

    #[test]
    fn flipped_sign_breaks_malcev_and_sagle() {
        let a = fixtures::example2_1();
        let flipped = StructureTable::anticommutative(
            a.basis().to_vec(),
            Ring::rationals(),
            [
                (0, 1, 1, Scalar::one()),
                (0, 2, 2, Scalar::from_int(-1)),
                (0, 3, 3, Scalar::one()),
                (1, 2, 3, Scalar::from_int(2)),
            ],
        )
        .unwrap();
        assert!(!flipped.check_sagle().unwrap().holds());
        assert!(!flipped.check_malcev().unwrap().holds());
    }

    #[test]
    fn lie_algebra_passes_jacobi_and_malcev() {
        let s = fixtures::sl2();
        assert!(s.check_jacobi().unwrap().holds());
        assert!(s.check_malcev().unwrap().holds());
        assert!(s.check_sagle().unwrap().holds());
    }
}
