//! Named reference objects: the algebras, representations, operators, tensors
//! and forms used throughout the tests and shipped as JSON under `fixtures/`.
//!
//! Operator matrices are printed in the literature with the image of the
//! `j`-th basis vector as row `j`; here they are stored transposed, so that
//! columns are images.

use crate::algebra::{default_basis, AlgebraKind, StructureTable};
use crate::linalg::Matrix;
use crate::reps::{LinearMap, LinearRep};
use crate::scalar::{parse_scalar, Ring, Scalar};
use crate::ybe::{BilinearForm, TwoTensor};

fn ring(vars: &[&str]) -> Ring {
    Ring::new(vars.iter().copied()).expect("valid ring")
}

fn parametric(r: &Ring, rows: &[&[&str]]) -> Matrix {
    Matrix::from_rows(
        rows.iter()
            .map(|row| row.iter().map(|s| parse_scalar(s, r).expect("fixture scalar")).collect())
            .collect(),
    )
    .expect("rectangular")
}

fn int(c: i64) -> Scalar {
    Scalar::from_int(c)
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// 4-dimensional non-Lie Malcev algebra:
/// `e1e2 = -e2, e1e3 = -e3, e1e4 = e4, e2e3 = 2e4`.
pub fn example2_1() -> StructureTable {
    StructureTable::anticommutative(
        default_basis("e", 4),
        Ring::rationals(),
        [(0, 1, 1, int(-1)), (0, 2, 2, int(-1)), (0, 3, 3, int(1)), (1, 2, 3, int(2))],
    )
    .expect("valid table")
}

/// Compatible pre-Malcev structure on [`example2_1`]: the same products
/// `e1·e2 = -e2, e1·e3 = -e3, e1·e4 = e4, e2·e3 = 2e4`, all others zero.
pub fn example4_1() -> StructureTable {
    StructureTable::from_entries(
        default_basis("e", 4),
        Ring::rationals(),
        AlgebraKind::General,
        [(0, 1, 1, int(-1)), (0, 2, 2, int(-1)), (0, 3, 3, int(1)), (1, 2, 3, int(2))],
    )
    .expect("valid table")
}

/// `sl2` on `x, y, z` with `[x,y] = 2y, [x,z] = -2z, [y,z] = x`.
pub fn sl2() -> StructureTable {
    StructureTable::anticommutative(
        names(&["x", "y", "z"]),
        Ring::rationals(),
        [(0, 1, 1, int(2)), (0, 2, 2, int(-2)), (1, 2, 0, int(1))],
    )
    .expect("valid table")
}

/// Two-dimensional Malcev (non-Lie) representation of [`sl2`] on `u, v`:
/// `xu = -2u, xv = 2v, yu = 0, yv = -2u, zu = -2v, zv = 0`.
pub fn sl2_v() -> LinearRep {
    LinearRep::new(
        sl2(),
        names(&["u", "v"]),
        vec![
            Matrix::from_ints(&[&[-2, 0], &[0, 2]]),
            Matrix::from_ints(&[&[0, -2], &[0, 0]]),
            Matrix::from_ints(&[&[0, 0], &[-2, 0]]),
        ],
    )
    .expect("valid representation")
}

/// Killing form of [`sl2`]: `K(x, x) = 8, K(y, z) = K(z, y) = 4`.
pub fn sl2_killing() -> BilinearForm {
    BilinearForm::new(sl2(), Matrix::from_ints(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]])).expect("valid form")
}

/// `T: A* → A`, `T(ε1) = -e4, T(ε2) = e3, T(ε3) = -e2, T(ε4) = e1`.
pub fn eq3_8() -> LinearMap {
    LinearMap::new(Matrix::from_ints(&[&[0, 0, 0, 1], &[0, 0, -1, 0], &[0, 1, 0, 0], &[-1, 0, 0, 0]]))
}

/// `r = e1⊗e4 - e4⊗e1 - e2⊗e3 + e3⊗e2` on [`example2_1`].
pub fn example3_5_r() -> TwoTensor {
    TwoTensor::new(
        example2_1(),
        Matrix::from_ints(&[&[0, 0, 0, 1], &[0, 0, -1, 0], &[0, 1, 0, 0], &[-1, 0, 0, 0]]),
    )
    .expect("valid tensor")
}

/// General skew form with vanishing cyclic sum on [`example2_1`], over
/// `Q[a, b, c, d, e]`.
pub fn example3_5_form() -> BilinearForm {
    let r = ring(&["a", "b", "c", "d", "e"]);
    let m = parametric(
        &r,
        &[&["0", "a", "b", "c"], &["-a", "0", "-c", "d"], &["-b", "c", "0", "e"], &["-c", "-d", "-e", "0"]],
    );
    BilinearForm::new(example2_1(), m).expect("valid form")
}

/// [`example3_5_form`] at `c = 1, a = b = d = e = 0`.
pub fn example3_5_form_c1() -> BilinearForm {
    BilinearForm::new(
        example2_1(),
        Matrix::from_ints(&[&[0, 0, 0, 1], &[0, 0, -1, 0], &[0, 1, 0, 0], &[-1, 0, 0, 0]]),
    )
    .expect("valid form")
}

fn transposed_map(r: &Ring, printed_rows: &[&[&str]]) -> LinearMap {
    LinearMap::new(parametric(r, printed_rows).transpose())
}

/// Coadjoint O-operator family over `Q[a, b, c, d]`.
pub fn example2_5_f1() -> LinearMap {
    transposed_map(
        &ring(&["a", "b", "c", "d"]),
        &[&["0", "0", "0", "a"], &["0", "0", "0", "b"], &["0", "0", "0", "c"], &["-a", "-b", "-c", "d"]],
    )
}

/// Coadjoint O-operator family over `Q[a, b, c, d, e, f]`.
pub fn example2_5_f2() -> LinearMap {
    transposed_map(
        &ring(&["a", "b", "c", "d", "e", "f"]),
        &[&["0", "0", "0", "0"], &["0", "0", "0", "a"], &["0", "0", "0", "b"], &["c", "d", "e", "f"]],
    )
}

/// Claimed coadjoint O-operator family over `Q[a, b, c, d, k, k^-1]`.
pub fn example2_5_f3() -> LinearMap {
    transposed_map(
        &ring(&["a", "b", "c", "d", "k"]),
        &[
            &["0", "0", "0", "a"],
            &["0", "2*a^2*k^-1", "a", "b"],
            &["0", "2*a", "k", "c"],
            &["-a", "-b", "-c", "d"],
        ],
    )
}

/// O-operator family `V → sl2` for [`sl2_v`] over `Q[a, b, c]`.
pub fn example2_6_t1() -> LinearMap {
    transposed_map(&ring(&["a", "b", "c"]), &[&["a", "2*b", "0"], &["b", "c", "0"]])
}

/// O-operator family `V → sl2` for [`sl2_v`] over `Q[a, b, c]`.
pub fn example2_6_t2() -> LinearMap {
    transposed_map(&ring(&["a", "b", "c"]), &[&["a", "0", "0"], &["b", "0", "-2*a"]])
}

/// Free positions of [`example2_5_f1`]: the last row and column.
pub fn example2_5_f1_mask() -> Vec<(usize, usize)> {
    vec![(0, 3), (1, 3), (2, 3), (3, 0), (3, 1), (3, 2), (3, 3)]
}

/// The 8-dimensional semidirect product of [`example2_1`] with its adjoint
/// representation, as a list of products on `e1..e4, x1..x4`.
pub fn example3_6() -> StructureTable {
    let mut basis = default_basis("e", 4);
    basis.extend(default_basis("x", 4));
    StructureTable::anticommutative(
        basis,
        Ring::rationals(),
        [
            (0, 1, 1, int(-1)),
            (0, 2, 2, int(-1)),
            (0, 3, 3, int(1)),
            (1, 2, 3, int(2)),
            (0, 5, 5, int(-1)),
            (0, 6, 6, int(-1)),
            (0, 7, 7, int(1)),
            (1, 6, 7, int(2)),
            (1, 4, 5, int(1)),
            (2, 4, 6, int(1)),
            (3, 4, 7, int(-1)),
            (2, 5, 7, int(-2)),
        ],
    )
    .expect("valid table")
}

/// A named fixture together with the kind of file it is stored as.
#[derive(Clone, Debug)]
pub enum Fixture {
    Algebra(StructureTable),
    Rep(LinearRep),
    Map(LinearMap),
    Tensor(TwoTensor),
    Form(BilinearForm),
}

impl Fixture {
    /// File suffix, e.g. `alg` for `example2_1.alg.json`.
    pub fn suffix(&self) -> &'static str {
        match self {
            Fixture::Algebra(_) => "alg",
            Fixture::Rep(_) => "rep",
            Fixture::Map(_) => "map",
            Fixture::Tensor(_) => "r",
            Fixture::Form(_) => "form",
        }
    }
}

pub const NAMES: [&str; 15] = [
    "example2_1",
    "example4_1",
    "sl2",
    "sl2_v",
    "sl2_killing",
    "eq3_8",
    "example3_5",
    "example3_5_form",
    "example3_5_form_c1",
    "example3_6",
    "example2_5_f1",
    "example2_5_f2",
    "example2_5_f3",
    "example2_6_t1",
    "example2_6_t2",
];

pub fn lookup(name: &str) -> Option<Fixture> {
    Some(match name {
        "example2_1" => Fixture::Algebra(example2_1()),
        "example4_1" => Fixture::Algebra(example4_1()),
        "sl2" => Fixture::Algebra(sl2()),
        "sl2_v" => Fixture::Rep(sl2_v()),
        "sl2_killing" => Fixture::Form(sl2_killing()),
        "eq3_8" => Fixture::Map(eq3_8()),
        "example3_5" => Fixture::Tensor(example3_5_r()),
        "example3_5_form" => Fixture::Form(example3_5_form()),
        "example3_5_form_c1" => Fixture::Form(example3_5_form_c1()),
        "example3_6" => Fixture::Algebra(example3_6()),
        "example2_5_f1" => Fixture::Map(example2_5_f1()),
        "example2_5_f2" => Fixture::Map(example2_5_f2()),
        "example2_5_f3" => Fixture::Map(example2_5_f3()),
        "example2_6_t1" => Fixture::Map(example2_6_t1()),
        "example2_6_t2" => Fixture::Map(example2_6_t2()),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves() {
        for name in NAMES {
            assert!(lookup(name).is_some(), "{name}");
        }
        assert!(lookup("missing").is_none());
    }

    #[test]
    fn parametric_entry_has_single_term() {
        let t = example2_5_f3();
        assert_eq!(t.matrix.get(1, 1).to_string(), "2*a^2*k^-1");
        assert!(t.matrix.get(1, 1).is_unit());
    }
}
