//! Seeded random instances and engine-versus-oracle comparisons shared by the
//! integration suites.

use malcev_core::algebra::{default_basis, AlgebraKind};
use malcev_core::vector;
use malcev_core::{LinearMap, Matrix, Ring, Scalar, StructureTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub mod diff;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn coeff(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::from_int(rng.gen_range(-2..=2))
}

/// Zero with probability `1 - density`, otherwise a nonzero value in -2..=2.
pub fn sparse_coeff(rng: &mut ChaCha8Rng, density: f64) -> Scalar {
    if rng.gen_bool(density) {
        let v = [-2, -1, 1, 2][rng.gen_range(0..4)];
        Scalar::from_int(v)
    } else {
        Scalar::zero()
    }
}

pub fn matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| coeff(rng))
}

pub fn sparse_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, density: f64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| sparse_coeff(rng, density))
}

pub fn skew_matrix(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let c = sparse_coeff(rng, density);
            m.set(j, i, -&c);
            m.set(i, j, c);
        }
    }
    m
}

pub fn symmetric_matrix(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let c = sparse_coeff(rng, density);
            m.set(j, i, c.clone());
            m.set(i, j, c);
        }
    }
    m
}

pub fn invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let m = matrix(rng, n, n);
        if !m.determinant().unwrap().is_zero() {
            return m;
        }
    }
}

/// Determinant ±1 with small entries: a signed permutation times a few
/// elementary shears.
pub fn unimodular(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut m = Matrix::from_fn(n, n, |i, j| {
        if perm[i] == j {
            Scalar::from_int(if rng.gen_bool(0.5) { 1 } else { -1 })
        } else {
            Scalar::zero()
        }
    });
    for _ in 0..n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i != j {
            let c = Scalar::from_int([-1, 1][rng.gen_range(0..2)]);
            let mut row = m.row(i);
            vector::axpy(&mut row, &c, &m.row(j));
            for (k, x) in row.into_iter().enumerate() {
                m.set(i, k, x);
            }
        }
    }
    m
}

pub fn invertible_map(rng: &mut ChaCha8Rng, n: usize) -> LinearMap {
    LinearMap::new(invertible(rng, n))
}

pub fn anticommutative(rng: &mut ChaCha8Rng, n: usize, density: f64) -> StructureTable {
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                entries.push((i, j, k, sparse_coeff(rng, density)));
            }
        }
    }
    StructureTable::anticommutative(default_basis("e", n), Ring::rationals(), entries).unwrap()
}

pub fn general(rng: &mut ChaCha8Rng, n: usize, density: f64) -> StructureTable {
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                entries.push((i, j, k, sparse_coeff(rng, density)));
            }
        }
    }
    StructureTable::from_entries(default_basis("e", n), Ring::rationals(), AlgebraKind::General, entries).unwrap()
}

/// The table of `a` in the basis `f_i = Σ_k p[k][i] e_k`, an isomorphic copy.
pub fn transport(a: &StructureTable, p: &Matrix) -> StructureTable {
    let n = a.dim();
    let q = p.inverse().unwrap();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let prod = a.multiply(&p.column(i), &p.column(j));
            let coords = q.mul_vec(&prod);
            for (k, c) in coords.into_iter().enumerate() {
                entries.push((i, j, k, c));
            }
        }
    }
    let table =
        StructureTable::from_entries(a.basis().to_vec(), a.ring().clone(), AlgebraKind::General, entries).unwrap();
    match a.kind() {
        AlgebraKind::General => table,
        AlgebraKind::Anticommutative => {
            let upper: Vec<_> = table.entries().filter(|&(i, j, _, _)| i < j).map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
            StructureTable::anticommutative(a.basis().to_vec(), a.ring().clone(), upper).unwrap()
        }
    }
}

/// `a` with every structure constant multiplied by `c`; preserves every
/// homogeneous identity of the product.
pub fn rescale(a: &StructureTable, c: i64) -> StructureTable {
    let c = Scalar::from_int(c);
    let entries: Vec<_> = a.entries().map(|(i, j, k, x)| (i, j, k, x * &c)).collect();
    StructureTable::from_entries(a.basis().to_vec(), a.ring().clone(), a.kind(), entries).unwrap()
}
