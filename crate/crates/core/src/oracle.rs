//! Brute-force residuals, written directly from the defining formulas with
//! dense arrays and nested loops. Shares no evaluation code with the engine;
//! only the input types are common.
//!
//! Every function returns the full residual family in the same order as the
//! corresponding engine family, so the two can be compared entry by entry.

use crate::algebra::StructureTable;
use crate::reps::{Bimodule, LinearMap, LinearRep};
use crate::scalar::Scalar;
use crate::ybe::{BilinearForm, TwoTensor};

type Vector = Vec<Scalar>;
type Dense = Vec<Vec<Scalar>>;

fn constants(a: &StructureTable) -> Vec<Vec<Vec<Scalar>>> {
    let n = a.dim();
    let mut c = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for (i, j, k, x) in a.entries() {
        c[i][j][k] = x.clone();
    }
    c
}

fn basis(n: usize, i: usize) -> Vector {
    (0..n).map(|t| if t == i { Scalar::one() } else { Scalar::zero() }).collect()
}

fn mul(c: &[Vec<Vec<Scalar>>], x: &[Scalar], y: &[Scalar]) -> Vector {
    let n = x.len();
    let mut out = vec![Scalar::zero(); n];
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if y[j].is_zero() {
                continue;
            }
            let w = &x[i] * &y[j];
            for (k, slot) in out.iter_mut().enumerate() {
                if !c[i][j][k].is_zero() {
                    *slot += &w * &c[i][j][k];
                }
            }
        }
    }
    out
}

fn lin(terms: &[(i64, Vector)], n: usize) -> Vector {
    let mut out = vec![Scalar::zero(); n];
    for (s, v) in terms {
        for k in 0..n {
            out[k] += Scalar::from_int(*s) * &v[k];
        }
    }
    out
}

fn dense(m: &crate::linalg::Matrix) -> Dense {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect()).collect()
}

fn mat_mul(a: &Dense, b: &Dense) -> Dense {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![Scalar::zero(); cols]; rows];
    for i in 0..rows {
        for j in 0..cols {
            for k in 0..inner {
                if !a[i][k].is_zero() && !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

fn mat_lin(terms: &[(i64, Dense)], m: usize) -> Dense {
    let mut out = vec![vec![Scalar::zero(); m]; m];
    for (s, d) in terms {
        for i in 0..m {
            if d[i].iter().all(Scalar::is_zero) {
                continue;
            }
            for j in 0..m {
                out[i][j] += Scalar::from_int(*s) * &d[i][j];
            }
        }
    }
    out
}

fn apply(a: &Dense, v: &[Scalar]) -> Vector {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

/// `Σ x_i ops[i]`.
fn op_at(ops: &[Dense], x: &[Scalar], m: usize) -> Dense {
    let mut out = vec![vec![Scalar::zero(); m]; m];
    for (i, op) in ops.iter().enumerate() {
        if x[i].is_zero() {
            continue;
        }
        for r in 0..m {
            for c in 0..m {
                out[r][c] += &x[i] * &op[r][c];
            }
        }
    }
    out
}

fn flatten(d: Dense) -> Vector {
    d.into_iter().flatten().collect()
}

pub fn anticommutative(a: &StructureTable) -> Vec<Vector> {
    let n = a.dim();
    let c = constants(a);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            out.push((0..n).map(|k| &c[i][j][k] + &c[j][i][k]).collect());
        }
    }
    out
}

fn malcev_at(c: &[Vec<Vec<Scalar>>], x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
    let n = x.len();
    let lhs = mul(c, &mul(c, x, y), &mul(c, x, z));
    let a = mul(c, &mul(c, &mul(c, x, y), z), x);
    let b = mul(c, &mul(c, &mul(c, y, z), x), x);
    let d = mul(c, &mul(c, &mul(c, z, x), x), y);
    lin(&[(1, lhs), (-1, a), (-1, b), (-1, d)], n)
}

/// Diagonal triples `(e_i, e_k, e_l)` followed by `(e_i + e_j, e_k, e_l)` for
/// `i < j`.
pub fn malcev(a: &StructureTable) -> Vec<(Vec<usize>, Vector)> {
    let n = a.dim();
    let c = constants(a);
    let mut out = Vec::new();
    for i in 0..n {
        for k in 0..n {
            for l in 0..n {
                out.push((vec![i, k, l], malcev_at(&c, &basis(n, i), &basis(n, k), &basis(n, l))));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i >= j {
                continue;
            }
            let x: Vector = (0..n).map(|t| if t == i || t == j { Scalar::one() } else { Scalar::zero() }).collect();
            for k in 0..n {
                for l in 0..n {
                    out.push((vec![i, j, k, l], malcev_at(&c, &x, &basis(n, k), &basis(n, l))));
                }
            }
        }
    }
    out
}

pub fn sagle(a: &StructureTable) -> Vec<Vector> {
    let n = a.dim();
    let c = constants(a);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let (x, y, z, t) = (basis(n, i), basis(n, j), basis(n, k), basis(n, l));
                    let m = |p: &[Scalar], q: &[Scalar]| mul(&c, p, q);
                    let lhs = m(&m(&x, &z), &m(&y, &t));
                    let t1 = m(&m(&m(&x, &y), &z), &t);
                    let t2 = m(&m(&m(&y, &z), &t), &x);
                    let t3 = m(&m(&m(&z, &t), &x), &y);
                    let t4 = m(&m(&m(&t, &x), &y), &z);
                    out.push(lin(&[(1, lhs), (-1, t1), (-1, t2), (-1, t3), (-1, t4)], n));
                }
            }
        }
    }
    out
}

pub fn jacobi(a: &StructureTable) -> Vec<Vector> {
    let n = a.dim();
    let c = constants(a);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (basis(n, i), basis(n, j), basis(n, k));
                let m = |p: &[Scalar], q: &[Scalar]| mul(&c, p, q);
                out.push(lin(&[(1, m(&m(&x, &y), &z)), (1, m(&m(&y, &z), &x)), (1, m(&m(&z, &x), &y))], n));
            }
        }
    }
    out
}

pub fn pre_malcev(a: &StructureTable) -> Vec<Vector> {
    let n = a.dim();
    let c = constants(a);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let (x, y, z, t) = (basis(n, i), basis(n, j), basis(n, k), basis(n, l));
                    let m = |p: &[Scalar], q: &[Scalar]| mul(&c, p, q);
                    out.push(lin(
                        &[
                            (1, m(&m(&y, &z), &m(&x, &t))),
                            (-1, m(&m(&z, &y), &m(&x, &t))),
                            (1, m(&m(&m(&x, &y), &z), &t)),
                            (-1, m(&m(&m(&y, &x), &z), &t)),
                            (1, m(&m(&z, &m(&y, &x)), &t)),
                            (-1, m(&m(&z, &m(&x, &y)), &t)),
                            (1, m(&y, &m(&m(&x, &z), &t))),
                            (-1, m(&y, &m(&m(&z, &x), &t))),
                            (1, m(&z, &m(&x, &m(&y, &t)))),
                            (-1, m(&x, &m(&y, &m(&z, &t)))),
                        ],
                        n,
                    ));
                }
            }
        }
    }
    out
}

/// Representation axiom residual matrices, flattened row-major.
pub fn rep(r: &LinearRep) -> Vec<Vector> {
    let n = r.algebra.dim();
    let m = r.space_dim();
    let c = constants(&r.algebra);
    let ops: Vec<Dense> = r.action.iter().map(dense).collect();
    let rho = |x: &[Scalar]| op_at(&ops, x, m);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (basis(n, i), basis(n, j), basis(n, k));
                let (rx, ry, rz) = (rho(&x), rho(&y), rho(&z));
                let lhs = rho(&mul(&c, &mul(&c, &x, &y), &z));
                let d = mat_lin(
                    &[
                        (1, lhs),
                        (-1, mat_mul(&mat_mul(&rx, &ry), &rz)),
                        (1, mat_mul(&mat_mul(&rz, &rx), &ry)),
                        (-1, mat_mul(&ry, &rho(&mul(&c, &z, &x)))),
                        (1, mat_mul(&rho(&mul(&c, &y, &z)), &rx)),
                    ],
                    m,
                );
                out.push(flatten(d));
            }
        }
    }
    out
}

/// The four bimodule residual families, each flattened row-major.
pub fn bimodule(b: &Bimodule) -> [Vec<Vector>; 4] {
    let n = b.algebra.dim();
    let m = b.space_dim();
    let c = constants(&b.algebra);
    let lops: Vec<Dense> = b.left.iter().map(dense).collect();
    let rops: Vec<Dense> = b.right.iter().map(dense).collect();
    let l = |x: &[Scalar]| op_at(&lops, x, m);
    let r = |x: &[Scalar]| op_at(&rops, x, m);
    let mm = |p: &Dense, q: &Dense| mat_mul(p, q);
    let m3 = |p: &Dense, q: &Dense, s: &Dense| mat_mul(&mat_mul(p, q), s);
    let mut out: [Vec<Vector>; 4] = Default::default();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (basis(n, i), basis(n, j), basis(n, k));
                let d = |p: &[Scalar], q: &[Scalar]| mul(&c, p, q);
                let (lx, ly, lz) = (l(&x), l(&y), l(&z));
                let (rx, ry, rz) = (r(&x), r(&y), r(&z));
                let e1 = mat_lin(
                    &[
                        (1, m3(&rx, &ry, &rz)),
                        (-1, m3(&rx, &ry, &lz)),
                        (-1, m3(&rx, &ly, &rz)),
                        (1, m3(&rx, &ly, &lz)),
                        (-1, r(&d(&z, &d(&y, &x)))),
                        (1, mm(&ly, &r(&d(&z, &x)))),
                        (1, mm(&l(&d(&z, &y)), &rx)),
                        (-1, mm(&l(&d(&y, &z)), &rx)),
                        (-1, m3(&lz, &rx, &ly)),
                        (1, m3(&lz, &rx, &ry)),
                    ],
                    m,
                );
                let e2 = mat_lin(
                    &[
                        (1, m3(&rx, &ry, &lz)),
                        (-1, m3(&rx, &ry, &rz)),
                        (-1, m3(&rx, &ly, &lz)),
                        (1, m3(&rx, &ly, &rz)),
                        (-1, mm(&lz, &r(&d(&y, &x)))),
                        (1, m3(&ly, &lz, &rx)),
                        (1, mm(&r(&d(&z, &x)), &ry)),
                        (-1, mm(&r(&d(&z, &x)), &ly)),
                        (-1, r(&d(&d(&y, &z), &x))),
                        (1, r(&d(&d(&z, &y), &x))),
                    ],
                    m,
                );
                let e3 = mat_lin(
                    &[
                        (1, mm(&rx, &l(&d(&y, &z)))),
                        (-1, mm(&rx, &l(&d(&z, &y)))),
                        (-1, mm(&rx, &r(&d(&y, &z)))),
                        (1, mm(&rx, &r(&d(&z, &y)))),
                        (-1, m3(&ly, &lz, &rx)),
                        (1, r(&d(&y, &d(&z, &x)))),
                        (1, mm(&r(&d(&y, &x)), &lz)),
                        (-1, mm(&r(&d(&y, &x)), &rz)),
                        (-1, m3(&lz, &rx, &ry)),
                        (1, m3(&lz, &rx, &ly)),
                    ],
                    m,
                );
                let e4 = mat_lin(
                    &[
                        (1, l(&d(&d(&x, &y), &z))),
                        (-1, l(&d(&d(&y, &x), &z))),
                        (-1, l(&d(&z, &d(&x, &y)))),
                        (1, l(&d(&z, &d(&y, &x)))),
                        (-1, m3(&lx, &ly, &lz)),
                        (1, m3(&lz, &lx, &ly)),
                        (1, mm(&l(&d(&y, &z)), &lx)),
                        (-1, mm(&l(&d(&z, &y)), &lx)),
                        (-1, mm(&ly, &l(&d(&z, &x)))),
                        (1, mm(&ly, &l(&d(&x, &z)))),
                    ],
                    m,
                );
                for (slot, e) in out.iter_mut().zip([e1, e2, e3, e4]) {
                    slot.push(flatten(e));
                }
            }
        }
    }
    out
}

/// `T(v)T(w) - T(ρ(T(v))w - ρ(T(w))v)` over basis pairs.
pub fn o_operator(t: &LinearMap, r: &LinearRep) -> Vec<Vector> {
    let n = r.algebra.dim();
    let m = r.space_dim();
    let c = constants(&r.algebra);
    let tm = dense(&t.matrix);
    let ops: Vec<Dense> = r.action.iter().map(dense).collect();
    let mut out = Vec::new();
    for j in 0..m {
        for k in 0..m {
            let (v, w) = (basis(m, j), basis(m, k));
            let (tv, tw) = (apply(&tm, &v), apply(&tm, &w));
            let lhs = mul(&c, &tv, &tw);
            let a = apply(&op_at(&ops, &tv, m), &w);
            let b = apply(&op_at(&ops, &tw, m), &v);
            let inner: Vector = a.iter().zip(&b).map(|(p, q)| p - q).collect();
            out.push(lin(&[(1, lhs), (-1, apply(&tm, &inner))], n));
        }
    }
    out
}

/// `T(v)·T(w) - T(ℓ_{T(v)} w + 𝔯_{T(w)} v)` over basis pairs.
pub fn pm_o_operator(t: &LinearMap, b: &Bimodule) -> Vec<Vector> {
    let n = b.algebra.dim();
    let m = b.space_dim();
    let c = constants(&b.algebra);
    let tm = dense(&t.matrix);
    let lops: Vec<Dense> = b.left.iter().map(dense).collect();
    let rops: Vec<Dense> = b.right.iter().map(dense).collect();
    let mut out = Vec::new();
    for j in 0..m {
        for k in 0..m {
            let (v, w) = (basis(m, j), basis(m, k));
            let (tv, tw) = (apply(&tm, &v), apply(&tm, &w));
            let lhs = mul(&c, &tv, &tw);
            let a = apply(&op_at(&lops, &tv, m), &w);
            let bb = apply(&op_at(&rops, &tw, m), &v);
            let inner: Vector = a.iter().zip(&bb).map(|(p, q)| p + q).collect();
            out.push(lin(&[(1, lhs), (-1, apply(&tm, &inner))], n));
        }
    }
    out
}

fn cube(n: usize) -> Vec<Vec<Vec<Scalar>>> {
    vec![vec![vec![Scalar::zero(); n]; n]; n]
}

fn flatten_cube(t: Vec<Vec<Vec<Scalar>>>) -> Vector {
    t.into_iter().flatten().flatten().collect()
}

/// `r12 r13 + r13 r23 - r23 r12` as a dense `n^3` array (index `p n^2 + q n + s`),
/// summing `r^{ab} r^{cd}` over the embeddings
/// `e_a e_c ⊗ e_b ⊗ e_d`, `e_a ⊗ e_c ⊗ e_b e_d` and `e_c ⊗ e_a e_d ⊗ e_b`.
pub fn cybe(r: &TwoTensor) -> Vector {
    let n = r.dim();
    let c = constants(&r.algebra);
    let co = dense(&r.coeffs);
    let mut out = cube(n);
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                for d in 0..n {
                    let w = &co[a][b] * &co[cc][d];
                    if w.is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        out[k][b][d] += &w * &c[a][cc][k];
                        out[a][cc][k] += &w * &c[b][d][k];
                        out[cc][k][b] -= &w * &c[a][d][k];
                    }
                }
            }
        }
    }
    flatten_cube(out)
}

/// `-r12·r13 + r12·r23 + r13 r23` as a dense `n^3` array, over the embeddings
/// `e_a·e_c ⊗ e_b ⊗ e_d`, `e_a ⊗ e_b·e_c ⊗ e_d` and
/// `e_a ⊗ e_c ⊗ (e_b·e_d - e_d·e_b)`.
pub fn pm_cybe(r: &TwoTensor) -> Vector {
    let n = r.dim();
    let c = constants(&r.algebra);
    let co = dense(&r.coeffs);
    let mut out = cube(n);
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                for d in 0..n {
                    let w = &co[a][b] * &co[cc][d];
                    if w.is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        out[k][b][d] -= &w * &c[a][cc][k];
                        out[a][k][d] += &w * &c[b][cc][k];
                        out[a][cc][k] += &w * (&c[b][d][k] - &c[d][b][k]);
                    }
                }
            }
        }
    }
    flatten_cube(out)
}

fn form_eval(b: &Dense, x: &[Scalar], y: &[Scalar]) -> Scalar {
    let mut s = Scalar::zero();
    for i in 0..x.len() {
        for j in 0..y.len() {
            s += &x[i] * &b[i][j] * &y[j];
        }
    }
    s
}

/// `B(xy, z) - B(x, yz)` over basis triples.
pub fn invariance(f: &BilinearForm) -> Vector {
    let n = f.algebra.dim();
    let c = constants(&f.algebra);
    let b = dense(&f.matrix);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (basis(n, i), basis(n, j), basis(n, k));
                out.push(form_eval(&b, &mul(&c, &x, &y), &z) - form_eval(&b, &x, &mul(&c, &y, &z)));
            }
        }
    }
    out
}

/// `B(xy, z) + B(yz, x) + B(zx, y)` over basis triples.
pub fn cyclic(f: &BilinearForm) -> Vector {
    let n = f.algebra.dim();
    let c = constants(&f.algebra);
    let b = dense(&f.matrix);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (basis(n, i), basis(n, j), basis(n, k));
                out.push(
                    form_eval(&b, &mul(&c, &x, &y), &z)
                        + form_eval(&b, &mul(&c, &y, &z), &x)
                        + form_eval(&b, &mul(&c, &z, &x), &y),
                );
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::vector;

    #[test]
    fn jacobi_witness_by_brute_force() {
        let a = fixtures::example2_1();
        let j = jacobi(&a);
        assert_eq!(vector::render_combination(&j[6], a.basis()), "-6*e4");
    }

    #[test]
    fn malcev_first_triple_is_zero() {
        let a = fixtures::example2_1();
        let m = malcev(&a);
        let (idx, r) = &m[6];
        assert_eq!(idx, &vec![0, 1, 2]);
        assert!(vector::is_zero(r));
    }

    #[test]
    fn zero_inputs() {
        let z = StructureTable::zero(crate::algebra::default_basis("e", 2), crate::AlgebraKind::Anticommutative).unwrap();
        assert!(jacobi(&z).iter().all(|v| vector::is_zero(v)));
        assert!(pre_malcev(&z).iter().all(|v| vector::is_zero(v)));
    }
}
