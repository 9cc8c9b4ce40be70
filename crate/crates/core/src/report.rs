//! Verdicts and first-failure witnesses for identity checks.

use std::fmt;

use rayon::prelude::*;

use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::vector;

/// Nonzero value of an identity at a witness tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    Vector { coords: Vec<Scalar>, basis: Vec<String> },
    Matrix(Matrix),
    Scalar(Scalar),
}

impl Residual {
    /// Flat list of scalars, row-major for matrices.
    pub fn values(&self) -> Vec<Scalar> {
        match self {
            Residual::Vector { coords, .. } => coords.clone(),
            Residual::Matrix(m) => m.entries().map(|(_, _, x)| x.clone()).collect(),
            Residual::Scalar(s) => vec![s.clone()],
        }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Vector { coords, basis } => f.write_str(&vector::render_combination(coords, basis)),
            Residual::Matrix(m) => f.write_str(&m.render()),
            Residual::Scalar(s) => write!(f, "{s}"),
        }
    }
}

/// Lexicographically first failing tuple of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Basis indices of the tuple, 0-based.
    pub indices: Vec<usize>,
    /// Display form of each argument, e.g. `e1` or `e1 + e2`.
    pub arguments: Vec<String>,
    pub residual: Residual,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at ({}): {}", self.arguments.join(", "), self.residual)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub witness: Option<Witness>,
}

impl IdentityReport {
    pub fn new(name: impl Into<String>, witness: Option<Witness>) -> Self {
        IdentityReport {
            name: name.into(),
            witness,
        }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{}: holds", self.name),
            Some(w) => write!(f, "{}: fails {w}", self.name),
        }
    }
}

/// A family of identity checks, e.g. the axioms of a bimodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<IdentityReport>,
}

impl AxiomReport {
    pub fn new(checks: Vec<IdentityReport>) -> Self {
        AxiomReport { checks }
    }

    pub fn holds(&self) -> bool {
        self.checks.iter().all(IdentityReport::holds)
    }

    pub fn first_failure(&self) -> Option<&IdentityReport> {
        self.checks.iter().find(|c| !c.holds())
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.checks.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Decodes `index` into a tuple of `arity` digits in base `n`, most
/// significant first, so increasing indices enumerate tuples lexicographically.
pub(crate) fn decode(mut index: usize, n: usize, arity: usize) -> Vec<usize> {
    let mut out = vec![0; arity];
    for slot in out.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    out
}

/// Evaluates `residual` on every `arity`-tuple of basis indices in `0..n` in
/// parallel and returns the lexicographically first nonzero one.
pub(crate) fn first_failing_tuple<R>(
    n: usize,
    arity: usize,
    residual: impl Fn(&[usize]) -> Option<R> + Sync,
) -> Option<(Vec<usize>, R)>
where
    R: Send,
{
    if n == 0 {
        return None;
    }
    let total = n.pow(arity as u32);
    (0..total).into_par_iter().find_map_first(|index| {
        let t = decode(index, n, arity);
        residual(&t).map(|r| (t, r))
    })
}

/// All residuals over `arity`-tuples in lexicographic order.
pub(crate) fn all_tuples<R>(n: usize, arity: usize, residual: impl Fn(&[usize]) -> R + Sync) -> Vec<R>
where
    R: Send,
{
    if n == 0 {
        return Vec::new();
    }
    let total = n.pow(arity as u32);
    (0..total)
        .into_par_iter()
        .map(|index| residual(&decode(index, n, arity)))
        .collect()
}

pub(crate) fn names_of(indices: &[usize], basis: &[String]) -> Vec<String> {
    indices.iter().map(|&i| basis[i].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_is_lexicographic() {
        assert_eq!(decode(0, 3, 2), vec![0, 0]);
        assert_eq!(decode(1, 3, 2), vec![0, 1]);
        assert_eq!(decode(5, 3, 2), vec![1, 2]);
    }

    #[test]
    fn first_failure_is_lexicographic() {
        let hit = first_failing_tuple(4, 3, |t| (t[0] + t[2] >= 3 && t[1] == 2).then_some(()));
        assert_eq!(hit.map(|(t, _)| t), Some(vec![0, 2, 3]));
        assert!(first_failing_tuple(0, 3, |_| Some(())).is_none());
    }
}
