//! Exhaustive search for O-operators with entries from a finite value set.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::reps::{LinearMap, LinearRep};
use crate::scalar::Scalar;

use super::o_residual_at;

/// Free positions of a candidate matrix; all other entries are zero.
pub type Mask = Vec<(usize, usize)>;

/// Every map supported on `mask` with entries in `values` that satisfies the
/// O-operator equation for `rep`.
///
/// Candidates are enumerated lexicographically: the first mask position is the
/// most significant digit and digits follow the order of `values`. The result
/// keeps that order. An empty value set yields no candidates.
pub fn grid_search_o_operators(rep: &LinearRep, values: &[Scalar], mask: &[(usize, usize)], budget: u128) -> Result<Vec<LinearMap>> {
    let rows = rep.algebra.dim();
    let cols = rep.space_dim();
    for (i, &(r, c)) in mask.iter().enumerate() {
        if r >= rows || c >= cols {
            return Err(Error::Shape(format!("mask position ({r}, {c}) outside a {rows}x{cols} matrix")));
        }
        if mask[..i].contains(&(r, c)) {
            return Err(Error::Shape(format!("mask position ({r}, {c}) listed twice")));
        }
    }
    if values.is_empty() {
        return Ok(Vec::new());
    }
    let candidates = (values.len() as u128).checked_pow(mask.len() as u32).unwrap_or(u128::MAX);
    if candidates > budget {
        return Err(Error::BudgetExceeded { candidates, budget });
    }
    let total = usize::try_from(candidates).map_err(|_| Error::BudgetExceeded { candidates, budget })?;
    let base = values.len();
    let found = (0..total)
        .into_par_iter()
        .filter_map(|index| {
            let mut matrix = Matrix::zeros(rows, cols);
            let mut rest = index;
            for &(r, c) in mask.iter().rev() {
                matrix.set(r, c, values[rest % base].clone());
                rest /= base;
            }
            let t = LinearMap::new(matrix);
            let ok = (0..cols).all(|j| (0..cols).all(|k| o_residual_at(&t, rep, j, k).iter().all(Scalar::is_zero)));
            ok.then_some(t)
        })
        .collect();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn small_values() -> Vec<Scalar> {
        vec![Scalar::from_int(-1), Scalar::zero(), Scalar::one()]
    }

    #[test]
    fn empty_value_set() {
        let rep = LinearRep::coadjoint(&fixtures::example2_1()).unwrap();
        assert!(grid_search_o_operators(&rep, &[], &[(0, 0)], 10).unwrap().is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let rep = LinearRep::coadjoint(&fixtures::example2_1()).unwrap();
        let mask: Mask = (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).collect();
        assert!(matches!(
            grid_search_o_operators(&rep, &small_values(), &mask, 1000),
            Err(Error::BudgetExceeded { candidates: 43046721, budget: 1000 })
        ));
    }

    #[test]
    fn zero_map_found_first_when_zero_is_smallest() {
        let rep = LinearRep::coadjoint(&fixtures::example2_1()).unwrap();
        let values = vec![Scalar::zero(), Scalar::one()];
        let found = grid_search_o_operators(&rep, &values, &[(0, 0), (3, 3)], 100).unwrap();
        assert_eq!(found[0], LinearMap::zero(4, 4));
    }
}
