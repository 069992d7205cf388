//! Brute-force counts of standard fillings of skew shapes.
//!
//! These are the ground truth every closed form in [`crate::dimensions`] is checked
//! against, so they deliberately share no code with the polynomial side.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::partition::{OrdinarySkewShape, ShiftedSkewShape, StrictPartition};

pub type TableauCount = BigUint;

/// Number of linear extensions of the cell poset generated by "left of" and "above".
///
/// Each cell's predecessors are its nearest neighbour to the left in the same row and
/// its nearest neighbour above in the same column; both are within the cell set.
fn count_linear_extensions(cells: &[(usize, usize)]) -> BigUint {
    let n = cells.len();
    let index: HashMap<(usize, usize), usize> =
        cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();

    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut pending = vec![0usize; n];
    for (k, &(i, j)) in cells.iter().enumerate() {
        let left = (1..j).rev().find_map(|jj| index.get(&(i, jj)));
        let up = (1..i).rev().find_map(|ii| index.get(&(ii, j)));
        for &p in left.into_iter().chain(up) {
            succ[p].push(k);
            pending[k] += 1;
        }
    }

    fn go(placed: usize, succ: &[Vec<usize>], pending: &mut [usize], done: &mut [bool]) -> u128 {
        let n = pending.len();
        if placed == n {
            return 1;
        }
        let mut total: u128 = 0;
        for c in 0..n {
            if done[c] || pending[c] != 0 {
                continue;
            }
            done[c] = true;
            for &s in &succ[c] {
                pending[s] -= 1;
            }
            total = total
                .checked_add(go(placed + 1, succ, pending, done))
                .expect("tableau count exceeds u128");
            for &s in &succ[c] {
                pending[s] += 1;
            }
            done[c] = false;
        }
        total
    }

    let mut done = vec![false; n];
    BigUint::from(go(0, &succ, &mut pending, &mut done))
}

/// Number of shifted standard tableaux of shape `λ/μ`, by backtracking.
pub fn count_shifted_standard_tableaux(shape: &ShiftedSkewShape) -> TableauCount {
    count_linear_extensions(shape.cells())
}

/// Number of ordinary standard tableaux of shape `η/ν`, by backtracking.
pub fn count_ordinary_standard_tableaux(shape: &OrdinarySkewShape) -> TableauCount {
    count_linear_extensions(shape.cells())
}

/// `g_{λ/μ}` through the branching recursion
/// `g_{μ/μ} = 1`, `g_{λ/μ} = 0` when `μ ⊄ λ`, and
/// `g_{λ/μ} = Σ_{ν ↗ λ, ν strict} g_{ν/μ}` otherwise.
///
/// The memo lives for a single call, so concurrent callers never share state.
pub fn count_shifted_recursive(outer: &StrictPartition, inner: &StrictPartition) -> TableauCount {
    let mut memo = HashMap::new();
    recurse(outer, inner, &mut memo)
}

fn recurse(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    memo: &mut HashMap<StrictPartition, BigUint>,
) -> BigUint {
    if lambda == mu {
        return BigUint::one();
    }
    if lambda.weight() <= mu.weight() || !mu.is_contained_in(lambda) {
        return BigUint::zero();
    }
    if let Some(v) = memo.get(lambda) {
        return v.clone();
    }
    let total = lambda
        .covers_below()
        .iter()
        .fold(BigUint::zero(), |acc, nu| acc + recurse(nu, mu, memo));
    memo.insert(lambda.clone(), total.clone());
    total
}
