//! Pointwise evaluation of falling factorials, power sums, `P_μ`, `P*_μ`, `H(μ)` and
//! the shifted Schur polynomials `s*_ν`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{det_bareiss, det_field};
use crate::partition::{Partition, StrictPartition};
use crate::poly::expand::{expand_in_monomials, Family};
use crate::scalar::Scalar;

/// `(x↓k) = x (x-1) ... (x-k+1)`, with `(x↓0) = 1`.
pub fn falling_factorial<T: Scalar>(x: &T, k: usize) -> T {
    (0..k).fold(T::one(), |acc, i| acc * (x.clone() - T::from_usize(i)))
}

/// `p_ρ(x) = ∏_t Σ_i x_i^{ρ_t}`; the empty product is 1.
pub fn power_sum_eval<T: Scalar>(rho: &Partition, point: &[T]) -> T {
    rho.parts().iter().fold(T::one(), |acc, &k| {
        acc * point.iter().fold(T::zero(), |s, x| s + x.powi(k as u32))
    })
}

/// `H(μ) = ∏ μ_t! ∏_{i<j} (μ_i + μ_j) / (μ_i - μ_j)`.
pub fn capital_h<T: Scalar>(mu: &StrictPartition) -> T {
    let parts = mu.parts();
    let mut acc = parts.iter().fold(T::one(), |acc, &m| acc * falling_factorial(&T::from_usize(m), m));
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            acc = acc * T::from_usize(parts[i] + parts[j]) / T::from_usize(parts[i] - parts[j]);
        }
    }
    acc
}

fn check_distinct<T: Scalar>(point: &[T]) -> Result<()> {
    for a in 0..point.len() {
        for b in a + 1..point.len() {
            if point[a] == point[b] {
                return Err(Error::CoincidentCoordinates(a, b));
            }
        }
    }
    Ok(())
}

/// Sum over ordered injections `ω: {0..l} → {0..n}` of
/// `∏_i w[i][ω(i)] · ∏_{i<j} Q(ω(i), ω(j)) · ∏_{i, k ∉ im ω} Q(ω(i), k)`
/// with `Q(a, b) = (x_a + x_b) / (x_a - x_b)`. Coordinates must be pairwise distinct.
///
/// When `prune` is set, injections hitting a zero weight are skipped without evaluating
/// the rest of their product.
fn injection_sum<T: Scalar>(point: &[T], weights: &[Vec<T>], prune: bool) -> T {
    let n = point.len();
    let l = weights.len();
    let q = |a: usize, b: usize| (point[a].clone() + point[b].clone()) / (point[a].clone() - point[b].clone());

    let no_antipodes =
        (0..n).all(|a| (a + 1..n).all(|b| !(point[a].clone() + point[b].clone()).is_zero()));

    let mut used = vec![false; n];
    let mut chosen = Vec::with_capacity(l);

    if no_antipodes {
        // Factor the tail through A(a) = ∏_{k≠a} Q(a, k); a selected pair (p, a), p
        // chosen first, then contributes Q(p, a) / (Q(p, a) Q(a, p)) = (x_a - x_p) / (x_p + x_a).
        let tail: Vec<T> = (0..n)
            .map(|a| (0..n).filter(|&k| k != a).fold(T::one(), |acc, k| acc * q(a, k)))
            .collect();
        let pair = |p: usize, a: usize| {
            (point[a].clone() - point[p].clone()) / (point[p].clone() + point[a].clone())
        };

        fn go<T: Scalar>(
            slot: usize,
            acc: T,
            weights: &[Vec<T>],
            tail: &[T],
            pair: &dyn Fn(usize, usize) -> T,
            used: &mut [bool],
            chosen: &mut Vec<usize>,
            prune: bool,
        ) -> T {
            if slot == weights.len() {
                return acc;
            }
            let mut total = T::zero();
            for a in 0..used.len() {
                if used[a] || (prune && weights[slot][a].is_zero()) {
                    continue;
                }
                let mut f = acc.clone() * weights[slot][a].clone() * tail[a].clone();
                for &p in chosen.iter() {
                    f = f * pair(p, a);
                }
                used[a] = true;
                chosen.push(a);
                total = total + go(slot + 1, f, weights, tail, pair, used, chosen, prune);
                chosen.pop();
                used[a] = false;
            }
            total
        }
        return go(0, T::one(), weights, &tail, &pair, &mut used, &mut chosen, prune);
    }

    // Direct product, used when some x_a + x_b vanishes.
    fn go_direct<T: Scalar>(
        slot: usize,
        weights: &[Vec<T>],
        q: &dyn Fn(usize, usize) -> T,
        used: &mut [bool],
        chosen: &mut Vec<usize>,
        prune: bool,
    ) -> T {
        let n = used.len();
        if slot == weights.len() {
            let mut term = T::one();
            for (i, &a) in chosen.iter().enumerate() {
                term = term * weights[i][a].clone();
                for &b in &chosen[i + 1..] {
                    term = term * q(a, b);
                }
                for k in (0..n).filter(|k| !chosen.contains(k)) {
                    term = term * q(a, k);
                }
            }
            return term;
        }
        let mut total = T::zero();
        for a in 0..n {
            if used[a] || (prune && weights[slot][a].is_zero()) {
                continue;
            }
            used[a] = true;
            chosen.push(a);
            total = total + go_direct(slot + 1, weights, q, used, chosen, prune);
            chosen.pop();
            used[a] = false;
        }
        total
    }
    go_direct(0, weights, &q, &mut used, &mut chosen, prune)
}

/// `P_{μ|n}` at a point with pairwise distinct coordinates (`n` = number of coordinates).
/// Zero when `l(μ) > n`.
pub fn eval_p<T: Scalar>(mu: &StrictPartition, point: &[T]) -> Result<T> {
    if mu.len() > point.len() {
        return Ok(T::zero());
    }
    check_distinct(point)?;
    let weights: Vec<Vec<T>> = mu
        .parts()
        .iter()
        .map(|&m| point.iter().map(|x| x.powi(m as u32)).collect())
        .collect();
    Ok(injection_sum(point, &weights, true))
}

/// `P*_{μ|n}` at a point with pairwise distinct coordinates. Zero when `l(μ) > n`.
pub fn eval_pstar_at<T: Scalar>(mu: &StrictPartition, point: &[T]) -> Result<T> {
    eval_pstar_impl(mu, point, true)
}

fn eval_pstar_impl<T: Scalar>(mu: &StrictPartition, point: &[T], prune: bool) -> Result<T> {
    if mu.len() > point.len() {
        return Ok(T::zero());
    }
    check_distinct(point)?;
    let weights: Vec<Vec<T>> = mu
        .parts()
        .iter()
        .map(|&m| point.iter().map(|x| falling_factorial(x, m)).collect())
        .collect();
    Ok(injection_sum(point, &weights, prune))
}

fn partition_point<T: Scalar>(lambda: &Partition) -> Vec<T> {
    lambda.parts().iter().map(|&p| T::from_usize(p)).collect()
}

/// `P*_μ(λ)`, evaluated with the `l(λ)` coordinates `λ_1, ..., λ_l`.
///
/// Returns zero straight away when `μ ⊄ λ`.
pub fn eval_pstar<T: Scalar>(mu: &StrictPartition, lambda: &StrictPartition) -> T {
    if !mu.is_contained_in(lambda) {
        return T::zero();
    }
    eval_pstar_impl(mu, &partition_point::<T>(lambda), true)
        .expect("parts of a strict partition are distinct")
}

/// `P*_μ(λ)` with no containment shortcut and no skipping of zero terms.
///
/// `λ` is padded with zeros up to `max(l(λ), l(μ))` coordinates. With at most one zero
/// the coordinates stay distinct and the injection sum is used; otherwise the symbolic
/// expansion in that many variables is substituted instead.
pub fn eval_pstar_full(mu: &StrictPartition, lambda: &StrictPartition) -> Result<BigRational> {
    let n = lambda.len().max(mu.len());
    let mut point = partition_point::<BigRational>(lambda);
    point.resize(n, BigRational::zero());
    if n - lambda.len() <= 1 {
        return eval_pstar_impl(mu, &point, false);
    }
    let expansion = expand_in_monomials::<BigRational>(Family::Pstar, mu, n)?;
    Ok(expansion.eval(&point))
}

fn sstar_denominator<T: Scalar>(point: &[T]) -> T {
    let n = point.len();
    let mut den = T::one();
    for i in 0..n {
        for j in i + 1..n {
            den = den * (point[i].clone() - point[j].clone() + T::from_usize(j - i));
        }
    }
    den
}

/// `s*_ν(x_1, ..., x_n) = det[(x_i + n - i)↓(ν_j + n - j)] / ∏_{i<j} (x_i - x_j + j - i)`.
///
/// Zero when `l(ν) > n`.
pub fn eval_sstar<T: Scalar>(nu: &Partition, point: &[T]) -> Result<T> {
    let n = point.len();
    if nu.len() > n {
        return Ok(T::zero());
    }
    let den = sstar_denominator(point);
    if den.is_zero() {
        return Err(Error::SingularDenominator);
    }
    let matrix: Vec<Vec<T>> = (0..n)
        .map(|i| {
            let shifted = point[i].clone() + T::from_usize(n - 1 - i);
            (0..n).map(|j| falling_factorial(&shifted, nu.part(j + 1) + n - 1 - j)).collect()
        })
        .collect();
    Ok(det_field(matrix) / den)
}

/// `s*_ν(η)` using the `l(η)` coordinates of `η`, through an integer Bareiss determinant.
pub fn eval_sstar_at_partition(nu: &Partition, eta: &Partition) -> BigRational {
    let n = eta.len();
    if nu.len() > n {
        return BigRational::zero();
    }
    let falling_int = |a: i64, k: usize| -> BigInt {
        (0..k as i64).fold(BigInt::from(1), |acc, i| acc * BigInt::from(a - i))
    };
    let matrix: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let shifted = (eta.part(i + 1) + n - 1 - i) as i64;
            (0..n).map(|j| falling_int(shifted, nu.part(j + 1) + n - 1 - j)).collect()
        })
        .collect();
    let mut den = BigInt::from(1);
    for i in 1..=n {
        for j in i + 1..=n {
            den *= BigInt::from(eta.part(i) as i64 - eta.part(j) as i64 + (j - i) as i64);
        }
    }
    BigRational::new(det_bareiss(matrix), den)
}
