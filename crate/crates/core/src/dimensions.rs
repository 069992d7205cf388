//! Closed-form dimensions of (skew) shifted and ordinary diagrams.
//!
//! Every formula is evaluated over exact rationals and only converted to an integer at
//! the end; a fractional or negative result is reported as
//! [`Error::NonIntegerResult`], which would indicate a bug upstream.

use num_bigint::{BigUint, Sign};
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::{shifted_to_ordinary, Partition, StrictPartition};
use crate::poly::{eval_pstar, eval_sstar_at_partition, falling_factorial};
use crate::scalar::Scalar;
use crate::tableau::{count_ordinary_standard_tableaux, count_shifted_recursive};

/// Ingredients of `dim(outer) · poly(outer) / (|outer|↓|inner|)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaTrace {
    /// `g_λ` or `f_η`.
    pub base_dimension: BigUint,
    /// `P*_μ(λ)` or `s*_ν(η)`.
    pub polynomial_value: BigRational,
    /// `(|outer|↓|inner|)`.
    pub falling: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionResult {
    pub value: BigUint,
    /// `None` when the answer came from the containment short-circuit.
    pub trace: Option<FormulaTrace>,
}

fn to_natural(r: &BigRational) -> Result<BigUint> {
    if !r.is_integer() || r.numer().sign() == Sign::Minus {
        return Err(Error::NonIntegerResult(format!("{}/{}", r.numer(), r.denom())));
    }
    Ok(r.numer().magnitude().clone())
}

fn factorial(n: usize) -> BigRational {
    falling_factorial(&BigRational::from_usize(n), n)
}

/// `g_λ = |λ|! / (λ_1! ... λ_l!) · ∏_{i<j} (λ_i - λ_j) / (λ_i + λ_j)`.
pub fn g_closed(lambda: &StrictPartition) -> Result<BigUint> {
    let parts = lambda.parts();
    let mut acc = factorial(lambda.weight());
    for &p in parts {
        acc /= factorial(p);
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            acc *= BigRational::from_usize(parts[i] - parts[j]);
            acc /= BigRational::from_usize(parts[i] + parts[j]);
        }
    }
    to_natural(&acc)
}

/// `f_η = |η|! / ∏ (η_i + l - i)! · ∏_{i<j} (η_i - η_j + j - i)`.
pub fn f_closed(eta: &Partition) -> Result<BigUint> {
    let l = eta.len();
    let mut acc = factorial(eta.weight());
    for i in 1..=l {
        acc /= factorial(eta.part(i) + l - i);
    }
    for i in 1..=l {
        for j in i + 1..=l {
            acc *= BigRational::from_i64(eta.part(i) as i64 - eta.part(j) as i64 + (j - i) as i64);
        }
    }
    to_natural(&acc)
}

/// `g_{λ/μ} = g_λ · P*_μ(λ) / (|λ|↓|μ|)`; zero when `μ ⊄ λ`.
pub fn g_skew(lambda: &StrictPartition, mu: &StrictPartition) -> Result<DimensionResult> {
    let (k, m) = (lambda.weight(), mu.weight());
    if k < m {
        return Err(Error::WeightOrder { outer: k, inner: m });
    }
    if !mu.is_contained_in(lambda) {
        return Ok(DimensionResult { value: BigUint::zero(), trace: None });
    }
    let g = g_closed(lambda)?;
    let pstar: BigRational = eval_pstar(mu, lambda);
    let falling = falling_factorial(&BigRational::from_usize(k), m);
    let value = to_natural(&(BigRational::from_integer(g.clone().into()) * pstar.clone() / falling.clone()))?;
    Ok(DimensionResult {
        value,
        trace: Some(FormulaTrace { base_dimension: g, polynomial_value: pstar, falling: to_natural(&falling)? }),
    })
}

/// `f_{η/ν} = f_η · s*_ν(η) / (|η|↓|ν|)`; zero when `ν ⊄ η`.
pub fn f_skew(eta: &Partition, nu: &Partition) -> Result<DimensionResult> {
    let (k, m) = (eta.weight(), nu.weight());
    if k < m {
        return Err(Error::WeightOrder { outer: k, inner: m });
    }
    if !nu.is_contained_in(eta) {
        return Ok(DimensionResult { value: BigUint::zero(), trace: None });
    }
    let f = f_closed(eta)?;
    let sstar = eval_sstar_at_partition(nu, eta);
    let falling = falling_factorial(&BigRational::from_usize(k), m);
    let value = to_natural(&(BigRational::from_integer(f.clone().into()) * sstar.clone() / falling.clone()))?;
    Ok(DimensionResult {
        value,
        trace: Some(FormulaTrace { base_dimension: f, polynomial_value: sstar, falling: to_natural(&falling)? }),
    })
}

/// The four-way identity between the factorial P-side, the shifted count, the ordinary
/// count of the matching ordinary skew diagram, and the shifted-Schur side.
pub fn shifted_ordinary_identity_check(lambda: &StrictPartition, mu: &StrictPartition) -> Result<bool> {
    let (eta, nu) = shifted_to_ordinary(lambda, mu)?;
    let p_side = g_skew(lambda, mu)?.value;
    let shifted_count = count_shifted_recursive(lambda, mu);
    let ordinary_shape = crate::partition::OrdinarySkewShape::new(&eta, &nu)?;
    let ordinary_count = count_ordinary_standard_tableaux(&ordinary_shape);
    let s_side = f_skew(&eta, &nu)?.value;
    Ok(p_side == shifted_count && shifted_count == ordinary_count && ordinary_count == s_side)
}
