//! Limit characters `ψ_γ` and the convergence of normalized characters along a sequence
//! of strict partitions with `λ_i(n)/n → γ_i`.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{Partition, StrictPartition};
use crate::scalar::{parse_rational, Scalar};
use crate::spin::characters::xi;
use crate::spin::root2::{format_decimal, Root2Value};

type Root2 = Root2Value<BigRational>;

/// Digits of `√2` used when an exact value is turned into an error estimate.
pub const ERROR_DIGITS: u32 = 40;

/// Weakly decreasing non-negative rationals with sum at most one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThomaPoint {
    gamma: Vec<BigRational>,
}

impl ThomaPoint {
    pub fn new(gamma: Vec<BigRational>) -> Result<Self> {
        if let Some(neg) = gamma.iter().find(|g| g.is_negative()) {
            return Err(Error::InvalidThomaPoint(format!("negative coordinate {neg}")));
        }
        if gamma.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidThomaPoint("coordinates not weakly decreasing".into()));
        }
        let total: BigRational = gamma.iter().cloned().fold(BigRational::zero(), |a, b| a + b);
        if total > BigRational::one() {
            return Err(Error::InvalidThomaPoint(format!("coordinates sum to {total} > 1")));
        }
        Ok(ThomaPoint { gamma })
    }

    pub fn from_ratios(pairs: &[(i64, i64)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(n, d)| BigRational::from_ratio(n, d)).collect())
    }

    pub fn coordinates(&self) -> &[BigRational] {
        &self.gamma
    }

    /// `p_r(γ) = Σ γ_i^r`.
    pub fn power_sum(&self, r: usize) -> BigRational {
        self.gamma.iter().fold(BigRational::zero(), |acc, g| acc + g.powi(r as u32))
    }
}

impl FromStr for ThomaPoint {
    type Err = Error;

    /// Comma-separated rationals such as `1/2,1/3,1/6`; the empty string is the origin.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return ThomaPoint::new(Vec::new());
        }
        let gamma = s
            .split(',')
            .map(|t| parse_rational(t.trim()).ok_or_else(|| Error::InvalidThomaPoint(format!("bad rational {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        ThomaPoint::new(gamma)
    }
}

impl fmt::Display for ThomaPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gamma.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `ψ_γ(t_ρ) = ∏_{r ≥ 2} p_r(γ)^{m_r(ρ)} · 2^{(l(ρ) - |ρ|)/2}` for odd-part `ρ`, zero otherwise.
pub fn psi(gamma: &ThomaPoint, rho: &Partition) -> Root2 {
    if !rho.is_odd() {
        return Root2::zero();
    }
    let value = rho
        .parts()
        .iter()
        .filter(|&&r| r >= 2)
        .fold(BigRational::one(), |acc, &r| acc * gamma.power_sum(r));
    Root2::pow2_half(rho.len() as i64 - rho.weight() as i64).scale(&value)
}

/// `true` iff `ψ_γ(t_{ρ ∪ σ}) = ψ_γ(t_ρ) ψ_γ(t_σ)` exactly.
pub fn multiplicativity_check(gamma: &ThomaPoint, rho: &Partition, sigma: &Partition) -> bool {
    psi(gamma, &rho.union(sigma)) == psi(gamma, rho) * psi(gamma, sigma)
}

fn floor_times(g: &BigRational, n: usize) -> i64 {
    let v = (g * BigRational::from_usize(n)).floor().to_integer();
    i64::try_from(v).unwrap_or(i64::MAX)
}

/// A strict partition of `n` whose parts track `γ_i · n`.
///
/// Parts start as `floor(γ_i n)`. Collisions are resolved from the smallest index upward
/// by lowering the later part below its predecessor; non-positive parts are dropped. The
/// remainder `r` goes into distinct parts below the current smallest part: the shortest
/// staircase `{1..m}` with `m(m+1)/2 ≥ r`, minus the single part `m(m+1)/2 - r`. When no
/// such staircase fits, the full staircase below the smallest part is used and what is
/// left is added to `λ_1`. All new parts are `O(√n)`.
pub fn build_lambda_sequence(gamma: &ThomaPoint, n: usize) -> Result<StrictPartition> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut parts: Vec<i64> = Vec::new();
    for g in gamma.coordinates() {
        let mut v = floor_times(g, n);
        if let Some(&prev) = parts.last() {
            v = v.min(prev - 1);
        }
        if v <= 0 {
            break;
        }
        parts.push(v);
    }
    let used: i64 = parts.iter().sum();
    let mut remainder = n as i64 - used;
    if remainder < 0 {
        return Err(Error::InfeasibleRemainder(0));
    }
    let ceiling = parts.last().copied().unwrap_or(i64::MAX);
    let mut m = 0i64;
    while m * (m + 1) / 2 < remainder {
        m += 1;
    }
    if m < ceiling {
        let skip = m * (m + 1) / 2 - remainder;
        parts.extend((1..=m).rev().filter(|&v| v != skip));
        remainder = 0;
    } else {
        parts.extend((1..ceiling).rev());
        remainder -= ceiling * (ceiling - 1) / 2;
    }
    if remainder > 0 {
        parts[0] += remainder;
    }
    let lambda = StrictPartition::new(&parts)?;
    if lambda.weight() != n {
        return Err(Error::InfeasibleRemainder(remainder as usize));
    }
    Ok(lambda)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub lambda: StrictPartition,
    pub xi: Root2,
    pub psi: Root2,
    /// `|ξ - ψ|` with `√2` replaced by a rational accurate to [`ERROR_DIGITS`] digits.
    pub abs_error: BigRational,
}

impl ConvergenceRow {
    pub fn abs_error_decimal(&self) -> String {
        format_decimal(&self.abs_error, ERROR_DIGITS - 10)
    }

    pub fn abs_error_f64(&self) -> f64 {
        Root2::rational(self.abs_error.clone()).to_f64()
    }
}

/// One row of [`convergence_table`].
pub fn convergence_row(gamma: &ThomaPoint, rho: &Partition, n: usize) -> Result<ConvergenceRow> {
    if n < rho.weight() {
        return Err(Error::SizeMismatch { expected: n, got: rho.weight() });
    }
    let lambda = build_lambda_sequence(gamma, n)?;
    let xi_value = xi(&lambda, rho)?;
    let psi_value = psi(gamma, rho);
    let abs_error = (xi_value.clone() - psi_value.clone()).abs().approximate(ERROR_DIGITS);
    Ok(ConvergenceRow { n, lambda, xi: xi_value, psi: psi_value, abs_error })
}

/// `ξ(λ(n), ρ)` against `ψ_γ(t_ρ)` for each `n`, in input order.
pub fn convergence_table(gamma: &ThomaPoint, rho: &Partition, ns: &[usize]) -> Result<Vec<ConvergenceRow>> {
    ns.iter().map(|&n| convergence_row(gamma, rho, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use proptest::prelude::*;

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::from_ratio(n, d)
    }

    fn standard() -> ThomaPoint {
        "1/2,1/3,1/6".parse().unwrap()
    }

    #[test]
    fn validation() {
        assert!(ThomaPoint::from_ratios(&[(1, 3), (1, 2)]).is_err());
        assert!(ThomaPoint::from_ratios(&[(2, 3), (1, 2)]).is_err());
        assert!(ThomaPoint::from_ratios(&[(1, 2), (-1, 2)]).is_err());
        assert!("1/2,x".parse::<ThomaPoint>().is_err());
        assert_eq!("".parse::<ThomaPoint>().unwrap().coordinates().len(), 0);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&standard(), &p(&[3])), Root2::rational(q(1, 12)));
        assert_eq!(psi(&standard(), &p(&[3, 1, 1])), Root2::rational(q(1, 12)));
        assert!(psi(&standard(), &p(&[2, 1])).is_zero());
        let one = ThomaPoint::from_ratios(&[(1, 1)]).unwrap();
        for rho in [p(&[3]), p(&[5, 3, 1]), p(&[1, 1])] {
            assert_eq!(psi(&one, &rho), Root2::pow2_half(rho.len() as i64 - rho.weight() as i64));
        }
    }

    #[test]
    fn multiplicativity_examples() {
        assert!(multiplicativity_check(&standard(), &p(&[3]), &p(&[1])));
        assert!(multiplicativity_check(&standard(), &p(&[2]), &p(&[1])));
        let halves = ThomaPoint::from_ratios(&[(1, 2), (1, 2)]).unwrap();
        assert_eq!(psi(&halves, &p(&[3, 3])), Root2::rational(q(1, 64)));
        assert!(multiplicativity_check(&halves, &p(&[3]), &p(&[3])));
    }

    #[test]
    fn lambda_sequence_examples() {
        let g = standard();
        assert_eq!(build_lambda_sequence(&g, 12).unwrap().parts(), &[6, 4, 2]);
        assert_eq!(build_lambda_sequence(&g, 60).unwrap().parts(), &[30, 20, 10]);
        let one = ThomaPoint::from_ratios(&[(1, 1)]).unwrap();
        assert_eq!(build_lambda_sequence(&one, 5).unwrap().parts(), &[5]);
        let empty = ThomaPoint::new(vec![]).unwrap();
        assert_eq!(build_lambda_sequence(&empty, 7).unwrap().parts(), &[4, 2, 1]);
        let halves = ThomaPoint::from_ratios(&[(1, 2), (1, 2)]).unwrap();
        assert_eq!(build_lambda_sequence(&halves, 3).unwrap().parts(), &[3]);
        assert_eq!(build_lambda_sequence(&halves, 10).unwrap().parts(), &[5, 4, 1]);
        assert!(build_lambda_sequence(&g, 0).is_err());
    }

    #[test]
    fn convergence_examples() {
        let rows = convergence_table(&standard(), &p(&[3]), &[12, 24, 48]).unwrap();
        assert!(rows[0].abs_error > rows[1].abs_error && rows[1].abs_error > rows[2].abs_error);
        let rows = convergence_table(&standard(), &p(&[1]), &[5, 12, 30]).unwrap();
        assert!(rows.iter().all(|r| r.abs_error.is_zero()));
        assert!(matches!(convergence_row(&standard(), &p(&[3, 1]), 3), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn single_row_limit() {
        let one = ThomaPoint::from_ratios(&[(1, 1)]).unwrap();
        let rows = convergence_table(&one, &p(&[3]), &[6, 12, 24]).unwrap();
        for r in &rows {
            assert_eq!(r.lambda.parts(), &[r.n]);
            assert_eq!(r.xi, Root2::rational(q(1, 2)));
            assert!(r.abs_error.is_zero());
        }
    }

    #[test]
    fn multiplicativity_on_small_classes() {
        let g = standard();
        for a in 0..=5 {
            for b in 0..=5 {
                for rho in partitions_of(a) {
                    for sigma in partitions_of(b) {
                        assert!(multiplicativity_check(&g, &rho, &sigma));
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn lambda_sequence_is_strict_partition_of_n(
            raw in proptest::collection::vec(0i64..20, 0..5),
            n in 1usize..400,
        ) {
            let mut g: Vec<i64> = raw;
            g.sort_unstable_by(|a, b| b.cmp(a));
            let den = 20 * (g.len() as i64).max(1);
            let gamma = ThomaPoint::new(g.iter().map(|&v| q(v, den)).collect()).unwrap();
            let lambda = build_lambda_sequence(&gamma, n).unwrap();
            prop_assert_eq!(lambda.weight(), n);
            prop_assert!(lambda.is_strict());
        }
    }
}
