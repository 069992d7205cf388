//! Spin character values on the class elements `t_ρ`, restriction coefficients and the
//! normalized characters `ξ`.
//!
//! Character values come from the transition between odd power sums and Schur
//! P-functions: writing `p_ρ = Σ_μ c_μ P_μ` gives `χ^μ_*(t_ρ) = 2^{(l(ρ) - l(μ))/2} c_μ`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;

use crate::dimensions::g_skew;
use crate::error::{Error, Result};
use crate::partition::{odd_partitions_of, strict_partitions_of, Partition, StrictPartition};
use crate::poly::{eval_pstar, expand_in_monomials, falling_factorial, power_sum_expansion, Family};
use crate::scalar::Scalar;
use crate::spin::root2::Root2Value;

type Root2 = Root2Value<BigRational>;

/// Largest `|ρ|` accepted by the basis conversion.
pub const MAX_CHARACTER_DEGREE: usize = 14;

/// `p_ρ = Σ_{μ ⊢ k strict} c_μ P_μ`; only nonzero coefficients are stored.
pub type PCoefficients = BTreeMap<StrictPartition, BigRational>;

fn check_odd(rho: &Partition) -> Result<()> {
    if rho.is_odd() {
        Ok(())
    } else {
        Err(Error::EvenPart(rho.to_string()))
    }
}

fn coefficient_cache() -> &'static Mutex<HashMap<Partition, PCoefficients>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, PCoefficients>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of `p_ρ` in the P-basis.
///
/// Both sides are expanded in `n` variables, `n` the largest length of a strict partition
/// of `k`: the `P_μ` stay linearly independent there because `m_μ` survives. The
/// coefficients are read off strict monomials in decreasing order, which is valid because
/// `P_μ = m_μ + (terms lower in dominance)`. The full residual must vanish.
#[allow(non_snake_case)]
pub fn p_to_P_coefficients(rho: &Partition) -> Result<PCoefficients> {
    check_odd(rho)?;
    let k = rho.weight();
    if k > MAX_CHARACTER_DEGREE {
        return Err(Error::DegreeTooLarge { degree: k, bound: MAX_CHARACTER_DEGREE });
    }
    if let Some(hit) = coefficient_cache().lock().unwrap().get(rho) {
        return Ok(hit.clone());
    }
    let strict = strict_partitions_of(k);
    let n = strict.iter().map(|mu| mu.len()).max().unwrap_or(0).max(1);
    let mut residual = power_sum_expansion::<BigRational>(rho, n).component(k);
    let mut out = PCoefficients::new();
    // strict_partitions_of is in reverse-lex order, a linear extension of dominance
    for mu in &strict {
        let c = residual.coeff(mu);
        if c.is_zero() {
            continue;
        }
        let p_mu = expand_in_monomials::<BigRational>(Family::P, mu, n)?.component(k);
        residual = residual.minus(&p_mu.scale(&c));
        out.insert(mu.clone(), c);
    }
    if !residual.is_zero() {
        return Err(Error::NonDivisible);
    }
    coefficient_cache().lock().unwrap().insert(rho.clone(), out.clone());
    Ok(out)
}

/// `χ^μ_*(t_ρ)` for an odd-part class `ρ` with `|ρ| = |μ|`.
pub fn char_value(mu: &StrictPartition, rho: &Partition) -> Result<Root2> {
    check_odd(rho)?;
    if mu.weight() != rho.weight() {
        return Err(Error::SizeMismatch { expected: mu.weight(), got: rho.weight() });
    }
    let coeffs = p_to_P_coefficients(rho)?;
    Ok(match coeffs.get(mu) {
        None => Root2::zero(),
        Some(c) => Root2::pow2_half(rho.len() as i64 - mu.len() as i64).scale(c),
    })
}

/// All values `χ^μ_*(t_ρ)` for fixed `ρ`, indexed by strict `μ ⊢ |ρ|`.
pub fn char_column(rho: &Partition) -> Result<Vec<(StrictPartition, Root2)>> {
    let coeffs = p_to_P_coefficients(rho)?;
    Ok(strict_partitions_of(rho.weight())
        .into_iter()
        .map(|mu| {
            let v = match coeffs.get(&mu) {
                None => Root2::zero(),
                Some(c) => Root2::pow2_half(rho.len() as i64 - mu.len() as i64).scale(c),
            };
            (mu, v)
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterEntry {
    pub mu: StrictPartition,
    pub rho: Partition,
    pub value: Root2,
}

/// `χ^μ_*(t_ρ)` for every strict `μ ⊢ k` and odd-part `ρ ⊢ k`. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    k: usize,
    entries: Vec<CharacterEntry>,
}

impl CharacterTable {
    /// Rows ordered by `μ` then `ρ`, both in reverse-lex order.
    pub fn build(k: usize) -> Result<Self> {
        let mut columns = Vec::new();
        for rho in odd_partitions_of(k) {
            columns.push((rho.clone(), char_column(&rho)?));
        }
        let mut entries = Vec::new();
        for mu in strict_partitions_of(k) {
            for (rho, column) in &columns {
                let value = column.iter().find(|(m, _)| *m == mu).map(|(_, v)| v.clone()).unwrap();
                entries.push(CharacterEntry { mu: mu.clone(), rho: rho.clone(), value });
            }
        }
        Ok(CharacterTable { k, entries })
    }

    pub fn from_entries(k: usize, entries: Vec<CharacterEntry>) -> Self {
        CharacterTable { k, entries }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entries(&self) -> &[CharacterEntry] {
        &self.entries
    }

    pub fn get(&self, mu: &StrictPartition, rho: &Partition) -> Option<&Root2> {
        self.entries.iter().find(|e| &e.mu == mu && &e.rho == rho).map(|e| &e.value)
    }
}

/// `2^{(l(μ) - |μ|)/2} P*_μ(λ) / (|λ|↓|μ|)`; zero when `μ ⊄ λ`.
pub fn restriction_coefficient(lambda: &StrictPartition, mu: &StrictPartition) -> Root2 {
    if !mu.is_contained_in(lambda) {
        return Root2::zero();
    }
    let pstar: BigRational = eval_pstar(mu, lambda);
    let falling = falling_factorial(&BigRational::from_usize(lambda.weight()), mu.weight());
    Root2::pow2_half(mu.len() as i64 - mu.weight() as i64).scale(&(pstar / falling))
}

/// Normalized character `χ^λ_*(t_ρ) / χ^λ_*(e)` with `t_ρ` embedded in the larger group.
pub fn xi(lambda: &StrictPartition, rho: &Partition) -> Result<Root2> {
    check_odd(rho)?;
    let k = rho.weight();
    if k > lambda.weight() {
        return Err(Error::SizeMismatch { expected: lambda.weight(), got: k });
    }
    let mut acc = Root2::zero();
    for (mu, value) in char_column(rho)? {
        if value.is_zero() {
            continue;
        }
        acc = acc + restriction_coefficient(lambda, &mu) * value;
    }
    Ok(acc)
}

fn biguint_to_rational(v: &BigUint) -> BigRational {
    BigRational::from_integer(v.clone().into())
}

/// Compares `χ^λ_*(t_{ρ ∪ 1^{|λ|-k}})` with the restriction sum over strict `μ ⊢ k`.
pub fn branching_check(lambda: &StrictPartition, k: usize, rho: &Partition) -> Result<bool> {
    check_odd(rho)?;
    if rho.weight() != k {
        return Err(Error::SizeMismatch { expected: k, got: rho.weight() });
    }
    if k > lambda.weight() {
        return Err(Error::SizeMismatch { expected: lambda.weight(), got: k });
    }
    let lhs = char_value(lambda, &rho.union(&Partition::ones(lambda.weight() - k)))?;
    let mut rhs = Root2::zero();
    for (mu, value) in char_column(rho)? {
        let g = g_skew(lambda, &mu)?.value;
        if g.is_zero() || value.is_zero() {
            continue;
        }
        let shift = lambda.weight() as i64 - lambda.len() as i64 - mu.weight() as i64 + mu.len() as i64;
        rhs = rhs + Root2::pow2_half(shift).scale(&biguint_to_rational(&g)) * value;
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dimensions::g_closed;

    fn sp(parts: &[i64]) -> StrictPartition {
        StrictPartition::new(parts).unwrap()
    }

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::from_ratio(n, d)
    }

    #[test]
    fn coefficient_examples() {
        let c1 = p_to_P_coefficients(&p(&[1])).unwrap();
        assert_eq!(c1, PCoefficients::from([(sp(&[1]), q(1, 1))]));
        let c11 = p_to_P_coefficients(&p(&[1, 1])).unwrap();
        assert_eq!(c11, PCoefficients::from([(sp(&[2]), q(1, 1))]));
        let c3 = p_to_P_coefficients(&p(&[3])).unwrap();
        assert_eq!(c3, PCoefficients::from([(sp(&[3]), q(1, 1)), (sp(&[2, 1]), q(-2, 1))]));
        assert_eq!(p_to_P_coefficients(&Partition::empty()).unwrap(), PCoefficients::from([(StrictPartition::empty(), q(1, 1))]));
        assert!(matches!(p_to_P_coefficients(&p(&[2, 1])), Err(Error::EvenPart(_))));
        assert!(matches!(p_to_P_coefficients(&Partition::ones(15)), Err(Error::DegreeTooLarge { .. })));
    }

    #[test]
    fn value_examples() {
        assert_eq!(char_value(&sp(&[2]), &p(&[1, 1])).unwrap(), Root2::sqrt2());
        assert_eq!(char_value(&sp(&[3]), &p(&[1, 1, 1])).unwrap(), Root2::rational(q(2, 1)));
        assert_eq!(char_value(&sp(&[2, 1]), &p(&[3])).unwrap(), -Root2::sqrt2());
        assert!(matches!(char_value(&sp(&[2, 1]), &p(&[1])), Err(Error::SizeMismatch { .. })));
        assert!(matches!(char_value(&sp(&[2]), &p(&[2])), Err(Error::EvenPart(_))));
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(restriction_coefficient(&sp(&[3, 1]), &sp(&[2])), Root2::new(q(0, 1), q(1, 2)));
        assert_eq!(restriction_coefficient(&sp(&[2, 1]), &sp(&[2, 1])), Root2::new(q(0, 1), q(1, 2)));
        assert!(restriction_coefficient(&sp(&[4, 1]), &sp(&[3, 2])).is_zero());
    }

    #[test]
    fn xi_examples() {
        assert_eq!(xi(&sp(&[2, 1]), &p(&[1, 1])).unwrap(), Root2::one());
        let lam = sp(&[3, 2, 1]);
        let direct = xi(&lam, &p(&[3])).unwrap();
        let ratio = char_value(&lam, &p(&[3, 1, 1, 1])).unwrap()
            * char_value(&lam, &Partition::ones(6)).unwrap().inverse().unwrap();
        assert_eq!(direct, ratio);
    }

    #[test]
    fn xi_is_one_at_identity() {
        for w in 1..=8 {
            for lam in strict_partitions_of(w) {
                for k in 0..=w {
                    assert_eq!(xi(&lam, &Partition::ones(k)).unwrap(), Root2::one(), "{lam} k={k}");
                }
            }
        }
    }

    #[test]
    fn identity_normalization() {
        for w in 0..=8 {
            for mu in strict_partitions_of(w) {
                let g = biguint_to_rational(&g_closed(&mu).unwrap());
                let want = Root2::pow2_half(w as i64 - mu.len() as i64).scale(&g);
                assert_eq!(char_value(&mu, &Partition::ones(w)).unwrap(), want, "{mu}");
            }
        }
    }

    #[test]
    fn branching_examples() {
        assert!(branching_check(&sp(&[3, 1]), 3, &p(&[1, 1, 1])).unwrap());
        assert!(branching_check(&sp(&[2, 1]), 2, &p(&[1, 1])).unwrap());
        assert!(branching_check(&sp(&[4, 2, 1]), 7, &Partition::ones(7)).unwrap());
        assert!(branching_check(&sp(&[5, 2]), 5, &p(&[5])).unwrap());
    }

    #[test]
    fn table_layout() {
        let t = CharacterTable::build(3).unwrap();
        assert_eq!(t.k(), 3);
        // strict (3), (2,1) times odd (3), (1,1,1)
        assert_eq!(t.entries().len(), 4);
        assert_eq!(t.get(&sp(&[2, 1]), &p(&[3])), Some(&-Root2::sqrt2()));
        assert_eq!(t.get(&sp(&[3]), &p(&[3])), Some(&Root2::one()));
    }
}
