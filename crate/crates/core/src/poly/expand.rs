//! The symmetrization operator and monomial-basis expansions of `P_μ`, `P*_μ` and `p_ρ`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{Partition, StrictPartition};
use crate::poly::monomial::SymmetricPolynomial;
use crate::poly::multivar::{antisymmetrize, div_by_vandermonde, Exponent, Poly};
use crate::scalar::Scalar;

/// Antisymmetrization runs over all `n!` permutations; beyond this it stops being cheap.
pub const MAX_SYMBOLIC_VARS: usize = 7;

/// `R̃_n = Σ_{ω ∈ S(n)} R_n(x_ω)` for
/// `R_n = r(x_1..x_l) ∏_{i ≤ l, i < j ≤ n} (x_i + x_j)/(x_i - x_j)`, where `l` is the
/// number of variables of `r`.
///
/// Computed as `ũ_n / V`: `u_n = r ∏_{i≤l, i<j≤n} (x_i + x_j) ∏_{l<i<j≤n} (x_i - x_j)`
/// is antisymmetrized and divided by the Vandermonde product one linear factor at a
/// time. A nonzero remainder is reported as [`Error::NonDivisible`] and means a bug.
pub fn symmetrize_rtilde<T: Scalar>(r: &Poly<T>, n: usize) -> Result<SymmetricPolynomial<T>> {
    let l = r.n_vars();
    if l > n {
        return Err(Error::InvalidArgument(format!("r has {l} variables but n = {n}")));
    }
    if n > MAX_SYMBOLIC_VARS {
        return Err(Error::TooManyVariables { n, limit: MAX_SYMBOLIC_VARS });
    }
    let one = T::one();
    let minus_one = -T::one();
    let mut u = r.extend_vars(n);
    for i in 0..l {
        for j in i + 1..n {
            u = u.mul_binomial(i, j, &one);
        }
    }
    for i in l..n {
        for j in i + 1..n {
            u = u.mul_binomial(i, j, &minus_one);
        }
    }
    let quotient = div_by_vandermonde(&antisymmetrize(&u))?;
    SymmetricPolynomial::from_symmetric_poly(&quotient).map_err(|_| Error::NonDivisible)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Schur P-polynomial `P_μ`.
    P,
    /// Factorial Schur P-polynomial `P*_μ`.
    Pstar,
    /// Power sum `p_ρ` (odd parts only).
    PowerSum,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" => Ok(Family::P),
            "Pstar" | "P*" => Ok(Family::Pstar),
            "p" => Ok(Family::PowerSum),
            other => Err(Error::InvalidArgument(format!("unknown family {other:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::P => "P",
            Family::Pstar => "Pstar",
            Family::PowerSum => "p",
        })
    }
}

/// `(x↓k)` as a polynomial in variable `var` of `n_vars`.
fn falling_factorial_poly<T: Scalar>(n_vars: usize, var: usize, k: usize) -> Poly<T> {
    (0..k).fold(Poly::one(n_vars), |acc, i| {
        acc.mul(&Poly::var(n_vars, var).add(&Poly::constant(n_vars, -T::from_usize(i))))
    })
}

fn factorial<T: Scalar>(k: usize) -> T {
    (1..=k).fold(T::one(), |acc, i| acc * T::from_usize(i))
}

/// The seed `r` for `P_{μ|n}` (monomial) or `P*_{μ|n}` (falling factorial), including the
/// `1/(n-l)!` normalization.
pub fn seed_polynomial<T: Scalar>(family: Family, mu: &StrictPartition, n: usize) -> Poly<T> {
    let l = mu.len();
    let mut r = Poly::one(l);
    for (i, &m) in mu.parts().iter().enumerate() {
        let factor = match family {
            Family::P => {
                let mut e: Exponent = vec![0; l];
                e[i] = m as u32;
                Poly::from_terms(l, [(e, T::one())])
            }
            Family::Pstar => falling_factorial_poly(l, i, m),
            Family::PowerSum => unreachable!("power sums are not symmetrized"),
        };
        r = r.mul(&factor);
    }
    r.scale(&(T::one() / factorial::<T>(n - l)))
}

/// Monomial-basis expansion of `P_{μ|n}`, `P*_{μ|n}` or `p_{ρ|n}`, split by degree.
///
/// `P` and `P*` need a strict index (zero when `l(μ) > n`); `p` needs odd parts.
pub fn expand_in_monomials<T: Scalar>(
    family: Family,
    index: &Partition,
    n: usize,
) -> Result<SymmetricPolynomial<T>> {
    match family {
        Family::P | Family::Pstar => {
            let mu = StrictPartition::try_from(index.clone())
                .map_err(|_| Error::UnsupportedIndex(format!("{family} needs a strict index, got {index}")))?;
            if mu.len() > n {
                return Ok(SymmetricPolynomial::zero(n));
            }
            symmetrize_rtilde(&seed_polynomial::<T>(family, &mu, n), n)
        }
        Family::PowerSum => {
            if !index.is_odd() {
                return Err(Error::UnsupportedIndex(format!("p needs odd parts, got {index}")));
            }
            Ok(power_sum_expansion(index, n))
        }
    }
}

/// `p_{ρ|n}` in the monomial basis for any partition `ρ`.
pub fn power_sum_expansion<T: Scalar>(rho: &Partition, n: usize) -> SymmetricPolynomial<T> {
    let mut acc = Poly::one(n);
    for &k in rho.parts() {
        let mut pk = Poly::zero(n);
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = k as u32;
            pk.add_term(e, T::one());
        }
        acc = acc.mul(&pk);
    }
    SymmetricPolynomial::from_symmetric_poly(&acc).expect("products of power sums are symmetric")
}
