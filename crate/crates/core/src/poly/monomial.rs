//! Symmetric polynomials written in the monomial basis `m_κ`.
//!
//! A supersymmetric polynomial in `n` variables is stored through its finite-`n`
//! representative; the projective limit over `n` is never materialized; stability under
//! `x_{n+1} = 0` is what ties the representatives together.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::multivar::Poly;
use crate::scalar::Scalar;

/// Homogeneous symmetric polynomial `Σ c_κ m_κ` in `n_vars` variables.
///
/// Every key has weight `degree` and at most `n_vars` parts; zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialPolynomial<T> {
    degree: usize,
    n_vars: usize,
    coeffs: BTreeMap<Partition, T>,
}

impl<T: Scalar> MonomialPolynomial<T> {
    pub fn zero(degree: usize, n_vars: usize) -> Self {
        MonomialPolynomial { degree, n_vars, coeffs: BTreeMap::new() }
    }

    pub fn from_coeffs<I>(degree: usize, n_vars: usize, coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, T)>,
    {
        let mut p = Self::zero(degree, n_vars);
        for (k, c) in coeffs {
            if k.weight() != degree || k.len() > n_vars {
                return Err(Error::InvalidArgument(format!(
                    "monomial {k} incompatible with degree {degree} in {n_vars} variables"
                )));
            }
            p.add(k, c);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, T> {
        &self.coeffs
    }

    pub fn coeff(&self, kappa: &Partition) -> T {
        self.coeffs.get(kappa).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&mut self, kappa: Partition, c: T) {
        if c.is_zero() {
            return;
        }
        let v = self.coeff(&kappa) + c;
        if v.is_zero() {
            self.coeffs.remove(&kappa);
        } else {
            self.coeffs.insert(kappa, v);
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.degree, self.n_vars);
        for (k, v) in &self.coeffs {
            out.add(k.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!((self.degree, self.n_vars), (other.degree, other.n_vars));
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add(k.clone(), v.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&-T::one()))
    }

    pub fn eval(&self, point: &[T]) -> T {
        assert_eq!(point.len(), self.n_vars, "point dimension");
        self.coeffs
            .iter()
            .fold(T::zero(), |acc, (k, c)| acc + c.clone() * monomial_symmetric_eval(k, point))
    }

    /// Restrict to `x_n = 0`: monomials of full length vanish.
    pub fn set_last_var_zero(&self) -> Self {
        assert!(self.n_vars > 0);
        let n = self.n_vars - 1;
        let mut out = Self::zero(self.degree, n);
        for (k, v) in &self.coeffs {
            if k.len() <= n {
                out.add(k.clone(), v.clone());
            }
        }
        out
    }

    pub fn to_poly(&self) -> Poly<T> {
        let mut p = Poly::zero(self.n_vars);
        for (k, c) in &self.coeffs {
            for e in distinct_rearrangements(k, self.n_vars) {
                p.add_term(e, c.clone());
            }
        }
        p
    }
}

/// A symmetric polynomial split into homogeneous components, keyed by degree.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricPolynomial<T> {
    n_vars: usize,
    components: BTreeMap<usize, MonomialPolynomial<T>>,
}

impl<T: Scalar> SymmetricPolynomial<T> {
    pub fn zero(n_vars: usize) -> Self {
        SymmetricPolynomial { n_vars, components: BTreeMap::new() }
    }

    pub fn homogeneous(p: MonomialPolynomial<T>) -> Self {
        let mut out = Self::zero(p.n_vars);
        if !p.is_zero() {
            out.components.insert(p.degree, p);
        }
        out
    }

    /// Read off the monomial coefficients of a polynomial assumed symmetric. Returns
    /// [`Error::InvalidArgument`] if it is not.
    pub fn from_symmetric_poly(p: &Poly<T>) -> Result<Self> {
        let n = p.n_vars();
        let mut out = Self::zero(n);
        let mut expected_terms = 0usize;
        for (e, c) in p.terms() {
            let mut sorted = e.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if p.coeff(&sorted) != *c {
                return Err(Error::InvalidArgument("polynomial is not symmetric".into()));
            }
            if sorted == *e {
                expected_terms += rearrangement_count(e);
                let kappa = Partition::from_usizes(e.iter().map(|&x| x as usize).collect());
                let d = kappa.weight();
                out.components
                    .entry(d)
                    .or_insert_with(|| MonomialPolynomial::zero(d, n))
                    .add(kappa, c.clone());
            }
        }
        if expected_terms != p.len() {
            return Err(Error::InvalidArgument("polynomial is not symmetric".into()));
        }
        out.components.retain(|_, m| !m.is_zero());
        Ok(out)
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn components(&self) -> &BTreeMap<usize, MonomialPolynomial<T>> {
        &self.components
    }

    /// The degree-`d` component (zero if absent).
    pub fn component(&self, d: usize) -> MonomialPolynomial<T> {
        self.components.get(&d).cloned().unwrap_or_else(|| MonomialPolynomial::zero(d, self.n_vars))
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.components.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.n_vars);
        for (d, m) in &self.components {
            let s = m.scale(c);
            if !s.is_zero() {
                out.components.insert(*d, s);
            }
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = self.clone();
        for (d, m) in &other.components {
            let sum = out.component(*d).plus(m);
            if sum.is_zero() {
                out.components.remove(d);
            } else {
                out.components.insert(*d, sum);
            }
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&-T::one()))
    }

    pub fn set_last_var_zero(&self) -> Self {
        let mut out = Self::zero(self.n_vars - 1);
        for (d, m) in &self.components {
            let r = m.set_last_var_zero();
            if !r.is_zero() {
                out.components.insert(*d, r);
            }
        }
        out
    }

    pub fn eval(&self, point: &[T]) -> T {
        self.components.values().fold(T::zero(), |acc, m| acc + m.eval(point))
    }

    pub fn to_poly(&self) -> Poly<T> {
        self.components.values().fold(Poly::zero(self.n_vars), |acc, m| acc.add(&m.to_poly()))
    }
}

/// Number of distinct rearrangements of a sorted exponent vector.
fn rearrangement_count(sorted: &[u32]) -> usize {
    let mut count = 1usize;
    let mut run = 0usize;
    for (i, v) in sorted.iter().enumerate() {
        run = if i > 0 && sorted[i - 1] == *v { run + 1 } else { 1 };
        count = count * (i + 1) / run;
    }
    count
}

/// Exponent vectors of length `n` that are rearrangements of `kappa` padded with zeros.
pub fn distinct_rearrangements(kappa: &Partition, n: usize) -> Vec<Vec<u32>> {
    assert!(kappa.len() <= n);
    let mut cur: Vec<u32> = (1..=n).map(|i| kappa.part(i) as u32).collect();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `m_κ(x_1, ..., x_n)`; zero when `κ` has more than `n` parts.
pub fn monomial_symmetric_eval<T: Scalar>(kappa: &Partition, point: &[T]) -> T {
    if kappa.len() > point.len() {
        return T::zero();
    }
    distinct_rearrangements(kappa, point.len()).iter().fold(T::zero(), |acc, e| {
        let term = e
            .iter()
            .zip(point)
            .fold(T::one(), |t, (&k, x)| if k == 0 { t } else { t * x.powi(k) });
        acc + term
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn rearrangement_counts() {
        let k = Partition::new(&[2, 1, 1]).unwrap();
        assert_eq!(distinct_rearrangements(&k, 3).len(), 3);
        assert_eq!(distinct_rearrangements(&k, 4).len(), 12);
        assert_eq!(distinct_rearrangements(&Partition::empty(), 3), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn monomial_eval() {
        let pt = [Q::from_i64(2), Q::from_i64(3)];
        // m_{(2,1)}(2,3) = 4*3 + 9*2
        assert_eq!(monomial_symmetric_eval(&Partition::new(&[2, 1]).unwrap(), &pt), Q::from_i64(30));
        assert_eq!(monomial_symmetric_eval(&Partition::new(&[1, 1, 1]).unwrap(), &pt), Q::from_i64(0));
    }

    #[test]
    fn poly_round_trip() {
        let m = MonomialPolynomial::from_coeffs(
            3,
            3,
            [
                (Partition::new(&[3]).unwrap(), Q::from_i64(1)),
                (Partition::new(&[2, 1]).unwrap(), Q::from_i64(2)),
                (Partition::new(&[1, 1, 1]).unwrap(), Q::from_i64(4)),
            ],
        )
        .unwrap();
        let s = SymmetricPolynomial::homogeneous(m.clone());
        let back = SymmetricPolynomial::from_symmetric_poly(&s.to_poly()).unwrap();
        assert_eq!(back, s);
        assert!(MonomialPolynomial::<Q>::from_coeffs(3, 2, [(Partition::new(&[1, 1, 1]).unwrap(), Q::from_i64(1))]).is_err());
    }

    #[test]
    fn asymmetric_poly_rejected() {
        let p = Poly::<Q>::var(2, 0);
        assert!(SymmetricPolynomial::from_symmetric_poly(&p).is_err());
    }
}
