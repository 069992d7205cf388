//! Sparse multivariate polynomials over a [`Scalar`], keyed by exponent vectors.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T> {
    n_vars: usize,
    terms: BTreeMap<Exponent, T>,
}

impl<T: Scalar> Poly<T> {
    pub fn zero(n_vars: usize) -> Self {
        Poly { n_vars, terms: BTreeMap::new() }
    }

    pub fn constant(n_vars: usize, c: T) -> Self {
        let mut p = Self::zero(n_vars);
        p.add_term(vec![0; n_vars], c);
        p
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, T::one())
    }

    /// The variable `x_i` (0-based).
    pub fn var(n_vars: usize, i: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[i] = 1;
        let mut p = Self::zero(n_vars);
        p.add_term(e, T::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, T)>>(n_vars: usize, terms: I) -> Self {
        let mut p = Self::zero(n_vars);
        for (e, c) in terms {
            assert_eq!(e.len(), n_vars, "exponent length mismatch");
            p.add_term(e, c);
        }
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, T> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> T {
        self.terms.get(e).cloned().unwrap_or_else(T::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add_term(&mut self, e: Exponent, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.n_vars);
        }
        Poly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v.clone() * c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = Self::zero(self.n_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Multiply by `x_i + sign * x_j`.
    pub fn mul_binomial(&self, i: usize, j: usize, sign: &T) -> Self {
        let mut out = Self::zero(self.n_vars);
        for (e, c) in &self.terms {
            let mut a = e.clone();
            a[i] += 1;
            out.add_term(a, c.clone());
            let mut b = e.clone();
            b[j] += 1;
            out.add_term(b, c.clone() * sign.clone());
        }
        out
    }

    /// Exact quotient by `x_i - x_j`; fails with [`Error::NonDivisible`] on a nonzero remainder.
    pub fn div_by_difference(&self, i: usize, j: usize) -> Result<Self> {
        assert!(i != j && i < self.n_vars && j < self.n_vars);
        // f = Σ_k f_k x_i^k,  q = Σ_k q_k x_i^k,  f_k = q_{k-1} - x_j q_k
        let top = self.terms.keys().map(|e| e[i] as usize).max().unwrap_or(0);
        let mut buckets: Vec<BTreeMap<Exponent, T>> = vec![BTreeMap::new(); top + 1];
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest[i] as usize;
            rest[i] = 0;
            buckets[k].insert(rest, c.clone());
        }
        let mut quotient = Self::zero(self.n_vars);
        let mut carry: BTreeMap<Exponent, T> = BTreeMap::new();
        for k in (0..=top).rev() {
            // carry holds q_k; next carry is q_{k-1} = f_k + x_j q_k
            let mut next = std::mem::take(&mut buckets[k]);
            for (mut e, c) in std::mem::take(&mut carry) {
                let mut full = e.clone();
                full[i] = k as u32;
                quotient.add_term(full, c.clone());
                e[j] += 1;
                let entry = next.entry(e).or_insert_with(T::zero);
                *entry = entry.clone() + c;
            }
            next.retain(|_, c| !c.is_zero());
            if k == 0 {
                if !next.is_empty() {
                    return Err(Error::NonDivisible);
                }
            } else {
                carry = next;
            }
        }
        Ok(quotient)
    }

    /// Substitute values for every variable.
    pub fn eval(&self, point: &[T]) -> T {
        assert_eq!(point.len(), self.n_vars);
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = t * x.powi(k);
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Embed into more variables (new ones appended, exponent zero).
    pub fn extend_vars(&self, n_vars: usize) -> Self {
        assert!(n_vars >= self.n_vars);
        Poly {
            n_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.resize(n_vars, 0);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// `p(x_{π(0)}, ..., x_{π(n-1)})`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n_vars);
        let mut out = Self::zero(self.n_vars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.n_vars];
            for (pos, &k) in e.iter().enumerate() {
                f[perm[pos]] += k;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Set the last variable to zero and drop it.
    pub fn drop_last_var_at_zero(&self) -> Self {
        assert!(self.n_vars > 0);
        let n = self.n_vars - 1;
        let mut out = Self::zero(n);
        for (e, c) in &self.terms {
            if e[n] == 0 {
                out.add_term(e[..n].to_vec(), c.clone());
            }
        }
        out
    }

    /// Components of each total degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = e.iter().sum();
            out.entry(d).or_insert_with(|| Self::zero(self.n_vars)).add_term(e.clone(), c.clone());
        }
        out
    }
}

/// All permutations of `0..n` paired with their signs (Heap's algorithm).
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1i8;
    let mut out = vec![(a.clone(), sign)];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            out.push((a.clone(), sign));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Sign of the permutation sorting `e` into strictly decreasing order, or `None` when
/// `e` has a repeated entry.
pub fn sort_sign(e: &[u32]) -> Option<i8> {
    let mut inversions = 0usize;
    for a in 0..e.len() {
        for b in a + 1..e.len() {
            match e[a].cmp(&e[b]) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

/// `Σ_ω sgn(ω) u(x_{ω(1)}, ..., x_{ω(n)})`.
///
/// Terms of `u` are first collected onto their strictly decreasing representatives
/// (every orbit contributes to exactly one), then each representative is expanded over
/// all `n!` signed rearrangements.
pub fn antisymmetrize<T: Scalar>(u: &Poly<T>) -> Poly<T> {
    let n = u.n_vars();
    let mut reps: BTreeMap<Exponent, T> = BTreeMap::new();
    for (e, c) in u.terms() {
        if let Some(s) = sort_sign(e) {
            let mut sorted = e.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let v = if s > 0 { c.clone() } else { -c.clone() };
            let entry = reps.entry(sorted).or_insert_with(T::zero);
            *entry = entry.clone() + v;
        }
    }
    reps.retain(|_, c| !c.is_zero());
    let perms = signed_permutations(n);
    let mut out = Poly::zero(n);
    for (alpha, c) in reps {
        let neg = -c.clone();
        for (perm, s) in &perms {
            let e: Exponent = perm.iter().map(|&k| alpha[k]).collect();
            out.add_term(e, if *s > 0 { c.clone() } else { neg.clone() });
        }
    }
    out
}

/// Divide by the Vandermonde product `∏_{i<j} (x_i - x_j)` one factor at a time.
pub fn div_by_vandermonde<T: Scalar>(p: &Poly<T>) -> Result<Poly<T>> {
    let n = p.n_vars();
    let mut q = p.clone();
    for i in 0..n {
        for j in i + 1..n {
            q = q.div_by_difference(i, j)?;
        }
    }
    Ok(q)
}
