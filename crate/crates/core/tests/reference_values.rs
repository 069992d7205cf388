//! Worked values, each checked against an oracle written here from first principles:
//! permutation sums for the symmetrized polynomials, exhaustive fillings for tableau
//! counts and hand expansions for the small polynomials.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use shifted::dimensions::{f_closed, f_skew, g_closed, g_skew, shifted_ordinary_identity_check};
use shifted::partition::{shifted_to_ordinary, OrdinarySkewShape, ShiftedSkewShape};
use shifted::poly::{
    capital_h, eval_p, eval_pstar, eval_sstar, expand_in_monomials, falling_factorial, power_sum_eval,
    supersymmetry_test, Family, MonomialPolynomial, SymmetricPolynomial,
};
use shifted::spin::{char_value, p_to_P_coefficients, psi, restriction_coefficient, xi, ThomaPoint};
use shifted::tableau::{count_ordinary_standard_tableaux, count_shifted_standard_tableaux};
use shifted::{Partition, Rational, Root2, Scalar, StrictPartition};

fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn p(parts: &[i64]) -> Partition {
    Partition::new(parts).unwrap()
}

fn sp(parts: &[i64]) -> StrictPartition {
    StrictPartition::new(parts).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..=rest.len() {
            let mut v = rest.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out
}

/// `(1/(n-l)!) Σ_{ω ∈ S(n)} ∏_i w_i(x_{ω(i)}) ∏_{i ≤ l, i < j ≤ n} (x_ω(i) + x_ω(j)) / (x_ω(i) - x_ω(j))`.
fn symmetrization_oracle(weights: &dyn Fn(usize, &Rational) -> Rational, l: usize, x: &[Rational]) -> Rational {
    let n = x.len();
    if l > n {
        return Rational::zero();
    }
    let mut total = Rational::zero();
    for w in permutations(n) {
        let y: Vec<&Rational> = w.iter().map(|&i| &x[i]).collect();
        let mut t = Rational::one();
        for i in 0..l {
            t *= weights(i, y[i]);
            for j in i + 1..n {
                t *= (y[i] + y[j]) / (y[i] - y[j]);
            }
        }
        total += t;
    }
    let fact: Rational = (1..=(n - l) as i64).map(Rational::from_i64).product();
    total / fact
}

fn p_oracle(mu: &[usize], x: &[Rational]) -> Rational {
    symmetrization_oracle(&|i, v| v.powi(mu[i] as u32), mu.len(), x)
}

fn pstar_oracle(mu: &[usize], x: &[Rational]) -> Rational {
    symmetrization_oracle(&|i, v| falling_factorial(v, mu[i]), mu.len(), x)
}

/// Fillings of a cell set by `1..N` increasing along rows and columns, by trying every
/// bijection.
fn fillings_oracle(cells: &[(usize, usize)]) -> BigUint {
    let n = cells.len();
    let mut count = 0u64;
    for w in permutations(n) {
        let ok = (0..n).all(|a| {
            (0..n).all(|b| {
                let (ra, ca) = cells[a];
                let (rb, cb) = cells[b];
                let before = (ra == rb && ca < cb) || (ca == cb && ra < rb);
                !before || w[a] < w[b]
            })
        });
        if ok {
            count += 1;
        }
    }
    BigUint::from(count)
}

fn point(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_i64(x)).collect()
}

#[test]
fn shifted_cells_and_counts() {
    let shape = ShiftedSkewShape::new(&sp(&[3, 1]), &sp(&[2])).unwrap();
    assert_eq!(shape.cells(), &[(1, 3), (2, 2)]);
    assert!(ShiftedSkewShape::new(&sp(&[2, 1]), &sp(&[2, 1])).unwrap().is_empty());
    assert_eq!(ShiftedSkewShape::new(&sp(&[2]), &StrictPartition::empty()).unwrap().cells(), &[(1, 1), (1, 2)]);

    for (outer, inner, want) in [(&[3, 1][..], &[2][..], 2u32), (&[2, 1], &[2, 1], 1), (&[3, 2, 1], &[], 2)] {
        let shape = ShiftedSkewShape::new(&sp(outer), &sp(inner)).unwrap();
        let oracle = fillings_oracle(shape.cells());
        assert_eq!(oracle, BigUint::from(want));
        assert_eq!(count_shifted_standard_tableaux(&shape), oracle);
        assert_eq!(g_skew(&sp(outer), &sp(inner)).unwrap().value, oracle);
    }
}

#[test]
fn ordinary_counts() {
    for (outer, inner, want) in [(&[2, 1][..], &[][..], 2u32), (&[2, 1], &[1], 2), (&[5], &[], 1), (&[3, 2], &[2, 1], 2)] {
        let shape = OrdinarySkewShape::new(&p(outer), &p(inner)).unwrap();
        let oracle = fillings_oracle(shape.cells());
        assert_eq!(oracle, BigUint::from(want));
        assert_eq!(count_ordinary_standard_tableaux(&shape), oracle);
        assert_eq!(f_skew(&p(outer), &p(inner)).unwrap().value, oracle);
    }
}

#[test]
fn closed_forms_against_fillings() {
    for parts in [&[3, 1][..], &[4], &[3, 2, 1], &[5, 3, 1]] {
        let lam = sp(parts);
        let shape = ShiftedSkewShape::new(&lam, &StrictPartition::empty()).unwrap();
        assert_eq!(g_closed(&lam).unwrap(), fillings_oracle(shape.cells()), "{lam}");
    }
    for parts in [&[2, 1][..], &[2, 2], &[3, 1, 1], &[4]] {
        let eta = p(parts);
        let shape = OrdinarySkewShape::new(&eta, &Partition::empty()).unwrap();
        assert_eq!(f_closed(&eta).unwrap(), fillings_oracle(shape.cells()), "{eta}");
    }
}

#[test]
fn shifted_to_ordinary_examples() {
    let (eta, nu) = shifted_to_ordinary(&sp(&[3, 1]), &sp(&[2])).unwrap();
    assert_eq!((eta, nu), (p(&[3, 2]), p(&[2, 1])));
    let (eta, nu) = shifted_to_ordinary(&sp(&[2, 1]), &sp(&[2, 1])).unwrap();
    assert_eq!((eta, nu), (p(&[2, 2]), p(&[2, 2])));
    assert!(shifted_ordinary_identity_check(&sp(&[3, 1]), &sp(&[2])).unwrap());
    assert!(shifted_ordinary_identity_check(&sp(&[4, 2]), &sp(&[3, 1])).unwrap());
}

#[test]
fn scalar_helpers() {
    assert_eq!(falling_factorial(&q(5, 1), 2), q(20, 1));
    assert_eq!(falling_factorial(&q(7, 3), 0), q(1, 1));
    assert_eq!(falling_factorial(&q(2, 1), 3), q(0, 1));
    assert_eq!(power_sum_eval(&p(&[3]), &point(&[2, 1])), q(9, 1));
    assert_eq!(power_sum_eval(&p(&[3, 1]), &point(&[2, 1])), q(27, 1));
    assert_eq!(power_sum_eval(&Partition::empty(), &point(&[4, 7])), q(1, 1));
    assert_eq!(capital_h::<Rational>(&sp(&[2, 1])), q(6, 1));
    assert_eq!(capital_h::<Rational>(&sp(&[3, 1])), q(12, 1));
    assert_eq!(capital_h::<Rational>(&sp(&[5])), q(120, 1));
}

#[test]
fn schur_p_values_match_permutation_sums() {
    let x = point(&[3, 1]);
    assert_eq!(eval_p(&sp(&[2]), &x).unwrap(), q(16, 1));
    assert_eq!(p_oracle(&[2], &x), q(16, 1));
    assert_eq!(eval_p(&sp(&[1]), &x).unwrap(), q(4, 1));
    assert_eq!(eval_p(&sp(&[2, 1]), &point(&[5])).unwrap(), q(0, 1));
    let y = vec![q(1, 2), q(-3, 1), q(7, 5), q(2, 1)];
    for mu in [&[3][..], &[2, 1], &[4, 2, 1], &[5, 3]] {
        let parts: Vec<usize> = mu.iter().map(|&v| v as usize).collect();
        assert_eq!(eval_p::<Rational>(&sp(mu), &y).unwrap(), p_oracle(&parts, &y), "{mu:?}");
        assert_eq!(
            shifted::poly::eval_pstar_at::<Rational>(&sp(mu), &y).unwrap(),
            pstar_oracle(&parts, &y),
            "{mu:?}"
        );
    }
}

#[test]
fn factorial_p_at_partitions() {
    assert_eq!(eval_pstar::<Rational>(&sp(&[2]), &sp(&[3, 1])), q(12, 1));
    assert_eq!(pstar_oracle(&[2], &point(&[3, 1])), q(12, 1));
    assert_eq!(eval_pstar::<Rational>(&sp(&[3]), &sp(&[2, 1])), q(0, 1));
    assert_eq!(pstar_oracle(&[3], &point(&[2, 1])), q(0, 1));
    for lam in [&[1][..], &[3, 1], &[4, 2, 1], &[5, 2]] {
        let lam = sp(lam);
        assert_eq!(eval_pstar::<Rational>(&sp(&[1]), &lam), Rational::from_usize(lam.weight()));
    }
}

fn mono(degree: usize, n: usize, terms: &[(&[i64], i64)]) -> MonomialPolynomial<Rational> {
    MonomialPolynomial::from_coeffs(degree, n, terms.iter().map(|(k, c)| (p(k), q(*c, 1)))).unwrap()
}

#[test]
fn monomial_expansions() {
    let p21 = expand_in_monomials::<Rational>(Family::P, &p(&[2, 1]), 3).unwrap();
    assert_eq!(p21, SymmetricPolynomial::homogeneous(mono(3, 3, &[(&[2, 1], 1), (&[1, 1, 1], 2)])));
    let p3 = expand_in_monomials::<Rational>(Family::P, &p(&[3]), 3).unwrap();
    assert_eq!(p3, SymmetricPolynomial::homogeneous(mono(3, 3, &[(&[3], 1), (&[2, 1], 2), (&[1, 1, 1], 4)])));
    let pow = expand_in_monomials::<Rational>(Family::PowerSum, &p(&[3]), 3).unwrap();
    assert_eq!(pow, SymmetricPolynomial::homogeneous(mono(3, 3, &[(&[3], 1)])));
    let star = expand_in_monomials::<Rational>(Family::Pstar, &p(&[1]), 4).unwrap();
    assert_eq!(star, SymmetricPolynomial::homogeneous(mono(1, 4, &[(&[1], 1)])));

    // the expansions agree with the permutation sums off the lattice too
    let x = vec![q(2, 3), q(-5, 2), q(4, 1)];
    for mu in [&[3][..], &[2, 1], &[4, 1], &[3, 2, 1]] {
        let parts: Vec<usize> = mu.iter().map(|&v| v as usize).collect();
        let plain = expand_in_monomials::<Rational>(Family::P, &p(mu), 3).unwrap();
        assert_eq!(plain.eval(&x), p_oracle(&parts, &x));
        let star = expand_in_monomials::<Rational>(Family::Pstar, &p(mu), 3).unwrap();
        assert_eq!(star.eval(&x), pstar_oracle(&parts, &x));
    }
}

#[test]
fn shifted_schur_values() {
    assert_eq!(eval_sstar(&Partition::empty(), &point(&[2, 1])).unwrap(), q(1, 1));
    assert_eq!(eval_sstar(&p(&[1]), &point(&[2, 1])).unwrap(), q(3, 1));
    // s*_ν(ν) equals the f-side formula at η = ν: f_{ν/ν} = 1 = f_ν s*_ν(ν) / |ν|!
    let nu = p(&[2, 2]);
    let v = eval_sstar(&nu, &point(&[2, 2])).unwrap();
    let f = Rational::from_integer(f_closed(&nu).unwrap().into());
    assert_eq!(f * v / Rational::from_i64(24), q(1, 1));
}

#[test]
fn supersymmetry_examples() {
    let p21 = expand_in_monomials::<Rational>(Family::P, &p(&[2, 1]), 3).unwrap();
    assert!(supersymmetry_test(&p21, 20, 11));
    assert!(!supersymmetry_test(&SymmetricPolynomial::homogeneous(mono(2, 2, &[(&[2], 1)])), 20, 11));
    assert!(supersymmetry_test(&SymmetricPolynomial::homogeneous(mono(1, 3, &[(&[1], 1)])), 20, 11));
}

#[test]
fn character_values() {
    let c3 = p_to_P_coefficients(&p(&[3])).unwrap();
    assert_eq!(c3.get(&sp(&[3])), Some(&q(1, 1)));
    assert_eq!(c3.get(&sp(&[2, 1])), Some(&q(-2, 1)));
    // p_3 = P_3 - 2 P_21 at an arbitrary point
    let x = vec![q(1, 3), q(2, 1), q(-7, 4)];
    let lhs = power_sum_eval(&p(&[3]), &x);
    assert_eq!(lhs, p_oracle(&[3], &x) - q(2, 1) * p_oracle(&[2, 1], &x));

    assert_eq!(char_value(&sp(&[2]), &p(&[1, 1])).unwrap(), Root2::sqrt2());
    assert_eq!(char_value(&sp(&[3]), &p(&[1, 1, 1])).unwrap(), Root2::rational(q(2, 1)));
    assert_eq!(char_value(&sp(&[2, 1]), &p(&[3])).unwrap(), -Root2::sqrt2());
    assert_eq!(restriction_coefficient(&sp(&[3, 1]), &sp(&[2])), Root2::new(q(0, 1), q(1, 2)));
    assert_eq!(restriction_coefficient(&sp(&[2, 1]), &sp(&[2, 1])), Root2::new(q(0, 1), q(1, 2)));
    assert_eq!(xi(&sp(&[2, 1]), &p(&[1, 1])).unwrap(), Root2::one());
}

#[test]
fn limit_values() {
    let g: ThomaPoint = "1/2,1/3,1/6".parse().unwrap();
    // p_3(γ) = 1/8 + 1/27 + 1/216 = 1/6
    assert_eq!(g.power_sum(3), q(1, 6));
    assert_eq!(psi(&g, &p(&[3])), Root2::rational(q(1, 12)));
    assert!(psi(&g, &p(&[2, 1])).is_zero());
    let halves: ThomaPoint = "1/2,1/2".parse().unwrap();
    assert_eq!(psi(&halves, &p(&[3, 3])), Root2::rational(q(1, 64)));
}

#[test]
fn dimension_traces() {
    let r = g_skew(&sp(&[3, 1]), &sp(&[2])).unwrap();
    let t = r.trace.unwrap();
    assert_eq!(t.base_dimension, BigUint::from(2u32));
    assert_eq!(t.polynomial_value, BigRational::from_i64(12));
    assert_eq!(t.falling, BigUint::from(12u32));
    assert_eq!(g_skew(&sp(&[4, 1]), &sp(&[3, 2])).unwrap().value, BigUint::zero());
}
