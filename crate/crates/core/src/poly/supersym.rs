use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::monomial::{MonomialPolynomial, SymmetricPolynomial};

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(1..=1000);
    let den: i64 = rng.gen_range(1..=1000);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Randomized check of the cancellation property: with `(x_i, x_j) = (t, -t)` the value
/// must not depend on `t`. Each trial draws a point, a pair `i < j` and two distinct
/// values of `t`. Deterministic for a given seed.
///
/// Symmetry is a property of the representation itself and is not re-checked here.
pub fn supersymmetry_test(poly: &SymmetricPolynomial<BigRational>, trials: usize, seed: u64) -> bool {
    let n = poly.n_vars();
    assert!(n >= 2, "supersymmetry needs at least two variables");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut point: Vec<BigRational> = (0..n).map(|_| random_rational(&mut rng)).collect();
        let i = rng.gen_range(0..n - 1);
        let j = rng.gen_range(i + 1..n);
        let t1 = random_rational(&mut rng);
        let mut t2 = random_rational(&mut rng);
        while t2 == t1 {
            t2 = random_rational(&mut rng);
        }
        point[i] = t1.clone();
        point[j] = -t1;
        let a = poly.eval(&point);
        point[i] = t2.clone();
        point[j] = -t2;
        if poly.eval(&point) != a {
            return false;
        }
    }
    true
}

/// [`supersymmetry_test`] for a single homogeneous component.
pub fn supersymmetry_test_homogeneous(poly: &MonomialPolynomial<BigRational>, trials: usize, seed: u64) -> bool {
    supersymmetry_test(&SymmetricPolynomial::homogeneous(poly.clone()), trials, seed)
}
