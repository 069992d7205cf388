//! Property tests for the structural invariants.

use num_traits::Zero;
use proptest::prelude::*;

use shifted::dimensions::g_skew;
use shifted::poly::{
    eval_p, eval_pstar, eval_pstar_at, eval_pstar_full, eval_sstar, expand_in_monomials, power_sum_eval, Family,
};
use shifted::serial::{monomial_from_json, monomial_to_json};
use shifted::spin::{char_column, multiplicativity_check, psi, xi, ThomaPoint};
use shifted::tableau::count_shifted_recursive;
use shifted::partition::{odd_partitions_of, strict_partitions_of};
use shifted::{Partition, Rational, Root2, Scalar, StrictPartition};

fn strict_partition(max_weight: usize) -> impl Strategy<Value = StrictPartition> {
    let all: Vec<StrictPartition> = (0..=max_weight).flat_map(strict_partitions_of).collect();
    proptest::sample::select(all)
}

fn odd_partition(min_weight: usize, max_weight: usize) -> impl Strategy<Value = Partition> {
    let all: Vec<Partition> = (min_weight..=max_weight).flat_map(odd_partitions_of).collect();
    proptest::sample::select(all)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..9).prop_map(|(n, d)| Rational::from_ratio(n, d))
}

fn distinct_point(max_len: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(rational(), 1..=max_len).prop_filter("distinct coordinates", |v| {
        (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i] != v[j]))
    })
}

fn thoma_point() -> impl Strategy<Value = ThomaPoint> {
    proptest::collection::vec(0i64..12, 0..4).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        let den = 12 * (v.len() as i64).max(1);
        ThomaPoint::new(v.iter().map(|&x| Rational::from_ratio(x, den)).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn formula_matches_recursion(lambda in strict_partition(12), pick in 0usize..1000) {
        let below = shifted::partition::strict_partitions_below(&lambda);
        let mu = &below[pick % below.len()];
        prop_assert_eq!(g_skew(&lambda, mu).unwrap().value, count_shifted_recursive(&lambda, mu));
    }

    #[test]
    fn vanishing_outside_containment(mu in strict_partition(9), lambda in strict_partition(9)) {
        let v = eval_pstar_full(&mu, &lambda).unwrap();
        if mu.is_contained_in(&lambda) {
            prop_assert_eq!(v, eval_pstar::<Rational>(&mu, &lambda));
        } else {
            prop_assert!(v.is_zero());
        }
    }

    #[test]
    fn evaluation_matches_expansion(mu in strict_partition(6), x in distinct_point(4)) {
        let n = x.len();
        let plain = expand_in_monomials::<Rational>(Family::P, &mu, n).unwrap();
        prop_assert_eq!(plain.eval(&x), eval_p(&mu, &x).unwrap());
        let star = expand_in_monomials::<Rational>(Family::Pstar, &mu, n).unwrap();
        prop_assert_eq!(star.eval(&x), eval_pstar_at(&mu, &x).unwrap());
    }

    #[test]
    fn schur_p_is_stable(mu in strict_partition(6), n in 1usize..=4) {
        let wide = expand_in_monomials::<Rational>(Family::P, &mu, n + 1).unwrap();
        let narrow = expand_in_monomials::<Rational>(Family::P, &mu, n).unwrap();
        prop_assert_eq!(wide.set_last_var_zero(), narrow);
    }

    #[test]
    fn shifted_schur_is_stable(nu in proptest::sample::select((0..=6).flat_map(shifted::partition::partitions_of).collect::<Vec<_>>()),
                                x in proptest::collection::vec(0i64..9, 1..4)) {
        let mut coords: Vec<Rational> = x.iter().map(|&v| Rational::from_i64(v)).collect();
        coords.sort_by(|a, b| b.cmp(a));
        let base = eval_sstar(&nu, &coords);
        coords.push(Rational::zero());
        let padded = eval_sstar(&nu, &coords);
        if let (Ok(a), Ok(b)) = (base, padded) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn transition_identity(rho in odd_partition(1, 8), x in distinct_point(5)) {
        let k = rho.weight() as i64;
        let mut lhs = Root2::zero();
        for (mu, value) in char_column(&rho).unwrap() {
            let p_mu: Rational = eval_p(&mu, &x).unwrap();
            lhs = lhs + Root2::pow2_half(mu.len() as i64 - k).scale(&p_mu) * value;
        }
        let rhs = Root2::pow2_half(rho.len() as i64 - k).scale(&power_sum_eval(&rho, &x));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normalized_character_is_one_at_identity(lambda in strict_partition(9), k in 0usize..10) {
        let k = k.min(lambda.weight());
        prop_assert_eq!(xi(&lambda, &Partition::ones(k)).unwrap(), Root2::one());
    }

    #[test]
    fn limit_is_multiplicative(g in thoma_point(),
                               rho in proptest::sample::select((0..=7).flat_map(shifted::partition::partitions_of).collect::<Vec<_>>()),
                               sigma in proptest::sample::select((0..=7).flat_map(shifted::partition::partitions_of).collect::<Vec<_>>())) {
        prop_assert!(multiplicativity_check(&g, &rho, &sigma));
        prop_assert_eq!(psi(&g, &Partition::ones(rho.weight())), Root2::one());
    }

    #[test]
    fn json_round_trip(mu in strict_partition(5), n in 1usize..=4, family in proptest::sample::select(vec![Family::P, Family::Pstar])) {
        let poly = expand_in_monomials::<Rational>(family, &mu, n).unwrap();
        for component in poly.components().values() {
            let text = monomial_to_json(component);
            prop_assert_eq!(&monomial_from_json(&text).unwrap(), component);
            let value: serde_json::Value = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(serde_json::to_string_pretty(&value).unwrap(), text);
        }
    }
}
