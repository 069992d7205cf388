//! The acceptance suite: each criterion compares a closed form against an independent
//! computation and reports pass or fail with a short detail line.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dimensions::{f_closed, f_skew, g_closed, g_skew, shifted_ordinary_identity_check};
use crate::error::{Error, Result};
use crate::partition::{
    odd_partitions_of, partitions_below, partitions_of, strict_partitions_below, strict_partitions_of, OrdinarySkewShape,
    Partition, ShiftedSkewShape, StrictPartition,
};
use crate::poly::{
    capital_h, eval_p, eval_pstar_full, expand_in_monomials, power_sum_eval, supersymmetry_test, symmetrize_rtilde,
    Family, Poly,
};
use crate::scalar::Scalar;
use crate::spin::{
    branching_check, char_column, char_value, convergence_row, multiplicativity_check, psi, CharacterTable, Root2Value,
    ThomaPoint,
};
use crate::tableau::{count_ordinary_standard_tableaux, count_shifted_standard_tableaux};

type Q = BigRational;
type Root2 = Root2Value<Q>;

const SEED: u64 = 0x5EED_2024;

/// Bound on the error at `n = 96`; the largest observed value is about `0.0134`.
pub const CONVERGENCE_BOUND_96: (i64, i64) = (1, 20);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    /// Exactly the stated ranges.
    Quick,
    /// The stated ranges pushed one step further.
    Full,
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            other => Err(Error::InvalidArgument(format!("unknown level {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} [{}] {}: {} ({:.2?})",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail,
            self.elapsed
        )
    }
}

pub const CRITERIA: [(usize, &str); 10] = [
    (1, "skew shifted dimension formula vs backtracking"),
    (2, "vanishing and diagonal value of factorial P"),
    (3, "factorial P and P share the top-degree component"),
    (4, "symmetrization operator properties"),
    (5, "shifted and ordinary skew counts agree"),
    (6, "ordinary skew dimension formula vs backtracking"),
    (7, "power sum to P transition identity"),
    (8, "character normalization, rationality and branching"),
    (9, "normalized characters approach the limit"),
    (10, "limit characters are multiplicative and normalized"),
];

/// Runs a single criterion by number (1 to 10).
pub fn run_criterion(id: usize, level: Level) -> CriterionReport {
    let title = CRITERIA.iter().find(|(i, _)| *i == id).map(|(_, t)| *t).unwrap_or("unknown");
    let start = Instant::now();
    let outcome = match id {
        1 => criterion_shifted_counts(level),
        2 => criterion_vanishing(level),
        3 => criterion_top_degree(level),
        4 => criterion_symmetrization(level),
        5 => criterion_shifted_ordinary(level),
        6 => criterion_ordinary_counts(level),
        7 => criterion_transition_identity(level),
        8 => criterion_character_sanity(level),
        9 => criterion_convergence(level),
        10 => criterion_multiplicativity(level),
        _ => Err(Error::InvalidArgument(format!("no criterion {id}"))),
    };
    let (passed, detail) = match outcome {
        Ok(o) => (o.passed, o.detail),
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionReport { id, title, passed, detail, elapsed: start.elapsed() }
}

pub fn run_all(level: Level) -> Vec<CriterionReport> {
    CRITERIA.iter().map(|(id, _)| run_criterion(*id, level)).collect()
}

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn checked(checked: usize, failures: Vec<String>) -> Self {
        match failures.first() {
            None => Outcome { passed: true, detail: format!("{checked} cases") },
            Some(first) => Outcome {
                passed: false,
                detail: format!("{} of {checked} cases failed, first: {first}", failures.len()),
            },
        }
    }
}

fn pick(level: Level, quick: usize, full: usize) -> usize {
    match level {
        Level::Quick => quick,
        Level::Full => full,
    }
}

fn strict_up_to(max: usize) -> Vec<StrictPartition> {
    (0..=max).flat_map(strict_partitions_of).collect()
}

fn criterion_shifted_counts(level: Level) -> Result<Outcome> {
    let mut checked = 0;
    let mut failures = Vec::new();
    for lambda in strict_up_to(pick(level, 10, 12)) {
        for mu in strict_partitions_below(&lambda) {
            let formula = g_skew(&lambda, &mu)?.value;
            let count = count_shifted_standard_tableaux(&ShiftedSkewShape::new(&lambda, &mu)?);
            checked += 1;
            if formula != count {
                failures.push(format!("{lambda}/{mu}: {formula} vs {count}"));
            }
        }
    }
    Ok(Outcome::checked(checked, failures))
}

fn criterion_vanishing(level: Level) -> Result<Outcome> {
    let mut checked = 0;
    let mut failures = Vec::new();
    let small = strict_up_to(pick(level, 8, 9));
    for mu in &small {
        for lambda in &small {
            if mu.is_contained_in(lambda) {
                continue;
            }
            let v = eval_pstar_full(mu, lambda)?;
            checked += 1;
            if !v.is_zero() {
                failures.push(format!("P*_{mu}({lambda}) = {v}"));
            }
        }
    }
    for mu in strict_up_to(pick(level, 10, 12)) {
        let v = eval_pstar_full(&mu, &mu)?;
        let h: Q = capital_h(&mu);
        checked += 1;
        if v != h {
            failures.push(format!("P*_{mu}({mu}) = {v}, H = {h}"));
        }
    }
    Ok(Outcome::checked(checked, failures))
}

fn criterion_top_degree(_level: Level) -> Result<Outcome> {
    let mut checked = 0;
    let mut failures = Vec::new();
    for k in 1..=6 {
        for lambda in strict_partitions_of(k) {
            let plain = expand_in_monomials::<Q>(Family::P, &lambda, k)?;
            let factorial = expand_in_monomials::<Q>(Family::Pstar, &lambda, k)?;
            checked += 1;
            let plain_homogeneous = plain.components().len() == 1 && plain.top_degree() == Some(k);
            if !plain_homogeneous {
                failures.push(format!("P_{lambda} not homogeneous of degree {k}"));
            } else if factorial.top_degree() != Some(k) {
                failures.push(format!("P*_{lambda} has top degree {:?}", factorial.top_degree()));
            } else if factorial.component(k) != plain.component(k) {
                failures.push(format!("top components of P*_{lambda} and P_{lambda} differ"));
            }
        }
    }
    Ok(Outcome::checked(checked, failures))
}

fn random_seed_poly(rng: &mut ChaCha8Rng, l: usize) -> Poly<Q> {
    loop {
        let mut r = Poly::zero(l);
        for _ in 0..rng.gen_range(1..=4) {
            let e: Vec<u32> = (0..l).map(|_| rng.gen_range(0..=3)).collect();
            let mut c: i64 = rng.gen_range(-5..=5);
            if c == 0 {
                c = 1;
            }
            r.add_term(e, Q::from_i64(c));
        }
        if !r.is_zero() {
            return r;
        }
    }
}

fn monomial_product(l: usize) -> Poly<Q> {
    Poly::from_terms(l, [(vec![1; l], Q::one())])
}

fn criterion_symmetrization(level: Level) -> Result<Outcome> {
    let trials = pick(level, 10, 30);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checked = 0;
    let mut failures = Vec::new();
    for t in 0..trials {
        let l = rng.gen_range(1..=3);
        let n = rng.gen_range(l.max(2)..=4);
        let r = random_seed_poly(&mut rng, l);
        let tilde = symmetrize_rtilde(&r, n)?;

        let deg_r = r.degree().unwrap_or(0) as usize;
        if tilde.top_degree().is_some_and(|d| d > deg_r) {
            failures.push(format!("trial {t}: degree {:?} > {deg_r}", tilde.top_degree()));
        }
        if !supersymmetry_test(&tilde, 20, SEED + t as u64) {
            failures.push(format!("trial {t}: not supersymmetric"));
        }

        let l2 = l.max(2);
        let wide = r.extend_vars(l2);
        let mut swap: Vec<usize> = (0..l2).collect();
        swap.swap(0, 1);
        let symmetric = wide.add(&wide.permute_vars(&swap));
        if !symmetrize_rtilde(&symmetric, n.max(l2))?.is_zero() {
            failures.push(format!("trial {t}: seed symmetric in x1, x2 not annihilated"));
        }

        let divisible = r.mul(&monomial_product(l));
        let lower = symmetrize_rtilde(&divisible, n)?;
        let upper = symmetrize_rtilde(&divisible, n + 1)?.set_last_var_zero();
        if upper != lower.scale(&Q::from_usize(n + 1 - l)) {
            failures.push(format!("trial {t}: stability factor fails at l = {l}, n = {n}"));
        }
        checked += 1;
    }
    Ok(Outcome::checked(checked, failures))
}

fn criterion_shifted_ordinary(level: Level) -> Result<Outcome> {
    let mut checked = 0;
    let mut failures = Vec::new();
    for lambda in strict_up_to(pick(level, 10, 12)) {
        for mu in strict_partitions_below(&lambda) {
            let gap = lambda.len() - mu.len();
            if gap > 1 {
                continue;
            }
            checked += 1;
            if !shifted_ordinary_identity_check(&lambda, &mu)? {
                failures.push(format!("{lambda}/{mu}"));
            }
        }
    }
    Ok(Outcome::checked(checked, failures))
}

fn criterion_ordinary_counts(level: Level) -> Result<Outcome> {
    let mut checked = 0;
    let mut failures = Vec::new();
    for k in 0..=pick(level, 10, 11) {
        for eta in partitions_of(k) {
            let closed = f_closed(&eta)?;
            if closed != f_skew(&eta, &Partition::empty())?.value {
                failures.push(format!("f_{eta} closed form vs empty inner"));
            }
            for nu in partitions_below(&eta) {
                let formula = f_skew(&eta, &nu)?.value;
                let count = count_ordinary_standard_tableaux(&OrdinarySkewShape::new(&eta, &nu)?);
                checked += 1;
                if formula != count {
                    failures.push(format!("{eta}/{nu}: {formula} vs {count}"));
                }
            }
        }
    }
    Ok(Outcome::checked(checked, failures))
}

fn random_distinct_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Q> {
    loop {
        let point: Vec<Q> =
            (0..n).map(|_| Q::from_ratio(rng.gen_range(1..=60), rng.gen_range(1..=12))).collect();
        let distinct = (0..n).all(|i| (i + 1..n).all(|j| point[i] != point[j]));
        if distinct {
            return point;
        }
    }
}

fn criterion_transition_identity(level: Level) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checked = 0;
    let mut failures = Vec::new();
    for k in 1..=pick(level, 8, 9) {
        let column_sets: Vec<(Partition, Vec<(StrictPartition, Root2)>)> =
            odd_partitions_of(k).into_iter().map(|rho| char_column(&rho).map(|c| (rho, c))).collect::<Result<_>>()?;
        for (rho, column) in &column_sets {
            for _ in 0..20 {
                let n = rng.gen_range(1..=5);
                let x = random_distinct_point(&mut rng, n);
                let mut lhs = Root2::zero();
                for (mu, value) in column {
                    let p_mu: Q = eval_p(mu, &x)?;
                    lhs = lhs + Root2::pow2_half(mu.len() as i64 - k as i64).scale(&p_mu) * value.clone();
                }
                let rhs = Root2::pow2_half(rho.len() as i64 - k as i64).scale(&power_sum_eval(rho, &x));
                checked += 1;
                if lhs != rhs {
                    failures.push(format!("rho = {rho} at n = {n}"));
                }
            }
        }
    }
    Ok(Outcome::checked(checked, failures))
}

fn criterion_character_sanity(level: Level) -> Result<Outcome> {
    let mut checked = 0;
    let mut failures = Vec::new();
    let max_k = pick(level, 8, 9);
    for mu in strict_up_to(max_k) {
        let w = mu.weight();
        let g = BigRational::from_integer(g_closed(&mu)?.into());
        let want = Root2::pow2_half(w as i64 - mu.len() as i64).scale(&g);
        checked += 1;
        if char_value(&mu, &Partition::ones(w))? != want {
            failures.push(format!("identity value of {mu}"));
        }
    }
    for k in 1..=max_k {
        let table = CharacterTable::build(k)?;
        for e in table.entries() {
            let odd_excess = (e.mu.weight() - e.mu.len()) % 2 == 1;
            let ok = if odd_excess { e.value.a.is_zero() } else { e.value.b.is_zero() };
            checked += 1;
            if !ok {
                failures.push(format!("rationality of chi^{}(t_{}) = {}", e.mu, e.rho, e.value));
            }
        }
    }
    for lambda in strict_up_to(pick(level, 7, 8)) {
        for k in 1..=lambda.weight() {
            for rho in odd_partitions_of(k) {
                checked += 1;
                if !branching_check(&lambda, k, &rho)? {
                    failures.push(format!("branching {lambda} to k = {k} at {rho}"));
                }
            }
        }
    }
    Ok(Outcome::checked(checked, failures))
}

/// The convergence errors of one class at `n = 12, 48, 96`.
pub fn convergence_errors(rho: &Partition) -> Result<[Q; 3]> {
    let gamma = ThomaPoint::from_ratios(&[(1, 2), (1, 3), (1, 6)])?;
    let e = |n| convergence_row(&gamma, rho, n).map(|r| r.abs_error);
    Ok([e(12)?, e(48)?, e(96)?])
}

fn criterion_convergence(level: Level) -> Result<Outcome> {
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut worst = Q::zero();
    let bound = Q::from_ratio(CONVERGENCE_BOUND_96.0, CONVERGENCE_BOUND_96.1);
    for k in 1..=pick(level, 5, 7) {
        for rho in odd_partitions_of(k) {
            let [e12, e48, e96] = convergence_errors(&rho)?;
            checked += 1;
            // an error that is exactly zero at both sizes cannot decrease further
            let decreasing = e48 < e12 || (e12.is_zero() && e48.is_zero());
            if !decreasing {
                failures.push(format!(
                    "rho = {rho}: error at 48 ({}) not below error at 12 ({})",
                    Root2::rational(e48.clone()).to_decimal(6),
                    Root2::rational(e12.clone()).to_decimal(6)
                ));
            }
            if e96 >= bound {
                failures.push(format!("rho = {rho}: error at 96 is {}", Root2::rational(e96.clone()).to_decimal(6)));
            }
            if e96 > worst {
                worst = e96;
            }
        }
    }
    let mut out = Outcome::checked(checked, failures);
    out.detail = format!("{}; largest error at n = 96: {}", out.detail, Root2::rational(worst).to_decimal(6));
    Ok(out)
}

/// The five fixed points used for the multiplicativity criterion.
pub fn reference_thoma_points() -> Vec<ThomaPoint> {
    [
        vec![(1, 1)],
        vec![(1, 2), (1, 2)],
        vec![(1, 2), (1, 3), (1, 6)],
        vec![(1, 3), (1, 4), (1, 5)],
        vec![],
    ]
    .iter()
    .map(|g| ThomaPoint::from_ratios(g).expect("valid reference point"))
    .collect()
}

fn criterion_multiplicativity(level: Level) -> Result<Outcome> {
    let max_total = pick(level, 12, 14);
    let classes: Vec<Vec<Partition>> = (0..=max_total).map(partitions_of).collect();
    let mut checked = 0;
    let mut failures = Vec::new();
    for gamma in reference_thoma_points() {
        for a in 0..=max_total {
            for b in 0..=max_total - a {
                for rho in &classes[a] {
                    for sigma in &classes[b] {
                        checked += 1;
                        if !multiplicativity_check(&gamma, rho, sigma) {
                            failures.push(format!("{gamma}: {rho} with {sigma}"));
                        }
                    }
                }
            }
        }
        for k in 0..=max_total {
            checked += 1;
            if psi(&gamma, &Partition::ones(k)) != Root2::one() {
                failures.push(format!("{gamma}: value at identity of size {k}"));
            }
        }
    }
    Ok(Outcome::checked(checked, failures))
}
