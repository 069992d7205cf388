//! Supersymmetric polynomials: exact evaluation and monomial-basis expansion of the
//! falling factorials, odd power sums, `P_μ`, `P*_μ`, `s*_ν` and `H(μ)`.

pub mod eval;
pub mod expand;
pub mod monomial;
pub mod multivar;
pub mod supersym;

pub use eval::{
    capital_h, eval_p, eval_pstar, eval_pstar_at, eval_pstar_full, eval_sstar,
    eval_sstar_at_partition, falling_factorial, power_sum_eval,
};
pub use expand::{expand_in_monomials, power_sum_expansion, symmetrize_rtilde, Family, MAX_SYMBOLIC_VARS};
pub use monomial::{MonomialPolynomial, SymmetricPolynomial};
pub use multivar::Poly;
pub use supersym::{supersymmetry_test, supersymmetry_test_homogeneous};
