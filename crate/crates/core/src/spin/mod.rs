//! Spin characters of the double covers of the symmetric groups and their limits.

pub mod characters;
pub mod limit;
pub mod root2;

pub use characters::{
    branching_check, char_column, char_value, p_to_P_coefficients, restriction_coefficient, xi, CharacterEntry,
    CharacterTable, PCoefficients, MAX_CHARACTER_DEGREE,
};
pub use limit::{
    build_lambda_sequence, convergence_row, convergence_table, multiplicativity_check, psi, ConvergenceRow,
    ThomaPoint,
};
pub use root2::{format_decimal, Root2Value};
