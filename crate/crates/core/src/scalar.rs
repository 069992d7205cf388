use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed, Zero};

/// A field element the polynomial machinery can compute with.
///
/// Exact types (`BigRational`) give exact answers; `f64`/`f32` are accepted by the
/// evaluation routines for quick numeric work, but the symbolic routines assume exact
/// cancellation and should only be driven with exact scalars.
pub trait Scalar: Num + Clone + Debug + PartialEq + Neg<Output = Self> {
    fn from_i64(v: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// `true` when the scalar type never rounds.
    fn is_exact() -> bool;

    fn abs_value(&self) -> Self;

    /// Integer power; `pow(x, 0) == 1`.
    fn powi(&self, exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    fn from_usize(v: usize) -> Self {
        Self::from_i64(v as i64)
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn is_exact() -> bool {
        false
    }
    fn abs_value(&self) -> Self {
        self.abs()
    }
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }
    fn is_exact() -> bool {
        false
    }
    fn abs_value(&self) -> Self {
        self.abs()
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_exact() -> bool {
        true
    }
    fn abs_value(&self) -> Self {
        self.abs()
    }
}

/// Small-denominator rationals. Overflows panic, so only suitable for tiny inputs.
impl Scalar for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }
    fn is_exact() -> bool {
        true
    }
    fn abs_value(&self) -> Self {
        self.abs()
    }
}

/// Parse `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Canonical `"num/den"` text form (denominator always printed).
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
