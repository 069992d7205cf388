use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

/// `a + b·√2` with `a`, `b` in a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Root2Value<T> {
    pub a: T,
    pub b: T,
}

impl<T: Scalar> Root2Value<T> {
    pub fn new(a: T, b: T) -> Self {
        Root2Value { a, b }
    }

    pub fn rational(a: T) -> Self {
        Root2Value { a, b: T::zero() }
    }

    pub fn zero() -> Self {
        Self::rational(T::zero())
    }

    pub fn one() -> Self {
        Self::rational(T::one())
    }

    pub fn sqrt2() -> Self {
        Root2Value { a: T::zero(), b: T::one() }
    }

    /// `2^{m/2}` for any integer `m`.
    pub fn pow2_half(m: i64) -> Self {
        let two = T::from_i64(2);
        let half = m.div_euclid(2);
        let base = if half >= 0 {
            two.powi(half as u32)
        } else {
            T::one() / two.powi((-half) as u32)
        };
        if m.rem_euclid(2) == 0 {
            Self::rational(base)
        } else {
            Root2Value { a: T::zero(), b: base }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn scale(&self, c: &T) -> Self {
        Root2Value { a: self.a.clone() * c.clone(), b: self.b.clone() * c.clone() }
    }

    /// Conjugate `a - b√2`.
    pub fn conjugate(&self) -> Self {
        Root2Value { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm `a² - 2b²`.
    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone() - T::from_i64(2) * self.b.clone() * self.b.clone()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(self.conjugate().scale(&(T::one() / n)))
    }
}

impl<T: Scalar> Add for Root2Value<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Root2Value { a: self.a + o.a, b: self.b + o.b }
    }
}

impl<T: Scalar> Sub for Root2Value<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Root2Value { a: self.a - o.a, b: self.b - o.b }
    }
}

impl<T: Scalar> Neg for Root2Value<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Root2Value { a: -self.a, b: -self.b }
    }
}

impl<T: Scalar> Mul for Root2Value<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let two = T::from_i64(2);
        Root2Value {
            a: self.a.clone() * o.a.clone() + two * self.b.clone() * o.b.clone(),
            b: self.a * o.b + self.b * o.a,
        }
    }
}

impl Root2Value<BigRational> {
    /// Exact sign of `a + b√2`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        match (sa, sb) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (x, y) if x == y => x,
            // opposite signs: compare a² with 2b²
            (sa, _) => {
                let a2 = &self.a * &self.a;
                let b2 = &self.b * &self.b * BigRational::from_i64(2);
                match a2.cmp(&b2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Rational approximation within `10^{-digits}·(1 + |b|)`.
    pub fn approximate(&self, digits: u32) -> BigRational {
        let scale = BigInt::from(10).pow(digits);
        let root = (BigInt::from(2) * &scale * &scale).sqrt();
        let sqrt2 = BigRational::new(root, scale);
        &self.a + &self.b * sqrt2
    }

    /// Decimal text with `frac_digits` digits after the point (rounded half away from zero).
    pub fn to_decimal(&self, frac_digits: u32) -> String {
        format_decimal(&self.approximate(frac_digits + 20), frac_digits)
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.approximate(30);
        let num: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
        let den: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
        num / den
    }
}

impl PartialOrd for Root2Value<BigRational> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Root2Value<BigRational> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum()
    }
}

/// Fixed-point decimal text of a rational.
pub fn format_decimal(r: &BigRational, frac_digits: u32) -> String {
    let scale = BigInt::from(10).pow(frac_digits);
    let scaled = r.abs() * BigRational::from_integer(scale.clone());
    let rounded = (scaled + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
    let int_part = &rounded / &scale;
    let frac_part = &rounded % &scale;
    let sign = if r.is_negative() && !rounded.is_zero() { "-" } else { "" };
    if frac_digits == 0 {
        return format!("{sign}{int_part}");
    }
    format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = frac_digits as usize)
}

impl fmt::Display for Root2Value<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_q = |q: &BigRational| {
            if q.is_integer() {
                q.numer().to_string()
            } else {
                format!("{}/{}", q.numer(), q.denom())
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", fmt_q(&self.a)),
            (true, false) if self.b.is_one() => write!(f, "√2"),
            (true, false) if self.b == -BigRational::one() => write!(f, "-√2"),
            (true, false) => write!(f, "{}·√2", fmt_q(&self.b)),
            (false, false) if self.b.is_negative() => write!(f, "{} - {}·√2", fmt_q(&self.a), fmt_q(&-self.b.clone())),
            (false, false) => write!(f, "{} + {}·√2", fmt_q(&self.a), fmt_q(&self.b)),
        }
    }
}
