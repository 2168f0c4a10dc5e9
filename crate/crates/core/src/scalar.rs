//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst};

/// A real floating-point scalar (`f32` or `f64`).
///
/// All algorithms are written against this trait so that the same code runs
/// in single or double precision. The tolerances quoted throughout the crate
/// assume `f64`.
pub trait Real: Float + FloatConst + Debug + Display + Default + Send + Sync + 'static {
    /// Converts an `f64` literal into the scalar type.
    #[inline]
    fn lit(value: f64) -> Self {
        <Self as num_traits::NumCast>::from(value).expect("finite literal")
    }

    #[inline]
    fn from_usize(value: usize) -> Self {
        <Self as num_traits::NumCast>::from(value).expect("representable integer")
    }

    #[inline]
    fn from_i64(value: i64) -> Self {
        <Self as num_traits::NumCast>::from(value).expect("representable integer")
    }

    #[inline]
    fn two() -> Self {
        Self::one() + Self::one()
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `sin(x) - x` without cancellation for small `|x|`.
pub fn sin_defect<R: Real>(x: R) -> R {
    if x.abs() > R::lit(0.5) {
        return x.sin() - x;
    }
    // -x^3/3! + x^5/5! - ...
    let x2 = x * x;
    let mut term = -x * x2 / R::lit(6.0);
    let mut sum = term;
    let mut k = 2usize;
    loop {
        term = -term * x2 / R::from_usize((2 * k) * (2 * k + 1));
        sum = sum + term;
        if term.abs() <= R::epsilon() * sum.abs() || k > 40 {
            return sum;
        }
        k += 1;
    }
}

/// `cos(u) - (1 - u²/2 + u⁴/24)`, the cosine series from its u⁶ term on.
pub fn cos_defect6<R: Real>(u: R) -> R {
    let u2 = u * u;
    if u.abs() > R::two() {
        return u.cos() - (R::one() - u2 / R::two() + u2 * u2 / R::lit(24.0));
    }
    let mut term = -u2 * u2 * u2 / R::lit(720.0);
    let mut sum = term;
    let mut j = 4usize;
    loop {
        term = -term * u2 / R::from_usize((2 * j - 1) * (2 * j));
        sum = sum + term;
        if term.abs() <= R::epsilon() * sum.abs() || j > 60 {
            return sum;
        }
        j += 1;
    }
}

/// `sin(π·num/den)` with the argument reduced exactly in integers first.
pub fn sin_pi_ratio<R: Real>(num: i64, den: i64) -> R {
    assert!(den > 0, "denominator must be positive");
    let period = 2 * den;
    let mut r = num.rem_euclid(period);
    let mut sign = R::one();
    if r >= den {
        r -= den;
        sign = -sign;
    }
    // now r/den in [0, 1); fold onto [0, 1/2]
    if 2 * r > den {
        r = den - r;
    }
    sign * (R::PI() * R::from_i64(r) / R::from_i64(den)).sin()
}
