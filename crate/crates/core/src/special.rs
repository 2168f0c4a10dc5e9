//! The gamma function.

use crate::scalar::Real;

const LANCZOS_G: f64 = 7.0;

#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `Γ(x)` by the Lanczos approximation (`g = 7`, nine terms), with the
/// reflection formula below `1/2`. Relative error is near machine precision
/// for moderate arguments. Small positive integers return the exact factorial.
pub fn gamma<R: Real>(x: R) -> R {
    let half = R::lit(0.5);
    if x >= R::one() && x <= R::lit(20.0) && x == x.round() {
        let n = x.to_f64_lossy() as usize;
        return (1..n).fold(R::one(), |acc, k| acc * R::from_usize(k));
    }
    if x < half {
        return R::PI() / ((R::PI() * x).sin() * gamma(R::one() - x));
    }
    let x = x - R::one();
    let mut acc = R::lit(LANCZOS_COEFFS[0]);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc = acc + R::lit(c) / (x + R::from_usize(i));
    }
    let t = x + R::lit(LANCZOS_G) + half;
    (R::two() * R::PI()).sqrt() * t.powf(x + half) * (-t).exp() * acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_and_half_integer_values() {
        let mut fact = 1.0_f64;
        for n in 1..15 {
            assert_eq!(gamma(n as f64), fact, "n={n}");
            fact *= n as f64;
        }
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert!((gamma(0.5_f64) - sqrt_pi).abs() < 1e-14);
        assert!((gamma(1.5_f64) - sqrt_pi / 2.0).abs() < 1e-14);
        assert!((gamma(-0.5_f64) + 2.0 * sqrt_pi).abs() < 1e-13);
    }

    #[test]
    fn recurrence() {
        for i in 1..40 {
            let x = 0.1 * i as f64;
            assert!((gamma(x + 1.0) - x * gamma(x)).abs() / gamma(x + 1.0) < 1e-13);
        }
    }
}
