//! Fold-symmetric polynomials, their evaluation and differentiation, and the
//! closed-form zeros of a trinomial derivative.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A point of the complex plane.
pub type ComplexPoint<R> = Complex<R>;

/// `z + a_2 z^(1+T) + ... + a_n z^(1+(n-1)T)` with real coefficients.
///
/// Coefficients are indexed by the symmetric index `j` (`coeffs[0]` is
/// `a_1 = 1`), not by exponent.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricPolynomial<R> {
    fold: u32,
    coeffs: Vec<R>,
}

impl<R: Real> SymmetricPolynomial<R> {
    /// Builds a polynomial from `a_1..a_n`. `a_1` must be exactly one.
    pub fn new(fold: u32, coeffs: Vec<R>) -> Result<Self> {
        if fold == 0 {
            return Err(Error::InvalidFoldOrder(fold));
        }
        match coeffs.first() {
            None => Err(Error::EmptyPolynomial),
            Some(&a1) if a1 != R::one() => Err(Error::NotNormalized(a1.to_f64_lossy())),
            Some(_) => Ok(Self { fold, coeffs }),
        }
    }

    /// `z + a z^(1+T) + b z^(1+2T)`.
    pub fn trinomial(fold: u32, a: R, b: R) -> Result<Self> {
        Self::new(fold, vec![R::one(), a, b])
    }

    /// The identity map `z`.
    pub fn identity(fold: u32) -> Result<Self> {
        Self::new(fold, vec![R::one()])
    }

    pub fn fold(&self) -> u32 {
        self.fold
    }

    /// Number of terms `n`.
    pub fn terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient `a_j` for the 1-based symmetric index `j`.
    pub fn coeff(&self, j: usize) -> Option<R> {
        j.checked_sub(1).and_then(|i| self.coeffs.get(i)).copied()
    }

    /// Exponent `1 + (j-1)T` carried by `a_j`.
    pub fn exponent(&self, j: usize) -> usize {
        1 + (j - 1) * self.fold as usize
    }

    /// Degree `N = 1 + (n-1)T`.
    pub fn degree(&self) -> usize {
        self.exponent(self.terms())
    }

    /// Evaluates `F(z)` by Horner's scheme in `w = z^T`.
    pub fn eval(&self, z: ComplexPoint<R>) -> ComplexPoint<R> {
        let w = z.powu(self.fold);
        let inner = self
            .coeffs
            .iter()
            .rev()
            .fold(Complex::new(R::zero(), R::zero()), |acc, &c| acc * w + c);
        inner * z
    }

    /// Evaluates at a real argument.
    pub fn eval_real(&self, x: R) -> R {
        let w = x.powi(self.fold as i32);
        let inner = self.coeffs.iter().rev().fold(R::zero(), |acc, &c| acc * w + c);
        inner * x
    }

    /// Dense power-basis coefficients `c_0..c_N`.
    pub fn to_dense(&self) -> RealPolynomial<R> {
        let mut dense = vec![R::zero(); self.degree() + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            dense[self.exponent(i + 1)] = c;
        }
        RealPolynomial::new(dense)
    }

    /// `F'(z)` as a dense real polynomial.
    pub fn derivative(&self) -> RealPolynomial<R> {
        self.to_dense().derivative()
    }
}

/// A general real polynomial `c_0 + c_1 z + ... + c_d z^d`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPolynomial<R> {
    coeffs: Vec<R>,
}

impl<R: Real> RealPolynomial<R> {
    /// Trailing zero coefficients are dropped; the zero polynomial keeps a
    /// single `0`.
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&R::zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(R::zero());
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::new(vec![R::zero()]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(power, &c)| c * R::from_usize(power))
            .collect();
        Self::new(coeffs)
    }

    pub fn eval(&self, z: ComplexPoint<R>) -> ComplexPoint<R> {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::new(R::zero(), R::zero()), |acc, &c| acc * z + c)
    }
}

/// A zero of the derivative of a fold-symmetric trinomial.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DerivativeRoot<R> {
    pub z: ComplexPoint<R>,
    pub modulus: R,
    /// Argument in `[0, 2π)`.
    pub argument: R,
}

/// Zeros of `1 + a(1+T)z^T + b(1+2T)z^(2T)`.
///
/// The quadratic in `w = z^T` is solved first, then every `T`-th root of
/// each `w` is returned. Yields `2T` roots when `b ≠ 0`, `T` roots when only
/// `a ≠ 0` and none when the derivative is constant.
pub fn trinomial_derivative_roots<R: Real>(fold: u32, a: R, b: R) -> Vec<DerivativeRoot<R>> {
    let t = R::from_usize(fold as usize);
    let c1 = a * (R::one() + t);
    let c2 = b * (R::one() + R::two() * t);
    let zero = R::zero();

    let ws: Vec<Complex<R>> = if c2 != zero {
        let disc = c1 * c1 - R::lit(4.0) * c2;
        if disc >= zero {
            // larger-magnitude root first, the other from the product 1/c2
            let sign = if c1 >= zero { R::one() } else { -R::one() };
            let q = -(c1 + sign * disc.sqrt()) / R::two();
            if q == zero {
                // c1 = 0 and c2 < 0
                let r = (-R::one() / c2).sqrt();
                vec![Complex::new(r, zero), Complex::new(-r, zero)]
            } else {
                vec![Complex::new(q / c2, zero), Complex::new(R::one() / q, zero)]
            }
        } else {
            let re = -c1 / (R::two() * c2);
            let im = (-disc).sqrt() / (R::two() * c2);
            vec![Complex::new(re, im), Complex::new(re, -im)]
        }
    } else if c1 != zero {
        vec![Complex::new(-R::one() / c1, zero)]
    } else {
        Vec::new()
    };

    let two_pi = R::two() * R::PI();
    let mut roots = Vec::with_capacity(ws.len() * fold as usize);
    for w in ws {
        let modulus = w.norm().powf(R::one() / t);
        let base = w.arg();
        for branch in 0..fold {
            let mut argument = (base + two_pi * R::from_usize(branch as usize)) / t;
            argument = argument % two_pi;
            if argument < zero {
                argument = argument + two_pi;
            }
            roots.push(DerivativeRoot {
                z: Complex::from_polar(modulus, argument),
                modulus,
                argument,
            });
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn identity_evaluates_to_argument() {
        let p = SymmetricPolynomial::<f64>::identity(3).unwrap();
        assert_eq!(p.eval(c(0.3, 0.4)), c(0.3, 0.4));
        assert_eq!(p.degree(), 1);
    }

    #[test]
    fn zero_maps_to_zero() {
        let p = SymmetricPolynomial::trinomial(4, 0.7, -0.2).unwrap();
        assert_eq!(p.eval(c(0.0, 0.0)), c(0.0, 0.0));
    }

    #[test]
    fn suffridge_trinomial_at_one() {
        let a = 2.0 * 2f64.sqrt() / 3.0;
        let p = SymmetricPolynomial::trinomial(1, a, 1.0 / 3.0).unwrap();
        let direct = 1.0 + a + 1.0 / 3.0;
        let expected = 0.25 * (4.0 / 3.0) / (std::f64::consts::PI / 8.0).sin().powi(2);
        let value = p.eval(c(1.0, 0.0));
        assert!((value.re - expected).abs() < 1e-13);
        assert!((value.re - direct).abs() < 1e-15);
        assert!((value.re - 2.2761423749).abs() < 1e-9);
    }

    #[test]
    fn rejects_unnormalized_or_empty() {
        assert!(matches!(
            SymmetricPolynomial::new(1, vec![2.0_f64]),
            Err(Error::NotNormalized(_))
        ));
        assert!(matches!(
            SymmetricPolynomial::<f64>::new(1, vec![]),
            Err(Error::EmptyPolynomial)
        ));
        assert!(matches!(
            SymmetricPolynomial::new(0, vec![1.0_f64]),
            Err(Error::InvalidFoldOrder(0))
        ));
    }

    #[test]
    fn exponents_are_one_mod_fold() {
        let p = SymmetricPolynomial::new(5, vec![1.0_f64, 0.1, 0.2, 0.3]).unwrap();
        assert_eq!(p.degree(), 16);
        for j in 1..=p.terms() {
            assert_eq!(p.exponent(j) % 5, 1);
        }
    }

    #[test]
    fn derivative_of_identity_is_constant() {
        let d = SymmetricPolynomial::<f64>::identity(2).unwrap().derivative();
        assert_eq!(d.coeffs(), &[1.0]);
    }

    #[test]
    fn derivative_power_rule() {
        let (a, b) = (0.4_f64, 0.1_f64);
        let d = SymmetricPolynomial::trinomial(3, a, b).unwrap().derivative();
        let mut expected = vec![0.0; 7];
        expected[0] = 1.0;
        expected[3] = a * 4.0;
        expected[6] = b * 7.0;
        assert_eq!(d.coeffs(), expected.as_slice());
    }

    #[test]
    fn derivative_of_suffridge_trinomial() {
        let a = 2.0 * 2f64.sqrt() / 3.0;
        let d = SymmetricPolynomial::trinomial(1, a, 1.0 / 3.0).unwrap().derivative();
        let expected = [1.0, 4.0 * 2f64.sqrt() / 3.0, 1.0];
        for (got, want) in d.coeffs().iter().zip(expected) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn no_roots_for_constant_derivative() {
        assert!(trinomial_derivative_roots(3, 0.0_f64, 0.0).is_empty());
    }

    #[test]
    fn corner_roots_on_unit_circle() {
        let roots = trinomial_derivative_roots(1, 2.0 * 2f64.sqrt() / 3.0, 1.0 / 3.0);
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert!((r.modulus - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn pure_quadratic_case() {
        // w^2 = -1
        let roots = trinomial_derivative_roots(2, 0.0_f64, 0.2);
        assert_eq!(roots.len(), 4);
        for r in &roots {
            assert!((r.modulus - 1.0).abs() < 1e-14);
            assert!(r.argument >= 0.0 && r.argument < 2.0 * std::f64::consts::PI);
        }
    }

    #[test]
    fn linear_case_gives_fold_roots() {
        let roots = trinomial_derivative_roots(4, 0.5_f64, 0.0);
        assert_eq!(roots.len(), 4);
        let expected = (1.0_f64 / 2.5).powf(0.25);
        for r in roots {
            assert!((r.modulus - expected).abs() < 1e-14);
        }
    }

    #[test]
    fn real_roots_branch_is_accurate() {
        // c1 near the cancellation-prone regime
        let roots = trinomial_derivative_roots(1, 1e4_f64, 1e-3);
        let d = SymmetricPolynomial::trinomial(1, 1e4, 1e-3).unwrap().derivative();
        for r in roots {
            let v = d.eval(r.z).norm();
            let scale = 1.0 + 2e4 * r.modulus + 3e-3 * r.modulus * r.modulus;
            assert!(v / scale < 1e-14, "residual {v}");
        }
    }

    #[test]
    fn works_in_single_precision() {
        let p = SymmetricPolynomial::trinomial(2, 0.6_f32, 0.2).unwrap();
        let v = p.eval(Complex::new(1.0_f32, 0.0));
        assert!((v.re - 1.8).abs() < 1e-6);
    }
}
