//! The classical Suffridge polynomials `S_{k,N}`, the fold-symmetric family
//! `S^(T)` and the trinomial corner point.

use crate::error::{Error, Result};
use crate::poly::SymmetricPolynomial;
use crate::scalar::{sin_pi_ratio, Real};

/// Parameters of a classical Suffridge polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuffridgeSpec {
    pub degree: usize,
    pub k: usize,
}

impl SuffridgeSpec {
    pub fn new(degree: usize, k: usize) -> Result<Self> {
        if degree == 0 || k == 0 || k > degree {
            return Err(Error::InvalidSuffridgeIndex { degree, k });
        }
        Ok(Self { degree, k })
    }

    pub fn coeffs<R: Real>(&self) -> Vec<R> {
        let n = self.degree;
        let k = self.k as i64;
        let den = n as i64 + 1;
        let base: R = sin_pi_ratio(k, den);
        let mut out = Vec::with_capacity(n);
        out.push(R::one());
        for j in 2..=n {
            let damping = R::one() - R::from_usize(j - 1) / R::from_usize(n);
            let ratio: R = sin_pi_ratio::<R>(k * j as i64, den) / base;
            out.push(damping * ratio);
        }
        out
    }
}

/// Coefficients `σ_1..σ_N` of `S_{k,N}(z) = z + Σ σ_{j,k} z^j`.
pub fn suffridge_coeffs<R: Real>(degree: usize, k: usize) -> Result<Vec<R>> {
    Ok(SuffridgeSpec::new(degree, k)?.coeffs())
}

/// The fold-symmetric analogue `S^(T)` with `n` terms, degree `1 + (n-1)T`.
///
/// The coefficient of `z^(T(j-1)+1)` is
/// `(1 - (j-1)T/(1+(n-1)T)) · Π_{k<j} sin(π(2+T(k-1))/D) / sin(πTk/D)` with
/// `D = 2 + T(n-1)`.
pub fn t_symmetric_coeffs<R: Real>(fold: u32, terms: usize) -> Result<SymmetricPolynomial<R>> {
    if fold == 0 {
        return Err(Error::InvalidFoldOrder(fold));
    }
    if terms == 0 {
        return Err(Error::EmptyPolynomial);
    }
    let t = fold as i64;
    let n = terms as i64;
    let den = 2 + t * (n - 1);
    let degree = R::from_i64(1 + t * (n - 1));
    let mut coeffs = Vec::with_capacity(terms);
    coeffs.push(R::one());
    let mut product = R::one();
    for j in 2..=n {
        let k = j - 1;
        product = product * sin_pi_ratio::<R>(2 + t * (k - 1), den) / sin_pi_ratio::<R>(t * k, den);
        let damping = R::one() - R::from_i64((j - 1) * t) / degree;
        coeffs.push(damping * product);
    }
    SymmetricPolynomial::new(fold, coeffs)
}

/// The upper-right corner `(a⁽⁰⁾, b⁽⁰⁾)` of the univalence domain.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CornerPoint<R> {
    pub fold: u32,
    pub a0: R,
    pub b0: R,
}

impl<R: Real> CornerPoint<R> {
    pub fn as_pair(&self) -> (R, R) {
        (self.a0, self.b0)
    }

    pub fn polynomial(&self) -> SymmetricPolynomial<R> {
        SymmetricPolynomial::trinomial(self.fold, self.a0, self.b0).expect("fold checked at construction")
    }
}

/// `a⁽⁰⁾ = 2(1+T)/(1+2T)·sin(π/(2+2T))`, `b⁽⁰⁾ = 1/(1+2T)`.
pub fn corner_point<R: Real>(fold: u32) -> Result<CornerPoint<R>> {
    if fold == 0 {
        return Err(Error::InvalidFoldOrder(fold));
    }
    let t = R::from_usize(fold as usize);
    let one = R::one();
    let two = R::two();
    let a0 = two * (one + t) / (one + two * t) * sin_pi_ratio::<R>(1, 2 + 2 * fold as i64);
    let b0 = one / (one + two * t);
    Ok(CornerPoint { fold, a0, b0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_coefficient_is_one() {
        for n in 1..12 {
            for k in 1..=n {
                assert_eq!(suffridge_coeffs::<f64>(n, k).unwrap()[0], 1.0);
            }
        }
    }

    #[test]
    fn degree_three_values() {
        let s = suffridge_coeffs::<f64>(3, 1).unwrap();
        assert!((s[1] - 2.0 * 2f64.sqrt() / 3.0).abs() < 1e-15);
        assert!((s[2] - 1.0 / 3.0).abs() < 1e-15);
        assert!((s[1] - 0.9428090).abs() < 1e-7);
    }

    #[test]
    fn leading_coefficient_alternates() {
        for n in 1..=30 {
            for k in 1..=n {
                let s = suffridge_coeffs::<f64>(n, k).unwrap();
                // sin(πkN/(N+1)) = (-1)^(k+1) sin(πk/(N+1))
                let want = if k % 2 == 1 { 1.0 } else { -1.0 } / n as f64;
                // n = 1 has σ_1 = 1 by normalization
                if n > 1 {
                    assert!((s[n - 1] - want).abs() < 1e-12, "N={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn invalid_index_rejected() {
        assert!(matches!(
            suffridge_coeffs::<f64>(3, 0),
            Err(Error::InvalidSuffridgeIndex { degree: 3, k: 0 })
        ));
        assert!(suffridge_coeffs::<f64>(3, 4).is_err());
        assert!(suffridge_coeffs::<f64>(0, 1).is_err());
    }

    #[test]
    fn middle_index_odd_degree_is_odd_polynomial() {
        for n in 2..=8 {
            let s = suffridge_coeffs::<f64>(2 * n - 1, n).unwrap();
            for j in (2..=2 * n - 1).step_by(2) {
                assert!(s[j - 1].abs() < 1e-14, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn fold_one_reproduces_suffridge() {
        for n in 2..=10 {
            let family = t_symmetric_coeffs::<f64>(1, n).unwrap();
            let classical = suffridge_coeffs::<f64>(n, 1).unwrap();
            for (a, b) in family.coeffs().iter().zip(&classical) {
                assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn leading_coefficient_is_maximal() {
        for t in 1..=10u32 {
            for n in 1..=50usize {
                let p = t_symmetric_coeffs::<f64>(t, n).unwrap();
                let want = 1.0 / (1.0 + ((n - 1) as f64) * t as f64);
                assert!((p.coeffs()[n - 1] - want).abs() < 1e-14, "T={t} n={n}");
            }
        }
    }

    #[test]
    fn corner_closed_forms() {
        let c1 = corner_point::<f64>(1).unwrap();
        assert!((c1.a0 - 0.9428090415820634).abs() < 1e-15);
        assert!((c1.b0 - 1.0 / 3.0).abs() < 1e-16);
        let c2 = corner_point::<f64>(2).unwrap();
        assert!((c2.a0 - 0.6).abs() < 1e-15);
        assert!((c2.b0 - 0.2).abs() < 1e-16);
        assert!(corner_point::<f64>(0).is_err());
    }

    #[test]
    fn corner_matches_three_term_family() {
        for t in 1..=10 {
            let c = corner_point::<f64>(t).unwrap();
            let p = t_symmetric_coeffs::<f64>(t, 3).unwrap();
            assert!((p.coeffs()[1] - c.a0).abs() < 1e-14);
            assert!((p.coeffs()[2] - c.b0).abs() < 1e-14);
        }
    }
}
