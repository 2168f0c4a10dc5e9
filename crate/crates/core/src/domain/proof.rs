//! The numerator/denominator maps behind the boundary arc `Γ3`.
//!
//! In the parameter `t`, `A(t) = U(t)/W(t)` and `B(t) = V(t)/W(t)`. After
//! `τ = (1+T)t`, `α = 1/(1+T)` the same arc is `Û/Ŵ, V̂/Ŵ` with
//! `Û = -U`, `V̂ = -V`, `Ŵ = -W`.

use crate::inequalities::lemma_g;
use crate::scalar::{sin_defect, Real};

/// `U(t) = 2T sin((2+2T)t) - (2+2T) sin(2Tt)`.
pub fn u_of_t<R: Real>(fold: u32, t: R) -> R {
    let tt = R::from_usize(fold as usize);
    let p = R::two() + R::two() * tt;
    let q = R::two() * tt;
    // the linear parts of the two sines cancel exactly
    q * sin_defect(p * t) - p * sin_defect(q * t)
}

/// `V(t) = T sin((2+T)t) - (2+T) sin(Tt)`.
pub fn v_of_t<R: Real>(fold: u32, t: R) -> R {
    let tt = R::from_usize(fold as usize);
    let p = R::two() + tt;
    tt * sin_defect(p * t) - p * sin_defect(tt * t)
}

/// `W(t) = T sin((2+3T)t) - (2+3T) sin(Tt)`.
pub fn w_of_t<R: Real>(fold: u32, t: R) -> R {
    let tt = R::from_usize(fold as usize);
    let p = R::two() + R::lit(3.0) * tt;
    tt * sin_defect(p * t) - p * sin_defect(tt * t)
}

/// `Û, V̂, Ŵ` and their derivatives for a fixed `α ∈ (0, 1/2]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProofCurveFunctions<R> {
    pub alpha: R,
}

impl<R: Real> ProofCurveFunctions<R> {
    pub fn new(alpha: R) -> Self {
        Self { alpha }
    }

    /// `α = 1/(1+T)`.
    pub fn for_fold(fold: u32) -> Self {
        Self::new(R::one() / (R::one() + R::from_usize(fold as usize)))
    }

    /// `τ = (1+T)t = t/α`.
    pub fn tau_of_t(&self, t: R) -> R {
        t / self.alpha
    }

    /// `Û(τ) = (2 sin(2(1-α)τ) - 2(1-α) sin 2τ)/α`.
    pub fn u_hat(&self, tau: R) -> R {
        let a = self.alpha;
        let one = R::one();
        let two = R::two();
        two * (sin_defect(two * (one - a) * tau) - (one - a) * sin_defect(two * tau)) / a
    }

    /// `V̂(τ) = ((1+α) sin((1-α)τ) - (1-α) sin((1+α)τ))/α`.
    pub fn v_hat(&self, tau: R) -> R {
        let a = self.alpha;
        let one = R::one();
        ((one + a) * sin_defect((one - a) * tau) - (one - a) * sin_defect((one + a) * tau)) / a
    }

    /// `Ŵ(τ) = ((3-α) sin((1-α)τ) - (1-α) sin((3-α)τ))/α`.
    pub fn w_hat(&self, tau: R) -> R {
        let a = self.alpha;
        let one = R::one();
        let three = R::lit(3.0);
        ((three - a) * sin_defect((one - a) * tau) - (one - a) * sin_defect((three - a) * tau)) / a
    }

    /// `Û'(τ) = (8/α)(1-α) sin(ατ) sin((2-α)τ)`.
    pub fn u_hat_prime(&self, tau: R) -> R {
        let a = self.alpha;
        let one = R::one();
        R::lit(8.0) / a * (one - a) * (a * tau).sin() * ((R::two() - a) * tau).sin()
    }

    /// `V̂'(τ) = (2/α)(1-α)(1+α) sin(ατ) sin τ`.
    pub fn v_hat_prime(&self, tau: R) -> R {
        let a = self.alpha;
        let one = R::one();
        R::two() / a * (one - a) * (one + a) * (a * tau).sin() * tau.sin()
    }

    /// `Ŵ'(τ) = (2/α)(3-α)(1-α) sin((2-α)τ) sin τ`.
    pub fn w_hat_prime(&self, tau: R) -> R {
        let a = self.alpha;
        let one = R::one();
        R::two() / a * (R::lit(3.0) - a) * (one - a) * ((R::two() - a) * tau).sin() * tau.sin()
    }

    /// `x(τ) = Û/Ŵ` on the arc.
    pub fn x(&self, tau: R) -> R {
        self.u_hat(tau) / self.w_hat(tau)
    }

    /// `y(τ) = V̂/Ŵ` on the arc.
    pub fn y(&self, tau: R) -> R {
        self.v_hat(tau) / self.w_hat(tau)
    }

    /// `(1+y)/x = (V̂+Ŵ)/Û` on the arc.
    pub fn slope_ratio(&self, tau: R) -> R {
        (self.v_hat(tau) + self.w_hat(tau)) / self.u_hat(tau)
    }

    /// `(Û/Ŵ)'` by the quotient rule on the closed-form derivatives.
    pub fn x_prime(&self, tau: R) -> R {
        let w = self.w_hat(tau);
        (self.u_hat_prime(tau) * w - self.u_hat(tau) * self.w_hat_prime(tau)) / (w * w)
    }

    /// `(V̂/Ŵ)'` by the quotient rule.
    pub fn y_prime(&self, tau: R) -> R {
        let w = self.w_hat(tau);
        (self.v_hat_prime(tau) * w - self.v_hat(tau) * self.w_hat_prime(tau)) / (w * w)
    }

    /// `((V̂+Ŵ)/Û)'` by the quotient rule.
    pub fn slope_ratio_prime(&self, tau: R) -> R {
        let u = self.u_hat(tau);
        let num = self.v_hat(tau) + self.w_hat(tau);
        let num_prime = self.v_hat_prime(tau) + self.w_hat_prime(tau);
        (num_prime * u - num * self.u_hat_prime(tau)) / (u * u)
    }

    /// `(Û/Ŵ)' = 2(1-α) sin((2-α)τ) G(τ,α) / (α² Ŵ²)`.
    pub fn x_prime_via_g(&self, tau: R) -> R {
        let a = self.alpha;
        let w = self.w_hat(tau);
        R::two() * (R::one() - a) * ((R::two() - a) * tau).sin() * lemma_g(tau, a) / (a * a * w * w)
    }

    /// `(V̂/Ŵ)' = 2(1-α) sin τ G(τ,α) / (α² Ŵ²)`.
    pub fn y_prime_via_g(&self, tau: R) -> R {
        let a = self.alpha;
        let w = self.w_hat(tau);
        R::two() * (R::one() - a) * tau.sin() * lemma_g(tau, a) / (a * a * w * w)
    }

    /// `(V̂/Û)' = 2(1-α) sin(ατ) G(τ,α) / (α² Û²)`.
    pub fn v_over_u_prime_via_g(&self, tau: R) -> R {
        let a = self.alpha;
        let u = self.u_hat(tau);
        R::two() * (R::one() - a) * (a * tau).sin() * lemma_g(tau, a) / (a * a * u * u)
    }

    /// `(Ŵ/Û)' = -2(1-α) sin((2-α)τ) G(τ,α) / (α² Û²)`.
    pub fn w_over_u_prime_via_g(&self, tau: R) -> R {
        let a = self.alpha;
        let u = self.u_hat(tau);
        -R::two() * (R::one() - a) * ((R::two() - a) * tau).sin() * lemma_g(tau, a) / (a * a * u * u)
    }

    /// `((V̂+Ŵ)/Û)' = -4(1-α) cos τ sin((1-α)τ) G(τ,α) / (α² Û²)`.
    pub fn slope_ratio_prime_via_g(&self, tau: R) -> R {
        let a = self.alpha;
        let one = R::one();
        let u = self.u_hat(tau);
        -R::lit(4.0) * (one - a) * tau.cos() * ((one - a) * tau).sin() * lemma_g(tau, a) / (a * a * u * u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn central<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
        (f(x + h) - f(x - h)) / (2.0 * h)
    }

    fn taus() -> impl Iterator<Item = f64> {
        (0..=60).map(|i| 0.01 + (FRAC_PI_2 - 0.02) * i as f64 / 60.0)
    }

    #[test]
    fn closed_form_derivatives_match_finite_differences() {
        for fold in 1..=10u32 {
            let f = ProofCurveFunctions::<f64>::for_fold(fold);
            for tau in taus() {
                let h = 1e-5;
                assert!((central(|s| f.u_hat(s), tau, h) - f.u_hat_prime(tau)).abs() < 1e-6);
                assert!((central(|s| f.v_hat(s), tau, h) - f.v_hat_prime(tau)).abs() < 1e-6);
                assert!((central(|s| f.w_hat(s), tau, h) - f.w_hat_prime(tau)).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn hat_maps_are_negated_t_maps() {
        for fold in 1..=6u32 {
            let f = ProofCurveFunctions::<f64>::for_fold(fold);
            for i in 1..50 {
                let t = i as f64 * 0.01;
                let tau = f.tau_of_t(t);
                assert!((f.u_hat(tau) + u_of_t(fold, t)).abs() < 1e-13);
                assert!((f.v_hat(tau) + v_of_t(fold, t)).abs() < 1e-13);
                assert!((f.w_hat(tau) + w_of_t(fold, t)).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn quotient_derivatives_equal_g_forms() {
        for &alpha in &[0.5, 0.25, 1.0 / 11.0, 0.01] {
            let f = ProofCurveFunctions::<f64>::new(alpha);
            for tau in taus().skip(5) {
                let rel = |a: f64, b: f64| (a - b).abs() / b.abs();
                assert!(rel(f.x_prime(tau), f.x_prime_via_g(tau)) < 1e-8, "a={alpha} tau={tau}");
                assert!(rel(f.y_prime(tau), f.y_prime_via_g(tau)) < 1e-8);
                assert!(rel(f.slope_ratio_prime(tau), f.slope_ratio_prime_via_g(tau)) < 1e-8);
            }
        }
    }

    #[test]
    fn v_over_u_and_w_over_u_forms() {
        let f = ProofCurveFunctions::<f64>::new(0.3);
        for tau in taus().skip(5) {
            let h = 1e-5;
            let vu = central(|s| f.v_hat(s) / f.u_hat(s), tau, h);
            let wu = central(|s| f.w_hat(s) / f.u_hat(s), tau, h);
            assert!((vu - f.v_over_u_prime_via_g(tau)).abs() < 1e-6 * (1.0 + vu.abs()));
            assert!((wu - f.w_over_u_prime_via_g(tau)).abs() < 1e-6 * (1.0 + wu.abs()));
        }
    }

    #[test]
    fn denominator_negative_on_open_arc() {
        for fold in 1..=10u32 {
            let end = std::f64::consts::PI / (2.0 + 2.0 * fold as f64);
            for i in 1..=2000 {
                let t = end * i as f64 / 2000.0;
                assert!(w_of_t(fold, t) < 0.0, "T={fold} t={t}");
            }
        }
    }
}
