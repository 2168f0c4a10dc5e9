//! The polynomial family `H(x, k)`, the trigonometric function `G(τ, α)`,
//! the cosine series that links them, and grid verification of the two
//! inequalities that drive the monotonicity of the boundary curve.

use std::fmt;
use std::io::Write;

use crate::error::Result;
use crate::export::fmt as fmt_num;
use crate::scalar::{cos_defect6, Real};

/// Largest `k` accepted by [`lemma_h`]; `3^(2k)` stays far from overflow.
pub const MAX_K: u32 = 60;

/// `H(x,k) = -(1-x)²3^(2k) + (1+x)(3-2x)^(2k) - (1+x)(3-x) + (3-x)(1-2x)^(2k)`.
///
/// # Panics
/// If `k > MAX_K`.
pub fn lemma_h<R: Real>(x: R, k: u32) -> R {
    assert!(k <= MAX_K, "k = {k} exceeds {MAX_K}");
    let one = R::one();
    let two = R::two();
    let three = R::lit(3.0);
    let e = 2 * k as i32;
    -(one - x).powi(2) * three.powi(e) + (one + x) * (three - two * x).powi(e) - (one + x) * (three - x)
        + (three - x) * (one - two * x).powi(e)
}

/// Weights and frequencies of `G(τ, α) = Σ cᵢ cos(ωᵢ τ)`.
fn g_terms<R: Real>(alpha: R) -> [(R, R); 4] {
    let one = R::one();
    let two = R::two();
    let three = R::lit(3.0);
    [
        (one + alpha, three - two * alpha),
        (three - alpha, one - two * alpha),
        (-(one - alpha).powi(2), three),
        (-(one + alpha) * (three - alpha), one),
    ]
}

/// `G(τ,α) = (1+α)cos((3-2α)τ) + (3-α)cos((1-2α)τ) - (1-α)²cos 3τ - (1+α)(3-α)cos τ`.
///
/// The weighted cosines agree through their `τ⁴` Taylor terms, so only the
/// tails `cos u - 1 + u²/2 - u⁴/24` are summed. This keeps full relative
/// accuracy as `τ → 0`, where `G` behaves like `τ⁶`.
pub fn lemma_g<R: Real>(tau: R, alpha: R) -> R {
    g_terms(alpha)
        .iter()
        .fold(R::zero(), |acc, &(c, w)| acc + c * cos_defect6(w * tau))
}

/// Partial sum `Σ_{k=0}^{K} (-1)^k H(α,k) τ^(2k)/(2k)!` of the cosine series of `G`.
pub fn cosine_series_partial<R: Real>(tau: R, alpha: R, last_k: u32) -> R {
    let tau2 = tau * tau;
    let mut power = R::one(); // τ^(2k)/(2k)!
    let mut sum = R::zero();
    for k in 0..=last_k {
        if k > 0 {
            power = power * tau2 / R::from_usize(((2 * k - 1) * (2 * k)) as usize);
        }
        let sign = if k % 2 == 0 { R::one() } else { -R::one() };
        sum = sum + sign * lemma_h(alpha, k) * power;
    }
    sum
}

/// First omitted term `|H(α,K+1)| τ^(2K+2)/(2K+2)!` after the partial sum to `K`.
pub fn series_tail_bound<R: Real>(tau: R, alpha: R, last_k: u32) -> R {
    let k = last_k + 1;
    let mut power = R::one();
    for i in 1..=(2 * k) {
        power = power * tau / R::from_usize(i as usize);
    }
    lemma_h(alpha, k).abs() * power
}

/// Lower bound from truncating the alternating series after its first two
/// nonzero terms: `|H(α,4)| τ⁶/8! · (14/(5-4α+2α²) - τ²)`.
pub fn lemma2_lower_bound<R: Real>(tau: R, alpha: R) -> R {
    let ratio = R::lit(14.0) / (R::lit(5.0) - R::lit(4.0) * alpha + R::two() * alpha * alpha);
    lemma_h(alpha, 4).abs() * tau.powi(6) / R::lit(40320.0) * (ratio - tau * tau)
}

/// Which inequality a grid point violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    /// `H(x,k) < 0`.
    HNegative,
    /// `|H(x,k)| > |H(x,k+1)| / ((2k+1)(2k+2))`.
    HRatio,
    /// `|H(x,k)| > |H(x,k+1)| / (3k²)`.
    HRatioStrong,
    /// `G(τ,α) > 0`.
    GPositive,
    /// `G(τ,α)` above the two-term series bound.
    GLowerBound,
}

impl Claim {
    pub fn name(self) -> &'static str {
        match self {
            Claim::HNegative => "H_negative",
            Claim::HRatio => "H_ratio",
            Claim::HRatioStrong => "H_ratio_strong",
            Claim::GPositive => "G_positive",
            Claim::GLowerBound => "G_lower_bound",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A grid point where `lhs > rhs` failed.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation<R> {
    pub claim: Claim,
    /// `x` for the H claims, `α` for the G claims.
    pub first: R,
    /// `k` for the H claims, `τ` for the G claims.
    pub second: R,
    pub lhs: R,
    pub rhs: R,
}

/// Outcome of a grid verification.
#[derive(Clone, Debug, PartialEq)]
pub struct LemmaReport<R> {
    pub description: String,
    pub points_checked: usize,
    pub violations: Vec<Violation<R>>,
    /// Smallest `lhs - rhs` seen for each claim.
    pub min_margins: Vec<(Claim, R)>,
}

impl<R: Real> LemmaReport<R> {
    fn new(description: String) -> Self {
        Self { description, points_checked: 0, violations: Vec::new(), min_margins: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn min_margin(&self, claim: Claim) -> Option<R> {
        self.min_margins.iter().find(|(c, _)| *c == claim).map(|&(_, m)| m)
    }

    fn check(&mut self, claim: Claim, first: R, second: R, lhs: R, rhs: R) {
        let margin = lhs - rhs;
        match self.min_margins.iter_mut().find(|(c, _)| *c == claim) {
            Some(entry) => entry.1 = entry.1.min(margin),
            None => self.min_margins.push((claim, margin)),
        }
        // NaN counts as a violation
        if lhs.partial_cmp(&rhs) != Some(std::cmp::Ordering::Greater) {
            self.violations.push(Violation { claim, first, second, lhs, rhs });
        }
    }

    /// Writes the violations as CSV. Nothing at all is written when the
    /// report passed.
    pub fn write_violations_csv<W: Write>(&self, out: W) -> Result<()> {
        if self.violations.is_empty() {
            return Ok(());
        }
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["claim", "first", "second", "lhs", "rhs"])?;
        for v in &self.violations {
            w.write_record([
                v.claim.name().to_string(),
                fmt_num(v.first),
                fmt_num(v.second),
                fmt_num(v.lhs),
                fmt_num(v.rhs),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// `count` interior points of `(lo, hi)`, equally spaced.
pub fn open_grid<R: Real>(lo: R, hi: R, count: usize) -> Vec<R> {
    let step = (hi - lo) / R::from_usize(count + 1);
    (1..=count).map(|i| lo + step * R::from_usize(i)).collect()
}

/// `{0.01, 0.02, ..., 0.50}`.
pub fn default_x_grid<R: Real>() -> Vec<R> {
    (1..=50).map(|i| R::from_usize(i) / R::lit(100.0)).collect()
}

/// 500 interior points of `(0, π/2)`.
pub fn default_tau_grid<R: Real>() -> Vec<R> {
    open_grid(R::zero(), R::FRAC_PI_2(), 500)
}

/// Checks `H(x,k) < 0` and both ratio inequalities for every `x` in the grid
/// and `k = 3..=k_max`.
pub fn verify_lemma1<R: Real>(x_grid: &[R], k_max: u32) -> LemmaReport<R> {
    let k_max = k_max.min(MAX_K - 1);
    let mut report = LemmaReport::new(format!("H(x,k): {} x values, k = 3..={k_max}", x_grid.len()));
    for &x in x_grid {
        for k in 3..=k_max {
            let h = lemma_h(x, k);
            let next = lemma_h(x, k + 1).abs();
            let kr = R::from_usize(k as usize);
            report.check(Claim::HNegative, x, kr, -h, R::zero());
            let factorial_ratio = R::from_usize(((2 * k + 1) * (2 * k + 2)) as usize);
            report.check(Claim::HRatio, x, kr, h.abs(), next / factorial_ratio);
            report.check(Claim::HRatioStrong, x, kr, h.abs(), next / (R::lit(3.0) * kr * kr));
            report.points_checked += 1;
        }
    }
    report
}

/// Checks `G(τ,α) > 0` and the two-term series lower bound on the grid.
pub fn verify_lemma2<R: Real>(tau_grid: &[R], alpha_grid: &[R]) -> LemmaReport<R> {
    let mut report =
        LemmaReport::new(format!("G(tau,alpha): {} tau x {} alpha", tau_grid.len(), alpha_grid.len()));
    for &alpha in alpha_grid {
        for &tau in tau_grid {
            let g = lemma_g(tau, alpha);
            report.check(Claim::GPositive, alpha, tau, g, R::zero());
            report.check(Claim::GLowerBound, alpha, tau, g, lemma2_lower_bound(tau, alpha));
            report.points_checked += 1;
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn g_naive(tau: f64, a: f64) -> f64 {
        (1.0 + a) * ((3.0 - 2.0 * a) * tau).cos() + (3.0 - a) * ((1.0 - 2.0 * a) * tau).cos()
            - (1.0 - a).powi(2) * (3.0 * tau).cos()
            - (1.0 + a) * (3.0 - a) * tau.cos()
    }

    #[test]
    fn h_vanishes_for_small_k() {
        for i in 0..=50 {
            let x = i as f64 / 100.0;
            for k in 0..3 {
                assert!(lemma_h(x, k).abs() < 1e-12, "x={x} k={k}");
            }
        }
    }

    #[test]
    fn h_vanishes_at_origin() {
        for k in 0..=MAX_K {
            assert_eq!(lemma_h(0.0_f64, k), 0.0);
        }
    }

    #[test]
    fn h_known_values() {
        assert!((lemma_h(0.5_f64, 3) + 90.0).abs() < 1e-9);
        assert!((lemma_h(0.5_f64, 4) + 1260.0).abs() < 1e-9);
    }

    #[test]
    #[should_panic]
    fn h_rejects_large_k() {
        lemma_h(0.1_f64, MAX_K + 1);
    }

    #[test]
    fn g_is_zero_at_origin() {
        for &a in &[0.01, 0.2, 0.5, 0.9] {
            assert_eq!(lemma_g(0.0_f64, a), 0.0);
        }
    }

    #[test]
    fn g_reference_value() {
        let g = lemma_g(PI / 4.0, 0.5_f64);
        let closed = 2.5 - 0.25 * (3.0 * PI / 4.0).cos() - 3.75 * (PI / 4.0).cos();
        assert!((g - closed).abs() < 1e-14);
        assert!((g - 0.0251263).abs() < 1e-6);
    }

    #[test]
    fn g_matches_naive_evaluation_away_from_zero() {
        for &a in &[0.05, 0.25, 0.5] {
            for i in 1..40 {
                let tau = 0.04 * i as f64;
                assert!((lemma_g(tau, a) - g_naive(tau, a)).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn g_small_tau_law() {
        for &a in &[0.01, 0.1, 0.25, 0.5] {
            for &tau in &[1e-2_f64, 3e-3, 1e-3] {
                let approx = -lemma_h(a, 3) * tau.powi(6) / 720.0;
                let rel = (lemma_g(tau, a) - approx).abs() / approx;
                assert!(rel < 1e-3, "a={a} tau={tau} rel={rel}");
            }
        }
    }

    #[test]
    fn lemma1_default_grid_passes() {
        let report = verify_lemma1::<f64>(&default_x_grid(), 20);
        assert!(report.passed(), "{:?}", &report.violations[..report.violations.len().min(3)]);
        assert_eq!(report.points_checked, 50 * 18);
    }

    #[test]
    fn lemma1_margin_at_half() {
        let h3 = lemma_h(0.5_f64, 3).abs();
        let h4 = lemma_h(0.5_f64, 4).abs();
        assert_eq!(h3, 90.0);
        assert!((h4 / 56.0 - 22.5).abs() < 1e-12);
        assert!(h3 > h4 / 56.0);
    }

    #[test]
    fn lemma2_default_grid_passes() {
        let alphas: Vec<f64> = (1..=50).map(|i| i as f64 / 100.0).collect();
        let report = verify_lemma2(&default_tau_grid::<f64>(), &alphas);
        assert!(report.passed(), "{:?}", &report.violations[..report.violations.len().min(3)]);
        assert_eq!(report.points_checked, 500 * 50);
    }

    #[test]
    fn lower_bound_at_reference_point() {
        let (tau, a) = (1.0_f64, 0.25_f64);
        let bound = lemma2_lower_bound(tau, a);
        let two_terms = lemma_h(a, 3).abs() * tau.powi(6) / 720.0 - lemma_h(a, 4).abs() * tau.powi(8) / 40320.0;
        assert!((bound - two_terms).abs() < 1e-14);
        assert!(lemma_g(tau, a) > bound);
    }

    #[test]
    fn partial_sums_bracket_g() {
        let (tau, a) = (1.2_f64, 0.3_f64);
        let g = lemma_g(tau, a);
        let s4 = cosine_series_partial(tau, a, 4);
        let s5 = cosine_series_partial(tau, a, 5);
        assert!((s4 - g) * (s5 - g) < 0.0, "s4={s4} s5={s5} g={g}");
    }

    #[test]
    fn series_converges_within_leibniz_tail() {
        for &a in &[0.01, 0.1, 0.3, 0.5] {
            for &tau in &default_tau_grid::<f64>() {
                let err = (cosine_series_partial(tau, a, 12) - lemma_g(tau, a)).abs();
                let tail = series_tail_bound(tau, a, 12);
                assert!(err <= tail + 1e-13, "a={a} tau={tau} err={err} tail={tail}");
            }
        }
    }

    #[test]
    fn empty_csv_when_passing() {
        let report = verify_lemma1::<f64>(&[0.1, 0.2], 5);
        let mut buf = Vec::new();
        report.write_violations_csv(&mut buf).unwrap();
        assert!(buf.is_empty());
    }

    #[test]
    fn violations_are_reported() {
        // H(-0.5, 3) = 630 > 0
        let report = verify_lemma1::<f64>(&[-0.5], 3);
        assert!(!report.passed());
        let mut buf = Vec::new();
        report.write_violations_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("claim,first,second,lhs,rhs\n"));
    }
}
