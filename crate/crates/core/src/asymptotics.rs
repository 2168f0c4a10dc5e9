//! Large-`n` behaviour of the fold-symmetric family `S^(T)`: the covering
//! ratio `|S(e^{iπ/T})|/S(1) ~ c_T n^{-2/T}` and the maximum modulus
//! `S(1) ~ n^{2/T}/(c_T 2^{2/T})`, with `c_T = π^{2/T-1} Γ²(1/T + 1/2)`.
//!
//! The laws are stated for a family `s^(T)` conjectured to coincide with
//! `S^(T)`; everything here is computed from `S^(T)`.

use std::io::Write;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::export::fmt as fmt_num;
use crate::scalar::Real;
use crate::special::gamma;
use crate::suffridge::t_symmetric_coeffs;

/// Label attached to every asymptotics table.
pub const FAMILY_LABEL: &str = "computed with S^(T) in place of s^(T) (assumed to coincide, not verified)";

/// Absolute slack on the non-increasing deviation check.
pub const TREND_SLACK: f64 = 1e-12;

/// `c_T = π^{2/T-1} Γ²(1/T + 1/2)`.
pub fn c_t<R: Real>(fold: u32) -> Result<R> {
    if fold == 0 {
        return Err(Error::InvalidFoldOrder(fold));
    }
    let t = R::from_usize(fold as usize);
    let g = gamma(R::one() / t + R::lit(0.5));
    Ok(R::PI().powf(R::two() / t - R::one()) * g * g)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AsymptoticSample<R> {
    pub fold: u32,
    pub n: usize,
    /// `|S(e^{iπ/T})| / S(1)`.
    pub ratio_cover: R,
    /// `S(1)`.
    pub max_mod: R,
    /// `ratio_cover · n^{2/T} / c_T`.
    pub normalized_cover: R,
    /// `max_mod · c_T · 2^{2/T} / n^{2/T}`.
    pub normalized_max: R,
}

impl<R: Real> AsymptoticSample<R> {
    pub fn compute(fold: u32, n: usize) -> Result<Self> {
        let poly = t_symmetric_coeffs::<R>(fold, n)?;
        let c = c_t::<R>(fold)?;
        let t = R::from_usize(fold as usize);
        let max_mod = poly.eval_real(R::one());
        let turn = Complex::from_polar(R::one(), R::PI() / t);
        let ratio_cover = poly.eval(turn).norm() / max_mod;
        let scale = R::from_usize(n).powf(R::two() / t);
        Ok(Self {
            fold,
            n,
            ratio_cover,
            max_mod,
            normalized_cover: ratio_cover * scale / c,
            normalized_max: max_mod * c * R::two().powf(R::two() / t) / scale,
        })
    }

    pub fn cover_deviation(&self) -> R {
        (self.normalized_cover - R::one()).abs()
    }

    pub fn max_deviation(&self) -> R {
        (self.normalized_max - R::one()).abs()
    }
}

/// Samples at every `n` in `n_list`, which must be strictly increasing with `n ≥ 3`.
pub fn trend<R: Real>(fold: u32, n_list: &[usize]) -> Result<Vec<AsymptoticSample<R>>> {
    if let Some(&n) = n_list.first() {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("n must be at least 3, got {n}")));
        }
    }
    if n_list.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument("n list must be strictly increasing".into()));
    }
    n_list.iter().map(|&n| AsymptoticSample::compute(fold, n)).collect()
}

/// `25, 50, 100, ...` doubling while at most `n_max`.
pub fn default_n_list(n_max: usize) -> Vec<usize> {
    std::iter::successors(Some(25usize), |&n| n.checked_mul(2))
        .take_while(|&n| n <= n_max)
        .collect()
}

/// Whether both deviations from 1 are non-increasing along the samples,
/// up to [`TREND_SLACK`].
pub fn deviations_non_increasing<R: Real>(samples: &[AsymptoticSample<R>]) -> (bool, bool) {
    let slack = R::lit(TREND_SLACK);
    let cover = samples.windows(2).all(|w| w[1].cover_deviation() <= w[0].cover_deviation() + slack);
    let max = samples.windows(2).all(|w| w[1].max_deviation() <= w[0].max_deviation() + slack);
    (cover, max)
}

/// CSV with header `T,n,ratio_cover,max_mod,normalized_cover,normalized_max`.
pub fn write_csv<R: Real, W: Write>(samples: &[AsymptoticSample<R>], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["T", "n", "ratio_cover", "max_mod", "normalized_cover", "normalized_max"])?;
    for s in samples {
        w.write_record([
            s.fold.to_string(),
            s.n.to_string(),
            fmt_num(s.ratio_cover),
            fmt_num(s.max_mod),
            fmt_num(s.normalized_cover),
            fmt_num(s.normalized_max),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn constants() {
        assert!((c_t::<f64>(2).unwrap() - 1.0).abs() < 1e-14);
        assert!((c_t::<f64>(1).unwrap() - PI * PI / 4.0).abs() < 1e-13);
        assert!((c_t::<f64>(4).unwrap() - 0.8472130).abs() < 1e-7);
        assert!(c_t::<f64>(0).is_err());
    }

    #[test]
    fn finite_n_anchors() {
        let s = AsymptoticSample::<f64>::compute(2, 3).unwrap();
        assert!((s.ratio_cover - 1.0 / 3.0).abs() < 1e-14);
        let s = AsymptoticSample::<f64>::compute(1, 3).unwrap();
        assert!((s.max_mod - 2.2761423).abs() < 1e-7);
    }

    #[test]
    fn fold_two_cover_is_reciprocal() {
        for n in [3, 10, 100, 1000] {
            let s = AsymptoticSample::<f64>::compute(2, n).unwrap();
            assert!((s.ratio_cover * n as f64 - 1.0).abs() < 1e-11, "n={n}");
        }
    }

    #[test]
    fn trend_approaches_one() {
        let n_list = default_n_list(800);
        assert_eq!(n_list, vec![25, 50, 100, 200, 400, 800]);
        for fold in [1, 2, 4] {
            let samples = trend::<f64>(fold, &n_list).unwrap();
            assert_eq!(deviations_non_increasing(&samples), (true, true), "T={fold}");
            for s in &samples {
                assert!(s.ratio_cover > 0.0 && s.ratio_cover < 1.0);
                assert!(s.max_mod > 1.0);
            }
        }
        let last = trend::<f64>(2, &[800]).unwrap()[0];
        assert!((last.normalized_cover - 1.0).abs() < 0.05);
    }

    #[test]
    fn rejects_bad_lists() {
        assert!(trend::<f64>(1, &[2, 10]).is_err());
        assert!(trend::<f64>(1, &[10, 10]).is_err());
        assert!(trend::<f64>(1, &[]).unwrap().is_empty());
    }

    #[test]
    fn csv_header() {
        let samples = trend::<f64>(2, &[3]).unwrap();
        let mut buf = Vec::new();
        write_csv(&samples, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "T,n,ratio_cover,max_mod,normalized_cover,normalized_max\n2,3,0.333333333333,1.80000000000,1.00000000000,1.20000000000\n"
        );
    }
}
