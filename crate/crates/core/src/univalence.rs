//! Numerical univalence certificates for `z + a z^(1+T) + b z^(1+2T)`.
//!
//! Stage 1 locates the zeros of `F'` in closed form; a zero strictly inside
//! the test disk rules out univalence. Stage 2 samples the image of the
//! circle `|z| = r` and looks for a self-crossing of the resulting closed
//! polygon. An analytic map that is injective on that circle is univalent
//! in the disk it bounds.

use std::fmt;

use num_complex::Complex;

use crate::domain::TOUCH_TOLERANCE;
use crate::error::{Error, Result};
use crate::geometry::{self, Point};
use crate::poly::{trinomial_derivative_roots, SymmetricPolynomial};
use crate::scalar::Real;

/// Radii used to certify univalence in the open unit disk.
pub const RADIUS_LADDER: [f64; 3] = [0.9, 0.99, 0.999];

/// Default number of circle samples.
pub const DEFAULT_SAMPLES: usize = 1024;

pub const MIN_SAMPLES: usize = 64;

/// Slack on the critical-point test `|z| < r - ROOT_SLACK`.
pub const ROOT_SLACK: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Univalent,
    NotUnivalent,
    Inconclusive,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Univalent => "univalent",
            Verdict::NotUnivalent => "not_univalent",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Concrete evidence against univalence.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Witness<R> {
    /// `F'(z) = 0` with `|z|` below the test radius.
    CriticalPoint { z: Complex<R>, modulus: R },
    /// The image edges starting at angles `theta1` and `theta2` meet.
    SelfIntersection { theta1: R, theta2: R },
}

#[derive(Clone, Debug, PartialEq)]
pub struct UnivalenceReport<R> {
    pub verdict: Verdict,
    pub fold: u32,
    pub a: R,
    pub b: R,
    /// Smallest modulus among the zeros of `F'`; infinite when `F'` is constant.
    pub min_derivative_root_modulus: R,
    /// Smallest distance between non-adjacent edges of the sampled image
    /// polygon. `None` when Stage 1 already settled the verdict.
    pub min_boundary_self_distance: Option<R>,
    pub radius: R,
    pub samples: usize,
    pub witness: Option<Witness<R>>,
    /// Per-radius verdicts when the report comes from the radius ladder.
    pub ladder: Vec<(R, Verdict)>,
}

impl<R: Real> UnivalenceReport<R> {
    pub fn is_univalent(&self) -> bool {
        self.verdict == Verdict::Univalent
    }
}

/// Certificate on the disk of radius `radius`.
pub fn is_univalent_trinomial<R: Real>(
    fold: u32,
    a: R,
    b: R,
    radius: R,
    samples: usize,
) -> Result<UnivalenceReport<R>> {
    let poly = SymmetricPolynomial::trinomial(fold, a, b)?;
    if !(radius > R::zero() && radius <= R::one()) {
        return Err(Error::InvalidArgument(format!("test radius must lie in (0, 1], got {radius}")));
    }
    if samples < MIN_SAMPLES {
        return Err(Error::InvalidArgument(format!("need at least {MIN_SAMPLES} samples, got {samples}")));
    }

    let roots = trinomial_derivative_roots(fold, a, b);
    let innermost = roots.iter().min_by(|x, y| x.modulus.partial_cmp(&y.modulus).expect("finite moduli"));
    let min_root = innermost.map_or(R::infinity(), |r| r.modulus);

    let mut report = UnivalenceReport {
        verdict: Verdict::Univalent,
        fold,
        a,
        b,
        min_derivative_root_modulus: min_root,
        min_boundary_self_distance: None,
        radius,
        samples,
        witness: None,
        ladder: Vec::new(),
    };

    if let Some(root) = innermost {
        if root.modulus < radius - R::lit(ROOT_SLACK) {
            report.verdict = Verdict::NotUnivalent;
            report.witness = Some(Witness::CriticalPoint { z: root.z, modulus: root.modulus });
            return Ok(report);
        }
    }

    let step = R::two() * R::PI() / R::from_usize(samples);
    let image: Vec<Point<R>> = (0..samples)
        .map(|j| {
            let w = poly.eval(Complex::from_polar(radius, step * R::from_usize(j)));
            Point::new(w.re, w.im)
        })
        .collect();
    let proximity = geometry::self_proximity(&image, R::lit(TOUCH_TOLERANCE));
    report.min_boundary_self_distance = Some(proximity.min_distance);
    if let Some(pair) = proximity.crossing {
        report.verdict = Verdict::NotUnivalent;
        report.witness = Some(Witness::SelfIntersection {
            theta1: step * R::from_usize(pair.first),
            theta2: step * R::from_usize(pair.second),
        });
    }
    Ok(report)
}

/// Certificate for the open unit disk from the radius ladder.
///
/// The verdict is `Univalent` when every radius passes and `NotUnivalent`
/// when the finest radius fails. A failure at a coarser radius followed by a
/// pass at the finest contradicts monotonicity in `r` and yields
/// `Inconclusive`. The remaining fields describe the finest radius.
pub fn certify_univalence<R: Real>(fold: u32, a: R, b: R, samples: usize) -> Result<UnivalenceReport<R>> {
    let mut ladder = Vec::with_capacity(RADIUS_LADDER.len());
    let mut finest = None;
    for r in RADIUS_LADDER {
        let report = is_univalent_trinomial(fold, a, b, R::lit(r), samples)?;
        ladder.push((report.radius, report.verdict));
        finest = Some(report);
    }
    let mut report = finest.expect("ladder is non-empty");
    let coarse_failure = ladder[..ladder.len() - 1]
        .iter()
        .any(|&(_, v)| v == Verdict::NotUnivalent);
    if report.verdict == Verdict::Univalent && coarse_failure {
        report.verdict = Verdict::Inconclusive;
    }
    report.ladder = ladder;
    Ok(report)
}
