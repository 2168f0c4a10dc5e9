//! The univalence domain `U_T` of `z + a z^(1+T) + b z^(1+2T)` in the
//! coefficient plane: its five boundary arcs, the closed boundary polyline,
//! and point containment.

mod proof;

use std::fmt;
use std::io::Write;

pub use proof::{u_of_t, v_of_t, w_of_t, ProofCurveFunctions};

use crate::error::{Error, Result};
use crate::export::fmt as fmt_num;
use crate::geometry::{self, Point};
use crate::scalar::Real;
use crate::suffridge::corner_point;

/// Orientation predicates treat values below this as zero.
pub const TOUCH_TOLERANCE: f64 = 1e-12;

/// Below `t < SERIES_SWITCH/(2+2T)` the `Γ3` maps return their `t → 0` limit.
pub const SERIES_SWITCH: f64 = 1e-4;

/// The five arcs that bound `U_T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveKind {
    Gamma1,
    Gamma2Plus,
    Gamma2Minus,
    Gamma3Plus,
    Gamma3Minus,
}

impl CurveKind {
    pub const ALL: [CurveKind; 5] = [
        CurveKind::Gamma2Minus,
        CurveKind::Gamma2Plus,
        CurveKind::Gamma3Plus,
        CurveKind::Gamma1,
        CurveKind::Gamma3Minus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CurveKind::Gamma1 => "Gamma1",
            CurveKind::Gamma2Plus => "Gamma2Plus",
            CurveKind::Gamma2Minus => "Gamma2Minus",
            CurveKind::Gamma3Plus => "Gamma3Plus",
            CurveKind::Gamma3Minus => "Gamma3Minus",
        }
    }
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `A(t) = U(t)/W(t)`, the `x` coordinate of `Γ3+`.
pub fn curve_a<R: Real>(fold: u32, t: R) -> R {
    if t.abs() < switch_threshold::<R>(fold) {
        return gamma3_limit::<R>(fold).x;
    }
    u_of_t(fold, t) / w_of_t(fold, t)
}

/// `B(t) = V(t)/W(t)`, the `y` coordinate of `Γ3±`.
pub fn curve_b<R: Real>(fold: u32, t: R) -> R {
    if t.abs() < switch_threshold::<R>(fold) {
        return gamma3_limit::<R>(fold).y;
    }
    v_of_t(fold, t) / w_of_t(fold, t)
}

fn switch_threshold<R: Real>(fold: u32) -> R {
    R::lit(SERIES_SWITCH) / (R::two() + R::two() * R::from_usize(fold as usize))
}

/// `(A, B)` as `t → 0`: `(4/(2+3T), (T+2)/((2+3T)(1+2T)))`.
pub fn gamma3_limit<R: Real>(fold: u32) -> Point<R> {
    let t = R::from_usize(fold as usize);
    let two = R::two();
    let p = two + R::lit(3.0) * t;
    Point::new(R::lit(4.0) / p, (t + two) / (p * (R::one() + two * t)))
}

/// Upper end `4/(2+3T)` of the `Γ2±` parameter range.
pub fn gamma2_end<R: Real>(fold: u32) -> R {
    R::lit(4.0) / (R::two() + R::lit(3.0) * R::from_usize(fold as usize))
}

/// Upper end `π/(2+2T)` of the `Γ3±` parameter range.
pub fn gamma3_end<R: Real>(fold: u32) -> R {
    R::PI() / (R::two() + R::two() * R::from_usize(fold as usize))
}

/// One parametric boundary arc of `U_T`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurveSegment<R> {
    pub kind: CurveKind,
    pub fold: u32,
    pub t_min: R,
    pub t_max: R,
}

impl<R: Real> CurveSegment<R> {
    pub fn new(kind: CurveKind, fold: u32) -> Result<Self> {
        if fold == 0 {
            return Err(Error::InvalidFoldOrder(fold));
        }
        let (t_min, t_max) = match kind {
            CurveKind::Gamma1 => {
                let a0 = corner_point::<R>(fold)?.a0;
                (-a0, a0)
            }
            CurveKind::Gamma2Plus | CurveKind::Gamma2Minus => (R::zero(), gamma2_end(fold)),
            CurveKind::Gamma3Plus | CurveKind::Gamma3Minus => (R::zero(), gamma3_end(fold)),
        };
        Ok(Self { kind, fold, t_min, t_max })
    }

    pub fn point(&self, t: R) -> Point<R> {
        let tt = R::from_usize(self.fold as usize);
        let one = R::one();
        let two = R::two();
        match self.kind {
            CurveKind::Gamma1 => Point::new(t, one / (one + two * tt)),
            CurveKind::Gamma2Plus => Point::new(t, ((one + tt) * t - one) / (one + two * tt)),
            CurveKind::Gamma2Minus => Point::new(-t, ((one + tt) * t - one) / (one + two * tt)),
            CurveKind::Gamma3Plus => Point::new(curve_a(self.fold, t), curve_b(self.fold, t)),
            CurveKind::Gamma3Minus => Point::new(-curve_a(self.fold, t), curve_b(self.fold, t)),
        }
    }

    /// `(start, end)` parameters in counterclockwise boundary order.
    pub fn traversal(&self) -> (R, R) {
        match self.kind {
            CurveKind::Gamma2Plus | CurveKind::Gamma3Plus => (self.t_min, self.t_max),
            CurveKind::Gamma1 | CurveKind::Gamma2Minus | CurveKind::Gamma3Minus => (self.t_max, self.t_min),
        }
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The general arc `Γ3^s` of the trinomial `z + a z^k + b z^m`.
///
/// Sign factors use `p/q`, the reduced form of `(k-1)/(m-k)`. For
/// `k = 1+T, m = 1+2T`, `s = 1` traces `Γ3+` and `s = 0` traces `Γ3-`.
pub fn general_gamma3<R: Real>(k: u32, m: u32, s: u32, t: R) -> Result<Point<R>> {
    if k < 2 || m <= k {
        return Err(Error::InvalidExponents { k, m });
    }
    if s > 1 {
        return Err(Error::InvalidArgument(format!("s must be 0 or 1, got {s}")));
    }
    let g = gcd(k - 1, m - k);
    let p = (k - 1) / g;
    let q = (m - k) / g;
    let parity = |e: u32| if e.is_multiple_of(2) { R::one() } else { -R::one() };
    let sx = parity(p * s + 1);
    let sy = parity((p + q) * s);

    let kr = R::from_usize(k as usize);
    let mr = R::from_usize(m as usize);
    let one = R::one();

    if t.abs() < R::lit(SERIES_SWITCH) / mr {
        // tan u ≈ u + u³/3 in every difference
        let den = kr * mr * (mr * mr - kr * kr);
        return Ok(Point::new(sx * mr * (mr * mr - one) / den, sy * kr * (kr * kr - one) / den));
    }

    let tol = R::lit(TOUCH_TOLERANCE);
    let (ct, ck, cm) = (t.cos(), (kr * t).cos(), (mr * t).cos());
    let den = kr * (mr * t).tan() - mr * (kr * t).tan();
    for d in [ct, ck, cm, den] {
        if d.abs() < tol {
            return Err(Error::PoleProximity {
                t: t.to_f64_lossy(),
                denominator: d.to_f64_lossy(),
                tolerance: TOUCH_TOLERANCE,
            });
        }
    }
    let x = sx * ct / ck * ((mr * t).tan() - mr * t.tan()) / den;
    let y = sy * ct / cm * ((kr * t).tan() - kr * t.tan()) / den;
    Ok(Point::new(x, y))
}

/// One vertex of the sampled boundary.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundarySample<R> {
    pub segment: CurveKind,
    pub t: R,
    pub point: Point<R>,
}

/// The closed counterclockwise boundary polyline of `U_T`.
///
/// `samples` keeps every sampled point including the repeated junction
/// points, so the last sample coincides with the first. Geometric queries
/// run on [`DomainBoundary::vertices`], which drops the repeats.
#[derive(Clone, Debug, PartialEq)]
pub struct DomainBoundary<R> {
    fold: u32,
    samples: Vec<BoundarySample<R>>,
    vertices: Vec<Point<R>>,
}

/// Samples all five arcs, `samples_per_segment` points each, in the order
/// `Γ2-`, `Γ2+`, `Γ3+`, `Γ1`, `Γ3-`.
pub fn boundary_polyline<R: Real>(fold: u32, samples_per_segment: usize) -> Result<DomainBoundary<R>> {
    if samples_per_segment < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 samples per segment, got {samples_per_segment}"
        )));
    }
    let mut samples = Vec::with_capacity(5 * samples_per_segment);
    for kind in CurveKind::ALL {
        let seg = CurveSegment::<R>::new(kind, fold)?;
        let (start, end) = seg.traversal();
        let last = R::from_usize(samples_per_segment - 1);
        for i in 0..samples_per_segment {
            let t = if i + 1 == samples_per_segment {
                end
            } else {
                start + (end - start) * R::from_usize(i) / last
            };
            samples.push(BoundarySample { segment: kind, t, point: seg.point(t) });
        }
    }

    let merge = R::lit(1e-12);
    let mut vertices: Vec<Point<R>> = Vec::with_capacity(samples.len());
    for s in &samples {
        if vertices.last().is_none_or(|&v: &Point<R>| v.dist(s.point) > merge) {
            vertices.push(s.point);
        }
    }
    while vertices.len() > 1 && vertices[0].dist(*vertices.last().unwrap()) <= merge {
        vertices.pop();
    }
    Ok(DomainBoundary { fold, samples, vertices })
}

impl<R: Real> DomainBoundary<R> {
    pub fn fold(&self) -> u32 {
        self.fold
    }

    pub fn samples(&self) -> &[BoundarySample<R>] {
        &self.samples
    }

    /// Distinct polygon vertices (junction repeats and closing point removed).
    pub fn vertices(&self) -> &[Point<R>] {
        &self.vertices
    }

    pub fn segment_samples(&self, kind: CurveKind) -> impl Iterator<Item = &BoundarySample<R>> {
        self.samples.iter().filter(move |s| s.segment == kind)
    }

    /// Distance between the first and last sample.
    pub fn closure_gap(&self) -> R {
        match (self.samples.first(), self.samples.last()) {
            (Some(a), Some(b)) => a.point.dist(b.point),
            _ => R::zero(),
        }
    }

    pub fn signed_area(&self) -> R {
        geometry::signed_area(&self.vertices)
    }

    pub fn is_counterclockwise(&self) -> bool {
        self.signed_area() > R::zero()
    }

    /// No two non-adjacent edges cross or touch.
    pub fn is_simple(&self) -> bool {
        geometry::find_self_intersection(&self.vertices, R::lit(TOUCH_TOLERANCE)).is_none()
    }

    /// Largest distance from a mirrored vertex `(-x, y)` to the polyline.
    pub fn symmetry_defect(&self) -> R {
        self.vertices.iter().fold(R::zero(), |acc, v| {
            acc.max(geometry::distance_to_polygon(&self.vertices, Point::new(-v.x, v.y)))
        })
    }

    /// Even-odd containment test.
    pub fn contains(&self, a: R, b: R) -> bool {
        geometry::point_in_polygon(&self.vertices, Point::new(a, b))
    }

    pub fn distance_to(&self, a: R, b: R) -> R {
        geometry::distance_to_polygon(&self.vertices, Point::new(a, b))
    }

    /// `(min, max)` corners of the axis-aligned bounding box.
    pub fn bounding_box(&self) -> (Point<R>, Point<R>) {
        let init = (
            Point::new(R::infinity(), R::infinity()),
            Point::new(R::neg_infinity(), R::neg_infinity()),
        );
        self.vertices.iter().fold(init, |(lo, hi), v| {
            (Point::new(lo.x.min(v.x), lo.y.min(v.y)), Point::new(hi.x.max(v.x), hi.y.max(v.y)))
        })
    }

    /// CSV with header `segment,t,x,y`, one row per sample.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["segment", "t", "x", "y"])?;
        for s in &self.samples {
            w.write_record([s.segment.name().to_string(), fmt_num(s.t), fmt_num(s.point.x), fmt_num(s.point.y)])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Whether `(a, b)` lies inside the boundary sampled at `samples` points per arc.
pub fn contains<R: Real>(fold: u32, a: R, b: R, samples: usize) -> Result<bool> {
    Ok(boundary_polyline::<R>(fold, samples)?.contains(a, b))
}
