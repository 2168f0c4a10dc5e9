//! The objectives `L1 = a`, `L2 = 1+a+b`, `L3 = (1-a+b)/(1+a+b)` over `U_T`:
//! closed-form extrema at the corner, monotonicity along `Γ3+`, and a grid
//! search that locates the extrema without using the closed forms.

use std::fmt;
use std::io::Write;

use crate::domain::{boundary_polyline, DomainBoundary, ProofCurveFunctions};
use crate::error::{Error, Result};
use crate::export::fmt as fmt_num;
use crate::geometry::Point;
use crate::inequalities::lemma_g;
use crate::scalar::{sin_pi_ratio, Real};
use crate::suffridge::corner_point;

/// Boundary samples per arc used by the grid oracle.
pub const GRID_BOUNDARY_SAMPLES: usize = 2048;

pub const MIN_RESOLUTION: usize = 50;
pub const MIN_MONOTONICITY_SAMPLES: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Objective {
    L1,
    L2,
    L3,
}

impl Objective {
    pub const ALL: [Objective; 3] = [Objective::L1, Objective::L2, Objective::L3];

    pub fn name(self) -> &'static str {
        match self {
            Objective::L1 => "L1",
            Objective::L2 => "L2",
            Objective::L3 => "L3",
        }
    }

    /// `L1` and `L2` are maximized, `L3` minimized.
    pub fn maximized(self) -> bool {
        !matches!(self, Objective::L3)
    }

    /// Value at `(a, b)`; `None` for `L3` when `1 + a + b = 0`.
    pub fn value<R: Real>(self, a: R, b: R) -> Option<R> {
        let one = R::one();
        match self {
            Objective::L1 => Some(a),
            Objective::L2 => Some(one + a + b),
            Objective::L3 => {
                let den = one + a + b;
                (den != R::zero()).then(|| (one - a + b) / den)
            }
        }
    }

    /// Euclidean norm of the gradient at `(a, b)`.
    pub fn gradient_norm<R: Real>(self, a: R, b: R) -> R {
        match self {
            Objective::L1 => R::one(),
            Objective::L2 => R::two().sqrt(),
            Objective::L3 => {
                let den = R::one() + a + b;
                R::two() * (R::one() + b).hypot(a) / (den * den)
            }
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ObjectiveValues<R> {
    pub l1: R,
    pub l2: R,
    pub l3: R,
}

/// `(L1, L2, L3)` at `(a, b)`.
pub fn objectives<R: Real>(a: R, b: R) -> Result<ObjectiveValues<R>> {
    let l3 = Objective::L3.value(a, b).ok_or(Error::UndefinedObjective)?;
    Ok(ObjectiveValues { l1: a, l2: R::one() + a + b, l3 })
}

/// Extrema over `U_T`, all attained at the corner point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedFormExtrema<R> {
    pub fold: u32,
    pub corner: Point<R>,
    pub max_l1: R,
    pub max_l2: R,
    pub min_l3: R,
}

impl<R: Real> ClosedFormExtrema<R> {
    pub fn value(&self, objective: Objective) -> R {
        match objective {
            Objective::L1 => self.max_l1,
            Objective::L2 => self.max_l2,
            Objective::L3 => self.min_l3,
        }
    }
}

/// `max L1 = a⁽⁰⁾`, `max L2 = 1 + a⁽⁰⁾ + b⁽⁰⁾`,
/// `min L3 = ((1 - s)/c)²` with `s + ic = e^{iπ/(2+2T)}`.
pub fn closed_form_extrema<R: Real>(fold: u32) -> Result<ClosedFormExtrema<R>> {
    let corner = corner_point::<R>(fold)?;
    let den = 2 + 2 * fold as i64;
    let s: R = sin_pi_ratio(1, den);
    // cos(π/(2+2T)) = sin(π(T+1)/(2+2T) - π/(2+2T)) = sin(πT/(2+2T))
    let c: R = sin_pi_ratio(fold as i64, den);
    let q = (R::one() - s) / c;
    Ok(ClosedFormExtrema {
        fold,
        corner: Point::new(corner.a0, corner.b0),
        max_l1: corner.a0,
        max_l2: R::one() + corner.a0 + corner.b0,
        min_l3: q * q,
    })
}

/// `min L3` in the equivalent form `(1 - s)/(1 + s)`.
pub fn min_l3_rational_form<R: Real>(fold: u32) -> R {
    let s: R = sin_pi_ratio(1, 2 + 2 * fold as i64);
    (R::one() - s) / (R::one() + s)
}

/// Signs of consecutive differences of one sampled quantity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SignTable<R> {
    pub quantity: &'static str,
    pub increasing: bool,
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    /// Smallest step in the expected direction (negative when violated).
    pub min_step: R,
}

impl<R: Real> SignTable<R> {
    fn from_values(quantity: &'static str, increasing: bool, values: &[R]) -> Self {
        let mut table = SignTable { quantity, increasing, positive: 0, negative: 0, zero: 0, min_step: R::infinity() };
        for w in values.windows(2) {
            let d = w[1] - w[0];
            if d > R::zero() {
                table.positive += 1;
            } else if d < R::zero() {
                table.negative += 1;
            } else {
                table.zero += 1;
            }
            let directed = if increasing { d } else { -d };
            table.min_step = table.min_step.min(directed);
        }
        table
    }

    /// Steps against the expected direction, zero steps included.
    pub fn violations(&self) -> usize {
        self.zero + if self.increasing { self.negative } else { self.positive }
    }

    pub fn is_strict(&self) -> bool {
        self.violations() == 0
    }
}

/// Finite-difference sign tables of `x = Û/Ŵ`, `y = V̂/Ŵ` and
/// `(1+y)/x = (V̂+Ŵ)/Û` along `Γ3+` in the variable `τ ∈ (0, π/2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonotonicityReport<R> {
    pub fold: u32,
    pub taus: Vec<R>,
    pub x: SignTable<R>,
    pub y: SignTable<R>,
    pub slope_ratio: SignTable<R>,
    /// Sample points where `2(1-α) sin((2-α)τ) G(τ,α)/Ŵ²` is not positive.
    pub derivative_sign_violations: usize,
}

impl<R: Real> MonotonicityReport<R> {
    pub fn tables(&self) -> [&SignTable<R>; 3] {
        [&self.x, &self.y, &self.slope_ratio]
    }

    pub fn passed(&self) -> bool {
        self.tables().iter().all(|t| t.is_strict()) && self.derivative_sign_violations == 0
    }
}

/// Samples `τ_i = (π/2)·i/(samples+1)` for `i = 1..=samples`.
pub fn monotonicity_check<R: Real>(fold: u32, samples: usize) -> Result<MonotonicityReport<R>> {
    if fold == 0 {
        return Err(Error::InvalidFoldOrder(fold));
    }
    if samples < MIN_MONOTONICITY_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "need at least {MIN_MONOTONICITY_SAMPLES} samples, got {samples}"
        )));
    }
    let curve = ProofCurveFunctions::<R>::for_fold(fold);
    let half_pi = R::FRAC_PI_2();
    let taus: Vec<R> = (1..=samples)
        .map(|i| half_pi * R::from_usize(i) / R::from_usize(samples + 1))
        .collect();
    let xs: Vec<R> = taus.iter().map(|&t| curve.x(t)).collect();
    let ys: Vec<R> = taus.iter().map(|&t| curve.y(t)).collect();
    let ratios: Vec<R> = taus.iter().map(|&t| curve.slope_ratio(t)).collect();

    let alpha = curve.alpha;
    let derivative_sign_violations = taus
        .iter()
        .filter(|&&t| {
            let w = curve.w_hat(t);
            let d = R::two() * (R::one() - alpha) * ((R::two() - alpha) * t).sin() * lemma_g(t, alpha) / (w * w);
            // NaN counts as a violation
            d.partial_cmp(&R::zero()) != Some(std::cmp::Ordering::Greater)
        })
        .count();

    Ok(MonotonicityReport {
        fold,
        x: SignTable::from_values("x", true, &xs),
        y: SignTable::from_values("y", true, &ys),
        slope_ratio: SignTable::from_values("(1+y)/x", false, &ratios),
        taus,
        derivative_sign_violations,
    })
}

/// Best grid cell for one objective.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridOptimum<R> {
    pub objective: Objective,
    pub value: R,
    pub at: Point<R>,
    /// Offset of the cell centre from the corner point in cell sides.
    pub offset_cells: (R, R),
    pub boundary_distance: R,
}

impl<R: Real> GridOptimum<R> {
    /// The cell is the corner's cell or one of its eight neighbours.
    pub fn within_one_cell(&self) -> bool {
        let limit = R::lit(1.5 * (1.0 + 1e-9));
        self.offset_cells.0.abs() <= limit && self.offset_cells.1.abs() <= limit
    }
}

/// Result of the grid scan over the bounding box of `U_T`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridExtrema<R> {
    pub fold: u32,
    pub resolution: usize,
    pub cell_size: R,
    pub bbox: (Point<R>, Point<R>),
    pub columns: usize,
    pub rows: usize,
    pub inside_cells: usize,
    /// Inside cell centres within one cell diagonal of the boundary.
    pub near_boundary: Vec<Point<R>>,
    /// Optima over every inside cell, indexed like [`Objective::ALL`].
    pub optima: [GridOptimum<R>; 3],
    /// Optima over inside cells away from the boundary.
    pub interior_optima: [Option<GridOptimum<R>>; 3],
    /// `2 × (max gradient norm near the corner) × cell diagonal`.
    pub value_bounds: [R; 3],
}

impl<R: Real> GridExtrema<R> {
    pub fn optimum(&self, objective: Objective) -> &GridOptimum<R> {
        &self.optima[objective as usize]
    }

    pub fn value_bound(&self, objective: Objective) -> R {
        self.value_bounds[objective as usize]
    }

    pub fn cell_diagonal(&self) -> R {
        self.cell_size * R::two().sqrt()
    }
}

fn better<R: Real>(objective: Objective, cand: (R, R), best: (R, R)) -> bool {
    // second component breaks ties: larger L2 for L1, larger L1 otherwise
    let (v, tie) = cand;
    let (bv, btie) = best;
    let improves = if objective.maximized() { v > bv } else { v < bv };
    improves || (v == bv && tie > btie)
}

fn tie_breaker<R: Real>(objective: Objective, a: R, b: R) -> R {
    match objective {
        Objective::L1 => R::one() + a + b,
        Objective::L2 | Objective::L3 => a,
    }
}

/// Even-odd crossings of the horizontal line `y` with the polygon, sorted.
fn scanline_crossings<R: Real>(vertices: &[Point<R>], y: R) -> Vec<R> {
    let n = vertices.len();
    let mut xs = Vec::new();
    let mut j = n - 1;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[j];
        if (a.y > y) != (b.y > y) {
            xs.push(a.x + (y - a.y) / (b.y - a.y) * (b.x - a.x));
        }
        j = i;
    }
    xs.sort_by(|p, q| p.partial_cmp(q).expect("finite crossings"));
    xs
}

/// Scans square cells of side `max(width, height)/resolution`, anchored at
/// the top-right corner of the boundary's bounding box, and records the
/// extrema of the objectives over cell centres inside the boundary.
pub fn grid_search_extrema<R: Real>(fold: u32, resolution: usize) -> Result<GridExtrema<R>> {
    if resolution < MIN_RESOLUTION {
        return Err(Error::InvalidArgument(format!(
            "resolution must be at least {MIN_RESOLUTION}, got {resolution}"
        )));
    }
    let boundary: DomainBoundary<R> = boundary_polyline(fold, GRID_BOUNDARY_SAMPLES)?;
    let corner = corner_point::<R>(fold)?;
    let (lo, hi) = boundary.bounding_box();
    let width = hi.x - lo.x;
    let height = hi.y - lo.y;
    let h = width.max(height) / R::from_usize(resolution);
    let columns = (width / h).ceil().to_f64_lossy() as usize;
    let rows = (height / h).ceil().to_f64_lossy() as usize;
    let half = R::lit(0.5);
    let diagonal = h * R::two().sqrt();

    let mut best: [Option<(Point<R>, R, R)>; 3] = [None; 3];
    let mut inside_points = Vec::new();
    for j in 0..rows {
        let y = hi.y - (R::from_usize(j) + half) * h;
        let crossings = scanline_crossings(boundary.vertices(), y);
        for i in 0..columns {
            let x = hi.x - (R::from_usize(i) + half) * h;
            let right = crossings.len() - crossings.partition_point(|&c| c <= x);
            if right % 2 == 0 {
                continue;
            }
            inside_points.push(Point::new(x, y));
            for objective in Objective::ALL {
                let Some(v) = objective.value(x, y) else { continue };
                let cand = (v, tie_breaker(objective, x, y));
                let slot = &mut best[objective as usize];
                if slot.is_none_or(|(_, bv, bt)| better(objective, cand, (bv, bt))) {
                    *slot = Some((Point::new(x, y), cand.0, cand.1));
                }
            }
        }
    }
    if inside_points.is_empty() {
        return Err(Error::InvalidArgument(format!("no cell centre inside U_{fold} at resolution {resolution}")));
    }

    let mut near_boundary = Vec::new();
    let mut interior_best: [Option<(Point<R>, R, R)>; 3] = [None; 3];
    for &p in &inside_points {
        if boundary.distance_to(p.x, p.y) <= diagonal {
            near_boundary.push(p);
            continue;
        }
        for objective in Objective::ALL {
            let Some(v) = objective.value(p.x, p.y) else { continue };
            let cand = (v, tie_breaker(objective, p.x, p.y));
            let slot = &mut interior_best[objective as usize];
            if slot.is_none_or(|(_, bv, bt)| better(objective, cand, (bv, bt))) {
                *slot = Some((p, cand.0, cand.1));
            }
        }
    }

    let to_optimum = |objective: Objective, (at, value, _): (Point<R>, R, R)| GridOptimum {
        objective,
        value,
        at,
        offset_cells: ((at.x - corner.a0) / h, (at.y - corner.b0) / h),
        boundary_distance: boundary.distance_to(at.x, at.y),
    };
    let optima = Objective::ALL.map(|o| to_optimum(o, best[o as usize].expect("inside cells exist")));
    let interior_optima = Objective::ALL.map(|o| interior_best[o as usize].map(|b| to_optimum(o, b)));

    let value_bounds = Objective::ALL.map(|o| {
        let steps = 4;
        let mut g = R::zero();
        for p in 0..=steps {
            for q in 0..=steps {
                let dx = h * R::from_i64(2 * p as i64 - steps as i64) / R::from_usize(steps) * R::two();
                let dy = h * R::from_i64(2 * q as i64 - steps as i64) / R::from_usize(steps) * R::two();
                g = g.max(o.gradient_norm(corner.a0 + dx, corner.b0 + dy));
            }
        }
        R::two() * g * diagonal
    });

    Ok(GridExtrema {
        fold,
        resolution,
        cell_size: h,
        bbox: (lo, hi),
        columns,
        rows,
        inside_cells: inside_points.len(),
        near_boundary,
        optima,
        interior_optima,
        value_bounds,
    })
}

/// Closed forms, grid oracle and monotonicity tables for one fold order.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtremalReport<R> {
    pub fold: u32,
    pub closed_form: ClosedFormExtrema<R>,
    pub oracle: GridExtrema<R>,
    pub monotonicity: MonotonicityReport<R>,
}

impl<R: Real> ExtremalReport<R> {
    pub fn build(fold: u32, resolution: usize, samples: usize) -> Result<Self> {
        Ok(Self {
            fold,
            closed_form: closed_form_extrema(fold)?,
            oracle: grid_search_extrema(fold, resolution)?,
            monotonicity: monotonicity_check(fold, samples)?,
        })
    }

    /// Grid extrema within their value bounds, arg points within one cell
    /// of the corner, and strict monotonicity along `Γ3+`.
    pub fn passed(&self) -> bool {
        Objective::ALL.iter().all(|&o| {
            let opt = self.oracle.optimum(o);
            opt.within_one_cell() && (opt.value - self.closed_form.value(o)).abs() <= self.oracle.value_bound(o)
        }) && self.monotonicity.passed()
    }

    /// `(quantity, closed_form, oracle)` rows.
    pub fn rows(&self) -> Vec<(String, R, R)> {
        let c = &self.closed_form;
        let mut rows = Vec::new();
        for o in Objective::ALL {
            let opt = self.oracle.optimum(o);
            let kind = if o.maximized() { "max" } else { "min" };
            rows.push((format!("{kind}_{}", o.name()), c.value(o), opt.value));
            rows.push((format!("arg{kind}_{}_a", o.name()), c.corner.x, opt.at.x));
            rows.push((format!("arg{kind}_{}_b", o.name()), c.corner.y, opt.at.y));
        }
        rows
    }

    /// CSV with header `quantity,closed_form,oracle,abs_diff`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["quantity", "closed_form", "oracle", "abs_diff"])?;
        for (name, closed, oracle) in self.rows() {
            w.write_record([name, fmt_num(closed), fmt_num(oracle), fmt_num((closed - oracle).abs())])?;
        }
        w.flush()?;
        Ok(())
    }
}
