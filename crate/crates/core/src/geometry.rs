//! Planar predicates on closed polylines: orientation, segment crossing,
//! distances and even-odd point containment.

use crate::scalar::Real;

/// A point of the coefficient plane or of an image curve.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point<R> {
    pub x: R,
    pub y: R,
}

impl<R: Real> Point<R> {
    pub fn new(x: R, y: R) -> Self {
        Self { x, y }
    }

    pub fn dist(self, other: Self) -> R {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Twice the signed area of the triangle `(a, b, c)`; positive when
/// counterclockwise.
#[inline]
pub fn orient<R: Real>(a: Point<R>, b: Point<R>, c: Point<R>) -> R {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

#[inline]
fn sign_with_tolerance<R: Real>(v: R, tol: R) -> i8 {
    if v > tol {
        1
    } else if v < -tol {
        -1
    } else {
        0
    }
}

#[inline]
fn on_segment_box<R: Real>(a: Point<R>, b: Point<R>, p: Point<R>, tol: R) -> bool {
    p.x >= a.x.min(b.x) - tol
        && p.x <= a.x.max(b.x) + tol
        && p.y >= a.y.min(b.y) - tol
        && p.y <= a.y.max(b.y) + tol
}

/// Whether the closed segments `p1p2` and `q1q2` cross or touch.
///
/// Orientation values within `tol` of zero count as collinear, so near-touching
/// configurations are reported as intersecting.
pub fn segments_intersect<R: Real>(p1: Point<R>, p2: Point<R>, q1: Point<R>, q2: Point<R>, tol: R) -> bool {
    let d1 = sign_with_tolerance(orient(q1, q2, p1), tol);
    let d2 = sign_with_tolerance(orient(q1, q2, p2), tol);
    let d3 = sign_with_tolerance(orient(p1, p2, q1), tol);
    let d4 = sign_with_tolerance(orient(p1, p2, q2), tol);

    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && on_segment_box(q1, q2, p1, tol))
        || (d2 == 0 && on_segment_box(q1, q2, p2, tol))
        || (d3 == 0 && on_segment_box(p1, p2, q1, tol))
        || (d4 == 0 && on_segment_box(p1, p2, q2, tol))
}

/// Euclidean distance from `p` to the segment `ab`.
pub fn point_segment_distance<R: Real>(p: Point<R>, a: Point<R>, b: Point<R>) -> R {
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let len2 = dx * dx + dy * dy;
    if len2 == R::zero() {
        return p.dist(a);
    }
    let t = (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).max(R::zero()).min(R::one());
    p.dist(Point::new(a.x + t * dx, a.y + t * dy))
}

/// Distance between two segments (zero if they intersect).
pub fn segment_distance<R: Real>(p1: Point<R>, p2: Point<R>, q1: Point<R>, q2: Point<R>, tol: R) -> R {
    if segments_intersect(p1, p2, q1, q2, tol) {
        return R::zero();
    }
    point_segment_distance(p1, q1, q2)
        .min(point_segment_distance(p2, q1, q2))
        .min(point_segment_distance(q1, p1, p2))
        .min(point_segment_distance(q2, p1, p2))
}

/// Signed area of a closed polygon given by its distinct vertices.
pub fn signed_area<R: Real>(vertices: &[Point<R>]) -> R {
    let n = vertices.len();
    let twice = (0..n).fold(R::zero(), |acc, i| {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        acc + a.x * b.y - b.x * a.y
    });
    twice / R::two()
}

/// Even-odd ray casting against the closed polygon `vertices`.
pub fn point_in_polygon<R: Real>(vertices: &[Point<R>], p: Point<R>) -> bool {
    let n = vertices.len();
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[j];
        if (a.y > p.y) != (b.y > p.y) {
            let x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if p.x < x_cross {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

/// Minimum distance from `p` to the closed polygon's edges.
pub fn distance_to_polygon<R: Real>(vertices: &[Point<R>], p: Point<R>) -> R {
    let n = vertices.len();
    (0..n).fold(R::infinity(), |best, i| {
        best.min(point_segment_distance(p, vertices[i], vertices[(i + 1) % n]))
    })
}

/// A pair of non-adjacent edges of a closed polygon that cross or touch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingPair {
    pub first: usize,
    pub second: usize,
}

#[inline]
fn adjacent(i: usize, j: usize, n: usize) -> bool {
    let d = i.abs_diff(j);
    d <= 1 || d == n - 1
}

/// First pair of non-adjacent crossing edges, by brute force.
///
/// Edge `i` joins `vertices[i]` to `vertices[(i+1) % n]`.
pub fn find_self_intersection<R: Real>(vertices: &[Point<R>], tol: R) -> Option<CrossingPair> {
    let n = vertices.len();
    if n < 4 {
        return None;
    }
    let boxes: Vec<_> = (0..n).map(|i| EdgeBox::new(vertices[i], vertices[(i + 1) % n])).collect();
    for i in 0..n {
        for j in (i + 2)..n {
            if adjacent(i, j, n) || boxes[i].gap2(&boxes[j]) > tol * tol {
                continue;
            }
            if segments_intersect(boxes[i].a, boxes[i].b, boxes[j].a, boxes[j].b, tol) {
                return Some(CrossingPair { first: i, second: j });
            }
        }
    }
    None
}

/// Result of a full pairwise scan over non-adjacent edges.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SelfProximity<R> {
    /// Minimum distance between non-adjacent edges; zero when some pair meets.
    pub min_distance: R,
    pub crossing: Option<CrossingPair>,
}

/// Minimum separation between non-adjacent edges, stopping at the first
/// crossing.
pub fn self_proximity<R: Real>(vertices: &[Point<R>], tol: R) -> SelfProximity<R> {
    let n = vertices.len();
    let mut best2 = R::infinity();
    if n < 4 {
        return SelfProximity { min_distance: best2, crossing: None };
    }
    let boxes: Vec<_> = (0..n).map(|i| EdgeBox::new(vertices[i], vertices[(i + 1) % n])).collect();
    for i in 0..n {
        for j in (i + 2)..n {
            if adjacent(i, j, n) {
                continue;
            }
            let gap2 = boxes[i].gap2(&boxes[j]);
            if gap2 >= best2 && gap2 > tol * tol {
                continue;
            }
            let (a, b) = (boxes[i].a, boxes[i].b);
            let (c, d) = (boxes[j].a, boxes[j].b);
            if segments_intersect(a, b, c, d, tol) {
                return SelfProximity {
                    min_distance: R::zero(),
                    crossing: Some(CrossingPair { first: i, second: j }),
                };
            }
            let dist = segment_distance(a, b, c, d, tol);
            best2 = best2.min(dist * dist);
        }
    }
    SelfProximity { min_distance: best2.sqrt(), crossing: None }
}

#[derive(Clone, Copy)]
struct EdgeBox<R> {
    a: Point<R>,
    b: Point<R>,
    lo: Point<R>,
    hi: Point<R>,
}

impl<R: Real> EdgeBox<R> {
    fn new(a: Point<R>, b: Point<R>) -> Self {
        Self {
            a,
            b,
            lo: Point::new(a.x.min(b.x), a.y.min(b.y)),
            hi: Point::new(a.x.max(b.x), a.y.max(b.y)),
        }
    }

    /// Squared distance between the two boxes (zero if they overlap).
    #[inline]
    fn gap2(&self, other: &Self) -> R {
        let zero = R::zero();
        let dx = (other.lo.x - self.hi.x).max(self.lo.x - other.hi.x).max(zero);
        let dy = (other.lo.y - self.hi.y).max(self.lo.y - other.hi.y).max(zero);
        dx * dx + dy * dy
    }
}
