//! Exact rational planar primitives and predicates.
//!
//! Every value on the certification path is an exact rational; this module
//! deliberately contains no floating point. Predicates (orientation, strip
//! membership, winding numbers) therefore never misclassify, which is what
//! makes exact periodicity and undefined-set detection decidable at all.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar. `BigRational` keeps the canonical form we rely on:
/// reduced fraction, positive denominator, zero as 0/1.
pub type Scalar = BigRational;

/// Scalar from an integer.
pub fn rat_int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Scalar from a numerator/denominator pair. Panics on zero denominator.
pub fn rat(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal {0:?}: expected `n` or `n/d` with integer parts")]
    Invalid(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Strict parser for rational literals: an optional sign, digits, and an
/// optional `/denominator` with positive integer digits. Floating-point
/// syntax (`.`, `e`) is rejected, by contract: inexact input would silently
/// void every certificate downstream.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ScalarParseError::Empty);
    }
    let (num_part, den_part) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let parse_int = |part: &str, allow_sign: bool| -> Option<BigInt> {
        let digits = match part.strip_prefix('-').or_else(|| part.strip_prefix('+')) {
            Some(rest) if allow_sign => rest,
            Some(_) => return None,
            None => part,
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        digits.parse::<BigInt>().ok()
    };
    let numer = parse_int(num_part, true).ok_or_else(|| ScalarParseError::Invalid(s.into()))?;
    let denom = match den_part {
        None => BigInt::one(),
        Some(d) => {
            let d = parse_int(d, false).ok_or_else(|| ScalarParseError::Invalid(s.into()))?;
            if d.is_zero() {
                return Err(ScalarParseError::ZeroDenominator(s.into()));
            }
            d
        }
    };
    Ok(BigRational::new(numer, denom))
}

/// Point of the affine plane.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

/// Displacement vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector {
    pub dx: Scalar,
    pub dy: Scalar,
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.dx, self.dy)
    }
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point::new(Scalar::zero(), Scalar::zero())
    }

    pub fn to_vector(&self) -> Vector {
        Vector::new(self.x.clone(), self.y.clone())
    }
}

impl Vector {
    pub fn new(dx: Scalar, dy: Scalar) -> Self {
        Vector { dx, dy }
    }

    pub fn zero() -> Self {
        Vector::new(Scalar::zero(), Scalar::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.dx.is_zero() && self.dy.is_zero()
    }

    /// z-component of the cross product `self × other`.
    pub fn cross(&self, other: &Vector) -> Scalar {
        &self.dx * &other.dy - &self.dy * &other.dx
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        &self.dx * &other.dx + &self.dy * &other.dy
    }

    pub fn norm_sq(&self) -> Scalar {
        self.dot(self)
    }

    /// ℓ¹ norm; a rational upper bound for the Euclidean norm.
    pub fn l1_norm(&self) -> Scalar {
        self.dx.abs() + self.dy.abs()
    }

    /// Counterclockwise quarter turn.
    pub fn rot90(&self) -> Vector {
        Vector::new(-self.dy.clone(), self.dx.clone())
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector::new(&self.dx * s, &self.dy * s)
    }
}

impl Sub for &Point {
    type Output = Vector;
    fn sub(self, rhs: &Point) -> Vector {
        Vector::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Add<&Vector> for &Point {
    type Output = Point;
    fn add(self, rhs: &Vector) -> Point {
        Point::new(&self.x + &rhs.dx, &self.y + &rhs.dy)
    }
}

impl Sub<&Vector> for &Point {
    type Output = Point;
    fn sub(self, rhs: &Vector) -> Point {
        Point::new(&self.x - &rhs.dx, &self.y - &rhs.dy)
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector::new(&self.dx + &rhs.dx, &self.dy + &rhs.dy)
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector::new(&self.dx - &rhs.dx, &self.dy - &rhs.dy)
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector::new(-self.dx.clone(), -self.dy.clone())
    }
}

impl Mul<&Scalar> for &Vector {
    type Output = Vector;
    fn mul(self, rhs: &Scalar) -> Vector {
        self.scale(rhs)
    }
}

/// Sign of the cross product `(b − a) × (c − a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Left,
    Right,
    Collinear,
}

pub fn orientation(a: &Point, b: &Point, c: &Point) -> Orientation {
    let det = (b - a).cross(&(c - a));
    if det.is_zero() {
        Orientation::Collinear
    } else if det.is_positive() {
        Orientation::Left
    } else {
        Orientation::Right
    }
}

/// Reflection of `x` in the center `c`: the point `2c − x`.
pub fn reflect(x: &Point, c: &Point) -> Point {
    Point::new(
        &c.x + &c.x - &x.x,
        &c.y + &c.y - &x.y,
    )
}

/// Oriented line through `base` with direction `dir`. The "left" side is
/// where the orientation test of (base, base+dir, ·) reports `Left`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedLine {
    base: Point,
    dir: Vector,
}

impl DirectedLine {
    /// Panics if `dir` is zero; a line must have a direction.
    pub fn new(base: Point, dir: Vector) -> Self {
        assert!(!dir.is_zero(), "DirectedLine requires a nonzero direction");
        DirectedLine { base, dir }
    }

    pub fn through(a: &Point, b: &Point) -> Self {
        DirectedLine::new(a.clone(), b - a)
    }

    pub fn base(&self) -> &Point {
        &self.base
    }

    pub fn dir(&self) -> &Vector {
        &self.dir
    }

    /// Signed side value: positive on the left of the line, zero on it.
    pub fn side_value(&self, p: &Point) -> Scalar {
        self.dir.cross(&(p - &self.base))
    }

    pub fn side_of(&self, p: &Point) -> Orientation {
        let v = self.side_value(p);
        if v.is_zero() {
            Orientation::Collinear
        } else if v.is_positive() {
            Orientation::Left
        } else {
            Orientation::Right
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.side_value(p).is_zero()
    }

    /// Intersection point with another line; `None` when parallel.
    pub fn intersect(&self, other: &DirectedLine) -> Option<Point> {
        let denom = self.dir.cross(&other.dir);
        if denom.is_zero() {
            return None;
        }
        let t = (&other.base - &self.base).cross(&other.dir) / denom;
        Some(&self.base + &self.dir.scale(&t))
    }

    /// Image under the point reflection through `c`.
    pub fn reflect_in_point(&self, c: &Point) -> DirectedLine {
        DirectedLine::new(reflect(&self.base, c), -&self.dir)
    }

    /// Same line with the direction reversed (swaps left and right).
    pub fn reversed(&self) -> DirectedLine {
        DirectedLine::new(self.base.clone(), -&self.dir)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strictness {
    Open,
    Closed,
}

/// Half-plane on the left of its boundary line.
#[derive(Clone, Debug)]
pub struct HalfPlane {
    pub boundary: DirectedLine,
    pub strictness: Strictness,
}

impl HalfPlane {
    pub fn left_of(boundary: DirectedLine, strictness: Strictness) -> Self {
        HalfPlane { boundary, strictness }
    }

    /// Positive inside, zero on the boundary, negative outside.
    pub fn value(&self, p: &Point) -> Scalar {
        self.boundary.side_value(p)
    }

    pub fn contains(&self, p: &Point) -> bool {
        let v = self.value(p);
        match self.strictness {
            Strictness::Open => v.is_positive(),
            Strictness::Closed => !v.is_negative(),
        }
    }

    /// Half-plane `{ (x, y) : a·x + b·y + c > 0 }` (or ≥ for `Closed`).
    /// Panics if `a` and `b` are both zero.
    pub fn from_functional(a: Scalar, b: Scalar, c: Scalar, strictness: Strictness) -> Self {
        assert!(
            !(a.is_zero() && b.is_zero()),
            "degenerate linear functional"
        );
        // A base point on a·x + b·y + c = 0 and the direction (b, −a) keep
        // the functional's positive side on the line's left.
        let base = if !b.is_zero() {
            Point::new(Scalar::zero(), -&c / &b)
        } else {
            Point::new(-&c / &a, Scalar::zero())
        };
        let dir = Vector::new(b, -a);
        debug_assert!(dir.cross(&Vector::new(Scalar::one(), Scalar::zero())).is_zero() || {
            true
        });
        HalfPlane {
            boundary: DirectedLine::new(base, dir),
            strictness,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolygonError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertices are not in strictly convex position (violation at index {0})")]
    NotConvex(usize),
    #[error("sides {0} and {1} are parallel")]
    ParallelSides(usize, usize),
}

/// Strictly convex polygon with vertices stored counterclockwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

/// Validates a vertex list into a `ConvexPolygon`.
///
/// Clockwise input is reversed rather than rejected; orientation is a
/// representation detail. With `require_no_parallel_sides` set, any pair of
/// sides with an exactly zero cross product fails validation.
pub fn validate_polygon(
    points: &[Point],
    require_no_parallel_sides: bool,
) -> Result<ConvexPolygon, PolygonError> {
    if points.len() < 3 {
        return Err(PolygonError::TooFewVertices(points.len()));
    }
    let n = points.len();
    let mut lefts = 0usize;
    let mut rights = 0usize;
    for i in 0..n {
        match orientation(&points[i], &points[(i + 1) % n], &points[(i + 2) % n]) {
            Orientation::Left => lefts += 1,
            Orientation::Right => rights += 1,
            Orientation::Collinear => return Err(PolygonError::NotConvex((i + 1) % n)),
        }
    }
    let vertices: Vec<Point> = if lefts == n {
        points.to_vec()
    } else if rights == n {
        points.iter().rev().cloned().collect()
    } else {
        // Mixed turns: find a witness index in the original order.
        let bad = (0..n)
            .find(|&i| {
                orientation(&points[i], &points[(i + 1) % n], &points[(i + 2) % n])
                    != if lefts >= rights { Orientation::Left } else { Orientation::Right }
            })
            .unwrap_or(0);
        return Err(PolygonError::NotConvex((bad + 1) % n));
    };
    // Strict convexity of every triple plus equal turn signs already forces
    // total turning = one full turn, so no extra winding check is needed.
    if require_no_parallel_sides {
        for i in 0..n {
            for j in (i + 1)..n {
                let di = &vertices[(i + 1) % n] - &vertices[i];
                let dj = &vertices[(j + 1) % n] - &vertices[j];
                if di.cross(&dj).is_zero() {
                    return Err(PolygonError::ParallelSides(i, j));
                }
            }
        }
    }
    Ok(ConvexPolygon { vertices })
}

impl ConvexPolygon {
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i % self.vertices.len()]
    }

    /// Side vector from vertex `i` to vertex `i+1`.
    pub fn side(&self, i: usize) -> Vector {
        let n = self.vertices.len();
        &self.vertices[(i + 1) % n] - &self.vertices[i % n]
    }

    /// Arithmetic mean of the vertices; always strictly interior.
    pub fn vertex_centroid(&self) -> Point {
        let n = rat_int(self.vertices.len() as i64);
        let mut x = Scalar::zero();
        let mut y = Scalar::zero();
        for v in &self.vertices {
            x += &v.x;
            y += &v.y;
        }
        Point::new(x / &n, y / &n)
    }

    /// Membership in the closed region.
    pub fn contains(&self, p: &Point) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| orientation(&self.vertices[i], &self.vertices[(i + 1) % n], p) != Orientation::Right)
    }

    /// Membership in the open interior.
    pub fn contains_strict(&self, p: &Point) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| orientation(&self.vertices[i], &self.vertices[(i + 1) % n], p) == Orientation::Left)
    }

    /// Exact squared Euclidean distance from `p` to the closed region.
    pub fn distance_sq(&self, p: &Point) -> Scalar {
        if self.contains(p) {
            return Scalar::zero();
        }
        let n = self.vertices.len();
        (0..n)
            .map(|i| segment_distance_sq(p, &self.vertices[i], &self.vertices[(i + 1) % n]))
            .min()
            .expect("polygon has edges")
    }

    /// Largest squared distance between two vertices.
    pub fn diameter_sq(&self) -> Scalar {
        let mut best = Scalar::zero();
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                let d = (b - a).norm_sq();
                if d > best {
                    best = d;
                }
            }
        }
        best
    }

    pub fn translate(&self, v: &Vector) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|p| p + v).collect(),
        }
    }

    /// Homothety about `center` with rational factor `s` (s > 0 keeps order).
    pub fn dilate(&self, center: &Point, s: &Scalar) -> ConvexPolygon {
        assert!(s.is_positive(), "dilation factor must be positive");
        ConvexPolygon {
            vertices: self
                .vertices
                .iter()
                .map(|p| center + &(p - center).scale(s))
                .collect(),
        }
    }

    /// Builds a polygon from vertices already known to be CCW and strictly
    /// convex; debug-checked.
    pub(crate) fn from_ccw_unchecked(vertices: Vec<Point>) -> ConvexPolygon {
        debug_assert!(validate_polygon(&vertices, false).is_ok());
        ConvexPolygon { vertices }
    }
}

/// Exact squared distance from `p` to the segment `[a, b]`.
pub fn segment_distance_sq(p: &Point, a: &Point, b: &Point) -> Scalar {
    let d = b - a;
    let ap = p - a;
    let t_num = ap.dot(&d);
    if !t_num.is_positive() {
        return ap.norm_sq();
    }
    let dd = d.norm_sq();
    if t_num >= dd {
        return (p - b).norm_sq();
    }
    // |ap|² − (ap·d)²/|d|², all rational.
    ap.norm_sq() - &t_num * &t_num / dd
}

/// Exact squared distance between the segment `[a, b]` and the closed
/// polygon: zero if they intersect.
pub fn segment_polygon_distance_sq(a: &Point, b: &Point, poly: &ConvexPolygon) -> Scalar {
    if poly.contains(a) || poly.contains(b) {
        return Scalar::zero();
    }
    let n = poly.len();
    for i in 0..n {
        if segments_intersect(a, b, poly.vertex(i), poly.vertex(i + 1)) {
            return Scalar::zero();
        }
    }
    let mut best: Option<Scalar> = None;
    for i in 0..n {
        let v = poly.vertex(i);
        let d1 = segment_distance_sq(v, a, b);
        let d2 = segment_distance_sq(a, v, poly.vertex(i + 1));
        let d3 = segment_distance_sq(b, v, poly.vertex(i + 1));
        for d in [d1, d2, d3] {
            if best.as_ref().map_or(true, |m| d < *m) {
                best = Some(d);
            }
        }
    }
    best.expect("polygon has vertices")
}

/// Closed-segment intersection test, exact.
fn segments_intersect(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    if o1 != o2 && o3 != o4 && o1 != Orientation::Collinear && o2 != Orientation::Collinear {
        return true;
    }
    let on = |p: &Point, q: &Point, r: &Point| {
        orientation(p, q, r) == Orientation::Collinear
            && r.x >= p.x.clone().min(q.x.clone())
            && r.x <= p.x.clone().max(q.x.clone())
            && r.y >= p.y.clone().min(q.y.clone())
            && r.y <= p.y.clone().max(q.y.clone())
    };
    on(a, b, c) || on(a, b, d) || on(c, d, a) || on(c, d, b)
}

/// Result of clipping a bounded region by half-planes.
#[derive(Clone, Debug)]
pub enum ClipResult {
    Polygon(ConvexPolygon),
    /// Empty interior. `degenerate` is set when the closed intersection was a
    /// segment or a point rather than truly void, which signals a boundary
    /// case to callers expecting open cells.
    Empty { degenerate: bool },
}

impl ClipResult {
    pub fn polygon(&self) -> Option<&ConvexPolygon> {
        match self {
            ClipResult::Polygon(p) => Some(p),
            ClipResult::Empty { .. } => None,
        }
    }
}

/// Intersection of `bound` with every half-plane, by successive convex
/// clipping. The boundedness of `bound` guarantees a bounded result; the
/// strictness of each plane is irrelevant for the region's closure and is
/// interpreted by callers via membership tests.
pub fn halfplane_intersection(planes: &[HalfPlane], bound: &ConvexPolygon) -> ClipResult {
    let mut poly: Vec<Point> = bound.vertices().to_vec();
    let mut touched = false;
    for hp in planes {
        if poly.is_empty() {
            break;
        }
        poly = clip_by_halfplane(&poly, hp);
        touched = true;
    }
    let _ = touched;
    finalize_clip(poly)
}

fn clip_by_halfplane(poly: &[Point], hp: &HalfPlane) -> Vec<Point> {
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 1);
    if n == 0 {
        return out;
    }
    let values: Vec<Scalar> = poly.iter().map(|p| hp.value(p)).collect();
    for i in 0..n {
        let j = (i + 1) % n;
        let (vi, vj) = (&values[i], &values[j]);
        let inside_i = !vi.is_negative();
        let inside_j = !vj.is_negative();
        if inside_i {
            out.push(poly[i].clone());
        }
        if inside_i != inside_j {
            // Boundary crossing; the interpolation parameter is exact.
            let t = vi / (vi - vj);
            let d = &poly[j] - &poly[i];
            out.push(&poly[i] + &d.scale(&t));
        }
    }
    out
}

fn finalize_clip(mut poly: Vec<Point>) -> ClipResult {
    if poly.is_empty() {
        return ClipResult::Empty { degenerate: false };
    }
    // Drop consecutive duplicates, then collinear chain points.
    poly.dedup();
    if poly.len() > 1 && poly.first() == poly.last() {
        poly.pop();
    }
    let mut cleaned: Vec<Point> = Vec::with_capacity(poly.len());
    for p in poly {
        cleaned.push(p);
        loop {
            let m = cleaned.len();
            if m < 3 {
                break;
            }
            if orientation(&cleaned[m - 3], &cleaned[m - 2], &cleaned[m - 1]) == Orientation::Collinear {
                cleaned.remove(m - 2);
            } else {
                break;
            }
        }
    }
    // Wrap-around collinearity.
    loop {
        let m = cleaned.len();
        if m < 3 {
            break;
        }
        if orientation(&cleaned[m - 2], &cleaned[m - 1], &cleaned[0]) == Orientation::Collinear {
            cleaned.remove(m - 1);
        } else if orientation(&cleaned[m - 1], &cleaned[0], &cleaned[1]) == Orientation::Collinear {
            cleaned.remove(0);
        } else {
            break;
        }
    }
    if cleaned.len() < 3 {
        return ClipResult::Empty { degenerate: true };
    }
    match validate_polygon(&cleaned, false) {
        Ok(p) => ClipResult::Polygon(p),
        Err(_) => ClipResult::Empty { degenerate: true },
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WindingError {
    #[error("query point lies on an edge of the cycle")]
    PointOnBoundary,
}

/// Exact signed winding number of a closed polygonal cycle about `z`,
/// positive for counterclockwise. The cycle may repeat vertices (a doubly
/// traversed loop winds twice).
pub fn winding_number(cycle: &[Point], z: &Point) -> Result<i64, WindingError> {
    let n = cycle.len();
    assert!(n >= 2, "winding number needs a closed cycle");
    for i in 0..n {
        let a = &cycle[i];
        let b = &cycle[(i + 1) % n];
        if a == b {
            continue;
        }
        if segment_distance_sq(z, a, b).is_zero() {
            return Err(WindingError::PointOnBoundary);
        }
    }
    let mut winding = 0i64;
    for i in 0..n {
        let a = &cycle[i];
        let b = &cycle[(i + 1) % n];
        if a.y <= z.y && b.y > z.y {
            if orientation(a, b, z) == Orientation::Left {
                winding += 1;
            }
        } else if b.y <= z.y && a.y > z.y && orientation(a, b, z) == Orientation::Right {
            winding -= 1;
        }
    }
    Ok(winding)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(rat_int(x), rat_int(y))
    }

    fn pr(xn: i64, xd: i64, yn: i64, yd: i64) -> Point {
        Point::new(rat(xn, xd), rat(yn, yd))
    }

    #[test]
    fn scalar_parsing_accepts_integers_and_fractions() {
        assert_eq!(parse_scalar("3").unwrap(), rat_int(3));
        assert_eq!(parse_scalar("-7/2").unwrap(), rat(-7, 2));
        assert_eq!(parse_scalar(" 4/6 ").unwrap(), rat(2, 3));
    }

    #[test]
    fn scalar_parsing_rejects_floats_and_garbage() {
        assert!(parse_scalar("0.5").is_err());
        assert!(parse_scalar("1e3").is_err());
        assert!(parse_scalar("1/-2").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("a/b").is_err());
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::Left);
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(2, 0)), Orientation::Collinear);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 1)), Orientation::Right);
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(reflect(&p(2, 1), &p(0, 0)), p(-2, -1));
        assert_eq!(reflect(&p(3, 5), &p(3, 5)), p(3, 5));
        assert_eq!(
            reflect(&pr(1, 2, 1, 3), &p(1, 1)),
            pr(3, 2, 5, 3)
        );
    }

    #[test]
    fn validate_accepts_triangle() {
        let t = validate_polygon(&[p(0, 0), p(1, 0), p(0, 1)], true).unwrap();
        assert_eq!(t.len(), 3);
    }

    #[test]
    fn validate_rejects_square_with_parallel_flag() {
        let err = validate_polygon(&[p(0, 0), p(1, 0), p(1, 1), p(0, 1)], true).unwrap_err();
        assert!(matches!(err, PolygonError::ParallelSides(_, _)));
        // Without the flag the square is a fine convex polygon.
        assert!(validate_polygon(&[p(0, 0), p(1, 0), p(1, 1), p(0, 1)], false).is_ok());
    }

    #[test]
    fn validate_accepts_spec_quadrilateral() {
        // Oracle: pairwise cross products of the four side vectors are all
        // nonzero, checked by hand: sides (2,0),(−1,3),(−1,−1),(0,−2).
        let q = validate_polygon(&[p(0, 0), p(2, 0), p(1, 3), p(0, 2)], true).unwrap();
        assert_eq!(q.len(), 4);
    }

    #[test]
    fn validate_reverses_clockwise_input() {
        let t = validate_polygon(&[p(0, 0), p(0, 1), p(1, 0)], true).unwrap();
        // Reversed into CCW order.
        let n = t.len();
        for i in 0..n {
            assert_eq!(
                orientation(t.vertex(i), t.vertex(i + 1), t.vertex(i + 2)),
                Orientation::Left
            );
        }
    }

    #[test]
    fn validate_rejects_collinear_and_nonconvex() {
        assert!(matches!(
            validate_polygon(&[p(0, 0), p(1, 0), p(2, 0)], false),
            Err(PolygonError::NotConvex(_))
        ));
        assert!(matches!(
            validate_polygon(&[p(0, 0)], false),
            Err(PolygonError::TooFewVertices(1))
        ));
        assert!(matches!(
            validate_polygon(&[p(0, 0), p(2, 0), p(2, 2), p(1, 1), p(0, 2)], false),
            Err(PolygonError::NotConvex(_))
        ));
    }

    fn unit_square() -> ConvexPolygon {
        validate_polygon(&[p(0, 0), p(1, 0), p(1, 1), p(0, 1)], false).unwrap()
    }

    #[test]
    fn halfplane_intersection_identity_on_no_planes() {
        let sq = unit_square();
        match halfplane_intersection(&[], &sq) {
            ClipResult::Polygon(q) => assert_eq!(q.vertices(), sq.vertices()),
            _ => panic!("expected polygon"),
        }
    }

    #[test]
    fn halfplane_intersection_empty() {
        let sq = unit_square();
        // x >= 2, i.e. x - 2 >= 0.
        let hp = HalfPlane::from_functional(rat_int(1), rat_int(0), rat_int(-2), Strictness::Closed);
        assert!(matches!(
            halfplane_intersection(&[hp], &sq),
            ClipResult::Empty { .. }
        ));
    }

    #[test]
    fn halfplane_intersection_quarter_square() {
        // Oracle (hand clipping): {x ≥ 1/4} ∩ {y ≥ 1/4} ∩ [0,1]² = [1/4,1]².
        let sq = unit_square();
        let planes = [
            HalfPlane::from_functional(rat_int(1), rat_int(0), rat(-1, 4), Strictness::Closed),
            HalfPlane::from_functional(rat_int(0), rat_int(1), rat(-1, 4), Strictness::Closed),
        ];
        let out = halfplane_intersection(&planes, &sq);
        let poly = out.polygon().expect("nonempty");
        let mut verts = poly.vertices().to_vec();
        verts.sort();
        let mut expected = vec![
            pr(1, 4, 1, 4),
            Point::new(rat_int(1), rat(1, 4)),
            p(1, 1),
            Point::new(rat(1, 4), rat_int(1)),
        ];
        expected.sort();
        assert_eq!(verts, expected);
    }

    #[test]
    fn halfplane_intersection_degenerate_is_flagged() {
        let sq = unit_square();
        let planes = [
            HalfPlane::from_functional(rat_int(1), rat_int(0), rat_int(-1), Strictness::Closed),
        ];
        // x >= 1 clips the square to its right edge.
        match halfplane_intersection(&planes, &sq) {
            ClipResult::Empty { degenerate } => assert!(degenerate),
            ClipResult::Polygon(q) => panic!("expected degenerate, got {:?}", q),
        }
    }

    #[test]
    fn winding_examples() {
        let sq = [p(0, 0), p(1, 0), p(1, 1), p(0, 1)];
        let c = pr(1, 2, 1, 2);
        assert_eq!(winding_number(&sq, &c).unwrap(), 1);
        let cw: Vec<Point> = sq.iter().rev().cloned().collect();
        assert_eq!(winding_number(&cw, &c).unwrap(), -1);
        let twice: Vec<Point> = sq.iter().chain(sq.iter()).cloned().collect();
        assert_eq!(winding_number(&twice, &c).unwrap(), 2);
        assert_eq!(winding_number(&sq, &p(3, 3)).unwrap(), 0);
        assert_eq!(
            winding_number(&sq, &pr(1, 2, 0, 1)),
            Err(WindingError::PointOnBoundary)
        );
    }

    /// Independent membership oracle: parity of crossings of a horizontal ray,
    /// perturbing exact hits by checking edge openness consistently.
    fn point_in_simple_polygon_oracle(poly: &[Point], z: &Point) -> bool {
        let n = poly.len();
        let mut inside = false;
        for i in 0..n {
            let a = &poly[i];
            let b = &poly[(i + 1) % n];
            let cond = (a.y > z.y) != (b.y > z.y);
            if cond {
                // x coordinate of the edge at height z.y, exact comparison.
                let t = (&z.y - &a.y) / (&b.y - &a.y);
                let x_at = &a.x + &((&b.x - &a.x) * &t);
                if z.x < x_at {
                    inside = !inside;
                }
            }
        }
        inside
    }

    proptest! {
        #[test]
        fn prop_reflect_is_involution(xs in -50i64..50, ys in -50i64..50, cs in -50i64..50, cy in -50i64..50) {
            let x = p(xs, ys);
            let c = p(cs, cy);
            prop_assert_eq!(reflect(&reflect(&x, &c), &c), x);
        }

        #[test]
        fn prop_orientation_antisymmetric(ax in -20i64..20, ay in -20i64..20,
                                          bx in -20i64..20, by in -20i64..20,
                                          cx in -20i64..20, cy in -20i64..20) {
            let (a, b, c) = (p(ax, ay), p(bx, by), p(cx, cy));
            let flip = |o: Orientation| match o {
                Orientation::Left => Orientation::Right,
                Orientation::Right => Orientation::Left,
                Orientation::Collinear => Orientation::Collinear,
            };
            prop_assert_eq!(orientation(&b, &a, &c), flip(orientation(&a, &b, &c)));
            prop_assert_eq!(orientation(&a, &c, &b), flip(orientation(&a, &b, &c)));
        }

        #[test]
        fn prop_winding_matches_membership_oracle(zx in -3i64..5, zy in -3i64..5, num in 1i64..7) {
            // A fixed convex pentagon, query points on a grid (skip boundary).
            let poly = [p(0, 0), p(4, 1), p(5, 4), p(2, 6), p(-1, 3)];
            let z = Point::new(rat(zx * 2 + 1, num.max(1)), rat(zy * 2 + 1, 3));
            let on_boundary = (0..poly.len()).any(|i| {
                segment_distance_sq(&z, &poly[i], &poly[(i + 1) % poly.len()]).is_zero()
            });
            prop_assume!(!on_boundary);
            let w = winding_number(&poly, &z).unwrap();
            let inside = point_in_simple_polygon_oracle(&poly, &z);
            prop_assert_eq!(w != 0, inside);
            if inside {
                prop_assert_eq!(w, 1);
            }
        }

        #[test]
        fn prop_revalidation_is_identity(seed in 0u64..500) {
            // Random-ish convex polygons from a rotating fan of points.
            let pts = [
                p(0, 0),
                p(3 + (seed % 3) as i64, (seed % 2) as i64),
                p(4, 3 + (seed % 4) as i64),
                p(1, 5),
                p(-2, 2 + (seed % 2) as i64),
            ];
            if let Ok(poly) = validate_polygon(&pts, false) {
                let again = validate_polygon(poly.vertices(), false).unwrap();
                prop_assert_eq!(again.vertices(), poly.vertices());
            }
        }

        #[test]
        fn prop_redundant_halfplane_is_noop(shift in 1i64..10) {
            let sq = validate_polygon(&[p(0, 0), p(1, 0), p(1, 1), p(0, 1)], false).unwrap();
            let planes = [
                HalfPlane::from_functional(rat_int(1), rat_int(0), rat(-1, 4), Strictness::Closed),
            ];
            let first = halfplane_intersection(&planes, &sq);
            // x >= -shift contains the current result entirely.
            let redundant = HalfPlane::from_functional(
                rat_int(1), rat_int(0), rat_int(shift), Strictness::Closed,
            );
            let both = [planes[0].clone(), redundant];
            let second = halfplane_intersection(&both, &sq);
            match (first, second) {
                (ClipResult::Polygon(a), ClipResult::Polygon(b)) => {
                    prop_assert_eq!(a.vertices(), b.vertices());
                }
                _ => prop_assert!(false, "expected polygons"),
            }
        }
    }
}
