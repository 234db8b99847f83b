//! Exact geometric primitives: points, directed lines, wedges, and
//! polygon validation.
//!
//! Everything downstream reduces to sign-of-cross-product tests on exact
//! rational coordinates, so no predicate here can disagree with another by
//! rounding. The wedge machinery works in a skewed coordinate frame
//! ([`SkewFrame`]) in which every wedge of a given type is an axis-aligned
//! upper-right quadrant.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::rational::{rat_i64, ratio, Rat};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        Point::new(rat_i64(x), rat_i64(y))
    }

    pub fn from_ratio(x: (i64, i64), y: (i64, i64)) -> Self {
        Point::new(ratio(x.0, x.1), ratio(y.0, y.1))
    }

    /// Vector from `other` to `self`.
    pub fn sub(&self, other: &Point) -> Vec2 {
        Vec2 {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        }
    }

    pub fn add(&self, v: &Vec2) -> Point {
        Point {
            x: &self.x + &v.x,
            y: &self.y + &v.y,
        }
    }

    /// Midpoint of `self` and `other`.
    pub fn midpoint(&self, other: &Point) -> Point {
        let half = ratio(1, 2);
        Point {
            x: (&self.x + &other.x) * &half,
            y: (&self.y + &other.y) * &half,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vec2 {
    pub x: Rat,
    pub y: Rat,
}

impl Vec2 {
    pub fn new(x: Rat, y: Rat) -> Self {
        Vec2 { x, y }
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        Vec2::new(rat_i64(x), rat_i64(y))
    }

    pub fn cross(&self, other: &Vec2) -> Rat {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Vec2) -> Rat {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn neg(&self) -> Vec2 {
        Vec2 {
            x: -&self.x,
            y: -&self.y,
        }
    }

    pub fn scale(&self, s: &Rat) -> Vec2 {
        Vec2 {
            x: &self.x * s,
            y: &self.y * s,
        }
    }

    /// Squared Euclidean length, exact.
    pub fn norm2(&self) -> Rat {
        self.dot(self)
    }
}

/// Sign of the cross product, as a plain ordering against zero.
pub fn cross_sign(a: &Vec2, b: &Vec2) -> Ordering {
    (&a.x * &b.y).cmp(&(&a.y * &b.x))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("polygon must have an even number of vertices, got {0}")]
    OddVertexCount(usize),
    #[error("polygon is not strictly convex")]
    NotConvex,
    #[error("polygon is not centrally symmetric")]
    NotCentrallySymmetric,
    #[error("point set violates general position ({0} violating pairs)")]
    GeneralPosition(usize),
    #[error("could not resolve degeneracies by perturbation")]
    PerturbationFailed,
}

/// A centrally symmetric convex polygon: 2n vertices q_0..q_{2n-1} in
/// counterclockwise order with q_{i+n} antipodal to q_i about the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricPolygon {
    vertices: Vec<Point>,
    center: Point,
}

impl SymmetricPolygon {
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    /// Total vertex count 2n.
    pub fn side_count(&self) -> usize {
        self.vertices.len()
    }

    /// Half the vertex count: antipodal indices differ by n.
    pub fn half_count(&self) -> usize {
        self.vertices.len() / 2
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i % self.vertices.len()]
    }

    /// Edge direction q_i -> q_{i+1}.
    pub fn edge_dir(&self, i: usize) -> Vec2 {
        let m = self.vertices.len();
        self.vertices[(i + 1) % m].sub(&self.vertices[i % m])
    }

    /// Boundary ray directions of an i-wedge: toward q_{i-1} and toward
    /// q_{i+1}, both emanating from the apex.
    pub fn wedge_dirs(&self, i: usize) -> (Vec2, Vec2) {
        let m = self.vertices.len();
        let prev = self.vertices[(i + m - 1) % m].sub(&self.vertices[i % m]);
        let next = self.vertices[(i + 1) % m].sub(&self.vertices[i % m]);
        (prev, next)
    }

    /// Axis-aligned bounding box as (min, max) corners.
    pub fn bbox(&self) -> (Point, Point) {
        let mut min = self.vertices[0].clone();
        let mut max = self.vertices[0].clone();
        for p in &self.vertices[1..] {
            if p.x < min.x {
                min.x = p.x.clone();
            }
            if p.y < min.y {
                min.y = p.y.clone();
            }
            if p.x > max.x {
                max.x = p.x.clone();
            }
            if p.y > max.y {
                max.y = p.y.clone();
            }
        }
        (min, max)
    }

    /// Closed containment of `p` in the translate of this polygon whose
    /// center sits at `c`.
    pub fn translate_contains(&self, c: &Point, p: &Point) -> bool {
        let shift = p.sub(c);
        // Test against the polygon in its own frame: p - c + center.
        let q = self.center.add(&shift);
        let m = self.vertices.len();
        for i in 0..m {
            let e = self.edge_dir(i);
            let rel = q.sub(&self.vertices[i]);
            if cross_sign(&e, &rel) == Ordering::Less {
                return false;
            }
        }
        true
    }
}

/// Validates a vertex cycle as a centrally symmetric convex polygon.
///
/// Clockwise input is reversed silently; orientation is a representation
/// artifact, not an input property.
pub fn validate_polygon(vertices: &[Point]) -> Result<SymmetricPolygon, GeomError> {
    if vertices.len() % 2 != 0 {
        return Err(GeomError::OddVertexCount(vertices.len()));
    }
    if vertices.len() < 4 {
        return Err(GeomError::NotConvex);
    }
    let mut verts: Vec<Point> = vertices.to_vec();

    // Signed area (shoelace, doubled). Negative means clockwise input.
    let mut area2 = Rat::zero();
    for i in 0..verts.len() {
        let a = &verts[i];
        let b = &verts[(i + 1) % verts.len()];
        area2 += &a.x * &b.y - &a.y * &b.x;
    }
    if area2.is_zero() {
        return Err(GeomError::NotConvex);
    }
    if area2.is_negative() {
        verts.reverse();
    }

    let m = verts.len();
    // Strict left turns everywhere.
    for i in 0..m {
        let e0 = verts[(i + 1) % m].sub(&verts[i]);
        let e1 = verts[(i + 2) % m].sub(&verts[(i + 1) % m]);
        if cross_sign(&e0, &e1) != Ordering::Greater {
            return Err(GeomError::NotConvex);
        }
    }
    // Edge directions must make exactly one full turn; all-left-turn star
    // polygons (winding > 1) fail this angular monotonicity check.
    let dirs: Vec<Vec2> = (0..m)
        .map(|i| verts[(i + 1) % m].sub(&verts[i]))
        .collect();
    for w in dirs.windows(2) {
        if angle_cmp(&dirs[0], &w[0], &w[1]) != Ordering::Less {
            return Err(GeomError::NotConvex);
        }
    }

    let n = m / 2;
    let center = verts[0].midpoint(&verts[n]);
    let two = rat_i64(2);
    for i in 0..n {
        let sx = &verts[i].x + &verts[i + n].x;
        let sy = &verts[i].y + &verts[i + n].y;
        if sx != &center.x * &two || sy != &center.y * &two {
            return Err(GeomError::NotCentrallySymmetric);
        }
    }
    Ok(SymmetricPolygon {
        vertices: verts,
        center,
    })
}

/// Compares the counterclockwise angles of `a` and `b` measured from
/// reference direction `origin`, each in [0, 2pi).
fn angle_cmp(origin: &Vec2, a: &Vec2, b: &Vec2) -> Ordering {
    let class = |v: &Vec2| -> u8 {
        match cross_sign(origin, v) {
            Ordering::Greater => 1,
            Ordering::Less => 3,
            Ordering::Equal => {
                if origin.dot(v).is_positive() {
                    0
                } else {
                    2
                }
            }
        }
    };
    let (ca, cb) = (class(a), class(b));
    if ca != cb {
        return ca.cmp(&cb);
    }
    match cross_sign(a, b) {
        Ordering::Greater => Ordering::Less,
        Ordering::Less => Ordering::Greater,
        Ordering::Equal => Ordering::Equal,
    }
}

/// An oriented line through `anchor` with direction `dir`; "left" is the
/// side where the cross product with the direction is positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedLine {
    pub anchor: Point,
    pub dir: Vec2,
}

impl DirectedLine {
    pub fn new(anchor: Point, dir: Vec2) -> Self {
        assert!(!dir.is_zero(), "directed line needs a nonzero direction");
        DirectedLine { anchor, dir }
    }

    /// Side of `p`: Greater = strictly left, Equal = on the line.
    pub fn side(&self, p: &Point) -> Ordering {
        cross_sign(&self.dir, &p.sub(&self.anchor))
    }

    pub fn strictly_left(&self, p: &Point) -> bool {
        self.side(p) == Ordering::Greater
    }

    pub fn weakly_left(&self, p: &Point) -> bool {
        self.side(p) != Ordering::Less
    }

    /// Intersection with another line, `None` if parallel.
    pub fn intersect(&self, other: &DirectedLine) -> Option<Point> {
        let denom = self.dir.cross(&other.dir);
        if denom.is_zero() {
            return None;
        }
        let t = other.anchor.sub(&self.anchor).cross(&other.dir) / denom;
        Some(self.anchor.add(&self.dir.scale(&t)))
    }
}

/// Number of points strictly left (`closed = false`) or weakly left
/// (`closed = true`) of the line.
pub fn count_left(line: &DirectedLine, points: &[Point], closed: bool) -> usize {
    points
        .iter()
        .filter(|p| {
            if closed {
                line.weakly_left(p)
            } else {
                line.strictly_left(p)
            }
        })
        .count()
}

/// The closed i-wedge with a given apex: all points of the form
/// apex + s*(q_{i-1}-q_i) + t*(q_{i+1}-q_i) with s, t >= 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wedge {
    pub wedge_type: usize,
    pub apex: Point,
}

impl Wedge {
    pub fn new(wedge_type: usize, apex: Point) -> Self {
        Wedge { wedge_type, apex }
    }
}

/// Closed containment of `p` in the wedge (boundary rays included).
pub fn wedge_contains(w: &Wedge, q: &SymmetricPolygon, p: &Point) -> bool {
    let (d_a, d_b) = q.wedge_dirs(w.wedge_type);
    let rel = p.sub(&w.apex);
    cross_sign(&d_b, &rel) != Ordering::Less && cross_sign(&d_a, &rel) != Ordering::Greater
}

/// Count of `points` inside the closed wedge.
pub fn wedge_count(w: &Wedge, q: &SymmetricPolygon, points: &[Point]) -> usize {
    points.iter().filter(|p| wedge_contains(w, q, p)).count()
}

/// Skewed coordinates for one wedge type: two linear functionals (u, v)
/// such that p lies in the i-wedge at apex x iff u(p) >= u(x) and
/// v(p) >= v(x). Wedges become upper-right quadrants, and level curves
/// become classic staircases.
#[derive(Debug, Clone)]
pub struct SkewFrame {
    pub wedge_type: usize,
    d_a: Vec2,
    d_b: Vec2,
    det: Rat,
}

impl SkewFrame {
    pub fn new(q: &SymmetricPolygon, wedge_type: usize) -> Self {
        let (d_a, d_b) = q.wedge_dirs(wedge_type);
        // Intentionally matches the 2x2 system in `point_at`.
        let det = &d_b.y * &d_a.x - &d_b.x * &d_a.y;
        assert!(!det.is_zero(), "adjacent polygon edges cannot be parallel");
        SkewFrame {
            wedge_type,
            d_a,
            d_b,
            det,
        }
    }

    pub fn u(&self, p: &Point) -> Rat {
        &self.d_b.x * &p.y - &self.d_b.y * &p.x
    }

    pub fn v(&self, p: &Point) -> Rat {
        &self.d_a.y * &p.x - &self.d_a.x * &p.y
    }

    pub fn uv(&self, p: &Point) -> (Rat, Rat) {
        (self.u(p), self.v(p))
    }

    /// World point with the given skew coordinates (inverse of `uv`).
    pub fn point_at(&self, u: &Rat, v: &Rat) -> Point {
        let x = (-(&self.d_a.x * u) - &self.d_b.x * v) / &self.det;
        let y = (-(&self.d_a.y * u) - &self.d_b.y * v) / &self.det;
        Point::new(x, y)
    }

    /// Direction of increasing u with v constant (parallel to the edge
    /// toward q_{i-1}).
    pub fn dir_u(&self) -> &Vec2 {
        &self.d_a
    }

    /// Direction of increasing v with u constant (parallel to the edge
    /// toward q_{i+1}).
    pub fn dir_v(&self) -> &Vec2 {
        &self.d_b
    }
}

/// Pairs of point indices violating general position with respect to `q`:
/// duplicates, and pairs whose difference is parallel to a polygon edge.
/// Sorted, deduplicated; empty means general position holds.
pub fn general_position_check(points: &[Point], q: &SymmetricPolygon) -> Vec<(usize, usize)> {
    use std::collections::BTreeSet;
    let mut bad: BTreeSet<(usize, usize)> = BTreeSet::new();

    // Duplicates: sort indices by coordinates, scan equal neighbors.
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].cmp(&points[b]));
    for w in order.windows(2) {
        if points[w[0]] == points[w[1]] {
            bad.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
    }

    // Edge-parallel pairs: p - q is parallel to edge direction e exactly
    // when cross(e, p) == cross(e, q), so sort by that key per direction.
    let n = q.half_count();
    for i in 0..n {
        let e = q.edge_dir(i);
        let mut keyed: Vec<(Rat, usize)> = points
            .iter()
            .enumerate()
            .map(|(idx, p)| (e.cross(&Vec2::new(p.x.clone(), p.y.clone())), idx))
            .collect();
        keyed.sort();
        let mut start = 0;
        while start < keyed.len() {
            let mut end = start + 1;
            while end < keyed.len() && keyed[end].0 == keyed[start].0 {
                end += 1;
            }
            for a in start..end {
                for b in (a + 1)..end {
                    let (ia, ib) = (keyed[a].1, keyed[b].1);
                    bad.insert((ia.min(ib), ia.max(ib)));
                }
            }
            start = end;
        }
    }
    bad.into_iter().collect()
}

/// Deterministic degeneracy removal: rotate all points by a small rational
/// angle, (x, y) -> (x - eps*y, y + eps*x).
///
/// The map preserves the sign of every point-point-point orientation (its
/// determinant is 1 + eps^2 > 0) and destroys every edge-parallel tie,
/// because the perturbed cross product against a fixed direction picks up
/// a -eps * dot term which general position of the violating pair makes
/// nonzero. Epsilon halves from 2^-20 until the check passes.
pub fn perturb_rotation(
    points: &[Point],
    q: &SymmetricPolygon,
) -> Result<(Vec<Point>, Rat), GeomError> {
    // Duplicates cannot be fixed by any rigid motion.
    let dup: Vec<(usize, usize)> = {
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| points[a].cmp(&points[b]));
        order
            .windows(2)
            .filter(|w| points[w[0]] == points[w[1]])
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect()
    };
    if !dup.is_empty() {
        return Err(GeomError::GeneralPosition(dup.len()));
    }
    for k in 20..=60u32 {
        let eps = ratio(1, 1i64 << k.min(62));
        let rotated: Vec<Point> = points
            .iter()
            .map(|p| {
                Point::new(
                    &p.x - &eps * &p.y,
                    &p.y + &eps * &p.x,
                )
            })
            .collect();
        if general_position_check(&rotated, q).is_empty() {
            return Ok((rotated, eps));
        }
    }
    Err(GeomError::PerturbationFailed)
}

/// Convenience constructors for the polygons used throughout the tests
/// and generators. All coordinates are rational.
pub mod shapes {
    use super::*;

    /// Axis-parallel unit square [0,1]^2.
    pub fn unit_square() -> SymmetricPolygon {
        validate_polygon(&[
            Point::from_i64(0, 0),
            Point::from_i64(1, 0),
            Point::from_i64(1, 1),
            Point::from_i64(0, 1),
        ])
        .unwrap()
    }

    /// Axis-parallel square with side `s` (rational), centered at origin.
    pub fn square(s: (i64, i64)) -> SymmetricPolygon {
        let h = ratio(s.0, 2 * s.1);
        validate_polygon(&[
            Point::new(-h.clone(), -h.clone()),
            Point::new(h.clone(), -h.clone()),
            Point::new(h.clone(), h.clone()),
            Point::new(-h.clone(), h.clone()),
        ])
        .unwrap()
    }

    /// A centrally symmetric rational hexagon, roughly regular.
    pub fn hexagon() -> SymmetricPolygon {
        validate_polygon(&[
            Point::from_i64(2, 0),
            Point::from_i64(1, 2),
            Point::from_i64(-1, 2),
            Point::from_i64(-2, 0),
            Point::from_i64(-1, -2),
            Point::from_i64(1, -2),
        ])
        .unwrap()
    }

    /// A centrally symmetric rational octagon.
    pub fn octagon() -> SymmetricPolygon {
        validate_polygon(&[
            Point::from_i64(2, -1),
            Point::from_i64(2, 1),
            Point::from_i64(1, 2),
            Point::from_i64(-1, 2),
            Point::from_i64(-2, 1),
            Point::from_i64(-2, -1),
            Point::from_i64(-1, -2),
            Point::from_i64(1, -2),
        ])
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::shapes::*;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn validates_unit_square() {
        let q = unit_square();
        assert_eq!(q.side_count(), 4);
        assert_eq!(q.center(), &Point::from_ratio((1, 2), (1, 2)));
    }

    #[test]
    fn validates_hexagon() {
        let q = hexagon();
        assert_eq!(q.side_count(), 6);
        assert_eq!(q.center(), &Point::from_i64(0, 0));
    }

    #[test]
    fn rejects_triangle() {
        let r = validate_polygon(&[
            Point::from_i64(0, 0),
            Point::from_i64(1, 0),
            Point::from_i64(0, 1),
        ]);
        assert_eq!(r.unwrap_err(), GeomError::OddVertexCount(3));
    }

    #[test]
    fn rejects_asymmetric_and_nonconvex() {
        let r = validate_polygon(&[
            Point::from_i64(0, 0),
            Point::from_i64(3, 0),
            Point::from_i64(3, 1),
            Point::from_i64(0, 2),
        ]);
        assert_eq!(r.unwrap_err(), GeomError::NotCentrallySymmetric);
        let r = validate_polygon(&[
            Point::from_i64(0, 0),
            Point::from_i64(2, 0),
            Point::from_i64(1, 1),
            Point::from_i64(2, 2),
            Point::from_i64(0, 2),
            Point::from_i64(1, 1),
        ]);
        assert!(r.is_err());
    }

    #[test]
    fn accepts_clockwise_input() {
        let q = validate_polygon(&[
            Point::from_i64(0, 1),
            Point::from_i64(1, 1),
            Point::from_i64(1, 0),
            Point::from_i64(0, 0),
        ])
        .unwrap();
        assert_eq!(q.side_count(), 4);
    }

    #[test]
    fn rejects_symmetric_star() {
        // {8/3} star polygon: all left turns, winding 3, centrally symmetric.
        let vs: Vec<Point> = (0..8)
            .map(|i| {
                let a = (3 * i) % 8;
                // Rational points on a circle-ish octagon layout.
                let table = [
                    (4, 0),
                    (3, 3),
                    (0, 4),
                    (-3, 3),
                    (-4, 0),
                    (-3, -3),
                    (0, -4),
                    (3, -3),
                ];
                Point::from_i64(table[a].0, table[a].1)
            })
            .collect();
        assert!(validate_polygon(&vs).is_err());
    }

    #[test]
    fn wedge_membership_unit_square() {
        let q = unit_square();
        let w = Wedge::new(0, Point::from_i64(0, 0));
        assert!(wedge_contains(&w, &q, &Point::from_i64(2, 3)));
        assert!(wedge_contains(&w, &q, &Point::from_i64(0, 5)));
        assert!(!wedge_contains(&w, &q, &Point::from_i64(-1, 0)));
    }

    #[test]
    fn count_left_examples() {
        let line = DirectedLine::new(Point::from_i64(0, 0), Vec2::from_i64(1, 0));
        let pts = vec![
            Point::from_i64(0, 1),
            Point::from_i64(0, -1),
            Point::from_i64(0, 0),
        ];
        assert_eq!(count_left(&line, &pts, false), 1);
        assert_eq!(count_left(&line, &pts, true), 2);
        assert_eq!(count_left(&line, &[], true), 0);
    }

    #[test]
    fn general_position_examples() {
        let q = unit_square();
        let s = vec![Point::from_i64(0, 0), Point::from_i64(3, 0)];
        assert_eq!(general_position_check(&s, &q), vec![(0, 1)]);
        let s = vec![Point::from_i64(0, 0), Point::from_i64(1, 2)];
        assert!(general_position_check(&s, &q).is_empty());
        let s = vec![Point::from_i64(1, 1), Point::from_i64(1, 1)];
        assert_eq!(general_position_check(&s, &q), vec![(0, 1)]);
    }

    #[test]
    fn perturbation_fixes_grid() {
        let q = unit_square();
        let grid: Vec<Point> = (0..4)
            .flat_map(|i| (0..4).map(move |j| Point::from_i64(i, j)))
            .collect();
        assert!(!general_position_check(&grid, &q).is_empty());
        let (rotated, eps) = perturb_rotation(&grid, &q).unwrap();
        assert!(eps.is_positive());
        assert!(general_position_check(&rotated, &q).is_empty());
    }

    #[test]
    fn skew_frame_matches_direct_membership() {
        let q = octagon();
        for i in 0..q.side_count() {
            let frame = SkewFrame::new(&q, i);
            let apex = Point::from_ratio((3, 7), (-2, 5));
            let w = Wedge::new(i, apex.clone());
            let (ua, va) = frame.uv(&apex);
            for (px, py) in [(0i64, 0i64), (3, 1), (-2, 4), (5, -3), (1, 1)] {
                let p = Point::from_i64(px, py);
                let (up, vp) = frame.uv(&p);
                let skew_in = up >= ua && vp >= va;
                assert_eq!(skew_in, wedge_contains(&w, &q, &p), "type {i}");
            }
            // Round trip through skew coordinates.
            let back = frame.point_at(&ua, &va);
            assert_eq!(back, apex);
        }
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-40i64..40, 1i64..8).prop_map(|(n, d)| ratio(n, d))
    }

    fn small_point() -> impl Strategy<Value = Point> {
        (small_rat(), small_rat()).prop_map(|(x, y)| Point::new(x, y))
    }

    proptest! {
        /// Antipodal wedge duality: p in W_i(x) iff x in W_{i+n}(p).
        #[test]
        fn wedge_duality(x in small_point(), p in small_point()) {
            for q in [unit_square(), hexagon(), octagon()] {
                let n = q.half_count();
                for i in 0..q.side_count() {
                    let a = wedge_contains(&Wedge::new(i, x.clone()), &q, &p);
                    let b = wedge_contains(&Wedge::new((i + n) % (2 * n), p.clone()), &q, &x);
                    prop_assert_eq!(a, b);
                }
            }
        }

        /// The 2n wedges at a common apex cover the plane.
        #[test]
        fn wedges_cover_plane(x in small_point(), p in small_point()) {
            for q in [unit_square(), hexagon(), octagon()] {
                let covered = (0..q.side_count())
                    .any(|i| wedge_contains(&Wedge::new(i, x.clone()), &q, &p));
                prop_assert!(covered);
            }
        }

        /// Closed minus strict count equals the number of points on the line.
        #[test]
        fn count_left_boundary(pts in proptest::collection::vec(small_point(), 0..24),
                               anchor in small_point()) {
            let line = DirectedLine::new(anchor.clone(), Vec2::from_i64(2, 1));
            let on_line = pts.iter().filter(|p| line.side(p) == std::cmp::Ordering::Equal).count();
            prop_assert_eq!(
                count_left(&line, &pts, true) - count_left(&line, &pts, false),
                on_line
            );
        }
    }
}
