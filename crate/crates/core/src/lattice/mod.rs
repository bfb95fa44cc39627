//! Exact lattice-polygon arithmetic.
//!
//! Everything here is integer or rational; there is no floating point in
//! this module. Polygons are stored as counterclockwise, strictly convex
//! vertex lists, and every constructed polygon is checked against the
//! Pick identity `area2 = r + 2g - 2`.

mod canon;
mod enumerate;
mod moveout;
mod width;

pub use enumerate::{enumerate_convex_sets, enumerate_maximal_nonhyperelliptic};
pub use moveout::move_out;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A point of the integer lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

pub const fn pt(x: i64, y: i64) -> Point {
    Point { x, y }
}

impl Point {
    pub fn sub(self, o: Point) -> Point {
        pt(self.x - o.x, self.y - o.y)
    }

    pub fn add(self, o: Point) -> Point {
        pt(self.x + o.x, self.y + o.y)
    }

    /// Cross product of `a - self` and `b - self`.
    pub fn cross(self, a: Point, b: Point) -> i64 {
        let u = a.sub(self);
        let v = b.sub(self);
        u.x * v.y - u.y * v.x
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolygonError {
    #[error("a lattice polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertices are not in strictly convex counterclockwise position")]
    NotStrictlyConvex,
}

/// A convex lattice polygon.
///
/// Vertices are counterclockwise and strictly convex (no three consecutive
/// collinear vertices). The vertex list is rotated so it starts at the
/// lexicographically least vertex, which makes `Eq`/`Hash` agree with
/// geometric identity (up to nothing; translation is *not* quotiented out —
/// see [`Polygon::canonical_form`] for equivalence classes).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolygonRepr", into = "PolygonRepr")]
pub struct Polygon {
    vertices: Vec<Point>,
}

#[derive(Serialize, Deserialize)]
struct PolygonRepr {
    vertices: Vec<[i64; 2]>,
}

impl TryFrom<PolygonRepr> for Polygon {
    type Error = PolygonError;
    fn try_from(r: PolygonRepr) -> Result<Self, PolygonError> {
        Polygon::new(r.vertices.into_iter().map(|[x, y]| pt(x, y)).collect())
    }
}

impl From<Polygon> for PolygonRepr {
    fn from(p: Polygon) -> PolygonRepr {
        PolygonRepr {
            vertices: p.vertices.iter().map(|v| [v.x, v.y]).collect(),
        }
    }
}

impl Polygon {
    /// Builds a polygon from a counterclockwise strictly convex vertex list.
    pub fn new(vertices: Vec<Point>) -> Result<Polygon, PolygonError> {
        if vertices.len() < 3 {
            return Err(PolygonError::TooFewVertices(vertices.len()));
        }
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if a.cross(b, c) <= 0 {
                return Err(PolygonError::NotStrictlyConvex);
            }
        }
        let start = (0..n).min_by_key(|&i| vertices[i]).unwrap();
        let mut vs = Vec::with_capacity(n);
        vs.extend_from_slice(&vertices[start..]);
        vs.extend_from_slice(&vertices[..start]);
        Ok(Polygon { vertices: vs })
    }

    /// Convex hull of a point set, as a polygon. `None` if the hull is not
    /// two-dimensional.
    pub fn hull(points: &[Point]) -> Option<Polygon> {
        let vs = convex_hull(points);
        if vs.len() < 3 {
            return None;
        }
        Some(Polygon::new(vs).expect("hull output is strictly convex ccw"))
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Twice the Euclidean area (shoelace).
    pub fn area2(&self) -> i64 {
        let n = self.vertices.len();
        let mut s = 0i64;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            s += a.x * b.y - b.x * a.y;
        }
        s
    }

    /// Number of lattice points on the boundary.
    pub fn boundary_count(&self) -> i64 {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let d = self.vertices[(i + 1) % n].sub(self.vertices[i]);
                d.x.abs().gcd(&d.y.abs())
            })
            .sum()
    }

    /// Number of interior lattice points, via Pick's identity.
    pub fn genus(&self) -> i64 {
        (self.area2() - self.boundary_count() + 2) / 2
    }

    pub fn bbox(&self) -> (Point, Point) {
        let xs = self.vertices.iter().map(|p| p.x);
        let ys = self.vertices.iter().map(|p| p.y);
        (
            pt(xs.clone().min().unwrap(), ys.clone().min().unwrap()),
            pt(xs.max().unwrap(), ys.max().unwrap()),
        )
    }

    /// Strict containment test.
    pub fn contains_interior(&self, q: Point) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| self.vertices[i].cross(self.vertices[(i + 1) % n], q) > 0)
    }

    /// Containment test including the boundary.
    pub fn contains(&self, q: Point) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| self.vertices[i].cross(self.vertices[(i + 1) % n], q) >= 0)
    }

    /// All lattice points of the polygon (boundary and interior), in
    /// lexicographic order.
    pub fn lattice_points(&self) -> Vec<Point> {
        self.scan(|q| self.contains(q))
    }

    /// Interior lattice points in lexicographic order.
    pub fn interior_points(&self) -> Vec<Point> {
        self.scan(|q| self.contains_interior(q))
    }

    fn scan(&self, keep: impl Fn(Point) -> bool) -> Vec<Point> {
        let (lo, hi) = self.bbox();
        let mut out = Vec::new();
        for x in lo.x..=hi.x {
            for y in lo.y..=hi.y {
                let q = pt(x, y);
                if keep(q) {
                    out.push(q);
                }
            }
        }
        out
    }

    /// The convex hull of the interior lattice points, with its degeneracy
    /// kind made explicit.
    pub fn interior_polygon(&self) -> Interior {
        let pts = self.interior_points();
        match pts.len() {
            0 => Interior::Empty,
            1 => Interior::Point(pts[0]),
            _ => {
                if let Some(poly) = Polygon::hull(&pts) {
                    Interior::TwoDimensional(poly)
                } else {
                    // Collinear: the scan order is lexicographic, so the
                    // extremes are the segment endpoints.
                    Interior::Segment(pts[0], *pts.last().unwrap())
                }
            }
        }
    }

    /// `Δ` is hyperelliptic when its interior polygon is lower-dimensional.
    pub fn is_hyperelliptic(&self) -> bool {
        !matches!(self.interior_polygon(), Interior::TwoDimensional(_))
    }

    /// The polygon scaled by 2. The interior count transforms as
    /// `g' = 4g + r - 3`.
    pub fn scale_double(&self) -> Polygon {
        Polygon::new(self.vertices.iter().map(|v| pt(2 * v.x, 2 * v.y)).collect())
            .expect("scaling preserves strict convexity")
    }

    pub fn translate(&self, d: Point) -> Polygon {
        Polygon::new(self.vertices.iter().map(|v| v.add(d)).collect()).unwrap()
    }

    /// Byte-stable JSON serialization; equal canonical forms serialize to
    /// identical bytes.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polygon serializes")
    }
}

/// The interior polygon of a lattice polygon, with degenerate cases explicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Interior {
    Empty,
    Point(Point),
    Segment(Point, Point),
    TwoDimensional(Polygon),
}

impl Interior {
    /// Lattice points of the interior polygon.
    pub fn points(&self) -> Vec<Point> {
        match self {
            Interior::Empty => Vec::new(),
            Interior::Point(p) => vec![*p],
            Interior::Segment(a, b) => {
                let d = b.sub(*a);
                let g = d.x.abs().gcd(&d.y.abs());
                (0..=g)
                    .map(|t| pt(a.x + t * d.x / g, a.y + t * d.y / g))
                    .collect()
            }
            Interior::TwoDimensional(p) => p.lattice_points(),
        }
    }
}

/// Andrew's monotone chain; returns the strictly convex hull vertex list in
/// counterclockwise order (fewer than 3 entries when degenerate).
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && lower[lower.len() - 2].cross(lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && upper[upper.len() - 2].cross(upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        // All points collinear; report the two extremes.
        let mut seg = vec![pts[0], *pts.last().unwrap()];
        seg.dedup();
        seg
    } else {
        lower
    }
}

/// Enumeration pruning constant: the floor of the applicable bound on the
/// number of boundary lattice points of a nonhyperelliptic polygon of genus
/// `g`, refined by lattice width when `lw >= 4`.
pub fn bound_r(g: i64, lw: i64) -> i64 {
    assert!(g >= 1);
    // r <= g + 9 for nonhyperelliptic polygons, r <= 2g + 7 in general.
    let base = (g + 9).min(2 * g + 7);
    if lw >= 4 {
        let ell = lw - 1;
        base.min(width_refined_bound(g, ell))
    } else {
        base
    }
}

/// floor(2g/l + 4*sqrt(g + 8/3) + 2), computed exactly.
fn width_refined_bound(g: i64, ell: i64) -> i64 {
    // k <= 2g/l + 2 + 4*sqrt((3g+8)/3)
    //   <=>  (k - 2)*l - 2g <= 4*l*sqrt((3g+8)/3)
    //   <=>  lhs <= 0  or  3*lhs^2 <= 16*l^2*(3g+8)
    let fits = |k: i64| {
        let lhs = (k - 2) * ell - 2 * g;
        lhs <= 0 || 3 * lhs * lhs <= 16 * ell * ell * (3 * g + 8)
    };
    let mut k = 0;
    while fits(k + 1) {
        k += 1;
    }
    k
}
