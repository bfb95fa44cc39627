//! Canonical forms of lattice polygons under the affine unimodular group
//! (integer 2x2 matrices of determinant +-1 composed with translations).
//!
//! Two polygons are equivalent exactly when their canonical forms are equal.
//! The normal form is computed by placing each edge (in both orientations)
//! onto the positive x-axis starting at the origin with the polygon in the
//! upper half-plane, shear-normalizing, and taking the lexicographically
//! least vertex list over all placements.

use super::{pt, Point, Polygon};
use num_integer::Integer;

/// An affine unimodular map `x -> M x + t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Unimodular {
    pub m: [[i64; 2]; 2],
    pub t: Point,
}

impl Unimodular {
    pub fn identity() -> Self {
        Unimodular {
            m: [[1, 0], [0, 1]],
            t: pt(0, 0),
        }
    }

    pub fn det(&self) -> i64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn apply(&self, p: Point) -> Point {
        pt(
            self.m[0][0] * p.x + self.m[0][1] * p.y + self.t.x,
            self.m[1][0] * p.x + self.m[1][1] * p.y + self.t.y,
        )
    }

    pub fn apply_polygon(&self, p: &Polygon) -> Polygon {
        let mut vs: Vec<Point> = p.vertices().iter().map(|&v| self.apply(v)).collect();
        if self.det() < 0 {
            vs.reverse();
        }
        Polygon::new(vs).expect("unimodular image of a polygon is a polygon")
    }
}

impl Polygon {
    /// The distinguished representative of this polygon's equivalence class.
    pub fn canonical_form(&self) -> Polygon {
        let mirrored = {
            let mut vs: Vec<Point> = self.vertices().iter().map(|v| pt(-v.x, v.y)).collect();
            vs.reverse();
            Polygon::new(vs).unwrap()
        };
        let mut best: Option<Vec<Point>> = None;
        for poly in [self, &mirrored] {
            let vs = poly.vertices();
            let n = vs.len();
            for i in 0..n {
                let placed = place_edge(vs, i);
                if best.as_ref().is_none_or(|b| placed < *b) {
                    best = Some(placed);
                }
            }
        }
        Polygon::new(best.unwrap()).expect("placement preserves convexity")
    }

    /// All lattice automorphisms of the polygon: unimodular affine maps that
    /// send the polygon onto itself.
    pub fn symmetries(&self) -> Vec<Unimodular> {
        let mut maps = Vec::new();
        let vs = self.vertices();
        let n = vs.len();
        // A symmetry sends edge 0 onto some edge, preserving or reversing
        // orientation. Solve for the linear part from two edge vectors.
        let a0 = vs[1].sub(vs[0]);
        let b0 = vs[2].sub(vs[1]);
        for j in 0..n {
            for flip in [false, true] {
                let (a1, b1, anchor) = if !flip {
                    (
                        vs[(j + 1) % n].sub(vs[j]),
                        vs[(j + 2) % n].sub(vs[(j + 1) % n]),
                        vs[j],
                    )
                } else {
                    // reversed traversal: edge j+1 -> j, then j -> j-1
                    (
                        vs[j].sub(vs[(j + 1) % n]),
                        vs[(n + j - 1) % n].sub(vs[j]),
                        vs[(j + 1) % n],
                    )
                };
                if let Some(m) = solve_linear(a0, b0, a1, b1) {
                    let lin = Unimodular { m, t: pt(0, 0) };
                    if lin.det().abs() != 1 {
                        continue;
                    }
                    let img = lin.apply(vs[0]);
                    let map = Unimodular {
                        m,
                        t: anchor.sub(img),
                    };
                    if &map.apply_polygon(self) == self {
                        maps.push(map);
                    }
                }
            }
        }
        maps.sort_by_key(|u| (u.m, (u.t.x, u.t.y)));
        maps.dedup();
        maps
    }
}

/// Solve M a0 = a1, M b0 = b1 over the integers, if possible.
fn solve_linear(a0: Point, b0: Point, a1: Point, b1: Point) -> Option<[[i64; 2]; 2]> {
    let det = a0.x * b0.y - a0.y * b0.x;
    if det == 0 {
        return None;
    }
    // Row r of M satisfies (r . a0, r . b0) = (a1_r, b1_r).
    let row = |va: i64, vb: i64| -> Option<[i64; 2]> {
        let rx = va * b0.y - vb * a0.y;
        let ry = vb * a0.x - va * b0.x;
        if rx % det != 0 || ry % det != 0 {
            return None;
        }
        Some([rx / det, ry / det])
    };
    Some([row(a1.x, b1.x)?, row(a1.y, b1.y)?])
}

/// Map the directed edge `vs[i] -> vs[i+1]` to the positive x-axis starting
/// at the origin, with the polygon in the upper half-plane, then
/// shear-normalize. Returns the placed vertex list in the normalized
/// rotation used by `Polygon::new`.
fn place_edge(vs: &[Point], i: usize) -> Vec<Point> {
    let n = vs.len();
    let o = vs[i];
    let e = vs[(i + 1) % n].sub(o);
    let g = e.x.abs().gcd(&e.y.abs());
    let (px, py) = (e.x / g, e.y / g);
    // M = [[a, b], [-py, px]] with a*px + b*py = 1 has det +1 and sends
    // (px, py) to (1, 0).
    let egcd = px.extended_gcd(&py);
    debug_assert_eq!(egcd.gcd, 1);
    let (a, b) = (egcd.x, egcd.y);
    let map = |q: Point| -> Point {
        let d = q.sub(o);
        pt(a * d.x + b * d.y, -py * d.x + px * d.y)
    };
    let mut placed: Vec<Point> = (0..n).map(|k| map(vs[(i + k) % n])).collect();
    debug_assert!(placed.iter().all(|q| q.y >= 0));
    debug_assert_eq!(placed[0], pt(0, 0));
    // Remaining freedom is a horizontal shear; pin it with the first vertex
    // off the axis.
    let w = placed[2];
    debug_assert!(w.y > 0);
    let s = (w.x.rem_euclid(w.y) - w.x) / w.y;
    for q in placed.iter_mut() {
        q.x += s * q.y;
    }
    Polygon::new(placed)
        .expect("placed vertices stay strictly convex ccw")
        .vertices()
        .to_vec()
}

#[cfg(test)]
mod tests {
    use super::super::tests::poly;
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_unimodular(rng: &mut StdRng) -> Unimodular {
        // Random product of shears and flips stays unimodular.
        let mut u = Unimodular::identity();
        for _ in 0..6 {
            let s: i64 = rng.gen_range(-3..=3);
            let which: u8 = rng.gen_range(0..3);
            let f = match which {
                0 => [[1, s], [0, 1]],
                1 => [[1, 0], [s, 1]],
                _ => [[0, 1], [1, 0]],
            };
            u = Unimodular {
                m: [
                    [
                        f[0][0] * u.m[0][0] + f[0][1] * u.m[1][0],
                        f[0][0] * u.m[0][1] + f[0][1] * u.m[1][1],
                    ],
                    [
                        f[1][0] * u.m[0][0] + f[1][1] * u.m[1][0],
                        f[1][0] * u.m[0][1] + f[1][1] * u.m[1][1],
                    ],
                ],
                t: u.t,
            };
        }
        u.t = pt(rng.gen_range(-10..=10), rng.gen_range(-10..=10));
        u
    }

    #[test]
    fn canonical_form_is_orbit_invariant() {
        let mut rng = StdRng::seed_from_u64(7);
        let samples = [
            poly(&[(0, 0), (1, 0), (0, 1)]),
            poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]),
            poly(&[(0, 0), (4, 0), (0, 4)]),
            poly(&[(0, 0), (3, 1), (2, 3)]),
            poly(&[(1, 0), (3, 0), (2, 3), (0, 3)]),
            poly(&[(0, 0), (2, 0), (3, 1), (1, 2)]),
        ];
        for p in &samples {
            let c = p.canonical_form();
            for _ in 0..200 {
                let u = random_unimodular(&mut rng);
                assert_eq!(u.apply_polygon(p).canonical_form(), c);
            }
        }
    }

    #[test]
    fn translation_equivalence() {
        let a = poly(&[(0, 0), (1, 0), (0, 1)]);
        let b = poly(&[(3, 7), (4, 7), (3, 8)]);
        assert_eq!(a.canonical_form(), b.canonical_form());
    }

    #[test]
    fn shear_equivalence() {
        let a = poly(&[(0, 0), (2, 0), (0, 2)]);
        let b = poly(&[(0, 0), (2, 0), (2, 2)]);
        assert_eq!(a.canonical_form(), b.canonical_form());
    }

    #[test]
    fn inequivalent_polygons_differ() {
        let a = poly(&[(0, 0), (1, 0), (0, 1)]);
        let b = poly(&[(0, 0), (2, 0), (0, 2)]);
        assert_ne!(a.canonical_form(), b.canonical_form());
    }

    #[test]
    fn symmetry_groups() {
        // Standard triangle has the S3 vertex action.
        assert_eq!(poly(&[(0, 0), (4, 0), (0, 4)]).symmetries().len(), 6);
        // Unit square: dihedral group of order 8.
        assert_eq!(
            poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]).symmetries().len(),
            8
        );
        // A generic quadrilateral has only the identity.
        assert_eq!(poly(&[(0, 0), (2, 0), (3, 1), (1, 2)]).symmetries().len(), 1);
    }

    #[test]
    fn symmetries_include_identity() {
        for p in [
            poly(&[(0, 0), (1, 0), (0, 1)]),
            poly(&[(1, 0), (3, 0), (2, 3), (0, 3)]),
        ] {
            assert!(p.symmetries().contains(&Unimodular::identity()));
        }
    }
}
