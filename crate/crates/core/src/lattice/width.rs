//! Lattice width: the minimum over primitive integer directions `d` of
//! `max <d,v> - min <d,v>` over the vertices.
//!
//! The scan is exhaustive over a certified box: if some direction achieves
//! width less than the best found at small norms, its pairings with two
//! independent difference vectors of the polygon bound its entries, so the
//! enlarged scan cannot miss the optimum.

use super::{Point, Polygon};
use num_integer::Integer;

impl Polygon {
    pub fn lattice_width(&self) -> i64 {
        let vs = self.vertices();
        let width_in = |a: i64, b: i64| -> i64 {
            let dots = vs.iter().map(|v| a * v.x + b * v.y);
            dots.clone().max().unwrap() - dots.min().unwrap()
        };
        // Phase 1: a cheap upper bound from the axis and diagonal strips.
        let mut best = [(0, 1), (1, 0), (1, 1), (1, -1)]
            .into_iter()
            .map(|(a, b)| width_in(a, b))
            .min()
            .unwrap();
        // Phase 2: certified exhaustive scan. If width_d < best then
        // |<d,u>| < best and |<d,v>| < best for the independent edge vectors
        // u, v at vertex 0, which pins the entries of d inside the box.
        let u = vs[1].sub(vs[0]);
        let v = vs[vs.len() - 1].sub(vs[0]);
        let det = (u.x * v.y - u.y * v.x).abs();
        debug_assert!(det > 0);
        let norm = |p: Point| p.x.abs().max(p.y.abs());
        let m = (2 * best * norm(u).max(norm(v))) / det + 1;
        for a in 0..=m {
            for b in -m..=m {
                if a == 0 && b <= 0 {
                    continue;
                }
                if a.gcd(&b) != 1 {
                    continue;
                }
                best = best.min(width_in(a, b));
            }
        }
        best
    }
}
