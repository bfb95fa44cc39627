//! "Moving out" the edges of an interior polygon to recover the unique
//! maximal polygon with that interior, when one exists.

use super::{pt, Point, Polygon};
use num_integer::Integer;
use num_rational::Ratio;

type Rat = Ratio<i64>;

/// For each edge of `sigma` with primitive outward normal `n` and support
/// value `c`, form the half-plane `<n, x> <= c + 1`; intersect all of them.
/// Returns the intersection when it is a lattice polygon whose interior
/// lattice points are exactly the lattice points of `sigma`, and `None`
/// otherwise (no maximal polygon has interior polygon `sigma`).
pub fn move_out(sigma: &Polygon) -> Option<Polygon> {
    let vs = sigma.vertices();
    let n = vs.len();
    let mut lines: Vec<(Point, i64)> = Vec::with_capacity(n); // <normal, x> = rhs
    for i in 0..n {
        let d = vs[(i + 1) % n].sub(vs[i]);
        let g = d.x.abs().gcd(&d.y.abs());
        let nrm = pt(d.y / g, -d.x / g); // outward for ccw orientation
        let c = nrm.x * vs[i].x + nrm.y * vs[i].y;
        lines.push((nrm, c + 1));
    }

    // Candidate vertices: pairwise line intersections that satisfy every
    // constraint. The region is bounded (it is a uniform outward shift of a
    // bounded polygon), so its hull is the hull of these points.
    let mut feasible: Vec<(Rat, Rat)> = Vec::new();
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            let (ni, ci) = lines[i];
            let (nj, cj) = lines[j];
            let det = ni.x * nj.y - ni.y * nj.x;
            if det == 0 {
                continue;
            }
            let x = Rat::new(ci * nj.y - cj * ni.y, det);
            let y = Rat::new(ni.x * cj - nj.x * ci, det);
            let ok = lines
                .iter()
                .all(|&(nk, ck)| Rat::from_integer(nk.x) * x + Rat::from_integer(nk.y) * y <= Rat::from_integer(ck));
            if ok {
                feasible.push((x, y));
            }
        }
    }
    feasible.sort();
    feasible.dedup();

    // Every vertex of the intersection must be a lattice point.
    let hull_rat = rational_hull(&feasible);
    if hull_rat.len() < 3 {
        return None;
    }
    let mut int_vs = Vec::with_capacity(hull_rat.len());
    for &(x, y) in &hull_rat {
        if !x.is_integer() || !y.is_integer() {
            return None;
        }
        int_vs.push(pt(x.to_integer(), y.to_integer()));
    }
    let result = Polygon::hull(&int_vs)?;
    if result.interior_points() == sigma.lattice_points() {
        Some(result)
    } else {
        None
    }
}

fn rational_hull(points: &[(Rat, Rat)]) -> Vec<(Rat, Rat)> {
    // Same monotone chain as the integer hull; coordinates are small
    // rationals so exact arithmetic is cheap.
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: (Rat, Rat), a: (Rat, Rat), b: (Rat, Rat)| -> Rat {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let zero = Rat::from_integer(0);
    let build = |iter: &mut dyn Iterator<Item = (Rat, Rat)>| {
        let mut chain: Vec<(Rat, Rat)> = Vec::new();
        for p in iter {
            while chain.len() >= 2 && cross(chain[chain.len() - 2], chain[chain.len() - 1], p) <= zero
            {
                chain.pop();
            }
            chain.push(p);
        }
        chain.pop();
        chain
    };
    let mut lower = build(&mut pts.iter().copied());
    let upper = build(&mut pts.iter().rev().copied());
    lower.extend(upper);
    lower
}
