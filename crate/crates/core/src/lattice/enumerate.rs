//! Exhaustive enumeration of small lattice-convex point sets and of the
//! maximal nonhyperelliptic polygons of a given genus.

use super::{move_out, pt, Point, Polygon};
use std::collections::BTreeSet;

/// All two-dimensional lattice-convex point sets with exactly `n` lattice
/// points, up to unimodular equivalence, returned as canonical hull
/// polygons.
///
/// A set is enumerated in the presentation where its lattice width
/// direction is vertical: rows `y = 0..=w` hold contiguous runs, the first
/// two rows are pinned at `x = 0` by translation and shear, and every
/// prefix of rows must itself be lattice-convex. Duplicates from symmetric
/// presentations are removed by canonical form.
pub fn enumerate_convex_sets(n: usize) -> Vec<Polygon> {
    assert!(n >= 3, "two-dimensional sets need at least 3 points");
    let mut seen: BTreeSet<Vec<Point>> = BTreeSet::new();
    let mut out = Vec::new();
    // lw^2 <= (8/3) * area and area < n by Pick, so the vertical extent of
    // the width-normalized presentation is below 2*sqrt(n + 8/3).
    let wmax = (2.0 * ((n as f64) + 8.0 / 3.0).sqrt()).floor() as i64;
    for w in 1..=wmax {
        if (w + 1) as usize > n {
            break;
        }
        let mut rows: Vec<(i64, i64)> = Vec::new();
        grow_rows(n, w, &mut rows, &mut |rows| {
            let pts: Vec<Point> = rows
                .iter()
                .enumerate()
                .flat_map(|(k, &(l, r))| (l..=r).map(move |x| pt(x, k as i64)))
                .collect();
            if let Some(hull) = Polygon::hull(&pts) {
                if hull.lattice_points().len() == n {
                    let canon = hull.canonical_form();
                    if seen.insert(canon.vertices().to_vec()) {
                        out.push(canon);
                    }
                }
            }
        });
    }
    out
}

/// Extend the row stack to height `w` with `n` total points, pruning any
/// prefix that is not lattice-convex.
fn grow_rows(n: usize, w: i64, rows: &mut Vec<(i64, i64)>, emit: &mut impl FnMut(&[(i64, i64)])) {
    let k = rows.len() as i64;
    if k == w + 1 {
        if rows.iter().map(|&(l, r)| (r - l + 1) as usize).sum::<usize>() == n {
            emit(rows);
        }
        return;
    }
    let used: usize = rows.iter().map(|&(l, r)| (r - l + 1) as usize).sum();
    let remaining_rows = (w + 1 - k) as usize;
    if used + remaining_rows > n {
        return;
    }
    let slack = (n - used - remaining_rows) as i64;
    let span = n as i64 + w;
    let (lo, hi) = match k {
        0 | 1 => (0, 0), // translation and shear normalization
        _ => (-span, span),
    };
    for l in lo..=hi {
        for r in l..=(l + slack) {
            rows.push((l, r));
            if prefix_is_convex(rows) {
                grow_rows(n, w, rows, emit);
            }
            rows.pop();
        }
    }
}

fn prefix_is_convex(rows: &[(i64, i64)]) -> bool {
    if rows.len() < 3 {
        return true;
    }
    let pts: Vec<Point> = rows
        .iter()
        .enumerate()
        .flat_map(|(k, &(l, r))| (l..=r).map(move |x| pt(x, k as i64)))
        .collect();
    match Polygon::hull(&pts) {
        Some(hull) => hull.lattice_points() == {
            let mut sorted = pts.clone();
            sorted.sort();
            sorted
        },
        // Degenerate prefixes (single column so far) stay convex.
        None => true,
    }
}

/// All maximal nonhyperelliptic polygons of genus `g`, as canonical forms.
///
/// Candidate interior polygons are the two-dimensional lattice-convex sets
/// with exactly `g` lattice points; each is moved out, and the survivors
/// are deduplicated by canonical form.
pub fn enumerate_maximal_nonhyperelliptic(g: i64) -> Vec<Polygon> {
    assert!(g >= 2, "nonhyperelliptic polygons have genus >= 3 interior data");
    if g < 3 {
        // A two-dimensional interior polygon needs at least 3 lattice points.
        return Vec::new();
    }
    let mut out: Vec<Polygon> = Vec::new();
    let mut seen: BTreeSet<Vec<Point>> = BTreeSet::new();
    for sigma in enumerate_convex_sets(g as usize) {
        if let Some(maximal) = move_out(&sigma) {
            let canon = maximal.canonical_form();
            debug_assert_eq!(canon.genus(), g);
            debug_assert!(!canon.is_hyperelliptic());
            // Sanity: lw^2 <= (8/3) * area for everything we enumerate.
            let lw = canon.lattice_width();
            debug_assert!(3 * lw * lw <= 4 * canon.area2());
            if seen.insert(canon.vertices().to_vec()) {
                out.push(canon);
            }
        }
    }
    out.sort_by_key(|p| p.vertices().to_vec());
    out
}

#[cfg(test)]
mod tests {
    use super::super::tests::poly;
    use super::*;

    #[test]
    fn convex_sets_of_size_3() {
        // One class: the unimodular triangle.
        let sets = enumerate_convex_sets(3);
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0].genus(), 0);
        assert_eq!(sets[0].area2(), 1);
    }

    #[test]
    fn convex_sets_of_size_4() {
        // Classes with 4 lattice points: the unit square, the triangle
        // (0,0),(2,0),(0,1), and the area-3/2 triangle (0,0),(1,0),(1,3)
        // family member with an interior point... counted by enumeration and
        // checked structurally instead of against a guessed constant.
        let sets = enumerate_convex_sets(4);
        for s in &sets {
            assert_eq!(s.lattice_points().len(), 4);
        }
        // Must contain the unit square and the width-1 triangle.
        let square = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]).canonical_form();
        let tri = poly(&[(0, 0), (2, 0), (0, 1)]).canonical_form();
        assert!(sets.contains(&square));
        assert!(sets.contains(&tri));
    }

    #[test]
    fn genus_3_has_the_unique_maximal_triangle() {
        let polys = enumerate_maximal_nonhyperelliptic(3);
        assert_eq!(polys.len(), 1);
        assert_eq!(
            polys[0],
            poly(&[(0, 0), (4, 0), (0, 4)]).canonical_form()
        );
    }

    #[test]
    fn genus_4_maximal_polygons() {
        // Every result is genus 4, nonhyperelliptic, and pairwise distinct.
        let polys = enumerate_maximal_nonhyperelliptic(4);
        assert!(!polys.is_empty());
        for p in &polys {
            assert_eq!(p.genus(), 4);
            assert!(!p.is_hyperelliptic());
        }
    }
}
