//! Generation of all connected trivalent multigraphs of a given genus.
//!
//! Level `g` is built from level `g - 1` by two augmentations and
//! deduplicated by certificate:
//!
//!  * edge insertion: subdivide two edge positions (possibly the same edge)
//!    and join the two new vertices;
//!  * loop hanging: subdivide one edge position and attach a new loop
//!    vertex by a bridge.
//!
//! Every connected trivalent multigraph of genus `g >= 3` arises this way:
//! if it has a loop, deleting the loop vertex and suppressing its neighbor
//! reverses a loop hang; if it is loop-free with a parallel pair, deleting
//! one copy and suppressing reverses a same-edge insertion; and a simple
//! graph always has a cycle edge whose deletion-plus-suppression reverses a
//! two-edge insertion. The genus-2 base level is {theta, dumbbell}.

use super::{dumbbell, theta, Certificate, Multigraph};
use std::collections::BTreeMap;

/// All connected trivalent multigraphs with `2g - 2` vertices, up to
/// isomorphism. Guarded to `2 <= g <= 8`.
pub fn enumerate_trivalent(g: i64) -> Vec<Multigraph> {
    assert!((2..=8).contains(&g), "resource guard: 2 <= g <= 8");
    let mut level: BTreeMap<Certificate, Multigraph> = BTreeMap::new();
    for b in [theta(), dumbbell()] {
        level.insert(b.certificate(), b);
    }
    for _ in 3..=g {
        let mut next: BTreeMap<Certificate, Multigraph> = BTreeMap::new();
        for parent in level.values() {
            for child in augmentations(parent) {
                debug_assert!(child.is_trivalent());
                debug_assert!(child.is_connected());
                next.entry(child.certificate()).or_insert(child);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

fn augmentations(g: &Multigraph) -> Vec<Multigraph> {
    let n = g.vertex_count() as u32;
    let m = g.edge_count();
    let edges = g.edges();
    let mut out = Vec::new();
    // Two distinct edge positions, subdivided and joined.
    for i in 0..m {
        for j in i..m {
            let (x, y) = (n, n + 1);
            let mut es: Vec<(u32, u32)> = Vec::with_capacity(m + 3);
            for (k, &e) in edges.iter().enumerate() {
                if k != i && k != j {
                    es.push(e);
                }
            }
            if i == j {
                // One edge subdivided twice: u - x - y - v plus a second
                // x-y edge (a parallel pair on the new vertices).
                let (u, v) = edges[i];
                es.extend([(u, x), (x, y), (y, v), (x, y)]);
            } else {
                let (u, v) = edges[i];
                let (s, t) = edges[j];
                es.extend([(u, x), (x, v), (s, y), (y, t), (x, y)]);
            }
            out.push(Multigraph::new(g.vertex_count() + 2, es));
        }
    }
    // One edge subdivided, new loop vertex hung from the midpoint.
    for i in 0..m {
        let (x, y) = (n, n + 1);
        let mut es: Vec<(u32, u32)> = Vec::with_capacity(m + 3);
        for (k, &e) in edges.iter().enumerate() {
            if k != i {
                es.push(e);
            }
        }
        let (u, v) = edges[i];
        es.extend([(u, x), (x, v), (x, y), (y, y)]);
        out.push(Multigraph::new(g.vertex_count() + 2, es));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_for_small_genus() {
        assert_eq!(enumerate_trivalent(2).len(), 2);
        assert_eq!(enumerate_trivalent(3).len(), 5);
        assert_eq!(enumerate_trivalent(4).len(), 17);
        assert_eq!(enumerate_trivalent(5).len(), 71);
    }

    #[test]
    fn outputs_are_trivalent_of_right_size() {
        for g in 2..=5 {
            for graph in enumerate_trivalent(g) {
                assert_eq!(graph.vertex_count() as i64, 2 * g - 2);
                assert!(graph.is_trivalent());
                assert!(graph.is_connected());
                assert_eq!(graph.genus(), g);
            }
        }
    }

    #[test]
    #[should_panic(expected = "resource guard")]
    fn resource_guard() {
        enumerate_trivalent(9);
    }
}
