//! Chain graphs: the skeletons arising from hyperelliptic polygons. A chain
//! of genus g is a row of g cycles, with consecutive cycles either sharing
//! an edge (bit 0) or joined by a bridge (bit 1), named by a binary string
//! of length g - 1 up to reversal.

use super::Multigraph;

/// A chain name: bits[i] tells how cycles i and i+1 connect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainString(pub Vec<bool>);

impl ChainString {
    pub fn genus(&self) -> i64 {
        self.0.len() as i64 + 1
    }

    pub fn from_bits(s: &str) -> ChainString {
        ChainString(s.chars().map(|c| c == '1').collect())
    }
}

/// Interface carried between consecutive cycles while building a chain.
enum Link {
    Shared(u32, u32),
    Bridge(u32),
}

/// Builds the trivalent chain multigraph of genus `len + 1`.
pub fn chain(c: &ChainString) -> Multigraph {
    let bits = &c.0;
    assert!(!bits.is_empty(), "chains need genus >= 2");
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut next: u32 = 0;
    let mut fresh = |k: u32| {
        let base = next;
        next += k;
        base
    };

    // First cycle.
    let mut link = if bits[0] {
        let w = fresh(1);
        edges.push((w, w));
        Link::Bridge(w)
    } else {
        let v = fresh(2);
        edges.push((v, v + 1)); // the edge shared with the next cycle
        edges.push((v, v + 1));
        Link::Shared(v, v + 1)
    };

    // Middle cycles: consume the left link, produce the right one.
    for i in 1..bits.len() {
        let right_shared = !bits[i];
        link = match (link, right_shared) {
            (Link::Shared(u1, u2), true) => {
                let v = fresh(2);
                edges.push((v, v + 1));
                edges.push((u1, v));
                edges.push((u2, v + 1));
                Link::Shared(v, v + 1)
            }
            (Link::Shared(u1, u2), false) => {
                let x = fresh(1);
                edges.push((u1, x));
                edges.push((u2, x));
                Link::Bridge(x)
            }
            (Link::Bridge(w), true) => {
                let x = fresh(1);
                let v = fresh(2);
                edges.push((w, x));
                edges.push((v, v + 1));
                edges.push((x, v));
                edges.push((x, v + 1));
                Link::Shared(v, v + 1)
            }
            (Link::Bridge(w), false) => {
                let x = fresh(2);
                edges.push((w, x));
                edges.push((x, x + 1));
                edges.push((x, x + 1));
                Link::Bridge(x + 1)
            }
        };
    }

    // Last cycle closes the chain.
    match link {
        Link::Shared(u1, u2) => edges.push((u1, u2)),
        Link::Bridge(w) => {
            let y = fresh(1);
            edges.push((w, y));
            edges.push((y, y));
        }
    }

    let g = Multigraph::new(next as usize, edges);
    debug_assert!(g.is_trivalent(), "chain must be trivalent: {g}");
    debug_assert!(g.is_connected());
    debug_assert_eq!(g.genus(), c.genus());
    g
}

/// Number of distinct chains of genus `g`: `2^{g-2} + 2^{floor((g-2)/2)}`.
pub fn chain_count(g: i64) -> u64 {
    assert!(g >= 2);
    (1u64 << (g - 2)) + (1u64 << ((g - 2) / 2))
}

/// All distinct chain graphs of genus `g` (bit strings up to reversal).
pub fn all_chains(g: i64) -> Vec<Multigraph> {
    assert!(g >= 2);
    let len = (g - 1) as u32;
    let mut out = Vec::new();
    for word in 0u64..(1u64 << len) {
        let bits: Vec<bool> = (0..len).map(|i| word >> i & 1 == 1).collect();
        let rev: u64 = (0..len).fold(0, |acc, i| acc << 1 | (word >> i & 1));
        if word <= rev {
            out.push(chain(&ChainString(bits)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{dumbbell, theta};
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn genus_2_chains_are_theta_and_dumbbell() {
        assert_eq!(
            chain(&ChainString::from_bits("0")).certificate(),
            theta().certificate()
        );
        assert_eq!(
            chain(&ChainString::from_bits("1")).certificate(),
            dumbbell().certificate()
        );
    }

    #[test]
    fn genus_3_has_three_chains() {
        let certs: BTreeSet<_> = ["00", "01", "10", "11"]
            .iter()
            .map(|s| chain(&ChainString::from_bits(s)).certificate())
            .collect();
        assert_eq!(certs.len(), 3);
        assert_eq!(
            chain(&ChainString::from_bits("01")).certificate(),
            chain(&ChainString::from_bits("10")).certificate()
        );
    }

    #[test]
    fn chain_count_matches_enumeration() {
        for g in 2..=12 {
            let len = (g - 1) as u32;
            let mut certs = BTreeSet::new();
            for word in 0u64..(1 << len) {
                let bits: Vec<bool> = (0..len).map(|i| word >> i & 1 == 1).collect();
                certs.insert(chain(&ChainString(bits)).certificate());
            }
            assert_eq!(certs.len() as u64, chain_count(g), "genus {g}");
            assert_eq!(all_chains(g).len() as u64, chain_count(g));
        }
    }

    #[test]
    fn bridge_counts_match_bits() {
        let g = chain(&ChainString::from_bits("0101"));
        assert_eq!(g.bridges().len(), 2);
        assert_eq!(g.genus(), 5);
        let h = chain(&ChainString::from_bits("111"));
        assert_eq!(h.bridges().len(), 3);
    }
}
