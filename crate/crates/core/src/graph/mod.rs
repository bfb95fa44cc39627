//! Finite multigraphs with loops and parallel edges: the skeleton data
//! type, canonical certificates, bridges, trivalent generation, and chain
//! graphs.

mod canon;
mod chains;
mod generate;
pub mod skeleton;

pub use canon::{brute_force_isomorphic, Certificate};
pub use chains::{chain, chain_count, ChainString};
pub use generate::enumerate_trivalent;

use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// A finite undirected multigraph. Loops are edges `(v, v)` and count twice
/// toward the degree of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(u32, u32)>,
}

impl Multigraph {
    pub fn new(n: usize, mut edges: Vec<(u32, u32)>) -> Multigraph {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
            assert!((e.1 as usize) < n, "edge endpoint out of range");
        }
        edges.sort_unstable();
        Multigraph { n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            d[a as usize] += 1;
            d[b as usize] += 1;
        }
        d
    }

    pub fn is_trivalent(&self) -> bool {
        self.degrees().iter().all(|&d| d == 3)
    }

    /// First Betti number `|E| - |V| + 1` of a connected graph.
    pub fn genus(&self) -> i64 {
        self.edges.len() as i64 - self.n as i64 + 1
    }

    pub fn loop_count(&self, v: u32) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v && b == v).count()
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0u8; self.n]; self.n];
        for &(a, b) in &self.edges {
            if a == b {
                m[a as usize][a as usize] += 1;
            } else {
                m[a as usize][b as usize] += 1;
                m[b as usize][a as usize] += 1;
            }
        }
        m
    }

    pub fn neighbors(&self, v: u32) -> Vec<u32> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v && b != v {
                out.push(b);
            } else if b == v && a != v {
                out.push(a);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    fn component_of(&self, start: u32) -> Vec<u32> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start as usize] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        (0..self.n as u32).filter(|&v| seen[v as usize]).collect()
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n as u32 {
            if seen[s as usize] {
                continue;
            }
            let comp = self.component_of(s);
            for &v in &comp {
                seen[v as usize] = true;
            }
            out.push(comp);
        }
        out
    }

    /// The subgraph induced on `keep` (relabels vertices by sorted order).
    pub fn induced(&self, keep: &[u32]) -> Multigraph {
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let relabel = |v: u32| sorted.binary_search(&v).ok().map(|i| i as u32);
        let edges = self
            .edges
            .iter()
            .filter_map(|&(a, b)| Some((relabel(a)?, relabel(b)?)))
            .collect();
        Multigraph::new(sorted.len(), edges)
    }

    /// Bridges of a connected multigraph. Loops and parallel edges are never
    /// bridges.
    pub fn bridges(&self) -> Vec<(u32, u32)> {
        let n = self.n;
        let mut adj: Vec<Vec<(u32, usize)>> = vec![Vec::new(); n];
        for (idx, &(a, b)) in self.edges.iter().enumerate() {
            if a == b {
                continue;
            }
            adj[a as usize].push((b, idx));
            adj[b as usize].push((a, idx));
        }
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![usize::MAX; n];
        let mut out = Vec::new();
        let mut clock = 0usize;
        // Iterative DFS: (vertex, parent edge id, next adjacency index).
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = clock;
            low[root] = clock;
            clock += 1;
            while let Some(&mut (v, pe, ref mut i)) = stack.last_mut() {
                if *i < adj[v].len() {
                    let (w, eid) = adj[v][*i];
                    *i += 1;
                    if eid == pe {
                        continue;
                    }
                    let w = w as usize;
                    if disc[w] == usize::MAX {
                        disc[w] = clock;
                        low[w] = clock;
                        clock += 1;
                        stack.push((w, eid, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (u, _, _)) = stack.last_mut() {
                        low[u] = low[u].min(low[v]);
                        if low[v] > disc[u] {
                            let (a, b) = self.edges[pe];
                            out.push((a, b));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// 2-edge-connected components: the connected components left after
    /// deleting all bridges, as sorted vertex lists.
    pub fn two_edge_components(&self) -> Vec<Vec<u32>> {
        let mut bridges = self.bridges();
        let mut stripped_edges: Vec<(u32, u32)> = Vec::new();
        for &(a, b) in &self.edges {
            if let Some(k) = bridges.iter().position(|&e| e == (a, b)) {
                bridges.swap_remove(k);
            } else {
                stripped_edges.push((a, b));
            }
        }
        Multigraph::new(self.n, stripped_edges).components()
    }

    pub fn is_two_edge_connected(&self) -> bool {
        self.is_connected() && self.bridges().is_empty()
    }

    /// Serializes as `"n m : u-v u-v ..."`.
    pub fn to_line(&self) -> String {
        let mut s = format!("{} {} :", self.n, self.edges.len());
        for &(a, b) in &self.edges {
            s.push_str(&format!(" {a}-{b}"));
        }
        s
    }
}

#[derive(Debug, Error)]
pub enum GraphParseError {
    #[error("malformed graph line: {0}")]
    Malformed(String),
}

impl FromStr for Multigraph {
    type Err = GraphParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphParseError::Malformed(s.to_string());
        let (head, tail) = s.split_once(':').ok_or_else(bad)?;
        let mut hw = head.split_whitespace();
        let n: usize = hw.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let m: usize = hw.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let mut edges = Vec::with_capacity(m);
        for tok in tail.split_whitespace() {
            let (a, b) = tok.split_once('-').ok_or_else(bad)?;
            let a: u32 = a.parse().map_err(|_| bad())?;
            let b: u32 = b.parse().map_err(|_| bad())?;
            if a as usize >= n || b as usize >= n {
                return Err(bad());
            }
            edges.push((a, b));
        }
        if edges.len() != m {
            return Err(bad());
        }
        Ok(Multigraph::new(n, edges))
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

/// The two-vertex graph with three parallel edges.
pub fn theta() -> Multigraph {
    Multigraph::new(2, vec![(0, 1), (0, 1), (0, 1)])
}

/// Two loops joined by a bridge.
pub fn dumbbell() -> Multigraph {
    Multigraph::new(2, vec![(0, 0), (1, 1), (0, 1)])
}

/// The single-vertex loop: the degenerate genus-1 skeleton.
pub fn bare_loop() -> Multigraph {
    Multigraph::new(1, vec![(0, 0)])
}

/// Complete bipartite graph K_{3,3}: the one nonplanar trivalent graph of
/// genus 4.
pub fn k33() -> Multigraph {
    let mut edges = Vec::new();
    for a in 0..3u32 {
        for b in 3..6u32 {
            edges.push((a, b));
        }
    }
    Multigraph::new(6, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_count_loops_twice() {
        let g = dumbbell();
        assert_eq!(g.degrees(), vec![3, 3]);
        assert!(g.is_trivalent());
    }

    #[test]
    fn genus_of_standard_graphs() {
        assert_eq!(theta().genus(), 2);
        assert_eq!(dumbbell().genus(), 2);
        assert_eq!(bare_loop().genus(), 1);
        assert_eq!(k33().genus(), 4);
        // |V| = 2g - 2 for connected trivalent graphs.
        for g in [theta(), dumbbell(), k33()] {
            assert_eq!(g.vertex_count() as i64, 2 * g.genus() - 2);
        }
    }

    #[test]
    fn dumbbell_has_one_bridge() {
        let g = dumbbell();
        assert_eq!(g.bridges(), vec![(0, 1)]);
        assert_eq!(g.two_edge_components(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn theta_is_two_edge_connected() {
        assert!(theta().bridges().is_empty());
        assert_eq!(theta().two_edge_components().len(), 1);
    }

    #[test]
    fn parallel_edges_are_not_bridges() {
        let g = Multigraph::new(3, vec![(0, 1), (0, 1), (1, 2), (1, 2), (2, 2), (0, 0)]);
        assert!(g.bridges().is_empty());
    }

    #[test]
    fn line_round_trip() {
        let g = dumbbell();
        let line = g.to_line();
        assert_eq!(line, "2 3 : 0-0 0-1 1-1");
        let back: Multigraph = line.parse().unwrap();
        assert_eq!(back, g);
    }
}
