//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are the dense indices `0..n`. Each vertex keeps its neighbourhood
//! as a `u64` bitset, so adjacency tests, degrees and breadth-first searches
//! are a handful of word operations. Graphs are immutable values: every
//! "mutating" operation returns a new graph.

mod canon;
mod format;
mod structure;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm, CANON_MAX_ORDER};
pub use format::{
    decode_graph6, encode_graph6, parse_edge_list, write_edge_list, GRAPH6_MAX_ORDER,
};
pub use structure::{structure_report, StructureReport, TwoColoring};

use crate::error::{invalid, Error, Result};

/// Largest order representable by the bitset rows.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    rows: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return invalid("graph order must be positive");
        }
        if n > MAX_ORDER {
            return Err(Error::CapacityExceeded {
                what: "graph order",
                limit: MAX_ORDER as u64,
                requested: n as u64,
            });
        }
        Ok(Graph { rows: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return invalid(format!("self-loop at vertex {u}"));
            }
            g.rows[u] |= bit(v);
            g.rows[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood bitsets without validation.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(!rows.is_empty() && rows.len() <= MAX_ORDER);
        Graph { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            invalid(format!("vertex {v} out of range for order {}", self.order()))
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.rows[u] & bit(v) != 0
    }

    /// Neighbourhood of `v` as a bitset.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.rows[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn pendant_count(&self) -> usize {
        self.rows.iter().filter(|r| r.count_ones() == 1).count()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order() {
            for v in BitIter(self.rows[u] & !((bit(u) << 1).wrapping_sub(1))) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return invalid(format!("self-loop at vertex {u}"));
        }
        let mut g = self.clone();
        g.rows[u] |= bit(v);
        g.rows[v] |= bit(u);
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return invalid(format!("({u}, {v}) is not an edge"));
        }
        let mut g = self.clone();
        g.rows[u] &= !bit(v);
        g.rows[v] &= !bit(u);
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n {
            return invalid("permutation length differs from graph order");
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= n || seen & bit(p) != 0 {
                return invalid("not a permutation of the vertex set");
            }
            seen |= bit(p);
        }
        let mut rows = vec![0u64; n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= bit(perm[v]);
            rows[perm[v]] |= bit(perm[u]);
        }
        Ok(Graph { rows })
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut g = Graph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            self.check_vertex(u)?;
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.rows[i] |= bit(j);
                    g.rows[j] |= bit(i);
                }
            }
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        self.component_mask(0, 0) == full_mask(self.order())
    }

    /// Vertices reachable from `start` without passing through `blocked`.
    pub(crate) fn component_mask(&self, start: usize, blocked: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.rows[v];
            }
            next &= !seen & !blocked;
            seen |= next;
            frontier = next;
        }
        seen
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

/// Iterates the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return invalid(format!("cycle needs at least 3 vertices, got {n}"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// `P_n`; `P_1` is the trivial graph.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return invalid("path needs at least 1 vertex");
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    let all = full_mask(n);
    for v in 0..n {
        g.rows[v] = all & !bit(v);
    }
    Ok(g)
}

/// Coalescence `G1(v) ◇ G2(u)`: identifies `v` of `g1` with `u` of `g2`.
///
/// Vertices of `g1` keep their indices and the merged vertex is `v`. The
/// remaining vertices of `g2` are appended in increasing original index.
pub fn coalesce(g1: &Graph, v: usize, g2: &Graph, u: usize) -> Result<Graph> {
    g1.check_vertex(v)?;
    g2.check_vertex(u)?;
    let n = g1.order() + g2.order() - 1;
    let mut g = Graph::empty(n)?;
    g.rows[..g1.order()].copy_from_slice(&g1.rows);
    let map = |w: usize| -> usize {
        match w.cmp(&u) {
            std::cmp::Ordering::Equal => v,
            std::cmp::Ordering::Less => g1.order() + w,
            std::cmp::Ordering::Greater => g1.order() + w - 1,
        }
    };
    for (a, b) in g2.edges() {
        let (a, b) = (map(a), map(b));
        g.rows[a] |= bit(b);
        g.rows[b] |= bit(a);
    }
    Ok(g)
}

/// Adds `m` new degree-one vertices adjacent to `v`, appended after the
/// existing vertices.
pub fn attach_pendants(g: &Graph, v: usize, m: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    let n = g.order();
    let mut out = Graph::empty(n + m)?;
    out.rows[..n].copy_from_slice(&g.rows);
    for p in n..n + m {
        out.rows[p] |= bit(v);
        out.rows[v] |= bit(p);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_constructor() {
        let c3 = cycle_graph(3).unwrap();
        assert_eq!(c3.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(c5.order(), 5);
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.degrees().iter().all(|&d| d == 2));
        assert!(matches!(cycle_graph(2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn path_constructor() {
        let p1 = path_graph(1).unwrap();
        assert_eq!((p1.order(), p1.edge_count()), (1, 0));
        assert_eq!(path_graph(2).unwrap().edges(), vec![(0, 1)]);
        assert_eq!(path_graph(4).unwrap().degrees(), vec![1, 2, 2, 1]);
        assert!(path_graph(0).is_err());
    }

    #[test]
    fn complete_constructor() {
        let k4 = complete_graph(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.degrees().iter().all(|&d| d == 3));
        let k1 = complete_graph(1).unwrap();
        assert_eq!((k1.order(), k1.edge_count()), (1, 0));
        assert_eq!(complete_graph(3).unwrap(), cycle_graph(3).unwrap());
        assert!(complete_graph(0).is_err());
    }

    #[test]
    fn coalescence() {
        let c3 = cycle_graph(3).unwrap();
        let p2 = path_graph(2).unwrap();
        let g = coalesce(&c3, 2, &p2, 0).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degrees(), vec![2, 2, 3, 1]);

        assert_eq!(coalesce(&p2, 0, &p2, 0).unwrap().degrees(), vec![2, 1, 1]);
        assert!(is_isomorphic(&coalesce(&p2, 0, &p2, 0).unwrap(), &path_graph(3).unwrap()).unwrap());

        let bowtie = coalesce(&c3, 0, &c3, 0).unwrap();
        assert_eq!((bowtie.order(), bowtie.edge_count(), bowtie.degree(0)), (5, 6, 4));

        assert!(coalesce(&c3, 3, &p2, 0).is_err());
        assert!(coalesce(&c3, 0, &p2, 2).is_err());
    }

    #[test]
    fn coalesce_reindexes_second_graph() {
        // P_3 glued at its middle vertex: 0 and 2 of P_3 become 3 and 4.
        let c3 = cycle_graph(3).unwrap();
        let g = coalesce(&c3, 1, &path_graph(3).unwrap(), 1).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2), (1, 3), (1, 4)]);
    }

    #[test]
    fn pendants() {
        let c3 = cycle_graph(3).unwrap();
        let g = attach_pendants(&c3, 0, 2).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.pendant_count(), 2);
        assert_eq!(attach_pendants(&c3, 1, 0).unwrap(), c3);
        let star = attach_pendants(&path_graph(1).unwrap(), 0, 3).unwrap();
        assert_eq!(star.degrees(), vec![3, 1, 1, 1]);
        assert!(attach_pendants(&c3, 7, 1).is_err());
    }

    #[test]
    fn edge_edits_and_errors() {
        let p3 = path_graph(3).unwrap();
        assert!(p3.with_edge(0, 2).unwrap().has_edge(2, 0));
        assert_eq!(p3.without_edge(0, 1).unwrap().edge_count(), 1);
        assert!(p3.without_edge(0, 2).is_err());
        assert!(p3.with_edge(1, 1).is_err());
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(matches!(
            Graph::empty(65),
            Err(Error::CapacityExceeded { .. })
        ));
        assert!(p3.permuted(&[0, 0, 1]).is_err());
    }
}
