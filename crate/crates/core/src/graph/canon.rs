//! Canonical labelling for small graphs.
//!
//! The canonical code is the lexicographically smallest column-order
//! adjacency bit string over all labellings that list vertices by
//! non-decreasing degree. Degree classes are invariant under isomorphism, so
//! the restriction keeps the code canonical while cutting the search to the
//! product of the class factorials. Partial codes that already exceed the
//! best one are pruned.

use super::{bit, Graph};
use crate::error::{Error, Result};

pub const CANON_MAX_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub order: usize,
    /// Upper-triangle bits in column order, first bit most significant.
    pub code: u64,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        let n = self.order;
        let total = n * n.saturating_sub(1) / 2;
        let mut rows = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> (total - 1 - k) & 1 == 1 {
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
                k += 1;
            }
        }
        Graph::from_rows_unchecked(rows)
    }
}

struct Search<'a> {
    g: &'a Graph,
    total: usize,
    slot_class: Vec<usize>,
    class_members: Vec<Vec<usize>>,
    perm: Vec<usize>,
    used: u64,
    best: Option<u64>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, prefix: u64) {
        let n = self.g.order();
        if pos == n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let class = self.slot_class[pos];
        for idx in 0..self.class_members[class].len() {
            let v = self.class_members[class][idx];
            if self.used & bit(v) != 0 {
                continue;
            }
            let mut code = prefix;
            for &w in &self.perm[..pos] {
                code = (code << 1) | self.g.has_edge(w, v) as u64;
            }
            let len = pos * (pos + 1) / 2;
            if let Some(best) = self.best {
                if code > best >> (self.total - len) {
                    continue;
                }
            }
            self.perm.push(v);
            self.used |= bit(v);
            self.run(pos + 1, code);
            self.used &= !bit(v);
            self.perm.pop();
        }
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(Error::CapacityExceeded {
            what: "isomorphism test order",
            limit: CANON_MAX_ORDER as u64,
            requested: n as u64,
        });
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut class_members: Vec<Vec<usize>> = Vec::new();
    let mut slot_class = Vec::with_capacity(n);
    let mut last = usize::MAX;
    for &v in &by_degree {
        if g.degree(v) != last {
            class_members.push(Vec::new());
            last = g.degree(v);
        }
        class_members.last_mut().unwrap().push(v);
        slot_class.push(class_members.len() - 1);
    }
    let mut search = Search {
        g,
        total: n * n.saturating_sub(1) / 2,
        slot_class,
        class_members,
        perm: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    search.run(0, 0);
    Ok(CanonicalForm {
        order: n,
        code: search.best.unwrap_or(0),
    })
}

/// Isomorphism test for graphs of order at most [`CANON_MAX_ORDER`].
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.order() > CANON_MAX_ORDER {
            return Err(Error::CapacityExceeded {
                what: "isomorphism test order",
                limit: CANON_MAX_ORDER as u64,
                requested: x.order() as u64,
            });
        }
    }
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{attach_pendants, complete_graph, cycle_graph, path_graph};

    #[test]
    fn relabelled_cycle() {
        let c5 = cycle_graph(5).unwrap();
        let shuffled = c5.permuted(&[3, 0, 4, 1, 2]).unwrap();
        assert!(is_isomorphic(&c5, &shuffled).unwrap());
        assert_eq!(canonical_form(&c5).unwrap(), canonical_form(&shuffled).unwrap());
    }

    #[test]
    fn path_versus_star() {
        let star = attach_pendants(&path_graph(1).unwrap(), 0, 3).unwrap();
        assert!(!is_isomorphic(&path_graph(4).unwrap(), &star).unwrap());
    }

    #[test]
    fn same_degrees_different_graphs() {
        // C_6 versus two disjoint triangles: both 2-regular on 6 vertices.
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_isomorphic(&cycle_graph(6).unwrap(), &two_triangles).unwrap());
    }

    #[test]
    fn canonical_graph_round_trip() {
        let g = attach_pendants(&complete_graph(4).unwrap(), 2, 2).unwrap();
        let form = canonical_form(&g).unwrap();
        let cg = form.to_graph();
        assert!(is_isomorphic(&g, &cg).unwrap());
        assert_eq!(canonical_form(&cg).unwrap(), form);
    }

    #[test]
    fn order_cap() {
        let big = cycle_graph(11).unwrap();
        assert!(matches!(
            is_isomorphic(&big, &big),
            Err(Error::CapacityExceeded { .. })
        ));
    }
}
