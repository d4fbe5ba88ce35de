use std::collections::VecDeque;

use super::Graph;

/// A proper 2-colouring: every edge joins a part-0 vertex to a part-1 vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoColoring {
    pub part: Vec<u8>,
}

impl TwoColoring {
    pub fn is_proper_for(&self, g: &Graph) -> bool {
        self.part.len() == g.order() && g.edges().iter().all(|&(u, v)| self.part[u] != self.part[v])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub connected: bool,
    /// Witness colouring, absent when the graph has an odd cycle.
    pub bipartite: Option<TwoColoring>,
    /// Absent for forests.
    pub girth: Option<usize>,
    /// Absent for bipartite graphs.
    pub odd_girth: Option<usize>,
    pub pendant_count: usize,
    pub min_degree: usize,
    pub degrees: Vec<usize>,
}

pub fn structure_report(g: &Graph) -> StructureReport {
    let degrees = g.degrees();
    let (girth, odd_girth) = girths(g);
    StructureReport {
        connected: g.is_connected(),
        bipartite: two_coloring(g),
        girth,
        odd_girth,
        pendant_count: degrees.iter().filter(|&&d| d == 1).count(),
        min_degree: degrees.iter().copied().min().unwrap_or(0),
        degrees,
    }
}

/// Breadth-first 2-colouring over every component; lowest vertex of each
/// component gets part 0.
pub(crate) fn two_coloring(g: &Graph) -> Option<TwoColoring> {
    let n = g.order();
    let mut part = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if part[s] != u8::MAX {
            continue;
        }
        part[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if part[w] == u8::MAX {
                    part[w] = 1 - part[u];
                    queue.push_back(w);
                } else if part[w] == part[u] {
                    return None;
                }
            }
        }
    }
    Some(TwoColoring { part })
}

/// Shortest cycle and shortest odd cycle from one breadth-first search per
/// root. A non-tree edge `uw` closes a walk of length `d(u) + d(w) + 1`; an
/// edge between equal levels closes an odd one.
fn girths(g: &Graph) -> (Option<usize>, Option<usize>) {
    let n = g.order();
    let mut girth = usize::MAX;
    let mut odd = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    girth = girth.min(dist[u] + dist[w] + 1);
                    if dist[u] == dist[w] {
                        odd = odd.min(2 * dist[u] + 1);
                    }
                }
            }
        }
    }
    let wrap = |x: usize| (x != usize::MAX).then_some(x);
    (wrap(girth), wrap(odd))
}
