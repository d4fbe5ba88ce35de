#![allow(dead_code)]

use std::collections::BTreeSet;

use qspec::graph::canonical_form;
use qspec::Graph;
use rand::Rng;

/// Every labeled graph on `n` vertices, edges in column order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

pub fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    all_graphs(n).filter(Graph::is_connected)
}

/// One representative per isomorphism class of connected graphs.
pub fn connected_classes(n: usize) -> Vec<Graph> {
    let forms: BTreeSet<_> = connected_graphs(n).map(|g| canonical_form(&g).unwrap()).collect();
    forms.iter().map(|c| c.to_graph()).collect()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}
