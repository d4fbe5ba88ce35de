mod common;

use qspec::analysis::{check_bipartite_branch, check_tree_monotone, split_branches, ZERO_TOL};
use qspec::families::build_u_std;
use qspec::graph::{encode_graph6, structure_report};
use qspec::spectra::{q_min_of, Tolerances};
use qspec::Graph;

use common::connected_classes;

fn check_all_branches(g: &Graph) -> usize {
    let pair = q_min_of(g, &Tolerances::default()).unwrap();
    let mut checked = 0;
    for v in 0..g.order() {
        let branches = split_branches(g, v).unwrap();
        if branches.len() < 2 {
            continue;
        }
        for b in &branches {
            let sub = g.induced(b.members()).unwrap();
            if structure_report(&sub).bipartite.is_none() {
                continue;
            }
            let r = check_bipartite_branch(g, &pair.vector, b, ZERO_TOL).unwrap();
            assert!(r.passed, "{} at {v}: {r}", encode_graph6(g).unwrap());
            checked += 1;
        }
    }
    checked
}

#[test]
fn bipartite_branches_of_small_nonbipartite_graphs() {
    let mut checked = 0;
    for n in 3..=7 {
        for g in connected_classes(n) {
            if structure_report(&g).bipartite.is_none() {
                checked += check_all_branches(&g);
            }
        }
    }
    assert!(checked > 500, "only {checked} branches");
}

#[test]
fn pendant_path_magnitudes_increase() {
    for n in 6..=12 {
        let u = build_u_std(n, 1, 3).unwrap();
        let pair = q_min_of(&u.graph, &Tolerances::default()).unwrap();
        let root = u.landmarks.cycle_vertex(3);
        let branch = split_branches(&u.graph, root)
            .unwrap()
            .into_iter()
            .find(|b| b.members().len() > 1 && !b.members().contains(&u.landmarks.cycle_vertex(1)))
            .unwrap();
        let r = check_tree_monotone(&u.graph, &pair.vector, &branch).unwrap();
        assert!(r.passed, "n={n}: {r}");
    }
}
