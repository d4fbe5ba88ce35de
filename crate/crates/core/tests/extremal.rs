mod common;

use qspec::extremal::{alpha, enumerate_class, find_extremal, ClassQuery, Objective, SearchConfig};
use qspec::families::build_u_std;
use qspec::graph::{canonical_form, complete_graph, cycle_graph, structure_report};
use qspec::spectra::{charpoly_oracle, least_eigenvalue, oracle_spectrum, q_matrix, Tolerances};
use qspec::Graph;

use common::all_graphs;

fn brute_force_member(g: &Graph, q: &ClassQuery) -> bool {
    let s = structure_report(g);
    if s.pendant_count != q.k || (q.require_connected && !s.connected) {
        return false;
    }
    if q.require_nonbipartite && s.bipartite.is_some() {
        return false;
    }
    match q.unicyclic_girth {
        Some(girth) => g.edge_count() == g.order() && s.girth == Some(girth),
        None => true,
    }
}

#[test]
fn class_counts_match_brute_force() {
    let cfg = SearchConfig::with_shards(3);
    let mut queries = Vec::new();
    for n in 4..=6 {
        for k in 0..=n - 3 {
            queries.push(ClassQuery::nonbipartite(n, k));
            for g in [3, 5] {
                if g <= n {
                    queries.push(ClassQuery::unicyclic(n, k, g));
                }
            }
        }
    }
    for q in queries {
        let expected = all_graphs(q.n).filter(|g| brute_force_member(g, &q)).count() as u64;
        let mut seen = Vec::new();
        let count = enumerate_class(&q, &cfg, |g| {
            assert!(brute_force_member(g, &q));
            seen.push(g.edges());
        })
        .unwrap();
        assert_eq!(count, expected, "{q:?}");
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len() as u64, count, "{q:?} visited a graph twice");
    }
}

#[test]
fn minimizer_lower_bounds_every_class_member() {
    let cfg = SearchConfig::default();
    let tol = Tolerances::default();
    for n in 5..=7 {
        for k in 1..=n - 3 {
            let u = build_u_std(n, k, 3).unwrap().graph;
            let floor = least_eigenvalue(&u, tol.eig).unwrap();
            let target = canonical_form(&u).unwrap();
            enumerate_class(&ClassQuery::nonbipartite(n, k), &cfg, |g| {
                let q = least_eigenvalue(g, tol.eig).unwrap();
                assert!(q >= floor - 1e-8);
                if q <= floor + 1e-8 {
                    assert_eq!(canonical_form(g).unwrap(), target);
                }
            })
            .unwrap();
        }
    }
}

#[test]
fn witnesses_attain_the_extremal_value() {
    let cfg = SearchConfig::with_shards(2);
    for obj in [Objective::Min, Objective::Max] {
        let q = ClassQuery::nonbipartite(7, 2);
        let r = find_extremal(&q, obj, &cfg).unwrap();
        assert!(!r.witnesses.is_empty());
        for w in &r.witnesses {
            assert!(brute_force_member(w, &q));
            let v = least_eigenvalue(w, 1e-10).unwrap();
            assert!((v - r.extremal_value).abs() <= 1e-8 * (1.0 + r.extremal_value.abs()));
        }
    }
}

#[test]
fn alpha_pinned_by_exact_polynomial() {
    let u = build_u_std(5, 1, 3).unwrap().graph;
    let exact = charpoly_oracle(&q_matrix(&u)).unwrap().smallest_root;
    let a = alpha(5, 1, 3, &Tolerances::default()).unwrap();
    assert!((a - exact).abs() < 1e-9);
    assert!(a > 0.0 && a < 1.0);
}

#[test]
fn interlacing_against_exact_spectra() {
    let k4 = complete_graph(4).unwrap();
    let full = oracle_spectrum(&q_matrix(&k4)).unwrap();
    let less = oracle_spectrum(&q_matrix(&k4.without_edge(0, 1).unwrap())).unwrap();
    assert_eq!(full.len(), 4);
    for i in 0..4 {
        assert!(less[i] <= full[i] + 1e-9);
        if i + 1 < 4 {
            assert!(full[i] <= less[i + 1] + 1e-9);
        }
    }
    let c5 = cycle_graph(5).unwrap();
    let full = oracle_spectrum(&q_matrix(&c5)).unwrap();
    let less = oracle_spectrum(&q_matrix(&c5.without_edge(0, 4).unwrap())).unwrap();
    for i in 0..5 {
        assert!(less[i] <= full[i] + 1e-9);
        if i + 1 < 5 {
            assert!(full[i] <= less[i + 1] + 1e-9);
        }
    }
}
