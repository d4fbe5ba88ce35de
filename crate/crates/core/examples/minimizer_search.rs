// Exhaustive minimum of q_min over connected non-bipartite graphs and over
// unicyclic graphs, compared with the U family.

use qspec::extremal::{find_extremal, ClassQuery, Objective, SearchConfig};
use qspec::families::build_u_std;
use qspec::graph::{encode_graph6, is_isomorphic};

fn main() {
    let cfg = SearchConfig::with_shards(4);
    for k in 1..=3 {
        let r = find_extremal(&ClassQuery::nonbipartite(6, k), Objective::Min, &cfg).unwrap();
        let u = build_u_std(6, k, 3).unwrap();
        let same = r.witnesses.len() == 1 && is_isomorphic(&r.witnesses[0], &u.graph).unwrap();
        println!(
            "n=6 k={k}: {} graphs, min {:.10}, witness {}, matches U(3): {same}",
            r.graphs_examined,
            r.extremal_value,
            encode_graph6(&r.witnesses[0]).unwrap()
        );
    }
    let r = find_extremal(&ClassQuery::unicyclic(8, 2, 5), Objective::Min, &cfg).unwrap();
    let u = build_u_std(8, 2, 5).unwrap();
    println!(
        "unicyclic n=8 k=2 g=5: {} graphs in {:.2?}, min {:.10}, matches U(5): {}",
        r.graphs_examined,
        r.elapsed,
        r.extremal_value,
        is_isomorphic(&r.witnesses[0], &u.graph).unwrap()
    );
}
