// Exhaustive maximum of q_min with k pendant vertices, and every graph that
// attains it.

use qspec::extremal::{find_extremal, ClassQuery, Objective, SearchConfig};
use qspec::families::{balanced_profile, build_k};
use qspec::graph::{encode_graph6, is_isomorphic};

fn main() {
    let cfg = SearchConfig::with_shards(4);
    for k in 1..=4 {
        let profile = balanced_profile(7, k).unwrap();
        let kg = build_k(&profile).unwrap();
        let r = find_extremal(&ClassQuery::nonbipartite(7, k), Objective::Max, &cfg).unwrap();
        println!("n=7 k={k}: max {:.10} over {} graphs", r.extremal_value, r.graphs_examined);
        for w in &r.witnesses {
            let tag = if is_isomorphic(w, &kg.graph).unwrap() {
                format!("  = K{profile}")
            } else {
                String::new()
            };
            println!("  {}{tag}", encode_graph6(w).unwrap());
        }
    }
}
