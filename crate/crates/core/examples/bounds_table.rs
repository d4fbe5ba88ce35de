// Closed-form upper bounds side by side, and how close the best graphs get.

use qspec::bounds::{bound_pendant, bound_submatrix, bounds_csv, compare_bounds};
use qspec::extremal::{find_extremal, ClassQuery, Objective, SearchConfig};

fn main() {
    print!("{}", bounds_csv(&compare_bounds([4, 5, 6, 10, 20, 50]).unwrap()));

    println!();
    println!("n k  max q_min     submatrix     pendant");
    let cfg = SearchConfig::with_shards(4);
    for (n, k) in [(6, 1), (6, 3), (7, 2), (7, 4)] {
        let r = find_extremal(&ClassQuery::nonbipartite(n, k), Objective::Max, &cfg).unwrap();
        println!(
            "{n} {k}  {:.10}  {:.10}  {:.10}",
            r.extremal_value,
            bound_submatrix(n, k).unwrap(),
            bound_pendant(n, k).unwrap()
        );
    }
}
