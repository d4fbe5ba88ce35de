// Moving a branch between vertices, and moving pendant edges between
// clique vertices.

use qspec::extremal::{majorization_scan, relocation_experiment};
use qspec::families::{build_k, build_u_std, PendantProfile};
use qspec::graph::path_graph;
use qspec::spectra::Tolerances;

fn main() {
    let tol = Tolerances::default();
    let p2 = path_graph(2).unwrap();

    // U_7^2(3) without one pendant; put it back on the stem end or on the
    // remaining pendant.
    let u = build_u_std(7, 2, 3).unwrap();
    let g1 = u.graph.induced(&[0, 1, 2, 3, 4, 5]).unwrap();
    let out = relocation_experiment(&g1, u.landmarks.pendants()[0], u.landmarks.stem_end(), &p2, 0, &tol).unwrap();
    println!(
        "stem end → pendant: {:.10} → {:.10} ({:?}, strict asserted: {}) {}",
        out.q_before, out.q_after, out.scope, out.asserted_strict, out.report
    );

    // K(2,2,1,1) → K(2,2,2,0) by moving the pendant edge of v4 to v3.
    let k = build_k(&PendantProfile::new(vec![2, 2, 1, 1]).unwrap()).unwrap();
    let keep: Vec<usize> = (0..9).collect();
    let g1 = k.graph.induced(&keep).unwrap();
    let out = relocation_experiment(&g1, k.clique[2], k.clique[3], &p2, 0, &tol).unwrap();
    println!(
        "K(2,2,1,1) → K(2,2,2,0): {:.12} → {:.12}, |x(v3)| = {:.1e}, equality defect {:.1e}",
        out.q_before, out.q_after, out.magnitude_v1, out.equality_defect
    );

    let scan = majorization_scan(4, 6, &tol).unwrap();
    print!("{}", scan.to_csv());
    println!("{}", scan.report);
}
