// Least eigenvalues of three clique-with-pendants graphs, and two explicit
// eigenvectors of K(2,2,2,0) checked against the solver.

use qspec::families::{build_k, PendantProfile};
use qspec::spectra::{q_min_of, rayleigh, residual, Tolerances, VertexVector};

fn main() {
    let tol = Tolerances::default();
    let exact = (5.0 - 17f64.sqrt()) / 2.0;
    println!("(5 − √17)/2 = {exact:.12}");

    for entries in [vec![2, 2, 2, 0], vec![2, 2, 1, 1], vec![2, 2, 2, 1]] {
        let k = build_k(&PendantProfile::new(entries).unwrap()).unwrap();
        let least = q_min_of(&k.graph, &tol).unwrap();
        println!(
            "K{}: order {}, q_min {:.12}, multiplicity {}",
            k.profile,
            k.graph.order(),
            least.value,
            least.multiplicity
        );
    }

    let k = build_k(&PendantProfile::new(vec![2, 2, 2, 0]).unwrap()).unwrap();
    let a = (17f64.sqrt() - 3.0) / 2.0;
    let x = VertexVector(vec![a, 0.0, -a, 0.0, -1.0, -1.0, 0.0, 0.0, 1.0, 1.0]).normalized();
    let y = VertexVector(vec![a, -a, 0.0, 0.0, -1.0, -1.0, 1.0, 1.0, 0.0, 0.0]).normalized();
    for (name, v) in [("x", &x), ("y", &y)] {
        println!(
            "{name}: Rayleigh quotient {:.12}, residual {:.1e}",
            rayleigh(&k.graph, v).unwrap(),
            residual(&k.graph, exact, v).unwrap()
        );
    }
}
