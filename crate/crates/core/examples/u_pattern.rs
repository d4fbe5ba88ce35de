// First eigenvector of a U graph laid out by landmark, with the structural
// checks on its signs and magnitudes.

use qspec::analysis::check_u_pattern;
use qspec::families::build_u_std;
use qspec::spectra::{q_min_of, Tolerances};

fn main() {
    let tol = Tolerances::default();
    let u = build_u_std(9, 2, 5).unwrap();
    let least = q_min_of(&u.graph, &tol).unwrap();
    let x = &least.vector;
    println!("U_9^2(5): q_min {:.10}, multiplicity {}", least.value, least.multiplicity);
    for (i, &v) in u.landmarks.cycle.iter().enumerate() {
        println!("  v{} (vertex {v}): {:+.6}", i + 1, x[v]);
    }
    for &v in &u.landmarks.stem[1..] {
        println!("  stem vertex {v}: {:+.6}", x[v]);
    }
    for v in u.landmarks.pendants() {
        println!("  pendant {v}: {:+.6}", x[v]);
    }
    let report = check_u_pattern(&u, x, &tol).unwrap();
    println!("pattern: {report}");
}
