// Jacobi eigenvalues next to the exact characteristic polynomial.

use qspec::graph::{complete_graph, cycle_graph, path_graph};
use qspec::spectra::{charpoly_oracle, eig_sym, oracle_spectrum, q_matrix};

fn main() {
    let graphs = [
        ("C5", cycle_graph(5).unwrap()),
        ("P6", path_graph(6).unwrap()),
        ("K4", complete_graph(4).unwrap()),
        ("C7", cycle_graph(7).unwrap()),
    ];
    for (name, g) in graphs {
        let m = q_matrix(&g);
        let numeric = eig_sym(&m, 1e-12).unwrap();
        let poly = charpoly_oracle(&m).unwrap();
        let exact = oracle_spectrum(&m).unwrap();
        println!("{name}: charpoly {:?}", poly.coefficients);
        println!("  jacobi  {:?}", numeric.eigenvalues);
        println!("  oracle  {exact:?}");
        println!(
            "  least: {:.3e} apart, residual bound {:.1e}",
            (numeric.eigenvalues[0] - poly.smallest_root).abs(),
            numeric.residual_bound
        );
    }
}
