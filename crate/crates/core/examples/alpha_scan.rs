// Least eigenvalue of U_15^k(g) across pendant counts and girths.

use qspec::extremal::alpha;
use qspec::spectra::Tolerances;

fn main() {
    let tol = Tolerances::default();
    println!("k   g=3           g=5           g=7");
    for k in 1..=5 {
        let row: Vec<String> = [3, 5, 7]
            .iter()
            .map(|&g| format!("{:.10}", alpha(15, k, g, &tol).unwrap()))
            .collect();
        println!("{k}   {}", row.join("  "));
    }
}
