// graph6 and edge-list formats, structure reports and canonical forms.

use qspec::graph::{
    canonical_form, decode_graph6, encode_graph6, is_isomorphic, parse_edge_list, structure_report, write_edge_list,
};

fn main() {
    for code in ["Bw", "DQc", "Ch", "I~aAA?_C?"] {
        let g = decode_graph6(code.as_bytes()).unwrap();
        let s = structure_report(&g);
        println!(
            "{code}: order {}, edges {:?}, bipartite {}, girth {:?}, pendants {}",
            g.order(),
            g.edges(),
            s.bipartite.is_some(),
            s.girth,
            s.pendant_count
        );
        assert_eq!(encode_graph6(&g).unwrap(), code);
    }

    let text = "4 4\n0 1\n1 2\n2 0\n2 3\n";
    let paw = parse_edge_list(text).unwrap();
    let relabeled = paw.permuted(&[3, 2, 1, 0]).unwrap();
    println!("paw as graph6: {}", encode_graph6(&paw).unwrap());
    println!("relabeled:     {}", encode_graph6(&relabeled).unwrap());
    println!("isomorphic: {}", is_isomorphic(&paw, &relabeled).unwrap());
    let canon = canonical_form(&relabeled).unwrap().to_graph();
    print!("canonical edge list:\n{}", write_edge_list(&canon));

    match decode_graph6(b"B!") {
        Ok(_) => unreachable!(),
        Err(e) => println!("B! → {e}"),
    }
}
