//! Computes the skew characteristic polynomial of a few oriented graphs by
//! all four routes and cross-checks them.
//!
//!     cargo run --example polynomial_routes

use skew_energy::input::parse_oriented_input;
use skew_energy::spectrum::{
    char_poly_expansion, char_poly_oracle, char_poly_recurrence_edge, char_poly_recurrence_vertex,
};
use skew_energy::OrientedGraph;

fn main() {
    for input in [
        "P:n=2",
        "P:n=5",
        "S:n=5",
        "C:n=4,orient=+",
        "C:n=4,orient=-",
        "U:n=7,d=4,orient=-",
        "B:n=7,d=4,orient=---",
        "B:n=9,d=4,orient=+-+",
    ] {
        let og = parse_oriented_input(input).expect("valid spec");
        show(input, &og);
    }

    // The same works for any explicit arc list.
    let custom = OrientedGraph::from_arcs(
        6,
        &[(0, 1), (2, 1), (2, 3), (3, 0), (3, 4), (5, 4), (5, 0)],
    )
    .expect("simple oriented graph");
    show("custom 6-vertex arc list", &custom);
}

fn show(label: &str, og: &OrientedGraph) {
    let expansion = char_poly_expansion(og);
    let edge = char_poly_recurrence_edge(og, og.arc(0)).expect("has an arc");
    let vertex = char_poly_recurrence_vertex(og, 0).expect("has a vertex");
    let oracle = char_poly_oracle(og).expect("interpolation is exact");
    let agree = expansion == edge && edge == vertex && vertex == oracle;
    println!("{label}");
    println!("  phi = {expansion}");
    println!("  coefficients {:?}", expansion.coeff_strings());
    println!("  four routes agree: {agree}");
    assert!(agree);
}
