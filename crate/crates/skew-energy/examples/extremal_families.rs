//! Builds the named extremal families and walks the quasi-order chain that
//! the minimality argument rests on: star, path-with-star tree, evenly
//! oriented quadrilateral member, all-evenly theta member.
//!
//!     cargo run --example extremal_families

use skew_energy::families::{build, verify_family_shape, CycleClass, FamilySpec};
use skew_energy::spectrum::{char_poly_expansion, quasi_compare, skew_energy_spectral};

fn main() {
    let n = 9;
    let d = 4;
    let star = FamilySpec::Star { n };
    let tree = FamilySpec::T { n, d };
    let unicyclic = FamilySpec::U {
        n,
        d,
        orient: CycleClass::Minus,
    };
    let bicyclic = FamilySpec::B {
        n,
        d,
        orient: [CycleClass::Minus; 3],
    };

    let mut chain = Vec::new();
    for spec in [star, tree, unicyclic, bicyclic] {
        let og = build(&spec).unwrap();
        assert!(verify_family_shape(&og, &spec));
        let poly = char_poly_expansion(&og);
        let energy = skew_energy_spectral(&og);
        println!(
            "{spec:<22} n={} m={} phi = {poly}  E = {energy:.8}",
            og.n(),
            og.m()
        );
        chain.push(poly);
    }

    // Each member dominates the previous one coefficientwise; the energies
    // follow suit.
    for pair in chain.windows(2) {
        let order = quasi_compare(&pair[0], &pair[1]).unwrap();
        println!("  {} vs {}: {order:?}", pair[0], pair[1]);
    }

    // Unrealizable orientation triples are refused: the three quadrilateral
    // parities satisfy one relation.
    let bad = FamilySpec::B {
        n,
        d,
        orient: [CycleClass::Minus, CycleClass::Minus, CycleClass::Plus],
    };
    println!("\nB with triple --+: {:?}", build(&bad).err().unwrap().to_string());
}
