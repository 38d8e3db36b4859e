//! Enumerate the nilpotent orbit census for a dimension vector: chain
//! types, component group orders, and the (orbit, character) pairs.
//!
//! Run with: cargo run --example orbit_census

use spirals::census::{census, enumerate_pairs};
use spirals::graded::GradedSpace;

fn main() {
    let space = GradedSpace::new(3, vec![2, 1, 1]);
    println!(
        "orbits on the degree-1 nilpotent cone for m = {}, dims {:?}\n",
        space.modulus(),
        space.dims()
    );
    println!("{:<16} {:>4} {:>6}", "chain type", "d'", "pairs");
    for row in census(&space) {
        println!(
            "{:<16} {:>4} {:>6}",
            row.orbit.to_string(),
            row.d_prime,
            row.pairs
        );
    }
    let pairs = enumerate_pairs(&space);
    println!("\ntotal (orbit, character) pairs: {}", pairs.len());

    // every orbit is realized by an explicit 0/1 matrix
    for row in census(&space) {
        let x = row.orbit.standard_element(space.modulus());
        let recovered = spirals::nilpotent::chain_type_of(&x).unwrap();
        assert_eq!(recovered, row.orbit);
    }
    println!("all chain types realized by their standard matrices");
}
