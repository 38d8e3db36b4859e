//! Symplectic quiver combinatorics: the block set (a', a'') cut out by the
//! window allocation, and the duality involution on the chain quiver of a
//! symplectic cocharacter with its at-most-two stable chains.
//!
//! Run with: cargo run --example symplectic_blocks

use spirals::rat::Rat;
use spirals::symplectic::{sp_blocks_report, sp_spiral_chains, SpCocharacter, SymplecticDims};

fn main() {
    let sd = SymplecticDims::from_free(2, vec![2]).unwrap();
    let report = sp_blocks_report(&sd);
    println!("{}", serde_json::to_string_pretty(&report).unwrap());

    // weights 1/2, -1/2 at label 1/2; duality forces the mirror at 3/2
    let mu = SpCocharacter::new(
        sd,
        vec![
            vec![Rat::new(1, 2), Rat::new(-1, 2)],
            vec![Rat::new(-1, 2), Rat::new(1, 2)],
        ],
    )
    .unwrap();
    let chains = sp_spiral_chains(&mu).unwrap();
    println!("\nvertices:");
    for v in &chains.vertices {
        println!(
            "  label {}/2 weight {} multiplicity {}",
            2 * v.slot + 1,
            v.x,
            v.mult
        );
    }
    println!("chains: {:?}", chains.chains);
    match chains.q_prime {
        Some(c) => println!("diagonal stable chain: {:?}", chains.chains[c]),
        None => println!("no diagonal stable chain"),
    }
    match chains.q_dprime {
        Some(c) => println!("shifted stable chain: {:?}", chains.chains[c]),
        None => println!("no shifted stable chain"),
    }
    println!("dual chain pairs: {:?}", chains.dual_pairs);
}
