//! The block map: every (orbit, character) pair lands in a block, the
//! section picks the primitive pair of each block, and the two compose to
//! the identity on blocks.
//!
//! Run with: cargo run --example psi_omega

use std::collections::BTreeMap;

use spirals::blocks::{enumerate_blocks_sl, omega, psi, BlockTriple};
use spirals::census::enumerate_pairs;
use spirals::graded::GradedSpace;

fn main() {
    let space = GradedSpace::new(2, vec![2, 2]);
    println!("m = {}, dims {:?}\n", space.modulus(), space.dims());

    let mut fibers: BTreeMap<BlockTriple, Vec<String>> = BTreeMap::new();
    for pair in enumerate_pairs(&space) {
        let b = psi(&pair, &space);
        fibers
            .entry(b)
            .or_default()
            .push(format!("({}, r={})", pair.orbit, pair.char_exponent));
    }

    for (block, members) in &fibers {
        println!(
            "block d={} f={:?} chi={}  <-  {}",
            block.d,
            block.f,
            block.chi,
            members.join(", ")
        );
        let primitive = omega(block);
        println!(
            "  primitive pair: ({}, r={})",
            primitive.orbit, primitive.char_exponent
        );
        assert_eq!(&psi(&primitive, &space), block);
    }

    let blocks = enumerate_blocks_sl(&space);
    assert_eq!(fibers.len(), blocks.len(), "the block map is surjective");
    println!(
        "\n{} pairs hit all {} blocks; psi(omega(b)) = b throughout",
        fibers.values().map(Vec::len).sum::<usize>(),
        blocks.len()
    );
}
