//! Realize a block as a spiral splitting: the admissible grading of a block
//! has a chain quiver with n/d chains of exactly d vertices headed at f,
//! and the primitive orbit representative sits inside the splitting layer.
//!
//! Run with: cargo run --example admissible_gradings

use spirals::blocks::{
    admissible_grading_for_block, block_representative, enumerate_blocks_sl, omega,
};
use spirals::graded::GradedSpace;
use spirals::nilpotent::chain_type_of;
use spirals::spiral::{verify_spiral_axioms, Spiral};

fn main() {
    let space = GradedSpace::new(2, vec![2, 1]);
    for block in enumerate_blocks_sl(&space) {
        println!("block d={} f={:?} chi={}", block.d, block.f, block.chi);

        let mu = admissible_grading_for_block(&block, &space).unwrap();
        for i in 0..space.modulus() {
            println!("  weights on V_{i}: {:?}", mu.weights(i));
        }

        let s = Spiral::new(mu, 1);
        let q = s.quiver();
        let shapes: Vec<(usize, usize)> = (0..q.chains.len())
            .map(|c| (q.chain_head_label(c), q.chain_len(c)))
            .collect();
        println!("  quiver chains (head, vertices): {shapes:?}");
        assert!(q.chains.len() == space.total_dim() / block.d);
        assert!(verify_spiral_axioms(&s).pass());

        let x = block_representative(&block, &space).unwrap();
        assert!(s.split(1).contains(&x));
        assert_eq!(chain_type_of(&x).unwrap(), omega(&block).orbit);
        println!(
            "  representative of orbit {} lies in the splitting layer l_1\n",
            omega(&block).orbit
        );
    }
}
