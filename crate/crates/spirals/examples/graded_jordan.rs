//! Graded Jordan theory of a nilpotent quiver representation: chain type,
//! adapted basis, and the exact sl2 completion (e, h, f).
//!
//! Run with: cargo run --example graded_jordan

use spirals::graded::{GradedElement, GradedSpace};
use spirals::nilpotent::{chain_type_of, graded_jordan_basis, iota_cocharacter, sl2_complete};
use spirals::rat::Rat;

fn main() {
    // m = 2, dims (2, 1): maps V_0 -> V_1 -> V_0 forming one chain of
    // length 3 plus nothing else
    let space = GradedSpace::new(2, vec![2, 1]);
    let mut x = GradedElement::zero(space.clone(), 1);
    x.block_mut(0).set(0, 0, Rat::one()); // first vector of V_0 into V_1
    x.block_mut(1).set(1, 0, Rat::one()); // V_1 into second vector of V_0

    let t = chain_type_of(&x).unwrap();
    println!("chain type: {t}");

    let basis = graded_jordan_basis(&x).unwrap();
    for chain in basis.chains() {
        println!(
            "chain with head label {} and length {}:",
            chain.head,
            chain.vectors.len()
        );
        for (step, v) in chain.vectors.iter().enumerate() {
            println!("  w_{step} = {v:?}");
        }
    }

    let triple = sl2_complete(&x).unwrap();
    assert!(triple.verify());
    println!("\nsl2 relations [h,e]=2e, [h,f]=-2f, [e,f]=h hold exactly");
    println!("h on V_0: {:?}", triple.h.block(0));
    println!("h on V_1: {:?}", triple.h.block(1));
    println!("f block V_1 -> V_0: {:?}", triple.f.block(1));

    let iota = iota_cocharacter(&triple).unwrap();
    println!(
        "weight cocharacter: V_0 {:?}, V_1 {:?}",
        iota.weights(0),
        iota.weights(1)
    );
}
