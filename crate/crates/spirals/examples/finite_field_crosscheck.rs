//! Cross-check the combinatorial orbit census against brute force: scan
//! every degree-1 representation over a small prime field, keep the
//! nilpotent ones, and compare the realized chain types with the census.
//!
//! Run with: cargo run --release --example finite_field_crosscheck

use std::collections::BTreeSet;

use spirals::census::enumerate_chain_types;
use spirals::graded::GradedSpace;
use spirals::oracle::{count_nilpotents_fq, realized_chain_types_fq};

fn main() {
    for (m, dims) in [(2usize, vec![1, 1]), (2, vec![2, 1]), (3, vec![1, 1, 1])] {
        let space = GradedSpace::new(m, dims);
        let expected: BTreeSet<_> = enumerate_chain_types(&space).into_iter().collect();
        println!(
            "m = {}, dims {:?}: {} chain types enumerated",
            space.modulus(),
            space.dims(),
            expected.len()
        );
        for q in [2u32, 3, 5] {
            let realized = realized_chain_types_fq(&space, q).unwrap();
            let count = count_nilpotents_fq(&space, q).unwrap();
            println!(
                "  over F_{q}: {} nilpotent points realize {} types — {}",
                count,
                realized.len(),
                if realized == expected {
                    "match"
                } else {
                    "MISMATCH"
                }
            );
            assert_eq!(realized, expected);
        }
    }
}
