//! SL block combinatorics: block triples, the block map Ψ on orbit pairs,
//! its section ω, and the admissible grading realizing a block as a spiral
//! splitting.
//!
//! A block is a triple (d, f, χ): d divides n, f is a multiset of n/d labels
//! whose length-d chains cover the dimension vector, and χ is a primitive
//! character exponent mod d. Ψ cuts each chain of an orbit into length-d
//! segments, where d is the order of the pair's character; ω rebuilds the
//! primitive orbit of n/d chains of length d.

use num::integer::gcd;
use serde::{Deserialize, Serialize};

use crate::census::{component_group_order, OrbitPair};
use crate::cochar::RationalCocharacter;
use crate::error::Error;
use crate::graded::GradedSpace;
use crate::nilpotent::ChainType;
use crate::rat::Rat;

/// An SL block (d, f, χ) in canonical form: f sorted, 0 ≤ χ < d coprime to d.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct BlockTriple {
    pub d: usize,
    pub f: Vec<usize>,
    pub chi: usize,
}

impl BlockTriple {
    pub fn new(d: usize, mut f: Vec<usize>, chi: usize) -> Self {
        assert!(d > 0);
        assert!(
            chi < d && gcd(chi, d).max(1) == 1,
            "character must be primitive"
        );
        f.sort_unstable();
        BlockTriple { d, f, chi }
    }

    /// Number of boxes covered at label i by f's length-d chains; the block
    /// constraint asks this to equal dim V_i for every i.
    pub fn coverage(&self, m: usize) -> Vec<usize> {
        let mut cov = vec![0usize; m];
        for &h in &self.f {
            for y in 0..self.d {
                cov[(h + y) % m] += 1;
            }
        }
        cov
    }

    pub fn satisfies_constraint(&self, space: &GradedSpace) -> bool {
        self.coverage(space.modulus()) == space.dims()
    }
}

/// All blocks over a dimension vector, in canonical order
/// (d ascending, then f, then χ). For d = 1 the unique character is χ = 0.
pub fn enumerate_blocks_sl(space: &GradedSpace) -> Vec<BlockTriple> {
    let m = space.modulus();
    let n = space.total_dim();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let count = n / d;
        // multisets of `count` heads, nondecreasing, with running coverage
        // bounded by the dimension vector
        let mut cov = vec![0usize; m];
        let mut heads = Vec::new();
        collect_heads(space, d, count, 0, &mut cov, &mut heads, &mut out);
    }
    out.sort();
    out
}

fn collect_heads(
    space: &GradedSpace,
    d: usize,
    left: usize,
    min_head: usize,
    cov: &mut Vec<usize>,
    heads: &mut Vec<usize>,
    out: &mut Vec<BlockTriple>,
) {
    let m = space.modulus();
    if left == 0 {
        if cov == space.dims() {
            for chi in primitive_exponents(d) {
                out.push(BlockTriple::new(d, heads.clone(), chi));
            }
        }
        return;
    }
    'heads: for h in min_head..m {
        for y in 0..d {
            if cov[(h + y) % m] + 1 > space.dim((h + y) % m) {
                continue 'heads;
            }
        }
        for y in 0..d {
            cov[(h + y) % m] += 1;
        }
        heads.push(h);
        collect_heads(space, d, left - 1, h, cov, heads, out);
        heads.pop();
        for y in 0..d {
            cov[(h + y) % m] -= 1;
        }
    }
}

/// Exponents of the primitive (injective) characters of μ_d; for d = 1 only
/// the trivial one.
pub fn primitive_exponents(d: usize) -> Vec<usize> {
    if d == 1 {
        vec![0]
    } else {
        (1..d).filter(|&c| gcd(c, d) == 1).collect()
    }
}

/// The block map Ψ: factors the pair's character through its exact order d,
/// then re-cuts every chain into length-d segments whose heads make up f.
/// Total on valid pairs; the output always satisfies the block constraint
/// for the pair's dimension vector.
pub fn psi(pair: &OrbitPair, space: &GradedSpace) -> BlockTriple {
    let m = space.modulus();
    debug_assert_eq!(pair.orbit.dim_vector(m), space.dims());
    let d_prime = component_group_order(&pair.orbit);
    assert!(d_prime >= 1, "orbit must have at least one chain");
    let r = pair.char_exponent % d_prime;
    let d = d_prime / gcd(r, d_prime);
    let chi = if d == 1 { 0 } else { r / (d_prime / d) };
    let mut f = Vec::new();
    for &(head, len) in pair.orbit.chains() {
        debug_assert_eq!(len % d, 0);
        for part in 0..len / d {
            f.push((head + part * d) % m);
        }
    }
    BlockTriple::new(d, f, chi)
}

/// The section ω: the primitive pair of a block is the orbit of n/d chains
/// of length d with heads f, together with the character χ (the component
/// group of that orbit has order exactly d).
pub fn omega(b: &BlockTriple) -> OrbitPair {
    let orbit = ChainType::new(b.f.iter().map(|&h| (h, b.d)).collect());
    OrbitPair {
        orbit,
        char_exponent: b.chi,
    }
}

/// A grading realizing the block as a spiral splitting: one chain per head
/// of f, occupying weights x_0+u at labels h+u for u = 0..d, with per-chain
/// offsets spaced d+1 apart so chains never merge, recentered to total
/// weight zero.
pub fn admissible_grading_for_block(
    b: &BlockTriple,
    space: &GradedSpace,
) -> Result<RationalCocharacter, Error> {
    if !b.satisfies_constraint(space) {
        return Err(Error::Constraint(format!(
            "block (d={}, f={:?}) does not cover dims {:?}",
            b.d,
            b.f,
            space.dims()
        )));
    }
    let m = space.modulus();
    let mut per_label: Vec<Vec<Rat>> = vec![Vec::new(); m];
    for (k, &h) in b.f.iter().enumerate() {
        let offset = (k * (b.d + 1)) as i64;
        for u in 0..b.d {
            per_label[(h + u) % m].push(Rat::from(offset + u as i64));
        }
    }
    for (i, w) in per_label.iter_mut().enumerate() {
        w.sort();
        debug_assert_eq!(w.len(), space.dim(i));
    }
    Ok(RationalCocharacter::diagonal(space.clone(), per_label).recentered())
}

/// The orbit representative of ω(b) embedded along the admissible grading:
/// each chain's arrows connect the basis vectors holding its consecutive
/// weights, so the element lands in the splitting layer l̃_1. The basis slot
/// of a chain step is its position in the sorted raw weights of its label,
/// which recentering does not change.
pub fn block_representative(
    b: &BlockTriple,
    space: &GradedSpace,
) -> Result<crate::graded::GradedElement, Error> {
    if !b.satisfies_constraint(space) {
        return Err(Error::Constraint(format!(
            "block (d={}, f={:?}) does not cover dims {:?}",
            b.d,
            b.f,
            space.dims()
        )));
    }
    let m = space.modulus();
    // (raw weight, chain, step) per label, sorted by weight; offsets keep
    // raw weights distinct within a label
    let mut slots: Vec<Vec<(i64, usize, usize)>> = vec![Vec::new(); m];
    for (k, &h) in b.f.iter().enumerate() {
        let offset = (k * (b.d + 1)) as i64;
        for u in 0..b.d {
            slots[(h + u) % m].push((offset + u as i64, k, u));
        }
    }
    for v in &mut slots {
        v.sort_unstable();
    }
    let position = |label: usize, k: usize, u: usize| {
        slots[label]
            .iter()
            .position(|&(_, kk, uu)| kk == k && uu == u)
            .expect("chain step allocated")
    };
    let mut e = crate::graded::GradedElement::zero(space.clone(), 1);
    for (k, &h) in b.f.iter().enumerate() {
        for u in 0..b.d.saturating_sub(1) {
            let src_label = (h + u) % m;
            let dst_label = (h + u + 1) % m;
            let src = position(src_label, k, u);
            let dst = position(dst_label, k, u + 1);
            e.block_mut(src_label).set(dst, src, Rat::one());
        }
    }
    Ok(crate::graded::GradedElement::new(
        space.clone(),
        1,
        e.into_blocks(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nilpotent::chain_type_of;
    use crate::spiral::{spiral_quiver, Spiral};

    #[test]
    fn blocks_m2_d10() {
        let space = GradedSpace::new(2, vec![1, 0]);
        assert_eq!(
            enumerate_blocks_sl(&space),
            vec![BlockTriple::new(1, vec![0], 0)]
        );
    }

    #[test]
    fn blocks_m2_d11() {
        let space = GradedSpace::new(2, vec![1, 1]);
        assert_eq!(
            enumerate_blocks_sl(&space),
            vec![
                BlockTriple::new(1, vec![0, 1], 0),
                BlockTriple::new(2, vec![0], 1),
                BlockTriple::new(2, vec![1], 1),
            ]
        );
    }

    #[test]
    fn blocks_m2_d21() {
        let space = GradedSpace::new(2, vec![2, 1]);
        assert_eq!(
            enumerate_blocks_sl(&space),
            vec![
                BlockTriple::new(1, vec![0, 0, 1], 0),
                BlockTriple::new(3, vec![0], 1),
                BlockTriple::new(3, vec![0], 2),
            ]
        );
    }

    #[test]
    fn psi_trivial_character_gives_d1() {
        let orbit = ChainType::new(vec![(0, 2), (1, 2)]);
        let pair = OrbitPair {
            orbit,
            char_exponent: 0,
        };
        let b = psi(&pair, &GradedSpace::new(2, vec![2, 2]));
        assert_eq!(b, BlockTriple::new(1, vec![0, 0, 1, 1], 0));
    }

    #[test]
    fn psi_fixtures() {
        let pair = OrbitPair {
            orbit: ChainType::new(vec![(0, 2)]),
            char_exponent: 1,
        };
        let space = GradedSpace::new(2, vec![1, 1]);
        assert_eq!(psi(&pair, &space), BlockTriple::new(2, vec![0], 1));

        let pair = OrbitPair {
            orbit: ChainType::new(vec![(0, 4)]),
            char_exponent: 2,
        };
        let space = GradedSpace::new(2, vec![2, 2]);
        assert_eq!(psi(&pair, &space), BlockTriple::new(2, vec![0, 0], 1));
    }

    #[test]
    fn omega_fixtures() {
        let b = BlockTriple::new(1, vec![0, 1], 0);
        let p = omega(&b);
        assert_eq!(p.orbit, ChainType::new(vec![(0, 1), (1, 1)]));
        assert_eq!(p.char_exponent, 0);

        let b = BlockTriple::new(2, vec![0], 1);
        assert_eq!(omega(&b).orbit, ChainType::new(vec![(0, 2)]));

        let b = BlockTriple::new(3, vec![0], 2);
        let p = omega(&b);
        assert_eq!(p.orbit, ChainType::new(vec![(0, 3)]));
        assert_eq!(p.char_exponent, 2);
    }

    #[test]
    fn grading_fixture_single_chain() {
        let space = GradedSpace::new(2, vec![1, 1]);
        let b = BlockTriple::new(2, vec![0], 1);
        let mu = admissible_grading_for_block(&b, &space).unwrap();
        assert_eq!(mu.weights(0), &[Rat::new(-1, 2)]);
        assert_eq!(mu.weights(1), &[Rat::new(1, 2)]);
    }

    #[test]
    fn grading_fixture_two_singletons() {
        let space = GradedSpace::new(2, vec![1, 1]);
        let b = BlockTriple::new(1, vec![0, 1], 0);
        let mu = admissible_grading_for_block(&b, &space).unwrap();
        let q = spiral_quiver(&mu);
        assert_eq!(q.chains.len(), 2);
        assert!(q.edges.is_empty());
        assert!(mu.total_weight().is_zero());
    }

    #[test]
    fn grading_fixture_three_chain() {
        let space = GradedSpace::new(2, vec![2, 1]);
        let b = BlockTriple::new(3, vec![0], 1);
        let mu = admissible_grading_for_block(&b, &space).unwrap();
        assert_eq!(mu.weights(0), &[Rat::from(-1), Rat::from(1)]);
        assert_eq!(mu.weights(1), &[Rat::from(0)]);
        let q = spiral_quiver(&mu);
        assert_eq!(q.chains.len(), 1);
        assert_eq!(q.chain_len(0), 3);
    }

    #[test]
    fn representative_realizes_block() {
        let space = GradedSpace::new(2, vec![2, 1]);
        let b = BlockTriple::new(3, vec![0], 1);
        let x = block_representative(&b, &space).unwrap();
        assert_eq!(chain_type_of(&x).unwrap(), omega(&b).orbit);
        let mu = admissible_grading_for_block(&b, &space).unwrap();
        let s = Spiral::new(mu, 1);
        assert!(s.split(1).contains(&x));
    }

    #[test]
    fn grading_rejects_wrong_dims() {
        let space = GradedSpace::new(2, vec![1, 1]);
        let b = BlockTriple::new(2, vec![1], 1);
        assert!(admissible_grading_for_block(&b, &GradedSpace::new(2, vec![2, 0])).is_err());
        assert!(admissible_grading_for_block(&b, &space).is_ok());
    }
}
