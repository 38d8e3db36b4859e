//! Symplectic quiver combinatorics on half-integer labels.
//!
//! For even m the labels live in S_m = {1/2, 3/2, ..., m-1/2}, stored as
//! slots k with label (2k+1)/2. The symplectic form identifies V_{-j} with
//! the dual of V_j; dimensions and cocharacter weights must be symmetric
//! under j ↦ -j, x ↦ -x. The form itself is never materialized — index
//! bookkeeping carries the duality.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rat::Rat;

/// Dimensions of an S_m-graded symplectic space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymplecticDims {
    m: usize,
    /// dims[k] = dim V_{(2k+1)/2}
    dims: Vec<usize>,
}

impl SymplecticDims {
    pub fn new(m: usize, dims: Vec<usize>) -> Result<Self, Error> {
        if m == 0 || !m.is_multiple_of(2) {
            return Err(Error::Constraint(format!("modulus {m} must be even")));
        }
        if dims.len() != m {
            return Err(Error::Constraint(format!(
                "need {m} label dimensions, got {}",
                dims.len()
            )));
        }
        for k in 0..m {
            if dims[k] != dims[m - 1 - k] {
                return Err(Error::Duality(format!(
                    "dim V_{} = {} but dim V_{} = {}",
                    Self::label_name(k),
                    dims[k],
                    Self::label_name(m - 1 - k),
                    dims[m - 1 - k]
                )));
            }
        }
        Ok(SymplecticDims { m, dims })
    }

    /// From the m/2 free dimensions at labels 1/2 .. (m-1)/2; the rest are
    /// forced by duality.
    pub fn from_free(m: usize, free: Vec<usize>) -> Result<Self, Error> {
        if m == 0 || !m.is_multiple_of(2) {
            return Err(Error::Constraint(format!("modulus {m} must be even")));
        }
        if free.len() != m / 2 {
            return Err(Error::Constraint(format!(
                "need {} free dimensions, got {}",
                m / 2,
                free.len()
            )));
        }
        let mut dims = vec![0usize; m];
        for (k, &d) in free.iter().enumerate() {
            dims[k] = d;
            dims[m - 1 - k] = d;
        }
        SymplecticDims::new(m, dims)
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, slot: usize) -> usize {
        self.dims[slot % self.m]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Slot of the dual label -j.
    pub fn dual_slot(&self, slot: usize) -> usize {
        self.m - 1 - (slot % self.m)
    }

    /// Slot holding the congruence class of the half-integer 2x/2 mod m,
    /// for odd `two_x`.
    pub fn slot_of_two(&self, two_x: i64) -> usize {
        let two_m = 2 * self.m as i64;
        let r = two_x.rem_euclid(two_m);
        debug_assert_eq!(r % 2, 1);
        ((r - 1) / 2) as usize
    }

    pub fn label_name(slot: usize) -> String {
        format!("{}/2", 2 * slot + 1)
    }

    pub fn label(&self, slot: usize) -> Rat {
        Rat::new(2 * (slot as i64) + 1, 2)
    }
}

/// A duality-respecting Q-grading: the weight multiset at -j is the
/// negation of the multiset at j.
#[derive(Clone, Debug)]
pub struct SpCocharacter {
    sd: SymplecticDims,
    weights: Vec<Vec<Rat>>,
}

impl SpCocharacter {
    pub fn new(sd: SymplecticDims, weights: Vec<Vec<Rat>>) -> Result<Self, Error> {
        if weights.len() != sd.modulus() {
            return Err(Error::Constraint("one weight list per label".into()));
        }
        for (k, w) in weights.iter().enumerate() {
            if w.len() != sd.dim(k) {
                return Err(Error::Constraint(format!(
                    "label {} needs {} weights",
                    SymplecticDims::label_name(k),
                    sd.dim(k)
                )));
            }
        }
        for k in 0..sd.modulus() {
            let mut neg: Vec<Rat> = weights[sd.dual_slot(k)].iter().map(|w| -w).collect();
            let mut own = weights[k].clone();
            neg.sort();
            own.sort();
            if own != neg {
                return Err(Error::Duality(format!(
                    "weights at {} are not the negatives of those at {}",
                    SymplecticDims::label_name(k),
                    SymplecticDims::label_name(sd.dual_slot(k))
                )));
            }
        }
        Ok(SpCocharacter { sd, weights })
    }

    pub fn zero(sd: SymplecticDims) -> Self {
        let weights = (0..sd.modulus())
            .map(|k| vec![Rat::zero(); sd.dim(k)])
            .collect();
        SpCocharacter { sd, weights }
    }

    pub fn dims(&self) -> &SymplecticDims {
        &self.sd
    }

    pub fn weights(&self, slot: usize) -> &[Rat] {
        &self.weights[slot % self.sd.modulus()]
    }
}

/// A vertex of the symplectic chain quiver: label slot, weight, multiplicity.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SpVertex {
    pub slot: usize,
    pub x: Rat,
    pub mult: usize,
}

/// Chain structure of a symplectic cocharacter, with the duality involution.
#[derive(Clone, Debug, Serialize)]
pub struct SpChainReport {
    pub vertices: Vec<SpVertex>,
    pub edges: Vec<[usize; 2]>,
    pub chains: Vec<Vec<usize>>,
    /// `involution[v]` is the vertex index of the dual vertex.
    pub involution: Vec<usize>,
    /// Index of the involution-stable chain on vertices (x, x), if any.
    pub q_prime: Option<usize>,
    /// Index of the involution-stable chain on vertices (x - m/2, x), if any.
    pub q_dprime: Option<usize>,
    /// Remaining chains, matched with their distinct duals.
    pub dual_pairs: Vec<[usize; 2]>,
}

impl SpChainReport {
    pub fn q_prime_vertices(&self) -> Vec<&SpVertex> {
        self.q_prime
            .map(|c| self.chains[c].iter().map(|&v| &self.vertices[v]).collect())
            .unwrap_or_default()
    }

    pub fn q_dprime_vertices(&self) -> Vec<&SpVertex> {
        self.q_dprime
            .map(|c| self.chains[c].iter().map(|&v| &self.vertices[v]).collect())
            .unwrap_or_default()
    }
}

/// Builds the chain quiver of a symplectic cocharacter, the involution
/// (j, x) ↦ (-j, -x) on its vertices, the at-most-two involution-stable
/// chains, and the pairing of every other chain with its dual.
pub fn sp_spiral_chains(mu: &SpCocharacter) -> Result<SpChainReport, Error> {
    let sd = mu.dims();
    let m = sd.modulus();
    let mut vertices: Vec<SpVertex> = Vec::new();
    for k in 0..m {
        let mut sorted = mu.weights(k).to_vec();
        sorted.sort();
        for w in sorted {
            match vertices.last_mut() {
                Some(v) if v.slot == k && v.x == w => v.mult += 1,
                _ => vertices.push(SpVertex {
                    slot: k,
                    x: w,
                    mult: 1,
                }),
            }
        }
    }
    let find = |slot: usize, x: &Rat| vertices.iter().position(|v| v.slot == slot && &v.x == x);

    let mut edges = Vec::new();
    let mut succ = vec![None; vertices.len()];
    let mut has_pred = vec![false; vertices.len()];
    for (vi, v) in vertices.iter().enumerate() {
        let next_slot = (v.slot + 1) % m;
        let next_x = &v.x + &Rat::one();
        if let Some(wi) = find(next_slot, &next_x) {
            edges.push([vi, wi]);
            succ[vi] = Some(wi);
            has_pred[wi] = true;
        }
    }
    let mut chains: Vec<Vec<usize>> = Vec::new();
    for (vi, _) in vertices.iter().enumerate() {
        if has_pred[vi] {
            continue;
        }
        let mut chain = vec![vi];
        let mut cur = vi;
        while let Some(next) = succ[cur] {
            chain.push(next);
            cur = next;
        }
        chains.push(chain);
    }

    let mut involution = Vec::with_capacity(vertices.len());
    for v in &vertices {
        let dual = find(sd.dual_slot(v.slot), &-&v.x).ok_or_else(|| {
            Error::Duality(format!(
                "vertex ({}, {}) has no dual",
                SymplecticDims::label_name(v.slot),
                v.x
            ))
        })?;
        if vertices[dual].mult != v.mult {
            return Err(Error::Duality("dual vertex multiplicities differ".into()));
        }
        involution.push(dual);
    }

    // a vertex (j, x) sits on the diagonal when x ≡ j, and on the shifted
    // diagonal when x ≡ j + m/2 (mod m)
    let is_j_prime = |v: &SpVertex| {
        v.x.denom() == &num::BigInt::from(2) && {
            let two_x = i64::try_from(v.x.numer().clone()).expect("desk scale");
            sd.slot_of_two(two_x) == v.slot
        }
    };
    let is_j_dprime = |v: &SpVertex| {
        v.x.denom() == &num::BigInt::from(2) && {
            let two_x = i64::try_from(v.x.numer().clone()).expect("desk scale");
            sd.slot_of_two(two_x - m as i64) == v.slot
        }
    };

    let mut q_prime = None;
    let mut q_dprime = None;
    let mut dual_pairs = Vec::new();
    let mut seen = vec![false; chains.len()];
    for (ci, chain) in chains.iter().enumerate() {
        let mut image: Vec<usize> = chain.iter().map(|&v| involution[v]).collect();
        image.sort_unstable();
        let mut own = chain.clone();
        own.sort_unstable();
        if image == own {
            if chain.iter().all(|&v| is_j_prime(&vertices[v])) {
                assert!(q_prime.is_none(), "two diagonal stable chains");
                q_prime = Some(ci);
            } else if chain.iter().all(|&v| is_j_dprime(&vertices[v])) {
                assert!(q_dprime.is_none(), "two shifted stable chains");
                q_dprime = Some(ci);
            } else {
                return Err(Error::Duality(
                    "stable chain is neither diagonal nor shifted-diagonal".into(),
                ));
            }
            seen[ci] = true;
        }
    }
    for (ci, chain) in chains.iter().enumerate() {
        if seen[ci] {
            continue;
        }
        let mut image: Vec<usize> = chain.iter().map(|&v| involution[v]).collect();
        image.sort_unstable();
        let partner = chains
            .iter()
            .enumerate()
            .position(|(cj, other)| {
                let mut o = other.clone();
                o.sort_unstable();
                !seen[cj] && cj != ci && o == image
            })
            .expect("dual chain exists");
        seen[ci] = true;
        seen[partner] = true;
        dual_pairs.push([ci, partner]);
    }

    Ok(SpChainReport {
        vertices,
        edges,
        chains,
        involution,
        q_prime,
        q_dprime,
        dual_pairs,
    })
}

/// A symplectic block: the pair (a', a'') of half-window radii.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SpBlock {
    pub a_prime: usize,
    pub a_dprime: usize,
}

/// Per-slot dimensions demanded by a block: the diagonal window
/// {-a'+1/2, ..., a'-1/2} allocates a'+1/2-|x| at the slot of x, and the
/// shifted window allocates a''+1/2-|x| at the slot of x - m/2.
pub fn sp_allocation(sd: &SymplecticDims, block: SpBlock) -> Vec<usize> {
    let m = sd.modulus() as i64;
    let mut need = vec![0usize; sd.modulus()];
    let mut add = |a: usize, shift: i64| {
        let a = a as i64;
        let mut two_x = -2 * a + 1;
        while two_x < 2 * a {
            let slot = sd.slot_of_two(two_x + shift);
            let alloc = a - (two_x.abs() - 1) / 2;
            need[slot] += alloc as usize;
            two_x += 2;
        }
    };
    add(block.a_prime, 0);
    add(block.a_dprime, -m);
    need
}

/// Counting form of the window inequality: at most dim V_j window points of
/// each kind may land on label j. Necessary for a block to fit; the
/// allocation in [`sp_allocation`] is the sharp test.
pub fn sp_count_inequality(sd: &SymplecticDims, block: SpBlock) -> bool {
    let m = sd.modulus() as i64;
    let mut count = vec![0usize; sd.modulus()];
    let mut add = |a: usize, shift: i64| {
        let a = a as i64;
        let mut two_x = -2 * a + 1;
        while two_x < 2 * a {
            count[sd.slot_of_two(two_x + shift)] += 1;
            two_x += 2;
        }
    };
    add(block.a_prime, 0);
    add(block.a_dprime, -m);
    (0..sd.modulus()).all(|k| count[k] <= sd.dim(k))
}

/// All blocks whose window allocation fits the dimensions, in canonical
/// order (a' ascending, then a'').
pub fn enumerate_blocks_sp(sd: &SymplecticDims) -> Vec<SpBlock> {
    let n = sd.total_dim();
    let mut out = Vec::new();
    for a_prime in 0..=n {
        for a_dprime in 0..=n {
            let block = SpBlock { a_prime, a_dprime };
            let need = sp_allocation(sd, block);
            if (0..sd.modulus()).all(|k| need[k] <= sd.dim(k)) {
                out.push(block);
            }
        }
    }
    out
}

/// JSON report of the symplectic block set.
#[derive(Clone, Debug, Serialize)]
pub struct SpBlocksReport {
    pub m: usize,
    pub dims: BTreeMap<String, usize>,
    pub blocks: Vec<[usize; 2]>,
}

pub fn sp_blocks_report(sd: &SymplecticDims) -> SpBlocksReport {
    let dims = (0..sd.modulus())
        .map(|k| (SymplecticDims::label_name(k), sd.dim(k)))
        .collect();
    let blocks = enumerate_blocks_sp(sd)
        .into_iter()
        .map(|b| [b.a_prime, b.a_dprime])
        .collect();
    SpBlocksReport {
        m: sd.modulus(),
        dims,
        blocks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sd_m2(d: usize) -> SymplecticDims {
        SymplecticDims::from_free(2, vec![d]).unwrap()
    }

    #[test]
    fn dims_enforce_duality() {
        assert!(SymplecticDims::new(2, vec![1, 2]).is_err());
        assert!(SymplecticDims::new(3, vec![1, 1, 1]).is_err());
        assert!(SymplecticDims::new(2, vec![1, 1]).is_ok());
    }

    #[test]
    fn block_set_m2_d11() {
        let blocks = enumerate_blocks_sp(&sd_m2(1));
        assert_eq!(
            blocks,
            vec![
                SpBlock {
                    a_prime: 0,
                    a_dprime: 0
                },
                SpBlock {
                    a_prime: 0,
                    a_dprime: 1
                },
                SpBlock {
                    a_prime: 1,
                    a_dprime: 0
                },
            ]
        );
    }

    #[test]
    fn block_set_m2_d22_contains_11() {
        let blocks = enumerate_blocks_sp(&sd_m2(2));
        assert!(blocks.contains(&SpBlock {
            a_prime: 1,
            a_dprime: 1
        }));
    }

    #[test]
    fn zero_block_always_enumerated() {
        for m in [2usize, 4] {
            for d in 0..3 {
                let sd = SymplecticDims::from_free(m, vec![d; m / 2]).unwrap();
                assert!(enumerate_blocks_sp(&sd).contains(&SpBlock {
                    a_prime: 0,
                    a_dprime: 0
                }));
            }
        }
    }

    #[test]
    fn allocation_implies_count_inequality() {
        for d in 0..=3 {
            let sd = sd_m2(d);
            for b in enumerate_blocks_sp(&sd) {
                assert!(sp_count_inequality(&sd, b));
            }
        }
    }

    #[test]
    fn monotone_in_dims() {
        for d in 0..3 {
            let small: std::collections::BTreeSet<_> =
                enumerate_blocks_sp(&sd_m2(d)).into_iter().collect();
            let large: std::collections::BTreeSet<_> =
                enumerate_blocks_sp(&sd_m2(d + 1)).into_iter().collect();
            assert!(small.is_subset(&large));
        }
    }

    #[test]
    fn chains_zero_cocharacter() {
        let mu = SpCocharacter::zero(sd_m2(1));
        let r = sp_spiral_chains(&mu).unwrap();
        assert_eq!(r.vertices.len(), 2);
        assert!(r.q_prime.is_none() && r.q_dprime.is_none());
        assert_eq!(r.involution, vec![1, 0]);
        assert_eq!(r.dual_pairs.len(), 1);
    }

    #[test]
    fn chains_diagonal_two_vertex() {
        // weights 1/2 at V_{1/2} and -1/2 at V_{3/2} = V_{-1/2}
        let mu = SpCocharacter::new(sd_m2(1), vec![vec![Rat::new(1, 2)], vec![Rat::new(-1, 2)]])
            .unwrap();
        let r = sp_spiral_chains(&mu).unwrap();
        let qp = r.q_prime.expect("diagonal chain");
        assert_eq!(r.chains[qp].len(), 2);
        assert!(r.q_dprime.is_none());
        assert!(r.dual_pairs.is_empty());
    }

    #[test]
    fn four_vertex_diagonal_chain() {
        // weights {-3/2, 1/2} at label 1/2 mirror to {-1/2, 3/2}; all four
        // vertices satisfy x ≡ j, forming one stable diagonal chain
        let sd = sd_m2(2);
        let mu = SpCocharacter::new(
            sd,
            vec![
                vec![Rat::new(-3, 2), Rat::new(1, 2)],
                vec![Rat::new(3, 2), Rat::new(-1, 2)],
            ],
        )
        .unwrap();
        let r = sp_spiral_chains(&mu).unwrap();
        let qp = r.q_prime.expect("diagonal chain");
        assert_eq!(r.chains[qp].len(), 4);
        assert!(r.q_dprime.is_none());
        assert!(r.dual_pairs.is_empty());
    }

    #[test]
    fn shifted_diagonal_chain() {
        // weights -1/2 at label 1/2 and 1/2 at label 3/2 put both vertices
        // on the shifted diagonal x ≡ j + m/2
        let mu = SpCocharacter::new(sd_m2(1), vec![vec![Rat::new(-1, 2)], vec![Rat::new(1, 2)]])
            .unwrap();
        let r = sp_spiral_chains(&mu).unwrap();
        let qd = r.q_dprime.expect("shifted chain");
        assert_eq!(r.chains[qd].len(), 2);
        assert!(r.q_prime.is_none());

        // moving the window off-center breaks stability: the two singleton
        // shifted-diagonal vertices pair off instead
        let mu = SpCocharacter::new(sd_m2(1), vec![vec![Rat::new(3, 2)], vec![Rat::new(-3, 2)]])
            .unwrap();
        let r = sp_spiral_chains(&mu).unwrap();
        assert!(r.q_prime.is_none() && r.q_dprime.is_none());
        assert_eq!(r.dual_pairs.len(), 1);
    }

    #[test]
    fn duality_violation_rejected() {
        let err = SpCocharacter::new(sd_m2(1), vec![vec![Rat::new(1, 2)], vec![Rat::new(1, 2)]]);
        assert!(err.is_err());
    }
}
