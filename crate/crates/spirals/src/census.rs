//! The finite orbit census on the degree-1̄ nilpotent cone.
//!
//! Orbits are chain types; the census enumerates every chain type with a
//! given dimension vector, the cyclic component group of each orbit, and the
//! finite set of (orbit, character) pairs indexing equivariant local systems.

use num::integer::gcd;
use serde::{Deserialize, Serialize};

use crate::graded::GradedSpace;
use crate::nilpotent::ChainType;

/// An orbit together with a character exponent of its component group:
/// r with 0 ≤ r < d', where d' is the gcd of the chain lengths.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OrbitPair {
    pub orbit: ChainType,
    pub char_exponent: usize,
}

/// All chain types whose derived dimension vector is `space.dims()`,
/// duplicate-free, in canonical order.
pub fn enumerate_chain_types(space: &GradedSpace) -> Vec<ChainType> {
    let m = space.modulus();
    let mut remaining = space.dims().to_vec();
    let mut current: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();

    // Chains are chosen in nondecreasing canonical key order
    // (head ascending, length descending), which visits each multiset once.
    fn descend(
        m: usize,
        remaining: &mut Vec<usize>,
        min_key: (usize, usize),
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<ChainType>,
    ) {
        if remaining.iter().all(|&d| d == 0) {
            out.push(ChainType::new(current.clone()));
            return;
        }
        let total: usize = remaining.iter().sum();
        for head in min_key.0..m {
            if remaining[head] == 0 {
                continue;
            }
            let max_len = if head == min_key.0 { min_key.1 } else { total };
            for len in (1..=max_len.min(total)).rev() {
                let mut need = vec![0usize; m];
                for step in 0..len {
                    need[(head + step) % m] += 1;
                }
                if (0..m).any(|i| need[i] > remaining[i]) {
                    continue;
                }
                for step in 0..len {
                    remaining[(head + step) % m] -= 1;
                }
                current.push((head, len));
                descend(m, remaining, (head, len), current, out);
                current.pop();
                for step in 0..len {
                    remaining[(head + step) % m] += 1;
                }
            }
        }
    }

    let n: usize = remaining.iter().sum();
    descend(m, &mut remaining, (0, n), &mut current, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Order of the component group of the orbit stabilizer: the gcd of all
/// chain lengths (cyclic group).
pub fn component_group_order(t: &ChainType) -> usize {
    t.chains().iter().fold(0, |acc, &(_, len)| gcd(acc, len))
}

/// All (orbit, character) pairs over a dimension vector: each orbit
/// contributes one pair per character exponent 0..d'.
pub fn enumerate_pairs(space: &GradedSpace) -> Vec<OrbitPair> {
    let mut out = Vec::new();
    for orbit in enumerate_chain_types(space) {
        let d = component_group_order(&orbit);
        for r in 0..d {
            out.push(OrbitPair {
                orbit: orbit.clone(),
                char_exponent: r,
            });
        }
    }
    out
}

/// One census row: orbit, component group order, pair count.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CensusRow {
    pub orbit: ChainType,
    pub d_prime: usize,
    pub pairs: usize,
}

pub fn census(space: &GradedSpace) -> Vec<CensusRow> {
    enumerate_chain_types(space)
        .into_iter()
        .map(|orbit| {
            let d_prime = component_group_order(&orbit);
            CensusRow {
                orbit,
                d_prime,
                pairs: d_prime,
            }
        })
        .collect()
}

/// All dimension vectors of total dimension 1..=n_max over m labels.
pub fn all_dim_vectors(m: usize, n_max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; m];
    fn rec(cur: &mut Vec<usize>, at: usize, left: usize, out: &mut Vec<Vec<usize>>) {
        if at + 1 == cur.len() {
            cur[at] = left;
            out.push(cur.clone());
            return;
        }
        for take in 0..=left {
            cur[at] = take;
            rec(cur, at + 1, left - take, out);
        }
    }
    for n in 1..=n_max {
        rec(&mut cur, 0, n, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nilpotent::chain_type_of;

    #[test]
    fn single_label_has_only_zero_orbit() {
        let space = GradedSpace::new(2, vec![1, 0]);
        let types = enumerate_chain_types(&space);
        assert_eq!(types, vec![ChainType::new(vec![(0, 1)])]);
        assert_eq!(enumerate_pairs(&space).len(), 1);
    }

    #[test]
    fn census_m2_d11() {
        let space = GradedSpace::new(2, vec![1, 1]);
        let types = enumerate_chain_types(&space);
        assert_eq!(
            types,
            vec![
                ChainType::new(vec![(0, 2)]),
                ChainType::new(vec![(1, 2)]),
                ChainType::new(vec![(0, 1), (1, 1)]),
            ]
        );
        let d: Vec<usize> = types.iter().map(component_group_order).collect();
        assert_eq!(d, vec![2, 2, 1]);
        assert_eq!(enumerate_pairs(&space).len(), 5);
    }

    #[test]
    fn census_m2_d21() {
        let space = GradedSpace::new(2, vec![2, 1]);
        let types = enumerate_chain_types(&space);
        assert_eq!(
            types,
            vec![
                ChainType::new(vec![(0, 3)]),
                ChainType::new(vec![(0, 2), (0, 1)]),
                ChainType::new(vec![(0, 1), (1, 2)]),
                ChainType::new(vec![(0, 1), (0, 1), (1, 1)]),
            ]
        );
        let d: Vec<usize> = types.iter().map(component_group_order).collect();
        assert_eq!(d, vec![3, 1, 1, 1]);
        assert_eq!(enumerate_pairs(&space).len(), 6);
    }

    #[test]
    fn component_group_fixtures() {
        assert_eq!(
            component_group_order(&ChainType::new(vec![(0, 1), (1, 1)])),
            1
        );
        assert_eq!(component_group_order(&ChainType::new(vec![(0, 2)])), 2);
        assert_eq!(
            component_group_order(&ChainType::new(vec![(0, 4), (1, 2)])),
            2
        );
    }

    #[test]
    fn every_enumerated_type_is_realizable() {
        for m in 1..=3 {
            for dims in crate::census::all_dim_vectors(m, 3) {
                let space = GradedSpace::new(m, dims);
                for t in enumerate_chain_types(&space) {
                    assert_eq!(t.dim_vector(m), space.dims());
                    let e = t.standard_element(m);
                    assert_eq!(chain_type_of(&e).unwrap(), t);
                }
            }
        }
    }
}
