//! Graded Jordan theory for cyclic-quiver nilpotents.
//!
//! A nilpotent homogeneous element decomposes V into labelled chains: the
//! multiset of (head label, length) is its [`ChainType`], the complete
//! invariant of the orbit under block-diagonal conjugation. The chain type is
//! computed two independent ways — constructively through a greedy adapted
//! basis, and through the rank formula
//! `#{chains head i, len >= l} = rank(φ^{l-1}|V_i) - rank(φ^l|V_{i-δ})` —
//! and the two must always agree. The adapted basis also drives the graded
//! sl2 completion (e, h, f) and its weight cocharacter.

use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cochar::RationalCocharacter;
use crate::error::Error;
use crate::graded::{GradedElement, GradedSpace};
use crate::mat::{Mat, RowSpan};
use crate::rat::Rat;

/// Multiset of labelled chains (head label, length), canonically sorted.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ChainType {
    chains: Vec<(usize, usize)>,
}

impl ChainType {
    pub fn new(mut chains: Vec<(usize, usize)>) -> Self {
        assert!(chains.iter().all(|&(_, len)| len > 0));
        chains.sort_by_key(|&(head, len)| (head, Reverse(len)));
        ChainType { chains }
    }

    pub fn chains(&self) -> &[(usize, usize)] {
        &self.chains
    }

    pub fn total_dim(&self) -> usize {
        self.chains.iter().map(|&(_, len)| len).sum()
    }

    /// The derived dimension vector: chain (h, l) occupies labels
    /// h, h+1, ..., h+l-1 (mod m), one dimension each.
    pub fn dim_vector(&self, m: usize) -> Vec<usize> {
        let mut dims = vec![0usize; m];
        for &(head, len) in &self.chains {
            for step in 0..len {
                dims[(head + step) % m] += 1;
            }
        }
        dims
    }

    /// The canonical 0/1 matrix of this chain type on the derived space:
    /// each chain occupies fresh basis slots and the element shifts each
    /// slot to the next along the chain.
    pub fn standard_element(&self, m: usize) -> GradedElement {
        let space = GradedSpace::new(m, self.dim_vector(m));
        let mut next = vec![0usize; m];
        let mut e = GradedElement::zero(space.clone(), 1);
        for &(head, len) in &self.chains {
            let mut slots = Vec::with_capacity(len);
            for step in 0..len {
                let lab = (head + step) % m;
                slots.push((lab, next[lab]));
                next[lab] += 1;
            }
            for w in slots.windows(2) {
                let (j, src) = w[0];
                let (_, dst) = w[1];
                e.block_mut(j).set(dst, src, Rat::one());
            }
        }
        GradedElement::new(space, 1, e.into_blocks())
    }
}

/// Orbits are ordered by number of chains, then lexicographically on the
/// canonical chain list with long chains first at equal heads.
impl Ord for ChainType {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |t: &ChainType| {
            (
                t.chains.len(),
                t.chains
                    .iter()
                    .map(|&(h, l)| (h, Reverse(l)))
                    .collect::<Vec<_>>(),
            )
        };
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for ChainType {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Wire syntax "head:len,head:len" in canonical order.
impl fmt::Display for ChainType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .chains
            .iter()
            .map(|(h, l)| format!("{h}:{l}"))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for ChainType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut chains = Vec::new();
        for part in s.split(',') {
            let (h, l) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("invalid chain `{part}`, want head:len")))?;
            let h = h
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid chain head `{h}`")))?;
            let l = l
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid chain length `{l}`")))?;
            if l == 0 {
                return Err(Error::Parse("chain length must be positive".into()));
            }
            chains.push((h, l));
        }
        Ok(ChainType::new(chains))
    }
}

impl Serialize for ChainType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[usize; 2]> = self.chains.iter().map(|&(h, l)| [h, l]).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ChainType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs = Vec::<[usize; 2]>::deserialize(deserializer)?;
        if pairs.iter().any(|p| p[1] == 0) {
            return Err(D::Error::custom("chain length must be positive"));
        }
        Ok(ChainType::new(
            pairs.into_iter().map(|p| (p[0], p[1])).collect(),
        ))
    }
}

/// One chain of an adapted basis: w_0, ..., w_{len-1} with
/// w_N in V_{head + N·δ}, each stored in local coordinates of its label.
#[derive(Clone, Debug)]
pub struct AdaptedChain {
    pub head: usize,
    pub vectors: Vec<Vec<Rat>>,
}

/// A basis of V on which the nilpotent acts by shifting each chain.
#[derive(Clone, Debug)]
pub struct AdaptedBasis {
    space: GradedSpace,
    degree: usize,
    chains: Vec<AdaptedChain>,
}

impl AdaptedBasis {
    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn chains(&self) -> &[AdaptedChain] {
        &self.chains
    }

    pub fn chain_type(&self) -> ChainType {
        ChainType::new(
            self.chains
                .iter()
                .map(|c| (c.head, c.vectors.len()))
                .collect(),
        )
    }

    /// Change-of-basis matrix whose columns are the chain vectors embedded
    /// in the concatenated basis of V, in chain order.
    pub fn to_global(&self) -> Mat<Rat> {
        let n = self.space.total_dim();
        let mut p = Mat::zeros(n, n);
        let mut col = 0;
        for chain in &self.chains {
            for (step, v) in chain.vectors.iter().enumerate() {
                let lab = self
                    .space
                    .add_label(chain.head, (step * self.degree) as i64);
                let off = self.space.offset(lab);
                for (k, x) in v.iter().enumerate() {
                    p.set(off + k, col, x.clone());
                }
                col += 1;
            }
        }
        p
    }
}

/// True iff φ^n = 0 where n = dim V.
pub fn is_nilpotent(phi: &GradedElement) -> bool {
    phi.power(phi.space().total_dim()).is_zero()
}

/// Matrices of φ^l restricted to each V_i, for l = 0..=up_to.
fn label_powers(phi: &GradedElement, up_to: usize) -> Vec<Vec<Mat<Rat>>> {
    let space = phi.space();
    let m = space.modulus();
    let mut pows = Vec::with_capacity(up_to + 1);
    pows.push(
        (0..m)
            .map(|i| Mat::<Rat>::identity(space.dim(i)))
            .collect::<Vec<_>>(),
    );
    for l in 1..=up_to {
        let prev: &Vec<Mat<Rat>> = &pows[l - 1];
        let next = (0..m)
            .map(|i| {
                let mid = space.add_label(i, (l - 1) as i64 * phi.degree() as i64);
                phi.block(mid).matmul(&prev[i])
            })
            .collect();
        pows.push(next);
    }
    pows
}

/// Chain type via the rank formula; independent of any basis choice.
pub fn chain_type_of(phi: &GradedElement) -> Result<ChainType, Error> {
    if !is_nilpotent(phi) {
        return Err(Error::NotNilpotent);
    }
    let space = phi.space();
    let m = space.modulus();
    let n = space.total_dim();
    let delta = phi.degree() as i64;
    let pows = label_powers(phi, n);
    let rank = |l: usize, i: usize| -> i64 {
        if l > n {
            0
        } else {
            pows[l][i].rank() as i64
        }
    };
    let mut chains = Vec::new();
    for i in 0..m {
        let prev = space.add_label(i, -delta);
        // chains with head i and length >= l
        let at_least = |l: usize| rank(l - 1, i) - rank(l, prev);
        for l in 1..=n {
            let exactly = at_least(l) - at_least(l + 1);
            debug_assert!(exactly >= 0);
            for _ in 0..exactly {
                chains.push((i, l));
            }
        }
    }
    Ok(ChainType::new(chains))
}

/// Deterministic greedy adapted basis.
pub fn graded_jordan_basis(phi: &GradedElement) -> Result<AdaptedBasis, Error> {
    build_adapted_basis::<rand::rngs::ThreadRng>(phi, None)
}

/// Adapted basis with seeded choice of complements, chain order and chain
/// scaling. Different seeds give genuinely different bases for the same
/// element; every downstream orbit invariant must not notice.
pub fn graded_jordan_basis_seeded<R: Rng>(
    phi: &GradedElement,
    rng: &mut R,
) -> Result<AdaptedBasis, Error> {
    build_adapted_basis(phi, Some(rng))
}

fn build_adapted_basis<R: Rng>(
    phi: &GradedElement,
    mut rng: Option<&mut R>,
) -> Result<AdaptedBasis, Error> {
    if !is_nilpotent(phi) {
        return Err(Error::NotNilpotent);
    }
    let space = phi.space().clone();
    let m = space.modulus();
    let n = space.total_dim();
    let delta = phi.degree();
    let pows = label_powers(phi, n);

    // kernels[l][i]: basis rows of ker(φ^l|V_i)
    let mut kernels: Vec<Vec<Vec<Vec<Rat>>>> = Vec::with_capacity(n + 1);
    for level in &pows {
        kernels.push((0..m).map(|i| level[i].nullspace()).collect());
    }
    let index = (1..=n)
        .find(|&l| (0..m).all(|i| kernels[l][i].len() == space.dim(i)))
        .unwrap_or(0);

    let mut chains: Vec<AdaptedChain> = Vec::new();
    for l in (1..=index).rev() {
        for i in 0..m {
            let prev = space.add_label(i, -(delta as i64));
            let mut span = RowSpan::new(space.dim(i));
            for v in &kernels[l - 1][i] {
                span.add(v);
            }
            for v in &kernels[(l + 1).min(index)][prev] {
                let image = phi.block(prev).apply(v);
                span.add(&image);
            }
            let mut candidates: Vec<&Vec<Rat>> = kernels[l][i].iter().collect();
            if let Some(r) = rng.as_deref_mut() {
                candidates.shuffle(r);
            }
            for head in candidates {
                if !span.add(head) {
                    continue;
                }
                let mut vectors = vec![head.clone()];
                for step in 1..l {
                    let lab = space.add_label(i, ((step - 1) * delta) as i64);
                    let next = phi.block(lab).apply(vectors.last().unwrap());
                    debug_assert!(next.iter().any(|x| !x.is_zero()));
                    vectors.push(next);
                }
                if let Some(r) = rng.as_deref_mut() {
                    let scale = Rat::new(r.gen_range(1..=3), r.gen_range(1..=2))
                        * Rat::from(if r.gen_bool(0.5) { 1 } else { -1 });
                    for v in &mut vectors {
                        for x in v.iter_mut() {
                            *x = (&*x) * &scale;
                        }
                    }
                }
                chains.push(AdaptedChain { head: i, vectors });
            }
        }
    }

    if let Some(r) = rng {
        chains.shuffle(r);
    } else {
        chains.sort_by_key(|c| (c.head, Reverse(c.vectors.len())));
    }

    let basis = AdaptedBasis {
        space: space.clone(),
        degree: delta,
        chains,
    };
    // The union of the chains must be a basis of V.
    let mut global = RowSpan::new(n);
    let p = basis.to_global();
    for c in 0..n {
        global.add(&p.col(c));
    }
    assert_eq!(global.rank(), n, "adapted chains failed to span");
    Ok(basis)
}

/// A graded sl2 triple: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`, with
/// e of degree δ, h of degree 0 and f of degree -δ.
#[derive(Clone, Debug)]
pub struct Sl2Triple {
    pub e: GradedElement,
    pub h: GradedElement,
    pub f: GradedElement,
}

impl Sl2Triple {
    /// Checks the three bracket relations exactly.
    pub fn verify(&self) -> bool {
        let he = self.h.bracket(&self.e).unwrap();
        let hf = self.h.bracket(&self.f).unwrap();
        let ef = self.e.bracket(&self.f).unwrap();
        he == self.e.scale(&Rat::from(2)) && hf == self.f.scale(&Rat::from(-2)) && ef == self.h
    }
}

/// Completes a nilpotent x of degree δ to a graded sl2 triple.
///
/// On an adapted chain of length l the convention is
/// h·w_N = (2N - (l-1))·w_N and f·w_N = N(l-N)·w_{N-1}, which makes the
/// relations exact and h integral diagonal in the adapted basis.
pub fn sl2_complete(x: &GradedElement) -> Result<Sl2Triple, Error> {
    sl2_complete_via(x, &graded_jordan_basis(x)?)
}

/// Same, through a caller-supplied adapted basis of x.
pub fn sl2_complete_via(x: &GradedElement, basis: &AdaptedBasis) -> Result<Sl2Triple, Error> {
    let space = x.space().clone();
    let n = space.total_dim();
    let delta = x.degree();

    let mut h_ad = Mat::<Rat>::zeros(n, n);
    let mut f_ad = Mat::<Rat>::zeros(n, n);
    let mut col = 0;
    for chain in basis.chains() {
        let l = chain.vectors.len() as i64;
        for step in 0..chain.vectors.len() {
            let s = step as i64;
            h_ad.set(col, col, Rat::from(2 * s - (l - 1)));
            if step > 0 {
                f_ad.set(col - 1, col, Rat::from(s * (l - s)));
            }
            col += 1;
        }
    }

    let p = basis.to_global();
    let p_inv = p.inverse().expect("adapted basis is invertible");
    let h_global = p.matmul(&h_ad).matmul(&p_inv);
    let f_global = p.matmul(&f_ad).matmul(&p_inv);
    let h = GradedElement::from_global(&space, 0, &h_global)?;
    let f = GradedElement::from_global(&space, space.label(-(delta as i64)), &f_global)?;
    Ok(Sl2Triple { e: x.clone(), h, f })
}

/// The weight cocharacter of a triple: the decomposition of each V_i into
/// integer eigenspaces of h. Errors when h is not diagonalizable over Q with
/// integer eigenvalues, which signals a corrupted triple.
pub fn iota_cocharacter(triple: &Sl2Triple) -> Result<RationalCocharacter, Error> {
    let space = triple.h.space().clone();
    let n = space.total_dim() as i64;
    let mut weights = Vec::with_capacity(space.modulus());
    let mut bases = Vec::with_capacity(space.modulus());
    for i in 0..space.modulus() {
        let d = space.dim(i);
        let block = triple.h.block(i);
        let mut label_weights = Vec::with_capacity(d);
        let mut columns: Vec<Vec<Rat>> = Vec::with_capacity(d);
        for c in -(n.max(1) - 1)..=(n.max(1) - 1) {
            let shifted = block.sub(&Mat::identity(d).scale(&Rat::from(c)));
            for v in shifted.nullspace() {
                label_weights.push(Rat::from(c));
                columns.push(v);
            }
            if label_weights.len() == d {
                break;
            }
        }
        if label_weights.len() != d {
            return Err(Error::CorruptTriple(format!(
                "h is not integrally diagonalizable on label {i}"
            )));
        }
        let basis = Mat::from_fn(d, d, |r, c| columns[c][r].clone());
        weights.push(label_weights);
        bases.push(basis);
    }
    RationalCocharacter::with_basis(space, weights, bases)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_chain(m: usize) -> GradedElement {
        // single chain 0 -> 1 -> ... of full length m on dims (1,...,1)
        ChainType::new(vec![(0, m)]).standard_element(m)
    }

    #[test]
    fn nilpotency() {
        let space = GradedSpace::new(2, vec![1, 1]);
        assert!(is_nilpotent(&GradedElement::zero(space.clone(), 1)));

        // full cycle: both maps invertible, composition is the identity
        let mut cyc = GradedElement::zero(space.clone(), 1);
        cyc.block_mut(0).set(0, 0, Rat::one());
        cyc.block_mut(1).set(0, 0, Rat::one());
        assert!(!is_nilpotent(&cyc));

        assert!(is_nilpotent(&two_chain(2)));
    }

    #[test]
    fn chain_type_zero_element() {
        let space = GradedSpace::new(2, vec![2, 1]);
        let t = chain_type_of(&GradedElement::zero(space, 1)).unwrap();
        assert_eq!(t.chains(), &[(0, 1), (0, 1), (1, 1)]);
    }

    #[test]
    fn chain_type_single_chain() {
        assert_eq!(chain_type_of(&two_chain(2)).unwrap().chains(), &[(0, 2)]);

        // length-4 chain on m=2, dims (2,2)
        let t = ChainType::new(vec![(0, 4)]);
        let e = t.standard_element(2);
        assert_eq!(e.space().dims(), &[2, 2]);
        assert_eq!(chain_type_of(&e).unwrap(), t);
    }

    #[test]
    fn chain_type_rejects_non_nilpotent() {
        let space = GradedSpace::new(2, vec![1, 1]);
        let mut cyc = GradedElement::zero(space, 1);
        cyc.block_mut(0).set(0, 0, Rat::one());
        cyc.block_mut(1).set(0, 0, Rat::one());
        assert!(matches!(chain_type_of(&cyc), Err(Error::NotNilpotent)));
    }

    #[test]
    fn jordan_basis_matches_chain_type() {
        let e = two_chain(2);
        let b = graded_jordan_basis(&e).unwrap();
        assert_eq!(b.chain_type(), chain_type_of(&e).unwrap());
        let chain = &b.chains()[0];
        assert_eq!(chain.head, 0);
        assert_eq!(chain.vectors.len(), 2);
        // w_1 = φ(w_0)
        assert_eq!(chain.vectors[1], e.block(0).apply(&chain.vectors[0]));
    }

    #[test]
    fn jordan_basis_direct_sum() {
        // block-diagonal sum of chains (0,2) and (1,2) on m=2, dims (2,2)
        let t = ChainType::new(vec![(0, 2), (1, 2)]);
        let e = t.standard_element(2);
        let b = graded_jordan_basis(&e).unwrap();
        assert_eq!(b.chain_type(), t);
    }

    #[test]
    fn jordan_basis_of_zero_is_singletons() {
        let space = GradedSpace::new(2, vec![2, 1]);
        let b = graded_jordan_basis(&GradedElement::zero(space, 1)).unwrap();
        assert_eq!(b.chains().len(), 3);
        assert!(b.chains().iter().all(|c| c.vectors.len() == 1));
    }

    #[test]
    fn sl2_of_zero_is_zero() {
        let space = GradedSpace::new(2, vec![1, 1]);
        let x = GradedElement::zero(space.clone(), 1);
        let t = sl2_complete(&x).unwrap();
        assert!(t.h.is_zero() && t.f.is_zero());
        assert!(t.verify());
    }

    #[test]
    fn sl2_two_chain() {
        let x = two_chain(2);
        let t = sl2_complete(&x).unwrap();
        assert!(t.verify());
        assert_eq!(t.h.block(0).at(0, 0), &Rat::from(-1));
        assert_eq!(t.h.block(1).at(0, 0), &Rat::from(1));
        assert_eq!(t.f.block(1).at(0, 0), &Rat::one());
    }

    #[test]
    fn sl2_three_chain_coefficients() {
        let x = two_chain(3);
        let t = sl2_complete(&x).unwrap();
        assert!(t.verify());
        // h weights (-2, 0, 2); f coefficients N(l-N) = (2, 2)
        assert_eq!(t.h.block(0).at(0, 0), &Rat::from(-2));
        assert_eq!(t.h.block(1).at(0, 0), &Rat::from(0));
        assert_eq!(t.h.block(2).at(0, 0), &Rat::from(2));
        assert_eq!(t.f.block(1).at(0, 0), &Rat::from(2));
        assert_eq!(t.f.block(2).at(0, 0), &Rat::from(2));
    }

    #[test]
    fn iota_weights() {
        let x = two_chain(2);
        let t = sl2_complete(&x).unwrap();
        let iota = iota_cocharacter(&t).unwrap();
        assert_eq!(iota.weights(0), &[Rat::from(-1)]);
        assert_eq!(iota.weights(1), &[Rat::from(1)]);

        let x = two_chain(3);
        let t = sl2_complete(&x).unwrap();
        let iota = iota_cocharacter(&t).unwrap();
        assert_eq!(iota.weights(0), &[Rat::from(-2)]);
        assert_eq!(iota.weights(1), &[Rat::from(0)]);
        assert_eq!(iota.weights(2), &[Rat::from(2)]);

        let zero = sl2_complete(&GradedElement::zero(GradedSpace::new(2, vec![1, 1]), 1)).unwrap();
        let iota = iota_cocharacter(&zero).unwrap();
        assert_eq!(iota.weights(0), &[Rat::zero()]);
        assert_eq!(iota.weights(1), &[Rat::zero()]);
    }

    #[test]
    fn iota_rejects_corrupt_triple() {
        // an h that is nilpotent instead of semisimple cannot be
        // integrally diagonalized
        let space = GradedSpace::new(2, vec![2, 1]);
        let mut h = GradedElement::zero(space.clone(), 0);
        h.block_mut(0).set(0, 1, Rat::one());
        let broken = Sl2Triple {
            e: GradedElement::zero(space.clone(), 1),
            h,
            f: GradedElement::zero(space, 1),
        };
        assert!(matches!(
            iota_cocharacter(&broken),
            Err(Error::CorruptTriple(_))
        ));
    }

    #[test]
    fn chain_type_wire_format() {
        let t = ChainType::new(vec![(1, 1), (0, 2), (0, 1)]);
        assert_eq!(t.to_string(), "0:2,0:1,1:1");
        assert_eq!(
            "0:2, 0:1, 1:1"
                .replace(' ', "")
                .parse::<ChainType>()
                .unwrap(),
            t
        );
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, "[[0,2],[0,1],[1,1]]");
        assert_eq!(serde_json::from_str::<ChainType>(&json).unwrap(), t);
    }
}
