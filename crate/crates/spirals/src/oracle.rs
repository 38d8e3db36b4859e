//! Brute-force oracle over small prime fields.
//!
//! Enumerates every degree-1̄ quiver representation over F_q, filters the
//! nilpotent ones and reads off chain types with the same rank formula as
//! the exact path, but over F_q. Chain representatives have 0/1 entries, so
//! the set of realized types is independent of the field; comparing realized
//! sets against the combinatorial census validates both.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::graded::GradedSpace;
use crate::mat::{Mat, Scalar};
use crate::nilpotent::ChainType;

/// An element of the prime field F_Q.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fq<const Q: u32>(u32);

impl<const Q: u32> Fq<Q> {
    pub fn new(v: u32) -> Self {
        Fq(v % Q)
    }
}

impl<const Q: u32> Scalar for Fq<Q> {
    fn zero() -> Self {
        Fq(0)
    }
    fn one() -> Self {
        Fq(1 % Q)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Fq((self.0 + other.0) % Q)
    }
    fn sub(&self, other: &Self) -> Self {
        Fq((self.0 + Q - other.0) % Q)
    }
    fn mul(&self, other: &Self) -> Self {
        Fq(self.0 * other.0 % Q)
    }
    fn neg(&self) -> Self {
        Fq((Q - self.0) % Q)
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        // q is tiny; exhaustive search beats bookkeeping
        let inv = (1..Q)
            .find(|&x| x * self.0 % Q == 1)
            .expect("prime modulus");
        Fq(inv)
    }
}

/// Guard on the enumeration space q^(dim g_1̄).
const ENUMERATION_GUARD: u128 = 10_000_000;

struct FqRep<const Q: u32> {
    blocks: Vec<Mat<Fq<Q>>>,
}

impl<const Q: u32> FqRep<Q> {
    /// φ^l restricted to V_i.
    fn label_power(&self, space: &GradedSpace, l: usize, i: usize) -> Mat<Fq<Q>> {
        let mut acc = Mat::identity(space.dim(i));
        for step in 0..l {
            acc = self.blocks[space.add_label(i, step as i64)].matmul(&acc);
        }
        acc
    }

    fn is_nilpotent(&self, space: &GradedSpace) -> bool {
        let n = space.total_dim();
        (0..space.modulus()).all(|i| self.label_power(space, n, i).is_zero())
    }

    fn chain_type(&self, space: &GradedSpace) -> ChainType {
        let m = space.modulus();
        let n = space.total_dim();
        // ranks[l][i] = rank(φ^l | V_i); level n+1 stays zero
        let mut ranks = vec![vec![0i64; m]; n + 2];
        for (l, row) in ranks.iter_mut().enumerate().take(n + 1) {
            for (i, r) in row.iter_mut().enumerate() {
                *r = self.label_power(space, l, i).rank() as i64;
            }
        }
        let mut chains = Vec::new();
        for i in 0..m {
            let prev = space.add_label(i, -1);
            let at_least = |l: usize| ranks[l - 1][i] - ranks[l][prev];
            for l in 1..=n {
                let exactly = at_least(l) - at_least(l + 1);
                debug_assert!(exactly >= 0);
                for _ in 0..exactly {
                    chains.push((i, l));
                }
            }
        }
        ChainType::new(chains)
    }
}

fn entry_count(space: &GradedSpace) -> usize {
    (0..space.modulus())
        .map(|j| space.dim(space.add_label(j, 1)) * space.dim(j))
        .sum()
}

fn guard(space: &GradedSpace, q: u32) -> Result<usize, Error> {
    let entries = entry_count(space);
    let size = (q as u128).checked_pow(entries as u32);
    match size {
        Some(s) if s <= ENUMERATION_GUARD => Ok(entries),
        _ => Err(Error::SizeGuard(format!(
            "{q}^{entries} exceeds {ENUMERATION_GUARD}"
        ))),
    }
}

fn scan<const Q: u32, T>(space: &GradedSpace, mut visit: impl FnMut(&FqRep<Q>) -> T) -> Vec<T> {
    let m = space.modulus();
    let entries = entry_count(space);
    let shapes: Vec<(usize, usize)> = (0..m)
        .map(|j| (space.dim(space.add_label(j, 1)), space.dim(j)))
        .collect();
    let mut digits = vec![0u32; entries];
    let mut out = Vec::new();
    loop {
        let mut rep = FqRep::<Q> {
            blocks: shapes.iter().map(|&(r, c)| Mat::zeros(r, c)).collect(),
        };
        let mut k = 0;
        for (j, &(r, c)) in shapes.iter().enumerate() {
            for row in 0..r {
                for col in 0..c {
                    rep.blocks[j].set(row, col, Fq::new(digits[k]));
                    k += 1;
                }
            }
        }
        out.push(visit(&rep));
        // odometer
        let mut pos = 0;
        loop {
            if pos == entries {
                return out;
            }
            digits[pos] += 1;
            if digits[pos] < Q {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

fn dispatch<T>(
    q: u32,
    f2: impl FnOnce() -> T,
    f3: impl FnOnce() -> T,
    f5: impl FnOnce() -> T,
) -> Result<T, Error> {
    match q {
        2 => Ok(f2()),
        3 => Ok(f3()),
        5 => Ok(f5()),
        _ => Err(Error::Parse(format!(
            "unsupported field size {q}, use 2, 3 or 5"
        ))),
    }
}

/// The set of chain types realized by nilpotent degree-1̄ elements over F_q.
pub fn realized_chain_types_fq(space: &GradedSpace, q: u32) -> Result<BTreeSet<ChainType>, Error> {
    guard(space, q)?;
    fn run<const Q: u32>(space: &GradedSpace) -> BTreeSet<ChainType> {
        let mut types = BTreeSet::new();
        for t in scan::<Q, Option<ChainType>>(space, |rep| {
            rep.is_nilpotent(space).then(|| rep.chain_type(space))
        })
        .into_iter()
        .flatten()
        {
            types.insert(t);
        }
        types
    }
    dispatch(
        q,
        || run::<2>(space),
        || run::<3>(space),
        || run::<5>(space),
    )
}

/// Number of nilpotent points of g_1̄ over F_q.
pub fn count_nilpotents_fq(space: &GradedSpace, q: u32) -> Result<u64, Error> {
    guard(space, q)?;
    fn run<const Q: u32>(space: &GradedSpace) -> u64 {
        scan::<Q, bool>(space, |rep| rep.is_nilpotent(space))
            .into_iter()
            .filter(|&b| b)
            .count() as u64
    }
    dispatch(
        q,
        || run::<2>(space),
        || run::<3>(space),
        || run::<5>(space),
    )
}
