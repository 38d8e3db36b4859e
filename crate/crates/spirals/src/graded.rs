//! Z/m-graded spaces and homogeneous endomorphisms.
//!
//! A [`GradedSpace`] is V = ⊕_{i∈Z/m} V_i with an explicit basis per label.
//! A [`GradedElement`] of degree d is a block matrix collection
//! Hom(V_j, V_{j+d}) for every j, with exact rational entries; degree-0
//! elements of the special linear algebra additionally have total trace 0.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::mat::Mat;
use crate::rat::Rat;

/// A Z/m-graded space, described by its modulus and per-label dimensions.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GradedSpace {
    m: usize,
    dims: Vec<usize>,
}

impl GradedSpace {
    pub fn new(m: usize, dims: Vec<usize>) -> Self {
        assert!(m >= 1, "modulus must be positive");
        assert_eq!(dims.len(), m, "need one dimension per label");
        GradedSpace { m, dims }
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, label: usize) -> usize {
        self.dims[label % self.m]
    }

    /// Total dimension n = Σ dim V_i.
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Label arithmetic in Z/m; accepts any signed offset.
    pub fn label(&self, i: i64) -> usize {
        i.rem_euclid(self.m as i64) as usize
    }

    pub fn add_label(&self, i: usize, offset: i64) -> usize {
        self.label(i as i64 + offset)
    }

    /// Offset of V_i inside the concatenated basis of V.
    pub fn offset(&self, label: usize) -> usize {
        self.dims[..label % self.m].iter().sum()
    }

    /// The basis as (label, index) pairs, grouped by label in label order.
    pub fn basis(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.total_dim());
        for (i, &d) in self.dims.iter().enumerate() {
            for k in 0..d {
                out.push((i, k));
            }
        }
        out
    }

    /// Dimension of Hom-blocks of degree d: Σ_j dim V_{j+d} · dim V_j.
    pub fn hom_dim(&self, degree: usize) -> usize {
        (0..self.m)
            .map(|j| self.dim(self.add_label(j, degree as i64)) * self.dim(j))
            .sum()
    }

    /// Dimension of the degree-d part of sl(V): the full Hom dimension,
    /// minus one for the trace condition in degree 0.
    pub fn sl_dim(&self, degree: usize) -> usize {
        let full = self.hom_dim(degree);
        if degree.is_multiple_of(self.m) && full > 0 {
            full - 1
        } else {
            full
        }
    }
}

/// A homogeneous endomorphism of a graded space.
#[derive(Clone, PartialEq, Debug)]
pub struct GradedElement {
    space: GradedSpace,
    degree: usize,
    /// blocks[j]: V_j -> V_{j+degree}, of shape dim(j+degree) x dim(j).
    blocks: Vec<Mat<Rat>>,
    /// True when the total trace vanishes; always true in degree != 0.
    traceless: bool,
}

impl GradedElement {
    pub fn new(space: GradedSpace, degree: usize, blocks: Vec<Mat<Rat>>) -> Self {
        let degree = degree % space.m;
        assert_eq!(blocks.len(), space.m);
        for (j, b) in blocks.iter().enumerate() {
            assert_eq!(b.rows(), space.dim(space.add_label(j, degree as i64)));
            assert_eq!(b.cols(), space.dim(j));
        }
        let traceless = if degree == 0 {
            blocks
                .iter()
                .fold(Rat::zero(), |acc, b| acc + b.trace())
                .is_zero()
        } else {
            true
        };
        GradedElement {
            space,
            degree,
            blocks,
            traceless,
        }
    }

    pub fn zero(space: GradedSpace, degree: usize) -> Self {
        let degree = degree % space.m;
        let blocks = (0..space.m)
            .map(|j| Mat::zeros(space.dim(space.add_label(j, degree as i64)), space.dim(j)))
            .collect();
        GradedElement::new(space, degree, blocks)
    }

    /// Single nonzero entry: coefficient c on the map sending basis vector
    /// `src` of V_j to basis vector `dst` of V_{j+degree}.
    pub fn unit(
        space: GradedSpace,
        degree: usize,
        j: usize,
        dst: usize,
        src: usize,
        c: Rat,
    ) -> Self {
        let mut e = Self::zero(space, degree);
        e.blocks[j].set(dst, src, c);
        e.traceless = e.degree != 0 || dst != src || e.blocks[j].at(dst, src).is_zero();
        e
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn block(&self, j: usize) -> &Mat<Rat> {
        &self.blocks[j % self.space.m]
    }

    /// Mutable block access; callers that edit degree-0 blocks should rebuild
    /// through [`GradedElement::new`] to refresh the traceless flag.
    pub fn block_mut(&mut self, j: usize) -> &mut Mat<Rat> {
        let j = j % self.space.m;
        &mut self.blocks[j]
    }

    pub fn into_blocks(self) -> Vec<Mat<Rat>> {
        self.blocks
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Mat::is_zero)
    }

    pub fn is_traceless(&self) -> bool {
        self.traceless
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.space != other.space || self.degree != other.degree {
            return Err(Error::SpaceMismatch);
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(GradedElement::new(self.space.clone(), self.degree, blocks))
    }

    pub fn scale(&self, k: &Rat) -> Self {
        let blocks = self.blocks.iter().map(|b| b.scale(k)).collect();
        GradedElement::new(self.space.clone(), self.degree, blocks)
    }

    pub fn neg(&self) -> Self {
        self.scale(&Rat::from(-1))
    }

    /// Composition self ∘ other; degree adds in Z/m.
    pub fn compose(&self, other: &Self) -> Result<Self, Error> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        let m = self.space.m;
        let degree = (self.degree + other.degree) % m;
        let blocks = (0..m)
            .map(|j| {
                let mid = (j + other.degree) % m;
                if other.blocks[j].is_zero() || self.blocks[mid].is_zero() {
                    Mat::zeros(
                        self.space.dim(self.space.add_label(j, degree as i64)),
                        self.space.dim(j),
                    )
                } else {
                    self.blocks[mid].matmul(&other.blocks[j])
                }
            })
            .collect();
        Ok(GradedElement::new(self.space.clone(), degree, blocks))
    }

    /// k-fold composition with itself.
    pub fn power(&self, k: usize) -> Self {
        let mut acc = GradedElement::zero(self.space.clone(), 0);
        for (j, b) in acc.blocks.iter_mut().enumerate() {
            *b = Mat::identity(self.space.dim(j));
        }
        acc.traceless = self.space.total_dim() == 0;
        for _ in 0..k {
            acc = self.compose(&acc).expect("same space");
        }
        acc
    }

    /// Lie bracket [self, other] = self∘other − other∘self.
    pub fn bracket(&self, other: &Self) -> Result<Self, Error> {
        let ab = self.compose(other)?;
        let ba = other.compose(self)?;
        let blocks = ab
            .blocks
            .iter()
            .zip(&ba.blocks)
            .map(|(x, y)| x.sub(y))
            .collect();
        Ok(GradedElement::new(self.space.clone(), ab.degree, blocks))
    }

    /// Invariant pairing ⟨a,b⟩ = tr(ab); zero unless deg a + deg b = 0 in Z/m.
    pub fn trace_pair(&self, other: &Self) -> Result<Rat, Error> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        if !(self.degree + other.degree).is_multiple_of(self.space.m) {
            return Ok(Rat::zero());
        }
        // tr(ab) summed block by block without forming the product.
        let mut acc = Rat::zero();
        for j in 0..self.space.m {
            let b = &other.blocks[j];
            let a = &self.blocks[(j + other.degree) % self.space.m];
            if a.is_zero() || b.is_zero() {
                continue;
            }
            for r in 0..a.rows() {
                for c in 0..a.cols() {
                    let x = a.at(r, c);
                    let y = b.at(c, r);
                    if !x.is_zero() && !y.is_zero() {
                        acc = acc + x * y;
                    }
                }
            }
        }
        Ok(acc)
    }

    /// Coordinates of the element in the concatenated Hom-block basis,
    /// blocks in label order, each row-major.
    pub fn flatten(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.space.hom_dim(self.degree));
        for j in 0..self.space.m {
            let b = &self.blocks[j];
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    out.push(b.at(r, c).clone());
                }
            }
        }
        out
    }

    /// Rebuilds an element from `flatten` coordinates.
    pub fn unflatten(space: &GradedSpace, degree: usize, coords: &[Rat]) -> Self {
        let mut e = GradedElement::zero(space.clone(), degree);
        let mut k = 0;
        for j in 0..space.m {
            let rows = space.dim(space.add_label(j, degree as i64));
            let cols = space.dim(j);
            for r in 0..rows {
                for c in 0..cols {
                    e.blocks[j].set(r, c, coords[k].clone());
                    k += 1;
                }
            }
        }
        GradedElement::new(e.space, e.degree, e.blocks)
    }

    /// The whole endomorphism as one n×n matrix over the concatenated basis.
    pub fn to_global(&self) -> Mat<Rat> {
        let n = self.space.total_dim();
        let mut g = Mat::zeros(n, n);
        for j in 0..self.space.m {
            let t = self.space.add_label(j, self.degree as i64);
            let (ro, co) = (self.space.offset(t), self.space.offset(j));
            let b = &self.blocks[j];
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    g.set(ro + r, co + c, b.at(r, c).clone());
                }
            }
        }
        g
    }

    /// Slices a global n×n matrix into the degree-d graded blocks, failing if
    /// anything lives outside them.
    pub fn from_global(space: &GradedSpace, degree: usize, g: &Mat<Rat>) -> Result<Self, Error> {
        let n = space.total_dim();
        assert_eq!((g.rows(), g.cols()), (n, n));
        let mut e = GradedElement::zero(space.clone(), degree);
        let basis = space.basis();
        for (row, &(ri, rk)) in basis.iter().enumerate() {
            for (col, &(ci, ck)) in basis.iter().enumerate() {
                let v = g.at(row, col);
                if v.is_zero() {
                    continue;
                }
                if ri != space.add_label(ci, degree as i64) {
                    return Err(Error::CorruptTriple(format!(
                        "entry ({row},{col}) falls outside degree {degree}"
                    )));
                }
                e.blocks[ci].set(rk, ck, v.clone());
            }
        }
        Ok(GradedElement::new(e.space, e.degree, e.blocks))
    }
}

/// Basis of the degree-d part of sl(V) in the standard basis: all
/// off-diagonal matrix units, plus consecutive differences of diagonal units
/// when d = 0 (the traceless diagonal).
pub fn sl_degree_basis(space: &GradedSpace, degree: usize) -> Vec<GradedElement> {
    let m = space.modulus();
    let degree = degree % m;
    let mut out = Vec::new();
    let mut diag_units = Vec::new();
    for j in 0..m {
        let t = space.add_label(j, degree as i64);
        for dst in 0..space.dim(t) {
            for src in 0..space.dim(j) {
                if degree == 0 && dst == src {
                    diag_units.push((j, src));
                } else {
                    out.push(GradedElement::unit(
                        space.clone(),
                        degree,
                        j,
                        dst,
                        src,
                        Rat::one(),
                    ));
                }
            }
        }
    }
    for w in diag_units.windows(2) {
        let (j0, k0) = w[0];
        let (j1, k1) = w[1];
        let mut e = GradedElement::zero(space.clone(), 0);
        e.block_mut(j0).set(k0, k0, Rat::one());
        e.block_mut(j1).set(k1, k1, Rat::from(-1));
        out.push(GradedElement::new(e.space, 0, e.blocks));
    }
    out
}
