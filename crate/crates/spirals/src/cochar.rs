//! Rational cocharacters: Q-gradings of each V_i.
//!
//! A cocharacter assigns a rational weight to each vector of a chosen basis
//! of every V_i; the weight slices are the subspaces spanned by equal-weight
//! basis columns. The basis defaults to the standard one, but carriers such
//! as the eigenspace decomposition of an sl2 weight element need their own
//! columns, so the basis travels with the weights.

use num::bigint::BigInt;
use num::One;

use crate::error::Error;
use crate::graded::GradedSpace;
use crate::mat::Mat;
use crate::rat::Rat;

#[derive(Clone, Debug)]
pub struct RationalCocharacter {
    space: GradedSpace,
    /// weights[i][k] is the weight of basis column k of V_i.
    weights: Vec<Vec<Rat>>,
    /// basis[i] has the weight basis of V_i as columns.
    basis: Vec<Mat<Rat>>,
    inv: Vec<Mat<Rat>>,
    diagonal: bool,
}

impl RationalCocharacter {
    /// Weights along the standard basis of each V_i.
    pub fn diagonal(space: GradedSpace, weights: Vec<Vec<Rat>>) -> Self {
        assert_eq!(weights.len(), space.modulus());
        for (i, w) in weights.iter().enumerate() {
            assert_eq!(w.len(), space.dim(i), "one weight per basis vector");
        }
        let basis: Vec<Mat<Rat>> = (0..space.modulus())
            .map(|i| Mat::identity(space.dim(i)))
            .collect();
        let inv = basis.clone();
        RationalCocharacter {
            space,
            weights,
            basis,
            inv,
            diagonal: true,
        }
    }

    /// The zero cocharacter.
    pub fn zero(space: GradedSpace) -> Self {
        let weights = (0..space.modulus())
            .map(|i| vec![Rat::zero(); space.dim(i)])
            .collect();
        Self::diagonal(space, weights)
    }

    /// Weights along caller-supplied per-label bases (columns).
    pub fn with_basis(
        space: GradedSpace,
        weights: Vec<Vec<Rat>>,
        basis: Vec<Mat<Rat>>,
    ) -> Result<Self, Error> {
        assert_eq!(weights.len(), space.modulus());
        assert_eq!(basis.len(), space.modulus());
        let mut inv = Vec::with_capacity(basis.len());
        for (i, b) in basis.iter().enumerate() {
            assert_eq!((b.rows(), b.cols()), (space.dim(i), space.dim(i)));
            assert_eq!(weights[i].len(), space.dim(i));
            inv.push(b.inverse().ok_or(Error::SingularBasis(i))?);
        }
        let diagonal = basis.iter().all(|b| *b == Mat::identity(b.rows()));
        Ok(RationalCocharacter {
            space,
            weights,
            basis,
            inv,
            diagonal,
        })
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn weights(&self, label: usize) -> &[Rat] {
        &self.weights[label % self.space.modulus()]
    }

    pub fn basis_matrix(&self, label: usize) -> &Mat<Rat> {
        &self.basis[label % self.space.modulus()]
    }

    pub fn inv_basis_matrix(&self, label: usize) -> &Mat<Rat> {
        &self.inv[label % self.space.modulus()]
    }

    pub fn is_diagonal(&self) -> bool {
        self.diagonal
    }

    /// True when both cocharacters grade along the same per-label columns.
    pub fn same_basis(&self, other: &Self) -> bool {
        self.space == other.space && self.basis == other.basis
    }

    pub fn total_weight(&self) -> Rat {
        self.weights.iter().flatten().cloned().sum()
    }

    /// max weight - min weight over all labels; zero when V = 0.
    pub fn spread(&self) -> Rat {
        let all: Vec<&Rat> = self.weights.iter().flatten().collect();
        match (all.iter().min(), all.iter().max()) {
            (Some(lo), Some(hi)) => (*hi).clone() - (*lo).clone(),
            _ => Rat::zero(),
        }
    }

    /// Applies f to every weight, keeping the basis.
    pub fn map_weights(&self, f: impl Fn(&Rat) -> Rat) -> Self {
        let weights = self
            .weights
            .iter()
            .map(|w| w.iter().map(&f).collect())
            .collect();
        RationalCocharacter {
            space: self.space.clone(),
            weights,
            basis: self.basis.clone(),
            inv: self.inv.clone(),
            diagonal: self.diagonal,
        }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        self.map_weights(|w| w * k)
    }

    pub fn negated(&self) -> Self {
        self.map_weights(|w| -w)
    }

    /// Shifts all weights so the total becomes zero (the determinant-one
    /// normalization); no-op on the zero space.
    pub fn recentered(&self) -> Self {
        let n = self.space.total_dim();
        if n == 0 {
            return self.clone();
        }
        let shift = self.total_weight() / Rat::from(n as i64);
        self.map_weights(|w| w - &shift)
    }

    /// Distinct weights of V_i in increasing order, with the basis columns
    /// carrying each weight.
    pub fn slices(&self, label: usize) -> Vec<(Rat, Vec<usize>)> {
        let mut out: Vec<(Rat, Vec<usize>)> = Vec::new();
        let mut order: Vec<usize> = (0..self.weights(label).len()).collect();
        order.sort_by_key(|&k| self.weights(label)[k].clone());
        for k in order {
            let w = &self.weights(label)[k];
            match out.last_mut() {
                Some((lw, cols)) if lw == w => cols.push(k),
                _ => out.push((w.clone(), vec![k])),
            }
        }
        out
    }

    /// Least common multiple of all weight denominators (the scaling r with
    /// r·mu integral); 1 on the zero space.
    pub fn denominator_scale(&self) -> BigInt {
        let mut l = BigInt::one();
        for w in self.weights.iter().flatten() {
            l = w.denom_lcm(&l);
        }
        l
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recenter_and_spread() {
        let space = GradedSpace::new(2, vec![2, 1]);
        let mu = RationalCocharacter::diagonal(
            space,
            vec![vec![Rat::from(0), Rat::from(2)], vec![Rat::from(1)]],
        );
        assert_eq!(mu.spread(), Rat::from(2));
        let c = mu.recentered();
        assert!(c.total_weight().is_zero());
        assert_eq!(c.spread(), Rat::from(2));
        assert_eq!(c.weights(0)[0], Rat::from(-1));
    }

    #[test]
    fn slices_group_equal_weights() {
        let space = GradedSpace::new(1, vec![3]);
        let mu = RationalCocharacter::diagonal(
            space,
            vec![vec![Rat::new(1, 2), Rat::from(0), Rat::new(1, 2)]],
        );
        let s = mu.slices(0);
        assert_eq!(s.len(), 2);
        assert_eq!(s[0], (Rat::from(0), vec![1]));
        assert_eq!(s[1], (Rat::new(1, 2), vec![0, 2]));
        assert_eq!(mu.denominator_scale(), BigInt::from(2));
    }
}
