//! Dense matrices over an exact field, with Gaussian elimination.
//!
//! Everything here is generic over [`Scalar`] so the same elimination code
//! serves both the rationals and the small prime fields used by the
//! brute-force oracle. Dimensions are tiny throughout, so the matrices are
//! dense and the algorithms are the plain ones.

use crate::rat::Rat;

/// An exact field element.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;
}

impl Scalar for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols));
        Mat {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add(b))
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.sub(b))
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(k)).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out: Mat<T> = Mat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(r, c).add(&a.mul(b));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for (c, vc) in v.iter().enumerate() {
                    let a = self.at(r, c);
                    if !a.is_zero() && !vc.is_zero() {
                        acc = acc.add(&a.mul(vc));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc.add(self.at(i, i));
        }
        acc
    }

    /// Rank over the field, by forward elimination on a scratch copy.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(rank, p);
            let inv = m.at(rank, col).inv();
            for r in rank + 1..m.rows {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).mul(&inv);
                m.eliminate_row(r, rank, &factor, col);
            }
            rank += 1;
        }
        rank
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.at(r, col).inv();
            for c in col..m.cols {
                let v = m.at(r, c).mul(&inv);
                m.set(r, c, v);
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, col).is_zero() {
                    let factor = m.at(i, col).clone();
                    m.eliminate_row(i, r, &factor, col);
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of the right null space, as rows.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (rref, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_iter = pivots.iter().copied().peekable();
        let free: Vec<usize> = (0..self.cols)
            .filter(|&c| {
                if pivot_iter.peek() == Some(&c) {
                    pivot_iter.next();
                    false
                } else {
                    true
                }
            })
            .collect();
        for &f in &free {
            let mut v = vec![T::zero(); self.cols];
            v[f] = T::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = rref.at(row, f).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, T::one());
        }
        let (rref, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Mat::from_fn(n, n, |r, c| rref.at(r, n + c).clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// row[i] -= factor * row[pivot], starting at column `from`.
    fn eliminate_row(&mut self, i: usize, pivot: usize, factor: &T, from: usize) {
        for c in from..self.cols {
            let p = self.at(pivot, c);
            if p.is_zero() {
                continue;
            }
            let v = self.at(i, c).sub(&factor.mul(p));
            self.set(i, c, v);
        }
    }
}

impl<T: Scalar> std::fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

/// An incrementally built row space kept in echelon form.
///
/// Used for complement picking, membership tests and subspace comparisons.
pub struct RowSpan<T: Scalar> {
    cols: usize,
    /// Echelon rows, each normalized to a leading 1, sorted by pivot column.
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Scalar> RowSpan<T> {
    pub fn new(cols: usize) -> Self {
        RowSpan {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<'a, I: IntoIterator<Item = &'a [T]>>(cols: usize, rows: I) -> Self
    where
        T: 'a,
    {
        let mut s = Self::new(cols);
        for r in rows {
            s.add(r);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the span; returns the remainder.
    fn reduce(&self, row: &[T]) -> Vec<T> {
        assert_eq!(row.len(), self.cols);
        let mut v = row.to_vec();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for c in p..self.cols {
                if !r[c].is_zero() {
                    v[c] = v[c].sub(&factor.mul(&r[c]));
                }
            }
        }
        v
    }

    /// Adds a row; returns true when it enlarged the span.
    pub fn add(&mut self, row: &[T]) -> bool {
        let v = self.reduce(row);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv();
        let normalized: Vec<T> = v.iter().map(|x| x.mul(&inv)).collect();
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, normalized);
        self.pivots.insert(at, p);
        true
    }

    pub fn contains(&self, row: &[T]) -> bool {
        self.reduce(row).iter().all(Scalar::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rat {
        Rat::from(n)
    }

    #[test]
    fn rank_zero_matrix() {
        assert_eq!(Mat::<Rat>::zeros(2, 2).rank(), 0);
    }

    #[test]
    fn rank_identity() {
        assert_eq!(Mat::<Rat>::identity(2).rank(), 2);
    }

    #[test]
    fn rank_dependent_rows() {
        // [[1,2],[2,4]] row-reduces to a single pivot.
        let m = Mat::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn nullspace_and_inverse() {
        let m = Mat::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(m.apply(v).iter().all(Rat::is_zero));
        }

        let m = Mat::from_rows(vec![vec![q(2), q(1)], vec![q(1), q(1)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv), Mat::identity(2));
        let singular = Mat::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn row_span_membership() {
        let mut s = RowSpan::new(3);
        assert!(s.add(&[q(1), q(1), q(0)]));
        assert!(s.add(&[q(0), q(1), q(1)]));
        assert!(!s.add(&[q(1), q(2), q(1)]));
        assert_eq!(s.rank(), 2);
        assert!(s.contains(&[q(2), q(3), q(1)]));
        assert!(!s.contains(&[q(0), q(0), q(1)]));
    }
}
