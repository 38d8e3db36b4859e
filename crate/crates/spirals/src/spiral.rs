//! ε-spirals from rational cocharacters.
//!
//! A cocharacter μ cuts each degree piece g_N̄ by the weight threshold:
//! p_N is spanned by the maps shifting weight by at least N·ε, the nilradical
//! u_N by those shifting strictly more, and the splitting l̃_N by those
//! shifting exactly N·ε. Spirals are stored intensionally as (μ, ε) and
//! materialized lazily; all subspace comparisons are extensional, by exact
//! rank. Beyond the window B = m·(1 + ⌈spread μ⌉) the family is provably
//! full or zero, which makes every axiom finitely checkable.

use serde::{Deserialize, Serialize};

use crate::cochar::RationalCocharacter;
use crate::error::Error;
use crate::graded::{sl_degree_basis, GradedElement, GradedSpace};
use crate::mat::{Mat, RowSpan};
use crate::nilpotent::{
    graded_jordan_basis_seeded, iota_cocharacter, is_nilpotent, sl2_complete, sl2_complete_via,
    AdaptedBasis,
};
use crate::rat::Rat;

/// A list of independent homogeneous elements spanning a subspace of g_N̄.
#[derive(Clone, Debug)]
pub struct SubspaceBasis {
    space: GradedSpace,
    degree: usize,
    members: Vec<GradedElement>,
}

impl SubspaceBasis {
    pub fn new(space: GradedSpace, degree: usize, members: Vec<GradedElement>) -> Self {
        debug_assert!(members
            .iter()
            .all(|e| e.degree() == degree % space.modulus() && e.space() == &space));
        SubspaceBasis {
            space,
            degree,
            members,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[GradedElement] {
        &self.members
    }

    pub fn span(&self) -> RowSpan<Rat> {
        let cols = self.space.hom_dim(self.degree);
        let rows: Vec<Vec<Rat>> = self.members.iter().map(GradedElement::flatten).collect();
        RowSpan::from_rows(cols, rows.iter().map(Vec::as_slice))
    }

    pub fn contains(&self, e: &GradedElement) -> bool {
        e.space() == &self.space
            && e.degree() == self.degree % self.space.modulus()
            && self.span().contains(&e.flatten())
    }

    /// Equality as subspaces: equal dimension plus one-way containment.
    pub fn same_subspace(&self, other: &Self) -> bool {
        if self.space != other.space
            || self.degree % self.space.modulus() != other.degree % other.space.modulus()
            || self.dim() != other.dim()
        {
            return false;
        }
        let span = other.span();
        self.members.iter().all(|e| span.contains(&e.flatten()))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Threshold {
    AtLeast,
    Greater,
    Exactly,
}

/// An ε-spiral, stored as its cocharacter, sign and checkable window.
#[derive(Clone, Debug)]
pub struct Spiral {
    mu: RationalCocharacter,
    epsilon: i64,
    window: i64,
}

impl Spiral {
    pub fn new(mu: RationalCocharacter, epsilon: i64) -> Self {
        assert!(epsilon == 1 || epsilon == -1, "epsilon must be +1 or -1");
        let m = mu.space().modulus() as i64;
        let window = m * (1 + mu.spread().ceil_i64());
        Spiral {
            mu,
            epsilon,
            window,
        }
    }

    pub fn mu(&self) -> &RationalCocharacter {
        &self.mu
    }

    pub fn epsilon(&self) -> i64 {
        self.epsilon
    }

    /// Window bound B: p_N = g_N̄ for Nε ≤ -B and p_N = 0 for Nε ≥ B.
    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn space(&self) -> &GradedSpace {
        self.mu.space()
    }

    /// p_N: weight shift ≥ N·ε.
    pub fn p(&self, n: i64) -> SubspaceBasis {
        self.materialize(n, Threshold::AtLeast)
    }

    /// u_N: weight shift > N·ε; the nilradical layer.
    pub fn u(&self, n: i64) -> SubspaceBasis {
        self.materialize(n, Threshold::Greater)
    }

    /// l̃_N: weight shift exactly N·ε; the splitting layer.
    pub fn split(&self, n: i64) -> SubspaceBasis {
        self.materialize(n, Threshold::Exactly)
    }

    fn materialize(&self, n: i64, mode: Threshold) -> SubspaceBasis {
        let space = self.space().clone();
        let m = space.modulus();
        let deg = space.label(n);
        let threshold = Rat::from(n * self.epsilon);
        let keep = |shift: &Rat| match mode {
            Threshold::AtLeast => *shift >= threshold,
            Threshold::Greater => *shift > threshold,
            Threshold::Exactly => *shift == threshold,
        };
        let slices: Vec<Vec<(Rat, Vec<usize>)>> = (0..m).map(|i| self.mu.slices(i)).collect();
        let mut members = Vec::new();
        for j in 0..m {
            let t = space.add_label(j, deg as i64);
            for (x_src, src_cols) in &slices[j] {
                for (x_dst, dst_cols) in &slices[t] {
                    let shift = x_dst - x_src;
                    if !keep(&shift) {
                        continue;
                    }
                    for &sc in src_cols {
                        for &dc in dst_cols {
                            if deg == 0 && dc == sc {
                                continue; // traceful diagonal, handled below
                            }
                            members.push(self.unit_member(deg, j, dc, sc));
                        }
                    }
                }
            }
        }
        if deg == 0 && keep(&Rat::zero()) {
            // All weighted diagonal units carry shift 0 and trace 1; the
            // traceless combinations are consecutive differences.
            let mut diag = Vec::new();
            for j in 0..m {
                for k in 0..space.dim(j) {
                    diag.push(self.unit_member(0, j, k, k));
                }
            }
            for w in diag.windows(2) {
                members.push(w[0].add(&w[1].neg()).expect("same space"));
            }
        }
        SubspaceBasis::new(space, deg, members)
    }

    /// The rank-one map sending weighted basis column `src_col` of V_j to
    /// weighted basis column `dst_col` of V_{j+deg}.
    fn unit_member(&self, deg: usize, j: usize, dst_col: usize, src_col: usize) -> GradedElement {
        let space = self.space();
        let t = space.add_label(j, deg as i64);
        let dst_basis = self.mu.basis_matrix(t);
        let src_inv = self.mu.inv_basis_matrix(j);
        let mut e = GradedElement::zero(space.clone(), deg);
        {
            let block = e.block_mut(j);
            for r in 0..dst_basis.rows() {
                let a = dst_basis.at(r, dst_col);
                if a.is_zero() {
                    continue;
                }
                for c in 0..src_inv.cols() {
                    let b = src_inv.at(src_col, c);
                    if !b.is_zero() {
                        block.set(r, c, a * b);
                    }
                }
            }
        }
        GradedElement::new(space.clone(), deg, e.into_blocks())
    }

    /// Dimension table over the window, for reports.
    pub fn table(&self) -> Vec<SpiralRow> {
        (-self.window..=self.window)
            .map(|n| SpiralRow {
                n,
                dim_p: self.p(n).dim(),
                dim_u: self.u(n).dim(),
                dim_l: self.split(n).dim(),
            })
            .collect()
    }

    pub fn quiver(&self) -> ChainQuiver {
        spiral_quiver(&self.mu)
    }

    pub fn report(&self) -> SpiralReport {
        SpiralReport {
            epsilon: self.epsilon,
            window: self.window,
            table: self.table(),
            quiver: self.quiver(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SpiralRow {
    #[serde(rename = "N")]
    pub n: i64,
    pub dim_p: usize,
    pub dim_u: usize,
    pub dim_l: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpiralReport {
    pub epsilon: i64,
    pub window: i64,
    pub table: Vec<SpiralRow>,
    pub quiver: ChainQuiver,
}

/// The labelled quiver of a cocharacter: vertices (i, x) with multiplicity
/// dim of the weight-x slice of V_i, an edge (i,x) → (i+1, x+1) whenever both
/// ends exist, and the partition into maximal directed chains.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ChainQuiver {
    pub vertices: Vec<QuiverVertex>,
    pub edges: Vec<[usize; 2]>,
    pub chains: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct QuiverVertex {
    pub label: usize,
    pub x: Rat,
    pub mult: usize,
}

impl ChainQuiver {
    pub fn chain_head_label(&self, chain: usize) -> usize {
        self.vertices[self.chains[chain][0]].label
    }

    /// Vertex count of a chain.
    pub fn chain_len(&self, chain: usize) -> usize {
        self.chains[chain].len()
    }

    /// The per-vertex dimensions along each chain; their sums are the sizes
    /// of the general linear factors of the splitting Levi.
    pub fn chain_dims(&self) -> Vec<Vec<usize>> {
        self.chains
            .iter()
            .map(|c| c.iter().map(|&v| self.vertices[v].mult).collect())
            .collect()
    }
}

pub fn spiral_quiver(mu: &RationalCocharacter) -> ChainQuiver {
    let space = mu.space();
    let m = space.modulus();
    let mut vertices: Vec<QuiverVertex> = Vec::new();
    for i in 0..m {
        for (x, cols) in mu.slices(i) {
            vertices.push(QuiverVertex {
                label: i,
                x,
                mult: cols.len(),
            });
        }
    }
    vertices.sort_by(|a, b| (a.label, &a.x).cmp(&(b.label, &b.x)));
    let find = |label: usize, x: &Rat| vertices.iter().position(|v| v.label == label && &v.x == x);
    let mut edges = Vec::new();
    let mut succ = vec![None; vertices.len()];
    let mut has_pred = vec![false; vertices.len()];
    for (vi, v) in vertices.iter().enumerate() {
        let nl = space.add_label(v.label, 1);
        let nx = &v.x + &Rat::one();
        if let Some(wi) = find(nl, &nx) {
            edges.push([vi, wi]);
            succ[vi] = Some(wi);
            has_pred[wi] = true;
        }
    }
    let mut chains = Vec::new();
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
    debug_assert_eq!(chains.iter().map(Vec::len).sum::<usize>(), vertices.len());
    ChainQuiver {
        vertices,
        edges,
        chains,
    }
}

/// The canonical spiral of a nilpotent x of degree 1̄: the 1-spiral of
/// half the weight cocharacter of any graded sl2 completion of x. The result
/// does not depend on the completion.
pub fn canonical_spiral(x: &GradedElement) -> Result<Spiral, Error> {
    let triple = sl2_complete(x)?;
    let iota = iota_cocharacter(&triple)?;
    Ok(Spiral::new(iota.scale(&Rat::new(1, 2)), 1))
}

/// Canonical spiral computed through a caller-supplied adapted basis; used
/// to test that the construction is independent of that choice.
pub fn canonical_spiral_via(x: &GradedElement, basis: &AdaptedBasis) -> Result<Spiral, Error> {
    let triple = sl2_complete_via(x, basis)?;
    let iota = iota_cocharacter(&triple)?;
    Ok(Spiral::new(iota.scale(&Rat::new(1, 2)), 1))
}

/// Canonical spiral through a seeded adapted basis.
pub fn canonical_spiral_seeded<R: rand::Rng>(
    x: &GradedElement,
    rng: &mut R,
) -> Result<Spiral, Error> {
    let basis = graded_jordan_basis_seeded(x, rng)?;
    canonical_spiral_via(x, &basis)
}

/// Extensional equality of two spirals over the joint window.
pub fn spirals_equal(a: &Spiral, b: &Spiral) -> bool {
    if a.space() != b.space() || a.epsilon() != b.epsilon() {
        return false;
    }
    let bound = a.window().max(b.window());
    (-bound..=bound).all(|n| a.p(n).same_subspace(&b.p(n)))
}

/// One verified property of a spiral.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Outcome of [`verify_spiral_axioms`]; failures are entries, not errors.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

/// The nilradical layer as a pairing annihilator: elements of g_N̄ (inside
/// the special linear algebra) pairing to zero with every member of the
/// opposite layer.
pub fn pairing_annihilator(
    space: &GradedSpace,
    degree: usize,
    partners: &[GradedElement],
) -> Vec<GradedElement> {
    let ambient = sl_degree_basis(space, degree);
    if ambient.is_empty() {
        return Vec::new();
    }
    // one row per partner; the kernel holds the coefficient vectors over
    // the ambient basis
    let gram = Mat::from_fn(partners.len(), ambient.len(), |r, c| {
        partners[r].trace_pair(&ambient[c]).expect("same space")
    });
    gram.nullspace()
        .into_iter()
        .map(|coeffs| {
            let mut acc = GradedElement::zero(space.clone(), degree);
            for (a, c) in ambient.iter().zip(&coeffs) {
                if !c.is_zero() {
                    acc = acc.add(&a.scale(c)).expect("same space");
                }
            }
            acc
        })
        .collect()
}

/// Runs the six defining checks of an ε-spiral over its window:
/// (i) p_N ⊆ p_{N-εm}; (ii) the window bounds; (iii) bracket closure
/// [p_N, p_N'] ⊆ p_{N+N'}; (iv) u_N is the trace-pairing annihilator of
/// p_{-N}; (v) [u_N, p_N'] ⊆ u_{N+N'}; (vi) members of p_N with Nε > 0 are
/// nilpotent.
pub fn verify_spiral_axioms(s: &Spiral) -> AxiomReport {
    let space = s.space().clone();
    let m = space.modulus() as i64;
    let b = s.window();
    let lo = -b - m;
    let hi = b + m;
    let size = (hi - lo + 1) as usize;
    let mut p = Vec::with_capacity(size);
    let mut u = Vec::with_capacity(size);
    for n in lo..=hi {
        p.push(s.p(n));
        u.push(s.u(n));
    }
    let p_span: Vec<RowSpan<Rat>> = p.iter().map(SubspaceBasis::span).collect();
    let u_span: Vec<RowSpan<Rat>> = u.iter().map(SubspaceBasis::span).collect();
    let idx = |n: i64| (n - lo) as usize;
    let eps = s.epsilon();
    let mut checks = Vec::new();

    // (i) nesting along the spiral direction
    {
        let mut fail = None;
        for n in -b..=b {
            let wider = &p_span[idx(n - eps * m)];
            if let Some(e) = p[idx(n)]
                .members()
                .iter()
                .find(|e| !wider.contains(&e.flatten()))
            {
                fail = Some(format!(
                    "p_{n} not inside p_{}, degree {}",
                    n - eps * m,
                    e.degree()
                ));
                break;
            }
        }
        checks.push(AxiomCheck {
            name: "p_monotone".into(),
            pass: fail.is_none(),
            detail: fail.unwrap_or_else(|| format!("p_N ⊆ p_(N-εm) for N in [{}, {}]", -b, b)),
        });
    }

    // (ii) window bounds: full at Nε ≤ -B, zero at Nε ≥ B
    {
        let mut fail = None;
        for n in [-b * eps, (-b - m) * eps] {
            let deg = space.label(n);
            if p[idx(n)].dim() != space.sl_dim(deg) {
                fail = Some(format!("p_{n} is not all of the degree-{deg} part"));
            }
        }
        for n in [b * eps, (b + m) * eps] {
            if p[idx(n)].dim() != 0 {
                fail = Some(format!("p_{n} is nonzero"));
            }
        }
        checks.push(AxiomCheck {
            name: "window_bounds".into(),
            pass: fail.is_none(),
            detail: fail.unwrap_or_else(|| format!("p full below -B, zero above B = {b}")),
        });
    }

    // (iii) bracket closure on p, (v) bracket closure of u against p
    for (name, left, target, target_dims) in [
        ("bracket_closure", &p, &p_span, &p),
        ("nilradical_ideal", &u, &u_span, &u),
    ] {
        let mut fail = None;
        'outer: for n1 in -b..=b {
            if left[idx(n1)].dim() == 0 {
                continue;
            }
            for n2 in -b..=b {
                if p[idx(n2)].dim() == 0 {
                    continue;
                }
                let k = n1 + n2;
                if k * eps <= -b {
                    continue; // target is everything
                }
                let span = (k >= lo && k <= hi).then(|| &target[idx(k)]);
                if let Some(span) = span {
                    if target_dims[idx(k)].dim() == space.sl_dim(space.label(k)) {
                        continue;
                    }
                    for a in left[idx(n1)].members() {
                        for c in p[idx(n2)].members() {
                            let br = a.bracket(c).expect("same space");
                            if !span.contains(&br.flatten()) {
                                fail = Some(format!(
                                    "[{}_{n1}, p_{n2}] escapes layer {k}",
                                    if name == "bracket_closure" { "p" } else { "u" }
                                ));
                                break 'outer;
                            }
                        }
                    }
                } else {
                    // beyond the table: the layer is zero there
                    for a in left[idx(n1)].members() {
                        for c in p[idx(n2)].members() {
                            if !a.bracket(c).expect("same space").is_zero() {
                                fail = Some(format!("bracket into empty layer {k} is nonzero"));
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
        checks.push(AxiomCheck {
            name: name.into(),
            pass: fail.is_none(),
            detail: fail.unwrap_or_else(|| "closed over the window".into()),
        });
    }

    // (iv) u_N is the annihilator of p_{-N} under the trace pairing
    {
        let mut fail = None;
        for n in -b..=b {
            let ann = pairing_annihilator(&space, space.label(n), p[idx(-n)].members());
            let uspan = &u_span[idx(n)];
            if ann.len() != u[idx(n)].dim() || ann.iter().any(|e| !uspan.contains(&e.flatten())) {
                fail = Some(format!(
                    "u_{n} (dim {}) differs from the annihilator of p_{} (dim {})",
                    u[idx(n)].dim(),
                    -n,
                    ann.len()
                ));
                break;
            }
        }
        checks.push(AxiomCheck {
            name: "nilradical_annihilator".into(),
            pass: fail.is_none(),
            detail: fail.unwrap_or_else(|| "u_N = ann p_(-N) for all N in window".into()),
        });
    }

    // place (v) result after (iv) in the report order
    let v = checks.remove(3);
    checks.push(v);

    // (vi) positive layers are nilpotent
    {
        let mut fail = None;
        'outer: for n in -b..=b {
            if n * eps <= 0 {
                continue;
            }
            for e in p[idx(n)].members() {
                if !is_nilpotent(e) {
                    fail = Some(format!("member of p_{n} is not nilpotent"));
                    break 'outer;
                }
            }
        }
        checks.push(AxiomCheck {
            name: "positive_part_nilpotent".into(),
            pass: fail.is_none(),
            detail: fail.unwrap_or_else(|| "p_N ⊆ nilpotent cone for Nε > 0".into()),
        });
    }

    AxiomReport { checks }
}

/// Refines a spiral by an integral secondary cocharacter on the same
/// weighted basis: the refined spiral keeps each nilradical layer and cuts
/// the splitting down to its secondary-nonnegative part. The mixing
/// denominator is the smallest odd b exceeding 2·a·r, where a is the
/// secondary weight spread and r clears the denominators of the base
/// weights, so distinct base thresholds can never cross.
pub fn refine_spiral(s: &Spiral, secondary: &RationalCocharacter) -> Result<Spiral, Error> {
    if !secondary.same_basis(s.mu()) {
        return Err(Error::BasisMismatch);
    }
    for i in 0..s.space().modulus() {
        for w in secondary.weights(i) {
            if !w.is_integer() {
                return Err(Error::NonIntegralWeight(w.to_string()));
            }
        }
    }
    let a = secondary.spread();
    let r = Rat::from(
        i64::try_from(s.mu().denominator_scale()).expect("weight denominators at desk scale"),
    );
    let two_ar = (Rat::from(2) * a * r).ceil_i64();
    let b = if two_ar % 2 == 0 {
        two_ar + 1
    } else {
        two_ar + 2
    };
    let binv = Rat::new(1, b);
    let mut weights = Vec::with_capacity(s.space().modulus());
    for i in 0..s.space().modulus() {
        weights.push(
            s.mu()
                .weights(i)
                .iter()
                .zip(secondary.weights(i))
                .map(|(x, y)| x + &(y * &binv))
                .collect::<Vec<Rat>>(),
        );
    }
    let mu = RationalCocharacter::with_basis(
        s.space().clone(),
        weights,
        (0..s.space().modulus())
            .map(|i| s.mu().basis_matrix(i).clone())
            .collect(),
    )?;
    Ok(Spiral::new(mu, s.epsilon()))
}

/// Checks that ad(x): p_0 → p_1 is surjective for the canonical spiral of x.
/// This always holds; the check guards the construction.
pub fn ad_surjectivity_check(x: &GradedElement) -> Result<bool, Error> {
    let s = canonical_spiral(x)?;
    let p0 = s.p(0);
    let p1 = s.p(1);
    if p1.dim() == 0 {
        return Ok(true);
    }
    let images: Vec<Vec<Rat>> = p0
        .members()
        .iter()
        .map(|v| x.bracket(v).expect("same space").flatten())
        .collect();
    let span = RowSpan::from_rows(x.space().hom_dim(1), images.iter().map(Vec::as_slice));
    Ok(span.rank() == p1.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nilpotent::ChainType;

    fn half(n: i64) -> Rat {
        Rat::new(n, 2)
    }

    /// m=2, dims (1,1), weights (-1/2, +1/2): the canonical spiral of the
    /// two-chain nilpotent.
    fn half_weight_spiral() -> Spiral {
        let space = GradedSpace::new(2, vec![1, 1]);
        let mu = RationalCocharacter::diagonal(space, vec![vec![half(-1)], vec![half(1)]]);
        Spiral::new(mu, 1)
    }

    fn zero_spiral(m: usize, dims: Vec<usize>) -> Spiral {
        Spiral::new(RationalCocharacter::zero(GradedSpace::new(m, dims)), 1)
    }

    #[test]
    fn zero_cocharacter_layers() {
        let s = zero_spiral(2, vec![1, 1]);
        assert_eq!(s.p(1).dim(), 0);
        assert_eq!(s.p(-1).dim(), 2);
        // l̃_0 = g_0̄, l̃_N = 0 otherwise
        assert_eq!(s.split(0).dim(), s.space().sl_dim(0));
        assert_eq!(s.split(1).dim(), 0);
        assert_eq!(s.split(-1).dim(), 0);
        assert_eq!(s.u(1).dim(), 0);
    }

    #[test]
    fn half_weight_dimensions() {
        let s = half_weight_spiral();
        assert_eq!(s.p(1).dim(), 1);
        assert_eq!(s.p(0).dim(), 1);
        assert_eq!(s.p(-1).dim(), 2);
        assert_eq!(s.u(1).dim(), 0);
        assert_eq!(s.u(0).dim(), 0);
        assert_eq!(s.split(0).dim(), 1);
        assert_eq!(s.split(1).dim(), 1);
        assert_eq!(s.split(-1).dim(), 1);
        // l̃_1 is the Hom(V_0, V_1) block
        let l1 = s.split(1);
        assert!(!l1.members()[0].block(0).is_zero());
        assert!(l1.members()[0].block(1).is_zero());
    }

    #[test]
    fn direct_sum_p_u_l() {
        let s = half_weight_spiral();
        for n in -s.window()..=s.window() {
            assert_eq!(s.p(n).dim(), s.u(n).dim() + s.split(n).dim());
        }
    }

    #[test]
    fn canonical_spiral_of_zero() {
        let space = GradedSpace::new(2, vec![1, 1]);
        let s = canonical_spiral(&GradedElement::zero(space.clone(), 1)).unwrap();
        for n in -s.window()..=s.window() {
            let expect = if n <= 0 {
                space.sl_dim(space.label(n))
            } else {
                0
            };
            assert_eq!(s.p(n).dim(), expect, "at N = {n}");
        }
    }

    #[test]
    fn canonical_spiral_two_chain() {
        let x = ChainType::new(vec![(0, 2)]).standard_element(2);
        let s = canonical_spiral(&x).unwrap();
        assert!(spirals_equal(&s, &half_weight_spiral()));
        // x lies in its own splitting layer l̃_1
        assert!(s.split(1).contains(&x));
    }

    #[test]
    fn canonical_spiral_three_chain() {
        let x = ChainType::new(vec![(0, 3)]).standard_element(3);
        let s = canonical_spiral(&x).unwrap();
        let w: Vec<Rat> = (0..3).map(|i| s.mu().weights(i)[0].clone()).collect();
        assert_eq!(w, vec![Rat::from(-1), Rat::from(0), Rat::from(1)]);
        assert_eq!(s.p(1).dim(), 2);
        assert_eq!(s.p(0).dim(), 2);
        assert!(s.split(1).contains(&x));
    }

    #[test]
    fn canonical_spiral_wrapped_chain() {
        // single chain of length 4 on m=2: weights halve to
        // V_0: {-3/2, 1/2}, V_1: {-1/2, 3/2}; counting unit shifts by hand
        // gives dim p_1 = 4 (three V_0→V_1, one V_1→V_0), u_1 the single
        // shift-3 unit, and p_0 = 2 off-diagonal units + 3 traceless
        // diagonal differences.
        let x = ChainType::new(vec![(0, 4)]).standard_element(2);
        let s = canonical_spiral(&x).unwrap();
        assert_eq!(s.mu().weights(0), &[Rat::new(-3, 2), Rat::new(1, 2)]);
        assert_eq!(s.mu().weights(1), &[Rat::new(-1, 2), Rat::new(3, 2)]);
        assert_eq!(s.p(1).dim(), 4);
        assert_eq!(s.u(1).dim(), 1);
        assert_eq!(s.split(1).dim(), 3);
        assert_eq!(s.p(0).dim(), 5);
        assert!(s.split(1).contains(&x));
    }

    #[test]
    fn axioms_pass_on_fixtures() {
        for s in [
            half_weight_spiral(),
            zero_spiral(2, vec![1, 1]),
            zero_spiral(3, vec![2, 1, 1]),
        ] {
            let report = verify_spiral_axioms(&s);
            assert!(report.pass(), "failures: {:?}", report.failures());
        }
    }

    #[test]
    fn corrupted_annihilator_fails() {
        // Dropping one member of p_{-1} enlarges its annihilator past u_1.
        let s = half_weight_spiral();
        let p_minus_1 = s.p(-1);
        let dropped = &p_minus_1.members()[1..];
        let ann = pairing_annihilator(s.space(), 1, dropped);
        let u1 = s.u(1);
        assert_ne!(ann.len(), u1.dim());
    }

    #[test]
    fn quiver_fixtures() {
        let q = zero_spiral(2, vec![1, 1]).quiver();
        assert_eq!(q.vertices.len(), 2);
        assert!(q.edges.is_empty());
        assert_eq!(q.chains.len(), 2);

        let q = half_weight_spiral().quiver();
        assert_eq!(q.chains.len(), 1);
        assert_eq!(q.chain_len(0), 2);
        assert_eq!(q.chain_head_label(0), 0);

        // m=2, dims (2,1), weights V_0: {-1, 1}, V_1: {0}
        let space = GradedSpace::new(2, vec![2, 1]);
        let mu = RationalCocharacter::diagonal(
            space,
            vec![vec![Rat::from(-1), Rat::from(1)], vec![Rat::from(0)]],
        );
        let q = spiral_quiver(&mu);
        assert_eq!(q.chains.len(), 1);
        assert_eq!(q.chain_len(0), 3);
        let labels: Vec<usize> = q.chains[0].iter().map(|&v| q.vertices[v].label).collect();
        assert_eq!(labels, vec![0, 1, 0]);
        assert_eq!(q.chain_dims(), vec![vec![1, 1, 1]]);
    }

    #[test]
    fn quiver_multiplicities_cover_dims() {
        // vertex multiplicities at each label sum to dim V_i, and every
        // vertex has at most one successor and one predecessor
        let space = GradedSpace::new(3, vec![2, 2, 1]);
        let mu = RationalCocharacter::diagonal(
            space.clone(),
            vec![
                vec![Rat::new(1, 2), Rat::new(1, 2)],
                vec![Rat::from(0), Rat::new(3, 2)],
                vec![Rat::new(-1, 2)],
            ],
        );
        let q = spiral_quiver(&mu);
        for i in 0..space.modulus() {
            let total: usize = q
                .vertices
                .iter()
                .filter(|v| v.label == i)
                .map(|v| v.mult)
                .sum();
            assert_eq!(total, space.dim(i));
        }
        for vi in 0..q.vertices.len() {
            assert!(q.edges.iter().filter(|e| e[0] == vi).count() <= 1);
            assert!(q.edges.iter().filter(|e| e[1] == vi).count() <= 1);
        }
        assert_eq!(
            q.chains.iter().map(Vec::len).sum::<usize>(),
            q.vertices.len()
        );
    }

    #[test]
    fn refine_by_zero_is_identity() {
        let s = half_weight_spiral();
        let zero = RationalCocharacter::zero(s.space().clone());
        let r = refine_spiral(&s, &zero).unwrap();
        assert!(spirals_equal(&s, &r));
    }

    #[test]
    fn refine_to_borel() {
        // mu = 0 on m=2, dims (2,0); secondary weights (1, 0) on V_0 cut g_0
        // down to its upper-triangular part.
        let space = GradedSpace::new(2, vec![2, 0]);
        let s = Spiral::new(RationalCocharacter::zero(space.clone()), 1);
        let secondary = RationalCocharacter::diagonal(
            space.clone(),
            vec![vec![Rat::from(1), Rat::from(0)], vec![]],
        );
        let r = refine_spiral(&s, &secondary).unwrap();
        assert_eq!(s.p(0).dim(), 3);
        assert_eq!(r.p(0).dim(), 2);
        // the strictly upper-triangular unit V_0 column 1 -> column 0
        let up = GradedElement::unit(space.clone(), 0, 0, 0, 1, Rat::one());
        let down = GradedElement::unit(space, 0, 0, 1, 0, Rat::one());
        assert!(r.p(0).contains(&up));
        assert!(!r.p(0).contains(&down));
    }

    #[test]
    fn refine_canonical_by_its_weights() {
        // Refining the canonical spiral (μ = ι/2) by ι itself: every
        // splitting member at layer N has secondary shift 2N, so the
        // refined spiral must be p_N for N ≥ 0 and exactly u_N for N < 0.
        let x = ChainType::new(vec![(0, 3), (0, 1)]).standard_element(2);
        let s = canonical_spiral(&x).unwrap();
        let iota = s.mu().scale(&Rat::from(2));
        let r = refine_spiral(&s, &iota).unwrap();
        for n in -s.window()..=s.window() {
            let expected = if n >= 0 { s.p(n) } else { s.u(n) };
            assert_eq!(r.p(n).dim(), expected.dim(), "at N = {n}");
            assert!(r.p(n).same_subspace(&expected), "at N = {n}");
            // the nilradical is always kept
            let span = r.p(n).span();
            assert!(s.u(n).members().iter().all(|e| span.contains(&e.flatten())));
        }
        assert!(verify_spiral_axioms(&r).pass());
    }

    #[test]
    fn refine_rejects_fractional_secondary() {
        let s = half_weight_spiral();
        let bad =
            RationalCocharacter::diagonal(s.space().clone(), vec![vec![half(1)], vec![half(-1)]]);
        assert!(matches!(
            refine_spiral(&s, &bad),
            Err(Error::NonIntegralWeight(_))
        ));
    }

    #[test]
    fn ad_surjectivity_fixtures() {
        let space = GradedSpace::new(2, vec![1, 1]);
        assert!(ad_surjectivity_check(&GradedElement::zero(space, 1)).unwrap());
        let x = ChainType::new(vec![(0, 2)]).standard_element(2);
        assert!(ad_surjectivity_check(&x).unwrap());
        let x = ChainType::new(vec![(0, 3)]).standard_element(2);
        assert_eq!(x.space().dims(), &[2, 1]);
        assert!(ad_surjectivity_check(&x).unwrap());
    }

    #[test]
    fn split_matches_opposite_spiral() {
        // The splitting of (mu, ε) equals the splitting of (-mu, -ε).
        let s = half_weight_spiral();
        let opp = Spiral::new(s.mu().negated(), -1);
        for n in -s.window()..=s.window() {
            assert!(s.split(n).same_subspace(&opp.split(n)));
        }
    }
}
