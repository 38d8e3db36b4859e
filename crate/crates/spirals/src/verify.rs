//! Seeded verification suites.
//!
//! Each check sweeps dimension vectors or seeded random data and reports a
//! single pass/fail line; the CLI `verify` subcommand and the acceptance
//! test suite both run these, so they cannot drift apart. All randomness is
//! ChaCha-seeded per configuration, making every run byte-reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeSet;

use crate::blocks::{
    admissible_grading_for_block, block_representative, enumerate_blocks_sl, omega, psi,
    BlockTriple,
};
use crate::census::{all_dim_vectors, enumerate_chain_types, enumerate_pairs};
use crate::cochar::RationalCocharacter;
use crate::graded::{GradedElement, GradedSpace};
use crate::mat::Mat;
use crate::nilpotent::{chain_type_of, graded_jordan_basis, is_nilpotent, sl2_complete};
use crate::oracle::realized_chain_types_fq;
use crate::rat::Rat;
use crate::spiral::{
    canonical_spiral, canonical_spiral_seeded, refine_spiral, spirals_equal, verify_spiral_axioms,
    Spiral,
};
use crate::symplectic::{
    enumerate_blocks_sp, sp_spiral_chains, SpBlock, SpCocharacter, SymplecticDims,
};

/// Sweep bounds and seed shared by the suites.
#[derive(Clone, Copy, Debug)]
pub struct Sweep {
    pub n_max: usize,
    pub m_max: usize,
    pub seed: u64,
}

impl Default for Sweep {
    fn default() -> Self {
        Sweep {
            n_max: 4,
            m_max: 3,
            seed: 42,
        }
    }
}

/// One verified property.
#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn from_failures(label: &str, failures: Vec<String>, ok_detail: String) -> Self {
        if failures.is_empty() {
            Check {
                label: label.into(),
                pass: true,
                detail: ok_detail,
            }
        } else {
            let shown = failures
                .iter()
                .take(3)
                .cloned()
                .collect::<Vec<_>>()
                .join("; ");
            Check {
                label: label.into(),
                pass: false,
                detail: format!("{} failure(s): {shown}", failures.len()),
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// All graded spaces with modulus m_lo..=m_max and total dimension 1..=n_max.
pub fn dim_sweep(m_lo: usize, m_max: usize, n_max: usize) -> Vec<GradedSpace> {
    let mut out = Vec::new();
    for m in m_lo..=m_max {
        for dims in all_dim_vectors(m, n_max) {
            out.push(GradedSpace::new(m, dims));
        }
    }
    out
}

/// Random diagonal cocharacter with half-integer weights in [-2, 2],
/// recentered to total weight zero.
pub fn random_cocharacter<R: Rng>(space: &GradedSpace, rng: &mut R) -> RationalCocharacter {
    let weights = (0..space.modulus())
        .map(|i| {
            (0..space.dim(i))
                .map(|_| Rat::new(rng.gen_range(-4..=4), 2))
                .collect()
        })
        .collect();
    RationalCocharacter::diagonal(space.clone(), weights).recentered()
}

/// Random nilpotent of degree 1̄: a uniformly chosen chain type conjugated
/// by a random determinant-one block-diagonal matrix.
pub fn random_nilpotent<R: Rng>(space: &GradedSpace, rng: &mut R) -> GradedElement {
    let types = enumerate_chain_types(space);
    let t = &types[rng.gen_range(0..types.len())];
    let x = t.standard_element(space.modulus());
    random_conjugate(&x, rng)
}

/// Conjugates by a random block-diagonal determinant-one matrix built from
/// shears inside labels and one balanced scaling.
pub fn random_conjugate<R: Rng>(x: &GradedElement, rng: &mut R) -> GradedElement {
    let space = x.space().clone();
    let m = space.modulus();
    let mut g: Vec<Mat<Rat>> = (0..m).map(|i| Mat::identity(space.dim(i))).collect();
    let roomy: Vec<usize> = (0..m).filter(|&i| space.dim(i) >= 2).collect();
    if !roomy.is_empty() {
        for _ in 0..rng.gen_range(2..6) {
            let i = roomy[rng.gen_range(0..roomy.len())];
            let d = space.dim(i);
            let a = rng.gen_range(0..d);
            let mut b = rng.gen_range(0..d);
            if b == a {
                b = (b + 1) % d;
            }
            let c = Rat::from([-2i64, -1, 1, 2][rng.gen_range(0..4)]);
            // row_a += c · row_b, an elementary shear
            for col in 0..d {
                let v = g[i].at(a, col).clone() + &c * g[i].at(b, col);
                g[i].set(a, col, v);
            }
        }
    }
    // scaling one basis row by c and another by 1/c keeps determinant one
    let slots: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..space.dim(i)).map(move |k| (i, k)))
        .collect();
    if slots.len() >= 2 {
        let (i1, k1) = slots[rng.gen_range(0..slots.len())];
        let (i2, k2) = slots[rng.gen_range(0..slots.len())];
        if (i1, k1) != (i2, k2) {
            let c = Rat::from([2i64, 3][rng.gen_range(0..2)]);
            for col in 0..space.dim(i1) {
                let v = g[i1].at(k1, col) * &c;
                g[i1].set(k1, col, v);
            }
            let inv = c.recip();
            for col in 0..space.dim(i2) {
                let v = g[i2].at(k2, col) * &inv;
                g[i2].set(k2, col, v);
            }
        }
    }
    let ginv: Vec<Mat<Rat>> = g.iter().map(|b| b.inverse().expect("invertible")).collect();
    let deg = x.degree() as i64;
    let blocks = (0..m)
        .map(|j| {
            let t = space.add_label(j, deg);
            g[t].matmul(x.block(j)).matmul(&ginv[j])
        })
        .collect();
    GradedElement::new(space, x.degree(), blocks)
}

/// Random duality-respecting symplectic cocharacter.
pub fn random_sp_cocharacter<R: Rng>(sd: &SymplecticDims, rng: &mut R) -> SpCocharacter {
    let m = sd.modulus();
    let mut weights = vec![Vec::new(); m];
    for k in 0..m / 2 {
        let w: Vec<Rat> = (0..sd.dim(k))
            .map(|_| Rat::new(rng.gen_range(-4..=4), 2))
            .collect();
        weights[m - 1 - k] = w.iter().map(|x| -x).collect();
        weights[k] = w;
    }
    SpCocharacter::new(sd.clone(), weights).expect("duality holds by construction")
}

fn config_rng(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// sl2 completion yields exact triples on seeded random nilpotents
/// across m ∈ {2,3,4}, n ≤ 5.
pub fn check_sl2_exactness(seed: u64, draws: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for t in 0..draws {
        let m = [2usize, 3, 4][rng.gen_range(0..3)];
        let n = rng.gen_range(1..=5);
        let mut dims = vec![0usize; m];
        for _ in 0..n {
            let i = rng.gen_range(0..m);
            dims[i] += 1;
        }
        let space = GradedSpace::new(m, dims);
        let x = random_nilpotent(&space, &mut rng);
        match sl2_complete(&x) {
            Ok(triple) => {
                if !triple.verify() {
                    failures.push(format!("draw {t}: relations fail on {:?}", space.dims()));
                } else if triple.h.degree() != 0
                    || triple.f.degree() != space.label(-(x.degree() as i64))
                {
                    failures.push(format!("draw {t}: wrong degrees"));
                }
            }
            Err(e) => failures.push(format!("draw {t}: {e}")),
        }
    }
    Check::from_failures(
        "sl2_exactness",
        failures,
        format!("{draws} seeded nilpotents completed exactly"),
    )
}

/// Spiral axioms hold for seeded random cocharacters on every configuration.
pub fn check_spiral_axioms_random(sweep: &Sweep, per_config: usize) -> Check {
    let spaces = dim_sweep(1, sweep.m_max, sweep.n_max);
    let failures: Vec<String> = spaces
        .par_iter()
        .enumerate()
        .flat_map(|(ci, space)| {
            let mut rng = config_rng(sweep.seed, ci);
            let mut fails = Vec::new();
            for t in 0..per_config {
                let mu = random_cocharacter(space, &mut rng);
                let eps = if t % 2 == 0 { 1 } else { -1 };
                let s = Spiral::new(mu, eps);
                let report = verify_spiral_axioms(&s);
                if !report.pass() {
                    let names: Vec<&str> =
                        report.failures().iter().map(|c| c.name.as_str()).collect();
                    fails.push(format!(
                        "dims {:?} draw {t}: {}",
                        space.dims(),
                        names.join(",")
                    ));
                }
            }
            fails
        })
        .collect();
    let total = spaces.len() * per_config;
    Check::from_failures(
        "spiral_axioms_random",
        failures,
        format!("{total} random spirals pass all six checks"),
    )
}

/// Spiral axioms hold for the canonical spiral of every orbit
/// representative, and the representative lies in its splitting layer l̃_1.
pub fn check_spiral_axioms_canonical(sweep: &Sweep) -> Check {
    let spaces = dim_sweep(1, sweep.m_max, sweep.n_max);
    let count: usize = spaces.iter().map(|s| enumerate_chain_types(s).len()).sum();
    let failures: Vec<String> = spaces
        .par_iter()
        .flat_map(|space| {
            let mut fails = Vec::new();
            for t in enumerate_chain_types(space) {
                let x = t.standard_element(space.modulus());
                match canonical_spiral(&x) {
                    Ok(s) => {
                        let report = verify_spiral_axioms(&s);
                        if !report.pass() {
                            fails.push(format!("orbit {t}: axiom failure"));
                        }
                        if !s.split(1).contains(&x) {
                            fails.push(format!("orbit {t}: x outside its splitting"));
                        }
                        if !s.mu().total_weight().is_zero() {
                            fails.push(format!("orbit {t}: weights not determinant-normalized"));
                        }
                    }
                    Err(e) => fails.push(format!("orbit {t}: {e}")),
                }
            }
            fails
        })
        .collect();
    Check::from_failures(
        "spiral_axioms_canonical",
        failures,
        format!("{count} canonical spirals pass, x ∈ l̃_1 throughout"),
    )
}

/// The canonical spiral does not depend on the adapted basis used.
pub fn check_phi_independence(seed: u64, draws: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for t in 0..draws {
        let m = [2usize, 3][rng.gen_range(0..2)];
        let n = rng.gen_range(2..=4);
        let mut dims = vec![0usize; m];
        for _ in 0..n {
            let i = rng.gen_range(0..m);
            dims[i] += 1;
        }
        let space = GradedSpace::new(m, dims);
        let x = random_nilpotent(&space, &mut rng);
        let base = match canonical_spiral(&x) {
            Ok(s) => s,
            Err(e) => {
                failures.push(format!("draw {t}: {e}"));
                continue;
            }
        };
        for _ in 0..2 {
            match canonical_spiral_seeded(&x, &mut rng) {
                Ok(other) => {
                    if !spirals_equal(&base, &other) {
                        failures.push(format!("draw {t}: spirals differ across bases"));
                    }
                }
                Err(e) => failures.push(format!("draw {t}: {e}")),
            }
        }
    }
    Check::from_failures(
        "phi_independence",
        failures,
        format!("{draws} nilpotents, two perturbed bases each, equal spirals"),
    )
}

/// ad(x): p_0 → p_1 is surjective for every orbit representative.
pub fn check_ad_surjectivity(sweep: &Sweep) -> Check {
    let spaces = dim_sweep(1, sweep.m_max, sweep.n_max);
    let failures: Vec<String> = spaces
        .par_iter()
        .flat_map(|space| {
            let mut fails = Vec::new();
            for t in enumerate_chain_types(space) {
                let x = t.standard_element(space.modulus());
                match crate::spiral::ad_surjectivity_check(&x) {
                    Ok(true) => {}
                    Ok(false) => fails.push(format!("orbit {t}: ad not surjective")),
                    Err(e) => fails.push(format!("orbit {t}: {e}")),
                }
            }
            fails
        })
        .collect();
    Check::from_failures(
        "ad_surjectivity",
        failures,
        "ad(x): p_0 → p_1 surjective on every enumerated orbit".into(),
    )
}

/// Splitting layers: p = u ⊕ l̃ with trivial intersection, the splitting is
/// closed under brackets, it matches the splitting of the opposite spiral,
/// and refining by zero changes nothing.
pub fn check_splitting_layers(sweep: &Sweep, per_config: usize) -> Check {
    let spaces = dim_sweep(1, sweep.m_max, sweep.n_max);
    let failures: Vec<String> = spaces
        .par_iter()
        .enumerate()
        .flat_map(|(ci, space)| {
            let mut rng = config_rng(sweep.seed.wrapping_add(1), ci);
            let mut fails = Vec::new();
            for _ in 0..per_config {
                let mu = random_cocharacter(space, &mut rng);
                let s = Spiral::new(mu, 1);
                let opp = Spiral::new(s.mu().negated(), -1);
                let b = s.window();
                for n in -b..=b {
                    let (p, u, l) = (s.p(n), s.u(n), s.split(n));
                    if p.dim() != u.dim() + l.dim() {
                        fails.push(format!("dims {:?}: p ≠ u ⊕ l̃ at N={n}", space.dims()));
                        break;
                    }
                    let mut joint = u.span();
                    let mut independent = true;
                    for e in l.members() {
                        independent &= joint.add(&e.flatten());
                    }
                    if !independent {
                        fails.push(format!("dims {:?}: u ∩ l̃ ≠ 0 at N={n}", space.dims()));
                        break;
                    }
                    if !l.same_subspace(&opp.split(n)) {
                        fails.push(format!(
                            "dims {:?}: splitting flip fails at N={n}",
                            space.dims()
                        ));
                        break;
                    }
                }
                let support: Vec<i64> = (-b..=b).filter(|&n| s.split(n).dim() > 0).collect();
                'closure: for &n1 in &support {
                    for &n2 in &support {
                        let target = s.split(n1 + n2).span();
                        for a in s.split(n1).members() {
                            for c in s.split(n2).members() {
                                let br = a.bracket(c).expect("same space");
                                if !target.contains(&br.flatten()) {
                                    fails.push(format!(
                                        "dims {:?}: [l̃_{n1}, l̃_{n2}] escapes",
                                        space.dims()
                                    ));
                                    break 'closure;
                                }
                            }
                        }
                    }
                }
                let zero = RationalCocharacter::zero(space.clone());
                match refine_spiral(&s, &zero) {
                    Ok(r) => {
                        if !spirals_equal(&s, &r) {
                            fails.push(format!("dims {:?}: zero refinement moved", space.dims()));
                        }
                    }
                    Err(e) => fails.push(format!("dims {:?}: {e}", space.dims())),
                }
            }
            fails
        })
        .collect();
    Check::from_failures(
        "splitting_layers",
        failures,
        "direct sum, closure, sign flip and zero refinement hold".into(),
    )
}

/// Chain types are invariant under determinant-one block conjugation, and
/// the greedy adapted basis agrees with the rank formula.
pub fn check_chain_type_invariance(sweep: &Sweep, per_config: usize) -> Check {
    let spaces = dim_sweep(1, sweep.m_max, sweep.n_max);
    let failures: Vec<String> = spaces
        .par_iter()
        .enumerate()
        .flat_map(|(ci, space)| {
            let mut rng = config_rng(sweep.seed.wrapping_add(2), ci);
            let mut fails = Vec::new();
            for _ in 0..per_config {
                let x = random_nilpotent(space, &mut rng);
                let t = chain_type_of(&x).expect("nilpotent by construction");
                let y = random_conjugate(&x, &mut rng);
                if chain_type_of(&y).expect("conjugate is nilpotent") != t {
                    fails.push(format!(
                        "dims {:?}: conjugation moved the type",
                        space.dims()
                    ));
                }
                let basis = graded_jordan_basis(&x).expect("nilpotent");
                if basis.chain_type() != t {
                    fails.push(format!(
                        "dims {:?}: greedy basis disagrees with rank formula",
                        space.dims()
                    ));
                }
                if t.dim_vector(space.modulus()) != space.dims() {
                    fails.push(format!("dims {:?}: dimension vector drift", space.dims()));
                }
            }
            fails
        })
        .collect();
    Check::from_failures(
        "chain_type_invariance",
        failures,
        "conjugation-invariant; rank formula agrees with greedy basis".into(),
    )
}

/// Every enumerated chain type is realizable and realizes its dimension
/// vector.
pub fn check_census_roundtrip(sweep: &Sweep) -> Check {
    let spaces = dim_sweep(1, sweep.m_max, sweep.n_max);
    let failures: Vec<String> = spaces
        .par_iter()
        .flat_map(|space| {
            let mut fails = Vec::new();
            for t in enumerate_chain_types(space) {
                if t.dim_vector(space.modulus()) != space.dims() {
                    fails.push(format!("{t}: wrong dimension vector"));
                    continue;
                }
                let e = t.standard_element(space.modulus());
                if !is_nilpotent(&e) || chain_type_of(&e).unwrap() != t {
                    fails.push(format!("{t}: standard element does not realize it"));
                }
            }
            fails
        })
        .collect();
    Check::from_failures(
        "census_roundtrip",
        failures,
        "every chain type realizable with matching dimensions".into(),
    )
}

/// Frozen cardinalities for the reference configurations.
pub fn check_fixture_cardinalities() -> Check {
    let mut failures = Vec::new();
    let cases: [(usize, Vec<usize>, usize, usize, usize); 2] =
        [(2, vec![1, 1], 3, 5, 3), (2, vec![2, 1], 4, 6, 3)];
    for (m, dims, orbits, pairs, blocks) in cases {
        let space = GradedSpace::new(m, dims.clone());
        let got = (
            enumerate_chain_types(&space).len(),
            enumerate_pairs(&space).len(),
            enumerate_blocks_sl(&space).len(),
        );
        if got != (orbits, pairs, blocks) {
            failures.push(format!(
                "m={m} dims {dims:?}: got {got:?}, want ({orbits}, {pairs}, {blocks})"
            ));
        }
    }
    let sd = SymplecticDims::from_free(2, vec![1]).expect("valid dims");
    if enumerate_blocks_sp(&sd).len() != 3 {
        failures.push("symplectic m=2 dims (1,1): want 3 blocks".into());
    }
    Check::from_failures(
        "fixture_cardinalities",
        failures,
        "3/5/3, 4/6/3 and 3 symplectic blocks as frozen".into(),
    )
}

/// Ψ∘ω is the identity on blocks.
pub fn check_psi_omega_identity(sweep: &Sweep) -> Check {
    let spaces = dim_sweep(1, sweep.m_max, sweep.n_max);
    let mut total = 0usize;
    let mut failures = Vec::new();
    for space in &spaces {
        for b in enumerate_blocks_sl(space) {
            total += 1;
            let back = psi(&omega(&b), space);
            if back != b {
                failures.push(format!(
                    "m={} dims {:?}: block {:?} came back as {:?}",
                    space.modulus(),
                    space.dims(),
                    b,
                    back
                ));
            }
        }
    }
    Check::from_failures(
        "psi_omega_identity",
        failures,
        format!("Ψ(ω(b)) = b for all {total} blocks"),
    )
}

/// Ψ is total, lands in the block set, and is surjective onto it; its
/// fibers account for every pair.
pub fn check_psi_surjective(sweep: &Sweep) -> Check {
    let spaces = dim_sweep(1, sweep.m_max, sweep.n_max);
    let failures: Vec<String> = spaces
        .par_iter()
        .flat_map(|space| {
            let mut fails = Vec::new();
            let blocks: BTreeSet<BlockTriple> = enumerate_blocks_sl(space).into_iter().collect();
            let pairs = enumerate_pairs(space);
            let mut fibers: std::collections::BTreeMap<BlockTriple, usize> =
                std::collections::BTreeMap::new();
            for pair in &pairs {
                let b = psi(pair, space);
                if !b.satisfies_constraint(space) {
                    fails.push(format!(
                        "m={} dims {:?}: Ψ output violates the constraint",
                        space.modulus(),
                        space.dims()
                    ));
                }
                *fibers.entry(b).or_insert(0) += 1;
            }
            let image: BTreeSet<BlockTriple> = fibers.keys().cloned().collect();
            if image != blocks {
                fails.push(format!(
                    "m={} dims {:?}: image has {} blocks, census has {}",
                    space.modulus(),
                    space.dims(),
                    image.len(),
                    blocks.len()
                ));
            }
            if fibers.values().sum::<usize>() != pairs.len() {
                fails.push(format!(
                    "m={} dims {:?}: fibers lose pairs",
                    space.modulus(),
                    space.dims()
                ));
            }
            fails
        })
        .collect();
    Check::from_failures(
        "psi_surjective",
        failures,
        "Ψ total and surjective; fiber sizes sum to the pair count".into(),
    )
}

/// Every block is realized by its admissible grading: the spiral passes the
/// axioms, the chain quiver has n/d chains of exactly d vertices with head
/// multiset f, and ω's representative lies in the splitting layer l̃_1.
pub fn check_splitting_realization(sweep: &Sweep) -> Check {
    let spaces = dim_sweep(1, sweep.m_max, sweep.n_max);
    let failures: Vec<String> = spaces
        .par_iter()
        .flat_map(|space| {
            let mut fails = Vec::new();
            for b in enumerate_blocks_sl(space) {
                let name = || {
                    format!(
                        "m={} dims {:?} block (d={}, f={:?}, chi={})",
                        space.modulus(),
                        space.dims(),
                        b.d,
                        b.f,
                        b.chi
                    )
                };
                let mu = match admissible_grading_for_block(&b, space) {
                    Ok(mu) => mu,
                    Err(e) => {
                        fails.push(format!("{}: {e}", name()));
                        continue;
                    }
                };
                let s = Spiral::new(mu, 1);
                if !verify_spiral_axioms(&s).pass() {
                    fails.push(format!("{}: grading fails spiral axioms", name()));
                }
                let q = s.quiver();
                let n = space.total_dim();
                let mut heads: Vec<usize> =
                    (0..q.chains.len()).map(|c| q.chain_head_label(c)).collect();
                heads.sort_unstable();
                if q.chains.len() != n / b.d
                    || (0..q.chains.len()).any(|c| q.chain_len(c) != b.d)
                    || heads != b.f
                {
                    fails.push(format!("{}: quiver shape mismatch", name()));
                }
                match block_representative(&b, space) {
                    Ok(x) => {
                        if !s.split(1).contains(&x) {
                            fails.push(format!("{}: representative outside l̃_1", name()));
                        }
                        if chain_type_of(&x).ok().as_ref() != Some(&omega(&b).orbit) {
                            fails.push(format!("{}: representative has wrong orbit", name()));
                        }
                    }
                    Err(e) => fails.push(format!("{}: {e}", name())),
                }
            }
            fails
        })
        .collect();
    Check::from_failures(
        "splitting_realization",
        failures,
        "every block realized as a spiral splitting with its quiver shape".into(),
    )
}

/// Realized chain types over F_q match the combinatorial census.
pub fn check_census_oracle(n_max: usize, m_max: usize, fields: &[u32]) -> Check {
    let spaces = dim_sweep(1, m_max, n_max);
    let failures: Vec<String> = spaces
        .par_iter()
        .flat_map(|space| {
            let mut fails = Vec::new();
            let expected: BTreeSet<_> = enumerate_chain_types(space).into_iter().collect();
            for &q in fields {
                match realized_chain_types_fq(space, q) {
                    Ok(got) => {
                        if got != expected {
                            fails.push(format!(
                                "m={} dims {:?} over F_{q}: {} realized vs {} enumerated",
                                space.modulus(),
                                space.dims(),
                                got.len(),
                                expected.len()
                            ));
                        }
                    }
                    Err(e) => fails.push(format!(
                        "m={} dims {:?} over F_{q}: {e}",
                        space.modulus(),
                        space.dims()
                    )),
                }
            }
            fails
        })
        .collect();
    let detail = format!(
        "census equals brute force over F_q for {} spaces, q in {:?}",
        spaces.len(),
        fields
    );
    Check::from_failures("census_oracle", failures, detail)
}

/// Brute-force counts are reproducible.
pub fn check_oracle_determinism() -> Check {
    let space = GradedSpace::new(2, vec![1, 1]);
    let mut failures = Vec::new();
    for q in [2u32, 3] {
        let a = crate::oracle::count_nilpotents_fq(&space, q).unwrap();
        let b = crate::oracle::count_nilpotents_fq(&space, q).unwrap();
        if a != b {
            failures.push(format!("F_{q}: counts differ"));
        }
    }
    Check::from_failures(
        "oracle_determinism",
        failures,
        "repeated scans count identically".into(),
    )
}

/// Duality structure of symplectic chain quivers on seeded cocharacters:
/// at most two stable chains, everything else pairs off, and the zero
/// block is always present.
pub fn check_sp_duality(seed: u64, draws: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for t in 0..draws {
        let m = [2usize, 4][rng.gen_range(0..2)];
        let mut free: Vec<usize> = (0..m / 2).map(|_| rng.gen_range(0..=2)).collect();
        if free.iter().all(|&d| d == 0) {
            free[0] = 1;
        }
        let sd = SymplecticDims::from_free(m, free).expect("valid dims");
        let mu = random_sp_cocharacter(&sd, &mut rng);
        match sp_spiral_chains(&mu) {
            Ok(r) => {
                let stable = usize::from(r.q_prime.is_some()) + usize::from(r.q_dprime.is_some());
                if stable + 2 * r.dual_pairs.len() != r.chains.len() {
                    failures.push(format!("draw {t}: chains do not pair off"));
                }
                for (v, &w) in r.involution.iter().enumerate() {
                    if r.involution[w] != v {
                        failures.push(format!("draw {t}: involution not involutive"));
                        break;
                    }
                }
            }
            Err(e) => failures.push(format!("draw {t}: {e}")),
        }
        if !enumerate_blocks_sp(&sd).contains(&SpBlock {
            a_prime: 0,
            a_dprime: 0,
        }) {
            failures.push(format!("draw {t}: zero block missing"));
        }
    }
    Check::from_failures(
        "sp_chain_duality",
        failures,
        format!("{draws} seeded symplectic cocharacters pair off correctly"),
    )
}

pub fn suite_axioms(sweep: &Sweep) -> SuiteReport {
    SuiteReport {
        name: "axioms".into(),
        checks: vec![
            check_sl2_exactness(sweep.seed, 100),
            check_spiral_axioms_random(sweep, 50),
            check_spiral_axioms_canonical(sweep),
            check_phi_independence(sweep.seed, 20),
            check_ad_surjectivity(sweep),
            check_splitting_layers(sweep, 5),
            check_sp_duality(sweep.seed, 50),
        ],
    }
}

pub fn suite_census(sweep: &Sweep) -> SuiteReport {
    SuiteReport {
        name: "census".into(),
        checks: vec![
            check_census_roundtrip(sweep),
            check_chain_type_invariance(sweep, 5),
            check_fixture_cardinalities(),
        ],
    }
}

pub fn suite_psi_omega(sweep: &Sweep) -> SuiteReport {
    SuiteReport {
        name: "psi-omega".into(),
        checks: vec![
            check_psi_omega_identity(sweep),
            check_psi_surjective(sweep),
            check_splitting_realization(sweep),
        ],
    }
}

pub fn suite_oracle(sweep: &Sweep) -> SuiteReport {
    SuiteReport {
        name: "oracle".into(),
        checks: vec![
            check_census_oracle(sweep.n_max.min(3), sweep.m_max.min(3), &[2, 3]),
            check_oracle_determinism(),
        ],
    }
}

pub fn all_suites(sweep: &Sweep) -> Vec<SuiteReport> {
    vec![
        suite_axioms(sweep),
        suite_census(sweep),
        suite_psi_omega(sweep),
        suite_oracle(sweep),
    ]
}
