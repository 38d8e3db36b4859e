//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`). Every
//! comparison is exact; the stated runtime budgets are asserted.

use std::time::Instant;

use spirals::verify::{
    check_ad_surjectivity, check_census_oracle, check_fixture_cardinalities,
    check_phi_independence, check_psi_omega_identity, check_psi_surjective, check_sl2_exactness,
    check_sp_duality, check_spiral_axioms_canonical, check_spiral_axioms_random,
    check_splitting_realization, Check, Sweep,
};

const SEED: u64 = 42;

fn report(number: usize, name: &str, elapsed_s: f64, checks: &[&Check]) {
    let pass = checks.iter().all(|c| c.pass);
    println!(
        "criterion {number} ({name}): {} [{elapsed_s:.2}s]",
        if pass { "PASS" } else { "FAIL" }
    );
    for c in checks {
        if !c.pass {
            println!("  {} — {}", c.label, c.detail);
        }
    }
    assert!(pass, "criterion {number} failed");
}

#[test]
fn criterion_1_sl2_exactness() {
    let start = Instant::now();
    let check = check_sl2_exactness(SEED, 100);
    let elapsed = start.elapsed().as_secs_f64();
    report(1, "sl2 exactness", elapsed, &[&check]);
    assert!(elapsed < 10.0, "budget 10s exceeded: {elapsed:.2}s");
}

#[test]
fn criterion_2_spiral_axioms() {
    let sweep = Sweep {
        n_max: 4,
        m_max: 3,
        seed: SEED,
    };
    let start = Instant::now();
    let random = check_spiral_axioms_random(&sweep, 50);
    let canonical = check_spiral_axioms_canonical(&sweep);
    let elapsed = start.elapsed().as_secs_f64();
    report(2, "spiral axioms", elapsed, &[&random, &canonical]);
    assert!(elapsed < 30.0, "budget 30s exceeded: {elapsed:.2}s");
}

#[test]
fn criterion_3_phi_independence() {
    let start = Instant::now();
    let check = check_phi_independence(SEED, 20);
    report(
        3,
        "phi-independence",
        start.elapsed().as_secs_f64(),
        &[&check],
    );
}

#[test]
fn criterion_4_ad_surjectivity() {
    let sweep = Sweep {
        n_max: 4,
        m_max: 3,
        seed: SEED,
    };
    let start = Instant::now();
    let check = check_ad_surjectivity(&sweep);
    report(
        4,
        "ad-surjectivity",
        start.elapsed().as_secs_f64(),
        &[&check],
    );
}

#[test]
fn criterion_5_census_oracle() {
    let start = Instant::now();
    let check = check_census_oracle(3, 3, &[2, 3]);
    let elapsed = start.elapsed().as_secs_f64();
    report(5, "census vs finite-field oracle", elapsed, &[&check]);
    assert!(elapsed < 60.0, "budget 60s exceeded: {elapsed:.2}s");
}

#[test]
fn criterion_6_fixture_cardinalities() {
    let start = Instant::now();
    let check = check_fixture_cardinalities();
    let mut golden_ok = true;
    let cases: [(&str, &[&str]); 5] = [
        (
            "census_m2_d11.tsv",
            &["census", "--m", "2", "--dims", "1,1", "--format", "tsv"],
        ),
        (
            "census_m2_d21.tsv",
            &["census", "--m", "2", "--dims", "2,1", "--format", "tsv"],
        ),
        (
            "blocks_m2_d11.tsv",
            &["blocks", "--m", "2", "--dims", "1,1", "--format", "tsv"],
        ),
        (
            "blocks_m2_d21.tsv",
            &["blocks", "--m", "2", "--dims", "2,1", "--format", "tsv"],
        ),
        (
            "sp_blocks_m2_d11.json",
            &["blocks-sp", "--m", "2", "--dims", "1", "--format", "json"],
        ),
    ];
    for (file, args) in cases {
        let golden = std::fs::read_to_string(
            std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
                .join("tests/golden")
                .join(file),
        )
        .unwrap_or_else(|_| panic!("missing golden file {file}"));
        let mut buf = Vec::new();
        let mut full = vec!["spirals"];
        full.extend_from_slice(args);
        let code = spirals::cli::run_with_args(full, &mut buf);
        let got = String::from_utf8(buf).unwrap();
        if code != 0 || got != golden {
            println!("  golden mismatch for {file}:\n{got}");
            golden_ok = false;
        }
    }
    let golden_check = Check {
        label: "golden_files".into(),
        pass: golden_ok,
        detail: "frozen census/block tables match CLI output".into(),
    };
    report(
        6,
        "fixture cardinalities",
        start.elapsed().as_secs_f64(),
        &[&check, &golden_check],
    );
}

#[test]
fn criterion_7_psi_omega() {
    let sweep = Sweep {
        n_max: 5,
        m_max: 4,
        seed: SEED,
    };
    let start = Instant::now();
    let identity = check_psi_omega_identity(&sweep);
    let surjective = check_psi_surjective(&sweep);
    let elapsed = start.elapsed().as_secs_f64();
    report(
        7,
        "psi∘omega = id and surjectivity",
        elapsed,
        &[&identity, &surjective],
    );
    assert!(elapsed < 120.0, "budget 120s exceeded: {elapsed:.2}s");
}

#[test]
fn criterion_8_splitting_realization() {
    let sweep = Sweep {
        n_max: 5,
        m_max: 4,
        seed: SEED,
    };
    let start = Instant::now();
    let check = check_splitting_realization(&sweep);
    report(
        8,
        "blocks realized as spiral splittings",
        start.elapsed().as_secs_f64(),
        &[&check],
    );
}

#[test]
fn criterion_9_symplectic_duality() {
    let start = Instant::now();
    let check = check_sp_duality(SEED, 50);
    report(
        9,
        "symplectic chain duality",
        start.elapsed().as_secs_f64(),
        &[&check],
    );
}
